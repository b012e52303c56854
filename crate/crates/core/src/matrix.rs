//! Dense complex matrices, the tolerance policy, and a Hermitian eigensolver.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Comparison policy shared across the toolkit.
///
/// `zero` decides when an entry or a residual counts as zero; `degeneracy`
/// decides when two spectral quantities count as equal. Structure predicates
/// (Hermitian, diagonal, ...) compare absolute entry magnitudes against
/// `zero`; spectra and basis acceptance use `degeneracy`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    zero: f64,
    degeneracy: f64,
}

impl Tolerances {
    pub const DEFAULT_ZERO: f64 = 1e-10;
    pub const DEFAULT_DEGENERACY: f64 = 1e-8;

    /// Requires 0 < zero <= degeneracy, both finite.
    pub fn new(zero: f64, degeneracy: f64) -> Result<Self> {
        if !zero.is_finite() || !degeneracy.is_finite() || zero <= 0.0 {
            return Err(Error::Validation {
                field: "tolerances".into(),
                message: format!(
                    "tolerances must be finite and positive, got zero={zero}, degeneracy={degeneracy}"
                ),
            });
        }
        if degeneracy < zero {
            return Err(Error::Validation {
                field: "tolerances".into(),
                message: format!(
                    "degeneracy tolerance {degeneracy} must be at least the zero tolerance {zero}"
                ),
            });
        }
        Ok(Self { zero, degeneracy })
    }

    pub fn zero(&self) -> f64 {
        self.zero
    }

    pub fn degeneracy(&self) -> f64 {
        self.degeneracy
    }

    /// Built-in defaults, overridden by QCTRL_TOL_ZERO / QCTRL_TOL_DEGENERACY
    /// where those are set.
    pub fn from_env() -> Result<Self> {
        fn read(name: &str, default: f64) -> Result<f64> {
            match std::env::var(name) {
                Ok(s) => s.trim().parse::<f64>().map_err(|_| Error::Validation {
                    field: name.into(),
                    message: format!("expected a floating-point number, got {s:?}"),
                }),
                Err(_) => Ok(default),
            }
        }
        Self::new(
            read("QCTRL_TOL_ZERO", Self::DEFAULT_ZERO)?,
            read("QCTRL_TOL_DEGENERACY", Self::DEFAULT_DEGENERACY)?,
        )
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            zero: Self::DEFAULT_ZERO,
            degeneracy: Self::DEFAULT_DEGENERACY,
        }
    }
}

/// Square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.set(k, k, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (k, &e) in entries.iter().enumerate() {
            m.set(k, k, Complex64::new(e, 0.0));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "from_rows".into(),
                    details: format!("row {r} has {} entries, expected {dim}", row.len()),
                });
            }
            data.extend(row);
        }
        Ok(Self { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        let d = self.dim;
        self.data[r * d + c] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|k| self.get(k, k)).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r))
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for e in &mut out.data {
            *e *= s;
        }
        out
    }

    fn check_same_dim(&self, rhs: &Self, context: &str) -> Result<()> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                context: context.into(),
                details: format!("{}x{} vs {}x{}", self.dim, self.dim, rhs.dim, rhs.dim),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_dim(rhs, "add")?;
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x += y;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_dim(rhs, "sub")?;
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x -= y;
        }
        Ok(out)
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_dim(rhs, "matmul")?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let lhs_row = &mut out.data[r * n..(r + 1) * n];
                let rhs_row = &rhs.data[k * n..(k + 1) * n];
                for (o, b) in lhs_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.matmul(rhs)?.sub(&rhs.matmul(self)?)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "mul_vec".into(),
                details: format!("vector length {} vs matrix dimension {}", v.len(), self.dim),
            });
        }
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for r in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..n {
                acc += self.data[r * n + c] * v[c];
            }
            out[r] = acc;
        }
        Ok(out)
    }

    /// Hilbert-Schmidt inner product Tr(self† rhs).
    pub fn hs_inner(&self, rhs: &Self) -> Result<Complex64> {
        self.check_same_dim(rhs, "hs_inner")?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, b) in self.data.iter().zip(&rhs.data) {
            acc += a.conj() * b;
        }
        Ok(acc)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for r in 0..self.dim {
            for c in r..self.dim {
                dev = dev.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        dev
    }

    pub fn skew_hermitian_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for r in 0..self.dim {
            for c in r..self.dim {
                dev = dev.max((self.get(r, c) + self.get(c, r).conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: &Tolerances) -> bool {
        self.hermitian_deviation() <= tol.zero()
    }

    pub fn is_skew_hermitian(&self, tol: &Tolerances) -> bool {
        self.skew_hermitian_deviation() <= tol.zero()
    }

    pub fn is_diagonal(&self, tol: &Tolerances) -> bool {
        for r in 0..self.dim {
            for c in 0..self.dim {
                if r != c && self.get(r, c).norm() > tol.zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self, tol: &Tolerances) -> bool {
        self.max_abs_entry() <= tol.zero()
    }

    /// (a + a†)/2. Exactly Hermitian in floating point.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |r, c| {
            (self.get(r, c) + self.get(c, r).conj()) * 0.5
        })
    }

    /// (a − a†)/2. Exactly skew-Hermitian in floating point.
    pub fn skew_hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |r, c| {
            (self.get(r, c) - self.get(c, r).conj()) * 0.5
        })
    }

    /// a − (tr a / n) I.
    pub fn traceless_part(&self) -> Self {
        let n = self.dim;
        if n == 0 {
            return self.clone();
        }
        let shift = self.trace() / n as f64;
        let mut out = self.clone();
        for k in 0..n {
            let v = out.get(k, k);
            out.set(k, k, v - shift);
        }
        out
    }

    /// u · self · u†.
    pub fn conjugated_by(&self, u: &Self) -> Result<Self> {
        u.matmul(self)?.matmul(&u.adjoint())
    }

    /// v† · self · v, i.e. this operator expressed in the basis formed by
    /// the columns of v.
    pub fn in_basis(&self, v: &Self) -> Result<Self> {
        v.adjoint().matmul(self)?.matmul(v)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for r in 0..self.dim {
            write!(f, "  ")?;
            for c in 0..self.dim {
                let e = self.get(r, c);
                write!(f, "{:+.4}{:+.4}i  ", e.re, e.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigenvalues ascending; eigenvector k is column k of `eigenvectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigensystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigensystem {
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.eigenvectors.dim())
            .map(|r| self.eigenvectors.get(r, k))
            .collect()
    }
}

const MAX_JACOBI_SWEEPS: usize = 100;

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    let mut acc = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                acc += m.get(r, c).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// M <- M·U and V <- V·U for the plane rotation
/// U = [[phase·c, phase·s], [−s, c]] on columns (p, q).
fn apply_right(m: &mut ComplexMatrix, p: usize, q: usize, phase: Complex64, c: f64, s: f64) {
    let n = m.dim();
    for k in 0..n {
        let mkp = m.get(k, p);
        let mkq = m.get(k, q);
        m.set(k, p, mkp * (phase * c) - mkq * s);
        m.set(k, q, mkp * (phase * s) + mkq * c);
    }
}

/// M <- U†·M for the same rotation, acting on rows (p, q).
fn apply_left_adjoint(m: &mut ComplexMatrix, p: usize, q: usize, phase: Complex64, c: f64, s: f64) {
    let n = m.dim();
    let pc = phase.conj();
    for k in 0..n {
        let mpk = m.get(p, k);
        let mqk = m.get(q, k);
        m.set(p, k, mpk * (pc * c) - mqk * s);
        m.set(q, k, mpk * (pc * s) + mqk * c);
    }
}

/// Cyclic complex Jacobi diagonalization. The input must be Hermitian within
/// `tol.zero()`; the working copy is symmetrized first so rotations see an
/// exactly Hermitian matrix.
pub fn hermitian_eigensystem(a: &ComplexMatrix, tol: &Tolerances) -> Result<HermitianEigensystem> {
    let n = a.dim();
    let dev = a.hermitian_deviation();
    if dev > tol.zero() {
        return Err(Error::NotHermitian {
            context: "eigensolver input".into(),
            deviation: dev,
        });
    }
    if n == 0 {
        return Ok(HermitianEigensystem {
            eigenvalues: vec![],
            eigenvectors: ComplexMatrix::zeros(0),
        });
    }

    let scale = a.frobenius_norm().max(1.0);
    let mut m = a.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let mut sweeps = 0;
    loop {
        if off_diagonal_norm(&m) <= 1e-14 * scale {
            break;
        }
        if sweeps == MAX_JACOBI_SWEEPS {
            return Err(Error::EigenConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                let r = apq.norm();
                if r <= 1e-20 * scale {
                    continue;
                }
                let phase = apq / r;
                let app = m.get(p, p).re;
                let aqq = m.get(q, q).re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                apply_right(&mut m, p, q, phase, c, s);
                apply_left_adjoint(&mut m, p, q, phase, c, s);
                apply_right(&mut v, p, q, phase, c, s);
                // The rotation is built to annihilate this pair; pin it to
                // keep the Hermitian invariant exact.
                m.set(p, q, Complex64::new(0.0, 0.0));
                m.set(q, p, Complex64::new(0.0, 0.0));
                let mpp = m.get(p, p);
                let mqq = m.get(q, q);
                m.set(p, p, Complex64::new(mpp.re, 0.0));
                m.set(q, q, Complex64::new(mqq.re, 0.0));
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m.get(i, i)
            .re
            .partial_cmp(&m.get(j, j).re)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&k| m.get(k, k).re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |r, c| v.get(r, order[c]));
    Ok(HermitianEigensystem {
        eigenvalues,
        eigenvectors,
    })
}

// ---- complex vector helpers shared by the criteria modules ----

pub(crate) fn vec_inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn vec_norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn vec_scale(a: &[Complex64], s: Complex64) -> Vec<Complex64> {
    a.iter().map(|x| x * s).collect()
}

/// Modified Gram-Schmidt with a re-orthogonalization pass; vectors whose
/// residual falls below `drop_tol` are discarded.
pub(crate) fn orthonormalize(vectors: &[Vec<Complex64>], drop_tol: f64) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for v in vectors {
        let mut r = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = vec_inner(b, &r);
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
        }
        let norm = vec_norm(&r);
        if norm > drop_tol {
            basis.push(vec_scale(&r, Complex64::new(1.0 / norm, 0.0)));
        }
    }
    basis
}

/// Kernel of the linear map sending canonical basis vector k to `images[k]`,
/// detected through the Gram matrix spectrum. A direction belongs to the
/// kernel when its singular value is at most `rel_tol` times the largest
/// one; a map that is zero altogether has a full kernel. Returns orthonormal
/// coefficient vectors ordered from smallest singular value upward.
pub(crate) fn gram_kernel(
    images: &[Vec<Complex64>],
    rel_tol: f64,
    tol: &Tolerances,
) -> Result<Vec<Vec<Complex64>>> {
    let b = images.len();
    let mut g = ComplexMatrix::zeros(b);
    for i in 0..b {
        for j in i..b {
            let x = vec_inner(&images[i], &images[j]);
            g.set(i, j, x);
            if j != i {
                g.set(j, i, x.conj());
            }
        }
    }
    let eig = hermitian_eigensystem(&g.hermitian_part(), tol)?;
    let singular_values: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&l| l.max(0.0).sqrt())
        .collect();
    let smax = singular_values.last().copied().unwrap_or(0.0);
    let cut = if smax > 0.0 { rel_tol * smax } else { f64::INFINITY };
    let mut kernel = Vec::new();
    for (k, &s) in singular_values.iter().enumerate() {
        if s <= cut {
            kernel.push(eig.eigenvector(k));
        }
    }
    Ok(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tolerance_invariants_enforced() {
        assert!(Tolerances::new(1e-10, 1e-8).is_ok());
        assert!(Tolerances::new(1e-8, 1e-8).is_ok());
        assert!(Tolerances::new(0.0, 1e-8).is_err());
        assert!(Tolerances::new(-1e-10, 1e-8).is_err());
        assert!(Tolerances::new(1e-6, 1e-8).is_err());
        assert!(Tolerances::new(f64::NAN, 1e-8).is_err());
    }

    #[test]
    fn commutator_of_paulis() {
        let sx = ComplexMatrix::from_rows(vec![vec![c(0., 0.), c(1., 0.)], vec![
            c(1., 0.),
            c(0., 0.),
        ]])
        .unwrap();
        let sz = ComplexMatrix::diagonal(&[1.0, -1.0]);
        // [sz, sx] = 2i sy
        let comm = sz.commutator(&sx).unwrap();
        let expected = ComplexMatrix::from_rows(vec![
            vec![c(0., 0.), c(2., 0.)],
            vec![c(-2., 0.), c(0., 0.)],
        ])
        .unwrap();
        assert!(comm.sub(&expected).unwrap().frobenius_norm() < 1e-15);
    }

    #[test]
    fn structure_predicates() {
        let tol = Tolerances::default();
        let h = ComplexMatrix::from_rows(vec![
            vec![c(1., 0.), c(0., 1.)],
            vec![c(0., -1.), c(2., 0.)],
        ])
        .unwrap();
        assert!(h.is_hermitian(&tol));
        assert!(!h.is_skew_hermitian(&tol));
        assert!(h.scaled(Complex64::i()).is_skew_hermitian(&tol));
        assert!(!h.is_diagonal(&tol));
        assert!(ComplexMatrix::diagonal(&[1.0, 2.0]).is_diagonal(&tol));
        assert!((h.traceless_part().trace().norm()) < 1e-15);
    }

    #[test]
    fn eigensystem_of_diagonal_matrix_sorts_ascending() {
        let tol = Tolerances::default();
        let m = ComplexMatrix::diagonal(&[3.0, -1.0, 2.0]);
        let eig = hermitian_eigensystem(&m, &tol).unwrap();
        assert_eq!(eig.eigenvalues, vec![-1.0, 2.0, 3.0]);
        // eigenvector of -1 is e2
        let v = eig.eigenvector(0);
        assert!((v[1].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigensystem_of_pauli_x() {
        let tol = Tolerances::default();
        let sx = ComplexMatrix::from_rows(vec![vec![c(0., 0.), c(1., 0.)], vec![
            c(1., 0.),
            c(0., 0.),
        ]])
        .unwrap();
        let eig = hermitian_eigensystem(&sx, &tol).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-12);
        for k in 0..2 {
            let v = eig.eigenvector(k);
            let mv = sx.mul_vec(&v).unwrap();
            let lv = vec_scale(&v, c(eig.eigenvalues[k], 0.0));
            let diff: f64 = mv
                .iter()
                .zip(&lv)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(diff < 1e-12);
        }
    }

    #[test]
    fn eigensystem_reconstructs_complex_hermitian() {
        let tol = Tolerances::default();
        let n = 5;
        // deterministic complex Hermitian test matrix
        let raw = ComplexMatrix::from_fn(n, |r, c_| {
            Complex64::new(
                ((r * 7 + c_ * 3) % 11) as f64 - 5.0,
                ((r * 5 + c_ * 2) % 7) as f64 - 3.0,
            )
        });
        let h = raw.hermitian_part();
        let eig = hermitian_eigensystem(&h, &tol).unwrap();
        let v = &eig.eigenvectors;
        // unitarity
        let vv = v.adjoint().matmul(v).unwrap();
        assert!(
            vv.sub(&ComplexMatrix::identity(n)).unwrap().max_abs_entry() < 1e-12,
            "eigenvector matrix is not unitary"
        );
        // reconstruction
        let d = ComplexMatrix::diagonal(&eig.eigenvalues);
        let rec = v.matmul(&d).unwrap().matmul(&v.adjoint()).unwrap();
        let err = rec.sub(&h).unwrap().frobenius_norm();
        assert!(err < 1e-9 * h.frobenius_norm().max(1.0), "error {err}");
    }

    #[test]
    fn eigensolver_rejects_non_hermitian() {
        let tol = Tolerances::default();
        let m = ComplexMatrix::from_rows(vec![vec![c(0., 0.), c(1., 0.)], vec![
            c(0., 0.),
            c(0., 0.),
        ]])
        .unwrap();
        assert!(matches!(
            hermitian_eigensystem(&m, &tol),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn gram_kernel_finds_nullspace() {
        let tol = Tolerances::default();
        // map C^3 -> C^2: e1 -> (1,0), e2 -> (0,1), e3 -> (1,1); kernel = span(1,1,-1)
        let images = vec![
            vec![c(1., 0.), c(0., 0.)],
            vec![c(0., 0.), c(1., 0.)],
            vec![c(1., 0.), c(1., 0.)],
        ];
        let kernel = gram_kernel(&images, 1e-8, &tol).unwrap();
        assert_eq!(kernel.len(), 1);
        let k = &kernel[0];
        // proportional to (1,1,-1)/sqrt(3)
        let target = [c(1., 0.), c(1., 0.), c(-1., 0.)];
        let overlap = vec_inner(&target.to_vec(), k).norm();
        assert!((overlap - 3f64.sqrt()).abs() < 1e-10, "overlap {overlap}");
    }

    #[test]
    fn gram_kernel_of_zero_map_is_everything() {
        let tol = Tolerances::default();
        let images = vec![vec![c(0., 0.); 2]; 3];
        let kernel = gram_kernel(&images, 1e-8, &tol).unwrap();
        assert_eq!(kernel.len(), 3);
    }

    #[test]
    fn orthonormalize_drops_dependent_vectors() {
        let vs = vec![
            vec![c(2., 0.), c(0., 0.)],
            vec![c(1., 0.), c(1., 0.)],
            vec![c(3., 0.), c(1., 0.)],
        ];
        let basis = orthonormalize(&vs, 1e-10);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!((vec_norm(b) - 1.0).abs() < 1e-12);
        }
        assert!(vec_inner(&basis[0], &basis[1]).norm() < 1e-12);
    }
}
