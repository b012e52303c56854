//! Dynamical Lie algebra closure and classification.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{gram_kernel, hermitian_eigensystem, ComplexMatrix, Tolerances};

/// Orthonormal (Frobenius) basis of a real Lie algebra of skew-Hermitian
/// matrices.
#[derive(Debug, Clone)]
pub struct LieAlgebraBasis {
    matrix_dim: usize,
    elements: Vec<ComplexMatrix>,
}

impl LieAlgebraBasis {
    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    /// Real dimension of the algebra.
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    /// Norm of the component of m/‖m‖ outside the real span of the basis.
    /// Meaningful for skew-Hermitian m, where Hilbert-Schmidt inner products
    /// with the basis are real.
    pub fn residual_outside(&self, m: &ComplexMatrix) -> Result<f64> {
        let norm = m.frobenius_norm();
        if norm == 0.0 {
            return Ok(0.0);
        }
        let mut r = m.scaled(Complex64::new(1.0 / norm, 0.0));
        for _ in 0..2 {
            for b in &self.elements {
                let c = b.hs_inner(&r)?.re;
                if c != 0.0 {
                    r = r.sub(&b.scaled(Complex64::new(c, 0.0)))?;
                }
            }
        }
        Ok(r.frobenius_norm())
    }

    pub fn contains(&self, m: &ComplexMatrix, tol: &Tolerances) -> Result<bool> {
        Ok(self.residual_outside(m)? <= tol.degeneracy())
    }

    /// Whether i·I lies in the algebra.
    pub fn contains_identity_direction(&self, tol: &Tolerances) -> Result<bool> {
        let ii = ComplexMatrix::identity(self.matrix_dim).scaled(Complex64::i());
        self.contains(&ii, tol)
    }
}

/// Insert m into the orthonormal basis if its normalized residual clears the
/// degeneracy tolerance. The stored element is re-skew-Hermitized so roundoff
/// cannot drift the basis out of the Lie algebra of the unitary group.
fn try_insert(m: &ComplexMatrix, basis: &mut Vec<ComplexMatrix>, tol: &Tolerances) -> Result<bool> {
    let norm = m.frobenius_norm();
    if norm <= tol.zero() {
        return Ok(false);
    }
    let mut r = m.scaled(Complex64::new(1.0 / norm, 0.0));
    for _ in 0..2 {
        for b in basis.iter() {
            let c = b.hs_inner(&r)?.re;
            if c != 0.0 {
                r = r.sub(&b.scaled(Complex64::new(c, 0.0)))?;
            }
        }
    }
    let residual = r.frobenius_norm();
    if residual <= tol.degeneracy() {
        return Ok(false);
    }
    let skew = r.skew_hermitian_part();
    let skew_norm = skew.frobenius_norm();
    if skew_norm <= tol.zero() {
        return Ok(false);
    }
    // Normalizing a barely-accepted residual amplifies the projection
    // roundoff by 1/residual; strip the amplified in-span component with
    // another projection pass at unit scale, then renormalize.
    let mut unit = skew.scaled(Complex64::new(1.0 / skew_norm, 0.0));
    for _ in 0..2 {
        for b in basis.iter() {
            let c = b.hs_inner(&unit)?.re;
            if c != 0.0 {
                unit = unit.sub(&b.scaled(Complex64::new(c, 0.0)))?;
            }
        }
    }
    let clean = unit.skew_hermitian_part();
    let clean_norm = clean.frobenius_norm();
    if clean_norm <= tol.zero() {
        return Ok(false);
    }
    basis.push(clean.scaled(Complex64::new(1.0 / clean_norm, 0.0)));
    Ok(true)
}

/// Smallest real Lie algebra containing the given skew-Hermitian generators:
/// breadth-first commutator saturation with Gram-Schmidt acceptance, capped
/// at the full dimension n².
pub fn lie_closure(generators: &[ComplexMatrix], tol: &Tolerances) -> Result<LieAlgebraBasis> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = generators[0].dim();
    for (k, g) in generators.iter().enumerate() {
        if g.dim() != n {
            return Err(Error::DimensionMismatch {
                context: "lie_closure".into(),
                details: format!("generator {k} is {}x{}, expected {n}x{n}", g.dim(), g.dim()),
            });
        }
        let dev = g.skew_hermitian_deviation();
        if dev > tol.zero() {
            return Err(Error::NotSkewHermitian {
                index: k,
                deviation: dev,
            });
        }
    }

    let cap = n * n;
    let mut basis: Vec<ComplexMatrix> = Vec::new();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for g in generators {
        if try_insert(g, &mut basis, tol)? {
            let k = basis.len() - 1;
            for j in 0..k {
                queue.push((j, k));
            }
        }
    }
    let mut head = 0;
    while head < queue.len() && basis.len() < cap {
        let (i, j) = queue[head];
        head += 1;
        let c = basis[i].commutator(&basis[j])?;
        if try_insert(&c, &mut basis, tol)? {
            let k = basis.len() - 1;
            for jj in 0..k {
                queue.push((jj, k));
            }
        }
    }
    Ok(LieAlgebraBasis {
        matrix_dim: n,
        elements: basis,
    })
}

/// Conjugation class of the dynamical Lie algebra, as far as the dimension
/// ladder and invariant-form tests can see.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraClass {
    /// u(n): everything is reachable.
    FullUnitary { n: usize },
    /// su(n): everything up to global phase.
    SpecialUnitary { n: usize },
    /// sp(rank) embedded in su(2·rank).
    Symplectic { rank: usize },
    /// sp(rank) plus the identity direction.
    SymplecticPlusU1 { rank: usize },
    /// An algebra of so-type: admits a nondegenerate symmetric invariant form.
    OrthogonalType { n: usize },
    /// None of the recognized classes.
    Other,
    /// Classification was not attempted or could not finish.
    Unknown,
}

impl AlgebraClass {
    pub fn label(&self) -> String {
        match self {
            AlgebraClass::FullUnitary { n } => format!("u({n})"),
            AlgebraClass::SpecialUnitary { n } => format!("su({n})"),
            AlgebraClass::Symplectic { rank } => format!("sp({rank})"),
            AlgebraClass::SymplecticPlusU1 { rank } => format!("sp({rank})+u(1)"),
            AlgebraClass::OrthogonalType { n } => format!("so_type({n})"),
            AlgebraClass::Other => "other".into(),
            AlgebraClass::Unknown => "unknown".into(),
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Symmetric,
    Antisymmetric,
}

/// A matrix J with Xᵀ·J + J·X ≈ 0 for every basis element X (or every
/// traceless part), normalized to unit Frobenius norm.
#[derive(Debug, Clone)]
pub struct InvariantForm {
    pub kind: FormKind,
    pub matrix: ComplexMatrix,
    pub nondegenerate: bool,
    /// Worst-case norm of Xᵀ·J + J·X over the basis.
    pub residual: f64,
}

/// Search for an invariant bilinear form of the given symmetry kind: a J in
/// the joint kernel of X ↦ Xᵀ·J + J·X whose symmetric (or antisymmetric)
/// part is the whole of J. The defining map commutes with transposition, so
/// projecting a kernel element onto either symmetry class stays inside the
/// kernel; the search projects every kernel direction and keeps the most
/// nondegenerate candidate. Mixing kernel directions is not attempted, which
/// keeps this a heuristic; for the classical algebras the kernel is a single
/// line and the heuristic is exact.
pub fn find_invariant_bilinear_form(
    basis: &LieAlgebraBasis,
    kind: FormKind,
    on_traceless_parts: bool,
    tol: &Tolerances,
) -> Result<Option<InvariantForm>> {
    let n = basis.matrix_dim();
    if n == 0 || basis.dimension() == 0 {
        return Ok(None);
    }
    let xs: Vec<ComplexMatrix> = basis
        .elements()
        .iter()
        .map(|b| {
            if on_traceless_parts {
                b.traceless_part()
            } else {
                b.clone()
            }
        })
        .collect();
    let xts: Vec<ComplexMatrix> = xs.iter().map(ComplexMatrix::transpose).collect();

    let mut images: Vec<Vec<Complex64>> = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut e = ComplexMatrix::zeros(n);
            e.set(r, c, Complex64::new(1.0, 0.0));
            let mut w = Vec::with_capacity(xs.len() * n * n);
            for (x, xt) in xs.iter().zip(&xts) {
                let img = xt.matmul(&e)?.add(&e.matmul(x)?)?;
                w.extend_from_slice(img.entries());
            }
            images.push(w);
        }
    }

    // The closure basis carries roundoff well above machine precision, so the
    // kernel cut is looser than the degeneracy tolerance. For the classical
    // algebras the smallest non-kernel singular value is of order sigma_max,
    // leaving this cut orders of magnitude of margin on both sides.
    let kernel = gram_kernel(&images, tol.degeneracy().sqrt(), tol)?;

    let half = Complex64::new(0.5, 0.0);
    let mut best: Option<(f64, ComplexMatrix)> = None;
    for coeffs in &kernel {
        let mut j = ComplexMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                j.set(r, c, coeffs[r * n + c]);
            }
        }
        let part = match kind {
            FormKind::Symmetric => j.add(&j.transpose())?.scaled(half),
            FormKind::Antisymmetric => j.sub(&j.transpose())?.scaled(half),
        };
        let fnorm = part.frobenius_norm();
        if fnorm <= tol.zero() {
            continue;
        }
        let form = part.scaled(Complex64::new(1.0 / fnorm, 0.0));
        // The form has unit Frobenius norm, so nondegeneracy is a relative
        // statement about its smallest singular value.
        let jj = form.adjoint().matmul(&form)?;
        let eig = hermitian_eigensystem(&jj, tol)?;
        let smin = eig
            .eigenvalues
            .first()
            .copied()
            .unwrap_or(0.0)
            .max(0.0)
            .sqrt();
        if best.as_ref().is_none_or(|(s, _)| smin > *s) {
            best = Some((smin, form));
        }
    }
    let Some((smin, form)) = best else {
        return Ok(None);
    };

    let mut residual = 0.0f64;
    for (x, xt) in xs.iter().zip(&xts) {
        residual = residual.max(xt.matmul(&form)?.add(&form.matmul(x)?)?.frobenius_norm());
    }
    Ok(Some(InvariantForm {
        kind,
        matrix: form,
        nondegenerate: smin > tol.degeneracy(),
        residual,
    }))
}

#[derive(Debug, Clone)]
pub struct AlgebraClassification {
    pub class: AlgebraClass,
    pub invariant_form: Option<InvariantForm>,
    /// Largest |trace| over the basis elements (unit Frobenius each).
    pub max_trace: f64,
    pub has_identity_direction: bool,
}

/// Decide the algebra class from the closure basis: full dimension, then
/// traceless codimension one, then the symplectic dimensions (with and
/// without the identity direction), then the orthogonal dimension, each
/// confirmed by the matching invariant form where one is required.
pub fn classify_algebra(
    basis: &LieAlgebraBasis,
    tol: &Tolerances,
) -> Result<AlgebraClassification> {
    let n = basis.matrix_dim();
    let d = basis.dimension();
    let max_trace = basis
        .elements()
        .iter()
        .map(|b| b.trace().norm())
        .fold(0.0, f64::max);
    let traceless = max_trace <= tol.degeneracy();
    let has_identity_direction = basis.contains_identity_direction(tol)?;

    let done = |class: AlgebraClass, form: Option<InvariantForm>| {
        Ok(AlgebraClassification {
            class,
            invariant_form: form,
            max_trace,
            has_identity_direction,
        })
    };

    if d == n * n {
        return done(AlgebraClass::FullUnitary { n }, None);
    }
    if n >= 1 && d == n * n - 1 && traceless {
        return done(AlgebraClass::SpecialUnitary { n }, None);
    }
    if n % 2 == 0 && n > 0 {
        let rank = n / 2;
        let sp_dim = rank * (2 * rank + 1);
        if d == sp_dim {
            if let Some(form) =
                find_invariant_bilinear_form(basis, FormKind::Antisymmetric, true, tol)?
            {
                if form.nondegenerate {
                    return done(AlgebraClass::Symplectic { rank }, Some(form));
                }
            }
        }
        if d == sp_dim + 1 && has_identity_direction {
            if let Some(form) =
                find_invariant_bilinear_form(basis, FormKind::Antisymmetric, true, tol)?
            {
                if form.nondegenerate {
                    return done(AlgebraClass::SymplecticPlusU1 { rank }, Some(form));
                }
            }
        }
    }
    if n >= 2 && d == n * (n - 1) / 2 {
        if let Some(form) = find_invariant_bilinear_form(basis, FormKind::Symmetric, false, tol)? {
            if form.nondegenerate {
                return done(AlgebraClass::OrthogonalType { n }, Some(form));
            }
        }
    }

    // Unclassified: still report any invariant form as evidence, trying the
    // raw elements first and the traceless parts second.
    let mut form = None;
    for (kind, on_traceless) in [
        (FormKind::Symmetric, false),
        (FormKind::Antisymmetric, false),
        (FormKind::Symmetric, true),
        (FormKind::Antisymmetric, true),
    ] {
        form = find_invariant_bilinear_form(basis, kind, on_traceless, tol)?;
        if form.is_some() {
            break;
        }
    }
    done(AlgebraClass::Other, form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn pauli_basis() -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
        let c = Complex64::new;
        let sx = ComplexMatrix::from_rows(vec![
            vec![c(0., 0.), c(1., 0.)],
            vec![c(1., 0.), c(0., 0.)],
        ])
        .unwrap();
        let sy = ComplexMatrix::from_rows(vec![
            vec![c(0., 0.), c(0., -1.)],
            vec![c(0., 1.), c(0., 0.)],
        ])
        .unwrap();
        let sz = ComplexMatrix::diagonal(&[1.0, -1.0]);
        (sx, sy, sz)
    }

    fn generators(hs: &[&ComplexMatrix]) -> Vec<ComplexMatrix> {
        hs.iter().map(|h| h.scaled(Complex64::i())).collect()
    }

    #[test]
    fn su2_closure_and_class() {
        let (sx, _, sz) = pauli_basis();
        let basis = lie_closure(&generators(&[&sz, &sx]), &tol()).unwrap();
        assert_eq!(basis.dimension(), 3);
        assert!(!basis.contains_identity_direction(&tol()).unwrap());
        let cls = classify_algebra(&basis, &tol()).unwrap();
        assert_eq!(cls.class, AlgebraClass::SpecialUnitary { n: 2 });
    }

    #[test]
    fn u2_closure_and_class() {
        let (sx, _, sz) = pauli_basis();
        let id = ComplexMatrix::identity(2);
        let basis = lie_closure(&generators(&[&sz, &sx, &id]), &tol()).unwrap();
        assert_eq!(basis.dimension(), 4);
        assert!(basis.contains_identity_direction(&tol()).unwrap());
        let cls = classify_algebra(&basis, &tol()).unwrap();
        assert_eq!(cls.class, AlgebraClass::FullUnitary { n: 2 });
    }

    #[test]
    fn abelian_sigma_z_is_so_type_two() {
        let (_, _, sz) = pauli_basis();
        let basis = lie_closure(&generators(&[&sz]), &tol()).unwrap();
        assert_eq!(basis.dimension(), 1);
        let cls = classify_algebra(&basis, &tol()).unwrap();
        assert_eq!(cls.class, AlgebraClass::OrthogonalType { n: 2 });
        let form = cls.invariant_form.unwrap();
        assert_eq!(form.kind, FormKind::Symmetric);
        assert!(form.nondegenerate);
    }

    #[test]
    fn identity_alone_is_other() {
        let id = ComplexMatrix::identity(2);
        let basis = lie_closure(&generators(&[&id]), &tol()).unwrap();
        assert_eq!(basis.dimension(), 1);
        let cls = classify_algebra(&basis, &tol()).unwrap();
        assert_eq!(cls.class, AlgebraClass::Other);
    }

    #[test]
    fn closure_rejects_non_skew_generators() {
        let (sx, ..) = pauli_basis();
        // Hermitian, not skew-Hermitian
        assert!(matches!(
            lie_closure(&[sx], &tol()),
            Err(Error::NotSkewHermitian { index: 0, .. })
        ));
    }

    #[test]
    fn closure_of_empty_list_fails() {
        assert!(matches!(
            lie_closure(&[], &tol()),
            Err(Error::EmptyGenerators)
        ));
    }

    #[test]
    fn basis_is_orthonormal_and_skew() {
        let (sx, sy, sz) = pauli_basis();
        let basis = lie_closure(&generators(&[&sz, &sx, &sy]), &tol()).unwrap();
        for (i, a) in basis.elements().iter().enumerate() {
            assert!(a.skew_hermitian_deviation() < 1e-14);
            for (j, b) in basis.elements().iter().enumerate() {
                let ip = a.hs_inner(b).unwrap();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (ip.re - expected).abs() < 1e-12 && ip.im.abs() < 1e-12,
                    "basis not orthonormal at ({i},{j}): {ip}"
                );
            }
        }
    }
}
