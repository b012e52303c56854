//! Exact-arithmetic commutator closure over the Gaussian rationals.
//!
//! This crate exists for one purpose: computing dynamical Lie algebra
//! dimensions with no floating point and no tolerances, so the test suites
//! can pin down what the f64 engine must reproduce. It shares no code with
//! the main engine.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use num::Complex;

pub type Rat = BigRational;
pub type CRat = Complex<Rat>;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn czero() -> CRat {
    Complex::new(Rat::zero(), Rat::zero())
}

fn creal(x: Rat) -> CRat {
    Complex::new(x, Rat::zero())
}

/// Square matrix over the Gaussian rationals, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<CRat>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![czero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.set(k, k, creal(Rat::one()));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, r: usize, c: usize) -> &CRat {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CRat) {
        let d = self.dim;
        self.entries[r * d + c] = v;
    }

    /// Multiplication by the imaginary unit.
    pub fn times_i(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            let re = e.re.clone();
            let im = e.im.clone();
            e.re = -im;
            e.im = re;
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.entry(r, k);
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.entry(k, c);
                    if b.re.is_zero() && b.im.is_zero() {
                        continue;
                    }
                    let cur = out.entry(r, c).clone();
                    out.set(r, c, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        let ab = self.mul(rhs);
        let ba = rhs.mul(self);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, ab.entry(r, c).clone() - ba.entry(r, c).clone());
            }
        }
        out
    }

    /// Real and imaginary parts stacked into one rational vector, so real
    /// linear spans of complex matrices become plain rational row spaces.
    fn vectorize(&self) -> Vec<Rat> {
        let mut v = Vec::with_capacity(2 * self.entries.len());
        for e in &self.entries {
            v.push(e.re.clone());
        }
        for e in &self.entries {
            v.push(e.im.clone());
        }
        v
    }
}

/// Row space over the rationals kept in reduced echelon form: each row is
/// normalized to pivot 1 and its pivot column is cleared in all other rows,
/// so membership reduction works in any row order.
struct RationalSpan {
    width: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RationalSpan {
    fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= f.clone() * y.clone();
                }
            }
        }
    }

    /// Returns true when v enlarges the span.
    fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].clone();
        for x in &mut v {
            if !x.is_zero() {
                *x = x.clone() / inv.clone();
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureSummary {
    /// Real dimension of the closure as a Lie algebra over the reals.
    pub dimension: usize,
    /// Whether i·I lies in the closure.
    pub contains_identity_direction: bool,
}

/// Smallest real Lie algebra containing the given matrices, by breadth-first
/// commutator saturation with exact rank tracking.
pub fn lie_closure(generators: &[ExactMatrix]) -> ClosureSummary {
    assert!(!generators.is_empty(), "no generators");
    let n = generators[0].dim();
    let cap = n * n;
    let mut span = RationalSpan::new(2 * n * n);
    let mut elems: Vec<ExactMatrix> = Vec::new();
    let mut queue: Vec<(usize, usize)> = Vec::new();

    for g in generators {
        assert_eq!(g.dim(), n, "generator dimension mismatch");
        if span.insert(g.vectorize()) {
            let k = elems.len();
            elems.push(g.clone());
            for j in 0..k {
                queue.push((j, k));
            }
        }
    }

    let mut head = 0;
    while head < queue.len() && span.dim() < cap {
        let (i, j) = queue[head];
        head += 1;
        let c = elems[i].commutator(&elems[j]);
        if span.insert(c.vectorize()) {
            let k = elems.len();
            elems.push(c);
            for jj in 0..k {
                queue.push((jj, k));
            }
        }
    }

    let i_identity = ExactMatrix::identity(n).times_i();
    ClosureSummary {
        dimension: span.dim(),
        contains_identity_direction: span.contains(&i_identity.vectorize()),
    }
}

/// The generators i·H_0, i·H_1, ... of the dynamical Lie algebra.
pub fn hamiltonian_generators(hamiltonians: &[ExactMatrix]) -> Vec<ExactMatrix> {
    hamiltonians.iter().map(ExactMatrix::times_i).collect()
}

/// H0 = diag(energies); H1 = nearest-neighbor couplings d_n on the
/// off-diagonals. Panics unless |dipoles| = |energies| - 1.
pub fn chain_system(energies: &[Rat], dipoles: &[Rat]) -> (ExactMatrix, ExactMatrix) {
    assert_eq!(dipoles.len() + 1, energies.len(), "length mismatch");
    let n = energies.len();
    let mut h0 = ExactMatrix::zeros(n);
    for (k, e) in energies.iter().enumerate() {
        h0.set(k, k, creal(e.clone()));
    }
    let mut h1 = ExactMatrix::zeros(n);
    for (k, d) in dipoles.iter().enumerate() {
        h1.set(k, k + 1, creal(d.clone()));
        h1.set(k + 1, k, creal(d.clone()));
    }
    (h0, h1)
}

/// Three-level lambda configuration: H0 = diag(e1, e2, e1); the control
/// couples levels 1-2 and 2-3 with equal strength d.
pub fn lambda_system(e1: Rat, e2: Rat, d: Rat) -> (ExactMatrix, ExactMatrix) {
    let mut h0 = ExactMatrix::zeros(3);
    h0.set(0, 0, creal(e1.clone()));
    h0.set(1, 1, creal(e2));
    h0.set(2, 2, creal(e1));
    let mut h1 = ExactMatrix::zeros(3);
    h1.set(0, 1, creal(d.clone()));
    h1.set(1, 0, creal(d.clone()));
    h1.set(1, 2, creal(d.clone()));
    h1.set(2, 1, creal(d));
    (h0, h1)
}

/// Closure of the control system with drift h0 and the given controls.
pub fn system_closure(h0: &ExactMatrix, controls: &[&ExactMatrix]) -> ClosureSummary {
    let mut hs = vec![h0.clone()];
    hs.extend(controls.iter().map(|c| (*c).clone()));
    lie_closure(&hamiltonian_generators(&hs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pauli_x() -> ExactMatrix {
        let mut m = ExactMatrix::zeros(2);
        m.set(0, 1, creal(rat(1)));
        m.set(1, 0, creal(rat(1)));
        m
    }

    fn pauli_z() -> ExactMatrix {
        let mut m = ExactMatrix::zeros(2);
        m.set(0, 0, creal(rat(1)));
        m.set(1, 1, creal(rat(-1)));
        m
    }

    #[test]
    fn su2_from_two_traceless_generators() {
        let s = system_closure(&pauli_z(), &[&pauli_x()]);
        assert_eq!(s.dimension, 3);
        assert!(!s.contains_identity_direction);
    }

    #[test]
    fn u2_once_identity_joins() {
        let gens = hamiltonian_generators(&[pauli_z(), pauli_x(), ExactMatrix::identity(2)]);
        let s = lie_closure(&gens);
        assert_eq!(s.dimension, 4);
        assert!(s.contains_identity_direction);
    }

    #[test]
    fn single_generator_is_one_dimensional() {
        let s = lie_closure(&hamiltonian_generators(&[pauli_z()]));
        assert_eq!(s.dimension, 1);
        assert!(!s.contains_identity_direction);
    }

    #[test]
    fn span_rejects_linear_combinations() {
        let mut span = RationalSpan::new(3);
        assert!(span.insert(vec![rat(1), rat(2), rat(0)]));
        assert!(span.insert(vec![rat(0), rat(1), rat(1)]));
        assert!(!span.insert(vec![rat(2), rat(5), rat(1)]));
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&[rat(3), rat(7), rat(1)]));
        assert!(!span.contains(&[rat(0), rat(0), rat(1)]));
    }
}
