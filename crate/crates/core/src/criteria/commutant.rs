//! Commutant dimension: the matrices commuting with every system Hamiltonian.

use num_complex::Complex64;

use crate::error::Result;
use crate::matrix::{gram_kernel, ComplexMatrix, Tolerances};
use crate::system::HamiltonianSystem;

/// Complex dimension of { M : [M, H_k] = 0 for all k }. Dimension 1 means
/// only scalars commute, i.e. the joint action is irreducible.
pub fn commutant_dimension(system: &HamiltonianSystem, tol: &Tolerances) -> Result<usize> {
    let n = system.dim();
    let mut hams: Vec<&ComplexMatrix> = vec![system.h0()];
    hams.extend(system.controls().iter());

    let mut images: Vec<Vec<Complex64>> = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut e = ComplexMatrix::zeros(n);
            e.set(r, c, Complex64::new(1.0, 0.0));
            let mut w = Vec::with_capacity(hams.len() * n * n);
            for h in &hams {
                w.extend_from_slice(e.commutator(h)?.entries());
            }
            images.push(w);
        }
    }
    Ok(gram_kernel(&images, tol.degeneracy(), tol)?.len())
}
