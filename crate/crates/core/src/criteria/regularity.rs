//! Spectral regularity of the drift Hamiltonian.

use crate::error::Result;
use crate::matrix::{hermitian_eigensystem, ComplexMatrix, Tolerances};

/// Degeneracy structure of a drift spectrum. Indexes are 0-based positions
/// in the ascending eigenvalue list.
#[derive(Debug, Clone)]
pub struct RegularityReport {
    pub eigenvalues: Vec<f64>,
    /// All eigenvalues pairwise distinct beyond the degeneracy tolerance.
    pub regular: bool,
    /// Additionally, all transition frequencies pairwise distinct.
    pub strongly_regular: bool,
    pub degenerate_level_pairs: Vec<(usize, usize)>,
    pub degenerate_transition_pairs: Vec<((usize, usize), (usize, usize))>,
}

pub fn check_regularity(h0: &ComplexMatrix, tol: &Tolerances) -> Result<RegularityReport> {
    let eig = hermitian_eigensystem(h0, tol)?;
    let vals = eig.eigenvalues;
    let n = vals.len();

    let mut degenerate_level_pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if (vals[i] - vals[j]).abs() < tol.degeneracy() {
                degenerate_level_pairs.push((i, j));
            }
        }
    }
    let regular = degenerate_level_pairs.is_empty();

    let mut transitions: Vec<((usize, usize), f64)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            transitions.push(((i, j), vals[j] - vals[i]));
        }
    }
    let mut degenerate_transition_pairs = Vec::new();
    for a in 0..transitions.len() {
        for b in (a + 1)..transitions.len() {
            if (transitions[a].1 - transitions[b].1).abs() < tol.degeneracy() {
                degenerate_transition_pairs.push((transitions[a].0, transitions[b].0));
            }
        }
    }
    let strongly_regular = regular && degenerate_transition_pairs.is_empty();

    Ok(RegularityReport {
        eigenvalues: vals,
        regular,
        strongly_regular,
        degenerate_level_pairs,
        degenerate_transition_pairs,
    })
}
