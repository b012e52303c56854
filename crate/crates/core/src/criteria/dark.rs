//! Dark states: drift eigenvectors annihilated by every control.

use num_complex::Complex64;

use crate::error::Result;
use crate::matrix::{
    gram_kernel, hermitian_eigensystem, orthonormalize, vec_norm, Tolerances,
};
use crate::system::HamiltonianSystem;

fn phase_fix(mut v: Vec<Complex64>) -> Vec<Complex64> {
    let mut best = 0usize;
    let mut best_mag = 0.0f64;
    for (k, x) in v.iter().enumerate() {
        let m = x.norm();
        if m > best_mag {
            best_mag = m;
            best = k;
        }
    }
    if best_mag == 0.0 {
        return v;
    }
    let phase = v[best].conj() / best_mag;
    for x in &mut v {
        *x *= phase;
    }
    v
}

/// Unit vectors that lie in the joint kernel of all controls and inside a
/// single drift eigenspace (eigenvalues clustered at the degeneracy
/// tolerance). Each returned state is gauge-fixed: its largest component is
/// real positive.
pub fn detect_dark_states(
    system: &HamiltonianSystem,
    tol: &Tolerances,
) -> Result<Vec<Vec<Complex64>>> {
    let n = system.dim();

    // Joint kernel of the controls, via the stacked map v -> (h_1 v, ..., h_M v).
    let mut images: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        e[k] = Complex64::new(1.0, 0.0);
        let mut w = Vec::with_capacity(system.controls().len() * n);
        for h in system.controls() {
            w.extend(h.mul_vec(&e)?);
        }
        images.push(w);
    }
    let kernel = gram_kernel(&images, tol.zero(), tol)?;
    if kernel.is_empty() {
        return Ok(vec![]);
    }

    let eig = hermitian_eigensystem(system.h0(), tol)?;
    let mut dark: Vec<Vec<Complex64>> = Vec::new();
    let mut start = 0usize;
    while start < n {
        let mut end = start + 1;
        while end < n && (eig.eigenvalues[end] - eig.eigenvalues[end - 1]).abs() < tol.degeneracy()
        {
            end += 1;
        }
        let cluster: Vec<Vec<Complex64>> = (start..end).map(|k| eig.eigenvector(k)).collect();

        // Intersection of the kernel span K and the eigenspace span V:
        // nullspace of (a, b) -> K·a − V·b; the state is K·a.
        let mut cols: Vec<Vec<Complex64>> = kernel.clone();
        for cv in &cluster {
            cols.push(cv.iter().map(|x| -x).collect());
        }
        let pairs = gram_kernel(&cols, tol.degeneracy(), tol)?;
        let mut states: Vec<Vec<Complex64>> = Vec::new();
        for y in &pairs {
            let mut v = vec![Complex64::new(0.0, 0.0); n];
            for (idx, kv) in kernel.iter().enumerate() {
                let a = y[idx];
                for (x, comp) in v.iter_mut().zip(kv) {
                    *x += a * comp;
                }
            }
            if vec_norm(&v) > tol.zero() {
                states.push(v);
            }
        }
        for s in orthonormalize(&states, tol.degeneracy()) {
            dark.push(phase_fix(s));
        }
        start = end;
    }
    Ok(dark)
}
