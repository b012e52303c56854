//! Density matrices and kinematical equivalence.
//!
//! Two states are kinematically equivalent when some unitary maps one onto
//! the other, which for Hermitian positive unit-trace matrices is decided by
//! comparing spectra.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{hermitian_eigensystem, ComplexMatrix, Tolerances};

/// A validated density matrix with its cached (ascending) spectrum.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    spectrum: Vec<f64>,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positive semidefiniteness, all
    /// against the zero tolerance.
    pub fn new(matrix: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        let dev = matrix.hermitian_deviation();
        if !(dev <= tol.zero()) {
            return Err(Error::NotHermitian {
                context: "density matrix".into(),
                deviation: dev,
            });
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > tol.zero() || trace.im.abs() > tol.zero() {
            return Err(Error::Validation {
                field: "density matrix".into(),
                message: format!("trace must be 1, got {:.6}+{:.6}i", trace.re, trace.im),
            });
        }
        let eig = hermitian_eigensystem(&matrix, tol)?;
        if let Some(&min) = eig.eigenvalues.first() {
            if min < -tol.zero() {
                return Err(Error::Validation {
                    field: "density matrix".into(),
                    message: format!("not positive semidefinite: eigenvalue {min:.3e}"),
                });
            }
        }
        Ok(Self {
            matrix,
            spectrum: eig.eigenvalues,
        })
    }

    /// Projector onto the (normalized) state vector.
    pub fn from_pure(state: &[Complex64], tol: &Tolerances) -> Result<Self> {
        let norm = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > tol.zero()) {
            return Err(Error::Validation {
                field: "state".into(),
                message: "cannot normalize a (near-)zero vector".into(),
            });
        }
        let psi: Vec<Complex64> = state.iter().map(|z| z / norm).collect();
        let n = psi.len();
        let matrix = ComplexMatrix::from_fn(n, |r, c| psi[r] * psi[c].conj());
        Self::new(matrix, tol)
    }

    /// The maximally mixed state `I/n`. Its spectrum is written exactly, no
    /// eigensolve involved.
    pub fn maximally_mixed(n: usize, tol: &Tolerances) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation {
                field: "dim".into(),
                message: "dimension must be positive".into(),
            });
        }
        let _ = tol;
        let p = 1.0 / n as f64;
        let matrix = ComplexMatrix::from_fn(n, |r, c| {
            if r == c {
                Complex64::new(p, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Ok(Self {
            matrix,
            spectrum: vec![p; n],
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Eigenvalues in ascending order.
    pub fn spectrum(&self) -> &[f64] {
        &self.spectrum
    }

    /// Tr(rho^2), computed entrywise.
    pub fn purity(&self) -> f64 {
        self.matrix.entries().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Rank one is equivalent to unit purity; the margin `10 * zero` absorbs
    /// eigensolver rounding.
    pub fn is_pure(&self, tol: &Tolerances) -> bool {
        self.purity() > 1.0 - 10.0 * tol.zero()
    }

    /// Conjugation `u rho u^†` by a (verified) unitary.
    pub fn evolved(&self, u: &ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "unitary".into(),
                details: format!("{}x{} vs state dimension {}", u.dim(), u.dim(), self.dim()),
            });
        }
        let residual = u.adjoint().matmul(u)?.sub(&ComplexMatrix::identity(u.dim()))?;
        if residual.max_abs_entry() > tol.degeneracy() {
            return Err(Error::Validation {
                field: "unitary".into(),
                message: format!(
                    "matrix is not unitary: max |u^† u - I| = {:.3e}",
                    residual.max_abs_entry()
                ),
            });
        }
        let evolved = self.matrix.conjugated_by(u)?.hermitian_part();
        Self::new(evolved, tol)
    }
}

/// Spectra agree elementwise within the degeneracy tolerance.
pub fn kinematically_equivalent(a: &DensityMatrix, b: &DensityMatrix, tol: &Tolerances) -> bool {
    a.dim() == b.dim()
        && a.spectrum()
            .iter()
            .zip(b.spectrum())
            .all(|(x, y)| (x - y).abs() < tol.degeneracy())
}
