//! Decides how controllable a finite-dimensional quantum control system is.
//!
//! Given a drift Hamiltonian and a set of control Hamiltonians, the library
//! computes the dynamical Lie algebra they generate, classifies it, and
//! merges the result with fast sufficient criteria (spectral regularity,
//! transition-graph connectivity, the nearest-neighbor chain test) and
//! structural diagnostics (dark states, commutant dimension) into a single
//! [`criteria::ControllabilityReport`].

pub mod criteria;
pub mod error;
pub mod io;
pub mod kinematics;
pub mod lie;
pub mod matrix;
pub mod system;

pub use criteria::{analyze, ControllabilityReport, Verdict};
pub use error::{Error, Result};
pub use lie::{classify_algebra, lie_closure, AlgebraClass, LieAlgebraBasis};
pub use matrix::{ComplexMatrix, Tolerances};
pub use system::{build_chain, build_lambda, random_system, HamiltonianSystem, RandomOptions};
