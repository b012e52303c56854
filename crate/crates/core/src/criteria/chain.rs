//! Nearest-neighbor chain criterion.
//!
//! For a ladder system (drift diagonal, one control coupling only adjacent
//! levels) a single distinguished transition is enough: if some transition
//! frequency differs from all others, or all frequencies agree but some
//! coupling-weight combination v_n is unique, the traceless algebra is full.
//! The test is sufficient-only; failures are reported as inconclusive.

use crate::criteria::regularity::check_regularity;
use crate::error::{Error, Result};
use crate::matrix::{hermitian_eigensystem, Tolerances};
use crate::system::HamiltonianSystem;

/// Ladder data: N ascending level energies and N−1 adjacent couplings.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    energies: Vec<f64>,
    dipoles: Vec<f64>,
}

impl ChainSpec {
    pub fn new(energies: Vec<f64>, dipoles: Vec<f64>) -> Result<Self> {
        if energies.len() < 2 {
            return Err(Error::Validation {
                field: "energies".into(),
                message: format!("a chain needs at least two levels, got {}", energies.len()),
            });
        }
        if dipoles.len() + 1 != energies.len() {
            return Err(Error::Validation {
                field: "dipoles".into(),
                message: format!(
                    "expected {} dipoles for {} levels, got {}",
                    energies.len() - 1,
                    energies.len(),
                    dipoles.len()
                ),
            });
        }
        if energies.iter().chain(&dipoles).any(|x| !x.is_finite()) {
            return Err(Error::Validation {
                field: "chain".into(),
                message: "energies and dipoles must be finite".into(),
            });
        }
        Ok(Self { energies, dipoles })
    }

    pub fn level_count(&self) -> usize {
        self.energies.len()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn dipoles(&self) -> &[f64] {
        &self.dipoles
    }

    /// Adjacent transition frequencies E_{n+1} − E_n.
    pub fn gaps(&self) -> Vec<f64> {
        self.energies.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// v_n = 2·d_n² − d_{n−1}² − d_{n+1}², with the out-of-range dipoles
    /// taken as zero.
    pub fn v_values(&self) -> Vec<f64> {
        let d = &self.dipoles;
        let m = d.len();
        (0..m)
            .map(|k| {
                let prev = if k == 0 { 0.0 } else { d[k - 1] * d[k - 1] };
                let next = if k + 1 == m { 0.0 } else { d[k + 1] * d[k + 1] };
                2.0 * d[k] * d[k] - prev - next
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainVerdict {
    CompletelyControllable,
    DensityMatrixControllable,
    Inconclusive,
    /// The only distinguished transition is the middle one of an even chain
    /// whose dipole profile is mirror-symmetric; the criterion cannot decide.
    InconclusiveSymmetric,
    /// A dipole vanishes: the system is not an irreducible chain.
    NotApplicable,
}

impl ChainVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            ChainVerdict::CompletelyControllable => "COMPLETELY_CONTROLLABLE",
            ChainVerdict::DensityMatrixControllable => "DENSITY_MATRIX_CONTROLLABLE",
            ChainVerdict::Inconclusive => "INCONCLUSIVE",
            ChainVerdict::InconclusiveSymmetric => "INCONCLUSIVE_SYMMETRIC",
            ChainVerdict::NotApplicable => "NOT_APPLICABLE",
        }
    }

    pub fn is_controllable(&self) -> bool {
        matches!(
            self,
            ChainVerdict::CompletelyControllable | ChainVerdict::DensityMatrixControllable
        )
    }
}

#[derive(Debug, Clone)]
pub struct ChainCriterionOutcome {
    pub verdict: ChainVerdict,
    pub reason: String,
    /// 0-based transitions singled out by frequency or by v-weight, before
    /// the even-chain symmetry check.
    pub candidate_transitions: Vec<usize>,
    /// The v-weights, when the uniform-gap branch computed them.
    pub v_values: Option<Vec<f64>>,
}

/// Decide the chain criterion for a validated ladder.
pub fn chain_criterion(spec: &ChainSpec, tol: &Tolerances) -> ChainCriterionOutcome {
    let d = spec.dipoles();
    if let Some(k) = d.iter().position(|x| x.abs() <= tol.zero()) {
        return ChainCriterionOutcome {
            verdict: ChainVerdict::NotApplicable,
            reason: format!("dipole d_{} vanishes, so the chain decouples", k + 1),
            candidate_transitions: vec![],
            v_values: None,
        };
    }

    let gaps = spec.gaps();
    let m = gaps.len();
    let distinct = |a: f64, b: f64| (a - b).abs() >= tol.degeneracy();

    let unique_among = |xs: &[f64]| -> Vec<usize> {
        (0..xs.len())
            .filter(|&p| (0..xs.len()).all(|n| n == p || distinct(xs[p], xs[n])))
            .collect()
    };

    let freq_candidates = unique_among(&gaps);
    let uniform = (0..m).all(|a| ((a + 1)..m).all(|b| !distinct(gaps[a], gaps[b])));

    let (candidates, v_values, condition) = if !freq_candidates.is_empty() {
        (freq_candidates, None, "frequency-distinguished transition")
    } else if uniform {
        let v = spec.v_values();
        let c = unique_among(&v);
        (c, Some(v), "uniform gaps with a v-distinguished transition")
    } else {
        (vec![], None, "")
    };

    if candidates.is_empty() {
        return ChainCriterionOutcome {
            verdict: ChainVerdict::Inconclusive,
            reason: "no transition is singled out by frequency or coupling weights".into(),
            candidate_transitions: vec![],
            v_values,
        };
    }

    // An even chain whose distinguished transition sits exactly in the
    // middle needs an asymmetric dipole pair to break the mirror symmetry.
    let nlev = spec.level_count();
    let dsq = |idx_1based: i64| -> f64 {
        if idx_1based >= 1 && (idx_1based as usize) <= d.len() {
            let x = d[(idx_1based - 1) as usize];
            x * x
        } else {
            0.0
        }
    };
    let mut chosen: Option<usize> = None;
    for &p in &candidates {
        let p1 = (p + 1) as i64;
        let is_middle = nlev as i64 == 2 * p1;
        let passes = if is_middle {
            (1..=p1).any(|k| (dsq(p1 - k) - dsq(p1 + k)).abs() >= tol.degeneracy())
        } else {
            true
        };
        if passes {
            chosen = Some(p);
            break;
        }
    }

    match chosen {
        Some(p) => {
            let trace: f64 = spec.energies().iter().sum();
            let (verdict, trace_note) = if trace.abs() >= tol.degeneracy() {
                (
                    ChainVerdict::CompletelyControllable,
                    "nonzero trace adds the identity direction",
                )
            } else {
                (
                    ChainVerdict::DensityMatrixControllable,
                    "traceless drift leaves the special unitary algebra",
                )
            };
            ChainCriterionOutcome {
                verdict,
                reason: format!("transition {} is a {condition}; {trace_note}", p + 1),
                candidate_transitions: candidates,
                v_values,
            }
        }
        None => ChainCriterionOutcome {
            verdict: ChainVerdict::InconclusiveSymmetric,
            reason: "every distinguished transition is the middle of a mirror-symmetric even chain"
                .into(),
            candidate_transitions: candidates,
            v_values,
        },
    }
}

/// Offer a system to the chain test. Requirements: exactly one control, at
/// least two levels, a regular drift, and a control that is tridiagonal with
/// zero diagonal in the ascending drift eigenbasis. Dipoles are read off as
/// coupling magnitudes (a diagonal gauge change makes them nonnegative
/// without affecting the criterion).
pub fn extract_chain(
    system: &HamiltonianSystem,
    tol: &Tolerances,
) -> Result<Option<ChainSpec>> {
    if system.controls().len() != 1 || system.dim() < 2 {
        return Ok(None);
    }
    let reg = check_regularity(system.h0(), tol)?;
    if !reg.regular {
        return Ok(None);
    }
    let eig = hermitian_eigensystem(system.h0(), tol)?;
    let h1 = system.controls()[0].in_basis(&eig.eigenvectors)?;
    let n = system.dim();
    for r in 0..n {
        for c in 0..n {
            let off_band = r == c || r.abs_diff(c) >= 2;
            if off_band && h1.get(r, c).norm() > tol.zero() {
                return Ok(None);
            }
        }
    }
    let dipoles: Vec<f64> = (0..n - 1).map(|k| h1.get(k, k + 1).norm()).collect();
    Ok(Some(ChainSpec::new(eig.eigenvalues, dipoles)?))
}
