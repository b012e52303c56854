//! Control system model: a drift Hamiltonian plus control Hamiltonians,
//! together with builders for the standard example families.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{hermitian_eigensystem, ComplexMatrix, Tolerances};

/// A finite-dimensional Hamiltonian control system
/// `H(t) = H0 + sum_k f_k(t) H_k` with validated Hermitian parts.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSystem {
    dim: usize,
    h0: ComplexMatrix,
    controls: Vec<ComplexMatrix>,
    labels: Option<Vec<String>>,
    description: Option<String>,
    tol: Tolerances,
}

impl HamiltonianSystem {
    pub fn new(h0: ComplexMatrix, controls: Vec<ComplexMatrix>, tol: Tolerances) -> Result<Self> {
        let dim = h0.dim();
        if dim == 0 {
            return Err(Error::Validation {
                field: "h0".into(),
                message: "drift Hamiltonian must have positive dimension".into(),
            });
        }
        if controls.is_empty() {
            return Err(Error::Validation {
                field: "controls".into(),
                message: "at least one control Hamiltonian is required".into(),
            });
        }
        let dev = h0.hermitian_deviation();
        if !(dev <= tol.zero()) {
            return Err(Error::NotHermitian {
                context: "h0".into(),
                deviation: dev,
            });
        }
        for (k, h) in controls.iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch {
                    context: format!("control {}", k + 1),
                    details: format!("expected {dim}x{dim}, got {}x{}", h.dim(), h.dim()),
                });
            }
            let dev = h.hermitian_deviation();
            if !(dev <= tol.zero()) {
                return Err(Error::NotHermitian {
                    context: format!("h{}", k + 1),
                    deviation: dev,
                });
            }
        }
        Ok(Self {
            dim,
            h0,
            controls,
            labels: None,
            description: None,
            tol,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Validation {
                field: "labels".into(),
                message: format!("expected {} labels, got {}", self.dim, labels.len()),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_description(mut self, description: impl Into<String>) -> Self {
        self.description = Some(description.into());
        self
    }

    /// Re-validates the matrices under the new tolerances.
    pub fn with_tolerances(self, tol: Tolerances) -> Result<Self> {
        let mut rebuilt = Self::new(self.h0, self.controls, tol)?;
        rebuilt.labels = self.labels;
        rebuilt.description = self.description;
        Ok(rebuilt)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn h0(&self) -> &ComplexMatrix {
        &self.h0
    }

    pub fn controls(&self) -> &[ComplexMatrix] {
        &self.controls
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn description(&self) -> Option<&str> {
        self.description.as_deref()
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    /// Skew-Hermitian generators `iH0, iH1, ...` of the dynamical algebra.
    pub fn generators(&self) -> Vec<ComplexMatrix> {
        std::iter::once(&self.h0)
            .chain(self.controls.iter())
            .map(|h| h.scaled(Complex64::i()))
            .collect()
    }
}

fn require_finite(values: &[f64], field: &str) -> Result<()> {
    for (k, v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(Error::Validation {
                field: field.into(),
                message: format!("entry {} is not finite", k + 1),
            });
        }
    }
    Ok(())
}

/// Nearest-neighbor ladder: diagonal drift `diag(energies)` and one control
/// coupling consecutive levels with the given dipole strengths. Zero dipoles
/// are allowed here; the chain criterion rejects them later.
pub fn build_chain(energies: &[f64], dipoles: &[f64], tol: Tolerances) -> Result<HamiltonianSystem> {
    let n = energies.len();
    if n < 2 {
        return Err(Error::Validation {
            field: "energies".into(),
            message: format!("a chain needs at least 2 levels, got {n}"),
        });
    }
    if dipoles.len() != n - 1 {
        return Err(Error::Validation {
            field: "dipoles".into(),
            message: format!("expected {} dipole moments, got {}", n - 1, dipoles.len()),
        });
    }
    require_finite(energies, "energies")?;
    require_finite(dipoles, "dipoles")?;
    let h0 = ComplexMatrix::diagonal(energies);
    let h1 = ComplexMatrix::from_fn(n, |r, c| {
        if r + 1 == c {
            Complex64::new(dipoles[r], 0.0)
        } else if c + 1 == r {
            Complex64::new(dipoles[c], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(HamiltonianSystem::new(h0, vec![h1], tol)?
        .with_description(format!("chain: {n} levels")))
}

/// Three-level Lambda configuration: two degenerate outer levels at `e1`, a
/// shared upper level at `e2`, and one control coupling both arms with the
/// same strength `d`.
pub fn build_lambda(e1: f64, e2: f64, d: f64, tol: Tolerances) -> Result<HamiltonianSystem> {
    require_finite(&[e1, e2, d], "lambda")?;
    let h0 = ComplexMatrix::diagonal(&[e1, e2, e1]);
    let h1 = ComplexMatrix::from_fn(3, |r, c| {
        if (r == 0 && c == 1) || (r == 1 && c == 0) || (r == 1 && c == 2) || (r == 2 && c == 1) {
            Complex64::new(d, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let mut description = format!("lambda: e1={e1}, e2={e2}, d={d}");
    if e2 <= e1 {
        description.push_str("; warning: e2 <= e1 (inverted level ordering)");
    }
    Ok(HamiltonianSystem::new(h0, vec![h1], tol)?.with_description(description))
}

/// Knobs for [`random_system`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomOptions {
    /// Resample the drift spectrum until eigenvalues and all transition
    /// frequencies are pairwise separated by `10 * degeneracy`.
    pub strongly_regular: bool,
    /// Force the first control to couple consecutive drift eigenstates so the
    /// transition graph is connected.
    pub connected: bool,
}

/// Identifies the sampling scheme; recorded in generated descriptions so a
/// report can be traced back to the exact generator.
pub const RANDOM_GENERATOR_ID: &str = "chacha8-hermitian-v1";

fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let raw = ComplexMatrix::from_fn(n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    raw.hermitian_part()
}

fn sample_strongly_regular_spectrum(
    rng: &mut ChaCha8Rng,
    n: usize,
    separation: f64,
) -> Result<Vec<f64>> {
    const MAX_ATTEMPTS: usize = 10_000;
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut levels: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
        levels.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if levels.windows(2).any(|w| w[1] - w[0] < separation) {
            continue;
        }
        let mut freqs = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                freqs.push(levels[j] - levels[i]);
            }
        }
        freqs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if freqs.windows(2).any(|w| w[1] - w[0] < separation) {
            continue 'attempt;
        }
        return Ok(levels);
    }
    Err(Error::Validation {
        field: "random".into(),
        message: format!(
            "failed to sample a strongly regular spectrum for n={n} within {MAX_ATTEMPTS} attempts"
        ),
    })
}

/// Seeded random system. The same `(n, controls, seed, options)` always
/// produces the same system.
pub fn random_system(
    n: usize,
    controls: usize,
    seed: u64,
    options: RandomOptions,
    tol: Tolerances,
) -> Result<HamiltonianSystem> {
    if n < 2 {
        return Err(Error::Validation {
            field: "dim".into(),
            message: format!("random systems need dimension >= 2, got {n}"),
        });
    }
    if controls == 0 {
        return Err(Error::Validation {
            field: "controls".into(),
            message: "at least one control is required".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let h0 = if options.strongly_regular {
        let levels = sample_strongly_regular_spectrum(&mut rng, n, 10.0 * tol.degeneracy())?;
        let basis = hermitian_eigensystem(&random_hermitian(&mut rng, n), &tol)?;
        ComplexMatrix::diagonal(&levels)
            .conjugated_by(&basis.eigenvectors)?
            .hermitian_part()
    } else {
        random_hermitian(&mut rng, n)
    };

    let mut control_list = Vec::with_capacity(controls);
    for k in 0..controls {
        if options.connected && k == 0 {
            // Couple consecutive drift eigenstates (plus random extras) so the
            // transition graph of the first control is connected by design.
            let eig = hermitian_eigensystem(&h0, &tol)?;
            let mut coupling = ComplexMatrix::zeros(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    let wanted = j == i + 1 || rng.gen_bool(0.3);
                    if !wanted {
                        continue;
                    }
                    let magnitude = rng.gen_range(0.3..1.0);
                    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
                    let z = Complex64::from_polar(magnitude, phase);
                    coupling.set(i, j, z);
                    coupling.set(j, i, z.conj());
                }
            }
            control_list.push(coupling.conjugated_by(&eig.eigenvectors)?.hermitian_part());
        } else {
            control_list.push(random_hermitian(&mut rng, n));
        }
    }

    let description = format!(
        "random: id={RANDOM_GENERATOR_ID}, n={n}, controls={controls}, seed={seed}, \
         strongly_regular={}, connected={}",
        options.strongly_regular, options.connected
    );
    Ok(HamiltonianSystem::new(h0, control_list, tol)?.with_description(description))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::graph::build_transition_graph;
    use crate::criteria::regularity::check_regularity;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn chain_builder_shapes() {
        let sys = build_chain(&[0.0, 1.0, 2.5], &[1.0, 2.0], tol()).unwrap();
        assert_eq!(sys.dim(), 3);
        assert_eq!(sys.h0().get(2, 2).re, 2.5);
        assert_eq!(sys.controls()[0].get(1, 2).re, 2.0);
        assert_eq!(sys.controls()[0].get(2, 1).re, 2.0);
        assert_eq!(sys.controls()[0].get(0, 2).re, 0.0);
        assert!(sys.h0().is_hermitian(&tol()));
        assert!(build_chain(&[0.0], &[], tol()).is_err());
        assert!(build_chain(&[0.0, 1.0], &[1.0, 2.0], tol()).is_err());
        assert!(build_chain(&[0.0, f64::NAN], &[1.0], tol()).is_err());
    }

    #[test]
    fn lambda_builder_shape_and_warning() {
        let sys = build_lambda(0.0, 1.0, 1.0, tol()).unwrap();
        assert_eq!(sys.h0().get(0, 0).re, 0.0);
        assert_eq!(sys.h0().get(1, 1).re, 1.0);
        assert_eq!(sys.h0().get(2, 2).re, 0.0);
        assert_eq!(sys.controls()[0].get(0, 2).re, 0.0);
        assert!(!sys.description().unwrap().contains("warning"));
        let inverted = build_lambda(1.0, 0.0, 1.0, tol()).unwrap();
        assert!(inverted.description().unwrap().contains("warning"));
    }

    #[test]
    fn generators_are_skew_hermitian() {
        let sys = build_chain(&[0.0, 1.0], &[1.0], tol()).unwrap();
        for g in sys.generators() {
            assert!(g.is_skew_hermitian(&tol()));
        }
    }

    #[test]
    fn random_system_is_deterministic() {
        let opts = RandomOptions {
            strongly_regular: true,
            connected: true,
        };
        let a = random_system(4, 2, 7, opts, tol()).unwrap();
        let b = random_system(4, 2, 7, opts, tol()).unwrap();
        assert_eq!(a, b);
        let c = random_system(4, 2, 8, opts, tol()).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_strongly_regular_spectrum_property() {
        for seed in 0..5 {
            let sys = random_system(
                5,
                1,
                seed,
                RandomOptions {
                    strongly_regular: true,
                    connected: false,
                },
                tol(),
            )
            .unwrap();
            let reg = check_regularity(sys.h0(), &tol()).unwrap();
            assert!(reg.strongly_regular, "seed {seed} not strongly regular");
        }
    }

    #[test]
    fn random_connected_graph_property() {
        for seed in 0..5 {
            let sys = random_system(
                5,
                1,
                seed,
                RandomOptions {
                    strongly_regular: true,
                    connected: true,
                },
                tol(),
            )
            .unwrap();
            let graph = build_transition_graph(&sys, &tol()).unwrap();
            assert!(graph.connected, "seed {seed} not connected");
        }
    }

    #[test]
    fn with_tolerances_revalidates() {
        let sys = build_chain(&[0.0, 1.0], &[1.0], tol()).unwrap();
        let loose = Tolerances::new(1e-6, 1e-4).unwrap();
        let moved = sys.with_tolerances(loose).unwrap();
        assert_eq!(moved.tolerances().zero(), 1e-6);
        assert_eq!(moved.description(), Some("chain: 2 levels"));
    }
}
