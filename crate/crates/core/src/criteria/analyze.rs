//! Orchestrated analysis: run every criterion, reconcile, and report.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::criteria::chain::{chain_criterion, extract_chain, ChainCriterionOutcome, ChainSpec};
use crate::criteria::commutant::commutant_dimension;
use crate::criteria::dark::detect_dark_states;
use crate::criteria::graph::{graph_criterion, GraphAnalysis, GraphVerdict};
use crate::criteria::regularity::{check_regularity, RegularityReport};
use crate::error::{Error, Result};
use crate::lie::{classify_algebra, lie_closure, AlgebraClass, FormKind};
use crate::system::HamiltonianSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

/// One executed criterion, its outcome, and the mathematical fact it leans on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub criterion: String,
    pub outcome: String,
    pub citation: String,
}

#[derive(Debug, Clone)]
pub struct ChainAnalysis {
    pub spec: ChainSpec,
    pub outcome: ChainCriterionOutcome,
}

#[derive(Debug, Clone)]
pub struct ControllabilityReport {
    pub lie_dimension: usize,
    pub algebra: AlgebraClass,
    pub verdict_complete: Verdict,
    pub verdict_density_matrix: Verdict,
    pub verdict_pure_state: Verdict,
    pub regularity: RegularityReport,
    /// Present for single-control systems.
    pub graph: Option<GraphAnalysis>,
    /// Present when the system matches the ladder shape.
    pub chain: Option<ChainAnalysis>,
    pub dark_states: Vec<Vec<Complex64>>,
    pub commutant_dimension: usize,
    pub evidence: Vec<Evidence>,
}

/// Verdict triple (complete, density-matrix, pure-state) implied by the
/// algebra class.
pub fn class_verdicts(class: &AlgebraClass) -> (Verdict, Verdict, Verdict) {
    use AlgebraClass::*;
    match class {
        FullUnitary { .. } => (Verdict::Yes, Verdict::Yes, Verdict::Yes),
        SpecialUnitary { .. } => (Verdict::No, Verdict::Yes, Verdict::Yes),
        Symplectic { .. } | SymplecticPlusU1 { .. } => (Verdict::No, Verdict::No, Verdict::Yes),
        OrthogonalType { .. } | Other => (Verdict::No, Verdict::No, Verdict::No),
        Unknown => (Verdict::Unknown, Verdict::Unknown, Verdict::Unknown),
    }
}

/// Full analysis pipeline. The fast criteria (regularity, graph, chain) run
/// first; the Lie closure decides the verdicts; commutant and dark-state
/// diagnostics follow; finally every sufficient criterion is cross-checked
/// against the Lie verdicts, and any contradiction is raised as an
/// `Inconsistent` error since it signals a tolerance failure.
pub fn analyze(system: &HamiltonianSystem) -> Result<ControllabilityReport> {
    let tol = *system.tolerances();
    let regularity = check_regularity(system.h0(), &tol)?;
    let single_control = system.controls().len() == 1;

    let graph = if single_control {
        Some(graph_criterion(system, &tol)?)
    } else {
        None
    };
    let chain = if single_control {
        extract_chain(system, &tol)?.map(|spec| {
            let outcome = chain_criterion(&spec, &tol);
            ChainAnalysis { spec, outcome }
        })
    } else {
        None
    };

    let closure = lie_closure(&system.generators(), &tol)?;
    let classification = classify_algebra(&closure, &tol)?;
    let commutant = commutant_dimension(system, &tol)?;
    let dark_states = detect_dark_states(system, &tol)?;

    let (verdict_complete, verdict_density_matrix, verdict_pure_state) =
        class_verdicts(&classification.class);

    let mut conflicts: Vec<String> = Vec::new();
    if let Some(g) = &graph {
        if g.verdict == GraphVerdict::Controllable && verdict_density_matrix != Verdict::Yes {
            conflicts.push(format!(
                "graph criterion says CONTROLLABLE but the Lie closure gives {} (density verdict {})",
                classification.class,
                verdict_density_matrix.label()
            ));
        }
        if g.verdict == GraphVerdict::NotControllable && verdict_density_matrix == Verdict::Yes {
            conflicts.push(
                "graph criterion says NOT_CONTROLLABLE but the Lie closure reaches a density-controllable algebra"
                    .into(),
            );
        }
    }
    if let Some(c) = &chain {
        if c.outcome.verdict.is_controllable() && verdict_density_matrix != Verdict::Yes {
            conflicts.push(format!(
                "chain criterion says {} but the Lie closure gives {}",
                c.outcome.verdict.label(),
                classification.class
            ));
        }
        if c.outcome.verdict == crate::criteria::chain::ChainVerdict::CompletelyControllable
            && verdict_complete != Verdict::Yes
        {
            conflicts.push(
                "chain criterion says COMPLETELY_CONTROLLABLE but the closure misses the full unitary algebra"
                    .into(),
            );
        }
    }
    if commutant > 1 && verdict_density_matrix == Verdict::Yes {
        conflicts.push(format!(
            "commutant dimension {commutant} certifies reducibility, contradicting the density verdict"
        ));
    }
    if !dark_states.is_empty() && system.dim() >= 2 && verdict_pure_state == Verdict::Yes {
        conflicts.push(format!(
            "{} dark state(s) found, contradicting pure-state controllability",
            dark_states.len()
        ));
    }
    if !conflicts.is_empty() {
        return Err(Error::Inconsistent {
            details: conflicts.join("; "),
        });
    }

    let mut evidence = Vec::new();
    evidence.push(Evidence {
        criterion: "spectral regularity".into(),
        outcome: format!(
            "regular: {}, strongly regular: {}",
            regularity.regular, regularity.strongly_regular
        ),
        citation: "distinct eigenvalues and transition frequencies make the transition structure canonical"
            .into(),
    });
    if let Some(g) = &graph {
        evidence.push(Evidence {
            criterion: "transition graph connectivity".into(),
            outcome: format!("{}: {}", g.verdict.label(), g.reason),
            citation: "a connected transition graph over a strongly regular spectrum suffices for density-matrix controllability"
                .into(),
        });
    }
    if let Some(c) = &chain {
        evidence.push(Evidence {
            criterion: "nearest-neighbor chain test".into(),
            outcome: format!("{}: {}", c.outcome.verdict.label(), c.outcome.reason),
            citation: "a ladder with one distinguished transition generates the full traceless algebra"
                .into(),
        });
    }
    evidence.push(Evidence {
        criterion: "dynamical Lie algebra closure".into(),
        outcome: format!(
            "dimension {} of at most {}",
            closure.dimension(),
            system.dim() * system.dim()
        ),
        citation: "the Lie algebra rank condition decides controllability".into(),
    });
    let form_note = match &classification.invariant_form {
        Some(f) => format!(
            ", {} invariant form ({}degenerate)",
            match f.kind {
                FormKind::Symmetric => "symmetric",
                FormKind::Antisymmetric => "antisymmetric",
            },
            if f.nondegenerate { "non" } else { "" }
        ),
        None => String::new(),
    };
    let identity_note = if classification.has_identity_direction {
        ", identity direction present"
    } else {
        ""
    };
    evidence.push(Evidence {
        criterion: "algebra classification".into(),
        outcome: format!("{}{}{}", classification.class, form_note, identity_note),
        citation: "dimension counts plus invariant bilinear forms separate the unitary, symplectic and orthogonal classes"
            .into(),
    });
    evidence.push(Evidence {
        criterion: "commutant dimension".into(),
        outcome: format!("{commutant}"),
        citation: "a trivial commutant certifies irreducibility (Schur's lemma)".into(),
    });
    evidence.push(Evidence {
        criterion: "dark states".into(),
        outcome: format!("{} found", dark_states.len()),
        citation: "an eigenvector annihilated by every control spans a decoupled line".into(),
    });

    Ok(ControllabilityReport {
        lie_dimension: closure.dimension(),
        algebra: classification.class,
        verdict_complete,
        verdict_density_matrix,
        verdict_pure_state,
        regularity,
        graph,
        chain,
        dark_states,
        commutant_dimension: commutant,
        evidence,
    })
}
