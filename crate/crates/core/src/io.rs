//! JSON document formats: system inputs and analysis reports.
//!
//! Matrices are stored as two N x N real arrays `re` and `im` so fixtures
//! stay human-writable and diffable. All indices in documents are 1-based.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::criteria::analyze::{ControllabilityReport, Evidence, Verdict};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, Tolerances};
use crate::system::HamiltonianSystem;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    re: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    im: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TolerancesDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    zero: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degeneracy: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemDoc {
    dim: usize,
    h0: MatrixDoc,
    controls: Vec<MatrixDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tolerances: Option<TolerancesDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    description: Option<String>,
}

fn component_from_doc(rows: &[Vec<f64>], dim: usize, field: &str) -> Result<()> {
    if rows.len() != dim {
        return Err(Error::Malformed {
            field: field.into(),
            message: format!("expected {dim} rows, got {}", rows.len()),
        });
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::Malformed {
                field: format!("{field}[{}]", r + 1),
                message: format!("expected {dim} entries, got {}", row.len()),
            });
        }
        for (c, v) in row.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::Malformed {
                    field: format!("{field}[{}][{}]", r + 1, c + 1),
                    message: "entry is not a finite number".into(),
                });
            }
        }
    }
    Ok(())
}

fn matrix_from_doc(doc: &MatrixDoc, dim: usize, name: &str) -> Result<ComplexMatrix> {
    component_from_doc(&doc.re, dim, &format!("{name}.re"))?;
    if let Some(im) = &doc.im {
        component_from_doc(im, dim, &format!("{name}.im"))?;
    }
    Ok(ComplexMatrix::from_fn(dim, |r, c| {
        let re = doc.re[r][c];
        let im = doc.im.as_ref().map_or(0.0, |m| m[r][c]);
        Complex64::new(re, im)
    }))
}

fn matrix_to_doc(m: &ComplexMatrix) -> MatrixDoc {
    let n = m.dim();
    let grid = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
        (0..n)
            .map(|r| (0..n).map(|c| f(&m.get(r, c))).collect())
            .collect()
    };
    MatrixDoc {
        re: grid(|z| z.re),
        im: Some(grid(|z| z.im)),
    }
}

/// Parses a system document using the library default tolerances as the base
/// that document-level overrides apply to.
pub fn parse_system(text: &str) -> Result<HamiltonianSystem> {
    parse_system_with_defaults(text, Tolerances::default())
}

/// Parses a system document. Tolerance fields present in the document win
/// over `defaults`.
pub fn parse_system_with_defaults(text: &str, defaults: Tolerances) -> Result<HamiltonianSystem> {
    let doc: SystemDoc = serde_json::from_str(text).map_err(|e| Error::Malformed {
        field: "document".into(),
        message: e.to_string(),
    })?;
    if doc.dim == 0 {
        return Err(Error::Malformed {
            field: "dim".into(),
            message: "dimension must be positive".into(),
        });
    }
    if doc.controls.is_empty() {
        return Err(Error::Malformed {
            field: "controls".into(),
            message: "at least one control Hamiltonian is required".into(),
        });
    }
    let tol = match &doc.tolerances {
        Some(t) => Tolerances::new(
            t.zero.unwrap_or(defaults.zero()),
            t.degeneracy.unwrap_or(defaults.degeneracy()),
        )?,
        None => defaults,
    };
    let h0 = matrix_from_doc(&doc.h0, doc.dim, "h0")?;
    let controls = doc
        .controls
        .iter()
        .enumerate()
        .map(|(k, m)| matrix_from_doc(m, doc.dim, &format!("controls[{}]", k + 1)))
        .collect::<Result<Vec<_>>>()?;
    if let Some(labels) = &doc.labels {
        if labels.len() != doc.dim {
            return Err(Error::Malformed {
                field: "labels".into(),
                message: format!("expected {} labels, got {}", doc.dim, labels.len()),
            });
        }
    }
    let mut system = HamiltonianSystem::new(h0, controls, tol)?;
    if let Some(labels) = doc.labels {
        system = system.with_labels(labels)?;
    }
    if let Some(description) = doc.description {
        system = system.with_description(description);
    }
    Ok(system)
}

/// Serializes a system so that `parse(serialize(system)) == system`.
pub fn serialize_system(system: &HamiltonianSystem) -> Result<String> {
    let doc = SystemDoc {
        dim: system.dim(),
        h0: matrix_to_doc(system.h0()),
        controls: system.controls().iter().map(matrix_to_doc).collect(),
        labels: system.labels().map(|l| l.to_vec()),
        tolerances: Some(TolerancesDoc {
            zero: Some(system.tolerances().zero()),
            degeneracy: Some(system.tolerances().degeneracy()),
        }),
        description: system.description().map(|s| s.to_string()),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Inconsistent {
        details: format!("system serialization failed: {e}"),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictsDoc {
    pub complete: Verdict,
    pub density_matrix: Verdict,
    pub pure_state: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularityDoc {
    pub eigenvalues: Vec<f64>,
    pub regular: bool,
    pub strongly_regular: bool,
    /// 1-based level index pairs.
    pub degenerate_level_pairs: Vec<[usize; 2]>,
    /// 1-based transition pairs, each transition as [lower, upper].
    pub degenerate_transition_pairs: Vec<[[usize; 2]; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub connected: bool,
    /// 1-based eigenstate index pairs.
    pub edges: Vec<[usize; 2]>,
    pub basis_unique: bool,
}

/// The report as written to disk: the analysis outcome plus provenance
/// (tool version and a digest of the exact input bytes).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub input_digest: String,
    pub lie_dimension: usize,
    pub algebra_class: String,
    pub verdicts: VerdictsDoc,
    pub regularity: RegularityDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_criterion: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_criterion: Option<String>,
    /// One state per row, components as [re, im] pairs.
    pub dark_states: Vec<Vec<[f64; 2]>>,
    pub commutant_dimension: usize,
    pub evidence: Vec<Evidence>,
}

fn hex_digest(input: &[u8]) -> String {
    Sha256::digest(input)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl ReportDocument {
    pub fn new(report: &ControllabilityReport, input: &[u8]) -> Self {
        let regularity = RegularityDoc {
            eigenvalues: report.regularity.eigenvalues.clone(),
            regular: report.regularity.regular,
            strongly_regular: report.regularity.strongly_regular,
            degenerate_level_pairs: report
                .regularity
                .degenerate_level_pairs
                .iter()
                .map(|&(i, j)| [i + 1, j + 1])
                .collect(),
            degenerate_transition_pairs: report
                .regularity
                .degenerate_transition_pairs
                .iter()
                .map(|&((a, b), (c, d))| [[a + 1, b + 1], [c + 1, d + 1]])
                .collect(),
        };
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: hex_digest(input),
            lie_dimension: report.lie_dimension,
            algebra_class: report.algebra.label(),
            verdicts: VerdictsDoc {
                complete: report.verdict_complete,
                density_matrix: report.verdict_density_matrix,
                pure_state: report.verdict_pure_state,
            },
            regularity,
            graph: report.graph.as_ref().map(|g| GraphDoc {
                connected: g.graph.connected,
                edges: g.graph.edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
                basis_unique: g.graph.basis_unique,
            }),
            graph_criterion: report.graph.as_ref().map(|g| g.verdict.label().to_string()),
            chain_criterion: report
                .chain
                .as_ref()
                .map(|c| c.outcome.verdict.label().to_string()),
            dark_states: report
                .dark_states
                .iter()
                .map(|v| v.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
            commutant_dimension: report.commutant_dimension,
            evidence: report.evidence.clone(),
        }
    }
}

pub fn serialize_report(doc: &ReportDocument) -> Result<String> {
    serde_json::to_string_pretty(doc).map_err(|e| Error::Inconsistent {
        details: format!("report serialization failed: {e}"),
    })
}

pub fn parse_report(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| Error::Malformed {
        field: "document".into(),
        message: e.to_string(),
    })
}
