//! Command-line front end: analyze system documents, emit demo systems,
//! print closure dimensions.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qctrl_core::criteria::{analyze, ControllabilityReport};
use qctrl_core::error::Error;
use qctrl_core::io::{parse_system_with_defaults, serialize_report, serialize_system, ReportDocument};
use qctrl_core::lie::lie_closure;
use qctrl_core::matrix::Tolerances;
use qctrl_core::system::{build_chain, build_lambda, HamiltonianSystem};

#[derive(Parser)]
#[command(
    name = "qctrl",
    version,
    about = "Decides open-loop controllability of finite-dimensional quantum systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a system document and print a controllability report.
    Analyze {
        /// JSON system document.
        file: PathBuf,
        /// Override the zero tolerance (also settable via QCTRL_TOL_ZERO).
        #[arg(long, value_name = "X")]
        tol_zero: Option<f64>,
        /// Override the degeneracy tolerance (also QCTRL_TOL_DEGENERACY).
        #[arg(long, value_name = "Y")]
        tol_degeneracy: Option<f64>,
        /// Emit the report as JSON.
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit the report as text (the default).
        #[arg(long)]
        text: bool,
    },
    /// Print a ready-made example system document to stdout.
    Demo {
        #[arg(value_enum)]
        kind: DemoKind,
        /// Number of levels (chain and uniform-chain: 2..=12; lambda: 3).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print only the dimension of the dynamical Lie algebra.
    Closure {
        /// JSON system document.
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoKind {
    /// Three-level Lambda configuration with a shared upper level.
    Lambda,
    /// Ladder with strictly widening gaps (strongly regular).
    Chain,
    /// Ladder with equally spaced levels and uniform dipoles.
    UniformChain,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// Write to stdout without panicking when the reader hangs up (e.g. piping
/// a report into `head`); a closed pipe ends the process quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let result = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if let Err(e) = result {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(1);
    }
}

/// 2 = the document could not be read as a valid system, 3 = inputs were
/// well-formed but violate a constraint, 4 = the engine contradicted itself.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Malformed { .. } | Error::NotHermitian { .. } | Error::DimensionMismatch { .. } => 2,
        Error::Validation { .. } | Error::NotSkewHermitian { .. } | Error::EmptyGenerators => 3,
        Error::EigenConvergence { .. } | Error::Inconsistent { .. } => 4,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Analyze {
            file,
            tol_zero,
            tol_degeneracy,
            json,
            text: _,
        } => {
            let (system, input) = load_system(&file, tol_zero, tol_degeneracy)?;
            let report = analyze(&system)?;
            let doc = ReportDocument::new(&report, input.as_bytes());
            if json {
                emit(&format!("{}\n", serialize_report(&doc)?));
            } else {
                emit(&render_text(&system, &report));
            }
            Ok(())
        }
        Command::Demo { kind, n } => {
            let system = demo_system(kind, n)?;
            emit(&format!("{}\n", serialize_system(&system)?));
            Ok(())
        }
        Command::Closure { file } => {
            let (system, _) = load_system(&file, None, None)?;
            let closure = lie_closure(&system.generators(), system.tolerances())?;
            emit(&format!("{}\n", closure.dimension()));
            Ok(())
        }
    }
}

fn load_system(
    path: &Path,
    tol_zero: Option<f64>,
    tol_degeneracy: Option<f64>,
) -> Result<(HamiltonianSystem, String), Error> {
    let ambient = Tolerances::from_env()?;
    let input = std::fs::read_to_string(path).map_err(|e| Error::Malformed {
        field: path.display().to_string(),
        message: e.to_string(),
    })?;
    let mut system = parse_system_with_defaults(&input, ambient)?;
    if tol_zero.is_some() || tol_degeneracy.is_some() {
        let merged = Tolerances::new(
            tol_zero.unwrap_or(system.tolerances().zero()),
            tol_degeneracy.unwrap_or(system.tolerances().degeneracy()),
        )?;
        system = system.with_tolerances(merged)?;
    }
    Ok((system, input))
}

fn demo_system(kind: DemoKind, n: Option<usize>) -> Result<HamiltonianSystem, Error> {
    let tol = Tolerances::from_env()?;
    match kind {
        DemoKind::Lambda => {
            if let Some(n) = n {
                if n != 3 {
                    return Err(Error::Validation {
                        field: "n".into(),
                        message: format!("the lambda demo has exactly 3 levels, got --n {n}"),
                    });
                }
            }
            build_lambda(0.0, 1.0, 1.0, tol)
        }
        DemoKind::Chain => {
            let n = checked_levels(n)?;
            // Gaps 1, 2, 4, ...: all transition frequencies are distinct sums
            // of distinct powers of two, so the spectrum is strongly regular.
            let energies: Vec<f64> = (0..n).map(|k| (1u64 << k) as f64 - 1.0).collect();
            build_chain(&energies, &vec![1.0; n - 1], tol)
        }
        DemoKind::UniformChain => {
            let n = checked_levels(n)?;
            let energies: Vec<f64> = (0..n).map(|k| k as f64).collect();
            build_chain(&energies, &vec![1.0; n - 1], tol)
        }
    }
}

fn checked_levels(n: Option<usize>) -> Result<usize, Error> {
    let n = n.unwrap_or(4);
    if !(2..=12).contains(&n) {
        return Err(Error::Validation {
            field: "n".into(),
            message: format!("demo chains support 2 to 12 levels, got --n {n}"),
        });
    }
    Ok(n)
}

fn format_float(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{x}")
    } else {
        format!("{x:.6}")
    }
}

fn render_text(system: &HamiltonianSystem, report: &ControllabilityReport) -> String {
    let mut out = String::new();
    let n = system.dim();
    out.push_str(&format!(
        "system: {n} level(s), {} control(s)",
        system.controls().len()
    ));
    if let Some(d) = system.description() {
        out.push_str(&format!(" [{d}]"));
    }
    out.push('\n');

    out.push_str(&format!(
        "algebra: {} (Lie dimension {} of {})\n",
        report.algebra,
        report.lie_dimension,
        n * n
    ));
    out.push_str(&format!(
        "verdicts: complete={} density_matrix={} pure_state={}\n",
        report.verdict_complete.label(),
        report.verdict_density_matrix.label(),
        report.verdict_pure_state.label()
    ));

    let eigs: Vec<String> = report
        .regularity
        .eigenvalues
        .iter()
        .map(|&x| format_float(x))
        .collect();
    let regularity = if report.regularity.strongly_regular {
        "strongly regular"
    } else if report.regularity.regular {
        "regular, degenerate transitions"
    } else {
        "degenerate levels"
    };
    out.push_str(&format!(
        "spectrum: {} [{}]\n",
        regularity,
        eigs.join(", ")
    ));

    if let Some(g) = &report.graph {
        let edges: Vec<String> = g
            .graph
            .edges
            .iter()
            .map(|&(i, j)| format!("{}-{}", i + 1, j + 1))
            .collect();
        out.push_str(&format!(
            "graph: {} ({}), edges [{}]\n",
            g.verdict.label(),
            if g.graph.connected {
                "connected"
            } else {
                "disconnected"
            },
            edges.join(", ")
        ));
    }
    if let Some(c) = &report.chain {
        out.push_str(&format!("chain criterion: {}\n", c.outcome.verdict.label()));
    }

    if report.dark_states.is_empty() {
        out.push_str("dark states: none\n");
    } else {
        out.push_str(&format!("dark states: {}\n", report.dark_states.len()));
        for state in &report.dark_states {
            let comps: Vec<String> = state
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            out.push_str(&format!("  ({})\n", comps.join(", ")));
        }
    }
    out.push_str(&format!(
        "commutant dimension: {}\n",
        report.commutant_dimension
    ));

    out.push_str("evidence:\n");
    for e in &report.evidence {
        out.push_str(&format!("  - {}: {} [{}]\n", e.criterion, e.outcome, e.citation));
    }
    out
}
