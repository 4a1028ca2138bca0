//! `mtc`: build modular data for quantum-group categories, derive and
//! export fusion rings, gauge the swap symmetry of a square, and compare
//! rings up to isomorphism.
//!
//! Data goes to stdout; errors go to stderr as a single JSON object
//! `{"error":{"kind":...,"message":...,"offset":...}}` (the offset only
//! for positioned parse errors). Exit codes: 0 success, 1 mathematical
//! failure, 2 usage error. Identical invocations print identical bytes.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mtc::gauge::{
    gauged_fusion_with, half_t_hat, mult_case3, mult_case3_p, p_matrix, Sign, SqrtTwistChoice,
};
use mtc::mat::CMat;
use mtc::modular::{derived_scalars, validate_modular};
use mtc::ringtools::{
    export_ring, fp_dims, ring_isomorphism_with, validate_ring, ExportFormat, FusionRing,
    IsoOptions,
};
use mtc::{tol, ModularData64};
use mtc_cli::expr::{eval, eval_category, eval_ring, parse, Built, BuildError, CatExpr};

#[derive(Parser)]
#[command(
    name = "mtc",
    about = "Modular data, fusion rings, and swap gauging for quantum-group categories",
    version
)]
struct Cli {
    /// Integer-rounding tolerance for fusion multiplicities.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,

    /// Shuffle seed for isomorphism-search tie-breaks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Node budget for the isomorphism search.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build modular data and print its validation report.
    Build {
        /// Category expression, e.g. "qg(sl2,5)" or "rev(adj(qg(g2,3)))".
        expr: String,
    },
    /// Print or export the fusion ring of an expression.
    Fusion {
        /// Category expression; gauge2(...) yields the gauged ring.
        expr: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Generator label for the DOT fusion graph (required with
        /// --format dot), e.g. "L1" or "0^+".
        #[arg(long)]
        graph: Option<String>,
    },
    /// Decide whether two expressions have isomorphic fusion rings.
    Compare {
        expr1: String,
        expr2: String,
    },
    /// Run the full invariant suite on an expression; for gauge2(...)
    /// this includes the independent congruence-matrix cross-check of
    /// every hat-sector multiplicity.
    Check {
        expr: String,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Build { ref expr } => cmd_build(expr, cli.tol),
        Command::Fusion { ref expr, format, ref out, ref graph } => {
            cmd_fusion(expr, format, out.as_deref(), graph.as_deref(), cli.tol)
        }
        Command::Compare { ref expr1, ref expr2 } => {
            cmd_compare(expr1, expr2, cli.tol, cli.seed, cli.budget)
        }
        Command::Check { ref expr } => cmd_check(expr, cli.tol),
    };
    ExitCode::from(code)
}

// ---------------------------------------------------------------------
// Error reporting
// ---------------------------------------------------------------------

fn emit_error(kind: &str, message: &str, offset: Option<usize>) {
    let mut inner = serde_json::Map::new();
    inner.insert("kind".into(), kind.into());
    inner.insert("message".into(), message.into());
    if let Some(at) = offset {
        inner.insert("offset".into(), at.into());
    }
    let doc = serde_json::json!({ "error": inner });
    eprintln!("{doc}");
}

fn math_error_kind(e: &mtc::Error) -> &'static str {
    use mtc::Error::*;
    match e {
        UnsupportedSeries(_) => "UnsupportedSeries",
        ClosureOverflow { .. } => "ClosureOverflow",
        NumericalDegeneracy { .. } => "NumericalDegeneracy",
        NonIntegralMultiplicity { .. } => "NonIntegralMultiplicity",
        NegativeMultiplicity { .. } => "NegativeMultiplicity",
        NotModular(_) => "NotModular",
        NoPositiveEigenvector(_) => "NoPositiveEigenvector",
        SearchBudgetExceeded(_) => "SearchBudgetExceeded",
        InconsistentRing(_) => "InconsistentRing",
        MalformedRing(_) => "MalformedRing",
    }
}

/// Reports a failed evaluation and returns the exit code: 2 for
/// expression-level (usage) failures, 1 for mathematical ones.
fn report_build_error(e: &BuildError) -> u8 {
    match e {
        BuildError::Eval(ev) => {
            emit_error(ev.kind(), &ev.message(), None);
            2
        }
        BuildError::Math(me) => {
            emit_error(math_error_kind(me), &me.to_string(), None);
            1
        }
    }
}

/// Parses or reports; usage exit code 2 on failure.
fn parse_or_report(text: &str) -> Result<CatExpr, u8> {
    parse(text).map_err(|e| {
        emit_error(e.kind(), &e.message(), Some(e.offset()));
        2
    })
}

// ---------------------------------------------------------------------
// build
// ---------------------------------------------------------------------

fn cmd_build(text: &str, tolerance: f64) -> u8 {
    let ast = match parse_or_report(text) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let md = match eval(&ast, tolerance) {
        Ok(Built::Category(md)) => md,
        Ok(Built::Ring(_)) => {
            emit_error(
                "TypeError",
                "build needs modular data, but gauge2 produces only a fusion ring (use fusion or check)",
                None,
            );
            return 2;
        }
        Err(e) => return report_build_error(&e),
    };

    println!("expression: {}", ast.render());
    println!("rank: {}", md.rank());
    println!("unit: {}", md.labels[md.unit]);
    println!("labels: {}", md.labels.join(" "));
    let report = validate_modular(&md);
    let mut ok = true;
    for c in &report.checks {
        ok &= c.passed;
        print_modular_check(c.name, c.passed, c.residual, c.detail.as_deref());
    }
    finish_report(ok)
}

fn print_modular_check(name: &str, passed: bool, residual: f64, detail: Option<&str>) {
    let verdict = if passed { "pass" } else { "FAIL" };
    match detail {
        Some(d) => println!("check {name}: {verdict} residual {residual:.3e} ({d})"),
        None => println!("check {name}: {verdict} residual {residual:.3e}"),
    }
}

fn finish_report(ok: bool) -> u8 {
    if ok {
        println!("result: pass");
        0
    } else {
        println!("result: fail");
        emit_error("ValidationFailed", "one or more checks failed; see report on stdout", None);
        1
    }
}

// ---------------------------------------------------------------------
// fusion
// ---------------------------------------------------------------------

fn cmd_fusion(
    text: &str,
    format: Format,
    out: Option<&std::path::Path>,
    graph: Option<&str>,
    tolerance: f64,
) -> u8 {
    let ast = match parse_or_report(text) {
        Ok(a) => a,
        Err(code) => return code,
    };
    let ring = match eval_ring(&ast, tolerance) {
        Ok(r) => r,
        Err(e) => return report_build_error(&e),
    };
    let payload = match format {
        Format::Json => export_ring(&ring, ExportFormat::Json),
        Format::Text => export_ring(&ring, ExportFormat::Text),
        Format::Dot => {
            let Some(label) = graph else {
                emit_error("UsageError", "--format dot requires --graph LABEL", None);
                return 2;
            };
            let Some(generator) = ring.labels().iter().position(|l| l == label) else {
                emit_error(
                    "UnknownLabel",
                    &format!("label '{label}' does not name a simple object of the ring"),
                    None,
                );
                return 2;
            };
            export_ring(&ring, ExportFormat::Dot { generator })
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, payload) {
                emit_error("IoError", &format!("writing {}: {e}", path.display()), None);
                return 1;
            }
            0
        }
        None => {
            print!("{payload}");
            0
        }
    }
}

// ---------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------

fn cmd_compare(text1: &str, text2: &str, tolerance: f64, seed: u64, budget: u64) -> u8 {
    let (ast1, ast2) = match (parse_or_report(text1), parse_or_report(text2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    let a = match eval_ring(&ast1, tolerance) {
        Ok(r) => r,
        Err(e) => return report_build_error(&e),
    };
    let b = match eval_ring(&ast2, tolerance) {
        Ok(r) => r,
        Err(e) => return report_build_error(&e),
    };
    match ring_isomorphism_with(&a, &b, IsoOptions { budget, seed }) {
        Ok(Some(perm)) => {
            println!("isomorphic: yes");
            for (i, &j) in perm.iter().enumerate() {
                println!("  {} -> {}", a.label(i), b.label(j));
            }
            0
        }
        Ok(None) => {
            println!("isomorphic: no");
            0
        }
        Err(e) => {
            emit_error(math_error_kind(&e), &e.to_string(), None);
            1
        }
    }
}

// ---------------------------------------------------------------------
// check
// ---------------------------------------------------------------------

fn cmd_check(text: &str, tolerance: f64) -> u8 {
    let ast = match parse_or_report(text) {
        Ok(a) => a,
        Err(code) => return code,
    };
    println!("expression: {}", ast.render());

    if let CatExpr::Gauge2(inner) = &ast {
        check_gauged(inner, tolerance)
    } else {
        let md = match eval_category(&ast, tolerance, "check") {
            Ok(md) => md,
            Err(e) => return report_build_error(&e),
        };
        println!("section: modular data (rank {})", md.rank());
        let report = validate_modular(&md);
        let mut ok = true;
        for c in &report.checks {
            ok &= c.passed;
            print_modular_check(c.name, c.passed, c.residual, c.detail.as_deref());
        }
        finish_report(ok)
    }
}

/// Invariant suite for a gauged expression: base modular data, gauged
/// ring axioms, agreement of the two independent hat-sector
/// multiplicity formulas, the congruence-matrix identity, and the
/// global-dimension identity.
fn check_gauged(inner: &CatExpr, tolerance: f64) -> u8 {
    let md = match eval_category(inner, tolerance, "gauge2") {
        Ok(md) => md,
        Err(e) => return report_build_error(&e),
    };
    let mut ok = true;

    println!("section: base modular data (rank {})", md.rank());
    let report = validate_modular(&md);
    for c in &report.checks {
        ok &= c.passed;
        print_modular_check(c.name, c.passed, c.residual, c.detail.as_deref());
    }

    let sqrt = SqrtTwistChoice::principal(&md);
    let ring = match gauged_fusion_with(&md, &sqrt, tolerance) {
        Ok(r) => r,
        Err(e) => {
            emit_error(math_error_kind(&e), &e.to_string(), None);
            return 1;
        }
    };
    println!("section: gauged ring (rank {})", ring.rank());
    let ring_report = validate_ring(&ring);
    for c in &ring_report.checks {
        ok &= c.passed;
        match c.detail.as_deref() {
            Some(d) => println!("check {}: {} ({d})", c.name, if c.passed { "pass" } else { "FAIL" }),
            None => println!("check {}: {}", c.name, if c.passed { "pass" } else { "FAIL" }),
        }
    }

    match check_hat_oracles(&md, &sqrt, tolerance) {
        Ok(agreement_ok) => ok &= agreement_ok,
        Err(e) => {
            emit_error(math_error_kind(&e), &e.to_string(), None);
            return 1;
        }
    }

    ok &= check_dimension_identity(&md, &ring);
    finish_report(ok)
}

/// Compares the closed-form and congruence-matrix hat multiplicities on
/// every admissible triple, then checks the matrix identity
/// `P T̂^{1/2} = T̂^{-1/2} S^{-1} T̂^{-2} S`.
fn check_hat_oracles(
    md: &ModularData64,
    sqrt: &SqrtTwistChoice<f64>,
    tolerance: f64,
) -> Result<bool, mtc::Error> {
    let r = md.rank();
    let mut triples = 0u64;
    let mut mismatches = 0u64;
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                for ex in Sign::BOTH {
                    for ey in Sign::BOTH {
                        for ez in Sign::BOTH {
                            let a = mult_case3(md, sqrt, x, ex, y, ey, z, ez, tolerance)?;
                            let b = mult_case3_p(md, x, ex, y, ey, z, ez, tolerance)?;
                            triples += 1;
                            if a != b {
                                mismatches += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    let agree = mismatches == 0;
    if agree {
        println!("check hat-oracle-agreement: pass ({triples} triples)");
    } else {
        println!("check hat-oracle-agreement: FAIL ({mismatches} of {triples} triples differ)");
    }

    let ds = derived_scalars(md)?;
    let p = p_matrix(md, &ds, sqrt);
    let half = half_t_hat(&ds, sqrt);
    let left = p.mul_diag(&half);
    let inv_half: Vec<_> = half.iter().map(|h| h.conj()).collect();
    let inv_that2: Vec<_> = ds.t_hat.iter().map(|t| (t * t).conj()).collect();
    let right = CMat::diag_mul(&inv_half, &md.s.dagger().mul_diag(&inv_that2)).mul(&md.s);
    let residual = left.max_abs_diff(&right);
    let identity_ok = residual <= tol::MATRIX_RESIDUAL;
    print_modular_check("congruence-matrix-identity", identity_ok, residual, None);
    Ok(agree && identity_ok)
}

/// `Σ fpdim² = 4 D²`: the gauged ring's global dimension against the
/// base category's.
fn check_dimension_identity(md: &ModularData64, ring: &FusionRing) -> bool {
    match (fp_dims::<f64>(ring), derived_scalars(md)) {
        (Ok(dims), Ok(ds)) => {
            let total: f64 = dims.iter().map(|d| d * d).sum();
            let expected = 4.0 * ds.global_dim * ds.global_dim;
            let residual = (total - expected).abs() / expected;
            let ok = residual <= tol::DIM_IDENTITY;
            print_modular_check("global-dimension-identity", ok, residual, None);
            ok
        }
        (Err(e), _) | (_, Err(e)) => {
            print_modular_check("global-dimension-identity", false, f64::NAN, Some(&e.to_string()));
            false
        }
    }
}
