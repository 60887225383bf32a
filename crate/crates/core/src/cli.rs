//! Command-line front end. Exit codes: 0 success, 1 a verification check
//! failed, 2 bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::arcs::Arc;
use crate::circle::{CircleModel, InteriorCount};
use crate::completion::{compute_k0_completed, f_matrix, verify_f_oracle, CompletionModel};
use crate::error::{Error, Result};
use crate::k0::{class_same_segment, compute_k0_cn, EulerOracle};
use crate::linalg::GroupPresentation;
use crate::render::render_svg;
use crate::tilting::StandardTilting;

#[derive(Debug, Parser)]
#[command(
    name = "arck0",
    version,
    about = "Grothendieck groups of discrete cluster categories of type A"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// K₀ of the category with n accumulation points, from exchange relations.
    K0,
    /// K₀ of the completion, as the cokernel of f.
    #[command(name = "k0-completed")]
    K0Completed,
    /// Brute-force Euler-relation quotient over a window of arcs.
    Oracle,
    /// Cross-check the completion against the oracle and run the invariant suite.
    Verify,
    /// Exchange pair of one arc of the standard tilting set.
    Exchange,
    /// SVG arc diagram of the standard tilting set, or of the arcs given by --arc.
    Render,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Number of accumulation points.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Leapfrog truncation depth.
    #[arg(long, global = true, default_value_t = 4)]
    pub depth: usize,
    /// Offsets in [-window, window] are kept by the oracle and drawn as ticks.
    #[arg(long, global = true, default_value_t = 6)]
    pub window: i64,
    /// Anchor offset per segment, comma separated (default all 0).
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub anchors: Option<Vec<i64>>,
    /// Arc name such as X3 or L2[5], or JSON like [[0,-2],[0,0]] (render also
    /// takes a JSON list of arcs).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub arc: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// The artifact a command produced and whether its checks passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            passed: true,
        }
    }
}

/// One named check of the `verify` suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

impl Options {
    fn n(&self) -> usize {
        self.n as usize
    }

    fn anchor_offsets(&self) -> Result<Vec<i64>> {
        match &self.anchors {
            None => Ok(vec![0; self.n()]),
            Some(a) if a.len() == self.n() => Ok(a.clone()),
            Some(a) => Err(Error::LengthMismatch {
                expected: self.n(),
                got: a.len(),
            }),
        }
    }

    fn tilting(&self) -> Result<StandardTilting> {
        StandardTilting::build(self.n(), &self.anchor_offsets()?, self.depth)
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

fn presentation_output(p: &GroupPresentation, format: Format) -> String {
    match format {
        Format::Json => to_json(p),
        Format::Text => p.to_string(),
    }
}

/// Looks up `text` as a name in `t`, falling back to a JSON arc.
fn resolve_arc(t: &StandardTilting, text: &str) -> Result<usize> {
    if let Ok(i) = t.index_of(text) {
        return Ok(i);
    }
    let arc: Arc = serde_json::from_str(text).map_err(|_| Error::UnknownName(text.to_string()))?;
    t.index_of_arc(&arc)
        .ok_or_else(|| Error::Invalid(format!("{arc} is not in the tilting set")))
}

fn parse_arc_list(model: CircleModel, text: &str) -> Result<Vec<Arc>> {
    let arcs: Vec<Arc> = serde_json::from_str::<Arc>(text)
        .map(|a| vec![a])
        .or_else(|_| serde_json::from_str::<Vec<Arc>>(text))
        .map_err(|e| Error::Invalid(format!("cannot parse arcs from {text:?}: {e}")))?;
    for a in &arcs {
        let (p, q) = a.endpoints();
        model.check(p)?;
        model.check(q)?;
    }
    Ok(arcs)
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let o = &cli.opts;
    match cli.command {
        Command::K0 => {
            let r = compute_k0_cn(o.n(), &o.anchor_offsets()?, o.depth)?;
            Ok(Outcome::ok(presentation_output(&r.presentation, o.format)))
        }
        Command::K0Completed => Ok(Outcome::ok(presentation_output(
            &compute_k0_completed(o.n())?,
            o.format,
        ))),
        Command::Oracle => {
            let oracle = EulerOracle::new(o.n(), o.window)?;
            Ok(Outcome::ok(match o.format {
                Format::Json => to_json(oracle.presentation()),
                Format::Text => format!(
                    "{} ({} arcs, {} relations, window {})",
                    oracle.presentation(),
                    oracle.arcs().len(),
                    oracle.relation_count(),
                    o.window
                ),
            }))
        }
        Command::Verify => {
            let checks = invariant_suite(o.n(), o.window, o.depth)?;
            let passed = checks.iter().all(|c| c.passed);
            let output = match o.format {
                Format::Json => to_json(&json!({ "passed": passed, "checks": checks })),
                Format::Text => {
                    let mut s = String::new();
                    for c in &checks {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        let _ = match c.detail.as_str() {
                            "" => writeln!(s, "{status} {}", c.name),
                            d => writeln!(s, "{status} {}: {d}", c.name),
                        };
                    }
                    s.trim_end().to_string()
                }
            };
            Ok(Outcome { output, passed })
        }
        Command::Exchange => {
            let text = o
                .arc
                .as_deref()
                .ok_or_else(|| Error::Invalid("exchange needs --arc".into()))?;
            let t = o.tilting()?;
            let i = resolve_arc(&t, text)?;
            let pair = t.exchange_pair(i)?;
            Ok(Outcome::ok(match o.format {
                Format::Json => to_json(&json!({ "name": t.label(i), "pair": pair })),
                Format::Text => {
                    let list =
                        |v: &[Arc]| v.iter().map(Arc::to_string).collect::<Vec<_>>().join(" + ");
                    format!(
                        "{} = {}\n  m*   = {}\n  B_m* = {}\n  B_m  = {}",
                        t.label(i),
                        pair.m,
                        pair.m_star,
                        list(&pair.b_m_star),
                        list(&pair.b_m)
                    )
                }
            }))
        }
        Command::Render => {
            let model = CircleModel::new(o.n())?;
            let arcs = match &o.arc {
                Some(text) => parse_arc_list(model, text)?,
                None => o.tilting()?.arcs().to_vec(),
            };
            Ok(Outcome::ok(render_svg(model, &arcs, o.window)))
        }
    }
}

/// Completion cross-check plus structural invariants, at the given sizes.
pub fn invariant_suite(n: usize, window: i64, depth: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let report = verify_f_oracle(n, window)?;
    out.push(check(
        "completion cokernel matches oracle",
        report.matches,
        format!("formula {} / oracle {}", report.expected, report.oracle),
    ));
    out.push(check(
        "kernel generators have non-zero class",
        report.generators_nonzero,
        format!("{} generators", report.generators.len()),
    ));
    let torsion_ok = report.expected.free_rank == n
        && report.expected.invariant_factors.len() == n - 1
        && report
            .expected
            .invariant_factors
            .iter()
            .all(|d| *d == 2.into());
    out.push(check(
        "completed group shape",
        torsion_ok,
        report.expected.to_string(),
    ));

    let cm = CompletionModel::new(n)?;
    let f = f_matrix(n).transpose();
    let columns_ok = (1..=n).all(|i| {
        let c = class_same_segment(2 * n, &cm.kernel_generator_arc(i).expect("in range"))
            .expect("n >= 1 host");
        f.row(i - 1)
            .iter()
            .zip(&c.coefficients)
            .all(|(x, &y)| *x == y.into())
    });
    out.push(check(
        "f columns are kernel generator classes",
        columns_ok,
        "",
    ));

    let r = compute_k0_cn(n, &vec![0; n], depth)?;
    out.push(check(
        "exchange-relation group is free of rank n",
        r.presentation == GroupPresentation::free(n),
        r.presentation.to_string(),
    ));

    let oracle = EulerOracle::new(n, window)?;
    out.push(check(
        "oracle group is free of rank n",
        *oracle.presentation() == GroupPresentation::free(n),
        oracle.presentation().to_string(),
    ));
    let q = oracle.quotient();
    let mut sigma_ok = true;
    let mut parity_ok = true;
    for (a, c) in oracle.class_map() {
        if let Some(s) = oracle.class_of(&a.suspend(1)) {
            sigma_ok &= q.add(&c, &s).is_zero();
        }
        if let InteriorCount::Finite(k) = a.interior_count() {
            parity_ok &= c.is_zero() == (k % 2 == 0);
        }
    }
    out.push(check("suspension acts as -1", sigma_ok, ""));
    out.push(check(
        "same-segment class vanishes iff interior is even",
        parity_ok,
        "",
    ));

    let t = StandardTilting::build(n, &vec![0; n], depth)?;
    let mut mutation_ok = t.is_non_crossing();
    for i in t.interior_indices() {
        let once = t.mutate(i)?;
        mutation_ok &= once.is_non_crossing() && once.mutate(i)? == t;
    }
    out.push(check(
        "standard set and its mutations are non-crossing; mutation is an involution",
        mutation_ok,
        format!("{} arcs", t.len()),
    ));
    Ok(out)
}

/// Parses `args` (program name first), runs, writes the artifact and
/// returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut text = outcome.output;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    let written = match &cli.opts.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    if outcome.passed {
        0
    } else {
        1
    }
}
