//! Command-line front end: second homology, de Rham dimensions, Satake data,
//! chain matrices and the `su(p, q)` dual vectors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use realflag::forms::{build_basis_b, z_vector, DiagonalVector, Normalization};
use realflag::homology::{
    derham_dim2, h2_classified, h2_from_complex, symplectic_obstruction, HomologyResult,
    RingDescriptor, SymplecticReport,
};
use realflag::linalg::IntMatrix;
use realflag::real_form::{reference_table1, render_table1, table1_diff};
use realflag::satake::{
    arrow_classification, build_satake, hk_decomposition, perp_images, HkDecomposition,
};
use realflag::schubert::{build_complex, build_direct_complex, SignStatus};
use realflag::verify::{run_checks, CheckOutcome};
use realflag::{
    real_form_lookup, CartanType, Error, NodeSet, Params, RealFormDatum, RealFormLabel,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_CROSS_CHECK: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "realflag",
    version,
    about = "Second homology of real flag manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// H_2 by classification and from the cellular complex.
    H2 {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        theta: ThetaArg,
        #[arg(long, default_value = "Z")]
        ring: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dimension of the second de Rham cohomology and its generating cells.
    Derham {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        theta: ThetaArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Satake diagram and the decomposition of h_k.
    Satake {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Boundary matrices d2 and d3.
    Chains {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        theta: ThetaArg,
        /// Complex of the split part, or of the whole form.
        #[arg(long, value_enum, default_value_t = Route::Split)]
        route: Route,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The vectors Z_j for su(p, q).
    Forms {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Regenerate the classification table and compare with the embedded copy.
    Table1 {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the invariant suite on systems of rank at most 4.
    Check {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// Table label such as AI, AIII_1, EII, or OTHER.
    #[arg(long)]
    algebra: String,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Restricted root system for OTHER, e.g. B3.
    #[arg(long = "type")]
    restricted: Option<String>,
}

#[derive(Debug, Args)]
struct ThetaArg {
    /// 1-based simple roots; empty for the maximal flag, `all` for every root.
    #[arg(long, default_value = "")]
    theta: String,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Split,
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H2Report {
    pub algebra: String,
    pub theta: Vec<usize>,
    pub ring: String,
    pub free_rank: usize,
    pub torsion_2: usize,
    pub generators: Vec<String>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerhamReport {
    pub algebra: String,
    pub theta: Vec<usize>,
    pub s: usize,
    pub generators: Vec<String>,
    pub symplectic: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeReport {
    pub algebra: String,
    pub ambient: String,
    pub black: Vec<usize>,
    pub arrows: Vec<(usize, usize)>,
    pub perp_arrows: Vec<(usize, usize)>,
    pub perp_images: Vec<usize>,
    pub sigma_two: Vec<usize>,
    pub hk: HkDecomposition,
    pub diagram: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainsReport {
    pub algebra: String,
    pub theta: Vec<usize>,
    pub system: String,
    pub cells: [Vec<String>; 4],
    pub d2: Vec<Vec<i64>>,
    pub d3: Vec<Vec<i64>>,
    pub signs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormsReport {
    pub algebra: String,
    pub p: usize,
    pub q: usize,
    pub scale_c: String,
    pub z_vectors: Vec<Vec<String>>,
    pub block_form: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub table: String,
    pub differing_lines: Vec<usize>,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub max_rank: usize,
    pub checks: Vec<CheckOutcome>,
    pub passed: usize,
    pub failed: usize,
}

struct Rendered {
    text: String,
    json: String,
    ok: bool,
}

fn render<T: Serialize>(report: &T, text: String, ok: bool) -> anyhow::Result<Rendered> {
    Ok(Rendered {
        text,
        json: serde_json::to_string_pretty(report)? + "\n",
        ok,
    })
}

/// Parses `args`, runs the query and writes the result. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let output = output_args(&cli.command);
    let (format, path) = (output.format, output.out.clone());
    let rendered = match execute(cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            return EXIT_INVALID;
        }
    };
    let body = match format {
        Format::Text => &rendered.text,
        Format::Json => &rendered.json,
    };
    let written = match path {
        Some(p) => std::fs::write(&p, body).with_context(|| format!("writing {}", p.display())),
        None => out.write_all(body.as_bytes()).map_err(Into::into),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e:#}");
        return EXIT_INVALID;
    }
    if rendered.ok {
        EXIT_OK
    } else {
        let _ = writeln!(err, "error: cross-check failed");
        EXIT_CROSS_CHECK
    }
}

fn output_args(c: &Command) -> &OutputArgs {
    match c {
        Command::H2 { output, .. }
        | Command::Derham { output, .. }
        | Command::Satake { output, .. }
        | Command::Chains { output, .. }
        | Command::Forms { output, .. }
        | Command::Table1 { output }
        | Command::Check { output, .. } => output,
    }
}

fn execute(command: Command) -> anyhow::Result<Rendered> {
    match command {
        Command::H2 {
            algebra,
            theta,
            ring,
            ..
        } => {
            let rf = lookup(&algebra)?;
            let theta = parse_theta(&theta.theta, rf.l)?;
            let ring: RingDescriptor = ring.parse()?;
            h2(&rf, theta, ring)
        }
        Command::Derham { algebra, theta, .. } => {
            let rf = lookup(&algebra)?;
            let theta = parse_theta(&theta.theta, rf.l)?;
            derham(&rf, theta)
        }
        Command::Satake { algebra, .. } => satake(&algebra),
        Command::Chains {
            algebra,
            theta,
            route,
            ..
        } => {
            let rf = lookup(&algebra)?;
            let theta = parse_theta(&theta.theta, rf.l)?;
            chains(&rf, theta, route)
        }
        Command::Forms { algebra, p, q, .. } => forms(algebra.as_deref(), p, q),
        Command::Table1 { .. } => table1(),
        Command::Check { max_rank, .. } => check(max_rank),
    }
}

fn lookup(a: &AlgebraArgs) -> anyhow::Result<RealFormDatum> {
    let label: RealFormLabel = a.algebra.parse()?;
    let restricted = a
        .restricted
        .as_deref()
        .map(str::parse::<CartanType>)
        .transpose()?;
    let params = Params {
        rank: a.rank,
        p: a.p,
        q: a.q,
        restricted,
    };
    Ok(real_form_lookup(label, &params)?)
}

fn parse_theta(s: &str, l: usize) -> anyhow::Result<NodeSet> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("all") {
        return Ok(NodeSet::full(l));
    }
    let set = NodeSet::parse_one_based(s).map_err(|e| anyhow!("invalid theta: {e}"))?;
    if let Some(i) = set.iter().find(|&i| i >= l) {
        return Err(Error::IndexOutOfRange {
            index: i + 1,
            rank: l,
        }
        .into());
    }
    Ok(set)
}

fn h2(rf: &RealFormDatum, theta: NodeSet, ring: RingDescriptor) -> anyhow::Result<Rendered> {
    let complex = h2_from_complex(rf, theta, ring)?;
    let classified = match h2_classified(rf, theta, ring) {
        Ok(h) => Some(h),
        Err(Error::ClassificationNotApplicable(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let agree = classified.as_ref().is_none_or(|c| c.same_group(&complex));
    let main: &HomologyResult = classified.as_ref().unwrap_or(&complex);
    let report = H2Report {
        algebra: rf.name(),
        theta: theta.to_one_based(),
        ring: ring.to_string(),
        free_rank: main.free_rank,
        torsion_2: main.torsion_2,
        generators: main.generators.clone().unwrap_or_default(),
        agree,
    };
    let mut t = String::new();
    writeln!(t, "algebra: {}", report.algebra)?;
    writeln!(t, "theta: {theta}")?;
    writeln!(t, "ring: {ring}")?;
    match &classified {
        Some(c) => writeln!(t, "classified: {c}")?,
        None => writeln!(t, "classified: not applicable")?,
    }
    writeln!(t, "complex: {complex}")?;
    writeln!(t, "free rank: {}", report.free_rank)?;
    writeln!(t, "torsion count: {}", report.torsion_2)?;
    writeln!(t, "generators: {}", join_or_none(&report.generators))?;
    writeln!(t, "agree: {agree}")?;
    render(&report, t, agree)
}

fn join_or_none(xs: &[String]) -> String {
    if xs.is_empty() {
        "none".into()
    } else {
        xs.join(", ")
    }
}

fn derham(rf: &RealFormDatum, theta: NodeSet) -> anyhow::Result<Rendered> {
    let s = derham_dim2(rf, theta);
    let generators: Vec<String> = rf
        .sigma_two
        .difference(theta)
        .iter()
        .map(|i| format!("s{}", i + 1))
        .collect();
    let symplectic = match symplectic_obstruction(rf, theta) {
        SymplecticReport::Point => "point".to_string(),
        SymplecticReport::H2Obstruction => "obstructed: H^2 = 0".to_string(),
        SymplecticReport::DegeneracyObstruction { witness } => {
            format!("obstructed: alpha_{} does not have rank 2", witness + 1)
        }
        SymplecticReport::PossiblySymplectic => "possibly symplectic".to_string(),
    };
    let report = DerhamReport {
        algebra: rf.name(),
        theta: theta.to_one_based(),
        s,
        generators,
        symplectic,
    };
    let mut t = String::new();
    writeln!(t, "algebra: {}", report.algebra)?;
    writeln!(t, "theta: {theta}")?;
    writeln!(t, "s = {s}")?;
    writeln!(t, "generators: {}", join_or_none(&report.generators))?;
    writeln!(t, "symplectic: {}", report.symplectic)?;
    render(&report, t, true)
}

fn satake(a: &AlgebraArgs) -> anyhow::Result<Rendered> {
    let label: RealFormLabel = a.algebra.parse()?;
    let params = Params {
        rank: a.rank,
        p: a.p,
        q: a.q,
        restricted: None,
    };
    let sd = build_satake(label, &params)?;
    let rf = match (a.p, a.q, label) {
        (Some(p), _, RealFormLabel::AIII1 | RealFormLabel::AIII2) => {
            real_form_lookup(label, &Params::pq(p, a.q.unwrap_or(p)))
                .or_else(|_| real_form_lookup(label, &Params::rank(sd.restricted_rank)))?
        }
        _ => real_form_lookup(label, &Params::rank(sd.restricted_rank))
            .or_else(|_| real_form_lookup(label, &Params::none()))?,
    };
    let classes = arrow_classification(&sd);
    let one = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| (a + 1, b + 1)).collect::<Vec<_>>();
    let images = perp_images(&sd);
    let hk = hk_decomposition(&sd);
    let report = SatakeReport {
        algebra: sd.name.clone(),
        ambient: sd.ambient.type_name(),
        black: sd.black.to_one_based(),
        arrows: one(&sd.arrows),
        perp_arrows: one(&classes.perp),
        perp_images: images.to_one_based(),
        sigma_two: rf.sigma_two.to_one_based(),
        hk,
        diagram: sd.render(),
    };
    let mut t = report.diagram.clone();
    writeln!(t, "perp arrows restrict to: {images}")?;
    writeln!(t, "sigma_2: {}", rf.sigma_two)?;
    writeln!(
        t,
        "dim h_Im = {}, dim h_arr = {}, dim z(m) = {}",
        hk.dim_h_im, hk.dim_h_arr, hk.dim_z_m
    )?;
    let ok = images == rf.sigma_two;
    render(&report, t, ok)
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
}

fn chains(rf: &RealFormDatum, theta: NodeSet, route: Route) -> anyhow::Result<Rendered> {
    let slice = match route {
        Route::Split => build_complex(rf, theta)?,
        Route::Direct => Some(build_direct_complex(rf, theta)?),
    };
    let Some(slice) = slice else {
        let report = ChainsReport {
            algebra: rf.name(),
            theta: theta.to_one_based(),
            system: "none".into(),
            cells: Default::default(),
            d2: Vec::new(),
            d3: Vec::new(),
            signs: "resolved".into(),
        };
        let mut t = String::new();
        IntMatrix::zeros(0, 0).write_dump(2, &mut t);
        IntMatrix::zeros(0, 0).write_dump(3, &mut t);
        return render(&report, t, true);
    };
    let cells = [0, 1, 2, 3].map(|d| {
        (0..slice.basis(d).len())
            .map(|k| slice.render_cell(d, k))
            .collect::<Vec<_>>()
    });
    let report = ChainsReport {
        algebra: rf.name(),
        theta: theta.to_one_based(),
        system: slice.system.type_name(),
        cells,
        d2: matrix_rows(&slice.d2),
        d3: matrix_rows(&slice.d3),
        signs: match slice.sign_status {
            SignStatus::Resolved => "resolved".into(),
            SignStatus::AmbiguousButIrrelevant => "ambiguous".into(),
        },
    };
    render(&report, slice.dump(), true)
}

fn fractions(v: &DiagonalVector) -> Vec<String> {
    v.0.iter().map(ToString::to_string).collect()
}

fn forms(algebra: Option<&str>, p: usize, q: usize) -> anyhow::Result<Rendered> {
    if let Some(a) = algebra {
        let label: RealFormLabel = a.parse()?;
        if !matches!(label, RealFormLabel::AIII1 | RealFormLabel::AIII2) {
            bail!("the vectors Z_j are only built for su(p,q) (AIII_1, AIII_2)");
        }
    }
    let pkg = build_basis_b(p, q)?;
    let z_vectors: Vec<Vec<String>> = pkg.z_vectors().iter().map(fractions).collect();
    let block_form = (1..p)
        .map(|j| z_vector(p, q, j, &Normalization::BlockForm).map(|v| fractions(&v)))
        .collect::<Result<Vec<_>, _>>()?;
    let report = FormsReport {
        algebra: format!("su({p},{q})"),
        p,
        q,
        scale_c: pkg.scale_c.to_string(),
        z_vectors,
        block_form,
    };
    let mut t = String::new();
    for (j, v) in report.z_vectors.iter().enumerate() {
        writeln!(t, "Z_{} = ({})", j + 1, v.join(", "))?;
    }
    render(&report, t, true)
}

fn table1() -> anyhow::Result<Rendered> {
    let table = render_table1();
    let diff = table1_diff();
    let report = Table1Report {
        table: table.clone(),
        differing_lines: diff.iter().map(|d| d.0).collect(),
        matches: diff.is_empty(),
    };
    let mut t = table;
    if diff.is_empty() {
        writeln!(t, "diff against embedded copy: 0 lines")?;
    } else {
        writeln!(t, "diff against embedded copy: {} lines", diff.len())?;
        for (n, got, want) in &diff {
            writeln!(t, "line {n}:\n- {want}\n+ {got}")?;
        }
    }
    debug_assert!(!reference_table1().is_empty());
    render(&report, t, report.matches)
}

fn check(max_rank: usize) -> anyhow::Result<Rendered> {
    if !(1..=6).contains(&max_rank) {
        bail!("--max-rank must be between 1 and 6");
    }
    let checks = run_checks(max_rank);
    let passed = checks.iter().filter(|c| c.passed()).count();
    let report = CheckReport {
        max_rank,
        failed: checks.len() - passed,
        passed,
        checks,
    };
    let mut t = String::new();
    for c in &report.checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        writeln!(t, "{status} {} ({} cases)", c.name, c.cases)?;
        for f in c.failures.iter().take(5) {
            writeln!(t, "    {f}")?;
        }
    }
    writeln!(t, "{} passed, {} failed", report.passed, report.failed)?;
    render(&report, t, report.failed == 0)
}
