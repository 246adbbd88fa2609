//! Command-line front end: `compute`, `sweep`, `verify` and `spaces list`.

pub mod csv_out;
pub mod grid;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use bgeom::search::MultiStartConfig;
use bgeom::spaces::PRESETS;
use bgeom::verify::CHECK_IDS;
use bgeom::{
    evaluate, run_check_with, run_suite_with, ConstantId, ConstantRequest, Estimate, NormedSpace, Profile,
    Strategy,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use csv_out::{format_num, write_csv, Cell};
pub use grid::parse_grid;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code when `verify` reports failures, or on I/O errors.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage errors.
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Parser, Debug)]
#[command(name = "bgeom", version, about = "Geometric constants of finite-dimensional normed spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one constant.
    Compute(ComputeArgs),
    /// Evaluate a constant over a grid of alpha or t values.
    Sweep(SweepArgs),
    /// Run the verification suite, or one check with --check.
    Verify(VerifyArgs),
    /// List named spaces and descriptor syntax.
    Spaces {
        #[command(subcommand)]
        action: SpacesAction,
    },
}

#[derive(Subcommand, Debug)]
enum SpacesAction {
    List {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Fast,
    Thorough,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Fast => Profile::Fast,
            ProfileArg::Thorough => Profile::Thorough,
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    /// Space descriptor, e.g. lp:q=2,dim=2 or a preset name (see `spaces list`).
    #[arg(long)]
    space: String,
    /// Constant identifier, e.g. cinj_iso.
    #[arg(long)]
    constant: String,
    #[arg(long)]
    p: Option<f64>,
    /// exact | auto | grid2d:res=..,refine=.. | multistart:starts=..,steps=..,seed=..
    #[arg(long, default_value = "auto")]
    strategy: String,
    /// Seed for multi-start searches whose strategy string does not set one.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    /// Number of scan points for the outer t supremum of cnj_p.
    #[arg(long)]
    t_points: Option<usize>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    /// start:stop:step, both ends included.
    #[arg(long, conflicts_with = "t_grid")]
    alpha_grid: Option<String>,
    /// start:stop:step, both ends included.
    #[arg(long)]
    t_grid: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Repeatable; defaults to the five standard test spaces.
    #[arg(long)]
    space: Vec<String>,
    /// Run a single check instead of the suite.
    #[arg(long)]
    check: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ProfileArg::Thorough)]
    profile: ProfileArg,
    /// Record wall time per check (output is then not reproducible).
    #[arg(long)]
    timing: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parses `argv` (program name first) and runs it. Documents go to `stdout`
/// unless `--out` is given; diagnostics go to `stderr`.
pub fn run_cli<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            } else {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            };
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(a, stdout),
        Command::Sweep(a) => sweep(a, stdout),
        Command::Verify(a) => verify(a, stdout),
        Command::Spaces {
            action: SpacesAction::List { format },
        } => spaces_list(format, stdout).map(|_| EXIT_OK),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn parse_space(s: &str) -> Result<NormedSpace, Failure> {
    s.parse().map_err(|e| usage(format!("invalid space '{s}': {e}")))
}

fn parse_constant(s: &str) -> Result<ConstantId, Failure> {
    s.parse().map_err(|_| {
        let known: Vec<&str> = ConstantId::ALL.iter().map(|c| c.as_str()).collect();
        usage(format!("unknown constant '{s}' (known: {})", known.join(", ")))
    })
}

/// Parses a strategy string; `seed` fills in multi-start seeds not given explicitly.
pub fn parse_strategy(s: &str, seed: u64) -> Result<Strategy, String> {
    let strategy: Strategy = s.parse().map_err(|_| format!("invalid strategy '{s}'"))?;
    Ok(match strategy {
        Strategy::Auto { grid, multistart } => Strategy::Auto {
            grid,
            multistart: MultiStartConfig { seed, ..multistart },
        },
        Strategy::MultiStart(cfg) if !s.contains("seed=") => Strategy::MultiStart(MultiStartConfig { seed, ..cfg }),
        other => other,
    })
}

fn check_params(id: ConstantId, alpha: Option<f64>, t: Option<f64>, p: Option<f64>) -> Result<(), Failure> {
    let given = [("alpha", alpha.is_some(), id.uses_alpha()), ("t", t.is_some(), id.uses_t()), ("p", p.is_some(), id.uses_p())];
    for (name, is_given, used) in given {
        if is_given && !used {
            return Err(usage(format!("constant {id} does not take --{name}")));
        }
        if !is_given && used {
            return Err(usage(format!("constant {id} needs --{name}")));
        }
    }
    Ok(())
}

fn open_out(out: &Option<PathBuf>, stdout: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let mut file = io::BufWriter::new(File::create(path)?);
            f(&mut file)?;
            file.flush()?;
        }
        None => f(stdout)?,
    }
    Ok(())
}

fn core_err(e: bgeom::Error) -> Failure {
    usage(e.to_string())
}

#[derive(Serialize)]
struct ComputeDoc<'a> {
    space: String,
    constant: &'a str,
    params: BTreeMap<&'static str, f64>,
    requested_strategy: String,
    #[serde(flatten)]
    estimate: &'a Estimate,
}

fn compute(a: ComputeArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let c = &a.common;
    let space = parse_space(&c.space)?;
    let id = parse_constant(&c.constant)?;
    let strategy = parse_strategy(&c.strategy, c.seed).map_err(usage)?;
    check_params(id, a.alpha, a.t, c.p)?;
    if a.t_points.is_some() && id != ConstantId::CnjP {
        return Err(usage(format!("constant {id} does not take --t-points")));
    }
    let mut req = ConstantRequest::new(id).strategy(strategy);
    let mut params = BTreeMap::new();
    if let Some(x) = a.alpha {
        req = req.alpha(x);
        params.insert("alpha", x);
    }
    if let Some(x) = c.p {
        req = req.p(x);
        params.insert("p", x);
    }
    if let Some(x) = a.t {
        req = req.t(x);
        params.insert("t", x);
    }
    if let Some(n) = a.t_points {
        req = req.t_grid(n);
    }
    let est = evaluate(&space, &req).map_err(core_err)?;
    let doc = ComputeDoc {
        space: space.to_string(),
        constant: id.as_str(),
        params,
        requested_strategy: strategy.to_string(),
        estimate: &est,
    };
    open_out(&c.out, stdout, |w| match c.format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(&doc).expect("serializes")),
        Format::Csv => write_csv(
            &["value", "witness1", "witness2", "strategy", "exact"],
            &[estimate_cells(&est)],
            w,
        ),
    })?;
    Ok(EXIT_OK)
}

fn estimate_cells(e: &Estimate) -> Vec<Cell> {
    vec![
        Cell::Num(e.value),
        Cell::Text(e.witness.0.to_string()),
        Cell::Text(e.witness.1.to_string()),
        Cell::Text(e.strategy.to_string()),
        Cell::Bool(e.exact),
    ]
}

#[derive(Serialize)]
struct SweepRow<'a> {
    #[serde(flatten)]
    at: BTreeMap<&'static str, f64>,
    #[serde(flatten)]
    estimate: &'a Estimate,
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    space: String,
    constant: &'a str,
    params: BTreeMap<&'static str, f64>,
    requested_strategy: String,
    variable: &'static str,
    rows: Vec<SweepRow<'a>>,
}

fn sweep(a: SweepArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let c = &a.common;
    let space = parse_space(&c.space)?;
    let id = parse_constant(&c.constant)?;
    let strategy = parse_strategy(&c.strategy, c.seed).map_err(usage)?;
    let (var, grid) = match (&a.alpha_grid, &a.t_grid) {
        (Some(g), None) => ("alpha", parse_grid(g).map_err(usage)?),
        (None, Some(g)) => ("t", parse_grid(g).map_err(usage)?),
        _ => return Err(usage("sweep needs exactly one of --alpha-grid or --t-grid")),
    };
    let fixed = |v: Option<f64>, name: &str| if name == var { Some(0.0) } else { v };
    if (var == "alpha" && a.alpha.is_some()) || (var == "t" && a.t.is_some()) {
        return Err(usage(format!("--{var} conflicts with --{var}-grid")));
    }
    check_params(id, fixed(a.alpha, "alpha"), fixed(a.t, "t"), c.p)?;

    let mut params = BTreeMap::new();
    let mut base = ConstantRequest::new(id).strategy(strategy);
    for (name, v) in [("alpha", a.alpha), ("p", c.p), ("t", a.t)] {
        if let Some(x) = v {
            params.insert(name, x);
            base = match name {
                "alpha" => base.alpha(x),
                "p" => base.p(x),
                _ => base.t(x),
            };
        }
    }
    let estimates = grid
        .iter()
        .map(|&x| {
            let req = if var == "alpha" { base.clone().alpha(x) } else { base.clone().t(x) };
            evaluate(&space, &req).map_err(core_err)
        })
        .collect::<Result<Vec<_>, _>>()?;

    open_out(&c.out, stdout, |w| match c.format {
        Format::Json => {
            let doc = SweepDoc {
                space: space.to_string(),
                constant: id.as_str(),
                params: params.clone(),
                requested_strategy: strategy.to_string(),
                variable: var,
                rows: grid
                    .iter()
                    .zip(&estimates)
                    .map(|(&x, e)| SweepRow {
                        at: BTreeMap::from([(var, x)]),
                        estimate: e,
                    })
                    .collect(),
            };
            writeln!(w, "{}", serde_json::to_string_pretty(&doc).expect("serializes"))
        }
        Format::Csv => {
            let rows: Vec<Vec<Cell>> = grid
                .iter()
                .zip(&estimates)
                .map(|(&x, e)| {
                    let mut r = vec![Cell::Num(x)];
                    r.extend(estimate_cells(e));
                    r
                })
                .collect();
            write_csv(&[var, "value", "witness1", "witness2", "strategy", "exact"], &rows, w)
        }
    })?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let descriptors: Vec<String> = if a.space.is_empty() {
        PRESETS.iter().map(|(name, _)| name.to_string()).collect()
    } else {
        a.space.clone()
    };
    let spaces = descriptors.iter().map(|s| parse_space(s)).collect::<Result<Vec<_>, _>>()?;
    let profile: Profile = a.profile.into();

    let results = if let Some(check) = &a.check {
        if !CHECK_IDS.contains(&check.as_str()) {
            return Err(usage(format!("unknown check '{check}' (known: {})", CHECK_IDS.join(", "))));
        }
        let mut params = BTreeMap::new();
        for (name, v) in [("alpha", a.alpha), ("p", a.p), ("q", a.q), ("t", a.t)] {
            if let Some(x) = v {
                params.insert(name.to_string(), x);
            }
        }
        params.insert("seed".to_string(), a.seed as f64);
        let mut out = Vec::new();
        for space in &spaces {
            out.push(run_check_with(check, space, &params, profile, a.timing).map_err(core_err)?);
        }
        out
    } else {
        if a.alpha.is_some() || a.p.is_some() || a.q.is_some() || a.t.is_some() {
            return Err(usage("--alpha/--p/--q/--t need --check"));
        }
        let report = run_suite_with(&spaces, a.seed, profile, a.timing).map_err(core_err)?;
        let failed = report.summary.failed;
        open_out(&a.out, stdout, |w| match a.format {
            Format::Json => writeln!(w, "{}", report.to_json()),
            Format::Csv => write_check_csv(&report.checks, w),
        })?;
        return Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL });
    };

    let failed = results.iter().filter(|r| !r.passed).count();
    open_out(&a.out, stdout, |w| match a.format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(&results).expect("serializes")),
        Format::Csv => write_check_csv(&results, w),
    })?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn write_check_csv(results: &[bgeom::CheckResult], w: &mut dyn Write) -> io::Result<()> {
    let rows: Vec<Vec<Cell>> = results
        .iter()
        .map(|r| {
            vec![
                Cell::Text(r.check_id.clone()),
                Cell::Text(r.space.clone()),
                Cell::Text(serde_json::to_string(&r.params).expect("serializes")),
                Cell::Bool(r.passed),
                Cell::Num(r.slack),
                Cell::Num(r.slack_used),
                Cell::Num(r.runtime_ms as f64),
            ]
        })
        .collect();
    write_csv(
        &["check_id", "space", "params", "passed", "slack", "slack_used", "runtime_ms"],
        &rows,
        w,
    )
}

fn spaces_list(format: Format, stdout: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let list: Vec<BTreeMap<&str, &str>> = PRESETS
                .iter()
                .map(|(name, desc)| BTreeMap::from([("name", *name), ("descriptor", *desc)]))
                .collect();
            writeln!(stdout, "{}", serde_json::to_string_pretty(&list).expect("serializes"))?;
        }
        Format::Csv => {
            let rows: Vec<Vec<Cell>> = PRESETS
                .iter()
                .map(|(n, d)| vec![Cell::Text(n.to_string()), Cell::Text(d.to_string())])
                .collect();
            write_csv(&["name", "descriptor"], &rows, stdout)?;
        }
    }
    Ok(())
}
