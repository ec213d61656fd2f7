//! `hyperpack`: surveys, density tables, verification and figures for
//! circle and horocycle packings.
//!
//! Exit codes: 0 success, 1 invalid input, 2 resource limit, 3 failed
//! verification.

mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperpack::fpgroup::{
    coset_enumerate, GroupError, GroupPresentation, RecordJson, SubgroupRecord, DEFAULT_NODE_BUDGET,
};
use hyperpack::fuchsian::{survey, FuchsianError, OrbifoldSignature, SurveyOptions};
use hyperpack::horocycle::{modular_cover_report, HoroError, HoroballConfig};
use hyperpack::hypgeom::density_spp;
use hyperpack::render::{render_ideal_horoballs, render_turnover, RenderError};

#[derive(Parser, Debug)]
#[command(
    name = "hyperpack",
    version,
    about = "Circle and horocycle packings of hyperbolic surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Torsion-free covers of a planar orbifold at a given index.
    Survey(SurveyArgs),
    /// Densities of the three-circle packings of (p,p,p) turnover covers.
    Density(DensityArgs),
    /// Run the built-in verification checklist.
    Verify(VerifyArgs),
    /// Horocycle packing report for a torsion-free subgroup of PSL(2,Z).
    Horocycle(HorocycleArgs),
    /// Write an SVG figure.
    Render(RenderArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    /// Orbifold signature `h;m1,m2,...`, e.g. "0;2,6,9".
    #[arg(long)]
    signature: String,
    /// Subgroup index.
    #[arg(long)]
    index: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, env = "HYPERPACK_THREADS", default_value_t = 0)]
    threads: usize,
    /// Maximum number of search nodes.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// File for the per-class records.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record format: json (one object per line) or csv.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct DensityArgs {
    /// `p`, `a..b` (inclusive) or `a..b:n` for `n` log-spaced samples.
    #[arg(long)]
    p_range: String,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Table format: csv or json.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Replace a generator image of the (0;2,2,2,3) map, e.g. "a=(1,2,3)".
    #[arg(long)]
    inject_image: Option<String>,
    /// Tolerance for every numeric check, overriding the defaults.
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Args, Debug)]
struct HorocycleArgs {
    /// Subgroup generators as words in b and c, separated by commas.
    #[arg(long, conflicts_with = "record")]
    gens: Option<String>,
    /// JSON record `{"index": n, "generators": [b, c]}` in cycle notation.
    #[arg(long)]
    record: Option<PathBuf>,
    /// Coset limit for enumerating `--gens`.
    #[arg(long, default_value_t = 1_000_000)]
    max_cosets: usize,
    /// Output file for the JSON report (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(subcommand)]
    figure: Figure,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Only svg is supported.
    #[arg(long, value_enum, default_value_t = Format::Svg, global = true)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Figure {
    /// Turnover triangle with its tangent vertex circles, e.g. "2,6,9".
    Turnover {
        #[arg(long)]
        orders: String,
    },
    /// Ideal triangle with horoballs "t,d0,d1" (default: maximal).
    Horoballs {
        #[arg(long, default_value = "1,1,1")]
        config: String,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn group_code(e: &GroupError) -> u8 {
    match e {
        GroupError::ResourceLimit(_) | GroupError::Overflow(_) => 2,
        _ => 1,
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure {
            code: group_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<FuchsianError> for Failure {
    fn from(e: FuchsianError) -> Self {
        let code = match &e {
            FuchsianError::Group(g) => group_code(g),
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<HoroError> for Failure {
    fn from(e: HoroError) -> Self {
        let code = match &e {
            HoroError::Fuchsian(f) => Failure::from(f.clone()).code,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<RenderError> for Failure {
    fn from(e: RenderError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(format!("i/o error: {e}"))
    }
}

/// Writes to stdout, treating a closed pipe as success.
pub fn print_stdout(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print_stdout(text),
    }
    Ok(())
}

fn cmd_survey(args: &SurveyArgs) -> Result<(), Failure> {
    let sig: OrbifoldSignature = args.signature.parse()?;
    if args.node_budget == 0 {
        return Err(Failure::input("--node-budget must be positive"));
    }
    let options = SurveyOptions {
        threads: args.threads,
        node_budget: args.node_budget,
    };
    let result = survey(&sig, args.index, &options)?;
    if let Some(path) = &args.out {
        let body = match args.format {
            Format::Json => result.to_json_lines(),
            Format::Csv => {
                let mut s = String::from("record_id,genus,deck_order,class_length,certificate,generators\n");
                for line in result.lines() {
                    let cert = serde_json::to_value(line.certificate).expect("serializable");
                    s.push_str(&format!(
                        "{},{},{},{},{},\"{}\"\n",
                        line.record_id,
                        line.genus,
                        line.deck_order,
                        line.class_length,
                        cert.as_str().unwrap_or_default(),
                        line.action.generators.join(" ")
                    ));
                }
                s
            }
            Format::Svg => return Err(Failure::input("surveys are written as json or csv")),
        };
        fs::write(path, body)?;
    }
    print_stdout(&format!("{}\n", result.summary()));
    Ok(())
}

/// Parses `p`, `a..b` or `a..b:n`.
fn parse_p_range(text: &str) -> Result<Vec<u64>, Failure> {
    let bad = || Failure::input(format!("bad --p-range {text:?}; expected p, a..b or a..b:n"));
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    let (range, samples) = match text.split_once(':') {
        Some((r, n)) => (r, Some(num(n)?)),
        None => (text, None),
    };
    let (lo, hi) = match range.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let p = num(range)?;
            (p, p)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    if lo < 4 {
        return Err(Failure::input(format!("p = {lo} is too small; need p >= 4")));
    }
    let ps = match samples {
        None => (lo..=hi).collect(),
        Some(0) => return Err(bad()),
        Some(n) => {
            let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
            let mut v: Vec<u64> = (0..n)
                .map(|i| {
                    let f = if n == 1 { 0.0 } else { i as f64 / (n - 1) as f64 };
                    ((a + f * (b - a)).exp().round() as u64).clamp(lo, hi)
                })
                .collect();
            v.dedup();
            v
        }
    };
    Ok(ps)
}

fn cmd_density(args: &DensityArgs) -> Result<(), Failure> {
    let ps = parse_p_range(&args.p_range)?;
    let mut body = String::new();
    match args.format {
        Format::Csv => body.push_str("p,radius,density,gap_to_limit\n"),
        Format::Json => {}
        Format::Svg => return Err(Failure::input("density tables are written as csv or json")),
    }
    for p in ps {
        let report = density_spp(p).map_err(|e| Failure::input(e.to_string()))?;
        match args.format {
            Format::Csv => body.push_str(&format!(
                "{},{:.15},{:.15},{:.6e}\n",
                p,
                report.radius,
                report.density(),
                report.gap_to_limit()
            )),
            _ => {
                body.push_str(&serde_json::to_string(&report).expect("serializable"));
                body.push('\n');
            }
        }
    }
    emit(&args.out, &body)
}

fn read_modular_record(args: &HorocycleArgs) -> Result<SubgroupRecord, Failure> {
    let p = GroupPresentation::modular();
    match (&args.gens, &args.record) {
        (Some(gens), None) => {
            let words = gens
                .split(',')
                .filter(|w| !w.trim().is_empty())
                .map(|w| p.parse_word(w))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(coset_enumerate(&p, &words, args.max_cosets)?)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)?;
            let json: RecordJson =
                serde_json::from_str(&text).map_err(|e| Failure::input(format!("bad record file: {e}")))?;
            Ok(SubgroupRecord::from_json(&p, &json)?)
        }
        _ => Err(Failure::input("give exactly one of --gens or --record")),
    }
}

fn cmd_horocycle(args: &HorocycleArgs) -> Result<(), Failure> {
    let record = read_modular_record(args)?;
    let report = modular_cover_report(&record)?;
    let mut text = serde_json::to_string_pretty(&report).expect("serializable");
    text.push('\n');
    emit(&args.out, &text)
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str, len: usize) -> Result<Vec<T>, Failure> {
    let v = text
        .split(',')
        .map(|s| s.trim().parse::<T>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::input(format!("bad {what} {text:?}")))?;
    if v.len() != len {
        return Err(Failure::input(format!("{what} needs {len} comma-separated values")));
    }
    Ok(v)
}

fn cmd_render(args: &RenderArgs) -> Result<(), Failure> {
    if args.format != Format::Svg {
        return Err(Failure::input("figures are written as svg"));
    }
    let svg = match &args.figure {
        Figure::Turnover { orders } => {
            let o: Vec<u32> = parse_list(orders, "--orders", 3)?;
            render_turnover(o[0], o[1], o[2])?
        }
        Figure::Horoballs { config } => {
            let c: Vec<f64> = parse_list(config, "--config", 3)?;
            let cfg = HoroballConfig::new(c[0], c[1], c[2])?;
            render_ideal_horoballs(&cfg)?
        }
    };
    emit(&args.out, &svg)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Survey(a) => cmd_survey(a),
        Command::Density(a) => cmd_density(a),
        Command::Verify(a) => verify::cmd_verify(a),
        Command::Horocycle(a) => cmd_horocycle(a),
        Command::Render(a) => cmd_render(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
