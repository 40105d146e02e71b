use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclecensus::census::{census_graph_with, census_outerplanar, ratio, RatioDirection};
use cyclecensus::exec::Jobs;
use cyclecensus::families::{Family, FamilySpec};
use cyclecensus::graph::cycle_census_bruteforce_with;
use cyclecensus::recognition::classify_claw_free_k4_free_with;
use cyclecensus::verify::{divergence_sweep, param_range, run_suite, Suite, SuiteConfig};
use cyclecensus::{Budget, CycleCensus, Error, Graph, OuterplanarGraph};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Exact odd/even cycle counts for outerplanar graphs.
#[derive(Parser, Debug)]
#[command(name = "cyclecensus", version)]
struct Cli {
    /// Do not print the timestamp line on stderr.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Worker threads for suites and sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a family member as boundary + chords JSON.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        param: usize,
        /// Attach set for S, e.g. 0,1,3,5.
        #[arg(long, value_delimiter = ',')]
        attach: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write DOT to this path (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Count odd and even cycles of a graph read from JSON.
    Census {
        /// Input file, `-` for stdin.
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Dp)]
        engine: Engine,
        /// Add 6-significant-digit decimals next to exact ratios.
        #[arg(long)]
        approx: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; reports as JSON lines, then a summary.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write reports here; the summary still goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a claw-free 2-connected K4-minor-free graph.
    Classify {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form ratio table for R, L, H or T as CSV.
    Sweep {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Dp,
    Oracle,
    Both,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if e.is_budget() { EXIT_BUDGET } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::usage(e.to_string())
    }
}

type CliResult = Result<u8, Failure>;

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.no_timestamp {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        eprintln!("# cyclecensus {} started at unix time {secs}", env!("CARGO_PKG_VERSION"));
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let budget = Budget::from_env()?;
    let jobs = Jobs::from_count(cli.jobs);
    match cli.command {
        Command::Gen { family, param, attach, out, dot } => {
            check_output(out.as_deref())?;
            check_output(dot.as_deref())?;
            cmd_gen(family, param, &attach, out.as_deref(), dot.as_deref())
        }
        Command::Census { input, engine, approx, out } => {
            check_output(out.as_deref())?;
            cmd_census(&input, engine, approx, out.as_deref(), &budget)
        }
        Command::Verify { suite, count, seed, out } => {
            check_output(out.as_deref())?;
            let config = SuiteConfig { count, seed, jobs, budget };
            cmd_verify(suite, &config, out.as_deref())
        }
        Command::Classify { input, out } => {
            check_output(out.as_deref())?;
            cmd_classify(&input, out.as_deref(), &budget)
        }
        Command::Sweep { family, from, to, step, out } => {
            check_output(out.as_deref())?;
            cmd_sweep(family, from, to, step, jobs, out.as_deref())
        }
    }
}

/// Fails early when an output path cannot possibly be written.
fn check_output(path: Option<&Path>) -> Result<(), Failure> {
    let Some(path) = path.filter(|p| *p != Path::new("-")) else {
        return Ok(());
    };
    if path.is_dir() {
        return Err(Failure::usage(format!("{} is a directory", path.display())));
    }
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() && !dir.is_dir() => Err(Failure::usage(format!(
            "directory {} does not exist",
            dir.display()
        ))),
        _ => Ok(()),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path.filter(|p| *p != Path::new("-")) {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }
}

enum Input {
    Outerplanar(OuterplanarGraph),
    Graph(Graph),
}

impl Input {
    fn graph(&self) -> Graph {
        match self {
            Input::Outerplanar(og) => og.to_graph(),
            Input::Graph(g) => g.clone(),
        }
    }
}

/// Accepts `{"boundary", "chords"}` or `{"n", "edges"}`.
fn parse_input(text: &str) -> Result<Input, Failure> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Failure::usage(format!("parse error: {e}")))?;
    let parse_err = |e: serde_json::Error| Failure::usage(format!("parse error: {e}"));
    if value.get("boundary").is_some() {
        Ok(Input::Outerplanar(serde_json::from_value(value).map_err(parse_err)?))
    } else if value.get("n").is_some() {
        Ok(Input::Graph(serde_json::from_value(value).map_err(parse_err)?))
    } else {
        Err(Failure::usage(
            "parse error: expected {\"boundary\", \"chords\"} or {\"n\", \"edges\"}",
        ))
    }
}

fn to_json_line(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_gen(
    family: Family,
    param: usize,
    attach: &[usize],
    out: Option<&Path>,
    dot: Option<&Path>,
) -> CliResult {
    if !attach.is_empty() && family != Family::S {
        return Err(Failure::usage("--attach only applies to family S"));
    }
    let spec = FamilySpec::new(family, param, attach)?;
    let og = spec.generate()?;
    emit(out, &to_json_line(&og))?;
    if let Some(dot) = dot {
        emit(Some(dot), &og.to_dot())?;
    }
    Ok(0)
}

fn census_json(census: &CycleCensus, approx: bool) -> Value {
    let oe = ratio(census, RatioDirection::OddOverEven);
    let eo = ratio(census, RatioDirection::EvenOverOdd);
    let mut v = json!({
        "odd": census.odd.to_string(),
        "even": census.even.to_string(),
        "ratio_oe": oe.to_string(),
        "ratio_eo": eo.to_string(),
    });
    if approx {
        v["ratio_oe_approx"] = Value::String(oe.to_decimal(6));
        v["ratio_eo_approx"] = Value::String(eo.to_decimal(6));
    }
    v
}

fn cmd_census(
    input: &Path,
    engine: Engine,
    approx: bool,
    out: Option<&Path>,
    budget: &Budget,
) -> CliResult {
    let parsed = parse_input(&read_input(input)?)?;
    let dp = || -> Result<CycleCensus, Failure> {
        Ok(match &parsed {
            Input::Outerplanar(og) => census_outerplanar(og),
            Input::Graph(g) => census_graph_with(g, budget)?,
        })
    };
    let oracle = || -> Result<CycleCensus, Failure> {
        Ok(cycle_census_bruteforce_with(&parsed.graph(), budget)?.without_lengths())
    };
    let (report, code) = match engine {
        Engine::Dp => {
            let mut v = census_json(&dp()?, approx);
            v["engine"] = json!("dp");
            (v, 0)
        }
        Engine::Oracle => {
            let mut v = census_json(&oracle()?, approx);
            v["engine"] = json!("oracle");
            (v, 0)
        }
        Engine::Both => {
            let (fast, slow) = (dp()?, oracle()?);
            let agree = fast.same_counts(&slow);
            let mut v = census_json(&fast, approx);
            v["engine"] = json!("both");
            v["match"] = json!(agree);
            if !agree {
                v["dp"] = json!({"odd": fast.odd.to_string(), "even": fast.even.to_string()});
                v["oracle"] = json!({"odd": slow.odd.to_string(), "even": slow.even.to_string()});
                eprintln!("mismatch: dp {fast} vs oracle {slow}");
            }
            (v, if agree { 0 } else { EXIT_FAILURE })
        }
    };
    emit(out, &to_json_line(&report))?;
    Ok(code)
}

fn cmd_verify(suite: Suite, config: &SuiteConfig, out: Option<&Path>) -> CliResult {
    let run = run_suite(suite, config);
    let lines: String = run.reports.iter().map(to_json_line).collect();
    let summary = to_json_line(&run.summary);
    match out {
        Some(path) => {
            emit(Some(path), &lines)?;
            emit(None, &summary)?;
        }
        None => emit(None, &(lines + &summary))?,
    }
    Ok(if run.summary.failed > 0 { EXIT_FAILURE } else { 0 })
}

fn cmd_classify(input: &Path, out: Option<&Path>, budget: &Budget) -> CliResult {
    let g = parse_input(&read_input(input)?)?.graph();
    let classification = classify_claw_free_k4_free_with(&g, budget);
    emit(out, &to_json_line(&classification))?;
    Ok(0)
}

fn cmd_sweep(
    family: Family,
    from: usize,
    to: usize,
    step: usize,
    jobs: Jobs,
    out: Option<&Path>,
) -> CliResult {
    let params = param_range(from, to, step)?;
    let table = divergence_sweep(family, &params, jobs)?;
    emit(out, &table.to_csv())?;
    if !table.all_dp_agree() {
        eprintln!("closed form and DP disagree on some row");
        return Ok(EXIT_FAILURE);
    }
    Ok(if table.strictly_increasing { 0 } else { EXIT_FAILURE })
}
