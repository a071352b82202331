use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use qserre_core::aqbridge::{build_aq_pair, check_qserre};
use qserre_core::uqrep::{check_chevalley_relations, from_spec};
use qserre_core::words::{word_table, WordCount};
use qserre_core::{analyze, scan_grid, scan_point, AnalysisReport, Error, ErrorClass, ModuleSpec, Scalar, ScanRow};

mod pretty;

#[derive(Parser)]
#[command(name = "qserre", version, about = "Exact analysis of U_q(sl2-hat) modules and their q-Serre restrictions")]
struct Cli {
    /// Deformation parameter; a "q" inside the spec JSON takes precedence.
    #[arg(long, global = true, default_value = "2/1", allow_hyphen_values = true)]
    q: String,
    /// Worker threads for scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline for one module spec.
    Analyze {
        /// Spec JSON, inline or as @path.
        #[arg(long)]
        spec: String,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Irreducibility verdicts for V(d, a) over a grid of a.
    Scan {
        #[arg(long)]
        d: u32,
        #[arg(long = "a-from", allow_hyphen_values = true)]
        a_from: String,
        #[arg(long = "a-to", allow_hyphen_values = true)]
        a_to: String,
        #[arg(long = "a-step", default_value = "1/1")]
        a_step: String,
    },
    /// Irreducible word counts up to a length.
    Words {
        #[arg(long = "max-len")]
        max_len: usize,
    },
    /// Chevalley and q-Serre relation reports for one spec.
    Relations {
        #[arg(long)]
        spec: String,
    },
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.class() {
            ErrorClass::Input => 2,
            ErrorClass::Precondition => 3,
            ErrorClass::Internal => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn parse_scalar(s: &str) -> Result<Scalar, Failure> {
    s.parse::<Scalar>().map_err(Failure::from)
}

fn load_spec(arg: &str, q: &str) -> Result<ModuleSpec, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    let mut value: Value = serde_json::from_str(&text).map_err(|e| input_error(format!("malformed spec JSON: {e}")))?;
    let obj = value.as_object_mut().ok_or_else(|| input_error("spec must be a JSON object"))?;
    if !obj.contains_key("q") {
        parse_scalar(q)?;
        obj.insert("q".into(), Value::String(q.to_string()));
    }
    let spec: ModuleSpec = serde_json::from_value(value).map_err(|e| input_error(format!("invalid spec: {e}")))?;
    spec.validate()?;
    Ok(spec)
}

/// Writes to stdout; a closed pipe is not an error.
fn write_out(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure { code: 4, message: e.to_string() }),
        _ => Ok(()),
    }
}

fn emit<T: Serialize>(value: &T, pretty: impl FnOnce(&T) -> String, as_text: bool) -> Result<(), Failure> {
    if as_text {
        return write_out(&pretty(value));
    }
    let text = serde_json::to_string(value).map_err(|e| Failure { code: 4, message: e.to_string() })?;
    write_out(&(text + "\n"))
}

fn cmd_analyze(spec: &ModuleSpec, timing: bool) -> Result<AnalysisReport, Failure> {
    let started = Instant::now();
    let mut report = analyze(spec)?;
    if timing {
        report.timing_ms = Some(started.elapsed().as_millis());
    }
    Ok(report)
}

fn cmd_scan(
    d: u32,
    from: &Scalar,
    to: &Scalar,
    step: &Scalar,
    q: &Scalar,
    jobs: usize,
) -> Result<Vec<ScanRow>, Failure> {
    let grid = scan_grid(from, to, step)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure { code: 4, message: e.to_string() })?;
    Ok(pool.install(|| grid.par_iter().map(|a| scan_point(d, a, q)).collect()))
}

fn cmd_relations(spec: &ModuleSpec) -> Result<Value, Failure> {
    let rep = from_spec(spec)?;
    let chevalley = check_chevalley_relations(&rep);
    let qserre = match build_aq_pair(&rep) {
        Ok(pair) => Some(check_qserre(&pair.a, &pair.astar, &pair.q)),
        Err(e) if e.class() == ErrorClass::Precondition => None,
        Err(e) => return Err(e.into()),
    };
    let all_hold = chevalley.all_hold() && qserre.as_ref().is_none_or(|r| r.all_hold());
    Ok(json!({ "chevalley": chevalley, "qserre": qserre, "all_hold": all_hold }))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { spec, timing } => {
            let report = cmd_analyze(&load_spec(&spec, &cli.q)?, timing)?;
            emit(&report, pretty::analysis, cli.pretty)
        }
        Command::Scan { d, a_from, a_to, a_step } => {
            let q = parse_scalar(&cli.q)?;
            let rows =
                cmd_scan(d, &parse_scalar(&a_from)?, &parse_scalar(&a_to)?, &parse_scalar(&a_step)?, &q, cli.jobs)?;
            emit(&rows, |r| pretty::scan(r), cli.pretty)
        }
        Command::Words { max_len } => {
            let table: Vec<WordCount> = word_table(max_len)?;
            emit(&table, |t| pretty::words(t), cli.pretty)
        }
        Command::Relations { spec } => {
            let value = cmd_relations(&load_spec(&spec, &cli.q)?)?;
            emit(&value, |v| format!("{v:#}\n"), cli.pretty)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
