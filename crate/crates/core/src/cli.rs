//! Command-line front end. Exit codes: 0 pass, 1 theorem violation, 2 usage
//! or input error.

use std::fs::File;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::enumerate::{
    check_cap, enumeration_cap, graphs_in_range, mask_count, stream_graph6, Connectivity, GraphFilter,
};
use crate::graph::{parse_edge_list, parse_graph6, Graph};
use crate::parallel::Execution;
use crate::resistance::{analyze, complete_closed_forms, cycle_closed_forms};
use crate::verify::{run_suite_with, Suite, VerificationRecord, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ohmcurve",
    version,
    about = "Resistance distance, Kirchhoff index and resistance curvature toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a JSON resistance report for each input graph.
    Analyze(AnalyzeArgs),
    /// Run theorem checks over enumerated or streamed graphs.
    Verify(VerifyArgs),
    /// Print every labeled graph on n vertices as graph6.
    Enumerate(EnumerateArgs),
    /// Print the closed-form values for the cycle and complete graph.
    ClosedForms(ClosedFormsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    Any,
    Connected,
    #[value(name = "two_connected", alias = "two-connected")]
    TwoConnected,
}

impl From<FilterArg> for Connectivity {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Any => Connectivity::Any,
            FilterArg::Connected => Connectivity::Connected,
            FilterArg::TwoConnected => Connectivity::TwoConnected,
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Input file; standard input when omitted.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suites to run: eccentricity, two-connected, curvature, kirchhoff, closed-forms, all.
    #[arg(long = "suite", default_value = "all", value_parser = Suite::parse_list)]
    pub suites: Vec<Vec<Suite>>,
    /// Vertex count N or inclusive range A..B.
    #[arg(long = "n", value_parser = parse_n_range)]
    pub n: Option<RangeInclusive<usize>>,
    /// graph6 stream to verify instead of enumerating ("-" for standard input).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Skip malformed graph6 lines instead of failing.
    #[arg(long)]
    pub lenient: bool,
    /// Evaluate every graph exactly, without the float screen.
    #[arg(long)]
    pub exact_only: bool,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, value_enum, default_value = "any")]
    pub filter: FilterArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClosedFormsArgs {
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

pub fn parse_n_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid vertex count {t:?}"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

/// Failure that maps to an exit code; the message goes to the error stream.
#[derive(Debug)]
struct Failure(i32, String);

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure(EXIT_USAGE, msg.into())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("I/O error: {e}"))
    }
}

fn open_output<'a>(path: &Option<PathBuf>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, Failure> {
    Ok(match path {
        Some(p) => {
            Box::new(io::BufWriter::new(File::create(p).map_err(|e| {
                Failure::usage(format!("cannot create {}: {e}", p.display()))
            })?))
        }
        None => Box::new(stdout),
    })
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            File::open(p)
                .map_err(|e| Failure::usage(format!("cannot open {}: {e}", p.display())))?
                .read_to_string(&mut text)?;
        }
        _ => {
            stdin.read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(&a, stdin, stdout),
        Command::Verify(v) => cmd_verify(&v, stdin, stdout),
        Command::Enumerate(e) => cmd_enumerate(&e, stdout),
        Command::ClosedForms(c) => cmd_closed_forms(&c, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "ohmcurve: {msg}");
            code
        }
    }
}

fn cmd_analyze(args: &AnalyzeArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let text = read_input(&args.input, stdin)?;
    let graphs: Vec<(usize, Result<Graph, String>)> = match args.format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| (i + 1, parse_graph6(l).map_err(|e| e.to_string())))
            .collect(),
        Format::Edgelist if text.trim().is_empty() => Vec::new(),
        Format::Edgelist => vec![(1, parse_edge_list(&text).map_err(|e| e.to_string()))],
    };
    let mut out = open_output(&args.output, stdout)?;
    for (line, g) in graphs {
        let g = g.map_err(|e| Failure::usage(format!("line {line}: {e}")))?;
        let report = analyze(&g).map_err(|e| Failure::usage(format!("line {line}: {e}")))?;
        writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let suites: Vec<Suite> = args.suites.iter().flatten().copied().collect();
    let stream: Option<Vec<Graph>> = match &args.input {
        None => None,
        Some(_) => {
            let text = read_input(&args.input, stdin)?;
            let mut graphs = Vec::new();
            let mut it = stream_graph6(text.as_bytes(), GraphFilter::any(), !args.lenient);
            for g in it.by_ref() {
                graphs.push(g.map_err(|e| Failure::usage(e.to_string()))?);
            }
            Some(graphs)
        }
    };
    let n_range = match (&args.n, &stream) {
        (Some(r), _) => r.clone(),
        (None, Some(_)) => 3..=3,
        (None, None) => {
            return Err(Failure::usage(
                "verify needs --n N (or A..B) or a graph6 --input stream",
            ))
        }
    };
    if stream.is_some() && args.n.is_some() {
        log::warn!("--n is ignored for stream populations except as the closed-form range");
    }

    let execution = match args.jobs {
        Some(1) => Execution::Sequential,
        _ => Execution::Parallel,
    };
    let opts = VerifyOptions {
        exact_only: args.exact_only,
        execution,
        cap: enumeration_cap(),
    };

    let mut out = open_output(&args.output, stdout)?;
    let mut write_err: Option<io::Error> = None;
    configure_jobs(args.jobs)?;
    let result = run_suite_with(n_range, &suites, stream.as_deref(), &opts, |rec| {
        if write_err.is_none() {
            if let Err(e) = writeln!(out, "{}", rec.to_json_line()).and_then(|_| out.flush()) {
                write_err = Some(e);
            }
        }
    });
    let records = result.map_err(|e| {
        let hint = match e {
            crate::verify::VerifyError::Enumeration(_) => {
                " (set OHMCURVE_CAP to raise the cap, or pipe graph6 from a generator via --input -)"
            }
            _ => "",
        };
        Failure::usage(format!("{e}{hint}"))
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    Ok(exit_code(&records))
}

fn exit_code(records: &[VerificationRecord]) -> i32 {
    if records.iter().all(VerificationRecord::passed) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

/// Sizes the worker pool. The global pool can only be configured once per
/// process; later calls keep the first size.
fn configure_jobs(jobs: Option<usize>) -> Result<(), Failure> {
    match jobs {
        Some(0) => Err(Failure::usage("--jobs must be at least 1")),
        #[cfg(feature = "parallel")]
        Some(k) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
                log::debug!("worker pool already configured: {e}");
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

fn cmd_enumerate(args: &EnumerateArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let cap = enumeration_cap();
    check_cap(args.n, cap).map_err(|e| Failure::usage(e.to_string()))?;
    let filter = GraphFilter::with(args.filter.into());
    let mut out = io::BufWriter::new(open_output(&args.output, stdout)?);
    for (_, g) in graphs_in_range(args.n, 0..mask_count(args.n), filter) {
        writeln!(out, "{}", g.to_graph6())?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_closed_forms(args: &ClosedFormsArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let n = args.n;
    let complete = complete_closed_forms(n).map_err(|e| Failure::usage(e.to_string()))?;
    let cycle = cycle_closed_forms(n).ok().map(|c| {
        let pairs: Vec<_> = (0..=n / 2).map(|d| c.pair_resistance(d).expect("d <= n/2")).collect();
        json!({ "pair_resistance": pairs, "eccentricity": c.ecc, "kirchhoff_index": c.kf, "curvature": c.kappa })
    });
    let doc = json!({
        "n": n,
        "cycle": cycle,
        "complete": {
            "pair_resistance": complete.pair_resistance,
            "kirchhoff_index": complete.kf,
            "curvature": complete.kappa,
        },
    });
    let mut out = open_output(&args.output, stdout)?;
    writeln!(out, "{doc}")?;
    out.flush()?;
    Ok(EXIT_OK)
}
