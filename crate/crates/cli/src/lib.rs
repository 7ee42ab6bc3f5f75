//! Command-line front end. [`run`] does all the work so tests can drive it
//! without spawning a process.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use z3real::builder::{Proof, RealizationResult, RealizeOptions};
use z3real::enumerate::all_realizations;
use z3real::reducer::{replay, Certificate, CertifyOutcome, Reducer};
use z3real::sweep::sweep_n;
use z3real::verifier::{Oracle, DEFAULT_ORACLE_CAP};
use z3real::{classify, realize_with, Classification, DegreeSequence, Multigraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "z3real",
    version,
    about = "Z3-connected realizations of degree sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a degree sequence; prints one line of JSON.
    Classify { sequence: String },
    /// Build a Z3-connected realization.
    Realize {
        sequence: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        /// Include the certificate.
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Decide Z3-connectivity and 3-flowability of an edge-list file.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Stream realizations as edge lists separated by blank lines.
    Enumerate {
        sequence: String,
        #[arg(long)]
        limit: Option<u64>,
        /// One realization per isomorphism class.
        #[arg(long)]
        dedup: bool,
    },
    /// Search for a certificate, or replay one with --replay.
    Certify {
        file: PathBuf,
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Realize and oracle-check every covered sequence up to --n-max.
    Sweep {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
}

/// Failure carrying its exit code.
struct Fail(i32, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

fn io_fail(e: io::Error) -> Fail {
    usage(format!("write error: {e}"))
}

type Res = Result<i32, Fail>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Res {
    match cmd {
        Command::Classify { sequence } => cmd_classify(&sequence, out),
        Command::Realize {
            sequence,
            format,
            certify,
            oracle_cap,
        } => cmd_realize(&sequence, format, certify, oracle_cap, out),
        Command::Verify { file, oracle_cap } => cmd_verify(&file, oracle_cap, out),
        Command::Enumerate {
            sequence,
            limit,
            dedup,
        } => cmd_enumerate(&sequence, limit, dedup, out),
        Command::Certify { file, replay } => cmd_certify(&file, replay.as_deref(), out),
        Command::Sweep {
            n_max,
            n_min,
            oracle_cap,
        } => cmd_sweep(n_min, n_max, oracle_cap, out),
    }
}

fn parse_seq(text: &str) -> Result<DegreeSequence, Fail> {
    text.parse()
        .map_err(|e| usage(format!("malformed sequence '{text}': {e}")))
}

fn read_graph(path: &Path) -> Result<Multigraph, Fail> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Multigraph::parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn cmd_classify(text: &str, out: &mut dyn Write) -> Res {
    let seq = parse_seq(text)?;
    let class = classify(&seq);
    let line = json!({
        "sequence": seq.to_string(),
        "graphic": class != Classification::NotGraphic,
        "tag": class.tag(),
        "route": class.route().map(|r| r.name()),
    });
    writeln!(out, "{line}").map_err(io_fail)?;
    Ok(
        if class == Classification::NotGraphic || class.is_exception() {
            EXIT_NEGATIVE
        } else {
            EXIT_OK
        },
    )
}

fn cmd_realize(
    text: &str,
    format: Format,
    certify: bool,
    oracle_cap: usize,
    out: &mut dyn Write,
) -> Res {
    let seq = parse_seq(text)?;
    let opts = RealizeOptions {
        oracle_cap,
        ..RealizeOptions::default()
    };
    let result =
        realize_with(&seq, &opts).map_err(|e| usage(format!("construction failed: {e}")))?;
    let r = match result {
        RealizationResult::Realized(r) => r,
        RealizationResult::NotGraphic => {
            return Err(Fail(EXIT_NEGATIVE, format!("{seq} is not graphic")))
        }
        RealizationResult::Exception(c) => {
            return Err(Fail(
                EXIT_NEGATIVE,
                format!("{seq} has no Z3-connected realization ({})", c.tag()),
            ))
        }
        RealizationResult::Unsupported(why) => return Err(usage(format!("unsupported: {why}"))),
    };
    let cert = match (&r.proof, certify) {
        (Proof::Certificate(c), true) => Some(c),
        _ => None,
    };
    let text = match format {
        Format::Edgelist | Format::Dot => {
            let (comment, body) = match format {
                Format::Dot => ("//", r.graph.to_dot("realization")),
                _ => ("#", r.graph.to_edge_list()),
            };
            let mut s = String::new();
            s.push_str(&format!("{comment} sequence: {seq}\n"));
            for line in &r.trace {
                s.push_str(&format!("{comment} trace: {line}\n"));
            }
            s.push_str(&format!("{comment} proof: {}\n", r.proof.tag()));
            if certify {
                match cert {
                    Some(c) => {
                        for step in &c.steps {
                            s.push_str(&format!("{comment} certificate: {step}\n"));
                        }
                    }
                    None => s.push_str(&format!("{comment} certificate: unknown\n")),
                }
            }
            s.push_str(&body);
            s
        }
        Format::Json => {
            let edges: Vec<[usize; 2]> = r.graph.edges().iter().map(|&(u, v)| [u, v]).collect();
            let mut value = json!({
                "sequence": seq.to_string(),
                "n": r.graph.n(),
                "edges": edges,
                "trace": r.trace,
                "proof": r.proof.tag(),
            });
            if certify {
                value["certificate"] =
                    json!(cert.map(|c| c.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
            }
            format!("{value}\n")
        }
    };
    out.write_all(text.as_bytes()).map_err(io_fail)?;
    Ok(EXIT_OK)
}

fn cmd_verify(path: &Path, oracle_cap: usize, out: &mut dyn Write) -> Res {
    let g = read_graph(path)?;
    let oracle = Oracle::with_cap(oracle_cap);
    let z3 = oracle
        .is_z3_connected(&g)
        .map_err(|e| usage(e.to_string()))?;
    let flow = oracle.is_3_flowable(&g).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "z3_connected={z3}\nthree_flowable={flow}").map_err(io_fail)?;
    Ok(if z3 { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_enumerate(text: &str, limit: Option<u64>, dedup: bool, out: &mut dyn Write) -> Res {
    let seq = parse_seq(text)?;
    let stream = all_realizations(&seq, limit, dedup).map_err(|e| usage(e.to_string()))?;
    let mut count = 0u64;
    for g in stream {
        if count > 0 {
            writeln!(out).map_err(io_fail)?;
        }
        out.write_all(g.to_edge_list().as_bytes())
            .map_err(io_fail)?;
        count += 1;
    }
    if count == 0 {
        return Err(Fail(EXIT_NEGATIVE, format!("{seq} has no realization")));
    }
    Ok(EXIT_OK)
}

fn cmd_certify(path: &Path, replay_path: Option<&Path>, out: &mut dyn Write) -> Res {
    let g = read_graph(path)?;
    if let Some(cp) = replay_path {
        let text = std::fs::read_to_string(cp)
            .map_err(|e| usage(format!("cannot read {}: {e}", cp.display())))?;
        let cert: Certificate = text
            .parse()
            .map_err(|e| usage(format!("{}: {e}", cp.display())))?;
        return match replay(&g, &cert) {
            Ok(()) => {
                writeln!(out, "valid").map_err(io_fail)?;
                Ok(EXIT_OK)
            }
            Err(f) => {
                writeln!(out, "invalid: {f}").map_err(io_fail)?;
                Ok(EXIT_NEGATIVE)
            }
        };
    }
    let wide = Reducer {
        rim_cap: g.n().max(8),
        ..Reducer::default()
    };
    match wide.certify(&g) {
        CertifyOutcome::Proved(c) => {
            write!(out, "{c}").map_err(io_fail)?;
            Ok(EXIT_OK)
        }
        CertifyOutcome::Unknown => {
            writeln!(out, "unknown").map_err(io_fail)?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_sweep(n_min: usize, n_max: usize, oracle_cap: usize, out: &mut dyn Write) -> Res {
    if n_max > oracle_cap {
        return Err(usage(format!(
            "--n-max {n_max} exceeds the oracle cap {oracle_cap}"
        )));
    }
    let opts = RealizeOptions {
        oracle_cap,
        ..RealizeOptions::default()
    };
    writeln!(out, " n  covered  passed  certified  status").map_err(io_fail)?;
    let mut all_ok = true;
    for n in n_min..=n_max {
        let row = sweep_n(n, &opts);
        all_ok &= row.ok();
        writeln!(
            out,
            "{:>2}  {:>7}  {:>6}  {:>9}  {}",
            n,
            row.covered,
            row.passed,
            row.certified,
            if row.ok() { "pass" } else { "FAIL" }
        )
        .map_err(io_fail)?;
        for (s, why) in &row.failures {
            writeln!(out, "    {s}: {why}").map_err(io_fail)?;
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_NEGATIVE })
}
