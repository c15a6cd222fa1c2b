//! Command-line front end: `eig`, `verify`, `fixed` and `report`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algebra::build_field_with_root;
use crate::arith::is_prime;
use crate::cyclotomic::{char_poly, euler_k3, power_list, trace_h2, EigenPacketList, K3_B2};
use crate::geometry::{fixed_points, orbit_decomposition, orbit_lengths, Hypersurface, DEFAULT_CURVE_BOUND, DEFAULT_SURFACE_BOUND};
use crate::verifier::{self, surfaces, Report, ReportConfig, CHECK_NAMES};
use crate::{Error, Result};

/// Default characteristic: the smallest prime `p` with `50 | p − 1`.
pub const DEFAULT_P: u64 = 101;
pub const DEFAULT_N: u64 = 50;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "k3auto", version, about = "Eigenvalue, fixed-point and replay checks for an order-50 K3 automorphism")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Power an eigenvalue list and print its trace and Lefschetz number.
    Eig {
        /// Packets as `order:multiplicity`, comma separated.
        #[arg(long)]
        list: String,
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
    /// Run replays, print a table and optionally write the JSON report.
    Verify(RunArgs),
    /// List the rational points of X_50 fixed by g_50^k.
    Fixed {
        #[arg(long, default_value_t = DEFAULT_P)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_SURFACE_BOUND)]
        max_q: u64,
    },
    /// Run replays and emit the JSON report.
    Report(RunArgs),
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long, default_value_t = DEFAULT_P)]
    p: u64,
    /// Comma-separated subset of lemma50, no1, normalization, char2, degeneration.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SURFACE_BOUND)]
    max_q: u64,
}

/// Validated parameters of a `verify` or `report` run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub p: u64,
    pub n: u64,
    pub max_q: u64,
    pub curve_bound: u64,
    pub checks: Vec<String>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(p: u64, checks: Vec<String>, max_q: u64, out: Option<PathBuf>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if max_q == 0 {
            return Err(Error::InvalidField("enumeration bound must be positive".into()));
        }
        let checks = if checks.is_empty() { CHECK_NAMES.iter().map(|s| s.to_string()).collect() } else { checks };
        verifier::validate_checks(&checks)?;
        Ok(Self { p, n: DEFAULT_N, max_q, curve_bound: DEFAULT_CURVE_BOUND, checks, out })
    }

    pub fn report_config(&self) -> ReportConfig {
        ReportConfig {
            p: self.p,
            n: self.n,
            max_q: self.max_q,
            curve_bound: self.curve_bound,
            checks: self.checks.clone(),
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code. Normal output goes to `out`, diagnostics
/// to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_CONFIG;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CONFIG
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Eig { list, k } => cmd_eig(&list, k, out),
        Command::Verify(a) => {
            let config = RunConfig::new(a.p, a.checks, a.max_q, a.out)?;
            cmd_verify(&config, false, out)
        }
        Command::Report(a) => {
            let config = RunConfig::new(a.p, a.checks, a.max_q, a.out)?;
            cmd_verify(&config, true, out)
        }
        Command::Fixed { p, k, max_q } => cmd_fixed(p, k, max_q, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("output: {e}"))
}

pub fn cmd_eig(text: &str, k: u64, out: &mut dyn Write) -> Result<i32> {
    if k == 0 {
        return Err(Error::InvalidPacketList("k must be positive".into()));
    }
    let list = EigenPacketList::parse(text, K3_B2)?;
    let powered = power_list(&list, k);
    writeln!(out, "[g*]      {list}").map_err(io)?;
    writeln!(out, "[g^{k}*]{:pad$}{powered}", "", pad = 5usize.saturating_sub(k.to_string().len())).map_err(io)?;
    writeln!(out, "trace     {}", trace_h2(&powered)).map_err(io)?;
    writeln!(out, "euler     {}", euler_k3(&powered)).map_err(io)?;
    writeln!(out, "charpoly  {}", char_poly(&powered)).map_err(io)?;
    Ok(EXIT_OK)
}

pub fn build_report(config: &RunConfig) -> Result<Report> {
    verifier::run(&config.report_config())
}

pub fn cmd_verify(config: &RunConfig, json_to_stdout: bool, out: &mut dyn Write) -> Result<i32> {
    let report = build_report(config)?;
    let json = report.to_json();
    if let Some(path) = &config.out {
        std::fs::write(path, format!("{json}\n")).map_err(io)?;
    }
    if json_to_stdout && config.out.is_none() {
        writeln!(out, "{json}").map_err(io)?;
    } else {
        write!(out, "{}", report.table()).map_err(io)?;
    }
    Ok(if report.summary.ok { EXIT_OK } else { EXIT_FAIL })
}

pub fn cmd_fixed(p: u64, k: u32, max_q: u64, out: &mut dyn Write) -> Result<i32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !(1..=50).contains(&k) {
        return Err(Error::InvalidPacketList(format!("k = {k} outside 1..50")));
    }
    let field = build_field_with_root(p, DEFAULT_N)?;
    let surface = Hypersurface::new(surfaces::x50(&field)?)?;
    let g = surfaces::g50(&field)?;
    let pts = fixed_points(&g, k, &surface, max_q)?;
    writeln!(out, "Fix(g^{k}) on X_50 over F_{}: {} points", field.size(), pts.len()).map_err(io)?;
    for p in &pts {
        writeln!(out, "{}", p.display(&field)).map_err(io)?;
    }
    let orbits = orbit_decomposition(&g, &pts)?;
    let lengths = orbit_lengths(&orbits);
    let mut tally: Vec<(usize, usize)> = Vec::new();
    for l in lengths {
        match tally.last_mut() {
            Some((len, n)) if *len == l => *n += 1,
            _ => tally.push((l, 1)),
        }
    }
    let parts: Vec<String> = tally.iter().map(|(l, n)| format!("{n} of length {l}")).collect();
    writeln!(out, "orbits under g: {}", parts.join(", ")).map_err(io)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let mut full = vec!["k3auto"];
        full.extend_from_slice(args);
        let code = run(full, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn eig_examples() {
        let (c, o, _) = call(&["eig", "--list", "1:1,2:1,50:1", "--k", "25"]);
        assert_eq!(c, 0);
        assert!(o.contains("euler     -18"), "{o}");
        let (_, o, _) = call(&["eig", "--list", "1:2,50:1", "--k", "5"]);
        assert!(o.contains("euler     9"));
        let (_, o, _) = call(&["eig", "--list", "1:22", "--k", "7"]);
        assert!(o.contains("euler     24"));
    }

    #[test]
    fn config_errors_exit_2() {
        assert_eq!(call(&["eig", "--list", "1:21"]).0, 2);
        assert_eq!(call(&["eig", "--list", "1:x"]).0, 2);
        let (c, _, e) = call(&["verify", "--p", "4"]);
        assert_eq!(c, 2);
        assert!(e.contains("not prime"));
        assert_eq!(call(&["verify", "--checks", "bogus"]).0, 2);
        assert_eq!(call(&["verify", "--p", "5", "--checks", "lemma50"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn run_config_defaults() {
        let c = RunConfig::new(101, vec![], DEFAULT_SURFACE_BOUND, None).unwrap();
        assert_eq!(c.checks.len(), CHECK_NAMES.len());
        assert!(RunConfig::new(101, vec![], 0, None).is_err());
    }
}
