//! The `paritree` command line.
//!
//! Exit codes: `0` success, `1` I/O failure, `2` parse error, bad usage or a
//! refused guard, `3` universality check failed, `4` the `--oracle`
//! cross-check disagreed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::game::{parse_pgsolver, random_game, serialize_pgsolver};
use crate::solver::{zielonka, Solver};
use crate::tree::{check_universal, construct, OrderedTree};
use crate::widths::width_report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_UNIVERSAL: i32 = 3;
pub const EXIT_ORACLE_MISMATCH: i32 = 4;

/// Largest `n` and `h` accepted by `verify-universal` without `--force`.
pub const VERIFY_MAX_N: usize = 6;
pub const VERIFY_MAX_H: usize = 3;

#[derive(Debug, Parser)]
#[command(
    name = "paritree",
    version,
    about = "Universal trees and parity game solving"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a game in PGSolver format and print the winning regions.
    Solve(SolveArgs),
    /// Tabulate tree widths and bounds as CSV.
    Widths(WidthsArgs),
    /// Exhaustively check that construct(n, h) is n-universal.
    VerifyUniversal(VerifyArgs),
    /// Write a seeded random game in PGSolver format.
    Gen(GenArgs),
    /// Solve a seeded corpus and record lift counts and timings as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub path: PathBuf,
    /// Also print the measured player, eta, tree width and lift counts.
    #[arg(short, long)]
    pub verbose: bool,
    /// Cross-check the regions against Zielonka's algorithm.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct WidthsArgs {
    /// Comma-separated values of n.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<u64>,
    /// Comma-separated values of h.
    #[arg(long, value_delimiter = ',', required = true)]
    pub h: Vec<u32>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub n: usize,
    pub h: usize,
    /// Allow sizes beyond the default guard.
    #[arg(long)]
    pub force: bool,
    /// Check this tree (nested-parentheses text) instead of construct(n, h).
    #[arg(long, hide = true)]
    pub tree: Option<String>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    /// Even priority bound.
    #[arg(long)]
    pub d: u32,
    /// Out-degree range, `lo..hi` inclusive or a single number.
    #[arg(long, default_value = "1..3", value_parser = parse_range)]
    pub degree: (usize, usize),
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub d: Vec<u32>,
    /// Games per (n, d) pair.
    #[arg(long, default_value_t = 10)]
    pub games: u64,
    #[arg(long, default_value = "1..3", value_parser = parse_range)]
    pub degree: (usize, usize),
    /// First seed; game i of each pair uses seed + i.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!("degree range {s:?} must satisfy 1 <= lo <= hi"));
    }
    Ok((lo, hi))
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match cli.command {
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Widths(a) => cmd_widths(&a, out, err),
        Command::VerifyUniversal(a) => cmd_verify_universal(&a, out, err),
        Command::Gen(a) => cmd_gen(&a, out, err),
        Command::Bench(a) => cmd_bench(&a, out, err),
    }
}

fn write_output(
    path: Option<&PathBuf>,
    text: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let result = match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_IO
        }
    }
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let bytes = match std::fs::read(&a.path) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", a.path.display());
            return EXIT_IO;
        }
    };
    let game = match parse_pgsolver(&bytes) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", a.path.display());
            return EXIT_USAGE;
        }
    };
    let outcome = Solver::new(&game).run();
    let mut text = format!("{}\n", outcome.regions);
    if a.verbose {
        let s = &outcome.stats;
        text.push_str(&format!(
            "player: {}\neta: {}\ntree_width: {}\ntree_height: {}\nlifts: {}\nupdates: {}\n",
            s.player, s.eta, s.tree_width, s.tree_height, s.lifts, s.updates
        ));
    }
    let mut code = EXIT_OK;
    if a.oracle {
        let reference = zielonka(&game);
        let diff = outcome.regions.disagreements(&reference);
        if diff.is_empty() {
            text.push_str("oracle: agree\n");
        } else {
            let ids: Vec<String> = diff.iter().map(usize::to_string).collect();
            text.push_str(&format!("oracle: disagree on {}\n", ids.join(" ")));
            code = EXIT_ORACLE_MISMATCH;
        }
    }
    match write_output(None, &text, out, err) {
        EXIT_OK => code,
        other => other,
    }
}

pub fn cmd_widths(a: &WidthsArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match width_report(&a.n, &a.h) {
        Ok(table) => write_output(a.out.as_ref(), &table.to_csv(), out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn cmd_verify_universal(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if !a.force && (a.n > VERIFY_MAX_N || a.h > VERIFY_MAX_H) {
        let _ = writeln!(
            err,
            "error: exhaustive check of n = {}, h = {} refused; the default limit is n <= {VERIFY_MAX_N}, \
             h <= {VERIFY_MAX_H} because the number of trees grows super-exponentially (pass --force to override)",
            a.n, a.h
        );
        return EXIT_USAGE;
    }
    let tree = match &a.tree {
        Some(text) => match text.parse::<OrderedTree>() {
            Ok(t) if t.height() == a.h => t,
            Ok(t) => {
                let _ = writeln!(
                    err,
                    "error: tree has height {}, expected {}",
                    t.height(),
                    a.h
                );
                return EXIT_USAGE;
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        },
        None => construct(a.n, a.h),
    };
    let check = check_universal(&tree, a.n);
    let width = tree.leaf_count();
    let text = match &check.counterexample {
        None => format!(
            "UNIVERSAL (width={width}, trees checked={})\n",
            check.checked
        ),
        Some(c) => format!(
            "NOT UNIVERSAL (width={width}, trees checked={})\ncounterexample: {c}\n",
            check.checked
        ),
    };
    match write_output(None, &text, out, err) {
        EXIT_OK if check.is_universal() => EXIT_OK,
        EXIT_OK => EXIT_NOT_UNIVERSAL,
        other => other,
    }
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if a.n == 0 || a.d < 2 || !a.d.is_multiple_of(2) {
        let _ = writeln!(err, "error: need n >= 1 and an even d >= 2");
        return EXIT_USAGE;
    }
    let g = random_game(a.n, a.d, a.degree.0..=a.degree.1, a.seed);
    let text = String::from_utf8(serialize_pgsolver(&g)).expect("ASCII output");
    write_output(a.out.as_ref(), &text, out, err)
}

pub const BENCH_HEADER: &str = "n,d,seed,m,player,eta,tree_width,lifts,updates,micros";

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if a.n.contains(&0) || a.d.iter().any(|&d| d < 2 || d % 2 != 0) {
        let _ = writeln!(err, "error: need n >= 1 and even d >= 2");
        return EXIT_USAGE;
    }
    let jobs: Vec<(usize, u32, u64)> =
        a.n.iter()
            .flat_map(|&n| {
                a.d.iter()
                    .flat_map(move |&d| (0..a.games).map(move |i| (n, d, i)))
            })
            .map(|(n, d, i)| (n, d, a.seed + i))
            .collect();
    let rows: Vec<String> = jobs
        .par_iter()
        .map(|&(n, d, seed)| {
            let g = random_game(n, d, a.degree.0..=a.degree.1, seed);
            let start = Instant::now();
            let o = Solver::new(&g).run();
            let micros = start.elapsed().as_micros();
            let s = o.stats;
            format!(
                "{n},{d},{seed},{},{},{},{},{},{},{micros}",
                g.edge_count(),
                s.player,
                s.eta,
                s.tree_width,
                s.lifts,
                s.updates
            )
        })
        .collect();
    let mut text = String::from(BENCH_HEADER);
    text.push('\n');
    for r in rows {
        text.push_str(&r);
        text.push('\n');
    }
    write_output(a.out.as_ref(), &text, out, err)
}
