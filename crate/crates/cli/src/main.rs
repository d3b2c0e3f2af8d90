use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use permtab::codec::{
    btableau_to_json, parse_btableau, parse_perm, parse_tableau, perm_to_json, tableau_to_json,
};
use permtab::shape::shapes_of_length;
use permtab::tableau::{enumerate_tableaux, tableaux_of_shape};
use permtab::typeb::{btableaux_of_shape, enumerate_b, shifted_shapes_of_length};
use permtab::verify::{verify, Claim};
use permtab::{phi, phi_b, phi_b_inverse, phi_inverse};
use rayon::prelude::*;

const CAP_A: u32 = 10;
const CAP_B: u32 = 6;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "permtab",
    version,
    about = "Permutation tableaux: enumeration, zigzag bijections, and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Count,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Subcommand)]
enum Command {
    /// List every tableau of length n in canonical order, or count them.
    Enumerate {
        #[arg(long = "type", value_enum, default_value = "a")]
        kind: Kind,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        /// Permit n above the default caps (10 for type a, 6 for type b).
        #[arg(long)]
        allow_large: bool,
    },
    /// Apply the zigzag bijection or its inverse to JSONL read from stdin.
    Map {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long = "type", value_enum, default_value = "a")]
        kind: Kind,
    },
    /// Check a claim exhaustively up to max-n and print a JSON report.
    Verify {
        /// One of eq1.1, thm1.1, thm1.2, thm1.3, lemma2.1, lemma2.2, lemma2.3,
        /// prop2.1, prop2.2, prop3.1, lemma3.1, thm3.1, urB-eq-urc.
        #[arg(long)]
        claim: String,
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        allow_large: bool,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn finish(r: io::Result<ExitCode>) -> ExitCode {
    match r {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn enumerate(kind: Kind, n: u32, format: Format, allow_large: bool) -> ExitCode {
    let cap = if kind == Kind::A { CAP_A } else { CAP_B };
    if n > cap && !allow_large {
        return usage(format!(
            "n = {n} exceeds the cap of {cap}; pass --allow-large to run it anyway"
        ));
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let r = (|| {
        match (format, kind) {
            (Format::Count, Kind::A) => {
                let c: usize = shapes_of_length(n)
                    .par_iter()
                    .map(|s| tableaux_of_shape(s).len())
                    .sum();
                writeln!(out, "{c}")?;
            }
            (Format::Count, Kind::B) => {
                let c: usize = shifted_shapes_of_length(n)
                    .par_iter()
                    .map(|s| btableaux_of_shape(s).len())
                    .sum();
                writeln!(out, "{c}")?;
            }
            (Format::Jsonl, Kind::A) => {
                for t in enumerate_tableaux(n) {
                    writeln!(out, "{}", tableau_to_json(&t))?;
                }
            }
            (Format::Jsonl, Kind::B) => {
                for t in enumerate_b(n) {
                    writeln!(out, "{}", btableau_to_json(&t))?;
                }
            }
        }
        out.flush()?;
        Ok(ExitCode::SUCCESS)
    })();
    finish(r)
}

fn map_line(line: &str, direction: Direction, kind: Kind) -> Result<String, String> {
    let err = |e: permtab::Error| e.to_string();
    match (direction, kind) {
        (Direction::Forward, Kind::A) => {
            let t = parse_tableau(line).map_err(err)?;
            if !t.shape().is_standard() {
                return Err(format!("labels do not cover 1..={}", t.n()));
            }
            if !t.validate() {
                return Err("filling is not a permutation tableau".into());
            }
            Ok(perm_to_json(&phi(&t)))
        }
        (Direction::Forward, Kind::B) => {
            let t = parse_btableau(line).map_err(err)?;
            if !t.validate_b() {
                return Err("filling is not a type-B permutation tableau".into());
            }
            Ok(perm_to_json(&phi_b(&t)))
        }
        (Direction::Inverse, Kind::A) => {
            let p = parse_perm(line).map_err(err)?;
            Ok(tableau_to_json(&phi_inverse(&p)))
        }
        (Direction::Inverse, Kind::B) => {
            let p = parse_perm(line).map_err(err)?;
            Ok(btableau_to_json(&phi_b_inverse(&p).map_err(err)?))
        }
    }
}

fn map(direction: Direction, kind: Kind) -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let r = (|| {
        let mut bad = 0usize;
        for (i, line) in io::stdin().lock().lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match map_line(&line, direction, kind) {
                Ok(s) => writeln!(out, "{s}")?,
                Err(e) => {
                    bad += 1;
                    eprintln!("{}", serde_json::json!({ "line": i + 1, "error": e }));
                }
            }
        }
        out.flush()?;
        Ok(if bad == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(EXIT_USAGE)
        })
    })();
    finish(r)
}

fn run_verify(claim: &str, max_n: u32, threads: Option<usize>, allow_large: bool) -> ExitCode {
    let claim: Claim = match claim.parse() {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let cap = match claim {
        Claim::TypeBLabels
        | Claim::TypeBDistribution
        | Claim::TypeBImbalance
        | Claim::UrBEqualsUrc => CAP_B,
        _ => CAP_A,
    };
    if max_n > cap && !allow_large {
        return usage(format!(
            "max-n = {max_n} exceeds the cap of {cap}; pass --allow-large to run it anyway"
        ));
    }
    if let Some(t) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            return usage(e);
        }
    }
    let report = match verify(claim, max_n) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );
    eprintln!(
        "{} ({}) for n in {}..={}: {} in {} ms",
        claim,
        claim.describe(),
        report.n_range[0],
        report.n_range[1],
        if report.passed() { "PASS" } else { "FAIL" },
        report.wall_time_ms
    );
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate {
            kind,
            n,
            format,
            allow_large,
        } => enumerate(kind, n, format, allow_large),
        Command::Map { direction, kind } => map(direction, kind),
        Command::Verify {
            claim,
            max_n,
            threads,
            allow_large,
        } => run_verify(&claim, max_n, threads, allow_large),
    }
}
