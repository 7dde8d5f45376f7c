//! `mpart`: exact m-ary partition counts, the partition/sequence bijection,
//! and congruence checks from the command line.
//!
//! Exit status is 0 on success, 1 when a check fails, and 2 for usage or
//! resource errors.

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use mpart_core::bijection::{correspondence_table, phi, phi_inv, table_tsv, BetaSeq};
use mpart_core::congruence::{afs_c_mod, b_mod_product, c_mod_formula, churchhouse_cases, Residue};
use mpart_core::counting::{self, count_b_poly, count_c_poly, Kind, Method};
use mpart_core::verify::{self, Grid, Suite};
use mpart_core::{BaseRepr, Budgets, Count, Error, MaryPartition};

/// Largest `n` for which the table-based methods allocate `n + 1` counts.
const TABLE_LIMIT: u64 = 100_000_000;

#[derive(Parser)]
#[command(
    name = "mpart",
    version,
    about = "Exact counting and congruences for m-ary partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the base-M digits of N, most significant first.
    Digits {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        n: u64,
    },
    /// Count m-ary partitions (b) or gap-free m-ary partitions (c) of N.
    Count {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        base: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_method, default_value = "poly")]
        method: Method,
        /// Run every applicable method and fail if any two disagree.
        #[arg(long)]
        check: bool,
    },
    /// Map a partition "a_l,...,a_0" of N to its sequence "b_j,...,b_1".
    Phi {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        partition: String,
    },
    /// Map a sequence "b_j,...,b_1" back to its partition of N.
    PhiInv {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        beta: String,
    },
    /// Print every partition of N next to its sequence, tab separated.
    Table {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        n: u64,
    },
    /// Compare a predicted residue with the exact one.
    Congruence {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value_t = 2)]
        base: u32,
        #[arg(long)]
        n: u64,
        /// Churchhouse parameter.
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Run a verification suite over a grid and print JSON lines.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_parser = parse_range::<u32>, default_value = "2..5")]
        base_range: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range::<u64>)]
        n_range: RangeInclusive<u64>,
        /// Churchhouse parameters.
        #[arg(long, value_parser = parse_range::<u32>, default_value = "1..2")]
        k_range: RangeInclusive<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    B,
    C,
}

impl From<KindArg> for Kind {
    fn from(kind: KindArg) -> Kind {
        match kind {
            KindArg::B => Kind::B,
            KindArg::C => Kind::C,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    AfsB,
    AfsC,
    AfsCEll,
    Churchhouse,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// `A..B`, inclusive on both ends, or a single value.
fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>, String>
where
    T: FromStr + PartialOrd + Copy,
    T::Err: std::fmt::Display,
{
    let parse = |part: &str| {
        part.trim()
            .parse::<T>()
            .map_err(|e| format!("invalid bound `{part}`: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

fn parse_list(s: &str) -> Result<Vec<u64>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|e| Failure::Usage(format!("invalid entry `{part}`: {e}")))
        })
        .collect()
}

enum Failure {
    /// A check ran and did not hold.
    Check,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let hint = match err {
            Error::LoopBudget { .. } => "; raise MPART_LOOP_BUDGET or use --method poly",
            Error::EnumerationBudget { .. } => {
                "; raise MPART_ENUM_BUDGET or use `count --method poly`"
            }
            _ => "",
        };
        Failure::Usage(format!("{err}{hint}"))
    }
}

fn budgets_from_env() -> Result<Budgets, Failure> {
    let read = |name: &str, default: u64| match std::env::var(name) {
        Ok(value) => value
            .trim()
            .replace('_', "")
            .parse::<u64>()
            .map_err(|e| Failure::Usage(format!("{name}: {e}"))),
        Err(_) => Ok(default),
    };
    Ok(Budgets {
        enumeration: read("MPART_ENUM_BUDGET", Budgets::DEFAULT_ENUMERATION)?,
        nested_steps: read("MPART_LOOP_BUDGET", Budgets::DEFAULT_NESTED_STEPS)?,
    })
}

fn count_one(
    kind: Kind,
    method: Method,
    base: u32,
    n: u64,
    budgets: &Budgets,
) -> Result<Count, Failure> {
    if matches!(method, Method::Recurrence | Method::Gf) && n > TABLE_LIMIT {
        return Err(Failure::Usage(format!(
            "{method} needs a table of {n} counts (limit {TABLE_LIMIT}); use --method poly"
        )));
    }
    Ok(counting::count(kind, method, base, n, budgets)?)
}

fn cmd_count(
    out: &mut impl Write,
    kind: Kind,
    base: u32,
    n: u64,
    method: Method,
    check: bool,
    budgets: &Budgets,
) -> Result<(), Failure> {
    if !check {
        let value = count_one(kind, method, base, n, budgets)?;
        writeln!(out, "{value}").ok();
        return Ok(());
    }
    let mut values: Vec<(Method, Count)> = Vec::new();
    for method in Method::ALL.into_iter().filter(|m| m.applies_to(kind)) {
        match count_one(kind, method, base, n, budgets) {
            Ok(value) => values.push((method, value)),
            Err(Failure::Usage(reason)) if method != Method::Poly => {
                eprintln!("skipped {method}: {reason}");
            }
            Err(err) => return Err(err),
        }
    }
    let first = &values[0].1;
    if values.iter().all(|(_, v)| v == first) {
        writeln!(out, "{first}").ok();
        Ok(())
    } else {
        for (method, value) in &values {
            writeln!(out, "{method}\t{value}").ok();
        }
        Err(Failure::Check)
    }
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_congruence(
    out: &mut impl Write,
    property: Property,
    base: u32,
    n: u64,
    k: u32,
) -> Result<(), Failure> {
    if n == 0 {
        return Err(Error::ZeroInput.into());
    }
    let mut all_hold = true;
    match property {
        Property::Churchhouse => {
            if base != 2 {
                return Err(Failure::Usage("churchhouse applies to base 2 only".into()));
            }
            for (label, case) in ["first", "second"].iter().zip(churchhouse_cases(k, n)?) {
                writeln!(
                    out,
                    "{label}: b_2({}) mod {} = {}, b_2({}) mod {} = {}\t{}",
                    case.low,
                    case.modulus,
                    case.low_residue,
                    case.high,
                    case.modulus,
                    case.high_residue,
                    verdict(case.holds())
                )
                .ok();
                all_hold &= case.holds();
            }
        }
        _ => {
            let repr = BaseRepr::new(base, n)?;
            let mn = n
                .checked_mul(base.into())
                .ok_or(Error::Overflow("m * n exceeds u64"))?;
            let (predicted, exact): (Residue, Count) = match property {
                Property::AfsB => (b_mod_product(&repr), count_b_poly(base, mn)?),
                Property::AfsC => (c_mod_formula(&repr), count_c_poly(base, mn)?),
                Property::AfsCEll => (afs_c_mod(&repr), count_c_poly(base, mn)?),
                Property::Churchhouse => unreachable!(),
            };
            let actual = exact.residue(base.into());
            let holds = predicted.value() == actual;
            writeln!(
                out,
                "predicted {}\tactual {}\t{}",
                predicted.value(),
                actual,
                verdict(holds)
            )
            .ok();
            all_hold &= holds;
        }
    }
    if all_hold {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let budgets = budgets_from_env()?;
    match cli.command {
        Command::Digits { base, n } => {
            writeln!(out, "{}", BaseRepr::new(base, n)?).ok();
        }
        Command::Count {
            kind,
            base,
            n,
            method,
            check,
        } => cmd_count(out, kind.into(), base, n, method, check, &budgets)?,
        Command::Phi { base, n, partition } => {
            let partition = MaryPartition::from_msf(base, &parse_list(&partition)?)?;
            writeln!(out, "{}", phi(&partition, n)?).ok();
        }
        Command::PhiInv { base, n, beta } => {
            let seq = BetaSeq::from_msf(base, n, &parse_list(&beta)?)?;
            writeln!(out, "{}", phi_inv(&seq)?).ok();
        }
        Command::Table { base, n } => {
            let rows = correspondence_table(base, n, budgets.enumeration)?;
            write!(out, "{}", table_tsv(&rows)).ok();
        }
        Command::Congruence {
            property,
            base,
            n,
            k,
        } => cmd_congruence(out, property, base, n, k)?,
        Command::Verify {
            suite,
            base_range,
            n_range,
            k_range,
        } => {
            let grid = Grid {
                bases: base_range,
                ns: n_range,
                ks: k_range,
            };
            let report = verify::run(suite, &grid, &budgets)?;
            write!(out, "{}", report.to_json_lines()).ok();
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let status = match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    };
    out.flush().ok();
    status
}
