//! Acceptance criteria, run end to end through the `mpart` binary.
//!
//! The criteria run sequentially inside one test so their wall-clock limits
//! are measured without competing test threads. Each prints one PASS/FAIL
//! line; the test fails if any criterion does.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

const GOLDEN_TABLE: &str = include_str!("golden/table_4_36.tsv");

fn mpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpart"))
        .args(args)
        .env_remove("MPART_ENUM_BUDGET")
        .env_remove("MPART_LOOP_BUDGET")
        .output()
        .expect("mpart runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

type Criterion = (&'static str, fn() -> Result<(), String>);

struct Summary {
    cases_run: u64,
    skipped: u64,
    failures: u64,
}

/// Runs a verification suite and parses its final summary line.
fn verify(args: &[&str]) -> Result<Summary, String> {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    let output = mpart(&full);
    let text = stdout(&output);
    let last = text.lines().last().ok_or("no output")?;
    let json: serde_json::Value = serde_json::from_str(last).map_err(|e| e.to_string())?;
    let field = |name: &str| json[name].as_u64().ok_or(format!("missing {name}"));
    let summary = Summary {
        cases_run: field("cases_run")?,
        skipped: field("skipped")?,
        failures: field("failures")?,
    };
    if output.status.code() != Some(0) || summary.failures != 0 {
        return Err(format!(
            "exit {:?}, {} failures; first lines:\n{}",
            output.status.code(),
            summary.failures,
            text.lines().take(5).collect::<Vec<_>>().join("\n")
        ));
    }
    Ok(summary)
}

fn expect_cases(summary: &Summary, cases: u64, allow_skips: bool) -> Result<(), String> {
    if summary.cases_run != cases {
        return Err(format!("ran {} cases, expected {cases}", summary.cases_run));
    }
    if !allow_skips && summary.skipped != 0 {
        return Err(format!(
            "{} evaluations skipped for budget",
            summary.skipped
        ));
    }
    Ok(())
}

fn within(limit: Duration, started: Instant) -> Result<(), String> {
    let elapsed = started.elapsed();
    if elapsed > limit {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn criterion_1() -> Result<(), String> {
    let started = Instant::now();
    for method in ["nested", "poly", "recurrence", "gf", "enumerate"] {
        let out = mpart(&[
            "count", "--kind", "b", "--base", "3", "--n", "10", "--method", method,
        ]);
        if stdout(&out) != "5\n" || !out.status.success() {
            return Err(format!("{method} printed {:?}", stdout(&out)));
        }
    }
    let out = mpart(&[
        "count", "--kind", "b", "--base", "3", "--n", "10", "--check",
    ]);
    if stdout(&out) != "5\n" || !out.status.success() {
        return Err(format!("--check printed {:?}", stdout(&out)));
    }
    within(Duration::from_secs(1), started)
}

fn criterion_2() -> Result<(), String> {
    let started = Instant::now();
    let out = mpart(&["table", "--base", "4", "--n", "36"]);
    let text = stdout(&out);
    if text.lines().count() != 18 {
        return Err(format!("{} rows", text.lines().count()));
    }
    if text != GOLDEN_TABLE {
        return Err(format!("table differs from golden:\n{text}"));
    }
    within(Duration::from_secs(1), started)
}

fn criterion_3() -> Result<(), String> {
    let started = Instant::now();
    let out = mpart(&["count", "--kind", "c", "--base", "5", "--n", "2425"]);
    if stdout(&out) != "230358\n" {
        return Err(format!("count printed {:?}", stdout(&out)));
    }
    let out = mpart(&[
        "congruence",
        "--property",
        "afs-c",
        "--base",
        "5",
        "--n",
        "485",
    ]);
    if stdout(&out) != "predicted 3\tactual 3\tPASS\n" || !out.status.success() {
        return Err(format!("congruence printed {:?}", stdout(&out)));
    }
    within(Duration::from_secs(5), started)
}

fn criterion_4() -> Result<(), String> {
    let started = Instant::now();
    let summary = verify(&[
        "--suite",
        "oracle-b",
        "--base-range",
        "2..5",
        "--n-range",
        "1..2000",
    ])?;
    // nested sums beyond the loop budget are skipped; every other method runs
    expect_cases(&summary, 4 * 2000, true)?;
    println!(
        "    oracle-b: {} cases, {} nested evaluations over budget",
        summary.cases_run, summary.skipped
    );
    within(Duration::from_secs(60), started)
}

fn criterion_5() -> Result<(), String> {
    let started = Instant::now();
    let summary = verify(&[
        "--suite",
        "oracle-c",
        "--base-range",
        "2..5",
        "--n-range",
        "1..300",
    ])?;
    expect_cases(&summary, 4 * 300, false)?;
    within(Duration::from_secs(60), started)
}

fn criterion_6() -> Result<(), String> {
    let summary = verify(&[
        "--suite",
        "bijection",
        "--base-range",
        "2..5",
        "--n-range",
        "1..200",
    ])?;
    expect_cases(&summary, 4 * 200, false)
}

fn criterion_7() -> Result<(), String> {
    let started = Instant::now();
    let summary = verify(&[
        "--suite",
        "afs-b",
        "--base-range",
        "2..7",
        "--n-range",
        "1..1000",
    ])?;
    expect_cases(&summary, 6 * 1000, false)?;
    within(Duration::from_secs(60), started)
}

fn criterion_8() -> Result<(), String> {
    let summary = verify(&[
        "--suite",
        "afs-c",
        "--base-range",
        "2..7",
        "--n-range",
        "1..500",
    ])?;
    expect_cases(&summary, 6 * 500, false)?;
    let summary = verify(&[
        "--suite",
        "afs-equiv",
        "--base-range",
        "2..7",
        "--n-range",
        "1..500",
    ])?;
    expect_cases(&summary, 6 * 500, false)?;
    let summary = verify(&[
        "--suite",
        "reduction",
        "--base-range",
        "2..5",
        "--n-range",
        "1..100",
    ])?;
    expect_cases(&summary, 4 * 100, false)
}

fn criterion_9() -> Result<(), String> {
    let b16 = stdout(&mpart(&[
        "count",
        "--kind",
        "b",
        "--base",
        "2",
        "--n",
        "16",
        "--method",
        "recurrence",
    ]));
    let b4 = stdout(&mpart(&[
        "count",
        "--kind",
        "b",
        "--base",
        "2",
        "--n",
        "4",
        "--method",
        "recurrence",
    ]));
    let (b16, b4): (u64, u64) = (b16.trim().parse().unwrap(), b4.trim().parse().unwrap());
    if b16 - b4 != 32 {
        return Err(format!("b_2(16) - b_2(4) = {}", b16 - b4));
    }
    let summary = verify(&[
        "--suite",
        "churchhouse",
        "--k-range",
        "1..2",
        "--n-range",
        "1..64",
    ])?;
    expect_cases(&summary, 2 * 64, false)
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("1 b_3(10) = 5 by every method", criterion_1),
        ("2 table for m=4, n=36 matches the golden file", criterion_2),
        (
            "3 c_5(2425) = 230358 and its residue 3 is predicted",
            criterion_3,
        ),
        (
            "4 four b methods agree, m in 2..5, n in 1..2000",
            criterion_4,
        ),
        (
            "5 three c methods agree, m in 2..5, n in 1..300",
            criterion_5,
        ),
        (
            "6 bijection round trips, m in 2..5, n in 1..200",
            criterion_6,
        ),
        (
            "7 b_m(mn) mod m digit product, m in 2..7, n in 1..1000",
            criterion_7,
        ),
        (
            "8 c_m(mn) mod m, both forms and reduction rule",
            criterion_8,
        ),
        (
            "9 Churchhouse congruences, k in 1..2, n in 1..64",
            criterion_9,
        ),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let started = Instant::now();
        let result = check();
        let elapsed = started.elapsed();
        match &result {
            Ok(()) => println!("PASS  criterion {name} ({elapsed:.2?})"),
            Err(reason) => {
                println!("FAIL  criterion {name} ({elapsed:.2?}): {reason}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
