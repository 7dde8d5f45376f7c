//! Batch checks over a grid of `(m, n)`.
//!
//! Each suite compares independent routes to the same quantity and records
//! every disagreement. Cases may run in parallel (feature `parallel`) but the
//! report always lists failures in `(m, n)` order.

use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bijection::{members, phi, phi_inv};
use crate::budget::Budgets;
use crate::congruence::{afs_c_mod, b_mod_product, c_mod_formula, c_residue, churchhouse_cases};
use crate::counting::{
    b_table, count_b_gf, count_b_nested, count_b_poly, count_c_nested, count_c_poly, Count,
};
use crate::error::{Error, Result};
use crate::partition::{count_enumerated, enumerate_b, Family};
use crate::radix::BaseRepr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// nested, poly, recurrence and generating-function values of `b_m(n)`.
    OracleB,
    /// nested, poly and enumerated values of `c_m(n)`.
    OracleC,
    /// Round trips, injectivity and surjectivity of `phi`.
    Bijection,
    /// Digit-product prediction of `b_m(mn) mod m`.
    AfsB,
    /// Digit formula prediction of `c_m(mn) mod m`.
    AfsC,
    /// The even/odd form of the `c_m(mn) mod m` prediction.
    AfsEquiv,
    /// Churchhouse congruences for `b_2`.
    Churchhouse,
    /// `c_m(m^3 n) = c_m(mn) (mod m)`.
    Reduction,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::OracleB,
        Suite::OracleC,
        Suite::Bijection,
        Suite::AfsB,
        Suite::AfsC,
        Suite::AfsEquiv,
        Suite::Churchhouse,
        Suite::Reduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleB => "oracle-b",
            Suite::OracleC => "oracle-c",
            Suite::Bijection => "bijection",
            Suite::AfsB => "afs-b",
            Suite::AfsC => "afs-c",
            Suite::AfsEquiv => "afs-equiv",
            Suite::Churchhouse => "churchhouse",
            Suite::Reduction => "reduction",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// One disagreement. Big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub m: u64,
    pub n: u64,
    pub suite: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct Summary<'a> {
    suite: &'a str,
    cases_run: u64,
    skipped: u64,
    failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub cases_run: u64,
    /// Method evaluations left out because they would exceed a budget.
    pub skipped: u64,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One JSON object per failure followed by a summary object, each on its
    /// own line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for failure in &self.failures {
            out.push_str(&serde_json::to_string(failure).expect("failure serializes"));
            out.push('\n');
        }
        let summary = Summary {
            suite: self.suite.name(),
            cases_run: self.cases_run,
            skipped: self.skipped,
            failures: self.failures.len(),
        };
        out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        out.push('\n');
        out
    }
}

/// The `(m, n)` grid a suite runs over. `ks` is only used by the Churchhouse
/// suite, which fixes `m = 2` and runs over `(k, n)` instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub bases: RangeInclusive<u32>,
    pub ns: RangeInclusive<u64>,
    pub ks: RangeInclusive<u32>,
}

impl Grid {
    pub fn new(bases: RangeInclusive<u32>, ns: RangeInclusive<u64>) -> Grid {
        Grid {
            bases,
            ns,
            ks: 1..=2,
        }
    }

    fn validate(&self) -> Result<()> {
        crate::radix::check_base(*self.bases.start())?;
        if *self.ns.start() == 0 {
            return Err(Error::ZeroInput);
        }
        if *self.ks.start() == 0 {
            return Err(Error::ZeroInput);
        }
        Ok(())
    }
}

#[derive(Default)]
struct Outcome {
    skipped: u64,
    failures: Vec<Failure>,
}

impl Outcome {
    fn fail(&mut self, m: u32, n: u64, suite: String, expected: String, actual: String) {
        self.failures.push(Failure {
            m: m.into(),
            n,
            suite,
            expected,
            actual,
        });
    }

    /// Compares a method's result with the reference, treating a budget
    /// refusal as a skip and any other error as a failure.
    fn compare(&mut self, m: u32, n: u64, label: String, expected: &Count, actual: Result<Count>) {
        match actual {
            Ok(value) if &value == expected => {}
            Ok(value) => self.fail(m, n, label, expected.to_string(), value.to_string()),
            Err(Error::LoopBudget { .. } | Error::EnumerationBudget { .. }) => self.skipped += 1,
            Err(err) => self.fail(m, n, label, expected.to_string(), format!("error: {err}")),
        }
    }
}

#[cfg(feature = "parallel")]
fn map_cases<T, F>(cases: Vec<T>, f: F) -> Vec<Outcome>
where
    T: Send,
    F: Fn(T) -> Outcome + Sync + Send,
{
    use rayon::prelude::*;
    cases.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_cases<T, F>(cases: Vec<T>, f: F) -> Vec<Outcome>
where
    F: Fn(T) -> Outcome,
{
    cases.into_iter().map(f).collect()
}

fn points(grid: &Grid) -> Vec<(u32, u64)> {
    grid.bases
        .clone()
        .flat_map(|m| grid.ns.clone().map(move |n| (m, n)))
        .collect()
}

/// Runs `suite` over `grid`.
pub fn run(suite: Suite, grid: &Grid, budgets: &Budgets) -> Result<VerifyReport> {
    grid.validate()?;
    let outcomes = match suite {
        Suite::OracleB => oracle_b(grid, budgets)?,
        Suite::OracleC => map_cases(points(grid), |(m, n)| oracle_c(m, n, budgets)),
        Suite::Bijection => map_cases(points(grid), |(m, n)| bijection(m, n, budgets)),
        Suite::AfsB => map_cases(points(grid), |(m, n)| afs_b(m, n)),
        Suite::AfsC => map_cases(points(grid), |(m, n)| afs_c(m, n)),
        Suite::AfsEquiv => map_cases(points(grid), |(m, n)| afs_equiv(m, n)),
        Suite::Reduction => map_cases(points(grid), |(m, n)| reduction(m, n)),
        Suite::Churchhouse => {
            let cases: Vec<(u32, u64)> = grid
                .ks
                .clone()
                .flat_map(|k| grid.ns.clone().map(move |n| (k, n)))
                .collect();
            map_cases(cases, |(k, n)| churchhouse(k, n))
        }
    };
    let cases_run = outcomes.len() as u64;
    let mut report = VerifyReport {
        suite,
        cases_run,
        skipped: 0,
        failures: Vec::new(),
    };
    for outcome in outcomes {
        report.skipped += outcome.skipped;
        report.failures.extend(outcome.failures);
    }
    Ok(report)
}

fn oracle_b(grid: &Grid, budgets: &Budgets) -> Result<Vec<Outcome>> {
    let top = *grid.ns.end();
    let mut outcomes = Vec::new();
    for m in grid.bases.clone() {
        let recurrence = b_table(m, top)?;
        let series = count_b_gf(m, top)?;
        let ns: Vec<u64> = grid.ns.clone().collect();
        outcomes.extend(map_cases(ns, |n| {
            let mut outcome = Outcome::default();
            let expected = Count::from(recurrence[n as usize].clone());
            let label = |method: &str| format!("oracle-b:{method}");
            outcome.compare(m, n, label("gf"), &expected, Ok(series[n as usize].clone()));
            outcome.compare(m, n, label("poly"), &expected, count_b_poly(m, n));
            outcome.compare(
                m,
                n,
                label("nested"),
                &expected,
                count_b_nested(m, n, budgets.nested_steps),
            );
            outcome
        }));
    }
    Ok(outcomes)
}

fn oracle_c(m: u32, n: u64, budgets: &Budgets) -> Outcome {
    let mut outcome = Outcome::default();
    let expected = match count_c_poly(m, n) {
        Ok(value) => value,
        Err(err) => {
            outcome.fail(
                m,
                n,
                "oracle-c:poly".into(),
                String::new(),
                format!("error: {err}"),
            );
            return outcome;
        }
    };
    outcome.compare(
        m,
        n,
        "oracle-c:nested".into(),
        &expected,
        count_c_nested(m, n, budgets.nested_steps),
    );
    outcome.compare(
        m,
        n,
        "oracle-c:enumerate".into(),
        &expected,
        count_enumerated(m, n, Family::GapFree, budgets.enumeration).map(Count::from),
    );
    outcome
}

fn bijection(m: u32, n: u64, budgets: &Budgets) -> Outcome {
    let mut outcome = Outcome::default();
    let label = |what: &str| format!("bijection:{what}");
    let (partitions, sequences) = match (
        enumerate_b(m, n, budgets.enumeration),
        members(m, n, budgets.enumeration),
    ) {
        (Ok(p), Ok(s)) => (p, s),
        (Err(Error::EnumerationBudget { .. }), _) | (_, Err(Error::EnumerationBudget { .. })) => {
            outcome.skipped += 1;
            return outcome;
        }
        (Err(err), _) | (_, Err(err)) => {
            outcome.fail(
                m,
                n,
                label("enumerate"),
                String::new(),
                format!("error: {err}"),
            );
            return outcome;
        }
    };

    let mut image = Vec::with_capacity(partitions.len());
    for partition in &partitions {
        match phi(partition, n) {
            Ok(seq) => {
                if !seq.is_member() {
                    outcome.fail(m, n, label("membership"), "member".into(), seq.to_string());
                }
                match phi_inv(&seq) {
                    Ok(back) if &back == partition => {}
                    Ok(back) => outcome.fail(
                        m,
                        n,
                        label("inverse-after-phi"),
                        partition.to_string(),
                        back.to_string(),
                    ),
                    Err(err) => outcome.fail(
                        m,
                        n,
                        label("inverse-after-phi"),
                        partition.to_string(),
                        format!("error: {err}"),
                    ),
                }
                image.push(seq.to_msf());
            }
            Err(err) => outcome.fail(
                m,
                n,
                label("phi"),
                partition.to_string(),
                format!("error: {err}"),
            ),
        }
    }

    let distinct: HashSet<&Vec<u64>> = image.iter().collect();
    if distinct.len() != image.len() {
        outcome.fail(
            m,
            n,
            label("injective"),
            image.len().to_string(),
            distinct.len().to_string(),
        );
    }

    for seq in &sequences {
        let round_trip = phi_inv(seq).and_then(|p| phi(&p, n));
        match round_trip {
            Ok(back) if &back == seq => {}
            Ok(back) => outcome.fail(
                m,
                n,
                label("phi-after-inverse"),
                seq.to_string(),
                back.to_string(),
            ),
            Err(err) => outcome.fail(
                m,
                n,
                label("phi-after-inverse"),
                seq.to_string(),
                format!("error: {err}"),
            ),
        }
    }

    let mut sorted_image = image;
    sorted_image.sort();
    let all: Vec<Vec<u64>> = sequences.iter().map(|s| s.to_msf()).collect();
    if sorted_image != all {
        outcome.fail(
            m,
            n,
            label("surjective"),
            format!("{} members", all.len()),
            format!("{} images", sorted_image.len()),
        );
    }

    match count_b_poly(m, n) {
        Ok(count) if count == partitions.len() as u64 && count == sequences.len() as u64 => {}
        Ok(count) => outcome.fail(
            m,
            n,
            label("cardinality"),
            count.to_string(),
            format!("|B| = {}, |S| = {}", partitions.len(), sequences.len()),
        ),
        Err(err) => outcome.fail(
            m,
            n,
            label("cardinality"),
            String::new(),
            format!("error: {err}"),
        ),
    }
    outcome
}

fn residue_check(
    m: u32,
    n: u64,
    suite: &str,
    predicted: u64,
    actual: Result<u64>,
    outcome: &mut Outcome,
) {
    match actual {
        Ok(value) if value == predicted => {}
        Ok(value) => outcome.fail(m, n, suite.into(), predicted.to_string(), value.to_string()),
        Err(err) => outcome.fail(
            m,
            n,
            suite.into(),
            predicted.to_string(),
            format!("error: {err}"),
        ),
    }
}

fn scaled(m: u32, n: u64, times: u32) -> Result<u64> {
    u64::from(m)
        .checked_pow(times)
        .and_then(|p| p.checked_mul(n))
        .ok_or(Error::Overflow("m^e n exceeds u64"))
}

fn afs_b(m: u32, n: u64) -> Outcome {
    let mut outcome = Outcome::default();
    let predicted = BaseRepr::new(m, n).map(|r| b_mod_product(&r).value());
    let actual = scaled(m, n, 1)
        .and_then(|mn| count_b_poly(m, mn))
        .map(|c| c.residue(m.into()));
    match predicted {
        Ok(predicted) => residue_check(m, n, "afs-b", predicted, actual, &mut outcome),
        Err(err) => outcome.fail(m, n, "afs-b".into(), String::new(), format!("error: {err}")),
    }
    outcome
}

fn c_of_scaled(m: u32, n: u64, times: u32) -> Result<u64> {
    scaled(m, n, times)
        .and_then(|x| c_residue(m, x))
        .map(|r| r.value())
}

fn afs_c(m: u32, n: u64) -> Outcome {
    let mut outcome = Outcome::default();
    match BaseRepr::new(m, n) {
        Ok(repr) => {
            let predicted = c_mod_formula(&repr).value();
            residue_check(m, n, "afs-c", predicted, c_of_scaled(m, n, 1), &mut outcome);
        }
        Err(err) => outcome.fail(m, n, "afs-c".into(), String::new(), format!("error: {err}")),
    }
    outcome
}

fn afs_equiv(m: u32, n: u64) -> Outcome {
    let mut outcome = Outcome::default();
    match BaseRepr::new(m, n) {
        Ok(repr) => {
            let parity_form = afs_c_mod(&repr).value();
            let digit_form = c_mod_formula(&repr).value();
            residue_check(
                m,
                n,
                "afs-equiv:formulas",
                digit_form,
                Ok(parity_form),
                &mut outcome,
            );
            residue_check(
                m,
                n,
                "afs-equiv:exact",
                parity_form,
                c_of_scaled(m, n, 1),
                &mut outcome,
            );
        }
        Err(err) => outcome.fail(
            m,
            n,
            "afs-equiv".into(),
            String::new(),
            format!("error: {err}"),
        ),
    }
    outcome
}

fn reduction(m: u32, n: u64) -> Outcome {
    let mut outcome = Outcome::default();
    match c_of_scaled(m, n, 1) {
        Ok(expected) => residue_check(
            m,
            n,
            "reduction",
            expected,
            c_of_scaled(m, n, 3),
            &mut outcome,
        ),
        Err(err) => outcome.fail(
            m,
            n,
            "reduction".into(),
            String::new(),
            format!("error: {err}"),
        ),
    }
    outcome
}

fn churchhouse(k: u32, n: u64) -> Outcome {
    let mut outcome = Outcome::default();
    match churchhouse_cases(k, n) {
        Ok(cases) => {
            for (which, case) in ["first", "second"].iter().zip(cases) {
                if !case.holds() {
                    let show = |arg: u64, residue: &BigUint| {
                        format!("b_2({arg}) mod {} = {residue}", case.modulus)
                    };
                    outcome.fail(
                        2,
                        n,
                        format!("churchhouse:k={k}:{which}"),
                        show(case.low, &case.low_residue),
                        show(case.high, &case.high_residue),
                    );
                }
            }
        }
        Err(err) => outcome.fail(
            2,
            n,
            format!("churchhouse:k={k}"),
            String::new(),
            format!("error: {err}"),
        ),
    }
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("oracle-d".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let grid = Grid::new(2..=4, 1..=40);
        for suite in Suite::ALL {
            let report = run(suite, &grid, &Budgets::default()).unwrap();
            assert!(report.passed(), "{suite}: {:?}", report.failures);
            assert!(report.cases_run > 0);
        }
    }

    #[test]
    fn budget_refusals_are_skips() {
        let budgets = Budgets {
            enumeration: 3,
            nested_steps: 3,
        };
        let report = run(Suite::OracleB, &Grid::new(2..=2, 1..=10), &budgets).unwrap();
        assert!(report.passed());
        // b_2(n) > 3 from n = 4 on
        assert_eq!(report.skipped, 7);
        let report = run(Suite::Bijection, &Grid::new(2..=2, 1..=10), &budgets).unwrap();
        assert!(report.passed());
        assert!(report.skipped > 0);
    }

    #[test]
    fn json_lines_shape() {
        let report = VerifyReport {
            suite: Suite::AfsB,
            cases_run: 2,
            skipped: 0,
            failures: vec![Failure {
                m: 3,
                n: 7,
                suite: "afs-b".into(),
                expected: "1".into(),
                actual: "2".into(),
            }],
        };
        assert_eq!(
            report.to_json_lines(),
            concat!(
                r#"{"m":3,"n":7,"suite":"afs-b","expected":"1","actual":"2"}"#,
                "\n",
                r#"{"suite":"afs-b","cases_run":2,"skipped":0,"failures":1}"#,
                "\n"
            )
        );
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(run(Suite::AfsB, &Grid::new(1..=3, 1..=5), &Budgets::default()).is_err());
        assert!(run(Suite::AfsB, &Grid::new(2..=3, 0..=5), &Budgets::default()).is_err());
    }
}
