//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Three interactive operations: counting, the partition/sequence table, and
//! congruence predictions. Each binding returns JSON for the page to render.

use mpart_core::bijection::correspondence_table;
use mpart_core::congruence::{afs_c_mod, b_mod_product, c_mod_formula};
use mpart_core::counting::{chi_vector, count_b_poly, count_c_poly};
use mpart_core::partition::{count_enumerated, Family};
use mpart_core::{BaseRepr, Budgets};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Tables in the browser stay small enough to render.
const TABLE_LIMIT: u64 = 5_000;

#[derive(Serialize)]
struct CountRow {
    n: u64,
    b: String,
    c: String,
}

#[derive(Serialize)]
struct Counts {
    digits: String,
    chi: Vec<u8>,
    b: String,
    c: String,
    /// Brute-force confirmation when the enumeration is small.
    b_enumerated: Option<u64>,
    c_enumerated: Option<u64>,
    /// `b` and `c` for every `k` in `1..=n` when `n` is small, for plotting.
    series: Vec<CountRow>,
}

#[derive(Serialize)]
struct TableRow {
    lambda: String,
    beta: String,
}

#[derive(Serialize)]
struct CongruenceRow {
    n: u64,
    digits: String,
    b_predicted: u64,
    b_actual: u64,
    c_predicted: u64,
    c_parity_form: u64,
    c_actual: u64,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Exact `b_m(n)` and `c_m(n)` with the digit data behind them.
pub fn counts_json(base: u32, n: u64) -> Result<String, String> {
    let repr = BaseRepr::new(base, n).map_err(|e| e.to_string())?;
    let b = count_b_poly(base, n).map_err(|e| e.to_string())?;
    let c = count_c_poly(base, n).map_err(|e| e.to_string())?;
    let budget = Budgets::default().enumeration / 10;
    let series = if n <= 400 {
        (1..=n)
            .map(|k| {
                Ok(CountRow {
                    n: k,
                    b: count_b_poly(base, k)?.to_string(),
                    c: count_c_poly(base, k)?.to_string(),
                })
            })
            .collect::<Result<_, mpart_core::Error>>()
            .map_err(|e| e.to_string())?
    } else {
        Vec::new()
    };
    Ok(to_json(&Counts {
        digits: repr.to_string(),
        chi: chi_vector(&repr).as_slice().to_vec(),
        b: b.to_string(),
        c: c.to_string(),
        b_enumerated: count_enumerated(base, n, Family::All, budget).ok(),
        c_enumerated: count_enumerated(base, n, Family::GapFree, budget).ok(),
        series,
    }))
}

/// The partition/sequence correspondence for `n`.
pub fn table_json(base: u32, n: u64) -> Result<String, String> {
    let rows = correspondence_table(base, n, TABLE_LIMIT).map_err(|e| e.to_string())?;
    let rows: Vec<TableRow> = rows
        .iter()
        .map(|row| TableRow {
            lambda: row
                .partition
                .padded_msf(row.beta.repr().top_index() + 1)
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(","),
            beta: row.beta.to_string(),
        })
        .collect();
    Ok(to_json(&rows))
}

/// Predicted and exact residues of `b_m(mk)` and `c_m(mk)` for `k` in
/// `from..=to`.
pub fn congruence_json(base: u32, from: u64, to: u64) -> Result<String, String> {
    if from == 0 || from > to || to - from > 2_000 {
        return Err("choose 1 <= from <= to with at most 2000 values".into());
    }
    let m = u64::from(base);
    let rows = (from..=to)
        .map(|k| {
            let repr = BaseRepr::new(base, k)?;
            let mk = k
                .checked_mul(m)
                .ok_or(mpart_core::Error::Overflow("m * n"))?;
            Ok(CongruenceRow {
                n: k,
                digits: repr.to_string(),
                b_predicted: b_mod_product(&repr).value(),
                b_actual: count_b_poly(base, mk)?.residue(m),
                c_predicted: c_mod_formula(&repr).value(),
                c_parity_form: afs_c_mod(&repr).value(),
                c_actual: count_c_poly(base, mk)?.residue(m),
            })
        })
        .collect::<Result<Vec<_>, mpart_core::Error>>()
        .map_err(|e| e.to_string())?;
    Ok(to_json(&rows))
}

#[wasm_bindgen]
pub fn counts(base: u32, n: u64) -> Result<String, JsError> {
    counts_json(base, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn table(base: u32, n: u64) -> Result<String, JsError> {
    table_json(base, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn congruences(base: u32, from: u64, to: u64) -> Result<String, JsError> {
    congruence_json(base, from, to).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn counts_for_worked_examples() {
        let v = parse(&counts_json(5, 2425).unwrap());
        assert_eq!(v["c"], "230358");
        assert_eq!(v["digits"], "3,4,2,0,0");
        let v = parse(&counts_json(3, 10).unwrap());
        assert_eq!(v["b"], "5");
        assert_eq!(v["b_enumerated"], 5);
        assert_eq!(v["c_enumerated"], 4);
        assert_eq!(v["series"].as_array().unwrap().len(), 10);
        assert!(counts_json(1, 10).is_err());
    }

    #[test]
    fn table_for_36() {
        let v = parse(&table_json(4, 36).unwrap());
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 18);
        assert_eq!(rows[17]["lambda"], "0,0,36");
        assert_eq!(rows[17]["beta"], "2,9");
        assert!(table_json(2, 1000).is_err());
    }

    #[test]
    fn congruence_rows_agree() {
        let v = parse(&congruence_json(5, 480, 490).unwrap());
        for row in v.as_array().unwrap() {
            assert_eq!(row["b_predicted"], row["b_actual"]);
            assert_eq!(row["c_predicted"], row["c_actual"]);
            assert_eq!(row["c_parity_form"], row["c_actual"]);
        }
        assert!(congruence_json(5, 0, 3).is_err());
        assert!(congruence_json(5, 1, 9000).is_err());
    }
}
