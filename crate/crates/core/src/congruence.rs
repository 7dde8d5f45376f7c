//! Predictions of `b_m(mn)` and `c_m(mn)` modulo `m` from the digits of `n`,
//! and the Churchhouse congruences for binary partitions.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::counting::{b_table, chi_vector, count_c_poly};
use crate::error::{Error, Result};
use crate::radix::BaseRepr;

/// A residue normalized into `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i128, modulus: u64) -> Residue {
        let value = value.rem_euclid(i128::from(modulus)) as u64;
        Residue { value, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Accumulates `sum_i prod_{k <= i} factor_k` modulo `m` without overflow.
fn sum_of_running_products(m: i128, factors: impl Iterator<Item = i128>) -> i128 {
    let mut product = 1i128;
    let mut sum = 0i128;
    for factor in factors {
        product = (product * factor).rem_euclid(m);
        sum = (sum + product).rem_euclid(m);
    }
    sum
}

/// `b_m(mn) = prod_{i=0}^{j} (alpha_i + 1) (mod m)`.
pub fn b_mod_product(repr: &BaseRepr) -> Residue {
    let m = i128::from(repr.base());
    let product = repr
        .digits()
        .iter()
        .fold(1i128, |acc, &d| (acc * (i128::from(d) + 1)).rem_euclid(m));
    Residue::new(product, repr.base().into())
}

/// `c_m(mn) = alpha_0 + (alpha_0 - 1) sum_{i=1}^{j} prod_{k=1}^{i} (alpha_k - chi_k) (mod m)`.
pub fn c_mod_formula(repr: &BaseRepr) -> Residue {
    let m = i128::from(repr.base());
    let chis = chi_vector(repr);
    let alpha0 = i128::from(repr.digit(0));
    let sum = sum_of_running_products(
        m,
        (1..=repr.top_index()).map(|k| i128::from(repr.digit(k)) - i128::from(chis.chi(k))),
    );
    Residue::new(alpha0 + (alpha0 - 1) * sum, repr.base().into())
}

/// The even/odd form keyed on the lowest nonzero digit `alpha_l`:
///
/// - `l` even: `alpha_l + (alpha_l - 1) sum_{i>l} alpha_(l+1) ... alpha_i`
/// - `l` odd: `1 - alpha_l - (alpha_l - 1) sum_{i>l} alpha_(l+1) ... alpha_i`
///
/// with digits above `j` taken as zero, so the sums stop at `i = j`.
pub fn afs_c_mod(repr: &BaseRepr) -> Residue {
    let m = i128::from(repr.base());
    let Some(low) = repr.lowest_nonzero() else {
        // c_m(0) = 1
        return Residue::new(1, repr.base().into());
    };
    let alpha = i128::from(repr.digit(low));
    let sum = sum_of_running_products(
        m,
        (low + 1..=repr.top_index()).map(|i| i128::from(repr.digit(i))),
    );
    let value = if low % 2 == 0 {
        alpha + (alpha - 1) * sum
    } else {
        1 - alpha - (alpha - 1) * sum
    };
    Residue::new(value, repr.base().into())
}

/// `c_m(n) mod m`, computed exactly.
pub fn c_residue(base: u32, n: u64) -> Result<Residue> {
    let count = count_c_poly(base, n)?;
    Ok(Residue::new(count.residue(base.into()).into(), base.into()))
}

/// One side-by-side comparison of two binary partition counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChurchhouseCase {
    /// Argument of the larger count, e.g. `2^(2k+2) n`.
    pub high: u64,
    /// Argument of the smaller count, e.g. `2^(2k) n`.
    pub low: u64,
    /// The modulus `2^(3k+2)` or `2^(3k)`.
    pub modulus: BigUint,
    pub high_residue: BigUint,
    pub low_residue: BigUint,
}

impl ChurchhouseCase {
    pub fn holds(&self) -> bool {
        self.high_residue == self.low_residue
    }
}

/// Both Churchhouse congruences for `(k, n)`:
///
/// - `b_2(2^(2k+2) n) = b_2(2^(2k) n) (mod 2^(3k+2))`
/// - `b_2(2^(2k+1) n) = b_2(2^(2k-1) n) (mod 2^(3k))`
pub fn churchhouse_cases(k: u32, n: u64) -> Result<[ChurchhouseCase; 2]> {
    if k == 0 || n == 0 {
        return Err(Error::ZeroInput);
    }
    let scaled = |e: u32| {
        1u64.checked_shl(e)
            .and_then(|p| p.checked_mul(n))
            .ok_or(Error::Overflow("2^e n exceeds u64"))
    };
    let top = scaled(2 * k + 2)?;
    let table = b_table(2, top)?;
    let case = |high: u64, low: u64, exp: u32| {
        let modulus = BigUint::from(1u32) << exp;
        ChurchhouseCase {
            high,
            low,
            high_residue: table[high as usize].mod_floor(&modulus),
            low_residue: table[low as usize].mod_floor(&modulus),
            modulus,
        }
    };
    Ok([
        case(top, scaled(2 * k)?, 3 * k + 2),
        case(scaled(2 * k + 1)?, scaled(2 * k - 1)?, 3 * k),
    ])
}

/// Whether each Churchhouse congruence holds for `(k, n)`.
pub fn churchhouse_check(k: u32, n: u64) -> Result<(bool, bool)> {
    let [first, second] = churchhouse_cases(k, n)?;
    Ok((first.holds(), second.holds()))
}
