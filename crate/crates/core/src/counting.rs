//! `b_m(n)` and `c_m(n)`.
//!
//! Both counts are nested sums driven by the digits of `n`:
//!
//! ```text
//! b_m(n) = sum_{k_j=0}^{alpha_j} sum_{k_(j-1)=0}^{alpha_(j-1) + m k_j} ... sum_{k_1=0}^{alpha_1 + m k_2} 1
//!
//! c_m(n) = 1 + sum_{r=1}^{j} sum_{k_r=chi_r}^{floor(n / m^r) - 1}
//!                ... sum_{k_1=chi_1}^{alpha_1 - 1 + m k_2} 1
//! ```
//!
//! with `chi_i = 0` if `alpha_(i-1) > 0` and `1` otherwise. The `*_nested`
//! functions run these loops literally; the `*_poly` functions carry each level
//! as an integer-valued polynomial in the next index. `b_m(n)` additionally has
//! two oracles from the generating function `prod_k 1 / (1 - q^(m^k))`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::partition::{count_enumerated, Family};
use crate::polysum::IntPolynomial;
use crate::radix::BaseRepr;

/// An exact nonnegative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Count(BigUint);

impl Count {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    /// The count reduced modulo `modulus`.
    pub fn residue(&self, modulus: u64) -> u64 {
        (&self.0 % modulus)
            .to_u64()
            .expect("a residue is smaller than its modulus")
    }

    fn from_bigint(value: BigInt) -> Count {
        Count(value.to_biguint().expect("counts are never negative"))
    }
}

impl From<u64> for Count {
    fn from(value: u64) -> Self {
        Count(BigUint::from(value))
    }
}

impl From<BigUint> for Count {
    fn from(value: BigUint) -> Self {
        Count(value)
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Lower summation bounds `(chi_1, ..., chi_j)` of the gap-free formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiVector(Vec<u8>);

impl ChiVector {
    /// `chi_i` for `1 <= i <= j`.
    pub fn chi(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// `(chi_1, ..., chi_j)`.
    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `chi_i = 0` when `alpha_(i-1) > 0`, else `1`. Empty for single-digit `n`.
pub fn chi_vector(repr: &BaseRepr) -> ChiVector {
    ChiVector(
        (1..=repr.top_index())
            .map(|i| u8::from(repr.digit(i - 1) == 0))
            .collect(),
    )
}

fn positive_repr(base: u32, n: u64) -> Result<BaseRepr> {
    let repr = BaseRepr::new(base, n)?;
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    Ok(repr)
}

fn check_loop_budget(required: &Count, budget: u64) -> Result<()> {
    if *required.value() > BigUint::from(budget) {
        return Err(Error::LoopBudget {
            budget,
            required: required.to_string(),
        });
    }
    Ok(())
}

/// `b_m(n)` by literal nested loops, one innermost step per counted sequence.
///
/// Fails with [`Error::LoopBudget`] before looping when the number of steps,
/// which equals `b_m(n)`, exceeds `budget`.
pub fn count_b_nested(base: u32, n: u64, budget: u64) -> Result<Count> {
    let repr = positive_repr(base, n)?;
    let top = repr.top_index();
    if top == 0 {
        return Ok(Count::from(1));
    }
    check_loop_budget(&count_b_poly(base, n)?, budget)?;

    fn level(repr: &BaseRepr, t: usize, upper: u64, m: u64, total: &mut u64) {
        if t == 1 {
            for _k1 in 0..=upper {
                *total += 1;
            }
            return;
        }
        for k in 0..=upper {
            level(repr, t - 1, u64::from(repr.digit(t - 1)) + m * k, m, total);
        }
    }
    let mut total = 0u64;
    level(
        &repr,
        top,
        u64::from(repr.digit(top)),
        u64::from(base),
        &mut total,
    );
    Ok(Count::from(total))
}

/// `b_m(n)` with each summation level held as a polynomial in the index above.
///
/// `g_0 = 1`, `g_t(k) = G_t(alpha_t + m k)` where `G_t` is the prefix sum of
/// `g_(t-1)`, and the answer is `G_j(alpha_j)`.
pub fn count_b_poly(base: u32, n: u64) -> Result<Count> {
    let repr = positive_repr(base, n)?;
    let top = repr.top_index();
    let mut inner = IntPolynomial::one();
    for t in 1..top {
        inner = inner.prefix_sum().compose_affine(base, repr.digit(t));
    }
    if top == 0 {
        return Ok(Count::from(1));
    }
    Ok(Count::from_bigint(inner.prefix_sum().eval(repr.digit(top))))
}

/// `b_m(0..=n)` from `b(k) = b(k - 1) + [m | k] b(k / m)`, `b(0) = 1`.
pub fn b_table(base: u32, n: u64) -> Result<Vec<BigUint>> {
    crate::radix::check_base(base)?;
    let len = usize::try_from(n)
        .ok()
        .and_then(|n| n.checked_add(1))
        .ok_or(Error::Overflow("table length"))?;
    let m = base as usize;
    let mut table: Vec<BigUint> = Vec::with_capacity(len);
    table.push(BigUint::from(1u32));
    for k in 1..len {
        let mut next = table[k - 1].clone();
        if k % m == 0 {
            next += &table[k / m];
        }
        table.push(next);
    }
    Ok(table)
}

/// `b_m(n)` from the recurrence implied by `(1 - q) B_m(q) = B_m(q^m)`.
pub fn count_b_recurrence(base: u32, n: u64) -> Result<Count> {
    let mut table = b_table(base, n)?;
    Ok(Count(table.pop().expect("table has n + 1 entries")))
}

/// Coefficients `b_m(0), ..., b_m(order)` of the truncated product
/// `prod_{m^k <= order} 1 / (1 - q^(m^k))`.
///
/// Each factor is applied as a strided prefix sum over the coefficient array.
pub fn count_b_gf(base: u32, order: u64) -> Result<Vec<Count>> {
    crate::radix::check_base(base)?;
    let len = usize::try_from(order)
        .ok()
        .and_then(|n| n.checked_add(1))
        .ok_or(Error::Overflow("series length"))?;
    let mut coeffs = vec![BigUint::zero(); len];
    coeffs[0] = BigUint::from(1u32);
    let mut power = 1usize;
    while power < len {
        for x in power..len {
            let (low, high) = coeffs.split_at_mut(x);
            high[0] += &low[x - power];
        }
        match power.checked_mul(base as usize) {
            Some(next) => power = next,
            None => break,
        }
    }
    Ok(coeffs.into_iter().map(Count).collect())
}

/// Bounds of one literal gap-free stratum: `k_r` runs over
/// `[chi_r, floor(n / m^r) - 1]` and `k_t` over `[chi_t, alpha_t - 1 + m k_(t+1)]`.
fn stratum_nested(repr: &BaseRepr, chis: &ChiVector, r: usize) -> u64 {
    fn level(repr: &BaseRepr, chis: &ChiVector, t: usize, upper: i128, total: &mut u64) {
        let m = i128::from(repr.base());
        let lower = i128::from(chis.chi(t));
        if t == 1 {
            for _k1 in lower..=upper {
                *total += 1;
            }
            return;
        }
        for k in lower..=upper {
            let next = i128::from(repr.digit(t - 1)) - 1 + m * k;
            level(repr, chis, t - 1, next, total);
        }
    }
    let mut total = 0u64;
    let top_upper = i128::from(repr.shifted_down(r)) - 1;
    level(repr, chis, r, top_upper, &mut total);
    total
}

/// `c_m(n)` by literal nested loops over every stratum.
///
/// One innermost step is taken per gap-free partition with at least two
/// distinct parts, so the step count is `c_m(n) - 1`; the budget is checked
/// against it before looping.
pub fn count_c_nested(base: u32, n: u64, budget: u64) -> Result<Count> {
    let repr = positive_repr(base, n)?;
    let top = repr.top_index();
    if top == 0 {
        return Ok(Count::from(1));
    }
    let required = count_c_poly(base, n)?;
    check_loop_budget(&Count(required.value() - BigUint::from(1u32)), budget)?;
    let chis = chi_vector(&repr);
    let total = (1..=top)
        .map(|r| stratum_nested(&repr, &chis, r))
        .fold(1u64, |acc, s| acc + s);
    Ok(Count::from(total))
}

/// Whether the polynomial for level `t` is exact on its whole domain.
///
/// `h_t(k) = S_t(alpha_t - 1 + m k) - S_t(chi_t - 1)` only counts the range
/// `[chi_t, alpha_t - 1 + m k]` when the upper end is at least `chi_t - 1`.
/// The next level only evaluates `h_t` at `k >= chi_(t+1)`, and the upper end
/// grows with `k`, so checking `k = chi_(t+1)` suffices.
fn level_is_exact(repr: &BaseRepr, chis: &ChiVector, t: usize) -> bool {
    let m = i64::from(repr.base());
    let lowest_upper = i64::from(repr.digit(t)) - 1 + m * i64::from(chis.chi(t + 1));
    lowest_upper >= i64::from(chis.chi(t)) - 1
}

/// `c_m(n)` with each summation level held as a polynomial in the index above.
///
/// The inner polynomials `h_1, h_2, ...` do not depend on the stratum `r`, so
/// they are built once and stratum `r` sums `h_(r-1)` over
/// `[chi_r, floor(n / m^r) - 1]`.
pub fn count_c_poly(base: u32, n: u64) -> Result<Count> {
    let repr = positive_repr(base, n)?;
    let top = repr.top_index();
    let chis = chi_vector(&repr);
    let mut total = BigInt::from(1);
    let mut inner = IntPolynomial::one();
    let mut exact = true;
    for r in 1..=top {
        if r > 1 {
            let t = r - 1;
            let level_exact = level_is_exact(&repr, &chis, t);
            debug_assert!(
                level_exact,
                "lower summation bound above upper bound at level {t}"
            );
            exact &= level_exact;
            let sums = inner.prefix_sum();
            let below = sums.eval(i64::from(chis.chi(t)) - 1);
            inner = sums.compose_affine(base, i64::from(repr.digit(t)) - 1) - &below;
        }
        if exact {
            let upper = i128::from(repr.shifted_down(r)) - 1;
            total += inner.sum_range(i64::from(chis.chi(r)), upper)?;
        } else {
            total += stratum_nested(&repr, &chis, r);
        }
    }
    Ok(Count::from_bigint(total))
}

/// Which count to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// All m-ary partitions, `b_m(n)`.
    B,
    /// Gap-free m-ary partitions, `c_m(n)`.
    C,
}

/// How to compute a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Nested,
    Poly,
    Recurrence,
    Gf,
    Enumerate,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Nested,
        Method::Poly,
        Method::Recurrence,
        Method::Gf,
        Method::Enumerate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Nested => "nested",
            Method::Poly => "poly",
            Method::Recurrence => "recurrence",
            Method::Gf => "gf",
            Method::Enumerate => "enumerate",
        }
    }

    pub fn applies_to(self, kind: Kind) -> bool {
        kind == Kind::B || !matches!(self, Method::Recurrence | Method::Gf)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// Dispatches to the requested method.
pub fn count(kind: Kind, method: Method, base: u32, n: u64, budgets: &Budgets) -> Result<Count> {
    match (kind, method) {
        (Kind::B, Method::Nested) => count_b_nested(base, n, budgets.nested_steps),
        (Kind::B, Method::Poly) => count_b_poly(base, n),
        (Kind::B, Method::Recurrence) => count_b_recurrence(base, n),
        (Kind::B, Method::Gf) => {
            let mut coeffs = count_b_gf(base, n)?;
            Ok(coeffs.pop().expect("series has n + 1 coefficients"))
        }
        (Kind::C, Method::Nested) => count_c_nested(base, n, budgets.nested_steps),
        (Kind::C, Method::Poly) => count_c_poly(base, n),
        (Kind::C, Method::Recurrence | Method::Gf) => {
            Err(Error::Unsupported("the generating-function oracle"))
        }
        (kind, Method::Enumerate) => {
            let family = match kind {
                Kind::B => Family::All,
                Kind::C => Family::GapFree,
            };
            positive_repr(base, n)?;
            count_enumerated(base, n, family, budgets.enumeration).map(Count::from)
        }
    }
}
