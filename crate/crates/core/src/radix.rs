//! Base-`m` digit vectors.

use std::fmt;

use crate::error::{Error, Result};

/// The base-`m` representation `r_m(n)` of a nonnegative integer.
///
/// Digits are stored least significant first; `Display` prints them most
/// significant first, comma separated (`r_4(36)` prints as `2,1,0`). Zero is
/// represented by the single digit `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseRepr {
    base: u32,
    digits: Vec<u32>,
}

pub(crate) fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        Err(Error::InvalidBase(base))
    } else {
        Ok(())
    }
}

/// Computes `r_m(n)`.
pub fn to_base(base: u32, n: u64) -> Result<BaseRepr> {
    BaseRepr::new(base, n)
}

/// Reconstructs `n` from its digits.
pub fn from_base(repr: &BaseRepr) -> u64 {
    repr.value()
}

/// Appends a trailing zero digit, giving `r_m(m * n)`.
pub fn shift_up(repr: &BaseRepr) -> Result<BaseRepr> {
    repr.shift_up()
}

impl BaseRepr {
    pub fn new(base: u32, mut n: u64) -> Result<Self> {
        check_base(base)?;
        let m = u64::from(base);
        let mut digits = Vec::new();
        while n > 0 {
            digits.push((n % m) as u32);
            n /= m;
        }
        if digits.is_empty() {
            digits.push(0);
        }
        Ok(BaseRepr { base, digits })
    }

    /// Builds a representation from explicit digits, least significant first.
    ///
    /// Leading (high) zeros are stripped. The digits must encode a value that
    /// fits in a `u64`.
    pub fn from_digits(base: u32, digits: &[u32]) -> Result<Self> {
        check_base(base)?;
        if let Some(&digit) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::DigitOutOfRange { digit, base });
        }
        let mut digits = digits.to_vec();
        while digits.len() > 1 && digits.last() == Some(&0) {
            digits.pop();
        }
        if digits.is_empty() {
            digits.push(0);
        }
        let repr = BaseRepr { base, digits };
        repr.checked_value()
            .ok_or(Error::Overflow("digits exceed u64"))?;
        Ok(repr)
    }

    /// Like [`BaseRepr::from_digits`] but with the most significant digit first,
    /// the order used in printed tuples.
    pub fn from_digits_msf(base: u32, digits: &[u32]) -> Result<Self> {
        let lsf: Vec<u32> = digits.iter().rev().copied().collect();
        Self::from_digits(base, &lsf)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// Digits `alpha_0, ..., alpha_j`, least significant first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Index `j` of the most significant digit, so `m^j <= n < m^(j+1)`.
    pub fn top_index(&self) -> usize {
        self.digits.len() - 1
    }

    /// `alpha_i`, zero above the top digit.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.digits == [0]
    }

    /// Index of the lowest nonzero digit, `None` for zero.
    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d != 0)
    }

    fn checked_value(&self) -> Option<u64> {
        let m = u64::from(self.base);
        self.digits.iter().rev().try_fold(0u64, |acc, &d| {
            acc.checked_mul(m)?.checked_add(u64::from(d))
        })
    }

    pub fn value(&self) -> u64 {
        // Construction guarantees the value fits.
        self.checked_value().expect("BaseRepr value fits in u64")
    }

    /// `floor(n / m^r)`, the number formed by digits `r..=j`.
    pub fn shifted_down(&self, r: usize) -> u64 {
        let m = u64::from(self.base);
        self.digits
            .iter()
            .skip(r)
            .rev()
            .fold(0u64, |acc, &d| acc * m + u64::from(d))
    }

    pub fn shift_up(&self) -> Result<BaseRepr> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        self.value()
            .checked_mul(u64::from(self.base))
            .ok_or(Error::Overflow("m * n exceeds u64"))?;
        let mut digits = Vec::with_capacity(self.digits.len() + 1);
        digits.push(0);
        digits.extend_from_slice(&self.digits);
        Ok(BaseRepr {
            base: self.base,
            digits,
        })
    }
}

impl fmt::Display for BaseRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
