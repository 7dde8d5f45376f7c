//! Partition values and brute-force enumeration of `B_m(n)` and its gap-free
//! subset. These are the ground-truth oracles for the counting formulas.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::radix::{check_base, BaseRepr};

/// An m-ary partition as a multiplicity vector: `mults[i]` copies of `m^i`.
///
/// Stored least exponent first with no zero multiplicity at the top, so the
/// empty vector is the empty partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaryPartition {
    base: u32,
    mults: Vec<u64>,
}

impl MaryPartition {
    /// Multiplicities least exponent first. Zero multiplicities at the top are
    /// dropped.
    pub fn new(base: u32, mults: &[u64]) -> Result<Self> {
        check_base(base)?;
        let mut mults = mults.to_vec();
        while mults.last() == Some(&0) {
            mults.pop();
        }
        Ok(MaryPartition { base, mults })
    }

    /// Multiplicities in printed order `(lambda_l, ..., lambda_0)`.
    pub fn from_msf(base: u32, mults: &[u64]) -> Result<Self> {
        let lsf: Vec<u64> = mults.iter().rev().copied().collect();
        Self::new(base, &lsf)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn mults(&self) -> &[u64] {
        &self.mults
    }

    /// `lambda_i`, zero above the largest part.
    pub fn multiplicity(&self, i: usize) -> u64 {
        self.mults.get(i).copied().unwrap_or(0)
    }

    /// Exponent of the largest part, `None` for the empty partition.
    pub fn largest_exponent(&self) -> Option<usize> {
        self.mults.len().checked_sub(1)
    }

    /// The partitioned integer `sum lambda_i m^i`, saturating at `u128::MAX`.
    pub fn weight(&self) -> u128 {
        let m = u128::from(self.base);
        self.mults.iter().rev().fold(0u128, |acc, &mult| {
            acc.saturating_mul(m).saturating_add(u128::from(mult))
        })
    }

    /// True when every power below the largest part occurs at least once.
    pub fn is_gap_free(&self) -> bool {
        self.mults.iter().all(|&mult| mult > 0)
    }

    /// Multiplicities most significant first, left-padded with zeros to `len`.
    pub fn padded_msf(&self, len: usize) -> Vec<u64> {
        let len = len.max(self.mults.len());
        (0..len).rev().map(|i| self.multiplicity(i)).collect()
    }
}

impl fmt::Display for MaryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.mults.iter().rev())
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, item) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// Which partitions an enumeration visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    All,
    GapFree,
}

/// Visits the partitions of `n` in descending lexicographic order of the
/// padded multiplicity tuple `(lambda_j, ..., lambda_0)`, where `j` is the top
/// digit index of `n`.
///
/// The visitor receives that tuple, most significant first, and may stop the
/// walk early.
pub fn visit_partitions<F>(base: u32, n: u64, family: Family, mut visit: F) -> Result<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    let repr = BaseRepr::new(base, n)?;
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let top = repr.top_index();
    let m = u64::from(base);
    let powers: Vec<u64> = (0..=top as u32).map(|k| m.pow(k)).collect();
    // min_below[k] = m^0 + ... + m^(k-1): the least weight a gap-free tail
    // under level k can have.
    let mut min_below = vec![0u64; top + 1];
    for k in 1..=top {
        min_below[k] = min_below[k - 1] + powers[k - 1];
    }
    let mut walker = Walker {
        powers,
        min_below,
        gap_free: family == Family::GapFree,
        tuple: vec![0; top + 1],
        visit: &mut visit,
    };
    let _ = walker.descend(top, n, false);
    Ok(())
}

struct Walker<'a, F> {
    powers: Vec<u64>,
    min_below: Vec<u64>,
    gap_free: bool,
    tuple: Vec<u64>,
    visit: &'a mut F,
}

impl<F: FnMut(&[u64]) -> ControlFlow<()>> Walker<'_, F> {
    fn slot(&self, level: usize) -> usize {
        self.tuple.len() - 1 - level
    }

    fn descend(&mut self, level: usize, rem: u64, started: bool) -> ControlFlow<()> {
        let slot = self.slot(level);
        if level == 0 {
            if self.gap_free && started && rem == 0 {
                return ControlFlow::Continue(());
            }
            self.tuple[slot] = rem;
            return (self.visit)(&self.tuple);
        }
        let power = self.powers[level];
        let max = if self.gap_free {
            rem.saturating_sub(self.min_below[level]) / power
        } else {
            rem / power
        };
        let min = u64::from(self.gap_free && started);
        let mut mult = max;
        loop {
            if mult < min {
                break;
            }
            self.tuple[slot] = mult;
            self.descend(level - 1, rem - mult * power, started || mult > 0)?;
            if mult == 0 {
                break;
            }
            mult -= 1;
        }
        ControlFlow::Continue(())
    }
}

fn collect(base: u32, n: u64, family: Family, budget: u64) -> Result<Vec<MaryPartition>> {
    let mut out = Vec::new();
    let mut over = false;
    visit_partitions(base, n, family, |tuple| {
        if out.len() as u64 >= budget {
            over = true;
            return ControlFlow::Break(());
        }
        let lsf: Vec<u64> = tuple.iter().rev().copied().collect();
        out.push(MaryPartition::new(base, &lsf).expect("base already checked"));
        ControlFlow::Continue(())
    })?;
    if over {
        return Err(Error::EnumerationBudget { budget });
    }
    Ok(out)
}

/// Every m-ary partition of `n`, in descending lexicographic order of the
/// multiplicities padded to `j + 1` entries.
pub fn enumerate_b(base: u32, n: u64, budget: u64) -> Result<Vec<MaryPartition>> {
    collect(base, n, Family::All, budget)
}

/// The gap-free m-ary partitions of `n`, in the same order as [`enumerate_b`].
pub fn enumerate_c(base: u32, n: u64, budget: u64) -> Result<Vec<MaryPartition>> {
    collect(base, n, Family::GapFree, budget)
}

/// Counts the partitions an enumeration would produce without materializing
/// them.
pub fn count_enumerated(base: u32, n: u64, family: Family, budget: u64) -> Result<u64> {
    let mut count = 0u64;
    let mut over = false;
    visit_partitions(base, n, family, |_| {
        if count >= budget {
            over = true;
            return ControlFlow::Break(());
        }
        count += 1;
        ControlFlow::Continue(())
    })?;
    if over {
        return Err(Error::EnumerationBudget { budget });
    }
    Ok(count)
}
