//! The correspondence between m-ary partitions of `n` and the digit-bounded
//! sequences `S_m(n)`.
//!
//! With `r_m(n) = (alpha_j, ..., alpha_0)`, a partition `lambda` maps to
//! `beta_i = sum_{k=i}^{j} m^(k-i) (alpha_k - lambda_k)` for `1 <= i <= j`.
//! The image is exactly the set of sequences with `0 <= beta_j <= alpha_j` and
//! `0 <= beta_t <= alpha_t + m beta_(t+1)`.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::partition::{enumerate_b, write_tuple, MaryPartition};
use crate::radix::BaseRepr;

/// A sequence `(beta_j, ..., beta_1)` attached to the integer `n` whose digits
/// bound it. There is no `beta_0`; for `n < m` the sequence is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSeq {
    repr: BaseRepr,
    // betas[t - 1] = beta_t
    betas: Vec<u64>,
}

impl BetaSeq {
    /// `betas` is indexed from `beta_1` upwards and must have exactly `j`
    /// entries. Membership in `S_m(n)` is not checked here; see
    /// [`BetaSeq::is_member`].
    pub fn new(base: u32, n: u64, betas: &[u64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroInput);
        }
        let repr = BaseRepr::new(base, n)?;
        if betas.len() != repr.top_index() {
            return Err(Error::WrongLength {
                expected: repr.top_index(),
                actual: betas.len(),
            });
        }
        Ok(BetaSeq {
            repr,
            betas: betas.to_vec(),
        })
    }

    /// `betas` in printed order `(beta_j, ..., beta_1)`.
    pub fn from_msf(base: u32, n: u64, betas: &[u64]) -> Result<Self> {
        let lsf: Vec<u64> = betas.iter().rev().copied().collect();
        Self::new(base, n, &lsf)
    }

    pub fn repr(&self) -> &BaseRepr {
        &self.repr
    }

    pub fn n(&self) -> u64 {
        self.repr.value()
    }

    /// `beta_t` for `1 <= t <= j`.
    pub fn beta(&self, t: usize) -> u64 {
        self.betas[t - 1]
    }

    /// `(beta_1, ..., beta_j)`.
    pub fn betas(&self) -> &[u64] {
        &self.betas
    }

    /// `(beta_j, ..., beta_1)`.
    pub fn to_msf(&self) -> Vec<u64> {
        self.betas.iter().rev().copied().collect()
    }

    /// Upper bound on `beta_t` given the entries above it.
    fn bound(&self, t: usize) -> u128 {
        let alpha = u128::from(self.repr.digit(t));
        if t == self.repr.top_index() {
            alpha
        } else {
            alpha + u128::from(self.repr.base()) * u128::from(self.beta(t + 1))
        }
    }

    fn first_violation(&self) -> Option<(usize, u64, u128)> {
        (1..=self.repr.top_index())
            .rev()
            .map(|t| (t, self.beta(t), self.bound(t)))
            .find(|&(_, value, bound)| u128::from(value) > bound)
    }

    /// Whether the chained bounds of `S_m(n)` hold.
    pub fn is_member(&self) -> bool {
        self.first_violation().is_none()
    }
}

impl fmt::Display for BetaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.betas.iter().rev())
    }
}

/// `phi(lambda) = r_m(n) - lambda`.
pub fn phi(partition: &MaryPartition, n: u64) -> Result<BetaSeq> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let weight = partition.weight();
    if weight != u128::from(n) {
        return Err(Error::WeightMismatch {
            expected: n,
            actual: weight,
        });
    }
    let repr = BaseRepr::new(partition.base(), n)?;
    let top = repr.top_index();
    let m = i128::from(partition.base());
    let mut betas = vec![0u64; top];
    let mut above: i128 = 0;
    for t in (1..=top).rev() {
        let beta = i128::from(repr.digit(t)) - i128::from(partition.multiplicity(t)) + m * above;
        // weight == n keeps every beta_t in [0, n / m^t]
        betas[t - 1] = u64::try_from(beta).map_err(|_| Error::Overflow("beta out of range"))?;
        above = beta;
    }
    Ok(BetaSeq { repr, betas })
}

/// Inverse of [`phi`]: `lambda_j = alpha_j - beta_j`,
/// `lambda_t = alpha_t - beta_t + m beta_(t+1)`, `lambda_0 = alpha_0 + m beta_1`,
/// with zero multiplicities at the top removed.
pub fn phi_inv(seq: &BetaSeq) -> Result<MaryPartition> {
    if let Some((index, value, bound)) = seq.first_violation() {
        return Err(Error::BetaOutOfBounds {
            index,
            value,
            bound,
        });
    }
    let repr = &seq.repr;
    let m = u64::from(repr.base());
    let top = repr.top_index();
    let mut mults = vec![0u64; top + 1];
    for (t, mult) in mults.iter_mut().enumerate() {
        let from_above = if t < top { m * seq.beta(t + 1) } else { 0 };
        let taken = if t > 0 { seq.beta(t) } else { 0 };
        *mult = u64::from(repr.digit(t)) + from_above - taken;
    }
    MaryPartition::new(repr.base(), &mults)
}

/// All of `S_m(n)` in ascending lexicographic order of `(beta_j, ..., beta_1)`.
pub fn members(base: u32, n: u64, budget: u64) -> Result<Vec<BetaSeq>> {
    let mut out = Vec::new();
    let mut over = false;
    visit_members(base, n, |betas| {
        if out.len() as u64 >= budget {
            over = true;
            return ControlFlow::Break(());
        }
        out.push(betas.to_vec());
        ControlFlow::Continue(())
    })?;
    if over {
        return Err(Error::EnumerationBudget { budget });
    }
    let repr = BaseRepr::new(base, n)?;
    Ok(out
        .into_iter()
        .map(|betas| BetaSeq {
            repr: repr.clone(),
            betas,
        })
        .collect())
}

/// Walks `S_m(n)` by bounded nested loops. The visitor sees `(beta_1, ..., beta_j)`.
pub fn visit_members<F>(base: u32, n: u64, mut visit: F) -> Result<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let repr = BaseRepr::new(base, n)?;
    let top = repr.top_index();
    let mut betas = vec![0u64; top];
    if top == 0 {
        let _ = visit(&betas);
        return Ok(());
    }
    fn walk<F: FnMut(&[u64]) -> ControlFlow<()>>(
        repr: &BaseRepr,
        t: usize,
        bound: u64,
        betas: &mut [u64],
        visit: &mut F,
    ) -> ControlFlow<()> {
        for beta in 0..=bound {
            betas[t - 1] = beta;
            if t == 1 {
                visit(betas)?;
            } else {
                let next = u64::from(repr.digit(t - 1)) + u64::from(repr.base()) * beta;
                walk(repr, t - 1, next, betas, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
    let _ = walk(
        &repr,
        top,
        u64::from(repr.digit(top)),
        &mut betas,
        &mut visit,
    );
    Ok(())
}

/// One row of the correspondence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pub partition: MaryPartition,
    pub beta: BetaSeq,
}

/// Every partition of `n` next to its image, sorted ascending by `beta`.
pub fn correspondence_table(base: u32, n: u64, budget: u64) -> Result<Vec<Correspondence>> {
    let mut rows = enumerate_b(base, n, budget)?
        .into_iter()
        .map(|partition| {
            let beta = phi(&partition, n)?;
            Ok(Correspondence { partition, beta })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|row| row.beta.to_msf());
    Ok(rows)
}

/// Tab-separated rendering: the partition padded to `j + 1` multiplicities,
/// a tab, then `beta`; both most significant first and comma separated.
pub fn table_tsv(rows: &[Correspondence]) -> String {
    let mut out = String::new();
    for row in rows {
        let width = row.beta.repr().top_index() + 1;
        let lambda: Vec<String> = row
            .partition
            .padded_msf(width)
            .iter()
            .map(u64::to_string)
            .collect();
        out.push_str(&lambda.join(","));
        out.push('\t');
        out.push_str(&row.beta.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(msf: &[u64]) -> MaryPartition {
        MaryPartition::from_msf(4, msf).unwrap()
    }

    fn beta36(msf: &[u64]) -> BetaSeq {
        BetaSeq::from_msf(4, 36, msf).unwrap()
    }

    #[test]
    fn phi_on_table_entries() {
        assert_eq!(phi(&lam(&[2, 1, 0]), 36).unwrap().to_msf(), vec![0, 0]);
        assert_eq!(phi(&lam(&[1, 4, 4]), 36).unwrap().to_msf(), vec![1, 1]);
        assert_eq!(phi(&lam(&[0, 0, 36]), 36).unwrap().to_msf(), vec![2, 9]);
    }

    #[test]
    fn phi_of_the_digits_is_zero() {
        for (m, n) in [(3u32, 10u64), (5, 485), (2, 1023), (7, 6)] {
            let repr = BaseRepr::new(m, n).unwrap();
            let digits: Vec<u64> = repr.digits().iter().map(|&d| u64::from(d)).collect();
            let seq = phi(&MaryPartition::new(m, &digits).unwrap(), n).unwrap();
            assert!(seq.betas().iter().all(|&b| b == 0));
            assert_eq!(seq.betas().len(), repr.top_index());
        }
    }

    #[test]
    fn phi_rejects_wrong_weight() {
        assert_eq!(
            phi(&lam(&[2, 1, 0]), 37),
            Err(Error::WeightMismatch {
                expected: 37,
                actual: 36
            })
        );
    }

    #[test]
    fn phi_inv_on_table_entries() {
        let q = phi_inv(&beta36(&[2, 0])).unwrap();
        assert_eq!(q, lam(&[9, 0]));
        assert_eq!(q.padded_msf(3), vec![0, 9, 0]);
        assert_eq!(phi_inv(&beta36(&[0, 1])).unwrap(), lam(&[2, 0, 4]));
        assert_eq!(phi_inv(&beta36(&[0, 0])).unwrap(), lam(&[2, 1, 0]));
    }

    #[test]
    fn membership() {
        assert!(beta36(&[2, 9]).is_member());
        assert!(!beta36(&[2, 10]).is_member());
        assert!(!beta36(&[0, 2]).is_member());
        assert!(!beta36(&[3, 0]).is_member());
        assert_eq!(
            phi_inv(&beta36(&[2, 10])),
            Err(Error::BetaOutOfBounds {
                index: 1,
                value: 10,
                bound: 9
            })
        );
    }

    #[test]
    fn empty_beta_below_the_base() {
        let seq = BetaSeq::new(7, 6, &[]).unwrap();
        assert!(seq.is_member());
        assert_eq!(seq.to_string(), "");
        assert_eq!(phi_inv(&seq).unwrap().mults(), &[6]);
        assert_eq!(members(7, 6, 10).unwrap(), vec![seq]);
    }

    #[test]
    fn wrong_length_is_rejected() {
        assert_eq!(
            BetaSeq::new(4, 36, &[1]),
            Err(Error::WrongLength {
                expected: 2,
                actual: 1
            })
        );
    }

    #[test]
    fn members_are_sorted_and_counted() {
        let all = members(4, 36, 100).unwrap();
        assert_eq!(all.len(), 18);
        assert!(all.windows(2).all(|w| w[0].to_msf() < w[1].to_msf()));
        assert_eq!(all.last().unwrap().to_msf(), vec![2, 9]);
        assert!(members(2, 64, 5).is_err());
    }

    #[test]
    fn table_rows_for_ternary_ten() {
        let rows = correspondence_table(3, 10, 100).unwrap();
        let tsv = table_tsv(&rows);
        assert_eq!(
            tsv,
            "1,0,1\t0,0\n0,3,1\t1,0\n0,2,4\t1,1\n0,1,7\t1,2\n0,0,10\t1,3\n"
        );
    }
}
