//! Cross-checks of the counting formulas against oracles written here from
//! scratch, independent of the library's code paths.

use mpart_core::counting::{
    count_b_gf, count_b_nested, count_b_poly, count_b_recurrence, count_c_nested, count_c_poly,
};
use mpart_core::partition::{count_enumerated, enumerate_b, enumerate_c, Family};
use num_bigint::BigUint;

/// Coin-change style count of partitions of `n` into parts from `parts`.
fn partitions_into(parts: &[u64], n: u64) -> Vec<BigUint> {
    let mut ways = vec![BigUint::from(0u32); n as usize + 1];
    ways[0] = BigUint::from(1u32);
    for &part in parts {
        for x in part as usize..=n as usize {
            let add = ways[x - part as usize].clone();
            ways[x] += add;
        }
    }
    ways
}

fn powers_up_to(m: u64, n: u64) -> Vec<u64> {
    let mut out = vec![1];
    while out.last().unwrap() * m <= n {
        out.push(out.last().unwrap() * m);
    }
    out
}

/// Gap-free partitions with largest part `m^r` are `1 + m + ... + m^r` plus an
/// unrestricted partition of the rest into parts `<= m^r`.
fn gap_free_oracle(m: u64, n: u64) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut floor = 0u64;
    for (r, &power) in powers_up_to(m, n).iter().enumerate() {
        floor += power;
        if floor > n {
            break;
        }
        let parts = &powers_up_to(m, n)[..=r];
        total += &partitions_into(parts, n - floor)[(n - floor) as usize];
    }
    total
}

#[test]
fn b_matches_coin_change() {
    for m in 2..=5u64 {
        let ways = partitions_into(&powers_up_to(m, 600), 600);
        for n in 1..=600 {
            let want = &ways[n as usize];
            assert_eq!(
                count_b_poly(m as u32, n).unwrap().value(),
                want,
                "m={m} n={n}"
            );
            assert_eq!(count_b_recurrence(m as u32, n).unwrap().value(), want);
        }
        let series = count_b_gf(m as u32, 600).unwrap();
        for (n, coeff) in series.iter().enumerate() {
            assert_eq!(coeff.value(), &ways[n]);
        }
    }
}

#[test]
fn frozen_values() {
    // b_3(30) and b_4(144) back the congruence examples
    assert_eq!(count_b_poly(3, 30).unwrap(), 28);
    assert_eq!(count_b_poly(4, 144).unwrap().residue(4), 2);
    assert_eq!(count_b_poly(2, 16).unwrap(), 36);
    assert_eq!(gap_free_oracle(4, 73), BigUint::from(51u32));
    assert_eq!(gap_free_oracle(5, 2425), BigUint::from(230358u32));
    assert_eq!(count_c_poly(5, 2425).unwrap(), 230358);
}

#[test]
fn c_matches_direct_oracle() {
    for m in 2..=5u64 {
        for n in 1..=300 {
            let want = gap_free_oracle(m, n);
            assert_eq!(
                count_c_poly(m as u32, n).unwrap().value(),
                &want,
                "m={m} n={n}"
            );
        }
    }
    for m in 6..=9u64 {
        for n in (1..=5000).step_by(7) {
            let want = gap_free_oracle(m, n);
            assert_eq!(
                count_c_poly(m as u32, n).unwrap().value(),
                &want,
                "m={m} n={n}"
            );
        }
    }
}

#[test]
fn nested_sums_agree_with_poly() {
    for m in 2..=6u32 {
        for n in 1..=400 {
            assert_eq!(
                count_b_nested(m, n, u64::MAX).unwrap(),
                count_b_poly(m, n).unwrap(),
                "m={m} n={n}"
            );
            assert_eq!(
                count_c_nested(m, n, u64::MAX).unwrap(),
                count_c_poly(m, n).unwrap(),
                "m={m} n={n}"
            );
        }
    }
}

#[test]
fn enumeration_matches_counts() {
    for m in 2..=5u32 {
        for n in 1..=120 {
            let all = enumerate_b(m, n, u64::MAX).unwrap();
            assert_eq!(count_b_recurrence(m, n).unwrap(), all.len() as u64);
            assert!(all.iter().all(|p| p.weight() == u128::from(n)));
            let width = all[0].padded_msf(0).len().max(1);
            let keys: Vec<Vec<u64>> = all.iter().map(|p| p.padded_msf(width)).collect();
            assert!(keys.windows(2).all(|w| w[0] > w[1]), "order m={m} n={n}");

            let filtered: Vec<_> = all.into_iter().filter(|p| p.is_gap_free()).collect();
            assert_eq!(enumerate_c(m, n, u64::MAX).unwrap(), filtered);
            assert_eq!(
                count_enumerated(m, n, Family::GapFree, u64::MAX).unwrap(),
                filtered.len() as u64
            );
        }
    }
}

#[test]
fn flat_segments_and_ordering() {
    for m in 2..=5u32 {
        let mut previous = count_b_poly(m, 1).unwrap();
        for n in 2..=1500 {
            let b = count_b_poly(m, n).unwrap();
            if n % u64::from(m) != 0 {
                assert_eq!(b, previous, "m={m} n={n}");
            }
            let c = count_c_poly(m, n).unwrap();
            assert!(b >= c && c >= 1u64.into(), "m={m} n={n}");
            previous = b;
        }
    }
}
