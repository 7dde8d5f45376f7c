//! Integer-valued polynomials in the binomial basis.
//!
//! A polynomial is stored as `p(x) = sum_i c_i * C(x, i)`. Integer-valued
//! polynomials have integer coefficients in this basis, prefix sums are a
//! coefficient shift (`sum_{x=0}^{N} C(x, i) = C(N + 1, i + 1)`), and an affine
//! substitution is recovered exactly from `d + 1` samples by forward
//! differences. That is all the nested digit sums need.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds `sum_i coeffs[i] * C(x, i)`, trimming zero top coefficients.
    pub fn from_binomial_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_binomial_coeffs(vec![c.into()])
    }

    pub fn zero() -> Self {
        Self::constant(0)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(BigInt::zero());
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluates at any integer, using the generalized binomial
    /// `C(x, i) = x (x - 1) ... (x - i + 1) / i!` for negative `x`.
    pub fn eval(&self, x: impl Into<BigInt>) -> BigInt {
        let x = x.into();
        let mut binom = BigInt::one();
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                // C(x, i) = C(x, i - 1) * (x - i + 1) / i, exact at every step
                binom *= &x - (i - 1);
                binom /= i;
            }
            if !c.is_zero() {
                acc += c * &binom;
            }
        }
        acc
    }

    /// `q(N) = sum_{x=0}^{N} p(x)`, valid for every `N >= -1` with `q(-1) = 0`.
    ///
    /// `C(N + 1, i + 1) = C(N, i + 1) + C(N, i)`, so `q_k = c_k + c_(k-1)`.
    pub fn prefix_sum(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let d = self.coeffs.len();
        let mut out = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
            out[i + 1] += c;
        }
        IntPolynomial::from_binomial_coeffs(out)
    }

    /// `r(k) = p(a k + b)`.
    ///
    /// The result has the same degree `d`; its binomial coefficients are the
    /// forward differences `Delta^i r(0)` of the samples `r(0), ..., r(d)`.
    pub fn compose_affine(&self, a: impl Into<BigInt>, b: impl Into<BigInt>) -> IntPolynomial {
        let a = a.into();
        let b = b.into();
        let d = self.degree();
        let mut samples: Vec<BigInt> = (0..=d).map(|k| self.eval(&a * k + &b)).collect();
        let mut coeffs = Vec::with_capacity(d + 1);
        for i in 0..=d {
            coeffs.push(samples[0].clone());
            for k in 0..d - i {
                samples[k] = &samples[k + 1] - &samples[k];
            }
        }
        IntPolynomial::from_binomial_coeffs(coeffs)
    }

    /// `sum_{x=lo}^{hi} p(x)` for `lo` in `{0, 1}`. An empty range
    /// (`hi = lo - 1`) gives zero; `hi < lo - 1` is rejected.
    pub fn sum_range(&self, lo: i64, hi: impl Into<BigInt>) -> Result<BigInt> {
        let hi = hi.into();
        let lo_minus_one = BigInt::from(lo) - 1;
        if hi < lo_minus_one {
            return Err(Error::InvalidRange {
                lo,
                hi: hi.to_string(),
            });
        }
        let sums = self.prefix_sum();
        Ok(sums.eval(hi) - sums.eval(lo_minus_one))
    }
}

impl std::ops::Sub<&BigInt> for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(mut self, rhs: &BigInt) -> IntPolynomial {
        self.coeffs[0] -= rhs;
        self.trim();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_binomial_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn evaluation() {
        assert_eq!(poly(&[1]).eval(5), BigInt::from(1));
        assert_eq!(poly(&[2, 4]).eval(3), BigInt::from(14));
        assert_eq!(poly(&[0, 0, 1]).eval(4), BigInt::from(6));
        // C(-1, i) = (-1)^i
        assert_eq!(poly(&[0, 0, 1]).eval(-1), BigInt::from(1));
        assert_eq!(poly(&[0, 0, 0, 1]).eval(-1), BigInt::from(-1));
    }

    #[test]
    fn prefix_sums() {
        assert_eq!(poly(&[1]).prefix_sum(), poly(&[1, 1]));
        let q = poly(&[2, 4]).prefix_sum();
        assert_eq!(q.eval(2), BigInt::from(18));
        assert_eq!(q.eval(-1), BigInt::from(0));
        assert!(IntPolynomial::zero().prefix_sum().is_zero());
    }

    #[test]
    fn affine_composition() {
        let x = poly(&[0, 1]);
        assert_eq!(x.compose_affine(4, 1), poly(&[1, 4]));
        assert_eq!(poly(&[1]).compose_affine(7, -1), poly(&[1]));
        let r = poly(&[0, 0, 1]).compose_affine(2, 0);
        for k in 0..=3i64 {
            assert_eq!(r.eval(k), BigInt::from(2 * k * k - k));
        }
        assert_eq!(r.eval(3), BigInt::from(15));
    }

    #[test]
    fn ranges() {
        assert_eq!(poly(&[1]).sum_range(0, 17).unwrap(), BigInt::from(18));
        assert_eq!(poly(&[2, 4]).sum_range(0, 3).unwrap(), BigInt::from(32));
        assert_eq!(poly(&[2, 4]).sum_range(1, 0).unwrap(), BigInt::from(0));
        assert_eq!(poly(&[2, 4]).sum_range(0, -1).unwrap(), BigInt::from(0));
        assert!(poly(&[1]).sum_range(1, -1).is_err());
    }

    #[test]
    fn subtracting_a_constant() {
        let p = poly(&[5, 3]) - &BigInt::from(5);
        assert_eq!(p, poly(&[0, 3]));
        let z = poly(&[5]) - &BigInt::from(5);
        assert!(z.is_zero());
    }
}
