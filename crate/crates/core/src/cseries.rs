//! Truncated complex power series.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of `z^0..=z^N`.
//! Every operation works modulo `z^(N+1)` and keeps the order fixed, so
//! pipelines never have to track shrinking orders.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Slack allowed on `|zeta| <= 1` in [`TruncatedSeries::log_one_minus`].
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Zero series of order `order`.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ZERO; order + 1],
        }
    }

    /// Constant series `value + 0·z + ...`.
    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ONE, order)
    }

    /// Builds a series of order `order` from leading coefficients, padding
    /// with zeros or dropping anything past `z^order`.
    pub fn from_coeffs<I, C>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Complex64>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// Same coefficients at a different order (zero padded or truncated).
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().copied(), order)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    /// Multiplication by `z`; the top coefficient falls off.
    pub fn shift(&self) -> Self {
        let mut s = Self::zero(self.order());
        s.coeffs[1..].copy_from_slice(&self.coeffs[..self.order()]);
        s
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == ZERO {
                continue;
            }
            for (j, &b) in other.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// Quotient `q` with `q · divisor == self` modulo `z^(N+1)`.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor)?;
        let d0 = divisor.coeffs[0];
        if d0 == ZERO {
            return Err(Error::NonInvertible);
        }
        let mut q = Self::zero(self.order());
        for k in 0..=self.order() {
            let acc = (1..=k).fold(self.coeffs[k], |acc, j| acc - divisor.coeffs[j] * q.coeffs[k - j]);
            q.coeffs[k] = acc / d0;
        }
        Ok(q)
    }

    /// `exp` of a series with zero constant term, via `n g_n = Σ k a_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs[0] != ZERO {
            return Err(Error::NonzeroConstant(self.coeffs[0]));
        }
        let mut g = Self::one(self.order());
        for n in 1..=self.order() {
            let acc: Complex64 = (1..=n)
                .map(|k| self.coeffs[k] * g.coeffs[n - k] * k as f64)
                .sum();
            g.coeffs[n] = acc / n as f64;
        }
        Ok(g)
    }

    /// Coefficients of `log(1 - zeta·z)`: `-zeta^k / k` for `k >= 1`.
    pub fn log_one_minus(zeta: Complex64, order: usize) -> Result<Self> {
        if zeta.norm() > 1.0 + UNIT_TOL {
            return Err(Error::domain(format!("|zeta| = {} exceeds 1", zeta.norm())));
        }
        let mut s = Self::zero(order);
        let mut power = ONE;
        for k in 1..=order {
            power *= zeta;
            s.coeffs[k] = -power / k as f64;
        }
        Ok(s)
    }

    /// Coefficients of `1 / (1 - alpha·z)`: `alpha^k`.
    pub fn geometric(alpha: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut power = ONE;
        for slot in s.coeffs.iter_mut() {
            *slot = power;
            power *= alpha;
        }
        s
    }

    /// Termwise derivative at the same order; the top coefficient is zero.
    pub fn derivative(&self) -> Self {
        let mut s = Self::zero(self.order());
        for k in 0..self.order() {
            s.coeffs[k] = self.coeffs[k + 1] * (k + 1) as f64;
        }
        s
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Largest coefficientwise distance to `other`, over the common prefix.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(coeffs: &[f64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&x| c(x, 0.0)), order)
    }

    fn assert_series(actual: &TruncatedSeries, expected: &[Complex64], tol: f64) {
        assert_eq!(actual.order() + 1, expected.len());
        for (k, (a, e)) in actual.coeffs().iter().zip(expected).enumerate() {
            assert!((a - e).norm() <= tol, "coefficient {k}: {a} vs {e}");
        }
    }

    #[test]
    fn mul_difference_of_squares() {
        let p = real(&[1.0, 1.0], 2).mul(&real(&[1.0, -1.0], 2)).unwrap();
        assert_series(&p, &[c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)], 0.0);
    }

    #[test]
    fn mul_identity() {
        let a = TruncatedSeries::from_coeffs([c(0.3, -1.0), c(2.0, 0.5), c(-0.1, 0.0)], 2);
        assert_eq!(TruncatedSeries::one(2).mul(&a).unwrap(), a);
    }

    #[test]
    fn mul_hand_convolution() {
        let p = real(&[1.0, -2.0, 1.0], 2).mul(&real(&[1.0, 2.5, 5.25], 2)).unwrap();
        assert_series(&p, &[c(1.0, 0.0), c(0.5, 0.0), c(1.25, 0.0)], 1e-15);
    }

    #[test]
    fn mul_order_mismatch() {
        let err = TruncatedSeries::one(2).mul(&TruncatedSeries::one(3)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn div_examples() {
        let a = real(&[0.2, -3.0, 1.5], 2);
        assert_eq!(a.div(&TruncatedSeries::one(2)).unwrap(), a);

        let geo = TruncatedSeries::one(3).div(&real(&[1.0, -1.0], 3)).unwrap();
        assert_series(&geo, &[c(1.0, 0.0); 4], 0.0);

        let q = real(&[1.0, 0.5, 1.25], 2).div(&real(&[1.0, -2.0, 1.0], 2)).unwrap();
        assert_series(&q, &[c(1.0, 0.0), c(2.5, 0.0), c(5.25, 0.0)], 1e-15);
    }

    #[test]
    fn div_by_noninvertible() {
        let err = TruncatedSeries::one(2).div(&real(&[0.0, 1.0], 2)).unwrap_err();
        assert_eq!(err, Error::NonInvertible);
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TruncatedSeries::zero(4).exp().unwrap(), TruncatedSeries::one(4));

        let log = TruncatedSeries::log_one_minus(c(1.0, 0.0), 2).unwrap().scale(c(2.0, 0.0));
        assert_series(&log.exp().unwrap(), &[c(1.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0)], 1e-15);

        let e = real(&[0.0, 1.0], 3).exp().unwrap();
        assert_series(&e, &[c(1.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(1.0 / 6.0, 0.0)], 1e-15);
    }

    #[test]
    fn exp_rejects_constant_term() {
        assert!(matches!(TruncatedSeries::one(3).exp(), Err(Error::NonzeroConstant(_))));
    }

    #[test]
    fn log_one_minus_examples() {
        assert_eq!(TruncatedSeries::log_one_minus(c(0.0, 0.0), 3).unwrap(), TruncatedSeries::zero(3));
        let mercator = TruncatedSeries::log_one_minus(c(1.0, 0.0), 3).unwrap();
        assert_series(&mercator, &[c(0.0, 0.0), c(-1.0, 0.0), c(-0.5, 0.0), c(-1.0 / 3.0, 0.0)], 1e-15);
        let rotated = TruncatedSeries::log_one_minus(c(0.0, 1.0), 2).unwrap();
        assert_series(&rotated, &[c(0.0, 0.0), c(0.0, -1.0), c(0.5, 0.0)], 1e-15);
        assert!(matches!(TruncatedSeries::log_one_minus(c(1.1, 0.0), 3), Err(Error::Domain(_))));
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(TruncatedSeries::geometric(c(0.0, 0.0), 0), TruncatedSeries::one(0));
        assert_series(
            &TruncatedSeries::geometric(c(0.5, 0.0), 3),
            &[c(1.0, 0.0), c(0.5, 0.0), c(0.25, 0.0), c(0.125, 0.0)],
            0.0,
        );
        assert_series(&TruncatedSeries::geometric(c(2.0, 0.0), 2), &[c(1.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)], 0.0);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(TruncatedSeries::one(3).derivative(), TruncatedSeries::zero(3));
        let d = real(&[0.0, 1.0, 2.5], 2).derivative();
        assert_series(&d, &[c(1.0, 0.0), c(5.0, 0.0), c(0.0, 0.0)], 0.0);
        let k = c(0.7, -1.3);
        let d = TruncatedSeries::from_coeffs([ZERO, ZERO, k], 3).derivative();
        assert_series(&d, &[ZERO, k * 2.0, ZERO, ZERO], 0.0);
    }

    #[test]
    fn eval_matches_closed_form() {
        let z = c(0.3, 0.2);
        let approx = TruncatedSeries::geometric(c(0.5, 0.0), 40).eval(z);
        let exact = ONE / (ONE - z * 0.5);
        assert_abs_diff_eq!(approx.re, exact.re, epsilon = 1e-14);
        assert_abs_diff_eq!(approx.im, exact.im, epsilon = 1e-14);
    }

    /// Binomial coefficient `(-1)^j C(k, j) zeta^j`, computed independently of the exp path.
    fn binomial_one_minus(zeta: Complex64, k: u32, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![ZERO; order + 1];
        let mut binom = 1.0;
        for (j, slot) in coeffs.iter_mut().enumerate().take(k as usize + 1) {
            *slot = zeta.powu(j as u32) * binom * if j % 2 == 0 { 1.0 } else { -1.0 };
            binom = binom * (k as f64 - j as f64) / (j as f64 + 1.0);
        }
        TruncatedSeries::from_coeffs(coeffs, order)
    }

    fn unit_bidisc_series(order: usize, zero_constant: bool) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order + 1).prop_map(move |v| {
            let mut s = TruncatedSeries::from_coeffs(v.into_iter().map(|(re, im)| c(re, im)), order);
            if zero_constant {
                s.coeffs[0] = ZERO;
            }
            s
        })
    }

    fn series_triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
        (0usize..=16).prop_flat_map(|n| {
            (
                unit_bidisc_series(n, false),
                unit_bidisc_series(n, false),
                unit_bidisc_series(n, false),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative((a, b, d) in series_triple()) {
            prop_assert!(a.mul(&b).unwrap().max_abs_diff(&b.mul(&a).unwrap()) < 1e-13);
            let left = a.mul(&b).unwrap().mul(&d).unwrap();
            let right = a.mul(&b.mul(&d).unwrap()).unwrap();
            prop_assert!(left.max_abs_diff(&right) < 1e-11);
        }

        #[test]
        fn div_inverts_mul((a, b, _) in series_triple(), b0 in (0.1f64..1.0, 0.0f64..std::f64::consts::TAU)) {
            // Divisors dominated by their constant term: |b_k| <= |b_0| / 2.
            let lead = Complex64::from_polar(b0.0, b0.1);
            let mut divisor = b.scale(lead * 0.5);
            divisor.coeffs[0] = lead;
            let q = a.mul(&divisor).unwrap().div(&divisor).unwrap();
            prop_assert!(q.max_abs_diff(&a) < 1e-12, "diff {}", q.max_abs_diff(&a));
        }

        #[test]
        fn exp_is_homomorphic(
            (a, b) in (0usize..=16).prop_flat_map(|n| (unit_bidisc_series(n, true), unit_bidisc_series(n, true)))
        ) {
            let lhs = a.add(&b).unwrap().exp().unwrap();
            let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs) < 1e-11, "diff {}", lhs.max_abs_diff(&rhs));
        }

        #[test]
        fn exp_log_gives_binomial(k in 1u32..6, theta in 0.0f64..std::f64::consts::TAU, r in 0.0f64..=1.0) {
            let zeta = Complex64::from_polar(r, theta);
            let s = TruncatedSeries::log_one_minus(zeta, 16).unwrap().scale(c(k as f64, 0.0)).exp().unwrap();
            prop_assert!(s.max_abs_diff(&binomial_one_minus(zeta, k, 16)) < 1e-12);
        }
    }
}
