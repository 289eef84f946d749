//! Members of the class: constructors, coefficient extraction and the
//! positive-real-part certificate.
//!
//! Two constructions are provided and cross-checked against each other:
//!
//! * [`construct_from_measure`] uses the integral representation over an
//!   atomic probability measure on the unit circle,
//!   `f(z) = w0 + p·w0·exp(Σ 2λ_k log(1 - ζ_k z)) / ((z - p)(1 - p z))`.
//! * [`construct_from_omega`] starts from a Schwarz function `ω`, forms the
//!   Carathéodory function `P = (1 + ω)/(1 - ω)` and integrates
//!   `-z f'/(f - w0) = P + p/(z - p) - p z/(1 - p z)` as a linear recurrence
//!   on Taylor coefficients.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::cseries::TruncatedSeries;
use crate::{Error, Result};

/// Slack on `|p + 1/p + 1/w0| <= 2`.
pub const ADMISSIBILITY_TOL: f64 = 1e-9;
/// Slack on `f(0) = 0`, `f'(0) = 1` and `P(0) = 1`.
pub const NORMALIZATION_TOL: f64 = 1e-10;
/// Measure weights must sum to one and atoms must be unimodular within this.
pub const MEASURE_TOL: f64 = 1e-12;
/// `|c1|` within this of 1 is treated as the rigid case `ω = c1·z`.
pub const RIGIDITY_TOL: f64 = 1e-12;
/// Largest radius at which a truncated `P` is evaluated.
pub const MAX_CERTIFICATE_RADIUS: f64 = 0.9;
/// Truncation order used for certificates. A Carathéodory function has
/// `|b_n| <= 2`, so at `|z| <= 0.9` the tail past this order is below
/// `20·0.9^65 ≈ 0.021`, under the `(1 - 0.9)/(1 + 0.9)` floor of `Re P`.
pub const CERTIFICATE_ORDER: usize = 64;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_p(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("pole p = {p} must lie in (0, 1)")))
    }
}

/// The pair `(p, w0)` fixing the pole and the starlikeness center.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PoleParams {
    p: f64,
    w0: Complex64,
}

impl PoleParams {
    pub fn new(p: f64, w0: Complex64) -> Result<Self> {
        check_p(p)?;
        if !(w0.re.is_finite() && w0.im.is_finite()) || w0 == Complex64::new(0.0, 0.0) {
            return Err(Error::Inadmissible(format!("w0 = {w0} must be finite and nonzero")));
        }
        let b1 = p + 1.0 / p + 1.0 / w0;
        if b1.norm() > 2.0 + ADMISSIBILITY_TOL {
            return Err(Error::Inadmissible(format!(
                "|p + 1/p + 1/w0| = {} exceeds 2 (derived |c1| = {} > 1)",
                b1.norm(),
                b1.norm() / 2.0
            )));
        }
        Ok(PoleParams { p, w0 })
    }

    /// Parameters whose derived first Schwarz coefficient is `c1`.
    pub fn from_c1(p: f64, c1: Complex64) -> Result<Self> {
        Self::new(p, w0_from_c1(p, c1)?)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn w0(&self) -> Complex64 {
        self.w0
    }

    /// `c1 = (p + 1/p + 1/w0) / 2`.
    pub fn c1(&self) -> Complex64 {
        (self.p + 1.0 / self.p + 1.0 / self.w0) / 2.0
    }
}

/// `w0 = -1 / (p + 1/p - 2 c1)`.
pub fn w0_from_c1(p: f64, c1: Complex64) -> Result<Complex64> {
    check_p(p)?;
    if c1.norm() > 1.0 + ADMISSIBILITY_TOL {
        return Err(Error::domain(format!("|c1| = {} exceeds 1", c1.norm())));
    }
    let denom = p + 1.0 / p - 2.0 * c1;
    // Re(denom) >= p + 1/p - 2 > 0 for p in (0, 1); guard it anyway.
    if denom.norm() == 0.0 {
        return Err(Error::domain("p + 1/p - 2 c1 vanishes"));
    }
    Ok(-1.0 / denom)
}

/// First Schwarz coefficient determined by the pair.
pub fn c1_from_pair(params: &PoleParams) -> Result<Complex64> {
    let c1 = params.c1();
    if c1.norm() > 1.0 + ADMISSIBILITY_TOL {
        return Err(Error::Inadmissible(format!("derived |c1| = {} exceeds 1", c1.norm())));
    }
    Ok(c1)
}

/// Finite atomic probability measure on the unit circle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbMeasure {
    atoms: Vec<(Complex64, f64)>,
}

impl ProbMeasure {
    pub fn new(atoms: Vec<(Complex64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::domain("measure has no atoms"));
        }
        for &(zeta, weight) in &atoms {
            if (zeta.norm() - 1.0).abs() > MEASURE_TOL {
                return Err(Error::domain(format!("atom {zeta} is not unimodular")));
            }
            if !(0.0..=1.0).contains(&weight) {
                return Err(Error::domain(format!("weight {weight} outside [0, 1]")));
            }
        }
        let total: f64 = atoms.iter().map(|&(_, w)| w).sum();
        if (total - 1.0).abs() > MEASURE_TOL {
            return Err(Error::domain(format!("weights sum to {total}, not 1")));
        }
        Ok(ProbMeasure { atoms })
    }

    pub fn point_mass(zeta: Complex64) -> Result<Self> {
        Self::new(vec![(zeta, 1.0)])
    }

    /// Equal weights at the `n`-th roots of unity, rotated by `phase`.
    pub fn roots_of_unity(n: usize, phase: f64) -> Result<Self> {
        let atoms = (0..n)
            .map(|k| (Complex64::from_polar(1.0, phase + TAU * k as f64 / n as f64), 1.0 / n as f64))
            .collect();
        Self::new(atoms)
    }

    pub fn atoms(&self) -> &[(Complex64, f64)] {
        &self.atoms
    }

    /// `∫ ζ dμ(ζ)`.
    pub fn first_moment(&self) -> Complex64 {
        self.atoms.iter().map(|&(zeta, w)| zeta * w).sum()
    }
}

fn check_normalization(f: &TruncatedSeries) -> Result<()> {
    let (a0, a1) = (f.coeff(0), f.coeff(1));
    if a0.norm() > NORMALIZATION_TOL || (a1 - ONE).norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization(format!("f(0) = {a0}, f'(0) = {a1}")));
    }
    Ok(())
}

/// Taylor series of `f` at the origin built from a probability measure.
pub fn construct_from_measure(p: f64, mu: &ProbMeasure, order: usize) -> Result<(TruncatedSeries, PoleParams)> {
    check_p(p)?;
    if order < 1 {
        return Err(Error::domain("order must be at least 1"));
    }
    let w0 = -1.0 / (p + 1.0 / p - 2.0 * mu.first_moment());
    let params = PoleParams::new(p, w0)?;

    let mut log_sum = TruncatedSeries::zero(order);
    for &(zeta, weight) in mu.atoms() {
        let term = TruncatedSeries::log_one_minus(zeta, order)?.scale((2.0 * weight).into());
        log_sum = log_sum.add(&term)?;
    }
    let product = log_sum.exp()?;
    // p / ((z - p)(1 - p z)) = -1 / ((1 - z/p)(1 - p z))
    let pole_factor = TruncatedSeries::geometric((1.0 / p).into(), order)
        .mul(&TruncatedSeries::geometric(p.into(), order))?;
    let f = TruncatedSeries::one(order)
        .sub(&product.mul(&pole_factor)?)?
        .scale(w0);
    check_normalization(&f)?;
    Ok((f, params))
}

/// Taylor series of `f` built from a Schwarz function `ω` (padded or
/// truncated to `order`).
///
/// `w0` is derived from `b1 = 2 c1`; the result is admissible by
/// construction. For `|c1| = 1` only the rigid `ω = c1·z` is accepted.
pub fn construct_from_omega(p: f64, omega: &TruncatedSeries, order: usize) -> Result<(TruncatedSeries, PoleParams)> {
    check_p(p)?;
    if order < 1 {
        return Err(Error::domain("order must be at least 1"));
    }
    let omega = omega.with_order(order);
    if omega.coeff(0).norm() > RIGIDITY_TOL {
        return Err(Error::domain(format!("omega(0) = {} must vanish", omega.coeff(0))));
    }
    let c1 = omega.coeff(1);
    if c1.norm() > 1.0 + RIGIDITY_TOL {
        return Err(Error::domain(format!("|c1| = {} exceeds 1", c1.norm())));
    }
    if c1.norm() >= 1.0 - RIGIDITY_TOL && omega.coeffs()[2..].iter().any(|c| c.norm() > RIGIDITY_TOL) {
        return Err(Error::domain("|c1| = 1 forces omega = c1 z"));
    }

    let carath = carath_from_omega(&omega)?;
    let params = PoleParams::from_c1(p, carath.coeff(1) / 2.0)?;
    let w0 = params.w0();

    // Q = P + p/(z - p) - p z/(1 - p z): q_n = b_n - p^-n - p^n, q_0 = 0.
    let q: Vec<Complex64> = (0..=order)
        .map(|n| {
            let inner = if n == 0 { 1.0 } else { p.powi(n as i32) + p.powi(-(n as i32)) };
            carath.coeff(n) - inner
        })
        .collect();
    if q[0].norm() > NORMALIZATION_TOL {
        return Err(Error::Fault(format!("Q(0) = {} should vanish", q[0])));
    }

    // f' = -(f - w0) R with R = Q/z:  (n+1) a_{n+1} = -Σ_k (a_k - w0 δ_k0) r_{n-k}.
    let r = &q[1..];
    let mut a = vec![Complex64::new(0.0, 0.0); order + 1];
    for n in 0..order {
        let conv: Complex64 = (0..=n)
            .map(|k| {
                let shifted = if k == 0 { a[0] - w0 } else { a[k] };
                shifted * r[n - k]
            })
            .sum();
        a[n + 1] = -conv / (n + 1) as f64;
    }
    let f = TruncatedSeries::from_coeffs(a, order);
    check_normalization(&f)?;
    Ok((f, params))
}

/// `P = (1 + ω)/(1 - ω)` at the order of `omega`.
pub fn carath_from_omega(omega: &TruncatedSeries) -> Result<TruncatedSeries> {
    let one = TruncatedSeries::one(omega.order());
    one.add(omega)?.div(&one.sub(omega)?)
}

/// Recovers `P(z) = -z f'(z)/(f(z) - w0) - p/(z - p) + p z/(1 - p z)`.
///
/// The coefficients of `f` grow like `p^-n`, so `b_n` carries an absolute
/// rounding error of order `ε·p^-n`.
pub fn carath_from_f(params: &PoleParams, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    if f.order() < 2 {
        return Err(Error::domain("order must be at least 2"));
    }
    check_normalization(f)?;
    let order = f.order();
    let p = params.p();
    let shifted = f.sub(&TruncatedSeries::constant(params.w0(), order))?;
    let log_derivative = f.derivative().shift().div(&shifted)?;
    // -p/(z - p) = Σ p^-n z^n,  p z/(1 - p z) = Σ_{n>=1} p^n z^n
    let correction = TruncatedSeries::geometric((1.0 / p).into(), order)
        .add(&TruncatedSeries::geometric(p.into(), order))?
        .sub(&TruncatedSeries::one(order))?;
    let carath = correction.sub(&log_derivative)?;
    if (carath.coeff(0) - ONE).norm() > NORMALIZATION_TOL {
        return Err(Error::Normalization(format!("P(0) = {}", carath.coeff(0))));
    }
    Ok(carath)
}

/// Grid evaluation of `min Re P` over `radius·e^{iθ}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateReport {
    pub p: f64,
    pub w0: Complex64,
    pub min_re: f64,
    pub argmin_point: Complex64,
    pub radii: Vec<f64>,
    pub angles: usize,
    pub tol: f64,
    pub pass: bool,
}

/// Numerical check of `Re P > 0` on the truncated series.
///
/// This certifies the truncation on the grid, not the function itself; the
/// radius is capped at [`MAX_CERTIFICATE_RADIUS`] because the tail of a
/// truncated `P` is not controlled near the unit circle.
pub fn starlike_certificate(
    params: &PoleParams,
    carath: &TruncatedSeries,
    radii: &[f64],
    angles: usize,
    tol: f64,
) -> Result<CertificateReport> {
    if angles < 8 {
        return Err(Error::domain(format!("need at least 8 angles, got {angles}")));
    }
    if radii.is_empty() {
        return Err(Error::domain("no radii given"));
    }
    if let Some(&r) = radii.iter().find(|&&r| !(r > 0.0 && r <= MAX_CERTIFICATE_RADIUS)) {
        return Err(Error::domain(format!(
            "radius {r} outside (0, {MAX_CERTIFICATE_RADIUS}]"
        )));
    }
    let (min_re, argmin_point) = radii
        .iter()
        .flat_map(|&r| (0..angles).map(move |k| Complex64::from_polar(r, TAU * k as f64 / angles as f64)))
        .map(|z| (carath.eval(z).re, z))
        .fold((f64::INFINITY, Complex64::new(0.0, 0.0)), |best, cur| {
            if cur.0 < best.0 {
                cur
            } else {
                best
            }
        });
    Ok(CertificateReport {
        p: params.p(),
        w0: params.w0(),
        min_re,
        argmin_point,
        radii: radii.to_vec(),
        angles,
        tol,
        pass: min_re > -tol,
    })
}

/// Radii `0.1, 0.2, ..., 0.9`.
pub fn default_radii() -> Vec<f64> {
    (1..=9).map(|k| k as f64 / 10.0).collect()
}
