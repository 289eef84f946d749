//! The second coefficient `a2` in closed form and the discs that bound it.
//!
//! For a Schwarz pair `(c1, c2)` the coefficient is
//! `a2 = 1/p + p·M` with `M = (c1² - c2 + p² - 2c1p) / (1 + p² - 2c1p)`.
//! With `(p, w0)` fixed the values fill [`disc_exact`]; the two historical
//! discs [`disc_miller72`] and [`disc_miller80`] contain it and touch it at a
//! single point unless `c1 = 0`, where all three coincide. With only `p`
//! fixed the values fill [`disc_theorem2`], `|a2 - 1/p| <= p`, so
//! `Re a2 >= 1/p - p > 0` throughout `0 < p < 1`.

use num_complex::Complex64;
use serde::Serialize;

use crate::cseries::TruncatedSeries;
use crate::schwarz::{validate_schwarz_pair, SchwarzCoeffs};
use crate::sigma_star::{c1_from_pair, PoleParams, ADMISSIBILITY_TOL};
use crate::{Error, Result};

/// Default slack for disc membership.
pub const MEMBERSHIP_TOL: f64 = 1e-9;
/// Default slack for internal tangency.
pub const TANGENCY_TOL: f64 = 1e-12;
/// Slack on the coefficient bound accepted by [`a2_closed_form`].
pub const SCHWARZ_TOL: f64 = 1e-12;

/// Closed disc `|z - center| <= radius`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Disc {
    pub center: Complex64,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Complex64, radius: f64) -> Self {
        debug_assert!(radius >= 0.0);
        Disc { center, radius }
    }

    pub fn contains(&self, point: Complex64, tol: f64) -> bool {
        disc_contains(self, point, tol)
    }

    /// `self ⊆ outer`, decided by `|Δcenter| <= R - r + tol`.
    pub fn is_inside(&self, outer: &Disc, tol: f64) -> bool {
        (self.center - outer.center).norm() <= outer.radius - self.radius + tol
    }

    /// Signed distance of `point` outside the circle (negative inside).
    pub fn radial_excess(&self, point: Complex64) -> f64 {
        (point - self.center).norm() - self.radius
    }

    /// `min Re z` over the disc.
    pub fn min_re(&self) -> f64 {
        self.center.re - self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum A2Route {
    ClosedForm,
    OmegaSeries,
    MeasureSeries,
}

/// `a2` together with `M` and the denominator `1 + p² - 2c1p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct A2Report {
    pub a2: Complex64,
    pub m: Complex64,
    pub denominator: Complex64,
    pub route: A2Route,
}

impl A2Report {
    /// Report for a series-built `f`: `M` is recovered as `(a2 - 1/p)/p`.
    pub fn from_series(params: &PoleParams, f: &TruncatedSeries, route: A2Route) -> Self {
        let p = params.p();
        let a2 = f.coeff(2);
        A2Report {
            a2,
            m: (a2 - 1.0 / p) / p,
            denominator: 1.0 + p * p - 2.0 * params.c1() * p,
            route,
        }
    }
}

/// `a2 = 1/p + p (c1² - c2 + p² - 2c1p)/(1 + p² - 2c1p)`.
pub fn a2_closed_form(p: f64, coeffs: &SchwarzCoeffs) -> Result<A2Report> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(format!("pole p = {p} must lie in (0, 1)")));
    }
    if !validate_schwarz_pair(coeffs, SCHWARZ_TOL) {
        return Err(Error::domain(format!(
            "({}, {}) violates |c1| <= 1, |c2| <= 1 - |c1|^2",
            coeffs.c1, coeffs.c2
        )));
    }
    let SchwarzCoeffs { c1, c2 } = *coeffs;
    let denominator = 1.0 + p * p - 2.0 * c1 * p;
    let m = (c1 * c1 - c2 + p * p - 2.0 * c1 * p) / denominator;
    Ok(A2Report {
        a2: 1.0 / p + p * m,
        m,
        denominator,
        route: A2Route::ClosedForm,
    })
}

/// `|a2 + (w0/2)(p² + 1/p² + 1/w0²)| <= |w0|`.
pub fn disc_miller72(params: &PoleParams) -> Disc {
    let (p, w0) = (params.p(), params.w0());
    Disc::new(-(w0 / 2.0) * (p * p + 1.0 / (p * p) + 1.0 / (w0 * w0)), w0.norm())
}

/// `|a2 - (1 + p²)/p - w0| <= |w0|`.
pub fn disc_miller80(params: &PoleParams) -> Disc {
    let (p, w0) = (params.p(), params.w0());
    Disc::new(p + 1.0 / p + w0, w0.norm())
}

/// Exact region for fixed `(p, w0)`:
/// center `p + 1/p + w0 - (w0/4)(p + 1/p + 1/w0)²`,
/// radius `|w0|(1 - |p + 1/p + 1/w0|²/4)`.
pub fn disc_exact(params: &PoleParams) -> Result<Disc> {
    c1_from_pair(params)?;
    let (p, w0) = (params.p(), params.w0());
    let b1 = p + 1.0 / p + 1.0 / w0;
    let center = p + 1.0 / p + w0 - (w0 / 4.0) * b1 * b1;
    let raw = w0.norm() * (1.0 - b1.norm_sqr() / 4.0);
    // Admissible pairs within tolerance of |c1| = 1 collapse to a point.
    let radius = if raw < 0.0 && raw >= -w0.norm() * ADMISSIBILITY_TOL {
        0.0
    } else {
        raw
    };
    if radius < 0.0 {
        return Err(Error::Inadmissible(format!("exact disc radius {raw} is negative")));
    }
    Ok(Disc::new(center, radius))
}

/// Region for fixed `p` only: `|a2 - 1/p| <= p`.
pub fn disc_theorem2(p: f64) -> Result<Disc> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(format!("pole p = {p} must lie in (0, 1)")));
    }
    Ok(Disc::new((1.0 / p).into(), p))
}

pub fn disc_contains(disc: &Disc, point: Complex64, tol: f64) -> bool {
    (point - disc.center).norm() <= disc.radius + tol
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangencyReport {
    pub delta_center: f64,
    pub radius_gap: f64,
    pub internally_tangent: bool,
}

/// Internal tangency of `inner` in `outer`: `|Δcenter| = R - r >= 0`.
pub fn tangency_check(inner: &Disc, outer: &Disc, tol: f64) -> TangencyReport {
    let delta_center = (inner.center - outer.center).norm();
    let radius_gap = outer.radius - inner.radius;
    TangencyReport {
        delta_center,
        radius_gap,
        internally_tangent: (delta_center - radius_gap).abs() <= tol && radius_gap >= -tol,
    }
}

/// The four discs for one pair, in display order.
pub fn disc_table(params: &PoleParams) -> Result<[(&'static str, Disc); 4]> {
    Ok([
        ("miller72", disc_miller72(params)),
        ("miller80", disc_miller80(params)),
        ("exact", disc_exact(params)?),
        ("theorem2", disc_theorem2(params.p())?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma_star::w0_from_c1;
    use proptest::prelude::*;
    use std::f64::consts::TAU;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pair(w0: f64) -> PoleParams {
        PoleParams::new(0.5, w0.into()).unwrap()
    }

    fn assert_disc(d: Disc, center: impl Into<Complex64>, radius: f64) {
        let center = center.into();
        assert!((d.center - center).norm() < 1e-12, "center {} vs {center}", d.center);
        assert!((d.radius - radius).abs() < 1e-12, "radius {} vs {radius}", d.radius);
    }

    #[test]
    fn a2_examples() {
        let r = a2_closed_form(0.5, &SchwarzCoeffs::new(0.0, 0.0)).unwrap();
        assert!((r.a2 - 2.1).norm() < 1e-15);
        // Coincidence center (1 + p² + p⁴)/(p(1 + p²))
        assert!((r.a2 - (1.0 + 0.25 + 0.0625) / (0.5 * 1.25)).norm() < 1e-15);

        for p in [0.2, 0.5, 0.8] {
            let r = a2_closed_form(p, &SchwarzCoeffs::new(p, p * p - 1.0)).unwrap();
            assert!((r.a2 - (p + 1.0 / p)).norm() < 1e-12);
        }

        let r = a2_closed_form(0.5, &SchwarzCoeffs::new(0.2, 0.3)).unwrap();
        assert!((r.a2 - 1.9).norm() < 1e-14);
        assert!((r.m + 0.2).norm() < 1e-14);
        assert!((r.denominator - 1.05).norm() < 1e-15);
        assert_eq!(r.route, A2Route::ClosedForm);
    }

    #[test]
    fn a2_rejects_invalid_pair() {
        assert!(a2_closed_form(0.5, &SchwarzCoeffs::new(0.9, 0.5)).is_err());
        assert!(a2_closed_form(0.0, &SchwarzCoeffs::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn miller72_examples() {
        assert_disc(disc_miller72(&pair(-0.4)), 2.1, 0.4);
        assert_disc(disc_miller72(&pair(-2.0 / 3.0)), 13.0 / 6.0, 2.0 / 3.0);
        assert_disc(disc_miller72(&pair(-2.0)), 4.5, 2.0);
    }

    #[test]
    fn miller80_examples() {
        assert_disc(disc_miller80(&pair(-0.4)), 2.1, 0.4);
        assert_disc(disc_miller80(&pair(-2.0 / 3.0)), 11.0 / 6.0, 2.0 / 3.0);
        assert_disc(disc_miller80(&pair(-2.0)), 0.5, 2.0);
    }

    #[test]
    fn exact_examples() {
        assert_disc(disc_exact(&pair(-0.4)).unwrap(), 2.1, 0.4);
        assert_disc(disc_exact(&pair(-0.4)).unwrap(), 1.3125 / 0.625, 0.5 / 1.25);
        assert_disc(disc_exact(&pair(-2.0 / 3.0)).unwrap(), 2.0, 0.5);
        let point = disc_exact(&pair(-2.0)).unwrap();
        assert_disc(point, 2.5, 0.0);
        assert_eq!(point.radius, 0.0);
    }

    #[test]
    fn theorem2_examples() {
        assert_disc(disc_theorem2(0.5).unwrap(), 2.0, 0.5);
        assert_disc(disc_theorem2(0.9).unwrap(), 10.0 / 9.0, 0.9);
        let exact = disc_exact(&pair(-2.0 / 3.0)).unwrap();
        assert_disc(exact, 2.0, 0.5);
        assert!(exact.contains(2.5.into(), 0.0));
        assert!(disc_theorem2(1.0).is_err());
    }

    #[test]
    fn contains_examples() {
        let unit = Disc::new(c(0.0, 0.0), 1.0);
        assert!(disc_contains(&unit, c(0.0, 0.0), 0.0));
        let d = Disc::new(c(2.1, 0.0), 0.4);
        assert!(disc_contains(&d, c(1.7, 0.0), MEMBERSHIP_TOL));
        assert!(!disc_contains(&d, c(2.6, 0.0), MEMBERSHIP_TOL));
    }

    #[test]
    fn tangency_examples() {
        let d = disc_exact(&pair(-0.4)).unwrap();
        let t = tangency_check(&d, &d, TANGENCY_TOL);
        assert_eq!((t.delta_center, t.radius_gap), (0.0, 0.0));
        assert!(t.internally_tangent);

        let params = pair(-2.0 / 3.0);
        let exact = disc_exact(&params).unwrap();
        for outer in [disc_miller80(&params), disc_miller72(&params)] {
            let t = tangency_check(&exact, &outer, TANGENCY_TOL);
            assert!((t.delta_center - 1.0 / 6.0).abs() < 1e-12);
            assert!((t.radius_gap - 1.0 / 6.0).abs() < 1e-12);
            assert!(t.internally_tangent);
        }

        let apart = tangency_check(&Disc::new(c(0.0, 0.0), 1.0), &Disc::new(c(5.0, 0.0), 1.0), TANGENCY_TOL);
        assert!(!apart.internally_tangent);
    }

    #[test]
    fn positivity_floor() {
        for k in 1..100 {
            let p = k as f64 / 100.0;
            let d = disc_theorem2(p).unwrap();
            assert!((d.min_re() - (1.0 / p - p)).abs() < 1e-12);
            assert!(d.min_re() > 0.0);
        }
    }

    fn admissible() -> impl Strategy<Value = (f64, Complex64)> {
        (0.05f64..0.95, 0.0f64..=1.0, 0.0f64..TAU).prop_map(|(p, r, t)| (p, Complex64::from_polar(r, t)))
    }

    proptest! {
        #[test]
        fn exact_tangent_to_miller_discs((p, c1) in admissible()) {
            let params = PoleParams::from_c1(p, c1).unwrap();
            let exact = disc_exact(&params).unwrap();
            let expected = params.w0().norm() * params.c1().norm_sqr();
            for outer in [disc_miller72(&params), disc_miller80(&params)] {
                let t = tangency_check(&exact, &outer, TANGENCY_TOL);
                prop_assert!(t.internally_tangent, "{t:?}");
                prop_assert!((t.delta_center - expected).abs() < 1e-12);
                prop_assert!((t.radius_gap - expected).abs() < 1e-12);
                prop_assert!(exact.is_inside(&outer, TANGENCY_TOL));
            }
        }

        #[test]
        fn exact_inside_theorem2((p, c1) in admissible()) {
            let params = PoleParams::from_c1(p, c1).unwrap();
            prop_assert!(disc_exact(&params).unwrap().is_inside(&disc_theorem2(p).unwrap(), 1e-12));
        }

        #[test]
        fn a2_in_exact_disc((p, c1) in admissible(), s in 0.0f64..=1.0, t in 0.0f64..TAU) {
            let c1 = c1 * 0.999_999;
            let c2 = Complex64::from_polar(s * (1.0 - c1.norm_sqr()), t);
            let report = a2_closed_form(p, &SchwarzCoeffs::new(c1, c2)).unwrap();
            prop_assert!((report.a2 - (1.0 / p + p * report.m)).norm() < 1e-12);
            prop_assert!(report.m.norm() <= 1.0 + 1e-12);
            let disc = disc_exact(&PoleParams::new(p, w0_from_c1(p, c1).unwrap()).unwrap()).unwrap();
            prop_assert!(disc.contains(report.a2, MEMBERSHIP_TOL));
            // on the circle exactly when c1² - c2 sits on the rim of Δ(c1), i.e. |c2| = 1 - |c1|²
            let on_boundary = (disc.radial_excess(report.a2)).abs() < 1e-9;
            prop_assert_eq!(on_boundary, (s - 1.0).abs() * disc.radius < 1e-9);
        }

        #[test]
        fn c1_equal_p_gives_theorem2_disc(p in 0.05f64..0.95) {
            let params = PoleParams::from_c1(p, p.into()).unwrap();
            let exact = disc_exact(&params).unwrap();
            let fixed = disc_theorem2(p).unwrap();
            prop_assert!((exact.center - fixed.center).norm() < 1e-12);
            prop_assert!((exact.radius - fixed.radius).abs() < 1e-12);
        }
    }
}
