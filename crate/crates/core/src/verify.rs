//! Numerical certification of the region claims.
//!
//! Exactness of a region is checked from both sides: Monte Carlo inclusion
//! over admissible Schwarz pairs shows nothing escapes the disc, and the
//! extremal sweep over `|c| = 1` shows the whole boundary circle is reached.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::cseries::TruncatedSeries;
use crate::regions::{
    a2_closed_form, disc_exact, disc_miller72, disc_miller80, disc_theorem2, tangency_check, A2Route, A2Report,
    MEMBERSHIP_TOL, TANGENCY_TOL,
};
use crate::schwarz::{extremal_omega, sample_schwarz_pairs, ExtremalParams, SchwarzCoeffs, RNG_ALGORITHM};
use crate::sigma_star::{
    carath_from_omega, construct_from_omega, default_radii, starlike_certificate, w0_from_c1, PoleParams,
    RIGIDITY_TOL, CERTIFICATE_ORDER,
};
use crate::{Error, Result, DEFAULT_ORDER};

/// Default agreement tolerance between the closed form and the series route.
pub const CROSS_ROUTE_TOL: f64 = 1e-10;
/// Default distance tolerance of sweep points to the exact circle.
pub const SWEEP_TOL: f64 = 1e-9;

/// One point of the boundary sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub k: usize,
    pub c: Complex64,
    pub a2: Complex64,
    pub dist_to_center: f64,
}

/// `a2` of the extremal function with parameters `(c1, c)`, read off the
/// Taylor coefficients of the generated `ω`.
pub fn extremal_a2(p: f64, params: &ExtremalParams, order: usize) -> Result<A2Report> {
    let omega = extremal_omega(params, order.max(2))?;
    a2_closed_form(p, &SchwarzCoeffs::new(omega.coeff(1), omega.coeff(2)))
}

/// `K` points `c = e^{2πik/K}` of the extremal family, each mapped to `a2`.
pub fn sweep_boundary(params: &PoleParams, k: usize, order: usize) -> Result<Vec<BoundaryPoint>> {
    sweep_circle(params, k, 1.0, order)
}

/// Same as [`sweep_boundary`] with `|c| = modulus`; `modulus < 1` traces a
/// circle strictly inside the exact disc.
pub fn sweep_circle(params: &PoleParams, k: usize, modulus: f64, order: usize) -> Result<Vec<BoundaryPoint>> {
    if k < 4 {
        return Err(Error::domain(format!("sweep needs K >= 4, got {k}")));
    }
    let c1 = params.c1();
    if c1.norm() >= 1.0 - RIGIDITY_TOL {
        return Err(Error::domain("|c1| = 1: the exact region is a single point"));
    }
    let disc = disc_exact(params)?;
    let points = (0..k)
        .map(|j| {
            let c = Complex64::from_polar(modulus, TAU * j as f64 / k as f64);
            let report = extremal_a2(params.p(), &ExtremalParams::new(c1, c), order)?;
            Ok(BoundaryPoint {
                k: j,
                c,
                a2: report.a2,
                dist_to_center: (report.a2 - disc.center).norm(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if modulus == 1.0 {
        if let Some(bad) = points.iter().find(|pt| (pt.dist_to_center - disc.radius).abs() > SWEEP_TOL) {
            return Err(Error::Fault(format!(
                "sweep point {} is {} from the center, radius {}",
                bad.k, bad.dist_to_center, disc.radius
            )));
        }
    }
    Ok(points)
}

/// Summary of a Monte Carlo inclusion run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionStats {
    pub seed: u64,
    pub rng: &'static str,
    pub p: f64,
    pub n_samples: usize,
    /// Samples outside either disc by more than `tol`.
    pub violations: usize,
    pub violations_exact: usize,
    pub violations_theorem2: usize,
    /// Largest `|a2 - center| - radius` over both discs (negative inside).
    pub max_radial_excess: f64,
    /// Largest `|a2 - 1/p|`.
    pub sup_attained: f64,
    pub min_re_a2: f64,
    pub tol: f64,
}

impl RegionStats {
    pub fn pass(&self) -> bool {
        self.violations == 0
    }
}

/// Inclusion check of explicit pairs against the per-pair exact disc and
/// the fixed-`p` disc. `seed` is recorded only.
pub fn region_stats(p: f64, pairs: &[SchwarzCoeffs], tol: f64, seed: u64) -> Result<RegionStats> {
    let fixed_p = disc_theorem2(p)?;
    let mut stats = RegionStats {
        seed,
        rng: RNG_ALGORITHM,
        p,
        n_samples: pairs.len(),
        violations: 0,
        violations_exact: 0,
        violations_theorem2: 0,
        max_radial_excess: f64::NEG_INFINITY,
        sup_attained: 0.0,
        min_re_a2: f64::INFINITY,
        tol,
    };
    for pair in pairs {
        let a2 = a2_closed_form(p, pair)?.a2;
        let exact = disc_exact(&PoleParams::new(p, w0_from_c1(p, pair.c1)?)?)?;
        let excess_exact = exact.radial_excess(a2);
        let excess_fixed = fixed_p.radial_excess(a2);
        stats.violations_exact += usize::from(excess_exact > tol);
        stats.violations_theorem2 += usize::from(excess_fixed > tol);
        stats.violations += usize::from(excess_exact > tol || excess_fixed > tol);
        stats.max_radial_excess = stats.max_radial_excess.max(excess_exact).max(excess_fixed);
        stats.sup_attained = stats.sup_attained.max((a2 - fixed_p.center).norm());
        stats.min_re_a2 = stats.min_re_a2.min(a2.re);
    }
    Ok(stats)
}

/// `n` seeded Schwarz pairs pushed through [`region_stats`].
pub fn monte_carlo_region(p: f64, seed: u64, n: usize, tol: f64) -> Result<RegionStats> {
    if n == 0 {
        return Err(Error::domain("need at least one sample"));
    }
    region_stats(p, &sample_schwarz_pairs(seed, n), tol, seed)
}

/// `|a2_closed - a2_series|` for `ω = c1 z + c2 z²` at truncation `order`.
pub fn cross_route_gap(p: f64, coeffs: &SchwarzCoeffs, order: usize) -> Result<f64> {
    let closed = a2_closed_form(p, coeffs)?;
    let omega = TruncatedSeries::from_coeffs([Complex64::new(0.0, 0.0), coeffs.c1, coeffs.c2], order);
    let (f, params) = construct_from_omega(p, &omega, order)?;
    let series = A2Report::from_series(&params, &f, A2Route::OmegaSeries);
    Ok((closed.a2 - series.a2).norm())
}

/// Whether the closed form and the series route agree within `tol`.
pub fn cross_validate_a2(p: f64, coeffs: &SchwarzCoeffs, order: usize, tol: f64) -> bool {
    order >= 6 && matches!(cross_route_gap(p, coeffs, order), Ok(gap) if gap <= tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PositivityRow {
    pub p: f64,
    /// `1/p - p`, the least real part over `|a2 - 1/p| <= p`.
    pub lower_bound: f64,
    /// Least sampled `Re a2`, `None` when no samples were drawn.
    pub min_sampled_re: Option<f64>,
}

impl PositivityRow {
    pub fn pass(&self, tol: f64) -> bool {
        self.lower_bound > 0.0
            && self
                .min_sampled_re
                .is_none_or(|re| re > 0.0 && re >= self.lower_bound - tol)
    }
}

/// Lower bound `1/p - p` on `Re a2` for each `p`, with an optional Monte
/// Carlo spot check of `samples` pairs per `p`.
pub fn positivity_sweep(p_values: &[f64], seed: u64, samples: usize) -> Result<Vec<PositivityRow>> {
    p_values
        .iter()
        .map(|&p| {
            let lower_bound = disc_theorem2(p)?.min_re();
            let min_sampled_re = if samples > 0 {
                Some(monte_carlo_region(p, seed, samples, MEMBERSHIP_TOL)?.min_re_a2)
            } else {
                None
            };
            Ok(PositivityRow {
                p,
                lower_bound,
                min_sampled_re,
            })
        })
        .collect()
}

/// Outcome of one named check in [`run_suite`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// The full invariant suite at fixed `p` with default tolerances.
///
/// Samples are drawn from `seed`; `samples` sizes the Monte Carlo parts.
pub fn run_suite(p: f64, seed: u64, samples: usize) -> Result<Vec<SuiteResult>> {
    let mut out = Vec::new();

    let stats = monte_carlo_region(p, seed, samples.max(1), MEMBERSHIP_TOL)?;
    out.push(SuiteResult {
        name: "region",
        pass: stats.pass(),
        detail: format!(
            "violations {} over {} samples, sup |a2 - 1/p| = {}",
            stats.violations, stats.n_samples, stats.sup_attained
        ),
    });

    let pairs = sample_schwarz_pairs(seed, samples.clamp(1, 1000));
    let mut worst_gap = 0.0f64;
    let mut worst_sweep = 0.0f64;
    let mut tangency_ok = true;
    for pair in &pairs {
        worst_gap = worst_gap.max(cross_route_gap(p, pair, DEFAULT_ORDER)?);
        let params = PoleParams::from_c1(p, pair.c1)?;
        let exact = disc_exact(&params)?;
        let expected = params.w0().norm() * params.c1().norm_sqr();
        for outer in [disc_miller72(&params), disc_miller80(&params)] {
            let t = tangency_check(&exact, &outer, TANGENCY_TOL);
            tangency_ok &= t.internally_tangent
                && (t.delta_center - expected).abs() <= TANGENCY_TOL
                && (t.radius_gap - expected).abs() <= TANGENCY_TOL;
        }
        tangency_ok &= exact.is_inside(&disc_theorem2(p)?, TANGENCY_TOL);
    }
    for pair in pairs.iter().take(20) {
        let params = PoleParams::from_c1(p, pair.c1)?;
        let exact = disc_exact(&params)?;
        for pt in sweep_boundary(&params, 360, DEFAULT_ORDER)? {
            worst_sweep = worst_sweep.max((pt.dist_to_center - exact.radius).abs());
        }
    }
    out.push(SuiteResult {
        name: "cross-route",
        pass: worst_gap <= CROSS_ROUTE_TOL,
        detail: format!("max |a2 closed - a2 series| = {worst_gap:e}"),
    });
    out.push(SuiteResult {
        name: "tangency",
        pass: tangency_ok,
        detail: format!("{} pairs, exact disc tangent to both historical discs", pairs.len()),
    });
    out.push(SuiteResult {
        name: "boundary",
        pass: worst_sweep <= SWEEP_TOL,
        detail: format!("max distance to exact circle = {worst_sweep:e}"),
    });

    let sharp = a2_closed_form(p, &SchwarzCoeffs::new(p, p * p - 1.0))?.a2;
    let sharp_gap = (sharp - (p + 1.0 / p)).norm();
    out.push(SuiteResult {
        name: "sharpness",
        pass: sharp_gap <= TANGENCY_TOL,
        detail: format!("|a2 - (p + 1/p)| = {sharp_gap:e} at c1 = p, c2 = p^2 - 1"),
    });

    let row = positivity_sweep(&[p], seed, samples.max(1))?[0];
    out.push(SuiteResult {
        name: "positivity",
        pass: row.pass(MEMBERSHIP_TOL),
        detail: format!(
            "1/p - p = {}, min sampled Re a2 = {}",
            row.lower_bound,
            row.min_sampled_re.unwrap_or(f64::NAN)
        ),
    });

    let mut min_re = f64::INFINITY;
    for pair in pairs.iter().take(20) {
        let c = if pair.c2_bound() > 0.0 {
            pair.c2 / pair.c2_bound() * 0.9
        } else {
            Complex64::new(0.0, 0.0)
        };
        let omega = extremal_omega(&ExtremalParams::new(pair.c1, c), CERTIFICATE_ORDER)?;
        let (_, params) = construct_from_omega(p, &omega, DEFAULT_ORDER)?;
        let carath = carath_from_omega(&omega)?;
        let report = starlike_certificate(&params, &carath, &default_radii(), 360, 0.0)?;
        min_re = min_re.min(report.min_re);
    }
    out.push(SuiteResult {
        name: "certificate",
        pass: min_re > 0.0,
        detail: format!("min Re P over grid = {min_re}"),
    });
    Ok(out)
}
