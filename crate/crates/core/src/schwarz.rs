//! Schwarz functions `ω(z) = c1·z + c2·z² + ...`, their coefficient bound,
//! the two-parameter extremal family and seeded sampling of admissible pairs.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cseries::TruncatedSeries;
use crate::{Error, Result};

/// Name of the generator behind [`sample_schwarz_pairs`], recorded in reports.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng(seed_from_u64)";

/// Slack on the unit bounds of extremal parameters.
pub const PARAM_TOL: f64 = 1e-12;

/// First two Taylor coefficients of a Schwarz function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchwarzCoeffs {
    pub c1: Complex64,
    pub c2: Complex64,
}

impl SchwarzCoeffs {
    pub fn new(c1: impl Into<Complex64>, c2: impl Into<Complex64>) -> Self {
        SchwarzCoeffs {
            c1: c1.into(),
            c2: c2.into(),
        }
    }

    /// Radius `1 - |c1|²` of the disc `c2` is confined to.
    pub fn c2_bound(&self) -> f64 {
        (1.0 - self.c1.norm_sqr()).max(0.0)
    }
}

/// Parameters of `ω(z) = z(c1 + c z) / (1 + conj(c1)·c·z)`.
///
/// `|c| = 1` gives the functions attaining the boundary of the exact disc,
/// `|c| < 1` its interior.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremalParams {
    pub c1: Complex64,
    pub c: Complex64,
}

impl ExtremalParams {
    pub fn new(c1: impl Into<Complex64>, c: impl Into<Complex64>) -> Self {
        ExtremalParams {
            c1: c1.into(),
            c: c.into(),
        }
    }

    /// The `(c1, c2)` pair of the generated Schwarz function.
    pub fn coeffs(&self) -> SchwarzCoeffs {
        SchwarzCoeffs::new(self.c1, self.c * (1.0 - self.c1.norm_sqr()))
    }
}

/// Taylor series of the extremal Schwarz function to order `order`.
pub fn extremal_omega(params: &ExtremalParams, order: usize) -> Result<TruncatedSeries> {
    let ExtremalParams { c1, c } = *params;
    if c1.norm() > 1.0 + PARAM_TOL || c.norm() > 1.0 + PARAM_TOL {
        return Err(Error::domain(format!(
            "extremal parameters outside the closed unit disc: |c1| = {}, |c| = {}",
            c1.norm(),
            c.norm()
        )));
    }
    let numerator = TruncatedSeries::from_coeffs([Complex64::new(0.0, 0.0), c1, c], order);
    let denominator_inverse = TruncatedSeries::geometric(-c1.conj() * c, order);
    numerator.mul(&denominator_inverse)
}

/// `|c1| <= 1 + tol` and `|c2| <= 1 - |c1|² + tol`.
pub fn validate_schwarz_pair(coeffs: &SchwarzCoeffs, tol: f64) -> bool {
    let c1_sq = coeffs.c1.norm_sqr();
    coeffs.c1.norm() <= 1.0 + tol && coeffs.c2.norm() <= 1.0 - c1_sq + tol
}

fn uniform_in_unit_disc(rng: &mut ChaCha8Rng) -> Complex64 {
    loop {
        let z = Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
        if z.norm_sqr() <= 1.0 {
            return z;
        }
    }
}

/// `n` admissible pairs: `c1` area-uniform on the closed unit disc, `c2`
/// area-uniform on the disc of radius `1 - |c1|²`. Deterministic in `seed`.
pub fn sample_schwarz_pairs(seed: u64, n: usize) -> Vec<SchwarzCoeffs> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let c1 = uniform_in_unit_disc(&mut rng);
        let radius = 1.0 - c1.norm_sqr();
        if c1.norm() > 1.0 || radius < 0.0 {
            continue;
        }
        let c2 = if radius == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            uniform_in_unit_disc(&mut rng) * radius
        };
        let pair = SchwarzCoeffs { c1, c2 };
        // Rounding in the scaling can push |c2| a hair past the bound.
        if validate_schwarz_pair(&pair, 0.0) {
            out.push(pair);
        }
    }
    out
}
