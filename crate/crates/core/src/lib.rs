//! Coefficient geometry for meromorphic starlike functions with a simple pole.
//!
//! A function in the class studied here is univalent and meromorphic in the
//! unit disc, has a simple pole at `p ∈ (0, 1)`, is normalized by
//! `f(0) = 0`, `f'(0) = 1`, and maps the disc onto the exterior of a domain
//! that is starlike with respect to a finite point `w0 ≠ 0`.
//!
//! The crate is organized bottom-up:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`cseries`] | truncated complex power series (mul, div, exp, log) |
//! | [`schwarz`] | Schwarz coefficient pairs, the extremal family, seeded sampling |
//! | [`sigma_star`] | members of the class from a measure or a Schwarz function |
//! | [`regions`] | the `a2` closed form and the four coefficient discs |
//! | [`verify`] | boundary sweeps, Monte Carlo inclusion, positivity |
//! | [`plot`] | static SVG figures of discs and sample points |
//! | [`cli`] | the `varistar` command-line front end |
//!
//! ```
//! use varistar::regions::{disc_exact, disc_theorem2};
//! use varistar::sigma_star::PoleParams;
//!
//! let params = PoleParams::new(0.5, (-2.0 / 3.0).into()).unwrap();
//! let exact = disc_exact(&params).unwrap();
//! let fixed_p = disc_theorem2(0.5).unwrap();
//! assert!((exact.center - fixed_p.center).norm() < 1e-12);
//! assert!((exact.radius - fixed_p.radius).abs() < 1e-12);
//! ```

pub mod cli;
pub mod cseries;
mod error;
pub mod plot;
pub mod regions;
pub mod schwarz;
pub mod sigma_star;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Default truncation order for every series pipeline.
pub const DEFAULT_ORDER: usize = 16;
