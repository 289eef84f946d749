//! Builds one member of the class two ways, from a Schwarz function and
//! from a measure on the circle, then certifies positivity of Re(-zf'/f).

use varistar::cli::fmt_complex;
use varistar::cseries::TruncatedSeries;
use varistar::regions::{A2Report, A2Route};
use varistar::sigma_star::{
    carath_from_omega, construct_from_measure, construct_from_omega, default_radii, starlike_certificate,
    ProbMeasure, CERTIFICATE_ORDER,
};
use varistar::{Complex64, DEFAULT_ORDER};

fn main() -> varistar::Result<()> {
    let p = 0.5;
    let mu = ProbMeasure::roots_of_unity(2, 0.0)?;
    let omega = TruncatedSeries::from_coeffs(
        [0.0, 0.0, 1.0].map(|x| Complex64::new(x, 0.0)),
        DEFAULT_ORDER,
    );

    let (f_mu, params) = construct_from_measure(p, &mu, DEFAULT_ORDER)?;
    let (f_om, _) = construct_from_omega(p, &omega, DEFAULT_ORDER)?;
    println!("p = {p}, w0 = {}", fmt_complex(params.w0()));
    for n in 0..6 {
        println!("a{n}: measure {:<22} schwarz {}", fmt_complex(f_mu.coeff(n)), fmt_complex(f_om.coeff(n)));
    }
    let report = A2Report::from_series(&params, &f_om, A2Route::OmegaSeries);
    println!("a2 = {}, M = {}", fmt_complex(report.a2), fmt_complex(report.m));

    let carath = carath_from_omega(&omega.with_order(CERTIFICATE_ORDER))?;
    let cert = starlike_certificate(&params, &carath, &default_radii(), 360, 0.0)?;
    println!("certificate: min Re P = {:.6} at {:.4}, pass = {}", cert.min_re, cert.argmin_point, cert.pass);
    Ok(())
}
