//! Extremal Schwarz functions and random admissible coefficient pairs.

use varistar::schwarz::{extremal_omega, sample_schwarz_pairs, validate_schwarz_pair, ExtremalParams, PARAM_TOL};
use varistar::Complex64;

fn main() -> varistar::Result<()> {
    let params = ExtremalParams::new(Complex64::new(0.4, 0.3), Complex64::from_polar(1.0, 0.7));
    let omega = extremal_omega(&params, 10)?;
    let coeffs = params.coeffs();
    let (c1, c2) = (coeffs.c1, coeffs.c2);
    println!("omega = {omega}");
    println!("c1 = {c1}, c2 = {c2}, |c2| = {:.6}, bound 1 - |c1|^2 = {:.6}", c2.norm(), 1.0 - c1.norm_sqr());

    for pair in sample_schwarz_pairs(7, 5) {
        assert!(validate_schwarz_pair(&pair, PARAM_TOL));
        println!("sample c1 = {:.4}, c2 = {:.4}, slack {:.4}", pair.c1, pair.c2, pair.c2_bound() - pair.c2.norm());
    }
    Ok(())
}
