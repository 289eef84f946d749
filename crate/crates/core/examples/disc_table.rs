//! The four variability discs for a pair (p, w0) and their tangency.

use varistar::regions::{disc_exact, disc_miller72, disc_miller80, disc_table, tangency_check, TANGENCY_TOL};
use varistar::sigma_star::PoleParams;
use varistar::Complex64;

fn main() -> varistar::Result<()> {
    let params = PoleParams::from_c1(0.3, Complex64::new(0.4, 0.3))?;
    println!("p = {}, w0 = {:.6}, c1 = {:.6}", params.p(), params.w0(), params.c1());
    for (name, disc) in disc_table(&params)? {
        println!("{name:>9}: center {:.6}, radius {:.6}", disc.center, disc.radius);
    }

    let exact = disc_exact(&params)?;
    let expected = params.w0().norm() * params.c1().norm_sqr();
    for (name, outer) in [("miller72", disc_miller72(&params)), ("miller80", disc_miller80(&params))] {
        let t = tangency_check(&exact, &outer, TANGENCY_TOL);
        println!(
            "exact in {name}: |Δcenter| = {:.3e}, R - r = {:.3e}, |w0||c1|^2 = {expected:.3e}, tangent = {}",
            t.delta_center, t.radius_gap, t.internally_tangent
        );
    }
    Ok(())
}
