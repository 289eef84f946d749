//! Traces the boundary of the exact disc with extremal functions.

use varistar::regions::disc_exact;
use varistar::sigma_star::PoleParams;
use varistar::verify::sweep_boundary;
use varistar::{Complex64, DEFAULT_ORDER};

fn main() -> varistar::Result<()> {
    let params = PoleParams::new(0.5, Complex64::new(-0.4, 0.0))?;
    let disc = disc_exact(&params)?;
    let points = sweep_boundary(&params, 12, DEFAULT_ORDER)?;
    println!("exact disc: center {}, radius {}", disc.center, disc.radius);
    for pt in &points {
        println!("k = {:>2}  a2 = {:.9}  |a2 - center| = {:.12}", pt.k, pt.a2, pt.dist_to_center);
    }
    Ok(())
}
