//! Writes an SVG of the discs for one pair plus a boundary sweep.
//!
//! Usage: `cargo run --example plot_discs -- [out.svg]`

use varistar::plot::{render_svg, Layer};
use varistar::regions::disc_table;
use varistar::sigma_star::PoleParams;
use varistar::verify::sweep_boundary;
use varistar::{Complex64, DEFAULT_ORDER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "discs.svg".into());
    let params = PoleParams::new(0.5, Complex64::new(-0.4, 0.1))?;
    let table = disc_table(&params)?;
    let layers: Vec<Layer> = table.iter().map(|(label, disc)| Layer { label, disc: *disc }).collect();
    let points: Vec<Complex64> = sweep_boundary(&params, 72, DEFAULT_ORDER)?.iter().map(|pt| pt.a2).collect();
    std::fs::write(&out, render_svg("a2 variability, p = 0.5, w0 = -0.4+0.1i", &layers, &points))?;
    println!("wrote {out}");
    Ok(())
}
