//! Lower bound 1/p - p on Re a2 against sampled minima.

use varistar::regions::MEMBERSHIP_TOL;
use varistar::verify::positivity_sweep;

fn main() -> varistar::Result<()> {
    let grid: Vec<f64> = (1..10).map(|k| k as f64 / 10.0).collect();
    for row in positivity_sweep(&grid, 3, 5_000)? {
        println!(
            "p = {:.1}: bound {:.6}, sampled min {:.6}, pass {}",
            row.p,
            row.lower_bound,
            row.min_sampled_re.unwrap_or(f64::NAN),
            row.pass(MEMBERSHIP_TOL)
        );
    }
    Ok(())
}
