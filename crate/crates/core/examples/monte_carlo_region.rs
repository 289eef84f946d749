//! Seeded Monte Carlo check that sampled a2 values stay in both discs.

use varistar::regions::MEMBERSHIP_TOL;
use varistar::verify::monte_carlo_region;

fn main() -> varistar::Result<()> {
    for p in [0.2, 0.5, 0.8] {
        let stats = monte_carlo_region(p, 42, 50_000, MEMBERSHIP_TOL)?;
        println!(
            "p = {p}: n = {}, violations {}, max excess {:.3e}, sup attained {:.6}, min Re a2 {:.6}, pass {}",
            stats.n_samples,
            stats.violations,
            stats.max_radial_excess,
            stats.sup_attained,
            stats.min_re_a2,
            stats.pass()
        );
    }
    Ok(())
}
