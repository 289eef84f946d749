//! Truncated power series: products, quotients, exp and log.

use varistar::cseries::TruncatedSeries;
use varistar::Complex64;

fn main() -> varistar::Result<()> {
    let order = 8;
    let one = Complex64::new(1.0, 0.0);

    // 1/(1-z) times (1-z) is 1 up to the truncation order
    let geo = TruncatedSeries::geometric(one, order);
    let line = TruncatedSeries::from_coeffs([one, -one], order);
    println!("1/(1-z)          = {geo}");
    println!("(1-z)/(1-z)      = {}", line.mul(&geo)?);
    println!("(1-z) ÷ (1-z)    = {}", line.div(&line)?);

    // exp(2 log(1 - z/2)) = (1 - z/2)^2
    let log = TruncatedSeries::log_one_minus(Complex64::new(0.5, 0.0), order)?;
    let square = log.scale(Complex64::new(2.0, 0.0)).exp()?;
    println!("(1 - z/2)^2      = {square}");
    println!("value at z = 0.3 : {}", square.eval(Complex64::new(0.3, 0.0)));
    Ok(())
}
