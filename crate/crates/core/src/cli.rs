//! The `varistar` command line.
//!
//! ```text
//! varistar <subcommand> [--p R] [--w0 C] [--c1 C] [--c2 C] [--c C] [--k INT]
//!          [--samples INT] [--seed INT] [--trunc INT] [--format text|csv|json] [--out PATH]
//! ```
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or domain error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::plot::{render_svg, Layer};
use crate::regions::{a2_closed_form, disc_exact, disc_table, disc_theorem2, A2Report, A2Route, MEMBERSHIP_TOL};
use crate::schwarz::{extremal_omega, ExtremalParams, SchwarzCoeffs, RNG_ALGORITHM};
use crate::sigma_star::{carath_from_f, construct_from_omega, PoleParams};
use crate::verify::{monte_carlo_region, positivity_sweep, run_suite, sweep_boundary};
use crate::{cseries::TruncatedSeries, Error, DEFAULT_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "varistar",
    version,
    about = "Second-coefficient regions for meromorphic starlike functions with a pole at p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The historical, exact and fixed-p discs for a pair (p, w0)
    Disc {
        #[arg(long, value_parser = parse_p)]
        p: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        w0: Complex64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// a2 from a Schwarz pair (c1, c2), or from (w0, c2) with c1 derived
    A2 {
        #[arg(long, value_parser = parse_p)]
        p: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex, conflicts_with = "w0", required_unless_present = "w0")]
        c1: Option<Complex64>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        w0: Option<Complex64>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        c2: Complex64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Taylor coefficients of f and P for ω = z(c1 + cz)/(1 + conj(c1)cz) or ω = c1 z + c2 z²
    Construct {
        #[arg(long, value_parser = parse_p)]
        p: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        c1: Complex64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex, conflicts_with = "c2")]
        c: Option<Complex64>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        c2: Option<Complex64>,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        trunc: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Boundary of the exact disc traced by the extremal family, |c| = 1
    Sweep {
        #[arg(long, value_parser = parse_p)]
        p: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        w0: Complex64,
        #[arg(long, default_value_t = 360)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        trunc: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Monte Carlo and identity checks of the region claims
    Verify {
        #[arg(value_enum, default_value_t = VerifyTarget::All)]
        target: VerifyTarget,
        /// Required except for `positivity`, which defaults to p = 0.01, ..., 0.99
        #[arg(long, value_parser = parse_p)]
        p: Option<f64>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// SVG figure of the discs (with w0) or of sampled a2 in the fixed-p disc
    Plot {
        #[arg(long, value_parser = parse_p)]
        p: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        w0: Option<Complex64>,
        #[arg(long, default_value_t = 360)]
        k: usize,
        #[arg(long, default_value_t = 2_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    Region,
    Positivity,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `a+bi`, `a-bi`, `bi` or a bare real `a`.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let bad = || format!("malformed complex literal {text:?} (expected a+bi, a-bi or a real)");
    let s = text.trim();
    if s.is_empty() || s.contains(char::is_whitespace) {
        return Err(bad());
    }
    let real = |t: &str| t.parse::<f64>().ok().filter(|x| x.is_finite());
    let Some(body) = s.strip_suffix('i') else {
        return real(s).map(Complex64::from).ok_or_else(bad);
    };
    // split at the last sign that is not leading and not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(j) => (real(&body[..j]).ok_or_else(bad)?, &body[j..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => real(t).ok_or_else(bad)?,
    };
    Ok(Complex64::new(re, im))
}

fn parse_p(text: &str) -> Result<f64, String> {
    let p: f64 = text.parse().map_err(|_| format!("p = {text:?} is not a number"))?;
    if (0.001..=0.999).contains(&p) {
        Ok(p)
    } else {
        Err(format!("p = {p} outside [0.001, 0.999]"))
    }
}

/// Fixed-point decimal with trailing zeros removed and no negative zero.
pub fn fmt_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let mut s = format!("{x:.12}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// `a + bi` / `a - bi` using [`fmt_real`] for both parts.
pub fn fmt_complex(z: Complex64) -> String {
    let im = fmt_real(z.im);
    match im.strip_prefix('-') {
        Some(abs) => format!("{} - {abs}i", fmt_real(z.re)),
        None => format!("{} + {im}i", fmt_real(z.re)),
    }
}

/// Like [`fmt_complex`] but drops an imaginary part that prints as zero.
fn fmt_compact(z: Complex64) -> String {
    if fmt_real(z.im) == "0" {
        fmt_real(z.re)
    } else {
        fmt_complex(z)
    }
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Vec<u8>, (Vec<u8>, Failure)>;

/// Runs the CLI on `argv` (including the program name) against the real
/// stdout and stderr.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_cli_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// [`run_cli`] with injectable output streams.
pub fn run_cli_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let destination = match &cli.command {
        Command::Disc { out, .. }
        | Command::A2 { out, .. }
        | Command::Construct { out, .. }
        | Command::Sweep { out, .. }
        | Command::Verify { out, .. } => out.out.clone(),
        Command::Plot { out, .. } => out.clone(),
    };
    let (body, failure) = match execute(cli.command) {
        Ok(body) => (body, None),
        Err((body, failure)) => (body, Some(failure)),
    };
    if !body.is_empty() {
        let written = match &destination {
            Some(path) => std::fs::write(path, &body),
            None => stdout.write_all(&body),
        };
        if let Err(e) = written {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            return EXIT_USAGE;
        }
    }
    match failure {
        None => EXIT_OK,
        Some(Failure::Verify(msg)) => {
            let _ = writeln!(stderr, "verification failed: {msg}");
            EXIT_VERIFY_FAILED
        }
        Some(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn usage(e: impl Into<Failure>) -> (Vec<u8>, Failure) {
    (Vec::new(), e.into())
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Disc { p, w0, out } => cmd_disc(p, w0, out.format),
        Command::A2 { p, c1, w0, c2, out } => cmd_a2(p, c1, w0, c2, out.format),
        Command::Construct { p, c1, c, c2, trunc, out } => cmd_construct(p, c1, c, c2, trunc, out.format),
        Command::Sweep { p, w0, k, trunc, out } => cmd_sweep(p, w0, k, trunc, out.format),
        Command::Verify { target, p, samples, seed, out } => cmd_verify(target, p, samples, seed, out.format),
        Command::Plot { p, w0, k, samples, seed, .. } => cmd_plot(p, w0, k, samples, seed),
    }
}

fn json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut v = serde_json::to_vec_pretty(value).expect("report types serialize");
    v.push(b'\n');
    v
}

fn csv_bytes<T: Serialize>(rows: &[T]) -> Vec<u8> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("rows serialize to CSV");
    }
    writer.into_inner().expect("in-memory CSV writer")
}

#[derive(Serialize)]
struct DiscRow {
    disc: &'static str,
    center_re: f64,
    center_im: f64,
    radius: f64,
}

fn cmd_disc(p: f64, w0: Complex64, format: Format) -> Outcome {
    let params = PoleParams::new(p, w0).map_err(usage)?;
    let table = disc_table(&params).map_err(usage)?;
    let rows: Vec<DiscRow> = table
        .iter()
        .map(|(name, d)| DiscRow {
            disc: name,
            center_re: d.center.re,
            center_im: d.center.im,
            radius: d.radius,
        })
        .collect();
    Ok(match format {
        Format::Csv => csv_bytes(&rows),
        Format::Json => json_bytes(&rows),
        Format::Text => {
            let mut s = format!(
                "p = {}, w0 = {}, c1 = {}\n",
                fmt_real(p),
                fmt_complex(w0),
                fmt_complex(params.c1())
            );
            for (name, d) in &table {
                let _ = writeln!(s, "{name}: center = {}, radius = {}", fmt_complex(d.center), fmt_real(d.radius));
            }
            s.into_bytes()
        }
    })
}

#[derive(Serialize)]
struct A2Output {
    p: f64,
    c1: Complex64,
    c2: Complex64,
    w0: Complex64,
    report: A2Report,
    in_exact_disc: bool,
    in_theorem2_disc: bool,
}

fn cmd_a2(p: f64, c1: Option<Complex64>, w0: Option<Complex64>, c2: Complex64, format: Format) -> Outcome {
    let params = match (c1, w0) {
        (Some(c1), _) => PoleParams::from_c1(p, c1),
        (None, Some(w0)) => PoleParams::new(p, w0),
        (None, None) => unreachable!("clap requires c1 or w0"),
    }
    .map_err(usage)?;
    let c1 = c1.unwrap_or_else(|| params.c1());
    let report = a2_closed_form(p, &SchwarzCoeffs::new(c1, c2)).map_err(usage)?;
    let out = A2Output {
        p,
        c1,
        c2,
        w0: params.w0(),
        report,
        in_exact_disc: disc_exact(&params).map_err(usage)?.contains(report.a2, MEMBERSHIP_TOL),
        in_theorem2_disc: disc_theorem2(p).map_err(usage)?.contains(report.a2, MEMBERSHIP_TOL),
    };
    Ok(match format {
        Format::Json => json_bytes(&out),
        Format::Csv => {
            let mut s = String::from("p,c1_re,c1_im,c2_re,c2_im,a2_re,a2_im,m_re,m_im\n");
            let _ = writeln!(
                s,
                "{p},{},{},{},{},{},{},{},{}",
                c1.re, c1.im, c2.re, c2.im, report.a2.re, report.a2.im, report.m.re, report.m.im
            );
            s.into_bytes()
        }
        Format::Text => format!(
            "a2 = {}, M = {}\ndenominator = {}, w0 = {}\nin exact disc: {}, in fixed-p disc: {}\n",
            fmt_complex(report.a2),
            fmt_compact(report.m),
            fmt_complex(report.denominator),
            fmt_complex(out.w0),
            out.in_exact_disc,
            out.in_theorem2_disc
        )
        .into_bytes(),
    })
}

#[derive(Serialize)]
struct CoeffRow {
    n: usize,
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
}

fn cmd_construct(
    p: f64,
    c1: Complex64,
    c: Option<Complex64>,
    c2: Option<Complex64>,
    trunc: usize,
    format: Format,
) -> Outcome {
    if trunc < 2 {
        return Err(usage(Error::Domain(format!("--trunc {trunc} must be at least 2"))));
    }
    let omega = match (c, c2) {
        (_, Some(c2)) => TruncatedSeries::from_coeffs([Complex64::new(0.0, 0.0), c1, c2], trunc),
        (c, None) => extremal_omega(&ExtremalParams::new(c1, c.unwrap_or_default()), trunc).map_err(usage)?,
    };
    let (f, params) = construct_from_omega(p, &omega, trunc).map_err(usage)?;
    let carath = carath_from_f(&params, &f).map_err(usage)?;
    let rows: Vec<CoeffRow> = (0..=trunc)
        .map(|n| CoeffRow {
            n,
            a_re: f.coeff(n).re,
            a_im: f.coeff(n).im,
            b_re: carath.coeff(n).re,
            b_im: carath.coeff(n).im,
        })
        .collect();
    Ok(match format {
        Format::Csv => csv_bytes(&rows),
        Format::Json => json_bytes(&serde_json::json!({
            "p": p,
            "w0": params.w0(),
            "c1": params.c1(),
            "a2": A2Report::from_series(&params, &f, A2Route::OmegaSeries),
            "coefficients": rows,
        })),
        Format::Text => {
            let mut s = format!(
                "p = {}, w0 = {}, c1 = {}, trunc = {trunc}\n",
                fmt_real(p),
                fmt_complex(params.w0()),
                fmt_complex(params.c1())
            );
            let _ = writeln!(s, "a2 = {}", fmt_complex(f.coeff(2)));
            for row in &rows {
                let _ = writeln!(
                    s,
                    "n = {:>2}: a = {}, b = {}",
                    row.n,
                    fmt_complex(f.coeff(row.n)),
                    fmt_complex(carath.coeff(row.n))
                );
            }
            s.into_bytes()
        }
    })
}

#[derive(Serialize)]
struct SweepRow {
    k: usize,
    c_re: f64,
    c_im: f64,
    a2_re: f64,
    a2_im: f64,
    dist_to_center: f64,
}

fn cmd_sweep(p: f64, w0: Complex64, k: usize, trunc: usize, format: Format) -> Outcome {
    let params = PoleParams::new(p, w0).map_err(usage)?;
    let disc = disc_exact(&params).map_err(usage)?;
    let points = sweep_boundary(&params, k, trunc).map_err(usage)?;
    let rows: Vec<SweepRow> = points
        .iter()
        .map(|pt| SweepRow {
            k: pt.k,
            c_re: pt.c.re,
            c_im: pt.c.im,
            a2_re: pt.a2.re,
            a2_im: pt.a2.im,
            dist_to_center: pt.dist_to_center,
        })
        .collect();
    Ok(match format {
        Format::Csv => csv_bytes(&rows),
        Format::Json => json_bytes(&rows),
        Format::Text => {
            let mut s = format!(
                "exact disc: center = {}, radius = {}; {k} boundary points\n",
                fmt_complex(disc.center),
                fmt_real(disc.radius)
            );
            for pt in &points {
                let _ = writeln!(
                    s,
                    "k = {}: c = {}, a2 = {}, |a2 - center| = {}",
                    pt.k,
                    fmt_complex(pt.c),
                    fmt_complex(pt.a2),
                    fmt_real(pt.dist_to_center)
                );
            }
            s.into_bytes()
        }
    })
}

#[derive(Serialize)]
struct VerifyRow {
    seed: u64,
    n: usize,
    violations: usize,
    max_excess: f64,
    sup_attained: f64,
}

fn require_p(p: Option<f64>) -> Result<f64, (Vec<u8>, Failure)> {
    p.ok_or_else(|| usage(Failure::Usage("--p is required".into())))
}

fn cmd_verify(target: VerifyTarget, p: Option<f64>, samples: usize, seed: u64, format: Format) -> Outcome {
    if samples == 0 {
        return Err(usage(Failure::Usage("--samples must be positive".into())));
    }
    match target {
        VerifyTarget::Region => {
            let p = require_p(p)?;
            let stats = monte_carlo_region(p, seed, samples, MEMBERSHIP_TOL).map_err(usage)?;
            let body = match format {
                Format::Csv => csv_bytes(&[VerifyRow {
                    seed,
                    n: stats.n_samples,
                    violations: stats.violations,
                    max_excess: stats.max_radial_excess,
                    sup_attained: stats.sup_attained,
                }]),
                Format::Json => json_bytes(&stats),
                Format::Text => format!(
                    "p: {}\nseed: {seed}\nrng: {}\nsamples: {}\nviolations: {}\nviolations (exact disc): {}\nviolations (fixed-p disc): {}\nmax radial excess: {:e}\nsup |a2 - 1/p|: {}\nmin Re a2: {}\n",
                    fmt_real(p),
                    stats.rng,
                    stats.n_samples,
                    stats.violations,
                    stats.violations_exact,
                    stats.violations_theorem2,
                    stats.max_radial_excess,
                    fmt_real(stats.sup_attained),
                    fmt_real(stats.min_re_a2)
                )
                .into_bytes(),
            };
            if stats.pass() {
                Ok(body)
            } else {
                Err((body, Failure::Verify(format!("{} violations", stats.violations))))
            }
        }
        VerifyTarget::Positivity => {
            let grid: Vec<f64> = match p {
                Some(p) => vec![p],
                None => (1..=99).map(|k| k as f64 / 100.0).collect(),
            };
            let rows = positivity_sweep(&grid, seed, samples).map_err(usage)?;
            let failing = rows.iter().filter(|r| !r.pass(MEMBERSHIP_TOL)).count();
            let body = match format {
                Format::Json => json_bytes(&rows),
                Format::Csv => {
                    let mut s = String::from("seed,p,lower_bound,min_sampled_re\n");
                    for r in &rows {
                        let _ = writeln!(s, "{seed},{},{},{}", r.p, r.lower_bound, r.min_sampled_re.unwrap_or(f64::NAN));
                    }
                    s.into_bytes()
                }
                Format::Text => {
                    let mut s = format!("seed: {seed}\nrng: {RNG_ALGORITHM}\nsamples per p: {samples}\n");
                    for r in &rows {
                        let _ = writeln!(
                            s,
                            "p = {}: 1/p - p = {}, min sampled Re a2 = {}",
                            fmt_real(r.p),
                            fmt_real(r.lower_bound),
                            fmt_real(r.min_sampled_re.unwrap_or(f64::NAN))
                        );
                    }
                    let _ = writeln!(s, "failing: {failing}");
                    s.into_bytes()
                }
            };
            if failing == 0 {
                Ok(body)
            } else {
                Err((body, Failure::Verify(format!("{failing} values of p fail positivity"))))
            }
        }
        VerifyTarget::All => {
            let p = require_p(p)?;
            let results = run_suite(p, seed, samples).map_err(usage)?;
            let failing: Vec<&str> = results.iter().filter(|r| !r.pass).map(|r| r.name).collect();
            let body = match format {
                Format::Json => json_bytes(&serde_json::json!({
                    "p": p,
                    "seed": seed,
                    "rng": RNG_ALGORITHM,
                    "samples": samples,
                    "results": results,
                })),
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row<'a> {
                        seed: u64,
                        check: &'a str,
                        pass: bool,
                        detail: &'a str,
                    }
                    let rows: Vec<Row<'_>> = results
                        .iter()
                        .map(|r| Row { seed, check: r.name, pass: r.pass, detail: &r.detail })
                        .collect();
                    csv_bytes(&rows)
                }
                Format::Text => {
                    let mut s = format!("p: {}\nseed: {seed}\nrng: {RNG_ALGORITHM}\nsamples: {samples}\n", fmt_real(p));
                    for r in &results {
                        let _ = writeln!(s, "[{}] {}: {}", if r.pass { "PASS" } else { "FAIL" }, r.name, r.detail);
                    }
                    s.into_bytes()
                }
            };
            if failing.is_empty() {
                Ok(body)
            } else {
                Err((body, Failure::Verify(failing.join(", "))))
            }
        }
    }
}

fn cmd_plot(p: f64, w0: Option<Complex64>, k: usize, samples: usize, seed: u64) -> Outcome {
    let svg = match w0 {
        Some(w0) => {
            let params = PoleParams::new(p, w0).map_err(usage)?;
            let table = disc_table(&params).map_err(usage)?;
            let layers: Vec<Layer<'_>> = table.iter().map(|(label, disc)| Layer { label, disc: *disc }).collect();
            let points: Vec<Complex64> = if params.c1().norm() < 1.0 - 1e-12 {
                sweep_boundary(&params, k, DEFAULT_ORDER)
                    .map_err(usage)?
                    .iter()
                    .map(|pt| pt.a2)
                    .collect()
            } else {
                vec![table[2].1.center]
            };
            let title = format!("p = {}, w0 = {}", fmt_real(p), fmt_complex(w0));
            render_svg(&title, &layers, &points)
        }
        None => {
            let disc = disc_theorem2(p).map_err(usage)?;
            let points: Vec<Complex64> = crate::schwarz::sample_schwarz_pairs(seed, samples)
                .iter()
                .map(|pair| a2_closed_form(p, pair).map(|r| r.a2))
                .collect::<Result<_, _>>()
                .map_err(usage)?;
            let title = format!("p = {}, {samples} samples, seed {seed} ({RNG_ALGORITHM})", fmt_real(p));
            render_svg(&title, &[Layer { label: "fixed-p disc", disc }], &points)
        }
    };
    Ok(svg.into_bytes())
}
