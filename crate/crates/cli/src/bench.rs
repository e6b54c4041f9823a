//! Wall-clock comparison of the integer pipeline against floating-point
//! Durand-Kerner followed by Newton polish.

use std::time::{Duration, Instant};

use intseq::oracle::{durand_kerner, newton_polish};
use intseq::{root_via_shift, DriverOptions, Poly, RootEstimate, Shift};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::report::render_grid;
use crate::GUARD_DIGITS;

/// Largest number of decimal places a double can carry meaningfully.
const F64_DIGITS: usize = 15;
const ORACLE_MAX_ITERS: usize = 1000;
const NEWTON_MAX_ITERS: usize = 100;

#[derive(Debug, Clone)]
pub struct BenchCase {
    pub poly: Poly,
    pub shift: Shift,
}

fn int_poly(c: &[i64]) -> Poly {
    let big: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
    Poly::from_coefficients(&big, true).expect("built-in polynomials are monic")
}

fn int_shift(a: i64, b: i64) -> Shift {
    Shift::new(BigInt::from(a), BigInt::from(b)).expect("b is nonzero")
}

/// The three worked examples: the Pell-type quadratic unshifted and shifted,
/// and the cube root of two.
pub fn worked_examples() -> Vec<BenchCase> {
    vec![
        BenchCase {
            poly: int_poly(&[1, 2, -1]),
            shift: Shift::identity(),
        },
        BenchCase {
            poly: int_poly(&[1, 2, -1]),
            shift: int_shift(2, 1),
        },
        BenchCase {
            poly: int_poly(&[1, 0, 0, -2]),
            shift: int_shift(1, 1),
        },
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub polynomial: String,
    pub shift: String,
    pub integer_median_us: f64,
    pub integer_iterations: usize,
    pub integer_status: String,
    pub peak_bits: u64,
    pub integer_value: String,
    pub oracle_median_us: f64,
    pub oracle_iterations: usize,
    pub oracle_value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub command: String,
    pub digits: usize,
    pub runs: usize,
    pub rows: Vec<BenchRow>,
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

fn timed<R>(runs: usize, mut f: impl FnMut() -> R) -> (Duration, R) {
    let mut samples = Vec::with_capacity(runs);
    let mut last = None;
    for _ in 0..runs.max(1) {
        let start = Instant::now();
        let r = f();
        samples.push(start.elapsed());
        last = Some(r);
    }
    (median(samples), last.expect("at least one run"))
}

struct OracleRun {
    value: String,
    iterations: usize,
}

/// All roots by Durand-Kerner, then Newton on the one the shift targets:
/// the root maximizing `|a + b r|`.
fn oracle_root(case: &BenchCase, digits: usize) -> OracleRun {
    let places = digits.min(F64_DIGITS);
    let tol = 10f64.powi(-(places as i32));
    let failed = || OracleRun {
        value: "n/a".to_string(),
        iterations: 0,
    };
    let Ok(set) = durand_kerner::<BigInt, f64>(&case.poly, tol, ORACLE_MAX_ITERS) else {
        return failed();
    };
    let (Some(a), Some(b)) = (case.shift.a().to_f64(), case.shift.b().to_f64()) else {
        return failed();
    };
    let Some(start) = set
        .roots
        .iter()
        .copied()
        .max_by(|x, y| (*x * b + a).norm().total_cmp(&(*y * b + a).norm()))
    else {
        return failed();
    };
    match newton_polish(&case.poly, start, tol, NEWTON_MAX_ITERS) {
        Ok((z, steps)) => {
            let value = if z.im.abs() <= tol * z.norm().max(1.0) {
                format!("{:.places$}", z.re)
            } else {
                format!("{:.places$}{:+.places$}i", z.re, z.im)
            };
            OracleRun {
                value,
                iterations: set.iterations + steps,
            }
        }
        Err(_) => failed(),
    }
}

fn integer_value(e: &RootEstimate, digits: usize) -> String {
    if e.value.is_zero() && !e.is_converged() {
        "n/a".to_string()
    } else {
        e.decimal(digits)
    }
}

pub fn run_case(case: &BenchCase, digits: usize, runs: usize, max_iters: usize) -> BenchRow {
    let opts = DriverOptions {
        target_digits: digits + GUARD_DIGITS,
        max_iters,
        ..Default::default()
    };
    let (int_time, int_result) = timed(runs, || root_via_shift(&case.poly, &case.shift, &opts));
    let (oracle_time, oracle) = timed(runs, || oracle_root(case, digits));
    let (integer_iterations, integer_status, peak_bits, integer_value) = match &int_result {
        Ok(e) => (
            e.iterations,
            e.status.to_string(),
            e.peak_bits,
            integer_value(e, digits),
        ),
        Err(err) => (0, err.to_string(), 0, "n/a".to_string()),
    };
    BenchRow {
        polynomial: case.poly.to_string(),
        shift: case.shift.to_string(),
        integer_median_us: int_time.as_secs_f64() * 1e6,
        integer_iterations,
        integer_status,
        peak_bits,
        integer_value,
        oracle_median_us: oracle_time.as_secs_f64() * 1e6,
        oracle_iterations: oracle.iterations,
        oracle_value: oracle.value,
    }
}

pub fn run_bench(cases: &[BenchCase], digits: usize, runs: usize, max_iters: usize) -> BenchReport {
    BenchReport {
        command: "bench".to_string(),
        digits,
        runs,
        rows: cases
            .iter()
            .map(|c| run_case(c, digits, runs, max_iters))
            .collect(),
    }
}

impl BenchReport {
    pub fn render_table(&self) -> String {
        let mut out = format!(
            "digits: {}  runs: {} (median wall-clock)\n",
            self.digits, self.runs
        );
        let header = [
            "polynomial",
            "shift",
            "int us",
            "int iters",
            "peak bits",
            "int status",
            "int value",
            "float us",
            "float iters",
            "float value",
        ];
        let body = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.polynomial.clone(),
                    r.shift.clone(),
                    format!("{:.1}", r.integer_median_us),
                    r.integer_iterations.to_string(),
                    r.peak_bits.to_string(),
                    r.integer_status.clone(),
                    r.integer_value.clone(),
                    format!("{:.1}", r.oracle_median_us),
                    r.oracle_iterations.to_string(),
                    r.oracle_value.clone(),
                ]
            })
            .collect();
        out.push_str(&render_grid(header.map(String::from).to_vec(), body));
        out
    }
}
