//! All real roots by steering the dominant eigenvalue onto each root in turn.
//!
//! Affine shifts `aI + R` only ever make an extreme root dominant: `|a + r|`
//! is maximized on the boundary of the root set. Interior roots are reached
//! with the inverted generator of [`root_near`], whose dominant eigenvalue
//! belongs to the root nearest a chosen center. Along the real line each
//! root's "nearest" region is an interval, so sweeping centers and bisecting
//! between neighbours that see different roots finds every real root whose
//! region is wider than the finest center spacing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{
    linear_root, root_near, root_via_shift, verify_root, DriverOptions, RootEstimate, Status,
};
use crate::poly::{AffineShift, MonicPoly};

type Poly = MonicPoly<BigInt>;

const SEARCH_DIGITS: usize = 8;
const SEARCH_ITERS: usize = 600;
/// Bisection stops once adjacent centers are this many halvings apart.
const BISECT_DEPTH: u32 = 6;
const MAX_INITIAL_CENTERS: i64 = 64;
const MAX_PROBES: usize = 512;
/// Search estimates are rounded to this many fractional bits before polishing.
const POLISH_BITS: u32 = 20;

#[derive(Debug, Clone)]
enum Outcome {
    Root(f64),
    Tie,
    Unknown,
}

impl Outcome {
    fn same_as(&self, other: &Outcome) -> bool {
        match (self, other) {
            (Outcome::Root(x), Outcome::Root(y)) => close(*x, *y, 1e-5),
            (Outcome::Tie, Outcome::Tie) => true,
            _ => false,
        }
    }
}

fn close(x: f64, y: f64, rel: f64) -> bool {
    (x - y).abs() <= rel * x.abs().max(1.0)
}

fn rational(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

struct Probe<'a> {
    poly: &'a Poly,
    opts: DriverOptions,
    runs: usize,
    candidates: Vec<BigRational>,
}

impl Probe<'_> {
    fn at(&mut self, center: &BigRational) -> Outcome {
        self.runs += 1;
        match root_near(self.poly, center, &self.opts) {
            Ok(e) if e.status == Status::Converged => {
                let x = e.to_f64();
                self.candidates.push(e.value);
                Outcome::Root(x)
            }
            Ok(e) if e.status == Status::TieDetected => Outcome::Tie,
            _ => Outcome::Unknown,
        }
    }
}

/// Every verified real root of `p`, ascending, each with the run that produced it.
///
/// Zero roots are deflated first and reported exactly. Shifts that tie,
/// stall, or fail verification are skipped, so an empty list is possible.
pub fn enumerate_real_roots(p: &Poly, opts: &DriverOptions) -> Vec<RootEstimate> {
    if opts.validate().is_err() {
        return Vec::new();
    }
    let digits = opts.target_digits;
    let mut roots = Vec::new();
    let mut q = p.clone();
    if q.constant_term().is_zero() {
        roots.push(RootEstimate::exact(
            BigRational::zero(),
            digits,
            AffineShift::identity(),
            false,
        ));
        while q.constant_term().is_zero() {
            match q.deflate_zero_root() {
                Ok(d) => q = d,
                Err(_) => return roots,
            }
        }
    }
    if q.degree() == 1 {
        roots.extend(linear_root(&q, &AffineShift::identity(), opts).ok());
        return sorted_unique(roots, digits);
    }

    let search = DriverOptions {
        target_digits: digits.min(SEARCH_DIGITS),
        max_iters: opts.max_iters.min(SEARCH_ITERS),
        ..*opts
    };
    let mut probe = Probe {
        poly: &q,
        opts: search,
        runs: 0,
        candidates: Vec::new(),
    };

    let bound = q.cauchy_bound();
    for k in [-2, -1, 0, 1, 2] {
        let shift = AffineShift::translate(&bound * BigInt::from(k));
        if let Ok(e) = root_via_shift(&q, &shift, &search) {
            if e.is_converged() {
                probe.candidates.push(e.value);
            }
        }
    }

    // Integer centers spanning (-bound, bound), thinned for large bounds.
    let bound_i = bound.to_i64().unwrap_or(i64::MAX / 4);
    let spacing = Integer::div_ceil(&(2 * bound_i), &MAX_INITIAL_CENTERS).max(1);
    let min_gap = rational(BigInt::from(spacing)) / rational(BigInt::one() << BISECT_DEPTH);
    let mut points: Vec<(BigRational, Outcome)> = Vec::new();
    let mut c = -bound_i;
    while c <= bound_i {
        let center = rational(BigInt::from(c));
        let outcome = probe.at(&center);
        points.push((center, outcome));
        c += spacing;
    }
    loop {
        let mut refined = Vec::with_capacity(points.len() * 2);
        let mut split = false;
        for pair in points.windows(2) {
            let (l, r) = (&pair[0], &pair[1]);
            refined.push(l.clone());
            if !l.1.same_as(&r.1) && &r.0 - &l.0 > min_gap && probe.runs < MAX_PROBES {
                let mid = (&l.0 + &r.0) / rational(BigInt::from(2));
                let outcome = probe.at(&mid);
                refined.push((mid, outcome));
                split = true;
            }
        }
        refined.extend(points.last().cloned());
        points = refined;
        if !split {
            break;
        }
    }

    let mut seeds: Vec<BigRational> = Vec::new();
    for cand in std::mem::take(&mut probe.candidates) {
        let x = cand.to_f64().unwrap_or(f64::NAN);
        if !seeds
            .iter()
            .any(|s| close(s.to_f64().unwrap_or(f64::NAN), x, 1e-6))
        {
            seeds.push(cand);
        }
    }

    let scale = rational(BigInt::one() << POLISH_BITS);
    for seed in seeds {
        let rounded = (&seed * &scale).round() / &scale;
        let polished = [rounded, seed]
            .iter()
            .filter_map(|center| root_near(&q, center, opts).ok())
            .find(RootEstimate::is_converged);
        if let Some(e) = polished {
            if verify_root(&q, &e.value, digits) {
                roots.push(e);
            }
        }
    }

    sorted_unique(roots, digits)
}

fn sorted_unique(mut roots: Vec<RootEstimate>, digits: usize) -> Vec<RootEstimate> {
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    let tol = BigRational::new(
        BigInt::one(),
        BigInt::from(10).pow(digits.saturating_sub(2) as u32),
    );
    let mut deduped: Vec<RootEstimate> = Vec::with_capacity(roots.len());
    for e in roots {
        let dup = deduped.last().is_some_and(|last: &RootEstimate| {
            (&e.value - &last.value).abs() <= &tol * e.value.abs().max(BigRational::one())
        });
        if !dup {
            deduped.push(e);
        }
    }
    deduped
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Poly {
        let big: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        MonicPoly::from_coefficients(&big, true).unwrap()
    }

    fn values(p: &Poly) -> Vec<f64> {
        enumerate_real_roots(p, &DriverOptions::default())
            .iter()
            .map(RootEstimate::to_f64)
            .collect()
    }

    fn assert_roots(p: &Poly, expect: &[f64]) {
        let got = values(p);
        assert_eq!(
            got.len(),
            expect.len(),
            "{p}: got {got:?}, expected {expect:?}"
        );
        for (g, e) in got.iter().zip(expect) {
            assert!(
                (g - e).abs() < 1e-10,
                "{p}: got {got:?}, expected {expect:?}"
            );
        }
    }

    #[test]
    fn examples() {
        let s = 2f64.sqrt();
        assert_roots(&poly(&[1, 2, -1]), &[-1.0 - s, s - 1.0]);
        assert_roots(&poly(&[1, 0, 1]), &[]);
        assert_roots(&poly(&[1, 0, 0, -2]), &[2f64.cbrt()]);
    }

    #[test]
    fn interior_roots() {
        // x^3 - 3x + 1 = 2cos(2πk/9) style roots.
        let expect: Vec<f64> = {
            let mut r: Vec<f64> = (0..3)
                .map(|k| 2.0 * (2.0 * std::f64::consts::PI * (1 + 3 * k) as f64 / 9.0).cos())
                .collect();
            r.sort_by(f64::total_cmp);
            r
        };
        assert_roots(&poly(&[1, 0, -3, 1]), &expect);
        // (x-1)(x-2)(x-3)(x+4)
        assert_roots(&poly(&[1, -2, -13, 38, -24]), &[-4.0, 1.0, 2.0, 3.0]);
    }

    #[test]
    fn zero_roots_are_deflated() {
        assert_roots(&poly(&[1, 2, 0]), &[-2.0, 0.0]);
        assert_roots(&poly(&[1, 0, 0, 0]), &[0.0]);
        assert_roots(&poly(&[1, 0]), &[0.0]);
        assert_roots(
            &poly(&[1, 0, -2, 0, 0]),
            &[-(2f64.sqrt()), 0.0, 2f64.sqrt()],
        );
    }

    #[test]
    fn linear() {
        assert_roots(&poly(&[1, 7]), &[-7.0]);
    }
}
