//! Root estimates from ratio sequences.
//!
//! A run iterates one sequence family and watches the cross-component ratio
//! `S_j^(1) / S_j^(2)`. Because eigenvectors are `[r^(m-1), ..., r, 1]`, that
//! ratio tends to the root `r` whose eigenvalue dominates the generator, in
//! the coordinates of the original polynomial regardless of any shift.
//!
//! Which root dominates is chosen by the generator:
//! - [`dominant_root`]: the companion matrix itself, largest `|r|`;
//! - [`root_via_shift`]: `aI + bR`, largest `|a + b r|`;
//! - [`root_near`]: the adjugate of `vR - uI`, smallest `|r - u/v|`.

mod enumerate;
mod verify;

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::companion::{CompanionMatrix, StateVector};
use crate::decimal::{ratio_to_f64, render_fixed, render_significant};
use crate::poly::{AffineShift, MonicPoly};
use crate::sequence::{Mode, SequenceError, SequenceFamily};

pub use enumerate::enumerate_real_roots;
pub use verify::{has_sign_change_near, relative_residual_ok, verify_root};

type Poly = MonicPoly<BigInt>;
type Shift = AffineShift<BigInt>;

/// Samples in the sliding window used to detect non-contracting oscillation.
pub const TIE_WINDOW: usize = 20;
/// Failed contraction checks, among the last `TIE_HORIZON`, that declare a tie.
const TIE_PERSISTENCE: usize = 20;
/// A complex pair at an irrational angle fails only about half the checks,
/// so failures are counted over a horizon rather than required in a row.
const TIE_HORIZON: usize = 60;
/// Up to this many digits, convergents whose doubles differ clearly are
/// known to render differently without rendering them.
const F64_FILTER_DIGITS: usize = 15;
/// Bits kept from each operand of the successive ratio during the cross
/// check, on top of the requested digits.
const CHECK_GUARD_BITS: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DriverError {
    #[error("constant term is zero; deflate the zero root first")]
    ZeroConstantTerm,
    #[error("invalid driver options: {0}")]
    InvalidOptions(&'static str),
    #[error("cross ratio {cross} and successive ratio {successive} disagree")]
    EstimatorMismatch { cross: String, successive: String },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DriverOptions {
    /// Significant digits that must stabilize.
    pub target_digits: usize,
    /// Consecutive convergents whose renderings must agree.
    pub window: usize,
    pub max_iters: usize,
    pub normalized: bool,
}

impl Default for DriverOptions {
    fn default() -> Self {
        Self {
            target_digits: 12,
            window: 3,
            max_iters: 10_000,
            normalized: true,
        }
    }
}

impl DriverOptions {
    pub fn validate(&self) -> Result<(), DriverError> {
        if self.target_digits == 0 {
            return Err(DriverError::InvalidOptions(
                "target_digits must be positive",
            ));
        }
        if self.window == 0 {
            return Err(DriverError::InvalidOptions("window must be positive"));
        }
        if self.max_iters == 0 {
            return Err(DriverError::InvalidOptions("max_iters must be positive"));
        }
        Ok(())
    }

    fn mode(&self) -> Mode {
        if self.normalized {
            Mode::Normalized
        } else {
            Mode::Exact
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Converged,
    TieDetected,
    MaxItersExceeded,
    DegenerateSeed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Converged => "Converged",
            Status::TieDetected => "TieDetected",
            Status::MaxItersExceeded => "MaxItersExceeded",
            Status::DegenerateSeed => "DegenerateSeed",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Estimator {
    CrossRatio,
    SuccessiveRatio,
    /// The root was hit exactly (zero constant term after a shift).
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEstimate {
    /// Last accepted convergent, in lowest terms.
    pub value: BigRational,
    /// Significant digits that had stabilized when the run stopped.
    pub decimal_digits: usize,
    pub iterations: usize,
    pub status: Status,
    pub shift_used: Shift,
    /// Generator was the adjugate of `aI + bR` rather than `aI + bR`.
    pub inverted: bool,
    pub estimator: Estimator,
    /// Largest bit length of any stored sequence term.
    pub peak_bits: u64,
}

impl RootEstimate {
    pub fn is_converged(&self) -> bool {
        self.status == Status::Converged
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(self.value.numer(), self.value.denom())
    }

    pub fn decimal(&self, places: usize) -> String {
        render_fixed(self.value.numer(), self.value.denom(), places).expect("denominator > 0")
    }

    pub fn significant(&self, digits: usize) -> String {
        render_significant(self.value.numer(), self.value.denom(), digits).expect("denominator > 0")
    }

    fn exact(value: BigRational, digits: usize, shift: Shift, inverted: bool) -> Self {
        Self {
            value,
            decimal_digits: digits,
            iterations: 0,
            status: Status::Converged,
            shift_used: shift,
            inverted,
            estimator: Estimator::Exact,
            peak_bits: 0,
        }
    }
}

/// Generator matrix, its characteristic polynomial, and how its eigenvalues
/// relate to roots of the original polynomial.
struct Target {
    generator: CompanionMatrix<BigInt>,
    recurrence: Poly,
    shift: Shift,
    inverted: bool,
    // det(aI + bR); eigenvalues of the adjugate are det / (a + b r).
    det: BigInt,
}

impl Target {
    fn affine(p: &Poly, shift: &Shift) -> Self {
        Self {
            generator: CompanionMatrix::of(p).affine(shift),
            recurrence: p.shift_scale(shift),
            shift: shift.clone(),
            inverted: false,
            det: BigInt::zero(),
        }
    }

    /// `None` when `a + b r = 0` for some root, i.e. `-a/b` is itself a root.
    fn inverted(p: &Poly, shift: &Shift) -> Option<Self> {
        let q = p.shift_scale(shift);
        let m = q.degree();
        let sign = if m.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let det = q.constant_term() * &sign;
        if det.is_zero() {
            return None;
        }
        let shifted = CompanionMatrix::of(p).affine(shift);
        let generator = shifted.adjugate(&q).expect("degrees agree");
        let flip = AffineShift::new(BigInt::zero(), sign).expect("nonzero");
        let recurrence = q
            .reciprocal_scaled()
            .expect("nonzero constant")
            .shift_scale(&flip);
        Some(Self {
            generator,
            recurrence,
            shift: shift.clone(),
            inverted: true,
            det,
        })
    }

    /// Root implied by a generator eigenvalue.
    fn root_from_eigenvalue(&self, lambda: &BigRational) -> Option<BigRational> {
        let shifted = if self.inverted {
            if lambda.is_zero() {
                return None;
            }
            BigRational::from_integer(self.det.clone()) / lambda
        } else {
            lambda.clone()
        };
        Some(self.shift.invert(&shifted))
    }
}

/// Watches convergents for digit agreement and for non-contracting oscillation.
struct Tracker {
    digits: usize,
    window: usize,
    streak: usize,
    /// Rendering of the previous convergent, when it was needed.
    last_render: Option<String>,
    last_pair: Option<(BigInt, BigInt)>,
    last: Option<f64>,
    prev: Option<f64>,
    amplitudes: VecDeque<f64>,
    checks: VecDeque<bool>,
    failures: usize,
}

enum Verdict {
    Converged,
    Tie,
    Continue,
}

impl Tracker {
    fn new(opts: &DriverOptions) -> Self {
        Self {
            digits: opts.target_digits,
            window: opts.window,
            streak: 0,
            last_render: None,
            last_pair: None,
            last: None,
            prev: None,
            amplitudes: VecDeque::with_capacity(TIE_WINDOW + 1),
            checks: VecDeque::with_capacity(TIE_HORIZON + 1),
            failures: 0,
        }
    }

    /// Whether `num / den` renders like the previous convergent. Renders only
    /// when the floating-point values are close enough that they might.
    fn agrees_with_last(&mut self, num: &BigInt, den: &BigInt, x: f64) -> bool {
        let Some(y) = self.last else {
            self.last_render = None;
            return false;
        };
        let filter = self.digits <= F64_FILTER_DIGITS && x.is_finite() && y.is_finite();
        if filter && (x - y).abs() > 10f64.powi(2 - self.digits as i32) * x.abs().max(y.abs()) {
            self.last_render = None;
            return false;
        }
        let previous = self.last_render.take().or_else(|| {
            let (n, d) = self.last_pair.as_ref()?;
            render_significant(n, d, self.digits)
        });
        let current = render_significant(num, den, self.digits);
        let same = previous.is_some() && previous == current;
        self.last_render = current;
        same
    }

    fn observe(&mut self, num: &BigInt, den: &BigInt) -> Verdict {
        let amplitude = if den.is_zero() {
            self.streak = 0;
            self.last_render = None;
            self.last_pair = None;
            self.prev = self.last.take();
            f64::INFINITY
        } else {
            let x = ratio_to_f64(num, den);
            if self.agrees_with_last(num, den, x) {
                self.streak += 1;
            } else {
                self.streak = 1;
            }
            self.last_pair = Some((num.clone(), den.clone()));
            let amp = self.last.map_or(f64::INFINITY, |y| (x - y).abs());
            self.prev = self.last.replace(x);
            amp
        };
        if self.streak >= self.window {
            return Verdict::Converged;
        }
        self.amplitudes.push_back(amplitude);
        if self.amplitudes.len() > TIE_WINDOW {
            self.amplitudes.pop_front();
        }
        if self.amplitudes.len() == TIE_WINDOW {
            let half = TIE_WINDOW / 2;
            let max = |it: std::collections::vec_deque::Iter<'_, f64>| {
                it.fold(0.0f64, |m, &a| if a > m { a } else { m })
            };
            let early = max(self.amplitudes.range(..half));
            let late = max(self.amplitudes.range(half..));
            let failed = late >= early;
            self.checks.push_back(failed);
            self.failures += usize::from(failed);
            if self.checks.len() > TIE_HORIZON {
                let dropped = self.checks.pop_front().unwrap_or(false);
                self.failures -= usize::from(dropped);
            }
        }
        if self.failures >= TIE_PERSISTENCE {
            Verdict::Tie
        } else {
            Verdict::Continue
        }
    }

    /// Significant digits shared by the last two defined convergents.
    fn agreed_digits(&self) -> usize {
        match (self.last, self.prev) {
            (Some(x), Some(y)) if x != y => {
                let rel = (x - y).abs() / x.abs().max(f64::MIN_POSITIVE);
                (-rel.log10()).floor().clamp(0.0, self.digits as f64) as usize
            }
            (Some(_), Some(_)) => self.digits,
            _ => 0,
        }
    }
}

fn peak_bits(v: &StateVector<BigInt>) -> u64 {
    v.components().iter().map(BigInt::bits).max().unwrap_or(0)
}

struct RunOutcome {
    estimate: RootEstimate,
    family: Option<SequenceFamily<BigInt>>,
}

fn run(target: &Target, opts: &DriverOptions) -> Result<RunOutcome, DriverError> {
    opts.validate()?;
    let m = target.generator.dim();
    debug_assert!(m >= 2);
    let seeds = [StateVector::basis(m), StateVector::ones(m)];
    let mut peak = 0;
    let mut iterations = 0;
    for seed in seeds {
        let mut family = SequenceFamily::new(
            target.generator.clone(),
            target.recurrence.clone(),
            seed,
            opts.mode(),
        )?;
        let mut tracker = Tracker::new(opts);
        let mut last_defined: Option<(BigInt, BigInt)> = None;
        loop {
            let j = family.index();
            let v = family.current();
            if v.is_zero() {
                iterations = j;
                break;
            }
            peak = peak.max(peak_bits(v));
            let (num, den) = (&v.components()[0], &v.components()[1]);
            let verdict = tracker.observe(num, den);
            let status = match verdict {
                Verdict::Converged => Some(Status::Converged),
                Verdict::Tie => Some(Status::TieDetected),
                Verdict::Continue if j >= opts.max_iters => Some(Status::MaxItersExceeded),
                Verdict::Continue => None,
            };
            if let Some(status) = status {
                let value = if den.is_zero() {
                    last_defined.map_or_else(BigRational::zero, |(n, d)| BigRational::new(n, d))
                } else {
                    BigRational::new(num.clone(), den.clone())
                };
                let decimal_digits = if status == Status::Converged {
                    opts.target_digits
                } else {
                    tracker.agreed_digits()
                };
                let estimate = RootEstimate {
                    value,
                    decimal_digits,
                    iterations: j,
                    status,
                    shift_used: target.shift.clone(),
                    inverted: target.inverted,
                    estimator: Estimator::CrossRatio,
                    peak_bits: peak,
                };
                return Ok(RunOutcome {
                    estimate,
                    family: Some(family),
                });
            }
            if !den.is_zero() {
                last_defined = Some((num.clone(), den.clone()));
            }
            family.step();
        }
    }
    Ok(RunOutcome {
        estimate: RootEstimate {
            value: BigRational::zero(),
            decimal_digits: 0,
            iterations,
            status: Status::DegenerateSeed,
            shift_used: target.shift.clone(),
            inverted: target.inverted,
            estimator: Estimator::CrossRatio,
            peak_bits: peak,
        },
        family: None,
    })
}

/// `num / den` with both operands shifted right by a common amount so the
/// smaller keeps about `keep` bits; relative error at most `2^(1 - keep)`.
fn truncated_ratio(num: BigInt, den: BigInt, keep: u64) -> BigRational {
    let drop = num.bits().min(den.bits()).saturating_sub(keep);
    BigRational::new(num >> drop, den >> drop)
}

/// Checks the converged cross ratio against the per-sequence successive
/// ratio, both mapped back to a root of the original polynomial.
fn cross_check(
    target: &Target,
    family: &SequenceFamily<BigInt>,
    estimate: &RootEstimate,
    digits: usize,
) -> Result<(), DriverError> {
    let j = family.index();
    if j == 0 {
        return Ok(());
    }
    let (Some(now), Some(before), Some(divisor)) = (
        family.vector(j),
        family.vector(j - 1),
        family.step_divisor(j),
    ) else {
        return Ok(());
    };
    let Some(i) = before.components().iter().position(|c| !c.is_zero()) else {
        return Ok(());
    };
    let keep = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u64 + CHECK_GUARD_BITS;
    let lambda = truncated_ratio(
        &now.components()[i] * divisor,
        before.components()[i].clone(),
        keep,
    );
    let Some(root) = target.root_from_eigenvalue(&lambda) else {
        return Ok(());
    };
    let tol = BigRational::new(
        BigInt::one(),
        BigInt::from(10).pow(digits.saturating_sub(2) as u32),
    );
    let scale = estimate.value.abs().max(BigRational::one());
    if (&root - &estimate.value).abs() > tol * scale {
        let d = digits + 2;
        return Err(DriverError::EstimatorMismatch {
            cross: estimate.significant(d),
            successive: render_significant(root.numer(), root.denom(), d).expect("nonzero"),
        });
    }
    Ok(())
}

/// Degree 1: `S_1 / S_0` is the shifted eigenvalue `a + b r` after one step.
fn linear_root(p: &Poly, shift: &Shift, opts: &DriverOptions) -> Result<RootEstimate, DriverError> {
    let mut family = SequenceFamily::shifted(p, shift, StateVector::basis(1), Mode::Exact)?;
    family.step();
    let lambda = family.successive_ratio(1, 1)?;
    Ok(RootEstimate {
        iterations: 1,
        estimator: Estimator::SuccessiveRatio,
        peak_bits: peak_bits(family.current()),
        ..RootEstimate::exact(
            shift.invert(lambda.value()),
            opts.target_digits,
            shift.clone(),
            false,
        )
    })
}

/// Root of largest modulus, read from the unshifted companion sequences.
pub fn dominant_root(p: &Poly, opts: &DriverOptions) -> Result<RootEstimate, DriverError> {
    opts.validate()?;
    if p.constant_term().is_zero() {
        return Err(DriverError::ZeroConstantTerm);
    }
    let identity = Shift::identity();
    if p.degree() == 1 {
        return linear_root(p, &identity, opts);
    }
    Ok(run(&Target::affine(p, &identity), opts)?.estimate)
}

/// Root `r` maximizing `|a + b r|`, read from the sequences of `aI + bR`.
///
/// A converged run is cross-checked against the successive ratio, which
/// estimates `a + b r` independently.
pub fn root_via_shift(
    p: &Poly,
    shift: &Shift,
    opts: &DriverOptions,
) -> Result<RootEstimate, DriverError> {
    opts.validate()?;
    if p.degree() == 1 {
        return linear_root(p, shift, opts);
    }
    let target = Target::affine(p, shift);
    let outcome = run(&target, opts)?;
    if let (true, Some(family)) = (outcome.estimate.is_converged(), outcome.family.as_ref()) {
        cross_check(&target, family, &outcome.estimate, opts.target_digits)?;
    }
    Ok(outcome.estimate)
}

/// Root closest to `center`, read from the sequences of `adj(vR - uI)` with
/// `center = u / v`.
///
/// If `center` is itself a root it is returned exactly without iterating.
pub fn root_near(
    p: &Poly,
    center: &BigRational,
    opts: &DriverOptions,
) -> Result<RootEstimate, DriverError> {
    opts.validate()?;
    if p.degree() == 1 {
        return linear_root(p, &Shift::identity(), opts);
    }
    let shift = Shift::new(-center.numer().clone(), center.denom().clone())
        .expect("denominator is positive");
    let Some(target) = Target::inverted(p, &shift) else {
        return Ok(RootEstimate::exact(
            center.clone(),
            opts.target_digits,
            shift,
            true,
        ));
    };
    let outcome = run(&target, opts)?;
    if let (true, Some(family)) = (outcome.estimate.is_converged(), outcome.family.as_ref()) {
        cross_check(&target, family, &outcome.estimate, opts.target_digits)?;
    }
    Ok(outcome.estimate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::companion::cayley_hamilton_residual;

    fn poly(c: &[i64]) -> Poly {
        let big: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        MonicPoly::from_coefficients(&big, true).unwrap()
    }

    fn shift(a: i64, b: i64) -> Shift {
        Shift::new(BigInt::from(a), BigInt::from(b)).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn inverted_target_recurrence_is_generator_charpoly() {
        let p = poly(&[1, -2, -5, 6, 1]);
        for s in [shift(0, 1), shift(-1, 2), shift(3, 1), shift(-7, 4)] {
            let t = Target::inverted(&p, &s).unwrap();
            assert!(cayley_hamilton_residual(&t.recurrence, &t.generator)
                .unwrap()
                .is_zero());
        }
        // x = 1 is a root of x^2 - 1, so centering at 1 has no inverse.
        assert!(Target::inverted(&poly(&[1, 0, -1]), &shift(-1, 1)).is_none());
    }

    #[test]
    fn dominant_root_pell() {
        let e = dominant_root(&poly(&[1, 2, -1]), &DriverOptions::default()).unwrap();
        assert_eq!(e.status, Status::Converged);
        assert!((e.to_f64() - (-1.0 - 2f64.sqrt())).abs() < 1e-11);
        assert_eq!(e.significant(10), "-2.414213562");
    }

    #[test]
    fn linear_case_is_exact_after_one_step() {
        let e = dominant_root(&poly(&[1, -5]), &DriverOptions::default()).unwrap();
        assert_eq!(e.value, rat(5, 1));
        assert_eq!(e.iterations, 1);
        assert_eq!(e.status, Status::Converged);
        let e = root_via_shift(&poly(&[1, -5]), &shift(3, -2), &DriverOptions::default()).unwrap();
        assert_eq!(e.value, rat(5, 1));
    }

    #[test]
    fn ties() {
        let opts = DriverOptions::default();
        assert_eq!(
            dominant_root(&poly(&[1, 0, 1]), &opts).unwrap().status,
            Status::TieDetected
        );
        assert_eq!(
            dominant_root(&poly(&[1, 0, 0, -2]), &opts).unwrap().status,
            Status::TieDetected
        );
        assert_eq!(
            dominant_root(&poly(&[1, 0, -2]), &opts).unwrap().status,
            Status::TieDetected
        );
        // Complex dominant pair with a smaller real root: roots 1±2i, 0.5.
        let e = dominant_root(&poly(&[1, -2, 5]), &opts).unwrap();
        assert_eq!(e.status, Status::TieDetected);
    }

    #[test]
    fn zero_constant_term_rejected() {
        let err = dominant_root(&poly(&[1, 2, 0]), &DriverOptions::default()).unwrap_err();
        assert_eq!(err, DriverError::ZeroConstantTerm);
    }

    #[test]
    fn shifted_roots() {
        let opts = DriverOptions::default();
        let e = root_via_shift(&poly(&[1, 2, -1]), &shift(2, 1), &opts).unwrap();
        assert!((e.to_f64() - (2f64.sqrt() - 1.0)).abs() < 1e-11);
        let e = root_via_shift(&poly(&[1, 0, 0, -2]), &shift(1, 1), &opts).unwrap();
        assert!((e.to_f64() - 2f64.cbrt()).abs() < 1e-10);
        let a = root_via_shift(&poly(&[1, 2, -1]), &Shift::identity(), &opts).unwrap();
        let b = dominant_root(&poly(&[1, 2, -1]), &opts).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn exact_and_normalized_agree() {
        let p = poly(&[1, -3, -7, 2]);
        let exact = DriverOptions {
            normalized: false,
            ..DriverOptions::default()
        };
        let a = dominant_root(&p, &exact).unwrap();
        let b = dominant_root(&p, &DriverOptions::default()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.iterations, b.iterations);
        assert!(b.peak_bits <= a.peak_bits);
    }

    #[test]
    fn nearest_root() {
        // Roots of x^3 - 7x + 6 are -3, 1, 2: centering anywhere finds the closest.
        let p = poly(&[1, 0, -7, 6]);
        let opts = DriverOptions::default();
        let e = root_near(&p, &rat(3, 2), &opts).unwrap();
        assert_eq!(e.status, Status::TieDetected);
        let e = root_near(&p, &rat(13, 10), &opts).unwrap();
        assert!((e.to_f64() - 1.0).abs() < 1e-11, "{}", e.to_f64());
        let e = root_near(&p, &rat(1, 1), &opts).unwrap();
        assert_eq!(e.estimator, Estimator::Exact);
        assert_eq!(e.value, rat(1, 1));
        // Interior irrational root of x^3 - 3x + 1: roots ≈ -1.879, 0.347, 1.532.
        let p = poly(&[1, 0, -3, 1]);
        let e = root_near(&p, &rat(0, 1), &opts).unwrap();
        assert!(
            (e.to_f64() - 0.347_296_355_333_860_7).abs() < 1e-11,
            "{}",
            e.to_f64()
        );
        assert!(e.inverted);
    }

    #[test]
    fn invalid_options() {
        let bad = DriverOptions {
            window: 0,
            ..DriverOptions::default()
        };
        assert!(matches!(
            dominant_root(&poly(&[1, 2, -1]), &bad),
            Err(DriverError::InvalidOptions(_))
        ));
    }

    #[test]
    fn max_iters_reported() {
        let opts = DriverOptions {
            max_iters: 5,
            ..DriverOptions::default()
        };
        let e = dominant_root(&poly(&[1, 2, -1]), &opts).unwrap();
        assert_eq!(e.status, Status::MaxItersExceeded);
        assert_eq!(e.iterations, 5);
        assert!(e.decimal_digits < 12);
    }

    #[test]
    fn degenerate_seed_retried() {
        // The companion matrix of x^2 is nilpotent: both seeds reach zero.
        let p = poly(&[1, 0, 0]);
        let t = Target::affine(&p, &Shift::identity());
        let e = run(&t, &DriverOptions::default()).unwrap().estimate;
        assert_eq!(e.status, Status::DegenerateSeed);
    }
}
