//! The m integer sequences generated by a companion-type matrix.
//!
//! Sequence `i` is component `i` of `S_j = G^j S_0`. Because `G` satisfies its
//! characteristic polynomial `x^m + c_1 x^(m-1) + ... + c_m`, every component
//! obeys the m-term recurrence `S_j = -c_1 S_(j-1) - ... - c_m S_(j-m)`, which
//! is how exact mode advances. Normalized mode instead applies `G` to the last
//! vector and divides out the gcd of its components; this keeps all
//! same-step ratios but not the ratios between steps.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

use crate::companion::{CompanionMatrix, MatrixError, StateVector};
use crate::decimal::{render_fixed, render_significant};
use crate::poly::{AffineShift, MonicPoly};
use crate::scalar::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("seed vector is zero")]
    ZeroSeed,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("term S_{j}^({i}) is not available")]
    OutOfRange { i: usize, j: usize },
    #[error("ratio denominator is zero")]
    ZeroDenominator,
    #[error("successive ratios are not defined in normalized mode")]
    NormalizedModeUnsupported,
}

impl From<MatrixError> for SequenceError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::DimensionMismatch { expected, got } => {
                SequenceError::DimensionMismatch { expected, got }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Raw integer terms, advanced by the m-term recurrence.
    #[default]
    Exact,
    /// Each vector divided by the gcd of its components.
    Normalized,
}

/// An exact ratio sample, kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Convergent<T: Clone + Integer> {
    value: Ratio<T>,
}

impl<T: Int> Convergent<T> {
    /// `None` when `den == 0`.
    pub fn new(num: T, den: T) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Self {
                value: Ratio::new(num, den),
            })
        }
    }

    pub fn value(&self) -> &Ratio<T> {
        &self.value
    }

    pub fn into_value(self) -> Ratio<T> {
        self.value
    }

    /// Rounded (half-even) to `places` digits after the decimal point.
    pub fn decimal(&self, places: usize) -> String {
        render_fixed(self.value.numer(), self.value.denom(), places).expect("denominator > 0")
    }

    /// Rounded (half-even) to `digits` significant digits.
    pub fn significant(&self, digits: usize) -> String {
        render_significant(self.value.numer(), self.value.denom(), digits).expect("denominator > 0")
    }

    pub fn to_f64(&self) -> f64 {
        self.value.numer().to_f64().unwrap_or(f64::NAN)
            / self.value.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl<T: Int> fmt::Display for Convergent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Rolling state of the m sequences.
#[derive(Debug, Clone)]
pub struct SequenceFamily<T> {
    generator: CompanionMatrix<T>,
    recurrence: MonicPoly<T>,
    window: VecDeque<StateVector<T>>,
    j: usize,
    history: Option<Vec<StateVector<T>>>,
    mode: Mode,
    // |det G| bounds the gcd of G v whenever gcd(v) = 1.
    gcd_hint: T,
    divisors: VecDeque<T>,
}

impl<T: Int> SequenceFamily<T> {
    /// General constructor: `generator` produces the vectors and `recurrence`
    /// must be its characteristic polynomial.
    ///
    /// The window is filled with `S_0..S_(m-1)`, leaving the family at `j = m - 1`.
    pub fn new(
        generator: CompanionMatrix<T>,
        recurrence: MonicPoly<T>,
        seed: StateVector<T>,
        mode: Mode,
    ) -> Result<Self, SequenceError> {
        let m = generator.dim();
        if recurrence.degree() != m {
            return Err(SequenceError::DimensionMismatch {
                expected: m,
                got: recurrence.degree(),
            });
        }
        if seed.dim() != m {
            return Err(SequenceError::DimensionMismatch {
                expected: m,
                got: seed.dim(),
            });
        }
        if seed.is_zero() {
            return Err(SequenceError::ZeroSeed);
        }
        let gcd_hint = recurrence.constant_term().abs();
        let mut family = Self {
            generator,
            recurrence,
            window: VecDeque::with_capacity(m + 1),
            j: 0,
            history: None,
            mode,
            gcd_hint,
            divisors: VecDeque::with_capacity(m + 1),
        };
        let first = family.normalize(seed, true);
        family.push(first.0, first.1);
        for _ in 1..m {
            let next = family.generator.mat_vec(family.current())?;
            let (v, g) = family.normalize(next, false);
            family.push(v, g);
            family.j += 1;
        }
        Ok(family)
    }

    /// Family of the companion matrix of `p`.
    pub fn for_poly(
        p: &MonicPoly<T>,
        seed: StateVector<T>,
        mode: Mode,
    ) -> Result<Self, SequenceError> {
        Self::new(CompanionMatrix::of(p), p.clone(), seed, mode)
    }

    /// Family of `aI + bR`, with `R` the companion matrix of `p`. The
    /// recurrence is the shifted polynomial `b^m p((x - a) / b)`.
    pub fn shifted(
        p: &MonicPoly<T>,
        shift: &AffineShift<T>,
        seed: StateVector<T>,
        mode: Mode,
    ) -> Result<Self, SequenceError> {
        Self::new(
            CompanionMatrix::of(p).affine(shift),
            p.shift_scale(shift),
            seed,
            mode,
        )
    }

    /// Starts recording every vector from the current window onwards. Called
    /// right after construction, the record covers all of `S_0..S_j`.
    pub fn retain_history(mut self) -> Self {
        if self.history.is_none() {
            self.history = Some(self.window.iter().cloned().collect());
        }
        self
    }

    fn normalize(&self, v: StateVector<T>, first: bool) -> (StateVector<T>, T) {
        if self.mode == Mode::Exact {
            return (v, T::one());
        }
        // Every stored vector after the first has content 1, so the content
        // of G v divides |det G|.
        let g = if first || self.gcd_hint.is_zero() {
            v.content()
        } else {
            v.content_from(self.gcd_hint.clone())
        };
        if g.is_zero() || g.is_one() {
            return (v, T::one());
        }
        (v.div_exact(&g), g)
    }

    fn push(&mut self, v: StateVector<T>, divisor: T) {
        if let Some(h) = self.history.as_mut() {
            h.push(v.clone());
        }
        self.window.push_back(v);
        self.divisors.push_back(divisor);
        // The successive ratio needs S_(j-1) even when m = 1.
        let keep = self.generator.dim().max(2);
        while self.window.len() > keep {
            self.window.pop_front();
            self.divisors.pop_front();
        }
    }

    /// Advances one index.
    pub fn step(&mut self) {
        let next = match self.mode {
            Mode::Exact => {
                let m = self.dim();
                let len = self.window.len();
                let comps = (0..m)
                    .map(|i| {
                        self.recurrence.coeffs().iter().enumerate().fold(
                            T::zero(),
                            |acc, (k, a)| {
                                let prev = &self.window[len - 1 - k].components()[i];
                                if a.is_zero() || prev.is_zero() {
                                    acc
                                } else {
                                    acc - a.clone() * prev.clone()
                                }
                            },
                        )
                    })
                    .collect();
                StateVector::new(comps)
            }
            Mode::Normalized => self
                .generator
                .mat_vec(self.current())
                .expect("generator and window share a dimension"),
        };
        let (v, g) = self.normalize(next, false);
        self.push(v, g);
        self.j += 1;
    }

    pub fn dim(&self) -> usize {
        self.generator.dim()
    }

    pub fn index(&self) -> usize {
        self.j
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn generator(&self) -> &CompanionMatrix<T> {
        &self.generator
    }

    pub fn recurrence(&self) -> &MonicPoly<T> {
        &self.recurrence
    }

    /// `S_j` at the current index.
    pub fn current(&self) -> &StateVector<T> {
        self.window.back().expect("window is never empty")
    }

    pub fn history(&self) -> Option<&[StateVector<T>]> {
        self.history.as_deref()
    }

    /// Positive integer divided out of the vector at step `j` relative to
    /// `G` applied to step `j - 1` (always 1 in exact mode).
    pub fn step_divisor(&self, j: usize) -> Option<&T> {
        let lo = self.j + 1 - self.window.len();
        (j >= lo && j <= self.j).then(|| &self.divisors[j - lo])
    }

    /// Stored vector at step `j`, from the window or the history.
    pub fn vector(&self, j: usize) -> Option<&StateVector<T>> {
        if j > self.j {
            return None;
        }
        let lo = self.j + 1 - self.window.len();
        if j >= lo {
            return Some(&self.window[j - lo]);
        }
        self.history.as_ref().and_then(|h| h.get(j))
    }

    /// `S_j^(i)`, with `i` in `1..=m`.
    pub fn term(&self, i: usize, j: usize) -> Result<&T, SequenceError> {
        if i == 0 || i > self.dim() {
            return Err(SequenceError::OutOfRange { i, j });
        }
        self.vector(j)
            .map(|v| &v.components()[i - 1])
            .ok_or(SequenceError::OutOfRange { i, j })
    }

    /// `S_j^(i) / S_j^(i+1)`, with `i` in `1..m`.
    pub fn cross_ratio(&self, i: usize, j: usize) -> Result<Convergent<T>, SequenceError> {
        if i == 0 || i >= self.dim() {
            return Err(SequenceError::OutOfRange { i, j });
        }
        let num = self.term(i, j)?.clone();
        let den = self.term(i + 1, j)?.clone();
        Convergent::new(num, den).ok_or(SequenceError::ZeroDenominator)
    }

    /// `S_j^(i) / S_(j-1)^(i)`, with `i` in `1..=m`; exact mode only.
    pub fn successive_ratio(&self, i: usize, j: usize) -> Result<Convergent<T>, SequenceError> {
        if self.mode == Mode::Normalized {
            return Err(SequenceError::NormalizedModeUnsupported);
        }
        if j == 0 {
            return Err(SequenceError::OutOfRange { i, j });
        }
        let num = self.term(i, j)?.clone();
        let den = self.term(i, j - 1)?.clone();
        Convergent::new(num, den).ok_or(SequenceError::ZeroDenominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> MonicPoly<i64> {
        MonicPoly::from_coefficients(c, true).unwrap()
    }

    fn v(c: &[i64]) -> StateVector<i64> {
        StateVector::new(c.to_vec())
    }

    fn pell() -> SequenceFamily<i64> {
        SequenceFamily::for_poly(&poly(&[1, 2, -1]), v(&[1, 0]), Mode::Exact).unwrap()
    }

    fn cube_root(mode: Mode) -> SequenceFamily<i64> {
        let s = AffineShift::new(1, 1).unwrap();
        SequenceFamily::shifted(&poly(&[1, 0, 0, -2]), &s, v(&[1, 1, 0]), mode).unwrap()
    }

    #[test]
    fn init_examples() {
        let f = pell();
        assert_eq!(f.index(), 1);
        assert_eq!(f.vector(0), Some(&v(&[1, 0])));
        assert_eq!(f.vector(1), Some(&v(&[-2, 1])));

        let f = cube_root(Mode::Exact);
        assert_eq!(f.recurrence(), &poly(&[1, -3, 3, -3]));
        assert_eq!(f.vector(0), Some(&v(&[1, 1, 0])));
        assert_eq!(f.vector(1), Some(&v(&[1, 2, 1])));
        assert_eq!(f.vector(2), Some(&v(&[3, 3, 3])));

        assert_eq!(
            SequenceFamily::for_poly(&poly(&[1, 2, -1]), v(&[0, 0]), Mode::Exact).unwrap_err(),
            SequenceError::ZeroSeed
        );
        assert_eq!(
            SequenceFamily::for_poly(&poly(&[1, 2, -1]), v(&[1]), Mode::Exact).unwrap_err(),
            SequenceError::DimensionMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn step_examples() {
        let mut f = pell();
        f.step();
        assert_eq!(f.current(), &v(&[5, -2]));

        let mut f = cube_root(Mode::Exact);
        f.step();
        assert_eq!(f.current(), &v(&[9, 6, 6]));
        while f.index() < 25 {
            f.step();
        }
        assert_eq!(f.current(), &v(&[536171481, 425559582, 337766841]));
    }

    #[test]
    fn term_examples() {
        let mut f = pell().retain_history();
        while f.index() < 6 {
            f.step();
        }
        assert_eq!(*f.term(1, 6).unwrap(), 169);
        assert_eq!(*f.term(1, 0).unwrap(), 1);
        assert_eq!(f.term(3, 0), Err(SequenceError::OutOfRange { i: 3, j: 0 }));
        assert_eq!(f.term(1, 7), Err(SequenceError::OutOfRange { i: 1, j: 7 }));

        // Without history only the window survives.
        let mut g = pell();
        for _ in 0..5 {
            g.step();
        }
        assert_eq!(g.term(1, 0), Err(SequenceError::OutOfRange { i: 1, j: 0 }));
        assert_eq!(*g.term(1, 5).unwrap(), -70);

        let s = AffineShift::new(2, 1).unwrap();
        let mut f = SequenceFamily::shifted(&poly(&[1, 2, -1]), &s, v(&[1, 0]), Mode::Exact)
            .unwrap()
            .retain_history();
        while f.index() < 7 {
            f.step();
        }
        assert_eq!(*f.term(2, 7).unwrap(), 169);
        let second: Vec<i64> = (0..=7).map(|j| *f.term(2, j).unwrap()).collect();
        assert_eq!(second, [0, 1, 2, 5, 12, 29, 70, 169]);
    }

    #[test]
    fn cross_ratio_examples() {
        let mut f = pell();
        assert_eq!(f.cross_ratio(1, 0), Err(SequenceError::ZeroDenominator));
        while f.index() < 4 {
            f.step();
        }
        let c = f.cross_ratio(1, 4).unwrap();
        assert_eq!(c.value(), &Ratio::new(-29, 12));
        assert_eq!(c.decimal(4), "-2.4167");

        let mut f = cube_root(Mode::Exact);
        while f.index() < 25 {
            f.step();
        }
        assert_eq!(f.cross_ratio(1, 25).unwrap().decimal(6), "1.259921");
        assert_eq!(f.cross_ratio(2, 25).unwrap().decimal(6), "1.259921");
        assert_eq!(
            f.cross_ratio(3, 25),
            Err(SequenceError::OutOfRange { i: 3, j: 25 })
        );
    }

    #[test]
    fn successive_ratio_examples() {
        let mut f = pell();
        while f.index() < 5 {
            f.step();
        }
        let r = f.successive_ratio(2, 5).unwrap();
        assert_eq!(r.value(), &Ratio::new(29, -12));

        let mut f = cube_root(Mode::Exact);
        while f.index() < 25 {
            f.step();
        }
        let r = f.successive_ratio(2, 25).unwrap();
        assert_eq!(r.value(), &Ratio::new(425559582, 188307261));
        assert_eq!(r.decimal(6), "2.259921");

        let mut f = SequenceFamily::for_poly(&poly(&[1, -5]), v(&[1]), Mode::Exact).unwrap();
        for j in 1..6 {
            f.step();
            assert_eq!(
                f.successive_ratio(1, j).unwrap().value(),
                &Ratio::from_integer(5)
            );
        }

        let f = cube_root(Mode::Normalized);
        assert_eq!(
            f.successive_ratio(1, 1),
            Err(SequenceError::NormalizedModeUnsupported)
        );
    }

    #[test]
    fn normalized_divides_by_content() {
        let mut exact = cube_root(Mode::Exact);
        let mut norm = cube_root(Mode::Normalized);
        // S_2 = [3, 3, 3] normalizes to [1, 1, 1].
        assert_eq!(norm.vector(2), Some(&v(&[1, 1, 1])));
        assert_eq!(norm.step_divisor(2), Some(&3));
        for _ in 0..20 {
            exact.step();
            norm.step();
            let j = exact.index();
            for i in 1..3 {
                assert_eq!(exact.cross_ratio(i, j), norm.cross_ratio(i, j));
            }
            let e = exact.current().components();
            let n = norm.current().components();
            let k = e[0] / n[0];
            assert!(k > 0);
            assert!(e.iter().zip(n).all(|(x, y)| *x == k * y));
        }
    }

    #[test]
    fn convergent_is_reduced() {
        let c = Convergent::new(6i64, -4).unwrap();
        assert_eq!(c.value().numer(), &-3);
        assert_eq!(c.value().denom(), &2);
        assert!(Convergent::new(1i64, 0).is_none());
        assert_eq!(c.to_string(), "-3/2");
    }
}
