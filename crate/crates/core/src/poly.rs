//! Monic integer polynomials and the exact affine change of variable.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::scalar::Int;

/// Largest degree accepted unless a different cap is passed explicitly.
pub const DEFAULT_DEGREE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("leading coefficient must be 1, got {0}")]
    NotMonic(String),
    #[error("polynomial must have degree at least 1")]
    EmptyInput,
    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("constant term is nonzero, so 0 is not a root")]
    NoZeroRoot,
    #[error("cannot deflate a degree-1 polynomial")]
    DegreeTooSmall,
    #[error("affine shift scale b must be nonzero")]
    ZeroScale,
}

/// `p(x) = x^m + a_1 x^(m-1) + ... + a_m`.
///
/// Only `a_1..a_m` are stored; the leading 1 is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonicPoly<T> {
    coeffs: Vec<T>,
}

/// The map `r -> a + b r` on roots (and `R -> aI + bR` on matrices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineShift<T> {
    a: T,
    b: T,
}

impl<T: Int> AffineShift<T> {
    pub fn new(a: T, b: T) -> Result<Self, PolyError> {
        if b.is_zero() {
            return Err(PolyError::ZeroScale);
        }
        Ok(Self { a, b })
    }

    pub fn identity() -> Self {
        Self {
            a: T::zero(),
            b: T::one(),
        }
    }

    /// Pure translation `r -> a + r`.
    pub fn translate(a: T) -> Self {
        Self { a, b: T::one() }
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_one()
    }

    /// Shift equivalent to applying `self` first and then `outer`.
    pub fn then(&self, outer: &Self) -> Self {
        Self {
            a: outer.a.clone() + self.a.clone() * outer.b.clone(),
            b: self.b.clone() * outer.b.clone(),
        }
    }

    /// Image `a + b r` of a rational root.
    pub fn apply(&self, r: &Ratio<T>) -> Ratio<T> {
        Ratio::from_integer(self.a.clone()) + r * Ratio::from_integer(self.b.clone())
    }

    /// Preimage `(y - a) / b`.
    pub fn invert(&self, y: &Ratio<T>) -> Ratio<T> {
        (y - Ratio::from_integer(self.a.clone())) / Ratio::from_integer(self.b.clone())
    }
}

impl<T: fmt::Display> fmt::Display for AffineShift<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl<T: Int> MonicPoly<T> {
    /// Builds `x^m + a_1 x^(m-1) + ... + a_m` from `[a_1, ..., a_m]`.
    pub fn new(coeffs: Vec<T>) -> Result<Self, PolyError> {
        Self::with_degree_cap(coeffs, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap(coeffs: Vec<T>, cap: usize) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::EmptyInput);
        }
        if coeffs.len() > cap {
            return Err(PolyError::DegreeTooLarge {
                degree: coeffs.len(),
                cap,
            });
        }
        Ok(Self { coeffs })
    }

    /// Parses a coefficient list, highest power first.
    ///
    /// With `includes_leading` the first entry must be exactly 1 and is
    /// dropped; otherwise the list is `[a_1, ..., a_m]`.
    pub fn from_coefficients(list: &[T], includes_leading: bool) -> Result<Self, PolyError> {
        let tail = if includes_leading {
            match list.split_first() {
                None => return Err(PolyError::EmptyInput),
                Some((lead, rest)) => {
                    if !lead.is_one() {
                        return Err(PolyError::NotMonic(lead.to_string()));
                    }
                    rest
                }
            }
        } else {
            list
        };
        Self::new(tail.to_vec())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `[a_1, ..., a_m]`.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Full list including the leading 1, highest power first.
    pub fn full_coeffs(&self) -> Vec<T> {
        std::iter::once(T::one())
            .chain(self.coeffs.iter().cloned())
            .collect()
    }

    /// `a_k` for `k` in `1..=m`.
    pub fn a(&self, k: usize) -> &T {
        &self.coeffs[k - 1]
    }

    pub fn constant_term(&self) -> &T {
        self.coeffs.last().expect("degree >= 1")
    }

    /// `1 + max |a_k|`; every root has modulus strictly below this.
    pub fn cauchy_bound(&self) -> T {
        let max = self
            .coeffs
            .iter()
            .map(|c| c.abs())
            .fold(T::zero(), |m, c| if c > m { c } else { m });
        max + T::one()
    }

    pub fn eval(&self, x: &Ratio<T>) -> Ratio<T> {
        self.coeffs.iter().fold(Ratio::one(), |acc, c| {
            acc * x + Ratio::from_integer(c.clone())
        })
    }

    pub fn eval_int(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .fold(T::one(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `sum |a_k| |x|^(m-k)` with `a_0 = 1`: the magnitude scale against which
    /// a residual `p(x)` is judged.
    pub fn eval_abs_scale(&self, x: &Ratio<T>) -> Ratio<T> {
        let ax = x.abs();
        self.coeffs.iter().fold(Ratio::one(), |acc, c| {
            acc * &ax + Ratio::from_integer(c.abs())
        })
    }

    /// `q(x) = b^m p((x - a) / b)`: monic, integer, roots `a + b r_i`.
    pub fn shift_scale(&self, s: &AffineShift<T>) -> Self {
        // Scale: c_k b^k is the coefficient of z^(m-k) in b^m p(z / b).
        let mut power = T::one();
        let mut d: Vec<T> = Vec::with_capacity(self.degree() + 1);
        d.push(T::one());
        for c in &self.coeffs {
            power = power * s.b.clone();
            d.push(c.clone() * power.clone());
        }
        // Taylor shift z = x - a by repeated synthetic division.
        let h = -s.a.clone();
        let m = self.degree();
        if !h.is_zero() {
            for i in 0..m {
                for j in 1..=(m - i) {
                    let t = d[j - 1].clone() * h.clone();
                    d[j] = d[j].clone() + t;
                }
            }
        }
        d.remove(0);
        Self { coeffs: d }
    }

    /// `p / x` when `a_m = 0`.
    pub fn deflate_zero_root(&self) -> Result<Self, PolyError> {
        if !self.constant_term().is_zero() {
            return Err(PolyError::NoZeroRoot);
        }
        if self.degree() < 2 {
            return Err(PolyError::DegreeTooSmall);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.pop();
        Ok(Self { coeffs })
    }

    /// Monic integer polynomial whose roots are `a_m / r_i` (requires `a_m != 0`).
    ///
    /// Its coefficient of `x^(m-j)` is `a_(m-j) a_m^(j-1)`, with `a_0 = 1`.
    pub fn reciprocal_scaled(&self) -> Option<Self> {
        let m = self.degree();
        let cm = self.constant_term().clone();
        if cm.is_zero() {
            return None;
        }
        let full = self.full_coeffs();
        let mut power = T::one();
        let mut coeffs = Vec::with_capacity(m);
        for j in 1..=m {
            coeffs.push(full[m - j].clone() * power.clone());
            power = power * cm.clone();
        }
        Some(Self { coeffs })
    }
}

impl<T: Int> fmt::Display for MonicPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let monomial = |k: usize| match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        write!(f, "{}", if m == 0 { "1".to_string() } else { monomial(m) })?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = m - 1 - i;
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            if mag.is_one() && k > 0 {
                write!(f, " {sign} {}", monomial(k))?;
            } else {
                write!(f, " {sign} {mag}{}", monomial(k))?;
            }
        }
        Ok(())
    }
}
