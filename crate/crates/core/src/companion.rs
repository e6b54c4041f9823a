//! Companion matrices, their affine transforms, and exact matrix-vector products.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{AffineShift, MonicPoly};
use crate::scalar::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense square integer matrix, row-major.
///
/// Built as the companion matrix of a monic polynomial; after
/// [`CompanionMatrix::affine`] it is a general integer matrix (the companion
/// structure is no longer present, but the eigenvectors are).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompanionMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

/// Column vector of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateVector<T>(Vec<T>);

impl<T: Int> StateVector<T> {
    pub fn new(components: Vec<T>) -> Self {
        Self(components)
    }

    /// `[1, 0, ..., 0]`.
    pub fn basis(dim: usize) -> Self {
        let mut v = vec![T::zero(); dim];
        if dim > 0 {
            v[0] = T::one();
        }
        Self(v)
    }

    /// `[1, 1, ..., 1]`.
    pub fn ones(dim: usize) -> Self {
        Self(vec![T::one(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[T] {
        &self.0
    }

    pub fn into_components(self) -> Vec<T> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Nonnegative gcd of all components (0 for the zero vector).
    pub fn content(&self) -> T {
        self.content_from(T::zero())
    }

    /// `gcd(start, v_1, ..., v_m)`; a small nonzero `start` keeps every step
    /// a reduction modulo a small number.
    pub fn content_from(&self, start: T) -> T {
        let mut g = start.abs();
        for c in &self.0 {
            if g.is_one() {
                break;
            }
            // Binary gcd on a huge and a tiny operand shifts the huge one
            // bit by bit; one remainder first brings both down to size.
            g = if g.is_zero() {
                c.abs()
            } else {
                g.gcd(&(c.clone() % g.clone()))
            };
        }
        g
    }

    pub fn div_exact(&self, d: &T) -> Self {
        Self(self.0.iter().map(|c| c.clone() / d.clone()).collect())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self(self.0.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        )
    }
}

impl<T: Int> CompanionMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = T::one();
        }
        m
    }

    /// Row-major construction; `None` if the rows are ragged or not square.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Companion matrix: first row `[-a_1, ..., -a_m]`, ones on the subdiagonal.
    pub fn of(p: &MonicPoly<T>) -> Self {
        let m = p.degree();
        let mut c = Self::zeros(m);
        for (k, a) in p.coeffs().iter().enumerate() {
            c.entries[k] = -a.clone();
        }
        for i in 1..m {
            c.entries[i * m + i - 1] = T::one();
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[T]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// True when `self` has exactly the companion structure of `p`.
    pub fn is_companion_of(&self, p: &MonicPoly<T>) -> bool {
        *self == Self::of(p)
    }

    /// `a I + b C`.
    pub fn affine(&self, s: &AffineShift<T>) -> Self {
        let n = self.dim;
        let mut out = self.clone();
        for (idx, e) in out.entries.iter_mut().enumerate() {
            *e = e.clone() * s.b().clone();
            if idx / n == idx % n {
                *e = e.clone() + s.a().clone();
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &StateVector<T>) -> Result<StateVector<T>, MatrixError> {
        if v.dim() != self.dim {
            return Err(MatrixError::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        let out = self
            .entries
            .chunks(self.dim)
            .map(|row| {
                row.iter()
                    .zip(v.components())
                    .filter(|(r, x)| !r.is_zero() && !x.is_zero())
                    .fold(T::zero(), |acc, (r, x)| acc + r.clone() * x.clone())
            })
            .collect();
        Ok(StateVector(out))
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if other.dim != self.dim {
            return Err(MatrixError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a.clone() * other.entries[k * n + j].clone();
                    out.entries[i * n + j] = out.entries[i * n + j].clone() + t;
                }
            }
        }
        Ok(out)
    }

    fn add_scaled_identity(&mut self, k: &T) {
        for i in 0..self.dim {
            let idx = i * self.dim + i;
            self.entries[idx] = self.entries[idx].clone() + k.clone();
        }
    }

    /// Evaluates `p(self)` by Horner's rule in exact matrix arithmetic.
    pub fn eval_poly(&self, p: &MonicPoly<T>) -> Result<Self, MatrixError> {
        if p.degree() != self.dim {
            return Err(MatrixError::DimensionMismatch {
                expected: self.dim,
                got: p.degree(),
            });
        }
        let mut acc = Self::identity(self.dim);
        for a in p.coeffs() {
            acc = acc.mat_mul(self)?;
            acc.add_scaled_identity(a);
        }
        Ok(acc)
    }

    /// Adjugate of `self`, given its characteristic polynomial.
    ///
    /// `adj(A) = (-1)^(m+1) (A^(m-1) + c_1 A^(m-2) + ... + c_(m-1) I)`. It has
    /// the eigenvectors of `A` and eigenvalues `det(A) / λ_i`, so when `A` is
    /// nonsingular the eigenvalue closest to 0 becomes dominant.
    pub fn adjugate(&self, charpoly: &MonicPoly<T>) -> Result<Self, MatrixError> {
        let m = self.dim;
        if charpoly.degree() != m {
            return Err(MatrixError::DimensionMismatch {
                expected: m,
                got: charpoly.degree(),
            });
        }
        let mut acc = Self::identity(m);
        for a in &charpoly.coeffs()[..m - 1] {
            acc = acc.mat_mul(self)?;
            acc.add_scaled_identity(a);
        }
        if m.is_multiple_of(2) {
            for e in &mut acc.entries {
                *e = -e.clone();
            }
        }
        Ok(acc)
    }
}

/// `p(C)`; zero whenever `C` is the companion matrix of `p` (Cayley-Hamilton).
pub fn cayley_hamilton_residual<T: Int>(
    p: &MonicPoly<T>,
    c: &CompanionMatrix<T>,
) -> Result<CompanionMatrix<T>, MatrixError> {
    c.eval_poly(p)
}

impl<T: Int> fmt::Display for CompanionMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
