//! Exact-arithmetic real-root finding for monic integer polynomials.
//!
//! A monic polynomial `p(x) = x^m + a_1 x^(m-1) + ... + a_m` with integer
//! coefficients has a companion matrix `R` whose eigenvectors are
//! `[r^(m-1), ..., r, 1]` for each root `r`. Iterating `S_j = R^j S_0` (or,
//! equivalently, the m-term integer recurrence with coefficients `-a_k`) gives
//! m integer sequences whose cross-component ratios converge to the dominant
//! root. Replacing `R` by `aI + bR` moves a different root into the dominant
//! position without changing eigenvectors, so the same ratios then converge
//! to that root.
//!
//! The algebra is generic over the integer ring (see [`scalar::Int`]); the
//! aliases below fix it to [`BigInt`], which is what the driver uses.

pub mod companion;
pub mod decimal;
pub mod driver;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod sequence;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use companion::{CompanionMatrix, MatrixError, StateVector};
pub use driver::{
    dominant_root, enumerate_real_roots, root_near, root_via_shift, DriverError, DriverOptions,
    Estimator, RootEstimate, Status,
};
pub use oracle::{ComplexRootSet, OracleError};
pub use poly::{AffineShift, MonicPoly, PolyError};
pub use scalar::{Int, Real};
pub use sequence::{Convergent, Mode, SequenceError, SequenceFamily};

/// Monic polynomial with arbitrary-precision coefficients.
pub type Poly = MonicPoly<BigInt>;
/// Affine spectral shift `r -> a + b r` with arbitrary-precision parameters.
pub type Shift = AffineShift<BigInt>;
/// Dense arbitrary-precision integer matrix.
pub type Matrix = CompanionMatrix<BigInt>;
/// Arbitrary-precision state vector.
pub type Vector = StateVector<BigInt>;
/// Sequence family over arbitrary-precision integers.
pub type Family = SequenceFamily<BigInt>;
/// Exact ratio sample over arbitrary-precision integers.
pub type BigConvergent = Convergent<BigInt>;
/// Exact rational.
pub type Rational = BigRational;
/// Double-precision oracle root set.
pub type RootSet = ComplexRootSet<f64>;
