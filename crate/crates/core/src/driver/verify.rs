//! Exact checks that a rational estimate sits on a real root.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::MonicPoly;

fn pow10(k: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(10).pow(k as u32))
}

/// `|p(x)| < 10^(-digits/2) * sum |a_k| |x|^(m-k)`, evaluated exactly.
pub fn relative_residual_ok(p: &MonicPoly<BigInt>, x: &BigRational, digits: usize) -> bool {
    let residual = p.eval(x).abs();
    residual.is_zero() || residual * pow10(digits / 2) < p.eval_abs_scale(x)
}

/// Whether `p` changes sign across `[x - δ, x + δ]` for some
/// `δ = max(1, |x|) · 10^(-k)`, `k = 1, 2, ..., digits - 1`.
pub fn has_sign_change_near(p: &MonicPoly<BigInt>, x: &BigRational, digits: usize) -> bool {
    let base = x.abs().max(BigRational::one());
    (1..digits.max(2)).any(|k| {
        let delta = &base / pow10(k);
        let lo = p.eval(&(x - &delta));
        let hi = p.eval(&(x + &delta));
        (lo.is_negative() && hi.is_positive()) || (lo.is_positive() && hi.is_negative())
    })
}

/// A candidate is accepted when it is an exact root, or when its relative
/// residual is small and `p` changes sign in a bracket around it.
pub fn verify_root(p: &MonicPoly<BigInt>, x: &BigRational, digits: usize) -> bool {
    p.eval(x).is_zero()
        || (relative_residual_ok(p, x, digits) && has_sign_change_near(p, x, digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> MonicPoly<BigInt> {
        let big: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        MonicPoly::from_coefficients(&big, true).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt2_convergent_passes() {
        // 665857/470832 approximates sqrt 2 to about 12 digits.
        let p = poly(&[1, 0, -2]);
        let x = rat(665_857, 470_832);
        assert!(relative_residual_ok(&p, &x, 12));
        assert!(has_sign_change_near(&p, &x, 12));
        assert!(verify_root(&p, &x, 12));
    }

    #[test]
    fn complex_pair_rejected() {
        // x^2 + 1e-8 has no real roots but tiny values near 0.
        let p = MonicPoly::new(vec![BigInt::zero(), BigInt::one()]).unwrap();
        assert!(!verify_root(&p, &rat(0, 1), 12));
        let p = poly(&[1, 0, 1]);
        assert!(!verify_root(&p, &rat(0, 1), 12));
    }

    #[test]
    fn far_candidate_rejected() {
        let p = poly(&[1, 0, -2]);
        assert!(!relative_residual_ok(&p, &rat(141, 100), 12));
        assert!(!verify_root(&p, &rat(141, 100), 12));
    }

    #[test]
    fn exact_root_accepted() {
        assert!(verify_root(&poly(&[1, -3, 2]), &rat(2, 1), 12));
    }
}
