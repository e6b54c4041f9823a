//! Floating-point reference roots (Durand-Kerner), for tests and benchmarks.
//!
//! Nothing in the integer pipeline calls into this module.

use num_complex::Complex;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::MonicPoly;
use crate::scalar::{Int, Real};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("non-finite value during iteration")]
    NonFiniteIntermediate,
    #[error("coefficient does not fit the floating-point type")]
    CoefficientOverflow,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexRootSet<F> {
    pub roots: Vec<Complex<F>>,
    /// `|p(root)|` for each root.
    pub residuals: Vec<F>,
    pub converged: bool,
    pub iterations: usize,
}

fn coefficients<T: Int, F: Real>(p: &MonicPoly<T>) -> Result<Vec<F>, OracleError> {
    p.full_coeffs()
        .iter()
        .map(|c| {
            c.to_f64()
                .and_then(F::from_f64)
                .filter(|v| v.is_finite())
                .ok_or(OracleError::CoefficientOverflow)
        })
        .collect()
}

fn horner<F: Real>(coeffs: &[F], z: Complex<F>) -> Complex<F> {
    coeffs.iter().fold(Complex::zero(), |acc, &c| acc * z + c)
}

fn abs_scale<F: Real>(coeffs: &[F], z: Complex<F>) -> F {
    let r = z.norm();
    coeffs.iter().fold(F::zero(), |acc, &c| acc * r + c.abs())
}

fn iterate<F: Real>(
    coeffs: &[F],
    tol: F,
    max_iter: usize,
    phase: F,
) -> Result<ComplexRootSet<F>, OracleError> {
    let m = coeffs.len() - 1;
    let radius = coeffs[1..]
        .iter()
        .fold(F::zero(), |acc, c| acc.max(c.abs()))
        + F::one();
    let tau = F::TAU();
    let mut z: Vec<Complex<F>> = (0..m)
        .map(|k| {
            let k = F::from_usize(k).expect("small");
            let m = F::from_usize(m).expect("small");
            Complex::from_polar(radius, tau * k / m + phase)
        })
        .collect();
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        iterations += 1;
        let mut largest_step = F::zero();
        for i in 0..m {
            let mut denom = Complex::new(F::one(), F::zero());
            for (k, zk) in z.iter().enumerate() {
                if k != i {
                    denom = denom * (z[i] - zk);
                }
            }
            let step = horner(coeffs, z[i]) / denom;
            if !step.re.is_finite() || !step.im.is_finite() {
                return Err(OracleError::NonFiniteIntermediate);
            }
            z[i] = z[i] - step;
            largest_step = largest_step.max(step.norm() / z[i].norm().max(F::one()));
        }
        let residual_ok = z
            .iter()
            .all(|&zi| horner(coeffs, zi).norm() <= tol * abs_scale(coeffs, zi));
        if residual_ok || largest_step <= F::epsilon() {
            converged = true;
            break;
        }
    }
    let residuals = z.iter().map(|&zi| horner(coeffs, zi).norm()).collect();
    Ok(ComplexRootSet {
        roots: z,
        residuals,
        converged,
        iterations,
    })
}

/// All `m` roots of `p`, refined simultaneously.
///
/// Starts on the circle of radius `1 + max |a_k|` at angles offset from the
/// real axis. Convergence means every root has relative residual
/// `|p(z)| / sum |a_k| |z|^(m-k)` at most `tol`. On a non-finite step the
/// iteration restarts once from rotated guesses.
pub fn durand_kerner<T: Int, F: Real>(
    p: &MonicPoly<T>,
    tol: F,
    max_iter: usize,
) -> Result<ComplexRootSet<F>, OracleError> {
    let coeffs = coefficients::<T, F>(p)?;
    let first = F::from_f64(0.4).expect("small");
    match iterate(&coeffs, tol, max_iter, first) {
        Err(OracleError::NonFiniteIntermediate) => {
            iterate(&coeffs, tol, max_iter, F::from_f64(0.9).expect("small"))
        }
        other => other,
    }
}

/// Newton refinement of one (possibly complex) root in floating point.
/// Returns the refined root and the number of steps taken.
pub fn newton_polish<T: Int, F: Real>(
    p: &MonicPoly<T>,
    start: Complex<F>,
    rel_tol: F,
    max_iter: usize,
) -> Result<(Complex<F>, usize), OracleError> {
    let coeffs = coefficients::<T, F>(p)?;
    let m = coeffs.len() - 1;
    let deriv: Vec<F> = coeffs[..m]
        .iter()
        .enumerate()
        .map(|(k, &c)| c * F::from_usize(m - k).expect("small"))
        .collect();
    let mut z = start;
    for it in 0..max_iter {
        let d = horner(&deriv, z);
        if d.is_zero() {
            return Ok((z, it));
        }
        let step = horner(&coeffs, z) / d;
        if !step.re.is_finite() || !step.im.is_finite() {
            return Err(OracleError::NonFiniteIntermediate);
        }
        z = z - step;
        if step.norm() <= rel_tol * z.norm().max(F::one()) {
            return Ok((z, it + 1));
        }
    }
    Ok((z, max_iter))
}

impl<F: Real> ComplexRootSet<F> {
    /// `|r_1| / |r_2|` for the two largest moduli; infinite for degree 1.
    pub fn dominance_gap(&self) -> F {
        let mut moduli: Vec<F> = self.roots.iter().map(|z| z.norm()).collect();
        moduli.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        match moduli.as_slice() {
            [_] | [] => F::infinity(),
            [a, b, ..] => *a / *b,
        }
    }

    /// Root of largest modulus.
    pub fn dominant(&self) -> Option<Complex<F>> {
        self.roots.iter().copied().max_by(|a, b| {
            a.norm()
                .partial_cmp(&b.norm())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    }

    /// Real parts of roots with `|im| <= tol * max(1, |z|)`, ascending.
    pub fn real_roots(&self, tol: F) -> Vec<F> {
        let mut out: Vec<F> = self
            .roots
            .iter()
            .filter(|z| z.im.abs() <= tol * z.norm().max(F::one()))
            .map(|z| z.re)
            .collect();
        out.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> MonicPoly<i64> {
        MonicPoly::from_coefficients(c, true).unwrap()
    }

    #[test]
    fn quadratic() {
        let rs = durand_kerner::<i64, f64>(&poly(&[1, 2, -1]), 1e-14, 500).unwrap();
        assert!(rs.converged);
        let real = rs.real_roots(1e-9);
        assert_eq!(real.len(), 2);
        assert!((real[0] + 1.0 + 2f64.sqrt()).abs() < 1e-12);
        assert!((real[1] + 1.0 - 2f64.sqrt()).abs() < 1e-12);
        // gap = (1 + √2) / (√2 - 1) = 3 + 2√2
        assert!((rs.dominance_gap() - (3.0 + 2.0 * 2f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn cube_root_of_two() {
        let rs = durand_kerner::<i64, f64>(&poly(&[1, 0, 0, -2]), 1e-14, 500).unwrap();
        assert!(rs.converged);
        let real = rs.real_roots(1e-9);
        assert_eq!(real.len(), 1);
        assert!((real[0] - 1.259_921_049_894_873).abs() < 1e-12);
        assert!((rs.dominance_gap() - 1.0).abs() < 1e-10);
        let complex: Vec<_> = rs.roots.iter().filter(|z| z.im.abs() > 1e-6).collect();
        assert_eq!(complex.len(), 2);
        assert!((complex[0].im + complex[1].im).abs() < 1e-10);
    }

    #[test]
    fn linear() {
        let rs = durand_kerner::<i64, f64>(&poly(&[1, -5]), 1e-14, 100).unwrap();
        assert!((rs.roots[0].re - 5.0).abs() < 1e-12);
        assert!(rs.dominance_gap().is_infinite());
    }

    #[test]
    fn single_precision() {
        let rs = durand_kerner::<i64, f32>(&poly(&[1, -3, 2]), 1e-5, 500).unwrap();
        let real = rs.real_roots(1e-3);
        assert!((real[0] - 1.0).abs() < 1e-4 && (real[1] - 2.0).abs() < 1e-4);
    }

    #[test]
    fn newton_refines() {
        let p = poly(&[1, 0, -2]);
        let (z, steps) = newton_polish(&p, Complex::new(1.4f64, 0.0), 1e-15, 50).unwrap();
        assert!((z.re - 2f64.sqrt()).abs() < 1e-15);
        assert!(steps > 0);
    }
}
