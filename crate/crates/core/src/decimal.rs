//! Decimal rendering of exact fractions with round-half-even.
//!
//! Functions take an unreduced `num / den` pair so the driver can compare
//! renderings of huge convergents without paying for a gcd each step.

use num_traits::Zero;

use crate::scalar::Int;

fn pow10<T: Int>(k: usize) -> T {
    let ten = T::ten();
    (0..k).fold(T::one(), |acc, _| acc * ten.clone())
}

/// `round(n / d)` for `n >= 0`, `d > 0`, ties to even.
fn round_half_even<T: Int>(n: &T, d: &T) -> T {
    let (q, r) = n.div_rem(d);
    let twice = r.clone() + r;
    if twice > *d || (twice == *d && q.is_odd()) {
        q + T::one()
    } else {
        q
    }
}

fn digit_count<T: Int>(n: &T) -> usize {
    n.to_string().trim_start_matches('-').len()
}

fn normalize_sign<T: Int>(num: &T, den: &T) -> (bool, T, T) {
    let negative = num.is_negative() != den.is_negative() && !num.is_zero();
    (negative, num.abs(), den.abs())
}

fn place_point(magnitude: String, places: usize, negative: bool) -> String {
    let mut s = if places == 0 {
        magnitude
    } else {
        let padded = format!("{magnitude:0>width$}", width = places + 1);
        let (int, frac) = padded.split_at(padded.len() - places);
        format!("{int}.{frac}")
    };
    if negative {
        s.insert(0, '-');
    }
    s
}

/// `num / den` rounded to `places` digits after the point. `None` if `den == 0`.
pub fn render_fixed<T: Int>(num: &T, den: &T, places: usize) -> Option<String> {
    if den.is_zero() {
        return None;
    }
    let (negative, n, d) = normalize_sign(num, den);
    let scaled = round_half_even(&(n * pow10::<T>(places)), &d);
    let negative = negative && !scaled.is_zero();
    Some(place_point(scaled.to_string(), places, negative))
}

/// Position of the leading decimal digit: `floor(log10 |n / d|)` for `n, d > 0`.
fn decimal_exponent<T: Int>(n: &T, d: &T) -> i64 {
    let int = n.clone() / d.clone();
    if !int.is_zero() {
        return digit_count(&int) as i64 - 1;
    }
    let mut k = 0i64;
    let mut scaled = n.clone();
    let ten = T::ten();
    while scaled < *d {
        scaled = scaled * ten.clone();
        k += 1;
    }
    -k
}

/// `num / den` rounded to `digits` significant digits (at least 1).
/// `None` if `den == 0`.
pub fn render_significant<T: Int>(num: &T, den: &T, digits: usize) -> Option<String> {
    if den.is_zero() {
        return None;
    }
    let digits = digits.max(1);
    if num.is_zero() {
        return render_fixed(num, den, digits - 1);
    }
    let (negative, n, d) = normalize_sign(num, den);
    let exp = decimal_exponent(&n, &d);
    let mut places = digits as i64 - 1 - exp;
    loop {
        let rounded = if places >= 0 {
            round_half_even(&(n.clone() * pow10::<T>(places as usize)), &d)
        } else {
            round_half_even(&n, &(d.clone() * pow10::<T>((-places) as usize)))
        };
        // 9.996 -> "10.00" gains a digit; drop one place and redo.
        if digit_count(&rounded) > digits {
            places -= 1;
            continue;
        }
        return Some(if places >= 0 {
            place_point(rounded.to_string(), places as usize, negative)
        } else {
            let mut s = (rounded * pow10::<T>((-places) as usize)).to_string();
            if negative {
                s.insert(0, '-');
            }
            s
        });
    }
}

/// Approximate `num / den` as `f64` without overflowing on huge operands.
pub fn ratio_to_f64(num: &num_bigint::BigInt, den: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    if den.is_zero() {
        return f64::NAN;
    }
    let shift_of = |x: &num_bigint::BigInt| x.bits().saturating_sub(60);
    let (sn, sd) = (shift_of(num), shift_of(den));
    let n = (num >> sn).to_f64().unwrap_or(f64::NAN);
    let d = (den >> sd).to_f64().unwrap_or(f64::NAN);
    let exp = sn as f64 - sd as f64;
    (n / d) * exp.exp2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn fixed_rounding() {
        assert_eq!(render_fixed(&169i64, &-70, 4).unwrap(), "-2.4143");
        assert_eq!(render_fixed(&70i64, &169, 5).unwrap(), "0.41420");
        assert_eq!(render_fixed(&1i64, &0, 3), None);
        assert_eq!(render_fixed(&-2i64, &1, 0).unwrap(), "-2");
        assert_eq!(render_fixed(&0i64, &5, 2).unwrap(), "0.00");
        assert_eq!(render_fixed(&-1i64, &1000, 2).unwrap(), "0.00");
        assert_eq!(render_fixed(&1i64, &40, 3).unwrap(), "0.025");
    }

    #[test]
    fn half_even() {
        // 0.125 -> 0.12, 0.375 -> 0.38, 2.5 -> 2, 3.5 -> 4
        assert_eq!(render_fixed(&1i64, &8, 2).unwrap(), "0.12");
        assert_eq!(render_fixed(&3i64, &8, 2).unwrap(), "0.38");
        assert_eq!(render_fixed(&5i64, &2, 0).unwrap(), "2");
        assert_eq!(render_fixed(&7i64, &2, 0).unwrap(), "4");
        assert_eq!(render_fixed(&-5i64, &2, 0).unwrap(), "-2");
    }

    #[test]
    fn significant() {
        assert_eq!(render_significant(&169i64, &-70, 5).unwrap(), "-2.4143");
        assert_eq!(render_significant(&70i64, &169, 5).unwrap(), "0.41420");
        assert_eq!(
            render_significant(&536171481i64, &425559582, 7).unwrap(),
            "1.259921"
        );
        assert_eq!(render_significant(&1i64, &3000, 2).unwrap(), "0.00033");
        assert_eq!(render_significant(&123456i64, &1, 2).unwrap(), "120000");
        assert_eq!(render_significant(&99996i64, &10000, 4).unwrap(), "10.00");
        assert_eq!(render_significant(&0i64, &7, 3).unwrap(), "0.00");
        assert_eq!(render_significant(&5i64, &1, 1).unwrap(), "5");
    }

    #[test]
    fn bigint_to_f64() {
        let big = BigInt::from(3) << 5000u32;
        let den = BigInt::from(2) << 5000u32;
        assert!((ratio_to_f64(&big, &den) - 1.5).abs() < 1e-15);
        assert!((ratio_to_f64(&BigInt::from(-1), &BigInt::from(3)) + 1.0 / 3.0).abs() < 1e-15);
        let tiny = ratio_to_f64(&BigInt::from(1), &(BigInt::from(1) << 100u32));
        assert_eq!(tiny, 2f64.powi(-100));
    }
}
