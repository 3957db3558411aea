//! Exact rational arithmetic helpers: parsing, certified enclosures of
//! `exp`, and the interval type used to evaluate concatenation bounds.
//!
//! Every quantity that enters a certificate here is a `BigRational`.
//! Comparisons against transcendental thresholds of the form `e^x`
//! (x rational, nonzero) are decided by adaptive Taylor enclosures;
//! they always terminate because `e^x` is irrational for rational
//! nonzero `x`, so a rational can never sit exactly on the boundary.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Parse a real given as a decimal string ("0.3", "-1.25e-2") or a
/// rational string ("1/3", "-7/10").
pub fn parse_real(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".to_string());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad rational numerator in {s:?}"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad rational denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(n, d));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<BigRational, String> {
    let (mantissa, exp10) = match s.to_ascii_lowercase().split_once('e') {
        Some((m, e)) => {
            let e: i64 = e.parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            (m.to_string(), e)
        }
        None => (s.to_string(), 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i.to_string(), f.to_string()),
        None => (mantissa, String::new()),
    };
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(format!("no digits in {s:?}"));
    }
    let n: BigInt = digits
        .parse()
        .map_err(|_| format!("bad decimal digits in {s:?}"))?;
    let shift = frac_part.len() as i64 - exp10;
    let ten = BigInt::from(10);
    let val = if shift >= 0 {
        BigRational::new(n, ten.pow(shift as u32))
    } else {
        BigRational::from_integer(n * ten.pow((-shift) as u32))
    };
    Ok(val)
}

/// Exact conversion of a finite `f64` to a rational (every finite
/// binary64 value is a dyadic rational).
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    if x == 0.0 {
        return Some(BigRational::zero());
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exponent = ((bits >> 52) & 0x7ff) as i64;
    let fraction = bits & 0x000f_ffff_ffff_ffff;
    let (mantissa, exp2) = if exponent == 0 {
        (fraction, -1074i64)
    } else {
        (fraction | 0x0010_0000_0000_0000, exponent - 1075)
    };
    let m = BigInt::from(mantissa) * BigInt::from(sign);
    let two = BigInt::from(2);
    Some(if exp2 >= 0 {
        BigRational::from_integer(m * two.pow(exp2 as u32))
    } else {
        BigRational::new(m, two.pow((-exp2) as u32))
    })
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back through a reduced approximation when the big ints
        // exceed ToPrimitive's range.
        let num = x.numer().to_f64().unwrap_or(f64::MAX);
        let den = x.denom().to_f64().unwrap_or(f64::MAX);
        num / den
    })
}

/// Render a rational as `"p/q"` (or `"p"` for integers).
pub fn rational_to_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn half_pow(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2).pow(k))
}

/// Certified enclosure of `exp(x)`: returns `(lo, hi)` with
/// `lo <= exp(x) <= hi`. `terms` controls the Taylor depth (>= 8).
pub fn exp_interval(x: &BigRational, terms: u32) -> (BigRational, BigRational) {
    if x.is_zero() {
        return (BigRational::one(), BigRational::one());
    }
    if x.is_negative() {
        let (lo, hi) = exp_interval(&-x.clone(), terms);
        return (hi.recip(), lo.recip());
    }
    // Halve the argument until it is <= 1, then square back.
    let mut halvings = 0u32;
    while x * half_pow(halvings) > BigRational::one() {
        halvings += 1;
        assert!(halvings <= 64, "exp argument out of supported range");
    }
    let y = x * half_pow(halvings);
    let k_max = terms.max(8);
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for k in 0..k_max {
        sum += &term;
        term = term * &y / BigRational::from_integer(BigInt::from(k + 1));
    }
    // term now holds y^K / K!; the tail is bounded by term * (K+1)/(K+1-y)
    // since y <= 1 < K+1.
    let kp1 = BigRational::from_integer(BigInt::from(k_max + 1));
    let tail = term * &kp1 / (&kp1 - &y);
    let mut lo = sum.clone();
    let mut hi = sum + tail;
    for _ in 0..halvings {
        lo = &lo * &lo;
        hi = &hi * &hi;
    }
    (lo, hi)
}

/// Decide the ordering of a rational `y` against `exp(x)` exactly.
pub fn cmp_with_exp(y: &BigRational, x: &BigRational) -> Ordering {
    if !y.is_positive() {
        return Ordering::Less;
    }
    if x.is_zero() {
        return y.cmp(&BigRational::one());
    }
    let mut terms = 16u32;
    loop {
        let (lo, hi) = exp_interval(x, terms);
        if *y < lo {
            return Ordering::Less;
        }
        if *y > hi {
            return Ordering::Greater;
        }
        terms *= 2;
        // e^x is irrational for rational x != 0, so the enclosure
        // eventually separates y from it.
        assert!(terms <= 1 << 16, "exp comparison failed to separate");
    }
}

/// Certified test for `ratio ∈ (e^{-eps}, e^{eps})` with `eps > 0`.
pub fn ratio_within_exp_band(ratio: &BigRational, eps: &BigRational) -> bool {
    assert!(eps.is_positive(), "band width must be positive");
    if !ratio.is_positive() {
        return false;
    }
    if ratio.is_one() {
        return true;
    }
    // ratio < e^eps and 1/ratio < e^eps.
    cmp_with_exp(ratio, eps) == Ordering::Less
        && cmp_with_exp(&ratio.recip(), eps) == Ordering::Less
}

/// A closed rational interval enclosing a nonnegative real quantity.
#[derive(Clone, Debug)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn exp_of(x: &BigRational, terms: u32) -> Self {
        let (lo, hi) = exp_interval(x, terms);
        RatInterval { lo, hi }
    }

    /// exp(x) - 1 for x >= 0 (nonnegative by construction).
    pub fn expm1_of(x: &BigRational, terms: u32) -> Self {
        assert!(!x.is_negative());
        let (lo, hi) = exp_interval(x, terms);
        RatInterval {
            lo: (lo - BigRational::one()).max(BigRational::zero()),
            hi: hi - BigRational::one(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    /// Product of nonnegative intervals.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(!self.lo.is_negative() && !other.lo.is_negative());
        RatInterval { lo: &self.lo * &other.lo, hi: &self.hi * &other.hi }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        debug_assert!(!c.is_negative());
        RatInterval { lo: &self.lo * c, hi: &self.hi * c }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_decimals_and_rationals() {
        assert_eq!(parse_real("0.3").unwrap(), rat(3, 10));
        assert_eq!(parse_real("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_real("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_real("2").unwrap(), rat(2, 1));
        assert_eq!(parse_real("1.25e-2").unwrap(), rat(1, 80));
        assert_eq!(parse_real("-7/10").unwrap(), rat(-7, 10));
        assert!(parse_real("1/0").is_err());
        assert!(parse_real("abc").is_err());
        assert!(parse_real("").is_err());
    }

    #[test]
    fn f64_round_trips_exactly() {
        for &x in &[0.0, 1.0, -0.5, 0.1, 1e-6, 123.456, -3.25e8] {
            let r = rational_from_f64(x).unwrap();
            assert_eq!(to_f64(&r), x);
        }
        assert!(rational_from_f64(f64::INFINITY).is_none());
    }

    #[test]
    fn exp_enclosure_brackets_true_value() {
        for &(n, d) in &[(1i64, 1i64), (1, 2), (3, 2), (5, 1), (-1, 3), (-2, 1)] {
            let x = rat(n, d);
            let (lo, hi) = exp_interval(&x, 32);
            let truth = (n as f64 / d as f64).exp();
            assert!(to_f64(&lo) <= truth && truth <= to_f64(&hi));
            assert!(to_f64(&hi) - to_f64(&lo) < 1e-9 * truth.max(1.0));
        }
    }

    #[test]
    fn band_membership_matches_logs() {
        // 5/9 has |ln| ≈ 0.5878: outside the 0.5 band, inside the 0.6 band.
        let ratio = rat(5, 9);
        assert!(!ratio_within_exp_band(&ratio, &rat(1, 2)));
        assert!(ratio_within_exp_band(&ratio, &rat(3, 5)));
        assert!(ratio_within_exp_band(&BigRational::one(), &rat(1, 1000000)));
        assert!(!ratio_within_exp_band(&rat(9, 5), &rat(1, 2)));
    }

    #[test]
    fn band_decides_tight_cases() {
        // ratio extremely close to e^{0.1} on both sides.
        let eps = rat(1, 10);
        let e01 = 0.1f64.exp();
        let just_below = BigRational::from_f64(e01 - 1e-13).unwrap();
        let just_above = BigRational::from_f64(e01 + 1e-13).unwrap();
        assert!(ratio_within_exp_band(&just_below, &eps));
        assert!(!ratio_within_exp_band(&just_above, &eps));
    }

    #[test]
    fn interval_ops_stay_ordered() {
        let a = RatInterval::exp_of(&rat(1, 10), 24);
        let b = RatInterval::expm1_of(&rat(1, 5), 24);
        let c = a.mul(&b).add(&RatInterval::point(rat(1, 7))).scale(&rat(3, 2));
        assert!(c.lo <= c.hi);
        let truth = 1.5 * (0.1f64.exp() * (0.2f64.exp() - 1.0) + 1.0 / 7.0);
        assert!(to_f64(&c.lo) <= truth && truth <= to_f64(&c.hi));
    }
}
