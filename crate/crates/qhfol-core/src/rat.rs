//! Arbitrary-precision rationals and the handful of exact predicates the
//! kernel needs on top of `num-rational` (squareness, exact square roots,
//! float conversion).

use alloc::string::ToString;
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational scalar. Always stored reduced with positive denominator
/// (enforced by `num_rational`).
pub type Rat = num_rational::BigRational;

/// Shorthand for small integer constants.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` from small integers. Panics on `q = 0`.
pub fn rat_pq(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Exact integer square root if `n` is a perfect square.
fn bigint_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(BigInt::zero());
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a rational, when it exists in ℚ (nonnegative input
/// with perfect-square numerator and denominator). Returns the nonnegative
/// root.
pub fn rat_sqrt_exact(x: &Rat) -> Option<Rat> {
    let p = bigint_sqrt_exact(x.numer())?;
    let q = bigint_sqrt_exact(x.denom())?;
    Some(Rat::new(p, q))
}

/// Is `x` the square of a rational?
pub fn rat_is_square(x: &Rat) -> bool {
    rat_sqrt_exact(x).is_some()
}

/// Lossy conversion for the numeric phase. BigRational::to_f64 handles
/// magnitudes beyond f64 range by saturating; our desk-scale values never
/// reach that.
pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fallback via string round-trip only if to_f64 ever fails.
        x.to_string().parse().unwrap_or(f64::NAN)
    })
}

/// Parse a (signed) rational literal `p` or `p/q`.
pub fn rat_parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(p))
    }
}

/// Format a rational as `p` or `p/q` (reduced form).
pub fn rat_display(x: &Rat) -> alloc::string::String {
    use alloc::format;
    if x.denom() == &BigInt::from(1) {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sign as -1, 0, 1.
pub fn rat_sign(x: &Rat) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(rat_sqrt_exact(&rat_pq(9, 4)), Some(rat_pq(3, 2)));
        assert_eq!(rat_sqrt_exact(&rat_i(0)), Some(rat_i(0)));
        assert!(rat_sqrt_exact(&rat_i(2)).is_none());
        assert!(rat_sqrt_exact(&rat_i(-4)).is_none());
        assert!(rat_is_square(&rat_pq(49, 64)));
        assert!(!rat_is_square(&rat_pq(1, 3)));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["3", "-7/2", "0", "22/7"] {
            let r = rat_parse(s).unwrap();
            assert_eq!(rat_display(&r), s);
        }
        assert_eq!(rat_parse(" 4/6 ").unwrap(), rat_pq(2, 3));
        assert!(rat_parse("1/0").is_none());
    }
}
