//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational. Always kept in lowest terms with a
/// positive denominator by `num-rational`.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. A zero denominator is rejected.
pub fn parse(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Serializes as `"p/q"`, or `"p"` when the denominator is one.
pub fn format(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn to_f64(value: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn sign(value: &Scalar) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse("4/6"), Some(frac(2, 3)));
        assert_eq!(parse("-3"), Some(int(-3)));
        assert_eq!(parse(" 1 / -2 "), Some(frac(-1, 2)));
        let v = parse("6/-4").unwrap();
        assert!(v.denom().is_positive());
        assert_eq!(format(&v), "-3/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
        assert_eq!(parse("1.5"), None);
        assert_eq!(parse(""), None);
    }

    #[test]
    fn format_integers_without_denominator() {
        assert_eq!(format(&int(7)), "7");
        assert_eq!(format(&frac(-1, 3)), "-1/3");
    }
}
