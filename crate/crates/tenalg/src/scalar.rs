//! Exact rational scalars.
//!
//! Every coefficient in the kit is a `Scalar`: an arbitrary-precision
//! rational kept reduced with a positive denominator. `BigRational`
//! maintains exactly that invariant, so it is used directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// Scalar from an integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar `n/d`. Panics if `d` is zero.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Parses `p` or `p/q` with an optional leading minus.
pub fn parse(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format(s: &Scalar) -> String {
    s.to_string()
}

/// `|s|` as canonical text; used by displays that print the sign separately.
pub fn format_abs(s: &Scalar) -> String {
    s.abs().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let s = frac(6, -4);
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "5", "-5", "1/2", "-3/7", "10/4"] {
            let s = parse(text).unwrap();
            let back = parse(&format(&s)).unwrap();
            assert_eq!(s, back);
        }
        assert_eq!(format(&parse("10/4").unwrap()), "5/2");
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
        assert!(parse("").is_none());
    }

    #[test]
    fn factorial_and_binomial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..=50, 1i64..=20).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + Scalar::zero(), a.clone());
            prop_assert_eq!(&a * Scalar::one(), a.clone());
            prop_assert_eq!(&a + (-&a), Scalar::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * a.recip(), Scalar::one());
            }
        }
    }
}
