//! Arbitrary-precision rational scalars and their decimal-string encoding.
//!
//! All numeric payloads in serialized documents are decimal strings so that
//! reports never depend on a machine word size.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used everywhere in the crate.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `n/d` in lowest terms.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Render a rational as `"n"` or `"n/d"` with a positive denominator.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"n"` or `"n/d"`; the denominator must be nonzero.
pub fn rat_from_string(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
    }
}

/// Least common multiple of the coefficient denominators, as a positive integer.
pub fn denominator_lcm<'a>(coeffs: impl Iterator<Item = &'a Rat>) -> BigInt {
    let mut acc = BigInt::one();
    for c in coeffs {
        let d = c.denom().abs();
        let g = num_integer::Integer::gcd(&acc, &d);
        acc = acc / g * d;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for s in ["0", "5", "-7", "3/4", "-22/7"] {
            let r = rat_from_string(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert_eq!(rat_to_string(&ratio(2, 4)), "1/2");
        assert_eq!(rat_to_string(&ratio(3, -4)), "-3/4");
        assert!(rat_from_string("1/0").is_none());
    }

    #[test]
    fn lcm_of_denominators() {
        let xs = [ratio(1, 2), ratio(1, 3), rat(4)];
        assert_eq!(denominator_lcm(xs.iter()), BigInt::from(6));
    }
}
