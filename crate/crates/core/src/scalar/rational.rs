use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Domain, Scalar, ScalarError};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` in canonical form.
pub fn normalize_rational(num: BigInt, den: BigInt) -> Result<Rational, ScalarError> {
    if Zero::is_zero(&den) {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

impl Scalar for Rational {
    fn supports(domain: &Domain) -> bool {
        *domain == Domain::Rationals
    }

    fn zero_in(_: &Domain) -> Self {
        Zero::zero()
    }

    fn one_in(_: &Domain) -> Self {
        One::one()
    }

    fn from_i64_in(value: i64, _: &Domain) -> Self {
        BigRational::from_integer(value.into())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inverse_in(&self, domain: &Domain) -> Result<Self, ScalarError> {
        if Zero::is_zero(self) {
            Err(ScalarError::NotAUnit(self.to_string(), *domain))
        } else {
            Ok(self.recip())
        }
    }

    /// `-3`, `7/2`, `-4/6`; the denominator must be positive.
    fn parse_in(literal: &str, domain: &Domain) -> Result<Self, ScalarError> {
        let err = || ScalarError::Parse { literal: literal.to_string(), domain: *domain };
        let (num, den) = match literal.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (literal, None),
        };
        let num: BigInt = parse_signed(num).ok_or_else(err)?;
        let den: BigInt = match den {
            Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
                d.parse().map_err(|_| err())?
            }
            Some(_) => return Err(err()),
            None => BigInt::one(),
        };
        if den.is_negative() {
            return Err(err());
        }
        normalize_rational(num, den)
    }

    fn sample_in<G: Rng + ?Sized>(rng: &mut G, _: &Domain, bound: u64) -> Self {
        let b = bound as i64;
        BigRational::from_integer(rng.gen_range(-b..=b).into())
    }
}

pub(super) fn parse_signed(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        normalize_rational(n.into(), d.into()).unwrap()
    }

    #[test]
    fn normalization() {
        let half = r(2, 4);
        assert_eq!((half.numer().clone(), half.denom().clone()), (1.into(), 2.into()));
        let neg = r(3, -6);
        assert_eq!((neg.numer().clone(), neg.denom().clone()), ((-1).into(), 2.into()));
        let zero = r(0, 5);
        assert_eq!((zero.numer().clone(), zero.denom().clone()), (0.into(), 1.into()));
        assert_eq!(normalize_rational(1.into(), 0.into()), Err(ScalarError::ZeroDenominator));
    }

    #[test]
    fn literals() {
        let q = Domain::Rationals;
        assert_eq!(Rational::parse_in("-3", &q).unwrap(), r(-3, 1));
        assert_eq!(Rational::parse_in("-4/6", &q).unwrap(), r(-2, 3));
        assert!(Rational::parse_in("1/-2", &q).is_err());
        assert!(Rational::parse_in("1/0", &q).is_err());
        assert!(Rational::parse_in("+1", &q).is_err());
        assert!(Rational::parse_in("1.5", &q).is_err());
        assert_eq!(r(7, 2).to_string(), "7/2");
        assert_eq!(r(-4, 1).to_string(), "-4");
    }

    proptest! {
        #[test]
        fn add_then_subtract_is_exact(
            a in any::<i128>(), b in 1i128..i128::MAX,
            c in any::<i128>(), d in 1i128..i128::MAX,
        ) {
            let x = BigRational::new(a.into(), b.into());
            let y = BigRational::new(c.into(), d.into());
            prop_assert_eq!((x.clone() + &y) - &y, x);
        }

        #[test]
        fn reciprocal_is_involutive(a in any::<i64>(), b in 1i64..i64::MAX) {
            prop_assume!(a != 0);
            let x = r(a, b);
            let q = Domain::Rationals;
            prop_assert_eq!(x.inverse_in(&q).unwrap().inverse_in(&q).unwrap(), x);
        }
    }
}
