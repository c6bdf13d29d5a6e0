use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::rational::parse_signed;
use super::{Domain, Scalar, ScalarError};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

impl Scalar for Integer {
    fn supports(domain: &Domain) -> bool {
        *domain == Domain::Integers
    }

    fn zero_in(_: &Domain) -> Self {
        Zero::zero()
    }

    fn one_in(_: &Domain) -> Self {
        One::one()
    }

    fn from_i64_in(value: i64, _: &Domain) -> Self {
        value.into()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    /// Only `1` and `-1` are units of `Z`.
    fn inverse_in(&self, domain: &Domain) -> Result<Self, ScalarError> {
        if One::is_one(&self.abs()) {
            Ok(self.clone())
        } else {
            Err(ScalarError::NotAUnit(self.to_string(), *domain))
        }
    }

    fn parse_in(literal: &str, domain: &Domain) -> Result<Self, ScalarError> {
        parse_signed(literal)
            .ok_or_else(|| ScalarError::Parse { literal: literal.to_string(), domain: *domain })
    }

    fn sample_in<G: Rng + ?Sized>(rng: &mut G, _: &Domain, bound: u64) -> Self {
        let b = bound as i64;
        rng.gen_range(-b..=b).into()
    }
}
