//! Exact scalar kernels.
//!
//! Every scalar type implements [`Scalar`], which is the only bound the
//! matrix layer places on its entries. Elimination checks at runtime that
//! the domain is a field.

mod integer;
mod modular;
mod rational;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

pub use integer::Integer;
pub use modular::{is_prime, ModularInt, PrimeFieldElem};
pub(crate) use modular::radical_split as modular_radical_split;
pub use rational::{normalize_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} is not a unit in {1}")]
    NotAUnit(String, Domain),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("cannot parse scalar literal {literal:?} in {domain}")]
    Parse { literal: String, domain: Domain },
    #[error("scalar type does not live in {0}")]
    WrongDomain(Domain),
}

/// Which exact scalar structure is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Rationals,
    PrimeField(u64),
    Modular(u64),
    Integers,
}

impl Domain {
    /// Validated `GF(p)`; the primality test is deterministic for all `u64`.
    pub fn prime_field(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(Domain::PrimeField(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn modular(n: u64) -> Result<Self, ScalarError> {
        if n < 2 {
            Err(ScalarError::BadModulus(n))
        } else {
            Ok(Domain::Modular(n))
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Domain::Rationals | Domain::PrimeField(_))
    }

    pub fn modulus(&self) -> Option<u64> {
        match *self {
            Domain::PrimeField(p) => Some(p),
            Domain::Modular(n) => Some(n),
            _ => None,
        }
    }

    /// Characteristic of the domain (0 for `Q` and `Z`).
    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    /// Header line of the matrix text format: `Q`, `GF <p>`, `Zn <n>` or `Z`.
    pub fn file_tag(&self) -> String {
        match self {
            Domain::Rationals => "Q".into(),
            Domain::PrimeField(p) => format!("GF {p}"),
            Domain::Modular(n) => format!("Zn {n}"),
            Domain::Integers => "Z".into(),
        }
    }

    /// Parses a matrix-file header line.
    pub fn parse_file_tag(line: &str) -> Result<Self, DomainTagError> {
        let mut words = line.split_whitespace();
        let head = words.next().unwrap_or("");
        let arg = words.next();
        if words.next().is_some() {
            return Err(DomainTagError(line.to_string()));
        }
        Self::from_parts(head, arg, line)
    }

    fn from_parts(head: &str, arg: Option<&str>, original: &str) -> Result<Self, DomainTagError> {
        let bad = || DomainTagError(original.to_string());
        let modulus = || -> Result<u64, DomainTagError> {
            arg.ok_or_else(bad)?.parse::<u64>().map_err(|_| bad())
        };
        match (head, arg) {
            ("Q", None) => Ok(Domain::Rationals),
            ("Z", None) => Ok(Domain::Integers),
            ("GF", Some(_)) => Domain::prime_field(modulus()?).map_err(|_| bad()),
            ("Zn", Some(_)) => Domain::modular(modulus()?).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid domain tag {0:?}")]
pub struct DomainTagError(pub String);

/// Command-line tags: `Q`, `GF:<p>`, `Zn:<n>`, `Z`.
impl FromStr for Domain {
    type Err = DomainTagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        Self::from_parts(head, arg, s)
    }
}

impl Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => f.write_str("Q"),
            Domain::PrimeField(p) => write!(f, "GF:{p}"),
            Domain::Modular(n) => write!(f, "Zn:{n}"),
            Domain::Integers => f.write_str("Z"),
        }
    }
}

/// An exact scalar. Arithmetic never rounds; equality is structural on
/// canonical representatives.
pub trait Scalar:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Whether values of this type can represent elements of `domain`.
    fn supports(domain: &Domain) -> bool;

    fn zero_in(domain: &Domain) -> Self;

    fn one_in(domain: &Domain) -> Self;

    fn from_i64_in(value: i64, domain: &Domain) -> Self;

    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool;

    /// Multiplicative inverse in `domain`, or `NotAUnit`.
    fn inverse_in(&self, domain: &Domain) -> Result<Self, ScalarError>;

    /// Parses one literal of the matrix text format.
    fn parse_in(literal: &str, domain: &Domain) -> Result<Self, ScalarError>;

    /// Uniform element for finite domains; uniform integer in
    /// `[-bound, bound]` for `Q` and `Z`.
    fn sample_in<G: Rng + ?Sized>(rng: &mut G, domain: &Domain, bound: u64) -> Self;

    /// Canonical representative in `[0, n)` for residue-class scalars.
    fn residue(&self) -> Option<u64> {
        None
    }
}

/// Inverts `x` in `d`.
pub fn invert_scalar<T: Scalar>(x: &T, d: &Domain) -> Result<T, ScalarError> {
    x.inverse_in(d)
}

/// True iff some power of `x` vanishes in `d`.
///
/// In `Z_n` this holds iff every prime factor of `n` divides `x`, decided
/// by stripping common factors with repeated gcds. In fields and in `Z`
/// only zero is nilpotent.
pub fn is_nilpotent_scalar<T: Scalar>(x: &T, d: &Domain) -> bool {
    if x.is_zero() {
        return true;
    }
    match d {
        Domain::Modular(n) => {
            let v = x.residue().expect("modular scalar");
            modular_radical_split(v, *n).1 == 1
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_tags_round_trip() {
        for tag in ["Q", "GF:7", "Zn:12", "Z"] {
            let d: Domain = tag.parse().unwrap();
            assert_eq!(d.to_string(), tag);
            assert_eq!(Domain::parse_file_tag(&d.file_tag()).unwrap(), d);
        }
        assert!("GF:12".parse::<Domain>().is_err());
        assert!("Zn:1".parse::<Domain>().is_err());
        assert!("GF".parse::<Domain>().is_err());
        assert!(Domain::parse_file_tag("Q 3").is_err());
    }

    #[test]
    fn invert_examples() {
        let gf7 = Domain::PrimeField(7);
        let two = PrimeFieldElem::from_i64_in(2, &gf7);
        assert_eq!(invert_scalar(&two, &gf7).unwrap(), PrimeFieldElem::from_i64_in(4, &gf7));

        let q = Domain::Rationals;
        let x = normalize_rational(3.into(), 4.into()).unwrap();
        assert_eq!(invert_scalar(&x, &q).unwrap(), normalize_rational(4.into(), 3.into()).unwrap());

        let z12 = Domain::Modular(12);
        let two = ModularInt::from_i64_in(2, &z12);
        assert!(matches!(invert_scalar(&two, &z12), Err(ScalarError::NotAUnit(..))));

        let z = Domain::Integers;
        assert_eq!(invert_scalar(&Integer::from(-1), &z).unwrap(), Integer::from(-1));
        assert!(invert_scalar(&Integer::from(2), &z).is_err());
    }

    #[test]
    fn nilpotent_examples() {
        let z8 = Domain::Modular(8);
        assert!(is_nilpotent_scalar(&ModularInt::from_i64_in(2, &z8), &z8));
        let z7 = Domain::Modular(7);
        assert!(!is_nilpotent_scalar(&ModularInt::from_i64_in(2, &z7), &z7));
        let z12 = Domain::Modular(12);
        assert!(is_nilpotent_scalar(&ModularInt::from_i64_in(6, &z12), &z12));
        assert!(!is_nilpotent_scalar(&ModularInt::from_i64_in(2, &z12), &z12));
        let gf = Domain::PrimeField(5);
        assert!(!is_nilpotent_scalar(&PrimeFieldElem::from_i64_in(3, &gf), &gf));
        assert!(is_nilpotent_scalar(&Integer::from(0), &Domain::Integers));
        assert!(!is_nilpotent_scalar(&Integer::from(3), &Domain::Integers));
    }

    #[test]
    fn nilpotency_agrees_with_powering() {
        for n in 2u64..=60 {
            let d = Domain::Modular(n);
            let bound = 64 - (n - 1).leading_zeros();
            for v in 0..n {
                let x = ModularInt::from_i64_in(v as i64, &d);
                let mut acc = x;
                for _ in 1..bound.max(1) {
                    acc = acc * x;
                }
                assert_eq!(is_nilpotent_scalar(&x, &d), acc.is_zero(), "n={n} x={v}");
            }
        }
    }
}
