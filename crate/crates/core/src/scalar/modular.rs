use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use rand::Rng;

use super::{Domain, Scalar, ScalarError};

/// Residue class in `Z_n` for any modulus `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModularInt {
    value: u64,
    modulus: u64,
}

impl ModularInt {
    pub fn new(value: u64, modulus: u64) -> Result<Self, ScalarError> {
        if modulus < 2 {
            return Err(ScalarError::BadModulus(modulus));
        }
        Ok(ModularInt { value: value % modulus, modulus })
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let m = modulus as i128;
        ModularInt { value: (value as i128).rem_euclid(m) as u64, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = ModularInt { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inverse(&self) -> Option<Self> {
        let e = (self.value as i128).extended_gcd(&(self.modulus as i128));
        if e.gcd != 1 {
            return None;
        }
        let m = self.modulus as i128;
        Some(ModularInt { value: e.x.rem_euclid(m) as u64, modulus: self.modulus })
    }

    #[inline]
    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
    }
}

impl fmt::Display for ModularInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! residue_ops {
    ($ty:ty, $inner:expr, $wrap:expr) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                self * &rhs
            }
        }
        impl<'a> Add<&'a $ty> for $ty {
            type Output = $ty;
            fn add(self, rhs: &'a $ty) -> $ty {
                let (a, b) = ($inner(&self), $inner(rhs));
                a.check(b);
                let s = (a.value as u128 + b.value as u128) % a.modulus as u128;
                $wrap(ModularInt { value: s as u64, modulus: a.modulus })
            }
        }
        impl<'a> Sub<&'a $ty> for $ty {
            type Output = $ty;
            fn sub(self, rhs: &'a $ty) -> $ty {
                let (a, b) = ($inner(&self), $inner(rhs));
                a.check(b);
                let s = (a.value as u128 + a.modulus as u128 - b.value as u128) % a.modulus as u128;
                $wrap(ModularInt { value: s as u64, modulus: a.modulus })
            }
        }
        impl<'a> Mul<&'a $ty> for $ty {
            type Output = $ty;
            fn mul(self, rhs: &'a $ty) -> $ty {
                let (a, b) = ($inner(&self), $inner(rhs));
                a.check(b);
                let s = (a.value as u128 * b.value as u128) % a.modulus as u128;
                $wrap(ModularInt { value: s as u64, modulus: a.modulus })
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                let a = $inner(&self);
                let v = if a.value == 0 { 0 } else { a.modulus - a.value };
                $wrap(ModularInt { value: v, modulus: a.modulus })
            }
        }
    };
}

fn as_residue(x: &ModularInt) -> &ModularInt {
    x
}

fn field_residue(x: &PrimeFieldElem) -> &ModularInt {
    &x.0
}

residue_ops!(ModularInt, as_residue, std::convert::identity);
residue_ops!(PrimeFieldElem, field_residue, PrimeFieldElem);

impl Scalar for ModularInt {
    fn supports(domain: &Domain) -> bool {
        matches!(domain, Domain::Modular(_) | Domain::PrimeField(_))
    }

    fn zero_in(domain: &Domain) -> Self {
        ModularInt::from_i64(0, modulus_of(domain))
    }

    fn one_in(domain: &Domain) -> Self {
        ModularInt::from_i64(1, modulus_of(domain))
    }

    fn from_i64_in(value: i64, domain: &Domain) -> Self {
        ModularInt::from_i64(value, modulus_of(domain))
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn inverse_in(&self, domain: &Domain) -> Result<Self, ScalarError> {
        self.inverse().ok_or_else(|| ScalarError::NotAUnit(self.to_string(), *domain))
    }

    fn parse_in(literal: &str, domain: &Domain) -> Result<Self, ScalarError> {
        parse_residue(literal, domain)
    }

    fn sample_in<G: Rng + ?Sized>(rng: &mut G, domain: &Domain, _bound: u64) -> Self {
        let n = modulus_of(domain);
        ModularInt { value: rng.gen_range(0..n), modulus: n }
    }

    fn residue(&self) -> Option<u64> {
        Some(self.value)
    }
}

/// Element of `GF(p)`. Construction goes through a validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem(ModularInt);

impl PrimeFieldElem {
    pub fn new(value: u64, p: u64) -> Result<Self, ScalarError> {
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(PrimeFieldElem(ModularInt { value: value % p, modulus: p }))
    }

    pub fn value(&self) -> u64 {
        self.0.value
    }

    pub fn modulus(&self) -> u64 {
        self.0.modulus
    }

    pub fn pow(&self, e: u64) -> Self {
        PrimeFieldElem(self.0.pow(e))
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Scalar for PrimeFieldElem {
    fn supports(domain: &Domain) -> bool {
        matches!(domain, Domain::PrimeField(_))
    }

    fn zero_in(domain: &Domain) -> Self {
        PrimeFieldElem(ModularInt::zero_in(domain))
    }

    fn one_in(domain: &Domain) -> Self {
        PrimeFieldElem(ModularInt::one_in(domain))
    }

    fn from_i64_in(value: i64, domain: &Domain) -> Self {
        PrimeFieldElem(ModularInt::from_i64_in(value, domain))
    }

    fn is_zero(&self) -> bool {
        self.0.value == 0
    }

    fn is_one(&self) -> bool {
        self.0.value == 1
    }

    fn inverse_in(&self, domain: &Domain) -> Result<Self, ScalarError> {
        self.0.inverse_in(domain).map(PrimeFieldElem)
    }

    fn parse_in(literal: &str, domain: &Domain) -> Result<Self, ScalarError> {
        match domain {
            Domain::PrimeField(_) => parse_residue(literal, domain).map(PrimeFieldElem),
            _ => Err(ScalarError::WrongDomain(*domain)),
        }
    }

    fn sample_in<G: Rng + ?Sized>(rng: &mut G, domain: &Domain, bound: u64) -> Self {
        PrimeFieldElem(ModularInt::sample_in(rng, domain, bound))
    }

    fn residue(&self) -> Option<u64> {
        Some(self.0.value)
    }
}

fn modulus_of(domain: &Domain) -> u64 {
    domain
        .modulus()
        .unwrap_or_else(|| panic!("residue scalar used with domain {domain}"))
}

/// Nonnegative decimal literal, reduced modulo the domain modulus.
fn parse_residue(literal: &str, domain: &Domain) -> Result<ModularInt, ScalarError> {
    let n = domain.modulus().ok_or(ScalarError::WrongDomain(*domain))?;
    let err = || ScalarError::Parse { literal: literal.to_string(), domain: *domain };
    if !literal.bytes().all(|b| b.is_ascii_digit()) || literal.is_empty() {
        return Err(err());
    }
    let v: u128 = literal.parse().map_err(|_| err())?;
    Ok(ModularInt { value: (v % n as u128) as u64, modulus: n })
}

/// Splits `n = m * c` where `m` collects every prime power of `n` whose
/// prime divides `x`, and `gcd(x, c) = 1`. `x` is nilpotent mod `n` iff
/// `c == 1`.
pub(crate) fn radical_split(x: u64, n: u64) -> (u64, u64) {
    let mut m = 1u64;
    let mut rest = n;
    loop {
        let g = x.gcd(&rest);
        if g == 1 {
            return (m, rest);
        }
        m *= g;
        rest /= g;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial_division(n), "{n}");
        }
        // strong pseudoprimes to several small bases
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn radical_split_examples() {
        assert_eq!(radical_split(2, 12), (4, 3));
        assert_eq!(radical_split(6, 12), (12, 1));
        assert_eq!(radical_split(5, 12), (1, 12));
        assert_eq!(radical_split(0, 12), (12, 1));
    }

    #[test]
    fn parse_rejects_signs_and_junk() {
        let d = Domain::PrimeField(7);
        assert_eq!(PrimeFieldElem::parse_in("9", &d).unwrap().value(), 2);
        assert!(PrimeFieldElem::parse_in("-1", &d).is_err());
        assert!(PrimeFieldElem::parse_in("1/2", &d).is_err());
        assert!(PrimeFieldElem::parse_in("", &d).is_err());
        assert!(PrimeFieldElem::parse_in("3", &Domain::Modular(8)).is_err());
    }

    #[test]
    fn new_rejects_composite() {
        assert!(PrimeFieldElem::new(1, 9).is_err());
        assert!(ModularInt::new(1, 1).is_err());
    }

    proptest! {
        #[test]
        fn fermat(p in prop::sample::select(vec![2u64, 3, 5, 7, 13, 101, 65_521]), x in 0u64..1_000_000) {
            let a = PrimeFieldElem::new(x, p).unwrap();
            prop_assert_eq!(a.pow(p), a);
        }

        #[test]
        fn inverse_is_involutive(n in 2u64..10_000, x in 0u64..10_000) {
            let a = ModularInt::new(x, n).unwrap();
            if let Some(inv) = a.inverse() {
                prop_assert_eq!(inv * a, ModularInt::from_i64(1, n));
                prop_assert_eq!(inv.inverse().unwrap(), a);
            } else {
                prop_assert_ne!(x.gcd(&n), 1);
            }
        }
    }
}
