//! Ring contexts: the ambient rings in which Drazin inverses are computed.
//!
//! A context owns whatever is needed to do arithmetic on its elements
//! (matrix size, modulus, Cayley tables). [`Elt`] pairs an element with
//! its context so identities can be written with ordinary operators.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::drazin::{self, DrazinError, DrazinResult};
use crate::matrix::Matrix;
use crate::scalar::{Domain, Integer, ModularInt, Scalar};

/// An associative ring with unity.
pub trait RingContext: Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Whether `a` is an element of this ring (shape and domain checks).
    fn contains(&self, a: &Self::Elem) -> bool;

    /// Every nilpotent element `x` satisfies `x^m = 0` for some `m` not
    /// exceeding this bound.
    fn nilpotency_bound(&self) -> usize;

    /// Number of elements, when finite and representable.
    fn size(&self) -> Option<u128>;

    /// The `i`-th element in a fixed enumeration order, `i < size()`.
    fn element(&self, i: u128) -> Self::Elem;

    /// Drazin inverse computed by this context's engine and validated
    /// against the defining axioms before it is returned.
    fn drazin(&self, a: &Self::Elem) -> Result<DrazinResult<Self::Elem>, DrazinError>;

    /// Human-readable rendering used in reports.
    fn render(&self, a: &Self::Elem) -> String;

    fn describe(&self) -> String;

    fn el(&self, value: Self::Elem) -> Elt<'_, Self>
    where
        Self: Sized,
    {
        Elt { ring: self, value }
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Smallest `m` in `1..=bound` with `a^m = 0`.
    fn nilpotency_index(&self, a: &Self::Elem, bound: usize) -> Option<usize> {
        let mut acc = a.clone();
        for m in 1..=bound {
            if self.is_zero(&acc) {
                return Some(m);
            }
            if m < bound {
                acc = self.mul(&acc, a);
            }
        }
        None
    }

    fn is_nilpotent(&self, a: &Self::Elem) -> bool {
        self.nilpotency_index(a, self.nilpotency_bound()).is_some()
    }

    fn is_idempotent(&self, a: &Self::Elem) -> bool {
        self.mul(a, a) == *a
    }
}

/// A ring element bundled with its context.
pub struct Elt<'r, R: RingContext> {
    ring: &'r R,
    value: R::Elem,
}

impl<'r, R: RingContext> Clone for Elt<'r, R> {
    fn clone(&self) -> Self {
        Elt { ring: self.ring, value: self.value.clone() }
    }
}

impl<'r, R: RingContext> Debug for Elt<'r, R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.ring.render(&self.value))
    }
}

impl<'r, R: RingContext> PartialEq for Elt<'r, R> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<'r, R: RingContext> Eq for Elt<'r, R> {}

impl<'r, R: RingContext> Elt<'r, R> {
    pub fn ring(&self) -> &'r R {
        self.ring
    }

    pub fn value(&self) -> &R::Elem {
        &self.value
    }

    pub fn into_value(self) -> R::Elem {
        self.value
    }

    pub fn wrap(&self, value: R::Elem) -> Self {
        Elt { ring: self.ring, value }
    }

    pub fn one(&self) -> Self {
        self.wrap(self.ring.one())
    }

    pub fn zero(&self) -> Self {
        self.wrap(self.ring.zero())
    }

    /// The integer `v` as a ring element.
    pub fn int(&self, v: i64) -> Self {
        self.wrap(self.ring.from_i64(v))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.wrap(self.ring.pow(&self.value, e))
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.value)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.ring.is_nilpotent(&self.value)
    }

    pub fn drazin(&self) -> Result<DrazinResult<R::Elem>, DrazinError> {
        self.ring.drazin(&self.value)
    }

    /// `self^D`.
    pub fn dinv(&self) -> Result<Self, DrazinError> {
        Ok(self.wrap(self.drazin()?.d))
    }

    pub fn render(&self) -> String {
        self.ring.render(&self.value)
    }
}

macro_rules! elt_binop {
    ($tr:ident, $method:ident) => {
        impl<'a, 'r, R: RingContext> $tr<&'a Elt<'r, R>> for &'a Elt<'r, R> {
            type Output = Elt<'r, R>;
            fn $method(self, rhs: &'a Elt<'r, R>) -> Elt<'r, R> {
                Elt { ring: self.ring, value: self.ring.$method(&self.value, &rhs.value) }
            }
        }
        impl<'a, 'r, R: RingContext> $tr<&'a Elt<'r, R>> for Elt<'r, R> {
            type Output = Elt<'r, R>;
            fn $method(self, rhs: &'a Elt<'r, R>) -> Elt<'r, R> {
                (&self).$method(rhs)
            }
        }
        impl<'a, 'r, R: RingContext> $tr<Elt<'r, R>> for &'a Elt<'r, R> {
            type Output = Elt<'r, R>;
            fn $method(self, rhs: Elt<'r, R>) -> Elt<'r, R> {
                self.$method(&rhs)
            }
        }
        impl<'r, R: RingContext> $tr<Elt<'r, R>> for Elt<'r, R> {
            type Output = Elt<'r, R>;
            fn $method(self, rhs: Elt<'r, R>) -> Elt<'r, R> {
                (&self).$method(&rhs)
            }
        }
    };
}

elt_binop!(Add, add);
elt_binop!(Sub, sub);
elt_binop!(Mul, mul);

impl<'r, R: RingContext> Neg for &Elt<'r, R> {
    type Output = Elt<'r, R>;
    fn neg(self) -> Elt<'r, R> {
        Elt { ring: self.ring, value: self.ring.neg(&self.value) }
    }
}

impl<'r, R: RingContext> Neg for Elt<'r, R> {
    type Output = Elt<'r, R>;
    fn neg(self) -> Elt<'r, R> {
        -&self
    }
}

/// `M_n(F)` for an exact field `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRing<T> {
    domain: Domain,
    n: usize,
    _scalar: std::marker::PhantomData<fn() -> T>,
}

impl<T: Scalar> MatrixRing<T> {
    pub fn new(domain: Domain, n: usize) -> Result<Self, DrazinError> {
        if !domain.is_field() || !T::supports(&domain) {
            return Err(DrazinError::UnsupportedDomain(domain));
        }
        if n == 0 {
            return Err(DrazinError::DimensionMismatch);
        }
        Ok(MatrixRing { domain, n, _scalar: std::marker::PhantomData })
    }

    /// The ring `M_n(F)` containing a square matrix `a`.
    pub fn of(a: &Matrix<T>) -> Result<Self, DrazinError> {
        if !a.is_square() {
            return Err(DrazinError::DimensionMismatch);
        }
        Self::new(a.domain(), a.rows())
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.n
    }
}

impl<T: Scalar> RingContext for MatrixRing<T> {
    type Elem = Matrix<T>;

    fn zero(&self) -> Matrix<T> {
        Matrix::zeros(self.domain, self.n, self.n)
    }

    fn one(&self) -> Matrix<T> {
        Matrix::identity(self.domain, self.n)
    }

    fn add(&self, a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
        a + b
    }

    fn sub(&self, a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
        a - b
    }

    fn mul(&self, a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
        a * b
    }

    fn neg(&self, a: &Matrix<T>) -> Matrix<T> {
        -a
    }

    fn from_i64(&self, v: i64) -> Matrix<T> {
        Matrix::scalar(self.domain, self.n, T::from_i64_in(v, &self.domain))
    }

    fn is_zero(&self, a: &Matrix<T>) -> bool {
        a.is_zero()
    }

    fn contains(&self, a: &Matrix<T>) -> bool {
        a.shape() == (self.n, self.n) && a.domain() == self.domain
    }

    fn nilpotency_bound(&self) -> usize {
        self.n
    }

    fn size(&self) -> Option<u128> {
        let p = self.domain.modulus()? as u128;
        p.checked_pow(u32::try_from(self.n * self.n).ok()?)
    }

    /// Entry `k` (row-major) is base-`p` digit `k` of `i`.
    fn element(&self, mut i: u128) -> Matrix<T> {
        let p = self.domain.modulus().expect("finite field") as u128;
        let entries = (0..self.n * self.n)
            .map(|_| {
                let digit = (i % p) as i64;
                i /= p;
                T::from_i64_in(digit, &self.domain)
            })
            .collect();
        Matrix::new(self.domain, self.n, self.n, entries).expect("element shape")
    }

    fn drazin(&self, a: &Matrix<T>) -> Result<DrazinResult<Matrix<T>>, DrazinError> {
        if !self.contains(a) {
            return Err(DrazinError::DimensionMismatch);
        }
        drazin::drazin(a)
    }

    fn render(&self, a: &Matrix<T>) -> String {
        render_rows(&a.to_rows())
    }

    fn describe(&self) -> String {
        format!("M_{}({})", self.n, self.domain)
    }
}

pub(crate) fn render_rows<T: ToString>(rows: &[Vec<T>]) -> String {
    let inner: Vec<String> = rows
        .iter()
        .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", inner.join(","))
}

/// The scalar ring `Z_n`, any `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularScalarRing {
    n: u64,
}

impl ModularScalarRing {
    pub fn new(n: u64) -> Result<Self, DrazinError> {
        if n < 2 {
            return Err(DrazinError::UnsupportedDomain(Domain::Modular(n)));
        }
        Ok(ModularScalarRing { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn elem(&self, v: i64) -> ModularInt {
        ModularInt::from_i64(v, self.n)
    }
}

impl RingContext for ModularScalarRing {
    type Elem = ModularInt;

    fn zero(&self) -> ModularInt {
        self.elem(0)
    }

    fn one(&self) -> ModularInt {
        self.elem(1)
    }

    fn add(&self, a: &ModularInt, b: &ModularInt) -> ModularInt {
        *a + b
    }

    fn sub(&self, a: &ModularInt, b: &ModularInt) -> ModularInt {
        *a - b
    }

    fn mul(&self, a: &ModularInt, b: &ModularInt) -> ModularInt {
        *a * b
    }

    fn neg(&self, a: &ModularInt) -> ModularInt {
        -*a
    }

    fn from_i64(&self, v: i64) -> ModularInt {
        self.elem(v)
    }

    fn contains(&self, a: &ModularInt) -> bool {
        a.modulus() == self.n
    }

    /// `ceil(log2 n)`: the largest prime-power exponent of `n`.
    fn nilpotency_bound(&self) -> usize {
        (64 - (self.n - 1).leading_zeros()).max(1) as usize
    }

    fn size(&self) -> Option<u128> {
        Some(self.n as u128)
    }

    fn element(&self, i: u128) -> ModularInt {
        ModularInt::new(i as u64, self.n).expect("modulus checked")
    }

    fn drazin(&self, a: &ModularInt) -> Result<DrazinResult<ModularInt>, DrazinError> {
        if !self.contains(a) {
            return Err(DrazinError::DimensionMismatch);
        }
        drazin::modular_drazin(self, a)
    }

    fn render(&self, a: &ModularInt) -> String {
        a.to_string()
    }

    fn describe(&self) -> String {
        format!("Z_{}", self.n)
    }
}

/// The ring of integers. Only `-1`, `0` and `1` are Drazin invertible.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl RingContext for IntegerRing {
    type Elem = Integer;

    fn zero(&self) -> Integer {
        0.into()
    }

    fn one(&self) -> Integer {
        1.into()
    }

    fn add(&self, a: &Integer, b: &Integer) -> Integer {
        a + b
    }

    fn sub(&self, a: &Integer, b: &Integer) -> Integer {
        a - b
    }

    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a * b
    }

    fn neg(&self, a: &Integer) -> Integer {
        -a
    }

    fn from_i64(&self, v: i64) -> Integer {
        v.into()
    }

    fn contains(&self, _: &Integer) -> bool {
        true
    }

    /// `Z` is reduced: only zero is nilpotent.
    fn nilpotency_bound(&self) -> usize {
        1
    }

    fn size(&self) -> Option<u128> {
        None
    }

    fn element(&self, _: u128) -> Integer {
        panic!("the integers cannot be enumerated")
    }

    fn drazin(&self, a: &Integer) -> Result<DrazinResult<Integer>, DrazinError> {
        drazin::integer_drazin(a)
    }

    fn render(&self, a: &Integer) -> String {
        a.to_string()
    }

    fn describe(&self) -> String {
        "Z".into()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table shape does not match {0} elements")]
    Shape(usize),
    #[error("entry out of range")]
    OutOfRange,
    #[error("ring axiom fails: {0}")]
    Axiom(String),
    #[error("ring with {size} elements exceeds table cap {cap}")]
    TooLarge { size: u128, cap: u128 },
}

/// A finite ring given by Cayley tables; elements are indices into
/// `labels`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTableRing {
    labels: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
}

/// Seed for the construction-time axiom audit.
const AUDIT_SEED: u64 = 0x5eed_7ab1e;
const AUDIT_TRIPLES: u128 = 10_000;

impl FiniteTableRing {
    /// Validates the tables: closure, identities, additive inverses, and
    /// associativity/distributivity on `min(|R|^3, 10^4)` random triples.
    pub fn new(
        labels: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self, TableError> {
        let n = labels.len();
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n);
        if n == 0 || !square(&add) || !square(&mul) {
            return Err(TableError::Shape(n));
        }
        if zero >= n || one >= n || add.iter().chain(&mul).flatten().any(|&x| x >= n) {
            return Err(TableError::OutOfRange);
        }
        let axiom = |s: &str| Err(TableError::Axiom(s.to_string()));
        if (0..n).any(|a| add[zero][a] != a || add[a][zero] != a) {
            return axiom("0 is not an additive identity");
        }
        if (0..n).any(|a| mul[one][a] != a || mul[a][one] != a) {
            return axiom("1 is not a multiplicative identity");
        }
        if (0..n).any(|a| (0..n).any(|b| add[a][b] != add[b][a])) {
            return axiom("addition is not commutative");
        }
        let mut neg = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| add[a][b] == zero) {
                Some(b) => neg.push(b),
                None => return axiom("missing additive inverse"),
            }
        }
        let ring = FiniteTableRing { labels, add, mul, neg, zero, one };
        ring.audit()?;
        Ok(ring)
    }

    fn audit(&self) -> Result<(), TableError> {
        let n = self.labels.len();
        let total = (n as u128).pow(3);
        let check = |a: usize, b: usize, c: usize| -> Result<(), TableError> {
            let (ad, mu) = (&self.add, &self.mul);
            if ad[ad[a][b]][c] != ad[a][ad[b][c]] {
                return Err(TableError::Axiom(format!("addition not associative at ({a},{b},{c})")));
            }
            if mu[mu[a][b]][c] != mu[a][mu[b][c]] {
                return Err(TableError::Axiom(format!("multiplication not associative at ({a},{b},{c})")));
            }
            if mu[a][ad[b][c]] != ad[mu[a][b]][mu[a][c]] || mu[ad[a][b]][c] != ad[mu[a][c]][mu[b][c]] {
                return Err(TableError::Axiom(format!("distributivity fails at ({a},{b},{c})")));
            }
            Ok(())
        };
        if total <= AUDIT_TRIPLES {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(AUDIT_SEED);
            for _ in 0..AUDIT_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Cayley tables of `Z_n`.
    pub fn modular(n: u64) -> Result<Self, TableError> {
        let ring = ModularScalarRing::new(n).map_err(|_| TableError::Shape(n as usize))?;
        Self::from_context(&ring, 4096)
    }

    /// Tabulates any enumerable context with at most `cap` elements.
    pub fn from_context<R: RingContext>(ring: &R, cap: u128) -> Result<Self, TableError> {
        let size = ring.size().ok_or(TableError::TooLarge { size: u128::MAX, cap })?;
        if size > cap {
            return Err(TableError::TooLarge { size, cap });
        }
        let elems: Vec<R::Elem> = (0..size).map(|i| ring.element(i)).collect();
        let index: HashMap<&R::Elem, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let table = |f: &dyn Fn(&R::Elem, &R::Elem) -> R::Elem| -> Vec<Vec<usize>> {
            elems.iter().map(|a| elems.iter().map(|b| index[&f(a, b)]).collect()).collect()
        };
        let add = table(&|a, b| ring.add(a, b));
        let mul = table(&|a, b| ring.mul(a, b));
        let labels = elems.iter().map(|e| ring.render(e)).collect();
        Self::new(labels, add, mul, index[&ring.zero()], index[&ring.one()])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Index of the element labelled `label`.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl RingContext for FiniteTableRing {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn one(&self) -> usize {
        self.one
    }

    fn add(&self, a: &usize, b: &usize) -> usize {
        self.add[*a][*b]
    }

    fn sub(&self, a: &usize, b: &usize) -> usize {
        self.add[*a][self.neg[*b]]
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.mul[*a][*b]
    }

    fn neg(&self, a: &usize) -> usize {
        self.neg[*a]
    }

    fn from_i64(&self, v: i64) -> usize {
        let unit = if v < 0 { self.neg[self.one] } else { self.one };
        // characteristic divides |R|, so |v| mod |R| copies suffice
        let reps = v.unsigned_abs() % self.labels.len() as u64;
        (0..reps).fold(self.zero, |acc, _| self.add[acc][unit])
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.labels.len()
    }

    fn nilpotency_bound(&self) -> usize {
        self.labels.len()
    }

    fn size(&self) -> Option<u128> {
        Some(self.labels.len() as u128)
    }

    fn element(&self, i: u128) -> usize {
        i as usize
    }

    fn drazin(&self, a: &usize) -> Result<DrazinResult<usize>, DrazinError> {
        if !self.contains(a) {
            return Err(DrazinError::DimensionMismatch);
        }
        drazin::power_cycle_drazin(self, a)
    }

    fn render(&self, a: &usize) -> String {
        self.labels[*a].clone()
    }

    fn describe(&self) -> String {
        format!("table ring of order {}", self.labels.len())
    }
}
