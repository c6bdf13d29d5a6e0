//! Drazin inverses, indices and spectral idempotents.
//!
//! `b` is the Drazin inverse of `a` when `ab = ba`, `bab = b` and
//! `a - a^2 b` is nilpotent. Each context has its own engine:
//!
//! * matrices over a field: Fitting decomposition `F^n = col(A^k) + null(A^k)`;
//! * `Z_n`: CRT split into the part where `a` is a unit and the part where
//!   it is nilpotent;
//! * finite tables: eventual periodicity of powers;
//! * `Z`: only `-1`, `0`, `1` qualify.
//!
//! Every engine output is checked with [`is_drazin_pair`] before it is
//! returned, and [`brute_force_drazin`] searches the definition directly.
//!
//! Index convention: `ind(a)` is the least `k >= 0` with `a^k a^pi = 0`, so
//! units have index 0 and `ind(0) = 1`.

use rayon::prelude::*;
use thiserror::Error;

use crate::matrix::{Matrix, MatrixError};
use crate::ring::{MatrixRing, ModularScalarRing, RingContext};
use crate::scalar::{Integer, ModularInt, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrazinError {
    #[error("element is not Drazin invertible")]
    NotDrazinInvertible,
    #[error("no group inverse: index {0} exceeds 1")]
    NoGroupInverse(usize),
    #[error("operation not supported over {0}")]
    UnsupportedDomain(crate::scalar::Domain),
    #[error("element does not belong to the ring")]
    DimensionMismatch,
    #[error("enumeration of {size} elements exceeds cap {cap}")]
    ContextTooLarge { size: u128, cap: u128 },
    #[error("{count} elements satisfy the Drazin axioms; expected exactly one")]
    NotUnique { count: usize },
    #[error("internal error: engine output fails the Drazin axioms ({0})")]
    ValidationFailed(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// `a^D` with its index, spectral idempotent `a^pi = 1 - a a^D`, and a
/// witness `m >= 1` such that `(a - a^2 a^D)^m = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrazinResult<E> {
    pub d: E,
    pub index: usize,
    pub pi: E,
    pub witness: usize,
}

/// Checks the three defining axioms, searching for a nilpotency exponent
/// up to `bound`.
pub fn is_drazin_pair<R: RingContext>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    bound: usize,
) -> Result<bool, DrazinError> {
    if !ring.contains(a) || !ring.contains(b) {
        return Err(DrazinError::DimensionMismatch);
    }
    let ab = ring.mul(a, b);
    if ab != ring.mul(b, a) {
        return Ok(false);
    }
    if ring.mul(&ab, b) != *b {
        return Ok(false);
    }
    let residual = ring.sub(a, &ring.mul(a, &ab));
    Ok(ring.nilpotency_index(&residual, bound).is_some())
}

/// Index and spectral idempotent of `a` given its Drazin inverse `d`.
fn assemble<R: RingContext>(ring: &R, a: &R::Elem, d: R::Elem) -> Result<DrazinResult<R::Elem>, DrazinError> {
    let bound = ring.nilpotency_bound();
    if !is_drazin_pair(ring, a, &d, bound)? {
        return Err(DrazinError::ValidationFailed(ring.describe()));
    }
    let pi = ring.sub(&ring.one(), &ring.mul(a, &d));
    let residual = ring.sub(a, &ring.mul(&ring.mul(a, a), &d));
    let witness = ring
        .nilpotency_index(&residual, bound)
        .ok_or_else(|| DrazinError::ValidationFailed(ring.describe()))?;
    let index = if ring.is_zero(&pi) { 0 } else { witness };
    Ok(DrazinResult { d, index, pi, witness })
}

/// `(k, a^k)` where `k` is the first exponent with `rank(a^k) = rank(a^{k+1})`.
fn index_and_power<T: Scalar>(a: &Matrix<T>) -> Result<(usize, Matrix<T>), DrazinError> {
    if !a.is_square() {
        return Err(MatrixError::NotSquare(a.rows(), a.cols()).into());
    }
    if !a.domain().is_field() {
        return Err(DrazinError::UnsupportedDomain(a.domain()));
    }
    let mut power = Matrix::identity(a.domain(), a.rows());
    let mut rank = a.rows();
    let mut k = 0;
    loop {
        let next = &power * a;
        let next_rank = next.rank()?;
        if next_rank == rank {
            return Ok((k, power));
        }
        power = next;
        rank = next_rank;
        k += 1;
    }
}

/// Drazin index by rank stabilization of powers.
pub fn drazin_index<T: Scalar>(a: &Matrix<T>) -> Result<usize, DrazinError> {
    Ok(index_and_power(a)?.0)
}

/// Drazin inverse of a square matrix over a field.
///
/// With `k = ind(a)`, let `U` span `col(a^k)` and `V` span `null(a^k)`. In
/// the basis `S = [U V]` the matrix is `diag(C, N)` with `C` invertible and
/// `N` nilpotent, and `a^D = S diag(C^-1, 0) S^-1`.
pub fn drazin<T: Scalar>(a: &Matrix<T>) -> Result<DrazinResult<Matrix<T>>, DrazinError> {
    let ring = MatrixRing::of(a)?;
    let (k, ak) = index_and_power(a)?;
    let d = if k == 0 {
        a.inverse()?
    } else {
        let u = ak.column_space_basis()?;
        let v = ak.null_space_basis()?;
        let r = u.cols();
        let s = u.hstack(&v)?;
        let s_inv = s.inverse()?;
        let t = &(&s_inv * a) * &s;
        let n = a.rows();
        if !t.block(0, r, r, n).is_zero() || !t.block(r, n, 0, r).is_zero() {
            return Err(DrazinError::ValidationFailed("Fitting blocks are not decoupled".into()));
        }
        if r == 0 {
            Matrix::zeros(a.domain(), n, n)
        } else {
            let c_inv = t.block(0, r, 0, r).inverse()?;
            &(&u * &c_inv) * &s_inv.block(0, r, 0, n)
        }
    };
    let result = assemble(&ring, a, d)?;
    if result.index != k {
        return Err(DrazinError::ValidationFailed(format!(
            "rank-stabilization index {k} differs from definitional index {}",
            result.index
        )));
    }
    Ok(result)
}

/// `a^#`, which exists iff `ind(a) <= 1`.
pub fn group_inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, DrazinError> {
    let r = drazin(a)?;
    if r.index <= 1 {
        Ok(r.d)
    } else {
        Err(DrazinError::NoGroupInverse(r.index))
    }
}

/// Drazin inverse in `Z`: defined exactly for `-1`, `0`, `1`, each its own
/// inverse.
pub fn integer_drazin(a: &Integer) -> Result<DrazinResult<Integer>, DrazinError> {
    let one = Integer::from(1);
    if *a == Integer::from(0) {
        Ok(DrazinResult { d: a.clone(), index: 1, pi: one, witness: 1 })
    } else if *a == one || *a == Integer::from(-1) {
        Ok(DrazinResult { d: a.clone(), index: 0, pi: 0.into(), witness: 1 })
    } else {
        Err(DrazinError::NotDrazinInvertible)
    }
}

/// Drazin inverse in `Z_n` by CRT: `n = m c` with `a` nilpotent mod `m`
/// and a unit mod `c`; then `a^D = 0 (mod m)` and `a^-1 (mod c)`.
pub fn modular_drazin(ring: &ModularScalarRing, a: &ModularInt) -> Result<DrazinResult<ModularInt>, DrazinError> {
    let n = ring.modulus();
    let (m, c) = crate::scalar::modular_radical_split(a.value(), n);
    let d = if c == 1 {
        ring.zero()
    } else {
        let a_inv = ModularInt::new(a.value(), c).expect("c >= 2").inverse().expect("unit mod c");
        let m_inv = ModularInt::new(m, c).expect("c >= 2").inverse().expect("coprime parts");
        let lift = (a_inv.value() as u128 * m_inv.value() as u128 % c as u128) * m as u128 % n as u128;
        ModularInt::new(lift as u64, n).expect("n >= 2")
    };
    assemble(ring, a, d)
}

/// Drazin inverse in a finite ring from the eventual periodicity of powers.
///
/// If `a^{s+t} = a^s`, pick `N >= s` divisible by `t`; then `e = a^N` is
/// idempotent and `a^D = a^{2N-1}`.
pub fn power_cycle_drazin<R: RingContext>(ring: &R, a: &R::Elem) -> Result<DrazinResult<R::Elem>, DrazinError> {
    let size = ring.size().ok_or(DrazinError::NotDrazinInvertible)?;
    let mut seen = std::collections::HashMap::new();
    let mut power = a.clone();
    let mut exp: u64 = 1;
    let (s, t) = loop {
        if let Some(&first) = seen.get(&power) {
            break (first, exp - first);
        }
        if exp as u128 > size + 1 {
            return Err(DrazinError::ValidationFailed("power sequence did not cycle".into()));
        }
        seen.insert(power.clone(), exp);
        power = ring.mul(&power, a);
        exp += 1;
    };
    let n = s.div_ceil(t) * t;
    let d = ring.pow(a, 2 * n - 1);
    assemble(ring, a, d)
}

/// Searches the whole ring for elements satisfying the Drazin axioms.
///
/// Returns the unique solution; more than one is reported as
/// [`DrazinError::NotUnique`] and none as
/// [`DrazinError::NotDrazinInvertible`].
pub fn brute_force_drazin<R: RingContext>(
    ring: &R,
    a: &R::Elem,
    cap: u128,
) -> Result<DrazinResult<R::Elem>, DrazinError> {
    if !ring.contains(a) {
        return Err(DrazinError::DimensionMismatch);
    }
    let size = ring.size().ok_or(DrazinError::ContextTooLarge { size: u128::MAX, cap })?;
    if size > cap {
        return Err(DrazinError::ContextTooLarge { size, cap });
    }
    let bound = ring.nilpotency_bound();
    let size = u64::try_from(size).map_err(|_| DrazinError::ContextTooLarge { size, cap })?;
    let mut found: Vec<(u64, R::Elem)> = (0..size)
        .into_par_iter()
        .filter_map(|i| {
            let b = ring.element(i as u128);
            match is_drazin_pair(ring, a, &b, bound) {
                Ok(true) => Some((i, b)),
                _ => None,
            }
        })
        .collect();
    found.sort_by_key(|(i, _)| *i);
    match found.len() {
        0 => Err(DrazinError::NotDrazinInvertible),
        1 => {
            let (_, d) = found.pop().expect("one element");
            assemble(ring, a, d)
        }
        count => Err(DrazinError::NotUnique { count }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteTableRing;
    use crate::scalar::{Domain, PrimeFieldElem, Rational};

    type Q = Matrix<Rational>;
    type G = Matrix<PrimeFieldElem>;
    const QD: Domain = Domain::Rationals;

    #[test]
    fn index_examples() {
        let a = Q::from_ints(QD, &[[2, 1], [1, 1]]);
        assert_eq!(drazin_index(&a).unwrap(), 0);
        let j3 = Q::from_ints(QD, &[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
        assert_eq!(drazin_index(&j3).unwrap(), 3);
        let p = Q::from_ints(QD, &[[1, 0], [1, 0]]);
        assert_eq!(drazin_index(&p).unwrap(), 1);
        assert_eq!(drazin_index(&Q::zeros(QD, 2, 2)).unwrap(), 1);
    }

    #[test]
    fn drazin_examples() {
        let gf7 = Domain::PrimeField(7);
        let r = drazin(&G::from_ints(gf7, &[[2, 0], [0, 0]])).unwrap();
        assert_eq!(r.d, G::from_ints(gf7, &[[4, 0], [0, 0]]));
        assert_eq!(r.index, 1);
        assert_eq!(r.pi, G::from_ints(gf7, &[[0, 0], [0, 1]]));

        let r = drazin(&Q::from_ints(QD, &[[0, 1], [0, 0]])).unwrap();
        assert!(r.d.is_zero());
        assert_eq!(r.index, 2);
        assert!(r.pi.is_identity());

        let a = Q::from_ints(QD, &[[1, 0], [1, -1]]);
        let r = drazin(&a).unwrap();
        assert_eq!(r.d, a);
        assert_eq!(r.index, 0);
    }

    #[test]
    fn drazin_rejects_composite_modulus() {
        let a = Matrix::<ModularInt>::from_ints(Domain::Modular(6), &[[2, 0], [0, 1]]);
        assert_eq!(drazin(&a), Err(DrazinError::UnsupportedDomain(Domain::Modular(6))));
    }

    #[test]
    fn group_inverse_examples() {
        let p = Q::from_ints(QD, &[[1, 0], [1, 0]]);
        assert_eq!(group_inverse(&p).unwrap(), p);
        let a = Q::from_ints(QD, &[[2, 1], [1, 1]]);
        assert_eq!(group_inverse(&a).unwrap(), a.inverse().unwrap());
        let j2 = Q::from_ints(QD, &[[0, 1], [0, 0]]);
        assert_eq!(group_inverse(&j2), Err(DrazinError::NoGroupInverse(2)));
    }

    #[test]
    fn pair_check_examples() {
        let ring = MatrixRing::<Rational>::new(QD, 2).unwrap();
        let p = Q::from_ints(QD, &[[1, 0], [1, 0]]);
        assert!(is_drazin_pair(&ring, &p, &p, 2).unwrap());
        let j2 = Q::from_ints(QD, &[[0, 1], [0, 0]]);
        assert!(!is_drazin_pair(&ring, &j2, &j2, 2).unwrap());
        assert_eq!(
            is_drazin_pair(&ring, &Q::identity(QD, 3), &p, 2),
            Err(DrazinError::DimensionMismatch)
        );
    }

    #[test]
    fn scalar_oracle_examples() {
        let z7 = ModularScalarRing::new(7).unwrap();
        assert_eq!(brute_force_drazin(&z7, &z7.elem(2), 100).unwrap().d, z7.elem(4));
        let z12 = ModularScalarRing::new(12).unwrap();
        let r = brute_force_drazin(&z12, &z12.elem(2), 100).unwrap();
        assert_eq!(r.d, z12.elem(8));
        assert_eq!(z12.sub(&z12.elem(2), &z12.elem(32)), z12.elem(6));
        let z8 = ModularScalarRing::new(8).unwrap();
        assert_eq!(brute_force_drazin(&z8, &z8.elem(2), 100).unwrap().d, z8.elem(0));
        assert!(matches!(
            brute_force_drazin(&z12, &z12.elem(2), 5),
            Err(DrazinError::ContextTooLarge { size: 12, cap: 5 })
        ));
    }

    #[test]
    fn integer_examples() {
        assert_eq!(integer_drazin(&2.into()), Err(DrazinError::NotDrazinInvertible));
        let r = integer_drazin(&0.into()).unwrap();
        assert_eq!((r.d, r.index), (0.into(), 1));
        let r = integer_drazin(&(-1).into()).unwrap();
        assert_eq!((r.d, r.index), ((-1).into(), 0));
    }

    #[test]
    fn modular_engine_matches_oracle() {
        for n in 2..=72u64 {
            let ring = ModularScalarRing::new(n).unwrap();
            let table = FiniteTableRing::modular(n).unwrap();
            for v in 0..n {
                let a = ring.elem(v as i64);
                let engine = modular_drazin(&ring, &a).unwrap();
                let oracle = brute_force_drazin(&ring, &a, 1000).unwrap();
                assert_eq!(engine, oracle, "n={n} a={v}");
                let t = power_cycle_drazin(&table, &(v as usize)).unwrap();
                assert_eq!(table.label(t.d), engine.d.to_string());
                assert_eq!(t.index, engine.index);
            }
        }
    }

    #[test]
    fn index_equals_definitional_nilpotency_index() {
        let ring = MatrixRing::<PrimeFieldElem>::new(Domain::PrimeField(3), 2).unwrap();
        for i in 0..81 {
            let a = ring.element(i);
            let r = drazin(&a).unwrap();
            let residual = &a - &(&(&a * &a) * &r.d);
            let definitional = if r.pi.is_zero() { 0 } else { ring.nilpotency_index(&residual, 2).unwrap() };
            assert_eq!(r.index, definitional);
            assert_eq!(r.index, drazin_index(&a).unwrap());
        }
    }
}
