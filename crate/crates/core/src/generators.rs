//! Seeded random invertibles, idempotents, projectors and idempotent pairs.
//!
//! All randomness comes from ChaCha8 seeded through [`trial_seed`], a
//! splitmix64 mix of a campaign seed and a trial index. Every object is
//! checked against its postcondition before it is returned.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::drazin::{drazin, DrazinError};
use crate::matrix::{Matrix, MatrixError};
use crate::scalar::{Domain, Rational, Scalar};

pub const RETRY_CAP: usize = 1000;
pub const DEFAULT_BOUND: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("generator requires {required}, got {got}")]
    UnsupportedDomain { required: &'static str, got: Domain },
    #[error("rank {rank} exceeds dimension {n}")]
    BadRank { rank: usize, n: usize },
    #[error("{what}: no acceptable sample in {attempts} attempts")]
    RetryLimitExceeded { what: &'static str, attempts: usize },
    #[error("generated object violates its postcondition: {0}")]
    Postcondition(&'static str),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Drazin(#[from] DrazinError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub domain: Domain,
    pub n: usize,
    pub rank: usize,
    pub seed: u64,
    /// Entries of rational samples lie in `[-bound, bound]`.
    pub bound: u64,
}

impl GenSpec {
    pub fn new(domain: Domain, n: usize, rank: usize, seed: u64) -> Result<Self, GenError> {
        if rank > n {
            return Err(GenError::BadRank { rank, n });
        }
        Ok(GenSpec { domain, n, rank, seed, bound: DEFAULT_BOUND })
    }

    pub fn with_bound(self, bound: u64) -> Self {
        GenSpec { bound, ..self }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` in a campaign seeded with `seed`.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    splitmix64(seed ^ splitmix64(trial))
}

fn require_field(domain: Domain) -> Result<(), GenError> {
    if domain.is_field() {
        Ok(())
    } else {
        Err(GenError::UnsupportedDomain { required: "a field", got: domain })
    }
}

fn require_rationals(domain: Domain) -> Result<(), GenError> {
    if domain == Domain::Rationals {
        Ok(())
    } else {
        Err(GenError::UnsupportedDomain { required: "rationals", got: domain })
    }
}

fn ensure(cond: bool, what: &'static str) -> Result<(), GenError> {
    if cond {
        Ok(())
    } else {
        Err(GenError::Postcondition(what))
    }
}

fn random_matrix<T: Scalar, G: Rng + ?Sized>(rng: &mut G, domain: Domain, r: usize, c: usize, bound: u64) -> Matrix<T> {
    let entries = (0..r * c).map(|_| T::sample_in(rng, &domain, bound)).collect();
    Matrix::new(domain, r, c, entries).expect("sampled entries match the shape")
}

/// `diag(1, ..., 1, 0, ..., 0)` with `r` ones.
fn rank_diag<T: Scalar>(domain: Domain, n: usize, r: usize) -> Matrix<T> {
    Matrix::diag(domain, (0..n).map(|i| if i < r { T::one_in(&domain) } else { T::zero_in(&domain) }).collect())
}

/// Invertible `S` together with `S^-1`.
pub fn random_invertible_with<T: Scalar, G: Rng + ?Sized>(
    spec: &GenSpec,
    rng: &mut G,
) -> Result<(Matrix<T>, Matrix<T>), GenError> {
    require_field(spec.domain)?;
    for _ in 0..RETRY_CAP {
        let s: Matrix<T> = random_matrix(rng, spec.domain, spec.n, spec.n, spec.bound);
        match s.inverse() {
            Ok(inv) => {
                ensure((&s * &inv).is_identity(), "S S^-1 = I")?;
                return Ok((s, inv));
            }
            Err(MatrixError::Singular) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(GenError::RetryLimitExceeded { what: "random_invertible", attempts: RETRY_CAP })
}

pub fn random_invertible<T: Scalar>(spec: &GenSpec) -> Result<Matrix<T>, GenError> {
    Ok(random_invertible_with(spec, &mut spec.rng())?.0)
}

/// `S diag(I_r, 0) S^-1` for a random invertible `S`.
pub fn random_idempotent_with<T: Scalar, G: Rng + ?Sized>(spec: &GenSpec, rng: &mut G) -> Result<Matrix<T>, GenError> {
    let (s, inv) = random_invertible_with::<T, G>(spec, rng)?;
    let p = &(&s * &rank_diag(spec.domain, spec.n, spec.rank)) * &inv;
    ensure(&p * &p == p, "P^2 = P")?;
    ensure(p.rank()? == spec.rank, "rank P = r")?;
    Ok(p)
}

pub fn random_idempotent<T: Scalar>(spec: &GenSpec) -> Result<Matrix<T>, GenError> {
    random_idempotent_with(spec, &mut spec.rng())
}

/// `B (B^T B)^-1 B^T` for a random integer `n x r` matrix `B` of full
/// column rank.
pub fn random_projector_with<G: Rng + ?Sized>(spec: &GenSpec, rng: &mut G) -> Result<Matrix<Rational>, GenError> {
    require_rationals(spec.domain)?;
    let (n, r) = (spec.n, spec.rank);
    if r == 0 {
        return Ok(Matrix::zeros(spec.domain, n, n));
    }
    for _ in 0..RETRY_CAP {
        let b: Matrix<Rational> = random_matrix(rng, spec.domain, n, r, spec.bound);
        if b.rank()? < r {
            continue;
        }
        let bt = b.transpose();
        let p = &(&b * &(&bt * &b).inverse()?) * &bt;
        ensure(&p * &p == p, "P^2 = P")?;
        ensure(p.transpose() == p, "P^T = P")?;
        ensure(p.rank()? == r, "rank P = r")?;
        return Ok(p);
    }
    Err(GenError::RetryLimitExceeded { what: "random_projector", attempts: RETRY_CAP })
}

pub fn random_projector(spec: &GenSpec) -> Result<Matrix<Rational>, GenError> {
    random_projector_with(spec, &mut spec.rng())
}

/// Pairwise orthogonal nonzero columns spanning `Q^n`, from exact
/// Gram-Schmidt on a random invertible integer matrix.
fn orthogonal_basis<G: Rng + ?Sized>(spec: &GenSpec, rng: &mut G) -> Result<Vec<Matrix<Rational>>, GenError> {
    let (s, _) = random_invertible_with::<Rational, G>(spec, rng)?;
    let mut basis: Vec<Matrix<Rational>> = Vec::with_capacity(spec.n);
    for j in 0..spec.n {
        let mut v = s.select_columns(&[j]);
        for w in &basis {
            let c = dot(w, &v) / dot(w, w);
            v = &v - &w.scale(&c);
        }
        basis.push(v);
    }
    Ok(basis)
}

fn dot(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Rational {
    (&a.transpose() * b).get(0, 0).clone()
}

/// Sum of the orthogonal projections onto the listed basis vectors.
fn span_projector(domain: Domain, n: usize, basis: &[Matrix<Rational>], idx: &[usize]) -> Matrix<Rational> {
    idx.iter().fold(Matrix::zeros(domain, n, n), |acc, &i| {
        let w = &basis[i];
        &acc + &(w * &w.transpose()).scale(&(Rational::from_integer(1.into()) / dot(w, w)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// `pq = qp`, by simultaneous conjugation of diagonal 0/1 matrices.
    Commuting,
    /// Projectors with `pq = qp = 0` (rationals only).
    AnnihilatingProjectors,
    /// Commuting projectors (rationals only).
    CommutingProjectors,
    /// `(p+q)(p-q)^pi` nilpotent.
    NilpotentCondition,
    /// `p - q` invertible.
    DifferenceInvertible,
    /// Two independent idempotents.
    Unrestricted,
    /// Two independent projectors (rationals only).
    UnrestrictedProjectors,
}

/// A pair of idempotents of the requested kind; `p` has rank `spec.rank`
/// where the construction allows it.
pub fn special_pair<T: Scalar>(kind: PairKind, spec: &GenSpec) -> Result<(Matrix<T>, Matrix<T>), GenError> {
    let rng = &mut spec.rng();
    let (n, d) = (spec.n, spec.domain);
    let (p, q) = match kind {
        PairKind::Commuting => {
            let (s, inv) = random_invertible_with::<T, _>(spec, rng)?;
            let mut ones: Vec<bool> = (0..n).map(|i| i < spec.rank).collect();
            ones.shuffle(rng);
            let bits = |v: &[bool]| Matrix::diag(d, v.iter().map(|&b| if b { T::one_in(&d) } else { T::zero_in(&d) }).collect());
            let other: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            let p = &(&s * &bits(&ones)) * &inv;
            let q = &(&s * &bits(&other)) * &inv;
            ensure(&p * &q == &q * &p, "pq = qp")?;
            (p, q)
        }
        PairKind::AnnihilatingProjectors | PairKind::CommutingProjectors => {
            require_rationals(d)?;
            let basis = orthogonal_basis(spec, rng)?;
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let p_idx = &order[..spec.rank];
            let q_idx: Vec<usize> = if kind == PairKind::AnnihilatingProjectors {
                let rest = &order[spec.rank..];
                let s = rng.gen_range(0..=rest.len());
                rest[..s].to_vec()
            } else {
                order.iter().copied().filter(|_| rng.gen()).collect()
            };
            let p = span_projector(d, n, &basis, p_idx);
            let q = span_projector(d, n, &basis, &q_idx);
            ensure(p.transpose() == p && q.transpose() == q, "projectors are symmetric")?;
            let (pq, qp) = (&p * &q, &q * &p);
            ensure(pq == qp, "pq = qp")?;
            if kind == PairKind::AnnihilatingProjectors {
                ensure(pq.is_zero(), "pq = 0")?;
            }
            (into_scalar(p)?, into_scalar(q)?)
        }
        PairKind::NilpotentCondition => nilpotent_condition_pair(spec, rng)?,
        PairKind::DifferenceInvertible => difference_invertible_pair(spec, rng)?,
        PairKind::UnrestrictedProjectors => {
            let p = random_projector_with(spec, rng)?;
            let q = random_projector_with(&GenSpec { rank: rng.gen_range(0..=n), ..*spec }, rng)?;
            (into_scalar(p)?, into_scalar(q)?)
        }
        PairKind::Unrestricted => {
            let p = random_idempotent_with::<T, _>(spec, rng)?;
            let q = random_idempotent_with::<T, _>(&GenSpec { rank: rng.gen_range(0..=n), ..*spec }, rng)?;
            (p, q)
        }
    };
    ensure(&p * &p == p && &q * &q == q, "p and q idempotent")?;
    Ok((p, q))
}

/// Reinterprets a rational matrix as `Matrix<T>`; succeeds only when `T`
/// is the rational type.
fn into_scalar<T: Scalar>(m: Matrix<Rational>) -> Result<Matrix<T>, GenError> {
    let any: Box<dyn std::any::Any> = Box::new(m);
    any.downcast::<Matrix<T>>()
        .map(|b| *b)
        .map_err(|_| GenError::UnsupportedDomain { required: "rationals", got: Domain::Rationals })
}

/// Idempotents with complementary ranks, so that `p - q` is likely
/// invertible.
fn complementary_draw<T: Scalar, G: Rng + ?Sized>(spec: &GenSpec, rng: &mut G) -> Result<(Matrix<T>, Matrix<T>), GenError> {
    let p = random_idempotent_with::<T, G>(spec, rng)?;
    let q = random_idempotent_with::<T, G>(&GenSpec { rank: spec.n - spec.rank, ..*spec }, rng)?;
    Ok((p, q))
}

fn nilpotent_condition_pair<T: Scalar, G: Rng + ?Sized>(
    spec: &GenSpec,
    rng: &mut G,
) -> Result<(Matrix<T>, Matrix<T>), GenError> {
    for _ in 0..RETRY_CAP {
        let (p, q) = complementary_draw::<T, G>(spec, rng)?;
        if sum_condition_holds(&p, &q)? {
            return Ok((p, q));
        }
    }
    if spec.domain.characteristic() == 2 {
        let p = random_idempotent_with::<T, G>(spec, rng)?;
        ensure(sum_condition_holds(&p, &p)?, "(p+q)(p-q)^pi nilpotent")?;
        return Ok((p.clone(), p));
    }
    Err(GenError::RetryLimitExceeded { what: "nilpotent-condition pair", attempts: RETRY_CAP })
}

/// `(p+q)(p-q)^pi` nilpotent.
pub fn sum_condition_holds<T: Scalar>(p: &Matrix<T>, q: &Matrix<T>) -> Result<bool, GenError> {
    let pi = drazin(&(p - q))?.pi;
    let w = &(p + q) * &pi;
    Ok(w.is_nilpotent_within(p.rows().max(1)))
}

fn difference_invertible_pair<T: Scalar, G: Rng + ?Sized>(
    spec: &GenSpec,
    rng: &mut G,
) -> Result<(Matrix<T>, Matrix<T>), GenError> {
    for _ in 0..RETRY_CAP {
        let (p, q) = complementary_draw::<T, G>(spec, rng)?;
        if (&p - &q).rank()? == spec.n {
            return Ok((p, q));
        }
    }
    Ok((Matrix::identity(spec.domain, spec.n), Matrix::zeros(spec.domain, spec.n, spec.n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PrimeFieldElem;

    const Q: Domain = Domain::Rationals;

    fn gf(p: u64) -> Domain {
        Domain::PrimeField(p)
    }

    #[test]
    fn invertible_examples() {
        let one = random_invertible::<PrimeFieldElem>(&GenSpec::new(gf(2), 1, 1, 9).unwrap()).unwrap();
        assert!(one.is_identity());
        for seed in 0..20 {
            let s = random_invertible::<Rational>(&GenSpec::new(Q, 4, 4, seed).unwrap()).unwrap();
            assert_eq!(s.rank().unwrap(), 4);
        }
        let zn = GenSpec::new(Domain::Modular(6), 2, 2, 0).unwrap();
        assert!(matches!(
            random_invertible::<crate::scalar::ModularInt>(&zn),
            Err(GenError::UnsupportedDomain { .. })
        ));
    }

    #[test]
    fn idempotent_examples() {
        let spec = GenSpec::new(gf(7), 4, 0, 3).unwrap();
        assert!(random_idempotent::<PrimeFieldElem>(&spec).unwrap().is_zero());
        let spec = GenSpec::new(gf(7), 4, 4, 3).unwrap();
        assert!(random_idempotent::<PrimeFieldElem>(&spec).unwrap().is_identity());
        for r in 0..=5 {
            let p = random_idempotent::<Rational>(&GenSpec::new(Q, 5, r, 11).unwrap()).unwrap();
            assert_eq!(&p * &p, p);
            assert_eq!(p.rank().unwrap(), r);
        }
        assert_eq!(GenSpec::new(Q, 2, 3, 0), Err(GenError::BadRank { rank: 3, n: 2 }));
    }

    #[test]
    fn projector_examples() {
        for r in 0..=4 {
            let p = random_projector(&GenSpec::new(Q, 4, r, 5).unwrap()).unwrap();
            assert_eq!(p.transpose(), p);
            assert_eq!(&p * &p, p);
            assert_eq!(p.rank().unwrap(), r);
        }
        assert!(random_projector(&GenSpec::new(Q, 3, 3, 1).unwrap()).unwrap().is_identity());
        assert!(matches!(
            random_projector(&GenSpec::new(gf(5), 3, 1, 1).unwrap()),
            Err(GenError::UnsupportedDomain { .. })
        ));
    }

    #[test]
    fn orthogonal_projection_onto_diagonal_line() {
        let n = 2;
        let w = Matrix::from_ints(Q, &[[1], [1]]);
        let p = span_projector(Q, n, &[w], &[0]);
        let h = Rational::new(1.into(), 2.into());
        assert_eq!(p, Matrix::from_rows(Q, vec![vec![h.clone(), h.clone()], vec![h.clone(), h]]).unwrap());
    }

    #[test]
    fn deterministic_outputs() {
        let spec = GenSpec::new(gf(13), 5, 2, 42).unwrap();
        assert_eq!(random_idempotent::<PrimeFieldElem>(&spec), random_idempotent::<PrimeFieldElem>(&spec));
        let spec = GenSpec::new(Q, 3, 1, 42).unwrap();
        for kind in [PairKind::Commuting, PairKind::AnnihilatingProjectors, PairKind::Unrestricted] {
            assert_eq!(special_pair::<Rational>(kind, &spec), special_pair::<Rational>(kind, &spec));
        }
        assert_ne!(trial_seed(0, 0), trial_seed(0, 1));
        assert_ne!(trial_seed(0, 1), trial_seed(1, 0));
    }

    #[test]
    fn pair_postconditions() {
        for seed in 0..10 {
            for n in 1..=4 {
                let spec = GenSpec::new(Q, n, seed as usize % (n + 1), trial_seed(7, seed)).unwrap();
                let (p, q) = special_pair::<Rational>(PairKind::Commuting, &spec).unwrap();
                assert_eq!(&p * &q, &q * &p);
                let (p, q) = special_pair::<Rational>(PairKind::AnnihilatingProjectors, &spec).unwrap();
                assert!((&p * &q).is_zero() && (&q * &p).is_zero());
                assert_eq!(p.transpose(), p);
                let (p, q) = special_pair::<Rational>(PairKind::CommutingProjectors, &spec).unwrap();
                assert_eq!(&p * &q, &q * &p);
                assert_eq!(q.transpose(), q);
                let (p, q) = special_pair::<Rational>(PairKind::NilpotentCondition, &spec).unwrap();
                assert!(sum_condition_holds(&p, &q).unwrap());
                let (p, q) = special_pair::<Rational>(PairKind::UnrestrictedProjectors, &spec).unwrap();
                assert_eq!((p.transpose(), q.transpose()), (p, q));
                let (p, q) = special_pair::<Rational>(PairKind::DifferenceInvertible, &spec).unwrap();
                assert_eq!((&p - &q).rank().unwrap(), n);
            }
        }
    }

    #[test]
    fn nilpotent_condition_in_characteristic_two() {
        for seed in 0..20 {
            for n in 1..=4 {
                let spec = GenSpec::new(gf(2), n, seed as usize % (n + 1), seed).unwrap();
                let (p, q) = special_pair::<PrimeFieldElem>(PairKind::NilpotentCondition, &spec).unwrap();
                assert!(sum_condition_holds(&p, &q).unwrap());
            }
        }
    }

    #[test]
    fn projector_kinds_need_rationals() {
        let spec = GenSpec::new(gf(3), 2, 1, 0).unwrap();
        assert!(matches!(
            special_pair::<PrimeFieldElem>(PairKind::AnnihilatingProjectors, &spec),
            Err(GenError::UnsupportedDomain { .. })
        ));
    }
}
