use drazin_core::drazin::{drazin, drazin_index, is_drazin_pair};
use drazin_core::generators::trial_seed;
use drazin_core::{Domain, Matrix, MatrixRing, PrimeFieldElem, Rational, RingContext, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random<T: Scalar>(domain: Domain, n: usize, seed: u64) -> Matrix<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..n * n).map(|_| T::sample_in(&mut rng, &domain, 3)).collect();
    Matrix::new(domain, n, n, entries).unwrap()
}

/// Sparse matrices have nontrivial nilpotent parts far more often.
fn sparse<T: Scalar>(domain: Domain, n: usize, seed: u64) -> Matrix<T> {
    let mut m = random::<T>(domain, n, seed);
    for i in 0..n {
        for j in 0..n {
            if (seed >> ((i * n + j) % 60)) & 1 == 1 || i >= j + 1 {
                m.set(i, j, T::zero_in(&domain));
            }
        }
    }
    m
}

fn check<T: Scalar>(a: &Matrix<T>) {
    let ring = MatrixRing::of(a).unwrap();
    let r = drazin(a).unwrap();
    assert!(is_drazin_pair(&ring, a, &r.d, ring.nilpotency_bound()).unwrap());
    assert_eq!(r.index, drazin_index(a).unwrap());
    assert_eq!(&r.pi * &r.pi, r.pi);
    assert_eq!(&r.pi * a, a * &r.pi);
    assert!((&r.pi * a).is_nilpotent_within(a.rows()));

    let sq = drazin(&(a * a)).unwrap();
    assert_eq!(sq.d, &r.d * &r.d, "(a^2)^D = (a^D)^2");

    // definitional index: least k with a^k a^pi = 0
    let k = (0..=a.rows()).find(|&k| (&a.pow(k as u64).unwrap() * &r.pi).is_zero()).unwrap();
    assert_eq!(k, r.index);

    // x = 2 + 3a + a^2 commutes with a, hence with a^D
    let d = a.domain();
    let x = &(&Matrix::scalar(d, a.rows(), T::from_i64_in(2, &d)) + &a.scale(&T::from_i64_in(3, &d))) + &(a * a);
    assert_eq!(&x * &r.d, &r.d * &x);
}

#[test]
fn random_gf7_4x4() {
    for i in 0..100 {
        check(&random::<PrimeFieldElem>(Domain::PrimeField(7), 4, trial_seed(1, i)));
        check(&sparse::<PrimeFieldElem>(Domain::PrimeField(7), 4, trial_seed(2, i)));
    }
}

#[test]
fn random_small_fields() {
    for p in [2, 3, 13] {
        for n in 1..=5 {
            for i in 0..20 {
                check(&random::<PrimeFieldElem>(Domain::PrimeField(p), n, trial_seed(p, i)));
                check(&sparse::<PrimeFieldElem>(Domain::PrimeField(p), n, trial_seed(p + 100, i)));
            }
        }
    }
}

#[test]
fn random_rationals() {
    for n in 1..=4 {
        for i in 0..25 {
            check(&random::<Rational>(Domain::Rationals, n, trial_seed(n as u64, i)));
            check(&sparse::<Rational>(Domain::Rationals, n, trial_seed(50 + n as u64, i)));
        }
    }
}

#[test]
fn jordan_block_indices() {
    for n in 1..=5 {
        let d = Domain::Rationals;
        let mut j = Matrix::<Rational>::zeros(d, n, n);
        for i in 0..n - 1 {
            j.set(i, i + 1, Rational::one_in(&d));
        }
        let r = drazin(&j).unwrap();
        assert!(r.d.is_zero());
        assert_eq!(r.index, n);
        assert!(r.pi.is_identity());
    }
}
