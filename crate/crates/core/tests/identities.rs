use drazin_core::calculus::{
    cline, derived_from_complement, derived_from_difference, difference_from_products, difference_via_corner, fgh,
    fgh_commutation, fgh_swap_relations, invertible_case, jacobson, product_identities, projector_criteria,
    sigma_census, sum_precondition, sum_via_difference, CalculusError, IdempotentPair,
};
use drazin_core::generators::{special_pair, trial_seed, GenSpec, PairKind};
use drazin_core::{Domain, Matrix, MatrixRing, PrimeFieldElem, Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn run_pair_identities<T: Scalar>(ring: &MatrixRing<T>, p: Matrix<T>, q: Matrix<T>) {
    let pair = IdempotentPair::new(ring, p, q).unwrap();
    for pr in [pair.clone(), pair.swapped()] {
        fgh(&pr).unwrap();
        fgh_swap_relations(&pr).unwrap();
        fgh_commutation(&pr).unwrap();
        derived_from_difference(&pr).unwrap();
        derived_from_complement(&pr).unwrap();
        match product_identities(&pr) {
            Ok(_) => {}
            // the converse direction has counterexamples; the forward one must hold
            Err(CalculusError::IdentityViolated { equation: "T3.7(1)", detail }) => {
                assert_eq!(detail, "(pq)^D = qp is true but pq = qp is false");
            }
            Err(e) => panic!("{e}"),
        }
        difference_from_products(&pr).unwrap();
        difference_via_corner(&pr).unwrap();
        let census = sigma_census(&pr).unwrap();
        assert!(census.all_invertible() && census.triple_invertible());
        if sum_precondition(&pr).unwrap() {
            sum_via_difference(&pr).unwrap();
        } else {
            assert!(matches!(sum_via_difference(&pr), Err(CalculusError::PreconditionViolated { .. })));
        }
        match invertible_case(&pr) {
            Ok(_) | Err(CalculusError::PreconditionViolated { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

fn campaign<T: Scalar>(domain: Domain, trials: u64) {
    for n in 1..=4 {
        let ring = MatrixRing::<T>::new(domain, n).unwrap();
        for t in 0..trials {
            let seed = trial_seed(17, t);
            let rank = (seed % (n as u64 + 1)) as usize;
            let spec = GenSpec::new(domain, n, rank, seed).unwrap();
            for kind in [PairKind::Unrestricted, PairKind::Commuting, PairKind::NilpotentCondition] {
                let (p, q) = special_pair::<T>(kind, &spec).unwrap();
                if kind == PairKind::NilpotentCondition {
                    let pair = IdempotentPair::new(&ring, p.clone(), q.clone()).unwrap();
                    assert!(sum_precondition(&pair).unwrap());
                }
                run_pair_identities(&ring, p, q);
            }
        }
    }
}

#[test]
fn prime_field_identities() {
    for p in [2, 3, 7, 13] {
        campaign::<PrimeFieldElem>(Domain::PrimeField(p), 15);
    }
}

#[test]
fn rational_identities() {
    campaign::<Rational>(Domain::Rationals, 10);
}

#[test]
fn cline_and_jacobson_on_arbitrary_elements() {
    for p in [2, 3, 7] {
        let d = Domain::PrimeField(p);
        for n in 1..=4 {
            let ring = MatrixRing::<PrimeFieldElem>::new(d, n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p * 10 + n as u64);
            for _ in 0..30 {
                let mut draw = || {
                    let zero_mask: u64 = rng.gen();
                    let e = (0..n * n)
                        .map(|i| {
                            if zero_mask >> i & 1 == 1 {
                                PrimeFieldElem::zero_in(&d)
                            } else {
                                PrimeFieldElem::sample_in(&mut rng, &d, 0)
                            }
                        })
                        .collect();
                    Matrix::new(d, n, n, e).unwrap()
                };
                let (a, b) = (draw(), draw());
                cline(&ring, &a, &b).unwrap();
                jacobson(&ring, &a, &b).unwrap();
                jacobson(&ring, &b, &a).unwrap();
            }
        }
    }
}

#[test]
fn projector_biconditionals() {
    for n in 1..=4 {
        let ring = MatrixRing::<Rational>::new(Domain::Rationals, n).unwrap();
        for t in 0..20 {
            let seed = trial_seed(3, t);
            let spec = GenSpec::new(Domain::Rationals, n, (t as usize) % (n + 1), seed).unwrap();
            for kind in [PairKind::AnnihilatingProjectors, PairKind::CommutingProjectors] {
                let (p, q) = special_pair::<Rational>(kind, &spec).unwrap();
                let v = projector_criteria(&IdempotentPair::new(&ring, p, q).unwrap()).unwrap();
                assert!(v.difference.lhs && v.difference.rhs);
                if kind == PairKind::AnnihilatingProjectors {
                    assert!(v.sum.lhs && v.sum.rhs);
                }
            }
            let p = drazin_core::generators::random_projector(&spec).unwrap();
            let q = drazin_core::generators::random_projector(
                &GenSpec::new(Domain::Rationals, n, n - spec.rank, seed ^ 1).unwrap(),
            )
            .unwrap();
            let v = projector_criteria(&IdempotentPair::new(&ring, p, q).unwrap()).unwrap();
            assert_eq!(v.difference.lhs, v.difference.rhs);
            assert_eq!(v.sum.lhs, v.sum.rhs);
        }
    }
}
