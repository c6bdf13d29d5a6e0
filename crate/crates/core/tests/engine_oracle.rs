use drazin_core::drazin::{brute_force_drazin, drazin};
use drazin_core::{Domain, PrimeFieldMatrixRing, RingContext};

fn compare_exhaustively(p: u64, n: usize) -> u128 {
    let ring = PrimeFieldMatrixRing::new(Domain::PrimeField(p), n).unwrap();
    let size = ring.size().unwrap();
    for i in 0..size {
        let a = ring.element(i);
        let engine = drazin(&a).unwrap();
        let oracle = brute_force_drazin(&ring, &a, 100_000).unwrap();
        assert_eq!(engine, oracle, "mismatch at {}", ring.render(&a));
    }
    size
}

#[test]
fn m2_gf2_matches_brute_force() {
    assert_eq!(compare_exhaustively(2, 2), 16);
}

#[test]
fn m2_gf3_matches_brute_force() {
    assert_eq!(compare_exhaustively(3, 2), 81);
}

#[test]
fn m1_gf13_matches_brute_force() {
    assert_eq!(compare_exhaustively(13, 1), 13);
}

#[test]
fn brute_force_refuses_large_contexts() {
    let ring = PrimeFieldMatrixRing::new(Domain::PrimeField(7), 3).unwrap();
    let err = brute_force_drazin(&ring, &ring.one(), 100_000).unwrap_err();
    assert_eq!(err, drazin_core::DrazinError::ContextTooLarge { size: 7u128.pow(9), cap: 100_000 });
}
