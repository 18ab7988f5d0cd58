//! Property-style checks: the isotopy class is blind to congruences of the
//! forms and to changes of basis in the pencil itself, and the classifier
//! agrees with the dense sampling oracle.

use fanoreal_pencils::oracle::classify_by_sampling;
use fanoreal_pencils::sample::{
    congruent_pencil, pencil_coordinate_change, random_diagonal_pencil, random_pencil_change,
    random_unimodular,
};
use fanoreal_pencils::{classify, validate_generic};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn congruence_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..8 {
        let base = random_diagonal_pencil(&mut rng, 6, true);
        let reference = classify(&base).unwrap();
        for _ in 0..12 {
            let a = random_unimodular(&mut rng, 6, 8);
            let moved = congruent_pencil(&base, &a);
            assert_eq!(classify(&moved).unwrap(), reference, "congruence changed the class");
        }
    }
}

#[test]
fn pencil_coordinate_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..8 {
        let base = random_diagonal_pencil(&mut rng, 6, false);
        let reference = classify(&base).unwrap();
        for _ in 0..12 {
            let coeffs = random_pencil_change(&mut rng);
            let moved = pencil_coordinate_change(&base, &coeffs).unwrap();
            assert_eq!(
                classify(&moved).unwrap(),
                reference,
                "pencil base change altered the class"
            );
        }
    }
}

#[test]
fn oracle_agreement_smoke() {
    // The full 200-pencil suite runs in the acceptance tests; this is the
    // fast regression version.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for i in 0..25 {
        let diag = random_diagonal_pencil(&mut rng, 6, true);
        let a = random_unimodular(&mut rng, 6, 6);
        let p = congruent_pencil(&diag, &a);
        let fast = classify(&p).unwrap();
        let slow = classify_by_sampling(&p, 2000).unwrap();
        assert_eq!(fast, slow, "pencil #{i}");
    }
}

#[test]
fn six_variable_classes_have_even_k_and_odd_parts() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..60 {
        let p = random_diagonal_pencil(&mut rng, 6, true);
        assert!(validate_generic(&p) || classify(&p).is_ok());
        let class = classify(&p).unwrap();
        assert_eq!(class.k() % 2, 0);
        if !class.is_empty_class() {
            assert_eq!(class.parts().len() % 2, 1);
        }
    }
}
