use fanoreal_pencils::canonical_necklace;
use proptest::prelude::*;

proptest! {
    #[test]
    fn idempotent(parts in prop::collection::vec(1u32..9, 1..9)) {
        let c = canonical_necklace(&parts);
        prop_assert_eq!(canonical_necklace(&c), c);
    }

    #[test]
    fn rotation_invariant(parts in prop::collection::vec(1u32..9, 1..9), shift in 0usize..8) {
        let n = parts.len();
        let rotated: Vec<u32> = (0..n).map(|i| parts[(i + shift) % n]).collect();
        prop_assert_eq!(canonical_necklace(&rotated), canonical_necklace(&parts));
    }

    #[test]
    fn reversal_invariant(parts in prop::collection::vec(1u32..9, 1..9)) {
        let reversed: Vec<u32> = parts.iter().rev().copied().collect();
        prop_assert_eq!(canonical_necklace(&reversed), canonical_necklace(&parts));
    }

    #[test]
    fn canonical_is_a_rotation_of_input_or_reversal(parts in prop::collection::vec(1u32..9, 1..9)) {
        let c = canonical_necklace(&parts);
        let n = parts.len();
        let reversed: Vec<u32> = parts.iter().rev().copied().collect();
        let mut found = false;
        for seq in [&parts, &reversed] {
            for s in 0..n {
                let rot: Vec<u32> = (0..n).map(|i| seq[(s + i) % n]).collect();
                if rot == c {
                    found = true;
                }
            }
        }
        prop_assert!(found);
    }
}
