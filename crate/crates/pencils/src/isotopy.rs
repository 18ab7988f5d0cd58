//! Rigid isotopy classes of smooth intersections of two real quadrics,
//! encoded as odd decompositions up to rotation and reversal.

use serde::{Deserialize, Serialize};

use crate::error::PencilError;
use crate::forms::QuadricPencil;
use crate::profile::{inertia_profile, InertiaProfile};

/// An isotopy class: the circular run lengths of positive discontinuity
/// points, in canonical necklace form. The empty sequence is the class (0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsotopyClass {
    parts: Vec<u32>,
}

impl IsotopyClass {
    /// Builds a class from run lengths in any rotation, canonicalizing.
    pub fn new(parts: Vec<u32>) -> Self {
        if parts.is_empty() {
            return IsotopyClass { parts };
        }
        IsotopyClass {
            parts: canonical_necklace(&parts),
        }
    }

    pub fn empty() -> Self {
        IsotopyClass { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty_class(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of positive discontinuity points.
    pub fn k(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl std::fmt::Display for IsotopyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Lexicographically minimal sequence among all rotations of the input and
/// all rotations of its reversal. Idempotent.
pub fn canonical_necklace(parts: &[u32]) -> Vec<u32> {
    assert!(!parts.is_empty(), "canonical form of an empty sequence");
    let n = parts.len();
    let mut best: Option<Vec<u32>> = None;
    let reversed: Vec<u32> = parts.iter().rev().copied().collect();
    for seq in [parts, reversed.as_slice()] {
        for start in 0..n {
            let cand: Vec<u32> = (0..n).map(|i| seq[(start + i) % n]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Maximal circular runs of +1 in a sequence of signs, in traversal order.
fn plus_runs(signs: &[i8]) -> Vec<u32> {
    let n = signs.len();
    let total_plus = signs.iter().filter(|&&s| s == 1).count();
    if total_plus == 0 {
        return Vec::new();
    }
    debug_assert!(total_plus < n, "a sign sequence cannot be all positive");
    // Anchor at a run start so no run is split by the wrap-around.
    let start = (0..n)
        .find(|&i| signs[i] == 1 && signs[(i + n - 1) % n] == -1)
        .expect("mixed signs have a run boundary");
    let mut runs = Vec::new();
    let mut current = 0u32;
    for off in 0..n {
        let s = signs[(start + off) % n];
        if s == 1 {
            current += 1;
        } else if current > 0 {
            runs.push(current);
            current = 0;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

/// Classifies a generic pencil by its rigid isotopy class.
pub fn classify(pencil: &QuadricPencil) -> Result<IsotopyClass, PencilError> {
    let profile = inertia_profile(pencil)?;
    classify_profile(&profile)
}

/// Extracts the isotopy class from an already-computed profile.
pub fn classify_profile(profile: &InertiaProfile) -> Result<IsotopyClass, PencilError> {
    let signs = profile.jump_signs();
    if signs.is_empty() {
        return Ok(IsotopyClass::empty());
    }
    let runs = plus_runs(&signs);
    let class = IsotopyClass::new(runs);
    if profile.n == 6 {
        if class.k() % 2 != 0 {
            return Err(PencilError::InvariantViolation(format!(
                "odd total k = {} for a six-variable pencil",
                class.k()
            )));
        }
        if !class.is_empty_class() && class.parts().len() % 2 == 0 {
            return Err(PencilError::InvariantViolation(format!(
                "even part count {} for a six-variable pencil",
                class.parts().len()
            )));
        }
    }
    Ok(class)
}

/// What the isotopy class says about the real locus of the corresponding
/// three-dimensional intersection of two quadrics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyVerdict {
    /// Class (0): the real locus is empty.
    Empty,
    /// Class (1,1,4): the real locus has exactly two connected components.
    TwoComponents,
    /// Every other class: connected or empty, never two components.
    AtMostOneComponent,
}

impl std::fmt::Display for TopologyVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TopologyVerdict::Empty => "empty",
            TopologyVerdict::TwoComponents => "two_components",
            TopologyVerdict::AtMostOneComponent => "at_most_one_component",
        };
        write!(f, "{s}")
    }
}

/// Topological reading of an isotopy class for n = 6 (threefolds in P^5).
pub fn interpret(class: &IsotopyClass, n: usize) -> Result<TopologyVerdict, PencilError> {
    if n != 6 {
        return Err(PencilError::Unsupported(format!(
            "topology interpretation is defined for n = 6, got n = {n}"
        )));
    }
    if class.is_empty_class() {
        return Ok(TopologyVerdict::Empty);
    }
    if class.parts() == [1, 1, 4] {
        return Ok(TopologyVerdict::TwoComponents);
    }
    Ok(TopologyVerdict::AtMostOneComponent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::SymmetricForm;
    use crate::poly::Rat;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn diag_pencil(d0: &[(i64, i64)], d1: &[(i64, i64)]) -> QuadricPencil {
        let mk = |vals: &[(i64, i64)]| {
            SymmetricForm::diagonal(vals.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
        };
        QuadricPencil::new(mk(d0), mk(d1)).unwrap()
    }

    #[test]
    fn necklace_canonical_examples() {
        assert_eq!(canonical_necklace(&[4, 1, 1]), vec![1, 1, 4]);
        assert_eq!(canonical_necklace(&[6]), vec![6]);
        // Brute force over all 10 candidates fixes the canonical form.
        assert_eq!(canonical_necklace(&[2, 1, 3, 1, 2]), vec![1, 2, 2, 1, 3]);
    }

    #[test]
    fn necklace_idempotent_and_symmetric() {
        let c = canonical_necklace(&[3, 1, 2]);
        assert_eq!(canonical_necklace(&c), c);
        assert_eq!(canonical_necklace(&[2, 3, 1]), c);
        assert_eq!(canonical_necklace(&[2, 1, 3]), c);
    }

    #[test]
    fn class_zero_for_empty_profile() {
        let p = crate::discriminant::tests::block_pencil();
        assert_eq!(classify(&p).unwrap(), IsotopyClass::empty());
    }

    #[test]
    fn positive_definite_start_gives_single_run_of_six() {
        let p = diag_pencil(
            &[(1, 1); 6],
            &[(2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)],
        );
        let class = classify(&p).unwrap();
        assert_eq!(class.parts(), &[6]);
    }

    #[test]
    fn krasnov_disconnected_class() {
        let p = diag_pencil(
            &[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (-1, 1)],
            &[(2, 1), (9, 4), (5, 2), (11, 4), (1, 4), (-1, 1)],
        );
        let class = classify(&p).unwrap();
        assert_eq!(class.parts(), &[1, 1, 4]);
        assert_eq!(interpret(&class, 6).unwrap(), TopologyVerdict::TwoComponents);
    }

    #[test]
    fn interpretation_rules() {
        assert_eq!(
            interpret(&IsotopyClass::empty(), 6).unwrap(),
            TopologyVerdict::Empty
        );
        assert_eq!(
            interpret(&IsotopyClass::new(vec![6]), 6).unwrap(),
            TopologyVerdict::AtMostOneComponent
        );
        assert!(matches!(
            interpret(&IsotopyClass::new(vec![2]), 4),
            Err(PencilError::Unsupported(_))
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(IsotopyClass::empty().to_string(), "(0)");
        assert_eq!(IsotopyClass::new(vec![4, 1, 1]).to_string(), "(1,1,4)");
    }
}
