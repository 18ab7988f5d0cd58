//! Brute-force reference classifier: exact inertia at a dense circular grid
//! of rational-tangent angles, runs read off from value changes.
//!
//! This path never isolates roots and never inspects the discriminant; it
//! only relies on the pointwise inertia routine. It is the cross-check for
//! [`crate::classify`] and is only correct when consecutive grid points
//! separate the degeneration parameters, which holds for the generators in
//! [`crate::sample`].

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::PencilError;
use crate::forms::{inertia, pencil_inertia_at, QuadricPencil};
use crate::isotopy::IsotopyClass;
use crate::poly::Rat;

/// Classifies by sampling `angles` points spread over the whole circle
/// (half per hemisphere plus the two poles).
pub fn classify_by_sampling(
    pencil: &QuadricPencil,
    angles: usize,
) -> Result<IsotopyClass, PencilError> {
    assert!(angles >= 8 && angles % 2 == 0, "need an even grid of at least 8 angles");
    let n = pencil.n();
    let m = angles / 2;
    let ints = pencil.integerized();

    // Hemisphere lambda0 > 0: t = u / (1 - u^2) for u on a uniform rational
    // grid in (-1, 1); the map is increasing and onto the whole line.
    let mut hem0: Vec<Option<usize>> = Vec::with_capacity(m - 1);
    let big_m = BigInt::from(m as i64);
    for j in 1..m {
        let u = Rat::new(BigInt::from(2 * j as i64 - m as i64), big_m.clone());
        let t = &u / (Rat::from_integer(BigInt::from(1)) - &u * &u);
        let i = pencil_inertia_at(&ints, pencil, &t);
        hem0.push(if i.is_nondegenerate() { Some(i.pos) } else { None });
    }
    let pole = inertia(&pencil.q1);
    let pole_value: Option<usize> = if pole.is_nondegenerate() { Some(pole.pos) } else { None };

    // Full circle, anticlockwise: hemisphere 0, pole (0,1), the antipodal
    // hemisphere (I+ there is n - I+), pole (0,-1).
    let mut circle: Vec<usize> = Vec::with_capacity(angles);
    for v in &hem0 {
        if let Some(v) = v {
            circle.push(*v);
        }
    }
    if let Some(v) = pole_value {
        circle.push(v);
    }
    for v in &hem0 {
        if let Some(v) = v {
            circle.push(n - *v);
        }
    }
    if let Some(v) = pole_value {
        circle.push(n - v);
    }

    if circle.is_empty() {
        return Err(PencilError::InvariantViolation(
            "every sampled angle was degenerate".into(),
        ));
    }

    // Each value change of size d contributes d consecutive points of the
    // corresponding sign.
    let mut signs: Vec<i8> = Vec::new();
    let len = circle.len();
    for i in 0..len {
        let a = circle[i] as i64;
        let b = circle[(i + 1) % len] as i64;
        let d = b - a;
        let s = if d > 0 { 1i8 } else { -1i8 };
        for _ in 0..d.abs() {
            signs.push(s);
        }
    }

    if signs.is_empty() {
        return Ok(IsotopyClass::empty());
    }

    // Run extraction, written independently of the profile pipeline: rotate
    // to start just after a negative point, then split on negatives.
    let first_minus = signs
        .iter()
        .position(|&s| s == -1)
        .ok_or_else(|| PencilError::InvariantViolation("all-positive sign sequence".into()))?;
    let rotated: Vec<i8> = (0..signs.len())
        .map(|i| signs[(first_minus + 1 + i) % signs.len()])
        .collect();
    let mut parts: Vec<u32> = Vec::new();
    let mut run = 0u32;
    for s in rotated {
        if s == 1 {
            run += 1;
        } else {
            if run > 0 {
                parts.push(run);
            }
            run = 0;
        }
    }
    if run > 0 {
        parts.push(run);
    }
    Ok(IsotopyClass::new(parts))
}

/// Convenience wrapper used when the caller wants a plain rational sample
/// of the positive inertia index on the lambda0 > 0 hemisphere.
pub fn positive_index_at(pencil: &QuadricPencil, t: &BigRational) -> usize {
    let ints = pencil.integerized();
    pencil_inertia_at(&ints, pencil, t).pos
}
