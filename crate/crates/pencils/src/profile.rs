//! The positive index of inertia as a function on the unit circle of pencil
//! parameters, computed exactly.
//!
//! The circle is parametrized by (lambda0, lambda1) = (cos a, sin a) and
//! covers the projective parameter line twice. On the hemisphere lambda0 > 0
//! the form cos(a) Q0 + sin(a) Q1 is a positive multiple of Q0 + t Q1 with
//! t = tan(a), so inertia there is evaluated at exact rational samples of t;
//! on the opposite hemisphere the form is a negative multiple, which swaps
//! the positive and negative indices. Anticlockwise traversal is increasing
//! t on the lambda0 > 0 hemisphere. No angle is ever represented by a
//! floating-point number: a discontinuity is (root descriptor, hemisphere
//! bit) and every arc sample is an exact rational strictly separated from
//! the isolated roots.

use num_traits::One;

use crate::discriminant::{pencil_determinant, real_pencil_roots, PencilRoot, RootLocation};
use crate::error::PencilError;
use crate::forms::{pencil_inertia_at, QuadricPencil};
use crate::poly::{root_bound, Rat};

/// A single jump point of the inertia function on the circle.
#[derive(Clone, Debug)]
pub struct Discontinuity {
    /// Which degeneration parameter this point lies over.
    pub root: RootLocation,
    /// 0 for the lift with lambda0 > 0 (or (0,1) for the infinity root),
    /// 1 for the antipodal lift.
    pub hemisphere: u8,
    /// Change of the positive inertia index crossing anticlockwise.
    pub jump: i8,
}

/// Piecewise-constant profile of the positive inertia index on the circle.
///
/// `arc_values[i]` is the value on the open arc immediately after
/// `discontinuities[i]`, anticlockwise; when there are no discontinuities it
/// holds the single constant value.
#[derive(Clone, Debug)]
pub struct InertiaProfile {
    pub n: usize,
    pub roots: Vec<PencilRoot>,
    pub discontinuities: Vec<Discontinuity>,
    pub arc_values: Vec<usize>,
}

impl InertiaProfile {
    /// Circular sequence of jump signs, anticlockwise.
    pub fn jump_signs(&self) -> Vec<i8> {
        self.discontinuities.iter().map(|d| d.jump).collect()
    }
}

/// Computes the inertia profile of a generic pencil.
pub fn inertia_profile(pencil: &QuadricPencil) -> Result<InertiaProfile, PencilError> {
    let n = pencil.n();
    let disc = pencil_determinant(pencil);
    let roots = real_pencil_roots(&disc)?; // fails with NotGeneric when unsound
    let has_inf = roots.last().map_or(false, |r| r.location == RootLocation::Infinity);
    let finite: Vec<&PencilRoot> = roots
        .iter()
        .filter(|r| r.location != RootLocation::Infinity)
        .collect();
    let m = finite.len();

    // Rational samples: one below all finite roots, one in each gap, one
    // above. All of them avoid every root of the discriminant.
    let two = Rat::one() + Rat::one();
    let bound = if disc.poly.degree().map_or(true, |d| d == 0) {
        Rat::one()
    } else {
        root_bound(&disc.poly)
    };
    let mut samples: Vec<Rat> = Vec::with_capacity(m + 1);
    samples.push(-bound.clone());
    for w in finite.windows(2) {
        let hi = upper(w[0]);
        let lo = lower(w[1]);
        samples.push((hi + lo) / &two);
    }
    if m > 0 {
        samples.push(bound.clone());
    }

    let ints = pencil.integerized();
    let mut values: Vec<usize> = Vec::with_capacity(samples.len());
    for s in &samples {
        let inertia = pencil_inertia_at(&ints, pencil, s);
        if !inertia.is_nondegenerate() {
            return Err(PencilError::InvariantViolation(format!(
                "degenerate form at arc sample t = {s}"
            )));
        }
        values.push(inertia.pos);
    }
    // Without a degeneration at infinity the arcs past the extreme samples
    // join across the poles, so the two ends must fit together.
    if !has_inf && m > 0 && values[0] + values[m] != n {
        return Err(PencilError::InvariantViolation(
            "inertia fails to match across the pole".into(),
        ));
    }

    // Assemble the circular arc/discontinuity structure. Hemisphere-0 lifts
    // of the finite roots in increasing t order, the (0,1) pole if the
    // degree drops, then the antipodes, then the (0,-1) pole.
    let mut discs: Vec<(RootLocation, u8)> = Vec::new();
    for r in &finite {
        discs.push((r.location.clone(), 0));
    }
    if has_inf {
        discs.push((RootLocation::Infinity, 0));
    }
    for r in &finite {
        discs.push((r.location.clone(), 1));
    }
    if has_inf {
        discs.push((RootLocation::Infinity, 1));
    }

    if discs.is_empty() {
        return Ok(InertiaProfile {
            n,
            roots,
            discontinuities: Vec::new(),
            arc_values: vec![values[0]],
        });
    }

    // Value of the arc following each discontinuity.
    let mut arc_values: Vec<usize> = Vec::with_capacity(discs.len());
    for (idx, _) in discs.iter().enumerate() {
        let v = arc_value_after(idx, m, has_inf, &values, n);
        arc_values.push(v);
    }

    let total = discs.len();
    let mut discontinuities = Vec::with_capacity(total);
    for (idx, (root, hemisphere)) in discs.into_iter().enumerate() {
        let before = arc_values[(idx + total - 1) % total];
        let after = arc_values[idx];
        let jump = after as i64 - before as i64;
        if jump.abs() != 1 {
            return Err(PencilError::InvariantViolation(format!(
                "inertia jump of height {jump} at a simple degeneration"
            )));
        }
        discontinuities.push(Discontinuity {
            root,
            hemisphere,
            jump: jump as i8,
        });
    }

    // Antipodal pairing: opposite jumps at opposite lifts.
    let half = total / 2;
    for i in 0..half {
        debug_assert_eq!(discontinuities[i].jump, -discontinuities[i + half].jump);
    }
    debug_assert_eq!(
        discontinuities.iter().filter(|d| d.jump == 1).count(),
        discontinuities.iter().filter(|d| d.jump == -1).count(),
    );

    Ok(InertiaProfile {
        n,
        roots,
        discontinuities,
        arc_values,
    })
}

fn lower(r: &PencilRoot) -> Rat {
    match &r.location {
        RootLocation::Rational(v) => v.clone(),
        RootLocation::Interval { low, .. } => low.clone(),
        RootLocation::Infinity => unreachable!("finite roots only"),
    }
}

fn upper(r: &PencilRoot) -> Rat {
    match &r.location {
        RootLocation::Rational(v) => v.clone(),
        RootLocation::Interval { high, .. } => high.clone(),
        RootLocation::Infinity => unreachable!("finite roots only"),
    }
}

/// Value of I+ on the arc after the idx-th discontinuity in the circular
/// layout produced above. `values[i]` is I+ at the i-th hemisphere-0 sample.
fn arc_value_after(idx: usize, m: usize, has_inf: bool, values: &[usize], n: usize) -> usize {
    let per_hemi = m + usize::from(has_inf);
    debug_assert!(per_hemi > 0);
    let (pos, hemi) = if idx < per_hemi { (idx, 0u8) } else { (idx - per_hemi, 1u8) };
    if has_inf && pos == per_hemi - 1 {
        // Arc just past a pole: the low-t end of the opposite hemisphere.
        return if hemi == 0 { n - values[0] } else { values[0] };
    }
    // Arc after the pos-th finite root, measured at the next sample. When
    // pos is the last finite root and no pole separates the hemispheres,
    // the same arc continues across the pole; values[pos + 1] covers it.
    let v = values[pos + 1];
    if hemi == 0 {
        v
    } else {
        n - v
    }
}
