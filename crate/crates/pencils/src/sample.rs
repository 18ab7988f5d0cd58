//! Seeded generators for random generic pencils and random coordinate
//! changes, shared by the test suites and the `pencil sample` command.
//!
//! Generated diagonal pencils keep their degeneration parameters in
//! [-6, 6] with pairwise gaps of at least 1/4, so a 10^4-angle sampling
//! grid always separates them.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::forms::{QuadricPencil, SymmetricForm};
use crate::poly::Rat;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Random diagonal pencil with distinct, well-separated real degeneration
/// parameters; with `allow_infinity`, one parameter occasionally moves to
/// infinity (a degree drop of exactly one).
pub fn random_diagonal_pencil<R: Rng>(rng: &mut R, n: usize, allow_infinity: bool) -> QuadricPencil {
    let mut zs: Vec<i64> = (-24..=24).collect();
    zs.shuffle(rng);
    let roots: Vec<Rat> = zs[..n].iter().map(|&z| rat(z, 4)).collect();
    let mut d0 = Vec::with_capacity(n);
    let mut d1 = Vec::with_capacity(n);
    let infinity_slot = if allow_infinity && rng.gen_bool(0.25) {
        Some(rng.gen_range(0..n))
    } else {
        None
    };
    for (i, root) in roots.iter().enumerate() {
        if infinity_slot == Some(i) {
            let c = *[-2i64, -1, 1, 2].choose(rng).unwrap();
            d0.push(rat(c, 1));
            d1.push(rat(0, 1));
        } else {
            let c = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
            // q0 + t q1 vanishes exactly at t = root.
            d1.push(rat(c, 1));
            d0.push(-root * rat(c, 1));
        }
    }
    QuadricPencil::new(
        SymmetricForm::diagonal(d0).unwrap(),
        SymmetricForm::diagonal(d1).unwrap(),
    )
    .unwrap()
}

/// Random unimodular matrix: a product of integer shear transvections.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, rounds: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1, 1) } else { rat(0, 1) }).collect())
        .collect();
    for _ in 0..rounds {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = rat(*[-2i64, -1, 1, 2].choose(rng).unwrap(), 1);
        // row_i += c * row_j
        for k in 0..n {
            let add = &c * &a[j][k];
            a[i][k] += add;
        }
    }
    a
}

/// Applies a congruence x -> Ax to both forms of a pencil.
pub fn congruent_pencil(p: &QuadricPencil, a: &[Vec<Rat>]) -> QuadricPencil {
    QuadricPencil::new(
        p.q0.congruence(a).unwrap(),
        p.q1.congruence(a).unwrap(),
    )
    .unwrap()
}

/// Replaces the spanning pair (Q0, Q1) by (a Q0 + b Q1, c Q0 + d Q1).
pub fn pencil_coordinate_change(
    p: &QuadricPencil,
    coeffs: &[Rat; 4],
) -> Option<QuadricPencil> {
    let [a, b, c, d] = coeffs;
    if (a * d - b * c) == rat(0, 1) {
        return None;
    }
    let n = p.n();
    let combine = |x: &Rat, y: &Rat| -> SymmetricForm {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| x * p.q0.entry(i, j) + y * p.q1.entry(i, j))
                    .collect()
            })
            .collect();
        SymmetricForm::from_rows(rows).unwrap()
    };
    Some(QuadricPencil::new(combine(a, b), combine(c, d)).unwrap())
}

/// Random invertible 2x2 rational matrix with small integer entries.
pub fn random_pencil_change<R: Rng>(rng: &mut R) -> [Rat; 4] {
    loop {
        let pick = |rng: &mut R| rat(rng.gen_range(-3i64..=3), 1);
        let m = [pick(rng), pick(rng), pick(rng), pick(rng)];
        if (&m[0] * &m[3] - &m[1] * &m[2]) != rat(0, 1) {
            return m;
        }
    }
}
