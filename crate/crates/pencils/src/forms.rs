//! Symmetric quadratic forms over the rationals and their pencils, with
//! exact inertia (signature) computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::PencilError;
use crate::poly::Rat;

/// A real quadratic form in `n` variables, stored as a symmetric n-by-n
/// matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    n: usize,
    entries: Vec<Rat>,
}

impl SymmetricForm {
    /// Builds a form from matrix rows, checking squareness, symmetry and
    /// the minimum dimension.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, PencilError> {
        let n = rows.len();
        if n < 2 {
            return Err(PencilError::InvalidForm("dimension must be at least 2".into()));
        }
        for row in &rows {
            if row.len() != n {
                return Err(PencilError::InvalidForm("matrix is not square".into()));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(PencilError::InvalidForm(format!(
                        "matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let entries = rows.into_iter().flatten().collect();
        Ok(SymmetricForm { n, entries })
    }

    pub fn diagonal(diag: Vec<Rat>) -> Result<Self, PencilError> {
        let n = diag.len();
        let mut rows = vec![vec![Rat::zero(); n]; n];
        for (i, d) in diag.into_iter().enumerate() {
            rows[i][i] = d;
        }
        Self::from_rows(rows)
    }

    pub fn identity(n: usize) -> Result<Self, PencilError> {
        Self::diagonal(vec![Rat::one(); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    /// Congruence transform A^T Q A for an arbitrary square matrix A.
    pub fn congruence(&self, a: &[Vec<Rat>]) -> Result<Self, PencilError> {
        let n = self.n;
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(PencilError::InvalidForm("congruence matrix has wrong shape".into()));
        }
        // QA first, then A^T (QA).
        let mut qa = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rat::zero();
                for k in 0..n {
                    acc += self.entry(i, k) * &a[k][j];
                }
                qa[i][j] = acc;
            }
        }
        let mut out = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rat::zero();
                for k in 0..n {
                    acc += &a[k][i] * &qa[k][j];
                }
                out[i][j] = acc;
            }
        }
        Self::from_rows(out)
    }
}

/// A pencil of quadrics spanned by two forms of equal dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricPencil {
    pub q0: SymmetricForm,
    pub q1: SymmetricForm,
}

impl QuadricPencil {
    pub fn new(q0: SymmetricForm, q1: SymmetricForm) -> Result<Self, PencilError> {
        if q0.n() != q1.n() {
            return Err(PencilError::InvalidForm(
                "the two forms have different dimensions".into(),
            ));
        }
        Ok(QuadricPencil { q0, q1 })
    }

    pub fn n(&self) -> usize {
        self.q0.n()
    }

    /// The form Q0 + t Q1 at a rational parameter value.
    pub fn at(&self, t: &Rat) -> SymmetricForm {
        let n = self.n();
        let entries = (0..n * n)
            .map(|k| &self.q0.entries[k] + t * &self.q1.entries[k])
            .collect();
        SymmetricForm { n, entries }
    }

    /// Integer matrices (A0, A1) with A0 = c Q0 and A1 = c Q1 for a single
    /// positive constant c: scaling a form by c > 0 leaves inertia unchanged.
    pub fn integerized(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut lcm = BigInt::one();
        for e in self.q0.entries.iter().chain(self.q1.entries.iter()) {
            lcm = lcm.lcm(e.denom());
        }
        let scale = |form: &SymmetricForm| {
            form.entries
                .iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect()
        };
        (scale(&self.q0), scale(&self.q1))
    }
}

/// Inertia of a real symmetric form: counts of positive, zero and negative
/// eigenvalues. Computed exactly, never via floating point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub pos: usize,
    pub zero: usize,
    pub neg: usize,
}

impl Inertia {
    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }
}

/// Exact inertia by symmetric Gaussian elimination with full pivoting over
/// the rationals. Diagonal pivots are consumed directly; when the remaining
/// diagonal is zero but an off-diagonal entry survives, a row+column shear
/// manufactures a diagonal pivot (the standard hyperbolic-pair step).
pub fn inertia(form: &SymmetricForm) -> Inertia {
    let n = form.n();
    let mut a: Vec<Vec<Rat>> = form.rows();
    let mut active: Vec<usize> = (0..n).collect();
    let mut pos = 0usize;
    let mut neg = 0usize;

    while !active.is_empty() {
        // Prefer a nonzero diagonal pivot.
        let pivot = active.iter().position(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(idx) => active[idx],
            None => {
                // All active diagonal entries vanish; look off-diagonal.
                let mut found = None;
                'outer: for (ii, &i) in active.iter().enumerate() {
                    for &j in active.iter().skip(ii + 1) {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => break, // remaining block is identically zero
                    Some((i, j)) => {
                        // Shear: add row/column j into i, giving a[i][i] = 2 a[i][j].
                        for &k in &active {
                            let add = a[j][k].clone();
                            a[i][k] += add;
                        }
                        for &k in &active {
                            let add = a[k][j].clone();
                            a[k][i] += add;
                        }
                        i
                    }
                }
            }
        };

        let d = a[p][p].clone();
        debug_assert!(!d.is_zero());
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        // Schur complement on the active block.
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let factor = &a[i][p] / &d;
            for &j in &active {
                let sub = &factor * &a[p][j];
                a[i][j] -= sub;
            }
            a[i][p] = Rat::zero();
        }
        for &j in &active {
            a[p][j] = Rat::zero();
        }
    }

    Inertia {
        pos,
        zero: n - pos - neg,
        neg,
    }
}

/// Leading principal minors by fraction-free (Bareiss) elimination.
/// Returns `None` if an intermediate minor vanishes, in which case the
/// minor-sign rule does not apply and callers use [`inertia`] instead.
fn leading_minors(mat: &[BigInt], n: usize) -> Option<Vec<BigInt>> {
    let mut m: Vec<BigInt> = mat.to_vec();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = m[k * n + k].clone();
        if k + 1 < n && pivot.is_zero() {
            return None;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &m[i * n + j] * &pivot - &m[i * n + k] * &m[k * n + j];
                let q = t / &prev; // exact by the Bareiss identity
                m[i * n + j] = q;
            }
        }
        minors.push(pivot.clone());
        prev = pivot;
    }
    Some(minors)
}

/// Inertia of the integer symmetric matrix `c * (Q0 + t Q1)`, c > 0, using
/// Jacobi's minor-sign rule when all leading principal minors are nonzero.
fn inertia_from_minors(mat: &[BigInt], n: usize) -> Option<Inertia> {
    let minors = leading_minors(mat, n)?;
    if minors[n - 1].is_zero() {
        return None; // degenerate form; let the caller decide
    }
    let mut neg = 0usize;
    let mut last = 1i8;
    for m in &minors {
        let s = if m.is_negative() { -1 } else { 1 };
        if s != last {
            neg += 1;
        }
        last = s;
    }
    Some(Inertia {
        pos: n - neg,
        zero: 0,
        neg,
    })
}

/// Exact inertia of Q0 + t Q1 for a rational sample t, taking the fast
/// integer route when possible.
pub fn pencil_inertia_at(
    ints: &(Vec<BigInt>, Vec<BigInt>),
    pencil: &QuadricPencil,
    t: &Rat,
) -> Inertia {
    let n = pencil.n();
    let p = t.numer();
    let q = t.denom(); // BigRational keeps the denominator positive
    debug_assert!(q.is_positive());
    let mat: Vec<BigInt> = ints
        .0
        .iter()
        .zip(ints.1.iter())
        .map(|(a0, a1)| a0 * q + a1 * p)
        .collect();
    match inertia_from_minors(&mat, n) {
        Some(i) => i,
        None => inertia(&pencil.at(t)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn diag(vals: &[(i64, i64)]) -> SymmetricForm {
        SymmetricForm::diagonal(vals.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn identity_inertia() {
        let m = SymmetricForm::identity(6).unwrap();
        assert_eq!(inertia(&m), Inertia { pos: 6, zero: 0, neg: 0 });
    }

    #[test]
    fn diagonal_sign_count() {
        let m = diag(&[(2, 1), (3, 1), (4, 1), (5, 1), (1, 4), (-1, 1)]);
        assert_eq!(inertia(&m), Inertia { pos: 5, zero: 0, neg: 1 });
    }

    #[test]
    fn pencil_value_with_vanishing_entry() {
        // Entry 1 + 5t of Q0 + t Q1 vanishes at t = -1/5; the remaining
        // diagonal signs are (+, +, +, 0, +, -).
        let q0 = diag(&[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (-1, 1)]);
        let q1 = diag(&[(2, 1), (3, 1), (4, 1), (5, 1), (1, 4), (-1, 1)]);
        let p = QuadricPencil::new(q0, q1).unwrap();
        let m = p.at(&rat(-1, 5));
        assert_eq!(inertia(&m), Inertia { pos: 4, zero: 1, neg: 1 });
    }

    #[test]
    fn hyperbolic_block() {
        // [[0,1],[1,0]] has eigenvalues +1 and -1.
        let m = SymmetricForm::from_rows(vec![
            vec![rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(0, 1)],
        ])
        .unwrap();
        assert_eq!(inertia(&m), Inertia { pos: 1, zero: 0, neg: 1 });
    }

    #[test]
    fn congruence_preserves_inertia() {
        let m = diag(&[(1, 1), (1, 1), (-2, 1), (3, 1), (0, 1), (-1, 3)]);
        let a: Vec<Vec<Rat>> = vec![
            vec![rat(1, 1), rat(2, 1), rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(3, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(-1, 2), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(5, 1)],
            vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)],
        ];
        let t = m.congruence(&a).unwrap();
        assert_eq!(inertia(&t), inertia(&m));
    }

    #[test]
    fn fast_path_agrees_with_elimination() {
        let q0 = SymmetricForm::from_rows(vec![
            vec![rat(1, 1), rat(1, 2), rat(0, 1)],
            vec![rat(1, 2), rat(-1, 1), rat(2, 1)],
            vec![rat(0, 1), rat(2, 1), rat(1, 3)],
        ])
        .unwrap();
        let q1 = SymmetricForm::from_rows(vec![
            vec![rat(2, 1), rat(0, 1), rat(1, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(1, 1), rat(0, 1), rat(-1, 1)],
        ])
        .unwrap();
        let p = QuadricPencil::new(q0, q1).unwrap();
        let ints = p.integerized();
        for k in -20..=20i64 {
            let t = rat(k, 7);
            let fast = pencil_inertia_at(&ints, &p, &t);
            let slow = inertia(&p.at(&t));
            assert_eq!(fast, slow, "t = {k}/7");
        }
    }
}
