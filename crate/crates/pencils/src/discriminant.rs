//! The discriminant of a pencil: det(Q0 + t Q1) as an exact polynomial,
//! together with the degree bookkeeping that detects a degeneration at the
//! pencil parameter lambda0 = 0 ("the root at infinity").

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::PencilError;
use crate::forms::QuadricPencil;
use crate::poly::{isolate_real_roots, Rat, RatPoly, RealRoot};

/// det(Q0 + t Q1) plus the ambient dimension. As a binary form of degree n
/// in (lambda0, lambda1), the point lambda0 = 0 is a root of multiplicity
/// n - deg(poly); equivalently det(Q1) = 0 exactly when the degree drops.
#[derive(Clone, Debug)]
pub struct DiscriminantForm {
    pub poly: RatPoly,
    pub n: usize,
}

impl DiscriminantForm {
    pub fn infinity_multiplicity(&self) -> usize {
        match self.poly.degree() {
            None => self.n,
            Some(d) => self.n - d,
        }
    }

    pub fn has_infinity_root(&self) -> bool {
        self.infinity_multiplicity() > 0
    }

    /// True when the degree-n binary form is squarefree, i.e. all n
    /// degeneration parameters of the pencil are simple over C. This is
    /// what smoothness of the intersection guarantees.
    pub fn is_generic(&self) -> bool {
        !self.poly.is_zero() && self.infinity_multiplicity() <= 1 && self.poly.is_squarefree()
    }

    /// Weaker condition under which the inertia profile is still defined:
    /// every *real* degeneration parameter (the point at infinity included)
    /// is simple. Complex multiplicities never touch the circle.
    pub fn is_real_generic(&self) -> bool {
        if self.poly.is_zero() || self.infinity_multiplicity() > 1 {
            return false;
        }
        let g = self.poly.gcd(&self.poly.derivative());
        if g.degree() == Some(0) {
            return true;
        }
        isolate_real_roots(&g.squarefree_part()).is_empty()
    }

    /// Isolated real roots of the affine part, sorted increasingly. All of
    /// them are simple whenever [`Self::is_real_generic`] holds.
    pub fn real_roots(&self) -> Vec<RealRoot> {
        isolate_real_roots(&self.poly.squarefree_part())
    }
}

/// Exact determinant of a square rational matrix via row scaling to integers
/// and fraction-free (Bareiss) elimination.
fn det_rational(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut scale = BigInt::one();
    let mut m: Vec<BigInt> = Vec::with_capacity(n * n);
    for row in rows {
        let mut lcm = BigInt::one();
        for e in row {
            lcm = lcm.lcm(e.denom());
        }
        scale *= &lcm;
        for e in row {
            m.push(e.numer() * (&lcm / e.denom()));
        }
    }
    let det_int = det_bareiss(&mut m, n);
    Rat::new(det_int, scale)
}

fn det_bareiss(m: &mut [BigInt], n: usize) -> BigInt {
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k * n + k].is_zero() {
            // Pivot search below row k.
            match ((k + 1)..n).find(|&i| !m[i * n + k].is_zero()) {
                None => return BigInt::zero(),
                Some(i) => {
                    for j in 0..n {
                        m.swap(k * n + j, i * n + j);
                    }
                    sign = -sign;
                }
            }
        }
        let pivot = m[k * n + k].clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &m[i * n + j] * &pivot - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = t / &prev;
            }
        }
        prev = pivot;
    }
    let det = m[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Expands det(Q0 + t Q1) exactly by interpolation at n+1 rational nodes.
pub fn pencil_determinant(pencil: &QuadricPencil) -> DiscriminantForm {
    let n = pencil.n();
    // Nodes 0, 1, -1, 2, -2, ... are distinct and keep the matrices small.
    let nodes: Vec<Rat> = (0..=n)
        .map(|k| {
            let v = ((k + 1) / 2) as i64;
            let v = if k % 2 == 0 { v } else { -v };
            Rat::from_integer(BigInt::from(v))
        })
        .collect();
    let values: Vec<Rat> = nodes
        .iter()
        .map(|t| det_rational(&pencil.at(t).rows()))
        .collect();
    let poly = lagrange_interpolate(&nodes, &values);
    debug_assert!(poly.degree().map_or(true, |d| d <= n));
    DiscriminantForm { poly, n }
}

fn lagrange_interpolate(nodes: &[Rat], values: &[Rat]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, xi) in nodes.iter().enumerate() {
        if values[i].is_zero() {
            continue;
        }
        let mut basis = RatPoly::constant(Rat::one());
        let mut denom = Rat::one();
        for (j, xj) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&RatPoly::new(vec![-xj.clone(), Rat::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(&values[i] / denom)));
    }
    acc
}

/// True exactly when the binary discriminant form has degree n with all
/// roots simple over C. Smooth three-dimensional intersections of two
/// quadrics have this property; multiple roots signal a singular or
/// non-complete intersection and classification is refused.
pub fn validate_generic(pencil: &QuadricPencil) -> bool {
    pencil_determinant(pencil).is_generic()
}

/// How a degeneration parameter is reported: an exact rational value of t,
/// an isolating interval for an irrational value, or the parameter at
/// infinity (lambda0 = 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLocation {
    Rational(Rat),
    Interval { low: Rat, high: Rat },
    Infinity,
}

/// One degeneration parameter of the pencil on the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilRoot {
    pub location: RootLocation,
    pub multiplicity: usize,
}

impl PencilRoot {
    pub fn from_real_root(r: &RealRoot) -> Self {
        let location = match &r.exact {
            Some(v) => RootLocation::Rational(v.clone()),
            None => RootLocation::Interval {
                low: r.low.clone(),
                high: r.high.clone(),
            },
        };
        PencilRoot {
            location,
            multiplicity: 1,
        }
    }
}

/// All real degeneration parameters of a pencil whose real degenerations
/// are simple, finite ones sorted increasingly, the infinity marker last
/// when present.
pub fn real_pencil_roots(disc: &DiscriminantForm) -> Result<Vec<PencilRoot>, PencilError> {
    if !disc.is_real_generic() {
        return Err(PencilError::NotGeneric(
            "the discriminant has a multiple real root or a degree drop of two or more".into(),
        ));
    }
    let mut out: Vec<PencilRoot> = disc
        .real_roots()
        .iter()
        .map(PencilRoot::from_real_root)
        .collect();
    if disc.has_infinity_root() {
        out.push(PencilRoot {
            location: RootLocation::Infinity,
            multiplicity: 1,
        });
    }
    Ok(out)
}

impl std::fmt::Display for RootLocation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootLocation::Rational(v) => write!(f, "{v}"),
            RootLocation::Interval { low, high } => write!(f, "({low}, {high})"),
            RootLocation::Infinity => write!(f, "infinity"),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::forms::SymmetricForm;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn diag(vals: &[(i64, i64)]) -> SymmetricForm {
        SymmetricForm::diagonal(vals.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    fn linear(c0: Rat, c1: Rat) -> RatPoly {
        RatPoly::new(vec![c0, c1])
    }

    #[test]
    fn diagonal_product_expansion() {
        // det = (1+2t)(1+3t)(1+4t)(1+5t)(1+t/4)(-1-t), expanded by an
        // independent product of linear factors.
        let q0 = diag(&[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (-1, 1)]);
        let q1 = diag(&[(2, 1), (3, 1), (4, 1), (5, 1), (1, 4), (-1, 1)]);
        let p = QuadricPencil::new(q0, q1).unwrap();
        let disc = pencil_determinant(&p);

        let mut expect = RatPoly::constant(rat(1, 1));
        for (a, b) in [
            (rat(1, 1), rat(2, 1)),
            (rat(1, 1), rat(3, 1)),
            (rat(1, 1), rat(4, 1)),
            (rat(1, 1), rat(5, 1)),
            (rat(1, 1), rat(1, 4)),
            (rat(-1, 1), rat(-1, 1)),
        ] {
            expect = expect.mul(&linear(a, b));
        }
        assert_eq!(disc.poly, expect);
        assert!(!disc.has_infinity_root());
        assert!(disc.is_generic());
    }

    #[test]
    fn degenerate_second_form() {
        // Q1 = 0 gives the constant polynomial 1 and a double root at
        // infinity.
        let q0 = SymmetricForm::identity(2).unwrap();
        let q1 = diag(&[(0, 1), (0, 1)]);
        let p = QuadricPencil::new(q0, q1).unwrap();
        let disc = pencil_determinant(&p);
        assert_eq!(disc.poly, RatPoly::constant(rat(1, 1)));
        assert_eq!(disc.infinity_multiplicity(), 2);
        assert!(!disc.is_generic());
    }

    #[test]
    fn block_pencil_determinant() {
        // Three 2x2 blocks [[1,0],[0,-1]] + t[[0,1],[1,0]]; each block
        // contributes -1 - t^2, so det = -(1 + t^2)^3.
        let p = block_pencil();
        let disc = pencil_determinant(&p);
        let factor = RatPoly::new(vec![rat(-1, 1), rat(0, 1), rat(-1, 1)]);
        let expect = factor.mul(&factor).mul(&factor);
        assert_eq!(disc.poly, expect);
        // The complex roots +-i are triple, but nothing degenerates on the
        // real circle.
        assert!(!disc.is_generic());
        assert!(disc.is_real_generic());
        assert!(disc.real_roots().is_empty());
    }

    #[test]
    fn proportional_forms_fail_genericity() {
        let q0 = diag(&[(1, 1), (2, 1), (3, 1), (-1, 1), (1, 2), (1, 1)]);
        let q1 = SymmetricForm::diagonal(
            q0.rows().iter().enumerate().map(|(i, r)| r[i].clone() * rat(2, 1)).collect(),
        )
        .unwrap();
        let p = QuadricPencil::new(q0, q1).unwrap();
        assert!(!validate_generic(&p));
    }

    #[test]
    fn repeated_middle_coefficient_fails_genericity() {
        // Four equal diagonal entries put a multiplicity-4 root at -1/2.
        let q0 = diag(&[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (-1, 1)]);
        let q1 = diag(&[(2, 1), (2, 1), (2, 1), (2, 1), (1, 4), (-1, 1)]);
        let p = QuadricPencil::new(q0, q1).unwrap();
        assert!(!validate_generic(&p));
    }

    pub(crate) fn block_pencil() -> QuadricPencil {
        let z = rat(0, 1);
        let one = rat(1, 1);
        let mut q0 = vec![vec![z.clone(); 6]; 6];
        let mut q1 = vec![vec![z.clone(); 6]; 6];
        for b in 0..3 {
            let i = 2 * b;
            q0[i][i] = one.clone();
            q0[i + 1][i + 1] = -one.clone();
            q1[i][i + 1] = one.clone();
            q1[i + 1][i] = one.clone();
        }
        QuadricPencil::new(
            SymmetricForm::from_rows(q0).unwrap(),
            SymmetricForm::from_rows(q1).unwrap(),
        )
        .unwrap()
    }
}
