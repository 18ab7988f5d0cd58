//! Dense univariate polynomials over exact rationals, plus the Sturm-based
//! real-root isolation used to locate the degeneration points of a pencil.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Polynomial with rational coefficients, lowest degree first.
///
/// The coefficient vector never has trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect();
        RatPoly::new(coeffs)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            coeffs[i] += b;
        }
        RatPoly::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Remainder of `self` divided by `divisor` (euclidean division in Q[t]).
    pub fn rem(&self, divisor: &RatPoly) -> RatPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for i in 0..=dd {
                let sub = &divisor.coeffs[i] * &factor;
                rem[k + i] -= sub;
            }
            // The leading term cancels exactly.
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        RatPoly::new(rem)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            quot[k] = factor.clone();
            for i in 0..=dd {
                let sub = &divisor.coeffs[i] * &factor;
                rem[k + i] -= sub;
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        assert!(rem.is_empty() || rem.iter().all(|c| c.is_zero()), "inexact division");
        RatPoly::new(quot)
    }

    /// Squarefree part: same roots, all simple.
    pub fn squarefree_part(&self) -> RatPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.clone()
        } else {
            self.div_exact(&g)
        }
    }

    /// Monic gcd of two polynomials.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = Rat::one() / a.leading().unwrap().clone();
        a.scale(&inv)
    }

    /// True when the polynomial has no repeated complex roots.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Integer polynomial with the same roots and the same sign everywhere:
    /// clears denominators and divides by the content.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        ints.into_iter().map(|v| v / &content).collect()
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}")?;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if i == 1 {
                write!(f, "*t")?;
            } else if i > 1 {
                write!(f, "*t^{i}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A real root of a squarefree polynomial: either known exactly or isolated
/// in an open interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub low: Rat,
    pub high: Rat,
    pub exact: Option<Rat>,
}

impl RealRoot {
    fn exact(r: Rat) -> Self {
        RealRoot {
            low: r.clone(),
            high: r.clone(),
            exact: Some(r),
        }
    }
}

fn sign(v: &BigInt) -> i8 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Sturm chain over integer polynomials; each element is kept primitive
/// (dividing by a positive content leaves every sign unchanged).
struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

fn int_eval_sign(p: &[BigInt], x: &Rat) -> i8 {
    // p(n/d) has the sign of sum p_i n^i d^(deg-i).
    let n = x.numer();
    let d = x.denom();
    let deg = p.len() - 1;
    let mut npow = vec![BigInt::one()];
    let mut dpow = vec![BigInt::one()];
    for i in 1..=deg {
        npow.push(&npow[i - 1] * n);
        dpow.push(&dpow[i - 1] * d);
    }
    let mut acc = BigInt::zero();
    for (i, c) in p.iter().enumerate() {
        acc += c * &npow[i] * &dpow[deg - i];
    }
    sign(&acc)
}

fn int_derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

fn make_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        return p;
    }
    let mut content = BigInt::zero();
    for c in &p {
        content = content.gcd(c);
    }
    p.into_iter().map(|c| c / &content).collect()
}

/// Remainder of integer polynomials, computed fraction-free: returns a
/// positive-rational multiple of rem(a, b), reduced to primitive form.
fn int_rem_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    let mut steps = 0usize;
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let factor = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        for i in 0..=db {
            let sub = &b[i] * &factor;
            rem[k + i] -= sub;
        }
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
        steps += 1;
        if rem.is_empty() {
            return rem;
        }
    }
    // Each loop iteration multiplied the remainder by `lead`. If `lead` is
    // negative and the iteration count odd, the sign flipped; undo it.
    if lead.is_negative() && steps % 2 == 1 {
        for c in rem.iter_mut() {
            *c = -c.clone();
        }
    }
    make_primitive(rem)
}

impl SturmChain {
    fn new(p: &[BigInt]) -> Self {
        let mut chain = vec![make_primitive(p.to_vec())];
        let d = int_derivative(p);
        if !d.is_empty() {
            chain.push(make_primitive(d));
        }
        loop {
            let k = chain.len();
            if k < 2 || chain[k - 1].is_empty() {
                break;
            }
            if chain[k - 1].len() == 1 {
                break;
            }
            let r = int_rem_primitive(&chain[k - 2], &chain[k - 1]);
            if r.is_empty() {
                break;
            }
            let neg: Vec<BigInt> = r.into_iter().map(|c| -c).collect();
            chain.push(neg);
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let signs = self.chain.iter().map(|p| int_eval_sign(p, x));
        count_variations(signs)
    }

    /// Number of roots in the half-open interval (a, b].
    fn roots_in(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

fn count_variations<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Strict bound B with every complex root inside |z| < B (Cauchy bound).
pub fn root_bound(p: &RatPoly) -> Rat {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let mut max = Rat::zero();
    for c in p.coeffs() {
        let q = c.abs() / &lead;
        if q > max {
            max = q;
        }
    }
    max + Rat::one()
}

/// Divisors of |v|, or `None` when v does not fit in a machine word or is
/// too costly to factor by trial division. Used only as a fast path for
/// recognizing rational roots; callers fall back to isolating intervals.
fn bounded_divisors(v: &BigInt, limit: u64) -> Option<Vec<BigInt>> {
    let mut n: u64 = v.abs().try_into().ok()?;
    if n == 0 {
        return None;
    }
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut d = 2u64;
    let mut steps = 0u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        steps += 1;
        if steps > limit {
            return None;
        }
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    let mut divisors: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divisors = next;
        if divisors.len() > 1024 {
            return None;
        }
    }
    Some(divisors)
}

/// Extracts rational roots of a squarefree integer polynomial by the
/// rational-root test, returning (roots, deflated polynomial). Falls back to
/// returning no roots when the leading/constant coefficients resist cheap
/// factoring; callers then see those roots as isolating intervals instead.
fn extract_rational_roots(p: &RatPoly) -> (Vec<Rat>, RatPoly) {
    let ints = p.primitive_integer();
    if ints.len() <= 1 {
        return (Vec::new(), p.clone());
    }
    let mut poly = RatPoly::new(ints.iter().map(|c| Rat::from_integer(c.clone())).collect());
    let mut roots = Vec::new();
    // Zero roots first.
    while !poly.is_zero() && poly.coeffs()[0].is_zero() {
        roots.push(Rat::zero());
        let shifted = poly.coeffs()[1..].to_vec();
        poly = RatPoly::new(shifted);
    }
    if poly.degree().map_or(true, |d| d == 0) {
        return (roots, poly);
    }
    let lead = poly.leading().unwrap().numer().clone();
    let cons = poly.coeffs()[0].numer().clone();
    let (num_divs, den_divs) = match (bounded_divisors(&cons, 1 << 20), bounded_divisors(&lead, 1 << 20)) {
        (Some(a), Some(b)) => (a, b),
        _ => return (roots, poly),
    };
    if num_divs.len() * den_divs.len() > 4096 {
        return (roots, poly);
    }
    let mut candidates: Vec<Rat> = Vec::new();
    for n in &num_divs {
        for d in &den_divs {
            let c = Rat::new(n.clone(), d.clone());
            candidates.push(c.clone());
            candidates.push(-c);
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        if poly.degree().map_or(true, |d| d == 0) {
            break;
        }
        if poly.eval(&c).is_zero() {
            roots.push(c.clone());
            // Synthetic division by (t - c).
            let coeffs = poly.coeffs();
            let deg = coeffs.len() - 1;
            let mut q = vec![Rat::zero(); deg];
            let mut carry = coeffs[deg].clone();
            for i in (0..deg).rev() {
                q[i] = carry.clone();
                carry = &coeffs[i] + &carry * &c;
            }
            debug_assert!(carry.is_zero());
            poly = RatPoly::new(q);
        }
    }
    (roots, poly)
}

/// Isolates all real roots of a squarefree polynomial.
///
/// Returned roots are sorted increasingly, pairwise separated by strict gaps
/// (so a valid sample point exists between any two), and marked exact when a
/// rational root was recognized.
pub fn isolate_real_roots(p: &RatPoly) -> Vec<RealRoot> {
    if p.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let (rational_roots, remainder) = extract_rational_roots(p);
    let mut roots: Vec<RealRoot> = rational_roots.into_iter().map(RealRoot::exact).collect();

    if remainder.degree().map_or(false, |d| d >= 1) {
        let ints = remainder.primitive_integer();
        let chain = SturmChain::new(&ints);
        let bound = root_bound(&remainder);
        let lo = -bound.clone();
        let total = chain.roots_in(&lo, &bound);
        let mut stack = vec![(lo, bound, total)];
        while let Some((a, b, count)) = stack.pop() {
            if count == 0 {
                continue;
            }
            if count == 1 {
                roots.push(RealRoot {
                    low: a,
                    high: b,
                    exact: None,
                });
                continue;
            }
            let mid = (&a + &b) / Rat::from_integer(BigInt::from(2));
            if remainder.eval(&mid).is_zero() {
                // A rational root the divisor search missed; peel it off by
                // counting on both sides of a shrunken gap around it.
                roots.push(RealRoot::exact(mid.clone()));
                let eps = (&b - &a) / Rat::from_integer(BigInt::from(1u64 << 20));
                let m_lo = &mid - &eps;
                let m_hi = &mid + &eps;
                let left = chain.roots_in(&a, &m_lo);
                let right = chain.roots_in(&m_hi, &b);
                stack.push((a, m_lo, left));
                stack.push((m_hi, b, right));
            } else {
                let left = chain.roots_in(&a, &mid);
                stack.push((a, mid.clone(), left));
                stack.push((mid, b, count - left));
            }
        }
        // Refine interval roots until all roots (exact ones included) are
        // strictly separated.
        let exact_points: Vec<Rat> = roots.iter().filter_map(|r| r.exact.clone()).collect();
        for r in roots.iter_mut() {
            if r.exact.is_some() {
                continue;
            }
            loop {
                let overlaps = exact_points.iter().any(|p| *p >= r.low && *p <= r.high);
                if !overlaps {
                    break;
                }
                refine_once(&chain, r);
            }
        }
    }

    roots.sort_by(|x, y| x.low.cmp(&y.low));
    // Separate any touching isolating intervals.
    loop {
        let mut touched = false;
        for i in 1..roots.len() {
            if roots[i - 1].high >= roots[i].low {
                let (a, b) = roots.split_at_mut(i);
                let r1 = &mut a[i - 1];
                let r2 = &mut b[0];
                if r1.exact.is_none() {
                    refine_root(p, r1);
                }
                if r2.exact.is_none() {
                    refine_root(p, r2);
                }
                touched = true;
            }
        }
        if !touched {
            break;
        }
        roots.sort_by(|x, y| x.low.cmp(&y.low));
    }
    roots
}

fn refine_once(chain: &SturmChain, r: &mut RealRoot) {
    let mid = (&r.low + &r.high) / Rat::from_integer(BigInt::from(2));
    if chain.roots_in(&r.low, &mid) == 1 {
        r.high = mid;
    } else {
        r.low = mid;
    }
}

fn refine_root(p: &RatPoly, r: &mut RealRoot) {
    let mid = (&r.low + &r.high) / Rat::from_integer(BigInt::from(2));
    let v = p.eval(&mid);
    if v.is_zero() {
        *r = RealRoot::exact(mid);
        return;
    }
    let s_lo = p.eval(&r.low);
    if (s_lo.is_negative() && v.is_negative()) || (s_lo.is_positive() && v.is_positive()) {
        r.low = mid;
    } else {
        r.high = mid;
    }
}
