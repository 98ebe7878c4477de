//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! The variable universe is fixed to `{x, y, z, s}`: `x, y, z` are the ambient
//! coordinates and `s` is reserved for shear parameters.  A polynomial is a
//! map from exponent vectors to nonzero rational coefficients; the zero
//! polynomial is the empty map.  Term order is lexicographic with
//! `x < y < z < s` (the exponent of `s` is compared first), which fixes the
//! leading term used for sign normalization.

mod gcd;
mod resultant;
mod text;

pub use gcd::{content_and_primitive, exact_div, gcd, is_squarefree, squarefree_part};
pub use resultant::{principal_subresultant_coefficients, resultant, subresultant, subresultant_chain};
pub use text::parse_polynomial;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalPolynomial};

/// Exact rational scalar used for all coefficients.
pub type Rational = BigRational;

/// Shorthand for a rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// The fixed variable universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    S,
}

impl Var {
    /// All variables in index order.
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::S];

    /// Position of the variable in an exponent vector.
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
            Var::S => 3,
        }
    }

    /// One-letter name.
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::S => "s",
        }
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over `(x, y, z, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [u16; 4]);

impl Mono {
    pub const ONE: Mono = Mono([0; 4]);

    pub fn var(v: Var) -> Mono {
        let mut e = [0u16; 4];
        e[v.index()] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0u16; 4];
        for i in 0..4 {
            e[i] = self.0[i].checked_add(other.0[i]).expect("exponent overflow");
        }
        Mono(e)
    }

    fn divides(&self, other: &Mono) -> bool {
        (0..4).all(|i| self.0[i] <= other.0[i])
    }

    fn div(&self, other: &Mono) -> Mono {
        let mut e = [0u16; 4];
        for i in 0..4 {
            e[i] = self.0[i] - other.0[i];
        }
        Mono(e)
    }
}

// Lexicographic order with x < y < z < s: the most significant slot is s.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = [self.0[3], self.0[2], self.0[1], self.0[0]];
        let b = [other.0[3], other.0[2], other.0[1], other.0[0]];
        a.cmp(&b)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Invariant: no zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Mono, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        Polynomial { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Polynomial::constant(rat_int(n))
    }

    pub fn var(v: Var) -> Self {
        Polynomial::monomial(Rational::one(), Mono::var(v))
    }

    pub fn monomial(c: Rational, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Build from `(coefficient, [ex, ey, ez, es])` pairs; repeated monomials
    /// are accumulated and zero results dropped.
    pub fn from_terms(items: impl IntoIterator<Item = (Rational, [u16; 4])>) -> Self {
        let mut p = Polynomial::zero();
        for (c, e) in items {
            p.add_term(c, Mono(e));
        }
        p
    }

    fn add_term(&mut self, c: Rational, m: Mono) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::ONE))
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::ONE) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Degree in `v`; the zero polynomial and polynomials free of `v` have
    /// degree 0 here (callers that care about the zero polynomial check
    /// `is_zero` separately).
    pub fn degree(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Variables actually occurring.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|m| m.exponent(*v) > 0))
            .collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Coefficient of `v^k`, a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u16) -> Polynomial {
        let mut out = Polynomial::zero();
        let vi = v.index();
        for (m, c) in &self.terms {
            if m.0[vi] == k {
                let mut e = m.0;
                e[vi] = 0;
                out.add_term(c.clone(), Mono(e));
            }
        }
        out
    }

    /// All coefficients with respect to `v`, index = degree in `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Polynomial> {
        let d = self.degree(v) as usize;
        let mut out = vec![Polynomial::zero(); d + 1];
        let vi = v.index();
        for (m, c) in &self.terms {
            let k = m.0[vi] as usize;
            let mut e = m.0;
            e[vi] = 0;
            out[k].add_term(c.clone(), Mono(e));
        }
        out
    }

    /// Rebuild from coefficients with respect to `v` (inverse of `coeffs_in`).
    pub fn from_coeffs_in(v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        let vi = v.index();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                debug_assert_eq!(m.0[vi], 0);
                let mut e = m.0;
                e[vi] = u16::try_from(k).expect("degree overflow");
                out.add_term(a.clone(), Mono(e));
            }
        }
        out
    }

    /// Leading coefficient with respect to `v` (a polynomial in the other
    /// variables); the zero polynomial has leading coefficient 0.
    pub fn leading_coeff(&self, v: Var) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        self.coeff_of(v, self.degree(v))
    }

    /// Leading term in the global lex order.
    pub fn lex_leading(&self) -> Option<(&Mono, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Partial derivative.
    pub fn derivative(&self, v: Var) -> Polynomial {
        let vi = v.index();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.0[vi];
            if e > 0 {
                let mut me = m.0;
                me[vi] = e - 1;
                out.add_term(c * Rational::from(BigInt::from(e)), Mono(me));
            }
        }
        out
    }

    /// Substitute `target := target + amount * source` (a shear of the
    /// coordinate system).  Total degree is preserved.
    pub fn shear(&self, target: Var, source: Var, amount: &Rational) -> Polynomial {
        assert_ne!(target, source, "shear requires distinct variables");
        if amount.is_zero() {
            return self.clone();
        }
        let ti = target.index();
        let si = source.index();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let n = m.0[ti];
            // (t + a*u)^n expanded by the binomial theorem.
            let mut binom = Rational::one();
            let mut apow = Rational::one();
            for k in 0..=n {
                let mut e = m.0;
                e[ti] = n - k;
                e[si] = e[si].checked_add(k).expect("exponent overflow");
                out.add_term(c * &binom * &apow, Mono(e));
                if k < n {
                    binom = binom * Rational::from(BigInt::from(n - k))
                        / Rational::from(BigInt::from(k + 1));
                    apow *= amount;
                }
            }
        }
        out
    }

    /// Substitute `target := target + s * source` with the formal shear
    /// parameter `s` left symbolic.
    pub fn shear_symbolic(&self, target: Var, source: Var) -> Polynomial {
        assert_ne!(target, source);
        assert_ne!(target, Var::S);
        assert_ne!(source, Var::S);
        let replacement = &Polynomial::var(target)
            + &(&Polynomial::var(Var::S) * &Polynomial::var(source));
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                let base = if v == target { replacement.clone() } else { Polynomial::var(v) };
                term = &term * &base.pow(e as u32);
            }
            out = &out + &term;
        }
        out
    }

    /// Substitute exact rational values for some variables.
    pub fn evaluate_partial(&self, bindings: &[(Var, Rational)]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = m.0;
            for (v, val) in bindings {
                let k = e[v.index()];
                if k > 0 {
                    coeff *= pow_rat(val, k as u32);
                    e[v.index()] = 0;
                }
            }
            out.add_term(coeff, Mono(e));
        }
        out
    }

    /// Full evaluation at a rational point; all variables of `self` must be
    /// bound.
    pub fn evaluate(&self, bindings: &[(Var, Rational)]) -> Rational {
        let r = self.evaluate_partial(bindings);
        r.as_constant().expect("evaluate: unbound variable remains")
    }

    /// Enclose every coefficient of `self` viewed as a polynomial in `free`
    /// over the box: coefficient `k` of the result contains the exact `k`-th
    /// coefficient of the specialization at any point of the box.
    pub fn interval_evaluate(&self, box_: &[(Var, Interval)], free: Var) -> IntervalPolynomial {
        let coeffs = self.coeffs_in(free);
        let enclosures = coeffs
            .iter()
            .map(|c| {
                let mut acc = Interval::point(Rational::zero());
                for (m, coeff) in &c.terms {
                    let mut term = Interval::point(coeff.clone());
                    for (v, iv) in box_ {
                        let e = m.exponent(*v);
                        if e > 0 {
                            term = term.mul(&iv.pow(e as u32));
                        }
                    }
                    debug_assert!(
                        Var::ALL
                            .iter()
                            .all(|v| m.exponent(*v) == 0
                                || *v == free
                                || box_.iter().any(|(b, _)| b == v)),
                        "interval_evaluate: unbound variable"
                    );
                    acc = acc.add(&term);
                }
                acc
            })
            .collect();
        IntervalPolynomial::new(enclosures)
    }

    /// Scale by a rational constant.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Content over the integers: the positive rational `c` such that
    /// `self / c` has coprime integer coefficients.  Zero for the zero
    /// polynomial.
    pub fn rational_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Primitive integer form with positive lex-leading coefficient.
    /// Constants normalize to 1; zero stays zero.
    pub fn normalize(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let content = self.rational_content();
        let mut p = self.scale(&content.recip());
        if let Some((_, lc)) = p.lex_leading() {
            if lc.is_negative() {
                p = -&p;
            }
        }
        p
    }

    /// Check the defining pair of a curve for a shared component.
    pub fn gcd_is_constant(p: &Polynomial, q: &Polynomial) -> Result<bool> {
        Ok(gcd(p, q)?.is_constant())
    }
}

pub(crate) fn pow_rat(a: &Rational, n: u32) -> Rational {
    let mut result = Rational::one();
    let mut base = a.clone();
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            result *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    result
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), *m);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), *m);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        // Iterate the smaller operand on the outside.
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Polynomial::zero();
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(c1 * c2, m1.mul(m2));
            }
        }
        out
    }
}

/// Pseudo-remainder of `a` by `b` with respect to `v`:
/// `lc(b)^(deg a - deg b + 1) * a = q*b + r` with `deg_v r < deg_v b`.
pub fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: Var) -> Polynomial {
    pseudo_divrem(a, b, v).1
}

/// Pseudo-quotient and pseudo-remainder (see [`pseudo_rem`]).
pub fn pseudo_divrem(a: &Polynomial, b: &Polynomial, v: Var) -> (Polynomial, Polynomial) {
    assert!(!b.is_zero(), "pseudo-division by zero");
    let db = b.degree(v);
    let lb = b.leading_coeff(v);
    let mut r = a.clone();
    let mut q = Polynomial::zero();
    let da = a.degree(v);
    if r.is_zero() || da < db {
        return (q, r);
    }
    let mut steps = da - db + 1;
    while !r.is_zero() && r.degree(v) >= db {
        let dr = r.degree(v);
        let lr = r.leading_coeff(v);
        let shift = Polynomial::monomial(Rational::one(), {
            let mut e = [0u16; 4];
            e[v.index()] = dr - db;
            Mono(e)
        });
        let t = &lr * &shift;
        q = &(&q * &lb) + &t;
        r = &(&r * &lb) - &(&t * b);
        steps -= 1;
        debug_assert!(r.is_zero() || r.degree(v) < dr);
    }
    // Pad the multiplier so the identity uses exactly lc(b)^(da-db+1).
    for _ in 0..steps {
        q = &q * &lb;
        r = &r * &lb;
    }
    (q, r)
}

/// Errors if both inputs are identically zero (shared by gcd/resultant).
pub(crate) fn require_not_both_zero(p: &Polynomial, q: &Polynomial) -> Result<()> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::InvalidInput("both polynomials are zero".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_polynomial as parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("y^2 - x").derivative(Var::Y), p("2*y"));
        assert_eq!(p("7").derivative(Var::X), Polynomial::zero());
        assert_eq!(p("x^2*y^3").derivative(Var::Y), p("3*x^2*y^2"));
    }

    #[test]
    fn shear_examples() {
        assert_eq!(p("y").shear(Var::Y, Var::Z, &rat_int(1)), p("y + z"));
        assert_eq!(
            p("x^2+y^2+z^2-1").shear(Var::Y, Var::Z, &rat_int(1)),
            p("x^2 + (y+z)^2 + z^2 - 1")
        );
        let q = p("x^3*y - 2*z");
        let s = rat_int(5);
        assert_eq!(q.shear(Var::Y, Var::Z, &s).shear(Var::Y, Var::Z, &(-s)), q);
    }

    #[test]
    fn shear_preserves_total_degree() {
        let q = p("x^3*y - 2*z + x*y*z");
        assert_eq!(q.shear(Var::X, Var::Z, &rat(7, 3)).total_degree(), q.total_degree());
    }

    #[test]
    fn evaluate_partial_examples() {
        assert_eq!(p("x*y*z").evaluate_partial(&[(Var::X, rat_int(2))]), p("2*y*z"));
        assert_eq!(p("x^2+y^2-1").evaluate_partial(&[(Var::X, rat_int(1))]), p("y^2"));
        assert_eq!(
            p("x^2+y^2+z^2-1").evaluate_partial(&[(Var::X, rat_int(0)), (Var::Y, rat_int(0))]),
            p("z^2 - 1")
        );
    }

    #[test]
    fn normalize_is_primitive_positive() {
        let q = p("4*x^2 - 8").scale(&rat(1, 6));
        let n = q.normalize();
        assert_eq!(n, p("x^2 - 2"));
        let m = p("0 - 3*x");
        assert_eq!(m.normalize(), p("x"));
        assert_eq!(Polynomial::zero().normalize(), Polynomial::zero());
    }

    #[test]
    fn pseudo_division_identity() {
        let a = p("x^3*y^2 + 2*y - x");
        let b = p("x*y - 1");
        let (q, r) = pseudo_divrem(&a, &b, Var::Y);
        let lb = b.leading_coeff(Var::Y);
        let lhs = &a * &lb.pow((a.degree(Var::Y) - b.degree(Var::Y) + 1) as u32);
        assert_eq!(lhs, &(&q * &b) + &r);
        assert!(r.degree(Var::Y) < b.degree(Var::Y) || r.is_zero());
    }

    #[test]
    fn interval_evaluate_examples() {
        // z - x over x in [1,2]: coefficients [-2,-1], [1,1].
        let q = p("z - x");
        let iv = q.interval_evaluate(&[(Var::X, Interval::new(rat_int(1), rat_int(2)))], Var::Z);
        assert_eq!(iv.coeff(0), &Interval::new(rat_int(-2), rat_int(-1)));
        assert_eq!(iv.coeff(1), &Interval::new(rat_int(1), rat_int(1)));

        // Identical terms cancel symbolically before evaluation.
        let q = p("z^2 + x - x");
        let iv = q.interval_evaluate(&[(Var::X, Interval::new(rat_int(-5), rat_int(5)))], Var::Z);
        assert_eq!(iv.coeff(0), &Interval::point(rat_int(0)));
        assert_eq!(iv.coeff(2), &Interval::point(rat_int(1)));

        // x^2 - x over [0,1], constant in z: naive interval arithmetic gives [-1,1].
        let q = p("x^2 - x");
        let iv = q.interval_evaluate(&[(Var::X, Interval::new(rat_int(0), rat_int(1)))], Var::Z);
        assert_eq!(iv.coeff(0), &Interval::new(rat_int(-1), rat_int(1)));
    }
}
