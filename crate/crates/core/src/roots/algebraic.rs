//! Real algebraic numbers: a square-free defining polynomial plus an
//! isolating interval, with exact comparison and sign evaluation.
//!
//! Equality is decided through the gcd of the defining polynomials and
//! interval overlap, never by numeric tolerance.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{bisect_isolating, isolate, UPoly};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::oracle::{sturm_count_interval, sturm_sequence};
use crate::poly::Rational;

/// A real algebraic number.
#[derive(Debug, Clone)]
pub struct AlgebraicNumber {
    /// Square-free defining polynomial with this number among its roots.
    defining: UPoly,
    /// Isolating interval: contains exactly this root, endpoints non-roots.
    interval: Interval,
}

impl AlgebraicNumber {
    /// Wrap an isolating interval produced for `defining` (which must be
    /// square-free and have exactly one root in the interval).
    pub fn new(defining: UPoly, interval: Interval) -> Result<Self> {
        if defining.is_zero() || defining.degree() == 0 {
            return Err(Error::InvalidInput("defining polynomial must have positive degree".into()));
        }
        if !defining.is_squarefree() {
            return Err(Error::InvalidInput("defining polynomial must be square-free".into()));
        }
        let a = AlgebraicNumber { defining, interval };
        if !a.contains_exactly_one_root() {
            return Err(Error::InvalidInput("interval does not isolate exactly one root".into()));
        }
        Ok(a)
    }

    fn contains_exactly_one_root(&self) -> bool {
        if self.defining.sign_at(self.interval.lo()) == 0
            || self.defining.sign_at(self.interval.hi()) == 0
        {
            return false;
        }
        super::descartes_variations(&self.defining, self.interval.lo(), self.interval.hi()) == 1
    }

    pub fn from_rational(r: Rational) -> Self {
        let defining = UPoly::linear_root(&r);
        let one = Rational::one();
        let interval = Interval::new(&r - &one, &r + &one);
        AlgebraicNumber { defining, interval }
    }

    /// All real roots of a square-free polynomial, in increasing order.
    pub fn roots_of(p: &UPoly) -> Result<Vec<AlgebraicNumber>> {
        Ok(isolate(p)?
            .into_intervals()
            .into_iter()
            .map(|interval| AlgebraicNumber { defining: p.clone(), interval })
            .collect())
    }

    pub fn defining(&self) -> &UPoly {
        &self.defining
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    /// Exact rational value, when the root can be read off the defining
    /// polynomial (linear factor over the isolating interval).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.defining.degree() == 1 {
            let c = self.defining.coeffs();
            return Some(-(&c[0] / &c[1]));
        }
        // A rational midpoint that happens to be the root.
        let m = self.interval.midpoint();
        if self.defining.sign_at(&m) == 0 {
            return Some(m);
        }
        None
    }

    /// Shrink the isolating interval to width at most `2^-width_exponent`.
    /// The refined interval is contained in the current one.
    pub fn refine(&self, width_exponent: u32) -> AlgebraicNumber {
        let target = Rational::new(BigInt::one(), BigInt::from(2).pow(width_exponent));
        let mut iv = self.interval.clone();
        while iv.width() > target {
            iv = bisect_isolating(&self.defining, &iv);
        }
        AlgebraicNumber { defining: self.defining.clone(), interval: iv }
    }

    /// One bisection step (used by callers that interleave refinement with
    /// other certificates).
    pub fn refine_step(&self) -> AlgebraicNumber {
        AlgebraicNumber {
            defining: self.defining.clone(),
            interval: bisect_isolating(&self.defining, &self.interval),
        }
    }

    /// Total order on the reals; `Equal` iff the two numbers coincide,
    /// decided by gcd of the defining polynomials plus interval overlap.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.interval.hi() < b.interval.lo() {
                return Ordering::Less;
            }
            if b.interval.hi() < a.interval.lo() {
                return Ordering::Greater;
            }
            // Overlapping: equal iff the gcd has a root in the intersection.
            let g = a.defining.gcd(&b.defining);
            if g.degree() >= 1 {
                if let Some(common) = a.interval.intersect(&b.interval) {
                    let seq = sturm_sequence(g.coeffs());
                    // Endpoints of the intersection are interior to one of the
                    // isolating intervals, hence not roots of g.
                    if sturm_count_interval(&seq, common.lo(), common.hi()) == 1 {
                        return Ordering::Equal;
                    }
                }
            }
            a = a.refine_step();
            b = b.refine_step();
        }
    }

    pub fn is_equal(&self, other: &AlgebraicNumber) -> bool {
        self.compare(other) == Ordering::Equal
    }

    /// Compare against an exact rational.
    pub fn compare_rational(&self, r: &Rational) -> Ordering {
        if self.defining.sign_at(r) == 0 && self.interval.contains(r) {
            return Ordering::Equal;
        }
        let mut iv = self.interval.clone();
        loop {
            if iv.hi() < r {
                return Ordering::Less;
            }
            if r < iv.lo() {
                return Ordering::Greater;
            }
            iv = bisect_isolating(&self.defining, &iv);
        }
    }
}

/// Exact sign of `w` at the algebraic number: 0 when `w(alpha) = 0` (decided
/// via gcd with the defining polynomial), otherwise the sign obtained by
/// refining until interval evaluation is conclusive.
pub fn sign_at_algebraic(w: &UPoly, alpha: &AlgebraicNumber) -> i32 {
    if w.is_zero() {
        return 0;
    }
    if w.degree() == 0 {
        return w.sign_at(&Rational::zero());
    }
    let g = alpha.defining().gcd(w);
    if g.degree() >= 1 {
        let seq = sturm_sequence(g.coeffs());
        let iv = alpha.interval();
        // Interval endpoints are not roots of the defining polynomial; g
        // divides it, so they are not roots of g either.
        if sturm_count_interval(&seq, iv.lo(), iv.hi()) == 1 {
            return 0;
        }
    }
    // w(alpha) != 0: refine until the enclosure excludes zero.
    let mut iv = alpha.interval().clone();
    loop {
        let enc = w.evaluate_interval(&iv);
        if let Some(s) = enc.sign() {
            return s;
        }
        iv = bisect_isolating(alpha.defining(), &iv);
    }
}

/// A fiber abscissa: exact rational or real algebraic.
#[derive(Debug, Clone)]
pub enum XPoint {
    Rational(Rational),
    Algebraic(AlgebraicNumber),
}

impl XPoint {
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            XPoint::Rational(r) => Some(r.clone()),
            XPoint::Algebraic(a) => a.as_rational(),
        }
    }

    /// An interval containing the point.
    pub fn enclosure(&self) -> Interval {
        match self {
            XPoint::Rational(r) => Interval::point(r.clone()),
            XPoint::Algebraic(a) => a.interval().clone(),
        }
    }

    pub fn compare(&self, other: &XPoint) -> Ordering {
        match (self, other) {
            (XPoint::Rational(a), XPoint::Rational(b)) => a.cmp(b),
            (XPoint::Rational(a), XPoint::Algebraic(b)) => b.compare_rational(a).reverse(),
            (XPoint::Algebraic(a), XPoint::Rational(b)) => a.compare_rational(b),
            (XPoint::Algebraic(a), XPoint::Algebraic(b)) => a.compare(b),
        }
    }

    /// Exact sign of the univariate `w` at this point.
    pub fn sign_of(&self, w: &UPoly) -> i32 {
        match self {
            XPoint::Rational(r) => w.sign_at(r),
            XPoint::Algebraic(a) => sign_at_algebraic(w, a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat, rat_int, Var};

    fn up(s: &str) -> UPoly {
        UPoly::from_polynomial(&parse_polynomial(s).unwrap(), Var::X).unwrap()
    }

    fn sqrt2() -> AlgebraicNumber {
        AlgebraicNumber::new(up("x^2 - 2"), Interval::new(rat_int(1), rat_int(2))).unwrap()
    }

    #[test]
    fn compare_examples() {
        // sqrt(2) < 3/2 (root of 2x - 3).
        let three_halves = AlgebraicNumber::from_rational(rat(3, 2));
        assert_eq!(sqrt2().compare(&three_halves), Ordering::Less);

        // Root of x^3 - 2x in [1, 2] is sqrt(2) as well.
        let other =
            AlgebraicNumber::new(up("x^3 - 2*x"), Interval::new(rat_int(1), rat_int(2))).unwrap();
        assert_eq!(sqrt2().compare(&other), Ordering::Equal);

        let one = AlgebraicNumber::from_rational(rat_int(1));
        let two = AlgebraicNumber::from_rational(rat_int(2));
        assert_eq!(one.compare(&two), Ordering::Less);
        assert_eq!(two.compare(&one), Ordering::Greater);
        assert_eq!(one.compare(&one), Ordering::Equal);
    }

    #[test]
    fn refine_examples() {
        let a = sqrt2().refine(10);
        assert!(a.interval().width() <= rat(1, 1024));
        assert!(sqrt2().interval().contains_interval(a.interval()));

        // Rational root of x - 3 stays pinned.
        let b = AlgebraicNumber::from_rational(rat_int(3)).refine(20);
        assert!(b.interval().contains(&rat_int(3)));

        let c = AlgebraicNumber::new(up("x^3 - x"), Interval::new(rat_int(-2), rat(-1, 2)))
            .unwrap()
            .refine(20);
        assert!(c.interval().contains(&rat_int(-1)));
        assert!(c.interval().width() <= Rational::new(BigInt::one(), BigInt::from(1 << 20)));
    }

    #[test]
    fn sign_at_examples() {
        let a = sqrt2();
        // x^2 - 2 vanishes at sqrt(2).
        assert_eq!(sign_at_algebraic(&up("x^2 - 2"), &a), 0);
        // x^3 - 2x = x(x^2 - 2) vanishes too.
        assert_eq!(sign_at_algebraic(&up("x^3 - 2*x"), &a), 0);
        assert_eq!(sign_at_algebraic(&up("x - 2"), &a), -1);
        assert_eq!(sign_at_algebraic(&up("x"), &a), 1);
        assert_eq!(sign_at_algebraic(&up("3"), &a), 1);
    }

    #[test]
    fn compare_rational_on_root() {
        let half = AlgebraicNumber::from_rational(rat(1, 2));
        assert_eq!(half.compare_rational(&rat(1, 2)), Ordering::Equal);
        assert_eq!(half.compare_rational(&rat(1, 3)), Ordering::Greater);
    }
}
