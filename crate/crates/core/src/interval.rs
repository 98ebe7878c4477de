//! Exact interval arithmetic over the rationals.
//!
//! Endpoints are rationals that stay dyadic under the operations the pipeline
//! performs (bisection, midpoints, ring operations on dyadics).  All
//! operations return enclosures: the exact image of any points of the operand
//! intervals lies in the result.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Strictly positive everywhere or strictly negative everywhere.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Overlap with positive-length or point intersection.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        if c.is_negative() {
            Interval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            Interval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    /// Tight power: for even exponents the straddling case is clamped at 0.
    pub fn pow(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::point(Rational::one());
        }
        let lo_p = crate::poly::pow_rat(&self.lo, n);
        let hi_p = crate::poly::pow_rat(&self.hi, n);
        if n % 2 == 1 {
            Interval { lo: lo_p, hi: hi_p }
        } else if !self.lo.is_negative() {
            Interval { lo: lo_p, hi: hi_p }
        } else if !self.hi.is_positive() {
            Interval { lo: hi_p, hi: lo_p }
        } else {
            let hi = if lo_p >= hi_p { lo_p } else { hi_p };
            Interval { lo: Rational::zero(), hi }
        }
    }

    /// Reciprocal; caller must guarantee the interval excludes zero.
    pub fn recip(&self) -> Interval {
        assert!(self.sign().is_some(), "recip of interval containing zero");
        Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }

    /// Largest absolute value attained over the interval.
    pub fn max_abs(&self) -> Rational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a >= b { a } else { b }
    }

    /// Smallest absolute value attained over the interval.
    pub fn min_abs(&self) -> Rational {
        if self.contains_zero() {
            Rational::zero()
        } else {
            let a = self.lo.abs();
            let b = self.hi.abs();
            if a <= b { a } else { b }
        }
    }
}

/// Polynomial in one distinguished variable whose coefficients are intervals;
/// index = degree.  Represents the family of all "instance" polynomials with
/// coefficients chosen pointwise from the intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPolynomial {
    coeffs: Vec<Interval>,
}

impl IntervalPolynomial {
    pub fn new(coeffs: Vec<Interval>) -> Self {
        IntervalPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Interval] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Interval {
        &self.coeffs[k]
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Drop leading coefficients that are exactly `[0,0]`.
    pub fn trimmed(&self) -> IntervalPolynomial {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 {
            let last = coeffs.last().unwrap();
            if last.lo().is_zero() && last.hi().is_zero() {
                coeffs.pop();
            } else {
                break;
            }
        }
        IntervalPolynomial { coeffs }
    }

    /// Interval enclosure of all instance values over the argument interval
    /// (Horner evaluation).
    pub fn evaluate(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluate every instance at an exact rational point.
    pub fn evaluate_point(&self, x: &Rational) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x).add(c);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_int};

    #[test]
    fn pow_even_straddle_clamps_at_zero() {
        let iv = Interval::new(rat_int(-1), rat_int(2));
        assert_eq!(iv.pow(2), Interval::new(rat_int(0), rat_int(4)));
        assert_eq!(iv.pow(3), Interval::new(rat_int(-1), rat_int(8)));
    }

    #[test]
    fn mul_enclosure() {
        let a = Interval::new(rat_int(-1), rat_int(2));
        let b = Interval::new(rat_int(3), rat_int(4));
        assert_eq!(a.mul(&b), Interval::new(rat_int(-4), rat_int(8)));
    }

    #[test]
    fn horner_evaluation_encloses_instances() {
        // p(z) = z^2 + c with c in [1, 2], evaluated over z in [0, 1/2].
        let p = IntervalPolynomial::new(vec![
            Interval::new(rat_int(1), rat_int(2)),
            Interval::point(rat_int(0)),
            Interval::point(rat_int(1)),
        ]);
        let v = p.evaluate(&Interval::new(rat_int(0), rat(1, 2)));
        assert!(v.contains(&rat(5, 4)));
        assert!(!v.contains_zero());
    }
}
