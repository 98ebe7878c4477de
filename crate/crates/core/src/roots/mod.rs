//! Real-root isolation and real algebraic numbers.
//!
//! Isolation uses Descartes' rule of signs with interval bisection on exact
//! rationals; Sturm sequences exist in [`crate::oracle`] purely as the
//! verification oracle.  Returned intervals are closed, pairwise disjoint,
//! strictly increasing, and no endpoint is a root (endpoints that land on a
//! root are perturbed inward by halving).

mod algebraic;
mod counting;
mod interval_roots;
mod upoly;

pub use algebraic::{sign_at_algebraic, AlgebraicNumber, XPoint};
pub use counting::{SpecializedChain, SturmHabichtChain};
pub use interval_roots::isolate_interval_poly;
pub use upoly::UPoly;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::poly::{Polynomial, Rational, Var};

/// Ordered, pairwise-disjoint isolating intervals for the distinct real roots
/// of a square-free polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootList {
    intervals: Vec<Interval>,
}

impl RootList {
    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn into_intervals(self) -> Vec<Interval> {
        self.intervals
    }
}

fn half(r: &Rational) -> Rational {
    r / BigRational::from_integer(2.into())
}

/// Sign variations of the Descartes test polynomial for the open interval
/// `(a, b)`: an upper bound on the number of roots there, exact when 0 or 1.
pub(crate) fn descartes_variations(p: &UPoly, a: &Rational, b: &Rational) -> usize {
    debug_assert!(a < b);
    let shifted = p.compose_shift(a); // q(u) = p(a + u)
    let scaled = shifted.compose_scale(&(b - a)); // roots in (0, 1)
    let t = scaled.reversed().compose_shift(&Rational::from_integer(1.into()));
    t.coeff_sign_variations()
}

/// One bisection step on an isolating interval with a sign change; returns a
/// strictly smaller isolating interval for the same root, endpoints non-root.
pub(crate) fn bisect_isolating(p: &UPoly, iv: &Interval) -> Interval {
    let m = iv.midpoint();
    let sm = p.sign_at(&m);
    if sm == 0 {
        // The midpoint is the root itself: take a quarter-width window.
        let q = half(&half(&iv.width()));
        return Interval::new(&m - &q, &m + &q);
    }
    let sl = p.sign_at(iv.lo());
    debug_assert_ne!(sl, 0);
    if sl != sm {
        Interval::new(iv.lo().clone(), m)
    } else {
        Interval::new(m, iv.hi().clone())
    }
}

/// Isolate the distinct real roots of a square-free univariate polynomial.
pub fn isolate(p: &UPoly) -> Result<RootList> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot isolate roots of the zero polynomial".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::InvalidInput(
            "root isolation requires a square-free polynomial; take squarefree_part first".into(),
        ));
    }
    if p.degree() == 0 {
        return Ok(RootList { intervals: Vec::new() });
    }

    let bound = p.root_bound_pow2();
    let mut out: Vec<Interval> = Vec::new();
    let mut stack: Vec<Interval> = vec![Interval::new(-bound.clone(), bound)];
    while let Some(iv) = stack.pop() {
        match descartes_variations(p, iv.lo(), iv.hi()) {
            0 => {}
            1 => out.push(iv),
            _ => {
                let m = iv.midpoint();
                if p.sign_at(&m) == 0 {
                    // Exact root at the midpoint: shrink a window around it
                    // until it isolates, then recurse on the flanks.
                    let mut delta = half(&half(&iv.width()));
                    loop {
                        let lo = &m - &delta;
                        let hi = &m + &delta;
                        if p.sign_at(&lo) != 0
                            && p.sign_at(&hi) != 0
                            && descartes_variations(p, &lo, &hi) == 1
                        {
                            out.push(Interval::new(lo.clone(), hi.clone()));
                            stack.push(Interval::new(iv.lo().clone(), lo));
                            stack.push(Interval::new(hi, iv.hi().clone()));
                            break;
                        }
                        delta = half(&delta);
                    }
                } else {
                    stack.push(Interval::new(iv.lo().clone(), m.clone()));
                    stack.push(Interval::new(m, iv.hi().clone()));
                }
            }
        }
    }
    out.sort_by(|a, b| a.lo().cmp(b.lo()));
    // Sibling intervals may share an endpoint; shrink until pairwise disjoint.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..out.len().saturating_sub(1) {
            if out[i].hi() >= out[i + 1].lo() {
                out[i] = bisect_isolating(p, &out[i]);
                out[i + 1] = bisect_isolating(p, &out[i + 1]);
                changed = true;
            }
        }
    }
    Ok(RootList { intervals: out })
}

/// Isolate the real roots of a square-free `p` viewed as univariate in `v`.
pub fn isolate_polynomial(p: &Polynomial, v: Var) -> Result<RootList> {
    isolate(&UPoly::from_polynomial(p, v)?)
}
