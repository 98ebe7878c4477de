//! Root isolation for interval-coefficient polynomials.
//!
//! The contract is a covering, not an isolation: every real root of every
//! instance polynomial (coefficients chosen pointwise from the intervals)
//! lies in the union of the returned candidates, which are pairwise
//! disjoint.  Candidates may be spurious; downstream certification deletes
//! those.  Roots of the endpoint and midpoint instances seed the subdivision,
//! and interval sign evaluation prunes root-free regions.

use num_rational::BigRational;
use num_traits::One;

use super::{isolate, UPoly};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalPolynomial};
use crate::poly::Rational;

const MAX_SUBDIVISION_DEPTH: u32 = 14;

/// Candidate intervals covering every real root of every instance of `p`.
///
/// Errors with [`Error::DegreeAmbiguous`] when the leading coefficient
/// interval straddles zero even after trimming exact-zero leaders.
pub fn isolate_interval_poly(p: &IntervalPolynomial) -> Result<Vec<Interval>> {
    let t = p.trimmed();
    if t.degree_bound() == 0 {
        // Constant instances: no roots if the interval excludes zero; if it
        // contains zero some instance is identically zero, which no finite
        // candidate list can cover.
        return if t.coeff(0).contains_zero() {
            Err(Error::DegreeAmbiguous)
        } else {
            Ok(Vec::new())
        };
    }
    let lead = t.coeff(t.degree_bound());
    if lead.contains_zero() {
        return Err(Error::DegreeAmbiguous);
    }

    // Root bound valid for every instance.
    let lc_min = lead.min_abs();
    let mut max_ratio = Rational::from_integer(0.into());
    for k in 0..t.degree_bound() {
        let r = t.coeff(k).max_abs() / &lc_min;
        if r > max_ratio {
            max_ratio = r;
        }
    }
    let bound_raw = max_ratio + Rational::one();
    let mut bound = Rational::one();
    let two = BigRational::from_integer(2.into());
    while bound < bound_raw {
        bound *= &two;
    }

    // Breakpoints from instance roots guide the initial partition.
    let mut cuts: Vec<Rational> = vec![-bound.clone(), bound.clone()];
    for instance in [instance_poly(&t, Lo), instance_poly(&t, Hi), instance_poly(&t, Mid)] {
        let sf = instance.squarefree_part();
        if sf.degree() >= 1 {
            if let Ok(roots) = isolate(&sf) {
                for iv in roots.intervals() {
                    if iv.lo() > &-bound.clone() && iv.lo() < &bound {
                        cuts.push(iv.lo().clone());
                    }
                    if iv.hi() > &-bound.clone() && iv.hi() < &bound {
                        cuts.push(iv.hi().clone());
                    }
                }
            }
        }
    }
    cuts.sort();
    cuts.dedup();

    // Subdivide each segment, pruning by interval evaluation.
    let mut kept: Vec<Interval> = Vec::new();
    for w in cuts.windows(2) {
        let seg = Interval::new(w[0].clone(), w[1].clone());
        subdivide(&t, seg, 0, &mut kept);
    }

    // Merge touching/overlapping survivors into maximal candidates.
    kept.sort_by(|a, b| a.lo().cmp(b.lo()));
    let mut out: Vec<Interval> = Vec::new();
    for iv in kept {
        match out.last_mut() {
            Some(last) if last.hi() >= iv.lo() => *last = last.hull(&iv),
            _ => out.push(iv),
        }
    }
    Ok(out)
}

enum Pick {
    Lo,
    Hi,
    Mid,
}
use Pick::{Hi, Lo, Mid};

fn instance_poly(p: &IntervalPolynomial, pick: Pick) -> UPoly {
    UPoly::new(
        p.coeffs()
            .iter()
            .map(|iv| match pick {
                Lo => iv.lo().clone(),
                Hi => iv.hi().clone(),
                Mid => iv.midpoint(),
            })
            .collect(),
    )
}

fn subdivide(p: &IntervalPolynomial, seg: Interval, depth: u32, kept: &mut Vec<Interval>) {
    let value = p.evaluate(&seg);
    if value.sign().is_some() {
        return; // certified root-free for every instance
    }
    if depth >= MAX_SUBDIVISION_DEPTH {
        kept.push(seg);
        return;
    }
    let m = seg.midpoint();
    let left = Interval::new(seg.lo().clone(), m.clone());
    let right = Interval::new(m, seg.hi().clone());
    subdivide(p, left, depth + 1, kept);
    subdivide(p, right, depth + 1, kept);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_int};

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(rat_int(a), rat_int(b))
    }

    #[test]
    fn linear_with_interval_constant() {
        // z - [0,1]: one candidate containing [0,1].
        let p = IntervalPolynomial::new(vec![iv(-1, 0), Interval::point(rat_int(1))]);
        let c = isolate_interval_poly(&p).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].contains(&rat_int(0)));
        assert!(c[0].contains(&rat_int(1)));
    }

    #[test]
    fn positive_definite_is_empty() {
        // z^2 + [1,2]: no real roots for any instance.
        let p = IntervalPolynomial::new(vec![
            iv(1, 2),
            Interval::point(rat_int(0)),
            Interval::point(rat_int(1)),
        ]);
        assert!(isolate_interval_poly(&p).unwrap().is_empty());
    }

    #[test]
    fn two_sided_quadratic() {
        // z^2 - [1.9, 2.1]: candidates around +-sqrt(2) covering
        // [sqrt(1.9), sqrt(2.1)] and its negative.
        let p = IntervalPolynomial::new(vec![
            Interval::new(rat(-21, 10), rat(-19, 10)),
            Interval::point(rat_int(0)),
            Interval::point(rat_int(1)),
        ]);
        let c = isolate_interval_poly(&p).unwrap();
        assert_eq!(c.len(), 2);
        // Endpoint instances solved exactly: sqrt(1.9) ~ 1.3784,
        // sqrt(2.1) ~ 1.4491.
        assert!(c[1].contains(&rat(1379, 1000)));
        assert!(c[1].contains(&rat(1449, 1000)));
        assert!(c[0].contains(&rat(-1379, 1000)));
        assert!(c[0].contains(&rat(-1449, 1000)));
        assert!(c[0].hi() < c[1].lo());
    }

    #[test]
    fn ambiguous_leading_interval_errors() {
        let p = IntervalPolynomial::new(vec![iv(1, 2), iv(-1, 1)]);
        assert!(matches!(isolate_interval_poly(&p), Err(Error::DegreeAmbiguous)));
        // An exactly-zero leader trims away instead.
        let p = IntervalPolynomial::new(vec![iv(-1, 0), Interval::point(rat_int(1)), Interval::point(rat_int(0))]);
        assert!(isolate_interval_poly(&p).is_ok());
    }
}
