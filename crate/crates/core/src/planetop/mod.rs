//! Topology of real algebraic plane curves.
//!
//! The output is a fiber-organized straight-line graph isotopic to the curve:
//! one fiber per x-critical value, one rational fiber strictly inside every
//! gap, and sentinel fibers beyond the root bound catching unbounded
//! branches.  Generic position (constant leading coefficient in `y`, at most
//! one critical point per fiber) is what makes the per-fiber connection rule
//! below correct, so it is checked, never assumed.

mod curve;
mod io;

pub use curve::PlaneCurve;
pub use io::{plane_to_dot, plane_to_json};

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::poly::{squarefree_part, Polynomial, Rational, Var};
use crate::roots::{isolate_polynomial, RootList, UPoly, XPoint};

/// One point of a fiber: an isolating y-interval plus branch bookkeeping.
#[derive(Debug, Clone)]
pub struct PlanePoint {
    pub y: Interval,
    pub branch_left: usize,
    pub branch_right: usize,
    pub is_critical: bool,
}

/// A vertical slice of the curve at a fixed abscissa.
#[derive(Debug, Clone)]
pub struct Fiber {
    pub x: XPoint,
    pub points: Vec<PlanePoint>,
    pub is_critical: bool,
}

/// Edge endpoint: (fiber index, point index).
pub type PointRef = (usize, usize);

/// Fiber-organized graph isotopic to the plane curve.
#[derive(Debug, Clone)]
pub struct PlaneTopology {
    curve: PlaneCurve,
    pub fibers: Vec<Fiber>,
    /// Edges join points of consecutive fibers only.
    pub edges: Vec<(PointRef, PointRef)>,
}

/// Verdict of the generic-position test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenericVerdict {
    Generic,
    NotGeneric(String),
}

impl GenericVerdict {
    pub fn is_generic(&self) -> bool {
        matches!(self, GenericVerdict::Generic)
    }
}

/// Isolated real roots of `p(x) = sqfree(Res_y(h, h_y))`, the x-critical
/// values.  Errors with `NotGeneric` when `lc(h, y)` is not constant.
pub fn critical_x_values(h: &Polynomial) -> Result<RootList> {
    let curve = PlaneCurve::new(h.clone())?;
    if !curve.lc_is_constant() {
        return Err(Error::NotGeneric(
            "leading coefficient in y is not constant; shear first".into(),
        ));
    }
    isolate_polynomial(curve.critical_poly(), Var::X)
}

/// Disjoint isolating intervals for the distinct real roots of `h(x0, y)`.
pub fn fiber_points(h: &Polynomial, x0: &XPoint) -> Result<Vec<Interval>> {
    let curve = PlaneCurve::new(h.clone())?;
    curve.fiber_intervals(x0)
}

/// Generic position for the plane curve `C_h` with respect to `y`:
/// `lc(h, y)` constant and at most one distinct critical point over every
/// real x-critical value.
pub fn is_generic_plane(h: &Polynomial) -> Result<GenericVerdict> {
    if h.is_zero() {
        return Err(Error::InvalidInput("zero polynomial defines no curve".into()));
    }
    if h.is_constant() {
        return Ok(GenericVerdict::Generic); // empty curve
    }
    let curve = PlaneCurve::new(h.clone())?;
    if !curve.lc_is_constant() {
        return Ok(GenericVerdict::NotGeneric(
            "leading coefficient in y is not constant".into(),
        ));
    }
    if curve.degree_y() == 0 {
        // Nonconstant h free of y is a union of vertical lines; lc(h,y) = h
        // is not constant, so this is unreachable, kept as a guard.
        return Ok(GenericVerdict::NotGeneric("curve is a union of vertical lines".into()));
    }
    for alpha in curve.critical_values()? {
        let x0 = XPoint::Algebraic(alpha);
        match curve.fiber_multiple_point_unique(&x0)? {
            true => {}
            false => {
                return Ok(GenericVerdict::NotGeneric(format!(
                    "more than one distinct critical point over x in {:?}",
                    x0.enclosure()
                )))
            }
        }
    }
    Ok(GenericVerdict::Generic)
}

/// Parametric generic-position search: find the first `s0` in the candidate
/// order `0, 1, -1, 2, -2, ...` whose exclusion-polynomial value `Q(s0)` is
/// nonzero and whose specialized curve passes [`is_generic_plane`].
pub fn pcgp_search(h_param: &Polynomial) -> Result<Rational> {
    pcgp_search_with(h_param, |_| Ok(true))
}

/// [`pcgp_search`] with an additional per-candidate acceptance predicate,
/// evaluated after the exclusion-polynomial and generic-position checks.
pub fn pcgp_search_with(
    h_param: &Polynomial,
    accept: impl Fn(&Rational) -> Result<bool>,
) -> Result<Rational> {
    if h_param.is_zero() {
        return Err(Error::SearchFailed("parametric curve is identically zero".into()));
    }
    let h_star = squarefree_part(h_param)?;
    let q = if h_star.degree(Var::Y) == 0 {
        Polynomial::one()
    } else {
        let res = crate::poly::resultant(&h_star, &h_star.derivative(Var::Y), Var::Y)?;
        if res.is_zero() {
            return Err(Error::SearchFailed(
                "exclusion resultant vanished identically".into(),
            ));
        }
        squarefree_part(&res)?
    };
    let exclusion = if q.degree(Var::X) == 0 {
        Polynomial::one()
    } else {
        let res = crate::poly::resultant(&q, &q.derivative(Var::X), Var::X)?;
        if res.is_zero() {
            return Err(Error::SearchFailed("exclusion polynomial is identically zero".into()));
        }
        squarefree_part(&res)?
    };
    if exclusion.is_zero() {
        return Err(Error::SearchFailed("exclusion polynomial is identically zero".into()));
    }
    if exclusion.contains_var(Var::Y) {
        return Err(Error::Internal("exclusion polynomial should involve s only".into()));
    }
    let q_of_s = UPoly::from_polynomial(&exclusion, Var::S)
        .map_err(|_| Error::Internal("exclusion polynomial should involve s only".into()))?;

    let d = h_param.total_degree() as u64;
    let budget = 4 * d.pow(4) + 1;
    for s0 in candidates().take(budget as usize) {
        if q_of_s.sign_at(&s0) == 0 {
            continue;
        }
        let spec = h_param.evaluate_partial(&[(Var::S, s0.clone())]);
        if spec.is_zero() {
            continue;
        }
        let spec_sf = squarefree_part(&spec)?;
        if is_generic_plane(&spec_sf)?.is_generic() && accept(&s0)? {
            return Ok(s0);
        }
    }
    Err(Error::SearchFailed(format!(
        "no generic-position parameter among the first {} candidates",
        budget
    )))
}

/// The fixed deterministic candidate order `0, 1, -1, 2, -2, ...`.
pub fn candidates() -> impl Iterator<Item = Rational> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![Rational::zero()]
        } else {
            vec![
                Rational::from_integer(k.into()),
                Rational::from_integer((-k).into()),
            ]
        }
    })
}

/// Full topology of a square-free curve in generic position.
pub fn plane_topology(h: &Polynomial) -> Result<PlaneTopology> {
    match is_generic_plane(h)? {
        GenericVerdict::Generic => {}
        GenericVerdict::NotGeneric(reason) => return Err(Error::NotGeneric(reason)),
    }
    if !crate::poly::is_squarefree(h)? {
        return Err(Error::InvalidInput("plane topology requires a square-free curve".into()));
    }
    let curve = PlaneCurve::new(h.clone())?;
    let xs = standard_fiber_xs(&curve)?;
    topology_on_fibers(curve, xs)
}

/// The standard fiber abscissas: sentinels, criticals, and one rational
/// point of minimal dyadic size inside every gap.
fn standard_fiber_xs(curve: &PlaneCurve) -> Result<Vec<XPoint>> {
    let criticals = curve.critical_values()?;
    let bound = if curve.critical_poly().is_constant() {
        Rational::from_integer(2.into())
    } else {
        UPoly::from_polynomial(curve.critical_poly(), Var::X)?.root_bound_pow2()
    };
    let mut xs: Vec<XPoint> = Vec::new();
    xs.push(XPoint::Rational(-bound.clone()));
    for (i, alpha) in criticals.iter().enumerate() {
        if i > 0 {
            let prev = &criticals[i - 1];
            let t = simplest_rational_between(prev.interval().hi(), alpha.interval().lo());
            xs.push(XPoint::Rational(t));
        }
        xs.push(XPoint::Algebraic(alpha.clone()));
    }
    if criticals.is_empty() {
        xs.push(XPoint::Rational(Rational::zero()));
    }
    xs.push(XPoint::Rational(bound));
    Ok(xs)
}

/// Smallest-denominator dyadic rational strictly between `a` and `b`.
pub fn simplest_rational_between(a: &Rational, b: &Rational) -> Rational {
    assert!(a < b, "empty gap");
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let mut denom = one.clone();
    loop {
        // Smallest integer m with a < m/denom: floor(a*denom) + 1.
        let m = (a * &denom).floor() + &one;
        let cand = &m / &denom;
        if &cand < b {
            return cand;
        }
        denom *= &two;
    }
}

/// Assemble the topology over a prescribed, strictly increasing fiber list
/// that contains every x-critical value of the curve.
pub(crate) fn topology_on_fibers(curve: PlaneCurve, xs: Vec<XPoint>) -> Result<PlaneTopology> {
    let mut fibers: Vec<Fiber> = Vec::with_capacity(xs.len());
    for x in xs {
        fibers.push(curve.fiber(&x)?);
    }
    // Consecutive fibers must not both be critical: a regular sample always
    // separates criticals by construction.
    for w in fibers.windows(2) {
        if w[0].is_critical && w[1].is_critical {
            return Err(Error::Internal("adjacent critical fibers".into()));
        }
    }
    let mut edges: Vec<(PointRef, PointRef)> = Vec::new();
    for i in 0..fibers.len().saturating_sub(1) {
        connect_gap(&fibers, i, &mut edges)?;
    }
    let mut topo = PlaneTopology { curve, fibers, edges };
    topo.recount_branches();
    Ok(topo)
}

/// Connect fiber `i` to fiber `i+1` by branch counting.
fn connect_gap(
    fibers: &[Fiber],
    i: usize,
    edges: &mut Vec<(PointRef, PointRef)>,
) -> Result<()> {
    let left = &fibers[i];
    let right = &fibers[i + 1];
    let l = left.points.len();
    let r = right.points.len();
    let crit_left = left.points.iter().position(|p| p.is_critical);
    let crit_right = right.points.iter().position(|p| p.is_critical);

    match (crit_left, crit_right) {
        (None, None) => {
            if l != r {
                return Err(Error::Internal(format!(
                    "regular strip with unequal fiber sizes {} vs {}",
                    l, r
                )));
            }
            for j in 0..l {
                edges.push(((i, j), (i + 1, j)));
            }
        }
        (None, Some(j0)) => {
            // Right fiber critical: points below j0 pair with the lowest
            // left points, points above with the highest, the critical point
            // absorbs the middle.
            let below = j0;
            let above = r - 1 - j0;
            if below + above > l {
                return Err(Error::Internal("critical fiber larger than its neighbor".into()));
            }
            for j in 0..below {
                edges.push(((i, j), (i + 1, j)));
            }
            for j in 0..above {
                edges.push(((i, l - above + j), (i + 1, j0 + 1 + j)));
            }
            for j in below..l - above {
                edges.push(((i, j), (i + 1, j0)));
            }
        }
        (Some(j0), None) => {
            let below = j0;
            let above = l - 1 - j0;
            if below + above > r {
                return Err(Error::Internal("critical fiber larger than its neighbor".into()));
            }
            for j in 0..below {
                edges.push(((i, j), (i + 1, j)));
            }
            for j in 0..above {
                edges.push(((i, j0 + 1 + j), (i + 1, r - above + j)));
            }
            for j in below..r - above {
                edges.push(((i, j0), (i + 1, j)));
            }
        }
        (Some(_), Some(_)) => {
            return Err(Error::Internal("adjacent critical fibers".into()));
        }
    }
    Ok(())
}

impl PlaneTopology {
    pub fn curve(&self) -> &PlaneCurve {
        &self.curve
    }

    pub fn polynomial(&self) -> &Polynomial {
        self.curve.polynomial()
    }

    fn recount_branches(&mut self) {
        for f in &mut self.fibers {
            for p in &mut f.points {
                p.branch_left = 0;
                p.branch_right = 0;
            }
        }
        let edges = self.edges.clone();
        for ((fi, pi), (fj, pj)) in edges {
            self.fibers[fi].points[pi].branch_right += 1;
            self.fibers[fj].points[pj].branch_left += 1;
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.fibers.iter().map(|f| f.points.len()).sum()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Flat vertex index of a point reference.
    pub fn vertex_id(&self, (fi, pi): PointRef) -> usize {
        self.fibers[..fi].iter().map(|f| f.points.len()).sum::<usize>() + pi
    }

    /// Number of connected components of the graph.
    pub fn component_count(&self) -> usize {
        let n = self.num_vertices();
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut Vec<usize>, i: usize) -> usize {
            let mut i = i;
            while uf[i] != i {
                uf[i] = uf[uf[i]];
                i = uf[i];
            }
            i
        }
        for &(a, b) in &self.edges {
            let (a, b) = (self.vertex_id(a), self.vertex_id(b));
            let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
            if ra != rb {
                uf[ra] = rb;
            }
        }
        (0..n).filter(|&i| find(&mut uf, i) == i).count()
    }

    /// First Betti number `E - V + C` (independent cycles).
    pub fn betti(&self) -> i64 {
        self.num_edges() as i64 - self.num_vertices() as i64 + self.component_count() as i64
    }

    pub fn degree_of(&self, p: PointRef) -> usize {
        let pt = &self.fibers[p.0].points[p.1];
        pt.branch_left + pt.branch_right
    }

    /// Multiset of vertex degrees strictly greater than 2.
    pub fn high_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (fi, f) in self.fibers.iter().enumerate() {
            for pi in 0..f.points.len() {
                let d = self.degree_of((fi, pi));
                if d > 2 {
                    out.push(d);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Insert fibers at extra abscissas (duplicates detected exactly and
    /// skipped).  The refined topology is isotopic to the input.
    pub fn refine_with_fibers(&self, extra_x: &[XPoint]) -> Result<PlaneTopology> {
        let lo = &self.fibers.first().ok_or_else(|| {
            Error::InvalidInput("cannot refine an empty topology".into())
        })?.x;
        let hi = &self.fibers.last().unwrap().x;
        let mut xs: Vec<XPoint> = self.fibers.iter().map(|f| f.x.clone()).collect();
        for x in extra_x {
            if x.compare(lo) != Ordering::Greater || x.compare(hi) != Ordering::Less {
                return Err(Error::InvalidInput(
                    "extra fiber outside the handled x-range".into(),
                ));
            }
            if xs.iter().all(|e| e.compare(x) != Ordering::Equal) {
                xs.push(x.clone());
            }
        }
        xs.sort_by(|a, b| a.compare(b));
        topology_on_fibers(self.curve.clone(), xs)
    }
}

#[cfg(test)]
mod tests;
