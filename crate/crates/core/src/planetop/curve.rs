//! Precomputed per-curve data and the certified fiber machinery.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::poly::{pow_rat, resultant, squarefree_part, Polynomial, Rational, Var};
use crate::roots::{
    isolate_polynomial, AlgebraicNumber, SpecializedChain, SturmHabichtChain, UPoly, XPoint,
};

use super::{Fiber, PlanePoint};

/// A plane curve `h(x, y) = 0` with its Sturm–Habicht chain and critical
/// polynomial, shared by every fiber-level computation.
#[derive(Debug, Clone)]
pub struct PlaneCurve {
    h: Polynomial,
    /// Chain of `(h, h_y)` in `y`; absent when `deg_y h = 0`.
    chain: Option<SturmHabichtChain>,
    /// `sqfree(Res_y(h, h_y))`, constant when there are no critical values.
    critical: Polynomial,
    critical_upoly: Option<UPoly>,
}

impl PlaneCurve {
    pub fn new(h: Polynomial) -> Result<Self> {
        if h.is_zero() {
            return Err(Error::InvalidInput("zero polynomial defines no curve".into()));
        }
        if h.contains_var(Var::Z) || h.contains_var(Var::S) {
            return Err(Error::InvalidInput("plane curve must involve x and y only".into()));
        }
        if h.degree(Var::Y) == 0 {
            return Ok(PlaneCurve { h, chain: None, critical: Polynomial::one(), critical_upoly: None });
        }
        let chain = SturmHabichtChain::new(&h, Var::X, Var::Y)?;
        let hy = h.derivative(Var::Y);
        let res = resultant(&h, &hy, Var::Y)?;
        let critical = if res.is_zero() {
            return Err(Error::InvalidInput(
                "Res_y(h, h_y) vanishes identically; h is not square-free or has a vertical-line factor".into(),
            ));
        } else if res.is_constant() {
            Polynomial::one()
        } else {
            squarefree_part(&res)?
        };
        let critical_upoly = if critical.is_constant() {
            None
        } else {
            Some(UPoly::from_polynomial(&critical, Var::X)?)
        };
        Ok(PlaneCurve { h, chain: Some(chain), critical, critical_upoly })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.h
    }

    pub fn degree_y(&self) -> u16 {
        self.h.degree(Var::Y)
    }

    pub fn lc_is_constant(&self) -> bool {
        self.h.leading_coeff(Var::Y).is_constant()
    }

    pub fn critical_poly(&self) -> &Polynomial {
        &self.critical
    }

    /// The x-critical values in increasing order.
    pub fn critical_values(&self) -> Result<Vec<AlgebraicNumber>> {
        if self.critical.is_constant() {
            return Ok(Vec::new());
        }
        let roots = isolate_polynomial(&self.critical, Var::X)?;
        let defining = self.critical_upoly.clone().expect("nonconstant critical poly");
        roots
            .into_intervals()
            .into_iter()
            .map(|iv| AlgebraicNumber::new(defining.clone(), iv))
            .collect()
    }

    /// Is `x0` an x-critical value?
    pub fn is_critical_x(&self, x0: &XPoint) -> bool {
        match &self.critical_upoly {
            None => false,
            Some(p) => x0.sign_of(p) == 0,
        }
    }

    fn specialized(&self, x0: &XPoint) -> Result<SpecializedChain<'_>> {
        let chain = self.chain.as_ref().ok_or_else(|| {
            Error::InvalidInput("curve has no y-structure (vertical lines only)".into())
        })?;
        chain.at(x0)
    }

    /// Disjoint isolating intervals for the distinct real roots of
    /// `h(x0, y)`, in increasing order.
    pub fn fiber_intervals(&self, x0: &XPoint) -> Result<Vec<Interval>> {
        if self.chain.is_none() {
            // h depends on x only: empty fiber unless h(x0) = 0, which is a
            // vertical line through x0.
            let u = UPoly::from_polynomial(&self.h, Var::X)?;
            return if x0.sign_of(&u) == 0 {
                Err(Error::VerticalLine(format!("{}", x0.enclosure().midpoint())))
            } else {
                Ok(Vec::new())
            };
        }
        let sp = self.specialized(x0)?;
        let total = sp.count_total();
        if total == 0 {
            return Ok(Vec::new());
        }
        let mut lo;
        let mut hi;
        {
            let b = sp.root_bound();
            let two = BigRational::from_integer(2.into());
            let mut bb = b;
            loop {
                lo = -bb.clone();
                hi = bb.clone();
                if sp.is_good_point(&lo) && sp.is_good_point(&hi) {
                    break;
                }
                bb *= &two;
            }
        }
        let mut out: Vec<Interval> = Vec::new();
        let mut stack: Vec<(Rational, Rational, usize)> = vec![(lo, hi, total)];
        while let Some((a, b, c)) = stack.pop() {
            if c == 0 {
                continue;
            }
            if c == 1 {
                out.push(Interval::new(a, b));
                continue;
            }
            let t = good_split(&sp, &a, &b);
            let cl = sp.count_in(&a, &t).expect("good endpoints");
            stack.push((a, t.clone(), cl));
            stack.push((t, b, c - cl));
        }
        out.sort_by(|p, q| p.lo().cmp(q.lo()));
        // Shrink intervals sharing a split point until pairwise disjoint.
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..out.len().saturating_sub(1) {
                if out[i].hi() >= out[i + 1].lo() {
                    out[i] = shrink_once(&sp, &out[i]);
                    out[i + 1] = shrink_once(&sp, &out[i + 1]);
                    changed = true;
                }
            }
        }
        Ok(out)
    }

    /// Halve an isolating fiber interval (count stays 1).
    pub fn refine_fiber_interval(&self, x0: &XPoint, iv: &Interval) -> Result<Interval> {
        let sp = self.specialized(x0)?;
        Ok(shrink_once(&sp, iv))
    }

    /// Least `j` with `sres_j(x0) != 0`: the degree of
    /// `gcd(h(x0, .), h_y(x0, .))`.  Zero at non-critical abscissas.
    pub fn gcd_index_at(&self, x0: &XPoint) -> Result<usize> {
        let chain = self.chain.as_ref().ok_or_else(|| {
            Error::InvalidInput("curve has no y-structure".into())
        })?;
        let p = self.degree_y() as usize;
        for j in 0..p {
            let pc = chain.principal(j);
            if pc.is_zero() {
                continue;
            }
            let u = UPoly::from_polynomial(&pc, Var::X)?;
            if x0.sign_of(&u) != 0 {
                return Ok(j);
            }
        }
        // All proper principals vanish: the gcd is h_y(x0, .) itself.
        Ok(p - 1)
    }

    /// The gcd polynomial `S_k(x, y)` whose specialization at a critical
    /// abscissa is the gcd of the fiber and its derivative.
    fn gcd_chain_poly(&self, k: usize) -> &Polynomial {
        self.chain.as_ref().expect("y-structure").stha(k)
    }

    /// Does `h(x0, .)` have at most one distinct multiple root (over C)?
    /// `x0` must be a real root of the critical polynomial.
    pub fn fiber_multiple_point_unique(&self, x0: &XPoint) -> Result<bool> {
        let k = self.gcd_index_at(x0)?;
        if k <= 1 {
            return Ok(true);
        }
        // gcd = S_k(x0, y) of degree k: it has a single distinct complex root
        // iff it is a perfect k-th power of a linear form, i.e.
        // (k*c_k*y + c_{k-1})^k = k^k * c_k^(k-1) * S_k at x = x0.
        let g = self.gcd_chain_poly(k);
        let ck = g.coeff_of(Var::Y, k as u16);
        let ckm1 = g.coeff_of(Var::Y, (k - 1) as u16);
        let kc = Rational::from_integer((k as i64).into());
        let lin = &(&Polynomial::constant(kc.clone()) * &ck) * &Polynomial::var(Var::Y);
        let lin = &lin + &ckm1;
        let lhs = lin.pow(k as u32);
        let scale = Polynomial::constant(pow_rat(&kc, k as u32));
        let rhs = &(&scale * &ck.pow(k as u32 - 1)) * g;
        let u = &lhs - &rhs;
        for c in u.coeffs_in(Var::Y) {
            if c.is_zero() {
                continue;
            }
            let cu = UPoly::from_polynomial(&c, Var::X)?;
            if x0.sign_of(&cu) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Assemble a fiber with criticality flags.
    pub fn fiber(&self, x0: &XPoint) -> Result<Fiber> {
        let intervals = self.fiber_intervals(x0)?;
        let is_critical = self.is_critical_x(x0);
        let mut points: Vec<PlanePoint> = intervals
            .into_iter()
            .map(|y| PlanePoint { y, branch_left: 0, branch_right: 0, is_critical: false })
            .collect();
        if is_critical {
            let idx = self.critical_point_index(x0, &points.iter().map(|p| p.y.clone()).collect::<Vec<_>>())?;
            points[idx].is_critical = true;
        }
        Ok(Fiber { x: x0.clone(), points, is_critical })
    }

    /// Which fiber interval contains the unique multiple root.  The multiple
    /// root of the gcd `S_k(x0, y) ~ c*(y - b)^k` is `b = -c_(k-1)/(k c_k)`,
    /// enclosed by interval arithmetic over a shrinking enclosure of `x0`.
    pub fn critical_point_index(&self, x0: &XPoint, intervals: &[Interval]) -> Result<usize> {
        let k = self.gcd_index_at(x0)?.max(1);
        let g = self.gcd_chain_poly(k);
        let ck = UPoly::from_polynomial(&g.coeff_of(Var::Y, k as u16), Var::X)?;
        let ckm1 = UPoly::from_polynomial(&g.coeff_of(Var::Y, (k - 1) as u16), Var::X)?;
        let kc = Rational::from_integer((k as i64).into());
        let mut enc = x0.enclosure();
        let alg = match x0 {
            XPoint::Algebraic(a) => Some(a.clone()),
            XPoint::Rational(_) => None,
        };
        for _ in 0..512 {
            let den = ck.evaluate_interval(&enc).scale(&kc);
            if den.sign().is_some() {
                let beta = ckm1.evaluate_interval(&enc).neg().mul(&den.recip());
                let mut inside = intervals.iter().enumerate().filter(|(_, j)| j.contains_interval(&beta));
                if let Some((idx, _)) = inside.next() {
                    if inside.next().is_none() {
                        return Ok(idx);
                    }
                }
            }
            match &alg {
                Some(a) => enc = crate::roots::bisect_isolating(a.defining(), &enc),
                None => {
                    return Err(Error::Internal(
                        "critical-point enclosure failed at an exact rational abscissa".into(),
                    ))
                }
            }
        }
        Err(Error::Internal("critical point localization did not converge".into()))
    }
}

/// One certified shrink of an isolating interval (root count stays 1).
fn shrink_once(sp: &SpecializedChain<'_>, iv: &Interval) -> Interval {
    let t = good_split(sp, iv.lo(), iv.hi());
    match sp.count_in(iv.lo(), &t) {
        Some(1) => Interval::new(iv.lo().clone(), t),
        Some(0) => Interval::new(t, iv.hi().clone()),
        _ => unreachable!("isolating interval holds exactly one root"),
    }
}

/// A dyadic point strictly inside `(a, b)` at which every chain entry is
/// nonzero; tries the midpoint first, then finer dyadic subdivisions.
fn good_split(sp: &SpecializedChain<'_>, a: &Rational, b: &Rational) -> Rational {
    let w = b - a;
    for depth in 1..64u32 {
        let steps = 1u64 << depth;
        for odd in (1..steps).step_by(2) {
            let t = a + &w * Rational::new(odd.into(), steps.into());
            if sp.is_good_point(&t) {
                return t;
            }
        }
    }
    unreachable!("no good split point found (chain entries vanish on a dense set)")
}
