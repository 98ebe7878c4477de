//! Certified root counting for specializations of a bivariate polynomial at
//! an exact (rational or algebraic) point of the base variable.
//!
//! The tool is the Sturm–Habicht sequence: sign-adjusted subresultants of
//! `(P, dP/d_main)`.  Unlike remainder sequences, subresultants are
//! determinants of the original coefficients, so they commute with the
//! specialization `base := x0` even when `P(x0, .)` is not square-free, and
//! the sign-variation difference of the evaluated chain counts the distinct
//! real roots in an interval.  Evaluation points where a chain entry vanishes
//! sporadically are rejected (`None`) and the caller picks another dyadic
//! point; entries that vanish identically at `x0` are structural and are
//! handled by the generalized variation rules.

use num_traits::Zero;

use super::{UPoly, XPoint};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::poly::{subresultant_chain, Polynomial, Rational, Var};

/// Sturm–Habicht chain of a curve `P(base, main)`, reusable across fibers.
#[derive(Debug, Clone)]
pub struct SturmHabichtChain {
    base: Var,
    main: Var,
    /// `chain[j]` is `StHa_j`, for `j = 0 ..= deg_main(P)`.
    chain: Vec<Polynomial>,
}

/// `(-1)^(m(m-1)/2)` as a sign.
fn epsilon(m: usize) -> i32 {
    if (m * (m - 1) / 2) % 2 == 0 { 1 } else { -1 }
}

impl SturmHabichtChain {
    pub fn new(curve: &Polynomial, base: Var, main: Var) -> Result<Self> {
        let p = curve.degree(main) as usize;
        if p == 0 {
            return Err(Error::InvalidInput("curve has degree 0 in the main variable".into()));
        }
        let deriv = curve.derivative(main);
        let mut chain = vec![Polynomial::zero(); p + 1];
        chain[p] = curve.clone();
        chain[p - 1] = deriv.clone();
        if p >= 2 {
            let subs = subresultant_chain(curve, &deriv, main);
            for (j, s) in subs.into_iter().enumerate() {
                let e = epsilon(p - j);
                chain[j] = if e < 0 { -&s } else { s };
            }
        }
        Ok(SturmHabichtChain { base, main, chain })
    }

    pub fn main(&self) -> Var {
        self.main
    }

    /// The chain element `StHa_j` itself.
    pub fn stha(&self, j: usize) -> &Polynomial {
        &self.chain[j]
    }

    /// Principal coefficient of `StHa_j` (coefficient of `main^j`), a
    /// polynomial in the base variable.
    pub fn principal(&self, j: usize) -> Polynomial {
        self.chain[j].coeff_of(self.main, j as u16)
    }

    /// Specialize at an abscissa.  Fails when `P(x0, .)` is identically zero
    /// or its leading coefficient vanishes at `x0` (degree drop).
    pub fn at(&self, x0: &XPoint) -> Result<SpecializedChain<'_>> {
        let p = self.chain.len() - 1;
        let lc = self.chain[p].coeff_of(self.main, p as u16);
        let lc_u = UPoly::from_polynomial(&lc, self.base)
            .map_err(|_| Error::Internal("leading coefficient not univariate in base".into()))?;
        if x0.sign_of(&lc_u) == 0 {
            if self.is_structural_zero(p, x0) {
                return Err(Error::VerticalLine(format!("{:?}", x0.enclosure().midpoint())));
            }
            return Err(Error::NotGeneric(
                "leading coefficient vanishes at the fiber abscissa".into(),
            ));
        }
        let structural: Vec<bool> =
            (0..=p).map(|j| self.is_structural_zero(j, x0)).collect();
        Ok(SpecializedChain { owner: self, x0: x0.clone(), structural })
    }

    fn is_structural_zero(&self, j: usize, x0: &XPoint) -> bool {
        if self.chain[j].is_zero() {
            return true;
        }
        self.chain[j].coeffs_in(self.main).iter().all(|c| {
            if c.is_zero() {
                return true;
            }
            let u = UPoly::from_polynomial(c, self.base).expect("chain coefficient in base var");
            x0.sign_of(&u) == 0
        })
    }
}

/// The chain specialized at one abscissa, ready for interval queries.
#[derive(Debug)]
pub struct SpecializedChain<'a> {
    owner: &'a SturmHabichtChain,
    x0: XPoint,
    structural: Vec<bool>,
}

/// Generalized sign variations for a sequence with structurally-zero entries:
/// entries arrive highest index first, zeros marked 0.  Gaps of `k`
/// structural zeros between nonzero `a, b` count `(k+1)/2` for odd `k` and
/// `k/2` plus an ordinary variation for even `k`.
fn generalized_variations(signs: &[i32]) -> usize {
    let mut total = 0usize;
    let mut last: Option<(usize, i32)> = None;
    for (idx, &s) in signs.iter().enumerate() {
        if s == 0 {
            continue;
        }
        if let Some((pidx, ps)) = last {
            let k = idx - pidx - 1;
            if k == 0 {
                if s != ps {
                    total += 1;
                }
            } else if k % 2 == 1 {
                total += (k + 1) / 2;
            } else {
                total += k / 2 + usize::from(s != ps);
            }
        }
        last = Some((idx, s));
    }
    total
}

impl<'a> SpecializedChain<'a> {
    pub fn x0(&self) -> &XPoint {
        &self.x0
    }

    fn sign_of_entry_at(&self, j: usize, t: &Rational) -> i32 {
        let w = self.owner.chain[j].evaluate_partial(&[(self.owner.main, t.clone())]);
        let u = UPoly::from_polynomial(&w, self.owner.base)
            .expect("specialized chain entry univariate in base");
        self.x0.sign_of(&u)
    }

    /// A point is good when every non-structural entry is nonzero there, so
    /// plain/generalized variation counting applies.
    pub fn is_good_point(&self, t: &Rational) -> bool {
        (0..self.structural.len())
            .rev()
            .all(|j| self.structural[j] || self.sign_of_entry_at(j, t) != 0)
    }

    /// Generalized variation count at a good point; `None` at bad points.
    pub fn variations_at(&self, t: &Rational) -> Option<usize> {
        let n = self.structural.len();
        let mut signs = Vec::with_capacity(n);
        for j in (0..n).rev() {
            if self.structural[j] {
                signs.push(0);
            } else {
                let s = self.sign_of_entry_at(j, t);
                if s == 0 {
                    return None;
                }
                signs.push(s);
            }
        }
        Some(generalized_variations(&signs))
    }

    /// Number of distinct real roots of `P(x0, .)` in the open interval
    /// `(a, b)`; `None` when an endpoint is bad (pick another).
    pub fn count_in(&self, a: &Rational, b: &Rational) -> Option<usize> {
        debug_assert!(a < b);
        let va = self.variations_at(a)?;
        let vb = self.variations_at(b)?;
        Some(va.saturating_sub(vb))
    }

    /// A power-of-two bound `B` with all roots of `P(x0, .)` inside `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let p = self.structural.len() - 1;
        let coeffs = self.owner.chain[p].coeffs_in(self.owner.main);
        // Refine the enclosure of x0 until the leading coefficient excludes 0.
        let mut x_iv = self.x0.enclosure();
        let lc = &coeffs[p];
        loop {
            let lc_enc = interval_of(lc, self.owner.base, &x_iv);
            if lc_enc.sign().is_some() {
                let lc_min = lc_enc.min_abs();
                let mut max_ratio = Rational::zero();
                for c in &coeffs[..p] {
                    let enc = interval_of(c, self.owner.base, &x_iv);
                    let r = enc.max_abs() / &lc_min;
                    if r > max_ratio {
                        max_ratio = r;
                    }
                }
                let bound = max_ratio + Rational::from_integer(1.into());
                let mut b = Rational::from_integer(1.into());
                let two = Rational::from_integer(2.into());
                while b < bound {
                    b *= &two;
                }
                return b;
            }
            x_iv = match &self.x0 {
                XPoint::Rational(_) => unreachable!("rational lc sign is exact"),
                XPoint::Algebraic(a) => super::bisect_isolating(a.defining(), &x_iv),
            };
        }
    }

    /// Total number of distinct real roots of `P(x0, .)`.
    pub fn count_total(&self) -> usize {
        let mut b = self.root_bound();
        let two = Rational::from_integer(2.into());
        loop {
            if let Some(n) = self.count_in(&-b.clone(), &b) {
                return n;
            }
            b *= &two;
        }
    }
}

/// Enclosure of a univariate-in-`base` polynomial over an interval.
fn interval_of(c: &Polynomial, base: Var, iv: &Interval) -> Interval {
    if c.is_zero() {
        return Interval::point(Rational::zero());
    }
    let u = UPoly::from_polynomial(c, base).expect("coefficient univariate in base");
    u.evaluate_interval(iv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat, rat_int};
    use crate::roots::AlgebraicNumber;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn at_rational(curve: &str, x0: i64) -> usize {
        let chain = SturmHabichtChain::new(&p(curve), Var::X, Var::Y).unwrap();
        let sp = chain.at(&XPoint::Rational(rat_int(x0))).unwrap();
        sp.count_total()
    }

    #[test]
    fn counts_at_rational_fibers() {
        // Circle: 2 roots inside, 1 at tangency, 0 outside.
        assert_eq!(at_rational("x^2 + y^2 - 1", 0), 2);
        assert_eq!(at_rational("x^2 + y^2 - 1", 1), 1);
        assert_eq!(at_rational("x^2 + y^2 - 1", 2), 0);
        // Crossing lines at the node: y^2 = 0 has one distinct root.
        assert_eq!(at_rational("y^2 - x^2", 0), 1);
        assert_eq!(at_rational("y^2 - x^2", 3), 2);
        // Non-square-free specialization with a defective chain: y^4 - x at
        // x = 0 gives y^4, one distinct root.
        assert_eq!(at_rational("y^4 - x", 0), 1);
        assert_eq!(at_rational("y^4 - x", 1), 2);
        assert_eq!(at_rational("y^4 - x", -1), 0);
        // y^4 - 1-like fiber: y^4 - x at x = 1 handled above; quartic pair.
        assert_eq!(at_rational("y^4 - 5*y^2 + 4 + 0*x", 0), 4);
        assert_eq!(at_rational("y^6 - x", 1), 2);
    }

    #[test]
    fn counts_in_intervals() {
        let chain = SturmHabichtChain::new(&p("x^2 + y^2 - 1"), Var::X, Var::Y).unwrap();
        let sp = chain.at(&XPoint::Rational(rat_int(0))).unwrap();
        // t = 0 is a bad point (the chain entry 2y vanishes there): callers
        // pick another dyadic endpoint.
        assert_eq!(sp.count_in(&rat_int(-2), &rat_int(0)), None);
        assert_eq!(sp.count_in(&rat_int(-2), &rat(-1, 2)), Some(1));
        assert_eq!(sp.count_in(&rat(1, 2), &rat_int(2)), Some(1));
        assert_eq!(sp.count_in(&rat(-1, 2), &rat(1, 2)), Some(0));
    }

    #[test]
    fn counts_at_algebraic_fibers() {
        // Circle at x = sqrt(2)/2: two roots y = +-sqrt(2)/2.
        let alpha = AlgebraicNumber::new(
            UPoly::from_polynomial(&p("2*x^2 - 1"), Var::X).unwrap(),
            Interval::new(rat(1, 2), rat_int(1)),
        )
        .unwrap();
        let chain = SturmHabichtChain::new(&p("x^2 + y^2 - 1"), Var::X, Var::Y).unwrap();
        let sp = chain.at(&XPoint::Algebraic(alpha)).unwrap();
        assert_eq!(sp.count_total(), 2);
        assert_eq!(sp.count_in(&rat(1, 3), &rat_int(2)), Some(1));

        // Circle at x = 1 treated as algebraic (root of x^2 - 1): tangency.
        let one = AlgebraicNumber::new(
            UPoly::from_polynomial(&p("x^2 - 1"), Var::X).unwrap(),
            Interval::new(rat(1, 2), rat(3, 2)),
        )
        .unwrap();
        let sp = chain.at(&XPoint::Algebraic(one)).unwrap();
        assert_eq!(sp.count_total(), 1);
    }

    #[test]
    fn vertical_line_detected() {
        // h = x*y: at x = 0 the fiber is identically zero.
        let chain = SturmHabichtChain::new(&p("x*y"), Var::X, Var::Y).unwrap();
        assert!(matches!(
            chain.at(&XPoint::Rational(rat_int(0))),
            Err(Error::VerticalLine(_)) | Err(Error::NotGeneric(_))
        ));
    }
}
