//! Dense univariate polynomials over the rationals.
//!
//! The root-isolation and algebraic-number layers work on this compact
//! representation; conversion from the sparse multivariate [`Polynomial`] is
//! explicit and checks that no other variable remains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::poly::{Polynomial, Rational, Var};

/// Univariate polynomial, `coeffs[i]` the coefficient of degree `i`; the
/// vector carries no trailing zeros, the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    /// `x - r`, the defining polynomial of a rational number.
    pub fn linear_root(r: &Rational) -> Self {
        UPoly::new(vec![-r.clone(), Rational::one()])
    }

    /// Extract a univariate polynomial in `v` from a sparse multivariate one.
    pub fn from_polynomial(p: &Polynomial, v: Var) -> Result<UPoly> {
        let coeffs = p
            .coeffs_in(v)
            .iter()
            .map(|c| {
                c.as_constant().ok_or_else(|| {
                    Error::InvalidInput(format!("polynomial is not univariate in {}", v))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UPoly::new(coeffs))
    }

    pub fn to_polynomial(&self, v: Var) -> Polynomial {
        Polynomial::from_terms(self.coeffs.iter().enumerate().map(|(i, c)| {
            let mut e = [0u16; 4];
            e[v.index()] = i as u16;
            (c.clone(), e)
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        let v = self.evaluate(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Interval enclosure of the value over an interval argument (Horner).
    pub fn evaluate_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Interval::point(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn neg(&self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UPoly::new(out)
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Euclidean remainder over the rationals.
    pub fn rem(&self, d: &UPoly) -> UPoly {
        assert!(!d.is_zero(), "remainder by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading().unwrap();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let f = r[k].clone() / lc;
            if !f.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    r[idx] = &r[idx] - &(c * &f);
                }
            }
            r.pop();
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
        }
        UPoly { coeffs: r }
    }

    /// Monic gcd over the rationals (Euclid); `gcd(p, 0)` is monic `p`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            None => UPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        if self.degree() == 0 {
            return true;
        }
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        if self.degree() == 0 {
            return UPoly::constant(Rational::one());
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        self.div_exact(&g).monic()
    }

    /// Exact quotient; panics when the division is not exact.
    pub fn div_exact(&self, d: &UPoly) -> UPoly {
        assert!(!d.is_zero());
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading().unwrap();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1;
            let f = r[k].clone() / lc;
            q[k - dd] = f.clone();
            for (j, c) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                r[idx] = &r[idx] - &(c * &f);
            }
            r.pop();
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
        }
        assert!(r.is_empty(), "division is not exact");
        UPoly::new(q)
    }

    /// Scale the argument: returns `p(c * x)`.
    pub fn compose_scale(&self, c: &Rational) -> UPoly {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut pow = Rational::one();
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        UPoly::new(out)
    }

    /// Shift the argument: returns `p(x + c)` (Taylor shift by Horner).
    pub fn compose_shift(&self, c: &Rational) -> UPoly {
        if self.coeffs.len() <= 1 || c.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = self.coeffs.clone();
        // Repeated synthetic division by (x - (-c)).
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &out[j + 1] * c;
                out[j] = &out[j] + &t;
            }
        }
        UPoly::new(out)
    }

    /// Reverse the coefficients: `x^deg * p(1/x)`.
    pub fn reversed(&self) -> UPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UPoly::new(coeffs)
    }

    /// Number of sign variations in the coefficient sequence.
    pub fn coeff_sign_variations(&self) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for c in &self.coeffs {
            let s = if c.is_zero() {
                0
            } else if c.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Cauchy root bound rounded up to a power of two: every real root lies
    /// strictly inside `(-B, B)`.
    pub fn root_bound_pow2(&self) -> Rational {
        assert!(!self.is_zero());
        let lc = self.leading().unwrap();
        let mut max = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = (c / lc).abs();
            if r > max {
                max = r;
            }
        }
        let bound = max + Rational::one();
        // Round up to 2^k.
        let mut b = Rational::one();
        let two = Rational::from_integer(BigInt::from(2));
        while b < bound {
            b *= &two;
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat, rat_int};

    fn up(s: &str) -> UPoly {
        UPoly::from_polynomial(&parse_polynomial(s).unwrap(), Var::X).unwrap()
    }

    #[test]
    fn shift_and_scale() {
        let p = up("x^2 - 2");
        let q = p.compose_shift(&rat_int(1)); // (x+1)^2 - 2
        assert_eq!(q, up("x^2 + 2*x - 1"));
        let r = p.compose_scale(&rat(1, 2)); // (x/2)^2 - 2
        assert_eq!(r, up("1/4*x^2 - 2"));
        assert_eq!(p.reversed(), up("1 - 2*x^2"));
    }

    #[test]
    fn gcd_and_squarefree() {
        let p = up("(x-1)*(x-1)*(x+2)");
        let g = p.gcd(&p.derivative());
        assert_eq!(g, up("x - 1"));
        assert_eq!(p.squarefree_part(), up("(x-1)*(x+2)").monic());
        assert!(!p.is_squarefree());
        assert!(up("x^2-2").is_squarefree());
    }

    #[test]
    fn root_bound_contains_roots() {
        let p = up("x^3 - 10*x + 1");
        let b = p.root_bound_pow2();
        assert!(p.sign_at(&b) != 0 && p.sign_at(&(-b.clone())) != 0);
        assert!(b >= rat_int(11));
    }

    #[test]
    fn from_polynomial_rejects_multivariate() {
        assert!(UPoly::from_polynomial(&parse_polynomial("x*y").unwrap(), Var::X).is_err());
    }
}
