//! Multivariate gcd, exact division, and square-free parts.
//!
//! The gcd is computed by the primitive Euclidean algorithm: pick a main
//! variable, split both operands into content (a gcd in fewer variables) and
//! primitive part, and run a pseudo-remainder sequence on the primitive
//! parts, extracting content after every step to keep growth down.  Results
//! are normalized primitive with positive lex-leading coefficient, so
//! equality of gcds is plain structural equality.

use super::{pseudo_rem, require_not_both_zero, Polynomial, Var};
use crate::error::{Error, Result};

/// Exact polynomial division: `Some(q)` with `p = q * d`, or `None` when `d`
/// does not divide `p`.
pub fn exact_div(p: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    assert!(!d.is_zero(), "division by the zero polynomial");
    if p.is_zero() {
        return Some(Polynomial::zero());
    }
    let (dm, dc) = d.lex_leading().expect("nonzero divisor");
    let dm = *dm;
    let dc = dc.clone();
    let mut r = p.clone();
    let mut q = Polynomial::zero();
    while !r.is_zero() {
        let (rm, rc) = r.lex_leading().unwrap();
        if !dm.divides(rm) {
            return None;
        }
        let t = Polynomial::monomial(rc / &dc, rm.div(&dm));
        q = &q + &t;
        r = &r - &(&t * d);
    }
    Some(q)
}

/// Greatest common divisor, normalized primitive with positive lex-leading
/// coefficient; `gcd(p, 0)` is the normalization of `p`.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    require_not_both_zero(p, q)?;
    Ok(gcd_inner(p, q))
}

fn gcd_inner(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return q.normalize();
    }
    if q.is_zero() {
        return p.normalize();
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one();
    }
    // Main variable: the highest-index variable present in either operand;
    // a variable missing from one side can only divide through the content.
    let v = *p
        .variables()
        .iter()
        .chain(q.variables().iter())
        .max()
        .expect("non-constant operands have variables");
    if !p.contains_var(v) {
        let (content_q, _) = content_and_primitive(q, v);
        return gcd_inner(p, &content_q);
    }
    if !q.contains_var(v) {
        let (content_p, _) = content_and_primitive(p, v);
        return gcd_inner(q, &content_p);
    }

    let (content_p, mut a) = content_and_primitive(p, v);
    let (content_q, mut b) = content_and_primitive(q, v);
    let content_gcd = gcd_inner(&content_p, &content_q);

    if a.degree(v) < b.degree(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            let pp = primitive_part(&b, v);
            return (&content_gcd * &pp).normalize();
        }
        if r.degree(v) == 0 {
            // Coprime in v; only the content survives.
            return content_gcd;
        }
        a = b;
        b = primitive_part(&r, v);
    }
}

/// Content (gcd of the coefficients with respect to `v`, a polynomial in the
/// remaining variables) and the primitive part.
pub fn content_and_primitive(p: &Polynomial, v: Var) -> (Polynomial, Polynomial) {
    if p.is_zero() {
        return (Polynomial::zero(), Polynomial::zero());
    }
    let coeffs = p.coeffs_in(v);
    let mut c = Polynomial::zero();
    for coeff in coeffs.iter().filter(|c| !c.is_zero()) {
        c = gcd_inner(&c, coeff);
        if c.is_constant() {
            c = Polynomial::one();
            break;
        }
    }
    let pp = exact_div(&p.normalize(), &c).expect("content divides").normalize();
    (c, pp)
}

fn primitive_part(p: &Polynomial, v: Var) -> Polynomial {
    content_and_primitive(p, v).1
}

/// Square-free part: the product of the distinct irreducible factors,
/// normalized.  Computed as `p / gcd(p, dp/dv_1, dp/dv_2, ...)` over every
/// variable of `p` — a single partial derivative is not enough, since a
/// repeated factor free of the chosen variable would survive it.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::InvalidInput("square-free part of the zero polynomial".into()));
    }
    if p.is_constant() {
        return Ok(Polynomial::one());
    }
    let mut g = p.normalize();
    for v in p.variables() {
        let d = p.derivative(v);
        if !d.is_zero() {
            g = gcd_inner(&g, &d);
            if g.is_constant() {
                break;
            }
        }
    }
    let sf = exact_div(&p.normalize(), &g).expect("gcd with derivatives divides");
    Ok(sf.normalize())
}

/// True when `p` has no repeated factors.
pub fn is_squarefree(p: &Polynomial) -> Result<bool> {
    Ok(squarefree_part(p)?.total_degree() == p.total_degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial as parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p("x^2-1"), &p("x-1")).unwrap(), p("x-1"));
        assert_eq!(gcd(&p("x"), &p("y")).unwrap(), Polynomial::one());
        // gcd((x+y)x, (x+y)y) = x+y, verified by exact division of both inputs.
        let g = gcd(&p("(x+y)*x"), &p("(x+y)*y")).unwrap();
        assert_eq!(g, p("x+y"));
        assert!(exact_div(&p("(x+y)*x"), &g).is_some());
        assert!(exact_div(&p("(x+y)*y"), &g).is_some());
    }

    #[test]
    fn gcd_zero_and_errors() {
        assert_eq!(gcd(&p("2*x"), &Polynomial::zero()).unwrap(), p("x"));
        assert!(gcd(&Polynomial::zero(), &Polynomial::zero()).is_err());
    }

    #[test]
    fn exact_div_detects_nondivisors() {
        assert_eq!(exact_div(&p("x^2-1"), &p("x-1")).unwrap(), p("x+1"));
        assert!(exact_div(&p("x^2-1"), &p("x-2")).is_none());
        assert!(exact_div(&p("x^2*y - y"), &p("y")).is_some());
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&p("x^2")).unwrap(), p("x"));
        assert_eq!(squarefree_part(&p("(y-x)*(y-x)*(y+x)")).unwrap(), p("y^2 - x^2"));
        assert_eq!(squarefree_part(&p("5")).unwrap(), Polynomial::one());
        assert!(squarefree_part(&Polynomial::zero()).is_err());
    }

    #[test]
    fn squarefree_removes_factors_missing_the_main_variable() {
        // (y-1)^2 * x: the repeated factor is free of x.
        let q = p("(y-1)*(y-1)*x");
        assert_eq!(squarefree_part(&q).unwrap(), p("(y-1)*x").normalize());
    }

    #[test]
    fn squarefree_divides_and_has_constant_derivative_gcd() {
        let q = p("(x+y-1)*(x+y-1)*(x-y)*(x-y)*(x-y)*(x+2)");
        let sf = squarefree_part(&q).unwrap();
        assert!(exact_div(&q, &sf).is_some());
        // Squarefreeness: the gcd with all partials jointly is constant.  The
        // per-variable gcd need not be (the factor x+2 divides d(sf)/dy).
        let mut g = sf.clone();
        for v in sf.variables() {
            g = gcd(&g, &sf.derivative(v)).unwrap();
        }
        assert!(g.is_constant());
        assert!(is_squarefree(&sf).unwrap());

        // When every factor involves every variable the per-variable form
        // holds too.
        let r = p("(x+y-1)*(x-y)");
        for v in r.variables() {
            assert!(gcd(&r, &r.derivative(v)).unwrap().is_constant());
        }
    }
}
