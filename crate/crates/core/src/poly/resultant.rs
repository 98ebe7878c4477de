//! Resultants and subresultants.
//!
//! `resultant` runs a pseudo-remainder sequence with content extraction at
//! every step, tracking the removed factors exactly so the returned value
//! equals the Sylvester determinant (with the first polynomial's coefficients
//! in the top rows) including its sign.  The determinant itself is kept in
//! `crate::oracle` as an independent cross-check.
//!
//! `subresultant`/`subresultant_chain` compute the determinant-defined
//! subresultant polynomials `S_j`.  Unlike remainder sequences these commute
//! with specialization of the coefficients, which is what the generic-position
//! tests and the algebraic fiber counts rely on.

use num_traits::{One, Signed};

use super::gcd::{content_and_primitive, exact_div};
use super::{pow_rat, pseudo_rem, require_not_both_zero, Mono, Polynomial, Rational, Var};
use crate::error::Result;

/// Exact factorization `p = c * content * pp` with `content` and `pp`
/// normalized primitive with positive lex-leading coefficient.
fn factor_content_exact(p: &Polynomial, v: Var) -> (Rational, Polynomial, Polynomial) {
    debug_assert!(!p.is_zero());
    let (content, _) = content_and_primitive(p, v);
    let pp0 = exact_div(p, &content).expect("content divides");
    let pp = pp0.normalize();
    // pp0 = c * pp with c the rational content signed by the leading term.
    let mut c = pp0.rational_content();
    if pp0.lex_leading().map(|(_, lc)| lc.is_negative()).unwrap_or(false) {
        c = -c;
    }
    debug_assert_eq!(pp.scale(&c), pp0);
    (c, content, pp)
}

/// Product of polynomial powers with signed exponents, applied at the end via
/// exact division.
struct FactorProduct {
    scalar: Rational,
    negative: bool,
    factors: Vec<(Polynomial, i64)>,
}

impl FactorProduct {
    fn new() -> Self {
        FactorProduct { scalar: Rational::one(), negative: false, factors: Vec::new() }
    }

    fn flip_sign_if(&mut self, odd: bool) {
        if odd {
            self.negative = !self.negative;
        }
    }

    fn mul_scalar(&mut self, c: Rational) {
        self.scalar *= c;
    }

    fn mul_poly(&mut self, p: &Polynomial, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(c) = p.as_constant() {
            // Constant factors fold into the scalar.
            if exp > 0 {
                self.scalar *= pow_rat(&c, exp as u32);
            } else {
                self.scalar *= pow_rat(&c.recip(), (-exp) as u32);
            }
            return;
        }
        for (f, e) in &mut self.factors {
            if f == p {
                *e += exp;
                return;
            }
        }
        self.factors.push((p.clone(), exp));
    }

    fn apply(self, base: Polynomial) -> Polynomial {
        let mut result = base.scale(&self.scalar);
        if self.negative {
            result = -&result;
        }
        for (f, e) in &self.factors {
            if *e > 0 {
                for _ in 0..*e {
                    result = &result * f;
                }
            }
        }
        for (f, e) in &self.factors {
            if *e < 0 {
                for _ in 0..(-*e) {
                    result = exact_div(&result, f)
                        .expect("tracked resultant factor divides exactly");
                }
            }
        }
        result
    }
}

/// Resultant of `p` and `q` with respect to `v`.
///
/// Conventions for degenerate degrees in `v` (with `a = deg_v p`,
/// `b = deg_v q`): both constants give 1 (empty Sylvester matrix); a
/// constant `q` gives `q^a` and symmetrically; an identically zero input
/// gives 0 unless both are zero, which is an error.
pub fn resultant(p: &Polynomial, q: &Polynomial, v: Var) -> Result<Polynomial> {
    require_not_both_zero(p, q)?;
    if p.is_zero() || q.is_zero() {
        let (nz, z_deg) = if p.is_zero() { (q, q.degree(v)) } else { (p, p.degree(v)) };
        let _ = nz;
        return Ok(if z_deg == 0 { Polynomial::zero() } else { Polynomial::zero() });
    }
    let mut a = p.degree(v);
    let mut b = q.degree(v);
    if a == 0 && b == 0 {
        return Ok(Polynomial::one());
    }
    if b == 0 {
        return Ok(q.pow(a as u32));
    }
    if a == 0 {
        return Ok(p.pow(b as u32));
    }

    let mut fac = FactorProduct::new();
    let mut big = p.clone();
    let mut small = q.clone();
    if a < b {
        std::mem::swap(&mut big, &mut small);
        std::mem::swap(&mut a, &mut b);
        fac.flip_sign_if((a as u32 * b as u32) % 2 == 1);
    }

    // Invariant: result = fac * Res(big, small), a >= b >= 1.
    loop {
        let rt = pseudo_rem(&big, &small, v);
        if rt.is_zero() {
            // small divides lc^k * big with deg small >= 1: common root locus.
            return Ok(Polynomial::zero());
        }
        let (c, cont, r) = factor_content_exact(&rt, v);
        let rdeg = r.degree(v);
        let lc_small = small.leading_coeff(v);

        // Res(big, small) = (-1)^(ab) * lc(small)^(a - rdeg - (a-b+1)b)
        //                   * (c*cont)^b * Res(small, r)
        fac.flip_sign_if((a as u32 * b as u32) % 2 == 1);
        let e = a as i64 - rdeg as i64 - (a as i64 - b as i64 + 1) * b as i64;
        fac.mul_poly(&lc_small, e);
        fac.mul_scalar(pow_rat(&c, b as u32));
        fac.mul_poly(&cont, b as i64);

        big = small;
        a = b;
        small = r;
        b = rdeg;
        if b == 0 {
            // Res(big, small) with small constant in v.
            let base = small.pow(a as u32);
            return Ok(fac.apply(base));
        }
    }
}

/// Fraction-free determinant (Bareiss) over the polynomial ring.
pub(crate) fn det_bareiss(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut negative = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Polynomial::zero();
            };
            m.swap(k, swap);
            negative = !negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = exact_div(&t, &prev).expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negative { -&det } else { det }
}

fn coeff_row(p: &Polynomial, v: Var, shift: usize, width: usize) -> Vec<Polynomial> {
    // Row of coefficients of v^shift * p, columns by descending degree
    // width-1 .. 0.
    let coeffs = p.coeffs_in(v);
    let mut row = vec![Polynomial::zero(); width];
    for (k, c) in coeffs.iter().enumerate() {
        let deg = k + shift;
        debug_assert!(deg < width);
        row[width - 1 - deg] = c.clone();
    }
    row
}

/// Bordered determinants via one rectangular fraction-free elimination:
/// eliminates the first `rows-1` columns; afterwards the last surviving row's
/// entry in column `c` equals the determinant of (pivot columns + column c).
/// Returns `None` when a pivot column has no nonzero entry below the pivot
/// row, in which case every bordered determinant vanishes.
fn bordered_determinants(mut m: Vec<Vec<Polynomial>>) -> Option<Vec<Polynomial>> {
    let rows = m.len();
    debug_assert!(rows >= 1);
    let width = m[0].len();
    debug_assert!(width >= rows);
    let pivots = rows - 1;
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..pivots {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..rows).find(|&i| !m[i][k].is_zero()) else {
                // Pivot columns 0..=k live on rows 0..k: dependent columns.
                return None;
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..rows {
            for j in k + 1..width {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = exact_div(&t, &prev).expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let mut last = m.pop().expect("at least one row");
    if negate {
        for e in &mut last {
            *e = -&*e;
        }
    }
    Some(last)
}

fn subresultant_matrix(p: &Polynomial, q: &Polynomial, v: Var, j: usize) -> Vec<Vec<Polynomial>> {
    let pd = p.degree(v) as usize;
    let qd = q.degree(v) as usize;
    let rows = pd + qd - 2 * j;
    let width = pd + qd - j;
    let mut base: Vec<Vec<Polynomial>> = Vec::with_capacity(rows);
    for r in 0..qd - j {
        base.push(coeff_row(p, v, qd - j - 1 - r, width));
    }
    for r in 0..pd - j {
        base.push(coeff_row(q, v, pd - j - 1 - r, width));
    }
    base
}

/// The subresultant polynomial `S_j(p, q)` with respect to `v`, defined by
/// the determinant formula; requires `deg_v p > deg_v q > j >= 0`.
/// `S_0` equals the resultant.
pub fn subresultant(p: &Polynomial, q: &Polynomial, v: Var, j: usize) -> Polynomial {
    let pd = p.degree(v) as usize;
    let qd = q.degree(v) as usize;
    assert!(pd > qd && j < qd, "subresultant index out of range");
    let rows = pd + qd - 2 * j;
    let width = pd + qd - j;
    let base = subresultant_matrix(p, q, v, j);
    let Some(borders) = bordered_determinants(base) else {
        return Polynomial::zero();
    };
    let mut out = Polynomial::zero();
    for i in 0..=j {
        let col_i = width - 1 - i;
        if col_i < rows - 1 {
            continue; // duplicated pivot column, determinant vanishes
        }
        let d = &borders[col_i];
        if !d.is_zero() {
            let mut e = [0u16; 4];
            e[v.index()] = i as u16;
            out = &out + &(d * &Polynomial::monomial(Rational::one(), Mono(e)));
        }
    }
    out
}

/// The whole chain `S_0, ..., S_(qd-1)` for `deg_v p > deg_v q`.
pub fn subresultant_chain(p: &Polynomial, q: &Polynomial, v: Var) -> Vec<Polynomial> {
    let qd = q.degree(v) as usize;
    (0..qd).map(|j| subresultant(p, q, v, j)).collect()
}

/// Principal subresultant coefficients `sres_j = coeff of v^j in S_j`,
/// for `j = 0 .. deg_v q - 1`.
pub fn principal_subresultant_coefficients(
    p: &Polynomial,
    q: &Polynomial,
    v: Var,
) -> Vec<Polynomial> {
    let qd = q.degree(v) as usize;
    (0..qd)
        .map(|j| subresultant(p, q, v, j).coeff_of(v, j as u16))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial as parse;
    use crate::poly::rat_int;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p("z-x"), &p("z-y"), Var::Z).unwrap(), p("x - y"));
        assert_eq!(resultant(&p("z-x"), &p("2*z-2*x"), Var::Z).unwrap(), Polynomial::zero());
        // Sign convention fixed by the Sylvester determinant with the first
        // argument's coefficients in the top rows.
        assert_eq!(resultant(&p("y^2-x"), &p("y"), Var::Y).unwrap(), p("0-x"));
    }

    #[test]
    fn resultant_degenerate_degrees() {
        // deg_v(q) = 0 gives q^deg_v(p).
        assert_eq!(resultant(&p("z^2-x"), &p("y"), Var::Z).unwrap(), p("y^2"));
        assert_eq!(resultant(&p("y"), &p("z^2-x"), Var::Z).unwrap(), p("y^2"));
        assert_eq!(resultant(&p("3"), &p("5"), Var::Z).unwrap(), Polynomial::one());
        assert!(resultant(&Polynomial::zero(), &Polynomial::zero(), Var::Z).is_err());
        assert_eq!(resultant(&Polynomial::zero(), &p("z-1"), Var::Z).unwrap(), Polynomial::zero());
    }

    #[test]
    fn resultant_univariate_vs_known() {
        // Res(x^2-1, x-1) = 0 (shared root), Res(x^2-2, x-1) = -1.
        assert_eq!(resultant(&p("x^2-1"), &p("x-1"), Var::X).unwrap(), Polynomial::zero());
        let r = resultant(&p("x^2-2"), &p("x-1"), Var::X).unwrap();
        assert_eq!(r, Polynomial::constant(rat_int(-1)));
    }

    #[test]
    fn subresultant_zero_matches_resultant() {
        let a = p("y^3 + x*y + 1");
        let b = p("2*y^2 - x");
        let s0 = subresultant(&a, &b, Var::Y, 0);
        let r = resultant(&a, &b, Var::Y).unwrap();
        assert_eq!(s0, r);
    }

    #[test]
    fn subresultant_specialization_gives_gcd() {
        // h = (y^2 - x)(y - 1): at x = 1 the specialization has the double
        // structure gcd(h, h_y)(1, y) ~ y - 1.
        let h = &p("y^2 - x") * &p("y - 1");
        let hy = h.derivative(Var::Y);
        let chain = subresultant_chain(&h, &hy, Var::Y);
        // sres_0(1) = 0, sres_1(1) != 0, and S_1(1, y) ~ (y - 1).
        let s0 = chain[0].evaluate_partial(&[(Var::X, rat_int(1))]);
        assert!(s0.is_zero());
        let s1 = chain[1].evaluate_partial(&[(Var::X, rat_int(1))]);
        assert!(!s1.is_zero());
        assert_eq!(s1.normalize(), p("y - 1"));
    }

    #[test]
    fn subresultant_matches_square_determinants() {
        // The fast bordered-elimination path against plain determinants of
        // the defining square matrices.
        let cases = [
            ("y^4 + x*y + 1", "3*y^2 - x"),
            ("y^5 - x^2*y + 2", "y^3 + y + x"),
            ("x^2*y^3 + y - 1", "y^2 + x"),
        ];
        for (a, b) in cases {
            let a = p(a);
            let b = p(b);
            let pd = a.degree(Var::Y) as usize;
            let qd = b.degree(Var::Y) as usize;
            for j in 0..qd {
                let fast = subresultant(&a, &b, Var::Y, j);
                // Square-determinant route.
                let rows = pd + qd - 2 * j;
                let width = pd + qd - j;
                let base = subresultant_matrix(&a, &b, Var::Y, j);
                let mut slow = Polynomial::zero();
                for i in 0..=j {
                    let col_i = width - 1 - i;
                    if col_i < rows - 1 {
                        continue;
                    }
                    let mut m = Vec::new();
                    for row in &base {
                        let mut r: Vec<Polynomial> = row[..rows - 1].to_vec();
                        r.push(row[col_i].clone());
                        m.push(r);
                    }
                    let d = det_bareiss(m);
                    let mut e = [0u16; 4];
                    e[Var::Y.index()] = i as u16;
                    slow = &slow + &(&d * &Polynomial::monomial(Rational::one(), Mono(e)));
                }
                assert_eq!(fast, slow, "S_{} of ({}, {})", j, a, b);
            }
        }
    }

    #[test]
    fn bareiss_det_small() {
        let m = vec![
            vec![p("x"), p("1")],
            vec![p("1"), p("x")],
        ];
        assert_eq!(det_bareiss(m), p("x^2 - 1"));
        assert_eq!(det_bareiss(vec![]), Polynomial::one());
    }
}
