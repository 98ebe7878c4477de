//! Independent reference implementations used by the test suites.
//!
//! Nothing in the main pipeline calls into this module; it exists so the
//! tests can check the production paths against structurally different
//! computations: the resultant against a Sylvester-matrix determinant, and
//! Descartes isolation against Sturm-sequence root counts.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::poly::{exact_div, Polynomial, Rational, Var};

/// Sylvester matrix of `(p, q)` with respect to `v`: `deg_v q` rows of `p`'s
/// coefficients on top, then `deg_v p` rows of `q`'s.
pub fn sylvester_matrix(p: &Polynomial, q: &Polynomial, v: Var) -> Vec<Vec<Polynomial>> {
    let pd = p.degree(v) as usize;
    let qd = q.degree(v) as usize;
    let n = pd + qd;
    let row_of = |poly: &Polynomial, deg: usize, shift: usize| {
        let coeffs = poly.coeffs_in(v);
        let mut row = vec![Polynomial::zero(); n];
        for (k, c) in coeffs.iter().enumerate() {
            debug_assert!(k <= deg);
            // Column j holds the coefficient of v^(n-1-j) of v^shift * poly,
            // padded into the n columns.
            let col = n - 1 - (k + shift);
            row[col] = c.clone();
        }
        row
    };
    let mut m = Vec::with_capacity(n);
    for r in 0..qd {
        m.push(row_of(p, pd, qd - 1 - r));
    }
    for r in 0..pd {
        m.push(row_of(q, qd, pd - 1 - r));
    }
    m
}

/// Determinant by fraction-free elimination; exact over the polynomial ring.
pub fn determinant(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Polynomial::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = exact_div(&t, &prev).expect("Bareiss step divides");
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate { -&d } else { d }
}

/// Resultant as the Sylvester determinant, with the same degenerate-degree
/// conventions as `poly::resultant`.
pub fn sylvester_resultant(p: &Polynomial, q: &Polynomial, v: Var) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let pd = p.degree(v);
    let qd = q.degree(v);
    if pd == 0 && qd == 0 {
        return Polynomial::one();
    }
    if qd == 0 {
        return q.pow(pd as u32);
    }
    if pd == 0 {
        return p.pow(qd as u32);
    }
    determinant(sylvester_matrix(p, q, v))
}

/// Sturm sequence of a univariate rational polynomial (dense coefficients,
/// index = degree): `p, p', -rem(...), ...`.
pub fn sturm_sequence(coeffs: &[Rational]) -> Vec<Vec<Rational>> {
    fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    }
    fn derivative(p: &[Rational]) -> Vec<Rational> {
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(i.into()))
            .collect()
    }
    fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lb = b.last().unwrap().clone();
        while r.len() >= b.len() && !r.is_empty() {
            let dr = r.len() - 1;
            let factor = r.last().unwrap() / &lb;
            for k in 0..=db {
                let idx = dr - db + k;
                let sub = &b[k] * &factor;
                r[idx] = &r[idx] - &sub;
            }
            r = trim(r);
            if r.len() <= db {
                break;
            }
        }
        r
    }

    let p = trim(coeffs.to_vec());
    if p.len() <= 1 {
        return vec![p];
    }
    let mut seq = vec![p.clone(), trim(derivative(&p))];
    loop {
        let n = seq.len();
        let a = &seq[n - 2];
        let b = &seq[n - 1];
        if b.is_empty() {
            seq.pop();
            break;
        }
        if b.len() == 1 {
            break;
        }
        let r = rem(a, b);
        if r.is_empty() {
            break;
        }
        seq.push(r.iter().map(|c| -c).collect());
    }
    seq
}

fn eval_dense(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn sign_variations(values: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in values {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots of a square-free `p` in the open interval
/// `(a, b)`; endpoints must not be roots.
pub fn sturm_count_interval(seq: &[Vec<Rational>], a: &Rational, b: &Rational) -> usize {
    let va = sign_variations(seq.iter().map(|p| sign_of(&eval_dense(p, a))));
    let vb = sign_variations(seq.iter().map(|p| sign_of(&eval_dense(p, b))));
    va - vb
}

/// Number of distinct real roots over all of R (signs at +-infinity come
/// from leading terms).
pub fn sturm_count_all(seq: &[Vec<Rational>]) -> usize {
    let at_inf = |dir: i32| {
        seq.iter().map(move |p| {
            if p.is_empty() {
                0
            } else {
                let lc = sign_of(p.last().unwrap());
                if dir > 0 || (p.len() - 1) % 2 == 0 {
                    lc
                } else {
                    -lc
                }
            }
        })
    };
    let v_neg = sign_variations(at_inf(-1));
    let v_pos = sign_variations(at_inf(1));
    v_neg - v_pos
}
