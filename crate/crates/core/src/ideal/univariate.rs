//! Dense univariate polynomials over Q(ω) and exact root finding.
//!
//! Coefficient vectors are ascending: `p[k]` multiplies `x^k`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{BigRational, EisensteinInt, Field, FieldElement};
use crate::poly::MPoly;

/// Roots with multiplicities plus whatever monic square-free factor had no roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootResult {
    pub roots: Vec<(FieldElement, u32)>,
    pub unresolved: Option<MPoly>,
}

/// All roots of a univariate polynomial that lie in `field`.
pub fn univariate_roots(p: &MPoly, field: Field) -> Result<RootResult> {
    if p.is_zero() {
        return Err(Error::InvalidRing("root finding needs a nonzero polynomial".into()));
    }
    let vars = p.support_vars();
    if vars.len() > 1 {
        return Err(Error::InvalidRing("polynomial is not univariate".into()));
    }
    let Some(&var) = vars.first() else {
        return Ok(RootResult { roots: Vec::new(), unresolved: None });
    };
    let coeffs = p.univariate_coeffs(var).expect("univariate");
    let (roots, rest) = dense_roots(&coeffs, field)?;
    Ok(RootResult {
        roots,
        unresolved: rest.map(|r| MPoly::from_univariate(p.ring(), var, &r)),
    })
}

pub(crate) fn trim(mut p: Vec<FieldElement>) -> Vec<FieldElement> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn monic(p: &[FieldElement]) -> Vec<FieldElement> {
    let p = trim(p.to_vec());
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub(crate) fn derivative(p: &[FieldElement]) -> Vec<FieldElement> {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * &FieldElement::from_int(k as i64)).collect())
}

pub(crate) fn eval(p: &[FieldElement], x: &FieldElement) -> FieldElement {
    p.iter().rev().fold(FieldElement::zero(), |acc, c| &(&acc * x) + c)
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[FieldElement], b: &[FieldElement]) -> (Vec<FieldElement>, Vec<FieldElement>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let inv = b[db].inv().expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![FieldElement::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() * &inv;
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[k + i] -= &t;
        }
        q[k] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn gcd(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

/// Divides by `(x − r)`, returning the quotient and the remainder `p(r)`.
fn deflate(p: &[FieldElement], r: &FieldElement) -> (Vec<FieldElement>, FieldElement) {
    let n = p.len();
    let mut q = vec![FieldElement::zero(); n.saturating_sub(1)];
    let mut carry = FieldElement::zero();
    for k in (0..n).rev() {
        let v = &p[k] + &(&carry * r);
        if k == 0 {
            return (q, v);
        }
        q[k - 1] = v.clone();
        carry = v;
    }
    (q, carry)
}

/// Scales to coprime Eisenstein-integer coefficients.
fn integral(p: &[FieldElement]) -> Vec<EisensteinInt> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let scaled: Vec<EisensteinInt> = p
        .iter()
        .map(|c| c.scale(&BigRational::from_integer(l.clone())).to_eisenstein().expect("cleared"))
        .collect();
    let g = scaled
        .iter()
        .fold(BigInt::zero(), |acc, e| acc.gcd(&e.a).gcd(&e.b));
    if g.is_zero() || g.is_one() {
        return scaled;
    }
    scaled.iter().map(|e| EisensteinInt::new(&e.a / &g, &e.b / &g)).collect()
}

/// Finds one root of a square-free `p` with nonzero constant term, if any exists in `field`.
fn find_root(p: &[FieldElement], field: Field) -> Result<Option<FieldElement>> {
    let deg = p.len() - 1;
    if deg == 1 {
        let r = -&p[0].checked_div(&p[1])?;
        return Ok(field.contains(&r).then_some(r));
    }
    let ints = integral(p);
    let lead_divs = ints[deg].divisors()?;
    let const_divs = ints[0].divisors()?;
    let mut tried = BTreeSet::new();
    for e in &lead_divs {
        let e_inv = e.to_field().inv()?;
        for d in &const_divs {
            let base = &d.to_field() * &e_inv;
            for u in EisensteinInt::units() {
                let cand = &u.to_field() * &base;
                if !field.contains(&cand) || !tried.insert(cand.clone()) {
                    continue;
                }
                if eval(p, &cand).is_zero() {
                    return Ok(Some(cand));
                }
            }
        }
    }
    Ok(None)
}

/// Roots in `field` with multiplicity, and the monic square-free cofactor left over
/// (`None` when everything split).
pub(crate) fn dense_roots(
    p: &[FieldElement],
    field: Field,
) -> Result<(Vec<(FieldElement, u32)>, Option<Vec<FieldElement>>)> {
    let p = monic(p);
    if p.len() <= 1 {
        return Ok((Vec::new(), None));
    }
    let mut roots = Vec::new();
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    let nonzero_part: Vec<FieldElement> = p[zeros..].to_vec();
    if zeros > 0 {
        roots.push((FieldElement::zero(), zeros as u32));
    }
    if nonzero_part.len() > 1 {
        let g = gcd(&nonzero_part, &derivative(&nonzero_part));
        let (mut sqf, _) = divrem(&nonzero_part, &g);
        sqf = monic(&sqf);
        let mut found = Vec::new();
        while sqf.len() > 1 {
            match find_root(&sqf, field)? {
                Some(r) => {
                    let (q, rem) = deflate(&sqf, &r);
                    debug_assert!(rem.is_zero());
                    sqf = q;
                    found.push(r);
                }
                None => break,
            }
        }
        for r in found {
            let mut m = 0;
            let mut cur = nonzero_part.clone();
            loop {
                let (q, rem) = deflate(&cur, &r);
                if !rem.is_zero() {
                    break;
                }
                m += 1;
                cur = q;
            }
            roots.push((r, m));
        }
        roots.sort();
        if sqf.len() > 1 {
            return Ok((roots, Some(monic(&sqf))));
        }
    }
    Ok((roots, None))
}
