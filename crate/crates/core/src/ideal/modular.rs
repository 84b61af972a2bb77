//! Solving over the finite field F_q = F_p[ω] (q = p², p ≡ 2 mod 3, so ω stays
//! irreducible), and recovering the Q(ω) solutions of small height from it.
//!
//! This finds points; it does not prove that none were missed. A Q(ω) solution
//! whose coordinates need numerators or denominators beyond about 2^30 reduces
//! to an F_q solution that cannot be lifted back, and is only counted.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::engine::{self, Coeff, Outcome, Terms};
use super::{exps_key, lm_dimension, lm_staircase, lm_zero_dimensional, GroebnerConfig, Ideal};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{Monomial, MonomialOrder, MAX_VARS};

use alloc::collections::BTreeMap;

const P0: u64 = 0x3fff_ffff_ffff_ff71;
const P1: u64 = 0x3fff_ffff_ffff_ff59;

/// `a + b·ω` in F_p[ω].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Fq<const P: u64> {
    a: u64,
    b: u64,
}

fn mulmod<const P: u64>(x: u64, y: u64) -> u64 {
    ((x as u128 * y as u128) % P as u128) as u64
}

fn addmod<const P: u64>(x: u64, y: u64) -> u64 {
    let s = x + y;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn submod<const P: u64>(x: u64, y: u64) -> u64 {
    if x >= y {
        x - y
    } else {
        x + P - y
    }
}

fn powmod<const P: u64>(mut x: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod::<P>(acc, x);
        }
        x = mulmod::<P>(x, x);
        e >>= 1;
    }
    acc
}

fn rational_mod<const P: u64>(q: &BigRational) -> Option<u64> {
    let p = BigInt::from(P);
    let n = q.numer().mod_floor(&p).to_u64()?;
    let d = q.denom().mod_floor(&p).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod::<P>(n, powmod::<P>(d, P - 2)))
}

impl<const P: u64> Fq<P> {
    const ZERO: Self = Fq { a: 0, b: 0 };
    const ONE: Self = Fq { a: 1, b: 0 };

    fn new(a: u64, b: u64) -> Self {
        Fq { a: a % P, b: b % P }
    }

    fn from_field(x: &FieldElement) -> Option<Self> {
        Some(Fq { a: rational_mod::<P>(x.re())?, b: rational_mod::<P>(x.omega_part())? })
    }
}

impl<const P: u64> Coeff for Fq<P> {
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        Fq { a: addmod::<P>(self.a, rhs.a), b: addmod::<P>(self.b, rhs.b) }
    }

    // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
    fn mul(&self, rhs: &Self) -> Self {
        let ac = mulmod::<P>(self.a, rhs.a);
        let bd = mulmod::<P>(self.b, rhs.b);
        let cross = addmod::<P>(mulmod::<P>(self.a, rhs.b), mulmod::<P>(self.b, rhs.a));
        Fq { a: submod::<P>(ac, bd), b: submod::<P>(cross, bd) }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Fq { a: submod::<P>(self.a, rhs.a), b: submod::<P>(self.b, rhs.b) }
    }

    fn neg(&self) -> Self {
        Fq { a: submod::<P>(0, self.a), b: submod::<P>(0, self.b) }
    }

    // the conjugate (a − b) − bω over the norm a² − ab + b², which is nonzero
    // because x² + x + 1 has no root mod p
    fn inv(&self) -> Self {
        let norm = addmod::<P>(
            submod::<P>(mulmod::<P>(self.a, self.a), mulmod::<P>(self.a, self.b)),
            mulmod::<P>(self.b, self.b),
        );
        let ninv = powmod::<P>(norm, P - 2);
        Fq { a: mulmod::<P>(submod::<P>(self.a, self.b), ninv), b: mulmod::<P>(submod::<P>(0, self.b), ninv) }
    }
}

// ---- dense univariate polynomials over F_q, ascending coefficients ----

fn trim<const P: u64>(mut f: Vec<Fq<P>>) -> Vec<Fq<P>> {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

fn divrem<const P: u64>(a: &[Fq<P>], m: &[Fq<P>]) -> (Vec<Fq<P>>, Vec<Fq<P>>) {
    let dm = m.len() - 1;
    let lead_inv = m[dm].inv();
    let mut r = a.to_vec();
    if r.len() <= dm {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![Fq::ZERO; r.len() - dm];
    for k in (0..q.len()).rev() {
        let c = Coeff::mul(&r[k + dm], &lead_inv);
        if c.is_zero() {
            continue;
        }
        q[k] = c;
        for (i, mi) in m.iter().enumerate() {
            r[k + i] = r[k + i].sub(&Coeff::mul(&c, mi));
        }
    }
    r.truncate(dm);
    (trim(q), trim(r))
}

fn mul_mod<const P: u64>(a: &[Fq<P>], b: &[Fq<P>], m: &[Fq<P>]) -> Vec<Fq<P>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![Fq::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = prod[i + j].add(&Coeff::mul(x, y));
        }
    }
    divrem(&prod, m).1
}

fn pow_mod<const P: u64>(base: &[Fq<P>], mut e: u128, m: &[Fq<P>]) -> Vec<Fq<P>> {
    let mut acc = vec![Fq::ONE];
    let mut x = divrem(base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &x, m);
        }
        x = mul_mod(&x, &x, m);
        e >>= 1;
    }
    acc
}

fn monic_poly<const P: u64>(f: Vec<Fq<P>>) -> Vec<Fq<P>> {
    let f = trim(f);
    match f.last() {
        Some(l) => {
            let inv = l.inv();
            f.iter().map(|c| Coeff::mul(c, &inv)).collect()
        }
        None => f,
    }
}

fn gcd<const P: u64>(a: &[Fq<P>], b: &[Fq<P>]) -> Vec<Fq<P>> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = divrem(&a, &b).1;
        a = b;
        b = r;
    }
    monic_poly(a)
}

/// Splits a product of distinct linear factors into its roots.
fn split_linear<const P: u64>(g: Vec<Fq<P>>, out: &mut Vec<Fq<P>>) {
    let q = P as u128 * P as u128;
    match g.len() {
        0 | 1 => return,
        2 => {
            out.push(Coeff::mul(&g[0], &g[1].inv()).neg());
            return;
        }
        _ => {}
    }
    for k in 1u64.. {
        let shift = Fq::new(k, k.wrapping_mul(7) + 3);
        let pw = pow_mod(&[shift, Fq::ONE], (q - 1) / 2, &g);
        let mut pw = pw;
        if pw.is_empty() {
            pw.push(Fq::ZERO);
        }
        pw[0] = pw[0].sub(&Fq::ONE);
        let h = gcd(&g, &pw);
        if h.len() > 1 && h.len() < g.len() {
            let rest = monic_poly(divrem(&g, &h).0);
            split_linear(h, out);
            split_linear(rest, out);
            return;
        }
    }
}

/// Distinct roots in F_q.
fn roots<const P: u64>(f: &[Fq<P>]) -> Vec<Fq<P>> {
    let f = monic_poly(f.to_vec());
    if f.len() < 2 {
        return Vec::new();
    }
    let q = P as u128 * P as u128;
    // gcd with x^q − x keeps exactly the distinct linear factors
    let mut xq = pow_mod(&[Fq::ZERO, Fq::ONE], q, &f);
    while xq.len() < 2 {
        xq.push(Fq::ZERO);
    }
    xq[1] = xq[1].sub(&Fq::ONE);
    let g = gcd(&f, &trim(xq));
    let mut out = Vec::new();
    split_linear(g, &mut out);
    out
}

// ---- zero-dimensional solving over F_q ----

fn minimal_polynomial<const P: u64>(
    basis: &[Terms<Fq<P>>],
    n: usize,
    var: usize,
    cfg: &GroebnerConfig,
) -> Result<Vec<Fq<P>>> {
    let order = MonomialOrder::GrevLex;
    let lms: Vec<Monomial> = basis.iter().map(|g| g[0].0).collect();
    let stairs = lm_staircase(&lms, n, order, cfg)?;
    let index: BTreeMap<[u16; MAX_VARS], usize> =
        stairs.iter().enumerate().map(|(i, m)| (exps_key(m, n), i)).collect();
    let refs: Vec<&[(Monomial, Fq<P>)]> = basis.iter().map(|g| g.as_slice()).collect();
    let dim = stairs.len();
    let x = Monomial::var(var);
    let mut cur: Terms<Fq<P>> = engine::reduce_full(order, &[(Monomial::one(), Fq::ONE)], &refs);
    let mut rows: Vec<(Vec<Fq<P>>, usize, Vec<Fq<P>>)> = Vec::new();
    for k in 0..=dim {
        let mut v = vec![Fq::ZERO; dim];
        for (m, c) in &cur {
            v[index[&exps_key(m, n)]] = *c;
        }
        let mut comb = vec![Fq::ZERO; k + 1];
        comb[k] = Fq::ONE;
        for (rv, piv, rc) in &rows {
            let f = v[*piv];
            if f.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(rv) {
                *a = a.sub(&Coeff::mul(&f, b));
            }
            for (a, b) in comb.iter_mut().zip(rc) {
                *a = a.sub(&Coeff::mul(&f, b));
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => return Ok(monic_poly(comb)),
            Some(piv) => {
                let inv = v[piv].inv();
                let v = v.iter().map(|c| Coeff::mul(c, &inv)).collect();
                let comb = comb.iter().map(|c| Coeff::mul(c, &inv)).collect();
                rows.push((v, piv, comb));
            }
        }
        let shifted: Terms<Fq<P>> = cur.iter().map(|(m, c)| (m.mul(&x), *c)).collect();
        cur = engine::reduce_full(order, &shifted, &refs);
    }
    Err(Error::Internal("no linear dependence among powers in a finite quotient".into()))
}

/// Fixes variables from the last one down, branching on the roots of each
/// minimal polynomial.
fn descend<const P: u64>(
    basis: Vec<Terms<Fq<P>>>,
    n: usize,
    fixed: &mut Vec<Fq<P>>,
    out: &mut Vec<Vec<Fq<P>>>,
    cfg: &GroebnerConfig,
) -> Result<()> {
    if fixed.len() == n {
        let mut point = fixed.clone();
        point.reverse();
        out.push(point);
        return Ok(());
    }
    let var = n - 1 - fixed.len();
    for r in roots(&minimal_polynomial(&basis, n, var, cfg)?) {
        let mut fix = vec![(Monomial::var(var), Fq::ONE)];
        if !r.is_zero() {
            fix.push((Monomial::one(), r.neg()));
        }
        let mut gens = basis.clone();
        gens.push(fix);
        if let Outcome::Basis(b) = engine::buchberger(MonomialOrder::GrevLex, gens, cfg)? {
            fixed.push(r);
            descend(b, n, fixed, out, cfg)?;
            fixed.pop();
        }
    }
    Ok(())
}

fn solve_mod<const P: u64>(ideal: &Ideal, cfg: &GroebnerConfig) -> Result<Option<Vec<Vec<Fq<P>>>>> {
    let n = ideal.ring().nvars();
    let mut gens = Vec::new();
    for g in ideal.generators() {
        let mut terms = Vec::with_capacity(g.len());
        for (m, c) in g.terms() {
            let Some(c) = Fq::<P>::from_field(c) else { return Ok(None) };
            if !c.is_zero() {
                terms.push((*m, c));
            }
        }
        terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(&b.0, &a.0));
        gens.push(terms);
    }
    let basis = match engine::buchberger(MonomialOrder::GrevLex, gens, cfg)? {
        Outcome::Unit => return Ok(Some(Vec::new())),
        Outcome::Basis(b) => b,
    };
    let lms: Vec<Monomial> = basis.iter().map(|g| g[0].0).collect();
    if !lm_zero_dimensional(&lms, n) {
        return Err(Error::NotZeroDimensional { dimension: lm_dimension(&lms, n) });
    }
    let mut out = Vec::new();
    descend(basis, n, &mut Vec::new(), &mut out, cfg)?;
    Ok(Some(out))
}

/// Rational `n/d` with `|n|, d ≤ √(p/2)` and `n ≡ r·d (mod p)`, if there is one.
fn reconstruct<const P: u64>(r: u64) -> Option<BigRational> {
    let bound = num_integer::Roots::sqrt(&(P / 2)) as i128;
    let (mut r0, mut r1) = (P as i128, r as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    if num.gcd(&den) != 1 {
        return None;
    }
    Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

fn lift<const P: u64>(point: &[Fq<P>]) -> Option<Vec<FieldElement>> {
    point
        .iter()
        .map(|c| Some(FieldElement::new(reconstruct::<P>(c.a)?, reconstruct::<P>(c.b)?)))
        .collect()
}

/// Solutions in Q(ω) of small height, found through F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallPoints {
    /// Exact solutions, sorted and distinct.
    pub points: Vec<Vec<FieldElement>>,
    /// F_q solutions that did not lift to an exact solution.
    pub unlifted: usize,
}

/// Solutions of a zero-dimensional ideal whose coordinates have small height.
/// Every returned point is checked exactly against the generators.
pub fn small_height_points(ideal: &Ideal, cfg: &GroebnerConfig) -> Result<SmallPoints> {
    fn finish<const P: u64>(ideal: &Ideal, found: Vec<Vec<Fq<P>>>) -> Result<SmallPoints> {
        let mut points = Vec::new();
        let mut unlifted = 0;
        for p in &found {
            match lift(p) {
                Some(x) if ideal_vanishes(ideal, &x)? => points.push(x),
                _ => unlifted += 1,
            }
        }
        points.sort();
        points.dedup();
        Ok(SmallPoints { points, unlifted })
    }
    if let Some(found) = solve_mod::<P0>(ideal, cfg)? {
        return finish(ideal, found);
    }
    if let Some(found) = solve_mod::<P1>(ideal, cfg)? {
        return finish(ideal, found);
    }
    Err(Error::Internal("both working primes divide a coefficient denominator".into()))
}

fn ideal_vanishes(ideal: &Ideal, x: &[FieldElement]) -> Result<bool> {
    for g in ideal.generators() {
        if !g.evaluate(x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
