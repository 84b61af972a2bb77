//! Sparse multivariate polynomials over [`FieldElement`].
//!
//! A polynomial lives in an explicit [`PolyRing`]: an ordered list of variable
//! names plus a monomial order. Mixing polynomials from different rings is an
//! error, never a silent unification.

pub mod parse;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Maximum number of variables in a ring.
pub const MAX_VARS: usize = 16;

/// Exponent vector. Slots past the ring's variable count are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], degree: 0 }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("more than {} variables", MAX_VARS)));
        }
        let mut m = Self::one();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = e;
            m.degree += e as u32;
        }
        Ok(m)
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(*o).expect("monomial exponent overflow");
        }
        Monomial { exps, degree: self.degree + other.degree }
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= *s;
        }
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        let mut degree = 0;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).max(*o);
            degree += *e as u32;
        }
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the only variable occurring, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    fn with_exponent(&self, i: usize, e: u16) -> Self {
        let mut m = *self;
        m.degree = m.degree - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "Monomial({:?})", &self.exps[..last])
    }
}

/// Monomial orders. Ties are impossible: both are total orders on exponent vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => a.degree.cmp(&b.degree).then_with(|| {
                for i in (0..MAX_VARS).rev() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Variable names plus monomial order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S], order: MonomialOrder) -> Result<RingRef> {
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("more than {} variables", MAX_VARS)));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !parse::is_identifier(n) || n == "w" {
                return Err(Error::InvalidRing(format!("invalid variable name `{}`", n)));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{}`", n)));
            }
        }
        Ok(Arc::new(PolyRing { names, order }))
    }

    /// `x0..x4` in the given order.
    pub fn projective4(order: MonomialOrder) -> RingRef {
        Self::new(&["x0", "x1", "x2", "x3", "x4"], order).expect("valid names")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(PolyRing { names: self.names.clone(), order })
    }

    /// The ring obtained by deleting the listed variables.
    pub fn without(&self, vars: &[usize]) -> RingRef {
        let names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| !vars.contains(i))
            .map(|(_, n)| n.clone())
            .collect();
        Arc::new(PolyRing { names, order: self.order })
    }

    pub fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

pub type Term = (Monomial, FieldElement);

/// A polynomial as a list of terms, strictly decreasing in the ring's order,
/// with no zero coefficients.
#[derive(Clone)]
pub struct MPoly {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(ring: &RingRef) -> Self {
        MPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: FieldElement) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, FieldElement::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::monomial(ring, Monomial::var(i), FieldElement::one())
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: FieldElement) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MPoly { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        MPoly { ring: ring.clone(), terms: out }
    }

    pub fn parse(ring: &RingRef, text: &str) -> Result<Self> {
        parse::parse_poly(ring, text)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant term.
    pub fn constant_coeff(&self) -> FieldElement {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => FieldElement::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    /// Coefficient of an exact monomial.
    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        let order = self.ring.order();
        match self.terms.binary_search_by(|(t, _)| order.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => FieldElement::zero(),
        }
    }

    /// Variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .collect()
    }

    fn check_ring(&self, other: &MPoly) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let order = self.ring.order();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        MPoly { ring: self.ring.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(&self.ring);
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2), c1 * c2));
            }
        }
        MPoly::from_terms(&self.ring, terms)
    }

    /// `self − c·m·g`, the elementary reduction step.
    pub fn sub_scaled(&self, c: &FieldElement, m: &Monomial, g: &MPoly) -> MPoly {
        let order = self.ring.order();
        let a = &self.terms;
        let mut out = Vec::with_capacity(a.len() + g.len());
        let mut i = 0;
        for (gm, gc) in &g.terms {
            let bm = gm.mul(m);
            let bc = c * gc;
            while i < a.len() && order.cmp(&a[i].0, &bm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].0 == bm {
                let s = &a[i].1 - &bc;
                if !s.is_zero() {
                    out.push((bm, s));
                }
                i += 1;
            } else {
                out.push((bm, -bc));
            }
        }
        out.extend(a[i..].iter().cloned());
        MPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: &FieldElement) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &FieldElement) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> MPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> MPoly {
        assert!(i < self.ring.nvars(), "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                (m.with_exponent(i, e - 1), c * &FieldElement::from_int(e as i64))
            })
            .collect();
        // differentiation can reorder terms under grevlex
        MPoly::from_terms(&self.ring, terms)
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                n
            )));
        }
        let mut powers: Vec<Vec<FieldElement>> = vec![vec![FieldElement::one()]; n];
        let mut acc = FieldElement::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..n {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &point[i];
                    powers[i].push(next);
                }
                v = &v * &powers[i][e];
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// Composition `f(images)`: variable `i` is replaced by `images[i]`. All images
    /// must share one target ring.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                n
            )));
        }
        let target = match images.first() {
            Some(g) => g.ring.clone(),
            None => {
                return Err(Error::DimensionMismatch("substitution into a ring with no variables".into()))
            }
        };
        if images.iter().any(|g| !PolyRing::same(&g.ring, &target)) {
            return Err(Error::ContextMismatch);
        }
        let mut powers: Vec<Vec<MPoly>> = vec![vec![MPoly::one(&target)]; n];
        let mut terms: Vec<Term> = Vec::new();
        for (m, c) in &self.terms {
            let mut prod = MPoly::constant(&target, c.clone());
            for i in 0..n {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                prod = prod.mul_unchecked(&powers[i][e]);
            }
            terms.extend(prod.terms);
        }
        Ok(MPoly::from_terms(&target, terms))
    }

    /// Sets variable `var` to `value` and drops it, landing in `target`, which must
    /// be this ring without `var`.
    pub fn specialize(&self, var: usize, value: &FieldElement, target: &RingRef) -> Result<MPoly> {
        let n = self.ring.nvars();
        if target.nvars() + 1 != n
            || (0..n).filter(|&i| i != var).zip(target.names()).any(|(i, t)| &self.ring.names[i] != t)
        {
            return Err(Error::ContextMismatch);
        }
        let mut powers = vec![FieldElement::one()];
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let coeff = c * &powers[e];
            if coeff.is_zero() {
                continue;
            }
            let mut exps = [0u16; MAX_VARS];
            let mut k = 0;
            for i in 0..n {
                if i != var {
                    exps[k] = m.exponent(i);
                    k += 1;
                }
            }
            terms.push((Monomial::from_exponents(&exps[..k])?, coeff));
        }
        Ok(MPoly::from_terms(target, terms))
    }

    /// Moves the polynomial into another ring by variable name. Every variable that
    /// occurs must exist in `target`.
    pub fn embed(&self, target: &RingRef) -> Result<MPoly> {
        let n = self.ring.nvars();
        let mut map = Vec::with_capacity(n);
        for name in self.ring.names() {
            map.push(target.index_of(name));
        }
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut exps = [0u16; MAX_VARS];
            for (i, slot) in map.iter().enumerate() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                match slot {
                    Some(j) => exps[*j] = e,
                    None => return Err(Error::ContextMismatch),
                }
            }
            terms.push((Monomial::from_exponents(&exps[..target.nvars()])?, c.clone()));
        }
        Ok(MPoly::from_terms(target, terms))
    }

    /// Splits the polynomial by its multidegree in `in_vars`. Coefficients live in
    /// the ring of the remaining variables; the map is keyed by multidegree.
    pub fn coefficients_in(&self, in_vars: &[usize]) -> (RingRef, BTreeMap<Vec<u16>, MPoly>) {
        let rest = self.ring.without(in_vars);
        let n = self.ring.nvars();
        let mut buckets: BTreeMap<Vec<u16>, Vec<Term>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u16> = in_vars.iter().map(|&v| m.exponent(v)).collect();
            let mut exps = [0u16; MAX_VARS];
            let mut k = 0;
            for i in 0..n {
                if !in_vars.contains(&i) {
                    exps[k] = m.exponent(i);
                    k += 1;
                }
            }
            let mono = Monomial::from_exponents(&exps[..k]).expect("fits");
            buckets.entry(key).or_default().push((mono, c.clone()));
        }
        let map = buckets
            .into_iter()
            .map(|(k, ts)| (k, MPoly::from_terms(&rest, ts)))
            .collect();
        (rest, map)
    }

    /// Coefficient of `∏ in_vars[k]^multidegree[k]`, as a polynomial in the remaining variables.
    pub fn coefficient_extract(&self, in_vars: &[usize], multidegree: &[u16]) -> Result<MPoly> {
        if in_vars.len() != multidegree.len() {
            return Err(Error::DimensionMismatch("multidegree length".into()));
        }
        let (rest, mut map) = self.coefficients_in(in_vars);
        Ok(map.remove(multidegree).unwrap_or_else(|| MPoly::zero(&rest)))
    }

    /// Dense ascending coefficients in `var`, if no other variable occurs.
    pub fn univariate_coeffs(&self, var: usize) -> Option<Vec<FieldElement>> {
        let deg = self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0) as usize;
        let mut out = vec![FieldElement::zero(); deg + 1];
        for (m, c) in &self.terms {
            if m.degree() != m.exponent(var) as u32 {
                return None;
            }
            out[m.exponent(var) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(ring: &RingRef, var: usize, coeffs: &[FieldElement]) -> MPoly {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial::var(var).with_exponent(var, e as u16), c.clone()))
            .collect();
        MPoly::from_terms(ring, terms)
    }

    /// Exact division by `var^k`, if every term is divisible.
    pub fn div_var_power(&self, var: usize, k: u16) -> Option<MPoly> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e < k {
                return None;
            }
            terms.push((m.with_exponent(var, e - k), c.clone()));
        }
        Some(MPoly::from_terms(&self.ring, terms))
    }

    /// Largest `k` with `var^k` dividing the polynomial (`None` for zero).
    pub fn var_valuation(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exponent(var)).min()
    }

    /// Exact division by a nonzero polynomial; returns `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &MPoly) -> Result<Option<MPoly>> {
        self.check_ring(d)?;
        let (dm, dc) = match d.leading_term() {
            Some(t) => t.clone(),
            None => return Err(Error::DivisionByZero),
        };
        let dc_inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let q = match dm.quotient_of(&m) {
                Some(q) => q,
                None => return Ok(None),
            };
            let k = &c * &dc_inv;
            rem = rem.sub_scaled(&k, &q, d);
            quot.push((q, k));
        }
        Ok(Some(MPoly::from_terms(&self.ring, quot)))
    }

    /// Re-sorts the terms for another ring with identical variable names.
    pub fn with_ring(&self, target: &RingRef) -> Result<MPoly> {
        if self.ring.names() != target.names() {
            return Err(Error::ContextMismatch);
        }
        Ok(MPoly::from_terms(target, self.terms.clone()))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

/// Splits a coefficient into a sign and a magnitude for printing. Mixed
/// coefficients `a + bω` with both parts nonzero are never negated.
fn split_sign(c: &FieldElement) -> (bool, FieldElement) {
    let neg = if c.omega_part().is_zero() {
        c.re().is_negative()
    } else {
        c.re().is_zero() && c.omega_part().is_negative()
    };
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: &[String]) -> fmt::Result {
    let mut first = true;
    for (i, name) in names.iter().enumerate() {
        let e = m.exponent(i);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{}", e)?;
        }
    }
    Ok(())
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = split_sign(c);
            match (k == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let mixed = !mag.re().is_zero() && !mag.omega_part().is_zero();
            if m.is_one() {
                if mixed {
                    write!(f, "({})", mag)?;
                } else {
                    write!(f, "{}", mag)?;
                }
                continue;
            }
            if !mag.is_one() {
                if mixed {
                    write!(f, "({})*", mag)?;
                } else {
                    write!(f, "{}*", mag)?;
                }
            }
            write_monomial(f, m, self.ring.names())?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.ring.names().join(","), self)
    }
}
