//! Buchberger's algorithm on raw term lists, generic over the coefficient field.
//!
//! Pairs are chosen by sugar degree, then by the order of their lcm. Every
//! polynomial ever added stays available as a reducer, earliest first; on the
//! census systems this keeps coefficients far smaller than reducing by the
//! current minimal basis only.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::GroebnerConfig;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder};

pub(crate) trait Coeff: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Inverse of a nonzero element.
    fn inv(&self) -> Self;
}

pub(crate) type Terms<C> = Vec<(Monomial, C)>;

fn lm<C>(p: &[(Monomial, C)]) -> &Monomial {
    &p[0].0
}

/// `a − c·m·g`, all lists sorted decreasingly.
pub(crate) fn sub_scaled<C: Coeff>(
    order: MonomialOrder,
    a: &[(Monomial, C)],
    c: &C,
    m: &Monomial,
    g: &[(Monomial, C)],
) -> Terms<C> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    for (gm, gc) in g {
        let bm = gm.mul(m);
        while i < a.len() && order.cmp(&a[i].0, &bm) == Ordering::Greater {
            out.push(a[i].clone());
            i += 1;
        }
        let bc = c.mul(gc);
        if i < a.len() && a[i].0 == bm {
            let s = a[i].1.sub(&bc);
            if !s.is_zero() {
                out.push((bm, s));
            }
            i += 1;
        } else {
            out.push((bm, bc.neg()));
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

pub(crate) fn monic<C: Coeff>(mut p: Terms<C>) -> Terms<C> {
    if let Some((_, c)) = p.first() {
        let inv = c.inv();
        for t in p.iter_mut() {
            t.1 = t.1.mul(&inv);
        }
    }
    p
}

/// Earliest basis element whose leading monomial divides `m`.
fn reducer<'a, C>(basis: &[&'a [(Monomial, C)]], m: &Monomial) -> Option<&'a [(Monomial, C)]> {
    basis.iter().find(|g| lm(g).divides(m)).copied()
}

/// Reduces the leading term of `p` by the monic `basis` until it is irreducible.
pub(crate) fn reduce_top<C: Coeff>(
    order: MonomialOrder,
    mut p: Terms<C>,
    basis: &[&[(Monomial, C)]],
) -> Terms<C> {
    while let Some((m, c)) = p.first() {
        let Some(g) = reducer(basis, m) else { break };
        let q = lm(g).quotient_of(m).expect("divides");
        let c = c.clone();
        p = sub_scaled(order, &p, &c, &q, g);
    }
    p
}

/// Full reduction of `p` by the monic `basis`.
pub(crate) fn reduce_full<C: Coeff>(
    order: MonomialOrder,
    p: &[(Monomial, C)],
    basis: &[&[(Monomial, C)]],
) -> Terms<C> {
    let mut p: Terms<C> = p.to_vec();
    let mut rem: Terms<C> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        match reducer(basis, &p[start].0) {
            Some(g) => {
                let q = lm(g).quotient_of(&p[start].0).expect("divides");
                let c = p[start].1.clone();
                p = sub_scaled(order, &p[start..], &c, &q, g);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

/// S-polynomial of two monic polynomials.
pub(crate) fn s_poly<C: Coeff>(order: MonomialOrder, f: &[(Monomial, C)], g: &[(Monomial, C)]) -> Terms<C> {
    let l = lm(f).lcm(lm(g));
    let mf = lm(f).quotient_of(&l).expect("lcm");
    let mg = lm(g).quotient_of(&l).expect("lcm");
    let shifted: Terms<C> = f.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    let one = f[0].1.clone();
    sub_scaled(order, &shifted, &one, &mg, g)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'a, C> {
    order: MonomialOrder,
    polys: Vec<Terms<C>>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    cfg: &'a GroebnerConfig,
}

impl<C: Coeff> State<'_, C> {
    /// Gebauer–Möller update with the new monic polynomial `h`.
    fn update(&mut self, h: Terms<C>, sugar: u32) -> Result<()> {
        let hidx = self.polys.len();
        let hm = *lm(&h);
        self.polys.push(h);
        self.sugar.push(sugar);

        let cands: Vec<(usize, Monomial)> =
            self.active.iter().map(|&g| (g, lm(&self.polys[g]).lcm(&hm))).collect();
        let mut keep = vec![false; cands.len()];
        for k in 0..cands.len() {
            let (g, l) = &cands[k];
            let coprime = lm(&self.polys[*g]).is_coprime(&hm);
            // survivors so far plus the unprocessed rest
            let dominated = (0..cands.len()).any(|o| o != k && (o > k || keep[o]) && cands[o].1.divides(l));
            if coprime || !dominated {
                keep[k] = true;
            }
        }
        self.pairs.retain(|p| {
            !(hm.divides(&p.lcm)
                && lm(&self.polys[p.i]).lcm(&hm) != p.lcm
                && lm(&self.polys[p.j]).lcm(&hm) != p.lcm)
        });
        for (k, (g, l)) in cands.into_iter().enumerate() {
            if keep[k] && !lm(&self.polys[g]).is_coprime(&hm) {
                let shift = |i: usize| self.sugar[i] + l.degree() - lm(&self.polys[i]).degree();
                let sugar = shift(g).max(shift(hidx));
                self.pairs.push(Pair { i: g, j: hidx, lcm: l, sugar });
            }
        }
        let polys = &self.polys;
        self.active.retain(|&g| !hm.divides(lm(&polys[g])));
        self.active.push(hidx);
        if self.active.len() > self.cfg.max_basis {
            return Err(Error::BudgetExceeded { what: "basis size", limit: self.cfg.max_basis });
        }
        Ok(())
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn reducers(&self) -> Vec<&[(Monomial, C)]> {
        self.polys.iter().map(|p| p.as_slice()).collect()
    }
}

pub(crate) enum Outcome<C> {
    Unit,
    /// Reduced basis: monic, inter-reduced, sorted by increasing leading monomial.
    Basis(Vec<Terms<C>>),
}

fn is_constant<C>(p: &[(Monomial, C)]) -> bool {
    p.len() == 1 && p[0].0.is_one()
}

pub(crate) fn buchberger<C: Coeff>(
    order: MonomialOrder,
    mut gens: Vec<Terms<C>>,
    cfg: &GroebnerConfig,
) -> Result<Outcome<C>> {
    gens.retain(|g| !g.is_empty());
    gens.sort_by(|a, b| order.cmp(lm(a), lm(b)).then_with(|| a.len().cmp(&b.len())));
    let mut st = State { order, polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new(), cfg };

    for g in gens {
        let sugar = g.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        let h = reduce_top(order, g, &st.reducers());
        if h.is_empty() {
            continue;
        }
        if is_constant(&h) {
            return Ok(Outcome::Unit);
        }
        st.update(monic(h), sugar)?;
    }

    let mut processed = 0usize;
    while let Some(pair) = st.select() {
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::BudgetExceeded { what: "S-pairs", limit: cfg.max_pairs });
        }
        let s = s_poly(order, &st.polys[pair.i], &st.polys[pair.j]);
        let h = reduce_full(order, &s, &st.reducers());
        if h.is_empty() {
            continue;
        }
        if is_constant(&h) {
            return Ok(Outcome::Unit);
        }
        st.update(monic(h), pair.sugar)?;
    }

    // the active set is minimal; reduce every tail against the others
    let minimal: Vec<Terms<C>> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    let mut elements = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&[(Monomial, C)]> =
            minimal.iter().enumerate().filter(|(o, _)| *o != k).map(|(_, p)| p.as_slice()).collect();
        let mut terms = vec![g[0].clone()];
        terms.extend(reduce_full(order, &g[1..], &others));
        elements.push(terms);
    }
    elements.sort_by(|a, b| order.cmp(lm(a), lm(b)));
    Ok(Outcome::Basis(elements))
}
