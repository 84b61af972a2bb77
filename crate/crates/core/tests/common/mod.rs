#![allow(dead_code)]

use cubic_lines_core::{FieldElement, MPoly, Monomial, RingRef};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = FieldElement> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| FieldElement::from_ratio(n, d))
}

pub fn element() -> impl Strategy<Value = FieldElement> {
    (rational(), rational()).prop_map(|(a, b)| &a + &(&b * &FieldElement::omega()))
}

pub fn small_int() -> impl Strategy<Value = FieldElement> {
    (-4i64..=4).prop_map(FieldElement::from_int)
}

/// Up to `max_terms` terms in `nvars` variables of total degree at most `max_deg`.
pub fn poly(ring: RingRef, max_terms: usize, max_deg: u16) -> impl Strategy<Value = MPoly> {
    let nvars = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), element()), 0..=max_terms).prop_map(
        move |terms| {
            let terms = terms
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u16>() <= max_deg)
                .map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), c))
                .collect();
            MPoly::from_terms(&ring, terms)
        },
    )
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u16) -> Vec<Vec<u16>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A homogeneous form of degree `d` with coefficients in `-4..=4`.
pub fn form(ring: RingRef, d: u16) -> impl Strategy<Value = MPoly> {
    let exps = monomials_of_degree(ring.nvars(), d);
    prop::collection::vec(-4i64..=4, exps.len()).prop_map(move |cs| {
        let terms = exps
            .iter()
            .zip(cs)
            .map(|(e, c)| (Monomial::from_exponents(e).unwrap(), FieldElement::from_int(c)))
            .collect();
        MPoly::from_terms(&ring, terms)
    })
}
