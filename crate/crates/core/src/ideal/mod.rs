//! Gröbner bases (Buchberger with the Gebauer–Möller criteria and sugar
//! selection), normal forms, Krull dimension, and zero-dimensional solving.

mod engine;
mod modular;
mod solve;
pub mod univariate;

pub use modular::{small_height_points, SmallPoints};
pub use solve::{multiplicity_at, solve_zero_dim, SolutionSet, SolveConfig, UnresolvedFactor};
pub use univariate::{univariate_roots, RootResult};

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{MPoly, Monomial, MonomialOrder, PolyRing, RingRef, Term, MAX_VARS};

/// Resource limits for Buchberger. Exceeding one is a hard error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum number of basis elements alive at once.
    pub max_basis: usize,
    /// Maximum size of a staircase (quotient basis) enumeration.
    pub max_staircase: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: 200_000, max_basis: 20_000, max_staircase: 50_000 }
    }
}

/// A list of generators in a shared ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<MPoly>,
}

impl Ideal {
    /// Zero generators are dropped; every generator must live in `ring`.
    pub fn new(ring: &RingRef, generators: Vec<MPoly>) -> Result<Self> {
        if generators.iter().any(|g| !PolyRing::same(g.ring(), ring)) {
            return Err(Error::ContextMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    /// The same ideal in a ring with another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        if self.ring.order() == order {
            return self.clone();
        }
        let ring = self.ring.with_order(order);
        let generators = self
            .generators
            .iter()
            .map(|g| g.with_ring(&ring).expect("same names"))
            .collect();
        Ideal { ring, generators }
    }
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by increasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<MPoly>,
}

fn lm(p: &MPoly) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

impl engine::Coeff for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        FieldElement::inv(self).expect("nonzero")
    }
}

/// Full reduction of `f` by monic `basis`.
fn reduce_full(f: &MPoly, basis: &[&MPoly]) -> MPoly {
    let refs: Vec<&[Term]> = basis.iter().map(|g| g.terms()).collect();
    MPoly::from_terms(f.ring(), engine::reduce_full(f.ring().order(), f.terms(), &refs))
}

/// Computes the reduced Gröbner basis of `ideal` for its ring's monomial order.
pub fn groebner(ideal: &Ideal, cfg: &GroebnerConfig) -> Result<GroebnerBasis> {
    let ring = ideal.ring().clone();
    let order = ring.order();
    let gens: Vec<Vec<Term>> = ideal.generators().iter().map(|g| g.terms().to_vec()).collect();
    let elements = match engine::buchberger(order, gens, cfg)? {
        engine::Outcome::Unit => vec![MPoly::one(&ring)],
        engine::Outcome::Basis(b) => b.into_iter().map(|t| MPoly::from_terms(&ring, t)).collect(),
    };
    let gb = GroebnerBasis { ring, elements };
    for g in ideal.generators() {
        if !gb.normal_form(g)?.is_zero() {
            return Err(Error::Internal("generator not in the computed basis ideal".into()));
        }
    }
    Ok(gb)
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[MPoly] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *lm(g)).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    /// Remainder of multivariate division by the basis; zero iff `f` is in the ideal.
    pub fn normal_form(&self, f: &MPoly) -> Result<MPoly> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::ContextMismatch);
        }
        let refs: Vec<&MPoly> = self.elements.iter().collect();
        Ok(reduce_full(f, &refs))
    }

    pub fn contains(&self, f: &MPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Re-checks Buchberger's criterion directly: every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        let refs: Vec<&MPoly> = self.elements.iter().collect();
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let order = self.ring.order();
                let s = engine::s_poly(order, self.elements[i].terms(), self.elements[j].terms());
                if !reduce_full(&MPoly::from_terms(&self.ring, s), &refs).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Krull dimension of the affine quotient, from maximal independent sets of
    /// variables modulo the leading-term ideal; −1 for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        lm_dimension(&self.leading_monomials(), self.ring.nvars())
    }

    /// True iff every variable has a pure-power leading monomial (finitely many solutions).
    pub fn is_zero_dimensional(&self) -> bool {
        self.is_unit() || lm_zero_dimensional(&self.leading_monomials(), self.ring.nvars())
    }

    /// Standard monomials (the staircase) sorted increasingly; requires zero-dimensionality.
    pub fn standard_monomials(&self, cfg: &GroebnerConfig) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional { dimension: self.dimension() });
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        lm_staircase(&self.leading_monomials(), self.ring.nvars(), self.ring.order(), cfg)
    }

    /// Vector-space dimension of the quotient ring (zero-dimensional ideals only).
    pub fn quotient_dimension(&self, cfg: &GroebnerConfig) -> Result<usize> {
        Ok(self.standard_monomials(cfg)?.len())
    }

    /// Minimal polynomial (monic, ascending dense coefficients) of the variable
    /// `var` acting on the quotient ring, found by linear algebra on normal forms of
    /// its powers.
    pub fn minimal_polynomial(&self, var: usize, cfg: &GroebnerConfig) -> Result<Vec<FieldElement>> {
        let basis = self.standard_monomials(cfg)?;
        let n = self.ring.nvars();
        let index: BTreeMap<[u16; MAX_VARS], usize> =
            basis.iter().enumerate().map(|(i, m)| (exps_key(m, n), i)).collect();
        let dim = basis.len();
        let to_vec = |p: &MPoly| -> Vec<FieldElement> {
            let mut v = vec![FieldElement::zero(); dim];
            for (m, c) in p.terms() {
                v[index[&exps_key(m, n)]] = c.clone();
            }
            v
        };
        let x = MPoly::var(&self.ring, var);
        let mut cur = self.normal_form(&MPoly::one(&self.ring))?;
        // echelon rows: (vector, pivot, combination of powers)
        let mut rows: Vec<(Vec<FieldElement>, usize, Vec<FieldElement>)> = Vec::new();
        for k in 0..=dim {
            let mut v = to_vec(&cur);
            let mut comb = vec![FieldElement::zero(); k + 1];
            comb[k] = FieldElement::one();
            for (rv, piv, rc) in &rows {
                if v[*piv].is_zero() {
                    continue;
                }
                let f = v[*piv].clone();
                for (a, b) in v.iter_mut().zip(rv) {
                    if !b.is_zero() {
                        *a -= &(&f * b);
                    }
                }
                for (a, b) in comb.iter_mut().zip(rc) {
                    if !b.is_zero() {
                        *a -= &(&f * b);
                    }
                }
            }
            match v.iter().position(|c| !c.is_zero()) {
                None => {
                    let lead = comb[k].inv()?;
                    return Ok(comb.iter().map(|c| c * &lead).collect());
                }
                Some(piv) => {
                    let inv = v[piv].inv()?;
                    let v: Vec<FieldElement> = v.iter().map(|c| c * &inv).collect();
                    let comb: Vec<FieldElement> = comb.iter().map(|c| c * &inv).collect();
                    rows.push((v, piv, comb));
                }
            }
            cur = self.normal_form(&(&x * &cur))?;
        }
        Err(Error::Internal("no linear dependence among powers in a finite quotient".into()))
    }
}

/// Krull dimension from the leading monomials of a basis of a proper ideal:
/// the size of a largest variable set containing no leading monomial's support.
pub(crate) fn lm_dimension(lms: &[Monomial], n: usize) -> i64 {
    let supports: Vec<u32> = lms
        .iter()
        .map(|m| (0..n).filter(|&i| m.exponent(i) > 0).fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones();
        if size <= best {
            continue;
        }
        if supports.iter().all(|s| s & !mask != 0) {
            best = size;
        }
    }
    best as i64
}

pub(crate) fn lm_zero_dimensional(lms: &[Monomial], n: usize) -> bool {
    (0..n).all(|v| lms.iter().any(|m| m.pure_power_var() == Some(v)))
}

/// Monomials divisible by no element of `lms`, sorted increasingly. The caller
/// guarantees the set is finite.
pub(crate) fn lm_staircase(
    lms: &[Monomial],
    n: usize,
    order: MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<Vec<Monomial>> {
    let mut seen: BTreeMap<[u16; MAX_VARS], ()> = BTreeMap::new();
    let mut stack = vec![Monomial::one()];
    let mut out = Vec::new();
    seen.insert([0; MAX_VARS], ());
    while let Some(m) = stack.pop() {
        out.push(m);
        if out.len() > cfg.max_staircase {
            return Err(Error::BudgetExceeded { what: "staircase size", limit: cfg.max_staircase });
        }
        for v in 0..n {
            let next = m.mul(&Monomial::var(v));
            if lms.iter().any(|l| l.divides(&next)) {
                continue;
            }
            if seen.insert(exps_key(&next, n), ()).is_none() {
                stack.push(next);
            }
        }
    }
    out.sort_by(|a, b| order.cmp(a, b));
    Ok(out)
}

pub(crate) fn exps_key(m: &Monomial, n: usize) -> [u16; MAX_VARS] {
    let mut k = [0u16; MAX_VARS];
    k[..n].copy_from_slice(m.exponents(n));
    k
}

/// Free-standing form of [`GroebnerBasis::normal_form`].
pub fn normal_form(f: &MPoly, g: &GroebnerBasis) -> Result<MPoly> {
    g.normal_form(f)
}

/// Free-standing form of [`GroebnerBasis::dimension`].
pub fn dimension(g: &GroebnerBasis) -> i64 {
    g.dimension()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ring(names: &[&str], order: MonomialOrder) -> RingRef {
        PolyRing::new(names, order).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| MPoly::parse(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn linear_elimination() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let gb = groebner(&ideal(&r, &["x + y", "x - y"]), &GroebnerConfig::default()).unwrap();
        let shown: Vec<_> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["y", "x"]);
        assert_eq!(gb.dimension(), 0);
    }

    #[test]
    fn already_a_basis() {
        let r = ring(&["x"], MonomialOrder::Lex);
        let gb = groebner(&ideal(&r, &["x^2 - 1"]), &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0].to_string(), "x^2 - 1");
    }

    #[test]
    fn unit_ideal_has_dimension_minus_one() {
        let r = ring(&["x", "y"], MonomialOrder::GrevLex);
        let gb = groebner(&ideal(&r, &["x*y - 1", "x"]), &GroebnerConfig::default()).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.dimension(), -1);
        let gb = groebner(&ideal(&r, &["1"]), &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.dimension(), -1);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"], MonomialOrder::GrevLex);
        let gb = groebner(&ideal(&r, &["x", "y"]), &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.normal_form(&MPoly::one(&r)).unwrap(), MPoly::one(&r));
        assert!(gb.normal_form(&MPoly::parse(&r, "x*y + 3*x").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn triple_fixture_partials_are_zero_dimensional() {
        let r = PolyRing::projective4(MonomialOrder::GrevLex);
        let i = ideal(&r, &["x0^2 + 3*x2^2", "x1^2 + 3*x3^2", "2*x0*x2", "2*x1*x3", "3*x4^2"]);
        let gb = groebner(&i, &GroebnerConfig::default()).unwrap();
        assert!(gb.verify());
        assert!(gb.is_zero_dimensional());
        for v in 0..5 {
            assert!(gb.leading_monomials().iter().any(|m| m.pure_power_var() == Some(v)));
        }
    }

    #[test]
    fn fermat_lies_in_its_jacobian_ideal() {
        let r = PolyRing::projective4(MonomialOrder::GrevLex);
        let f = MPoly::parse(&r, "x0^3 + x1^3 + x2^3 + x3^3 + x4^3").unwrap();
        let partials: Vec<MPoly> = (0..5).map(|i| f.partial_derivative(i)).collect();
        let gb = groebner(&Ideal::new(&r, partials).unwrap(), &GroebnerConfig::default()).unwrap();
        assert!(gb.normal_form(&f).unwrap().is_zero());
    }

    #[test]
    fn budget_is_a_hard_error() {
        let r = ring(&["x", "y", "z"], MonomialOrder::GrevLex);
        let i = ideal(&r, &["x^2 + y*z - 1", "y^2 + x*z - 1", "z^2 + x*y - 1"]);
        let cfg = GroebnerConfig { max_pairs: 1, ..GroebnerConfig::default() };
        assert!(matches!(groebner(&i, &cfg), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn minimal_polynomial_of_shape_ideal() {
        let r = ring(&["x", "y"], MonomialOrder::GrevLex);
        let gb = groebner(&ideal(&r, &["x^2 - 1", "y - x"]), &GroebnerConfig::default()).unwrap();
        let mp = gb.minimal_polynomial(1, &GroebnerConfig::default()).unwrap();
        assert_eq!(mp, vec![FieldElement::from_int(-1), FieldElement::zero(), FieldElement::one()]);
        assert_eq!(gb.quotient_dimension(&GroebnerConfig::default()).unwrap(), 2);
    }

    #[test]
    fn dimension_of_positive_dimensional_ideals() {
        let r = ring(&["x", "y", "z"], MonomialOrder::GrevLex);
        let gb = groebner(&ideal(&r, &["x*y", "x*z"]), &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.dimension(), 2);
        let gb = groebner(&ideal(&r, &["x - y^2", "z"]), &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.dimension(), 1);
    }
}
