//! Exact solving of zero-dimensional systems by eliminating the last variable.
//!
//! The minimal polynomial of the last variable is read off the quotient ring of a
//! grevlex basis, its roots are substituted, and the smaller system is solved
//! recursively. No lex basis (and so no shape-position retry) is needed.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::univariate::dense_roots;
use super::{groebner, GroebnerBasis, GroebnerConfig, Ideal};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::{MPoly, MonomialOrder, PolyRing, RingRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveConfig {
    pub groebner: GroebnerConfig,
    pub field: Field,
}

/// A univariate factor with no roots in the field, found while the listed
/// variables had the given values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnresolvedFactor {
    pub variable: String,
    pub assignment: Vec<(String, FieldElement)>,
    /// Monic, ascending coefficients.
    pub factor: Vec<FieldElement>,
}

impl UnresolvedFactor {
    pub fn degree(&self) -> usize {
        self.factor.len() - 1
    }

    /// The factor as a polynomial in its variable.
    pub fn to_poly(&self) -> MPoly {
        let ring = PolyRing::new(&[self.variable.as_str()], MonomialOrder::Lex).expect("valid name");
        MPoly::from_univariate(&ring, 0, &self.factor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub variables: Vec<String>,
    /// Distinct and sorted.
    pub points: Vec<Vec<FieldElement>>,
    pub unresolved: Vec<UnresolvedFactor>,
}

impl SolutionSet {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// All solutions of a zero-dimensional ideal with coordinates in `cfg.field`.
pub fn solve_zero_dim(ideal: &Ideal, cfg: &SolveConfig) -> Result<SolutionSet> {
    let grev = ideal.with_order(MonomialOrder::GrevLex);
    let gb = groebner(&grev, &cfg.groebner)?;
    let variables = ideal.ring().names().to_vec();
    if gb.is_unit() {
        return Ok(SolutionSet { variables, points: Vec::new(), unresolved: Vec::new() });
    }
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional { dimension: gb.dimension() });
    }
    let mut points = Vec::new();
    let mut unresolved = Vec::new();
    recurse(&gb, &mut Vec::new(), cfg, &mut points, &mut unresolved)?;
    for p in &points {
        for g in ideal.generators() {
            if !g.evaluate(p)?.is_zero() {
                return Err(Error::Internal("solution does not satisfy a generator".into()));
            }
        }
    }
    points.sort();
    points.dedup();
    Ok(SolutionSet { variables, points, unresolved })
}

/// `suffix` holds the values of the variables already eliminated, in order.
fn recurse(
    gb: &GroebnerBasis,
    suffix: &mut Vec<(String, FieldElement)>,
    cfg: &SolveConfig,
    points: &mut Vec<Vec<FieldElement>>,
    unresolved: &mut Vec<UnresolvedFactor>,
) -> Result<()> {
    let ring = gb.ring().clone();
    let n = ring.nvars();
    if gb.is_unit() {
        return Ok(());
    }
    if n == 0 {
        points.push(suffix.iter().rev().map(|(_, v)| v.clone()).collect());
        return Ok(());
    }
    let var = n - 1;
    let minpoly = gb.minimal_polynomial(var, &cfg.groebner)?;
    let (roots, rest) = dense_roots(&minpoly, cfg.field)?;
    if let Some(factor) = rest {
        unresolved.push(UnresolvedFactor {
            variable: ring.names()[var].clone(),
            assignment: suffix.iter().rev().cloned().collect(),
            factor,
        });
    }
    let smaller: RingRef = ring.without(&[var]);
    for (r, _) in roots {
        let gens = gb
            .elements()
            .iter()
            .map(|g| g.specialize(var, &r, &smaller))
            .collect::<Result<Vec<_>>>()?;
        let sub = groebner(&Ideal::new(&smaller, gens)?, &cfg.groebner)?;
        suffix.push((ring.names()[var].clone(), r));
        recurse(&sub, suffix, cfg, points, unresolved)?;
        suffix.pop();
    }
    Ok(())
}

/// Local intersection multiplicity of a zero-dimensional ideal at `point`:
/// the length of the quotient by `I + m^k` once it stabilizes in `k`.
pub fn multiplicity_at(ideal: &Ideal, point: &[FieldElement], cfg: &GroebnerConfig) -> Result<usize> {
    let grev = ideal.with_order(MonomialOrder::GrevLex);
    let ring = grev.ring().clone();
    let n = ring.nvars();
    if point.len() != n {
        return Err(Error::DimensionMismatch("point length".into()));
    }
    let shifted: Vec<MPoly> = (0..n)
        .map(|i| &MPoly::var(&ring, i) - &MPoly::constant(&ring, point[i].clone()))
        .collect();
    let total = groebner(&grev, cfg)?.quotient_dimension(cfg)?;
    let mut last = None;
    let mut power: Vec<MPoly> = vec![MPoly::one(&ring)];
    for _ in 0..=total + 1 {
        // power <- generators of m^(k+1)
        let mut next = Vec::new();
        for p in &power {
            for s in &shifted {
                next.push(p * s);
            }
        }
        power = groebner(&Ideal::new(&ring, next)?, cfg)?.elements().to_vec();
        let mut gens = grev.generators().to_vec();
        gens.extend(power.iter().cloned());
        let len = groebner(&Ideal::new(&ring, gens)?, cfg)?.quotient_dimension(cfg)?;
        if last == Some(len) {
            return Ok(len);
        }
        last = Some(len);
    }
    last.ok_or_else(|| Error::Internal("multiplicity did not stabilize".into()))
}
