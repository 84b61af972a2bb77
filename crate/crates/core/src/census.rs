//! Enumeration of the triple lines of a cubic threefold, one Plücker stratum and
//! one tangent-direction chart at a time.
//!
//! On a stratum the line is the symbolic reduced pair `row0, row1`; the tangent
//! plane is spanned with `v2`, the direction `α` placed in the three non-pivot
//! columns. The direction is itself split into charts by its first nonzero entry,
//! so every (line, α) pair is found exactly once. The unknowns satisfy
//!
//! * the 4 coefficients of `F(t0·row0 + t1·row1)` (the line lies on the cubic),
//! * the coefficients of `t0²t2, t0t1t2, t1²t2` in `F(t0·row0 + t1·row1 + t2·v2)`
//!   (the plane is tangent along the line),
//! * the coefficients of `t0t2², t1t2²` (the plane meets the cubic in `3ℓ`),
//!
//! plus the equations cutting out the stratum.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classify::{classify_detailed, pencil_coefficient, substitute_pencil, chart_equations, ClassifyOptions, LineType};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::grassmann::{pluecker_from_span, LineSpan, PlueckerCoords, Stratum, StratumChart, stratum_parameterization};
use crate::field::Field;
use crate::ideal::{groebner, small_height_points, solve_zero_dim, Ideal, SolveConfig, UnresolvedFactor};
use crate::poly::{MPoly, MonomialOrder, PolyRing, RingRef};
use crate::threefold::CubicThreefold;

/// Exponents of `(t0, t1, t2)` for the nine equations, in order.
const EQUATIONS: [[u16; 3]; 9] = [
    [3, 0, 0],
    [2, 1, 0],
    [1, 2, 0],
    [0, 3, 0],
    [2, 0, 1],
    [1, 1, 1],
    [0, 2, 1],
    [1, 0, 2],
    [0, 1, 2],
];

/// The polynomial system of one (stratum, α-chart) cell.
#[derive(Clone, Debug)]
pub struct PencilSystem {
    pub stratum: Stratum,
    /// Index of the first nonzero α entry (0, 1 or 2).
    pub alpha_chart: usize,
    pub chart: StratumChart,
    /// Six line parameters followed by the free α entries.
    pub ring: RingRef,
    pub ideal: Ideal,
}

impl PencilSystem {
    /// The α vector (over the three non-pivot columns) at a solution point.
    pub fn alpha_at(&self, point: &[FieldElement]) -> [FieldElement; 3] {
        let mut next = 6;
        core::array::from_fn(|b| {
            if b < self.alpha_chart {
                FieldElement::zero()
            } else if b == self.alpha_chart {
                FieldElement::one()
            } else {
                next += 1;
                point[next - 1].clone()
            }
        })
    }
}

pub fn triple_line_system(x: &CubicThreefold, s: Stratum, alpha_chart: usize) -> Result<PencilSystem> {
    pencil_system(x, s, alpha_chart, &EQUATIONS)
}

/// The same cell without the two triple-line equations: its solutions are the
/// second-type lines of the stratum together with their tangent directions.
pub fn second_type_system(x: &CubicThreefold, s: Stratum, alpha_chart: usize) -> Result<PencilSystem> {
    pencil_system(x, s, alpha_chart, &EQUATIONS[..7])
}

fn pencil_system(
    x: &CubicThreefold,
    s: Stratum,
    alpha_chart: usize,
    equations: &[[u16; 3]],
) -> Result<PencilSystem> {
    if alpha_chart > 2 {
        return Err(Error::InvalidRing(format!("alpha chart {} out of range", alpha_chart)));
    }
    let chart = stratum_parameterization(s);
    let free = s.free_columns();
    let mut names: Vec<String> = chart.ring.names().to_vec();
    for b in alpha_chart + 1..3 {
        names.push(format!("a{}", free[b]));
    }
    let ring = PolyRing::new(&names, MonomialOrder::GrevLex)?;
    let embed_row = |row: &[MPoly; 5]| -> Result<[MPoly; 5]> {
        let v = row.iter().map(|e| e.embed(&ring)).collect::<Result<Vec<_>>>()?;
        Ok(v.try_into().expect("5"))
    };
    let row0 = embed_row(&chart.rows[0])?;
    let row1 = embed_row(&chart.rows[1])?;
    let mut v2: [MPoly; 5] = core::array::from_fn(|_| MPoly::zero(&ring));
    let mut next = 6;
    for b in alpha_chart..3 {
        v2[free[b]] = if b == alpha_chart {
            MPoly::one(&ring)
        } else {
            next += 1;
            MPoly::var(&ring, next - 1)
        };
    }
    let (_, g) = substitute_pencil(x.poly(), &[&row0, &row1, &v2], &ring)?;
    let mut gens = equations
        .iter()
        .map(|e| pencil_coefficient(&g, &ring, e))
        .collect::<Result<Vec<_>>>()?;
    for c in &chart.constraints {
        gens.push(c.embed(&ring)?);
    }
    let ideal = Ideal::new(&ring, gens)?;
    Ok(PencilSystem { stratum: s, alpha_chart, chart, ring, ideal })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TripleLine {
    pub stratum: Stratum,
    /// Values of the six chart unknowns (names sorted, see [`StratumChart`]).
    pub chart_coords: Vec<FieldElement>,
    pub line: LineSpan,
    pub pluecker: PlueckerCoords,
    /// Tangent direction over the stratum's non-pivot columns.
    pub alpha: [FieldElement; 3],
}

/// A univariate factor with no root in the field, with where it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusUnresolved {
    pub stratum: Stratum,
    pub alpha_chart: usize,
    pub factor: UnresolvedFactor,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StratumCensus {
    pub stratum: Stratum,
    /// Sorted by chart coordinates.
    pub lines: Vec<TripleLine>,
    pub unresolved: Vec<CensusUnresolved>,
}

impl StratumCensus {
    pub fn count(&self) -> usize {
        self.lines.len()
    }
}

/// Triple lines in one stratum, each re-checked by [`classify_detailed`].
pub fn census_stratum(x: &CubicThreefold, s: Stratum, cfg: &SolveConfig) -> Result<StratumCensus> {
    let mut lines = Vec::new();
    let mut unresolved = Vec::new();
    let check = ClassifyOptions { check_smooth: false, groebner: cfg.groebner };
    for alpha_chart in 0..3 {
        let sys = triple_line_system(x, s, alpha_chart)?;
        let sol = solve_zero_dim(&sys.ideal, cfg).map_err(|e| match e {
            Error::NotZeroDimensional { dimension } => Error::PositiveDimensional {
                context: format!("triple-line system on stratum {} with alpha chart {}", s, alpha_chart),
                dimension,
            },
            other => other,
        })?;
        for factor in sol.unresolved {
            unresolved.push(CensusUnresolved { stratum: s, alpha_chart, factor });
        }
        for point in &sol.points {
            let chart_coords = point[..6].to_vec();
            let line = sys.chart.span_at(&chart_coords)?;
            let alpha = sys.alpha_at(point);
            let c = classify_detailed(x, &line, &check)?;
            match &c.line_type {
                LineType::SecondType(d) if d.is_triple && d.alpha == alpha => {}
                _ => {
                    return Err(Error::Internal(format!(
                        "census solution {} on stratum {} is not confirmed as a triple line",
                        line, s
                    )))
                }
            }
            let pluecker = pluecker_from_span(&line).normalized();
            if pluecker.stratum() != s {
                return Err(Error::Internal(format!("solution {} left stratum {}", line, s)));
            }
            lines.push(TripleLine { stratum: s, chart_coords, line, pluecker, alpha });
        }
    }
    lines.sort_by(|a, b| a.chart_coords.cmp(&b.chart_coords));
    if lines.windows(2).any(|w| w[0].chart_coords == w[1].chart_coords) {
        return Err(Error::Internal(format!("a triple line was found twice on stratum {}", s)));
    }
    Ok(StratumCensus { stratum: s, lines, unresolved })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusReport {
    pub strata: Vec<StratumCensus>,
    pub smooth: bool,
}

impl CensusReport {
    /// Merges per-stratum results, sorting by stratum and checking that no line
    /// was counted twice.
    pub fn from_strata(mut strata: Vec<StratumCensus>, smooth: bool) -> Result<Self> {
        strata.sort_by_key(|s| s.stratum);
        let mut all: Vec<&[FieldElement; 10]> =
            strata.iter().flat_map(|s| s.lines.iter().map(|l| l.pluecker.coords())).collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Internal("a triple line appears in two strata".into()));
        }
        Ok(CensusReport { strata, smooth })
    }

    pub fn total(&self) -> usize {
        self.strata.iter().map(|s| s.count()).sum()
    }

    pub fn count(&self, s: Stratum) -> usize {
        self.strata.iter().find(|c| c.stratum == s).map_or(0, |c| c.count())
    }

    pub fn stratum(&self, s: Stratum) -> Option<&StratumCensus> {
        self.strata.iter().find(|c| c.stratum == s)
    }

    /// True when no unresolved factor was met, so the total is exact rather than a lower bound.
    pub fn is_complete(&self) -> bool {
        self.strata.iter().all(|s| s.unresolved.is_empty())
    }

    pub fn lines(&self) -> impl Iterator<Item = &TripleLine> {
        self.strata.iter().flat_map(|s| s.lines.iter())
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    pub solve: SolveConfig,
    pub allow_singular: bool,
    /// Restrict to these strata; all ten when `None`.
    pub strata: Option<Vec<Stratum>>,
}

/// Checks smoothness, refusing singular cubics unless allowed.
pub fn smoothness_gate(x: &CubicThreefold, opts: &CensusOptions) -> Result<bool> {
    let smooth = x.is_smooth(&opts.solve.groebner)?;
    if !smooth && !opts.allow_singular {
        return Err(Error::SingularCubic);
    }
    Ok(smooth)
}

pub fn census_triple_lines(x: &CubicThreefold, opts: &CensusOptions) -> Result<CensusReport> {
    let smooth = smoothness_gate(x, opts)?;
    let strata: Vec<Stratum> = opts.strata.clone().unwrap_or_else(|| Stratum::all().to_vec());
    let results = strata
        .iter()
        .map(|&s| census_stratum(x, s, &opts.solve))
        .collect::<Result<Vec<_>>>()?;
    CensusReport::from_strata(results, smooth)
}

/// Local equations of the second-type curve on a stratum and their Krull dimension.
pub fn second_type_curve(x: &CubicThreefold, s: Stratum, cfg: &SolveConfig) -> Result<(Ideal, i64)> {
    let eqs = chart_equations(x, s)?;
    let mut gens = eqs.five();
    gens.extend(eqs.chart.constraints.iter().cloned());
    let ideal = Ideal::new(eqs.ring(), gens)?;
    let dim = groebner(&ideal, &cfg.groebner)?.dimension();
    Ok((ideal, dim))
}

/// Local equations of the Fano surface on a stratum and their Krull dimension.
pub fn fano_chart_ideal(x: &CubicThreefold, s: Stratum, cfg: &SolveConfig) -> Result<(Ideal, i64)> {
    let eqs = chart_equations(x, s)?;
    let mut gens = eqs.phi.to_vec();
    gens.extend(eqs.chart.constraints.iter().cloned());
    let ideal = Ideal::new(eqs.ring(), gens)?;
    let dim = groebner(&ideal, &cfg.groebner)?.dimension();
    Ok((ideal, dim))
}

/// A second-type line met by a slice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlicePoint {
    pub chart_coords: Vec<FieldElement>,
    pub line: LineSpan,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SliceSample {
    pub stratum: Stratum,
    /// Coefficients of the six chart unknowns followed by the constant term.
    pub slice: [FieldElement; 7],
    /// Sorted by chart coordinates.
    pub points: Vec<SlicePoint>,
    /// Solutions over the finite field that did not lift to points of small
    /// height over the working field. Some may be genuine points of large height.
    pub unlifted: usize,
}

/// Second-type lines of a stratum lying on the affine hyperplane
/// `Σ slice[k]·u_k + slice[6] = 0` of its chart. The second-type locus is a
/// curve, so a hyperplane in general position cuts it in finitely many points.
///
/// The cut is taken on the local equations of [`second_type_curve`] rather
/// than the pencil systems: without the tangent-direction unknowns it solves
/// about ten times faster. Exact elimination is still far too slow, so the
/// system is solved over a large finite field and lifted back by rational
/// reconstruction. Every returned point is exact; points of large height are
/// only counted.
pub fn slice_second_type(
    x: &CubicThreefold,
    s: Stratum,
    slice: &[FieldElement; 7],
    cfg: &SolveConfig,
) -> Result<SliceSample> {
    let eqs = chart_equations(x, s)?;
    let ring = eqs.ring().clone();
    let mut gens = eqs.five();
    gens.extend(eqs.chart.constraints.iter().cloned());
    let mut terms: Vec<_> = (0..6).map(|k| (crate::poly::Monomial::var(k), slice[k].clone())).collect();
    terms.push((crate::poly::Monomial::one(), slice[6].clone()));
    gens.push(MPoly::from_terms(&ring, terms));
    let found = small_height_points(&Ideal::new(&ring, gens)?, &cfg.groebner).map_err(|e| match e {
        Error::NotZeroDimensional { dimension } => Error::PositiveDimensional {
            context: format!("sliced second-type curve on stratum {}", s),
            dimension,
        },
        other => other,
    })?;
    let mut points = Vec::new();
    for chart_coords in found.points {
        if cfg.field == Field::Rational && !chart_coords.iter().all(|c| c.is_rational()) {
            continue;
        }
        let line = eqs.chart.span_at(&chart_coords)?;
        points.push(SlicePoint { chart_coords, line });
    }
    Ok(SliceSample { stratum: s, slice: slice.clone(), points, unlifted: found.unlifted })
}
