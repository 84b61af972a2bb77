//! Random test material: cubics of the shape `x2·q2 + x3·q3 + x4·q4`, which
//! contain the line `x2 = x3 = x4 = 0`, and random hyperplane slices of a
//! stratum chart.

use cubic_lines_core::grassmann::{LineSpan, Stratum};
use cubic_lines_core::linalg::Matrix;
use cubic_lines_core::threefold::{CubicThreefold, ProjectiveTransform};
use cubic_lines_core::{FieldElement, MPoly, Monomial, MonomialOrder, PolyRing};
use rand::Rng;

/// What the standard line should be on a sampled cubic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineKind {
    /// No constraint; almost always first type.
    Any,
    /// Second type with tangent direction `x4`, usually not triple.
    SecondType,
    /// Triple.
    Triple,
}

fn quadric_monomials() -> Vec<[u16; 5]> {
    let mut out = Vec::new();
    for i in 0..5 {
        for j in i..5 {
            let mut e = [0u16; 5];
            e[i] += 1;
            e[j] += 1;
            out.push(e);
        }
    }
    out
}

/// `x2·q2 + x3·q3 + x4·q4` with coefficients in `-range..=range`.
///
/// The standard line is second type exactly when the restrictions of the three
/// quadrics to it are linearly dependent; `SecondType` forces that by clearing
/// the `x0², x0x1, x1²` terms of `q4`. It is then triple when the `x0x4, x1x4`
/// terms of `q4` vanish as well.
pub fn murre_cubic<R: Rng>(rng: &mut R, kind: LineKind, range: i64) -> CubicThreefold {
    let ring = PolyRing::projective4(MonomialOrder::GrevLex);
    loop {
        let mut terms = Vec::new();
        for v in 2..5 {
            for e in quadric_monomials() {
                let on_line = e[0] + e[1] == 2;
                let mixed = e[0] + e[1] == 1 && e[4] == 1;
                let cleared = v == 4
                    && match kind {
                        LineKind::Any => false,
                        LineKind::SecondType => on_line,
                        LineKind::Triple => on_line || mixed,
                    };
                if cleared {
                    continue;
                }
                let c = rng.gen_range(-range..=range);
                if c != 0 {
                    let mut e = e;
                    e[v] += 1;
                    terms.push((Monomial::from_exponents(&e).expect("five exponents"), FieldElement::from_int(c)));
                }
            }
        }
        if let Ok(x) = CubicThreefold::new(MPoly::from_terms(&ring, terms)) {
            return x;
        }
    }
}

/// An invertible 5×5 matrix with entries in `-2..=2`.
pub fn random_transform<R: Rng>(rng: &mut R) -> ProjectiveTransform {
    loop {
        let rows: Vec<Vec<FieldElement>> =
            (0..5).map(|_| (0..5).map(|_| FieldElement::from_int(rng.gen_range(-2..=2))).collect()).collect();
        if let Ok(g) = Matrix::from_rows(rows).map_err(|_| ()).and_then(|m| ProjectiveTransform::new(m).map_err(|_| ())) {
            return g;
        }
    }
}

/// A sampled cubic together with its constructed line, optionally moved by a
/// random change of coordinates so that the line leaves the standard chart.
pub fn murre_pair<R: Rng>(rng: &mut R, kind: LineKind, range: i64, moved: bool) -> (CubicThreefold, LineSpan) {
    let x = murre_cubic(rng, kind, range);
    if !moved {
        return (x, LineSpan::standard());
    }
    // the new cubic is F(g·y), whose line is g⁻¹ applied to the standard line
    let g = random_transform(rng);
    (x.transform(&g), g.inverse().apply_line(&LineSpan::standard()))
}

/// Random slice coefficients in `-range..=range` for the six chart unknowns of a
/// stratum, not all zero. With `through`, the constant term is chosen so that
/// the slice contains that chart point; otherwise it is random too.
pub fn random_slice<R: Rng>(rng: &mut R, range: i64, through: Option<&[FieldElement]>) -> [FieldElement; 7] {
    loop {
        let c: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-range..=range));
        if c.iter().all(|&v| v == 0) {
            continue;
        }
        let constant = match through {
            Some(u) => -c.iter().zip(u).fold(FieldElement::zero(), |acc, (&k, x)| &acc + &(&FieldElement::from_int(k) * x)),
            None => FieldElement::from_int(rng.gen_range(-range..=range)),
        };
        let mut out: [FieldElement; 7] = std::array::from_fn(|k| FieldElement::from_int(if k < 6 { c[k] } else { 0 }));
        out[6] = constant;
        return out;
    }
}

/// Chart coordinates of a line in its own stratum.
pub fn chart_point(line: &LineSpan) -> (Stratum, Vec<FieldElement>) {
    let p = cubic_lines_core::grassmann::pluecker_from_span(line);
    let s = p.stratum();
    let coords = cubic_lines_core::grassmann::stratum_parameterization(s)
        .coordinates_of(line)
        .expect("a line lies in the stratum of its own Plücker vector");
    (s, coords)
}
