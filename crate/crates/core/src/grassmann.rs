//! Lines in P⁴: spanning pairs, Plücker coordinates and the lex stratification.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::poly::{MPoly, MonomialOrder, PolyRing, RingRef};

/// The ten index pairs in the fixed coordinate order p01, p02, …, p34.
pub const PLUECKER_PAIRS: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Position of `p_ij` (`i < j`) in [`PLUECKER_PAIRS`].
pub fn pair_index(i: usize, j: usize) -> usize {
    PLUECKER_PAIRS
        .iter()
        .position(|&p| p == (i, j))
        .unwrap_or_else(|| panic!("no Plücker pair ({}, {})", i, j))
}

pub fn pair_name(i: usize, j: usize) -> String {
    format!("p{}{}", i, j)
}

/// A line given by two spanning points (rank exactly 2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LineSpan {
    rows: [[FieldElement; 5]; 2],
}

impl LineSpan {
    pub fn new(v0: [FieldElement; 5], v1: [FieldElement; 5]) -> Result<Self> {
        let line = LineSpan { rows: [v0, v1] };
        if line.matrix().rank() != 2 {
            return Err(Error::RankDeficient);
        }
        Ok(line)
    }

    pub fn from_vecs(v0: &[FieldElement], v1: &[FieldElement]) -> Result<Self> {
        let arr = |v: &[FieldElement]| -> Result<[FieldElement; 5]> {
            v.to_vec()
                .try_into()
                .map_err(|_| Error::DimensionMismatch("a point of P^4 needs 5 coordinates".into()))
        };
        Self::new(arr(v0)?, arr(v1)?)
    }

    pub fn from_i64(v0: [i64; 5], v1: [i64; 5]) -> Result<Self> {
        Self::new(v0.map(FieldElement::from_int), v1.map(FieldElement::from_int))
    }

    /// The line spanned by the first two coordinate points.
    pub fn standard() -> Self {
        Self::from_i64([1, 0, 0, 0, 0], [0, 1, 0, 0, 0]).expect("rank 2")
    }

    pub fn v0(&self) -> &[FieldElement; 5] {
        &self.rows[0]
    }

    pub fn v1(&self) -> &[FieldElement; 5] {
        &self.rows[1]
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.rows.iter().map(|r| r.to_vec()).collect()).expect("2x5")
    }

    /// The point `t0·v0 + t1·v1`.
    pub fn point(&self, t0: &FieldElement, t1: &FieldElement) -> [FieldElement; 5] {
        core::array::from_fn(|k| &(t0 * &self.rows[0][k]) + &(t1 * &self.rows[1][k]))
    }

    /// Reduced row echelon form: the canonical spanning pair of the line.
    pub fn reduced(&self) -> LineSpan {
        let (r, _) = self.matrix().rref();
        LineSpan { rows: [row5(r.row(0)), row5(r.row(1))] }
    }

    /// Pivot columns of the reduced form.
    pub fn pivots(&self) -> (usize, usize) {
        let (_, p) = self.matrix().rref();
        (p[0], p[1])
    }

    /// Equality as projective lines.
    pub fn same_line(&self, other: &LineSpan) -> bool {
        self.reduced() == other.reduced()
    }

    pub fn contains_point(&self, p: &[FieldElement]) -> bool {
        let mut rows: Vec<Vec<FieldElement>> = self.rows.iter().map(|r| r.to_vec()).collect();
        rows.push(p.to_vec());
        Matrix::from_rows(rows).map(|m| m.rank() == 2).unwrap_or(false)
    }

    /// Applies a 5×5 matrix to both spanning points.
    pub fn map(&self, g: &Matrix) -> Result<LineSpan> {
        let v0 = g.mul_vec(&self.rows[0])?;
        let v1 = g.mul_vec(&self.rows[1])?;
        Self::from_vecs(&v0, &v1)
    }
}

fn row5(r: &[FieldElement]) -> [FieldElement; 5] {
    core::array::from_fn(|k| r[k].clone())
}

impl fmt::Display for LineSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (k, x) in row.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", x)?;
            }
        }
        Ok(())
    }
}

/// Projective Plücker coordinates, guaranteed decomposable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlueckerCoords([FieldElement; 10]);

/// Values of the five three-term relations, one per 4-subset `a<b<c<d`.
pub fn pluecker_relations(p: &[FieldElement; 10]) -> [FieldElement; 5] {
    let g = |i, j| &p[pair_index(i, j)];
    let quads = [(0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 4), (0, 2, 3, 4), (1, 2, 3, 4)];
    quads.map(|(a, b, c, d)| &(&(g(a, b) * g(c, d)) - &(g(a, c) * g(b, d))) + &(g(a, d) * g(b, c)))
}

impl PlueckerCoords {
    pub fn new(coords: [FieldElement; 10]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::NotDecomposable);
        }
        if pluecker_relations(&coords).iter().any(|r| !r.is_zero()) {
            return Err(Error::NotDecomposable);
        }
        Ok(PlueckerCoords(coords))
    }

    pub fn from_slice(coords: &[FieldElement]) -> Result<Self> {
        let arr: [FieldElement; 10] = coords
            .to_vec()
            .try_into()
            .map_err(|_| Error::DimensionMismatch("Plücker coordinates need 10 values".into()))?;
        Self::new(arr)
    }

    pub fn coords(&self) -> &[FieldElement; 10] {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.0[pair_index(i, j)]
    }

    pub fn stratum(&self) -> Stratum {
        let k = self.0.iter().position(|c| !c.is_zero()).expect("nonzero");
        let (i, j) = PLUECKER_PAIRS[k];
        Stratum { i, j }
    }

    /// Scaled so the stratum's pivot coordinate is 1.
    pub fn normalized(&self) -> PlueckerCoords {
        let s = self.stratum();
        let inv = self.get(s.i, s.j).inv().expect("pivot is nonzero");
        PlueckerCoords(self.0.clone().map(|c| &c * &inv))
    }

    /// Equality as projective points.
    pub fn same_point(&self, other: &PlueckerCoords) -> bool {
        self.normalized() == other.normalized()
    }
}

impl fmt::Display for PlueckerCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

pub fn pluecker_from_span(line: &LineSpan) -> PlueckerCoords {
    let (v0, v1) = (line.v0(), line.v1());
    let coords = PLUECKER_PAIRS.map(|(i, j)| &(&v0[i] * &v1[j]) - &(&v0[j] * &v1[i]));
    PlueckerCoords(coords)
}

/// The row-reduced spanning pair with pivots at the stratum's columns.
pub fn span_from_pluecker(p: &PlueckerCoords) -> Result<LineSpan> {
    let p = PlueckerCoords::new(p.0.clone())?.normalized();
    let s = p.stratum();
    let chart = stratum_parameterization(s);
    let values: Vec<FieldElement> = chart.pairs.iter().map(|&(a, b)| p.get(a, b).clone()).collect();
    chart.span_at(&values)
}

pub fn stratum_of(p: &PlueckerCoords) -> Stratum {
    p.stratum()
}

/// A Schubert cell of G(1,4): lines whose lex-first nonzero Plücker coordinate is `p_ij`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Stratum {
    pub i: usize,
    pub j: usize,
}

impl Stratum {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i < j && j < 5 {
            Ok(Stratum { i, j })
        } else {
            Err(Error::InvalidRing(format!("({}, {}) is not a pivot pair", i, j)))
        }
    }

    /// All ten strata in lex order.
    pub fn all() -> [Stratum; 10] {
        PLUECKER_PAIRS.map(|(i, j)| Stratum { i, j })
    }

    /// The three columns other than the pivots, increasing.
    pub fn free_columns(&self) -> [usize; 3] {
        let mut out = [0; 3];
        let mut n = 0;
        for k in 0..5 {
            if k != self.i && k != self.j {
                out[n] = k;
                n += 1;
            }
        }
        out
    }

    /// Dimension of the cell.
    pub fn dimension(&self) -> usize {
        (3 - self.i) + (4 - self.j)
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Symbolic row-reduced spanning pair of a stratum in six chart unknowns,
/// named after the Plücker coordinate each one equals.
#[derive(Clone, Debug)]
pub struct StratumChart {
    pub stratum: Stratum,
    /// Ring of the six unknowns, names sorted (`p02 < p03 < …`).
    pub ring: RingRef,
    /// The Plücker pair of each unknown, in ring order.
    pub pairs: Vec<(usize, usize)>,
    pub rows: [[MPoly; 5]; 2],
    /// The lex-earlier Plücker minors, nonzero ones only.
    pub constraints: Vec<MPoly>,
}

/// Entries of the reduced pair: row 0 at column `k` is ±p_{kj}, row 1 is ±p_{ik}.
fn entry_pair(s: Stratum, row: usize, k: usize) -> ((usize, usize), bool) {
    let other = if row == 0 { s.j } else { s.i };
    if k < other {
        ((k, other), row == 1)
    } else {
        ((other, k), row == 0)
    }
}

pub fn stratum_parameterization(s: Stratum) -> StratumChart {
    let free = s.free_columns();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for row in 0..2 {
        for &k in &free {
            pairs.push(entry_pair(s, row, k).0);
        }
    }
    pairs.sort();
    let names: Vec<String> = pairs.iter().map(|&(a, b)| pair_name(a, b)).collect();
    let ring = PolyRing::new(&names, MonomialOrder::GrevLex).expect("valid names");
    let zero = MPoly::zero(&ring);
    let one = MPoly::one(&ring);
    let mut rows: [[MPoly; 5]; 2] = core::array::from_fn(|_| core::array::from_fn(|_| zero.clone()));
    rows[0][s.i] = one.clone();
    rows[1][s.j] = one;
    for row in 0..2 {
        for &k in &free {
            let (pair, negated) = entry_pair(s, row, k);
            let v = MPoly::var(&ring, pairs.iter().position(|&p| p == pair).expect("listed"));
            rows[row][k] = if negated { -&v } else { v };
        }
    }
    let mut constraints = Vec::new();
    for &(a, b) in PLUECKER_PAIRS.iter().take_while(|&&p| p != (s.i, s.j)) {
        let minor = &(&rows[0][a] * &rows[1][b]) - &(&rows[0][b] * &rows[1][a]);
        if !minor.is_zero() {
            constraints.push(minor);
        }
    }
    StratumChart { stratum: s, ring, pairs, rows, constraints }
}

impl StratumChart {
    /// Unknowns not forced to zero by a linear constraint, in ring order.
    pub fn free_parameters(&self) -> Vec<usize> {
        let forced: Vec<usize> = self
            .constraints
            .iter()
            .filter(|c| c.total_degree() == Some(1) && c.len() == 1)
            .map(|c| c.support_vars()[0])
            .collect();
        (0..self.ring.nvars()).filter(|v| !forced.contains(v)).collect()
    }

    /// The line at a chart point (values in ring order).
    pub fn span_at(&self, values: &[FieldElement]) -> Result<LineSpan> {
        if values.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch("chart point needs 6 values".into()));
        }
        let eval = |row: usize| -> Result<Vec<FieldElement>> {
            self.rows[row].iter().map(|e| e.evaluate(values)).collect()
        };
        LineSpan::from_vecs(&eval(0)?, &eval(1)?)
    }

    /// Chart coordinates of a line in this stratum, `None` for lines elsewhere.
    pub fn coordinates_of(&self, line: &LineSpan) -> Option<Vec<FieldElement>> {
        let p = pluecker_from_span(line);
        if p.stratum() != self.stratum {
            return None;
        }
        let p = p.normalized();
        Some(self.pairs.iter().map(|&(a, b)| p.get(a, b).clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn standard_line_coordinates() {
        let p = pluecker_from_span(&LineSpan::standard());
        assert_eq!(p.coords()[0], fe(1));
        assert!(p.coords()[1..].iter().all(|c| c.is_zero()));
        assert_eq!(p.stratum(), Stratum { i: 0, j: 1 });
    }

    #[test]
    fn minors_of_an_offset_line() {
        let l = LineSpan::from_i64([1, -1, 0, 0, 0], [0, 0, 1, -1, 0]).unwrap();
        let p = pluecker_from_span(&l);
        let want = [0, 1, -1, 0, -1, 1, 0, 0, 0, 0].map(fe);
        assert_eq!(p.coords(), &want);
        assert_eq!(stratum_of(&p), Stratum { i: 0, j: 2 });
    }

    #[test]
    fn chart_zero_one_convention() {
        let chart = stratum_parameterization(Stratum { i: 0, j: 1 });
        let names: Vec<_> = chart.ring.names().to_vec();
        assert_eq!(names, ["p02", "p03", "p04", "p12", "p13", "p14"]);
        let shown: Vec<String> = chart.rows[0].iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["1", "0", "-p12", "-p13", "-p14"]);
        let shown: Vec<String> = chart.rows[1].iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["0", "1", "p02", "p03", "p04"]);
        assert!(chart.constraints.is_empty());
        // (0, p03, 0, p12, 0, 0) with p03 = 7, p12 = 1
        let l = LineSpan::from_i64([1, 0, -1, 0, 0], [0, 1, 0, 7, 0]).unwrap();
        assert_eq!(chart.coordinates_of(&l).unwrap(), vec![fe(0), fe(7), fe(0), fe(1), fe(0), fe(0)]);
    }

    #[test]
    fn stratum_one_two_forces_column_zero() {
        let chart = stratum_parameterization(Stratum { i: 1, j: 2 });
        assert_eq!(chart.constraints.len(), 4);
        let free: Vec<String> =
            chart.free_parameters().iter().map(|&v| chart.ring.names()[v].clone()).collect();
        assert_eq!(free, ["p13", "p14", "p23", "p24"]);
        assert_eq!(chart.free_parameters().len(), Stratum { i: 1, j: 2 }.dimension());
    }

    #[test]
    fn parameter_counts_match_cell_dimensions() {
        for s in Stratum::all() {
            let chart = stratum_parameterization(s);
            assert_eq!(chart.free_parameters().len(), s.dimension(), "stratum {}", s);
        }
        assert_eq!(stratum_parameterization(Stratum { i: 3, j: 4 }).free_parameters().len(), 0);
    }

    #[test]
    fn span_from_pluecker_round_trip() {
        let mut c = [0; 10].map(fe);
        c[0] = fe(1);
        assert!(span_from_pluecker(&PlueckerCoords::new(c).unwrap()).unwrap().same_line(&LineSpan::standard()));
        let l = LineSpan::from_i64([1, -1, 0, 0, 0], [0, 0, 1, -1, 0]).unwrap();
        let back = span_from_pluecker(&pluecker_from_span(&l)).unwrap();
        assert!(back.same_line(&l));
    }

    #[test]
    fn non_decomposable_input_is_rejected() {
        let mut c = [0; 10].map(fe);
        c[0] = fe(1); // p01
        c[7] = fe(1); // p23
        assert!(matches!(PlueckerCoords::new(c), Err(Error::NotDecomposable)));
    }

    #[test]
    fn rank_one_span_is_rejected() {
        assert!(LineSpan::from_i64([1, 2, 0, 0, 0], [2, 4, 0, 0, 0]).is_err());
    }
}
