//! Cubic threefolds in P⁴, their smoothness, lines on them, and moving a line
//! to the standard position `{x2 = x3 = x4 = 0}`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::grassmann::LineSpan;
use crate::ideal::{groebner, GroebnerConfig, Ideal};
use crate::linalg::Matrix;
use crate::poly::{MPoly, MonomialOrder, PolyRing, RingRef};

/// A nonzero homogeneous cubic form in five variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicThreefold {
    f: MPoly,
}

impl CubicThreefold {
    pub fn new(f: MPoly) -> Result<Self> {
        if f.ring().nvars() != 5 {
            return Err(Error::InvalidRing("a cubic threefold needs exactly 5 variables".into()));
        }
        if f.is_zero() || !f.is_homogeneous(3) {
            return Err(Error::NotHomogeneousCubic);
        }
        Ok(CubicThreefold { f })
    }

    /// Parses a cubic in `x0..x4`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(MPoly::parse(&PolyRing::projective4(MonomialOrder::GrevLex), text)?)
    }

    pub fn fermat() -> Self {
        Self::parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3").expect("valid")
    }

    pub fn poly(&self) -> &MPoly {
        &self.f
    }

    pub fn ring(&self) -> &RingRef {
        self.f.ring()
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        self.f.evaluate(point)
    }

    pub fn gradient(&self) -> Vec<MPoly> {
        (0..5).map(|i| self.f.partial_derivative(i)).collect()
    }

    /// `F(t0·v0 + t1·v1 + t2·v2)` as a form in `(t0, t1, t2)`.
    pub fn restrict(&self, points: &[&[FieldElement]]) -> Result<MPoly> {
        let names: Vec<alloc::string::String> =
            (0..points.len()).map(|k| alloc::format!("t{}", k)).collect();
        let tring = PolyRing::new(&names, MonomialOrder::Lex)?;
        let images: Vec<MPoly> = (0..5)
            .map(|c| {
                let terms = points
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (crate::poly::Monomial::var(k), p[c].clone()))
                    .collect();
                MPoly::from_terms(&tring, terms)
            })
            .collect();
        self.f.substitute(&images)
    }

    /// `F(t0·v0 + t1·v1)` as a binary cubic form.
    pub fn restrict_to_line(&self, line: &LineSpan) -> MPoly {
        self.restrict(&[line.v0(), line.v1()]).expect("5 images")
    }

    pub fn contains_line(&self, line: &LineSpan) -> bool {
        self.restrict_to_line(line).is_zero()
    }

    /// True iff the five partials vanish simultaneously only at the origin.
    pub fn is_smooth(&self, cfg: &GroebnerConfig) -> Result<bool> {
        let ideal = Ideal::new(self.ring(), self.gradient())?;
        let gb = groebner(&ideal.with_order(MonomialOrder::GrevLex), cfg)?;
        Ok(gb.is_zero_dimensional())
    }

    /// `F ∘ g`, i.e. the cubic in the coordinates `y` with `x = g·y`.
    pub fn transform(&self, g: &ProjectiveTransform) -> CubicThreefold {
        let ring = self.ring();
        let images: Vec<MPoly> = (0..5)
            .map(|i| {
                let terms = (0..5)
                    .map(|j| (crate::poly::Monomial::var(j), g.matrix()[(i, j)].clone()))
                    .collect();
                MPoly::from_terms(ring, terms)
            })
            .collect();
        CubicThreefold { f: self.f.substitute(&images).expect("5 images") }
    }

    /// A singular point with coordinates in Q(ω), searched among the solutions of
    /// the gradient system on each affine chart `x_k = 1`.
    pub fn singular_point(&self, cfg: &GroebnerConfig) -> Result<Option<[FieldElement; 5]>> {
        use crate::ideal::{solve_zero_dim, SolveConfig};
        for k in 0..5 {
            let others: Vec<usize> = (0..5).filter(|&v| v != k).collect();
            let ring = self.ring().without(&[k]);
            let gens = self
                .gradient()
                .iter()
                .map(|g| g.specialize(k, &FieldElement::one(), &ring))
                .collect::<Result<Vec<_>>>()?;
            // earlier charts already covered points with a nonzero earlier coordinate
            let mut gens = gens;
            for &v in others.iter().filter(|&&v| v < k) {
                let idx = others.iter().position(|&o| o == v).expect("listed");
                gens.push(MPoly::var(&ring, idx));
            }
            let ideal = Ideal::new(&ring, gens)?;
            let solved = match solve_zero_dim(&ideal, &SolveConfig { groebner: *cfg, ..Default::default() }) {
                Ok(s) => s,
                // a positive-dimensional piece of the singular locus gives no witness here
                Err(Error::NotZeroDimensional { .. }) => continue,
                Err(e) => return Err(e),
            };
            if let Some(p) = solved.points.first() {
                let mut out: [FieldElement; 5] = core::array::from_fn(|_| FieldElement::zero());
                out[k] = FieldElement::one();
                for (idx, &v) in others.iter().enumerate() {
                    out[v] = p[idx].clone();
                }
                return Ok(Some(out));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for CubicThreefold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)
    }
}

/// An invertible 5×5 matrix acting on column vectors of P⁴.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectiveTransform {
    m: Matrix,
}

impl ProjectiveTransform {
    pub fn new(m: Matrix) -> Result<Self> {
        if m.rows() != 5 || m.cols() != 5 {
            return Err(Error::DimensionMismatch("a transform of P^4 is 5x5".into()));
        }
        if m.det()?.is_zero() {
            return Err(Error::RankDeficient);
        }
        Ok(ProjectiveTransform { m })
    }

    pub fn identity() -> Self {
        ProjectiveTransform { m: Matrix::identity(5) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn inverse(&self) -> ProjectiveTransform {
        ProjectiveTransform { m: self.m.inverse().expect("invertible") }
    }

    pub fn apply(&self, p: &[FieldElement]) -> Result<Vec<FieldElement>> {
        self.m.mul_vec(p)
    }

    pub fn apply_line(&self, line: &LineSpan) -> LineSpan {
        line.map(&self.m).expect("invertible maps rank 2 to rank 2")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ProjectiveTransform) -> ProjectiveTransform {
        ProjectiveTransform { m: self.m.mul(&other.m).expect("5x5") }
    }
}

/// Moves `line` to `span(e0, e1)`: the columns of `g` are the reduced spanning
/// pair followed by the unit vectors of the non-pivot columns. Returns `g` and
/// `F ∘ g`, whose restriction to the standard line is `F` restricted to `line`.
pub fn standardize(x: &CubicThreefold, line: &LineSpan) -> (ProjectiveTransform, CubicThreefold) {
    let g = standardizing_transform(line);
    let xs = x.transform(&g);
    (g, xs)
}

pub fn standardizing_transform(line: &LineSpan) -> ProjectiveTransform {
    let r = line.reduced();
    let (pi, pj) = line.pivots();
    let mut m = Matrix::zeros(5, 5);
    for k in 0..5 {
        m[(k, 0)] = r.v0()[k].clone();
        m[(k, 1)] = r.v1()[k].clone();
    }
    let mut col = 2;
    for k in (0..5).filter(|&k| k != pi && k != pj) {
        m[(k, col)] = FieldElement::one();
        col += 1;
    }
    ProjectiveTransform::new(m).expect("pivot completion is invertible")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIPLE: &str = "x0^2*x2 + x1^2*x3 + x2^3 + x3^3 + x4^3";

    #[test]
    fn smoothness_examples() {
        let cfg = GroebnerConfig::default();
        assert!(CubicThreefold::fermat().is_smooth(&cfg).unwrap());
        assert!(!CubicThreefold::parse("x0^3").unwrap().is_smooth(&cfg).unwrap());
        assert!(CubicThreefold::parse(TRIPLE).unwrap().is_smooth(&cfg).unwrap());
    }

    #[test]
    fn rejects_non_cubics() {
        assert!(matches!(CubicThreefold::parse("x0^2"), Err(Error::NotHomogeneousCubic)));
        assert!(matches!(CubicThreefold::parse("x0^3 + x1"), Err(Error::NotHomogeneousCubic)));
        assert!(matches!(CubicThreefold::parse("0"), Err(Error::NotHomogeneousCubic)));
    }

    #[test]
    fn containment_examples() {
        let fermat = CubicThreefold::fermat();
        let l = LineSpan::from_i64([1, 0, -1, 0, 0], [0, 1, 0, -1, 0]).unwrap();
        assert!(fermat.contains_line(&l));
        assert!(!fermat.contains_line(&LineSpan::standard()));
        assert!(CubicThreefold::parse(TRIPLE).unwrap().contains_line(&LineSpan::standard()));
    }

    #[test]
    fn standardize_examples() {
        let x = CubicThreefold::parse(TRIPLE).unwrap();
        let (g, xs) = standardize(&x, &LineSpan::standard());
        assert_eq!(g, ProjectiveTransform::identity());
        assert_eq!(xs, x);

        let fermat = CubicThreefold::fermat();
        let l = LineSpan::from_i64([1, 0, -1, 0, 0], [0, 1, 0, -1, 0]).unwrap();
        let (g, xs) = standardize(&fermat, &l);
        assert!(xs.contains_line(&LineSpan::standard()));
        assert!(g.apply_line(&LineSpan::standard()).same_line(&l));
    }

    #[test]
    fn singular_witness() {
        let cfg = GroebnerConfig::default();
        let x = CubicThreefold::parse("x0^2*x1 + x2^3 + x3^3 + x4^3").unwrap();
        let p = x.singular_point(&cfg).unwrap().unwrap();
        for g in x.gradient() {
            assert!(g.evaluate(&p).unwrap().is_zero());
        }
        assert!(CubicThreefold::fermat().singular_point(&cfg).unwrap().is_none());
    }
}
