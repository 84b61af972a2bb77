//! Invariants of a single line on a cubic threefold: the φ-coefficients, the
//! type matrix and its determinant `m`, the triple-line forms, the plane section
//! along the tangent plane, the tangent space of the Fano surface, the Jacobian
//! rank of the second-type curve, and the Murre normal form.
//!
//! Everything is computed with the line moved to `span(e0, e1)`. With that
//! normalization the φ-coefficients are read off the cubic directly:
//!
//! * `φ^{i,j}` is the coefficient of `t0^i t1^j` in `F(t0, t1, 0, 0, 0)`,
//! * `φ_v^{j,k}` is the coefficient of `t0^j t1^k` in `∂F/∂x_v` on the line,
//! * `φ_{v,w}^{k,l}` is the coefficient of `t0^k t1^l` in `∂²F/∂x_v∂x_w` on the line.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::grassmann::{stratum_parameterization, LineSpan, Stratum, StratumChart};
use crate::ideal::GroebnerConfig;
use crate::linalg::{normalize_first_nonzero, Matrix};
use crate::poly::{MPoly, Monomial, MonomialOrder, PolyRing, RingRef};
use crate::threefold::{standardize, CubicThreefold, ProjectiveTransform};

/// Binary monomials `t0^j t1^k` with `j + k = 2`, in the order (2,0), (1,1), (0,2).
const QUADRATIC: [(u16, u16); 3] = [(2, 0), (1, 1), (0, 2)];
/// `t0^i t1^j` with `i + j = 3`, in the order (3,0), (2,1), (1,2), (0,3).
const CUBIC: [(u16, u16); 4] = [(3, 0), (2, 1), (1, 2), (0, 3)];

/// φ-coefficients of a line in standard position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhiData {
    /// `φ^{3,0}, φ^{2,1}, φ^{1,2}, φ^{0,3}`.
    pub phi3: [FieldElement; 4],
    /// `phi2[v - 2][k]` is `φ_v^{2-k,k}`.
    pub phi2: [[FieldElement; 3]; 3],
    /// `phi1[v - 2][w - 2][l]` is `φ_{v,w}^{1-l,l}`; symmetric in `v, w`.
    pub phi1: [[[FieldElement; 2]; 3]; 3],
}

impl PhiData {
    /// `φ^{i,j}` for `i + j = 3`.
    pub fn cubic(&self, i: usize, j: usize) -> &FieldElement {
        debug_assert_eq!(i + j, 3);
        &self.phi3[3 - i]
    }

    /// `φ_v^{j,k}` for `j + k = 2` and `v ∈ {2,3,4}`; zero outside that range of `j, k`.
    pub fn first(&self, v: usize, j: i32, k: i32) -> FieldElement {
        if j < 0 || k < 0 {
            return FieldElement::zero();
        }
        debug_assert_eq!(j + k, 2);
        self.phi2[v - 2][k as usize].clone()
    }

    /// `φ_{v,w}^{k,l}` for `k + l = 1`.
    pub fn second(&self, v: usize, w: usize, k: usize, l: usize) -> &FieldElement {
        debug_assert_eq!(k + l, 1);
        &self.phi1[v - 2][w - 2][l]
    }

    pub fn on_cubic(&self) -> bool {
        self.phi3.iter().all(|c| c.is_zero())
    }

    /// The two triple-line forms at `alpha`:
    /// `½ Σ φ_{v,v} α_v² + Σ_{v<w} φ_{v,w} α_v α_w` for the `t0` and `t1` components.
    pub fn triple_forms(&self, alpha: &[FieldElement; 3]) -> [FieldElement; 2] {
        let half = FieldElement::from_ratio(1, 2);
        core::array::from_fn(|l| {
            let mut acc = FieldElement::zero();
            for v in 0..3 {
                let d = &(&half * &self.phi1[v][v][l]) * &(&alpha[v] * &alpha[v]);
                acc += &d;
                for w in v + 1..3 {
                    let o = &self.phi1[v][w][l] * &(&alpha[v] * &alpha[w]);
                    acc += &o;
                }
            }
            acc
        })
    }
}

/// The φ-coefficients of the standard line `span(e0, e1)` on `x`.
pub fn standard_phi(x: &CubicThreefold) -> PhiData {
    let f = x.poly();
    let on_line = |p: &MPoly, j: u16, k: u16| -> FieldElement {
        p.coeff(&Monomial::from_exponents(&[j, k, 0, 0, 0]).expect("5 vars"))
    };
    let phi3 = CUBIC.map(|(i, j)| on_line(f, i, j));
    let d: Vec<MPoly> = (2..5).map(|v| f.partial_derivative(v)).collect();
    let phi2 = core::array::from_fn(|v| QUADRATIC.map(|(j, k)| on_line(&d[v], j, k)));
    let phi1 = core::array::from_fn(|v| {
        core::array::from_fn(|w| {
            let dd = d[v].partial_derivative(w + 2);
            [on_line(&dd, 1, 0), on_line(&dd, 0, 1)]
        })
    });
    PhiData { phi3, phi2, phi1 }
}

/// Standardizes, then reads the φ-coefficients. Works for any line; `phi3`
/// detects containment.
pub fn compute_phi(x: &CubicThreefold, line: &LineSpan) -> PhiData {
    let (_, xs) = standardize(x, line);
    standard_phi(&xs)
}

/// Rows `(2,0), (1,1), (0,2)`, columns `x2, x3, x4`; its determinant is `m`.
pub fn type_matrix(phi: &PhiData) -> Result<Matrix> {
    if !phi.on_cubic() {
        return Err(Error::LineNotOnCubic);
    }
    let mut m = Matrix::zeros(3, 3);
    for k in 0..3 {
        for v in 0..3 {
            m[(k, v)] = phi.phi2[v][k].clone();
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ResidualShape {
    /// `ℓ ∪ C`.
    Conic,
    /// `2ℓ ∪ ℓ′` with `ℓ′ ≠ ℓ`.
    DoubleLine,
    /// `3ℓ`.
    TripleLine,
    /// The whole plane lies on the cubic; impossible when the cubic is smooth.
    Degenerate,
}

impl ResidualShape {
    pub fn name(self) -> &'static str {
        match self {
            ResidualShape::Conic => "Conic",
            ResidualShape::DoubleLine => "DoubleLine",
            ResidualShape::TripleLine => "TripleLine",
            ResidualShape::Degenerate => "Degenerate",
        }
    }
}

/// The plane cubic `F(t0·v0 + t1·v1 + t2·v2)` and how it splits off the line `t2 = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidualDecomposition {
    pub plane_cubic: MPoly,
    pub shape: ResidualShape,
    /// `plane_cubic / t2^k` for the largest such `k`: the residual conic, the residual
    /// line, or a constant.
    pub residual: MPoly,
}

impl ResidualDecomposition {
    /// The residual line `ℓ′` in the double-line case.
    pub fn residual_line(&self) -> Option<&MPoly> {
        (self.shape == ResidualShape::DoubleLine).then_some(&self.residual)
    }
}

pub fn restrict_to_plane(
    x: &CubicThreefold,
    line: &LineSpan,
    v2: &[FieldElement],
) -> Result<ResidualDecomposition> {
    if v2.len() != 5 {
        return Err(Error::DimensionMismatch("a point of P^4 needs 5 coordinates".into()));
    }
    if line.contains_point(v2) {
        return Err(Error::PointOnLine);
    }
    if !x.contains_line(line) {
        return Err(Error::LineNotOnCubic);
    }
    let plane_cubic = x.restrict(&[line.v0(), line.v1(), v2])?;
    if plane_cubic.is_zero() {
        return Ok(ResidualDecomposition {
            residual: plane_cubic.clone(),
            plane_cubic,
            shape: ResidualShape::Degenerate,
        });
    }
    let k = plane_cubic.var_valuation(2).expect("nonzero");
    let residual = plane_cubic.div_var_power(2, k).expect("valuation");
    let shape = match k {
        1 => ResidualShape::Conic,
        2 => ResidualShape::DoubleLine,
        3 => ResidualShape::TripleLine,
        _ => return Err(Error::Internal(format!("plane section vanishes to order {} on the line", k))),
    };
    Ok(ResidualDecomposition { plane_cubic, shape, residual })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SecondTypeData {
    /// Kernel of the type matrix in standard position, first nonzero entry 1.
    pub alpha: [FieldElement; 3],
    /// The tangent plane is `span(line, tangent_point)` in the input coordinates.
    pub tangent_point: [FieldElement; 5],
    pub triple_forms: [FieldElement; 2],
    pub is_triple: bool,
    /// Plane section in the frame (reduced `v0`, reduced `v1`, `tangent_point`).
    pub residual: ResidualDecomposition,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LineType {
    FirstType,
    SecondType(SecondTypeData),
}

impl LineType {
    pub fn is_second_type(&self) -> bool {
        matches!(self, LineType::SecondType(_))
    }

    pub fn is_triple(&self) -> bool {
        matches!(self, LineType::SecondType(d) if d.is_triple)
    }

    pub fn name(&self) -> &'static str {
        match self {
            LineType::FirstType => "FirstType",
            LineType::SecondType(_) => "SecondType",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassifyOptions {
    /// Refuse singular cubics up front.
    pub check_smooth: bool,
    pub groebner: GroebnerConfig,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { check_smooth: true, groebner: GroebnerConfig::default() }
    }
}

/// Classification together with the data it was derived from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    pub line_type: LineType,
    pub phi: PhiData,
    pub type_matrix: Matrix,
    pub determinant: FieldElement,
    /// Maps the standard line to the input line.
    pub transform: ProjectiveTransform,
}

pub fn classify(x: &CubicThreefold, line: &LineSpan, opts: &ClassifyOptions) -> Result<LineType> {
    Ok(classify_detailed(x, line, opts)?.line_type)
}

pub fn classify_detailed(
    x: &CubicThreefold,
    line: &LineSpan,
    opts: &ClassifyOptions,
) -> Result<Classification> {
    if !x.contains_line(line) {
        return Err(Error::LineNotOnCubic);
    }
    if opts.check_smooth && !x.is_smooth(&opts.groebner)? {
        return Err(Error::SingularCubic);
    }
    let (g, xs) = standardize(x, line);
    let phi = standard_phi(&xs);
    let tm = type_matrix(&phi)?;
    let determinant = tm.det()?;
    if !determinant.is_zero() {
        return Ok(Classification {
            line_type: LineType::FirstType,
            phi,
            type_matrix: tm,
            determinant,
            transform: g,
        });
    }
    let rank = tm.rank();
    if rank != 2 {
        return Err(Error::SingularEvidence(format!(
            "type matrix of a second-type line has rank {} instead of 2",
            rank
        )));
    }
    let kernel = tm.kernel();
    let alpha_vec = normalize_first_nonzero(&kernel[0]).expect("kernel vector is nonzero");
    let alpha: [FieldElement; 3] = core::array::from_fn(|k| alpha_vec[k].clone());
    let triple_forms = phi.triple_forms(&alpha);
    let is_triple = triple_forms.iter().all(|q| q.is_zero());

    let std_point = [FieldElement::zero(), FieldElement::zero(), alpha[0].clone(), alpha[1].clone(), alpha[2].clone()];
    let residual = restrict_to_plane(&xs, &LineSpan::standard(), &std_point)?;
    let tangent_point = g.apply(&std_point)?;
    let tangent_point = core::array::from_fn(|k| tangent_point[k].clone());
    Ok(Classification {
        line_type: LineType::SecondType(SecondTypeData {
            alpha,
            tangent_point,
            triple_forms,
            is_triple,
            residual,
        }),
        phi,
        type_matrix: tm,
        determinant,
        transform: g,
    })
}

/// Jacobian of the four containment coefficients in the chart `p01 = 1` of the
/// standardized line, from the identities `∂φ^{i,j}/∂p0v = φ_v^{i,j-1}` and
/// `∂φ^{i,j}/∂p1v = -φ_v^{i-1,j}`. Columns are `p02, p03, p04, p12, p13, p14`.
pub fn fano_jacobian(phi: &PhiData) -> Matrix {
    let mut j = Matrix::zeros(4, 6);
    for (row, &(a, b)) in CUBIC.iter().enumerate() {
        let (a, b) = (a as i32, b as i32);
        for v in 2..5 {
            j[(row, v - 2)] = phi.first(v, a, b - 1);
            j[(row, v + 1)] = -phi.first(v, a - 1, b);
        }
    }
    j
}

/// Tangent space of the Fano surface at the line: its dimension and a kernel
/// basis in the chart coordinates of the standardized line.
pub fn fano_tangent_space(x: &CubicThreefold, line: &LineSpan) -> Result<(usize, Vec<Vec<FieldElement>>)> {
    let phi = compute_phi(x, line);
    if !phi.on_cubic() {
        return Err(Error::LineNotOnCubic);
    }
    let kernel = fano_jacobian(&phi).kernel();
    Ok((kernel.len(), kernel))
}

/// Symbolic local equations of the Fano surface and the second-type curve on one stratum.
#[derive(Clone, Debug)]
pub struct ChartEquations {
    pub chart: StratumChart,
    /// `φ^{3,0}, φ^{2,1}, φ^{1,2}, φ^{0,3}` in the chart unknowns.
    pub phi: [MPoly; 4],
    /// `phi2[c][k]`: `φ` of the derivative along the `c`-th free column, quadratic index `k`.
    pub phi2: [[MPoly; 3]; 3],
    /// Determinant of `phi2` as a 3×3 matrix.
    pub m: MPoly,
}

impl ChartEquations {
    pub fn ring(&self) -> &RingRef {
        &self.chart.ring
    }

    /// The four Fano equations followed by `m`.
    pub fn five(&self) -> Vec<MPoly> {
        let mut out = self.phi.to_vec();
        out.push(self.m.clone());
        out
    }
}

/// `F(Σ t_k·points[k])` in a ring extending `base` by `t0, t1, …` (appended last).
pub(crate) fn substitute_pencil(
    f: &MPoly,
    points: &[&[MPoly; 5]],
    base: &RingRef,
) -> Result<(RingRef, MPoly)> {
    let mut names: Vec<String> = base.names().to_vec();
    let first_t = names.len();
    for k in 0..points.len() {
        names.push(format!("t{}", k));
    }
    let ext = PolyRing::new(&names, MonomialOrder::GrevLex)?;
    let mut images = Vec::with_capacity(5);
    for c in 0..5 {
        let mut acc = MPoly::zero(&ext);
        for (k, p) in points.iter().enumerate() {
            let t = MPoly::var(&ext, first_t + k);
            acc = &acc + &(&t * &p[c].embed(&ext)?);
        }
        images.push(acc);
    }
    let g = f.substitute(&images)?;
    Ok((ext, g))
}

/// Coefficient of `t0^e0 t1^e1 …` in a polynomial built by [`substitute_pencil`].
pub(crate) fn pencil_coefficient(g: &MPoly, base: &RingRef, exps: &[u16]) -> Result<MPoly> {
    let first_t = base.nvars();
    let t_vars: Vec<usize> = (first_t..first_t + exps.len()).collect();
    g.coefficient_extract(&t_vars, exps)?.with_ring(base)
}

fn det3(m: &[[MPoly; 3]; 3]) -> MPoly {
    let minor = |a: usize, b: usize, c: usize, d: usize| -> MPoly {
        &(&m[1][a] * &m[2][b]) - &(&m[1][c] * &m[2][d])
    };
    let t0 = &m[0][0] * &minor(1, 2, 2, 1);
    let t1 = &m[0][1] * &minor(0, 2, 2, 0);
    let t2 = &m[0][2] * &minor(0, 1, 1, 0);
    &(&t0 - &t1) + &t2
}

pub fn chart_equations(x: &CubicThreefold, s: Stratum) -> Result<ChartEquations> {
    let chart = stratum_parameterization(s);
    let base = chart.ring.clone();
    let (_, g) = substitute_pencil(x.poly(), &[&chart.rows[0], &chart.rows[1]], &base)?;
    let phi = CUBIC
        .iter()
        .map(|&(i, j)| pencil_coefficient(&g, &base, &[i, j]))
        .collect::<Result<Vec<_>>>()?;
    let free = s.free_columns();
    let mut phi2: [[MPoly; 3]; 3] =
        core::array::from_fn(|_| core::array::from_fn(|_| MPoly::zero(&base)));
    for (c, &col) in free.iter().enumerate() {
        let d = x.poly().partial_derivative(col);
        let (_, gd) = substitute_pencil(&d, &[&chart.rows[0], &chart.rows[1]], &base)?;
        for (k, &(a, b)) in QUADRATIC.iter().enumerate() {
            phi2[c][k] = pencil_coefficient(&gd, &base, &[a, b])?;
        }
    }
    // rows of the type matrix are the quadratic indices, columns the free columns
    let tm: [[MPoly; 3]; 3] = core::array::from_fn(|k| core::array::from_fn(|c| phi2[c][k].clone()));
    let m = det3(&tm);
    Ok(ChartEquations { chart, phi: phi.try_into().expect("four"), phi2, m })
}

/// Rank of the 5×6 Jacobian of `(φ^{3,0}, φ^{2,1}, φ^{1,2}, φ^{0,3}, m)` at a
/// second-type line, in the chart `p01 = 1` of its standard position. The line is
/// a singular point of the second-type curve iff the rank is at most 4.
pub fn m_curve_jacobian_rank(x: &CubicThreefold, line: &LineSpan) -> Result<usize> {
    Ok(m_curve_jacobian(x, line)?.rank())
}

pub fn m_curve_jacobian(x: &CubicThreefold, line: &LineSpan) -> Result<Matrix> {
    if !x.contains_line(line) {
        return Err(Error::LineNotOnCubic);
    }
    let (_, xs) = standardize(x, line);
    let eqs = chart_equations(&xs, Stratum { i: 0, j: 1 })?;
    if !eqs.m.constant_coeff().is_zero() {
        return Err(Error::NotSecondType);
    }
    let mut jac = Matrix::zeros(5, 6);
    for (r, e) in eqs.five().iter().enumerate() {
        for v in 0..6 {
            jac[(r, v)] = e.coeff(&Monomial::var(v));
        }
    }
    Ok(jac)
}

/// The Murre coefficients of a second-type line after moving it to
/// `span(e0, e1)` with tangent plane `span(e0, e1, e4)`: then
/// `F = x2·q2 + x3·q3 + x4²·l` and `a0, a1` are the `x0, x1` coefficients of `l`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MurreNormalForm {
    pub a0: FieldElement,
    pub a1: FieldElement,
    /// `x = transform · y` turns the input cubic into `cubic`.
    pub transform: ProjectiveTransform,
    pub cubic: CubicThreefold,
    /// φ-coefficients in the normalized frame.
    pub phi: PhiData,
}

pub fn murre_normal_form(x: &CubicThreefold, line: &LineSpan, opts: &ClassifyOptions) -> Result<MurreNormalForm> {
    let c = classify_detailed(x, line, opts)?;
    let LineType::SecondType(data) = &c.line_type else {
        return Err(Error::NotSecondType);
    };
    let pivot = data.alpha.iter().position(|a| !a.is_zero()).expect("nonzero");
    let mut h = Matrix::identity(5);
    for r in 2..5 {
        h[(r, r)] = FieldElement::zero();
    }
    let mut col = 2;
    for k in (0..3).filter(|&k| k != pivot) {
        h[(k + 2, col)] = FieldElement::one();
        col += 1;
    }
    for k in 0..3 {
        h[(k + 2, 4)] = data.alpha[k].clone();
    }
    let h = ProjectiveTransform::new(h)?;
    let transform = c.transform.compose(&h);
    let cubic = x.transform(&transform);
    let phi = standard_phi(&cubic);
    let half = FieldElement::from_ratio(1, 2);
    Ok(MurreNormalForm {
        a0: &half * phi.second(4, 4, 1, 0),
        a1: &half * phi.second(4, 4, 0, 1),
        transform,
        cubic,
        phi,
    })
}

/// The 4×4 matrix whose determinant is the resultant of `∂F/∂x2` and `∂F/∂x3`
/// on the line, for a second-type line normalized to tangent direction `x4`.
pub fn tangent_resultant_matrix(phi: &PhiData) -> Matrix {
    let p = |v: usize, k: usize| phi.phi2[v - 2][k].clone();
    let z = FieldElement::zero;
    Matrix::from_rows(vec![
        vec![z(), z(), p(2, 0), p(3, 0)],
        vec![p(2, 0), p(3, 0), p(2, 1), p(3, 1)],
        vec![p(2, 1), p(3, 1), p(2, 2), p(3, 2)],
        vec![p(2, 2), p(3, 2), z(), z()],
    ])
    .expect("4x4")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const TRIPLE: &str = "x0^2*x2 + x1^2*x3 + x2^3 + x3^3 + x4^3";
    const DOUBLE: &str = "x0^2*x2 + x1^2*x3 + x4^2*(x0 + x4) + x2^3 + x3^3";
    const FIRST: &str = "x0^2*x2 + x1^2*x3 + x0*x1*x4 + x2^3 + x3^3 + x4^3";

    fn cubic(s: &str) -> CubicThreefold {
        CubicThreefold::parse(s).unwrap()
    }

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn phi_of_fermat_off_the_cubic() {
        let phi = compute_phi(&CubicThreefold::fermat(), &LineSpan::standard());
        assert_eq!(phi.phi3, [1, 0, 0, 1].map(fe));
        assert!(type_matrix(&phi).is_err());
    }

    #[test]
    fn phi_of_fixtures() {
        let phi = compute_phi(&cubic(TRIPLE), &LineSpan::standard());
        assert_eq!(phi.first(2, 2, 0), fe(1));
        assert_eq!(phi.first(3, 0, 2), fe(1));
        let nonzero = (2..5)
            .flat_map(|v| QUADRATIC.iter().map(move |&(j, k)| (v, j, k)))
            .filter(|&(v, j, k)| !phi.first(v, j as i32, k as i32).is_zero())
            .count();
        assert_eq!(nonzero, 2);
        assert!(phi.second(4, 4, 1, 0).is_zero() && phi.second(4, 4, 0, 1).is_zero());

        let phi = compute_phi(&cubic(DOUBLE), &LineSpan::standard());
        assert_eq!(*phi.second(4, 4, 1, 0), fe(2));
        assert!(phi.second(4, 4, 0, 1).is_zero());
    }

    #[test]
    fn type_matrices() {
        let tm = type_matrix(&compute_phi(&cubic(TRIPLE), &LineSpan::standard())).unwrap();
        assert_eq!(tm, Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 1, 0]]));
        assert!(tm.det().unwrap().is_zero());
        let tm = type_matrix(&compute_phi(&cubic(FIRST), &LineSpan::standard())).unwrap();
        assert_eq!(tm, Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
        assert_eq!(tm.det().unwrap(), fe(-1));
        let l = LineSpan::from_i64([1, 0, -1, 0, 0], [0, 1, 0, -1, 0]).unwrap();
        let tm = type_matrix(&compute_phi(&CubicThreefold::fermat(), &l)).unwrap();
        assert!(tm.det().unwrap().is_zero());
    }

    #[test]
    fn classification_of_fixtures() {
        let opts = ClassifyOptions::default();
        let std = LineSpan::standard();
        assert_eq!(classify(&cubic(FIRST), &std, &opts).unwrap(), LineType::FirstType);

        let LineType::SecondType(d) = classify(&cubic(DOUBLE), &std, &opts).unwrap() else { panic!() };
        assert_eq!(d.alpha, [0, 0, 1].map(fe));
        assert!(!d.is_triple);
        assert_eq!(d.residual.shape, ResidualShape::DoubleLine);
        assert_eq!(d.residual.residual_line().unwrap().to_string(), "t0 + t2");

        let LineType::SecondType(d) = classify(&cubic(TRIPLE), &std, &opts).unwrap() else { panic!() };
        assert_eq!(d.alpha, [0, 0, 1].map(fe));
        assert!(d.is_triple);
        assert_eq!(d.residual.shape, ResidualShape::TripleLine);

        let l = LineSpan::from_i64([1, 0, -1, 0, 0], [0, 1, 0, -1, 0]).unwrap();
        assert!(classify(&CubicThreefold::fermat(), &l, &opts).unwrap().is_triple());
        assert!(matches!(
            classify(&CubicThreefold::fermat(), &std, &opts),
            Err(Error::LineNotOnCubic)
        ));
    }

    #[test]
    fn plane_sections() {
        let fermat = CubicThreefold::fermat();
        let l = LineSpan::from_i64([1, 0, -1, 0, 0], [0, 1, 0, -1, 0]).unwrap();
        let e4 = [0, 0, 0, 0, 1].map(fe);
        let r = restrict_to_plane(&fermat, &l, &e4).unwrap();
        assert_eq!(r.shape, ResidualShape::TripleLine);
        assert_eq!(r.plane_cubic.to_string(), "t2^3");

        let r = restrict_to_plane(&cubic(DOUBLE), &LineSpan::standard(), &e4).unwrap();
        assert_eq!(r.shape, ResidualShape::DoubleLine);
        assert_eq!(r.residual.to_string(), "t0 + t2");

        let generic = [0, 0, 1, 2, 3].map(fe);
        let r = restrict_to_plane(&fermat, &l, &generic).unwrap();
        assert_eq!(r.shape, ResidualShape::Conic);
        assert!(r.residual.var_valuation(2) == Some(0));

        assert!(matches!(
            restrict_to_plane(&fermat, &l, &[1, 0, -1, 0, 0].map(fe)),
            Err(Error::PointOnLine)
        ));
    }

    #[test]
    fn tangent_spaces() {
        let (dim, _) = fano_tangent_space(&cubic(TRIPLE), &LineSpan::standard()).unwrap();
        assert_eq!(dim, 2);
        let (dim, basis) = fano_tangent_space(&cubic(DOUBLE), &LineSpan::standard()).unwrap();
        assert_eq!(dim, 2);
        // the p04 and p14 directions
        for v in &basis {
            assert!(v[0].is_zero() && v[1].is_zero() && v[3].is_zero() && v[4].is_zero());
        }
    }

    #[test]
    fn jacobian_ranks_of_fixtures() {
        let std = LineSpan::standard();
        assert!(m_curve_jacobian_rank(&cubic(TRIPLE), &std).unwrap() <= 4);
        assert_eq!(m_curve_jacobian_rank(&cubic(DOUBLE), &std).unwrap(), 5);
        assert!(matches!(m_curve_jacobian_rank(&cubic(FIRST), &std), Err(Error::NotSecondType)));
    }

    #[test]
    fn murre_coefficients() {
        let opts = ClassifyOptions::default();
        let std = LineSpan::standard();
        let m = murre_normal_form(&cubic(DOUBLE), &std, &opts).unwrap();
        assert_eq!((m.a0, m.a1), (fe(1), fe(0)));
        let m = murre_normal_form(&cubic(TRIPLE), &std, &opts).unwrap();
        assert_eq!((m.a0, m.a1), (fe(0), fe(0)));
        assert!(!tangent_resultant_matrix(&m.phi).det().unwrap().is_zero());
    }

    #[test]
    fn fermat_chart_equations() {
        let eqs = chart_equations(&CubicThreefold::fermat(), Stratum { i: 0, j: 1 }).unwrap();
        let r = eqs.ring().clone();
        let p = |s: &str| MPoly::parse(&r, s).unwrap();
        assert_eq!(eqs.phi[0], p("1 - p12^3 - p13^3 - p14^3"));
        assert_eq!(eqs.phi[3], p("p02^3 + p03^3 + p04^3 + 1"));
        assert_eq!(eqs.phi[1], p("3*(p02*p12^2 + p03*p13^2 + p04*p14^2)"));
        assert_eq!(eqs.phi[2], p("-3*(p02^2*p12 + p03^2*p13 + p04^2*p14)"));
    }
}
