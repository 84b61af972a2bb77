//! The acceptance criteria, one PASS/FAIL line each. Every criterion runs even
//! when an earlier one fails; the test fails at the end if any did.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use cubic_lines::parallel;
use cubic_lines::sample::{chart_point, murre_pair, random_slice, LineKind};
use cubic_lines_core::census::{fano_chart_ideal, second_type_curve, slice_second_type, CensusOptions, CensusReport};
use cubic_lines_core::classify::{
    chart_equations, classify, fano_tangent_space, m_curve_jacobian_rank, murre_normal_form, ClassifyOptions,
    LineType,
};
use cubic_lines_core::grassmann::{pluecker_from_span, pluecker_relations, LineSpan, Stratum};
use cubic_lines_core::ideal::{solve_zero_dim, SolveConfig};
use cubic_lines_core::threefold::CubicThreefold;
use cubic_lines_core::{
    groebner, Error, FieldElement, GroebnerConfig, Ideal, MPoly, Matrix, Monomial, MonomialOrder, PolyRing,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const TRIPLE: &str = "x0^2*x2 + x1^2*x3 + x2^3 + x3^3 + x4^3";
const DOUBLE: &str = "x0^2*x2 + x1^2*x3 + x4^2*(x0 + x4) + x2^3 + x3^3";

fn int(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn st(i: usize, j: usize) -> Stratum {
    Stratum { i, j }
}

fn no_smooth_check() -> ClassifyOptions {
    ClassifyOptions { check_smooth: false, ..Default::default() }
}

fn check(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn fermat_census() -> CensusReport {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    parallel::census(&CubicThreefold::fermat(), &CensusOptions::default(), jobs).expect("Fermat census").0
}

fn criterion_1(report: &CensusReport) -> Outcome {
    check(report.smooth, "Fermat cubic reported singular")?;
    check(report.is_complete(), "census left unresolved factors")?;
    check(report.total() == 135, format!("total {} instead of 135", report.total()))?;
    Ok("135 triple lines, no unresolved factors".into())
}

fn criterion_2(report: &CensusReport) -> Outcome {
    let want = [((0, 1), 54), ((0, 2), 36), ((0, 3), 18), ((1, 2), 18), ((1, 3), 9)];
    for s in Stratum::all() {
        let expected = want.iter().find(|((i, j), _)| (*i, *j) == (s.i, s.j)).map_or(0, |w| w.1);
        check(report.count(s) == expected, format!("stratum {} has {} lines, expected {}", s, report.count(s), expected))?;
    }
    Ok("54/36/18/18/9 and 0 elsewhere".into())
}

fn cube_roots(sign: i64) -> Vec<FieldElement> {
    // roots of t³ = sign are sign·{1, ω, ω²}
    let w = FieldElement::omega();
    vec![int(sign), &int(sign) * &w, &int(sign) * &(&w * &w)]
}

fn criterion_3(report: &CensusReport) -> Outcome {
    // chart order p02, p03, p04, p12, p13, p14
    let mut want = BTreeSet::new();
    for a in cube_roots(-1) {
        for b in cube_roots(1) {
            want.insert(vec![int(0), a.clone(), int(0), b.clone(), int(0), int(0)]);
            want.insert(vec![a.clone(), int(0), int(0), int(0), b.clone(), int(0)]);
        }
    }
    for p in &want {
        check(p[1].pow(3) + p[0].pow(3) == int(-1) && p[3].pow(3) + p[4].pow(3) == int(1), "bad expected point")?;
    }
    let zero = |u: &[FieldElement], idx: &[usize]| idx.iter().all(|&k| u[k].is_zero());
    let found: BTreeSet<Vec<FieldElement>> = report
        .stratum(st(0, 1))
        .ok_or("stratum (0,1) missing")?
        .lines
        .iter()
        .map(|l| l.chart_coords.clone())
        .filter(|u| zero(u, &[0, 2, 4, 5]) || zero(u, &[1, 2, 3, 5]))
        .collect();
    check(found == want, format!("{} lines of the two shapes, expected the 18 listed", found.len()))?;
    Ok("both families of 9 found, nothing else of that shape".into())
}

/// `a` and `b` are nonzero multiples of each other.
fn proportional(a: &MPoly, b: &MPoly) -> bool {
    match (a.leading_coeff(), b.leading_coeff()) {
        (Some(ca), Some(cb)) => a.scale(cb) == b.scale(ca),
        _ => false,
    }
}

fn criterion_4() -> Outcome {
    let eqs = chart_equations(&CubicThreefold::fermat(), st(0, 1)).map_err(|e| e.to_string())?;
    let r = eqs.ring().clone();
    let p = |s: &str| MPoly::parse(&r, s).expect("parses");
    let expected = [
        p("p12^3 + p13^3 + p14^3 - 1"),
        p("p02*p12^2 + p03*p13^2 + p04*p14^2"),
        p("p02^2*p12 + p03^2*p13 + p04^2*p14"),
        p("p02^3 + p03^3 + p04^3 + 1"),
    ];
    for e in &expected {
        check(eqs.phi.iter().any(|f| proportional(f, e)), format!("no chart equation proportional to {}", e))?;
    }
    let q1 = p("p04*p13 - p03*p14");
    let q2 = p("p04*p12 - p02*p14");
    let q3 = p("p03*p12 - p02*p13");
    check(proportional(&eqs.m, &(&(&q1 * &q2) * &q3)), "m is not a multiple of Q1·Q2·Q3")?;
    let mut rest = eqs.m.clone();
    for q in [&q1, &q2, &q3] {
        rest = rest.exact_div(q).map_err(|e| e.to_string())?.ok_or("a quadric does not divide m")?;
    }
    check(rest.is_constant() && !rest.is_zero(), "cofactor of Q1·Q2·Q3 is not a nonzero constant")?;
    Ok(format!("four containment equations match, m = {}·Q1·Q2·Q3", rest.constant_coeff()))
}

fn fixture_lines() -> Vec<(&'static str, CubicThreefold, LineSpan, bool)> {
    vec![
        ("triple fixture", CubicThreefold::parse(TRIPLE).unwrap(), LineSpan::standard(), true),
        ("double fixture", CubicThreefold::parse(DOUBLE).unwrap(), LineSpan::standard(), false),
    ]
}

/// Whether `is_triple` agrees with `rank ≤ 4` at a second-type line.
fn law_holds(x: &CubicThreefold, l: &LineSpan) -> Result<bool, String> {
    let t = classify(x, l, &no_smooth_check()).map_err(|e| e.to_string())?;
    if !t.is_second_type() {
        return Err(format!("{} is not of the second type", l));
    }
    let rank = m_curve_jacobian_rank(x, l).map_err(|e| e.to_string())?;
    Ok(t.is_triple() == (rank <= 4))
}

fn criterion_5(report: &CensusReport) -> Outcome {
    let fermat = CubicThreefold::fermat();
    let mut checked = 0;
    for t in report.lines() {
        check(law_holds(&fermat, &t.line)?, format!("Fermat triple line {} breaks the law", t.line))?;
        checked += 1;
    }
    let cfg = GroebnerConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sliced = 0;
    for (name, x, l, triple) in fixture_lines() {
        check(x.is_smooth(&cfg).map_err(|e| e.to_string())?, format!("{} is singular", name))?;
        check(classify(&x, &l, &no_smooth_check()).map_err(|e| e.to_string())?.is_triple() == triple, format!("{} has the wrong kind", name))?;
        check(law_holds(&x, &l)?, format!("{} breaks the law", name))?;
        checked += 1;
        let (s, u) = chart_point(&l);
        for _ in 0..2 {
            let sample = slice_second_type(&x, s, &random_slice(&mut rng, 5, Some(&u)), &SolveConfig::default())
                .map_err(|e| e.to_string())?;
            for p in &sample.points {
                check(law_holds(&x, &p.line)?, format!("sliced point {} on the {} breaks the law", p.line, name))?;
                sliced += 1;
            }
        }
    }
    // random slices of the curve rarely meet a point of small height, so each
    // slice is made to pass through the line of a constructed pair
    let mut pairs = 0;
    while sliced < 24 {
        let kind = if pairs % 2 == 0 { LineKind::SecondType } else { LineKind::Triple };
        let (x, l) = murre_pair(&mut rng, kind, 2, true);
        if !x.is_smooth(&cfg).map_err(|e| e.to_string())? {
            continue;
        }
        pairs += 1;
        let (s, u) = chart_point(&l);
        let sample = slice_second_type(&x, s, &random_slice(&mut rng, 5, Some(&u)), &SolveConfig::default())
            .map_err(|e| e.to_string())?;
        check(sample.points.iter().any(|p| p.line.same_line(&l)), format!("slice through {} missed it", l))?;
        for p in &sample.points {
            check(law_holds(&x, &p.line)?, format!("sliced point {} on {} breaks the law", p.line, x))?;
            sliced += 1;
        }
        check(pairs < 60, "too few sample points recovered")?;
    }
    Ok(format!("{} census and fixture lines, {} sliced points on {} random cubics, no counterexample", checked, sliced, pairs))
}

fn criterion_6() -> Outcome {
    let x = CubicThreefold::fermat();
    let cfg = SolveConfig::default();
    let (_, fano) = fano_chart_ideal(&x, st(0, 1), &cfg).map_err(|e| e.to_string())?;
    let (_, curve) = second_type_curve(&x, st(0, 1), &cfg).map_err(|e| e.to_string())?;
    check(fano == 2, format!("Fano chart dimension {}", fano))?;
    check(curve == 1, format!("second-type dimension {}", curve))?;
    Ok("Fano chart has dimension 2, second-type locus dimension 1".into())
}

fn criterion_7(report: &CensusReport) -> Outcome {
    let fermat = CubicThreefold::fermat();
    let mut lines: Vec<(CubicThreefold, LineSpan)> = report.lines().map(|t| (fermat.clone(), t.line.clone())).collect();
    lines.extend(fixture_lines().into_iter().map(|(_, x, l, _)| (x, l)));
    for (x, l) in &lines {
        let (dim, _) = fano_tangent_space(x, l).map_err(|e| e.to_string())?;
        check(dim == 2, format!("tangent space at {} has dimension {}", l, dim))?;
    }
    Ok(format!("dimension 2 at all {} lines", lines.len()))
}

fn criterion_8(report: &CensusReport) -> Outcome {
    let opts = no_smooth_check();
    let double = murre_normal_form(&CubicThreefold::parse(DOUBLE).unwrap(), &LineSpan::standard(), &opts)
        .map_err(|e| e.to_string())?;
    check(double.a0 == int(1) && double.a1 == int(0), format!("double fixture gives ({}, {})", double.a0, double.a1))?;
    let fermat = CubicThreefold::fermat();
    let mut triples: Vec<(CubicThreefold, LineSpan)> = report.lines().map(|t| (fermat.clone(), t.line.clone())).collect();
    triples.push((CubicThreefold::parse(TRIPLE).unwrap(), LineSpan::standard()));
    for (x, l) in &triples {
        let m = murre_normal_form(x, l, &opts).map_err(|e| e.to_string())?;
        check(m.a0.is_zero() && m.a1.is_zero(), format!("triple line {} gives ({}, {})", l, m.a0, m.a1))?;
    }
    Ok(format!("(1, 0) on the double fixture, (0, 0) on {} triple lines", triples.len()))
}

#[derive(Debug, PartialEq, Eq)]
enum Verdict {
    First,
    Second { triple: bool },
    Degenerate,
}

/// Direct check on the planes through the line: write `F(t0·v0 + t1·v1 + t2·w)`
/// for `w` in a complement, ask for the `t2` part to vanish (tangent along the
/// line), then whether the whole restriction is a multiple of `t2³`.
fn pencil_oracle(x: &CubicThreefold, l: &LineSpan) -> Verdict {
    let t = PolyRing::new(&["t0", "t1", "t2"], MonomialOrder::GrevLex).unwrap();
    let restrict = |w: &[FieldElement]| -> MPoly {
        let images: Vec<MPoly> = (0..5)
            .map(|c| {
                let terms = vec![
                    (Monomial::var(0), l.v0()[c].clone()),
                    (Monomial::var(1), l.v1()[c].clone()),
                    (Monomial::var(2), w[c].clone()),
                ];
                MPoly::from_terms(&t, terms)
            })
            .collect();
        x.poly().substitute(&images).unwrap()
    };
    // complete the line to a basis with unit vectors
    let mut rows = vec![l.v0().to_vec(), l.v1().to_vec()];
    let mut complement = Vec::new();
    for k in 0..5 {
        let e: Vec<FieldElement> = (0..5).map(|c| int((c == k) as i64)).collect();
        rows.push(e.clone());
        if Matrix::from_rows(rows.clone()).unwrap().rank() == rows.len() {
            complement.push(e);
        } else {
            rows.pop();
        }
    }
    assert_eq!(complement.len(), 3);
    let linear = [[2u16, 0, 1], [1, 1, 1], [0, 2, 1]];
    let mut m = Matrix::zeros(3, 3);
    for (c, w) in complement.iter().enumerate() {
        let g = restrict(w);
        for (r, e) in linear.iter().enumerate() {
            m[(r, c)] = g.coeff(&Monomial::from_exponents(e).unwrap());
        }
    }
    let kernel = m.kernel();
    match kernel.len() {
        0 => Verdict::First,
        1 => {
            let w: Vec<FieldElement> = (0..5)
                .map(|c| (0..3).fold(int(0), |acc, k| &acc + &(&kernel[0][k] * &complement[k][c])))
                .collect();
            let g = restrict(&w);
            Verdict::Second { triple: g.terms().iter().all(|(mono, _)| mono.exponent(2) == 3) }
        }
        _ => Verdict::Degenerate,
    }
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let kinds = [LineKind::Any, LineKind::SecondType, LineKind::Triple];
    let mut tally = [0usize; 4];
    for n in 0..240 {
        let kind = kinds[n % 3];
        let moved = rng.gen_bool(0.5);
        let (x, l) = murre_pair(&mut rng, kind, 3, moved);
        let oracle = pencil_oracle(&x, &l);
        let ours = match classify(&x, &l, &no_smooth_check()) {
            Ok(LineType::FirstType) => Verdict::First,
            Ok(LineType::SecondType(d)) => Verdict::Second { triple: d.is_triple },
            Err(Error::SingularEvidence(_)) => Verdict::Degenerate,
            Err(e) => return Err(format!("classify failed on {}: {}", x, e)),
        };
        check(ours == oracle, format!("{} on {}: classify {:?}, oracle {:?}", l, x, ours, oracle))?;
        tally[match ours {
            Verdict::First => 0,
            Verdict::Second { triple: false } => 1,
            Verdict::Second { triple: true } => 2,
            Verdict::Degenerate => 3,
        }] += 1;
    }
    Ok(format!(
        "240 pairs agree ({} first type, {} double, {} triple, {} degenerate)",
        tally[0], tally[1], tally[2], tally[3]
    ))
}

fn random_element(rng: &mut ChaCha8Rng) -> FieldElement {
    let a = FieldElement::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5));
    let b = FieldElement::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5));
    &a + &(&b * &FieldElement::omega())
}

fn random_cubic(rng: &mut ChaCha8Rng) -> CubicThreefold {
    let ring = PolyRing::projective4(MonomialOrder::GrevLex);
    loop {
        let mut terms = Vec::new();
        for a in 0..=3u16 {
            for b in 0..=3 - a {
                for c in 0..=3 - a - b {
                    for d in 0..=3 - a - b - c {
                        let e = [a, b, c, d, 3 - a - b - c - d];
                        terms.push((Monomial::from_exponents(&e).unwrap(), int(rng.gen_range(-3..=3))));
                    }
                }
            }
        }
        if let Ok(x) = CubicThreefold::new(MPoly::from_terms(&ring, terms)) {
            return x;
        }
    }
}

/// Seeded spot checks of each property family; the full proptest suites live
/// with the core crate.
fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..200 {
        let (a, b, c) = (random_element(&mut rng), random_element(&mut rng), random_element(&mut rng));
        check(&(&a * &b) * &c == &a * &(&b * &c) && &a * &(&b + &c) == &(&a * &b) + &(&a * &c), "field axioms")?;
        check(a.is_zero() || (&a * &a.inv().unwrap()).is_one(), "inverse")?;
        check((&a * &b).norm() == a.norm() * b.norm(), "norm multiplicativity")?;
    }

    let r = PolyRing::new(&["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
    let systems = [
        ["x^2 + y^2 + z^2 - 3", "x*y - z", "x - y"],
        ["x^3 - 1", "y^2 - x*y", "z - x - y"],
        ["x^2 - 2*y + z", "y^2 - x*z", "z^2 - x + w*y"],
    ];
    for sys in systems {
        let gens: Vec<MPoly> = sys.iter().map(|s| MPoly::parse(&r, s).unwrap()).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let gb = groebner(&ideal, &GroebnerConfig::default()).map_err(|e| e.to_string())?;
        check(gb.verify(), format!("S-polynomials of {:?} do not reduce to zero", sys))?;
        let solved = solve_zero_dim(&ideal, &SolveConfig::default()).map_err(|e| e.to_string())?;
        for p in &solved.points {
            check(gens.iter().all(|g| g.evaluate(p).unwrap().is_zero()), format!("back-substitution in {:?}", sys))?;
        }
    }

    for _ in 0..100 {
        let v: Vec<Vec<FieldElement>> = (0..2).map(|_| (0..5).map(|_| random_element(&mut rng)).collect()).collect();
        if let Ok(l) = LineSpan::from_vecs(&v[0], &v[1]) {
            let p = pluecker_from_span(&l);
            check(pluecker_relations(p.coords()).iter().all(|q| q.is_zero()), "Plücker relations")?;
        }
    }

    for _ in 0..10 {
        let x = random_cubic(&mut rng);
        let eqs = chart_equations(&x, st(0, 1)).map_err(|e| e.to_string())?;
        for (n, phi) in eqs.phi.iter().enumerate() {
            for c in 0..3 {
                // p0v is unknown c, p1v is unknown 3 + c
                let d0 = if n >= 1 { eqs.phi2[c][n - 1].clone() } else { MPoly::zero(eqs.ring()) };
                let d1 = if n <= 2 { -&eqs.phi2[c][n] } else { MPoly::zero(eqs.ring()) };
                check((&phi.partial_derivative(c) - &d0).is_zero(), "derivative identity along p0v")?;
                check((&phi.partial_derivative(3 + c) - &d1).is_zero(), "derivative identity along p1v")?;
            }
        }
    }
    Ok("field, norm, S-polynomial, back-substitution, Plücker and derivative checks hold".into())
}

fn run(n: usize, f: impl FnOnce() -> Outcome) -> bool {
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let line = match &result {
        Ok(detail) => format!("criterion {:2}: PASS  {}\n", n, detail),
        Err(why) => format!("criterion {:2}: FAIL  {}\n", n, why),
    };
    // straight to the process's stdout so the verdicts show without --nocapture
    std::io::stdout().lock().write_all(line.as_bytes()).expect("stdout");
    result.is_ok()
}

#[test]
fn acceptance_criteria() {
    let report = catch_unwind(fermat_census).ok();
    let with_census = |f: fn(&CensusReport) -> Outcome| {
        let report = report.clone();
        move || match &report {
            Some(r) => f(r),
            None => Err("Fermat census did not finish".into()),
        }
    };
    let results = [
        run(1, with_census(criterion_1)),
        run(2, with_census(criterion_2)),
        run(3, with_census(criterion_3)),
        run(4, criterion_4),
        run(5, with_census(criterion_5)),
        run(6, criterion_6),
        run(7, with_census(criterion_7)),
        run(8, with_census(criterion_8)),
        run(9, criterion_9),
        run(10, criterion_10),
    ];
    let failed: Vec<usize> = (1..=10).filter(|&n| !results[n - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
