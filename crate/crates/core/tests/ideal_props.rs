mod common;

use common::form;
use cubic_lines_core::ideal::{small_height_points, solve_zero_dim, SolveConfig};
use cubic_lines_core::{groebner, FieldElement, GroebnerConfig, Ideal, MPoly, MonomialOrder, PolyRing, RingRef};
use proptest::prelude::*;

fn ring(order: MonomialOrder) -> RingRef {
    PolyRing::new(&["x", "y", "z"], order).unwrap()
}

fn c(n: i64) -> MPoly {
    MPoly::constant(&ring(MonomialOrder::Lex), FieldElement::from_int(n))
}

/// Lagrange interpolation through `(xs[i], ys[i])` as a polynomial in `x`.
fn interpolate(r: &RingRef, xs: &[i64], ys: &[i64]) -> MPoly {
    let x = MPoly::var(r, 0);
    let mut acc = MPoly::zero(r);
    for i in 0..xs.len() {
        let mut term = MPoly::constant(r, FieldElement::from_int(ys[i]));
        for j in (0..xs.len()).filter(|&j| j != i) {
            let factor = &x - &MPoly::constant(r, FieldElement::from_int(xs[j]));
            term = (&term * &factor).scale(&FieldElement::from_ratio(1, xs[i] - xs[j]));
        }
        acc = &acc + &term;
    }
    acc
}

/// A point set with distinct x coordinates, and generators of its vanishing
/// ideal mixed by a unimodular change so the basis has work to do.
fn points_and_ideal() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<MPoly>)> {
    (1usize..=4)
        .prop_flat_map(|n| {
            (
                prop::collection::btree_set(-6i64..=6, n),
                prop::collection::vec(-6i64..=6, n),
                prop::collection::vec(-6i64..=6, n),
            )
        })
        .prop_map(|(xs, ys, zs)| {
            let r = ring(MonomialOrder::Lex);
            let xs: Vec<i64> = xs.into_iter().collect();
            let x = MPoly::var(&r, 0);
            let mut vanish = MPoly::one(&r);
            for &a in &xs {
                vanish = &vanish * &(&x - &c(a));
            }
            let gy = &MPoly::var(&r, 1) - &interpolate(&r, &xs, &ys);
            let gz = &MPoly::var(&r, 2) - &interpolate(&r, &xs, &zs);
            // elementary moves g_i += h·g_j, applied one at a time
            let gy = &gy + &(&x * &gz);
            let gz = &gz + &gy;
            let vanish = &vanish + &(&MPoly::var(&r, 2) * &gy);
            let mixed = vec![vanish, gy, gz];
            let points = (0..xs.len()).map(|i| vec![xs[i], ys[i], zs[i]]).collect();
            (points, mixed)
        })
}

fn as_field(points: &[Vec<i64>]) -> Vec<Vec<FieldElement>> {
    let mut out: Vec<Vec<FieldElement>> =
        points.iter().map(|p| p.iter().map(|&v| FieldElement::from_int(v)).collect()).collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_s_polynomial_reduces_to_zero((_, gens) in points_and_ideal(), grevlex in any::<bool>()) {
        let order = if grevlex { MonomialOrder::GrevLex } else { MonomialOrder::Lex };
        let ideal = Ideal::new(&ring(MonomialOrder::Lex), gens).unwrap().with_order(order);
        let gb = groebner(&ideal, &GroebnerConfig::default()).unwrap();
        prop_assert!(gb.verify());
        for g in ideal.generators() {
            prop_assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn basis_ignores_generator_order((_, gens) in points_and_ideal(), rot in 0usize..3) {
        let r = ring(MonomialOrder::Lex);
        let mut shuffled = gens.clone();
        shuffled.rotate_left(rot);
        shuffled.swap(0, 1);
        let a = groebner(&Ideal::new(&r, gens).unwrap(), &GroebnerConfig::default()).unwrap();
        let b = groebner(&Ideal::new(&r, shuffled).unwrap(), &GroebnerConfig::default()).unwrap();
        prop_assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn solutions_are_exactly_the_points((points, gens) in points_and_ideal()) {
        let ideal = Ideal::new(&ring(MonomialOrder::Lex), gens).unwrap();
        let gb = groebner(&ideal.with_order(MonomialOrder::GrevLex), &GroebnerConfig::default()).unwrap();
        prop_assert_eq!(gb.dimension(), 0);
        prop_assert_eq!(gb.quotient_dimension(&GroebnerConfig::default()).unwrap(), points.len());
        let solved = solve_zero_dim(&ideal, &SolveConfig::default()).unwrap();
        prop_assert!(solved.is_complete());
        prop_assert_eq!(&solved.points, &as_field(&points));
    }

    #[test]
    fn modular_solver_agrees_with_exact_elimination((points, gens) in points_and_ideal()) {
        let ideal = Ideal::new(&ring(MonomialOrder::Lex), gens).unwrap();
        let found = small_height_points(&ideal, &GroebnerConfig::default()).unwrap();
        prop_assert_eq!(found.unlifted, 0);
        prop_assert_eq!(&found.points, &as_field(&points));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn back_substitution_is_exact(
        f in form(ring(MonomialOrder::GrevLex), 2),
        g in form(ring(MonomialOrder::GrevLex), 2),
        h in form(ring(MonomialOrder::GrevLex), 1),
    ) {
        // dehomogenize at z = 1 so the system is affine in x, y
        let r = ring(MonomialOrder::GrevLex);
        let one = MPoly::one(&r);
        let gens: Vec<MPoly> = [f, g, h]
            .iter()
            .map(|p| p.substitute(&[MPoly::var(&r, 0), MPoly::var(&r, 1), one.clone()]).unwrap())
            .chain([MPoly::var(&r, 2)])
            .collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        match solve_zero_dim(&ideal, &SolveConfig::default()) {
            Ok(solved) => {
                for p in &solved.points {
                    for g in &gens {
                        prop_assert!(g.evaluate(p).unwrap().is_zero());
                    }
                }
            }
            Err(cubic_lines_core::Error::NotZeroDimensional { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {:?}", e),
        }
    }
}
