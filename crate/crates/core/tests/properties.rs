use proptest::prelude::*;

use engel_core::algebra::rank::{admissible_point, DEFAULT_RANGE};
use engel_core::algebra::{int, matrix_rank, Assignment, Frac, Poly, PolyMatrix, RankMode, Rational, Var};
use engel_core::engel::{elc, PlanePair};
use engel_core::lie::{class_type, family, invert4, ClassParams, LieAlgebra4, Vector4};
use engel_core::superalg::{schouten_bracket, wedge, GradedComponent, GradedElement};

fn small_poly() -> impl Strategy<Value = Poly> {
    let term = (-5i64..=5, 0u32..=2, 0u32..=2, 0u32..=1);
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        ts.into_iter().fold(Poly::zero(), |acc, (c, ea, eb, ec)| {
            let t = &(&Poly::int(c) * &Poly::var("a").pow(ea)) * &(&Poly::var("b").pow(eb) * &Poly::var("c").pow(ec));
            &acc + &t
        })
    })
}

fn point(a: i64, b: i64, c: i64) -> Assignment {
    [("a", a), ("b", b), ("c", c)].into_iter().map(|(k, v)| (Var::new(k), int(v))).collect()
}

fn small_matrix() -> impl Strategy<Value = PolyMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(small_poly(), c), r).prop_map(PolyMatrix::from_rows)
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn vec4() -> impl Strategy<Value = [Rational; 4]> {
    [rational(), rational(), rational(), rational()]
}

fn specialized(id: usize, seed: u64) -> LieAlgebra4 {
    let f = family(id).unwrap();
    let pt = admissible_point(&f.params(), f.nonzero(), seed, 0, 30).unwrap();
    f.specialize(&pt).unwrap()
}

fn multivector(a: usize, xs: &[i64]) -> GradedElement {
    let comp = GradedComponent::MultiVector(a);
    GradedElement::new(comp, xs[..comp.dim()].iter().map(|&x| Frac::int(x)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Poly::one(), p.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(p in small_poly(), q in small_poly(), a in -9i64..9, b in -9i64..9, c in -9i64..9) {
        let pt = point(a, b, c);
        let (x, y) = (p.eval(&pt).unwrap(), q.eval(&pt).unwrap());
        prop_assert_eq!((&p * &q).eval(&pt).unwrap(), &x * &y);
        prop_assert_eq!((&p + &q).eval(&pt).unwrap(), x + y);
    }

    #[test]
    fn rank_is_invariant_and_ordered(m in small_matrix(), a in 1i64..9, b in -9i64..-1, c in 1i64..9) {
        let mode = RankMode::Randomized { seed: 5, trials: 3, range: DEFAULT_RANGE };
        let symbolic = matrix_rank(&m, &RankMode::SymbolicGeneric).unwrap().rank;
        let randomized = matrix_rank(&m, &mode).unwrap().rank;
        let special = matrix_rank(&m, &RankMode::Specialized(point(a, b, c))).unwrap().rank;
        prop_assert!(symbolic >= randomized && randomized >= special);
        prop_assert_eq!(matrix_rank(&m.transpose(), &RankMode::SymbolicGeneric).unwrap().rank, symbolic);
        let rows: Vec<usize> = (0..m.rows()).rev().collect();
        let cols: Vec<usize> = (0..m.cols()).rev().collect();
        prop_assert_eq!(matrix_rank(&m.permuted(&rows, &cols), &RankMode::SymbolicGeneric).unwrap().rank, symbolic);
        let info = matrix_rank(&m, &RankMode::SymbolicGeneric).unwrap();
        prop_assert_eq!(info.rank + info.kernel_dim, m.cols());
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(id in 1usize..=6, x in vec4(), y in vec4(), z in vec4(), s in rational()) {
        let l = specialized(id, 3);
        let (x, y, z) = (Vector4::from_rationals(&x), Vector4::from_rationals(&y), Vector4::from_rationals(&z));
        let s = Frac::constant(s);
        prop_assert!(l.bracket(&x, &x).is_zero());
        prop_assert_eq!(l.bracket(&x, &y), l.bracket(&y, &x).scale(&Frac::int(-1)));
        prop_assert_eq!(l.bracket(&x.scale(&s).add(&y), &z), l.bracket(&x, &z).scale(&s).add(&l.bracket(&y, &z)));
        let jac = l.bracket(&x, &l.bracket(&y, &z)).add(&l.bracket(&y, &l.bracket(&z, &x))).add(&l.bracket(&z, &l.bracket(&x, &y)));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn change_basis_round_trip(id in 1usize..=6, g in prop::array::uniform4(prop::array::uniform4(-3i64..=3))) {
        let g: [[Rational; 4]; 4] = g.map(|row| row.map(int));
        prop_assume!(invert4(&g).is_ok());
        let l = specialized(id, 8);
        let moved = l.change_basis(&g).unwrap();
        prop_assert!(moved.satisfies_jacobi());
        let back = moved.change_basis(&invert4(&g).unwrap()).unwrap();
        prop_assert_eq!(back.structure(), l.structure());
    }

    #[test]
    fn schouten_leibniz(id in 1usize..=6, a in 1usize..=2, b in 1usize..=2, c in 1usize..=2, xs in prop::collection::vec(-3i64..=3, 18)) {
        let l = specialized(id, 11);
        let p = multivector(a, &xs[0..6]);
        let q = multivector(b, &xs[6..12]);
        let r = multivector(c, &xs[12..18]);
        let lhs = schouten_bracket(&p, &wedge(&q, &r).unwrap(), &l).unwrap();
        let first = wedge(&schouten_bracket(&p, &q, &l).unwrap(), &r).unwrap();
        let second = wedge(&q, &schouten_bracket(&p, &r, &l).unwrap()).unwrap();
        let sign = if ((a - 1) * b) % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(lhs, first.add(&second.scale(&Frac::int(sign))).unwrap());
    }

    #[test]
    fn elc_ignores_shear_and_vanishes_on_lines(id in 1usize..=12, p in vec4(), q in vec4(), lambda in rational()) {
        let params = ClassParams::new(Some(int(2)), Some(Rational::new(1.into(), 2.into())));
        let l = class_type(id, &params).unwrap();
        let base = PlanePair::rational(&p, &q);
        let sheared: [Rational; 4] = std::array::from_fn(|i| &q[i] + &lambda * &p[i]);
        prop_assert_eq!(elc(&l, &PlanePair::rational(&p, &sheared)), elc(&l, &base));
        let scaled: [Rational; 4] = std::array::from_fn(|i| &lambda * &p[i]);
        prop_assert!(elc(&l, &PlanePair::rational(&p, &scaled)).is_zero());
    }
}
