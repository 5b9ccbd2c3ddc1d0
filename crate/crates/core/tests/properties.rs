use halldisk::freealg::{Generator, NCPolynomial};
use halldisk::hall::{HallAlgebra, HallElement};
use halldisk::repq::{barcode, inverse, DerivedObject, FiniteField, Interval, Matrix, QuiverRep, Summand};
use halldisk::scalar::{Poly, RationalFunctionV};
use halldisk::surface::{cut, glue, FoliationData, Gluing};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn foliation() -> impl Strategy<Value = FoliationData> {
    (2usize..=7).prop_flat_map(|m| prop::collection::vec(-2i32..=3, m - 1)).prop_map(|mut h| {
        let m = h.len() as i32 + 1;
        let s: i32 = h.iter().sum();
        h.push(m - 2 - s);
        FoliationData::new(h).unwrap()
    })
}

fn nonzero_scalar() -> impl Strategy<Value = RationalFunctionV> {
    let small = prop_oneof![-3i64..=-1, 1i64..=3];
    (small.clone(), -2i64..=2, small, -2i64..=2, -3i64..=3).prop_map(|(a, b, c, d, k)| {
        let num = Poly::from_ints(&[a, b]);
        let den = Poly::from_ints(&[c, d]);
        let r = RationalFunctionV::normalize(num, den).unwrap();
        &r * &RationalFunctionV::v_pow(k)
    })
}

fn scalar() -> impl Strategy<Value = RationalFunctionV> {
    prop_oneof![Just(RationalFunctionV::zero()), nonzero_scalar()]
}

fn nc_poly() -> impl Strategy<Value = NCPolynomial> {
    let word = prop::collection::vec((1u32..=3, -1i32..=1), 0..=2);
    prop::collection::vec((word, scalar()), 1..=3).prop_map(|terms| {
        NCPolynomial::from_terms(
            terms.into_iter().map(|(w, c)| (w.into_iter().map(|(i, n)| Generator::z(i, n)).collect(), c)),
        )
    })
}

fn bracket(x: &NCPolynomial, y: &NCPolynomial, f: &RationalFunctionV) -> NCPolynomial {
    NCPolynomial::q_bracket(x, y, f)
}

fn derived_object(m: u32) -> impl Strategy<Value = DerivedObject> {
    let summand = (1..m).prop_flat_map(move |a| (Just(a), a + 1..=m, -1i32..=1));
    prop::collection::vec(summand, 0..=2)
        .prop_map(|s| DerivedObject::new(s.into_iter().map(|(a, b, n)| Summand::new(a, b, n)).collect()))
}

fn random_matrix(rows: usize, cols: usize, f: &FiniteField, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.size()) as u8).collect();
    Matrix::from_rows(rows, cols, data)
}

fn random_rep(m: usize, f: &FiniteField, rng: &mut ChaCha8Rng) -> QuiverRep {
    let dims: Vec<usize> = (1..m).map(|_| rng.gen_range(0..=3)).collect();
    let arrows = dims.windows(2).map(|w| random_matrix(w[1], w[0], f, rng)).collect();
    QuiverRep::new(m, dims, arrows).unwrap()
}

fn random_invertible(n: usize, f: &FiniteField, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let g = random_matrix(n, n, f, rng);
        if inverse(&g, f).is_some() {
            return g;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spans_split_and_close_up(f in foliation(), i in -8i64..8, j in -8i64..8, k in -8i64..8) {
        let m = f.m() as i64;
        let total: i32 = (1..=m).map(|t| 1 - f.h(t)).sum();
        prop_assert_eq!(total, 2);
        let (a, b, c) = (f.wrap(i) as i64, f.wrap(j) as i64, f.wrap(k) as i64);
        // j lies on the forward walk from i to k
        if (b - a).rem_euclid(m) <= (c - a).rem_euclid(m) {
            prop_assert_eq!(f.span(i, j) + f.span(j, k), f.span(i, k));
        }
        if a != b {
            prop_assert_eq!(f.span(i, j) + f.span(j, i), 2);
        }
        prop_assert_eq!(f.rotate(k).h(i), f.h(i + k));
    }

    #[test]
    fn glue_then_cut(e in foliation(), f in foliation(), ai in 1u32..=7, aj in 1u32..=7) {
        let ai = e.wrap(ai as i64);
        let aj = f.wrap(aj as i64);
        let n = e.m();
        let g = glue(&e, ai, &f, aj).unwrap();
        prop_assert_eq!(g.m(), n + f.m() - 2);
        let s: i32 = g.values().iter().sum();
        prop_assert_eq!(s, g.m() as i32 - 2);
        let gl = Gluing::new(&e, ai, &f, aj).unwrap();
        let (e2, f2) = cut(&g, n, gl.f_h(n as i64 - 1)).unwrap();
        prop_assert_eq!(e2, e.rotate(ai as i64 - n as i64));
        prop_assert_eq!(f2, f.rotate(aj as i64 - 1));
    }

    #[test]
    fn omni_jacobi(x in nc_poly(), y in nc_poly(), z in nc_poly(),
                   a in nonzero_scalar(), b in nonzero_scalar(), c in nonzero_scalar()) {
        let ab = &a * &b;
        let ac = &a * &c;
        let abc = &ab * &c;
        let t1 = bracket(&x, &bracket(&y, &z, &ac), &ab);
        let t2 = bracket(&z, &bracket(&x, &y, &abc), &a.inv().unwrap()).scale(&a);
        let t3 = bracket(&y, &bracket(&z, &x, &c), &b.inv().unwrap()).scale(&ab);
        prop_assert!(t1.add(&t2).add(&t3).is_zero());
    }

    #[test]
    fn q_antisymmetry(x in nc_poly(), y in nc_poly(), q in nonzero_scalar()) {
        let lhs = bracket(&x, &y, &q);
        let rhs = bracket(&y, &x, &q.inv().unwrap()).scale(&q);
        prop_assert!(lhs.add(&rhs).is_zero());
    }

    #[test]
    fn suspension_is_an_action(x in nc_poly(), y in nc_poly(), a in -3i32..=3, b in -3i32..=3) {
        prop_assert_eq!(x.suspend(a).suspend(b), x.suspend(a + b));
        prop_assert_eq!(x.suspend(0), x.clone());
        prop_assert_eq!(x.mul(&y).suspend(a), x.suspend(a).mul(&y.suspend(a)));
    }

    #[test]
    fn rational_functions_invert(r in nonzero_scalar(), s in nonzero_scalar()) {
        prop_assert!((&r * &r.inv().unwrap()).is_one());
        prop_assert_eq!(r.invert_variable().invert_variable(), r.clone());
        prop_assert_eq!((&r * &s).invert_variable(), &r.invert_variable() * &s.invert_variable());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hall_product_is_associative(x in derived_object(3), y in derived_object(3), z in derived_object(3)) {
        let h = HallAlgebra::new(3, 2).unwrap();
        let b = |o: &DerivedObject| HallElement::basis(o.clone(), 2);
        let left = h.product(&h.product(&b(&x), &b(&y)), &b(&z));
        let right = h.product(&b(&x), &h.product(&b(&y), &b(&z)));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn products_are_k0_homogeneous(x in derived_object(4), y in derived_object(4)) {
        let h = HallAlgebra::new(4, 2).unwrap();
        let want: Vec<i64> = x.k0_class(4).iter().zip(y.k0_class(4)).map(|(a, b)| a + b).collect();
        for l in h.basis_product(&x, &y).terms().keys() {
            prop_assert_eq!(l.k0_class(4), want.clone());
        }
    }

    #[test]
    fn barcodes_survive_reconstruction_and_base_change(seed in any::<u64>(), q in prop::sample::select(vec![2u64, 3])) {
        let f = FiniteField::new(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = random_rep(5, &f, &mut rng);
        let bars = barcode(&rep, &f);
        let total: usize = bars.iter().map(|iv: &Interval| (iv.b - iv.a) as usize).sum();
        prop_assert_eq!(total, rep.dims().iter().sum::<usize>());
        let rebuilt = QuiverRep::from_intervals(5, &bars);
        prop_assert_eq!(rebuilt.dims(), rep.dims());
        prop_assert_eq!(barcode(&rebuilt, &f), bars.clone());
        let g: Vec<Matrix> = rep.dims().iter().map(|&d| random_invertible(d, &f, &mut rng)).collect();
        prop_assert_eq!(barcode(&rep.base_change(&g, &f).unwrap(), &f), bars);
    }
}
