use proptest::prelude::*;
use rootcert::rational::rat;
use rootcert::{
    all_real_rooted_sturm, certify_all_real, count_real_roots, discriminant, gcd,
    isolate_real_roots, ExtendedRational, Polynomial, Rational, Verdict,
};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn any_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 1..=max_degree + 1).prop_map(Polynomial::new)
}

/// Monic polynomials of degree 2 to 5: either arbitrary or a product of
/// linear factors, which makes real-rooted and repeated-root cases common.
fn monic_poly() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        prop::collection::vec(small_rational(), 2..=5).prop_map(|mut c| {
            c.push(rat(1, 1));
            Polynomial::new(c)
        }),
        prop::collection::vec((-4i64..=4, 1i64..=2).prop_map(|(n, d)| rat(n, d)), 2..=5)
            .prop_map(|r| Polynomial::from_roots(&r)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn euclidean_division_identity(a in any_poly(6), b in any_poly(4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.euclid_div(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        if let Some(dr) = r.degree() {
            prop_assert!(r.is_zero() || dr < b.degree().unwrap());
        }
    }

    #[test]
    fn squarefree_decomposition_recomposes(p in monic_poly()) {
        let mut prod = Polynomial::one();
        for (f, m) in p.squarefree_decomposition() {
            prop_assert!(f.is_squarefree());
            for _ in 0..m {
                prod = &prod * &f;
            }
        }
        prop_assert_eq!(prod.monic(), p.monic());
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root(p in monic_poly()) {
        let disc = discriminant(&p).unwrap();
        let g = gcd(&p, &p.derivative());
        prop_assert_eq!(disc == rat(0, 1), !g.is_constant());
    }

    #[test]
    fn sturm_count_matches_isolation(p in monic_poly()) {
        let n = count_real_roots(&p, &ExtendedRational::NegInf, &ExtendedRational::PosInf).unwrap();
        prop_assert_eq!(n, isolate_real_roots(&p).len());
    }

    #[test]
    fn sturm_count_is_additive(p in monic_poly(), cut in small_rational()) {
        let c = ExtendedRational::Finite(cut);
        let left = count_real_roots(&p, &ExtendedRational::NegInf, &c).unwrap();
        let right = count_real_roots(&p, &c, &ExtendedRational::PosInf).unwrap();
        let all = count_real_roots(&p, &ExtendedRational::NegInf, &ExtendedRational::PosInf).unwrap();
        prop_assert_eq!(left + right, all);
    }

    #[test]
    fn certificate_agrees_with_sturm_and_discriminant(p in monic_poly()) {
        let cert = certify_all_real(&p);
        let repeated = discriminant(&p).unwrap() == rat(0, 1);
        match cert.verdict {
            Verdict::Degenerate(_) => prop_assert!(repeated),
            Verdict::AllRealDistinct => prop_assert!(!repeated && all_real_rooted_sturm(&p)),
            Verdict::NotAllReal => prop_assert!(!repeated && !all_real_rooted_sturm(&p)),
            Verdict::HypothesisUnresolved { .. } => prop_assert!(false, "unresolved for {}", p),
        }
    }

    #[test]
    fn real_rooted_products_certify(roots in prop::collection::btree_set(-6i64..=6, 2..=6)) {
        let roots: Vec<Rational> = roots.into_iter().map(|r| rat(r, 1)).collect();
        let p = Polynomial::from_roots(&roots);
        prop_assert_eq!(certify_all_real(&p).verdict, Verdict::AllRealDistinct);
    }

    #[test]
    fn text_format_round_trips(p in any_poly(6)) {
        prop_assert_eq!(Polynomial::parse_text(&p.to_text()).unwrap(), p);
    }
}
