use hdiff::coeff::{Poly, RatFunc, Var};
use hdiff::localization::{
    center_decompose, central_polynomial_element, check_original_generator_formulas, embed, ore_witness,
    verify_commuting_families, CenterDecomposition,
};
use hdiff::laurent::LocElement;
use hdiff::ring::{central_c, Element, RingCtx};
use hdiff::sample;

#[test]
fn embed_small_images() {
    let ctx = RingCtx::single(1).unwrap();
    let d = embed(&Element::d(ctx, 1).unwrap()).unwrap();
    let c1 = RatFunc::var(Var::c(1));
    let want = LocElement::x(1, 1)
        .unwrap()
        .inverse()
        .unwrap()
        .scale_left(&(&RatFunc::h(1) + &c1));
    assert_eq!(d, want);
}

#[test]
fn generator_formulas() {
    for n in 1..=3 {
        let r = check_original_generator_formulas(n).unwrap();
        assert!(r.all_passed(), "n={n}\n{r}");
    }
}

#[test]
fn commuting_families() {
    for n in 2..=3 {
        let r = verify_commuting_families(n).unwrap();
        assert!(r.all_passed(), "n={n}\n{r}");
    }
}

#[test]
fn centrals_decompose() {
    for n in 1..=3 {
        let ctx = RingCtx::single(n).unwrap();
        for k in 1..=n {
            let c = central_c(ctx, k).unwrap();
            let want = CenterDecomposition::Central(Poly::var(Var::c(k)));
            assert_eq!(center_decompose(&c).unwrap(), want);
        }
        let z = Element::z(ctx, 1).unwrap();
        assert!(matches!(
            center_decompose(&z).unwrap(),
            CenterDecomposition::NotCentral(_)
        ));
    }
}

#[test]
fn ore_coefficient_example() {
    let ctx = RingCtx::single(2).unwrap();
    let h1 = Element::h(ctx, 1).unwrap();
    let w = ore_witness(1, &h1, 8).unwrap();
    assert_eq!(w.nu, 1);
    assert_eq!(w.m_tilde, Element::scalar(ctx, &RatFunc::h(1) - &RatFunc::one()));
}

#[test]
fn ore_exponent_tracks_d_power() {
    for n in 2..=3 {
        let ctx = RingCtx::single(n).unwrap();
        let mut rng = sample::rng(7);
        for _ in 0..50 {
            let m = sample::monomial(ctx, &mut rng, 4);
            let k = 1 + (m.degree() % n);
            let x = Element::term(ctx, RatFunc::one(), m.clone());
            let w = ore_witness(k, &x, 16).unwrap();
            let dk = m.d_exponents()[k - 1] as u32;
            assert!(w.nu <= dk + 1, "{x} k={k} nu={}", w.nu);
            let zk = Element::z(ctx, k).unwrap();
            assert_eq!(zk.pow(w.nu).product(&x).unwrap(), w.m_tilde.product(&zk).unwrap());
        }
    }
}

#[test]
fn ore_small_examples() {
    let ctx = RingCtx::single(2).unwrap();
    let w = ore_witness(1, &Element::z(ctx, 2).unwrap(), 4).unwrap();
    let h = RatFunc::hij(1, 2);
    let want = Element::z(ctx, 2).unwrap().scale_left(&(&(&h + &RatFunc::one()) / &h));
    assert_eq!((w.nu, w.m_tilde), (1, want));
    let d2 = Element::d(ctx, 2).unwrap();
    let w = ore_witness(1, &d2, 4).unwrap();
    assert_eq!((w.nu, w.m_tilde), (1, d2));
    let d1 = Element::d(ctx, 1).unwrap();
    assert!(ore_witness(1, &d1, 1).is_err());
}

#[test]
fn embed_is_multiplicative() {
    for n in 2..=3 {
        let ctx = RingCtx::single(n).unwrap();
        let mut rng = sample::rng(11);
        for _ in 0..10 {
            let x = sample::element(ctx, &mut rng, 2, 2);
            let y = sample::element(ctx, &mut rng, 2, 2);
            let lhs = embed(&x.product(&y).unwrap()).unwrap();
            let rhs = embed(&x).unwrap().product(&embed(&y).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "x={x} y={y}");
            assert!(!embed(&x).unwrap().is_zero());
        }
    }
}

#[test]
fn central_polynomials_round_trip() {
    let ctx = RingCtx::single(2).unwrap();
    let c1 = Poly::var(Var::c(1));
    let c2 = Poly::var(Var::c(2));
    let p = &(&c1 * &c1) + &(&Poly::int(3) * &c2);
    let x = central_polynomial_element(ctx, &p).unwrap();
    assert_eq!(center_decompose(&x).unwrap(), CenterDecomposition::Central(p));
    let h1 = Element::h(ctx, 1).unwrap();
    match center_decompose(&h1).unwrap() {
        CenterDecomposition::NotCentral(w) => assert_eq!(w.generator, "Z[1]"),
        other => panic!("{other:?}"),
    }
    match center_decompose(&Element::z(ctx, 1).unwrap()).unwrap() {
        CenterDecomposition::NotCentral(w) => assert_eq!(w.generator, "h[1]"),
        other => panic!("{other:?}"),
    }
}
