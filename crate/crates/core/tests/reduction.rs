use hdiff::coeff::RatFunc;
use hdiff::reduction::{
    discover_reflection_convention, sn_image_coefficients, tau_l, verify_reflection,
    verify_sn_on_image, verify_weight_grading, Convention,
};
use hdiff::ring::{Element, RingCtx};

#[test]
fn tau_entries() {
    let l = tau_l(1, 1).unwrap();
    let ctx = RingCtx::single(1).unwrap();
    let d = Element::d(ctx, 1).unwrap();
    let z = Element::z(ctx, 1).unwrap();
    assert_eq!(l.entry(1, 1), &(&d.product(&z).unwrap() - &Element::one(ctx)));
    let l = tau_l(2, 1).unwrap();
    let ctx = RingCtx::single(2).unwrap();
    // Z^2 ∂_1 = h(h+2)/(h+1)² ∂_1 Z^2 with h = h̃_12
    let h = RatFunc::hij(1, 2);
    let hp = &h + &RatFunc::one();
    let coef = &(&h * &(&h + &RatFunc::int(2))) / &(&hp * &hp);
    let want = Element::d(ctx, 1).unwrap().product(&Element::z(ctx, 2).unwrap()).unwrap();
    assert_eq!(l.entry(1, 2), &want.scale_left(&coef));
}

#[test]
fn weight_grading() {
    for (n, copies) in [(2, 1), (3, 1), (2, 2)] {
        let r = verify_weight_grading(&tau_l(n, copies).unwrap()).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}

#[test]
fn reflection_rank_one_is_trivial() {
    for copies in 1..=2 {
        for conv in Convention::candidates() {
            assert!(verify_reflection(1, copies, conv).unwrap().all_passed());
        }
    }
}

#[test]
fn reflection_discovery_pins_convention() {
    for copies in 1..=2 {
        let d = discover_reflection_convention(2, copies).unwrap();
        assert!(d.passing.contains(&Convention::PINNED), "N={copies}\n{}", d.discrepancies);
        assert!(d.passing.len() < Convention::candidates().len());
    }
}

#[test]
fn reflection_holds_at_rank_three() {
    assert!(verify_reflection(3, 1, Convention::PINNED).unwrap().all_passed());
}

#[test]
fn convention_ids_round_trip() {
    for c in Convention::candidates() {
        assert_eq!(c.to_string().parse::<Convention>().unwrap(), c);
    }
    assert!("L-R-x".parse::<Convention>().is_err());
}

#[test]
fn sn_image_examples() {
    let h = RatFunc::hij(1, 2);
    let one = RatFunc::one();
    // basis order: L_1^1, L_1^2, L_2^1, L_2^2, 1
    let c = sn_image_coefficients(2, 1, 1, 1, 1).unwrap();
    assert_eq!(c, vec![RatFunc::zero(), RatFunc::zero(), RatFunc::zero(), one.clone(), RatFunc::zero()]);
    let c = sn_image_coefficients(2, 1, 1, 1, 2).unwrap();
    let hm = &h - &one;
    let want = -(&one / &(&hm * &hm));
    assert_eq!(c, vec![RatFunc::zero(), RatFunc::zero(), want, RatFunc::zero(), RatFunc::zero()]);
    assert_eq!(c, sn_image_coefficients(2, 2, 1, 1, 2).unwrap());
}

#[test]
fn sn_preserves_image() {
    for (n, copies) in [(2, 1), (2, 2), (3, 1)] {
        let r = verify_sn_on_image(n, copies).unwrap();
        assert!(r.all_passed(), "n={n} N={copies}\n{r}");
    }
}
