use hdiff::coeff::RatFunc;
use hdiff::ring::{gamma, Element, RingCtx};
use hdiff::symmetries::{verify_group_relations, verify_morphism, GeneratorMap, GroupKind, MapKind};

#[test]
fn zhelobenko_preserves_relations() {
    for n in 2..=3 {
        let ctx = RingCtx::single(n).unwrap();
        for i in 1..n {
            let q = GeneratorMap::build(MapKind::Zhelobenko(i), ctx).unwrap();
            let r = verify_morphism(&q).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }
}

#[test]
fn zhelobenko_group() {
    let ctx = RingCtx::single(3).unwrap();
    let r = verify_group_relations(GroupKind::Zhelobenko, ctx).unwrap();
    assert!(r.all_passed(), "{r}");
    let ctx = RingCtx::single(2).unwrap();
    let q = GeneratorMap::build(MapKind::Zhelobenko(1), ctx).unwrap();
    let z1 = Element::z(ctx, 1).unwrap();
    let h = RatFunc::hij(1, 2);
    let sq = q.apply(&q.apply(&z1).unwrap()).unwrap();
    assert_eq!(sq, z1.scale_right(&-(&h / &(&h + &RatFunc::one()))));
}

#[test]
fn zhelobenko_on_gamma() {
    let ctx = RingCtx::single(3).unwrap();
    for i in 1..3 {
        let q = GeneratorMap::build(MapKind::Zhelobenko(i), ctx).unwrap();
        for j in 1..=3 {
            let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            assert_eq!(q.apply(&gamma(ctx, j).unwrap()).unwrap(), gamma(ctx, sj).unwrap());
        }
    }
}

#[test]
fn epsilon_anti() {
    for n in 2..=3 {
        let ctx = RingCtx::single(n).unwrap();
        let e = GeneratorMap::build(MapKind::Epsilon, ctx).unwrap();
        let r = verify_morphism(&e).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(e.compose(&e).unwrap().is_identity());
    }
}

#[test]
fn sn_action() {
    for (n, copies) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
        let ctx = RingCtx::new(n, copies).unwrap();
        for i in 1..n {
            let s = GeneratorMap::build(MapKind::Sn(i), ctx).unwrap();
            let r = verify_morphism(&s).unwrap();
            assert!(r.all_passed(), "{r}");
        }
        let r = verify_group_relations(GroupKind::Sn, ctx).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
