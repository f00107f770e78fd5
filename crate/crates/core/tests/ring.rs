use hdiff::coeff::RatFunc;
use hdiff::ring::rmatrix::verify_dybe;
use hdiff::ring::{Element, Gen, RingCtx};

fn ctx(n: usize) -> RingCtx {
    RingCtx::single(n).unwrap()
}

fn h(i: usize) -> RatFunc {
    RatFunc::h(i)
}

#[test]
fn product_examples() {
    let c = ctx(2);
    let z1 = Element::z(c, 1).unwrap();
    let z2 = Element::z(c, 2).unwrap();
    let d1 = Element::d(c, 1).unwrap();
    let d2 = Element::d(c, 2).unwrap();
    let h12 = RatFunc::hij(1, 2);
    let one = RatFunc::one();

    let want = Element::word(c, &[Gen::z(2), Gen::z(1)]).scale_left(&(&(&h12 + &one) / &h12));
    assert_eq!(&z1 * &z2, want);

    let want = &(&Element::word(c, &[Gen::d(1), Gen::z(1)])
        + &Element::word(c, &[Gen::d(2), Gen::z(2)]).scale_left(&(&one - &h12).inv().unwrap()))
        - &Element::one(c);
    assert_eq!(&z1 * &d1, want);

    let want = z1.scale_left(&(&h(1) - &one));
    assert_eq!(&z1 * &Element::h(c, 1).unwrap(), want);

    let want = Element::word(c, &[Gen::d(2), Gen::d(1)]).scale_left(&(&(&h12 - &one) / &h12));
    assert_eq!(&d1 * &d2, want);
    println!("{}", &z1 * &d1);
}

#[test]
fn dybe_small() {
    for n in 1..=3 {
        let r = verify_dybe(n).unwrap();
        assert!(r.holds(), "n={n}: {:?}", r.failures.first());
    }
}

#[test]
fn associativity_smoke() {
    for (n, copies) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
        let c = RingCtx::new(n, copies).unwrap();
        let gens: Vec<Element> = c.generators().into_iter().map(|g| Element::gen(c, g)).collect();
        for a in &gens {
            for b in &gens {
                for d in &gens {
                    let l = &(a * b) * d;
                    let r = a * &(b * d);
                    assert_eq!(l, r, "{a:?} {b:?} {d:?}");
                }
            }
        }
    }
}

#[test]
fn relations_hold() {
    use hdiff::ring::relations::{defining_relations, rmatrix_relations, single_copy_component_relations, multi_copy_component_relations};
    for (n, copies) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (2, 3)] {
        let c = RingCtx::new(n, copies).unwrap();
        for r in defining_relations(c) {
            assert!(r.holds(c), "{} : {}", r.display(c), r.defect(c));
        }
        for r in rmatrix_relations(c).unwrap() {
            if !r.holds(c) {
                println!("R-form fails {} : {}", r.display(c), r.defect(c));
            }
        }
        if copies == 1 {
            for r in multi_copy_component_relations(c) {
                assert!(r.holds(c), "{}", r.display(c));
            }
            let _ = single_copy_component_relations(c);
        }
    }
}

#[test]
fn core_lemmas() {
    for n in 1..=3 {
        let r = hdiff::ring::lemmas::verify_core_lemmas(n).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
