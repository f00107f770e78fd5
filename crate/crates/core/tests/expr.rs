use proptest::prelude::*;

use hdiff::expr::{parse, parse_element, Expr};
use hdiff::ring::{central_c, Element, GenKind, RingCtx};
use hdiff::{sample, Error};

#[test]
fn parses_products_and_powers() {
    let ctx = RingCtx::single(2).unwrap();
    let e = parse("Z[1]*d[1]", ctx).unwrap();
    let z = Expr::Gen { kind: GenKind::Z, site: 1, copy: 1 };
    let d = Expr::Gen { kind: GenKind::D, site: 1, copy: 1 };
    assert_eq!(e, Expr::Mul(Box::new(z), Box::new(d)));
    let x = parse_element("(h[1]+1)^2 * Z[2]", ctx).unwrap();
    let h1 = Element::h(ctx, 1).unwrap();
    let one = Element::one(ctx);
    let s = &h1 + &one;
    assert_eq!(x, s.product(&s).unwrap().product(&Element::z(ctx, 2).unwrap()).unwrap());
    assert_eq!(parse_element("c[2]", ctx).unwrap(), central_c(ctx, 2).unwrap());
}

#[test]
fn reports_positions() {
    let ctx = RingCtx::single(2).unwrap();
    match parse("Z[0]", ctx).unwrap_err() {
        Error::Parse { pos, msg } => {
            assert_eq!(pos, 2);
            assert!(msg.contains("index out of range"), "{msg}");
        }
        e => panic!("{e}"),
    }
    assert!(matches!(parse("Z[1] +", ctx), Err(Error::Parse { pos: 6, .. })));
    assert!(matches!(parse("Z[1] $", ctx), Err(Error::Parse { pos: 5, .. })));
    assert!(parse("Z[1,2]", ctx).is_err());
    assert!(parse("Z[1,2]", RingCtx::new(2, 2).unwrap()).is_ok());
}

#[test]
fn division_only_by_weights() {
    let ctx = RingCtx::single(2).unwrap();
    assert!(parse_element("Z[1]/Z[2]", ctx).is_err());
    assert!(parse_element("Z[1]/(h[1]-h[1])", ctx).is_err());
    let x = parse_element("Z[1]/h[1]", ctx).unwrap();
    let want = parse_element("1/(h[1]-1)*Z[1]", ctx).unwrap();
    assert_eq!(x, want);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn display_round_trips(seed in any::<u64>(), n in 1usize..=3, copies in 1usize..=2) {
        let ctx = RingCtx::new(n, copies).unwrap();
        let mut rng = sample::rng(seed);
        let x = sample::element(ctx, &mut rng, 3, 3);
        let y = sample::element(ctx, &mut rng, 2, 2);
        let xy = x.product(&y).unwrap();
        for e in [x, xy] {
            let text = e.to_string();
            prop_assert_eq!(parse_element(&text, ctx).unwrap(), e, "{}", text);
        }
    }
}
