use proptest::prelude::*;

use hdiff::coeff::{Poly, Var};
use hdiff::localization::{center_decompose, central_polynomial_element, embed, CenterDecomposition};
use hdiff::ring::RingCtx;
use hdiff::sample;
use hdiff::symmetries::{GeneratorMap, MapKind};

fn central_poly(coeffs: &[(i64, u32, u32)]) -> Poly {
    let mut p = Poly::zero();
    for &(a, e1, e2) in coeffs {
        let mut t = Poly::int(a);
        for _ in 0..e1 {
            t = &t * &Poly::var(Var::c(1));
        }
        for _ in 0..e2 {
            t = &t * &Poly::var(Var::c(2));
        }
        p = &p + &t;
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn associativity(seed in any::<u64>(), n in 1usize..=3, copies in 1usize..=2) {
        let ctx = RingCtx::new(n, copies).unwrap();
        let mut rng = sample::rng(seed);
        let x = sample::element(ctx, &mut rng, 2, 2);
        let y = sample::element(ctx, &mut rng, 2, 2);
        let z = sample::element(ctx, &mut rng, 2, 2);
        let lhs = x.product(&y).unwrap().product(&z).unwrap();
        let rhs = x.product(&y.product(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn central_polynomials_decompose(
        terms in prop::collection::vec((-4i64..=4, 0u32..=3, 0u32..=1), 1..=3)
            .prop_filter("degree at most 3", |t| t.iter().all(|&(_, a, b)| a + 2 * b <= 3))
    ) {
        let ctx = RingCtx::single(2).unwrap();
        let p = central_poly(&terms);
        let x = central_polynomial_element(ctx, &p).unwrap();
        prop_assert_eq!(center_decompose(&x).unwrap(), CenterDecomposition::Central(p));
    }

    #[test]
    fn embed_is_multiplicative(seed in any::<u64>(), n in 1usize..=2) {
        let ctx = RingCtx::single(n).unwrap();
        let mut rng = sample::rng(seed);
        let x = sample::element(ctx, &mut rng, 2, 2);
        let y = sample::element(ctx, &mut rng, 2, 2);
        let lhs = embed(&x.product(&y).unwrap()).unwrap();
        let rhs = embed(&x).unwrap().product(&embed(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn epsilon_is_an_involutive_anti_automorphism(seed in any::<u64>(), n in 1usize..=3) {
        let ctx = RingCtx::single(n).unwrap();
        let e = GeneratorMap::build(MapKind::Epsilon, ctx).unwrap();
        let mut rng = sample::rng(seed);
        let x = sample::element(ctx, &mut rng, 2, 2);
        let y = sample::element(ctx, &mut rng, 2, 2);
        prop_assert_eq!(e.apply(&e.apply(&x).unwrap()).unwrap(), x.clone());
        let lhs = e.apply(&x.product(&y).unwrap()).unwrap();
        let rhs = e.apply(&y).unwrap().product(&e.apply(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
