use num_rational::BigRational;

use hdiff::coeff::{chi, RatFunc, ShiftVector, Var};
use hdiff::reps::{
    expected_central_value, hw_apply, hw_central_value, module_relation_suite, vgamma_apply,
    vgamma_apply_d, vgamma_apply_weyl, HWVector, VGammaVector,
};
use hdiff::laurent::WeylElement;
use hdiff::ring::{central_c, gamma, Element, RingCtx};
use hdiff::{sample, Error};

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn lambda(i: usize) -> RatFunc {
    RatFunc::var(Var::lambda(i))
}

#[test]
fn hw_basic_actions() {
    let ctx = RingCtx::single(2).unwrap();
    let vac = HWVector::vacuum(2);
    assert!(hw_apply(&Element::d(ctx, 1).unwrap(), &vac).unwrap().is_zero());
    let v = HWVector::basis(2, &[2, 1]);
    let w = hw_apply(&Element::h(ctx, 1).unwrap(), &v).unwrap();
    assert_eq!(w.coefficient(&[2, 1]), &lambda(1) + &RatFunc::int(2));
}

#[test]
fn hw_gamma_on_vacuum() {
    for n in 1..=3 {
        let ctx = RingCtx::single(n).unwrap();
        for j in 1..=n {
            let g = gamma(ctx, j).unwrap();
            let w = hw_apply(&g, &HWVector::vacuum(n)).unwrap();
            let c = chi(j, n);
            let ratio = &c.shift(&ShiftVector::unit(j, n, 1)) / &c;
            let want = ratio
                .substitute(|v: Var| (v.kind() == hdiff::coeff::VarKind::HTilde).then(|| lambda(v.index())))
                .unwrap();
            assert_eq!(w.coefficient(&vec![0; n]), want, "n={n} j={j}");
            assert_eq!(w.terms().count(), 1);
        }
    }
}

#[test]
fn hw_central_values() {
    assert_eq!(hw_central_value(1, 1).unwrap(), &RatFunc::one() - &lambda(1));
    let l1 = &lambda(1) - &RatFunc::one();
    let l2 = &lambda(2) - &RatFunc::one();
    assert_eq!(hw_central_value(2, 2).unwrap(), -(&l1 * &l2));
    for n in 1..=3 {
        for k in 1..=n {
            assert_eq!(
                hw_central_value(k, n).unwrap(),
                expected_central_value(k, n).unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn vgamma_basic_actions() {
    let gamma = vec![q(1, 3), q(1, 5)];
    let a = vec![q(2, 1), q(-1, 2)];
    let v = VGammaVector::basis(gamma.clone(), a.clone(), &[0, 0]).unwrap();
    let x1 = WeylElement::x(2, 1).unwrap();
    let w = vgamma_apply_weyl(&x1, &v).unwrap();
    assert_eq!(w, VGammaVector::basis(gamma.clone(), a.clone(), &[1, 0]).unwrap());
    let d1 = vgamma_apply_weyl(&WeylElement::d(2, 1).unwrap(), &v).unwrap();
    assert_eq!(d1, vgamma_apply_d(1, &v).unwrap());
    assert_eq!(d1.coefficient(&[-1, 0]), q(1, 3));
    let ctx = RingCtx::single(2).unwrap();
    for k in 1..=2 {
        let c = vgamma_apply(&central_c(ctx, k).unwrap(), &v).unwrap();
        assert_eq!(c.coefficient(&[0, 0]), a[k - 1]);
    }
}

#[test]
fn vgamma_rejects_integer_differences() {
    let err = VGammaVector::zero(vec![q(0, 1), q(1, 1)], vec![q(0, 1), q(0, 1)]).unwrap_err();
    assert!(matches!(err, Error::NonGeneric(_)));
    assert!(VGammaVector::zero(vec![q(1, 2), q(5, 2)], vec![q(0, 1), q(0, 1)]).is_err());
}

#[test]
fn relations_annihilate_module_vectors() {
    for n in 2..=3 {
        let mut rng = sample::rng(3);
        let r = module_relation_suite(n, 2, &mut rng).unwrap();
        assert!(r.all_passed(), "n={n}\n{r}");
    }
}
