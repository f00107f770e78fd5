//! The extended localized Weyl algebra `k[a] ⊗ T⁻¹W_n` in twisted Laurent
//! form, its named elements, the denominator discipline for `T` and `T_0`,
//! and the Zhelobenko action transported to the Weyl side.

use crate::coeff::{structural_product, Poly, ProductKind, RatFunc, Var, VarKind};
use crate::error::{check_index, Result};
use crate::laurent::{
    eval_written, generating_set_relations, standard_interp, weyl_algebra_relations, Exponent,
    LFactor, Weyl, WeylElement,
};
use crate::report::{Check, Report};

/// Named elements of the Weyl model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylGen {
    X(usize),
    D(usize),
    H(usize),
    A(usize),
    Psi(usize),
    PsiPrime(usize),
    Upsilon(usize),
}

fn hvar(i: usize) -> RatFunc {
    RatFunc::var(Var::weyl_h(i))
}

/// `Υ_i = H_i^n − Σ_k (−1)^k a_k H_i^{n−k}`.
pub fn upsilon(i: usize, n: usize) -> Result<RatFunc> {
    check_index("i", i, 1, n)?;
    let h = hvar(i);
    let mut out = h.pow(n as i32)?;
    for k in 1..=n {
        let t = &RatFunc::var(Var::a(k)) * &h.pow((n - k) as i32)?;
        out = if k % 2 == 1 { &out + &t } else { &out - &t };
    }
    Ok(out)
}

/// `H_i^n (1 − C(−H_i^{−1}))` with `C(t) = Σ_k a_k t^k`, computed as a
/// rational function without expanding termwise.
pub fn upsilon_from_generating_function(i: usize, n: usize) -> Result<RatFunc> {
    check_index("i", i, 1, n)?;
    let h = hvar(i);
    let t = -h.inv()?;
    let mut c = RatFunc::zero();
    for k in 1..=n {
        c = &c + &(&RatFunc::var(Var::a(k)) * &t.pow(k as i32)?);
    }
    Ok(&h.pow(n as i32)? * &(&RatFunc::one() - &c))
}

pub fn wgen(which: WeylGen, n: usize) -> Result<WeylElement> {
    Ok(match which {
        WeylGen::X(i) => WeylElement::x(n, i)?,
        WeylGen::D(i) => WeylElement::d(n, i)?,
        WeylGen::H(i) => WeylElement::weight(n, i)?,
        WeylGen::A(k) => WeylElement::central(n, k)?,
        WeylGen::Psi(i) => WeylElement::scalar(n, structural_product(ProductKind::WeylPsi, i, n)?),
        WeylGen::PsiPrime(i) => {
            WeylElement::scalar(n, structural_product(ProductKind::WeylPsiPrime, i, n)?)
        }
        WeylGen::Upsilon(i) => WeylElement::scalar(n, upsilon(i, n)?),
    })
}

/// Which localization a Weyl element is tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenominatorMode {
    /// Denominators generated by `H_jk + ℓ` and the `X^j`.
    T,
    /// Denominators generated by `H_jk + ℓ` only.
    T0,
}

/// Outcome of the denominator test, with the offending factor on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<String>,
}

/// Range of `ℓ` tried when stripping `H_jk + ℓ` factors.
pub const SHIFT_BOUND: i64 = 64;

/// Removes every factor `H_j − H_k + ℓ` (`j < k`, `|ℓ| ≤ SHIFT_BOUND`) from `p`
/// and returns the remaining cofactor.
fn strip_weight_differences(p: &Poly, n: usize) -> Poly {
    let mut rest = p.clone();
    let mut progress = true;
    while progress && !rest.is_constant() {
        progress = false;
        for j in 1..=n {
            for k in j + 1..=n {
                let base = &Poly::var(Var::weyl_h(j)) - &Poly::var(Var::weyl_h(k));
                if rest.degree_in(Var::weyl_h(j)) == 0 || rest.degree_in(Var::weyl_h(k)) == 0 {
                    continue;
                }
                for l in -SHIFT_BOUND..=SHIFT_BOUND {
                    let f = &base + &Poly::int(l);
                    while let Some(q) = rest.exact_div(&f) {
                        rest = q;
                        progress = true;
                    }
                }
            }
        }
    }
    rest
}

/// Rising factorial `x (x+1) ⋯ (x+m−1)`.
fn rising(x: &Poly, m: u64) -> Poly {
    (0..m as i64).fold(Poly::one(), |acc, s| &acc * &(x + &Poly::int(s)))
}

/// Decides whether `u` lies in `T⁻¹W_n` (mode `T`) or `T_0⁻¹W_n` (mode
/// `T_0`) by trial division.
///
/// A term `c X^b` of `W_n` with `b_i < 0` carries the factor
/// `H_i (H_i+1) ⋯ (H_i+|b_i|−1)` from `D_i^{|b_i|}`. In mode `T_0` that factor
/// is divided out before the denominator test; in mode `T` the `X^j` are
/// invertible, so only denominators matter.
pub fn denominator_whitelist(u: &WeylElement, mode: DenominatorMode) -> Membership {
    let n = u.n();
    for (b, c) in u.terms() {
        let mut coef = c.clone();
        if mode == DenominatorMode::T0 {
            for (i, &e) in b.iter().enumerate() {
                if e < 0 {
                    let r = rising(&Poly::var(Var::weyl_h(i + 1)), e.unsigned_abs());
                    coef = &coef / &RatFunc::from_poly(r);
                }
            }
        }
        if coef.denominator().vars().iter().any(|v| v.kind() != VarKind::WeylH) {
            return Membership {
                member: false,
                witness: Some(format!("non-weight variable in denominator of {c}")),
            };
        }
        let rest = strip_weight_differences(coef.denominator(), n);
        if !rest.is_constant() {
            return Membership {
                member: false,
                witness: Some(format!("denominator factor {rest} at exponent {b:?}")),
            };
        }
    }
    Membership {
        member: true,
        witness: None,
    }
}

/// A map of the Weyl model given by the images of `X^i` and `D_i` and a
/// permutation of the `H` variables (`H_j ↦ H_{perm[j]}`); central `a_k`
/// are fixed.
#[derive(Clone, Debug)]
pub struct WeylMap {
    n: usize,
    label: String,
    x_images: Vec<WeylElement>,
    d_images: Vec<WeylElement>,
    perm: Vec<usize>,
}

impl WeylMap {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn x_image(&self, i: usize) -> &WeylElement {
        &self.x_images[i - 1]
    }

    pub fn d_image(&self, i: usize) -> &WeylElement {
        &self.d_images[i - 1]
    }

    pub fn map_coef(&self, f: &RatFunc) -> RatFunc {
        f.rename(|v: Var| {
            if v.kind() == VarKind::WeylH {
                Var::weyl_h(self.perm[v.index()])
            } else {
                v
            }
        })
    }

    /// `c X^b ↦ σ(c) ∏_i σ(X^i)^{b_i}`; the `X` images must be single terms.
    pub fn apply(&self, u: &WeylElement) -> Result<WeylElement> {
        let mut out = WeylElement::zero(self.n);
        for (b, c) in u.terms() {
            let mut t = WeylElement::scalar(self.n, self.map_coef(c));
            for (i, &e) in b.iter().enumerate() {
                if e != 0 {
                    t = t.product(&self.x_images[i].pow(e)?)?;
                }
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    pub fn interp(&self, f: &LFactor) -> Result<WeylElement> {
        Ok(match f {
            LFactor::X(i) => self.x_images[i - 1].clone(),
            LFactor::D(i) => self.d_images[i - 1].clone(),
            LFactor::Coef(c) => WeylElement::scalar(self.n, self.map_coef(c)),
        })
    }

    pub fn compose(&self, other: &WeylMap) -> Result<WeylMap> {
        Ok(WeylMap {
            n: self.n,
            label: format!("{}.{}", self.label, other.label),
            x_images: other.x_images.iter().map(|x| self.apply(x)).collect::<Result<_>>()?,
            d_images: other.d_images.iter().map(|x| self.apply(x)).collect::<Result<_>>()?,
            perm: other.perm.iter().map(|&j| self.perm[j]).collect(),
        })
    }

    pub fn agrees_with(&self, other: &WeylMap) -> bool {
        self.perm == other.perm && self.x_images == other.x_images && self.d_images == other.d_images
    }
}

/// The Zhelobenko operator `q̌_i` on the Weyl side, images as printed:
/// `X^i ↦ (1/H_{i,i+1}) X^{i+1}`, `X^{i+1} ↦ X^i H_{i,i+1}`,
/// `D_i ↦ D_{i+1} H_{i,i+1}`, `D_{i+1} ↦ (1/H_{i,i+1}) D_i`.
pub fn weyl_zhelobenko_map(i: usize, n: usize) -> Result<WeylMap> {
    check_index("i", i, 1, n.saturating_sub(1))?;
    let h = &hvar(i) - &hvar(i + 1);
    let hinv = h.inv()?;
    let mut x_images = Vec::with_capacity(n);
    let mut d_images = Vec::with_capacity(n);
    for j in 1..=n {
        let (x, d) = if j == i {
            (
                WeylElement::x(n, i + 1)?.scale_left(&hinv),
                WeylElement::d(n, i + 1)?.scale_right(&h),
            )
        } else if j == i + 1 {
            (
                WeylElement::x(n, i)?.scale_right(&h),
                WeylElement::d(n, i)?.scale_left(&hinv),
            )
        } else {
            (WeylElement::x(n, j)?, WeylElement::d(n, j)?)
        };
        x_images.push(x);
        d_images.push(d);
    }
    let mut perm: Vec<usize> = (0..=n).collect();
    perm.swap(i, i + 1);
    Ok(WeylMap {
        n,
        label: format!("q{i}"),
        x_images,
        d_images,
        perm,
    })
}

/// Builds `q̌_i` and checks it: the `D` images agree with `D_j = H_j X^{−e_j}`
/// mapped through the `X` images, `q̌_i(D_j) q̌_i(X^j) = H_{s_i(j)}`, the Weyl
/// and generating-set relations are preserved, and the images of `X^j`, `D_j`
/// lie in `T_0⁻¹W_n`.
pub fn weyl_zhelobenko(i: usize, n: usize) -> Result<(WeylMap, Report)> {
    let map = weyl_zhelobenko_map(i, n)?;
    let mut report = Report::new();
    let label = map.label().to_string();
    for j in 1..=n {
        let via = map.apply(&WeylElement::d(n, j)?)?;
        report.push(Check::expect(
            format!("{label} D{j} image consistent"),
            &via == map.d_image(j),
            || format!("{} vs {}", via, map.d_image(j)),
        ));
        let hj = map.d_image(j).product(map.x_image(j))?;
        let sj = map.perm[j];
        let want = WeylElement::weight(n, sj)?;
        report.push(Check::expect(format!("{label} H{j} image"), hj == want, || {
            hj.to_string()
        }));
        for (name, img) in [("X", map.x_image(j)), ("D", map.d_image(j))] {
            let m = denominator_whitelist(img, DenominatorMode::T0);
            report.push(Check::expect(
                format!("{label} {name}{j} image in T0 localization"),
                m.member,
                || m.witness.clone().unwrap_or_default(),
            ));
        }
    }
    let interp = |f: &LFactor| map.interp(f);
    for rel in weyl_algebra_relations(n)
        .into_iter()
        .chain(generating_set_relations::<Weyl>(n))
    {
        let l = eval_written(n, &rel.lhs, &interp)?;
        let r = eval_written(n, &rel.rhs, &interp)?;
        report.push(Check::expect(
            format!("{label} preserves {}", rel.name),
            l == r,
            || (&l - &r).to_string(),
        ));
    }
    Ok((map, report))
}

/// All `q̌_i` checks plus braid and distant commutation on `X^j`, `D_j`.
pub fn verify_weyl_zhelobenko(n: usize) -> Result<Report> {
    let mut report = Report::new();
    let mut maps = Vec::new();
    for i in 1..n {
        let (m, r) = weyl_zhelobenko(i, n)?;
        report.checks.extend(r.checks);
        maps.push(m);
    }
    for k in 0..maps.len() {
        for l in k + 1..maps.len() {
            let (a, b) = (&maps[k], &maps[l]);
            let (lhs, rhs, name) = if l == k + 1 {
                (
                    a.compose(b)?.compose(a)?,
                    b.compose(a)?.compose(b)?,
                    format!("weyl braid {}{}", k + 1, l + 1),
                )
            } else {
                (a.compose(b)?, b.compose(a)?, format!("weyl commute {}{}", k + 1, l + 1))
            };
            report.push(Check::expect(name, lhs.agrees_with(&rhs), || {
                format!("{:?} vs {:?}", lhs.x_images, rhs.x_images)
            }));
        }
    }
    Ok(report)
}

/// `X^jD_j − X^kD_k + ℓ` in the Weyl model.
pub fn weight_difference_generator(j: usize, k: usize, l: i64, n: usize) -> Result<WeylElement> {
    let xd = |i| -> Result<WeylElement> { WeylElement::x(n, i)?.product(&WeylElement::d(n, i)?) };
    Ok(&(&xd(j)? - &xd(k)?) + &WeylElement::scalar(n, RatFunc::int(l)))
}

/// Exponent vector helper.
pub fn exponent(b: &[i64]) -> Exponent {
    b.iter().copied().collect()
}

/// The standard interpretation of written factors in the Weyl model.
pub fn weyl_interp(n: usize) -> impl Fn(&LFactor) -> Result<WeylElement> {
    standard_interp::<Weyl>(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wh(i: usize) -> RatFunc {
        hvar(i)
    }

    #[test]
    fn named_elements() {
        assert_eq!(wgen(WeylGen::PsiPrime(1), 3).unwrap(), WeylElement::one(3));
        assert_eq!(
            wgen(WeylGen::Psi(1), 3).unwrap().as_scalar().unwrap(),
            &(&wh(1) - &wh(2)) * &(&wh(1) - &wh(3))
        );
        let a = |k| RatFunc::var(Var::a(k));
        let want = &(&(&wh(1) * &wh(1)) + &(&a(1) * &wh(1))) - &a(2);
        assert_eq!(upsilon(1, 2).unwrap(), want);
        for n in 1..=4 {
            for i in 1..=n {
                let u = upsilon_from_generating_function(i, n).unwrap();
                assert!(u.is_polynomial());
                assert_eq!(u, upsilon(i, n).unwrap());
            }
        }
    }

    #[test]
    fn xd_is_h_minus_one() {
        let n = 2;
        let xd = WeylElement::x(n, 1).unwrap().product(&WeylElement::d(n, 1).unwrap()).unwrap();
        assert_eq!(xd.as_scalar().unwrap(), &wh(1) - &RatFunc::one());
        let g = weight_difference_generator(1, 2, 3, n).unwrap();
        assert_eq!(g.as_scalar().unwrap(), &(&wh(1) - &wh(2)) + &RatFunc::int(3));
    }

    #[test]
    fn whitelist_examples() {
        let n = 2;
        let u = WeylElement::scalar(n, (&(&wh(1) - &wh(2)) + &RatFunc::int(3)).inv().unwrap());
        assert!(denominator_whitelist(&u, DenominatorMode::T).member);
        assert!(denominator_whitelist(&u, DenominatorMode::T0).member);
        let u = WeylElement::scalar(n, wh(1).inv().unwrap());
        assert!(!denominator_whitelist(&u, DenominatorMode::T).member);
        assert!(!denominator_whitelist(&u, DenominatorMode::T0).member);
        let u = WeylElement::term(n, RatFunc::one(), exponent(&[-1, 0]));
        assert!(denominator_whitelist(&u, DenominatorMode::T).member);
        assert!(!denominator_whitelist(&u, DenominatorMode::T0).member);
        let d = WeylElement::d(n, 1).unwrap().pow(3).unwrap();
        assert!(denominator_whitelist(&d, DenominatorMode::T0).member);
    }

    #[test]
    fn printed_images() {
        let n = 2;
        let m = weyl_zhelobenko_map(1, n).unwrap();
        let h12 = &wh(1) - &wh(2);
        assert_eq!(
            m.x_image(1),
            &WeylElement::x(n, 2).unwrap().scale_left(&h12.inv().unwrap())
        );
        let hd = m.d_image(1).product(m.x_image(1)).unwrap();
        assert_eq!(hd, WeylElement::weight(n, 2).unwrap());
    }

    #[test]
    fn zhelobenko_checks() {
        for n in 2..=3 {
            let r = verify_weyl_zhelobenko(n).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }
}
