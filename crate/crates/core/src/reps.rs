//! Two module families used as oracles: the highest-weight modules induced
//! from `∂_i|⟩ = 0, h̃_i|⟩ = λ_i|⟩`, and the modules `V_{γ,A}` spanned by
//! `v_j = (X^1)^{j_1+γ_1}⋯(X^n)^{j_n+γ_n}` with `a_k` acting by `A_k`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::coeff::{elementary_symmetric, linalg, Poly, RatFunc, Var, VarKind};
use crate::error::{check_index, Error, Result};
use crate::laurent::WeylElement;
use crate::localization::{mu_inv, Embedding};
use crate::report::{Check, Report};
use crate::ring::{central_c, defining_relations, Element, Factor, FreeExpr, Gen, GenKind, NormalMonomial, RingCtx};

/// A vector `Σ f_b(λ) Z^b|⟩` of the highest-weight module; `b` lists the
/// exponents of `Z^1..Z^n` and the basis word is the normal `Z`-block.
#[derive(Clone, PartialEq, Eq)]
pub struct HWVector {
    n: usize,
    terms: BTreeMap<Vec<u16>, RatFunc>,
}

impl HWVector {
    pub fn zero(n: usize) -> HWVector {
        HWVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `|⟩`
    pub fn vacuum(n: usize) -> HWVector {
        HWVector::basis(n, &vec![0; n])
    }

    /// `Z^b|⟩`
    pub fn basis(n: usize, b: &[u16]) -> HWVector {
        assert_eq!(b.len(), n);
        let mut v = HWVector::zero(n);
        v.terms.insert(b.to_vec(), RatFunc::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &[u16]) -> RatFunc {
        self.terms.get(b).cloned().unwrap_or_else(RatFunc::zero)
    }

    fn add_term(&mut self, b: Vec<u16>, f: RatFunc) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(g) => {
                *g = &*g + &f;
                if g.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, f);
            }
        }
    }

    fn add(&mut self, other: &HWVector) {
        for (b, f) in &other.terms {
            self.add_term(b.clone(), f.clone());
        }
    }

    /// `v = s·|⟩`-style check: the scalar `s` with `self = s · other`, if any.
    pub fn ratio_to(&self, other: &HWVector) -> Option<RatFunc> {
        let (b, f) = other.terms.iter().next()?;
        let s = &self.coefficient(b) / f;
        let scaled = other.scaled(&s);
        (scaled == *self).then_some(s)
    }

    fn scaled(&self, s: &RatFunc) -> HWVector {
        let mut out = HWVector::zero(self.n);
        for (b, f) in &self.terms {
            out.add_term(b.clone(), f * s);
        }
        out
    }
}

impl fmt::Display for HWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*Z^{b:?}|>")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HWVector({self})")
    }
}

/// `h̃_i ↦ λ_i + b_i`.
fn eval_weight(f: &RatFunc, b: &[u16]) -> Result<RatFunc> {
    f.substitute(|v: Var| {
        (v.kind() == VarKind::HTilde && v.index() >= 1).then(|| {
            &RatFunc::var(Var::lambda(v.index())) + &RatFunc::int(b[v.index() - 1] as i64)
        })
    })
}

/// The action of `Diff_h(n)` on the highest-weight module.
///
/// `Z^i` and coefficients act directly on basis words. `∂_j` is moved
/// through the word with `∂_jZ^i = C_{ij}^{−1} Z^i∂_j` for `i ≠ j`, where
/// `Z^i∂_j = C_{ij}∂_jZ^i`, and with `∂_jZ^j = Γ_j = Σ_l (M^{−1})_{jl}(Z^l∂_l + 1)`,
/// where `M_{lk} = 1/(1 − h̃_{lk})`, until it reaches `|⟩`.
pub struct HWModule {
    ctx: RingCtx,
    m_inv: Vec<Vec<RatFunc>>,
    d_cache: RefCell<HashMap<(usize, Vec<u16>), HWVector>>,
}

impl HWModule {
    pub fn new(n: usize) -> Result<HWModule> {
        let ctx = RingCtx::single(n)?;
        let m: Vec<Vec<RatFunc>> = (1..=n)
            .map(|l| {
                (1..=n)
                    .map(|k| {
                        if l == k {
                            RatFunc::one()
                        } else {
                            (&RatFunc::one() - &RatFunc::hij(l, k)).inv().expect("nonzero")
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(HWModule {
            ctx,
            m_inv: linalg::inverse(&m)?,
            d_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    /// `f(h̃) · v`
    pub fn apply_coef(&self, f: &RatFunc, v: &HWVector) -> Result<HWVector> {
        let mut out = HWVector::zero(v.n);
        for (b, c) in &v.terms {
            out.add_term(b.clone(), c * &eval_weight(f, b)?);
        }
        Ok(out)
    }

    fn apply_z(&self, i: usize, v: &HWVector) -> Result<HWVector> {
        let ctx = self.ctx;
        let zi = Element::z(ctx, i)?;
        let mut out = HWVector::zero(v.n);
        for (b, c) in &v.terms {
            let zero = vec![0u16; ctx.n()];
            let word = Element::term(ctx, RatFunc::one(), NormalMonomial::from_exponents(ctx, &zero, b));
            for (m, f) in zi.product(&word)?.terms() {
                let b2 = m.z_exponents().to_vec();
                out.add_term(b2.clone(), c * &eval_weight(f, &b2)?);
            }
        }
        Ok(out)
    }

    /// `∂_j Z^b|⟩`
    fn d_on_basis(&self, j: usize, b: &[u16]) -> Result<HWVector> {
        if let Some(v) = self.d_cache.borrow().get(&(j, b.to_vec())) {
            return Ok(v.clone());
        }
        let n = self.n();
        // first letter of the normal Z-block: the largest site present
        let Some(i) = (1..=n).rev().find(|&s| b[s - 1] > 0) else {
            return Ok(HWVector::zero(n));
        };
        let mut rest = b.to_vec();
        rest[i - 1] -= 1;
        let rest_v = HWVector::basis(n, &rest);
        let out = if i != j {
            let c = commutation_coefficient(i, j);
            let inner = self.d_on_basis(j, &rest)?;
            self.apply_coef(&c.inv()?, &self.apply_z(i, &inner)?)?
        } else {
            let mut acc = HWVector::zero(n);
            for l in 1..=n {
                let coef = &self.m_inv[j - 1][l - 1];
                if coef.is_zero() {
                    continue;
                }
                let mut w = self.apply_z(l, &self.d_on_basis(l, &rest)?)?;
                w.add(&rest_v);
                acc.add(&self.apply_coef(coef, &w)?);
            }
            acc
        };
        self.d_cache.borrow_mut().insert((j, b.to_vec()), out.clone());
        Ok(out)
    }

    pub fn apply_gen(&self, g: Gen, v: &HWVector) -> Result<HWVector> {
        match g.kind {
            GenKind::Z => self.apply_z(g.site(), v),
            GenKind::D => {
                let mut out = HWVector::zero(v.n);
                for (b, c) in &v.terms {
                    let w = self.d_on_basis(g.site(), b)?;
                    for (b2, f) in &w.terms {
                        out.add_term(b2.clone(), c * f);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Applies a written product right to left.
    pub fn apply_free(&self, e: &FreeExpr, v: &HWVector) -> Result<HWVector> {
        let mut out = HWVector::zero(v.n);
        for product in e.terms() {
            let mut w = v.clone();
            for f in product.iter().rev() {
                w = match f {
                    Factor::Gen(g) => self.apply_gen(*g, &w)?,
                    Factor::Coef(c) => self.apply_coef(c, &w)?,
                };
            }
            out.add(&w);
        }
        Ok(out)
    }

    pub fn apply(&self, x: &Element, v: &HWVector) -> Result<HWVector> {
        self.ctx.ensure_same(&x.ctx())?;
        let mut out = HWVector::zero(v.n);
        for (m, f) in x.terms() {
            let mut w = v.clone();
            for g in m.word(self.ctx).into_iter().rev() {
                w = self.apply_gen(g, &w)?;
            }
            out.add(&self.apply_coef(f, &w)?);
        }
        Ok(out)
    }
}

/// `C_{ij}` in `Z^i∂_j = C_{ij}∂_jZ^i`, `i ≠ j`.
fn commutation_coefficient(i: usize, j: usize) -> RatFunc {
    if i < j {
        RatFunc::one()
    } else {
        let h = RatFunc::hij(i, j);
        let hm = &h - &RatFunc::one();
        &(&h * &(&h - &RatFunc::int(2))) / &(&hm * &hm)
    }
}

/// Action of `x` on a highest-weight vector.
pub fn hw_apply(x: &Element, v: &HWVector) -> Result<HWVector> {
    x.ctx().ensure_single_copy("the highest-weight module")?;
    if v.n() != x.ctx().n() {
        return Err(Error::ContextMismatch(x.ctx().to_string(), format!("vector of rank {}", v.n())));
    }
    HWModule::new(v.n())?.apply(x, v)
}

/// Basis words on which central values are re-checked.
pub fn excited_words(n: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let unit = |i: usize, e: u16| {
        let mut b = vec![0u16; n];
        b[i] = e;
        b
    };
    out.push(unit(0, 1));
    out.push(unit(n - 1, 2));
    out.push(vec![1; n]);
    out.push(unit(0, 2));
    let mut mixed = vec![0u16; n];
    mixed[0] = 1;
    mixed[n - 1] += 2;
    out.push(mixed);
    out
}

/// The scalar by which `c_k` acts, checked on `|⟩` and five excited vectors.
pub fn hw_central_value(k: usize, n: usize) -> Result<RatFunc> {
    check_index("k", k, 1, n)?;
    let module = HWModule::new(n)?;
    let c = central_c(module.ctx, k)?;
    let vac = HWVector::vacuum(n);
    let s = module
        .apply(&c, &vac)?
        .ratio_to(&vac)
        .ok_or_else(|| Error::NotScalar(format!("c_{k} on the highest-weight vector")))?;
    for b in excited_words(n) {
        let v = HWVector::basis(n, &b);
        let w = module.apply(&c, &v)?;
        if w != v.scaled(&s) {
            return Err(Error::NotScalar(format!("c_{k} on Z^{b:?}|>: {w}")));
        }
    }
    Ok(s)
}

/// `−e_k(λ_1 − 1, ..., λ_n − 1)`.
pub fn expected_central_value(k: usize, n: usize) -> Result<RatFunc> {
    check_index("k", k, 1, n)?;
    let shifted: Vec<Poly> = (1..=n)
        .map(|i| &Poly::var(Var::lambda(i)) - &Poly::one())
        .collect();
    Ok(-RatFunc::from_poly(elementary_symmetric(&shifted, k)))
}

/// A vector of `V_{γ,A}`: a finite combination of `v_j`, `j ∈ Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VGammaVector {
    gamma: Vec<BigRational>,
    a: Vec<BigRational>,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl VGammaVector {
    /// The zero vector of `V_{γ,A}`; rejects `γ_i − γ_j ∈ Z`.
    pub fn zero(gamma: Vec<BigRational>, a: Vec<BigRational>) -> Result<VGammaVector> {
        let n = gamma.len();
        if n == 0 || a.len() != n {
            return Err(Error::Unsupported("γ and A need the same positive length".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if (&gamma[i] - &gamma[j]).is_integer() {
                    return Err(Error::NonGeneric(format!(
                        "γ_{} − γ_{} = {} is an integer",
                        i + 1,
                        j + 1,
                        &gamma[i] - &gamma[j]
                    )));
                }
            }
        }
        Ok(VGammaVector {
            gamma,
            a,
            terms: BTreeMap::new(),
        })
    }

    pub fn basis(gamma: Vec<BigRational>, a: Vec<BigRational>, j: &[i64]) -> Result<VGammaVector> {
        let mut v = VGammaVector::zero(gamma, a)?;
        if j.len() != v.n() {
            return Err(Error::Unsupported("index length differs from n".into()));
        }
        v.terms.insert(j.to_vec(), BigRational::one());
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, j: &[i64]) -> BigRational {
        self.terms.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    fn empty_like(&self) -> VGammaVector {
        VGammaVector {
            gamma: self.gamma.clone(),
            a: self.a.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, j: Vec<i64>, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let e = self.terms.entry(j).or_insert_with(BigRational::zero);
        *e += q;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    fn add(&mut self, other: &VGammaVector) {
        for (j, q) in &other.terms {
            self.add_term(j.clone(), q.clone());
        }
    }

    /// Eigenvalue of `H_i` on `v_j`.
    fn h_eigenvalue(&self, i: usize, j: &[i64]) -> BigRational {
        BigRational::from_integer(j[i - 1].into()) + &self.gamma[i - 1] + BigRational::one()
    }

    /// `f(H, a) · v`
    fn apply_weyl_coef(&self, f: &RatFunc) -> Result<VGammaVector> {
        let mut out = self.empty_like();
        for (j, q) in &self.terms {
            let val = f.eval(|v: Var| match v.kind() {
                VarKind::WeylH => Some(self.h_eigenvalue(v.index(), j)),
                VarKind::WeylA => Some(self.a[v.index() - 1].clone()),
                _ => None,
            })?;
            out.add_term(j.clone(), q * val);
        }
        Ok(out)
    }
}

/// Action of an element of the Weyl side: `f(H, a) X^b v_j = f(eigenvalues) v_{j+b}`.
pub fn vgamma_apply_weyl(u: &WeylElement, v: &VGammaVector) -> Result<VGammaVector> {
    if u.n() != v.n() {
        return Err(Error::ContextMismatch(format!("rank {}", u.n()), format!("rank {}", v.n())));
    }
    let mut out = v.empty_like();
    for (b, f) in u.terms() {
        let mut moved = v.empty_like();
        for (j, q) in &v.terms {
            let j2: Vec<i64> = j.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
            moved.add_term(j2, q.clone());
        }
        out.add(&moved.apply_weyl_coef(f)?);
    }
    Ok(out)
}

/// `D_i v_j = (j_i + γ_i) v_{j−e_i}`, from the formal power rule.
pub fn vgamma_apply_d(i: usize, v: &VGammaVector) -> Result<VGammaVector> {
    check_index("i", i, 1, v.n())?;
    let mut out = v.empty_like();
    for (j, q) in &v.terms {
        let mut j2 = j.clone();
        let factor = BigRational::from_integer(j[i - 1].into()) + &v.gamma[i - 1];
        j2[i - 1] -= 1;
        out.add_term(j2, q * factor);
    }
    Ok(out)
}

/// The action of `Diff_h(n)` on `V_{γ,A}` through the images `μ⁻¹(embed(g))`.
pub struct VGammaModule {
    n: usize,
    emb: Embedding,
}

impl VGammaModule {
    pub fn new(n: usize) -> Result<VGammaModule> {
        Ok(VGammaModule {
            n,
            emb: Embedding::new(n)?,
        })
    }

    pub fn weyl_image(&self, g: Gen) -> WeylElement {
        mu_inv(self.emb.image(g))
    }

    pub fn apply_gen(&self, g: Gen, v: &VGammaVector) -> Result<VGammaVector> {
        vgamma_apply_weyl(&self.weyl_image(g), v)
    }

    /// `f(h̃)` acts as `f(H)`.
    pub fn apply_coef(&self, f: &RatFunc, v: &VGammaVector) -> Result<VGammaVector> {
        let g = f.rename(|x: Var| {
            if x.kind() == VarKind::HTilde {
                x.with_kind(VarKind::WeylH)
            } else {
                x
            }
        });
        v.apply_weyl_coef(&g)
    }

    pub fn apply_free(&self, e: &FreeExpr, v: &VGammaVector) -> Result<VGammaVector> {
        let mut out = v.empty_like();
        for product in e.terms() {
            let mut w = v.clone();
            for f in product.iter().rev() {
                w = match f {
                    Factor::Gen(g) => self.apply_gen(*g, &w)?,
                    Factor::Coef(c) => self.apply_coef(c, &w)?,
                };
            }
            out.add(&w);
        }
        Ok(out)
    }

    pub fn apply(&self, x: &Element, v: &VGammaVector) -> Result<VGammaVector> {
        x.ctx().ensure_single_copy("V_{γ,A}")?;
        if x.ctx().n() != self.n {
            return Err(Error::ContextMismatch(x.ctx().to_string(), format!("rank {}", self.n)));
        }
        vgamma_apply_weyl(&mu_inv(&self.emb.apply(x)?), v)
    }
}

/// Action of `x ∈ Diff_h(n)` on `V_{γ,A}`.
pub fn vgamma_apply(x: &Element, v: &VGammaVector) -> Result<VGammaVector> {
    VGammaModule::new(v.n())?.apply(x, v)
}

/// Sampled parameters with `γ_i ≡ i/(7(n+1))` mod `Z`, so no difference
/// `γ_i − γ_j` is an integer.
pub fn sample_gamma(n: usize, rng: &mut impl Rng) -> (Vec<BigRational>, Vec<BigRational>) {
    let denom = 7 * (n as i64 + 1);
    let gamma = (1..=n as i64)
        .map(|i| BigRational::new((i + denom * rng.gen_range(-2..=2)).into(), denom.into()))
        .collect();
    let a = (0..n)
        .map(|_| BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()))
        .collect();
    (gamma, a)
}

/// Checks that every defining relation of `Diff_h(n)` annihilates sampled
/// basis vectors in both module families.
pub fn module_relation_suite(n: usize, samples: usize, rng: &mut impl Rng) -> Result<Report> {
    let ctx = RingCtx::single(n)?;
    let hw = HWModule::new(n)?;
    let vm = VGammaModule::new(n)?;
    let rels = defining_relations(ctx);
    let mut report = Report::new();
    for s in 0..samples {
        let b: Vec<u16> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
        let v = HWVector::basis(n, &b);
        let (gamma, a) = sample_gamma(n, rng);
        let j: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
        let w = VGammaVector::basis(gamma, a, &j)?;
        for rel in &rels {
            let l = hw.apply_free(&rel.lhs, &v)?;
            let r = hw.apply_free(&rel.rhs, &v)?;
            report.push(Check::expect(
                format!("hw sample {s} {} on Z^{b:?}", rel.name),
                l == r,
                || format!("{l} vs {r}"),
            ));
            let l = vm.apply_free(&rel.lhs, &w)?;
            let r = vm.apply_free(&rel.rhs, &w)?;
            report.push(Check::expect(
                format!("vmod sample {s} {} on v{j:?}", rel.name),
                l == r,
                || format!("{l:?} vs {r:?}"),
            ));
        }
    }
    Ok(report)
}
