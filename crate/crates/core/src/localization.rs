//! The localized model of `S_Z⁻¹Diff_h(n)` over the generating set
//! `{h̃_i, Z′°^i = Z^iψ′_i, c_i}`, the embedding of `Diff_h(n)` into it, the
//! isomorphism `μ` with the Weyl model, the center test and Ore witnesses.

use crate::coeff::{chi, psi, psi_prime, structural_product, Poly, ProductKind, RatFunc, Var, VarKind};
use crate::error::{check_index, Error, Result};
use crate::laurent::{
    eval_written, generating_set_relations, standard_interp, LFactor, LRelation, Loc, LocElement,
    Weyl, WeylElement,
};
use crate::report::{Check, Report};
use crate::ring::{defining_relations, Element, Factor, FreeExpr, Gen, GenKind, NormalMonomial, RingCtx};
use crate::weyl::upsilon;

/// `μ`: relabels `H ↦ h̃`, `a ↦ c`, `X ↦ Z′°`.
pub fn mu(u: &WeylElement) -> LocElement {
    u.relabel::<Loc>()
}

/// `μ⁻¹`: relabels `h̃ ↦ H`, `c ↦ a`, `Z′° ↦ X`.
pub fn mu_inv(v: &LocElement) -> WeylElement {
    v.relabel::<Weyl>()
}

/// `Υ_i` written in `h̃` and `c`.
pub fn upsilon_loc(i: usize, n: usize) -> Result<RatFunc> {
    Ok(upsilon(i, n)?.rename(|v: Var| match v.kind() {
        VarKind::WeylH => v.with_kind(VarKind::HTilde),
        VarKind::WeylA => v.with_kind(VarKind::Central),
        _ => v,
    }))
}

/// Images of the generators of `Diff_h(n)` in the localized model.
#[derive(Clone, Debug)]
pub struct Embedding {
    n: usize,
    z: Vec<LocElement>,
    d: Vec<LocElement>,
}

impl Embedding {
    /// `Z^i ↦ Z′°^i (ψ′_i)^{−1}`,
    /// `∂_i ↦ χ_i^{−1} Υ_i(h̃, c) · (Z′°^i (ψ′_i)^{−1})^{−1}`.
    pub fn new(n: usize) -> Result<Embedding> {
        check_index("n", n, 1, 16)?;
        let mut z = Vec::with_capacity(n);
        let mut d = Vec::with_capacity(n);
        for i in 1..=n {
            let zi = LocElement::x(n, i)?.scale_right(&psi_prime(i, n).inv()?);
            let gi = &upsilon_loc(i, n)? / &chi(i, n);
            d.push(zi.inverse()?.scale_left(&gi));
            z.push(zi);
        }
        Ok(Embedding { n, z, d })
    }

    pub fn image(&self, g: Gen) -> &LocElement {
        match g.kind {
            GenKind::Z => &self.z[g.site() - 1],
            GenKind::D => &self.d[g.site() - 1],
        }
    }

    fn check_ctx(&self, ctx: RingCtx) -> Result<()> {
        ctx.ensure_single_copy("the localized model")?;
        if ctx.n() != self.n {
            return Err(Error::ContextMismatch(
                format!("localized model n={}", self.n),
                ctx.to_string(),
            ));
        }
        Ok(())
    }

    pub fn apply(&self, x: &Element) -> Result<LocElement> {
        self.check_ctx(x.ctx())?;
        let mut out = LocElement::zero(self.n);
        for (m, f) in x.terms() {
            let mut t = LocElement::scalar(self.n, f.clone());
            for g in m.word(x.ctx()) {
                t = t.product(self.image(g))?;
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    pub fn apply_free(&self, e: &FreeExpr) -> Result<LocElement> {
        let mut out = LocElement::zero(self.n);
        for product in e.terms() {
            let mut t = LocElement::one(self.n);
            for f in product {
                t = match f {
                    Factor::Gen(g) => t.product(self.image(*g))?,
                    Factor::Coef(c) => t.scale_right(c),
                };
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }
}

/// Embeds an element of `Diff_h(n)` into the localized model.
pub fn embed(x: &Element) -> Result<LocElement> {
    x.ctx().ensure_single_copy("embed")?;
    Embedding::new(x.ctx().n())?.apply(x)
}

fn weyl_hvar(i: usize) -> RatFunc {
    RatFunc::var(Var::weyl_h(i))
}

/// Checks the original-generator formulas for `μ` and `μ⁻¹`, the transport of
/// the Weyl-side generating relations onto the localized ones, round trips,
/// and that the embedding respects every defining relation of `Diff_h(n)`.
pub fn check_original_generator_formulas(n: usize) -> Result<Report> {
    let ctx = RingCtx::single(n)?;
    let emb = Embedding::new(n)?;
    let mut report = Report::new();
    for i in 1..=n {
        let zi = emb.image(Gen::z(i));
        let pp = psi_prime(i, n);
        // X^i ↦ Z^i ψ′_i
        let lhs = mu(&WeylElement::x(n, i)?);
        let rhs = zi.scale_right(&pp);
        report.push(Check::expect(format!("mu X{i} = Z{i} psi'"), lhs == rhs, || {
            format!("{lhs} vs {rhs}")
        }));
        // D_i ↦ (ψ′_i)^{−1} h̃_i (Z^i)^{−1}
        let lhs = mu(&WeylElement::d(n, i)?);
        let rhs = zi.inverse()?.scale_left(&(&RatFunc::h(i) / &pp));
        report.push(Check::expect(format!("mu D{i} = psi'^-1 h Z{i}^-1"), lhs == rhs, || {
            format!("{lhs} vs {rhs}")
        }));
        // Z^i ↦ X^i (1/Ψ′_i)
        let psi_w = structural_product(ProductKind::WeylPsiPrime, i, n)?;
        let w = WeylElement::x(n, i)?.scale_right(&psi_w.inv()?);
        report.push(Check::expect(format!("embed Z{i} = mu(X{i}/Psi'{i})"), &mu(&w) == zi, || {
            format!("{} vs {}", mu(&w), zi)
        }));
        // ∂_i ↦ (Υ_i/Ψ_i) (X^i)^{−1}
        let coef = &upsilon(i, n)? / &structural_product(ProductKind::WeylPsi, i, n)?;
        let w = WeylElement::x(n, i)?.inverse()?.scale_left(&coef);
        let di = emb.image(Gen::d(i));
        report.push(Check::expect(format!("embed d{i} = mu(Upsilon/Psi X{i}^-1)"), &mu(&w) == di, || {
            format!("{} vs {}", mu(&w), di)
        }));
        // μ⁻¹(χ_i Γ_i) = Υ_i
        let g = mu_inv(&emb.apply(&crate::ring::gamma(ctx, i)?)?.scale_left(&chi(i, n)));
        let want = WeylElement::scalar(n, upsilon(i, n)?);
        report.push(Check::expect(format!("mu_inv chi Gamma{i} = Upsilon{i}"), g == want, || {
            g.to_string()
        }));
        // round trips on the generators
        let hi = WeylElement::scalar(n, weyl_hvar(i));
        report.push(Check::expect(
            format!("round trip X{i} D{i} H{i}"),
            [WeylElement::x(n, i)?, WeylElement::d(n, i)?, hi]
                .iter()
                .all(|u| &mu_inv(&mu(u)) == u),
            || "mu_inv(mu(u)) differs".into(),
        ));
    }
    let weyl_rel = generating_set_relations::<Weyl>(n);
    let loc_rel = generating_set_relations::<Loc>(n);
    let loc_interp = standard_interp::<Loc>(n);
    for (w, l) in weyl_rel.iter().zip(loc_rel.iter()) {
        let transported = transport_relation(w);
        let structural = &transported == l;
        let lhs = eval_written(n, &transported.lhs, &loc_interp)?;
        let rhs = eval_written(n, &transported.rhs, &loc_interp)?;
        report.push(Check::expect(
            format!("mu transports {}", w.name),
            structural && lhs == rhs,
            || format!("{:?} vs {:?}", transported, l),
        ));
    }
    for rel in defining_relations(ctx) {
        let l = emb.apply_free(&rel.lhs)?;
        let r = emb.apply_free(&rel.rhs)?;
        report.push(Check::expect(format!("embed preserves {}", rel.name), l == r, || {
            (&l - &r).to_string()
        }));
    }
    Ok(report)
}

/// Maps every factor of a Weyl-side relation through `μ`.
pub fn transport_relation(rel: &LRelation) -> LRelation {
    let map_sum = |s: &Vec<Vec<LFactor>>| -> Vec<Vec<LFactor>> {
        s.iter()
            .map(|p| {
                p.iter()
                    .map(|f| match f {
                        LFactor::Coef(c) => LFactor::Coef(
                            mu(&WeylElement::scalar(1, c.clone())).as_scalar().expect("scalar"),
                        ),
                        other => other.clone(),
                    })
                    .collect()
            })
            .collect()
    };
    LRelation {
        name: rel.name.clone(),
        lhs: map_sum(&rel.lhs),
        rhs: map_sum(&rel.rhs),
    }
}

/// Checks the commuting families `ψ_iZ^i`, `Z^iψ′_i`, `ψ_i∂_i`, `∂_iψ′_i`
/// in `Diff_h(n)` normal form, with `[Z^i, Z^j] ≠ 0` as a negative control.
pub fn verify_commuting_families(n: usize) -> Result<Report> {
    check_index("n", n, 2, 16)?;
    let ctx = RingCtx::single(n)?;
    let mut report = Report::new();
    let fam = |kind: &str, i: usize| -> Result<Element> {
        Ok(match kind {
            "psi Z" => Element::z(ctx, i)?.scale_left(&psi(i, n)),
            "Z psi'" => Element::z(ctx, i)?.scale_right(&psi_prime(i, n)),
            "psi d" => Element::d(ctx, i)?.scale_left(&psi(i, n)),
            _ => Element::d(ctx, i)?.scale_right(&psi_prime(i, n)),
        })
    };
    for kind in ["psi Z", "Z psi'", "psi d", "d psi'"] {
        for i in 1..=n {
            for j in i + 1..=n {
                let c = fam(kind, i)?.commutator(&fam(kind, j)?)?;
                report.push(Check::expect(format!("{kind} commute {i}{j}"), c.is_zero(), || {
                    c.to_string()
                }));
            }
        }
    }
    let c = Element::z(ctx, 1)?.commutator(&Element::z(ctx, 2)?)?;
    report.push(Check::expect("Z1 Z2 do not commute", !c.is_zero(), || {
        "commutator vanished".into()
    }));
    Ok(report)
}

/// A generator that fails to commute with a non-central element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub generator: String,
    pub commutator: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CenterDecomposition {
    /// The element equals this polynomial in `c_1, ..., c_n`.
    Central(Poly),
    NotCentral(Witness),
}

/// Decides membership in the center: the image in the localized model must
/// be a polynomial in the `c_k` alone.
pub fn center_decompose(x: &Element) -> Result<CenterDecomposition> {
    let ctx = x.ctx();
    ctx.ensure_single_copy("center_decompose")?;
    let image = embed(x)?;
    if let Some(f) = image.as_scalar() {
        if !f.depends_on_kind(VarKind::HTilde) && f.is_polynomial() {
            return Ok(CenterDecomposition::Central(f.numerator().clone()));
        }
    }
    let n = ctx.n();
    let mut candidates: Vec<(String, Element)> = Vec::new();
    for i in 1..=n {
        candidates.push((format!("h[{i}]"), Element::h(ctx, i)?));
    }
    for kind in [GenKind::Z, GenKind::D] {
        for i in 1..=n {
            let g = Gen::new(kind, i, 1);
            candidates.push((crate::ring::fmt_gen(ctx, g), Element::gen(ctx, g)));
        }
    }
    for (name, g) in candidates {
        let c = x.commutator(&g)?;
        if !c.is_zero() {
            return Ok(CenterDecomposition::NotCentral(Witness {
                generator: name,
                commutator: c,
            }));
        }
    }
    Err(Error::Evaluation(format!(
        "{x} commutes with every generator but is not a polynomial in c"
    )))
}

/// Polynomial in `c` evaluated as an element of `Diff_h(n)`.
pub fn central_polynomial_element(ctx: RingCtx, p: &Poly) -> Result<Element> {
    let mut out = Element::zero(ctx);
    for (m, q) in p.terms() {
        let mut t = Element::scalar(ctx, RatFunc::constant(q.clone()));
        for (v, e) in m.factors() {
            if v.kind() != VarKind::Central {
                return Err(Error::Unsupported(format!("{v} is not a central variable")));
            }
            let c = crate::ring::central_c(ctx, v.index())?;
            t = t.product(&c.pow(e))?;
        }
        out = &out + &t;
    }
    Ok(out)
}

/// `(Z^k)^ν · m = m̃ · Z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreWitness {
    pub nu: u32,
    pub m_tilde: Element,
}

/// Finds the smallest `ν ≤ bound` with `(Z^k)^ν · m ∈ Diff_h(n) · Z^k`.
///
/// A product lies in the left ideal when every normal monomial contains
/// `Z^k`; then `m̃` is read off term by term and cross-checked through the
/// localized model: `embed(m̃) = embed((Z^k)^ν m) · embed(Z^k)^{−1}`.
pub fn ore_witness(k: usize, m: &Element, bound: u32) -> Result<OreWitness> {
    let ctx = m.ctx();
    ctx.ensure_single_copy("ore_witness")?;
    check_index("k", k, 1, ctx.n())?;
    if bound == 0 {
        return Err(Error::OreBoundExhausted {
            bound,
            detail: "bound must be at least 1".into(),
        });
    }
    let zk_gen = Gen::z(k);
    let zk = Element::gen(ctx, zk_gen);
    let mut p = m.clone();
    for nu in 1..=bound {
        p = zk.product(&p)?;
        if p.terms().all(|(mono, _)| mono.exponent(ctx, zk_gen) >= 1) {
            let m_tilde = divide_right_by_z(&p, k)?;
            let emb = Embedding::new(ctx.n())?;
            let check = emb.apply(&p)?.product(&emb.image(zk_gen).inverse()?)?;
            if emb.apply(&m_tilde)? != check || m_tilde.product(&zk)? != p {
                return Err(Error::Evaluation(format!(
                    "right division by Z^{k} is inconsistent for {p}"
                )));
            }
            return Ok(OreWitness { nu, m_tilde });
        }
    }
    Err(Error::OreBoundExhausted {
        bound,
        detail: format!("(Z^{k})^{bound} * ({m}) still has terms without Z^{k}: {p}"),
    })
}

/// Solves `y · Z^k = p` when every monomial of `p` contains `Z^k`.
fn divide_right_by_z(p: &Element, k: usize) -> Result<Element> {
    let ctx = p.ctx();
    let g = Gen::z(k);
    let zk = Element::gen(ctx, g);
    let mut rest = p.clone();
    let mut out = Element::zero(ctx);
    let limit = 4 * p.len() + 16;
    for _ in 0..limit {
        let Some((mono, f)) = rest.terms().next_back().map(|(m, f)| (m.clone(), f.clone())) else {
            return Ok(out);
        };
        if mono.exponent(ctx, g) == 0 {
            return Err(Error::Evaluation(format!("{p} is not divisible by Z^{k} on the right")));
        }
        let mut z = mono.z_exponents().to_vec();
        z[k - 1] -= 1;
        let reduced = NormalMonomial::from_exponents(ctx, mono.d_exponents(), &z);
        let t = Element::term(ctx, RatFunc::one(), reduced.clone()).product(&zk)?;
        let c = t.coefficient(&mono);
        if c.is_zero() {
            return Err(Error::Evaluation(format!("cannot isolate {mono:?} in {t}")));
        }
        let q = &f / &c;
        out = &out + &Element::term(ctx, q.clone(), reduced);
        rest = &rest - &t.scale_left(&q);
    }
    Err(Error::Evaluation(format!("right division by Z^{k} did not terminate on {p}")))
}
