//! Maps of `Diff_h(n, N)` given by generator images: the Zhelobenko
//! automorphisms `q̌_i`, the anti-automorphism `ε` and the `S_n` action.

use std::collections::HashMap;
use std::fmt;

use crate::coeff::{phi, RatFunc, Var, VarKind};
use crate::error::{check_index, Error, Result};
use crate::report::{Check, Report};
use crate::ring::{defining_relations, fmt_gen, Element, Factor, FreeExpr, Gen, GenKind, RingCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Zhelobenko(usize),
    Epsilon,
    Sn(usize),
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapKind::Zhelobenko(i) => write!(f, "q{i}"),
            MapKind::Epsilon => write!(f, "epsilon"),
            MapKind::Sn(i) => write!(f, "s{i}"),
        }
    }
}

/// An (anti)homomorphism candidate fixed by its generator images and a
/// permutation of the weights `h̃_j ↦ h̃_{perm[j]}`.
#[derive(Clone, Debug)]
pub struct GeneratorMap {
    ctx: RingCtx,
    label: String,
    anti: bool,
    images: HashMap<Gen, Element>,
    perm: Vec<usize>,
}

fn transposition(n: usize, i: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=n).collect();
    p.swap(i, i + 1);
    p
}

impl GeneratorMap {
    /// Builds a map from explicit images. Missing generators map to themselves.
    pub fn from_images(
        ctx: RingCtx,
        label: impl Into<String>,
        anti: bool,
        images: HashMap<Gen, Element>,
        perm: Vec<usize>,
    ) -> Result<GeneratorMap> {
        if perm.len() != ctx.n() + 1 {
            return Err(Error::Unsupported("weight permutation has wrong length".into()));
        }
        let mut images = images;
        for g in ctx.generators() {
            let img = images.entry(g).or_insert_with(|| Element::gen(ctx, g));
            ctx.ensure_same(&img.ctx())?;
        }
        Ok(GeneratorMap {
            ctx,
            label: label.into(),
            anti,
            images,
            perm,
        })
    }

    pub fn build(kind: MapKind, ctx: RingCtx) -> Result<GeneratorMap> {
        let n = ctx.n();
        let mut images = HashMap::new();
        let one = RatFunc::one();
        match kind {
            MapKind::Zhelobenko(i) => {
                ctx.ensure_single_copy("the Zhelobenko automorphism")?;
                check_index("i", i, 1, n.saturating_sub(1))?;
                let h = RatFunc::hij(i, i + 1);
                let zi1 = Element::z(ctx, i + 1)?;
                images.insert(Gen::z(i), zi1.scale_right(&-(&h / &(&h - &one))));
                images.insert(Gen::z(i + 1), Element::z(ctx, i)?);
                images.insert(
                    Gen::d(i),
                    Element::d(ctx, i + 1)?.scale_left(&-(&(&h - &one) / &h)),
                );
                images.insert(Gen::d(i + 1), Element::d(ctx, i)?);
                GeneratorMap::from_images(ctx, kind.to_string(), false, images, transposition(n, i))
            }
            MapKind::Epsilon => {
                ctx.ensure_single_copy("the anti-automorphism ε")?;
                for i in 1..=n {
                    let p = phi(i, n);
                    images.insert(Gen::d(i), Element::z(ctx, i)?.scale_left(&p));
                    images.insert(Gen::z(i), Element::d(ctx, i)?.scale_right(&p.inv()?));
                }
                GeneratorMap::from_images(ctx, kind.to_string(), true, images, (0..=n).collect())
            }
            MapKind::Sn(i) => {
                check_index("i", i, 1, n.saturating_sub(1))?;
                let h = RatFunc::hij(i, i + 1);
                for a in 1..=ctx.copies() {
                    let z = |s| Element::z_copy(ctx, s, a);
                    let d = |s| Element::d_copy(ctx, s, a);
                    images.insert(Gen::new(GenKind::Z, i, a), z(i + 1)?.scale_right(&-&h));
                    images.insert(Gen::new(GenKind::Z, i + 1, a), z(i)?.scale_right(&h.inv()?));
                    images.insert(Gen::new(GenKind::D, i, a), d(i + 1)?.scale_left(&-h.inv()?));
                    images.insert(Gen::new(GenKind::D, i + 1, a), d(i)?.scale_left(&h));
                }
                GeneratorMap::from_images(ctx, kind.to_string(), false, images, transposition(n, i))
            }
        }
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_anti(&self) -> bool {
        self.anti
    }

    pub fn image(&self, g: Gen) -> &Element {
        &self.images[&g]
    }

    /// Image of a coefficient: the weights are permuted.
    pub fn map_coef(&self, f: &RatFunc) -> RatFunc {
        let perm = &self.perm;
        f.rename(|v: Var| {
            if v.kind() == VarKind::HTilde && v.index() >= 1 {
                Var::h(perm[v.index()])
            } else {
                v
            }
        })
    }

    pub fn apply_free(&self, e: &FreeExpr) -> Result<Element> {
        e.map_eval(
            self.ctx,
            &|g| Ok(self.images[&g].clone()),
            &|c| self.map_coef(c),
            self.anti,
        )
    }

    /// Applies the map to a normal form, monomial by monomial.
    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.ctx.ensure_same(&x.ctx())?;
        let mut out = Element::zero(self.ctx);
        for (m, f) in x.terms() {
            let mut factors = vec![Factor::Coef(f.clone())];
            factors.extend(m.word(self.ctx).into_iter().map(Factor::Gen));
            out = &out + &self.apply_free(&FreeExpr::product(factors))?;
        }
        Ok(out)
    }

    /// `self ∘ other` as a generator map.
    pub fn compose(&self, other: &GeneratorMap) -> Result<GeneratorMap> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut images = HashMap::new();
        for g in self.ctx.generators() {
            images.insert(g, self.apply(other.image(g))?);
        }
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        GeneratorMap::from_images(
            self.ctx,
            format!("{}.{}", self.label, other.label),
            self.anti != other.anti,
            images,
            perm,
        )
    }

    /// True when both maps agree on every generator and every weight.
    pub fn agrees_with(&self, other: &GeneratorMap) -> bool {
        self.perm == other.perm
            && self.anti == other.anti
            && self.ctx.generators().iter().all(|g| self.images[g] == other.images[g])
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p)
            && self
                .ctx
                .generators()
                .iter()
                .all(|g| self.images[g] == Element::gen(self.ctx, *g))
    }

    fn disagreement(&self, other: &GeneratorMap) -> String {
        for g in self.ctx.generators() {
            if self.images[&g] != other.images[&g] {
                return format!(
                    "{}: {} vs {}",
                    fmt_gen(self.ctx, g),
                    self.images[&g],
                    other.images[&g]
                );
            }
        }
        "weight permutation or orientation differs".into()
    }
}

/// Checks that every defining relation is mapped to a valid identity.
pub fn verify_morphism(map: &GeneratorMap) -> Result<Report> {
    let ctx = map.ctx();
    let mut report = Report::new();
    for rel in defining_relations(ctx) {
        let lhs = map.apply_free(&rel.lhs)?;
        let rhs = map.apply_free(&rel.rhs)?;
        report.push(Check::expect(
            format!("{} preserves {}", map.label(), rel.name),
            lhs == rhs,
            || format!("{}", &lhs - &rhs),
        ));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Zhelobenko,
    Sn,
}

/// Braid and distant-commutation relations, plus `s_i² = id` for `S_n`.
/// For the Zhelobenko maps it also records that `q̌_i²` is not the identity.
pub fn verify_group_relations(kind: GroupKind, ctx: RingCtx) -> Result<Report> {
    let n = ctx.n();
    let build = |i| match kind {
        GroupKind::Zhelobenko => GeneratorMap::build(MapKind::Zhelobenko(i), ctx),
        GroupKind::Sn => GeneratorMap::build(MapKind::Sn(i), ctx),
    };
    let maps: Vec<GeneratorMap> = (1..n).map(build).collect::<Result<_>>()?;
    let mut report = Report::new();
    for (k, m) in maps.iter().enumerate() {
        let i = k + 1;
        let sq = m.compose(m)?;
        match kind {
            GroupKind::Sn => report.push(Check::expect(
                format!("s{i} squared is identity"),
                sq.is_identity(),
                || sq.disagreement(&GeneratorMap::from_images(ctx, "id", false, HashMap::new(), (0..=n).collect()).expect("identity")),
            )),
            GroupKind::Zhelobenko => report.push(Check::expect(
                format!("q{i} squared is not identity"),
                !sq.is_identity(),
                || "q̌_i² acts trivially".into(),
            )),
        }
    }
    for k in 0..maps.len() {
        for l in k + 1..maps.len() {
            let (a, b) = (&maps[k], &maps[l]);
            let (i, j) = (k + 1, l + 1);
            if l == k + 1 {
                let lhs = a.compose(b)?.compose(a)?;
                let rhs = b.compose(a)?.compose(b)?;
                report.push(Check::expect(
                    format!("braid {i}{j}"),
                    lhs.agrees_with(&rhs),
                    || lhs.disagreement(&rhs),
                ));
            } else {
                let lhs = a.compose(b)?;
                let rhs = b.compose(a)?;
                report.push(Check::expect(
                    format!("commute {i}{j}"),
                    lhs.agrees_with(&rhs),
                    || lhs.disagreement(&rhs),
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_images() {
        let ctx = RingCtx::single(2).unwrap();
        let h = RatFunc::hij(1, 2);
        let one = RatFunc::one();
        let q = GeneratorMap::build(MapKind::Zhelobenko(1), ctx).unwrap();
        let z2 = Element::z(ctx, 2).unwrap();
        // −Z^2·h/(h−1) with the coefficient moved left: −((h+1)/h) Z^2
        assert_eq!(q.image(Gen::z(1)), &z2.scale_left(&-(&(&h + &one) / &h)));
        let e = GeneratorMap::build(MapKind::Epsilon, ctx).unwrap();
        assert_eq!(
            e.image(Gen::d(1)),
            &Element::z(ctx, 1).unwrap().scale_left(&(&h / &(&h - &one)))
        );
        let ctx2 = RingCtx::new(2, 2).unwrap();
        let s = GeneratorMap::build(MapKind::Sn(1), ctx2).unwrap();
        let z22 = Element::z_copy(ctx2, 2, 2).unwrap();
        assert_eq!(
            s.image(Gen::new(GenKind::Z, 1, 2)),
            &z22.scale_left(&-(&h + &one))
        );
    }

    #[test]
    fn out_of_scope_requests() {
        let ctx = RingCtx::new(2, 2).unwrap();
        assert!(matches!(
            GeneratorMap::build(MapKind::Epsilon, ctx),
            Err(Error::Unsupported(_))
        ));
        assert!(GeneratorMap::build(MapKind::Sn(2), ctx).is_err());
    }
}
