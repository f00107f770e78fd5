//! Relations as pairs of free (unnormalized) expressions, so that maps can
//! be applied to each written factor before multiplying out.

use std::fmt;

use crate::coeff::{RatFunc, ShiftVector};
use crate::error::Result;

use super::element::Element;
use super::gen::{fmt_gen, Gen, GenKind, RingCtx};
use super::rmatrix::rhat;
use super::rules::{add_term, lmul_gen_terms, Terms};

/// One factor of a written product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Gen(Gen),
    Coef(RatFunc),
}

/// A sum of written products, factors kept in the order they were written.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeExpr {
    terms: Vec<Vec<Factor>>,
}

impl FreeExpr {
    pub fn zero() -> FreeExpr {
        FreeExpr::default()
    }

    pub fn product(factors: Vec<Factor>) -> FreeExpr {
        FreeExpr {
            terms: vec![factors],
        }
    }

    pub fn scalar(f: RatFunc) -> FreeExpr {
        FreeExpr::product(vec![Factor::Coef(f)])
    }

    /// `coef · g_1 ⋯ g_k` with the coefficient written on the left.
    pub fn term(coef: RatFunc, gens: &[Gen]) -> FreeExpr {
        let mut f = vec![Factor::Coef(coef)];
        f.extend(gens.iter().map(|g| Factor::Gen(*g)));
        FreeExpr::product(f)
    }

    pub fn word(gens: &[Gen]) -> FreeExpr {
        FreeExpr::product(gens.iter().map(|g| Factor::Gen(*g)).collect())
    }

    pub fn plus(mut self, other: FreeExpr) -> FreeExpr {
        self.terms.extend(other.terms);
        self
    }

    pub fn terms(&self) -> &[Vec<Factor>] {
        &self.terms
    }

    /// Normal form in `Diff_h(n, N)`.
    pub fn eval(&self, ctx: RingCtx) -> Element {
        let mut out = Terms::new();
        for product in &self.terms {
            let mut t = Terms::new();
            t.insert(super::gen::NormalMonomial::one(ctx), RatFunc::one());
            for f in product.iter().rev() {
                t = match f {
                    Factor::Gen(g) => lmul_gen_terms(ctx, *g, &t),
                    Factor::Coef(c) => t.into_iter().map(|(m, x)| (m, c * &x)).collect(),
                };
            }
            for (m, c) in t {
                add_term(&mut out, m, c);
            }
        }
        Element::from_terms(ctx, out)
    }

    /// Substitutes each factor and multiplies out, in reverse order when
    /// `reverse` is set (anti-homomorphisms).
    pub fn map_eval(
        &self,
        ctx: RingCtx,
        gen_image: &dyn Fn(Gen) -> Result<Element>,
        coef_image: &dyn Fn(&RatFunc) -> RatFunc,
        reverse: bool,
    ) -> Result<Element> {
        let mut total = Element::zero(ctx);
        for product in &self.terms {
            let mut acc = Element::one(ctx);
            let ordered: Box<dyn Iterator<Item = &Factor>> = if reverse {
                Box::new(product.iter().rev())
            } else {
                Box::new(product.iter())
            };
            for f in ordered {
                acc = match f {
                    Factor::Gen(g) => acc.product(&gen_image(*g)?)?,
                    Factor::Coef(c) => acc.scale_right(&coef_image(c)),
                };
            }
            total = total.try_add(&acc)?;
        }
        Ok(total)
    }

    pub fn fmt_with(&self, ctx: RingCtx) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|p| {
                if p.is_empty() {
                    return "1".to_string();
                }
                p.iter()
                    .map(|f| match f {
                        Factor::Gen(g) => fmt_gen(ctx, *g),
                        Factor::Coef(c) => format!("({c})"),
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A relation `lhs = rhs` with a short descriptive name.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: FreeExpr,
    pub rhs: FreeExpr,
}

impl Relation {
    pub fn new(name: impl Into<String>, lhs: FreeExpr, rhs: FreeExpr) -> Relation {
        Relation {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    /// `lhs − rhs` in normal form.
    pub fn defect(&self, ctx: RingCtx) -> Element {
        &self.lhs.eval(ctx) - &self.rhs.eval(ctx)
    }

    pub fn holds(&self, ctx: RingCtx) -> bool {
        self.defect(ctx).is_zero()
    }

    pub fn display(&self, ctx: RingCtx) -> impl fmt::Display + '_ {
        struct D<'a>(&'a Relation, RingCtx);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(
                    f,
                    "{}: {} = {}",
                    self.0.name,
                    self.0.lhs.fmt_with(self.1),
                    self.0.rhs.fmt_with(self.1)
                )
            }
        }
        D(self, ctx)
    }
}

fn h(i: usize) -> RatFunc {
    RatFunc::h(i)
}

fn hij(i: usize, j: usize) -> RatFunc {
    RatFunc::hij(i, j)
}

fn inv(f: RatFunc) -> RatFunc {
    f.inv().expect("nonzero")
}

fn z(i: usize, a: usize) -> Gen {
    Gen::new(GenKind::Z, i, a)
}

fn d(i: usize, a: usize) -> Gen {
    Gen::new(GenKind::D, i, a)
}

/// Copy-aware label of a generator, for relation names.
fn label(ctx: RingCtx, g: Gen) -> String {
    fmt_gen(ctx, g)
}

/// The bimodule relations `h̃_i g = g (h̃_i ± δ_i^j)`.
pub fn weight_relations(ctx: RingCtx) -> Vec<Relation> {
    let mut out = Vec::new();
    for g in ctx.generators() {
        for i in 1..=ctx.n() {
            let delta = if g.site() == i {
                if g.is_z() {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            out.push(Relation::new(
                format!("weight h[{i}] {}", label(ctx, g)),
                FreeExpr::product(vec![Factor::Coef(h(i)), Factor::Gen(g)]),
                FreeExpr::product(vec![Factor::Gen(g), Factor::Coef(&h(i) + &RatFunc::int(delta))]),
            ));
        }
    }
    out
}

/// Component relations of `Diff_h(n)` as printed for one copy.
pub fn single_copy_component_relations(ctx: RingCtx) -> Vec<Relation> {
    let n = ctx.n();
    let one = RatFunc::one;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Relation::new(
                format!("ZZ {i}{j}"),
                FreeExpr::word(&[z(i, 1), z(j, 1)]),
                FreeExpr::term(&(&hij(i, j) + &one()) / &hij(i, j), &[z(j, 1), z(i, 1)]),
            ));
            out.push(Relation::new(
                format!("dd {i}{j}"),
                FreeExpr::word(&[d(i, 1), d(j, 1)]),
                FreeExpr::term(&(&hij(i, j) - &one()) / &hij(i, j), &[d(j, 1), d(i, 1)]),
            ));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let c = if i < j {
                one()
            } else {
                let x = hij(i, j);
                &(&x * &(&x - &RatFunc::int(2))) / &(&(&x - &one()) * &(&x - &one()))
            };
            out.push(Relation::new(
                format!("Zd {i}{j}"),
                FreeExpr::word(&[z(i, 1), d(j, 1)]),
                FreeExpr::term(c, &[d(j, 1), z(i, 1)]),
            ));
        }
    }
    for i in 1..=n {
        let mut rhs = FreeExpr::scalar(RatFunc::int(-1));
        for j in 1..=n {
            let c = inv(&one() - &hij(i, j));
            rhs = rhs.plus(FreeExpr::term(c, &[d(j, 1), z(j, 1)]));
        }
        out.push(Relation::new(
            format!("Zd {i}{i}"),
            FreeExpr::word(&[z(i, 1), d(i, 1)]),
            rhs,
        ));
    }
    out
}

/// Component relations of `Diff_h(n, N)` for all copy pairs, both printed
/// forms of each pair relation, plus same-site copy commutation.
pub fn multi_copy_component_relations(ctx: RingCtx) -> Vec<Relation> {
    let n = ctx.n();
    let copies = ctx.copies();
    let one = RatFunc::one;
    let mut out = Vec::new();
    for a in 1..=copies {
        for b in 1..=copies {
            let tag = format!("{a}{b}");
            for i in 1..=n {
                for j in i + 1..=n {
                    let x = hij(i, j);
                    let x2m1 = &(&(&x * &x) - &one()) / &(&x * &x);
                    let ix = inv(x.clone());
                    out.push(Relation::new(
                        format!("ZZ {i}{j} copies {tag} first"),
                        FreeExpr::word(&[z(i, a), z(j, b)]),
                        FreeExpr::term(ix.clone(), &[z(i, b), z(j, a)])
                            .plus(FreeExpr::term(x2m1.clone(), &[z(j, b), z(i, a)])),
                    ));
                    out.push(Relation::new(
                        format!("ZZ {i}{j} copies {tag} second"),
                        FreeExpr::word(&[z(j, a), z(i, b)]),
                        FreeExpr::term(-&ix, &[z(j, b), z(i, a)])
                            .plus(FreeExpr::word(&[z(i, b), z(j, a)])),
                    ));
                    out.push(Relation::new(
                        format!("dd {i}{j} copies {tag} first"),
                        FreeExpr::word(&[d(i, a), d(j, b)]),
                        FreeExpr::term(-&ix, &[d(i, b), d(j, a)])
                            .plus(FreeExpr::term(x2m1, &[d(j, b), d(i, a)])),
                    ));
                    out.push(Relation::new(
                        format!("dd {i}{j} copies {tag} second"),
                        FreeExpr::word(&[d(j, a), d(i, b)]),
                        FreeExpr::term(ix, &[d(j, b), d(i, a)])
                            .plus(FreeExpr::word(&[d(i, b), d(j, a)])),
                    ));
                    out.push(Relation::new(
                        format!("Zd {i}{j} copies {tag}"),
                        FreeExpr::word(&[z(i, a), d(j, b)]),
                        FreeExpr::word(&[d(j, b), z(i, a)]),
                    ));
                    let c = &(&x * &(&x + &RatFunc::int(2))) / &(&(&x + &one()) * &(&x + &one()));
                    out.push(Relation::new(
                        format!("Zd {j}{i} copies {tag}"),
                        FreeExpr::word(&[z(j, a), d(i, b)]),
                        FreeExpr::term(c, &[d(i, b), z(j, a)]),
                    ));
                }
            }
            for i in 1..=n {
                let mut rhs = if a == b {
                    FreeExpr::scalar(RatFunc::int(-1))
                } else {
                    FreeExpr::zero()
                };
                for k in 1..=n {
                    rhs = rhs.plus(FreeExpr::term(inv(&one() - &hij(i, k)), &[d(k, b), z(k, a)]));
                }
                out.push(Relation::new(
                    format!("Zd {i}{i} copies {tag}"),
                    FreeExpr::word(&[z(i, a), d(i, b)]),
                    rhs,
                ));
            }
        }
    }
    for i in 1..=n {
        for a in 1..=copies {
            for b in a + 1..=copies {
                out.push(Relation::new(
                    format!("ZZ {i}{i} copies {a}{b}"),
                    FreeExpr::word(&[z(i, a), z(i, b)]),
                    FreeExpr::word(&[z(i, b), z(i, a)]),
                ));
                out.push(Relation::new(
                    format!("dd {i}{i} copies {a}{b}"),
                    FreeExpr::word(&[d(i, a), d(i, b)]),
                    FreeExpr::word(&[d(i, b), d(i, a)]),
                ));
            }
        }
    }
    out
}

/// The defining relations of the context: bimodule relations plus the
/// component relations (single-copy form for `N = 1`).
pub fn defining_relations(ctx: RingCtx) -> Vec<Relation> {
    let mut out = weight_relations(ctx);
    if ctx.copies() == 1 {
        out.extend(single_copy_component_relations(ctx));
    } else {
        out.extend(multi_copy_component_relations(ctx));
    }
    out
}

/// The relations in R-matrix form:
/// `Z^{i,α}Z^{j,β} = Σ R̂^{ij}_{kl} Z^{k,β}Z^{l,α}`,
/// `∂_{i,α}∂_{j,β} = Σ R̂^{lk}_{ji} ∂_{k,β}∂_{l,α}`,
/// `Z^{i,α}∂_{j,β} = Σ R̂^{ki}_{lj}[ε_k] ∂_{k,β}Z^{l,α} − δ^α_β δ^i_j`.
pub fn rmatrix_relations(ctx: RingCtx) -> Result<Vec<Relation>> {
    let n = ctx.n();
    let copies = ctx.copies();
    let mut out = Vec::new();
    for a in 1..=copies {
        for b in 1..=copies {
            for i in 1..=n {
                for j in 1..=n {
                    let mut zz = FreeExpr::zero();
                    let mut dd = FreeExpr::zero();
                    let mut zd = if a == b && i == j {
                        FreeExpr::scalar(RatFunc::int(-1))
                    } else {
                        FreeExpr::zero()
                    };
                    for k in 1..=n {
                        for l in 1..=n {
                            let r = rhat(i, j, k, l, n)?;
                            if !r.is_zero() {
                                zz = zz.plus(FreeExpr::term(r, &[z(k, b), z(l, a)]));
                            }
                            let r = rhat(l, k, j, i, n)?;
                            if !r.is_zero() {
                                dd = dd.plus(FreeExpr::term(r, &[d(k, b), d(l, a)]));
                            }
                            let r = rhat(k, i, l, j, n)?.shift(&ShiftVector::unit(k, n, 1));
                            if !r.is_zero() {
                                zd = zd.plus(FreeExpr::term(r, &[d(k, b), z(l, a)]));
                            }
                        }
                    }
                    let tag = format!("{i}{j} copies {a}{b}");
                    out.push(Relation::new(format!("R-form ZZ {tag}"), FreeExpr::word(&[z(i, a), z(j, b)]), zz));
                    out.push(Relation::new(format!("R-form dd {tag}"), FreeExpr::word(&[d(i, a), d(j, b)]), dd));
                    out.push(Relation::new(format!("R-form Zd {tag}"), FreeExpr::word(&[z(i, a), d(j, b)]), zd));
                }
            }
        }
    }
    Ok(out)
}
