use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::coeff::RatFunc;
use crate::error::Result;

use super::gen::{Gen, GenKind, NormalMonomial, RingCtx};
use super::rules::{add_term, lmul_gen_terms, mono_mul, word_terms, Terms};

/// An element of `Diff_h(n, N)` in normal form: `Σ f_m(h̃) · m` with
/// coefficients on the left and `m` a normal monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    ctx: RingCtx,
    terms: Terms,
}

impl Element {
    pub(crate) fn from_terms(ctx: RingCtx, terms: Terms) -> Element {
        Element { ctx, terms }
    }

    pub fn zero(ctx: RingCtx) -> Element {
        Element::from_terms(ctx, Terms::new())
    }

    pub fn one(ctx: RingCtx) -> Element {
        Element::scalar(ctx, RatFunc::one())
    }

    pub fn scalar(ctx: RingCtx, f: RatFunc) -> Element {
        let mut terms = Terms::new();
        add_term(&mut terms, NormalMonomial::one(ctx), f);
        Element::from_terms(ctx, terms)
    }

    pub fn term(ctx: RingCtx, f: RatFunc, m: NormalMonomial) -> Element {
        let mut terms = Terms::new();
        add_term(&mut terms, m, f);
        Element::from_terms(ctx, terms)
    }

    /// The weight coordinate `h̃_i` as a ring element.
    pub fn h(ctx: RingCtx, i: usize) -> Result<Element> {
        crate::error::check_index("i", i, 1, ctx.n())?;
        Ok(Element::scalar(ctx, RatFunc::h(i)))
    }

    pub fn gen(ctx: RingCtx, g: Gen) -> Element {
        Element::term(ctx, RatFunc::one(), NormalMonomial::one(ctx).with(ctx, g))
    }

    pub fn z(ctx: RingCtx, site: usize) -> Result<Element> {
        Ok(Element::gen(ctx, ctx.gen(GenKind::Z, site, 1)?))
    }

    pub fn d(ctx: RingCtx, site: usize) -> Result<Element> {
        Ok(Element::gen(ctx, ctx.gen(GenKind::D, site, 1)?))
    }

    pub fn z_copy(ctx: RingCtx, site: usize, copy: usize) -> Result<Element> {
        Ok(Element::gen(ctx, ctx.gen(GenKind::Z, site, copy)?))
    }

    pub fn d_copy(ctx: RingCtx, site: usize, copy: usize) -> Result<Element> {
        Ok(Element::gen(ctx, ctx.gen(GenKind::D, site, copy)?))
    }

    /// Normal form of a word of generators.
    pub fn word(ctx: RingCtx, word: &[Gen]) -> Element {
        Element::from_terms(ctx, word_terms(ctx, word))
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NormalMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &NormalMonomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The coefficient when the element is a pure scalar.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => {
                let (m, f) = self.terms.iter().next()?;
                m.is_one().then(|| f.clone())
            }
            _ => None,
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut terms = self.terms.clone();
        for (m, f) in &other.terms {
            add_term(&mut terms, m.clone(), f.clone());
        }
        Ok(Element::from_terms(self.ctx, terms))
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.try_add(&-other)
    }

    /// The product `self · other` in normal form.
    pub fn product(&self, other: &Element) -> Result<Element> {
        self.ctx.ensure_same(&other.ctx)?;
        let ctx = self.ctx;
        let mut out = Terms::new();
        for (m1, f1) in &self.terms {
            let delta = m1.shift(ctx);
            for (m2, f2) in &other.terms {
                let f = f1 * &f2.shift(&delta);
                for (m, c) in mono_mul(ctx, m1, m2) {
                    add_term(&mut out, m, &f * &c);
                }
            }
        }
        Ok(Element::from_terms(ctx, out))
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Element) -> Result<Element> {
        self.product(other)?.try_sub(&other.product(self)?)
    }

    /// `f · self`.
    pub fn scale_left(&self, f: &RatFunc) -> Element {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), f * c);
        }
        Element::from_terms(self.ctx, terms)
    }

    /// `self · f`, moving `f` left through each monomial.
    pub fn scale_right(&self, f: &RatFunc) -> Element {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), c * &f.shift(&m.shift(self.ctx)));
        }
        Element::from_terms(self.ctx, terms)
    }

    /// `g · self`.
    pub fn lmul_gen(&self, g: Gen) -> Element {
        Element::from_terms(self.ctx, lmul_gen_terms(self.ctx, g, &self.terms))
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut acc = Element::one(self.ctx);
        for _ in 0..e {
            acc = acc.product(self).expect("same context");
        }
        acc
    }

    /// Applies `f` to every coefficient, keeping the monomials.
    pub fn map_coefficients(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Element {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), f(c));
        }
        Element::from_terms(self.ctx, terms)
    }

    /// Largest monomial degree, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Exact equality after normal ordering (both sides already are).
    pub fn equals(&self, other: &Element) -> bool {
        self == other
    }

    pub fn into_terms(self) -> BTreeMap<NormalMonomial, RatFunc> {
        self.terms
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.map_coefficients(|c| -c)
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Panics on context mismatch; use `try_add` for a fallible version.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("context mismatch")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("context mismatch")
    }
}

/// Panics on context mismatch; use `product` for a fallible version.
impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.product(rhs).expect("context mismatch")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn fmt_coefficient(c: &RatFunc) -> String {
    // a fraction already brackets a compound numerator and denominator
    if c.denominator().is_one() && c.numerator().len() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

fn leading_negative(c: &RatFunc) -> bool {
    c.numerator()
        .leading()
        .map(|(_, q)| q.is_negative())
        .unwrap_or(false)
}

impl fmt::Display for Element {
    /// Terms in descending monomial order, each as `coefficient*word`.
    /// The output parses back to the same element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = leading_negative(c);
            let a = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word = m.fmt_word(self.ctx);
            if m.is_one() {
                if a.numerator().len() > 1 {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
            } else if a.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{}*{word}", fmt_coefficient(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.ctx, self)
    }
}
