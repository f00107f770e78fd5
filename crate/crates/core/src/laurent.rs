//! Twisted Laurent polynomials `Σ f(w; central) · X^b`, `b ∈ Z^n`, where the
//! monomials translate the weights: `X^p f(w) = f(w − p) X^p`.
//!
//! The same shape models both localized rings: weights `H`, centrals `a`
//! and monomials `X` on the Weyl side, weights `h̃`, centrals `c` and
//! monomials `Z′°` on the `Diff_h` side.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;
use smallvec::SmallVec;

use crate::coeff::{RatFunc, ShiftVector, Var, VarKind};
use crate::error::{check_index, Error, Result};

/// Which family of variables a Laurent model uses.
pub trait Model: Clone + fmt::Debug + PartialEq + Eq + 'static {
    const WEIGHT: VarKind;
    const CENTRAL: VarKind;
    const MONOMIAL: &'static str;
    const NAME: &'static str;
}

/// Weyl side: `H_i`, `a_k`, `X^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weyl;

/// `Diff_h` side: `h̃_i`, `c_k`, `Z′°^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loc;

impl Model for Weyl {
    const WEIGHT: VarKind = VarKind::WeylH;
    const CENTRAL: VarKind = VarKind::WeylA;
    const MONOMIAL: &'static str = "X";
    const NAME: &'static str = "Weyl model";
}

impl Model for Loc {
    const WEIGHT: VarKind = VarKind::HTilde;
    const CENTRAL: VarKind = VarKind::Central;
    const MONOMIAL: &'static str = "Zo";
    const NAME: &'static str = "localized model";
}

pub type Exponent = SmallVec<[i64; 4]>;

#[derive(Clone, PartialEq, Eq)]
pub struct Laurent<M: Model> {
    n: usize,
    terms: BTreeMap<Exponent, RatFunc>,
    model: PhantomData<M>,
}

pub type WeylElement = Laurent<Weyl>;
pub type LocElement = Laurent<Loc>;

fn add_term(terms: &mut BTreeMap<Exponent, RatFunc>, b: Exponent, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(b) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl<M: Model> Laurent<M> {
    fn from_terms(n: usize, terms: BTreeMap<Exponent, RatFunc>) -> Laurent<M> {
        Laurent {
            n,
            terms,
            model: PhantomData,
        }
    }

    pub fn zero(n: usize) -> Laurent<M> {
        Laurent::from_terms(n, BTreeMap::new())
    }

    pub fn one(n: usize) -> Laurent<M> {
        Laurent::scalar(n, RatFunc::one())
    }

    pub fn scalar(n: usize, f: RatFunc) -> Laurent<M> {
        Laurent::term(n, f, SmallVec::from_elem(0, n))
    }

    /// `f · X^b`.
    pub fn term(n: usize, f: RatFunc, b: Exponent) -> Laurent<M> {
        assert_eq!(b.len(), n, "exponent length");
        let mut terms = BTreeMap::new();
        add_term(&mut terms, b, f);
        Laurent::from_terms(n, terms)
    }

    pub fn unit_exponent(n: usize, i: usize, e: i64) -> Exponent {
        let mut b: Exponent = SmallVec::from_elem(0, n);
        b[i - 1] = e;
        b
    }

    pub fn weight_var(i: usize) -> RatFunc {
        RatFunc::var(Var::new(M::WEIGHT, i as u8))
    }

    pub fn central_var(k: usize) -> RatFunc {
        RatFunc::var(Var::new(M::CENTRAL, k as u8))
    }

    /// The monomial generator `X^i` (or `Z′°^i`).
    pub fn x(n: usize, i: usize) -> Result<Laurent<M>> {
        check_index("i", i, 1, n)?;
        Ok(Laurent::term(n, RatFunc::one(), Laurent::<M>::unit_exponent(n, i, 1)))
    }

    /// The weight `H_i` (or `h̃_i`) as an element.
    pub fn weight(n: usize, i: usize) -> Result<Laurent<M>> {
        check_index("i", i, 1, n)?;
        Ok(Laurent::scalar(n, Self::weight_var(i)))
    }

    pub fn central(n: usize, k: usize) -> Result<Laurent<M>> {
        check_index("k", k, 1, n)?;
        Ok(Laurent::scalar(n, Self::central_var(k)))
    }

    /// `D_i = H_i · X^{−e_i}`, so that `D_i X^i = H_i`.
    pub fn d(n: usize, i: usize) -> Result<Laurent<M>> {
        check_index("i", i, 1, n)?;
        Ok(Laurent::term(n, Self::weight_var(i), Laurent::<M>::unit_exponent(n, i, -1)))
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &[i64]) -> RatFunc {
        self.terms.get(b).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => {
                let (b, f) = self.terms.iter().next()?;
                b.iter().all(|&e| e == 0).then(|| f.clone())
            }
            _ => None,
        }
    }

    fn ensure_same(&self, other: &Laurent<M>) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                format!("{} n={}", M::NAME, self.n),
                format!("{} n={}", M::NAME, other.n),
            ))
        }
    }

    fn shift_for(b: &[i64]) -> ShiftVector {
        ShiftVector::from_offsets(b.iter().map(|e| -e).collect())
    }

    /// `X^b f = f[−b] X^b`.
    fn move_left(f: &RatFunc, b: &[i64]) -> RatFunc {
        f.shift_kind(M::WEIGHT, &Self::shift_for(b))
    }

    pub fn try_add(&self, other: &Laurent<M>) -> Result<Laurent<M>> {
        self.ensure_same(other)?;
        let mut terms = self.terms.clone();
        for (b, f) in &other.terms {
            add_term(&mut terms, b.clone(), f.clone());
        }
        Ok(Laurent::from_terms(self.n, terms))
    }

    pub fn try_sub(&self, other: &Laurent<M>) -> Result<Laurent<M>> {
        self.try_add(&-other)
    }

    /// `(c X^p)(d X^q) = c · d(w − p) · X^{p+q}`.
    pub fn product(&self, other: &Laurent<M>) -> Result<Laurent<M>> {
        self.ensure_same(other)?;
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                let b: Exponent = p.iter().zip(q.iter()).map(|(x, y)| x + y).collect();
                add_term(&mut terms, b, c * &Self::move_left(d, p));
            }
        }
        Ok(Laurent::from_terms(self.n, terms))
    }

    pub fn commutator(&self, other: &Laurent<M>) -> Result<Laurent<M>> {
        self.product(other)?.try_sub(&other.product(self)?)
    }

    pub fn scale_left(&self, f: &RatFunc) -> Laurent<M> {
        self.map_coefficients(|c| f * c)
    }

    pub fn scale_right(&self, f: &RatFunc) -> Laurent<M> {
        let mut terms = BTreeMap::new();
        for (b, c) in &self.terms {
            add_term(&mut terms, b.clone(), c * &Self::move_left(f, b));
        }
        Laurent::from_terms(self.n, terms)
    }

    pub fn map_coefficients(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Laurent<M> {
        let mut terms = BTreeMap::new();
        for (b, c) in &self.terms {
            add_term(&mut terms, b.clone(), f(c));
        }
        Laurent::from_terms(self.n, terms)
    }

    /// Inverse of a single term `c X^e`: `c^{−1}(w + e) X^{−e}`.
    pub fn inverse(&self) -> Result<Laurent<M>> {
        if self.terms.len() != 1 {
            return Err(Error::Unsupported(format!(
                "only single terms are invertible here, got {self}"
            )));
        }
        let (e, c) = self.terms.iter().next().expect("one term");
        let neg: Exponent = e.iter().map(|x| -x).collect();
        let inv = Self::move_left(&c.inv()?, &neg);
        Ok(Laurent::term(self.n, inv, neg))
    }

    /// Integer power; negative powers need a single-term base.
    pub fn pow(&self, e: i64) -> Result<Laurent<M>> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Laurent::one(self.n);
        for _ in 0..e.unsigned_abs() {
            acc = acc.product(&base)?;
        }
        Ok(acc)
    }

    /// Relabels into another model: weights, centrals and monomials are
    /// carried over index by index.
    pub fn relabel<N: Model>(&self) -> Laurent<N> {
        let map = |v: Var| {
            if v.kind() == M::WEIGHT {
                v.with_kind(N::WEIGHT)
            } else if v.kind() == M::CENTRAL {
                v.with_kind(N::CENTRAL)
            } else {
                v
            }
        };
        let mut terms = BTreeMap::new();
        for (b, c) in &self.terms {
            add_term(&mut terms, b.clone(), c.rename(map));
        }
        Laurent::from_terms(self.n, terms)
    }
}

impl<M: Model> Neg for &Laurent<M> {
    type Output = Laurent<M>;
    fn neg(self) -> Laurent<M> {
        self.map_coefficients(|c| -c)
    }
}

impl<M: Model> Add for &Laurent<M> {
    type Output = Laurent<M>;
    fn add(self, rhs: &Laurent<M>) -> Laurent<M> {
        self.try_add(rhs).expect("size mismatch")
    }
}

impl<M: Model> Sub for &Laurent<M> {
    type Output = Laurent<M>;
    fn sub(self, rhs: &Laurent<M>) -> Laurent<M> {
        self.try_sub(rhs).expect("size mismatch")
    }
}

impl<M: Model> Mul for &Laurent<M> {
    type Output = Laurent<M>;
    fn mul(self, rhs: &Laurent<M>) -> Laurent<M> {
        self.product(rhs).expect("size mismatch")
    }
}

fn fmt_monomial(sym: &str, b: &[i64]) -> String {
    let mut parts = Vec::new();
    for (k, &e) in b.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("{sym}[{}]", k + 1)),
            _ => parts.push(format!("{sym}[{}]^({e})", k + 1)),
        }
    }
    parts.join("*")
}

impl<M: Model> fmt::Display for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().rev().enumerate() {
            let neg = c
                .numerator()
                .leading()
                .map(|(_, q)| q.is_negative())
                .unwrap_or(false);
            let a = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = fmt_monomial(M::MONOMIAL, b);
            let coef = if a.denominator().is_one() && a.numerator().len() > 1 {
                format!("({a})")
            } else {
                a.to_string()
            };
            if mono.is_empty() {
                write!(f, "{coef}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coef}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<M: Model> fmt::Debug for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({self})", M::NAME)
    }
}

/// One factor of a written product in a Laurent model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LFactor {
    X(usize),
    D(usize),
    Coef(RatFunc),
}

/// A relation in a Laurent model with factors kept in written order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRelation {
    pub name: String,
    pub lhs: Vec<Vec<LFactor>>,
    pub rhs: Vec<Vec<LFactor>>,
}

/// Evaluates a written sum of products through a factor interpretation.
pub fn eval_written<M: Model>(
    n: usize,
    sum: &[Vec<LFactor>],
    interp: &dyn Fn(&LFactor) -> Result<Laurent<M>>,
) -> Result<Laurent<M>> {
    let mut total = Laurent::zero(n);
    for product in sum {
        let mut acc = Laurent::one(n);
        for f in product {
            acc = acc.product(&interp(f)?)?;
        }
        total = total.try_add(&acc)?;
    }
    Ok(total)
}

/// The standard interpretation of factors inside model `M`.
pub fn standard_interp<M: Model>(n: usize) -> impl Fn(&LFactor) -> Result<Laurent<M>> {
    move |f| match f {
        LFactor::X(i) => Laurent::x(n, *i),
        LFactor::D(i) => Laurent::d(n, *i),
        LFactor::Coef(c) => Ok(Laurent::scalar(n, c.clone())),
    }
}

/// Relations of the generating set `{w_i, X^i, central_k}`: weights commute,
/// `w_i X^j = X^j (w_i + δ_i^j)`, the `X`s commute, centrals commute with
/// all generators.
pub fn generating_set_relations<M: Model>(n: usize) -> Vec<LRelation> {
    let w = Laurent::<M>::weight_var;
    let a = Laurent::<M>::central_var;
    let c = |f: RatFunc| LFactor::Coef(f);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                out.push(LRelation {
                    name: format!("weights commute {i}{j}"),
                    lhs: vec![vec![c(w(i)), c(w(j))]],
                    rhs: vec![vec![c(w(j)), c(w(i))]],
                });
                out.push(LRelation {
                    name: format!("monomials commute {i}{j}"),
                    lhs: vec![vec![LFactor::X(i), LFactor::X(j)]],
                    rhs: vec![vec![LFactor::X(j), LFactor::X(i)]],
                });
            }
            let delta = RatFunc::int(if i == j { 1 } else { 0 });
            out.push(LRelation {
                name: format!("weight shift {i}{j}"),
                lhs: vec![vec![c(w(i)), LFactor::X(j)]],
                rhs: vec![vec![LFactor::X(j), c(&w(i) + &delta)]],
            });
        }
        for k in 1..=n {
            out.push(LRelation {
                name: format!("central {k} with monomial {i}"),
                lhs: vec![vec![c(a(k)), LFactor::X(i)]],
                rhs: vec![vec![LFactor::X(i), c(a(k))]],
            });
            out.push(LRelation {
                name: format!("central {k} with weight {i}"),
                lhs: vec![vec![c(a(k)), c(w(i))]],
                rhs: vec![vec![c(w(i)), c(a(k))]],
            });
        }
    }
    out
}

/// The Weyl algebra presentation `[X^i, X^j] = 0`, `[D_i, D_j] = 0`,
/// `D_i X^j = δ_i^j + X^j D_i`.
pub fn weyl_algebra_relations(n: usize) -> Vec<LRelation> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                out.push(LRelation {
                    name: format!("XX {i}{j}"),
                    lhs: vec![vec![LFactor::X(i), LFactor::X(j)]],
                    rhs: vec![vec![LFactor::X(j), LFactor::X(i)]],
                });
                out.push(LRelation {
                    name: format!("DD {i}{j}"),
                    lhs: vec![vec![LFactor::D(i), LFactor::D(j)]],
                    rhs: vec![vec![LFactor::D(j), LFactor::D(i)]],
                });
            }
            let mut rhs = vec![vec![LFactor::X(j), LFactor::D(i)]];
            if i == j {
                rhs.push(vec![]);
            }
            out.push(LRelation {
                name: format!("DX {i}{j}"),
                lhs: vec![vec![LFactor::D(i), LFactor::X(j)]],
                rhs,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type W = WeylElement;

    #[test]
    fn weyl_basics() {
        let n = 2;
        let x1 = W::x(n, 1).unwrap();
        let d1 = W::d(n, 1).unwrap();
        let h1 = W::weight(n, 1).unwrap();
        assert_eq!(&d1 * &x1, h1);
        assert_eq!(&(&d1 * &x1) - &(&x1 * &d1), W::one(n));
        let hx = &h1 * &x1;
        let want = W::term(
            n,
            &W::weight_var(1) * &(&W::weight_var(1) - &RatFunc::one()),
            W::unit_exponent(n, 1, 2),
        );
        assert_eq!(&hx * &hx, want);
        let inv = hx.inverse().unwrap();
        assert_eq!(&hx * &inv, W::one(n));
        assert_eq!(&inv * &hx, W::one(n));
    }

    #[test]
    fn presentations_hold() {
        for n in 1..=3 {
            let interp = standard_interp::<Weyl>(n);
            for rel in weyl_algebra_relations(n).iter().chain(generating_set_relations::<Weyl>(n).iter()) {
                let l = eval_written(n, &rel.lhs, &interp).unwrap();
                let r = eval_written(n, &rel.rhs, &interp).unwrap();
                assert_eq!(l, r, "{}", rel.name);
            }
        }
    }
}
