//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are ordered graded-lexicographically with a fixed global
//! variable order (`Var` ordering: a smaller `Var` is a "larger" variable,
//! so `h[1] > h[2] > ...`). The leading term is the grlex-largest monomial,
//! which is what `RatFunc` uses to normalize denominators.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

/// Family a variable belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum VarKind {
    /// Weight variables `h̃_i` of Diff_h; index 0 is the auxiliary `h̃_0`.
    HTilde,
    /// Weight variables `H_i = D_i X^i` of the Weyl side.
    WeylH,
    /// Formal central indeterminates `c_k` of the localized Diff_h model.
    Central,
    /// Formal central indeterminates `a_k` of the Weyl side.
    WeylA,
    /// Highest-weight parameters `λ_i`.
    Lambda,
}

impl VarKind {
    fn code(self) -> u16 {
        match self {
            VarKind::HTilde => 0,
            VarKind::WeylH => 1,
            VarKind::Central => 2,
            VarKind::WeylA => 3,
            VarKind::Lambda => 4,
        }
    }

    fn from_code(code: u16) -> VarKind {
        match code {
            0 => VarKind::HTilde,
            1 => VarKind::WeylH,
            2 => VarKind::Central,
            3 => VarKind::WeylA,
            _ => VarKind::Lambda,
        }
    }

    /// Central families never appear in denominators.
    pub fn is_central(self) -> bool {
        matches!(self, VarKind::Central | VarKind::WeylA)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            VarKind::HTilde => "h",
            VarKind::WeylH => "H",
            VarKind::Central => "c",
            VarKind::WeylA => "a",
            VarKind::Lambda => "l",
        }
    }
}

/// A polynomial variable: a family plus an index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u16);

impl Var {
    pub fn new(kind: VarKind, index: u8) -> Var {
        Var((kind.code() << 8) | index as u16)
    }

    pub fn h(i: usize) -> Var {
        Var::new(VarKind::HTilde, i as u8)
    }

    pub fn weyl_h(i: usize) -> Var {
        Var::new(VarKind::WeylH, i as u8)
    }

    pub fn c(k: usize) -> Var {
        Var::new(VarKind::Central, k as u8)
    }

    pub fn a(k: usize) -> Var {
        Var::new(VarKind::WeylA, k as u8)
    }

    pub fn lambda(i: usize) -> Var {
        Var::new(VarKind::Lambda, i as u8)
    }

    pub fn kind(self) -> VarKind {
        VarKind::from_code(self.0 >> 8)
    }

    pub fn index(self) -> usize {
        (self.0 & 0xff) as usize
    }

    pub fn with_kind(self, kind: VarKind) -> Var {
        Var::new(kind, self.index() as u8)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind().symbol(), self.index())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A power product, stored sparsely and sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            let mut s = SmallVec::new();
            s.push((v, e));
            Monomial(s)
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Removes `v` from the monomial, returning its former exponent.
    pub(super) fn split_off(&self, v: Var) -> (u32, Monomial) {
        let mut rest = self.clone();
        let mut e = 0;
        rest.0.retain(|(w, f)| {
            if *w == v {
                e = *f;
                false
            } else {
                true
            }
        });
        (e, rest)
    }

    fn rename(&self, f: &impl Fn(Var) -> Var) -> Monomial {
        let mut m = Monomial::one();
        for &(v, e) in &self.0 {
            m = m.mul(&Monomial::var(f(v), e));
        }
        m
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match a.1.cmp(&b.1) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    o => return o,
                },
            }
        }
        (self.0.len() - i).cmp(&(other.0.len() - j))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with rational coefficients; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(BigRational::one())
    }

    pub fn constant(q: BigRational) -> Poly {
        let mut p = Poly::zero();
        if !q.is_zero() {
            p.terms.insert(Monomial::one(), q);
        }
        p
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(rat(n))
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(Monomial::var(v, 1), BigRational::one())
    }

    pub fn monomial(m: Monomial, q: BigRational) -> Poly {
        let mut p = Poly::zero();
        if !q.is_zero() {
            p.terms.insert(m, q);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, q)| m.is_one() && q.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub(super) fn add_term(&mut self, m: Monomial, q: BigRational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, q: &BigRational) -> Poly {
        if q.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * q))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales to leading coefficient one; returns the polynomial and the
    /// removed leading coefficient.
    pub fn monic_with_lc(&self) -> (Poly, BigRational) {
        match self.leading() {
            None => (Poly::zero(), BigRational::one()),
            Some((_, lc)) if lc.is_one() => (self.clone(), BigRational::one()),
            Some((_, lc)) => {
                let lc = lc.clone();
                (self.scale(&lc.recip()), lc)
            }
        }
    }

    pub fn monic(&self) -> Poly {
        self.monic_with_lc().0
    }

    /// Exact division. Returns `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        if d.len() == 1 {
            let inv = dc.recip();
            let mut q = Poly::zero();
            for (m, c) in &self.terms {
                q.terms.insert(m.div(&dm)?, c * &inv);
            }
            return Some(q);
        }
        let inv = dc.recip();
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let tm = rm.div(&dm)?;
            let tc = &rc * &inv;
            for (m, c) in &d.terms {
                r.add_term(m.mul(&tm), -(c * &tc));
            }
            q.add_term(tm, tc);
        }
        Some(q)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`.
    pub fn coeffs_in(&self, v: Var) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    fn coeff_in(&self, v: Var, e: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (f, rest) = m.split_off(v);
            if f == e {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Monic gcd of the coefficients of `self` in `v`.
    pub fn content_in(&self, v: Var) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v).values() {
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, v: Var) -> Poly {
        let c = self.content_in(v);
        if c.is_one() {
            self.clone()
        } else {
            self.exact_div(&c).expect("content divides")
        }
    }

    /// Applies `v ↦ v + shift(v)` for every variable with a nonzero shift.
    pub fn translate(&self, shift: &impl Fn(Var) -> i64) -> Poly {
        let mut powers: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut fixed = Monomial::one();
            let mut moving = Poly::one();
            for (v, e) in m.factors() {
                let s = shift(v);
                if s == 0 {
                    fixed = fixed.mul(&Monomial::var(v, e));
                } else {
                    let p = powers
                        .entry((v, e))
                        .or_insert_with(|| (&Poly::var(v) + &Poly::int(s)).pow(e));
                    moving = &moving * p;
                }
            }
            for (mm, cc) in moving.terms {
                out.add_term(mm.mul(&fixed), cc * c);
            }
        }
        out
    }

    /// Relabels variables; `f` must be injective on the variables present.
    pub fn rename(&self, f: &impl Fn(Var) -> Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(f), c.clone());
        }
        out
    }

    /// Substitutes polynomials for variables (`None` leaves a variable alone).
    pub fn substitute(&self, f: &impl Fn(Var) -> Option<Poly>) -> Poly {
        let mut cache: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for (v, e) in m.factors() {
                let p = cache.entry((v, e)).or_insert_with(|| match f(v) {
                    Some(p) => p.pow(e),
                    None => Poly::monomial(Monomial::var(v, e), BigRational::one()),
                });
                acc = &acc * p;
            }
            out = &out + &acc;
        }
        out
    }

    /// Evaluates at a point; `None` if some variable is unassigned.
    pub fn eval(&self, f: &impl Fn(Var) -> Option<BigRational>) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = f(v)?;
                t *= num_traits::pow(x, e as usize);
            }
            total += t;
        }
        Some(total)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e > 0 {
                out.add_term(
                    rest.mul(&Monomial::var(v, e - 1)),
                    c * rat(e as i64),
                );
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.len() == 1 && b.len() == 1 {
        let (ma, _) = a.leading().unwrap();
        let (mb, _) = b.leading().unwrap();
        let mut g = Monomial::one();
        for (v, e) in ma.factors() {
            let f = mb.exp(v);
            if f > 0 {
                g = g.mul(&Monomial::var(v, e.min(f)));
            }
        }
        return Poly::monomial(g, BigRational::one());
    }
    let (small, big) = if a.total_degree() <= b.total_degree() {
        (a, b)
    } else {
        (b, a)
    };
    for (p, other) in [(small, big), (big, small)] {
        if let Some(factors) = super::linear::split_linear(p) {
            return trial_gcd(other, &factors);
        }
    }
    if big.exact_div(small).is_some() {
        return small.monic();
    }
    let va = a.vars();
    let vb = b.vars();
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return gcd(&a.content_in(v), b);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return gcd(a, &b.content_in(v));
    }
    let x = *va
        .iter()
        .min_by_key(|v| a.degree_in(**v).max(b.degree_in(**v)))
        .expect("nonconstant");
    let ca = a.content_in(x);
    let cb = b.content_in(x);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let c = gcd(&ca, &cb);
    let g = prs_gcd(pa, pb, x);
    (&c * &g).monic()
}

/// Gcd of `p` with the product of `factors`.
fn trial_gcd(p: &Poly, factors: &[(Poly, u32)]) -> Poly {
    let mut rest = p.clone();
    let mut g = Poly::one();
    for (f, mult) in factors {
        for _ in 0..*mult {
            match rest.exact_div(f) {
                Some(q) => {
                    rest = q;
                    g = &g * f;
                }
                None => break,
            }
        }
    }
    g.monic()
}

/// Primitive polynomial remainder sequence in `x`; inputs primitive in `x`.
fn prs_gcd(a: Poly, b: Poly, x: Var) -> Poly {
    let (mut a, mut b) = if a.degree_in(x) >= b.degree_in(x) {
        (a, b)
    } else {
        (b, a)
    };
    if b.degree_in(x) == 0 {
        return Poly::one();
    }
    loop {
        let r = pseudo_rem(&a, &b, x);
        if r.is_zero() {
            return b.primitive_in(x).monic();
        }
        if r.degree_in(x) == 0 {
            return Poly::one();
        }
        a = b;
        b = r.primitive_in(x).monic();
    }
}

fn pseudo_rem(a: &Poly, b: &Poly, x: Var) -> Poly {
    let db = b.degree_in(x);
    let lcb = b.coeff_in(x, db);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(x);
        if dr < db {
            break;
        }
        let lcr = r.coeff_in(x, dr);
        let shifted = (&lcr * b).mul_monomial(&Monomial::var(x, dr - db));
        r = &(&r * &lcb) - &shifted;
        // keep rational coefficients from growing between steps
        r = r.monic();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(i: usize) -> Poly {
        Poly::var(Var::h(i))
    }

    #[test]
    fn grlex_orders_h1_above_h2() {
        let a = Monomial::var(Var::h(1), 1);
        let b = Monomial::var(Var::h(2), 1);
        assert!(a > b);
        let sq = Monomial::var(Var::h(2), 2);
        assert!(sq > a);
        let mixed = a.mul(&b);
        assert!(Monomial::var(Var::h(1), 2) > mixed);
        assert!(mixed > sq);
    }

    #[test]
    fn exact_division_and_failure() {
        let a = &h(1) - &h(2);
        let b = &h(1) + &h(2);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!((&prod + &Poly::one()).exact_div(&a), None);
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        let x = &h(1) - &h(2);
        let y = &(&h(1) + &h(3)) + &Poly::int(2);
        let z = &h(2) - &Poly::int(5);
        let a = &(&x * &y) * &x;
        let b = &(&x * &z) * &y.scale(&rat(3));
        let g = gcd(&a, &b);
        assert_eq!(g, (&x * &y).monic());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = &(&h(1) * &h(1)) + &Poly::one();
        let b = &h(1) - &h(2);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn translate_is_substitution() {
        let p = &(&h(1) * &h(1)) - &(&h(1) * &h(2));
        let t = p.translate(&|v| if v == Var::h(1) { 1 } else { 0 });
        let want = p.substitute(&|v| (v == Var::h(1)).then(|| &h(1) + &Poly::one()));
        assert_eq!(t, want);
    }

    #[test]
    fn derivative_of_product() {
        let p = &(&h(1) * &h(2)) * &h(3);
        assert_eq!(p.derivative(Var::h(2)), &h(1) * &h(3));
    }
}
