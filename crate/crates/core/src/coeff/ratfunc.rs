use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{gcd, rat, Poly, Var, VarKind};
use crate::error::{Error, Result};

/// Integer translation of the weight variables: `h̃_i ↦ h̃_i + offsets[i-1]`,
/// plus an optional slot for the auxiliary `h̃_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ShiftVector {
    pub h0: i64,
    pub offsets: Vec<i64>,
}

impl ShiftVector {
    pub fn zero(n: usize) -> ShiftVector {
        ShiftVector {
            h0: 0,
            offsets: vec![0; n],
        }
    }

    pub fn from_offsets(offsets: Vec<i64>) -> ShiftVector {
        ShiftVector { h0: 0, offsets }
    }

    /// `sign · ε_j` in dimension `n` (`j` is 1-based).
    pub fn unit(j: usize, n: usize, sign: i64) -> ShiftVector {
        let mut s = ShiftVector::zero(n);
        s.offsets[j - 1] = sign;
        s
    }

    /// Offset of `h̃_i`; index 0 addresses `h̃_0`.
    pub fn get(&self, i: usize) -> i64 {
        if i == 0 {
            self.h0
        } else {
            self.offsets.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.h0 == 0 && self.offsets.iter().all(|&d| d == 0)
    }

    pub fn neg(&self) -> ShiftVector {
        ShiftVector {
            h0: -self.h0,
            offsets: self.offsets.iter().map(|d| -d).collect(),
        }
    }
}

impl Add for &ShiftVector {
    type Output = ShiftVector;
    fn add(self, rhs: &ShiftVector) -> ShiftVector {
        let n = self.offsets.len().max(rhs.offsets.len());
        ShiftVector {
            h0: self.h0 + rhs.h0,
            offsets: (1..=n).map(|i| self.get(i) + rhs.get(i)).collect(),
        }
    }
}

/// A reduced rational function `num / den` with monic denominator.
///
/// Two values are equal iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    /// Canonical form of `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let (den, lc) = den.monic_with_lc();
        let num = if lc.is_one() { num } else { num.scale(&lc.recip()) };
        Ok(RatFunc { num, den })
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn int(n: i64) -> RatFunc {
        RatFunc::from_poly(Poly::int(n))
    }

    pub fn constant(q: BigRational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(q))
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    /// `h̃_i`.
    pub fn h(i: usize) -> RatFunc {
        RatFunc::var(Var::h(i))
    }

    /// `h̃_ij = h̃_i − h̃_j`.
    pub fn hij(i: usize, j: usize) -> RatFunc {
        RatFunc::from_poly(&Poly::var(Var::h(i)) - &Poly::var(Var::h(j)))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn depends_on_kind(&self, kind: VarKind) -> bool {
        self.vars().iter().any(|v| v.kind() == kind)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale(&self, q: &BigRational) -> RatFunc {
        if q.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }

    /// `p[δ]`: translates the `h̃` variables.
    pub fn shift(&self, delta: &ShiftVector) -> RatFunc {
        self.shift_kind(VarKind::HTilde, delta)
    }

    /// Translates the variables of one family; index 0 uses `delta.h0`.
    pub fn shift_kind(&self, kind: VarKind, delta: &ShiftVector) -> RatFunc {
        if delta.is_zero() || self.num.is_constant() && self.den.is_constant() {
            return self.clone();
        }
        let f = |v: Var| {
            if v.kind() == kind {
                delta.get(v.index())
            } else {
                0
            }
        };
        // Translation keeps the grlex leading term, so the result stays
        // reduced and monic.
        RatFunc {
            num: self.num.translate(&f),
            den: self.den.translate(&f),
        }
    }

    /// Relabels variables (injective maps only).
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> RatFunc {
        let num = self.num.rename(&f);
        let den = self.den.rename(&f);
        let (den, lc) = den.monic_with_lc();
        RatFunc {
            num: num.scale(&lc.recip()),
            den,
        }
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, f: impl Fn(Var) -> Option<RatFunc>) -> Result<RatFunc> {
        let eval = |p: &Poly| -> RatFunc {
            let mut acc = RatFunc::zero();
            for (m, c) in p.terms() {
                let mut t = RatFunc::constant(c.clone());
                for (v, e) in m.factors() {
                    let base = f(v).unwrap_or_else(|| RatFunc::var(v));
                    t = &t * &RatFunc {
                        num: base.num.pow(e),
                        den: base.den.pow(e),
                    };
                }
                acc = &acc + &t;
            }
            acc
        };
        eval(&self.num).checked_div(&eval(&self.den))
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, f: impl Fn(Var) -> Option<BigRational>) -> Result<BigRational> {
        let n = self
            .num
            .eval(&f)
            .ok_or_else(|| Error::Evaluation(format!("unassigned variable in {self}")))?;
        let d = self
            .den
            .eval(&f)
            .ok_or_else(|| Error::Evaluation(format!("unassigned variable in {self}")))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(n / d)
    }

    /// Partial derivative (quotient rule).
    pub fn derivative(&self, v: Var) -> RatFunc {
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        RatFunc::new(num, self.den.pow(2)).expect("nonzero denominator")
    }

    /// True when the printed form needs parentheses as a factor.
    pub fn is_compound(&self) -> bool {
        !self.den.is_one() || self.num.len() > 1
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let single_factor = self.den.len() == 1
            && self.den.leading().map(|(m, _)| m.factors().count() == 1).unwrap_or(false);
        if !single_factor {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RatFunc::new(num, self.den.clone()).expect("nonzero den");
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let b = self.den.exact_div(&g).expect("gcd divides");
        let d = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let den = &(&b * &d) * &g;
        // any common factor of num and den divides g
        let g2 = gcd(&num, &g);
        if g2.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.exact_div(&g2).expect("gcd divides"),
                den: den.exact_div(&g2).expect("gcd divides"),
            }
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let cut = |p: &Poly, g: &Poly| {
            if g.is_one() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd divides")
            }
        };
        RatFunc {
            num: &cut(&self.num, &g1) * &cut(&rhs.num, &g2),
            den: &cut(&self.den, &g2) * &cut(&rhs.den, &g1),
        }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> RatFunc {
        RatFunc::int(n)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> RatFunc {
        RatFunc::from_poly(p)
    }
}

/// Shorthand for an integer rational.
pub fn q(n: i64) -> BigRational {
    rat(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(i: usize) -> RatFunc {
        RatFunc::h(i)
    }

    #[test]
    fn canonicalize_cancels_common_factor() {
        let num = &(&h(1) * &h(1)) - &(&h(2) * &h(2));
        let den = RatFunc::hij(1, 2);
        let f = RatFunc::new(num.numerator().clone(), den.numerator().clone()).unwrap();
        assert_eq!(f, &h(1) + &h(2));
    }

    #[test]
    fn zero_numerator_and_zero_denominator() {
        let f = RatFunc::new(Poly::zero(), Poly::var(Var::h(1))).unwrap();
        assert!(f.is_zero());
        assert_eq!(f, RatFunc::zero());
        assert_eq!(
            RatFunc::new(Poly::one(), Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn rhat_entry_canonical_form() {
        let x = RatFunc::hij(1, 2);
        let sq = &x * &x;
        let f = RatFunc::new((&sq - &RatFunc::one()).numerator().clone(), sq.numerator().clone())
            .unwrap();
        assert_eq!(f.denominator(), sq.numerator());
        assert_eq!(&(&f * &sq) + &RatFunc::one(), sq);
    }

    #[test]
    fn denominator_sign_normalized() {
        // (1)/(h2 - h1) is stored as (-1)/(h1 - h2)
        let f = &RatFunc::one() / &RatFunc::hij(2, 1);
        assert_eq!(f.denominator(), RatFunc::hij(1, 2).numerator());
        assert_eq!(f.numerator(), &Poly::int(-1));
    }

    #[test]
    fn shift_examples() {
        let e1 = ShiftVector::unit(1, 2, 1);
        assert_eq!(h(1).shift(&e1), &h(1) + &RatFunc::one());
        let e2 = ShiftVector::unit(2, 2, 1);
        let f = &RatFunc::one() / &RatFunc::hij(1, 2);
        let want = &RatFunc::one() / &(&RatFunc::hij(1, 2) - &RatFunc::one());
        assert_eq!(f.shift(&e2), want);
    }

    #[test]
    fn addition_with_shared_denominator_factor_reduces() {
        let x = RatFunc::hij(1, 2);
        let a = &RatFunc::one() / &x;
        let b = &(-&RatFunc::one()) / &x;
        assert!((&a + &b).is_zero());
        let c = &h(1) / &(&x * &h(3));
        let d = &(-&h(2)) / &(&x * &h(3));
        assert_eq!(&c + &d, &RatFunc::one() / &h(3));
    }
}
