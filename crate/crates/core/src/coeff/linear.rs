//! Splitting polynomials into translated linear forms `v + k` and `v − w + k`.
//!
//! Denominators built by the ring engines are products of such forms, so a
//! gcd against one of them reduces to trial division.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{rat, Monomial, Poly, Var, VarKind};

/// Integer translations searched for roots.
const SHIFT_RANGE: i64 = 64;
const CACHE_LIMIT: usize = 1 << 16;

/// Placeholder variable for the translation parameter.
fn param() -> Var {
    Var::new(VarKind::Lambda, u8::MAX)
}

type Factors = Vec<(Poly, u32)>;

thread_local! {
    static SPLIT_CACHE: RefCell<HashMap<Poly, Option<Factors>>> =
        RefCell::new(HashMap::new());
}

/// Monic linear factors with multiplicities when `p` is a constant times a
/// product of forms `v + k` and `v − w + k` with integer `|k| ≤ 64`.
pub(super) fn split_linear(p: &Poly) -> Option<Vec<(Poly, u32)>> {
    if p.is_constant() || p.is_zero() {
        return Some(Vec::new());
    }
    if let Some(hit) = SPLIT_CACHE.with(|c| c.borrow().get(p).cloned()) {
        return hit;
    }
    let result = split_uncached(p);
    SPLIT_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= CACHE_LIMIT {
            c.clear();
        }
        c.insert(p.clone(), result.clone());
    });
    result
}

fn split_uncached(p: &Poly) -> Option<Vec<(Poly, u32)>> {
    let vars: Vec<Var> = p.vars().into_iter().collect();
    if vars.contains(&param()) {
        return None;
    }
    let mut rest = p.clone();
    let mut factors = Vec::new();
    let t = Poly::var(param());
    let mut candidates = Vec::new();
    for (a, &v) in vars.iter().enumerate() {
        // v ↦ t isolates forms v + k; v ↦ w + t isolates forms v − w + k
        candidates.push((v, None));
        for &w in &vars[a + 1..] {
            candidates.push((v, Some(w)));
        }
    }
    for (v, w) in candidates {
        if rest.is_constant() {
            break;
        }
        let base = match w {
            Some(w) => Poly::var(w),
            None => Poly::zero(),
        };
        let image = &base + &t;
        let moved = rest.substitute(&|x| (x == v).then(|| image.clone()));
        for k in integer_roots(&common_param_factor(&moved)) {
            // the form vanishing at t = k
            let form = &(&Poly::var(v) - &base) - &Poly::constant(rat(k));
            let form = form.monic();
            let mut mult = 0;
            while let Some(q) = rest.exact_div(&form) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                factors.push((form, mult));
            }
        }
    }
    rest.is_constant().then_some(factors)
}

/// Gcd of the coefficients of `p` viewed as polynomials in the parameter.
fn common_param_factor(p: &Poly) -> Poly {
    let mut groups: BTreeMap<Monomial, Poly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let (e, other) = m.split_off(param());
        groups
            .entry(other)
            .or_insert_with(Poly::zero)
            .add_term(Monomial::var(param(), e), c.clone());
    }
    let mut g = Poly::zero();
    for q in groups.values() {
        g = super::poly::gcd(&g, q);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn integer_roots(g: &Poly) -> Vec<i64> {
    if g.is_constant() {
        return Vec::new();
    }
    let coeffs = g.coeffs_in(param());
    let eval = |k: i64| {
        let x = rat(k);
        let mut acc = BigRational::zero();
        for (e, c) in coeffs.iter().rev() {
            let c = c.constant_value().unwrap_or_else(BigRational::zero);
            acc += c * num_traits::pow(x.clone(), *e as usize);
        }
        acc
    };
    (-SHIFT_RANGE..=SHIFT_RANGE).filter(|&k| eval(k).is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(i: usize) -> Poly {
        Poly::var(Var::h(i))
    }

    #[test]
    fn splits_products_of_shifted_differences() {
        let a = &(&h(1) - &h(2)) + &Poly::int(3);
        let b = &h(2) - &Poly::int(1);
        let p = &(&(&a * &a) * &b) * &Poly::int(5);
        let f = split_linear(&p).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.contains(&(a.monic(), 2)));
        assert!(f.contains(&(b.monic(), 1)));
    }

    #[test]
    fn rejects_irreducible_quadratic() {
        let p = &(&h(1) * &h(1)) + &Poly::var(Var::c(1));
        assert!(split_linear(&p).is_none());
    }
}
