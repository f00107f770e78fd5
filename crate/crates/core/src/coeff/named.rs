//! Named coefficient products: elementary symmetric functions, the
//! `ψ/ψ′/χ/φ` products over `h̃`, and their `Ψ/Ψ′` analogues over `H`.

use super::poly::{Poly, Var, VarKind};
use super::ratfunc::{RatFunc, ShiftVector};
use crate::error::{check_index, Result};

/// Which structural product to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    /// `ψ_i = ∏_{k>i} h̃_ik`
    Psi,
    /// `ψ′_i = ∏_{k<i} h̃_ik`
    PsiPrime,
    /// `χ_i = ψ_i ψ′_i`
    Chi,
    /// `φ_i = ψ_i / ψ_i[−ε_i]`
    Phi,
    /// `Ψ_i = ∏_{k>i} H_ik`
    WeylPsi,
    /// `Ψ′_i = ∏_{k<i} H_ik`
    WeylPsiPrime,
}

/// `e_k(x_1, ..., x_m)` for arbitrary polynomial arguments.
pub fn elementary_symmetric(args: &[Poly], k: usize) -> Poly {
    // e_k(x_1..x_m) = e_k(x_1..x_{m-1}) + x_m e_{k-1}(x_1..x_{m-1})
    let mut e = vec![Poly::zero(); k + 1];
    e[0] = Poly::one();
    for x in args {
        for j in (1..=k).rev() {
            e[j] = &e[j] + &(x * &e[j - 1]);
        }
    }
    e.swap_remove(k)
}

fn weights(kind: VarKind, n: usize) -> Vec<Poly> {
    (1..=n).map(|i| Poly::var(Var::new(kind, i as u8))).collect()
}

/// `e_k(h̃_1, ..., h̃_n)`.
pub fn sym_poly(k: usize, n: usize) -> Result<RatFunc> {
    check_index("k", k, 0, n)?;
    Ok(RatFunc::from_poly(elementary_symmetric(
        &weights(VarKind::HTilde, n),
        k,
    )))
}

/// `∂e_k/∂h̃_j`, which is `e_{k−1}` of the remaining variables.
pub fn sym_poly_partial(k: usize, n: usize, j: usize) -> Result<RatFunc> {
    check_index("k", k, 0, n)?;
    check_index("j", j, 1, n)?;
    if k == 0 {
        return Ok(RatFunc::zero());
    }
    let rest: Vec<Poly> = (1..=n)
        .filter(|&i| i != j)
        .map(|i| Poly::var(Var::h(i)))
        .collect();
    Ok(RatFunc::from_poly(elementary_symmetric(&rest, k - 1)))
}

fn diff(kind: VarKind, i: usize, k: usize) -> RatFunc {
    RatFunc::from_poly(&Poly::var(Var::new(kind, i as u8)) - &Poly::var(Var::new(kind, k as u8)))
}

/// The named product at site `i` in dimension `n`; empty products are 1.
pub fn structural_product(kind: ProductKind, i: usize, n: usize) -> Result<RatFunc> {
    check_index("i", i, 1, n)?;
    let prod = |family: VarKind, ks: &mut dyn Iterator<Item = usize>| {
        ks.fold(RatFunc::one(), |acc, k| &acc * &diff(family, i, k))
    };
    Ok(match kind {
        ProductKind::Psi => prod(VarKind::HTilde, &mut (i + 1..=n)),
        ProductKind::PsiPrime => prod(VarKind::HTilde, &mut (1..i)),
        ProductKind::Chi => prod(VarKind::HTilde, &mut (1..=n).filter(|&k| k != i)),
        ProductKind::Phi => {
            let psi = structural_product(ProductKind::Psi, i, n)?;
            &psi / &psi.shift(&ShiftVector::unit(i, n, -1))
        }
        ProductKind::WeylPsi => prod(VarKind::WeylH, &mut (i + 1..=n)),
        ProductKind::WeylPsiPrime => prod(VarKind::WeylH, &mut (1..i)),
    })
}

pub fn psi(i: usize, n: usize) -> RatFunc {
    structural_product(ProductKind::Psi, i, n).expect("valid site")
}

pub fn psi_prime(i: usize, n: usize) -> RatFunc {
    structural_product(ProductKind::PsiPrime, i, n).expect("valid site")
}

pub fn chi(i: usize, n: usize) -> RatFunc {
    structural_product(ProductKind::Chi, i, n).expect("valid site")
}

pub fn phi(i: usize, n: usize) -> RatFunc {
    structural_product(ProductKind::Phi, i, n).expect("valid site")
}

/// Left-hand side minus right-hand side of the rational identity
/// `∏_l (h̃_0−h̃_l−1)/(h̃_0−h̃_l) + Σ_j (1/(h̃_0−h̃_j))·χ_j[−ε_j]/χ_j = 1`.
pub fn note3_defect(n: usize) -> RatFunc {
    let h0 = RatFunc::h(0);
    let mut lhs = RatFunc::one();
    for l in 1..=n {
        let d = &h0 - &RatFunc::h(l);
        lhs = &lhs * &(&(&d - &RatFunc::one()) / &d);
    }
    for j in 1..=n {
        let c = chi(j, n);
        let ratio = &c.shift(&ShiftVector::unit(j, n, -1)) / &c;
        lhs = &lhs + &(&ratio / &(&h0 - &RatFunc::h(j)));
    }
    &lhs - &RatFunc::one()
}

/// True iff the identity canonicalizes to `0 = 0` over `Q(h̃_0, ..., h̃_n)`.
pub fn verify_note3_identity(n: usize) -> bool {
    n >= 1 && note3_defect(n).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_poly_small_cases() {
        assert_eq!(sym_poly(0, 3).unwrap(), RatFunc::one());
        assert_eq!(sym_poly(1, 2).unwrap(), &RatFunc::h(1) + &RatFunc::h(2));
        assert_eq!(sym_poly(2, 2).unwrap(), &RatFunc::h(1) * &RatFunc::h(2));
        assert!(sym_poly(4, 3).is_err());
    }

    #[test]
    fn newton_recursion() {
        for n in 2..=4 {
            for k in 1..=n {
                let full = sym_poly(k, n).unwrap();
                let lower = if k < n { sym_poly(k, n - 1).unwrap() } else { RatFunc::zero() };
                let rec = &lower + &(&RatFunc::h(n) * &sym_poly(k - 1, n - 1).unwrap());
                assert_eq!(full, rec, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn partial_of_top_symmetric() {
        for n in 2..=3 {
            for j in 1..=n {
                let want = (1..=n)
                    .filter(|&k| k != j)
                    .fold(RatFunc::one(), |a, k| &a * &RatFunc::h(k));
                assert_eq!(sym_poly_partial(n, n, j).unwrap(), want);
                assert_eq!(
                    sym_poly(n, n).unwrap().derivative(Var::h(j)),
                    want
                );
            }
        }
    }

    #[test]
    fn named_products() {
        assert_eq!(psi(1, 3), &RatFunc::hij(1, 2) * &RatFunc::hij(1, 3));
        for n in 1..=4 {
            assert_eq!(psi_prime(1, n), RatFunc::one());
            for i in 1..=n {
                assert_eq!(chi(i, n), &psi(i, n) * &psi_prime(i, n));
            }
        }
        let h = RatFunc::hij(1, 2);
        assert_eq!(phi(1, 2), &h / &(&h - &RatFunc::one()));
    }

    #[test]
    fn phi_shift_ratio() {
        let x = RatFunc::hij(1, 2);
        let p = phi(1, 2);
        let ratio = &p.shift(&ShiftVector::unit(2, 2, -1)) / &p;
        assert_eq!(ratio, &(&(&x * &x) - &RatFunc::one()) / &(&x * &x));
        for n in 3..=4 {
            for i in 1..n {
                for j in i + 1..=n {
                    let p = phi(i, n);
                    let x = RatFunc::hij(i, j);
                    let ratio = &p.shift(&ShiftVector::unit(j, n, -1)) / &p;
                    assert_eq!(ratio, &(&(&x * &x) - &RatFunc::one()) / &(&x * &x));
                }
            }
        }
    }

    #[test]
    fn note3_holds() {
        for n in 1..=4 {
            assert!(verify_note3_identity(n), "n={n}");
        }
    }

    #[test]
    fn note3_sensitive_to_sign_of_shift() {
        // flipping the shift direction must break the identity
        let n = 2;
        let h0 = RatFunc::h(0);
        let mut lhs = RatFunc::one();
        for l in 1..=n {
            let d = &h0 - &RatFunc::h(l);
            lhs = &lhs * &(&(&d - &RatFunc::one()) / &d);
        }
        for j in 1..=n {
            let c = chi(j, n);
            let ratio = &c.shift(&ShiftVector::unit(j, n, 1)) / &c;
            lhs = &lhs + &(&ratio / &(&h0 - &RatFunc::h(j)));
        }
        assert!(!(&lhs - &RatFunc::one()).is_zero());
    }
}
