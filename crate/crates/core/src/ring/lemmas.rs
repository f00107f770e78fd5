//! Verifiers for the identities satisfied by `Γ_i` and `c_k`.

use crate::coeff::{chi, sym_poly_partial, RatFunc};
use crate::error::Result;
use crate::report::{Check, Report};

use super::element::Element;
use super::gen::RingCtx;
use super::special::{central_c, gamma};

/// `V^k_j = ∂e_j/∂h̃_k` (row `k`, column `j`).
pub fn v_matrix(n: usize) -> Result<Vec<Vec<RatFunc>>> {
    (1..=n)
        .map(|k| (1..=n).map(|j| sym_poly_partial(j, n, k)).collect())
        .collect()
}

/// The claimed inverse `(V⁻¹)^j_i = (−1)^{j−1} h̃_i^{n−j} / χ_i` (row `j`, column `i`).
pub fn v_inverse_claimed(n: usize) -> Vec<Vec<RatFunc>> {
    (1..=n)
        .map(|j| {
            (1..=n)
                .map(|i| {
                    let p = RatFunc::h(i).pow((n - j) as i32).expect("nonnegative power");
                    let s = if (j - 1) % 2 == 0 { p } else { -p };
                    &s / &chi(i, n)
                })
                .collect()
        })
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<RatFunc>], b: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|r| {
            (0..m)
                .map(|c| {
                    (0..b.len()).fold(RatFunc::zero(), |acc, k| &acc + &(&a[r][k] * &b[k][c]))
                })
                .collect()
        })
        .collect()
}

fn is_identity(m: &[Vec<RatFunc>]) -> bool {
    m.iter().enumerate().all(|(r, row)| {
        row.iter()
            .enumerate()
            .all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
    })
}

/// Right-hand side `h̃_j^n − Σ_k (−1)^k h̃_j^{n−k} c_k`, i.e.
/// `h̃_j^n − h̃_j^n c(−h̃_j^{−1})` expanded termwise.
pub fn gamma_via_centrals_rhs(ctx: RingCtx, j: usize) -> Result<Element> {
    let n = ctx.n();
    let hj = RatFunc::h(j);
    let mut out = Element::scalar(ctx, hj.pow(n as i32)?);
    for k in 1..=n {
        let mut c = hj.pow((n - k) as i32)?;
        if k % 2 == 1 {
            c = -c;
        }
        out = &out - &central_c(ctx, k)?.scale_left(&c);
    }
    Ok(out)
}

/// Checks the `Γ` commutation rules, `[Γ_i, Γ_j] = 0`, `V·V⁻¹ = V⁻¹·V = I`
/// and `χ_jΓ_j = h̃_j^n − h̃_j^n c(−h̃_j^{−1})` in `Diff_h(n)`.
pub fn verify_core_lemmas(n: usize) -> Result<Report> {
    let ctx = RingCtx::single(n)?;
    let mut report = Report::new();
    let one = RatFunc::one();
    for i in 1..=n {
        let gi = gamma(ctx, i)?;
        for j in 1..=n {
            if i == j {
                continue;
            }
            let x = RatFunc::hij(i, j);
            let zj = Element::z(ctx, j)?;
            let lhs = &gi * &zj;
            let rhs = (&zj * &gi).scale_left(&(&(&x + &one) / &x));
            report.push(Check::expect(format!("gamma Z {i}{j}"), lhs == rhs, || {
                format!("{}", &lhs - &rhs)
            }));
            let dj = Element::d(ctx, j)?;
            let lhs = &gi * &dj;
            let rhs = (&dj * &gi).scale_left(&(&(&x - &one) / &x));
            report.push(Check::expect(format!("gamma d {i}{j}"), lhs == rhs, || {
                format!("{}", &lhs - &rhs)
            }));
            if i < j {
                let c = gi.commutator(&gamma(ctx, j)?)?;
                report.push(Check::expect(format!("gamma commute {i}{j}"), c.is_zero(), || {
                    c.to_string()
                }));
            }
        }
    }
    let v = v_matrix(n)?;
    let w = v_inverse_claimed(n);
    report.push(Check::expect("V Vinv", is_identity(&mat_mul(&v, &w)), || {
        format!("{:?}", mat_mul(&v, &w))
    }));
    report.push(Check::expect("Vinv V", is_identity(&mat_mul(&w, &v)), || {
        format!("{:?}", mat_mul(&w, &v))
    }));
    for j in 1..=n {
        let lhs = gamma(ctx, j)?.scale_left(&chi(j, n));
        let rhs = gamma_via_centrals_rhs(ctx, j)?;
        report.push(Check::expect(format!("chi gamma {j}"), lhs == rhs, || {
            format!("{}", &lhs - &rhs)
        }));
    }
    Ok(report)
}
