//! The elements `Γ_i = ∂_iZ^i`, `e_k` and the quadratic central `c_k`.

use crate::coeff::{sym_poly, sym_poly_partial};
use crate::error::{check_index, Result};

use super::element::Element;
use super::gen::{Gen, RingCtx};

/// Named special elements of `Diff_h(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Special {
    Gamma(usize),
    E(usize),
    C(usize),
}

pub fn special_element(ctx: RingCtx, which: Special) -> Result<Element> {
    match which {
        Special::Gamma(i) => gamma(ctx, i),
        Special::E(k) => {
            check_index("k", k, 0, ctx.n())?;
            Ok(Element::scalar(ctx, sym_poly(k, ctx.n())?))
        }
        Special::C(k) => central_c(ctx, k),
    }
}

/// `Γ_i = ∂_iZ^i`.
pub fn gamma(ctx: RingCtx, i: usize) -> Result<Element> {
    ctx.ensure_single_copy("Γ_i")?;
    check_index("i", i, 1, ctx.n())?;
    Ok(Element::word(ctx, &[Gen::d(i), Gen::z(i)]))
}

/// `c_k = Σ_j (∂e_k/∂h̃_j) Γ_j − e_k`.
pub fn central_c(ctx: RingCtx, k: usize) -> Result<Element> {
    ctx.ensure_single_copy("c_k")?;
    let n = ctx.n();
    check_index("k", k, 1, n)?;
    let mut out = Element::scalar(ctx, -sym_poly(k, n)?);
    for j in 1..=n {
        out = &out + &gamma(ctx, j)?.scale_left(&sym_poly_partial(k, n, j)?);
    }
    Ok(out)
}
