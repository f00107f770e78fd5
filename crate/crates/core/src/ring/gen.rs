use std::fmt;

use smallvec::SmallVec;

use crate::coeff::ShiftVector;
use crate::error::{check_index, Error, Result};

/// The ring `Diff_h(n, N)`: `n` sites, `N` copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingCtx {
    n: usize,
    copies: usize,
}

impl RingCtx {
    pub fn new(n: usize, copies: usize) -> Result<RingCtx> {
        check_index("n", n, 1, 16)?;
        check_index("N", copies, 1, 8)?;
        Ok(RingCtx { n, copies })
    }

    /// `Diff_h(n) = Diff_h(n, 1)`.
    pub fn single(n: usize) -> Result<RingCtx> {
        RingCtx::new(n, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub(crate) fn slots(&self) -> usize {
        self.n * self.copies
    }

    pub fn ensure_same(&self, other: &RingCtx) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.to_string(), other.to_string()))
        }
    }

    pub fn ensure_single_copy(&self, what: &str) -> Result<()> {
        if self.copies == 1 {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{what} is only defined for N = 1 (got {self})"
            )))
        }
    }

    /// All generators, `Z`s first, in site/copy order.
    pub fn generators(&self) -> Vec<Gen> {
        let mut out = Vec::with_capacity(2 * self.slots());
        for kind in [GenKind::Z, GenKind::D] {
            for site in 1..=self.n {
                for copy in 1..=self.copies {
                    out.push(Gen::new(kind, site, copy));
                }
            }
        }
        out
    }

    pub fn gen(&self, kind: GenKind, site: usize, copy: usize) -> Result<Gen> {
        check_index("site", site, 1, self.n)?;
        check_index("copy", copy, 1, self.copies)?;
        Ok(Gen::new(kind, site, copy))
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diff_h({},{})", self.n, self.copies)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Z,
    D,
}

/// A generator `Z^{site,copy}` or `∂_{site,copy}` (1-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub kind: GenKind,
    pub site: u8,
    pub copy: u8,
}

impl Gen {
    pub fn new(kind: GenKind, site: usize, copy: usize) -> Gen {
        Gen {
            kind,
            site: site as u8,
            copy: copy as u8,
        }
    }

    pub fn z(site: usize) -> Gen {
        Gen::new(GenKind::Z, site, 1)
    }

    pub fn d(site: usize) -> Gen {
        Gen::new(GenKind::D, site, 1)
    }

    pub fn site(&self) -> usize {
        self.site as usize
    }

    pub fn copy(&self) -> usize {
        self.copy as usize
    }

    pub fn is_z(&self) -> bool {
        self.kind == GenKind::Z
    }

    /// `g · f = f[shift] · g`: `Z^j` lowers `h̃_j` by one, `∂_j` raises it.
    pub fn shift(&self, n: usize) -> ShiftVector {
        match self.kind {
            GenKind::Z => ShiftVector::unit(self.site(), n, -1),
            GenKind::D => ShiftVector::unit(self.site(), n, 1),
        }
    }

    /// Within a block the canonical order is site descending, copy ascending.
    pub(crate) fn block_key(&self) -> (std::cmp::Reverse<u8>, u8) {
        (std::cmp::Reverse(self.site), self.copy)
    }

    fn slot(&self, copies: usize) -> usize {
        (self.site() - 1) * copies + (self.copy() - 1)
    }

    pub fn with_site(&self, site: usize) -> Gen {
        Gen::new(self.kind, site, self.copy())
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.kind {
            GenKind::Z => "Z",
            GenKind::D => "d",
        };
        write!(f, "{s}[{}]", self.site)
    }
}

/// Normal monomial: the word `(∂-block)(Z-block)`, each block sorted by
/// site descending then copy ascending. Stored as exponent vectors indexed
/// by `(site-1)·N + (copy-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalMonomial {
    d: SmallVec<[u16; 8]>,
    z: SmallVec<[u16; 8]>,
}

impl NormalMonomial {
    pub fn one(ctx: RingCtx) -> NormalMonomial {
        NormalMonomial {
            d: SmallVec::from_elem(0, ctx.slots()),
            z: SmallVec::from_elem(0, ctx.slots()),
        }
    }

    pub fn is_one(&self) -> bool {
        self.d.iter().chain(self.z.iter()).all(|&e| e == 0)
    }

    pub fn degree(&self) -> usize {
        self.d.iter().chain(self.z.iter()).map(|&e| e as usize).sum()
    }

    pub fn from_exponents(ctx: RingCtx, d: &[u16], z: &[u16]) -> NormalMonomial {
        assert_eq!(d.len(), ctx.slots());
        assert_eq!(z.len(), ctx.slots());
        NormalMonomial {
            d: SmallVec::from_slice(d),
            z: SmallVec::from_slice(z),
        }
    }

    pub fn d_exponents(&self) -> &[u16] {
        &self.d
    }

    pub fn z_exponents(&self) -> &[u16] {
        &self.z
    }

    /// Exponent of `g` in the monomial.
    pub fn exponent(&self, ctx: RingCtx, g: Gen) -> u16 {
        let s = g.slot(ctx.copies);
        match g.kind {
            GenKind::Z => self.z[s],
            GenKind::D => self.d[s],
        }
    }

    pub(crate) fn bump(&mut self, ctx: RingCtx, g: Gen, by: i32) {
        let s = g.slot(ctx.copies);
        let e = match g.kind {
            GenKind::Z => &mut self.z[s],
            GenKind::D => &mut self.d[s],
        };
        *e = (*e as i32 + by) as u16;
    }

    pub(crate) fn with(&self, ctx: RingCtx, g: Gen) -> NormalMonomial {
        let mut m = self.clone();
        m.bump(ctx, g, 1);
        m
    }

    /// Generators of the canonical word, left to right.
    pub fn word(&self, ctx: RingCtx) -> Vec<Gen> {
        let mut out = Vec::with_capacity(self.degree());
        for (kind, exps) in [(GenKind::D, &self.d), (GenKind::Z, &self.z)] {
            for site in (1..=ctx.n).rev() {
                for copy in 1..=ctx.copies {
                    let g = Gen::new(kind, site, copy);
                    for _ in 0..exps[g.slot(ctx.copies)] {
                        out.push(g);
                    }
                }
            }
        }
        out
    }

    /// First generator of the canonical word.
    pub(crate) fn first(&self, ctx: RingCtx) -> Option<Gen> {
        for (kind, exps) in [(GenKind::D, &self.d), (GenKind::Z, &self.z)] {
            for site in (1..=ctx.n).rev() {
                for copy in 1..=ctx.copies {
                    if exps[(site - 1) * ctx.copies + copy - 1] > 0 {
                        return Some(Gen::new(kind, site, copy));
                    }
                }
            }
        }
        None
    }

    /// `m · f = f[shift] · m`.
    pub fn shift(&self, ctx: RingCtx) -> ShiftVector {
        let mut offsets = vec![0i64; ctx.n];
        for site in 1..=ctx.n {
            for copy in 1..=ctx.copies {
                let s = (site - 1) * ctx.copies + copy - 1;
                offsets[site - 1] += self.d[s] as i64 - self.z[s] as i64;
            }
        }
        ShiftVector::from_offsets(offsets)
    }

    /// Weight: net number of `Z^i` minus `∂_i` per site.
    pub fn weight(&self, ctx: RingCtx) -> Vec<i64> {
        self.shift(ctx).offsets.iter().map(|d| -d).collect()
    }

    pub fn fmt_word(&self, ctx: RingCtx) -> String {
        self.word(ctx)
            .iter()
            .map(|g| fmt_gen(ctx, *g))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Prints a generator with the copy index only when `N > 1`.
pub fn fmt_gen(ctx: RingCtx, g: Gen) -> String {
    let s = match g.kind {
        GenKind::Z => "Z",
        GenKind::D => "d",
    };
    if ctx.copies == 1 {
        format!("{s}[{}]", g.site)
    } else {
        format!("{s}[{},{}]", g.site, g.copy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_word_order() {
        let ctx = RingCtx::new(3, 2).unwrap();
        let mut m = NormalMonomial::one(ctx);
        for g in [
            Gen::new(GenKind::Z, 1, 1),
            Gen::new(GenKind::Z, 3, 2),
            Gen::new(GenKind::Z, 3, 1),
            Gen::new(GenKind::D, 2, 2),
            Gen::new(GenKind::D, 3, 1),
        ] {
            m.bump(ctx, g, 1);
        }
        let w: Vec<String> = m.word(ctx).iter().map(|g| fmt_gen(ctx, *g)).collect();
        assert_eq!(w, ["d[3,1]", "d[2,2]", "Z[3,1]", "Z[3,2]", "Z[1,1]"]);
        assert_eq!(m.first(ctx), Some(Gen::new(GenKind::D, 3, 1)));
        assert_eq!(m.shift(ctx).offsets, vec![-1, 1, -1]);
    }

    #[test]
    fn ctx_bounds() {
        assert!(RingCtx::new(0, 1).is_err());
        let ctx = RingCtx::single(2).unwrap();
        assert!(ctx.gen(GenKind::Z, 3, 1).is_err());
        assert!(ctx.gen(GenKind::Z, 2, 2).is_err());
    }
}
