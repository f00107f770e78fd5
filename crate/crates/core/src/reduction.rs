//! The matrix `L` of `D(gl_n)` through `τ_N(L_i^j) = Σ_α Z^{j,α}∂_{i,α}`,
//! the reflection equation and the `S_n`-stability of the image.

use std::fmt;
use std::str::FromStr;

use crate::coeff::{linalg, RatFunc, ShiftVector};
use crate::error::{check_index, Error, Result};
use crate::report::{Check, Report};
use crate::ring::rmatrix::rhat;
use crate::ring::{Element, NormalMonomial, RingCtx};
use crate::symmetries::{GeneratorMap, MapKind};

/// `entry(i, j) = τ_N(L_i^j)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMatrix {
    ctx: RingCtx,
    entries: Vec<Vec<Element>>,
}

impl LMatrix {
    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    /// `τ_N(L_i^j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Element {
        &self.entries[i - 1][j - 1]
    }
}

pub fn tau_l(n: usize, copies: usize) -> Result<LMatrix> {
    let ctx = RingCtx::new(n, copies)?;
    let mut entries = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let mut e = Element::zero(ctx);
            for a in 1..=copies {
                let z = Element::z_copy(ctx, j, a)?;
                let d = Element::d_copy(ctx, i, a)?;
                e = &e + &z.product(&d)?;
            }
            row.push(e);
        }
        entries.push(row);
    }
    Ok(LMatrix { ctx, entries })
}

/// Index of the interior `R̂^{ab}_{cd}` whose weight is translated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftSlot {
    A,
    B,
    C,
    D,
}

/// Shift placement on the interior `R̂` factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InteriorShift {
    None,
    /// `R̂^{ab}_{cd}[sign·ε_slot]`
    Unit { slot: ShiftSlot, sign: i64 },
}

/// One candidate reading of the reflection equation.
///
/// `l_transposed` reads the operator entry `L^a_c` as `τ(L_a^c)` instead of
/// `τ(L_c^a)`; `r_transposed` uses `R̂^{cd}_{ab}` in place of `R̂^{ab}_{cd}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Convention {
    pub l_transposed: bool,
    pub r_transposed: bool,
    pub shift: InteriorShift,
}

impl Convention {
    /// The reading under which the equation holds for `n = 2`, `N = 1, 2`:
    /// `L^a_c = τ(L_c^a)`, `R̂^{ab}_{cd}` at its written position, no shifts.
    pub const PINNED: Convention = Convention {
        l_transposed: false,
        r_transposed: false,
        shift: InteriorShift::None,
    };

    /// The fixed candidate set searched by [`discover_reflection_convention`].
    pub fn candidates() -> Vec<Convention> {
        let mut shifts = vec![InteriorShift::None];
        for slot in [ShiftSlot::A, ShiftSlot::B, ShiftSlot::C, ShiftSlot::D] {
            for sign in [1, -1] {
                shifts.push(InteriorShift::Unit { slot, sign });
            }
        }
        let mut out = Vec::new();
        for l_transposed in [false, true] {
            for r_transposed in [false, true] {
                for &shift in &shifts {
                    out.push(Convention {
                        l_transposed,
                        r_transposed,
                        shift,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.l_transposed { "Lt" } else { "L" };
        let r = if self.r_transposed { "Rt" } else { "R" };
        match self.shift {
            InteriorShift::None => write!(f, "{l}-{r}-none"),
            InteriorShift::Unit { slot, sign } => {
                let s = match slot {
                    ShiftSlot::A => 'a',
                    ShiftSlot::B => 'b',
                    ShiftSlot::C => 'c',
                    ShiftSlot::D => 'd',
                };
                write!(f, "{l}-{r}-{s}{}", if sign > 0 { '+' } else { '-' })
            }
        }
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Convention> {
        Convention::candidates()
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::UnknownConvention(s.to_string()))
    }
}

/// Square matrix over `Diff_h(n, N)` indexed by pairs `(a, b)` of `V ⊗ V`.
struct PairMatrix {
    n: usize,
    entries: Vec<Element>,
}

impl PairMatrix {
    fn new(ctx: RingCtx, f: impl Fn(usize, usize, usize, usize) -> Result<Element>) -> Result<PairMatrix> {
        let n = ctx.n();
        let mut entries = Vec::with_capacity(n.pow(4));
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    for d in 1..=n {
                        entries.push(f(a, b, c, d)?);
                    }
                }
            }
        }
        Ok(PairMatrix { n, entries })
    }

    fn at(&self, row: usize, col: usize) -> &Element {
        &self.entries[row * self.n * self.n + col]
    }

    fn mul(&self, other: &PairMatrix) -> Result<PairMatrix> {
        let size = self.n * self.n;
        let ctx = self.entries[0].ctx();
        let mut entries = Vec::with_capacity(size * size);
        for r in 0..size {
            for c in 0..size {
                let mut acc = Element::zero(ctx);
                for k in 0..size {
                    let (x, y) = (self.at(r, k), other.at(k, c));
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &x.product(y)?;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(PairMatrix { n: self.n, entries })
    }

    fn sub(&self, other: &PairMatrix) -> PairMatrix {
        PairMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| x - y).collect(),
        }
    }
}

fn r_matrix(ctx: RingCtx, conv: Convention, interior: bool) -> Result<PairMatrix> {
    let n = ctx.n();
    PairMatrix::new(ctx, |a, b, c, d| {
        let mut r = if conv.r_transposed {
            rhat(c, d, a, b, n)?
        } else {
            rhat(a, b, c, d, n)?
        };
        if let (true, InteriorShift::Unit { slot, sign }) = (interior, conv.shift) {
            let k = match slot {
                ShiftSlot::A => a,
                ShiftSlot::B => b,
                ShiftSlot::C => c,
                ShiftSlot::D => d,
            };
            r = r.shift(&ShiftVector::unit(k, n, sign));
        }
        Ok(Element::scalar(ctx, r))
    })
}

fn l1_matrix(l: &LMatrix, conv: Convention) -> Result<PairMatrix> {
    PairMatrix::new(l.ctx(), |a, b, c, d| {
        Ok(if b != d {
            Element::zero(l.ctx())
        } else if conv.l_transposed {
            l.entry(a, c).clone()
        } else {
            l.entry(c, a).clone()
        })
    })
}

/// `R̂₁₂L₁R̂₁₂L₁ − L₁R̂₁₂L₁R̂₁₂ − (R̂₁₂L₁ − L₁R̂₁₂)` under `conv`, with the
/// shift applied to the interior `R̂` of each cubic term.
fn reflection_defect(l: &LMatrix, conv: Convention) -> Result<PairMatrix> {
    let ctx = l.ctx();
    let r = r_matrix(ctx, conv, false)?;
    let ri = r_matrix(ctx, conv, true)?;
    let l1 = l1_matrix(l, conv)?;
    let rl = r.mul(&l1)?;
    let lr = l1.mul(&r)?;
    let left = rl.mul(&ri)?.mul(&l1)?;
    let right = l1.mul(&ri)?.mul(&l1)?.mul(&r)?;
    Ok(left.sub(&right).sub(&rl.sub(&lr)))
}

/// Componentwise check of the reflection equation for `τ_N(L)`.
pub fn verify_reflection(n: usize, copies: usize, conv: Convention) -> Result<Report> {
    let l = tau_l(n, copies)?;
    let defect = reflection_defect(&l, conv)?;
    let mut report = Report::new();
    let idx = |p: usize| (p / n + 1, p % n + 1);
    for row in 0..n * n {
        for col in 0..n * n {
            let (a, b) = idx(row);
            let (c, d) = idx(col);
            let e = defect.at(row, col);
            report.push(Check::expect(
                format!("{conv} component {a}{b},{c}{d}"),
                e.is_zero(),
                || e.to_string(),
            ));
        }
    }
    Ok(report)
}

/// Result of searching the candidate conventions.
#[derive(Clone, Debug)]
pub struct Discovery {
    pub passing: Vec<Convention>,
    /// Failing components of every candidate when none passes.
    pub discrepancies: Report,
}

pub fn discover_reflection_convention(n: usize, copies: usize) -> Result<Discovery> {
    let mut passing = Vec::new();
    let mut discrepancies = Report::new();
    for conv in Convention::candidates() {
        let r = verify_reflection(n, copies, conv)?;
        if r.all_passed() {
            passing.push(conv);
        } else {
            for c in r.failures() {
                discrepancies.push(c.clone());
            }
        }
    }
    if !passing.is_empty() {
        discrepancies = Report::new();
    }
    Ok(Discovery {
        passing,
        discrepancies,
    })
}

/// Solves `Σ_b f_b · basis_b = target` for left coefficients `f_b`.
/// Free unknowns are set to zero; `None` if the system is inconsistent.
pub fn solve_left_combination(basis: &[Element], target: &Element) -> Option<Vec<RatFunc>> {
    let mut monos: Vec<NormalMonomial> = Vec::new();
    for e in basis.iter().chain(std::iter::once(target)) {
        for (m, _) in e.terms() {
            if !monos.contains(m) {
                monos.push(m.clone());
            }
        }
    }
    let a: Vec<Vec<RatFunc>> = monos
        .iter()
        .map(|m| basis.iter().map(|b| b.coefficient(m)).collect())
        .collect();
    let rhs: Vec<RatFunc> = monos.iter().map(|m| target.coefficient(m)).collect();
    linalg::solve(&a, &rhs)
}

fn image_basis(l: &LMatrix) -> Vec<Element> {
    let n = l.n();
    let mut basis = Vec::with_capacity(n * n + 1);
    for a in 1..=n {
        for b in 1..=n {
            basis.push(l.entry(a, b).clone());
        }
    }
    basis.push(Element::one(l.ctx()));
    basis
}

fn combine(basis: &[Element], coefs: &[RatFunc]) -> Element {
    let ctx = basis[0].ctx();
    basis
        .iter()
        .zip(coefs)
        .fold(Element::zero(ctx), |acc, (b, f)| &acc + &b.scale_left(f))
}

/// Coefficients of `s_i(τ_N(L_j^k))` over `{τ_N(L_a^b)} ∪ {1}`, ordered by
/// `(a, b)` with the constant last.
pub fn sn_image_coefficients(n: usize, copies: usize, i: usize, j: usize, k: usize) -> Result<Vec<RatFunc>> {
    let l = tau_l(n, copies)?;
    let s = GeneratorMap::build(MapKind::Sn(i), l.ctx())?;
    let target = s.apply(l.entry(j, k))?;
    solve_left_combination(&image_basis(&l), &target).ok_or_else(|| {
        Error::Evaluation(format!("s{i}(tau(L_{j}^{k})) is outside the span of the image"))
    })
}

/// For every `i, j, k`: `s_i(τ_N(L_j^k))` is a left `Ū(h)`-combination of the
/// `τ_N(L_a^b)` and `1`, and the same coefficients work for `N + 1`.
pub fn verify_sn_on_image(n: usize, copies: usize) -> Result<Report> {
    check_index("n", n, 2, 16)?;
    let l = tau_l(n, copies)?;
    let l_next = tau_l(n, copies + 1)?;
    let basis = image_basis(&l);
    let basis_next = image_basis(&l_next);
    let mut report = Report::new();
    for i in 1..n {
        let s = GeneratorMap::build(MapKind::Sn(i), l.ctx())?;
        let s_next = GeneratorMap::build(MapKind::Sn(i), l_next.ctx())?;
        for j in 1..=n {
            for k in 1..=n {
                let name = format!("s{i} L_{j}^{k}");
                let target = s.apply(l.entry(j, k))?;
                match solve_left_combination(&basis, &target) {
                    None => report.push(Check::fail(format!("{name} in image"), "no solution")),
                    Some(coefs) => {
                        report.push(Check::pass(format!("{name} in image")));
                        let want = s_next.apply(l_next.entry(j, k))?;
                        let got = combine(&basis_next, &coefs);
                        report.push(Check::expect(
                            format!("{name} same formula for N={}", copies + 1),
                            got == want,
                            || (&got - &want).to_string(),
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `h̃_i · τ(L_j^k) = τ(L_j^k) · (h̃_i + δ_i^k − δ_i^j)`.
pub fn verify_weight_grading(l: &LMatrix) -> Result<Report> {
    let ctx = l.ctx();
    let n = l.n();
    let mut report = Report::new();
    for j in 1..=n {
        for k in 1..=n {
            let e = l.entry(j, k);
            for i in 1..=n {
                let delta = (i == k) as i64 - (i == j) as i64;
                let lhs = Element::h(ctx, i)?.product(e)?;
                let rhs = e.scale_right(&(&RatFunc::h(i) + &RatFunc::int(delta)));
                report.push(Check::expect(format!("weight h{i} L_{j}^{k}"), lhs == rhs, || {
                    (&lhs - &rhs).to_string()
                }));
            }
        }
    }
    Ok(report)
}
