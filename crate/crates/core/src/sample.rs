//! Seeded random elements for fuzzing and the CLI suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{Poly, RatFunc, Var};
use crate::ring::{Element, NormalMonomial, RingCtx};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A normal monomial of total degree at most `max_degree`.
pub fn monomial(ctx: RingCtx, rng: &mut impl Rng, max_degree: usize) -> NormalMonomial {
    let slots = ctx.slots();
    let mut d = vec![0u16; slots];
    let mut z = vec![0u16; slots];
    let degree = rng.gen_range(0..=max_degree);
    for _ in 0..degree {
        let slot = rng.gen_range(0..slots);
        if rng.gen_bool(0.5) {
            z[slot] += 1;
        } else {
            d[slot] += 1;
        }
    }
    NormalMonomial::from_exponents(ctx, &d, &z)
}

/// A small polynomial in the weights `h̃_1..h̃_n` with integer coefficients.
pub fn weight_poly(n: usize, rng: &mut impl Rng) -> RatFunc {
    let mut p = Poly::int(rng.gen_range(-3..=3));
    for _ in 0..rng.gen_range(0..=2) {
        let v = Poly::var(Var::h(rng.gen_range(1..=n)));
        p = &p + &(&Poly::int(rng.gen_range(1..=2)) * &v);
    }
    if p.is_zero() {
        p = Poly::one();
    }
    RatFunc::from_poly(p)
}

/// A random element with up to `max_terms` terms of degree at most `max_degree`.
pub fn element(ctx: RingCtx, rng: &mut impl Rng, max_degree: usize, max_terms: usize) -> Element {
    let mut out = Element::zero(ctx);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let m = monomial(ctx, rng, max_degree);
        out = &out + &Element::term(ctx, weight_poly(ctx.n(), rng), m);
    }
    out
}

/// A word of at most `max_len` random generators, evaluated to normal form.
pub fn word(ctx: RingCtx, rng: &mut impl Rng, max_len: usize) -> Element {
    let gens = ctx.generators();
    let len = rng.gen_range(1..=max_len.max(1));
    let letters: Vec<_> = (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
    Element::word(ctx, &letters)
}
