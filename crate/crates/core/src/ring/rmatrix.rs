//! The dynamical R-matrix `R̂(h̃)` and its Yang-Baxter check.

use crate::coeff::{RatFunc, ShiftVector};
use crate::error::{check_index, Result};

/// Entry `R̂^{ij}_{kl}` in dimension `n`.
pub fn rhat(i: usize, j: usize, k: usize, l: usize, n: usize) -> Result<RatFunc> {
    for (what, x) in [("i", i), ("j", j), ("k", k), ("l", l)] {
        check_index(what, x, 1, n)?;
    }
    Ok(rhat_unchecked(i, j, k, l))
}

fn rhat_unchecked(i: usize, j: usize, k: usize, l: usize) -> RatFunc {
    if (k, l) == (j, i) {
        if i < j {
            let h = RatFunc::hij(i, j);
            let h2 = &h * &h;
            &(&h2 - &RatFunc::one()) / &h2
        } else {
            RatFunc::one()
        }
    } else if (k, l) == (i, j) && i != j {
        RatFunc::hij(i, j).inv().expect("nonzero")
    } else {
        RatFunc::zero()
    }
}

/// A component of the dynamical Yang-Baxter equation that failed.
#[derive(Clone, Debug)]
pub struct DybeFailure {
    pub indices: [usize; 6],
    pub lhs: RatFunc,
    pub rhs: RatFunc,
}

#[derive(Clone, Debug)]
pub struct DybeReport {
    pub n: usize,
    pub checked: usize,
    pub failures: Vec<DybeFailure>,
}

impl DybeReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every index tuple `(i, j, k, m, p, r)`,
/// `Σ R̂^{ij}_{ab} R̂^{bk}_{ur}[−ε_a] R̂^{au}_{mp}
///  = Σ R̂^{jk}_{ab}[−ε_i] R̂^{ia}_{mu} R̂^{ub}_{pr}[−ε_m]`.
pub fn verify_dybe(n: usize) -> Result<DybeReport> {
    check_index("n", n, 1, 8)?;
    let r = |i, j, k, l| rhat_unchecked(i, j, k, l);
    let down = |a: usize| ShiftVector::unit(a, n, -1);
    let mut checked = 0;
    let mut failures = Vec::new();
    let idx: Vec<usize> = (1..=n).collect();
    for &i in &idx {
        for &j in &idx {
            for &k in &idx {
                for &m in &idx {
                    for &p in &idx {
                        for &rr in &idx {
                            let mut lhs = RatFunc::zero();
                            let mut rhs = RatFunc::zero();
                            for &a in &idx {
                                for &b in &idx {
                                    for &u in &idx {
                                        let x = r(i, j, a, b);
                                        if !x.is_zero() {
                                            let y = r(b, k, u, rr);
                                            let z = r(a, u, m, p);
                                            if !y.is_zero() && !z.is_zero() {
                                                lhs = &lhs + &(&(&x * &y.shift(&down(a))) * &z);
                                            }
                                        }
                                        let x = r(j, k, a, b);
                                        if !x.is_zero() {
                                            let y = r(i, a, m, u);
                                            let z = r(u, b, p, rr);
                                            if !y.is_zero() && !z.is_zero() {
                                                rhs = &rhs
                                                    + &(&(&x.shift(&down(i)) * &y) * &z.shift(&down(m)));
                                            }
                                        }
                                    }
                                }
                            }
                            checked += 1;
                            if lhs != rhs {
                                failures.push(DybeFailure {
                                    indices: [i, j, k, m, p, rr],
                                    lhs,
                                    rhs,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(DybeReport {
        n,
        checked,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries() {
        let h = RatFunc::hij(1, 2);
        assert_eq!(rhat(1, 2, 1, 2, 2).unwrap(), h.inv().unwrap());
        assert_eq!(rhat(2, 1, 1, 2, 2).unwrap(), RatFunc::one());
        assert_eq!(rhat(1, 1, 1, 1, 2).unwrap(), RatFunc::one());
        assert!(rhat(1, 1, 1, 2, 2).unwrap().is_zero());
        assert!(rhat(1, 3, 1, 2, 2).is_err());
    }
}
