//! Gaussian elimination over the rational-function field.

use super::RatFunc;
use crate::error::{Error, Result};

/// Reduced row echelon form of an augmented system; returns pivot columns.
fn eliminate(rows: &mut [Vec<RatFunc>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Solves `a · x = b`, setting free unknowns to zero; `None` if inconsistent.
pub fn solve(a: &[Vec<RatFunc>], b: &[RatFunc]) -> Option<Vec<RatFunc>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<RatFunc>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut rows, cols);
    if rows[pivots.len()..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![RatFunc::zero(); cols];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = rows[k][cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix.
pub fn inverse(a: &[Vec<RatFunc>]) -> Result<Vec<Vec<RatFunc>>> {
    let n = a.len();
    let mut rows: Vec<Vec<RatFunc>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }));
            r
        })
        .collect();
    if eliminate(&mut rows, n).len() < n {
        return Err(Error::DivisionByZero);
    }
    Ok(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_two_by_two() {
        let h = RatFunc::h(1);
        let a = vec![
            vec![RatFunc::one(), h.clone()],
            vec![RatFunc::zero(), RatFunc::int(2)],
        ];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][1], -(&h / &RatFunc::int(2)));
        assert_eq!(inv[1][1], &RatFunc::one() / &RatFunc::int(2));
    }

    #[test]
    fn inconsistent_system() {
        let a = vec![vec![RatFunc::one()], vec![RatFunc::one()]];
        assert!(solve(&a, &[RatFunc::one(), RatFunc::int(2)]).is_none());
        assert_eq!(solve(&a, &[RatFunc::one(), RatFunc::one()]).unwrap(), vec![RatFunc::one()]);
    }
}
