//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Q>),
    /// Consistent, with this many free parameters.
    Family(usize),
    Inconsistent,
}

/// Solves `rows * x = rhs` for `x` of length `ncols`.
pub fn solve(rows: &[Vec<Q>], rhs: &[Q], ncols: usize) -> Solution {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            debug_assert_eq!(r.len(), ncols);
            let mut r = r.clone();
            r.push(*b);
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=ncols {
                    let d = m[row][c] * f;
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }

    if m[row..].iter().any(|r| !r[ncols].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < ncols {
        return Solution::Family(ncols - pivots.len());
    }
    let mut x = vec![Q::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols];
    }
    Solution::Unique(x)
}
