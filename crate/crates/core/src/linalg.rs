//! Exact row reduction over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Reduced row echelon form of `rows`, zero rows dropped.
///
/// Pivots are taken column by column from the left; within a column the
/// first remaining row with a nonzero entry is the pivot row.
pub fn rref(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, found);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r == pivot_row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..ncols {
                let delta = &factor * &m[pivot_row][c];
                m[r][c] -= delta;
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    m
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows).len()
}

/// Solves `Σ xᵢ·basis[i] = target` for a linearly independent `basis`.
pub fn coordinates(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let n = target.len();
    // augmented system: columns are basis vectors
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let reduced = rref(&rows);
    let mut x = vec![Rational::zero(); k];
    for row in &reduced {
        let pivot = row.iter().position(|v| !v.is_zero())?;
        if pivot == k {
            return None;
        }
        debug_assert!(row[pivot].is_one());
        x[pivot] = row[k].clone();
    }
    Some(x)
}
