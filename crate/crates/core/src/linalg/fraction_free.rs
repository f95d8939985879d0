//! Fraction-free elimination for rational systems.
//!
//! Rows are cleared of denominators and reduced with Bareiss' exact-division
//! step, so intermediate entries stay minors of the input instead of
//! accumulating rational gcd work. Pivot columns are the lexicographically
//! first independent ones and free unknowns are set to zero, which makes the
//! particular solution the same one reduced row echelon form produces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// Solution of `A y = b` over `Q` with free unknowns zero, or `None`.
pub(crate) fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational], n: usize) -> Option<Vec<BigRational>> {
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            integer_row(&r)
        })
        .collect();
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, below) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pc = &pivot_row[c];
        for row in below.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..=n {
                if f.is_zero() || pivot_row[j].is_zero() {
                    if !row[j].is_zero() {
                        row[j] = pc * &row[j] / &prev;
                    }
                } else {
                    row[j] = (pc * &row[j] - &f * &pivot_row[j]) / &prev;
                }
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut y = vec![BigRational::zero(); n];
    for (k, &c) in pivots.iter().enumerate().rev() {
        let mut acc = BigRational::from_integer(m[k][n].clone());
        for &j in &pivots[k + 1..] {
            if !m[k][j].is_zero() {
                acc -= &y[j] * BigRational::from_integer(m[k][j].clone());
            }
        }
        y[c] = acc / BigRational::from_integer(m[k][c].clone());
    }
    Some(y)
}
