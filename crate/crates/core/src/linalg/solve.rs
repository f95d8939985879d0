use crate::domain::{Domain, DomainDescriptor};
use crate::error::{Error, Result};

use super::hnf::{echelon_columns, hnf};
use super::Matrix;

/// Kernel basis read off the zero columns of the Hermite form.
pub fn kernel_basis_hnf<D: Domain>(a: &Matrix<D>) -> Vec<Vec<D::Elem>> {
    let h = hnf(a);
    (h.rank..a.cols()).map(|j| h.u.column(j)).collect()
}

/// Particular solution of `A y = b` via the Hermite form, or `None`.
pub fn solve_hnf<D: Domain>(a: &Matrix<D>, b: &[D::Elem]) -> Result<Option<Vec<D::Elem>>> {
    if b.len() != a.rows() {
        return Err(Error::Shape(format!("{} rows but right-hand side of length {}", a.rows(), b.len())));
    }
    let ring = a.ring();
    let h = hnf(a);
    let mut z: Vec<D::Elem> = vec![ring.zero(); a.cols()];
    let mut next_pivot = 0;
    for i in 0..a.rows() {
        let mut residual = b[i].clone();
        for l in 0..next_pivot {
            let e = h.h.get(i, l);
            if !ring.is_zero(e) {
                residual = ring.sub(&residual, &ring.mul(e, &z[l]));
            }
        }
        if h.pivot_rows.get(next_pivot) == Some(&i) {
            match ring.exact_div(&residual, h.h.get(i, next_pivot)) {
                Ok(x) => z[next_pivot] = x,
                Err(_) => return Ok(None),
            }
            next_pivot += 1;
        } else if !ring.is_zero(&residual) {
            return Ok(None);
        }
    }
    Ok(Some(h.u.mul_vec(&z)?))
}

/// Reduced row echelon form over a field, in place; returns pivot columns.
/// Only the first `pivot_cols` columns are eligible as pivots.
fn rref<D: Domain>(ring: &D, rows: &mut [Vec<D::Elem>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !ring.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = ring.unit_inverse(&rows[r][c]).expect("nonzero field element");
        if !ring.is_one(&inv) {
            for x in rows[r].iter_mut() {
                if !ring.is_zero(x) {
                    *x = ring.mul(x, &inv);
                }
            }
        }
        let support: Vec<usize> = (c..rows[r].len()).filter(|&j| !ring.is_zero(&rows[r][j])).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || ring.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] = ring.sub(&row[j], &ring.mul(&f, &pivot_row[j]));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn kernel_basis_field<D: Domain>(a: &Matrix<D>) -> Vec<Vec<D::Elem>> {
    let ring = a.ring();
    let mut rows = a.row_vecs();
    let pivots = rref(ring, &mut rows, a.cols());
    let mut is_pivot = vec![None; a.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..a.cols())
        .filter(|&f| is_pivot[f].is_none())
        .map(|f| {
            let mut v = vec![ring.zero(); a.cols()];
            v[f] = ring.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = ring.neg(&rows[r][f]);
            }
            v
        })
        .collect()
}

pub(crate) fn solve_field<D: Domain>(a: &Matrix<D>, b: &[D::Elem]) -> Result<Option<Vec<D::Elem>>> {
    if b.len() != a.rows() {
        return Err(Error::Shape(format!("{} rows but right-hand side of length {}", a.rows(), b.len())));
    }
    let ring = a.ring();
    if ring.descriptor() == DomainDescriptor::Rationals {
        let q = |x: &D::Elem| ring.to_rational(x).expect("rational element");
        let rows: Vec<Vec<_>> = (0..a.rows()).map(|i| a.row(i).iter().map(q).collect()).collect();
        let rhs: Vec<_> = b.iter().map(q).collect();
        return Ok(super::fraction_free::solve_rational(&rows, &rhs, a.cols())
            .map(|y| y.iter().map(|v| ring.from_rational(v).expect("rational element")).collect()));
    }
    Ok(solve_rref(a, b))
}

pub(crate) fn solve_rref<D: Domain>(a: &Matrix<D>, b: &[D::Elem]) -> Option<Vec<D::Elem>> {
    let ring = a.ring();
    let n = a.cols();
    let mut rows: Vec<Vec<D::Elem>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref(ring, &mut rows, n);
    if rows[pivots.len()..].iter().any(|r| !ring.is_zero(&r[n])) {
        return None;
    }
    let mut y = vec![ring.zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        y[c] = rows[r][n].clone();
    }
    Some(y)
}

/// Basis of `{y : A y = 0}`; Gaussian elimination over fields, Hermite form otherwise.
pub fn kernel<D: Domain>(a: &Matrix<D>) -> Vec<Vec<D::Elem>> {
    if a.ring().is_field() {
        kernel_basis_field(a)
    } else {
        kernel_basis_hnf(a)
    }
}

/// A particular solution of `A y = b`, or `None` when the system has no
/// solution over the domain.
pub fn solve<D: Domain>(a: &Matrix<D>, b: &[D::Elem]) -> Result<Option<Vec<D::Elem>>> {
    if a.ring().is_field() {
        solve_field(a, b)
    } else {
        solve_hnf(a, b)
    }
}

/// Rank over the fraction field.
pub fn rank<D: Domain>(a: &Matrix<D>) -> usize {
    let mut cols = a.columns();
    echelon_columns(a.ring(), a.rows(), &mut cols, None).len()
}

/// Determinant by fraction-free elimination (exact divisions only).
pub fn determinant<D: Domain>(a: &Matrix<D>) -> Result<D::Elem> {
    if a.rows() != a.cols() {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    let ring = a.ring();
    let n = a.rows();
    let mut m = a.row_vecs();
    let mut prev = ring.one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !ring.is_zero(&m[i][k])) else {
            return Ok(ring.zero());
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(&ring.mul(&m[k][k], &m[i][j]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.exact_div(&t, &prev)?;
            }
            m[i][k] = ring.zero();
        }
        prev = m[k][k].clone();
    }
    let det = m.last().map_or(ring.one(), |r| r[n - 1].clone());
    Ok(if negate { ring.neg(&det) } else { det })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Ideal generated by all `k×k` minors.
pub fn minor_ideal<D: Domain>(a: &Matrix<D>, k: usize) -> Result<D::Elem> {
    let ring = a.ring();
    let mut g = ring.zero();
    for cols in combinations(a.cols(), k) {
        let sub: Vec<Vec<D::Elem>> = (0..a.rows())
            .map(|i| cols.iter().map(|&j| a.get(i, j).clone()).collect())
            .collect();
        let det = determinant(&Matrix::from_rows(ring, sub)?)?;
        g = ring.gcd(&g, &det);
    }
    Ok(g)
}

/// Solvability of `A y = b` for `A` of full row rank `m`: the `m×m` minors of
/// `A` and of `(A | b)` generate the same ideal.
pub fn heger_solvable<D: Domain>(a: &Matrix<D>, b: &[D::Elem]) -> Result<bool> {
    if b.len() != a.rows() {
        return Err(Error::Shape(format!("{} rows but right-hand side of length {}", a.rows(), b.len())));
    }
    let m = a.rows();
    if rank(a) != m {
        return Err(Error::Precondition(format!("matrix does not have full row rank {m}")));
    }
    let ring = a.ring();
    let bcol = Matrix::from_columns(ring, m, &[b.to_vec()])?;
    let ab = a.hconcat(&bcol)?;
    Ok(minor_ideal(a, m)? == minor_ideal(&ab, m)?)
}
