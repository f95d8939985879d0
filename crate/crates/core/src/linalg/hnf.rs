//! Column-style Hermite normal form by unimodular column operations.
//!
//! Rows are scanned top to bottom. In each row the entries right of the
//! current pivot column are folded into it with 2x2 Bézout transforms, the
//! pivot is normalized to its canonical associate, and entries left of it
//! are reduced to canonical remainders. The nonzero columns of `H` are
//! therefore a canonical generating set of the column span, which is what
//! the span comparisons below rely on.

use crate::domain::Domain;

use super::Matrix;

/// `H = A·U` with `U` invertible; the first `rank` columns of `H` are the
/// pivot columns, the rest are zero.
#[derive(Clone, Debug)]
pub struct Hnf<D: Domain> {
    pub h: Matrix<D>,
    pub u: Matrix<D>,
    pub rank: usize,
    /// Row index of each pivot, in column order.
    pub pivot_rows: Vec<usize>,
}

/// Column operation `dst -= q * src` applied to a column list.
fn sub_mul<D: Domain>(ring: &D, cols: &mut [Vec<D::Elem>], dst: usize, src: usize, q: &D::Elem) {
    if ring.is_zero(q) {
        return;
    }
    let (d, s) = pair_mut(cols, dst, src);
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !ring.is_zero(y) {
            *x = ring.sub(x, &ring.mul(q, y));
        }
    }
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &mut T) {
    assert_ne!(a, b);
    if a < b {
        let (l, r) = v.split_at_mut(b);
        (&mut l[a], &mut r[0])
    } else {
        let (l, r) = v.split_at_mut(a);
        (&mut r[0], &mut l[b])
    }
}

/// Replaces columns `k, j` by `s*c_k + t*c_j` and `x*c_k + y*c_j`.
fn combine<D: Domain>(
    ring: &D,
    cols: &mut [Vec<D::Elem>],
    k: usize,
    j: usize,
    [s, t, x, y]: [&D::Elem; 4],
) {
    let (ck, cj) = pair_mut(cols, k, j);
    for (a, b) in ck.iter_mut().zip(cj.iter_mut()) {
        if ring.is_zero(a) && ring.is_zero(b) {
            continue;
        }
        let na = ring.add(&ring.mul(s, a), &ring.mul(t, b));
        let nb = ring.add(&ring.mul(x, a), &ring.mul(y, b));
        *a = na;
        *b = nb;
    }
}

fn scale<D: Domain>(ring: &D, col: &mut [D::Elem], u: &D::Elem) {
    if ring.is_one(u) {
        return;
    }
    for x in col.iter_mut() {
        *x = ring.mul(x, u);
    }
}

/// Brings `cols` (each of length `nrows`) to column Hermite form in place,
/// mirroring every operation on `track` when given. Returns the pivot rows.
pub(crate) fn echelon_columns<D: Domain>(
    ring: &D,
    nrows: usize,
    cols: &mut [Vec<D::Elem>],
    mut track: Option<&mut Vec<Vec<D::Elem>>>,
) -> Vec<usize> {
    let n = cols.len();
    let mut k = 0;
    let mut pivots = Vec::new();
    for i in 0..nrows {
        if k == n {
            break;
        }
        for j in k + 1..n {
            if ring.is_zero(&cols[j][i]) {
                continue;
            }
            if ring.is_zero(&cols[k][i]) {
                cols.swap(k, j);
                if let Some(u) = track.as_deref_mut() {
                    u.swap(k, j);
                }
                continue;
            }
            let a = cols[k][i].clone();
            let b = cols[j][i].clone();
            if let Ok(q) = ring.exact_div(&b, &a) {
                sub_mul(ring, cols, j, k, &q);
                if let Some(u) = track.as_deref_mut() {
                    sub_mul(ring, u, j, k, &q);
                }
                continue;
            }
            if let Ok(q) = ring.exact_div(&a, &b) {
                // swap roles so the divisor becomes the pivot
                cols.swap(k, j);
                sub_mul(ring, cols, j, k, &q);
                if let Some(u) = track.as_deref_mut() {
                    u.swap(k, j);
                    sub_mul(ring, u, j, k, &q);
                }
                continue;
            }
            let g = ring.gcd(&a, &b);
            let (s, t) = ring.bezout(&a, &b);
            let x = ring.neg(&ring.exact_div(&b, &g).expect("gcd divides"));
            let y = ring.exact_div(&a, &g).expect("gcd divides");
            combine(ring, cols, k, j, [&s, &t, &x, &y]);
            if let Some(u) = track.as_deref_mut() {
                combine(ring, u, k, j, [&s, &t, &x, &y]);
            }
        }
        if ring.is_zero(&cols[k][i]) {
            continue;
        }
        let unit = ring.canonical_unit(&cols[k][i]);
        scale(ring, &mut cols[k], &unit);
        if let Some(u) = track.as_deref_mut() {
            scale(ring, &mut u[k], &unit);
        }
        let pivot = cols[k][i].clone();
        for l in 0..k {
            let (q, _) = ring.div_rem(&cols[l][i], &pivot);
            sub_mul(ring, cols, l, k, &q);
            if let Some(u) = track.as_deref_mut() {
                sub_mul(ring, u, l, k, &q);
            }
        }
        pivots.push(i);
        k += 1;
    }
    pivots
}

/// Column Hermite normal form with transformation matrix.
pub fn hnf<D: Domain>(a: &Matrix<D>) -> Hnf<D> {
    let ring = a.ring();
    let mut cols = a.columns();
    let mut u = Matrix::identity(ring, a.cols()).columns();
    let pivot_rows = echelon_columns(ring, a.rows(), &mut cols, Some(&mut u));
    Hnf {
        h: Matrix::from_columns(ring, a.rows(), &cols).expect("shape preserved"),
        u: Matrix::from_columns(ring, a.cols(), &u).expect("shape preserved"),
        rank: pivot_rows.len(),
        pivot_rows,
    }
}

/// Canonical generators of the R-span of `vectors` (all of length `len`):
/// the nonzero columns of their Hermite form.
pub fn span_basis<D: Domain>(ring: &D, len: usize, vectors: &[Vec<D::Elem>]) -> Vec<Vec<D::Elem>> {
    let mut cols = vectors.to_vec();
    let pivots = echelon_columns(ring, len, &mut cols, None);
    cols.truncate(pivots.len());
    cols
}

/// Whether two families of vectors generate the same R-submodule.
pub fn same_span<D: Domain>(ring: &D, len: usize, a: &[Vec<D::Elem>], b: &[Vec<D::Elem>]) -> bool {
    span_basis(ring, len, a) == span_basis(ring, len, b)
}

/// Whether `v` lies in the span of columns already in Hermite form with the
/// given pivot rows (forward substitution; exact divisions only).
pub(crate) fn echelon_contains<D: Domain>(ring: &D, cols: &[Vec<D::Elem>], pivots: &[usize], v: &[D::Elem]) -> bool {
    let mut r = v.to_vec();
    let mut k = 0;
    for i in 0..r.len() {
        if ring.is_zero(&r[i]) {
            if pivots.get(k) == Some(&i) {
                k += 1;
            }
            continue;
        }
        if pivots.get(k) != Some(&i) {
            return false;
        }
        let Ok(q) = ring.exact_div(&r[i], &cols[k][i]) else {
            return false;
        };
        for (x, y) in r.iter_mut().zip(&cols[k]).skip(i) {
            if !ring.is_zero(y) {
                *x = ring.sub(x, &ring.mul(&q, y));
            }
        }
        k += 1;
    }
    true
}

/// Echelonized generators of a submodule of `R^len`, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct Echelon<D: Domain> {
    ring: D,
    len: usize,
    cols: Vec<Vec<D::Elem>>,
    pivots: Vec<usize>,
}

impl<D: Domain> Echelon<D> {
    pub fn new(ring: &D, len: usize) -> Self {
        Echelon { ring: ring.clone(), len, cols: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(ring: &D, len: usize, vectors: &[Vec<D::Elem>]) -> Self {
        let mut e = Self::new(ring, len);
        e.extend(vectors.iter().cloned());
        e
    }

    pub fn extend(&mut self, vectors: impl IntoIterator<Item = Vec<D::Elem>>) {
        let before = self.cols.len();
        self.cols.extend(vectors);
        if self.cols.len() == before {
            return;
        }
        self.pivots = echelon_columns(&self.ring, self.len, &mut self.cols, None);
        self.cols.truncate(self.pivots.len());
    }

    pub fn contains(&self, v: &[D::Elem]) -> bool {
        echelon_contains(&self.ring, &self.cols, &self.pivots, v)
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    pub fn basis(&self) -> &[Vec<D::Elem>] {
        &self.cols
    }
}

/// Whether `v` lies in the R-span of `gens`.
pub fn span_contains<D: Domain>(ring: &D, gens: &[Vec<D::Elem>], v: &[D::Elem]) -> bool {
    Echelon::from_vectors(ring, v.len(), gens).contains(v)
}
