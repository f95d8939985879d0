use std::collections::HashMap;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{monomials_upto, Monomial, MultiPoly};

/// A matrix of polynomials over one ring, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<D: Domain> {
    ring: D,
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly<D>>,
}

impl<D: Domain> PolyMatrix<D> {
    pub fn from_rows(rows: Vec<Vec<MultiPoly<D>>>) -> Result<Self> {
        let Some(first) = rows.first().and_then(|r| r.first()) else {
            return Err(Error::Shape("matrix without entries".into()));
        };
        let (ring, nvars) = (first.ring().clone(), first.nvars());
        let cols = rows[0].len();
        for r in &rows {
            if r.len() != cols {
                return Err(Error::Shape("ragged polynomial matrix".into()));
            }
            for p in r {
                if p.ring() != &ring || p.nvars() != nvars {
                    return Err(Error::Mismatch("matrix entries from different rings".into()));
                }
            }
        }
        let nrows = rows.len();
        Ok(PolyMatrix { ring, nvars, rows: nrows, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// The `1 × n` matrix of a single equation.
    pub fn row(f: &[MultiPoly<D>]) -> Result<Self> {
        Self::from_rows(vec![f.to_vec()])
    }

    /// The `m × k` matrix whose columns are `columns` (each of length `m`).
    pub fn from_columns(columns: &[Vec<MultiPoly<D>>]) -> Result<Self> {
        let m = columns.first().map_or(0, Vec::len);
        Self::from_rows((0..m).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect())
    }

    pub fn ring(&self) -> &D {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly<D> {
        &self.entries[i * self.cols + j]
    }

    pub fn row_polys(&self, i: usize) -> &[MultiPoly<D>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_from(&self, from: usize) -> Result<Self> {
        Self::from_rows((from..self.rows).map(|i| self.row_polys(i).to_vec()).collect())
    }

    /// Largest entry degree, `0` for the zero matrix.
    pub fn degree(&self) -> u32 {
        self.entries.iter().map(|p| p.degree().or_zero()).max().unwrap_or(0)
    }

    pub fn mul_vec(&self, v: &[MultiPoly<D>]) -> Result<Vec<MultiPoly<D>>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("{} columns but vector of length {}", self.cols, v.len())));
        }
        (0..self.rows).map(|i| crate::poly::dot(self.row_polys(i), v)).collect()
    }

    /// Whether `A v = 0` exactly.
    pub fn annihilates(&self, v: &[MultiPoly<D>]) -> Result<bool> {
        Ok(self.mul_vec(v)?.iter().all(MultiPoly::is_zero))
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape("hconcat of different row counts".into()));
        }
        Self::from_rows(
            (0..self.rows)
                .map(|i| self.row_polys(i).iter().chain(other.row_polys(i)).cloned().collect())
                .collect(),
        )
    }

    pub fn map_entries<E: Domain>(&self, f: impl Fn(&MultiPoly<D>) -> Option<MultiPoly<E>>) -> Option<PolyMatrix<E>> {
        let rows: Option<Vec<Vec<_>>> =
            (0..self.rows).map(|i| self.row_polys(i).iter().map(&f).collect()).collect();
        PolyMatrix::from_rows(rows?).ok()
    }
}

impl<D: Domain> std::fmt::Debug for PolyMatrix<D> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<_> = (0..self.rows).map(|i| self.row_polys(i).to_vec()).collect();
        write!(f, "{rows:?}")
    }
}

/// Index of each monomial of degree `<= cap` in `monomials_upto` order.
pub(crate) struct MonomialIndex {
    pub(crate) monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub(crate) fn new(nvars: usize, cap: usize) -> Self {
        let monos = monomials_upto(nvars, cap);
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialIndex { monos, index }
    }

    pub(crate) fn get(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub(crate) fn len(&self) -> usize {
        self.monos.len()
    }
}

/// The constant matrix of the degree-`<= cap` solutions of `A y = 0`, with
/// rows for each equation and monomial of degree `<= row_degree`.
pub(crate) fn unroll_to<D: Domain>(a: &PolyMatrix<D>, cap: usize, row_degree: usize) -> Matrix<D> {
    let ring = a.ring();
    let rows = MonomialIndex::new(a.nvars(), row_degree);
    let cols = monomials_upto(a.nvars(), cap);
    let mut m = Matrix::zero(ring, a.rows() * rows.len(), a.cols() * cols.len());
    for j in 0..a.cols() {
        for (k, nu) in cols.iter().enumerate() {
            let col = j * cols.len() + k;
            for i in 0..a.rows() {
                for (mu, c) in a.get(i, j).terms() {
                    if let Some(r) = rows.get(&mu.mul(nu)) {
                        m.set(i * rows.len() + r, col, c.clone());
                    }
                }
            }
        }
    }
    m
}

/// Unrolls `A y = 0` at cap `β`: `m·C(N+β+d, N)` rows and `n·C(N+β, N)`
/// columns, column blocks by unknown then monomial, rows by equation then
/// monomial, monomials in `monomials_upto` order.
pub fn unroll<D: Domain>(a: &PolyMatrix<D>, cap: usize) -> Matrix<D> {
    unroll_to(a, cap, cap + a.degree() as usize)
}

/// Coordinates of a polynomial vector with entries of degree `<= cap`, in
/// the column order of [`unroll`].
pub fn coordinates<D: Domain>(v: &[MultiPoly<D>], cap: usize) -> Result<Vec<D::Elem>> {
    let Some(first) = v.first() else {
        return Ok(Vec::new());
    };
    let idx = MonomialIndex::new(first.nvars(), cap);
    coordinates_in(&idx, first.ring(), v)
}

pub(crate) fn coordinates_in<D: Domain>(idx: &MonomialIndex, ring: &D, v: &[MultiPoly<D>]) -> Result<Vec<D::Elem>> {
    let mut out = vec![ring.zero(); v.len() * idx.len()];
    for (j, p) in v.iter().enumerate() {
        for (m, c) in p.terms() {
            let k = idx
                .get(m)
                .ok_or_else(|| Error::Precondition(format!("entry of degree {} exceeds the cap", m.degree())))?;
            out[j * idx.len() + k] = c.clone();
        }
    }
    Ok(out)
}

/// Inverse of [`coordinates`]: `n` polynomials from `n·C(N+cap, N)` values.
pub fn reroll<D: Domain>(ring: &D, nvars: usize, n: usize, cap: usize, coords: &[D::Elem]) -> Result<Vec<MultiPoly<D>>> {
    let monos = monomials_upto(nvars, cap);
    if coords.len() != n * monos.len() {
        return Err(Error::Shape(format!(
            "{} coordinates for {n} polynomials of degree <= {cap} in {nvars} variables",
            coords.len()
        )));
    }
    Ok(coords
        .chunks(monos.len())
        .map(|chunk| MultiPoly::from_terms(ring, nvars, monos.iter().cloned().zip(chunk.iter().cloned())))
        .collect())
}
