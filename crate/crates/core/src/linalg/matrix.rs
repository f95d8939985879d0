use std::fmt;

use serde_json::Value;

use crate::domain::Domain;
use crate::error::{Error, Result};

/// Dense row-major matrix over a domain.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<D: Domain> {
    ring: D,
    rows: usize,
    cols: usize,
    data: Vec<D::Elem>,
}

impl<D: Domain> Matrix<D> {
    pub fn zero(ring: &D, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &D, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: &D, rows: Vec<Vec<D::Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        let nrows = rows.len();
        Ok(Matrix { ring: ring.clone(), rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(ring: &D, rows: usize, columns: &[Vec<D::Elem>]) -> Result<Self> {
        let mut m = Self::zero(ring, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape(format!("column of length {} in {rows}-row matrix", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(ring: &D, rows: &[&[i64]]) -> Self {
        Self::from_rows(ring, rows.iter().map(|r| r.iter().map(|&x| ring.from_i64(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn ring(&self) -> &D {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &D::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: D::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[D::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<D::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<D::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<D::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.ring.is_zero(x))
    }

    /// Rows `from..` as a new matrix.
    pub fn rows_from(&self, from: usize) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows - from,
            cols: self.cols,
            data: self.data[from * self.cols..].to_vec(),
        }
    }

    pub fn mul_vec(&self, v: &[D::Elem]) -> Result<Vec<D::Elem>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("{}x{} matrix times length-{} vector", self.rows, self.cols, v.len())));
        }
        let r = &self.ring;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(r.zero(), |acc, (a, b)| {
                    if r.is_zero(a) || r.is_zero(b) {
                        acc
                    } else {
                        r.add(&acc, &r.mul(a, b))
                    }
                })
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix<D>) -> Result<Matrix<D>> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cols: Vec<Vec<D::Elem>> = (0..other.cols)
            .map(|j| self.mul_vec(&other.column(j)))
            .collect::<Result<_>>()?;
        Matrix::from_columns(&self.ring, self.rows, &cols)
    }

    /// Appends the columns of `other`.
    pub fn hconcat(&self, other: &Matrix<D>) -> Result<Matrix<D>> {
        if self.rows != other.rows {
            return Err(Error::Shape("hconcat of different heights".into()));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        Matrix::from_columns(&self.ring, self.rows, &cols)
    }

    /// Row-major nested array of decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(self.row(i).iter().map(|x| Value::String(self.ring.format_elem(x))).collect())
                })
                .collect(),
        )
    }

    pub fn from_json(ring: &D, value: &Value) -> Result<Self> {
        let bad = || Error::Parse { pos: 0, msg: "matrix JSON must be an array of arrays of strings".into() };
        let rows = value.as_array().ok_or_else(bad)?;
        let rows = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| ring.parse_elem(x.as_str().ok_or_else(bad)?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(ring, rows)
    }
}

impl<D: Domain> fmt::Debug for Matrix<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}
