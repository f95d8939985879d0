use serde::Serialize;

use crate::domain::Domain;
use crate::error::{Error, Result};

use super::hnf::span_contains;
use super::solve::kernel_basis_hnf;
use super::Matrix;

/// Which construction produced a generator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// The pairwise colon solutions `y^(i,j)` of a single row.
    SpecialPairs,
    /// The `n` solutions attached to a unit combination `Σ λ_i a_i`.
    UnitCombination,
    /// Row-by-row recursion through `B = A'·Z`.
    RowRecursion,
    /// Zero columns of the Hermite form.
    Hermite,
    /// Any of the above after dropping redundant vectors.
    Minimized,
}

/// Finitely many solutions of `A y = 0`, each checked on construction.
#[derive(Clone, Debug)]
pub struct GeneratorSet<D: Domain> {
    vectors: Vec<Vec<D::Elem>>,
    construction: Construction,
}

impl<D: Domain> GeneratorSet<D> {
    pub fn new(a: &Matrix<D>, vectors: Vec<Vec<D::Elem>>, construction: Construction) -> Result<Self> {
        let ring = a.ring();
        for v in &vectors {
            if a.mul_vec(v)?.iter().any(|x| !ring.is_zero(x)) {
                return Err(Error::Precondition(format!(
                    "{construction:?} produced a vector outside the kernel"
                )));
            }
        }
        Ok(GeneratorSet { vectors, construction })
    }

    pub fn vectors(&self) -> &[Vec<D::Elem>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<D::Elem>> {
        self.vectors
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

fn unit_vectors<D: Domain>(ring: &D, n: usize) -> Vec<Vec<D::Elem>> {
    (0..n)
        .map(|i| {
            let mut v = vec![ring.zero(); n];
            v[i] = ring.one();
            v
        })
        .collect()
}

/// The pairwise solutions of `a·y = 0`: for `i < j`, `(a_j : a_i)` in slot
/// `i` and `-(a_i : a_j)` in slot `j`. When `a = 0` the standard basis.
pub(crate) fn special_pairs<D: Domain>(ring: &D, a: &[D::Elem]) -> Vec<Vec<D::Elem>> {
    let n = a.len();
    if a.iter().all(|x| ring.is_zero(x)) {
        return unit_vectors(ring, n);
    }
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![ring.zero(); n];
            v[i] = ring.colon(&a[j], &a[i]);
            v[j] = ring.neg(&ring.colon(&a[i], &a[j]));
            out.push(v);
        }
    }
    out
}

/// Generators of the solutions of `a_1 y_1 + … + a_n y_n = 0`.
pub fn kernel_row<D: Domain>(ring: &D, a: &[D::Elem]) -> Result<GeneratorSet<D>> {
    if a.is_empty() {
        return Err(Error::Shape("empty row".into()));
    }
    let m = Matrix::from_rows(ring, vec![a.to_vec()])?;
    GeneratorSet::new(&m, special_pairs(ring, a), Construction::SpecialPairs)
}

/// Generators `y^(i)` attached to coefficients with `Σ λ_i a_i` a unit.
pub fn kernel_row_unit<D: Domain>(ring: &D, a: &[D::Elem], lambda: &[D::Elem]) -> Result<GeneratorSet<D>> {
    if a.len() != lambda.len() || a.is_empty() {
        return Err(Error::Shape("row and coefficient vector differ in length".into()));
    }
    let u = a
        .iter()
        .zip(lambda)
        .fold(ring.zero(), |acc, (x, l)| ring.add(&acc, &ring.mul(x, l)));
    if !ring.is_unit(&u) {
        return Err(Error::Precondition(format!("Σ λ_i a_i = {} is not a unit", ring.format_elem(&u))));
    }
    let n = a.len();
    let vectors = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    if k == i {
                        let s = (0..n)
                            .filter(|&l| l != i)
                            .fold(ring.zero(), |acc, l| ring.add(&acc, &ring.mul(&lambda[l], &a[l])));
                        ring.neg(&s)
                    } else {
                        ring.mul(&lambda[k], &a[i])
                    }
                })
                .collect()
        })
        .collect();
    let m = Matrix::from_rows(ring, vec![a.to_vec()])?;
    GeneratorSet::new(&m, vectors, Construction::UnitCombination)
}

/// Generators of `Sol(A)` by the row recursion: solve the first row with
/// the pairwise solutions `Z`, then recurse on `B = A'·Z` and map back.
pub fn kernel_matrix_recursive<D: Domain>(a: &Matrix<D>) -> Result<GeneratorSet<D>> {
    if a.rows() == 0 {
        return Err(Error::Shape("matrix without rows".into()));
    }
    let vectors = recursive_vectors(a)?;
    GeneratorSet::new(a, vectors, Construction::RowRecursion)
}

fn recursive_vectors<D: Domain>(a: &Matrix<D>) -> Result<Vec<Vec<D::Elem>>> {
    let ring = a.ring();
    let z = special_pairs(ring, a.row(0));
    if a.rows() == 1 || z.is_empty() {
        return Ok(z);
    }
    let zmat = Matrix::from_columns(ring, a.cols(), &z)?;
    let b = a.rows_from(1).mul(&zmat)?;
    recursive_vectors(&b)?
        .into_iter()
        .map(|w| zmat.mul_vec(&w))
        .collect()
}

/// Basis of `Sol(A)` from the Hermite form.
pub fn kernel_hnf<D: Domain>(a: &Matrix<D>) -> Result<GeneratorSet<D>> {
    GeneratorSet::new(a, kernel_basis_hnf(a), Construction::Hermite)
}

/// Drops vectors lying in the span of the others, scanning from the back.
pub fn minimize<D: Domain>(ring: &D, set: &GeneratorSet<D>) -> GeneratorSet<D> {
    let mut kept: Vec<Vec<D::Elem>> = set.vectors.clone();
    let mut i = kept.len();
    while i > 0 {
        i -= 1;
        let v = kept[i].clone();
        let others: Vec<_> = kept.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, w)| w.clone()).collect();
        if v.iter().all(|x| ring.is_zero(x)) || span_contains(ring, &others, &v) {
            kept.remove(i);
        }
    }
    GeneratorSet { vectors: kept, construction: Construction::Minimized }
}
