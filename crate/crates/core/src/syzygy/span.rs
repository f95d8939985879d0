use crate::domain::Domain;
use crate::linalg::Echelon;
use crate::poly::{monomials_upto, MultiPoly};

use super::unroll::{coordinates_in, MonomialIndex};

/// The R-span of all monomial multiples `X^μ·g` of degree `<= degree` of a
/// set of polynomial vectors `g`. Containment in it certifies membership in
/// the `R[X]`-module generated by the `g`.
pub struct TruncatedModule<D: Domain> {
    ring: D,
    nvars: usize,
    degree: usize,
    index: MonomialIndex,
    echelon: Echelon<D>,
}

fn vec_degree<D: Domain>(v: &[MultiPoly<D>]) -> Option<u32> {
    v.iter().filter_map(|p| p.degree().finite()).max()
}

impl<D: Domain> TruncatedModule<D> {
    pub fn new(ring: &D, nvars: usize, n: usize, degree: usize) -> Self {
        let index = MonomialIndex::new(nvars, degree);
        let len = n * index.len();
        TruncatedModule { ring: ring.clone(), nvars, degree, index, echelon: Echelon::new(ring, len) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds the shifts of one generator.
    pub fn add(&mut self, g: &[MultiPoly<D>]) {
        self.add_all(std::slice::from_ref(&g.to_vec()));
    }

    pub fn add_all(&mut self, gens: &[Vec<MultiPoly<D>>]) {
        let mut cols = Vec::new();
        for g in gens {
            let Some(e) = vec_degree(g) else { continue };
            let e = e as usize;
            if e > self.degree {
                continue;
            }
            for mu in monomials_upto(self.nvars, self.degree - e) {
                let shifted: Vec<_> = g.iter().map(|p| p.shift(&mu)).collect();
                cols.push(coordinates_in(&self.index, &self.ring, &shifted).expect("degree checked"));
            }
        }
        self.echelon.extend(cols);
    }

    pub fn contains(&self, v: &[MultiPoly<D>]) -> bool {
        match vec_degree(v) {
            None => true,
            Some(e) if e as usize > self.degree => false,
            Some(_) => self.echelon.contains(&coordinates_in(&self.index, &self.ring, v).expect("degree checked")),
        }
    }

    /// Rank over the fraction field of the truncated span.
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }
}

/// Whether `v` is an `R[X]`-combination of `gens` with all products of degree `<= degree`.
pub fn module_contains<D: Domain>(gens: &[Vec<MultiPoly<D>>], v: &[MultiPoly<D>], degree: usize) -> bool {
    let Some(first) = v.first() else { return true };
    let mut t = TruncatedModule::new(first.ring(), first.nvars(), v.len(), degree);
    t.add_all(gens);
    t.contains(v)
}

/// Mutual [`module_contains`] of two generating sets at a common truncation degree.
pub fn same_module<D: Domain>(a: &[Vec<MultiPoly<D>>], b: &[Vec<MultiPoly<D>>], n: usize, degree: usize) -> bool {
    let Some(first) = a.iter().chain(b).flatten().next() else { return true };
    let (ring, nvars) = (first.ring(), first.nvars());
    let mut ta = TruncatedModule::new(ring, nvars, n, degree);
    ta.add_all(a);
    let mut tb = TruncatedModule::new(ring, nvars, n, degree);
    tb.add_all(b);
    b.iter().all(|v| ta.contains(v)) && a.iter().all(|v| tb.contains(v))
}
