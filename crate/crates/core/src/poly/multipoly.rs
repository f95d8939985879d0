use std::collections::BTreeMap;
use std::fmt;

use super::monomial::Monomial;
use crate::domain::Domain;
use crate::error::{Error, Result};

/// Total degree, with `-∞` for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// Degree with `-∞` clamped to 0, for bound arithmetic.
    pub fn or_zero(self) -> u32 {
        self.finite().unwrap_or(0)
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse polynomial in `nvars` variables; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<D: Domain> {
    ring: D,
    nvars: usize,
    terms: BTreeMap<Monomial, D::Elem>,
}

impl<D: Domain> MultiPoly<D> {
    pub fn zero(ring: &D, nvars: usize) -> Self {
        MultiPoly { ring: ring.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(ring: &D, nvars: usize, c: D::Elem) -> Self {
        Self::monomial(ring, Monomial::one(nvars), c)
    }

    pub fn one(ring: &D, nvars: usize) -> Self {
        Self::constant(ring, nvars, ring.one())
    }

    pub fn var(ring: &D, nvars: usize, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(nvars, i), ring.one())
    }

    pub fn monomial(ring: &D, mono: Monomial, c: D::Elem) -> Self {
        let nvars = mono.nvars();
        let mut p = Self::zero(ring, nvars);
        if !ring.is_zero(&c) {
            p.terms.insert(mono, c);
        }
        p
    }

    /// Builds from terms, summing repeated monomials.
    pub fn from_terms(ring: &D, nvars: usize, terms: impl IntoIterator<Item = (Monomial, D::Elem)>) -> Self {
        let mut p = Self::zero(ring, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &D {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &D::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> D::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, m: Monomial, c: D::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = self.ring.add(existing, &c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Mismatch(format!(
                "domains {} and {}",
                self.ring.descriptor(),
                other.ring.descriptor()
            )));
        }
        if self.nvars != other.nvars {
            return Err(Error::Mismatch(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.ring.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(&self.ring, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), self.ring.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_terms(|c| self.ring.neg(c))
    }

    pub fn scale(&self, c: &D::Elem) -> Self {
        if self.ring.is_zero(c) {
            return Self::zero(&self.ring, self.nvars);
        }
        self.map_terms(|x| self.ring.mul(x, c))
    }

    fn map_terms(&self, f: impl Fn(&D::Elem) -> D::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|(_, c)| !self.ring.is_zero(c))
            .collect();
        MultiPoly { ring: self.ring.clone(), nvars: self.nvars, terms }
    }

    /// Multiplies by the monomial `m`.
    pub fn shift(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
        MultiPoly { ring: self.ring.clone(), nvars: self.nvars, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring, self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Canonical generator of the ideal generated by the coefficients.
    pub fn content(&self) -> D::Elem {
        self.ring.ideal_gen(self.terms.values())
    }

    pub fn eval(&self, point: &[D::Elem]) -> Result<D::Elem> {
        if point.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, got: point.len() });
        }
        let r = &self.ring;
        let mut acc = r.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = r.mul(&t, &r.pow(x, e as u64));
                }
            }
            acc = r.add(&acc, &t);
        }
        Ok(acc)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == k)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MultiPoly { ring: self.ring.clone(), nvars: self.nvars, terms }
    }

    /// Applies a coefficient map into another domain (a ring homomorphism
    /// when `f` is one).
    pub fn map_coeffs<E: Domain>(&self, target: &E, f: impl Fn(&D::Elem) -> E::Elem) -> MultiPoly<E> {
        let mut out = MultiPoly::zero(target, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Tries to map every coefficient; `None` if any coefficient has no image.
    pub fn try_map_coeffs<E: Domain>(
        &self,
        target: &E,
        f: impl Fn(&D::Elem) -> Option<E::Elem>,
    ) -> Option<MultiPoly<E>> {
        let mut out = MultiPoly::zero(target, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Some(out)
    }

    /// Re-embeds into a ring with `new_nvars >= nvars` variables, placing the
    /// old variables at `offset..offset+nvars`.
    pub fn embed(&self, new_nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= new_nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; new_nvars];
                e[offset..offset + self.nvars].copy_from_slice(m.exponents());
                (Monomial::new(e), c.clone())
            })
            .collect();
        MultiPoly { ring: self.ring.clone(), nvars: new_nvars, terms }
    }
}

impl<'a, D: Domain> std::ops::Add for &'a MultiPoly<D> {
    type Output = MultiPoly<D>;
    fn add(self, rhs: Self) -> MultiPoly<D> {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a, D: Domain> std::ops::Sub for &'a MultiPoly<D> {
    type Output = MultiPoly<D>;
    fn sub(self, rhs: Self) -> MultiPoly<D> {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a, D: Domain> std::ops::Mul for &'a MultiPoly<D> {
    type Output = MultiPoly<D>;
    fn mul(self, rhs: Self) -> MultiPoly<D> {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<D: Domain> std::ops::Neg for &MultiPoly<D> {
    type Output = MultiPoly<D>;
    fn neg(self) -> MultiPoly<D> {
        MultiPoly::neg(self)
    }
}

impl<D: Domain> fmt::Debug for MultiPoly<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::default_var_names(self.nvars);
        write!(f, "{}", self.to_text(&names))
    }
}

/// `Σ a_j * b_j` over equal-length slices.
pub fn dot<D: Domain>(a: &[MultiPoly<D>], b: &[MultiPoly<D>]) -> Result<MultiPoly<D>> {
    if a.len() != b.len() {
        return Err(Error::Shape(format!("dot of lengths {} and {}", a.len(), b.len())));
    }
    let Some(first) = a.first() else {
        return Err(Error::Shape("empty dot product".into()));
    };
    let mut acc = MultiPoly::zero(first.ring(), first.nvars());
    for (x, y) in a.iter().zip(b) {
        acc = acc.checked_add(&x.checked_mul(y)?)?;
    }
    Ok(acc)
}
