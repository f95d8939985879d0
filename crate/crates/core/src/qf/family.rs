use std::collections::BTreeMap;

use crate::bounds::CapPolicy;
use crate::domain::{Domain, Integers};
use crate::error::{Error, Result};
use crate::linalg::{kernel_hnf, same_span};
use crate::poly::{monomials_upto, Monomial, MultiPoly};
use crate::syzygy::{same_module, syzygies_matrix, PolyMatrix};

use super::formula::Formula;
use super::term::{Evaluator, TermArena, TermId};

/// A polynomial in the variables whose coefficients are terms in the parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyTerm {
    pub nvars: usize,
    /// Increasing monomials; no coefficient is the literal `0`.
    pub terms: Vec<(Monomial, TermId)>,
}

impl PolyTerm {
    pub fn from_coefficients(arena: &TermArena, monos: &[Monomial], coeffs: &[TermId], nvars: usize) -> Self {
        let terms = monos
            .iter()
            .zip(coeffs)
            .filter(|(_, t)| !arena.is_literal(**t, 0))
            .map(|(m, t)| (m.clone(), *t))
            .collect();
        PolyTerm { nvars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval<D: Domain>(&self, ev: &mut Evaluator<'_, D>) -> MultiPoly<D> {
        let ring = ev.ring().clone();
        let terms: Vec<_> = self.terms.iter().map(|(m, t)| (m.clone(), ev.term(*t))).collect();
        MultiPoly::from_terms(&ring, self.nvars, terms)
    }
}

/// A matrix over `Z[C, X]`: entries are polynomials in `nparams + nvars`
/// variables, parameters first.
#[derive(Clone, Debug)]
pub struct ParamMatrix {
    pub nparams: usize,
    pub nvars: usize,
    pub rows: Vec<Vec<MultiPoly<Integers>>>,
}

impl ParamMatrix {
    pub fn new(nparams: usize, nvars: usize, rows: Vec<Vec<MultiPoly<Integers>>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || n == 0 {
            return Err(Error::Precondition("parametric matrix needs at least one row and one column".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("rows of different lengths".into()));
        }
        if rows.iter().flatten().any(|p| p.nvars() != nparams + nvars) {
            return Err(Error::Mismatch("entries must be polynomials in the parameters and variables".into()));
        }
        Ok(ParamMatrix { nparams, nvars, rows })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    /// Degree in the variables alone.
    pub fn degree_in_vars(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .flat_map(|p| p.terms().map(|(m, _)| m.split_at(self.nparams).1.degree() as usize))
            .max()
            .unwrap_or(0)
    }

    /// Coefficients of the variable monomials, as polynomials in the parameters.
    fn split(&self, p: &MultiPoly<Integers>) -> BTreeMap<Monomial, MultiPoly<Integers>> {
        let mut out: BTreeMap<Monomial, MultiPoly<Integers>> = BTreeMap::new();
        for (m, c) in p.terms() {
            let (cm, xm) = m.split_at(self.nparams);
            out.entry(xm)
                .or_insert_with(|| MultiPoly::zero(&Integers, self.nparams))
                .add_term(cm, c.clone());
        }
        out
    }

    /// `A(c, X)` over `ring`.
    pub fn eval<D: Domain>(&self, ring: &D, point: &[D::Elem]) -> Result<PolyMatrix<D>> {
        if point.len() != self.nparams {
            return Err(Error::Arity { expected: self.nparams, got: point.len() });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| {
                        let mut out = MultiPoly::zero(ring, self.nvars);
                        for (m, c) in p.terms() {
                            let (cm, xm) = m.split_at(self.nparams);
                            let mut v = ring.from_int(c);
                            for (x, &e) in point.iter().zip(cm.exponents()) {
                                v = ring.mul(&v, &ring.pow(x, e as u64));
                            }
                            out.add_term(xm, v);
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows)
    }
}

/// One case of a family: where `formula` holds, `generators` generate the solutions.
#[derive(Clone, Debug)]
pub struct Branch {
    pub formula: Formula,
    pub generators: Vec<Vec<PolyTerm>>,
}

/// Branch formulas with generator term vectors, uniform in the parameters.
#[derive(Clone, Debug)]
pub struct ParamFamily {
    pub arena: TermArena,
    pub source: ParamMatrix,
    /// Degree cap of the generators in the variables.
    pub beta: usize,
    pub branches: Vec<Branch>,
}

impl ParamFamily {
    pub fn nparams(&self) -> usize {
        self.source.nparams
    }

    pub fn nvars(&self) -> usize {
        self.source.nvars
    }

    /// Length of the generator vectors.
    pub fn n(&self) -> usize {
        self.source.cols()
    }

    pub fn generator_count(&self) -> usize {
        self.branches.iter().map(|b| b.generators.len()).sum()
    }

    /// Distinct term nodes used by the formulas and generators.
    pub fn term_count(&self) -> usize {
        self.arena.reachable(self.roots()).len()
    }

    pub(crate) fn roots(&self) -> Vec<TermId> {
        let mut out = Vec::new();
        for b in &self.branches {
            b.formula.terms(&mut out);
            for g in &b.generators {
                out.extend(g.iter().flat_map(|p| p.terms.iter().map(|(_, t)| *t)));
            }
        }
        out
    }
}

type TermBranch = (Formula, Vec<Vec<TermId>>);

fn is_zero_literal(arena: &TermArena, t: TermId) -> bool {
    arena.is_literal(t, 0)
}

fn unit_vector(arena: &mut TermArena, n: usize, i: usize) -> Vec<TermId> {
    let (z, o) = (arena.zero(), arena.one());
    (0..n).map(|k| if k == i { o } else { z }).collect()
}

/// Drops literal-zero vectors and repeats.
fn prune_vectors(arena: &TermArena, vectors: Vec<Vec<TermId>>) -> Vec<Vec<TermId>> {
    let mut out: Vec<Vec<TermId>> = Vec::new();
    for v in vectors {
        if v.iter().all(|&t| is_zero_literal(arena, t)) || out.contains(&v) {
            continue;
        }
        out.push(v);
    }
    out
}

/// The two cases for one row: all entries vanish (unit vectors), or not
/// (the pair solutions `(a_j : a_i)·e_i - (a_i : a_j)·e_j`).
fn row_branches(arena: &mut TermArena, a: &[TermId]) -> Vec<TermBranch> {
    let n = a.len();
    let all_zero = Formula::and(a.iter().map(|&t| Formula::eq0(arena, t)));
    let mut out = Vec::new();
    let not_zero = Formula::not(all_zero.clone());
    if !all_zero.is_false() {
        let gens = (0..n).map(|i| unit_vector(arena, n, i)).collect();
        out.push((all_zero, gens));
    }
    if !not_zero.is_false() {
        let z = arena.zero();
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![z; n];
                v[i] = arena.colon(a[j], a[i]);
                let c = arena.colon(a[i], a[j]);
                v[j] = arena.neg(c);
                gens.push(v);
            }
        }
        out.push((not_zero, prune_vectors(arena, gens)));
    }
    out
}

/// Row-by-row recursion on a matrix of terms with `n` columns.
fn matrix_branches(arena: &mut TermArena, rows: &[Vec<TermId>], n: usize) -> Vec<TermBranch> {
    let Some(pos) = rows.iter().position(|r| !r.iter().all(|&t| is_zero_literal(arena, t))) else {
        let gens = (0..n).map(|i| unit_vector(arena, n, i)).collect();
        return vec![(Formula::True, gens)];
    };
    let rest = &rows[pos + 1..];
    let mut out = Vec::new();
    for (phi, z) in row_branches(arena, &rows[pos]) {
        if rest.is_empty() || z.is_empty() {
            out.push((phi, z));
            continue;
        }
        // B = A'·Z, one column per generator of the first row
        let b: Vec<Vec<TermId>> = rest
            .iter()
            .map(|row| {
                z.iter()
                    .map(|col| {
                        let products: Vec<TermId> = row.iter().zip(col).map(|(&x, &y)| arena.mul(x, y)).collect();
                        arena.sum(products)
                    })
                    .collect()
            })
            .collect();
        for (psi, u) in matrix_branches(arena, &b, z.len()) {
            let formula = Formula::and([phi.clone(), psi]);
            if formula.is_false() {
                continue;
            }
            let gens: Vec<Vec<TermId>> = u
                .iter()
                .map(|uc| {
                    (0..n)
                        .map(|k| {
                            let products: Vec<TermId> = z.iter().zip(uc).map(|(zc, &w)| arena.mul(zc[k], w)).collect();
                            arena.sum(products)
                        })
                        .collect()
                })
                .collect();
            out.push((formula, prune_vectors(arena, gens)));
        }
    }
    out
}

/// Unrolls `a` at cap `beta` into a matrix of terms and builds the family.
fn build(source: &ParamMatrix, beta: usize) -> ParamFamily {
    let mut arena = TermArena::new(source.nparams);
    let (nvars, n) = (source.nvars, source.cols());
    let d = source.degree_in_vars();
    let cols = monomials_upto(nvars, beta);
    let row_monos = monomials_upto(nvars, beta + d);
    let mut rows = Vec::new();
    for row in &source.rows {
        let split: Vec<_> = row.iter().map(|p| source.split(p)).collect();
        for mu in &row_monos {
            let mut r = Vec::with_capacity(n * cols.len());
            for entry in &split {
                for nu in &cols {
                    let t = match mu.div(nu).and_then(|q| entry.get(&q)) {
                        Some(p) => arena.from_poly(p),
                        None => arena.zero(),
                    };
                    r.push(t);
                }
            }
            rows.push(r);
        }
    }
    let branches = matrix_branches(&mut arena, &rows, n * cols.len())
        .into_iter()
        .map(|(formula, gens)| Branch {
            formula,
            generators: gens
                .iter()
                .map(|g| g.chunks(cols.len()).map(|c| PolyTerm::from_coefficients(&arena, &cols, c, nvars)).collect())
                .collect(),
        })
        .collect();
    ParamFamily { arena, source: source.clone(), beta, branches }
}

/// The kernel of a single row `a(C)` over `Z[C]`, uniformly in `C`.
pub fn build_param_kernel_row(nparams: usize, a: &[MultiPoly<Integers>]) -> Result<ParamFamily> {
    build_param_kernel_matrix(&ParamMatrix::new(nparams, 0, vec![a.to_vec()])?)
}

/// The kernel of a constant parametric matrix, row by row.
pub fn build_param_kernel_matrix(a: &ParamMatrix) -> Result<ParamFamily> {
    if a.nvars != 0 {
        return Err(Error::Precondition("kernel families need a matrix without variables".into()));
    }
    Ok(build(a, 0))
}

/// Generators of degree `<= beta` in the variables of the solutions of
/// `A(C, X) y = 0`, uniformly in `C`.
pub fn build_param_syzygies(a: &ParamMatrix, beta: usize) -> Result<ParamFamily> {
    Ok(build(a, beta))
}

/// The outcome of checking a family at one parameter tuple.
#[derive(Clone, Debug)]
pub struct FamilyReport<D: Domain> {
    /// Branches whose formula holds.
    pub satisfied: Vec<usize>,
    /// Evaluated generators of the first satisfied branch.
    pub generators: Vec<Vec<MultiPoly<D>>>,
    pub coverage: bool,
    pub soundness: bool,
    pub completeness: bool,
}

impl<D: Domain> FamilyReport<D> {
    pub fn branch(&self) -> Option<usize> {
        self.satisfied.first().copied()
    }

    pub fn passed(&self) -> bool {
        self.coverage && self.soundness && self.completeness
    }
}

/// Evaluates the first satisfied branch of `fam` at `point`.
pub fn instantiate<D: Domain>(fam: &ParamFamily, ring: &D, point: &[D::Elem]) -> Result<(Vec<usize>, Vec<Vec<MultiPoly<D>>>)> {
    let mut ev = Evaluator::new(&fam.arena, ring, point)?;
    let satisfied: Vec<usize> = (0..fam.branches.len()).filter(|&i| fam.branches[i].formula.eval(&mut ev)).collect();
    let generators = match satisfied.first() {
        Some(&i) => fam.branches[i].generators.iter().map(|g| g.iter().map(|p| p.eval(&mut ev)).collect()).collect(),
        None => Vec::new(),
    };
    Ok((satisfied, generators))
}

/// Coverage, soundness and completeness of `fam` at `point`, the last
/// against the Hermite kernel (no variables) or the syzygy module.
pub fn verify_family<D: Domain>(fam: &ParamFamily, ring: &D, point: &[D::Elem], policy: &CapPolicy) -> Result<FamilyReport<D>> {
    let (satisfied, generators) = instantiate(fam, ring, point)?;
    let a = fam.source.eval(ring, point)?;
    let coverage = !satisfied.is_empty();
    let mut soundness = coverage;
    for g in &generators {
        soundness &= a.annihilates(g)?;
    }
    let completeness = coverage
        && if fam.nvars() == 0 {
            let one = Monomial::one(0);
            let constant = |v: &[MultiPoly<D>]| v.iter().map(|p| p.coeff(&one)).collect::<Vec<_>>();
            let m = crate::linalg::Matrix::from_rows(ring, (0..a.rows()).map(|i| constant(a.row_polys(i))).collect())?;
            let oracle = kernel_hnf(&m)?;
            let gens: Vec<_> = generators.iter().map(|g| constant(g)).collect();
            same_span(ring, fam.n(), &gens, oracle.vectors())
        } else {
            let oracle = syzygies_matrix(&a, policy)?;
            let degree = 2 * fam.beta.max(oracle.cap) + a.degree() as usize;
            same_module(&generators, &oracle.vectors, fam.n(), degree)
        };
    Ok(FamilyReport { satisfied, generators, coverage, soundness, completeness })
}
