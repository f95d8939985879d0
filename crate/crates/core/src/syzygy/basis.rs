use serde::Serialize;

use crate::bounds::{beta_field, beta_gamma_matrix, within, BoundLedger, CapPolicy};
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::linalg::kernel;
use crate::poly::MultiPoly;

use super::span::TruncatedModule;
use super::unroll::{reroll, unroll, PolyMatrix};

/// How much a syzygy basis is known to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Completeness {
    /// Computed at a caller-fixed cap; generates the solutions of degree `<= cap` only.
    Fixed,
    /// No new generators appeared between the cap and twice the cap.
    Stable,
    /// The cap reached a bound that guarantees generation.
    Bound,
}

/// Generators of the solutions of `A y = 0` in `R[X]^n`.
#[derive(Clone, Debug)]
pub struct SyzygyBasis<D: Domain> {
    pub vectors: Vec<Vec<MultiPoly<D>>>,
    /// Every entry has degree at most this.
    pub cap: usize,
    pub completeness: Completeness,
    pub ledger: BoundLedger,
    /// Caps visited, in order.
    pub history: Vec<usize>,
    pub nvars: usize,
    pub n: usize,
}

impl<D: Domain> SyzygyBasis<D> {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Extends `module` (truncated at `cap`) by kernel vectors of the unrollings
/// at caps `from..=cap` that it does not contain yet; returns them.
fn grow<D: Domain>(a: &PolyMatrix<D>, module: &mut TruncatedModule<D>, from: usize, cap: usize) -> Vec<Vec<MultiPoly<D>>> {
    let mut added = Vec::new();
    for k in from..=cap {
        for v in kernel(&unroll(a, k)) {
            let polys = reroll(a.ring(), a.nvars(), a.cols(), k, &v).expect("kernel vector length");
            if !module.contains(&polys) {
                module.add(&polys);
                added.push(polys);
            }
        }
    }
    added
}

/// Generators of the solutions of degree `<= cap`, found degree by degree.
pub fn syzygies_at<D: Domain>(a: &PolyMatrix<D>, cap: usize) -> Vec<Vec<MultiPoly<D>>> {
    let mut module = TruncatedModule::new(a.ring(), a.nvars(), a.cols(), cap);
    grow(a, &mut module, 0, cap)
}

fn escalate<D: Domain>(a: &PolyMatrix<D>, start: usize, policy: &CapPolicy) -> Result<(Vec<Vec<MultiPoly<D>>>, usize, Vec<usize>)> {
    let mut cap = start.max(1).min(policy.max_cap);
    let mut gens = syzygies_at(a, cap);
    let mut history = vec![cap];
    while cap < policy.max_cap {
        let next = (2 * cap).min(policy.max_cap);
        history.push(next);
        let mut module = TruncatedModule::new(a.ring(), a.nvars(), a.cols(), next);
        module.add_all(&gens);
        let top: Vec<_> = kernel(&unroll(a, next))
            .into_iter()
            .map(|v| reroll(a.ring(), a.nvars(), a.cols(), next, &v).expect("kernel vector length"))
            .collect();
        if top.iter().all(|v| module.contains(v)) {
            return Ok((gens, cap, history));
        }
        gens.extend(grow(a, &mut module, cap + 1, next));
        cap = next;
    }
    Err(Error::CapExhausted {
        cap: policy.max_cap,
        required: "generators kept appearing up to the ceiling".into(),
    })
}

/// Generators of `Sol(A)` in `R[X]^n` by unrolling all rows jointly.
///
/// Over fields the cap is the bound `β_m(N, d, n)` when it fits under the
/// ceiling. Otherwise, and over `Z` and `Z_(p)`, caps escalate from
/// `beta_field(N, d)` and stop once doubling the cap adds no generators.
/// Without variables the constant kernel is returned.
pub fn syzygies_matrix<D: Domain>(a: &PolyMatrix<D>, policy: &CapPolicy) -> Result<SyzygyBasis<D>> {
    let (nvars, n, d) = (a.nvars(), a.cols(), a.degree() as u64);
    let done = |vectors, cap, completeness, history| SyzygyBasis {
        vectors,
        cap,
        completeness,
        ledger: BoundLedger::at_cap(nvars as u32, d, n as u64, cap as u64),
        history,
        nvars,
        n,
    };
    if nvars == 0 {
        return Ok(done(syzygies_at(a, 0), 0, Completeness::Bound, vec![0]));
    }
    if let Some(cap) = policy.cap {
        return Ok(done(syzygies_at(a, cap), cap, Completeness::Fixed, vec![cap]));
    }
    if a.ring().is_field() {
        let bound = beta_gamma_matrix(a.rows() as u32, nvars as u32, d, n as u64)
            .ok()
            .and_then(|(b, _)| within(&b, policy.max_cap));
        if let Some(b) = bound {
            return Ok(done(syzygies_at(a, b), b, Completeness::Bound, vec![b]));
        }
    }
    let start = beta_field(nvars as u32, d).ok().and_then(|b| within(&b, policy.max_cap)).unwrap_or(policy.max_cap);
    let (vectors, cap, history) = escalate(a, start, policy)?;
    Ok(done(vectors, cap, Completeness::Stable, history))
}

/// Generators of the solutions of `f_1 y_1 + … + f_n y_n = 0`.
pub fn syzygies<D: Domain>(f: &[MultiPoly<D>], policy: &CapPolicy) -> Result<SyzygyBasis<D>> {
    syzygies_matrix(&PolyMatrix::row(f)?, policy)
}

/// The row recursion: generators `Z` of the first row, then the solutions
/// `u` of `B = A'·Z`, mapped back as `Z·u`.
pub fn syzygies_matrix_recursive<D: Domain>(a: &PolyMatrix<D>, policy: &CapPolicy) -> Result<SyzygyBasis<D>> {
    let first = syzygies(a.row_polys(0), policy)?;
    if a.rows() == 1 || first.is_empty() {
        return Ok(first);
    }
    let z = PolyMatrix::from_columns(&first.vectors)?;
    let rest = a.rows_from(1)?;
    let b_rows: Result<Vec<Vec<MultiPoly<D>>>> = (0..rest.rows())
        .map(|i| first.vectors.iter().map(|zc| crate::poly::dot(rest.row_polys(i), zc)).collect())
        .collect();
    let b = PolyMatrix::from_rows(b_rows?)?;
    let inner = syzygies_matrix_recursive(&b, policy)?;
    let vectors: Vec<Vec<MultiPoly<D>>> = inner
        .vectors
        .iter()
        .map(|u| z.mul_vec(u))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|v| v.iter().any(|p| !p.is_zero()))
        .collect();
    let cap = vectors
        .iter()
        .flatten()
        .map(|p| p.degree().or_zero() as usize)
        .max()
        .unwrap_or(0);
    let mut history = first.history.clone();
    history.extend(inner.history);
    Ok(SyzygyBasis {
        vectors,
        cap,
        completeness: first.completeness.min(inner.completeness),
        ledger: BoundLedger::at_cap(a.nvars() as u32, a.degree() as u64, a.cols() as u64, cap as u64),
        history,
        nvars: a.nvars(),
        n: a.cols(),
    })
}
