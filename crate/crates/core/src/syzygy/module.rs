use crate::bounds::CapPolicy;
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

use super::basis::{syzygies_matrix, Completeness};
use super::span::TruncatedModule;
use super::unroll::PolyMatrix;

/// Generators of a submodule of `R[X]^m`.
#[derive(Clone, Debug)]
pub struct GeneratedModule<D: Domain> {
    pub vectors: Vec<Vec<MultiPoly<D>>>,
    /// Cap of the syzygy computations behind the result.
    pub cap: usize,
    pub completeness: Completeness,
}

fn degree_of<D: Domain>(v: &[MultiPoly<D>]) -> usize {
    v.iter().map(|p| p.degree().or_zero() as usize).max().unwrap_or(0)
}

/// Drops zero vectors and vectors generated (up to their common degree) by earlier ones.
fn prune<D: Domain>(ring: &D, nvars: usize, m: usize, mut vectors: Vec<Vec<MultiPoly<D>>>) -> Vec<Vec<MultiPoly<D>>> {
    vectors.retain(|v| v.iter().any(|p| !p.is_zero()));
    vectors.sort_by_key(|v| degree_of(v));
    let top = vectors.iter().map(|v| degree_of(v)).max().unwrap_or(0);
    let mut span = TruncatedModule::new(ring, nvars, m, top);
    let mut kept = Vec::new();
    for v in vectors {
        if !span.contains(&v) {
            span.add(&v);
            kept.push(v);
        }
    }
    kept
}

fn ambient<D: Domain>(a: &[Vec<MultiPoly<D>>], b: &[Vec<MultiPoly<D>>]) -> Result<(D, usize, usize)> {
    let first = a
        .iter()
        .chain(b)
        .flatten()
        .next()
        .ok_or_else(|| Error::Shape("modules without generators".into()))?;
    let m = a.first().or(b.first()).map_or(0, Vec::len);
    if a.iter().chain(b).any(|v| v.len() != m) {
        return Err(Error::Shape("generators of different lengths".into()));
    }
    Ok((first.ring().clone(), first.nvars(), m))
}

/// `M ∩ M'` for modules given by generator columns: the syzygies `(u, u')`
/// of `[A | -A']` give the common elements `A·u`.
pub fn intersect<D: Domain>(
    gens: &[Vec<MultiPoly<D>>],
    other: &[Vec<MultiPoly<D>>],
    policy: &CapPolicy,
) -> Result<GeneratedModule<D>> {
    if gens.is_empty() || other.is_empty() {
        return Ok(GeneratedModule { vectors: Vec::new(), cap: 0, completeness: Completeness::Bound });
    }
    let (ring, nvars, m) = ambient(gens, other)?;
    let negated: Vec<Vec<MultiPoly<D>>> = other.iter().map(|v| v.iter().map(MultiPoly::neg).collect()).collect();
    let a = PolyMatrix::from_columns(gens)?;
    let block = a.hconcat(&PolyMatrix::from_columns(&negated)?)?;
    let syz = syzygies_matrix(&block, policy)?;
    let k = gens.len();
    let vectors = syz
        .vectors
        .iter()
        .map(|s| a.mul_vec(&s[..k]))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratedModule { vectors: prune(&ring, nvars, m, vectors), cap: syz.cap, completeness: syz.completeness })
}

/// The ideal `M' : M = {r : r·M ⊆ M'}`, as the intersection over the
/// generators `g` of `M` of the ideals `M' : g`, each read off the first
/// coordinate of the syzygies of `[g | -A']`.
pub fn colon<D: Domain>(
    target: &[Vec<MultiPoly<D>>],
    gens: &[Vec<MultiPoly<D>>],
    policy: &CapPolicy,
) -> Result<GeneratedModule<D>> {
    let (ring, nvars, _) = ambient(target, gens)?;
    let one = || vec![vec![MultiPoly::one(&ring, nvars)]];
    let mut acc: Option<GeneratedModule<D>> = None;
    for g in gens {
        let quotient = if g.iter().all(MultiPoly::is_zero) {
            GeneratedModule { vectors: one(), cap: 0, completeness: Completeness::Bound }
        } else if target.is_empty() {
            GeneratedModule { vectors: Vec::new(), cap: 0, completeness: Completeness::Bound }
        } else {
            let negated: Vec<Vec<MultiPoly<D>>> =
                target.iter().map(|v| v.iter().map(MultiPoly::neg).collect()).collect();
            let block = PolyMatrix::from_columns(std::slice::from_ref(g))?.hconcat(&PolyMatrix::from_columns(&negated)?)?;
            let syz = syzygies_matrix(&block, policy)?;
            let firsts = syz.vectors.iter().map(|s| vec![s[0].clone()]).collect();
            GeneratedModule { vectors: prune(&ring, nvars, 1, firsts), cap: syz.cap, completeness: syz.completeness }
        };
        acc = Some(match acc {
            None => quotient,
            Some(prev) => {
                let both = intersect(&prev.vectors, &quotient.vectors, policy)?;
                GeneratedModule {
                    vectors: both.vectors,
                    cap: both.cap.max(prev.cap).max(quotient.cap),
                    completeness: both.completeness.min(prev.completeness).min(quotient.completeness),
                }
            }
        });
    }
    Ok(acc.unwrap_or(GeneratedModule { vectors: one(), cap: 0, completeness: Completeness::Bound }))
}
