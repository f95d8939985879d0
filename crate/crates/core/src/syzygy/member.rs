use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bounds::{beta_field, beta_gamma_matrix, kollar, within, BoundLedger, CapPolicy};
use crate::domain::{denominator_lcm, is_small_prime, Domain, DomainDescriptor, Integers, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::linalg::{solve, Matrix};
use crate::poly::{monomials_of_degree, Monomial, MultiPoly};

use super::unroll::{coordinates_in, reroll, unroll_to, MonomialIndex, PolyMatrix};

/// Why a system has no solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonMembership {
    /// No solution over `Q[X]` at a cap reaching the field bound.
    RationalFailure { cap: usize },
    /// No solution over `F_p[X]` at a cap reaching the field bound.
    ModularFailure { p: u64, cap: usize },
    /// The degree-forced homogeneous system has no solution.
    HomogeneousExact,
    /// `1 ∉ (1 - aX, bX)` because `a` is not in the radical of `bR`.
    RadicalCriterion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<D: Domain> {
    /// Cofactors (or a solution column) certifying membership.
    Member(Vec<MultiPoly<D>>),
    NotMember(NonMembership),
    /// Undecided up to the cap.
    Unknown,
}

#[derive(Clone, Debug)]
pub struct MembershipVerdict<D: Domain> {
    pub verdict: Verdict<D>,
    /// Cap at which the verdict was reached (the last cap tried for `Unknown`).
    pub cap: usize,
    /// Caps tried over the input domain, in order.
    pub history: Vec<usize>,
    pub ledger: BoundLedger,
}

impl<D: Domain> MembershipVerdict<D> {
    pub fn is_member(&self) -> bool {
        matches!(self.verdict, Verdict::Member(_))
    }

    pub fn is_not_member(&self) -> bool {
        matches!(self.verdict, Verdict::NotMember(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.verdict, Verdict::Unknown)
    }

    pub fn cofactors(&self) -> Option<&[MultiPoly<D>]> {
        match &self.verdict {
            Verdict::Member(c) => Some(c),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&NonMembership> {
        match &self.verdict {
            Verdict::NotMember(c) => Some(c),
            _ => None,
        }
    }
}

fn max_degree<D: Domain>(v: &[MultiPoly<D>]) -> u32 {
    v.iter().map(|p| p.degree().or_zero()).max().unwrap_or(0)
}

fn check_system<D: Domain>(a: &PolyMatrix<D>, b: &[MultiPoly<D>]) -> Result<()> {
    if b.len() != a.rows() {
        return Err(Error::Shape(format!("{} equations but right-hand side of length {}", a.rows(), b.len())));
    }
    if b.iter().any(|p| p.ring() != a.ring() || p.nvars() != a.nvars()) {
        return Err(Error::Mismatch("right-hand side from a different ring".into()));
    }
    Ok(())
}

/// A solution of `A y = b` with all entries of degree `<= cap`, or `None`.
pub fn solve_at<D: Domain>(a: &PolyMatrix<D>, b: &[MultiPoly<D>], cap: usize) -> Result<Option<Vec<MultiPoly<D>>>> {
    check_system(a, b)?;
    let row_degree = (cap + a.degree() as usize).max(max_degree(b) as usize);
    let m = unroll_to(a, cap, row_degree);
    let idx = MonomialIndex::new(a.nvars(), row_degree);
    let rhs = coordinates_in(&idx, a.ring(), b)?;
    Ok(match solve(&m, &rhs)? {
        Some(y) => Some(reroll(a.ring(), a.nvars(), a.cols(), cap, &y)?),
        None => None,
    })
}

/// Cofactors of degree `<= cap` with `f0 = Σ f_j g_j`, or `None`.
pub fn member_at<D: Domain>(f0: &MultiPoly<D>, gens: &[MultiPoly<D>], cap: usize) -> Result<Option<Vec<MultiPoly<D>>>> {
    solve_at(&PolyMatrix::row(gens)?, std::slice::from_ref(f0), cap)
}

/// Cap guaranteeing a complete decision over a field: `deg b + β_m(N, d, n)`.
fn field_cap<D: Domain>(a: &PolyMatrix<D>, b: &[MultiPoly<D>]) -> Option<BigUint> {
    let (beta, _) =
        beta_gamma_matrix(a.rows() as u32, a.nvars() as u32, a.degree() as u64, a.cols() as u64).ok()?;
    Some(beta + BigUint::from(max_degree(b)))
}

enum FieldOutcome<F: Domain> {
    Solved(Vec<MultiPoly<F>>, usize),
    Unsolvable(usize),
    Undecided(usize),
}

/// Caps `0, 1, 2, 4, …` below `full`, then `full`; `extra` caps are merged in.
fn ladder(full: usize, extra: &[usize]) -> Vec<usize> {
    let mut caps = vec![0];
    let mut c = 1;
    while c < full {
        caps.push(c);
        c *= 2;
    }
    caps.push(full);
    caps.extend(extra.iter().copied().filter(|&e| e <= full));
    caps.sort_unstable();
    caps.dedup();
    caps
}

/// Decides `A y = b` over a field, trying small caps first. The decision is
/// complete when `complete_at` fits under the ceiling.
fn decide_field<F: Domain>(
    a: &PolyMatrix<F>,
    b: &[MultiPoly<F>],
    complete_at: Option<BigUint>,
    extra: &[usize],
    policy: &CapPolicy,
    history: &mut Vec<usize>,
) -> Result<FieldOutcome<F>> {
    let full = complete_at.as_ref().and_then(|c| within(c, policy.max_cap));
    let caps = match (policy.cap, full) {
        (Some(c), _) => vec![c],
        (None, Some(f)) => ladder(f, extra),
        (None, None) => ladder(policy.max_cap, extra),
    };
    let mut last = 0;
    for cap in caps {
        history.push(cap);
        last = cap;
        if let Some(y) = solve_at(a, b, cap)? {
            return Ok(FieldOutcome::Solved(y, cap));
        }
    }
    let complete = complete_at.is_some_and(|c| BigUint::from(last) >= c);
    Ok(if complete { FieldOutcome::Unsolvable(last) } else { FieldOutcome::Undecided(last) })
}

fn to_rationals<D: Domain>(a: &PolyMatrix<D>, b: &[MultiPoly<D>]) -> Option<(PolyMatrix<Rationals>, Vec<MultiPoly<Rationals>>)> {
    let ring = a.ring().clone();
    let map = |p: &MultiPoly<D>| p.try_map_coeffs(&Rationals, |c| ring.to_rational(c));
    Some((a.map_entries(map)?, b.iter().map(map).collect::<Option<_>>()?))
}

fn to_prime_field<D: Domain>(
    a: &PolyMatrix<D>,
    b: &[MultiPoly<D>],
    p: u64,
) -> Option<(PolyMatrix<PrimeField>, Vec<MultiPoly<PrimeField>>)> {
    let field = PrimeField::new(p).ok()?;
    let ring = a.ring().clone();
    let map = |p0: &MultiPoly<D>| p0.try_map_coeffs(&field, |c| ring.reduce_mod(c, p));
    Some((a.map_entries(map)?, b.iter().map(map).collect::<Option<_>>()?))
}

/// Prime factors below `2^16` of `n`, plus the cofactor when it is a prime below `2^31`.
fn small_prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.magnitude().clone();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = 2u64;
    while d < 1 << 16 && !n.is_one() {
        if (&n % d).is_zero() {
            out.push(d);
            while (&n % d).is_zero() {
                n /= d;
            }
        }
        d += 1;
    }
    if let Some(rest) = n.to_u64() {
        if rest > 1 && rest < 1 << 31 && is_small_prime(rest) {
            out.push(rest);
        }
    }
    out
}

/// Solves `A y = b` in `R[X]`.
///
/// Over a field the decision is complete at `deg b + β_m(N, d, n)`. Over
/// `Z` and `Z_(p)`: the degree-forced shortcut for one homogeneous equation,
/// then the complete decision over `Q` (an integral rational solution is
/// returned as is), then complete decisions modulo primes, then solutions
/// over the domain itself at escalating caps, else `Unknown`.
pub fn solve_poly<D: Domain>(a: &PolyMatrix<D>, b: &[MultiPoly<D>], policy: &CapPolicy) -> Result<MembershipVerdict<D>> {
    check_system(a, b)?;
    let ring = a.ring().clone();
    let (nvars, d, n) = (a.nvars() as u32, a.degree() as u64, a.cols() as u64);
    let out = |verdict, cap: usize, history| MembershipVerdict {
        verdict,
        cap,
        history,
        ledger: BoundLedger::at_cap(nvars, d, n, cap as u64),
    };
    let mut history = Vec::new();

    if ring.is_field() {
        let outcome = decide_field(a, b, field_cap(a, b), &[], policy, &mut history)?;
        return Ok(match outcome {
            FieldOutcome::Solved(y, cap) => out(Verdict::Member(y), cap, history),
            FieldOutcome::Unsolvable(cap) => {
                let cert = match ring.descriptor() {
                    DomainDescriptor::PrimeField(p) => NonMembership::ModularFailure { p, cap },
                    _ => NonMembership::RationalFailure { cap },
                };
                out(Verdict::NotMember(cert), cap, history)
            }
            FieldOutcome::Undecided(cap) => out(Verdict::Unknown, cap, history),
        });
    }

    if a.rows() == 1 && b[0].is_homogeneous() && a.row_polys(0).iter().all(MultiPoly::is_homogeneous) {
        return member_homogeneous(&b[0], a.row_polys(0));
    }

    let mut primes: Vec<u64> = match ring.descriptor() {
        DomainDescriptor::LocalizedIntegers(p) => vec![p],
        _ => policy.primes.clone(),
    };
    let mut rational_cap = None;
    if let Some((qa, qb)) = to_rationals(a, b) {
        let mut scratch = Vec::new();
        match decide_field(&qa, &qb, field_cap(&qa, &qb), &[], policy, &mut scratch)? {
            FieldOutcome::Unsolvable(cap) => {
                return Ok(out(Verdict::NotMember(NonMembership::RationalFailure { cap }), cap, history));
            }
            FieldOutcome::Solved(y, cap) => {
                let lifted: Option<Vec<MultiPoly<D>>> =
                    y.iter().map(|p| p.try_map_coeffs(&ring, |c| ring.from_rational(c))).collect();
                if let Some(lifted) = lifted {
                    return Ok(out(Verdict::Member(lifted), cap, vec![cap]));
                }
                rational_cap = Some(cap);
                if ring.descriptor() == DomainDescriptor::Integers {
                    let coeffs: Vec<_> = y.iter().flat_map(|p| p.terms().map(|(_, c)| c.clone())).collect();
                    primes.extend(small_prime_factors(&denominator_lcm(coeffs.iter())));
                }
            }
            FieldOutcome::Undecided(_) => {}
        }
    }
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        let Some((fa, fb)) = to_prime_field(a, b, p) else { continue };
        let mut scratch = Vec::new();
        if let FieldOutcome::Unsolvable(cap) = decide_field(&fa, &fb, field_cap(&fa, &fb), &[], policy, &mut scratch)? {
            return Ok(out(Verdict::NotMember(NonMembership::ModularFailure { p, cap }), cap, history));
        }
    }

    // no solution over R[X] has lower degree than one over Q[X]
    let start = beta_field(nvars, d).ok().and_then(|b| b.to_usize()).unwrap_or(policy.max_cap);
    let mut caps: Vec<usize> = match rational_cap {
        Some(c) if policy.cap.is_none() => (c..start.min(policy.max_cap)).collect(),
        _ => Vec::new(),
    };
    caps.extend(policy.escalation(start));
    let mut last = 0;
    for cap in caps {
        history.push(cap);
        last = cap;
        if let Some(y) = solve_at(a, b, cap)? {
            return Ok(out(Verdict::Member(y), cap, history));
        }
    }
    Ok(out(Verdict::Unknown, last, history))
}

/// Decides `f0 ∈ (f_1, …, f_n) R[X]`.
pub fn member<D: Domain>(f0: &MultiPoly<D>, gens: &[MultiPoly<D>], policy: &CapPolicy) -> Result<MembershipVerdict<D>> {
    solve_poly(&PolyMatrix::row(gens)?, std::slice::from_ref(f0), policy)
}

/// Membership for homogeneous `f0, f_1, …, f_n`: cofactor `g_j` may be taken
/// homogeneous of degree `deg f0 - deg f_j` (zero when negative), so one
/// constant linear system decides it over any domain.
pub fn member_homogeneous<D: Domain>(f0: &MultiPoly<D>, gens: &[MultiPoly<D>]) -> Result<MembershipVerdict<D>> {
    let row = PolyMatrix::row(gens)?;
    check_system(&row, std::slice::from_ref(f0))?;
    if let Some(p) = gens.iter().chain(std::iter::once(f0)).find(|p| !p.is_homogeneous()) {
        return Err(Error::NotHomogeneous(format!("{p:?}")));
    }
    let ring = row.ring();
    let nvars = row.nvars();
    let ledger = BoundLedger::at_cap(nvars as u32, row.degree() as u64, gens.len() as u64, 0);
    let Some(e0) = f0.degree().finite() else {
        let zeros = vec![MultiPoly::zero(ring, nvars); gens.len()];
        return Ok(MembershipVerdict { verdict: Verdict::Member(zeros), cap: 0, history: vec![0], ledger });
    };
    let targets = monomials_of_degree(nvars, e0);
    let blocks: Vec<Vec<Monomial>> = gens
        .iter()
        .map(|f| match f.degree().finite() {
            Some(e) if e <= e0 => monomials_of_degree(nvars, e0 - e),
            _ => Vec::new(),
        })
        .collect();
    let ncols: usize = blocks.iter().map(Vec::len).sum();
    let mut m = Matrix::zero(ring, targets.len(), ncols);
    let row_of = |mono: &Monomial| targets.iter().position(|t| t == mono);
    let mut col = 0;
    for (f, block) in gens.iter().zip(&blocks) {
        for nu in block {
            for (mu, c) in f.terms() {
                let r = row_of(&mu.mul(nu)).expect("degrees add up");
                m.set(r, col, c.clone());
            }
            col += 1;
        }
    }
    let rhs: Vec<D::Elem> = targets.iter().map(|t| f0.coeff(t)).collect();
    let cap = e0 as usize;
    let verdict = if ncols == 0 {
        Verdict::NotMember(NonMembership::HomogeneousExact)
    } else {
        match solve(&m, &rhs)? {
            Some(y) => {
                let mut it = y.into_iter();
                let cofactors = blocks
                    .iter()
                    .map(|block| MultiPoly::from_terms(ring, nvars, block.iter().cloned().zip(it.by_ref())))
                    .collect();
                Verdict::Member(cofactors)
            }
            None => Verdict::NotMember(NonMembership::HomogeneousExact),
        }
    };
    Ok(MembershipVerdict { verdict, cap, history: vec![cap], ledger })
}

/// Decides `1 ∈ (gens)`. Over fields the Kollár cap `d^(N+1)` is tried
/// first, then the cap `max(d^(N+1), beta_field(N, d))` completes the
/// decision; other domains go through [`member`].
pub fn unit_member<D: Domain>(gens: &[MultiPoly<D>], policy: &CapPolicy) -> Result<MembershipVerdict<D>> {
    let row = PolyMatrix::row(gens)?;
    let one = MultiPoly::one(row.ring(), row.nvars());
    if !row.ring().is_field() {
        return member(&one, gens, policy);
    }
    let (nvars, d) = (row.nvars() as u32, row.degree() as u64);
    let k = kollar(nvars, d).ok();
    let complete = match (&k, beta_field(nvars, d).ok()) {
        (Some(k), Some(b)) => Some(k.clone().max(b)),
        _ => None,
    };
    let extra: Vec<usize> = k.as_ref().and_then(|k| within(k, policy.max_cap)).into_iter().collect();
    let mut history = Vec::new();
    let outcome = decide_field(&row, std::slice::from_ref(&one), complete, &extra, policy, &mut history)?;
    let ledger = |cap: usize| BoundLedger::at_cap(nvars, d, gens.len() as u64, cap as u64);
    Ok(match outcome {
        FieldOutcome::Solved(y, cap) => MembershipVerdict { verdict: Verdict::Member(y), cap, history, ledger: ledger(cap) },
        FieldOutcome::Unsolvable(cap) => {
            let cert = match row.ring().descriptor() {
                DomainDescriptor::PrimeField(p) => NonMembership::ModularFailure { p, cap },
                _ => NonMembership::RationalFailure { cap },
            };
            MembershipVerdict { verdict: Verdict::NotMember(cert), cap, history, ledger: ledger(cap) }
        }
        FieldOutcome::Undecided(cap) => MembershipVerdict { verdict: Verdict::Unknown, cap, history, ledger: ledger(cap) },
    })
}

/// Decides `f0 ∈ √(gens)` over a field as `1 ∈ (gens, 1 - T·f0)` with a new
/// last variable `T`. Cofactors of a `Member` verdict live in `N + 1` variables.
pub fn radical_member_field<D: Domain>(f0: &MultiPoly<D>, gens: &[MultiPoly<D>], policy: &CapPolicy) -> Result<MembershipVerdict<D>> {
    let row = PolyMatrix::row(gens)?;
    check_system(&row, std::slice::from_ref(f0))?;
    let ring = row.ring();
    if !ring.is_field() {
        return Err(Error::Precondition("the radical test needs a field of coefficients".into()));
    }
    let n1 = row.nvars() + 1;
    let t = MultiPoly::var(ring, n1, n1 - 1);
    let mut ext: Vec<MultiPoly<D>> = gens.iter().map(|g| g.embed(n1, 0)).collect();
    ext.push(&MultiPoly::one(ring, n1) - &(&t * &f0.embed(n1, 0)));
    unit_member(&ext, policy)
}

/// `r0 ∈ √((r_1, …, r_k))`: with `a` the generator of the ideal, whether
/// `a` divides a power of `r0` (for `a = 0`, whether `r0 = 0`).
pub fn rad_member_constants<D: Domain>(ring: &D, r0: &D::Elem, rs: &[D::Elem]) -> bool {
    ring.rad(r0, &ring.ideal_gen(rs))
}

/// Decides `1 ∈ (1 - aX, bX) Z[X]`, which holds iff `a ∈ √(bZ)`. With
/// `a^n = b·c` for the least `n >= 1`, the certificate is
/// `1 = (1 + aX + … + a^(n-1) X^(n-1))·(1 - aX) + c X^(n-1)·bX`.
pub fn one_member_binomial(a: &BigInt, b: &BigInt) -> MembershipVerdict<Integers> {
    let z = Integers;
    if !z.rad(a, b) {
        return MembershipVerdict {
            verdict: Verdict::NotMember(NonMembership::RadicalCriterion),
            cap: 0,
            history: vec![],
            ledger: BoundLedger::at_cap(1, 1, 2, 0),
        };
    }
    let (n, c) = if b.is_zero() {
        (1u32, BigInt::zero())
    } else {
        let mut n = 1u32;
        let mut power = a.clone();
        while !z.divides(b, &power) {
            n += 1;
            power *= a;
        }
        (n, power / b)
    };
    let geometric = MultiPoly::from_terms(
        &z,
        1,
        (0..n).map(|k| (Monomial::new(vec![k]), z.pow(a, k as u64))),
    );
    let second = MultiPoly::monomial(&z, Monomial::new(vec![n - 1]), c);
    let cap = (n - 1) as usize;
    MembershipVerdict {
        verdict: Verdict::Member(vec![geometric, second]),
        cap,
        history: vec![cap],
        ledger: BoundLedger::at_cap(1, 1, 2, cap as u64),
    }
}

/// The generators `(1 - aX, bX)` of [`one_member_binomial`].
pub fn binomial_generators(a: &BigInt, b: &BigInt) -> Vec<MultiPoly<Integers>> {
    let z = Integers;
    let x = Monomial::new(vec![1]);
    vec![
        MultiPoly::from_terms(&z, 1, [(Monomial::one(1), BigInt::one()), (x.clone(), -a)]),
        MultiPoly::monomial(&z, x, b.clone()),
    ]
}

/// Whether `A y = b` for the given solution, by exact arithmetic.
pub fn verify_solution<D: Domain>(a: &PolyMatrix<D>, b: &[MultiPoly<D>], y: &[MultiPoly<D>]) -> Result<bool> {
    Ok(a.mul_vec(y)? == b)
}

/// Whether `f0 = Σ f_j g_j`.
pub fn verify_member<D: Domain>(f0: &MultiPoly<D>, gens: &[MultiPoly<D>], cofactors: &[MultiPoly<D>]) -> Result<bool> {
    Ok(&crate::poly::dot(gens, cofactors)? == f0)
}

/// Re-derives a non-membership certificate for `A y = b`: the named
/// reduction is recomputed, shown unsolvable at the recorded cap, and the
/// cap is checked against the field bound.
pub fn recheck_non_membership<D: Domain>(a: &PolyMatrix<D>, b: &[MultiPoly<D>], cert: &NonMembership) -> Result<bool> {
    check_system(a, b)?;
    fn unsolvable_at<F: Domain>(a: &PolyMatrix<F>, b: &[MultiPoly<F>], cap: usize) -> Result<bool> {
        let complete = field_cap(a, b).is_some_and(|c| BigUint::from(cap) >= c);
        Ok(complete && solve_at(a, b, cap)?.is_none())
    }
    match cert {
        NonMembership::RationalFailure { cap } => match to_rationals(a, b) {
            Some((qa, qb)) => unsolvable_at(&qa, &qb, *cap),
            None => Ok(false),
        },
        NonMembership::ModularFailure { p, cap } => match to_prime_field(a, b, *p) {
            Some((fa, fb)) => unsolvable_at(&fa, &fb, *cap),
            None => Ok(false),
        },
        NonMembership::HomogeneousExact => {
            if a.rows() != 1 {
                return Ok(false);
            }
            match member_homogeneous(&b[0], a.row_polys(0)) {
                Ok(v) => Ok(v.is_not_member()),
                Err(_) => Ok(false),
            }
        }
        NonMembership::RadicalCriterion => {
            let ring = a.ring();
            if a.rows() != 1 || a.cols() != 2 || a.nvars() != 1 || b[0] != MultiPoly::one(ring, 1) {
                return Ok(false);
            }
            let (one, x) = (Monomial::one(1), Monomial::new(vec![1]));
            let (f, g) = (a.get(0, 0), a.get(0, 1));
            let shape_ok = f.coeff(&one) == ring.one()
                && f.terms().all(|(m, _)| *m == one || *m == x)
                && g.terms().all(|(m, _)| *m == x);
            let av = ring.neg(&f.coeff(&x));
            Ok(shape_ok && !ring.rad(&av, &g.coeff(&x)))
        }
    }
}

#[cfg(test)]
pub(crate) fn small_primes_of(n: i64) -> Vec<u64> {
    small_prime_factors(&BigInt::from(n))
}
