//! Degree bounds for linear algebra over `R[X_1, …, X_N]` and the cap policy
//! used when no exact bound is available.
//!
//! All values are exact big integers; they leave `u64` range quickly.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Values above this many bits are refused rather than computed.
pub const MAX_BOUND_BITS: u64 = 1 << 20;

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn checked_pow(base: &BigUint, exp: &BigUint) -> Result<BigUint> {
    if base.is_zero() {
        return Ok(if exp.is_zero() { BigUint::one() } else { BigUint::zero() });
    }
    if base.is_one() {
        return Ok(BigUint::one());
    }
    let e = exp.to_u64().filter(|e| e.saturating_mul(base.bits()) <= MAX_BOUND_BITS);
    match e {
        Some(e) => Ok(num_traits::pow::Pow::pow(base, e)),
        None => Err(Error::Precondition(format!("bound exceeds {MAX_BOUND_BITS} bits"))),
    }
}

/// Uniformity function of the supported domains: `α(n) = n`.
pub fn alpha(n: &BigUint) -> BigUint {
    n.clone()
}

/// `(2d)^(2^(N-1))` for `N >= 1`, and `0` for `N = 0`.
pub fn beta_field(nvars: u32, d: u64) -> Result<BigUint> {
    if nvars == 0 {
        return Ok(BigUint::zero());
    }
    let exp = BigUint::one() << (nvars - 1);
    checked_pow(&big(2 * d), &exp)
}

/// `(2d')^(2^(N-1))` with `d' = max(e, beta_field(N, d))`.
pub fn delta_field(nvars: u32, d: u64, e: u64) -> Result<BigUint> {
    if nvars == 0 {
        return Ok(BigUint::zero());
    }
    let dp = beta_field(nvars, d)?.max(big(e));
    let exp = BigUint::one() << (nvars - 1);
    checked_pow(&(dp * 2u32), &exp)
}

/// Kollár's cofactor bound for the unit ideal: `d^(N+1)`.
pub fn kollar(nvars: u32, d: u64) -> Result<BigUint> {
    checked_pow(&big(d), &big(nvars as u64 + 1))
}

/// `C(n, k)` exactly.
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - big(i)) / big(i + 1);
    }
    acc
}

/// Rows of the unrolled system: `C(N + β + d, N)`.
pub fn m_prime(nvars: u32, beta: &BigUint, d: u64) -> BigUint {
    binomial(&(big(nvars as u64) + beta + big(d)), nvars as u64)
}

/// Unknowns of the unrolled system: `n·C(N + β, N)`.
pub fn n_prime(nvars: u32, beta: &BigUint, n: u64) -> BigUint {
    big(n) * binomial(&(big(nvars as u64) + beta), nvars as u64)
}

/// Generator count `γ(N,d,n) = α^{m'}(n')`; with `α` the identity this is `n'`.
pub fn gamma(nvars: u32, d: u64, n: u64) -> Result<BigUint> {
    let beta = beta_field(nvars, d)?;
    Ok(alpha(&n_prime(nvars, &beta, n)))
}

/// `(β_m, γ_m)` for `m` equations: `β_1 = β`, `γ_1 = γ`, and
/// `β_m(N,d,n) = β·β_{m-1}(N, β+d, γ)`, `γ_m(N,d,n) = γ_{m-1}(N, β+d, γ)`.
pub fn beta_gamma_matrix(m: u32, nvars: u32, d: u64, n: u64) -> Result<(BigUint, BigUint)> {
    if m == 0 {
        return Err(Error::Precondition("a matrix needs at least one row".into()));
    }
    let beta = beta_field(nvars, d)?;
    let gam = gamma(nvars, d, n)?;
    if m == 1 {
        return Ok((beta, gam));
    }
    let next_d = (&beta + big(d))
        .to_u64()
        .ok_or_else(|| Error::Precondition("degree bound exceeds 64 bits".into()))?;
    let next_n = gam
        .to_u64()
        .ok_or_else(|| Error::Precondition("generator count exceeds 64 bits".into()))?;
    let (b, g) = beta_gamma_matrix(m - 1, nvars, next_d, next_n)?;
    Ok((beta * b, g))
}

/// Bound bookkeeping attached to a result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundLedger {
    #[serde(serialize_with = "as_decimal")]
    pub beta: BigUint,
    #[serde(rename = "m'", serialize_with = "as_decimal")]
    pub m_prime: BigUint,
    #[serde(rename = "n'", serialize_with = "as_decimal")]
    pub n_prime: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub gamma: BigUint,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl BoundLedger {
    /// The ledger of an unrolling at cap `beta` for `n` polynomials of degree `<= d`.
    pub fn at_cap(nvars: u32, d: u64, n: u64, beta: u64) -> Self {
        let b = big(beta);
        let np = n_prime(nvars, &b, n);
        BoundLedger { m_prime: m_prime(nvars, &b, d), gamma: alpha(&np), n_prime: np, beta: b }
    }
}

/// How far degree caps may go.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CapPolicy {
    /// Fixed cap instead of the bound or the escalation start.
    pub cap: Option<usize>,
    /// Hard ceiling for every cap.
    pub max_cap: usize,
    /// Primes for modular falsification over `Z`.
    pub primes: Vec<u64>,
}

impl Default for CapPolicy {
    fn default() -> Self {
        CapPolicy { cap: None, max_cap: 32, primes: vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] }
    }
}

impl CapPolicy {
    pub fn with_cap(cap: usize) -> Self {
        CapPolicy { cap: Some(cap), ..Self::default() }
    }

    /// Escalation caps: `start`, `2·start`, … and finally `max_cap`.
    pub fn escalation(&self, start: usize) -> Vec<usize> {
        if let Some(c) = self.cap {
            return vec![c];
        }
        let mut out = Vec::new();
        let mut c = start.max(1);
        while c < self.max_cap {
            out.push(c);
            c *= 2;
        }
        out.push(self.max_cap);
        out
    }
}

/// `Some(v)` when `v` fits under `limit`.
pub fn within(v: &BigUint, limit: usize) -> Option<usize> {
    v.to_usize().filter(|&x| x <= limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn field_bounds() {
        assert_eq!(beta_field(1, 1).unwrap(), u(2));
        assert_eq!(beta_field(1, 2).unwrap(), u(4));
        assert_eq!(beta_field(2, 2).unwrap(), u(16));
        assert_eq!(beta_field(3, 1).unwrap(), u(16));
        assert_eq!(beta_field(0, 7).unwrap(), u(0));
        assert_eq!(beta_field(2, 0).unwrap(), u(0));
        assert_eq!(kollar(1, 2).unwrap(), u(4));
        assert_eq!(kollar(2, 3).unwrap(), u(27));
        // d' = max(5, 4)
        assert_eq!(delta_field(1, 2, 5).unwrap(), u(10));
        assert_eq!(delta_field(2, 1, 0).unwrap(), u(64));
        assert!(beta_field(40, 3).is_err());
    }

    #[test]
    fn unroll_sizes_match_monomial_counts() {
        for n in 1..4u32 {
            for c in 0..6u64 {
                let count = crate::poly::monomials_upto(n as usize, c as usize).len() as u64;
                assert_eq!(binomial(&u(n as u64 + c), n as u64), u(count));
                assert_eq!(n_prime(n, &u(c), 3), u(3 * count));
            }
        }
        assert_eq!(m_prime(1, &u(1), 1), u(3));
    }

    #[test]
    fn matrix_recursion() {
        let (b1, g1) = beta_gamma_matrix(1, 1, 1, 2).unwrap();
        assert_eq!((b1, g1.clone()), (u(2), u(6)));
        // β_2(1,1,2) = 2·β(1, 3) = 2·6, γ_2 = γ(1, 3, 6) = 6·C(7,1)
        let (b2, g2) = beta_gamma_matrix(2, 1, 1, 2).unwrap();
        assert_eq!(b2, u(12));
        assert_eq!(g2, u(42));
    }

    #[test]
    fn escalation_steps() {
        let p = CapPolicy::default();
        assert_eq!(p.escalation(4), vec![4, 8, 16, 32]);
        assert_eq!(p.escalation(5), vec![5, 10, 20, 32]);
        assert_eq!(p.escalation(40), vec![32]);
        assert_eq!(CapPolicy::with_cap(3).escalation(1), vec![3]);
    }
}
