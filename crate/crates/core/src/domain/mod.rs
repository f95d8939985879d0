//! Coefficient domains.
//!
//! Every domain here is a Bézout domain: finitely generated ideals are
//! principal, so `gcd` returns a generator of `(a, b)`. The generator is
//! always the canonical associate (non-negative over ℤ, `1` over a field,
//! a power of `p` over ℤ_(p)), which makes `gcd(a, b) == gcd(b, a)` an
//! exact equality and keeps printed output reproducible.

mod descriptor;
mod integers;
mod localized;
mod prime_field;
mod rationals;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use descriptor::DomainDescriptor;
pub use integers::Integers;
pub use localized::LocalizedIntegers;
pub use prime_field::PrimeField;
pub use rationals::{denominator_lcm, Rationals};

use crate::error::{Error, Result};

/// A computable Bézout domain with canonical gcd, colon and `rad`.
pub trait Domain: Clone + PartialEq + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn descriptor(&self) -> DomainDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the unique ring map ℤ → R.
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    fn is_field(&self) -> bool;

    /// Canonical generator of the ideal `(a, b)`.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `(u, v)` with `u*a + v*b == gcd(a, b)`.
    fn bezout(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// The `q` with `q*b == a`; fails when `b == 0` or `b` does not divide `a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// A unit `u` such that `u*a` is the canonical associate of `a` (`1` for zero).
    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem;

    /// `(q, r)` with `a == q*m + r` and `r` the canonical representative of
    /// `a` modulo the nonzero canonical element `m`.
    fn div_rem(&self, a: &Self::Elem, m: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// `b` divides `a^n` for some `n >= 0`.
    fn rad(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn parse_elem(&self, text: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// Whether `a` prints with a leading minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    /// Embedding into ℚ, when the domain is a subring of ℚ.
    fn to_rational(&self, a: &Self::Elem) -> Option<BigRational>;
    /// Preimage of a rational number, when it lies in the domain.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    /// Reduction into `F_p`, when a ring map R → F_p exists.
    fn reduce_mod(&self, a: &Self::Elem, p: u64) -> Option<u64>;

    fn divides(&self, b: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(b) {
            return self.is_zero(a);
        }
        self.exact_div(a, b).is_ok()
    }

    /// The colon operation: `a / gcd(a, b)`, and `1` when `a == b == 0`.
    fn colon(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) && self.is_zero(b) {
            return self.one();
        }
        let g = self.gcd(a, b);
        self.exact_div(a, &g).expect("gcd divides its arguments")
    }

    fn ideal_gen<'a, I>(&self, elems: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        elems.into_iter().fold(self.zero(), |g, e| self.gcd(&g, e))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn canonical(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.canonical_unit(a), a)
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    /// Inverse of a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit(self.format_elem(a)));
        }
        self.exact_div(&self.one(), a)
    }
}

/// Runs `$body` with `$ring` bound to the concrete domain named by a descriptor.
#[macro_export]
macro_rules! with_domain {
    ($desc:expr, $ring:ident => $body:expr) => {
        match $desc {
            $crate::domain::DomainDescriptor::Integers => {
                let $ring = $crate::domain::Integers;
                $body
            }
            $crate::domain::DomainDescriptor::Rationals => {
                let $ring = $crate::domain::Rationals;
                $body
            }
            $crate::domain::DomainDescriptor::PrimeField(p) => {
                let $ring = $crate::domain::PrimeField::new(p).expect("descriptor holds a prime");
                $body
            }
            $crate::domain::DomainDescriptor::LocalizedIntegers(p) => {
                let $ring =
                    $crate::domain::LocalizedIntegers::new(p).expect("descriptor holds a prime");
                $body
            }
        }
    };
}

/// Trial-division primality for `p < 2^31`.
pub fn is_small_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<u64> {
    if p >= 1 << 31 {
        return Err(Error::InvalidDomain(format!("modulus {p} is not below 2^31")));
    }
    if !is_small_prime(p) {
        return Err(Error::InvalidDomain(format!("{p} is not prime")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests;
