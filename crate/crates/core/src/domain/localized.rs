use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rationals::{format_rational, parse_rational};
use super::{check_prime, Domain, DomainDescriptor};
use crate::error::{Error, Result};

/// ℤ_(p): rationals whose reduced denominator is prime to `p`. A DVR with
/// uniformizer `p`; every nonzero element is `p^v` times a unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalizedIntegers {
    p: u64,
}

impl LocalizedIntegers {
    pub fn new(p: u64) -> Result<Self> {
        Ok(LocalizedIntegers { p: check_prime(p)? })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// p-adic valuation; `None` for zero.
    pub fn valuation(&self, a: &BigRational) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let p = BigInt::from(self.p);
        let mut n = a.numer().abs();
        let mut v = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            v += 1;
        }
        Some(v)
    }

    fn p_power(&self, v: u64) -> BigRational {
        BigRational::from_integer(num_traits::pow(BigInt::from(self.p), v as usize))
    }

    fn check(&self, a: BigRational) -> Result<BigRational> {
        if (a.denom() % BigInt::from(self.p)).is_zero() {
            return Err(Error::InvalidElement(format!(
                "{} is not in Z_({})",
                format_rational(&a),
                self.p
            )));
        }
        Ok(a)
    }

    /// Residue class in `F_p`.
    pub fn residue(&self, a: &BigRational) -> u64 {
        let p = BigInt::from(self.p);
        let n: u64 = a.numer().mod_floor(&p).try_into().unwrap();
        let d: u64 = a.denom().mod_floor(&p).try_into().unwrap();
        let inv = mod_inverse(d, self.p);
        n * inv % self.p
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    e.x.mod_floor(&BigInt::from(m)).try_into().unwrap()
}

impl Domain for LocalizedIntegers {
    type Elem = BigRational;

    fn descriptor(&self) -> DomainDescriptor {
        DomainDescriptor::LocalizedIntegers(self.p)
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        self.valuation(a) == Some(0)
    }
    fn is_field(&self) -> bool {
        false
    }

    fn gcd(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match (self.valuation(a), self.valuation(b)) {
            (None, None) => BigRational::zero(),
            (Some(v), None) | (None, Some(v)) => self.p_power(v),
            (Some(v), Some(w)) => self.p_power(v.min(w)),
        }
    }

    fn bezout(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        match (self.valuation(a), self.valuation(b)) {
            (None, None) => (BigRational::one(), BigRational::zero()),
            (Some(v), None) => (self.p_power(v) / a, BigRational::zero()),
            (None, Some(w)) => (BigRational::zero(), self.p_power(w) / b),
            (Some(v), Some(w)) if v <= w => (self.p_power(v) / a, BigRational::zero()),
            (_, Some(w)) => (BigRational::zero(), self.p_power(w) / b),
        }
    }

    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        let Some(vb) = self.valuation(b) else {
            return Err(Error::Division(format!("{} / 0", format_rational(a))));
        };
        match self.valuation(a) {
            None => Ok(BigRational::zero()),
            Some(va) if va >= vb => Ok(a / b),
            Some(_) => Err(Error::Division(format!(
                "{} does not divide {} in Z_({})",
                format_rational(b),
                format_rational(a),
                self.p
            ))),
        }
    }

    fn canonical_unit(&self, a: &BigRational) -> BigRational {
        match self.valuation(a) {
            None => BigRational::one(),
            Some(v) => self.p_power(v) / a,
        }
    }

    fn div_rem(&self, a: &BigRational, m: &BigRational) -> (BigRational, BigRational) {
        // m = p^k; the representative of a mod p^k is an integer in [0, p^k)
        let k = self.valuation(m).expect("nonzero modulus");
        let pk = num_traits::pow(BigInt::from(self.p), k as usize);
        let r = if pk.is_one() {
            BigInt::zero()
        } else {
            let inv = a.denom().extended_gcd(&pk).x.mod_floor(&pk);
            (a.numer() * inv).mod_floor(&pk)
        };
        let r = BigRational::from_integer(r);
        let q = (a - &r) / m;
        (q, r)
    }

    fn rad(&self, a: &BigRational, b: &BigRational) -> bool {
        match self.valuation(b) {
            None => a.is_zero(),
            Some(0) => true,
            Some(_) => self.valuation(a).map_or(true, |v| v >= 1),
        }
    }

    fn parse_elem(&self, text: &str) -> Result<BigRational> {
        self.check(parse_rational(text)?)
    }
    fn format_elem(&self, a: &BigRational) -> String {
        format_rational(a)
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        self.check(q.clone()).ok()
    }
    fn reduce_mod(&self, a: &BigRational, p: u64) -> Option<u64> {
        (p == self.p).then(|| self.residue(a))
    }
}
