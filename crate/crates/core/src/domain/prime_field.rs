use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::rationals::parse_rational;
use super::{check_prime, Domain, DomainDescriptor};
use crate::error::{Error, Result};

/// The prime field `F_p` for `p < 2^31`; residues are kept in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        Ok(PrimeField { p: check_prime(p)? })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        // Fermat
        let mut base = a;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p))
            .try_into()
            .expect("residue below p")
    }
}

impl Domain for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> DomainDescriptor {
        DomainDescriptor::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        self.reduce_big(n)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn is_field(&self) -> bool {
        true
    }
    fn gcd(&self, a: &u64, b: &u64) -> u64 {
        u64::from(*a != 0 || *b != 0)
    }
    fn bezout(&self, a: &u64, b: &u64) -> (u64, u64) {
        if *a != 0 {
            (self.inv(*a), 0)
        } else if *b != 0 {
            (0, self.inv(*b))
        } else {
            (1, 0)
        }
    }
    fn exact_div(&self, a: &u64, b: &u64) -> Result<u64> {
        if *b == 0 {
            return Err(Error::Division(format!("{a} / 0 in F_{}", self.p)));
        }
        Ok(a * self.inv(*b) % self.p)
    }
    fn canonical_unit(&self, a: &u64) -> u64 {
        if *a == 0 {
            1
        } else {
            self.inv(*a)
        }
    }
    fn div_rem(&self, a: &u64, m: &u64) -> (u64, u64) {
        (a * self.inv(*m) % self.p, 0)
    }
    fn rad(&self, a: &u64, b: &u64) -> bool {
        *b != 0 || *a == 0
    }
    fn parse_elem(&self, text: &str) -> Result<u64> {
        let q = parse_rational(text)?;
        let d = self.reduce_big(q.denom());
        if d == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("denominator of {text:?} vanishes in F_{}", self.p),
            });
        }
        Ok(self.reduce_big(q.numer()) * self.inv(d) % self.p)
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn is_negative(&self, _a: &u64) -> bool {
        false
    }
    fn to_rational(&self, _a: &u64) -> Option<BigRational> {
        None
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let d = self.reduce_big(q.denom());
        (d != 0).then(|| self.reduce_big(q.numer()) * self.inv(d) % self.p)
    }
    fn reduce_mod(&self, a: &u64, p: u64) -> Option<u64> {
        (p == self.p).then_some(*a)
    }
}
