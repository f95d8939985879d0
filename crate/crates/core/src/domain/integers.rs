use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Domain, DomainDescriptor};
use crate::error::{Error, Result};

/// The ring ℤ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Integers {
    /// `rad` by brute force: does `b` divide `a^n` for some `n <= max_n`?
    pub fn rad_search(a: &BigInt, b: &BigInt, max_n: u32) -> bool {
        let mut power = BigInt::one();
        for _ in 0..=max_n {
            if b.is_zero() {
                if power.is_zero() {
                    return true;
                }
            } else if (&power % b).is_zero() {
                return true;
            }
            power *= a;
        }
        false
    }

    /// The exponent used by the closed-form `rad` test: `max(1, floor(log2 |b|))`.
    pub fn rad_exponent(b: &BigInt) -> u64 {
        let bits = b.magnitude().bits();
        bits.saturating_sub(1).max(1)
    }
}

impl Domain for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> DomainDescriptor {
        DomainDescriptor::Integers
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
    fn is_field(&self) -> bool {
        false
    }

    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }

    fn bezout(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        if b.is_zero() {
            let u = if a.is_negative() { -BigInt::one() } else { BigInt::one() };
            return (u, BigInt::zero());
        }
        if a.is_zero() {
            let v = if b.is_negative() { -BigInt::one() } else { BigInt::one() };
            return (BigInt::zero(), v);
        }
        let e = a.extended_gcd(b);
        if e.gcd.is_negative() {
            (-e.x, -e.y)
        } else {
            (e.x, e.y)
        }
    }

    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        if b.is_zero() {
            return Err(Error::Division(format!("{a} / 0")));
        }
        let (q, r) = a.div_rem(b);
        if !r.is_zero() {
            return Err(Error::Division(format!("{b} does not divide {a}")));
        }
        Ok(q)
    }

    fn canonical_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn div_rem(&self, a: &BigInt, m: &BigInt) -> (BigInt, BigInt) {
        // floor division gives a remainder in [0, m) for m > 0
        let (q, r) = a.div_mod_floor(m);
        (q, r)
    }

    fn rad(&self, a: &BigInt, b: &BigInt) -> bool {
        if b.is_zero() {
            return a.is_zero();
        }
        if self.is_unit(b) {
            return true;
        }
        let m = b.abs();
        let e = Self::rad_exponent(&m);
        a.modpow(&BigInt::from(e), &m).is_zero()
    }

    fn parse_elem(&self, text: &str) -> Result<BigInt> {
        let t = text.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = parse_int(n)?;
            let d: BigInt = parse_int(d)?;
            return self
                .exact_div(&n, &d)
                .map_err(|_| Error::Parse { pos: 0, msg: format!("{t} is not an integer") });
        }
        parse_int(t)
    }

    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.sign() == Sign::Minus
    }
    fn to_rational(&self, a: &BigInt) -> Option<BigRational> {
        Some(BigRational::from_integer(a.clone()))
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigInt> {
        q.is_integer().then(|| q.to_integer())
    }
    fn reduce_mod(&self, a: &BigInt, p: u64) -> Option<u64> {
        let r = a.mod_floor(&BigInt::from(p));
        Some(r.try_into().expect("residue below p"))
    }
}

pub(crate) fn parse_int(s: &str) -> Result<BigInt> {
    let s = s.trim();
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse { pos: 0, msg: format!("invalid integer {s:?}") })
}
