use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::integers::parse_int;
use super::{Domain, DomainDescriptor};
use crate::error::{Error, Result};

/// The field ℚ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

pub(crate) fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse { pos: 0, msg: format!("zero denominator in {t:?}") });
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(parse_int(t)?)),
    }
}

pub(crate) fn format_rational(a: &BigRational) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl Domain for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> DomainDescriptor {
        DomainDescriptor::Rationals
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
        !a.is_zero()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn gcd(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_zero() && b.is_zero() {
            BigRational::zero()
        } else {
            BigRational::one()
        }
    }
    fn bezout(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        if !a.is_zero() {
            (a.recip(), BigRational::zero())
        } else if !b.is_zero() {
            (BigRational::zero(), b.recip())
        } else {
            (BigRational::one(), BigRational::zero())
        }
    }
    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        if b.is_zero() {
            return Err(Error::Division(format!("{} / 0", format_rational(a))));
        }
        Ok(a / b)
    }
    fn canonical_unit(&self, a: &BigRational) -> BigRational {
        if a.is_zero() {
            BigRational::one()
        } else {
            a.recip()
        }
    }
    fn div_rem(&self, a: &BigRational, m: &BigRational) -> (BigRational, BigRational) {
        (a / m, BigRational::zero())
    }
    fn rad(&self, a: &BigRational, b: &BigRational) -> bool {
        !b.is_zero() || a.is_zero()
    }
    fn parse_elem(&self, text: &str) -> Result<BigRational> {
        parse_rational(text)
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
        Some(q.clone())
    }
    fn reduce_mod(&self, _a: &BigRational, _p: u64) -> Option<u64> {
        None
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
