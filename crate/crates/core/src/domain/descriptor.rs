use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Names a coefficient domain: `Z`, `Q`, `Fp:<p>` or `Zloc:<p>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum DomainDescriptor {
    Integers,
    Rationals,
    PrimeField(u64),
    LocalizedIntegers(u64),
}

impl DomainDescriptor {
    pub fn is_field(self) -> bool {
        matches!(self, DomainDescriptor::Rationals | DomainDescriptor::PrimeField(_))
    }
}

impl fmt::Display for DomainDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainDescriptor::Integers => write!(f, "Z"),
            DomainDescriptor::Rationals => write!(f, "Q"),
            DomainDescriptor::PrimeField(p) => write!(f, "Fp:{p}"),
            DomainDescriptor::LocalizedIntegers(p) => write!(f, "Zloc:{p}"),
        }
    }
}

impl FromStr for DomainDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let prime = |rest: &str| -> Result<u64> {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidDomain(format!("bad modulus in {s:?}")))?;
            super::check_prime(p)
        };
        match s {
            "Z" => Ok(DomainDescriptor::Integers),
            "Q" => Ok(DomainDescriptor::Rationals),
            _ => {
                if let Some(rest) = s.strip_prefix("Fp:") {
                    Ok(DomainDescriptor::PrimeField(prime(rest)?))
                } else if let Some(rest) = s.strip_prefix("Zloc:") {
                    Ok(DomainDescriptor::LocalizedIntegers(prime(rest)?))
                } else {
                    Err(Error::InvalidDomain(format!("unknown domain {s:?}")))
                }
            }
        }
    }
}

impl TryFrom<String> for DomainDescriptor {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DomainDescriptor> for String {
    fn from(d: DomainDescriptor) -> String {
        d.to_string()
    }
}
