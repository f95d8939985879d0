//! Sparse multivariate polynomials over a [`Domain`](crate::domain::Domain).

mod monomial;
mod multipoly;
mod text;

pub use monomial::{monomials_of_degree, monomials_upto, Monomial};
pub use multipoly::{dot, Degree, MultiPoly};
pub use text::parse_poly;

/// `X, Y, Z, W` for up to four variables, `X1..XN` otherwise.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars <= 4 {
        ["X", "Y", "Z", "W"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=nvars).map(|i| format!("X{i}")).collect()
    }
}

/// Prime divisors of a nonzero integer of absolute value below 2^64, by trial division.
pub fn prime_divisors(n: u128) -> Vec<u128> {
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests;
