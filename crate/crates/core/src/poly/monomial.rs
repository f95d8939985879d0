use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `ν = (ν_1, …, ν_N)` standing for `X_1^ν_1 ⋯ X_N^ν_N`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors lexicographically (so `X^2 > X*Y > Y^2 > X > Y > 1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Splits off the first `k` exponents: `(first k, rest)`.
    pub fn split_at(&self, k: usize) -> (Monomial, Monomial) {
        (Monomial(self.0[..k].to_vec()), Monomial(self.0[k..].to_vec()))
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All monomials in `nvars` variables of total degree `<= cap`, by degree
/// ascending and, within a degree, with earlier variables first
/// (`1, X, Y, X^2, X*Y, Y^2, …`). The length is `C(nvars + cap, nvars)`.
pub fn monomials_upto(nvars: usize, cap: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=cap as u32 {
        let mut cur = vec![0u32; nvars];
        exact_degree(nvars, d, 0, &mut cur, &mut out);
    }
    out
}

fn exact_degree(nvars: usize, left: u32, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if nvars == 0 {
        if left == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if i == nvars - 1 {
        cur[i] = left;
        out.push(Monomial(cur.clone()));
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        exact_degree(nvars, left - e, i + 1, cur, out);
    }
    cur[i] = 0;
}

/// Monomials of total degree exactly `d`, in the same order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    exact_degree(nvars, d, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(monomials_upto(1, 2), vec![m(&[0]), m(&[1]), m(&[2])]);
        assert_eq!(monomials_upto(2, 1), vec![m(&[0, 0]), m(&[1, 0]), m(&[0, 1])]);
        assert_eq!(monomials_upto(2, 2).len(), 6);
        assert_eq!(monomials_upto(0, 5), vec![m(&[])]);
    }

    #[test]
    fn enumeration_golden() {
        let listed: Vec<Vec<u32>> = monomials_upto(3, 2)
            .into_iter()
            .map(|m| m.exponents().to_vec())
            .collect();
        let golden = vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![0, 1, 1],
            vec![0, 0, 2],
        ];
        assert_eq!(listed, golden);
    }

    #[test]
    fn counts_are_binomial() {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for n in 0..4 {
            for d in 0..6 {
                assert_eq!(monomials_upto(n, d).len(), binom(n + d, n));
            }
        }
    }

    #[test]
    fn graded_lex_order() {
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[0, 2]) > m(&[1, 0]));
        assert!(m(&[0, 1]) > m(&[0, 0]));
    }
}
