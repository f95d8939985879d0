use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use super::*;
use crate::domain::{Domain, Integers, PrimeField, Rationals};

fn vars(n: usize) -> Vec<String> {
    default_var_names(n)
}

fn zp(text: &str, n: usize) -> MultiPoly<Integers> {
    parse_poly(text, &vars(n), &Integers).unwrap()
}

#[test]
fn arithmetic_examples() {
    let f = zp("X + Y", 2);
    let g = zp("X - Y", 2);
    assert_eq!(&f * &g, zp("X^2 - Y^2", 2));
    assert_eq!(&f + &MultiPoly::zero(&Integers, 2), f);
    assert_eq!(zp("3*X", 1).scale(&BigInt::from(2)), zp("6*X", 1));
    assert_eq!(zp("3*X", 1).scale(&BigInt::zero()), MultiPoly::zero(&Integers, 1));
}

#[test]
fn mismatch_is_reported() {
    let f = zp("X", 1);
    let g = zp("X", 2);
    assert!(f.checked_add(&g).is_err());
    let h = parse_poly("X", &vars(1), &Rationals).unwrap();
    let f5 = parse_poly("X", &vars(1), &PrimeField::new(5).unwrap()).unwrap();
    let f7 = parse_poly("X", &vars(1), &PrimeField::new(7).unwrap()).unwrap();
    assert!(f5.checked_mul(&f7).is_err());
    assert!(h.checked_mul(&h).is_ok());
}

#[test]
fn degree_examples() {
    assert_eq!(zp("X^2*Y + 1", 2).degree(), Degree::Finite(3));
    assert_eq!(zp("0", 2).degree(), Degree::NegInfinity);
    assert_eq!(zp("7", 2).degree(), Degree::Finite(0));
    assert!(Degree::NegInfinity < Degree::Finite(0));
    assert_eq!(Degree::NegInfinity + Degree::Finite(4), Degree::NegInfinity);
}

#[test]
fn content_examples() {
    assert_eq!(zp("6*X^2 + 12*X + 6", 1).content(), BigInt::from(6));
    assert_eq!(zp("-6*X^2 + 12*X", 1).content(), BigInt::from(6));
    assert_eq!(zp("0", 1).content(), BigInt::zero());
    let q = parse_poly("3/2*X + 6", &vars(1), &Rationals).unwrap();
    assert_eq!(q.content(), Rationals.one());
}

#[test]
fn eval_examples() {
    let f = zp("X^2 + Y^2", 2);
    assert_eq!(f.eval(&[BigInt::from(1), BigInt::from(2)]).unwrap(), BigInt::from(5));
    let g = zp("X^3 - 4*X*Y + 9", 2);
    assert_eq!(g.eval(&[BigInt::zero(), BigInt::zero()]).unwrap(), BigInt::from(9));
    assert_eq!(zp("0", 2).eval(&[BigInt::from(3), BigInt::from(4)]).unwrap(), BigInt::zero());
    assert!(f.eval(&[BigInt::from(1)]).is_err());
}

#[test]
fn homogeneity_examples() {
    assert!(zp("X^2 + X*Y", 2).is_homogeneous());
    assert!(!zp("X^2 + X", 2).is_homogeneous());
    assert_eq!(zp("X^2 + X", 2).homogeneous_component(1), zp("X", 2));
    assert!(zp("0", 2).is_homogeneous());
}

fn poly_strategy(nvars: usize, max_deg: u32, coeff: i64) -> impl Strategy<Value = MultiPoly<Integers>> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), -coeff..=coeff),
        0..6,
    )
    .prop_map(move |terms| {
        MultiPoly::from_terms(
            &Integers,
            nvars,
            terms
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max_deg)
                .map(|(e, c)| (Monomial::new(e), BigInt::from(c))),
        )
    })
}

fn primes_of(c: &BigInt) -> BTreeSet<u128> {
    if c.is_zero() {
        return BTreeSet::new();
    }
    prime_divisors(c.abs().to_u128().expect("content below 2^128"))
        .into_iter()
        .collect()
}

proptest! {
    #[test]
    fn degree_is_additive(f in poly_strategy(2, 3, 9), g in poly_strategy(2, 3, 9)) {
        prop_assert_eq!((&f * &g).degree(), f.degree() + g.degree());
    }

    #[test]
    fn eval_is_a_ring_map(f in poly_strategy(2, 3, 9), g in poly_strategy(2, 3, 9), x in -5i64..5, y in -5i64..5) {
        let pt = [BigInt::from(x), BigInt::from(y)];
        let fx = f.eval(&pt).unwrap();
        let gx = g.eval(&pt).unwrap();
        prop_assert_eq!((&f + &g).eval(&pt).unwrap(), &fx + &gx);
        prop_assert_eq!((&f * &g).eval(&pt).unwrap(), fx * gx);
    }

    #[test]
    fn radical_content_is_multiplicative(f in poly_strategy(2, 3, 60), g in poly_strategy(2, 3, 60)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let lhs = primes_of(&(&f * &g).content());
        let rhs: BTreeSet<u128> = primes_of(&f.content()).union(&primes_of(&g.content())).cloned().collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_then_parse_is_identity(f in poly_strategy(3, 4, 1000)) {
        let v = vars(3);
        prop_assert_eq!(parse_poly(&f.to_text(&v), &v, &Integers).unwrap(), f);
    }

    #[test]
    fn rational_print_then_parse(n in prop::collection::vec((-50i64..50, 1i64..20), 1..5)) {
        let v = vars(1);
        let f = MultiPoly::from_terms(&Rationals, 1, n.iter().enumerate().map(|(i, (a, b))| {
            (Monomial::new(vec![i as u32]), num_rational::BigRational::new(BigInt::from(*a), BigInt::from(*b)))
        }));
        prop_assert_eq!(parse_poly(&f.to_text(&v), &v, &Rationals).unwrap(), f);
    }
}
