use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(z(n), z(d))
}

#[test]
fn gcd_examples() {
    let zz = Integers;
    assert_eq!(zz.gcd(&z(6), &z(4)), z(2));
    assert_eq!(zz.gcd(&z(-6), &z(4)), z(2));
    assert_eq!(zz.gcd(&z(0), &z(0)), z(0));
    let f5 = PrimeField::new(5).unwrap();
    assert_eq!(f5.gcd(&3, &0), 1);
    assert_eq!(f5.gcd(&0, &0), 0);
    let loc = LocalizedIntegers::new(5).unwrap();
    assert_eq!(loc.gcd(&q(50, 3), &q(-15, 7)), q(5, 1));
    assert_eq!(loc.gcd(&q(0, 1), &q(125, 2)), q(125, 1));
}

#[test]
fn colon_examples() {
    let zz = Integers;
    assert_eq!(zz.colon(&z(6), &z(4)), z(3));
    assert_eq!(zz.colon(&z(0), &z(0)), z(1));
    assert_eq!(zz.colon(&z(0), &z(5)), z(0));
    assert_eq!(Rationals.colon(&q(0, 1), &q(0, 1)), q(1, 1));
}

#[test]
fn rad_examples() {
    let zz = Integers;
    assert!(zz.rad(&z(6), &z(4)));
    assert!(!zz.rad(&z(2), &z(12)));
    assert!(zz.rad(&z(0), &z(0)));
    assert!(!zz.rad(&z(3), &z(0)));
    assert!(zz.rad(&z(5), &z(-1)));
    assert!(Rationals.rad(&q(3, 1), &q(2, 1)));
    assert!(!Rationals.rad(&q(3, 1), &q(0, 1)));
    let loc = LocalizedIntegers::new(3).unwrap();
    assert!(loc.rad(&q(6, 1), &q(27, 2)));
    assert!(!loc.rad(&q(2, 1), &q(3, 1)));
    assert!(loc.rad(&q(2, 1), &q(5, 1)));
}

#[test]
fn ideal_gen_examples() {
    let zz = Integers;
    assert_eq!(zz.ideal_gen(&[z(4), z(6), z(10)]), z(2));
    assert_eq!(zz.ideal_gen(&[]), z(0));
    assert_eq!(zz.ideal_gen(&[z(0), z(7), z(0)]), z(7));
}

#[test]
fn exact_div_examples() {
    let zz = Integers;
    assert_eq!(zz.exact_div(&z(6), &z(3)).unwrap(), z(2));
    assert_eq!(zz.exact_div(&z(0), &z(5)).unwrap(), z(0));
    assert!(matches!(zz.exact_div(&z(5), &z(2)), Err(Error::Division(_))));
    assert!(zz.exact_div(&z(5), &z(0)).is_err());
    let loc = LocalizedIntegers::new(2).unwrap();
    assert_eq!(loc.exact_div(&q(6, 1), &q(2, 1)).unwrap(), q(3, 1));
    assert_eq!(loc.exact_div(&q(1, 1), &q(3, 1)).unwrap(), q(1, 3));
    assert!(loc.exact_div(&q(1, 1), &q(2, 1)).is_err());
    assert!(zz.divides(&z(0), &z(0)));
    assert!(!zz.divides(&z(0), &z(3)));
    assert!(zz.divides(&z(-3), &z(6)));
}

#[test]
fn bezout_examples() {
    let zz = Integers;
    let (u, v) = zz.bezout(&z(6), &z(4));
    assert_eq!(&u * z(6) + &v * z(4), z(2));
    assert_eq!(zz.bezout(&z(9), &z(0)), (z(1), z(0)));
    let f7 = PrimeField::new(7).unwrap();
    assert_eq!(f7.bezout(&3, &0), (5, 0));
}

#[test]
fn descriptor_round_trip() {
    for s in ["Z", "Q", "Fp:7", "Zloc:5"] {
        let d: DomainDescriptor = s.parse().unwrap();
        assert_eq!(d.to_string(), s);
    }
    assert!("Fp:8".parse::<DomainDescriptor>().is_err());
    assert!("Zloc:2147483659".parse::<DomainDescriptor>().is_err());
    assert!("R".parse::<DomainDescriptor>().is_err());
}

#[test]
fn localized_rejects_bad_denominators() {
    let loc = LocalizedIntegers::new(3).unwrap();
    assert!(loc.parse_elem("1/3").is_err());
    assert_eq!(loc.parse_elem("2/5").unwrap(), q(2, 5));
}

#[test]
fn localized_div_rem_is_canonical() {
    let loc = LocalizedIntegers::new(3).unwrap();
    let m = q(9, 1);
    // 1/2 == 5 (mod 9)
    let (qq, r) = loc.div_rem(&q(1, 2), &m);
    assert_eq!(r, q(5, 1));
    assert_eq!(qq * &m + r, q(1, 2));
    let (_, r2) = loc.div_rem(&(q(1, 2) + q(18, 7)), &m);
    assert_eq!(r2, q(5, 1));
}

#[test]
fn field_parsing() {
    let f5 = PrimeField::new(5).unwrap();
    assert_eq!(f5.parse_elem("-1").unwrap(), 4);
    assert_eq!(f5.parse_elem("1/2").unwrap(), 3);
    assert!(f5.parse_elem("1/5").is_err());
}

fn gcd_displays_hold<D: Domain>(ring: &D, a: &D::Elem, b: &D::Elem, c: &D::Elem) {
    // (gcd-0)
    assert_eq!(ring.gcd(a, b), ring.gcd(b, a));
    // (gcd-1)
    assert_eq!(
        ring.mul(b, &ring.colon(a, b)),
        ring.mul(a, &ring.colon(b, a))
    );
    // (gcd-2)
    if !ring.is_zero(c) {
        let bc = ring.mul(b, c);
        let ac = ring.mul(a, c);
        assert_eq!(
            ring.mul(&ring.colon(a, b), &ring.colon(&bc, &ac)),
            ring.mul(&ring.colon(b, a), &ring.colon(&ac, &bc))
        );
    }
}

proptest! {
    #[test]
    fn integer_gcd_identities(a in -1000i64..1000, b in -1000i64..1000, c in -50i64..50) {
        let zz = Integers;
        gcd_displays_hold(&zz, &z(a), &z(b), &z(c));
        let g = zz.gcd(&z(a), &z(b));
        prop_assert!(zz.divides(&g, &z(a)) || g == z(0));
        let (u, v) = zz.bezout(&z(a), &z(b));
        prop_assert_eq!(u * z(a) + v * z(b), g);
    }

    #[test]
    fn localized_gcd_identities(an in -500i64..500, ad in 1i64..40, bn in -500i64..500, bd in 1i64..40, c in -30i64..30) {
        let loc = LocalizedIntegers::new(5).unwrap();
        prop_assume!(ad % 5 != 0 && bd % 5 != 0);
        let (a, b) = (q(an, ad), q(bn, bd));
        gcd_displays_hold(&loc, &a, &b, &q(c, 1));
        let (u, v) = loc.bezout(&a, &b);
        prop_assert_eq!(u * &a + v * &b, loc.gcd(&a, &b));
    }

    #[test]
    fn prime_field_gcd_identities(a in 0u64..7, b in 0u64..7, c in 0u64..7) {
        let f7 = PrimeField::new(7).unwrap();
        gcd_displays_hold(&f7, &a, &b, &c);
    }

    #[test]
    fn rad_closed_form_matches_search(a in -2000i64..2000, b in -2000i64..2000) {
        prop_assert_eq!(Integers.rad(&z(a), &z(b)), Integers::rad_search(&z(a), &z(b), 64));
    }
}
