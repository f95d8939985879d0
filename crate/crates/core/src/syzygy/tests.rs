use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::bounds::{beta_field, CapPolicy};
use crate::domain::{Domain, Integers, LocalizedIntegers, PrimeField, Rationals};
use crate::linalg::{kernel, kernel_row, Matrix};
use crate::poly::{parse_poly, Monomial, MultiPoly};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn polys<D: Domain>(ring: &D, vars: &[&str], texts: &[&str]) -> Vec<MultiPoly<D>> {
    texts.iter().map(|t| parse_poly(t, &names(vars), ring).unwrap()).collect()
}

fn p<D: Domain>(ring: &D, vars: &[&str], text: &str) -> MultiPoly<D> {
    parse_poly(text, &names(vars), ring).unwrap()
}

#[test]
fn unroll_layout_golden() {
    let f = polys(&Integers, &["X"], &["X", "1 + X"]);
    let m = unroll(&PolyMatrix::row(&f).unwrap(), 1);
    assert_eq!(m, Matrix::from_i64(&Integers, &[&[0, 0, 1, 0], &[1, 0, 1, 1], &[0, 1, 0, 1]]));
    // column (j, ν) holds the coefficients of X^ν·f_j
    let x = MultiPoly::var(&Integers, 1, 0);
    let shifts = [f[0].clone(), &f[0] * &x, f[1].clone(), &f[1] * &x];
    for (col, s) in shifts.iter().enumerate() {
        for (row, mono) in crate::poly::monomials_upto(1, 2).iter().enumerate() {
            assert_eq!(m.get(row, col), &s.coeff(mono));
        }
    }
}

#[test]
fn unroll_edge_cases() {
    let one = polys(&Rationals, &["X", "Y"], &["1"]);
    let m = unroll(&PolyMatrix::row(&one).unwrap(), 2);
    assert_eq!(m, Matrix::identity(&Rationals, 6));
    assert!(kernel(&m).is_empty());
    let zeros = polys(&Integers, &["X"], &["0", "0"]);
    let m = unroll(&PolyMatrix::row(&zeros).unwrap(), 0);
    assert_eq!(m, Matrix::zero(&Integers, 1, 2));
    assert_eq!(kernel(&m).len(), 2);
}

#[test]
fn reroll_examples() {
    let v = polys(&Integers, &["X", "Y"], &["Y", "-X"]);
    let c = coordinates(&v, 1).unwrap();
    assert_eq!(reroll(&Integers, 2, 2, 1, &c).unwrap(), v);
    let zero = vec![BigInt::from(0); 6];
    assert!(reroll(&Integers, 2, 2, 1, &zero).unwrap().iter().all(MultiPoly::is_zero));
    let mut e1 = zero.clone();
    e1[0] = BigInt::from(1);
    assert_eq!(reroll(&Integers, 2, 2, 1, &e1).unwrap(), polys(&Integers, &["X", "Y"], &["1", "0"]));
    assert!(reroll(&Integers, 2, 2, 1, &e1[..5]).is_err());
    assert!(coordinates(&polys(&Integers, &["X"], &["X^3"]), 2).is_err());
}

#[test]
fn syzygies_examples() {
    let policy = CapPolicy::default();
    let f = polys(&Rationals, &["X", "Y"], &["X", "Y"]);
    let s = syzygies(&f, &policy).unwrap();
    assert_eq!(s.completeness, Completeness::Bound);
    assert_eq!(s.cap, 4);
    let koszul = vec![polys(&Rationals, &["X", "Y"], &["Y", "-X"])];
    assert!(same_module(&s.vectors, &koszul, 2, 4));

    let five = polys(&Rationals, &["X"], &["5"]);
    assert!(syzygies(&five, &policy).unwrap().is_empty());
}

#[test]
fn integer_syzygies_against_enumeration() {
    let f = polys(&Integers, &["X"], &["2", "X"]);
    let s = syzygies(&f, &CapPolicy::default()).unwrap();
    assert!(num_bigint::BigUint::from(s.len()) <= s.ledger.gamma);
    assert_eq!(s.completeness, Completeness::Stable);
    let expected = vec![polys(&Integers, &["X"], &["X", "-2"])];
    assert!(same_module(&s.vectors, &expected, 2, 4));
    // every small solution of degree <= 2 must lie in the module
    let z = Integers;
    let row = PolyMatrix::row(&f).unwrap();
    let range = -2i64..=2;
    let mut count = 0;
    for code in 0..5usize.pow(6) {
        let digits: Vec<i64> = (0..6).map(|k| (code / 5usize.pow(k)) as i64 % 5 - 2).collect();
        debug_assert!(digits.iter().all(|d| range.contains(d)));
        let y: Vec<MultiPoly<Integers>> = (0..2)
            .map(|j| {
                MultiPoly::from_terms(&z, 1, (0..3).map(|e| (Monomial::new(vec![e as u32]), BigInt::from(digits[3 * j + e]))))
            })
            .collect();
        if row.annihilates(&y).unwrap() {
            count += 1;
            assert!(module_contains(&s.vectors, &y, 2), "{y:?}");
        }
    }
    // y = (a X + b X^2, -2a - 2b X): a, b with |2a|, |2b| <= 2
    assert_eq!(count, 9);
}

#[test]
fn syzygies_matrix_examples() {
    let policy = CapPolicy::default();
    let vars = ["X", "Y"];
    let a = PolyMatrix::from_rows(vec![polys(&Rationals, &vars, &["X"]), polys(&Rationals, &vars, &["Y"])]).unwrap();
    assert!(syzygies_matrix(&a, &policy).unwrap().is_empty());

    let a = PolyMatrix::from_rows(vec![polys(&Rationals, &vars, &["X", "Y"]), polys(&Rationals, &vars, &["0", "0"])])
        .unwrap();
    let joint = syzygies_matrix(&a, &policy).unwrap();
    let single = syzygies(&polys(&Rationals, &vars, &["X", "Y"]), &policy).unwrap();
    assert!(same_module(&joint.vectors, &single.vectors, 2, 4));

    let constants = polys(&Integers, &["X"], &["2", "3", "4"]);
    let s = syzygies(&constants, &policy).unwrap();
    let pairs: Vec<Vec<MultiPoly<Integers>>> = kernel_row(&Integers, &[2.into(), 3.into(), 4.into()])
        .unwrap()
        .vectors()
        .iter()
        .map(|v| v.iter().map(|c| MultiPoly::constant(&Integers, 1, c.clone())).collect())
        .collect();
    assert!(same_module(&s.vectors, &pairs, 3, 3));
}

#[test]
fn solve_poly_examples() {
    let policy = CapPolicy::default();
    let a = PolyMatrix::row(&polys(&Integers, &["X"], &["2", "X"])).unwrap();
    let b = polys(&Integers, &["X"], &["X^2 + 2"]);
    let v = solve_poly(&a, &b, &policy).unwrap();
    assert!(verify_solution(&a, &b, v.cofactors().unwrap()).unwrap());

    let a = PolyMatrix::row(&polys(&Rationals, &["X"], &["X"])).unwrap();
    let v = solve_poly(&a, &polys(&Rationals, &["X"], &["1"]), &policy).unwrap();
    assert!(matches!(v.verdict, Verdict::NotMember(NonMembership::RationalFailure { .. })));

    let a = PolyMatrix::row(&polys(&Integers, &["X"], &["4*X + 2"])).unwrap();
    let b = polys(&Integers, &["X"], &["2"]);
    let v = solve_poly(&a, &b, &policy).unwrap();
    let cert = v.certificate().unwrap();
    assert!(matches!(cert, NonMembership::RationalFailure { .. }));
    assert!(recheck_non_membership(&a, &b, cert).unwrap());
}

#[test]
fn member_examples() {
    let policy = CapPolicy::default();
    let gens = polys(&Integers, &["X"], &["-2", "X^2 + X + 1"]);
    let one = p(&Integers, &["X"], "1");
    let v = member(&one, &gens, &policy).unwrap();
    assert_eq!(v.certificate(), Some(&NonMembership::ModularFailure { p: 2, cap: 4 }));
    let row = PolyMatrix::row(&gens).unwrap();
    assert!(recheck_non_membership(&row, std::slice::from_ref(&one), v.certificate().unwrap()).unwrap());
    // the same certificate fails to re-verify modulo 3
    assert!(!recheck_non_membership(&row, std::slice::from_ref(&one), &NonMembership::ModularFailure { p: 3, cap: 4 })
        .unwrap());

    let qgens = polys(&Rationals, &["X"], &["-2", "X^2 + X + 1"]);
    let v = member(&p(&Rationals, &["X"], "1"), &qgens, &policy).unwrap();
    assert!(verify_member(&p(&Rationals, &["X"], "1"), &qgens, v.cofactors().unwrap()).unwrap());

    let xy = polys(&Rationals, &["X", "Y"], &["X", "Y"]);
    let f0 = p(&Rationals, &["X", "Y"], "X^2 + Y^2");
    let v = member(&f0, &xy, &policy).unwrap();
    assert!(verify_member(&f0, &xy, v.cofactors().unwrap()).unwrap());
    assert!(member_at(&f0, &xy, 1).unwrap().is_some());
    assert!(member_at(&f0, &xy, 0).unwrap().is_none());

    let gens = polys(&Integers, &["X"], &["1 - 2*X", "4*X"]);
    let v = member(&one, &gens, &policy).unwrap();
    assert!(verify_member(&one, &gens, v.cofactors().unwrap()).unwrap());
}

#[test]
fn localized_membership() {
    let loc = LocalizedIntegers::new(3).unwrap();
    let policy = CapPolicy::default();
    // 2 is a unit in Z_(3)
    let gens = polys(&loc, &["X"], &["2", "X"]);
    let v = member(&p(&loc, &["X"], "1"), &gens, &policy).unwrap();
    assert!(verify_member(&p(&loc, &["X"], "1"), &gens, v.cofactors().unwrap()).unwrap());
    // 3 is not: 1 ∉ (3, X) since X = 0, 3 = 0 in F_3
    let gens = polys(&loc, &["X"], &["3", "X + 3"]);
    let v = member(&p(&loc, &["X"], "1"), &gens, &policy).unwrap();
    assert_eq!(v.certificate(), Some(&NonMembership::ModularFailure { p: 3, cap: 2 }));
}

#[test]
fn member_homogeneous_examples() {
    let vars = ["X", "Y"];
    let gens = polys(&Integers, &vars, &["X^2 + Y^2", "X*Y"]);
    let v = member_homogeneous(&p(&Integers, &vars, "X^2"), &gens).unwrap();
    assert_eq!(v.verdict, Verdict::NotMember(NonMembership::HomogeneousExact));
    let qgens = polys(&Rationals, &vars, &["X^2 + Y^2", "X*Y"]);
    assert!(member_homogeneous(&p(&Rationals, &vars, "X^2"), &qgens).unwrap().is_not_member());

    let v = member_homogeneous(&p(&Integers, &vars, "X^3"), &gens).unwrap();
    assert_eq!(v.cofactors().unwrap(), &polys(&Integers, &vars, &["X", "-Y"])[..]);
    let v = member_homogeneous(&p(&Integers, &vars, "X*Y"), &polys(&Integers, &vars, &["X*Y"])).unwrap();
    assert_eq!(v.cofactors().unwrap(), &polys(&Integers, &vars, &["1"])[..]);
    assert!(matches!(
        member_homogeneous(&p(&Integers, &vars, "X^2 + X"), &gens),
        Err(crate::Error::NotHomogeneous(_))
    ));
    // the general pipeline takes the same shortcut
    let v = member(&p(&Integers, &vars, "X^2"), &gens, &CapPolicy::default()).unwrap();
    assert_eq!(v.verdict, Verdict::NotMember(NonMembership::HomogeneousExact));
}

#[test]
fn unit_member_examples() {
    let policy = CapPolicy::default();
    let gens = polys(&Rationals, &["X"], &["X", "X + 1"]);
    let v = unit_member(&gens, &policy).unwrap();
    assert_eq!(v.cofactors().unwrap(), &polys(&Rationals, &["X"], &["-1", "1"])[..]);
    assert!(unit_member(&polys(&Rationals, &["X"], &["X"]), &policy).unwrap().is_not_member());
    let gens = polys(&Rationals, &["X"], &["X^2 + 1", "X - 1"]);
    let v = unit_member(&gens, &policy).unwrap();
    assert!(verify_member(&MultiPoly::one(&Rationals, 1), &gens, v.cofactors().unwrap()).unwrap());
    // over F_2, X^2 + 1 = (X - 1)^2
    let f2 = PrimeField::new(2).unwrap();
    let v = unit_member(&polys(&f2, &["X"], &["X^2 + 1", "X - 1"]), &policy).unwrap();
    assert_eq!(v.certificate(), Some(&NonMembership::ModularFailure { p: 2, cap: 4 }));
}

#[test]
fn radical_member_examples() {
    let policy = CapPolicy::default();
    assert!(radical_member_field(&p(&Rationals, &["X"], "X"), &polys(&Rationals, &["X"], &["X^2"]), &policy)
        .unwrap()
        .is_member());
    assert!(radical_member_field(&p(&Rationals, &["X"], "1"), &polys(&Rationals, &["X"], &["X"]), &policy)
        .unwrap()
        .is_not_member());
    let vars = ["X", "Y"];
    let v = radical_member_field(
        &p(&Rationals, &vars, "X^2 + 2*X*Y + Y^2"),
        &polys(&Rationals, &vars, &["(X + Y)^3"]),
        &policy,
    )
    .unwrap();
    assert!(v.is_member());
    assert!(radical_member_field(&p(&Integers, &["X"], "X"), &polys(&Integers, &["X"], &["X"]), &policy).is_err());
}

#[test]
fn rad_member_constants_examples() {
    let z = Integers;
    let zv = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert!(rad_member_constants(&z, &6.into(), &zv(&[4, 10])));
    assert!(Integers::rad_search(&6.into(), &2.into(), 64));
    assert!(!rad_member_constants(&z, &1.into(), &zv(&[0, 0])));
    assert!(rad_member_constants(&z, &0.into(), &zv(&[5])));
    for r0 in -30i64..=30 {
        for a in -12i64..=12 {
            for b in [0i64, 6, 9] {
                let a_gen = z.ideal_gen(&zv(&[a, b]));
                assert_eq!(
                    rad_member_constants(&z, &r0.into(), &zv(&[a, b])),
                    Integers::rad_search(&r0.into(), &a_gen, 64)
                );
            }
        }
    }
}

#[test]
fn binomial_examples() {
    let v = one_member_binomial(&2.into(), &4.into());
    assert_eq!(v.cofactors().unwrap(), &polys(&Integers, &["X"], &["1 + 2*X", "X"])[..]);
    let gens = binomial_generators(&2.into(), &4.into());
    assert!(verify_member(&MultiPoly::one(&Integers, 1), &gens, v.cofactors().unwrap()).unwrap());

    let v = one_member_binomial(&2.into(), &12.into());
    assert_eq!(v.verdict, Verdict::NotMember(NonMembership::RadicalCriterion));
    let gens = binomial_generators(&2.into(), &12.into());
    let row = PolyMatrix::row(&gens).unwrap();
    assert!(recheck_non_membership(&row, &[MultiPoly::one(&Integers, 1)], &NonMembership::RadicalCriterion).unwrap());

    let v = one_member_binomial(&0.into(), &1.into());
    assert_eq!(v.cofactors().unwrap(), &polys(&Integers, &["X"], &["1", "0"])[..]);
}

#[test]
fn intersection_and_colon_examples() {
    let policy = CapPolicy::default();
    let x = vec![polys(&Integers, &["X"], &["X"])];
    let two = vec![polys(&Integers, &["X"], &["2"])];
    let both = intersect(&x, &two, &policy).unwrap();
    let two_x = vec![polys(&Integers, &["X"], &["2*X"])];
    assert!(same_module(&both.vectors, &two_x, 1, 4));
    // brute force: every a + bX + cX^2 with small coefficients lying in both ideals lies in (2X)
    for code in 0..125 {
        let c: Vec<i64> = (0..3).map(|k| (code / 5i64.pow(k)) % 5 - 2).collect();
        let f = MultiPoly::from_terms(&Integers, 1, (0..3).map(|e| (Monomial::new(vec![e as u32]), BigInt::from(c[e]))));
        let in_x = c[0] == 0;
        let in_two = c.iter().all(|v| v % 2 == 0);
        assert_eq!(in_x && in_two, module_contains(&both.vectors, &[f], 2));
    }

    let q = colon(&two_x, &x, &policy).unwrap();
    assert!(same_module(&q.vectors, &two, 1, 4));

    let m = vec![polys(&Rationals, &["X"], &["X", "1"]), polys(&Rationals, &["X"], &["0", "X^2"])];
    let mm = intersect(&m, &m, &policy).unwrap();
    assert!(same_module(&mm.vectors, &m, 2, 6));
}

fn zpoly(coeffs: &[i64]) -> MultiPoly<Integers> {
    MultiPoly::from_terms(
        &Integers,
        1,
        coeffs.iter().enumerate().map(|(e, &c)| (Monomial::new(vec![e as u32]), BigInt::from(c))),
    )
}

fn qpoly(nvars: usize, coeffs: &[i64]) -> MultiPoly<Rationals> {
    let monos = crate::poly::monomials_upto(nvars, 3);
    MultiPoly::from_terms(&Rationals, nvars, monos.into_iter().zip(coeffs.iter().map(|&c| Rationals.from_i64(c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn syzygies_annihilate_and_contain_koszul(
        n in 2usize..=3,
        d in 1usize..=2,
        seed in prop::collection::vec(prop::collection::vec(-3i64..=3, 10), 3),
    ) {
        let f: Vec<_> = seed[..n].iter().map(|c| qpoly(1, &c[..d + 1])).collect();
        let s = syzygies(&f, &CapPolicy::default()).unwrap();
        let row = PolyMatrix::row(&f).unwrap();
        prop_assert!(num_bigint::BigUint::from(s.len()) <= s.ledger.gamma);
        for v in &s.vectors {
            prop_assert!(row.annihilates(v).unwrap());
            prop_assert!(v.iter().all(|p| p.degree().or_zero() as usize <= s.cap));
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut k = vec![MultiPoly::zero(&Rationals, 1); n];
                k[i] = f[j].clone();
                k[j] = -&f[i];
                // delta_field(1, d, d) = 2·max(d, 2d)
                prop_assert!(module_contains(&s.vectors, &k, 4 * d + s.cap));
            }
        }
    }

    #[test]
    fn joint_unrolling_matches_row_recursion(
        cols in 1usize..=3,
        seed in prop::collection::vec(-2i64..=2, 12),
    ) {
        let rows: Vec<Vec<MultiPoly<Rationals>>> = (0..2)
            .map(|i| (0..cols).map(|j| qpoly(1, &seed[(i * 3 + j) * 2..(i * 3 + j) * 2 + 2])).collect())
            .collect();
        let a = PolyMatrix::from_rows(rows).unwrap();
        let policy = CapPolicy::default();
        let joint = syzygies_matrix(&a, &policy).unwrap();
        let rec = syzygies_matrix_recursive(&a, &policy).unwrap();
        for v in rec.vectors.iter().chain(&joint.vectors) {
            prop_assert!(a.annihilates(v).unwrap());
        }
        let degree = 2 * joint.cap.max(rec.cap) + 4;
        prop_assert!(same_module(&joint.vectors, &rec.vectors, cols, degree));
    }

    #[test]
    fn field_syzygies_stable_under_doubling(
        nvars in 1usize..=2,
        n in 1usize..=3,
        seed in prop::collection::vec(-3i64..=3, 9),
    ) {
        // d = 1 keeps N = 2 at caps 4 and 8
        let count = nvars + 1;
        let f: Vec<_> = (0..n).map(|j| qpoly(nvars, &seed[j * count..(j + 1) * count])).collect();
        let beta = beta_field(nvars as u32, 1).unwrap();
        let beta: usize = beta.try_into().unwrap();
        let a = syzygies(&f, &CapPolicy::with_cap(beta)).unwrap();
        let b = syzygies(&f, &CapPolicy::with_cap(2 * beta)).unwrap();
        prop_assert!(same_module(&a.vectors, &b.vectors, n, 2 * beta));
        let f0 = qpoly(nvars, &seed[..count]);
        prop_assert_eq!(member_at(&f0, &f, beta).unwrap().is_some(), member_at(&f0, &f, 2 * beta).unwrap().is_some());
    }

    #[test]
    fn members_survive_substitution(
        a in prop::collection::vec(-4i64..=4, 2),
        b in prop::collection::vec(-4i64..=4, 2),
        h in prop::collection::vec(-3i64..=3, 2),
        points in prop::collection::vec(-20i64..=20, 20),
    ) {
        let gens = vec![zpoly(&a), zpoly(&[b[0], 0, b[1]])];
        let f0 = &(&gens[0] * &zpoly(&h)) + &gens[1];
        let v = member(&f0, &gens, &CapPolicy::default()).unwrap();
        prop_assert!(v.is_member());
        let cof = v.cofactors().unwrap();
        prop_assert!(verify_member(&f0, &gens, cof).unwrap());
        for x in points {
            let pt = [BigInt::from(x)];
            let g = Integers.ideal_gen(&gens.iter().map(|g| g.eval(&pt).unwrap()).collect::<Vec<_>>());
            prop_assert!(Integers.divides(&g, &f0.eval(&pt).unwrap()));
        }
    }

    #[test]
    fn unroll_coordinates_round_trip(
        nvars in 1usize..=3,
        n in 1usize..=3,
        cap in 0usize..=3,
        seed in prop::collection::vec(-50i64..=50, 60),
    ) {
        let len = crate::poly::monomials_upto(nvars, cap).len();
        let coords: Vec<BigInt> = seed.iter().cycle().take(n * len).map(|&x| BigInt::from(x)).collect();
        let v = reroll(&Integers, nvars, n, cap, &coords).unwrap();
        prop_assert_eq!(coordinates(&v, cap).unwrap(), coords);
    }
}

#[test]
fn small_prime_factoring() {
    assert_eq!(member::small_primes_of(360), vec![2, 3, 5]);
    assert_eq!(member::small_primes_of(2 * 1_000_003), vec![2, 1_000_003]);
    assert!(member::small_primes_of(1).is_empty());
}
