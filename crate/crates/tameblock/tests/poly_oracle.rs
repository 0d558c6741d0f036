//! Independent checks of the polynomial utilities: integer-root search
//! against a naive extended scan, the cyclotomic product identity, and a
//! comparison of the coefficient-ratio root bound with the classical Cauchy
//! bound on a randomized corpus.

use proptest::prelude::*;
use tameblock::num_bigint::{BigInt, BigUint};
use tameblock::num_traits::Signed;
use tameblock::polyq::{
    cyclotomic, degree_coincides, is_cyclotomic, positive_integer_roots, root_bound, v2,
    Coincidence, IntPoly,
};

fn eval_i128(coeffs: &[i64], x: i128) -> i128 {
    coeffs
        .iter()
        .rev()
        .fold(0i128, |acc, &c| acc * x + i128::from(c))
}

/// Naive oracle: scan far past the bound the library uses.
fn scan_roots(coeffs: &[i64], limit: i128) -> Vec<u64> {
    (1..=limit)
        .filter(|&x| eval_i128(coeffs, x) == 0)
        .map(|x| x as u64)
        .collect()
}

#[test]
fn cyclotomic_product_identity_up_to_60() {
    for n in 1..=60u64 {
        let mut prod = IntPoly::one();
        for d in 1..=n {
            if n % d == 0 {
                prod = prod.mul(&cyclotomic(d));
            }
        }
        let mut want = vec![0i64; n as usize + 1];
        want[0] = -1;
        want[n as usize] = 1;
        assert_eq!(prod, IntPoly::from_coeffs(&want), "prod over divisors of {}", n);
    }
}

#[test]
fn cyclotomic_recognition() {
    assert_eq!(is_cyclotomic(&"q^2+q-1".parse().unwrap()), None);
    assert_eq!(is_cyclotomic(&"q+1".parse().unwrap()), Some(2));
    assert_eq!(is_cyclotomic(&"q^2+q+1".parse().unwrap()), Some(3));
    assert_eq!(is_cyclotomic(&"q^4-q^2+1".parse().unwrap()), Some(12));
    for d in 1..=40u64 {
        assert_eq!(is_cyclotomic(&cyclotomic(d)), Some(d), "round trip d={}", d);
    }
}

proptest! {
    #[test]
    fn integer_roots_match_naive_scan(coeffs in prop::collection::vec(-20i64..=20, 1..=7)) {
        let p = IntPoly::from_coeffs(&coeffs);
        prop_assume!(!p.is_zero());
        let cs: Vec<i64> = p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        let found = match positive_integer_roots(&p) {
            Ok(rs) => rs,
            Err(_) => return Ok(()), // zero polynomial, excluded above
        };
        let bound10 = if p.degree() == Some(0) {
            1
        } else {
            let b = root_bound(&p).unwrap();
            (b.ceil().to_integer() * BigInt::from(10)).try_into().unwrap()
        };
        let naive = scan_roots(&cs, bound10);
        let found: Vec<u64> = found.iter().map(|r| u64::try_from(r).unwrap()).collect();
        prop_assert_eq!(found, naive);
    }

    #[test]
    fn coefficient_ratio_bound_dominates_integer_roots(
        coeffs in prop::collection::vec(-20i64..=20, 2..=7),
    ) {
        let p = IntPoly::from_coeffs(&coeffs);
        prop_assume!(p.degree().map_or(false, |d| d >= 1));
        let bound = root_bound(&p).unwrap();
        // the classical Cauchy bound 1 + max|c_i|/|lead| for comparison
        let lead = p.leading().unwrap().abs();
        let maxabs: BigInt = p.coeffs().iter().map(|c| c.abs()).max().unwrap();
        let cauchy = tameblock::num_rational::BigRational::from_integer(1.into())
            + tameblock::num_rational::BigRational::new(maxabs, lead);
        let cs: Vec<i64> = p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        let far: i128 = 500; // way past either bound for these coefficient sizes
        for r in scan_roots(&cs, far) {
            let r = tameblock::num_rational::BigRational::from_integer(BigInt::from(r));
            prop_assert!(r <= bound, "root beyond coefficient-ratio bound");
            prop_assert!(r <= cauchy, "root beyond Cauchy bound");
        }
    }

    #[test]
    fn parse_display_round_trip(coeffs in prop::collection::vec(-99i64..=99, 1..=7)) {
        let p = IntPoly::from_coeffs(&coeffs);
        let text = p.to_string();
        let back: IntPoly = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn v2_is_additive(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        let va = v2(&BigUint::from(a)).unwrap();
        let vb = v2(&BigUint::from(b)).unwrap();
        let vab = v2(&(BigUint::from(a) * BigUint::from(b))).unwrap();
        prop_assert_eq!(va + vb, vab);
    }

    #[test]
    fn eval_matches_horner(coeffs in prop::collection::vec(-20i64..=20, 1..=7), x in -50i64..=50) {
        let p = IntPoly::from_coeffs(&coeffs);
        let cs: Vec<i64> = {
            let mut v = coeffs.clone();
            while v.last() == Some(&0) { v.pop(); }
            v
        };
        prop_assert_eq!(p.eval(&BigInt::from(x)), BigInt::from(eval_i128(&cs, i128::from(x))));
    }
}

#[test]
fn coincidence_examples() {
    let parse = |s: &str| s.parse::<IntPoly>().unwrap();
    let two = BigUint::from(2u32);
    assert_eq!(
        degree_coincides(
            &parse("q^2+q-1"),
            &[parse("q^2+q+1"), parse("q^3-1")],
            &two
        ),
        vec![]
    );
    assert_eq!(
        degree_coincides(&parse("q+1"), &[parse("q+1")], &two),
        vec![(0, Coincidence::AllQ)]
    );
    assert_eq!(
        degree_coincides(&parse("q^2-1"), &[parse("q^2+q-3")], &two),
        vec![(0, Coincidence::At(two.clone()))]
    );
    // q_min filters small roots: q - 1 vanishes only at 1
    assert_eq!(
        degree_coincides(&parse("q"), &[parse("2*q-1")], &two),
        vec![]
    );
}

#[test]
fn documented_valuations() {
    assert_eq!(v2(&BigUint::from(97976320u64)), Some(16));
    assert_eq!(v2(&BigUint::from(8u32)), Some(3));
    assert_eq!(v2(&BigUint::from(0u32)), None);
    assert_eq!(
        cyclotomic(12).eval(&BigInt::from(2)),
        BigInt::from(13)
    );
}
