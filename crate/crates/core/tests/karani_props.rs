mod common;

use ganita::karani::{
    brahmagupta_sum, conjugate, evaluate, is_karani, make_surd, norm, parse_surd, surd_add,
    surd_mul, SurdExpression,
};
use ganita::{BigInt, BigRational};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

/// Raw data behind a generated expression: rational part and
/// `(radicand, numer, denom)` terms, radicands not necessarily squarefree.
#[derive(Debug, Clone)]
struct Raw {
    rational: (i64, i64),
    terms: Vec<(i64, i64, i64)>,
}

impl Raw {
    fn build(&self) -> SurdExpression {
        let mut x = SurdExpression::rational(q(self.rational.0, self.rational.1));
        for &(d, n, m) in &self.terms {
            x = surd_add(&x, &make_surd(&q(n, m), &BigInt::from(d)).unwrap());
        }
        x
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn raw() -> impl Strategy<Value = Raw> {
    (
        (-10i64..=10, 1i64..=4),
        proptest::collection::vec((1i64..=30, -10i64..=10, 1i64..=3), 0..4),
    )
        .prop_map(|(rational, terms)| Raw { rational, terms })
}

fn expr() -> impl Strategy<Value = SurdExpression> {
    raw().prop_map(|r| r.build())
}

fn decimal_to_rational(s: &str) -> BigRational {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int}{frac}").parse().unwrap();
    let v = BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    if neg {
        -v
    } else {
        v
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_is_a_commutative_group(x in expr(), y in expr(), z in expr()) {
        prop_assert_eq!(surd_add(&x, &y), surd_add(&y, &x));
        prop_assert_eq!(surd_add(&surd_add(&x, &y), &z), surd_add(&x, &surd_add(&y, &z)));
        prop_assert_eq!(surd_add(&x, &SurdExpression::zero()), x.clone());
        prop_assert!(surd_add(&x, &-x.clone()).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(x in expr(), y in expr(), z in expr()) {
        prop_assert_eq!(surd_mul(&x, &y), surd_mul(&y, &x));
        prop_assert_eq!(surd_mul(&surd_mul(&x, &y), &z), surd_mul(&x, &surd_mul(&y, &z)));
        prop_assert_eq!(surd_mul(&x, &SurdExpression::integer(1)), x.clone());
    }

    #[test]
    fn multiplication_distributes(x in expr(), y in expr(), z in expr()) {
        let lhs = surd_mul(&x, &surd_add(&y, &z));
        let rhs = surd_add(&surd_mul(&x, &y), &surd_mul(&x, &z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn results_stay_canonical(x in expr(), y in expr()) {
        prop_assert!(x.is_canonical());
        prop_assert!(surd_add(&x, &y).is_canonical());
        prop_assert!(surd_mul(&x, &y).is_canonical());
    }

    #[test]
    fn text_round_trip(x in expr()) {
        let text = x.to_string();
        prop_assert_eq!(parse_surd(&text).unwrap(), x);
    }

    #[test]
    fn surd_sum_rule_agrees_with_symbolic_sum(
        a in 1i64..=200, b in 1i64..=200, c in 1i64..=4, d in 1i64..=4,
    ) {
        let u = q(a, c);
        let v = q(b, d);
        let lhs = surd_add(
            &SurdExpression::sqrt_of(&u).unwrap(),
            &SurdExpression::sqrt_of(&v).unwrap(),
        );
        let sum = brahmagupta_sum(&u, &v).unwrap();
        prop_assert_eq!(sum.is_some(), common::is_perfect_square(a * b * c * d));
        match sum {
            Some(w) => prop_assert_eq!(lhs, SurdExpression::sqrt_of(&w).unwrap()),
            // Two distinct squarefree parts, one of which may be 1.
            None => {
                let parts = lhs.term_count() + usize::from(!lhs.rational_part().is_zero());
                prop_assert_eq!(parts, 2);
            }
        }
    }

    #[test]
    fn norm_is_multiplicative(
        d in 2i64..=30, r1 in -10i64..=10, q1 in -10i64..=10, r2 in -10i64..=10, q2 in -10i64..=10,
    ) {
        let mk = |r: i64, c: i64| surd_add(
            &SurdExpression::integer(r),
            &make_surd(&q(c, 1), &BigInt::from(d)).unwrap(),
        );
        let x = mk(r1, q1);
        let y = mk(r2, q2);
        let xy = surd_mul(&x, &y);
        prop_assert_eq!(norm(&xy).unwrap(), norm(&x).unwrap() * norm(&y).unwrap());
        let xc = surd_mul(&x, &conjugate(&x).unwrap());
        prop_assert_eq!(xc.as_rational().cloned(), Some(norm(&x).unwrap()));
    }

    #[test]
    fn karani_iff_not_a_rational_square(n in 1i64..=2000, d in 1i64..=50) {
        let r = q(n, d);
        let (p, s) = (r.numer().clone(), r.denom().clone());
        let p: i64 = p.try_into().unwrap();
        let s: i64 = s.try_into().unwrap();
        let rational_root = common::is_perfect_square(p) && common::is_perfect_square(s);
        prop_assert_eq!(is_karani(&r).unwrap(), !rational_root);
    }
}

#[test]
fn fifty_digit_values_match_fixed_point_oracle() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for _ in 0..300 {
        let raw = raw().new_tree(&mut runner).unwrap().current();
        let x = raw.build();
        if x.is_zero() {
            continue;
        }
        let places = 90;
        let oracle = BigRational::new(
            common::fixed_point_value(raw.rational, &raw.terms, places),
            BigInt::from(10).pow(places),
        );
        let got = decimal_to_rational(&evaluate(&x, 50));
        let err = (got - &oracle).abs();
        let bound = oracle.abs() * BigRational::new(1.into(), BigInt::from(10).pow(40));
        assert!(err < bound, "{x}: relative error too large");
    }
}
