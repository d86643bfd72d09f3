mod common;

use hurwitz::class_algebra::{frobenius_product_coefficient, product_of_class_sums, ClassAlgebraElement};
use hurwitz::hurwitz::{connected_hurwitz, disconnected_hurwitz, monodromy_oracle, CoveringProblem};
use hurwitz::partitions::{generate_partitions, Partition};
use num_traits::Zero;
use proptest::prelude::*;

fn arb_problem(max_d: u32, max_r: usize) -> impl Strategy<Value = CoveringProblem> {
    (1..=max_d).prop_flat_map(move |d| {
        let all = generate_partitions(d).unwrap();
        let n = all.len();
        prop::collection::vec(0..n, 1..=max_r)
            .prop_map(move |idx| CoveringProblem::new(d, idx.iter().map(|&i| all[i].clone()).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disconnected_matches_tuple_count(problem in arb_problem(5, 4)) {
        prop_assert_eq!(disconnected_hurwitz(&problem).unwrap(), monodromy_oracle(&problem, false).unwrap());
    }

    #[test]
    fn connected_matches_transitive_tuple_count(problem in arb_problem(5, 4)) {
        prop_assert_eq!(connected_hurwitz(&problem).unwrap(), monodromy_oracle(&problem, true).unwrap());
    }

    #[test]
    fn profile_order_is_irrelevant(problem in arb_problem(6, 4)) {
        let mut reversed = problem.profiles().to_vec();
        reversed.reverse();
        let other = CoveringProblem::new(problem.degree(), reversed).unwrap();
        prop_assert_eq!(connected_hurwitz(&problem).unwrap(), connected_hurwitz(&other).unwrap());
    }

    #[test]
    fn bracket_equals_frobenius(problem in arb_problem(6, 4)) {
        let d = problem.degree();
        let bracket = product_of_class_sums(d, problem.profiles()).unwrap().identity_coefficient();
        let factorial: u64 = (1..=d as u64).product();
        let bracket = bracket / num_rational::BigRational::from_integer(factorial.into());
        prop_assert_eq!(bracket, frobenius_product_coefficient(problem.profiles()).unwrap());
    }

    #[test]
    fn connected_never_exceeds_disconnected(problem in arb_problem(5, 4)) {
        let conn = connected_hurwitz(&problem).unwrap();
        let disc = disconnected_hurwitz(&problem).unwrap();
        prop_assert!(conn <= disc);
        prop_assert!(!(conn < num_rational::BigRational::zero()));
    }
}

#[test]
fn class_product_with_identity_is_neutral() {
    for d in 1..=6 {
        for eta in generate_partitions(d).unwrap() {
            let x = ClassAlgebraElement::class_sum(&eta);
            let id = ClassAlgebraElement::identity(d);
            assert_eq!(x.multiply(&id).unwrap(), x);
        }
    }
}

#[test]
fn rejects_mismatched_profiles() {
    let bad: Partition = "2,1".parse().unwrap();
    assert!(CoveringProblem::new(4, vec![bad]).is_err());
    assert!(CoveringProblem::new(0, vec![]).is_err());
}
