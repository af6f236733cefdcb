use super::*;
use crate::algebra::PrimeField;
use proptest::prelude::*;

fn m(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec())
}

#[test]
fn mdeg_is_the_matrix_vector_product() {
    let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
    // x1*x2^2 has degree (3,5)
    assert_eq!(w.mdeg(&m(&[1, 2, 0])).unwrap(), MDeg::new(vec![3, 5]));
    assert_eq!(w.mdeg(&Monomial::one(3)).unwrap(), MDeg::zero(2));

    let w = WeightMatrix::new(vec![vec![1, 1], vec![0, 1]]).unwrap();
    assert_eq!(w.mdeg(&m(&[1, 1])).unwrap(), MDeg::new(vec![2, 1]));

    assert!(w.mdeg(&m(&[1, 1, 1])).is_err());
}

#[test]
fn homogeneous_components_group_by_degree() {
    let field = PrimeField::new(101).unwrap();
    let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
    let f = Polynomial::from_terms(vec![(m(&[1, 2, 0]), 1), (m(&[2, 0, 1]), 1)], &field, &w);
    let comps = w.homogeneous_components(&f).unwrap();
    assert_eq!(comps.len(), 1);
    assert!(comps.contains_key(&MDeg::new(vec![3, 5])));

    assert!(w
        .homogeneous_components(&Polynomial::zero())
        .unwrap()
        .is_empty());

    let w2 = WeightMatrix::new(vec![vec![1, 1], vec![1, 2]]).unwrap();
    let g = Polynomial::from_terms(vec![(m(&[1, 0]), 1), (m(&[0, 1]), 1)], &field, &w2);
    let comps = w2.homogeneous_components(&g).unwrap();
    let keys: Vec<&MDeg> = comps.keys().collect();
    assert_eq!(keys, vec![&MDeg::new(vec![1, 1]), &MDeg::new(vec![1, 2])]);
}

#[test]
fn equivalence_compares_row_spaces() {
    let w = WeightMatrix::new(vec![vec![1, 1], vec![0, 1]]).unwrap();
    assert!(w.equivalent_to(&w).unwrap());

    let w2 = WeightMatrix::new(vec![vec![-1, -1], vec![0, 1]]).unwrap();
    assert!(w.equivalent_to(&w2).unwrap());

    let a = WeightMatrix::new(vec![vec![1, 0]]).unwrap();
    let b = WeightMatrix::new(vec![vec![0, 1]]).unwrap();
    assert!(!a.equivalent_to(&b).unwrap());
    assert!(a.equivalent_to(&w).is_err());
}

#[test]
fn rank_deficient_matrices_are_rejected() {
    assert!(WeightMatrix::new(vec![vec![1, 1], vec![2, 2]]).is_err());
    assert!(WeightMatrix::new(vec![vec![1], vec![1]]).is_err());
    assert!(WeightMatrix::new(vec![]).is_err());
}

#[test]
fn property_flags_on_reference_matrices() {
    let w = WeightMatrix::new(vec![vec![1, 2, 3], vec![2, 1, 1]]).unwrap();
    let p = w.properties();
    assert!(p.positive && p.nonnegative && p.positive_type && p.size_bounded);

    // x1*x2 has degree zero, so a kernel direction exists.
    let w = WeightMatrix::new(vec![vec![1, -1]]).unwrap();
    let p = w.properties();
    assert!(!p.size_bounded);
    assert!(!p.positive_type);
    assert!(!p.positive && !p.nonnegative);

    // -1 times the first row is positive.
    let w = WeightMatrix::new(vec![vec![-1, -1], vec![0, 1]]).unwrap();
    let p = w.properties();
    assert!(p.positive_type);
    assert!(p.size_bounded);
    assert!(!p.positive && !p.nonnegative);
}

#[test]
fn order_reverses_between_equivalent_matrices() {
    // 1 < xy under W, but xy < 1 under W' = diag(-1,1) * W.
    let w = WeightMatrix::new(vec![vec![1, 1], vec![0, 1]]).unwrap();
    let w2 = WeightMatrix::new(vec![vec![-1, -1], vec![0, 1]]).unwrap();
    let one = Monomial::one(2);
    let xy = m(&[1, 1]);
    assert_eq!(w.mono_cmp(&one, &xy), Ordering::Less);
    assert_eq!(w2.mono_cmp(&xy, &one), Ordering::Less);
}

#[test]
fn ties_break_by_reverse_lexicographic_rule() {
    let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
    // Both have degree (3,5); at the last differing exponent x1^2*x3 is larger,
    // so it is the smaller monomial.
    let a = m(&[1, 2, 0]);
    let b = m(&[2, 0, 1]);
    assert_eq!(w.mdeg(&a).unwrap(), w.mdeg(&b).unwrap());
    assert_eq!(w.mono_cmp(&b, &a), Ordering::Less);
    assert_eq!(w.mono_cmp(&a, &b), Ordering::Greater);
    assert_eq!(w.mono_cmp(&a, &a), Ordering::Equal);
}

fn small_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, n).prop_map(Monomial::new)
}

proptest! {
    #[test]
    fn grading_law_degree_of_product_is_sum(a in small_monomial(3), b in small_monomial(3)) {
        let w = WeightMatrix::new(vec![vec![1, 2, 3], vec![2, 1, 1]]).unwrap();
        let lhs = w.mdeg(&a.mul(&b)).unwrap();
        let rhs = w.mdeg(&a).unwrap().add(&w.mdeg(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn order_is_compatible_with_multiplication(
        a in small_monomial(3),
        b in small_monomial(3),
        mu in small_monomial(3),
    ) {
        let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
        let direct = w.mono_cmp(&a, &b);
        let shifted = w.mono_cmp(&a.mul(&mu), &b.mul(&mu));
        prop_assert_eq!(direct, shifted);
    }

    #[test]
    fn one_is_least_when_first_row_positive(a in small_monomial(3)) {
        let w = WeightMatrix::new(vec![vec![1, 2, 3], vec![2, 1, 1]]).unwrap();
        if !a.is_one() {
            prop_assert_eq!(w.mono_cmp(&Monomial::one(3), &a), Ordering::Less);
        }
    }

    #[test]
    fn order_is_total_and_antisymmetric(a in small_monomial(4), b in small_monomial(4)) {
        let w = WeightMatrix::new(vec![vec![1, 1, 2, 3], vec![2, 2, 1, 1]]).unwrap();
        let ab = w.mono_cmp(&a, &b);
        let ba = w.mono_cmp(&b, &a);
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }
}
