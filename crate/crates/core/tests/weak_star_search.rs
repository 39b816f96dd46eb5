//! Exhaustive search for weak left ⋆-braces that are not dual.

use starbrace::iso::find_isomorphism;
use starbrace::search::weak_star_braces;
use starbrace::star::{check_dual, check_weak_star_brace};
use starbrace::structure::StarBraceStructure;
use starbrace::table::{OpTable, UnaryTable};

/// Five elements with zero 0; the multiplicative reduct is the Brandt
/// semigroup on two indices (3 and 4 are the mutually inverse off-diagonal
/// elements) and negation is the identity.
fn non_dual_fixture() -> StarBraceStructure {
    let add = OpTable::from_flat(
        5,
        vec![0, 0, 0, 0, 0, 0, 1, 0, 0, 4, 0, 0, 2, 3, 0, 0, 0, 3, 2, 0, 0, 4, 0, 0, 1],
    )
    .unwrap();
    let mul = OpTable::from_flat(
        5,
        vec![0, 0, 0, 0, 0, 0, 1, 0, 0, 4, 0, 0, 2, 3, 0, 0, 3, 0, 0, 2, 0, 0, 4, 1, 0],
    )
    .unwrap();
    StarBraceStructure::new(
        add,
        UnaryTable::identity(5).unwrap(),
        mul,
        UnaryTable::new(5, vec![0, 1, 2, 4, 3]).unwrap(),
    )
    .unwrap()
}

#[test]
fn every_weak_star_brace_up_to_order_four_is_dual() {
    for n in 1..=4 {
        let all = weak_star_braces(n);
        assert!(!all.is_empty());
        assert!(all.iter().all(|s| check_dual(s).is_ok()), "order {n}");
    }
}

#[test]
fn fixture_is_weak_but_not_dual() {
    let s = non_dual_fixture();
    assert!(check_weak_star_brace(&s).is_ok());
    let w = check_dual(&s).unwrap_err();
    // 3 − 3 = 3 + 3 = 2 while 3⋆·3 = 4·3 = 1.
    assert_eq!(w.check, "dual");
    assert_eq!(w.inputs, vec![3]);
    assert_eq!(s.sub(3, 3), 2);
    assert_eq!(s.mul(s.star(3), 3), 1);
}

#[test]
fn order_five_non_dual_braces_form_one_class_containing_the_fixture() {
    let fixture = non_dual_fixture();
    let non_dual: Vec<StarBraceStructure> = weak_star_braces(5)
        .into_iter()
        .filter(|s| check_dual(s).is_err())
        .collect();
    assert!(!non_dual.is_empty());
    assert!(non_dual.iter().all(|s| find_isomorphism(&fixture, s).is_some()));
}
