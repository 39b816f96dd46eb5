//! Weak and dual weak left ⋆-braces.
//!
//! A weak left ⋆-brace is a carrier with two regular ⋆-semigroup
//! structures `(S, +, −)` and `(S, ·, ⋆)` such that
//! `x(y + z) = xy − x + xz` and `−x + x = xx⋆`. It is dual when moreover
//! `x − x = x⋆x`.

use std::collections::BTreeSet;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::semigroup::{
    completely_regular_by_definition, completely_simple_by_identity, green_relations,
    locally_inverse_by_definition, orthodox_by_definition, projections,
};
use crate::structure::{StarBraceStructure, StarSemigroup};
use crate::witness::{ensure_eq, for_all, NamedCheck, Verdict, Witness};
use crate::Elem;

/// Both reducts regular ⋆-semigroups, left distributivity, and
/// `−x + x = xx⋆`.
pub fn check_weak_star_brace(s: &StarBraceStructure) -> Verdict {
    s.additive()
        .check_regular_star()
        .map_err(|w| {
            let name = format!("add_{}", w.check);
            w.renamed(name)
        })?;
    s.multiplicative()
        .check_regular_star()
        .map_err(|w| {
            let name = format!("mul_{}", w.check);
            w.renamed(name)
        })?;
    for_all(s.n(), |[x, y, z]| {
        let lhs = s.mul(x, s.add(y, z));
        let rhs = s.add(s.sub(s.mul(x, y), x), s.mul(x, z));
        ensure_eq("left_distributivity", &[x, y, z], rhs, lhs)
    })?;
    for_all(s.n(), |[x]| {
        ensure_eq("negation_projection", &[x], s.mul(x, s.star(x)), s.add(s.neg(x), x))
    })
}

fn classes_of(s: &StarSemigroup, prefix: &str, with_cr: bool) -> Verdict {
    let rename = |w: Witness, what: &str| w.renamed(format!("{prefix}_{what}"));
    if with_cr {
        completely_regular_by_definition(s, &green_relations(s)).map_err(|w| rename(w, "completely_regular"))?;
    }
    orthodox_by_definition(s).map_err(|w| rename(w, "orthodox"))?;
    locally_inverse_by_definition(s).map_err(|w| rename(w, "locally_inverse"))
}

/// The weak axioms, `x − x = x⋆x`, and the consequences every dual weak
/// ⋆-brace must have: `(S, ·, ⋆)` completely regular, orthodox and locally
/// inverse, and `xe = e + x` for every projection `e`.
pub fn check_dual(s: &StarBraceStructure) -> Verdict {
    check_weak_star_brace(s)?;
    for_all(s.n(), |[x]| {
        ensure_eq("dual", &[x], s.mul(s.star(x), x), s.sub(x, x))
    })?;
    let mul = s.multiplicative();
    classes_of(&mul, "dual_mul", true)?;
    for e in projections(&mul) {
        for x in 0..s.n() {
            ensure_eq("projection_commutation", &[x, e], s.add(e, x), s.mul(x, e))?;
        }
    }
    Ok(())
}

/// A structure that passed [`check_dual`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualWeakStarBrace(StarBraceStructure);

impl DualWeakStarBrace {
    pub fn new(s: StarBraceStructure) -> Result<Self> {
        check_dual(&s).map_err(Error::NotDual)?;
        Ok(DualWeakStarBrace(s))
    }

    pub fn structure(&self) -> &StarBraceStructure {
        &self.0
    }

    pub fn into_inner(self) -> StarBraceStructure {
        self.0
    }

    /// `P(S)`, shared by both reducts.
    pub fn projections(&self) -> BTreeSet<Elem> {
        projections(&self.0.multiplicative())
    }
}

impl Deref for DualWeakStarBrace {
    type Target = StarBraceStructure;

    fn deref(&self) -> &StarBraceStructure {
        &self.0
    }
}

/// Square: the multiplicative reduct is completely simple.
pub fn square_verdict(s: &StarBraceStructure) -> Verdict {
    completely_simple_by_identity(&s.multiplicative())
}

pub fn is_square(s: &StarBraceStructure) -> bool {
    square_verdict(s).is_ok()
}

fn set_check(name: &str, sets: &[(&str, BTreeSet<Elem>)]) -> Verdict {
    let (first_name, first) = &sets[0];
    for (other_name, other) in &sets[1..] {
        if other != first {
            return Err(Witness::predicate(
                name,
                &[],
                format!("{{{first_name}}} differs from {{{other_name}}}"),
            ));
        }
    }
    Ok(())
}

/// Identities that hold in every weak left ⋆-brace, each scanned over all
/// elements (and all projections where one is involved).
pub fn weak_star_identities(s: &StarBraceStructure) -> Vec<NamedCheck> {
    let n = s.n();
    let add = s.additive();
    let mul = s.multiplicative();
    let p_add = projections(&add);
    let p_mul = projections(&mul);
    let mut out = Vec::new();

    out.push(NamedCheck::new(
        "projection_coincidence",
        set_check(
            "projection_coincidence",
            &[
                ("P(S,+)", p_add.clone()),
                ("x-x", (0..n).map(|x| s.sub(x, x)).collect()),
                ("-x+x", (0..n).map(|x| s.add(s.neg(x), x)).collect()),
                ("xx*", (0..n).map(|x| s.mul(x, s.star(x))).collect()),
                ("x*x", (0..n).map(|x| s.mul(s.star(x), x)).collect()),
                ("P(S,.)", p_mul.clone()),
            ],
        ),
    ));

    out.push(NamedCheck::new(
        "star_laws",
        for_all(n, |[a, b]| {
            let st = |x| s.star(x);
            ensure_eq("star_involution", &[a], a, st(st(a)))?;
            ensure_eq("star_regularity", &[a], a, s.mul3(a, st(a), a))?;
            ensure_eq("star_anti_automorphism", &[a, b], s.mul(st(b), st(a)), st(s.mul(a, b)))?;
            ensure_eq("star_regularity_dual", &[a], st(a), s.mul3(st(a), a, st(a)))
        }),
    ));

    out.push(NamedCheck::new(
        "negation_laws",
        for_all(n, |[a, b]| {
            ensure_eq("negation_involution", &[a], a, s.neg(s.neg(a)))?;
            ensure_eq("negation_regularity", &[a], a, s.add(s.sub(a, a), a))?;
            ensure_eq(
                "negation_anti_automorphism",
                &[a, b],
                s.sub(s.neg(b), a),
                s.neg(s.add(a, b)),
            )?;
            ensure_eq("negation_regularity_dual", &[a], s.neg(a), s.sub(s.add(s.neg(a), a), a))
        }),
    ));

    out.push(NamedCheck::new(
        "projection_laws",
        p_mul.iter().try_for_each(|&e| {
            let values = [
                ("projection_star", s.star(e)),
                ("projection_negation", s.neg(e)),
                ("projection_square", s.mul(e, e)),
                ("projection_double", s.add(e, e)),
                ("projection_difference", s.sub(e, e)),
                ("projection_star_right", s.mul(e, s.star(e))),
                ("projection_star_left", s.mul(s.star(e), e)),
                ("projection_negation_left", s.add(s.neg(e), e)),
            ];
            values.iter().try_for_each(|&(name, v)| ensure_eq(name, &[e], e, v))
        }),
    ));

    out.push(NamedCheck::new(
        "mixed_laws",
        for_all(n, |[x, y]| {
            for &e in &p_mul {
                let xe = s.mul(x, e);
                ensure_eq("negation_absorbs_projection", &[x, e], s.add(s.neg(xe), x), s.add(s.neg(x), xe))?;
                ensure_eq("projection_left_action", &[x, e], s.add(x, e), s.mul(e, x))?;
                ensure_eq(
                    "projection_sum_insertion",
                    &[x, y, e],
                    s.add(s.add(s.add(e, x), e), y),
                    s.add(s.add(e, x), y),
                )?;
            }
            ensure_eq("difference_insertion", &[x, y], s.mul(x, y), s.mul3(x, s.sub(y, y), y))
        }),
    ));

    out.push(NamedCheck::new("additive_classes", classes_of(&add, "add", true)));
    out.push(NamedCheck::new("multiplicative_classes", classes_of(&mul, "mul", false)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{OpTable, UnaryTable};

    fn b2() -> StarBraceStructure {
        let xor = OpTable::from_fn(2, |a, b| a ^ b).unwrap();
        let id = UnaryTable::identity(2).unwrap();
        StarBraceStructure::new(xor.clone(), id.clone(), xor, id).unwrap()
    }

    fn min2() -> StarBraceStructure {
        let min = OpTable::from_fn(2, |a, b| a.min(b)).unwrap();
        let id = UnaryTable::identity(2).unwrap();
        StarBraceStructure::new(min.clone(), id.clone(), min, id).unwrap()
    }

    fn rb2() -> StarBraceStructure {
        let mul = OpTable::from_fn(4, |a, b| (a / 2) * 2 + b % 2).unwrap();
        let add = OpTable::from_fn(4, |a, b| (b / 2) * 2 + a % 2).unwrap();
        let swap = UnaryTable::from_fn(4, |a| (a % 2) * 2 + a / 2).unwrap();
        StarBraceStructure::new(add, swap.clone(), mul, swap).unwrap()
    }

    #[test]
    fn weak_examples() {
        assert!(check_weak_star_brace(&b2()).is_ok());
        assert!(check_weak_star_brace(&min2()).is_ok());
        let xor = OpTable::from_fn(2, |a, b| a ^ b).unwrap();
        let swap = UnaryTable::new(2, vec![1, 0]).unwrap();
        let bad = StarBraceStructure::new(xor.clone(), UnaryTable::identity(2).unwrap(), xor, swap).unwrap();
        let w = check_weak_star_brace(&bad).unwrap_err();
        assert_eq!(w.check, "mul_regularity");
    }

    #[test]
    fn dual_examples() {
        for s in [b2(), min2(), rb2(), StarBraceStructure::trivial()] {
            assert!(check_dual(&s).is_ok());
            assert!(weak_star_identities(&s).iter().all(NamedCheck::passed));
        }
    }

    #[test]
    fn square_examples() {
        assert!(is_square(&b2()));
        assert!(is_square(&rb2()));
        assert!(!is_square(&min2()));
    }

    #[test]
    fn not_dual_is_an_error() {
        let xor = OpTable::from_fn(2, |a, b| a ^ b).unwrap();
        let swap = UnaryTable::new(2, vec![1, 0]).unwrap();
        let bad = StarBraceStructure::new(xor.clone(), UnaryTable::identity(2).unwrap(), xor, swap).unwrap();
        assert!(matches!(DualWeakStarBrace::new(bad), Err(Error::NotDual(_))));
    }
}
