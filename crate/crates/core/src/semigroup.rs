//! Green's relations and structural class predicates for finite regular
//! ⋆-semigroups.
//!
//! Every class predicate is computed two ways: by an identity in the
//! multiplication and involution (cheap, used for the report), and directly
//! from the definition (Green's relations, idempotent sets, local
//! submonoids). [`cross_check`] compares the two routes.

use std::collections::{BTreeSet, HashMap};

use crate::structure::StarSemigroup;
use crate::witness::{ensure_eq, for_all, NamedCheck, Verdict, Witness};
use crate::Elem;

/// `{e : ee = e}`.
pub fn idempotents(s: &StarSemigroup) -> BTreeSet<Elem> {
    (0..s.n()).filter(|&e| s.mul(e, e) == e).collect()
}

/// `{e : ee = e, e⋆ = e}`.
pub fn projections(s: &StarSemigroup) -> BTreeSet<Elem> {
    (0..s.n())
        .filter(|&e| s.mul(e, e) == e && s.star(e) == e)
        .collect()
}

/// Class labels for the four Green's relations (plus `H = L ∩ R`). Labels
/// are contiguous from 0 in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreensData {
    pub l_class: Vec<usize>,
    pub r_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub d_class: Vec<usize>,
    pub j_class: Vec<usize>,
}

impl GreensData {
    pub fn class_count(labels: &[usize]) -> usize {
        labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Members of each class, in increasing element order.
    pub fn classes(labels: &[usize]) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); Self::class_count(labels)];
        for (x, &c) in labels.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn class_sizes(labels: &[usize]) -> Vec<usize> {
        let mut out = vec![0; Self::class_count(labels)];
        for &c in labels {
            out[c] += 1;
        }
        out
    }
}

fn label_by_key<K: std::hash::Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    keys.into_iter()
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect()
}

/// Green's relations from the divisibility definitions: principal left,
/// right and two-sided ideals are compared as sets, and `D = L ∘ R`.
pub fn green_relations(s: &StarSemigroup) -> GreensData {
    let n = s.n();
    let left: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut set = vec![false; n];
            set[a] = true;
            for u in 0..n {
                set[s.mul(u, a)] = true;
            }
            set
        })
        .collect();
    let right: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut set = vec![false; n];
            set[a] = true;
            for u in 0..n {
                set[s.mul(a, u)] = true;
            }
            set
        })
        .collect();
    let two_sided: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut set = right[a].clone();
            for u in 0..n {
                for (x, &inside) in right[a].iter().enumerate() {
                    if inside {
                        set[s.mul(u, x)] = true;
                    }
                }
            }
            set
        })
        .collect();

    let l_class = label_by_key(left.iter());
    let r_class = label_by_key(right.iter());
    let j_class = label_by_key(two_sided.iter());
    let h_class = label_by_key((0..n).map(|x| (l_class[x], r_class[x])));

    // a D b iff some c has a L c and c R b: collect, per L-class, the set of
    // R-classes it meets.
    let mut r_of_l: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); GreensData::class_count(&l_class)];
    for x in 0..n {
        r_of_l[l_class[x]].insert(r_class[x]);
    }
    let d_class = label_by_key((0..n).map(|x| r_of_l[l_class[x]].clone()));

    GreensData {
        l_class,
        r_class,
        h_class,
        d_class,
        j_class,
    }
}

/// In a regular ⋆-semigroup `a R b ⟺ aa⋆ = bb⋆` and `a L b ⟺ a⋆a = b⋆b`.
pub fn check_green_star_characterization(s: &StarSemigroup, g: &GreensData) -> Verdict {
    for_all(s.n(), |[a, b]| {
        let by_star_r = s.mul(a, s.star(a)) == s.mul(b, s.star(b));
        let by_def_r = g.r_class[a] == g.r_class[b];
        if by_star_r != by_def_r {
            return Err(Witness::predicate(
                "r_class_by_projection",
                &[a, b],
                format!("aa* = bb* is {by_star_r} but a R b is {by_def_r}"),
            ));
        }
        let by_star_l = s.mul(s.star(a), a) == s.mul(s.star(b), b);
        let by_def_l = g.l_class[a] == g.l_class[b];
        if by_star_l != by_def_l {
            return Err(Witness::predicate(
                "l_class_by_projection",
                &[a, b],
                format!("a*a = b*b is {by_star_l} but a L b is {by_def_l}"),
            ));
        }
        Ok(())
    })
}

/// Flags for the structural classes, each computed by its identity
/// criterion where one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub is_regular_star: bool,
    pub is_inverse: bool,
    pub is_completely_simple: bool,
    pub is_locally_inverse: bool,
    pub is_orthodox: bool,
    pub is_completely_regular: bool,
    pub is_orthodox_and_locally_inverse: bool,
    /// One witness per false flag.
    pub witnesses: Vec<Witness>,
}

impl ClassReport {
    pub fn flags(&self) -> [(&'static str, bool); 7] {
        [
            ("regular_star", self.is_regular_star),
            ("inverse", self.is_inverse),
            ("completely_simple", self.is_completely_simple),
            ("locally_inverse", self.is_locally_inverse),
            ("orthodox", self.is_orthodox),
            ("completely_regular", self.is_completely_regular),
            ("orthodox_and_locally_inverse", self.is_orthodox_and_locally_inverse),
        ]
    }
}

// ---- identity criteria -------------------------------------------------

/// Inverse iff every idempotent is a projection.
pub fn inverse_by_identity(s: &StarSemigroup) -> Verdict {
    for e in idempotents(s) {
        if s.star(e) != e {
            return Err(Witness::mismatch("inverse", &[e], e, s.star(e)));
        }
    }
    Ok(())
}

/// Completely simple iff `xx⋆ = x y y⋆ x⋆` for all `x, y`.
pub fn completely_simple_by_identity(s: &StarSemigroup) -> Verdict {
    for_all(s.n(), |[x, y]| {
        let xs = s.star(x);
        let rhs = s.mul(s.mul(s.mul(x, y), s.star(y)), xs);
        ensure_eq("completely_simple", &[x, y], s.mul(x, xs), rhs)
    })
}

/// Locally inverse iff the projections `x y y⋆ x⋆` and `x z z⋆ x⋆` commute
/// for all `x, y, z`.
pub fn locally_inverse_by_identity(s: &StarSemigroup) -> Verdict {
    let n = s.n();
    let conj: Vec<Elem> = (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            s.mul(s.mul(s.mul(x, y), s.star(y)), s.star(x))
        })
        .collect();
    for_all(n, |[x, y, z]| {
        let p = conj[x * n + y];
        let q = conj[x * n + z];
        ensure_eq("locally_inverse", &[x, y, z], s.mul(q, p), s.mul(p, q))
    })
}

/// Orthodox and locally inverse iff `afgb = agfb` for all `a, b` and
/// projections `f, g`.
pub fn orthodox_locally_inverse_by_identity(s: &StarSemigroup) -> Verdict {
    let p: Vec<Elem> = projections(s).into_iter().collect();
    for a in 0..s.n() {
        for b in 0..s.n() {
            for &f in &p {
                for &g in &p {
                    let lhs = s.mul(s.mul(s.mul(a, f), g), b);
                    let rhs = s.mul(s.mul(s.mul(a, g), f), b);
                    ensure_eq("orthodox_and_locally_inverse", &[a, b, f, g], rhs, lhs)?;
                }
            }
        }
    }
    Ok(())
}

/// Completely regular, orthodox and locally inverse iff `xy = x y⋆ y y`.
pub fn cr_orthodox_locally_inverse_by_identity(s: &StarSemigroup) -> Verdict {
    for_all(s.n(), |[x, y]| {
        let rhs = s.mul(s.mul(s.mul(x, s.star(y)), y), y);
        ensure_eq("cr_orthodox_locally_inverse", &[x, y], s.mul(x, y), rhs)
    })
}

// ---- definition-based routes -------------------------------------------

/// Every element has exactly one `b` with `aba = a` and `bab = b`.
pub fn inverse_by_definition(s: &StarSemigroup) -> Verdict {
    let all: Vec<Elem> = (0..s.n()).collect();
    unique_inverses_within(s, &all, "inverse_definition", &[])
}

fn unique_inverses_within(s: &StarSemigroup, elems: &[Elem], check: &str, ctx: &[Elem]) -> Verdict {
    for &a in elems {
        let count = elems
            .iter()
            .filter(|&&b| s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b)
            .count();
        if count != 1 {
            let mut inputs = ctx.to_vec();
            inputs.push(a);
            return Err(Witness::predicate(
                check,
                &inputs,
                format!("{count} inverses instead of exactly one"),
            ));
        }
    }
    Ok(())
}

/// `x H x²` for every `x`.
pub fn completely_regular_by_definition(s: &StarSemigroup, g: &GreensData) -> Verdict {
    for x in 0..s.n() {
        let sq = s.mul(x, x);
        if g.h_class[x] != g.h_class[sq] {
            return Err(Witness::predicate(
                "completely_regular",
                &[x],
                "x is not H-related to its square",
            ));
        }
    }
    Ok(())
}

/// A single J-class.
pub fn simple_by_definition(g: &GreensData) -> Verdict {
    match g.j_class.iter().position(|&c| c != 0) {
        Some(x) => Err(Witness::predicate(
            "simple",
            &[0, x],
            "elements lie in different J-classes",
        )),
        None => Ok(()),
    }
}

/// Idempotents closed under the product.
pub fn orthodox_by_definition(s: &StarSemigroup) -> Verdict {
    let e: Vec<Elem> = idempotents(s).into_iter().collect();
    for &a in &e {
        for &b in &e {
            let p = s.mul(a, b);
            if s.mul(p, p) != p {
                return Err(Witness::predicate(
                    "orthodox",
                    &[a, b],
                    "product of idempotents is not idempotent",
                ));
            }
        }
    }
    Ok(())
}

/// `eSe` is an inverse semigroup for every idempotent `e`.
pub fn locally_inverse_by_definition(s: &StarSemigroup) -> Verdict {
    for e in idempotents(s) {
        let local: BTreeSet<Elem> = (0..s.n()).map(|x| s.mul(s.mul(e, x), e)).collect();
        let local: Vec<Elem> = local.into_iter().collect();
        unique_inverses_within(s, &local, "locally_inverse_definition", &[e])?;
    }
    Ok(())
}

fn both(a: Verdict, b: Verdict) -> Verdict {
    a.and(b)
}

/// Runs every criterion, even after failures, and collects one witness per
/// false flag. If the regular ⋆ axioms fail, only that flag is reported.
pub fn classify(s: &StarSemigroup) -> ClassReport {
    if let Err(w) = s.check_regular_star() {
        return ClassReport {
            is_regular_star: false,
            is_inverse: false,
            is_completely_simple: false,
            is_locally_inverse: false,
            is_orthodox: false,
            is_completely_regular: false,
            is_orthodox_and_locally_inverse: false,
            witnesses: vec![w],
        };
    }
    let g = green_relations(s);
    let mut witnesses = Vec::new();
    let mut flag = |v: Verdict| match v {
        Ok(()) => true,
        Err(w) => {
            witnesses.push(w);
            false
        }
    };
    let is_inverse = flag(inverse_by_identity(s));
    let is_completely_simple = flag(completely_simple_by_identity(s));
    let is_locally_inverse = flag(locally_inverse_by_identity(s));
    let is_orthodox = flag(orthodox_by_definition(s));
    let is_completely_regular = flag(completely_regular_by_definition(s, &g));
    let is_orthodox_and_locally_inverse = flag(orthodox_locally_inverse_by_identity(s));
    ClassReport {
        is_regular_star: true,
        is_inverse,
        is_completely_simple,
        is_locally_inverse,
        is_orthodox,
        is_completely_regular,
        is_orthodox_and_locally_inverse,
        witnesses,
    }
}

/// One criterion evaluated by its identity and by its definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionAgreement {
    pub criterion: &'static str,
    pub by_identity: bool,
    pub by_definition: bool,
}

impl CriterionAgreement {
    pub fn agrees(&self) -> bool {
        self.by_identity == self.by_definition
    }
}

/// Identity-based versus definition-based evaluation of the inverse,
/// completely simple, locally inverse, orthodox+locally inverse and
/// completely regular+orthodox+locally inverse classes. Requires the
/// regular ⋆ axioms; returns an empty list otherwise.
pub fn cross_check(s: &StarSemigroup) -> Vec<CriterionAgreement> {
    if s.check_regular_star().is_err() {
        return Vec::new();
    }
    let g = green_relations(s);
    let cr = completely_regular_by_definition(s, &g);
    let orth = orthodox_by_definition(s);
    let li = locally_inverse_by_definition(s);
    let row = |criterion, identity: Verdict, definition: Verdict| CriterionAgreement {
        criterion,
        by_identity: identity.is_ok(),
        by_definition: definition.is_ok(),
    };
    vec![
        row("inverse", inverse_by_identity(s), inverse_by_definition(s)),
        row(
            "completely_simple",
            completely_simple_by_identity(s),
            both(simple_by_definition(&g), cr.clone()),
        ),
        row("locally_inverse", locally_inverse_by_identity(s), li.clone()),
        row(
            "orthodox_and_locally_inverse",
            orthodox_locally_inverse_by_identity(s),
            both(orth.clone(), li.clone()),
        ),
        row(
            "cr_orthodox_locally_inverse",
            cr_orthodox_locally_inverse_by_identity(s),
            both(cr, both(orth, li)),
        ),
    ]
}

/// Structural facts every regular ⋆-semigroup must satisfy: the projection
/// set descriptions, `E = P²`, the Green's characterisation, the
/// conjugation closures `aea⋆, fef ∈ P` with `a D a⋆`, and, when the
/// semigroup is completely simple and orthodox, `afgb = ab`, `fgf = f`.
pub fn regular_star_invariants(s: &StarSemigroup) -> Vec<NamedCheck> {
    let n = s.n();
    let p = projections(s);
    let e = idempotents(s);
    let g = green_relations(s);
    let mut out = Vec::new();

    let from_right: BTreeSet<Elem> = (0..n).map(|x| s.mul(x, s.star(x))).collect();
    let from_left: BTreeSet<Elem> = (0..n).map(|x| s.mul(s.star(x), x)).collect();
    let sets = if from_right != p {
        Err(Witness::predicate("projection_sets", &[], "{xx*} differs from P"))
    } else if from_left != p {
        Err(Witness::predicate("projection_sets", &[], "{x*x} differs from P"))
    } else {
        Ok(())
    };
    out.push(NamedCheck::new("projection_sets", sets));

    let squares: BTreeSet<Elem> = p
        .iter()
        .flat_map(|&a| p.iter().map(move |&b| (a, b)))
        .map(|(a, b)| s.mul(a, b))
        .collect();
    let eq = if squares == e {
        Ok(())
    } else {
        Err(Witness::predicate("idempotents_are_projection_products", &[], "E differs from P^2"))
    };
    out.push(NamedCheck::new("idempotents_are_projection_products", eq));

    out.push(NamedCheck::new(
        "green_by_projections",
        check_green_star_characterization(s, &g),
    ));

    let conj = (|| {
        for a in 0..n {
            for &f in &p {
                let c = s.mul(s.mul(a, f), s.star(a));
                if !p.contains(&c) {
                    return Err(Witness::predicate(
                        "projection_conjugation",
                        &[a, f],
                        "a e a* is not a projection",
                    ));
                }
                for &h in &p {
                    let c = s.mul(s.mul(h, f), h);
                    if !p.contains(&c) {
                        return Err(Witness::predicate(
                            "projection_conjugation",
                            &[h, f],
                            "f e f is not a projection",
                        ));
                    }
                }
            }
            if g.d_class[a] != g.d_class[s.star(a)] {
                return Err(Witness::predicate(
                    "projection_conjugation",
                    &[a],
                    "a is not D-related to a*",
                ));
            }
        }
        Ok(())
    })();
    out.push(NamedCheck::new("projection_conjugation", conj));

    if completely_simple_by_identity(s).is_ok() && orthodox_by_definition(s).is_ok() {
        let absorb = (|| {
            for a in 0..n {
                for b in 0..n {
                    for &f in &p {
                        for &h in &p {
                            let lhs = s.mul(s.mul(s.mul(a, f), h), b);
                            ensure_eq("projection_absorption", &[a, b, f, h], s.mul(a, b), lhs)?;
                        }
                    }
                }
            }
            for &f in &p {
                for &h in &p {
                    ensure_eq("projection_absorption", &[f, h], f, s.mul(s.mul(f, h), f))?;
                }
            }
            Ok(())
        })();
        out.push(NamedCheck::new("projection_absorption", absorb));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{OpTable, UnaryTable};

    fn z2() -> StarSemigroup {
        StarSemigroup::new(
            OpTable::from_fn(2, |a, b| a ^ b).unwrap(),
            UnaryTable::identity(2).unwrap(),
        )
        .unwrap()
    }

    /// Rectangular band on I×I with I={0,1}, element (i,j) encoded 2i+j,
    /// (i,j)(k,l)=(i,l), (i,j)⋆=(j,i).
    fn rb2() -> StarSemigroup {
        StarSemigroup::new(
            OpTable::from_fn(4, |a, b| (a / 2) * 2 + b % 2).unwrap(),
            UnaryTable::from_fn(4, |a| (a % 2) * 2 + a / 2).unwrap(),
        )
        .unwrap()
    }

    fn min2() -> StarSemigroup {
        StarSemigroup::new(
            OpTable::from_fn(2, |a, b| a.min(b)).unwrap(),
            UnaryTable::identity(2).unwrap(),
        )
        .unwrap()
    }

    fn trivial() -> StarSemigroup {
        StarSemigroup::new(OpTable::new(1, &[vec![0]]).unwrap(), UnaryTable::identity(1).unwrap())
            .unwrap()
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(idempotents(&z2()), BTreeSet::from([0]));
        assert_eq!(idempotents(&rb2()), BTreeSet::from([0, 1, 2, 3]));
        assert_eq!(idempotents(&trivial()), BTreeSet::from([0]));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(projections(&z2()), BTreeSet::from([0]));
        // (0,0) = 0 and (1,1) = 3.
        assert_eq!(projections(&rb2()), BTreeSet::from([0, 3]));
        let p: Vec<_> = projections(&rb2()).into_iter().collect();
        let products: BTreeSet<_> = p
            .iter()
            .flat_map(|&a| p.iter().map(move |&b| (a, b)))
            .map(|(a, b)| rb2().mul(a, b))
            .collect();
        assert_eq!(products, idempotents(&rb2()));
    }

    #[test]
    fn green_examples() {
        let g = green_relations(&z2());
        assert_eq!(g.d_class, vec![0, 0]);
        assert_eq!(g.j_class, vec![0, 0]);
        assert_eq!(g.l_class, vec![0, 0]);

        // RB2: L-classes by second coordinate, R-classes by first.
        let g = green_relations(&rb2());
        assert_eq!(g.l_class, vec![0, 1, 0, 1]);
        assert_eq!(g.r_class, vec![0, 0, 1, 1]);
        assert_eq!(g.d_class, vec![0, 0, 0, 0]);
        assert_eq!(g.j_class, vec![0, 0, 0, 0]);

        let g = green_relations(&min2());
        assert_eq!(g.l_class, vec![0, 1]);
        assert_eq!(g.r_class, vec![0, 1]);
        assert_eq!(g.d_class, vec![0, 1]);
        assert_eq!(g.j_class, vec![0, 1]);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&z2());
        assert!(r.flags().iter().all(|&(_, f)| f));
        assert!(r.witnesses.is_empty());

        let r = classify(&rb2());
        assert!(r.is_completely_simple && r.is_orthodox && !r.is_inverse);
        assert_eq!(r.witnesses.len(), 1);

        let r = classify(&min2());
        assert!(r.is_inverse && !r.is_completely_simple);
        let w = r.witnesses.iter().find(|w| w.check == "completely_simple").unwrap();
        assert_eq!(w.inputs, vec![1, 0]);
    }

    #[test]
    fn classify_reports_only_axiom_failure() {
        let s = StarSemigroup::new(
            OpTable::from_fn(2, |a, b| a ^ b).unwrap(),
            UnaryTable::new(2, vec![1, 0]).unwrap(),
        )
        .unwrap();
        let r = classify(&s);
        assert!(!r.is_regular_star);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn routes_agree_on_small_examples() {
        for s in [z2(), rb2(), min2(), trivial()] {
            for row in cross_check(&s) {
                assert!(row.agrees(), "{row:?}");
            }
            for c in regular_star_invariants(&s) {
                assert!(c.passed(), "{c:?}");
            }
        }
    }
}
