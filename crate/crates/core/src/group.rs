//! Finite groups given by Cayley tables, and the catalog of groups up to
//! order 8 obtained by exhaustive table search.

use crate::iso::{search_isomorphisms, SearchSide};
use crate::table::{OpTable, UnaryTable};
use crate::witness::{ensure_eq, for_all, Verdict, Witness};
use crate::{group_search, Elem};

/// Largest order the catalog covers.
pub const CATALOG_MAX_ORDER: usize = 8;

/// A group table with its identity and inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub table: OpTable,
    pub identity: Elem,
    pub inverse: UnaryTable,
}

impl Group {
    /// Recognises `op` as a group, deriving identity and inverses.
    pub fn from_table(op: OpTable) -> Option<Group> {
        op.is_associative().ok()?;
        let e = op.identity()?;
        let n = op.n();
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            inv.push((0..n).find(|&y| op.get(x, y) == e && op.get(y, x) == e)?);
        }
        Some(Group {
            inverse: UnaryTable::new(n, inv).expect("inverses are in range"),
            identity: e,
            table: op,
        })
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }
}

/// Checks the group axioms for a table with a declared identity and
/// inversion. `name` prefixes the witness labels (`add`, `mul`).
pub fn check_group(op: &OpTable, identity: Elem, inverse: &UnaryTable, name: &str) -> Verdict {
    op.is_associative()
        .map_err(|w| w.renamed(format!("{name}_associativity")))?;
    let id_check = format!("{name}_identity");
    for_all(op.n(), |[x]| {
        ensure_eq(&id_check, &[x], x, op.get(identity, x))?;
        ensure_eq(&id_check, &[x], x, op.get(x, identity))
    })?;
    let inv_check = format!("{name}_inverse");
    for_all(op.n(), |[x]| {
        ensure_eq(&inv_check, &[x], identity, op.get(x, inverse.get(x)))?;
        ensure_eq(&inv_check, &[x], identity, op.get(inverse.get(x), x))
    })
}

fn group_side(g: &Group) -> SearchSide<'_> {
    let invariants = (0..g.n())
        .map(|x| {
            // Element order.
            let mut k = 1;
            let mut cur = x;
            while cur != g.identity {
                cur = g.table.get(cur, x);
                k += 1;
            }
            vec![k]
        })
        .collect();
    SearchSide {
        bins: vec![&g.table],
        uns: vec![&g.inverse],
        invariants,
    }
}

/// Every automorphism of `g`, as permutations of the carrier.
pub fn group_automorphisms(g: &Group) -> Vec<Vec<Elem>> {
    let side = group_side(g);
    search_isomorphisms(&side, &side, usize::MAX)
}

pub fn groups_isomorphic(a: &Group, b: &Group) -> bool {
    !search_isomorphisms(&group_side(a), &group_side(b), 1).is_empty()
}

/// Every group table on `{0, …, n-1}` with identity `0`, in lexicographic
/// order.
pub fn labeled_group_tables(n: usize) -> Vec<OpTable> {
    group_search::labeled_group_tables(n)
        .into_iter()
        .map(|t| OpTable::from_flat(n, t).expect("search yields complete tables"))
        .collect()
}

/// One group per isomorphism class of order `n`, found at run time by
/// searching all labelled tables and deduplicating with the isomorphism
/// search. Independent of the build-time catalog.
pub fn groups_of_order(n: usize) -> Vec<Group> {
    let mut reps: Vec<Group> = Vec::new();
    for table in labeled_group_tables(n) {
        let g = Group::from_table(table).expect("search yields groups");
        if !reps.iter().any(|r| groups_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

mod generated {
    include!(concat!(env!("OUT_DIR"), "/group_catalog.rs"));
}

/// The build-time catalog: one group per isomorphism class of order `n`
/// (`1 ≤ n ≤ 8`), identity `0`, least labelled table of its class, in
/// lexicographic order.
pub fn catalog(n: usize) -> Vec<Group> {
    assert!(
        (1..=CATALOG_MAX_ORDER).contains(&n),
        "catalog covers orders 1..=8"
    );
    generated::GROUP_CATALOG[n - 1]
        .iter()
        .map(|t| {
            let table = OpTable::from_flat(n, t.to_vec()).expect("catalog tables are valid");
            Group::from_table(table).expect("catalog tables are groups")
        })
        .collect()
}

/// Witness-producing group recognition used by callers that need a reason.
pub fn require_group(op: &OpTable, name: &str) -> Result<Group, Witness> {
    Group::from_table(op.clone())
        .ok_or_else(|| Witness::predicate(format!("{name}_group"), &[], "table is not a group"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts_small_orders() {
        // (n-1)!/|Aut G| summed over classes: Z4 gives 3, Z2×Z2 gives 1.
        let counts: Vec<usize> = (1..=6).map(|n| labeled_group_tables(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 6, 80]);
    }

    #[test]
    fn catalog_class_counts() {
        let counts: Vec<usize> = (1..=CATALOG_MAX_ORDER).map(|n| catalog(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5]);
        for n in 1..=CATALOG_MAX_ORDER {
            for g in catalog(n) {
                assert_eq!(g.identity, 0);
                assert!(check_group(&g.table, 0, &g.inverse, "g").is_ok());
            }
        }
    }

    #[test]
    fn catalog_agrees_with_runtime_search() {
        for n in 1..=7 {
            let runtime = groups_of_order(n);
            let built = catalog(n);
            assert_eq!(runtime.len(), built.len());
            for g in &built {
                assert_eq!(runtime.iter().filter(|r| groups_isomorphic(r, g)).count(), 1);
            }
        }
    }

    #[test]
    fn automorphism_group_orders() {
        let z4 = &catalog(4)[0];
        let v4 = &catalog(4)[1];
        let mut orders = vec![group_automorphisms(z4).len(), group_automorphisms(v4).len()];
        orders.sort();
        assert_eq!(orders, vec![2, 6]);
        let mut eight: Vec<usize> = catalog(8).iter().map(|g| group_automorphisms(g).len()).collect();
        eight.sort();
        // Z8, Z4×Z2 and D4 have 4, 8, 8 automorphisms; Q8 has 24; Z2³ has 168.
        assert_eq!(eight, vec![4, 8, 8, 24, 168]);
    }

    #[test]
    fn check_group_names_failures() {
        let z4 = OpTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        let inv = UnaryTable::from_fn(4, |a| (4 - a) % 4).unwrap();
        assert!(check_group(&z4, 0, &inv, "add").is_ok());
        let w = check_group(&z4, 1, &inv, "add").unwrap_err();
        assert_eq!(w.check, "add_identity");
    }
}
