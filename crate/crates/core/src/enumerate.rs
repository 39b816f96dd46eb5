//! Enumeration of skew left braces up to isomorphism.
//!
//! A skew brace with additive group `A` is the same thing as a map
//! `λ: A → Aut(A)` with `λ_0 = id` and `λ_{x + λ_x(y)} = λ_x λ_y`; the
//! multiplication is then `x · y = x + λ_x(y)`. For each group `A` in the
//! catalog the search assigns `λ` one element at a time and closes the
//! partial assignment under that rule. Two braces on the same `A` are
//! isomorphic exactly when an automorphism of `A` carries one
//! multiplication to the other, so each `Aut(A)` orbit is kept once, as its
//! lexicographically least multiplication table.
//!
//! [`skew_braces_by_brute_force`] is an independent route for small orders:
//! every pair of labelled group tables, deduplicated by isomorphism search.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{catalog, group_automorphisms, labeled_group_tables, Group, CATALOG_MAX_ORDER};
use crate::iso::find_isomorphism;
use crate::skew::SkewBrace;
use crate::table::{compose, OpTable};
use crate::Elem;

struct LambdaSearch<'a> {
    add: &'a OpTable,
    autos: &'a [Vec<Elem>],
    product: Vec<Vec<usize>>,
    lam: Vec<Option<usize>>,
    order: Vec<Elem>,
    found: Vec<Vec<usize>>,
}

impl LambdaSearch<'_> {
    fn assign(&mut self, x: Elem, a: usize, trail: &mut Vec<Elem>) -> bool {
        let mut queue = vec![(x, a)];
        while let Some((x, a)) = queue.pop() {
            match self.lam[x] {
                Some(b) if b == a => continue,
                Some(_) => return false,
                None => {}
            }
            self.lam[x] = Some(a);
            self.order.push(x);
            trail.push(x);
            for i in 0..self.order.len() {
                let w = self.order[i];
                let b = self.lam[w].expect("ordered elements are assigned");
                // λ_{x + λ_x(w)} = λ_x λ_w and λ_{w + λ_w(x)} = λ_w λ_x.
                queue.push((self.add.get(x, self.autos[a][w]), self.product[a][b]));
                queue.push((self.add.get(w, self.autos[b][x]), self.product[b][a]));
            }
        }
        true
    }

    fn undo(&mut self, trail: &[Elem]) {
        for &x in trail {
            self.lam[x] = None;
            self.order.pop();
        }
    }

    fn run(&mut self) {
        let Some(x) = self.lam.iter().position(Option::is_none) else {
            self.found.push(self.lam.iter().map(|a| a.expect("complete")).collect());
            return;
        };
        for a in 0..self.autos.len() {
            let mut trail = Vec::new();
            if self.assign(x, a, &mut trail) {
                self.run();
            }
            self.undo(&trail);
        }
    }
}

/// Every multiplication making `(A, +, ·)` a skew brace on the carrier of
/// `a`, one per `Aut(A)` orbit, as row-major tables in lexicographic order.
fn multiplications_over(a: &Group) -> Vec<Vec<Elem>> {
    let n = a.n();
    let mut autos = group_automorphisms(a);
    autos.sort();
    let index: HashMap<Vec<Elem>, usize> = autos.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let product: Vec<Vec<usize>> = autos
        .iter()
        .map(|f| autos.iter().map(|g| index[&compose(f, g)]).collect())
        .collect();
    let id = index[&(0..n).collect::<Vec<_>>()];
    let mut search = LambdaSearch {
        add: &a.table,
        autos: &autos,
        product,
        lam: vec![None; n],
        order: Vec::new(),
        found: Vec::new(),
    };
    let mut trail = Vec::new();
    let ok = search.assign(a.identity, id, &mut trail);
    debug_assert!(ok);
    search.run();

    let tables: BTreeSet<Vec<Elem>> = search
        .found
        .iter()
        .map(|lam| {
            let mut t = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    t[x * n + y] = a.table.get(x, autos[lam[x]][y]);
                }
            }
            t
        })
        .collect();

    let mut reps = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for t in &tables {
        if seen.contains(t) {
            continue;
        }
        let orbit: Vec<Vec<Elem>> = autos.iter().map(|f| relabel_flat(t, n, f)).collect();
        reps.insert(orbit.iter().min().expect("orbit is non-empty").clone());
        seen.extend(orbit);
    }
    reps.into_iter().collect()
}

fn relabel_flat(t: &[Elem], n: usize, perm: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = perm[t[a * n + b]];
        }
    }
    out
}

/// One skew brace per isomorphism class of order `n`, in lexicographic
/// order of `(add table, mul table)`.
pub fn enumerate_skew_braces(n: usize) -> Result<Vec<SkewBrace>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > CATALOG_MAX_ORDER {
        return Err(Error::BoundExceeded {
            order: n,
            bound: CATALOG_MAX_ORDER,
        });
    }
    let groups = catalog(n);
    let mut out: Vec<SkewBrace> = groups
        .par_iter()
        .flat_map_iter(|a| {
            multiplications_over(a).into_iter().map(move |mul| {
                let mul = OpTable::from_flat(n, mul).expect("search stays in range");
                SkewBrace::from_tables(a.table.clone(), mul).expect("search yields skew braces")
            })
        })
        .collect();
    out.sort_by(|x, y| {
        (x.add_table().as_slice(), x.mul_table().as_slice()).cmp(&(y.add_table().as_slice(), y.mul_table().as_slice()))
    });
    Ok(out)
}

/// Independent enumeration: every pair of labelled group tables with
/// identity `0` satisfying the brace axiom, deduplicated by isomorphism
/// search. Exponential; intended for orders up to 6.
pub fn skew_braces_by_brute_force(n: usize) -> Vec<SkewBrace> {
    let tables = labeled_group_tables(n);
    let mut reps: Vec<SkewBrace> = Vec::new();
    for add in &tables {
        for mul in &tables {
            let Ok(g) = SkewBrace::from_tables(add.clone(), mul.clone()) else {
                continue;
            };
            let s = g.as_star_brace();
            if !reps.iter().any(|r| find_isomorphism(&r.as_star_brace(), &s).is_some()) {
                reps.push(g);
            }
        }
    }
    reps
}
