//! Structure-preserving maps: homomorphism checks and exhaustive
//! isomorphism search.
//!
//! The search assigns images one element at a time and closes the partial
//! map under every operation before branching again, so a single choice of
//! generator images fixes most of the map. Candidates are pruned by
//! per-element invariants (idempotency, projection membership, cyclic
//! index/period under each operation, Green's class sizes), which are
//! preserved by every isomorphism and therefore never cut a solution.

use crate::error::{Error, Result};
use crate::semigroup::{green_relations, GreensData};
use crate::structure::{StarBraceStructure, StarSemigroup};
use crate::table::{ElementMap, OpTable, UnaryTable};
use crate::witness::{ensure_eq, Verdict, Witness};
use crate::Elem;

/// Checks that `f` preserves `+`, `·`, `−` and `⋆`.
pub fn check_homomorphism(
    f: &ElementMap,
    a: &StarBraceStructure,
    b: &StarBraceStructure,
) -> Result<Verdict> {
    if f.dom_n() != a.n() {
        return Err(Error::SizeMismatch {
            left: f.dom_n(),
            right: a.n(),
        });
    }
    if f.cod_n() != b.n() {
        return Err(Error::SizeMismatch {
            left: f.cod_n(),
            right: b.n(),
        });
    }
    Ok(homomorphism_verdict(f.as_slice(), a, b))
}

fn homomorphism_verdict(f: &[Elem], a: &StarBraceStructure, b: &StarBraceStructure) -> Verdict {
    let n = a.n();
    for x in 0..n {
        for y in 0..n {
            ensure_eq("hom_add", &[x, y], b.add(f[x], f[y]), f[a.add(x, y)])?;
            ensure_eq("hom_mul", &[x, y], b.mul(f[x], f[y]), f[a.mul(x, y)])?;
        }
    }
    for x in 0..n {
        ensure_eq("hom_neg", &[x], b.neg(f[x]), f[a.neg(x)])?;
        ensure_eq("hom_star", &[x], b.star(f[x]), f[a.star(x)])?;
    }
    Ok(())
}

/// Operations and invariants of one side of an isomorphism problem.
pub(crate) struct SearchSide<'a> {
    pub bins: Vec<&'a OpTable>,
    pub uns: Vec<&'a UnaryTable>,
    pub invariants: Vec<Vec<u64>>,
}

impl SearchSide<'_> {
    fn n(&self) -> usize {
        self.invariants.len()
    }
}

/// Index and period of the cyclic subsemigroup generated by `x`.
fn cyclic_profile(op: &OpTable, x: Elem) -> (u64, u64) {
    let mut seen = vec![usize::MAX; op.n()];
    let mut cur = x;
    let mut k = 0;
    while seen[cur] == usize::MAX {
        seen[cur] = k;
        cur = op.get(cur, x);
        k += 1;
    }
    (seen[cur] as u64, (k - seen[cur]) as u64)
}

fn semigroup_invariants(s: &StarSemigroup, out: &mut [Vec<u64>]) {
    let g: GreensData = green_relations(s);
    let ls = GreensData::class_sizes(&g.l_class);
    let rs = GreensData::class_sizes(&g.r_class);
    let ds = GreensData::class_sizes(&g.d_class);
    for (x, inv) in out.iter_mut().enumerate() {
        let (idx, per) = cyclic_profile(s.op(), x);
        let sq = s.mul(x, x);
        inv.extend([
            (sq == x) as u64,
            (sq == x && s.star(x) == x) as u64,
            (s.star(x) == x) as u64,
            idx,
            per,
            ls[g.l_class[x]] as u64,
            rs[g.r_class[x]] as u64,
            ds[g.d_class[x]] as u64,
        ]);
    }
}

pub(crate) fn structure_side(s: &StarBraceStructure) -> SearchSide<'_> {
    let mut invariants = vec![Vec::new(); s.n()];
    semigroup_invariants(&s.multiplicative(), &mut invariants);
    semigroup_invariants(&s.additive(), &mut invariants);
    SearchSide {
        bins: vec![s.add_table(), s.mul_table()],
        uns: vec![s.neg_table(), s.star_table()],
        invariants,
    }
}

struct Search<'a, 'b> {
    a: &'a SearchSide<'b>,
    b: &'a SearchSide<'b>,
    fwd: Vec<Option<Elem>>,
    used: Vec<bool>,
    order: Vec<Elem>,
    trail: Vec<Elem>,
}

impl Search<'_, '_> {
    /// Assigns `x ↦ y` and closes under all operations. On conflict the
    /// trail is left for the caller to unwind.
    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match self.fwd[x] {
                Some(v) if v == y => continue,
                Some(_) => return false,
                None => {}
            }
            if self.used[y] || self.a.invariants[x] != self.b.invariants[y] {
                return false;
            }
            self.fwd[x] = Some(y);
            self.used[y] = true;
            self.trail.push(x);
            self.order.push(x);
            for (ua, ub) in self.a.uns.iter().zip(&self.b.uns) {
                queue.push((ua.get(x), ub.get(y)));
            }
            for i in 0..self.order.len() {
                let w = self.order[i];
                let fw = self.fwd[w].expect("ordered elements are assigned");
                for (oa, ob) in self.a.bins.iter().zip(&self.b.bins) {
                    queue.push((oa.get(x, w), ob.get(y, fw)));
                    queue.push((oa.get(w, x), ob.get(fw, y)));
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail above mark");
            let y = self.fwd[x].take().expect("trailed element is assigned");
            self.used[y] = false;
            self.order.pop();
        }
    }

    fn run(&mut self, found: &mut Vec<Vec<Elem>>, limit: usize) {
        if found.len() >= limit {
            return;
        }
        let Some(x) = self.fwd.iter().position(Option::is_none) else {
            found.push(self.fwd.iter().map(|v| v.expect("complete")).collect());
            return;
        };
        for y in 0..self.b.n() {
            if self.used[y] || self.a.invariants[x] != self.b.invariants[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                self.run(found, limit);
            }
            self.undo_to(mark);
            if found.len() >= limit {
                return;
            }
        }
    }
}

/// Exhaustive search for up to `limit` bijections preserving every
/// operation of the two sides.
pub(crate) fn search_isomorphisms(a: &SearchSide<'_>, b: &SearchSide<'_>, limit: usize) -> Vec<Vec<Elem>> {
    if a.n() != b.n() || a.bins.len() != b.bins.len() || a.uns.len() != b.uns.len() {
        return Vec::new();
    }
    let mut sa = a.invariants.clone();
    let mut sb = b.invariants.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Vec::new();
    }
    let mut search = Search {
        a,
        b,
        fwd: vec![None; a.n()],
        used: vec![false; b.n()],
        order: Vec::new(),
        trail: Vec::new(),
    };
    let mut found = Vec::new();
    search.run(&mut found, limit);
    found
}

/// A bijection preserving all four operations, if one exists.
pub fn find_isomorphism(a: &StarBraceStructure, b: &StarBraceStructure) -> Option<ElementMap> {
    let found = search_isomorphisms(&structure_side(a), &structure_side(b), 1);
    found
        .into_iter()
        .next()
        .map(|t| ElementMap::new(a.n(), b.n(), t).expect("search yields in-range maps"))
}

/// Every automorphism of the structure.
pub fn automorphisms(s: &StarBraceStructure) -> Vec<ElementMap> {
    let side = structure_side(s);
    search_isomorphisms(&side, &side, usize::MAX)
        .into_iter()
        .map(|t| ElementMap::new(s.n(), s.n(), t).expect("search yields in-range maps"))
        .collect()
}

/// Checks that `m` is a bijective homomorphism from `a` to `b`.
pub fn check_isomorphism(m: &ElementMap, a: &StarBraceStructure, b: &StarBraceStructure) -> Result<Verdict> {
    let v = check_homomorphism(m, a, b)?;
    if v.is_ok() && !m.is_bijective() {
        return Ok(Err(Witness::predicate("isomorphism", &[], "map is not bijective")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> StarBraceStructure {
        let xor = OpTable::from_fn(2, |a, b| a ^ b).unwrap();
        let id = UnaryTable::identity(2).unwrap();
        StarBraceStructure::new(xor.clone(), id.clone(), xor, id).unwrap()
    }

    fn rb2() -> StarBraceStructure {
        // (i,j) = 2i+j; (i,j)(k,l)=(i,l); (i,j)+(k,l)=(k,j); −, ⋆ swap.
        let mul = OpTable::from_fn(4, |a, b| (a / 2) * 2 + b % 2).unwrap();
        let add = OpTable::from_fn(4, |a, b| (b / 2) * 2 + a % 2).unwrap();
        let swap = UnaryTable::from_fn(4, |a| (a % 2) * 2 + a / 2).unwrap();
        StarBraceStructure::new(add, swap.clone(), mul, swap).unwrap()
    }

    #[test]
    fn homomorphism_examples() {
        let b2 = b2();
        let id = ElementMap::identity(2);
        assert_eq!(check_homomorphism(&id, &b2, &b2).unwrap(), Ok(()));

        let one = StarBraceStructure::trivial();
        let c = ElementMap::constant(2, 1, 0).unwrap();
        assert_eq!(check_homomorphism(&c, &b2, &one).unwrap(), Ok(()));

        let swap = ElementMap::new(2, 2, vec![1, 0]).unwrap();
        let w = check_homomorphism(&swap, &b2, &b2).unwrap().unwrap_err();
        // 0+0 = 0 must map to 1, but f(0)+f(0) = 1+1 = 0.
        assert_eq!(w, Witness::mismatch("hom_add", &[0, 0], 0, 1));

        assert!(matches!(
            check_homomorphism(&c, &b2, &b2),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn isomorphism_examples() {
        let b2 = b2();
        let m = find_isomorphism(&b2, &b2).unwrap();
        assert_eq!(m, ElementMap::identity(2));

        assert!(find_isomorphism(&rb2(), &b2).is_none());

        let perm = [2, 0, 3, 1];
        let relabeled = rb2().relabel(&perm);
        let m = find_isomorphism(&rb2(), &relabeled).unwrap();
        assert_eq!(check_isomorphism(&m, &rb2(), &relabeled).unwrap(), Ok(()));
    }

    #[test]
    fn rb2_automorphisms() {
        // Swapping the index set coordinate-wise is the only non-trivial one.
        let autos = automorphisms(&rb2());
        assert_eq!(autos.len(), 2);
    }
}
