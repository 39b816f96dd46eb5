//! Exhaustive searches over tiny carriers: every labelled semigroup, every
//! regular ⋆-semigroup, and every weak left ⋆-brace of a given order.

use crate::star::{check_dual, check_weak_star_brace};
use crate::structure::{StarBraceStructure, StarSemigroup};
use crate::table::{OpTable, UnaryTable};
use crate::Elem;

const FREE: usize = usize::MAX;

struct SemigroupFill {
    n: usize,
    t: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl SemigroupFill {
    fn get(&self, a: Elem, b: Elem) -> usize {
        self.t[a * self.n + b]
    }

    /// Every fully determined associativity instance is satisfied.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == FREE {
                    continue;
                }
                for c in 0..n {
                    let bc = self.get(b, c);
                    if bc == FREE {
                        continue;
                    }
                    let l = self.get(ab, c);
                    let r = self.get(a, bc);
                    if l != FREE && r != FREE && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, k: usize) {
        if k == self.t.len() {
            self.out.push(self.t.clone());
            return;
        }
        for v in 0..self.n {
            self.t[k] = v;
            if self.consistent() {
                self.fill(k + 1);
            }
        }
        self.t[k] = FREE;
    }
}

/// Every associative table on `{0, …, n-1}`, in lexicographic order.
pub fn labeled_semigroups(n: usize) -> Vec<OpTable> {
    let mut s = SemigroupFill {
        n,
        t: vec![FREE; n * n],
        out: Vec::new(),
    };
    s.fill(0);
    s.out
        .into_iter()
        .map(|t| OpTable::from_flat(n, t).expect("fill stays in range"))
        .collect()
}

/// Every permutation `p` of `{0, …, n-1}` with `p ∘ p = id`.
pub fn involutions(n: usize) -> Vec<UnaryTable> {
    fn go(p: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        let n = p.len();
        if i == n {
            out.push(p.clone());
            return;
        }
        if p[i] != FREE {
            return go(p, i + 1, out);
        }
        p[i] = i;
        go(p, i + 1, out);
        for j in i + 1..n {
            if p[j] == FREE {
                p[i] = j;
                p[j] = i;
                go(p, i + 1, out);
                p[j] = FREE;
            }
        }
        p[i] = FREE;
    }
    let mut out = Vec::new();
    go(&mut vec![FREE; n], 0, &mut out);
    out.sort();
    out.into_iter()
        .map(|p| UnaryTable::new(n, p).expect("permutation in range"))
        .collect()
}

/// Every labelled regular ⋆-semigroup of order `n`.
pub fn regular_star_semigroups(n: usize) -> Vec<StarSemigroup> {
    let invs = involutions(n);
    let mut out = Vec::new();
    for op in labeled_semigroups(n) {
        for star in &invs {
            let s = StarSemigroup::new(op.clone(), star.clone()).expect("sizes agree");
            if s.check_regular_star().is_ok() {
                out.push(s);
            }
        }
    }
    out
}

/// Every labelled weak left ⋆-brace of order `n`, as `(additive,
/// multiplicative)` pairs drawn from [`regular_star_semigroups`].
pub fn weak_star_braces(n: usize) -> Vec<StarBraceStructure> {
    let rs = regular_star_semigroups(n);
    let mut out = Vec::new();
    for a in &rs {
        for m in &rs {
            // Cheap necessary condition first: −x + x = xx⋆.
            if (0..n).any(|x| a.mul(a.star(x), x) != m.mul(x, m.star(x))) {
                continue;
            }
            let s = StarBraceStructure::new(
                a.op().clone(),
                a.star_table().clone(),
                m.op().clone(),
                m.star_table().clone(),
            )
            .expect("sizes agree");
            if check_weak_star_brace(&s).is_ok() {
                out.push(s);
            }
        }
    }
    out
}

/// The first weak left ⋆-brace (by order, then search order) that is not
/// dual, if any exists up to order `max_n`.
pub fn first_non_dual_weak_star_brace(max_n: usize) -> Option<StarBraceStructure> {
    (1..=max_n).find_map(|n| weak_star_braces(n).into_iter().find(|s| check_dual(s).is_err()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_semigroup_count(n: usize) -> usize {
        let cells = n * n;
        (0..n.pow(cells as u32))
            .filter(|&code| {
                let mut c = code;
                let t = (0..cells)
                    .map(|_| {
                        let v = c % n;
                        c /= n;
                        v
                    })
                    .collect();
                OpTable::from_flat(n, t).unwrap().is_associative().is_ok()
            })
            .count()
    }

    #[test]
    fn labeled_semigroup_counts_match_table_scan() {
        for n in 1..=3 {
            assert_eq!(labeled_semigroups(n).len(), brute_force_semigroup_count(n));
        }
    }

    #[test]
    fn involution_counts() {
        // 1, 2, 4, 10: fixed-point choices plus pairings.
        let counts: Vec<usize> = (1..=4).map(|n| involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10]);
    }
}
