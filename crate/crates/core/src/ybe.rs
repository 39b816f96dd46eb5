//! Set-theoretic Yang–Baxter verification.
//!
//! `r` is a solution iff the three action conditions
//!
//! ```text
//! λ_x λ_y (z)                = λ_{λ_x(y)} λ_{ρ_y(x)} (z)
//! ρ_z ρ_y (x)                = ρ_{ρ_z(y)} ρ_{λ_y(z)} (x)
//! λ_{ρ_{λ_y(z)}(x)} ρ_z(y)   = ρ_{λ_{ρ_y(x)}(z)} λ_x(y)
//! ```
//!
//! hold for all triples. [`braid_relation`] checks the braid form
//! `(r×1)(1×r)(r×1) = (1×r)(r×1)(1×r)` directly and serves as the
//! independent oracle for [`is_ybe_solution`].

use serde::Serialize;

use crate::pairmap::PairMap;
use crate::table::is_permutation;
use crate::witness::{ensure_eq, for_each_par, Verdict, Witness};
use crate::Elem;

/// Which of the three action conditions failed first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum YbeCondition {
    LeftActions,
    RightActions,
    Mixed,
}

impl YbeCondition {
    pub fn name(self) -> &'static str {
        match self {
            YbeCondition::LeftActions => "ybe_left_actions",
            YbeCondition::RightActions => "ybe_right_actions",
            YbeCondition::Mixed => "ybe_mixed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub is_solution: bool,
    pub failed_condition: Option<(YbeCondition, Witness)>,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub bijective: bool,
    pub involutive: bool,
}

impl SolutionReport {
    pub fn nondegenerate(&self) -> bool {
        self.left_nondegenerate && self.right_nondegenerate
    }

    pub fn verdict(&self) -> Verdict {
        match &self.failed_condition {
            Some((_, w)) => Err(w.clone()),
            None => Ok(()),
        }
    }
}

fn left_actions(r: &PairMap, x: Elem, y: Elem, z: Elem) -> Verdict {
    let lhs = r.lambda(x, r.lambda(y, z));
    let rhs = r.lambda(r.lambda(x, y), r.lambda(r.rho(y, x), z));
    ensure_eq(YbeCondition::LeftActions.name(), &[x, y, z], lhs, rhs)
}

fn right_actions(r: &PairMap, x: Elem, y: Elem, z: Elem) -> Verdict {
    let lhs = r.rho(z, r.rho(y, x));
    let rhs = r.rho(r.rho(z, y), r.rho(r.lambda(y, z), x));
    ensure_eq(YbeCondition::RightActions.name(), &[x, y, z], lhs, rhs)
}

fn mixed(r: &PairMap, x: Elem, y: Elem, z: Elem) -> Verdict {
    let lhs = r.lambda(r.rho(r.lambda(y, z), x), r.rho(z, y));
    let rhs = r.rho(r.lambda(r.rho(y, x), z), r.lambda(x, y));
    ensure_eq(YbeCondition::Mixed.name(), &[x, y, z], lhs, rhs)
}

fn scan(r: &PairMap, cond: fn(&PairMap, Elem, Elem, Elem) -> Verdict) -> Verdict {
    let n = r.n();
    for_each_par(n, |x| {
        for y in 0..n {
            for z in 0..n {
                cond(r, x, y, z)?;
            }
        }
        Ok(())
    })
}

/// Only the three action conditions, stopping at the first failure.
pub fn satisfies_ybe(r: &PairMap) -> Result<(), (YbeCondition, Witness)> {
    let conditions: [(YbeCondition, fn(&PairMap, Elem, Elem, Elem) -> Verdict); 3] = [
        (YbeCondition::LeftActions, left_actions),
        (YbeCondition::RightActions, right_actions),
        (YbeCondition::Mixed, mixed),
    ];
    for (c, f) in conditions {
        scan(r, f).map_err(|w| (c, w))?;
    }
    Ok(())
}

/// Full report: the three conditions over all `n³` triples, plus
/// non-degeneracy, bijectivity and involutivity.
pub fn is_ybe_solution(r: &PairMap) -> SolutionReport {
    let n = r.n();
    let failed_condition = satisfies_ybe(r).err();
    let left_nondegenerate = (0..n).all(|a| is_permutation(r.lambda_table().row(a)));
    let right_nondegenerate = (0..n).all(|b| is_permutation(r.rho_table().row(b)));
    let mut hit = vec![false; n * n];
    let mut bijective = true;
    let mut involutive = true;
    for a in 0..n {
        for b in 0..n {
            let (u, v) = r.apply(a, b);
            if std::mem::replace(&mut hit[u * n + v], true) {
                bijective = false;
            }
            if r.apply(u, v) != (a, b) {
                involutive = false;
            }
        }
    }
    SolutionReport {
        is_solution: failed_condition.is_none(),
        failed_condition,
        left_nondegenerate,
        right_nondegenerate,
        bijective,
        involutive,
    }
}

/// The braid relation on `S³`, checked by applying both sides to every
/// triple. The witness is the triple and the first differing coordinate.
pub fn braid_relation(r: &PairMap) -> Verdict {
    let n = r.n();
    let r12 = |[a, b, c]: [Elem; 3]| {
        let (u, v) = r.apply(a, b);
        [u, v, c]
    };
    let r23 = |[a, b, c]: [Elem; 3]| {
        let (u, v) = r.apply(b, c);
        [a, u, v]
    };
    for_each_par(n, |x| {
        for y in 0..n {
            for z in 0..n {
                let lhs = r12(r23(r12([x, y, z])));
                let rhs = r23(r12(r23([x, y, z])));
                for k in 0..3 {
                    if lhs[k] != rhs[k] {
                        return Err(Witness::mismatch("braid_relation", &[x, y, z, k], lhs[k], rhs[k]));
                    }
                }
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_is_involutive_nondegenerate_solution() {
        let rep = is_ybe_solution(&PairMap::swap(3));
        assert!(rep.is_solution && rep.nondegenerate() && rep.bijective && rep.involutive);
        assert!(braid_relation(&PairMap::swap(3)).is_ok());
    }

    #[test]
    fn identity_is_degenerate_solution() {
        let rep = is_ybe_solution(&PairMap::identity(3));
        assert!(rep.is_solution);
        // λ_a(b) = a is constant in b.
        assert!(!rep.left_nondegenerate && !rep.right_nondegenerate);
        assert!(rep.bijective && rep.involutive);
    }

    #[test]
    fn constant_map_agrees_with_braid_scan() {
        // (x, y) ↦ (0, 0): both braid sides send every triple to (0, 0, 0),
        // so the 8-triple scan finds no failure.
        let c = PairMap::from_pair_fn(2, |_, _| (0, 0)).unwrap();
        assert!(braid_relation(&c).is_ok());
        let rep = is_ybe_solution(&c);
        assert!(rep.is_solution);
        assert!(!rep.bijective && !rep.involutive && !rep.left_nondegenerate);
    }

    #[test]
    fn non_solution_is_caught_by_both_routes() {
        // (x, y) ↦ (y, x + y) on Z/2: the two braid sides send (x, y, z) to
        // (z, y+z, x+y+z) and (z, y+z, x+y), which differ when z = 1.
        let r = PairMap::from_pair_fn(2, |x, y| (y, (x + y) % 2)).unwrap();
        let by_actions = satisfies_ybe(&r).is_ok();
        let by_braid = braid_relation(&r).is_ok();
        assert_eq!(by_actions, by_braid);
        assert!(!by_braid);
    }
}
