//! Finite skew left braces, their associated and deformed solutions, and
//! right distributors.
//!
//! Conventions: multiplication binds tighter than addition and
//! `x − y = x + (−y)`. For a parameter `t` the two deformations are
//!
//! ```text
//! r̂_t(x, y) = (−xt + xyt,  (−xt + xyt)⁻¹ xy)
//! ř_t(x, y) = (xy − xt + t, (xy − xt + t)⁻¹ xy)
//! ```

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::check_group;
use crate::pairmap::PairMap;
use crate::structure::StarBraceStructure;
use crate::table::{compose, is_permutation, maps_equal, OpTable, UnaryTable};
use crate::witness::{ensure_eq, for_all, NamedCheck, Verdict, Witness};
use crate::ybe::{is_ybe_solution, satisfies_ybe};
use crate::Elem;

/// `(G, +, ·)` with shared identity and both inversions. Construction only
/// validates sizes; [`SkewBrace::check`] decides the axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    add: OpTable,
    mul: OpTable,
    identity: Elem,
    add_inv: UnaryTable,
    mul_inv: UnaryTable,
}

impl SkewBrace {
    pub fn new(
        add: OpTable,
        mul: OpTable,
        identity: Elem,
        add_inv: UnaryTable,
        mul_inv: UnaryTable,
    ) -> Result<Self> {
        let n = add.n();
        for m in [mul.n(), add_inv.n(), mul_inv.n()] {
            if m != n {
                return Err(Error::SizeMismatch { left: n, right: m });
            }
        }
        if identity >= n {
            return Err(Error::IndexOutOfRange {
                value: identity,
                position: 0,
                n,
            });
        }
        Ok(SkewBrace {
            add,
            mul,
            identity,
            add_inv,
            mul_inv,
        })
    }

    /// Derives identity and inverses from two tables and checks every axiom.
    pub fn from_tables(add: OpTable, mul: OpTable) -> Result<Self, Witness> {
        let e = add
            .identity()
            .ok_or_else(|| Witness::predicate("add_identity", &[], "no additive identity"))?;
        let inv_of = |op: &OpTable, name: &str| -> Result<UnaryTable, Witness> {
            let n = op.n();
            let mut inv = Vec::with_capacity(n);
            for x in 0..n {
                let y = (0..n)
                    .find(|&y| op.get(x, y) == e && op.get(y, x) == e)
                    .ok_or_else(|| Witness::predicate(format!("{name}_inverse"), &[x], "no inverse"))?;
                inv.push(y);
            }
            Ok(UnaryTable::new(n, inv).expect("inverses are in range"))
        };
        let add_inv = inv_of(&add, "add")?;
        let mul_inv = inv_of(&mul, "mul")?;
        let g = SkewBrace::new(add, mul, e, add_inv, mul_inv)
            .map_err(|err| Witness::predicate("shape", &[], err.to_string()))?;
        g.check()?;
        Ok(g)
    }

    /// The trivial brace `x + y = x · y` on a group.
    pub fn trivial_on(g: &crate::group::Group) -> SkewBrace {
        SkewBrace::new(
            g.table.clone(),
            g.table.clone(),
            g.identity,
            g.inverse.clone(),
            g.inverse.clone(),
        )
        .expect("group tables share a size")
    }

    pub fn n(&self) -> usize {
        self.add.n()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add.get(a, b)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.add_inv.get(a)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.mul_inv.get(a)
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn add_inv_table(&self) -> &UnaryTable {
        &self.add_inv
    }

    pub fn mul_inv_table(&self) -> &UnaryTable {
        &self.mul_inv
    }

    /// Both group axioms with the shared identity, then
    /// `x(y + z) = xy − x + xz`.
    pub fn check(&self) -> Verdict {
        check_group(&self.add, self.identity, &self.add_inv, "add")?;
        check_group(&self.mul, self.identity, &self.mul_inv, "mul")?;
        for_all(self.n(), |[x, y, z]| {
            let lhs = self.mul(x, self.add(y, z));
            let rhs = self.add(self.sub(self.mul(x, y), x), self.mul(x, z));
            ensure_eq("brace_compatibility", &[x, y, z], rhs, lhs)
        })
    }

    /// The brace viewed as a star-brace: `−` is additive and `⋆`
    /// multiplicative inversion.
    pub fn as_star_brace(&self) -> StarBraceStructure {
        StarBraceStructure::new(
            self.add.clone(),
            self.add_inv.clone(),
            self.mul.clone(),
            self.mul_inv.clone(),
        )
        .expect("brace tables share a size")
    }

    /// Recognises a star-brace whose reducts are groups as a skew brace.
    pub fn from_star_brace(s: &StarBraceStructure) -> Result<Self, Witness> {
        let g = SkewBrace::from_tables(s.add_table().clone(), s.mul_table().clone())?;
        for x in 0..s.n() {
            ensure_eq("neg_is_add_inverse", &[x], g.neg(x), s.neg(x))?;
            ensure_eq("star_is_mul_inverse", &[x], g.inv(x), s.star(x))?;
        }
        Ok(g)
    }

    pub fn relabel(&self, perm: &[Elem]) -> SkewBrace {
        SkewBrace {
            add: self.add.relabel(perm),
            mul: self.mul.relabel(perm),
            identity: perm[self.identity],
            add_inv: self.add_inv.relabel(perm),
            mul_inv: self.mul_inv.relabel(perm),
        }
    }

    pub fn is_additively_abelian(&self) -> bool {
        self.add.is_commutative().is_ok()
    }
}

/// `r(x, y) = (x(x⁻¹ + y), (x⁻¹ + y)⁻¹ y)`.
pub fn associated_solution(g: &SkewBrace) -> PairMap {
    PairMap::from_pair_fn(g.n(), |x, y| {
        let u = g.add(g.inv(x), y);
        (g.mul(x, u), g.mul(g.inv(u), y))
    })
    .expect("brace operations stay in range")
}

/// Right distributors by definition: `(x + y)t = xt − t + yt` for all `x, y`.
pub fn right_distributors_group(g: &SkewBrace) -> BTreeSet<Elem> {
    let n = g.n();
    (0..n)
        .filter(|&t| {
            for_all(n, |[x, y]| {
                let lhs = g.mul(g.add(x, y), t);
                let rhs = g.add(g.sub(g.mul(x, t), t), g.mul(y, t));
                ensure_eq("right_distributor", &[x, y, t], rhs, lhs)
            })
            .is_ok()
        })
        .collect()
}

/// Right distributors by the three-term criterion
/// `(a − b + c)t = at − bt + ct` for all `a, b, c`.
pub fn right_distributors_three_term(g: &SkewBrace) -> BTreeSet<Elem> {
    let n = g.n();
    (0..n)
        .filter(|&t| {
            for_all(n, |[a, b, c]| {
                let lhs = g.mul(g.add(g.sub(a, b), c), t);
                let rhs = g.add(g.sub(g.mul(a, t), g.mul(b, t)), g.mul(c, t));
                ensure_eq("three_term_distributor", &[a, b, c, t], rhs, lhs)
            })
            .is_ok()
        })
        .collect()
}

/// `σ̂^t_x(y) = −xt + xyt`.
#[inline]
pub fn sigma_hat(g: &SkewBrace, t: Elem, x: Elem, y: Elem) -> Elem {
    g.add(g.neg(g.mul(x, t)), g.mul(g.mul(x, y), t))
}

/// `σ̌^t_x(y) = xy − xt + t`.
#[inline]
pub fn sigma_check(g: &SkewBrace, t: Elem, x: Elem, y: Elem) -> Elem {
    g.add(g.sub(g.mul(x, y), g.mul(x, t)), t)
}

pub fn deformed_hat(g: &SkewBrace, t: Elem) -> PairMap {
    PairMap::from_pair_fn(g.n(), |x, y| {
        let s = sigma_hat(g, t, x, y);
        (s, g.mul(g.inv(s), g.mul(x, y)))
    })
    .expect("brace operations stay in range")
}

pub fn deformed_check(g: &SkewBrace, t: Elem) -> PairMap {
    PairMap::from_pair_fn(g.n(), |x, y| {
        let s = sigma_check(g, t, x, y);
        (s, g.mul(g.inv(s), g.mul(x, y)))
    })
    .expect("brace operations stay in range")
}

fn sigma_hat_map(g: &SkewBrace, t: Elem, x: Elem) -> Vec<Elem> {
    (0..g.n()).map(|y| sigma_hat(g, t, x, y)).collect()
}

/// `τ̂^t_y` as a self-map: `x ↦ ρ_y(x)`.
fn tau_hat_map(r: &PairMap, y: Elem) -> Vec<Elem> {
    (0..r.n()).map(|x| r.rho(y, x)).collect()
}

fn inverse_map(check: &str, context: &[Elem], f: &[Elem]) -> Result<Vec<Elem>, Witness> {
    if !is_permutation(f) {
        return Err(Witness::predicate(check, context, "map is not bijective"));
    }
    let mut inv = vec![0; f.len()];
    for (a, &v) in f.iter().enumerate() {
        inv[v] = a;
    }
    Ok(inv)
}

/// Checks on the two group-level deformations at one parameter `t`.
///
/// For every `t`: `r̂_t` is a solution iff `t` is a right distributor, and
/// the two composite identities
/// `σ̂_x σ̂_1 (x⁻¹(xt + y)t⁻¹) = −xt + (x + y)t`,
/// `σ̂_1 σ̂_x (x⁻¹(xt + y)t⁻¹) = −t + yt`.
/// For distributors additionally: `t⁻¹` is a distributor, `ř_{t⁻¹}` is a
/// bijective non-degenerate solution inverse to `r̂_t`,
/// `(σ̂^t_x)⁻¹ = σ̂^{t⁻¹}_{x⁻¹}`, `(τ̂^t_x)⁻¹ = σ̂^t_{x⁻¹}`, `τ̂^t` is an
/// anti-homomorphism, and `σ̂^t` is a homomorphism iff `wt = t + w` for all
/// `w`.
pub fn deformation_checks(g: &SkewBrace, t: Elem) -> Vec<NamedCheck> {
    let n = g.n();
    let dist = right_distributors_group(g);
    let is_dist = dist.contains(&t);
    let hat = deformed_hat(g, t);
    let mut out = Vec::new();

    let hat_solves = satisfies_ybe(&hat).is_ok();
    out.push(NamedCheck::new(
        "hat_solution_iff_distributor",
        if hat_solves == is_dist {
            Ok(())
        } else {
            Err(Witness::predicate(
                "hat_solution_iff_distributor",
                &[t],
                format!("solution = {hat_solves}, distributor = {is_dist}"),
            ))
        },
    ));

    let one = g.identity();
    let ti = g.inv(t);
    out.push(NamedCheck::new(
        "hat_composite_identities",
        for_all(n, |[x, y]| {
            let w = g.mul(g.mul(g.inv(x), g.add(g.mul(x, t), y)), ti);
            let first = sigma_hat(g, t, x, sigma_hat(g, t, one, w));
            let want_first = g.add(g.neg(g.mul(x, t)), g.mul(g.add(x, y), t));
            ensure_eq("hat_composite_first", &[x, y, t], want_first, first)?;
            let second = sigma_hat(g, t, one, sigma_hat(g, t, x, w));
            let want_second = g.add(g.neg(t), g.mul(y, t));
            ensure_eq("hat_composite_second", &[x, y, t], want_second, second)
        }),
    ));

    if !is_dist {
        return out;
    }

    out.push(NamedCheck::new(
        "inverse_is_distributor",
        if dist.contains(&ti) {
            Ok(())
        } else {
            Err(Witness::predicate("inverse_is_distributor", &[t, ti], "t⁻¹ is not a distributor"))
        },
    ));

    let chk = deformed_check(g, ti);
    let rep = is_ybe_solution(&chk);
    out.push(NamedCheck::new("check_inverse_parameter_solution", rep.verdict()));
    out.push(NamedCheck::new(
        "check_inverse_parameter_bijective",
        if rep.bijective {
            Ok(())
        } else {
            Err(Witness::predicate("check_inverse_parameter_bijective", &[t], "not bijective"))
        },
    ));
    out.push(NamedCheck::new(
        "check_inverse_parameter_nondegenerate",
        if rep.nondegenerate() {
            Ok(())
        } else {
            Err(Witness::predicate("check_inverse_parameter_nondegenerate", &[t], "degenerate"))
        },
    ));
    let id = PairMap::identity(n);
    out.push(NamedCheck::new(
        "hat_check_mutually_inverse",
        chk.compose(&hat)
            .expect("same carrier")
            .equals(&id, "check_after_hat")
            .and_then(|_| hat.compose(&chk).expect("same carrier").equals(&id, "hat_after_check")),
    ));

    out.push(NamedCheck::new(
        "hat_sigma_inverse",
        (0..n).try_for_each(|x| {
            let inv = inverse_map("hat_sigma_inverse", &[x, t], &sigma_hat_map(g, t, x))?;
            maps_equal("hat_sigma_inverse", &[x, t], &sigma_hat_map(g, ti, g.inv(x)), &inv)
        }),
    ));

    out.push(NamedCheck::new(
        "hat_tau_inverse",
        (0..n).try_for_each(|x| {
            let inv = inverse_map("hat_tau_inverse", &[x, t], &tau_hat_map(&hat, x))?;
            maps_equal("hat_tau_inverse", &[x, t], &sigma_hat_map(g, t, g.inv(x)), &inv)
        }),
    ));

    let taus: Vec<Vec<Elem>> = (0..n).map(|y| tau_hat_map(&hat, y)).collect();
    out.push(NamedCheck::new(
        "hat_tau_anti_homomorphism",
        for_all(n, |[a, b]| {
            maps_equal(
                "hat_tau_anti_homomorphism",
                &[a, b, t],
                &compose(&taus[b], &taus[a]),
                &taus[g.mul(a, b)],
            )
        }),
    ));

    let sigmas: Vec<Vec<Elem>> = (0..n).map(|x| sigma_hat_map(g, t, x)).collect();
    let sigma_hom = for_all(n, |[a, b]| {
        maps_equal(
            "hat_sigma_homomorphism",
            &[a, b, t],
            &compose(&sigmas[a], &sigmas[b]),
            &sigmas[g.mul(a, b)],
        )
    })
    .is_ok();
    let commuting = (0..n).all(|w| g.mul(w, t) == g.add(t, w));
    out.push(NamedCheck::new(
        "hat_sigma_homomorphism_iff_commuting",
        if sigma_hom == commuting {
            Ok(())
        } else {
            Err(Witness::predicate(
                "hat_sigma_homomorphism_iff_commuting",
                &[t],
                format!("homomorphism = {sigma_hom}, wt = t + w for all w: {commuting}"),
            ))
        },
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    pub(crate) fn b2() -> SkewBrace {
        let xor = OpTable::from_fn(2, |a, b| a ^ b).unwrap();
        SkewBrace::from_tables(xor.clone(), xor).unwrap()
    }

    fn z4_radical() -> SkewBrace {
        let add = OpTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        let mul = OpTable::from_fn(4, |a, b| (a + b + 2 * a * b) % 4).unwrap();
        SkewBrace::from_tables(add, mul).unwrap()
    }

    #[test]
    fn brace_examples() {
        assert!(b2().check().is_ok());
        assert!(z4_radical().check().is_ok());
        let add = OpTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        let neg = UnaryTable::from_fn(4, |a| (4 - a) % 4).unwrap();
        let g = SkewBrace::new(add.clone(), add, 1, neg.clone(), neg).unwrap();
        assert_eq!(g.check().unwrap_err().check, "add_identity");
    }

    #[test]
    fn associated_solution_examples() {
        assert_eq!(associated_solution(&b2()), PairMap::swap(2));
        let one = SkewBrace::from_tables(OpTable::new(1, &[vec![0]]).unwrap(), OpTable::new(1, &[vec![0]]).unwrap())
            .unwrap();
        assert!(associated_solution(&one).is_identity());
        // Trivial brace: r(x, y) = (y, y⁻¹xy).
        for grp in catalog(6) {
            let g = SkewBrace::trivial_on(&grp);
            let r = associated_solution(&g);
            for x in 0..6 {
                for y in 0..6 {
                    assert_eq!(r.apply(x, y), (y, g.mul(g.mul(g.inv(y), x), y)));
                }
            }
        }
    }

    #[test]
    fn distributor_examples() {
        assert_eq!(right_distributors_group(&b2()), BTreeSet::from([0, 1]));
        assert_eq!(right_distributors_group(&z4_radical()), (0..4).collect());
        for g in [b2(), z4_radical()] {
            assert!(right_distributors_group(&g).contains(&g.identity()));
            assert_eq!(right_distributors_group(&g), right_distributors_three_term(&g));
        }
    }

    #[test]
    fn deformation_examples_on_b2() {
        let g = b2();
        // (x⊕1)⊕(x⊕y⊕1) = y.
        assert_eq!(deformed_hat(&g, 1), PairMap::swap(2));
        assert_eq!(deformed_check(&g, 0), PairMap::swap(2));
        assert_eq!(deformed_hat(&g, 0), associated_solution(&g));
        for t in 0..2 {
            for c in deformation_checks(&g, t) {
                assert!(c.passed(), "{} failed: {:?}", c.name, c.verdict);
            }
        }
    }

    #[test]
    fn deformations_at_identity_match_associated_map() {
        for n in 1..=6 {
            for grp in catalog(n) {
                let g = SkewBrace::trivial_on(&grp);
                let e = g.identity();
                assert_eq!(deformed_hat(&g, e), associated_solution(&g));
                // σ̌^1_x(y) = xy − x against −x + xy: equal when + commutes.
                let same = deformed_check(&g, e) == associated_solution(&g);
                assert_eq!(same, g.is_additively_abelian());
            }
        }
    }

    #[test]
    fn check_deformation_at_identity_on_s3_is_conjugation() {
        let s3 = catalog(6)
            .into_iter()
            .find(|g| g.table.is_commutative().is_err())
            .unwrap();
        let g = SkewBrace::trivial_on(&s3);
        let r = deformed_check(&g, g.identity());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(r.lambda(x, y), g.mul(g.mul(x, y), g.inv(x)));
            }
        }
    }

    #[test]
    fn tau_inverse_claim_fails_on_nonabelian_trivial_brace() {
        // Trivial brace on S3, t = 1: σ̂_x = id and τ̂_x(a) = x⁻¹ax, whose
        // inverse is a ↦ xax⁻¹, not σ̂_{x⁻¹} = id.
        let s3 = catalog(6)
            .into_iter()
            .find(|g| g.table.is_commutative().is_err())
            .unwrap();
        let g = SkewBrace::trivial_on(&s3);
        let checks = deformation_checks(&g, g.identity());
        let tau = checks.iter().find(|c| c.name == "hat_tau_inverse").unwrap();
        assert!(!tau.passed());
        for c in checks.iter().filter(|c| c.name != "hat_tau_inverse") {
            assert!(c.passed(), "{} failed: {:?}", c.name, c.verdict);
        }
    }
}
