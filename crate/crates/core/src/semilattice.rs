//! Strong semilattices of square skew left braces, in both directions.
//!
//! A [`SemilatticeSpec`] names a finite meet-semilattice `Y`, a square
//! brace `B_α` per node, and homomorphisms `φ_{α,β}: B_α → B_β` for `α ≥ β`.
//! Only covering pairs need to be given; the remaining maps are composites,
//! and compatibility `φ_{β,γ}φ_{α,β} = φ_{α,γ}` is checked on every
//! comparable triple. Operations push both arguments down to the meet:
//!
//! ```text
//! a ∘ b = φ_{α,αβ}(a) ∘ φ_{β,αβ}(b)      for a ∈ B_α, b ∈ B_β
//! ```
//!
//! [`decompose`] goes the other way: the nodes are the `D`-classes of
//! `(S, ·)`, and `φ_{α,β}(a) = aa⋆ea` for a projection `e` of `B_β`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::iso::{check_homomorphism, check_isomorphism};
use crate::semigroup::{green_relations, GreensData};
use crate::square::{build_square_brace, SquareBraceSpec};
use crate::star::{square_verdict, DualWeakStarBrace};
use crate::structure::StarBraceStructure;
use crate::table::{ElementMap, OpTable, UnaryTable};
use crate::witness::{ensure_eq, NamedCheck, Verdict, Witness};
use crate::Elem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Structure(DualWeakStarBrace),
    Square(SquareBraceSpec),
}

impl Component {
    pub fn build(&self) -> Result<DualWeakStarBrace> {
        match self {
            Component::Structure(s) => Ok(s.clone()),
            Component::Square(spec) => build_square_brace(spec),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilatticeSpec {
    pub meet: OpTable,
    pub components: Vec<Component>,
    /// `φ_{α,β}` keyed by `(α, β)` with `α > β`.
    pub homs: BTreeMap<(usize, usize), ElementMap>,
}

/// `α ≥ β` in the semilattice order.
#[inline]
pub fn above(meet: &OpTable, alpha: usize, beta: usize) -> bool {
    meet.get(alpha, beta) == beta
}

fn invalid(what: impl std::fmt::Display) -> Error {
    Error::InvalidSpec(what.to_string())
}

/// A validated spec with every component built and every `φ_{α,β}`
/// (`α ≥ β`) resolved.
#[derive(Clone, Debug)]
pub struct ResolvedSemilattice {
    pub meet: OpTable,
    pub components: Vec<DualWeakStarBrace>,
    pub homs: BTreeMap<(usize, usize), ElementMap>,
    /// First global index of each component.
    pub offsets: Vec<usize>,
}

impl ResolvedSemilattice {
    pub fn y_size(&self) -> usize {
        self.meet.n()
    }

    pub fn n(&self) -> usize {
        self.offsets.last().copied().unwrap_or(0) + self.components.last().map_or(0, |c| c.n())
    }

    pub fn hom(&self, alpha: usize, beta: usize) -> &ElementMap {
        &self.homs[&(alpha, beta)]
    }

    /// `(node, local index)` of a global element.
    pub fn locate(&self, x: Elem) -> (usize, Elem) {
        let node = self.offsets.partition_point(|&o| o <= x) - 1;
        (node, x - self.offsets[node])
    }

    fn binary(&self, op: impl Fn(&StarBraceStructure, Elem, Elem) -> Elem) -> OpTable {
        let n = self.n();
        OpTable::from_fn(n, |a, b| {
            let (alpha, i) = self.locate(a);
            let (beta, j) = self.locate(b);
            let m = self.meet.get(alpha, beta);
            let x = self.hom(alpha, m).get(i);
            let y = self.hom(beta, m).get(j);
            self.offsets[m] + op(&self.components[m], x, y)
        })
        .expect("component results stay in range")
    }

    fn unary(&self, op: impl Fn(&StarBraceStructure, Elem) -> Elem) -> UnaryTable {
        UnaryTable::from_fn(self.n(), |a| {
            let (alpha, i) = self.locate(a);
            self.offsets[alpha] + op(&self.components[alpha], i)
        })
        .expect("component results stay in range")
    }

    pub fn structure(&self) -> StarBraceStructure {
        StarBraceStructure::new(
            self.binary(|s, x, y| s.add(x, y)),
            self.unary(|s, x| s.neg(x)),
            self.binary(|s, x, y| s.mul(x, y)),
            self.unary(|s, x| s.star(x)),
        )
        .expect("tables share one carrier")
    }
}

fn check_meet(meet: &OpTable) -> Result<()> {
    let k = meet.n();
    meet.is_associative().map_err(|w| invalid(format!("meet: {w}")))?;
    meet.is_commutative().map_err(|w| invalid(format!("meet: {w}")))?;
    meet.is_idempotent().map_err(|w| invalid(format!("meet: {w}")))?;
    if k == 0 {
        return Err(Error::EmptyCarrier);
    }
    Ok(())
}

impl SemilatticeSpec {
    pub fn y_size(&self) -> usize {
        self.meet.n()
    }

    /// Builds the components, checks every supplied map, derives the
    /// composites and checks compatibility on all comparable triples.
    pub fn resolve(&self) -> Result<ResolvedSemilattice> {
        check_meet(&self.meet)?;
        let k = self.y_size();
        if self.components.len() != k {
            return Err(invalid(format!("{} components for {k} nodes", self.components.len())));
        }
        let components: Vec<DualWeakStarBrace> = self
            .components
            .iter()
            .enumerate()
            .map(|(alpha, c)| {
                let b = c.build().map_err(|e| invalid(format!("component {alpha}: {e}")))?;
                square_verdict(&b).map_err(|w| invalid(format!("component {alpha} is not square: {w}")))?;
                Ok(b)
            })
            .collect::<Result<_>>()?;

        let mut homs = BTreeMap::new();
        for alpha in 0..k {
            homs.insert((alpha, alpha), ElementMap::identity(components[alpha].n()));
        }
        for (&(alpha, beta), f) in &self.homs {
            if alpha >= k || beta >= k {
                return Err(invalid(format!("hom {alpha} {beta}: node out of range")));
            }
            if !above(&self.meet, alpha, beta) {
                return Err(invalid(format!("hom {alpha} {beta}: {alpha} is not above {beta}")));
            }
            if alpha == beta {
                if f != &ElementMap::identity(components[alpha].n()) {
                    return Err(invalid(format!("hom {alpha} {alpha} is not the identity")));
                }
                continue;
            }
            check_homomorphism(f, &components[alpha], &components[beta])
                .map_err(|e| invalid(format!("hom {alpha} {beta}: {e}")))?
                .map_err(|w| invalid(format!("hom {alpha} {beta} is not a homomorphism: {w}")))?;
            homs.insert((alpha, beta), f.clone());
        }

        // Fill in composites through intermediate nodes until nothing changes.
        loop {
            let mut added = false;
            for alpha in 0..k {
                for beta in 0..k {
                    if homs.contains_key(&(alpha, beta)) || !above(&self.meet, alpha, beta) {
                        continue;
                    }
                    let via = (0..k).find(|&g| {
                        g != alpha && g != beta && homs.contains_key(&(alpha, g)) && homs.contains_key(&(g, beta))
                    });
                    if let Some(g) = via {
                        let f = homs[&(alpha, g)].then(&homs[&(g, beta)])?;
                        homs.insert((alpha, beta), f);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        for alpha in 0..k {
            for beta in 0..k {
                if above(&self.meet, alpha, beta) && !homs.contains_key(&(alpha, beta)) {
                    return Err(invalid(format!("no homomorphism from node {alpha} to node {beta}")));
                }
            }
        }
        for alpha in 0..k {
            for beta in 0..k {
                for gamma in 0..k {
                    if !(above(&self.meet, alpha, beta) && above(&self.meet, beta, gamma)) {
                        continue;
                    }
                    let direct = &homs[&(alpha, gamma)];
                    let composite = homs[&(alpha, beta)].then(&homs[&(beta, gamma)])?;
                    if let Some(a) = (0..direct.dom_n()).find(|&a| direct.get(a) != composite.get(a)) {
                        return Err(invalid(format!(
                            "maps {alpha}->{beta}->{gamma} and {alpha}->{gamma} disagree at {a}"
                        )));
                    }
                }
            }
        }

        let mut offsets = Vec::with_capacity(k);
        let mut total = 0;
        for c in &components {
            offsets.push(total);
            total += c.n();
        }
        Ok(ResolvedSemilattice {
            meet: self.meet.clone(),
            components,
            homs,
            offsets,
        })
    }
}

/// The strong semilattice described by `spec`, verified to be dual.
pub fn build_strong_semilattice(spec: &SemilatticeSpec) -> Result<DualWeakStarBrace> {
    DualWeakStarBrace::new(spec.resolve()?.structure())
}

#[derive(Clone, Debug)]
pub struct SemilatticeDecomposition {
    /// Covering maps only; see [`SemilatticeSpec`].
    pub spec: SemilatticeSpec,
    /// Node of each element of the input.
    pub class_of: Vec<usize>,
    /// Position of each element within its component.
    pub coords: Vec<usize>,
    /// Members of each node, in increasing order.
    pub members: Vec<Vec<Elem>>,
    /// From the rebuilt structure to the input.
    pub iso_certificate: ElementMap,
    pub checks: Vec<NamedCheck>,
}

impl SemilatticeDecomposition {
    /// The resolved spec, with every comparable pair's map.
    pub fn resolved(&self) -> Result<ResolvedSemilattice> {
        self.spec.resolve()
    }
}

fn partitions_agree(a: &[usize], b: &[usize]) -> Verdict {
    let n = a.len();
    for x in 0..n {
        for y in x + 1..n {
            if (a[x] == a[y]) != (b[x] == b[y]) {
                return Err(Witness::predicate(
                    "d_classes_agree",
                    &[x, y],
                    "additive and multiplicative D-classes differ",
                ));
            }
        }
    }
    Ok(())
}

/// `a ↦ aa⋆ea` as a map from the members of `from` to positions in `to`.
fn projection_map(s: &StarBraceStructure, from: &[Elem], to: &[Elem], e: Elem) -> Result<Vec<Elem>, Witness> {
    from.iter()
        .map(|&a| {
            let img = s.mul(s.mul3(a, s.star(a), e), a);
            to.binary_search(&img).map_err(|_| {
                Witness::predicate("projection_map_target", &[a, e], "aa*ea leaves the target class")
            })
        })
        .collect()
}

fn covers(meet: &OpTable, alpha: usize, beta: usize) -> bool {
    alpha != beta
        && above(meet, alpha, beta)
        && !(0..meet.n()).any(|g| g != alpha && g != beta && above(meet, alpha, g) && above(meet, g, beta))
}

/// Splits a dual weak left ⋆-brace into a strong semilattice of square
/// braces and certifies the result by rebuilding it.
pub fn decompose(s: &DualWeakStarBrace) -> Result<SemilatticeDecomposition> {
    let n = s.n();
    let class_of = green_relations(&s.multiplicative()).d_class;
    partitions_agree(&class_of, &green_relations(&s.additive()).d_class).map_err(Error::Decomposition)?;
    let members = GreensData::classes(&class_of);
    let k = members.len();

    let mut meet = vec![usize::MAX; k * k];
    for a in 0..n {
        for b in 0..n {
            let (alpha, beta) = (class_of[a], class_of[b]);
            let c = class_of[s.mul(a, b)];
            let cell = &mut meet[alpha * k + beta];
            if *cell == usize::MAX {
                *cell = c;
            } else if *cell != c {
                return Err(Error::Decomposition(Witness::predicate(
                    "meet_well_defined",
                    &[a, b],
                    "class of ab depends on the representatives",
                )));
            }
        }
    }
    let meet = OpTable::from_flat(k, meet)?;
    check_meet(&meet).map_err(|e| {
        Error::Decomposition(Witness::predicate("meet_semilattice", &[], e.to_string()))
    })?;

    let mut coords = vec![0; n];
    for m in &members {
        for (i, &x) in m.iter().enumerate() {
            coords[x] = i;
        }
    }

    let components: Vec<DualWeakStarBrace> = members
        .iter()
        .enumerate()
        .map(|(alpha, m)| {
            let part = s.restrict(m).map_err(|e| {
                Error::Decomposition(Witness::predicate("component_closed", &[alpha], e.to_string()))
            })?;
            let part = DualWeakStarBrace::new(part).map_err(|e| {
                Error::Decomposition(Witness::predicate("component_dual", &[alpha], e.to_string()))
            })?;
            square_verdict(&part).map_err(|w| Error::Decomposition(w.renamed("component_square")))?;
            Ok(part)
        })
        .collect::<Result<_>>()?;

    let mut homs = BTreeMap::new();
    let mut independence: Verdict = Ok(());
    for alpha in 0..k {
        for beta in 0..k {
            if alpha == beta || !above(&meet, alpha, beta) {
                continue;
            }
            let targets = components[beta].projections();
            let mut per_e = targets.iter().map(|&e| {
                projection_map(s, &members[alpha], &members[beta], members[beta][e])
            });
            let first = per_e.next().expect("components have projections").map_err(Error::Decomposition)?;
            for (e, other) in targets.iter().skip(1).zip(per_e) {
                let other = other.map_err(Error::Decomposition)?;
                if independence.is_ok() && other != first {
                    independence = Err(Witness::predicate(
                        "hom_projection_independence",
                        &[alpha, beta, members[beta][*e]],
                        "aa*ea depends on the projection e",
                    ));
                }
            }
            if covers(&meet, alpha, beta) {
                homs.insert(
                    (alpha, beta),
                    ElementMap::new(members[alpha].len(), members[beta].len(), first)?,
                );
            }
        }
    }

    let spec = SemilatticeSpec {
        meet,
        components: components.iter().cloned().map(Component::Structure).collect(),
        homs,
    };
    let resolved = spec
        .resolve()
        .map_err(|e| Error::Decomposition(Witness::predicate("spec_valid", &[], e.to_string())))?;

    // Every comparable pair, not only the covering ones, must be given by
    // the same formula as the derived composite.
    let mut composites: Verdict = Ok(());
    'pairs: for (&(alpha, beta), f) in &resolved.homs {
        let e = *components[beta].projections().iter().next().expect("non-empty");
        let direct = projection_map(s, &members[alpha], &members[beta], members[beta][e])
            .map_err(Error::Decomposition)?;
        for (i, &x) in direct.iter().enumerate() {
            if let Err(w) = ensure_eq("hom_composites_agree", &[members[alpha][i]], x, f.get(i)) {
                composites = Err(w);
                break 'pairs;
            }
        }
    }

    let rebuilt = resolved.structure();
    let certificate: Vec<Elem> = (0..rebuilt.n())
        .map(|x| {
            let (alpha, i) = resolved.locate(x);
            members[alpha][i]
        })
        .collect();
    let iso_certificate = ElementMap::new(rebuilt.n(), n, certificate)?;
    let certified = check_isomorphism(&iso_certificate, &rebuilt, s)?;
    certified.clone().map_err(Error::Decomposition)?;

    let checks = vec![
        NamedCheck::new("d_classes_agree", Ok(())),
        NamedCheck::new("meet_well_defined", Ok(())),
        NamedCheck::new("hom_projection_independence", independence),
        NamedCheck::new("hom_composites_agree", composites),
        NamedCheck::new("iso_certificate", certified),
    ];
    Ok(SemilatticeDecomposition {
        spec,
        class_of,
        coords,
        members,
        iso_certificate,
        checks,
    })
}
