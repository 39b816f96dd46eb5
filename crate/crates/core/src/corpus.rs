//! Fixed collections of structures used by the verifiers and the test
//! suites: small skew braces, square braces, strong semilattices of square
//! braces, and regular ⋆-semigroups (constructed and seeded-random).

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::enumerate_skew_braces;
use crate::error::Result;
use crate::group::catalog;
use crate::search::regular_star_semigroups;
use crate::semilattice::{build_strong_semilattice, Component, SemilatticeSpec};
use crate::skew::{right_distributors_group, SkewBrace};
use crate::square::{build_square_brace, SquareBraceSpec};
use crate::star::DualWeakStarBrace;
use crate::structure::StarSemigroup;
use crate::table::{ElementMap, OpTable, UnaryTable};
use crate::Elem;

/// How a corpus structure was built.
#[derive(Clone, Debug)]
pub enum Origin {
    SkewBrace(SkewBrace),
    Square(SquareBraceSpec),
    Semilattice(SemilatticeSpec),
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub structure: DualWeakStarBrace,
    pub origin: Origin,
}

/// Every skew brace of order `1..=max_order`, named `skew-<order>-<index>`.
pub fn skew_brace_corpus(max_order: usize) -> Result<Vec<(String, SkewBrace)>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for (i, g) in enumerate_skew_braces(n)?.into_iter().enumerate() {
            out.push((format!("skew-{n}-{i}"), g));
        }
    }
    Ok(out)
}

fn brace(add: impl Fn(Elem, Elem) -> Elem, mul: impl Fn(Elem, Elem) -> Elem, n: usize) -> SkewBrace {
    let add = OpTable::from_fn(n, add).expect("in range");
    let mul = OpTable::from_fn(n, mul).expect("in range");
    SkewBrace::from_tables(add, mul).expect("a skew brace")
}

fn trivial_brace() -> SkewBrace {
    brace(|_, _| 0, |_, _| 0, 1)
}

fn b2() -> SkewBrace {
    brace(|a, b| a ^ b, |a, b| a ^ b, 2)
}

/// `Z/4` with `x ∘ y = x + y + 2xy`.
fn z4_radical() -> SkewBrace {
    brace(|a, b| (a + b) % 4, |a, b| (a + b + 2 * a * b) % 4, 4)
}

/// `Z/4` with both operations addition.
fn z4_trivial() -> SkewBrace {
    brace(|a, b| (a + b) % 4, |a, b| (a + b) % 4, 4)
}

/// The first skew brace of order 6 in which not every element is a right
/// distributor.
pub fn order_six_with_non_distributors() -> SkewBrace {
    enumerate_skew_braces(6)
        .expect("order 6 is within the catalog")
        .into_iter()
        .find(|g| right_distributors_group(g).len() < g.n())
        .expect("such a brace exists")
}

fn square(k: usize, group: SkewBrace) -> SquareBraceSpec {
    SquareBraceSpec {
        index_set_size: k,
        group,
    }
}

/// `(i, g, j) ↦ (f(i), h(g), f(j))` between square braces; a homomorphism
/// whenever `h` is a brace homomorphism.
pub fn square_hom(from: &SquareBraceSpec, to: &SquareBraceSpec, index_map: &[usize], group_map: &[Elem]) -> ElementMap {
    let table = (0..from.n())
        .map(|x| {
            let (i, g, j) = from.decode(x);
            to.encode(index_map[i], group_map[g], index_map[j])
        })
        .collect();
    ElementMap::new(from.n(), to.n(), table).expect("coordinates stay in range")
}

/// Square braces `I × G × I` for `|I| ∈ {1, 2}` and every skew brace `G`
/// of order at most 4.
pub fn square_corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (gname, g) in skew_brace_corpus(4)? {
        for k in 1..=2 {
            let spec = square(k, g.clone());
            out.push(CorpusEntry {
                name: format!("square-{k}x{gname}"),
                structure: build_square_brace(&spec)?,
                origin: Origin::Square(spec),
            });
        }
    }
    Ok(out)
}

fn chain(k: usize) -> OpTable {
    // Node 0 is the top.
    OpTable::from_fn(k, |a, b| a.max(b)).expect("in range")
}

fn vee() -> OpTable {
    // Nodes 0 and 1 are maximal, node 2 is their meet.
    OpTable::from_fn(3, |a, b| if a == b { a } else { 2 }).expect("in range")
}

fn constant_to(from: &SquareBraceSpec, to: &SquareBraceSpec, value: (usize, Elem, usize)) -> ElementMap {
    ElementMap::constant(from.n(), to.n(), to.encode(value.0, value.1, value.2)).expect("in range")
}

/// Strong semilattices over 2-chains, 3-chains and the three-node "V".
/// The last two use an order-6 component with non-distributors so that
/// both sides of the solution/distributor equivalence occur.
pub fn semilattice_specs() -> Vec<(String, SemilatticeSpec)> {
    let g6 = square(1, order_six_with_non_distributors());
    let one = square(1, trivial_brace());
    let rb2 = square(2, trivial_brace());
    let rb2b = square(2, b2());
    let b = square(1, b2());
    let zr = square(1, z4_radical());
    let zt2 = square(2, z4_trivial());
    let mod2 = [0, 1, 0, 1];
    let spec = |name: &str, meet: OpTable, comps: Vec<&SquareBraceSpec>, homs: Vec<((usize, usize), ElementMap)>| {
        (
            name.to_string(),
            SemilatticeSpec {
                meet,
                components: comps.into_iter().cloned().map(Component::Square).collect(),
                homs: homs.into_iter().collect::<BTreeMap<_, _>>(),
            },
        )
    };
    vec![
        spec(
            "chain2-point-over-b2",
            chain(2),
            vec![&one, &b],
            vec![((0, 1), constant_to(&one, &b, (0, 0, 0)))],
        ),
        spec(
            "chain2-rb2-over-b2",
            chain(2),
            vec![&rb2, &b],
            vec![((0, 1), constant_to(&rb2, &b, (0, 0, 0)))],
        ),
        spec(
            "chain2-square-b2-onto-b2",
            chain(2),
            vec![&rb2b, &b],
            vec![((0, 1), square_hom(&rb2b, &b, &[0, 0], &[0, 1]))],
        ),
        spec(
            "chain2-square-b2-identity",
            chain(2),
            vec![&rb2b, &rb2b],
            vec![((0, 1), square_hom(&rb2b, &rb2b, &[0, 1], &[0, 1]))],
        ),
        spec(
            "chain2-z4-radical-onto-b2",
            chain(2),
            vec![&zr, &b],
            vec![((0, 1), square_hom(&zr, &b, &[0], &mod2))],
        ),
        spec(
            "chain2-square-z4-onto-b2",
            chain(2),
            vec![&zt2, &b],
            vec![((0, 1), square_hom(&zt2, &b, &[0, 0], &mod2))],
        ),
        spec(
            "chain2-rb2-index-swap",
            chain(2),
            vec![&rb2, &rb2],
            vec![((0, 1), square_hom(&rb2, &rb2, &[1, 0], &[0]))],
        ),
        spec(
            "chain3-point-b2-square-b2",
            chain(3),
            vec![&one, &b, &rb2b],
            vec![
                ((0, 1), constant_to(&one, &b, (0, 0, 0))),
                ((1, 2), square_hom(&b, &rb2b, &[1], &[0, 1])),
            ],
        ),
        spec(
            "chain3-square-b2-b2-point",
            chain(3),
            vec![&rb2b, &b, &one],
            vec![
                ((0, 1), square_hom(&rb2b, &b, &[0, 0], &[0, 1])),
                ((1, 2), constant_to(&b, &one, (0, 0, 0))),
            ],
        ),
        spec(
            "chain3-rb2-rb2-b2",
            chain(3),
            vec![&rb2, &rb2, &b],
            vec![
                ((0, 1), square_hom(&rb2, &rb2, &[0, 1], &[0])),
                ((1, 2), constant_to(&rb2, &b, (0, 0, 0))),
            ],
        ),
        spec(
            "vee-b2-rb2-over-square-b2",
            vee(),
            vec![&b, &rb2, &rb2b],
            vec![
                ((0, 2), square_hom(&b, &rb2b, &[0], &[0, 1])),
                ((1, 2), square_hom(&rb2, &rb2b, &[0, 1], &[0])),
            ],
        ),
        spec(
            "vee-points-over-b2",
            vee(),
            vec![&one, &one, &b],
            vec![
                ((0, 2), constant_to(&one, &b, (0, 0, 0))),
                ((1, 2), constant_to(&one, &b, (0, 0, 0))),
            ],
        ),
        spec(
            "chain2-order6-over-rb2",
            chain(2),
            vec![&g6, &rb2],
            vec![((0, 1), constant_to(&g6, &rb2, (1, 0, 1)))],
        ),
        spec(
            "chain2-rb2-over-order6",
            chain(2),
            vec![&rb2, &g6],
            vec![((0, 1), constant_to(&rb2, &g6, (0, 0, 0)))],
        ),
        spec(
            "vee-z4-radical-b2-over-b2",
            vee(),
            vec![&zr, &b, &b],
            vec![
                ((0, 2), square_hom(&zr, &b, &[0], &mod2)),
                ((1, 2), square_hom(&b, &b, &[0], &[0, 1])),
            ],
        ),
    ]
}

pub fn semilattice_corpus() -> Result<Vec<CorpusEntry>> {
    semilattice_specs()
        .into_iter()
        .map(|(name, spec)| {
            Ok(CorpusEntry {
                name,
                structure: build_strong_semilattice(&spec)?,
                origin: Origin::Semilattice(spec),
            })
        })
        .collect()
}

/// Square braces followed by strong semilattices.
pub fn structure_corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = square_corpus()?;
    let spec = square(2, order_six_with_non_distributors());
    out.push(CorpusEntry {
        name: "square-2xorder6".to_string(),
        structure: build_square_brace(&spec)?,
        origin: Origin::Square(spec),
    });
    out.extend(semilattice_corpus()?);
    Ok(out)
}

/// Skew braces of order at most 6 viewed as ⋆-braces, then
/// [`structure_corpus`]: the default corpus for the deformation verifiers.
pub fn theorem_corpus() -> Result<Vec<CorpusEntry>> {
    let mut out: Vec<CorpusEntry> = skew_brace_corpus(6)?
        .into_iter()
        .map(|(name, g)| {
            Ok(CorpusEntry {
                name,
                structure: DualWeakStarBrace::new(g.as_star_brace())?,
                origin: Origin::SkewBrace(g),
            })
        })
        .collect::<Result<_>>()?;
    out.extend(structure_corpus()?);
    Ok(out)
}

/// Direct product, with `(a, b)` encoded as `a·|B| + b`.
pub fn product(a: &StarSemigroup, b: &StarSemigroup) -> StarSemigroup {
    let m = b.n();
    let n = a.n() * m;
    let op = OpTable::from_fn(n, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m)).expect("in range");
    let star = UnaryTable::from_fn(n, |x| a.star(x / m) * m + b.star(x % m)).expect("in range");
    StarSemigroup::new(op, star).expect("sizes agree")
}

/// The five-element Brandt semigroup: `0` and `(i, j)` for `i, j ∈ {0, 1}`
/// encoded as `1 + 2i + j`, with `(i,j)(k,l) = (i,l)` if `j = k`, else `0`.
pub fn brandt_b2() -> StarSemigroup {
    let op = OpTable::from_fn(5, |x, y| {
        if x == 0 || y == 0 {
            return 0;
        }
        let (i, j) = ((x - 1) / 2, (x - 1) % 2);
        let (k, l) = ((y - 1) / 2, (y - 1) % 2);
        if j == k {
            1 + 2 * i + l
        } else {
            0
        }
    })
    .expect("in range");
    let star = UnaryTable::from_fn(5, |x| if x == 0 { 0 } else { 1 + 2 * ((x - 1) % 2) + (x - 1) / 2 }).expect("in range");
    StarSemigroup::new(op, star).expect("sizes agree")
}

/// A semilattice of subsets of `{0, 1, 2}` closed under intersection, with
/// `⋆` the identity.
fn random_subset_semilattice(rng: &mut ChaCha8Rng) -> StarSemigroup {
    let mut sets: BTreeSet<u8> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(0..8u8)).collect();
    loop {
        let meets: Vec<u8> = sets.iter().flat_map(|&a| sets.iter().map(move |&b| a & b)).collect();
        let before = sets.len();
        sets.extend(meets);
        if sets.len() == before {
            break;
        }
    }
    let elems: Vec<u8> = sets.into_iter().collect();
    let pos = |v: u8| elems.iter().position(|&e| e == v).expect("closed under meets");
    let n = elems.len();
    let op = OpTable::from_fn(n, |a, b| pos(elems[a] & elems[b])).expect("in range");
    StarSemigroup::new(op, UnaryTable::identity(n).expect("n ≥ 1")).expect("sizes agree")
}

fn group_semigroup(g: &crate::group::Group) -> StarSemigroup {
    StarSemigroup::new(g.table.clone(), g.inverse.clone())
        .expect("sizes agree")
}

/// At least fifty regular ⋆-semigroups of order at most 8: the catalog
/// groups, the multiplicative reducts of corpus structures of order at most
/// 8, the Brandt semigroup, and seeded random choices among labelled small
/// ones, intersection semilattices and products.
pub fn star_semigroup_corpus(seed: u64) -> Result<Vec<(String, StarSemigroup)>> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for (i, g) in catalog(n).iter().enumerate() {
            out.push((format!("group-{n}-{i}"), group_semigroup(g)));
        }
    }
    for e in structure_corpus()? {
        if e.structure.n() <= 8 {
            out.push((format!("mul-{}", e.name), e.structure.multiplicative()));
            out.push((format!("add-{}", e.name), e.structure.additive()));
        }
    }
    out.push(("brandt-b2".to_string(), brandt_b2()));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small2 = regular_star_semigroups(2);
    let small4 = regular_star_semigroups(4);
    for i in 0..20 {
        let s = small4.choose(&mut rng).expect("non-empty");
        out.push((format!("random-4-{i}"), s.clone()));
    }
    for i in 0..10 {
        out.push((format!("random-semilattice-{i}"), random_subset_semilattice(&mut rng)));
    }
    for i in 0..10 {
        let a = small2.choose(&mut rng).expect("non-empty");
        let b = small4.choose(&mut rng).expect("non-empty");
        out.push((format!("random-product-{i}"), product(a, b)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        let squares = square_corpus().unwrap();
        assert_eq!(squares.len(), 14);
        let lattices = semilattice_corpus().unwrap();
        assert_eq!(lattices.len(), 15);
        let all = structure_corpus().unwrap();
        assert_eq!(all.len(), 30);
        let names: BTreeSet<&str> = all.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), all.len());
    }

    #[test]
    fn star_semigroups_are_regular_and_small() {
        let c = star_semigroup_corpus(7).unwrap();
        assert!(c.len() >= 50);
        for (name, s) in &c {
            assert!(s.n() <= 8, "{name}");
            assert!(s.check_regular_star().is_ok(), "{name}");
        }
    }

    #[test]
    fn seeded_corpus_is_reproducible() {
        let a = star_semigroup_corpus(3).unwrap();
        let b = star_semigroup_corpus(3).unwrap();
        assert_eq!(a, b);
    }
}
