use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;

use starbrace::corpus::{structure_corpus, CorpusEntry};
use starbrace::deform::{deform, right_distributors, right_distributors_three_term, Variant};
use starbrace::enumerate::enumerate_skew_braces;
use starbrace::format::{parse_pairmap, parse_structure, write_pairmap, write_structure};
use starbrace::iso::{check_isomorphism, find_isomorphism};
use starbrace::pairmap::PairMap;
use starbrace::semilattice::decompose;
use starbrace::skew::{associated_solution, right_distributors_group, SkewBrace};
use starbrace::square::SquareBraceSpec;
use starbrace::table::{ElementMap, OpTable};
use starbrace::ybe::{braid_relation, satisfies_ybe};

fn corpus() -> &'static [CorpusEntry] {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(|| structure_corpus().unwrap())
}

fn braces() -> &'static [SkewBrace] {
    static BRACES: OnceLock<Vec<SkewBrace>> = OnceLock::new();
    BRACES.get_or_init(|| (1..=6).flat_map(|n| enumerate_skew_braces(n).unwrap()).collect())
}

fn pairmap(max_n: usize) -> impl Strategy<Value = PairMap> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..n, n * n),
            proptest::collection::vec(0..n, n * n),
        )
            .prop_map(move |(l, r)| {
                PairMap::new(OpTable::from_flat(n, l).unwrap(), OpTable::from_flat(n, r).unwrap()).unwrap()
            })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn relabelled_entry() -> impl Strategy<Value = (usize, Vec<usize>)> {
    any::<Index>().prop_flat_map(|i| {
        let k = i.index(corpus().len());
        permutation(corpus()[k].structure.n()).prop_map(move |p| (k, p))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn action_conditions_agree_with_braid_relation(r in pairmap(3)) {
        prop_assert_eq!(satisfies_ybe(&r).is_ok(), braid_relation(&r).is_ok());
    }

    #[test]
    fn deformations_agree_with_braid_relation(i in any::<Index>(), z in any::<Index>(), v in 0..4usize) {
        let s = &corpus()[i.index(corpus().len())].structure;
        let r = deform(s, z.index(s.n()), Variant::ALL[v]);
        prop_assert_eq!(satisfies_ybe(&r).is_ok(), braid_relation(&r).is_ok());
    }

    #[test]
    fn pairmaps_survive_the_text_format(r in pairmap(4)) {
        prop_assert_eq!(parse_pairmap(&write_pairmap(&r)).unwrap(), r);
    }

    #[test]
    fn square_encoding_is_a_bijection(k in 1..5usize, i in any::<Index>()) {
        let g = &braces()[i.index(braces().len())];
        let spec = SquareBraceSpec { index_set_size: k, group: g.clone() };
        for x in 0..spec.n() {
            let (a, h, b) = spec.decode(x);
            prop_assert!(a < k && h < g.n() && b < k);
            prop_assert_eq!(spec.encode(a, h, b), x);
        }
    }

    #[test]
    fn group_distributors_form_a_subgroup(i in any::<Index>()) {
        let g = &braces()[i.index(braces().len())];
        let d = right_distributors_group(g);
        prop_assert!(d.contains(&g.identity()));
        for &x in &d {
            prop_assert!(d.contains(&g.inv(x)));
            for &y in &d {
                prop_assert!(d.contains(&g.mul(x, y)));
            }
        }
    }

    #[test]
    fn associated_solution_is_involutive_iff_additively_abelian(i in any::<Index>()) {
        let g = &braces()[i.index(braces().len())];
        let r = associated_solution(g);
        prop_assert_eq!(r.compose(&r).unwrap().is_identity(), g.is_additively_abelian());
        prop_assert!(braid_relation(&r).is_ok());
    }

    #[test]
    fn relabelling_preserves_everything((k, p) in relabelled_entry()) {
        let s = corpus()[k].structure.structure();
        let t = s.relabel(&p);
        let m = ElementMap::new(s.n(), s.n(), p.clone()).unwrap();
        prop_assert_eq!(check_isomorphism(&m, s, &t).unwrap(), Ok(()));
        let found = find_isomorphism(s, &t).unwrap();
        prop_assert_eq!(check_isomorphism(&found, s, &t).unwrap(), Ok(()));
        prop_assert!(find_isomorphism(&t, s).is_some());

        let ds: Vec<usize> = right_distributors(s).iter().map(|z| p[z]).collect();
        let mut ds = ds;
        ds.sort_unstable();
        let dt: Vec<usize> = right_distributors(&t).iter().collect();
        prop_assert_eq!(&ds, &dt);
        prop_assert_eq!(right_distributors_three_term(&t).into_iter().collect::<Vec<_>>(), dt);

        let dt = starbrace::star::DualWeakStarBrace::new(t.clone()).unwrap();
        let (a, b) = (decompose(&corpus()[k].structure).unwrap(), decompose(&dt).unwrap());
        prop_assert_eq!(a.spec.y_size(), b.spec.y_size());
        let mut sa: Vec<usize> = a.members.iter().map(Vec::len).collect();
        let mut sb: Vec<usize> = b.members.iter().map(Vec::len).collect();
        sa.sort_unstable();
        sb.sort_unstable();
        prop_assert_eq!(sa, sb);

        prop_assert_eq!(parse_structure(&write_structure(&t)).unwrap(), t);
    }
}
