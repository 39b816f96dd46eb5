//! Square skew left braces: the `I × G × I` construction over a skew brace
//! `G`, and its converse.
//!
//! ```text
//! (i,g,j)(k,h,l) = (i, gh, l)        (i,g,j)⋆ = (j, g⁻¹, i)
//! (i,g,j)+(k,h,l) = (k, g+h, j)      −(i,g,j) = (j, −g, i)
//! ```
//!
//! Conversely, in a square brace `S` the index set is `P(S)`; for a fixed
//! projection `e` the group is `H = {h : hh⋆ = h⋆h = e}` with identity `e`,
//! and `(i, g, j) ↦ igj` is an isomorphism onto `S`.

use crate::error::{Error, Result};
use crate::iso::{check_isomorphism, find_isomorphism};
use crate::skew::SkewBrace;
use crate::star::{square_verdict, DualWeakStarBrace};
use crate::structure::StarBraceStructure;
use crate::table::{ElementMap, OpTable, UnaryTable};
use crate::witness::{Verdict, Witness};
use crate::Elem;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareBraceSpec {
    pub index_set_size: usize,
    pub group: SkewBrace,
}

impl SquareBraceSpec {
    pub fn n(&self) -> usize {
        self.index_set_size * self.group.n() * self.index_set_size
    }

    /// `(i, g, j) ↦ i·|G||I| + g·|I| + j`.
    #[inline]
    pub fn encode(&self, i: usize, g: Elem, j: usize) -> Elem {
        let k = self.index_set_size;
        i * self.group.n() * k + g * k + j
    }

    #[inline]
    pub fn decode(&self, x: Elem) -> (usize, Elem, usize) {
        let k = self.index_set_size;
        let m = self.group.n();
        (x / (m * k), (x / k) % m, x % k)
    }
}

/// The square brace on `I × G × I`, verified to be dual.
pub fn build_square_brace(spec: &SquareBraceSpec) -> Result<DualWeakStarBrace> {
    if spec.index_set_size == 0 {
        return Err(Error::InvalidSpec("index set must be non-empty".into()));
    }
    let g = &spec.group;
    g.check()
        .map_err(|w| Error::InvalidSpec(format!("component is not a skew brace: {w}")))?;
    let n = spec.n();
    let mul = OpTable::from_fn(n, |a, b| {
        let (i, x, _) = spec.decode(a);
        let (_, y, l) = spec.decode(b);
        spec.encode(i, g.mul(x, y), l)
    })?;
    let add = OpTable::from_fn(n, |a, b| {
        let (_, x, j) = spec.decode(a);
        let (k, y, _) = spec.decode(b);
        spec.encode(k, g.add(x, y), j)
    })?;
    let neg = UnaryTable::from_fn(n, |a| {
        let (i, x, j) = spec.decode(a);
        spec.encode(j, g.neg(x), i)
    })?;
    let star = UnaryTable::from_fn(n, |a| {
        let (i, x, j) = spec.decode(a);
        spec.encode(j, g.inv(x), i)
    })?;
    DualWeakStarBrace::new(StarBraceStructure::new(add, neg, mul, star)?)
}

/// The recovered coordinates of a square brace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareComponents {
    pub spec: SquareBraceSpec,
    /// The projection used as the group identity.
    pub projection: Elem,
    /// `P(S)` in increasing order; index set position `i` is `index_set[i]`.
    pub index_set: Vec<Elem>,
    /// `H` in increasing order; group element `g` is `group_elements[g]`.
    pub group_elements: Vec<Elem>,
    /// `(i, g, j) ↦ igj`, from the rebuilt brace to the original.
    pub to_original: ElementMap,
    pub from_original: ElementMap,
}

/// Coordinates of `s` using its least projection.
pub fn square_to_components(s: &DualWeakStarBrace) -> Result<SquareComponents> {
    square_verdict(s).map_err(Error::NotSquare)?;
    let e = *s.projections().iter().next().expect("a non-empty carrier has a projection");
    square_to_components_at(s, e)
}

/// Coordinates of `s` using the projection `e`.
pub fn square_to_components_at(s: &DualWeakStarBrace, e: Elem) -> Result<SquareComponents> {
    square_verdict(s).map_err(Error::NotSquare)?;
    let index_set: Vec<Elem> = s.projections().into_iter().collect();
    if !index_set.contains(&e) {
        return Err(Error::InvalidSpec(format!("{e} is not a projection")));
    }
    let group_elements: Vec<Elem> = (0..s.n())
        .filter(|&h| s.mul(h, s.star(h)) == e && s.mul(s.star(h), h) == e)
        .collect();
    let h = s.restrict(&group_elements)?;
    let group = SkewBrace::from_star_brace(&h).map_err(Error::Decomposition)?;
    let spec = SquareBraceSpec {
        index_set_size: index_set.len(),
        group,
    };
    let built = build_square_brace(&spec)?;
    let psi: Vec<Elem> = (0..built.n())
        .map(|x| {
            let (i, g, j) = spec.decode(x);
            s.mul3(index_set[i], group_elements[g], index_set[j])
        })
        .collect();
    let to_original = ElementMap::new(built.n(), s.n(), psi)?;
    check_isomorphism(&to_original, &built, s)?.map_err(Error::Decomposition)?;
    let from_original = to_original.inverse().expect("isomorphisms are bijective");
    Ok(SquareComponents {
        spec,
        projection: e,
        index_set,
        group_elements,
        to_original,
        from_original,
    })
}

/// Runs the converse construction at every projection and checks that the
/// recovered skew braces are pairwise isomorphic.
pub fn projection_choice_independence(s: &DualWeakStarBrace) -> Verdict {
    let mut base: Option<StarBraceStructure> = None;
    for e in s.projections() {
        let c = square_to_components_at(s, e).map_err(|err| {
            Witness::predicate("projection_choice_independence", &[e], err.to_string())
        })?;
        let g = c.spec.group.as_star_brace();
        match &base {
            None => base = Some(g),
            Some(b) => {
                if find_isomorphism(b, &g).is_none() {
                    return Err(Witness::predicate(
                        "projection_choice_independence",
                        &[e],
                        "recovered group differs from the one at the least projection",
                    ));
                }
            }
        }
    }
    Ok(())
}
