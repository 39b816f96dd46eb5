//! Maps `S × S → S × S` in the left/right action encoding
//! `r(a, b) = (λ_a(b), ρ_b(a))`.

use crate::error::{Error, Result};
use crate::table::OpTable;
use crate::witness::{Verdict, Witness};
use crate::Elem;

/// A total map on pairs, stored as two `n × n` tables: `lambda[a][b] = λ_a(b)`
/// and `rho[b][a] = ρ_b(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairMap {
    lambda: OpTable,
    rho: OpTable,
}

impl PairMap {
    pub fn new(lambda: OpTable, rho: OpTable) -> Result<Self> {
        if lambda.n() != rho.n() {
            return Err(Error::SizeMismatch {
                left: lambda.n(),
                right: rho.n(),
            });
        }
        Ok(PairMap { lambda, rho })
    }

    /// Builds the map from a function returning the image pair of `(a, b)`.
    pub fn from_pair_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> (Elem, Elem)) -> Result<Self> {
        let mut lam = vec![0; n * n];
        let mut rho = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let (u, v) = f(a, b);
                lam[a * n + b] = u;
                rho[b * n + a] = v;
            }
        }
        PairMap::new(OpTable::from_flat(n, lam)?, OpTable::from_flat(n, rho)?)
    }

    pub fn identity(n: usize) -> Self {
        PairMap::from_pair_fn(n, |a, b| (a, b)).expect("identity is in range")
    }

    pub fn swap(n: usize) -> Self {
        PairMap::from_pair_fn(n, |a, b| (b, a)).expect("swap is in range")
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// `λ_a(b)`.
    #[inline]
    pub fn lambda(&self, a: Elem, b: Elem) -> Elem {
        self.lambda.get(a, b)
    }

    /// `ρ_b(a)`.
    #[inline]
    pub fn rho(&self, b: Elem, a: Elem) -> Elem {
        self.rho.get(b, a)
    }

    #[inline]
    pub fn apply(&self, a: Elem, b: Elem) -> (Elem, Elem) {
        (self.lambda(a, b), self.rho(b, a))
    }

    pub fn lambda_table(&self) -> &OpTable {
        &self.lambda
    }

    pub fn rho_table(&self) -> &OpTable {
        &self.rho
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PairMap) -> Result<PairMap> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        PairMap::from_pair_fn(self.n(), |a, b| {
            let (u, v) = other.apply(a, b);
            self.apply(u, v)
        })
    }

    /// Entrywise comparison; the witness names the first pair `(a, b)` on
    /// which the images differ, with the differing coordinate.
    pub fn equals(&self, other: &PairMap, check: &str) -> Verdict {
        if self.n() != other.n() {
            return Err(Witness::predicate(check, &[], "maps act on different carriers"));
        }
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                let (u, v) = self.apply(a, b);
                let (u2, v2) = other.apply(a, b);
                if u != u2 {
                    return Err(Witness::mismatch(check, &[a, b, 0], u2, u));
                }
                if v != v2 {
                    return Err(Witness::mismatch(check, &[a, b, 1], v2, v));
                }
            }
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.equals(&PairMap::identity(self.n()), "identity").is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_round_trips() {
        let r = PairMap::from_pair_fn(3, |a, b| ((a + b) % 3, (2 * a + b) % 3)).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(r.apply(a, b), ((a + b) % 3, (2 * a + b) % 3));
                assert_eq!(r.rho_table().get(b, a), (2 * a + b) % 3);
            }
        }
    }

    #[test]
    fn swap_squares_to_identity() {
        let s = PairMap::swap(4);
        assert!(s.compose(&s).unwrap().is_identity());
        assert!(!s.is_identity());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let f = PairMap::from_pair_fn(2, |a, _| (a, a)).unwrap();
        let g = PairMap::swap(2);
        // f∘g (0,1) = f(1,0) = (1,1); g∘f (0,1) = g(0,0) = (0,0).
        assert_eq!(f.compose(&g).unwrap().apply(0, 1), (1, 1));
        assert_eq!(g.compose(&f).unwrap().apply(0, 1), (0, 0));
    }

    #[test]
    fn equality_witness_names_pair_and_coordinate() {
        let w = PairMap::swap(2).equals(&PairMap::identity(2), "eq").unwrap_err();
        assert_eq!(w, Witness::mismatch("eq", &[0, 1, 0], 0, 1));
    }
}
