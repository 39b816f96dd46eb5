//! Carriers with a binary operation and an involution, and the two-operation
//! structures built from them.

use crate::error::{Error, Result};
use crate::table::{OpTable, UnaryTable};
use crate::witness::{ensure_eq, for_all, Verdict};
use crate::Elem;

/// A semigroup table together with a unary operation `x ↦ x⋆`.
///
/// Construction only validates sizes; [`StarSemigroup::check_regular_star`]
/// decides whether the pair is a regular ⋆-semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarSemigroup {
    op: OpTable,
    star: UnaryTable,
}

impl StarSemigroup {
    pub fn new(op: OpTable, star: UnaryTable) -> Result<Self> {
        if op.n() != star.n() {
            return Err(Error::SizeMismatch {
                left: op.n(),
                right: star.n(),
            });
        }
        Ok(StarSemigroup { op, star })
    }

    pub fn n(&self) -> usize {
        self.op.n()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.op.get(a, b)
    }

    #[inline]
    pub fn star(&self, a: Elem) -> Elem {
        self.star.get(a)
    }

    pub fn op(&self) -> &OpTable {
        &self.op
    }

    pub fn star_table(&self) -> &UnaryTable {
        &self.star
    }

    /// Associativity, then `x x⋆ x = x`, `x⋆⋆ = x` and `(xy)⋆ = y⋆ x⋆`.
    pub fn check_regular_star(&self) -> Verdict {
        self.op.is_associative()?;
        let n = self.n();
        for_all(n, |[x]| {
            ensure_eq(
                "regularity",
                &[x],
                x,
                self.mul(self.mul(x, self.star(x)), x),
            )
        })?;
        for_all(n, |[x]| {
            ensure_eq("involution", &[x], x, self.star(self.star(x)))
        })?;
        for_all(n, |[x, y]| {
            ensure_eq(
                "anti_automorphism",
                &[x, y],
                self.mul(self.star(y), self.star(x)),
                self.star(self.mul(x, y)),
            )
        })
    }
}

/// Two binary and two unary tables on one carrier: `(S, +, ·, −, ⋆)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarBraceStructure {
    add: OpTable,
    neg: UnaryTable,
    mul: OpTable,
    star: UnaryTable,
}

impl StarBraceStructure {
    pub fn new(add: OpTable, neg: UnaryTable, mul: OpTable, star: UnaryTable) -> Result<Self> {
        let n = add.n();
        for m in [neg.n(), mul.n(), star.n()] {
            if m != n {
                return Err(Error::SizeMismatch { left: n, right: m });
            }
        }
        Ok(StarBraceStructure {
            add,
            neg,
            mul,
            star,
        })
    }

    pub fn n(&self) -> usize {
        self.add.n()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add.get(a, b)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg.get(a)
    }

    /// `a − b`, i.e. `a + (−b)`.
    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add.get(a, self.neg.get(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul.get(a, b)
    }

    #[inline]
    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul.get(self.mul.get(a, b), c)
    }

    #[inline]
    pub fn star(&self, a: Elem) -> Elem {
        self.star.get(a)
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn neg_table(&self) -> &UnaryTable {
        &self.neg
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn star_table(&self) -> &UnaryTable {
        &self.star
    }

    /// `(S, +, −)` as a star-semigroup.
    pub fn additive(&self) -> StarSemigroup {
        StarSemigroup {
            op: self.add.clone(),
            star: self.neg.clone(),
        }
    }

    /// `(S, ·, ⋆)` as a star-semigroup.
    pub fn multiplicative(&self) -> StarSemigroup {
        StarSemigroup {
            op: self.mul.clone(),
            star: self.star.clone(),
        }
    }

    /// Restriction to a subset closed under all four operations.
    pub fn restrict(&self, elems: &[Elem]) -> Result<StarBraceStructure> {
        StarBraceStructure::new(
            self.add.restrict(elems)?,
            self.neg.restrict(elems)?,
            self.mul.restrict(elems)?,
            self.star.restrict(elems)?,
        )
    }

    /// The same structure with element `a` renamed to `perm[a]`.
    pub fn relabel(&self, perm: &[Elem]) -> StarBraceStructure {
        StarBraceStructure {
            add: self.add.relabel(perm),
            neg: self.neg.relabel(perm),
            mul: self.mul.relabel(perm),
            star: self.star.relabel(perm),
        }
    }

    /// The one-element structure.
    pub fn trivial() -> StarBraceStructure {
        let op = OpTable::new(1, &[vec![0]]).expect("one-element table");
        let un = UnaryTable::new(1, vec![0]).expect("one-element table");
        StarBraceStructure {
            add: op.clone(),
            neg: un.clone(),
            mul: op,
            star: un,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xor() -> OpTable {
        OpTable::from_fn(2, |a, b| a ^ b).unwrap()
    }

    #[test]
    fn group_with_inverse_is_regular_star() {
        let s = StarSemigroup::new(xor(), UnaryTable::identity(2).unwrap()).unwrap();
        assert!(s.check_regular_star().is_ok());
    }

    #[test]
    fn swap_star_on_z2_breaks_regularity() {
        let s = StarSemigroup::new(xor(), UnaryTable::new(2, vec![1, 0]).unwrap()).unwrap();
        let w = s.check_regular_star().unwrap_err();
        assert_eq!(w.check, "regularity");
        assert_eq!(w.inputs, vec![0]);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let err = StarSemigroup::new(xor(), UnaryTable::identity(3).unwrap()).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { left: 2, right: 3 });
    }
}
