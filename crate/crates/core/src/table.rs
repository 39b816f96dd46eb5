//! Operation tables on the dense carrier `{0, …, n-1}`.

use crate::error::{Error, Result};
use crate::witness::{ensure_eq, for_all, Verdict, Witness};
use crate::Elem;

fn validate(entries: &[Elem], n: usize) -> Result<()> {
    match entries.iter().position(|&v| v >= n) {
        Some(position) => Err(Error::IndexOutOfRange {
            value: entries[position],
            position,
            n,
        }),
        None => Ok(()),
    }
}

/// A total binary operation stored row-major: `get(a, b) = table[a * n + b]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    n: usize,
    table: Vec<Elem>,
}

impl OpTable {
    /// Builds a table from an `n × n` array of rows, validating shape and
    /// closure.
    pub fn new(n: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if rows.len() != n {
            return Err(Error::ShapeMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::ShapeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            table.extend_from_slice(row);
        }
        validate(&table, n)?;
        Ok(OpTable { n, table })
    }

    /// Builds a table from its row-major flattening.
    pub fn from_flat(n: usize, table: Vec<Elem>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if table.len() != n * n {
            return Err(Error::ShapeMismatch {
                expected: n * n,
                found: table.len(),
            });
        }
        validate(&table, n)?;
        Ok(OpTable { n, table })
    }

    /// Tabulates `f` over the carrier.
    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Result<Self> {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(f(a, b));
            }
        }
        Self::from_flat(n, table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.n + b]
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.table
    }

    pub fn row(&self, a: Elem) -> &[Elem] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    /// `(xy)z = x(yz)` for every triple; the witness is the lexicographically
    /// first offending triple.
    pub fn is_associative(&self) -> Verdict {
        for_all(self.n, |[x, y, z]| {
            ensure_eq(
                "associativity",
                &[x, y, z],
                self.get(x, self.get(y, z)),
                self.get(self.get(x, y), z),
            )
        })
    }

    pub fn is_commutative(&self) -> Verdict {
        for_all(self.n, |[x, y]| {
            ensure_eq("commutativity", &[x, y], self.get(y, x), self.get(x, y))
        })
    }

    pub fn is_idempotent(&self) -> Verdict {
        for_all(self.n, |[x]| ensure_eq("idempotency", &[x], x, self.get(x, x)))
    }

    /// The two-sided identity, if one exists.
    pub fn identity(&self) -> Option<Elem> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// Restriction to `elems`, relabelled by position. Fails if the subset
    /// is not closed.
    pub fn restrict(&self, elems: &[Elem]) -> Result<OpTable> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &e) in elems.iter().enumerate() {
            local[e] = i;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in elems {
            for &b in elems {
                let p = self.get(a, b);
                if local[p] == usize::MAX {
                    return Err(Error::InvalidSpec(format!(
                        "subset not closed: {a}*{b} = {p} leaves it"
                    )));
                }
                table.push(local[p]);
            }
        }
        OpTable::from_flat(m, table)
    }

    /// Relabels the table along the bijection `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[Elem]) -> OpTable {
        let mut table = vec![0; self.n * self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                table[perm[a] * self.n + perm[b]] = perm[self.get(a, b)];
            }
        }
        OpTable { n: self.n, table }
    }
}

/// A total unary operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryTable {
    table: Vec<Elem>,
}

impl UnaryTable {
    pub fn new(n: usize, table: Vec<Elem>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if table.len() != n {
            return Err(Error::ShapeMismatch {
                expected: n,
                found: table.len(),
            });
        }
        validate(&table, n)?;
        Ok(UnaryTable { table })
    }

    pub fn from_fn(n: usize, f: impl FnMut(Elem) -> Elem) -> Result<Self> {
        Self::new(n, (0..n).map(f).collect())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, (0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn get(&self, a: Elem) -> Elem {
        self.table[a]
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.table
    }

    pub fn restrict(&self, elems: &[Elem]) -> Result<UnaryTable> {
        let mut local = vec![usize::MAX; self.table.len()];
        for (i, &e) in elems.iter().enumerate() {
            local[e] = i;
        }
        let table = elems
            .iter()
            .map(|&e| {
                let v = self.table[e];
                if local[v] == usize::MAX {
                    Err(Error::InvalidSpec(format!(
                        "subset not closed: unary image of {e} is {v}"
                    )))
                } else {
                    Ok(local[v])
                }
            })
            .collect::<Result<Vec<_>>>()?;
        UnaryTable::new(elems.len(), table)
    }

    pub fn relabel(&self, perm: &[Elem]) -> UnaryTable {
        let mut table = vec![0; self.table.len()];
        for (a, &v) in self.table.iter().enumerate() {
            table[perm[a]] = perm[v];
        }
        UnaryTable { table }
    }
}

/// A total map between two finite carriers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementMap {
    cod_n: usize,
    table: Vec<Elem>,
}

impl ElementMap {
    pub fn new(dom_n: usize, cod_n: usize, table: Vec<Elem>) -> Result<Self> {
        if table.len() != dom_n {
            return Err(Error::ShapeMismatch {
                expected: dom_n,
                found: table.len(),
            });
        }
        validate(&table, cod_n)?;
        Ok(ElementMap { cod_n, table })
    }

    pub fn identity(n: usize) -> Self {
        ElementMap {
            cod_n: n,
            table: (0..n).collect(),
        }
    }

    pub fn constant(dom_n: usize, cod_n: usize, value: Elem) -> Result<Self> {
        Self::new(dom_n, cod_n, vec![value; dom_n])
    }

    pub fn dom_n(&self) -> usize {
        self.table.len()
    }

    pub fn cod_n(&self) -> usize {
        self.cod_n
    }

    #[inline]
    pub fn get(&self, a: Elem) -> Elem {
        self.table[a]
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.table
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &ElementMap) -> Result<ElementMap> {
        if self.cod_n != other.dom_n() {
            return Err(Error::SizeMismatch {
                left: self.cod_n,
                right: other.dom_n(),
            });
        }
        Ok(ElementMap {
            cod_n: other.cod_n,
            table: self.table.iter().map(|&a| other.get(a)).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        if self.cod_n != self.table.len() {
            return false;
        }
        let mut hit = vec![false; self.cod_n];
        for &v in &self.table {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<ElementMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.cod_n];
        for (a, &v) in self.table.iter().enumerate() {
            table[v] = a;
        }
        Some(ElementMap {
            cod_n: self.table.len(),
            table,
        })
    }
}

/// Composition of self-maps given as index vectors: `(f ∘ g)(x) = f(g(x))`.
pub(crate) fn compose(f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    g.iter().map(|&x| f[x]).collect()
}

pub(crate) fn is_permutation(f: &[Elem]) -> bool {
    let mut hit = vec![false; f.len()];
    f.iter().all(|&v| v < f.len() && !std::mem::replace(&mut hit[v], true))
}

/// Checks `f == g` pointwise, naming the first differing argument.
pub(crate) fn maps_equal(check: &str, context: &[Elem], f: &[Elem], g: &[Elem]) -> Verdict {
    for (x, (&a, &b)) in f.iter().zip(g).enumerate() {
        if a != b {
            let mut inputs = context.to_vec();
            inputs.push(x);
            return Err(Witness::mismatch(check, &inputs, a, b));
        }
    }
    Ok(())
}
