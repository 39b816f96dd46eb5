//! Counterexample records and the exhaustive tuple scans that produce them.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::Elem;

/// What a failed check wanted to see.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Expected {
    Element(Elem),
    Label(String),
}

/// A concrete counterexample: the check that failed, the tuple it failed on,
/// and the expected versus actual outcome.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Witness {
    pub check: String,
    pub inputs: Vec<Elem>,
    pub expected: Expected,
    pub actual: Option<Elem>,
}

impl Witness {
    /// An element-valued mismatch: `expected` was required, `actual` was found.
    pub fn mismatch(check: impl Into<String>, inputs: &[Elem], expected: Elem, actual: Elem) -> Self {
        Witness {
            check: check.into(),
            inputs: inputs.to_vec(),
            expected: Expected::Element(expected),
            actual: Some(actual),
        }
    }

    /// A predicate failure with a descriptive label.
    pub fn predicate(check: impl Into<String>, inputs: &[Elem], label: impl Into<String>) -> Self {
        Witness {
            check: check.into(),
            inputs: inputs.to_vec(),
            expected: Expected::Label(label.into()),
            actual: None,
        }
    }

    /// Same witness, renamed (used when a sub-check is re-exported under a
    /// more specific name).
    pub fn renamed(mut self, check: impl Into<String>) -> Self {
        self.check = check.into();
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.check, self.inputs)?;
        match (&self.expected, self.actual) {
            (Expected::Element(e), Some(a)) => write!(f, ": expected {e}, got {a}"),
            (Expected::Element(e), None) => write!(f, ": expected {e}"),
            (Expected::Label(l), Some(a)) => write!(f, ": {l} (got {a})"),
            (Expected::Label(l), None) => write!(f, ": {l}"),
        }
    }
}

/// Outcome of a boolean check: `Ok(())` or the first counterexample.
pub type Verdict = Result<(), Witness>;

/// Fails with a mismatch witness unless `expected == actual`.
#[inline]
pub fn ensure_eq(check: &str, inputs: &[Elem], expected: Elem, actual: Elem) -> Verdict {
    if expected == actual {
        Ok(())
    } else {
        Err(Witness::mismatch(check, inputs, expected, actual))
    }
}

/// Runs `f` on every `K`-tuple over `[0, n)` in lexicographic order and
/// stops at the first failure.
pub fn for_all<const K: usize>(n: usize, mut f: impl FnMut([Elem; K]) -> Verdict) -> Verdict {
    if n == 0 && K > 0 {
        return Ok(());
    }
    let mut t = [0; K];
    loop {
        f(t)?;
        let mut i = K;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Runs `f` on every `x` in `[0, n)` in parallel and returns the failure of
/// the least failing `x`, so the outcome matches a sequential scan.
pub fn for_each_par(n: usize, f: impl Fn(Elem) -> Verdict + Sync) -> Verdict {
    match (0..n).into_par_iter().find_map_first(|x| f(x).err()) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// A named check and its verdict, the unit every report is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: String,
    pub verdict: Verdict,
}

impl NamedCheck {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        NamedCheck {
            name: name.into(),
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_ok()
    }
}

/// First failing check in a list, if any.
pub fn first_failure(checks: &[NamedCheck]) -> Option<&NamedCheck> {
    checks.iter().find(|c| !c.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn for_all_visits_tuples_in_lexicographic_order() {
        let mut seen = Vec::new();
        for_all::<2>(2, |t| {
            seen.push(t);
            Ok(())
        })
        .unwrap();
        assert_eq!(seen, vec![[0, 0], [0, 1], [1, 0], [1, 1]]);
    }

    #[test]
    fn for_all_stops_at_first_failure() {
        let w = for_all::<3>(3, |[a, b, c]| {
            if a + b + c == 4 {
                Err(Witness::predicate("sum", &[a, b, c], "sum is four"))
            } else {
                Ok(())
            }
        })
        .unwrap_err();
        assert_eq!(w.inputs, vec![0, 2, 2]);
    }

    #[test]
    fn parallel_scan_reports_least_failure() {
        let v = for_each_par(100, |x| {
            if x % 7 == 3 {
                Err(Witness::predicate("mod", &[x], "residue three"))
            } else {
                Ok(())
            }
        });
        assert_eq!(v.unwrap_err().inputs, vec![3]);
        assert!(for_each_par(0, |_| Err(Witness::predicate("never", &[], "x"))).is_ok());
    }

    #[test]
    fn zero_arity_runs_once() {
        let mut count = 0;
        for_all::<0>(5, |_| {
            count += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(count, 1);
    }
}
