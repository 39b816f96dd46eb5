// Exhaustive search for group tables. Shared verbatim with the build script,
// so it only uses `std` and plain row-major `Vec<usize>` tables.

const FREE: usize = usize::MAX;

/// Every group table on `{0, …, n-1}` with identity `0`, row-major, in
/// lexicographic order. Backtracks over Latin squares and rejects a partial
/// table as soon as a fully determined associativity instance fails.
pub fn labeled_group_tables(n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 1);
    let mut t = vec![FREE; n * n];
    for x in 0..n {
        t[x] = x;
        t[x * n] = x;
    }
    // row_used[x] tracks values in row x, col_used[y] values in column y.
    let mut row_used = vec![vec![false; n]; n];
    let mut col_used = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            if t[x * n + y] != FREE {
                row_used[x][t[x * n + y]] = true;
                col_used[y][t[x * n + y]] = true;
            }
        }
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).collect();
    let mut state = LatinState {
        n,
        t,
        row_used,
        col_used,
        out: Vec::new(),
    };
    state.fill(0, &cells);
    state.out
}

struct LatinState {
    n: usize,
    t: Vec<usize>,
    row_used: Vec<Vec<bool>>,
    col_used: Vec<Vec<bool>>,
    out: Vec<Vec<usize>>,
}

impl LatinState {
    fn get(&self, a: usize, b: usize) -> usize {
        self.t[a * self.n + b]
    }

    /// Checks every associativity instance that uses cell `(x, y)` and is
    /// otherwise fully determined.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        let v = self.get(x, y);
        // (xy)c against x(yc)
        for c in 0..n {
            let l = self.get(v, c);
            let yc = self.get(y, c);
            if l != FREE && yc != FREE {
                let r = self.get(x, yc);
                if r != FREE && r != l {
                    return false;
                }
            }
        }
        // (ax)y against a(xy)
        for a in 0..n {
            let ax = self.get(a, x);
            if ax == FREE {
                continue;
            }
            let l = self.get(ax, y);
            let r = self.get(a, v);
            if l != FREE && r != FREE && l != r {
                return false;
            }
        }
        for p in 0..n {
            for q in 0..n {
                // (pq)y with pq = x, against p(qy)
                if self.get(p, q) == x {
                    let qy = self.get(q, y);
                    if qy != FREE {
                        let r = self.get(p, qy);
                        if r != FREE && r != v {
                            return false;
                        }
                    }
                }
                // x(qp) with qp = y, against (xq)p
                if self.get(q, p) == y {
                    let xq = self.get(x, q);
                    if xq != FREE {
                        let l = self.get(xq, p);
                        if l != FREE && l != v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn associative(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.get(self.get(a, b), c) == self.get(a, self.get(b, c))))
        })
    }

    fn fill(&mut self, k: usize, cells: &[(usize, usize)]) {
        if k == cells.len() {
            if self.associative() {
                self.out.push(self.t.clone());
            }
            return;
        }
        let (x, y) = cells[k];
        let n = self.n;
        for v in 0..n {
            if self.row_used[x][v] || self.col_used[y][v] {
                continue;
            }
            self.t[x * n + y] = v;
            self.row_used[x][v] = true;
            self.col_used[y][v] = true;
            if self.consistent(x, y) {
                self.fill(k + 1, cells);
            }
            self.row_used[x][v] = false;
            self.col_used[y][v] = false;
            self.t[x * n + y] = FREE;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn relabel_table(t: &[usize], n: usize, perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = perm[t[a * n + b]];
        }
    }
    out
}

/// Splits labelled tables (identity `0`) into relabelling orbits under the
/// permutations fixing `0` and keeps the lexicographically least table of
/// each orbit. Representatives come out in lexicographic order.
pub fn orbit_representatives(n: usize, mut tables: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    use std::collections::HashSet;
    tables.sort();
    let mut covered: HashSet<Vec<usize>> = HashSet::new();
    let mut reps = Vec::new();
    for t in tables {
        if covered.contains(&t) {
            continue;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            covered.insert(relabel_table(&t, n, &perm));
            if !next_permutation(&mut perm[1..]) {
                break;
            }
        }
        reps.push(t);
    }
    reps
}
