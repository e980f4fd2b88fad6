//! Rank and elementary divisors of integer matrices.
//!
//! Sparse elimination on unit pivots first, then a dense diagonalization of
//! whatever is left over arbitrary-precision integers.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sparse integer matrix stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: vec![BTreeMap::new(); rows] }
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        let e = self.entries[r].entry(c).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries[r].remove(&c);
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(|r| r.len()).sum()
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = SparseMatrix::zero(self.rows, other.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (&k, &a) in row {
                for (&c, &b) in &other.entries[k] {
                    out.add(r, c, a * b);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.is_empty())
    }
}

/// Rank and the non-unit diagonal entries of a diagonal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagonal {
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

impl Diagonal {
    /// Torsion as sorted prime powers.
    pub fn prime_powers(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.factors.iter().flat_map(prime_power_parts).collect();
        out.sort_unstable();
        out
    }
}

fn prime_power_parts(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs().to_u64().expect("torsion coefficient fits in u64");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

struct Work {
    rows: Vec<BTreeMap<usize, i64>>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl Work {
    /// Clears column `c` with the unit pivot at `(r, c)` and drops row `r`.
    /// Returns `false`, leaving the matrix untouched, if an entry would overflow.
    fn eliminate(&mut self, r: usize, c: usize) -> bool {
        let p = self.rows[r][&c];
        let pivot_row: Vec<(usize, i64)> = self.rows[r].iter().map(|(&k, &v)| (k, v)).collect();
        let others: Vec<usize> = self.col_rows[c].iter().copied().filter(|&x| x != r).collect();
        let mut updates = Vec::with_capacity(others.len());
        for &r2 in &others {
            let f = self.rows[r2][&c] * p;
            let mut changed = Vec::with_capacity(pivot_row.len());
            for &(k, v) in &pivot_row {
                let old = self.rows[r2].get(&k).copied().unwrap_or(0);
                let Some(new) = f.checked_mul(v).and_then(|fv| old.checked_sub(fv)) else {
                    return false;
                };
                changed.push((k, new));
            }
            updates.push((r2, changed));
        }
        for (r2, changed) in updates {
            for (k, new) in changed {
                if new == 0 {
                    self.rows[r2].remove(&k);
                    self.col_rows[k].remove(&r2);
                } else {
                    self.rows[r2].insert(k, new);
                    self.col_rows[k].insert(r2);
                }
            }
        }
        for (k, _) in pivot_row {
            self.col_rows[k].remove(&r);
        }
        self.rows[r].clear();
        true
    }
}

/// Rank and elementary divisors of `m`.
pub fn diagonalize(m: &SparseMatrix) -> Diagonal {
    let mut w = Work { rows: m.entries.clone(), col_rows: vec![BTreeSet::new(); m.cols] };
    for (r, row) in w.rows.iter().enumerate() {
        for &c in row.keys() {
            w.col_rows[c].insert(r);
        }
    }
    let mut rank = 0;
    let mut progress = true;
    'passes: while progress {
        progress = false;
        for r in 0..w.rows.len() {
            let pivot = w.rows[r]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(&c, _)| (w.col_rows[c].len(), c))
                .map(|(&c, _)| c);
            if let Some(c) = pivot {
                if !w.eliminate(r, c) {
                    break 'passes;
                }
                rank += 1;
                progress = true;
            }
        }
    }
    let live_rows: Vec<usize> = (0..w.rows.len()).filter(|&r| !w.rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..w.col_rows.len()).filter(|&c| !w.col_rows[c].is_empty()).collect();
    let col_index: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, &v) in &w.rows[r] {
            dense[i][col_index[c]] = BigInt::from(v);
        }
    }
    let diag = dense_diagonal(dense);
    rank += diag.len();
    let factors = diag.into_iter().filter(|d| !d.abs().is_one()).map(|d| d.abs()).collect();
    Diagonal { rank, factors }
}

/// Nonzero diagonal entries of a diagonal form reached by unimodular row and column operations.
fn dense_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for k in 0..rows.min(cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let Some((pi, pj)) = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = m[i][k].div_floor(&m[k][k]);
                for j in k..cols {
                    let t = &q * &m[k][j];
                    m[i][j] -= t;
                }
                if !m[i][k].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = m[k][j].div_floor(&m[k][k]);
                for row in m.iter_mut().skip(k) {
                    let t = &q * &row[k];
                    row[j] -= t;
                }
                if !m[k][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move the smallest remainder in row or column k onto the diagonal
            let in_col = (k + 1..rows).filter(|&i| !m[i][k].is_zero()).min_by_key(|&i| m[i][k].abs());
            let in_row = (k + 1..cols).filter(|&j| !m[k][j].is_zero()).min_by_key(|&j| m[k][j].abs());
            match (in_col, in_row) {
                (Some(i), Some(j)) if m[k][j].abs() < m[i][k].abs() => swap_cols(&mut m, k, j),
                (Some(i), _) => m.swap(k, i),
                (None, Some(j)) => swap_cols(&mut m, k, j),
                (None, None) => unreachable!("unclean pivot with nothing left to reduce"),
            }
        }
        out.push(m[k][k].clone());
    }
    out
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}
