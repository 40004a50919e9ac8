//! Exact linear algebra over the rationals and the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coord::Rational;

/// Clear denominators row by row, giving an integer matrix of the same rank.
fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            row.iter().map(|r| (r * Rational::from_integer(lcm.clone())).to_integer()).collect()
        })
        .collect()
}

/// Rank of a dense rational matrix by fraction-free (Bareiss) elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = integer_rows(rows);
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Whether the given points of `Q^n` are affinely independent.
pub fn affinely_independent(points: &[Vec<Rational>]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let last = &points[points.len() - 1];
    let diffs: Vec<Vec<Rational>> = points[..points.len() - 1]
        .iter()
        .map(|p| p.iter().zip(last).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs) == diffs.len()
}

/// Outcome of an exact linear solve `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Solve `A x = b` exactly by Gauss-Jordan elimination over the rationals.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Solution {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < ncols {
        return Solution::Underdetermined;
    }
    Solution::Unique((0..ncols).map(|i| m[i][ncols].clone()).collect())
}

/// Sparse integer matrix stored by columns; entries sorted by row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix { rows, columns: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn push_column(&mut self, mut entries: Vec<(usize, i64)>) {
        entries.retain(|&(_, v)| v != 0);
        entries.sort_unstable_by_key(|&(r, _)| r);
        self.columns.push(entries);
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::zero(); self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                dense[r][c] = BigInt::from(v);
            }
        }
        dense
    }

    /// Product `self * other` as a dense integer matrix.
    pub fn multiply(&self, other: &SparseMatrix) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); other.cols()]; self.rows];
        for (c, col) in other.columns.iter().enumerate() {
            for &(k, v) in col {
                for &(r, w) in &self.columns[k] {
                    out[r][c] += BigInt::from(v) * BigInt::from(w);
                }
            }
        }
        out
    }

    /// Rank over the rationals.
    ///
    /// Column reduction keyed on the lowest nonzero row: each column is
    /// cleared against previously reduced columns with integer combinations
    /// and divided by its content, so entries stay exact and small.
    pub fn rank(&self) -> usize {
        let mut pivot_of: Vec<Option<Vec<(usize, BigInt)>>> = vec![None; self.rows];
        let mut rank = 0;
        for col in &self.columns {
            let mut v: Vec<(usize, BigInt)> = col.iter().map(|&(r, x)| (r, BigInt::from(x))).collect();
            while let Some((low, lowval)) = v.last().cloned() {
                let Some(p) = &pivot_of[low] else {
                    break;
                };
                let pval = &p.last().expect("pivot column is nonempty").1;
                let g = lowval.gcd(pval);
                let a = pval / &g;
                let b = &lowval / &g;
                v = combine(&v, &a, p, &b);
                normalize_content(&mut v);
            }
            if let Some(&(low, _)) = v.last() {
                pivot_of[low] = Some(v);
                rank += 1;
            }
        }
        rank
    }
}

/// `a * x - b * y` for sorted sparse vectors.
fn combine(
    x: &[(usize, BigInt)],
    a: &BigInt,
    y: &[(usize, BigInt)],
    b: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize_content(v: &mut [(usize, BigInt)]) {
    let g = v.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Nonzero invariant factors of an integer matrix (its Smith normal form
/// diagonal), each positive and dividing the next.
pub fn smith_invariants(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in (t + 1)..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let pivot = m[t].clone();
                for (x, p) in m[i][t..].iter_mut().zip(&pivot[t..]) {
                    *x -= &q * p;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    dirty = true;
                }
            }
            for j in (t + 1)..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = ((t + 1)..nrows)
                .flat_map(|i| ((t + 1)..ncols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_multiple_of(&m[t][t]));
            match bad {
                Some((i, _)) => {
                    let donor = m[i].clone();
                    for (x, v) in m[t][t..].iter_mut().zip(&donor[t..]) {
                        *x += v;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}
