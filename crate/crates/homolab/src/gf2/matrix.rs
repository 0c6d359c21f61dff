//! Bit-packed GF(2) matrices: rank, solving, and nullspaces via Gaussian
//! elimination with lowest-index pivoting, so every witness is canonical.

use crate::bits::BitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitSet>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![BitSet::new(cols); rows],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitSet>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Gf2Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        if value {
            self.data[r].insert(c);
        } else {
            self.data[r].remove(c);
        }
    }

    pub fn row(&self, r: usize) -> &BitSet {
        &self.data[r]
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].iter_ones() {
                t.data[c].insert(r);
            }
        }
        t
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &BitSet) -> BitSet {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = BitSet::new(self.rows);
        for r in 0..self.rows {
            if self.data[r].dot(v) {
                out.insert(r);
            }
        }
        out
    }

    /// True when `self * other` is the zero matrix.
    pub fn product_is_zero(&self, other: &Gf2Matrix) -> bool {
        debug_assert_eq!(self.cols, other.rows);
        let other_t = other.transpose();
        (0..self.rows).all(|r| (0..other.cols).all(|c| !self.data[r].dot(&other_t.data[c])))
    }

    pub fn rank(&self) -> usize {
        Solver::new(self).rank()
    }

    /// Least solution (free variables zero) of `self · w = b`, if any.
    pub fn solve(&self, b: &BitSet) -> Option<BitSet> {
        Solver::new(self).solve(b)
    }

    /// A basis of `{w : self · w = 0}`, one vector per free column, in
    /// ascending free-column order.
    pub fn nullspace(&self) -> Vec<BitSet> {
        Solver::new(self).nullspace_basis()
    }
}

/// Reusable elimination state for one matrix: solve many right-hand sides
/// without re-eliminating.
///
/// Stores the reduced rows together with the row transform `ops` such that
/// `ops · A = R`; feasibility of `A·w = b` is then a rank-consistency check
/// on `ops · b`.
pub struct Solver {
    cols: usize,
    reduced: Vec<BitSet>,
    ops: Vec<BitSet>,
    /// `(row, col)` of each pivot, ascending in both coordinates.
    pivots: Vec<(usize, usize)>,
}

impl Solver {
    pub fn new(m: &Gf2Matrix) -> Self {
        let rows = m.rows;
        let mut reduced: Vec<BitSet> = m.data.clone();
        let mut ops: Vec<BitSet> = (0..rows)
            .map(|i| BitSet::from_indices(rows, &[i]))
            .collect();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            let Some(pivot) = (next_row..rows).find(|&r| reduced[r].get(col)) else {
                continue;
            };
            reduced.swap(next_row, pivot);
            ops.swap(next_row, pivot);
            for r in 0..rows {
                if r != next_row && reduced[r].get(col) {
                    let (a, b) = split_two(&mut reduced, r, next_row);
                    a.xor_with(b);
                    let (a, b) = split_two(&mut ops, r, next_row);
                    a.xor_with(b);
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
            if next_row == rows {
                break;
            }
        }
        Solver {
            cols: m.cols,
            reduced,
            ops,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True when `A·w = b` has a solution.
    pub fn is_solvable(&self, b: &BitSet) -> bool {
        let rank = self.pivots.len();
        (rank..self.ops.len()).all(|r| !self.ops[r].dot(b))
    }

    /// Least solution (free variables zero), if consistent.
    pub fn solve(&self, b: &BitSet) -> Option<BitSet> {
        if !self.is_solvable(b) {
            return None;
        }
        let mut w = BitSet::new(self.cols);
        for &(row, col) in &self.pivots {
            if self.ops[row].dot(b) {
                w.insert(col);
            }
        }
        Some(w)
    }

    pub fn nullspace_basis(&self) -> Vec<BitSet> {
        let pivot_cols: std::collections::HashSet<usize> =
            self.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = BitSet::new(self.cols);
            v.insert(free);
            for &(row, col) in &self.pivots {
                if self.reduced[row].get(free) {
                    v.insert(col);
                }
            }
            basis.push(v);
        }
        basis
    }
}

fn split_two<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &mut T) {
    debug_assert!(a != b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &mut lo[b])
    }
}
