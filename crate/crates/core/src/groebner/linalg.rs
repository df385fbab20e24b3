//! Sparse exact row reduction over the rationals, shared by the Koszul
//! homology engine and the degreewise kernel computations. Rows are sparse
//! `(column, coefficient)` lists sorted by column.

use crate::rat::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type SRow = Vec<(usize, Rat)>;

/// `a - c * b`, both sorted by column.
pub fn row_axpy(a: &SRow, c: &Rat, b: &SRow) -> SRow {
    let mut out = SRow::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(&b[j].1 * c)));
            j += 1;
        } else {
            let v = &a[i].1 - &(&b[j].1 * c);
            if !Zero::is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental reduced row echelon form. Pivot rows are kept monic with
/// strictly increasing leading columns.
#[derive(Default)]
pub struct Rref {
    pivots: BTreeMap<usize, SRow>,
}

impl Rref {
    pub fn new() -> Rref {
        Rref::default()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Reduce the leading entry against existing pivots until it is either
    /// exhausted or sits in a pivot-free column.
    pub fn reduce(&self, mut row: SRow) -> SRow {
        while let Some((c, coef)) = row.first().cloned() {
            match self.pivots.get(&c) {
                None => break,
                Some(p) => row = row_axpy(&row, &coef, p),
            }
        }
        row
    }

    /// Eliminate every pivot column occurring anywhere in the row.
    pub fn reduce_full(&self, mut row: SRow) -> SRow {
        loop {
            let hit = row
                .iter()
                .find(|(c, _)| self.pivots.contains_key(c))
                .cloned();
            match hit {
                None => return row,
                Some((c, coef)) => row = row_axpy(&row, &coef, &self.pivots[&c]),
            }
        }
    }

    /// Insert a row; returns `true` when it contributes a new pivot.
    pub fn insert(&mut self, row: SRow) -> bool {
        let mut row = self.reduce(row);
        let Some((c, lead)) = row.first().cloned() else {
            return false;
        };
        if !One::is_one(&lead) {
            let inv = lead.recip();
            for (_, v) in row.iter_mut() {
                *v = &*v * &inv;
            }
        }
        self.pivots.insert(c, row);
        true
    }

    /// Back-substitute so every pivot row mentions no other pivot column.
    /// After this, each pivot row reads `col = -(tail)` over free columns.
    pub fn finalize(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for c in cols {
            let row = self.pivots.remove(&c).unwrap();
            let tail: SRow = row[1..].to_vec();
            let tail = self.reduce_full(tail);
            let mut full = Vec::with_capacity(tail.len() + 1);
            full.push(row[0].clone());
            full.extend(tail);
            self.pivots.insert(c, full);
        }
    }

    /// The reduced pivot row for `col`, if `col` is a pivot.
    pub fn row(&self, col: usize) -> Option<&SRow> {
        self.pivots.get(&col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn row(entries: &[(usize, i64)]) -> SRow {
        entries.iter().map(|&(c, v)| (c, rat_int(v))).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let mut r = Rref::new();
        assert!(r.insert(row(&[(0, 1), (1, 2)])));
        assert!(r.insert(row(&[(1, 1), (2, 1)])));
        // dependent: row1 + 2*row2
        assert!(!r.insert(row(&[(0, 1), (1, 4), (2, 2)])));
        assert!(r.is_pivot(0) && r.is_pivot(1) && !r.is_pivot(2));
    }

    #[test]
    fn finalize_gives_expansions_over_free_columns() {
        let mut r = Rref::new();
        r.insert(row(&[(0, 1), (1, 1), (2, 1)]));
        r.insert(row(&[(1, 2), (2, 2), (3, 2)]));
        r.finalize();
        // pivots are cols 0 and 1; reduced rows must not mention each other
        let r0 = r.row(0).unwrap();
        assert!(r0.iter().all(|(c, _)| *c == 0 || *c >= 2));
        let r1 = r.row(1).unwrap();
        assert!(r1.iter().all(|(c, _)| *c == 1 || *c >= 2));
        // row for col 0: x0 = -(coeffs) * free; here x0 - x3 = 0 so tail is {3: -1}
        assert_eq!(r0, &row(&[(0, 1), (3, -1)]));
    }
}
