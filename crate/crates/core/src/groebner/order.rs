//! Monomial orders. All comparisons respect the variable weights from the
//! `VarTable`, so "graded" always means graded by weighted degree.

use crate::poly::{Mono, VarTable};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// Pure lexicographic on the stored variable order.
    Lex,
    /// Weighted degree first, then lexicographic. The default everywhere.
    GradedLex,
    /// Product of two graded-lex blocks: variables `[0, split)` dominate.
    /// Any monomial involving a block-one variable is larger than any
    /// monomial free of them, which makes this a valid elimination order
    /// for the first block.
    Block { split: usize },
}

impl Order {
    pub fn cmp(&self, table: &VarTable, a: &Mono, b: &Mono) -> Ordering {
        match *self {
            Order::Lex => a.0.cmp(&b.0),
            Order::GradedLex => {
                let (da, db) = (a.weighted_deg(table), b.weighted_deg(table));
                da.cmp(&db).then_with(|| a.0.cmp(&b.0))
            }
            Order::Block { split } => {
                let part = |m: &Mono, lo: usize, hi: usize| -> u64 {
                    (lo..hi)
                        .map(|i| m.0[i] as u64 * table.weight(i) as u64)
                        .sum()
                };
                let n = table.len();
                part(a, 0, split)
                    .cmp(&part(b, 0, split))
                    .then_with(|| a.0[..split].cmp(&b.0[..split]))
                    .then_with(|| part(a, split, n).cmp(&part(b, split, n)))
                    .then_with(|| a.0[split..].cmp(&b.0[split..]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarTable;

    fn m(exps: &[u16]) -> Mono {
        Mono::from_exps(exps)
    }

    #[test]
    fn graded_lex_respects_weights() {
        let t = VarTable::new(&[("x", 1), ("y", 3)]);
        // y (weight 3) > x^2 (weight 2)
        assert_eq!(
            Order::GradedLex.cmp(&t, &m(&[0, 1]), &m(&[2, 0])),
            Ordering::Greater
        );
        // x^3 and y tie on degree; lex breaks toward larger x exponent
        assert_eq!(
            Order::GradedLex.cmp(&t, &m(&[3, 0]), &m(&[0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let t = VarTable::unweighted(&["t", "x", "y"]);
        let o = Order::Block { split: 1 };
        // any power of t beats any monomial in x, y alone
        assert_eq!(o.cmp(&t, &m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        // within the t-free block, graded lex
        assert_eq!(o.cmp(&t, &m(&[0, 0, 2]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let t = VarTable::unweighted(&["x", "y"]);
        assert_eq!(
            Order::Lex.cmp(&t, &m(&[1, 0]), &m(&[0, 9])),
            Ordering::Greater
        );
    }
}
