//! Closed-form Betti tables for the rank strata and their assembly into
//! cohomology series: hook-augmented partitions `P(a, b, alpha)`, Schur
//! dimensions by hook contents, the graded pieces `L_k` of the Tor algebra,
//! and the Poincaré polynomial of the isotropic-Grassmannian factor `A`
//! that tensors them into the full profile.
//!
//! Conventions. Homological degree `i` and internal degree `j` index Tor
//! cells; `k = j - i` indexes the pieces `L_k = ⊕_i Tor_i(..)_{i+k}`. For
//! `2r > n` the shapes act on `V` with `a = 2n - 2r + 1`,
//! `i = |alpha| + b(b+1)/2`, `j - i = b(n-r)`; for `0 < 2r <= n` they act
//! on the dual with `a = 2r - 1`, `i = |alpha| + b(b-1)/2`, `j - i = br`.
//! In both cases `j = |P|/2`. At the boundaries `r = n` and `r = 0` the
//! stratum collapses to a point and the whole Tor algebra is the exterior
//! algebra on the ambient quadratic space, all of it concentrated in `L_0`
//! with `j = i`.

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::splitrings::{cohomology_specialize, SplitKind};
use num_bigint::BigUint;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Weakly decreasing positive parts; the empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Partition {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The part at `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Conjugate partition: column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The hook-augmented shape: `b` rows `b + alpha_i`, then `a` rows of `b`,
/// then the transpose of `alpha`. Its size is `2|alpha| + b^2 + ab`.
pub fn p_partition(a: usize, b: usize, alpha: &Partition) -> Result<Partition> {
    if alpha.len() > b {
        return Err(Error::Shape(format!(
            "alpha has {} parts but must fit in b = {b} rows",
            alpha.len()
        )));
    }
    let mut parts: Vec<usize> = (0..b).map(|i| b + alpha.part(i)).collect();
    parts.extend(std::iter::repeat_n(b, a));
    parts.extend_from_slice(alpha.transpose().parts());
    let p = Partition::new(parts);
    debug_assert_eq!(p.size(), 2 * alpha.size() + b * b + a * b);
    Ok(p)
}

/// Dimension of the Schur functor of shape `lambda` on an `n`-dimensional
/// space, by the hook content formula; zero when the shape has more than
/// `n` rows. Computed in arbitrary precision, the result must fit in u64.
pub fn schur_dim(lambda: &Partition, n: usize) -> u64 {
    if lambda.len() > n {
        return 0;
    }
    let tr = lambda.transpose();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &li) in lambda.parts().iter().enumerate() {
        for j in 0..li {
            num *= BigUint::from(n + j - i);
            den *= BigUint::from(li - j + tr.part(j) - i - 1);
        }
    }
    let q = &num / &den;
    debug_assert_eq!(&q * &den, num);
    u64::try_from(q).expect("Schur dimension overflows u64")
}

/// An irreducible label: a shape acting on `V` (`dual = false`) or on `V*`.
/// The multiplicity is carried so consumers can assert it; every summand
/// produced by this module has multiplicity 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartitionRep {
    pub shape: Partition,
    pub dual: bool,
    pub multiplicity: u32,
}

impl fmt::Display for PartitionRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}{}", self.shape, if self.dual { "*" } else { "" })
    }
}

#[derive(Debug, Clone)]
pub struct LSummand {
    pub rep: PartitionRep,
    pub hom_degree: usize,
    pub internal_degree: usize,
    pub dim: u64,
}

/// All partitions with at most `max_len` parts, each part at most
/// `max_part`, in ascending lexicographic order starting from the empty one.
fn partitions_bounded(max_part: usize, max_len: usize) -> Vec<Partition> {
    fn extend(prefix: &mut Vec<usize>, max_len: usize, out: &mut Vec<Partition>) {
        if prefix.len() == max_len {
            return;
        }
        let hi = *prefix.last().expect("prefix is seeded nonempty");
        for part in 1..=hi {
            prefix.push(part);
            out.push(Partition::new(prefix[1..].to_vec()));
            extend(prefix, max_len, out);
            prefix.pop();
        }
    }
    let mut out = vec![Partition::empty()];
    if max_part == 0 || max_len == 0 {
        return out;
    }
    // seed with a sentinel "previous part" so the first row is bounded
    let mut prefix = vec![max_part];
    extend(&mut prefix, max_len + 1, &mut out);
    out
}

/// The summands of `L_k` for the `(n, r)` stratum, in deterministic order
/// (`b` ascending, `alpha` in lex order). The shape constraint `l(P) <= n`
/// (or `l(P^T) <= n` on the dual side at `r = 0`) makes every `L_k` a
/// finite list, so no truncation parameter is needed.
pub fn l_module(n: usize, r: usize, k: usize) -> Vec<LSummand> {
    assert!(r <= n && n >= 1);
    let mut out = Vec::new();
    let mut push = |shape: Partition, dual: bool, i: usize, j: usize, n: usize| {
        let dim = schur_dim(&shape, n);
        if dim > 0 {
            out.push(LSummand {
                rep: PartitionRep {
                    shape,
                    dual,
                    multiplicity: 1,
                },
                hom_degree: i,
                internal_degree: j,
                dim,
            });
        }
    };

    if r == 0 || r == n {
        // boundary: the whole exterior algebra sits in L_0 with j = i
        if k != 0 {
            return out;
        }
        let dual = r == 0;
        push(Partition::empty(), dual, 0, 0, n);
        for b in 1..=n {
            // l(P) = b + 1 + alpha_1 <= n on V; l(P^T) = b + alpha_1 <= n on V*
            let Some(cap) = (if dual {
                n.checked_sub(b)
            } else {
                n.checked_sub(b + 1)
            }) else {
                break;
            };
            for alpha in partitions_bounded(cap, b) {
                let p = p_partition(1, b, &alpha).expect("alpha fits in b rows");
                let shape = if dual { p.transpose() } else { p };
                let i = alpha.size() + b * (b + 1) / 2;
                push(shape, dual, i, i, n);
            }
        }
        return out;
    }

    let (a, step, dual) = if 2 * r > n {
        (2 * n - 2 * r + 1, n - r, false)
    } else {
        (2 * r - 1, r, true)
    };
    if !k.is_multiple_of(step) {
        return out;
    }
    let b = k / step;
    if b == 0 {
        push(Partition::empty(), dual, 0, 0, n);
        return out;
    }
    if b + a > n {
        return out;
    }
    let offset = if 2 * r > n {
        b * (b + 1) / 2
    } else {
        b * (b - 1) / 2
    };
    for alpha in partitions_bounded(n - a - b, b) {
        let p = p_partition(a, b, &alpha).expect("alpha fits in b rows");
        let i = alpha.size() + offset;
        let j = i + b * step;
        debug_assert_eq!(2 * j, p.size());
        push(p, dual, i, j, n);
    }
    out
}

/// Betti table assembled from the closed forms: cell `(i, j)` holds the
/// dimension of the homological-degree-`i`, internal-degree-`j` Tor piece.
pub struct JpwTable {
    pub n: usize,
    pub r: usize,
    pub max_i: usize,
    pub max_j: usize,
    pub summands: Vec<LSummand>,
    pub cells: BTreeMap<(usize, usize), u64>,
}

impl JpwTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.cells.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> Vec<((usize, usize), u64)> {
        self.cells.iter().map(|(&c, &d)| (c, d)).collect()
    }

    /// Alternating column sums: index `j`, value `sum_i (-1)^i cell(i, j)`.
    pub fn euler_by_degree(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.max_j + 1];
        for (&(i, j), &d) in &self.cells {
            let signed = i64::try_from(d).expect("Betti number fits i64");
            out[j] += if i % 2 == 0 { signed } else { -signed };
        }
        out
    }
}

/// Every summand with `i <= max_i` and `j <= max_j`, aggregated per cell.
/// The enumeration is exhaustive within the window: a shape with parameter
/// `b` has `i >= b(b±1)/2` and `j >= b·step`, so large `b` cannot reach it.
///
/// Convention: these are the Tor tables of the coordinate ring of the
/// *double cover* of the stratum. For `2r > n` cover and stratum agree; for
/// `2r <= n` the cover's coordinate ring carries an extra rank-one summand,
/// so the plain stratum's tables differ already in homological degree 0
/// (they lack the degree-one alternating classes — see the test
/// `plain_stratum_tor_differs_from_the_cover`). Every oracle comparison in
/// this crate therefore pins the cover's ideal.
pub fn betti_table_jpw(n: usize, r: usize, max_i: usize, max_j: usize) -> JpwTable {
    assert!(0 < r && r < n, "the closed forms cover the interior strata");
    let step = if 2 * r > n { n - r } else { r };
    let mut summands = Vec::new();
    for b in 0usize.. {
        let min_i = if 2 * r > n {
            b * (b + 1) / 2
        } else {
            b * b.saturating_sub(1) / 2
        };
        if min_i > max_i || b * step > max_j {
            break;
        }
        summands.extend(
            l_module(n, r, b * step)
                .into_iter()
                .filter(|s| s.hom_degree <= max_i && s.internal_degree <= max_j),
        );
    }
    let mut cells: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for s in &summands {
        *cells.entry((s.hom_degree, s.internal_degree)).or_insert(0) += s.dim;
    }
    JpwTable {
        n,
        r,
        max_i,
        max_j,
        summands,
        cells,
    }
}

/// Poincaré polynomial (cohomological grading) of the Grassmannian factor:
/// the maximal isotropic family of size `n - r` when `2r > n`, the type-D
/// factorization family of size `r` otherwise. Its coefficient total equals
/// the rank `s1` of the structure sheaf of the double cover.
pub fn a_poincare(n: usize, r: usize, budget: Budget) -> Result<Vec<i64>> {
    assert!(0 < r && r < n);
    let kind = if 2 * r > n {
        SplitKind::SFact { p: n - r, q: 0 }
    } else {
        SplitKind::DFact { p: r, q: 0 }
    };
    cohomology_specialize(&kind, budget)
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Ranks of the two finite flat covers over the stratum: `s0` for the full
/// splitting cover, `s1` for the double cover.
pub fn stratum_ranks(n: usize, r: usize) -> (u64, u64) {
    if 2 * r > n {
        let k = n - r;
        ((1u64 << k) * factorial(k), 1u64 << k)
    } else {
        let k = r;
        ((1u64 << (k - 1)) * factorial(k), 1u64 << (k - 1))
    }
}

/// The assembled cohomology data: `e_series[k][p]` is the dimension of the
/// degree-`p` Tor piece contributing to cohomological index `k = j - p`, and
/// `h_series` is its convolution with the `A` factor,
/// `H_k = ⊕_m A_m ⊗ E_{k-m}`.
///
/// Like [`betti_table_jpw`], the Tor input is that of the double cover's
/// coordinate ring; when `2r <= n` the plain stratum's series differs from
/// degree 0 on, and only the cover's version is pinned by the oracles.
pub struct CohomologyProfile {
    pub n: usize,
    pub r: usize,
    pub a_poincare: Vec<i64>,
    pub e_series: BTreeMap<usize, BTreeMap<usize, u64>>,
    pub h_series: BTreeMap<usize, BTreeMap<usize, u64>>,
    pub s0: u64,
    pub s1: u64,
    pub multiplicity_free: bool,
}

pub fn cohomology_series(
    n: usize,
    r: usize,
    max_k: usize,
    max_j: usize,
    budget: Budget,
) -> Result<CohomologyProfile> {
    if r == 0 || r >= n {
        return Err(Error::Unsupported(format!(
            "cohomology series needs 0 < r < n; at (n, r) = ({n}, {r}) the stratum \
             degenerates to a point whose coordinate ring is a plain exterior algebra"
        )));
    }
    let a = a_poincare(n, r, budget)?;
    let (s0, s1) = stratum_ranks(n, r);
    let a_total: i64 = a.iter().sum();
    if a_total != s1 as i64 {
        return Err(Error::violation(
            "a-factor-rank",
            format!("A-factor total {a_total} differs from s1 = {s1} at (n, r) = ({n}, {r})"),
        ));
    }
    let betti = betti_table_jpw(n, r, max_j, max_j);
    let mut e_series: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    for (&(p, j), &dim) in &betti.cells {
        let k = j - p;
        if k <= max_k {
            *e_series.entry(k).or_default().entry(p).or_insert(0) += dim;
        }
    }
    let mut h_series: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    for k in 0..=max_k {
        let mut row: BTreeMap<usize, u64> = BTreeMap::new();
        for (m, &am) in a.iter().enumerate().filter(|(_, &am)| am != 0) {
            if m > k {
                break;
            }
            if let Some(e) = e_series.get(&(k - m)) {
                for (&p, &dim) in e {
                    *row.entry(p).or_insert(0) += am as u64 * dim;
                }
            }
        }
        if !row.is_empty() {
            h_series.insert(k, row);
        }
    }
    let multiplicity_free = multiplicity_check_with(n, r, max_k, &a).is_ok();
    Ok(CohomologyProfile {
        n,
        r,
        a_poincare: a,
        e_series,
        h_series,
        s0,
        s1,
        multiplicity_free,
    })
}

fn label_of(s: &LSummand) -> (Partition, bool) {
    (s.rep.shape.clone(), s.rep.dual)
}

fn multiplicity_check_with(n: usize, r: usize, max_k: usize, a: &[i64]) -> Result<()> {
    let mut seen_anywhere: BTreeSet<(Partition, bool)> = BTreeSet::new();
    let mut labels_by_k: Vec<BTreeSet<(Partition, bool)>> = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let mut labels = BTreeSet::new();
        for s in l_module(n, r, k) {
            let label = label_of(&s);
            if !labels.insert(label.clone()) {
                return Err(Error::violation(
                    "l-module-multiplicity",
                    format!(
                        "label {} repeats inside L_{k} at (n, r) = ({n}, {r})",
                        s.rep
                    ),
                ));
            }
            if !seen_anywhere.insert(label) {
                return Err(Error::violation(
                    "tor-multiplicity",
                    format!(
                        "label {} appears in two different L_k at (n, r) = ({n}, {r})",
                        s.rep
                    ),
                ));
            }
        }
        labels_by_k.push(labels);
    }
    // consecutive assembled pieces share no labels: the A factor lives in
    // even degrees only, so adjacent k draw from opposite-parity L's
    let ltilde = |k: usize| -> BTreeSet<(Partition, bool)> {
        let mut set = BTreeSet::new();
        for (m, &am) in a.iter().enumerate() {
            if am != 0 && m <= k {
                set.extend(labels_by_k[k - m].iter().cloned());
            }
        }
        set
    };
    for k in 0..max_k {
        let cur = ltilde(k);
        let next = ltilde(k + 1);
        if let Some((shape, dual)) = cur.intersection(&next).next() {
            return Err(Error::violation(
                "parity-disjointness",
                format!(
                    "label S{}{} appears in both assembled pieces {k} and {} at (n, r) = ({n}, {r})",
                    shape,
                    if *dual { "*" } else { "" },
                    k + 1
                ),
            ));
        }
    }
    Ok(())
}

/// Verifies that no label repeats inside any `L_k` (k <= max_k), that no
/// label appears in two different `L_k`, and that consecutive assembled
/// pieces `L~_k`, `L~_{k+1}` share no labels. `Ok(())` is the certificate;
/// the error carries the first violation.
pub fn multiplicity_free_check(n: usize, r: usize, max_k: usize, budget: Budget) -> Result<()> {
    assert!(0 < r && r < n);
    let a = a_poincare(n, r, budget)?;
    multiplicity_check_with(n, r, max_k, &a)
}

/// Graded dimensions at the boundary strata `r = 0` and `r = n`, indexed by
/// homological degree: the exterior algebra on the ambient quadratic space,
/// whose piece at degree `i` must have binomial dimension.
pub fn boundary_dims(n: usize, r: usize) -> Vec<u64> {
    assert!(
        r == 0 || r == n,
        "interior strata go through betti_table_jpw"
    );
    let ambient = if r == 0 {
        n * (n + 1) / 2
    } else {
        n * (n - 1) / 2
    };
    let mut out = vec![0u64; ambient + 1];
    for s in l_module(n, r, 0) {
        assert_eq!(s.hom_degree, s.internal_degree);
        out[s.hom_degree] += s.dim;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn transpose_examples_and_involution() {
        assert_eq!(pt(&[3, 1]).transpose(), pt(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(pt(&[2, 2]).transpose(), pt(&[2, 2]));
        for parts in [vec![], vec![1], vec![4, 2, 1], vec![3, 3, 2], vec![5]] {
            let p = Partition::new(parts);
            assert_eq!(p.transpose().transpose(), p);
        }
    }

    #[test]
    fn hook_augmented_shapes() {
        assert_eq!(
            p_partition(3, 1, &Partition::empty()).unwrap(),
            pt(&[1, 1, 1, 1])
        );
        assert_eq!(p_partition(3, 1, &pt(&[1])).unwrap(), pt(&[2, 1, 1, 1, 1]));
        // (b + alpha_1, b, b copies) then alpha^T: size 2|alpha| + b^2 + ab
        let p = p_partition(1, 2, &pt(&[1])).unwrap();
        assert_eq!(p, pt(&[3, 2, 2, 1]));
        assert_eq!(p.size(), 2 + 4 + 2);
        // rectangle: P(a, b, empty) is b repeated b + a times
        assert_eq!(p_partition(2, 3, &Partition::empty()).unwrap(), pt(&[3; 5]));
        assert!(p_partition(1, 1, &pt(&[1, 1])).is_err());
    }

    #[test]
    fn schur_dims_by_hook_content() {
        for n in 1..=7 {
            assert_eq!(schur_dim(&pt(&[1]), n), n as u64);
        }
        assert_eq!(schur_dim(&pt(&[1, 1, 1, 1]), 5), 5);
        assert_eq!(schur_dim(&pt(&[2, 1, 1, 1, 1]), 5), 5);
        assert_eq!(schur_dim(&pt(&[1, 1, 1]), 2), 0);
        assert_eq!(schur_dim(&pt(&[2, 2, 2]), 3), 1); // determinant squared
        assert_eq!(schur_dim(&pt(&[2, 1]), 3), 8); // adjoint of sl_3
        assert_eq!(schur_dim(&Partition::empty(), 4), 1);
    }

    #[test]
    fn l_module_small_cases() {
        // principal Pfaffian generator at (4, 3)
        let l = l_module(4, 3, 1);
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].rep.shape, pt(&[1, 1, 1, 1]));
        assert!(!l[0].rep.dual);
        assert_eq!((l[0].hom_degree, l[0].internal_degree, l[0].dim), (1, 2, 1));
        // dual generators at (3, 1)
        let l31 = l_module(3, 1, 1);
        assert_eq!(l31.len(), 2);
        assert_eq!(l31[0].rep.shape, pt(&[1, 1]));
        assert!(l31[0].rep.dual);
        assert_eq!(
            (l31[0].hom_degree, l31[0].internal_degree, l31[0].dim),
            (0, 1, 3)
        );
        // off-step k vanishes
        assert!(l_module(5, 2, 3).is_empty());
        assert!(!l_module(5, 2, 4).is_empty());
    }

    #[test]
    fn betti_tables_match_hand_enumeration() {
        let t43 = betti_table_jpw(4, 3, 4, 6);
        assert_eq!(t43.nonzero(), vec![((0, 0), 1), ((1, 2), 1)]);

        let t54 = betti_table_jpw(5, 4, 4, 6);
        assert_eq!(
            t54.nonzero(),
            vec![((0, 0), 1), ((1, 2), 5), ((2, 3), 5), ((3, 5), 1)]
        );

        let t31 = betti_table_jpw(3, 1, 6, 8);
        assert_eq!(
            t31.nonzero(),
            vec![((0, 0), 1), ((0, 1), 3), ((1, 2), 3), ((1, 3), 1)]
        );

        let t41 = betti_table_jpw(4, 1, 8, 10);
        assert_eq!(
            t41.nonzero(),
            vec![
                ((0, 0), 1),
                ((0, 1), 6),
                ((1, 2), 15),
                ((1, 3), 10),
                ((2, 3), 10),
                ((2, 4), 15),
                ((3, 5), 6),
                ((3, 6), 1)
            ]
        );
        // Euler column sums of the (4, 1) table; the j = 3 column cancels
        assert_eq!(
            t41.euler_by_degree(),
            vec![1, 6, -15, 0, 15, -6, -1, 0, 0, 0, 0]
        );
    }

    #[test]
    fn truncation_is_sound() {
        let full = betti_table_jpw(4, 1, 8, 10);
        let window = betti_table_jpw(4, 1, 2, 6);
        for (&(i, j), &d) in &full.cells {
            if i <= 2 && j <= 6 {
                assert_eq!(window.get(i, j), d);
            }
        }
        for &(i, j) in window.cells.keys() {
            assert!(i <= 2 && j <= 6);
        }
    }

    #[test]
    fn a_factor_polynomials() {
        let b = Budget::from_env();
        assert_eq!(a_poincare(3, 2, b).unwrap(), vec![1, 0, 1]);
        assert_eq!(a_poincare(5, 4, b).unwrap(), vec![1, 0, 1]);
        assert_eq!(a_poincare(4, 1, b).unwrap(), vec![1]);
        assert_eq!(a_poincare(5, 2, b).unwrap(), vec![1, 0, 1]);
        // totals are the double-cover ranks
        assert_eq!(stratum_ranks(3, 2), (2, 2));
        assert_eq!(stratum_ranks(5, 2), (4, 2));
        assert_eq!(stratum_ranks(4, 1), (1, 1));
    }

    #[test]
    fn cohomology_profile_of_the_principal_pfaffian_stratum() {
        let prof = cohomology_series(4, 3, 4, 4, Budget::from_env()).unwrap();
        assert_eq!(prof.a_poincare, vec![1, 0, 1]);
        assert_eq!((prof.s0, prof.s1), (2, 2));
        assert!(prof.multiplicity_free);
        let e0: Vec<_> = prof.e_series[&0].iter().map(|(&p, &d)| (p, d)).collect();
        assert_eq!(e0, vec![(0, 1)]);
        let e1: Vec<_> = prof.e_series[&1].iter().map(|(&p, &d)| (p, d)).collect();
        assert_eq!(e1, vec![(1, 1)]);
        // H_k = A_0 E_k + A_2 E_{k-2}
        assert_eq!(prof.h_series[&2], prof.e_series[&0]);
        assert_eq!(prof.h_series[&3], prof.e_series[&1]);
        assert!(cohomology_series(4, 4, 2, 2, Budget::from_env()).is_err());
        assert!(cohomology_series(4, 0, 2, 2, Budget::from_env()).is_err());
    }

    #[test]
    fn multiplicity_and_parity_checks_pass() {
        let b = Budget::from_env();
        for (n, r) in [(4, 3), (5, 4), (3, 1), (4, 1)] {
            multiplicity_free_check(n, r, 6, b).unwrap();
        }
    }

    #[test]
    fn boundary_tables_are_binomial() {
        for n in 1..=4 {
            let skew = boundary_dims(n, n);
            let m = (n * (n - 1) / 2) as u64;
            for (i, &d) in skew.iter().enumerate() {
                assert_eq!(d, binomial(m, i as u64), "skew boundary n = {n}, i = {i}");
            }
            let sym = boundary_dims(n, 0);
            let m = (n * (n + 1) / 2) as u64;
            for (i, &d) in sym.iter().enumerate() {
                assert_eq!(d, binomial(m, i as u64), "sym boundary n = {n}, i = {i}");
            }
        }
    }

    /// The closed-form tables describe the double cover. At `(n, r) = (3, 1)`
    /// the plain stratum is the determinantal hypersurface `det g = 0`, whose
    /// Tor table — computed here by the Koszul oracle — is `(0,0) -> 1`,
    /// `(1,3) -> 1` and nothing else, while the cover's table already has
    /// three extra classes in bidegree `(0, 1)`.
    #[test]
    fn plain_stratum_tor_differs_from_the_cover() {
        use crate::groebner::{koszul_betti, KoszulInput};
        use crate::matrix::Matrix;
        use crate::poly::{MPoly, VarTable};

        let names = ["g11", "g12", "g13", "g22", "g23", "g33"];
        let pairs: Vec<(&str, u32)> = names.iter().map(|&s| (s, 1)).collect();
        let table = VarTable::new(&pairs);
        let idx = |i: usize, j: usize| {
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            [[0, 1, 2], [1, 3, 4], [2, 4, 5]][a][b]
        };
        let g = Matrix::from_fn(3, 3, |i, j| MPoly::var(&table, idx(i, j)));
        let gens = vec![g.det_laplace()];
        let plain = koszul_betti(&KoszulInput {
            table: &table,
            gens: &gens,
            koszul_vars: (0..6).collect(),
            max_i: 1,
            max_j: 3,
            multigraded: false,
        })
        .unwrap();
        assert_eq!(plain.nonzero(), vec![((0, 0), 1), ((1, 3), 1)]);

        let cover = betti_table_jpw(3, 1, 1, 3);
        assert_eq!(cover.get(0, 0), 1);
        assert_eq!(cover.get(0, 1), 3, "the cover's extra degree-one classes");
        assert_eq!(plain.get(0, 1), 0, "absent from the plain stratum");
    }
}
