//! Staircase counting and weighted Hilbert series for monomial ideals
//! (applied to leading-term ideals of reduced Groebner bases).
//!
//! `quotient_dimension` walks the finite staircase directly, while
//! `hilbert_numerator` uses the standard colon-ideal recursion
//! `HN(I + (m)) = HN(I) - t^deg(m) * HN(I : m)`. The two are independent ways
//! of counting the same monomials, which the tests exploit.

use crate::poly::{Mono, VarTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

/// Dimension over Q of `R / (leading terms)`, i.e. the number of standard
/// monomials. Infinite exactly when some variable has no pure power among
/// the leading monomials.
pub fn quotient_dimension(lts: &[Mono], table: &VarTable) -> QuotientDim {
    let n = table.len();
    if lts.iter().any(|m| m.is_unit()) {
        return QuotientDim::Finite(0);
    }
    // Pure-power bound per variable.
    let mut bounds = vec![None::<u16>; n];
    for m in lts {
        let support: Vec<usize> = (0..n).filter(|&i| m.0[i] > 0).collect();
        if support.len() == 1 {
            let i = support[0];
            let e = m.0[i];
            bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
        }
    }
    if n > 0 && bounds.iter().any(|b| b.is_none()) {
        return QuotientDim::Infinite;
    }
    let bounds: Vec<u16> = bounds.into_iter().map(|b| b.unwrap_or(1)).collect();
    let mut count = 0u64;
    let mut exps = vec![0u16; n];
    loop {
        let candidate = Mono::from_exps(&exps);
        if !lts.iter().any(|m| m.divides(&candidate)) {
            count += 1;
        }
        // Odometer over the box [0, bounds).
        let mut i = 0;
        loop {
            if i == n {
                return QuotientDim::Finite(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort();
    gens.dedup();
    let mut keep: Vec<Mono> = Vec::new();
    'outer: for g in &gens {
        for h in &gens {
            if h != g && h.divides(g) {
                continue 'outer;
            }
        }
        keep.push(g.clone());
    }
    keep
}

fn poly_sub_shift(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] -= c;
    }
}

/// Numerator `HN(t)` of the Hilbert series of `R/(gens)` over the common
/// denominator `prod_i (1 - t^(w_i))`, as coefficients by degree.
pub fn hilbert_numerator(gens: &[Mono], table: &VarTable) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(|m| m.is_unit()) {
        return vec![0];
    }
    if gens.is_empty() {
        return vec![1];
    }
    // Pivot on a generator of maximal degree to keep the recursion shallow.
    let pivot = gens
        .iter()
        .enumerate()
        .max_by_key(|(_, m)| m.weighted_deg(table))
        .map(|(i, _)| i)
        .unwrap();
    let m = gens[pivot].clone();
    let rest: Vec<Mono> = gens
        .iter()
        .enumerate()
        .filter(|&(i, _g)| i != pivot)
        .map(|(_i, g)| g.clone())
        .collect();
    let colon: Vec<Mono> = rest
        .iter()
        .map(|g| {
            // g : m = g / gcd(g, m)
            Mono(
                g.0.iter()
                    .zip(m.0.iter())
                    .map(|(&a, &b)| a.saturating_sub(b))
                    .collect(),
            )
        })
        .collect();
    let mut num = hilbert_numerator(&rest, table);
    let colon_num = hilbert_numerator(&colon, table);
    poly_sub_shift(&mut num, &colon_num, m.weighted_deg(table) as usize);
    while num.last() == Some(&0) && num.len() > 1 {
        num.pop();
    }
    num
}

/// Coefficients of `numerator / prod_i (1 - t^(w_i))` through degree `dmax`.
pub fn hilbert_series_truncated(numerator: &[i64], weights: &[u32], dmax: usize) -> Vec<i64> {
    let mut series: Vec<i64> = numerator.iter().copied().take(dmax + 1).collect();
    series.resize(dmax + 1, 0);
    for &w in weights {
        // Multiply by 1/(1 - t^w): prefix sums with stride w.
        let w = w as usize;
        for d in w..=dmax {
            series[d] += series[d - w];
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner, Budget, Order};
    use crate::poly::{MPoly, VarTable};
    use proptest::prelude::*;

    fn m(exps: &[u16]) -> Mono {
        Mono::from_exps(exps)
    }

    #[test]
    fn staircase_of_a_complete_intersection() {
        // (x^2, y^3): 6 standard monomials; numerator (1-t^2)(1-t^3).
        let t = VarTable::unweighted(&["x", "y"]);
        let lts = vec![m(&[2, 0]), m(&[0, 3])];
        assert_eq!(quotient_dimension(&lts, &t), QuotientDim::Finite(6));
        let num = hilbert_numerator(&lts, &t);
        assert_eq!(num, vec![1, 0, -1, -1, 0, 1]);
        let hs = hilbert_series_truncated(&num, t.weights(), 8);
        assert_eq!(hs, vec![1, 2, 2, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn infinite_quotient_detected() {
        let t = VarTable::unweighted(&["x", "y"]);
        let lts = vec![m(&[2, 0])]; // no pure power of y
        assert_eq!(quotient_dimension(&lts, &t), QuotientDim::Infinite);
        // Hilbert series still makes sense degreewise: k[x,y]/(x^2).
        let num = hilbert_numerator(&lts, &t);
        let hs = hilbert_series_truncated(&num, t.weights(), 5);
        assert_eq!(hs, vec![1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn weighted_series_of_free_ring() {
        let t = VarTable::new(&[("a", 2), ("b", 3)]);
        let hs = hilbert_series_truncated(&[1], t.weights(), 12);
        // degrees: 0,2,3,4,5,6,... dims 1,0,1,1,1,1,2,1,2,2,2,2,3
        assert_eq!(hs, vec![1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3]);
    }

    #[test]
    fn full_pipeline_on_a_groebner_basis() {
        // Quotient by (x^2 - y, y^2) is 4-dimensional: 1, x, y, xy.
        let t = VarTable::unweighted(&["x", "y"]);
        let gens = vec![
            MPoly::parse("x^2 - y", &t).unwrap(),
            MPoly::parse("y^2", &t).unwrap(),
        ];
        let gb = groebner(&t, Order::GradedLex, &gens, Budget::from_env()).unwrap();
        let dim = quotient_dimension(&gb.leading_monomials(), &t);
        assert_eq!(dim, QuotientDim::Finite(4));
    }

    fn arb_monomial_ideal() -> impl Strategy<Value = Vec<Mono>> {
        proptest::collection::vec(proptest::collection::vec(0u16..4, 3), 1..6)
            .prop_map(|v| v.into_iter().map(|e| Mono::from_exps(&e)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        /// The staircase walk and the colon-ideal recursion count the same
        /// monomials: total dimension when finite, degreewise always.
        #[test]
        fn staircase_agrees_with_hilbert_series(gens in arb_monomial_ideal()) {
            let t = VarTable::unweighted(&["x", "y", "z"]);
            let num = hilbert_numerator(&gens, &t);
            // Degreewise brute-force count of standard monomials.
            let dmax = 9usize;
            let hs = hilbert_series_truncated(&num, t.weights(), dmax);
            let mut brute = vec![0i64; dmax + 1];
            for a in 0..=dmax as u16 {
                for b in 0..=dmax as u16 - a {
                    for c in 0..=dmax as u16 - a - b {
                        let cand = Mono::from_exps(&[a, b, c]);
                        if !gens.iter().any(|g| g.divides(&cand)) {
                            brute[(a + b + c) as usize] += 1;
                        }
                    }
                }
            }
            prop_assert_eq!(&hs, &brute);
            if let QuotientDim::Finite(d) = quotient_dimension(&gens, &t) {
                // All standard monomials have degree <= 3*3 here, so the
                // truncated series accounts for every one of them.
                let total: i64 = hs.iter().sum();
                prop_assert_eq!(d as i64, total);
            }
        }
    }
}
