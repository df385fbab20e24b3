//! Buchberger's algorithm with the product and chain criteria, normal-pair
//! selection, and an explicit work budget so runaway computations surface as
//! errors instead of hangs. The result is the reduced Groebner basis, which
//! is canonical for the (ideal, order) pair, so downstream output is
//! deterministic regardless of generator order.

use super::Order;
use crate::error::{Error, Result};
use crate::poly::{MPoly, Mono, VarTable};
use crate::rat::Rat;
use num_traits::{One, Zero};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

/// Work budget for basis computations, counted in leading-term cancellations.
/// Reads `PERISPLIT_BUDGET` (an integer) when constructed from the
/// environment.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub limit: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 500_000_000;

    pub fn from_env() -> Budget {
        let limit = std::env::var("PERISPLIT_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(Self::DEFAULT_LIMIT);
        Budget { limit }
    }

    pub fn limited(limit: u64) -> Budget {
        Budget { limit }
    }
}

struct Work {
    used: u64,
    limit: u64,
}

impl Work {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded {
                steps: self.used,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

/// Terms sorted strictly descending under the active order.
type Terms = Vec<(Mono, Rat)>;

fn to_terms(p: &MPoly, table: &VarTable, order: Order) -> Terms {
    let mut v: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    v.sort_by(|(a, _), (b, _)| order.cmp(table, b, a));
    v
}

fn to_mpoly(terms: &Terms, table: &Arc<VarTable>) -> MPoly {
    let mut acc = MPoly::zero(table);
    for (m, c) in terms {
        acc = acc.add(&MPoly::monomial(table, m.clone(), c.clone()));
    }
    acc
}

/// `a - c * x^shift * b`, all term lists descending; linear merge.
fn sub_mul(a: &Terms, c: &Rat, shift: &Mono, b: &Terms, table: &VarTable, order: Order) -> Terms {
    let mut out = Terms::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = if i >= a.len() {
            false
        } else if j >= b.len() {
            true
        } else {
            let bm = b[j].0.mul(shift);
            match order.cmp(table, &a[i].0, &bm) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => {
                    let coeff = &a[i].1 - &(&b[j].1 * c);
                    if !Zero::is_zero(&coeff) {
                        out.push((bm, coeff));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
            }
        };
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else {
            out.push((b[j].0.mul(shift), -(&b[j].1 * c)));
            j += 1;
        }
    }
    out
}

/// Full normal form of `f` against `basis`: every term of the result is
/// irreducible by every basis leading term.
fn normal_form_terms(
    mut f: Terms,
    basis: &[Terms],
    table: &VarTable,
    order: Order,
    work: &mut Work,
) -> Result<Terms> {
    let mut rem: Terms = Vec::new();
    'outer: while let Some((lm, lc)) = f.first().cloned() {
        for g in basis {
            let (gm, gc) = &g[0];
            if gm.divides(&lm) {
                work.tick()?;
                let shift = gm.div_into(&lm);
                let c = &lc / gc;
                let tail = f;
                f = sub_mul(&tail, &c, &shift, g, table, order);
                continue 'outer;
            }
        }
        rem.push(f.remove(0));
    }
    Ok(rem)
}

fn s_poly(f: &Terms, g: &Terms, table: &VarTable, order: Order) -> Terms {
    let (fm, fc) = &f[0];
    let (gm, gc) = &g[0];
    let l = fm.lcm(gm);
    // (1/fc) x^(l-fm) f  -  (1/gc) x^(l-gm) g
    let shifted_f: Terms = f
        .iter()
        .map(|(m, c)| (m.mul(&fm.div_into(&l)), c / fc))
        .collect();
    sub_mul(&shifted_f, &(gc.recip()), &gm.div_into(&l), g, table, order)
}

/// A reduced Groebner basis: monic generators, every term of each generator
/// irreducible by the others' leading terms, sorted by leading term.
#[derive(Debug)]
pub struct GroebnerBasis {
    table: Arc<VarTable>,
    order: Order,
    gens: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn generators(&self) -> Vec<MPoly> {
        self.gens.iter().map(|g| to_mpoly(g, &self.table)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.gens.iter().map(|g| g[0].0.clone()).collect()
    }

    pub fn normal_form(&self, f: &MPoly) -> MPoly {
        let terms = to_terms(f, &self.table, self.order);
        let mut work = Work {
            used: 0,
            limit: u64::MAX,
        };
        let nf = normal_form_terms(terms, &self.gens, &self.table, self.order, &mut work)
            .expect("unlimited budget cannot be exceeded");
        to_mpoly(&nf, &self.table)
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Generators of `I` intersected with the subring on variables
    /// `[split, n)`. Only meaningful when `self` was computed under
    /// `Order::Block { split }`.
    pub fn eliminated_generators(&self, split: usize) -> Vec<MPoly> {
        assert_eq!(
            self.order,
            Order::Block { split },
            "elimination needs the matching block order"
        );
        self.gens
            .iter()
            .filter(|g| g.iter().all(|(m, _)| m.0[..split].iter().all(|&e| e == 0)))
            .map(|g| to_mpoly(g, &self.table))
            .collect()
    }
}

/// Buchberger's algorithm. Returns the reduced basis or
/// `Error::BudgetExceeded` when the cancellation budget runs out.
pub fn groebner(
    table: &Arc<VarTable>,
    order: Order,
    gens: &[MPoly],
    budget: Budget,
) -> Result<GroebnerBasis> {
    let mut work = Work {
        used: 0,
        limit: budget.limit,
    };
    let mut basis: Vec<Terms> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(to_terms(g, table, order));
        }
    }

    // Pair queue keyed by (lcm weighted degree, lcm exponents, i, j): the
    // normal selection strategy with a strict deterministic tiebreak.
    type Key = (u64, Box<[u16]>, usize, usize);
    let mut queue: BinaryHeap<Reverse<Key>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BinaryHeap<Reverse<Key>>, basis: &[Terms], i: usize, j: usize| {
        let l = basis[i][0].0.lcm(&basis[j][0].0);
        let deg = l.weighted_deg(table);
        queue.push(Reverse((deg, l.0, i, j)));
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            push_pair(&mut queue, &basis, i, j);
        }
    }

    while let Some(Reverse((_, _, i, j))) = queue.pop() {
        if done.contains(&(i, j)) {
            continue;
        }
        done.insert((i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        let (mi, mj) = (&fi[0].0, &fj[0].0);
        // Product criterion: coprime leading monomials.
        if mi.coprime(mj) {
            continue;
        }
        // Chain criterion: some k divides the lcm and both side pairs are
        // already settled.
        let l = mi.lcm(mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&l)
                && done.contains(&(k.min(i), k.max(i)))
                && done.contains(&(k.min(j), k.max(j)))
        });
        if chain {
            continue;
        }
        work.tick()?;
        let s = s_poly(fi, fj, table, order);
        let r = normal_form_terms(s, &basis, table, order, &mut work)?;
        if !r.is_empty() {
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                push_pair(&mut queue, &basis, k, new);
            }
        }
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another surviving one.
    let mut alive: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !alive[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j && alive[j] && basis[j][0].0.divides(&basis[i][0].0) {
                // On equal leading monomials keep the earlier generator.
                if basis[i][0].0 == basis[j][0].0 && i < j {
                    continue;
                }
                alive[i] = false;
                break;
            }
        }
    }
    let mut reduced: Vec<Terms> = basis
        .into_iter()
        .zip(alive)
        .filter_map(|(g, a)| a.then_some(g))
        .collect();

    // Interreduce tails to a fixpoint, then scale monic.
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<Terms> = reduced
                .iter()
                .enumerate()
                .filter(|&(j, _g)| j != i)
                .map(|(_j, g)| g.clone())
                .collect();
            let nf = normal_form_terms(reduced[i].clone(), &others, table, order, &mut work)?;
            assert!(
                !nf.is_empty(),
                "minimal generator reduced to zero during interreduction"
            );
            if nf != reduced[i] {
                reduced[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &mut reduced {
        let lc = g[0].1.clone();
        if !One::is_one(&lc) {
            let inv = lc.recip();
            for (_, c) in g.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
    reduced.sort_by(|a, b| order.cmp(table, &a[0].0, &b[0].0));

    Ok(GroebnerBasis {
        table: table.clone(),
        order,
        gens: reduced,
    })
}
