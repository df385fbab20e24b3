//! Universal splitting rings for even polynomials and their factorization
//! refinements.
//!
//! For a monic even polynomial `f(u) = u^(2n) + a_2 u^(2n-2) + ... + a_2n`
//! over the graded base `Q[a]`, the signed splitting ring adjoins roots
//! `+/-eta_1 .. +/-eta_n` via the relations `a_2i = (-1)^i e_i(eta^2)`; the
//! type-D variant fixes a square root `alpha` of `a_2n` and splits off the
//! product of the roots; the generalized ring does the same for
//! `f(u) = u^(mn) + ...` with roots defined up to m-th (or (m/p)-th) roots of
//! unity. Factorization rings split `f` only partially, as
//! `(-1)^p g(u) g(-u) h(u)` with `g` of degree `p` and `h` even of degree
//! `2q`; the D-flavoured version additionally matches the constant term
//! against `alpha^2` and records `alpha = b_p * beta`.
//!
//! Every construction here is a concrete presentation: a weighted variable
//! table, the list of base variables, the list of fiber variables, and the
//! defining relations. Ranks are computed as the dimension of the fiber at
//! the origin of the base, which for these graded free modules equals the
//! module rank.

use crate::error::{Error, Result};
use crate::groebner::{
    groebner, hilbert_numerator, hilbert_series_truncated, quotient_dimension, Budget, Order,
    QuotientDim,
};
use crate::matrix::monic_discriminant;
use crate::poly::{elementary_symmetric, MPoly, UPoly, VarTable};
use crate::rat::rat_int;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    /// Full splitting of a monic degree-n polynomial (symmetric group).
    TypeA { n: usize },
    /// Signed splitting of a monic even degree-2n polynomial (hyperoctahedral
    /// group): the generalized ring with m = 2, p = 1.
    Signed { n: usize },
    /// Signed splitting with a distinguished square root `alpha` of the
    /// constant term (Weyl group of type D).
    TypeD { n: usize },
    /// Splitting of `u^(mn) + a_m u^(m(n-1)) + ...` by the wreath-type group
    /// G(m, p, n); requires p | m.
    Generalized { m: usize, p: usize, n: usize },
    /// Partial factorization `f = (-1)^p g(u) g(-u) h(u)` inside the signed
    /// base, `g` monic of degree p, `h` monic even of degree 2q.
    SFact { p: usize, q: usize },
    /// The same partial factorization over the type-D base: the constant
    /// term of `h` is `beta^2` and `alpha = b_p * beta`.
    DFact { p: usize, q: usize },
}

impl SplitKind {
    pub fn n(&self) -> usize {
        match *self {
            SplitKind::TypeA { n } | SplitKind::Signed { n } | SplitKind::TypeD { n } => n,
            SplitKind::Generalized { n, .. } => n,
            SplitKind::SFact { p, q } | SplitKind::DFact { p, q } => p + q,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            SplitKind::TypeA { n } => format!("A(n={n})"),
            SplitKind::Signed { n } => format!("B(n={n})"),
            SplitKind::TypeD { n } => format!("D(n={n})"),
            SplitKind::Generalized { m, p, n } => format!("G(m={m},p={p},n={n})"),
            SplitKind::SFact { p, q } => format!("BFact(p={p},q={q})"),
            SplitKind::DFact { p, q } => format!("DFact(p={p},q={q})"),
        }
    }

    /// Closed-form rank of the splitting ring over its base.
    pub fn expected_rank(&self) -> u64 {
        fn fact(n: usize) -> u64 {
            (1..=n as u64).product()
        }
        fn binom(n: usize, k: usize) -> u64 {
            if k > n {
                return 0;
            }
            let mut acc = 1u64;
            for i in 0..k {
                acc = acc * (n - i) as u64 / (i + 1) as u64;
            }
            acc
        }
        match *self {
            SplitKind::TypeA { n } => fact(n),
            SplitKind::Signed { n } => (1 << n) * fact(n),
            SplitKind::TypeD { n } => (1 << (n - 1)) * fact(n),
            SplitKind::Generalized { m, p, n } => (m as u64).pow(n as u32) * fact(n) / p as u64,
            SplitKind::SFact { p, q } => (1 << p) * binom(p + q, p),
            SplitKind::DFact { p, q } => {
                let n = p + q;
                if p < n {
                    (1 << p) * binom(n, p)
                } else {
                    1 << (n - 1)
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SplitPresentation {
    pub kind: SplitKind,
    pub table: Arc<VarTable>,
    /// Indices of the base variables (the `a`s, and `alpha` where present).
    pub base: Vec<usize>,
    /// Indices of the adjoined variables (roots or partial coefficients).
    pub fiber: Vec<usize>,
    pub gens: Vec<MPoly>,
}

struct RingBuilder {
    vars: Vec<(String, u32)>,
}

impl RingBuilder {
    fn new() -> RingBuilder {
        RingBuilder { vars: Vec::new() }
    }

    fn add(&mut self, name: String, weight: u32) -> usize {
        self.vars.push((name, weight));
        self.vars.len() - 1
    }

    fn build(&self) -> Arc<VarTable> {
        let refs: Vec<(&str, u32)> = self.vars.iter().map(|(n, w)| (n.as_str(), *w)).collect();
        VarTable::new(&refs)
    }
}

fn eta_table(n: usize) -> Arc<VarTable> {
    let mut rb = RingBuilder::new();
    for i in 1..=n {
        rb.add(format!("eta{i}"), 1);
    }
    rb.build()
}

/// `u^p + b_1 u^(p-1) + ... + b_p` with ascending coefficients.
fn monic_from_vars(table: &Arc<VarTable>, coeffs_desc: &[usize]) -> UPoly<MPoly> {
    let p = coeffs_desc.len();
    let mut coeffs: Vec<MPoly> = Vec::with_capacity(p + 1);
    for i in (0..p).rev() {
        coeffs.push(MPoly::var(table, coeffs_desc[i]));
    }
    coeffs.push(MPoly::one(table));
    UPoly::new(coeffs)
}

/// `(-1)^p g(-u)`, monic again.
fn signed_reflection(g: &UPoly<MPoly>, p: usize) -> UPoly<MPoly> {
    UPoly::new(
        (0..=p)
            .map(|k| {
                let c = g.coeff(k);
                if (k + p) % 2 == 1 {
                    c.neg()
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Even monic `h` of degree 2q with prescribed even coefficients (ascending
/// by power of u: constant first).
fn even_monic(table: &Arc<VarTable>, even_coeffs_low_to_high: &[MPoly], q: usize) -> UPoly<MPoly> {
    assert_eq!(even_coeffs_low_to_high.len(), q);
    let mut coeffs = vec![MPoly::zero(table); 2 * q + 1];
    for (j, c) in even_coeffs_low_to_high.iter().enumerate() {
        coeffs[2 * j] = c.clone();
    }
    coeffs[2 * q] = MPoly::one(table);
    UPoly::new(coeffs)
}

/// The product `(-1)^p g(u) g(-u) h(u)`; always even in u.
fn factored_product(
    table: &Arc<VarTable>,
    bvars: &[usize],
    h: &UPoly<MPoly>,
) -> Result<UPoly<MPoly>> {
    let p = bvars.len();
    let g = monic_from_vars(table, bvars);
    let gs = signed_reflection(&g, p);
    let prod = g.mul(&gs).mul(h);
    for (k, c) in prod.coeffs().iter().enumerate() {
        if k % 2 == 1 && !c.is_zero() {
            return Err(Error::violation(
                "factorization-even-coefficients",
                format!("odd coefficient u^{k} = {c} in (-1)^p g(u)g(-u)h(u)"),
            ));
        }
    }
    Ok(prod)
}

pub fn presentation(kind: &SplitKind) -> Result<SplitPresentation> {
    match *kind {
        SplitKind::TypeA { n } => {
            presentation(&SplitKind::Generalized { m: 1, p: 1, n }).map(|mut pr| {
                pr.kind = *kind;
                pr
            })
        }
        SplitKind::Signed { n } => {
            presentation(&SplitKind::Generalized { m: 2, p: 1, n }).map(|mut pr| {
                pr.kind = *kind;
                pr
            })
        }
        SplitKind::Generalized { m, p, n } => {
            if n == 0 || m == 0 || p == 0 || m % p != 0 {
                return Err(Error::Shape(format!(
                    "generalized splitting needs n, m, p >= 1 and p | m; got m={m} p={p} n={n}"
                )));
            }
            let mut rb = RingBuilder::new();
            let upper = if p == 1 { n } else { n - 1 };
            let mut base = Vec::new();
            for i in 1..=upper {
                base.push(rb.add(format!("a{}", m * i), (m * i) as u32));
            }
            let alpha = if p > 1 {
                let a = rb.add("alpha".into(), (m * n / p) as u32);
                base.push(a);
                Some(a)
            } else {
                None
            };
            let mut fiber = Vec::new();
            for i in 1..=n {
                fiber.push(rb.add(format!("eta{i}"), 1));
            }
            let table = rb.build();
            let etas_m: Vec<MPoly> = fiber
                .iter()
                .map(|&v| MPoly::var(&table, v).pow(m as u32))
                .collect();
            let mut gens = Vec::new();
            for i in 1..=if p == 1 { n } else { n - 1 } {
                let e = elementary_symmetric(&table, &etas_m, i);
                let sign = if i % 2 == 1 { -1 } else { 1 };
                let rhs = e.mul_rat(&rat_int(sign));
                gens.push(MPoly::var(&table, base[i - 1]).sub(&rhs));
            }
            if let Some(a) = alpha {
                let mut prod = MPoly::one(&table);
                for &v in &fiber {
                    prod = prod.mul(&MPoly::var(&table, v));
                }
                let prod_pow = prod.pow((m / p) as u32);
                gens.push(prod_pow.sub(&MPoly::var(&table, a)));
            }
            Ok(SplitPresentation {
                kind: *kind,
                table,
                base,
                fiber,
                gens,
            })
        }
        SplitKind::TypeD { n } => {
            if n == 0 {
                return Err(Error::Shape("type D splitting needs n >= 1".into()));
            }
            let mut rb = RingBuilder::new();
            let mut base = Vec::new();
            for i in 1..n {
                base.push(rb.add(format!("a{}", 2 * i), (2 * i) as u32));
            }
            let alpha = rb.add("alpha".into(), n as u32);
            base.push(alpha);
            let mut fiber = Vec::new();
            for i in 1..=n {
                fiber.push(rb.add(format!("eta{i}"), 1));
            }
            let table = rb.build();
            let etas_sq: Vec<MPoly> = fiber
                .iter()
                .map(|&v| MPoly::var(&table, v).pow(2))
                .collect();
            let mut gens = Vec::new();
            for i in 1..n {
                let e = elementary_symmetric(&table, &etas_sq, i);
                let sign = if i % 2 == 1 { -1 } else { 1 };
                gens.push(MPoly::var(&table, base[i - 1]).sub(&e.mul_rat(&rat_int(sign))));
            }
            let mut prod = MPoly::one(&table);
            for &v in &fiber {
                prod = prod.mul(&MPoly::var(&table, v));
            }
            gens.push(prod.sub(&MPoly::var(&table, alpha)));
            Ok(SplitPresentation {
                kind: *kind,
                table,
                base,
                fiber,
                gens,
            })
        }
        SplitKind::SFact { p, q } => {
            let n = p + q;
            if n == 0 {
                return Err(Error::Shape("factorization ring needs p + q >= 1".into()));
            }
            let mut rb = RingBuilder::new();
            let mut base = Vec::new();
            for i in 1..=n {
                base.push(rb.add(format!("a{}", 2 * i), (2 * i) as u32));
            }
            let mut bvars = Vec::new();
            for i in 1..=p {
                bvars.push(rb.add(format!("b{i}"), i as u32));
            }
            let mut cvars = Vec::new();
            for i in 1..=q {
                cvars.push(rb.add(format!("c{}", 2 * i), (2 * i) as u32));
            }
            let table = rb.build();
            // h = u^2q + c_2 u^(2q-2) + ... + c_2q
            let h_low: Vec<MPoly> = (0..q)
                .map(|j| MPoly::var(&table, cvars[q - 1 - j]))
                .collect();
            let h = even_monic(&table, &h_low, q);
            let prod = factored_product(&table, &bvars, &h)?;
            let mut gens = Vec::new();
            for i in 1..=n {
                let coeff = prod.coeff(2 * (n - i));
                gens.push(coeff.sub(&MPoly::var(&table, base[i - 1])));
            }
            let fiber = bvars.into_iter().chain(cvars).collect();
            Ok(SplitPresentation {
                kind: *kind,
                table,
                base,
                fiber,
                gens,
            })
        }
        SplitKind::DFact { p, q } => {
            let n = p + q;
            if n == 0 {
                return Err(Error::Shape("factorization ring needs p + q >= 1".into()));
            }
            let mut rb = RingBuilder::new();
            let mut base = Vec::new();
            for i in 1..n {
                base.push(rb.add(format!("a{}", 2 * i), (2 * i) as u32));
            }
            let alpha = rb.add("alpha".into(), n as u32);
            base.push(alpha);
            let mut bvars = Vec::new();
            for i in 1..=p {
                bvars.push(rb.add(format!("b{i}"), i as u32));
            }
            let mut cvars = Vec::new();
            for i in 1..q {
                cvars.push(rb.add(format!("c{}", 2 * i), (2 * i) as u32));
            }
            let beta = (q >= 1).then(|| rb.add("beta".into(), q as u32));
            let table = rb.build();
            let h = if q == 0 {
                UPoly::new(vec![MPoly::one(&table)])
            } else {
                // h = u^2q + c_2 u^(2q-2) + ... + c_(2q-2) u^2 + beta^2
                let mut low = vec![MPoly::var(&table, beta.unwrap()).pow(2)];
                for j in 1..q {
                    low.push(MPoly::var(&table, cvars[q - 1 - j]));
                }
                even_monic(&table, &low, q)
            };
            let prod = factored_product(&table, &bvars, &h)?;
            let mut gens = Vec::new();
            for i in 1..n {
                let coeff = prod.coeff(2 * (n - i));
                gens.push(coeff.sub(&MPoly::var(&table, base[i - 1])));
            }
            let alpha_p = MPoly::var(&table, alpha);
            gens.push(prod.coeff(0).sub(&alpha_p.mul(&alpha_p)));
            // alpha = b_p * beta, with absent factors read as 1.
            let bp = match bvars.last() {
                Some(&v) => MPoly::var(&table, v),
                None => MPoly::one(&table),
            };
            let be = match beta {
                Some(v) => MPoly::var(&table, v),
                None => MPoly::one(&table),
            };
            gens.push(alpha_p.sub(&bp.mul(&be)));
            let fiber: Vec<usize> = bvars.into_iter().chain(cvars).chain(beta).collect();
            Ok(SplitPresentation {
                kind: *kind,
                table,
                base,
                fiber,
                gens,
            })
        }
    }
}

/// The fiber of the presentation at the origin of the base: the same
/// relations with every base variable sent to zero, in a table on the fiber
/// variables alone.
pub fn fiber_ideal(pres: &SplitPresentation) -> (Arc<VarTable>, Vec<MPoly>) {
    let mut rb = RingBuilder::new();
    for &v in &pres.fiber {
        rb.add(pres.table.name(v).to_string(), pres.table.weight(v));
    }
    let ftable = rb.build();
    let mut images = vec![MPoly::zero(&ftable); pres.table.len()];
    for (new_idx, &v) in pres.fiber.iter().enumerate() {
        images[v] = MPoly::var(&ftable, new_idx);
    }
    let gens = pres
        .gens
        .iter()
        .map(|g| g.subst(&ftable, &images))
        .filter(|g| !g.is_zero())
        .collect();
    (ftable, gens)
}

#[derive(Debug, Clone)]
pub struct FiberData {
    pub rank: u64,
    /// Hilbert function of the fiber ring in its natural weights, trimmed of
    /// trailing zeros. For the cohomology comparison this is the "halved"
    /// grading; doubling every degree gives the topological one.
    pub hilbert: Vec<i64>,
}

pub fn fiber_data(kind: &SplitKind, budget: Budget) -> Result<FiberData> {
    let pres = presentation(kind)?;
    let (ftable, fgens) = fiber_ideal(&pres);
    let gb = groebner(&ftable, Order::GradedLex, &fgens, budget)?;
    let lts = gb.leading_monomials();
    let rank = match quotient_dimension(&lts, &ftable) {
        QuotientDim::Finite(d) => d,
        QuotientDim::Infinite => {
            return Err(Error::violation(
                "splitting-ring-finite-rank",
                format!("fiber of {} is not finite-dimensional", kind.label()),
            ))
        }
    };
    let num = hilbert_numerator(&lts, &ftable);
    let dmax = num.len().saturating_sub(1);
    let mut hilbert = hilbert_series_truncated(&num, ftable.weights(), dmax);
    while hilbert.last() == Some(&0) && hilbert.len() > 1 {
        hilbert.pop();
    }
    let total: i64 = hilbert.iter().sum();
    if total != rank as i64 || hilbert.iter().any(|&c| c < 0) {
        return Err(Error::violation(
            "splitting-ring-finite-rank",
            format!(
                "fiber Hilbert function {hilbert:?} inconsistent with staircase rank {rank} for {}",
                kind.label()
            ),
        ));
    }
    Ok(FiberData { rank, hilbert })
}

/// Rank of the splitting ring over its base (dimension of the fiber at the
/// origin).
pub fn rank(kind: &SplitKind, budget: Budget) -> Result<u64> {
    fiber_data(kind, budget).map(|d| d.rank)
}

/// Poincaré polynomial of the universal fiber in the cohomological grading,
/// where every generator carries twice its natural weight. Doubling all
/// weights doubles each monomial's degree without disturbing the monomial
/// order, so this is the fiber Hilbert function with its coefficients moved
/// to the even positions.
pub fn cohomology_specialize(kind: &SplitKind, budget: Budget) -> Result<Vec<i64>> {
    let fd = fiber_data(kind, budget)?;
    let mut out = vec![0i64; 2 * fd.hilbert.len().saturating_sub(1) + 1];
    for (d, &c) in fd.hilbert.iter().enumerate() {
        out[2 * d] = c;
    }
    Ok(out)
}

/// The discriminant package on the even base ring: the table
/// `Q[a_2, ..., a_2n, alpha]`, with
/// `dt = disc of the half polynomial f~ (f(u) = f~(u^2))`,
/// `delta = 4^n a_2n dt`, and `delta_bar = 4^n alpha dt`.
pub struct Discriminants {
    pub table: Arc<VarTable>,
    pub avars: Vec<usize>,
    pub alpha: usize,
    pub delta_tilde: MPoly,
    pub delta: MPoly,
    pub delta_bar: MPoly,
}

pub fn discriminants(n: usize) -> Discriminants {
    assert!(n >= 1);
    let mut rb = RingBuilder::new();
    let avars: Vec<usize> = (1..=n)
        .map(|i| rb.add(format!("a{}", 2 * i), (2 * i) as u32))
        .collect();
    let alpha = rb.add("alpha".into(), n as u32);
    let table = rb.build();
    // f~(v) = v^n + a_2 v^(n-1) + ... + a_2n, ascending coefficients.
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in (1..=n).rev() {
        coeffs.push(MPoly::var(&table, avars[i - 1]));
    }
    coeffs.push(MPoly::one(&table));
    let ftilde = UPoly::new(coeffs);
    let delta_tilde = monic_discriminant(&ftilde);
    let four_n = MPoly::int(&table, 1i64 << (2 * n));
    let delta = four_n
        .mul(&MPoly::var(&table, avars[n - 1]))
        .mul(&delta_tilde);
    let delta_bar = four_n.mul(&MPoly::var(&table, alpha)).mul(&delta_tilde);
    Discriminants {
        table,
        avars,
        alpha,
        delta_tilde,
        delta,
        delta_bar,
    }
}

/// Substitute the signed-splitting values `a_2i -> (-1)^i e_i(eta^2)` (and
/// `alpha -> eta_1 ... eta_n`) into a polynomial on the discriminant table,
/// landing in `Q[eta_1..eta_n]`.
pub fn into_split_ring(disc: &Discriminants, f: &MPoly, n: usize) -> MPoly {
    let etable = eta_table(n);
    let etas_sq: Vec<MPoly> = (0..n).map(|v| MPoly::var(&etable, v).pow(2)).collect();
    let mut images = vec![MPoly::zero(&etable); disc.table.len()];
    for (i, &av) in disc.avars.iter().enumerate() {
        let e = elementary_symmetric(&etable, &etas_sq, i + 1);
        let sign = if (i + 1) % 2 == 1 { -1 } else { 1 };
        images[av] = e.mul_rat(&rat_int(sign));
    }
    let mut prod = MPoly::one(&etable);
    for v in 0..n {
        prod = prod.mul(&MPoly::var(&etable, v));
    }
    images[disc.alpha] = prod;
    f.subst(&etable, &images)
}

/// The type-D counterpart of [`into_split_ring`]: `a_2i -> (-1)^i e_i(eta^2)`
/// for `i <= n-1` only, while `a_2n -> (eta_1...eta_n)^2` (the type-D
/// identification `a_2n = alpha^2`) and `alpha -> eta_1...eta_n`.
pub fn into_split_ring_d(disc: &Discriminants, f: &MPoly, n: usize) -> MPoly {
    let etable = eta_table(n);
    let etas_sq: Vec<MPoly> = (0..n).map(|v| MPoly::var(&etable, v).pow(2)).collect();
    let mut images = vec![MPoly::zero(&etable); disc.table.len()];
    for (i, &av) in disc.avars.iter().enumerate().take(n - 1) {
        let e = elementary_symmetric(&etable, &etas_sq, i + 1);
        let sign = if (i + 1) % 2 == 1 { -1 } else { 1 };
        images[av] = e.mul_rat(&rat_int(sign));
    }
    let mut prod = MPoly::one(&etable);
    for v in 0..n {
        prod = prod.mul(&MPoly::var(&etable, v));
    }
    images[disc.avars[n - 1]] = prod.mul(&prod);
    images[disc.alpha] = prod;
    f.subst(&etable, &images)
}

/// `4^n * (-1)^n * e_n(eta^2) * prod_(i<j) (eta_i^2 - eta_j^2)^2`: the value
/// of `delta` after the signed-splitting substitution. (The `(-1)^n` comes
/// from `a_2n -> (-1)^n e_n(eta^2)`.)
pub fn split_ring_delta_formula(n: usize) -> MPoly {
    let etable = eta_table(n);
    let etas_sq: Vec<MPoly> = (0..n).map(|v| MPoly::var(&etable, v).pow(2)).collect();
    let en = elementary_symmetric(&etable, &etas_sq, n);
    let mut acc = en.mul_rat(&rat_int(
        if n % 2 == 1 { -1 } else { 1 } * (1i64 << (2 * n)),
    ));
    for i in 0..n {
        for j in i + 1..n {
            let d = etas_sq[i].sub(&etas_sq[j]);
            acc = acc.mul(&d).mul(&d);
        }
    }
    acc
}

/// `4^n * eta_1..eta_n * prod_(i<j) (eta_i^2 - eta_j^2)^2`: the value of
/// `delta_bar` after the substitution (valid verbatim for n <= 2; for odd
/// n >= 3 the universal `alpha^2` and the split value of `a_2n` differ in
/// sign, so no such identity holds).
pub fn split_ring_delta_bar_formula(n: usize) -> MPoly {
    let etable = eta_table(n);
    let etas_sq: Vec<MPoly> = (0..n).map(|v| MPoly::var(&etable, v).pow(2)).collect();
    let mut acc = MPoly::int(&etable, 1i64 << (2 * n));
    for v in 0..n {
        acc = acc.mul(&MPoly::var(&etable, v));
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = etas_sq[i].sub(&etas_sq[j]);
            acc = acc.mul(&d).mul(&d);
        }
    }
    acc
}

/// Does `alpha * delta_bar - delta == 4^n * delta_tilde * (alpha^2 - a_2n)`
/// hold identically on the discriminant table?
pub fn delta_bar_relation_holds(n: usize) -> bool {
    let d = discriminants(n);
    let alpha = MPoly::var(&d.table, d.alpha);
    let a2n = MPoly::var(&d.table, d.avars[n - 1]);
    let lhs = alpha.mul(&d.delta_bar).sub(&d.delta);
    let four_n = MPoly::int(&d.table, 1i64 << (2 * n));
    let rhs = four_n.mul(&d.delta_tilde).mul(&alpha.mul(&alpha).sub(&a2n));
    lhs == rhs
}

/// Images of the presentation's generators under `eta_i -> (+/-) eta_perm(i)`
/// (base variables fixed), and whether each image still lies in the ideal.
/// Only the root-adjoining kinds carry this action.
pub fn weyl_invariance(
    pres: &SplitPresentation,
    perm: &[usize],
    signs: &[bool],
    budget: Budget,
) -> Result<bool> {
    match pres.kind {
        SplitKind::TypeA { .. } | SplitKind::Signed { .. } | SplitKind::TypeD { .. } => {}
        _ => {
            return Err(Error::Unsupported(format!(
                "no root permutation action on {}",
                pres.kind.label()
            )))
        }
    }
    let n = pres.fiber.len();
    assert_eq!(perm.len(), n);
    assert_eq!(signs.len(), n);
    {
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
    }
    let mut images: Vec<MPoly> = (0..pres.table.len())
        .map(|v| MPoly::var(&pres.table, v))
        .collect();
    for (i, &v) in pres.fiber.iter().enumerate() {
        let target = MPoly::var(&pres.table, pres.fiber[perm[i]]);
        images[v] = if signs[i] { target.neg() } else { target };
    }
    let gb = groebner(&pres.table, Order::GradedLex, &pres.gens, budget)?;
    for g in &pres.gens {
        let image = g.subst(&pres.table, &images);
        if !gb.contains(&image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compare the two ways of splitting `f` through a partial factorization:
/// factor first and then split each factor, or split `f` outright. Both
/// ideals live in `Q[a(, alpha), b, c(, beta), eta]`; returns whether they
/// agree (mutual Groebner membership).
pub fn factorization_compatible(p: usize, q: usize, dee: bool, budget: Budget) -> Result<bool> {
    let n = p + q;
    assert!(n >= 1);
    let mut rb = RingBuilder::new();
    let upper = if dee { n - 1 } else { n };
    let avars: Vec<usize> = (1..=upper)
        .map(|i| rb.add(format!("a{}", 2 * i), (2 * i) as u32))
        .collect();
    let alpha = dee.then(|| rb.add("alpha".into(), n as u32));
    let bvars: Vec<usize> = (1..=p).map(|i| rb.add(format!("b{i}"), i as u32)).collect();
    let c_upper = if dee { q.saturating_sub(1) } else { q };
    let cvars: Vec<usize> = (1..=c_upper)
        .map(|i| rb.add(format!("c{}", 2 * i), (2 * i) as u32))
        .collect();
    let beta = (dee && q >= 1).then(|| rb.add("beta".into(), q as u32));
    let evars: Vec<usize> = (1..=n).map(|i| rb.add(format!("eta{i}"), 1)).collect();
    let table = rb.build();

    // Shared factorization relations: coefficients of (-1)^p g(u)g(-u)h(u)
    // matched against the a's (and alpha^2 / alpha = b_p beta in type D).
    let h = if dee {
        if q == 0 {
            UPoly::new(vec![MPoly::one(&table)])
        } else {
            let mut low = vec![MPoly::var(&table, beta.unwrap()).pow(2)];
            for j in 1..q {
                low.push(MPoly::var(&table, cvars[q - 1 - j]));
            }
            even_monic(&table, &low, q)
        }
    } else {
        let low: Vec<MPoly> = (0..q)
            .map(|j| MPoly::var(&table, cvars[q - 1 - j]))
            .collect();
        even_monic(&table, &low, q)
    };
    let prod = factored_product(&table, &bvars, &h)?;
    let mut fact_rels = Vec::new();
    for i in 1..=upper {
        fact_rels.push(
            prod.coeff(2 * (n - i))
                .sub(&MPoly::var(&table, avars[i - 1])),
        );
    }
    if let Some(al) = alpha {
        let ap = MPoly::var(&table, al);
        fact_rels.push(prod.coeff(0).sub(&ap.mul(&ap)));
        let bp = match bvars.last() {
            Some(&v) => MPoly::var(&table, v),
            None => MPoly::one(&table),
        };
        let be = match beta {
            Some(v) => MPoly::var(&table, v),
            None => MPoly::one(&table),
        };
        fact_rels.push(ap.sub(&bp.mul(&be)));
    }

    let eta = |i: usize| MPoly::var(&table, evars[i]);
    let sign_e = |items: &[MPoly], i: usize| {
        let e = elementary_symmetric(&table, items, i);
        e.mul_rat(&rat_int(if i % 2 == 1 { -1 } else { 1 }))
    };

    // Root dictionaries shared by both presentations: the type-A splitting of
    // g over the first p roots and the (signed or type-D) splitting of h over
    // the last q. These ARE the splitting relations of the iterated
    // construction; carrying them on the direct side as well realizes the
    // renaming eta_i' -> eta_i without a separate elimination step.
    let mut dicts = Vec::new();
    let g_roots: Vec<MPoly> = (0..p).map(eta).collect();
    for i in 1..=p {
        dicts.push(MPoly::var(&table, bvars[i - 1]).sub(&sign_e(&g_roots, i)));
    }
    let h_roots_sq: Vec<MPoly> = (p..n).map(|i| eta(i).mul(&eta(i))).collect();
    if dee {
        for i in 1..q {
            dicts.push(MPoly::var(&table, cvars[i - 1]).sub(&sign_e(&h_roots_sq, i)));
        }
        if let Some(bv) = beta {
            let mut hp = MPoly::one(&table);
            for i in p..n {
                hp = hp.mul(&eta(i));
            }
            dicts.push(hp.sub(&MPoly::var(&table, bv)));
        }
    } else {
        for i in 1..=q {
            dicts.push(MPoly::var(&table, cvars[i - 1]).sub(&sign_e(&h_roots_sq, i)));
        }
    }

    // Iterated: the factorization relations plus the dictionaries.
    let mut iter_gens = fact_rels;
    iter_gens.extend(dicts.iter().cloned());

    // Direct: split f over all n roots at once, plus the same dictionaries.
    let mut dir_gens = dicts;
    let all_sq: Vec<MPoly> = (0..n).map(|i| eta(i).mul(&eta(i))).collect();
    for i in 1..=upper {
        dir_gens.push(MPoly::var(&table, avars[i - 1]).sub(&sign_e(&all_sq, i)));
    }
    if let Some(al) = alpha {
        let mut prod_eta = MPoly::one(&table);
        for i in 0..n {
            prod_eta = prod_eta.mul(&eta(i));
        }
        dir_gens.push(prod_eta.sub(&MPoly::var(&table, al)));
    }

    let gb_iter = groebner(&table, Order::GradedLex, &iter_gens, budget)?;
    let gb_dir = groebner(&table, Order::GradedLex, &dir_gens, budget)?;
    let ok = dir_gens.iter().all(|g| gb_iter.contains(g))
        && iter_gens.iter().all(|g| gb_dir.contains(g));
    Ok(ok)
}

/// The parity law for the type D compatibility: the naive renaming gives
/// ideal equality precisely here; odd parities are genuine counterexamples
/// to the sign-free reading (DSplit never matches a constant term, so
/// `h = u^2 + beta^2` stays unsplit, and an odd `p` twists `alpha` by `-1`).
pub fn d_compatibility_expected(p: usize, q: usize) -> bool {
    p == 0 || (p.is_multiple_of(2) && q.is_multiple_of(2))
}
