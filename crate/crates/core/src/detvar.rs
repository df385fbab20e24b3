//! Invariants of pairs `(f, g)` with `f` skew-symmetric and `g` symmetric:
//! the rank loci cut out by sub-Pfaffians of `f` and minors of `g`, the
//! reduced characteristic polynomial chi-bar of `f g`, the contraction
//! invariant `Phi` on the double cover where `g` factors as `phi J phi^T`,
//! exact rational sample points in every stratum, dual-number probes along
//! the discriminant hypersurfaces, and the relation ideal of the cover
//! computed degreewise by exact linear algebra.
//!
//! Throughout, a pair is graded by assigning every matrix entry the
//! multidegree `e_i + e_j` in `Z^n`; the cover coordinates `y_S` get
//! `sum_{i in S} e_i`. All rank-locus generators and kernel relations are
//! multihomogeneous for this grading, which the Koszul-homology engine
//! exploits to split its linear algebra into small blocks.

use crate::error::{Error, Result};
use crate::groebner::linalg::{Rref, SRow};
use crate::groebner::Budget;
use crate::matrix::{monic_discriminant, random_unimodular, Matrix};
use crate::poly::{MPoly, Mono, UPoly, VarTable};
use crate::rat::{rat_int, DualRat, Rat, Scalar};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

/// All `k`-element subsets of `{0, .., n-1}` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn basis_deg(n: usize, entries: &[usize]) -> Vec<i64> {
    let mut d = vec![0i64; n];
    for &i in entries {
        d[i] += 1;
    }
    d
}

/// The generic skew-symmetric / symmetric pair on a shared variable table.
/// Variables are `f12, .., f{n-1}{n}` (the strict upper triangle of `f`)
/// followed by `g11, .., gnn` (the upper triangle of `g`), all of weight 1
/// and multidegree `e_i + e_j`.
pub struct GenericPair {
    pub n: usize,
    pub table: Arc<VarTable>,
    pub f: Matrix<MPoly>,
    pub g: Matrix<MPoly>,
}

pub fn generic_pair(n: usize) -> GenericPair {
    assert!((1..=9).contains(&n), "entry names use single-digit indices");
    let mut names: Vec<String> = Vec::new();
    let mut degs: Vec<Vec<i64>> = Vec::new();
    let mut fidx = vec![vec![usize::MAX; n]; n];
    for (i, row) in fidx.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate().skip(i + 1) {
            *slot = names.len();
            names.push(format!("f{}{}", i + 1, j + 1));
            degs.push(basis_deg(n, &[i, j]));
        }
    }
    let mut gidx = vec![vec![usize::MAX; n]; n];
    for (i, row) in gidx.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate().skip(i) {
            *slot = names.len();
            names.push(format!("g{}{}", i + 1, j + 1));
            degs.push(basis_deg(n, &[i, j]));
        }
    }
    let pairs: Vec<(&str, u32)> = names.iter().map(|s| (s.as_str(), 1)).collect();
    let table = VarTable::with_multidegrees(&VarTable::new(&pairs), degs);
    let f = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            MPoly::zero(&table)
        } else if i < j {
            MPoly::var(&table, fidx[i][j])
        } else {
            MPoly::var(&table, fidx[j][i]).neg()
        }
    });
    let g = Matrix::from_fn(n, n, |i, j| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        MPoly::var(&table, gidx[a][b])
    });
    GenericPair { n, table, f, g }
}

/// Generators of the locus `rank f <= 2(n-r)`, `rank g <= 2r`: the
/// sub-Pfaffians of `f` of size `2(n-r)+2` and the minors of `g` of size
/// `2r+1` — each family only when its size bound fits inside the matrix
/// (otherwise the corresponding rank condition is vacuous).
pub fn z_ideal(pair: &GenericPair, r: usize) -> Vec<MPoly> {
    let n = pair.n;
    assert!(r <= n);
    let mut gens = Vec::new();
    let pf_size = 2 * (n - r) + 2;
    if pf_size <= n {
        for s in combinations(n, pf_size) {
            gens.push(pair.f.principal_submatrix(&s).pfaffian());
        }
    }
    let minor = 2 * r + 1;
    if minor <= n {
        // det g[rows, cols] = det g[cols, rows] by symmetry; keep rows <= cols
        let subs = combinations(n, minor);
        for (ri, rows) in subs.iter().enumerate() {
            for cols in subs.iter().skip(ri) {
                gens.push(pair.g.submatrix(rows, cols).det_laplace());
            }
        }
    }
    gens
}

/// The generic skew matrix alone (no symmetric partner), with the ideal of
/// its sub-Pfaffians of the given even size. The table carries the same
/// `e_i + e_j` multigrading as [`generic_pair`].
pub fn pfaffian_ideal(n: usize, size: usize) -> (Arc<VarTable>, Vec<MPoly>) {
    assert!((1..=9).contains(&n), "entry names use single-digit indices");
    assert!(size.is_multiple_of(2) && size >= 2 && size <= n);
    let mut names: Vec<String> = Vec::new();
    let mut degs: Vec<Vec<i64>> = Vec::new();
    let mut fidx = vec![vec![usize::MAX; n]; n];
    for (i, row) in fidx.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate().skip(i + 1) {
            *slot = names.len();
            names.push(format!("f{}{}", i + 1, j + 1));
            degs.push(basis_deg(n, &[i, j]));
        }
    }
    let pairs: Vec<(&str, u32)> = names.iter().map(|s| (s.as_str(), 1)).collect();
    let table = VarTable::with_multidegrees(&VarTable::new(&pairs), degs);
    let f = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            MPoly::zero(&table)
        } else if i < j {
            MPoly::var(&table, fidx[i][j])
        } else {
            MPoly::var(&table, fidx[j][i]).neg()
        }
    });
    let gens = combinations(n, size)
        .into_iter()
        .map(|s| f.principal_submatrix(&s).pfaffian())
        .collect();
    (table, gens)
}

/// Characteristic polynomial of `f g`. For a skew/symmetric pair the product
/// is trace-free and satisfies `chi(-u) = (-1)^n chi(u)`; the trace-free part
/// is asserted here, the full parity by [`chi_bar`].
pub fn chi<T: Scalar>(f: &Matrix<T>, g: &Matrix<T>) -> UPoly<T> {
    let n = f.rows();
    assert_eq!(f.cols(), n);
    assert_eq!((g.rows(), g.cols()), (n, n));
    let p = f.mul(g).charpoly();
    debug_assert!(n == 0 || p.coeff(n - 1).is_zero(), "f*g must be trace-free");
    p
}

/// `chi / u^{|n - 2r|}`. The division must be exact and the quotient even;
/// violations surface with the anchors `chi-bar-divisibility` / `chi-parity`.
pub fn chi_bar<T: Scalar>(chi: &UPoly<T>, n: usize, r: usize) -> Result<UPoly<T>> {
    let k = (2 * r).abs_diff(n);
    let q = chi.div_xk_exact(k).ok_or_else(|| {
        Error::violation(
            "chi-bar-divisibility",
            format!("u^{k} does not divide chi for (n, r) = ({n}, {r})"),
        )
    })?;
    if q.even_part_exact().is_none() {
        return Err(Error::violation(
            "chi-parity",
            format!("chi-bar has a nonzero odd coefficient for (n, r) = ({n}, {r})"),
        ));
    }
    Ok(q)
}

/// `4^k` in the ring of `ctx`, for the discriminant normalizations.
fn four_pow<T: Scalar>(ctx: &T, k: usize) -> T {
    let four = ctx.rat_like(&rat_int(4));
    let mut acc = ctx.one_like();
    for _ in 0..k {
        acc = acc.mul(&four);
    }
    acc
}

/// Discriminant `Delta = 4^k * chibar(0) * disc(ftilde)` of an even monic
/// chi-bar of degree `2k`, where `ftilde(u^2) = chibar(u)`. This is the
/// signed-case discriminant; it vanishes exactly when chi-bar has a repeated
/// or vanishing root pair.
pub fn delta_from_chi_bar<T: Scalar>(chi_bar: &UPoly<T>) -> Result<T> {
    let ft = chi_bar
        .even_part_exact()
        .ok_or_else(|| Error::violation("chi-parity", "chi-bar must be even"))?;
    let k = ft.degree().expect("chi-bar must be nonzero");
    let a = ft.coeff(0);
    let dt = monic_discriminant(&ft);
    Ok(four_pow(&a, k).mul(&a).mul(&dt))
}

/// `DeltaBar = 4^k * alpha * disc(ftilde)` — the variant whose extra factor
/// is the square root `alpha` of `(-1)^k chibar(0)` living on the double
/// cover (the value of [`phi_invariant`] at the point).
pub fn delta_bar_from_chi_bar<T: Scalar>(chi_bar: &UPoly<T>, alpha: &T) -> Result<T> {
    let ft = chi_bar
        .even_part_exact()
        .ok_or_else(|| Error::violation("chi-parity", "chi-bar must be even"))?;
    let k = ft.degree().expect("chi-bar must be nonzero");
    let dt = monic_discriminant(&ft);
    Ok(four_pow(alpha, k).mul(alpha).mul(&dt))
}

/// The fixed symmetric form `[[0, I_r], [I_r, 0]]` used to normalize
/// factorizations `g = phi J phi^T`; `det J = (-1)^r`.
pub fn standard_j(r: usize) -> Matrix<Rat> {
    Matrix::from_fn(2 * r, 2 * r, |i, j| {
        if i + r == j || j + r == i {
            <Rat as One>::one()
        } else {
            <Rat as Zero>::zero()
        }
    })
}

/// `Phi = sum_{|S| = 2r} Pf(f_S) * det(phi_S)` over row subsets `S`, with
/// `phi` of shape `n x 2r`. The sum is a full contraction of the Pfaffian
/// 2r-vector of `f` against the Pluecker 2r-vector of `phi`, so Cauchy-Binet
/// makes it invariant under the simultaneous change of basis
/// `f -> P^T f P`, `phi -> P^{-1} phi`.
pub fn phi_invariant<T: Scalar>(f: &Matrix<T>, phi: &Matrix<T>) -> T {
    let n = f.rows();
    assert_eq!(f.cols(), n);
    assert_eq!(phi.rows(), n);
    assert!(n >= 1, "empty matrices carry no ring context");
    let two_r = phi.cols();
    assert!(two_r.is_multiple_of(2) && two_r <= n);
    let ctx = f.at(0, 0);
    if two_r == 0 {
        return ctx.one_like();
    }
    let mut acc = ctx.zero_like();
    for s in combinations(n, two_r) {
        let d = phi.select_rows(&s).det_laplace();
        if d.is_zero() {
            continue;
        }
        let pf = f.principal_submatrix(&s).pfaffian();
        acc = acc.add(&pf.mul(&d));
    }
    acc
}

/// An exact rational point of the rank stratum, produced by
/// [`sample_z_point`]: the pair itself, the factorization witness
/// `g = phi J phi^T` (present exactly when `2r <= n`), and the pinned
/// eigenvalue parameters (chi-bar must equal `prod (u^2 - eigen_i^2)`).
pub struct ZPoint {
    pub n: usize,
    pub r: usize,
    pub f: Matrix<Rat>,
    pub g: Matrix<Rat>,
    pub phi: Option<Matrix<Rat>>,
    pub eigen: Vec<Rat>,
}

fn small_nonzero(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let v = rng.gen_range(-4..=4i64);
        if v != 0 {
            return rat_int(v);
        }
    }
}

fn small_any(rng: &mut ChaCha8Rng) -> Rat {
    rat_int(rng.gen_range(-3..=3i64))
}

/// Skew matrix with antidiagonal `a_1, .., a_m, -a_m, .., -a_1` (size `2m`).
fn skew_antidiag(a: &[Rat]) -> Matrix<Rat> {
    let t = 2 * a.len();
    Matrix::from_fn(t, t, |i, j| {
        if i + j == t - 1 {
            if i < a.len() {
                a[i].clone()
            } else {
                -a[t - 1 - i].clone()
            }
        } else {
            <Rat as Zero>::zero()
        }
    })
}

/// Symmetric matrix with palindromic antidiagonal `d_1, .., d_m, d_m, .., d_1`.
fn sym_antidiag(d: &[Rat]) -> Matrix<Rat> {
    let t = 2 * d.len();
    Matrix::from_fn(t, t, |i, j| {
        if i + j == t - 1 {
            d[i.min(t - 1 - i)].clone()
        } else {
            <Rat as Zero>::zero()
        }
    })
}

/// Exact sample point of the stratum `rank f <= 2(n-r)`, `rank g <= 2r` with
/// prescribed chi-bar roots: starting matrices are antidiagonal normal forms
/// with `a_i d_i = eigen_i`, moved into general position by a seeded
/// unimodular change of basis (which leaves every invariant checked by
/// [`verify_point`] intact). `eigen` must have length `min(r, n - r)`.
pub fn sample_z_point(n: usize, r: usize, eigen: &[Rat], seed: u64) -> Result<ZPoint> {
    if r > n {
        return Err(Error::Shape(format!("need r <= n, got ({n}, {r})")));
    }
    let m = r.min(n - r);
    if eigen.len() != m {
        return Err(Error::Shape(format!(
            "need {m} eigenvalue parameters for (n, r) = ({n}, {r}), got {}",
            eigen.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<Rat> = (0..m).map(|_| small_nonzero(&mut rng)).collect();
    let d: Vec<Rat> = (0..m).map(|i| &eigen[i] / &a[i]).collect();

    let (f0, g0, phi0) = if 2 * r <= n {
        // f = [[A, B], [-B^T, C]] arbitrary skew, g = [[D, 0], [0, 0]] of
        // rank <= 2r, with A, D the antidiagonal forms; the witness
        // psi = [[0, I_r], [D2^T, 0]] satisfies psi J psi^T = D because the
        // top-left r x r block of D vanishes.
        let a_m = skew_antidiag(&a);
        let d_m = sym_antidiag(&d);
        let mut f0 = Matrix::zero_rat(n, n);
        for i in 0..2 * r {
            for j in 0..2 * r {
                f0.set(i, j, a_m.at(i, j).clone());
            }
        }
        for i in 0..2 * r {
            for j in 2 * r..n {
                let v = small_any(&mut rng);
                f0.set(i, j, v.clone());
                f0.set(j, i, -v);
            }
        }
        for i in 2 * r..n {
            for j in i + 1..n {
                let v = small_any(&mut rng);
                f0.set(i, j, v.clone());
                f0.set(j, i, -v);
            }
        }
        let mut g0 = Matrix::zero_rat(n, n);
        for i in 0..2 * r {
            for j in 0..2 * r {
                g0.set(i, j, d_m.at(i, j).clone());
            }
        }
        let mut psi = Matrix::zero_rat(n, 2 * r);
        for s in 0..r {
            psi.set(s, r + s, <Rat as One>::one());
            // D2^T = lower-left r x r block of D
            for t in 0..r {
                psi.set(r + s, t, d_m.at(r + s, t).clone());
            }
        }
        (f0, g0, Some(psi))
    } else {
        // f = [[0, 0], [0, A]] of rank exactly 2(n-r), g full: the skew rank
        // condition is on the boundary, the symmetric one is vacuous.
        let s = 2 * r - n;
        let a_m = skew_antidiag(&a);
        let d_m = sym_antidiag(&d);
        let mut f0 = Matrix::zero_rat(n, n);
        for i in 0..2 * m {
            for j in 0..2 * m {
                f0.set(s + i, s + j, a_m.at(i, j).clone());
            }
        }
        let mut g0 = Matrix::zero_rat(n, n);
        for i in 0..s {
            for j in i..s {
                let v = small_any(&mut rng);
                g0.set(i, j, v.clone());
                g0.set(j, i, v);
            }
        }
        for i in 0..s {
            for j in s..n {
                let v = small_any(&mut rng);
                g0.set(i, j, v.clone());
                g0.set(j, i, v);
            }
        }
        for i in 0..2 * m {
            for j in 0..2 * m {
                g0.set(s + i, s + j, d_m.at(i, j).clone());
            }
        }
        (f0, g0, None)
    };

    let u = random_unimodular(n, &mut rng, 2 * n + 4);
    let v = u.inverse().expect("unimodular matrices are invertible");
    let f = u.transpose().mul(&f0).mul(&u);
    let g = v.mul(&g0).mul(&v.transpose());
    let phi = phi0.map(|p| v.mul(&p));
    Ok(ZPoint {
        n,
        r,
        f,
        g,
        phi,
        eigen: eigen.to_vec(),
    })
}

/// The audited invariants of a sample point, returned by [`verify_point`].
pub struct PointChecks {
    pub chi_bar: UPoly<Rat>,
    /// Value of the contraction invariant, when the witness is present.
    pub phi: Option<Rat>,
}

/// Full consistency audit of a sample point: skew/symmetry, rank bounds,
/// vanishing of the stratum ideal, the chi-bar normal form
/// `prod (u^2 - eigen_i^2)`, and — when the factorization witness is
/// present — `g = phi J phi^T` and `Phi^2 = (-1)^r chi_bar(0)`.
pub fn verify_point(pt: &ZPoint) -> Result<PointChecks> {
    let (n, r) = (pt.n, pt.r);
    if !pt.f.is_skew_symmetric() || !pt.g.is_symmetric() {
        return Err(Error::violation(
            "pair-symmetry",
            "sample must be a skew/symmetric pair",
        ));
    }
    if 2 * (n - r) + 2 <= n && pt.f.rank() > 2 * (n - r) {
        return Err(Error::violation(
            "z-rank-skew",
            format!("rank f > {} at a (n, r) = ({n}, {r}) sample", 2 * (n - r)),
        ));
    }
    if 2 * r < n && pt.g.rank() > 2 * r {
        return Err(Error::violation(
            "z-rank-sym",
            format!("rank g > {} at a (n, r) = ({n}, {r}) sample", 2 * r),
        ));
    }
    // stratum ideal membership, checked against the generic generators
    let pair = generic_pair(n);
    let mut coords: Vec<Rat> = Vec::with_capacity(pair.table.len());
    for i in 0..n {
        for j in i + 1..n {
            coords.push(pt.f.at(i, j).clone());
        }
    }
    for i in 0..n {
        for j in i..n {
            coords.push(pt.g.at(i, j).clone());
        }
    }
    for gen in z_ideal(&pair, r) {
        if !Zero::is_zero(&gen.eval::<Rat>(&coords)) {
            return Err(Error::violation(
                "z-ideal-membership",
                "a stratum generator does not vanish at the sample",
            ));
        }
    }

    let chi_p = chi(&pt.f, &pt.g);
    let cb = chi_bar(&chi_p, n, r)?;
    let mut expect = UPoly::constant(<Rat as One>::one());
    for l in &pt.eigen {
        expect = expect.mul(&UPoly::new(vec![
            -(l * l),
            <Rat as Zero>::zero(),
            <Rat as One>::one(),
        ]));
    }
    if cb != expect {
        return Err(Error::violation(
            "chi-bar-normal-form",
            "chi-bar does not match the pinned eigenvalue product",
        ));
    }

    let phi_val = match &pt.phi {
        Some(p) => {
            let j = standard_j(r);
            if p.mul(&j).mul(&p.transpose()) != pt.g {
                return Err(Error::violation(
                    "phi-witness",
                    "g != phi J phi^T for the stored witness",
                ));
            }
            let v = phi_invariant(&pt.f, p);
            let mut rhs = cb.coeff(0);
            if r % 2 == 1 {
                rhs = -rhs;
            }
            if &v * &v != rhs {
                return Err(Error::violation(
                    "phi-square-identity",
                    format!("Phi^2 != (-1)^r chi_bar(0) at a ({n}, {r}) sample"),
                ));
            }
            Some(v)
        }
        None => None,
    };
    Ok(PointChecks {
        chi_bar: cb,
        phi: phi_val,
    })
}

/// Dual-number degeneration families along the discriminant loci. Each
/// builds an explicit pair over `Q[eps]/(eps^2)`, checks the pinned closed
/// form of chi-bar, and checks that the relevant discriminant has value 0
/// with nonzero slope — i.e. the probe direction leaves the locus
/// transversally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeFamily {
    /// Signed case, `2r > n`: the skew rank drops one step deeper, sending
    /// an eigenvalue pair to 0. chi-bar = `(u^2 + eps) prod (u^2 + l_i^2)`.
    SignedRankDrop,
    /// Signed case: two eigenvalue pairs collide away from 0 through the
    /// quartic `u^4 + (2 + 2 eps) u^2 + (1 - 2 eps)`, whose reduced
    /// discriminant `(b^2 - 4c) c` comes out exactly `16 eps`.
    SignedEqualEigen,
    /// Type D, `2r <= n`: the Pfaffian contraction degenerates; `Phi` (and
    /// with it the cover coordinate) picks up the factor eps.
    /// chi-bar = `u^2 prod (u^2 - l_i^2)`.
    DRankDrop,
    /// Type D at `n = 2r` with `det g = 0`: the cover coordinate `y`, whose
    /// square is `(-1)^r det g = 0`, is the nilpotent eps itself.
    DDegenerateG,
}

pub struct ProbeReport {
    pub family: ProbeFamily,
    pub n: usize,
    pub r: usize,
    pub chi_bar: UPoly<DualRat>,
    /// `Delta` for the signed families, `DeltaBar` for the D families.
    pub discriminant: DualRat,
    /// `(b^2 - 4c) c` of the colliding quartic factor (`SignedEqualEigen`).
    pub quartic_headline: Option<DualRat>,
    /// Value of the contraction invariant (D families).
    pub phi: Option<DualRat>,
}

fn dzero() -> DualRat {
    DualRat::constant(<Rat as Zero>::zero())
}

fn dskew2(x: DualRat) -> Matrix<DualRat> {
    Matrix::new(2, 2, vec![dzero(), x.clone(), x.neg(), dzero()])
}

fn dsigma() -> Matrix<DualRat> {
    Matrix::new(
        2,
        2,
        vec![dzero(), DualRat::from_int(1), DualRat::from_int(1), dzero()],
    )
}

fn dident(k: usize) -> Matrix<DualRat> {
    Matrix::identity_with(k, &DualRat::from_int(1))
}

fn validate_lambda(lambda: &[Rat]) -> Result<()> {
    for (i, l) in lambda.iter().enumerate() {
        if Zero::is_zero(l) {
            return Err(Error::Unsupported(
                "probe eigenvalues must be nonzero".into(),
            ));
        }
        for m in &lambda[..i] {
            if l * l == m * m {
                return Err(Error::Unsupported(
                    "probe eigenvalues must have pairwise distinct squares".into(),
                ));
            }
        }
    }
    Ok(())
}

/// `prod (u^2 + c_i)` over the dual numbers, times an optional prefix.
fn even_product(prefix: UPoly<DualRat>, shifts: &[Rat]) -> UPoly<DualRat> {
    let mut acc = prefix;
    for c in shifts {
        acc = acc.mul(&UPoly::new(vec![
            DualRat::constant(c.clone()),
            dzero(),
            DualRat::from_int(1),
        ]));
    }
    acc
}

pub fn epsilon_probe(family: ProbeFamily, lambda: &[Rat], z: usize) -> Result<ProbeReport> {
    validate_lambda(lambda)?;
    let eps = DualRat::eps();
    match family {
        ProbeFamily::SignedRankDrop => {
            if z == 0 {
                return Err(Error::Unsupported(
                    "the signed families need z >= 1 zero rows (2r > n)".into(),
                ));
            }
            let n = z + 2 + 2 * lambda.len();
            let k = 1 + lambda.len();
            let r = n - k;
            let mut fb = vec![
                Matrix::zero_with(z, z, &dzero()),
                dskew2(DualRat::from_int(1)),
            ];
            let mut gb = vec![
                Matrix::zero_with(z, z, &dzero()),
                Matrix::new(
                    2,
                    2,
                    vec![eps.clone(), dzero(), dzero(), DualRat::from_int(1)],
                ),
            ];
            for l in lambda {
                fb.push(dskew2(DualRat::constant(l.clone())));
                gb.push(dident(2));
            }
            let f = Matrix::block_diag(&fb, &dzero());
            let g = Matrix::block_diag(&gb, &dzero());
            let cb = chi_bar(&chi(&f, &g), n, r)?;
            let expect = even_product(
                UPoly::new(vec![eps.clone(), dzero(), DualRat::from_int(1)]),
                &lambda.iter().map(|l| l * l).collect::<Vec<_>>(),
            );
            if cb != expect {
                return Err(Error::violation(
                    "epsilon-probe-normal-form",
                    "chi-bar does not match (u^2 + eps) prod (u^2 + l^2)",
                ));
            }
            let delta = delta_from_chi_bar(&cb)?;
            check_probe_slope(&delta)?;
            Ok(ProbeReport {
                family,
                n,
                r,
                chi_bar: cb,
                discriminant: delta,
                quartic_headline: None,
                phi: None,
            })
        }
        ProbeFamily::SignedEqualEigen => {
            if z == 0 {
                return Err(Error::Unsupported(
                    "the signed families need z >= 1 zero rows (2r > n)".into(),
                ));
            }
            let n = z + 4 + 2 * lambda.len();
            let k = 2 + lambda.len();
            let r = n - k;
            // f4 = [[0, P], [-P^T, 0]] with P = [[1, 1], [1, eps]]; g4 = sigma (+) sigma
            let one = DualRat::from_int(1);
            let p = Matrix::new(
                2,
                2,
                vec![one.clone(), one.clone(), one.clone(), eps.clone()],
            );
            let f4 = Matrix::from_fn(4, 4, |i, j| {
                if i < 2 && j >= 2 {
                    p.at(i, j - 2).clone()
                } else if i >= 2 && j < 2 {
                    p.at(j, i - 2).neg()
                } else {
                    dzero()
                }
            });
            let g4 = Matrix::block_diag(&[dsigma(), dsigma()], &dzero());
            let quartic = chi(&f4, &g4);
            let expect4 = UPoly::new(vec![
                DualRat::new(rat_int(1), rat_int(-2)),
                dzero(),
                DualRat::new(rat_int(2), rat_int(2)),
                dzero(),
                one.clone(),
            ]);
            if quartic != expect4 {
                return Err(Error::violation(
                    "epsilon-probe-normal-form",
                    "colliding block is not u^4 + (2+2eps)u^2 + (1-2eps)",
                ));
            }
            let b = quartic.coeff(2);
            let c = quartic.coeff(0);
            let headline = b.mul(&b).sub(&c.mul(&DualRat::from_int(4))).mul(&c);
            let sixteen_eps = DualRat::new(rat_int(0), rat_int(16));
            if headline != sixteen_eps {
                return Err(Error::violation(
                    "quartic-collision-headline",
                    format!("(b^2 - 4c) c = {headline}, expected 16*eps"),
                ));
            }
            let mut fb = vec![Matrix::zero_with(z, z, &dzero()), f4];
            let mut gb = vec![Matrix::zero_with(z, z, &dzero()), g4];
            for l in lambda {
                fb.push(dskew2(DualRat::constant(l.clone())));
                gb.push(dsigma());
            }
            let f = Matrix::block_diag(&fb, &dzero());
            let g = Matrix::block_diag(&gb, &dzero());
            let cb = chi_bar(&chi(&f, &g), n, r)?;
            let expect = even_product(
                expect4,
                &lambda.iter().map(|l| -(l * l)).collect::<Vec<_>>(),
            );
            if cb != expect {
                return Err(Error::violation(
                    "epsilon-probe-normal-form",
                    "chi-bar does not match quartic * prod (u^2 - l^2)",
                ));
            }
            let delta = delta_from_chi_bar(&cb)?;
            check_probe_slope(&delta)?;
            Ok(ProbeReport {
                family,
                n,
                r,
                chi_bar: cb,
                discriminant: delta,
                quartic_headline: Some(headline),
                phi: None,
            })
        }
        ProbeFamily::DRankDrop => {
            let r = 1 + lambda.len();
            let n = 2 * r + z;
            let mut fb = vec![Matrix::zero_with(z, z, &dzero()), dskew2(eps.clone())];
            for l in lambda {
                fb.push(dskew2(DualRat::constant(l.clone())));
            }
            let mut gb = vec![Matrix::zero_with(z, z, &dzero())];
            for _ in 0..r {
                gb.push(dsigma());
            }
            let f = Matrix::block_diag(&fb, &dzero());
            let g = Matrix::block_diag(&gb, &dzero());
            // permutation witness: phi J phi^T pairs up the sigma blocks
            let mut phi = Matrix::zero_with(n, 2 * r, &dzero());
            for s in 0..r {
                phi.set(z + 2 * s, s, DualRat::from_int(1));
                phi.set(z + 2 * s + 1, r + s, DualRat::from_int(1));
            }
            let jm = standard_j(r).map(|x| DualRat::constant(x.clone()));
            if phi.mul(&jm).mul(&phi.transpose()) != g {
                return Err(Error::violation(
                    "phi-witness",
                    "permutation witness does not factor g",
                ));
            }
            let phi_val = phi_invariant(&f, &phi);
            let prod: Rat = lambda.iter().fold(<Rat as One>::one(), |acc, l| &acc * l);
            if !Zero::is_zero(&phi_val.val) || &phi_val.slope * &phi_val.slope != &prod * &prod {
                return Err(Error::violation(
                    "epsilon-probe-normal-form",
                    "Phi != (+/-) eps * prod(l)",
                ));
            }
            let cb = chi_bar(&chi(&f, &g), n, r)?;
            let expect = even_product(
                UPoly::new(vec![dzero(), dzero(), DualRat::from_int(1)]),
                &lambda.iter().map(|l| -(l * l)).collect::<Vec<_>>(),
            );
            if cb != expect {
                return Err(Error::violation(
                    "epsilon-probe-normal-form",
                    "chi-bar does not match u^2 prod (u^2 - l^2)",
                ));
            }
            let delta_bar = delta_bar_from_chi_bar(&cb, &phi_val)?;
            check_probe_slope(&delta_bar)?;
            Ok(ProbeReport {
                family,
                n,
                r,
                chi_bar: cb,
                discriminant: delta_bar,
                quartic_headline: None,
                phi: Some(phi_val),
            })
        }
        ProbeFamily::DDegenerateG => {
            if z != 0 {
                return Err(Error::Unsupported(
                    "the degenerate-g family lives at n = 2r (no zero rows)".into(),
                ));
            }
            let r = 1 + lambda.len();
            let n = 2 * r;
            let mut fb = vec![dskew2(DualRat::from_int(1))];
            for l in lambda {
                fb.push(dskew2(DualRat::constant(l.clone())));
            }
            let f = Matrix::block_diag(&fb, &dzero());
            let g = Matrix::from_fn(n, n, |i, j| {
                if i == j && i >= 1 {
                    DualRat::from_int(1)
                } else {
                    dzero()
                }
            });
            // det g = 0, so the cover coordinate y with y^2 = (-1)^r det g
            // is nilpotent: y = eps, and Phi = Pf(f) y (only S = {1..n}
            // contributes at n = 2r).
            let phi_val = f.pfaffian().mul(&eps);
            let cb = chi_bar(&chi(&f, &g), n, r)?;
            let expect = even_product(
                UPoly::new(vec![dzero(), dzero(), DualRat::from_int(1)]),
                &lambda.iter().map(|l| l * l).collect::<Vec<_>>(),
            );
            if cb != expect {
                return Err(Error::violation(
                    "epsilon-probe-normal-form",
                    "chi-bar does not match u^2 prod (u^2 + l^2)",
                ));
            }
            let delta_bar = delta_bar_from_chi_bar(&cb, &phi_val)?;
            check_probe_slope(&delta_bar)?;
            Ok(ProbeReport {
                family,
                n,
                r,
                chi_bar: cb,
                discriminant: delta_bar,
                quartic_headline: None,
                phi: Some(phi_val),
            })
        }
    }
}

fn check_probe_slope(d: &DualRat) -> Result<()> {
    if !Zero::is_zero(&d.val) {
        return Err(Error::violation(
            "discriminant-vanishes-on-locus",
            format!(
                "discriminant value {} != 0 on the degeneration locus",
                d.val
            ),
        ));
    }
    if Zero::is_zero(&d.slope) {
        return Err(Error::violation(
            "discriminant-slope-detects-locus",
            "discriminant slope vanishes: the probe direction is not transversal",
        ));
    }
    Ok(())
}

/// Relation ideal of the double cover: the kernel of
/// `Q[g_ij, y_S] -> Q[phi_ia]`, `g -> phi J phi^T`, `y_S -> det(phi_S)`,
/// computed degreewise. `gens` generate the kernel through weighted degree
/// `certified_degree`: in every degree `d <= certified_degree` the span of
/// `(known generators) * (monomials)` was verified to equal the full kernel
/// slice, multidegree block by multidegree block.
pub struct ZPrimeIdeal {
    pub table: Arc<VarTable>,
    pub gens: Vec<MPoly>,
    pub certified_degree: usize,
    /// Graded dimensions of the quotient for degrees `0..=certified_degree`,
    /// read off the evaluation map's ranks (not from the generators).
    pub hilbert: Vec<u64>,
}

fn charge(used: &AtomicU64, limit: u64, amount: u64) -> Result<()> {
    let total = used.fetch_add(amount, Ordering::Relaxed) + amount;
    if total > limit {
        return Err(Error::BudgetExceeded {
            steps: total,
            limit,
        });
    }
    Ok(())
}

/// All monomials of the given weighted degree, ascending in exponent order.
fn monos_of_degree(table: &VarTable, d: u64) -> Vec<Mono> {
    fn rec(i: usize, rem: u64, w: &[u32], exps: &mut Vec<u16>, out: &mut Vec<Mono>) {
        if i == w.len() {
            if rem == 0 {
                out.push(Mono::from_exps(exps));
            }
            return;
        }
        if i == w.len() - 1 {
            if rem.is_multiple_of(w[i] as u64) {
                let e = rem / w[i] as u64;
                if e <= u16::MAX as u64 {
                    exps[i] = e as u16;
                    out.push(Mono::from_exps(exps));
                    exps[i] = 0;
                }
            }
            return;
        }
        for e in 0..=rem / w[i] as u64 {
            exps[i] = e as u16;
            rec(i + 1, rem - e * w[i] as u64, w, exps, out);
        }
        exps[i] = 0;
    }
    let mut out = Vec::new();
    if table.is_empty() {
        if d == 0 {
            out.push(Mono::unit(0));
        }
        return out;
    }
    let mut exps = vec![0u16; table.len()];
    rec(0, d, table.weights(), &mut exps, &mut out);
    out
}

fn group_by_multideg(monos: Vec<Mono>, table: &VarTable) -> BTreeMap<Vec<i64>, Vec<Mono>> {
    let mut out: BTreeMap<Vec<i64>, Vec<Mono>> = BTreeMap::new();
    for m in monos {
        let mu = m.multideg(table).expect("table must carry multidegrees");
        out.entry(mu).or_default().push(m);
    }
    out
}

/// Kernel slice of the monomial-by-monomial image map on one multidegree
/// block: rows `[image coefficients | unit]` are inserted into a sparse RREF
/// whose columns put all image monomials before the augmented identity; a
/// row whose pivot lands in the augmented part records a kernel combination.
fn kernel_block(
    domain: &Arc<VarTable>,
    monos: &[Mono],
    images: &[MPoly],
    used: &AtomicU64,
    limit: u64,
) -> Result<Vec<MPoly>> {
    let codomain = images
        .first()
        .map(|p| p.table().clone())
        .expect("at least one variable image");
    let mut img: Vec<MPoly> = Vec::with_capacity(monos.len());
    for m in monos {
        let mut acc = MPoly::one(&codomain);
        for (v, &e) in m.0.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&images[v].pow(e as u32));
            }
        }
        charge(used, limit, acc.num_terms() as u64 + 1)?;
        img.push(acc);
    }
    let mut cols: BTreeSet<Mono> = BTreeSet::new();
    for p in &img {
        for (mm, _) in p.terms() {
            cols.insert(mm.clone());
        }
    }
    let col_of: HashMap<&Mono, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let k = cols.len();
    let mut rr = Rref::new();
    let mut kernel = Vec::new();
    for (ri, p) in img.iter().enumerate() {
        let mut row: SRow = p.terms().map(|(mm, c)| (col_of[mm], c.clone())).collect();
        row.push((k + ri, <Rat as One>::one()));
        charge(used, limit, row.len() as u64 + 4)?;
        let red = rr.reduce(row);
        let lead = red.first().expect("augmented rows cannot vanish").0;
        if lead >= k {
            let mut q = MPoly::zero(domain);
            for (cc, coef) in &red {
                q = q.add(&MPoly::monomial(
                    domain,
                    monos[cc - k].clone(),
                    coef.clone(),
                ));
            }
            let lc = q.leading_term().expect("kernel rows are nonzero").1.clone();
            kernel.push(q.mul_rat(&lc.recip()));
        }
        rr.insert(red);
    }
    Ok(kernel)
}

pub fn z_prime_ideal(n: usize, r: usize, dmax: usize, budget: &Budget) -> Result<ZPrimeIdeal> {
    assert!((1..=9).contains(&n), "entry names use single-digit indices");
    assert!(r >= 1 && 2 * r <= n, "the cover needs 1 <= r <= n/2");

    // domain: g upper triangle (weight 1), then y_S (weight r)
    let mut names: Vec<String> = Vec::new();
    let mut weights: Vec<u32> = Vec::new();
    let mut degs: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            names.push(format!("g{}{}", i + 1, j + 1));
            weights.push(1);
            degs.push(basis_deg(n, &[i, j]));
        }
    }
    let subsets = combinations(n, 2 * r);
    for s in &subsets {
        let tag: String = s.iter().map(|i| (i + 1).to_string()).collect();
        names.push(format!("y{tag}"));
        weights.push(r as u32);
        degs.push(basis_deg(n, s));
    }
    let pairs: Vec<(&str, u32)> = names
        .iter()
        .zip(&weights)
        .map(|(s, &w)| (s.as_str(), w))
        .collect();
    let domain = VarTable::with_multidegrees(&VarTable::new(&pairs), degs);

    // codomain: the n x 2r matrix of cover coordinates
    let mut cnames: Vec<String> = Vec::new();
    let mut cdegs: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for a in 0..2 * r {
            cnames.push(format!("p{}_{}", i + 1, a + 1));
            cdegs.push(basis_deg(n, &[i]));
        }
    }
    let cpairs: Vec<(&str, u32)> = cnames.iter().map(|s| (s.as_str(), 1)).collect();
    let codomain = VarTable::with_multidegrees(&VarTable::new(&cpairs), cdegs);
    let phi = Matrix::from_fn(n, 2 * r, |i, a| MPoly::var(&codomain, i * 2 * r + a));

    let mut images: Vec<MPoly> = Vec::with_capacity(domain.len());
    for i in 0..n {
        for j in i..n {
            let mut acc = MPoly::zero(&codomain);
            for s in 0..r {
                acc = acc.add(&phi.at(i, s).mul(phi.at(j, r + s)));
                acc = acc.add(&phi.at(i, r + s).mul(phi.at(j, s)));
            }
            images.push(acc);
        }
    }
    for s in &subsets {
        images.push(phi.select_rows(s).det_laplace());
    }

    let used = AtomicU64::new(0);
    let mut known: Vec<(MPoly, u64, Vec<i64>)> = Vec::new(); // (gen, wdeg, multideg)
    let mut hilbert: Vec<u64> = vec![1];
    // monomials of every degree processed so far, grouped by multidegree
    let mut monos_by: Vec<BTreeMap<Vec<i64>, Vec<Mono>>> = Vec::with_capacity(dmax + 1);
    monos_by.push(group_by_multideg(monos_of_degree(&domain, 0), &domain));

    for d in 1..=dmax {
        let grouped = group_by_multideg(monos_of_degree(&domain, d as u64), &domain);
        let blocks: Vec<(&Vec<i64>, &Vec<Mono>)> = grouped.iter().collect();
        let kernels: Result<Vec<Vec<MPoly>>> = blocks
            .par_iter()
            .map(|(_, monos)| kernel_block(&domain, monos, &images, &used, budget.limit))
            .collect();
        let kernels = kernels?;
        hilbert.push(
            blocks
                .iter()
                .zip(&kernels)
                .map(|((_, monos), kv)| (monos.len() - kv.len()) as u64)
                .sum(),
        );

        for ((mu, monos), kvecs) in blocks.iter().zip(&kernels) {
            if kvecs.is_empty() {
                continue;
            }
            let col_of: HashMap<&Mono, usize> =
                monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let to_row =
                |p: &MPoly| -> SRow { p.terms().map(|(mm, c)| (col_of[mm], c.clone())).collect() };
            // span of multiples of already-known generators in this block
            let mut span = Rref::new();
            for (q, dq, muq) in &known {
                if *dq > d as u64 {
                    continue;
                }
                let rem = (d as u64 - dq) as usize;
                let mur: Vec<i64> = mu.iter().zip(muq).map(|(a, b)| a - b).collect();
                if mur.iter().any(|&x| x < 0) {
                    continue;
                }
                let Some(comp) = monos_by[rem].get(&mur) else {
                    continue;
                };
                for m in comp {
                    let prod = q.mul(&MPoly::monomial(&domain, m.clone(), <Rat as One>::one()));
                    charge(&used, budget.limit, prod.num_terms() as u64 + 4)?;
                    span.insert(to_row(&prod));
                }
            }
            for kv in kvecs {
                let row = to_row(kv);
                charge(&used, budget.limit, row.len() as u64 + 4)?;
                if span.insert(row) {
                    let muv = kv
                        .multihomogeneous_degree()
                        .expect("kernel elements are multihomogeneous");
                    known.push((kv.clone(), d as u64, muv));
                }
            }
            // every kernel element is now in the span: the generators are
            // complete in this block, which is the degreewise certificate
        }
        monos_by.push(grouped);
    }

    // binding audit: each generator really maps to zero
    let gens: Vec<MPoly> = known.into_iter().map(|(q, _, _)| q).collect();
    for q in &gens {
        if !q.subst(&codomain, &images).is_zero() {
            return Err(Error::violation(
                "z-prime-kernel-substitution",
                "a computed kernel generator has a nonzero image",
            ));
        }
    }
    Ok(ZPrimeIdeal {
        table: domain,
        gens,
        certified_degree: dmax,
        hilbert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner, Order};
    use crate::rat::rat;

    #[test]
    fn generic_pair_shape() {
        let pair = generic_pair(3);
        assert_eq!(pair.table.len(), 3 + 6);
        assert_eq!(pair.table.name(0), "f12");
        assert_eq!(pair.table.name(3), "g11");
        assert!(pair.f.is_skew_symmetric());
        assert!(pair.g.is_symmetric());
        // every entry has multidegree e_i + e_j
        assert_eq!(
            pair.f.at(0, 2).multihomogeneous_degree(),
            Some(vec![1, 0, 1])
        );
        assert_eq!(
            pair.g.at(1, 1).multihomogeneous_degree(),
            Some(vec![0, 2, 0])
        );
    }

    #[test]
    fn principal_pfaffian_generator() {
        let (_, gens) = pfaffian_ideal(4, 4);
        assert_eq!(gens.len(), 1);
        assert_eq!(format!("{}", gens[0]), "f12*f34 - f13*f24 + f14*f23");

        let (_, gens5) = pfaffian_ideal(5, 4);
        assert_eq!(gens5.len(), 5);
        assert!(gens5.iter().all(|g| g.num_terms() == 3));
        assert!(gens5.iter().all(|g| g.homogeneous_degree() == Some(2)));
    }

    #[test]
    fn z_ideal_families_respect_size_bounds() {
        // (4, 3): only the full Pfaffian survives; the minor bound 7 > 4
        let pair = generic_pair(4);
        let gens = z_ideal(&pair, 3);
        assert_eq!(gens.len(), 1);
        assert_eq!(format!("{}", gens[0]), "f12*f34 - f13*f24 + f14*f23");
        // (4, 2): both bounds are vacuous
        assert!(z_ideal(&pair, 2).is_empty());
        // (4, 1): 3x3 minors of g only
        let gens41 = z_ideal(&pair, 1);
        assert_eq!(gens41.len(), 10); // C(4,3) choose-two-with-repetition pairs
        assert!(gens41.iter().all(|q| q.homogeneous_degree() == Some(3)));
    }

    #[test]
    fn chi_of_smallest_pair() {
        let pair = generic_pair(2);
        let c = chi(&pair.f, &pair.g);
        assert_eq!(c.degree(), Some(2));
        assert!(c.coeff(1).is_zero());
        // constant term = det(f g) = det f * det g
        let f12 = MPoly::var_named(&pair.table, "f12");
        let det_g = MPoly::var_named(&pair.table, "g11")
            .mul(&MPoly::var_named(&pair.table, "g22"))
            .sub(&MPoly::var_named(&pair.table, "g12").pow(2));
        assert_eq!(c.coeff(0), f12.pow(2).mul(&det_g));
        // n = 2r: chi-bar is chi itself
        let cb = chi_bar(&c, 2, 1).unwrap();
        assert_eq!(cb, c);
    }

    #[test]
    fn chi_bar_divisibility_and_parity_on_generic_pairs() {
        // odd n: chi = u * (even), so both (3,1) and (3,2) divide once
        let pair3 = generic_pair(3);
        let c3 = chi(&pair3.f, &pair3.g);
        let cb = chi_bar(&c3, 3, 1).unwrap();
        assert_eq!(cb.degree(), Some(2));
        assert!(cb.coeff(1).is_zero());
        assert_eq!(chi_bar(&c3, 3, 2).unwrap(), cb);
        // even n: chi itself is already even
        let pair4 = generic_pair(4);
        let c4 = chi(&pair4.f, &pair4.g);
        let cb4 = chi_bar(&c4, 4, 2).unwrap();
        assert_eq!(cb4, c4);
        assert!(c4.coeff(1).is_zero() && c4.coeff(3).is_zero());
    }

    #[test]
    fn phi_invariant_is_basis_invariant() {
        // Cauchy-Binet: Phi(P^T f P, P^inv phi) = Phi(f, phi)
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..6 {
            let n = 4;
            let r = 1;
            let mut f = Matrix::zero_rat(n, n);
            for i in 0..n {
                for j in i + 1..n {
                    let v = small_any(&mut rng);
                    f.set(i, j, v.clone());
                    f.set(j, i, -v);
                }
            }
            let phi = Matrix::from_fn(n, 2 * r, |_, _| small_any(&mut rng));
            let p = random_unimodular(n, &mut rng, 10);
            let pinv = p.inverse().unwrap();
            let lhs = phi_invariant(&p.transpose().mul(&f).mul(&p), &pinv.mul(&phi));
            assert_eq!(lhs, phi_invariant(&f, &phi));
        }
    }

    #[test]
    fn sampled_points_satisfy_all_invariants() {
        let cover_cases = [(3usize, 1usize), (4, 1), (4, 2), (5, 2)];
        let deep_cases = [(3usize, 2usize), (4, 3), (5, 3)];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &(n, r) in &cover_cases {
            for seed in 0..4u64 {
                let m = r.min(n - r);
                let eigen: Vec<Rat> = (0..m).map(|_| small_nonzero(&mut rng)).collect();
                let pt = sample_z_point(n, r, &eigen, seed).unwrap();
                let checks = verify_point(&pt).unwrap();
                assert!(checks.phi.is_some());
            }
        }
        for &(n, r) in &deep_cases {
            for seed in 0..4u64 {
                let m = r.min(n - r);
                let eigen: Vec<Rat> = (0..m).map(|_| small_nonzero(&mut rng)).collect();
                let pt = sample_z_point(n, r, &eigen, seed).unwrap();
                assert!(pt.phi.is_none());
                let checks = verify_point(&pt).unwrap();
                assert_eq!(checks.chi_bar.degree(), Some(2 * m));
            }
        }
    }

    #[test]
    fn fractional_eigenvalues_also_sample_cleanly() {
        let eigen = vec![rat(3, 2), rat(-5, 7)];
        let pt = sample_z_point(5, 2, &eigen, 99).unwrap();
        verify_point(&pt).unwrap();
    }

    #[test]
    fn signed_rank_drop_probe() {
        let report = epsilon_probe(ProbeFamily::SignedRankDrop, &[rat_int(2)], 1).unwrap();
        assert_eq!((report.n, report.r), (5, 3));
        // chi-bar = (u^2 + eps)(u^2 + 4), Delta = 16 * 4 eps * (16 - 8 eps) = 1024 eps
        assert_eq!(report.discriminant, DualRat::from_parts(0, 1024));
    }

    #[test]
    fn signed_equal_eigen_probe_headline_is_sixteen_eps() {
        let report = epsilon_probe(ProbeFamily::SignedEqualEigen, &[], 1).unwrap();
        assert_eq!((report.n, report.r), (5, 3));
        assert_eq!(report.quartic_headline, Some(DualRat::from_parts(0, 16)));
        // full discriminant of the bare quartic: 16 c (b^2 - 4c) = 256 eps
        assert_eq!(report.discriminant, DualRat::from_parts(0, 256));
        // and with a spectator eigenvalue the headline is unchanged
        let report2 = epsilon_probe(ProbeFamily::SignedEqualEigen, &[rat_int(2)], 1).unwrap();
        assert_eq!(report2.quartic_headline, Some(DualRat::from_parts(0, 16)));
        assert!(Zero::is_zero(&report2.discriminant.val));
        assert!(!Zero::is_zero(&report2.discriminant.slope));
    }

    #[test]
    fn d_rank_drop_probe() {
        // r = 2, lambda = 3: DeltaBar = 16 * (+/- 3 eps) * disc(v^2 - 9v) = +/- 3888 eps
        let report = epsilon_probe(ProbeFamily::DRankDrop, &[rat_int(3)], 1).unwrap();
        assert_eq!((report.n, report.r), (5, 2));
        assert!(Zero::is_zero(&report.discriminant.val));
        assert_eq!(
            num_traits::Signed::abs(&report.discriminant.slope),
            rat_int(3888)
        );
        // smallest case r = 1, n = 2: chi-bar = u^2, DeltaBar = +/- 4 eps
        let small = epsilon_probe(ProbeFamily::DRankDrop, &[], 0).unwrap();
        assert_eq!(
            num_traits::Signed::abs(&small.discriminant.slope),
            rat_int(4)
        );
    }

    #[test]
    fn d_degenerate_g_probe() {
        let small = epsilon_probe(ProbeFamily::DDegenerateG, &[], 0).unwrap();
        assert_eq!((small.n, small.r), (2, 1));
        assert_eq!(small.discriminant, DualRat::from_parts(0, 4));
        // r = 2: DeltaBar = 16 * 2 eps * disc(v^2 + 4v) = 512 eps
        let report = epsilon_probe(ProbeFamily::DDegenerateG, &[rat_int(2)], 0).unwrap();
        assert_eq!(report.discriminant, DualRat::from_parts(0, 512));
        assert_eq!(report.phi, Some(DualRat::from_parts(0, 2)));
    }

    #[test]
    fn probe_rejects_degenerate_eigenvalues() {
        assert!(epsilon_probe(ProbeFamily::SignedRankDrop, &[rat_int(0)], 1).is_err());
        assert!(epsilon_probe(ProbeFamily::SignedRankDrop, &[rat_int(2), rat_int(-2)], 1).is_err());
    }

    #[test]
    fn z_prime_2_1_is_the_double_cover_relation() {
        let budget = Budget::limited(10_000_000);
        let zp = z_prime_ideal(2, 1, 4, &budget).unwrap();
        assert_eq!(zp.gens.len(), 1);
        assert_eq!(format!("{}", zp.gens[0]), "g11*g22 - g12^2 + y12^2");
        // quadric hypersurface in four variables: perfect-square dimensions
        assert_eq!(zp.hilbert, vec![1, 4, 9, 16, 25]);

        // independent oracle: eliminate the cover matrix entries from the
        // graph ideal with a block order
        let combined = VarTable::new(&[
            ("p1_1", 1),
            ("p1_2", 1),
            ("p2_1", 1),
            ("p2_2", 1),
            ("g11", 1),
            ("g12", 1),
            ("g22", 1),
            ("y12", 1),
        ]);
        let v = |name: &str| MPoly::var_named(&combined, name);
        let graph = vec![
            v("g11").sub(&v("p1_1").mul(&v("p1_2")).mul_rat(&rat_int(2))),
            v("g12").sub(&v("p1_1").mul(&v("p2_2")).add(&v("p1_2").mul(&v("p2_1")))),
            v("g22").sub(&v("p2_1").mul(&v("p2_2")).mul_rat(&rat_int(2))),
            v("y12").sub(&v("p1_1").mul(&v("p2_2")).sub(&v("p1_2").mul(&v("p2_1")))),
        ];
        let gb = groebner(&combined, Order::Block { split: 4 }, &graph, budget).unwrap();
        let eliminated = gb.eliminated_generators(4);
        assert!(!eliminated.is_empty());
        // move the eliminated generators onto the cover table and compare
        // reduced Groebner bases (canonical form) with the degreewise result
        let reindex: Vec<MPoly> = vec![
            MPoly::one(&zp.table),
            MPoly::one(&zp.table),
            MPoly::one(&zp.table),
            MPoly::one(&zp.table),
            MPoly::var_named(&zp.table, "g11"),
            MPoly::var_named(&zp.table, "g12"),
            MPoly::var_named(&zp.table, "g22"),
            MPoly::var_named(&zp.table, "y12"),
        ];
        let moved: Vec<MPoly> = eliminated
            .iter()
            .map(|q| q.subst(&zp.table, &reindex))
            .collect();
        let gb_a = groebner(&zp.table, Order::GradedLex, &moved, budget).unwrap();
        let gb_b = groebner(&zp.table, Order::GradedLex, &zp.gens, budget).unwrap();
        assert_eq!(gb_a.generators(), gb_b.generators());
    }

    #[test]
    fn z_prime_3_1_kernel_structure() {
        // Expected degree-2 kernel: 6 relations y_S y_T + det g[S, T] (the
        // 2x2 minors, via Cauchy-Binet with det J = -1) and 3 relations
        // (g yhat)_i = g_i1 y23 - g_i2 y13 + g_i3 y12 (each column of the
        // cover matrix is orthogonal to the cross product of the columns).
        let budget = Budget::limited(50_000_000);
        let zp = z_prime_ideal(3, 1, 4, &budget).unwrap();
        assert_eq!(zp.certified_degree, 4);
        assert_eq!(zp.gens.len(), 9);
        assert!(zp.gens.iter().all(|q| q.homogeneous_degree() == Some(2)));

        let gb = groebner(&zp.table, Order::GradedLex, &zp.gens, budget).unwrap();
        let v = |name: &str| MPoly::var_named(&zp.table, name);
        // one representative of each family
        let minor_rel = v("y12")
            .mul(&v("y13"))
            .add(&v("g11").mul(&v("g23")).sub(&v("g13").mul(&v("g12"))));
        assert!(gb.contains(&minor_rel));
        let cross_rel = v("g11")
            .mul(&v("y23"))
            .sub(&v("g12").mul(&v("y13")))
            .add(&v("g13").mul(&v("y12")));
        assert!(gb.contains(&cross_rel));
    }

    #[test]
    fn z_prime_4_1_quick_slice() {
        // shallow pass: enough to see the Pluecker quadric show up in the
        // kernel span at degree 2
        let budget = Budget::limited(100_000_000);
        let zp = z_prime_ideal(4, 1, 2, &budget).unwrap();
        assert_eq!(zp.certified_degree, 2);
        assert!(!zp.gens.is_empty());
        let v = |name: &str| MPoly::var_named(&zp.table, name);
        let pluecker = v("y12")
            .mul(&v("y34"))
            .sub(&v("y13").mul(&v("y24")))
            .add(&v("y14").mul(&v("y23")));
        // membership at degree 2 is a linear-algebra question over the gens
        let deg2: Vec<&MPoly> = zp
            .gens
            .iter()
            .filter(|q| q.homogeneous_degree() == Some(2))
            .collect();
        let mut cols: BTreeMap<Mono, usize> = BTreeMap::new();
        for q in deg2.iter().copied().chain(std::iter::once(&pluecker)) {
            for (m, _) in q.terms() {
                let next = cols.len();
                cols.entry(m.clone()).or_insert(next);
            }
        }
        let mut rr = Rref::new();
        for q in &deg2 {
            let mut row: SRow = q.terms().map(|(m, c)| (cols[m], c.clone())).collect();
            row.sort_by_key(|&(c, _)| c);
            rr.insert(row);
        }
        let mut prow: SRow = pluecker
            .terms()
            .map(|(m, c)| (cols[m], c.clone()))
            .collect();
        prow.sort_by_key(|&(c, _)| c);
        assert!(rr.reduce_full(prow).is_empty());
    }

    #[test]
    fn principal_pfaffian_betti_table() {
        // a principal ideal resolves as a Koszul complex: Tor_0 = Q at 0,
        // Tor_1 = Q at the generator degree, nothing else
        use crate::groebner::{koszul_betti, KoszulInput};
        let (table, gens) = pfaffian_ideal(4, 4);
        let input = KoszulInput {
            table: &table,
            gens: &gens,
            koszul_vars: (0..table.len()).collect(),
            max_i: 3,
            max_j: 4,
            multigraded: true,
        };
        let betti = koszul_betti(&input).unwrap();
        assert_eq!(betti.nonzero(), vec![((0, 0), 1), ((1, 2), 1)]);
    }
}
