//! Sparse multivariate polynomials over `Rat` with named, weighted variables,
//! plus a small dense univariate helper type.
//!
//! A `VarTable` fixes the ambient ring: variable names, positive integer
//! weights (the N-grading), and an optional Z^k multidegree per variable used
//! to split linear algebra into small blocks. Polynomials print in a canonical
//! form (terms in weighted graded-lex order, descending) and `parse` is an
//! exact inverse of `Display`.

use crate::error::{Error, Result};
use crate::rat::{Rat, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u32>,
    multidegrees: Option<Vec<Vec<i64>>>,
}

impl VarTable {
    /// Table from `(name, weight)` pairs; weights must be >= 1 and names
    /// unique identifiers.
    pub fn new(vars: &[(&str, u32)]) -> Arc<VarTable> {
        let names: Vec<String> = vars.iter().map(|(n, _)| n.to_string()).collect();
        let weights: Vec<u32> = vars.iter().map(|&(_, w)| w).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(is_ident(n), "variable name {n:?} is not a valid identifier");
            assert!(!names[..i].contains(n), "duplicate variable name {n:?}");
        }
        assert!(weights.iter().all(|&w| w >= 1), "weights must be >= 1");
        Arc::new(VarTable {
            names,
            weights,
            multidegrees: None,
        })
    }

    /// All weights 1.
    pub fn unweighted(names: &[&str]) -> Arc<VarTable> {
        let vars: Vec<(&str, u32)> = names.iter().map(|&n| (n, 1)).collect();
        Self::new(&vars)
    }

    /// Attach a Z^k multidegree to every variable (same k for all).
    pub fn with_multidegrees(table: &Arc<VarTable>, degs: Vec<Vec<i64>>) -> Arc<VarTable> {
        assert_eq!(degs.len(), table.len());
        let k = degs.first().map(|d| d.len()).unwrap_or(0);
        assert!(degs.iter().all(|d| d.len() == k));
        Arc::new(VarTable {
            names: table.names.clone(),
            weights: table.weights.clone(),
            multidegrees: Some(degs),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn multidegrees(&self) -> Option<&[Vec<i64>]> {
        self.multidegrees.as_deref()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Dense exponent vector. Stored order = `VarTable` order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono(pub Box<[u16]>);

impl Mono {
    pub fn unit(nvars: usize) -> Mono {
        Mono(vec![0u16; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Mono {
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        Mono(e.into_boxed_slice())
    }

    pub fn from_exps(exps: &[u16]) -> Mono {
        Mono(exps.to_vec().into_boxed_slice())
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, rhs: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, rhs: &Mono) -> bool {
        self.0.iter().zip(rhs.0.iter()).all(|(&a, &b)| a <= b)
    }

    /// `rhs / self`; caller must ensure divisibility.
    pub fn div_into(&self, rhs: &Mono) -> Mono {
        Mono(
            rhs.0
                .iter()
                .zip(self.0.iter())
                .map(|(&b, &a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, rhs: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, rhs: &Mono) -> bool {
        self.0
            .iter()
            .zip(rhs.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn weighted_deg(&self, table: &VarTable) -> u64 {
        self.0
            .iter()
            .zip(table.weights.iter())
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn multideg(&self, table: &VarTable) -> Option<Vec<i64>> {
        let degs = table.multidegrees()?;
        let k = degs.first().map(|d| d.len()).unwrap_or(0);
        let mut out = vec![0i64; k];
        for (i, &e) in self.0.iter().enumerate() {
            if e != 0 {
                for (slot, &d) in out.iter_mut().zip(degs[i].iter()) {
                    *slot += e as i64 * d;
                }
            }
        }
        Some(out)
    }
}

/// Weighted graded-lex comparison (used for canonical printing and division).
pub fn graded_lex_cmp(table: &VarTable, a: &Mono, b: &Mono) -> Ordering {
    let (da, db) = (a.weighted_deg(table), b.weighted_deg(table));
    da.cmp(&db).then_with(|| a.0.cmp(&b.0))
}

/// Sparse multivariate polynomial. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero(vars: &Arc<VarTable>) -> MPoly {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarTable>, c: Rat) -> MPoly {
        let mut p = MPoly::zero(vars);
        if !Zero::is_zero(&c) {
            p.terms.insert(Mono::unit(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Arc<VarTable>) -> MPoly {
        Self::constant(vars, <Rat as One>::one())
    }

    pub fn int(vars: &Arc<VarTable>, v: i64) -> MPoly {
        Self::constant(vars, crate::rat::rat_int(v))
    }

    pub fn var(vars: &Arc<VarTable>, i: usize) -> MPoly {
        assert!(i < vars.len());
        let mut p = MPoly::zero(vars);
        p.terms
            .insert(Mono::var(vars.len(), i), <Rat as One>::one());
        p
    }

    pub fn var_named(vars: &Arc<VarTable>, name: &str) -> MPoly {
        let i = vars
            .index(name)
            .unwrap_or_else(|| panic!("unknown variable {name:?}"));
        Self::var(vars, i)
    }

    pub fn monomial(vars: &Arc<VarTable>, mono: Mono, coeff: Rat) -> MPoly {
        assert_eq!(mono.0.len(), vars.len());
        let mut p = MPoly::zero(vars);
        if !Zero::is_zero(&coeff) {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Mono::unit(self.vars.len()))
            .cloned()
            .unwrap_or_else(<Rat as Zero>::zero)
    }

    fn same_ring(&self, rhs: &MPoly) {
        assert!(
            Arc::ptr_eq(&self.vars, &rhs.vars) || self.vars == rhs.vars,
            "mixing polynomials from different rings"
        );
    }

    fn insert_add(terms: &mut BTreeMap<Mono, Rat>, m: Mono, c: Rat) {
        if Zero::is_zero(&c) {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if Zero::is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        self.same_ring(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        self.same_ring(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Self::insert_add(&mut terms, m.clone(), -c);
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        self.same_ring(rhs);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Self::insert_add(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn mul_rat(&self, c: &Rat) -> MPoly {
        if Zero::is_zero(c) {
            return MPoly::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(&self.vars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.to_vec();
            exps[i] -= 1;
            Self::insert_add(
                &mut terms,
                Mono(exps.into_boxed_slice()),
                c * crate::rat::rat_int(e as i64),
            );
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Image under `x_i -> images[i]`, all images in the ring of `target`.
    pub fn subst(&self, target: &Arc<VarTable>, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.vars.len());
        let mut acc = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e as u32));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Evaluate at a point in any `Scalar` ring.
    pub fn eval<T: Scalar>(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut term = T::from_rat(c);
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Weighted degree of the polynomial if homogeneous, else `None`.
    /// The zero polynomial is homogeneous of every degree; returns `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(0),
            Some(m) => m.weighted_deg(&self.vars),
        };
        for m in it {
            if m.weighted_deg(&self.vars) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Common multidegree of all terms, if the table has multidegrees and the
    /// polynomial is multihomogeneous.
    pub fn multihomogeneous_degree(&self) -> Option<Vec<i64>> {
        self.vars.multidegrees()?;
        let mut it = self.terms.keys();
        let first = it.next()?.multideg(&self.vars)?;
        for m in it {
            if m.multideg(&self.vars)? != first {
                return None;
            }
        }
        Some(first)
    }

    /// Max weighted total degree (0 for the zero polynomial).
    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|m| m.weighted_deg(&self.vars))
            .max()
            .unwrap_or(0)
    }

    /// Leading (mono, coeff) under weighted graded-lex.
    pub fn leading_term(&self) -> Option<(&Mono, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| graded_lex_cmp(&self.vars, a, b))
    }

    /// Exact division: `Some(q)` with `self == q * rhs`, or `None` if `self`
    /// is not an exact multiple. Uses leading-term cancellation under graded
    /// lex; exactness of the quotient is what makes single-divisor division
    /// well-defined here.
    pub fn checked_div(&self, rhs: &MPoly) -> Option<MPoly> {
        self.same_ring(rhs);
        if rhs.is_zero() {
            return None;
        }
        let (lm, lc) = rhs.leading_term().unwrap();
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut q = MPoly::zero(&self.vars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term().unwrap();
            if !lm.divides(rm) {
                return None;
            }
            let qm = lm.div_into(rm);
            let qc = rc / &lc;
            let qterm = MPoly::monomial(&self.vars, qm, qc);
            rem = rem.sub(&qterm.mul(rhs));
            q = q.add(&qterm);
        }
        Some(q)
    }

    /// Parse the canonical text form produced by `Display`.
    pub fn parse(input: &str, vars: &Arc<VarTable>) -> Result<MPoly> {
        Parser {
            input: input.as_bytes(),
            pos: 0,
            vars,
        }
        .parse_poly()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut monos: Vec<&Mono> = self.terms.keys().collect();
        monos.sort_by(|a, b| graded_lex_cmp(&self.vars, b, a));
        for (idx, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = One::is_one(&abs);
            if m.is_unit() {
                write!(f, "{abs}")?;
                continue;
            }
            let mut lead = true;
            if !coeff_is_one {
                write!(f, "{abs}")?;
                lead = false;
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "{}", self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    vars: &'a Arc<VarTable>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            at: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn parse_poly(&mut self) -> Result<MPoly> {
        self.skip_ws();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = MPoly::zero(self.vars);
        loop {
            self.skip_ws();
            let term = self.parse_term()?;
            acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    sign = false;
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = true;
                    self.pos += 1;
                }
                Some(c) => return Err(self.err(format!("unexpected byte {:?}", c as char))),
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<MPoly> {
        let mut coeff = <Rat as One>::one();
        let mut exps = vec![0u16; self.vars.len()];
        // Optional leading numeric coefficient.
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.parse_uint()?;
            let den = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.parse_uint()?;
                if Zero::is_zero(&d) {
                    return Err(self.err("zero denominator"));
                }
                d
            } else {
                One::one()
            };
            coeff = Rat::new(num, den);
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                self.parse_varpow(&mut exps)?;
            } else {
                return Ok(MPoly::monomial(
                    self.vars,
                    Mono(exps.into_boxed_slice()),
                    coeff,
                ));
            }
        } else {
            self.parse_varpow(&mut exps)?;
        }
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                self.parse_varpow(&mut exps)?;
            } else {
                break;
            }
        }
        Ok(MPoly::monomial(
            self.vars,
            Mono(exps.into_boxed_slice()),
            coeff,
        ))
    }

    fn parse_varpow(&mut self, exps: &mut [u16]) -> Result<()> {
        let start = self.pos;
        while self.pos < self.input.len()
            && (self.input[self.pos].is_ascii_alphanumeric() || self.input[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start || self.input[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.err("expected variable name"));
        }
        let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        let idx = self
            .vars
            .index(name)
            .ok_or_else(|| self.err(format!("unknown variable {name:?}")))?;
        let mut exp: u16 = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.parse_uint()?;
            exp = u16::try_from(&e).map_err(|_| self.err("exponent too large"))?;
        }
        exps[idx] = exps[idx]
            .checked_add(exp)
            .ok_or_else(|| self.err("exponent overflow"))?;
        Ok(())
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected number"));
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        BigInt::from_str(s).map_err(|e| self.err(format!("bad integer: {e}")))
    }
}

impl Scalar for MPoly {
    fn zero() -> Self {
        panic!("MPoly has no context-free zero; use MPoly::zero(&table)")
    }
    fn one() -> Self {
        panic!("MPoly has no context-free one; use MPoly::one(&table)")
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        MPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn div_int(&self, k: i64) -> Self {
        assert!(k != 0);
        self.mul_rat(&crate::rat::rat(1, k))
    }
    fn from_rat(_r: &Rat) -> Self {
        panic!("MPoly has no context-free constants; use MPoly::constant(&table, c)")
    }
    fn zero_like(&self) -> Self {
        MPoly::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        MPoly::one(&self.vars)
    }
    fn rat_like(&self, r: &Rat) -> Self {
        MPoly::constant(&self.vars, r.clone())
    }
}

impl crate::rat::ExactDiv for MPoly {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs)
    }
}

/// `e_k(items)`, the k-th elementary symmetric polynomial of the given ring
/// elements, via the product DP on `prod (1 + t*x_i)`.
pub fn elementary_symmetric(vars: &Arc<VarTable>, items: &[MPoly], k: usize) -> MPoly {
    if k > items.len() {
        return MPoly::zero(vars);
    }
    let mut coeffs: Vec<MPoly> = vec![MPoly::zero(vars); k + 1];
    coeffs[0] = MPoly::one(vars);
    for x in items {
        for j in (1..=k).rev() {
            let bump = coeffs[j - 1].mul(x);
            coeffs[j] = coeffs[j].add(&bump);
        }
    }
    coeffs.pop().unwrap()
}

/// Dense univariate polynomial with coefficients in any `Scalar` ring,
/// ascending powers; trailing zeros are trimmed.
#[derive(Clone, PartialEq)]
pub struct UPoly<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> UPoly<T> {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> UPoly<T> {
        UPoly { coeffs: vec![] }
    }

    pub fn constant(c: T) -> UPoly<T> {
        Self::new(vec![c])
    }

    pub fn x() -> UPoly<T> {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| match self.coeffs.first() {
                Some(c) => c.zero_like(),
                None => T::zero(),
            })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    fn ctx_zero(&self, rhs: &UPoly<T>) -> Option<T> {
        self.coeffs
            .first()
            .or_else(|| rhs.coeffs.first())
            .map(|c| c.zero_like())
    }

    pub fn add(&self, rhs: &UPoly<T>) -> UPoly<T> {
        let Some(zero) = self.ctx_zero(rhs) else {
            return UPoly::zero();
        };
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let at = |p: &UPoly<T>, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(|| zero.clone());
        UPoly::new((0..n).map(|i| at(self, i).add(&at(rhs, i))).collect())
    }

    pub fn sub(&self, rhs: &UPoly<T>) -> UPoly<T> {
        let Some(zero) = self.ctx_zero(rhs) else {
            return UPoly::zero();
        };
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let at = |p: &UPoly<T>, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(|| zero.clone());
        UPoly::new((0..n).map(|i| at(self, i).sub(&at(rhs, i))).collect())
    }

    pub fn neg(&self) -> UPoly<T> {
        UPoly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, rhs: &UPoly<T>) -> UPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &T) -> UPoly<T> {
        UPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> UPoly<T> {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&c.rat_like(&crate::rat::rat_int(i as i64 + 1))))
                .collect(),
        )
    }

    /// Substitute `x -> x^2` (even extension).
    pub fn compose_square(&self) -> UPoly<T> {
        if self.is_zero() {
            return UPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() * 2 - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        UPoly::new(out)
    }

    /// Coefficients at even powers only: inverse of `compose_square` when the
    /// polynomial is even; `None` if any odd coefficient is nonzero.
    pub fn even_part_exact(&self) -> Option<UPoly<T>> {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 && !c.is_zero() {
                return None;
            }
        }
        Some(UPoly::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// Divide by `x^k` exactly; `None` if any lower coefficient is nonzero.
    pub fn div_xk_exact(&self, k: usize) -> Option<UPoly<T>> {
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        for c in self.coeffs.iter().take(k) {
            if !c.is_zero() {
                return None;
            }
        }
        Some(UPoly::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()))
    }
}

impl<T: Scalar> fmt::Display for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl UPoly<Rat> {
    /// Monic gcd over the rationals (Euclidean algorithm).
    pub fn gcd(&self, rhs: &UPoly<Rat>) -> UPoly<Rat> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(lc) = a.leading() {
            let inv = lc.recip();
            return a.scale(&inv);
        }
        a
    }

    /// Remainder of Euclidean division (field coefficients).
    pub fn rem(&self, rhs: &UPoly<Rat>) -> UPoly<Rat> {
        let d = rhs.degree().expect("division by zero polynomial");
        let lc = rhs.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let factor = r.leading().unwrap() / &lc;
            let shift = rd - d;
            let mut sub = vec![<Rat as Zero>::zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|c| c * &factor));
            r = r.sub(&UPoly::new(sub));
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int, DualRat};
    use proptest::prelude::*;

    fn xyz() -> Arc<VarTable> {
        VarTable::unweighted(&["x", "y", "z"])
    }

    #[test]
    fn display_canonical_ordering_and_signs() {
        let t = xyz();
        let x = MPoly::var(&t, 0);
        let y = MPoly::var(&t, 1);
        let p = x
            .mul(&x)
            .sub(&y.mul_rat(&rat(3, 4)))
            .add(&MPoly::int(&t, -1));
        assert_eq!(p.to_string(), "x^2 - 3/4*y - 1");
    }

    #[test]
    fn display_weighted_order() {
        // y has weight 3, so y dominates x^2 in graded order.
        let t = VarTable::new(&[("x", 1), ("y", 3)]);
        let p = MPoly::var(&t, 0).pow(2).add(&MPoly::var(&t, 1));
        assert_eq!(p.to_string(), "y + x^2");
    }

    #[test]
    fn parse_round_trip_hand_cases() {
        let t = xyz();
        for s in [
            "0",
            "1",
            "-1",
            "x",
            "-x",
            "2*x*y^2 - z + 1/2",
            "x^2*y^3*z - 7/3*y + 5",
        ] {
            let p = MPoly::parse(s, &t).unwrap();
            assert_eq!(p.to_string(), s, "canonical form should round-trip");
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        let t = xyz();
        assert!(MPoly::parse("x +", &t).is_err());
        assert!(MPoly::parse("w", &t).is_err());
        assert!(MPoly::parse("1/0", &t).is_err());
        assert!(MPoly::parse("x ^ 2 $", &t).is_err());
    }

    #[test]
    fn arithmetic_and_substitution() {
        let t = xyz();
        let p = MPoly::parse("x^2 - y", &t).unwrap();
        let q = MPoly::parse("x^2 + y", &t).unwrap();
        assert_eq!(p.mul(&q).to_string(), "x^4 - y^2");
        // substitute x -> y, y -> z^2
        let images = vec![
            MPoly::var(&t, 1),
            MPoly::var(&t, 2).pow(2),
            MPoly::var(&t, 2),
        ];
        assert_eq!(p.subst(&t, &images).to_string(), "y^2 - z^2");
    }

    #[test]
    fn eval_in_dual_numbers() {
        let t = xyz();
        // d/deps [ (1+eps)^2 * 3 ] = 6 at eps = 0
        let p = MPoly::parse("3*x^2", &t).unwrap();
        let point = vec![
            DualRat::new(rat_int(1), rat_int(1)),
            DualRat::from_int(0),
            DualRat::from_int(0),
        ];
        let v = p.eval(&point);
        assert_eq!(v.val, rat_int(3));
        assert_eq!(v.slope, rat_int(6));
    }

    #[test]
    fn checked_div_exact_and_inexact() {
        let t = xyz();
        let p = MPoly::parse("x^2 - y^2", &t).unwrap();
        let d = MPoly::parse("x - y", &t).unwrap();
        assert_eq!(p.checked_div(&d).unwrap().to_string(), "x + y");
        let nd = MPoly::parse("x - z", &t).unwrap();
        assert!(p.checked_div(&nd).is_none());
    }

    #[test]
    fn homogeneity_and_multidegrees() {
        let base = VarTable::new(&[("x", 1), ("y", 2)]);
        let t = VarTable::with_multidegrees(&base, vec![vec![1, 0], vec![1, 1]]);
        let p = MPoly::parse("x^2 + y", &t).unwrap();
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(p.multihomogeneous_degree(), None);
        let q = MPoly::parse("x^2*y + y^2", &t).unwrap();
        assert_eq!(q.multihomogeneous_degree(), None);
        let h = MPoly::parse("5*x^2*y", &t).unwrap();
        assert_eq!(h.multihomogeneous_degree(), Some(vec![3, 1]));
    }

    #[test]
    fn elementary_symmetric_matches_expansion() {
        let t = xyz();
        let items: Vec<MPoly> = (0..3).map(|i| MPoly::var(&t, i)).collect();
        assert_eq!(elementary_symmetric(&t, &items, 0).to_string(), "1");
        assert_eq!(
            elementary_symmetric(&t, &items, 2).to_string(),
            "x*y + x*z + y*z"
        );
        assert_eq!(elementary_symmetric(&t, &items, 3).to_string(), "x*y*z");
        assert!(elementary_symmetric(&t, &items, 4).is_zero());
    }

    #[test]
    fn upoly_basics() {
        // (1 + u)^2 = 1 + 2u + u^2
        let p = UPoly::new(vec![rat_int(1), rat_int(1)]);
        let sq = p.mul(&p);
        assert_eq!(sq.coeffs(), &[rat_int(1), rat_int(2), rat_int(1)]);
        assert_eq!(sq.eval(&rat_int(2)), rat_int(9));
        assert_eq!(sq.derivative().coeffs(), &[rat_int(2), rat_int(2)]);
        let even = sq.compose_square();
        assert_eq!(even.even_part_exact().unwrap(), sq);
        assert!(UPoly::new(vec![rat_int(0), rat_int(1)])
            .even_part_exact()
            .is_none());
    }

    #[test]
    fn upoly_gcd_detects_repeated_roots() {
        // f = (u-1)^2 (u+2): gcd(f, f') = u - 1
        let f = UPoly::new(vec![rat_int(2), rat_int(-3), rat_int(0), rat_int(1)]);
        let g = f.gcd(&f.derivative());
        assert_eq!(g.coeffs(), &[rat_int(-1), rat_int(1)]);
    }

    fn arb_poly(t: Arc<VarTable>) -> impl Strategy<Value = MPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u16..4, t.len()),
                -9i64..=9,
                1i64..=4,
            ),
            0..6,
        )
        .prop_map(move |terms| {
            let mut acc = MPoly::zero(&t);
            for (exps, n, d) in terms {
                acc = acc.add(&MPoly::monomial(&t, Mono::from_exps(&exps), rat(n, d)));
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in arb_poly(xyz())) {
            let s = p.to_string();
            let q = MPoly::parse(&s, &xyz()).unwrap();
            prop_assert_eq!(p, q);
        }

        #[test]
        fn ring_axioms(a in arb_poly(xyz()), b in arb_poly(xyz()), c in arb_poly(xyz())) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), MPoly::zero(&xyz()));
        }

        #[test]
        fn exact_division_round_trip(a in arb_poly(xyz()), b in arb_poly(xyz())) {
            if !b.is_zero() {
                let prod = a.mul(&b);
                let q = prod.checked_div(&b).expect("product must divide exactly");
                prop_assert_eq!(q, a);
            }
        }
    }
}
