//! Sparse multivariate polynomials with exact rational coefficients over the
//! variables `x_i` (i ≥ 1), `y_j`, `u_j` (j ∈ ℤ) and the scalar `u`.

mod format;
mod parse;
mod yspec;

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use format::{PolyJsonTerm, VarJson};
pub use parse::{parse_expr, Expr};
pub use yspec::{IntSeqWindow, YSpec};

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial variable.
///
/// The derived order `U < USeq(j) < Y(j) < X(i)` (indices ascending) is the
/// variable order of the graded-lexicographic monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// The equivariant parameter of an S¹ action.
    U,
    /// Torus weight `u_j`.
    USeq(i64),
    /// Sequence parameter `y_j`.
    Y(i64),
    /// `x_i`, `i ≥ 1`.
    X(u32),
}

impl Var {
    pub fn x(i: u32) -> Var {
        assert!(i >= 1, "x-indices start at 1");
        Var::X(i)
    }
}

/// A power product, kept sorted by variable with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::pow_of(v, 1)
    }

    pub fn pow_of(v: Var, e: u32) -> Self {
        let mut m = SmallVec::new();
        if e > 0 {
            m.push((v, e));
        }
        Monomial(m)
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut v: SmallVec<[(Var, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Var, u32)> + '_ {
        self.0.iter()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.0
            .iter()
            .filter(|p| matches!(p.0, Var::X(_)))
            .map(|p| p.1)
            .sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Splits into the x-part (dense exponent vector of length `n`) and the rest.
    /// Returns `None` when some `x_i` with `i > n` occurs.
    pub fn split_x(&self, n: usize) -> Option<(Vec<u32>, Monomial)> {
        let mut xs = vec![0u32; n];
        let mut rest = SmallVec::new();
        for &(v, e) in &self.0 {
            match v {
                Var::X(i) => *xs.get_mut(i as usize - 1)? = e,
                _ => rest.push((v, e)),
            }
        }
        Some((xs, Monomial(rest)))
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let mut k = 0;
        loop {
            match (a.get(k), b.get(k)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the one carrying the earlier variable is larger
                        return vb.cmp(&va);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
            k += 1;
        }
    }
}

/// Graded lexicographic order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in canonical form: no zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: FxHashMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(rat(n))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        Poly::term(BigRational::one(), Monomial::var(v))
    }

    pub fn x(i: u32) -> Self {
        Poly::var(Var::x(i))
    }

    pub fn y(j: i64) -> Self {
        Poly::var(Var::Y(j))
    }

    pub fn u() -> Self {
        Poly::var(Var::U)
    }

    pub fn u_seq(j: i64) -> Self {
        Poly::var(Var::USeq(j))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    /// Terms in descending graded-lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// The single `(coefficient, monomial)` pair of a one-term polynomial.
    pub fn as_term(&self) -> Option<(&BigRational, &Monomial)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(m, c)| (c, m)),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &BigRational, mono: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Maximal total degree in the x variables; `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::x_degree).max()
    }

    /// The homogeneous component of x-degree `d` (coefficients keep y/u).
    pub fn x_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    /// Applies a ring homomorphism determined by its values on variables.
    /// `image` returns `None` for variables that stay fixed.
    pub fn map_vars<F>(&self, mut image: F) -> Result<Poly>
    where
        F: FnMut(Var) -> Result<Option<Poly>>,
    {
        let mut images: HashMap<Var, Option<Poly>> = HashMap::new();
        let mut powers: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut fixed: SmallVec<[(Var, u32); 4]> = SmallVec::new();
            let mut acc = Poly::constant(c.clone());
            for &(v, e) in m.iter() {
                if let Entry::Vacant(slot) = images.entry(v) {
                    slot.insert(image(v)?);
                }
                match &images[&v] {
                    None => fixed.push((v, e)),
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e));
                        acc = &acc * &*pw;
                        if acc.is_zero() {
                            break;
                        }
                    }
                }
            }
            if acc.is_zero() {
                continue;
            }
            let fm = Monomial(fixed);
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&fm), ac);
            }
        }
        Ok(out)
    }

    /// Simultaneous substitution; absent variables are left unchanged.
    pub fn substitute(&self, assignment: &HashMap<Var, Poly>) -> Poly {
        self.map_vars(|v| Ok(assignment.get(&v).cloned()))
            .expect("infallible substitution")
    }

    /// Evaluates `p(τ^k y)`: every `y_j` becomes `y_{j-k}`.
    pub fn shift_y(&self, k: i64) -> Poly {
        if k == 0 {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let shifted = Monomial::from_pairs(m.iter().map(|&(v, e)| match v {
                        Var::Y(j) => (Var::Y(j - k), e),
                        other => (other, e),
                    }));
                    (shifted, c.clone())
                })
                .collect(),
        }
    }

    /// Replaces every `y_j` according to `spec`.
    pub fn specialize_y(&self, spec: &YSpec) -> Result<Poly> {
        if matches!(spec, YSpec::Symbolic) {
            return Ok(self.clone());
        }
        self.map_vars(|v| match v {
            Var::Y(j) => spec.value(j).map(Some),
            _ => Ok(None),
        })
    }

    /// Exact division; fails unless `divisor` divides `self` with zero remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (lm, lc) = divisor
            .leading_term()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let tail: Vec<(Monomial, BigRational)> = divisor
            .terms
            .iter()
            .filter(|(m, _)| **m != lm)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        let mut rem: BTreeMap<Monomial, BigRational> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(&lm).ok_or_else(|| {
                Error::Inconsistency("exact division left a nonzero remainder".into())
            })?;
            let qc = &c / &lc;
            for (tm, tc) in &tail {
                let key = qm.mul(tm);
                let delta = &qc * tc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// `true` when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        out += small;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut terms: FxHashMap<Monomial, BigRational> = FxHashMap::default();
        terms.reserve(self.len().max(rhs.len()));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match terms.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &'a Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<BigRational> for Poly {
    fn from(c: BigRational) -> Self {
        Poly::constant(c)
    }
}

#[cfg(test)]
mod tests;
