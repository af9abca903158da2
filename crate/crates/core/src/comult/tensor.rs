use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::polyring::{Monomial, Poly};

/// Monomial type usable as a tensor factor basis.
pub trait MonoKey: Ord + Clone + fmt::Display {
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl MonoKey for Monomial {
    fn unit() -> Self {
        Monomial::one()
    }

    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn is_unit(&self) -> bool {
        self.is_one()
    }
}

/// Element of `A ⊗ A` in bilinear normal form: a map from pairs of basis
/// monomials to nonzero rational weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement<K: MonoKey = Monomial> {
    terms: BTreeMap<(K, K), BigRational>,
}

impl<K: MonoKey> Default for TensorElement<K> {
    fn default() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }
}

impl<K: MonoKey> TensorElement<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 ⊗ 1`.
    pub fn one() -> Self {
        Self::basis(K::unit(), K::unit())
    }

    pub fn basis(left: K, right: K) -> Self {
        let mut t = Self::zero();
        t.add_term(left, right, BigRational::one());
        t
    }

    pub fn add_term(&mut self, left: K, right: K, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&K, &K, &BigRational)> + '_ {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (l, r, w) in self.terms() {
            out.add_term(l.clone(), r.clone(), w * c);
        }
        out
    }
}

impl TensorElement<Monomial> {
    /// `left ⊗ right`, expanded bilinearly.
    pub fn from_pair(left: &Poly, right: &Poly) -> Self {
        let mut out = Self::zero();
        for (a, ca) in left.terms() {
            for (b, cb) in right.terms() {
                out.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        out
    }

    /// Applies `f` to the left factor and `g` to the right factor.
    pub fn map_factors<E>(
        &self,
        mut f: impl FnMut(&Poly) -> Result<Poly, E>,
        mut g: impl FnMut(&Poly) -> Result<Poly, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero();
        for (l, r, c) in self.terms() {
            let fl = f(&Poly::term(c.clone(), l.clone()))?;
            let gr = g(&Poly::term(BigRational::one(), r.clone()))?;
            out = &out + &Self::from_pair(&fl, &gr);
        }
        Ok(out)
    }
}

impl<K: MonoKey> Add for &TensorElement<K> {
    type Output = TensorElement<K>;

    fn add(self, rhs: &TensorElement<K>) -> TensorElement<K> {
        let mut out = self.clone();
        for (l, r, c) in rhs.terms() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }
}

impl<K: MonoKey> Sub for &TensorElement<K> {
    type Output = TensorElement<K>;

    fn sub(self, rhs: &TensorElement<K>) -> TensorElement<K> {
        let mut out = self.clone();
        for (l, r, c) in rhs.terms() {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }
}

/// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
impl<K: MonoKey> Mul for &TensorElement<K> {
    type Output = TensorElement<K>;

    fn mul(self, rhs: &TensorElement<K>) -> TensorElement<K> {
        let mut out = TensorElement::zero();
        for (a, b, c1) in self.terms() {
            for (c, d, c2) in rhs.terms() {
                out.add_term(a.times(c), b.times(d), c1 * c2);
            }
        }
        out
    }
}

impl<K: MonoKey> fmt::Display for TensorElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, r, c)) in self.terms.iter().rev().map(|((l, r), c)| (l, r, c)).enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{l} ⊗ {r}")?;
            } else {
                write!(f, "{abs}*({l} ⊗ {r})")?;
            }
        }
        Ok(())
    }
}
