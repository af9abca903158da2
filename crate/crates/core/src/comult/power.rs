//! Formal polynomials in the power-sum generators `p_1, p_2, …`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::tensor::{MonoKey, TensorElement};
use crate::error::{Error, Result};
use crate::polyring::parse_expr;

/// `∏ p_k^{e_k}`, stored as the exponent vector `e_1, e_2, …` without
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PowerMonomial(Vec<u32>);

impl PowerMonomial {
    pub fn generator(k: usize) -> Self {
        assert!(k >= 1, "generators are p_1, p_2, …");
        let mut e = vec![0; k];
        e[k - 1] = 1;
        PowerMonomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for PowerMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (a, b) = (&self.0, &other.0);
        let n = a.len().max(b.len());
        let at = |v: &Vec<u32>, i: usize| v.get(i).copied().unwrap_or(0);
        self.degree().cmp(&other.degree()).then_with(|| {
            (0..n).map(|i| at(a, i).cmp(&at(b, i))).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
        })
    }
}

impl PartialOrd for PowerMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl MonoKey for PowerMonomial {
    fn unit() -> Self {
        PowerMonomial(Vec::new())
    }

    fn times(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let at = |v: &Vec<u32>, i: usize| v.get(i).copied().unwrap_or(0);
        PowerMonomial((0..n).map(|i| at(&self.0, i) + at(&other.0, i)).collect())
    }

    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for PowerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("p{}", i + 1),
                _ => format!("p{}^{e}", i + 1),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Polynomial in the generators `p_k` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PowerPoly {
    terms: BTreeMap<PowerMonomial, BigRational>,
}

impl PowerPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(PowerMonomial::unit(), c);
        p
    }

    pub fn generator(k: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(PowerMonomial::generator(k), BigRational::one());
        p
    }

    pub fn add_term(&mut self, m: PowerMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PowerMonomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Parses an expression in `p1, p2, …` such as `p1^2 - 3/2*p2`.
    pub fn parse(text: &str) -> Result<Self> {
        let expr = parse_expr(text)?;
        expr.eval(&PowerPoly::constant, &|s: &str| {
            s.strip_prefix('p')
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .map(PowerPoly::generator)
                .ok_or_else(|| Error::ParseExpr {
                    text: text.to_string(),
                    reason: format!("unknown generator {s:?}; expected p1, p2, …"),
                })
        })
    }
}

impl Add for &PowerPoly {
    type Output = PowerPoly;

    fn add(self, rhs: &PowerPoly) -> PowerPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PowerPoly {
    type Output = PowerPoly;

    fn sub(self, rhs: &PowerPoly) -> PowerPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &PowerPoly {
    type Output = PowerPoly;

    fn mul(self, rhs: &PowerPoly) -> PowerPoly {
        let mut out = PowerPoly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a.times(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for PowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            match (m.is_unit(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

/// `Δ` on power polynomials: `p_k ↦ p_k⊗1 + 1⊗p_k`, extended as an algebra map.
pub fn coproduct_power_polynomial(expr: &PowerPoly) -> TensorElement<PowerMonomial> {
    let mut out = TensorElement::zero();
    for (m, c) in expr.terms() {
        let mut acc = TensorElement::one();
        for (i, &e) in m.exponents().iter().enumerate() {
            let g = PowerMonomial::generator(i + 1);
            let prim = &TensorElement::basis(g.clone(), PowerMonomial::unit())
                + &TensorElement::basis(PowerMonomial::unit(), g);
            for _ in 0..e {
                acc = &acc * &prim;
            }
        }
        out = &out + &acc.scale(c);
    }
    out
}

/// Which tensor factor the counit is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Sets every generator in one factor to zero, keeping the other factor.
pub fn apply_counit(t: &TensorElement<PowerMonomial>, side: Side) -> PowerPoly {
    let mut out = PowerPoly::zero();
    for (l, r, c) in t.terms() {
        let (killed, kept) = match side {
            Side::Left => (l, r),
            Side::Right => (r, l),
        };
        if killed.is_unit() {
            out.add_term(kept.clone(), c.clone());
        }
    }
    out
}
