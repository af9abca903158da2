//! Symmetric polynomials in the shifted coordinates `x'_i = x_i + y_{−i}`,
//! stored by their coefficients on dominant monomials only.
//!
//! A polynomial symmetric in `x'_1..x'_n` is determined by the coefficients of
//! monomials `x'^α` with `α` weakly decreasing; those exponents are
//! partitions with at most `n` parts. Coefficients live in the y/u ring.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{Monomial, Poly, YSpec};
use crate::schur;

/// Dominant-monomial coefficients of a symmetric polynomial.
pub type Dominant = BTreeMap<Partition, Poly>;

/// A polynomial grouped by x-exponent vector (length `n`).
pub(crate) type ByX = HashMap<Vec<u32>, Poly>;

pub(crate) fn is_dominant(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

pub(crate) fn group_by_x(p: &Poly, n: usize) -> Result<ByX> {
    let mut out: ByX = HashMap::new();
    for (m, c) in p.terms() {
        let (xe, rest) = m.split_x(n).ok_or_else(|| Error::RankTooSmall {
            n,
            reason: "input involves x_i with i > n".into(),
        })?;
        out.entry(xe).or_default().add_term(rest, c.clone());
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Checks that every permutation orbit of x-exponents carries one coefficient.
pub(crate) fn check_symmetric(by_x: &ByX) -> Result<()> {
    let mut orbits: HashMap<Vec<u32>, (usize, &Poly)> = HashMap::new();
    for (e, c) in by_x {
        let mut key = e.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let slot = orbits.entry(key).or_insert((0, c));
        if slot.1 != c {
            return Err(Error::Asymmetric);
        }
        slot.0 += 1;
    }
    for (key, (count, _)) in orbits {
        if count != orbit_size(&key) {
            return Err(Error::Asymmetric);
        }
    }
    Ok(())
}

/// Number of distinct rearrangements of `e`.
fn orbit_size(e: &[u32]) -> usize {
    let mut mult: HashMap<u32, usize> = HashMap::new();
    for &v in e {
        *mult.entry(v).or_default() += 1;
    }
    let fact = |k: usize| (1..=k).product::<usize>();
    mult.values().fold(fact(e.len()), |acc, &m| acc / fact(m))
}

pub(crate) fn dominant_part(by_x: &ByX) -> Dominant {
    by_x.iter()
        .filter(|(e, _)| is_dominant(e))
        .map(|(e, c)| (Partition::from_sorted(e.clone()), c.clone()))
        .collect()
}

/// Dominant coefficients of `f·g` for symmetric `f`, `g`.
pub(crate) fn dominant_product(f: &ByX, g: &ByX) -> Dominant {
    let mut out: HashMap<Vec<u32>, Poly> = HashMap::new();
    let mut sum = Vec::new();
    for (ea, ca) in f {
        for (eb, cb) in g {
            sum.clear();
            sum.extend(ea.iter().zip(eb).map(|(a, b)| a + b));
            if is_dominant(&sum) {
                let prod = ca * cb;
                *out.entry(sum.clone()).or_default() += &prod;
            }
        }
    }
    out.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (Partition::from_sorted(e), c))
        .collect()
}

/// Graded-lexicographic comparison key of a dominant exponent.
fn glex_key(p: &Partition) -> (u32, &[u32]) {
    (p.weight(), p.parts())
}

pub(crate) fn leading(d: &Dominant) -> Option<&Partition> {
    d.keys().max_by(|a, b| glex_key(a).cmp(&glex_key(b)))
}

/// Shifted double Schur functions at fixed rank and specialization, memoized.
///
/// Safe to share between worker threads.
pub struct ShiftedBasis {
    n: usize,
    spec: YSpec,
    dominant: Mutex<HashMap<Partition, Arc<Dominant>>>,
    full: Mutex<HashMap<Partition, Arc<ByX>>>,
}

impl ShiftedBasis {
    pub fn new(n: usize, spec: YSpec) -> Self {
        ShiftedBasis {
            n,
            spec,
            dominant: Mutex::new(HashMap::new()),
            full: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> &YSpec {
        &self.spec
    }

    /// `ⁿs*_λ` in shifted coordinates, grouped by x-exponent.
    pub(crate) fn full(&self, lambda: &Partition) -> Result<Arc<ByX>> {
        if let Some(v) = self.full.lock().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let p = schur::shifted_double_schur_in_shifted_coords(lambda, self.n, &self.spec)?;
        let v = Arc::new(group_by_x(&p, self.n)?);
        self.full.lock().unwrap().entry(lambda.clone()).or_insert(v.clone());
        Ok(v)
    }

    /// Dominant coefficients of `ⁿs*_ν` in shifted coordinates.
    pub fn dominant(&self, nu: &Partition) -> Result<Arc<Dominant>> {
        if let Some(v) = self.dominant.lock().unwrap().get(nu) {
            return Ok(v.clone());
        }
        let v = Arc::new(dominant_by_tableaux(nu, self.n, &self.spec)?);
        self.dominant.lock().unwrap().entry(nu.clone()).or_insert(v.clone());
        Ok(v)
    }

    /// Expands a symmetric polynomial, given by dominant coefficients, in the
    /// basis `ⁿs*_ν` by repeatedly cancelling the graded-lex leading monomial.
    pub(crate) fn peel(&self, mut rem: Dominant) -> Result<BTreeMap<Partition, Poly>> {
        let mut out = BTreeMap::new();
        while let Some(nu) = leading(&rem).cloned() {
            let c = rem.remove(&nu).expect("leading key present");
            let b = self.dominant(&nu)?;
            if b.get(&nu).and_then(Poly::as_constant) != Some(BigRational::one()) {
                return Err(Error::Inconsistency(format!("basis element {nu} is not monic")));
            }
            for (k, v) in b.iter().filter(|(k, _)| **k != nu) {
                let delta = &c * v;
                let slot = rem.entry(k.clone()).or_default();
                *slot -= &delta;
                if slot.is_zero() {
                    rem.remove(k);
                }
            }
            out.insert(nu, c);
        }
        Ok(out)
    }
}

/// Dominant coefficients of `ⁿs_ν(x'|b)`, `b = τ^{n+1} y`, from the tableau sum
/// `Σ_T ∏_{α∈ν} (x'_{T(α)} − b_{T(α)+c(α)})` over semistandard `T` with entries
/// in `1..=n`, where `c(α)` is the content of the cell.
pub(crate) fn dominant_by_tableaux(nu: &Partition, n: usize, spec: &YSpec) -> Result<Dominant> {
    if nu.len() > n {
        return Ok(Dominant::new());
    }
    let cells: Vec<(usize, usize)> = nu.cells().collect();
    let above: Vec<Option<usize>> = cells
        .iter()
        .map(|&(r, c)| (r > 0).then(|| cells.iter().position(|&x| x == (r - 1, c)).unwrap()))
        .collect();
    // b_k = y_{k-n-1}; indices needed: T + c ranges over 1-l(ν)..=n+ν_1
    let lo = 1 - nu.len() as i64;
    let hi = n as i64 + nu.part(0) as i64;
    let mut neg_b: HashMap<i64, Option<(BigRational, Monomial)>> = HashMap::new();
    for k in lo..=hi {
        let v = spec.value_term(k - n as i64 - 1)?.map(|(c, m)| (-c, m));
        neg_b.insert(k, v);
    }

    struct Walk<'a> {
        cells: &'a [(usize, usize)],
        above: &'a [Option<usize>],
        neg_b: &'a HashMap<i64, Option<(BigRational, Monomial)>>,
        n: usize,
        fill: Vec<usize>,
        content: Vec<u32>,
        out: HashMap<Vec<u32>, Poly>,
    }

    impl Walk<'_> {
        fn go(&mut self, k: usize, coeff: &BigRational, mono: &Monomial) {
            if k == self.cells.len() {
                if is_dominant(&self.content) {
                    self.out
                        .entry(self.content.clone())
                        .or_default()
                        .add_term(mono.clone(), coeff.clone());
                }
                return;
            }
            let (r, c) = self.cells[k];
            let left = if c > 0 { self.fill[k - 1] } else { 1 };
            let lo = match self.above[k] {
                Some(a) => left.max(self.fill[a] + 1),
                None => left,
            };
            for v in lo..=self.n {
                self.fill[k] = v;
                self.content[v - 1] += 1;
                self.go(k + 1, coeff, mono);
                self.content[v - 1] -= 1;
                let idx = v as i64 + c as i64 - r as i64;
                if let Some((bc, bm)) = &self.neg_b[&idx] {
                    self.go(k + 1, &(coeff * bc), &mono.mul(bm));
                }
            }
        }
    }

    let mut walk = Walk {
        cells: &cells,
        above: &above,
        neg_b: &neg_b,
        n,
        fill: vec![0; cells.len()],
        content: vec![0; n],
        out: HashMap::new(),
    };
    walk.go(0, &BigRational::one(), &Monomial::one());
    Ok(walk
        .out
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (Partition::from_sorted(e), c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;

    #[test]
    fn tableau_sum_matches_jacobi_trudi() {
        for spec in [YSpec::Symbolic, YSpec::Standard { d: -1 }, YSpec::Zero, YSpec::Torus { shift: 2 }] {
            for n in 1..=4 {
                for nu in partitions_up_to(4, n) {
                    let jt = schur::shifted_double_schur_in_shifted_coords(&nu, n, &spec).unwrap();
                    let expected = dominant_part(&group_by_x(&jt, n).unwrap());
                    assert_eq!(dominant_by_tableaux(&nu, n, &spec).unwrap(), expected, "{nu} n={n} {spec}");
                }
            }
        }
    }

    #[test]
    fn symmetry_check() {
        let sym = Poly::parse("x1^2*x2 + x1*x2^2 + 3*y[1]").unwrap();
        assert!(check_symmetric(&group_by_x(&sym, 2).unwrap()).is_ok());
        let asym = Poly::parse("x1^2*x2 + 2*x1*x2^2").unwrap();
        assert_eq!(check_symmetric(&group_by_x(&asym, 2).unwrap()), Err(Error::Asymmetric));
        let missing = Poly::parse("x1 + x2").unwrap();
        assert_eq!(check_symmetric(&group_by_x(&missing, 3).unwrap()), Err(Error::Asymmetric));
    }

    #[test]
    fn leading_is_graded_lex_max() {
        let mut d = Dominant::new();
        for s in ["3", "2,1", "1,1,1", "4"] {
            d.insert(Partition::parse(s).unwrap(), Poly::one());
        }
        assert_eq!(leading(&d), Some(&Partition::parse("4").unwrap()));
        d.remove(&Partition::parse("4").unwrap());
        assert_eq!(leading(&d), Some(&Partition::parse("3").unwrap()));
    }
}
