//! Structure constants of the shifted double Schur basis.
//!
//! Three independent routes are provided: direct expansion of the product,
//! localization at partition-labeled fixed points, and the hook formula valid
//! under the standard one-parameter specialization.

mod basis;
mod table;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{hook_h, partitions_between, partitions_containing, Partition, SkewShape};
use crate::polyring::{Monomial, Poly, Var, YSpec};
use crate::schur;

pub use basis::{Dominant, ShiftedBasis};
pub use table::{multiplication_table, MultiplicationTable, TableFormat, TableRow};

/// Coefficients of a polynomial in the basis `ⁿs*_ν(x|y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    pub yspec: YSpec,
    pub coefficients: BTreeMap<Partition, Poly>,
}

impl SchurExpansion {
    pub fn coeff(&self, nu: &Partition) -> Poly {
        self.coefficients.get(nu).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Poly)> + '_ {
        self.coefficients.iter()
    }

    /// `Σ_ν c_ν · ⁿs*_ν(x|y)` in the original coordinates.
    pub fn reconstruct(&self) -> Result<Poly> {
        let mut acc = Poly::zero();
        for (nu, c) in &self.coefficients {
            let s = schur::shifted_double_schur(nu, self.n, &self.yspec)?;
            acc += &(c * &s);
        }
        Ok(acc)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (i, (nu, c)) in self.coefficients.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{nu}: {c}")?;
        }
        Ok(())
    }
}

fn shifted_frame(p: &Poly, n: usize, spec: &YSpec) -> Result<Poly> {
    let mut images = HashMap::new();
    for i in 1..=n {
        images.insert(Var::x(i as u32), &Poly::x(i as u32) - &spec.value(-(i as i64))?);
    }
    p.map_vars(|v| match v {
        Var::X(i) if i as usize > n => Err(Error::RankTooSmall {
            n,
            reason: format!("input involves x{i}"),
        }),
        _ => Ok(images.get(&v).cloned()),
    })
}

/// Expands `p(x_1..x_n)` in the basis `ⁿs*_ν(x|y)` after specializing `y`.
///
/// `p` must be symmetric in the shifted variables `x_i + y_{−i}`.
pub fn expand_in_shifted_basis(p: &Poly, n: usize, spec: &YSpec) -> Result<SchurExpansion> {
    expand_with(&ShiftedBasis::new(n, spec.clone()), p)
}

/// [`expand_in_shifted_basis`] reusing a precomputed basis.
pub fn expand_with(basis: &ShiftedBasis, p: &Poly) -> Result<SchurExpansion> {
    let (n, spec) = (basis.n(), basis.spec());
    let q = shifted_frame(&p.specialize_y(spec)?, n, spec)?;
    let by_x = basis::group_by_x(&q, n)?;
    basis::check_symmetric(&by_x)?;
    Ok(SchurExpansion {
        n,
        yspec: spec.clone(),
        coefficients: basis.peel(basis::dominant_part(&by_x))?,
    })
}

fn check_stable_rank(lambda: &Partition, mu: &Partition, n: usize) -> Result<()> {
    if n <= lambda.len() + mu.len() {
        return Err(Error::RankTooSmall {
            n,
            reason: format!("stable structure constants need n > l(λ)+l(μ) = {}", lambda.len() + mu.len()),
        });
    }
    Ok(())
}

/// Stable structure constants `C^ν_{λμ}` from the product `s*_λ·s*_μ`.
///
/// Requires `n > l(λ) + l(μ)`.
pub fn multiply_schubert(lambda: &Partition, mu: &Partition, n: usize, spec: &YSpec) -> Result<SchurExpansion> {
    check_stable_rank(lambda, mu, n)?;
    multiply_at_rank(&ShiftedBasis::new(n, spec.clone()), lambda, mu)
}

/// Product `ⁿs*_λ·ⁿs*_μ` expanded in the rank-`n` basis.
///
/// Only `n ≥ l(λ), l(μ)` is needed; for small `n` terms with `l(ν) > n`
/// are absent, which is the finite-rank product.
pub fn multiply_at_rank(basis: &ShiftedBasis, lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    let f = basis.full(lambda)?;
    let g = basis.full(mu)?;
    Ok(SchurExpansion {
        n: basis.n(),
        yspec: basis.spec().clone(),
        coefficients: basis.peel(basis::dominant_product(&f, &g))?,
    })
}

/// Structure constants from restrictions to the fixed points `δ ⊇ λ∪μ`,
/// solved by triangular back-substitution in containment order.
pub fn structure_constants_via_localization(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    spec: &YSpec,
) -> Result<SchurExpansion> {
    check_stable_rank(lambda, mu, n)?;
    localize(lambda, mu, n, spec)
}

fn localize(lambda: &Partition, mu: &Partition, n: usize, spec: &YSpec) -> Result<SchurExpansion> {
    let candidates = partitions_containing(&lambda.union(mu), lambda.weight() + mu.weight(), n);
    let restrict = |nu: &Partition, delta: &Partition| schur::restrict_to_fixed_point(nu, delta, n, spec);
    let mut found: BTreeMap<Partition, Poly> = BTreeMap::new();
    for delta in &candidates {
        let mut rhs = &restrict(lambda, delta)? * &restrict(mu, delta)?;
        for (nu, c) in &found {
            if delta.contains(nu) {
                rhs -= &(c * &restrict(nu, delta)?);
            }
        }
        let diag = restrict(delta, delta)?;
        if diag.is_zero() {
            return Err(Error::DegenerateSpecialization(delta.clone()));
        }
        let c = rhs.div_exact(&diag)?;
        if !c.is_zero() {
            found.insert(delta.clone(), c);
        }
    }
    Ok(SchurExpansion {
        n,
        yspec: spec.clone(),
        coefficients: found,
    })
}

/// `Σ_{λ∪μ ⊆ ρ ⊆ ν} (−1)^{|ν|−|ρ|} h(ρ) / (h(ν/ρ) h(ρ/λ) h(ρ/μ))`, where
/// `h(θ) = |θ|! / dim θ`. Zero when `ν ⊉ λ∪μ`.
pub fn molev_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigRational {
    let base = lambda.union(mu);
    let mut total = BigRational::zero();
    for rho in partitions_between(&base, nu) {
        let h = |outer: &Partition, inner: &Partition| {
            hook_h(&SkewShape::new(outer.clone(), inner.clone()).expect("containment checked"))
        };
        let term = h(&rho, &Partition::empty()) / (h(nu, &rho) * h(&rho, lambda) * h(&rho, mu));
        if (nu.weight() - rho.weight()).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Structure constants under `standard(d)` from [`molev_coefficient`]:
/// `C^ν_{λμ} = c·u^{|λ|+|μ|−|ν|}`, independent of `d`.
pub fn structure_constants_via_molev(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    spec: &YSpec,
) -> Result<SchurExpansion> {
    if !matches!(spec, YSpec::Standard { .. }) {
        return Err(Error::InvalidArgument(format!(
            "the hook formula applies only to standard(d), not {spec}"
        )));
    }
    check_stable_rank(lambda, mu, n)?;
    let top = lambda.weight() + mu.weight();
    let mut coefficients = BTreeMap::new();
    for nu in partitions_containing(&lambda.union(mu), top, n) {
        let c = molev_coefficient(lambda, mu, &nu);
        if !c.is_zero() {
            let m = Monomial::pow_of(Var::U, top - nu.weight());
            coefficients.insert(nu, Poly::term(c, m));
        }
    }
    Ok(SchurExpansion {
        n,
        yspec: spec.clone(),
        coefficients,
    })
}

/// How structure constants are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructMethod {
    Expand,
    Localize,
    Molev,
}

impl FromStr for StructMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "expand" => Ok(StructMethod::Expand),
            "localize" => Ok(StructMethod::Localize),
            "molev" => Ok(StructMethod::Molev),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for StructMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructMethod::Expand => "expand",
            StructMethod::Localize => "localize",
            StructMethod::Molev => "molev",
        })
    }
}

/// Stable structure constants by the chosen method, sharing `basis` when
/// expanding.
pub fn structure_constants(
    basis: &ShiftedBasis,
    lambda: &Partition,
    mu: &Partition,
    method: StructMethod,
) -> Result<SchurExpansion> {
    let (n, spec) = (basis.n(), basis.spec());
    match method {
        StructMethod::Expand => {
            check_stable_rank(lambda, mu, n)?;
            multiply_at_rank(basis, lambda, mu)
        }
        StructMethod::Localize => structure_constants_via_localization(lambda, mu, n, spec),
        StructMethod::Molev => structure_constants_via_molev(lambda, mu, n, spec),
    }
}

/// `c` if `p = c·u^k` for a rational `c`, else `None`.
pub fn as_u_monomial(p: &Poly, k: u32) -> Option<BigRational> {
    if p.is_zero() {
        return Some(BigRational::zero());
    }
    let (c, m) = p.as_term()?;
    (*m == Monomial::pow_of(Var::U, k)).then(|| c.clone())
}
