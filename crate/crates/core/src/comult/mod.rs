//! Shifted power sums and their comultiplication.
//!
//! The pullback along the direct-sum map splits `p_k(x_1..x_l|u)` by parity
//! of the variable index; relabeling each half recovers `p_k` in one tensor
//! factor, so `Δp_k = p_k⊗1 + 1⊗p_k`.

mod power;
mod tensor;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{Poly, Var, YSpec};

pub use power::{apply_counit, coproduct_power_polynomial, PowerMonomial, PowerPoly, Side};
pub use tensor::{MonoKey, TensorElement};

fn check_degree(k: i64) -> Result<u32> {
    u32::try_from(k)
        .ok()
        .filter(|&k| k >= 1)
        .ok_or_else(|| Error::InvalidArgument(format!("power sum degree must be ≥ 1, got {k}")))
}

/// `Σ_{i≤n} [(x_i + y_{−i})^k − y_{−i}^k]` with `y` specialized by `spec`.
pub fn shifted_power_sum(k: i64, n: usize, spec: &YSpec) -> Result<Poly> {
    let k = check_degree(k)?;
    if n == 0 {
        return Err(Error::InvalidArgument("rank must be ≥ 1".into()));
    }
    let mut acc = Poly::zero();
    for i in 1..=n {
        let y = spec.value(-(i as i64))?;
        acc += &(&(&Poly::x(i as u32) + &y).pow(k) - &y.pow(k));
    }
    Ok(acc)
}

/// `Σ_{i≤m} [x_i^k − u_{−i}^k]` over the given index set.
fn unshifted_part(k: u32, indices: impl Iterator<Item = usize>) -> Poly {
    let mut acc = Poly::zero();
    for i in indices {
        acc += &(&Poly::x(i as u32).pow(k) - &Poly::u_seq(-(i as i64)).pow(k));
    }
    acc
}

/// The pullback of `p_k(x_1..x_l|u)` split into its even-index and
/// odd-index parts.
pub fn rho_pullback_power_sum(k: i64, l: usize) -> Result<(Poly, Poly)> {
    let k = check_degree(k)?;
    if l < 2 {
        return Err(Error::InvalidArgument(format!("need l ≥ 2, got {l}")));
    }
    let even = unshifted_part(k, (2..=l).step_by(2));
    let odd = unshifted_part(k, (1..=l).step_by(2));
    Ok((even, odd))
}

/// `x_{2k} ↦ x_k`, `u_{2k} ↦ u_k`.
pub fn psi_even(p: &Poly) -> Result<Poly> {
    p.map_vars(|v| match v {
        Var::X(i) if i % 2 == 0 => Ok(Some(Poly::x(i / 2))),
        Var::USeq(j) if j.rem_euclid(2) == 0 => Ok(Some(Poly::u_seq(j.div_euclid(2)))),
        _ => Err(Error::ParityViolation(format!("{} in the even part", Poly::var(v)))),
    })
}

/// `x_{2k+1} ↦ x_{k+1}`, `u_{2k+1} ↦ u_k`.
pub fn psi_odd(p: &Poly) -> Result<Poly> {
    p.map_vars(|v| match v {
        Var::X(i) if i % 2 == 1 => Ok(Some(Poly::x(i / 2 + 1))),
        Var::USeq(j) if j.rem_euclid(2) == 1 => Ok(Some(Poly::u_seq(j.div_euclid(2)))),
        _ => Err(Error::ParityViolation(format!("{} in the odd part", Poly::var(v)))),
    })
}

/// `ψ_even(even) ⊗ 1 + 1 ⊗ ψ_odd(odd)`.
pub fn relabel_even_odd(even: &Poly, odd: &Poly) -> Result<TensorElement> {
    let left = TensorElement::from_pair(&psi_even(even)?, &Poly::one());
    let right = TensorElement::from_pair(&Poly::one(), &psi_odd(odd)?);
    Ok(&left + &right)
}

/// Outcome of one primitivity check.
#[derive(Clone, Debug, Serialize)]
pub struct PrimitivityReport {
    pub k: u32,
    pub l: usize,
    pub pass: bool,
    /// Number of variables kept in the left and right tensor factors.
    pub left_rank: usize,
    pub right_rank: usize,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PrimitivityReport {
    pub fn truncation_note(&self) -> String {
        let vars = |m: usize| if m == 1 { "1 variable".to_string() } else { format!("{m} variables") };
        format!(
            "left factor truncated at {}, right factor at {}",
            vars(self.left_rank),
            vars(self.right_rank)
        )
    }
}

/// Checks `ψ(ρ* p_k) = p_k⊗1 + 1⊗p_k` in shifted coordinates, with the left
/// factor truncated at `⌊l/2⌋` variables and the right at `⌊(l−1)/2⌋+1`.
pub fn verify_primitivity(k: i64, l: usize) -> Result<PrimitivityReport> {
    let start = Instant::now();
    let (even, odd) = rho_pullback_power_sum(k, l)?;
    let lhs = relabel_even_odd(&even, &odd)?;
    let torus = YSpec::Torus { shift: 0 };
    let to_shifted = |p: &Poly| -> Result<Poly> {
        p.map_vars(|v| match v {
            Var::X(i) => Ok(Some(&Poly::x(i) + &Poly::u_seq(-(i as i64)))),
            _ => Ok(None),
        })
    };
    let lhs = lhs.map_factors(to_shifted, to_shifted)?;
    let (left_rank, right_rank) = (l / 2, (l - 1) / 2 + 1);
    let rhs = &TensorElement::from_pair(&shifted_power_sum(k, left_rank, &torus)?, &Poly::one())
        + &TensorElement::from_pair(&Poly::one(), &shifted_power_sum(k, right_rank, &torus)?);
    Ok(PrimitivityReport {
        k: k as u32,
        l,
        pass: lhs == rhs,
        left_rank,
        right_rank,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests;
