//! Double Schur functions `ⁿs_λ(x|y)` (determinant ratio and generalized
//! Jacobi-Trudi), shifted double Schur functions `ⁿs*_λ(x|y)`, their stable
//! evaluation, and restriction to torus-fixed points.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{Poly, YSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    DetRatio,
    JacobiTrudi,
}

/// `(x_i|y)^p = ∏_{j=1}^{p} (x_i − y_j)`.
pub fn falling_factorial(i: u32, p: i64) -> Result<Poly> {
    falling_factorial_at(&Poly::x(i), p, &YSpec::Symbolic)
}

fn falling_factorial_at(x: &Poly, p: i64, spec: &YSpec) -> Result<Poly> {
    if p < 0 {
        return Err(Error::NegativeDegree(p));
    }
    let mut acc = Poly::one();
    for j in 1..=p {
        acc = &acc * &(x - &spec.value(j)?);
    }
    Ok(acc)
}

/// Complete double homogeneous function `h_p(x_1,…,x_n | τ^{y_shift} y)`.
/// `h_0 = 1` and `h_p = 0` for `p < 0`.
pub fn double_h(p: i64, n: usize, y_shift: i64) -> Poly {
    let xs: Vec<Poly> = (1..=n as u32).map(Poly::x).collect();
    double_h_at(p, &xs, y_shift, &YSpec::Symbolic).expect("symbolic y never fails")
}

/// `h_p` evaluated at arbitrary values `xs` for the x variables, with the
/// sequence argument `τ^{y_shift} y` resolved through `spec`.
///
/// Uses `h_p(x_1..x_m) = h_p(x_1..x_{m−1}) + (x_m − y_{m+p−1−s}) h_{p−1}(x_1..x_m)`.
pub fn double_h_at(p: i64, xs: &[Poly], y_shift: i64, spec: &YSpec) -> Result<Poly> {
    if p < 0 {
        return Ok(Poly::zero());
    }
    if p == 0 {
        return Ok(Poly::one());
    }
    let p = p as usize;
    // row[q] holds h_q(x_1..x_m) for the current m
    let mut row = vec![Poly::zero(); p + 1];
    row[0] = Poly::one();
    for (idx, x) in xs.iter().enumerate() {
        let m = idx as i64 + 1;
        for q in 1..=p {
            let y = spec.value(m + q as i64 - 1 - y_shift)?;
            let step = &(x - &y) * &row[q - 1];
            row[q] += &step;
        }
    }
    Ok(row.swap_remove(p))
}

/// Determinant by cofactor expansion along rows, memoized over column subsets.
pub fn det(matrix: &[Vec<Poly>]) -> Poly {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "square matrix expected");
    assert!(n < 64);
    fn minor(m: &[Vec<Poly>], row: usize, cols: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
        if row == m.len() {
            return Poly::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = Poly::zero();
        let mut sign_neg = false;
        for j in 0..m.len() {
            if cols & (1 << j) == 0 {
                continue;
            }
            if !m[row][j].is_zero() {
                let sub = minor(m, row + 1, cols & !(1 << j), memo);
                if !sub.is_zero() {
                    let t = &m[row][j] * &sub;
                    if sign_neg {
                        acc -= &t;
                    } else {
                        acc += &t;
                    }
                }
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    minor(matrix, 0, (1u64 << n) - 1, &mut HashMap::new())
}

/// `∏_{i<j} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> Poly {
    let mut acc = Poly::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            acc = &acc * &(&Poly::x(i) - &Poly::x(j));
        }
    }
    acc
}

/// `det[(x_i|y)^{n−j}]`, the denominator of the determinant-ratio definition.
pub fn denominator_det(n: usize, spec: &YSpec) -> Result<Poly> {
    let rows = (1..=n as u32)
        .map(|i| {
            (1..=n)
                .map(|j| falling_factorial_at(&Poly::x(i), (n - j) as i64, spec))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(det(&rows))
}

/// Generalized Jacobi-Trudi determinant at arbitrary x values:
/// `det[h_{λ_i+j−i}(xs | τ^{y_shift+j−1} y)]`.
///
/// Rows below `l(λ)` form a unitriangular block, so only the leading
/// `l(λ) × l(λ)` block is expanded.
pub fn jacobi_trudi_at(lambda: &Partition, xs: &[Poly], y_shift: i64, spec: &YSpec) -> Result<Poly> {
    let l = lambda.len();
    if l > xs.len() {
        return Ok(Poly::zero());
    }
    let mut cache: HashMap<(i64, i64), Poly> = HashMap::new();
    let mut rows = Vec::with_capacity(l);
    for i in 0..l {
        let mut row = Vec::with_capacity(l);
        for j in 0..l {
            let deg = lambda.part(i) as i64 + j as i64 - i as i64;
            let shift = y_shift + j as i64;
            let h = match cache.get(&(deg, shift)) {
                Some(h) => h.clone(),
                None => {
                    let h = double_h_at(deg, xs, shift, spec)?;
                    cache.insert((deg, shift), h.clone());
                    h
                }
            };
            row.push(h);
        }
        rows.push(row);
    }
    Ok(det(&rows))
}

fn check_rank(lambda: &Partition, n: usize) -> Result<()> {
    if n < lambda.len() {
        return Err(Error::RankTooSmall {
            n,
            reason: format!("need n ≥ l({lambda}) = {}", lambda.len()),
        });
    }
    Ok(())
}

fn x_vars(n: usize) -> Vec<Poly> {
    (1..=n as u32).map(Poly::x).collect()
}

/// `ⁿs_λ(x_1,…,x_n|y)` with `y` specialized by `spec`.
pub fn double_schur(lambda: &Partition, n: usize, spec: &YSpec, method: Method) -> Result<Poly> {
    check_rank(lambda, n)?;
    match method {
        Method::JacobiTrudi => jacobi_trudi_at(lambda, &x_vars(n), 0, spec),
        Method::DetRatio => {
            let rows = (1..=n as u32)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let p = lambda.part(j) as i64 + (n - 1 - j) as i64;
                            falling_factorial_at(&Poly::x(i), p, spec)
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let mut num = det(&rows);
            for i in 1..=n as u32 {
                for j in i + 1..=n as u32 {
                    num = num.div_exact(&(&Poly::x(i) - &Poly::x(j)))?;
                }
            }
            Ok(num)
        }
    }
}

/// `ⁿs*_λ(x_1,…,x_n|y) = ⁿs_λ(x_1+y_{−1},…,x_n+y_{−n} | τ^{n+1}y)`.
pub fn shifted_double_schur(lambda: &Partition, n: usize, spec: &YSpec) -> Result<Poly> {
    check_rank(lambda, n)?;
    let xs = (1..=n)
        .map(|i| Ok(&Poly::x(i as u32) + &spec.value(-(i as i64))?))
        .collect::<Result<Vec<_>>>()?;
    jacobi_trudi_at(lambda, &xs, n as i64 + 1, spec)
}

/// `ⁿs*_λ` written in the shifted coordinates `x'_i = x_i + y_{−i}`, i.e.
/// `ⁿs_λ(x'|τ^{n+1}y)` with `x'_i` spelled as `x_i`.
pub fn shifted_double_schur_in_shifted_coords(lambda: &Partition, n: usize, spec: &YSpec) -> Result<Poly> {
    check_rank(lambda, n)?;
    jacobi_trudi_at(lambda, &x_vars(n), n as i64 + 1, spec)
}

/// `s*_λ(x|y)` for finitely many nonzero x values (positions `1..=m`).
///
/// Evaluated at rank `n = max(m, l(λ)+1)`; by stability any larger rank agrees.
pub fn shifted_schur_stable(lambda: &Partition, x_values: &[Poly], spec: &YSpec) -> Result<Poly> {
    let n = x_values.len().max(lambda.len() + 1);
    let xs = (1..=n)
        .map(|i| {
            let x = x_values.get(i - 1).cloned().unwrap_or_else(Poly::zero);
            Ok(&x + &spec.value(-(i as i64))?)
        })
        .collect::<Result<Vec<_>>>()?;
    jacobi_trudi_at(lambda, &xs, n as i64 + 1, spec)
}

/// Restriction of the Schubert class of `λ` to the fixed point labeled by
/// `δ`: `ⁿs*_λ` evaluated at `x_i + y_{−i} = y_{δ_i − i}`.
pub fn restrict_to_fixed_point(lambda: &Partition, delta: &Partition, n: usize, spec: &YSpec) -> Result<Poly> {
    check_rank(lambda, n)?;
    check_rank(delta, n)?;
    let xs = (1..=n)
        .map(|i| spec.value(delta.part(i - 1) as i64 - i as i64))
        .collect::<Result<Vec<_>>>()?;
    jacobi_trudi_at(lambda, &xs, n as i64 + 1, spec)
}

/// A request for one basis function at a fixed rank and specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurRequest {
    pub lambda: Partition,
    pub n: usize,
    pub yspec: YSpec,
}

impl SchurRequest {
    pub fn new(lambda: Partition, n: usize, yspec: YSpec) -> Self {
        SchurRequest { lambda, n, yspec }
    }

    pub fn double(&self, method: Method) -> Result<Poly> {
        double_schur(&self.lambda, self.n, &self.yspec, method)
    }

    pub fn shifted(&self) -> Result<Poly> {
        shifted_double_schur(&self.lambda, self.n, &self.yspec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;
    use crate::polyring::Var;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn poly(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    /// Chain-sum definition of `h_p(x_1..x_n | τ^s y)`.
    fn h_chain_sum(p: usize, n: usize, s: i64) -> Poly {
        fn go(start: usize, k: usize, p: usize, n: usize, s: i64, acc: Poly, out: &mut Poly) {
            if k == p {
                *out += &acc;
                return;
            }
            for i in start..=n {
                let f = &Poly::x(i as u32) - &Poly::y(i as i64 + k as i64 - s);
                go(i, k + 1, p, n, s, &acc * &f, out);
            }
        }
        let mut out = Poly::zero();
        go(1, 0, p, n, s, Poly::one(), &mut out);
        out
    }

    /// Classical Schur polynomial from semistandard tableaux.
    fn schur_by_tableaux(lambda: &Partition, n: usize) -> Poly {
        let cells: Vec<(usize, usize)> = lambda.cells().collect();
        let mut out = Poly::zero();
        let mut fill = vec![0usize; cells.len()];
        fn go(k: usize, cells: &[(usize, usize)], fill: &mut Vec<usize>, n: usize, out: &mut Poly) {
            if k == cells.len() {
                let mut m = Poly::one();
                for &v in fill.iter() {
                    m = &m * &Poly::x(v as u32);
                }
                *out += &m;
                return;
            }
            let (r, c) = cells[k];
            let left = if c > 0 { fill[k - 1] } else { 1 };
            let above = (r > 0).then(|| cells.iter().position(|&x| x == (r - 1, c)).unwrap());
            let lo = above.map_or(left, |a| left.max(fill[a] + 1));
            for v in lo..=n {
                fill[k] = v;
                go(k + 1, cells, fill, n, out);
            }
        }
        go(0, &cells, &mut fill, n, &mut out);
        out
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(1, 0).unwrap(), Poly::one());
        assert_eq!(falling_factorial(1, 1).unwrap(), poly("x1 - y[1]"));
        assert_eq!(falling_factorial(2, 2).unwrap(), poly("(x2 - y[1])*(x2 - y[2])"));
        assert_eq!(falling_factorial(1, -1), Err(Error::NegativeDegree(-1)));
    }

    #[test]
    fn double_h_examples() {
        assert_eq!(double_h(1, 2, 0), poly("(x1 - y[1]) + (x2 - y[2])"));
        assert_eq!(double_h(2, 1, 0), poly("(x1 - y[1])*(x1 - y[2])"));
        assert!(double_h(-1, 3, 0).is_zero());
        assert_eq!(double_h(0, 3, 5), Poly::one());
    }

    #[test]
    fn double_h_recurrence_matches_chain_sum() {
        for p in 0..=3 {
            for n in 1..=3 {
                for s in -2..=2 {
                    assert_eq!(double_h(p as i64, n, s), h_chain_sum(p, n, s), "p={p} n={n} s={s}");
                }
            }
        }
    }

    #[test]
    fn double_schur_examples() {
        let sym = YSpec::Symbolic;
        for m in [Method::DetRatio, Method::JacobiTrudi] {
            assert_eq!(double_schur(&Partition::empty(), 2, &sym, m).unwrap(), Poly::one());
            assert_eq!(double_schur(&p("1"), 2, &sym, m).unwrap(), poly("x1 + x2 - y[1] - y[2]"));
            assert_eq!(double_schur(&p("1"), 2, &YSpec::Zero, m).unwrap(), poly("x1 + x2"));
            assert_eq!(
                double_schur(&p("1,1"), 2, &sym, m).unwrap(),
                poly("(x1 - y[1])*(x2 - y[1])")
            );
        }
        assert!(matches!(
            double_schur(&p("1,1,1"), 2, &sym, Method::JacobiTrudi),
            Err(Error::RankTooSmall { .. })
        ));
    }

    #[test]
    fn methods_agree_small() {
        for n in 1..=3 {
            for lam in partitions_up_to(4, n) {
                let a = double_schur(&lam, n, &YSpec::Symbolic, Method::DetRatio).unwrap();
                let b = double_schur(&lam, n, &YSpec::Symbolic, Method::JacobiTrudi).unwrap();
                assert_eq!(a, b, "{lam} n={n}");
            }
        }
    }

    #[test]
    fn denominator_is_y_free_vandermonde() {
        for n in 1..=4 {
            assert_eq!(denominator_det(n, &YSpec::Symbolic).unwrap(), vandermonde(n));
        }
    }

    #[test]
    fn shifted_examples() {
        let sym = YSpec::Symbolic;
        assert_eq!(shifted_double_schur(&Partition::empty(), 3, &sym).unwrap(), Poly::one());
        assert_eq!(shifted_double_schur(&p("1"), 2, &sym).unwrap(), poly("x1 + x2"));
        assert_eq!(shifted_double_schur(&p("1"), 3, &sym).unwrap(), poly("x1 + x2 + x3"));
    }

    #[test]
    fn shifted_is_substitution_of_double() {
        for lam in partitions_up_to(3, 3) {
            let n = 3;
            let base = double_schur(&lam, n, &YSpec::Symbolic, Method::JacobiTrudi).unwrap();
            let shifted = base.shift_y(n as i64 + 1);
            let assign: HashMap<Var, Poly> = (1..=n as u32)
                .map(|i| (Var::X(i), &Poly::x(i) + &Poly::y(-(i as i64))))
                .collect();
            let expected = shifted.substitute(&assign);
            assert_eq!(shifted_double_schur(&lam, n, &YSpec::Symbolic).unwrap(), expected, "{lam}");
        }
    }

    #[test]
    fn top_degree_is_classical_schur() {
        for n in 1..=3 {
            for lam in partitions_up_to(4, n) {
                let s = shifted_double_schur(&lam, n, &YSpec::Symbolic).unwrap();
                assert_eq!(s.x_degree(), Some(lam.weight()));
                assert_eq!(s.x_component(lam.weight()), schur_by_tableaux(&lam, n), "{lam}");
            }
        }
    }

    #[test]
    fn stability_small() {
        for n in 1..=3 {
            for lam in partitions_up_to(4, n) {
                let big = shifted_double_schur(&lam, n + 1, &YSpec::Symbolic).unwrap();
                let cut = big.substitute(&HashMap::from([(Var::X(n as u32 + 1), Poly::zero())]));
                assert_eq!(cut, shifted_double_schur(&lam, n, &YSpec::Symbolic).unwrap(), "{lam} n={n}");
            }
        }
    }

    #[test]
    fn stable_evaluation_examples() {
        let five = [Poly::int(5)];
        assert_eq!(shifted_schur_stable(&p("1"), &five, &YSpec::Zero).unwrap(), Poly::int(5));
        assert_eq!(shifted_schur_stable(&Partition::empty(), &five, &YSpec::Symbolic).unwrap(), Poly::one());
        let lam = p("2,1");
        let at0 = shifted_schur_stable(&lam, &[], &YSpec::Symbolic).unwrap();
        for n in 3..=5 {
            let full = shifted_double_schur(&lam, n, &YSpec::Symbolic).unwrap();
            let zeros: HashMap<Var, Poly> = (1..=n as u32).map(|i| (Var::X(i), Poly::zero())).collect();
            assert_eq!(full.substitute(&zeros), at0);
        }
    }

    #[test]
    fn restriction_examples() {
        let std0 = YSpec::Standard { d: 0 };
        assert_eq!(
            restrict_to_fixed_point(&Partition::empty(), &p("3,1"), 2, &std0).unwrap(),
            Poly::one()
        );
        assert_eq!(restrict_to_fixed_point(&p("1"), &p("1"), 2, &std0).unwrap(), Poly::u());
        for spec in [YSpec::Symbolic, std0.clone(), YSpec::Torus { shift: 1 }] {
            assert!(restrict_to_fixed_point(&p("2"), &p("1"), 2, &spec).unwrap().is_zero());
        }
        assert!(restrict_to_fixed_point(&p("1"), &p("1,1,1"), 2, &std0).is_err());
    }

    #[test]
    fn restriction_is_substitution_into_shifted_function() {
        let n = 3;
        for lam in partitions_up_to(3, n) {
            for delta in partitions_up_to(3, n) {
                let s = shifted_double_schur(&lam, n, &YSpec::Symbolic).unwrap();
                let assign: HashMap<Var, Poly> = (1..=n)
                    .map(|i| {
                        let v = &Poly::y(delta.part(i - 1) as i64 - i as i64) - &Poly::y(-(i as i64));
                        (Var::X(i as u32), v)
                    })
                    .collect();
                let direct = s.substitute(&assign);
                assert_eq!(restrict_to_fixed_point(&lam, &delta, n, &YSpec::Symbolic).unwrap(), direct);
            }
        }
    }

    #[test]
    fn diagonal_restriction_under_standard_action_is_hook_product() {
        // s*_δ(δ) = H(δ), the product of hook lengths
        for delta in partitions_up_to(5, 5) {
            let v = restrict_to_fixed_point(&delta, &delta, 5, &YSpec::Standard { d: 1 }).unwrap();
            let hooks = crate::partitions::hook_h(&crate::partitions::SkewShape::straight(delta.clone()));
            let expected = Poly::u().pow(delta.weight()).scale(&hooks);
            assert_eq!(v, expected, "{delta}");
        }
    }
}
