use std::fmt::Write as _;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use eqschur::comult::verify_primitivity;
use eqschur::partitions::partitions_up_to;
use eqschur::polyring::Var;
use eqschur::schur::{self, Method};
use eqschur::structconst::{self, ShiftedBasis, StructMethod};
use eqschur::{Error, Monomial, Partition, Poly, YSpec};

use crate::render::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Jacobi-Trudi determinant equals the ratio of alternants.
    JacobiTrudi,
    /// det[(x_i|y)^{n−j}] is the Vandermonde product.
    Denominator,
    /// Setting the last variable to zero lowers the rank.
    Stability,
    /// Expansion and localization give the same structure constants.
    Localization,
    /// Expansion agrees with the hook formula (standard specialization only).
    Molev,
    /// Δp_k = p_k⊗1 + 1⊗p_k for k ≤ max-weight, 2 ≤ l ≤ n.
    Primitivity,
    /// Randomized ring identities for polynomial arithmetic (uses --seed).
    Ring,
}

pub struct Options {
    pub max_weight: u32,
    pub n: usize,
    pub seed: u64,
    pub jobs: usize,
    pub yspec: YSpec,
    pub format: Format,
}

pub struct Outcome {
    pub pass: bool,
    pub text: String,
}

type Check<'a, C> = dyn Fn(&C) -> Result<Option<String>, Error> + Sync + 'a;

/// Runs `check` on every case; `Some(msg)` marks a failure.
fn check_all<C: Sync>(cases: &[C], jobs: usize, check: &Check<'_, C>) -> Result<Vec<String>, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Inconsistency(e.to_string()))?;
    let results = pool.install(|| cases.par_iter().map(check).collect::<Result<Vec<_>, _>>())?;
    Ok(results.into_iter().flatten().collect())
}

fn summarize(name: &str, cases: usize, failures: Vec<String>, format: Format, mut preamble: String) -> Outcome {
    let pass = failures.is_empty();
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({
                "suite": name,
                "pass": pass,
                "cases": cases,
                "failures": failures,
            }))
            .unwrap();
            s.push('\n');
            s
        }
        _ => {
            for f in &failures {
                writeln!(preamble, "FAIL {f}").unwrap();
            }
            if pass {
                writeln!(preamble, "PASS (all {cases} cases)").unwrap();
            } else {
                writeln!(preamble, "FAIL ({} of {cases} cases)", failures.len()).unwrap();
            }
            preamble
        }
    };
    Outcome { pass, text }
}

fn shapes(o: &Options, ranks: impl Iterator<Item = usize>) -> Vec<(Partition, usize)> {
    ranks
        .flat_map(|n| partitions_up_to(o.max_weight, n).into_iter().map(move |l| (l, n)))
        .collect()
}

fn pairs(o: &Options) -> Vec<(Partition, Partition)> {
    let ps = partitions_up_to(o.max_weight, o.max_weight as usize);
    let mut out = Vec::new();
    for (i, a) in ps.iter().enumerate() {
        for b in &ps[i..] {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

pub fn run(suite: Suite, o: &Options) -> Result<Outcome, Error> {
    let spec = &o.yspec;
    match suite {
        Suite::JacobiTrudi => {
            let cases = shapes(o, 1..=o.n);
            let f = check_all(&cases, o.jobs, &|(l, n)| {
                let a = schur::double_schur(l, *n, spec, Method::JacobiTrudi)?;
                let b = schur::double_schur(l, *n, spec, Method::DetRatio)?;
                Ok((a != b).then(|| format!("λ={l} n={n}")))
            })?;
            Ok(summarize("jacobi-trudi", cases.len(), f, o.format, String::new()))
        }
        Suite::Denominator => {
            let cases: Vec<usize> = (1..=o.n).collect();
            let f = check_all(&cases, o.jobs, &|n| {
                let ok = schur::denominator_det(*n, spec)? == schur::vandermonde(*n);
                Ok((!ok).then(|| format!("n={n}")))
            })?;
            Ok(summarize("denominator", cases.len(), f, o.format, String::new()))
        }
        Suite::Stability => {
            let cases = shapes(o, 1..=o.n);
            let f = check_all(&cases, o.jobs, &|(l, n)| {
                let small = schur::shifted_double_schur(l, *n, spec)?;
                let big = schur::shifted_double_schur(l, n + 1, spec)?;
                let last = Var::X(*n as u32 + 1);
                let cut = big.map_vars(|v| Ok(if v == last { Some(Poly::zero()) } else { None }))?;
                Ok((cut != small).then(|| format!("λ={l} n={n}")))
            })?;
            Ok(summarize("stability", cases.len(), f, o.format, String::new()))
        }
        Suite::Localization | Suite::Molev => {
            let cases = pairs(o);
            let basis = ShiftedBasis::new(o.n, spec.clone());
            let other = if suite == Suite::Molev {
                StructMethod::Molev
            } else {
                StructMethod::Localize
            };
            let f = check_all(&cases, o.jobs, &|(a, b)| {
                let x = structconst::structure_constants(&basis, a, b, StructMethod::Expand)?;
                let y = structconst::structure_constants(&basis, a, b, other)?;
                Ok((x != y).then(|| format!("λ={a} μ={b}")))
            })?;
            let name = if suite == Suite::Molev { "molev" } else { "localization" };
            Ok(summarize(name, cases.len(), f, o.format, String::new()))
        }
        Suite::Primitivity => {
            let cases: Vec<(i64, usize)> = (1..=o.max_weight as i64)
                .flat_map(|k| (2..=o.n.max(2)).map(move |l| (k, l)))
                .collect();
            let reports = cases
                .iter()
                .map(|&(k, l)| verify_primitivity(k, l))
                .collect::<Result<Vec<_>, _>>()?;
            if o.format == Format::Json {
                let mut s = serde_json::to_string_pretty(&json!({
                    "suite": "primitivity",
                    "pass": reports.iter().all(|r| r.pass),
                    "reports": reports,
                }))
                .unwrap();
                s.push('\n');
                return Ok(Outcome {
                    pass: reports.iter().all(|r| r.pass),
                    text: s,
                });
            }
            let mut lines = String::new();
            let mut failures = Vec::new();
            for r in &reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                writeln!(
                    lines,
                    "k={} l={} {status} {:.3}ms ({})",
                    r.k,
                    r.l,
                    r.elapsed.as_secs_f64() * 1e3,
                    r.truncation_note()
                )
                .unwrap();
                if !r.pass {
                    failures.push(format!("k={} l={}: lhs {} ≠ rhs {}", r.k, r.l, r.lhs, r.rhs));
                }
            }
            Ok(summarize("primitivity", cases.len(), failures, o.format, lines))
        }
        Suite::Ring => {
            let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
            let cases: Vec<[Poly; 3]> = (0..200)
                .map(|_| [random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng)])
                .collect();
            let f = check_all(&cases, o.jobs, &|[a, b, c]| {
                let assoc = &(a * b) * c == a * &(b * c);
                let distrib = a * &(b + c) == &(a * b) + &(a * c);
                let comm = a * b == b * a;
                let shift = (a * b).shift_y(2) == &a.shift_y(2) * &b.shift_y(2);
                let round = Poly::parse(&a.canonical_string())? == *a;
                let ok = assoc && distrib && comm && shift && round;
                Ok((!ok).then(|| format!("a={a} b={b} c={c}")))
            })?;
            Ok(summarize("ring", cases.len(), f, o.format, String::new()))
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(0..4) {
        let mut pairs = Vec::new();
        for _ in 0..rng.gen_range(0..3) {
            let v = match rng.gen_range(0..4) {
                0 => Var::U,
                1 => Var::USeq(rng.gen_range(-2..=2)),
                2 => Var::Y(rng.gen_range(-2..=2)),
                _ => Var::X(rng.gen_range(1..=3)),
            };
            pairs.push((v, rng.gen_range(1..=2)));
        }
        let c = num_rational::BigRational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into());
        p.add_term(Monomial::from_pairs(pairs), c);
    }
    p
}
