use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{structure_constants, ShiftedBasis, StructMethod};
use crate::error::{Error, Result};
use crate::partitions::{partitions_up_to, Partition};
use crate::polyring::{Poly, YSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Json,
    Latex,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(TableFormat::Text),
            "json" => Ok(TableFormat::Json),
            "latex" => Ok(TableFormat::Latex),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub lambda: Partition,
    pub mu: Partition,
    pub terms: BTreeMap<Partition, Poly>,
}

/// Structure constants for all pairs `λ ≤ μ` (canonical order) with
/// `|λ|, |μ| ≤ max_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    pub yspec: YSpec,
    pub n: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    nu: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RowJson {
    lambda: Partition,
    mu: Partition,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    yspec: YSpec,
    n: usize,
    rows: Vec<RowJson>,
}

/// Computes the table on `jobs` worker threads. Row order does not depend on
/// `jobs`.
pub fn multiplication_table(
    max_weight: u32,
    n: usize,
    spec: &YSpec,
    method: StructMethod,
    jobs: usize,
) -> Result<MultiplicationTable> {
    let parts = partitions_up_to(max_weight, max_weight as usize);
    let pairs: Vec<(&Partition, &Partition)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, a)| parts[i..].iter().map(move |b| (a, b)))
        .collect();
    let basis = ShiftedBasis::new(n, spec.clone());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Inconsistency(format!("thread pool: {e}")))?;
    let rows = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(lambda, mu)| {
                let e = structure_constants(&basis, lambda, mu, method)?;
                Ok(TableRow {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    terms: e.coefficients,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(MultiplicationTable {
        yspec: spec.clone(),
        n,
        rows,
    })
}

impl MultiplicationTable {
    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Text => self.to_text(),
            TableFormat::Json => self.to_json(),
            TableFormat::Latex => self.to_latex(),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = TableJson {
            yspec: self.yspec.clone(),
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| RowJson {
                    lambda: r.lambda.clone(),
                    mu: r.mu.clone(),
                    terms: r
                        .terms
                        .iter()
                        .map(|(nu, c)| TermJson {
                            nu: nu.clone(),
                            coeff: c.canonical_string(),
                        })
                        .collect(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |reason: String| Error::InvalidArgument(format!("table JSON: {reason}"));
        let doc: TableJson = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let rows = doc
            .rows
            .into_iter()
            .map(|r| {
                let terms = r
                    .terms
                    .into_iter()
                    .map(|t| Ok((t.nu, Poly::parse(&t.coeff)?)))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                Ok(TableRow {
                    lambda: r.lambda,
                    mu: r.mu,
                    terms,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiplicationTable {
            yspec: doc.yspec,
            n: doc.n,
            rows,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# y = {}, n = {}\n", self.yspec, self.n);
        for r in &self.rows {
            let rhs = if r.terms.is_empty() {
                "0".to_string()
            } else {
                r.terms
                    .iter()
                    .map(|(nu, c)| format!("[{c}] s*{nu}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            writeln!(out, "s*{} * s*{} = {}", r.lambda, r.mu, rhs).unwrap();
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{align*}\n");
        for r in &self.rows {
            let rhs = if r.terms.is_empty() {
                "0".to_string()
            } else {
                r.terms
                    .iter()
                    .map(|(nu, c)| format!("\\left({}\\right) s^*_{{{}}}", c.latex_string(), latex_partition(nu)))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            writeln!(
                out,
                "s^*_{{{}}} s^*_{{{}}} &= {} \\\\",
                latex_partition(&r.lambda),
                latex_partition(&r.mu),
                rhs
            )
            .unwrap();
        }
        out.push_str("\\end{align*}\n");
        out
    }
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        "\\varnothing".into()
    } else {
        p.to_text()
    }
}
