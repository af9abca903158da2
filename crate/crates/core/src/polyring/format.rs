use std::fmt::{self, Write as _};

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{parse, Monomial, Poly, Var};
use crate::error::Result;

fn var_text(v: Var) -> String {
    match v {
        Var::U => "u".into(),
        Var::USeq(j) => format!("u[{j}]"),
        Var::Y(j) => format!("y[{j}]"),
        Var::X(i) => format!("x{i}"),
    }
}

fn var_latex(v: Var) -> String {
    match v {
        Var::U => "u".into(),
        Var::USeq(j) => format!("u_{{{j}}}"),
        Var::Y(j) => format!("y_{{{j}}}"),
        Var::X(i) => format!("x_{{{i}}}"),
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in self.iter() {
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(&var_text(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Deterministic text form: descending graded-lex terms, `a/b*mono` coefficients.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if m.is_one() {
                write!(out, "{abs}").unwrap();
            } else if abs.is_one() {
                write!(out, "{m}").unwrap();
            } else {
                write!(out, "{abs}*{m}").unwrap();
            }
        }
        out
    }

    /// LaTeX rendering (without surrounding math delimiters).
    pub fn latex_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            if m.is_one() {
                out.push_str(&coeff);
                continue;
            }
            if !abs.is_one() {
                out.push_str(&coeff);
                out.push(' ');
            }
            let factors: Vec<String> = m
                .iter()
                .map(|&(v, e)| match e {
                    1 => var_latex(v),
                    _ => format!("{}^{{{e}}}", var_latex(v)),
                })
                .collect();
            out.push_str(&factors.join(" "));
        }
        out
    }

    /// JSON term list in canonical order.
    pub fn to_json_terms(&self) -> Vec<PolyJsonTerm> {
        self.sorted_terms()
            .into_iter()
            .map(|(m, c)| PolyJsonTerm {
                coeff: c.to_string(),
                monomial: m.iter().map(|&(v, e)| VarJson::from_var(v, e)).collect(),
            })
            .collect()
    }

    /// Parses the text produced by [`Poly::canonical_string`] (and ordinary
    /// arithmetic expressions over the same variables).
    pub fn parse(text: &str) -> Result<Poly> {
        parse::parse_poly(text)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

/// One term of the JSON polynomial form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJsonTerm {
    pub coeff: String,
    pub monomial: Vec<VarJson>,
}

/// `[family, index, exponent]`; the scalar `u` has a `null` index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarJson(pub String, pub Option<i64>, pub u32);

impl VarJson {
    fn from_var(v: Var, e: u32) -> Self {
        match v {
            Var::U => VarJson("u".into(), None, e),
            Var::USeq(j) => VarJson("u".into(), Some(j), e),
            Var::Y(j) => VarJson("y".into(), Some(j), e),
            Var::X(i) => VarJson("x".into(), Some(i as i64), e),
        }
    }
}
