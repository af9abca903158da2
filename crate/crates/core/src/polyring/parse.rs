//! Arithmetic expression parser shared by polynomial and generator inputs.

use num_rational::BigRational;
use num_traits::Zero;

use super::{Poly, Var};
use crate::error::{Error, Result};

/// Parsed arithmetic expression; variables are kept as their spelling.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division by a nonzero constant only.
    Div(Box<Expr>, BigRational),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Evaluates into any ring given constants and variable images.
    pub fn eval<T, C, V>(&self, konst: &C, var: &V) -> Result<T>
    where
        T: Clone,
        C: Fn(BigRational) -> T,
        V: Fn(&str) -> Result<T>,
        for<'a> &'a T: std::ops::Add<&'a T, Output = T>
            + std::ops::Sub<&'a T, Output = T>
            + std::ops::Mul<&'a T, Output = T>,
    {
        Ok(match self {
            Expr::Num(c) => konst(c.clone()),
            Expr::Var(s) => var(s)?,
            Expr::Add(a, b) => &a.eval(konst, var)? + &b.eval(konst, var)?,
            Expr::Sub(a, b) => &a.eval(konst, var)? - &b.eval(konst, var)?,
            Expr::Mul(a, b) => &a.eval(konst, var)? * &b.eval(konst, var)?,
            Expr::Div(a, c) => &a.eval(konst, var)? * &konst(c.recip()),
            Expr::Neg(a) => &konst(BigRational::zero()) - &a.eval(konst, var)?,
            Expr::Pow(a, e) => {
                let base = a.eval(konst, var)?;
                let mut acc = konst(BigRational::from_integer(1.into()));
                for _ in 0..*e {
                    acc = &acc * &base;
                }
                acc
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let err = |r: String| Error::ParseExpr {
        text: text.to_string(),
        reason: r,
    };
    let cs: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = cs[st..i].iter().collect();
            out.push(Tok::Num(s.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_alphanumeric() {
                i += 1;
            }
            // bracketed index, e.g. y[-3]
            if i < cs.len() && cs[i] == '[' {
                while i < cs.len() && cs[i] != ']' {
                    i += 1;
                }
                if i == cs.len() {
                    return Err(err("unclosed `[`".into()));
                }
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().filter(|c| !c.is_whitespace()).collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::ParseExpr {
            text: self.text.to_string(),
            reason: reason.to_string(),
        }
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            if op == '*' {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                let d = match self.toks.get(self.pos) {
                    Some(Tok::Num(n)) if !n.is_zero() => n.clone(),
                    _ => return Err(self.err("division only by a nonzero integer literal")),
                };
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), BigRational::from_integer(d));
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let e = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => u32::try_from(n.clone()).map_err(|_| self.err("exponent too large"))?,
                _ => return Err(self.err("exponent must be a nonnegative integer literal")),
            };
            self.pos += 1;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.toks.get(self.pos).cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Expr::Num(BigRational::from_integer(n))),
            Tok::Ident(s) => Ok(Expr::Var(s)),
            Tok::Op('(') => {
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::Op(c) => Err(self.err(&format!("unexpected `{c}`"))),
        }
    }
}

/// Parses an arithmetic expression over `+ - * / ^` and parentheses.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        text,
    };
    if p.toks.is_empty() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Spelling of a polynomial variable: `x<i>`, `y[<j>]`, `u`, `u[<j>]`.
pub(crate) fn parse_var(s: &str) -> Option<Var> {
    let bracket = |rest: &str| -> Option<i64> { rest.strip_prefix('[')?.strip_suffix(']')?.parse().ok() };
    if s == "u" {
        return Some(Var::U);
    }
    if let Some(rest) = s.strip_prefix('x') {
        let i: u32 = rest.parse().ok()?;
        return (i >= 1 && !rest.starts_with('+')).then_some(Var::X(i));
    }
    if let Some(rest) = s.strip_prefix('y') {
        return bracket(rest).map(Var::Y);
    }
    if let Some(rest) = s.strip_prefix('u') {
        return bracket(rest).map(Var::USeq);
    }
    None
}

pub(crate) fn parse_poly(text: &str) -> Result<Poly> {
    let e = parse_expr(text)?;
    e.eval(&Poly::constant, &|s: &str| {
        parse_var(s).map(Poly::var).ok_or_else(|| Error::ParseExpr {
            text: text.to_string(),
            reason: format!("unknown variable {s:?}"),
        })
    })
}
