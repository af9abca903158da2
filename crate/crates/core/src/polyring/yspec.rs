use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{rat, Monomial, Poly, Var};
use crate::error::{Error, Result};

/// A doubly infinite integer sequence given by a finite window and an
/// optional affine tail `k ↦ a·k + b` outside of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntSeqWindow {
    pub lo: i64,
    pub values: Vec<i64>,
    pub tail: Option<(i64, i64)>,
}

impl IntSeqWindow {
    /// The sequence `k ↦ a·k + b` with no window.
    pub fn affine(a: i64, b: i64) -> Self {
        IntSeqWindow {
            lo: 0,
            values: Vec::new(),
            tail: Some((a, b)),
        }
    }

    /// Last index of the window (`lo - 1` for an empty window).
    pub fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64 - 1
    }

    pub fn get(&self, k: i64) -> Option<i64> {
        if k >= self.lo && k <= self.hi() {
            return Some(self.values[(k - self.lo) as usize]);
        }
        self.tail.map(|(a, b)| a * k + b)
    }
}

/// A rule specializing the sequence `y = (y_j)_{j∈ℤ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum YSpec {
    /// `y_j` stays a variable.
    Symbolic,
    /// `y_j ↦ 0`.
    Zero,
    /// `y_j ↦ a·j + b`.
    Affine {
        #[serde(with = "rat_string")]
        a: BigRational,
        #[serde(with = "rat_string")]
        b: BigRational,
    },
    /// Standard S¹ action: `y_j ↦ (j + d)·u`.
    Standard { d: i64 },
    /// S¹ action with weights `n_k`: `y_j ↦ n_{j+d}·u`.
    Circle { seq: IntSeqWindow, d: i64 },
    /// Infinite torus: `y_j ↦ u_{j+shift}`.
    Torus { shift: i64 },
}

impl YSpec {
    /// `y = τ^{-d} u` for the torus action on the index-`d` component.
    pub fn infinite_torus(d: i64) -> YSpec {
        YSpec::Torus { shift: d }
    }

    /// `y = τ^{l+1} u` for the finite-rank piece.
    pub fn finite_rank_torus(l: i64) -> YSpec {
        YSpec::Torus { shift: -(l + 1) }
    }

    /// The image of `y_j`.
    pub fn value(&self, j: i64) -> Result<Poly> {
        Ok(match self.value_term(j)? {
            None => Poly::zero(),
            Some((c, m)) => Poly::term(c, m),
        })
    }

    /// The image of `y_j` as a single term, `None` when it is zero.
    pub fn value_term(&self, j: i64) -> Result<Option<(BigRational, Monomial)>> {
        let scaled_u = |k: i64| (k != 0).then(|| (rat(k), Monomial::var(Var::U)));
        Ok(match self {
            YSpec::Symbolic => Some((BigRational::one(), Monomial::var(Var::Y(j)))),
            YSpec::Zero => None,
            YSpec::Affine { a, b } => {
                let v = a * rat(j) + b;
                (!v.is_zero()).then(|| (v, Monomial::one()))
            }
            YSpec::Standard { d } => scaled_u(j + d),
            YSpec::Circle { seq, d } => {
                let k = j + d;
                scaled_u(seq.get(k).ok_or(Error::UnresolvedIndex(k))?)
            }
            YSpec::Torus { shift } => {
                Some((BigRational::one(), Monomial::var(Var::USeq(j + shift))))
            }
        })
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, YSpec::Symbolic)
    }

    pub fn parse(text: &str) -> Result<YSpec> {
        let err = |reason: &str| Error::ParseYSpec {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (kind, rest) = match t.split_once(':') {
            Some((k, r)) => (k.trim(), r.trim()),
            None => (t, ""),
        };
        let int = |s: &str| s.trim().parse::<i64>().map_err(|_| err(&format!("{s:?} is not an integer")));
        let keyed = |s: &str, key: &str| -> Result<String> {
            s.trim()
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(|| err(&format!("expected `{key}=`")))
        };
        match kind {
            "symbolic" | "zero" if !rest.is_empty() => Err(err("takes no parameters")),
            "symbolic" => Ok(YSpec::Symbolic),
            "zero" => Ok(YSpec::Zero),
            "affine" => {
                let (a, b) = rest.split_once(',').ok_or_else(|| err("expected a=<rat>,b=<rat>"))?;
                let a = parse_rat(&keyed(a, "a")?).ok_or_else(|| err("bad rational for a"))?;
                let b = parse_rat(&keyed(b, "b")?).ok_or_else(|| err("bad rational for b"))?;
                Ok(YSpec::Affine { a, b })
            }
            "standard" => Ok(YSpec::Standard { d: int(&keyed(rest, "d")?)? }),
            "torus" => Ok(YSpec::Torus { shift: int(&keyed(rest, "shift")?)? }),
            "circle" => {
                let mut d = None;
                let mut lo = 0;
                let mut values = Vec::new();
                let mut tail = None;
                for section in rest.split(';').map(str::trim) {
                    if let Some(t) = section.strip_prefix("tail=") {
                        let (a, b) = t.split_once(',').ok_or_else(|| err("tail expects a,b"))?;
                        tail = Some((int(a)?, int(b)?));
                        continue;
                    }
                    let (head, window) = match section.split_once(",window=") {
                        Some((h, w)) => (h, Some(w)),
                        None => (section, None),
                    };
                    d = Some(int(&keyed(head, "d")?)?);
                    if let Some(w) = window {
                        let (start, vals) = w.split_once(':').ok_or_else(|| err("window expects <j0>:<v0>,<v1>,..."))?;
                        lo = int(start)?;
                        values = vals.split(',').map(int).collect::<Result<_>>()?;
                    }
                }
                let d = d.ok_or_else(|| err("circle requires d=<int>"))?;
                if values.is_empty() && tail.is_none() {
                    return Err(err("circle needs a window or a tail"));
                }
                Ok(YSpec::Circle {
                    seq: IntSeqWindow { lo, values, tail },
                    d,
                })
            }
            _ => Err(err("unknown kind")),
        }
    }
}

pub(crate) fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// The command-line grammar; `parse(to_string())` is the identity.
impl fmt::Display for YSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YSpec::Symbolic => write!(f, "symbolic"),
            YSpec::Zero => write!(f, "zero"),
            YSpec::Affine { a, b } => write!(f, "affine:a={a},b={b}"),
            YSpec::Standard { d } => write!(f, "standard:d={d}"),
            YSpec::Torus { shift } => write!(f, "torus:shift={shift}"),
            YSpec::Circle { seq, d } => {
                write!(f, "circle:d={d}")?;
                if !seq.values.is_empty() {
                    let vals: Vec<String> = seq.values.iter().map(i64::to_string).collect();
                    write!(f, ",window={}:{}", seq.lo, vals.join(","))?;
                }
                if let Some((a, b)) = seq.tail {
                    write!(f, ";tail={a},{b}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for YSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        YSpec::parse(s)
    }
}

mod rat_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rat(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}
