use clap::ValueEnum;
use serde_json::json;

use eqschur::comult::{MonoKey, TensorElement};
use eqschur::structconst::SchurExpansion;
use eqschur::{Partition, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn pretty(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json value serializes");
    s.push('\n');
    s
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        "\\varnothing".into()
    } else {
        p.to_text()
    }
}

pub fn poly(p: &Poly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => pretty(json!({
            "poly": p.canonical_string(),
            "terms": p.to_json_terms(),
        })),
        Format::Latex => format!("${}$\n", p.latex_string()),
    }
}

pub fn expansion(lambda: &Partition, mu: &Partition, e: &SchurExpansion, format: Format) -> String {
    match format {
        Format::Text => format!("{e}\n"),
        Format::Json => pretty(json!({
            "yspec": e.yspec,
            "n": e.n,
            "lambda": lambda,
            "mu": mu,
            "terms": e.iter().map(|(nu, c)| json!({"nu": nu, "coeff": c.canonical_string()})).collect::<Vec<_>>(),
        })),
        Format::Latex => {
            let mut out = String::new();
            for (nu, c) in e.iter() {
                out.push_str(&format!(
                    "$C^{{{}}}_{{{},{}}} = {}$\n",
                    latex_partition(nu),
                    latex_partition(lambda),
                    latex_partition(mu),
                    c.latex_string()
                ));
            }
            if out.is_empty() {
                out.push_str("$0$\n");
            }
            out
        }
    }
}

pub fn rational(c: &num_rational::BigRational, format: Format) -> String {
    match format {
        Format::Text => format!("{c}\n"),
        Format::Json => pretty(json!({ "value": c.to_string() })),
        Format::Latex => format!("${}$\n", Poly::constant(c.clone()).latex_string()),
    }
}

pub fn tensor<K: MonoKey>(t: &TensorElement<K>, format: Format) -> String {
    match format {
        Format::Text => format!("{t}\n"),
        Format::Json => {
            let terms: Vec<_> = t
                .terms()
                .map(|(l, r, c)| json!({"left": l.to_string(), "right": r.to_string(), "coeff": c.to_string()}))
                .collect();
            pretty(json!({ "terms": terms }))
        }
        Format::Latex => format!("${}$\n", latex_tensor(t)),
    }
}

fn latex_tensor<K: MonoKey>(t: &TensorElement<K>) -> String {
    let text = t.to_string();
    text.replace('⊗', "\\otimes").replace('*', " ")
}
