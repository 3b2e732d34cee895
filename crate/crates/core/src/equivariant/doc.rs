use serde::{Deserialize, Serialize};

use crate::equivariant::{EquivPoly, Which};
use crate::groups::{QuadraticEntry, QuadraticValue};

/// JSON result document for one computed polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub polynomial: String,
    pub dimensions: Vec<i64>,
    pub classes: Vec<String>,
    pub coefficients: Vec<CoefficientDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Vec<TermDoc>>>,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientDoc {
    pub class_values: Vec<ValueDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueDoc {
    Integer(i64),
    Exact(QuadraticEntry),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub irreducible: String,
    pub multiplicity: i64,
}

fn value_doc(v: &QuadraticValue) -> ValueDoc {
    match v.as_integer().and_then(|i| i64::try_from(i).ok()) {
        Some(i) => ValueDoc::Integer(i),
        None => ValueDoc::Exact(QuadraticEntry::from(v)),
    }
}

impl ResultDoc {
    pub fn new(which: Which, poly: &EquivPoly, decomposition: Option<&[Vec<(String, i64)>]>, method: &str) -> Self {
        ResultDoc {
            polynomial: which.to_string(),
            dimensions: poly.dims(),
            classes: poly.classes().names().to_vec(),
            coefficients: poly
                .coeffs()
                .iter()
                .map(|c| CoefficientDoc { class_values: c.values().iter().map(value_doc).collect() })
                .collect(),
            decomposition: decomposition.map(|d| {
                d.iter()
                    .map(|terms| {
                        terms.iter().map(|(name, m)| TermDoc { irreducible: name.clone(), multiplicity: *m }).collect()
                    })
                    .collect()
            }),
            method: method.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

/// Renders per-degree multiplicities as `chi1 + (chi5 + chi8)*t + ...`.
pub fn format_decomposition(decomposition: &[Vec<(String, i64)>]) -> String {
    let mut parts = Vec::new();
    for (power, terms) in decomposition.iter().enumerate() {
        if terms.is_empty() {
            continue;
        }
        let body: Vec<String> =
            terms.iter().map(|(name, m)| if *m == 1 { name.clone() } else { format!("{m}*{name}") }).collect();
        let body = body.join(" + ").replace("+ -", "- ");
        let needs_parens = power > 0 && (terms.len() > 1 || terms[0].1 != 1);
        let body = if needs_parens { format!("({body})") } else { body };
        parts.push(match power {
            0 => body,
            1 => format!("{body}*t"),
            _ => format!("{body}*t^{power}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
