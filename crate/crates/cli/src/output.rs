//! Output records, shared by the JSON and plain-text renderers.

use kron_core::{Partition, SchurExpansion};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub nu: Vec<usize>,
    /// Decimal string, so arbitrary precision survives JSON.
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub lambda: Vec<usize>,
    pub multiplicity_free: bool,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqEntry {
    pub t: usize,
    pub value: String,
    pub source: String,
}

/// One command's result. Inputs are echoed; absent fields are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Record {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur_positive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Term>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<Verdict>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<SeqEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unimodal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nmax: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pmax: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatches: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    pub fn new(command: &str) -> Self {
        Record {
            command: command.to_string(),
            ..Record::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    /// `ν : c` lines for terms, then `key: value` lines for results.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        if let Some(verdicts) = &self.verdicts {
            for v in verdicts {
                let w = v
                    .witness
                    .as_ref()
                    .map(|w| format!(" witness {} : {}", show(&w.nu), w.coeff));
                line(format!(
                    "{} : {} ({}){}",
                    show(&v.lambda),
                    v.multiplicity_free,
                    v.source,
                    w.unwrap_or_default()
                ));
            }
        }
        if let Some(seq) = &self.sequence {
            for e in seq {
                line(format!("t={} : {} ({})", e.t, e.value, e.source));
            }
        }
        if let Some(terms) = &self.terms {
            for term in terms {
                line(format!("{} : {}", show(&term.nu), term.coeff));
            }
        }
        if let Some(v) = &self.value {
            line(format!("value: {v}"));
        }
        if let Some(b) = &self.upper_bound {
            line(format!("upper_bound: {b}"));
        }
        if let Some(b) = self.schur_positive {
            line(format!("schur_positive: {b}"));
        }
        if let Some(w) = &self.witness {
            line(format!("witness: {} : {}", show(&w.nu), w.coeff));
        }
        if let Some(u) = self.unimodal {
            line(format!("unimodal: {u}"));
        }
        if let Some(c) = self.checked {
            let bad = self.mismatches.as_deref().unwrap_or_default();
            if bad.is_empty() {
                line(format!("all equal ({c} coefficients checked)"));
            } else {
                for m in bad {
                    line(format!("mismatch: {m}"));
                }
                line(format!("{} mismatches ({c} coefficients checked)", bad.len()));
            }
        }
        if let Some(m) = &self.method {
            line(format!("method: {m}"));
        }
        if let Some(n) = &self.note {
            line(format!("note: {n}"));
        }
        out
    }
}

pub fn parts(lambda: &Partition) -> Vec<usize> {
    lambda.parts().to_vec()
}

fn show(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// Terms in descending lex order.
pub fn terms(e: &SchurExpansion) -> Vec<Term> {
    e.iter()
        .map(|(nu, c)| Term {
            nu: parts(nu),
            coeff: c.to_string(),
        })
        .collect()
}

pub fn term(nu: &Partition, coeff: impl ToString) -> Term {
    Term {
        nu: parts(nu),
        coeff: coeff.to_string(),
    }
}
