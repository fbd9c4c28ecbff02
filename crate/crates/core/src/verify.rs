//! Grid checks of the tableau rule and the closed forms against the oracles.
//!
//! Each suite walks every parameter tuple up to `(nmax, pmax)` in a fixed
//! order, so reports are identical from run to run however many threads
//! rayon uses.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{KronError, Result};
use crate::expansion::SchurExpansion;
use crate::formulas::{
    hook_coeff, nu_double_pair_coeff, p1_expand, rect_p2_expand, tworow_target_coeff, tworow_tworow_coeff,
};
use crate::kronecker::{coeff_u64, kron_expand_tworow, kron_expand_with, tableau_route, MethodChoice};
use crate::oracle::{oracle_tworow_signed_sum, CharacterTable};
use crate::partitions::{partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Tableau rule against the signed-sum oracle, wherever the rule applies.
    Theorem,
    /// Signed-sum oracle against the character oracle, for every `λ`.
    Oracles,
    /// Closed forms against [`kron_expand_tworow`].
    Formulas,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Oracles => "oracles",
            Suite::Formulas => "formulas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem" => Ok(Suite::Theorem),
            "oracles" => Ok(Suite::Oracles),
            "formulas" => Ok(Suite::Formulas),
            other => Err(KronError::Parse {
                input: other.to_string(),
                reason: "expected theorem, oracles or formulas".into(),
            }),
        }
    }
}

/// One disagreement: what was compared, and the two values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub case: String,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.case, self.expected, self.found)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub nmax: usize,
    pub pmax: usize,
    /// Number of individual coefficients compared.
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn all_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Per-case outcome: coefficients compared and any disagreements.
type Outcome = (u64, Vec<Mismatch>);

fn compare_expansions(case: String, expected: &SchurExpansion, found: &SchurExpansion) -> Outcome {
    let n = expected.degree().or(found.degree()).unwrap_or(0);
    let mut bad = Vec::new();
    let mut checked = 0;
    for nu in partitions_of(n) {
        checked += 1;
        let (e, f) = (expected.coeff(&nu), found.coeff(&nu));
        if e != f {
            bad.push(Mismatch {
                case: format!("{case} ν={nu:?}"),
                expected: e.to_string(),
                found: f.to_string(),
            });
        }
    }
    (checked, bad)
}

fn compare_value(case: impl FnOnce() -> String, expected: u64, found: u64, out: &mut Outcome) {
    out.0 += 1;
    if expected != found {
        out.1.push(Mismatch {
            case: case(),
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
}

fn error_outcome(case: String, err: KronError) -> Outcome {
    (
        1,
        vec![Mismatch {
            case,
            expected: "a value".into(),
            found: err.to_string(),
        }],
    )
}

/// Every `(n, p, λ)` with `2 <= n <= nmax`, `p <= min(pmax, n/2)`.
fn grid(nmax: usize, pmax: usize) -> Vec<(usize, usize, Partition)> {
    let mut out = Vec::new();
    for n in 2..=nmax {
        for p in 0..=pmax.min(n / 2) {
            out.extend(partitions_of(n).map(|l| (n, p, l)));
        }
    }
    out
}

fn finish(suite: Suite, nmax: usize, pmax: usize, parts: Vec<Outcome>) -> VerifyReport {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for (c, m) in parts {
        checked += c;
        mismatches.extend(m);
    }
    VerifyReport {
        suite,
        nmax,
        pmax,
        checked,
        mismatches,
    }
}

pub fn verify(suite: Suite, nmax: usize, pmax: usize) -> VerifyReport {
    let parts = match suite {
        Suite::Theorem => theorem_suite(nmax, pmax),
        Suite::Oracles => oracle_suite(nmax, pmax),
        Suite::Formulas => formula_suite(nmax, pmax),
    };
    finish(suite, nmax, pmax, parts)
}

fn theorem_suite(nmax: usize, pmax: usize) -> Vec<Outcome> {
    grid(nmax, pmax)
        .into_par_iter()
        .filter(|(_, p, l)| tableau_route(*p, l).is_some())
        .map(|(n, p, l)| {
            let case = format!("n={n} p={p} λ={l:?}");
            let tab = kron_expand_with(n, p, &l, MethodChoice::Theorem);
            match (tab, oracle_tworow_signed_sum(n, p, &l)) {
                (Ok(t), Ok(o)) => compare_expansions(case, &o, &t.expansion),
                (Err(e), _) | (_, Err(e)) => error_outcome(case, e),
            }
        })
        .collect()
}

fn oracle_suite(nmax: usize, pmax: usize) -> Vec<Outcome> {
    grid(nmax, pmax)
        .into_par_iter()
        .map(|(n, p, l)| {
            let case = format!("n={n} p={p} λ={l:?}");
            let table = CharacterTable::cached(n);
            let mu = Partition::two_row(n, p).expect("2p <= n");
            match (table.kronecker(&mu, &l), oracle_tworow_signed_sum(n, p, &l)) {
                (Ok(c), Ok(s)) => compare_expansions(case, &c, &s),
                (Err(e), _) | (_, Err(e)) => error_outcome(case, e),
            }
        })
        .collect()
}

fn formula_suite(nmax: usize, pmax: usize) -> Vec<Outcome> {
    grid(nmax, pmax)
        .into_par_iter()
        .map(|(n, p, l)| {
            let truth = match kron_expand_tworow(n, p, &l) {
                Ok(k) => k.expansion,
                Err(e) => return error_outcome(format!("n={n} p={p} λ={l:?}"), e),
            };
            formula_checks(n, p, &l, &truth)
        })
        .collect()
}

/// Which closed forms apply to `(n, p, λ)`, each compared with `truth`.
fn formula_checks(n: usize, p: usize, lambda: &Partition, truth: &SchurExpansion) -> Outcome {
    let mut out: Outcome = (0, Vec::new());
    let mut check = |name: &str, nu: &Partition, got: Result<u64>| match got {
        Ok(v) => compare_value(
            || format!("{name} n={n} p={p} λ={lambda:?} ν={nu:?}"),
            coeff_u64(truth, nu),
            v,
            &mut out,
        ),
        Err(e) => out.1.push(Mismatch {
            case: format!("{name} n={n} p={p} λ={lambda:?} ν={nu:?}"),
            expected: coeff_u64(truth, nu).to_string(),
            found: e.to_string(),
        }),
    };
    let two_rows: Vec<Partition> = (0..=n / 2)
        .map(|t| Partition::two_row(n, t).expect("2t <= n"))
        .collect();

    if p == 1 {
        let e = p1_expand(lambda);
        for nu in partitions_of(n) {
            let got = e.coeff(&nu);
            check("p1", &nu, Ok(got.to_u64().unwrap_or(u64::MAX)));
        }
    }
    if p >= 1 && lambda.is_hook() && lambda.len() >= 2 {
        let s = lambda.len() - 1;
        if n - s + 1 >= 2 * p {
            for nu in partitions_of(n) {
                check("hook", &nu, hook_coeff(n, p, s, &nu));
            }
        }
    }
    if p >= 1 && lambda.len() <= 4 && lambda.first() + 1 >= 2 * p {
        for (t, nu) in two_rows.iter().enumerate() {
            check("tworow_target", nu, tworow_target_coeff(n, p, lambda, t));
        }
    }
    if lambda.len() <= 2 {
        let s = lambda.part(1);
        if n - s + 1 >= 2 * p {
            if p >= 1 {
                for (t, nu) in two_rows.iter().enumerate() {
                    check("tworow_tworow", nu, tworow_tworow_coeff(n, p, s, t));
                }
            }
            if s >= 1 {
                for nu in partitions_of(n).filter(|nu| nu.len() == 4 && nu.part(2) == nu.part(3)) {
                    check("double_pair", &nu, nu_double_pair_coeff(n, p, s, &nu));
                }
            }
        }
    }
    if p == 2 && n >= 6 && lambda.is_rectangle() {
        let expected = rect_p2_expand(lambda.first(), lambda.len()).expect("mk >= 6");
        let (c, m) = compare_expansions(format!("rect_p2 λ={lambda:?}"), truth, &expected);
        out.0 += c;
        out.1.extend(m);
    }
    out
}
