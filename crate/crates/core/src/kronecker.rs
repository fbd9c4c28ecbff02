//! `s_{(n-p,p)} ∗ s_λ` by counting Kronecker tableaux.
//!
//! A Kronecker tableau of shape `λ/α` and type `ν/α` is an α-lattice SSYT
//! that satisfies either `α_1 = α_2`, or `α_1 > α_2` together with one of:
//! the box in row 2, column `α_1` holds a 1; or row 1 of `λ/α` holds exactly
//! `α_1 - α_2` twos. When `λ_1 >= 2p - 1`,
//! `g_{(n-p,p),λ,ν} = Σ_{α⊢p, α⊆λ∩ν} k^λ_{αν}`; when instead
//! `ℓ(λ) >= 2p - 1` the same sum is taken over the conjugates.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{KronError, Result};
use crate::expansion::SchurExpansion;
use crate::oracle::{
    check_size, check_two_row, oracle_character_coeff, oracle_character_kron, oracle_tworow_signed_sum,
    oracle_tworow_signed_sum_coeff,
};
use crate::partitions::{enumerate_partitions, Partition, PartitionConstraints, SkewShape};
use crate::skew_expand::product_from_bins;
use crate::tableaux::{alpha_lattice_counts_by_type, CompositionType, Filling, LatticeSearch};

/// How a coefficient was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KronMethod {
    /// Kronecker tableaux on `λ` itself (`λ_1 >= 2p-1`).
    TableauRule,
    /// Kronecker tableaux on `λ'`, conjugated back (`ℓ(λ) >= 2p-1`).
    TableauRuleConjugate,
    /// Neither tableau route applies; signed-sum oracle.
    OracleFallback,
    /// Signed-sum oracle by request.
    OracleSignedSum,
    /// Character oracle by request.
    OracleCharacter,
}

impl KronMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            KronMethod::TableauRule => "tableau_rule",
            KronMethod::TableauRuleConjugate => "tableau_rule_conjugate",
            KronMethod::OracleFallback => "oracle_fallback",
            KronMethod::OracleSignedSum => "oracle_signed_sum",
            KronMethod::OracleCharacter => "oracle_character",
        }
    }

    pub fn is_tableau_route(self) -> bool {
        matches!(self, KronMethod::TableauRule | KronMethod::TableauRuleConjugate)
    }
}

impl fmt::Display for KronMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Method selection for [`kron_coeff_with`] and [`kron_expand_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    /// Tableau routes when available, otherwise the signed-sum oracle.
    #[default]
    Auto,
    /// Tableau routes only; an error outside their domain.
    Theorem,
    OracleSigned,
    OracleCharacter,
}

impl FromStr for MethodChoice {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "theorem" => Ok(MethodChoice::Theorem),
            "oracle-signed" => Ok(MethodChoice::OracleSigned),
            "oracle-char" => Ok(MethodChoice::OracleCharacter),
            other => Err(KronError::Parse {
                input: other.to_string(),
                reason: "expected auto, theorem, oracle-signed or oracle-char".into(),
            }),
        }
    }
}

/// A single Kronecker coefficient with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KronResult {
    pub value: u64,
    pub method: KronMethod,
    pub upper_bound: Option<u64>,
}

/// A full expansion with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KronExpansion {
    pub expansion: SchurExpansion,
    pub method: KronMethod,
}

pub(crate) fn kronecker_condition(f: &Filling<'_>, alpha: &Partition) -> bool {
    let (a1, a2) = (alpha.part(0), alpha.part(1));
    a1 == a2 || f.entry(1, a1 - 1) == Some(1) || f.row_count(0, 2) == a1 - a2
}

/// `k^λ_{αν}`: Kronecker tableaux of shape `λ/α` and type `ν/α`.
pub fn kronecker_tableau_count(lambda: &Partition, alpha: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != nu.size() || !lambda.contains(alpha) {
        return 0;
    }
    let Some(ty) = CompositionType::skew(nu, alpha) else {
        return 0;
    };
    let shape = SkewShape::new(lambda.clone(), alpha.clone()).expect("α ⊆ λ");
    let mut count = 0;
    LatticeSearch::new(&shape, alpha, Some(&ty)).run(|f| {
        if kronecker_condition(f, alpha) {
            count += 1;
        }
    });
    count
}

/// All Kronecker tableaux of shape `λ/α` and type `ν/α`.
pub fn kronecker_tableaux(lambda: &Partition, alpha: &Partition, nu: &Partition) -> Vec<crate::Tableau> {
    let mut out = Vec::new();
    if lambda.size() != nu.size() || !lambda.contains(alpha) {
        return out;
    }
    let Some(ty) = CompositionType::skew(nu, alpha) else {
        return out;
    };
    let shape = SkewShape::new(lambda.clone(), alpha.clone()).expect("α ⊆ λ");
    LatticeSearch::new(&shape, alpha, Some(&ty)).run(|f| {
        if kronecker_condition(f, alpha) {
            out.push(f.to_tableau());
        }
    });
    out
}

/// `Σ_{α⊢p, α⊆λ∩ν} k^λ_{αν}`, an upper bound for `g_{(n-p,p),λ,ν}`.
pub fn kron_upper_bound(p: usize, lambda: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != nu.size() {
        return 0;
    }
    let common = lambda.intersect(nu);
    enumerate_partitions(p, PartitionConstraints::inside(common))
        .map(|a| kronecker_tableau_count(lambda, &a, nu))
        .sum()
}

/// Which tableau route applies to `λ`, if any (the first row is preferred).
pub fn tableau_route(p: usize, lambda: &Partition) -> Option<KronMethod> {
    let need = (2 * p).saturating_sub(1);
    if lambda.first() >= need {
        Some(KronMethod::TableauRule)
    } else if lambda.len() >= need {
        Some(KronMethod::TableauRuleConjugate)
    } else {
        None
    }
}

/// `Σ_α Σ_ν k^λ_{αν} s_ν`, with no check that the rule applies.
pub fn tableau_sum_expand(p: usize, lambda: &Partition) -> SchurExpansion {
    let alphas: Vec<Partition> = enumerate_partitions(p, PartitionConstraints::inside(lambda.clone())).collect();
    let parts: Vec<SchurExpansion> = alphas
        .par_iter()
        .map(|a| {
            let shape = SkewShape::new(lambda.clone(), a.clone()).expect("α ⊆ λ");
            product_from_bins(
                alpha_lattice_counts_by_type(&shape, a, |f| kronecker_condition(f, a)),
                a,
            )
        })
        .collect();
    let mut out = SchurExpansion::new();
    for e in &parts {
        out += e;
    }
    out
}

fn validate(n: usize, p: usize, lambda: &Partition) -> Result<()> {
    check_size(lambda, n)?;
    check_two_row(n, p)
}

/// `s_{(n-p,p)} ∗ s_λ` by the tableau rule where it applies, otherwise the
/// signed-sum oracle.
pub fn kron_expand_tworow(n: usize, p: usize, lambda: &Partition) -> Result<KronExpansion> {
    kron_expand_with(n, p, lambda, MethodChoice::Auto)
}

pub fn kron_expand_with(n: usize, p: usize, lambda: &Partition, choice: MethodChoice) -> Result<KronExpansion> {
    validate(n, p, lambda)?;
    let route = tableau_route(p, lambda);
    let (expansion, method) = match (choice, route) {
        (MethodChoice::Auto | MethodChoice::Theorem, Some(KronMethod::TableauRule)) => {
            (tableau_sum_expand(p, lambda), KronMethod::TableauRule)
        }
        (MethodChoice::Auto | MethodChoice::Theorem, Some(_)) => (
            tableau_sum_expand(p, &lambda.conjugate()).conjugate(),
            KronMethod::TableauRuleConjugate,
        ),
        (MethodChoice::Theorem, None) => return Err(outside_rule(p, lambda)),
        (MethodChoice::Auto, None) => (oracle_tworow_signed_sum(n, p, lambda)?, KronMethod::OracleFallback),
        (MethodChoice::OracleSigned, _) => (oracle_tworow_signed_sum(n, p, lambda)?, KronMethod::OracleSignedSum),
        (MethodChoice::OracleCharacter, _) => (
            oracle_character_kron(&Partition::two_row(n, p)?, lambda)?,
            KronMethod::OracleCharacter,
        ),
    };
    Ok(KronExpansion { expansion, method })
}

fn outside_rule(p: usize, lambda: &Partition) -> KronError {
    KronError::domain(format!(
        "tableau rule needs λ_1 >= {0} or ℓ(λ) >= {0}, got {lambda:?}",
        (2 * p).saturating_sub(1)
    ))
}

/// `g_{(n-p,p),λ,ν}` with the tableau upper bound attached.
pub fn kron_coeff(n: usize, p: usize, lambda: &Partition, nu: &Partition) -> Result<KronResult> {
    kron_coeff_with(n, p, lambda, nu, MethodChoice::Auto)
}

/// Sum of tableau counts on the chosen route, with the vanishing shortcuts.
fn tableau_value(p: usize, lambda: &Partition, nu: &Partition, route: KronMethod) -> u64 {
    let common = lambda.intersect(nu);
    if common.size() < p || nu.len() > lambda.len() + p.min(lambda.len()) {
        return 0;
    }
    match route {
        KronMethod::TableauRule => kron_upper_bound(p, lambda, nu),
        _ => kron_upper_bound(p, &lambda.conjugate(), &nu.conjugate()),
    }
}

pub fn kron_coeff_with(
    n: usize,
    p: usize,
    lambda: &Partition,
    nu: &Partition,
    choice: MethodChoice,
) -> Result<KronResult> {
    validate(n, p, lambda)?;
    check_size(nu, n)?;
    let route = tableau_route(p, lambda);
    let (value, method) = match (choice, route) {
        (MethodChoice::Auto | MethodChoice::Theorem, Some(r)) => (tableau_value(p, lambda, nu, r), r),
        (MethodChoice::Theorem, None) => return Err(outside_rule(p, lambda)),
        (MethodChoice::Auto, None) => (
            oracle_tworow_signed_sum_coeff(n, p, lambda, nu)?,
            KronMethod::OracleFallback,
        ),
        (MethodChoice::OracleSigned, _) => (
            oracle_tworow_signed_sum_coeff(n, p, lambda, nu)?,
            KronMethod::OracleSignedSum,
        ),
        (MethodChoice::OracleCharacter, _) => (
            oracle_character_coeff(&Partition::two_row(n, p)?, lambda, nu)?,
            KronMethod::OracleCharacter,
        ),
    };
    Ok(KronResult {
        value,
        method,
        upper_bound: Some(kron_upper_bound(p, lambda, nu)),
    })
}

/// Coefficient lookup on an expansion, as `u64`.
pub fn coeff_u64(e: &SchurExpansion, nu: &Partition) -> u64 {
    e.coeff(nu)
        .to_u64()
        .expect("Kronecker coefficients are nonnegative and small")
}
