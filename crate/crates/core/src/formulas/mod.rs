//! Closed forms for special families of two-row Kronecker products.
//!
//! Every function here checks the domain on which its formula is valid and
//! returns [`KronError::Domain`](crate::KronError::Domain) outside it; use
//! [`kron_coeff`](crate::kronecker::kron_coeff) there instead.

mod hook;
mod mfree;
mod tworow;

pub use hook::hook_coeff;
pub use mfree::{is_multiplicity_free, rect_p2_expand, MfreeSource, MfreeVerdict};
pub use tworow::{
    double_pair_terms, is_unimodal, nu_double_pair_coeff, target_terms, tworow_diagonal_coeff, tworow_target_coeff,
    tworow_terms, tworow_tworow_coeff, tworow_tworow_sequence, unimodal_pattern, DoublePairTerms, SequenceEntry,
    SequenceSource, TargetTerms, TwoRowSequence, TwoRowTerms,
};

use crate::expansion::SchurExpansion;
use crate::partitions::Partition;

/// `s_{(n-1,1)} ∗ s_λ = C(λ) s_λ + Σ s_μ`, the sum over the distinct
/// `μ ≠ λ` reached by removing one box and adding one box.
pub fn p1_expand(lambda: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    out.add_term(lambda.clone(), lambda.row_descents());
    let mut seen = std::collections::BTreeSet::new();
    for r in lambda.removable_rows() {
        let smaller = lambda.remove_box(r);
        for a in smaller.addable_rows() {
            let mu = smaller.add_box(a);
            if mu != *lambda && seen.insert(mu.clone()) {
                out.add_term(mu, 1);
            }
        }
    }
    out
}

pub(crate) fn chi(b: bool) -> i64 {
    i64::from(b)
}

pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_ceil(&a, &b)
}
