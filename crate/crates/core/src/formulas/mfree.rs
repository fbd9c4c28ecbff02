//! When is `s_{(n-p,p)} ∗ s_λ` multiplicity free?

use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{KronError, Result};
use crate::expansion::SchurExpansion;
use crate::kronecker::kron_expand_tworow;
use crate::oracle::check_size;
use crate::partitions::Partition;

/// Where a verdict came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MfreeSource {
    /// `p = 1`: λ has at most two distinct part sizes.
    P1Classification,
    /// `p = 2`, `n >= 6`.
    P2Classification,
    /// `p = 3`, `n > 16`.
    P3Classification,
    /// `p >= 4`, `n > (2p-2)^2`.
    P4PlusClassification,
    DirectComputation,
}

impl MfreeSource {
    pub fn as_str(self) -> &'static str {
        match self {
            MfreeSource::P1Classification => "p1_classification",
            MfreeSource::P2Classification => "p2_classification",
            MfreeSource::P3Classification => "p3_classification",
            MfreeSource::P4PlusClassification => "p4plus_classification",
            MfreeSource::DirectComputation => "direct_computation",
        }
    }
}

impl fmt::Display for MfreeSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MfreeVerdict {
    pub multiplicity_free: bool,
    pub source: MfreeSource,
    /// A term with coefficient at least 2, when one was computed.
    pub witness: Option<(Partition, u64)>,
}

/// `(n)`, `(1^n)`, `(n-1,1)` or `(2,1^{n-2})`.
fn is_trivial_family(lambda: &Partition) -> bool {
    lambda.len() == 1
        || lambda.first() == 1
        || (lambda.len() == 2 && lambda.part(1) == 1)
        || (lambda.first() == 2 && lambda.part(1) <= 1)
}

/// Decides whether `s_{(n-p,p)} ∗ s_λ` is multiplicity free.
pub fn is_multiplicity_free(n: usize, p: usize, lambda: &Partition) -> Result<MfreeVerdict> {
    check_size(lambda, n)?;
    if p == 0 || 2 * p > n {
        return Err(KronError::domain(format!("need n >= 2p >= 2, got n={n}, p={p}")));
    }
    let listed = |source, free| {
        Ok(MfreeVerdict {
            multiplicity_free: free,
            source,
            witness: None,
        })
    };
    match p {
        1 => listed(MfreeSource::P1Classification, lambda.distinct_parts() <= 2),
        2 if n >= 6 => listed(
            MfreeSource::P2Classification,
            is_trivial_family(lambda) || lambda.is_rectangle(),
        ),
        3 if n > 16 => listed(
            MfreeSource::P3Classification,
            is_trivial_family(lambda)
                || (n.is_multiple_of(2)
                    && (*lambda == Partition::rectangle(n / 2, 2) || *lambda == Partition::rectangle(2, n / 2))),
        ),
        p if p >= 4 && n > (2 * p - 2) * (2 * p - 2) => {
            listed(MfreeSource::P4PlusClassification, is_trivial_family(lambda))
        }
        _ => {
            let e = kron_expand_tworow(n, p, lambda)?.expansion;
            Ok(verdict_from_expansion(&e))
        }
    }
}

pub(crate) fn verdict_from_expansion(e: &SchurExpansion) -> MfreeVerdict {
    let witness = e
        .multiplicity_witness()
        .map(|(nu, c)| (nu.clone(), c.to_u64().expect("small coefficient")));
    MfreeVerdict {
        multiplicity_free: witness.is_none(),
        source: MfreeSource::DirectComputation,
        witness,
    }
}

fn block(parts: &mut Vec<usize>, value: i64, count: i64) -> bool {
    if count < 0 || (count > 0 && value < 0) {
        return false;
    }
    parts.extend(std::iter::repeat_n(value.max(0) as usize, count as usize));
    true
}

/// `ν` built from `(value, count)` blocks, or `None` if a count is negative
/// or the parts are not weakly decreasing.
fn blocks(layout: &[(i64, i64)]) -> Option<Partition> {
    let mut parts = Vec::new();
    for &(v, c) in layout {
        if !block(&mut parts, v, c) {
            return None;
        }
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    if parts.contains(&0) {
        return None;
    }
    Partition::new(parts).ok()
}

/// The nine guarded terms for `(m^k)`, taken literally.
fn nine_terms(m: i64, k: i64) -> SchurExpansion {
    let guarded: [(bool, Vec<(i64, i64)>); 9] = [
        (true, vec![(m, k)]),
        (true, vec![(m, k - 1), (m - 1, 1), (1, 1)]),
        (true, vec![(m, k - 2), (m - 1, 2), (1, 2)]),
        (k >= 4, vec![(m + 1, 2), (m, k - 4), (m - 1, 2)]),
        (k >= 3, vec![(m + 1, 1), (m, k - 2), (m - 1, 1)]),
        (k >= 3, vec![(m + 1, 1), (m, k - 3), (m - 1, 2), (1, 1)]),
        (true, vec![(m + 2, 1), (m, k - 2), (m - 2, 1)]),
        (true, vec![(m + 1, 1), (m, k - 2), (m - 2, 1), (1, 1)]),
        (m >= 4, vec![(m, k - 1), (m - 2, 1), (2, 1)]),
    ];
    let mut out = SchurExpansion::new();
    for (keep, layout) in guarded {
        if let (true, Some(nu)) = (keep, blocks(&layout)) {
            out.add_term(nu, 1);
        }
    }
    out
}

/// `s_{(n-2,2)} ∗ s_{(m^k)}` for `n = mk >= 6`.
///
/// The nine-term sum is used directly when `m >= 3` and `k >= 2`. A single
/// row is the identity, a single column conjugates `(n-2,2)`, and `m = 2`
/// is computed from `(k^2)` by conjugation.
pub fn rect_p2_expand(m: usize, k: usize) -> Result<SchurExpansion> {
    if m == 0 || k == 0 || m * k < 6 {
        return Err(KronError::domain(format!(
            "need m, k >= 1 and mk >= 6, got m={m}, k={k}"
        )));
    }
    let n = m * k;
    Ok(if k == 1 {
        SchurExpansion::single(Partition::two_row(n, 2)?)
    } else if m == 1 {
        SchurExpansion::single(Partition::two_row(n, 2)?.conjugate())
    } else if m == 2 {
        nine_terms(k as i64, 2).conjugate()
    } else {
        nine_terms(m as i64, k as i64)
    })
}

#[cfg(test)]
pub(crate) fn literal_nine_terms(m: usize, k: usize) -> SchurExpansion {
    nine_terms(m as i64, k as i64)
}
