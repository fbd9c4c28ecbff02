//! Skew Schur expansions by label placement, and the products `s_α s_{λ/α}`.

use crate::error::{KronError, Result};
use crate::expansion::SchurExpansion;
use crate::partitions::{Partition, SkewShape};
use crate::tableaux::{alpha_lattice_counts_by_type, CompositionType};

/// `rl(μ)`: the cells of `μ` labelled `1..=|μ|` right to left, top row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverseLexFilling {
    shape: Partition,
    labels: Vec<Vec<usize>>,
    positions: Vec<(usize, usize)>,
}

impl ReverseLexFilling {
    pub fn new(mu: &Partition) -> Self {
        let mut labels = Vec::with_capacity(mu.len());
        let mut positions = vec![(0, 0); mu.size() + 1];
        let mut next = 1;
        for (i, &len) in mu.parts().iter().enumerate() {
            let mut row = vec![0; len];
            for j in (0..len).rev() {
                row[j] = next;
                positions[next] = (i, j);
                next += 1;
            }
            labels.push(row);
        }
        ReverseLexFilling {
            shape: mu.clone(),
            labels,
            positions,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.labels
    }

    /// Label at `(i, j)`, 0-indexed.
    pub fn label(&self, i: usize, j: usize) -> Option<usize> {
        self.labels.get(i).and_then(|r| r.get(j)).copied()
    }

    /// Cell `(i, j)` holding label `x`, 0-indexed.
    pub fn position(&self, x: usize) -> (usize, usize) {
        self.positions[x]
    }

    /// `x⁻`, the label immediately left of `x`.
    pub fn minus(&self, x: usize) -> Option<usize> {
        let (i, j) = self.position(x);
        j.checked_sub(1).and_then(|j| self.label(i, j))
    }

    /// `x⁺`, the label immediately below `x`.
    pub fn plus(&self, x: usize) -> Option<usize> {
        let (i, j) = self.position(x);
        self.label(i + 1, j)
    }
}

struct Placement<'a> {
    rl: &'a ReverseLexFilling,
    mu: &'a Partition,
    rows: Vec<usize>,
    placed: Vec<(usize, usize)>,
    out: SchurExpansion,
}

impl Placement<'_> {
    fn place(&mut self, x: usize) {
        if x == 0 {
            let remaining = Partition::new(self.rows.clone()).expect("unlabelled boxes form a diagram");
            self.out.add_term(remaining, 1);
            return;
        }
        let (i, j) = self.rl.position(x);
        let min_col = self.mu.part(i) - j - 1;
        let left = self.rl.minus(x).map(|y| self.placed[y]);
        let below = self.rl.plus(x).map(|y| self.placed[y]);
        for l in i..self.rows.len() {
            let len = self.rows[l];
            if len == 0 || self.rows.get(l + 1).is_some_and(|&next| next == len) {
                continue;
            }
            let m = len - 1;
            if m < min_col {
                continue;
            }
            // SW of x⁻: strictly left, weakly below
            if let Some((l2, m2)) = left {
                if !(m < m2 && l >= l2) {
                    continue;
                }
            }
            // NE of x⁺: strictly above, weakly right
            if let Some((l2, m2)) = below {
                if !(l < l2 && m >= m2) {
                    continue;
                }
            }
            self.rows[l] -= 1;
            self.placed[x] = (l, m);
            self.place(x - 1);
            self.rows[l] += 1;
        }
    }
}

/// Expansion of `s_{λ/μ}` by placing the labels of `rl(μ)` on the outer
/// boxes of `λ` and collecting what is left unlabelled.
pub fn skew_expand(lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    if !lambda.contains(mu) {
        return Err(KronError::NotContained {
            inner: format!("{mu:?}"),
            outer: format!("{lambda:?}"),
        });
    }
    let rl = ReverseLexFilling::new(mu);
    let mut search = Placement {
        rl: &rl,
        mu,
        rows: lambda.parts().to_vec(),
        placed: vec![(0, 0); mu.size() + 1],
        out: SchurExpansion::new(),
    };
    search.place(mu.size());
    Ok(search.out)
}

/// Expansion of a skew shape given directly.
pub fn skew_shape_expand(shape: &SkewShape) -> SchurExpansion {
    skew_expand(shape.outer(), shape.inner()).expect("skew shape is well formed")
}

/// Sorted rearrangement of the row differences `λ_i - α_i`.
pub fn min_lex_term(lambda: &Partition, alpha: &Partition) -> Result<Partition> {
    if !lambda.contains(alpha) {
        return Err(KronError::NotContained {
            inner: format!("{alpha:?}"),
            outer: format!("{lambda:?}"),
        });
    }
    Ok(Partition::from_unsorted(
        (0..lambda.len()).map(|i| lambda.part(i) - alpha.part(i)).collect(),
    ))
}

/// `s_α · s_{λ/α}`: the coefficient of `s_ν` counts α-lattice SSYT of shape
/// `λ/α` and type `ν/α`.
pub fn skew_times_alpha(lambda: &Partition, alpha: &Partition) -> Result<SchurExpansion> {
    let shape = SkewShape::new(lambda.clone(), alpha.clone())?;
    Ok(product_from_bins(
        alpha_lattice_counts_by_type(&shape, alpha, |_| true),
        alpha,
    ))
}

pub(crate) fn product_from_bins(
    bins: impl IntoIterator<Item = (CompositionType, u64)>,
    alpha: &Partition,
) -> SchurExpansion {
    SchurExpansion::from_terms(
        bins.into_iter()
            .map(|(ty, c)| (ty.plus(alpha).expect("α-lattice content plus α is a partition"), c)),
    )
}

/// Result of [`positivity_diff`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub expansion: SchurExpansion,
    pub schur_positive: bool,
}

/// `α` with one box removed from its first row.
pub fn alpha_minus(alpha: &Partition) -> Result<Partition> {
    if alpha.is_empty() || alpha.part(0) == alpha.part(1) {
        return Err(KronError::domain(format!(
            "{alpha:?} needs α_1 > α_2 to remove a box from its first row"
        )));
    }
    let mut parts = alpha.parts().to_vec();
    parts[0] -= 1;
    Partition::new(parts)
}

/// `s_α s_{λ/α} - s_{α⁻} s_{λ/α⁻}` and whether it is Schur positive.
pub fn positivity_diff(lambda: &Partition, alpha: &Partition) -> Result<Positivity> {
    let minus = alpha_minus(alpha)?;
    let expansion = skew_times_alpha(lambda, alpha)? - skew_times_alpha(lambda, &minus)?;
    let schur_positive = expansion.iter().all(|(_, c)| c.sign() != num_bigint::Sign::Minus);
    Ok(Positivity {
        expansion,
        schur_positive,
    })
}
