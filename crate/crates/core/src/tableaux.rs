//! Semistandard tableaux on skew shapes, filtered by (shifted) lattice words.
//!
//! Every counting routine in the crate goes through [`LatticeSearch`], a
//! backtracking filler that visits cells in reverse reading order (right to
//! left within a row, top row first). The lattice condition is a prefix
//! condition on exactly that word, so an illegal entry is rejected as soon as
//! it is placed.

use std::collections::BTreeMap;

use crate::error::{KronError, Result};
use crate::partitions::{Partition, SkewShape};

/// Content vector `(t_1, t_2, ...)`: `t_i` entries equal to `i`.
///
/// Trailing zeros are dropped; interior zeros are allowed, e.g. the type
/// `ν/α` may start with a zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositionType {
    counts: Vec<usize>,
}

impl CompositionType {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        CompositionType { counts }
    }

    /// `ν/α := (ν_1 - α_1, ν_2 - α_2, ...)`, or `None` when `α ⊄ ν`.
    pub fn skew(nu: &Partition, alpha: &Partition) -> Option<Self> {
        if !nu.contains(alpha) {
            return None;
        }
        Some(Self::new((0..nu.len()).map(|i| nu.part(i) - alpha.part(i)).collect()))
    }

    pub fn from_partition(nu: &Partition) -> Self {
        CompositionType {
            counts: nu.parts().to_vec(),
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of entries equal to `value` (1-based).
    pub fn count_of(&self, value: usize) -> usize {
        value
            .checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `α + t`, which is a partition whenever `t` is the type of an
    /// α-lattice filling.
    pub fn plus(&self, alpha: &Partition) -> Option<Partition> {
        let len = self.counts.len().max(alpha.len());
        let parts = (0..len)
            .map(|i| self.counts.get(i).copied().unwrap_or(0) + alpha.part(i))
            .collect();
        Partition::new(parts).ok()
    }
}

/// A filling of a skew shape, stored row by row (only the skew cells).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates row lengths and the semistandard conditions.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        rows.resize(rows.len().max(shape.rows()), Vec::new());
        for (i, row) in rows.iter().enumerate() {
            let (a, b) = shape.row_range(i);
            if row.len() != b - a {
                return Err(KronError::domain(format!(
                    "row {} of {} needs {} entries, got {}",
                    i + 1,
                    shape,
                    b - a,
                    row.len()
                )));
            }
        }
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return Err(KronError::domain("filling is not semistandard"));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at absolute position `(row, col)`, 0-indexed.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let (a, b) = self.shape.row_range(row);
        (a <= col && col < b).then(|| self.rows[row][col - a])
    }

    fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i == 0 {
                continue;
            }
            let (a, b) = self.shape.row_range(i);
            for col in a..b {
                if let Some(up) = self.entry(i - 1, col) {
                    if up >= self.rows[i][col - a] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Content of the filling.
    pub fn content(&self) -> CompositionType {
        let mut counts = Vec::new();
        for &x in self.rows.iter().flatten() {
            if counts.len() < x {
                counts.resize(x, 0);
            }
            counts[x - 1] += 1;
        }
        CompositionType::new(counts)
    }

    pub fn reverse_reading_word(&self) -> Vec<usize> {
        reverse_reading_word(self)
    }
}

/// Entries read right to left along each row, first row first.
pub fn reverse_reading_word(t: &Tableau) -> Vec<usize> {
    t.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
}

/// Every prefix has `#i + α_i >= #(i+1) + α_{i+1}` for all `i >= 1`.
pub fn is_alpha_lattice(word: &[usize], alpha: &Partition) -> bool {
    let top = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; top + 1];
    for &x in word {
        counts[x - 1] += 1;
        if x >= 2 && counts[x - 2] + alpha.part(x - 2) < counts[x - 1] + alpha.part(x - 1) {
            return false;
        }
    }
    true
}

/// Ordinary lattice permutation test, checked over all prefixes and letters.
pub fn is_lattice_permutation(word: &[usize]) -> bool {
    let top = word.iter().copied().max().unwrap_or(0);
    (1..=word.len()).all(|j| {
        let prefix = &word[..j];
        (1..top).all(|i| prefix.iter().filter(|&&x| x == i).count() >= prefix.iter().filter(|&&x| x == i + 1).count())
    })
}

#[derive(Clone, Copy, Debug)]
struct Cell {
    row: usize,
    col: usize,
    right: Option<usize>,
    above: Option<usize>,
}

/// Backtracking enumerator of α-lattice semistandard fillings.
pub(crate) struct LatticeSearch {
    shape: SkewShape,
    cells: Vec<Cell>,
    row_offset: Vec<usize>,
    alpha: Vec<usize>,
    target: Option<Vec<usize>>,
}

/// A complete filling handed to the visitor of [`LatticeSearch::run`].
pub(crate) struct Filling<'a> {
    search: &'a LatticeSearch,
    values: &'a [usize],
    counts: &'a [usize],
}

impl Filling<'_> {
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.search.index_of(row, col).map(|i| self.values[i])
    }

    pub fn content(&self) -> CompositionType {
        CompositionType::new(self.counts.to_vec())
    }

    /// How many cells of `row` hold `value`.
    pub fn row_count(&self, row: usize, value: usize) -> usize {
        let (a, b) = self.search.shape.row_range(row);
        if row >= self.search.shape.rows() || a >= b {
            return 0;
        }
        let start = self.search.row_offset[row];
        self.values[start..start + (b - a)]
            .iter()
            .filter(|&&x| x == value)
            .count()
    }

    pub fn to_tableau(&self) -> Tableau {
        let shape = &self.search.shape;
        let rows = (0..shape.rows())
            .map(|r| {
                let (a, b) = shape.row_range(r);
                (a..b).map(|c| self.entry(r, c).unwrap()).collect()
            })
            .collect();
        Tableau::new(shape.clone(), rows).expect("search only produces semistandard fillings")
    }
}

impl LatticeSearch {
    pub fn new(shape: &SkewShape, alpha: &Partition, target: Option<&CompositionType>) -> Self {
        let mut cells = Vec::with_capacity(shape.size());
        let mut row_offset = Vec::with_capacity(shape.rows());
        for r in 0..shape.rows() {
            row_offset.push(cells.len());
            let (a, b) = shape.row_range(r);
            for c in (a..b).rev() {
                cells.push(Cell {
                    row: r,
                    col: c,
                    right: None,
                    above: None,
                });
            }
        }
        let mut search = LatticeSearch {
            shape: shape.clone(),
            cells,
            row_offset,
            alpha: alpha.parts().to_vec(),
            target: target.map(|t| t.counts().to_vec()),
        };
        for i in 0..search.cells.len() {
            let Cell { row, col, .. } = search.cells[i];
            search.cells[i].right = search.index_of(row, col + 1);
            search.cells[i].above = row.checked_sub(1).and_then(|r| search.index_of(r, col));
        }
        search
    }

    fn index_of(&self, row: usize, col: usize) -> Option<usize> {
        if row >= self.shape.rows() || !self.shape.contains_cell(row, col) {
            return None;
        }
        let (_, b) = self.shape.row_range(row);
        Some(self.row_offset[row] + (b - 1 - col))
    }

    fn alpha(&self, i: usize) -> usize {
        self.alpha.get(i).copied().unwrap_or(0)
    }

    /// Calls `visit` on every α-lattice semistandard filling (of the target
    /// type, if one was given).
    pub fn run(&self, mut visit: impl FnMut(&Filling<'_>)) {
        if let Some(t) = &self.target {
            if t.iter().sum::<usize>() != self.cells.len() {
                return;
            }
        }
        let max_value = match &self.target {
            Some(t) => t.len(),
            None => self.cells.len() + self.alpha.len() + 1,
        };
        let mut values = vec![0usize; self.cells.len()];
        let mut counts = vec![0usize; max_value + 1];
        self.step(0, 0, &mut values, &mut counts, &mut visit);
    }

    fn step(
        &self,
        idx: usize,
        max_used: usize,
        values: &mut [usize],
        counts: &mut [usize],
        visit: &mut impl FnMut(&Filling<'_>),
    ) {
        if idx == self.cells.len() {
            let used = counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
            visit(&Filling {
                search: self,
                values,
                counts: &counts[..used],
            });
            return;
        }
        let cell = self.cells[idx];
        let lo = cell.above.map_or(1, |a| values[a] + 1);
        let cap = match &self.target {
            Some(t) => t.len(),
            // a letter beyond ℓ(α)+1 needs its predecessor already present
            None => (self.alpha.len() + 1).max(max_used + 1),
        };
        let hi = cell.right.map_or(cap, |r| values[r].min(cap));
        for v in lo..=hi {
            if let Some(t) = &self.target {
                if counts[v - 1] >= t[v - 1] {
                    continue;
                }
            }
            if v >= 2 && counts[v - 2] + self.alpha(v - 2) < counts[v - 1] + 1 + self.alpha(v - 1) {
                continue;
            }
            counts[v - 1] += 1;
            values[idx] = v;
            self.step(idx + 1, max_used.max(v), values, counts, visit);
            counts[v - 1] -= 1;
        }
        values[idx] = 0;
    }
}

/// Number of SSYT of `shape` and content `ty` whose reverse reading word is
/// an α-lattice permutation.
pub fn count_ssyt_alpha_lattice(shape: &SkewShape, ty: &CompositionType, alpha: &Partition) -> u64 {
    let mut count = 0u64;
    LatticeSearch::new(shape, alpha, Some(ty)).run(|_| count += 1);
    count
}

/// All α-lattice SSYT of `shape` passing `keep`, counted by content.
pub(crate) fn alpha_lattice_counts_by_type(
    shape: &SkewShape,
    alpha: &Partition,
    mut keep: impl FnMut(&Filling<'_>) -> bool,
) -> BTreeMap<CompositionType, u64> {
    let mut bins = BTreeMap::new();
    LatticeSearch::new(shape, alpha, None).run(|f| {
        if keep(f) {
            *bins.entry(f.content()).or_insert(0) += 1;
        }
    });
    bins
}

/// Every α-lattice SSYT of `shape` and content `ty`, materialized.
pub fn alpha_lattice_tableaux(shape: &SkewShape, ty: &CompositionType, alpha: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    LatticeSearch::new(shape, alpha, Some(ty)).run(|f| out.push(f.to_tableau()));
    out
}

/// Littlewood–Richardson coefficient `c^λ_{μν}`: lattice SSYT of shape `λ/μ`
/// and content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    count_ssyt_alpha_lattice(&shape, &CompositionType::from_partition(nu), &Partition::empty())
}
