//! Integer partitions, skew shapes and constrained enumeration.
//!
//! A [`Partition`] stores only its positive parts. Reading a part beyond the
//! length returns `0`, so formulas that mention `λ_i` for `i > ℓ(λ)` can be
//! written without special cases.
//!
//! The derived `Ord` on [`Partition`] is the lexicographic order with
//! zero padding: comparing the stored part vectors lexicographically treats a
//! proper prefix as smaller, which is what padding with zeros gives when every
//! stored part is positive.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{KronError, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Builds a [`Partition`] from literal parts, panicking if they are not weakly decreasing.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($x),+]).expect("literal partition must be weakly decreasing")
    };
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates `parts` and strips trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(KronError::NotPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative integers into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(a^k)`, the rectangle with `k` rows of length `a`.
    pub fn rectangle(a: usize, k: usize) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![a; k] }
    }

    /// `(a, 1^b)`.
    pub fn hook(a: usize, b: usize) -> Self {
        let mut parts = Vec::with_capacity(b + 1);
        if a > 0 {
            parts.push(a);
        }
        parts.extend(std::iter::repeat_n(1, b));
        Partition::new(parts).expect("hook with positive arm")
    }

    /// `(n - p, p)`; requires `n >= 2p`.
    pub fn two_row(n: usize, p: usize) -> Result<Self> {
        if 2 * p > n {
            return Err(KronError::domain(format!("(n-p, p) needs n >= 2p, got n={n}, p={p}")));
        }
        Partition::new(vec![n - p, p])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-indexed; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First part `λ_1` (zero for the empty partition).
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// The column-lengths partition `λ'`.
    pub fn conjugate(&self) -> Self {
        let width = self.first();
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&r| r > j).count())
            .collect();
        Partition { parts }
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Boxwise intersection `λ ∩ ν`.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let parts = self.parts.iter().zip(&other.parts).map(|(&a, &b)| a.min(b)).collect();
        Partition { parts }
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_hook(&self) -> bool {
        self.part(1) <= 1
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> usize {
        let mut count = 0;
        let mut last = 0;
        for &x in &self.parts {
            if x != last {
                count += 1;
                last = x;
            }
        }
        count
    }

    /// Number of indices `i < ℓ(λ)` with `λ_i > λ_{i+1}`, i.e. descents
    /// among the nonzero rows.
    pub fn row_descents(&self) -> usize {
        self.parts.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Rows from which a box can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.part(i) > self.part(i + 1)).collect()
    }

    /// Rows to which a box can be added leaving a partition.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .collect()
    }

    /// Removes the last box of row `i`. Panics if row `i` is not removable.
    pub fn remove_box(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        Partition::new(parts).expect("removable row")
    }

    /// Adds a box at the end of row `i`. Panics if row `i` is not addable.
    pub fn add_box(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        Partition::new(parts).expect("addable row")
    }

    /// Cells `(row, col)`, 0-indexed, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
    }
}

impl fmt::Display for Partition {
    /// Canonical plain comma-separated form, e.g. `6,4,4,1`; empty for `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = KronError;

    /// Accepts `"6,4,4,1"`, `"3^2,1"`, optional surrounding parentheses, and
    /// the empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| KronError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base.parse().map_err(|_| err("part is not a nonnegative integer"))?;
            let exp: usize = exp.parse().map_err(|_| err("exponent is not a nonnegative integer"))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts).map_err(|_| err("parts are not weakly decreasing"))
    }
}

/// `inner ⊆ outer`.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn intersect(lambda: &Partition, nu: &Partition) -> Partition {
    lambda.intersect(nu)
}

/// Lexicographic comparison with zero padding.
pub fn lex_compare(lambda: &Partition, mu: &Partition) -> Ordering {
    lambda.cmp(mu)
}

/// A skew diagram `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(KronError::NotContained {
                inner: format!("{inner:?}"),
                outer: format!("{outer:?}"),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ / ()`.
    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            outer: lambda,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape (rows may be empty in the skew diagram).
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[start, end)` of row `i`.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        let (a, b) = self.row_range(row);
        a <= col && col < b
    }

    /// Places `self` above and to the right of `lower`, touching corners, so
    /// that the Schur function of the result is the product of the two.
    pub fn join(&self, lower: &SkewShape) -> SkewShape {
        let width = lower.outer.first();
        let top = self.outer.len();
        let mut outer: Vec<usize> = self.outer.parts().iter().map(|&x| x + width).collect();
        outer.extend_from_slice(lower.outer.parts());
        let mut inner: Vec<usize> = (0..top).map(|i| self.inner.part(i) + width).collect();
        inner.extend_from_slice(lower.inner.parts());
        SkewShape {
            outer: Partition::new(outer).expect("joined outer shape"),
            inner: Partition::new(inner).expect("joined inner shape"),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.outer, self.inner)
    }
}

/// Optional bounds for [`enumerate_partitions`].
#[derive(Clone, Debug, Default)]
pub struct PartitionConstraints {
    pub max_length: Option<usize>,
    pub max_part: Option<usize>,
    pub inside: Option<Partition>,
}

impl PartitionConstraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn inside(lambda: Partition) -> Self {
        PartitionConstraints {
            inside: Some(lambda),
            ..Self::default()
        }
    }

    fn cap(&self, i: usize) -> usize {
        if self.max_length.is_some_and(|m| i >= m) {
            return 0;
        }
        let mut cap = self.max_part.unwrap_or(usize::MAX);
        if let Some(box_) = &self.inside {
            cap = cap.min(box_.part(i));
        }
        cap
    }
}

/// Partitions of `n` satisfying the constraints, in descending lexicographic order.
pub fn enumerate_partitions(n: usize, constraints: PartitionConstraints) -> PartitionIter {
    PartitionIter {
        n,
        constraints,
        current: None,
        done: false,
    }
}

/// All partitions of `n`, descending lexicographic order.
pub fn partitions_of(n: usize) -> PartitionIter {
    enumerate_partitions(n, PartitionConstraints::none())
}

pub struct PartitionIter {
    n: usize,
    constraints: PartitionConstraints,
    current: Option<Vec<usize>>,
    done: bool,
}

impl PartitionIter {
    /// Greedy lexicographically largest completion of `prefix` adding `rest`
    /// more boxes, each new part at most `bound`.
    fn fill(&self, mut prefix: Vec<usize>, mut rest: usize, mut bound: usize) -> Option<Vec<usize>> {
        while rest > 0 {
            let cap = bound.min(self.constraints.cap(prefix.len()));
            if cap == 0 {
                return None;
            }
            let take = cap.min(rest);
            prefix.push(take);
            rest -= take;
            bound = take;
        }
        Some(prefix)
    }

    fn successor(&self, cur: &[usize]) -> Option<Vec<usize>> {
        let mut tail = 0;
        for k in (0..cur.len()).rev() {
            tail += cur[k];
            let lowered = cur[k] - 1;
            if lowered == 0 {
                continue;
            }
            let mut prefix = cur[..k].to_vec();
            prefix.push(lowered);
            if let Some(next) = self.fill(prefix, tail - lowered, lowered) {
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let next = match &self.current {
            None => self.fill(Vec::new(), self.n, usize::MAX),
            Some(cur) => self.successor(cur),
        };
        match next {
            Some(parts) => {
                self.current = Some(parts.clone());
                Some(Partition { parts })
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p("3,2")), p("2,2,1"));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&p("1^5")), p("5"));
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&p("3,1"), &p("5,3,1")));
        assert!(!contains(&p("2,2,2"), &p("5,3,1")));
        for lam in partitions_of(5) {
            assert!(contains(&Partition::empty(), &lam));
        }
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(intersect(&p("5,3,1"), &p("3,2,2,1,1")), p("3,2,1"));
        assert_eq!(intersect(&p("4,2"), &p("4,2")), p("4,2"));
        assert_eq!(intersect(&p("4"), &p("1,1,1")), p("1"));
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&p("3,1,1"), &p("3,2")), Ordering::Less);
        assert_eq!(lex_compare(&p("3,3"), &p("3,2,1")), Ordering::Greater);
        assert_eq!(lex_compare(&p("3,2"), &p("3,2")), Ordering::Equal);
        // different sizes compare after padding
        assert_eq!(lex_compare(&p("3,1"), &p("3,1,1")), Ordering::Less);
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = partitions_of(3).collect();
        assert_eq!(all, vec![p("3"), p("2,1"), p("1,1,1")]);
        let inside: Vec<_> = enumerate_partitions(3, PartitionConstraints::inside(p("6,4,4,1"))).collect();
        assert_eq!(inside, all);
        let zero: Vec<_> = partitions_of(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
    }

    #[test]
    fn partition_counts() {
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &count) in (1..=10).zip(expected.iter()) {
            assert_eq!(partitions_of(n).count(), count, "p({n})");
        }
    }

    #[test]
    fn enumeration_is_strictly_descending() {
        for n in 0..=12 {
            let all: Vec<_> = partitions_of(n).collect();
            assert!(all.windows(2).all(|w| w[0] > w[1]));
            assert!(all.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn constrained_enumeration_matches_filter() {
        let box_ = p("4,3,3,1");
        for n in 0..=11 {
            for max_length in [None, Some(2), Some(3)] {
                for max_part in [None, Some(2), Some(3)] {
                    let c = PartitionConstraints {
                        max_length,
                        max_part,
                        inside: Some(box_.clone()),
                    };
                    let got: Vec<_> = enumerate_partitions(n, c).collect();
                    let want: Vec<_> = partitions_of(n)
                        .filter(|l| max_length.is_none_or(|m| l.len() <= m))
                        .filter(|l| max_part.is_none_or(|m| l.first() <= m))
                        .filter(|l| box_.contains(l))
                        .collect();
                    assert_eq!(got, want);
                }
            }
        }
    }

    #[test]
    fn containment_is_preserved_by_transpose() {
        for n in 0..=12 {
            let all: Vec<_> = partitions_of(n).collect();
            for m in 0..=n {
                for mu in partitions_of(m) {
                    for lam in &all {
                        assert_eq!(lam.contains(&mu), lam.conjugate().contains(&mu.conjugate()));
                    }
                }
            }
        }
    }

    #[test]
    fn intersection_is_largest_common_subdiagram() {
        for n in 1..=8 {
            let all: Vec<_> = partitions_of(n).collect();
            for lam in &all {
                for nu in &all {
                    let cap = lam.intersect(nu);
                    assert!(lam.contains(&cap) && nu.contains(&cap));
                    // any common subdiagram lies inside the intersection
                    for m in 0..=n {
                        for mu in partitions_of(m) {
                            if lam.contains(&mu) && nu.contains(&mu) {
                                assert!(cap.contains(&mu));
                                assert!(mu <= cap);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("3^2,1"), Partition::new(vec![3, 3, 1]).unwrap());
        assert_eq!(p("(6,4,4,1)"), partition![6, 4, 4, 1]);
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("2,1,0"), partition![2, 1]);
        assert!("0,1".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(partition![6, 4, 4, 1].to_string(), "6,4,4,1");
        assert_eq!(format!("{:?}", partition![3, 1]), "(3,1)");
    }

    #[test]
    fn join_matches_display() {
        // α × λ/α for λ = (6,4,2,2), α = (3,1)
        let lam = p("6,4,2,2");
        let alpha = p("3,1");
        let lower = SkewShape::new(lam, alpha.clone()).unwrap();
        let joined = SkewShape::straight(alpha).join(&lower);
        assert_eq!(joined.outer(), &p("9,7,6,4,2,2"));
        assert_eq!(joined.inner(), &p("6,6,3,1"));
    }
}
