//! Coefficients of two-row and `(ν_1,ν_2,ν_3,ν_3)` shapes in `s_{(n-p,p)} ∗ s_λ`.

use super::{ceil_div, chi, floor_div};
use crate::error::{KronError, Result};
use crate::kronecker::kron_coeff;
use crate::oracle::check_size;
use crate::partitions::Partition;

/// Per-`l` terms of the coefficient of `s_{(n-t,t)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetTerms {
    pub l: i64,
    pub m: i64,
    pub big_m: i64,
    pub m_prime: i64,
    pub big_m_prime: i64,
    pub b: i64,
    pub c: i64,
}

fn lam4(lambda: &Partition) -> [i64; 4] {
    [0, 1, 2, 3].map(|i| lambda.part(i) as i64)
}

/// `m_l, M_l, m'_l, M'_l, b(l), c(l)` for one `l`.
pub fn target_terms(p: usize, lambda: &Partition, t: usize, l: i64) -> TargetTerms {
    let [l1, l2, l3, l4] = lam4(lambda);
    let (p, t) = (p as i64, t as i64);
    let e3 = (l3 - l).max(0);
    let m = (l1 - l2)
        .min(t - l2 + p - 2 * l - e3 - l4)
        .min(p - 2 * l - 1)
        .min(l1 + l4 + p - 2 * l - t);
    let big_m = 0.max(t - l2 + p - 2 * l - l3);
    let m_prime = (l2 - l.max(l3))
        .min(t - p + l - e3 - l4)
        .min(l1 - 2 * p + 3 * l)
        .min(l4 - t + l1 - p + l + l2);
    let big_m_prime = 0.max(t - p + l - l3).max(l2 - p + l);
    let b = chi(l2 - p + 2 * l + e3 + l4 <= t && t < l2 + l3);
    let c = chi(l1 - (p - l).max(l2) >= p - 2 * l)
        * chi(p - l + (l2 - p + l).max(0) + e3 + l4 <= t && t <= l2 + l3 + p - 2 * l - e3);
    TargetTerms {
        l,
        m,
        big_m,
        m_prime,
        big_m_prime,
        b,
        c,
    }
}

/// `a_p`, the contribution of `α = (p/2, p/2)`.
fn a_term(p: usize, lambda: &Partition, t: usize) -> i64 {
    let [l1, l2, l3, l4] = lam4(lambda);
    let (p, t) = (p as i64, t as i64);
    chi(p % 2 == 0) * chi(l3 <= p / 2 && p / 2 <= t.min(l2)) * chi(l2 + l4 <= t && t <= (l2 + l3).min(l1 + l4))
}

fn span(lo: i64, hi: i64) -> i64 {
    0.max(hi - lo + 1)
}

/// Coefficient of `s_{(n-t,t)}` in `s_{(n-p,p)} ∗ s_λ` for `λ_1 >= 2p-1`.
pub fn tworow_target_coeff(n: usize, p: usize, lambda: &Partition, t: usize) -> Result<u64> {
    check_size(lambda, n)?;
    if p == 0 || 2 * p > n || lambda.first() + 1 < 2 * p || 2 * t > n {
        return Err(KronError::domain(format!(
            "two-row target formula needs p >= 1, 2p <= n, λ_1 >= 2p-1 and 2t <= n; got n={n}, p={p}, λ={lambda:?}, t={t}"
        )));
    }
    if lambda.len() > 4 {
        return Ok(0);
    }
    let [_, l2, l3, l4] = lam4(lambda);
    let (pi, ti) = (p as i64, t as i64);
    let top = (floor_div(pi + 1, 2) - 1).min(ti).min(l2).min(pi - l3);
    let mut total = a_term(p, lambda, t);
    for l in l4.max(pi - l2)..=top {
        let x = target_terms(p, lambda, t, l);
        total += x.b * span(x.big_m, x.m);
    }
    for l in l4..=top {
        let x = target_terms(p, lambda, t, l);
        total += x.c * span(x.big_m_prime, x.m_prime);
    }
    Ok(total as u64)
}

/// `m_1..m_4` and `M_1..M_4` of the two-row by two-row formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowTerms {
    pub m: [i64; 4],
    pub big_m: [i64; 4],
}

pub fn tworow_terms(n: usize, p: usize, s: usize, t: usize) -> TwoRowTerms {
    let (n, p, s, t) = (n as i64, p as i64, s as i64, t as i64);
    let m1 = t.min(floor_div(t - s + p, 2));
    let big_m1 = 0.max(p - s).max(ceil_div(t + s + p - n, 2));
    let m2 = s.min(floor_div(p + 1, 2) - 1);
    let big_m2 = 0.max(p - s).max(ceil_div(2 * s + p - n, 2));
    let m3 = s.min(floor_div(p + s - t, 2));
    // l < p - s, so the bound is p - s - 1
    let m4 = s.min(p - s - 1).min(floor_div(p + s - t, 2));
    let big_m4 = 0
        .max(p - t)
        .max(ceil_div(t + s + p - n, 2))
        .max(ceil_div(2 * p + s - n, 3));
    TwoRowTerms {
        m: [m1, m2, m3, m4],
        big_m: [big_m1, big_m2, big_m1, big_m4],
    }
}

fn check_tworow(n: usize, p: usize, s: usize) -> Result<()> {
    if p == 0 || 2 * p > n || 2 * s > n || n - s + 1 < 2 * p {
        return Err(KronError::domain(format!(
            "two-row formula needs p >= 1, 2p <= n, 2s <= n and n-s >= 2p-1; got n={n}, p={p}, s={s}"
        )));
    }
    Ok(())
}

/// Coefficient of `s_{(n-t,t)}` in `s_{(n-p,p)} ∗ s_{(n-s,s)}` for `n-s >= 2p-1`.
pub fn tworow_tworow_coeff(n: usize, p: usize, s: usize, t: usize) -> Result<u64> {
    check_tworow(n, p, s)?;
    if 2 * t > n {
        return Err(KronError::domain(format!("(n-t,t) needs 2t <= n, got n={n}, t={t}")));
    }
    let TwoRowTerms { m, big_m } = tworow_terms(n, p, s, t);
    let value = if t < s {
        span(big_m[0], m[0])
    } else if t == s {
        span(big_m[1], m[1]) + chi(p.is_multiple_of(2)) * chi(p / 2 <= s)
    } else {
        span(big_m[2], m[2]) + span(big_m[3], m[3])
    };
    Ok(value as u64)
}

/// `g_{(n-p,p),(n-s,s),(n-s,s)}`: `⌊p/2⌋+1` if `n-p >= 2s`, `⌊p/2⌋` if `n-p = 2s-1`.
pub fn tworow_diagonal_coeff(n: usize, p: usize, s: usize) -> Result<u64> {
    if p > s || 2 * s > n || n - s + 1 < 2 * p || n - p + 1 < 2 * s {
        return Err(KronError::domain(format!(
            "diagonal formula needs p <= s, n-s >= 2p-1 and n-p >= 2s-1; got n={n}, p={p}, s={s}"
        )));
    }
    Ok((p / 2 + usize::from(n - p >= 2 * s)) as u64)
}

/// Where an entry of [`TwoRowSequence`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceSource {
    /// `n - t >= 2s - 1`: closed form.
    Formula,
    /// Hypothesis fails for this `t`: computed by [`kron_coeff`].
    KronCoeff,
}

impl SequenceSource {
    pub fn as_str(self) -> &'static str {
        match self {
            SequenceSource::Formula => "formula",
            SequenceSource::KronCoeff => "kron_coeff",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceEntry {
    pub t: usize,
    pub value: u64,
    pub source: SequenceSource,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowSequence {
    pub entries: Vec<SequenceEntry>,
    pub unimodal: bool,
}

impl TwoRowSequence {
    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.value).collect()
    }

    /// Every entry came from the closed form.
    pub fn fully_covered(&self) -> bool {
        self.entries.iter().all(|e| e.source == SequenceSource::Formula)
    }
}

/// No strict decrease is ever followed by a strict increase.
pub fn is_unimodal(values: &[u64]) -> bool {
    let mut falling = false;
    for w in values.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

/// `1, 1, 2, 2, ..., ⌊p/2⌋+1, ..., 2, 2, 1, 1` (length `2p+1`).
pub fn unimodal_pattern(p: usize) -> Vec<u64> {
    (0..=2 * p).map(|k| (k.min(2 * p - k) / 2 + 1) as u64).collect()
}

/// Coefficients of `s_{(n-t,t)}` for `t = s-p, ..., s+p` (stopping at
/// `t = ⌊n/2⌋`), for `p <= s-1`, `n-s >= 2p-1`, `n-p >= 2s-1`.
pub fn tworow_tworow_sequence(n: usize, p: usize, s: usize) -> Result<TwoRowSequence> {
    if p + 1 > s || n - s + 1 < 2 * p || n + 1 < 2 * s + p || 2 * s > n {
        return Err(KronError::domain(format!(
            "sequence needs p <= s-1, n-s >= 2p-1 and n-p >= 2s-1; got n={n}, p={p}, s={s}"
        )));
    }
    check_tworow(n, p, s)?;
    let lambda = Partition::two_row(n, s)?;
    let mut entries = Vec::new();
    for t in (s - p)..=(s + p).min(n / 2) {
        let entry = if n - t + 1 >= 2 * s {
            SequenceEntry {
                t,
                value: tworow_tworow_coeff(n, p, s, t)?,
                source: SequenceSource::Formula,
            }
        } else {
            SequenceEntry {
                t,
                value: kron_coeff(n, p, &lambda, &Partition::two_row(n, t)?)?.value,
                source: SequenceSource::KronCoeff,
            }
        };
        entries.push(entry);
    }
    let unimodal = is_unimodal(&entries.iter().map(|e| e.value).collect::<Vec<_>>());
    Ok(TwoRowSequence { entries, unimodal })
}

/// `M_1, m_1, M_2, m_2` for `ν = (ν_1, ν_2, ν_3, ν_3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePairTerms {
    pub big_m1: i64,
    pub m1: i64,
    pub big_m2: i64,
    pub m2: i64,
}

pub fn double_pair_terms(n: usize, p: usize, s: usize, nu: &Partition) -> DoublePairTerms {
    let (n, p, s) = (n as i64, p as i64, s as i64);
    let [v1, v2, v3, _] = lam4(nu);
    let half = floor_div(p + 1, 2) - 1;
    DoublePairTerms {
        big_m1: (p - v1)
            .max(v3)
            .max(p - s + v3)
            .max(ceil_div(2 * p - v1, 3))
            .max(ceil_div(p + s - v3 - v1, 2)),
        m1: half.min(v2).min(s - v3).min(floor_div(v2 + v3 + p - s, 2)),
        // The last term keeps the second-row 2's lattice: the first row needs
        // at least ν_2 - p + l ones.
        big_m2: v3
            .max(p - v2)
            .max(ceil_div(p + 2 * s - n, 2))
            .max(ceil_div(p + s - v1 - v3, 2)),
        m2: half.min(v2).min(s - v3).min(floor_div(s + p - v2 - v3, 2)),
    }
}

/// `g_{(n-p,p),(n-s,s),ν}` for `ν = (ν_1, ν_2, ν_3, ν_3)` with `ν_3 >= 1`.
pub fn nu_double_pair_coeff(n: usize, p: usize, s: usize, nu: &Partition) -> Result<u64> {
    check_size(nu, n)?;
    if nu.len() != 4 || nu.part(2) != nu.part(3) {
        return Err(KronError::domain(format!(
            "ν must have the form (ν1,ν2,ν3,ν3), got {nu:?}"
        )));
    }
    if s == 0 || 2 * p > n || 2 * s > n || n - s + 1 < 2 * p {
        return Err(KronError::domain(format!(
            "formula needs s >= 1, n >= 2p, n >= 2s and n-s >= 2p-1; got n={n}, p={p}, s={s}"
        )));
    }
    if p <= 1 {
        return Ok(0);
    }
    let [_, v2, v3, _] = lam4(nu);
    let (pi, si) = (p as i64, s as i64);
    let x = double_pair_terms(n, p, s, nu);
    let value = chi(pi % 2 == 0) * chi(v2 + v3 == si) * chi(v3 <= pi / 2 && pi / 2 <= v2)
        + chi(v2 + v3 >= si) * span(x.big_m2, x.m2)
        + chi(v2 + v3 < si) * span(x.big_m1, x.m1);
    Ok(value as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn examples() {
        assert_eq!(tworow_tworow_coeff(12, 2, 3, 3).unwrap(), 2);
        assert_eq!(tworow_tworow_coeff(12, 2, 3, 0).unwrap(), 0);
        assert_eq!(tworow_target_coeff(12, 2, &partition![9, 3], 3).unwrap(), 2);
        assert_eq!(tworow_target_coeff(13, 2, &partition![9, 4], 6).unwrap(), 1);
        assert_eq!(tworow_target_coeff(15, 2, &partition![7, 4, 2, 1, 1], 3).unwrap(), 0);
        assert_eq!(tworow_diagonal_coeff(12, 2, 3).unwrap(), 2);
        let seq = tworow_tworow_sequence(13, 2, 4).unwrap();
        assert_eq!(seq.values(), vec![1, 1, 2, 1, 1]);
        assert!(seq.unimodal);
        assert_eq!(nu_double_pair_coeff(10, 3, 4, &partition![4, 2, 2, 2]).unwrap(), 0);
        assert_eq!(nu_double_pair_coeff(10, 1, 4, &partition![4, 2, 2, 2]).unwrap(), 0);
        assert!(tworow_target_coeff(10, 3, &partition![4, 4, 2], 2).is_err());
        assert!(tworow_tworow_sequence(12, 3, 3).is_err());
    }

    #[test]
    fn hand_expansion_of_terms() {
        // n=12, p=2, s=3, t=3: m2 = min{3, 0} = 0, M2 = max{0, -1, ⌈-4/2⌉} = 0
        let x = tworow_terms(12, 2, 3, 3);
        assert_eq!((x.m[1], x.big_m[1]), (0, 0));
        // t=6, n=13, p=2, s=4: m3 = min{4, 0} = 0, m4 = min{4, -3, 0} = -3
        let x = tworow_terms(13, 2, 4, 6);
        assert_eq!((x.m[2], x.m[3]), (0, -3));
        assert_eq!(x.big_m[0], x.big_m[2]);
        // n=10, p=3, s=4, ν=(4,2,2,2): M2 = max{2, 1, ⌈1/2⌉} = 2, m2 = min{1, 2, 2, ⌊3/2⌋} = 1
        let x = double_pair_terms(10, 3, 4, &partition![4, 2, 2, 2]);
        assert_eq!((x.big_m2, x.m2), (2, 1));
        // λ=(9,3), p=2, t=3, l=0: b(0) = χ(1 <= 3 <= 2) = 0
        let x = target_terms(2, &partition![9, 3], 3, 0);
        assert_eq!(x.b, 0);
        assert_eq!(x.m, 1);
    }

    #[test]
    fn corrected_bounds_match_kron_coeff() {
        // With m4 = min{s, p-s, ..} the t > s branch double counts l = p - s.
        let x = tworow_terms(4, 1, 1, 2);
        let uncorrected_m4 = x.m[3] + 1;
        assert_eq!(span(x.big_m[2], x.m[2]) + span(x.big_m[3], uncorrected_m4), 2);
        assert_eq!(tworow_tworow_coeff(4, 1, 1, 2).unwrap(), 1);
        assert_eq!(kron_coeff(4, 1, &partition![3, 1], &partition![2, 2]).unwrap().value, 1);
        // Without the lattice bound on M2, ν=(5,5,1,1) would get l = 1.
        let nu = partition![5, 5, 1, 1];
        let x = double_pair_terms(12, 4, 5, &nu);
        assert_eq!((x.big_m2, x.m2), (2, 1));
        assert_eq!(nu_double_pair_coeff(12, 4, 5, &nu).unwrap(), 0);
        assert_eq!(kron_coeff(12, 4, &partition![7, 5], &nu).unwrap().value, 0);
    }

    #[test]
    fn unimodality_helpers() {
        assert_eq!(unimodal_pattern(2), vec![1, 1, 2, 1, 1]);
        assert_eq!(unimodal_pattern(3), vec![1, 1, 2, 2, 2, 1, 1]);
        assert!(is_unimodal(&[0, 1, 1, 2, 1, 0]));
        assert!(!is_unimodal(&[1, 0, 1]));
    }
}
