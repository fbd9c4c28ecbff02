//! Brute-force Kronecker products used as ground truth.
//!
//! Two computations with no shared code path beyond partition arithmetic:
//! the signed sum of products `s_α s_{λ/α}` for a two-row first factor, and
//! the character inner product `g_{λμν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`
//! with characters from the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{KronError, Result};
use crate::expansion::SchurExpansion;
use crate::partitions::{enumerate_partitions, partitions_of, Partition, PartitionConstraints, SkewShape};
use crate::skew_expand::skew_times_alpha;
use crate::tableaux::{count_ssyt_alpha_lattice, CompositionType};

pub(crate) fn check_size(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.size() != n {
        return Err(KronError::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    Ok(())
}

pub(crate) fn check_two_row(n: usize, p: usize) -> Result<()> {
    if 2 * p > n {
        return Err(KronError::domain(format!(
            "(n-p,p) = ({},{p}) is not a partition",
            n as i64 - p as i64
        )));
    }
    Ok(())
}

fn inside(lambda: &Partition) -> PartitionConstraints {
    PartitionConstraints::inside(lambda.clone())
}

/// `s_{(n-p,p)} ∗ s_λ` as `Σ_{α⊢p, α⊆λ} s_α s_{λ/α} - Σ_{β⊢p-1, β⊆λ} s_β s_{λ/β}`.
pub fn oracle_tworow_signed_sum(n: usize, p: usize, lambda: &Partition) -> Result<SchurExpansion> {
    check_size(lambda, n)?;
    check_two_row(n, p)?;
    let plus: Vec<Partition> = enumerate_partitions(p, inside(lambda)).collect();
    let minus: Vec<Partition> = match p.checked_sub(1) {
        Some(q) => enumerate_partitions(q, inside(lambda)).collect(),
        None => Vec::new(),
    };
    let mut out = SchurExpansion::new();
    for a in &plus {
        out += &skew_times_alpha(lambda, a)?;
    }
    for b in &minus {
        out -= &skew_times_alpha(lambda, b)?;
    }
    if let Some((nu, c)) = out.iter().find(|(_, c)| c.sign() == num_bigint::Sign::Minus) {
        return Err(KronError::Verification(format!(
            "signed sum left coefficient {c} at {nu:?}"
        )));
    }
    Ok(out)
}

/// One coefficient of [`oracle_tworow_signed_sum`], counting only fillings of
/// the requested type.
pub fn oracle_tworow_signed_sum_coeff(n: usize, p: usize, lambda: &Partition, nu: &Partition) -> Result<u64> {
    check_size(lambda, n)?;
    check_size(nu, n)?;
    check_two_row(n, p)?;
    let term = |a: &Partition| -> u64 {
        match CompositionType::skew(nu, a) {
            Some(ty) => {
                let shape = SkewShape::new(lambda.clone(), a.clone()).expect("α ⊆ λ");
                count_ssyt_alpha_lattice(&shape, &ty, a)
            }
            None => 0,
        }
    };
    let plus: u64 = enumerate_partitions(p, inside(lambda)).map(|a| term(&a)).sum();
    let minus: u64 = match p.checked_sub(1) {
        Some(q) => enumerate_partitions(q, inside(lambda)).map(|b| term(&b)).sum(),
        None => 0,
    };
    plus.checked_sub(minus)
        .ok_or_else(|| KronError::Verification(format!("signed sum negative at {nu:?}: {plus} - {minus}")))
}

/// A conjugacy class of `S_n`, labelled by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType {
    parts: Partition,
    z: BigUint,
}

impl CycleType {
    pub fn new(rho: Partition) -> Self {
        let mut z = BigUint::one();
        let parts = rho.parts();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i];
            let mut m = 0usize;
            while i < parts.len() && parts[i] == k {
                m += 1;
                i += 1;
                z *= BigUint::from(k) * BigUint::from(m);
            }
        }
        CycleType { parts: rho, z }
    }

    pub fn parts(&self) -> &Partition {
        &self.parts
    }

    /// Centralizer order `Π i^{m_i} m_i!`.
    pub fn z(&self) -> &BigUint {
        &self.z
    }

    /// `n! / z_ρ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.parts.size()) / &self.z
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect()
}

fn from_beta_set(mut beads: Vec<usize>) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let l = beads.len();
    Partition::new((0..l).map(|i| beads[i] - (l - 1 - i)).collect()).expect("beta set gives a partition")
}

type Memo = HashMap<(Partition, Vec<usize>), i64>;

fn mn(lambda: &Partition, cycles: &[usize], start: usize, memo: &mut Memo) -> i64 {
    if start == cycles.len() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.clone(), cycles[start..].to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = cycles[start];
    let beads = beta_set(lambda);
    let mut total = 0i64;
    for (idx, &b) in beads.iter().enumerate() {
        let Some(target) = b.checked_sub(r) else { continue };
        if beads.contains(&target) {
            continue;
        }
        let between = beads.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        let rest = from_beta_set(moved);
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&rest, cycles, start + 1, memo);
    }
    memo.insert(key, total);
    total
}

/// `χ^λ(ρ)` by removing border strips of length `ρ_1, ρ_2, ...` in turn.
pub fn mn_character(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    check_size(lambda, rho.parts.size())?;
    Ok(mn(lambda, rho.parts.parts(), 0, &mut Memo::new()))
}

/// All irreducible characters of `S_n`, rows and columns in descending lex order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    classes: Vec<CycleType>,
    class_sizes: Vec<BigInt>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions: Vec<Partition> = partitions_of(n).collect();
        let classes: Vec<CycleType> = partitions.iter().cloned().map(CycleType::new).collect();
        let values = partitions
            .par_iter()
            .map(|lambda| {
                let mut memo = Memo::new();
                classes
                    .iter()
                    .map(|rho| mn(lambda, rho.parts.parts(), 0, &mut memo))
                    .collect()
            })
            .collect();
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let class_sizes = classes.iter().map(|c| BigInt::from(c.class_size())).collect();
        CharacterTable {
            n,
            partitions,
            index,
            classes,
            class_sizes,
            values,
        }
    }

    /// Shared table for `n`, built once per process.
    pub fn cached(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("character cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(CharacterTable::new(n));
        let mut guard = cache.lock().expect("character cache poisoned");
        Arc::clone(guard.entry(n).or_insert(table))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    fn row(&self, lambda: &Partition) -> Result<&[i64]> {
        self.index
            .get(lambda)
            .map(|&i| self.values[i].as_slice())
            .ok_or(KronError::SizeMismatch {
                expected: self.n,
                found: lambda.size(),
            })
    }

    pub fn character(&self, lambda: &Partition, rho: &Partition) -> Result<i64> {
        let row = self.row(lambda)?;
        let j = self.index.get(rho).ok_or(KronError::SizeMismatch {
            expected: self.n,
            found: rho.size(),
        })?;
        Ok(row[*j])
    }

    /// `n!·Σ_ρ χ^λ χ^μ / z_ρ`, pointwise product weighted by class sizes.
    fn weighted_product(&self, lambda: &Partition, mu: &Partition) -> Result<Vec<BigInt>> {
        let a = self.row(lambda)?;
        let b = self.row(mu)?;
        Ok((0..self.classes.len())
            .map(|j| BigInt::from(a[j]) * BigInt::from(b[j]) * &self.class_sizes[j])
            .collect())
    }

    fn exact_quotient(&self, numerator: BigInt, what: impl FnOnce() -> String) -> Result<BigInt> {
        let order = BigInt::from(factorial(self.n));
        let (q, r) = numerator.div_rem(&order);
        if !r.is_zero() {
            return Err(KronError::Verification(format!(
                "character sum for {} is not divisible by {}!",
                what(),
                self.n
            )));
        }
        if q.sign() == num_bigint::Sign::Minus {
            return Err(KronError::Verification(format!("negative multiplicity for {}", what())));
        }
        Ok(q)
    }

    /// `χ^λ χ^μ = Σ_ν g_{λμν} χ^ν`.
    pub fn kronecker(&self, lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
        let w = self.weighted_product(lambda, mu)?;
        let mut out = SchurExpansion::new();
        for (nu, row) in self.partitions.iter().zip(&self.values) {
            let num: BigInt = w.iter().zip(row).map(|(x, &c)| x * BigInt::from(c)).sum();
            let g = self.exact_quotient(num, || format!("{lambda:?} {mu:?} {nu:?}"))?;
            out.add_term(nu.clone(), g);
        }
        Ok(out)
    }

    pub fn kronecker_coeff(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
        let w = self.weighted_product(lambda, mu)?;
        let row = self.row(nu)?;
        let num: BigInt = w.iter().zip(row).map(|(x, &c)| x * BigInt::from(c)).sum();
        self.exact_quotient(num, || format!("{lambda:?} {mu:?} {nu:?}"))
    }
}

/// Full expansion of `s_λ ∗ s_μ` from characters.
pub fn oracle_character_kron(lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    check_size(mu, lambda.size())?;
    CharacterTable::cached(lambda.size()).kronecker(lambda, mu)
}

/// `g_{λμν}` from characters.
pub fn oracle_character_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    check_size(mu, lambda.size())?;
    check_size(nu, lambda.size())?;
    let g = CharacterTable::cached(lambda.size()).kronecker_coeff(lambda, mu, nu)?;
    g.to_u64()
        .ok_or_else(|| KronError::Verification(format!("coefficient {g} exceeds u64")))
}

/// Number of standard tableaux of shape `λ`, by the hook length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let hooks = lambda.cells().fold(BigUint::one(), |acc, (i, j)| {
        acc * BigUint::from(lambda.part(i) - j + conj.part(j) - i - 1)
    });
    factorial(lambda.size()) / hooks
}
