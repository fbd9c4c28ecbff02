//! Coefficients of `s_{(n-p,p)} ∗ s_{(n-s,1^s)}` for `n - s >= 2p - 1`.

use super::chi;
use crate::error::{KronError, Result};
use crate::oracle::check_size;
use crate::partitions::Partition;

/// `ν = (ν_1, ν_2, 2^i, 1^j)` split into `(ν_1, ν_2, i, j)`, or `None` if
/// some part below the second row exceeds 2.
fn double_hook(nu: &Partition) -> Option<(i64, i64, i64, i64)> {
    let rest = &nu.parts()[nu.len().min(2)..];
    if rest.iter().any(|&x| x > 2) {
        return None;
    }
    let i = rest.iter().filter(|&&x| x == 2).count() as i64;
    let j = rest.len() as i64 - i;
    Some((nu.part(0) as i64, nu.part(1) as i64, i, j))
}

fn in_range(i: i64, hi: i64) -> i64 {
    chi(0 <= i && i <= hi)
}

/// `g_{(n-p,p),(n-s,1^s),ν}`.
pub fn hook_coeff(n: usize, p: usize, s: usize, nu: &Partition) -> Result<u64> {
    check_size(nu, n)?;
    if p == 0 || 2 * p > n || s == 0 || s >= n || n - s + 1 < 2 * p {
        return Err(KronError::domain(format!(
            "hook formula needs p >= 1, 2p <= n, 1 <= s <= n-1 and n-s >= 2p-1; got n={n}, p={p}, s={s}"
        )));
    }
    let Some((v1, v2, i, _)) = double_hook(nu) else {
        return Ok(0);
    };
    let (n, p, s) = (n as i64, p as i64, s as i64);
    if p == 1 {
        return Ok(p1_hook(n, s, nu));
    }
    let value = if v2 <= 1 {
        // hook
        if v1 == n - s && s >= p {
            2
        } else {
            chi((v1 == n - s && s == p - 1) || (v1 == n - s - 1 && s >= p - 1) || (v1 == n - s + 1 && s >= p))
        }
    } else if v2 < p {
        let (a, b) = (s - p + v2, p - v2);
        match v1 - (n - s - v2) {
            0 => in_range(i, a.min(b)),
            1 => in_range(i, a.min(b - 1)) + in_range(i, (a - 1).min(b)) + in_range(i, (a - 2).min(b + 1)),
            2 => in_range(i, (a - 1).min(b - 1)) + in_range(i, (a - 2).min(b)) + in_range(i, (a - 3).min(b + 1)),
            3 => in_range(i, (a - 3).min(b)),
            _ => 0,
        }
    } else if v2 == p {
        let wide = n - s >= 2 * p;
        match v1 - (n - s - p) {
            0 => chi(wide && i == 0),
            1 => {
                if wide && i == 0 && s >= 2 {
                    2
                } else {
                    chi((wide && i == 0 && s == 1) || (n - s == 2 * p - 1 && i == 0 && s >= 2) || (i == 1 && s >= 3))
                }
            }
            2 => {
                if s >= 3 && i == 0 {
                    2
                } else {
                    chi((s == 2 && i == 0) || (s >= 4 && i == 1))
                }
            }
            3 => chi(s >= 3 && i == 0),
            _ => 0,
        }
    } else if v2 == p + 1 {
        let wide = n - s >= 2 * p;
        match v1 - (n - s - p) {
            0 => chi(wide && i == 0 && s >= 1),
            1 => chi(wide && i == 0 && s >= 2),
            _ => 0,
        }
    } else {
        0
    };
    Ok(value as u64)
}

/// `s_{(n-1,1)} ∗ s_{(n-s,1^s)} = s_{(n-s+1,1^{s-1})} + s_{(n-s,2,1^{s-2})}
/// + s_{(n-s,1^s)} + s_{(n-s-1,2,1^{s-1})} + s_{(n-s-1,1^{s+1})}`, keeping
/// only the terms that are partitions. `(n-s,1^s)` needs a first row of
/// length at least 2, so it drops at `s = n-1`.
fn p1_hook(n: i64, s: i64, nu: &Partition) -> u64 {
    let shape = |head: &[i64], ones: i64| -> Option<Partition> {
        if ones < 0 || head.iter().any(|&x| x <= 0) {
            return None;
        }
        let mut parts: Vec<usize> = head.iter().map(|&x| x as usize).collect();
        parts.extend(std::iter::repeat_n(1, ones as usize));
        Partition::new(parts).ok()
    };
    let terms = [
        shape(&[n - s + 1], s - 1),
        shape(&[n - s, 2], s - 2),
        shape(&[n - s], s).filter(|_| n - s >= 2),
        shape(&[n - s - 1, 2], s - 1),
        shape(&[n - s - 1], s + 1),
    ];
    terms.iter().filter(|t| t.as_ref() == Some(nu)).count() as u64
}
