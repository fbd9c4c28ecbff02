//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kron_core::formulas::{
    is_multiplicity_free, tworow_diagonal_coeff, tworow_tworow_sequence, unimodal_pattern, MfreeSource,
};
use kron_core::kronecker::{kron_coeff_with, kron_expand_tworow, kron_upper_bound, kronecker_tableau_count};
use kron_core::oracle::{dimension, oracle_character_coeff, oracle_tworow_signed_sum_coeff, CharacterTable};
use kron_core::partitions::{enumerate_partitions, partitions_of};
use kron_core::skew_expand::{positivity_diff, skew_expand};
use kron_core::tableaux::lr_coefficient;
use kron_core::verify::{verify, Suite, VerifyReport};
use kron_core::{partition, MethodChoice, Partition, PartitionConstraints, SchurExpansion};
use num_bigint::BigInt;

const ROUTE_LIMIT: Duration = Duration::from_secs(5);
const THEOREM_GRID_LIMIT: Duration = Duration::from_secs(10 * 60);
const FORMULA_GRID_LIMIT: Duration = Duration::from_secs(15 * 60);
const CERTIFICATE_LIMIT: Duration = Duration::from_secs(60);

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> std::result::Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.2?}, limit {limit:?}"))
}

fn report_ok(r: &VerifyReport) -> std::result::Result<(), String> {
    ensure(r.all_equal(), || {
        format!(
            "{} suite: {} mismatches, first: {}",
            r.suite,
            r.mismatches.len(),
            r.mismatches[0]
        )
    })
}

/// kron 15 3 (6,4,4,1), ν = (5,4,3,3): 4 on all three routes.
fn c1() -> Check {
    let lambda = partition![6, 4, 4, 1];
    let nu = partition![5, 4, 3, 3];
    let mut times = Vec::new();
    for choice in [
        MethodChoice::Theorem,
        MethodChoice::OracleSigned,
        MethodChoice::OracleCharacter,
    ] {
        let start = Instant::now();
        let r = kron_coeff_with(15, 3, &lambda, &nu, choice).map_err(|e| e.to_string())?;
        ensure(r.value == 4, || format!("{choice:?} gave {}", r.value))?;
        within(ROUTE_LIMIT, start, &format!("{choice:?}"))?;
        times.push(format!("{}={:.2?}", r.method, start.elapsed()));
    }
    Ok(times.join(" "))
}

fn c2() -> Check {
    let e = skew_expand(&partition![4, 4, 2, 2], &partition![3, 3]).map_err(|e| e.to_string())?;
    let expected = SchurExpansion::from_terms([
        (partition![2, 2, 1, 1], 1),
        (partition![3, 2, 1], 1),
        (partition![3, 3], 1),
    ]);
    ensure(e == expected, || format!("skew expansion {e:?}"))?;
    let c = lr_coefficient(&partition![5, 4, 3], &partition![4, 3, 2], &partition![2, 1]);
    ensure(c == 2, || format!("LR coefficient {c}"))?;
    Ok("skew (4,4,2,2)/(3,3) has 3 terms; c = 2".into())
}

fn c3() -> Check {
    let lambda = partition![4, 3];
    let mu = Partition::two_row(7, 3).unwrap();
    for nu in [partition![4, 2, 1], partition![3, 2, 2]] {
        let g = oracle_character_coeff(&mu, &lambda, &nu).map_err(|e| e.to_string())?;
        let s = oracle_tworow_signed_sum_coeff(7, 3, &lambda, &nu).map_err(|e| e.to_string())?;
        let bound = kron_upper_bound(3, &lambda, &nu);
        ensure(g == 1 && s == 1 && bound == 2, || {
            format!("ν={nu:?}: character {g}, signed sum {s}, bound {bound}")
        })?;
    }
    Ok("g = 1 < bound = 2 at (4,2,1) and (3,2,2)".into())
}

fn c4() -> Check {
    let start = Instant::now();
    let r = verify(Suite::Theorem, 12, 4);
    report_ok(&r)?;
    within(THEOREM_GRID_LIMIT, start, "theorem grid")?;
    Ok(format!("{} coefficients in {:.2?}", r.checked, start.elapsed()))
}

fn c5() -> Check {
    let (mut positive, mut negative) = (0, 0);
    for n in 1..=12 {
        for lambda in partitions_of(n) {
            for p in 1..=4.min(n) {
                for alpha in enumerate_partitions(p, PartitionConstraints::inside(lambda.clone())) {
                    if alpha.part(0) == alpha.part(1) {
                        continue;
                    }
                    let pos = positivity_diff(&lambda, &alpha).map_err(|e| e.to_string())?;
                    let predicted = lambda.first() + 1 >= 2 * alpha.part(0);
                    ensure(pos.schur_positive == predicted, || {
                        format!("λ={lambda:?} α={alpha:?}: positive={}", pos.schur_positive)
                    })?;
                    if predicted {
                        positive += 1;
                    } else {
                        negative += 1;
                    }
                }
            }
        }
    }
    ensure(negative > 0, || "no negative cases exercised".into())?;
    Ok(format!("{positive} positive, {negative} non-positive pairs"))
}

fn c6() -> Check {
    let r = verify(Suite::Oracles, 12, 6);
    report_ok(&r)?;
    let mut pairs = 0;
    for n in 1..=10 {
        let table = CharacterTable::cached(n);
        for lambda in table.partitions() {
            for mu in table.partitions() {
                let e = table.kronecker(lambda, mu).map_err(|e| e.to_string())?;
                let lhs: BigInt = e.iter().map(|(nu, g)| g * BigInt::from(dimension(nu))).sum();
                let rhs = BigInt::from(dimension(lambda) * dimension(mu));
                ensure(lhs == rhs, || {
                    format!("dimension sum for {lambda:?}, {mu:?}: {lhs} != {rhs}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{} coefficients agree; dimension identity on {pairs} pairs",
        r.checked
    ))
}

fn direct_free(n: usize, p: usize, lambda: &Partition) -> std::result::Result<bool, String> {
    Ok(kron_expand_tworow(n, p, lambda)
        .map_err(|e| e.to_string())?
        .expansion
        .is_multiplicity_free())
}

fn c7() -> Check {
    let mut checked = 0;
    for n in 6..=12 {
        for lambda in partitions_of(n) {
            let v = is_multiplicity_free(n, 2, &lambda).map_err(|e| e.to_string())?;
            ensure(v.source == MfreeSource::P2Classification, || {
                format!("source {}", v.source)
            })?;
            let direct = direct_free(n, 2, &lambda)?;
            ensure(v.multiplicity_free == direct, || {
                format!("p=2 λ={lambda:?}: direct {direct}")
            })?;
            checked += 1;
        }
    }
    for lambda in [partition![3, 2], partition![2, 2, 1]] {
        ensure(direct_free(5, 2, &lambda)?, || {
            format!("(3,2) ∗ {lambda:?} is not multiplicity free")
        })?;
    }
    for n in [17, 18] {
        for lambda in partitions_of(n).filter(|l| l.first() >= 5 || l.len() >= 5) {
            let v = is_multiplicity_free(n, 3, &lambda).map_err(|e| e.to_string())?;
            ensure(v.source == MfreeSource::P3Classification, || {
                format!("source {}", v.source)
            })?;
            let direct = direct_free(n, 3, &lambda)?;
            ensure(v.multiplicity_free == direct, || {
                format!("p=3 λ={lambda:?}: direct {direct}")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} verdicts agree; n=5 exceptions are multiplicity free"
    ))
}

fn c8() -> Check {
    let start = Instant::now();
    let r = verify(Suite::Formulas, 14, 5);
    report_ok(&r)?;
    within(FORMULA_GRID_LIMIT, start, "formula grid")?;
    Ok(format!("{} coefficients in {:.2?}", r.checked, start.elapsed()))
}

fn c9() -> Check {
    let mut sequences = 0;
    for n in 1..=20usize {
        for p in 1..n {
            for s in p + 1..=n / 2 {
                let full = n + 1 >= 2 * p + s && n + 1 >= 2 * s + p && n + 1 >= 3 * s + p;
                if !full {
                    continue;
                }
                let seq = tworow_tworow_sequence(n, p, s).map_err(|e| e.to_string())?;
                ensure(seq.fully_covered() && seq.unimodal, || {
                    format!("n={n} p={p} s={s}: {seq:?}")
                })?;
                if n - p >= 2 * s {
                    ensure(seq.values() == unimodal_pattern(p), || {
                        format!("n={n} p={p} s={s}: {:?}", seq.values())
                    })?;
                }
                let lambda = Partition::two_row(n, s).unwrap();
                for e in &seq.entries {
                    let nu = Partition::two_row(n, e.t).unwrap();
                    let g = oracle_tworow_signed_sum_coeff(n, p, &lambda, &nu).map_err(|e| e.to_string())?;
                    ensure(g == e.value, || format!("n={n} p={p} s={s} t={}: oracle {g}", e.t))?;
                }
                sequences += 1;
            }
        }
    }
    let mut diagonal = 0;
    for n in 2..=16usize {
        for s in 1..=n / 2 {
            for p in 1..=s {
                if n + 1 < 2 * p + s || n + 1 < 2 * s + p {
                    continue;
                }
                let f = tworow_diagonal_coeff(n, p, s).map_err(|e| e.to_string())?;
                let lambda = Partition::two_row(n, s).unwrap();
                let g = oracle_tworow_signed_sum_coeff(n, p, &lambda, &lambda).map_err(|e| e.to_string())?;
                ensure(f == g, || {
                    format!("diagonal n={n} p={p} s={s}: formula {f}, oracle {g}")
                })?;
                diagonal += 1;
            }
        }
    }
    let lambda = partition![9, 3];
    let g = oracle_character_coeff(&Partition::two_row(12, 2).unwrap(), &lambda, &lambda).map_err(|e| e.to_string())?;
    ensure(g == 2 && tworow_diagonal_coeff(12, 2, 3) == Ok(2), || {
        format!("n=12 p=2 s=3: {g}")
    })?;
    Ok(format!(
        "{sequences} sequences unimodal; {diagonal} diagonal values match"
    ))
}

fn c10() -> Check {
    let start = Instant::now();
    let lambda = partition![19, 19];
    let nu = partition![19, 17, 2];
    let k31 = kronecker_tableau_count(&lambda, &partition![3, 1], &nu);
    let k22 = kronecker_tableau_count(&lambda, &partition![2, 2], &nu);
    ensure(k31 + k22 >= 2, || format!("k(3,1) + k(2,2) = {k31} + {k22}"))?;
    let g = oracle_tworow_signed_sum_coeff(38, 4, &lambda, &nu).map_err(|e| e.to_string())?;
    ensure(g >= 2, || format!("signed sum gives {g}"))?;
    let v = is_multiplicity_free(38, 4, &lambda).map_err(|e| e.to_string())?;
    ensure(
        !v.multiplicity_free && v.source == MfreeSource::P4PlusClassification,
        || format!("verdict {v:?}"),
    )?;
    within(CERTIFICATE_LIMIT, start, "certificate")?;
    Ok(format!("k = {k31} + {k22}, g = {g} in {:.2?}", start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 coefficient at n = 15 on three routes", c1),
        ("2 skew and LR examples", c2),
        ("3 upper bound is strict", c3),
        ("4 tableau rule equals signed sum, n <= 12, p <= 4", c4),
        ("5 positivity iff λ_1 >= 2α_1 - 1, n <= 12", c5),
        ("6 oracles agree, n <= 12; dimension identity, n <= 10", c6),
        ("7 multiplicity-free classifications", c7),
        ("8 closed forms equal coefficients, n <= 14", c8),
        ("9 two-row sequences unimodal", c9),
        ("10 certificate at n = 38", c10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
