use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use kron_core::formulas::{
    hook_coeff, is_multiplicity_free, nu_double_pair_coeff, p1_expand, rect_p2_expand, tworow_target_coeff,
    tworow_tworow_sequence, MfreeVerdict,
};
use kron_core::kronecker::{kron_coeff, kron_coeff_with, kron_expand_tworow, kron_expand_with};
use kron_core::partitions::partitions_of;
use kron_core::skew_expand::{positivity_diff, skew_expand};
use kron_core::tableaux::lr_coefficient;
use kron_core::verify::{verify, Suite};
use kron_core::{KronError, MethodChoice, Partition};
use rayon::prelude::*;

mod output;

use output::{parts, term, terms, Record, SeqEntry, Verdict};

/// Worker count for parallel sweeps; unset means all cores.
const THREADS_VAR: &str = "KRONECKER_THREADS";

#[derive(Parser)]
#[command(
    name = "kronecker",
    version,
    about = "Kronecker products s_(n-p,p) * s_λ and related expansions"
)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// s_(n-p,p) * s_λ, or a single coefficient with --nu.
    Kron {
        n: usize,
        p: usize,
        lambda: Partition,
        #[arg(long)]
        nu: Option<Partition>,
        /// auto, theorem, oracle-signed or oracle-char.
        #[arg(long, default_value = "auto")]
        method: MethodChoice,
    },
    /// Schur expansion of s_{λ/μ}.
    Skew { lambda: Partition, mu: Partition },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
    },
    /// s_α s_{λ/α} - s_{α⁻} s_{λ/α⁻} and whether it is Schur positive.
    Positivity { lambda: Partition, alpha: Partition },
    /// Is s_(n-p,p) * s_λ multiplicity free?
    Mfree {
        n: Option<usize>,
        p: Option<usize>,
        lambda: Option<Partition>,
        /// Every λ ⊢ N for the given P.
        #[arg(long, num_args = 2, value_names = ["N", "P"], conflicts_with_all = ["n", "p", "lambda"])]
        sweep: Option<Vec<usize>>,
    },
    /// Closed forms for special shapes.
    Formula {
        #[command(subcommand)]
        which: Formula,
    },
    /// Compare computations over a grid of (n, p, λ).
    Verify {
        #[arg(long, num_args = 2, value_names = ["NMAX", "PMAX"], default_values_t = [10, 3])]
        grid: Vec<usize>,
        /// theorem, oracles or formulas.
        #[arg(long, default_value = "theorem")]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Formula {
    /// Coefficients in s_(n-p,p) * s_(n-s,1^s).
    Hook {
        n: usize,
        p: usize,
        s: usize,
        #[arg(long)]
        nu: Option<Partition>,
    },
    /// Two-row coefficients s_(n-t,t) in s_(n-p,p) * s_λ.
    Tworow {
        n: usize,
        p: usize,
        lambda: Partition,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Coefficients of s_(n-t,t) in s_(n-p,p) * s_(n-s,s) for t = s-p..s+p.
    Seq { n: usize, p: usize, s: usize },
    /// Coefficient of ν = (ν1,ν2,ν3,ν3) in s_(n-p,p) * s_(n-s,s).
    Nu334 {
        n: usize,
        p: usize,
        s: usize,
        nu: Partition,
    },
    /// s_(n-2,2) * s_(m^k).
    RectP2 { m: usize, k: usize },
    /// s_(n-1,1) * s_λ.
    P1 { lambda: Partition },
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<KronError> for Failure {
    fn from(e: KronError) -> Self {
        let code = match e {
            KronError::Parse { .. } | KronError::NotPartition(_) => 2,
            KronError::Domain(_) | KronError::SizeMismatch { .. } | KronError::NotContained { .. } => 3,
            KronError::Verification(_) => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<Record, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(f) = configure_threads() {
        eprintln!("error: {}", f.message);
        return ExitCode::from(f.code);
    }
    let json = cli.json;
    match run(cli.command) {
        Ok(record) => {
            if json {
                println!("{}", record.to_json());
            } else {
                print!("{}", record.to_text());
            }
            if record.mismatches.as_ref().is_some_and(|m| !m.is_empty()) {
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| Failure {
        code: 2,
        message: format!("{THREADS_VAR} must be a positive integer, got {raw:?}"),
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure {
            code: 2,
            message: e.to_string(),
        })
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Kron {
            n,
            p,
            lambda,
            nu,
            method,
        } => cmd_kron(n, p, &lambda, nu.as_ref(), method),
        Command::Skew { lambda, mu } => {
            let e = skew_expand(&lambda, &mu)?;
            Ok(Record {
                lambda: Some(parts(&lambda)),
                mu: Some(parts(&mu)),
                terms: Some(terms(&e)),
                ..Record::new("skew")
            })
        }
        Command::Lr { lambda, mu, nu } => Ok(Record {
            lambda: Some(parts(&lambda)),
            mu: Some(parts(&mu)),
            nu: Some(parts(&nu)),
            value: Some(lr_coefficient(&lambda, &mu, &nu).to_string()),
            ..Record::new("lr")
        }),
        Command::Positivity { lambda, alpha } => {
            let pos = positivity_diff(&lambda, &alpha)?;
            let witness = pos.expansion.negative_term().map(|(nu, c)| term(nu, c));
            Ok(Record {
                lambda: Some(parts(&lambda)),
                alpha: Some(parts(&alpha)),
                terms: Some(terms(&pos.expansion)),
                schur_positive: Some(pos.schur_positive),
                witness,
                ..Record::new("positivity")
            })
        }
        Command::Mfree { n, p, lambda, sweep } => cmd_mfree(n, p, lambda, sweep),
        Command::Formula { which } => cmd_formula(which),
        Command::Verify { grid, suite } => {
            let r = verify(suite, grid[0], grid[1]);
            Ok(Record {
                suite: Some(suite.to_string()),
                nmax: Some(r.nmax),
                pmax: Some(r.pmax),
                checked: Some(r.checked),
                mismatches: Some(r.mismatches.iter().map(|m| m.to_string()).collect()),
                ..Record::new("verify")
            })
        }
    }
}

fn cmd_kron(n: usize, p: usize, lambda: &Partition, nu: Option<&Partition>, method: MethodChoice) -> Outcome {
    let mut record = Record {
        n: Some(n),
        p: Some(p),
        lambda: Some(parts(lambda)),
        ..Record::new("kron")
    };
    match nu {
        Some(nu) => {
            let r = kron_coeff_with(n, p, lambda, nu, method)?;
            record.nu = Some(parts(nu));
            record.value = Some(r.value.to_string());
            record.upper_bound = r.upper_bound.map(|b| b.to_string());
            record.method = Some(r.method.to_string());
        }
        None => {
            let e = kron_expand_with(n, p, lambda, method)?;
            record.terms = Some(terms(&e.expansion));
            record.method = Some(e.method.to_string());
        }
    }
    Ok(record)
}

fn verdict(lambda: &Partition, v: MfreeVerdict) -> Verdict {
    Verdict {
        lambda: parts(lambda),
        multiplicity_free: v.multiplicity_free,
        source: v.source.to_string(),
        witness: v.witness.map(|(nu, c)| term(&nu, c)),
    }
}

fn cmd_mfree(n: Option<usize>, p: Option<usize>, lambda: Option<Partition>, sweep: Option<Vec<usize>>) -> Outcome {
    if let Some(np) = sweep {
        let (n, p) = (np[0], np[1]);
        let all: Vec<Partition> = partitions_of(n).collect();
        let verdicts = all
            .par_iter()
            .map(|l| is_multiplicity_free(n, p, l).map(|v| verdict(l, v)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Record {
            n: Some(n),
            p: Some(p),
            verdicts: Some(verdicts),
            ..Record::new("mfree")
        });
    }
    let (Some(n), Some(p), Some(lambda)) = (n, p, lambda) else {
        Cli::command()
            .error(
                clap::error::ErrorKind::MissingRequiredArgument,
                "mfree needs N P LAMBDA or --sweep N P",
            )
            .exit();
    };
    let v = is_multiplicity_free(n, p, &lambda)?;
    Ok(Record {
        n: Some(n),
        p: Some(p),
        verdicts: Some(vec![verdict(&lambda, v)]),
        ..Record::new("mfree")
    })
}

const FORMULA: &str = "formula";
const REROUTED: &str = "outside the closed form's domain; computed by kron";

/// Runs a closed form, falling back to `fallback` on a domain error.
fn formula_or<T>(
    formula: kron_core::Result<T>,
    fallback: impl FnOnce() -> kron_core::Result<(T, String)>,
) -> Result<(T, String, Option<String>), Failure> {
    match formula {
        Ok(v) => Ok((v, FORMULA.to_string(), None)),
        Err(KronError::Domain(_)) => {
            let (v, method) = fallback()?;
            Ok((v, method, Some(REROUTED.to_string())))
        }
        Err(e) => Err(e.into()),
    }
}

fn kron_value(n: usize, p: usize, lambda: &Partition, nu: &Partition) -> kron_core::Result<(u64, String)> {
    let r = kron_coeff(n, p, lambda, nu)?;
    Ok((r.value, r.method.to_string()))
}

fn cmd_formula(which: Formula) -> Outcome {
    match which {
        Formula::Hook { n, p, s, nu } => {
            let lambda = Partition::hook(n.saturating_sub(s), s);
            let mut record = Record {
                n: Some(n),
                p: Some(p),
                s: Some(s),
                lambda: Some(parts(&lambda)),
                ..Record::new("formula hook")
            };
            let targets: Vec<Partition> = match &nu {
                Some(nu) => vec![nu.clone()],
                None => partitions_of(n).collect(),
            };
            let mut found = Vec::new();
            let mut tags = (FORMULA.to_string(), None);
            for target in &targets {
                let (v, method, note) = formula_or(hook_coeff(n, p, s, target), || kron_value(n, p, &lambda, target))?;
                tags = (method, note);
                found.push((target, v));
            }
            match nu {
                Some(nu) => {
                    record.nu = Some(parts(&nu));
                    record.value = Some(found[0].1.to_string());
                }
                None => {
                    record.terms = Some(
                        found
                            .iter()
                            .filter(|(_, v)| *v > 0)
                            .map(|(nu, v)| term(nu, v))
                            .collect(),
                    )
                }
            }
            record.method = Some(tags.0);
            record.note = tags.1;
            Ok(record)
        }
        Formula::Tworow { n, p, lambda, t } => {
            let mut record = Record {
                n: Some(n),
                p: Some(p),
                lambda: Some(parts(&lambda)),
                ..Record::new("formula tworow")
            };
            let ts: Vec<usize> = match t {
                Some(t) => vec![t],
                None => (0..=n / 2).collect(),
            };
            let mut found = Vec::new();
            let mut tags = (FORMULA.to_string(), None);
            for &t in &ts {
                let nu = Partition::two_row(n, t)?;
                let (v, method, note) =
                    formula_or(tworow_target_coeff(n, p, &lambda, t), || kron_value(n, p, &lambda, &nu))?;
                tags = (method, note);
                found.push((nu, v));
            }
            match t {
                Some(t) => {
                    record.t = Some(t);
                    record.value = Some(found[0].1.to_string());
                }
                None => {
                    record.terms = Some(
                        found
                            .iter()
                            .filter(|(_, v)| *v > 0)
                            .map(|(nu, v)| term(nu, v))
                            .collect(),
                    )
                }
            }
            record.method = Some(tags.0);
            record.note = tags.1;
            Ok(record)
        }
        Formula::Seq { n, p, s } => {
            let mut record = Record {
                n: Some(n),
                p: Some(p),
                s: Some(s),
                ..Record::new("formula seq")
            };
            match tworow_tworow_sequence(n, p, s) {
                Ok(seq) => {
                    record.unimodal = Some(seq.unimodal);
                    record.sequence = Some(
                        seq.entries
                            .iter()
                            .map(|e| SeqEntry {
                                t: e.t,
                                value: e.value.to_string(),
                                source: e.source.as_str().to_string(),
                            })
                            .collect(),
                    );
                    record.method = Some(FORMULA.to_string());
                }
                Err(KronError::Domain(_)) => {
                    let lambda = Partition::two_row(n, s)?;
                    let e = kron_expand_tworow(n, p, &lambda)?;
                    let mut entries = Vec::new();
                    for t in s.saturating_sub(p)..=(s + p).min(n / 2) {
                        let nu = Partition::two_row(n, t)?;
                        entries.push(SeqEntry {
                            t,
                            value: e.expansion.coeff(&nu).to_string(),
                            source: "kron_coeff".to_string(),
                        });
                    }
                    let values: Vec<u64> = entries.iter().map(|e| e.value.parse().expect("decimal")).collect();
                    record.unimodal = Some(kron_core::formulas::is_unimodal(&values));
                    record.sequence = Some(entries);
                    record.method = Some(e.method.to_string());
                    record.note = Some(REROUTED.to_string());
                }
                Err(e) => return Err(e.into()),
            }
            Ok(record)
        }
        Formula::Nu334 { n, p, s, nu } => {
            let lambda = Partition::two_row(n, s)?;
            let (v, method, note) = formula_or(nu_double_pair_coeff(n, p, s, &nu), || kron_value(n, p, &lambda, &nu))?;
            Ok(Record {
                n: Some(n),
                p: Some(p),
                s: Some(s),
                lambda: Some(parts(&lambda)),
                nu: Some(parts(&nu)),
                value: Some(v.to_string()),
                method: Some(method),
                note,
                ..Record::new("formula nu334")
            })
        }
        Formula::RectP2 { m, k } => {
            let lambda = Partition::rectangle(m, k);
            let (e, method, note) = formula_or(rect_p2_expand(m, k), || {
                let e = kron_expand_tworow(m * k, 2, &lambda)?;
                Ok((e.expansion, e.method.to_string()))
            })?;
            Ok(Record {
                m: Some(m),
                k: Some(k),
                n: Some(m * k),
                p: Some(2),
                lambda: Some(parts(&lambda)),
                terms: Some(terms(&e)),
                method: Some(method),
                note,
                ..Record::new("formula rect-p2")
            })
        }
        Formula::P1 { lambda } => {
            let n = lambda.size();
            if n < 2 {
                return Err(KronError::Domain(format!("(n-1,1) needs n >= 2, got n={n}")).into());
            }
            Ok(Record {
                n: Some(n),
                p: Some(1),
                lambda: Some(parts(&lambda)),
                terms: Some(terms(&p1_expand(&lambda))),
                method: Some(FORMULA.to_string()),
                ..Record::new("formula p1")
            })
        }
    }
}
