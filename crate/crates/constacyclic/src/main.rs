//! Command-line front end: factor, construct, dual, check, verdict,
//! census, oracle, mu, crt. Every subcommand prints a text rendering by
//! default and the JSON schema under --json.
//!
//! Exit codes: 0 on success, 1 when check finds a mismatch, 2 on
//! precondition failures, 3 on malformed input, 4 when an internal
//! invariant breaks.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use constacyclic::census::{census, oracle_enumerate, parse_grid, CensusRow};
use constacyclic::code::{mu_code, Code};
use constacyclic::cyclotomic::{sufficient_condition, ExistenceVerdict, SufficientCondition};
use constacyclic::descriptor::{
    check_code_descriptor, check_product_descriptor, describe_code, describe_factorization,
    describe_product, parse_descriptor, parse_pir_elt, parse_ring_spec, AnyDescriptor,
};
use constacyclic::error::{Error, Result};
use constacyclic::factor::factor_xn_minus_lambda;
use constacyclic::pir::{
    chinese, construct_product_self_dual, product_verdict, rvr_generators, ProductCode,
};

#[derive(Parser)]
#[command(
    name = "constacyclic",
    about = "Constacyclic codes over finite chain rings and their products",
    version
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Emit text tables (the default; rejects --json).
    #[arg(long, global = true, conflicts_with = "json")]
    table: bool,
    /// Reserved for future sampling modes; every current algorithm is
    /// deterministic and ignores it.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Factor x^n - lambda into monic basic irreducibles.
    Factor {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Build and verify a nontrivial self-dual cyclic code.
    Construct {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        n: usize,
    },
    /// Dualize the code descriptor read from FILE (or stdin).
    Dual { file: Option<PathBuf> },
    /// Recompute a descriptor's derived fields and diff them.
    Check { file: Option<PathBuf> },
    /// Decide whether nontrivial self-dual cyclic codes exist.
    Verdict {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        n: usize,
    },
    /// One verdict row per (ring, n) cell of a grid.
    Census {
        /// Grid spec "ring1,ring2,...;lo..hi".
        #[arg(long)]
        grid: String,
        /// Materialize and verify a witness code on EXISTS rows.
        #[arg(long)]
        construct: bool,
    },
    /// Enumerate every code by brute force and reconcile with the theory.
    Oracle {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Twist the cyclic code in FILE by delta into a delta^n ambient.
    Mu {
        file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
    /// Glue the JSON array of component descriptors in FILE over a product ring.
    Crt {
        #[arg(long)]
        ring: String,
        file: Option<PathBuf>,
    },
}

fn read_input(file: &Option<PathBuf>) -> Result<String> {
    let mut buf = String::new();
    match file {
        Some(p) if p.as_os_str() != "-" => {
            buf = std::fs::read_to_string(p).map_err(|e| {
                Error::MalformedDescriptor(format!("cannot read {}: {e}", p.display()))
            })?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut buf).map_err(|e| {
                Error::MalformedDescriptor(format!("cannot read stdin: {e}"))
            })?;
        }
    }
    Ok(buf)
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    } else {
        println!("{}", text());
    }
}

#[derive(Serialize)]
struct VerdictOut {
    ring: String,
    n: u64,
    #[serde(flatten)]
    verdict: ExistenceVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    sufficient: Option<SufficientCondition>,
}

fn verdict_text(v: &VerdictOut) -> String {
    let mut s = format!(
        "{} n={}: {} (decided by {})",
        v.ring, v.n, v.verdict.status, v.verdict.decided_by
    );
    match v.verdict.witness {
        Some(constacyclic::cyclotomic::Witness::BlockingExponent(i)) => {
            s.push_str(&format!("\n  witness: q^{i} = -1 mod n"));
        }
        Some(constacyclic::cyclotomic::Witness::AsymmetricCoset(u)) => {
            s.push_str(&format!("\n  witness: coset of {u} is not reversible"));
        }
        None => {}
    }
    if let Some(c) = &v.sufficient {
        s.push_str(&format!(
            "\n  sufficient condition: {:?} ({})",
            c.rule,
            if c.implies_existence {
                "implies existence"
            } else {
                "implies blockage"
            }
        ));
    }
    s
}

fn code_text(code: &Code) -> String {
    let fz = code.factorization();
    let mut s = format!(
        "code over {}, n = {}, lambda = {}\n",
        code.ring().spec_string(),
        code.n(),
        code.ring().fmt_elt(code.lambda())
    );
    for (f, &t) in fz.factors().iter().zip(code.levels()) {
        s.push_str(&format!("  level {t} at factor {f}\n"));
    }
    for g in code.generator_polys() {
        s.push_str(&format!("  generator {g}\n"));
    }
    s.push_str(&format!("  cardinality {}", code.cardinality()));
    if let Some(k) = code.is_free() {
        s.push_str(&format!("\n  free of rank {k}"));
    }
    s
}

fn product_text(code: &ProductCode) -> String {
    let mut s = format!(
        "product code over {}, n = {}, cardinality {}\n",
        code.ring().spec_string(),
        code.n(),
        code.cardinality()
    );
    for (i, c) in code.components().iter().enumerate() {
        s.push_str(&format!("component {i}:\n"));
        for line in code_text(c).lines() {
            s.push_str(&format!("  {line}\n"));
        }
    }
    if code.ring().is_rvr() {
        if let Ok(gens) = rvr_generators(code) {
            s.push_str(&format!(
                "v-form generators: f1 = {}, f2 = {}, combined = {}\n",
                gens.f1,
                gens.f2,
                gens.combined.rvr_string(code.ring(), code.n())
            ));
        }
    }
    s.pop();
    s
}

fn census_table(rows: &[CensusRow]) -> String {
    let mut table = vec![vec![
        "ring".to_string(),
        "n".to_string(),
        "status".to_string(),
        "decided_by".to_string(),
        "ords".to_string(),
        "witness".to_string(),
    ]];
    for r in rows {
        let ords = r
            .ords
            .iter()
            .map(|o| o.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let witness = match r.witness {
            Some(constacyclic::cyclotomic::Witness::BlockingExponent(i)) => {
                format!("q^{i}=-1")
            }
            Some(constacyclic::cyclotomic::Witness::AsymmetricCoset(u)) => {
                format!("coset {u}")
            }
            None => "-".to_string(),
        };
        table.push(vec![
            r.ring.clone(),
            r.n.to_string(),
            r.status.to_string(),
            r.decided_by.to_string(),
            ords,
            witness,
        ]);
    }
    let widths: Vec<usize> = (0..table[0].len())
        .map(|c| table.iter().map(|row| row[c].len()).max().unwrap())
        .collect();
    let mut s = String::new();
    for (i, row) in table.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
        if i == 0 {
            continue;
        }
        if let Some(c) = &rows[i - 1].construct {
            s.push_str(&format!(
                "  witness code: cardinality {}, self_dual {}\n",
                c["cardinality"].as_str().unwrap_or("?"),
                c["self_dual"]
            ));
        }
    }
    s.pop();
    s
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Factor { ring, n, lambda } => {
            let pi = parse_ring_spec(&ring)?;
            let lam = parse_pir_elt(&pi, &lambda)?;
            let fzs = pi
                .components()
                .iter()
                .zip(lam.parts())
                .map(|(r, l)| factor_xn_minus_lambda(r, n, l))
                .collect::<Result<Vec<_>>>()?;
            let descs: Vec<_> = fzs.iter().map(describe_factorization).collect();
            if descs.len() == 1 {
                emit(cli.json, &descs[0], || format!("x^{n} - lambda = {}", fzs[0]));
            } else {
                emit(cli.json, &descs, || {
                    fzs.iter()
                        .map(|fz| format!("{}: {}", fz.ring().spec_string(), fz))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
            }
            Ok(0)
        }
        Cmd::Construct { ring, n } => {
            let pi = parse_ring_spec(&ring)?;
            let code = construct_product_self_dual(&pi, n)?;
            if pi.arity() == 1 {
                let d = describe_code(&code.components()[0])?;
                emit(cli.json, &d, || code_text(&code.components()[0]));
            } else {
                let d = describe_product(&code)?;
                emit(cli.json, &d, || product_text(&code));
            }
            Ok(0)
        }
        Cmd::Dual { file } => {
            let input = read_input(&file)?;
            match parse_descriptor(&input)? {
                AnyDescriptor::Single(d) => {
                    let code = constacyclic::descriptor::code_from_descriptor(&d)?;
                    let ring = code.ring().clone();
                    let lam = code.lambda().clone();
                    let dual = if ring.mul(&lam, &lam) == ring.one() {
                        code.dual()?
                    } else {
                        code.dual_general()?
                    };
                    let out = describe_code(&dual)?;
                    emit(cli.json, &out, || code_text(&dual));
                }
                AnyDescriptor::Product(d) => {
                    let code = constacyclic::descriptor::product_from_descriptor(&d)?;
                    let dual = code.dual()?;
                    let out = describe_product(&dual)?;
                    emit(cli.json, &out, || product_text(&dual));
                }
            }
            Ok(0)
        }
        Cmd::Check { file } => {
            let input = read_input(&file)?;
            let diffs = match parse_descriptor(&input)? {
                AnyDescriptor::Single(d) => check_code_descriptor(&d)?.1,
                AnyDescriptor::Product(d) => check_product_descriptor(&d)?.1,
            };
            if diffs.is_empty() {
                println!("ok");
                Ok(0)
            } else {
                for d in &diffs {
                    println!("mismatch: {d}");
                }
                Ok(1)
            }
        }
        Cmd::Verdict { ring, n } => {
            let pi = parse_ring_spec(&ring)?;
            let verdict = product_verdict(&pi, n)?;
            let sufficient = if pi.arity() == 1 {
                sufficient_condition(&pi.components()[0], n)?
            } else {
                None
            };
            let out = VerdictOut {
                ring: pi.spec_string(),
                n: n as u64,
                verdict,
                sufficient,
            };
            emit(cli.json, &out, || verdict_text(&out));
            Ok(0)
        }
        Cmd::Census { grid, construct } => {
            let spec = parse_grid(&grid)?;
            let rows = census(&spec, construct)?;
            emit(cli.json, &rows, || census_table(&rows));
            Ok(0)
        }
        Cmd::Oracle { ring, n, lambda } => {
            let pi = parse_ring_spec(&ring)?;
            let lam = parse_pir_elt(&pi, &lambda)?;
            let report = oracle_enumerate(&pi, n, &lam)?;
            emit(cli.json, &report, || {
                let maps = report
                    .self_dual_level_maps
                    .iter()
                    .map(|m| format!("{m:?}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                format!(
                    "{} n={} lambda={}: {} codes, {} self-dual{}",
                    report.ring,
                    report.n,
                    report.lambda,
                    report.codes_found,
                    report.self_dual_count,
                    if maps.is_empty() {
                        String::new()
                    } else {
                        format!("\n  self-dual level maps: {maps}")
                    }
                )
            });
            Ok(0)
        }
        Cmd::Mu { file, delta } => {
            let input = read_input(&file)?;
            match parse_descriptor(&input)? {
                AnyDescriptor::Single(d) => {
                    let code = constacyclic::descriptor::code_from_descriptor(&d)?;
                    let delta = constacyclic::descriptor::parse_elt(code.ring(), &delta)?;
                    let image = mu_code(&code, &delta)?;
                    let out = describe_code(&image)?;
                    emit(cli.json, &out, || code_text(&image));
                }
                AnyDescriptor::Product(d) => {
                    let code = constacyclic::descriptor::product_from_descriptor(&d)?;
                    let delta = parse_pir_elt(code.ring(), &delta)?;
                    let image = code.mu(&delta)?;
                    let out = describe_product(&image)?;
                    emit(cli.json, &out, || product_text(&image));
                }
            }
            Ok(0)
        }
        Cmd::Crt { ring, file } => {
            let pi = parse_ring_spec(&ring)?;
            let input = read_input(&file)?;
            let parts: Vec<serde_json::Value> = serde_json::from_str(&input)
                .map_err(|e| Error::MalformedDescriptor(format!("expected a JSON array: {e}")))?;
            let components = parts
                .iter()
                .map(|v| {
                    let d = serde_json::from_value(v.clone()).map_err(|e| {
                        Error::MalformedDescriptor(format!("bad component descriptor: {e}"))
                    })?;
                    constacyclic::descriptor::code_from_descriptor(&d)
                })
                .collect::<Result<Vec<_>>>()?;
            let code = chinese(&pi, components)?;
            let out = describe_product(&code)?;
            emit(cli.json, &out, || product_text(&code));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // Restore default SIGPIPE disposition so a closed pipe ends the
    // process quietly instead of surfacing as a stdout panic.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(move || run(cli));
    match outcome {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => {
            eprintln!("error: internal invariant breach");
            ExitCode::from(4)
        }
    }
}
