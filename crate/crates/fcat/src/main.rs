//! clap front-end. JSON goes to stdout only; progress and errors go to
//! stderr. Exit codes: 0 success / no solution, 1 usage error, 2 internal
//! invariant violation, 3 exact solution at p > 3.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_traits::One;

use fcat::config::{self, Config};
use fcat::report::{
    outcome_name, BarlowReport, CheckReport, FamilyReport, FueterEntry, FueterReport,
    JacobiBetaReport, JacobiSumReport, JkReport, SplittingReport, TupleRecord, VerifyReport,
    SCHEMA_VERSION,
};
use fcat::{
    exit_code_for_error, exit_code_for_outcome, family, search, suites, EXIT_INVARIANT, EXIT_OK,
    EXIT_SOLUTION, EXIT_USAGE,
};
use fcat_core::equation::{candidate_pipeline, lambda_power, Candidate, Outcome, Verdict};
use fcat_core::jacobi::{beta_of, degree_one_prime, iwasawa_check, jacobi_sum};
use fcat_core::stickelberger::{find_jk, fueter, in_stickelberger};
use fcat_core::{CharacterTable, Error, FueterBasis, GroupRingElement};

#[derive(Parser)]
#[command(
    name = "fcat",
    version,
    about = "Exact-arithmetic search and verification for (x^p + y^p)/(x + y) = p^e z^q"
)]
struct Cli {
    /// Emit the JSON report on stdout instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the search
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,
    /// Seed for the randomized parts of the verification suites
    #[arg(long, global = true, value_name = "S")]
    seed: Option<u64>,
    /// key=value file with defaults for bound, height, workers, seed
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Fueter elements psi_n of a prime
    Fueter {
        #[arg(long)]
        p: u64,
        /// Single index; all of 1..=(p-1)/2 when omitted
        #[arg(long)]
        n: Option<u64>,
    },
    /// Construct the J_k element of a prime
    Jk {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
    /// Jacobi sums (--a/--b) or Jacobi numbers (--theta) at a split prime r
    Jacobi {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        /// psi<N>, jk<K>, or norm
        #[arg(long)]
        theta: Option<String>,
    },
    /// Run the rejection pipeline on a single candidate pair
    Check {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long, allow_hyphen_values = true)]
        y: i64,
        /// Positive-control mode: admit p = 3
        #[arg(long)]
        allow_p3: bool,
    },
    /// Exhaustive coprime-pair search for x > |y| >= 1 up to a bound
    Search {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        bound: Option<u64>,
        /// Positive-control mode: admit p = 3
        #[arg(long)]
        allow_p3: bool,
    },
    /// Generate verified p = 3 family tuples from Eisenstein seeds
    Eisenstein {
        #[arg(long)]
        q: u64,
        /// Seed grid limit: 1 <= b < a <= height
        #[arg(long)]
        height: Option<u64>,
    },
    /// Run a named invariant suite: fueter, jk, jacobi, psipol, euler, all
    Verify { suite: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(run(cli))
}

fn usage(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn core_error(e: &Error) -> u8 {
    eprintln!("error: {e}");
    exit_code_for_error(e)
}

fn emit<T: serde::Serialize>(json: bool, report: &T, text: String) {
    if json {
        println!(
            "{}",
            serde_json::to_string(report).expect("reports always serialize")
        );
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> u8 {
    let cfg = match &cli.config {
        Some(path) => match config::load(path) {
            Ok(cfg) => cfg,
            Err(msg) => return usage(&msg),
        },
        None => Config::default(),
    };
    let workers = cli
        .workers
        .or(cfg.workers)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get().min(8))
                .unwrap_or(1)
        })
        .max(1);
    let seed = cli.seed.or(cfg.seed).unwrap_or(0);
    let started = Instant::now();
    match cli.command {
        Command::Fueter { p, n } => cmd_fueter(cli.json, p, n, started),
        Command::Jk { p, k } => cmd_jk(cli.json, p, k, started),
        Command::Jacobi { p, r, a, b, theta } => cmd_jacobi(cli.json, p, r, a, b, theta, started),
        Command::Check {
            p,
            q,
            x,
            y,
            allow_p3,
        } => cmd_check(cli.json, p, q, x, y, allow_p3, started),
        Command::Search {
            p,
            q,
            bound,
            allow_p3,
        } => {
            let bound = bound.or(cfg.bound).unwrap_or(100);
            if bound < 2 {
                return usage("--bound must be at least 2");
            }
            cmd_search(cli.json, p, q, bound, workers, allow_p3, started)
        }
        Command::Eisenstein { q, height } => {
            let height = height.or(cfg.height).unwrap_or(10);
            if height < 2 {
                return usage("--height must be at least 2");
            }
            cmd_eisenstein(cli.json, q, height, started)
        }
        Command::Verify { suite } => cmd_verify(cli.json, &suite, seed, started),
    }
}

fn elapsed_ms(started: Instant) -> u64 {
    u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX)
}

fn cmd_fueter(json: bool, p: u64, n: Option<u64>, started: Instant) -> u8 {
    let basis = match FueterBasis::new(p) {
        Ok(b) => b,
        Err(e) => return core_error(&e),
    };
    let indices: Vec<u64> = match n {
        Some(n) if n >= 1 && n <= (p - 1) / 2 => vec![n],
        Some(n) => return usage(&format!("--n {n} outside 1..=(p-1)/2")),
        None => (1..=(p - 1) / 2).collect(),
    };
    let mut elements = Vec::new();
    for idx in indices {
        let psi = basis.element(idx);
        let member = match in_stickelberger(psi) {
            Ok(m) => m,
            Err(e) => return core_error(&e),
        };
        let norm = GroupRingElement::norm_element(p).expect("validated prime");
        let norm_pair = psi.add(&psi.conjugate()).expect("same prime") == norm;
        elements.push(FueterEntry {
            n: idx,
            coeffs: psi.coeffs().to_vec(),
            phi: psi.phi(),
            relative_weight: psi.weights().1,
            norm_pair,
            in_stickelberger: member,
        });
    }
    let report = FueterReport {
        schema: SCHEMA_VERSION,
        kind: "fueter",
        p,
        elements,
        elapsed_ms: elapsed_ms(started),
    };
    let text = report
        .elements
        .iter()
        .map(|e| {
            format!(
                "psi_{} coeffs={:?} phi={} weight={:?} norm_pair={} in_ideal={}",
                e.n, e.coeffs, e.phi, e.relative_weight, e.norm_pair, e.in_stickelberger
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    emit(json, &report, text);
    EXIT_OK
}

fn cmd_jk(json: bool, p: u64, k: u64, started: Instant) -> u8 {
    let jk = match find_jk(p, k) {
        Ok(jk) => jk,
        Err(e) => return core_error(&e),
    };
    let (sign, exp) = match lambda_power(&jk.theta) {
        Ok(v) => v,
        Err(e) => return core_error(&e),
    };
    let report = JkReport {
        schema: SCHEMA_VERSION,
        kind: "jk",
        p,
        k,
        coeffs: jk.theta.coeffs().to_vec(),
        phi: jk.theta.phi(),
        relative_weight: jk.theta.weights().1,
        terms: jk.terms.iter().map(|t| (t.c, t.n)).collect(),
        lambda_sign: sign,
        lambda_exponent: exp,
        elapsed_ms: elapsed_ms(started),
    };
    let text = format!(
        "J_{k} at p={p}: coeffs={:?} phi={} weight={:?} lambda^t={}p^{}",
        report.coeffs,
        report.phi,
        report.relative_weight,
        if sign < 0 { "-" } else { "+" },
        exp
    );
    emit(json, &report, text);
    EXIT_OK
}

fn parse_theta(p: u64, spec: &str) -> Result<(String, GroupRingElement), String> {
    if spec == "norm" {
        let t = GroupRingElement::norm_element(p).map_err(|e| e.to_string())?;
        return Ok(("norm".to_string(), t));
    }
    if let Some(num) = spec.strip_prefix("psi") {
        let n: u64 = num.parse().map_err(|_| format!("bad theta `{spec}`"))?;
        let t = fueter(p, n).map_err(|e| e.to_string())?;
        return Ok((format!("psi{n}"), t));
    }
    if let Some(num) = spec.strip_prefix("jk") {
        let k: u64 = num.parse().map_err(|_| format!("bad theta `{spec}`"))?;
        let t = find_jk(p, k).map_err(|e| e.to_string())?.theta;
        return Ok((format!("jk{k}"), t));
    }
    Err(format!("bad theta `{spec}`: expected psi<N>, jk<K>, or norm"))
}

fn cmd_jacobi(
    json: bool,
    p: u64,
    r: u64,
    a: Option<u64>,
    b: Option<u64>,
    theta: Option<String>,
    started: Instant,
) -> u8 {
    match (a, b, theta) {
        (Some(a), Some(b), None) => {
            let table = match CharacterTable::new(p, r) {
                Ok(t) => t,
                Err(e) => return core_error(&e),
            };
            let j = match jacobi_sum(&table, a, b) {
                Ok(j) => j,
                Err(e) => return core_error(&e),
            };
            let prod = j.mul(&j.conj()).expect("same conductor");
            let iwasawa = iwasawa_check(&j).expect("prime conductor");
            let report = JacobiSumReport {
                schema: SCHEMA_VERSION,
                kind: "jacobi-sum",
                p,
                r,
                a,
                b,
                coeffs: j.coeffs().iter().map(|c| c.to_string()).collect(),
                conj_product: prod
                    .as_integer()
                    .map(|n| n.to_string())
                    .unwrap_or_else(|| "non-rational".to_string()),
                iwasawa,
                elapsed_ms: elapsed_ms(started),
            };
            let text = format!(
                "J(chi^{a}, chi^{b}) over p={p}, r={r}: coeffs={:?} J*conj(J)={} iwasawa={}",
                report.coeffs, report.conj_product, report.iwasawa
            );
            emit(json, &report, text);
            EXIT_OK
        }
        (None, None, Some(spec)) => {
            let (name, t) = match parse_theta(p, &spec) {
                Ok(v) => v,
                Err(msg) => return usage(&msg),
            };
            let rprime = match degree_one_prime(p, r) {
                Ok(rp) => rp,
                Err(e) => return core_error(&e),
            };
            let beta = match beta_of(&rprime, &t) {
                Ok(b) => b,
                Err(e) => return core_error(&e),
            };
            let report = JacobiBetaReport {
                schema: SCHEMA_VERSION,
                kind: "jacobi-beta",
                p,
                r,
                theta: name,
                theta_coeffs: t.coeffs().to_vec(),
                varsigma: beta.varsigma,
                value_coeffs: beta.value.coeffs().iter().map(|c| c.to_string()).collect(),
                elapsed_ms: elapsed_ms(started),
            };
            let text = format!(
                "beta({}) over p={p}, r={r}: coeffs={:?} varsigma={}",
                report.theta, report.value_coeffs, report.varsigma
            );
            emit(json, &report, text);
            EXIT_OK
        }
        _ => usage("pass either --a and --b, or --theta"),
    }
}

fn cmd_check(json: bool, p: u64, q: u64, x: i64, y: i64, allow_p3: bool, started: Instant) -> u8 {
    let (verdict, nx, ny): (Verdict, i64, i64) = if x as i128 + y as i128 == 0 {
        (
            Verdict {
                outcome: Outcome::NotIntegral,
                n: None,
                e: 0,
                z: None,
                barlow: None,
                splitting: None,
            },
            x,
            y,
        )
    } else {
        let cand = match Candidate::new(x, y, p, q, allow_p3) {
            Ok(c) => c,
            Err(e) => return core_error(&e),
        };
        match candidate_pipeline(&cand) {
            Ok(v) => (v, cand.x(), cand.y()),
            Err(e) => return core_error(&e),
        }
    };
    let report = CheckReport {
        schema: SCHEMA_VERSION,
        kind: "check",
        p,
        q,
        x: nx,
        y: ny,
        outcome: outcome_name(verdict.outcome),
        n: verdict.n.as_ref().map(|n| n.to_string()),
        e: verdict.e,
        z: verdict.z.as_ref().map(|z| z.to_string()),
        barlow: verdict.barlow.as_ref().map(|b| BarlowReport {
            p_divides_sum: b.p_divides_sum,
            u: b.u.as_ref().map(|u| u.to_string()),
            v: b.v.as_ref().map(|v| v.to_string()),
            passes: b.passes(),
        }),
        splitting: verdict.splitting.as_ref().map(|s| SplittingReport {
            k_prime: s.k_prime.to_string(),
            factors: s.factors.clone(),
            offending: s.offending,
        }),
        elapsed_ms: elapsed_ms(started),
    };
    let text = report.to_text();
    emit(json, &report, text);
    exit_code_for_outcome(verdict.outcome, p)
}

fn cmd_search(
    json: bool,
    p: u64,
    q: u64,
    bound: u64,
    workers: usize,
    allow_p3: bool,
    started: Instant,
) -> u8 {
    let params = search::SearchParams {
        p,
        q,
        bound,
        workers,
        control: allow_p3,
    };
    let summary = match search::run(&params) {
        Ok(s) => s,
        Err(e) => return core_error(&e),
    };
    let report = search::to_report(&params, &summary, elapsed_ms(started));
    let text = report.to_text();
    emit(json, &report, text);
    if !summary.solutions.is_empty() && p > 3 {
        EXIT_SOLUTION
    } else {
        EXIT_OK
    }
}

fn cmd_eisenstein(json: bool, q: u64, height: u64, started: Instant) -> u8 {
    let tuples = match family::enumerate(q, height) {
        Ok(t) => t,
        Err(e) => return core_error(&e),
    };
    let records: Vec<TupleRecord> = tuples
        .iter()
        .map(|t| TupleRecord {
            seed_a: t.seed.0,
            seed_b: t.seed.1,
            x: t.tuple.x.to_string(),
            y: t.tuple.y.to_string(),
            z: t.tuple.z.to_string(),
            coprime: t.tuple.gcd_xy.is_one(),
        })
        .collect();
    let report = FamilyReport {
        schema: SCHEMA_VERSION,
        kind: "eisenstein",
        q,
        height,
        count: records.len() as u64,
        tuples: records,
        elapsed_ms: elapsed_ms(started),
    };
    let text = report.to_text();
    emit(json, &report, text);
    EXIT_OK
}

fn cmd_verify(json: bool, suite: &str, seed: u64, started: Instant) -> u8 {
    let Some(checks) = suites::run_suite(suite, seed) else {
        return usage(&format!(
            "unknown suite `{suite}` (expected one of {})",
            suites::SUITE_NAMES.join(", ")
        ));
    };
    let passed = checks.iter().all(|c| c.pass);
    let report = VerifyReport {
        schema: SCHEMA_VERSION,
        kind: "verify",
        suite: suite.to_string(),
        checks,
        passed,
        elapsed_ms: elapsed_ms(started),
    };
    let text = report.to_text();
    emit(json, &report, text);
    if passed {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    }
}
