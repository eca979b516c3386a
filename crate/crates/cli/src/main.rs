//! `rtab`: command-line access to the Richardson tableaux library.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use rtab::enumeration::{
    count_richardson, involutions, motzkin, motzkin_refinement_check_with_limit, q_count_richardson,
    richardson_proportion, DEFAULT_REFINEMENT_LIMIT,
};
use rtab::evacuation::evacuation;
use rtab::guemes::{hook_expansion, hook_first_row};
use rtab::richardson::{
    is_richardson_crop, is_richardson_def, is_richardson_slides, is_richardson_strong, is_richardson_word,
    prime_decomposition, psi, psi_inverse,
};
use rtab::selftest::{SuiteReport, DEFAULT_MAX_N, SUITES};
use rtab::springer::{
    deodhar_set, enumerate_cells_with_limit, is_richardson_bruhat, is_richardson_gap, k_component_tableau,
    lehmer_w_direct, richardson_envelope, richardson_smooth, top_cells_with_limit, CellIndex, DEFAULT_CELL_LIMIT,
};
use rtab::tableau::format_rows;
use rtab::{evacuate, format_word, parse_word, Error, Partition, Permutation, StandardTableau};

const SCHEMA: &str = "1";

#[derive(Parser)]
#[command(name = "rtab", version, about = "Richardson tableaux toolkit")]
struct Cli {
    /// Emit JSON on standard output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every Richardson characterization on a lattice word.
    Check { word: String },
    /// Evacuate a tableau.
    Evacuate {
        word: String,
        /// Also print the slide paths.
        #[arg(long)]
        paths: bool,
    },
    /// Prime decomposition of a lattice word.
    Decompose { word: String },
    /// Delete the last ℓ and ℓ−1 letters of a Richardson word.
    Psi { word: String },
    /// Inverse of psi for a target largest letter.
    PsiInv { word: String, ell: usize },
    /// Number of Richardson tableaux of a shape.
    Count {
        partition: String,
        /// Print the q-count instead.
        #[arg(long)]
        q: bool,
    },
    /// The Motzkin number M_n.
    Motzkin { n: usize },
    /// Per-shape counts of size n summing to M_n.
    Refine { n: usize },
    /// M_n / T_n as an exact fraction.
    Proportion { n: usize },
    /// Reading permutations and length gap.
    Envelope { word: String },
    /// Totally nonnegative cells Z_λ.
    Cells {
        partition: String,
        /// Only cells of dimension n(λ).
        #[arg(long)]
        top: bool,
    },
    /// Deodhar smoothness certificate for the Richardson variety of v ≤ w.
    Smooth { v: String, w: String },
    /// Schubert expansion of a hook-shaped component.
    Guemes { word: String },
    /// The tableau σ(I) of a subset I ⊆ [n].
    Kcomp { n: usize, subset: String },
    /// Run the oracle cross-check suites.
    Selftest {
        #[arg(long)]
        max_n: Option<usize>,
    },
}

enum Failure {
    Domain(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

/// Human text and JSON body of a successful command.
struct Output {
    text: String,
    json: Value,
    /// Set when the command ran but found a disagreement.
    inconsistent: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, inconsistent: false }
    }
}

fn env_bound() -> Option<usize> {
    std::env::var("RT_MAX_N").ok().and_then(|s| s.trim().parse().ok())
}

fn tableau(word: &str) -> Result<StandardTableau, Error> {
    StandardTableau::from_word(parse_word(word)?)
}

fn rows_json(t: &StandardTableau) -> Value {
    json!(t.rows())
}

fn big(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    let inner: Vec<String> = pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
    format!("{{{}}}", inner.join(", "))
}

fn cell_json(c: &CellIndex) -> Value {
    json!({ "v": c.v.to_string(), "w": c.w.to_string(), "dim": c.dim })
}

fn check(word: &str) -> Result<Output, Failure> {
    let sigma = tableau(word)?;
    let verdicts = [
        ("definition", is_richardson_def(&sigma)),
        ("strong", is_richardson_strong(&sigma)),
        ("word", is_richardson_word(sigma.word())),
        ("crop", is_richardson_crop(&sigma)),
        ("l-slides", is_richardson_slides(&sigma)),
        ("evacuation", is_richardson_def(&evacuation(&sigma))),
        ("length-gap", is_richardson_gap(&sigma)),
        ("bruhat", is_richardson_bruhat(&sigma)),
    ];
    let agree = verdicts.iter().all(|(_, b)| *b == verdicts[0].1);
    let verdict = match (agree, verdicts[0].1) {
        (false, _) => "DISAGREEMENT",
        (true, true) => "RICHARDSON",
        (true, false) => "NOT RICHARDSON",
    };
    let mut text = String::new();
    for (name, b) in &verdicts {
        text.push_str(&format!("{name:<12}{b}\n"));
    }
    text.push_str(&format!("verdict     {verdict}"));
    let table: serde_json::Map<String, Value> = verdicts.iter().map(|(n, b)| (n.to_string(), json!(b))).collect();
    Ok(Output {
        text,
        json: json!({ "word": format_word(sigma.word()), "characterizations": table, "verdict": verdict }),
        inconsistent: !agree,
    })
}

fn evacuate_cmd(word: &str, paths: bool) -> Result<Output, Failure> {
    let sigma = tableau(word)?;
    let trace = evacuate(&sigma);
    let dual = &trace.result;
    let mut text = format!("word  {}\nrows  {}", format_word(dual.word()), format_rows(&dual.rows()));
    let mut body = json!({ "word": format_word(dual.word()), "rows": rows_json(dual) });
    if paths {
        let mut list = Vec::new();
        for (k, p) in trace.paths.iter().enumerate() {
            let cells: Vec<String> = p.cells().iter().map(|(r, c)| format!("({r},{c})")).collect();
            let flag = if p.is_l_slide() { "L" } else { "-" };
            text.push_str(&format!("\nslide {:<3}{flag} {}", k + 1, cells.join(" ")));
            list.push(json!({ "cells": p.cells(), "l_slide": p.is_l_slide() }));
        }
        body["paths"] = Value::Array(list);
    }
    Ok(Output::ok(text, body))
}

fn decompose(word: &str) -> Result<Output, Failure> {
    let word = parse_word(word)?;
    let factors = prime_decomposition(&word)?;
    let shown: Vec<String> = factors.iter().map(|f| format_word(f)).collect();
    Ok(Output::ok(shown.join(" | "), json!({ "factors": shown })))
}

fn psi_cmd(word: &str) -> Result<Output, Failure> {
    let r = psi(&parse_word(word)?)?;
    let shown = format_word(&r);
    Ok(Output::ok(shown.clone(), json!({ "word": shown })))
}

fn psi_inv_cmd(word: &str, ell: usize) -> Result<Output, Failure> {
    let r = psi_inverse(&parse_word(word)?, ell)?;
    let shown = format_word(&r);
    Ok(Output::ok(shown.clone(), json!({ "word": shown })))
}

fn count(partition: &str, q: bool) -> Result<Output, Failure> {
    let lambda: Partition = partition.parse()?;
    if q {
        let poly = q_count_richardson(&lambda);
        let coeffs: Vec<String> = (0..=poly.degree().unwrap_or(0)).map(|k| poly.coeff(k).to_string()).collect();
        Ok(Output::ok(poly.to_string(), json!({ "partition": lambda.to_string(), "q_count": poly.to_string(), "coefficients": coeffs })))
    } else {
        let c = count_richardson(&lambda);
        Ok(Output::ok(c.to_string(), json!({ "partition": lambda.to_string(), "count": big(&c) })))
    }
}

fn refine(n: usize) -> Result<Output, Failure> {
    let limit = env_bound().unwrap_or(DEFAULT_REFINEMENT_LIMIT);
    let (rows, total) = motzkin_refinement_check_with_limit(n, limit)?;
    let mut text = String::new();
    let mut list = Vec::new();
    for (lambda, c) in &rows {
        text.push_str(&format!("{lambda}\t{c}\n"));
        list.push(json!({ "partition": lambda.to_string(), "count": big(c) }));
    }
    text.push_str(&format!("total\t{total}"));
    Ok(Output::ok(text, json!({ "n": n, "shapes": list, "total": big(&total) })))
}

fn proportion(n: usize) -> Result<Output, Failure> {
    let r = richardson_proportion(n);
    let (m, t) = (motzkin(n), involutions(n));
    Ok(Output::ok(
        format!("{}/{}  (M_{n} = {m}, T_{n} = {t})", r.numer(), r.denom()),
        json!({ "n": n, "numerator": r.numer().to_string(), "denominator": r.denom().to_string(), "motzkin": big(&m), "involutions": big(&t) }),
    ))
}

fn envelope(word: &str) -> Result<Output, Failure> {
    let sigma = tableau(word)?;
    let cell = richardson_envelope(&sigma)?;
    let gap = cell.dim;
    let nl = sigma.shape().n_lambda();
    let code = lehmer_w_direct(&sigma);
    if code != cell.w.lehmer_code() {
        return Err(Failure::Internal(format!("tableau Lehmer code {code:?} differs from that of w = {}", cell.w)));
    }
    let code_text: Vec<String> = code.iter().map(|x| x.to_string()).collect();
    let text = format!(
        "v       {}\nw       {}\nlehmer  ({})\ngap     {gap}\nn(λ)    {nl}\nrichardson {}",
        cell.v,
        cell.w,
        code_text.join(","),
        gap == nl
    );
    Ok(Output::ok(
        text,
        json!({ "v": cell.v.to_string(), "w": cell.w.to_string(), "lehmer_w": code, "gap": gap, "n_lambda": nl, "richardson": gap == nl }),
    ))
}

fn cells(partition: &str, top: bool) -> Result<Output, Failure> {
    let lambda: Partition = partition.parse()?;
    let limit = env_bound().unwrap_or(DEFAULT_CELL_LIMIT);
    let list = if top {
        top_cells_with_limit(&lambda, limit)?
    } else {
        enumerate_cells_with_limit(&lambda, limit)?
    };
    let text: Vec<String> = list.iter().map(|c| format!("{} {} {}", c.v, c.w, c.dim)).collect();
    Ok(Output::ok(
        text.join("\n"),
        json!({ "partition": lambda.to_string(), "cells": list.iter().map(cell_json).collect::<Vec<_>>() }),
    ))
}

fn smooth(v: &str, w: &str) -> Result<Output, Failure> {
    let v: Permutation = v.parse()?;
    let w: Permutation = w.parse()?;
    let lower = deodhar_set(&v, &w)?;
    let w0 = Permutation::longest(v.n());
    let (v2, w2) = (w.compose(&w0), v.compose(&w0));
    let upper = deodhar_set(&v2, &w2)?;
    let gap = w.length() - v.length();
    let verdict = richardson_smooth(&v, &w)?;
    let direct = lower.len() == gap && upper.len() == gap;
    if verdict != direct {
        return Err(Failure::Internal("certificate and smoothness predicate disagree".into()));
    }
    let text = format!(
        "gap       {gap}\nset(v,w)  {} [{}]\nset(ww0,vw0) {} [{}]\nsmooth    {verdict}",
        pairs_text(&lower),
        lower.len(),
        pairs_text(&upper),
        upper.len()
    );
    Ok(Output::ok(
        text,
        json!({ "v": v.to_string(), "w": w.to_string(), "gap": gap, "lower": lower, "upper": upper, "smooth": verdict }),
    ))
}

fn guemes(word: &str) -> Result<Output, Failure> {
    let sigma = tableau(word)?;
    let first = hook_first_row(&sigma)?;
    let terms: Vec<String> = hook_expansion(&sigma)?.iter().map(|w| w.to_string()).collect();
    let mut text = format!("first row  {}", format_word(&first));
    for t in &terms {
        text.push_str(&format!("\n{t}"));
    }
    Ok(Output::ok(text, json!({ "first_row": first, "terms": terms })))
}

fn kcomp(n: usize, subset: &str) -> Result<Output, Failure> {
    let subset: Vec<usize> = parse_word(subset.trim().trim_start_matches('{').trim_end_matches('}'))?;
    let sigma = k_component_tableau(&subset, n)?;
    Ok(Output::ok(
        format!("word  {}\nrows  {}", format_word(sigma.word()), format_rows(&sigma.rows())),
        json!({ "n": n, "subset": subset, "word": format_word(sigma.word()), "rows": rows_json(&sigma) }),
    ))
}

fn selftest(max_n: Option<usize>) -> Result<Output, Failure> {
    let max_n = max_n.or_else(env_bound).unwrap_or(DEFAULT_MAX_N);
    let reports: Vec<SuiteReport> = std::thread::scope(|s| {
        let handles: Vec<_> = SUITES.iter().map(|(_, suite)| s.spawn(move || suite(max_n))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut text = String::new();
    let mut list = Vec::new();
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        text.push_str(&format!("{status} {:<18}{} checks, {} failures\n", r.name, r.checks, r.failures.len()));
        for f in &r.failures {
            text.push_str(&format!("     {f}\n"));
        }
        list.push(json!({ "suite": r.name, "checks": r.checks, "failures": r.failures, "passed": r.passed() }));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    text.push_str(&format!("{} suites, {failed} failed", reports.len()));
    Ok(Output { text, json: json!({ "max_n": max_n, "suites": list }), inconsistent: failed > 0 })
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Check { word } => check(&word),
        Command::Evacuate { word, paths } => evacuate_cmd(&word, paths),
        Command::Decompose { word } => decompose(&word),
        Command::Psi { word } => psi_cmd(&word),
        Command::PsiInv { word, ell } => psi_inv_cmd(&word, ell),
        Command::Count { partition, q } => count(&partition, q),
        Command::Motzkin { n } => {
            let m = motzkin(n);
            Ok(Output::ok(m.to_string(), json!({ "n": n, "motzkin": big(&m) })))
        }
        Command::Refine { n } => refine(n),
        Command::Proportion { n } => proportion(n),
        Command::Envelope { word } => envelope(&word),
        Command::Cells { partition, top } => cells(&partition, top),
        Command::Smooth { v, w } => smooth(&v, &w),
        Command::Guemes { word } => guemes(&word),
        Command::Kcomp { n, subset } => kcomp(n, &subset),
        Command::Selftest { max_n } => selftest(max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                let mut body = json!({ "schema": SCHEMA, "ok": !out.inconsistent });
                if let (Value::Object(dst), Value::Object(src)) = (&mut body, out.json) {
                    dst.extend(src);
                }
                println!("{body}");
            } else {
                println!("{}", out.text);
            }
            if out.inconsistent {
                eprintln!("error: Inconsistent");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Domain(e)) => {
            if cli.json {
                println!("{}", json!({ "schema": SCHEMA, "ok": false, "error": e.name(), "message": e.to_string() }));
            }
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            if cli.json {
                println!("{}", json!({ "schema": SCHEMA, "ok": false, "error": "Inconsistent", "message": msg }));
            }
            eprintln!("error: Inconsistent: {msg}");
            ExitCode::from(3)
        }
    }
}
