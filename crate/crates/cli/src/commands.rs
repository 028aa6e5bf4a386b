use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use cherednik::character::{graded_char_invariants, graded_dim_l};
use cherednik::classify::{is_diagonalizable, is_unitary, locus_2d, DiagCertificate};
use cherednik::gamma::{enumerate_gamma_c, weight_of};
use cherednik::oracle::{build_truncation, verify_relations};
use cherednik::params::{parse_rational_list, Parameter};
use cherednik::rational::{parse_rational, rat, Rational};
use cherednik::shapes::{parse_multipartition, MultiPartition};
use cherednik::Error;

use crate::render::{self, ORACLE_SCHEMA};
use crate::{certificate, CaseArgs, Cli, Command};

/// A terminal error with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidParameter(_) => 2,
            Error::Precondition(_) => 4,
            Error::Internal(_) | Error::Oracle(_) => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Text produced by a command and the status it asks for.
pub struct Report {
    pub text: String,
    pub status: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, status: 0 }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn case(args: &CaseArgs) -> Result<(String, MultiPartition, Parameter), Failure> {
    let text = args.shape.clone().ok_or_else(|| usage("--shape is required"))?;
    let c0 = args.c0.as_deref().ok_or_else(|| usage("--c0 is required"))?;
    let shape = parse_multipartition(&text, args.r)?;
    let c0 = parse_rational(c0)?;
    let d = match args.d.as_deref() {
        Some(t) if !t.trim().is_empty() => parse_rational_list(t)?,
        _ if args.r == 1 => Vec::new(),
        _ => return Err(usage(format!("--d is required for r = {}", args.r))),
    };
    let c = Parameter::from_list(args.r, c0, d)?;
    Ok((text, shape, c))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure { code: 3, message: format!("{}: {e}", p.display()) }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn out_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Classify { out, .. }
        | Command::Character { out, .. }
        | Command::Gamma { out, .. }
        | Command::Oracle { out, .. }
        | Command::Locus { out, .. }
        | Command::Batch { out, .. } => out.as_ref(),
    }
}

/// Runs a command and writes its output.
pub fn run(cmd: &Command) -> Result<u8, Failure> {
    let report = execute(cmd)?;
    write_out(out_path(cmd).map(PathBuf::as_path), &report.text)?;
    Ok(report.status)
}

/// Runs a command and returns its output without writing it.
pub fn execute(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Classify { case: args, check_certificate, .. } => match check_certificate {
            Some(path) => check_file(path),
            None => classify(args),
        },
        Command::Character { case: args, max_degree, invariants, .. } => character(args, *max_degree, *invariants),
        Command::Gamma { case: args, max_degree, .. } => gamma(args, *max_degree),
        Command::Oracle { case: args, max_degree, samples, seed, .. } => oracle(args, *max_degree, *samples, *seed),
        Command::Locus { shape, grid, .. } => locus(shape, grid),
        Command::Batch { file, .. } => batch(file),
    }
}

fn classify(args: &CaseArgs) -> Result<Report, Failure> {
    let (text, shape, c) = case(args)?;
    let diag = is_diagonalizable(&shape, &c);
    let unit = is_unitary(&shape, &c)?;
    Ok(Report::ok(json_text(&render::classify(&text, &c, &diag, &unit))))
}

fn check_file(path: &Path) -> Result<Report, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&raw).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let (valid, reason) = match certificate::check(&doc) {
        Ok(()) => (true, None),
        Err(e) => (false, Some(format!("{e:#}"))),
    };
    let report = json!({ "certificate": path.display().to_string(), "valid": valid, "reason": reason });
    Ok(Report { text: json_text(&report), status: if valid { 0 } else { 1 } })
}

fn character(args: &CaseArgs, max_degree: u64, invariants: bool) -> Result<Report, Failure> {
    let (_, shape, c) = case(args)?;
    let counts = if invariants {
        graded_char_invariants(&shape, &c, max_degree)?
    } else {
        graded_dim_l(&shape, &c, max_degree)?
    };
    if let Some(note) = growth_note(&counts) {
        eprintln!("note: {note}");
    }
    let text: String = counts.iter().enumerate().map(|(d, a)| format!("{d},{a}\n")).collect();
    Ok(Report::ok(text))
}

/// Informational only: constant or linear tail of the counts.
fn growth_note(counts: &[u64]) -> Option<String> {
    let n = counts.len();
    if n < 4 {
        return None;
    }
    let t = &counts[n - 3..];
    if t[0] == t[1] && t[1] == t[2] {
        return Some(format!("a_d appears to stabilize at {}", t[2]));
    }
    let (d1, d2) = (t[1] as i64 - t[0] as i64, t[2] as i64 - t[1] as i64);
    (d1 == d2).then(|| format!("a_d appears to grow linearly with step {d1}"))
}

fn gamma(args: &CaseArgs, max_degree: u64) -> Result<Report, Failure> {
    let (_, shape, c) = case(args)?;
    if c.is_c0_zero() || !is_diagonalizable(&shape, &c).diagonalizable {
        return Err(Error::Precondition("gamma needs c0 != 0 and a diagonalizable module".into()).into());
    }
    let mut text = String::new();
    for level in enumerate_gamma_c(&shape, &c, max_degree) {
        for pq in level {
            let line = json!({
                "schema": render::GAMMA_SCHEMA,
                "p": pq.p,
                "q": pq.q,
                "degree": pq.degree(),
                "weight": render::weight(&weight_of(&pq, &shape, &c)),
            });
            text.push_str(&serde_json::to_string(&line).expect("JSON values serialize"));
            text.push('\n');
        }
    }
    Ok(Report::ok(text))
}

struct Check {
    name: &'static str,
    ok: bool,
    detail: String,
}

/// Compares the classifier with a degree-`max_degree` truncation.
fn oracle_report(shape: &MultiPartition, c: &Parameter, max_degree: usize) -> Result<(Value, bool), Failure> {
    let tm = build_truncation(shape, c, max_degree)?;
    let diag = is_diagonalizable(shape, c);
    let unit = is_unitary(shape, c)?;
    let jordan = tm.first_jordan_degree()?;
    let negative = tm.first_negative_degree();
    let relations = verify_relations(&tm);
    let ranks: Vec<usize> = tm.radical_and_l().iter().map(|&(r, _)| r).collect();
    let mut checks = vec![
        Check {
            name: "jordan_implies_non_diagonalizable",
            ok: jordan.is_none() || !diag.diagonalizable,
            detail: format!("first Jordan block degree {jordan:?}"),
        },
        Check {
            name: "negative_implies_non_unitary",
            ok: negative.is_none() || !unit.unitary,
            detail: format!("first negative degree {negative:?}"),
        },
        Check {
            name: "relations",
            ok: relations.ok(),
            detail: format!("{} evaluations, failed {:?}", relations.checked, relations.failed_relations()),
        },
    ];
    if !diag.diagonalizable {
        if let DiagCertificate::Stats { near_fold: Some(nf), .. } = &diag.certificate {
            let p = nf.degree() as usize;
            if p <= max_degree {
                checks.push(Check {
                    name: "predicted_jordan_block",
                    ok: jordan.is_some_and(|j| j <= p),
                    detail: format!("near fold predicts degree {p}"),
                });
            }
        }
    }
    if !unit.unitary {
        if let Some(p) = unit.refutation_degree() {
            if p as usize <= max_degree {
                let seen = negative.is_some_and(|d| d as u64 <= p) || jordan.is_some_and(|d| d as u64 <= p);
                checks.push(Check {
                    name: "predicted_refutation",
                    ok: seen,
                    detail: format!("certificate predicts degree {p}"),
                });
            }
        }
    }
    if diag.diagonalizable && !c.is_c0_zero() {
        let dims = graded_dim_l(shape, c, max_degree as u64)?;
        let want: Vec<u64> = ranks.iter().map(|&r| r as u64).collect();
        checks.push(Check {
            name: "graded_dimension",
            ok: dims == want,
            detail: format!("count {dims:?}, Gram ranks {want:?}"),
        });
        let inv = graded_char_invariants(shape, c, max_degree as u64)?;
        let want: Vec<u64> = tm.invariant_ranks().iter().map(|&r| r as u64).collect();
        checks.push(Check {
            name: "graded_invariants",
            ok: inv == want,
            detail: format!("count {inv:?}, invariant ranks {want:?}"),
        });
    }
    let agree = checks.iter().all(|k| k.ok);
    let doc = json!({
        "schema": ORACLE_SCHEMA,
        "shape": shape.to_string(),
        "param": render::param(c),
        "max_degree": max_degree,
        "classifier": { "diagonalizable": diag.diagonalizable, "unitary": unit.unitary },
        "oracle": {
            "gram_ranks": ranks,
            "negative_directions": (0..=max_degree).map(|d| tm.form(d).negative()).collect::<Vec<_>>(),
            "first_jordan_degree": jordan,
            "first_negative_degree": negative,
        },
        "checks": checks
            .iter()
            .map(|k| json!({ "name": k.name, "ok": k.ok, "detail": k.detail }))
            .collect::<Vec<_>>(),
        "agree": agree,
    });
    Ok((doc, agree))
}

fn random_rational(rng: &mut StdRng) -> Rational {
    let q = rng.gen_range(1..=6);
    rat(rng.gen_range(-2 * q..=2 * q), q)
}

fn oracle(args: &CaseArgs, max_degree: usize, samples: usize, seed: u64) -> Result<Report, Failure> {
    let (_, shape, c) = case(args)?;
    let (main, mut agree) = oracle_report(&shape, &c, max_degree)?;
    if samples == 0 {
        return Ok(Report { text: json_text(&main), status: if agree { 0 } else { 1 } });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut extra = Vec::with_capacity(samples);
    for _ in 0..samples {
        let c0 = random_rational(&mut rng);
        let tail: Vec<Rational> = (1..c.r()).map(|_| random_rational(&mut rng)).collect();
        let p = Parameter::new(c.r(), c0, &tail)?;
        let (doc, ok) = oracle_report(&shape, &p, max_degree)?;
        agree &= ok;
        extra.push(doc);
    }
    let doc =
        json!({ "seed": seed, "reports": std::iter::once(main).chain(extra).collect::<Vec<_>>(), "agree": agree });
    Ok(Report { text: json_text(&doc), status: if agree { 0 } else { 1 } })
}

/// Parses one `name:lo:hi:step` axis into its points.
fn axis(spec: &str, name: &str) -> Result<Vec<Rational>, Failure> {
    let parts: Vec<&str> = spec.trim().split(':').collect();
    if parts.len() != 4 || parts[0].trim() != name {
        return Err(usage(format!("expected `{name}:lo:hi:step`, got `{spec}`")));
    }
    let lo = parse_rational(parts[1])?;
    let hi = parse_rational(parts[2])?;
    let step = parse_rational(parts[3])?;
    if step <= Rational::from_integer(0.into()) || lo > hi {
        return Err(usage(format!("axis `{name}` needs lo <= hi and step > 0")));
    }
    let mut out = Vec::new();
    let mut x = lo;
    while x <= hi {
        out.push(x.clone());
        x += &step;
        if out.len() > 100_000 {
            return Err(usage("grid axis has more than 100000 points"));
        }
    }
    Ok(out)
}

fn locus(shape_text: &str, grid: &str) -> Result<Report, Failure> {
    let shape = parse_multipartition(shape_text, 2)?;
    let (a, b) = grid.split_once(';').ok_or_else(|| usage("--grid needs `c0:lo:hi:step;d0:lo:hi:step`"))?;
    let c0s = axis(a, "c0")?;
    let d0s = axis(b, "d0")?;
    let mut text = String::from("c0,d0,diagonalizable,unitary\n");
    for p in locus_2d(&shape, &c0s, &d0s)? {
        text.push_str(&format!(
            "{},{},{},{}\n",
            render::rational(&p.c0).as_str().unwrap(),
            render::rational(&p.d0).as_str().unwrap(),
            p.diagonalizable,
            p.unitary
        ));
    }
    Ok(Report::ok(text))
}

fn batch(file: &Path) -> Result<Report, Failure> {
    let raw = fs::read_to_string(file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
    let lines: Vec<(usize, &str)> = raw
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<Value> = lines.par_iter().map(|&(number, line)| batch_line(number, line)).collect();
    let failed = results.iter().filter(|v| v["exit_code"] != 0).count();
    let mut text = String::new();
    for v in &results {
        text.push_str(&serde_json::to_string(v).expect("JSON values serialize"));
        text.push('\n');
    }
    let summary = json!({ "summary": { "lines": results.len(), "failed": failed } });
    text.push_str(&serde_json::to_string(&summary).expect("JSON values serialize"));
    text.push('\n');
    Ok(Report { text, status: if failed == 0 { 0 } else { 1 } })
}

fn batch_line(number: usize, line: &str) -> Value {
    let outcome = (|| -> Result<Report, Failure> {
        let words = shlex::split(line).ok_or_else(|| usage("unbalanced quotes"))?;
        let cli = Cli::try_parse_from(std::iter::once("cherednik".to_string()).chain(words))
            .map_err(|e| usage(e.to_string().trim().to_string()))?;
        if matches!(cli.command, Command::Batch { .. }) {
            return Err(usage("batch files cannot nest"));
        }
        let report = execute(&cli.command)?;
        if let Some(p) = out_path(&cli.command) {
            write_out(Some(p), &report.text)?;
        }
        Ok(report)
    })();
    match outcome {
        Ok(r) => {
            let output = serde_json::from_str::<Value>(&r.text).unwrap_or(Value::String(r.text));
            json!({ "line": number, "command": line, "exit_code": r.status, "output": output })
        }
        Err(f) => json!({ "line": number, "command": line, "exit_code": f.code, "error": f.message }),
    }
}
