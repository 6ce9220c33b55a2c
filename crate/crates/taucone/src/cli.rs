//! Command-line surface over the computational modules. All rationals are
//! read as `P/Q` or integer literals; decimal input is rejected so that
//! every value stays exact. Output is byte-deterministic for fixed inputs.
//!
//! Exit codes: 0 for success (or a proved certificate), 1 for a failed
//! certificate or an empty search, 2 for usage and precondition errors.

use crate::bound::{Bound, BoundValue};
use crate::cone::low_genus_tau;
use crate::finiteness::{candidate_taus, FinitenessReport};
use crate::lattice::{Genus, QClass};
use crate::prover::{
    certify, search_best_ratio, CertificateProblem, CertificateResult, SearchOutcome, Verdict,
};
use crate::tau_bounds::{tau_report, CertifiedRatio, Registry, TauReport};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "taucone",
    version,
    about = "Exact nef-cone bounds and exclusion certificates on symmetric squares of curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Intersection number of two classes (n,gamma) on one surface
    Pair {
        #[arg(long)]
        genus: u64,
        /// First class as "n,gamma"; components may be fractions P/Q
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Second class as "n,gamma"
        #[arg(long, allow_hyphen_values = true)]
        class2: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lower and upper bounds for tau at one genus
    Tau {
        #[arg(long)]
        genus: u64,
        /// JSON file of extra plane Seshadri data: [{"m","num","den","source"}]
        #[arg(long)]
        registry: Option<PathBuf>,
        /// Grid width for the automatic exclusion-certificate search
        /// (applies to genus 3..=5; 0 disables it)
        #[arg(long = "prover-max-b", default_value_t = 7)]
        prover_max_b: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Bound reports for every genus 0..=max-genus
    Table {
        #[arg(long = "max-genus")]
        max_genus: u64,
        #[arg(long)]
        registry: Option<PathBuf>,
        #[arg(long = "prover-max-b", default_value_t = 7)]
        prover_max_b: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run one exclusion certificate for epsilon(p; D^(2), (a+b)x - b(delta/2)) >= b
    Certify {
        /// Genus of the auxiliary curve D
        #[arg(long = "genus-d")]
        genus_d: u64,
        /// Certified rational upper bound for tau at that genus, as P/Q
        #[arg(long = "tau-d", allow_hyphen_values = true)]
        tau_d: String,
        #[arg(long = "a", allow_hyphen_values = true)]
        a: String,
        #[arg(long = "b", allow_hyphen_values = true)]
        b: String,
        /// Also write the transcript to this file
        #[arg(long)]
        transcript: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search the (a, b) grid for the smallest certifiable ratio
    Search {
        #[arg(long = "genus-d")]
        genus_d: u64,
        #[arg(long = "tau-d", allow_hyphen_values = true)]
        tau_d: String,
        #[arg(long = "max-b")]
        max_b: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Finite candidate set of tau values >= alpha at one genus
    Finiteness {
        #[arg(long)]
        genus: u64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Slope in (sqrt(g), alpha); defaults to the simplest rational there
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    if text.contains('.') {
        return Err(format!(
            "'{text}': decimal input is rejected to keep values exact; write a fraction P/Q"
        ));
    }
    let mut parts = text.splitn(2, '/');
    let numer = parts.next().unwrap_or("");
    let numer = BigInt::from_str(numer).map_err(|_| format!("'{text}': not an integer or P/Q"))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(numer)),
        Some(denom) => {
            let denom =
                BigInt::from_str(denom).map_err(|_| format!("'{text}': not an integer or P/Q"))?;
            if denom.is_zero() {
                return Err(format!("'{text}': zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

pub fn parse_class(genus: Genus, text: &str) -> Result<QClass, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("'{text}': a class is written n,gamma"));
    }
    let n = parse_rational(parts[0].trim())?;
    let gamma = parse_rational(parts[1].trim())?;
    Ok(QClass::new(genus, n, gamma))
}

fn json_int(i: &BigInt) -> Value {
    match i.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(i.to_string()),
    }
}

fn json_rat(q: &BigRational) -> Value {
    Value::from(q.to_string())
}

/// Integers that fit i64 come out as JSON numbers, everything else as an
/// exact string.
fn json_exact(q: &BigRational) -> Value {
    if q.is_integer() {
        json_int(q.numer())
    } else {
        Value::from(q.to_string())
    }
}

/// A class as `{"genus", "n", "gamma"}`.
pub fn class_to_json(c: &QClass) -> Value {
    json!({
        "genus": c.genus().value(),
        "n": json_exact(c.n()),
        "gamma": json_exact(c.gamma()),
    })
}

fn value_rat(v: &Value) -> Result<BigRational, String> {
    match v {
        Value::Number(_) => value_int(v).map(BigRational::from_integer),
        Value::String(s) => parse_rational(s),
        other => Err(format!("{other}: expected an exact number")),
    }
}

/// Inverse of [`class_to_json`].
pub fn class_from_json(v: &Value) -> Result<QClass, String> {
    let genus = v
        .get("genus")
        .and_then(Value::as_u64)
        .ok_or("missing genus")?;
    let n = value_rat(v.get("n").ok_or("missing n")?)?;
    let gamma = value_rat(v.get("gamma").ok_or("missing gamma")?)?;
    Ok(QClass::new(Genus(genus), n, gamma))
}

/// Bound as `{"kind", "num", "den", "provenance", "approx"}`; for the sqrt
/// kind, num/den describe the radicand. `approx` is a display annotation.
pub fn bound_to_json(b: &Bound) -> Value {
    let (kind, q) = match b.value() {
        BoundValue::Rational(q) => ("rational", q),
        BoundValue::Sqrt(q) => ("sqrt", q),
    };
    json!({
        "kind": kind,
        "num": json_int(q.numer()),
        "den": json_int(q.denom()),
        "provenance": b.provenance(),
        "approx": b.value().decimal(6),
    })
}

fn value_int(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("{n}: not an integer")),
        Value::String(s) => BigInt::from_str(s).map_err(|e| e.to_string()),
        other => Err(format!("{other}: expected an integer")),
    }
}

/// Inverse of [`bound_to_json`]; round-tripping reproduces identical exact
/// values.
pub fn bound_from_json(v: &Value) -> Result<Bound, String> {
    let num = value_int(v.get("num").ok_or("missing num")?)?;
    let den = value_int(v.get("den").ok_or("missing den")?)?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    let q = BigRational::new(num, den);
    let provenance = v
        .get("provenance")
        .and_then(Value::as_str)
        .unwrap_or_default();
    match v.get("kind").and_then(Value::as_str) {
        Some("rational") => Ok(Bound::rational(q, provenance)),
        Some("sqrt") => {
            if q.is_negative() {
                return Err("negative radicand".into());
            }
            Ok(Bound::sqrt_of(q, provenance))
        }
        other => Err(format!("{other:?}: unknown bound kind")),
    }
}

fn bound_text(b: &Bound) -> String {
    format!("{} ~{}", b.value(), b.value().decimal(6))
}

struct Output {
    stdout: Vec<String>,
}

impl Output {
    fn new() -> Self {
        Output { stdout: Vec::new() }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.stdout.push(s.into());
    }

    fn flush(self) {
        use std::io::Write;
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        for line in self.stdout {
            // a closed pipe downstream just means nobody is listening
            if writeln!(lock, "{line}").is_err() {
                break;
            }
        }
    }
}

fn load_registry(path: &Option<PathBuf>) -> Result<Registry, String> {
    let mut registry = Registry::builtin();
    if let Some(path) = path {
        registry.load_file(path).map_err(|e| e.to_string())?;
    }
    Ok(registry)
}

/// Exclusion certificates derived automatically for a report: only for
/// genus 3..=5, where the auxiliary genus has an exactly known rational tau
/// and is at least 2. The genus-1 auxiliary surface is ruled, so its moving
/// zero-self-intersection fibres break the zero-class assumption; no
/// certificate is auto-derived over it.
fn auto_certificates(genus: Genus, max_b: u64) -> Vec<CertifiedRatio> {
    if max_b == 0 || !(3..=5).contains(&genus.value()) {
        return Vec::new();
    }
    let aux = genus.value() - 1;
    let tau_d = low_genus_tau(Genus(aux))
        .expect("aux genus is tabulated")
        .value()
        .as_rational()
        .expect("tabulated tau values are rational")
        .clone();
    match search_best_ratio(aux, &tau_d, max_b)
        .as_ref()
        .map(SearchOutcome::found)
    {
        Ok(Some((problem, _))) => vec![CertifiedRatio {
            a: problem.a().clone(),
            b: problem.b().clone(),
            source: format!("exclusion certificate over genus {aux} (grid b <= {max_b})"),
        }],
        _ => Vec::new(),
    }
}

fn report_json(r: &TauReport) -> Value {
    json!({
        "genus": r.genus.value(),
        "lower": bound_to_json(&r.lower),
        "uppers": r.uppers.iter().map(|u| json!({
            "rule": u.rule.name(),
            "bound": bound_to_json(&u.bound),
        })).collect::<Vec<_>>(),
        "best": bound_to_json(&r.best_upper),
    })
}

fn report_uppers_compact(r: &TauReport) -> String {
    r.uppers
        .iter()
        .map(|u| format!("{}={}", u.rule.name(), u.bound.value()))
        .collect::<Vec<_>>()
        .join(";")
}

fn report_text(out: &mut Output, r: &TauReport) {
    out.line(format!("genus {}", r.genus));
    out.line(format!(
        "lower {} [{}]",
        bound_text(&r.lower),
        r.lower.provenance()
    ));
    for u in &r.uppers {
        out.line(format!(
            "upper {} {} [{}]",
            u.rule.name(),
            bound_text(&u.bound),
            u.bound.provenance()
        ));
    }
    out.line(format!("best {}", bound_text(&r.best_upper)));
}

const TABLE_CSV_HEADER: &str = "genus,lower,best,uppers";

fn report_csv_row(r: &TauReport) -> String {
    format!(
        "{},{},{},{}",
        r.genus,
        r.lower.value(),
        r.best_upper.value(),
        report_uppers_compact(r)
    )
}

fn cmd_pair(genus: u64, class: &str, class2: &str, format: Format) -> Result<i32, String> {
    let genus = Genus(genus);
    let left = parse_class(genus, class)?;
    let right = parse_class(genus, class2)?;
    let pairing = left.intersect(&right).map_err(|e| e.to_string())?;
    let mut out = Output::new();
    match format {
        Format::Text => out.line(pairing.to_string()),
        Format::Json => out.line(
            serde_json::to_string_pretty(&json!({
                "left": class_to_json(&left),
                "right": class_to_json(&right),
                "pairing": json_exact(&pairing),
            }))
            .unwrap(),
        ),
        Format::Csv => {
            out.line("genus,left_n,left_gamma,right_n,right_gamma,pairing");
            out.line(format!(
                "{},{},{},{},{},{pairing}",
                genus,
                left.n(),
                left.gamma(),
                right.n(),
                right.gamma()
            ));
        }
    }
    out.flush();
    Ok(0)
}

fn cmd_tau(
    genus: u64,
    registry: &Option<PathBuf>,
    prover_max_b: u64,
    format: Format,
) -> Result<i32, String> {
    let genus = Genus(genus);
    let registry = load_registry(registry)?;
    let certified = auto_certificates(genus, prover_max_b);
    let report = tau_report(genus, &registry, &certified);
    let mut out = Output::new();
    match format {
        Format::Text => report_text(&mut out, &report),
        Format::Json => out.line(serde_json::to_string_pretty(&report_json(&report)).unwrap()),
        Format::Csv => {
            out.line(TABLE_CSV_HEADER);
            out.line(report_csv_row(&report));
        }
    }
    out.flush();
    Ok(0)
}

fn cmd_table(
    max_genus: u64,
    registry: &Option<PathBuf>,
    prover_max_b: u64,
    format: Format,
) -> Result<i32, String> {
    let registry = load_registry(registry)?;
    let reports: Vec<TauReport> = (0..=max_genus)
        .map(|g| {
            let genus = Genus(g);
            tau_report(genus, &registry, &auto_certificates(genus, prover_max_b))
        })
        .collect();
    let mut out = Output::new();
    match format {
        Format::Text => {
            for r in &reports {
                out.line(format!(
                    "g={} lower={} best={} uppers={}",
                    r.genus,
                    bound_text(&r.lower),
                    bound_text(&r.best_upper),
                    report_uppers_compact(r)
                ));
            }
        }
        Format::Json => out.line(
            serde_json::to_string_pretty(&Value::Array(reports.iter().map(report_json).collect()))
                .unwrap(),
        ),
        Format::Csv => {
            out.line(TABLE_CSV_HEADER);
            for r in &reports {
                out.line(report_csv_row(r));
            }
        }
    }
    out.flush();
    Ok(0)
}

fn certificate_json(problem: &CertificateProblem, result: &CertificateResult) -> Value {
    json!({
        "outcome": if result.proved() { "proved" } else { "failed" },
        "genus_d": problem.aux_genus(),
        "tau_d": json_rat(problem.tau_d()),
        "a": json_int(problem.a()),
        "b": json_int(problem.b()),
        "ratio": json_rat(&problem.ratio()),
        "l_self": json_int(&problem.l_self()),
        "m0": json_int(&result.m0),
        "min_le": {
            "value": json_int(&result.m1.min_l_dot_e),
            "at": {"n": json_int(&result.m1.at.0), "gamma": json_int(&result.m1.at.1)},
            "required": json_int(problem.b()),
            "passed": result.m1.passed,
        },
        "exceptions": result.exceptions.iter().map(|c| {
            let verdict = match &c.verdict {
                Verdict::Excluded(reason) => json!({"excluded": reason.to_string()}),
                Verdict::Violating(ms) => json!({"violating": ms.iter().map(json_int).collect::<Vec<_>>()}),
            };
            json!({
                "n": json_int(&c.n),
                "gamma": json_int(&c.gamma),
                "le": json_int(&c.l_dot_e),
                "e_self": json_int(&c.e_self),
                "m_max": json_int(&c.m_max),
                "ratio_floor": c.ratio_floor().map(|f| json_rat(&f)).unwrap_or(Value::Null),
                "verdict": verdict,
            })
        }).collect::<Vec<_>>(),
        "witnesses": result.witnesses.iter().map(|(n, g, m)| json!({
            "n": json_int(n), "gamma": json_int(g), "m": json_int(m),
        })).collect::<Vec<_>>(),
        "assumptions": {
            "zero_self_intersection_classes_missed": result.zero_class_assumption_used,
            "rigid_negative_classes_missed": result.rigidity_used,
        },
        "transcript": result.transcript,
    })
}

fn cmd_certify(
    genus_d: u64,
    tau_d: &str,
    a: &str,
    b: &str,
    transcript_path: &Option<PathBuf>,
    format: Format,
) -> Result<i32, String> {
    let tau_d = parse_rational(tau_d)?;
    let a = parse_rational(a)?;
    let b = parse_rational(b)?;
    if !a.is_integer() || !b.is_integer() {
        return Err("a and b must be integers".into());
    }
    let problem = CertificateProblem::new(genus_d, tau_d, a.to_integer(), b.to_integer())
        .map_err(|e| e.to_string())?;
    let result = certify(&problem);
    if let Some(path) = transcript_path {
        std::fs::write(path, &result.transcript).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let mut out = Output::new();
    match format {
        Format::Text => out.line(result.transcript.trim_end()),
        Format::Json => {
            out.line(serde_json::to_string_pretty(&certificate_json(&problem, &result)).unwrap())
        }
        Format::Csv => {
            out.line("n,gamma,le,e_self,m_max,verdict");
            for c in &result.exceptions {
                let verdict = match &c.verdict {
                    Verdict::Excluded(r) => format!("excluded:{r}"),
                    Verdict::Violating(ms) => format!(
                        "violating:{}",
                        ms.iter()
                            .map(|m| m.to_string())
                            .collect::<Vec<_>>()
                            .join(";")
                    ),
                };
                out.line(format!(
                    "{},{},{},{},{},{verdict}",
                    c.n, c.gamma, c.l_dot_e, c.e_self, c.m_max
                ));
            }
        }
    }
    out.flush();
    Ok(if result.proved() { 0 } else { 1 })
}

fn cmd_search(genus_d: u64, tau_d: &str, max_b: u64, format: Format) -> Result<i32, String> {
    let tau_d = parse_rational(tau_d)?;
    let outcome = search_best_ratio(genus_d, &tau_d, max_b).map_err(|e| e.to_string())?;
    let mut out = Output::new();
    let code = match outcome.found() {
        Some((problem, result)) => {
            match format {
                Format::Text => {
                    out.line(format!(
                        "found a={} b={} ratio={} ~{}",
                        problem.a(),
                        problem.b(),
                        problem.ratio(),
                        BoundValue::rational(problem.ratio()).decimal(6)
                    ));
                    out.line(result.transcript.trim_end());
                }
                Format::Json => out.line(
                    serde_json::to_string_pretty(&json!({
                        "found": true,
                        "a": json_int(problem.a()),
                        "b": json_int(problem.b()),
                        "ratio": json_rat(&problem.ratio()),
                        "certificate": certificate_json(problem, result),
                    }))
                    .unwrap(),
                ),
                Format::Csv => {
                    out.line("a,b,ratio");
                    out.line(format!(
                        "{},{},{}",
                        problem.a(),
                        problem.b(),
                        problem.ratio()
                    ));
                }
            }
            0
        }
        None => {
            match format {
                Format::Text => out.line("none found"),
                Format::Json => {
                    out.line(serde_json::to_string_pretty(&json!({"found": false})).unwrap())
                }
                Format::Csv => out.line("a,b,ratio"),
            }
            1
        }
    };
    out.flush();
    Ok(code)
}

fn finiteness_json(r: &FinitenessReport) -> Value {
    json!({
        "g": r.genus.value(),
        "alpha": json_rat(&r.alpha),
        "s": json_rat(&r.s),
        "k": json_int(&r.k),
        "N": json_int(&r.n_max),
        "M": json_int(&r.gamma_max),
        "candidates": r.candidates.iter().map(json_rat).collect::<Vec<_>>(),
    })
}

fn cmd_finiteness(
    genus: u64,
    alpha: &str,
    s: &Option<String>,
    format: Format,
) -> Result<i32, String> {
    let alpha = parse_rational(alpha)?;
    let s = s.as_deref().map(parse_rational).transpose()?;
    let report = candidate_taus(Genus(genus), &alpha, s.as_ref()).map_err(|e| e.to_string())?;
    let mut out = Output::new();
    let candidates_compact = report
        .candidates
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(";");
    match format {
        Format::Text => {
            out.line(format!("g {}", report.genus));
            out.line(format!("alpha {}", report.alpha));
            out.line(format!("s {}", report.s));
            out.line(format!("k {}", report.k));
            out.line(format!("N {}", report.n_max));
            out.line(format!("M {}", report.gamma_max));
            out.line(format!("candidates {candidates_compact}"));
        }
        Format::Json => out.line(serde_json::to_string_pretty(&finiteness_json(&report)).unwrap()),
        Format::Csv => {
            out.line("g,alpha,s,k,N,M,candidates");
            out.line(format!(
                "{},{},{},{},{},{},{candidates_compact}",
                report.genus, report.alpha, report.s, report.k, report.n_max, report.gamma_max
            ));
        }
    }
    out.flush();
    Ok(0)
}

/// Parse and dispatch, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are successful exits; everything else is usage
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Pair {
            genus,
            class,
            class2,
            format,
        } => cmd_pair(*genus, class, class2, *format),
        Command::Tau {
            genus,
            registry,
            prover_max_b,
            format,
        } => cmd_tau(*genus, registry, *prover_max_b, *format),
        Command::Table {
            max_genus,
            registry,
            prover_max_b,
            format,
        } => cmd_table(*max_genus, registry, *prover_max_b, *format),
        Command::Certify {
            genus_d,
            tau_d,
            a,
            b,
            transcript,
            format,
        } => cmd_certify(*genus_d, tau_d, a, b, transcript, *format),
        Command::Search {
            genus_d,
            tau_d,
            max_b,
            format,
        } => cmd_search(*genus_d, tau_d, *max_b, *format),
        Command::Finiteness {
            genus,
            alpha,
            s,
            format,
        } => cmd_finiteness(*genus, alpha, s, *format),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("16/7").unwrap(), rat(16, 7));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rational("2.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn class_parsing() {
        let c = parse_class(Genus(4), "3,1").unwrap();
        assert_eq!((c.n().clone(), c.gamma().clone()), (rat(3, 1), rat(1, 1)));
        let c = parse_class(Genus(4), "9/4, -1/2").unwrap();
        assert_eq!((c.n().clone(), c.gamma().clone()), (rat(9, 4), rat(-1, 2)));
        assert!(parse_class(Genus(4), "3").is_err());
        assert!(parse_class(Genus(4), "3,1,2").is_err());
    }

    #[test]
    fn bound_json_roundtrip() {
        for bound in [
            Bound::sqrt_of(rat(5, 1), "lower"),
            Bound::rational(rat(16, 7), "certificate"),
            Bound::rational(rat(-2, 3), "synthetic"),
            Bound::sqrt_of(rat(121, 4), "normalizes to 11/2"),
        ] {
            let v = bound_to_json(&bound);
            let back = bound_from_json(&v).unwrap();
            assert_eq!(back.value(), bound.value());
            assert_eq!(back.provenance(), bound.provenance());
        }
    }

    #[test]
    fn class_json_roundtrip() {
        for (g, n, gamma) in [
            (4i64, (3, 1), (1, 1)),
            (5, (9, 4), (-1, 2)),
            (0, (0, 1), (7, 1)),
        ] {
            let class = QClass::new(Genus(g as u64), rat(n.0, n.1), rat(gamma.0, gamma.1));
            let back = class_from_json(&class_to_json(&class)).unwrap();
            assert_eq!(back, class);
        }
    }

    #[test]
    fn big_integers_serialize_as_strings() {
        let huge = BigInt::from_str("123456789012345678901234567890").unwrap();
        let v = json_int(&huge);
        assert!(v.is_string());
        assert_eq!(value_int(&v).unwrap(), huge);
        let small = json_int(&BigInt::from(42));
        assert!(small.is_number());
    }
}
