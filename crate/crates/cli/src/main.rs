//! `fiblucas` — sequences, matrix invariants and verification from the
//! command line.
//!
//! Exit codes: 0 success (or full match), 1 verification/match failure,
//! 2 usage error, 3 offline with no cached data.

mod render;

use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use fiblucas_matrix::bataille::{
    build_matrix, closed_charpoly, closed_det, closed_inverse, closed_power, closed_trace,
    spectrum, verify_grid, FamilyParams, VerificationReport,
};
use fiblucas_matrix::catalog::{
    bundled_fixture, check_fixture, emit_sequence, oeis_counterpart, MatchReport, SequenceFixture,
    SequenceId, SequenceKind,
};
use fiblucas_matrix::oeis::{validate_accession, OeisClient};
use fiblucas_matrix::sequence::{kfib, klucas};
use fiblucas_matrix::Error;

use render::{
    csv_line, int_json, int_matrix_json, int_matrix_string, markdown_table, poly_strings,
    rat_matrix_json, rat_matrix_string, OutputFormat,
};

#[derive(Parser)]
#[command(name = "fiblucas", version, about = "Exact invariants of the k-Fibonacci / k-Lucas matrix family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of a sequence family (fib, lucas, det, trace, lambda2)
    #[command(allow_negative_numbers = true)]
    Seq {
        /// Sequence kind: fib, lucas, det, trace or lambda2
        #[arg(long, value_parser = SequenceKind::from_str)]
        kind: SequenceKind,
        /// Recurrence multiplier k >= 1
        #[arg(long)]
        k: i64,
        /// First index (fib/lucas accept negatives; det/trace/lambda2 start at 1)
        #[arg(long)]
        from: i64,
        /// Last index, inclusive
        #[arg(long)]
        to: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Evaluate invariants of the matrix A(k,n)
    Invariants {
        #[arg(long)]
        k: i64,
        /// Matrix order n >= 1
        #[arg(long)]
        n: usize,
        /// Comma list from: det, trace, eigs, radius, energy, inverse,
        /// power:m, charpoly, matrix
        #[arg(long)]
        what: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Check every closed form against the brute-force oracles on a grid
    Verify {
        /// Inclusive k range, e.g. 1..6
        #[arg(long = "k-range", value_parser = parse_i64_range)]
        k_range: RangeInclusive<i64>,
        /// Inclusive n range, e.g. 1..8
        #[arg(long = "n-range", value_parser = parse_usize_range)]
        n_range: RangeInclusive<usize>,
        /// Largest power exponent checked
        #[arg(long = "power-max", default_value_t = 6)]
        power_max: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print a sequence table with one row per k and one column per n
    Tables {
        /// Which table: det, trace or lambda2
        #[arg(long, value_parser = SequenceKind::from_str)]
        which: SequenceKind,
        #[arg(long = "k-range", value_parser = parse_i64_range)]
        k_range: RangeInclusive<i64>,
        #[arg(long = "n-range", value_parser = parse_usize_range)]
        n_range: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Compare a locally generated sequence against OEIS terms
    Oeis {
        /// Accession to check, e.g. A000129
        #[arg(long = "check")]
        accession: String,
        /// Number of terms to compare
        #[arg(long, default_value_t = 20)]
        terms: usize,
        /// Never touch the network (cache and bundled fixtures only)
        #[arg(long)]
        offline: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
}

fn parse_i64_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (lo, hi) = split_range(s)?;
    Ok(lo..=hi)
}

fn parse_usize_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = split_range(s)?;
    let lo = usize::try_from(lo).map_err(|_| format!("range {s:?} must be nonnegative"))?;
    let hi = usize::try_from(hi).map_err(|_| format!("range {s:?} must be nonnegative"))?;
    Ok(lo..=hi)
}

fn split_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
    if lo > hi {
        return Err(format!("inverted range {s:?}"));
    }
    Ok((lo, hi))
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("fiblucas: {err}");
            exit_code(&err)
        }
    };
    std::process::exit(code);
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParameter(_) | Error::BadAccession(_) => 2,
        Error::Offline(_) => 3,
        _ => 1,
    }
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Seq { kind, k, from, to, format } => cmd_seq(kind, k, from, to, format),
        Command::Invariants { k, n, what, format } => cmd_invariants(k, n, &what, format),
        Command::Verify { k_range, n_range, power_max, format } => {
            cmd_verify(k_range, n_range, power_max, format)
        }
        Command::Tables { which, k_range, n_range, format } => {
            cmd_tables(which, k_range, n_range, format)
        }
        Command::Oeis { accession, terms, offline, format } => {
            cmd_oeis(&accession, terms, offline, format)
        }
    }
}

fn cmd_seq(
    kind: SequenceKind,
    k: i64,
    from: i64,
    to: i64,
    format: OutputFormat,
) -> Result<i32, Error> {
    if from > to {
        return Err(Error::InvalidParameter(format!("--from {from} exceeds --to {to}")));
    }
    let terms: Vec<(i64, BigInt)> = match kind {
        SequenceKind::KFib => {
            (from..=to).map(|i| kfib(k, i).map(|v| (i, v))).collect::<Result<_, _>>()?
        }
        SequenceKind::KLucas => {
            (from..=to).map(|i| klucas(k, i).map(|v| (i, v))).collect::<Result<_, _>>()?
        }
        _ => {
            if from < 1 {
                return Err(Error::InvalidParameter(format!(
                    "{kind} terms start at n = 1, got --from {from}"
                )));
            }
            let id = SequenceId::new(kind, k)?;
            let all = emit_sequence(&id, to as usize)?;
            (from..=to).map(|n| (n, all[(n - 1) as usize].clone())).collect()
        }
    };

    match format {
        OutputFormat::Plain => {
            let rendered: Vec<String> = terms.iter().map(|(_, v)| v.to_string()).collect();
            println!("{}", rendered.join(" "));
        }
        OutputFormat::Json => {
            let doc = json!({
                "kind": kind.as_str(),
                "k": k,
                "from": from,
                "to": to,
                "terms": terms
                    .iter()
                    .map(|(i, v)| json!({"index": i, "value": v.to_string()}))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Csv => {
            println!("index,value");
            for (i, v) in &terms {
                println!("{}", csv_line(&[i.to_string(), v.to_string()]));
            }
        }
        OutputFormat::Markdown => {
            let rows: Vec<Vec<String>> =
                terms.iter().map(|(i, v)| vec![i.to_string(), v.to_string()]).collect();
            print!("{}", markdown_table(&["index".into(), "value".into()], &rows));
        }
    }
    Ok(0)
}

fn cmd_invariants(k: i64, n: usize, what: &str, format: OutputFormat) -> Result<i32, Error> {
    let p = FamilyParams::new(k, n)?;
    // (name, plain rendering, json value), in request order
    let mut fields: Vec<(String, String, Value)> = Vec::new();
    for item in what.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "det" => {
                let v = closed_det(&p)?;
                fields.push(("det".into(), v.to_string(), int_json(&v)));
            }
            "trace" => {
                let v = closed_trace(&p)?;
                fields.push(("trace".into(), v.to_string(), int_json(&v)));
            }
            "eigs" => {
                let s = spectrum(&p)?;
                let plain = if s.mult1 > 0 {
                    format!("({}x{}, {}x{})", s.lambda1, s.mult1, s.lambda2, s.mult2)
                } else {
                    format!("({}x{})", s.lambda2, s.mult2)
                };
                let mut eigs = Vec::new();
                if s.mult1 > 0 {
                    eigs.push(json!({"value": s.lambda1.to_string(), "multiplicity": s.mult1}));
                }
                eigs.push(json!({"value": s.lambda2.to_string(), "multiplicity": s.mult2}));
                fields.push(("eigs".into(), plain, Value::Array(eigs)));
            }
            "radius" => {
                let v = spectrum(&p)?.spectral_radius;
                fields.push(("radius".into(), v.to_string(), int_json(&v)));
            }
            "energy" => {
                let v = spectrum(&p)?.energy;
                fields.push(("energy".into(), v.to_string(), int_json(&v)));
            }
            "inverse" => {
                let m = closed_inverse(&p)?;
                fields.push(("inverse".into(), rat_matrix_string(&m), rat_matrix_json(&m)));
            }
            "charpoly" => {
                let poly = closed_charpoly(&p)?;
                let coeffs = poly_strings(&poly);
                let plain = format!("[{}]", coeffs.join(", "));
                fields.push((
                    "charpoly".into(),
                    plain,
                    Value::Array(coeffs.into_iter().map(Value::String).collect()),
                ));
            }
            "matrix" => {
                let m = build_matrix(&p);
                fields.push(("matrix".into(), int_matrix_string(&m), int_matrix_json(&m)));
            }
            power if power.starts_with("power:") => {
                let exponent: u32 = power["power:".len()..].parse().map_err(|_| {
                    Error::InvalidParameter(format!("bad power exponent in {power:?}"))
                })?;
                let m = closed_power(&p, exponent)?;
                fields.push((
                    power.to_string(),
                    int_matrix_string(&m),
                    json!({"exponent": exponent, "matrix": int_matrix_json(&m)}),
                ));
            }
            other => {
                return Err(Error::InvalidParameter(format!("unknown invariant {other:?}")));
            }
        }
    }
    if fields.is_empty() {
        return Err(Error::InvalidParameter("--what selected no invariants".into()));
    }

    match format {
        OutputFormat::Plain => {
            for (name, value, _) in &fields {
                println!("{name}={value}");
            }
        }
        OutputFormat::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("k".into(), json!(k));
            doc.insert("n".into(), json!(n));
            for (name, _, value) in fields {
                doc.insert(name, value);
            }
            println!("{}", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"));
        }
        OutputFormat::Csv => {
            println!("invariant,value");
            for (name, value, _) in &fields {
                println!("{}", csv_line(&[name.clone(), value.clone()]));
            }
        }
        OutputFormat::Markdown => {
            let rows: Vec<Vec<String>> =
                fields.iter().map(|(name, value, _)| vec![name.clone(), value.clone()]).collect();
            print!("{}", markdown_table(&["invariant".into(), "value".into()], &rows));
        }
    }
    Ok(0)
}

fn cmd_verify(
    k_range: RangeInclusive<i64>,
    n_range: RangeInclusive<usize>,
    power_max: u32,
    format: OutputFormat,
) -> Result<i32, Error> {
    if *k_range.start() < 1 || *n_range.start() < 1 {
        return Err(Error::InvalidParameter("k and n ranges start at 1".into()));
    }
    let report = verify_grid(k_range.clone(), n_range.clone(), power_max);
    print_report(&report, &k_range, &n_range, power_max, format);
    if report.all_passed() {
        Ok(0)
    } else {
        let failure = report.first_failure().expect("failure exists");
        eprintln!(
            "fiblucas: verification failed at k={} n={} check={}: {}",
            failure.k,
            failure.n,
            failure.check,
            failure.witness.as_deref().unwrap_or("no witness")
        );
        Ok(1)
    }
}

fn print_report(
    report: &VerificationReport,
    k_range: &RangeInclusive<i64>,
    n_range: &RangeInclusive<usize>,
    power_max: u32,
    format: OutputFormat,
) {
    match format {
        OutputFormat::Plain => {
            for r in report.records() {
                let status = if r.passed() { "pass" } else { "fail" };
                match &r.witness {
                    Some(w) => println!("k={} n={} {} {status}: {w}", r.k, r.n, r.check),
                    None => println!("k={} n={} {} {status}", r.k, r.n, r.check),
                }
            }
            println!(
                "{} checks, {} passed, {} failed",
                report.len(),
                report.passed_count(),
                report.len() - report.passed_count()
            );
        }
        OutputFormat::Json => {
            let doc = json!({
                "k_range": [k_range.start(), k_range.end()],
                "n_range": [n_range.start(), n_range.end()],
                "power_max": power_max,
                "total": report.len(),
                "passed": report.passed_count(),
                "failed": report.len() - report.passed_count(),
                "records": report.records(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Csv => {
            println!("k,n,check,status,witness");
            for r in report.records() {
                let status = if r.passed() { "pass" } else { "fail" };
                println!(
                    "{}",
                    csv_line(&[
                        r.k.to_string(),
                        r.n.to_string(),
                        r.check.to_string(),
                        status.to_string(),
                        r.witness.clone().unwrap_or_default(),
                    ])
                );
            }
        }
        OutputFormat::Markdown => {
            let headers =
                vec!["k".into(), "n".into(), "check".into(), "status".into(), "witness".into()];
            let rows: Vec<Vec<String>> = report
                .records()
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.n.to_string(),
                        r.check.to_string(),
                        if r.passed() { "pass".into() } else { "fail".into() },
                        r.witness.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            print!("{}", markdown_table(&headers, &rows));
        }
    }
}

fn cmd_tables(
    which: SequenceKind,
    k_range: RangeInclusive<i64>,
    n_range: RangeInclusive<usize>,
    format: OutputFormat,
) -> Result<i32, Error> {
    if !matches!(which, SequenceKind::Det | SequenceKind::Trace | SequenceKind::Lambda2) {
        return Err(Error::InvalidParameter(format!(
            "tables are defined for det, trace and lambda2, not {which}"
        )));
    }
    let (n_lo, n_hi) = (*n_range.start(), *n_range.end());
    if n_lo < 1 {
        return Err(Error::InvalidParameter("table columns start at n = 1".into()));
    }
    let mut rows: Vec<(i64, Vec<BigInt>)> = Vec::new();
    for k in k_range.clone() {
        let id = SequenceId::new(which, k)?;
        let all = emit_sequence(&id, n_hi)?;
        rows.push((k, all[n_lo - 1..].to_vec()));
    }

    match format {
        OutputFormat::Plain => {
            for (k, terms) in &rows {
                let rendered: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                println!("k={k}: {}", rendered.join(", "));
            }
        }
        OutputFormat::Json => {
            let doc = json!({
                "which": which.as_str(),
                "n": (n_lo..=n_hi).collect::<Vec<_>>(),
                "rows": rows
                    .iter()
                    .map(|(k, terms)| json!({
                        "k": k,
                        "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Csv => {
            let mut header = vec!["k".to_string()];
            header.extend((n_lo..=n_hi).map(|n| n.to_string()));
            println!("{}", csv_line(&header));
            for (k, terms) in &rows {
                let mut fields = vec![k.to_string()];
                fields.extend(terms.iter().map(|t| t.to_string()));
                println!("{}", csv_line(&fields));
            }
        }
        OutputFormat::Markdown => {
            let mut headers = vec!["k".to_string()];
            headers.extend((n_lo..=n_hi).map(|n| format!("n={n}")));
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(k, terms)| {
                    let mut row = vec![k.to_string()];
                    row.extend(terms.iter().map(|t| t.to_string()));
                    row
                })
                .collect();
            print!("{}", markdown_table(&headers, &body));
        }
    }
    Ok(0)
}

fn cmd_oeis(
    accession: &str,
    terms: usize,
    offline_flag: bool,
    format: OutputFormat,
) -> Result<i32, Error> {
    validate_accession(accession)?;
    if terms == 0 {
        return Err(Error::InvalidParameter("--terms must be >= 1".into()));
    }
    let env_client = OeisClient::from_env();
    let client = OeisClient::new(
        env_client.base_url(),
        env_client.cache_dir(),
        env_client.offline() || offline_flag,
    );

    // Cache first, then the bundled fixtures, then (if allowed) the network.
    let (fixture, source): (SequenceFixture, &str) = if client.cache_path(accession).exists() {
        (client.fetch(accession, terms)?, "cache")
    } else if let Some(bundled) = bundled_fixture(accession) {
        (bundled.truncated(terms), "bundled")
    } else {
        (client.fetch(accession, terms)?, "network")
    };

    let outcome = match oeis_counterpart(accession) {
        Some(id) => Some(check_fixture(&id, &fixture)?),
        None => None,
    };
    print_oeis(accession, source, &fixture, outcome.as_ref(), format);

    match &outcome {
        Some(report) if !report.is_match() => {
            let mismatch = report.first_mismatch.as_ref().expect("mismatch present");
            eprintln!(
                "fiblucas: {accession} differs at index {}: expected {}, generated {}",
                mismatch.index, mismatch.expected, mismatch.actual
            );
            Ok(1)
        }
        _ => Ok(0),
    }
}

fn print_oeis(
    accession: &str,
    source: &str,
    fixture: &SequenceFixture,
    outcome: Option<&MatchReport>,
    format: OutputFormat,
) {
    match format {
        OutputFormat::Json => {
            let doc = json!({
                "accession": accession,
                "source": source,
                "offset": fixture.offset(),
                "terms": fixture.terms().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "compared": outcome.map(|r| r.compared),
                "match": outcome.map(|r| r.is_match()),
                "first_mismatch": outcome.and_then(|r| {
                    r.first_mismatch.as_ref().map(|m| json!({
                        "index": m.index,
                        "expected": m.expected,
                        "actual": m.actual,
                    }))
                }),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        _ => match outcome {
            Some(report) if report.is_match() => {
                println!(
                    "{accession} ({source}): {} terms compared, full match",
                    report.compared
                );
            }
            Some(report) => {
                let m = report.first_mismatch.as_ref().expect("mismatch present");
                println!(
                    "{accession} ({source}): mismatch at index {} (fixture {}, generated {})",
                    m.index, m.expected, m.actual
                );
            }
            None => {
                println!(
                    "{accession} ({source}): fetched {} terms; no local counterpart to compare",
                    fixture.terms().len()
                );
            }
        },
    }
}
