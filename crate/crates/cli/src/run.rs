use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use burge_core::verify::{catalogue, run_cases};
use burge_core::{Budget, IdentityCase, Status, Suite, VerifyReport};
use serde::Deserialize;

use crate::{Format, VerifyArgs, EXIT_FAIL, EXIT_IO, EXIT_USAGE};

/// Settings read from `--config`; every key mirrors a flag.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    suite: Option<Vec<String>>,
    a_max: Option<i64>,
    lm_max: Option<i64>,
    l_max: Option<i64>,
    m_max: Option<i64>,
    n_max: Option<i64>,
    order: Option<u32>,
    hook_max: Option<i64>,
    format: Option<Format>,
    out: Option<PathBuf>,
    timing: Option<bool>,
    threads: Option<usize>,
}

#[derive(Debug)]
struct RunConfig {
    suites: Vec<Suite>,
    budget: Budget,
    format: Format,
    out: Option<PathBuf>,
    timing: bool,
    threads: Option<usize>,
}

enum Failure {
    Usage(anyhow::Error),
    Io(anyhow::Error),
}

fn resolve(args: &VerifyArgs) -> Result<RunConfig, Failure> {
    let file = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::Io)?;
            toml::from_str::<FileConfig>(&text)
                .with_context(|| format!("parsing {}", path.display()))
                .map_err(Failure::Usage)?
        }
        None => FileConfig::default(),
    };
    build(args, file).map_err(Failure::Usage)
}

fn build(args: &VerifyArgs, file: FileConfig) -> Result<RunConfig> {
    let names = if args.suite.is_empty() {
        file.suite.unwrap_or_default()
    } else {
        args.suite.clone()
    };
    let mut suites = Vec::new();
    for name in &names {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(name.parse::<Suite>()?);
        }
    }
    if suites.is_empty() {
        bail!("no suite selected; pass --suite NAME or --suite all");
    }
    suites.sort();
    suites.dedup();

    let d = Budget::default();
    let lm = args.lm_max.or(file.lm_max);
    let budget = Budget {
        a_max: args.a_max.or(file.a_max).unwrap_or(d.a_max),
        l_max: args.l_max.or(lm).or(file.l_max).unwrap_or(d.l_max),
        m_max: args.m_max.or(lm).or(file.m_max).unwrap_or(d.m_max),
        n_max: args.n_max.or(file.n_max).unwrap_or(d.n_max),
        order: args.order.or(file.order).unwrap_or(d.order),
        hook_max: args.hook_max.or(file.hook_max).unwrap_or(d.hook_max),
    };
    for (name, v) in [
        ("a-max", budget.a_max),
        ("l-max", budget.l_max),
        ("m-max", budget.m_max),
        ("n-max", budget.n_max),
        ("hook-max", budget.hook_max),
    ] {
        if v < 0 {
            bail!("--{name} must be nonnegative, got {v}");
        }
    }
    if args.threads == Some(0) || file.threads == Some(0) {
        bail!("--threads must be positive");
    }
    Ok(RunConfig {
        suites,
        budget,
        format: args.format.or(file.format).unwrap_or(Format::Plain),
        out: args.out.clone().or(file.out),
        timing: args.timing || file.timing.unwrap_or(false),
        threads: args.threads.or(file.threads),
    })
}

pub fn verify(args: &VerifyArgs) -> u8 {
    let config = match resolve(args) {
        Ok(c) => c,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            return EXIT_USAGE;
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            return EXIT_IO;
        }
    };
    let cases: Vec<IdentityCase> = catalogue()
        .into_iter()
        .filter(|c| config.suites.contains(&c.suite))
        .collect();
    let reports = match config.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run_cases(&cases, &config.budget)),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        },
        None => run_cases(&cases, &config.budget),
    };
    let reports: Vec<VerifyReport> = if config.timing {
        reports
    } else {
        reports.iter().map(VerifyReport::canonical).collect()
    };

    let body = match render(&reports, config.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_IO;
        }
    };
    let summary = summarize(&reports);
    let written = match &config.out {
        Some(path) => fs::write(path, &body)
            .with_context(|| format!("writing {}", path.display()))
            .map(|_| print!("{summary}")),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes())
                .context("writing report")
                .map(|_| eprint!("{summary}"))
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return EXIT_IO;
    }
    if reports.iter().all(VerifyReport::passed) {
        0
    } else {
        EXIT_FAIL
    }
}

/// Per-case counts followed by the overall `PASS n/n` or `FAIL k/n` line.
fn summarize(reports: &[VerifyReport]) -> String {
    let mut by_case: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for r in reports {
        let e = by_case.entry(&r.case).or_default();
        e.1 += 1;
        if r.passed() {
            e.0 += 1;
        }
    }
    let mut s = String::new();
    for (case, (pass, total)) in &by_case {
        let tag = if pass == total { "PASS" } else { "FAIL" };
        s.push_str(&format!("{tag} {case} {pass}/{total}\n"));
    }
    let pass = reports.iter().filter(|r| r.passed()).count();
    let total = reports.len();
    if pass == total {
        s.push_str(&format!("PASS {pass}/{total}\n"));
    } else {
        s.push_str(&format!("FAIL {}/{total}\n", total - pass));
    }
    s
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
    }
}

fn render(reports: &[VerifyReport], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let timing = reports.iter().any(|r| r.elapsed_ms.is_some());
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec![
                "case",
                "params",
                "status",
                "first_diff_exponent",
                "lhs_coeff",
                "rhs_coeff",
                "error",
            ];
            if timing {
                header.push("elapsed_ms");
            }
            w.write_record(&header)?;
            for r in reports {
                let mut row = vec![
                    r.case.clone(),
                    r.params.to_string(),
                    status_name(r.status).to_string(),
                    r.first_diff_exponent.map(|e| e.to_string()).unwrap_or_default(),
                    r.lhs_coeff.clone().unwrap_or_default(),
                    r.rhs_coeff.clone().unwrap_or_default(),
                    r.error.clone().unwrap_or_default(),
                ];
                if timing {
                    row.push(r.elapsed_ms.map(|t| format!("{t:.3}")).unwrap_or_default());
                }
                w.write_record(&row)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Plain => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!("{:<5} {} [{}]", status_name(r.status), r.case, r.params));
                if let Some(e) = r.first_diff_exponent {
                    s.push_str(&format!(
                        " q^{e}: {} vs {}",
                        r.lhs_coeff.as_deref().unwrap_or("0"),
                        r.rhs_coeff.as_deref().unwrap_or("-")
                    ));
                }
                if let Some(err) = &r.error {
                    s.push_str(&format!(" {err}"));
                }
                if let Some(t) = r.elapsed_ms {
                    s.push_str(&format!(" {t:.3}ms"));
                }
                s.push('\n');
            }
            Ok(s)
        }
    }
}

pub fn list(suite: Option<&str>) -> u8 {
    let filter = match suite.map(str::parse::<Suite>).transpose() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut out = io::stdout().lock();
    for c in catalogue() {
        if filter.is_some_and(|s| s != c.suite) {
            continue;
        }
        let kind = format!("{:?}", c.kind).to_lowercase();
        if writeln!(out, "{}\t{}\t{}\t{}\t{}", c.id, c.suite, kind, c.domain, c.source).is_err() {
            return EXIT_IO;
        }
    }
    0
}
