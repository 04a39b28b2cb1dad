//! Command-line front end.
//!
//! Exit codes: 0 = success / PASS verdict, 1 = error or FAIL verdict,
//! 2 = NOT_APPLICABLE or UNKNOWN verdict, 3 = fixture mismatch.  Argument
//! errors exit 1 (not clap's usual 2, which is taken by verdict statuses).

mod fixtures;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use swhzeta::bfun;
use swhzeta::padic::{self, GoodPrimeReport};
use swhzeta::poly::{parse_polynomial, Monomial, Polynomial, WeightVector};
use swhzeta::unipoly::RatFn;
use swhzeta::verdict::{self, VerdictStatus};
use swhzeta::{swh, toric, zeta};

use report::Report;

#[derive(Parser)]
#[command(
    name = "swhzeta",
    version,
    about = "Zeta functions, b-function facts and monodromy checks for semi-weighted-homogeneous singularities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Comma-separated variable names bound to the weights in order.
    /// Default: the identifiers appearing in the polynomial, sorted.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full analysis: invariants, candidate poles, b-facts, verdict.
    Analyze {
        f: String,
        /// Comma-separated positive integer weights, one per variable.
        weights: String,
        /// Skip the toric cross-check (exact poles, topological zeta).
        #[arg(long)]
        no_toric: bool,
    },
    /// Motivic and topological zeta functions of a plane curve via a toric
    /// resolution.
    Zeta {
        f: String,
        weights: String,
        /// Twist monomial as comma-separated exponents (default: none).
        #[arg(long)]
        twist: Option<String>,
        /// Also certify the exact pole set with orders.
        #[arg(long)]
        exact: bool,
    },
    /// Certified b-function facts (full b-function where proven, divisor
    /// facts otherwise).
    Bfun {
        f: String,
        weights: String,
        #[arg(long)]
        twist: Option<String>,
    },
    /// Monodromy check: candidate poles against certified b-function roots.
    Check {
        f: String,
        weights: String,
        #[arg(long)]
        twist: Option<String>,
        /// Fixture file to search for a stored reference b-function
        /// (default: the embedded corpus).
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// For each spectral number, search for twist monomials realizing it.
    Explore {
        f: String,
        weights: String,
        /// Cap on the total degree of twist exponents (default: 2d).
        #[arg(long)]
        bound: Option<u64>,
        /// Skip toric confirmation of the found candidates.
        #[arg(long)]
        no_toric: bool,
    },
    /// Cross-validate zeta-function count predictions against point counts
    /// mod p^m (plane curves and one-variable polynomials).
    Oracle {
        f: String,
        /// Comma-separated primes to test; bad primes are skipped.
        #[arg(long, value_delimiter = ',', default_values_t = vec![5u64, 7, 11, 13])]
        primes: Vec<u64>,
        /// Check m = 1..mmax.
        #[arg(long, default_value_t = 4)]
        mmax: u32,
    },
    /// Fixture corpus operations.
    Fixtures {
        #[command(subcommand)]
        cmd: FixturesCmd,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// Run every fixture in a JSON file and diff against expectations.
    Run { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json_mode = cli.format == Format::Json;
    match run(cli) {
        Ok((report, code)) => {
            print!("{}", report.render(json_mode));
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(Report, u8)> {
    let vars = cli.vars.as_deref();
    match &cli.cmd {
        Cmd::Analyze { f, weights, no_toric } => cmd_analyze(f, weights, vars, *no_toric),
        Cmd::Zeta { f, weights, twist, exact } => {
            cmd_zeta(f, weights, twist.as_deref(), *exact, vars)
        }
        Cmd::Bfun { f, weights, twist } => cmd_bfun(f, weights, twist.as_deref(), vars),
        Cmd::Check { f, weights, twist, fixtures } => {
            cmd_check(f, weights, twist.as_deref(), fixtures.as_deref(), vars)
        }
        Cmd::Explore { f, weights, bound, no_toric } => {
            cmd_explore(f, weights, *bound, *no_toric, vars)
        }
        Cmd::Oracle { f, primes, mmax } => cmd_oracle(f, primes, *mmax, vars),
        Cmd::Fixtures { cmd: FixturesCmd::Run { path } } => cmd_fixtures_run(path),
    }
}

/// Identifiers appearing in the text, deduplicated and sorted.  Sorted
/// order (not first-appearance order) is what makes `analyze "y^2-x^3" 2,3`
/// bind w(x) = 2, w(y) = 3 regardless of how the polynomial is written.
pub(crate) fn infer_vars(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut it = text.chars().peekable();
    while let Some(c) = it.next() {
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            name.push(c);
            while let Some(&c2) = it.peek() {
                if c2.is_ascii_alphanumeric() || c2 == '_' {
                    name.push(c2);
                    it.next();
                } else {
                    break;
                }
            }
            if !out.contains(&name) {
                out.push(name);
            }
        }
    }
    out.sort();
    out
}

struct Inputs {
    f_text: String,
    f: Polynomial,
    vars: Vec<String>,
    w: WeightVector,
}

fn assemble(f_text: &str, weights: &str, vars_override: Option<&[String]>) -> Result<Inputs> {
    let vars: Vec<String> = match vars_override {
        Some(v) if !v.is_empty() => v.to_vec(),
        _ => infer_vars(f_text),
    };
    if vars.is_empty() {
        bail!("no variables found in \"{f_text}\"");
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            bail!("variable \"{v}\" listed twice");
        }
    }
    let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    let f = parse_polynomial(f_text, &var_refs)
        .map_err(|e| anyhow!("cannot parse \"{f_text}\": {e}"))?;
    let w = parse_weights(weights, vars.len())?;
    Ok(Inputs { f_text: f_text.to_string(), f, vars, w })
}

fn parse_weights(text: &str, nvars: usize) -> Result<WeightVector> {
    let mut ws = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        ws.push(part.parse::<u64>().with_context(|| format!("bad weight \"{part}\""))?);
    }
    if ws.len() != nvars {
        bail!("{} weights given for {} variables", ws.len(), nvars);
    }
    WeightVector::new(ws).map_err(|e| anyhow!("bad weights: {e}"))
}

fn parse_twist(text: Option<&str>, nvars: usize) -> Result<Monomial> {
    let Some(text) = text else {
        return Ok(Monomial::one(nvars));
    };
    let mut es = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        es.push(part.parse::<u32>().with_context(|| format!("bad twist exponent \"{part}\""))?);
    }
    if es.len() != nvars {
        bail!("{} twist exponents given for {} variables", es.len(), nvars);
    }
    Ok(Monomial::new(es))
}

fn analyze_input(inp: &Inputs) -> Result<swh::SwhAnalysis> {
    swh::analyze(&inp.f, &inp.w)
        .map_err(|e| anyhow!("\"{}\" with weights ({}) is out of scope: {e}", inp.f_text, {
            let parts: Vec<String> = inp.w.entries().iter().map(u64::to_string).collect();
            parts.join(", ")
        }))
}

fn status_code(status: VerdictStatus) -> u8 {
    match status {
        VerdictStatus::Pass => 0,
        VerdictStatus::Fail => 1,
        VerdictStatus::NotApplicable | VerdictStatus::Unknown => 2,
    }
}

fn cmd_analyze(
    f_text: &str,
    weights: &str,
    vars_override: Option<&[String]>,
    no_toric: bool,
) -> Result<(Report, u8)> {
    let inp = assemble(f_text, weights, vars_override)?;
    let analysis = analyze_input(&inp)?;
    let verdict = verdict::smc_check(&analysis);
    let nondeg = swh::newton_nondegenerate(&inp.f).ok().map(|r| r.nondegenerate);

    let mut toric_exact = None;
    let mut topological = None;
    let mut toric_note = None;
    if no_toric {
        toric_note = Some("skipped (--no-toric)".to_string());
    } else if inp.f.nvars() != 2 {
        toric_note = Some("only available for plane curves (2 variables)".to_string());
    } else if nondeg != Some(true) {
        toric_note =
            Some("skipped: the Newton boundary is degenerate, an edge resolution would not certify".to_string());
    } else {
        let res = toric::snc_resolution(&inp.f, &Monomial::one(2))
            .map_err(|e| anyhow!("toric resolution failed: {e}"))?;
        let z = zeta::assemble_motivic(&res);
        toric_exact = Some(z.poles().map_err(|e| anyhow!("pole certification failed: {e}"))?);
        topological = Some(zeta::topological(&res));
    }

    let code = status_code(verdict.status);
    let data = report::AnalyzeData {
        f_text: &inp.f_text,
        vars: &inp.vars,
        w: &inp.w,
        analysis: &analysis,
        newton_nondegenerate: nondeg,
        b_factors: &verdict.b_factors,
        toric_exact: toric_exact.as_ref(),
        topological: topological.as_ref(),
        toric_note: toric_note.as_deref(),
        verdict: &verdict,
    };
    Ok((report::analyze_report(&data), code))
}

fn cmd_zeta(
    f_text: &str,
    weights: &str,
    twist: Option<&str>,
    exact: bool,
    vars_override: Option<&[String]>,
) -> Result<(Report, u8)> {
    let inp = assemble(f_text, weights, vars_override)?;
    let beta = parse_twist(twist, inp.vars.len())?;
    if inp.f.nvars() != 2 {
        bail!("the toric zeta path needs a plane curve (2 variables), got {}", inp.f.nvars());
    }
    let res = toric::snc_resolution(&inp.f, &beta)
        .map_err(|e| anyhow!("toric resolution failed: {e}"))?;
    let motivic = zeta::assemble_motivic(&res);
    let topological = zeta::topological(&res);
    let exact_poles = if exact {
        Some(motivic.poles().map_err(|e| anyhow!("pole certification failed: {e}"))?)
    } else {
        None
    };
    let data = report::ZetaData {
        f_text: &inp.f_text,
        vars: &inp.vars,
        w: &inp.w,
        twist: &beta,
        motivic: &motivic,
        topological: &topological,
        exact: exact_poles.as_ref(),
    };
    Ok((report::zeta_report(&data), 0))
}

fn cmd_bfun(
    f_text: &str,
    weights: &str,
    twist: Option<&str>,
    vars_override: Option<&[String]>,
) -> Result<(Report, u8)> {
    let inp = assemble(f_text, weights, vars_override)?;
    let beta = parse_twist(twist, inp.vars.len())?;
    let analysis = analyze_input(&inp)?;
    let b = if beta.is_constant() {
        if analysis.flags.is_weighted_homogeneous {
            bfun::qh_bfunction(&analysis)
                .map_err(|e| anyhow!("b-function computation failed: {e}"))?
        } else {
            bfun::swh_divisor(&analysis)
        }
    } else {
        bfun::twisted_facts(&analysis, &beta)
            .map_err(|e| anyhow!("no certified twisted facts: {e}"))?
    };
    let data = report::BfunData {
        f_text: &inp.f_text,
        vars: &inp.vars,
        w: &inp.w,
        twist: &beta,
        b: &b,
    };
    Ok((report::bfun_report(&data), 0))
}

fn cmd_check(
    f_text: &str,
    weights: &str,
    twist: Option<&str>,
    fixtures_path: Option<&std::path::Path>,
    vars_override: Option<&[String]>,
) -> Result<(Report, u8)> {
    let inp = assemble(f_text, weights, vars_override)?;
    let beta = parse_twist(twist, inp.vars.len())?;
    let analysis = analyze_input(&inp)?;
    let corpus = match fixtures_path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("cannot read {}", p.display()))?;
            fixtures::parse_corpus(&text)?
        }
        None => fixtures::embedded_corpus(),
    };
    let reference = fixtures::reference_bfactors(&corpus, &inp.f, &inp.w, &beta);
    let verdict =
        verdict::twisted_check(&analysis, &beta, reference.as_ref().map(|(_, b)| b));
    let code = status_code(verdict.status);
    let data = report::CheckData {
        f_text: &inp.f_text,
        vars: &inp.vars,
        w: &inp.w,
        twist: &beta,
        reference: reference.as_ref().map(|(name, _)| name.as_str()),
        verdict: &verdict,
    };
    Ok((report::check_report(&data), code))
}

fn cmd_explore(
    f_text: &str,
    weights: &str,
    bound: Option<u64>,
    no_toric: bool,
    vars_override: Option<&[String]>,
) -> Result<(Report, u8)> {
    let inp = assemble(f_text, weights, vars_override)?;
    let analysis = analyze_input(&inp)?;
    let bound = bound.unwrap_or(2 * analysis.d);
    let rep = verdict::question_explore(&analysis, bound, !no_toric);
    let data = report::ExploreData {
        f_text: &inp.f_text,
        vars: &inp.vars,
        w: &inp.w,
        report: &rep,
    };
    Ok((report::explore_report(&data), 0))
}

fn cmd_oracle(
    f_text: &str,
    primes: &[u64],
    mmax: u32,
    vars_override: Option<&[String]>,
) -> Result<(Report, u8)> {
    if mmax < 1 {
        bail!("mmax must be at least 1");
    }
    let vars: Vec<String> = match vars_override {
        Some(v) if !v.is_empty() => v.to_vec(),
        _ => infer_vars(f_text),
    };
    if vars.is_empty() {
        bail!("no variables found in \"{f_text}\"");
    }
    let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    let f = parse_polynomial(f_text, &var_refs)
        .map_err(|e| anyhow!("cannot parse \"{f_text}\": {e}"))?;
    let n = f.nvars();
    let beta = Monomial::one(n);
    let res = match n {
        1 => toric::univariate_resolution(&f, &beta),
        2 => toric::snc_resolution(&f, &beta),
        _ => bail!("the point-count oracle needs 1 or 2 variables, got {n}"),
    }
    .map_err(|e| anyhow!("toric resolution failed: {e}"))?;

    let mut prime_data: Vec<(GoodPrimeReport, Option<RatFn>, Vec<(u32, String, String)>)> =
        Vec::with_capacity(primes.len());
    for &p in primes {
        let rep = padic::good_prime(&f, &beta, p, None);
        if !rep.good {
            prime_data.push((rep, None, Vec::new()));
            continue;
        }
        let ig = zeta::igusa_specialize(&res, p)
            .map_err(|e| anyhow!("Igusa specialization failed at p = {p}: {e}"))?;
        let predicted = zeta::predict_counts(&ig, p, n as u32, mmax)
            .map_err(|e| anyhow!("count prediction failed at p = {p}: {e}"))?;
        let mut rows = Vec::new();
        for m in 1..=mmax {
            let counted = padic::count_mod(&f, p, m)
                .map_err(|e| anyhow!("point count failed at p = {p}, m = {m}: {e}"))?;
            rows.push((m, predicted[(m - 1) as usize].to_string(), counted.to_string()));
        }
        prime_data.push((rep, Some(ig), rows));
    }
    if prime_data.iter().all(|(r, _, _)| !r.good) {
        bail!("no good primes among the requested set");
    }
    let all_match = prime_data
        .iter()
        .all(|(_, _, rows)| rows.iter().all(|(_, predicted, counted)| predicted == counted));
    let primes_view: Vec<report::OraclePrime> = prime_data
        .iter()
        .map(|(rep, ig, rows)| report::OraclePrime {
            report: rep,
            igusa: ig.as_ref(),
            rows: rows.clone(),
        })
        .collect();
    let data = report::OracleData { f_text, vars: &vars, mmax, primes: &primes_view };
    Ok((report::oracle_report(&data), u8::from(!all_match)))
}

fn cmd_fixtures_run(path: &std::path::Path) -> Result<(Report, u8)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let corpus = fixtures::parse_corpus(&text)?;
    let summary = fixtures::run_corpus(&corpus)?;
    let code = if summary.mismatched() > 0 { 3 } else { 0 };
    Ok((report::fixtures_report(&path.display().to_string(), &summary), code))
}
