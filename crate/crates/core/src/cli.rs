//! Command-line front end. `run` is the whole program minus process exit, so
//! tests can drive it with in-memory buffers.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::chain::{build_chain, ChainConfig, ChainError, GlicciCertificate};
use crate::homology::{cm_check_ideal, FieldSpec, HomologyError, ReisnerCertificate};
use crate::matroid::{Matroid, MatroidError};
use crate::monomial::{
    default_vars, matroid_ideal, parse_monomial, slightly_mixed_power, IdealError, IdealJson, Monomial, MonomialIdeal,
    PrimaryDecomposition, Side,
};
use crate::poly::Budget;

pub const BUDGET_ENV: &str = "MATROID_LIAISON_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "matroid-liaison",
    version,
    about = "Symbolic powers of matroid ideals: Cohen-Macaulay checks and glicci chains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Matroid file utilities.
    Matroid {
        #[command(subcommand)]
        command: MatroidCommand,
    },
    /// Print the generators and primary decomposition of J^(l) : N.
    Ideal(IdealArgs),
    /// Decide Cohen-Macaulayness of J^(l) : N, or of an ideal file.
    Cm(CmArgs),
    /// Build and verify a glicci chain for J^(l) : N.
    Glicci(GlicciArgs),
}

#[derive(Debug, Subcommand)]
enum MatroidCommand {
    /// Check the basis-exchange axiom.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Sr,
    Cover,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Sr => Side::Sr,
            SideArg::Cover => Side::Cover,
        }
    }
}

#[derive(Debug, Args)]
struct IdealArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "cover")]
    side: SideArg,
    /// Symbolic power exponent.
    #[arg(long = "l", default_value_t = 1)]
    ell: u32,
    /// Squarefree monomial N, e.g. "x1*x3"; empty for N = 1.
    #[arg(long, default_value = "")]
    colon: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CmArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    /// q for the rationals, fp:<p> for a prime field.
    #[arg(long, default_value = "q")]
    field: FieldSpec,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Args)]
struct GlicciArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    #[arg(long, default_value = "q")]
    field: FieldSpec,
    /// Run the Gröbner-basis checks as well.
    #[arg(long)]
    deep: bool,
    /// Maximum S-pairs per Gröbner computation.
    #[arg(long)]
    budget_pairs: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Keep per-step timings in the output.
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: malformed JSON: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("--colon must be a squarefree monomial, got `{0}`")]
    NotSquarefreeColon(String),
    #[error("{0}")]
    Config(String),
}

/// Parsed input file: a matroid description or an explicit monomial ideal.
enum Input {
    Matroid(Matroid),
    Ideal(MonomialIdeal),
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: shown, source })
}

fn read_input(path: &Path) -> Result<Input, CliError> {
    let value = read_json(path)?;
    if value.get("gens").is_some() {
        let json: IdealJson = serde_json::from_value(value)
            .map_err(|source| CliError::Json { path: path.display().to_string(), source })?;
        return Ok(Input::Ideal(MonomialIdeal::from_json(&json)?));
    }
    Ok(Input::Matroid(Matroid::from_json(&value)?))
}

fn read_matroid(path: &Path) -> Result<Matroid, CliError> {
    match read_input(path)? {
        Input::Matroid(m) => Ok(m),
        Input::Ideal(_) => Err(CliError::Config(format!("{}: expected a matroid file", path.display()))),
    }
}

fn parse_colon(text: &str, vars: &[String]) -> Result<Monomial, CliError> {
    let n = parse_monomial(text, vars)?;
    if !n.is_squarefree() {
        return Err(CliError::NotSquarefreeColon(text.to_string()));
    }
    Ok(n)
}

struct Built {
    vars: Vec<String>,
    colon: Monomial,
    ideal: MonomialIdeal,
    decomposition: PrimaryDecomposition,
}

fn build_ideal(m: &Matroid, a: &IdealArgs) -> Result<Built, CliError> {
    let vars = default_vars(m.n());
    let colon = parse_colon(&a.colon, &vars)?;
    let (_, radical) = matroid_ideal(m, a.side.into());
    let (ideal, decomposition) = slightly_mixed_power(&radical, a.ell, &colon, &vars)?;
    Ok(Built { vars, colon, ideal, decomposition })
}

fn resolve_budget(flag: Option<usize>) -> Result<Budget, CliError> {
    let mut budget = Budget::default();
    if let Ok(text) = std::env::var(BUDGET_ENV) {
        let pairs: usize = text
            .trim()
            .parse()
            .map_err(|_| CliError::Config(format!("{BUDGET_ENV} must be a positive integer, got `{text}`")))?;
        budget.max_pairs = Some(pairs);
    }
    if let Some(pairs) = flag {
        budget.max_pairs = Some(pairs);
    }
    if budget.max_pairs == Some(0) {
        return Err(CliError::Config("pair budget must be positive".into()));
    }
    Ok(budget)
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(CliError::Config("--jobs must be positive".into())),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| CliError::Config(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("certificate types serialize")
}

#[derive(Serialize)]
struct ValidateReport {
    valid: bool,
    n: Option<usize>,
    rank: Option<usize>,
    witness: Option<ExchangeWitness>,
}

#[derive(Serialize)]
struct ExchangeWitness {
    f: Vec<usize>,
    g: Vec<usize>,
    v: usize,
}

fn cmd_validate(path: &Path, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let value = read_json(path)?;
    let (report, code) = match Matroid::from_json(&value) {
        Ok(m) => (ValidateReport { valid: true, n: Some(m.n()), rank: Some(m.rank()), witness: None }, EXIT_OK),
        Err(MatroidError::ExchangeAxiomViolation { f, g, v }) => (
            ValidateReport { valid: false, n: None, rank: None, witness: Some(ExchangeWitness { f, g, v }) },
            EXIT_PROPERTY,
        ),
        Err(e) => return Err(e.into()),
    };
    if json {
        writeln!(out, "{}", to_json(&report)).ok();
    } else if let Some(w) = &report.witness {
        writeln!(out, "invalid: exchange axiom fails").ok();
        writeln!(out, "F = {:?}, G = {:?}, v = {}: no w in G \\ F makes F - v + w a basis", w.f, w.g, w.v).ok();
    } else {
        writeln!(out, "valid matroid: n = {}, rank = {}", report.n.unwrap_or(0), report.rank.unwrap_or(0)).ok();
    }
    Ok(code)
}

#[derive(Serialize)]
struct IdealReport {
    vars: Vec<String>,
    ell: u32,
    colon: Vec<u32>,
    gens: Vec<Vec<u32>>,
    decomposition: crate::monomial::DecompositionJson,
}

fn prime_text(prime: &[usize], vars: &[String]) -> String {
    let names: Vec<&str> = prime.iter().map(|&i| vars[i - 1].as_str()).collect();
    format!("({})", names.join(", "))
}

fn cmd_ideal(a: &IdealArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let m = read_matroid(&a.path)?;
    let b = build_ideal(&m, a)?;
    if a.json {
        let report = IdealReport {
            vars: b.vars.clone(),
            ell: a.ell,
            colon: b.colon.0.clone(),
            gens: b.ideal.gens().iter().map(|g| g.0.clone()).collect(),
            decomposition: b.decomposition.to_json(),
        };
        writeln!(out, "{}", to_json(&report)).ok();
    } else {
        writeln!(out, "ideal: {}", b.ideal).ok();
        writeln!(out, "generators: {}", b.ideal.gens().len()).ok();
        let comps: Vec<String> = b
            .decomposition
            .to_json()
            .components
            .iter()
            .map(|c| {
                if c.exp == 1 {
                    prime_text(&c.prime, &b.vars)
                } else {
                    format!("{}^{}", prime_text(&c.prime, &b.vars), c.exp)
                }
            })
            .collect();
        let shown = if comps.is_empty() { "(1)".to_string() } else { comps.join(" ∩ ") };
        writeln!(out, "decomposition: {shown}").ok();
    }
    Ok(EXIT_OK)
}

fn cmd_cm(a: &CmArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let ideal = match read_input(&a.ideal.path)? {
        Input::Matroid(m) => build_ideal(&m, &a.ideal)?.ideal,
        Input::Ideal(i) => i,
    };
    let field = a.field;
    let (cm, cert) = with_jobs(a.jobs, || cm_check_ideal(&ideal, field))??;
    if a.ideal.json {
        writeln!(out, "{}", to_json(&cert)).ok();
    } else {
        write_cm_text(&ideal, &cert, out);
    }
    Ok(if cm { EXIT_OK } else { EXIT_PROPERTY })
}

fn write_cm_text(ideal: &MonomialIdeal, cert: &ReisnerCertificate, out: &mut dyn Write) {
    writeln!(out, "ideal: {ideal}").ok();
    writeln!(out, "cm: {} over {}", cert.cm, cert.field).ok();
    writeln!(out, "complexes checked: {}", cert.checked_links).ok();
    if let Some(w) = &cert.witness {
        let face = w.face_vars.clone().unwrap_or_else(|| w.face.iter().map(|v| v.to_string()).collect());
        match &w.degree {
            Some(deg) => {
                writeln!(out, "witness: degree {deg:?}, negative part {{{}}}, H~_{} != 0", face.join(", "), w.dim)
            }
            None => writeln!(out, "witness: face {{{}}}, H~_{} of its link != 0", face.join(", "), w.dim),
        }
        .ok();
    }
}

fn cmd_glicci(a: &GlicciArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let m = read_matroid(&a.ideal.path)?;
    let vars = default_vars(m.n());
    let colon = parse_colon(&a.ideal.colon, &vars)?;
    let budget = resolve_budget(a.budget_pairs)?;
    let deadline = match a.timeout {
        Some(0) => return Err(CliError::Config("--timeout must be positive".into())),
        Some(s) => Some(Instant::now() + Duration::from_secs(s)),
        None => None,
    };
    let cfg = ChainConfig { deep: a.deep, budget, field: a.field, deadline };
    let side: Side = a.ideal.side.into();
    let ell = a.ideal.ell;
    let mut cert = with_jobs(a.jobs, || build_chain(&m, side, ell, &colon, &cfg))??;
    if !a.timings {
        for s in &mut cert.steps {
            if let Some(l) = s.verdicts.lift.as_mut() {
                l.elapsed_ms = None;
            }
        }
    }
    if a.ideal.json {
        writeln!(out, "{}", to_json(&cert)).ok();
    } else {
        write_glicci_text(&cert, out);
    }
    Ok(glicci_exit_code(&cert))
}

fn glicci_exit_code(cert: &GlicciCertificate) -> i32 {
    if cert.is_verified() {
        EXIT_OK
    } else if cert.status.starts_with("failed") {
        EXIT_PROPERTY
    } else {
        EXIT_BUDGET
    }
}

fn write_glicci_text(cert: &GlicciCertificate, out: &mut dyn Write) {
    let i = &cert.input;
    let colon = if i.colon == "1" || i.colon.is_empty() { "1".to_string() } else { i.colon.clone() };
    writeln!(out, "input: n = {}, side = {:?}, l = {}, N = {colon}", i.n, i.side, i.ell).ok();
    if !cert.normalized.dropped.is_empty() {
        writeln!(out, "dropped variables: {}", cert.normalized.dropped.join(", ")).ok();
    }
    for e in &cert.events {
        writeln!(out, "event: {e}").ok();
    }
    for (k, s) in cert.steps.iter().enumerate() {
        writeln!(out, "step {}: l = {}, N' = {}, y = {}", k + 1, s.ell, s.colon, s.y).ok();
        writeln!(out, "  J  = ({})", s.j_gens.join(", ")).ok();
        writeln!(out, "  I0 = ({})", s.i0_gens.join(", ")).ok();
        writeln!(out, "  K  = ({})", s.k_gens.join(", ")).ok();
        if !s.iprime_gens.is_empty() {
            writeln!(out, "  I' = ({})", s.iprime_gens.join(", ")).ok();
        }
        let v = &s.verdicts;
        writeln!(out, "  sum of exponents: {} -> {}", v.sum_before, v.sum_after).ok();
        let checks: Vec<String> = v.fields().iter().map(|(name, c)| format!("{name}={c}")).collect();
        writeln!(out, "  checks: {}", checks.join(" ")).ok();
    }
    match &cert.terminal {
        Some(t) => writeln!(out, "terminal: {:?} ({})", t.kind, t.gens.join(", ")),
        None => writeln!(out, "terminal: none"),
    }
    .ok();
    for f in &cert.flags {
        writeln!(out, "flag: {f}").ok();
    }
    writeln!(out, "status: {}", cert.status).ok();
}

/// Runs the program on `args` (including the binary name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").ok();
            } else {
                write!(out, "{text}").ok();
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Matroid { command: MatroidCommand::Validate { path, json } } => cmd_validate(path, *json, out),
        Command::Ideal(a) => cmd_ideal(a, out),
        Command::Cm(a) => cmd_cm(a, out),
        Command::Glicci(a) => cmd_glicci(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            EXIT_INPUT
        }
    }
}
