use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use wrlat_core::certify::Fault;
use wrlat_core::decompose::{decompose_prime, stable_subspace_primes, PrimeDecomposition};
use wrlat_core::numtheory::is_prime;
use wrlat_core::survey::{self, OutputFormat, ScanConfig, WrRecord};
use wrlat_core::{Error, Field};

#[derive(Parser)]
#[command(name = "wrlat", version, about = "Well-rounded ideal lattices of cyclic cubic and quartic fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cyclic cubic fields.
    Cubic {
        #[command(subcommand)]
        action: CubicAction,
    },
    /// Cyclic quartic fields.
    Quartic {
        #[command(subcommand)]
        action: QuarticAction,
    },
    /// Factor a rational prime in a field.
    Decompose {
        /// `cubic:m` or `quartic:a,b,c,d`.
        #[arg(long)]
        field: String,
        #[arg(long)]
        prime: u64,
        /// Compare with the stable-subspace enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide well-roundedness of every primitive ideal up to a norm bound.
    Scan(ScanArgs),
    /// Compare every closed-form WR criterion with enumeration.
    Crosscheck {
        #[command(flatten)]
        common: ScanArgs,
        /// Double the cubic upper bounds; the run must then fail.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Search odd-discriminant fields for WR ideals whose norm misses the discriminant.
    Conjecture(ScanArgs),
}

#[derive(Subcommand)]
enum CubicAction {
    Construct {
        #[arg(short)]
        m: u64,
    },
}

#[derive(Subcommand)]
enum QuarticAction {
    Construct {
        #[arg(short, allow_negative_numbers = true)]
        a: i64,
        #[arg(short)]
        b: i64,
        #[arg(short)]
        c: i64,
        #[arg(short)]
        d: i64,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// Selectors separated by `;`: `cubic:m`, `cubic:lo..hi`, `quartic:a,b,c,d`, `quartic-box:A,D`.
    #[arg(long)]
    fields: Option<String>,
    #[arg(long)]
    norm_bound: Option<u64>,
    #[arg(long)]
    prime_bound: Option<u64>,
    #[arg(long, conflicts_with_all = ["csv", "text"])]
    json: bool,
    #[arg(long, conflicts_with = "text")]
    csv: bool,
    #[arg(long)]
    text: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads, 0 for one per core.
    #[arg(long)]
    jobs: Option<usize>,
    /// TOML file with the same keys; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl ScanArgs {
    fn format(&self) -> Option<OutputFormat> {
        if self.json {
            Some(OutputFormat::Json)
        } else if self.csv {
            Some(OutputFormat::Csv)
        } else if self.text {
            Some(OutputFormat::Text)
        } else {
            None
        }
    }

    fn resolve(&self, default_format: OutputFormat) -> Result<ScanConfig, Failure> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                ScanConfig::from_toml(&text)?
            }
            None => ScanConfig { format: default_format, ..ScanConfig::default() },
        };
        if let Some(f) = &self.fields {
            cfg.fields = f.clone();
        }
        if let Some(n) = self.norm_bound {
            cfg.norm_bound = n;
        }
        if let Some(p) = self.prime_bound {
            cfg.prime_bound = p;
        }
        if let Some(f) = self.format() {
            cfg.format = f;
        }
        if self.out.is_some() {
            cfg.out = self.out.clone();
        }
        if let Some(j) = self.jobs {
            cfg.jobs = j;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

enum Failure {
    /// Bad input, exit 2.
    Usage(String),
    /// Runtime error, exit 1.
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidConductor(_) | Error::InvalidQuartic(_) | Error::InvalidArgument(_) | Error::PrimeTooLarge(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Returns whether the command succeeded without findings.
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Cubic { action: CubicAction::Construct { m } } => {
            print!("{}", describe(&Field::cubic(m)?));
            Ok(true)
        }
        Command::Quartic { action: QuarticAction::Construct { a, b, c, d } } => {
            print!("{}", describe(&Field::quartic(a, b, c, d)?));
            Ok(true)
        }
        Command::Decompose { field, prime, oracle } => decompose(&field, prime, oracle),
        Command::Scan(args) => scan(&args.resolve(OutputFormat::Json)?),
        Command::Crosscheck { common, inject_fault } => {
            let fault = if inject_fault { Fault::DoubleUpperBound } else { Fault::None };
            crosscheck(&common.resolve(OutputFormat::Text)?, fault)
        }
        Command::Conjecture(args) => conjecture(&args.resolve(OutputFormat::Text)?),
    }
}

fn describe(field: &Field) -> String {
    let mut s = String::new();
    match field {
        Field::Cubic(f) => {
            let _ = writeln!(s, "field: {}", f.id());
            let _ = writeln!(s, "m = {}", f.m);
            let _ = writeln!(s, "df = {}", f.df_string());
            let _ = writeln!(s, "disc = {}", field.disc());
            let basis = if f.nine_divides_m { "{1, alpha, sigma(alpha)}, 9 | m" } else { "{1, alpha, sigma(alpha)}" };
            let _ = writeln!(s, "integral basis: {basis}");
            let _ = writeln!(s, "index = {}", f.index());
        }
        Field::Quartic(f) => {
            let _ = writeln!(s, "field: {}", f.id());
            let _ = writeln!(s, "(a, b, c, d) = ({}, {}, {}, {})", f.a, f.b, f.c, f.d);
            let _ = writeln!(s, "df = {}", f.df_string());
            let _ = writeln!(s, "disc = {}", f.disc);
            let _ = writeln!(s, "signature: {}", if f.totally_real { "totally real" } else { "totally imaginary" });
            let _ = writeln!(s, "case {}", f.basis_case);
            let _ = writeln!(s, "index = {}", isqrt(f.index_id4 as u64));
        }
    }
    s
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn decompose(id: &str, p: u64, oracle: bool) -> Result<bool, Failure> {
    if !is_prime(p) {
        return Err(Failure::Usage(format!("--prime {p} is not prime")));
    }
    let field = Arc::new(Field::parse(id)?);
    let dec = decompose_prime(&field, p)?;
    print!("{}", listing(&field, &dec));
    if !oracle {
        return Ok(true);
    }
    let reference = stable_subspace_primes(&field, p)?;
    let agree = dec.same_primes(&reference);
    println!("oracle: {} ({})", if agree { "agree" } else { "DISAGREE" }, reference.tag());
    Ok(agree)
}

fn listing(field: &Field, dec: &PrimeDecomposition) -> String {
    let mut s = String::new();
    let norms: Vec<u64> = dec.factors.iter().map(|f| f.ideal.norm()).collect();
    let norm = if norms.len() == 1 { format!("N(P)={}", norms[0]) } else { format!("N(Pi)={}", norms[0]) };
    let _ = writeln!(s, "{} p={}: {}, {}", field.id(), dec.p, dec.tag(), norm);
    let _ = writeln!(s, "source: {}", dec.source);
    if let Some(note) = &dec.note {
        let _ = writeln!(s, "note: {note}");
    }
    for (i, f) in dec.factors.iter().enumerate() {
        let _ = writeln!(s, "P{}: e={} f={} {}", i + 1, f.e, f.f, f.ideal);
    }
    s
}

fn emit(cfg: &ScanConfig, body: &str) -> Result<(), Failure> {
    match &cfg.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Runtime(e.to_string()))
}

fn record_lines(records: &[WrRecord]) -> String {
    records.iter().map(|r| format!("{r}\n")).collect()
}

fn failed_lines(failed: &[(String, String)]) -> String {
    failed.iter().map(|(id, e)| format!("FAILED {id}: {e}\n")).collect()
}

fn scan(cfg: &ScanConfig) -> Result<bool, Failure> {
    let out = survey::scan(cfg)?;
    let body = match cfg.format {
        OutputFormat::Json => to_json(&out)?,
        OutputFormat::Csv => survey::records_to_csv(&out.records)?,
        OutputFormat::Text => {
            let s = &out.summary;
            format!(
                "{}{}fields={} ideals={} wr={} predicate_mismatches={}\n",
                record_lines(&out.records),
                failed_lines(&s.failed_fields),
                s.fields,
                s.ideals,
                s.wr,
                s.predicate_mismatches
            )
        }
    };
    emit(cfg, &body)?;
    for (id, e) in &out.summary.failed_fields {
        eprintln!("field {id} failed: {e}");
    }
    Ok(out.is_clean())
}

fn crosscheck(cfg: &ScanConfig, fault: Fault) -> Result<bool, Failure> {
    let report = survey::crosscheck(cfg, fault)?;
    let body = match cfg.format {
        OutputFormat::Json => to_json(&report)?,
        OutputFormat::Csv => return Err(Failure::Usage("crosscheck has no csv output".into())),
        OutputFormat::Text => {
            let mut s: String = report.checks.iter().map(|c| format!("{c}\n")).collect();
            s += &failed_lines(&report.failed_fields);
            let failed = report.checks.iter().filter(|c| !c.pass).count();
            let _ = writeln!(s, "checks={} failed={} failed_fields={}", report.checks.len(), failed, report.failed_fields.len());
            let _ = writeln!(s, "{}", if report.passed() { "PASS" } else { "FAIL" });
            s
        }
    };
    emit(cfg, &body)?;
    Ok(report.passed())
}

fn conjecture(cfg: &ScanConfig) -> Result<bool, Failure> {
    let report = survey::conjecture(cfg)?;
    let s = &report.summary;
    let body = match cfg.format {
        OutputFormat::Json => to_json(&report)?,
        OutputFormat::Csv => survey::records_to_csv(&report.records)?,
        OutputFormat::Text => {
            let mut t = String::new();
            for r in &report.counterexamples {
                let _ = writeln!(t, "COUNTEREXAMPLE {r}");
            }
            for r in &report.expected_nonconforming {
                let _ = writeln!(t, "even-disc {r}");
            }
            t += &failed_lines(&s.failed_fields);
            let _ = writeln!(
                t,
                "odd_fields={} even_fields={} wr_ideals={} counterexamples={} expected_nonconforming={}",
                s.odd_fields, s.even_fields, s.wr_ideals, s.counterexamples, s.expected_nonconforming
            );
            t
        }
    };
    emit(cfg, &body)?;
    Ok(s.counterexamples == 0 && s.failed_fields.is_empty())
}
