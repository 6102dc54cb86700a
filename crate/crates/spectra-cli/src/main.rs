//! Command-line front end for the spectra library.
//!
//! Exit codes: 0 success, 2 argument errors (with a one-line diagnostic on
//! stderr), 1 internal errors. All big integers are printed as decimal
//! strings; identical invocations yield byte-identical output once timing
//! is suppressed with `--no-timing`.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use spectra::classical::{mu_semisimple, nu_semisimple, ClassicalFamily, GroupId};
use spectra::landau::landau_g;
use spectra::numtheory::{
    gcd_closed_form, primitive_prime_divisors, FactorConfig, GcdKind, SignedBase,
};
use spectra::oracle::{
    oracle_compare, oracle_matrix_group, oracle_sym_alt, MatrixFamily, MatrixGroupSpec,
};
use spectra::spectrum::Spectrum;
use spectra::sym::{mu_spectrum, omega_alternating, omega_symmetric, PermFamily};

#[derive(Parser)]
#[command(name = "spectra", version, about = "Element-order spectra of finite simple groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for set-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker-thread cap for spectrum generation.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Trial-division bound for integer factorization.
    #[arg(long, global = true)]
    factor_limit: Option<u64>,

    /// Seed for randomized factoring and oracle generation.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Suppress wall-clock fields so output is byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum PermFamilyArg {
    Sym,
    Alt,
}

impl From<PermFamilyArg> for PermFamily {
    fn from(f: PermFamilyArg) -> Self {
        match f {
            PermFamilyArg::Sym => PermFamily::Sym,
            PermFamilyArg::Alt => PermFamily::Alt,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassicalArg {
    Psl,
    Psu,
}

impl From<ClassicalArg> for ClassicalFamily {
    fn from(f: ClassicalArg) -> Self {
        match f {
            ClassicalArg::Psl => ClassicalFamily::Psl,
            ClassicalArg::Psu => ClassicalFamily::Psu,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GcdKindArg {
    /// (a^s − 1, a^t − 1)
    Mm,
    /// (a^s + 1, a^t − 1)
    Pm,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchSet {
    Omega,
    Mu,
    MuPprime,
}

#[derive(Subcommand)]
enum Command {
    /// ω(Sym_n) or ω(Alt_n); with --mu, the maximal subset μ.
    Spectrum(SpectrumArgs),
    /// μ(Sym_n) or μ(Alt_n): shorthand for `spectrum --mu`.
    Mu(SpectrumArgs),
    /// Semisimple orders ν of PSL_n(q) / PSU_n(q); with --mu, μ_{p'}.
    Classical {
        #[arg(long, value_enum)]
        family: ClassicalArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        mu: bool,
    },
    /// Landau's g(n): the largest order of an element of Sym_n.
    Landau {
        #[arg(long)]
        n: u64,
    },
    /// Primitive prime divisors R_i(a) with the canonical star value.
    Ppd {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        i: u64,
    },
    /// Closed-form gcd of a^s ± 1 and a^t − 1.
    Gcdform {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum)]
        kind: GcdKindArg,
    },
    /// Compare generated spectra against the brute-force oracles.
    OracleCheck,
    /// CSV benchmark sweep over a list of degrees.
    Bench {
        #[arg(long, value_enum)]
        family: BenchFamilyArg,
        /// Comma-separated degrees, e.g. 20,40,60.
        #[arg(long)]
        n: String,
        /// Field order for classical families.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, value_enum, default_value_t = BenchSet::Omega)]
        set: BenchSet,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamilyArg {
    Sym,
    Alt,
    Psl,
    Psu,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, value_enum)]
    family: PermFamilyArg,
    #[arg(long)]
    n: u64,
    /// Restrict to the divisibility-maximal subset.
    #[arg(long)]
    mu: bool,
}

#[derive(Serialize)]
struct Output {
    group: String,
    set: String,
    values: Vec<String>,
    count: usize,
    length_nats: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

/// Argument-level failure: exit 2 with a one-line diagnostic.
struct ArgError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Arg(ArgError(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e}");
            ExitCode::from(1)
        }
    }
}

enum Failure {
    Arg(ArgError),
    Internal(spectra::Error),
}

impl From<ArgError> for Failure {
    fn from(e: ArgError) -> Self {
        Failure::Arg(e)
    }
}

impl From<spectra::Error> for Failure {
    fn from(e: spectra::Error) -> Self {
        Failure::Internal(e)
    }
}

fn factor_config(cli: &Cli) -> FactorConfig {
    let mut cfg = FactorConfig::default();
    if let Some(limit) = cli.factor_limit {
        cfg.trial_limit = limit;
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    cfg
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Spectrum(args) => perm_spectrum(cli, args, args.mu),
        Command::Mu(args) => perm_spectrum(cli, args, true),
        Command::Classical { family, n, q, mu } => classical(cli, *family, *n, *q, *mu),
        Command::Landau { n } => landau(cli, *n),
        Command::Ppd { a, i } => ppd(cli, *a, *i),
        Command::Gcdform { a, s, t, kind } => gcdform(cli, *a, *s, *t, *kind),
        Command::OracleCheck => oracle_check(cli),
        Command::Bench { family, n, q, set } => bench(cli, *family, n, *q, *set),
    }
}

fn emit(cli: &Cli, group: String, set: &str, spectrum: &Spectrum, started: Instant) -> Result<(), Failure> {
    let elapsed_ms = (!cli.no_timing).then(|| started.elapsed().as_secs_f64() * 1e3);
    match cli.format {
        Format::Text => {
            for v in spectrum.values() {
                println!("{v}");
            }
        }
        Format::Json => {
            let out = Output {
                group,
                set: set.to_string(),
                values: spectrum.values().iter().map(|v| v.to_string()).collect(),
                count: spectrum.count(),
                length_nats: spectrum.length_nats(),
                elapsed_ms,
            };
            println!("{}", serde_json::to_string(&out).expect("serialization cannot fail"));
        }
    }
    Ok(())
}

fn perm_spectrum(cli: &Cli, args: &SpectrumArgs, mu: bool) -> Result<(), Failure> {
    if args.n < 1 {
        return Err(ArgError(format!("degree n must be at least 1, got {}", args.n)).into());
    }
    let family: PermFamily = args.family.into();
    let start = Instant::now();
    let spectrum = if mu {
        mu_spectrum(family, args.n, cli.threads)
    } else {
        match family {
            PermFamily::Sym => omega_symmetric(args.n, cli.threads),
            PermFamily::Alt => omega_alternating(args.n, cli.threads),
        }
    };
    let name = match family {
        PermFamily::Sym => format!("Sym_{}", args.n),
        PermFamily::Alt => format!("Alt_{}", args.n),
    };
    emit(cli, name, if mu { "mu" } else { "omega" }, &spectrum, start)
}

fn classical(cli: &Cli, family: ClassicalArg, n: u64, q: u64, mu: bool) -> Result<(), Failure> {
    let group = GroupId::new(family.into(), n, q)
        .map_err(|e| ArgError(format!("invalid group parameters: {e}")))?;
    if let Some(warning) = group.nonsimple_warning() {
        eprintln!("warning: {warning}");
    }
    let start = Instant::now();
    let spectrum = if mu {
        mu_semisimple(&group)?
    } else {
        nu_semisimple(&group)?
    };
    let name = match group.family {
        ClassicalFamily::Psl => format!("PSL_{n}({q})"),
        _ => format!("PSU_{n}({q})"),
    };
    emit(cli, name, if mu { "mu_pprime" } else { "nu" }, &spectrum, start)
}

fn landau(cli: &Cli, n: u64) -> Result<(), Failure> {
    if n < 1 {
        return Err(ArgError(format!("degree n must be at least 1, got {n}")).into());
    }
    let start = Instant::now();
    let g = landau_g(n as usize);
    let spectrum = Spectrum::from_values(vec![g]);
    emit(cli, format!("Sym_{n}"), "landau_g", &spectrum, start)
}

fn ppd(cli: &Cli, a: i64, i: u64) -> Result<(), Failure> {
    let base =
        SignedBase::new(a).map_err(|_| ArgError(format!("base a must satisfy |a| > 1, got {a}")))?;
    if i < 1 {
        return Err(ArgError(format!("index i must be at least 1, got {i}")).into());
    }
    let cfg = factor_config(cli);
    let start = Instant::now();
    let report = primitive_prime_divisors(base, i, &cfg)?;
    let star = report
        .star
        .as_ref()
        .map_or("undefined".to_string(), BigUint::to_string);
    let group = format!(
        "ppd(a={a},i={i},star={star},exceptional={})",
        report.exceptional
    );
    let spectrum = Spectrum::from_values(report.ppd_set);
    emit(cli, group, "ppd", &spectrum, start)
}

fn gcdform(cli: &Cli, a: i64, s: u32, t: u32, kind: GcdKindArg) -> Result<(), Failure> {
    let base =
        SignedBase::new(a).map_err(|_| ArgError(format!("base a must satisfy |a| > 1, got {a}")))?;
    if s < 1 || t < 1 {
        return Err(ArgError(format!("exponents must be positive, got s={s}, t={t}")).into());
    }
    let (kind, label) = match kind {
        GcdKindArg::Mm => (GcdKind::MinusMinus, format!("({a}^{s} - 1, {a}^{t} - 1)")),
        GcdKindArg::Pm => (GcdKind::PlusMinus, format!("({a}^{s} + 1, {a}^{t} - 1)")),
    };
    let start = Instant::now();
    let value = gcd_closed_form(base, s, t, kind);
    let spectrum = Spectrum::from_values(vec![value]);
    emit(cli, label, "gcd", &spectrum, start)
}

fn oracle_check(cli: &Cli) -> Result<(), Failure> {
    let mut failures = 0u32;
    let mut check = |name: &str, lhs: &Spectrum, rhs: &Spectrum| {
        let diff = oracle_compare(lhs, rhs);
        if diff.is_empty() {
            println!("PASS  {name}");
        } else {
            println!("FAIL  {name}  {diff:?}");
            failures += 1;
        }
    };

    for n in 1..=20u64 {
        check(
            &format!("omega(Sym_{n}) vs partition oracle"),
            &omega_symmetric(n, cli.threads),
            &oracle_sym_alt(n, PermFamily::Sym)?,
        );
        check(
            &format!("omega(Alt_{n}) vs partition oracle"),
            &omega_alternating(n, cli.threads),
            &oracle_sym_alt(n, PermFamily::Alt)?,
        );
    }

    for q in [5u64, 7, 9] {
        let mut spec = MatrixGroupSpec::new(MatrixFamily::Sl, 2, q);
        if let Some(seed) = cli.seed {
            spec.seed = seed;
        }
        let omega = oracle_matrix_group(&spec)?;
        let mu_formula = mu_semisimple(&GroupId::new(ClassicalFamily::Psl, 2, q)?)?;
        let mu_oracle = spectra::mu_filter(&spectra::oracle::p_prime_parts(
            &omega,
            GroupId::new(ClassicalFamily::Psl, 2, q)?.p,
        ));
        check(&format!("mu_pprime(PSL_2({q})) vs matrix oracle"), &mu_formula, &mu_oracle);
    }

    check(
        "omega(Alt_5) vs PSL_2(5) matrix oracle",
        &omega_alternating(5, cli.threads),
        &oracle_matrix_group(&MatrixGroupSpec::new(MatrixFamily::Sl, 2, 5))?,
    );

    if failures > 0 {
        return Err(Failure::Internal(spectra::Error::OracleCapExceeded(format!(
            "{failures} oracle comparisons failed"
        ))));
    }
    Ok(())
}

fn bench(
    cli: &Cli,
    family: BenchFamilyArg,
    degrees: &str,
    q: Option<u64>,
    set: BenchSet,
) -> Result<(), Failure> {
    let ns: Vec<u64> = degrees
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| ArgError(format!("bad degree list entry {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    if ns.is_empty() {
        return Err(ArgError("empty degree list".into()).into());
    }

    println!("family,n,q,set,count,length_nats,elapsed_ms,et_ratio");
    for &n in &ns {
        let (family_name, q_field, spectrum, elapsed, et_ratio);
        match family {
            BenchFamilyArg::Sym | BenchFamilyArg::Alt => {
                if !(1..=150).contains(&n) {
                    return Err(ArgError(format!(
                        "Sym/Alt bench degrees must be within 1..=150, got {n}"
                    ))
                    .into());
                }
                let perm = match family {
                    BenchFamilyArg::Sym => PermFamily::Sym,
                    _ => PermFamily::Alt,
                };
                let start = Instant::now();
                let s = match set {
                    BenchSet::Omega => match perm {
                        PermFamily::Sym => omega_symmetric(n, cli.threads),
                        PermFamily::Alt => omega_alternating(n, cli.threads),
                    },
                    BenchSet::Mu | BenchSet::MuPprime => mu_spectrum(perm, n, cli.threads),
                };
                elapsed = start.elapsed();
                family_name = if perm == PermFamily::Sym { "sym" } else { "alt" };
                q_field = String::new();
                // Erdős–Turán diagnostic, Sym rows only (report-only).
                et_ratio = if perm == PermFamily::Sym && n >= 2 {
                    format!(
                        "{:.6}",
                        (s.count() as f64).ln() / (n as f64 / (n as f64).ln()).sqrt()
                    )
                } else {
                    String::new()
                };
                spectrum = s;
            }
            BenchFamilyArg::Psl | BenchFamilyArg::Psu => {
                if !(2..=40).contains(&n) {
                    return Err(ArgError(format!(
                        "classical bench degrees must be within 2..=40, got {n}"
                    ))
                    .into());
                }
                let q = q.ok_or_else(|| ArgError("classical bench requires --q".into()))?;
                let fam = match family {
                    BenchFamilyArg::Psl => ClassicalFamily::Psl,
                    _ => ClassicalFamily::Psu,
                };
                let group = GroupId::new(fam, n, q)
                    .map_err(|e| ArgError(format!("invalid group parameters: {e}")))?;
                let start = Instant::now();
                let s = match set {
                    BenchSet::Omega => nu_semisimple(&group)?,
                    BenchSet::Mu | BenchSet::MuPprime => mu_semisimple(&group)?,
                };
                elapsed = start.elapsed();
                family_name = if fam == ClassicalFamily::Psl { "psl" } else { "psu" };
                q_field = q.to_string();
                et_ratio = String::new();
                spectrum = s;
            }
        }
        let set_name = match set {
            BenchSet::Omega => "omega",
            BenchSet::Mu => "mu",
            BenchSet::MuPprime => "mu_pprime",
        };
        let elapsed_field = if cli.no_timing {
            String::new()
        } else {
            format!("{:.3}", elapsed.as_secs_f64() * 1e3)
        };
        println!(
            "{family_name},{n},{q_field},{set_name},{},{:.6},{elapsed_field},{et_ratio}",
            spectrum.count(),
            spectrum.length_nats()
        );
    }
    Ok(())
}
