use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zqcodes::closed_form::{
    macdonald32_wdist, macdonald_params, simplex2_wdist, simplex3_wdist, simplex_params,
};
use zqcodes::code::{CodeParameters, WeightDistribution};
use zqcodes::construct::{CodeFamily, CodeSpec};
use zqcodes::{Error as LibError, DEFAULT_ENUM_CAP};

use zqcodes_cli::harness::{run_verification, VerifyConfig};
use zqcodes_cli::output::{render_csv, MatrixDocument, WdistDocument};

/// Environment variable overriding the default enumeration cap; the --cap
/// flag wins over it.
const CAP_ENV_VAR: &str = "ZQCODES_MAX_ENUM";

#[derive(Parser)]
#[command(
    name = "zqcodes",
    version,
    about = "Simplex and MacDonald codes over Z_q: canonical generator matrices, \
             exact weight distributions by enumeration or closed form, and a \
             verification sweep comparing the two"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Simplex,
    Macdonald,
}

impl From<FamilyArg> for CodeFamily {
    fn from(arg: FamilyArg) -> Self {
        match arg {
            FamilyArg::Simplex => CodeFamily::Simplex,
            FamilyArg::Macdonald => CodeFamily::Macdonald,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixOutputArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WdistOutputArg {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical generator matrix of a code
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u32,
        /// Puncture dimension (MacDonald only), 2 <= u <= k-1
        #[arg(long)]
        u: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        output: MatrixOutputArg,
    },
    /// Print closed-form code parameters, optionally next to brute force
    Params {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        u: Option<u32>,
        /// Also compute parameters by exhaustive enumeration
        #[arg(long)]
        brute: bool,
        /// Enumeration cap (wins over ZQCODES_MAX_ENUM)
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Print the weight distribution of a code
    Wdist {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        u: Option<u32>,
        /// brute enumerates all q^k codewords; formula uses the closed form
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        output: WdistOutputArg,
        /// Enumeration cap (wins over ZQCODES_MAX_ENUM)
        #[arg(long)]
        cap: Option<u64>,
        /// Worker threads for the brute-force method; the result does not
        /// depend on the count
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Compare every closed form against enumeration over a range of q
    Verify {
        #[arg(long, default_value_t = 2)]
        q_min: u64,
        #[arg(long, default_value_t = 9)]
        q_max: u64,
        #[arg(long, default_value_t = 3)]
        k_max: u32,
        /// Enumeration cap (wins over ZQCODES_MAX_ENUM)
        #[arg(long)]
        cap: Option<u64>,
    },
}

enum CliError {
    /// Bad flag values or combinations: exit status 2.
    Usage(String),
    /// Runtime limits (enumeration caps, overflow): exit status 1.
    Runtime(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<LibError> for CliError {
    fn from(err: LibError) -> Self {
        match err {
            LibError::EnumerationTooLarge { .. }
            | LibError::GeneratorTooLarge { .. }
            | LibError::Overflow(_) => CliError::Runtime(err.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Construct {
            family,
            q,
            k,
            u,
            output,
        } => {
            let spec = build_spec(family, q, k, u)?;
            let matrix = spec.generator()?;
            match output {
                MatrixOutputArg::Text => println!("{matrix}"),
                MatrixOutputArg::Json => {
                    println!("{}", MatrixDocument::new(&spec, &matrix).to_json())
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Params {
            family,
            q,
            k,
            u,
            brute,
            cap,
        } => {
            let spec = build_spec(family, q, k, u)?;
            let closed = closed_form_params(&spec)?;
            if !brute {
                match closed {
                    Some(params) => println!("{params}"),
                    None => println!("{}", no_closed_form_line(&spec)?),
                }
                return Ok(ExitCode::SUCCESS);
            }
            match &closed {
                Some(params) => println!("closed-form: {params}"),
                None => println!("closed-form: {}", no_closed_form_line(&spec)?),
            }
            let cap = resolve_cap(cap)?;
            let observed = spec
                .generator()?
                .weight_distribution_bruteforce(cap)?
                .parameters()?;
            println!("brute-force: {observed}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Wdist {
            family,
            q,
            k,
            u,
            method,
            output,
            cap,
            workers,
        } => {
            let spec = build_spec(family, q, k, u)?;
            let cap = resolve_cap(cap)?;
            if workers == 0 {
                return Err(usage("workers must be at least 1"));
            }
            let (dist, method_name) = match method {
                MethodArg::Brute => {
                    let dist = spec
                        .generator()?
                        .weight_distribution_bruteforce_partitioned(cap, workers)?;
                    (dist, "brute")
                }
                MethodArg::Formula => (formula_wdist(&spec, cap)?, "formula"),
            };
            let doc = WdistDocument::new(&spec, method_name, &dist);
            match output {
                WdistOutputArg::Text => {
                    let u_text = spec.u.map_or("-".to_string(), |u| u.to_string());
                    println!(
                        "family={} q={} k={} u={} n={} method={}",
                        spec.family,
                        spec.q,
                        spec.k,
                        u_text,
                        dist.n(),
                        method_name
                    );
                    for (weight, count) in dist.counts() {
                        println!("{weight} {count}");
                    }
                }
                WdistOutputArg::Json => println!("{}", doc.to_json()),
                WdistOutputArg::Csv => print!("{}", render_csv(&dist)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            q_min,
            q_max,
            k_max,
            cap,
        } => {
            let cap = resolve_cap(cap)?;
            let config = VerifyConfig {
                q_min,
                q_max,
                k_max,
                cap,
            };
            let report = run_verification(&config).map_err(|e| usage(e.to_string()))?;
            println!(
                "verify q={}..={} k-max={} cap={}",
                config.q_min, config.q_max, config.k_max, config.cap
            );
            println!("{report}");
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn build_spec(family: FamilyArg, q: u64, k: u32, u: Option<u32>) -> Result<CodeSpec, CliError> {
    let family = CodeFamily::from(family);
    let spec = match family {
        CodeFamily::Simplex => {
            if u.is_some() {
                return Err(usage("--u applies only to the macdonald family"));
            }
            CodeSpec::simplex(q, k)
        }
        CodeFamily::Macdonald => match u {
            Some(u) => CodeSpec::macdonald(q, k, u),
            None => return Err(usage("the macdonald family requires --u")),
        },
    };
    spec.validate()?;
    Ok(spec)
}

/// Closed-form parameters where a closed form exists: every simplex code,
/// and MacDonald codes with u = k-1.
fn closed_form_params(spec: &CodeSpec) -> Result<Option<CodeParameters>, CliError> {
    match spec.family {
        CodeFamily::Simplex => Ok(Some(simplex_params(spec.q, spec.k)?)),
        CodeFamily::Macdonald if spec.u == Some(spec.k - 1) => {
            Ok(Some(macdonald_params(spec.q, spec.k)?))
        }
        CodeFamily::Macdonald => Ok(None),
    }
}

fn no_closed_form_line(spec: &CodeSpec) -> Result<String, CliError> {
    Ok(format!(
        "n={} k={} d=unknown (closed form covers u = k-1 only; use --brute)",
        spec.length()?,
        spec.k
    ))
}

fn formula_wdist(spec: &CodeSpec, cap: u64) -> Result<WeightDistribution, CliError> {
    match (spec.family, spec.k, spec.u) {
        (CodeFamily::Simplex, 2, None) => Ok(simplex2_wdist(spec.q)?),
        (CodeFamily::Simplex, 3, None) => Ok(simplex3_wdist(spec.q, cap)?),
        (CodeFamily::Macdonald, 3, Some(2)) => Ok(macdonald32_wdist(spec.q, cap)?),
        _ => Err(usage(format!(
            "no closed-form distribution for {spec}; supported: simplex k=2, simplex k=3, macdonald k=3 u=2"
        ))),
    }
}

fn resolve_cap(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV_VAR) {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map_err(|_| usage(format!("invalid {CAP_ENV_VAR} value {raw:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUM_CAP),
        Err(e) => Err(usage(format!("cannot read {CAP_ENV_VAR}: {e}"))),
    }
}
