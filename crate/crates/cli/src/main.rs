use std::path::PathBuf;
use std::process::ExitCode;

use bessel_core::exact_algebra::{BigRat, SymRat};
use bessel_core::local_nonarch::{
    classify_double_coset, j_spherical_ramified, LocalError, SatakeParams, Sign, SphericalType,
};
use bessel_core::modforms::{jacobi_index1, ModFormError};
use bessel_core::quadfields::{characters, class_group, QuadError};
use bessel_core::verifier::{
    checks, run_suite, sk_ratio_check, SuiteConfig, VerificationReport, VerifierError,
};
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Verifier(#[from] VerifierError),
    #[error(transparent)]
    ModForm(#[from] ModFormError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser)]
#[command(name = "bessel", version, about = "Exact and numerical checks around Bessel periods of Siegel modular forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Non-archimedean local factors
    Local {
        #[command(subcommand)]
        command: LocalCommand,
    },
    /// Class groups of imaginary quadratic fields
    Class {
        #[command(subcommand)]
        command: ClassCommand,
    },
    /// Saito–Kurokawa lifts
    Sk {
        #[command(subcommand)]
        command: SkCommand,
    },
    /// The archimedean integral
    Arch {
        #[command(subcommand)]
        command: ArchCommand,
    },
    /// Run a configured set of checks
    Suite {
        /// TOML configuration; all checks with default parameters if omitted
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the reports as a JSON array to this file
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "I")]
    I,
    #[value(name = "IIb")]
    IIb,
}

#[derive(Subcommand)]
enum LocalCommand {
    /// C·(J₀(1) + l·J₀(t_K)) for the unramified representations
    Unram {
        #[arg(long = "type", value_enum)]
        ty: Option<TypeArg>,
        /// +1 or -1
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        l: Option<Sign>,
    },
    /// J₀ and J for every row of the P₁ table
    Table,
    /// Classify n(X)·diag(1, u, u, 1) into a double coset h(ℓ, m)
    Coset {
        #[arg(long, allow_hyphen_values = true)]
        x: BigRat,
        #[arg(long, allow_hyphen_values = true)]
        y: BigRat,
        #[arg(long, allow_hyphen_values = true)]
        z: BigRat,
        #[arg(long, allow_hyphen_values = true)]
        u: BigRat,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum ClassCommand {
    /// Reduced forms, invariant factors and generators
    Group {
        #[arg(short, allow_hyphen_values = true)]
        d: i64,
    },
    /// The character table
    Chars {
        #[arg(short, allow_hyphen_values = true)]
        d: i64,
    },
}

#[derive(Subcommand)]
enum SkCommand {
    /// Kohnen coefficients c(D) of the index-1 Jacobi form, one "D c_D" per line
    Coeffs {
        #[arg(short)]
        k: i64,
        #[arg(long)]
        dmax: u64,
    },
    /// The Saito–Kurokawa ratio test for two discriminants
    Ratio {
        #[arg(short)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        d1: i64,
        #[arg(long, allow_hyphen_values = true)]
        d2: i64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum ArchCommand {
    /// Quadrature against the closed form
    Check {
        #[arg(short)]
        k: i64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+1" | "1" => Ok(Sign::Plus),
        "-1" => Ok(Sign::Minus),
        _ => Err(format!("expected +1 or -1, got {s:?}")),
    }
}

fn print_report(r: &VerificationReport) {
    let status = if r.pass { "PASS" } else { "FAIL" };
    println!("[{status}] {} {}", r.check, r.params);
    println!("    lhs = {}", r.lhs);
    println!("    rhs = {}", r.rhs);
    println!("    rel_err = {:e} (tolerance {:e})", r.rel_err, r.tolerance);
}

/// Print the reports; success iff all pass.
fn finish(reports: &[VerificationReport]) -> bool {
    reports.iter().for_each(print_report);
    reports.iter().all(|r| r.pass)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Local { command } => match command {
            LocalCommand::Unram { ty, l } => {
                let types = match ty {
                    Some(TypeArg::I) => vec![SphericalType::I],
                    Some(TypeArg::IIb) => vec![SphericalType::IIb],
                    None => vec![SphericalType::I, SphericalType::IIb],
                };
                let mut ok = true;
                for t in types {
                    let signs = match (l, t) {
                        (Some(Sign::Minus), SphericalType::IIb) => {
                            return Err(CliError::Usage("type IIb has a single vector, with l = +1".into()))
                        }
                        (Some(s), _) => vec![s],
                        (None, SphericalType::I) => vec![Sign::Plus, Sign::Minus],
                        (None, SphericalType::IIb) => vec![Sign::Plus],
                    };
                    let (params, expected) = match t {
                        SphericalType::I => (SatakeParams::generic(), SymRat::one()),
                        SphericalType::IIb => (SatakeParams::iib(), SymRat::int(2)),
                    };
                    for s in signs {
                        let v = j_spherical_ramified(&params, t, s)?;
                        let pass = v.eq_exact(&expected).map_err(LocalError::from)?;
                        ok &= pass;
                        if pass {
                            println!("type {t}, l = {s}: {expected} [PASS]");
                        } else {
                            println!("type {t}, l = {s}: {v} ≠ {expected} [FAIL]");
                        }
                    }
                }
                Ok(ok)
            }
            LocalCommand::Table => Ok(finish(&checks::local_table())),
            LocalCommand::Coset { x, y, z, u, p } => {
                println!("{}", classify_double_coset(&x, &y, &z, &u, p)?);
                Ok(true)
            }
        },
        Command::Class { command } => match command {
            ClassCommand::Group { d } => {
                let g = class_group(d)?;
                println!("d = {d}, h = {}", g.order());
                println!("invariant factors: {:?}", g.invariant_factors());
                let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
                println!("generators: {}", gens.join(" "));
                for (i, f) in g.classes().iter().enumerate() {
                    println!("{i}: {f} coords {:?}", g.coords(i));
                }
                Ok(true)
            }
            ClassCommand::Chars { d } => {
                let g = class_group(d)?;
                let forms: Vec<String> = g.classes().iter().map(ToString::to_string).collect();
                println!("classes: {}", forms.join(" "));
                for chi in characters(&g) {
                    let vals: Vec<String> = chi.values().iter().map(ToString::to_string).collect();
                    println!("{:?}: {}", chi.exponents, vals.join(", "));
                }
                Ok(true)
            }
        },
        Command::Sk { command } => match command {
            SkCommand::Coeffs { k, dmax } => {
                let f = jacobi_index1(k, dmax)?;
                for (d, c) in f.iter() {
                    println!("{d} {c}");
                }
                Ok(true)
            }
            SkCommand::Ratio { k, d1, d2, tol } => Ok(finish(&[sk_ratio_check(k, d1, d2, tol)?])),
        },
        Command::Arch { command } => match command {
            ArchCommand::Check { k, tol } => Ok(finish(&checks::arch(&[k], tol))),
        },
        Command::Suite { config, json } => {
            let cfg = match config {
                Some(path) => SuiteConfig::load(&path)?,
                None => SuiteConfig::default(),
            };
            let reports = run_suite(&cfg);
            for r in &reports {
                println!("[{}] {} {}", if r.pass { "PASS" } else { "FAIL" }, r.check, r.params);
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            println!("{} reports, {failed} failed", reports.len());
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&reports)?;
                std::fs::write(&path, text).map_err(|source| CliError::Write { path, source })?;
            }
            Ok(failed == 0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
