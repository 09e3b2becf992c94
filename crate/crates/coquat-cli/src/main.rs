//! `cqroots`: classify the zero set of a coquaternionic polynomial.
//!
//! Reads a JSON object `{"coefficients": [[q0,q1,q2,q3], ...]}` (ascending
//! degree) from a file or stdin, runs the classification pipeline and prints
//! a text or JSON report. Exit codes: 0 success, 1 bad input, 2 singular
//! leading coefficient, 3 certification failure under `--verify`.

use clap::{Parser, ValueEnum};
use coquat_cli::report;
use coquat::{certify, find_all_zeros, CoqPolynomial, Coquaternion, Error, Tolerances};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "cqroots",
    about = "Compute and classify all zeros of a polynomial with split-quaternion coefficients",
    long_about = "Input is a JSON object {\"coefficients\": [[q0,q1,q2,q3], ...]} with \
                  coefficients in ascending degree order over the basis {1, i, j, k}. \
                  Reads from FILE, or stdin when FILE is absent or '-'."
)]
struct Args {
    /// Input file (defaults to stdin; '-' also selects stdin)
    input: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Proportional scale applied to every numerical tolerance
    #[arg(long, default_value_t = 1.0)]
    tol: f64,

    /// Certify the report by independent residual checks; exit 3 on failure
    #[arg(long)]
    verify: bool,

    /// Seed for the deterministic sampling used by --verify
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Reject polynomials above this degree
    #[arg(long, default_value_t = 64)]
    max_degree: usize,
}

/// Parsed input polynomial.
#[derive(Debug, serde::Deserialize)]
struct InputSpec {
    coefficients: Vec<[f64; 4]>,
}

#[derive(Debug)]
enum CliError {
    MalformedInput(String),
    DegreeZero,
    DegreeLimit { degree: usize, max: usize },
    SingularLeadingCoefficient(String),
    Pipeline(String),
    CertificationFailed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::SingularLeadingCoefficient(_) => 2,
            CliError::CertificationFailed => 3,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::MalformedInput(m) => format!("malformed input: {m}"),
            CliError::DegreeZero => {
                "degree zero: need at least two coefficient tuples with a nonzero leading tuple"
                    .into()
            }
            CliError::DegreeLimit { degree, max } => {
                format!("degree {degree} exceeds --max-degree {max}")
            }
            CliError::SingularLeadingCoefficient(m) => m.clone(),
            CliError::Pipeline(m) => format!("root finding failed: {m}"),
            CliError::CertificationFailed => "certification failed".into(),
        }
    }
}

fn parse_input(text: &str) -> Result<CoqPolynomial, CliError> {
    let spec: InputSpec =
        serde_json::from_str(text).map_err(|e| CliError::MalformedInput(e.to_string()))?;
    let mut coeffs: Vec<Coquaternion> = spec
        .coefficients
        .iter()
        .map(|&[q0, q1, q2, q3]| Coquaternion::new(q0, q1, q2, q3))
        .collect();
    while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
        coeffs.pop();
    }
    if coeffs.len() < 2 || coeffs.last().unwrap().is_zero() {
        return Err(CliError::DegreeZero);
    }
    if coeffs.iter().any(|c| {
        ![c.re, c.i, c.j, c.k].iter().all(|v| v.is_finite())
    }) {
        return Err(CliError::MalformedInput(
            "coefficients must be finite numbers".into(),
        ));
    }
    Ok(CoqPolynomial::new(coeffs))
}

fn run(args: &Args) -> Result<String, CliError> {
    let mut text = String::new();
    match &args.input {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path)
                .map_err(|e| CliError::MalformedInput(format!("{}: {e}", path.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::MalformedInput(format!("stdin: {e}")))?;
        }
    }

    let poly = parse_input(&text)?;
    if poly.degree() > args.max_degree {
        return Err(CliError::DegreeLimit {
            degree: poly.degree(),
            max: args.max_degree,
        });
    }

    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(CliError::MalformedInput(
            "--tol must be a positive finite number".into(),
        ));
    }
    let tol = Tolerances::default().scaled(args.tol);

    let report = find_all_zeros(&poly, &tol).map_err(|e| match e {
        Error::SingularLeadingCoefficient { .. } => {
            CliError::SingularLeadingCoefficient(e.to_string())
        }
        other => CliError::Pipeline(other.to_string()),
    })?;

    let certification = if args.verify {
        let cert = certify(&report, 1e-8 * args.tol, args.seed);
        Some(cert)
    } else {
        None
    };

    let rendered = match args.format {
        Format::Json => report::render_json(&report, certification.as_ref()),
        Format::Text => report::render_text(&report, certification.as_ref()),
    };

    if let Some(cert) = &certification {
        if !cert.passed {
            // Still print the report so the failure can be inspected.
            println!("{rendered}");
            return Err(CliError::CertificationFailed);
        }
    }
    Ok(rendered)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if e.use_stderr() => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(&args) {
        Ok(rendered) => {
            println!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("cqroots: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
