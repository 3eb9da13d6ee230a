//! Command-line front end: every computation in dgini-core with
//! machine-readable output.
//!
//! Exit codes are stable: 0 success, 1 verification failure, 2 input or
//! resource error, 3 internal cross-check mismatch.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dgini_core::{
    emd, emd_bfs_oracle, gini_general, kostka_foulkes_charge, kostka_foulkes_kostant, lorenz_curve,
    weighted_total, Composition, Error, GradedMultiplicityReport, IntVector, KostantEvaluator,
    Partition, QPolynomial,
};

/// The S_n sum behind every polynomial has n! terms; past this rank a
/// sweep stops being a desk-scale computation.
const MAX_VERIFY_RANK: usize = 6;

#[derive(Parser)]
#[command(
    name = "dgini",
    version,
    about = "Exact discrete Gini indices, Lorenz curves, Kostka-Foulkes polynomials, \
             graded multiplicities, and one-dimensional earth mover's distances \
             on integer partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Kostant,
    Charge,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Generalized Gini index of a partition of n*k with at most n parts
    Gini {
        /// Partition parts, comma separated; zero-padded to n
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u64>,
        /// Number of parts (population size)
        #[arg(long)]
        n: usize,
        /// Per-part share of the flat distribution
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Prepend a header line to CSV output
        #[arg(long)]
        header: bool,
    },
    /// Lorenz curve samples (j, cumulative wealth of the j poorest parts)
    Lorenz {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        header: bool,
    },
    /// Kostka-Foulkes polynomial K_{lambda,mu}(q)
    Kf {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<u64>,
        /// Which route to compute; `both` cross-checks them
        #[arg(long, value_enum, default_value = "kostant")]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        header: bool,
    },
    /// Graded multiplicity polynomial of a weakly decreasing zero-sum weight
    GradedMult {
        /// Weight entries, comma separated (may be negative)
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        alpha: Vec<i64>,
        /// Flat shift; defaults to |last entry|, the smallest valid choice
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        header: bool,
    },
    /// Earth mover's distance between two compositions
    Emd {
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u64>,
        /// Also run the BFS ground-truth search and cross-check
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        header: bool,
    },
    /// Check degree(K_{lambda,(k^n)}) == gini for every partition of n*k
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Fan the sweep out across worker threads
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        header: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::CrossCheck(_) => 3,
            Error::InvalidInput(_) | Error::Overflow(_) | Error::ResourceLimit(_) => 2,
        };
        Failure::new(code, err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gini {
            lambda,
            n,
            k,
            format,
            header,
        } => cmd_gini(lambda, n, k, format, header),
        Command::Lorenz {
            lambda,
            format,
            header,
        } => cmd_lorenz(lambda, format, header),
        Command::Kf {
            lambda,
            mu,
            algorithm,
            format,
            header,
        } => cmd_kf(lambda, mu, algorithm, format, header),
        Command::GradedMult {
            alpha,
            k,
            format,
            header,
        } => cmd_graded_mult(alpha, k, format, header),
        Command::Emd {
            mu,
            lambda,
            oracle,
            format,
            header,
        } => cmd_emd(mu, lambda, oracle, format, header),
        Command::Verify {
            n,
            k,
            format,
            parallel,
            header,
        } => cmd_verify(n, k, format, parallel, header),
    }
}

fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn degree_field(degree: Option<usize>) -> String {
    degree.map_or_else(|| "none".into(), |d| d.to_string())
}

#[derive(Serialize)]
struct GiniOutput {
    lambda: Partition,
    n: usize,
    k: u64,
    b_flat: u64,
    b_lambda: u64,
    gini: u64,
}

fn cmd_gini(
    lambda: Vec<u64>,
    n: usize,
    k: u64,
    format: Format,
    header: bool,
) -> Result<(), Failure> {
    let lambda = Partition::new(lambda)?.padded(n)?;
    let gini = gini_general(&lambda, n, k)?;
    let out = GiniOutput {
        b_flat: weighted_total(&Partition::flat(k, n)),
        b_lambda: weighted_total(&lambda),
        lambda,
        n,
        k,
        gini,
    };
    match format {
        Format::Text => {
            println!("gini {}", out.gini);
            println!("b_flat {}", out.b_flat);
            println!("b_lambda {}", out.b_lambda);
        }
        Format::Json => println!("{}", serde_json::to_string(&out).expect("serializable")),
        Format::Csv => {
            if header {
                println!("gini,b_flat,b_lambda");
            }
            println!("{},{},{}", out.gini, out.b_flat, out.b_lambda);
        }
    }
    Ok(())
}

fn cmd_lorenz(lambda: Vec<u64>, format: Format, header: bool) -> Result<(), Failure> {
    let lambda = Partition::new(lambda)?;
    let curve = lorenz_curve(&lambda);
    match format {
        Format::Text => {
            for (j, value) in curve.samples() {
                println!("{j} {value}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&curve).expect("serializable")),
        Format::Csv => print!("{}", curve.to_csv(header)),
    }
    Ok(())
}

#[derive(Serialize)]
struct KfOutput {
    lambda: Partition,
    mu: Partition,
    algorithm: String,
    coefficients: QPolynomial,
    degree: Option<usize>,
    polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

fn cmd_kf(
    lambda: Vec<u64>,
    mu: Vec<u64>,
    algorithm: Algorithm,
    format: Format,
    header: bool,
) -> Result<(), Failure> {
    let lambda = Partition::new(lambda)?;
    let mu = Partition::new(mu)?;
    let (poly, agreement) = match algorithm {
        Algorithm::Kostant => (kostka_foulkes_kostant(&lambda, &mu)?, None),
        Algorithm::Charge => (kostka_foulkes_charge(&lambda, &mu)?, None),
        Algorithm::Both => {
            let via_kostant = kostka_foulkes_kostant(&lambda, &mu)?;
            let via_charge = kostka_foulkes_charge(&lambda, &mu)?;
            let agree = via_kostant == via_charge;
            (via_kostant, Some(agree))
        }
    };
    let out = KfOutput {
        degree: poly.degree(),
        polynomial: poly.to_string(),
        coefficients: poly,
        algorithm: format!("{algorithm:?}").to_lowercase(),
        agreement,
        lambda,
        mu,
    };
    match format {
        Format::Text => {
            println!("polynomial {}", out.polynomial);
            println!("degree {}", degree_field(out.degree));
            if let Some(agree) = out.agreement {
                println!("agreement {agree}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&out).expect("serializable")),
        Format::Csv => {
            if header {
                println!("coefficients,degree,agreement");
            }
            println!(
                "{},{},{}",
                join(out.coefficients.coeffs()),
                degree_field(out.degree),
                out.agreement.map_or(String::new(), |a| a.to_string())
            );
        }
    }
    if out.agreement == Some(false) {
        return Err(Failure::new(
            3,
            "charge and Kostant routes disagree; this is a bug, not bad input",
        ));
    }
    Ok(())
}

fn cmd_graded_mult(
    alpha: Vec<i64>,
    k: Option<u64>,
    format: Format,
    header: bool,
) -> Result<(), Failure> {
    let alpha = IntVector::new(alpha);
    if !alpha.is_weakly_decreasing() || alpha.sum() != 0 {
        return Err(Failure::new(
            2,
            format!("alpha must be weakly decreasing with zero sum, got {alpha}"),
        ));
    }
    let k = k.unwrap_or_else(|| {
        alpha
            .entries()
            .last()
            .map_or(0, |&last| last.unsigned_abs())
    });
    let n = alpha.len();
    let lambda = alpha.plus_flat(k)?;
    let mut eval = KostantEvaluator::with_entry_bound(n, (n as u64 * k + n as u64) as i64);
    let report = GradedMultiplicityReport::compute(&mut eval, n, k, &lambda)?;
    print_report(&report, format, header, true)?;
    Ok(())
}

fn print_report(
    report: &GradedMultiplicityReport,
    format: Format,
    header: bool,
    verbose_text: bool,
) -> Result<(), Failure> {
    match format {
        Format::Text => {
            if verbose_text {
                println!("polynomial {}", report.polynomial);
                println!("degree {}", degree_field(report.degree));
                println!("gini {}", report.gini);
                println!("k {}", report.k);
                println!("lambda {}", report.lambda);
                println!("alpha {}", report.alpha);
                println!("theorem1_holds {}", report.theorem1_holds);
            } else {
                println!(
                    "lambda={} alpha={} degree={} gini={} holds={}",
                    report.lambda,
                    report.alpha,
                    degree_field(report.degree),
                    report.gini,
                    report.theorem1_holds
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string(report).expect("serializable")),
        Format::Csv => {
            if header {
                println!("lambda,alpha,coefficients,degree,gini,theorem1_holds");
            }
            println!(
                "{},{},{},{},{},{}",
                join(report.lambda.parts()),
                join(report.alpha.entries()),
                join(report.polynomial.coeffs()),
                degree_field(report.degree),
                report.gini,
                report.theorem1_holds
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct EmdOutput {
    mu: Composition,
    lambda: Composition,
    distance: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

fn cmd_emd(
    mu: Vec<u64>,
    lambda: Vec<u64>,
    oracle: bool,
    format: Format,
    header: bool,
) -> Result<(), Failure> {
    let mu = Composition::new(mu)?;
    let lambda = Composition::new(lambda)?;
    let result = emd(&mu, &lambda)?;
    let oracle_distance = if oracle {
        Some(emd_bfs_oracle(&mu, &lambda)?)
    } else {
        None
    };
    let out = EmdOutput {
        mu,
        lambda,
        distance: result.distance,
        oracle: oracle_distance,
        agreement: oracle_distance.map(|d| d == result.distance),
    };
    match format {
        Format::Text => {
            println!("distance {}", out.distance);
            if let Some(d) = out.oracle {
                println!("oracle {d}");
                println!("agreement {}", out.agreement.unwrap());
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&out).expect("serializable")),
        Format::Csv => {
            if header {
                println!(
                    "mu,lambda,distance{}",
                    if oracle { ",oracle,agreement" } else { "" }
                );
            }
            let mut row = format!(
                "{},{},{}",
                join(out.mu.parts()),
                join(out.lambda.parts()),
                out.distance
            );
            if let (Some(d), Some(a)) = (out.oracle, out.agreement) {
                row.push_str(&format!(",{d},{a}"));
            }
            println!("{row}");
        }
    }
    if out.agreement == Some(false) {
        return Err(Failure::new(
            3,
            "symmetric-difference distance disagrees with the BFS oracle; this is a bug",
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput {
    n: usize,
    k: u64,
    reports: Vec<GradedMultiplicityReport>,
    summary: VerifySummary,
}

#[derive(Serialize)]
struct VerifySummary {
    partitions: usize,
    held: usize,
    failed: usize,
    all_hold: bool,
}

fn cmd_verify(
    n: usize,
    k: u64,
    format: Format,
    parallel: bool,
    header: bool,
) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::new(2, format!("--n must be at least 2, got {n}")));
    }
    if n > MAX_VERIFY_RANK {
        return Err(Failure::new(
            2,
            format!(
                "--n {n} exceeds the desk-scale cap of {MAX_VERIFY_RANK}: \
                 the permutation sum has n! terms"
            ),
        ));
    }
    if k < 1 {
        return Err(Failure::new(2, "--k must be at least 1".to_string()));
    }
    let reports = if parallel {
        dgini_core::verify_theorem1_parallel(n, k)?
    } else {
        dgini_core::verify_theorem1(n, k)?
    };
    // Only nonzero polynomials are in the theorem's scope; a zero
    // polynomial cannot occur in this sweep but is not counted a failure.
    let failed = reports
        .iter()
        .filter(|r| !r.polynomial.is_zero() && !r.theorem1_holds)
        .count();
    let summary = VerifySummary {
        partitions: reports.len(),
        held: reports.iter().filter(|r| r.theorem1_holds).count(),
        failed,
        all_hold: failed == 0,
    };
    match format {
        Format::Text => {
            for report in &reports {
                print_report(report, Format::Text, false, false)?;
            }
            println!(
                "summary: n={n} k={k} partitions={} held={} failed={}",
                summary.partitions, summary.held, summary.failed
            );
        }
        Format::Json => {
            let out = VerifyOutput {
                n,
                k,
                reports,
                summary,
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Csv => {
            if header {
                println!("lambda,alpha,coefficients,degree,gini,theorem1_holds");
            }
            for report in &reports {
                print_report(report, Format::Csv, false, false)?;
            }
        }
    }
    finish_verify(failed)
}

fn finish_verify(failed: usize) -> Result<(), Failure> {
    if failed > 0 {
        return Err(Failure::new(
            1,
            format!("{failed} partitions violate the degree identity; this indicates a bug"),
        ));
    }
    Ok(())
}
