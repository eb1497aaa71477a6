//! Command-line surface: decomposition, polynomial computation, coefficient
//! formulas, limit data, and convergence sweeps with CSV/JSON output.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 size limit, 4 internal
//! consistency violation (a guaranteed identity failed, always a bug).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::coeff_asymptotics::{
    exact_coefficients, limit_coefficients_exact, run_convergence, CoefficientMethod, GrowthSpec,
    RunOptions,
};
use crate::core_quotient::{
    compose, core_by_strip_removal, core_from_charvec, core_size_from_charvec, decompose,
    CharacteristicVector, PQuotient,
};
use crate::error::{Error, Result};
use crate::hook_products::attractors;
use crate::maya::MayaDiagram;
use crate::partitions::Partition;
use crate::poly::IntPolynomial;
use crate::wronskian_poly::factorize_q;

#[derive(Parser)]
#[command(
    name = "wappell",
    version,
    about = "Partition cores, quotients, and Wronskian Appell polynomials",
    long_about = "Exact computations on integer partitions: p-core/p-quotient \
decomposition via Maya diagrams, Wronskian Appell polynomials, the \
combinatorial coefficient formula for their quotient factor, and convergence \
sweeps of rescaled zeros toward their attractors.\n\n\
Textual forms: a partition is comma-separated decreasing parts (\"8,8,6,6,2,2,1\"; \
the empty string is the empty partition); a characteristic vector is \
comma-separated integers summing to zero (\"2,-1,-1\"); a quotient is \
semicolon-separated partitions with empty fields for empty components \
(\"1,1;4;2,1\", \";;\")."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Wronskian,
    Both,
}

impl From<MethodArg> for CoefficientMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Formula => CoefficientMethod::Formula,
            MethodArg::Wronskian => CoefficientMethod::Wronskian,
            MethodArg::Both => CoefficientMethod::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a partition into its p-quotient and characteristic vector
    Decompose {
        /// Modulus p (positive)
        #[arg(short, long)]
        p: usize,
        /// Partition, e.g. "8,8,6,6,2,2,1"; "" is the empty partition
        partition: String,
        /// Also render the Maya diagrams involved
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Rebuild the partition from a quotient and a characteristic vector
    Compose {
        /// Quotient, e.g. "1,1;4;2,1"
        #[arg(long)]
        quotient: String,
        /// Characteristic vector, e.g. "2,-1,-1"
        #[arg(long, allow_hyphen_values = true)]
        charvec: String,
        /// Optional check that the implied modulus equals this value
        #[arg(short, long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// The p-core, from a partition or from a characteristic vector
    Core {
        #[arg(short, long)]
        p: Option<usize>,
        /// Partition input (requires -p)
        partition: Option<String>,
        /// Characteristic vector input
        #[arg(long, allow_hyphen_values = true)]
        charvec: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// The Wronskian polynomial of a partition and its origin factorization
    Poly {
        #[arg(short, long)]
        p: usize,
        partition: String,
        /// Largest |partition| accepted by the determinant route
        #[arg(long, default_value_t = 400)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Coefficients of the quotient factor by the combinatorial formula
    Coeffs {
        #[arg(short, long)]
        p: Option<usize>,
        /// Partition input (requires -p); exclusive with --quotient/--charvec
        partition: Option<String>,
        #[arg(long)]
        quotient: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        charvec: Option<String>,
        /// formula, wronskian, or both (both cross-checks and fails on mismatch)
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
        #[arg(long, default_value_t = 400)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Attractors, limit coefficients, and the limit polynomial
    Limit {
        #[arg(long)]
        quotient: String,
        /// Integer growth rates summing to zero, e.g. "-2,-1,3"
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Convergence sweep of the rescaled quotient factor over growing cores
    Sweep {
        #[arg(short, long)]
        p: Option<usize>,
        #[arg(long)]
        quotient: String,
        /// Integer growth rates summing to zero
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Integer offsets summing to zero (default all zero)
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Steps, e.g. "5,7,9,11"
        #[arg(long)]
        k: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
        /// Root-finder residual tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write <OUT>.coeffs.csv, <OUT>.roots.csv, and <OUT>.json
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 400)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run the built-in consistency suites at reduced size
    Selftest {
        /// Largest partition size in the sweeps
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
}

/// Parses arguments and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(failure) => failure.report(),
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl Failure {
    fn report(&self) -> i32 {
        match self {
            Failure::Lib(err) => {
                eprintln!("error: {}", err);
                match err {
                    Error::InvalidParameter(_) => 2,
                    Error::SizeLimit(_) => 3,
                    Error::InternalConsistency(_) => 4,
                    Error::NonConvergence { .. } => 1,
                }
            }
            Failure::Io(err) => {
                eprintln!("io error: {}", err);
                1
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Lib(err)
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure::Io(err)
    }
}

fn dispatch(command: Command) -> std::result::Result<(), Failure> {
    match command {
        Command::Decompose {
            p,
            partition,
            explain,
            format,
        } => cmd_decompose(p, &partition, explain, format),
        Command::Compose {
            quotient,
            charvec,
            p,
            format,
        } => cmd_compose(&quotient, &charvec, p, format),
        Command::Core {
            p,
            partition,
            charvec,
            format,
        } => cmd_core(p, partition.as_deref(), charvec.as_deref(), format),
        Command::Poly {
            p,
            partition,
            max_size,
            format,
        } => cmd_poly(p, &partition, max_size, format),
        Command::Coeffs {
            p,
            partition,
            quotient,
            charvec,
            method,
            max_size,
            format,
        } => cmd_coeffs(
            p,
            partition.as_deref(),
            quotient.as_deref(),
            charvec.as_deref(),
            method,
            max_size,
            format,
        ),
        Command::Limit {
            quotient,
            a,
            format,
        } => cmd_limit(&quotient, &a, format),
        Command::Sweep {
            p,
            quotient,
            a,
            b,
            k,
            method,
            tol,
            out,
            max_size,
            format,
        } => cmd_sweep(
            p,
            &quotient,
            &a,
            b.as_deref(),
            &k,
            method,
            tol,
            out.as_deref(),
            max_size,
            format,
        ),
        Command::Selftest { max_size } => cmd_selftest(max_size),
    }
}

fn parse_i64_list(s: &str, what: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::invalid(format!("bad {} entry {:?}", what, tok)))
        })
        .collect()
}

fn parse_k_list(s: &str) -> Result<Vec<u64>> {
    let ks = s
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("bad k entry {:?}", tok)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ks)
}

fn require_positive_p(p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::invalid("p must be a positive integer"));
    }
    Ok(())
}

/// Resolves the mutually exclusive input forms: a partition with `-p`, or a
/// (quotient, characteristic vector) pair.
fn resolve_partition_input(
    p: Option<usize>,
    partition: Option<&str>,
    quotient: Option<&str>,
    charvec: Option<&str>,
) -> Result<(usize, Partition, PQuotient, CharacteristicVector)> {
    match (partition, quotient, charvec) {
        (Some(text), None, None) => {
            let p = p.ok_or_else(|| Error::invalid("-p is required with a partition input"))?;
            require_positive_p(p)?;
            let lambda: Partition = text.parse()?;
            let (mu, c) = decompose(&lambda, p)?;
            Ok((p, lambda, mu, c))
        }
        (None, Some(q_text), Some(c_text)) => {
            let mu: PQuotient = q_text.parse()?;
            let c: CharacteristicVector = c_text.parse()?;
            if let Some(p) = p {
                if p != mu.p() {
                    return Err(Error::invalid(format!(
                        "-p {} disagrees with the quotient's {} components",
                        p,
                        mu.p()
                    )));
                }
            }
            let lambda = compose(&mu, &c)?;
            Ok((mu.p(), lambda, mu, c))
        }
        _ => Err(Error::invalid(
            "provide either a partition (with -p) or both --quotient and --charvec",
        )),
    }
}

fn print_or_json(format: OutputFormat, text: String, value: serde_json::Value) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("json serialization cannot fail")
        ),
        _ => print!("{}", text),
    }
}

fn cmd_decompose(
    p: usize,
    partition: &str,
    explain: bool,
    format: OutputFormat,
) -> std::result::Result<(), Failure> {
    require_positive_p(p)?;
    let lambda: Partition = partition.parse()?;
    let (mu, c) = decompose(&lambda, p)?;
    let removal = core_by_strip_removal(&lambda, p)?;
    let core_size_formula = core_size_from_charvec(&c)?;
    let core = core_from_charvec(&c)?;
    if core != removal.core {
        return Err(Error::internal("core routes disagree").into());
    }
    let size_ok = lambda.size() == core.size() + p * mu.size();
    if !size_ok {
        return Err(Error::internal("size identity failed").into());
    }

    let mut text = String::new();
    let _ = writeln!(text, "partition: {}", lambda);
    let _ = writeln!(text, "size: {}", lambda.size());
    let _ = writeln!(text, "degree vector: {}", lambda.degree_vector());
    let _ = writeln!(text, "p: {}", p);
    let _ = writeln!(text, "quotient: {}", mu);
    let _ = writeln!(text, "charvec: {}", c);
    let _ = writeln!(text, "core: {}", core);
    let _ = writeln!(text, "core size (charvec formula): {}", core_size_formula);
    let _ = writeln!(text, "core size (strip removal): {}", removal.core.size());
    let _ = writeln!(text, "ht parity: {}", removal.ht_parity);
    let _ = writeln!(
        text,
        "size identity: {} = {} + {}*{}",
        lambda.size(),
        core.size(),
        p,
        mu.size()
    );
    if explain {
        let m = MayaDiagram::from_partition(&lambda);
        let hat = m.canonical();
        let _ = writeln!(text, "maya:           {}", m.render_auto());
        let _ = writeln!(text, "maya (charge 0): {}", hat.render_auto());
        for (i, comp) in hat.p_decompose(p)?.iter().enumerate() {
            let _ = writeln!(text, "component {}:     {}", i, comp.render_auto());
        }
    }

    let value = json!({
        "partition": lambda.to_string(),
        "size": lambda.size(),
        "degree_vector": lambda.degree_vector().to_string(),
        "p": p,
        "quotient": mu.to_string(),
        "charvec": c.to_string(),
        "core": core.to_string(),
        "core_size_formula": core_size_formula,
        "core_size_strip_removal": removal.core.size(),
        "ht_parity": removal.ht_parity,
        "size_identity": size_ok,
    });
    print_or_json(format, text, value);
    Ok(())
}

fn cmd_compose(
    quotient: &str,
    charvec: &str,
    p: Option<usize>,
    format: OutputFormat,
) -> std::result::Result<(), Failure> {
    let (p, lambda, mu, c) = resolve_partition_input(p, None, Some(quotient), Some(charvec))?;
    // roundtrip check: decomposition must reproduce the inputs
    let (mu_back, c_back) = decompose(&lambda, p)?;
    if mu_back != mu || c_back != c {
        return Err(Error::internal("compose/decompose roundtrip failed").into());
    }
    let mut text = String::new();
    let _ = writeln!(text, "partition: {}", lambda);
    let _ = writeln!(text, "size: {}", lambda.size());
    let value = json!({
        "partition": lambda.to_string(),
        "size": lambda.size(),
        "p": p,
    });
    print_or_json(format, text, value);
    Ok(())
}

fn cmd_core(
    p: Option<usize>,
    partition: Option<&str>,
    charvec: Option<&str>,
    format: OutputFormat,
) -> std::result::Result<(), Failure> {
    let (core, size_formula) = match (partition, charvec) {
        (Some(text), None) => {
            let p = p.ok_or_else(|| Error::invalid("-p is required with a partition input"))?;
            require_positive_p(p)?;
            let lambda: Partition = text.parse()?;
            let (_, c) = decompose(&lambda, p)?;
            let removal = core_by_strip_removal(&lambda, p)?;
            let core = core_from_charvec(&c)?;
            if removal.core != core {
                return Err(Error::internal("core routes disagree").into());
            }
            (core, core_size_from_charvec(&c)?)
        }
        (None, Some(c_text)) => {
            let c: CharacteristicVector = c_text.parse()?;
            if let Some(p) = p {
                if p != c.p() {
                    return Err(Error::invalid(format!(
                        "-p {} disagrees with the vector's {} entries",
                        p,
                        c.p()
                    ))
                    .into());
                }
            }
            (core_from_charvec(&c)?, core_size_from_charvec(&c)?)
        }
        _ => {
            return Err(Error::invalid(
                "provide either a partition (with -p) or --charvec, not both",
            )
            .into())
        }
    };
    if core.size() as u64 != size_formula {
        return Err(Error::internal("core size formula disagrees with the core").into());
    }
    let mut text = String::new();
    let _ = writeln!(text, "core: {}", core);
    let _ = writeln!(text, "size: {}", size_formula);
    let value = json!({
        "core": core.to_string(),
        "size": size_formula,
    });
    print_or_json(format, text, value);
    Ok(())
}

fn cmd_poly(
    p: usize,
    partition: &str,
    max_size: usize,
    format: OutputFormat,
) -> std::result::Result<(), Failure> {
    require_positive_p(p)?;
    let lambda: Partition = partition.parse()?;
    if lambda.size() > max_size {
        return Err(Error::SizeLimit(format!(
            "|lambda| = {} exceeds --max-size {}",
            lambda.size(),
            max_size
        ))
        .into());
    }
    let f = factorize_q(&lambda, p)?;
    let mut text = String::new();
    let _ = writeln!(text, "partition: {}", lambda);
    let _ = writeln!(text, "p: {}", p);
    let _ = writeln!(text, "q: {}", f.q);
    let _ = writeln!(text, "core size: {}", f.core_size);
    let _ = writeln!(text, "r: {}", f.r);
    let value = json!({
        "partition": lambda.to_string(),
        "p": p,
        "q": f.q.to_decimal_strings(),
        "q_human": f.q.to_string(),
        "core_size": f.core_size,
        "r": f.r.to_decimal_strings(),
        "r_human": f.r.to_string(),
    });
    print_or_json(format, text, value);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_coeffs(
    p: Option<usize>,
    partition: Option<&str>,
    quotient: Option<&str>,
    charvec: Option<&str>,
    method: MethodArg,
    max_size: usize,
    format: OutputFormat,
) -> std::result::Result<(), Failure> {
    let (p, lambda, mu, c) = resolve_partition_input(p, partition, quotient, charvec)?;
    let options = RunOptions {
        method: method.into(),
        max_wronskian_size: max_size,
        ..RunOptions::default()
    };
    let coeffs = exact_coefficients(&mu, &c, &options)?;
    let mut text = String::new();
    let _ = writeln!(text, "partition: {}", lambda);
    let _ = writeln!(text, "p: {}", p);
    let _ = writeln!(text, "quotient: {}", mu);
    let _ = writeln!(text, "charvec: {}", c);
    for (j, coeff) in coeffs.iter().enumerate() {
        let _ = writeln!(text, "r_{} = {}", j, coeff);
    }
    let value = json!({
        "partition": lambda.to_string(),
        "p": p,
        "quotient": mu.to_string(),
        "charvec": c.to_string(),
        "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    });
    print_or_json(format, text, value);
    Ok(())
}

fn cmd_limit(quotient: &str, a: &str, format: OutputFormat) -> std::result::Result<(), Failure> {
    let mu: PQuotient = quotient.parse()?;
    let rates = parse_i64_list(a, "growth rate")?;
    if rates.len() != mu.p() {
        return Err(Error::invalid(format!(
            "expected {} growth rates, got {}",
            mu.p(),
            rates.len()
        ))
        .into());
    }
    let alphas = attractors(&rates.iter().map(|&x| x as f64).collect::<Vec<_>>()).alphas;
    let limit = limit_coefficients_exact(&mu, &rates)?;
    // limit polynomial as an exact integer polynomial, built from L_j
    let total = mu.size();
    let mut coeffs = vec![BigInt::from(0); total + 1];
    for (j, l) in limit.iter().enumerate() {
        coeffs[total - j] = l.clone();
    }
    let poly = IntPolynomial::from_coeffs(coeffs);

    let mut text = String::new();
    let _ = writeln!(text, "quotient: {}", mu);
    let _ = writeln!(text, "p: {}", mu.p());
    let _ = writeln!(
        text,
        "multiplicities: {}",
        mu.component_sizes()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let _ = writeln!(
        text,
        "attractors: {}",
        alphas
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    for (j, l) in limit.iter().enumerate() {
        let _ = writeln!(text, "L_{} = {}", j, l);
    }
    let _ = writeln!(text, "limit polynomial: {}", poly);
    let value = json!({
        "quotient": mu.to_string(),
        "p": mu.p(),
        "multiplicities": mu.component_sizes(),
        "attractors": alphas,
        "limit_coefficients": limit.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "limit_polynomial": poly.to_string(),
    });
    print_or_json(format, text, value);
    Ok(())
}

fn write_atomic(path: &Path, content: &str) -> std::result::Result<(), Failure> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, content)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    p: Option<usize>,
    quotient: &str,
    a: &str,
    b: Option<&str>,
    k: &str,
    method: MethodArg,
    tol: f64,
    out: Option<&Path>,
    max_size: usize,
    format: OutputFormat,
) -> std::result::Result<(), Failure> {
    let mu: PQuotient = quotient.parse()?;
    if let Some(p) = p {
        if p != mu.p() {
            return Err(Error::invalid(format!(
                "-p {} disagrees with the quotient's {} components",
                p,
                mu.p()
            ))
            .into());
        }
    }
    let rates = parse_i64_list(a, "growth rate")?;
    let offsets = match b {
        Some(text) => parse_i64_list(text, "growth offset")?,
        None => vec![0; rates.len()],
    };
    let growth = GrowthSpec::new(rates, offsets)?;
    let k_list = parse_k_list(k)?;
    let options = RunOptions {
        method: method.into(),
        tol,
        max_wronskian_size: max_size,
    };
    let report = run_convergence(&mu, &growth, &k_list, &options)?;

    // limit polynomial in human form, from the exact limit coefficients
    let limit = limit_coefficients_exact(&mu, growth.a())?;
    let total = mu.size();
    let mut limit_coeffs = vec![BigInt::from(0); total + 1];
    for (j, l) in limit.iter().enumerate() {
        limit_coeffs[total - j] = l.clone();
    }
    let limit_poly = IntPolynomial::from_coeffs(limit_coeffs);
    let summary = {
        let mut text = String::new();
        let _ = writeln!(text, "quotient: {}", report.quotient);
        let _ = writeln!(text, "p: {}", report.p);
        let _ = writeln!(
            text,
            "attractors: {}",
            report
                .attractors
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(
            text,
            "multiplicities: {}",
            report
                .component_sizes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(text, "limit coefficients: {}", report.limit_exact.join(","));
        let _ = writeln!(text, "limit polynomial: {}", limit_poly);
        text
    };

    if let Some(prefix) = out {
        let base = prefix.as_os_str().to_string_lossy().into_owned();
        let coeffs_path = PathBuf::from(format!("{}.coeffs.csv", base));
        let roots_path = PathBuf::from(format!("{}.roots.csv", base));
        let json_path = PathBuf::from(format!("{}.json", base));
        write_atomic(&coeffs_path, &report.coefficients_csv())?;
        write_atomic(&roots_path, &report.roots_csv())?;
        write_atomic(&json_path, &(report.to_json() + "\n"))?;
        print!("{}", summary);
        println!("wrote {}", coeffs_path.display());
        println!("wrote {}", roots_path.display());
        println!("wrote {}", json_path.display());
        return Ok(());
    }

    match format {
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Csv => {
            print!("{}", report.coefficients_csv());
            println!();
            print!("{}", report.roots_csv());
        }
        OutputFormat::Text => {
            print!("{}", summary);
            for row in &report.rows {
                println!("k={} sup_error={}", row.k, row.sup_error);
                for root in &row.roots {
                    println!(
                        "  root {}{}{}i -> attractor {} (distance {})",
                        root.re,
                        if root.im < 0.0 { "" } else { "+" },
                        root.im,
                        root.nearest_attractor,
                        root.distance
                    );
                }
            }
        }
    }
    Ok(())
}

fn cmd_selftest(max_size: usize) -> std::result::Result<(), Failure> {
    use crate::partitions::partitions_up_to;

    let lambdas = partitions_up_to(max_size);

    // bijection roundtrip and size formulas
    let mut checks = 0usize;
    for lambda in &lambdas {
        for p in 1..=5usize {
            let (mu, c) = decompose(lambda, p)?;
            let back = compose(&mu, &c)?;
            if back != *lambda {
                return Err(Error::internal(format!(
                    "roundtrip failed for ({}) at p={}",
                    lambda, p
                ))
                .into());
            }
            let removal = core_by_strip_removal(lambda, p)?;
            let size_formula = core_size_from_charvec(&c)?;
            if size_formula != removal.core.size() as u64
                || lambda.size() != removal.core.size() + p * mu.size()
            {
                return Err(Error::internal(format!(
                    "size identities failed for ({}) at p={}",
                    lambda, p
                ))
                .into());
            }
            checks += 1;
        }
    }
    println!(
        "bijection roundtrip and size identities (|lambda| <= {}, p <= 5): ok ({} checks)",
        max_size, checks
    );

    // hook split consistency
    let mut checks = 0usize;
    for lambda in &lambdas {
        for p in 1..=5usize {
            let split = crate::hook_products::hook_split(lambda, p)?;
            if &split.non_p_fold * &split.p_fold != crate::hook_products::hook_product(lambda) {
                return Err(Error::internal(format!(
                    "hook split does not multiply back for ({}) at p={}",
                    lambda, p
                ))
                .into());
            }
            let ratio = crate::hook_products::nonpfold_core_ratio(lambda, p)?;
            let (mu, _) = decompose(lambda, p)?;
            if ratio.factor_count != (p - 1) * mu.size() {
                return Err(Error::internal(format!(
                    "core ratio factor count off for ({}) at p={}",
                    lambda, p
                ))
                .into());
            }
            checks += 1;
        }
    }
    println!(
        "hook products, split, and core ratio (|lambda| <= {}, p <= 5): ok ({} checks)",
        max_size, checks
    );

    // Appell table: recurrence vs series
    for p in 1..=4usize {
        let by_recurrence = crate::wronskian_poly::appell_sequence(p, 12)?;
        let by_series = crate::wronskian_poly::appell_sequence_from_series(p, 12)?;
        for n in 0..=12usize {
            if by_recurrence.q(n) != by_series.q(n) {
                return Err(Error::internal(format!(
                    "appell constructions disagree at p={} n={}",
                    p, n
                ))
                .into());
            }
        }
    }
    println!("appell recurrence vs generating function (p <= 4, n <= 12): ok");

    // coefficient formula vs Wronskian determinant
    let bound = max_size.min(6);
    let mut checks = 0usize;
    for lambda in partitions_up_to(bound) {
        for p in [2usize, 3] {
            let (mu, c) = decompose(&lambda, p)?;
            let options = RunOptions {
                method: CoefficientMethod::Both,
                ..RunOptions::default()
            };
            exact_coefficients(&mu, &c, &options)?;
            checks += 1;
        }
    }
    println!(
        "coefficient formula vs wronskian factor (|lambda| <= {}, p in {{2,3}}): ok ({} checks)",
        bound, checks
    );

    Ok(())
}
