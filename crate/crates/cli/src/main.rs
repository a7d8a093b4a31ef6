//! `cbs`: sequences, polynomial tables, exact zeta values, verification
//! suites, and numeric cross-checks for the central binomial series circle
//! of identities.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 enumeration-guard violation.

mod output;

use cbs_core::error::Error;
use cbs_core::exact::Rat;
use cbs_core::polybernoulli::PolyBernoulliTable;
use cbs_core::verify::{self, SuiteConfig};
use cbs_core::{eulerian, lehmer, polybernoulli};
use clap::{Parser, Subcommand, ValueEnum};
use output::{Format, OutputRecord};

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_GUARD: i32 = 3;

#[derive(Parser)]
#[command(
    name = "cbs",
    version,
    about = "Central binomial series toolkit: exact sequences, Lehmer polynomials, \
             bivariate Eulerian polynomials, poly-Bernoulli numbers, and the \
             verification suites tying them together"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum SeqName {
    /// Antidiagonal sums of poly-Bernoulli numbers (via their recursion)
    B,
    /// a_n = (2/3)^n p_n(1/4)
    A,
    /// Poly-Bernoulli numbers B_n^(k) at fixed upper index --k
    Polybernoulli,
    /// Exact values of the central binomial zeta function at -n
    Zeta,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum PolyFamily {
    /// Lehmer p_n (n >= -1)
    P,
    /// Lehmer q_n (n >= -1)
    Q,
    /// Bivariate Eulerian F_n(x, y); --y substitutes a rational for y
    #[value(name = "F")]
    F,
    /// s-Eulerian polynomial for --bounds s_1,s_2,...
    #[value(name = "sEulerian")]
    SEulerian,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum EvalTarget {
    /// Series sum (2n)^k (2x)^{2n}/C(2n,n) against its arcsin closed form
    Lehmer,
    /// EGF of (p_{n-1}) against its closed form
    #[value(name = "P")]
    P,
    /// EGF of (q_{n-1}) against its closed form
    #[value(name = "Q")]
    Q,
    /// EGF of (a_n) against its closed form
    Aegf,
    /// Dirichlet partial sums against the exact zeta value
    Dirichlet,
}

#[derive(Subcommand)]
enum Command {
    /// Stream a sequence as one record per line
    Seq {
        name: SeqName,
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Upper index for the polybernoulli sequence
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        k: i64,
    },
    /// Print one polynomial's coefficients (constant term first)
    Poly {
        family: PolyFamily,
        /// Index n (required for p, q, F)
        #[arg(allow_negative_numbers = true)]
        n: Option<i64>,
        /// Rational "num/den" to substitute for y in F
        #[arg(long)]
        y: Option<String>,
        /// Comma-separated positive bounds for sEulerian, e.g. 1,3,5
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run a verification suite and print its JSON-lines report
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-n")]
        max_n: Option<u32>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Absolute tolerance for the numeric suites
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Evaluate a closed form against its series and print both
    Eval {
        target: EvalTarget,
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
        /// Series truncation (default: 60 for lehmer/dirichlet, 25 for EGFs)
        #[arg(long)]
        terms: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("cbs: {}", failure.message);
            failure.exit_code
        }
    });
}

struct Failure {
    exit_code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        exit_code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let exit_code = match err {
            Error::EnumerationGuard { .. } => EXIT_GUARD,
            _ => EXIT_USAGE,
        };
        Failure {
            exit_code,
            message: err.to_string(),
        }
    }
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Seq {
            name,
            max_n,
            format,
            k,
        } => cmd_seq(name, max_n, format, k),
        Command::Poly {
            family,
            n,
            y,
            bounds,
            format,
        } => cmd_poly(family, n, y, bounds, format),
        Command::Verify {
            suite,
            max_n,
            seed,
            tolerance,
        } => cmd_verify(&suite, max_n, seed, tolerance),
        Command::Eval {
            target,
            k,
            x,
            t,
            terms,
            format,
        } => cmd_eval(target, k, x, t, terms, format),
    }
}

fn print_record(record: &OutputRecord, format: Format) {
    println!("{}", record.render(format));
}

fn cmd_seq(name: SeqName, max_n: u32, format: Format, k: i64) -> Result<i32, Failure> {
    match name {
        SeqName::B => {
            let seq = polybernoulli::b_rec_sequence(max_n as u64);
            for (n, value) in seq.iter().enumerate() {
                print_record(&OutputRecord::sequence("b", n as i64, value), format);
            }
        }
        SeqName::A => {
            for n in 0..=max_n as u64 {
                let value = lehmer::a_seq(n);
                print_record(&OutputRecord::sequence("a", n as i64, &value), format);
            }
        }
        SeqName::Polybernoulli => {
            let table = PolyBernoulliTable::new();
            for n in 0..=max_n as u64 {
                let value = table.get(n, k);
                print_record(
                    &OutputRecord::sequence("polybernoulli", n as i64, &value),
                    format,
                );
            }
        }
        SeqName::Zeta => {
            for n in 0..=max_n as u64 {
                let z = lehmer::zeta_cb_neg(n);
                print_record(&OutputRecord::zeta(n as i64, &z), format);
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_poly(
    family: PolyFamily,
    n: Option<i64>,
    y: Option<String>,
    bounds: Option<String>,
    format: Format,
) -> Result<i32, Failure> {
    match family {
        PolyFamily::P | PolyFamily::Q => {
            let n = n.ok_or_else(|| usage("index n is required for families p and q"))?;
            if n < -1 {
                return Err(usage(format!("family index must be >= -1, got {n}")));
            }
            let pair = lehmer::pq_polys(n);
            let (label, poly) = match family {
                PolyFamily::P => ("p", pair.p),
                _ => ("q", pair.q),
            };
            print_record(&OutputRecord::polynomial(label, n, &poly), format);
        }
        PolyFamily::F => {
            let n = n.ok_or_else(|| usage("index n is required for family F"))?;
            if n < 0 {
                return Err(usage(format!("F requires n >= 0, got {n}")));
            }
            match y {
                Some(text) => {
                    let y0: Rat = text
                        .parse()
                        .map_err(|e| usage(format!("invalid --y value: {e}")))?;
                    let poly = eulerian::bivariate_at_y(n as usize, &y0);
                    print_record(&OutputRecord::polynomial("F", n, &poly), format);
                }
                None => {
                    let poly = eulerian::bivariate(n as usize);
                    print_record(&OutputRecord::bivariate("F", n, &poly), format);
                }
            }
        }
        PolyFamily::SEulerian => {
            let text = bounds.ok_or_else(|| usage("--bounds is required for sEulerian"))?;
            let parsed: Result<Vec<u64>, _> = text
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<u64>())
                .collect();
            let bounds = parsed.map_err(|_| usage(format!("invalid --bounds list '{text}'")))?;
            if bounds.contains(&0) {
                return Err(usage("bounds must be positive"));
            }
            let poly = eulerian::s_eulerian(&bounds)?;
            print_record(
                &OutputRecord::polynomial("sEulerian", bounds.len() as i64, &poly),
                format,
            );
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: &str,
    max_n: Option<u32>,
    seed: u64,
    tolerance: Option<f64>,
) -> Result<i32, Failure> {
    let config = SuiteConfig {
        max_n,
        seed,
        tolerance,
    };
    let results = verify::run_suite(suite, &config)?;
    print!("{}", verify::to_json_lines(&results));
    if results.iter().all(|r| r.passed) {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VERIFY_FAILED)
    }
}

fn cmd_eval(
    target: EvalTarget,
    k: Option<i64>,
    x: Option<f64>,
    t: Option<f64>,
    terms: Option<u32>,
    format: Format,
) -> Result<i32, Failure> {
    let need = |value: Option<f64>, flag: &str| {
        value.ok_or_else(|| usage(format!("--{flag} is required for this target")))
    };
    let record = match target {
        EvalTarget::Lehmer => {
            let k = k.unwrap_or(-1);
            if k < -1 {
                return Err(usage(format!("lehmer requires k >= -1, got {k}")));
            }
            let x = need(x, "x")?;
            let terms = terms.unwrap_or(60);
            let closed = lehmer::closed_form_rhs(k, x)?;
            let series = lehmer::series_partial_sum(k, x, terms)?;
            OutputRecord::numeric("lehmer", closed, series)
        }
        EvalTarget::P => {
            let x = need(x, "x")?;
            let t = need(t, "t")?;
            let closed = lehmer::p_egf_closed(x, t)?;
            let series = lehmer::p_egf_truncated(x, t, terms.unwrap_or(25));
            OutputRecord::numeric("P", closed, series)
        }
        EvalTarget::Q => {
            let x = need(x, "x")?;
            let t = need(t, "t")?;
            let closed = lehmer::q_egf_closed(x, t)?;
            let series = lehmer::q_egf_truncated(x, t, terms.unwrap_or(25));
            OutputRecord::numeric("Q", closed, series)
        }
        EvalTarget::Aegf => {
            let t = need(t, "t")?;
            let closed = lehmer::a_egf_closed(t)?;
            let series = lehmer::a_egf_truncated(t, terms.unwrap_or(25));
            OutputRecord::numeric("aegf", closed, series)
        }
        EvalTarget::Dirichlet => {
            let k = k.unwrap_or(0);
            if k < 0 {
                return Err(usage(format!(
                    "dirichlet compares zeta at non-negative k, got {k}"
                )));
            }
            let terms = terms.unwrap_or(60);
            let closed = lehmer::zeta_cb_neg(k as u64).to_f64();
            let series = lehmer::dirichlet_partial_sum(k, terms);
            OutputRecord::numeric("dirichlet", closed, series)
        }
    };
    print_record(&record, format);
    Ok(EXIT_OK)
}
