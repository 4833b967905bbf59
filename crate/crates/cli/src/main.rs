//! zetaforge: constants, special-function evaluation, and the identity
//! suite from the command line.
//!
//! Exit codes: 0 all checks pass, 1 any FAIL, 2 usage/domain error,
//! 3 any NO_CONVERGE (with no FAIL), 4 report I/O failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use zetaforge_core::hassekernel::{PrecisionPolicy, SeriesResult};
use zetaforge_core::identityreg::{register_builtin, Cost, Group, Status, SuiteReport};
use zetaforge_core::specialfn::{self, ConstantsCache, HurwitzPoint};
use zetaforge_core::Error;

#[derive(Parser)]
#[command(name = "zetaforge", version, about = "Riemann-zeta identity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SuiteOpts {
    /// Override the series tolerance (rel and abs)
    #[arg(long)]
    tol: Option<f64>,
    /// Override the maximum difference order / term count
    #[arg(long)]
    nmax: Option<usize>,
    /// Write a JSON report to this path
    #[arg(long, value_name = "PATH")]
    json: Option<String>,
    /// Write a CSV report to this path
    #[arg(long, value_name = "PATH")]
    csv: Option<String>,
    /// Suppress per-record text output
    #[arg(long)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a mathematical constant to a number of significant figures
    Const {
        name: String,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// Evaluate a special function at the given arguments
    Eval {
        function: String,
        args: Vec<f64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Check a single identity by id
    Check {
        id: String,
        #[command(flatten)]
        opts: SuiteOpts,
    },
    /// Run the identity suite, optionally filtered by group and cost
    Suite {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        cost: Option<String>,
        #[command(flatten)]
        opts: SuiteOpts,
    },
    /// List the catalogued identities
    List {
        #[arg(long)]
        group: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Const { name, digits } => cmd_const(&name, digits),
        Command::Eval {
            function,
            args,
            tol,
            nmax,
        } => cmd_eval(&function, &args, policy_from(tol, nmax)),
        Command::Check { id, opts } => cmd_check(&id, &opts),
        Command::Suite { group, cost, opts } => cmd_suite(group.as_deref(), cost.as_deref(), &opts),
        Command::List { group } => cmd_list(group.as_deref()),
    };
    ExitCode::from(code)
}

fn policy_from(tol: Option<f64>, nmax: Option<usize>) -> PrecisionPolicy {
    let mut p = PrecisionPolicy::default();
    if let Some(t) = tol {
        p = p.with_tol(t);
    }
    let env_nmax = std::env::var("ZETAFORGE_NMAX")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    if let Some(n) = nmax.or(env_nmax) {
        p = p.with_n_max(n);
    }
    p
}

/// Format to `digits` significant figures in plain decimal notation.
fn significant(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return format!("{:.*}", digits.saturating_sub(1), 0.0);
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    format!("{:.*}", decimals, v)
}

fn cmd_const(name: &str, digits: usize) -> u8 {
    if !(1..=15).contains(&digits) {
        eprintln!("digits must be between 1 and 15");
        return 2;
    }
    let c = ConstantsCache::standard();
    let (value, reference) = match name {
        "gamma" => (
            c.euler_gamma,
            "Euler-Mascheroni constant, gamma = lim (H_n - log n)",
        ),
        "catalan" => (
            c.catalan,
            "Catalan's constant, G = sum (-1)^k/(2k+1)^2 = Cl_2(pi/2)",
        ),
        "glaisher" => (
            c.log_glaisher.exp(),
            "Glaisher-Kinkelin constant, log A = 1/12 - zeta'(-1)",
        ),
        "zeta3" => (c.zeta3, "Apery's constant, zeta(3)"),
        "zeta_prime_neg1" => (c.zeta_prime_neg1, "zeta'(-1) = 1/12 - log A"),
        "zeta_prime_neg2" => (c.zeta_prime_neg2, "zeta'(-2) = -zeta(3)/(4 pi^2)"),
        _ => {
            eprintln!("unknown constant: {}", name);
            eprintln!(
                "known: gamma, catalan, glaisher, zeta3, zeta_prime_neg1, zeta_prime_neg2"
            );
            return 2;
        }
    };
    println!("{}", significant(value, digits));
    println!("{}", reference);
    0
}

fn eval_error_code(e: &Error) -> u8 {
    match e {
        Error::NonConvergence { .. } | Error::Divergence | Error::ToleranceNotReached { .. } => 3,
        _ => 2,
    }
}

fn cmd_eval(function: &str, args: &[f64], policy: PrecisionPolicy) -> u8 {
    let arity_err = |want: &str| -> u8 {
        eprintln!("{} expects arguments: {}", function, want);
        2
    };
    let scalar = |v: f64| SeriesResult {
        value: v,
        terms_used: 0,
        est_error: 0.0,
        converged: true,
    };
    let result = match (function, args) {
        ("digamma", [u]) => specialfn::digamma(*u, &policy),
        ("digamma", _) => return arity_err("U"),
        ("polygamma", [p, u]) if *p >= 0.0 && p.fract() == 0.0 => {
            specialfn::polygamma(*p as u32, *u, &policy)
        }
        ("polygamma", _) => return arity_err("P U (P a non-negative integer)"),
        ("loggamma", [u]) => specialfn::log_gamma(*u, &policy),
        ("loggamma", _) => return arity_err("U"),
        ("hurwitz", [s, u]) => specialfn::hurwitz_zeta(HurwitzPoint::new(*s, *u), &policy),
        ("hurwitz", _) => return arity_err("S U"),
        ("hurwitz_deriv", [s, u]) => {
            specialfn::hurwitz_zeta_deriv(HurwitzPoint::new(*s, *u), &policy)
        }
        ("hurwitz_deriv", _) => return arity_err("S U"),
        ("barnesg", [u]) => specialfn::barnes_g_log(*u, &policy).map(scalar),
        ("barnesg", _) => return arity_err("U"),
        ("clausen", [n, theta]) if *n >= 2.0 && n.fract() == 0.0 => {
            specialfn::clausen(*n as usize, *theta).map(scalar)
        }
        ("clausen", _) => return arity_err("N THETA (N an integer >= 2)"),
        ("polylog", [s, x]) if *s >= 1.0 && s.fract() == 0.0 => {
            specialfn::polylog(*s as usize, *x, &policy)
        }
        ("polylog", _) => return arity_err("S X (S a positive integer)"),
        ("stieltjes", [m, u]) if *m >= 0.0 && m.fract() == 0.0 => {
            specialfn::stieltjes(*m as usize, *u, &policy)
        }
        ("stieltjes", _) => return arity_err("M U (M a non-negative integer)"),
        _ => {
            eprintln!("unknown function: {}", function);
            eprintln!(
                "known: digamma, polygamma, loggamma, hurwitz, hurwitz_deriv, \
                 barnesg, clausen, polylog, stieltjes"
            );
            return 2;
        }
    };
    match result {
        Ok(r) => {
            println!("value      {:.15e}", r.value);
            println!("est_error  {:e}", r.est_error);
            println!("terms      {}", r.terms_used);
            println!("converged  {}", r.converged);
            if r.converged {
                0
            } else {
                3
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            eval_error_code(&e)
        }
    }
}

/// Exit code as a pure function of the report.
fn exit_code_for(report: &SuiteReport) -> u8 {
    if report.failed > 0 {
        1
    } else if report.no_converge > 0 {
        3
    } else {
        0
    }
}

fn print_outcomes(report: &SuiteReport, quiet: bool) {
    if !quiet {
        for o in &report.outcomes {
            println!(
                "{:<14} {:<10} {:<11} lhs {:+.12e}  rhs {:+.12e}  residual {:.3e}  tol {:.1e}",
                o.id,
                o.group,
                o.status.as_str(),
                o.lhs,
                o.rhs,
                o.residual,
                o.tolerance
            );
        }
    }
    println!(
        "total {}  pass {}  fail {}  no_converge {}",
        report.outcomes.len(),
        report.passed,
        report.failed,
        report.no_converge
    );
}

fn write_reports(report: &SuiteReport, opts: &SuiteOpts) -> u8 {
    if let Some(path) = &opts.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("cannot write {}: {}", path, e);
            return 4;
        }
    }
    if let Some(path) = &opts.csv {
        if let Err(e) = std::fs::write(path, report.to_csv()) {
            eprintln!("cannot write {}: {}", path, e);
            return 4;
        }
    }
    exit_code_for(report)
}

fn cmd_check(id: &str, opts: &SuiteOpts) -> u8 {
    let policy = policy_from(opts.tol, opts.nmax);
    let cat = register_builtin();
    // record ids are canonically upper-case
    match cat.check(&id.to_ascii_uppercase(), &policy) {
        Ok(o) => {
            let report = SuiteReport {
                schema_version: 1,
                policy: (&policy).into(),
                passed: usize::from(o.status == Status::Pass),
                failed: usize::from(o.status == Status::Fail),
                no_converge: usize::from(o.status == Status::NoConverge),
                outcomes: vec![o],
                timestamp: 0,
            };
            print_outcomes(&report, opts.quiet);
            write_reports(&report, opts)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}

fn cmd_suite(group: Option<&str>, cost: Option<&str>, opts: &SuiteOpts) -> u8 {
    let group = match group {
        Some(s) => match Group::parse(s) {
            Some(g) => Some(g),
            None => {
                eprintln!("unknown group: {}", s);
                return 2;
            }
        },
        None => None,
    };
    let cost = match cost {
        Some(s) => match Cost::parse(s) {
            Some(c) => Some(c),
            None => {
                eprintln!("unknown cost class: {}", s);
                return 2;
            }
        },
        None => None,
    };
    let policy = policy_from(opts.tol, opts.nmax);
    let report = register_builtin().run_suite(group, cost, &policy);
    print_outcomes(&report, opts.quiet);
    write_reports(&report, opts)
}

fn cmd_list(group: Option<&str>) -> u8 {
    let group = match group {
        Some(s) => match Group::parse(s) {
            Some(g) => Some(g),
            None => {
                eprintln!("unknown group: {}", s);
                return 2;
            }
        },
        None => None,
    };
    let cat = register_builtin();
    for r in cat
        .records()
        .iter()
        .filter(|r| group.map_or(true, |g| r.group == g))
    {
        println!(
            "{:<14} {:<10} tol {:<8.1e} {:<5} {}",
            r.id,
            r.group.as_str(),
            r.tolerance,
            r.cost.as_str(),
            r.reference
        );
    }
    0
}
