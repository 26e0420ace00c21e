//! Command-line front end. [`run`] is pure: it takes argv and returns the exit
//! code with everything that should go to stdout and stderr.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::clausen::{ClausenParams, PerturbationInput};
use crate::error::Error;
use crate::rational::{parse_list, ParseRationalError, Rational};
use crate::series::{series_coeffs, SeriesSpec, TruncatedSeries};
use crate::suite::{run_suite, SuiteReport};
use crate::verify::{self, Comparison, Identity, Params, Status, VerifyReport};

/// Comma-separated rational literals, e.g. `1,-1/2,3`.
#[derive(Clone, Debug)]
pub struct RationalList(pub Vec<Rational>);

impl FromStr for RationalList {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_list(s).map(RationalList)
    }
}

/// Comma-separated naturals.
#[derive(Clone, Debug)]
pub struct NaturalList(pub Vec<usize>);

impl FromStr for NaturalList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| format!("'{x}': {e}")))
            .collect::<Result<_, _>>()
            .map(NaturalList)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "clausen", version, about = "Exact Clausen-type product formulas for Gauss hypergeometric series")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic polynomial P_{2m}^{a,b}, cross-checked by interpolation.
    Charpoly(ClausenArgs),
    /// Perturbed polynomial hatP_{2m+s}; beyond s = 2m+1 only the
    /// interpolated polynomial is shown and the status is Refused.
    Hatpoly {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, allow_hyphen_values = true)]
        sigma: RationalList,
    },
    /// Coefficients of F(top; bottom | P | x) up to x^terms.
    Series {
        #[arg(long, allow_hyphen_values = true)]
        top: RationalList,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        bottom: RationalList,
        /// Perturbing polynomial coefficients, lowest degree first.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<RationalList>,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// Run one identity check.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Run the full randomized sweep.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct ClausenArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: Rational,
    #[arg(long, allow_hyphen_values = true)]
    b: Rational,
    #[arg(long)]
    m: usize,
}

impl ClausenArgs {
    fn params(&self) -> Result<ClausenParams, Error> {
        ClausenParams::new(self.a.clone(), self.b.clone(), self.m)
    }

    fn report_params(&self) -> Params {
        Params::new().with("a", &self.a).with("b", &self.b).with("m", self.m)
    }
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// [2F1(a,b;c)]^2 against the perturbed 3F2.
    Square {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// 2F1(a,b;c) F(a,b;c|F_s) against the 3F2 perturbed by hatP.
    Product {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, allow_hyphen_values = true)]
        sigma: RationalList,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// The product check with the interpolated hatP regardless of degree.
    BeyondBound {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, allow_hyphen_values = true)]
        sigma: RationalList,
    },
    /// Terminating 4F3 summations at k = 0..=k_max.
    Summations {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        sigma: RationalList,
        #[arg(long, default_value_t = 12)]
        k_max: usize,
    },
    /// Three-term recurrence of P(n) for n = 1..=terms.
    Recurrence {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// Whipple's 7F6 -> 4F3 transformation of degree n.
    Whipple {
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, allow_hyphen_values = true)]
        d: Rational,
        #[arg(long, allow_hyphen_values = true)]
        e: Rational,
        #[arg(long)]
        n: usize,
    },
    /// Karlsson's expansion for integral parameter differences.
    Karlsson {
        #[arg(long, allow_hyphen_values = true)]
        top: RationalList,
        #[arg(long, allow_hyphen_values = true)]
        bottom: RationalList,
        #[arg(long, allow_hyphen_values = true)]
        f: RationalList,
        #[arg(long)]
        mvec: NaturalList,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// f (x d/dx)^n f expanded by Stirling numbers, for f given by coefficients.
    Operator {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: RationalList,
        #[arg(long)]
        n: usize,
    },
    /// 2F1(a,b;c) 3F2(a,b,f+1;c,f) with the linear perturbation.
    Linear {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: Rational,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// 2F1(a,b;c) 2F1(a+1,b;c).
    Shifted {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// 2F1(a,b;c) 3F2(a,b,f+2;c,f) with the closed form of hatP_{2m+2}.
    Quadratic {
        #[command(flatten)]
        params: ClausenArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: Rational,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Verified => 0,
        Status::Deviation => 1,
        Status::Degenerate | Status::Refused => 2,
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let format = cli.format;
    match cli.command {
        Command::Suite { seed } => {
            let report = run_suite(seed);
            let code = if report.all_passed { 0 } else { 1 };
            Outcome { code, stdout: render_suite(&report, format), stderr: String::new() }
        }
        command => {
            let report = dispatch(command);
            Outcome {
                code: exit_code(report.status),
                stdout: render(&report, format),
                stderr: report
                    .reason
                    .as_ref()
                    .filter(|_| report.status != Status::Verified)
                    .map(|r| format!("{}: {r}\n", report.status))
                    .unwrap_or_default(),
            }
        }
    }
}

fn with_params(args: &ClausenArgs, id: Identity, f: impl FnOnce(&ClausenParams) -> VerifyReport) -> VerifyReport {
    match args.params() {
        Ok(params) => f(&params),
        Err(e) => VerifyReport::degenerate(id, args.report_params(), e),
    }
}

fn perturbation(sigma: RationalList, id: Identity, p: Params) -> Result<PerturbationInput, Box<VerifyReport>> {
    PerturbationInput::new(sigma.0).map_err(|e| Box::new(VerifyReport::degenerate(id, p, e)))
}

fn dispatch(command: Command) -> VerifyReport {
    match command {
        Command::Charpoly(args) => with_params(&args, Identity::CharPoly, verify::check_char_poly),
        Command::Hatpoly { params, sigma } => {
            let p = params.report_params().with_list("sigma", &sigma.0);
            match perturbation(sigma, Identity::HatPoly, p) {
                Ok(f) => with_params(&params, Identity::HatPoly, |cp| verify::check_hat_poly(cp, &f)),
                Err(report) => *report,
            }
        }
        Command::Series { top, bottom, sigma, terms } => series_report(top.0, bottom.0, sigma.map(|s| s.0), terms),
        Command::Verify(v) => dispatch_verify(v),
        Command::Suite { .. } => unreachable!("handled by run"),
    }
}

fn series_report(top: Vec<Rational>, bottom: Vec<Rational>, sigma: Option<Vec<Rational>>, terms: usize) -> VerifyReport {
    let mut p = Params::new().with_list("top", &top).with_list("bottom", &bottom).with("terms", terms);
    if let Some(sigma) = &sigma {
        p = p.with_list("sigma", sigma);
    }
    let spec = SeriesSpec::new(top, bottom);
    let spec = match sigma {
        Some(sigma) => spec.perturbed(crate::poly::RatPoly::new(sigma)),
        None => spec.unperturbed(),
    };
    match series_coeffs(&spec, terms) {
        Ok(coeffs) => {
            let mut report = VerifyReport::listing(Identity::Series, p);
            report.terms_checked = coeffs.len();
            report.coefficients = Some(coeffs);
            report
        }
        Err(e) => VerifyReport::degenerate(Identity::Series, p, e),
    }
}

fn dispatch_verify(command: VerifyCommand) -> VerifyReport {
    use VerifyCommand as V;
    match command {
        V::Square { params, terms } => with_params(&params, Identity::Square, |p| verify::verify_square(p, terms)),
        V::Product { params, sigma, terms } => {
            let p = params.report_params().with_list("sigma", &sigma.0);
            match perturbation(sigma, Identity::Product, p) {
                Ok(f) => with_params(&params, Identity::Product, |cp| verify::verify_product(cp, &f, terms)),
                Err(report) => *report,
            }
        }
        V::BeyondBound { params, sigma } => {
            let p = params.report_params().with_list("sigma", &sigma.0);
            match perturbation(sigma, Identity::ProductBeyondBound, p) {
                Ok(f) => with_params(&params, Identity::ProductBeyondBound, |cp| {
                    verify::verify_product_beyond_bound(cp, &f)
                }),
                Err(report) => *report,
            }
        }
        V::Summations { params, sigma, k_max } => {
            let p = params.report_params().with_list("sigma", &sigma.0);
            match perturbation(sigma, Identity::Summations, p) {
                Ok(f) => with_params(&params, Identity::Summations, |cp| verify::verify_summations(cp, &f, k_max)),
                Err(report) => *report,
            }
        }
        V::Recurrence { params, terms } => {
            with_params(&params, Identity::Recurrence, |p| verify::verify_recurrence(p, terms))
        }
        V::Whipple { a, b, c, d, e, n } => verify::verify_whipple(&a, &b, &c, &d, &e, n),
        V::Karlsson { top, bottom, f, mvec, terms } => verify::verify_karlsson(&top.0, &bottom.0, &f.0, &mvec.0, terms),
        V::Operator { coeffs, n } => verify::verify_operator_lemma(&TruncatedSeries::new(coeffs.0), n),
        V::Linear { params, f, terms } => {
            with_params(&params, Identity::LinearPerturbation, |p| verify::verify_linear_perturbation(p, &f, terms))
        }
        V::Shifted { params, terms } => {
            with_params(&params, Identity::ShiftedProduct, |p| verify::verify_shifted_product(p, terms))
        }
        V::Quadratic { params, f, terms } => with_params(&params, Identity::QuadraticPerturbation, |p| {
            verify::verify_quadratic_perturbation(p, &f, terms)
        }),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_row(out: &mut String, c: &Comparison) {
    let _ = writeln!(out, "{},{},{},{}", c.index, c.lhs, c.rhs, c.equal());
}

pub fn render(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => {
            let mut out = String::new();
            if let Some(coeffs) = &report.coefficients {
                out.push_str("k,coefficient\n");
                for (k, c) in coeffs.coeffs().iter().enumerate() {
                    let _ = writeln!(out, "{k},{c}");
                }
            } else if report.rows.is_empty() {
                out.push_str("power,coefficient\n");
                for (i, c) in report.polynomial.iter().flat_map(|p| p.coeffs().iter().enumerate()) {
                    let _ = writeln!(out, "{i},{c}");
                }
            } else {
                out.push_str("k,lhs,rhs,equal\n");
                for c in &report.rows {
                    csv_row(&mut out, c);
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "identity: {}", report.identity);
            for (k, v) in &report.params {
                let _ = writeln!(out, "  {k} = {v}");
            }
            let _ = writeln!(out, "status: {}", report.status);
            let _ = writeln!(out, "terms_checked: {}", report.terms_checked);
            if let Some(d) = &report.first_deviation {
                let _ = writeln!(out, "first deviation at k = {}: {} != {}", d.index, d.lhs, d.rhs);
            }
            if let Some(p) = &report.polynomial {
                let _ = writeln!(out, "polynomial: {p}");
            }
            if let Some(coeffs) = &report.coefficients {
                for (k, c) in coeffs.coeffs().iter().enumerate() {
                    let _ = writeln!(out, "  x^{k}: {c}");
                }
            }
            if let Some(r) = &report.reason {
                let _ = writeln!(out, "reason: {r}");
            }
            out
        }
    }
}

fn render_suite(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => {
            let mut out = String::from("group,identity,status,expected,ok\n");
            for e in &report.reports {
                let _ = writeln!(out, "{},{},{},{},{}", e.group, e.report.identity, e.report.status, e.expected, e.ok);
            }
            out
        }
        Format::Text => {
            let mut groups: Vec<(&str, usize, usize)> = Vec::new();
            for e in &report.reports {
                match groups.iter_mut().find(|g| g.0 == e.group) {
                    Some(g) => {
                        g.1 += 1;
                        g.2 += usize::from(e.ok);
                    }
                    None => groups.push((e.group, 1, usize::from(e.ok))),
                }
            }
            let mut out = format!("seed {}\n", report.seed);
            for (group, total, ok) in groups {
                let _ = writeln!(out, "{group:<24} {ok:>4}/{total:<4}");
            }
            let verdict = if report.all_passed { "all passed" } else { "FAILED" };
            let _ = writeln!(out, "{} of {} as expected: {verdict}", report.total - report.failed, report.total);
            out
        }
    }
}
