//! The `riordan` command line: a series calculator, matrix and polynomial
//! emitters, the basis tools and the verification runner.
//!
//! Every command writes one document to the output stream in the chosen
//! format; JSON documents use the interchange formats of `riordan-core`
//! and parse back to the same value.

pub mod expr;

use std::fmt::Write as _;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use riordan_core::fibbasis::{
    apply_a, apply_b, build_basis, coordinates_in_b, right_inverse_b, BasisKind, Family, RightInverse,
};
use riordan_core::fps::{format_rational, parse_rational, Poly, Rational, Series};
use riordan_core::matrix::Matrix;
use riordan_core::polyfam::{family_poly, FamilyTag};
use riordan_core::riordan::{pascal_power, RiordanPair};
use riordan_core::suite::{find_suite, run_all, suites, SuiteConfig, SuiteReport};
use riordan_core::transforms::{type1_cs, type2_even_pair, type2_odd_pair, type2_tu, TypeOneContext, TypeTwoContext};

pub use expr::parse_series_expr;

/// Exit status of a successful run.
pub const EXIT_OK: u8 = 0;
/// Exit status when a verification suite reports a failure.
pub const EXIT_VERIFY_FAILED: u8 = 1;
/// Exit status for malformed arguments or input.
pub const EXIT_USAGE: u8 = 2;

/// Rows emitted when `--rows` is not given.
pub const DEFAULT_ROWS: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "riordan", version, about = "Exact power series, Riordan arrays and Fibonacci bases")]
pub struct Cli {
    /// Truncation order N: series are exact through x^N.
    #[arg(long, global = true, default_value_t = 16)]
    pub order: usize,
    /// Number of matrix rows to emit.
    #[arg(long, global = true)]
    pub rows: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Rational parameter phi, as p/q.
    #[arg(long, global = true, value_parser = rational_arg, allow_hyphen_values = true)]
    pub phi: Option<Rational>,
    /// Rational parameter beta, as p/q.
    #[arg(long, global = true, value_parser = rational_arg, allow_hyphen_values = true)]
    pub beta: Option<Rational>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a series expression, optionally applying an operation.
    Series(SeriesArgs),
    /// Emit the matrix of a Riordan pair.
    #[command(subcommand)]
    Matrix(MatrixCommand),
    /// Emit a Chebyshev, Dickson, Lucas or Fibonacci polynomial (C, S, D, E, L, F).
    Poly {
        #[arg(value_parser = family_arg)]
        family: FamilyTag,
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Polynomial decompositions of the first and second type transformations.
    Transform {
        #[arg(value_enum)]
        kind: TransformKind,
        /// Index of the decomposition.
        #[arg(long)]
        n: usize,
    },
    /// Fibonacci bases.
    #[command(subcommand)]
    Basis(BasisCommand),
    /// Run verification suites: `all`, or suite names.
    Verify {
        #[arg(default_value = "all")]
        suites: Vec<String>,
    },
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Expression in x, e.g. "1/(1-x-x^2)" or "sqrt(1+4*x)".
    pub expr: String,
    #[arg(long, value_enum, default_value_t = SeriesOp::Expand)]
    pub op: SeriesOp,
    /// Inner series for `--op compose`.
    #[arg(long)]
    pub with: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesOp {
    Expand,
    Inverse,
    Reversion,
    Sqrt,
    LogDeriv,
    Even,
    Odd,
    Compose,
}

#[derive(Subcommand, Debug)]
pub enum MatrixCommand {
    /// The pair (f, g) given as expressions.
    Riordan {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        cols: Option<usize>,
    },
    /// P^phi = (1/(1 - phi x), x/(1 - phi x)); phi defaults to 1.
    Pascal,
    /// M = (1, -x).
    Involution,
    /// Right inverse 1 or 2 of B.
    RightInverse {
        #[arg(long, value_parser = which_arg)]
        which: RightInverse,
        #[arg(long)]
        cols: Option<usize>,
    },
    /// ((1 - phi x)/D, x^2/D) with D = 1 - 2 phi x + beta x^2.
    EvenColumns {
        #[arg(long)]
        cols: Option<usize>,
    },
    /// (x/D, x^2/D) with D = 1 - 2 phi x + beta x^2.
    OddColumns {
        #[arg(long)]
        cols: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    Type1,
    Type2,
}

#[derive(Subcommand, Debug)]
pub enum BasisCommand {
    /// Leading columns of a basis.
    Build {
        /// A, B, A-red, B-red, A-gen or B-gen (the last two use --phi and --beta).
        #[arg(long, default_value = "A")]
        kind: String,
        #[arg(long, default_value_t = 8)]
        cols: usize,
    },
    /// Coordinates in B of a series read from standard input as JSON.
    Coords {
        #[arg(long, value_parser = which_arg)]
        which: RightInverse,
    },
    /// Image of a series under A or B (classic or reduced); the series is an
    /// expression, or JSON on standard input when omitted.
    Apply {
        #[arg(long, default_value = "A")]
        kind: String,
        expr: Option<String>,
    },
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn family_arg(text: &str) -> Result<FamilyTag, String> {
    text.parse().map_err(|e: riordan_core::Error| e.to_string())
}

fn which_arg(text: &str) -> Result<RightInverse, String> {
    text.parse().map_err(|e: riordan_core::Error| e.to_string())
}

/// Why a run did not succeed.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input; exit status 2.
    Usage(String),
    /// Some verification case failed; the report has been written; exit status 1.
    VerificationFailed,
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed => EXIT_VERIFY_FAILED,
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl From<riordan_core::Error> for CliError {
    fn from(e: riordan_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("bad JSON input: {e}"))
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::VerificationFailed => write!(f, "verification failed"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// `(c_n, s_n)` or `(t_n, u_n)` as emitted by `transform`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub kind: String,
    pub phi: String,
    pub beta: String,
    pub n: usize,
    pub first: Poly,
    pub second: Poly,
}

/// Runs one command, reading standard input only for the commands that take
/// a series document.
pub fn run(cli: &Cli, input: &mut dyn Read, out: &mut dyn Write) -> CliResult<()> {
    let doc = match &cli.command {
        Command::Series(args) => series_command(cli, args)?,
        Command::Matrix(cmd) => render_matrix(cli.format, &matrix_command(cli, cmd)?)?,
        Command::Poly { family, n } => {
            let beta = cli.beta.clone().unwrap_or_default();
            render_poly(cli.format, &family_poly(*family, *n, &beta)?)?
        }
        Command::Transform { kind, n } => render_decomposition(cli.format, &transform_command(cli, *kind, *n)?)?,
        Command::Basis(cmd) => basis_command(cli, cmd, input)?,
        Command::Verify { suites } => {
            let (text, ok) = verify_command(cli, suites)?;
            out.write_all(text.as_bytes())?;
            return if ok { Ok(()) } else { Err(CliError::VerificationFailed) };
        }
    };
    out.write_all(doc.as_bytes())?;
    Ok(())
}

fn phi_or(cli: &Cli, default: i64) -> Rational {
    cli.phi.clone().unwrap_or_else(|| Rational::from_integer(default.into()))
}

fn beta_or_zero(cli: &Cli) -> Rational {
    cli.beta.clone().unwrap_or_default()
}

fn rows(cli: &Cli) -> usize {
    cli.rows.unwrap_or(DEFAULT_ROWS)
}

fn series_command(cli: &Cli, args: &SeriesArgs) -> CliResult<String> {
    let a = parse_series_expr(&args.expr, cli.order)?;
    if args.with.is_some() && args.op != SeriesOp::Compose {
        return Err(CliError::Usage("--with only applies to --op compose".into()));
    }
    let result = match args.op {
        SeriesOp::Expand => a,
        SeriesOp::Inverse => a.inv()?,
        SeriesOp::Reversion => a.reversion()?,
        SeriesOp::Sqrt => a.sqrt()?,
        SeriesOp::LogDeriv => a.log_deriv_factor()?,
        SeriesOp::Even => a.even_odd_split().0,
        SeriesOp::Odd => a.even_odd_split().1,
        SeriesOp::Compose => {
            let inner = args.with.as_deref().ok_or_else(|| CliError::Usage("--op compose needs --with".into()))?;
            a.compose(&parse_series_expr(inner, cli.order)?)?
        }
    };
    render_series(cli.format, &result)
}

fn matrix_command(cli: &Cli, cmd: &MatrixCommand) -> CliResult<Matrix> {
    let n_rows = rows(cli);
    let order = cli.order.max(n_rows.saturating_sub(1));
    let (pair, cols) = match cmd {
        MatrixCommand::Riordan { f, g, cols } => {
            let pair = RiordanPair::new(parse_series_expr(f, order)?, parse_series_expr(g, order)?)?;
            (pair, *cols)
        }
        MatrixCommand::Pascal => (pascal_power(&phi_or(cli, 1), order), None),
        MatrixCommand::Involution => (RiordanPair::sign_involution(order), None),
        MatrixCommand::RightInverse { which, cols } => (right_inverse_b(*which, order), *cols),
        MatrixCommand::EvenColumns { cols } => (type2_even_pair(&phi_or(cli, 1), &beta_or_zero(cli), order), *cols),
        MatrixCommand::OddColumns { cols } => (type2_odd_pair(&phi_or(cli, 1), &beta_or_zero(cli), order), *cols),
    };
    Ok(pair.to_matrix_cols(n_rows, cols.unwrap_or(n_rows))?)
}

fn transform_command(cli: &Cli, kind: TransformKind, n: usize) -> CliResult<Decomposition> {
    let phi = phi_or(cli, 1);
    let beta = beta_or_zero(cli);
    let order = cli.order.max(2 * n);
    let (name, (first, second)) = match kind {
        TransformKind::Type1 => ("type1", type1_cs(&TypeOneContext::new(&phi, &beta, order)?, n)?),
        TransformKind::Type2 => ("type2", type2_tu(&TypeTwoContext::new(&phi, &beta, order)?, n)?),
    };
    Ok(Decomposition { kind: name.into(), phi: format_rational(&phi), beta: format_rational(&beta), n, first, second })
}

fn basis_kind(cli: &Cli, text: &str) -> CliResult<BasisKind> {
    let kind: BasisKind = text.parse()?;
    Ok(match kind {
        BasisKind::A(Family::General { .. }) => BasisKind::A(Family::general(phi_or(cli, 1), beta_or_zero(cli))),
        BasisKind::B(Family::General { .. }) => BasisKind::B(Family::general(phi_or(cli, 1), beta_or_zero(cli))),
        other => {
            if cli.phi.is_some() || cli.beta.is_some() {
                return Err(CliError::Usage(format!("--phi/--beta only apply to A-gen and B-gen, not {other}")));
            }
            other
        }
    })
}

fn read_series(input: &mut dyn Read) -> CliResult<Series> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    Ok(serde_json::from_str(&text)?)
}

fn basis_command(cli: &Cli, cmd: &BasisCommand, input: &mut dyn Read) -> CliResult<String> {
    match cmd {
        BasisCommand::Build { kind, cols } => {
            let kind = basis_kind(cli, kind)?;
            let basis = build_basis(&kind, *cols, cli.order);
            match cli.format {
                Format::Json => json(&basis),
                Format::Csv | Format::Pretty => {
                    let n_rows = cli.rows.unwrap_or_else(|| (*cols).min(cli.order + 1));
                    render_matrix(cli.format, &basis.to_matrix(n_rows)?)
                }
            }
        }
        BasisCommand::Coords { which } => render_series(cli.format, &coordinates_in_b(&read_series(input)?, *which)?),
        BasisCommand::Apply { kind, expr } => {
            let kind = basis_kind(cli, kind)?;
            let a = match expr {
                Some(text) => parse_series_expr(text, cli.order)?,
                None => read_series(input)?,
            };
            let image = match &kind {
                BasisKind::A(family) => apply_a(family, &a),
                BasisKind::B(family) => apply_b(family, &a)?,
            };
            render_series(cli.format, &image)
        }
    }
}

fn verify_command(cli: &Cli, names: &[String]) -> CliResult<(String, bool)> {
    let cfg = SuiteConfig { order: cli.order, seed: cli.seed };
    let reports: Vec<SuiteReport> = if names.iter().any(|n| n == "all") {
        if names.len() > 1 {
            return Err(CliError::Usage("`all` cannot be combined with suite names".into()));
        }
        run_all(&cfg)
    } else {
        let mut chosen = Vec::new();
        for name in names {
            let suite = find_suite(name).ok_or_else(|| {
                let known: Vec<&str> = suites().iter().map(|s| s.name).collect();
                CliError::Usage(format!("unknown suite {name:?} (known: all, {})", known.join(", ")))
            })?;
            chosen.push(suite);
        }
        std::thread::scope(|scope| {
            let handles: Vec<_> = chosen.iter().map(|s| scope.spawn(|| s.run(&cfg))).collect();
            handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
        })
    };
    let ok = reports.iter().all(SuiteReport::passed);
    let text = match cli.format {
        Format::Json => json(&reports)?,
        Format::Csv => {
            let mut s = String::from("suite,cases,failures\n");
            for r in &reports {
                let _ = writeln!(s, "{},{},{}", r.name, r.cases, r.failures.len());
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{status} {:<16} {} cases", r.name, r.cases);
                for f in &r.failures {
                    let _ = writeln!(s, "     {f}");
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(s, "{} of {} suites pass", reports.len() - failed, reports.len());
            s
        }
    };
    Ok((text, ok))
}

fn json<T: Serialize + ?Sized>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn indexed_csv(header: &str, coeffs: &[Rational]) -> String {
    let mut s = format!("{header}\n");
    for (k, c) in coeffs.iter().enumerate() {
        let _ = writeln!(s, "{k},{}", format_rational(c));
    }
    s
}

pub fn render_series(format: Format, a: &Series) -> CliResult<String> {
    match format {
        Format::Json => json(a),
        Format::Csv => Ok(indexed_csv("n,coeff", a.coeffs())),
        Format::Pretty => Ok(format!("{a}\n")),
    }
}

pub fn render_poly(format: Format, p: &Poly) -> CliResult<String> {
    match format {
        Format::Json => json(p),
        Format::Csv => Ok(indexed_csv("k,coeff", p.coeffs())),
        Format::Pretty => Ok(format!("{p}\n")),
    }
}

pub fn render_matrix(format: Format, m: &Matrix) -> CliResult<String> {
    match format {
        Format::Json => json(m),
        Format::Csv => Ok(m.to_csv()),
        Format::Pretty => Ok(m.to_string()),
    }
}

fn render_decomposition(format: Format, d: &Decomposition) -> CliResult<String> {
    let (a, b) = if d.kind == "type1" { ("c", "s") } else { ("t", "u") };
    match format {
        Format::Json => json(d),
        Format::Csv => {
            let len = d.first.coeffs().len().max(d.second.coeffs().len());
            let mut s = format!("k,{a},{b}\n");
            for k in 0..len {
                let _ =
                    writeln!(s, "{k},{},{}", format_rational(&d.first.coeff(k)), format_rational(&d.second.coeff(k)));
            }
            Ok(s)
        }
        Format::Pretty => Ok(format!("{a}_{n} = {}\n{b}_{n} = {}\n", d.first, d.second, n = d.n)),
    }
}
