//! Command-line surface. Exit codes: 0 success, 1 failed verification or
//! computation error, 2 usage or parse error.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgalilei_core::hopf::hopf_pairing;
use qgalilei_core::induction::{casimir_action, induced_action, reduced_casimir_action, Character};
use qgalilei_core::opcalc::{pairing_a, triangleleft, triangleright};
use qgalilei_core::verify::run_suite;
use qgalilei_core::{preset, NCPolynomial, Preset, Scalar, ScalarError, VarSet, WaveFunction};

use crate::lattice::{self, LatticeParams, LatticeState};
use crate::parse::{parse_element, parse_scalar, parse_wavefunction, ParseError};
use crate::report::{to_json, to_text};

#[derive(Parser, Debug)]
#[command(name = "qgalilei", version, about = "Exact algebra and lattice numerics for the quantum extended Galilei algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal-ordered form of an algebra element.
    NormalOrder(NormalOrderArgs),
    /// Pair an algebra element with a function.
    Pair(PairArgs),
    /// Act with an element of uq_kmph on a wavefunction.
    Act(ActArgs),
    /// Apply the q-Casimir (or its reduced form) in the induced representation.
    Casimir(CasimirArgs),
    /// Run another subcommand and take a -> 0 of its result.
    Limit {
        #[command(subcommand)]
        inner: LimitCommand,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Lattice dispersion, evolution and convergence study.
    Lattice(LatticeArgs),
}

#[derive(Subcommand, Debug)]
enum LimitCommand {
    NormalOrder(NormalOrderArgs),
    Pair(PairArgs),
    Act(ActArgs),
    Casimir(CasimirArgs),
}

#[derive(Args, Debug)]
struct NormalOrderArgs {
    /// Presentation: uq_kmph, uq_iphn or fq.
    #[arg(long, default_value = "uq_kmph")]
    alg: String,
    expr: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    /// uq_iphn against fq.
    Hopf,
    /// uq_kmph against wavefunctions in v, mu, x, t.
    #[value(name = "A")]
    A,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, value_enum)]
    side: Side,
    u: String,
    f: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Action {
    /// Right action f ◁ u on functions of v, mu, x, t.
    Right,
    /// Left action u ▷ f on functions of v, mu, x, t.
    Left,
    /// Induced representation u ⊢ φ on functions of x, t.
    Induced,
}

#[derive(Args, Debug, Clone)]
struct CharacterArgs {
    /// Value of K on the inducing character.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    alpha: String,
    /// Value of M on the inducing character.
    #[arg(long, default_value = "beta", allow_hyphen_values = true)]
    beta: String,
}

#[derive(Args, Debug)]
struct ActArgs {
    #[arg(long, value_enum)]
    action: Action,
    #[command(flatten)]
    character: CharacterArgs,
    /// Generator or expression in uq_kmph.
    u: String,
    f: String,
}

#[derive(Args, Debug)]
struct CasimirArgs {
    /// Apply C'_a = M^-1 C_a instead of C_a.
    #[arg(long)]
    reduced: bool,
    #[command(flatten)]
    character: CharacterArgs,
    phi: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Hopf,
    Pairing,
    Duality,
    Lemma,
    Relations,
    Star,
    Equivalence,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=8))]
    degree: u32,
    /// Emit JSON instead of key=value lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct LatticeArgs {
    /// Lattice spacing.
    #[arg(long, default_value_t = 0.1)]
    a: f64,
    #[arg(long, default_value_t = 64)]
    sites: usize,
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    /// Mode number n, k = 2 pi n / (sites * a).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    k_mode: i64,
    /// Evolve a Gaussian packet for this time and report the norm drift.
    #[arg(long)]
    time: Option<f64>,
    /// Comma-separated spacings; prints a CSV convergence table. The box
    /// length sites * (first spacing) is held fixed, so k is the same on
    /// every lattice.
    #[arg(long, value_delimiter = ',')]
    study: Option<Vec<f64>>,
}

enum CliError {
    Parse(String, ParseError),
    Usage(String),
    Compute(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Parse(..) | CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Parse(input, e) => format!("{}\n  {}\n  {}^", e, input, " ".repeat(e.offset())),
            CliError::Usage(m) | CliError::Compute(m) => m.clone(),
        }
    }
}

fn parse_err(input: &str) -> impl FnOnce(ParseError) -> CliError + '_ {
    move |e| CliError::Parse(input.to_string(), e)
}

fn compute<E: Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

enum Value {
    Poly(NCPolynomial),
    Wave(WaveFunction),
    Scalar(Scalar),
}

impl Value {
    fn at_a_zero(self) -> Result<Value, ScalarError> {
        Ok(match self {
            Value::Poly(p) => Value::Poly(p.map_coefficients(Scalar::at_a_zero)?),
            Value::Wave(w) => Value::Wave(w.at_a_zero()?),
            Value::Scalar(s) => Value::Scalar(s.at_a_zero()?),
        })
    }
}

impl Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Poly(p) => p.fmt(f),
            Value::Wave(w) => w.fmt(f),
            Value::Scalar(s) => s.fmt(f),
        }
    }
}

fn character(c: &CharacterArgs) -> Result<Character, CliError> {
    let alpha = parse_scalar(&c.alpha).map_err(parse_err(&c.alpha))?;
    let beta = parse_scalar(&c.beta).map_err(parse_err(&c.beta))?;
    Ok(Character::new(alpha, beta))
}

fn normal_order(a: &NormalOrderArgs) -> Result<Value, CliError> {
    let which = Preset::from_name(&a.alg).ok_or_else(|| {
        CliError::Usage(format!("unknown presentation '{}' (expected uq_kmph, uq_iphn or fq)", a.alg))
    })?;
    Ok(Value::Poly(parse_element(&a.expr, &preset(which)).map_err(parse_err(&a.expr))?))
}

fn pair(a: &PairArgs) -> Result<Value, CliError> {
    match a.side {
        Side::Hopf => {
            let u = parse_element(&a.u, &preset(Preset::UqIphn)).map_err(parse_err(&a.u))?;
            let f = parse_element(&a.f, &preset(Preset::Fq)).map_err(parse_err(&a.f))?;
            hopf_pairing(&u, &f).map(Value::Scalar).map_err(compute)
        }
        Side::A => {
            let u = parse_element(&a.u, &preset(Preset::UqKmph)).map_err(parse_err(&a.u))?;
            let f = parse_wavefunction(&a.f, VarSet::ALL).map_err(parse_err(&a.f))?;
            pairing_a(&u, &f).map(Value::Scalar).map_err(compute)
        }
    }
}

fn act(a: &ActArgs) -> Result<Value, CliError> {
    let u = parse_element(&a.u, &preset(Preset::UqKmph)).map_err(parse_err(&a.u))?;
    let w = match a.action {
        Action::Left | Action::Right => {
            let f = parse_wavefunction(&a.f, VarSet::ALL).map_err(parse_err(&a.f))?;
            if a.action == Action::Left {
                triangleright(&u, &f)
            } else {
                triangleleft(&u, &f)
            }
        }
        Action::Induced => {
            let ch = character(&a.character)?;
            let phi = parse_wavefunction(&a.f, VarSet::XT).map_err(parse_err(&a.f))?;
            induced_action(&ch, &u, &phi)
        }
    };
    w.map(Value::Wave).map_err(compute)
}

fn casimir(a: &CasimirArgs) -> Result<Value, CliError> {
    let ch = character(&a.character)?;
    let phi = parse_wavefunction(&a.phi, VarSet::XT).map_err(parse_err(&a.phi))?;
    let w = if a.reduced { reduced_casimir_action(&ch, &phi) } else { casimir_action(&ch, &phi) };
    w.map(Value::Wave).map_err(compute)
}

fn limit(c: &LimitCommand) -> Result<Value, CliError> {
    let v = match c {
        LimitCommand::NormalOrder(a) => normal_order(a)?,
        LimitCommand::Pair(a) => pair(a)?,
        LimitCommand::Act(a) => act(a)?,
        LimitCommand::Casimir(a) => casimir(a)?,
    };
    v.at_a_zero().map_err(|e| CliError::Compute(format!("no limit a -> 0: {}", e)))
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Hopf => "hopf",
        Suite::Pairing => "pairing",
        Suite::Duality => "duality",
        Suite::Lemma => "lemma",
        Suite::Relations => "relations",
        Suite::Star => "star",
        Suite::Equivalence => "equivalence",
        Suite::All => "all",
    }
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let name = suite_name(a.suite);
    let report = run_suite(name, a.degree).expect("suite names are validated by the parser");
    let text = if a.json { to_json(name, a.degree, &report) } else { to_text(name, a.degree, &report) };
    out.write_all(text.as_bytes()).map_err(compute)?;
    Ok(report.passed())
}

fn lattice_cmd(a: &LatticeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let usage = |e: lattice::LatticeError| CliError::Usage(e.to_string());
    let mut text = String::new();
    if let Some(spacings) = &a.study {
        let first = *spacings.first().ok_or_else(|| CliError::Usage("--study needs at least one spacing".into()))?;
        let p = LatticeParams::new(first, a.sites, a.mass, a.hbar).map_err(usage)?;
        let k = p.wavenumber(a.k_mode).map_err(usage)?;
        let rows = lattice::dispersion_study(spacings, k, a.mass, a.hbar).map_err(usage)?;
        text.push_str(&lattice::study_csv(&rows));
    } else {
        let p = LatticeParams::new(a.a, a.sites, a.mass, a.hbar).map_err(usage)?;
        let k = p.wavenumber(a.k_mode).map_err(usage)?;
        let w = lattice::omega(k, p.a, p.mass, p.hbar);
        let w0 = lattice::omega_continuum(k, p.mass, p.hbar);
        text.push_str(&format!("a={}\nsites={}\nlength={}\nk_mode={}\n", p.a, p.sites, p.length(), a.k_mode));
        text.push_str(&format!("k={:.9e}\nomega_a={:.9e}\nomega_0={:.9e}\nabs_err={:.9e}\n", k, w, w0, (w - w0).abs()));
        if let Some(t) = a.time {
            let l = p.length();
            let s = LatticeState::gaussian(p, l / 2.0, l / 10.0, k);
            let drift = lattice::check_unitarity(&s, t) / s.norm();
            text.push_str(&format!("time={}\nnorm={:.9e}\nrelative_drift={:.1e}\nunitary={}\n", t, s.norm(), drift, drift <= 1e-12));
        }
    }
    out.write_all(text.as_bytes()).map_err(compute)
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let value = match cmd {
        Command::NormalOrder(a) => normal_order(a)?,
        Command::Pair(a) => pair(a)?,
        Command::Act(a) => act(a)?,
        Command::Casimir(a) => casimir(a)?,
        Command::Limit { inner } => limit(inner)?,
        Command::Verify(a) => return Ok(if verify(a, out)? { 0 } else { 1 }),
        Command::Lattice(a) => return lattice_cmd(a, out).map(|_| 0),
    };
    writeln!(out, "{}", value).map_err(compute)?;
    Ok(0)
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}
