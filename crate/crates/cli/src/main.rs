//! `hzeta` command line: evaluate special functions and series closed
//! forms, run identity check suites, compare against the contour
//! oracle, and sweep parameter grids.
//!
//! Exit codes: 0 success, 1 usage error or unknown identifier,
//! 2 domain error, 3 convergence failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;

use hzeta::checks::{run_check, CheckReport};
use hzeta::hankel::{
    contour_integrate, hankel_barnes, hankel_gamma_family, hankel_lerch_family,
    hankel_zeta_family, GammaSelector, IntegrandKind, LerchSelector, ZetaSelector,
};
use hzeta::integrals::{
    g_integral_rule, log_gamma_moment, negative_polygamma, psi_moment, MomentQuery,
};
use hzeta::lerch::{lerch_phi, lerch_phi_neg, lerch_phi_sderiv_neg, SDerivRoute};
use hzeta::series::{lerch_series_closed, s_closed, t_closed, SeriesQuery};
use hzeta::special::{
    barnes_log_g, digamma, g, hurwitz_zeta, hurwitz_zeta_sderiv, log_gamma,
};
use hzeta::types::{
    AParam, ContourSpec, Error, EvalResult, LambdaParam, Method, SeriesConfig,
};

#[derive(Parser)]
#[command(
    name = "hzeta",
    version,
    about = "Hurwitz/Lerch zeta series, special functions, and Hankel contour oracles"
)]
struct Cli {
    /// JSON config file overriding contour/series defaults
    /// (falls back to the HZETA_CONFIG environment variable)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Contour circle radius override (takes precedence over config)
    #[arg(long, global = true)]
    epsilon: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = OutputKind::Human)]
    output: OutputKind,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Human,
    Csv,
    Json,
}

#[derive(clap::Args, Default, Clone)]
struct ParamArgs {
    /// Complex values as "re" or "re,im"
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one function at one point
    Eval {
        target: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run identity check suites ("all" for every suite)
    Check { ids: Vec<String> },
    /// Compare a contour-oracle representation against its direct counterpart
    Oracle {
        target: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Evaluate a target over a parameter grid; flags accept scalars,
    /// "lo:hi:n" ranges or ";"-separated lists
    Sweep {
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        k: Option<String>,
    },
}

#[derive(Deserialize, Default)]
struct FileConfig {
    #[serde(default)]
    contour: ContourOverride,
    #[serde(default)]
    series: SeriesOverride,
}

#[derive(Deserialize, Default)]
struct ContourOverride {
    epsilon: Option<f64>,
    ray_cutoff: Option<f64>,
    n_circle: Option<usize>,
    n_ray: Option<usize>,
    tail_tol: Option<f64>,
}

#[derive(Deserialize, Default)]
struct SeriesOverride {
    max_terms: Option<usize>,
    rel_tol: Option<f64>,
}

/// Effective numeric configuration: defaults, overridden by the config
/// file, overridden by CLI flags.
struct Config {
    contour: ContourSpec,
    series: SeriesConfig,
}

fn usage_err(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

enum CliError {
    Usage(String),
    Math(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version requests are not errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let config = load_config(&cli)?;
    match &cli.cmd {
        Cmd::Eval { target, params } => {
            let r = eval_target(target, params, &config)?;
            print_eval(&r, cli.output);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { ids } => {
            let ids = if ids.is_empty() {
                vec!["all".to_string()]
            } else {
                ids.clone()
            };
            let mut reports = Vec::new();
            for id in &ids {
                match run_check(id) {
                    Ok(mut r) => reports.append(&mut r),
                    Err(e @ Error::Domain(_)) => return Err(usage_err(e.to_string())),
                    Err(e) => return Err(e.into()),
                }
            }
            print_reports(&reports, cli.output);
            if reports.iter().all(|r| r.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Cmd::Oracle { target, params } => {
            let (contour, reference) = oracle_target(target, params, &config)?;
            let dev = (contour.value - reference).norm() / (1.0 + reference.norm());
            match cli.output {
                OutputKind::Json => println!(
                    "{{\"target\":\"{target}\",\"contour\":[{:.16e},{:.16e}],\"reference\":[{:.16e},{:.16e}],\"rel_dev\":{:.3e}}}",
                    contour.value.re, contour.value.im, reference.re, reference.im, dev
                ),
                _ => {
                    println!("contour   = {}", fmt_c(contour.value));
                    println!("reference = {}", fmt_c(reference));
                    println!("rel_dev   = {dev:.3e}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Sweep {
            target,
            s,
            a,
            t,
            lambda,
            p,
            m,
            n,
            k,
        } => {
            sweep(
                target,
                [
                    ("s", s.as_deref()),
                    ("a", a.as_deref()),
                    ("t", t.as_deref()),
                    ("lambda", lambda.as_deref()),
                    ("p", p.as_deref()),
                    ("m", m.as_deref()),
                    ("n", n.as_deref()),
                    ("k", k.as_deref()),
                ],
                &config,
                cli.output,
            )?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_config(cli: &Cli) -> Result<Config, CliError> {
    let path = cli
        .config
        .clone()
        .or_else(|| std::env::var_os("HZETA_CONFIG").map(PathBuf::from));
    let file: FileConfig = match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| usage_err(format!("cannot read config {}: {e}", p.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| usage_err(format!("bad config {}: {e}", p.display())))?
        }
        None => FileConfig::default(),
    };
    let mut contour = ContourSpec::default();
    if let Some(v) = file.contour.epsilon {
        contour.epsilon = v;
    }
    if let Some(v) = file.contour.ray_cutoff {
        contour.ray_cutoff = v;
    }
    if let Some(v) = file.contour.n_circle {
        contour.n_circle = v;
    }
    if let Some(v) = file.contour.n_ray {
        contour.n_ray = v;
    }
    if let Some(v) = file.contour.tail_tol {
        contour.tail_tol = v;
    }
    if let Some(v) = cli.epsilon {
        contour.epsilon = v;
    }
    let mut series = SeriesConfig::default();
    if let Some(v) = file.series.max_terms {
        series.max_terms = v;
    }
    if let Some(v) = file.series.rel_tol {
        series.rel_tol = v;
    }
    contour.validate().map_err(CliError::Math)?;
    series.validate().map_err(CliError::Math)?;
    Ok(Config { contour, series })
}

fn parse_complex(text: &str) -> Result<Complex64, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let bad = || usage_err(format!("cannot parse complex value '{text}' (want \"re\" or \"re,im\")"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(re.trim().parse().map_err(|_| bad())?, 0.0)),
        [re, im] => Ok(Complex64::new(
            re.trim().parse().map_err(|_| bad())?,
            im.trim().parse().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

struct Params {
    s: Option<Complex64>,
    a: Option<AParam>,
    t: Option<Complex64>,
    lambda: Option<LambdaParam>,
    p: Option<u32>,
    m: Option<u32>,
    n: Option<u32>,
    k: Option<u32>,
}

impl Params {
    fn from_args(args: &ParamArgs) -> Result<Self, CliError> {
        Ok(Params {
            s: args.s.as_deref().map(parse_complex).transpose()?,
            a: args
                .a
                .as_deref()
                .map(parse_complex)
                .transpose()?
                .map(AParam::new)
                .transpose()
                .map_err(CliError::Math)?,
            t: args.t.as_deref().map(parse_complex).transpose()?,
            lambda: args
                .lambda
                .as_deref()
                .map(parse_complex)
                .transpose()?
                .map(LambdaParam::new)
                .transpose()
                .map_err(CliError::Math)?,
            p: args.p,
            m: args.m,
            n: args.n,
            k: args.k,
        })
    }

    fn s(&self) -> Result<Complex64, CliError> {
        self.s.ok_or_else(|| usage_err("missing --s"))
    }
    fn a(&self) -> Result<AParam, CliError> {
        self.a.ok_or_else(|| usage_err("missing --a"))
    }
    fn t(&self) -> Result<Complex64, CliError> {
        self.t.ok_or_else(|| usage_err("missing --t"))
    }
    fn lambda(&self) -> Result<LambdaParam, CliError> {
        self.lambda.ok_or_else(|| usage_err("missing --lambda"))
    }
    fn p(&self) -> Result<u32, CliError> {
        self.p.ok_or_else(|| usage_err("missing --p"))
    }
    fn m(&self) -> Result<u32, CliError> {
        self.m.ok_or_else(|| usage_err("missing --m"))
    }
    fn n(&self) -> Result<u32, CliError> {
        self.n.ok_or_else(|| usage_err("missing --n"))
    }
    fn k(&self) -> Result<u32, CliError> {
        self.k.ok_or_else(|| usage_err("missing --k"))
    }
}

fn eval_target(target: &str, args: &ParamArgs, cfg: &Config) -> Result<EvalResult, CliError> {
    let p = Params::from_args(args)?;
    let closed = |v: Complex64| EvalResult::new(v, 0.0, Method::ClosedForm);
    let r = match target {
        "hurwitz_zeta" => hurwitz_zeta(p.s()?, p.a()?)?,
        "hurwitz_zeta_sderiv" => hurwitz_zeta_sderiv(p.s()?, p.a()?)?,
        "lerch_phi" => lerch_phi(p.lambda()?, p.s()?, p.a()?)?,
        "lerch_phi_neg" => closed(lerch_phi_neg(p.lambda()?, p.m()?, p.a()?)?),
        "lerch_phi_sderiv_neg" => {
            lerch_phi_sderiv_neg(p.lambda()?, p.m()?, p.a()?, SDerivRoute::Prop2)?
        }
        "digamma" => digamma(p.s()?)?,
        "log_gamma" => log_gamma(p.s()?)?,
        "barnes_log_g" => barnes_log_g(p.a()?)?,
        "g" => closed(g(p.n()?, p.a()?)?.value),
        "S" => closed(s_closed(&SeriesQuery::new(p.t()?, p.a()?, p.p()?)?)?),
        "T" => closed(t_closed(&SeriesQuery::new(p.t()?, p.a()?, p.p()?)?)?),
        "lerch_series" => closed(lerch_series_closed(&SeriesQuery::with_lambda(
            p.t()?,
            p.a()?,
            p.p()?,
            p.lambda()?,
        )?)?),
        "log_gamma_moment" => closed(log_gamma_moment(&MomentQuery::new(p.t()?, p.a()?, p.m()?)?)?),
        "psi_moment" => closed(psi_moment(p.t()?, p.a()?, p.p()?)?),
        "negative_polygamma" => {
            let t = p.t()?;
            if t.im != 0.0 {
                return Err(usage_err("negative_polygamma takes a real --t"));
            }
            closed(negative_polygamma(p.k()?, t.re)?)
        }
        "g_integral_rule" => closed(g_integral_rule(p.m()?, p.a()?, p.t()?)?),
        _ => {
            return Err(usage_err(format!(
                "unknown eval target '{target}' (see README for the registry)"
            )))
        }
    };
    let _ = &cfg.series;
    Ok(r)
}

/// Returns (contour evaluation, direct counterpart).
fn oracle_target(
    target: &str,
    args: &ParamArgs,
    cfg: &Config,
) -> Result<(EvalResult, Complex64), CliError> {
    let p = Params::from_args(args)?;
    let spec = &cfg.contour;
    let pair = match target {
        "zeta_cont" => {
            let (s, a) = (p.s()?, p.a()?);
            (
                hankel_zeta_family(ZetaSelector::Cont, s, a, spec)?,
                hurwitz_zeta(s, a)?.value,
            )
        }
        "zeta_neg" => {
            let (n, a) = (p.n()?, p.a()?);
            (
                hankel_zeta_family(ZetaSelector::Neg, Complex64::new(n as f64, 0.0), a, spec)?,
                hzeta::special::zeta_neg_int(n, a)?,
            )
        }
        "zeta_pos" => {
            let (n, a) = (p.n()?, p.a()?);
            (
                hankel_zeta_family(ZetaSelector::Pos, Complex64::new(n as f64, 0.0), a, spec)?,
                hurwitz_zeta(Complex64::new(n as f64 + 1.0, 0.0), a)?.value,
            )
        }
        "g" => {
            let (n, a) = (p.n()?, p.a()?);
            (
                hankel_zeta_family(ZetaSelector::G, Complex64::new(n as f64, 0.0), a, spec)?,
                g(n, a)?.value,
            )
        }
        "zeta_prime_neg1" => {
            let a = p.a()?;
            (
                hankel_zeta_family(ZetaSelector::ZPrimeNeg1, Complex64::new(0.0, 0.0), a, spec)?,
                hurwitz_zeta_sderiv(Complex64::new(-1.0, 0.0), a)?.value,
            )
        }
        "psi" => {
            let s = p.s()?;
            (
                hankel_gamma_family(GammaSelector::PsiCombined, s, spec)?,
                digamma(s)?.value,
            )
        }
        "inv_gamma" => {
            let s = p.s()?;
            (
                hankel_gamma_family(GammaSelector::InvGamma, s, spec)?,
                Complex64::new(1.0, 0.0) / hzeta::special::gamma_fn(s)?,
            )
        }
        "gamma_const" => (
            hankel_gamma_family(GammaSelector::GammaConst, Complex64::new(0.0, 0.0), spec)?,
            Complex64::new(hzeta::special::euler_gamma(), 0.0),
        ),
        "log_gamma" => {
            let s = p.s()?;
            (
                hankel_gamma_family(GammaSelector::LogGamma, s, spec)?,
                log_gamma(s)?.value,
            )
        }
        "phi_cont" => {
            let (lam, s, a) = (p.lambda()?, p.s()?, p.a()?);
            (
                hankel_lerch_family(LerchSelector::PhiCont, lam, s, a, spec)?,
                lerch_phi(lam, s, a)?.value,
            )
        }
        "phi_one" => {
            let (lam, a) = (p.lambda()?, p.a()?);
            (
                hankel_lerch_family(LerchSelector::PhiOne, lam, Complex64::new(0.0, 0.0), a, spec)?,
                lerch_phi(lam, Complex64::new(1.0, 0.0), a)?.value,
            )
        }
        "phi_deriv" => {
            let (lam, n, a) = (p.lambda()?, p.n()?, p.a()?);
            (
                hankel_lerch_family(LerchSelector::PhiDeriv, lam, Complex64::new(n as f64, 0.0), a, spec)?,
                lerch_phi_sderiv_neg(lam, n, a, SDerivRoute::Prop2)?.value
                    + lerch_phi_neg(lam, n, a)? * hzeta::special::psi_int(n),
            )
        }
        "barnes" => {
            let a = p.a()?;
            (hankel_barnes(a, spec)?, barnes_log_g(a)?.value)
        }
        "i_vanish" => {
            let (s, a) = (p.s()?, p.a()?);
            (
                contour_integrate(IntegrandKind::IOfS { s, a }, spec)?,
                Complex64::new(0.0, 0.0),
            )
        }
        _ => return Err(usage_err(format!("unknown oracle target '{target}'"))),
    };
    Ok(pair)
}

/// One sweep axis: parameter name and its grid of string tokens.
fn expand_axis(text: &str) -> Result<Vec<String>, CliError> {
    if let Some(list) = text.strip_prefix(';') {
        // leading ';' forces list interpretation of a single token
        return Ok(list.split(';').map(str::to_string).collect());
    }
    if text.contains(';') {
        return Ok(text.split(';').map(str::to_string).collect());
    }
    // "lo:hi:n" real range
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() == 3 {
        let lo: f64 = parts[0]
            .trim()
            .parse()
            .map_err(|_| usage_err(format!("bad range '{text}'")))?;
        let hi: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| usage_err(format!("bad range '{text}'")))?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| usage_err(format!("bad range '{text}'")))?;
        if count == 0 || count > 1_000_000 {
            return Err(usage_err(format!("bad range count in '{text}'")));
        }
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            let x = if count == 1 {
                lo
            } else {
                lo + (hi - lo) * i as f64 / (count - 1) as f64
            };
            out.push(format!("{x:.17}"));
        }
        return Ok(out);
    }
    Ok(vec![text.to_string()])
}

fn sweep(
    target: &str,
    axes: [(&'static str, Option<&str>); 8],
    cfg: &Config,
    output: OutputKind,
) -> Result<(), CliError> {
    let mut names = Vec::new();
    let mut grids: Vec<Vec<String>> = Vec::new();
    for (name, text) in axes {
        if let Some(text) = text {
            names.push(name);
            grids.push(expand_axis(text)?);
        }
    }
    if names.is_empty() {
        return Err(usage_err("sweep needs at least one parameter flag"));
    }
    let total: usize = grids.iter().map(Vec::len).product();
    let mut wtr = if output == OutputKind::Csv || output == OutputKind::Human {
        let mut w = csv::Writer::from_writer(std::io::stdout());
        let mut header: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        header.extend(
            ["value_re", "value_im", "abs_err", "method", "error"]
                .iter()
                .map(|s| s.to_string()),
        );
        w.write_record(&header)
            .map_err(|e| usage_err(e.to_string()))?;
        Some(w)
    } else {
        None
    };
    let mut json_rows = Vec::new();
    for idx in 0..total {
        // mixed-radix decode of the grid index, last axis fastest
        let mut rem = idx;
        let mut point = Vec::with_capacity(names.len());
        for g in grids.iter().rev() {
            point.push(g[rem % g.len()].clone());
            rem /= g.len();
        }
        point.reverse();
        let mut args = ParamArgs::default();
        for (name, token) in names.iter().zip(&point) {
            let v = Some(token.clone());
            match *name {
                "s" => args.s = v,
                "a" => args.a = v,
                "t" => args.t = v,
                "lambda" => args.lambda = v,
                "p" => args.p = Some(parse_u32(token)?),
                "m" => args.m = Some(parse_u32(token)?),
                "n" => args.n = Some(parse_u32(token)?),
                "k" => args.k = Some(parse_u32(token)?),
                _ => unreachable!(),
            }
        }
        let outcome = eval_target(target, &args, cfg);
        let (vr, vi, err, method, errmsg) = match &outcome {
            Ok(r) => (
                format!("{:.16e}", r.value.re),
                format!("{:.16e}", r.value.im),
                format!("{:.16e}", r.abs_err),
                r.method.as_str().to_string(),
                String::new(),
            ),
            Err(CliError::Math(e)) => (
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                e.to_string(),
            ),
            Err(CliError::Usage(msg)) => return Err(usage_err(msg.clone())),
        };
        if let Some(w) = wtr.as_mut() {
            let mut rec = point.clone();
            rec.extend([vr, vi, err, method, errmsg]);
            w.write_record(&rec).map_err(|e| usage_err(e.to_string()))?;
        } else {
            let params: Vec<String> = names
                .iter()
                .zip(&point)
                .map(|(n, v)| format!("\"{n}\":\"{v}\""))
                .collect();
            let body = match &outcome {
                Ok(r) => format!(
                    "\"value\":[{:.16e},{:.16e}],\"abs_err\":{:.16e},\"method\":\"{}\"",
                    r.value.re,
                    r.value.im,
                    r.abs_err,
                    r.method.as_str()
                ),
                Err(CliError::Math(e)) => {
                    format!("\"error\":{}", serde_json::to_string(&e.to_string()).unwrap())
                }
                Err(CliError::Usage(_)) => unreachable!(),
            };
            json_rows.push(format!("{{{},{body}}}", params.join(",")));
        }
    }
    if let Some(mut w) = wtr {
        w.flush().map_err(|e| usage_err(e.to_string()))?;
    } else {
        println!("[{}]", json_rows.join(","));
    }
    Ok(())
}

fn parse_u32(text: &str) -> Result<u32, CliError> {
    // range expansion renders integers as floats; accept both
    if let Ok(v) = text.trim().parse::<u32>() {
        return Ok(v);
    }
    let f: f64 = text
        .trim()
        .parse()
        .map_err(|_| usage_err(format!("bad integer '{text}'")))?;
    if f < 0.0 || f.fract().abs() > 1e-9 {
        return Err(usage_err(format!("bad integer '{text}'")));
    }
    Ok(f as u32)
}

fn fmt_c(v: Complex64) -> String {
    if v.im == 0.0 {
        format!("{:.16e}", v.re)
    } else if v.im < 0.0 {
        format!("{:.16e} - {:.16e}i", v.re, -v.im)
    } else {
        format!("{:.16e} + {:.16e}i", v.re, v.im)
    }
}

fn print_eval(r: &EvalResult, output: OutputKind) {
    match output {
        OutputKind::Json => println!(
            "{{\"value\":[{:.16e},{:.16e}],\"abs_err\":{:.16e},\"method\":\"{}\"}}",
            r.value.re,
            r.value.im,
            r.abs_err,
            r.method.as_str()
        ),
        OutputKind::Csv => {
            println!("value_re,value_im,abs_err,method");
            println!(
                "{:.16e},{:.16e},{:.16e},{}",
                r.value.re,
                r.value.im,
                r.abs_err,
                r.method.as_str()
            );
        }
        OutputKind::Human => {
            println!("value   = {}", fmt_c(r.value));
            println!("abs_err = {:.3e}", r.abs_err);
            println!("method  = {}", r.method.as_str());
        }
    }
}

fn print_reports(reports: &[CheckReport], output: OutputKind) {
    match output {
        OutputKind::Json => {
            let rows: Vec<String> = reports
                .iter()
                .map(|r| {
                    format!(
                        "{{\"id\":\"{}\",\"grid_size\":{},\"max_rel_dev\":{:.3e},\"tol\":{:.1e},\"pass\":{},\"wall_ms\":{:.1}}}",
                        r.id, r.grid_size, r.max_rel_dev, r.tol, r.pass, r.wall_ms
                    )
                })
                .collect();
            println!("[{}]", rows.join(","));
        }
        OutputKind::Csv => {
            println!("id,grid_size,max_rel_dev,tol,pass,wall_ms");
            for r in reports {
                println!(
                    "{},{},{:.3e},{:.1e},{},{:.1}",
                    r.id, r.grid_size, r.max_rel_dev, r.tol, r.pass, r.wall_ms
                );
            }
        }
        OutputKind::Human => {
            for r in reports {
                println!(
                    "{:<18} {}  grid={:<4} max_dev={:.3e}  tol={:.1e}  ({:.0} ms)",
                    r.id,
                    if r.pass { "pass" } else { "FAIL" },
                    r.grid_size,
                    r.max_rel_dev,
                    r.tol,
                    r.wall_ms
                );
            }
        }
    }
}
