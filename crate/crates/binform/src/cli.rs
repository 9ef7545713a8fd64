//! Command-line harness: every library operation behind one binary.
//!
//! Subcommands mirror the public API (`eigen`, `critical`, `best`,
//! `spectral`, `rez`) plus the two quartic experiments (`table`,
//! `maccioni`). Output is JSON by default, a text rendering with
//! `--text`; identical flags and seed produce byte-identical output.
//!
//! Exit codes: 0 success, 2 malformed input, 3 zero form, 4 degenerate
//! or out-of-range request, 5 invariant violation (a library bug, not a
//! math event), 6 search budget exhausted.

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::form::{BinaryForm, Scalar, ScalarField};
use crate::json;
use crate::rank::SearchBudget;

#[derive(Parser)]
#[command(name = "binform", version, about = "Eigenvectors, low-rank critical points, and spectral decompositions of binary forms")]
pub struct Cli {
    /// Root seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Text output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// Relative residual above which a reported point is flagged
    /// uncertified.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Work bound: Newton starts for the critical search, samples for
    /// the experiments.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FormArgs {
    /// Inline coefficient array c_0..c_d (e.g. '[1,0,0,2]'), or a path
    /// to a form JSON file.
    #[arg(long)]
    form: String,
    /// Degree of an inline form.
    #[arg(long)]
    degree: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Eigenvector tensors of a form.
    Eigen(FormArgs),
    /// Census of critical rank-k points of the distance from a form.
    Critical {
        #[command(flatten)]
        form: FormArgs,
        /// Number of summands k (2k must not exceed the degree).
        #[arg(short, long)]
        k: usize,
        /// Keep only real critical points, or the full complex census.
        #[arg(long, default_value = "complex")]
        field: String,
    },
    /// Best rank-k approximation: the certified point closest to the form.
    Best {
        #[command(flatten)]
        form: FormArgs,
        /// Number of summands k.
        #[arg(short, long)]
        k: usize,
    },
    /// Expansion of a form in its eigenvector powers.
    Spectral(FormArgs),
    /// Decomposition of (x^2+y^2)^(d/2) into d/2+1 rotated powers.
    Rez {
        /// Even degree of the circle power.
        #[arg(short, long)]
        d: usize,
        /// Rotation offset of the summand polygon.
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
    },
    /// Search quartics for every observed real-count combination.
    Table,
    /// Sample forms and verify real roots never outnumber real
    /// eigenvector tensors.
    Maccioni {
        /// Degree of the sampled forms.
        #[arg(short, long, default_value_t = 4)]
        d: usize,
    },
}

impl FormArgs {
    /// Inline arrays need --degree; anything else is a file path.
    fn load(&self) -> Result<BinaryForm> {
        if self.form.trim_start().starts_with('[') {
            let coeffs = json::coeffs_from_inline(&self.form)?;
            let degree = self.degree.ok_or_else(|| {
                Error::Parse("inline forms need --degree".to_string())
            })?;
            if coeffs.len() != degree + 1 {
                return Err(Error::Parse(format!(
                    "degree {degree} needs {} coefficients, got {}",
                    degree + 1,
                    coeffs.len()
                )));
            }
            let field = if coeffs.iter().all(|c| c.im == 0.0) {
                ScalarField::Real
            } else {
                ScalarField::Complex
            };
            BinaryForm::new(degree, coeffs, field)
        } else {
            let text = std::fs::read_to_string(&self.form)
                .map_err(|e| Error::Parse(format!("{}: {e}", self.form)))?;
            json::form_from_json(&text)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::ZeroForm => 3,
        Error::BudgetExhausted { .. } => 6,
        _ => 4,
    }
}

/// Parses arguments from the process environment, runs, and returns
/// the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let text = cli.text;
    match &cli.cmd {
        Cmd::Eigen(args) => cmd_eigen(&args.load()?, text),
        Cmd::Critical { form, k, field } => {
            let field = match field.as_str() {
                "real" => ScalarField::Real,
                "complex" => ScalarField::Complex,
                other => {
                    return Err(Error::Parse(format!(
                        "field must be \"real\" or \"complex\", got \"{other}\""
                    )))
                }
            };
            cmd_critical(&form.load()?, *k, field, cli, text)
        }
        Cmd::Best { form, k } => cmd_best(&form.load()?, *k, cli, text),
        Cmd::Spectral(args) => cmd_spectral(&args.load()?, text),
        Cmd::Rez { d, phi } => cmd_rez(*d, *phi, text),
        Cmd::Table => cmd_table(cli, text),
        Cmd::Maccioni { d } => cmd_maccioni(*d, cli, text),
    }
}

fn fmt_f(x: f64) -> String {
    format!("{x:.6}")
}

fn fmt_c(c: Scalar) -> String {
    if c.im.abs() <= 1e-12 * (1.0 + c.re.abs()) {
        fmt_f(c.re)
    } else {
        format!("{:.6}{:+.6}i", c.re, c.im)
    }
}

fn fmt_coeffs(f: &BinaryForm) -> String {
    let parts: Vec<String> = f.coeffs().iter().map(|&c| fmt_c(c)).collect();
    format!("[{}]", parts.join(", "))
}

fn cmd_eigen(f: &BinaryForm, text: bool) -> Result<i32> {
    let e = crate::eigen::eigen_pairs(f)?;
    if !text {
        println!("{}", json::eigen_to_json(&e));
        return Ok(0);
    }
    match &e {
        crate::eigen::EigenDecomposition::Discrete(pairs) => {
            println!("{} eigen pairs", pairs.len());
            for p in pairs {
                println!(
                    "  v = ({}, {})  lambda = {}  multiplicity {}  {}",
                    fmt_c(p.v.a),
                    fmt_c(p.v.b),
                    fmt_c(p.lambda),
                    p.multiplicity,
                    if p.is_real { "real" } else { "complex" }
                );
            }
        }
        crate::eigen::EigenDecomposition::Circle { coefficient } => {
            println!(
                "degenerate circle: every unit vector is an eigenvector with lambda = {}",
                fmt_c(*coefficient)
            );
        }
    }
    Ok(0)
}

fn budget_for(cli: &Cli, k: usize) -> SearchBudget {
    let mut b = SearchBudget::for_rank(k).with_seed(cli.seed);
    if let Some(starts) = cli.budget {
        b = b.with_starts(starts);
    }
    b
}

/// Re-checks each point against the requested tolerance so the output
/// never carries a silently failing certificate.
fn flag_by_tol(pts: &mut [crate::rank::CriticalRankK], fnorm: f64, tol: f64) {
    for p in pts {
        if p.grad_residual > tol * fnorm || p.cert_residual.is_none_or(|c| c > tol) {
            p.uncertified = true;
        }
    }
}

fn print_critical_text(pts: &[crate::rank::CriticalRankK]) {
    println!("{} critical points", pts.len());
    for (i, p) in pts.iter().enumerate() {
        let mut tags = Vec::new();
        if p.is_real {
            tags.push("real");
        }
        if p.boundary {
            tags.push("boundary");
        }
        if p.uncertified {
            tags.push("uncertified");
        }
        println!(
            "  #{i}: distance {}  grad {:.2e}  {}",
            fmt_f(p.distance),
            p.grad_residual,
            tags.join(" ")
        );
        for s in &p.summands {
            println!("      mu = {}  l = ({}, {})", fmt_c(s.mu), fmt_c(s.l.a), fmt_c(s.l.b));
        }
        if let Some(t) = &p.tangent {
            println!(
                "      tangent: mu = {}  nu = {}  l = ({}, {})",
                fmt_c(t.mu),
                fmt_c(t.nu),
                fmt_c(t.l.a),
                fmt_c(t.l.b)
            );
        }
    }
}

fn cmd_critical(
    f: &BinaryForm,
    k: usize,
    field: ScalarField,
    cli: &Cli,
    text: bool,
) -> Result<i32> {
    let mut pts = crate::rank::critical_rank_k(f, k, field, &budget_for(cli, k))?;
    flag_by_tol(&mut pts, f.norm(), cli.tol);
    if text {
        print_critical_text(&pts);
    } else {
        println!("{}", json::critical_list_to_json(&pts));
    }
    Ok(0)
}

fn cmd_best(f: &BinaryForm, k: usize, cli: &Cli, text: bool) -> Result<i32> {
    let mut best = crate::rank::best_rank_k(f, k, &budget_for(cli, k))?;
    flag_by_tol(std::slice::from_mut(&mut best), f.norm(), cli.tol);
    if text {
        print_critical_text(std::slice::from_ref(&best));
    } else {
        println!("{}", json::critical_to_json(&best));
    }
    Ok(0)
}

fn cmd_spectral(f: &BinaryForm, text: bool) -> Result<i32> {
    let s = match crate::spectral::spectral_decompose(f) {
        Err(Error::DegenerateCircle) => {
            eprintln!(
                "note: every unit vector is an eigenvector of a circle power; use `rez` for its \
                 decomposition"
            );
            return Err(Error::DegenerateCircle);
        }
        other => other?,
    };
    if !text {
        println!("{}", json::spectral_to_json(&s));
        return Ok(0);
    }
    println!(
        "{} basis powers, residual {:.2e}{}",
        s.basis.len(),
        s.residual,
        if s.multiple_roots { ", repeated directions (minimum-norm coefficients)" } else { "" }
    );
    for (c, b) in s.coeffs.iter().zip(&s.basis) {
        println!("  {} * {}", fmt_c(*c), fmt_coeffs(b));
    }
    Ok(0)
}

fn cmd_rez(d: usize, phi: f64, text: bool) -> Result<i32> {
    let r = crate::spectral::rez(d, phi)?;
    if !text {
        println!("{}", json::rez_to_json(&r));
        return Ok(0);
    }
    println!(
        "(x^2+y^2)^{} = {} * sum of {} powers, residual {:.2e}",
        d / 2,
        fmt_f(r.c_d),
        r.summands.len(),
        r.residual
    );
    for l in &r.summands {
        println!("  ({}, {})", fmt_f(l.a.re), fmt_f(l.b.re));
    }
    Ok(0)
}

fn cmd_table(cli: &Cli, text: bool) -> Result<i32> {
    let samples = cli.budget.unwrap_or(600);
    let rep = crate::experiments::table_search(samples, cli.seed, &SearchBudget::for_rank(2));
    if !text {
        println!("{}", json::table_to_json(&rep));
        return Ok(0);
    }
    println!("#real roots  #real rank-1  #real rank-2  example");
    for r in &rep.rows {
        let example = match &r.witness {
            Some(w) => format!("yes  {}", fmt_coeffs(w)),
            None => format!("not found in {} samples", rep.samples_used),
        };
        println!(
            "{:>11}  {:>12}  {:>12}  {}",
            r.n_real_roots, r.n_real_crit1, r.n_real_crit2, example
        );
    }
    match &rep.seven_real {
        Some(w) => println!("seven real rank-2 points: yes  {}", fmt_coeffs(w)),
        None => println!(
            "seven real rank-2 points: not found in {} samples (existence open)",
            rep.samples_used
        ),
    }
    Ok(0)
}

fn cmd_maccioni(d: usize, cli: &Cli, text: bool) -> Result<i32> {
    let samples = cli.budget.unwrap_or(1000);
    let rep = crate::experiments::maccioni_sweep(d, samples, cli.seed)?;
    if !text {
        println!("{}", json::sweep_to_json(&rep));
    } else {
        println!(
            "degree {} sweep: {} samples, {} skipped, {} violations",
            rep.degree,
            rep.samples,
            rep.skipped,
            rep.violations.len()
        );
        let bins: Vec<String> = rep
            .crit1_histogram
            .iter()
            .enumerate()
            .filter(|(_, n)| **n > 0)
            .map(|(i, n)| format!("{i}: {n}"))
            .collect();
        println!("#real rank-1 histogram: {}", bins.join(", "));
        for v in &rep.violations {
            println!(
                "violation: {} has {} real roots but {} real eigen tensors",
                fmt_coeffs(&v.form),
                v.n_real_roots,
                v.n_real_crit1
            );
        }
    }
    if rep.clean() {
        Ok(0)
    } else {
        eprintln!("error: {} samples violated the root/eigenvector inequality", rep.violations.len());
        Ok(5)
    }
}
