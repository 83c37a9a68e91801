//! `abhk`: command-line front end for ambiskew Hopf algebra computations.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use abhk::coradical::{corad_breakdown, CoradicalContext};
use abhk::corpus::{load_dir, run_all};
use abhk::hopfstruct::fmt_cases;
use abhk::{Error, FieldSpec, Overrides, Session};

#[derive(Parser)]
#[command(name = "abhk", version, about = "Ambiskew Hopf algebra workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
struct Common {
    /// Spec file, or the name of a corpus entry
    spec: String,
    /// Scalar field, e.g. `rational`, `cyclotomic:6`, `rational_function`
    #[arg(long)]
    field: Option<FieldSpec>,
    /// Search bound for automorphism orders
    #[arg(long)]
    nmax: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct WithExpr {
    #[command(flatten)]
    common: Common,
    /// Element in the expression grammar
    expr: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf conditions and print the report
    Check(Common),
    /// Normal form of an expression
    Mul(WithExpr),
    /// Coproduct of an expression
    Coprod(WithExpr),
    /// Antipode of an expression
    Antipode(WithExpr),
    /// Coradical degree, with a breakdown per (m, n) component
    Corad(WithExpr),
    /// Trichotomy classification
    Classify(Common),
    /// Ring-theoretic property report
    Props(Common),
    /// Hat-form data after the change of variables
    Relabel(Common),
    /// List or run the regression corpus
    Examples {
        /// Run every entry and compare with its expectations
        #[arg(long)]
        run: bool,
        #[arg(long)]
        field: Option<FieldSpec>,
        #[arg(long)]
        nmax: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Output plus exit status.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_)
        | Error::NotHopf
        | Error::NotGrouplike(_)
        | Error::InvalidCharacter(_)
        | Error::InvalidAutomorphism(_)
        | Error::Unsupported(_) => 1,
        Error::Invariant(_) => 3,
        _ => 2,
    }
}

fn corpus_dir() -> PathBuf {
    match std::env::var_os("ABHK_CORPUS_DIR") {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus"),
    }
}

fn resolve(spec: &str) -> PathBuf {
    let p = PathBuf::from(spec);
    if p.exists() {
        return p;
    }
    let dir = corpus_dir();
    let named = dir.join(spec);
    if named.exists() {
        return named;
    }
    dir.join(format!("{spec}.abhk"))
}

fn open(c: &Common) -> Result<Session, Error> {
    let path = resolve(&c.spec);
    let src = std::fs::read_to_string(&path)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    Session::from_source(
        &src,
        Overrides {
            field: c.field,
            nmax: c.nmax,
        },
    )
}

fn kv(format: Format, key: &str, value: &str) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Machine => format!("{key}\t{value}\n"),
    }
}

fn check(c: &Common) -> Result<Outcome, Error> {
    let s = open(c)?;
    let checked = s.check()?;
    let text = match c.format {
        Format::Text => checked.report.render_text(),
        Format::Machine => checked.report.render_machine(),
    };
    Ok(Outcome {
        text,
        code: if checked.report.passed() { 0 } else { 1 },
    })
}

fn mul(w: &WithExpr) -> Result<Outcome, Error> {
    let s = open(&w.common)?;
    let alg = s.algebra()?;
    let v = s.eval(&alg, &w.expr)?;
    Ok(Outcome::ok(kv(
        w.common.format,
        "result",
        &alg.fmt_element(&v),
    )))
}

fn coprod(w: &WithExpr) -> Result<Outcome, Error> {
    let s = open(&w.common)?;
    let hopf = s.hopf()?;
    let alg = hopf.algebra();
    let v = s.eval(alg, &w.expr)?;
    Ok(Outcome::ok(kv(
        w.common.format,
        "coproduct",
        &alg.fmt_tensor(&hopf.delta(&v)),
    )))
}

fn antipode(w: &WithExpr) -> Result<Outcome, Error> {
    let s = open(&w.common)?;
    let hopf = s.hopf()?;
    let alg = hopf.algebra();
    let v = s.eval(alg, &w.expr)?;
    Ok(Outcome::ok(kv(
        w.common.format,
        "antipode",
        &alg.fmt_element(&hopf.antipode(&v)),
    )))
}

fn corad(w: &WithExpr) -> Result<Outcome, Error> {
    let s = open(&w.common)?;
    let hopf = s.hopf()?;
    let alg = hopf.algebra();
    let v = s.eval(alg, &w.expr)?;
    if v.is_zero() {
        return Err(Error::Zero("coradical degree of 0".into()));
    }
    let ctx = CoradicalContext::new(&hopf)?;
    let terms = corad_breakdown(&hopf, &ctx, &v)?;
    let degree = terms.iter().map(|t| t.total).max().unwrap_or(0);
    let mut out = String::new();
    match w.common.format {
        Format::Text => {
            writeln!(out, "{degree}").unwrap();
            for t in &terms {
                writeln!(
                    out,
                    "  X+^{} X-^{}: base degree {}, degree {}",
                    t.m, t.n, t.base_degree, t.total
                )
                .unwrap();
            }
        }
        Format::Machine => {
            writeln!(out, "degree\t{degree}").unwrap();
            for t in &terms {
                writeln!(
                    out,
                    "term\tm={},n={},base={},degree={}",
                    t.m, t.n, t.base_degree, t.total
                )
                .unwrap();
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn classify(c: &Common) -> Result<Outcome, Error> {
    let s = open(c)?;
    let checked = s.check()?;
    match &checked.report.classification {
        Some(cases) if checked.report.passed() => Ok(Outcome::ok(kv(
            c.format,
            "classification",
            &fmt_cases(cases),
        ))),
        _ => Ok(Outcome {
            text: match c.format {
                Format::Text => checked.report.render_text(),
                Format::Machine => checked.report.render_machine(),
            },
            code: 1,
        }),
    }
}

fn props(c: &Common) -> Result<Outcome, Error> {
    let s = open(c)?;
    let sep = match c.format {
        Format::Text => ": ",
        Format::Machine => "\t",
    };
    Ok(Outcome::ok(s.properties()?.render(sep)))
}

fn relabel(c: &Common) -> Result<Outcome, Error> {
    let s = open(c)?;
    let (data, pre) = s.hat_data()?;
    let base = &s.base;
    let mut lines: Vec<(String, String)> = Vec::new();
    if let Some(pre) = &pre {
        for f in pre.failures() {
            lines.push((
                format!("failed.{}", f.name),
                f.witness.clone().unwrap_or_default(),
            ));
        }
    }
    lines.push(("xi".into(), data.xi.to_string()));
    lines.push(("h".into(), base.fmt_element(&data.h)));
    lines.push(("y_plus".into(), base.fmt_element(&data.y_plus)));
    lines.push(("y_minus".into(), base.fmt_element(&data.y_minus)));
    lines.push(("z".into(), base.fmt_element(&data.z)));
    for (i, g) in base.generators().iter().enumerate() {
        lines.push((format!("chi.{}", g.name), data.chi.values[i].to_string()));
    }
    for (i, g) in base.generators().iter().enumerate() {
        let image = data.sigma.apply(base, &base.gen_elem(i));
        lines.push((format!("sigma.{}", g.name), base.fmt_element(&image)));
    }
    let sep = match c.format {
        Format::Text => ": ",
        Format::Machine => "\t",
    };
    let text = lines
        .iter()
        .map(|(k, v)| format!("{k}{sep}{v}\n"))
        .collect();
    let failed = pre.is_some_and(|p| !p.passed());
    Ok(Outcome {
        text,
        code: if failed { 1 } else { 0 },
    })
}

fn examples(run: bool, overrides: Overrides, format: Format) -> Result<Outcome, Error> {
    let entries = load_dir(&corpus_dir())?;
    let mut out = String::new();
    if !run {
        for e in &entries {
            writeln!(out, "{}", e.name).unwrap();
        }
        return Ok(Outcome::ok(out));
    }
    let results = run_all(&entries, overrides);
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut failed = 0;
    for r in &results {
        let status = if r.passed() { "pass" } else { "FAIL" };
        let check = match r.check {
            Some(true) => "hopf",
            Some(false) => "not-hopf",
            None => "-",
        };
        let class = r.classification.as_deref().unwrap_or("-");
        match format {
            Format::Text => {
                writeln!(out, "{:<width$}  {status:<4}  {check:<8}  {class}", r.name).unwrap()
            }
            Format::Machine => {
                writeln!(out, "entry\t{}\t{status}\t{check}\t{class}", r.name).unwrap()
            }
        }
        if let Some(e) = &r.error {
            writeln!(out, "  error: {e}").unwrap();
        }
        for m in &r.mismatches {
            writeln!(out, "  mismatch: {m}").unwrap();
        }
        if !r.passed() {
            failed += 1;
        }
    }
    match format {
        Format::Text => writeln!(out, "{} entries, {failed} failed", results.len()).unwrap(),
        Format::Machine => writeln!(out, "summary\t{}\t{failed}", results.len()).unwrap(),
    }
    Ok(Outcome {
        text: out,
        code: if failed == 0 { 0 } else { 1 },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(c) => check(c),
        Command::Mul(w) => mul(w),
        Command::Coprod(w) => coprod(w),
        Command::Antipode(w) => antipode(w),
        Command::Corad(w) => corad(w),
        Command::Classify(c) => classify(c),
        Command::Props(c) => props(c),
        Command::Relabel(c) => relabel(c),
        Command::Examples {
            run,
            field,
            nmax,
            format,
        } => examples(
            *run,
            Overrides {
                field: *field,
                nmax: *nmax,
            },
            *format,
        ),
    };
    match result {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
