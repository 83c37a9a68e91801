//! Loading and running a directory of `.abhk` documents against the
//! expectations recorded in their `expect` blocks.

use std::fs;
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, Instant};

use crate::basehopf::Dim;
use crate::coradical::corad_degree;
use crate::error::{Error, Result};
use crate::exprparse::{eval_ambi, PiExpect};
use crate::hopfstruct::fmt_cases;
use crate::properties::property_report;
use crate::session::{Overrides, Session};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub path: PathBuf,
    pub source: String,
}

/// Every `*.abhk` file in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("{}: {e}", dir.display()));
    let mut out = Vec::new();
    for item in fs::read_dir(dir).map_err(io)? {
        let path = item.map_err(io)?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("abhk") {
            continue;
        }
        let source = fs::read_to_string(&path).map_err(io)?;
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or_default()
            .to_string();
        out.push(CorpusEntry { name, path, source });
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

#[derive(Debug)]
pub struct EntryOutcome {
    pub name: String,
    pub check: Option<bool>,
    pub classification: Option<String>,
    pub mismatches: Vec<String>,
    pub error: Option<Error>,
    pub elapsed: Duration,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.mismatches.is_empty()
    }
}

fn dim_matches(found: Dim, want: u32) -> bool {
    found == Dim::Finite(want)
}

fn compare(entry: &CorpusEntry, overrides: Overrides, out: &mut EntryOutcome) -> Result<()> {
    let session = Session::from_source(&entry.source, overrides)?;
    let expect = session.doc.expect.clone();
    let checked = session.check()?;
    let passed = checked.report.passed();
    out.check = Some(passed);
    out.classification = checked.report.classification.as_ref().map(fmt_cases);
    let want = expect.check.unwrap_or(true);
    if passed != want {
        let failed: Vec<String> = checked.report.failures().map(|c| c.name.clone()).collect();
        out.mismatches.push(format!(
            "check: expected {}, found {} {:?}",
            if want { "pass" } else { "fail" },
            if passed { "pass" } else { "fail" },
            failed
        ));
    }
    if let Some(w) = &expect.witness {
        if !checked.report.witness_contains(w) {
            out.mismatches
                .push(format!("witness: no failing condition mentions `{w}`"));
        }
    }
    if let Some(c) = &expect.classification {
        if checked.report.classification.as_ref() != Some(c) {
            out.mismatches.push(format!(
                "classification: expected {}, found {}",
                fmt_cases(c),
                out.classification.clone().unwrap_or_else(|| "none".into())
            ));
        }
    }
    let owned;
    let alg = match &checked.hopf {
        Some(h) => h.algebra(),
        None => {
            owned = session.algebra()?;
            &owned
        }
    };
    if expect.gk_dim.is_some() || expect.gl_dim.is_some() || expect.pi.is_some() {
        let props = property_report(alg, checked.hopf.is_some(), session.nmax);
        if let Some(g) = expect.gk_dim {
            if !dim_matches(props.gk_dim, g) {
                out.mismatches
                    .push(format!("gk_dim: expected {g}, found {}", props.gk_dim));
            }
        }
        if let Some(g) = expect.gl_dim {
            if !(props.gl_dim.is_exact() && dim_matches(props.gl_dim.upper, g)) {
                out.mismatches
                    .push(format!("gl_dim: expected {g}, found {}", props.gl_dim));
            }
        }
        if let Some(p) = expect.pi {
            let s = props.pi.satisfies;
            let ok = match p {
                PiExpect::No => s == Some(false),
                PiExpect::Yes => s == Some(true),
                PiExpect::Unknown => s.is_none(),
                PiExpect::Degree(d) => s == Some(true) && props.pi.pi_degree == Some(d),
            };
            if !ok {
                out.mismatches.push(format!(
                    "pi: expected {p:?}, found {:?} with degree {:?}",
                    s, props.pi.pi_degree
                ));
            }
        }
    }
    for (lhs, rhs) in &expect.identities {
        let l = eval_ambi(alg, &lhs.value)?;
        let r = eval_ambi(alg, &rhs.value)?;
        if l != r {
            out.mismatches.push(format!(
                "identity at line {}: {} evaluates to {}, expected {}",
                lhs.line,
                lhs.value,
                alg.fmt_element(&l),
                alg.fmt_element(&r)
            ));
        }
    }
    if !expect.corad.is_empty() {
        let Some(hopf) = &checked.hopf else {
            out.mismatches
                .push("corad: algebra is not a verified Hopf algebra".into());
            return Ok(());
        };
        for (e, want) in &expect.corad {
            let x = eval_ambi(hopf.algebra(), &e.value)?;
            let d = corad_degree(hopf, &x)?;
            if d != *want {
                out.mismatches
                    .push(format!("corad {}: expected {want}, found {d}", e.value));
            }
        }
    }
    Ok(())
}

pub fn run_entry(entry: &CorpusEntry, overrides: Overrides) -> EntryOutcome {
    let start = Instant::now();
    let mut out = EntryOutcome {
        name: entry.name.clone(),
        check: None,
        classification: None,
        mismatches: Vec::new(),
        error: None,
        elapsed: Duration::ZERO,
    };
    if let Err(e) = compare(entry, overrides, &mut out) {
        out.error = Some(e);
    }
    out.elapsed = start.elapsed();
    out
}

/// Runs every entry, in parallel, returning outcomes in input order.
pub fn run_all(entries: &[CorpusEntry], overrides: Overrides) -> Vec<EntryOutcome> {
    thread::scope(|s| {
        let handles: Vec<_> = entries
            .iter()
            .map(|e| s.spawn(move || run_entry(e, overrides)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("corpus worker panicked"))
            .collect()
    })
}
