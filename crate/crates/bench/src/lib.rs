//! Shared fixtures for the engine benchmarks.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use abhk::{HopfAmbiskew, Overrides, Session};

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn session(name: &str) -> Session {
    let src = std::fs::read_to_string(corpus_dir().join(format!("{name}.abhk")))
        .unwrap_or_else(|e| panic!("{name}: {e}"));
    Session::from_source(&src, Overrides::default()).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn hopf(name: &str) -> Arc<HopfAmbiskew> {
    session(name)
        .hopf()
        .unwrap_or_else(|e| panic!("{name}: {e}"))
}
