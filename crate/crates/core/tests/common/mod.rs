#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

use abhk::ambicore::oracle::Letter;
use abhk::ambicore::{AmbiElement, AmbiKey, AmbiskewAlgebra};
use abhk::corpus::load_dir;
use abhk::hopfstruct::check_hopf_conditions;
use abhk::{
    BaseElement, BaseHopf, Character, ExtensionData, HopfAmbiskew, Overrides, Scalar, Session,
};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn corpus_sessions() -> Vec<Session> {
    load_dir(&corpus_dir())
        .expect("corpus directory")
        .iter()
        .map(|e| Session::from_source(&e.source, Overrides::default()).expect(&e.name))
        .collect()
}

/// Corpus entries that pass the checker, with their Hopf algebras.
pub fn verified_corpus() -> Vec<(String, Arc<HopfAmbiskew>)> {
    corpus_sessions()
        .into_iter()
        .filter_map(|s| {
            let c = s.check().expect("check runs");
            c.hopf.map(|h| (s.name().to_string(), h))
        })
        .collect()
}

/// Hat-form Hopf algebra from data, panicking unless the checker passes.
pub fn hat_hopf(
    base: &Arc<BaseHopf>,
    chi: Vec<Scalar>,
    y_plus: BaseElement,
    y_minus: BaseElement,
    h: BaseElement,
) -> Arc<HopfAmbiskew> {
    let data = ExtensionData::new(base, Character::new(chi), y_plus, y_minus, h, None).unwrap();
    let out = check_hopf_conditions(base, &data).unwrap();
    out.algebra
        .unwrap_or_else(|| panic!("rejected:\n{}", out.report.render_text()))
}

pub fn letter_elem(alg: &AmbiskewAlgebra, l: &Letter) -> AmbiElement {
    match l {
        Letter::Base(m) => alg.embed_base(&alg.base().monomial(m.clone())),
        Letter::XPlus => alg.x_plus(),
        Letter::XMinus => alg.x_minus(),
    }
}

/// `χ(a)` computed monomial by monomial from generator values.
pub fn chi_eval(chi: &[Scalar], a: &BaseElement) -> Scalar {
    let mut acc = chi[0].field().zero();
    for (m, c) in a {
        let mut term = c.clone();
        for (v, &e) in chi.iter().zip(m.exps()) {
            term = &term * &v.pow(e as i64).unwrap();
        }
        acc = &acc + &term;
    }
    acc
}

/// Coradical degree of a basis element straight from the wedge definition:
/// `u ∈ A_0` iff `u` is grouplike, and `u ∈ A_s` iff `Δ(u)` lies in
/// `A_{s-1}⊗A + A⊗A_0`, decided term by term on the tensor basis.
pub struct WedgeOracle<'a> {
    pub hopf: &'a HopfAmbiskew,
    memo: HashMap<AmbiKey, u64>,
}

impl<'a> WedgeOracle<'a> {
    pub fn new(hopf: &'a HopfAmbiskew) -> Self {
        WedgeOracle {
            hopf,
            memo: HashMap::new(),
        }
    }

    pub fn degree(&mut self, k: &AmbiKey) -> u64 {
        if let Some(&d) = self.memo.get(k) {
            return d;
        }
        let alg = self.hopf.algebra();
        let u = alg.key_elem(k.0.clone(), k.1, k.2);
        let du = self.hopf.delta(&u);
        let d = if du == AmbiskewAlgebra::tensor(&u, &u) {
            0
        } else {
            let mut d = 1;
            for (p, q) in du.keys() {
                // g ⊗ u with g grouplike contributes 1, already counted
                if q != k && self.degree(q) > 0 {
                    assert!(
                        p != k,
                        "Δ({}) has {} ⊗ {}",
                        alg.fmt_key(k),
                        alg.fmt_key(p),
                        alg.fmt_key(q)
                    );
                    d = d.max(self.degree(p) + 1);
                }
            }
            d
        };
        self.memo.insert(k.clone(), d);
        d
    }

    /// Maximum over the support; valid because the PBW basis is
    /// filtration-compatible.
    pub fn element_degree(&mut self, a: &AmbiElement) -> u64 {
        let keys: Vec<AmbiKey> = a.keys().cloned().collect();
        keys.iter().map(|k| self.degree(k)).max().expect("nonzero")
    }
}
