//! Builds algebras from a parsed spec document and runs the checkers on them.

use std::sync::Arc;

use crate::ambicore::{AmbiElement, AmbiskewAlgebra};
use crate::basehopf::{BaseHopf, Character};
use crate::error::{Error, Result};
use crate::exprparse::{
    eval_ambi, eval_base, eval_scalar, parse_expr, parse_spec, BaseSpec, CheckKind, Expr,
    FieldSpec, Located, SpecDocument,
};
use crate::hopfstruct::{
    check_hopf_conditions, fast_path_check, relabel, CheckReport, ExtensionData,
    GeneralPresentation, HopfAmbiskew,
};
use crate::linear::BaseElement;
use crate::properties::{property_report, PropertyReport, DEFAULT_NMAX};
use crate::scalar::{Field, Scalar};

/// Command-line overrides applied on top of a document.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub field: Option<FieldSpec>,
    pub nmax: Option<u64>,
}

/// How the extension was written down.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum Presentation {
    Hat(ExtensionData),
    General(GeneralPresentation),
}

/// Outcome of [`Session::check`].
#[derive(Debug)]
pub struct SessionCheck {
    pub report: CheckReport,
    pub data: ExtensionData,
    pub hopf: Option<Arc<HopfAmbiskew>>,
}

#[derive(Debug)]
pub struct Session {
    pub doc: SpecDocument,
    pub field: Field,
    pub base: Arc<BaseHopf>,
    pub nmax: u64,
    pub presentation: Presentation,
}

fn build_base(field: &Field, spec: &BaseSpec) -> Result<Arc<BaseHopf>> {
    match spec {
        BaseSpec::Polynomial { var } => Ok(BaseHopf::polynomial(field, var)),
        BaseSpec::Laurent { var } => Ok(BaseHopf::laurent(field, var)),
        BaseSpec::Group { rank, torsion } => BaseHopf::group(field, *rank, torsion),
        BaseSpec::UqSl2 { q } => {
            let q = match q {
                Some(e) => eval_scalar(field, &e.value)?,
                None => field.param().map_err(|_| Error::Schema {
                    path: "base.q".into(),
                    message: format!("required over {field}"),
                })?,
            };
            BaseHopf::uqsl2(field, &q)
        }
    }
}

/// Character values from `name: value` pairs. Alias keys of the form
/// `c * (monomial)` determine the one generator in the monomial that has no
/// value yet.
fn build_character(
    base: &BaseHopf,
    entries: &[(Located<String>, Located<Expr>)],
) -> Result<Character> {
    let field = base.field();
    let mut values: Vec<Option<Scalar>> = vec![None; base.ngens()];
    let mut aliases = Vec::new();
    for (key, val) in entries {
        let v = eval_scalar(field, &val.value)?;
        match base.gen_index(&key.value) {
            Some(i) => values[i] = Some(v),
            None => match base.aliases().iter().find(|a| a.name == key.value) {
                Some(a) => aliases.push((a, v)),
                None => return Err(Error::UnknownGenerator(key.value.clone())),
            },
        }
    }
    for (alias, v) in aliases {
        let bad = || {
            Error::InvalidCharacter(format!(
                "cannot determine the character from the value on {}",
                alias.name
            ))
        };
        let mut it = alias.value.iter();
        let (Some((m, c)), None) = (it.next(), it.next()) else {
            return Err(bad());
        };
        let unknown: Vec<usize> = (0..m.len())
            .filter(|&i| m.exps()[i] != 0 && values[i].is_none())
            .collect();
        let [j] = unknown[..] else {
            return Err(bad());
        };
        if m.exps()[j] != 1 {
            return Err(bad());
        }
        let mut known = c.clone();
        for (i, &e) in m.exps().iter().enumerate() {
            if i != j && e != 0 {
                known = &known
                    * &values[i]
                        .as_ref()
                        .expect("known")
                        .pow(e as i64)
                        .map_err(|_| bad())?;
            }
        }
        values[j] = Some(v.try_div(&known).map_err(|_| bad())?);
    }
    let mut out = Vec::new();
    for (i, v) in values.into_iter().enumerate() {
        out.push(v.ok_or_else(|| Error::Schema {
            path: format!("extension.chi.{}", base.generators()[i].name),
            message: "required".into(),
        })?);
    }
    Ok(Character::new(out))
}

impl Session {
    pub fn from_source(src: &str, overrides: Overrides) -> Result<Self> {
        Self::new(parse_spec(src)?, overrides)
    }

    pub fn new(doc: SpecDocument, overrides: Overrides) -> Result<Self> {
        let field = overrides.field.unwrap_or(doc.field).to_field()?;
        let nmax = overrides.nmax.or(doc.options.nmax).unwrap_or(DEFAULT_NMAX);
        let base = build_base(&field, &doc.base)?;
        let ext = &doc.extension;
        let chi = build_character(&base, &ext.chi)?;
        let ev = |e: &Located<Expr>| eval_base(&base, &e.value);
        let h = ev(&ext.h)?;
        let xi = ext
            .xi
            .as_ref()
            .map(|e| eval_scalar(&field, &e.value))
            .transpose()?;
        let presentation = match &ext.general_form {
            Some(g) => Presentation::General(GeneralPresentation::from_character(
                &base,
                &chi,
                (ev(&g.l_plus)?, ev(&g.l_minus)?),
                (ev(&g.r_plus)?, ev(&g.r_minus)?),
                h,
                xi,
            )?),
            None => {
                let y_plus = ev(ext.y_plus.as_ref().expect("schema guarantees y_plus"))?;
                let y_minus = ev(ext.y_minus.as_ref().expect("schema guarantees y_minus"))?;
                Presentation::Hat(ExtensionData::new(&base, chi, y_plus, y_minus, h, xi)?)
            }
        };
        Ok(Session {
            doc,
            field,
            base,
            nmax,
            presentation,
        })
    }

    pub fn name(&self) -> &str {
        self.doc.name.as_deref().unwrap_or("unnamed")
    }

    /// Hat-form data: as written, or after the change of variables.
    pub fn hat_data(&self) -> Result<(ExtensionData, Option<CheckReport>)> {
        match &self.presentation {
            Presentation::Hat(d) => Ok((d.clone(), None)),
            Presentation::General(gp) => {
                let out = relabel(gp)?;
                Ok((out.data, Some(out.report)))
            }
        }
    }

    /// The algebra in hat-form variables; no Hopf conditions are required.
    pub fn algebra(&self) -> Result<AmbiskewAlgebra> {
        let (d, _) = self.hat_data()?;
        AmbiskewAlgebra::new(self.base.clone(), d.sigma, d.h, d.xi)
    }

    /// Runs the extension checker, plus the specialised criterion when the
    /// document asks for it. A disagreement between the two is an invariant
    /// breach.
    pub fn check(&self) -> Result<SessionCheck> {
        let (data, pre) = self.hat_data()?;
        let outcome = check_hopf_conditions(&self.base, &data)?;
        let mut report = CheckReport::new();
        if let Some(pre) = pre {
            report.extend("relabel.", pre);
        }
        let passed = outcome.report.passed();
        let classification = outcome.report.classification.clone();
        report.extend("", outcome.report);
        if self.doc.options.checks.contains(&CheckKind::Fast) {
            match fast_path_check(&self.base, &data, None) {
                Ok(fast) => {
                    if fast.passed() != passed {
                        return Err(Error::Invariant(format!(
                            "specialised criterion says {}, full check says {}",
                            if fast.passed() { "pass" } else { "fail" },
                            if passed { "pass" } else { "fail" }
                        )));
                    }
                    report.extend("fast.", fast);
                }
                Err(Error::Unsupported(m)) => {
                    report.note(format!("specialised criterion skipped: {m}"))
                }
                Err(e) => return Err(e),
            }
        }
        report.classification = classification;
        Ok(SessionCheck {
            report,
            data,
            hopf: outcome.algebra,
        })
    }

    /// The verified Hopf algebra; fails with [`Error::NotHopf`] otherwise.
    pub fn hopf(&self) -> Result<Arc<HopfAmbiskew>> {
        self.check()?.hopf.ok_or(Error::NotHopf)
    }

    pub fn eval(&self, alg: &AmbiskewAlgebra, src: &str) -> Result<AmbiElement> {
        eval_ambi(alg, &parse_expr(src)?)
    }

    pub fn eval_base(&self, src: &str) -> Result<BaseElement> {
        eval_base(&self.base, &parse_expr(src)?)
    }

    /// Property report; the Hopf flag is set when the checker passes.
    pub fn properties(&self) -> Result<PropertyReport> {
        let checked = self.check()?;
        let owned;
        let alg = match &checked.hopf {
            Some(h) => h.algebra(),
            None => {
                owned = self.algebra()?;
                &owned
            }
        };
        Ok(property_report(alg, checked.hopf.is_some(), self.nmax))
    }
}
