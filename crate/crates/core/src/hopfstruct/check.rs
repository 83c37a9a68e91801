use std::collections::BTreeSet;
use std::sync::Arc;

use super::report::{Case, CheckReport};
use super::{ExtensionData, HopfAmbiskew};
use crate::ambicore::{AmbiElement, AmbiskewAlgebra};
use crate::basehopf::BaseHopf;
use crate::error::{Error, Result};
use crate::linear::{tensor, BaseElement};

/// Result of the extension checker: the report, and the Hopf algebra when
/// every condition and every axiom passed.
#[derive(Debug)]
pub struct HopfConditionsOutcome {
    pub report: CheckReport,
    pub algebra: Option<Arc<HopfAmbiskew>>,
}

fn require_grouplike(base: &BaseHopf, what: &str, y: &BaseElement) -> Result<()> {
    if !base.is_grouplike(y) {
        return Err(Error::NotGrouplike(format!(
            "{what} = {}",
            base.fmt_element(y)
        )));
    }
    Ok(())
}

/// Shared conditions on `z`, `h`, and `ξ`.
fn common_conditions(base: &BaseHopf, d: &ExtensionData, r: &mut CheckReport) {
    let f = |e: &BaseElement| base.fmt_element(e);
    let yy = base.mul(&d.y_minus, &d.y_plus);
    r.push(
        "z_factorization",
        d.z == base.mul(&d.y_plus, &d.y_minus) && d.z == yy,
        || {
            format!(
                "z = {}, y+*y- = {}, y-*y+ = {}",
                f(&d.z),
                f(&base.mul(&d.y_plus, &d.y_minus)),
                f(&yy)
            )
        },
    );
    r.push("z_grouplike", base.is_grouplike(&d.z), || {
        format!("z = {}", f(&d.z))
    });
    r.push("z_central", base.is_central(&d.z), || {
        format!("z = {}", f(&d.z))
    });
    r.push("h_central", base.is_central(&d.h), || {
        format!("h = {}", f(&d.h))
    });
    let dh = base.delta(&d.h);
    let expect = tensor(&d.h, &base.one()).add(&tensor(&d.z, &d.h));
    r.push("h_skew_primitive", dh == expect, || {
        format!(
            "Δ(h) = {} but h⊗1 + z⊗h = {}",
            base.fmt_tensor(&dh),
            base.fmt_tensor(&expect)
        )
    });
    let cp = base.char_eval_unchecked(&d.chi, &d.y_plus);
    let cm = base.char_eval_unchecked(&d.chi, &d.y_minus);
    r.push("xi_matches", cp == d.xi && cm == d.xi, || {
        format!("ξ mismatch: χ(y+) = {cp}, χ(y-) = {cm}, ξ = {}", d.xi)
    });
}

fn y_in_center_of_grouplikes(base: &BaseHopf, d: &ExtensionData, r: &mut CheckReport) {
    let gl = base.grouplike_generators();
    for (what, y) in [("y_plus", &d.y_plus), ("y_minus", &d.y_minus)] {
        let bad = gl.iter().find(|&&i| {
            let g = base.gen_elem(i);
            base.mul(y, &g) != base.mul(&g, y)
        });
        r.push(
            &format!("{what}_commutes_with_grouplikes"),
            bad.is_none(),
            || {
                format!(
                    "{what} = {} does not commute with {}",
                    base.fmt_element(y),
                    base.generators()[*bad.expect("failing generator")].name
                )
            },
        );
    }
}

fn chi_valid(base: &BaseHopf, d: &ExtensionData, r: &mut CheckReport) -> bool {
    let res = base.validate_character(&d.chi);
    r.push("character_valid", res.is_ok(), || {
        res.clone().unwrap_err().to_string()
    })
}

/// Checks the hat-form extension conditions on generators: χ a character;
/// `z` central grouplike; `h` central in `P_{1,z}`; `y±` grouplike in
/// `Z(G(R))` with `z = y+ y-`; `χ(y±) = ξ`; and `τ^l_χ = ad_l(y+) τ^r_χ`.
/// On success builds A and re-verifies every Hopf axiom on generators.
pub fn check_hopf_conditions(
    base: &Arc<BaseHopf>,
    data: &ExtensionData,
) -> Result<HopfConditionsOutcome> {
    require_grouplike(base, "y_plus", &data.y_plus)?;
    require_grouplike(base, "y_minus", &data.y_minus)?;
    let mut r = CheckReport::new();
    if !chi_valid(base, data, &mut r) {
        return Ok(HopfConditionsOutcome {
            report: r,
            algebra: None,
        });
    }
    common_conditions(base, data, &mut r);
    y_in_center_of_grouplikes(base, data, &mut r);
    let mut bad = None;
    for i in 0..base.ngens() {
        let g = base.gen_elem(i);
        let lhs = base.winding_left_unchecked(&data.chi, &g);
        let rhs = base.adjoint_left(&data.y_plus, &base.winding_right_unchecked(&data.chi, &g));
        if lhs != rhs {
            bad = Some(format!(
                "on {}: τ^l_χ = {}, ad_l(y+)τ^r_χ = {}",
                base.generators()[i].name,
                base.fmt_element(&lhs),
                base.fmt_element(&rhs)
            ));
            break;
        }
    }
    r.push("sigma_compatible", bad.is_none(), || {
        bad.clone().unwrap_or_default()
    });
    r.note("verified on generators");
    if !r.passed() {
        return Ok(HopfConditionsOutcome {
            report: r,
            algebra: None,
        });
    }
    finish(base, data, r)
}

fn finish(
    base: &Arc<BaseHopf>,
    data: &ExtensionData,
    mut r: CheckReport,
) -> Result<HopfConditionsOutcome> {
    let alg = AmbiskewAlgebra::new(
        base.clone(),
        data.sigma.clone(),
        data.h.clone(),
        data.xi.clone(),
    )?;
    let hopf = HopfAmbiskew::hat_form(alg, data.clone())?;
    let axioms = verify_hopf_axioms(&hopf);
    r.extend("axiom.", axioms);
    if !r.passed() {
        return Ok(HopfConditionsOutcome {
            report: r,
            algebra: None,
        });
    }
    r.classification = Some(classify_trichotomy(base, data)?);
    Ok(HopfConditionsOutcome {
        report: r,
        algebra: Some(Arc::new(hopf)),
    })
}

/// Coassociativity, counit, antipode (both sides), and compatibility of Δ,
/// ε, S with the defining relations, on every generator of R and on `X±`.
pub fn verify_hopf_axioms(hopf: &HopfAmbiskew) -> CheckReport {
    let alg = hopf.algebra();
    let base = alg.base();
    let mut r = CheckReport::new();
    let mut gens: Vec<(String, AmbiElement)> = (0..base.ngens())
        .map(|i| {
            (
                base.generators()[i].name.clone(),
                alg.embed_base(&base.gen_elem(i)),
            )
        })
        .collect();
    gens.push(("X+".into(), alg.x_plus()));
    gens.push(("X-".into(), alg.x_minus()));

    let first_bad =
        |r: &mut CheckReport, name: &str, check: &dyn Fn(&AmbiElement) -> Option<String>| {
            let bad = gens
                .iter()
                .find_map(|(n, g)| check(g).map(|w| format!("on {n}: {w}")));
            r.push(name, bad.is_none(), || bad.clone().unwrap_or_default());
        };

    first_bad(&mut r, "coassociative", &|g| {
        let d = hopf.delta(g);
        let (a, b) = (hopf.delta_left(&d), hopf.delta_right(&d));
        (a != b).then(|| format!("{} vs {}", hopf.fmt_tensor3(&a), hopf.fmt_tensor3(&b)))
    });
    first_bad(&mut r, "counit", &|g| {
        let (a, b) = hopf.counit_sides(&hopf.delta(g));
        (a != *g || b != *g).then(|| {
            format!(
                "(ε⊗id)Δ = {}, (id⊗ε)Δ = {}",
                alg.fmt_element(&a),
                alg.fmt_element(&b)
            )
        })
    });
    first_bad(&mut r, "antipode", &|g| {
        let (a, b) = hopf.antipode_sides(&hopf.delta(g));
        let e = alg.scalar(hopf.counit(g));
        (a != e || b != e).then(|| {
            format!(
                "m(S⊗id)Δ = {}, m(id⊗S)Δ = {}",
                alg.fmt_element(&a),
                alg.fmt_element(&b)
            )
        })
    });

    let (xp, xm) = (alg.x_plus(), alg.x_minus());
    let (dxp, dxm) = (hopf.delta(&xp), hopf.delta(&xm));
    let (sxp, sxm) = (hopf.antipode(&xp), hopf.antipode(&xm));
    let mut bad_delta = None;
    let mut bad_s = None;
    for i in 0..base.ngens() {
        let g = base.gen_elem(i);
        let name = &base.generators()[i].name;
        let eg = alg.embed_base(&g);
        let dg = hopf.delta(&eg);
        let sg = hopf.antipode(&eg);
        for (plus, dx, sx) in [(true, &dxp, &sxp), (false, &dxm, &sxm)] {
            let k = if plus { 1 } else { -1 };
            let sig = alg.embed_base(&alg.apply_sigma_power(&g, k));
            let lhs = alg.tensor_mul(dx, &dg);
            let rhs = alg.tensor_mul(&hopf.delta(&sig), dx);
            if lhs != rhs && bad_delta.is_none() {
                bad_delta = Some(format!("X{}*{name}", if plus { "+" } else { "-" }));
            }
            // S(X g) = S(g) S(X) must equal S(σ(g) X) = S(X) S(σ(g))
            let lhs = alg.mul(&sg, sx);
            let rhs = alg.mul(sx, &hopf.antipode(&sig));
            if lhs != rhs && bad_s.is_none() {
                bad_s = Some(format!("X{}*{name}", if plus { "+" } else { "-" }));
            }
        }
    }
    r.push("delta_preserves_commutation", bad_delta.is_none(), || {
        format!(
            "Δ fails on relation {}",
            bad_delta.clone().unwrap_or_default()
        )
    });
    let eh = alg.embed_base(alg.h());
    let lhs = alg.tensor_mul(&dxp, &dxm);
    let rhs = hopf
        .delta(&eh)
        .add(&alg.tensor_mul(&dxm, &dxp).scale(alg.xi()));
    r.push("delta_preserves_skew_relation", lhs == rhs, || {
        format!(
            "Δ(X+)Δ(X-) = {} but Δ(h) + ξΔ(X-)Δ(X+) = {}",
            alg.fmt_tensor(&lhs),
            alg.fmt_tensor(&rhs)
        )
    });
    let eps_h = hopf.counit(&eh);
    r.push("counit_of_h", eps_h.is_zero(), || format!("ε(h) = {eps_h}"));
    r.push("antipode_preserves_commutation", bad_s.is_none(), || {
        format!("S fails on relation {}", bad_s.clone().unwrap_or_default())
    });
    let lhs = alg.mul(&sxm, &sxp);
    let rhs = hopf.antipode(&eh).add(&alg.mul(&sxp, &sxm).scale(alg.xi()));
    r.push("antipode_preserves_skew_relation", lhs == rhs, || {
        format!(
            "S(X-)S(X+) = {} but S(h) + ξS(X+)S(X-) = {}",
            alg.fmt_element(&lhs),
            alg.fmt_element(&rhs)
        )
    });
    note_antipode_form(hopf, &mut r);
    r
}

/// Records which closed form for `S(X±)` the antipode axiom validates.
fn note_antipode_form(hopf: &HopfAmbiskew, r: &mut CheckReport) {
    let alg = hopf.algebra();
    let base = alg.base();
    let (sp, sm) = hopf.antipode_generators();
    for (sign, x, s, y) in [
        ("+", alg.x_plus(), sp, hopf.y_plus()),
        ("-", alg.x_minus(), sm, hopf.y_minus()),
    ] {
        let Ok(yinv) = base.inverse(&y) else { continue };
        let inv_form = alg.mul(&alg.embed_base(&yinv), &x).neg();
        let direct_form = alg.mul(&alg.embed_base(&y), &x).neg();
        let form = if *s == inv_form {
            format!("S(X{sign}) = -y{sign}^-1*X{sign}")
        } else {
            format!("S(X{sign}) = {}", alg.fmt_element(s))
        };
        let other = if *s == direct_form {
            "coincides with -y*X since y^2 = 1"
        } else {
            "-y*X fails the antipode axiom"
        };
        r.note(format!("{form} ({other})"));
    }
}

/// Which specialised criterion [`fast_path_check`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FastPath {
    /// Commutative base: `τ^l_χ = τ^r_χ` replaces the adjoint condition.
    Commutative,
    /// Cocommutative base: `y±` central and `h ∈ k(z-1)` or primitive with `z = 1`.
    Cocommutative,
}

/// The specialised criteria for commutative or cocommutative bases. With
/// `path = None` the commutative path is preferred.
pub fn fast_path_check(
    base: &Arc<BaseHopf>,
    data: &ExtensionData,
    path: Option<FastPath>,
) -> Result<CheckReport> {
    let desc = base.descriptor();
    let path = match path {
        Some(FastPath::Commutative) if !desc.commutative => {
            return Err(Error::Unsupported("base is not commutative".into()))
        }
        Some(FastPath::Cocommutative) if !desc.cocommutative => {
            return Err(Error::Unsupported("base is not cocommutative".into()))
        }
        Some(p) => p,
        None if desc.commutative => FastPath::Commutative,
        None if desc.cocommutative => FastPath::Cocommutative,
        None => {
            return Err(Error::Unsupported(
                "fast path refused: base is neither commutative nor cocommutative".into(),
            ))
        }
    };
    require_grouplike(base, "y_plus", &data.y_plus)?;
    require_grouplike(base, "y_minus", &data.y_minus)?;
    let mut r = CheckReport::new();
    if !chi_valid(base, data, &mut r) {
        return Ok(r);
    }
    let f = |e: &BaseElement| base.fmt_element(e);
    match path {
        FastPath::Commutative => {
            common_conditions(base, data, &mut r);
            let bad = (0..base.ngens()).find(|&i| {
                let g = base.gen_elem(i);
                base.winding_left_unchecked(&data.chi, &g)
                    != base.winding_right_unchecked(&data.chi, &g)
            });
            r.push("windings_agree", bad.is_none(), || {
                format!(
                    "τ^l_χ != τ^r_χ on {}",
                    base.generators()[bad.expect("bad")].name
                )
            });
        }
        FastPath::Cocommutative => {
            let yy = base.mul(&data.y_minus, &data.y_plus);
            r.push(
                "z_factorization",
                data.z == base.mul(&data.y_plus, &data.y_minus) && data.z == yy,
                || {
                    format!(
                        "z = {}, y+*y- = {}",
                        f(&data.z),
                        f(&base.mul(&data.y_plus, &data.y_minus))
                    )
                },
            );
            r.push("z_grouplike", base.is_grouplike(&data.z), || {
                format!("z = {}", f(&data.z))
            });
            for (what, y) in [
                ("y_plus", &data.y_plus),
                ("y_minus", &data.y_minus),
                ("z", &data.z),
            ] {
                r.push(&format!("{what}_central"), base.is_central(y), || {
                    format!("{what} = {}", f(y))
                });
            }
            let cp = base.char_eval_unchecked(&data.chi, &data.y_plus);
            let cm = base.char_eval_unchecked(&data.chi, &data.y_minus);
            r.push("xi_matches", cp == data.xi && cm == data.xi, || {
                format!("ξ mismatch: χ(y+) = {cp}, χ(y-) = {cm}, ξ = {}", data.xi)
            });
            let one = base.one();
            let zm1 = data.z.sub(&one);
            let multiple = if zm1.is_zero() {
                data.h.is_zero()
            } else {
                let (m0, c0) = zm1.iter().next().expect("nonzero");
                match data.h.coeff(m0) {
                    Some(hc) => zm1.scale(&hc.try_div(c0).expect("nonzero")) == data.h,
                    None => data.h.is_zero(),
                }
            };
            let primitive =
                base.delta(&data.h) == tensor(&data.h, &one).add(&tensor(&one, &data.h));
            let ok = multiple || (primitive && zm1.is_zero());
            r.push("h_admissible", ok, || {
                if primitive {
                    format!("h = {} is primitive, so z = 1 required", f(&data.h))
                } else {
                    format!("h = {} is neither in k(z-1) nor primitive", f(&data.h))
                }
            });
        }
    }
    r.note("verified on generators");
    Ok(r)
}

/// Returns every trichotomy case that holds, after asserting the identity
/// `(ξ²-1)h = χ(h)(z-1)`.
pub fn classify_trichotomy(base: &BaseHopf, data: &ExtensionData) -> Result<BTreeSet<Case>> {
    let one = base.one();
    let xi2m1 = &(&data.xi * &data.xi) - &base.field().one();
    let chi_h = base.char_eval_unchecked(&data.chi, &data.h);
    let zm1 = data.z.sub(&one);
    if data.h.scale(&xi2m1) != zm1.scale(&chi_h) {
        return Err(Error::Invariant(format!(
            "(ξ²-1)h = χ(h)(z-1) fails: ξ = {}, h = {}, χ(h) = {chi_h}, z = {}",
            data.xi,
            base.fmt_element(&data.h),
            base.fmt_element(&data.z)
        )));
    }
    let mut cases = BTreeSet::new();
    if xi2m1.is_zero() {
        if chi_h.is_zero() {
            cases.insert(Case::I);
        }
        if zm1.is_zero() {
            cases.insert(Case::II);
        }
    } else if data.h == zm1.scale(&chi_h.try_div(&xi2m1)?) {
        cases.insert(Case::III);
    }
    if cases.is_empty() {
        return Err(Error::Invariant("no trichotomy case holds".into()));
    }
    Ok(cases)
}
