use std::sync::Arc;

use super::report::CheckReport;
use super::{ExtensionData, HopfAmbiskew};
use crate::ambicore::AmbiskewAlgebra;
use crate::basehopf::{BaseAutomorphism, BaseHopf, Character};
use crate::error::{Error, Result};
use crate::linear::{tensor, BaseElement};
use crate::scalar::Scalar;

/// An ambiskew algebra with `Δ(X±) = X±⊗r± + l±⊗X±`.
#[derive(Clone, Debug)]
pub struct GeneralPresentation {
    pub l_plus: BaseElement,
    pub l_minus: BaseElement,
    pub r_plus: BaseElement,
    pub r_minus: BaseElement,
    pub algebra: Arc<AmbiskewAlgebra>,
}

impl GeneralPresentation {
    /// The presentation with `σ := ad_l(r+) ∘ τ^l_χ`, and `ξ := χ(l- r+)`
    /// unless given.
    pub fn from_character(
        base: &Arc<BaseHopf>,
        chi: &Character,
        l: (BaseElement, BaseElement),
        r: (BaseElement, BaseElement),
        h: BaseElement,
        xi: Option<Scalar>,
    ) -> Result<Self> {
        base.validate_character(chi)?;
        for (what, g) in [
            ("l_plus", &l.0),
            ("l_minus", &l.1),
            ("r_plus", &r.0),
            ("r_minus", &r.1),
        ] {
            if !base.is_grouplike(g) {
                return Err(Error::NotGrouplike(format!(
                    "{what} = {}",
                    base.fmt_element(g)
                )));
            }
        }
        let rp = r.0.clone();
        let rp_inv = base.inverse(&rp)?;
        let tau = base.winding_left_automorphism(chi)?;
        let sigma = BaseAutomorphism::from_maps(
            base,
            |a| base.adjoint_left(&rp, &tau.apply(base, a)),
            |a| tau.apply_power(base, &base.adjoint_left(&rp_inv, a), -1),
        );
        let xi = match xi {
            Some(x) => x,
            None => base.char_eval(chi, &base.mul(&l.1, &r.0))?,
        };
        let algebra = AmbiskewAlgebra::new(base.clone(), sigma, h, xi)?;
        Ok(GeneralPresentation {
            l_plus: l.0,
            l_minus: l.1,
            r_plus: r.0,
            r_minus: r.1,
            algebra: Arc::new(algebra),
        })
    }
}

/// Hat-form data and algebra, with the pre- and postcondition report.
#[derive(Debug)]
pub struct RelabelOutcome {
    pub data: ExtensionData,
    pub algebra: AmbiskewAlgebra,
    pub report: CheckReport,
}

/// Changes variables to `X̂± = X± r±^-1`: `σ̂ = ad_r(r+)∘σ`,
/// `ξ̂ = ξ χ(r+r-)^-1`, `ĥ = χ(r+)^-1 h (r+r-)^-1`, `y± = l± r±^-1`, with
/// `χ = ε∘σ`. The necessary conditions on the general presentation are
/// checked first; the relation and coproduct of the new variables are
/// re-verified afterwards.
pub fn relabel(gp: &GeneralPresentation) -> Result<RelabelOutcome> {
    let alg = &gp.algebra;
    let base = alg.base();
    let f = |e: &BaseElement| base.fmt_element(e);
    let mut inv = Vec::new();
    for (what, g) in [
        ("l_plus", &gp.l_plus),
        ("l_minus", &gp.l_minus),
        ("r_plus", &gp.r_plus),
        ("r_minus", &gp.r_minus),
    ] {
        if !base.is_grouplike(g) {
            return Err(Error::NotGrouplike(format!("{what} = {}", f(g))));
        }
        inv.push(base.inverse(g)?);
    }
    let (rp_inv, rm_inv) = (inv[2].clone(), inv[3].clone());

    let eps = base.counit_character();
    let chi = Character::new(
        (0..base.ngens())
            .map(|i| base.char_eval_unchecked(&eps, &alg.sigma().apply(base, &base.gen_elem(i))))
            .collect(),
    );

    let mut pre = CheckReport::new();
    pre.push(
        "character_valid",
        base.validate_character(&chi).is_ok(),
        || "ε∘σ is not a character".into(),
    );
    let rr = base.mul(&gp.r_plus, &gp.r_minus);
    let ll = base.mul(&gp.l_plus, &gp.l_minus);
    pre.push("r_commute", rr == base.mul(&gp.r_minus, &gp.r_plus), || {
        "r+ r- != r- r+".into()
    });
    pre.push("l_commute", ll == base.mul(&gp.l_minus, &gp.l_plus), || {
        "l+ l- != l- l+".into()
    });
    pre.push("rr_central", base.is_central(&rr), || {
        format!("r+r- = {}", f(&rr))
    });
    pre.push("ll_central", base.is_central(&ll), || {
        format!("l+l- = {}", f(&ll))
    });
    let h = alg.h();
    let dh = base.delta(h);
    let expect = tensor(h, &rr).add(&tensor(&ll, h));
    pre.push("h_skew_primitive", dh == expect, || {
        format!(
            "Δ(h) = {}, expected {}",
            base.fmt_tensor(&dh),
            base.fmt_tensor(&expect)
        )
    });
    let x1 = base.char_eval_unchecked(&chi, &base.mul(&gp.l_minus, &gp.r_plus));
    let x2 = base.char_eval_unchecked(&chi, &base.mul(&gp.l_plus, &gp.r_minus));
    pre.push("xi_matches", &x1 == alg.xi() && &x2 == alg.xi(), || {
        format!("ξ = {}, χ(l-r+) = {x1}, χ(l+r-) = {x2}", alg.xi())
    });
    let mut bad = None;
    for i in 0..base.ngens() {
        let g = base.gen_elem(i);
        let s = alg.sigma().apply(base, &g);
        let a = base.adjoint_left(&gp.l_plus, &base.winding_right_unchecked(&chi, &g));
        let b = base.adjoint_left(&gp.r_plus, &base.winding_left_unchecked(&chi, &g));
        if s != a || s != b {
            bad = Some(base.generators()[i].name.clone());
            break;
        }
    }
    pre.push("sigma_windings", bad.is_none(), || {
        format!(
            "σ != ad_l(l+)τ^r_χ = ad_l(r+)τ^l_χ on {}",
            bad.clone().unwrap_or_default()
        )
    });
    if !pre.passed() {
        let failed: Vec<String> = pre
            .failures()
            .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
            .collect();
        return Err(Error::Precondition(failed.join("; ")));
    }

    let chi_rr = base.char_eval_unchecked(&chi, &rr);
    let xi_hat = alg.xi().try_div(&chi_rr)?;
    let chi_rp = base.char_eval_unchecked(&chi, &gp.r_plus);
    let rr_inv = base.inverse(&rr)?;
    let h_hat = base.mul(h, &rr_inv).scale(&chi_rp.inv()?);
    let y_plus = base.mul(&gp.l_plus, &rp_inv);
    let y_minus = base.mul(&gp.l_minus, &rm_inv);
    let data = ExtensionData::new(
        base,
        chi.clone(),
        y_plus.clone(),
        y_minus.clone(),
        h_hat.clone(),
        Some(xi_hat.clone()),
    )?;

    // σ̂ = ad_r(r+)∘σ must coincide with τ^l_χ
    let sigma = alg.sigma().clone();
    let rp = gp.r_plus.clone();
    let sigma_hat = BaseAutomorphism::from_maps(
        base,
        |a| base.adjoint_right(&rp, &sigma.apply(base, a)),
        |a| sigma.apply_power(base, &base.adjoint_right(&rp_inv, a), -1),
    );
    let mut post = CheckReport::new();
    post.push(
        "sigma_hat_is_winding",
        sigma_hat.agrees_with(base, &data.sigma),
        || "ad_r(r+)∘σ differs from τ^l_χ".into(),
    );

    let general = HopfAmbiskew::general(
        AmbiskewAlgebra::new_unchecked(
            base.clone(),
            alg.sigma().clone(),
            h.clone(),
            alg.xi().clone(),
        ),
        gp.l_plus.clone(),
        gp.l_minus.clone(),
        gp.r_plus.clone(),
        gp.r_minus.clone(),
    )?;
    let ga = general.algebra();
    let xp = ga.mul(&ga.x_plus(), &ga.embed_base(&rp_inv));
    let xm = ga.mul(&ga.x_minus(), &ga.embed_base(&rm_inv));
    let lhs = ga.mul(&xp, &xm);
    let rhs = ga.embed_base(&h_hat).add(&ga.mul(&xm, &xp).scale(&xi_hat));
    post.push("new_variables_relation", lhs == rhs, || {
        format!(
            "X̂+X̂- = {}, ĥ + ξ̂X̂-X̂+ = {}",
            ga.fmt_element(&lhs),
            ga.fmt_element(&rhs)
        )
    });
    for (sign, x, y) in [("+", &xp, &y_plus), ("-", &xm, &y_minus)] {
        let d = general.delta(x);
        let expect = AmbiskewAlgebra::tensor(x, &ga.one())
            .add(&AmbiskewAlgebra::tensor(&ga.embed_base(y), x));
        post.push(
            &format!("new_variables_coproduct{sign}"),
            d == expect,
            || format!("Δ(X̂{sign}) = {}", ga.fmt_tensor(&d)),
        );
    }
    if !post.passed() {
        return Err(Error::Invariant(format!(
            "change of variables postcondition failed:\n{}",
            post.render_text()
        )));
    }
    let mut report = pre;
    report.extend("post.", post);
    let algebra = AmbiskewAlgebra::new(base.clone(), data.sigma.clone(), h_hat, xi_hat)?;
    Ok(RelabelOutcome {
        data,
        algebra,
        report,
    })
}
