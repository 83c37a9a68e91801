//! Hopf structure on ambiskew algebras: coproduct, counit and antipode,
//! axiom verification, the extension checker, the change of variables to
//! hat form, and the trichotomy classifier.

mod check;
mod relabel;
mod report;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use check::{
    check_hopf_conditions, classify_trichotomy, fast_path_check, verify_hopf_axioms, FastPath,
    HopfConditionsOutcome,
};
pub use relabel::{relabel, GeneralPresentation, RelabelOutcome};
pub use report::{fmt_cases, Case, CheckReport, Condition};

use crate::ambicore::{AmbiElement, AmbiKey, AmbiskewAlgebra, TensorElement};
use crate::basehopf::{BaseAutomorphism, BaseHopf, Character};
use crate::error::{Error, Result};
use crate::linear::{BaseElement, LinComb};
use crate::scalar::Scalar;

/// Element of A⊗A⊗A.
pub type Tensor3 = LinComb<(AmbiKey, AmbiKey, AmbiKey)>;

/// Hat-form data `(χ, y+, y-, z, h, ξ, σ)` of an ambiskew Hopf extension,
/// where `z = y+ y-` and `σ = τ^l_χ` materialized on generators.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    pub chi: Character,
    pub y_plus: BaseElement,
    pub y_minus: BaseElement,
    pub z: BaseElement,
    pub h: BaseElement,
    pub xi: Scalar,
    pub sigma: BaseAutomorphism,
}

impl ExtensionData {
    /// Assembles data with `z := y+ y-`, `σ := τ^l_χ`, and `ξ := χ(y+)`
    /// unless given. Nothing beyond field membership is verified here.
    pub fn new(
        base: &BaseHopf,
        chi: Character,
        y_plus: BaseElement,
        y_minus: BaseElement,
        h: BaseElement,
        xi: Option<Scalar>,
    ) -> Result<Self> {
        let field = base.field();
        let check = |what: &str, s: &Scalar| -> Result<()> {
            if s.field() != *field {
                return Err(Error::FieldMismatch(format!(
                    "{what} lies in {}, base is over {field}",
                    s.field()
                )));
            }
            Ok(())
        };
        for v in &chi.values {
            check("character value", v)?;
        }
        for (what, e) in [("y_plus", &y_plus), ("y_minus", &y_minus), ("h", &h)] {
            for (_, c) in e {
                check(what, c)?;
            }
        }
        if let Some(x) = &xi {
            check("xi", x)?;
        }
        if chi.values.len() != base.ngens() {
            return Err(Error::InvalidCharacter(format!(
                "expected {} values, got {}",
                base.ngens(),
                chi.values.len()
            )));
        }
        let z = base.mul(&y_plus, &y_minus);
        let xi = xi.unwrap_or_else(|| base.char_eval_unchecked(&chi, &y_plus));
        let sigma = base.winding_left_automorphism_unchecked(&chi);
        Ok(ExtensionData {
            chi,
            y_plus,
            y_minus,
            z,
            h,
            xi,
            sigma,
        })
    }
}

#[derive(Default)]
struct HopfCaches {
    delta_x: HashMap<(u32, u32), TensorElement>,
    antipode_x: HashMap<(u32, u32), AmbiElement>,
}

/// An ambiskew algebra with coproduct `Δ(X±) = X±⊗r± + l±⊗X±`, counit
/// `ε(X±) = 0`, and antipode derived from the antipode axiom. Obtained
/// from the checkers; hat form has `r± = 1`, `l± = y±`.
pub struct HopfAmbiskew {
    algebra: AmbiskewAlgebra,
    l_plus: BaseElement,
    l_minus: BaseElement,
    r_plus: BaseElement,
    r_minus: BaseElement,
    data: Option<ExtensionData>,
    s_plus: AmbiElement,
    s_minus: AmbiElement,
    cache: Mutex<HopfCaches>,
}

impl std::fmt::Debug for HopfAmbiskew {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfAmbiskew")
            .field("algebra", &self.algebra)
            .finish()
    }
}

impl HopfAmbiskew {
    pub(crate) fn hat_form(algebra: AmbiskewAlgebra, data: ExtensionData) -> Result<Self> {
        let one = algebra.base().one();
        let mut h = Self::general(
            algebra,
            data.y_plus.clone(),
            data.y_minus.clone(),
            one.clone(),
            one,
        )?;
        h.data = Some(data);
        Ok(h)
    }

    /// Structure maps for the general skew-primitive form. `l±`, `r±` must be
    /// invertible; nothing else is verified.
    pub(crate) fn general(
        algebra: AmbiskewAlgebra,
        l_plus: BaseElement,
        l_minus: BaseElement,
        r_plus: BaseElement,
        r_minus: BaseElement,
    ) -> Result<Self> {
        let base = algebra.base().clone();
        // m(S⊗id)Δ(X) = S(X) r + S(l) X = 0 forces S(X) = -S(l) X r^-1
        let solve = |x: AmbiElement, l: &BaseElement, r: &BaseElement| -> Result<AmbiElement> {
            let sl = algebra.embed_base(&base.antipode(l));
            let rinv = algebra.embed_base(&base.inverse(r)?);
            Ok(algebra.mul(&algebra.mul(&sl, &x), &rinv).neg())
        };
        let s_plus = solve(algebra.x_plus(), &l_plus, &r_plus)?;
        let s_minus = solve(algebra.x_minus(), &l_minus, &r_minus)?;
        Ok(HopfAmbiskew {
            algebra,
            l_plus,
            l_minus,
            r_plus,
            r_minus,
            data: None,
            s_plus,
            s_minus,
            cache: Mutex::new(HopfCaches::default()),
        })
    }

    pub fn algebra(&self) -> &AmbiskewAlgebra {
        &self.algebra
    }

    pub fn base(&self) -> &Arc<BaseHopf> {
        self.algebra.base()
    }

    /// The hat-form data the algebra was built from.
    pub fn data(&self) -> Option<&ExtensionData> {
        self.data.as_ref()
    }

    pub fn y_plus(&self) -> BaseElement {
        let b = self.base();
        b.mul(&self.l_plus, &b.inverse(&self.r_plus).expect("invertible"))
    }

    pub fn y_minus(&self) -> BaseElement {
        let b = self.base();
        b.mul(
            &self.l_minus,
            &b.inverse(&self.r_minus).expect("invertible"),
        )
    }

    pub fn chi(&self) -> Character {
        match &self.data {
            Some(d) => d.chi.clone(),
            None => {
                let b = self.base();
                let eps = b.counit_character();
                Character::new(
                    (0..b.ngens())
                        .map(|i| {
                            b.char_eval_unchecked(
                                &eps,
                                &self.algebra.sigma().apply(b, &b.gen_elem(i)),
                            )
                        })
                        .collect(),
                )
            }
        }
    }

    /// `ξ` after the change of variables to hat form, `ξ χ(r+r-)^-1`.
    pub fn hat_xi(&self) -> Scalar {
        let b = self.base();
        let rr = b.mul(&self.r_plus, &self.r_minus);
        let c = b.char_eval_unchecked(&self.chi(), &rr);
        self.algebra
            .xi()
            .try_div(&c)
            .expect("χ of a grouplike is nonzero")
    }

    pub fn is_hat_form(&self) -> bool {
        let one = self.base().one();
        self.r_plus == one && self.r_minus == one
    }

    /// `S(X+)` and `S(X-)` as derived from the antipode axiom.
    pub fn antipode_generators(&self) -> (&AmbiElement, &AmbiElement) {
        (&self.s_plus, &self.s_minus)
    }

    fn x_delta(&self, plus: bool) -> TensorElement {
        let alg = &self.algebra;
        let (x, l, r) = if plus {
            (alg.x_plus(), &self.l_plus, &self.r_plus)
        } else {
            (alg.x_minus(), &self.l_minus, &self.r_minus)
        };
        AmbiskewAlgebra::tensor(&x, &alg.embed_base(r))
            .add(&AmbiskewAlgebra::tensor(&alg.embed_base(l), &x))
    }

    /// `Δ(X+^m X-^n)`.
    pub fn delta_x_power(&self, m: u32, n: u32) -> TensorElement {
        if let Some(t) = self.cache.lock().expect("cache").delta_x.get(&(m, n)) {
            return t.clone();
        }
        let alg = &self.algebra;
        let out = if m == 0 && n == 0 {
            AmbiskewAlgebra::tensor(&alg.one(), &alg.one())
        } else if n > 0 {
            alg.tensor_mul(&self.delta_x_power(m, n - 1), &self.x_delta(false))
        } else {
            alg.tensor_mul(&self.delta_x_power(m - 1, 0), &self.x_delta(true))
        };
        self.cache
            .lock()
            .expect("cache")
            .delta_x
            .insert((m, n), out.clone());
        out
    }

    pub fn delta_key(&self, k: &AmbiKey) -> TensorElement {
        let dx = self.delta_x_power(k.1, k.2);
        if k.0.is_one() {
            return dx;
        }
        let dr = AmbiskewAlgebra::embed_base_tensor(&self.base().delta_mono(&k.0));
        self.algebra.tensor_mul(&dr, &dx)
    }

    pub fn delta(&self, a: &AmbiElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (k, c) in a {
            out.add_scaled(&self.delta_key(k), c);
        }
        out
    }

    pub fn counit(&self, a: &AmbiElement) -> Scalar {
        let b = self.base();
        let mut acc = b.field().zero();
        for ((m, i, j), c) in a {
            if *i == 0 && *j == 0 {
                acc = &acc + &(c * &b.counit(&b.monomial(m.clone())));
            }
        }
        acc
    }

    fn antipode_x_power(&self, m: u32, n: u32) -> AmbiElement {
        if let Some(t) = self.cache.lock().expect("cache").antipode_x.get(&(m, n)) {
            return t.clone();
        }
        let alg = &self.algebra;
        // S(X+^m X-^n) = S(X-)^n S(X+)^m
        let out = if m == 0 && n == 0 {
            alg.one()
        } else if m > 0 {
            alg.mul(&self.antipode_x_power(m - 1, n), &self.s_plus)
        } else {
            alg.mul(&self.s_minus, &self.antipode_x_power(0, n - 1))
        };
        self.cache
            .lock()
            .expect("cache")
            .antipode_x
            .insert((m, n), out.clone());
        out
    }

    pub fn antipode_key(&self, k: &AmbiKey) -> AmbiElement {
        let sx = self.antipode_x_power(k.1, k.2);
        if k.0.is_one() {
            return sx;
        }
        let b = self.base();
        let sr = self
            .algebra
            .embed_base(&b.antipode(&b.monomial(k.0.clone())));
        self.algebra.mul(&sx, &sr)
    }

    pub fn antipode(&self, a: &AmbiElement) -> AmbiElement {
        let mut out = AmbiElement::zero();
        for (k, c) in a {
            out.add_scaled(&self.antipode_key(k), c);
        }
        out
    }

    /// `(Δ⊗id)t`.
    pub fn delta_left(&self, t: &TensorElement) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((a, b), c) in t {
            for ((x, y), d) in &self.delta_key(a) {
                out.add_term((x.clone(), y.clone(), b.clone()), c * d);
            }
        }
        out
    }

    /// `(id⊗Δ)t`.
    pub fn delta_right(&self, t: &TensorElement) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((a, b), c) in t {
            for ((x, y), d) in &self.delta_key(b) {
                out.add_term((a.clone(), x.clone(), y.clone()), c * d);
            }
        }
        out
    }

    /// `(ε⊗id)t` and `(id⊗ε)t`.
    pub fn counit_sides(&self, t: &TensorElement) -> (AmbiElement, AmbiElement) {
        let alg = &self.algebra;
        let mut left = AmbiElement::zero();
        let mut right = AmbiElement::zero();
        for ((a, b), c) in t {
            let ea = self.counit(&alg.key_elem(a.0.clone(), a.1, a.2));
            if !ea.is_zero() {
                left.add_term(b.clone(), c * &ea);
            }
            let eb = self.counit(&alg.key_elem(b.0.clone(), b.1, b.2));
            if !eb.is_zero() {
                right.add_term(a.clone(), c * &eb);
            }
        }
        (left, right)
    }

    /// `m(S⊗id)t` and `m(id⊗S)t`.
    pub fn antipode_sides(&self, t: &TensorElement) -> (AmbiElement, AmbiElement) {
        let alg = &self.algebra;
        let mut left = AmbiElement::zero();
        let mut right = AmbiElement::zero();
        for ((a, b), c) in t {
            let ka = alg.key_elem(a.0.clone(), a.1, a.2);
            let kb = alg.key_elem(b.0.clone(), b.1, b.2);
            left.add_scaled(&alg.mul(&self.antipode_key(a), &kb), c);
            right.add_scaled(&alg.mul(&ka, &self.antipode_key(b)), c);
        }
        (left, right)
    }

    pub fn fmt_tensor3(&self, t: &Tensor3) -> String {
        let alg = &self.algebra;
        let side = |k: &AmbiKey| {
            let s = alg.fmt_key(k);
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        crate::linear::format_sum(
            t.iter()
                .map(|((a, b, c), s)| (s, format!("{} (x) {} (x) {}", side(a), side(b), side(c)))),
        )
    }
}
