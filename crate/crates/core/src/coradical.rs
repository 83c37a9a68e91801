//! Coradical filtration of an ambiskew Hopf algebra (characteristic 0):
//! `A_t` is spanned by `R_q X+^m X-^n` with `q + hat(m) + hat(n) <= t`,
//! where hats are taken relative to the multiplicative order of `ξ`.
//! Closed forms for `Δ(X±^m)` and `Δ(X+^m X-^n)` are provided as an
//! independent check on the engine.

use crate::ambicore::{AmbiElement, AmbiKey, TensorElement};
use crate::error::{Error, Result};
use crate::hopfstruct::HopfAmbiskew;
use crate::linear::Monomial;
use crate::scalar::{hat, prec, q_binomial, Order, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Order `d` of the hat-form `ξ`, together with `ξ` itself.
#[derive(Clone, Debug)]
pub struct CoradicalContext {
    pub d: Order,
    pub xi: Scalar,
}

impl CoradicalContext {
    pub fn new(hopf: &HopfAmbiskew) -> Result<Self> {
        let xi = hopf.hat_xi();
        let d = xi.mul_order()?;
        Ok(CoradicalContext { d, xi })
    }

    pub fn hat(&self, m: u64) -> u64 {
        hat(m, self.d).hat
    }

    fn xi_signed(&self, sign: Sign) -> Scalar {
        match sign {
            Sign::Plus => self.xi.clone(),
            Sign::Minus => self.xi.inv().expect("ξ nonzero"),
        }
    }

    /// Every `p ≺ m` with the coefficient `α_p` of `y^(m-p) X^p ⊗ X^(m-p)`
    /// in `Δ(X±^m)`. Errors if some `α_p` vanishes.
    pub fn sparse_support(&self, m: u64, sign: Sign) -> Result<Vec<(u64, Scalar)>> {
        let x = self.xi_signed(sign);
        let field = x.field();
        let mut out = Vec::new();
        match self.d {
            Order::Finite(d) if d > 1 => {
                let hm = hat(m, self.d);
                for i in 0..=hm.q {
                    let outer = field.from_bigint(num_integer::binomial(
                        num_bigint::BigInt::from(hm.q),
                        num_bigint::BigInt::from(i),
                    ));
                    for j in 0..=hm.r {
                        let inner = q_binomial(hm.r as u32, j as u32, &x)?;
                        out.push((d * i + j, &outer * &inner));
                    }
                }
                out.sort_by_key(|(p, _)| *p);
            }
            _ => {
                for p in 0..=m {
                    out.push((p, q_binomial(m as u32, p as u32, &x)?));
                }
            }
        }
        for (p, a) in &out {
            debug_assert!(prec(*p, m, self.d));
            if a.is_zero() {
                return Err(Error::Invariant(format!("α_{p} vanishes for m = {m}")));
            }
        }
        Ok(out)
    }
}

/// Coradical degree of a nonzero element: the maximum over its
/// `(m, n)`-components `r` of `deg_R(r) + hat(m) + hat(n)`.
pub fn corad_degree(hopf: &HopfAmbiskew, a: &AmbiElement) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::Zero("coradical degree of zero".into()));
    }
    let ctx = CoradicalContext::new(hopf)?;
    Ok(corad_breakdown(hopf, &ctx, a)?
        .iter()
        .map(|t| t.total)
        .max()
        .unwrap_or(0))
}

/// One `(m, n)`-component in a degree computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoradTerm {
    pub m: u32,
    pub n: u32,
    pub base_degree: u64,
    pub total: u64,
}

pub fn corad_breakdown(
    hopf: &HopfAmbiskew,
    ctx: &CoradicalContext,
    a: &AmbiElement,
) -> Result<Vec<CoradTerm>> {
    let alg = hopf.algebra();
    let base = alg.base();
    let mut out = Vec::new();
    for ((m, n), r) in alg.components(a) {
        let base_degree = base.coradical_degree(&r)?;
        out.push(CoradTerm {
            m,
            n,
            base_degree,
            total: base_degree + ctx.hat(m as u64) + ctx.hat(n as u64),
        });
    }
    Ok(out)
}

fn key_degree(hopf: &HopfAmbiskew, ctx: &CoradicalContext, k: &AmbiKey) -> Result<u64> {
    let base = hopf.base();
    let r = base.monomial(k.0.clone());
    Ok(base.coradical_degree(&r)? + ctx.hat(k.1 as u64) + ctx.hat(k.2 as u64))
}

/// Whether `t ∈ A_s ⊗ A + A ⊗ A_0`, decided on the normal-form support
/// (each basis tensor lies in one of the summands or in neither).
pub fn tensor_in_wedge(
    hopf: &HopfAmbiskew,
    ctx: &CoradicalContext,
    t: &TensorElement,
    s: u64,
) -> Result<bool> {
    for (a, b) in t.keys() {
        if key_degree(hopf, ctx, a)? > s && key_degree(hopf, ctx, b)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_hat_form(hopf: &HopfAmbiskew) -> Result<()> {
    if hopf.is_hat_form() {
        Ok(())
    } else {
        Err(Error::Unsupported(
            "closed-form coproducts need Δ(X±) = X±⊗1 + y±⊗X±".into(),
        ))
    }
}

/// `Δ(X±^m) = Σ_j binom(m, j)_{ξ^±1} y±^(m-j) X±^j ⊗ X±^(m-j)`.
pub fn delta_power_closed(hopf: &HopfAmbiskew, sign: Sign, m: u32) -> Result<TensorElement> {
    require_hat_form(hopf)?;
    let base = hopf.base();
    let ctx = CoradicalContext::new(hopf)?;
    let x = ctx.xi_signed(sign);
    let y = match sign {
        Sign::Plus => hopf.y_plus(),
        Sign::Minus => hopf.y_minus(),
    };
    let one = Monomial::one(base.ngens());
    let key = |r: Monomial, e: u32| -> AmbiKey {
        match sign {
            Sign::Plus => (r, e, 0),
            Sign::Minus => (r, 0, e),
        }
    };
    let mut out = TensorElement::zero();
    for j in 0..=m {
        let c = q_binomial(m, j, &x)?;
        if c.is_zero() {
            continue;
        }
        let yp = base.pow(&y, (m - j) as i64)?;
        for (r, s) in &yp {
            out.add_term((key(r.clone(), j), key(one.clone(), m - j)), &c * s);
        }
    }
    Ok(out)
}

/// `Δ(X+^m X-^n) = Σ_{j,k} binom(m,j)_ξ binom(n,k)_{ξ^-1} ξ^(j(n-k))
/// y+^(m-j) y-^(n-k) X+^j X-^k ⊗ X+^(m-j) X-^(n-k)`.
pub fn delta_mixed_closed(hopf: &HopfAmbiskew, m: u32, n: u32) -> Result<TensorElement> {
    require_hat_form(hopf)?;
    let base = hopf.base();
    let ctx = CoradicalContext::new(hopf)?;
    let xi = ctx.xi.clone();
    let xi_inv = xi.inv()?;
    let (yp, ym) = (hopf.y_plus(), hopf.y_minus());
    let one = Monomial::one(base.ngens());
    let mut out = TensorElement::zero();
    for j in 0..=m {
        let bj = q_binomial(m, j, &xi)?;
        if bj.is_zero() {
            continue;
        }
        for k in 0..=n {
            let bk = q_binomial(n, k, &xi_inv)?;
            if bk.is_zero() {
                continue;
            }
            let c = &(&bj * &bk) * &xi.pow((j * (n - k)) as i64)?;
            let g = base.mul(
                &base.pow(&yp, (m - j) as i64)?,
                &base.pow(&ym, (n - k) as i64)?,
            );
            for (r, s) in &g {
                out.add_term(((r.clone(), j, k), (one.clone(), m - j, n - k)), &c * s);
            }
        }
    }
    Ok(out)
}
