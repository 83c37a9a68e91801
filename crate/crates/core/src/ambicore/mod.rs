//! The ambiskew algebra `A(R, X+, X-, σ, h, ξ)` with normal-form arithmetic
//! in A and A⊗A. Normal form is `r X+^m X-^n` with base coefficients on the
//! left.

pub mod oracle;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::basehopf::{BaseAutomorphism, BaseHopf};
use crate::error::{Error, Result};
use crate::linear::{format_sum, BaseElement, BaseTensor, LinComb, Monomial};
use crate::scalar::Scalar;

/// `(r, m, n)` standing for the basis element `r X+^m X-^n`.
pub type AmbiKey = (Monomial, u32, u32);
pub type AmbiElement = LinComb<AmbiKey>;
pub type TensorKey = (AmbiKey, AmbiKey);
pub type TensorElement = LinComb<TensorKey>;

type MonoCacheKey = (u32, u32, Monomial, u32, u32);

#[derive(Default)]
struct Caches {
    sigma_pow: HashMap<(Monomial, i64), BaseElement>,
    c: Vec<BaseElement>,
    xm_xp: HashMap<(u32, u32), Vec<(u32, BaseElement)>>,
    mono: HashMap<MonoCacheKey, AmbiElement>,
}

pub struct AmbiskewAlgebra {
    base: Arc<BaseHopf>,
    sigma: BaseAutomorphism,
    h: BaseElement,
    xi: Scalar,
    xi_inv: Scalar,
    cache: Mutex<Caches>,
}

impl fmt::Debug for AmbiskewAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AmbiskewAlgebra")
            .field("base", &self.base)
            .field("h", &self.base.fmt_element(&self.h))
            .field("xi", &self.xi.to_string())
            .finish()
    }
}

impl AmbiskewAlgebra {
    /// Builds A after checking `ξ != 0`, `h` central, and that `σ` is an
    /// automorphism with the given inverse.
    pub fn new(
        base: Arc<BaseHopf>,
        sigma: BaseAutomorphism,
        h: BaseElement,
        xi: Scalar,
    ) -> Result<Self> {
        if xi.field() != *base.field() {
            return Err(Error::FieldMismatch(format!(
                "xi lies in {}, base is over {}",
                xi.field(),
                base.field()
            )));
        }
        if xi.is_zero() {
            return Err(Error::Zero("xi must be nonzero".into()));
        }
        if !base.is_central(&h) {
            return Err(Error::Precondition(format!(
                "h = {} is not central",
                base.fmt_element(&h)
            )));
        }
        sigma.verify(&base)?;
        Ok(Self::new_unchecked(base, sigma, h, xi))
    }

    pub(crate) fn new_unchecked(
        base: Arc<BaseHopf>,
        sigma: BaseAutomorphism,
        h: BaseElement,
        xi: Scalar,
    ) -> Self {
        let xi_inv = xi.inv().expect("xi nonzero");
        AmbiskewAlgebra {
            base,
            sigma,
            h,
            xi,
            xi_inv,
            cache: Mutex::new(Caches::default()),
        }
    }

    pub fn base(&self) -> &Arc<BaseHopf> {
        &self.base
    }

    pub fn sigma(&self) -> &BaseAutomorphism {
        &self.sigma
    }

    pub fn h(&self) -> &BaseElement {
        &self.h
    }

    pub fn xi(&self) -> &Scalar {
        &self.xi
    }

    fn base_one(&self) -> Monomial {
        Monomial::one(self.base.ngens())
    }

    pub fn zero(&self) -> AmbiElement {
        AmbiElement::zero()
    }

    pub fn one(&self) -> AmbiElement {
        self.key_elem(self.base_one(), 0, 0)
    }

    pub fn key_elem(&self, m: Monomial, a: u32, b: u32) -> AmbiElement {
        AmbiElement::term((m, a, b), self.base.field().one())
    }

    pub fn x_plus(&self) -> AmbiElement {
        self.key_elem(self.base_one(), 1, 0)
    }

    pub fn x_minus(&self) -> AmbiElement {
        self.key_elem(self.base_one(), 0, 1)
    }

    pub fn scalar(&self, c: Scalar) -> AmbiElement {
        AmbiElement::term((self.base_one(), 0, 0), c)
    }

    /// R → A onto the `(0,0)` component.
    pub fn embed_base(&self, r: &BaseElement) -> AmbiElement {
        Self::attach(r, 0, 0)
    }

    fn attach(r: &BaseElement, a: u32, b: u32) -> AmbiElement {
        r.iter()
            .map(|(m, c)| ((m.clone(), a, b), c.clone()))
            .collect()
    }

    /// The base coefficient `r_{m,n}` of `X+^m X-^n`.
    pub fn component(&self, x: &AmbiElement, a: u32, b: u32) -> BaseElement {
        x.iter()
            .filter(|((_, i, j), _)| *i == a && *j == b)
            .map(|((m, _, _), c)| (m.clone(), c.clone()))
            .collect()
    }

    /// The map `(m, n) -> r_{m,n}`.
    pub fn components(
        &self,
        x: &AmbiElement,
    ) -> std::collections::BTreeMap<(u32, u32), BaseElement> {
        let mut out: std::collections::BTreeMap<(u32, u32), BaseElement> = Default::default();
        for ((m, a, b), c) in x {
            out.entry((*a, *b))
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// `σ^k(r)`, iterating σ or its inverse.
    pub fn apply_sigma_power(&self, r: &BaseElement, k: i64) -> BaseElement {
        if k == 0 {
            return r.clone();
        }
        let mut out = BaseElement::zero();
        for (m, c) in r {
            out.add_scaled(&self.sigma_mono(m, k), c);
        }
        out
    }

    fn sigma_mono(&self, m: &Monomial, k: i64) -> BaseElement {
        let key = (m.clone(), k);
        if let Some(v) = self.cache.lock().expect("cache").sigma_pow.get(&key) {
            return v.clone();
        }
        let v = self
            .sigma
            .apply_power(&self.base, &self.base.monomial(m.clone()), k);
        self.cache
            .lock()
            .expect("cache")
            .sigma_pow
            .insert(key, v.clone());
        v
    }

    /// `c_i` in `X- X+^i = ξ^-i X+^i X- - c_i X+^(i-1)`.
    fn c_coeff(&self, i: u32) -> BaseElement {
        loop {
            let (len, last) = {
                let cache = self.cache.lock().expect("cache");
                if let Some(c) = cache.c.get(i as usize) {
                    return c.clone();
                }
                (cache.c.len(), cache.c.last().cloned())
            };
            let next = match last {
                None => BaseElement::zero(),
                Some(prev) => {
                    let s = self.apply_sigma_power(&self.h, len as i64 - 1);
                    let f = self.xi_inv.pow(len as i64).expect("power");
                    prev.add(&s.scale(&f))
                }
            };
            let mut cache = self.cache.lock().expect("cache");
            if cache.c.len() == len {
                cache.c.push(next);
            }
        }
    }

    /// `X-^b X+^c = Σ_k p_k X+^(c-k) X-^(b-k)`, returned as `(k, p_k)`.
    fn xm_xp(&self, b: u32, c: u32) -> Vec<(u32, BaseElement)> {
        if let Some(v) = self.cache.lock().expect("cache").xm_xp.get(&(b, c)) {
            return v.clone();
        }
        let out = if b == 0 || c == 0 {
            vec![(0, self.base.one())]
        } else {
            let prev = self.xm_xp(b - 1, c);
            let mut acc: std::collections::BTreeMap<u32, BaseElement> = Default::default();
            for (k, p) in prev {
                let i = c - k;
                let sp = self.apply_sigma_power(&p, -1);
                let f = self.xi_inv.pow(i as i64).expect("power");
                acc.entry(k).or_default().add_assign(&sp.scale(&f));
                if i > 0 {
                    let t = self.base.mul(&sp, &self.c_coeff(i));
                    acc.entry(k + 1).or_default().sub_assign(&t);
                }
            }
            acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
        };
        self.cache
            .lock()
            .expect("cache")
            .xm_xp
            .insert((b, c), out.clone());
        out
    }

    /// `X+^a X-^b · s X+^c X-^d` in normal form.
    fn right_mono(&self, a: u32, b: u32, s: &Monomial, c: u32, d: u32) -> AmbiElement {
        let key = (a, b, s.clone(), c, d);
        if let Some(v) = self.cache.lock().expect("cache").mono.get(&key) {
            return v.clone();
        }
        let ss = self.sigma_mono(s, a as i64 - b as i64);
        let mut out = AmbiElement::zero();
        for (k, p) in self.xm_xp(b, c) {
            let coeff = self.base.mul(&ss, &self.apply_sigma_power(&p, a as i64));
            out.add_assign(&Self::attach(&coeff, a + c - k, b - k + d));
        }
        self.cache
            .lock()
            .expect("cache")
            .mono
            .insert(key, out.clone());
        out
    }

    /// Product of two basis elements.
    pub fn mono_mul(&self, x: &AmbiKey, y: &AmbiKey) -> AmbiElement {
        let right = self.right_mono(x.1, x.2, &y.0, y.1, y.2);
        if x.0.is_one() {
            return right;
        }
        let mut out = AmbiElement::zero();
        for ((m, a, b), c) in &right {
            for (mm, cc) in &self.base.mul_mono(&x.0, m) {
                out.add_term((mm.clone(), *a, *b), c * cc);
            }
        }
        out
    }

    pub fn mul(&self, x: &AmbiElement, y: &AmbiElement) -> AmbiElement {
        let mut out = AmbiElement::zero();
        for (kx, cx) in x {
            for (ky, cy) in y {
                out.add_scaled(&self.mono_mul(kx, ky), &(cx * cy));
            }
        }
        out
    }

    pub fn pow(&self, x: &AmbiElement, n: u32) -> AmbiElement {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn tensor_mul(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((x1, x2), cx) in x {
            for ((y1, y2), cy) in y {
                let l = self.mono_mul(x1, y1);
                let r = self.mono_mul(x2, y2);
                let c = cx * cy;
                for (u, cu) in &l {
                    let cuc = &c * cu;
                    for (v, cv) in &r {
                        out.add_term((u.clone(), v.clone()), &cuc * cv);
                    }
                }
            }
        }
        out
    }

    pub fn tensor(x: &AmbiElement, y: &AmbiElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (a, c) in x {
            for (b, d) in y {
                out.add_term((a.clone(), b.clone()), c * d);
            }
        }
        out
    }

    /// Embeds `R ⊗ R` into `A ⊗ A`.
    pub fn embed_base_tensor(t: &BaseTensor) -> TensorElement {
        t.iter()
            .map(|((a, b), c)| (((a.clone(), 0, 0), (b.clone(), 0, 0)), c.clone()))
            .collect()
    }

    // Flattening, used when A serves as the base of another extension.

    pub fn flatten_key(k: &AmbiKey) -> Monomial {
        k.0.extended(&[k.1 as i32, k.2 as i32])
    }

    pub fn unflatten_key(&self, m: &Monomial) -> AmbiKey {
        let n = self.base.ngens();
        let (inner, tail) = m.split_at(n);
        (inner, tail[0] as u32, tail[1] as u32)
    }

    pub fn flatten(&self, x: &AmbiElement) -> BaseElement {
        x.map_keys(Self::flatten_key)
    }

    pub fn unflatten(&self, x: &BaseElement) -> AmbiElement {
        x.map_keys(|m| self.unflatten_key(m))
    }

    pub fn flatten_tensor(&self, t: &TensorElement) -> BaseTensor {
        t.map_keys(|(a, b)| (Self::flatten_key(a), Self::flatten_key(b)))
    }

    pub fn unflatten_tensor(&self, t: &BaseTensor) -> TensorElement {
        t.map_keys(|(a, b)| (self.unflatten_key(a), self.unflatten_key(b)))
    }

    pub(crate) fn mono_mul_flat(&self, a: &Monomial, b: &Monomial) -> AmbiElement {
        self.mono_mul(&self.unflatten_key(a), &self.unflatten_key(b))
    }

    // Printing

    pub fn fmt_key(&self, k: &AmbiKey) -> String {
        let mut parts = Vec::new();
        let b = self.base.fmt_monomial(&k.0);
        if !b.is_empty() {
            parts.push(b);
        }
        for (e, name) in [(k.1, "X+"), (k.2, "X-")] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }

    pub fn fmt_element(&self, x: &AmbiElement) -> String {
        format_sum(x.iter().map(|(k, c)| (c, self.fmt_key(k))))
    }

    pub fn fmt_tensor(&self, t: &TensorElement) -> String {
        let side = |k: &AmbiKey| {
            let s = self.fmt_key(k);
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        format_sum(
            t.iter()
                .map(|((a, b), c)| (c, format!("{} (x) {}", side(a), side(b)))),
        )
    }
}
