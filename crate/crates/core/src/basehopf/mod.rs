//! Base Hopf algebras R: polynomial, Laurent, abelian group algebras, and
//! ambiskew Hopf algebras reused as bases (Uq(sl2) is one of these).

mod automorphism;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::binomial;

pub use automorphism::{BaseAutomorphism, GenImages};

use crate::error::{Error, Result};
use crate::hopfstruct::{self, ExtensionData, HopfAmbiskew};
use crate::linear::{format_sum, BaseElement, BaseTensor, LinComb, Monomial};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// Non-invertible, exponents >= 0.
    Free,
    /// Invertible (Laurent), exponents in Z.
    Invertible,
    /// Grouplike of finite order, exponents reduced mod the order.
    Torsion(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub kind: GenKind,
}

/// A named element that is not itself a generator (e.g. `F` in Uq(sl2)).
#[derive(Clone, Debug)]
pub struct Alias {
    pub name: String,
    pub value: BaseElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dim {
    Finite(u32),
    Infinite,
    Unknown,
}

impl Dim {
    pub fn plus(self, k: u32) -> Dim {
        match self {
            Dim::Finite(d) => Dim::Finite(d + k),
            other => other,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(d) => write!(f, "{d}"),
            Dim::Infinite => f.write_str("infinite"),
            Dim::Unknown => f.write_str("unknown"),
        }
    }
}

/// Declared ring-theoretic metadata of a base family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseDescriptor {
    pub family: String,
    pub gk_dim: Dim,
    pub gl_dim: Dim,
    pub inj_dim: Dim,
    pub noetherian: bool,
    pub domain: bool,
    pub prime: bool,
    pub semiprime_goldie: bool,
    pub commutative: bool,
    pub cocommutative: bool,
    pub pointed: bool,
    pub affine_commutative_domain: bool,
    pub as_gorenstein: bool,
    pub as_regular: bool,
    pub auslander_gorenstein: bool,
    pub auslander_regular: bool,
}

impl BaseDescriptor {
    fn classical(family: &str, dim: u32, domain: bool) -> Self {
        BaseDescriptor {
            family: family.to_string(),
            gk_dim: Dim::Finite(dim),
            gl_dim: Dim::Finite(dim),
            inj_dim: Dim::Finite(dim),
            noetherian: true,
            domain,
            prime: domain,
            semiprime_goldie: true,
            commutative: true,
            cocommutative: true,
            pointed: true,
            affine_commutative_domain: domain,
            as_gorenstein: true,
            as_regular: true,
            auslander_gorenstein: true,
            auslander_regular: true,
        }
    }
}

pub enum Family {
    Polynomial,
    Laurent,
    Group { free: usize, torsion: Vec<u32> },
    Ambiskew(Arc<HopfAmbiskew>),
}

/// Scalar value of a character on each generator of R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<Scalar>,
}

impl Character {
    pub fn new(values: Vec<Scalar>) -> Self {
        Character { values }
    }
}

pub(crate) type Word = Vec<(usize, i32)>;

/// A defining relation `lhs = rhs` of R, written with words in the generators.
#[derive(Clone, Debug)]
pub(crate) struct Relation {
    pub name: String,
    pub lhs: LinComb<Word>,
    pub rhs: LinComb<Word>,
}

pub struct BaseHopf {
    field: Field,
    family: Family,
    gens: Vec<Generator>,
    aliases: Vec<Alias>,
    descriptor: BaseDescriptor,
    delta_cache: Mutex<HashMap<Monomial, BaseTensor>>,
}

impl fmt::Debug for BaseHopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaseHopf")
            .field("family", &self.descriptor.family)
            .field("field", &self.field)
            .field("gens", &self.gens)
            .finish()
    }
}

impl BaseHopf {
    fn build(
        field: Field,
        family: Family,
        gens: Vec<Generator>,
        aliases: Vec<Alias>,
        descriptor: BaseDescriptor,
    ) -> Arc<Self> {
        Arc::new(BaseHopf {
            field,
            family,
            gens,
            aliases,
            descriptor,
            delta_cache: Mutex::new(HashMap::new()),
        })
    }

    /// `k[t]` with `t` primitive.
    pub fn polynomial(field: &Field, var: &str) -> Arc<Self> {
        Self::build(
            field.clone(),
            Family::Polynomial,
            vec![Generator {
                name: var.to_string(),
                kind: GenKind::Free,
            }],
            Vec::new(),
            BaseDescriptor::classical("polynomial", 1, true),
        )
    }

    /// `k[t, t^-1]` with `t` grouplike.
    pub fn laurent(field: &Field, var: &str) -> Arc<Self> {
        Self::build(
            field.clone(),
            Family::Laurent,
            vec![Generator {
                name: var.to_string(),
                kind: GenKind::Invertible,
            }],
            Vec::new(),
            BaseDescriptor::classical("laurent", 1, true),
        )
    }

    /// Group algebra of `Z^free x Z/m_1 x ... x Z/m_s`, generators `g1, g2, ...`.
    pub fn group(field: &Field, free: usize, torsion: &[u32]) -> Result<Arc<Self>> {
        if free + torsion.len() == 0 {
            return Err(Error::InvalidArgument("group of rank 0".into()));
        }
        if let Some(m) = torsion.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidArgument(format!(
                "torsion order {m} must be >= 2"
            )));
        }
        let mut gens = Vec::new();
        for i in 0..free {
            gens.push(Generator {
                name: format!("g{}", i + 1),
                kind: GenKind::Invertible,
            });
        }
        for (j, &m) in torsion.iter().enumerate() {
            gens.push(Generator {
                name: format!("g{}", free + j + 1),
                kind: GenKind::Torsion(m),
            });
        }
        let desc = BaseDescriptor::classical("group", free as u32, torsion.is_empty());
        Ok(Self::build(
            field.clone(),
            Family::Group {
                free,
                torsion: torsion.to_vec(),
            },
            gens,
            Vec::new(),
            desc,
        ))
    }

    /// Uq(sl2) realized as the ambiskew Hopf algebra over `k[K, K^-1]` with
    /// `X+ = E` and `X- = F K`, so that `F = q^-2 K^-1 X-`.
    pub fn uqsl2(field: &Field, q: &Scalar) -> Result<Arc<Self>> {
        let q = field.embed(q)?;
        let one = field.one();
        if q.is_zero() || q == one || q == -&one {
            return Err(Error::InvalidArgument(
                "uqsl2 requires q != 0, 1, -1".into(),
            ));
        }
        let laurent = Self::laurent(field, "K");
        let k = laurent.gen_elem(0);
        let qi = q.inv()?;
        let q2i = qi.pow(2)?;
        let denom = (&q - &qi).inv()?;
        let k2 = laurent.mul(&k, &k);
        let h = k2.sub(&laurent.one()).scale(&denom);
        let data = ExtensionData::new(
            &laurent,
            Character::new(vec![q2i.clone()]),
            k.clone(),
            k.clone(),
            h,
            None,
        )?;
        let outcome = hopfstruct::check_hopf_conditions(&laurent, &data)?;
        let hopf = outcome.algebra.ok_or_else(|| {
            Error::Invariant(format!(
                "Uq(sl2) data rejected: {}",
                outcome.report.render_text()
            ))
        })?;
        let names = vec!["K".to_string(), "E".to_string(), "(F*K)".to_string()];
        let f_alias = BaseElement::term(Monomial::from_exps(&[-1, 0, 1]), q2i);
        let aliases = vec![Alias {
            name: "F".into(),
            value: f_alias,
        }];
        let mut desc = crate::properties::extension_descriptor(&hopf);
        desc.family = "uqsl2".into();
        Ok(Self::from_ambiskew(hopf, names, aliases, desc))
    }

    /// Wraps a verified ambiskew Hopf algebra as a base. `names` covers the
    /// inner generators followed by the two ambiskew variables.
    pub fn from_ambiskew(
        hopf: Arc<HopfAmbiskew>,
        names: Vec<String>,
        aliases: Vec<Alias>,
        descriptor: BaseDescriptor,
    ) -> Arc<Self> {
        let inner = hopf.algebra().base().clone();
        assert_eq!(names.len(), inner.ngens() + 2, "one name per generator");
        let mut gens: Vec<Generator> = inner
            .gens
            .iter()
            .zip(&names)
            .map(|(g, n)| Generator {
                name: n.clone(),
                kind: g.kind,
            })
            .collect();
        for n in &names[inner.ngens()..] {
            gens.push(Generator {
                name: n.clone(),
                kind: GenKind::Free,
            });
        }
        let field = inner.field.clone();
        Self::build(field, Family::Ambiskew(hopf), gens, aliases, descriptor)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn descriptor(&self) -> &BaseDescriptor {
        &self.descriptor
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn aliases(&self) -> &[Alias] {
        &self.aliases
    }

    /// The inner Hopf algebra when this base is itself ambiskew.
    pub fn inner_hopf(&self) -> Option<&Arc<HopfAmbiskew>> {
        match &self.family {
            Family::Ambiskew(h) => Some(h),
            _ => None,
        }
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// Resolves a generator or alias name to an element.
    pub fn lookup(&self, name: &str) -> Option<BaseElement> {
        if let Some(i) = self.gen_index(name) {
            return Some(self.gen_elem(i));
        }
        self.aliases
            .iter()
            .find(|a| a.name == name)
            .map(|a| a.value.clone())
    }

    pub fn gen_monomial(&self, i: usize) -> Monomial {
        let mut m = Monomial::one(self.ngens());
        m.exps_mut()[i] = 1;
        self.normalize(&mut m);
        m
    }

    /// The monomial of `g_i^-1`, when `g_i` is invertible.
    pub fn gen_inv_monomial(&self, i: usize) -> Option<Monomial> {
        match self.gens[i].kind {
            GenKind::Free => None,
            GenKind::Invertible => {
                let mut m = Monomial::one(self.ngens());
                m.exps_mut()[i] = -1;
                Some(m)
            }
            // g^-1 = g^(m-1) is already a nonnegative word
            GenKind::Torsion(_) => None,
        }
    }

    pub fn gen_elem(&self, i: usize) -> BaseElement {
        self.monomial(self.gen_monomial(i))
    }

    pub fn gen_inv_elem(&self, i: usize) -> Option<BaseElement> {
        self.gen_inv_monomial(i).map(|m| self.monomial(m))
    }

    pub fn one(&self) -> BaseElement {
        self.scalar(self.field.one())
    }

    pub fn zero(&self) -> BaseElement {
        BaseElement::zero()
    }

    pub fn scalar(&self, c: Scalar) -> BaseElement {
        BaseElement::term(Monomial::one(self.ngens()), c)
    }

    pub fn monomial(&self, m: Monomial) -> BaseElement {
        BaseElement::term(m, self.field.one())
    }

    /// Indices of the family's declared grouplike generators.
    pub fn grouplike_generators(&self) -> Vec<usize> {
        match &self.family {
            Family::Polynomial => Vec::new(),
            Family::Laurent | Family::Group { .. } => (0..self.ngens()).collect(),
            Family::Ambiskew(h) => h.algebra().base().grouplike_generators(),
        }
    }

    fn normalize(&self, m: &mut Monomial) {
        for (g, e) in self.gens.iter().zip(m.exps_mut()) {
            if let GenKind::Torsion(k) = g.kind {
                *e = e.rem_euclid(k as i32);
            }
        }
    }

    /// Checks that a monomial respects the exponent constraints of the family.
    pub fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.len() != self.ngens() {
            return Err(Error::InvalidArgument("monomial arity mismatch".into()));
        }
        for (g, &e) in self.gens.iter().zip(m.exps()) {
            match g.kind {
                GenKind::Free if e < 0 => return Err(Error::NotInvertible(g.name.clone())),
                GenKind::Torsion(k) if e < 0 || e >= k as i32 => {
                    return Err(Error::InvalidArgument(format!(
                        "exponent of {} not reduced mod {k}",
                        g.name
                    )))
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn mul_mono(&self, a: &Monomial, b: &Monomial) -> BaseElement {
        match &self.family {
            Family::Ambiskew(h) => {
                let alg = h.algebra();
                alg.flatten(&alg.mono_mul_flat(a, b))
            }
            _ => {
                let mut m = a.clone();
                for (x, y) in m.exps_mut().iter_mut().zip(b.exps()) {
                    *x += y;
                }
                self.normalize(&mut m);
                self.monomial(m)
            }
        }
    }

    pub fn mul(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for (x, c) in a {
            for (y, d) in b {
                let cd = c * d;
                out.add_scaled(&self.mul_mono(x, y), &cd);
            }
        }
        out
    }

    /// Inverse of a scalar multiple of a monomial in invertible generators.
    pub fn inverse(&self, a: &BaseElement) -> Result<BaseElement> {
        let mut it = a.iter();
        let (Some((m, c)), None) = (it.next(), it.next()) else {
            return Err(Error::NotInvertible(self.fmt_element(a)));
        };
        let mut acc = self.scalar(c.inv()?);
        for (i, &e) in m.exps().iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            let mut mm = Monomial::one(self.ngens());
            mm.exps_mut()[i] = match self.gens[i].kind {
                GenKind::Free => return Err(Error::NotInvertible(self.fmt_element(a))),
                GenKind::Invertible => -e,
                GenKind::Torsion(k) => (k as i32 - e).rem_euclid(k as i32),
            };
            acc = self.mul(&acc, &self.monomial(mm));
        }
        Ok(acc)
    }

    /// Integer power; negative exponents need an invertible element.
    pub fn pow(&self, a: &BaseElement, e: i64) -> Result<BaseElement> {
        let b = if e < 0 { self.inverse(a)? } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &b);
        }
        Ok(acc)
    }

    // Hopf structure

    pub fn delta_mono(&self, m: &Monomial) -> BaseTensor {
        if let Some(t) = self.delta_cache.lock().expect("cache").get(m) {
            return t.clone();
        }
        let out = match &self.family {
            Family::Polynomial => {
                let n = m.exps()[0] as u64;
                let mut t = BaseTensor::zero();
                for k in 0..=n {
                    let c = self.field.from_bigint(BigInt::from(binomial(n, k)));
                    t.add_term(
                        (
                            Monomial::from_exps(&[k as i32]),
                            Monomial::from_exps(&[(n - k) as i32]),
                        ),
                        c,
                    );
                }
                t
            }
            Family::Laurent | Family::Group { .. } => {
                BaseTensor::term((m.clone(), m.clone()), self.field.one())
            }
            Family::Ambiskew(h) => {
                let alg = h.algebra();
                let key = alg.unflatten_key(m);
                alg.flatten_tensor(&h.delta_key(&key))
            }
        };
        self.delta_cache
            .lock()
            .expect("cache")
            .insert(m.clone(), out.clone());
        out
    }

    pub fn delta(&self, a: &BaseElement) -> BaseTensor {
        let mut out = BaseTensor::zero();
        for (m, c) in a {
            out.add_scaled(&self.delta_mono(m), c);
        }
        out
    }

    pub fn counit(&self, a: &BaseElement) -> Scalar {
        self.char_eval_unchecked(&self.counit_character(), a)
    }

    pub fn counit_character(&self) -> Character {
        let f = &self.field;
        let values = match &self.family {
            Family::Polynomial => vec![f.zero()],
            Family::Laurent | Family::Group { .. } => vec![f.one(); self.ngens()],
            Family::Ambiskew(h) => {
                let mut v = h.algebra().base().counit_character().values;
                v.push(f.zero());
                v.push(f.zero());
                v
            }
        };
        Character::new(values)
    }

    pub fn antipode(&self, a: &BaseElement) -> BaseElement {
        match &self.family {
            Family::Polynomial => {
                let mut out = BaseElement::zero();
                for (m, c) in a {
                    let odd = m.exps()[0] % 2 != 0;
                    out.add_term(m.clone(), if odd { -c } else { c.clone() });
                }
                out
            }
            Family::Laurent | Family::Group { .. } => {
                let mut out = BaseElement::zero();
                for (m, c) in a {
                    let mut mi = m.clone();
                    for e in mi.exps_mut() {
                        *e = -*e;
                    }
                    self.normalize(&mut mi);
                    out.add_term(mi, c.clone());
                }
                out
            }
            Family::Ambiskew(h) => {
                let alg = h.algebra();
                alg.flatten(&h.antipode(&alg.unflatten(a)))
            }
        }
    }

    pub fn tensor_mul(&self, a: &BaseTensor, b: &BaseTensor) -> BaseTensor {
        let mut out = BaseTensor::zero();
        for ((x1, x2), c) in a {
            for ((y1, y2), d) in b {
                let l = self.mul_mono(x1, y1);
                let r = self.mul_mono(x2, y2);
                let cd = c * d;
                for (u, e) in &l {
                    let ce = &cd * e;
                    for (v, f) in &r {
                        out.add_term((u.clone(), v.clone()), &ce * f);
                    }
                }
            }
        }
        out
    }

    pub fn is_grouplike(&self, a: &BaseElement) -> bool {
        !a.is_zero() && self.counit(a).is_one() && self.delta(a) == crate::linear::tensor(a, a)
    }

    pub fn is_central(&self, a: &BaseElement) -> bool {
        (0..self.ngens()).all(|i| {
            let g = self.gen_elem(i);
            self.mul(a, &g) == self.mul(&g, a)
        })
    }

    /// `Δ(a) = a⊗g + w⊗a`.
    pub fn is_skew_primitive(
        &self,
        a: &BaseElement,
        g: &BaseElement,
        w: &BaseElement,
    ) -> Result<bool> {
        for x in [g, w] {
            if !self.is_grouplike(x) {
                return Err(Error::NotGrouplike(self.fmt_element(x)));
            }
        }
        let expect = crate::linear::tensor(a, g).add(&crate::linear::tensor(w, a));
        Ok(self.delta(a) == expect)
    }

    // Characters, windings, adjoint actions

    pub fn validate_character(&self, chi: &Character) -> Result<()> {
        if chi.values.len() != self.ngens() {
            return Err(Error::InvalidCharacter(format!(
                "expected {} values, got {}",
                self.ngens(),
                chi.values.len()
            )));
        }
        for (g, v) in self.gens.iter().zip(&chi.values) {
            if v.field() != self.field {
                return Err(Error::FieldMismatch(format!(
                    "character value on {} lies in {}, base is over {}",
                    g.name,
                    v.field(),
                    self.field
                )));
            }
            if g.kind != GenKind::Free && v.is_zero() {
                return Err(Error::InvalidCharacter(format!(
                    "grouplike generator {} sent to 0",
                    g.name
                )));
            }
        }
        self.check_relations(&self.character_images(chi))
            .map_err(|r| Error::InvalidCharacter(format!("violates relation {r}")))
    }

    fn character_images(&self, chi: &Character) -> GenImages {
        let pos = chi.values.iter().map(|v| self.scalar(v.clone())).collect();
        let neg = self
            .gens
            .iter()
            .zip(&chi.values)
            .map(|(g, v)| match g.kind {
                GenKind::Invertible => {
                    Some(self.scalar(v.inv().unwrap_or_else(|_| self.field.zero())))
                }
                _ => None,
            })
            .collect();
        GenImages { pos, neg }
    }

    pub fn char_eval(&self, chi: &Character, a: &BaseElement) -> Result<Scalar> {
        self.validate_character(chi)?;
        Ok(self.char_eval_unchecked(chi, a))
    }

    pub(crate) fn char_eval_mono(&self, chi: &Character, m: &Monomial) -> Scalar {
        let mut acc = self.field.one();
        for (v, &e) in chi.values.iter().zip(m.exps()) {
            if e != 0 {
                acc = &acc * &v.pow(e as i64).unwrap_or_else(|_| self.field.zero());
            }
        }
        acc
    }

    pub(crate) fn char_eval_unchecked(&self, chi: &Character, a: &BaseElement) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in a {
            acc = &acc + &(c * &self.char_eval_mono(chi, m));
        }
        acc
    }

    /// The character `χ∘S`, the convolution inverse of `χ`.
    pub fn character_inverse(&self, chi: &Character) -> Character {
        Character::new(
            (0..self.ngens())
                .map(|i| self.char_eval_unchecked(chi, &self.antipode(&self.gen_elem(i))))
                .collect(),
        )
    }

    /// `τ^l_χ(a) = Σ χ(a_1) a_2`.
    pub fn winding_left(&self, chi: &Character, a: &BaseElement) -> Result<BaseElement> {
        self.validate_character(chi)?;
        Ok(self.winding_left_unchecked(chi, a))
    }

    /// `τ^r_χ(a) = Σ a_1 χ(a_2)`.
    pub fn winding_right(&self, chi: &Character, a: &BaseElement) -> Result<BaseElement> {
        self.validate_character(chi)?;
        Ok(self.winding_right_unchecked(chi, a))
    }

    pub(crate) fn winding_left_unchecked(&self, chi: &Character, a: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for ((x, y), c) in &self.delta(a) {
            out.add_term(y.clone(), c * &self.char_eval_mono(chi, x));
        }
        out
    }

    pub(crate) fn winding_right_unchecked(&self, chi: &Character, a: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for ((x, y), c) in &self.delta(a) {
            out.add_term(x.clone(), c * &self.char_eval_mono(chi, y));
        }
        out
    }

    /// The left winding automorphism as a [`BaseAutomorphism`], with inverse
    /// the left winding by `χ∘S`.
    pub fn winding_left_automorphism(&self, chi: &Character) -> Result<BaseAutomorphism> {
        self.validate_character(chi)?;
        Ok(self.winding_left_automorphism_unchecked(chi))
    }

    pub(crate) fn winding_left_automorphism_unchecked(&self, chi: &Character) -> BaseAutomorphism {
        let inv = self.character_inverse(chi);
        BaseAutomorphism::from_maps(
            self,
            |a| self.winding_left_unchecked(chi, a),
            |a| self.winding_left_unchecked(&inv, a),
        )
    }

    /// `ad_l(y)(a) = Σ y_1 a S(y_2)`.
    pub fn adjoint_left(&self, y: &BaseElement, a: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for ((y1, y2), c) in &self.delta(y) {
            let s = self.antipode(&self.monomial(y2.clone()));
            let t = self.mul(&self.mul(&self.monomial(y1.clone()), a), &s);
            out.add_scaled(&t, c);
        }
        out
    }

    /// `ad_r(y)(a) = Σ S(y_1) a y_2`.
    pub fn adjoint_right(&self, y: &BaseElement, a: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for ((y1, y2), c) in &self.delta(y) {
            let s = self.antipode(&self.monomial(y1.clone()));
            let t = self.mul(&self.mul(&s, a), &self.monomial(y2.clone()));
            out.add_scaled(&t, c);
        }
        out
    }

    /// Least `t` with `a` in the `t`-th term of the coradical filtration.
    pub fn coradical_degree(&self, a: &BaseElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::Zero("coradical degree of zero".into()));
        }
        match &self.family {
            Family::Polynomial => Ok(a.keys().map(|m| m.degree()).max().unwrap_or(0)),
            Family::Laurent | Family::Group { .. } => Ok(0),
            Family::Ambiskew(h) => crate::coradical::corad_degree(h, &h.algebra().unflatten(a)),
        }
    }

    // Relations and algebra maps

    fn mono_word(m: &Monomial) -> Word {
        m.exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e))
            .collect()
    }

    fn element_words(a: &BaseElement, shift: &[(usize, i32)]) -> LinComb<Word> {
        a.iter()
            .map(|(m, c)| {
                let mut w = Self::mono_word(m);
                w.extend_from_slice(shift);
                (w, c.clone())
            })
            .collect()
    }

    pub(crate) fn relations(&self) -> Vec<Relation> {
        let one = self.field.one();
        let word = |w: Word| LinComb::term(w, one.clone());
        let mut rels = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            match g.kind {
                GenKind::Invertible => {
                    rels.push(Relation {
                        name: format!("{0}*{0}^-1 = 1", g.name),
                        lhs: word(vec![(i, 1), (i, -1)]),
                        rhs: word(Vec::new()),
                    });
                    rels.push(Relation {
                        name: format!("{0}^-1*{0} = 1", g.name),
                        lhs: word(vec![(i, -1), (i, 1)]),
                        rhs: word(Vec::new()),
                    });
                }
                GenKind::Torsion(k) => rels.push(Relation {
                    name: format!("{}^{k} = 1", g.name),
                    lhs: word(vec![(i, k as i32)]),
                    rhs: word(Vec::new()),
                }),
                GenKind::Free => {}
            }
        }
        match &self.family {
            Family::Polynomial | Family::Laurent => {}
            Family::Group { .. } => {
                for i in 0..self.ngens() {
                    for j in i + 1..self.ngens() {
                        rels.push(Relation {
                            name: format!(
                                "{}*{} = {}*{}",
                                self.gens[i].name,
                                self.gens[j].name,
                                self.gens[j].name,
                                self.gens[i].name
                            ),
                            lhs: word(vec![(i, 1), (j, 1)]),
                            rhs: word(vec![(j, 1), (i, 1)]),
                        });
                    }
                }
            }
            Family::Ambiskew(h) => {
                let alg = h.algebra();
                let inner = alg.base();
                let k = inner.ngens();
                let (xp, xm) = (k, k + 1);
                let xp_name = &self.gens[xp].name;
                let xm_name = &self.gens[xm].name;
                rels.extend(inner.relations());
                for i in 0..k {
                    let g = inner.gen_elem(i);
                    let gname = &self.gens[i].name;
                    let sp = alg.sigma().apply(inner, &g);
                    let sm = alg.sigma().apply_power(inner, &g, -1);
                    rels.push(Relation {
                        name: format!("{xp_name}*{gname} = sigma({gname})*{xp_name}"),
                        lhs: word(vec![(xp, 1), (i, 1)]),
                        rhs: Self::element_words(&sp, &[(xp, 1)]),
                    });
                    rels.push(Relation {
                        name: format!("{xm_name}*{gname} = sigma^-1({gname})*{xm_name}"),
                        lhs: word(vec![(xm, 1), (i, 1)]),
                        rhs: Self::element_words(&sm, &[(xm, 1)]),
                    });
                }
                let mut rhs = Self::element_words(alg.h(), &[]);
                rhs.add_term(vec![(xm, 1), (xp, 1)], alg.xi().clone());
                rels.push(Relation {
                    name: format!("{xp_name}*{xm_name} = h + xi*{xm_name}*{xp_name}"),
                    lhs: word(vec![(xp, 1), (xm, 1)]),
                    rhs,
                });
            }
        }
        rels
    }

    fn eval_word(&self, images: &GenImages, w: &Word) -> BaseElement {
        let mut acc = self.one();
        for &(i, e) in w {
            let img = if e >= 0 {
                &images.pos[i]
            } else {
                match &images.neg[i] {
                    Some(x) => x,
                    None => return self.zero(),
                }
            };
            for _ in 0..e.unsigned_abs() {
                acc = self.mul(&acc, img);
            }
        }
        acc
    }

    fn eval_words(&self, images: &GenImages, a: &LinComb<Word>) -> BaseElement {
        let mut out = BaseElement::zero();
        for (w, c) in a {
            out.add_scaled(&self.eval_word(images, w), c);
        }
        out
    }

    /// Returns the name of the first defining relation the images violate.
    pub(crate) fn check_relations(&self, images: &GenImages) -> std::result::Result<(), String> {
        for r in self.relations() {
            if self.eval_words(images, &r.lhs) != self.eval_words(images, &r.rhs) {
                return Err(r.name);
            }
        }
        Ok(())
    }

    /// Applies the algebra map determined by generator images.
    pub fn apply_hom(&self, images: &GenImages, a: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for (m, c) in a {
            out.add_scaled(&self.eval_word(images, &Self::mono_word(m)), c);
        }
        out
    }

    // Printing

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .gens
            .iter()
            .zip(m.exps())
            .filter(|(_, &e)| e != 0)
            .map(|(g, &e)| {
                if e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{e}", g.name)
                }
            })
            .collect();
        parts.join("*")
    }

    pub fn fmt_element(&self, a: &BaseElement) -> String {
        format_sum(a.iter().map(|(m, c)| (c, self.fmt_monomial(m))))
    }

    pub fn fmt_tensor(&self, t: &BaseTensor) -> String {
        format_sum(t.iter().map(|((a, b), c)| {
            let l = self.fmt_monomial(a);
            let r = self.fmt_monomial(b);
            let l = if l.is_empty() { "1".to_string() } else { l };
            let r = if r.is_empty() { "1".to_string() } else { r };
            (c, format!("{l} (x) {r}"))
        }))
    }

    /// Random-element helper used by tests: the given algebra restricted
    /// to monomials of degree at most `max_deg`.
    pub fn monomials_up_to(&self, max_deg: u32) -> Vec<Monomial> {
        let n = self.ngens();
        let mut out = Vec::new();
        let ranges: Vec<(i32, i32)> = self
            .gens
            .iter()
            .map(|g| match g.kind {
                GenKind::Free => (0, max_deg as i32),
                GenKind::Invertible => (-(max_deg as i32), max_deg as i32),
                GenKind::Torsion(k) => (0, (k as i32 - 1).min(max_deg as i32)),
            })
            .collect();
        let mut cur = vec![0i32; n];
        fn rec(
            i: usize,
            cur: &mut Vec<i32>,
            ranges: &[(i32, i32)],
            budget: i32,
            out: &mut Vec<Monomial>,
        ) {
            if i == cur.len() {
                out.push(Monomial::from_exps(cur));
                return;
            }
            for e in ranges[i].0..=ranges[i].1 {
                if e.abs() <= budget {
                    cur[i] = e;
                    rec(i + 1, cur, ranges, budget - e.abs(), out);
                }
            }
            cur[i] = 0;
        }
        rec(0, &mut cur, &ranges, max_deg as i32, &mut out);
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests;
