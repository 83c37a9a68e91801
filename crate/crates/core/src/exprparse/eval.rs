use num_rational::BigRational;
use num_traits::Zero;

use super::{Atom, Expr, Factor};
use crate::ambicore::{AmbiElement, AmbiskewAlgebra};
use crate::basehopf::BaseHopf;
use crate::error::{Error, Result};
use crate::linear::BaseElement;
use crate::scalar::{Field, Scalar};

/// A ring in which expressions can be evaluated.
pub trait EvalRing {
    type Elem: Clone;

    fn field(&self) -> &Field;
    fn lift_scalar(&self, c: Scalar) -> Self::Elem;
    /// Resolves a non-scalar identifier.
    fn ident(&self, name: &str) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn one(&self) -> Self::Elem {
        self.lift_scalar(self.field().one())
    }
}

fn scalar_ident(field: &Field, name: &str) -> Option<Result<Scalar>> {
    match name {
        "q" => Some(field.param()),
        "zeta" => Some(field.zeta()),
        _ => None,
    }
}

fn eval_atom<R: EvalRing>(ring: &R, atom: &Atom) -> Result<R::Elem> {
    let field = ring.field();
    match atom {
        Atom::Int(n) => Ok(ring.lift_scalar(field.from_bigint(n.clone()))),
        Atom::Frac(a, b) => {
            if b.is_zero() {
                return Err(Error::Zero(format!("{a}/{b}")));
            }
            Ok(ring.lift_scalar(field.from_ratio(BigRational::new(a.clone(), b.clone()))))
        }
        Atom::Ident(name) => match scalar_ident(field, name) {
            Some(s) => Ok(ring.lift_scalar(s?)),
            None => ring.ident(name),
        },
        Atom::Group(e) => eval_in(ring, e),
    }
}

fn eval_factor<R: EvalRing>(ring: &R, f: &Factor) -> Result<R::Elem> {
    let base = eval_atom(ring, &f.atom)?;
    let mut v = match f.exp {
        None => base,
        Some(e) => {
            let b = if e < 0 { ring.inverse(&base)? } else { base };
            let mut acc = ring.one();
            for _ in 0..e.unsigned_abs() {
                acc = ring.mul(&acc, &b);
            }
            acc
        }
    };
    if f.neg {
        v = ring.neg(&v);
    }
    Ok(v)
}

/// Evaluates an expression in any [`EvalRing`].
pub fn eval_in<R: EvalRing>(ring: &R, e: &Expr) -> Result<R::Elem> {
    let mut acc: Option<R::Elem> = None;
    for (minus, t) in &e.terms {
        let mut prod = ring.one();
        for f in &t.factors {
            prod = ring.mul(&prod, &eval_factor(ring, f)?);
        }
        if *minus {
            prod = ring.neg(&prod);
        }
        acc = Some(match acc {
            None => prod,
            Some(a) => ring.add(&a, &prod),
        });
    }
    Ok(acc.unwrap_or_else(|| ring.lift_scalar(ring.field().zero())))
}

struct ScalarRing<'a>(&'a Field);

impl EvalRing for ScalarRing<'_> {
    type Elem = Scalar;
    fn field(&self) -> &Field {
        self.0
    }
    fn lift_scalar(&self, c: Scalar) -> Scalar {
        c
    }
    fn ident(&self, name: &str) -> Result<Scalar> {
        Err(Error::UnknownGenerator(name.to_string()))
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn inverse(&self, a: &Scalar) -> Result<Scalar> {
        a.inv().map_err(|_| Error::NotInvertible(a.to_string()))
    }
}

impl EvalRing for BaseHopf {
    type Elem = BaseElement;
    fn field(&self) -> &Field {
        BaseHopf::field(self)
    }
    fn lift_scalar(&self, c: Scalar) -> BaseElement {
        self.scalar(c)
    }
    fn ident(&self, name: &str) -> Result<BaseElement> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
    fn add(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        a.add(b)
    }
    fn neg(&self, a: &BaseElement) -> BaseElement {
        a.neg()
    }
    fn mul(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        BaseHopf::mul(self, a, b)
    }
    fn inverse(&self, a: &BaseElement) -> Result<BaseElement> {
        BaseHopf::inverse(self, a)
    }
}

impl EvalRing for AmbiskewAlgebra {
    type Elem = AmbiElement;
    fn field(&self) -> &Field {
        self.base().field()
    }
    fn lift_scalar(&self, c: Scalar) -> AmbiElement {
        self.scalar(c)
    }
    fn ident(&self, name: &str) -> Result<AmbiElement> {
        match name {
            "X+" => Ok(self.x_plus()),
            "X-" => Ok(self.x_minus()),
            _ => self.base().ident(name).map(|r| self.embed_base(&r)),
        }
    }
    fn add(&self, a: &AmbiElement, b: &AmbiElement) -> AmbiElement {
        a.add(b)
    }
    fn neg(&self, a: &AmbiElement) -> AmbiElement {
        a.neg()
    }
    fn mul(&self, a: &AmbiElement, b: &AmbiElement) -> AmbiElement {
        AmbiskewAlgebra::mul(self, a, b)
    }
    fn inverse(&self, a: &AmbiElement) -> Result<AmbiElement> {
        if a.keys().any(|k| k.1 != 0 || k.2 != 0) {
            return Err(Error::NotInvertible(self.fmt_element(a)));
        }
        let r = self.component(a, 0, 0);
        Ok(self.embed_base(&self.base().inverse(&r)?))
    }
}

/// Evaluates a scalar expression: numbers, `q`, `zeta`.
pub fn eval_scalar(field: &Field, e: &Expr) -> Result<Scalar> {
    eval_in(&ScalarRing(field), e)
}

pub fn eval_base(base: &BaseHopf, e: &Expr) -> Result<BaseElement> {
    eval_in(base, e)
}

pub fn eval_ambi(alg: &AmbiskewAlgebra, e: &Expr) -> Result<AmbiElement> {
    eval_in(alg, e)
}
