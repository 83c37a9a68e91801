use crate::error::{Error, Result};
use crate::linear::{BaseElement, Monomial};
use crate::scalar::Scalar;

use super::BaseHopf;

/// Images of every generator (and of the inverse of every invertible
/// generator) under an algebra map `R -> R`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenImages {
    pub pos: Vec<BaseElement>,
    pub neg: Vec<Option<BaseElement>>,
}

impl GenImages {
    /// Images obtained by applying `f` to each generator and inverse generator.
    pub fn from_fn(base: &BaseHopf, f: impl Fn(&BaseElement) -> BaseElement) -> Self {
        let n = base.ngens();
        let pos = (0..n).map(|i| f(&base.gen_elem(i))).collect();
        let neg = (0..n)
            .map(|i| base.gen_inv_elem(i).map(|g| f(&g)))
            .collect();
        GenImages { pos, neg }
    }

    /// Per-generator scaling factors when each generator maps to a scalar
    /// multiple of itself.
    fn diagonal(&self, base: &BaseHopf) -> Option<Diagonal> {
        let mut pos = Vec::with_capacity(self.pos.len());
        let mut neg = Vec::with_capacity(self.pos.len());
        for i in 0..base.ngens() {
            let g = base.gen_monomial(i);
            let img = &self.pos[i];
            if img.len() != 1 {
                return None;
            }
            let c = img.coeff(&g)?.clone();
            pos.push(c);
            match (&self.neg[i], base.gen_inv_monomial(i)) {
                (Some(img), Some(gi)) => {
                    if img.len() != 1 {
                        return None;
                    }
                    neg.push(Some(img.coeff(&gi)?.clone()));
                }
                (None, None) => neg.push(None),
                _ => return None,
            }
        }
        Some(Diagonal { pos, neg })
    }
}

#[derive(Clone, Debug)]
struct Diagonal {
    pos: Vec<Scalar>,
    neg: Vec<Option<Scalar>>,
}

impl Diagonal {
    fn factor(&self, m: &Monomial) -> Scalar {
        let mut acc: Option<Scalar> = None;
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let f = if e > 0 {
                self.pos[i].pow(e as i64).expect("nonnegative power")
            } else {
                self.neg[i]
                    .as_ref()
                    .expect("negative exponent on non-invertible generator")
                    .pow(-(e as i64))
                    .expect("nonnegative power")
            };
            acc = Some(match acc {
                None => f,
                Some(a) => &a * &f,
            });
        }
        acc.unwrap_or_else(|| {
            self.pos
                .first()
                .map(|s| s.field().one())
                .expect("no generators")
        })
    }
}

/// An algebra automorphism σ of R given on generators, with its inverse.
#[derive(Clone, Debug)]
pub struct BaseAutomorphism {
    forward: GenImages,
    backward: GenImages,
    diag: Option<(Diagonal, Diagonal)>,
}

impl BaseAutomorphism {
    /// Builds without verifying that the images respect the relations of R.
    pub fn new_unchecked(base: &BaseHopf, forward: GenImages, backward: GenImages) -> Self {
        let diag = match (forward.diagonal(base), backward.diagonal(base)) {
            (Some(f), Some(b)) => Some((f, b)),
            _ => None,
        };
        BaseAutomorphism {
            forward,
            backward,
            diag,
        }
    }

    /// Builds and verifies: both image sets respect every defining relation
    /// of R, and the two maps are mutually inverse on generators.
    pub fn new(base: &BaseHopf, forward: GenImages, backward: GenImages) -> Result<Self> {
        let a = Self::new_unchecked(base, forward, backward);
        a.verify(base)?;
        Ok(a)
    }

    pub fn from_maps(
        base: &BaseHopf,
        forward: impl Fn(&BaseElement) -> BaseElement,
        backward: impl Fn(&BaseElement) -> BaseElement,
    ) -> Self {
        Self::new_unchecked(
            base,
            GenImages::from_fn(base, forward),
            GenImages::from_fn(base, backward),
        )
    }

    pub fn identity(base: &BaseHopf) -> Self {
        Self::from_maps(base, |a| a.clone(), |a| a.clone())
    }

    pub fn verify(&self, base: &BaseHopf) -> Result<()> {
        base.check_relations(&self.forward)
            .map_err(|r| Error::InvalidAutomorphism(format!("image violates relation {r}")))?;
        base.check_relations(&self.backward)
            .map_err(|r| Error::InvalidAutomorphism(format!("inverse violates relation {r}")))?;
        for i in 0..base.ngens() {
            let mut gs = vec![base.gen_elem(i)];
            gs.extend(base.gen_inv_elem(i));
            for g in gs {
                if self.apply_power(base, &self.apply(base, &g), -1) != g
                    || self.apply(base, &self.apply_power(base, &g, -1)) != g
                {
                    return Err(Error::InvalidAutomorphism(format!(
                        "inverse does not fix generator {}",
                        base.fmt_element(&g)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn forward(&self) -> &GenImages {
        &self.forward
    }

    pub fn backward(&self) -> &GenImages {
        &self.backward
    }

    pub fn is_diagonal(&self) -> bool {
        self.diag.is_some()
    }

    /// Eigenvalue of a monomial when σ is diagonal on the monomial basis.
    pub fn monomial_eigenvalue(&self, m: &Monomial) -> Option<Scalar> {
        self.diag.as_ref().map(|(f, _)| f.factor(m))
    }

    pub fn apply(&self, base: &BaseHopf, a: &BaseElement) -> BaseElement {
        self.apply_power(base, a, 1)
    }

    pub fn inverse(&self) -> BaseAutomorphism {
        BaseAutomorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
            diag: self.diag.clone().map(|(f, b)| (b, f)),
        }
    }

    /// σ^k for any integer k.
    pub fn apply_power(&self, base: &BaseHopf, a: &BaseElement, k: i64) -> BaseElement {
        if k == 0 || a.is_zero() {
            return a.clone();
        }
        if let Some((f, b)) = &self.diag {
            let d = if k > 0 { f } else { b };
            let n = k.unsigned_abs() as i64;
            let mut out = BaseElement::zero();
            for (m, c) in a {
                let fac = d.factor(m).pow(n).expect("nonnegative power");
                out.add_term(m.clone(), c * &fac);
            }
            return out;
        }
        let imgs = if k > 0 { &self.forward } else { &self.backward };
        let mut cur = a.clone();
        for _ in 0..k.unsigned_abs() {
            cur = base.apply_hom(imgs, &cur);
        }
        cur
    }

    /// Whether two automorphisms agree on every generator.
    pub fn agrees_with(&self, base: &BaseHopf, other: &BaseAutomorphism) -> bool {
        self.forward == other.forward
            || (0..base.ngens()).all(|i| {
                let g = base.gen_elem(i);
                self.apply(base, &g) == other.apply(base, &g)
            })
    }
}
