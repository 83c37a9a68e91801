//! Finitely supported scalar maps over ordered keys, and the exponent-vector
//! monomials every shipped algebra uses as its basis.

use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};

use smallvec::SmallVec;

use crate::scalar::Scalar;

/// An ordered product `g_0^{e_0} g_1^{e_1} ... g_k^{e_k}` of the generators of
/// a base algebra. Ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[i32; 6]>);

impl Monomial {
    pub fn one(ngens: usize) -> Self {
        Monomial(SmallVec::from_elem(0, ngens))
    }

    pub fn from_exps(exps: &[i32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn exps_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs() as u64).sum()
    }

    pub fn split_at(&self, k: usize) -> (Monomial, &[i32]) {
        (Monomial(SmallVec::from_slice(&self.0[..k])), &self.0[k..])
    }

    pub fn extended(&self, tail: &[i32]) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(tail);
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of keys with nonzero scalar coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Option<&Scalar> {
        self.terms.get(key)
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (k, v) in other.iter() {
            self.add_term(k.clone(), if unit { v.clone() } else { v * c });
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), -v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn map_keys<J: Ord + Clone>(&self, f: impl Fn(&K) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, v) in self.iter() {
            out.add_term(f(k), v.clone());
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

/// Element of a base algebra R in its monomial basis.
pub type BaseElement = LinComb<Monomial>;

/// Element of R ⊗ R.
pub type BaseTensor = LinComb<(Monomial, Monomial)>;

/// Element of R ⊗ R ⊗ R.
pub type BaseTensor3 = LinComb<(Monomial, Monomial, Monomial)>;

pub fn tensor(a: &BaseElement, b: &BaseElement) -> BaseTensor {
    let mut out = BaseTensor::zero();
    for (x, c) in a {
        for (y, d) in b {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

/// Joins `(coefficient, monomial text)` pairs into a sum in the expression
/// grammar. An empty monomial text stands for the unit.
pub(crate) fn format_sum<'a>(terms: impl IntoIterator<Item = (&'a Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let (neg, body, parens) = c.coefficient_parts();
        let unit = !parens && body == "1";
        let text = match (mono.is_empty(), unit) {
            (true, _) if parens => format!("({body})"),
            (true, _) => body,
            (false, true) => mono,
            (false, false) if parens => format!("({body})*{mono}"),
            (false, false) => format!("{body}*{mono}"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn cancellation_drops_terms() {
        let f = Field::rational();
        let m = Monomial::from_exps(&[2]);
        let mut a = BaseElement::term(m.clone(), f.from_int(3));
        a.add_term(m, f.from_int(-3));
        assert!(a.is_zero());
    }

    #[test]
    fn graded_order() {
        let a = Monomial::from_exps(&[0, 2]);
        let b = Monomial::from_exps(&[1, 0]);
        let c = Monomial::from_exps(&[-1, 0]);
        assert!(b < a);
        assert!(c < b);
        assert!(Monomial::one(2) < c);
    }
}
