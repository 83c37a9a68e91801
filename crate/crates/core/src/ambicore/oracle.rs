//! Reduction of words in `R`, `X+`, `X-` by the defining rewrite rules,
//! one redex at a time. Independent of the closed-form engine and used to
//! cross-check it.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{AmbiElement, AmbiskewAlgebra};
use crate::linear::{BaseElement, LinComb, Monomial};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Base(Monomial),
    XPlus,
    XMinus,
}

pub type Word = Vec<Letter>;

/// Which redex to rewrite next.
pub enum Strategy<'a> {
    Leftmost,
    Rightmost,
    Random(&'a mut ChaCha8Rng),
}

fn redexes(w: &[Letter]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, l) in w.iter().enumerate() {
        if let Letter::Base(m) = l {
            if m.is_one() {
                out.push(i);
                continue;
            }
        }
        if let Some(next) = w.get(i + 1) {
            let hit = matches!(
                (l, next),
                (Letter::Base(_), Letter::Base(_))
                    | (Letter::XPlus, Letter::Base(_))
                    | (Letter::XMinus, Letter::Base(_))
                    | (Letter::XMinus, Letter::XPlus)
            );
            if hit {
                out.push(i);
            }
        }
    }
    out
}

fn splice(w: &[Letter], at: usize, len: usize, mid: &[Letter]) -> Word {
    let mut out = w[..at].to_vec();
    out.extend_from_slice(mid);
    out.extend_from_slice(&w[at + len..]);
    out
}

fn expand(
    w: &[Letter],
    at: usize,
    len: usize,
    r: &BaseElement,
    tail: &[Letter],
    out: &mut LinComb<Word>,
    scale: &crate::scalar::Scalar,
) {
    for (m, c) in r {
        let mut mid = vec![Letter::Base(m.clone())];
        mid.extend_from_slice(tail);
        out.add_term(splice(w, at, len, &mid), c * scale);
    }
}

/// One rewrite at position `at` of `w`.
fn rewrite_at(alg: &AmbiskewAlgebra, w: &[Letter], at: usize) -> LinComb<Word> {
    let one = alg.base().field().one();
    let mut out = LinComb::zero();
    match (&w[at], w.get(at + 1)) {
        (Letter::Base(m), _) if m.is_one() => {
            out.add_term(splice(w, at, 1, &[]), one);
        }
        (Letter::Base(a), Some(Letter::Base(b))) => {
            let prod = alg.base().mul_mono(a, b);
            expand(w, at, 2, &prod, &[], &mut out, &one);
        }
        (Letter::XPlus, Some(Letter::Base(r))) => {
            let s = alg
                .sigma()
                .apply(alg.base(), &alg.base().monomial(r.clone()));
            expand(w, at, 2, &s, &[Letter::XPlus], &mut out, &one);
        }
        (Letter::XMinus, Some(Letter::Base(r))) => {
            let s = alg
                .sigma()
                .apply_power(alg.base(), &alg.base().monomial(r.clone()), -1);
            expand(w, at, 2, &s, &[Letter::XMinus], &mut out, &one);
        }
        (Letter::XMinus, Some(Letter::XPlus)) => {
            // X- X+ = ξ^-1 X+ X- - ξ^-1 h
            let xi_inv = alg.xi().inv().expect("xi nonzero");
            out.add_term(
                splice(w, at, 2, &[Letter::XPlus, Letter::XMinus]),
                xi_inv.clone(),
            );
            expand(w, at, 2, alg.h(), &[], &mut out, &-xi_inv);
        }
        _ => unreachable!("not a redex"),
    }
    out
}

fn to_normal(alg: &AmbiskewAlgebra, w: &[Letter]) -> (Monomial, u32, u32) {
    let mut base = Monomial::one(alg.base().ngens());
    let (mut a, mut b) = (0, 0);
    for l in w {
        match l {
            Letter::Base(m) => base = m.clone(),
            Letter::XPlus => a += 1,
            Letter::XMinus => b += 1,
        }
    }
    (base, a, b)
}

/// Reduces a linear combination of words to normal form.
pub fn reduce(
    alg: &AmbiskewAlgebra,
    words: &LinComb<Word>,
    mut strategy: Strategy<'_>,
) -> AmbiElement {
    let mut pending = words.clone();
    let mut done = AmbiElement::zero();
    while let Some((w, c)) = pending.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        pending.add_term(w.clone(), -&c);
        let rs = redexes(&w);
        if rs.is_empty() {
            done.add_term(to_normal(alg, &w), c);
            continue;
        }
        let at = match &mut strategy {
            Strategy::Leftmost => rs[0],
            Strategy::Rightmost => *rs.last().expect("nonempty"),
            Strategy::Random(rng) => rs[rng.gen_range(0..rs.len())],
        };
        pending.add_scaled(&rewrite_at(alg, &w, at), &c);
    }
    done
}

/// The word of a normal-form element's basis key.
pub fn key_word(k: &(Monomial, u32, u32)) -> Word {
    let mut w = vec![Letter::Base(k.0.clone())];
    w.extend(std::iter::repeat_n(Letter::XPlus, k.1 as usize));
    w.extend(std::iter::repeat_n(Letter::XMinus, k.2 as usize));
    w
}

/// Product of two elements computed by concatenating words and reducing.
pub fn mul_by_rewriting(alg: &AmbiskewAlgebra, x: &AmbiElement, y: &AmbiElement) -> AmbiElement {
    let mut words = LinComb::zero();
    for (a, c) in x {
        for (b, d) in y {
            let mut w = key_word(a);
            w.extend(key_word(b));
            words.add_term(w, c * d);
        }
    }
    reduce(alg, &words, Strategy::Leftmost)
}
