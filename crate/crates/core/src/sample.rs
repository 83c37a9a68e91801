//! Seeded random elements and words for property checks and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::ambicore::oracle::{Letter, Word};
use crate::ambicore::{AmbiElement, AmbiskewAlgebra};
use crate::basehopf::BaseHopf;
use crate::linear::{BaseElement, LinComb};
use crate::scalar::Scalar;

fn coeff(base: &BaseHopf, rng: &mut ChaCha8Rng) -> Scalar {
    let mut n = rng.gen_range(-3i64..=3);
    if n == 0 {
        n = 1;
    }
    base.field().from_int(n)
}

/// Up to `terms` random monomials of degree at most `max_deg`.
pub fn base_element(
    base: &BaseHopf,
    rng: &mut ChaCha8Rng,
    max_deg: u32,
    terms: usize,
) -> BaseElement {
    let monos = base.monomials_up_to(max_deg);
    let mut out = BaseElement::zero();
    for _ in 0..terms {
        let m = monos.choose(rng).expect("nonempty").clone();
        out.add_term(m, coeff(base, rng));
    }
    out
}

/// Up to `terms` random basis elements `r X+^a X-^b` with total degree at
/// most `max_deg`.
pub fn ambi_element(
    alg: &AmbiskewAlgebra,
    rng: &mut ChaCha8Rng,
    max_deg: u32,
    terms: usize,
) -> AmbiElement {
    let base = alg.base();
    let mut out = AmbiElement::zero();
    for _ in 0..terms {
        let a = rng.gen_range(0..=max_deg);
        let b = rng.gen_range(0..=max_deg - a);
        let monos = base.monomials_up_to(max_deg - a - b);
        let m = monos.choose(rng).expect("nonempty").clone();
        out.add_term((m, a, b), coeff(base, rng));
    }
    out
}

/// A random word of `len` letters, each `X+`, `X-` or a base generator or
/// its inverse.
pub fn word(alg: &AmbiskewAlgebra, rng: &mut ChaCha8Rng, len: usize) -> Word {
    let base = alg.base();
    let mut letters = vec![Letter::XPlus, Letter::XMinus];
    for i in 0..base.ngens() {
        letters.push(Letter::Base(base.gen_monomial(i)));
        if let Some(m) = base.gen_inv_monomial(i) {
            letters.push(Letter::Base(m));
        }
    }
    (0..len)
        .map(|_| letters.choose(rng).expect("nonempty").clone())
        .collect()
}

/// A single word with coefficient one, as a linear combination.
pub fn word_comb(alg: &AmbiskewAlgebra, w: Word) -> LinComb<Word> {
    LinComb::term(w, alg.base().field().one())
}
