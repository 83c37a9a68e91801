use super::*;
use crate::linear::{tensor, BaseTensor3};

fn mono(e: &[i32]) -> Monomial {
    Monomial::from_exps(e)
}

fn q_field() -> (Field, Scalar) {
    let f = Field::rational_function();
    let q = f.param().unwrap();
    (f, q)
}

fn uq_generic() -> Arc<BaseHopf> {
    let (f, q) = q_field();
    BaseHopf::uqsl2(&f, &q).unwrap()
}

fn el(base: &BaseHopf, name: &str) -> BaseElement {
    base.lookup(name).unwrap()
}

#[test]
fn laurent_product_uses_group_law() {
    let r = BaseHopf::laurent(&Field::rational(), "t");
    let a = r.monomial(mono(&[2]));
    let b = r.monomial(mono(&[-3]));
    assert_eq!(r.mul(&a, &b), r.monomial(mono(&[-1])));
}

#[test]
fn polynomial_product() {
    let f = Field::rational();
    let r = BaseHopf::polynomial(&f, "t");
    let t = r.gen_elem(0);
    let a = r.one().add(&t);
    let b = r.one().sub(&t);
    let expect = r.one().sub(&r.mul(&t, &t));
    assert_eq!(r.mul(&a, &b), expect);
}

#[test]
fn uqsl2_commutator_of_e_and_f() {
    let (f, q) = q_field();
    let r = uq_generic();
    let e = el(&r, "E");
    let ff = el(&r, "F");
    let k = el(&r, "K");
    let kinv = r.inverse(&k).unwrap();
    let comm = r.mul(&e, &ff).sub(&r.mul(&ff, &e));
    let denom = (&q - &q.inv().unwrap()).inv().unwrap();
    assert_eq!(comm, k.sub(&kinv).scale(&denom));
    // K E K^-1 = q^2 E
    let conj = r.mul(&r.mul(&k, &e), &kinv);
    assert_eq!(conj, e.scale(&q.pow(2).unwrap()));
    assert_eq!(f, *r.field());
}

#[test]
fn polynomial_coproduct_of_square() {
    let f = Field::rational();
    let r = BaseHopf::polynomial(&f, "t");
    let d = r.delta_mono(&mono(&[2]));
    let mut expect = BaseTensor::zero();
    expect.add_term((mono(&[2]), mono(&[0])), f.one());
    expect.add_term((mono(&[1]), mono(&[1])), f.from_int(2));
    expect.add_term((mono(&[0]), mono(&[2])), f.one());
    assert_eq!(d, expect);
}

#[test]
fn laurent_monomials_are_grouplike() {
    let r = BaseHopf::laurent(&Field::rational(), "t");
    for n in [-3, 0, 5] {
        let m = mono(&[n]);
        assert_eq!(
            r.delta_mono(&m),
            BaseTensor::term((m.clone(), m), Field::rational().one())
        );
    }
    assert!(r.is_grouplike(&r.monomial(mono(&[3]))));
    assert!(!r.is_grouplike(&r.monomial(mono(&[3])).scale(&Field::rational().from_int(2))));
}

#[test]
fn uqsl2_coproducts_of_generators() {
    let r = uq_generic();
    let e = el(&r, "E");
    let k = el(&r, "K");
    let ff = el(&r, "F");
    let one = r.one();
    assert_eq!(r.delta(&e), tensor(&e, &one).add(&tensor(&k, &e)));
    let kinv = r.inverse(&k).unwrap();
    assert_eq!(r.delta(&ff), tensor(&ff, &kinv).add(&tensor(&one, &ff)));
    assert!(r.is_skew_primitive(&ff, &kinv, &one).unwrap());
    assert!(r.is_grouplike(&k));
}

#[test]
fn centrality_of_powers_of_k_at_eighth_root() {
    let f = Field::cyclotomic(8).unwrap();
    let q = f.zeta().unwrap();
    let r = BaseHopf::uqsl2(&f, &q).unwrap();
    let k = el(&r, "K");
    assert!(r.is_central(&r.pow(&k, 4).unwrap()));
    assert!(!r.is_central(&r.pow(&k, 2).unwrap()));
}

#[test]
fn primitive_generator_is_skew_primitive() {
    let r = BaseHopf::polynomial(&Field::rational(), "t");
    assert!(r
        .is_skew_primitive(&r.gen_elem(0), &r.one(), &r.one())
        .unwrap());
    let t2 = r.monomial(mono(&[2]));
    assert!(!r.is_skew_primitive(&t2, &r.one(), &r.one()).unwrap());
    assert!(r.is_skew_primitive(&t2, &t2, &r.one()).is_err());
}

#[test]
fn polynomial_winding_is_translation() {
    let f = Field::rational();
    let r = BaseHopf::polynomial(&f, "t");
    let lambda = f.from_int(3);
    let chi = Character::new(vec![lambda.clone()]);
    let t = r.gen_elem(0);
    assert_eq!(
        r.winding_left(&chi, &t).unwrap(),
        t.add(&r.scalar(lambda.clone()))
    );
    assert_eq!(r.winding_right(&chi, &t).unwrap(), t.add(&r.scalar(lambda)));
}

#[test]
fn uqsl2_windings_by_sign_character() {
    let r = uq_generic();
    let f = r.field().clone();
    let chi = Character::new(vec![f.from_int(-1), f.zero(), f.zero()]);
    r.validate_character(&chi).unwrap();
    let e = el(&r, "E");
    let ff = el(&r, "F");
    assert_eq!(r.winding_left(&chi, &e).unwrap(), e.neg());
    assert_eq!(r.winding_right(&chi, &e).unwrap(), e);
    assert_eq!(r.winding_left(&chi, &ff).unwrap(), ff);
    assert_eq!(r.winding_right(&chi, &ff).unwrap(), ff.neg());
}

#[test]
fn winding_on_grouplike_scales() {
    let f = Field::rational();
    let r = BaseHopf::group(&f, 2, &[]).unwrap();
    let chi = Character::new(vec![
        f.from_int(2),
        f.from_int(1).try_div(&f.from_int(3)).unwrap(),
    ]);
    let g = r.monomial(mono(&[1, -2]));
    let c = r.char_eval(&chi, &g).unwrap();
    assert_eq!(c, f.from_int(18));
    assert_eq!(r.winding_left(&chi, &g).unwrap(), g.scale(&c));
    assert_eq!(r.winding_right(&chi, &g).unwrap(), g.scale(&c));
}

#[test]
fn windings_by_inverse_character_are_inverse() {
    let r = uq_generic();
    let f = r.field().clone();
    let chi = Character::new(vec![f.from_int(-1), f.zero(), f.zero()]);
    let inv = r.character_inverse(&chi);
    for i in 0..r.ngens() {
        let g = r.gen_elem(i);
        let a = r
            .winding_left(&chi, &r.winding_left(&inv, &g).unwrap())
            .unwrap();
        let b = r
            .winding_left(&inv, &r.winding_left(&chi, &g).unwrap())
            .unwrap();
        assert_eq!(a, g);
        assert_eq!(b, g);
    }
}

#[test]
fn invalid_characters_are_rejected() {
    let r = uq_generic();
    let f = r.field().clone();
    let chi = Character::new(vec![f.one(), f.one(), f.zero()]);
    assert!(matches!(
        r.validate_character(&chi),
        Err(Error::InvalidCharacter(_))
    ));
    let zero_k = Character::new(vec![f.zero(), f.zero(), f.zero()]);
    assert!(r.validate_character(&zero_k).is_err());
    let g = BaseHopf::group(&Field::rational(), 0, &[3]).unwrap();
    let bad = Character::new(vec![Field::rational().from_int(2)]);
    assert!(g.validate_character(&bad).is_err());
}

#[test]
fn coradical_degrees_of_shipped_families() {
    let f = Field::rational();
    let l = BaseHopf::laurent(&f, "t");
    assert_eq!(l.coradical_degree(&l.monomial(mono(&[5]))).unwrap(), 0);
    let p = BaseHopf::polynomial(&f, "t");
    let a = p
        .monomial(mono(&[2]))
        .add(&p.gen_elem(0).scale(&f.from_int(3)));
    assert_eq!(p.coradical_degree(&a).unwrap(), 2);
    assert!(p.coradical_degree(&p.zero()).is_err());
    let u = uq_generic();
    let ef = u.mul(&el(&u, "E"), &el(&u, "F"));
    assert_eq!(u.coradical_degree(&ef).unwrap(), 2);
}

/// Least `n` with `Δ(t^k) ∈ R_{n-1}⊗R + R⊗R_0`, computed from the wedge
/// definition with `R_0 = k`.
fn wedge_degree(r: &BaseHopf, k: i32, known: &[u64]) -> u64 {
    if k == 0 {
        return 0;
    }
    let d = r.delta_mono(&mono(&[k]));
    (1..)
        .find(|&n| {
            d.keys()
                .all(|(a, b)| b.exps()[0] == 0 || known[a.exps()[0] as usize] < n)
        })
        .unwrap()
}

#[test]
fn polynomial_degree_matches_wedge_definition() {
    let r = BaseHopf::polynomial(&Field::rational(), "t");
    let mut known = Vec::new();
    for k in 0..=4 {
        let w = wedge_degree(&r, k, &known);
        known.push(w);
        assert_eq!(w, r.coradical_degree(&r.monomial(mono(&[k]))).unwrap());
    }
}

fn check_bialgebra_on_generators(r: &BaseHopf) {
    let mut elems: Vec<BaseElement> = (0..r.ngens()).map(|i| r.gen_elem(i)).collect();
    elems.extend(r.aliases().iter().map(|a| a.value.clone()));
    for g in elems {
        let d = r.delta(&g);
        let mut left = BaseTensor3::zero();
        let mut right = BaseTensor3::zero();
        for ((a, b), c) in &d {
            for ((x, y), e) in &r.delta_mono(a) {
                left.add_term((x.clone(), y.clone(), b.clone()), c * e);
            }
            for ((x, y), e) in &r.delta_mono(b) {
                right.add_term((a.clone(), x.clone(), y.clone()), c * e);
            }
        }
        assert_eq!(left, right, "coassociativity on {}", r.fmt_element(&g));
        let mut counit_l = BaseElement::zero();
        let mut antipode_l = BaseElement::zero();
        for ((a, b), c) in &d {
            let ea = r.counit(&r.monomial(a.clone()));
            counit_l.add_term(b.clone(), c * &ea);
            let s = r.antipode(&r.monomial(a.clone()));
            antipode_l.add_scaled(&r.mul(&s, &r.monomial(b.clone())), c);
        }
        assert_eq!(counit_l, g);
        assert_eq!(antipode_l, r.scalar(r.counit(&g)));
    }
}

#[test]
fn bialgebra_axioms_hold_on_generators() {
    let f = Field::rational();
    check_bialgebra_on_generators(&BaseHopf::polynomial(&f, "t"));
    check_bialgebra_on_generators(&BaseHopf::laurent(&f, "t"));
    let c = Field::cyclotomic(4).unwrap();
    check_bialgebra_on_generators(&BaseHopf::group(&c, 1, &[2, 4]).unwrap());
    check_bialgebra_on_generators(&uq_generic());
}

#[test]
fn delta_is_multiplicative_on_uqsl2() {
    let r = uq_generic();
    let e = el(&r, "E");
    let ff = el(&r, "F");
    let k = el(&r, "K");
    let samples = [
        e.add(&k),
        ff.clone(),
        r.mul(&k, &ff).add(&r.one()),
        r.inverse(&k).unwrap(),
    ];
    for a in &samples {
        for b in &samples {
            assert_eq!(
                r.delta(&r.mul(a, b)),
                r.tensor_mul(&r.delta(a), &r.delta(b))
            );
        }
    }
}

#[test]
fn torsion_exponents_reduce() {
    let f = Field::cyclotomic(3).unwrap();
    let g = BaseHopf::group(&f, 0, &[3]).unwrap();
    let x = g.gen_elem(0);
    assert_eq!(g.pow(&x, 3).unwrap(), g.one());
    assert_eq!(g.inverse(&x).unwrap(), g.monomial(mono(&[2])));
    let chi = Character::new(vec![f.zeta().unwrap()]);
    g.validate_character(&chi).unwrap();
}

#[test]
fn uqsl2_requires_generic_q() {
    let f = Field::rational();
    assert!(BaseHopf::uqsl2(&f, &f.one()).is_err());
    assert!(BaseHopf::uqsl2(&f, &f.from_int(-1)).is_err());
    assert!(BaseHopf::uqsl2(&f, &f.from_int(2)).is_ok());
}

#[test]
fn uqsl2_descriptor_is_derived() {
    let r = uq_generic();
    let d = r.descriptor();
    assert_eq!(d.family, "uqsl2");
    assert_eq!(d.gk_dim, Dim::Finite(3));
    assert_eq!(d.gl_dim, Dim::Finite(3));
    assert!(!d.commutative);
    assert!(!d.cocommutative);
    assert!(d.domain && d.noetherian);
}
