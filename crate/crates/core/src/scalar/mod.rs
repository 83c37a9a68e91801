//! Exact coefficient fields: Q, cyclotomic fields Q(ζ_N) in the power basis
//! modulo Φ_N, and the rational function field Q(q).

mod qbinom;
pub(crate) mod qpoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use qpoly::{QPoly, ZPoly};

pub use qbinom::{hat, prec, q_binomial, q_binomial_poly, q_factorial, q_int, HatProfile};

/// Multiplicative order of a scalar, or the order parameter `d` of the hat
/// arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// The field Q(ζ_N), represented as Q[x]/(Φ_N).
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: QPoly,
    /// `x^k mod Φ_N` for `k` in `deg..2*deg-1`.
    reductions: Vec<QPoly>,
}

impl CyclotomicField {
    fn new(order: u32) -> Self {
        let modulus = qpoly::q_from_z(&cyclotomic_polynomial(order));
        let deg = modulus.len() - 1;
        let mut reductions = Vec::new();
        let mut cur: QPoly = vec![BigRational::zero(); deg];
        // x^deg = -(Φ_N - x^deg)
        for (i, c) in modulus.iter().take(deg).enumerate() {
            cur[i] = -c;
        }
        for _ in deg..(2 * deg).max(deg + 1) {
            reductions.push(cur.clone());
            // multiply by x and reduce
            let top = cur[deg - 1].clone();
            let mut next = vec![BigRational::zero(); deg];
            for i in (1..deg).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for (i, r) in reductions[0].iter().enumerate() {
                    next[i] += &top * r;
                }
            }
            cur = next;
        }
        CyclotomicField {
            order,
            modulus,
            reductions,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut p: QPoly) -> Vec<BigRational> {
        let deg = self.degree();
        if p.len() > deg {
            let high: Vec<BigRational> = p.split_off(deg);
            for (k, c) in high.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, r) in self.reductions[k].iter().enumerate() {
                    p[i] += &c * r;
                }
            }
        }
        p.resize(deg, BigRational::zero());
        p
    }
}

/// Φ_n by iterated exact division of x^n - 1.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut num: QPoly = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = qpoly::q_from_z(&cyclotomic_polynomial(d));
            let (q, r) = qpoly::q_divrem(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num.iter().map(|c| c.to_integer()).collect()
}

/// Reduced quotient of integer polynomials in the formal parameter `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

impl RatFunc {
    /// `(k, c)` when the denominator is `c*q^k`.
    fn monomial_denominator(&self) -> Option<(usize, &BigInt)> {
        let mut nz = self.den.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (nz.next(), nz.next()) {
            (Some((k, c)), None) => Some((k, c)),
            _ => None,
        }
    }

    fn from_q(num: QPoly, den: QPoly) -> Self {
        let mut num = num;
        let mut den = den;
        qpoly::trim(&mut num);
        qpoly::trim(&mut den);
        assert!(!den.is_empty(), "rational function with zero denominator");
        if num.is_empty() {
            return RatFunc {
                num: Vec::new(),
                den: vec![BigInt::one()],
            };
        }
        if den.len() > 1 {
            let g = qpoly::q_gcd(&num, &den);
            if g.len() > 1 {
                num = qpoly::q_divrem(&num, &g).0;
                den = qpoly::q_divrem(&den, &g).0;
            }
        }
        let (num, den) = qpoly::z_normalize_pair(&num, &den);
        RatFunc { num, den }
    }

    fn from_z(num: ZPoly, den: ZPoly) -> Self {
        Self::from_q(qpoly::q_from_z(&num), qpoly::q_from_z(&den))
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.den
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        if self.den == other.den && self.den.len() == 1 {
            return Self::from_z(qpoly::z_add(&self.num, &other.num), self.den.clone());
        }
        let n = qpoly::z_add(
            &qpoly::z_mul(&self.num, &other.den),
            &qpoly::z_mul(&other.num, &self.den),
        );
        Self::from_z(n, qpoly::z_mul(&self.den, &other.den))
    }

    fn mul(&self, other: &Self) -> Self {
        Self::from_z(
            qpoly::z_mul(&self.num, &other.num),
            qpoly::z_mul(&self.den, &other.den),
        )
    }

    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::from_z(self.den.clone(), self.num.clone()))
        }
    }
}

/// A coefficient field. Scalars from different fields never mix implicitly;
/// use [`Field::embed`] to move a rational into another field.
#[derive(Clone, Debug)]
pub enum Field {
    Rational,
    Cyclotomic(Arc<CyclotomicField>),
    RationalFunction,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rational, Field::Rational) => true,
            (Field::RationalFunction, Field::RationalFunction) => true,
            (Field::Cyclotomic(a), Field::Cyclotomic(b)) => a.order == b.order,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Cyclotomic(c) => write!(f, "Q(zeta_{})", c.order),
            Field::RationalFunction => f.write_str("Q(q)"),
        }
    }
}

impl Field {
    pub fn rational() -> Self {
        Field::Rational
    }

    /// Q(ζ_N). Supported for `1 <= N <= 64`.
    pub fn cyclotomic(order: u32) -> Result<Self> {
        if !(1..=64).contains(&order) {
            return Err(Error::InvalidArgument(format!(
                "cyclotomic order {order} outside 1..=64"
            )));
        }
        Ok(Field::Cyclotomic(Arc::new(CyclotomicField::new(order))))
    }

    pub fn rational_function() -> Self {
        Field::RationalFunction
    }

    pub fn from_ratio(&self, r: BigRational) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(r),
            Field::Cyclotomic(c) => {
                let mut v = vec![BigRational::zero(); c.degree()];
                v[0] = r;
                Scalar::Cyclotomic(c.clone(), v)
            }
            Field::RationalFunction => {
                Scalar::RationalFunction(RatFunc::from_q(vec![r], vec![BigRational::one()]))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_ratio(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(&self, n: BigInt) -> Scalar {
        self.from_ratio(BigRational::from_integer(n))
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// The distinguished primitive root ζ_N of a cyclotomic field.
    pub fn zeta(&self) -> Result<Scalar> {
        match self {
            Field::Cyclotomic(c) => {
                let mut p = vec![BigRational::zero(); 2];
                p[1] = BigRational::one();
                Ok(Scalar::Cyclotomic(c.clone(), c.reduce(p)))
            }
            _ => Err(Error::FieldMismatch(format!(
                "zeta is not defined over {self}"
            ))),
        }
    }

    /// The transcendental parameter of Q(q).
    pub fn param(&self) -> Result<Scalar> {
        match self {
            Field::RationalFunction => Ok(Scalar::RationalFunction(RatFunc {
                num: vec![BigInt::zero(), BigInt::one()],
                den: vec![BigInt::one()],
            })),
            _ => Err(Error::FieldMismatch(format!(
                "q is not defined over {self}"
            ))),
        }
    }

    /// Embeds a rational scalar into this field; scalars already in this
    /// field pass through unchanged.
    pub fn embed(&self, s: &Scalar) -> Result<Scalar> {
        if &s.field() == self {
            return Ok(s.clone());
        }
        match s {
            Scalar::Rational(r) => Ok(self.from_ratio(r.clone())),
            _ => Err(Error::FieldMismatch(format!(
                "cannot embed a scalar of {} into {self}",
                s.field()
            ))),
        }
    }

    /// Evaluates an integer polynomial at `x`.
    pub fn eval_int_poly(&self, coeffs: &[BigInt], x: &Scalar) -> Scalar {
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * x) + &self.from_bigint(c.clone());
        }
        acc
    }

    /// Characteristic is always zero for the supported fields.
    pub fn characteristic(&self) -> u32 {
        0
    }
}

/// An element of one of the supported exact fields.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic(Arc<CyclotomicField>, Vec<BigRational>),
    RationalFunction(RatFunc),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Cyclotomic(f, a), Scalar::Cyclotomic(g, b)) => f.order == g.order && a == b,
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

fn mismatch(a: &Scalar, b: &Scalar) -> Error {
    Error::FieldMismatch(format!("{} vs {}", a.field(), b.field()))
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Cyclotomic(c, _) => Field::Cyclotomic(c.clone()),
            Scalar::RationalFunction(_) => Field::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(_, v) => v.iter().all(Zero::is_zero),
            Scalar::RationalFunction(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Cyclotomic(_, v) => v[0].is_one() && v[1..].iter().all(Zero::is_zero),
            Scalar::RationalFunction(f) => {
                f.num.len() == 1 && f.den.len() == 1 && f.num[0] == f.den[0]
            }
        }
    }

    /// The rational value, when the scalar lies in the prime field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Cyclotomic(_, v) => v[1..].iter().all(Zero::is_zero).then(|| v[0].clone()),
            Scalar::RationalFunction(f) => (f.num.len() <= 1 && f.den.len() == 1).then(|| {
                BigRational::new(f.num.first().cloned().unwrap_or_default(), f.den[0].clone())
            }),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Cyclotomic(f, a), Scalar::Cyclotomic(g, b)) if f.order == g.order => {
                Scalar::Cyclotomic(f.clone(), a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => {
                Scalar::RationalFunction(a.add(b))
            }
            _ => return Err(mismatch(self, other)),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Cyclotomic(f, a), Scalar::Cyclotomic(g, b)) if f.order == g.order => {
                let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::Cyclotomic(f.clone(), f.reduce(prod))
            }
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => {
                Scalar::RationalFunction(a.mul(b))
            }
            _ => return Err(mismatch(self, other)),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Cyclotomic(f, a) => {
                Scalar::Cyclotomic(f.clone(), a.iter().map(|x| -x).collect())
            }
            Scalar::RationalFunction(a) => Scalar::RationalFunction(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        let zero = || Error::Zero("inverse of zero scalar".into());
        Ok(match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    return Err(zero());
                }
                Scalar::Rational(a.recip())
            }
            Scalar::Cyclotomic(f, a) => {
                let mut p = a.clone();
                qpoly::trim(&mut p);
                let inv = qpoly::q_inverse_mod(&p, &f.modulus).ok_or_else(zero)?;
                Scalar::Cyclotomic(f.clone(), f.reduce(inv))
            }
            Scalar::RationalFunction(a) => Scalar::RationalFunction(a.inv().ok_or_else(zero)?),
        })
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = self.field().one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Multiplicative order: the least `n >= 1` with `x^n = 1`.
    pub fn mul_order(&self) -> Result<Order> {
        if self.is_zero() {
            return Err(Error::Zero("multiplicative order of zero".into()));
        }
        let minus_one = self.field().from_int(-1);
        match self {
            Scalar::Cyclotomic(f, _) => {
                // every root of unity in Q(ζ_N) has order dividing 2N
                let bound = 2 * f.order as u64;
                let one = self.field().one();
                let mut p = self.clone();
                for k in 1..=bound {
                    if p == one {
                        return Ok(Order::Finite(k));
                    }
                    p = &p * self;
                }
                Ok(Order::Infinite)
            }
            _ => Ok(if self.is_one() {
                Order::Finite(1)
            } else if *self == minus_one {
                Order::Finite(2)
            } else {
                Order::Infinite
            }),
        }
    }

    /// Coefficients in the power basis of Q(ζ_N), or the single rational
    /// coefficient for Q.
    pub fn power_basis_coeffs(&self) -> Option<&[BigRational]> {
        match self {
            Scalar::Cyclotomic(_, v) => Some(v),
            Scalar::Rational(r) => Some(std::slice::from_ref(r)),
            Scalar::RationalFunction(_) => None,
        }
    }

    /// Renders as a coefficient: sign split off, and a flag telling whether
    /// the body needs parentheses before `*`.
    pub fn coefficient_parts(&self) -> (bool, String, bool) {
        match self {
            Scalar::Rational(r) => (r.is_negative(), r.abs().to_string(), false),
            _ => {
                let terms = self.term_count();
                if terms == 1 {
                    let s = self.to_string();
                    if let Some(rest) = s.strip_prefix('-') {
                        return (true, rest.to_string(), false);
                    }
                    (false, s, false)
                } else {
                    (false, self.to_string(), true)
                }
            }
        }
    }

    fn term_count(&self) -> usize {
        match self {
            Scalar::Rational(_) => 1,
            Scalar::Cyclotomic(_, v) => v.iter().filter(|c| !c.is_zero()).count().max(1),
            Scalar::RationalFunction(f) => {
                let n = f.num.iter().filter(|c| !c.is_zero()).count().max(1);
                if f.monomial_denominator().is_some() || n == 1 {
                    n
                } else {
                    2
                }
            }
        }
    }
}

fn fmt_poly(coeffs: &[BigRational], var: &str) -> String {
    fmt_shifted(coeffs, var, 0)
}

/// `sum c_i var^(i - shift)`, highest power first.
fn fmt_shifted(coeffs: &[BigRational], var: &str, shift: i64) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        let i = i as i64 - shift;
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Cyclotomic(_, v) => f.write_str(&fmt_poly(v, "zeta")),
            Scalar::RationalFunction(rf) => {
                if let Some((shift, d)) = rf.monomial_denominator() {
                    let coeffs: Vec<BigRational> = rf
                        .num
                        .iter()
                        .map(|c| BigRational::new(c.clone(), d.clone()))
                        .collect();
                    f.write_str(&fmt_shifted(&coeffs, "q", shift as i64))
                } else {
                    let n = fmt_poly(&qpoly::q_from_z(&rf.num), "q");
                    let d = fmt_poly(&qpoly::q_from_z(&rf.den), "q");
                    if rf.num.iter().filter(|c| !c.is_zero()).count() == 1 {
                        write!(f, "{n}*({d})^-1")
                    } else {
                        write!(f, "({n})*({d})^-1")
                    }
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(s) => s,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
