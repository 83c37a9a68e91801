//! Dense univariate polynomial helpers over Q and Z, coefficients stored low
//! degree first. Internal to the scalar layer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type QPoly = Vec<BigRational>;
pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn q_from_z(p: &[BigInt]) -> QPoly {
    p.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

pub(crate) fn q_add(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub(crate) fn q_neg(a: &[BigRational]) -> QPoly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn q_sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    q_add(a, &q_neg(b))
}

pub(crate) fn q_mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn q_divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn q_monic(a: &[BigRational]) -> QPoly {
    match a.last() {
        None => Vec::new(),
        Some(l) => a.iter().map(|c| c / l).collect(),
    }
}

/// Monic gcd.
pub(crate) fn q_gcd(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = q_divrem(&x, &y);
        x = y;
        y = r;
    }
    q_monic(&x)
}

/// Returns `s` with `s * a ≡ 1 (mod m)`, or `None` when `a` is not a unit.
pub(crate) fn q_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<QPoly> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = q_divrem(&r0, &r1);
        let s2 = q_sub(&s0, &q_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let inv = &r0[0];
    Some(s0.iter().map(|c| c / inv).collect())
}

pub(crate) fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn z_add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn z_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Scales a pair of rational polynomials to integer polynomials with joint
/// content 1 and a positive leading coefficient on the second.
pub(crate) fn z_normalize_pair(num: &[BigRational], den: &[BigRational]) -> (ZPoly, ZPoly) {
    let lcm = num
        .iter()
        .chain(den.iter())
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let scale =
        |p: &[BigRational]| -> ZPoly { p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect() };
    let mut n = scale(num);
    let mut d = scale(den);
    let g = z_content(&n).gcd(&z_content(&d));
    if !g.is_zero() && !g.is_one() {
        n.iter_mut().for_each(|c| *c /= &g);
        d.iter_mut().for_each(|c| *c /= &g);
    }
    if d.last().is_some_and(Signed::is_negative) {
        n.iter_mut().for_each(|c| *c = -&*c);
        d.iter_mut().for_each(|c| *c = -&*c);
    }
    trim(&mut n);
    trim(&mut d);
    (n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> QPoly {
        v.iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x+3)
        let a = q(&[-2, 1, 1]);
        let b = q(&[-3, 2, 1]);
        assert_eq!(q_gcd(&a, &b), q(&[-1, 1]));
    }

    #[test]
    fn inverse_mod_cyclotomic() {
        // x in Q[x]/(x^2+1): inverse is -x
        let m = q(&[1, 0, 1]);
        let inv = q_inverse_mod(&q(&[0, 1]), &m).unwrap();
        assert_eq!(inv, q(&[0, -1]));
        assert!(q_inverse_mod(&q(&[1, 0, 1]), &m).is_none());
    }
}
