//! q-integers, q-factorials, Gaussian binomials, and the d-adic hat arithmetic
//! used by the coradical filtration.

use num_bigint::BigInt;
use num_traits::One;

use super::qpoly::{self, ZPoly};
use super::{Order, Scalar};
use crate::error::{Error, Result};

/// `(n)_x = 1 + x + ... + x^(n-1)`.
pub fn q_int(n: u32, x: &Scalar) -> Scalar {
    let f = x.field();
    let mut acc = f.zero();
    let mut p = f.one();
    for _ in 0..n {
        acc = &acc + &p;
        p = &p * x;
    }
    acc
}

/// `(n)!_x = (1)_x (2)_x ... (n)_x`.
pub fn q_factorial(n: u32, x: &Scalar) -> Scalar {
    (1..=n).fold(x.field().one(), |acc, j| &acc * &q_int(j, x))
}

/// The Gaussian binomial as an integer polynomial in `q`, built with the
/// Pascal recurrence `[n,i] = [n-1,i-1] + q^i [n-1,i]`.
pub fn q_binomial_poly(n: u32, i: u32) -> Result<Vec<BigInt>> {
    if i > n {
        return Err(Error::InvalidArgument(format!(
            "q_binomial({n}, {i}) with i > n"
        )));
    }
    // row[j] holds [m, j] for the current m
    let mut row: Vec<ZPoly> = vec![vec![BigInt::one()]];
    for m in 1..=n as usize {
        let mut next: Vec<ZPoly> = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j >= 1 {
                row[j - 1].clone()
            } else {
                Vec::new()
            };
            let right = if j < m {
                let mut shifted = vec![BigInt::default(); j];
                shifted.extend(row[j].iter().cloned());
                shifted
            } else {
                Vec::new()
            };
            next.push(qpoly::z_add(&left, &right));
        }
        row = next;
    }
    Ok(row.swap_remove(i as usize))
}

/// The Gaussian binomial evaluated at `x`. Never divides evaluated
/// factorials, so it is exact at roots of unity.
pub fn q_binomial(n: u32, i: u32, x: &Scalar) -> Result<Scalar> {
    let p = q_binomial_poly(n, i)?;
    Ok(x.field().eval_int_poly(&p, x))
}

/// `m = d*q_m + r_m` with `0 <= r_m < d`, and `hat = q_m + r_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HatProfile {
    pub d: Order,
    pub m: u64,
    pub q: u64,
    pub r: u64,
    pub hat: u64,
}

pub fn hat(m: u64, d: Order) -> HatProfile {
    let (q, r) = match d {
        Order::Finite(d) if d > 1 => (m / d, m % d),
        _ => (m, 0),
    };
    HatProfile {
        d,
        m,
        q,
        r,
        hat: q + r,
    }
}

/// The partial order `p ≺ m`: componentwise comparison of `(q, r)`.
pub fn prec(p: u64, m: u64, d: Order) -> bool {
    let hp = hat(p, d);
    let hm = hat(m, d);
    hp.q <= hm.q && hp.r <= hm.r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter()
            .map(|c| i64::try_from(c.clone()).unwrap())
            .collect()
    }

    #[test]
    fn small_binomials() {
        assert_eq!(ints(&q_binomial_poly(2, 1).unwrap()), vec![1, 1]);
        assert_eq!(ints(&q_binomial_poly(4, 2).unwrap()), vec![1, 1, 2, 1, 1]);
        assert_eq!(ints(&q_binomial_poly(5, 0).unwrap()), vec![1]);
        assert_eq!(ints(&q_binomial_poly(5, 5).unwrap()), vec![1]);
        assert!(q_binomial_poly(2, 3).is_err());
    }

    #[test]
    fn vanishes_at_root_of_unity() {
        let c3 = Field::cyclotomic(3).unwrap();
        let z = c3.zeta().unwrap();
        assert!(q_binomial(3, 1, &z).unwrap().is_zero());
        assert!(q_binomial(3, 2, &z).unwrap().is_zero());
        assert!(q_binomial(3, 3, &z).unwrap().is_one());
    }

    #[test]
    fn q_int_and_factorial_generic() {
        let f = Field::rational_function();
        let q = f.param().unwrap();
        assert_eq!(q_int(2, &q), &f.one() + &q);
        assert_eq!(q_int(0, &q), f.zero());
        let fact3 = q_factorial(3, &q);
        // (1)(1+q)(1+q+q^2)
        let expect = &(&f.one() + &q) * &q_int(3, &q);
        assert_eq!(fact3, expect);
    }

    #[test]
    fn hat_examples() {
        let h = hat(5, Order::Infinite);
        assert_eq!((h.q, h.r, h.hat), (5, 0, 5));
        let h = hat(7, Order::Finite(3));
        assert_eq!((h.q, h.r, h.hat), (2, 1, 3));
        let h = hat(0, Order::Finite(4));
        assert_eq!((h.q, h.r, h.hat), (0, 0, 0));
        let h = hat(6, Order::Finite(1));
        assert_eq!((h.q, h.r, h.hat), (6, 0, 6));
    }

    #[test]
    fn prec_examples() {
        assert!(prec(4, 7, Order::Finite(3)));
        assert!(!prec(2, 7, Order::Finite(3)));
        for p in 0..10 {
            for m in 0..10 {
                assert_eq!(prec(p, m, Order::Infinite), p <= m);
            }
        }
    }
}
