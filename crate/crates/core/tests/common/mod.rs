//! Reference values computed independently of the library, straight from
//! the defining sums.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

pub fn parse(s: &str) -> Q {
    match s.split_once('/') {
        Some((a, b)) => q(a.parse().unwrap(), b.parse().unwrap()),
        None => q(s.parse().unwrap(), 1),
    }
}

pub fn samples() -> Vec<Q> {
    ["-1", "-1/2", "1/3", "1/2", "1"]
        .iter()
        .map(|s| parse(s))
        .collect()
}

pub fn choose(n: u64, k: u64) -> Q {
    if k > n {
        return Q::zero();
    }
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_integer(c)
}

pub fn h(n: u64, order: u32) -> Q {
    (1..=n)
        .map(|k| Q::one() / Q::from_integer(BigInt::from(k).pow(order)))
        .sum()
}

fn powq(x: &Q, e: u64) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * x)
}

/// `sum_j j^p H_j C(n,j)^r z^j`
pub fn s(n: u64, p: u32, r: u32, z: &Q) -> Q {
    (1..=n)
        .map(|j| q(j.pow(p) as i64, 1) * h(j, 1) * powq(&choose(n, j), r as u64) * powq(z, j))
        .sum()
}

/// `sum_j H_j^(q) C(n,j) z^j`
pub fn s_order(n: u64, order: u32, z: &Q) -> Q {
    (1..=n)
        .map(|j| h(j, order) * choose(n, j) * powq(z, j))
        .sum()
}

/// `sum_{m=2}^n C(n,m) H_M^(m) z^m`
pub fn order_sum(n: u64, big_m: u64, z: &Q) -> Q {
    (2..=n)
        .map(|m| choose(n, m) * h(big_m, m as u32) * powq(z, m))
        .sum()
}

/// `sum_{m=2}^n C(n,m) H_M^(m) u^m/(m+1)`
pub fn integrated_order_sum(n: u64, big_m: u64, u: &Q) -> Q {
    (2..=n)
        .map(|m| choose(n, m) * h(big_m, m as u32) * powq(u, m) / q(m as i64 + 1, 1))
        .sum()
}

/// `(2 H_n - H_{2n}) C(2n, n)`
pub fn squared_binomial_closed(n: u64) -> Q {
    (q(2, 1) * h(n, 1) - h(2 * n, 1)) * choose(2 * n, n)
}

pub fn to_f64(x: &Q) -> f64 {
    x.numer().to_string().parse::<f64>().unwrap() / x.denom().to_string().parse::<f64>().unwrap()
}
