//! Recursions in `n` for `S_n^{(p)}(z)` and in `M` for the order sums.
//!
//! None of these routines call the brute-force oracle; the tests compare
//! against it.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, int, pow, serde_rational, Rational};
use crate::hypergeom::pfq_polynomial;

/// Audit trail of a recursion: the value at each index from the base case
/// up to the target.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecursionTrace {
    pub method: &'static str,
    pub entries: Vec<TraceEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceEntry {
    pub index: u64,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

impl RecursionTrace {
    fn new(method: &'static str) -> Self {
        RecursionTrace {
            method,
            entries: Vec::new(),
        }
    }

    fn push(&mut self, index: u64, value: Rational) {
        self.entries.push(TraceEntry { index, value });
    }

    pub fn last(&self) -> Option<&Rational> {
        self.entries.last().map(|e| &e.value)
    }
}

fn binom(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k as i64))
}

fn require_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("recursion needs n >= 1"));
    }
    Ok(())
}

/// `S_{k+1}(z) = (1+z) S_k(z) + ((1+z)^{k+1} - 1)/(k+1)`, `S_1(z) = z`.
pub fn s_recursive_trace(n: u64, z: &Rational) -> Result<RecursionTrace> {
    require_n(n)?;
    let one_plus_z = Rational::one() + z;
    let mut trace = RecursionTrace::new("first-order");
    let mut s = z.clone();
    let mut power = one_plus_z.clone();
    trace.push(1, s.clone());
    for k in 1..n {
        power *= &one_plus_z;
        s = &one_plus_z * &s + (&power - Rational::one()) / int(k as i64 + 1);
        trace.push(k + 1, s.clone());
    }
    Ok(trace)
}

pub fn s_recursive(n: u64, z: &Rational) -> Result<Rational> {
    Ok(s_recursive_trace(n, z)?
        .last()
        .cloned()
        .expect("n >= 1 entries"))
}

/// The `z = 1` case: `S_{k+1}(1) = 2 S_k(1) + (2^{k+1} - 1)/(k+1)`.
pub fn s_at_one_recursive(n: u64) -> Result<Rational> {
    require_n(n)?;
    let mut s = Rational::one();
    let mut two_pow = int(2);
    for k in 1..n {
        two_pow *= int(2);
        s = int(2) * s + (&two_pow - Rational::one()) / int(k as i64 + 1);
    }
    Ok(s)
}

/// Kernel of the order-`ell` term in the coupled recursion at step `k`:
/// `F_ell = (ell+1)F_ell(2,...,2,1-k; 1,...,1,3; -z)` for `ell >= 1`,
/// `F_0 = 2F1(1, 1-k; 3; -z)`.
fn coupled_kernel(ell: u32, k: u64, z: &Rational) -> Result<Rational> {
    let top = int(1 - k as i64);
    let (nums, dens) = if ell == 0 {
        (vec![int(1), top], vec![int(3)])
    } else {
        let mut nums = vec![int(2); ell as usize];
        nums.push(top);
        let mut dens = vec![int(1); ell as usize - 1];
        dens.push(int(3));
        (nums, dens)
    };
    Ok(pfq_polynomial(&nums, &dens)?.eval(&-z))
}

/// All orders `S_n^{(0..=p)}(z)` from the coupled upward recursion
/// `S_{k+1}^{(p)} = (1+z) S_k^{(p)} + z sum_{l<p} C(p,l) S_k^{(l)} + z
///   + (k/2) z^2 sum_{l<=p} C(p,l) F_l`, starting from `S_1^{(l)} = z`.
pub fn sp_coupled_all_orders(n: u64, p: u32, z: &Rational) -> Result<Vec<Rational>> {
    require_n(n)?;
    let mut s = vec![z.clone(); p as usize + 1];
    let z2_half = z * z / int(2);
    for k in 1..n {
        let kernels = (0..=p)
            .map(|ell| coupled_kernel(ell, k, z))
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::with_capacity(s.len());
        for order in 0..=p as u64 {
            let lower: Rational = (0..order).map(|l| binom(order, l) * &s[l as usize]).sum();
            let hyper: Rational = (0..=order)
                .map(|l| binom(order, l) * &kernels[l as usize])
                .sum();
            next.push(
                (Rational::one() + z) * &s[order as usize]
                    + z * lower
                    + z
                    + int(k as i64) * &z2_half * hyper,
            );
        }
        s = next;
    }
    Ok(s)
}

pub fn sp_coupled(n: u64, p: u32, z: &Rational) -> Result<Rational> {
    Ok(sp_coupled_all_orders(n, p, z)?.pop().expect("p + 1 orders"))
}

/// The `z = 1` form of [`sp_coupled`].
pub fn sp_coupled_at_one(n: u64, p: u32) -> Result<Rational> {
    sp_coupled(n, p, &Rational::one())
}

/// `beta_n(p, z) = sum_{j=1}^n j^{p-1} C(n-1, j-1) z^j / j`, from its
/// terminating hypergeometric form.
pub fn beta(n: u64, p: u32, z: &Rational) -> Result<Rational> {
    require_n(n)?;
    if p == 0 {
        return Err(Error::invalid("beta needs p >= 1"));
    }
    let top = int(1 - n as i64);
    let poly = if p == 1 {
        pfq_polynomial(&[int(1), top], &[int(2)])?
    } else {
        let mut nums = vec![int(2); p as usize - 2];
        nums.push(top);
        pfq_polynomial(&nums, &vec![int(1); p as usize - 2])?
    };
    Ok(z * poly.eval(&-z))
}

/// `S_n^{(p)}(z) = n z sum_{l<p} C(p-1, l) S_{n-1}^{(l)}(z) + n beta_n(p, z)`,
/// tabulated bottom-up; the order-0 column comes from [`s_recursive_trace`].
pub fn sp_descending(n: u64, p: u32, z: &Rational) -> Result<Rational> {
    require_n(n)?;
    if p == 0 {
        return Err(Error::invalid("descending recursion needs p >= 1"));
    }
    let order0 = s_recursive_trace(n, z)?;
    // row[l] = S_{k}^{(l)}(z); start at k = 0 where every sum is empty
    let mut row = vec![Rational::zero(); p as usize + 1];
    for k in 1..=n {
        let mut next = vec![order0.entries[k as usize - 1].value.clone()];
        for order in 1..=p {
            let lower: Rational = (0..order)
                .map(|l| binom(order as u64 - 1, l as u64) * &row[l as usize])
                .sum();
            let nk = int(k as i64);
            next.push(&nk * z * lower + nk * beta(k, order, z)?);
        }
        row = next;
    }
    Ok(row.pop().expect("p + 1 orders"))
}

/// `S_n(M+1, z) = S_n(M, z) - 1 - n z/(M+1) + (1 + z/(M+1))^n`
/// from `S_n(1, z) = (1+z)^n - n z - 1`.
pub fn order_sum_recursive_trace(n: u64, big_m: u64, z: &Rational) -> Result<RecursionTrace> {
    if n < 2 {
        return Err(Error::invalid("order sums need n >= 2"));
    }
    if big_m == 0 {
        return Err(Error::invalid("order sums need M >= 1"));
    }
    let nn = int(n as i64);
    let mut trace = RecursionTrace::new("order-sum-M");
    let mut s = pow(&(Rational::one() + z), n as i64)? - &nn * z - Rational::one();
    trace.push(1, s.clone());
    for m in 2..=big_m {
        let step = z / int(m as i64);
        s += pow(&(Rational::one() + &step), n as i64)? - Rational::one() - &nn * step;
        trace.push(m, s.clone());
    }
    Ok(trace)
}

pub fn order_sum_recursive(n: u64, big_m: u64, z: &Rational) -> Result<Rational> {
    Ok(order_sum_recursive_trace(n, big_m, z)?
        .last()
        .cloned()
        .expect("M >= 1 entries"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::oracle::{order_sum, s_simple, OrderSumSpec};

    fn z_set() -> Vec<Rational> {
        vec![int(-1), rat(-1, 2), rat(1, 3), rat(1, 2), int(1)]
    }

    #[test]
    fn examples() {
        let z = rat(2, 7);
        assert_eq!(s_recursive(1, &z).unwrap(), z);
        assert_eq!(s_recursive(2, &int(1)).unwrap(), rat(7, 2));
        assert_eq!(s_recursive(3, &int(1)).unwrap(), rat(28, 3));
        for p in 0..4 {
            assert_eq!(sp_coupled(1, p, &z).unwrap(), z);
        }
        assert_eq!(sp_coupled(2, 1, &int(1)).unwrap(), int(5));
        assert_eq!(sp_coupled(2, 2, &int(1)).unwrap(), int(8));
        assert_eq!(sp_descending(2, 1, &int(1)).unwrap(), int(5));
        assert_eq!(sp_descending(1, 1, &z).unwrap(), z);
        assert_eq!(sp_descending(3, 2, &int(1)).unwrap(), rat(75, 2));
        assert_eq!(beta(1, 3, &z).unwrap(), z);
        assert_eq!(beta(2, 2, &int(1)).unwrap(), int(2));
        assert_eq!(order_sum_recursive(2, 2, &int(1)).unwrap(), rat(5, 4));
        assert_eq!(order_sum_recursive(3, 2, &int(1)).unwrap(), rat(39, 8));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(s_recursive(0, &int(1)).is_err());
        assert!(sp_descending(3, 0, &int(1)).is_err());
        assert!(beta(3, 0, &int(1)).is_err());
        assert!(order_sum_recursive(1, 3, &int(1)).is_err());
        assert!(order_sum_recursive(3, 0, &int(1)).is_err());
    }

    #[test]
    fn beta_matches_its_sum() {
        for n in 1..=12u64 {
            for p in 1..=5u32 {
                for z in z_set() {
                    let direct: Rational = (1..=n)
                        .map(|j| {
                            int(j as i64).pow(p as i32 - 1)
                                * binom(n - 1, j - 1)
                                * pow(&z, j as i64).unwrap()
                                / int(j as i64)
                        })
                        .sum();
                    assert_eq!(beta(n, p, &z).unwrap(), direct, "n={n} p={p} z={z}");
                }
            }
            let z = rat(3, 5);
            let expected =
                (pow(&(Rational::one() + &z), n as i64).unwrap() - Rational::one()) / int(n as i64);
            assert_eq!(beta(n, 1, &z).unwrap(), expected);
        }
    }

    #[test]
    fn prop1_matches_oracle() {
        for z in z_set() {
            let trace = s_recursive_trace(40, &z).unwrap();
            for entry in &trace.entries {
                assert_eq!(entry.value, s_simple(entry.index, 0, &z).unwrap());
            }
        }
        for n in 1..=40 {
            assert_eq!(
                s_at_one_recursive(n).unwrap(),
                s_recursive(n, &int(1)).unwrap()
            );
        }
    }

    #[test]
    fn higher_orders_match_oracle() {
        for z in z_set() {
            for n in 1..=25u64 {
                let all = sp_coupled_all_orders(n, 4, &z).unwrap();
                for p in 0..=4u32 {
                    let oracle = s_simple(n, p, &z).unwrap();
                    assert_eq!(all[p as usize], oracle, "coupled n={n} p={p} z={z}");
                    if p >= 1 {
                        assert_eq!(
                            sp_descending(n, p, &z).unwrap(),
                            oracle,
                            "descending n={n} p={p} z={z}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn order_sum_matches_oracle() {
        for z in z_set() {
            for n in 2..=30u64 {
                let trace = order_sum_recursive_trace(n, 30, &z).unwrap();
                for entry in trace.entries.iter().step_by(7) {
                    let spec = OrderSumSpec::plain(n, entry.index, z.clone());
                    assert_eq!(
                        entry.value,
                        order_sum(&spec).unwrap(),
                        "n={n} M={} z={z}",
                        entry.index
                    );
                }
            }
        }
    }
}
