//! Signed Stirling numbers of the first kind and the identities they satisfy.
//!
//! `s(n, t)` is the coefficient of `x^t` in `x(x-1)...(x-n+1)`, built row by
//! row from `s(n, t) = s(n-1, t-1) - (n-1) s(n-1, t)` with `s(0, 0) = 1`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{binom, int, pow, sign, Integer};
use crate::poly::falling_factorial_poly;
use crate::ring::Sides;

/// Rows `0..=n_max` of the triangle; immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct StirlingTable {
    rows: Vec<Vec<Integer>>,
}

impl StirlingTable {
    pub fn build(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![Integer::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let m = int(n as i64 - 1);
            let row: Vec<Integer> = (0..=n)
                .map(|t| {
                    let diag = if t >= 1 {
                        prev[t - 1].clone()
                    } else {
                        Integer::zero()
                    };
                    let up = prev.get(t).cloned().unwrap_or_default();
                    diag - &m * up
                })
                .collect();
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `s(n, t)`, zero outside `0 <= t <= n`. Panics if `n` exceeds the table.
    pub fn get(&self, n: i64, t: i64) -> Integer {
        assert!(
            n <= self.n_max() as i64,
            "row {n} beyond table size {}",
            self.n_max()
        );
        if n < 0 || t < 0 || t > n {
            return Integer::zero();
        }
        self.rows[n as usize][t as usize].clone()
    }

    /// `s(n, 1), ..., s(n, n)`.
    pub fn row(&self, n: usize) -> &[Integer] {
        &self.rows[n][1.min(n)..]
    }
}

pub fn stirling1(n: i64, t: i64) -> Result<Integer> {
    if n < 1 {
        return Err(Error::domain(format!("stirling1 needs n >= 1, got {n}")));
    }
    Ok(StirlingTable::build(n as usize).get(n, t))
}

fn check_t_in_1_k(k: i64, t: i64) -> Result<()> {
    if t < 1 || t > k {
        return Err(Error::domain(format!(
            "need 1 <= t <= k, got t = {t}, k = {k}"
        )));
    }
    Ok(())
}

/// `sum_{j=t+1}^{k} C(j, t) s(k, j) = k s(k-1, t)` for `1 <= t <= k`.
pub fn check_upper_row_sum(k: i64, t: i64) -> Result<Sides<Integer>> {
    check_t_in_1_k(k, t)?;
    let table = StirlingTable::build(k as usize);
    let lhs = (t + 1..=k).map(|j| binom(j, t) * table.get(k, j)).sum();
    let rhs = int(k) * table.get(k - 1, t);
    Ok(Sides::new(lhs, rhs))
}

/// `sum_{j=t}^{k} C(j, t) s(k, j) (k-1)^(j-t) = (-1)^(k+t) s(k, t)`, with
/// `0^0 = 1` so that `k = 1` holds.
pub fn check_shifted_row_sum(k: i64, t: i64) -> Result<Sides<Integer>> {
    check_t_in_1_k(k, t)?;
    let table = StirlingTable::build(k as usize);
    let base = int(k - 1);
    let lhs = (t..=k)
        .map(|j| binom(j, t) * table.get(k, j) * pow(&base, (j - t) as u32))
        .sum();
    let rhs = int(sign(k + t)) * table.get(k, t);
    Ok(Sides::new(lhs, rhs))
}

/// The double sum
/// `sum_{r=t}^{k} (-1)^r C(r, t) s(k, r) sum_{i=0}^{k} (-1)^i C(k+1, i+1) i^r`
/// against `s(k, t) + k s(k-1, t)`. The inner sum is evaluated term by term,
/// not replaced by its closed value `(-1)^r`.
pub fn check_power_double_sum(k: i64, t: i64) -> Result<Sides<Integer>> {
    check_t_in_1_k(k, t)?;
    let table = StirlingTable::build(k as usize);
    let inner = |r: i64| -> Integer {
        (0..=k)
            .map(|i| int(sign(i)) * binom(k + 1, i + 1) * pow(&int(i), r as u32))
            .sum()
    };
    let lhs = (t..=k)
        .map(|r| int(sign(r)) * binom(r, t) * table.get(k, r) * inner(r))
        .sum();
    let rhs = table.get(k, t) + int(k) * table.get(k - 1, t);
    Ok(Sides::new(lhs, rhs))
}

/// `s(n, t) sum_{i=1}^{n} (-1)^(i-1) C(n, i) i^(t-1)` against zero, `t >= 2`.
pub fn check_power_sum_vanishes(n: i64, t: i64) -> Result<Sides<Integer>> {
    if n < 1 {
        return Err(Error::domain(format!("need n >= 1, got {n}")));
    }
    if t < 2 {
        return Err(Error::domain(format!("need t >= 2, got {t}")));
    }
    let table = StirlingTable::build(n as usize);
    let s = table.get(n, t);
    let lhs = if s.is_zero() {
        Integer::zero()
    } else {
        let sum: Integer = (1..=n)
            .map(|i| int(sign(i - 1)) * binom(n, i) * pow(&int(i), (t - 1) as u32))
            .sum();
        s * sum
    };
    Ok(Sides::new(lhs, Integer::zero()))
}

/// Expands `x(x-1)...(x-n+1)` and compares it coefficientwise with row `n`.
pub fn verify_generating_poly(n: i64) -> Result<bool> {
    if n < 1 {
        return Err(Error::domain(format!("need n >= 1, got {n}")));
    }
    let poly = falling_factorial_poly(n)?;
    let table = StirlingTable::build(n as usize);
    Ok((0..=n).all(|j| {
        poly.coeff(j as usize) == crate::exact_arith::Rational::from_integer(table.get(n, j))
    }))
}
