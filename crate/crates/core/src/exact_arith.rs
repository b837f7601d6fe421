//! Arbitrary-precision scalars and the binomial primitives built on them.
//!
//! The binomial coefficient here is the generalized one: any integer top,
//! `C(m, k) = m(m-1)...(m-k+1) / k!` for `k >= 0` and `0` for `k < 0`. With a
//! single total definition, `C(-n, k) = (-1)^k C(n+k-1, k)` comes for free and
//! summation code never needs boundary guards.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Integer {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(k: u64) -> Integer {
    (1..=k).fold(Integer::one(), |acc, j| acc * j)
}

fn falling_factorial_int(m: &Integer, k: u64) -> Integer {
    let mut acc = Integer::one();
    let mut factor = m.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Integer::zero();
        }
        acc *= &factor;
        factor -= 1;
    }
    acc
}

/// Generalized binomial coefficient `C(m, k)`, defined for every integer `m`.
pub fn binomial(m: &Integer, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    let k = k as u64;
    // Symmetry keeps the product short for large nonnegative tops.
    let k = if !m.is_negative() && *m >= BigInt::from(k) {
        let other = m - BigInt::from(k);
        match u64::try_from(&other) {
            Ok(o) if o < k => o,
            _ => k,
        }
    } else {
        k
    };
    let num = falling_factorial_int(m, k);
    let (q, r) = num.div_rem(&factorial(k));
    debug_assert!(r.is_zero());
    q
}

pub fn binom(m: i64, k: i64) -> Integer {
    binomial(&int(m), k)
}

/// Number of `k`-multisets drawn from `n` kinds, `C(n+k-1, k)`.
pub fn multichoose(n: &Integer, k: i64) -> Result<Integer> {
    if k < 0 {
        return Err(Error::domain(format!("multichoose needs k >= 0, got {k}")));
    }
    Ok(binomial(&(n + k - 1), k))
}

/// `x(x-1)...(x-k+1)`; the empty product is 1.
pub fn falling_factorial(x: &Rational, k: i64) -> Result<Rational> {
    if k < 0 {
        return Err(Error::domain(format!(
            "falling factorial needs k >= 0, got {k}"
        )));
    }
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..k {
        acc *= &factor;
        factor -= Rational::one();
    }
    Ok(acc)
}

/// Integer power with the convention `0^0 = 1`.
pub fn pow(base: &Integer, exp: u32) -> Integer {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn pow_rat(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Parses `"p/q"` or a bare integer into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Integer = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let den: Integer = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}
