//! Dense univariate polynomials over the rationals and reduced rational
//! functions built on top of them.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and two polynomials are equal exactly
//! when their coefficient vectors are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, int, Integer, Rational};
use crate::ring::{Field, Ring};

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, other: $t) -> $t {
                &self + &other
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, other: $t) -> $t {
                &self - &other
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, other: $t) -> $t {
                &self * &other
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(int(c)))
                .collect(),
        )
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `a + b x`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// `self(x + shift)`.
    pub fn shift(&self, shift: &Rational) -> Self {
        let step = Polynomial::linear(shift.clone(), Rational::one());
        self.compose(&step)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::default(), |acc, c| {
                &(&acc * inner) + &Polynomial::constant(c.clone())
            })
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Polynomial::default(), Polynomial::default()));
        };
        if sd < dd {
            return Ok((Polynomial::default(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "inexact polynomial division, remainder {}",
                r.render()
            )));
        }
        Ok(q)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{}", self.render())
    }
}

/// Human-oriented rendering in the variable `x`, highest degree first.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = d == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

forward_owned_ops!(Polynomial);

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::constant(Rational::one())
    }
}

impl Ring for Polynomial {
    fn from_integer(n: &Integer) -> Self {
        Polynomial::constant(Rational::from_integer(n.clone()))
    }
    fn render(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }
}

/// Monic greatest common divisor over the rationals.
///
/// Runs a primitive remainder sequence on integer images of the inputs, which
/// keeps coefficient growth in check where plain Euclid over the rationals
/// would blow up.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("gcd(0, 0) is undefined"));
    }
    let (mut x, mut y) = (primitive_part(a), primitive_part(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_int(r);
    }
    let lc = Rational::from_integer(x.last().expect("nonzero gcd").clone());
    Ok(Polynomial::new(
        x.into_iter()
            .map(|c| Rational::from_integer(c) / &lc)
            .collect(),
    ))
}

/// Integer coefficients with unit content, same roots as `p`.
fn primitive_part(p: &Polynomial) -> Vec<Integer> {
    let lcm = p
        .coeffs
        .iter()
        .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_int(ints)
}

fn primitive_int(mut v: Vec<Integer>) -> Vec<Integer> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let content = v.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in v.iter_mut() {
            *c /= &content;
        }
    }
    v
}

/// Remainder of `lc(b)^(deg a - deg b + 1) a` on division by `b`, over the integers.
fn pseudo_rem(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

/// `x(x-1)...(x-k+1)` expanded; the coefficient of `x^j` is `s(k, j)`.
pub fn falling_factorial_poly(k: i64) -> Result<Polynomial> {
    if k < 1 {
        return Err(Error::domain(format!(
            "falling factorial polynomial needs k >= 1, got {k}"
        )));
    }
    Ok(falling_factorial_of(&Polynomial::x(), k as u64))
}

fn falling_factorial_of(p: &Polynomial, k: u64) -> Polynomial {
    let mut acc = Polynomial::one();
    let mut factor = p.clone();
    for _ in 0..k {
        acc = &acc * &factor;
        factor = &factor - &Polynomial::one();
    }
    acc
}

/// `C(P, k) = P(P-1)...(P-k+1) / k!` as a polynomial.
pub fn poly_binomial(p: &Polynomial, k: i64) -> Result<Polynomial> {
    if k < 0 {
        return Err(Error::domain(format!(
            "poly_binomial needs k >= 0, got {k}"
        )));
    }
    let k = k as u64;
    let inv = Rational::new(Integer::one(), factorial(k));
    Ok(falling_factorial_of(p, k).scale(&inv))
}

/// The m-th forward difference `sum_j (-1)^(m-j) C(m, j) P(x + j)`.
pub fn finite_difference(p: &Polynomial, m: i64) -> Result<Polynomial> {
    if m < 0 {
        return Err(Error::domain(format!(
            "finite difference order must be >= 0, got {m}"
        )));
    }
    let mut acc = Polynomial::default();
    for j in 0..=m {
        let c = Rational::from_integer(binomial(&int(m), j));
        let term = p.shift(&Rational::from_integer(int(j))).scale(&c);
        acc = if (m - j) % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}

/// A quotient of polynomials kept in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Polynomial::default()));
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lc_inv = den.leading().expect("nonzero denominator").recip();
        Ok(RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Value at a point where the denominator does not vanish.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at) / d)
    }

    // Both operands are already reduced, so only cross factors can cancel.
    fn mul_reduced(&self, other: &Self) -> Self {
        let g1 = gcd_or_one(&self.num, &other.den);
        let g2 = gcd_or_one(&other.num, &self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = other.den.exact_div(&g1).expect("gcd divides");
        let c = other.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        let num = &a * &c;
        let den = &b * &d;
        let lc_inv = den.leading().expect("nonzero denominator").recip();
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }
}

fn gcd_or_one(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        // gcd(0, b) = b, and b is a reduced denominator here
        return b.monic();
    }
    poly_gcd(a, b).expect("not both zero")
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction{}", self.render())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("num", &self.num)?;
        map.serialize_entry("den", &self.den)?;
        map.end()
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, other: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // With a/b and c/d reduced and g = gcd(b, d), any factor shared by the
        // new numerator and b d / g already divides g.
        let g = poly_gcd(&self.den, &other.den).expect("nonzero denominators");
        let b_g = self.den.exact_div(&g).expect("gcd divides");
        let d_g = other.den.exact_div(&g).expect("gcd divides");
        let mut num = &(&self.num * &d_g) + &(&other.num * &b_g);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let mut den = &self.den * &d_g;
        let mut rest = g;
        while rest.degree().unwrap_or(0) > 0 {
            let common = poly_gcd(&num, &rest).expect("nonzero");
            if common.degree() == Some(0) {
                break;
            }
            num = num.exact_div(&common).expect("gcd divides");
            den = den.exact_div(&common).expect("gcd divides");
            rest = rest.exact_div(&common).expect("gcd divides");
        }
        let lc_inv = den.leading().expect("nonzero denominator").recip();
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, other: &RationalFunction) -> RationalFunction {
        self + &(-other)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, other: &RationalFunction) -> RationalFunction {
        if self.is_zero() || other.is_zero() {
            return RationalFunction::zero();
        }
        self.mul_reduced(other)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned_ops!(RationalFunction);

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Polynomial::default())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl Ring for RationalFunction {
    fn from_integer(n: &Integer) -> Self {
        Self::from_poly(Polynomial::from_integer(n))
    }
    fn render(&self) -> String {
        serde_json::to_string(self).expect("rational function serializes")
    }
}

impl Field for RationalFunction {
    fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.recip()?)
    }

    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Polynomial::constant(q.clone()))
    }
}
