//! Elementary and complete symmetric sequences.
//!
//! Only the sequences `e_1, e_2, ...` and `h_1, h_2, ...` matter here, not the
//! variables behind them. They determine each other through
//! `sum_{i=0}^{m} (-1)^i e_i h_{m-i} = 0`, which can be evaluated three ways:
//! as a Toeplitz determinant, by the convolution recurrence, or by the
//! composition transform. The catalog at the bottom lists closed-form pairs
//! `(e_k, h_k)` that are dual in this sense.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, int, multichoose, pow_rat, Integer, Rational};
use crate::poly::{Polynomial, RationalFunction};
use crate::ring::{Field, Ring};

/// Determinant by Gaussian elimination over a field.
pub fn determinant<F: Field>(mut m: Vec<Vec<F>>) -> Result<F> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::domain("determinant needs a square matrix"));
    }
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(F::zero());
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].try_div(&pivot)?;
            let (upper, lower) = m.split_at_mut(r);
            for (target, source) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target = target.clone() - factor.clone() * source.clone();
            }
        }
    }
    Ok(det)
}

/// The `k x k` matrix with first row `a_1 .. a_k`, ones on the subdiagonal, and
/// `a_{j-i+1}` at `(i, j)` (zero below the subdiagonal).
pub fn toeplitz_matrix<F: Field>(seq: &[F]) -> Vec<Vec<F>> {
    let k = seq.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let idx = j as i64 - i as i64 + 1;
                    match idx {
                        i64::MIN..=-1 => F::zero(),
                        0 => F::one(),
                        _ => seq[idx as usize - 1].clone(),
                    }
                })
                .collect()
        })
        .collect()
}

fn nonempty<T>(seq: &[T]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::domain("need at least one term"));
    }
    Ok(())
}

/// `h_k` from `e_1 .. e_k` as a Toeplitz determinant.
pub fn h_from_e_det<F: Field>(e: &[F]) -> Result<F> {
    nonempty(e)?;
    determinant(toeplitz_matrix(e))
}

/// `e_k` from `h_1 .. h_k`; the same determinant with the roles swapped.
pub fn e_from_h_det<F: Field>(h: &[F]) -> Result<F> {
    nonempty(h)?;
    determinant(toeplitz_matrix(h))
}

/// `h_1 .. h_k` from `e_1 .. e_k` by `h_m = sum_{i=1}^{m} (-1)^(i-1) e_i h_{m-i}`.
pub fn h_from_e_conv<R: Ring>(e: &[R]) -> Vec<R> {
    let mut h: Vec<R> = Vec::with_capacity(e.len() + 1);
    h.push(R::one());
    for m in 1..=e.len() {
        let mut acc = R::zero();
        for i in 1..=m {
            let term = e[i - 1].clone() * h[m - i].clone();
            acc = acc + term.signed(i as i64 - 1);
        }
        h.push(acc);
    }
    h.remove(0);
    h
}

/// Inverse of [`h_from_e_conv`]; the relation is symmetric in `e` and `h`.
pub fn e_from_h_conv<R: Ring>(h: &[R]) -> Vec<R> {
    h_from_e_conv(h)
}

/// `B_0 .. B_max` with `B_1 = -1/2`, from `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_table(max: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(max + 1);
    b.push(Rational::one());
    for m in 1..=max {
        let mi = m as i64;
        let s: Rational = (0..m)
            .map(|j| Rational::from_integer(binomial(&int(mi + 1), j as i64)) * &b[j])
            .sum();
        b.push(-s / Rational::from_integer(int(mi + 1)));
    }
    b
}

pub fn bernoulli(m: i64) -> Result<Rational> {
    if m < 0 {
        return Err(Error::domain(format!("bernoulli needs m >= 0, got {m}")));
    }
    Ok(bernoulli_table(m as usize).pop().expect("nonempty"))
}

fn one_minus_q_pow(e: usize) -> Polynomial {
    Polynomial::one() - Polynomial::monomial(Rational::one(), e)
}

/// `(1-q)(1-q^2)...(1-q^k)`, with `phi(0) = 1`.
pub fn phi(k: i64) -> Result<Polynomial> {
    if k < 0 {
        return Err(Error::domain(format!("phi needs k >= 0, got {k}")));
    }
    Ok((1..=k as usize).fold(Polynomial::one(), |acc, i| acc * one_minus_q_pow(i)))
}

/// Gaussian binomial `[n, k]_q`, a polynomial of degree `k(n-k)` in `q`.
pub fn gaussian_binomial(n: i64, k: i64) -> Result<Polynomial> {
    if n < 0 || k < 0 {
        return Err(Error::domain(format!(
            "gaussian binomial needs n, k >= 0, got n = {n}, k = {k}"
        )));
    }
    if k > n {
        return Ok(Polynomial::zero());
    }
    // [n, i] = [n, i-1] (1 - q^(n-i+1)) / (1 - q^i); every partial result is a polynomial.
    let mut acc = Polynomial::one();
    for i in 1..=k {
        acc = (acc * one_minus_q_pow((n - i + 1) as usize))
            .exact_div(&one_minus_q_pow(i as usize))?;
    }
    Ok(acc)
}

/// `q^(k(k-1)/2)`.
fn q_triangle(k: usize) -> Polynomial {
    Polynomial::monomial(Rational::one(), k * (k.saturating_sub(1)) / 2)
}

/// Paired sequences `e_1..e_k` and `h_1..h_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct EhPair<R> {
    pub e: Vec<R>,
    pub h: Vec<R>,
}

impl<R: Ring> EhPair<R> {
    fn build(
        k: usize,
        mut e: impl FnMut(usize) -> Result<R>,
        mut h: impl FnMut(usize) -> Result<R>,
    ) -> Result<Self> {
        if k < 1 {
            return Err(Error::domain("pair terms need k >= 1"));
        }
        Ok(EhPair {
            e: (1..=k).map(&mut e).collect::<Result<_>>()?,
            h: (1..=k).map(&mut h).collect::<Result<_>>()?,
        })
    }
}

/// `e_k = C(n, k)`, `h_k = C(n+k-1, k)`.
pub fn binomial_pair(n: &Integer, k: usize) -> Result<EhPair<Integer>> {
    EhPair::build(
        k,
        |i| Ok(binomial(n, i as i64)),
        |i| multichoose(n, i as i64),
    )
}

/// `e_k = a(a-k)^(k-1)/k!`, `h_k = a(a+k)^(k-1)/k!`.
pub fn tree_pair(a: &Rational, k: usize) -> Result<EhPair<Rational>> {
    let term = |i: usize, shift: i64| -> Result<Rational> {
        let base = a + Rational::from_integer(int(shift * i as i64));
        Ok(a * pow_rat(&base, i as u32 - 1) / Rational::from_integer(factorial(i as u64)))
    };
    EhPair::build(k, |i| term(i, -1), |i| term(i, 1))
}

/// `e_k = (-1)^k a^k B_k / k!`, `h_k = a^k / (k+1)!`.
pub fn bernoulli_pair(a: &Rational, k: usize) -> Result<EhPair<Rational>> {
    let b = bernoulli_table(k);
    EhPair::build(
        k,
        |i| {
            let v = pow_rat(a, i as u32) * &b[i] / Rational::from_integer(factorial(i as u64));
            Ok(v.signed(i as i64))
        },
        |i| Ok(pow_rat(a, i as u32) / Rational::from_integer(factorial(i as u64 + 1))),
    )
}

/// `e_k = q^(k(k-1)/2) [n, k]_q`, `h_k = [n+k-1, k]_q`.
pub fn q_binomial_pair(n: i64, k: usize) -> Result<EhPair<Polynomial>> {
    if n < 0 {
        return Err(Error::domain(format!(
            "q-binomial pair needs n >= 0, got {n}"
        )));
    }
    EhPair::build(
        k,
        |i| Ok(q_triangle(i) * gaussian_binomial(n, i as i64)?),
        |i| gaussian_binomial(n + i as i64 - 1, i as i64),
    )
}

/// `e_k = q^(k(k-1)/2) / phi_k(q)`, `h_k = 1 / phi_k(q)`.
pub fn q_exp_pair(k: usize) -> Result<EhPair<RationalFunction>> {
    EhPair::build(
        k,
        |i| RationalFunction::new(q_triangle(i), phi(i as i64)?),
        |i| RationalFunction::new(Polynomial::one(), phi(i as i64)?),
    )
}

/// `e_k = prod_{i=1}^{k} (a - b q^(i-1)) / (1 - q^i)`,
/// `h_k = prod_{i=1}^{k} (a q^(i-1) - b) / (1 - q^i)`.
pub fn q_cauchy_pair(a: &Rational, b: &Rational, k: usize) -> Result<EhPair<RationalFunction>> {
    let a_poly = |d: usize| Polynomial::monomial(a.clone(), d);
    let b_poly = |d: usize| Polynomial::monomial(b.clone(), d);
    EhPair::build(
        k,
        |i| {
            let num = (1..=i).fold(Polynomial::one(), |acc, j| {
                acc * (a_poly(0) - b_poly(j - 1))
            });
            RationalFunction::new(num, phi(i as i64)?)
        },
        |i| {
            let num = (1..=i).fold(Polynomial::one(), |acc, j| {
                acc * (a_poly(j - 1) - b_poly(0))
            });
            RationalFunction::new(num, phi(i as i64)?)
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairId {
    Binomial,
    Tree,
    Bernoulli,
    QBinomial,
    QExp,
    QCauchy,
}

impl PairId {
    pub const ALL: [PairId; 6] = [
        PairId::Binomial,
        PairId::Tree,
        PairId::Bernoulli,
        PairId::QBinomial,
        PairId::QExp,
        PairId::QCauchy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PairId::Binomial => "binomial",
            PairId::Tree => "tree",
            PairId::Bernoulli => "bernoulli",
            PairId::QBinomial => "q_binomial",
            PairId::QExp => "q_exp",
            PairId::QCauchy => "q_cauchy",
        }
    }
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PairId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PairId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownPair(s.to_string()))
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PairParams {
    pub n: Option<i64>,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
}

/// Pair terms in whichever ring the pair lives in.
#[derive(Debug, Clone, PartialEq)]
pub enum PairTerms {
    Integer(EhPair<Integer>),
    Rational(EhPair<Rational>),
    Polynomial(EhPair<Polynomial>),
    RationalFunction(EhPair<RationalFunction>),
}

impl PairTerms {
    /// Rendered `(e, h)` lists.
    pub fn render(&self) -> (Vec<String>, Vec<String>) {
        fn r<R: Ring>(p: &EhPair<R>) -> (Vec<String>, Vec<String>) {
            (
                p.e.iter().map(Ring::render).collect(),
                p.h.iter().map(Ring::render).collect(),
            )
        }
        match self {
            PairTerms::Integer(p) => r(p),
            PairTerms::Rational(p) => r(p),
            PairTerms::Polynomial(p) => r(p),
            PairTerms::RationalFunction(p) => r(p),
        }
    }
}

pub fn pair_terms(id: PairId, params: &PairParams, k: usize) -> Result<PairTerms> {
    let n = || params.n.ok_or_else(|| Error::MissingParam("n".into()));
    let a = || {
        params
            .a
            .clone()
            .ok_or_else(|| Error::MissingParam("a".into()))
    };
    let b = || {
        params
            .b
            .clone()
            .ok_or_else(|| Error::MissingParam("b".into()))
    };
    Ok(match id {
        PairId::Binomial => {
            let n = n()?;
            if n < 0 {
                return Err(Error::domain(format!(
                    "binomial pair needs n >= 0, got {n}"
                )));
            }
            PairTerms::Integer(binomial_pair(&int(n), k)?)
        }
        PairId::Tree => PairTerms::Rational(tree_pair(&a()?, k)?),
        PairId::Bernoulli => PairTerms::Rational(bernoulli_pair(&a()?, k)?),
        PairId::QBinomial => PairTerms::Polynomial(q_binomial_pair(n()?, k)?),
        PairId::QExp => PairTerms::RationalFunction(q_exp_pair(k)?),
        PairId::QCauchy => PairTerms::RationalFunction(q_cauchy_pair(&a()?, &b()?, k)?),
    })
}
