//! Compositions of an integer and the signed composition transform.
//!
//! The transform
//!
//! ```text
//! T[a](k) = sum_{r=1}^{k} (-1)^(k-r) sum_{k_1+...+k_r=k, k_i>=1} a(k_1)...a(k_r)
//! ```
//!
//! sends the elementary sequence `e_1, e_2, ...` to the complete sequence
//! `h_1, h_2, ...` and back again. Binding `a` to binomials, multichoose
//! numbers, or any of the q-analogue pairs turns it into a concrete identity.
//!
//! Every enumerator here streams: compositions are produced one at a time and
//! never collected, so memory stays linear in `k`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, int, multichoose, sign, Integer};
use crate::ring::Ring;

/// Largest `k` the enumeration-based evaluators accept by default.
pub const DEFAULT_MAX_K: usize = 20;

/// Environment variable that overrides [`DEFAULT_MAX_K`].
pub const BUDGET_ENV: &str = "COMPIDENT_BUDGET";

/// Cap on the size of enumerations (`2^(k-1)` compositions for size `k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_k: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_k: DEFAULT_MAX_K,
        }
    }
}

impl Budget {
    pub fn new(max_k: usize) -> Self {
        Budget { max_k }
    }

    /// Reads `COMPIDENT_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => v.trim().parse().map(Budget::new).map_err(|_| {
                Error::Parse(format!("{BUDGET_ENV}={v} is not a nonnegative integer"))
            }),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn check(&self, k: usize) -> Result<()> {
        if k > self.max_k {
            Err(Error::BudgetExceeded { k, max: self.max_k })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::domain(
                "a composition needs at least one part, all positive",
            ));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Comma-joined parts, e.g. `1,2,1`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Compositions of `k` with exactly `r` parts, in lexicographic order.
#[derive(Debug, Clone)]
pub struct CompositionsWithParts {
    next: Option<Vec<usize>>,
}

impl Iterator for CompositionsWithParts {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let r = current.len();
        // Successor: bump the rightmost non-final part whose suffix still has
        // slack, then reset the suffix to its smallest arrangement.
        let mut suffix = current[r - 1];
        let mut successor = None;
        for i in (0..r - 1).rev() {
            let tail_len = r - 1 - i;
            if suffix > tail_len {
                let mut next = current.clone();
                next[i] += 1;
                let rest = suffix - 1;
                for slot in next.iter_mut().skip(i + 1).take(tail_len - 1) {
                    *slot = 1;
                }
                next[r - 1] = rest - (tail_len - 1);
                successor = Some(next);
                break;
            }
            suffix += current[i];
        }
        self.next = successor;
        Some(Composition { parts: current })
    }
}

fn check_k_r(k: usize, r: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::domain(format!("compositions need k >= 1, got {k}")));
    }
    if r < 1 || r > k {
        return Err(Error::domain(format!(
            "part count must satisfy 1 <= r <= k = {k}, got {r}"
        )));
    }
    Ok(())
}

/// The `C(k-1, r-1)` compositions of `k` into `r` positive parts.
pub fn enumerate_compositions(k: usize, r: usize) -> Result<CompositionsWithParts> {
    check_k_r(k, r)?;
    let mut first = vec![1; r];
    first[r - 1] = k - (r - 1);
    Ok(CompositionsWithParts { next: Some(first) })
}

/// All `2^(k-1)` compositions of `k`, grouped by part count `r = 1..=k`.
pub fn enumerate_all_compositions(k: usize) -> Result<impl Iterator<Item = Composition>> {
    if k < 1 {
        return Err(Error::domain(format!("compositions need k >= 1, got {k}")));
    }
    Ok((1..=k).flat_map(move |r| enumerate_compositions(k, r).expect("1 <= r <= k")))
}

/// All compositions of `k` in plain lexicographic order, from `1,1,...,1` to `k`.
#[derive(Debug, Clone)]
pub struct LexCompositions {
    next: Option<Vec<usize>>,
}

impl Iterator for LexCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let last = succ.pop().expect("nonempty");
        if let Some(tail) = succ.last_mut() {
            *tail += 1;
            succ.extend(std::iter::repeat_n(1, last - 1));
            self.next = Some(succ);
        }
        Some(Composition { parts: current })
    }
}

pub fn enumerate_compositions_lex(k: usize) -> Result<LexCompositions> {
    if k < 1 {
        return Err(Error::domain(format!("compositions need k >= 1, got {k}")));
    }
    Ok(LexCompositions {
        next: Some(vec![1; k]),
    })
}

/// The `C(k+r-1, r-1)` ways of writing `k` as `r` nonnegative parts, in
/// lexicographic order.
pub fn enumerate_weak_compositions(k: usize, r: usize) -> Result<impl Iterator<Item = Vec<usize>>> {
    if r < 1 {
        return Err(Error::domain(format!(
            "weak compositions need r >= 1, got {r}"
        )));
    }
    // Shifting every part by one is an order-preserving bijection onto the
    // positive compositions of k + r.
    let inner = enumerate_compositions(k + r, r)?;
    Ok(inner.map(|c| c.parts.into_iter().map(|p| p - 1).collect()))
}

/// Terms `a(1), ..., a(k)` of a sequence fed to the composition transform.
#[derive(Debug, Clone, PartialEq)]
pub struct TermSequence<R> {
    terms: Vec<R>,
}

impl<R: Ring> TermSequence<R> {
    /// `terms[i]` is the value at part size `i + 1`.
    pub fn new(terms: Vec<R>) -> Self {
        TermSequence { terms }
    }

    /// Evaluates `f(1), ..., f(k)` once, surfacing the first failure.
    pub fn from_fn(k: usize, f: impl FnMut(usize) -> Result<R>) -> Result<Self> {
        Ok(TermSequence {
            terms: (1..=k).map(f).collect::<Result<_>>()?,
        })
    }

    /// Value at part size `i >= 1`.
    pub fn term(&self, i: usize) -> Option<&R> {
        i.checked_sub(1).and_then(|j| self.terms.get(j))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_slice(&self) -> &[R] {
        &self.terms
    }

    fn require(&self, k: usize) -> Result<()> {
        if self.terms.len() < k {
            return Err(Error::domain(format!(
                "term sequence defined up to {}, needed up to {k}",
                self.terms.len()
            )));
        }
        Ok(())
    }
}

/// Sum over compositions of `k` with `r` parts of `a(k_1) ... a(k_r)`.
pub fn inner_sum_positive<R: Ring>(
    terms: &TermSequence<R>,
    k: usize,
    r: usize,
    budget: Budget,
) -> Result<R> {
    check_k_r(k, r)?;
    budget.check(k)?;
    terms.require(k)?;
    let mut total = R::zero();
    walk(terms.as_slice(), k, r, R::one(), &mut total);
    Ok(total)
}

// Depth-first over compositions, carrying the running product of the parts
// chosen so far. A zero prefix contributes nothing and its subtree is skipped.
fn walk<R: Ring>(terms: &[R], remaining: usize, parts_left: usize, prefix: R, total: &mut R) {
    if parts_left == 1 {
        let term = prefix * terms[remaining - 1].clone();
        *total = std::mem::replace(total, R::zero()) + term;
        return;
    }
    for first in 1..=remaining - (parts_left - 1) {
        let next = prefix.clone() * terms[first - 1].clone();
        if next.is_zero() {
            continue;
        }
        walk(terms, remaining - first, parts_left - 1, next, total);
    }
}

/// `sum_{r=1}^{k} (-1)^(k-r) inner_sum_positive(terms, k, r)`.
pub fn composition_transform<R: Ring>(
    terms: &TermSequence<R>,
    k: usize,
    budget: Budget,
) -> Result<R> {
    if k < 1 {
        return Err(Error::domain(format!(
            "composition transform needs k >= 1, got {k}"
        )));
    }
    budget.check(k)?;
    let mut acc = R::zero();
    for r in 1..=k {
        let inner = inner_sum_positive(terms, k, r, budget)?;
        acc = acc + inner.signed((k - r) as i64);
    }
    Ok(acc)
}

fn check_closed_range(k: usize, r: usize) -> Result<()> {
    check_k_r(k, r)
}

/// Inclusion-exclusion form of the positive-part sum with `a(i) = C(n, i)`:
/// `sum_{j=0}^{r-1} (-1)^j C(r, j) C((r-j) n, k)`.
pub fn inner_sum_closed_binomial(n: &Integer, k: usize, r: usize) -> Result<Integer> {
    if n < &Integer::zero() {
        return Err(Error::domain(format!("n must be >= 0, got {n}")));
    }
    check_closed_range(k, r)?;
    let (ki, ri) = (k as i64, r as i64);
    Ok((0..ri)
        .map(|j| int(sign(j)) * binomial(&int(ri), j) * binomial(&(n * (ri - j)), ki))
        .sum())
}

/// Inclusion-exclusion form with `a(i) = C(n+i-1, i)`:
/// `sum_{j=0}^{r-1} (-1)^j C(r, j) C((r-j) n + k - 1, k)`.
pub fn inner_sum_closed_multichoose(n: &Integer, k: usize, r: usize) -> Result<Integer> {
    if n < &int(1) {
        return Err(Error::domain(format!("n must be >= 1, got {n}")));
    }
    check_closed_range(k, r)?;
    let (ki, ri) = (k as i64, r as i64);
    let mut acc = Integer::zero();
    for j in 0..ri {
        acc += int(sign(j)) * binomial(&int(ri), j) * multichoose(&(n * (ri - j)), ki)?;
    }
    Ok(acc)
}

/// `a(i) = C(n, i)` for `i = 1..=k`.
pub fn binomial_terms(n: &Integer, k: usize) -> TermSequence<Integer> {
    TermSequence::new((1..=k as i64).map(|i| binomial(n, i)).collect())
}

/// `a(i) = C(n+i-1, i)` for `i = 1..=k`.
pub fn multichoose_terms(n: &Integer, k: usize) -> TermSequence<Integer> {
    TermSequence::new(
        (1..=k as i64)
            .map(|i| multichoose(n, i).expect("i >= 1"))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::binom;

    fn parts<I: Iterator<Item = Composition>>(it: I) -> Vec<Vec<usize>> {
        it.map(|c| c.parts().to_vec()).collect()
    }

    // Brute force: every vector in [1, k]^r, filtered by sum.
    fn brute_compositions(k: usize, r: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut v = vec![1usize; r];
        loop {
            if v.iter().sum::<usize>() == k {
                out.push(v.clone());
            }
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if v[i] < k {
                    v[i] += 1;
                    break;
                }
                v[i] = 1;
            }
        }
    }

    fn brute_weak(k: usize, r: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut v = vec![0usize; r];
        loop {
            if v.iter().sum::<usize>() == k {
                out.push(v.clone());
            }
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if v[i] < k {
                    v[i] += 1;
                    break;
                }
                v[i] = 0;
            }
        }
    }

    #[test]
    fn compositions_with_parts_examples() {
        assert_eq!(
            parts(enumerate_compositions(4, 2).unwrap()),
            vec![vec![1, 3], vec![2, 2], vec![3, 1]]
        );
        assert_eq!(parts(enumerate_compositions(6, 1).unwrap()), vec![vec![6]]);
        assert_eq!(enumerate_compositions(5, 3).unwrap().count(), 6);
        assert!(enumerate_compositions(3, 4).is_err());
        assert!(enumerate_compositions(3, 0).is_err());
        assert!(enumerate_compositions(0, 1).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_in_order() {
        for k in 1..=8 {
            for r in 1..=k {
                assert_eq!(
                    parts(enumerate_compositions(k, r).unwrap()),
                    brute_compositions(k, r)
                );
            }
        }
    }

    #[test]
    fn all_compositions_examples() {
        let three = parts(enumerate_all_compositions(3).unwrap());
        assert_eq!(three, vec![vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(parts(enumerate_all_compositions(1).unwrap()), vec![vec![1]]);
        assert_eq!(enumerate_all_compositions(4).unwrap().count(), 8);
        assert!(enumerate_all_compositions(0).is_err());
    }

    #[test]
    fn count_laws() {
        for k in 1..=12usize {
            assert_eq!(enumerate_all_compositions(k).unwrap().count(), 1 << (k - 1));
            for r in 1..=k {
                let n = enumerate_compositions(k, r).unwrap().count();
                assert_eq!(int(n as i64), binom(k as i64 - 1, r as i64 - 1));
            }
        }
    }

    #[test]
    fn lexicographic_listing() {
        let four: Vec<String> = enumerate_compositions_lex(4)
            .unwrap()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            four,
            ["1,1,1,1", "1,1,2", "1,2,1", "1,3", "2,1,1", "2,2", "3,1", "4"]
        );
        for k in 1..=10 {
            let v: Vec<_> = enumerate_compositions_lex(k).unwrap().collect();
            assert_eq!(v.len(), 1 << (k - 1));
            assert!(v.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn weak_examples() {
        let two: Vec<_> = enumerate_weak_compositions(2, 2).unwrap().collect();
        assert_eq!(two, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let zero: Vec<_> = enumerate_weak_compositions(0, 4).unwrap().collect();
        assert_eq!(zero, vec![vec![0, 0, 0, 0]]);
        assert_eq!(enumerate_weak_compositions(3, 3).unwrap().count(), 10);
        assert!(enumerate_weak_compositions(3, 0).is_err());
        for k in 0..=6 {
            for r in 1..=4 {
                let got: Vec<_> = enumerate_weak_compositions(k, r).unwrap().collect();
                assert_eq!(got, brute_weak(k, r));
            }
        }
    }

    #[test]
    fn composition_display_and_validation() {
        let c = Composition::new(vec![1, 2, 1]).unwrap();
        assert_eq!(c.to_string(), "1,2,1");
        assert_eq!(c.total(), 4);
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!(Composition::new(vec![]).is_err());
    }

    #[test]
    fn transform_examples() {
        let b = Budget::default();
        // binomial terms at n = 2: 2^3 - 2*2*1 + 0
        assert_eq!(
            composition_transform(&binomial_terms(&int(2), 3), 3, b).unwrap(),
            int(4)
        );
        // multichoose terms at n = 2: 8 - 12 + 4
        assert_eq!(
            composition_transform(&multichoose_terms(&int(2), 3), 3, b).unwrap(),
            int(0)
        );
        let any = TermSequence::new(vec![int(17), int(-3)]);
        assert_eq!(composition_transform(&any, 1, b).unwrap(), int(17));
        assert!(composition_transform(&any, 3, b).is_err());
        assert!(composition_transform(&any, 0, b).is_err());
    }

    #[test]
    fn inner_sum_examples() {
        let b = Budget::default();
        let t = binomial_terms(&int(2), 3);
        assert_eq!(inner_sum_positive(&t, 3, 2, b).unwrap(), int(4));
        assert_eq!(inner_sum_positive(&t, 3, 3, b).unwrap(), int(8));
        assert_eq!(inner_sum_positive(&t, 3, 1, b).unwrap(), int(0));
        assert!(inner_sum_positive(&t, 3, 4, b).is_err());
    }

    #[test]
    fn closed_inner_sum_examples() {
        assert_eq!(inner_sum_closed_binomial(&int(2), 3, 2).unwrap(), int(4));
        assert_eq!(
            inner_sum_closed_binomial(&int(7), 3, 1).unwrap(),
            binom(7, 3)
        );
        assert_eq!(inner_sum_closed_binomial(&int(1), 3, 3).unwrap(), int(1));
        assert!(inner_sum_closed_binomial(&int(1), 3, 4).is_err());
        assert!(inner_sum_closed_binomial(&int(-1), 3, 1).is_err());
        assert_eq!(inner_sum_closed_multichoose(&int(2), 2, 2).unwrap(), int(4));
        assert_eq!(
            inner_sum_closed_multichoose(&int(5), 3, 1).unwrap(),
            multichoose(&int(5), 3).unwrap()
        );
        assert_eq!(inner_sum_closed_multichoose(&int(1), 3, 2).unwrap(), int(2));
        assert!(inner_sum_closed_multichoose(&int(0), 3, 2).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let t = TermSequence::new(vec![int(1); 25]);
        let tight = Budget::new(5);
        assert_eq!(
            composition_transform(&t, 6, tight),
            Err(Error::BudgetExceeded { k: 6, max: 5 })
        );
        assert!(inner_sum_positive(&t, 6, 2, tight).is_err());
        assert!(composition_transform(&t, 5, tight).is_ok());
        assert!(Budget::default().check(21).is_err());
    }

    #[test]
    fn closed_forms_match_enumeration() {
        let b = Budget::default();
        for k in 1..=8usize {
            for n in 0..=6i64 {
                let bt = binomial_terms(&int(n), k);
                let mt = multichoose_terms(&int(n), k);
                for r in 1..=k {
                    assert_eq!(
                        inner_sum_closed_binomial(&int(n), k, r).unwrap(),
                        inner_sum_positive(&bt, k, r, b).unwrap()
                    );
                    if n >= 1 {
                        assert_eq!(
                            inner_sum_closed_multichoose(&int(n), k, r).unwrap(),
                            inner_sum_positive(&mt, k, r, b).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weak_sums_have_closed_forms() {
        for k in 1..=7usize {
            for r in 1..=5usize {
                for n in 0..=5i64 {
                    let s1: Integer = enumerate_weak_compositions(k, r)
                        .unwrap()
                        .map(|ps| ps.iter().map(|&p| binom(n, p as i64)).product::<Integer>())
                        .sum();
                    assert_eq!(s1, binom(r as i64 * n, k as i64));
                    if n >= 1 {
                        let s3: Integer = enumerate_weak_compositions(k, r)
                            .unwrap()
                            .map(|ps| {
                                ps.iter()
                                    .map(|&p| multichoose(&int(n), p as i64).unwrap())
                                    .product::<Integer>()
                            })
                            .sum();
                        assert_eq!(s3, multichoose(&int(r as i64 * n), k as i64).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn transform_by_explicit_enumeration() {
        // Oracle: expand every composition explicitly, no shared prefixes.
        let t = TermSequence::new((1..=7).map(|i| int(i * i - 3)).collect::<Vec<_>>());
        for k in 1..=7 {
            let oracle: Integer = enumerate_all_compositions(k)
                .unwrap()
                .map(|c| {
                    let prod: Integer = c
                        .parts()
                        .iter()
                        .map(|&p| t.term(p).unwrap().clone())
                        .product();
                    prod * sign((k - c.len()) as i64)
                })
                .sum();
            assert_eq!(
                composition_transform(&t, k, Budget::default()).unwrap(),
                oracle
            );
        }
    }
}
