//! Registry of identities and the engine that checks them exactly.
//!
//! Each identity has a stable id, a parameter domain, default ranges, and an
//! evaluator that computes both sides in the identity's own ring. A case
//! passes exactly when the two sides are structurally equal there; reports
//! carry both sides rendered in full.
//!
//! Some identities are polynomial in `n`. For those (`eq13`, `eq29`, `eq47`)
//! leaving `n` unbound checks the statement as an equality of polynomials in
//! `n`; binding `n` checks individual values instead.

use std::fmt;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::compositions::{
    binomial_terms, composition_transform, multichoose_terms, Budget, TermSequence,
};
use crate::error::{Error, Result};
use crate::exact_arith::{binom, binomial, int, multichoose, sign, Integer, Rational};
use crate::poly::{poly_binomial, Polynomial};
use crate::random::{RationalSampler, DEFAULT_SEED};
use crate::ring::{Ring, Sides};
use crate::stirling::{
    check_power_double_sum, check_power_sum_vanishes, check_shifted_row_sum, check_upper_row_sum,
    StirlingTable,
};
use crate::symfun::{
    bernoulli_pair, binomial_pair, e_from_h_conv, h_from_e_conv, h_from_e_det, q_binomial_pair,
    q_cauchy_pair, q_exp_pair, tree_pair, EhPair, PairId,
};

/// How many failing cases a suite report keeps.
pub const MAX_REPORTED_FAILURES: usize = 10;

/// Random samples per randomized identity unless overridden.
pub const DEFAULT_SAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Pointwise,
    PolynomialInN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingKind {
    Integer,
    Rational,
    /// Polynomials in the summation parameter `n`.
    PolynomialInN,
    /// Polynomials in a symbolic `q`.
    PolynomialInQ,
    RationalFunctionInQ,
}

/// A named integer parameter with a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    /// Optional parameters switch the identity between modes.
    pub optional: bool,
    pub default: (i64, i64),
}

const fn param(name: &'static str, min: i64, lo: i64, hi: i64) -> ParamSpec {
    ParamSpec {
        name,
        min,
        optional: false,
        default: (lo, hi),
    }
}

const fn optional_n() -> ParamSpec {
    ParamSpec {
        name: "n",
        min: 0,
        optional: true,
        default: (0, 12),
    }
}

/// Constraint between two parameters; violating combinations are skipped
/// when sweeping a range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `t <= k`
    TAtMostK,
    /// `x < k`
    XBelowK,
}

impl Relation {
    fn admits(self, case: &Case) -> bool {
        match self {
            Relation::TAtMostK => case.get("t") <= case.get("k"),
            Relation::XBelowK => case.get("x") < case.get("k"),
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Relation::TAtMostK => "t <= k",
            Relation::XBelowK => "x < k",
        }
    }
}

/// What a randomized identity draws per sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Randomness {
    None,
    /// One rational `a`.
    A,
    /// Two distinct rationals `a`, `b`.
    AB,
    /// A whole sequence `e_1..e_k`.
    Sequence,
}

type Evaluator = fn(&Case, &VerifyConfig) -> Result<Outcome>;

#[derive(Clone, Serialize)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    /// The identity written out in plain text.
    pub statement: &'static str,
    pub params: &'static [ParamSpec],
    pub relation: Option<Relation>,
    pub ring: RingKind,
    pub modes: &'static [Mode],
    pub randomness: Randomness,
    /// Enumerates compositions, so `k` is capped by the budget.
    pub enumerates: bool,
    #[serde(skip)]
    evaluate: Evaluator,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("ring", &self.ring)
            .finish_non_exhaustive()
    }
}

impl IdentityDescriptor {
    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.name == name)
    }

    pub fn default_samples(&self) -> usize {
        match self.randomness {
            Randomness::None => 1,
            Randomness::Sequence => 20,
            Randomness::A | Randomness::AB => DEFAULT_SAMPLES,
        }
    }
}

/// Settings shared by every case of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides each identity's default sample count.
    pub samples: Option<usize>,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub budget: Budget,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            samples: None,
            a: None,
            b: None,
            budget: Budget::default(),
            jobs: None,
        }
    }
}

/// One parameter binding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    values: Vec<(&'static str, i64)>,
    sample: Option<u64>,
}

impl Case {
    pub fn new(values: Vec<(&'static str, i64)>) -> Self {
        Case {
            values,
            sample: None,
        }
    }

    pub fn with_sample(mut self, sample: u64) -> Self {
        self.sample = Some(sample);
        self
    }

    pub fn get(&self, name: &str) -> i64 {
        self.try_get(name)
            .unwrap_or_else(|| panic!("parameter {name} not bound"))
    }

    pub fn try_get(&self, name: &str) -> Option<i64> {
        self.values
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }

    fn k(&self) -> usize {
        self.get("k") as usize
    }
}

/// Both sides of an evaluated case, rendered.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    /// Values drawn for this case (random `a`, `b`, ...).
    pub drawn: Vec<(String, String)>,
}

impl Outcome {
    fn from_sides<R: Ring>(sides: Sides<R>) -> Self {
        Outcome {
            pass: sides.holds(),
            lhs: sides.lhs.render(),
            rhs: sides.rhs.render(),
            drawn: Vec::new(),
        }
    }

    fn drawing(mut self, name: &str, value: &Rational) -> Self {
        self.drawn.push((name.to_string(), value.to_string()));
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub id: String,
    pub params: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub elapsed: Duration,
}

impl Serialize for CaseReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Params<'a>(&'a [(String, String)]);
        impl Serialize for Params<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    map.serialize_entry(k, v)?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(5))?;
        map.serialize_entry("id", &self.id)?;
        map.serialize_entry("params", &Params(&self.params))?;
        map.serialize_entry("lhs", &self.lhs)?;
        map.serialize_entry("rhs", &self.rhs)?;
        map.serialize_entry("pass", &self.pass)?;
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub id: String,
    pub cases_total: usize,
    pub cases_failed: usize,
    pub first_failures: Vec<CaseReport>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }

    /// One-line JSON. Wall-clock time is only included on request so that
    /// repeated runs produce identical bytes.
    pub fn to_json(&self, with_timing: bool) -> String {
        #[derive(Serialize)]
        struct Json<'a> {
            id: &'a str,
            cases: usize,
            failed: usize,
            failures: &'a [CaseReport],
            #[serde(skip_serializing_if = "Option::is_none")]
            elapsed_ms: Option<u64>,
        }
        let json = Json {
            id: &self.id,
            cases: self.cases_total,
            failed: self.cases_failed,
            failures: &self.first_failures,
            elapsed_ms: with_timing.then_some(self.elapsed.as_millis() as u64),
        };
        serde_json::to_string(&json).expect("reports serialize")
    }
}

macro_rules! identity {
    ($id:literal, $stmt:literal, [$($p:expr),*], $rel:expr, $ring:ident, [$($m:ident),*], $rnd:ident, $enum:literal, $f:expr) => {
        IdentityDescriptor {
            id: $id,
            statement: $stmt,
            params: &[$($p),*],
            relation: $rel,
            ring: RingKind::$ring,
            modes: &[$(Mode::$m),*],
            randomness: Randomness::$rnd,
            enumerates: $enum,
            evaluate: $f,
        }
    };
}

static REGISTRY: &[IdentityDescriptor] = &[
    identity!("eq5",
        "sum_{r=1}^{k} (-1)^(k-r) sum_{k_1+..+k_r=k, k_i>=1} prod C(n,k_i) = C(n+k-1,k)",
        [param("k", 1, 1, 10), param("n", 0, 0, 10)], None, Integer, [Pointwise], None, true,
        eval_composition_binomial),
    identity!("eq6",
        "sum_{j=1}^{n} C(j+k-2,k-1) = C(n+k-1,k)",
        [param("k", 1, 1, 15), param("n", 1, 1, 15)], None, Integer, [Pointwise], None, false,
        eval_partial_sums),
    identity!("eq13",
        "sum_{i=1}^{k} (-1)^i C(ni,k) C(k+1,i+1) = (-1)^k C(n+k-1,k)",
        [param("k", 1, 1, 20), optional_n()], None, PolynomialInN, [Pointwise, PolynomialInN], None, false,
        eval_alternating_binomial),
    identity!("eq17",
        "coef of n^t in sum_{i=1}^{k} (-1)^i (in)(in-1)..(in-k+1) C(k+1,i+1) = (-1)^t s(k,t), 1<=t<=k",
        [param("k", 1, 1, 12)], None, PolynomialInN, [PolynomialInN], None, false,
        eval_falling_coefficients),
    identity!("eq18",
        "sum_{j=t}^{k} C(j,t) s(k,j) (k-1)^(j-t) = (-1)^(k+t) s(k,t)",
        [param("k", 1, 1, 25), param("t", 1, 1, 25)], Some(Relation::TAtMostK), Integer, [Pointwise], None, false,
        |c, _| Ok(Outcome::from_sides(check_shifted_row_sum(c.get("k"), c.get("t"))?))),
    identity!("eq19",
        "sum_{j=t+1}^{k} C(j,t) s(k,j) = k s(k-1,t)",
        [param("k", 1, 1, 25), param("t", 1, 1, 25)], Some(Relation::TAtMostK), Integer, [Pointwise], None, false,
        |c, _| Ok(Outcome::from_sides(check_upper_row_sum(c.get("k"), c.get("t"))?))),
    identity!("eq29",
        "sum_{i=1}^{k} (-1)^i (C((n-1)i,k) - C(ni,k)) C(k+1,i+1) = sum_{i=1}^{k-1} (-1)^i C(ni,k-1) C(k,i+1)",
        [param("k", 2, 2, 15), optional_n()], None, PolynomialInN, [Pointwise, PolynomialInN], None, false,
        eval_difference_step),
    identity!("eq31",
        "sum_{r=t}^{k} (-1)^r C(r,t) s(k,r) sum_{i=0}^{k} (-1)^i C(k+1,i+1) i^r = s(k,t) + k s(k-1,t)",
        [param("k", 1, 1, 12), param("t", 1, 1, 12)], Some(Relation::TAtMostK), Integer, [Pointwise], None, false,
        |c, _| Ok(Outcome::from_sides(check_power_double_sum(c.get("k"), c.get("t"))?))),
    identity!("eq36",
        "sum_{i=1}^{k-1} (-1)^(i+k+1) C(k,i) C(x+in,k) x/(x+in) = x/(x+kn) C(x+kn,k) + (-1)^k C(x,k)",
        [param("x", 1, 1, 6), param("n", 1, 1, 6), param("k", 1, 1, 8)], None, Rational, [Pointwise], None, false,
        eval_rothe_hagen_tail),
    identity!("eq37",
        "sum_{i=1}^{k} (-1)^(i-1) C(k,i) C(x+in,k)/(x+in) = 0 for k > x >= 1",
        [param("x", 1, 1, 9), param("n", 1, 1, 6), param("k", 2, 2, 10)], Some(Relation::XBelowK), Rational, [Pointwise], None, false,
        eval_rothe_hagen_vanishing),
    identity!("eq38",
        "sum_{i=1}^{k} (-1)^(i-1)/i C(in,k) C(k,i) = (-1)^(k-1) n/k",
        [param("k", 1, 1, 15), param("n", 1, 1, 15)], None, Rational, [Pointwise], None, false,
        eval_harmonic_binomial),
    identity!("eq41",
        "s(n,t) sum_{i=1}^{n} (-1)^(i-1) C(n,i) i^(t-1) = 0 for t >= 2",
        [param("n", 1, 1, 12), param("t", 2, 2, 12)], None, Integer, [Pointwise], None, false,
        |c, _| Ok(Outcome::from_sides(check_power_sum_vanishes(c.get("n"), c.get("t"))?))),
    identity!("eq42",
        "sum_{r=1}^{k} (-1)^(k-r) sum_{k_1+..+k_r=k, k_i>=1} prod C(n+k_i-1,k_i) = C(n,k)",
        [param("k", 1, 1, 10), param("n", 1, 1, 10)], None, Integer, [Pointwise], None, true,
        eval_composition_multichoose),
    identity!("eq47",
        "sum_{i=1}^{k} (-1)^i C(ni+k-1,k) C(k+1,i+1) = (-1)^k C(n,k)",
        [param("k", 1, 1, 20), optional_n()], None, PolynomialInN, [Pointwise, PolynomialInN], None, false,
        eval_alternating_multichoose),
    identity!("lemma7_roundtrip",
        "h_k from e by Toeplitz determinant, convolution, and composition transform agree; the transform of h returns e_k",
        [param("k", 1, 1, 8)], None, Rational, [Pointwise], Sequence, true,
        eval_roundtrip),
    identity!("pair1_eh",
        "composition transform of e_i = a(a-i)^(i-1)/i! is h_k = a(a+k)^(k-1)/k!",
        [param("k", 1, 1, 8)], None, Rational, [Pointwise], A, true,
        |c, cfg| eval_pair(PairId::Tree, true, c, cfg)),
    identity!("pair1_he",
        "composition transform of h_i = a(a+i)^(i-1)/i! is e_k = a(a-k)^(k-1)/k!",
        [param("k", 1, 1, 8)], None, Rational, [Pointwise], A, true,
        |c, cfg| eval_pair(PairId::Tree, false, c, cfg)),
    identity!("pair2_eh",
        "composition transform of e_i = (-1)^i a^i B_i/i! is h_k = a^k/(k+1)!",
        [param("k", 1, 1, 8)], None, Rational, [Pointwise], A, true,
        |c, cfg| eval_pair(PairId::Bernoulli, true, c, cfg)),
    identity!("pair2_he",
        "composition transform of h_i = a^i/(i+1)! is e_k = (-1)^k a^k B_k/k!",
        [param("k", 1, 1, 8)], None, Rational, [Pointwise], A, true,
        |c, cfg| eval_pair(PairId::Bernoulli, false, c, cfg)),
    identity!("pair3_eh",
        "composition transform of e_i = q^(i(i-1)/2) [n,i]_q is h_k = [n+k-1,k]_q",
        [param("k", 1, 1, 8), param("n", 0, 0, 6)], None, PolynomialInQ, [Pointwise], None, true,
        |c, cfg| eval_pair(PairId::QBinomial, true, c, cfg)),
    identity!("pair3_he",
        "composition transform of h_i = [n+i-1,i]_q is e_k = q^(k(k-1)/2) [n,k]_q",
        [param("k", 1, 1, 8), param("n", 0, 0, 6)], None, PolynomialInQ, [Pointwise], None, true,
        |c, cfg| eval_pair(PairId::QBinomial, false, c, cfg)),
    identity!("pair4_eh",
        "composition transform of e_i = q^(i(i-1)/2)/phi_i(q) is h_k = 1/phi_k(q)",
        [param("k", 1, 1, 8)], None, RationalFunctionInQ, [Pointwise], None, true,
        |c, cfg| eval_pair(PairId::QExp, true, c, cfg)),
    identity!("pair4_he",
        "composition transform of h_i = 1/phi_i(q) is e_k = q^(k(k-1)/2)/phi_k(q)",
        [param("k", 1, 1, 8)], None, RationalFunctionInQ, [Pointwise], None, true,
        |c, cfg| eval_pair(PairId::QExp, false, c, cfg)),
    identity!("pair5_eh",
        "composition transform of e_i = prod_{j=1}^{i} (a-bq^(j-1))/(1-q^j) is h_k = prod_{j=1}^{k} (aq^(j-1)-b)/(1-q^j)",
        [param("k", 1, 1, 8)], None, RationalFunctionInQ, [Pointwise], AB, true,
        |c, cfg| eval_pair(PairId::QCauchy, true, c, cfg)),
    identity!("pair5_he",
        "composition transform of h_i = prod_{j=1}^{i} (aq^(j-1)-b)/(1-q^j) is e_k = prod_{j=1}^{k} (a-bq^(j-1))/(1-q^j)",
        [param("k", 1, 1, 8)], None, RationalFunctionInQ, [Pointwise], AB, true,
        |c, cfg| eval_pair(PairId::QCauchy, false, c, cfg)),
];

pub fn list_identities() -> &'static [IdentityDescriptor] {
    REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static IdentityDescriptor> {
    REGISTRY
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn validate(desc: &IdentityDescriptor, case: &Case) -> Result<()> {
    for (name, value) in &case.values {
        let spec = desc
            .param(name)
            .ok_or_else(|| Error::domain(format!("{} takes no parameter `{name}`", desc.id)))?;
        if *value < spec.min {
            return Err(Error::domain(format!(
                "{}: parameter {name} must be >= {}, got {value}",
                desc.id, spec.min
            )));
        }
    }
    for spec in desc.params.iter().filter(|p| !p.optional) {
        if case.try_get(spec.name).is_none() {
            return Err(Error::MissingParam(spec.name.to_string()));
        }
    }
    if let Some(rel) = desc.relation {
        if !rel.admits(case) {
            return Err(Error::domain(format!(
                "{}: requires {}",
                desc.id,
                rel.describe()
            )));
        }
    }
    Ok(())
}

/// Evaluates one binding of `id`.
pub fn verify_case(id: &str, case: &Case, config: &VerifyConfig) -> Result<CaseReport> {
    let desc = lookup(id)?;
    validate(desc, case)?;
    run_case(desc, case, config)
}

fn run_case(desc: &IdentityDescriptor, case: &Case, config: &VerifyConfig) -> Result<CaseReport> {
    let start = Instant::now();
    let outcome = (desc.evaluate)(case, config)?;
    let mut params: Vec<(String, String)> = case
        .values
        .iter()
        .map(|(n, v)| (n.to_string(), v.to_string()))
        .collect();
    if let Some(s) = case.sample {
        params.push(("sample".into(), s.to_string()));
    }
    params.extend(outcome.drawn);
    Ok(CaseReport {
        id: desc.id.to_string(),
        params,
        lhs: outcome.lhs,
        rhs: outcome.rhs,
        pass: outcome.pass,
        elapsed: start.elapsed(),
    })
}

/// Inclusive ranges keyed by parameter name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ranges {
    entries: Vec<(String, RangeInclusive<i64>)>,
}

impl Ranges {
    pub fn new() -> Self {
        Ranges::default()
    }

    pub fn with(mut self, name: &str, range: RangeInclusive<i64>) -> Self {
        self.set(name, range);
        self
    }

    pub fn set(&mut self, name: &str, range: RangeInclusive<i64>) {
        self.entries.retain(|(n, _)| n != name);
        self.entries.push((name.to_string(), range));
    }

    pub fn get(&self, name: &str) -> Option<&RangeInclusive<i64>> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    /// Parses `name=lo..hi` items separated by commas or semicolons, e.g.
    /// `k=1..8,n=0..8`. A single value `k=5` is the range `5..5`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut out = Ranges::new();
        for item in spec
            .split([',', ';'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let (name, range) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected name=lo..hi, got `{item}`")))?;
            out.set(name.trim(), parse_span(range)?);
        }
        Ok(out)
    }
}

/// Parses `lo..hi` (inclusive) or a single integer.
pub fn parse_span(s: &str) -> Result<RangeInclusive<i64>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed range `{s}`, expected LO..HI"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            (
                lo.trim().parse().map_err(|_| bad())?,
                hi.trim().parse().map_err(|_| bad())?,
            )
        }
        None => {
            let v: i64 = s.parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::Parse(format!("empty range `{s}`")));
    }
    Ok(lo..=hi)
}

/// Every admissible case of `id` over `ranges`, in deterministic order.
///
/// Parameters without a range take the identity's default span; an optional
/// `n` left unset selects the polynomial-in-`n` mode. Combinations that break
/// a relation such as `t <= k` are skipped.
pub fn expand_cases(id: &str, ranges: &Ranges, config: &VerifyConfig) -> Result<Vec<Case>> {
    let desc = lookup(id)?;
    for name in ranges.names() {
        if desc.param(name).is_none() {
            return Err(Error::domain(format!("{id} takes no parameter `{name}`")));
        }
    }
    let mut axes: Vec<(&'static str, RangeInclusive<i64>)> = Vec::new();
    for spec in desc.params {
        let range = match ranges.get(spec.name) {
            Some(r) => r.clone(),
            None if spec.optional => continue,
            None => spec.default.0..=spec.default.1,
        };
        if *range.start() < spec.min {
            return Err(Error::domain(format!(
                "{id}: parameter {} must be >= {}, range starts at {}",
                spec.name,
                spec.min,
                range.start()
            )));
        }
        axes.push((spec.name, range));
    }
    let samples = match desc.randomness {
        Randomness::None => 1,
        _ => config.samples.unwrap_or_else(|| desc.default_samples()),
    };
    if samples == 0 {
        return Err(Error::domain("samples must be >= 1"));
    }
    let mut cases = vec![Vec::new()];
    for (name, range) in &axes {
        cases = cases
            .into_iter()
            .flat_map(|prefix: Vec<(&'static str, i64)>| {
                range.clone().map(move |v| {
                    let mut next = prefix.clone();
                    next.push((*name, v));
                    next
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for values in cases {
        let case = Case::new(values);
        if desc.relation.is_some_and(|rel| !rel.admits(&case)) {
            continue;
        }
        if desc.randomness == Randomness::None {
            out.push(case);
        } else {
            out.extend((0..samples as u64).map(|s| case.clone().with_sample(s)));
        }
    }
    Ok(out)
}

/// Runs every case of `id` over `ranges` and aggregates the verdicts.
pub fn verify_range(id: &str, ranges: &Ranges, config: &VerifyConfig) -> Result<SuiteReport> {
    let desc = lookup(id)?;
    let cases = expand_cases(id, ranges, config)?;
    if desc.enumerates {
        if let Some(max_k) = cases.iter().map(Case::k).max() {
            config.budget.check(max_k)?;
        }
    }
    let start = Instant::now();
    let run = || -> Result<Vec<CaseReport>> {
        cases
            .par_iter()
            .map(|c| run_case(desc, c, config))
            .collect()
    };
    let reports = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let cases_failed = reports.iter().filter(|r| !r.pass).count();
    let first_failures = reports
        .into_iter()
        .filter(|r| !r.pass)
        .take(MAX_REPORTED_FAILURES)
        .collect();
    Ok(SuiteReport {
        id: desc.id.to_string(),
        cases_total: cases.len(),
        cases_failed,
        first_failures,
        elapsed: start.elapsed(),
    })
}

/// Checks `id` (one of `eq13`, `eq29`, `eq47`) as an identity between
/// polynomials in `n` at the given `k`.
pub fn verify_polynomial_in_n(id: &str, k: i64) -> Result<CaseReport> {
    let desc = lookup(id)?;
    if !desc.modes.contains(&Mode::PolynomialInN) || desc.param("n").is_none() {
        return Err(Error::domain(format!("{id} has no polynomial-in-n form")));
    }
    verify_case(id, &Case::new(vec![("k", k)]), &VerifyConfig::default())
}

/// Coefficients of `n^t` in `sum_{i=1}^{k} (-1)^i (in)(in-1)...(in-k+1) C(k+1, i+1)`
/// compared with `(-1)^t s(k, t)`, including a vanishing constant term.
pub fn check_falling_coefficients(k: i64) -> Result<CaseReport> {
    verify_case("eq17", &Case::new(vec![("k", k)]), &VerifyConfig::default())
}

/// `A_k(x, n) = x/(x+kn) C(x+kn, k)`.
pub fn rothe_hagen(x: i64, n: i64, k: i64) -> Result<Rational> {
    let top = x + k * n;
    if top == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(int(x), int(top)) * Rational::from_integer(binom(top, k)))
}

/// The alternating-sum form
/// `sum_{i=0}^{k-1} (-1)^(i+k+1) C(k,i) C(x+in,k) x/(x+in)`, equal to
/// [`rothe_hagen`] for `k >= 1`.
pub fn rothe_hagen_sum(x: i64, n: i64, k: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for i in 0..k {
        let top = x + i * n;
        if top == 0 {
            return Err(Error::DivisionByZero);
        }
        let term =
            Rational::from_integer(binom(k, i) * binom(top, k)) * Rational::new(int(x), int(top));
        acc += term.signed(i + k + 1);
    }
    Ok(acc)
}

// ---- evaluators ----

fn eval_composition_binomial(c: &Case, cfg: &VerifyConfig) -> Result<Outcome> {
    let (k, n) = (c.k(), int(c.get("n")));
    let lhs = composition_transform(&binomial_terms(&n, k), k, cfg.budget)?;
    let rhs = multichoose(&n, k as i64)?;
    Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
}

fn eval_composition_multichoose(c: &Case, cfg: &VerifyConfig) -> Result<Outcome> {
    let (k, n) = (c.k(), int(c.get("n")));
    let lhs = composition_transform(&multichoose_terms(&n, k), k, cfg.budget)?;
    let rhs = binomial(&n, k as i64);
    Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
}

fn eval_partial_sums(c: &Case, _: &VerifyConfig) -> Result<Outcome> {
    let (k, n) = (c.get("k"), c.get("n"));
    let lhs: Integer = (1..=n).map(|j| binom(j + k - 2, k - 1)).sum();
    Ok(Outcome::from_sides(Sides::new(lhs, binom(n + k - 1, k))))
}

/// `C(a n + b, k)` as a polynomial in `n`.
fn binom_linear(a: i64, b: i64, k: i64) -> Polynomial {
    let p = Polynomial::linear(
        Rational::from_integer(int(b)),
        Rational::from_integer(int(a)),
    );
    poly_binomial(&p, k).expect("k >= 0")
}

fn rat_int(v: Integer) -> Rational {
    Rational::from_integer(v)
}

fn eval_alternating_binomial(c: &Case, _: &VerifyConfig) -> Result<Outcome> {
    let k = c.get("k");
    match c.try_get("n") {
        Some(n) => {
            let lhs: Integer = (1..=k)
                .map(|i| int(sign(i)) * binom(n * i, k) * binom(k + 1, i + 1))
                .sum();
            let rhs = int(sign(k)) * binom(n + k - 1, k);
            Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
        }
        None => {
            let lhs = crate::ring::sum((1..=k).map(|i| {
                binom_linear(i, 0, k)
                    .scale(&rat_int(binom(k + 1, i + 1)))
                    .signed(i)
            }));
            let rhs = binom_linear(1, k - 1, k).signed(k);
            Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
        }
    }
}

fn eval_alternating_multichoose(c: &Case, _: &VerifyConfig) -> Result<Outcome> {
    let k = c.get("k");
    match c.try_get("n") {
        Some(n) => {
            let lhs: Integer = (1..=k)
                .map(|i| int(sign(i)) * binom(n * i + k - 1, k) * binom(k + 1, i + 1))
                .sum();
            let rhs = int(sign(k)) * binom(n, k);
            Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
        }
        None => {
            let lhs = crate::ring::sum((1..=k).map(|i| {
                binom_linear(i, k - 1, k)
                    .scale(&rat_int(binom(k + 1, i + 1)))
                    .signed(i)
            }));
            let rhs = binom_linear(1, 0, k).signed(k);
            Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
        }
    }
}

fn eval_difference_step(c: &Case, _: &VerifyConfig) -> Result<Outcome> {
    let k = c.get("k");
    match c.try_get("n") {
        Some(n) => {
            let lhs: Integer = (1..=k)
                .map(|i| {
                    int(sign(i)) * (binom((n - 1) * i, k) - binom(n * i, k)) * binom(k + 1, i + 1)
                })
                .sum();
            let rhs: Integer = (1..k)
                .map(|i| int(sign(i)) * binom(n * i, k - 1) * binom(k, i + 1))
                .sum();
            Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
        }
        None => {
            let lhs = crate::ring::sum((1..=k).map(|i| {
                (binom_linear(i, -i, k) - binom_linear(i, 0, k))
                    .scale(&rat_int(binom(k + 1, i + 1)))
                    .signed(i)
            }));
            let rhs = crate::ring::sum((1..k).map(|i| {
                binom_linear(i, 0, k - 1)
                    .scale(&rat_int(binom(k, i + 1)))
                    .signed(i)
            }));
            Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
        }
    }
}

fn eval_falling_coefficients(c: &Case, _: &VerifyConfig) -> Result<Outcome> {
    let k = c.get("k");
    let lhs = crate::ring::sum((1..=k).map(|i| {
        let falling =
            binom_linear(i, 0, k).scale(&rat_int(crate::exact_arith::factorial(k as u64)));
        falling.scale(&rat_int(binom(k + 1, i + 1))).signed(i)
    }));
    let table = StirlingTable::build(k as usize);
    let rhs = Polynomial::new(
        (0..=k)
            .map(|t| rat_int(int(sign(t)) * table.get(k, t)))
            .collect(),
    );
    Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
}

fn eval_rothe_hagen_tail(c: &Case, _: &VerifyConfig) -> Result<Outcome> {
    let (x, n, k) = (c.get("x"), c.get("n"), c.get("k"));
    let mut lhs = Rational::zero();
    for i in 1..k {
        let top = x + i * n;
        let term = rat_int(binom(k, i) * binom(top, k)) * Rational::new(int(x), int(top));
        lhs += term.signed(i + k + 1);
    }
    let rhs = rothe_hagen(x, n, k)? + rat_int(binom(x, k)).signed(k);
    Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
}

fn eval_rothe_hagen_vanishing(c: &Case, _: &VerifyConfig) -> Result<Outcome> {
    let (x, n, k) = (c.get("x"), c.get("n"), c.get("k"));
    let mut lhs = Rational::zero();
    for i in 1..=k {
        let top = x + i * n;
        let term = rat_int(binom(k, i) * binom(top, k)) / rat_int(int(top));
        lhs += term.signed(i - 1);
    }
    Ok(Outcome::from_sides(Sides::new(lhs, Rational::zero())))
}

fn eval_harmonic_binomial(c: &Case, _: &VerifyConfig) -> Result<Outcome> {
    let (k, n) = (c.get("k"), c.get("n"));
    let lhs: Rational = (1..=k)
        .map(|i| (rat_int(binom(i * n, k) * binom(k, i)) / rat_int(int(i))).signed(i - 1))
        .sum();
    let rhs = Rational::new(int(n), int(k)).signed(k - 1);
    Ok(Outcome::from_sides(Sides::new(lhs, rhs)))
}

fn sampler(cfg: &VerifyConfig, case: &Case) -> RationalSampler {
    RationalSampler::new(cfg.seed, case.sample.unwrap_or(0))
}

fn eval_roundtrip(c: &Case, cfg: &VerifyConfig) -> Result<Outcome> {
    let k = c.k();
    let e = sampler(cfg, c).rationals(k);
    let h_conv = h_from_e_conv(&e);
    let h_comp = composition_transform(&TermSequence::new(e.clone()), k, cfg.budget)?;
    let h_det = h_from_e_det(&e)?;
    let e_back = composition_transform(&TermSequence::new(h_conv.clone()), k, cfg.budget)?;
    let render = |v: [&Rational; 3]| {
        serde_json::to_string(&v.iter().map(|q| q.to_string()).collect::<Vec<_>>())
            .expect("strings serialize")
    };
    let lhs = [&h_comp, &h_det, &e_back];
    let rhs = [&h_conv[k - 1], &h_conv[k - 1], &e[k - 1]];
    Ok(Outcome {
        pass: lhs == rhs && e_from_h_conv(&h_conv) == e,
        lhs: render(lhs),
        rhs: render(rhs),
        drawn: vec![(
            "e".into(),
            serde_json::to_string(&e.iter().map(|q| q.to_string()).collect::<Vec<_>>())
                .expect("strings serialize"),
        )],
    })
}

fn transform_side<R: Ring>(
    pair: &EhPair<R>,
    e_to_h: bool,
    k: usize,
    budget: Budget,
) -> Result<Outcome> {
    let (source, target) = if e_to_h {
        (&pair.e, &pair.h)
    } else {
        (&pair.h, &pair.e)
    };
    let lhs = composition_transform(&TermSequence::new(source.clone()), k, budget)?;
    Ok(Outcome::from_sides(Sides::new(lhs, target[k - 1].clone())))
}

fn eval_pair(id: PairId, e_to_h: bool, c: &Case, cfg: &VerifyConfig) -> Result<Outcome> {
    let k = c.k();
    let b = cfg.budget;
    match id {
        PairId::Tree | PairId::Bernoulli => {
            let a = match &cfg.a {
                Some(a) => a.clone(),
                None => sampler(cfg, c).next_rational(),
            };
            let pair = if id == PairId::Tree {
                tree_pair(&a, k)?
            } else {
                bernoulli_pair(&a, k)?
            };
            Ok(transform_side(&pair, e_to_h, k, b)?.drawing("a", &a))
        }
        PairId::QCauchy => {
            let (ra, rb) = sampler(cfg, c).distinct_pair();
            let a = cfg.a.clone().unwrap_or(ra);
            let b_val = cfg.b.clone().unwrap_or(rb);
            if a == b_val {
                return Err(Error::domain("pair 5 needs a != b"));
            }
            let pair = q_cauchy_pair(&a, &b_val, k)?;
            Ok(transform_side(&pair, e_to_h, k, b)?
                .drawing("a", &a)
                .drawing("b", &b_val))
        }
        PairId::QBinomial => transform_side(&q_binomial_pair(c.get("n"), k)?, e_to_h, k, b),
        PairId::QExp => transform_side(&q_exp_pair(k)?, e_to_h, k, b),
        PairId::Binomial => transform_side(&binomial_pair(&int(c.get("n")), k)?, e_to_h, k, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::inner_sum_closed_binomial;
    use crate::exact_arith::rat;

    fn case(values: &[(&'static str, i64)]) -> Case {
        Case::new(values.to_vec())
    }

    fn run(id: &str, values: &[(&'static str, i64)]) -> CaseReport {
        verify_case(id, &case(values), &VerifyConfig::default()).unwrap()
    }

    #[test]
    fn registry_is_complete_and_stable() {
        let ids: Vec<&str> = list_identities().iter().map(|d| d.id).collect();
        assert_eq!(
            ids,
            [
                "eq5",
                "eq6",
                "eq13",
                "eq17",
                "eq18",
                "eq19",
                "eq29",
                "eq31",
                "eq36",
                "eq37",
                "eq38",
                "eq41",
                "eq42",
                "eq47",
                "lemma7_roundtrip",
                "pair1_eh",
                "pair1_he",
                "pair2_eh",
                "pair2_he",
                "pair3_eh",
                "pair3_he",
                "pair4_eh",
                "pair4_he",
                "pair5_eh",
                "pair5_he"
            ]
        );
        assert!(list_identities().iter().all(|d| !d.statement.is_empty()));
        let eq5 = lookup("eq5").unwrap();
        assert_eq!(eq5.modes, &[Mode::Pointwise]);
        assert_eq!(eq5.param("k").unwrap().min, 1);
        assert_eq!(eq5.param("n").unwrap().min, 0);
        assert!(matches!(lookup("eq99"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn case_examples() {
        let r = run("eq5", &[("k", 3), ("n", 2)]);
        assert_eq!((r.lhs.as_str(), r.rhs.as_str(), r.pass), ("4", "4", true));
        for n in 0..6 {
            let r = run("eq5", &[("k", 1), ("n", n)]);
            assert_eq!(r.lhs, n.to_string());
            assert!(r.pass);
        }
        let r = run("eq38", &[("k", 2), ("n", 1)]);
        assert_eq!(
            (r.lhs.as_str(), r.rhs.as_str(), r.pass),
            ("-1/2", "-1/2", true)
        );
        let r = run("eq42", &[("k", 3), ("n", 2)]);
        assert_eq!((r.lhs.as_str(), r.rhs.as_str(), r.pass), ("0", "0", true));
        let r = run("eq37", &[("x", 1), ("n", 1), ("k", 2)]);
        assert_eq!((r.lhs.as_str(), r.pass), ("0", true));
        assert!(run("eq36", &[("x", 2), ("n", 1), ("k", 3)]).pass);
    }

    #[test]
    fn case_report_params_in_order() {
        let r = run("eq5", &[("k", 3), ("n", 2)]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"id":"eq5","params":{"k":"3","n":"2"},"lhs":"4","rhs":"4","pass":true}"#
        );
    }

    #[test]
    fn domain_errors() {
        let cfg = VerifyConfig::default();
        assert!(matches!(
            verify_case("eq5", &case(&[("k", 0), ("n", 1)]), &cfg),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            verify_case("eq5", &case(&[("k", 2)]), &cfg),
            Err(Error::MissingParam(_))
        ));
        assert!(matches!(
            verify_case("eq5", &case(&[("k", 2), ("n", 1), ("t", 1)]), &cfg),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            verify_case("eq19", &case(&[("k", 2), ("t", 3)]), &cfg),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            verify_case("eq37", &case(&[("x", 3), ("n", 1), ("k", 3)]), &cfg),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            verify_case("eq29", &case(&[("k", 1)]), &cfg),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            verify_case("nope", &case(&[]), &cfg),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn budget_errors() {
        let cfg = VerifyConfig {
            budget: Budget::new(4),
            ..Default::default()
        };
        assert!(matches!(
            verify_case("eq5", &case(&[("k", 5), ("n", 1)]), &cfg),
            Err(Error::BudgetExceeded { k: 5, max: 4 })
        ));
        assert!(matches!(
            verify_range("eq42", &Ranges::new().with("k", 1..=5), &cfg),
            Err(Error::BudgetExceeded { .. })
        ));
        // closed-form identities are not capped
        assert!(
            verify_case("eq13", &case(&[("k", 6), ("n", 2)]), &cfg)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn polynomial_mode_examples() {
        let r = verify_polynomial_in_n("eq13", 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, r#"["0","1/2","1/2"]"#);
        let r = verify_polynomial_in_n("eq13", 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, r#"["0","-1"]"#);
        assert!(verify_polynomial_in_n("eq47", 3).unwrap().pass);
        assert!(verify_polynomial_in_n("eq29", 2).unwrap().pass);
        assert_eq!(
            verify_polynomial_in_n("eq29", 2).unwrap().lhs,
            r#"["0","-1"]"#
        );
        assert!(verify_polynomial_in_n("eq5", 2).is_err());
        assert!(verify_polynomial_in_n("eq13", 0).is_err());
    }

    #[test]
    fn falling_coefficient_examples() {
        let r = check_falling_coefficients(2).unwrap();
        assert_eq!(r.rhs, r#"["0","1","1"]"#);
        assert!(r.pass);
        let r = check_falling_coefficients(1).unwrap();
        assert_eq!(r.lhs, r#"["0","-1"]"#);
        assert!(r.pass);
        assert!(check_falling_coefficients(6).unwrap().pass);
        assert!(check_falling_coefficients(0).is_err());
    }

    #[test]
    fn rothe_hagen_examples() {
        assert_eq!(rothe_hagen(1, 1, 2).unwrap(), rat(1, 1));
        assert_eq!(rothe_hagen(5, 3, 0).unwrap(), rat(1, 1));
        assert_eq!(rothe_hagen(2, 1, 3).unwrap(), rat(4, 1));
        assert_eq!(rothe_hagen(-2, 1, 2), Err(Error::DivisionByZero));
        for x in 1..=6 {
            for n in 1..=6 {
                for k in 1..=8 {
                    assert_eq!(
                        rothe_hagen_sum(x, n, k).unwrap(),
                        rothe_hagen(x, n, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn range_examples() {
        let cfg = VerifyConfig::default();
        let r = verify_range(
            "eq5",
            &Ranges::new().with("k", 1..=8).with("n", 0..=8),
            &cfg,
        )
        .unwrap();
        assert_eq!((r.cases_total, r.cases_failed), (72, 0));
        let r = verify_range(
            "eq19",
            &Ranges::new().with("k", 1..=25).with("t", 1..=25),
            &cfg,
        )
        .unwrap();
        assert_eq!((r.cases_total, r.cases_failed), (325, 0));
        let r = verify_range(
            "eq41",
            &Ranges::new().with("n", 1..=12).with("t", 2..=12),
            &cfg,
        )
        .unwrap();
        assert_eq!(r.cases_failed, 0);
        assert!(verify_range("eq5", &Ranges::new().with("k", 0..=3), &cfg).is_err());
        assert!(verify_range("eq5", &Ranges::new().with("x", 1..=3), &cfg).is_err());
    }

    #[test]
    fn range_parsing() {
        let r = Ranges::parse("k=1..8, n=0..=3;t=5").unwrap();
        assert_eq!(r.get("k"), Some(&(1..=8)));
        assert_eq!(r.get("n"), Some(&(0..=3)));
        assert_eq!(r.get("t"), Some(&(5..=5)));
        assert!(Ranges::parse("k=3..1").is_err());
        assert!(Ranges::parse("k").is_err());
        assert!(parse_span("a..b").is_err());
    }

    #[test]
    fn samples_expand_cases() {
        let cfg = VerifyConfig::default();
        let cases = expand_cases("pair1_eh", &Ranges::new().with("k", 1..=3), &cfg).unwrap();
        assert_eq!(cases.len(), 15);
        let cfg = VerifyConfig {
            samples: Some(2),
            ..Default::default()
        };
        assert_eq!(
            expand_cases("lemma7_roundtrip", &Ranges::new(), &cfg)
                .unwrap()
                .len(),
            16
        );
        assert_eq!(
            expand_cases("eq5", &Ranges::new(), &cfg).unwrap().len(),
            110
        );
        let zero = VerifyConfig {
            samples: Some(0),
            ..Default::default()
        };
        assert!(expand_cases("pair1_eh", &Ranges::new(), &zero).is_err());
    }

    #[test]
    fn pair_cases_record_drawn_values() {
        let cfg = VerifyConfig {
            a: Some(rat(2, 3)),
            ..Default::default()
        };
        let r = verify_case("pair1_eh", &case(&[("k", 3)]).with_sample(0), &cfg).unwrap();
        assert!(r.pass);
        assert!(r.params.contains(&("a".to_string(), "2/3".to_string())));
        let same = VerifyConfig {
            a: Some(rat(1, 2)),
            b: Some(rat(1, 2)),
            ..Default::default()
        };
        assert!(verify_case("pair5_eh", &case(&[("k", 2)]), &same).is_err());
    }

    #[test]
    fn pointwise_forms_hold() {
        for k in 1..=12 {
            for n in 0..=12 {
                assert!(run("eq13", &[("k", k), ("n", n)]).pass, "eq13 k={k} n={n}");
                assert!(run("eq47", &[("k", k), ("n", n)]).pass, "eq47 k={k} n={n}");
                if k >= 2 {
                    assert!(run("eq29", &[("k", k), ("n", n)]).pass, "eq29 k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn equivalent_forms_agree() {
        // enumeration LHS = inclusion-exclusion double sum = alternating single sum
        for k in 1..=8usize {
            for n in 0..=6i64 {
                let enumerated = run("eq5", &[("k", k as i64), ("n", n)]);
                let double: Integer = (1..=k)
                    .map(|r| {
                        int(sign((k - r) as i64))
                            * inner_sum_closed_binomial(&int(n), k, r).unwrap()
                    })
                    .sum();
                let ki = k as i64;
                let single: Integer = (1..=ki)
                    .map(|i| int(sign(i)) * binom(n * i, ki) * binom(ki + 1, i + 1))
                    .sum::<Integer>()
                    * int(sign(ki));
                assert_eq!(enumerated.lhs, double.to_string());
                assert_eq!(double, single);
                assert_eq!(single, binom(n + ki - 1, ki));
            }
        }
    }

    #[test]
    fn failing_report_keeps_both_sides() {
        // A deliberately wrong pairing: feeding h-terms where e-terms belong.
        let pair = crate::symfun::binomial_pair(&int(3), 3).unwrap();
        let wrong = EhPair {
            e: pair.h.clone(),
            h: pair.h.clone(),
        };
        let out = transform_side(&wrong, true, 3, Budget::default()).unwrap();
        assert!(!out.pass);
        assert_ne!(out.lhs, out.rhs);
    }

    #[test]
    fn suite_json_shape() {
        let cfg = VerifyConfig::default();
        let r = verify_range(
            "eq6",
            &Ranges::new().with("k", 1..=2).with("n", 1..=2),
            &cfg,
        )
        .unwrap();
        assert_eq!(
            r.to_json(false),
            r#"{"id":"eq6","cases":4,"failed":0,"failures":[]}"#
        );
        assert!(r.to_json(true).contains("\"elapsed_ms\":"));
    }

    #[test]
    fn jobs_do_not_change_results() {
        let one = VerifyConfig {
            jobs: Some(1),
            ..Default::default()
        };
        let four = VerifyConfig {
            jobs: Some(4),
            ..Default::default()
        };
        let ranges = Ranges::new().with("k", 1..=5);
        let a = verify_range("pair2_he", &ranges, &one).unwrap();
        let b = verify_range("pair2_he", &ranges, &four).unwrap();
        assert_eq!(a.to_json(false), b.to_json(false));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn pass_iff_sides_render_equal(k in 1i64..=9, n in 0i64..=9, id in prop::sample::select(vec!["eq5", "eq13", "eq47", "eq6"])) {
                let n = if id == "eq6" { n.max(1) } else { n };
                let r = run(id, &[("k", k), ("n", n)]);
                prop_assert_eq!(r.pass, r.lhs == r.rhs);
                prop_assert!(r.pass);
            }

            #[test]
            fn grid_size_is_product_of_spans(klo in 1i64..=6, kw in 0i64..=4, nlo in 0i64..=6, nw in 0i64..=4) {
                let ranges = Ranges::new().with("k", klo..=klo + kw).with("n", nlo..=nlo + nw);
                let r = verify_range("eq47", &ranges, &VerifyConfig::default()).unwrap();
                prop_assert_eq!(r.cases_total as i64, (kw + 1) * (nw + 1));
                prop_assert_eq!(r.passed(), r.cases_failed == 0);
            }

            #[test]
            fn triangular_ranges_skip_excluded_pairs(kmax in 1i64..=12) {
                let ranges = Ranges::new().with("k", 1..=kmax).with("t", 1..=kmax);
                let r = verify_range("eq19", &ranges, &VerifyConfig::default()).unwrap();
                prop_assert_eq!(r.cases_total as i64, kmax * (kmax + 1) / 2);
                prop_assert!(r.passed());
            }

            #[test]
            fn seeds_reproduce(seed in any::<u64>()) {
                let cfg = VerifyConfig { seed, samples: Some(2), ..Default::default() };
                let ranges = Ranges::new().with("k", 1..=4);
                let a = verify_range("pair2_eh", &ranges, &cfg).unwrap();
                let b = verify_range("pair2_eh", &ranges, &cfg).unwrap();
                prop_assert_eq!(a.to_json(false), b.to_json(false));
                prop_assert!(a.passed());
            }
        }
    }
}
