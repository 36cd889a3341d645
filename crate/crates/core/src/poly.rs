//! Exact expansion of graph polynomials and brute-force Alon-Tarsi numbers.
//!
//! Variable `x_i` belongs to vertex `i`. Every edge `{i, j}` with `i < j`
//! contributes the factor `x_i^D - x_j^D` (`D = 1` for the plain graph
//! polynomial). Coefficients are arbitrary-precision integers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::certificate::{AtCertificate, AugmentedOrientation};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_EXPANSION_CAP: usize = 20;

/// Exponent vector, one entry per variable. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Parse `x0^2*x1` (or `1`) over `nvars` variables.
    pub fn parse(text: &str, nvars: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; nvars];
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial(exps));
        }
        for factor in text.split('*') {
            let (var, exp) = parse_power(factor.trim())?;
            if var >= nvars {
                return Err(Error::Parse(format!(
                    "variable x{var} outside x0..x{}",
                    nvars.saturating_sub(1)
                )));
            }
            exps[var] += exp;
        }
        Ok(Monomial(exps))
    }
}

fn parse_power(token: &str) -> Result<(usize, u32)> {
    let bad = || Error::Parse(format!("bad variable power {token:?}"));
    let rest = token.strip_prefix('x').ok_or_else(bad)?;
    let (var, exp) = match rest.split_once('^') {
        Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    Ok((var.parse::<usize>().map_err(|_| bad())?, exp))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Polynomial with integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = SparsePolynomial::zero(nvars);
        p.terms.insert(Monomial::one(nvars), BigInt::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Result<Self> {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            if m.0.len() != nvars {
                return Err(Error::Parse(format!(
                    "monomial {m} has {} variables, expected {nvars}",
                    m.0.len()
                )));
            }
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Ok(Self::collect(nvars, acc))
    }

    fn collect(nvars: usize, acc: HashMap<Monomial, BigInt>) -> Self {
        SparsePolynomial {
            nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.times(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Self::collect(self.nvars, acc)
    }

    /// Multiply by `x_i^d - x_j^d`.
    fn mul_binomial(&self, i: usize, j: usize, d: u32) -> SparsePolynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(2 * self.terms.len());
        for (m, c) in &self.terms {
            let mut up = m.clone();
            up.0[i] += d;
            *acc.entry(up).or_insert_with(BigInt::zero) += c;
            let mut down = m.clone();
            down.0[j] += d;
            *acc.entry(down).or_insert_with(BigInt::zero) -= c;
        }
        Self::collect(self.nvars, acc)
    }

    /// Canonical text: terms by descending exponent vector, each as a signed
    /// coefficient followed by its variables, e.g. `+1 x0^2 x1 -1 x0^2 x2`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let sign = if c.is_negative() { '-' } else { '+' };
            let mut s = format!("{sign}{}", c.abs());
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => s.push_str(&format!(" x{i}")),
                    _ => s.push_str(&format!(" x{i}^{e}")),
                }
            }
            parts.push(s);
        }
        parts.join(" ")
    }

    /// Inverse of [`to_text`](Self::to_text).
    pub fn parse(text: &str, nvars: usize) -> Result<SparsePolynomial> {
        let text = text.trim();
        if text == "0" {
            return Ok(SparsePolynomial::zero(nvars));
        }
        let mut terms = Vec::new();
        let mut current: Option<(BigInt, Vec<u32>)> = None;
        for token in text.split_whitespace() {
            if token.starts_with('+') || token.starts_with('-') {
                if let Some((c, e)) = current.take() {
                    terms.push((Monomial(e), c));
                }
                let c: BigInt = token
                    .trim_start_matches('+')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {token:?}")))?;
                current = Some((c, vec![0; nvars]));
            } else {
                let (var, exp) = parse_power(token)?;
                let Some((_, exps)) = current.as_mut() else {
                    return Err(Error::Parse(format!("variable {token:?} before a coefficient")));
                };
                if var >= nvars {
                    return Err(Error::Parse(format!("variable x{var} out of range")));
                }
                exps[var] += exp;
            }
        }
        if let Some((c, e)) = current {
            terms.push((Monomial(e), c));
        }
        SparsePolynomial::from_terms(nvars, terms)
    }
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

fn expand_product(g: &SimpleGraph, strengths: &[u32]) -> SparsePolynomial {
    g.edges()
        .iter()
        .zip(strengths)
        .fold(SparsePolynomial::one(g.n()), |p, (&(i, j), &d)| {
            p.mul_binomial(i, j, d)
        })
}

/// `f_G`: product over edges `i < j` of `(x_i - x_j)`.
pub fn graph_polynomial(g: &SimpleGraph, cap: usize) -> Result<SparsePolynomial> {
    check_cap("graph polynomial expansion", g.edge_count(), cap)?;
    Ok(expand_product(g, &vec![1; g.edge_count()]))
}

/// `W_{G,D}`: product over edges `i < j` of `(x_i^D - x_j^D)`. The edge
/// directions of `a` play no role.
pub fn augmented_polynomial(a: &AugmentedOrientation, cap: usize) -> Result<SparsePolynomial> {
    check_cap("augmented polynomial expansion", a.edge_count(), cap)?;
    Ok(expand_product(a.graph(), a.strengths()))
}

/// The cofactor `P` with `W_{G,D} = f_G * P`: for each edge the geometric sum
/// `x_i^(D-1) + x_i^(D-2) x_j + ... + x_j^(D-1)`.
pub fn geometric_multiplier(g: &SimpleGraph, strengths: &[u32]) -> SparsePolynomial {
    let n = g.n();
    g.edges()
        .iter()
        .zip(strengths)
        .filter(|(_, &d)| d > 1)
        .fold(SparsePolynomial::one(n), |p, (&(i, j), &d)| {
            let factor = SparsePolynomial::from_terms(
                n,
                (0..d).map(|k| {
                    let mut e = vec![0; n];
                    e[i] = d - 1 - k;
                    e[j] += k;
                    (Monomial(e), BigInt::one())
                }),
            )
            .expect("well-formed factor");
            p.mul(&factor)
        })
}

/// Minimum, over top-degree monomials with nonzero coefficient, of the
/// largest single exponent.
pub fn alpha(p: &SparsePolynomial) -> Result<u32> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(p.terms
        .keys()
        .filter(|m| m.degree() == deg)
        .map(Monomial::max_exponent)
        .min()
        .expect("top-degree term exists"))
}

/// `AT(G) = alpha(f_G) + 1`.
pub fn at_number_exact(g: &SimpleGraph, cap: usize) -> Result<u32> {
    Ok(alpha(&graph_polynomial(g, cap)?)? + 1)
}

/// Coefficient of `m` in `W_{G,D}`, summed over the orientations whose
/// augmented in-degree vector equals `m`. Each orientation contributes `+1`
/// or `-1`: `-1` for every edge directed to its larger endpoint.
pub fn coefficient_via_orientations(
    g: &SimpleGraph,
    strengths: &[u32],
    m: &Monomial,
    cap: usize,
) -> Result<BigInt> {
    check_cap("orientation enumeration", g.edge_count(), cap)?;
    if m.0.len() != g.n() || strengths.len() != g.edge_count() {
        return Err(Error::Parse(format!(
            "monomial over {} variables / {} strengths for a graph with {} vertices and {} edges",
            m.0.len(),
            strengths.len(),
            g.n(),
            g.edge_count()
        )));
    }
    let target: Vec<i64> = m.0.iter().map(|&e| i64::from(e)).collect();
    let mut remaining = vec![0i64; g.n()];
    for (&(u, v), &d) in g.edges().iter().zip(strengths) {
        remaining[u] += i64::from(d);
        remaining[v] += i64::from(d);
    }
    struct Walk<'a> {
        edges: &'a [(usize, usize)],
        strengths: &'a [u32],
        target: Vec<i64>,
        indeg: Vec<i64>,
        remaining: Vec<i64>,
        total: BigInt,
    }
    impl Walk<'_> {
        fn ok(&self, v: usize) -> bool {
            self.indeg[v] <= self.target[v] && self.target[v] - self.indeg[v] <= self.remaining[v]
        }
        fn go(&mut self, k: usize, negative: bool) {
            if k == self.edges.len() {
                if negative {
                    self.total -= 1;
                } else {
                    self.total += 1;
                }
                return;
            }
            let (i, j) = self.edges[k];
            let d = i64::from(self.strengths[k]);
            self.remaining[i] -= d;
            self.remaining[j] -= d;
            for (head, flips) in [(i, false), (j, true)] {
                self.indeg[head] += d;
                if self.ok(i) && self.ok(j) {
                    self.go(k + 1, negative ^ flips);
                }
                self.indeg[head] -= d;
            }
            self.remaining[i] += d;
            self.remaining[j] += d;
        }
    }
    let mut walk = Walk {
        edges: g.edges(),
        strengths,
        target,
        indeg: vec![0; g.n()],
        remaining,
        total: BigInt::zero(),
    };
    if (0..g.n()).all(|v| walk.ok(v)) {
        walk.go(0, false);
    }
    Ok(walk.total)
}

/// Outcome of checking a certificate against the expanded polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialReport {
    /// Exponent vector of the certificate orientation (its augmented in-degrees).
    pub monomial: String,
    pub coefficient: String,
    pub top_degree: u32,
    pub max_exponent: u32,
    pub alpha_augmented: u32,
    pub alpha_graph: u32,
    pub divisibility_holds: bool,
    pub multiplier_terms: usize,
    /// `max_exponent + 1`, the certified Alon-Tarsi bound.
    pub at_bound: u32,
    pub failures: Vec<String>,
}

impl MonomialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Expand `f_G`, `W_{G,D}` and the multiplier `P`, and check that the
/// certificate's monomial witnesses `alpha(f_G) <= alpha(W_{G,D}) <= 4`.
pub fn certify_monomial(cert: &AtCertificate, cap: usize) -> Result<MonomialReport> {
    let a = &cert.augmented;
    let g = a.graph();
    let f = graph_polynomial(g, cap)?;
    let w = augmented_polynomial(a, cap)?;
    let p = geometric_multiplier(g, a.strengths());
    let divisibility_holds = f.mul(&p) == w;
    let m = Monomial(a.augmented_indegrees());
    let coefficient = w.coefficient(&m);
    let top_degree = w.degree().unwrap_or(0);
    let alpha_augmented = alpha(&w)?;
    let alpha_graph = alpha(&f)?;
    let max_exponent = m.max_exponent();
    let mut failures = Vec::new();
    if !divisibility_holds {
        failures.push("W_{G,D} differs from f_G * P".into());
    }
    if coefficient.abs() != BigInt::one() {
        failures.push(format!("coefficient of {m} is {coefficient}, not +-1"));
    }
    if m.degree() != top_degree {
        failures.push(format!(
            "monomial degree {} differs from deg W = {top_degree}",
            m.degree()
        ));
    }
    if max_exponent > 4 {
        failures.push(format!("monomial {m} has an exponent above 4"));
    }
    if alpha_augmented > max_exponent && !coefficient.is_zero() {
        failures.push("alpha(W) exceeds the certificate exponent".into());
    }
    if alpha_graph > alpha_augmented {
        failures.push(format!(
            "alpha(f_G) = {alpha_graph} exceeds alpha(W) = {alpha_augmented}"
        ));
    }
    Ok(MonomialReport {
        monomial: m.to_string(),
        coefficient: coefficient.to_string(),
        top_degree,
        max_exponent,
        alpha_augmented,
        alpha_graph,
        divisibility_holds,
        multiplier_terms: p.term_count(),
        at_bound: max_exponent + 1,
        failures,
    })
}
