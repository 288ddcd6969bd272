//! Multihomogeneous polynomials in coordinate pairs `(alpha_i, beta_i)`.
//!
//! A polynomial of multidegree `m = (m_1, ..., m_n)` is a global section of
//! `O(m_1) ⊗ ... ⊗ O(m_n)` on `(P^1)^n`. Monomials are stored by their
//! beta-exponents `q`; the alpha-exponent of pair `i` is `m_i - q_i`. The
//! section `alpha_i` evaluates to `a` at `[a:b]`, `beta_i` to `b`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::Rational;

/// Degree in each coordinate pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(m: Vec<u32>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::InvalidMultidegree("needs at least one factor".into()));
        }
        Ok(Multidegree(m))
    }

    /// All-zero multidegree on `n` pairs (the constants).
    pub fn zero(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of coordinate pairs.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn scaled(&self, k: u32) -> Multidegree {
        Multidegree(self.0.iter().map(|&x| x * k).collect())
    }

    /// Appends one more pair of degree `last`.
    pub fn extended(&self, last: u32) -> Multidegree {
        let mut m = self.0.clone();
        m.push(last);
        Multidegree(m)
    }

    /// Dimension of the space of sections, `prod (m_i + 1)`.
    pub fn basis_size(&self) -> u128 {
        self.0.iter().map(|&x| u128::from(x) + 1).product()
    }

    /// Canonical `m1,m2,...` rendering, used as a cache key component.
    pub fn key(&self) -> String {
        self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

/// Beta-exponent vector of a monomial. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(q: Vec<u32>) -> Self {
        Monomial(q)
    }

    pub fn q(&self) -> &[u32] {
        &self.0
    }

    pub fn conforms_to(&self, m: &Multidegree) -> bool {
        self.0.len() == m.len() && self.0.iter().zip(m.as_slice()).all(|(q, m)| q <= m)
    }

    /// Torus weight `sum_i (2 q_i - m_i)`.
    pub fn weight(&self, m: &Multidegree) -> i64 {
        self.0
            .iter()
            .zip(m.as_slice())
            .map(|(&q, &m)| 2 * i64::from(q) - i64::from(m))
            .sum()
    }
}

/// Monomials of multidegree `m`, ascending lexicographically in `q`.
pub fn basis(m: &Multidegree) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut q = vec![0u32; m.len()];
    loop {
        out.push(Monomial(q.clone()));
        // odometer, last coordinate fastest
        let mut i = m.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if q[i] < m.as_slice()[i] {
                q[i] += 1;
                break;
            }
            q[i] = 0;
        }
    }
}

/// Monomials of multidegree `m` with torus weight `w`, in basis order.
pub fn weight_monomials(m: &Multidegree, w: i64) -> Vec<Monomial> {
    let total = m.total() as i64;
    if (w + total) % 2 != 0 || w.abs() > total {
        return Vec::new();
    }
    let target = ((w + total) / 2) as u64;
    let degs = m.as_slice();
    // suffix capacity: the most the remaining pairs can still absorb
    let mut cap = vec![0u64; degs.len() + 1];
    for i in (0..degs.len()).rev() {
        cap[i] = cap[i + 1] + u64::from(degs[i]);
    }
    let mut out = Vec::new();
    let mut q = Vec::with_capacity(degs.len());
    fill_weight(degs, &cap, target, &mut q, &mut out);
    out
}

fn fill_weight(degs: &[u32], cap: &[u64], remaining: u64, q: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    let i = q.len();
    if i == degs.len() {
        if remaining == 0 {
            out.push(Monomial(q.clone()));
        }
        return;
    }
    let lo = remaining.saturating_sub(cap[i + 1]);
    let hi = remaining.min(u64::from(degs[i]));
    for v in lo..=hi {
        q.push(v as u32);
        fill_weight(degs, cap, remaining - v, q, out);
        q.pop();
    }
}

/// Multihomogeneous polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolynomialJson", into = "PolynomialJson")]
pub struct Polynomial {
    m: Multidegree,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(m: Multidegree) -> Self {
        Polynomial {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Result<Self> {
        let m = Multidegree::zero(n)?;
        Ok(Self::monomial(m.clone(), Monomial(vec![0; n]), c).expect("constant conforms"))
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::constant(n, Rational::one())
    }

    pub fn monomial(m: Multidegree, q: Monomial, c: Rational) -> Result<Self> {
        let mut p = Self::zero(m);
        p.add_term(q, c)?;
        Ok(p)
    }

    /// Builds a polynomial from `(q, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(m: Multidegree, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(m);
        for (q, c) in terms {
            p.add_term(q, c)?;
        }
        Ok(p)
    }

    /// Linear combination of `monomials` with the given coefficients.
    pub fn from_coefficients(m: Multidegree, monomials: &[Monomial], coeffs: &[Rational]) -> Result<Self> {
        if monomials.len() != coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: monomials.len(),
                found: coeffs.len(),
            });
        }
        Self::from_terms(m, monomials.iter().cloned().zip(coeffs.iter().cloned()))
    }

    /// `alpha_i` on `n` pairs (0-based `i`).
    pub fn alpha(n: usize, i: usize) -> Self {
        Self::unit_pair(n, i, 0)
    }

    /// `beta_i` on `n` pairs (0-based `i`).
    pub fn beta(n: usize, i: usize) -> Self {
        Self::unit_pair(n, i, 1)
    }

    fn unit_pair(n: usize, i: usize, qi: u32) -> Self {
        assert!(i < n, "pair index {i} out of range for {n} pairs");
        let mut m = vec![0; n];
        m[i] = 1;
        let mut q = vec![0; n];
        q[i] = qi;
        Self::monomial(Multidegree(m), Monomial(q), Rational::one()).expect("unit pair conforms")
    }

    /// The bracket `alpha_j beta_k - beta_j alpha_k` (0-based, `j != k`).
    pub fn bracket(n: usize, j: usize, k: usize) -> Self {
        assert!(j != k, "bracket needs two distinct pairs");
        let a = Self::alpha(n, j).mul(&Self::beta(n, k)).expect("same pair count");
        let b = Self::beta(n, j).mul(&Self::alpha(n, k)).expect("same pair count");
        a.sub(&b).expect("same multidegree")
    }

    fn add_term(&mut self, q: Monomial, c: Rational) -> Result<()> {
        if !q.conforms_to(&self.m) {
            return Err(Error::InvalidPolynomial(format!(
                "monomial {:?} does not conform to multidegree {}",
                q.0, self.m
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(q);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn multidegree(&self) -> &Multidegree {
        &self.m
    }

    pub fn n_pairs(&self) -> usize {
        self.m.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, q: &Monomial) -> Rational {
        self.terms.get(q).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients against an explicit monomial list. Terms outside the list
    /// are reported by returning `None`.
    pub fn coefficients_in(&self, monomials: &[Monomial]) -> Option<Vec<Rational>> {
        let index: BTreeMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, q)| (q, i)).collect();
        let mut v = vec![Rational::zero(); monomials.len()];
        for (q, c) in &self.terms {
            v[*index.get(q)?] = c.clone();
        }
        Some(v)
    }

    /// `Some(w)` when every term has torus weight `w` (the zero polynomial has no weight).
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut weights = self.terms.keys().map(|q| q.weight(&self.m));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.m != other.m {
            return Err(Error::MultidegreeMismatch {
                left: self.m.0.clone(),
                right: other.m.0.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (q, c) in &other.terms {
            out.add_term(q.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.m.clone());
        }
        Polynomial {
            m: self.m.clone(),
            terms: self.terms.iter().map(|(q, v)| (q.clone(), v * c)).collect(),
        }
    }

    /// Product; multidegrees add componentwise. Both factors must live on the
    /// same number of pairs.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.n_pairs() != other.n_pairs() {
            return Err(Error::MultidegreeMismatch {
                left: self.m.0.clone(),
                right: other.m.0.clone(),
            });
        }
        let m = Multidegree(self.m.0.iter().zip(&other.m.0).map(|(a, b)| a + b).collect());
        let mut out = Polynomial::zero(m);
        for (q1, c1) in &self.terms {
            for (q2, c2) in &other.terms {
                let q = Monomial(q1.0.iter().zip(&q2.0).map(|(a, b)| a + b).collect());
                out.add_term(q, c1 * c2)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n_pairs()).expect("nonempty multidegree");
        for _ in 0..k {
            acc = acc.mul(self).expect("same pair count");
        }
        acc
    }

    /// Exact value at a point, substituting `alpha_i -> a_i`, `beta_i -> b_i`.
    pub fn eval(&self, x: &PointTuple) -> Result<Rational> {
        if x.len() != self.n_pairs() {
            return Err(Error::DimensionMismatch {
                expected: self.n_pairs(),
                found: x.len(),
            });
        }
        let powers: Vec<(Vec<BigInt>, Vec<BigInt>)> = x
            .coords()
            .iter()
            .zip(self.m.as_slice())
            .map(|((a, b), &mi)| (power_table(a, mi), power_table(b, mi)))
            .collect();
        let mut acc = Rational::zero();
        for (q, c) in &self.terms {
            let mut v = BigInt::one();
            for (i, &qi) in q.0.iter().enumerate() {
                let mi = self.m.0[i];
                let (ap, bp) = &powers[i];
                v *= &ap[(mi - qi) as usize];
                v *= &bp[qi as usize];
                if v.is_zero() {
                    break;
                }
            }
            if !v.is_zero() {
                acc += c * Rational::from_integer(v);
            }
        }
        Ok(acc)
    }

    /// Re-indexes the terms into multidegree `m`; terms mapped to `None` are dropped.
    pub(crate) fn filter_map_terms<F>(&self, m: Multidegree, mut f: F) -> Polynomial
    where
        F: FnMut(&Monomial) -> Option<Monomial>,
    {
        let mut out = Polynomial::zero(m);
        for (q, c) in &self.terms {
            if let Some(q2) = f(q) {
                out.add_term(q2, c.clone()).expect("mapped monomial conforms");
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidPolynomial(e.to_string()))
    }
}

fn power_table(base: &BigInt, top: u32) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(top as usize + 1);
    v.push(BigInt::one());
    for k in 1..=top as usize {
        let next = &v[k - 1] * base;
        v.push(next);
    }
    v
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Human-readable rendering, e.g. `a1*b2 - b1*a2` on multidegree `(1,1)`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (q, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            for (i, (&qi, &mi)) in q.0.iter().zip(&self.m.0).enumerate() {
                push_factor(&mut factors, 'a', i + 1, mi - qi);
                push_factor(&mut factors, 'b', i + 1, qi);
            }
            match (abs.is_one(), factors.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", factors.join("*"))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

fn push_factor(out: &mut Vec<String>, letter: char, idx: usize, exp: u32) {
    match exp {
        0 => {}
        1 => out.push(format!("{letter}{idx}")),
        e => out.push(format!("{letter}{idx}^{e}")),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolynomialJson {
    m: Vec<u32>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    q: Vec<u32>,
    c: String,
}

impl From<Polynomial> for PolynomialJson {
    fn from(p: Polynomial) -> Self {
        PolynomialJson {
            m: p.m.0,
            terms: p
                .terms
                .into_iter()
                .map(|(q, c)| TermJson {
                    q: q.0,
                    c: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(j: PolynomialJson) -> Result<Self> {
        let mut p = Polynomial::zero(Multidegree::new(j.m)?);
        for t in j.terms {
            let c = parse_rational(&t.c)?;
            let q = Monomial(t.q);
            if p.terms.contains_key(&q) {
                return Err(Error::InvalidPolynomial(format!("duplicate monomial {:?}", q.0)));
            }
            p.add_term(q, c)?;
        }
        Ok(p)
    }
}

/// Parses `"p"` or `"p/q"` (optional sign, no decimals).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidPolynomial(format!("bad rational literal {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// A point of `(P^1)^n` with integer homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointTuple {
    coords: Vec<(BigInt, BigInt)>,
}

impl PointTuple {
    pub fn new(coords: Vec<(BigInt, BigInt)>) -> Result<Self> {
        if let Some(i) = coords.iter().position(|(a, b)| a.is_zero() && b.is_zero()) {
            return Err(Error::InvalidPoint(format!("pair {} is [0:0]", i + 1)));
        }
        Ok(PointTuple { coords })
    }

    pub fn from_i64(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(a, b)| (a.into(), b.into())).collect())
    }

    /// Clears the denominators of each rational pair `[a:b]`.
    pub fn from_rationals(coords: &[(Rational, Rational)]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|(a, b)| {
                    let l = a.denom().lcm(b.denom());
                    (a.numer() * (&l / a.denom()), b.numer() * (&l / b.denom()))
                })
                .collect(),
        )
    }

    pub fn coords(&self) -> &[(BigInt, BigInt)] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Equality in `(P^1)^n`: each pair agrees up to a nonzero scalar.
    pub fn projectively_eq(&self, other: &PointTuple) -> bool {
        self.len() == other.len()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|((a1, b1), (a2, b2))| a1 * b2 == a2 * b1)
    }

    /// Each pair divided by its gcd, with the sign fixed so that the last
    /// nonzero coordinate is positive.
    pub fn normalized(&self) -> PointTuple {
        let coords = self
            .coords
            .iter()
            .map(|(a, b)| {
                let g = a.gcd(b);
                let (mut a, mut b) = (a / &g, b / &g);
                if b.is_negative() || (b.is_zero() && a.is_negative()) {
                    a = -a;
                    b = -b;
                }
                (a, b)
            })
            .collect();
        PointTuple { coords }
    }

    /// Pair strings `"a:b"` in order.
    pub fn pair_strings(&self) -> Vec<String> {
        self.coords.iter().map(|(a, b)| format!("{a}:{b}")).collect()
    }
}

impl fmt::Display for PointTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pair_strings().join(","))
    }
}

/// Parses `"a1:b1,a2:b2,..."`; entries may be rationals `p/q`.
impl FromStr for PointTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPoint("empty point".into()));
        }
        let pairs = s
            .split(',')
            .map(|pair| {
                let (a, b) = pair
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidPoint(format!("pair {pair:?} lacks ':'")))?;
                let parse =
                    |t: &str| parse_rational(t).map_err(|_| Error::InvalidPoint(format!("bad coordinate {t:?}")));
                Ok((parse(a)?, parse(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        PointTuple::from_rationals(&pairs)
    }
}
