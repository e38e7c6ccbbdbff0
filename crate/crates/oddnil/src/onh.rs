//! The odd nilHecke algebra `ONH_a` acting on `OPol_a`.
//!
//! Elements are integer combinations of words in dots `x_i` and crossings
//! `∂_i`. A word is read like an operator product, so its leftmost letter acts
//! last (top of the diagram). Equality is decided by evaluation on the odd
//! Schubert basis.

pub mod thick;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::combinat::Permutation;
use crate::oddops::divided_difference;
use crate::oddsym::schubert;
use crate::skewpoly::{Monomial, SkewPolynomial};
use crate::{Error, Result};

/// Word-count above which products are rewritten in the standard basis.
pub const DEFAULT_NORMALIZE_THRESHOLD: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Dot(u8),
    Cross(u8),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Dot(i) | Letter::Cross(i) => i as usize,
        }
    }

    fn shifted(self, k: usize) -> Letter {
        match self {
            Letter::Dot(i) => Letter::Dot(i + k as u8),
            Letter::Cross(i) => Letter::Cross(i + k as u8),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OnhWord(pub Vec<Letter>);

impl OnhWord {
    pub fn dots(&self) -> usize {
        self.0.iter().filter(|l| matches!(l, Letter::Dot(_))).count()
    }

    pub fn crossings(&self) -> usize {
        self.0.len() - self.dots()
    }

    /// Z-degree `2 (#dots - #crossings)`.
    pub fn degree(&self) -> i64 {
        2 * (self.dots() as i64 - self.crossings() as i64)
    }

    pub fn concat(&self, other: &OnhWord) -> OnhWord {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        OnhWord(v)
    }

    /// Dots spelling the normal-ordered monomial `x^A`.
    pub fn from_monomial(m: &Monomial) -> OnhWord {
        OnhWord(m.letters().into_iter().map(|i| Letter::Dot(i as u8)).collect())
    }

    /// Crossings `∂_{i_1} ... ∂_{i_r}`.
    pub fn from_crossings(word: &[usize]) -> OnhWord {
        OnhWord(word.iter().map(|&i| Letter::Cross(i as u8)).collect())
    }

    /// Apply to a polynomial, rightmost letter first.
    pub fn apply(&self, p: &SkewPolynomial) -> SkewPolynomial {
        let a = p.nvars();
        let mut r = p.clone();
        for l in self.0.iter().rev() {
            if r.is_zero() {
                break;
            }
            r = match *l {
                Letter::Dot(i) => r.mul_monomial_left(&Monomial::var(a, i as usize)),
                Letter::Cross(i) => divided_difference(i as usize, &r).expect("letter in range"),
            };
        }
        r
    }

    fn parse(s: &str) -> Result<OnhWord> {
        let mut v = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::Parse(format!("bad letter {tok:?}"));
            let (kind, idx) = tok.split_at(1);
            let i: u8 = idx.parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            v.push(match kind {
                "x" => Letter::Dot(i),
                "d" => Letter::Cross(i),
                _ => return Err(bad()),
            });
        }
        Ok(OnhWord(v))
    }
}

impl fmt::Display for OnhWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .0
            .iter()
            .map(|l| match l {
                Letter::Dot(i) => format!("x{i}"),
                Letter::Cross(i) => format!("d{i}"),
            })
            .collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Anything acting on `OPol_a` by an element of `ONH_a`.
pub trait Operator: Sync {
    fn strands(&self) -> usize;
    fn apply(&self, p: &SkewPolynomial) -> SkewPolynomial;
}

/// An integer combination of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnhElement {
    strands: usize,
    terms: BTreeMap<OnhWord, BigInt>,
}

impl OnhElement {
    pub fn zero(a: usize) -> Self {
        OnhElement { strands: a, terms: BTreeMap::new() }
    }

    pub fn identity(a: usize) -> Self {
        Self::from_word(a, OnhWord::default(), BigInt::one())
    }

    pub fn scalar(a: usize, c: impl Into<BigInt>) -> Self {
        Self::from_word(a, OnhWord::default(), c.into())
    }

    pub fn from_word(a: usize, w: OnhWord, c: BigInt) -> Self {
        let mut e = Self::zero(a);
        e.add_word(w, c);
        e
    }

    pub fn dot(a: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= a, "dot index out of range");
        Self::from_word(a, OnhWord(vec![Letter::Dot(i as u8)]), BigInt::one())
    }

    pub fn cross(a: usize, i: usize) -> Self {
        assert!(i >= 1 && i < a, "crossing index out of range");
        Self::from_word(a, OnhWord(vec![Letter::Cross(i as u8)]), BigInt::one())
    }

    /// `∂_{i_1} ... ∂_{i_r}`.
    pub fn crossings(a: usize, word: &[usize]) -> Self {
        Self::from_word(a, OnhWord::from_crossings(word), BigInt::one())
    }

    /// Left multiplication by the polynomial `p`.
    pub fn from_poly(p: &SkewPolynomial) -> Self {
        let mut e = Self::zero(p.nvars());
        for (m, c) in p.terms() {
            e.add_word(OnhWord::from_monomial(m), c.clone());
        }
        e
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OnhWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_word(&mut self, w: OnhWord, c: BigInt) {
        debug_assert!(w.0.iter().all(|l| match l {
            Letter::Dot(i) => (*i as usize) <= self.strands,
            Letter::Cross(i) => (*i as usize) < self.strands,
        }));
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &OnhElement) -> OnhElement {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_word(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &OnhElement) -> OnhElement {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> OnhElement {
        let mut r = Self::zero(self.strands);
        if !c.is_zero() {
            r.terms = self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect();
        }
        r
    }

    pub fn neg_if(&self, odd: bool) -> OnhElement {
        if odd {
            self.scale(&BigInt::from(-1))
        } else {
            self.clone()
        }
    }

    /// Product `self · other` (other acts first), normalized past the default threshold.
    pub fn mul(&self, other: &OnhElement) -> OnhElement {
        self.mul_with_threshold(other, DEFAULT_NORMALIZE_THRESHOLD)
    }

    pub fn checked_mul(&self, other: &OnhElement) -> Result<OnhElement> {
        if self.strands != other.strands {
            return Err(Error::VarMismatch(self.strands, other.strands));
        }
        Ok(self.mul(other))
    }

    pub fn mul_with_threshold(&self, other: &OnhElement, threshold: usize) -> OnhElement {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        let mut r = Self::zero(self.strands);
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                r.add_word(u.concat(v), c * d);
            }
        }
        if r.len() > threshold {
            r.normalize()
        } else {
            r
        }
    }

    /// Product of several factors, left to right.
    pub fn product(a: usize, factors: &[&OnhElement]) -> OnhElement {
        factors.iter().fold(Self::identity(a), |acc, f| acc.mul(f))
    }

    /// Homogeneous Z-degree, `None` if zero or inhomogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|w| w.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn evaluate(&self, p: &SkewPolynomial) -> Result<SkewPolynomial> {
        if p.nvars() != self.strands {
            return Err(Error::VarMismatch(self.strands, p.nvars()));
        }
        Ok(Operator::apply(self, p))
    }

    /// Place on strands `offset+1 ..= offset+a` of an `n`-strand algebra.
    pub fn embed(&self, offset: usize, n: usize) -> OnhElement {
        assert!(offset + self.strands <= n, "embedding out of range");
        let mut r = Self::zero(n);
        for (w, c) in &self.terms {
            r.add_word(OnhWord(w.0.iter().map(|l| l.shifted(offset)).collect()), c.clone());
        }
        r
    }

    /// Horizontal juxtaposition `self ⊗ other` (self on the left strands).
    pub fn tensor(&self, other: &OnhElement) -> OnhElement {
        let n = self.strands + other.strands;
        self.embed(0, n).mul(&other.embed(self.strands, n))
    }

    pub fn equals(&self, other: &OnhElement) -> bool {
        operators_equal(self, other)
    }

    pub fn is_zero(&self) -> bool {
        operators_equal(self, &OnhElement::zero(self.strands))
    }

    /// Coefficients in the basis `{x^A ∂_w}`.
    pub fn extract_standard_basis(&self) -> BTreeMap<(Monomial, Permutation), BigInt> {
        extract_standard_basis(self)
    }

    /// Rewrite in the standard basis `x^A ∂_w` (canonical words).
    pub fn normalize(&self) -> OnhElement {
        standard_form(self)
    }

    /// Reflection across a vertical axis: `x_i -> x_{a+1-i}`, `∂_i -> ∂_{a-i}`.
    pub fn sigma(&self) -> OnhElement {
        let a = self.strands as u8;
        let mut r = Self::zero(self.strands);
        for (w, c) in &self.terms {
            let v = w
                .0
                .iter()
                .map(|l| match *l {
                    Letter::Dot(i) => Letter::Dot(a + 1 - i),
                    Letter::Cross(i) => Letter::Cross(a - i),
                })
                .collect();
            r.add_word(OnhWord(v), c.clone());
        }
        r
    }

    /// Reflection across a horizontal axis: reverse every word.
    pub fn psi(&self) -> OnhElement {
        let mut r = Self::zero(self.strands);
        for (w, c) in &self.terms {
            let mut v = w.0.clone();
            v.reverse();
            r.add_word(OnhWord(v), c.clone());
        }
        r
    }

    /// Parse `2*"x1 d1" - "d1 x2" + ""` (empty quotes = identity).
    pub fn parse(s: &str, a: usize) -> Result<OnhElement> {
        let bad = |why: &str| Error::Parse(format!("{why} in element {s:?}"));
        let mut r = Self::zero(a);
        let mut rest = s.trim();
        let mut first = true;
        while !rest.is_empty() {
            let mut neg = false;
            if let Some(t) = rest.strip_prefix('-') {
                neg = true;
                rest = t.trim_start();
            } else if let Some(t) = rest.strip_prefix('+') {
                rest = t.trim_start();
            } else if !first {
                return Err(bad("expected sign"));
            }
            first = false;
            let q = rest.find('"').ok_or_else(|| bad("missing quoted word"))?;
            let cpart = rest[..q].trim().trim_end_matches('*').trim();
            let mut c = if cpart.is_empty() {
                BigInt::one()
            } else {
                cpart.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
            };
            let close = rest[q + 1..].find('"').ok_or_else(|| bad("unterminated word"))? + q + 1;
            let w = OnhWord::parse(&rest[q + 1..close])?;
            for l in &w.0 {
                let ok = match l {
                    Letter::Dot(i) => (*i as usize) <= a,
                    Letter::Cross(i) => (*i as usize) < a,
                };
                if !ok {
                    return Err(bad("letter index out of range"));
                }
            }
            if neg {
                c = -c;
            }
            r.add_word(w, c);
            rest = rest[close + 1..].trim_start();
        }
        Ok(r)
    }
}

impl fmt::Display for OnhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "\"{w}\"")?;
        }
        Ok(())
    }
}

impl Operator for OnhElement {
    fn strands(&self) -> usize {
        self.strands
    }

    fn apply(&self, p: &SkewPolynomial) -> SkewPolynomial {
        let mut out = SkewPolynomial::zero(p.nvars());
        for (w, c) in &self.terms {
            out.add_scaled(&w.apply(p), c);
        }
        out
    }
}

/// A product of elements evaluated factor by factor, never expanded.
pub struct Chain<'a> {
    strands: usize,
    factors: Vec<&'a OnhElement>,
}

impl<'a> Chain<'a> {
    pub fn new(factors: Vec<&'a OnhElement>) -> Self {
        let strands = factors.first().map(|f| f.strands()).unwrap_or(0);
        assert!(factors.iter().all(|f| f.strands() == strands), "strand mismatch");
        Chain { strands, factors }
    }
}

impl Operator for Chain<'_> {
    fn strands(&self) -> usize {
        self.strands
    }

    fn apply(&self, p: &SkewPolynomial) -> SkewPolynomial {
        let mut r = p.clone();
        for f in self.factors.iter().rev() {
            if r.is_zero() {
                break;
            }
            r = Operator::apply(*f, &r);
        }
        r
    }
}

/// A finite signed sum of operators.
pub struct SumOp<'a> {
    strands: usize,
    parts: Vec<(BigInt, &'a dyn Operator)>,
}

impl<'a> SumOp<'a> {
    pub fn new(strands: usize, parts: Vec<(BigInt, &'a dyn Operator)>) -> Self {
        SumOp { strands, parts }
    }
}

impl Operator for SumOp<'_> {
    fn strands(&self) -> usize {
        self.strands
    }

    fn apply(&self, p: &SkewPolynomial) -> SkewPolynomial {
        let mut out = SkewPolynomial::zero(p.nvars());
        for (c, op) in &self.parts {
            out.add_scaled(&op.apply(p), c);
        }
        out
    }
}

/// Schubert basis for `a` strands, ordered by length.
pub struct SchubertBasis {
    pub perms: Vec<Permutation>,
    pub polys: Vec<SkewPolynomial>,
}

static SCHUBERT_CACHE: Lazy<RwLock<HashMap<usize, Arc<SchubertBasis>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

pub fn schubert_basis(a: usize) -> Arc<SchubertBasis> {
    if let Some(b) = SCHUBERT_CACHE.read().get(&a) {
        return b.clone();
    }
    let perms = Permutation::all_by_length(a);
    let polys = perms.iter().map(schubert).collect();
    let b = Arc::new(SchubertBasis { perms, polys });
    SCHUBERT_CACHE.write().insert(a, b.clone());
    b
}

/// First Schubert polynomial on which two operators differ, if any.
pub fn first_difference(
    lhs: &dyn Operator,
    rhs: &dyn Operator,
) -> Option<(Permutation, SkewPolynomial, SkewPolynomial)> {
    let a = lhs.strands();
    assert_eq!(a, rhs.strands(), "strand mismatch");
    let basis = schubert_basis(a);
    for (w, s) in basis.perms.iter().zip(&basis.polys) {
        let (l, r) = (lhs.apply(s), rhs.apply(s));
        if l != r {
            return Some((w.clone(), l, r));
        }
    }
    None
}

pub fn operators_equal(lhs: &dyn Operator, rhs: &dyn Operator) -> bool {
    first_difference(lhs, rhs).is_none()
}

/// Triangular extraction of standard-basis coefficients of any operator.
pub fn extract_standard_basis(op: &dyn Operator) -> BTreeMap<(Monomial, Permutation), BigInt> {
    let a = op.strands();
    let basis = schubert_basis(a);
    // found terms grouped by permutation: u -> polynomial sum_A c x^A
    let mut found: Vec<(Permutation, Vec<usize>, SkewPolynomial)> = Vec::new();
    for (w, s) in basis.perms.iter().zip(&basis.polys) {
        let mut v = op.apply(s);
        for (_, word, coeffs) in &found {
            let du = crate::oddops::dd_word(word, s).expect("word in range");
            if !du.is_zero() {
                v = &v - &(coeffs * &du);
            }
        }
        if v.is_zero() {
            continue;
        }
        let word = w.canonical_reduced_word();
        let unit = crate::oddops::dd_word(&word, s).expect("word in range");
        let u = unit.coeff(&Monomial::one(a));
        assert!(unit.len() == 1 && u.abs().is_one(), "∂_w(𝔰_w) must be ±1");
        let coeffs = v.scale(&u);
        found.push((w.clone(), word, coeffs));
    }
    let mut out = BTreeMap::new();
    for (w, _, coeffs) in found {
        for (m, c) in coeffs.terms() {
            out.insert((m.clone(), w.clone()), c.clone());
        }
    }
    out
}

/// The operator re-expressed as `sum c x^A ∂_w` with canonical words.
pub fn standard_form(op: &dyn Operator) -> OnhElement {
    let a = op.strands();
    let mut e = OnhElement::zero(a);
    for ((m, w), c) in extract_standard_basis(op) {
        let word = OnhWord::from_monomial(&m).concat(&OnhWord::from_crossings(&w.canonical_reduced_word()));
        e.add_word(word, c);
    }
    e
}

/// Sign helper: `(-1)^e` as a BigInt.
pub fn sign_big(e: i64) -> BigInt {
    if e.is_even() {
        BigInt::one()
    } else {
        BigInt::from(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str, a: usize) -> OnhElement {
        OnhElement::parse(s, a).unwrap()
    }

    #[test]
    fn nilhecke_relations_small() {
        let lhs = el("\"x1 d1\" + \"d1 x2\"", 2);
        assert!(lhs.equals(&OnhElement::identity(2)));
        assert!(el("\"d1 d1\"", 2).is_zero());
        let e2 = el("\"x1 d1\"", 2);
        assert!(e2.mul(&e2).equals(&e2));
    }

    #[test]
    fn standard_basis_examples() {
        let one = OnhElement::identity(2).extract_standard_basis();
        assert_eq!(one.len(), 1);
        assert_eq!(one[&(Monomial::one(2), Permutation::identity(2))], BigInt::one());
        let dx = el("\"d1 x1\"", 2).extract_standard_basis();
        assert_eq!(dx.len(), 2);
        assert_eq!(dx[&(Monomial::one(2), Permutation::identity(2))], BigInt::one());
        assert_eq!(dx[&(Monomial::from_exps(&[0, 1]), Permutation::simple(1, 2))], BigInt::from(-1));
        let e2 = el("\"x1 d1\"", 2);
        assert_eq!(e2.mul(&e2).extract_standard_basis(), e2.extract_standard_basis());
    }

    #[test]
    fn normalize_roundtrip() {
        let e = el("3*\"d2 x1 d1 x3 x2\" - \"x2 d1 d2 d1\" + \"x3 x3 x1\"", 3);
        let n = e.normalize();
        assert!(n.equals(&e));
        assert!(n.terms().all(|(w, _)| w.0.len() <= 3 + 3 + 3));
    }

    #[test]
    fn text_roundtrip() {
        let e = el("2*\"x1 x1 d1 x2\" - \"d1\" + \"\"", 2);
        let again = el(&e.to_string(), 2);
        assert_eq!(e, again);
        assert!(OnhElement::parse("\"d2\"", 2).is_err());
        assert!(OnhElement::parse("\"y1\"", 2).is_err());
    }

    #[test]
    fn automorphisms_on_generators() {
        assert_eq!(OnhElement::cross(2, 1).sigma(), OnhElement::cross(2, 1));
        assert_eq!(el("\"x1 d2\"", 3).sigma(), el("\"x3 d1\"", 3));
        assert_eq!(el("\"x1 d2\"", 3).psi(), el("\"d2 x1\"", 3));
    }

    #[test]
    fn degrees() {
        assert_eq!(el("\"x1 x1 d1 x2\"", 2).degree(), Some(4));
        assert_eq!(el("\"x1 d1\"", 2).degree(), Some(0));
    }
}
