//! Odd divided difference operators.
//!
//! `∂_i` is the degree `-2` operator with `∂_i(x_j) = 1` for `j ∈ {i, i+1}`,
//! zero on other variables, and twisted Leibniz rule
//! `∂_i(fg) = ∂_i(f) g + s_i(f) ∂_i(g)`. Words are read like operator
//! products: the leftmost letter acts last.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::skewpoly::{Monomial, SkewPolynomial};
use crate::{binom, Error, Result};

/// `∂_i(x_i^p x_{i+1}^q)` in the two active variables as `(r, s) -> c`
/// meaning `c x_i^r x_{i+1}^s`.
type Kernel = Vec<((u16, u16), i64)>;

static KERNELS: Lazy<RwLock<HashMap<(u16, u16), std::sync::Arc<Kernel>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn kernel(p: u16, q: u16) -> std::sync::Arc<Kernel> {
    if let Some(k) = KERNELS.read().get(&(p, q)) {
        return k.clone();
    }
    let mut acc: HashMap<(u16, u16), i64> = HashMap::new();
    let (pi, qi) = (p as i64, q as i64);
    // ∂(x_i^p) x_{i+1}^q with ∂(x_i^p) = sum_j (-1)^j x_{i+1}^j x_i^{p-1-j}
    for j in 0..pi {
        let r = pi - 1 - j;
        let sgn = crate::sign(j + j * r);
        *acc.entry((r as u16, (j + qi) as u16)).or_default() += sgn;
    }
    // s_i(x_i^p) ∂(x_{i+1}^q) = (-1)^p x_{i+1}^p sum_j (-1)^j x_i^j x_{i+1}^{q-1-j}
    for j in 0..qi {
        let sgn = crate::sign(pi + j + pi * j);
        *acc.entry((j as u16, (pi + qi - 1 - j) as u16)).or_default() += sgn;
    }
    let mut k: Kernel = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    k.sort();
    let k = std::sync::Arc::new(k);
    KERNELS.write().insert((p, q), k.clone());
    k
}

/// `∂_i` on a single normal-ordered monomial, accumulated into `out` with factor `c`.
fn dd_monomial_into(i: usize, m: &Monomial, c: &BigInt, out: &mut SkewPolynomial) {
    let (p, q) = (m.0[i - 1], m.0[i]);
    if p == 0 && q == 0 {
        return;
    }
    let left: usize = m.0[..i - 1].iter().map(|&e| e as usize).sum();
    let k = kernel(p, q);
    for ((r, s), kc) in k.iter() {
        let mut n = m.clone();
        n.0[i - 1] = *r;
        n.0[i] = *s;
        let sgn = if left % 2 == 1 { -kc } else { *kc };
        out.add_term(n, c * BigInt::from(sgn));
    }
}

/// `∂_i(p)` for `1 <= i < a`.
pub fn divided_difference(i: usize, p: &SkewPolynomial) -> Result<SkewPolynomial> {
    if i == 0 || i >= p.nvars() {
        return Err(Error::OutOfRange { what: "divided difference", index: i });
    }
    Ok(dd_unchecked(i, p))
}

fn dd_unchecked(i: usize, p: &SkewPolynomial) -> SkewPolynomial {
    let mut out = SkewPolynomial::zero(p.nvars());
    for (m, c) in p.terms() {
        dd_monomial_into(i, m, c, &mut out);
    }
    out
}

/// A twisted derivation evaluated letter by letter on a monomial:
/// `δ(y_1...y_n) = sum_k t(y_1...y_{k-1}) δ(y_k) y_{k+1}...y_n`, where `t` sends
/// `x_h -> -x_{τ(h)}` for the transposition `τ = (i j)` and `δ(x_h) = [h ∈ {i,j}]`.
fn leibniz_letters(i: usize, j: usize, m: &Monomial) -> SkewPolynomial {
    let a = m.nvars();
    let letters = m.letters();
    let tau = |h: usize| if h == i { j } else if h == j { i } else { h };
    let mut out = SkewPolynomial::zero(a);
    for (k, &y) in letters.iter().enumerate() {
        if y != i && y != j {
            continue;
        }
        let mut word: Vec<usize> = letters[..k].iter().map(|&h| tau(h)).collect();
        word.extend_from_slice(&letters[k + 1..]);
        let mut term = SkewPolynomial::from_letters(a, &word);
        if k % 2 == 1 {
            term = -&term;
        }
        out += &term;
    }
    out
}

/// `∂_{i,j}` for a non-adjacent (or adjacent) transposition, by the Leibniz rule.
pub fn dd_nonadjacent(i: usize, j: usize, p: &SkewPolynomial) -> Result<SkewPolynomial> {
    let a = p.nvars();
    if i == j {
        return Err(Error::Invalid("∂_{i,j} needs i != j".into()));
    }
    let (i, j) = (i.min(j), i.max(j));
    if i == 0 || j > a {
        return Err(Error::OutOfRange { what: "∂_{i,j}", index: j });
    }
    let mut out = SkewPolynomial::zero(a);
    for (m, c) in p.terms() {
        out.add_scaled(&leibniz_letters(i, j, m), c);
    }
    Ok(out)
}

/// The transposition `s_{i,j}`: `x_i -> -x_j`, `x_j -> -x_i`, `x_h -> -x_h`.
pub fn apply_transposition(i: usize, j: usize, p: &SkewPolynomial) -> SkewPolynomial {
    let a = p.nvars();
    let tau = |h: usize| if h == i { j } else if h == j { i } else { h };
    let mut out = SkewPolynomial::zero(a);
    for (m, c) in p.terms() {
        let word: Vec<usize> = m.letters().into_iter().map(tau).collect();
        let mut t = SkewPolynomial::from_letters(a, &word);
        if m.degree() % 2 == 1 {
            t = -&t;
        }
        out.add_scaled(&t, c);
    }
    out
}

/// Apply `∂_{i_1} ... ∂_{i_r}` (rightmost first).
pub fn dd_word(word: &[usize], p: &SkewPolynomial) -> Result<SkewPolynomial> {
    let mut r = p.clone();
    for &i in word.iter().rev() {
        r = divided_difference(i, &r)?;
        if r.is_zero() {
            break;
        }
    }
    Ok(r)
}

/// The fixed word `∂_1 (∂_2 ∂_1) (∂_3 ∂_2 ∂_1) ... (∂_{a-1} ... ∂_1)` of `D_a`.
pub fn longest_word(a: usize) -> Vec<usize> {
    (1..a).flat_map(|k| (1..=k).rev()).collect()
}

static DA_CACHE: Lazy<RwLock<HashMap<Monomial, SkewPolynomial>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `D_a` on one monomial, memoized.
fn longest_dd_monomial(m: &Monomial) -> SkewPolynomial {
    let a = m.nvars();
    let needed = a * a.saturating_sub(1) / 2;
    if m.degree() < needed {
        return SkewPolynomial::zero(a);
    }
    if let Some(r) = DA_CACHE.read().get(m) {
        return r.clone();
    }
    let p = SkewPolynomial::from_monomial(m.clone(), BigInt::one());
    let r = dd_word(&longest_word(a), &p).expect("D_a letters are in range");
    DA_CACHE.write().insert(m.clone(), r.clone());
    r
}

/// `D_a(p)` with `a = p.nvars()`.
pub fn longest_dd(p: &SkewPolynomial) -> SkewPolynomial {
    let mut out = SkewPolynomial::zero(p.nvars());
    for (m, c) in p.terms() {
        out.add_scaled(&longest_dd_monomial(m), c);
    }
    out
}

/// Bits `ξ` attached to the letters of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSelector(pub Vec<bool>);

impl ActionSelector {
    /// The subword of letters where `ξ = 0`.
    pub fn omission_word(&self, word: &[usize]) -> Vec<usize> {
        word.iter().zip(&self.0).filter(|(_, &b)| !b).map(|(&i, _)| i).collect()
    }

    /// All `2^r` selectors for a word of length `r`.
    pub fn all(r: usize) -> Vec<ActionSelector> {
        (0..1u64 << r)
            .map(|bits| ActionSelector((0..r).map(|k| bits >> k & 1 == 1).collect()))
            .collect()
    }
}

/// Letter `j` acts as `∂_{i_j}` where `ξ(j) = 1` and as `s_{i_j}` where `ξ(j) = 0`.
pub fn generalized_action(
    word: &[usize],
    xi: &ActionSelector,
    p: &SkewPolynomial,
) -> Result<SkewPolynomial> {
    if xi.0.len() != word.len() {
        return Err(Error::Invalid("selector length differs from word length".into()));
    }
    let mut r = p.clone();
    for (&i, &b) in word.iter().zip(&xi.0).rev() {
        r = if b { divided_difference(i, &r)? } else { r.apply_simple(i)? };
    }
    Ok(r)
}

/// Odd symmetrization `(-1)^{binom(a,3)} (D_a(f x^δ))^{w_0}`.
pub fn odd_symmetrize(p: &SkewPolynomial) -> SkewPolynomial {
    let a = p.nvars();
    let stair = p.mul_monomial_right(&Monomial::staircase(a));
    let r = longest_dd(&stair).apply_w0();
    if binom(a as i64, 3) % 2 == 1 {
        -&r
    } else {
        r
    }
}

/// Coefficient helper for tests and checks.
pub fn is_constant(p: &SkewPolynomial, c: i64) -> bool {
    let a = p.nvars();
    if c == 0 {
        return p.is_zero();
    }
    p.len() == 1 && p.coeff(&Monomial::one(a)) == BigInt::from(c)
}

/// True iff every `∂_i` kills `p`.
pub fn killed_by_all(p: &SkewPolynomial) -> bool {
    (1..p.nvars()).all(|i| dd_unchecked(i, p).is_zero())
}
