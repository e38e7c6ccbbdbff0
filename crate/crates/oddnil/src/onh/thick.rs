//! Thick calculus realized as explicit elements of `ONH_n`.
//!
//! Diagrams are stacked with the top factor on the left. A bundle of `a`
//! strands starting at strand `offset + 1` is written `(a, offset)`.

use num_bigint::BigInt;

use crate::combinat::{Partition, Permutation, SeqChoice};
use crate::oddops::longest_word;
use crate::oddsym::{dual_schur, elementary, is_odd_symmetric, schur};
use crate::onh::{OnhElement, OnhWord};
use crate::skewpoly::{Monomial, SkewPolynomial};
use crate::{binom, Error, Result};

/// 0-Hecke generator `∂̄_r = x_r ∂_r`.
pub fn zero_hecke(r: usize, n: usize) -> OnhElement {
    OnhElement::dot(n, r).mul(&OnhElement::cross(n, r))
}

/// `e_a`: the product of `∂̄` along a reduced word of `w_0`.
pub fn idempotent_e(a: usize) -> OnhElement {
    let word = Permutation::longest(a).canonical_reduced_word();
    word.iter()
        .fold(OnhElement::identity(a), |acc, &r| acc.mul(&zero_hecke(r, a)))
}

/// `e_a` on strands `offset+1 ..= offset+a` of `n`.
pub fn e_embedded(a: usize, offset: usize, n: usize) -> OnhElement {
    idempotent_e(a).embed(offset, n)
}

/// `D_a` with its fixed word.
pub fn longest_element(a: usize) -> OnhElement {
    OnhElement::crossings(a, &longest_word(a))
}

/// Left multiplication by `x^δ`.
pub fn staircase_dots(a: usize) -> OnhElement {
    OnhElement::from_word(a, OnhWord::from_monomial(&Monomial::staircase(a)), BigInt::from(1))
}

/// Crossing of bundles: top `(a, b)`, bottom `(b, a)`. Reading downwards, the
/// `t`-th strand of the right bundle crosses leftward over the whole left bundle:
/// `prod_{t=1}^{b} (∂_{a+t-1} ... ∂_t)`.
pub fn crossing_word(a: usize, b: usize, offset: usize, n: usize) -> OnhElement {
    assert!(offset + a + b <= n, "crossing out of range");
    let mut word = Vec::with_capacity(a * b);
    for t in 1..=b {
        for i in (t..=a + t - 1).rev() {
            word.push(i + offset);
        }
    }
    OnhElement::crossings(n, &word)
}

/// Splitter from thickness `a+b` below to bundles `(a, b)` above:
/// `(e_a ⊗ e_b) · crossing` with bottom bundles `(b, a)`.
pub fn up_splitter(a: usize, b: usize) -> OnhElement {
    let n = a + b;
    e_embedded(a, 0, n)
        .mul(&e_embedded(b, a, n))
        .mul(&crossing_word(a, b, 0, n))
}

/// Merge of bundles `(a, b)` into thickness `a+b`: just `e_{a+b}`.
pub fn merge(a: usize, b: usize) -> OnhElement {
    idempotent_e(a + b)
}

/// Thick crossing: bottom `(a, b)`, top `(b, a)`.
pub fn thick_crossing(a: usize, b: usize) -> OnhElement {
    let n = a + b;
    e_embedded(b, 0, n).mul(&e_embedded(a, b, n)).mul(&crossing_word(b, a, 0, n))
}

/// `e_a f e_a` for odd symmetric `f`.
pub fn boxed(f: &SkewPolynomial) -> Result<OnhElement> {
    if !is_odd_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    let e = idempotent_e(f.nvars());
    Ok(e.mul(&OnhElement::from_poly(f)).mul(&e))
}

fn parity(x: i64) -> i64 {
    x.rem_euclid(2)
}

/// Parity of `χ_α^a`.
pub fn chi(alpha: &Partition, a: usize) -> i64 {
    crate::oddsym::chi(alpha, a)
}

/// Parity of `Ω(β) = sum_{j=0}^{b-1} binom(β_{b-j} + j, 3)` for `β ∈ P(b, ·)`.
pub fn omega(beta: &Partition, b: usize) -> i64 {
    parity((0..b).map(|j| binom((beta.part(b - j) + j) as i64, 3)).sum())
}

/// Parity of `X_α^{a,b}`.
pub fn big_x(alpha: &Partition, a: usize, b: usize) -> Result<i64> {
    let h = alpha.hat(a, b)?;
    let (a_, b_) = (a as i64, b as i64);
    let s = (alpha.size() * h.size()) as i64
        + chi(alpha, a)
        + chi(&h, b)
        + binom(a_, 2) * (h.size() as i64 + binom(b_, 2))
        + omega(&h, b)
        + binom(a_ + b_, 3);
    Ok(parity(s))
}

/// Order of the dot blocks in `λ_ℓ`, read left to right as an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotOrder {
    /// `x_2^{ℓ̂_1} x_3^{ℓ̂_2} ... x_a^{ℓ̂_{a-1}}`.
    Ascending,
    /// `x_a^{ℓ̂_{a-1}} ... x_2^{ℓ̂_1}`: the dots of the rightmost strand sit highest.
    Descending,
}

/// The convention fixed by the orthogonality tests.
pub const LAMBDA_DOT_ORDER: DotOrder = DotOrder::Descending;

/// `σ_ℓ`: nested splitters `(ν+1) -> (ν, 1)` from thickness `a` down to 1, with
/// `box(ε_{ℓ_ν})` on the thickness-`ν` branch just above its splitter.
pub fn sigma_seq(l: &SeqChoice) -> OnhElement {
    let a = l.strands();
    let mut acc = OnhElement::identity(a);
    // top to bottom: B_1 S_1 B_2 S_2 ... B_{a-1} S_{a-1}
    for nu in 1..a {
        let b = boxed(&elementary(l.get(nu) as i64, nu)).expect("ε is symmetric");
        acc = acc.mul(&b.embed(0, a)).mul(&up_splitter(nu, 1).embed(0, a));
    }
    acc
}

/// `λ_ℓ = (-1)^{binom(a,3)} e_a · (dots ℓ̂_ν on strand ν+1)`.
pub fn lambda_seq_with(l: &SeqChoice, order: DotOrder) -> OnhElement {
    let a = l.strands();
    let mut letters = Vec::new();
    let mut strands: Vec<usize> = (1..a).collect();
    if order == DotOrder::Descending {
        strands.reverse();
    }
    for nu in strands {
        for _ in 0..l.hat(nu) {
            letters.push(crate::onh::Letter::Dot((nu + 1) as u8));
        }
    }
    let dots = OnhElement::from_word(a, OnhWord(letters), BigInt::from(1));
    idempotent_e(a).mul(&dots).neg_if(binom(a as i64, 3) % 2 == 1)
}

pub fn lambda_seq(l: &SeqChoice) -> OnhElement {
    lambda_seq_with(l, LAMBDA_DOT_ORDER)
}

/// `σ_α = (box(s_α) ⊗ e_b) · up_splitter(a, b)` for `α ∈ P(a, b)`.
pub fn sigma_part(alpha: &Partition, a: usize, b: usize) -> Result<OnhElement> {
    if !alpha.fits_box(a, b) {
        return Err(Error::BoxViolation(alpha.to_string(), a, b));
    }
    let n = a + b;
    let top = boxed(&schur(alpha, a)?)?.embed(0, n).mul(&e_embedded(b, a, n));
    Ok(top.mul(&up_splitter(a, b)))
}

/// `λ_α = (-1)^{X_α^{a,b}} e_{a+b} · (e_a ⊗ box(ŝ_{α̂}))`.
pub fn lambda_part(alpha: &Partition, a: usize, b: usize) -> Result<OnhElement> {
    let h = alpha.hat(a, b)?;
    let n = a + b;
    let low = e_embedded(a, 0, n).mul(&boxed(&dual_schur(&h, b)?)?.embed(a, n));
    Ok(idempotent_e(n).mul(&low).neg_if(big_x(alpha, a, b)? == 1))
}
