//! Odd symmetric polynomials: elementary and complete generators, odd
//! Schubert and Schur polynomials, `ε`-basis expansion and the Pieri rule.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::combinat::{subsets, Partition, Permutation};
use crate::oddops::{dd_word, killed_by_all, longest_dd, odd_symmetrize};
use crate::skewpoly::{Monomial, SkewPolynomial};
use crate::{binom, Error, Result};

static ELEM: Lazy<RwLock<HashMap<(usize, usize), SkewPolynomial>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));
static COMPLETE: Lazy<RwLock<HashMap<(usize, usize), SkewPolynomial>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `ε_k = sum_{i_1 < ... < i_k} x~_{i_1} ... x~_{i_k}` in `a` variables.
pub fn elementary(k: i64, a: usize) -> SkewPolynomial {
    if k < 0 || k as usize > a {
        return SkewPolynomial::zero(a);
    }
    let k = k as usize;
    if let Some(p) = ELEM.read().get(&(k, a)) {
        return p.clone();
    }
    let mut p = SkewPolynomial::zero(a);
    for s in subsets(a, k) {
        let mut exps = vec![0usize; a];
        let mut neg = false;
        for &i in &s {
            exps[i - 1] = 1;
            neg ^= i % 2 == 0;
        }
        p.add_term(Monomial::from_exps(&exps), BigInt::from(if neg { -1 } else { 1 }));
    }
    ELEM.write().insert((k, a), p.clone());
    p
}

/// `h_k = sum_{i_1 <= ... <= i_k} x~_{i_1} ... x~_{i_k}` in `a` variables.
pub fn complete(k: i64, a: usize) -> SkewPolynomial {
    if k < 0 {
        return SkewPolynomial::zero(a);
    }
    let k = k as usize;
    if let Some(p) = COMPLETE.read().get(&(k, a)) {
        return p.clone();
    }
    let mut p = SkewPolynomial::zero(a);
    for m in Monomial::all_of_degree(a, k) {
        // the weakly increasing word is already normal ordered
        let neg = (0..a).filter(|i| i % 2 == 1).map(|i| m.0[i] as usize).sum::<usize>() % 2 == 1;
        p.add_term(m, BigInt::from(if neg { -1 } else { 1 }));
    }
    COMPLETE.write().insert((k, a), p.clone());
    p
}

/// `ε_{λ_1} ε_{λ_2} ... ε_{λ_r}`.
pub fn elementary_word(parts: &[usize], a: usize) -> SkewPolynomial {
    parts
        .iter()
        .fold(SkewPolynomial::one(a), |acc, &k| &acc * &elementary(k as i64, a))
}

/// `h_{λ_1} ... h_{λ_r}`.
pub fn complete_word(parts: &[usize], a: usize) -> SkewPolynomial {
    parts
        .iter()
        .fold(SkewPolynomial::one(a), |acc, &k| &acc * &complete(k as i64, a))
}

/// `x^δ` as a polynomial.
pub fn staircase_poly(a: usize) -> SkewPolynomial {
    SkewPolynomial::from_monomial(Monomial::staircase(a), BigInt::one())
}

/// Odd Schubert polynomial `∂_{w^{-1} w_0}(x^δ)`.
pub fn schubert(w: &Permutation) -> SkewPolynomial {
    let a = w.n();
    let u = w.inverse().compose(&Permutation::longest(a));
    dd_word(&u.canonical_reduced_word(), &staircase_poly(a)).expect("word in range")
}

/// Parity of `χ_α^a = binom(a,3) + |α| binom(a,2) + sum_j α_j binom(a-j+1, 2)`.
pub fn chi(alpha: &Partition, a: usize) -> i64 {
    let a_ = a as i64;
    let mut s = binom(a_, 3) + alpha.size() as i64 * binom(a_, 2);
    for j in 1..=alpha.len() {
        s += alpha.part(j) as i64 * binom(a_ - j as i64 + 1, 2);
    }
    s.rem_euclid(2)
}

fn signed(p: SkewPolynomial, parity: i64) -> SkewPolynomial {
    if parity.rem_euclid(2) == 1 {
        -&p
    } else {
        p
    }
}

/// Odd Schur polynomial `s_α = S(x^α)`.
pub fn schur(alpha: &Partition, a: usize) -> Result<SkewPolynomial> {
    let exps = alpha.padded(a)?;
    Ok(odd_symmetrize(&SkewPolynomial::from_monomial(
        Monomial::from_exps(&exps),
        BigInt::one(),
    )))
}

/// `s_α` by the staircase route `(-1)^χ (D_a(x^{δ+α}))^{w_0}`.
pub fn schur_via_staircase(alpha: &Partition, a: usize) -> Result<SkewPolynomial> {
    let exps: Vec<usize> = alpha.padded(a)?.iter().enumerate().map(|(i, e)| e + a - 1 - i).collect();
    let m = SkewPolynomial::from_monomial(Monomial::from_exps(&exps), BigInt::one());
    Ok(signed(longest_dd(&m).apply_w0(), chi(alpha, a)))
}

/// Dual Schur `(-1)^χ (D_a(x_1^{α_a} x_2^{1+α_{a-1}} ... x_a^{a-1+α_1}))^{w_0}`.
pub fn dual_schur(alpha: &Partition, a: usize) -> Result<SkewPolynomial> {
    let al = alpha.padded(a)?;
    let exps: Vec<usize> = (0..a).map(|i| i + al[a - 1 - i]).collect();
    let m = SkewPolynomial::from_monomial(Monomial::from_exps(&exps), BigInt::one());
    Ok(signed(longest_dd(&m).apply_w0(), chi(alpha, a)))
}

pub fn is_odd_symmetric(p: &SkewPolynomial) -> bool {
    killed_by_all(p)
}

/// Leading (lex-largest) coefficient of `ε_λ`, which sits on `x^{λ̄}`.
fn elementary_leading(lambda: &Partition, a: usize) -> (Monomial, BigInt) {
    let e = elementary_word(lambda.parts(), a);
    let (m, c) = e.leading().expect("ε_λ is nonzero for parts <= a");
    (m.clone(), c.clone())
}

/// Expansion `f = sum c_λ ε_λ` by greedy leading-term elimination.
pub fn expand_in_elementary(f: &SkewPolynomial) -> Result<BTreeMap<Partition, BigInt>> {
    let a = f.nvars();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.leading() {
        let exps = m.exps();
        if exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let lambda = Partition::new(exps)?.conjugate();
        if lambda.part(1) > a {
            return Err(Error::NotSymmetric);
        }
        let (lm, lc) = elementary_leading(&lambda, a);
        debug_assert_eq!(&lm, m);
        let (q, r) = c.div_rem(&lc);
        if !r.is_zero() {
            return Err(Error::NotSymmetric);
        }
        let e = elementary_word(lambda.parts(), a);
        rest.add_scaled(&e, &-&q);
        *out.entry(lambda).or_insert_with(BigInt::zero) += q;
    }
    out.retain(|_, c: &mut BigInt| !c.is_zero());
    Ok(out)
}

/// Rebuild a polynomial from an `ε`-expansion.
pub fn from_elementary(exp: &BTreeMap<Partition, BigInt>, a: usize) -> SkewPolynomial {
    let mut p = SkewPolynomial::zero(a);
    for (l, c) in exp {
        p.add_scaled(&elementary_word(l.parts(), a), c);
    }
    p
}

/// Signed terms of `s_α s_{(1^k)}` predicted by the odd Pieri rule.
pub fn pieri_expected(alpha: &Partition, k: usize, a: usize) -> Vec<(Partition, i64)> {
    if k > a {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rows in subsets(a, k) {
        let mut parts: Vec<usize> = (1..=a).map(|i| alpha.part(i)).collect();
        for &i in &rows {
            parts[i - 1] += 1;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let s: usize = rows.iter().map(|&i| alpha.size_below_row(i)).sum();
        out.push((Partition::new(parts).unwrap(), if s % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Classical (commutative) symmetric functions, used as an independent oracle.
pub mod classical {
    use std::collections::BTreeMap;

    use crate::combinat::{subsets, Partition};

    /// Commutative polynomial with small integer coefficients.
    pub type ZPoly = BTreeMap<Vec<u16>, i64>;

    fn add(p: &mut ZPoly, m: Vec<u16>, c: i64) {
        let e = p.entry(m.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            p.remove(&m);
        }
    }

    pub fn mul(p: &ZPoly, q: &ZPoly) -> ZPoly {
        let mut r = ZPoly::new();
        for (m, c) in p {
            for (n, d) in q {
                add(&mut r, m.iter().zip(n).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        r
    }

    pub fn one(a: usize) -> ZPoly {
        ZPoly::from([(vec![0; a], 1)])
    }

    pub fn e(k: usize, a: usize) -> ZPoly {
        let mut p = ZPoly::new();
        for s in subsets(a, k) {
            let mut m = vec![0u16; a];
            for i in s {
                m[i - 1] = 1;
            }
            add(&mut p, m, 1);
        }
        p
    }

    pub fn h(k: usize, a: usize) -> ZPoly {
        fn rec(i: usize, left: usize, m: &mut Vec<u16>, out: &mut ZPoly) {
            if i + 1 == m.len() {
                m[i] = left as u16;
                add(out, m.clone(), 1);
                return;
            }
            for e in 0..=left {
                m[i] = e as u16;
                rec(i + 1, left - e, m, out);
            }
            m[i] = 0;
        }
        let mut out = ZPoly::new();
        rec(0, k, &mut vec![0; a], &mut out);
        out
    }

    /// Classical divided difference `(f - s_i f) / (x_i - x_{i+1})`.
    pub fn dd(i: usize, p: &ZPoly) -> ZPoly {
        let mut r = ZPoly::new();
        for (m, c) in p {
            let (x, y) = (m[i - 1] as i64, m[i] as i64);
            let (lo, hi, sgn) = if x >= y { (y, x, 1) } else { (x, y, -1) };
            for j in 0..hi - lo {
                let mut n = m.clone();
                n[i - 1] = (hi - 1 - j) as u16;
                n[i] = (lo + j) as u16;
                add(&mut r, n, sgn * c);
            }
        }
        r
    }

    /// Classical Schur polynomial by the bialternant formula `∂_{w_0}(x^{α+δ})`.
    pub fn schur(alpha: &Partition, a: usize) -> ZPoly {
        let m: Vec<u16> = (0..a).map(|i| (alpha.part(i + 1) + a - 1 - i) as u16).collect();
        let mut p = ZPoly::from([(m, 1)]);
        for &i in &crate::oddops::longest_word(a) {
            p = dd(i, &p);
        }
        p
    }

    pub fn mod2(p: &ZPoly) -> std::collections::BTreeSet<Vec<u16>> {
        p.iter().filter(|(_, c)| *c % 2 != 0).map(|(m, _)| m.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str, a: usize) -> SkewPolynomial {
        SkewPolynomial::parse(s, a).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(elementary(1, 3), poly("x1 - x2 + x3", 3));
        assert_eq!(elementary(2, 2), poly("-x1x2", 2));
        assert_eq!(complete(2, 1), poly("x1^2", 1));
        assert_eq!(elementary(0, 3), SkewPolynomial::one(3));
        assert!(elementary(4, 3).is_zero());
        for a in 1..=5 {
            for k in 0..=a as i64 + 1 {
                assert!(is_odd_symmetric(&elementary(k, a)));
                if k <= 4 {
                    assert!(is_odd_symmetric(&complete(k, a)));
                }
            }
        }
        assert!(!is_odd_symmetric(&poly("x1", 2)));
    }

    #[test]
    fn first_relation_kills_commutator() {
        let c = &(&elementary(1, 4) * &elementary(3, 4)) - &(&elementary(3, 4) * &elementary(1, 4));
        assert!(is_odd_symmetric(&c));
        assert!(c.is_zero());
    }

    #[test]
    fn e_h_relation() {
        for a in 1..=5 {
            for m in 1..=6i64 {
                let mut s = SkewPolynomial::zero(a);
                for k in 0..=m {
                    let t = &elementary(k, a) * &complete(m - k, a);
                    s = if (k * (k + 1) / 2) % 2 == 0 { &s + &t } else { &s - &t };
                }
                assert!(s.is_zero(), "a={a} m={m}");
            }
        }
    }

    #[test]
    fn w0_on_elementary() {
        for a in 1..=6usize {
            for k in 0..=a as i64 {
                let e = elementary(k, a);
                let par = binom(k, 2) + k * binom(a as i64 - 1, 2);
                assert_eq!(e.apply_w0(), signed(e.clone(), par), "a={a} k={k}");
            }
        }
    }

    #[test]
    fn schubert_values() {
        for a in 1..=4 {
            assert_eq!(schubert(&Permutation::longest(a)), staircase_poly(a));
            // with the D_a word in place of the canonical word, 𝔰_e = (-1)^{binom(a,3)}
            let w0 = Permutation::longest(a);
            let canon = dd_word(&w0.canonical_reduced_word(), &staircase_poly(a)).unwrap();
            assert_eq!(schubert(&Permutation::identity(a)), canon);
            let via_da = longest_dd(&staircase_poly(a));
            assert!(crate::oddops::is_constant(&via_da, crate::sign(binom(a as i64, 3))));
            assert!(canon == via_da || canon == -&via_da);
        }
        assert_eq!(schubert(&"2 1".parse().unwrap()), poly("x1", 2));
        assert!(crate::oddops::is_constant(&schubert(&Permutation::identity(3)), -1));
    }

    #[test]
    fn schur_routes_agree() {
        for a in 1..=4 {
            for al in crate::combinat::partitions_in_box(a, 3) {
                let s1 = schur(&al, a).unwrap();
                assert_eq!(s1, schur_via_staircase(&al, a).unwrap(), "{al} a={a}");
                assert!(is_odd_symmetric(&s1));
                assert!(is_odd_symmetric(&dual_schur(&al, a).unwrap()));
            }
            assert_eq!(schur(&Partition::empty(), a).unwrap(), SkewPolynomial::one(a));
            for k in 1..=a {
                let e = signed(elementary(k as i64, a), binom(k as i64, 2));
                assert_eq!(schur(&Partition::column(k), a).unwrap(), e);
            }
        }
        assert!(schur(&part("1,1,1"), 2).is_err());
    }

    #[test]
    fn expansions() {
        let e2 = elementary(2, 3);
        assert_eq!(expand_in_elementary(&e2).unwrap(), BTreeMap::from([(part("2"), BigInt::one())]));
        let h2 = complete(2, 3);
        let exp = expand_in_elementary(&h2).unwrap();
        assert_eq!(exp, BTreeMap::from([(part("1,1"), BigInt::one()), (part("2"), BigInt::one())]));
        assert!(expand_in_elementary(&poly("x1", 2)).is_err());
        for a in 2..=4 {
            for al in crate::combinat::partitions_in_box(a, 2) {
                let s = schur(&al, a).unwrap();
                let exp = expand_in_elementary(&s).unwrap();
                assert_eq!(from_elementary(&exp, a), s);
            }
        }
        // 2ε_3 = ε_1ε_2 + ε_2ε_1 in OΛ_3
        let lhs = &elementary(3, 3).scale(&BigInt::from(2));
        let rhs = &(&elementary(1, 3) * &elementary(2, 3)) + &(&elementary(2, 3) * &elementary(1, 3));
        assert_eq!(lhs, &rhs);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_expected(&part("1"), 1, 2), vec![(part("2"), 1), (part("1,1"), 1)]);
        assert_eq!(pieri_expected(&part("1,1"), 1, 3), vec![(part("2,1"), -1), (part("1,1,1"), 1)]);
        assert!(pieri_expected(&part("1"), 3, 2).is_empty());
    }

    #[test]
    fn mod2_matches_classical() {
        for a in 1..=4 {
            for k in 0..=4usize {
                let o: std::collections::BTreeSet<Vec<u16>> =
                    elementary(k as i64, a).mod2().into_iter().map(|m| m.0.to_vec()).collect();
                assert_eq!(o, classical::mod2(&classical::e(k, a)));
                let o: std::collections::BTreeSet<Vec<u16>> =
                    complete(k as i64, a).mod2().into_iter().map(|m| m.0.to_vec()).collect();
                assert_eq!(o, classical::mod2(&classical::h(k, a)));
            }
        }
        for al in crate::combinat::partitions_in_box(2, 2) {
            let o: std::collections::BTreeSet<Vec<u16>> =
                schur(&al, 3).unwrap().mod2().into_iter().map(|m| m.0.to_vec()).collect();
            assert_eq!(o, classical::mod2(&classical::schur(&al, 3)));
        }
    }
}
