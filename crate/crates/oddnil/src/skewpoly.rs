//! The skew-commutative polynomial ring `OPol_a`.
//!
//! Variables satisfy `x_i x_j = -x_j x_i` for `i != j`. Every element is stored
//! in normal order `x_1^{A_1} ... x_a^{A_a}` with all reordering signs folded
//! into the integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::combinat::Permutation;
use crate::{Error, Result};

/// Dense exponent vector of a normal-ordered monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(a: usize) -> Self {
        Monomial(SmallVec::from_elem(0, a))
    }

    pub fn from_exps(exps: &[usize]) -> Self {
        Monomial(exps.iter().map(|&e| e as u16).collect())
    }

    pub fn var(a: usize, i: usize) -> Self {
        let mut m = Self::one(a);
        m.0[i - 1] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exp(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn exps(&self) -> Vec<usize> {
        self.0.iter().map(|&e| e as usize).collect()
    }

    /// Polynomial degree `sum A_i` (half the Z-degree).
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Parity of `sum_{i>j} A_i B_j`: the sign of `x^A x^B = ± x^{A+B}`.
    pub fn mul_parity(&self, other: &Monomial) -> bool {
        let mut prefix_b = 0u32;
        let mut acc = 0u32;
        for (ai, bi) in self.0.iter().zip(other.0.iter()) {
            acc ^= (*ai as u32 & 1) & (prefix_b & 1);
            prefix_b ^= *bi as u32 & 1;
        }
        acc == 1
    }

    pub fn add(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `x_1^{a-1} x_2^{a-2} ... x_{a-1}`.
    pub fn staircase(a: usize) -> Self {
        Monomial((0..a).map(|i| (a - 1 - i) as u16).collect())
    }

    /// `x_2 x_3^2 ... x_a^{a-1}`.
    pub fn reverse_staircase(a: usize) -> Self {
        Monomial((0..a).map(|i| i as u16).collect())
    }

    /// All exponent vectors in `a` variables of total degree `d`, descending lex.
    pub fn all_of_degree(a: usize, d: usize) -> Vec<Monomial> {
        fn rec(i: usize, a: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
            if i + 1 == a {
                cur.push(left);
                out.push(Monomial::from_exps(cur));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(i + 1, a, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if a == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, a, d, &mut Vec::new(), &mut out);
        out
    }

    /// The monomial as a list of variable letters, e.g. `x_1^2 x_3 -> [1,1,3]`.
    pub fn letters(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.degree());
        for (i, &e) in self.0.iter().enumerate() {
            v.extend(std::iter::repeat(i + 1).take(e as usize));
        }
        v
    }
}

/// An element of `OPol_a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SkewPolynomial {
    pub fn zero(a: usize) -> Self {
        SkewPolynomial { nvars: a, terms: BTreeMap::new() }
    }

    pub fn one(a: usize) -> Self {
        Self::from_monomial(Monomial::one(a), BigInt::one())
    }

    pub fn constant(a: usize, c: impl Into<BigInt>) -> Self {
        Self::from_monomial(Monomial::one(a), c.into())
    }

    pub fn from_monomial(m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn var(a: usize, i: usize) -> Self {
        Self::from_monomial(Monomial::var(a, i), BigInt::one())
    }

    /// `x~_i = (-1)^{i-1} x_i`.
    pub fn var_tilde(a: usize, i: usize) -> Self {
        let c = if i % 2 == 1 { 1 } else { -1 };
        Self::from_monomial(Monomial::var(a, i), BigInt::from(c))
    }

    /// Product of the variables in `letters` in the given order, normal ordered.
    pub fn from_letters(a: usize, letters: &[usize]) -> Self {
        let mut exps = vec![0usize; a];
        let mut inversions = 0usize;
        for (k, &l) in letters.iter().enumerate() {
            inversions += letters[..k].iter().filter(|&&m| m > l).count();
            exps[l - 1] += 1;
        }
        let c = if inversions % 2 == 0 { 1 } else { -1 };
        Self::from_monomial(Monomial::from_exps(&exps), BigInt::from(c))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    /// Terms in ascending lex order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Lex-largest term.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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
    }

    pub fn add_scaled(&mut self, other: &SkewPolynomial, c: &BigInt) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut r = Self::zero(self.nvars);
        if c.is_zero() {
            return r;
        }
        r.terms = self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect();
        r
    }

    pub fn checked_mul(&self, other: &SkewPolynomial) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch(self.nvars, other.nvars));
        }
        Ok(self * other)
    }

    /// Multiply by the monomial `x^B` on the right.
    pub fn mul_monomial_right(&self, b: &Monomial) -> Self {
        let mut r = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let c = if m.mul_parity(b) { -c } else { c.clone() };
            r.add_term(m.add(b), c);
        }
        r
    }

    /// Multiply by the monomial `x^B` on the left.
    pub fn mul_monomial_left(&self, b: &Monomial) -> Self {
        let mut r = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let c = if b.mul_parity(m) { -c } else { c.clone() };
            r.add_term(b.add(m), c);
        }
        r
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Homogeneous polynomial degree, `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// `s_i(x^A) = (-1)^{|A| + A_i A_{i+1}} x^{s_i A}`.
    pub fn apply_simple(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.nvars {
            return Err(Error::OutOfRange { what: "simple transposition", index: i });
        }
        let mut r = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let (p, q) = (m.0[i - 1] as usize, m.0[i] as usize);
            let mut n = m.clone();
            n.0.swap(i - 1, i);
            let odd = (m.degree() + p * q) % 2 == 1;
            r.add_term(n, if odd { -c } else { c.clone() });
        }
        Ok(r)
    }

    /// Action of `w`: `x_j -> -x_{w(j)}` on generators, extended multiplicatively.
    pub fn apply_permutation(&self, w: &Permutation) -> Result<Self> {
        if w.n() != self.nvars {
            return Err(Error::VarMismatch(w.n(), self.nvars));
        }
        let mut r = self.clone();
        for &i in w.canonical_reduced_word().iter().rev() {
            r = r.apply_simple(i)?;
        }
        Ok(r)
    }

    /// Action of the longest element in closed form:
    /// `x^A -> (-1)^{|A| binom(a,2) + sum_{j<k} A_j A_k} x^{rev A}`.
    pub fn apply_w0(&self) -> Self {
        let a = self.nvars;
        let la = a * a.saturating_sub(1) / 2;
        let mut r = Self::zero(a);
        for (m, c) in &self.terms {
            let d = m.degree();
            let mut pairs = 0usize;
            let mut prefix = 0usize;
            for &e in m.0.iter() {
                pairs += prefix * e as usize;
                prefix += e as usize;
            }
            let mut n = m.clone();
            n.0.reverse();
            let odd = (d * la + pairs) % 2 == 1;
            r.add_term(n, if odd { -c } else { c.clone() });
        }
        r
    }

    /// Embed into `b >= a` variables, fixing `x_1..x_a`.
    pub fn extend_vars(&self, b: usize) -> Self {
        assert!(b >= self.nvars);
        let mut r = Self::zero(b);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.resize(b, 0);
            r.add_term(Monomial(e), c.clone());
        }
        r
    }

    /// Set `x_a = 0` and drop the last variable.
    pub fn drop_last_var(&self) -> Self {
        let a = self.nvars;
        let mut r = Self::zero(a - 1);
        for (m, c) in &self.terms {
            if m.0[a - 1] == 0 {
                r.add_term(Monomial(m.0[..a - 1].into()), c.clone());
            }
        }
        r
    }

    /// Forget signs and reduce mod 2; the result is the set of odd-coefficient monomials.
    pub fn mod2(&self) -> std::collections::BTreeSet<Monomial> {
        self.terms
            .iter()
            .filter(|(_, c)| num_integer::Integer::is_odd(*c))
            .map(|(m, _)| m.clone())
            .collect()
    }

    /// Parse in `a` variables; see the [`FromStr`] grammar.
    pub fn parse(s: &str, a: usize) -> Result<Self> {
        parse_poly(s, a)
    }
}

impl Add for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn add(self, rhs: &SkewPolynomial) -> SkewPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut r = self.clone();
        for (m, c) in &rhs.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
}

impl AddAssign<&SkewPolynomial> for SkewPolynomial {
    fn add_assign(&mut self, rhs: &SkewPolynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn sub(self, rhs: &SkewPolynomial) -> SkewPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut r = self.clone();
        for (m, c) in &rhs.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }
}

impl Neg for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn neg(self) -> SkewPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn mul(self, rhs: &SkewPolynomial) -> SkewPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut r = SkewPolynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                let p = c * d;
                r.add_term(m.add(n), if m.mul_parity(n) { -p } else { p });
            }
        }
        r
    }
}

impl fmt::Display for SkewPolynomial {
    /// Terms in descending lex order, e.g. `x1^2x2 - 2*x3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "x{}", i + 1)?,
                    _ => write!(f, "x{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

fn parse_poly(s: &str, a: usize) -> Result<SkewPolynomial> {
    let bad = |why: &str| Error::Parse(format!("{why} in polynomial {s:?}"));
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(bad("empty input"));
    }
    let mut pos = 0;
    let mut out = SkewPolynomial::zero(a);
    let number = |pos: &mut usize| -> Option<String> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| chars[start..*pos].iter().collect())
    };
    let mut first = true;
    while pos < chars.len() {
        let mut neg = false;
        if chars[pos] == '+' || chars[pos] == '-' {
            neg = chars[pos] == '-';
            pos += 1;
        } else if !first {
            return Err(bad("expected sign"));
        }
        first = false;
        let mut coeff = BigInt::one();
        let mut saw_coeff = false;
        if let Some(n) = number(&mut pos) {
            coeff = n.parse().map_err(|_| bad("bad integer"))?;
            saw_coeff = true;
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                if pos >= chars.len() || chars[pos] != 'x' {
                    return Err(bad("dangling '*'"));
                }
            }
        }
        let mut exps = vec![0usize; a];
        let mut last = 0usize;
        let mut saw_var = false;
        while pos < chars.len() && chars[pos] == 'x' {
            pos += 1;
            let idx: usize = number(&mut pos)
                .ok_or_else(|| bad("missing variable index"))?
                .parse()
                .map_err(|_| bad("bad index"))?;
            if idx == 0 || idx > a {
                return Err(bad("variable index out of range"));
            }
            if idx <= last {
                return Err(bad("variables not in increasing order"));
            }
            last = idx;
            let mut e = 1usize;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                e = number(&mut pos)
                    .ok_or_else(|| bad("missing exponent"))?
                    .parse()
                    .map_err(|_| bad("bad exponent"))?;
            }
            exps[idx - 1] = e;
            saw_var = true;
        }
        if !saw_coeff && !saw_var {
            return Err(bad("empty term"));
        }
        out.add_term(Monomial::from_exps(&exps), if neg { -coeff } else { coeff });
    }
    Ok(out)
}

/// Parses with the number of variables inferred from the largest index.
impl FromStr for SkewPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut max = 0usize;
        let cs: Vec<char> = s.chars().collect();
        for (i, &c) in cs.iter().enumerate() {
            if c == 'x' {
                let d: String = cs[i + 1..].iter().take_while(|c| c.is_ascii_digit()).collect();
                max = max.max(d.parse().unwrap_or(0));
            }
        }
        parse_poly(s, max.max(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(a: usize, i: usize) -> SkewPolynomial {
        SkewPolynomial::var(a, i)
    }

    /// Multiply monomials by writing out letters and sorting with adjacent swaps.
    fn letterwise_product(a: &Monomial, b: &Monomial) -> SkewPolynomial {
        let mut letters = a.letters();
        letters.extend(b.letters());
        let mut sign = 1i32;
        let n = letters.len();
        for i in 0..n {
            for j in 0..n - 1 - i {
                if letters[j] > letters[j + 1] {
                    letters.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        let mut exps = vec![0; a.nvars()];
        for l in letters {
            exps[l - 1] += 1;
        }
        SkewPolynomial::from_monomial(Monomial::from_exps(&exps), BigInt::from(sign))
    }

    fn random_monomial(rng: &mut ChaCha8Rng, a: usize, maxe: usize) -> Monomial {
        Monomial::from_exps(&(0..a).map(|_| rng.gen_range(0..=maxe)).collect::<Vec<_>>())
    }

    #[test]
    fn skew_commutation() {
        assert_eq!(&x(2, 1) * &x(2, 2), SkewPolynomial::parse("x1x2", 2).unwrap());
        assert_eq!(&x(2, 2) * &x(2, 1), SkewPolynomial::parse("-x1x2", 2).unwrap());
        let d = &x(2, 1) - &x(2, 2);
        assert_eq!(&d * &d, SkewPolynomial::parse("x1^2 + x2^2", 2).unwrap());
        let p = SkewPolynomial::parse("3*x1x2^2 - x2", 2).unwrap();
        assert_eq!(&SkewPolynomial::one(2) * &p, p);
    }

    #[test]
    fn closed_form_sign_matches_letterwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = rng.gen_range(1..=5);
            let m = random_monomial(&mut rng, a, 3);
            let n = random_monomial(&mut rng, a, 3);
            let p = SkewPolynomial::from_monomial(m.clone(), BigInt::one());
            let q = SkewPolynomial::from_monomial(n.clone(), BigInt::one());
            assert_eq!(&p * &q, letterwise_product(&m, &n));
        }
    }

    #[test]
    fn simple_transposition() {
        assert_eq!(x(2, 1).apply_simple(1).unwrap(), -&x(2, 2));
        assert_eq!(x(3, 3).apply_simple(1).unwrap(), -&x(3, 3));
        let p = SkewPolynomial::parse("x1^2x2", 2).unwrap();
        assert_eq!(p.apply_simple(1).unwrap().apply_simple(1).unwrap(), p);
        assert!(p.apply_simple(2).is_err());
    }

    /// Apply `s_i` letter by letter using only the generator rule.
    fn simple_letterwise(m: &Monomial, i: usize) -> SkewPolynomial {
        let a = m.nvars();
        let letters: Vec<usize> = m
            .letters()
            .into_iter()
            .map(|l| if l == i { i + 1 } else if l == i + 1 { i } else { l })
            .collect();
        let p = SkewPolynomial::from_letters(a, &letters);
        if m.degree() % 2 == 1 {
            -&p
        } else {
            p
        }
    }

    #[test]
    fn simple_closed_form_matches_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = rng.gen_range(2..=5);
            let m = random_monomial(&mut rng, a, 3);
            let i = rng.gen_range(1..a);
            let p = SkewPolynomial::from_monomial(m.clone(), BigInt::one());
            assert_eq!(p.apply_simple(i).unwrap(), simple_letterwise(&m, i));
        }
    }

    #[test]
    fn coxeter_relations_act() {
        for a in 2..=4 {
            for d in 0..=3 {
                for m in Monomial::all_of_degree(a, d) {
                    let p = SkewPolynomial::from_monomial(m, BigInt::one());
                    for i in 1..a {
                        let s = |q: &SkewPolynomial, j: usize| q.apply_simple(j).unwrap();
                        assert_eq!(s(&s(&p, i), i), p);
                        if i + 1 < a {
                            assert_eq!(s(&s(&s(&p, i), i + 1), i), s(&s(&s(&p, i + 1), i), i + 1));
                        }
                        for j in i + 2..a {
                            assert_eq!(s(&s(&p, i), j), s(&s(&p, j), i));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn w0_closed_form_matches_words() {
        for a in 1..=5 {
            let w0 = Permutation::longest(a);
            for d in 0..=3 {
                for m in Monomial::all_of_degree(a, d) {
                    let p = SkewPolynomial::from_monomial(m, BigInt::one());
                    assert_eq!(p.apply_w0(), p.apply_permutation(&w0).unwrap());
                }
            }
        }
        // two reduced words of w0 in S_3
        let p = SkewPolynomial::parse("x1x2^2", 3).unwrap();
        let s = |q: &SkewPolynomial, j: usize| q.apply_simple(j).unwrap();
        assert_eq!(s(&s(&s(&p, 1), 2), 1), s(&s(&s(&p, 2), 1), 2));
    }

    #[test]
    fn permutation_action_is_a_group_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let perms = Permutation::all(4);
        for _ in 0..40 {
            let u = &perms[rng.gen_range(0..perms.len())];
            let v = &perms[rng.gen_range(0..perms.len())];
            let p = SkewPolynomial::from_monomial(random_monomial(&mut rng, 4, 2), BigInt::one());
            let lhs = p.apply_permutation(&u.compose(v)).unwrap();
            let rhs = p.apply_permutation(v).unwrap().apply_permutation(u).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn staircases() {
        assert_eq!(Monomial::staircase(3).exps(), vec![2, 1, 0]);
        assert_eq!(Monomial::staircase(1).exps(), vec![0]);
        assert_eq!(Monomial::reverse_staircase(3).exps(), vec![0, 1, 2]);
    }

    #[test]
    fn graded_rank_matches_commutative() {
        for a in 1..=4 {
            for d in 0..=6 {
                let n = Monomial::all_of_degree(a, d).len() as i64;
                assert_eq!(n, crate::binom((d + a - 1) as i64, (a - 1) as i64));
            }
        }
    }

    #[test]
    fn mod2_is_commutative_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = rng.gen_range(1..=4);
            let mut p = SkewPolynomial::zero(a);
            let mut q = SkewPolynomial::zero(a);
            for _ in 0..3 {
                p.add_term(random_monomial(&mut rng, a, 2), BigInt::from(rng.gen_range(-3..=3)));
                q.add_term(random_monomial(&mut rng, a, 2), BigInt::from(rng.gen_range(-3..=3)));
            }
            // commutative product mod 2
            let mut expect = std::collections::BTreeMap::<Monomial, u8>::new();
            for m in p.mod2() {
                for n in q.mod2() {
                    *expect.entry(m.add(&n)).or_default() ^= 1;
                }
            }
            let expect: std::collections::BTreeSet<_> =
                expect.into_iter().filter(|(_, c)| *c == 1).map(|(m, _)| m).collect();
            assert_eq!((&p * &q).mod2(), expect);
        }
    }

    #[test]
    fn text_roundtrip() {
        let p = SkewPolynomial::parse("2*x1^2x2 - x3 + 5", 3).unwrap();
        assert_eq!(p.to_string(), "2*x1^2x2 - x3 + 5");
        assert_eq!(SkewPolynomial::parse(&p.to_string(), 3).unwrap(), p);
        assert!(SkewPolynomial::parse("x2x1", 2).is_err());
        assert!(SkewPolynomial::parse("x3", 2).is_err());
        assert!(SkewPolynomial::parse("2*", 2).is_err());
        let q: SkewPolynomial = "x1 - x2".parse().unwrap();
        assert_eq!(q.nvars(), 2);
    }

    #[test]
    fn from_letters_sign() {
        assert_eq!(SkewPolynomial::from_letters(2, &[2, 1]), -&SkewPolynomial::parse("x1x2", 2).unwrap());
        assert_eq!(SkewPolynomial::from_letters(3, &[3, 1, 3]), SkewPolynomial::parse("-x1x3^2", 3).unwrap());
    }
}
