//! Partitions, permutations, reduced words and the sequence sets `Sq(a)`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping zero parts; parts must be weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("parts not decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits_box(&self, a: usize, b: usize) -> bool {
        self.len() <= a && self.part(1) <= b
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(1);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `(b - alpha_a, ..., b - alpha_1)` for `alpha` in `P(a,b)`.
    pub fn complement(&self, a: usize, b: usize) -> Result<Partition> {
        self.check_box(a, b)?;
        Partition::new((1..=a).rev().map(|i| b - self.part(i)).collect())
    }

    /// Conjugate of the complement; lies in `P(b,a)`.
    pub fn hat(&self, a: usize, b: usize) -> Result<Partition> {
        Ok(self.complement(a, b)?.conjugate())
    }

    /// `|frac{m}{alpha}|`: size after removing rows `1..=m`.
    pub fn size_below_row(&self, m: usize) -> usize {
        self.0.iter().skip(m).sum()
    }

    fn check_box(&self, a: usize, b: usize) -> Result<()> {
        if self.fits_box(a, b) {
            Ok(())
        } else {
            Err(Error::BoxViolation(self.to_string(), a, b))
        }
    }

    /// Exponent vector of length `a`, zero padded.
    pub fn padded(&self, a: usize) -> Result<Vec<usize>> {
        if self.len() > a {
            return Err(Error::TooManyParts(self.to_string(), a));
        }
        Ok((1..=a).map(|i| self.part(i)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad partition: {s:?}")))?;
        Partition::new(parts)
    }
}

/// All partitions of `n` with at most `rows` parts, each at most `cols`.
pub fn partitions_of(n: usize, rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(n: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, rows, cols, &mut Vec::new(), &mut out);
    out
}

/// `P(a,b)` in graded order: by size, then reverse lexicographic.
pub fn partitions_in_box(a: usize, b: usize) -> Vec<Partition> {
    (0..=a * b).flat_map(|n| partitions_of(n, a, b)).collect()
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `w(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&j| self.apply(j)).collect())
    }

    /// Product `s_{i_1} ∘ ... ∘ s_{i_k}` of a word.
    pub fn from_word(word: &[usize], n: usize) -> Self {
        let mut p = Self::identity(n);
        for &i in word {
            // p ∘ s_i swaps positions i and i+1
            p.0.swap(i - 1, i);
        }
        p
    }

    /// Reduced word `[i_1..i_l]` with `w = s_{i_1} ∘ ... ∘ s_{i_l}`, peeling the
    /// smallest right descent each step.
    pub fn canonical_reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut peeled = Vec::new();
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            peeled.push(i + 1);
        }
        peeled.reverse();
        peeled
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(avail: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if avail.is_empty() {
                out.push(Permutation(cur.clone()));
                return;
            }
            for k in 0..avail.len() {
                let x = avail.remove(k);
                cur.push(x);
                rec(avail, cur, out);
                cur.pop();
                avail.insert(k, x);
            }
        }
        let mut out = Vec::new();
        rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
        out
    }

    /// All permutations sorted by length, ties in lexicographic order.
    pub fn all_by_length(n: usize) -> Vec<Permutation> {
        let mut v = Self::all(n);
        v.sort_by_key(|w| w.length());
        v
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad permutation: {s:?}")))?;
        Permutation::new(images)
    }
}

/// A sequence `l_1..l_{a-1}` with `0 <= l_nu <= nu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqChoice(Vec<usize>);

impl SeqChoice {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.iter().enumerate().any(|(i, &l)| l > i + 1) {
            return Err(Error::Invalid(format!("entry exceeds its index: {entries:?}")));
        }
        Ok(SeqChoice(entries))
    }

    /// Number of strands `a` (one more than the sequence length).
    pub fn strands(&self) -> usize {
        self.0.len() + 1
    }

    /// `l_nu`, 1-based.
    pub fn get(&self, nu: usize) -> usize {
        self.0[nu - 1]
    }

    /// `nu - l_nu`.
    pub fn hat(&self, nu: usize) -> usize {
        nu - self.get(nu)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for SeqChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All of `Sq(a)`, lexicographic.
pub fn enumerate_sq(a: usize) -> Vec<SeqChoice> {
    let mut out = vec![Vec::new()];
    for nu in 1..a {
        out = out
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                (0..=nu).map(move |l| {
                    let mut t = s.clone();
                    t.push(l);
                    t
                })
            })
            .collect();
    }
    out.into_iter().map(SeqChoice).collect()
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgrade::{q_factorial, QLaurent};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(partitions_in_box(1, 1), vec![Partition::empty(), p("1")]);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(0, 3), vec![Partition::empty()]);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(partitions_in_box(a, b).len() as i64, crate::binom((a + b) as i64, a as i64));
            }
        }
    }

    #[test]
    fn conjugates_and_hats() {
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("2").complement(2, 2).unwrap(), p("2"));
        assert_eq!(Partition::empty().hat(2, 3).unwrap(), p("2,2,2"));
        assert!(p("3").complement(2, 2).is_err());
        for a in 0..=4 {
            for b in 0..=4 {
                for al in partitions_in_box(a, b) {
                    let h = al.hat(a, b).unwrap();
                    assert!(h.fits_box(b, a));
                    assert_eq!(h.hat(b, a).unwrap(), al);
                    assert_eq!(al.conjugate().conjugate(), al);
                }
            }
        }
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(3).canonical_reduced_word().is_empty());
        assert_eq!(Permutation::longest(2).canonical_reduced_word(), vec![1]);
        let w0 = Permutation::longest(3);
        let word = w0.canonical_reduced_word();
        assert_eq!(word.len(), 3);
        assert_eq!(Permutation::from_word(&word, 3), w0);
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let word = w.canonical_reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(&word, n), w);
            }
            assert_eq!(Permutation::longest(n).length(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn longest_word_starting_with_each_generator() {
        for n in 2..=5 {
            let w0 = Permutation::longest(n);
            for i in 1..n {
                // w0 = s_i (s_i w0), and s_i w0 has length one less
                let rest = Permutation::simple(i, n).compose(&w0);
                assert_eq!(rest.length() + 1, w0.length());
                let mut word = vec![i];
                word.extend(rest.canonical_reduced_word());
                assert_eq!(Permutation::from_word(&word, n), w0);
            }
        }
    }

    #[test]
    fn length_generating_function() {
        for n in 1..=5u32 {
            let mut gf = QLaurent::zero();
            for w in Permutation::all(n as usize) {
                gf.add_term(2 * w.length() as i64, 1.into());
            }
            let shift = (n * (n - 1) / 2) as i64;
            assert_eq!(gf, q_factorial(n).shift(shift));
        }
    }

    #[test]
    fn sq_sets() {
        assert_eq!(enumerate_sq(1), vec![SeqChoice(vec![])]);
        assert_eq!(enumerate_sq(2).len(), 2);
        assert_eq!(enumerate_sq(3).len(), 6);
        assert_eq!(enumerate_sq(5).len(), 120);
    }

    #[test]
    fn text_formats() {
        assert_eq!(p("2,1").to_string(), "2,1");
        let w: Permutation = "3 1 2".parse().unwrap();
        assert_eq!(w.to_string(), "3 1 2");
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }
}
