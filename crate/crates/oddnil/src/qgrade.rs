//! Integer Laurent polynomials in `q` and balanced q-combinatorics.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A finite sum `sum c_m q^m` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c q^m`.
    pub fn monomial(m: i64, c: impl Into<BigInt>) -> Self {
        let mut r = Self::zero();
        r.add_term(m, c.into());
        r
    }

    pub fn add_term(&mut self, m: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn coeff(&self, m: i64) -> BigInt {
        self.coeffs.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(m, c)| (m + k, c.clone())).collect(),
        }
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(m, c)| (-m, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &QLaurent) -> Option<QLaurent> {
        let dlead = d.max_degree()?;
        let dc = d.coeff(dlead);
        let mut rem = self.clone();
        let mut quot = QLaurent::zero();
        let dmin = d.min_degree().unwrap();
        while let Some(top) = rem.max_degree() {
            let rmin = rem.min_degree().unwrap();
            if top - dlead < rmin - dmin {
                return None;
            }
            let (qc, r) = rem.coeff(top).div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let t = QLaurent::monomial(top - dlead, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut r = self.clone();
        for (m, c) in &rhs.coeffs {
            r.add_term(*m, c.clone());
        }
        r
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        self + &(-rhs)
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut r = QLaurent::zero();
        for (m, c) in &self.coeffs {
            for (n, d) in &rhs.coeffs {
                r.add_term(m + n, c * d);
            }
        }
        r
    }
}

/// Balanced quantum integer `[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn q_int(n: u32) -> QLaurent {
    let n = n as i64;
    let mut r = QLaurent::zero();
    for j in 0..n {
        r.add_term(n - 1 - 2 * j, BigInt::one());
    }
    r
}

pub fn q_factorial(n: u32) -> QLaurent {
    (1..=n).fold(QLaurent::one(), |acc, j| &acc * &q_int(j))
}

/// Balanced q-binomial `[n]! / ([k]! [n-k]!)`.
pub fn q_binomial(n: u32, k: u32) -> QLaurent {
    assert!(k <= n, "q_binomial requires k <= n");
    let den = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n)
        .div_exact(&den)
        .expect("q-factorial quotient must be exact")
}

/// `sum_{alpha in P(a,b)} q^{2|alpha| - ab}`.
pub fn q_cardinality_box(a: usize, b: usize) -> QLaurent {
    let mut r = QLaurent::zero();
    for p in crate::combinat::partitions_in_box(a, b) {
        r.add_term(2 * p.size() as i64 - (a * b) as i64, BigInt::one());
    }
    r
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match *m {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    if *m == 1 {
                        write!(f, "q")?
                    } else {
                        write!(f, "q^{m}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for QLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad q-Laurent polynomial: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut r = QLaurent::zero();
        // split into signed terms, keeping exponent minus signs attached
        let bytes: Vec<char> = compact.chars().collect();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, &ch) in bytes.iter().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && bytes[i - 1] != '^' {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef, exp) = if let Some(pos) = body.find('q') {
                let cpart = body[..pos].trim_end_matches('*');
                let c = if cpart.is_empty() {
                    BigInt::one()
                } else {
                    cpart.parse::<BigInt>().map_err(|_| bad())?
                };
                let rest = &body[pos + 1..];
                let e = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(bad)?
                        .parse::<i64>()
                        .map_err(|_| bad())?
                };
                (c, e)
            } else {
                (body.parse::<BigInt>().map_err(|_| bad())?, 0)
            };
            r.add_term(exp, if neg { -coef } else { coef });
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(2).to_string(), "q + q^-1");
        assert_eq!(q_int(3).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(q_factorial(2), q_int(2));
    }

    #[test]
    fn binomial_4_2() {
        assert_eq!(q_binomial(4, 2).to_string(), "q^4 + q^2 + 2 + q^-2 + q^-4");
        assert_eq!(q_binomial(5, 0), QLaurent::one());
    }

    #[test]
    fn box_cardinalities() {
        assert_eq!(q_cardinality_box(1, 1), q_int(2));
        assert_eq!(q_cardinality_box(3, 0), QLaurent::one());
        for n in 0..=8u32 {
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert_eq!(q_cardinality_box(k as usize, (n - k) as usize), b);
                assert!(b.is_bar_invariant());
                assert_eq!(b.at_one(), BigInt::from(crate::binom(n as i64, k as i64)));
            }
            assert!(q_factorial(n).is_bar_invariant());
        }
    }

    #[test]
    fn render_parse_roundtrip() {
        for s in ["q^4 + q^2 + 2 + q^-2 + q^-4", "-3*q^2 - q + 7 - 2*q^-5", "0", "-1"] {
            let p: QLaurent = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("q^".parse::<QLaurent>().is_err());
    }

    #[test]
    fn inexact_division_detected() {
        assert!(q_int(3).div_exact(&q_int(2)).is_none());
    }
}
