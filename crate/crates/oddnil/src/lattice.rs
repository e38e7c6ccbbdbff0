//! Integer row lattices: Hermite and Smith normal forms over `ℤ`.
//!
//! Elimination uses only integer row operations (extended gcd combinations),
//! so no fractions ever appear.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Row = Vec<BigInt>;

/// Row-style Hermite normal form: pivot entries positive, entries above a
/// pivot reduced into `[0, pivot)`, zero rows dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermite {
    pub cols: usize,
    pub rows: Vec<Row>,
    pub pivots: Vec<usize>,
}

impl Hermite {
    pub fn new(generators: &[Row], cols: usize) -> Hermite {
        let mut m: Vec<Row> = generators
            .iter()
            .filter(|r| r.iter().any(|c| !c.is_zero()))
            .cloned()
            .collect();
        for r in &m {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..cols {
            if top == m.len() {
                break;
            }
            // fold every row's entry in this column into row `top` by gcd steps
            let Some(first) = (top..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(top, first);
            for i in top + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let (p, q) = (m[top][col].clone(), m[i][col].clone());
                let g = p.extended_gcd(&q);
                let (u, v) = (g.x, g.y);
                let (pg, qg) = (&p / &g.gcd, &q / &g.gcd);
                let new_top: Row = (0..cols).map(|k| &u * &m[top][k] + &v * &m[i][k]).collect();
                let new_i: Row = (0..cols).map(|k| &pg * &m[i][k] - &qg * &m[top][k]).collect();
                m[top] = new_top;
                m[i] = new_i;
            }
            if m[top][col].is_negative() {
                for c in m[top].iter_mut() {
                    *c = -&*c;
                }
            }
            pivots.push(col);
            top += 1;
        }
        m.truncate(top);
        // reduce above pivots
        for (r, &col) in pivots.iter().enumerate() {
            let p = m[r][col].clone();
            for i in 0..r {
                let q = m[i][col].div_floor(&p);
                if !q.is_zero() {
                    for k in 0..cols {
                        let t = &q * &m[r][k];
                        m[i][k] -= t;
                    }
                }
            }
        }
        Hermite { cols, rows: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` modulo the lattice; zero iff `v` is a member.
    pub fn reduce(&self, v: &[BigInt]) -> Row {
        let mut v = v.to_vec();
        for (r, &col) in self.pivots.iter().enumerate() {
            let q = v[col].div_floor(&self.rows[r][col]);
            if !q.is_zero() {
                for k in 0..self.cols {
                    v[k] -= &q * &self.rows[r][k];
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Nonzero invariant factors of the lattice.
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        smith_diagonal(&self.rows, self.cols)
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_diagonal(rows: &[Row], cols: usize) -> Vec<BigInt> {
    let mut m: Vec<Row> = rows.to_vec();
    let nr = m.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < nr.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for r in m.iter_mut() {
            r.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..nr {
            let q = m[i][t].div_floor(&m[t][t]);
            if !q.is_zero() {
                for k in t..cols {
                    let s = &q * &m[t][k];
                    m[i][k] -= s;
                }
            }
            clean &= m[i][t].is_zero();
        }
        for j in t + 1..cols {
            let q = m[t][j].div_floor(&m[t][t]);
            if !q.is_zero() {
                for r in m.iter_mut().skip(t) {
                    let s = &q * &r[t];
                    r[j] -= s;
                }
            }
            clean &= m[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // divisibility: fold an offending row into row t and retry
        let p = m[t][t].clone();
        let bad = (t + 1..nr).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&p)));
        if let Some(i) = bad {
            for k in t..cols {
                let s = m[i][k].clone();
                m[t][k] += s;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn determinant(rows: &[Row]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Row> = rows.to_vec();
    for r in &m {
        assert_eq!(r.len(), n, "matrix not square");
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() };
    if sign {
        -d
    } else {
        d
    }
}

/// Rank over `ℚ` by fraction-free elimination.
pub fn rank_q(rows: &[Row], cols: usize) -> usize {
    let mut m: Vec<Row> = rows.iter().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            for j in col + 1..cols {
                let v = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over `ℤ/2`.
pub fn rank_mod2(rows: &[Row], cols: usize) -> usize {
    let mut m: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| r.iter().map(|c| c.is_odd()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col]) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][col] {
                for k in col..cols {
                    let b = m[rank][k];
                    m[i][k] ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn unit_vector(n: usize, i: usize) -> Row {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Row> {
        rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect()
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn hermite_example() {
        let h = Hermite::new(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]), 3);
        assert_eq!(h.rank(), 3);
        assert_eq!(h.pivots, vec![0, 1, 2]);
        let rows: Vec<Vec<i64>> = h.rows.iter().map(|r| ints(r)).collect();
        assert_eq!(rows, vec![vec![2, 0, 120], vec![0, 2, 20], vec![0, 0, 156]]);
        assert!(h.contains(&mat(&[&[-4, 10, 16]])[0]));
        assert!(!h.contains(&mat(&[&[1, 0, 0]])[0]));
    }

    #[test]
    fn smith_example() {
        let d = smith_diagonal(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]), 3);
        assert_eq!(ints(&d), vec![2, 2, 156]);
        assert_eq!(ints(&smith_diagonal(&mat(&[&[2, 0], &[0, 3]]), 2)), vec![1, 6]);
        assert!(smith_diagonal(&mat(&[&[0, 0]]), 2).is_empty());
    }

    #[test]
    fn rational_rank() {
        assert_eq!(rank_q(&mat(&[&[2, 4], &[1, 2], &[0, 3]]), 2), 2);
        assert_eq!(rank_q(&mat(&[&[0, 2, 4], &[0, 1, 2]]), 3), 1);
        assert_eq!(rank_q(&mat(&[&[0, 0]]), 2), 0);
    }

    #[test]
    fn mod2_rank() {
        assert_eq!(rank_mod2(&mat(&[&[2, 4], &[1, 3]]), 2), 1);
        assert_eq!(rank_mod2(&mat(&[&[1, 0], &[1, 1]]), 2), 2);
    }

    /// Determinant by cofactor expansion, as an independent oracle.
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &c)| c).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn square_invariants(entries in proptest::collection::vec(-9i64..=9, 9)) {
            let m: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let rows: Vec<Row> = m.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect();
            let h = Hermite::new(&rows, 3);
            let d = det(&m);
            let s = smith_diagonal(&rows, 3);
            if d != 0 {
                let hd: BigInt = h.rows.iter().enumerate().map(|(i, r)| r[i].clone()).product();
                prop_assert_eq!(hd, BigInt::from(d.abs()));
                prop_assert_eq!(s.iter().product::<BigInt>(), BigInt::from(d.abs()));
                for w in s.windows(2) {
                    prop_assert!(w[1].is_multiple_of(&w[0]));
                }
            } else {
                prop_assert!(h.rank() < 3);
            }
            prop_assert_eq!(h.rank(), s.len());
            prop_assert_eq!(determinant(&rows), BigInt::from(d));
            prop_assert_eq!(rank_q(&rows, 3), h.rank());
            for r in &rows {
                prop_assert!(h.contains(r));
            }
        }
    }
}
