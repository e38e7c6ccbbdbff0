//! The odd Grassmannian ring `OH_{a,N} = OΛ_a / <h_m : m > N-a>` computed one
//! degree at a time as an integer lattice quotient, plus the Grassmann matrix.
//!
//! Degrees here are ℤ-degrees: each variable has degree 2.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{partitions_of, Partition};
use crate::lattice::{rank_mod2, Hermite, Row};
use crate::oddsym::{classical, complete, elementary, elementary_word, expand_in_elementary, schur};
use crate::qgrade::QLaurent;
use crate::skewpoly::SkewPolynomial;
use crate::{binom, sign, Error, Result};

/// `z_k = (-1)^{binom(k+1,2)} h_k`.
pub fn z(k: usize, a: usize) -> SkewPolynomial {
    complete(k as i64, a).scale(&BigInt::from(sign(binom(k as i64 + 1, 2))))
}

/// Coefficient of `t^m` in `(sum ε_i t^i)(sum_{j ≤ N-a} z_j t^j)` with super-central `t`.
pub fn series_relation(a: usize, n: usize, m: usize) -> SkewPolynomial {
    let mut f = SkewPolynomial::zero(a);
    let top = n.saturating_sub(a);
    for i in 0..=a.min(m) {
        let j = m - i;
        if j > top {
            continue;
        }
        let term = &elementary(i as i64, a) * &z(j, a);
        f.add_scaled(&term, &BigInt::from(sign((i * j) as i64)));
    }
    f
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannMatrix {
    pub a: usize,
    pub entries: Vec<Vec<SkewPolynomial>>,
}

/// Matrix of multiplication by `x_1` on a block `x_1^{a-1}x^β, ..., x^β`.
pub fn grassmann_matrix(a: usize) -> GrassmannMatrix {
    let mut entries = vec![vec![SkewPolynomial::zero(a); a]; a];
    for j in 1..=a {
        entries[j - 1][0] =
            elementary(j as i64, a).scale(&BigInt::from(sign(binom(j as i64 - 1, 2))));
        if j < a {
            entries[j - 1][j] = SkewPolynomial::one(a);
        }
    }
    GrassmannMatrix { a, entries }
}

impl GrassmannMatrix {
    /// `M w`, each entry of `M` multiplied on the left.
    pub fn apply(&self, w: &[SkewPolynomial]) -> Vec<SkewPolynomial> {
        (0..self.a)
            .map(|j| {
                let mut s = SkewPolynomial::zero(self.a);
                for (k, wk) in w.iter().enumerate() {
                    if !self.entries[j][k].is_zero() && !wk.is_zero() {
                        s += &(&self.entries[j][k] * wk);
                    }
                }
                s
            })
            .collect()
    }

    /// `M^k v` with `v = (1, 0, ..., 0)^T`.
    pub fn power_first_column(&self, k: usize) -> Vec<SkewPolynomial> {
        let mut v = vec![SkewPolynomial::zero(self.a); self.a];
        v[0] = SkewPolynomial::one(self.a);
        for _ in 0..k {
            v = self.apply(&v);
        }
        v
    }
}

impl fmt::Display for GrassmannMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `(j, (M^{N-a+1} v)_j, f_{j,N-a})`, the relation left unsigned.
pub type RecursionEntry = (usize, SkewPolynomial, SkewPolynomial);

pub fn grassmann_recursion(a: usize, n: usize) -> Vec<RecursionEntry> {
    let m = grassmann_matrix(a);
    let col = m.power_first_column(n - a + 1);
    (1..=a)
        .map(|j| (j, col[j - 1].clone(), series_relation(a, n, n - a + j)))
        .collect()
}

/// Parity `binom(N-a+j+1, 2)` as stated for the recursion.
pub fn stated_recursion_parity(a: usize, n: usize, j: usize) -> i64 {
    binom((n - a + j + 1) as i64, 2) % 2
}

/// Parity `binom(N-a+j-1, 2)`, the one the computation exhibits: it differs
/// from the stated one by a global sign (already at `a = 1`, `M^N v = x_1^N`).
pub fn observed_recursion_parity(a: usize, n: usize, j: usize) -> i64 {
    binom((n - a + j) as i64 - 1, 2) % 2
}

/// Coordinates of a symmetric polynomial in the `ε`-word basis of its degree.
pub fn coordinates(f: &SkewPolynomial, basis: &[Partition]) -> Result<Row> {
    let exp = expand_in_elementary(f)?;
    let mut row = vec![BigInt::zero(); basis.len()];
    for (l, c) in exp {
        let i = basis
            .binary_search_by(|p| l.cmp(p).reverse())
            .or_else(|_| basis.iter().position(|p| *p == l).ok_or(()))
            .map_err(|_| Error::Invalid(format!("ε-word {l} outside the degree basis")))?;
        row[i] = c;
    }
    Ok(row)
}

/// `ε`-words of polynomial degree `k` in `OΛ_a`.
pub fn epsilon_basis(a: usize, k: usize) -> Vec<Partition> {
    partitions_of(k, k, a)
}

/// A degree slice of a two-sided ideal of `OΛ_a` as an integer lattice.
#[derive(Clone, Debug)]
pub struct DegreeLattice {
    pub degree: usize,
    pub ambient_basis: Vec<Partition>,
    pub generators: Vec<Row>,
    pub hermite: Hermite,
    pub smith_diagonal: Vec<BigInt>,
}

impl DegreeLattice {
    pub fn from_generators(degree: usize, ambient_basis: Vec<Partition>, generators: Vec<Row>) -> Self {
        let hermite = Hermite::new(&generators, ambient_basis.len());
        let smith_diagonal = hermite.smith_diagonal();
        DegreeLattice { degree, ambient_basis, generators, hermite, smith_diagonal }
    }

    pub fn quotient_rank(&self) -> usize {
        self.ambient_basis.len() - self.hermite.rank()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.smith_diagonal.iter().all(One::is_one)
    }

    pub fn contains(&self, f: &SkewPolynomial) -> Result<bool> {
        Ok(self.hermite.contains(&coordinates(f, &self.ambient_basis)?))
    }
}

/// Degree-`d` slice of the two-sided ideal generated by homogeneous `gens`:
/// spanned by `ε_λ g ε_μ`.
pub fn ideal_slice_from(gens: &[SkewPolynomial], a: usize, d: usize) -> Result<DegreeLattice> {
    if d % 2 == 1 {
        return Err(Error::Invalid(format!("odd degree {d}")));
    }
    let k = d / 2;
    let basis = epsilon_basis(a, k);
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.degree() else { continue };
        let gd = gd as usize;
        if gd > k {
            continue;
        }
        for s in 0..=k - gd {
            for l in epsilon_basis(a, s) {
                let left = &elementary_word(l.parts(), a) * g;
                for m in epsilon_basis(a, k - gd - s) {
                    let p = &left * &elementary_word(m.parts(), a);
                    if !p.is_zero() {
                        rows.push(coordinates(&p, &basis)?);
                    }
                }
            }
        }
    }
    Ok(DegreeLattice::from_generators(d, basis, rows))
}

fn defining_generators(a: usize, n: usize, k: usize) -> Vec<SkewPolynomial> {
    let lo = if a > n { 0 } else { n - a + 1 };
    (lo..=k).map(|m| complete(m as i64, a)).collect()
}

/// Degree-`d` slice of `<h_m : m > N-a>` in `OΛ_a`.
pub fn ideal_degree_slice(a: usize, n: usize, d: usize) -> Result<DegreeLattice> {
    if a == 0 {
        return Ok(zero_variable_slice(n, d));
    }
    ideal_slice_from(&defining_generators(a, n, d / 2), a, d)
}

fn zero_variable_slice(n: usize, d: usize) -> DegreeLattice {
    let _ = n;
    let basis = if d == 0 { vec![Partition::empty()] } else { Vec::new() };
    DegreeLattice::from_generators(d, basis, Vec::new())
}

/// Default degree bound `2a(N-a) + 4`.
pub fn default_dmax(a: usize, n: usize) -> usize {
    2 * a * n.saturating_sub(a) + 4
}

fn slices(a: usize, n: usize, d_max: usize) -> Result<Vec<DegreeLattice>> {
    (0..=d_max / 2)
        .into_par_iter()
        .map(|k| ideal_degree_slice(a, n, 2 * k))
        .collect()
}

fn certify(a: usize, n: usize, d_max: usize, slices: &[DegreeLattice]) -> Result<()> {
    let top = 2 * a * n.saturating_sub(a);
    if d_max < top {
        return Err(Error::Incomplete(d_max));
    }
    for s in slices.iter().filter(|s| s.degree > top) {
        if s.quotient_rank() != 0 {
            return Err(Error::Incomplete(s.degree));
        }
    }
    Ok(())
}

/// Graded rank `sum_d rank(OH_{a,N})_d q^d`.
pub fn quotient_graded_rank(a: usize, n: usize, d_max: usize) -> Result<QLaurent> {
    Ok(quotient_report(a, n, d_max)?.graded_rank)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientSlice {
    pub degree: usize,
    pub ambient: usize,
    pub ideal_rank: usize,
    pub quotient_rank: usize,
    pub torsion_free: bool,
}

#[derive(Clone, Debug)]
pub struct QuotientReport {
    pub a: usize,
    pub n: usize,
    pub graded_rank: QLaurent,
    pub slices: Vec<QuotientSlice>,
}

impl QuotientReport {
    pub fn torsion_free(&self) -> bool {
        self.slices.iter().all(|s| s.torsion_free)
    }
}

pub fn quotient_report(a: usize, n: usize, d_max: usize) -> Result<QuotientReport> {
    if a > n {
        return Ok(QuotientReport { a, n, graded_rank: QLaurent::zero(), slices: Vec::new() });
    }
    let sl = slices(a, n, d_max)?;
    certify(a, n, d_max, &sl)?;
    let mut graded_rank = QLaurent::zero();
    let mut out = Vec::new();
    for s in &sl {
        let r = s.quotient_rank();
        if r > 0 {
            graded_rank.add_term(s.degree as i64, BigInt::from(r));
        }
        out.push(QuotientSlice {
            degree: s.degree,
            ambient: s.ambient_basis.len(),
            ideal_rank: s.hermite.rank(),
            quotient_rank: r,
            torsion_free: s.is_torsion_free(),
        });
    }
    Ok(QuotientReport { a, n, graded_rank, slices: out })
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurBoxReport {
    /// Schur polynomials outside the box and whether each lies in the ideal.
    pub vanishing: Vec<(String, bool)>,
    /// Per degree: number of box Schur polynomials and whether, together with
    /// the ideal, they span the whole slice as a saturated lattice.
    pub basis_by_degree: Vec<(usize, usize, bool)>,
}

impl SchurBoxReport {
    pub fn holds(&self) -> bool {
        self.vanishing.iter().all(|v| v.1) && self.basis_by_degree.iter().all(|b| b.2)
    }
}

/// Images of `s_λ` in `OH_{a,N}`: zero outside `P(a, N-a)`, a basis inside.
pub fn schur_box_images(a: usize, n: usize, d_max: usize) -> Result<SchurBoxReport> {
    if a == 0 || a > n {
        return Err(Error::Invalid(format!("schur box needs 1 ≤ a ≤ N, got a={a} N={n}")));
    }
    let sl = slices(a, n, d_max)?;
    certify(a, n, d_max, &sl)?;
    let b = n - a;
    let mut vanishing = Vec::new();
    let mut basis_by_degree = Vec::new();
    for s in &sl {
        let k = s.degree / 2;
        let mut rows = s.hermite.rows.clone();
        let mut count = 0;
        for l in partitions_of(k, a, k) {
            let p = schur(&l, a)?;
            let c = coordinates(&p, &s.ambient_basis)?;
            if l.fits_box(a, b) {
                rows.push(c);
                count += 1;
            } else {
                vanishing.push((l.to_string(), s.hermite.contains(&c)));
            }
        }
        let h = Hermite::new(&rows, s.ambient_basis.len());
        let spans = h.rank() == s.ambient_basis.len() && h.smith_diagonal().iter().all(One::is_one);
        let independent = h.rank() == s.hermite.rank() + count;
        basis_by_degree.push((s.degree, count, spans && independent));
    }
    Ok(SchurBoxReport { vanishing, basis_by_degree })
}

/// Quotient dimension over `ℤ/2` of `Λ_a / <h_m : m > N-a>` in degree `d`,
/// from the classical (commutative) oracle in the monomial basis.
pub fn classical_quotient_rank_mod2(a: usize, n: usize, d: usize) -> usize {
    let k = d / 2;
    let ambient = epsilon_basis(a, k).len();
    let mut monos: Vec<Vec<u16>> = Vec::new();
    let mut vecs: Vec<classical::ZPoly> = Vec::new();
    let lo = if a > n { 0 } else { n - a + 1 };
    for m in lo..=k {
        let hm = classical::h(m, a);
        for l in epsilon_basis(a, k - m) {
            let mut p = hm.clone();
            for &part in l.parts() {
                p = classical::mul(&p, &classical::e(part, a));
            }
            monos.extend(p.keys().cloned());
            vecs.push(p);
        }
    }
    monos.sort();
    monos.dedup();
    let rows: Vec<Row> = vecs
        .iter()
        .map(|p| monos.iter().map(|m| BigInt::from(*p.get(m).unwrap_or(&0))).collect())
        .collect();
    ambient - rank_mod2(&rows, monos.len())
}

/// Mod-2 rank of the odd ideal slice, for comparison with the classical oracle.
pub fn odd_quotient_rank_mod2(a: usize, n: usize, d: usize) -> Result<usize> {
    let s = ideal_degree_slice(a, n, d)?;
    Ok(s.ambient_basis.len() - rank_mod2(&s.generators, s.ambient_basis.len()))
}
