use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;

use super::{merge, CheckSpec, Ctx, Outcome, ENVELOPE_A, ENVELOPE_AB};
use crate::combinat::{enumerate_sq, partitions_in_box, partitions_of, Partition, Permutation};
use crate::cyclotomic::{
    classical_quotient_rank_mod2, coordinates, default_dmax, epsilon_basis, grassmann_matrix,
    grassmann_recursion, ideal_degree_slice, ideal_slice_from, observed_recursion_parity,
    odd_quotient_rank_mod2, quotient_report, schur_box_images, stated_recursion_parity,
};
use crate::lattice::{determinant, Hermite, Row};
use crate::oddops::{killed_by_all, longest_dd};
use crate::oddsym::{
    classical, complete, elementary, elementary_word, pieri_expected, schubert, schur,
};
use crate::onh::thick::*;
use crate::onh::{schubert_basis, Chain, OnhElement, OnhWord, SumOp};
use crate::qgrade::{q_binomial, q_cardinality_box, QLaurent};
use crate::skewpoly::{Monomial, SkewPolynomial};
use crate::{binom, sign};

macro_rules! check {
    ($id:literal, $summary:literal, $f:path) => {
        CheckSpec { id: $id, summary: $summary, sentinel: false, run: $f }
    };
    (sentinel $id:literal, $summary:literal, $f:path) => {
        CheckSpec { id: $id, summary: $summary, sentinel: true, run: $f }
    };
}

pub(super) static REGISTRY: &[CheckSpec] = &[
    check!("defining_relations", "nilHecke relations on every monomial up to dmax", defining_relations),
    check!("e_h_relation", "sum (-1)^{k(k+1)/2} ε_k h_{m-k} = 0", e_h_relation),
    check!("eps_relations", "quadratic relations among the ε_k", eps_relations),
    check!("pieri", "s_α s_{1^k} as a signed sum of Schur polynomials", pieri),
    check!("owl_corollary", "D_a(f g) = f^{w0} D_a(g) for symmetric f", owl_corollary),
    check!("da_values", "D_a on the staircase and its reversal", da_values),
    check!("crossing_slide", "∂ chains slide past a crossing", crossing_slide),
    check!("da_slide", "D_a slides through a crossing; alternative D_a recursion", da_slide),
    check!("ea_standard", "e_a = ±x^δ D_a and e_a f e_a = e_a f", ea_standard),
    check!("ea_idem", "e_a idempotent, word-independent, absorbing", ea_idem),
    check!("splitter_assoc", "crossing merges, splitter associativity, D_a⊗D_b", splitter_assoc),
    check!("oval", "λ_β σ_α = δ e_{a+b}", oval),
    check!("dapb", "D_{a+b} on dotted staircases", dapb),
    check!("shuffle", "exponent shuffles under ∂_i", shuffle),
    check!("staircase_vanish", "vanishing of a matched exponent", staircase_vanish),
    check!("add_step", "adding a step to a full staircase", add_step),
    check!("reorder_revstair", "reordering a reverse staircase", reorder_revstair),
    check!("nil_orth", "λ_ℓ' σ_ℓ = δ e_a", nil_orth),
    check!("identity_decomposition", "a! orthogonal idempotents summing to 1", identity_decomposition),
    check!("eaeb_decomposition", "e_α decompose e_a⊗e_b", eaeb_decomposition),
    check!("ea_eone", "expansion of e_a⊗1", ea_eone),
    check!("center", "symmetric functions of squares are central", center),
    check!("jacobi_trudi_failure", "ε_4 outside the subring of h_{≤3}, ε_{≤3}", jacobi_trudi_failure),
    check!("schubert_basis", "Schubert polynomials as integral and module bases", schubert_basis_check),
    check!("matrix_iso", "ONH_a as a matrix algebra over OΛ_a", matrix_iso),
    check!("grassmann_recursion", "first column of M^{N-a+1} against the series relations", grassmann_recursion_check),
    check!("oh_rank", "graded rank of OH_{a,N}", oh_rank),
    check!("schur_box", "Schur polynomials in a box form a basis of OH_{a,N}", schur_box),
    check!("mod2", "reduction mod 2 against the classical theory", mod2),
    check!("ea_slide", "e_a slides through a crossing", ea_slide),
    check!("automorphisms", "σ and ψ on D_a and x^δ", automorphisms),
    check!(sentinel "ea_slide_mirror", "mirrored e_a slide (false)", ea_slide_mirror),
    check!(sentinel "x1sq_central", "x_1^2 central (false)", x1sq_central),
];

macro_rules! sweep {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(reason) => return Outcome::skip(reason),
        }
    };
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn dd_chain(n: usize, word: &[usize]) -> OnhElement {
    OnhElement::crossings(n, word)
}

fn down(hi: usize, lo: usize) -> Vec<usize> {
    (lo..=hi).rev().collect()
}

fn monomials_upto(a: usize, k: usize) -> Vec<Monomial> {
    (0..=k).flat_map(|d| Monomial::all_of_degree(a, d)).collect()
}

fn mono(exps: &[usize]) -> SkewPolynomial {
    SkewPolynomial::from_monomial(Monomial::from_exps(exps), BigInt::one())
}

fn defining_relations(ctx: &Ctx) -> Outcome {
    let dmax = sweep!(ctx.dmax(8));
    let avals = sweep!(ctx.sweep_a(2..=4, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals {
        let x = |i| OnhElement::dot(a, i);
        let d = |i| OnhElement::cross(a, i);
        let one = OnhElement::identity(a);
        let zero = OnhElement::zero(a);
        let mut rels: Vec<(String, OnhElement, OnhElement)> = Vec::new();
        for i in 1..a {
            rels.push((format!("d{i}d{i} = 0"), d(i).mul(&d(i)), zero.clone()));
            rels.push((format!("x{i}d{i} + d{i}x{} = 1", i + 1), x(i).mul(&d(i)).add(&d(i).mul(&x(i + 1))), one.clone()));
            rels.push((format!("d{i}x{i} + x{}d{i} = 1", i + 1), d(i).mul(&x(i)).add(&x(i + 1).mul(&d(i))), one.clone()));
            if i + 1 < a {
                let (p, q) = (d(i).mul(&d(i + 1)).mul(&d(i)), d(i + 1).mul(&d(i)).mul(&d(i + 1)));
                rels.push((format!("braid {i}"), p, q));
            }
            for j in 1..a {
                if i + 1 < j {
                    rels.push((format!("d{i}d{j} + d{j}d{i} = 0"), d(i).mul(&d(j)).add(&d(j).mul(&d(i))), zero.clone()));
                }
            }
            for j in 1..=a {
                if j != i && j != i + 1 {
                    rels.push((format!("x{j}d{i} + d{i}x{j} = 0"), x(j).mul(&d(i)).add(&d(i).mul(&x(j))), zero.clone()));
                }
            }
        }
        for i in 1..=a {
            for j in i + 1..=a {
                rels.push((format!("x{i}x{j} + x{j}x{i} = 0"), x(i).mul(&x(j)).add(&x(j).mul(&x(i))), zero.clone()));
            }
        }
        let monos = monomials_upto(a, dmax / 2);
        let parts: Vec<Outcome> = monos
            .par_iter()
            .map(|m| {
                let p = SkewPolynomial::from_monomial(m.clone(), BigInt::one());
                let mut o = Outcome::default();
                for (name, l, r) in &rels {
                    let (lv, rv) = (l.evaluate(&p).unwrap(), r.evaluate(&p).unwrap());
                    o.expect(format!("a={a} {name} on {p}"), &rv, &lv);
                }
                o
            })
            .collect();
        out.absorb(merge(parts));
        out.info(format!("a={a}"), format!("{} relations", rels.len()), format!("{} monomials of degree ≤ {}", monos.len(), dmax / 2));
    }
    out
}

fn e_h_relation(ctx: &Ctx) -> Outcome {
    let dmax = sweep!(ctx.dmax(12));
    let avals = sweep!(ctx.sweep_a(1..=5, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals {
        for m in 1..=dmax / 2 {
            let mut s = SkewPolynomial::zero(a);
            for k in 0..=m {
                let t = &elementary(k as i64, a) * &complete((m - k) as i64, a);
                s.add_scaled(&t, &big(sign(binom(k as i64 + 1, 2))));
            }
            out.expect(format!("a={a} m={m}"), &SkewPolynomial::zero(a), &s);
        }
    }
    out
}

fn eps_relations(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=5, ENVELOPE_A));
    let mut out = Outcome::default();
    let mut count = 0;
    for a in avals {
        let e = |k: usize| elementary(k as i64, a);
        for m in 1..=a {
            for i in 1..2 * m {
                let j = 2 * m - i;
                if j >= 1 && j <= a && i <= a {
                    count += 1;
                    out.expect(format!("a={a} ε{i}ε{j} = ε{j}ε{i}"), &(&e(j) * &e(i)), &(&e(i) * &e(j)));
                }
            }
            for i in 0..=2 * m {
                if 2 * m < i || 2 * m - i < 1 || 2 * m - i > a - 1 || i + 1 > a {
                    continue;
                }
                let (p, q) = (2 * m + 1 - i, 2 * m - i);
                count += 1;
                let s = big(sign(i as i64));
                let lhs = &(&e(i) * &e(p)) + &(&e(p) * &e(i)).scale(&s);
                let rhs = &(&e(i + 1) * &e(q)).scale(&s) + &(&e(q) * &e(i + 1));
                out.expect(format!("a={a} i={i} m={m} second relation"), &rhs, &lhs);
            }
        }
    }
    out.info("instances", "", count.to_string());
    out
}

fn pieri(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(3..=4, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals {
        let alphas = partitions_in_box(3.min(a), 3);
        let parts: Vec<Outcome> = alphas
            .par_iter()
            .map(|alpha| {
                let mut o = Outcome::default();
                let sa = schur(alpha, a).unwrap();
                for k in 0..=3.min(a) {
                    let lhs = &sa * &schur(&Partition::column(k), a).unwrap();
                    let mut rhs = SkewPolynomial::zero(a);
                    for (mu, s) in pieri_expected(alpha, k, a) {
                        rhs.add_scaled(&schur(&mu, a).unwrap(), &big(s));
                    }
                    o.expect(format!("a={a} α=({alpha}) k={k}"), &rhs, &lhs);
                }
                o
            })
            .collect();
        out.absorb(merge(parts));
    }
    out
}

fn owl_corollary(ctx: &Ctx) -> Outcome {
    let dmax = sweep!(ctx.dmax(8));
    let avals = sweep!(ctx.sweep_a(1..=4, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals {
        let fs: Vec<Partition> = (0..=dmax / 2).flat_map(|k| epsilon_basis(a, k)).collect();
        let gs = monomials_upto(a, 3);
        let parts: Vec<Outcome> = fs
            .par_iter()
            .map(|l| {
                let mut o = Outcome::default();
                let f = elementary_word(l.parts(), a);
                let fw = f.apply_w0();
                for g in &gs {
                    let gp = SkewPolynomial::from_monomial(g.clone(), BigInt::one());
                    let lhs = longest_dd(&(&f * &gp));
                    let rhs = &fw * &longest_dd(&gp);
                    o.expect(format!("a={a} f=ε_({l}) g={gp}"), &rhs, &lhs);
                }
                o
            })
            .collect();
        out.absorb(merge(parts));
    }
    out
}

fn psi_staircase(a: usize) -> SkewPolynomial {
    let mut letters = Monomial::staircase(a).letters();
    letters.reverse();
    SkewPolynomial::from_letters(a, &letters)
}

fn da_values(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=5, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals {
        let c = |s: i64| SkewPolynomial::constant(a, s);
        out.expect(format!("a={a} D_a(x^δ)"), &c(sign(binom(a as i64, 3))), &longest_dd(&Monomial::staircase(a).into_poly()));
        out.expect(format!("a={a} D_a(ψ(x^δ))"), &c(sign(binom(a as i64 + 1, 4))), &longest_dd(&psi_staircase(a)));
    }
    out
}

trait IntoPoly {
    fn into_poly(self) -> SkewPolynomial;
}

impl IntoPoly for Monomial {
    fn into_poly(self) -> SkewPolynomial {
        SkewPolynomial::from_monomial(self, BigInt::one())
    }
}

fn crossing_slide(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(3..=5, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals.into_iter().filter(|&a| a >= 3) {
        let mut l = down(a - 2, 1);
        l.extend(down(a - 1, 1));
        let mut r = down(a - 1, 1);
        r.extend(down(a - 1, 2));
        out.expect_op(format!("a={a}"), &dd_chain(a, &l), &dd_chain(a, &r));
    }
    out
}

fn da_slide(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=4, ENVELOPE_A - 1));
    let mut out = Outcome::default();
    for a in avals {
        let n = a + 1;
        let x = crossing_word(a, 1, 0, n);
        let lhs = longest_element(a).embed(0, n).mul(&x);
        let rhs = x.mul(&longest_element(a).embed(1, n)).neg_if(binom(a as i64, 3) % 2 == 1);
        out.expect_op(format!("a={a} D_a slide"), &lhs, &rhs);
        let alt = longest_element(a).embed(1, n).mul(&dd_chain(n, &(1..=a).collect::<Vec<_>>()));
        out.expect_op(format!("a={n} D_a = (1⊗D_{{a-1}}) ∂_1…∂_{{a-1}}"), &longest_element(n), &alt);
    }
    out
}

fn random_symmetric(rng: &mut impl Rng, a: usize) -> SkewPolynomial {
    let mut f = SkewPolynomial::zero(a);
    for k in 0..=3 {
        for l in epsilon_basis(a, k) {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                f.add_scaled(&elementary_word(l.parts(), a), &big(c));
            }
        }
    }
    f
}

fn ea_standard(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=5, ENVELOPE_A));
    let mut rng = ctx.rng();
    let mut out = Outcome::default();
    for a in avals {
        let rhs = staircase_dots(a).mul(&longest_element(a)).neg_if(binom(a as i64, 3) % 2 == 1);
        out.expect_op(format!("a={a} e_a = ±x^δ D_a"), &idempotent_e(a), &rhs);
        if a > 4 {
            continue;
        }
        let e = idempotent_e(a);
        for t in 0..20 {
            let f = random_symmetric(&mut rng, a);
            let g = random_symmetric(&mut rng, a);
            let fe = OnhElement::from_poly(&f);
            let lhs = Chain::new(vec![&e, &fe, &e]);
            let rhs = Chain::new(vec![&e, &fe]);
            out.expect_op(format!("a={a} sample {t}: e f e = e f, f={f}"), &lhs, &rhs);
            let (bf, bg) = (boxed(&f).unwrap(), boxed(&g).unwrap());
            let bgf = boxed(&(&g * &f)).unwrap();
            out.expect_op(format!("a={a} sample {t}: box(g)box(f) = box(gf)"), &Chain::new(vec![&bg, &bf]), &bgf);
        }
    }
    out
}

fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    if w.length() == 0 {
        return vec![Vec::new()];
    }
    let n = w.n();
    let mut out = Vec::new();
    for i in 1..n {
        if w.apply(i) > w.apply(i + 1) {
            let v = w.compose(&Permutation::simple(i, n));
            for mut word in reduced_words(&v) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out
}

fn e_from_word(a: usize, word: &[usize]) -> OnhElement {
    word.iter().fold(OnhElement::identity(a), |acc, &r| acc.mul(&zero_hecke(r, a)))
}

fn ea_idem(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=4, ENVELOPE_A));
    let mut out = Outcome::default();
    for &a in &avals {
        let e = idempotent_e(a);
        out.expect_op(format!("a={a} e_a²"), &Chain::new(vec![&e, &e]), &e);
        let words = reduced_words(&Permutation::longest(a));
        for w in &words {
            out.expect_op(format!("a={a} e_a along {w:?}"), &e_from_word(a, w), &e);
        }
        let d = longest_element(a);
        for r in 1..a {
            out.expect_op(format!("a={a} D_a ∂̄_{r} = D_a"), &d.mul(&zero_hecke(r, a)), &d);
        }
        out.expect_op(format!("a={a} D_a e_a = D_a"), &d.mul(&e), &d);
        out.info(format!("a={a}"), "reduced words of w0", words.len().to_string());
    }
    let cap = avals.iter().copied().max().unwrap_or(0);
    for (a, b, c) in triples(cap) {
        let n = a + b + c;
        let big_e = idempotent_e(n);
        let mid = e_embedded(b, a, n);
        out.expect_op(format!("({a},{b},{c}) e(1⊗e_b⊗1)"), &big_e.mul(&mid), &big_e);
        out.expect_op(format!("({a},{b},{c}) (1⊗e_b⊗1)e"), &mid.mul(&big_e), &big_e);
    }
    out
}

/// `(a, b, c)` with `a, c ≥ 0`, `b ≥ 1`, `a+b+c ≤ cap`.
fn triples(cap: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for n in 1..=cap {
        for b in 1..=n {
            for a in 0..=n - b {
                v.push((a, b, n - a - b));
            }
        }
    }
    v
}

fn splitter_assoc(ctx: &Ctx) -> Outcome {
    let cap = match (ctx.params.a, ctx.params.b) {
        (Some(a), Some(b)) if a + b > ENVELOPE_AB => return Outcome::skip(format!("a+b={} exceeds {ENVELOPE_AB}", a + b)),
        (Some(a), Some(b)) => a + b,
        _ => 4.min(ctx.max_rank() + 1),
    };
    let mut out = Outcome::default();
    for n in 3..=cap {
        for a in 1..n {
            for b in 1..n - a {
                let c = n - a - b;
                let sg = (a * b) as i64 * binom(c as i64, 2) % 2 == 1;
                let l = crossing_word(a, b + c, 0, n);
                let r = crossing_word(a, b, 0, n).mul(&crossing_word(a, c, b, n));
                out.expect_op(format!("X({a},{b}+{c}) merge"), &l, &r);
                let l = crossing_word(a + b, c, 0, n);
                let r = crossing_word(b, c, a, n).mul(&crossing_word(a, c, 0, n)).neg_if(sg);
                out.expect_op(format!("X({a}+{b},{c}) merge"), &l, &r);
                let l = up_splitter(a, b).embed(0, n).mul(&up_splitter(a + b, c));
                let r = up_splitter(b, c).embed(a, n).mul(&up_splitter(a, b + c)).neg_if(sg);
                out.expect_op(format!("splitter associativity ({a},{b},{c})"), &l, &r);
            }
        }
    }
    for n in 2..=cap {
        for a in 1..n {
            let b = n - a;
            let eab = e_embedded(a, 0, n).mul(&e_embedded(b, a, n));
            let x = crossing_word(a, b, 0, n);
            let lhs = eab.mul(&x).mul(&idempotent_e(n));
            out.expect_op(format!("(e_a⊗e_b) X e_{{a+b}} ({a},{b})"), &lhs, &eab.mul(&x));
            let (da, db) = (longest_element(a).embed(0, n), longest_element(b).embed(a, n));
            out.expect_op(format!("D_{{a+b}} = (D_a⊗D_b)X ({a},{b})"), &longest_element(n), &da.mul(&db).mul(&x));
            let sg = binom(a as i64, 2) * binom(b as i64, 2) % 2 == 1;
            out.expect_op(format!("D_{{a+b}} = ±(1⊗D_b)(D_a⊗1)X ({a},{b})"), &longest_element(n), &db.mul(&da).mul(&x).neg_if(sg));
        }
    }
    out
}

fn oval(ctx: &Ctx) -> Outcome {
    let pairs = sweep!(ctx.sweep_ab(&[(1, 1), (2, 1), (1, 2), (2, 2)], ENVELOPE_AB));
    let mut out = Outcome::default();
    for (a, b) in pairs {
        let n = a + b;
        let e = idempotent_e(n);
        let alphas = partitions_in_box(a, b);
        let sig: Vec<OnhElement> = alphas.iter().map(|al| sigma_part(al, a, b).unwrap()).collect();
        let lam: Vec<OnhElement> = alphas.iter().map(|al| lambda_part(al, a, b).unwrap()).collect();
        for (al, s) in alphas.iter().zip(&sig) {
            let expect = 2 * al.size() as i64 - 2 * (a * b) as i64;
            out.expect(format!("({a},{b}) deg σ_({al})"), &format!("{expect}"), &s.degree().map_or("inhomogeneous".to_string(), |d| d.to_string()));
        }
        let basis = schubert_basis(n);
        let rows: Vec<Vec<Outcome>> = (0..alphas.len())
            .into_par_iter()
            .map(|j| {
                (0..alphas.len())
                    .map(|i| {
                        let mut o = Outcome::default();
                        let prod = Chain::new(vec![&lam[j], &sig[i]]);
                        let label = format!("λ_({}) σ_({}) ({a},{b})", alphas[j], alphas[i]);
                        let ok = if i == j {
                            o.expect_op(label.clone(), &prod, &e)
                        } else {
                            basis.polys.iter().all(|p| {
                                use crate::onh::Operator;
                                let v = prod.apply(p);
                                v.is_zero() || {
                                    o.fail(format!("{label} on {p}"), "0", &v);
                                    false
                                }
                            })
                        };
                        if ok {
                            o.info(label, if i == j { "e_{a+b}" } else { "0" }, "ok");
                        }
                        o
                    })
                    .collect()
            })
            .collect();
        for r in rows {
            out.absorb(merge(r));
        }
    }
    out
}

fn dapb(ctx: &Ctx) -> Outcome {
    let pairs = sweep!(ctx.sweep_ab(&[(1, 1), (2, 1), (2, 2), (2, 3)], ENVELOPE_AB));
    let mut out = Outcome::default();
    for (a, b) in pairs {
        let n = a + b;
        let alphas = partitions_in_box(a, b);
        let betas = partitions_in_box(b, a);
        let parts: Vec<Outcome> = alphas
            .par_iter()
            .map(|al| {
                let mut o = Outcome::default();
                for be in &betas {
                    let mut exps: Vec<usize> = (1..=a).map(|i| a - i + al.part(i)).collect();
                    exps.extend((1..=b).map(|k| k - 1 + be.part(b - k + 1)));
                    let v = longest_dd(&mono(&exps));
                    let expect = if *al == be.hat(b, a).unwrap() {
                        SkewPolynomial::constant(n, sign(omega(be, b) + binom(n as i64, 3)))
                    } else {
                        SkewPolynomial::zero(n)
                    };
                    o.expect(format!("({a},{b}) α=({al}) β=({be}) exps {exps:?}"), &expect, &v);
                }
                o
            })
            .collect();
        out.absorb(merge(parts));
        out.info(format!("({a},{b})"), "pairs", (alphas.len() * betas.len()).to_string());
    }
    out
}

fn shuffle(ctx: &Ctx) -> Outcome {
    let _ = ctx;
    let mut out = Outcome::default();
    for (a, i) in [(2, 1), (3, 2), (4, 2)] {
        let d = |p: usize, q: usize| {
            let mut e = vec![0; a];
            e[i - 1] = p;
            e[i] = q;
            crate::oddops::divided_difference(i, &mono(&e)).unwrap()
        };
        for m in 0..=4 {
            for k in 1..=4 {
                let lhs = d(m, m + k);
                let sm = big(sign(m as i64));
                let rhs = if k == 1 {
                    d(m + k, m).scale(&sm)
                } else if k % 2 == 0 {
                    -&d(m + k, m)
                } else {
                    &(&d(m + k, m).scale(&sm) - &d(m + k - 1, m + 1)) + &d(m + 1, m + k - 1).scale(&sm)
                };
                out.expect(format!("shuffle a={a} i={i} m={m} k={k}"), &rhs, &lhs);
                if k % 2 == 0 || k < 3 {
                    continue;
                }
                let mut big_rhs = d(m + k, m).scale(&sm);
                for j in 1..=k / 2 {
                    big_rhs.add_scaled(&d(m + k - j, m + j), &big(-2 * sign((m * (j + 1)) as i64)));
                }
                out.expect(format!("big shuffle a={a} i={i} m={m} k={k}"), &big_rhs, &lhs);
            }
        }
    }
    out
}

fn staircase_vanish(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(2..=5, ENVELOPE_A));
    let mut out = Outcome::default();
    let mut count = 0;
    for a in avals {
        for m in 2..=a {
            for p in a - (m - 1)..=a - 1 {
                let mut exps: Vec<usize> = (1..m).map(|i| a - i).collect();
                exps.push(p);
                count += 1;
                out.expect(format!("a={a} m={m} p={p}"), &SkewPolynomial::zero(m), &longest_dd(&mono(&exps)));
            }
        }
    }
    out.info("instances", "", count.to_string());
    out
}

fn add_step(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(2..=5, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals.into_iter().filter(|&a| a >= 2) {
        let mut exps: Vec<usize> = (2..=a).map(|i| a - i).collect();
        exps.push(a - 1);
        let lhs = longest_dd(&mono(&exps));
        let stair = longest_dd(&Monomial::staircase(a).into_poly());
        let mid = stair.scale(&big(sign(binom(a as i64 - 1, 3))));
        out.expect(format!("a={a} first equality"), &mid, &lhs);
        out.expect(format!("a={a} value"), &SkewPolynomial::constant(a, sign(binom(a as i64 - 1, 2))), &lhs);
    }
    out
}

fn reorder_revstair(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=5, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals {
        let lhs = longest_dd(&Monomial::reverse_staircase(a).into_poly());
        let rhs = longest_dd(&Monomial::staircase(a).into_poly()).scale(&big(sign(binom(a as i64, 4))));
        out.expect(format!("a={a}"), &rhs, &lhs);
    }
    out
}

fn nil_orth(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(2..=3, 4));
    let mut out = Outcome::default();
    for a in avals {
        let seqs = enumerate_sq(a);
        let e = idempotent_e(a);
        let zero = OnhElement::zero(a);
        let sig: Vec<_> = seqs.iter().map(sigma_seq).collect();
        let lam: Vec<_> = seqs.iter().map(lambda_seq).collect();
        let parts: Vec<Outcome> = (0..seqs.len())
            .into_par_iter()
            .map(|j| {
                let mut o = Outcome::default();
                for i in 0..seqs.len() {
                    let target = if i == j { &e } else { &zero };
                    o.expect_op(format!("a={a} λ_({}) σ_({})", seqs[j], seqs[i]), &Chain::new(vec![&lam[j], &sig[i]]), target);
                }
                o
            })
            .collect();
        out.absorb(merge(parts));
        out.info(format!("a={a}"), "pairings", (seqs.len() * seqs.len()).to_string());
    }
    out
}

/// Idempotent family check shared by both decompositions.
fn decomposition(
    label: &str,
    names: &[String],
    sig: &[OnhElement],
    lam: &[OnhElement],
    total: &OnhElement,
) -> Outcome {
    let k = names.len();
    let es: Vec<OnhElement> = sig.iter().zip(lam).map(|(s, l)| s.mul(l)).collect();
    let parts: Vec<Outcome> = (0..k)
        .into_par_iter()
        .map(|i| {
            let mut o = Outcome::default();
            for j in 0..k {
                let prod = Chain::new(vec![&es[i], &es[j]]);
                let tag = format!("{label} e_({}) e_({})", names[i], names[j]);
                if i == j {
                    o.expect_op(tag, &prod, &es[i]);
                } else {
                    o.expect_op(tag, &prod, &OnhElement::zero(total.strands()));
                }
            }
            o
        })
        .collect();
    let mut out = merge(parts);
    let ops: Vec<_> = es.iter().map(|e| (BigInt::one(), e as &dyn crate::onh::Operator)).collect();
    out.expect_op(format!("{label} sum of idempotents"), &SumOp::new(total.strands(), ops), total);
    out
}

fn identity_decomposition(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(2..=4, 4));
    let mut out = Outcome::default();
    for a in avals {
        let seqs = enumerate_sq(a);
        let names: Vec<String> = seqs.iter().map(|l| l.to_string()).collect();
        let sig: Vec<_> = seqs.iter().map(sigma_seq).collect();
        let lam: Vec<_> = seqs.iter().map(lambda_seq).collect();
        out.absorb(decomposition(&format!("a={a}"), &names, &sig, &lam, &OnhElement::identity(a)));
        for (l, s) in seqs.iter().zip(&sig) {
            out.info(format!("e_ℓ ℓ=({l}) a={a}"), "idempotent", format!("deg σ_ℓ = {}", s.degree().map_or("-".into(), |d| d.to_string())));
        }
    }
    out
}

fn eaeb_decomposition(ctx: &Ctx) -> Outcome {
    let pairs = sweep!(ctx.sweep_ab(&[(1, 1), (2, 1), (1, 2), (2, 2)], ENVELOPE_AB));
    let mut out = Outcome::default();
    for (a, b) in pairs {
        let n = a + b;
        let alphas = partitions_in_box(a, b);
        let names: Vec<String> = alphas.iter().map(|x| x.to_string()).collect();
        let sig: Vec<_> = alphas.iter().map(|x| sigma_part(x, a, b).unwrap()).collect();
        let lam: Vec<_> = alphas.iter().map(|x| lambda_part(x, a, b).unwrap()).collect();
        let total = e_embedded(a, 0, n).mul(&e_embedded(b, a, n));
        out.absorb(decomposition(&format!("({a},{b})"), &names, &sig, &lam, &total));
        let mut degs = QLaurent::zero();
        for s in &sig {
            match s.degree() {
                Some(d) => degs.add_term(d + (a * b) as i64, BigInt::one()),
                None => out.fail(format!("({a},{b}) σ degree"), "homogeneous", "inhomogeneous"),
            }
        }
        let qb = q_binomial(n as u32, a as u32);
        out.expect(format!("({a},{b}) degree multiset"), &qb, &degs);
    }
    out
}

fn ea_eone(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=4, 4));
    let mut out = Outcome::default();
    for a in avals {
        let n = a + 1;
        let mut sum = OnhElement::zero(n);
        for s in 0..=a {
            let t = boxed(&elementary((a - s) as i64, a)).unwrap().embed(0, n).mul(&up_splitter(a, 1)).mul(&idempotent_e(n));
            let dots = OnhElement::from_word(n, OnhWord::from_monomial(&Monomial::var(n, n).pow_exp(s)), BigInt::one());
            sum = sum.add(&t.mul(&dots));
        }
        let rhs = sum.neg_if(binom(a as i64, 2) % 2 == 1);
        out.expect_op(format!("a={a}"), &e_embedded(a, 0, n), &rhs);
    }
    out
}

trait PowExp {
    fn pow_exp(&self, k: usize) -> Monomial;
}

impl PowExp for Monomial {
    fn pow_exp(&self, k: usize) -> Monomial {
        Monomial::from_exps(&self.exps().iter().map(|e| e * k).collect::<Vec<_>>())
    }
}

/// Monomial symmetric functions `m_λ(x_1^2, ..., x_a^2)`.
fn square_symmetric(l: &Partition, a: usize) -> SkewPolynomial {
    let base = l.padded(a).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    let mut perm = base.clone();
    perm.sort();
    loop {
        seen.insert(perm.clone());
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let mut f = SkewPolynomial::zero(a);
    for p in seen {
        let e: Vec<usize> = p.iter().map(|x| 2 * x).collect();
        f.add_term(Monomial::from_exps(&e), BigInt::one());
    }
    f
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn generators(a: usize) -> Vec<(String, OnhElement)> {
    let mut g: Vec<(String, OnhElement)> = (1..=a).map(|i| (format!("x{i}"), OnhElement::dot(a, i))).collect();
    g.extend((1..a).map(|i| (format!("d{i}"), OnhElement::cross(a, i))));
    g
}

fn center(ctx: &Ctx) -> Outcome {
    let dmax = sweep!(ctx.dmax(8));
    let avals = sweep!(ctx.sweep_a(2..=3, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals {
        for k in 0..=dmax / 4 {
            for l in partitions_of(k, a, k) {
                let f = square_symmetric(&l, a);
                if !killed_by_all(&f) {
                    out.fail(format!("a={a} m_({l})(x²) symmetric"), "killed by all ∂_i", &f);
                }
                let fe = OnhElement::from_poly(&f);
                for (name, g) in generators(a) {
                    out.expect_op(format!("a={a} [m_({l})(x²), {name}]"), &fe.mul(&g), &g.mul(&fe));
                }
            }
        }
    }
    out
}

fn x1sq_central(ctx: &Ctx) -> Outcome {
    let a = ctx.params.a.unwrap_or(2).max(2);
    let mut out = Outcome::default();
    let f = OnhElement::dot(a, 1).mul(&OnhElement::dot(a, 1));
    for (name, g) in generators(a) {
        out.expect_op(format!("a={a} [x1², {name}] = 0"), &f.mul(&g), &g.mul(&f));
    }
    out
}

fn jacobi_trudi_failure(ctx: &Ctx) -> Outcome {
    let a = ctx.params.a.unwrap_or(6);
    let k = ctx.params.dmax.unwrap_or(8) / 2;
    if a < k {
        return Outcome::skip(format!("ε_{k} vanishes in {a} variables"));
    }
    let mut out = Outcome::default();
    let gens: Vec<(String, SkewPolynomial)> = (1..k)
        .flat_map(|d| [(format!("h{d}"), complete(d as i64, a)), (format!("e{d}"), elementary(d as i64, a))])
        .collect();
    // all words of total degree k in the generators
    let mut words: Vec<(usize, SkewPolynomial)> = vec![(0, SkewPolynomial::one(a))];
    let mut full = Vec::new();
    while let Some((deg, p)) = words.pop() {
        if deg == k {
            full.push(p);
            continue;
        }
        for (i, (_, g)) in gens.iter().enumerate() {
            let gd = i / 2 + 1;
            if deg + gd <= k {
                words.push((deg + gd, &p * g));
            }
        }
    }
    let basis = epsilon_basis(a, k);
    let rows: Vec<Row> = full.iter().map(|p| coordinates(p, &basis).unwrap()).collect();
    let h = Hermite::new(&rows, basis.len());
    let target = coordinates(&elementary(k as i64, a), &basis).unwrap();
    let mut with = rows.clone();
    with.push(target.clone());
    let rank_with = Hermite::new(&with, basis.len()).rank();
    out.info(format!("a={a} degree {k}"), format!("{} words", full.len()), format!("ℤ-rank {} of {}", h.rank(), basis.len()));
    if h.contains(&target) {
        out.fail(format!("ε_{k} in OΛ_{a}"), "outside the ℤ-span", "inside the ℤ-span");
    } else {
        out.info(format!("ε_{k}"), "not in the ℤ-span", format!("rank with ε_{k}: {rank_with}"));
    }
    out
}

fn monomial_index(monos: &mut BTreeMap<Monomial, usize>, p: &SkewPolynomial) {
    for (m, _) in p.terms() {
        let n = monos.len();
        monos.entry(m.clone()).or_insert(n);
    }
}

fn to_row(monos: &BTreeMap<Monomial, usize>, p: &SkewPolynomial) -> Row {
    let mut r = vec![BigInt::zero(); monos.len()];
    for (m, c) in p.terms() {
        r[monos[m]] = c.clone();
    }
    r
}

fn unimodular(rows: &[Row], dim: usize) -> bool {
    rows.len() == dim && determinant(rows).magnitude().is_one()
}

fn schubert_basis_check(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=4, 4));
    let mut out = Outcome::default();
    for a in avals {
        let perms = Permutation::all(a);
        let polys: Vec<SkewPolynomial> = perms.iter().map(schubert).collect();
        // integral basis of H_a = span{x^A : A ≤ δ}
        let mut monos = BTreeMap::new();
        let delta = Monomial::staircase(a);
        for m in monomials_upto(a, binom(a as i64, 2) as usize) {
            if (1..=a).all(|i| m.exp(i) <= delta.exp(i)) {
                let n = monos.len();
                monos.insert(m, n);
            }
        }
        let mut ok = true;
        for p in &polys {
            if p.terms().any(|(m, _)| !monos.contains_key(m)) {
                ok = false;
                out.fail(format!("a={a} 𝔰 in H_a"), "exponents ≤ δ", p);
            }
        }
        if ok {
            let rows: Vec<Row> = polys.iter().map(|p| to_row(&monos, p)).collect();
            if !unimodular(&rows, monos.len()) {
                let h = Hermite::new(&rows, monos.len());
                out.fail(format!("a={a} Schubert basis of H_a"), "unimodular", format!("rank {} Smith {:?}", h.rank(), h.smith_diagonal()));
            }
        }
        // free module: 𝔰_w ε_λ and ε_λ 𝔰_w both span each degree of OPol_a
        for d in 0..=binom(a as i64, 2) as usize + 2 {
            let monos_d: BTreeMap<Monomial, usize> =
                Monomial::all_of_degree(a, d).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
            for side in ["right", "left"] {
                let mut rows = Vec::new();
                for (w, p) in perms.iter().zip(&polys) {
                    let sd = w.length();
                    if sd > d {
                        continue;
                    }
                    for l in epsilon_basis(a, d - sd) {
                        let e = elementary_word(l.parts(), a);
                        let q = if side == "right" { p * &e } else { &e * p };
                        rows.push(to_row(&monos_d, &q));
                    }
                }
                if !unimodular(&rows, monos_d.len()) {
                    let det = if rows.len() == monos_d.len() { determinant(&rows).to_string() } else { "-".into() };
                    out.fail(
                        format!("a={a} degree {d} {side} module"),
                        format!("{} generators, determinant ±1", monos_d.len()),
                        format!("{} generators, determinant {det}", rows.len()),
                    );
                }
            }
        }
    }
    out
}

fn matrix_iso(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=3, 4));
    let dmax = sweep!(ctx.dmax(8)) as i64;
    let mut out = Outcome::default();
    for a in avals {
        let perms = Permutation::all(a);
        let top = binom(a as i64, 2);
        // graded rank: standard basis x^A ∂_w versus Mat_{a!}(OΛ_a) with Schubert shifts
        for d in (-2 * top..=dmax).step_by(2) {
            let onh: usize = perms
                .iter()
                .filter_map(|w| {
                    let k = d / 2 + w.length() as i64;
                    (k >= 0).then(|| Monomial::all_of_degree(a, k as usize).len())
                })
                .sum();
            let mut mat = 0;
            for u in &perms {
                for w in &perms {
                    let k = d / 2 - u.length() as i64 + w.length() as i64;
                    if k >= 0 {
                        mat += epsilon_basis(a, k as usize).len();
                    }
                }
            }
            out.expect(format!("a={a} degree {d} rank"), &mat, &onh);
        }
        // faithfulness on low-degree standard basis elements
        let basis = schubert_basis(a);
        let mut monos = BTreeMap::new();
        let mut values = Vec::new();
        for m in monomials_upto(a, 1) {
            for w in &perms {
                let word = OnhWord::from_monomial(&m).concat(&OnhWord::from_crossings(&w.canonical_reduced_word()));
                let e = OnhElement::from_word(a, word, BigInt::one());
                let vals: Vec<SkewPolynomial> = basis.polys.iter().map(|p| e.evaluate(p).unwrap()).collect();
                for v in &vals {
                    monomial_index(&mut monos, v);
                }
                values.push(vals);
            }
        }
        let nb = basis.polys.len();
        let width = monos.len() * nb;
        let rows: Vec<Row> = values
            .iter()
            .map(|vals| {
                let mut r = vec![BigInt::zero(); width];
                for (s, v) in vals.iter().enumerate() {
                    for (m, c) in v.terms() {
                        r[monos[m] * nb + s] = c.clone();
                    }
                }
                r
            })
            .collect();
        let h = Hermite::new(&rows, width);
        out.expect(format!("a={a} independent standard elements"), &rows.len(), &h.rank());
    }
    out
}

fn grassmann_recursion_check(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=3, 3));
    let nmax = ctx.params.n.unwrap_or(6).min(super::ENVELOPE_N);
    let mut out = Outcome::default();
    let mut stated_mismatch = 0;
    let mut total = 0;
    for &a in &avals {
        for n in a..=nmax {
            for (j, col, f) in grassmann_recursion(a, n) {
                total += 1;
                let obs = f.scale(&big(sign(observed_recursion_parity(a, n, j))));
                out.expect(format!("a={a} N={n} j={j}"), &obs, &col);
                if col != f.scale(&big(sign(stated_recursion_parity(a, n, j)))) {
                    stated_mismatch += 1;
                }
            }
        }
    }
    out.info(
        "sign (-1)^{binom(N-a+j+1,2)}",
        format!("{total} entries"),
        format!("{stated_mismatch} differ by an overall -1; (-1)^{{binom(N-a+j-1,2)}} matches"),
    );
    // the first column generates the same ideal as the h_m
    if avals.contains(&2) || ctx.params.a.is_none() {
        let a = 2;
        for n in 2..=5.min(nmax) {
            let col = grassmann_matrix(a).power_first_column(n - a + 1);
            for d in (0..=default_dmax(a, n)).step_by(2) {
                let x = ideal_slice_from(&col, a, d).unwrap();
                let y = ideal_degree_slice(a, n, d).unwrap();
                if x.hermite != y.hermite {
                    out.fail(format!("a=2 N={n} degree {d}"), "same ideal slice", "different Hermite forms");
                }
            }
        }
    }
    out
}

fn oh_rank(ctx: &Ctx) -> Outcome {
    let pairs = sweep!(ctx.sweep_an(&[(0, 3), (1, 3), (2, 3), (2, 4), (3, 4), (2, 5)]));
    let parts: Vec<Outcome> = pairs
        .par_iter()
        .map(|&(a, n)| {
            let mut o = Outcome::default();
            let d = ctx.params.dmax.unwrap_or(default_dmax(a, n));
            match quotient_report(a, n, d) {
                Err(e) => o.fail(format!("(a,N)=({a},{n})"), "certified", e),
                Ok(r) => {
                    let total: BigInt = r.graded_rank.terms().map(|(_, c)| c.clone()).sum();
                    o.expect(format!("(a,N)=({a},{n}) total rank"), &big(binom(n as i64, a as i64)), &total);
                    if a <= n {
                        let b = n - a;
                        let centered = r.graded_rank.shift(-((a * b) as i64));
                        o.expect(format!("(a,N)=({a},{n}) graded"), &q_cardinality_box(a, b), &centered);
                        if !centered.is_bar_invariant() {
                            o.fail(format!("(a,N)=({a},{n}) palindromic"), "bar invariant", &centered);
                        }
                    }
                    if !r.torsion_free() {
                        o.fail(format!("(a,N)=({a},{n}) Smith factors"), "all 1", "torsion");
                    }
                    o.info(format!("(a,N)=({a},{n})"), "graded rank", r.graded_rank.to_string());
                }
            }
            o
        })
        .collect();
    merge(parts)
}

fn schur_box(ctx: &Ctx) -> Outcome {
    let pairs = sweep!(ctx.sweep_an(&[(1, 3), (2, 3), (2, 4), (3, 4)]));
    let mut out = Outcome::default();
    for (a, n) in pairs {
        if a == 0 || a > n {
            continue;
        }
        match schur_box_images(a, n, ctx.params.dmax.unwrap_or(default_dmax(a, n))) {
            Err(e) => out.fail(format!("(a,N)=({a},{n})"), "certified", e),
            Ok(r) => {
                for (l, ok) in &r.vanishing {
                    if !ok {
                        out.fail(format!("(a,N)=({a},{n}) s_({l})"), "0 in OH", "nonzero");
                    }
                }
                for (d, c, ok) in &r.basis_by_degree {
                    if !ok {
                        out.fail(format!("(a,N)=({a},{n}) degree {d}"), "basis", format!("{c} Schur images not a basis"));
                    }
                }
                out.info(format!("(a,N)=({a},{n})"), "vanishing outside the box", r.vanishing.len().to_string());
            }
        }
    }
    out
}

fn mod2(ctx: &Ctx) -> Outcome {
    let dmax = sweep!(ctx.dmax(8));
    let avals = sweep!(ctx.sweep_a(1..=4, ENVELOPE_A));
    let k = dmax / 2;
    let mut out = Outcome::default();
    let as_vecs = |s: std::collections::BTreeSet<Monomial>| -> Vec<Vec<u16>> {
        s.into_iter().map(|m| m.exps().iter().map(|&e| e as u16).collect()).collect()
    };
    let classical_vecs = |s: std::collections::BTreeSet<Vec<u16>>| -> Vec<Vec<u16>> { s.into_iter().collect() };
    for &a in &avals {
        for d in 0..=k {
            out.expect(
                format!("a={a} ε_{d} mod 2"),
                &format!("{:?}", classical_vecs(classical::mod2(&classical::e(d, a)))),
                &format!("{:?}", as_vecs(elementary(d as i64, a).mod2())),
            );
            out.expect(
                format!("a={a} h_{d} mod 2"),
                &format!("{:?}", classical_vecs(classical::mod2(&classical::h(d, a)))),
                &format!("{:?}", as_vecs(complete(d as i64, a).mod2())),
            );
            for l in partitions_of(d, a, d) {
                out.expect(
                    format!("a={a} s_({l}) mod 2"),
                    &format!("{:?}", classical_vecs(classical::mod2(&classical::schur(&l, a)))),
                    &format!("{:?}", as_vecs(schur(&l, a).unwrap().mod2())),
                );
            }
        }
        for n in a..=(a + 2).min(super::ENVELOPE_N) {
            for deg in (0..=2 * k).step_by(2) {
                let even = classical_quotient_rank_mod2(a, n, deg);
                let odd = odd_quotient_rank_mod2(a, n, deg).unwrap();
                out.expect(format!("(a,N)=({a},{n}) degree {deg} quotient dim over ℤ/2"), &even, &odd);
                let z = ideal_degree_slice(a, n, deg).unwrap().quotient_rank();
                out.expect(format!("(a,N)=({a},{n}) degree {deg} ℤ-rank vs ℤ/2-dim"), &even, &z);
            }
        }
    }
    out
}

fn ea_slide(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=4, 4));
    let mut out = Outcome::default();
    for a in avals {
        let n = a + 1;
        let x = crossing_word(a, 1, 0, n);
        out.expect_op(format!("a={a}"), &x.mul(&e_embedded(a, 1, n)), &e_embedded(a, 0, n).mul(&x));
    }
    out
}

fn ea_slide_mirror(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(2..=4, 4));
    let mut out = Outcome::default();
    for a in avals {
        let n = a + 1;
        let x = crossing_word(1, a, 0, n);
        out.expect_op(format!("a={a} mirrored slide"), &x.mul(&e_embedded(a, 0, n)), &e_embedded(a, 1, n).mul(&x));
    }
    out
}

fn automorphisms(ctx: &Ctx) -> Outcome {
    let avals = sweep!(ctx.sweep_a(1..=5, ENVELOPE_A));
    let mut out = Outcome::default();
    for a in avals {
        let d = longest_element(a);
        out.expect_op(format!("a={a} σ(D_a) = D_a"), &d.sigma(), &d);
        let psi = d.psi();
        out.expect_op(format!("a={a} ψ(D_a) = (-1)^binom(a,4) D_a"), &psi, &d.neg_if(binom(a as i64, 4) % 2 == 1));
        if binom(a as i64 - 1, 4) % 2 != binom(a as i64, 4) % 2 {
            out.info(format!("a={a} ψ(D_a) = (-1)^binom(a-1,4) D_a"), "holds", "fails by an overall -1");
        }
        let x = staircase_dots(a);
        out.expect_op(format!("a={a} x^δ = ±ψ(x^δ)"), &x, &x.psi().neg_if(binom(a as i64, 4) % 2 == 1));
        let sample = OnhElement::parse("\"x1 d1\" - 2*\"d1 x2\"", a.max(2)).unwrap();
        out.expect_op(format!("a={a} σ² = id"), &sample.sigma().sigma(), &sample);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::onh::operators_equal;

    #[test]
    fn reduced_word_counts() {
        assert_eq!(reduced_words(&Permutation::longest(3)).len(), 2);
        assert_eq!(reduced_words(&Permutation::longest(4)).len(), 16);
        for w in reduced_words(&Permutation::longest(4)) {
            assert_eq!(Permutation::from_word(&w, 4), Permutation::longest(4));
        }
    }

    #[test]
    fn squares_in_kernel() {
        let f = square_symmetric(&Partition::new(vec![1]).unwrap(), 3);
        assert_eq!(f.len(), 3);
        assert!(killed_by_all(&f));
        assert!(!operators_equal(
            &OnhElement::from_poly(&mono(&[2, 0])).mul(&OnhElement::cross(2, 1)),
            &OnhElement::cross(2, 1).mul(&OnhElement::from_poly(&mono(&[2, 0])))
        ));
    }
}
