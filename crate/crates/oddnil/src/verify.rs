//! Registry of named identity checks with machine-readable reports.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::ops::RangeInclusive;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::onh::{first_difference, Operator};
use crate::{Error, Result};

mod checks;

pub const DEFAULT_SEED: u64 = 0x0dd5_eed;

/// Largest sweeps the registry will attempt.
pub const ENVELOPE_A: usize = 5;
pub const ENVELOPE_AB: usize = 5;
pub const ENVELOPE_N: usize = 6;
pub const ENVELOPE_DEGREE: usize = 12;

const MAX_FAILURES: usize = 25;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dmax: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rank: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Params,
    pub status: Status,
    pub seed: u64,
    pub details: Vec<Detail>,
    pub wall_time_s: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Inputs shared by every check.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub params: Params,
    pub seed: u64,
}

impl Ctx {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn max_rank(&self) -> usize {
        self.params.max_rank.unwrap_or(ENVELOPE_A)
    }

    /// Values of `a`: the explicit parameter, else the default range capped by `--max-rank`.
    fn sweep_a(&self, default: RangeInclusive<usize>, limit: usize) -> std::result::Result<Vec<usize>, String> {
        if let Some(a) = self.params.a {
            if a > limit {
                return Err(format!("a={a} exceeds the supported envelope a ≤ {limit}"));
            }
            return Ok(vec![a]);
        }
        let cap = self.max_rank().min(limit);
        Ok(default.filter(|&a| a <= cap).collect())
    }

    fn sweep_ab(&self, default: &[(usize, usize)], limit: usize) -> std::result::Result<Vec<(usize, usize)>, String> {
        match (self.params.a, self.params.b) {
            (Some(a), Some(b)) => {
                if a + b > limit {
                    Err(format!("a+b={} exceeds the supported envelope a+b ≤ {limit}", a + b))
                } else {
                    Ok(vec![(a, b)])
                }
            }
            _ => {
                let r = self.max_rank();
                Ok(default.iter().copied().filter(|&(a, b)| a <= r && a + b <= (r + 1).min(limit)).collect())
            }
        }
    }

    fn sweep_an(&self, default: &[(usize, usize)]) -> std::result::Result<Vec<(usize, usize)>, String> {
        match (self.params.a, self.params.n) {
            (Some(a), Some(n)) => {
                if n > ENVELOPE_N || a > ENVELOPE_A {
                    Err(format!("(a,N)=({a},{n}) exceeds the supported envelope a ≤ {ENVELOPE_A}, N ≤ {ENVELOPE_N}"))
                } else {
                    Ok(vec![(a, n)])
                }
            }
            _ => {
                let r = self.max_rank();
                Ok(default.iter().copied().filter(|&(a, _)| a <= r).collect())
            }
        }
    }

    /// ℤ-degree bound for polynomial sweeps.
    fn dmax(&self, default: usize) -> std::result::Result<usize, String> {
        let d = self.params.dmax.unwrap_or(default);
        if d > ENVELOPE_DEGREE {
            return Err(format!("dmax={d} exceeds the supported envelope degree ≤ {ENVELOPE_DEGREE}"));
        }
        Ok(d)
    }
}

/// Accumulates the instances of one check.
#[derive(Default)]
pub struct Outcome {
    details: Vec<Detail>,
    failures: usize,
    skipped: Option<String>,
}

impl Outcome {
    fn skip(reason: String) -> Outcome {
        Outcome { skipped: Some(reason), ..Default::default() }
    }

    fn info(&mut self, input: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) {
        self.details.push(Detail { input: input.into(), expected: expected.into(), actual: actual.into() });
    }

    fn fail(&mut self, input: impl Into<String>, expected: impl Display, actual: impl Display) {
        self.failures += 1;
        if self.failures <= MAX_FAILURES {
            self.details.push(Detail {
                input: input.into(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn expect<T: PartialEq + Display>(&mut self, input: impl Into<String>, expected: &T, actual: &T) -> bool {
        if expected == actual {
            return true;
        }
        self.fail(input, expected, actual);
        false
    }

    /// Operator equality on the Schubert basis, recording the first witness.
    fn expect_op(&mut self, input: impl Into<String>, lhs: &dyn Operator, rhs: &dyn Operator) -> bool {
        match first_difference(lhs, rhs) {
            None => true,
            Some((w, l, r)) => {
                self.fail(format!("{} applied to 𝔰_[{w}]", input.into()), r, l);
                false
            }
        }
    }

    fn absorb(&mut self, other: Outcome) {
        self.failures += other.failures;
        for d in other.details {
            self.details.push(d);
        }
        if self.skipped.is_none() {
            self.skipped = other.skipped;
        }
    }

    fn ok(&self) -> bool {
        self.failures == 0
    }
}

/// Merge per-instance outcomes computed in parallel, keeping input order.
fn merge(parts: Vec<Outcome>) -> Outcome {
    let mut out = Outcome::default();
    for p in parts {
        out.absorb(p);
    }
    out
}

pub struct CheckSpec {
    pub id: &'static str,
    pub summary: &'static str,
    /// Asserts a known-false identity: a correct implementation reports `fail`.
    pub sentinel: bool,
    run: fn(&Ctx) -> Outcome,
}

pub fn registry() -> &'static [CheckSpec] {
    checks::REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static CheckSpec> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

pub fn run_check(id: &str, params: &Params, seed: u64) -> Result<CheckReport> {
    let spec = lookup(id)?;
    let ctx = Ctx { params: params.clone(), seed };
    let t = Instant::now();
    let out = (spec.run)(&ctx);
    let wall_time_s = t.elapsed().as_secs_f64();
    let status = if out.skipped.is_some() && out.failures == 0 {
        Status::Skipped
    } else if out.ok() {
        Status::Pass
    } else {
        Status::Fail
    };
    let mut details = out.details;
    if let Some(reason) = out.skipped {
        details.insert(0, Detail { input: "envelope".into(), expected: "within limits".into(), actual: reason });
    }
    Ok(CheckReport { check: spec.id.to_string(), params: params.clone(), status, seed, details, wall_time_s })
}

/// Ids selected by `all` (every non-sentinel check) or by explicit names.
pub fn resolve_ids(names: &[String]) -> Result<Vec<&'static str>> {
    let mut out = Vec::new();
    for n in names {
        match n.as_str() {
            "all" => out.extend(registry().iter().filter(|c| !c.sentinel).map(|c| c.id)),
            "sentinels" => out.extend(registry().iter().filter(|c| c.sentinel).map(|c| c.id)),
            other => out.push(lookup(other)?.id),
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|id| seen.insert(*id));
    Ok(out)
}

/// Run several checks concurrently; reports come back in the requested order.
pub fn run_many(ids: &[&str], params: &Params, seed: u64) -> Result<Vec<CheckReport>> {
    ids.par_iter().map(|id| run_check(id, params, seed)).collect()
}

/// Status histogram, used for summaries.
pub fn tally(reports: &[CheckReport]) -> BTreeMap<&'static str, usize> {
    let mut m = BTreeMap::new();
    for r in reports {
        let k = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        };
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(id: &str, params: Params) -> CheckReport {
        run_check(id, &params, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn unknown_check() {
        assert!(matches!(run_check("nosuch", &Params::default(), 1), Err(Error::UnknownCheck(_))));
        assert!(resolve_ids(&["nosuch".into()]).is_err());
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids: Vec<_> = registry().iter().map(|c| c.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(resolve_ids(&["all".into()]).unwrap().len() >= 29);
    }

    #[test]
    fn report_json_shape() {
        let r = run("da_values", Params { a: Some(3), ..Default::default() });
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["check", "details", "params", "seed", "status", "wall_time_s"]);
        assert_eq!(v["status"], "pass");
        assert_eq!(v["params"]["a"], 3);
        let back: CheckReport = serde_json::from_value(v).unwrap();
        assert_eq!(back.check, "da_values");
    }

    #[test]
    fn envelope_skips() {
        let r = run("nil_orth", Params { a: Some(9), ..Default::default() });
        assert_eq!(r.status, Status::Skipped);
        assert!(!r.details.is_empty());
    }

    #[test]
    fn small_checks_pass() {
        let p = Params { max_rank: Some(3), ..Default::default() };
        for id in [
            "defining_relations",
            "e_h_relation",
            "eps_relations",
            "da_values",
            "crossing_slide",
            "staircase_vanish",
            "add_step",
            "reorder_revstair",
            "shuffle",
            "nil_orth",
            "identity_decomposition",
        ] {
            let r = run(id, p.clone());
            assert_eq!(r.status, Status::Pass, "{id}: {:?}", r.details);
        }
    }

    #[test]
    fn sentinels_fail_with_witness() {
        for c in registry().iter().filter(|c| c.sentinel) {
            let r = run(c.id, Params::default());
            assert_eq!(r.status, Status::Fail, "{}", c.id);
            assert!(!r.details.is_empty());
        }
    }

    #[test]
    fn identity_decomposition_lists_idempotents() {
        let r = run("identity_decomposition", Params { a: Some(3), ..Default::default() });
        assert!(r.passed());
        assert_eq!(r.details.iter().filter(|d| d.input.starts_with("e_ℓ")).count(), 6);
    }

    #[test]
    fn oval_reports_every_pairing() {
        let r = run("oval", Params { a: Some(2), b: Some(2), ..Default::default() });
        assert!(r.passed(), "{:?}", r.details);
        assert_eq!(r.details.iter().filter(|d| d.input.starts_with("λ_")).count(), 36);
    }

    #[test]
    fn deterministic_reports() {
        let p = Params { a: Some(3), ..Default::default() };
        let mut a = run("ea_standard", p.clone());
        let mut b = run("ea_standard", p);
        a.wall_time_s = 0.0;
        b.wall_time_s = 0.0;
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
