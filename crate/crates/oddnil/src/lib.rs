//! Exact algebra for the odd nilHecke algebra.
//!
//! The crate is layered bottom-up: graded ranks ([`qgrade`]), indexing
//! combinatorics ([`combinat`]), the skew polynomial ring ([`skewpoly`]),
//! odd divided differences ([`oddops`]), odd symmetric functions
//! ([`oddsym`]), the operator algebra and its thick calculus ([`onh`]),
//! cyclotomic quotients ([`cyclotomic`]) and a registry of checks
//! ([`verify`]).

pub mod combinat;
pub mod cyclotomic;
pub mod lattice;
pub mod oddops;
pub mod oddsym;
pub mod onh;
pub mod qgrade;
pub mod skewpoly;
pub mod verify;

mod error;

pub use error::{Error, Result};

/// Binomial coefficient as a plain integer; zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for j in 0..k {
        r = r * (n - j) / (j + 1);
    }
    r
}

/// `(-1)^e` for a possibly negative exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
