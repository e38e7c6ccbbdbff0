//! Browser bindings. Every export returns text; errors come back as a string
//! starting with `error:` so the page never has to catch exceptions.

use wasm_bindgen::prelude::*;

use oddnil::combinat::Partition;
use oddnil::cyclotomic::{default_dmax, quotient_report};
use oddnil::oddsym::{pieri_expected, schur};

/// Larger inputs take too long for an interactive page.
const MAX_VARS: usize = 6;
const MAX_N: usize = 7;

fn render(r: Result<String, String>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}"))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: oddnil::Error| e.to_string())
}

fn check_vars(vars: usize) -> Result<(), String> {
    if vars == 0 || vars > MAX_VARS {
        return Err(format!("number of variables must be between 1 and {MAX_VARS}"));
    }
    Ok(())
}

/// Odd Schur polynomial `s_α` in `vars` anticommuting variables.
#[wasm_bindgen]
pub fn schur_polynomial(partition: &str, vars: usize) -> String {
    render((|| {
        check_vars(vars)?;
        let alpha = parse_partition(partition)?;
        schur(&alpha, vars).map(|p| p.to_string()).map_err(|e| e.to_string())
    })())
}

/// Expansion of `s_α s_(1^k)` in odd Schur polynomials.
#[wasm_bindgen]
pub fn pieri_expansion(partition: &str, k: usize, vars: usize) -> String {
    render((|| {
        check_vars(vars)?;
        let alpha = parse_partition(partition)?;
        if alpha.len() > vars || k > vars {
            return Err(format!("need at most {vars} rows"));
        }
        let terms: Vec<String> = pieri_expected(&alpha, k, vars)
            .into_iter()
            .map(|(mu, s)| format!("{} s_({mu})", if s < 0 { "-" } else { "+" }))
            .collect();
        Ok(if terms.is_empty() { "0".into() } else { terms.join(" ") })
    })())
}

/// Balanced graded rank of the odd Grassmannian ring `OH_{a,N}`.
#[wasm_bindgen]
pub fn grassmannian_rank(a: usize, n: usize) -> String {
    render((|| {
        if a > n || n > MAX_N {
            return Err(format!("need a <= N <= {MAX_N}"));
        }
        let r = quotient_report(a, n, default_dmax(a, n)).map_err(|e| e.to_string())?;
        let balanced = r.graded_rank.shift(-((a * (n - a)) as i64));
        Ok(format!("{balanced}  (total {})", r.graded_rank.at_one()))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports() {
        assert_eq!(schur_polynomial("1", 2), "x1 - x2");
        assert!(schur_polynomial("1,x", 2).starts_with("error:"));
        assert!(schur_polynomial("1", 0).starts_with("error:"));
        let p = pieri_expansion("1", 1, 2);
        assert!(p.contains("s_(2)") && p.contains("s_(1,1)"));
        assert_eq!(grassmannian_rank(2, 4), "q^4 + q^2 + 2 + q^-2 + q^-4  (total 6)");
        assert!(grassmannian_rank(3, 2).starts_with("error:"));
    }
}
