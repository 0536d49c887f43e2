//! Report assembly and rendering.
//!
//! The machine format (`--json`) is schema-stable: the top-level keys are
//! always `input`, `primes`, `big_height`, `alpha`, `alpha_hat`, `chi_star`,
//! `chudnovsky_bound`, `results`. Rationals are serialized as exact `"p/q"`
//! strings, never decimals. Human output may append a decimal approximation
//! in parentheses; that is display-only.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use waldschmidt::decomposition::Decomposition;
use waldschmidt::waldschmidt::WaldschmidtReport;
use waldschmidt::{BigRational, Monomial};

/// Exact `"p/q"` rendering, including `"/1"` for integers.
pub fn rat_str(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Display-only decimal approximation.
pub fn approx(value: &BigRational) -> String {
    use waldschmidt::BigInt;
    let scale = BigInt::from(1_000_000u64);
    let scaled = (value * BigRational::from_integer(scale)).round();
    let as_float: f64 = scaled.numer().to_string().parse::<f64>().unwrap_or(f64::NAN) / 1e6;
    format!("{as_float:.6}")
}

fn rat_human(value: &BigRational) -> String {
    format!("{} (~{})", rat_str(value), approx(value))
}

/// One full invocation report.
#[derive(Debug, Serialize)]
pub struct Report {
    pub input: String,
    pub primes: Vec<Vec<String>>,
    pub big_height: usize,
    pub alpha: u32,
    pub alpha_hat: String,
    pub chi_star: Option<String>,
    pub chudnovsky_bound: String,
    pub results: Vec<Value>,
    #[serde(skip)]
    pub human_lines: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(
        input: String,
        decomposition: &Decomposition,
        base: &WaldschmidtReport,
    ) -> Report {
        let ctx = decomposition.ideal().context();
        let primes = decomposition
            .primes()
            .iter()
            .map(|p| p.variables().iter().map(|&v| ctx.name(v).to_string()).collect())
            .collect();
        Report {
            input,
            primes,
            big_height: base.big_height,
            alpha: base.alpha,
            alpha_hat: rat_str(&base.alpha_hat),
            chi_star: base.chi_star.as_ref().map(rat_str),
            chudnovsky_bound: rat_str(&base.chudnovsky_bound),
            results: Vec::new(),
            human_lines: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push_result(&mut self, value: Value) {
        self.results.push(value);
    }

    pub fn push_line(&mut self, line: String) {
        self.human_lines.push(line);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_human(&self, base: &WaldschmidtReport, decomposition: &Decomposition) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", self.input);
        let ideal = decomposition.ideal();
        let gens: Vec<String> = ideal.generators().iter().map(Monomial::to_string).collect();
        let _ = writeln!(out, "generators ({}): {}", gens.len(), gens.join(", "));
        let prime_strs: Vec<String> = decomposition
            .primes()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let _ = writeln!(out, "primes ({}): {}", prime_strs.len(), prime_strs.join(" "));
        let _ = writeln!(out, "big height: {}", self.big_height);
        let _ = writeln!(out, "alpha: {}", self.alpha);
        let _ = writeln!(out, "alpha-hat: {}", rat_human(&base.alpha_hat));
        match &base.chi_star {
            Some(v) => {
                let _ = writeln!(out, "chi-star: {}", rat_human(v));
            }
            None => {
                let _ = writeln!(out, "chi-star: (none)");
            }
        }
        let _ = writeln!(out, "chudnovsky bound: {}", rat_human(&base.chudnovsky_bound));
        for line in &self.human_lines {
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out, "elapsed: {:?}", self.elapsed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use waldschmidt::ratio;

    #[test]
    fn rationals_are_exact_strings() {
        assert_eq!(rat_str(&ratio(5, 3)), "5/3");
        assert_eq!(rat_str(&ratio(2, 1)), "2/1");
        assert_eq!(rat_str(&ratio(1, 1)), "1/1");
    }

    #[test]
    fn approximation_is_six_decimals() {
        assert_eq!(approx(&ratio(5, 3)), "1.666667");
        assert_eq!(approx(&ratio(2, 1)), "2.000000");
    }
}
