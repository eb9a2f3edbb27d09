//! Randomized property suite, deterministic per seed.

use std::fmt;

use crate::algebra::Algebra;
use crate::commutant::{single_conjugator_search, Verdict};
use crate::conjugator::{collapse_quaternion, conjugacy_witness, negator, negator_candidates, verify_witness};
use crate::element::Element;
use crate::error::Result;
use crate::notation::{format_element, parse_element};
use crate::sample::Sampler;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub property: &'static str,
    pub algebra: Algebra,
    pub samples: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{mark} {:<22} {:<3} {:>5} samples", self.property, self.algebra.name(), self.samples)?;
        if let Some(msg) = &self.first_failure {
            write!(f, "  first failure: {msg}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub seed: u64,
    pub results: Vec<PropertyResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        let failed = self.results.iter().filter(|r| !r.passed()).count();
        write!(f, "seed {}: {} properties, {} failed", self.seed, self.results.len(), failed)
    }
}

struct Tally {
    result: PropertyResult,
}

impl Tally {
    fn new(property: &'static str, algebra: Algebra) -> Self {
        Self { result: PropertyResult { property, algebra, samples: 0, failures: 0, first_failure: None } }
    }

    /// Records one sample; `Ok(None)` passes, `Ok(Some(msg))` or `Err` fails.
    fn record(&mut self, outcome: Result<Option<String>>) {
        self.result.samples += 1;
        let msg = match outcome {
            Ok(None) => return,
            Ok(Some(msg)) => msg,
            Err(e) => e.to_string(),
        };
        self.result.failures += 1;
        self.result.first_failure.get_or_insert(msg);
    }
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(if ok { None } else { Some(msg()) })
}

fn composition(a: &Element, b: &Element) -> Result<Option<String>> {
    let lhs = a.mul(b)?.norm();
    let rhs = &a.norm() * &b.norm();
    expect(lhs == rhs, || format!("N(ab) ≠ N(a)N(b) for a = {a}, b = {b}"))
}

fn anti_automorphism(a: &Element, b: &Element) -> Result<Option<String>> {
    let lhs = a.mul(b)?.conjugate();
    let rhs = b.conjugate().mul(&a.conjugate())?;
    expect(lhs == rhs, || format!("conj(ab) ≠ conj(b)conj(a) for a = {a}, b = {b}"))
}

fn norm_realization(a: &Element) -> Result<Option<String>> {
    let n = Element::scalar(a.algebra(), a.norm())?;
    let ok = a.mul(&a.conjugate())? == n && a.conjugate().mul(a)? == n;
    expect(ok, || format!("a conj(a) ≠ N(a) for a = {a}"))
}

fn pure_square(a: &Element) -> Result<Option<String>> {
    let ok = a.mul(a)? == -Element::scalar(a.algebra(), a.norm())?;
    expect(ok, || format!("a² ≠ -N(a) for pure a = {a}"))
}

fn alternativity(a: &Element, b: &Element) -> Result<Option<String>> {
    let left = a.mul(a)?.mul(b)? == a.mul(&a.mul(b)?)?;
    let right = a.mul(b)?.mul(b)? == a.mul(&b.mul(b)?)?;
    expect(left && right, || format!("alternative laws fail for a = {a}, b = {b}"))
}

fn associativity(a: &Element, b: &Element, c: &Element) -> Result<Option<String>> {
    let ok = a.mul(b)?.mul(c)? == a.mul(&b.mul(c)?)?;
    expect(ok, || format!("(ab)c ≠ a(bc) for a = {a}, b = {b}, c = {c}"))
}

fn negates(a: &Element) -> Result<Option<String>> {
    let p = negator(a)?;
    let ok = p.is_pure() && !p.norm().is_zero() && p.mul(a)? == -a.mul(&p)? && p.sandwich(a)? == -a;
    expect(ok, || format!("negator {p} fails for a = {a}"))
}

fn negates_at(a: &Element, position: usize) -> Result<Option<String>> {
    if let Some(msg) = negates(a)? {
        return Ok(Some(msg));
    }
    let found = negator_candidates(a).iter().position(|p| !p.norm().is_zero());
    expect(found == Some(position), || format!("a = {a}: winning candidate {found:?}, expected {position}"))
}

fn round_trip(a: &Element, b: &Element) -> Result<Option<String>> {
    let mut w = conjugacy_witness(a, b)?;
    if a.algebra().is_quaternion() {
        w = collapse_quaternion(w)?;
        if !w.is_single() {
            return Ok(Some(format!("quaternion witness did not collapse for a = {a}, b = {b}")));
        }
    }
    let report = verify_witness(a, b, &w);
    expect(report.passed(), || format!("{} witness fails for a = {a}, b = {b}", w.branch()))
}

fn oracle(a: &Element, b: &Element) -> Result<Option<String>> {
    let report = single_conjugator_search(a, b)?;
    let Verdict::SingleExists(p) = &report.verdict else {
        return Ok(Some(format!("no single conjugator for a = {a}, b = {b}")));
    };
    if p.sandwich(a)? != *b {
        return Ok(Some(format!("oracle conjugator {p} fails")));
    }
    let w = collapse_quaternion(conjugacy_witness(a, b)?)?;
    expect(report.contains(w.p()), || format!("witness {} outside the commutant", w.p()))
}

fn notation(a: &Element) -> Result<Option<String>> {
    let text = format_element(a);
    let back = parse_element(&text, a.algebra())?;
    expect(back == *a && format_element(&back) == text, || format!("round trip fails for {text}"))
}

/// Runs every property `samples` times per algebra.
///
/// Algebras are processed in [`Algebra::ALL`] order from one sampler, so the
/// whole report is a function of `(samples, seed)`.
pub fn run(samples: usize, seed: u64) -> SelftestReport {
    let mut s = Sampler::new(seed);
    let mut results = Vec::new();
    for alg in Algebra::ALL {
        let mut comp = Tally::new("composition", alg);
        let mut anti = Tally::new("conjugation", alg);
        let mut real = Tally::new("norm-realization", alg);
        let mut square = Tally::new("pure-square", alg);
        let mut assoc = Tally::new(if alg.is_quaternion() { "associativity" } else { "alternativity" }, alg);
        let mut neg = Tally::new("negator", alg);
        let mut conj = Tally::new("conjugacy-round-trip", alg);
        let mut orc = Tally::new("oracle", alg);
        let mut text = Tally::new("notation-round-trip", alg);

        for _ in 0..samples {
            let (a, b) = (s.element(alg), s.element(alg));
            comp.record(composition(&a, &b));
            anti.record(anti_automorphism(&a, &b));
            real.record(norm_realization(&a));
            if alg.is_quaternion() {
                let c = s.element(alg);
                assoc.record(associativity(&a, &b, &c));
            } else {
                assoc.record(alternativity(&a, &b));
            }
            text.record(notation(&a));

            let p = s.pure(alg);
            square.record(pure_square(&p));
            neg.record(negates(&p));

            let (x, y) = s.conjugate_pair(alg);
            conj.record(round_trip(&x, &y));
            conj.record(round_trip(&x, &-&x));
            if let Some((n, m)) = s.null_pair(alg) {
                conj.record(round_trip(&n, &m));
                neg.record(negates(&n));
            }
            if alg.is_quaternion() {
                orc.record(oracle(&x, &y));
            }
        }
        for (a, pos) in s.negator_adversarial(alg) {
            neg.record(negates_at(&a, pos));
        }

        results.extend([comp, anti, real, square, assoc, neg, conj, text].map(|t| t.result));
        if alg.is_quaternion() {
            results.push(orc.result);
        }
    }
    SelftestReport { seed, results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_reproducible() {
        let first = run(5, 42);
        assert!(first.passed(), "{first}");
        assert_eq!(first, run(5, 42));
        assert_eq!(first.to_string(), run(5, 42).to_string());
    }
}
