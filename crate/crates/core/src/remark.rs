//! Two pairs of null elements with equal norm that are conjugate by a pair of
//! elements but by no single element.
//!
//! Golden data: one instance in the split octonions `Os` and its image in the
//! complex octonions `Oc`, each with a published two-parameter solution of
//! `p a = b p`. Every solution has zero norm.

use std::fmt;

use crate::algebra::Algebra;
use crate::commutant::{same_span, single_conjugator_search, Verdict};
use crate::conjugator::{conjugacy_witness, verify_witness};
use crate::element::Element;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: &'static str,
    pub a: Element,
    pub b: Element,
    /// Published basis of the solutions of `p a = b p`.
    pub solution_basis: [Element; 2],
}

fn os(coeffs: &[i64]) -> Element {
    Element::from_ints(Algebra::Os, coeffs).expect("8 integer coefficients")
}

fn oc(coeffs: &[(i64, i64)]) -> Element {
    Element::from_gauss(Algebra::Oc, coeffs).expect("8 Gaussian coefficients")
}

/// `a = 4e1'+5e2+3e3'-5e4+4e5'+3e7'`, `b = 3e2+4e6+5e7'` in `Os`.
pub fn split_instance() -> Instance {
    Instance {
        name: "split octonions",
        a: os(&[0, 4, 5, 3, -5, 4, 0, 3]),
        b: os(&[0, 0, 3, 0, 0, 0, 4, 5]),
        solution_basis: [os(&[0, 104, 40, 3, -165, 132, 0, 24]), os(&[0, -46, -8, 3, 75, -60, 6, 0])],
    }
}

/// `a = 4ie1+5e2+3ie3-5e4+4ie5+3ie7`, `b = 3e2+4e6+5ie7` in `Oc`.
pub fn complex_instance() -> Instance {
    let z = (0, 0);
    Instance {
        name: "complex octonions",
        a: oc(&[z, (0, 4), (5, 0), (0, 3), (-5, 0), (0, 4), z, (0, 3)]),
        b: oc(&[z, z, (3, 0), z, z, z, (4, 0), (0, 5)]),
        solution_basis: [
            oc(&[z, (104, 0), (0, -40), (3, 0), (0, 165), (132, 0), z, (24, 0)]),
            oc(&[z, (0, -46), (-8, 0), (0, 3), (75, 0), (0, -60), (6, 0), z]),
        ],
    }
}

pub fn instances() -> [Instance; 2] {
    [split_instance(), complex_instance()]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RemarkCheck {
    /// `N(a) = N(b) = 0`.
    NormsVanish,
    /// Each published basis vector `v` satisfies `v a = b v`.
    PublishedSolutionsValid,
    /// The computed null space equals the span of the published basis.
    SpanMatches,
    /// The norm form vanishes on the null space.
    NoSingleConjugator,
    /// The construction still yields a verified pair `(p, q)`.
    DoubleWitnessVerified,
}

impl RemarkCheck {
    pub const ALL: [RemarkCheck; 5] = [
        RemarkCheck::NormsVanish,
        RemarkCheck::PublishedSolutionsValid,
        RemarkCheck::SpanMatches,
        RemarkCheck::NoSingleConjugator,
        RemarkCheck::DoubleWitnessVerified,
    ];

    pub fn id(self) -> &'static str {
        match self {
            RemarkCheck::NormsVanish => "norms-vanish",
            RemarkCheck::PublishedSolutionsValid => "published-solutions-valid",
            RemarkCheck::SpanMatches => "span-matches",
            RemarkCheck::NoSingleConjugator => "no-single-conjugator",
            RemarkCheck::DoubleWitnessVerified => "double-witness-verified",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: RemarkCheck,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkReport {
    pub instance: &'static str,
    pub algebra: Algebra,
    pub nullspace_dim: usize,
    pub verdict: Option<Verdict>,
    pub outcomes: Vec<CheckOutcome>,
}

impl RemarkReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, check: RemarkCheck) -> &CheckOutcome {
        self.outcomes.iter().find(|o| o.check == check).expect("every check is recorded")
    }

    pub fn failures(&self) -> impl Iterator<Item = RemarkCheck> + '_ {
        self.outcomes.iter().filter(|o| !o.passed).map(|o| o.check)
    }
}

impl fmt::Display for RemarkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({}): null space dimension {}", self.instance, self.algebra, self.nullspace_dim)?;
        match &self.verdict {
            Some(Verdict::NoSingleConjugator) => writeln!(f, "  verdict: NoSingleConjugator")?,
            Some(Verdict::SingleExists(p)) => writeln!(f, "  verdict: SingleExists({p})")?,
            None => writeln!(f, "  verdict: unavailable")?,
        }
        for o in &self.outcomes {
            let mark = if o.passed { "PASS" } else { "FAIL" };
            write!(f, "  {mark} {}", o.check.id())?;
            if !o.detail.is_empty() {
                write!(f, ": {}", o.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs all five checks on one instance. Failures are recorded, never raised.
pub fn verify_instance(inst: &Instance) -> RemarkReport {
    let mut outcomes = Vec::new();
    let mut record = |check, passed, detail: String| outcomes.push(CheckOutcome { check, passed, detail });
    let (a, b) = (&inst.a, &inst.b);

    let (na, nb) = (a.norm(), b.norm());
    record(RemarkCheck::NormsVanish, na.is_zero() && nb.is_zero(), format!("N(a) = {na}, N(b) = {nb}"));

    let bad: Vec<usize> = inst
        .solution_basis
        .iter()
        .enumerate()
        .filter(|(_, v)| match (v.mul(a), b.mul(v)) {
            (Ok(l), Ok(r)) => l != r,
            _ => true,
        })
        .map(|(k, _)| k)
        .collect();
    let detail = if bad.is_empty() { String::new() } else { format!("v a ≠ b v for published vector(s) {bad:?}") };
    record(RemarkCheck::PublishedSolutionsValid, bad.is_empty(), detail);

    let search = single_conjugator_search(a, b);
    let (nullspace_dim, verdict) = match &search {
        Ok(report) => {
            let computed: Vec<Vec<Scalar>> = report.nullspace_basis.iter().map(|v| v.coeffs().to_vec()).collect();
            let published: Vec<Vec<Scalar>> = inst.solution_basis.iter().map(|v| v.coeffs().to_vec()).collect();
            let same = same_span(&computed, &published);
            record(RemarkCheck::SpanMatches, same, format!("computed dimension {}", computed.len()));
            let none = report.verdict == Verdict::NoSingleConjugator;
            let detail = if report.norm_gram.is_zero() { "norm Gram matrix is zero".into() } else { "norm Gram matrix is nonzero".into() };
            record(RemarkCheck::NoSingleConjugator, none, detail);
            (computed.len(), Some(report.verdict.clone()))
        }
        Err(e) => {
            record(RemarkCheck::SpanMatches, false, e.to_string());
            record(RemarkCheck::NoSingleConjugator, false, e.to_string());
            (0, None)
        }
    };

    match conjugacy_witness(a, b) {
        Ok(w) => {
            let report = verify_witness(a, b, &w);
            let ok = !w.is_single() && report.passed();
            record(RemarkCheck::DoubleWitnessVerified, ok, format!("{} witness", w.branch()));
        }
        Err(e) => record(RemarkCheck::DoubleWitnessVerified, false, e.to_string()),
    }

    RemarkReport { instance: inst.name, algebra: a.algebra(), nullspace_dim, verdict, outcomes }
}

/// Checks both golden instances.
pub fn verify_remark() -> Vec<RemarkReport> {
    instances().iter().map(verify_instance).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_instances_pass() {
        for report in verify_remark() {
            assert!(report.passed(), "{report}");
            assert_eq!(report.nullspace_dim, 2);
            assert_eq!(report.verdict, Some(Verdict::NoSingleConjugator));
        }
    }

    #[test]
    fn scaling_b_breaks_the_span() {
        for mut inst in instances() {
            inst.b = inst.b.scale(&Scalar::from(2)).unwrap();
            let report = verify_instance(&inst);
            assert!(report.outcome(RemarkCheck::NormsVanish).passed);
            assert!(!report.outcome(RemarkCheck::PublishedSolutionsValid).passed);
            assert!(!report.outcome(RemarkCheck::SpanMatches).passed);
            assert!(report.failures().any(|c| c == RemarkCheck::SpanMatches));
        }
    }
}
