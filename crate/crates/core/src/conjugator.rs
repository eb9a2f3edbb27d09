//! Constructive conjugacy witnesses for pure imaginary elements.
//!
//! * [`negator`]: an invertible pure `p` with `p a p^{-1} = -a`.
//! * [`separator`]: for an orthogonal null pair `a, b`, an invertible pure `p`
//!   with `N(p a p^{-1} + b) ≠ 0`.
//! * [`conjugacy_witness`]: given pure nonzero `a, b` of equal norm, either a
//!   single `p` with `p a p^{-1} = b` or a pair `(p, q)` with
//!   `q (p a p^{-1}) q^{-1} = b`.
//! * [`collapse_quaternion`]: in the associative quaternion algebras a pair
//!   `(p, q)` collapses to the single conjugator `q p`.

use std::fmt;

use crate::algebra::Algebra;
use crate::commutant::{single_conjugator_search, Verdict};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which step of the construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `N(a + b) ≠ 0`: `p = a + b`.
    SumInvertible,
    /// Division algebra with `b = -a`: `p` is a negator of `a`.
    DivisionNegate,
    /// `N(a - b) ≠ 0`: `p = a - b` sends `a` to `-b`, then `q` negates `b`.
    DiffInvertible,
    /// `N(a ± b) = 0`: `p` is a separator and `q = p a p^{-1} + b`.
    NullPair,
    /// Quaternion pair `(p, q)` collapsed to `q p`.
    AssociativeCollapse,
    /// Single conjugator found by solving `p a = b p` directly.
    CommutantSearch,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::SumInvertible => "SumInvertible",
            Branch::DivisionNegate => "DivisionNegate",
            Branch::DiffInvertible => "DiffInvertible",
            Branch::NullPair => "NullPair",
            Branch::AssociativeCollapse => "AssociativeCollapse",
            Branch::CommutantSearch => "CommutantSearch",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            Branch::SumInvertible,
            Branch::DivisionNegate,
            Branch::DiffInvertible,
            Branch::NullPair,
            Branch::AssociativeCollapse,
            Branch::CommutantSearch,
        ]
        .into_iter()
        .find(|b| b.name() == s)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyWitness {
    Single { p: Element, branch: Branch },
    Double { p: Element, q: Element, branch: Branch },
}

impl ConjugacyWitness {
    pub fn branch(&self) -> Branch {
        match self {
            ConjugacyWitness::Single { branch, .. } | ConjugacyWitness::Double { branch, .. } => *branch,
        }
    }

    pub fn p(&self) -> &Element {
        match self {
            ConjugacyWitness::Single { p, .. } | ConjugacyWitness::Double { p, .. } => p,
        }
    }

    pub fn q(&self) -> Option<&Element> {
        match self {
            ConjugacyWitness::Single { .. } => None,
            ConjugacyWitness::Double { q, .. } => Some(q),
        }
    }

    pub fn is_single(&self) -> bool {
        matches!(self, ConjugacyWitness::Single { .. })
    }

    pub fn algebra(&self) -> Algebra {
        self.p().algebra()
    }

    /// `p a p^{-1}`, or `q (p a p^{-1}) q^{-1}` for a pair.
    pub fn apply(&self, a: &Element) -> Result<Element> {
        let once = self.p().sandwich(a)?;
        match self.q() {
            None => Ok(once),
            Some(q) => q.sandwich(&once),
        }
    }
}

/// How [`conjugacy_witness_with`] chooses a witness.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Follow the four-step construction.
    #[default]
    Ladder,
    /// Return a single conjugator whenever one exists, otherwise the ladder's
    /// witness.
    Minimal,
}

fn require_pure_nonzero(a: &Element) -> Result<()> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !a.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(())
}

/// Candidate `a_x e_u - a_y e_v`, written `(u, x, v, y)`.
type Candidate = (usize, usize, usize, usize);

const CANDIDATES_O: &[Candidate] = &[(1, 2, 2, 1), (2, 3, 3, 2), (4, 5, 5, 4), (6, 7, 7, 6)];
const CANDIDATES_OS: &[Candidate] = &[(2, 4, 4, 2), (4, 6, 6, 4), (1, 3, 3, 1), (5, 7, 7, 5)];
const CANDIDATES_OC: &[Candidate] =
    &[(1, 2, 2, 1), (2, 3, 3, 2), (3, 1, 1, 3), (3, 4, 4, 3), (4, 5, 5, 4), (5, 6, 6, 5), (6, 7, 7, 6)];
const CANDIDATES_H: &[Candidate] = &[(1, 2, 2, 1), (2, 3, 3, 2), (3, 1, 1, 3)];
const CANDIDATES_HS: &[Candidate] = &[(1, 3, 3, 1)];

fn candidate_list(algebra: Algebra) -> &'static [Candidate] {
    match algebra {
        Algebra::H | Algebra::Hc => CANDIDATES_H,
        Algebra::Hs => CANDIDATES_HS,
        Algebra::O => CANDIDATES_O,
        Algebra::Os => CANDIDATES_OS,
        Algebra::Oc => CANDIDATES_OC,
    }
}

/// The negator candidates for `a`, in scan order.
pub fn negator_candidates(a: &Element) -> Vec<Element> {
    let alg = a.algebra();
    let mut out: Vec<Element> = candidate_list(alg)
        .iter()
        .map(|&(u, x, v, y)| {
            let mut coeffs = Element::zero(alg).into_coeffs();
            coeffs[u] = a.coeff(x).clone();
            coeffs[v] = -a.coeff(y);
            Element::new(alg, coeffs).expect("candidate coefficients come from a")
        })
        .collect();
    if alg == Algebra::Hs {
        // Only reached when a1 = a3 = 0, i.e. a is a multiple of e2.
        out.push(Element::basis(alg, 1));
    }
    out
}

/// An invertible pure `p` with `p a = -a p`, hence `p a p^{-1} = -a`.
///
/// Scans a fixed candidate list and returns the first candidate of nonzero
/// norm.
pub fn negator(a: &Element) -> Result<Element> {
    require_pure_nonzero(a)?;
    let p = negator_candidates(a)
        .into_iter()
        .find(|p| !p.norm().is_zero())
        .ok_or_else(|| Error::Inconsistent(format!("no negator candidate is invertible for {a}")))?;
    let anti = p.mul(a)?.add(&a.mul(&p)?)?;
    if !anti.is_zero() || p.sandwich(a)? != -a {
        return Err(Error::Inconsistent(format!("{p} does not negate {a}")));
    }
    Ok(p)
}

/// Basis indices of positive norm in the split algebras.
fn positive_index(algebra: Algebra, k: usize) -> bool {
    !algebra.is_split() || !algebra.is_primed(k)
}

/// An invertible pure `p` with `N(p a p^{-1} + b) ≠ 0`.
///
/// Requires `a, b` pure and nonzero with `(a, b) = 0` and `N(a) + N(b) = 0`;
/// in the split algebras additionally `N(a) = N(b) = 0`. If some index has
/// `a_k b_k ≠ 0` the smallest such gives `p = e_k`; otherwise `p = e_k + e_l`
/// with `k` the smallest index where `a_k ≠ 0` and `l` the smallest where
/// `b_l ≠ 0` (restricted to positive-norm indices in the split algebras).
pub fn separator(a: &Element, b: &Element) -> Result<Element> {
    if a.algebra() != b.algebra() {
        return Err(Error::AlgebraMismatch { left: a.algebra(), right: b.algebra() });
    }
    let alg = a.algebra();
    let violation = |msg: &str| Err(Error::PreconditionViolation(msg.to_owned()));
    if alg.is_division() {
        return violation("separators exist only in the split and complex algebras");
    }
    for x in [a, b] {
        if x.is_zero() || !x.is_pure() {
            return violation("a and b must be pure and nonzero");
        }
    }
    if !a.inner(b)?.is_zero() {
        return violation("(a, b) must vanish");
    }
    let (na, nb) = (a.norm(), b.norm());
    if !(&na + &nb).is_zero() {
        return violation("N(a) + N(b) must vanish");
    }
    if alg.is_split() && !na.is_zero() {
        return violation("in a split algebra N(a) = N(b) = 0 is required");
    }

    let dim = alg.dim();
    let shared = (1..dim).find(|&k| !(a.coeff(k) * b.coeff(k)).is_zero());
    let p = match shared {
        Some(k) => Element::basis(alg, k),
        None => {
            let k = (1..dim).find(|&k| positive_index(alg, k) && !a.coeff(k).is_zero());
            let l = (1..dim).find(|&l| positive_index(alg, l) && !b.coeff(l).is_zero());
            match (k, l) {
                (Some(k), Some(l)) if k != l => Element::basis(alg, k).add(&Element::basis(alg, l))?,
                _ => return Err(Error::Inconsistent(format!("no separator indices for a = {a}, b = {b}"))),
            }
        }
    };
    if p.sandwich(a)?.add(b)?.norm().is_zero() {
        return Err(Error::Inconsistent(format!("separator {p} fails for a = {a}, b = {b}")));
    }
    Ok(p)
}

/// Conjugacy witness by the four-step construction.
pub fn conjugacy_witness(a: &Element, b: &Element) -> Result<ConjugacyWitness> {
    conjugacy_witness_with(a, b, Strategy::Ladder)
}

pub fn conjugacy_witness_with(a: &Element, b: &Element, strategy: Strategy) -> Result<ConjugacyWitness> {
    if a.algebra() != b.algebra() {
        return Err(Error::AlgebraMismatch { left: a.algebra(), right: b.algebra() });
    }
    require_pure_nonzero(a)?;
    require_pure_nonzero(b)?;
    let (na, nb) = (a.norm(), b.norm());
    if na != nb {
        return Err(Error::NormMismatch { left: na.to_string(), right: nb.to_string() });
    }

    if strategy == Strategy::Minimal {
        if let Verdict::SingleExists(p) = single_conjugator_search(a, b)?.verdict {
            return checked(a, b, ConjugacyWitness::Single { p, branch: Branch::CommutantSearch });
        }
    }

    let sum = a.add(b)?;
    if !sum.norm().is_zero() {
        return checked(a, b, ConjugacyWitness::Single { p: sum, branch: Branch::SumInvertible });
    }
    if a.algebra().is_division() {
        if *b != -a {
            return Err(Error::Inconsistent(format!("N(a + b) = 0 in a division algebra but b ≠ -a: a = {a}, b = {b}")));
        }
        let p = negator(a)?;
        return checked(a, b, ConjugacyWitness::Single { p, branch: Branch::DivisionNegate });
    }
    let diff = a.sub(b)?;
    if !diff.norm().is_zero() {
        let q = negator(b)?;
        return checked(a, b, ConjugacyWitness::Double { p: diff, q, branch: Branch::DiffInvertible });
    }
    let p = separator(a, b)?;
    let q = p.sandwich(a)?.add(b)?;
    checked(a, b, ConjugacyWitness::Double { p, q, branch: Branch::NullPair })
}

fn checked(a: &Element, b: &Element, w: ConjugacyWitness) -> Result<ConjugacyWitness> {
    let report = verify_witness(a, b, &w);
    match report.first_failure() {
        None => Ok(w),
        Some(check) => Err(Error::Inconsistent(format!("{} witness failed: {}", w.branch(), check))),
    }
}

/// Collapses a quaternion pair `(p, q)` to the single conjugator `q p`.
pub fn collapse_quaternion(w: ConjugacyWitness) -> Result<ConjugacyWitness> {
    let alg = w.algebra();
    if !alg.is_quaternion() {
        return Err(Error::NotQuaternion(alg));
    }
    match w {
        single @ ConjugacyWitness::Single { .. } => Ok(single),
        ConjugacyWitness::Double { p, q, .. } => Ok(ConjugacyWitness::Single { p: q.mul(&p)?, branch: Branch::AssociativeCollapse }),
    }
}

/// Identifies one checked equation of a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equation {
    SameAlgebra,
    PInvertible,
    QInvertible,
    PPure,
    QPure,
    ConjugatesToB,
}

impl Equation {
    pub fn id(self) -> &'static str {
        match self {
            Equation::SameAlgebra => "same-algebra",
            Equation::PInvertible => "p-invertible",
            Equation::QInvertible => "q-invertible",
            Equation::PPure => "p-pure",
            Equation::QPure => "q-pure",
            Equation::ConjugatesToB => "conjugates-to-b",
        }
    }

    fn failure(self) -> &'static str {
        match self {
            Equation::SameAlgebra => "a, b and the witness live in different algebras",
            Equation::PInvertible => "p not invertible",
            Equation::QInvertible => "q not invertible",
            Equation::PPure => "p not pure",
            Equation::QPure => "q not pure",
            Equation::ConjugatesToB => "witness does not conjugate a to b",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub equation: Equation,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "ok   {}", self.equation.id())?;
        } else {
            write!(f, "FAIL {}: {}", self.equation.id(), self.equation.failure())?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessReport {
    pub checks: Vec<Check>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn failed(&self, equation: Equation) -> bool {
        self.checks.iter().any(|c| c.equation == equation && !c.passed)
    }

    fn push(&mut self, equation: Equation, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { equation, passed, detail: detail.into() });
    }
}

fn nonzero_norm(x: &Element) -> (bool, String) {
    let n = x.norm();
    (!n.is_zero(), format!("N = {n}"))
}

/// Re-derives every claim a witness makes about `a` and `b`.
///
/// Singles must be invertible and conjugate `a` to `b`; pairs must also
/// consist of pure elements.
pub fn verify_witness(a: &Element, b: &Element, w: &ConjugacyWitness) -> WitnessReport {
    let mut report = WitnessReport::default();
    let alg = a.algebra();
    let same = b.algebra() == alg && w.p().algebra() == alg && w.q().is_none_or(|q| q.algebra() == alg);
    report.push(Equation::SameAlgebra, same, "");
    if !same {
        return report;
    }

    let (ok, detail) = nonzero_norm(w.p());
    report.push(Equation::PInvertible, ok, detail);
    if let Some(q) = w.q() {
        let (ok, detail) = nonzero_norm(q);
        report.push(Equation::QInvertible, ok, detail);
        report.push(Equation::PPure, w.p().is_pure(), "");
        report.push(Equation::QPure, q.is_pure(), "");
    }

    match w.apply(a) {
        Ok(image) => {
            let ok = image == *b;
            report.push(Equation::ConjugatesToB, ok, format!("image = {image}"));
        }
        Err(e) => report.push(Equation::ConjugatesToB, false, e.to_string()),
    }
    report
}

/// Norm of `p a p^{-1} + b`; the quantity a separator makes nonzero.
pub fn separation_norm(p: &Element, a: &Element, b: &Element) -> Result<Scalar> {
    Ok(p.sandwich(a)?.add(b)?.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_element;

    fn el(alg: Algebra, s: &str) -> Element {
        parse_element(s, alg).unwrap()
    }

    #[test]
    fn negator_first_candidate() {
        assert_eq!(negator(&el(Algebra::O, "e1")).unwrap(), el(Algebra::O, "-e2"));
        assert_eq!(negator(&el(Algebra::Os, "e2")).unwrap(), el(Algebra::Os, "-e4"));
        assert_eq!(negator(&el(Algebra::Os, "e1'")).unwrap(), el(Algebra::Os, "-e3'"));
    }

    #[test]
    fn negator_in_split_quaternions() {
        assert_eq!(negator(&el(Algebra::Hs, "e2")).unwrap(), el(Algebra::Hs, "e1'"));
        assert_eq!(negator(&el(Algebra::Hs, "e1'+e2")).unwrap(), el(Algebra::Hs, "-e3'"));
    }

    #[test]
    fn negator_rejects_bad_input() {
        assert_eq!(negator(&Element::zero(Algebra::O)), Err(Error::ZeroElement));
        assert_eq!(negator(&el(Algebra::O, "1+e1")), Err(Error::NotPure));
    }

    #[test]
    fn separator_disjoint_supports() {
        let a = el(Algebra::Oc, "e1+ie2");
        let b = el(Algebra::Oc, "e3+ie4");
        let p = separator(&a, &b).unwrap();
        assert_eq!(p, el(Algebra::Oc, "e1+e3"));
        assert_eq!(separation_norm(&p, &a, &b).unwrap(), Scalar::from(2));
    }

    #[test]
    fn separator_shared_index() {
        let a = el(Algebra::Oc, "e1+ie2");
        let b = el(Algebra::Oc, "ie1-e2");
        let p = separator(&a, &b).unwrap();
        assert_eq!(p, el(Algebra::Oc, "e1"));
        assert_eq!(separation_norm(&p, &a, &b).unwrap(), Scalar::gauss(0, 4));
    }

    #[test]
    fn separator_checks_orthogonality() {
        // (a, b) = 2i here.
        let a = el(Algebra::Oc, "e1+ie2");
        let b = el(Algebra::Oc, "ie1+e2");
        assert!(matches!(separator(&a, &b), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn separator_split_remark_pair() {
        let a = el(Algebra::Os, "4e1'+5e2+3e3'-5e4+4e5'+3e7'");
        let b = el(Algebra::Os, "3e2+4e6+5e7'");
        let p = separator(&a, &b).unwrap();
        assert_eq!(p, el(Algebra::Os, "e2"));
        assert_eq!(p.norm(), Scalar::from(1));
        assert!(!separation_norm(&p, &a, &b).unwrap().is_zero());
    }

    #[test]
    fn separator_split_requires_null_pair() {
        // Orthogonal with N(a) + N(b) = 0, but neither is null.
        let a = el(Algebra::Os, "e1'");
        let b = el(Algebra::Os, "e2");
        assert!(matches!(separator(&a, &b), Err(Error::PreconditionViolation(_))));
        assert!(matches!(separator(&el(Algebra::O, "e1"), &el(Algebra::O, "e2")), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn ladder_branches() {
        let w = conjugacy_witness(&el(Algebra::H, "e1"), &el(Algebra::H, "e2")).unwrap();
        assert_eq!(w, ConjugacyWitness::Single { p: el(Algebra::H, "e1+e2"), branch: Branch::SumInvertible });

        let w = conjugacy_witness(&el(Algebra::O, "e1"), &el(Algebra::O, "-e1")).unwrap();
        assert_eq!(w, ConjugacyWitness::Single { p: el(Algebra::O, "-e2"), branch: Branch::DivisionNegate });

        let w = conjugacy_witness(&el(Algebra::Os, "e2"), &el(Algebra::Os, "-e2")).unwrap();
        assert_eq!(w.branch(), Branch::DiffInvertible);

        let a = el(Algebra::Os, "4e1'+5e2+3e3'-5e4+4e5'+3e7'");
        let b = el(Algebra::Os, "3e2+4e6+5e7'");
        let w = conjugacy_witness(&a, &b).unwrap();
        assert_eq!(w.branch(), Branch::NullPair);
        assert_eq!(w.q().unwrap(), &el(Algebra::Os, "e2").sandwich(&a).unwrap().add(&b).unwrap());
        assert!(verify_witness(&a, &b, &w).passed());
    }

    #[test]
    fn ladder_rejects_bad_input() {
        let (e1, e2) = (el(Algebra::H, "e1"), el(Algebra::H, "2e2"));
        assert!(matches!(conjugacy_witness(&e1, &e2), Err(Error::NormMismatch { .. })));
        assert_eq!(conjugacy_witness(&e1, &Element::zero(Algebra::H)), Err(Error::ZeroElement));
        assert_eq!(conjugacy_witness(&el(Algebra::H, "1"), &e1), Err(Error::NotPure));
        assert!(matches!(conjugacy_witness(&e1, &el(Algebra::O, "e1")), Err(Error::AlgebraMismatch { .. })));
    }

    #[test]
    fn minimal_strategy_prefers_single() {
        let a = el(Algebra::Os, "e2");
        let w = conjugacy_witness_with(&a, &-&a, Strategy::Minimal).unwrap();
        assert!(w.is_single());
        assert_eq!(w.branch(), Branch::CommutantSearch);

        let a = el(Algebra::Os, "4e1'+5e2+3e3'-5e4+4e5'+3e7'");
        let b = el(Algebra::Os, "3e2+4e6+5e7'");
        let w = conjugacy_witness_with(&a, &b, Strategy::Minimal).unwrap();
        assert_eq!(w.branch(), Branch::NullPair);
    }

    #[test]
    fn collapse() {
        let a = el(Algebra::Hc, "e1+ie2");
        let b = el(Algebra::Hc, "ie1-e2");
        let w = conjugacy_witness(&a, &b).unwrap();
        assert!(!w.is_single());
        let single = collapse_quaternion(w.clone()).unwrap();
        assert_eq!(single.branch(), Branch::AssociativeCollapse);
        assert_eq!(single.p(), &w.q().unwrap().mul(w.p()).unwrap());
        assert_eq!(single.apply(&a).unwrap(), b);

        let s = ConjugacyWitness::Single { p: el(Algebra::H, "e1+e2"), branch: Branch::SumInvertible };
        assert_eq!(collapse_quaternion(s.clone()).unwrap(), s);

        let d = ConjugacyWitness::Double { p: el(Algebra::Os, "e2"), q: el(Algebra::Os, "e4"), branch: Branch::NullPair };
        assert_eq!(collapse_quaternion(d), Err(Error::NotQuaternion(Algebra::Os)));
    }

    #[test]
    fn verification_reports_failures() {
        let (a, b) = (el(Algebra::H, "e1"), el(Algebra::H, "e2"));
        let good = conjugacy_witness(&a, &b).unwrap();
        assert!(verify_witness(&a, &b, &good).passed());

        let tampered = ConjugacyWitness::Single { p: good.p().add(&Element::one(Algebra::H)).unwrap(), branch: good.branch() };
        let report = verify_witness(&a, &b, &tampered);
        assert_eq!(report.first_failure().unwrap().equation, Equation::ConjugatesToB);

        let null = el(Algebra::Os, "e2+e5'");
        let d = ConjugacyWitness::Double { p: el(Algebra::Os, "e2"), q: null, branch: Branch::NullPair };
        let report = verify_witness(&el(Algebra::Os, "e2"), &el(Algebra::Os, "e2"), &d);
        assert!(report.failed(Equation::QInvertible));
        assert!(report.first_failure().unwrap().to_string().contains("q not invertible"));
    }
}
