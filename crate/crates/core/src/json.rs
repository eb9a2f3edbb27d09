//! JSON encodings.
//!
//! Rationals are strings (`"3"`, `"-5/2"`), complex scalars are two-string
//! arrays `[re, im]`, and elements are `{"algebra": "Os", "coeffs": [...]}`.
//! Complex algebras always encode coefficients as pairs; real algebras as
//! plain strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Algebra;
use crate::conjugator::{Branch, ConjugacyWitness};
use crate::element::Element;
use crate::scalar::{parse_rational, rational_to_string, Field, Scalar};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Real(String),
    Complex([String; 2]),
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        match s {
            Scalar::Rational(r) => ScalarRepr::Real(rational_to_string(r)),
            Scalar::Gauss(g) => ScalarRepr::Complex([rational_to_string(&g.re), rational_to_string(&g.im)]),
        }
    }
}

impl TryFrom<ScalarRepr> for Scalar {
    type Error = String;

    fn try_from(repr: ScalarRepr) -> Result<Self, Self::Error> {
        let parse = |s: &str| parse_rational(s).ok_or_else(|| format!("invalid rational `{s}`"));
        Ok(match repr {
            ScalarRepr::Real(s) => Scalar::Rational(parse(&s)?),
            ScalarRepr::Complex([re, im]) => Scalar::from_parts(parse(&re)?, parse(&im)?),
        })
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Scalar::try_from(ScalarRepr::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

impl Serialize for Algebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Algebra {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementRepr {
    algebra: Algebra,
    coeffs: Vec<Scalar>,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementRepr { algebra: self.algebra(), coeffs: self.coeffs().to_vec() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        if repr.algebra.field() == Field::Real {
            if let Some(k) = repr.coeffs.iter().position(|c| c.field() == Field::Complex) {
                return Err(D::Error::custom(format!("coefficient {k} of a {} element is complex", repr.algebra)));
            }
        }
        Element::new(repr.algebra, repr.coeffs).map_err(D::Error::custom)
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Branch {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Branch::from_name(&s).ok_or_else(|| D::Error::custom(format!("unknown branch `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Single,
    Double,
}

/// Wire form of a witness together with its verification outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: WitnessKind,
    pub p: Element,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Element>,
    pub branch: Branch,
    pub verified: bool,
}

impl WitnessRecord {
    pub fn new(w: &ConjugacyWitness, verified: bool) -> Self {
        let kind = if w.is_single() { WitnessKind::Single } else { WitnessKind::Double };
        Self { kind, p: w.p().clone(), q: w.q().cloned(), branch: w.branch(), verified }
    }

    /// Rebuilds the witness; `None` if `kind` and `q` disagree.
    pub fn witness(&self) -> Option<ConjugacyWitness> {
        match (self.kind, &self.q) {
            (WitnessKind::Single, None) => Some(ConjugacyWitness::Single { p: self.p.clone(), branch: self.branch }),
            (WitnessKind::Double, Some(q)) => {
                Some(ConjugacyWitness::Double { p: self.p.clone(), q: q.clone(), branch: self.branch })
            }
            _ => None,
        }
    }
}
