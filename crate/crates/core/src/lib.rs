//! Exact arithmetic in the six quaternion and Cayley composition algebras
//! (`H`, `Hs`, `Hc`, `O`, `Os`, `Oc`) and constructive conjugacy of pure
//! imaginary elements with equal norm.

pub mod algebra;
pub mod commutant;
pub mod conjugator;
pub mod element;
mod error;
pub mod json;
pub mod notation;
pub mod remark;
pub mod sample;
pub mod scalar;
pub mod selftest;

pub use algebra::{build_table, Algebra, StructureTable, Unit};
pub use commutant::{nullspace, single_conjugator_search, twisted_commutant_matrix, CommutantReport, ExactMatrix, Verdict};
pub use conjugator::{
    collapse_quaternion, conjugacy_witness, conjugacy_witness_with, negator, separator, verify_witness, Branch,
    ConjugacyWitness, Strategy, WitnessReport,
};
pub use element::{Element, Membership};
pub use error::{Error, Result};
pub use notation::{format_element, parse_element, ParseError};
pub use scalar::{Field, GaussRational, Scalar};
