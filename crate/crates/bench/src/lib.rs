//! Fixed inputs shared by the criterion benchmarks.

use octoconj::{parse_element, Algebra, Element};

/// A dense pure element and a conjugate of it with equal norm.
pub fn dense_pair(algebra: Algebra) -> (Element, Element) {
    let text = if algebra.dim() == 4 { "e1-2e2+3e3" } else { "e1-2e2+3e3-e4+2e5+e6-e7" };
    let text = if algebra.is_split() { text.replace("e1", "e1'").replace("e3", "e3'").replace("e5", "e5'").replace("e7", "e7'") } else { text.to_owned() };
    let a = parse_element(&text, algebra).expect("fixture parses");
    let r = Element::basis(algebra, 2).add(&Element::one(algebra)).expect("same algebra");
    let b = r.sandwich(&a).expect("1 + e2 is invertible");
    (a, b)
}
