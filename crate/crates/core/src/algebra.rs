//! The six composition algebras and their structure constants.
//!
//! Quaternion tables are written out by hand. The Cayley tables are produced
//! by doubling `K ⊕ K e4` with
//!
//! ```text
//! (m1 + n1 e4)(m2 + n2 e4) = (m1 m2 - conj(n2) n1) + (n1 conj(m2) + n2 m1) e4
//! ```
//!
//! and the basis `e5 = e1 e4`, `e6 = -e2 e4`, `e7 = e3 e4`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    /// Hamilton quaternions.
    H,
    /// Split quaternions, basis `1, e1', e2, e3'`.
    Hs,
    /// Complexified quaternions.
    Hc,
    /// Division octonions (Cayley algebra).
    O,
    /// Split octonions, basis `1, e1', e2, e3', e4, e5', e6, e7'`.
    Os,
    /// Complexified octonions.
    Oc,
}

impl Algebra {
    pub const ALL: [Algebra; 6] = [Algebra::H, Algebra::Hs, Algebra::Hc, Algebra::O, Algebra::Os, Algebra::Oc];

    pub fn dim(self) -> usize {
        if self.is_quaternion() {
            4
        } else {
            8
        }
    }

    pub fn field(self) -> Field {
        match self {
            Algebra::Hc | Algebra::Oc => Field::Complex,
            _ => Field::Real,
        }
    }

    pub fn is_quaternion(self) -> bool {
        matches!(self, Algebra::H | Algebra::Hs | Algebra::Hc)
    }

    pub fn is_split(self) -> bool {
        matches!(self, Algebra::Hs | Algebra::Os)
    }

    /// H and O: the norm is positive definite, so every nonzero element is
    /// invertible.
    pub fn is_division(self) -> bool {
        matches!(self, Algebra::H | Algebra::O)
    }

    /// Whether basis index `k` carries a prime in display labels.
    pub fn is_primed(self, k: usize) -> bool {
        match self {
            Algebra::Hs => matches!(k, 1 | 3),
            Algebra::Os => matches!(k, 1 | 3 | 5 | 7),
            _ => false,
        }
    }

    /// Display label of basis element `k` (`"1"` for the identity).
    pub fn label(self, k: usize) -> String {
        match k {
            0 => "1".to_owned(),
            _ if self.is_primed(k) => format!("e{k}'"),
            _ => format!("e{k}"),
        }
    }

    /// The Cayley algebra containing this quaternion algebra (identity on
    /// Cayley algebras).
    pub fn cayley(self) -> Algebra {
        match self {
            Algebra::H => Algebra::O,
            Algebra::Hs => Algebra::Os,
            Algebra::Hc => Algebra::Oc,
            other => other,
        }
    }

    /// The quaternion subalgebra spanned by `1, e1, e2, e3`.
    pub fn quaternion(self) -> Algebra {
        match self {
            Algebra::O => Algebra::H,
            Algebra::Os => Algebra::Hs,
            Algebra::Oc => Algebra::Hc,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::H => "H",
            Algebra::Hs => "Hs",
            Algebra::Hc => "Hc",
            Algebra::O => "O",
            Algebra::Os => "Os",
            Algebra::Oc => "Oc",
        }
    }

    pub fn table(self) -> &'static StructureTable {
        static H: OnceLock<StructureTable> = OnceLock::new();
        static HS: OnceLock<StructureTable> = OnceLock::new();
        static O: OnceLock<StructureTable> = OnceLock::new();
        static OS: OnceLock<StructureTable> = OnceLock::new();
        let cell = match self {
            Algebra::H | Algebra::Hc => &H,
            Algebra::Hs => &HS,
            Algebra::O | Algebra::Oc => &O,
            Algebra::Os => &OS,
        };
        cell.get_or_init(|| build_table(self).expect("structure table is self-consistent"))
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Algebra::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algebra `{s}` (expected one of H, Hs, Hc, O, Os, Oc)"))
    }
}

/// `e_i e_j = sign · e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unit {
    pub index: usize,
    pub sign: i8,
}

impl Unit {
    pub const fn new(index: usize, sign: i8) -> Self {
        Self { index, sign }
    }
}

/// Products of basis units, `dim × dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    entries: Vec<Unit>,
}

impl StructureTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Unit {
        self.entries[i * self.dim + j]
    }

    fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Result<Unit>) -> Result<Self> {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j)?);
            }
        }
        Ok(Self { dim, entries })
    }
}

const fn u(index: usize, sign: i8) -> Unit {
    Unit::new(index, sign)
}

// Row i, column j holds e_i e_j.
const HAMILTON: [[Unit; 4]; 4] = [
    [u(0, 1), u(1, 1), u(2, 1), u(3, 1)],
    [u(1, 1), u(0, -1), u(3, 1), u(2, -1)],
    [u(2, 1), u(3, -1), u(0, -1), u(1, 1)],
    [u(3, 1), u(2, 1), u(1, -1), u(0, -1)],
];

// e1'^2 = e3'^2 = 1, e2^2 = -1, e1'e2 = e3', e2e3' = e1', e3'e1' = -e2.
const SPLIT: [[Unit; 4]; 4] = [
    [u(0, 1), u(1, 1), u(2, 1), u(3, 1)],
    [u(1, 1), u(0, 1), u(3, 1), u(2, 1)],
    [u(2, 1), u(3, -1), u(0, -1), u(1, 1)],
    [u(3, 1), u(2, -1), u(1, -1), u(0, 1)],
];

/// Sign relating `e_{4+j}` to the doubling half: `e_{4+j} = s_j (e_j e4)`.
const DOUBLED_SIGN: [i64; 4] = [1, 1, -1, 1];

type Quat = [i64; 4];

fn quat_mul(t: &[[Unit; 4]; 4], x: &Quat, y: &Quat) -> Quat {
    let mut out = [0; 4];
    for i in 0..4 {
        for j in 0..4 {
            let unit = t[i][j];
            out[unit.index] += i64::from(unit.sign) * x[i] * y[j];
        }
    }
    out
}

fn quat_conj(x: &Quat) -> Quat {
    [x[0], -x[1], -x[2], -x[3]]
}

fn quat_add(x: &Quat, y: &Quat) -> Quat {
    std::array::from_fn(|k| x[k] + y[k])
}

fn quat_sub(x: &Quat, y: &Quat) -> Quat {
    std::array::from_fn(|k| x[k] - y[k])
}

/// Basis element `e_k` of the doubled algebra as `(m, n)` with `e_k = m + n e4`.
fn split_basis(k: usize) -> (Quat, Quat) {
    let mut m = [0; 4];
    let mut n = [0; 4];
    if k < 4 {
        m[k] = 1;
    } else {
        n[k - 4] = DOUBLED_SIGN[k - 4];
    }
    (m, n)
}

fn doubled_product(t: &[[Unit; 4]; 4], i: usize, j: usize) -> Result<Unit> {
    let (m1, n1) = split_basis(i);
    let (m2, n2) = split_basis(j);
    let m = quat_sub(&quat_mul(t, &m1, &m2), &quat_mul(t, &quat_conj(&n2), &n1));
    let n = quat_add(&quat_mul(t, &n1, &quat_conj(&m2)), &quat_mul(t, &n2, &m1));
    let coeffs: [i64; 8] = std::array::from_fn(|k| if k < 4 { m[k] } else { n[k - 4] * DOUBLED_SIGN[k - 4] });
    let mut support = coeffs.iter().enumerate().filter(|(_, c)| **c != 0);
    match (support.next(), support.next()) {
        (Some((index, &c)), None) if c == 1 || c == -1 => Ok(Unit::new(index, c as i8)),
        _ => Err(Error::Inconsistent(format!("e{i} e{j} is not a signed basis unit: {coeffs:?}"))),
    }
}

/// Builds the structure table of `algebra`.
///
/// Complexified algebras share the table of their real form. Fails with
/// [`Error::Inconsistent`] if a doubled product is not a signed basis unit or
/// the derived basis relations do not hold.
pub fn build_table(algebra: Algebra) -> Result<StructureTable> {
    let quat = if algebra.is_split() { &SPLIT } else { &HAMILTON };
    if algebra.is_quaternion() {
        return StructureTable::from_fn(4, |i, j| Ok(quat[i][j]));
    }
    let table = StructureTable::from_fn(8, |i, j| doubled_product(quat, i, j))?;
    let expect = |i: usize, j: usize, want: Unit| {
        let got = table.get(i, j);
        if got == want {
            Ok(())
        } else {
            Err(Error::Inconsistent(format!("{algebra}: e{i} e{j} = {got:?}, expected {want:?}")))
        }
    };
    // Doubling must embed the quaternion table and reproduce the derived basis.
    for (i, row) in quat.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            expect(i, j, want)?;
        }
    }
    expect(1, 4, u(5, 1))?;
    expect(2, 4, u(6, -1))?;
    expect(3, 4, u(7, 1))?;
    for i in 0..8 {
        expect(0, i, u(i, 1))?;
        expect(i, 0, u(i, 1))?;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prod(alg: Algebra, i: usize, j: usize) -> (usize, i8) {
        let unit = alg.table().get(i, j);
        (unit.index, unit.sign)
    }

    #[test]
    fn hamilton_relations() {
        assert_eq!(prod(Algebra::H, 1, 2), (3, 1));
        assert_eq!(prod(Algebra::H, 2, 1), (3, -1));
        assert_eq!(prod(Algebra::H, 2, 3), (1, 1));
        assert_eq!(prod(Algebra::H, 3, 1), (2, 1));
    }

    #[test]
    fn split_relations() {
        assert_eq!(prod(Algebra::Hs, 3, 1), (2, -1));
        assert_eq!(prod(Algebra::Hs, 1, 3), (2, 1));
        assert_eq!(prod(Algebra::Hs, 1, 1), (0, 1));
    }

    #[test]
    fn doubled_split_square() {
        // e5' = e1' e4 squares to +1.
        assert_eq!(prod(Algebra::Os, 5, 5), (0, 1));
        assert_eq!(prod(Algebra::Os, 7, 7), (0, 1));
        assert_eq!(prod(Algebra::Os, 6, 6), (0, -1));
        assert_eq!(prod(Algebra::Os, 4, 4), (0, -1));
    }

    #[test]
    fn octonion_units_anticommute_and_square_to_minus_one() {
        let t = Algebra::O.table();
        for i in 1..8 {
            assert_eq!(t.get(i, i), u(0, -1));
            for j in 1..8 {
                if i != j {
                    let (a, b) = (t.get(i, j), t.get(j, i));
                    assert_eq!(a.index, b.index);
                    assert_eq!(a.sign, -b.sign);
                }
            }
        }
    }

    #[test]
    fn complex_forms_share_tables() {
        assert!(std::ptr::eq(Algebra::H.table(), Algebra::Hc.table()));
        assert!(std::ptr::eq(Algebra::O.table(), Algebra::Oc.table()));
    }

    #[test]
    fn labels() {
        assert_eq!(Algebra::Os.label(5), "e5'");
        assert_eq!(Algebra::Os.label(6), "e6");
        assert_eq!(Algebra::O.label(5), "e5");
        assert_eq!(Algebra::Hs.label(0), "1");
        assert_eq!("Oc".parse::<Algebra>().unwrap(), Algebra::Oc);
        assert!("X".parse::<Algebra>().is_err());
    }
}
