//! Solving the twisted commutation equation `p a = b p`.
//!
//! The solution space is computed exactly; whether it contains an invertible
//! element is decided by restricting the norm form to it. Over a field of
//! characteristic zero a quadratic form vanishes identically on a subspace
//! iff its Gram matrix there is zero.

use std::fmt;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A dense matrix over one scalar field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        Self { rows, cols, entries: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for k in 0..n {
            m.set(k, k, Scalar::one(field));
        }
        m
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self { rows: n, cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Reduced row-echelon form and the pivot columns, taking the first row
    /// with a nonzero entry in each column as the pivot.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(found) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, found);
            let inv = m.get(row, col).recip().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows).map(|r| self.row(r).iter().map(Scalar::to_string).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Basis of the null space of `m`, one vector per free column in increasing
/// order, with a 1 in its own free column. Empty when `m` has full column rank.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let field = m.entries.first().map_or(Field::Real, Scalar::field);
    let (reduced, pivots) = m.rref();
    (0..m.cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(field); m.cols];
            v[free] = Scalar::one(field);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced.get(r, free);
            }
            v
        })
        .collect()
}

/// Whether `vectors` and `others` span the same subspace.
pub fn same_span(vectors: &[Vec<Scalar>], others: &[Vec<Scalar>]) -> bool {
    let rank = |vs: Vec<Vec<Scalar>>| if vs.is_empty() { 0 } else { ExactMatrix::from_rows(vs).rank() };
    let r1 = rank(vectors.to_vec());
    let r2 = rank(others.to_vec());
    let joint = rank(vectors.iter().chain(others).cloned().collect());
    r1 == joint && r2 == joint
}

/// The matrix of `p ↦ p a - b p`: column `j` holds the coefficients of
/// `e_j a - b e_j`.
pub fn twisted_commutant_matrix(a: &Element, b: &Element) -> Result<ExactMatrix> {
    if a.algebra() != b.algebra() {
        return Err(Error::AlgebraMismatch { left: a.algebra(), right: b.algebra() });
    }
    let alg = a.algebra();
    let dim = alg.dim();
    let mut m = ExactMatrix::zeros(dim, dim, alg.field());
    for j in 0..dim {
        let e = Element::basis(alg, j);
        let col = e.mul(a)?.sub(&b.mul(&e)?)?;
        for (i, c) in col.coeffs().iter().enumerate() {
            m.set(i, j, c.clone());
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// An invertible `p` with `p a p^{-1} = b`.
    SingleExists(Element),
    /// Every solution of `p a = b p` has zero norm.
    NoSingleConjugator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantReport {
    pub matrix: ExactMatrix,
    pub nullspace_basis: Vec<Element>,
    /// `G[r][s] = (v_r, v_s)` over the null-space basis.
    pub norm_gram: ExactMatrix,
    pub verdict: Verdict,
}

impl CommutantReport {
    pub fn single_exists(&self) -> bool {
        matches!(self.verdict, Verdict::SingleExists(_))
    }

    /// Whether `x` solves `x a = b x`, tested by membership in the span.
    pub fn contains(&self, x: &Element) -> bool {
        let basis: Vec<Vec<Scalar>> = self.nullspace_basis.iter().map(|v| v.coeffs().to_vec()).collect();
        let mut extended = basis.clone();
        extended.push(x.coeffs().to_vec());
        same_span(&basis, &extended)
    }
}

/// Value of the quadratic form with Gram matrix `g` at `t`.
fn quadratic_form(g: &ExactMatrix, t: &[u8]) -> Scalar {
    let field = g.get(0, 0).field();
    let mut acc = Scalar::zero(field);
    for (r, &tr) in t.iter().enumerate() {
        for (s, &ts) in t.iter().enumerate() {
            let w = i64::from(tr) * i64::from(ts);
            if w != 0 {
                acc = acc + g.get(r, s) * &Scalar::from(w);
            }
        }
    }
    acc
}

/// Next tuple of `{0, 1, 2}^d` in lexicographic order.
fn advance(t: &mut [u8]) -> bool {
    for slot in t.iter_mut().rev() {
        if *slot < 2 {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

/// Solves `p a = b p` and decides whether an invertible solution exists.
///
/// When the norm form is not identically zero on the solution space, some
/// point of the parameter grid `{0, 1, 2}^d` has nonzero norm (a nonzero
/// polynomial of degree 2 in each variable cannot vanish on a grid with three
/// values per axis); the first such point in lexicographic order is returned.
pub fn single_conjugator_search(a: &Element, b: &Element) -> Result<CommutantReport> {
    let matrix = twisted_commutant_matrix(a, b)?;
    let alg = a.algebra();
    let nullspace_basis: Vec<Element> =
        nullspace(&matrix).into_iter().map(|v| Element::new(alg, v)).collect::<Result<_>>()?;
    let d = nullspace_basis.len();
    let mut norm_gram = ExactMatrix::zeros(d, d, alg.field());
    for r in 0..d {
        for s in r..d {
            let v = nullspace_basis[r].inner(&nullspace_basis[s])?;
            norm_gram.set(s, r, v.clone());
            norm_gram.set(r, s, v);
        }
    }

    let verdict = if norm_gram.is_zero() {
        Verdict::NoSingleConjugator
    } else {
        let mut t = vec![0u8; d];
        loop {
            if !advance(&mut t) {
                return Err(Error::Inconsistent("nonzero norm form vanished on the whole {0,1,2} grid".into()));
            }
            if !quadratic_form(&norm_gram, &t).is_zero() {
                break;
            }
        }
        let mut p = Element::zero(alg);
        for (v, &tr) in nullspace_basis.iter().zip(&t) {
            if tr != 0 {
                p = p.add(&v.scale(&Scalar::from(i64::from(tr)))?)?;
            }
        }
        if p.norm().is_zero() || p.sandwich(a)? != *b {
            return Err(Error::Inconsistent(format!("commutant solution {p} does not conjugate {a} to {b}")));
        }
        Verdict::SingleExists(p)
    };

    Ok(CommutantReport { matrix, nullspace_basis, norm_gram, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::notation::parse_element;

    fn ints(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect())
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        assert!(nullspace(&ExactMatrix::identity(4, Field::Real)).is_empty());
    }

    #[test]
    fn nullspace_of_zero_is_everything() {
        let basis = nullspace(&ExactMatrix::zeros(2, 2, Field::Real));
        assert_eq!(basis, vec![vec![Scalar::from(1), Scalar::from(0)], vec![Scalar::from(0), Scalar::from(1)]]);
    }

    #[test]
    fn nullspace_free_column_order() {
        // x + 2y - z = 0, y + z = 0  →  free column z; x = 3z, y = -z.
        let m = ints(&[&[1, 2, -1], &[0, 1, 1]]);
        assert_eq!(nullspace(&m), vec![vec![Scalar::from(3), Scalar::from(-1), Scalar::from(1)]]);
    }

    #[test]
    fn rref_complex() {
        let m = ExactMatrix::from_rows(vec![
            vec![Scalar::gauss(0, 1), Scalar::gauss(1, 0)],
            vec![Scalar::gauss(1, 0), Scalar::gauss(0, -1)],
        ]);
        // Second row is -i times the first.
        assert_eq!(m.rank(), 1);
        let basis = nullspace(&m);
        assert_eq!(basis, vec![vec![Scalar::gauss(0, 1), Scalar::gauss(1, 0)]]);
    }

    #[test]
    fn span_comparison() {
        let v = |xs: &[i64]| xs.iter().map(|&x| Scalar::from(x)).collect::<Vec<_>>();
        assert!(same_span(&[v(&[1, 0, 1]), v(&[0, 1, 0])], &[v(&[1, 1, 1]), v(&[1, -1, 1])]));
        assert!(!same_span(&[v(&[1, 0, 1])], &[v(&[1, 0, 0])]));
    }

    #[test]
    fn zero_pair_gives_zero_matrix() {
        let z = Element::zero(Algebra::O);
        assert!(twisted_commutant_matrix(&z, &z).unwrap().is_zero());
    }

    #[test]
    fn centralizer_of_e1() {
        let e1 = Element::basis(Algebra::H, 1);
        let m = twisted_commutant_matrix(&e1, &e1).unwrap();
        let basis: Vec<Vec<Scalar>> = nullspace(&m);
        let expected = vec![Element::one(Algebra::H).into_coeffs(), e1.clone().into_coeffs()];
        assert!(same_span(&basis, &expected));
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn quaternion_search_finds_conjugator() {
        let a = parse_element("e1", Algebra::H).unwrap();
        let b = parse_element("e2", Algebra::H).unwrap();
        let report = single_conjugator_search(&a, &b).unwrap();
        let Verdict::SingleExists(p) = &report.verdict else { panic!("expected a conjugator") };
        assert_eq!(p.sandwich(&a).unwrap(), b);
        for v in &report.nullspace_basis {
            assert_eq!(v.mul(&a).unwrap(), b.mul(v).unwrap());
        }
    }

    #[test]
    fn remark_split_instance_has_no_single_conjugator() {
        let a = parse_element("4e1'+5e2+3e3'-5e4+4e5'+3e7'", Algebra::Os).unwrap();
        let b = parse_element("3e2+4e6+5e7'", Algebra::Os).unwrap();
        let report = single_conjugator_search(&a, &b).unwrap();
        assert_eq!(report.nullspace_basis.len(), 2);
        assert!(report.norm_gram.is_zero());
        assert_eq!(report.verdict, Verdict::NoSingleConjugator);
    }

    #[test]
    fn grid_advance_covers_all_points() {
        let mut t = vec![0u8; 3];
        let mut count = 1;
        while advance(&mut t) {
            count += 1;
        }
        assert_eq!(count, 27);
        assert_eq!(t, vec![0, 0, 0]);
    }
}
