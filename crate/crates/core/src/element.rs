//! Elements and exact element arithmetic.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// An element `c0 + c1 e1 + … + c_{dim-1} e_{dim-1}` of one of the six algebras.
///
/// The coefficient vector always has length `algebra.dim()` and every
/// coefficient lives in `algebra.field()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    algebra: Algebra,
    coeffs: Vec<Scalar>,
}

/// Membership in the distinguished subsets `K_0`, `K_0*`, `K^×`, `K_0^×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub pure: bool,
    pub nonzero: bool,
    pub invertible: bool,
}

impl Membership {
    /// `K_0`: pure imaginary elements.
    pub fn in_pure(&self) -> bool {
        self.pure
    }

    /// `K_0*`: nonzero pure imaginary elements.
    pub fn in_pure_nonzero(&self) -> bool {
        self.pure && self.nonzero
    }

    /// `K^×`: elements of nonzero norm.
    pub fn in_invertible(&self) -> bool {
        self.invertible
    }

    /// `K_0^×`: pure imaginary elements of nonzero norm.
    pub fn in_pure_invertible(&self) -> bool {
        self.pure && self.invertible
    }
}

impl Element {
    pub fn new(algebra: Algebra, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), got: coeffs.len() });
        }
        let field = algebra.field();
        let coeffs = coeffs
            .into_iter()
            .enumerate()
            .map(|(index, c)| c.coerce(field).ok_or(Error::FieldMismatch { algebra, index }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { algebra, coeffs })
    }

    /// Integer coefficients; convenient for tests and golden data.
    pub fn from_ints(algebra: Algebra, coeffs: &[i64]) -> Result<Self> {
        Self::new(algebra, coeffs.iter().map(|&c| Scalar::from(c)).collect())
    }

    /// Gaussian-integer coefficients given as `(re, im)` pairs.
    pub fn from_gauss(algebra: Algebra, coeffs: &[(i64, i64)]) -> Result<Self> {
        Self::new(algebra, coeffs.iter().map(|&(re, im)| Scalar::gauss(re, im)).collect())
    }

    pub fn zero(algebra: Algebra) -> Self {
        Self { algebra, coeffs: vec![Scalar::zero(algebra.field()); algebra.dim()] }
    }

    pub fn one(algebra: Algebra) -> Self {
        Self::basis(algebra, 0)
    }

    /// The basis unit `e_k` (`e_0 = 1`). Panics if `k >= dim`.
    pub fn basis(algebra: Algebra, k: usize) -> Self {
        assert!(k < algebra.dim(), "basis index {k} out of range for {algebra}");
        let mut e = Self::zero(algebra);
        e.coeffs[k] = Scalar::one(algebra.field());
        e
    }

    /// `s · 1`.
    pub fn scalar(algebra: Algebra, s: Scalar) -> Result<Self> {
        let mut e = Self::zero(algebra);
        e.coeffs[0] = s.coerce(algebra.field()).ok_or(Error::FieldMismatch { algebra, index: 0 })?;
        Ok(e)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// Coefficient of `1`.
    pub fn real_part(&self) -> &Scalar {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Zero coefficient on `1`, equivalently `conj(a) = -a`.
    pub fn is_pure(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// Indices with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| k)
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch { left: self.algebra, right: other.algebra })
        }
    }

    fn zip_with(&self, other: &Element, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Element> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| f(x, y)).collect();
        Ok(Element { algebra: self.algebra, coeffs })
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.zip_with(other, |x, y| x - y)
    }

    /// `s · self`. Fails if `s` lies outside the algebra's scalar field.
    pub fn scale(&self, s: &Scalar) -> Result<Element> {
        let s = s.clone().coerce(self.algebra.field()).ok_or(Error::FieldMismatch { algebra: self.algebra, index: 0 })?;
        Ok(Element { algebra: self.algebra, coeffs: self.coeffs.iter().map(|c| c * &s).collect() })
    }

    /// The algebra product, extended bilinearly from the structure table.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let table = self.algebra.table();
        let x = Scaled::new(&self.coeffs);
        let y = Scaled::new(&other.coeffs);
        let dim = self.algebra.dim();
        let mut re = vec![BigInt::zero(); dim];
        let mut im = vec![BigInt::zero(); dim];
        let complex = x.im.is_some() || y.im.is_some();
        for i in x.support() {
            for j in y.support() {
                let unit = table.get(i, j);
                let (pr, pi) = x.product(i, &y, j);
                if unit.sign > 0 {
                    re[unit.index] += pr;
                    if let Some(pi) = pi {
                        im[unit.index] += pi;
                    }
                } else {
                    re[unit.index] -= pr;
                    if let Some(pi) = pi {
                        im[unit.index] -= pi;
                    }
                }
            }
        }
        let den = &x.den * &y.den;
        Ok(Element { algebra: self.algebra, coeffs: Scaled::finish(re, complex.then_some(im), &den) })
    }

    /// Algebra conjugation: keeps the real part and negates every imaginary
    /// coefficient. Scalars are not complex-conjugated.
    pub fn conjugate(&self) -> Element {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k == 0 { c.clone() } else { -c })
            .collect();
        Element { algebra: self.algebra, coeffs }
    }

    /// `(a, b) = (a conj(b) + b conj(a)) / 2`, read off the real part.
    ///
    /// Fails with [`Error::Inconsistent`] if the defining expression has a
    /// nonzero imaginary part.
    pub fn inner(&self, other: &Element) -> Result<Scalar> {
        let sum = self.mul(&other.conjugate())?.add(&other.mul(&self.conjugate())?)?;
        if !sum.is_pure_scalar() {
            return Err(Error::Inconsistent(format!("a conj(b) + b conj(a) is not a scalar: {sum}")));
        }
        sum.coeffs[0].checked_div(&Scalar::from(2))
    }

    fn is_pure_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Scalar::is_zero)
    }

    /// `N(a) = (a, a) = a conj(a)`.
    ///
    /// Evaluated as `Σ N(e_k) c_k²`, the diagonal form of `(a, a)` in the
    /// orthogonal basis; `N(e_k)` is read off the structure table.
    pub fn norm(&self) -> Scalar {
        let table = self.algebra.table();
        let x = Scaled::new(&self.coeffs);
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for k in x.support() {
            // e_k conj(e_k) = -e_k e_k for k > 0.
            let unit_norm = if k == 0 { 1 } else { -table.get(k, k).sign };
            let (pr, pi) = x.product(k, &x, k);
            if unit_norm > 0 {
                re += pr;
                im += pi.unwrap_or_default();
            } else {
                re -= pr;
                im -= pi.unwrap_or_default();
            }
        }
        let den = &x.den * &x.den;
        let complex = x.im.is_some();
        Scaled::finish(vec![re], complex.then(|| vec![im]), &den).pop().expect("one value")
    }

    /// `conj(a) / N(a)`.
    pub fn inverse(&self) -> Result<Element> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        self.conjugate().scale(&n.recip()?)
    }

    /// `p a p^{-1}` with `self = p`, computed as `(p a) p^{-1}`.
    ///
    /// Fails with [`Error::Inconsistent`] if `(p a) p^{-1} ≠ p (a p^{-1})`,
    /// which cannot happen in an alternative algebra.
    pub fn sandwich(&self, a: &Element) -> Result<Element> {
        self.check_same(a)?;
        let inv = self.inverse()?;
        let left = self.mul(a)?.mul(&inv)?;
        let right = self.mul(&a.mul(&inv)?)?;
        if left != right {
            return Err(Error::Inconsistent(format!("(pa)p^-1 = {left} but p(ap^-1) = {right}")));
        }
        Ok(left)
    }

    pub fn classify(&self) -> Membership {
        Membership { pure: self.is_pure(), nonzero: !self.is_zero(), invertible: !self.norm().is_zero() }
    }

    /// Image in the Cayley algebra containing this quaternion algebra.
    pub fn embed(&self) -> Element {
        let algebra = self.algebra.cayley();
        let mut out = Element::zero(algebra);
        out.coeffs[..self.coeffs.len()].clone_from_slice(&self.coeffs);
        out
    }

    /// Inverse of [`Element::embed`]: the quaternion element with the same
    /// coefficients, if the support lies in `1, e1, e2, e3`.
    pub fn restrict(&self) -> Option<Element> {
        if self.algebra.is_quaternion() {
            return Some(self.clone());
        }
        if self.coeffs[4..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Element { algebra: self.algebra.quaternion(), coeffs: self.coeffs[..4].to_vec() })
    }
}

/// Coefficients brought over a common denominator: `c_k = (re_k + i im_k) / den`.
struct Scaled {
    re: Vec<BigInt>,
    im: Option<Vec<BigInt>>,
    den: BigInt,
}

impl Scaled {
    fn new(coeffs: &[Scalar]) -> Self {
        let complex = coeffs.iter().any(|c| c.field() == Field::Complex);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.re().denom());
            if let Scalar::Gauss(g) = c {
                den = den.lcm(g.im.denom());
            }
        }
        let lift = |r: &BigRational| r.numer() * (&den / r.denom());
        let re = coeffs.iter().map(|c| lift(c.re())).collect();
        let im = complex.then(|| coeffs.iter().map(|c| lift(&c.im())).collect());
        Scaled { re, im, den }
    }

    fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.re.len()).filter(|&k| !self.re[k].is_zero() || self.im.as_ref().is_some_and(|im| !im[k].is_zero()))
    }

    /// Numerator of `c_i d_j` as `(re, im)`; `im` is `None` when both sides are real.
    fn product(&self, i: usize, other: &Scaled, j: usize) -> (BigInt, Option<BigInt>) {
        let (a, c) = (&self.re[i], &other.re[j]);
        match (&self.im, &other.im) {
            (None, None) => (a * c, None),
            (Some(x), None) => (a * c, Some(&x[i] * c)),
            (None, Some(y)) => (a * c, Some(a * &y[j])),
            (Some(x), Some(y)) => {
                let (b, d) = (&x[i], &y[j]);
                (a * c - b * d, Some(a * d + b * c))
            }
        }
    }

    fn finish(re: Vec<BigInt>, im: Option<Vec<BigInt>>, den: &BigInt) -> Vec<Scalar> {
        let ratio = |n: BigInt| BigRational::new(n, den.clone());
        match im {
            None => re.into_iter().map(|n| Scalar::Rational(ratio(n))).collect(),
            Some(im) => re.into_iter().zip(im).map(|(r, i)| Scalar::from_parts(ratio(r), ratio(i))).collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { algebra: self.algebra, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_element(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(alg: Algebra, k: usize) -> Element {
        Element::basis(alg, k)
    }

    #[test]
    fn derived_basis_products() {
        assert_eq!(e(Algebra::O, 3).mul(&e(Algebra::O, 4)).unwrap(), e(Algebra::O, 7));
        assert_eq!(e(Algebra::O, 2).mul(&e(Algebra::O, 4)).unwrap(), -e(Algebra::O, 6));
    }

    #[test]
    fn octonions_are_not_associative() {
        let (e1, e2, e4) = (e(Algebra::O, 1), e(Algebra::O, 2), e(Algebra::O, 4));
        let left = e1.mul(&e2).unwrap().mul(&e4).unwrap();
        let right = e1.mul(&e2.mul(&e4).unwrap()).unwrap();
        assert_eq!(left, e(Algebra::O, 7));
        assert_eq!(right, -e(Algebra::O, 7));
    }

    #[test]
    fn conjugate_negates_imaginary_part() {
        let a = Element::from_ints(Algebra::H, &[1, 1, 0, 0]).unwrap();
        assert_eq!(a.conjugate(), Element::from_ints(Algebra::H, &[1, -1, 0, 0]).unwrap());
        let b = Element::from_ints(Algebra::O, &[0, 0, 0, 0, 1, 0, 0, 1]).unwrap();
        assert_eq!(b.conjugate(), -&b);
    }

    #[test]
    fn inner_products() {
        assert_eq!(e(Algebra::H, 1).inner(&e(Algebra::H, 1)).unwrap(), Scalar::from(1));
        assert_eq!(e(Algebra::Hs, 1).inner(&e(Algebra::Hs, 1)).unwrap(), Scalar::from(-1));
        assert_eq!(e(Algebra::H, 1).inner(&e(Algebra::H, 2)).unwrap(), Scalar::from(0));
        assert!(matches!(e(Algebra::H, 1).inner(&e(Algebra::O, 1)), Err(Error::AlgebraMismatch { .. })));
    }

    #[test]
    fn norms() {
        let a = Element::from_ints(Algebra::Os, &[0, 4, 5, 3, -5, 4, 0, 3]).unwrap();
        assert!(a.norm().is_zero());
        let b = Element::from_gauss(Algebra::Oc, &[(0, 0), (0, 0), (3, 0), (0, 0), (0, 0), (0, 0), (4, 0), (0, 5)]).unwrap();
        assert!(b.norm().is_zero());
        let c = Element::from_ints(Algebra::H, &[0, 1, 1, 1]).unwrap();
        assert_eq!(c.norm(), Scalar::from(3));
    }

    #[test]
    fn inverses() {
        assert_eq!(e(Algebra::H, 2).inverse().unwrap(), -e(Algebra::H, 2));
        assert_eq!(e(Algebra::Hs, 1).inverse().unwrap(), e(Algebra::Hs, 1));
        let null = e(Algebra::Os, 2).add(&e(Algebra::Os, 5)).unwrap();
        assert_eq!(null.inverse(), Err(Error::NotInvertible));
        let x = Element::from_ints(Algebra::O, &[1, 2, 0, -1, 3, 0, 1, 1]).unwrap();
        let one = Element::one(Algebra::O);
        assert_eq!(x.mul(&x.inverse().unwrap()).unwrap(), one);
        assert_eq!(x.inverse().unwrap().mul(&x).unwrap(), one);
    }

    #[test]
    fn sandwiches() {
        assert_eq!(e(Algebra::H, 2).sandwich(&e(Algebra::H, 1)).unwrap(), -e(Algebra::H, 1));
        let a = Element::from_ints(Algebra::O, &[0, 1, -2, 0, 3, 0, 0, 1]).unwrap();
        let two_a = a.scale(&Scalar::from(2)).unwrap();
        assert_eq!(two_a.sandwich(&a).unwrap(), a);
        let p = e(Algebra::H, 1).add(&e(Algebra::H, 2)).unwrap();
        assert_eq!(p.sandwich(&e(Algebra::H, 1)).unwrap(), e(Algebra::H, 2));
        let null = e(Algebra::Os, 2).add(&e(Algebra::Os, 5)).unwrap();
        assert_eq!(null.sandwich(&e(Algebra::Os, 2)), Err(Error::NotInvertible));
    }

    #[test]
    fn classification() {
        let null = e(Algebra::Os, 2).add(&e(Algebra::Os, 5)).unwrap();
        assert_eq!(null.classify(), Membership { pure: true, nonzero: true, invertible: false });
        assert_eq!(Element::zero(Algebra::H).classify(), Membership { pure: true, nonzero: false, invertible: false });
        let x = Element::from_ints(Algebra::H, &[1, 1, 0, 0]).unwrap();
        assert_eq!(x.classify(), Membership { pure: false, nonzero: true, invertible: true });
        assert!(null.classify().in_pure_nonzero());
        assert!(!null.classify().in_pure_invertible());
    }

    #[test]
    fn construction_checks_shape_and_field() {
        assert_eq!(
            Element::from_ints(Algebra::H, &[1, 2, 3]),
            Err(Error::DimensionMismatch { expected: 4, got: 3 })
        );
        assert_eq!(
            Element::new(Algebra::H, vec![Scalar::from(0), Scalar::i(), Scalar::from(0), Scalar::from(0)]),
            Err(Error::FieldMismatch { algebra: Algebra::H, index: 1 })
        );
        let c = Element::from_ints(Algebra::Hc, &[1, 0, 0, 0]).unwrap();
        assert!(c.coeffs().iter().all(|s| matches!(s, Scalar::Gauss(_))));
    }

    #[test]
    fn embedding_is_multiplicative() {
        for alg in [Algebra::H, Algebra::Hs, Algebra::Hc] {
            for i in 0..4 {
                for j in 0..4 {
                    let prod = e(alg, i).mul(&e(alg, j)).unwrap();
                    assert_eq!(e(alg, i).embed().mul(&e(alg, j).embed()).unwrap(), prod.embed());
                    assert_eq!(prod.embed().restrict(), Some(prod));
                }
            }
        }
        assert_eq!(e(Algebra::O, 4).restrict(), None);
    }
}
