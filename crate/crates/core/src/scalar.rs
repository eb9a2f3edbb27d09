//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Scalar field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals, standing in for the real numbers.
    Real,
    /// The Gaussian rationals `x + iy`, standing in for the complex numbers.
    Complex,
}

/// A Gaussian rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }
}

/// An exact field element.
///
/// Equality compares values, so `Rational(x)` equals `Gauss(x + 0i)`. Binary
/// operations on mixed variants promote to `Gauss`; operations on two
/// `Rational`s stay rational. Rationals are always held in lowest terms with a
/// positive denominator (`num_rational` normalizes on every operation).
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Gauss(GaussRational),
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        match field {
            Field::Real => Scalar::Rational(BigRational::zero()),
            Field::Complex => Scalar::Gauss(GaussRational::new(BigRational::zero(), BigRational::zero())),
        }
    }

    pub fn one(field: Field) -> Self {
        Scalar::from_int(1).coerce(field).expect("1 is real")
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(rat(n))
    }

    /// `num/den` as a rational scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn gauss(re: i64, im: i64) -> Self {
        Scalar::Gauss(GaussRational::new(rat(re), rat(im)))
    }

    pub fn from_parts(re: BigRational, im: BigRational) -> Self {
        Scalar::Gauss(GaussRational::new(re, im))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::gauss(0, 1)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Real,
            Scalar::Gauss(_) => Field::Complex,
        }
    }

    pub fn re(&self) -> &BigRational {
        match self {
            Scalar::Rational(r) => r,
            Scalar::Gauss(g) => &g.re,
        }
    }

    /// Imaginary part; zero for rationals.
    pub fn im(&self) -> BigRational {
        match self {
            Scalar::Rational(_) => BigRational::zero(),
            Scalar::Gauss(g) => g.im.clone(),
        }
    }

    fn parts(&self) -> (BigRational, BigRational) {
        (self.re().clone(), self.im())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gauss(g) => g.re.is_zero() && g.im.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.re().is_one() && self.im().is_zero()
    }

    /// True when the imaginary part is zero (regardless of variant).
    pub fn is_real_valued(&self) -> bool {
        self.im().is_zero()
    }

    /// Re-express in `field`. Fails only when a non-real value is moved into
    /// the rationals.
    pub fn coerce(self, field: Field) -> Option<Self> {
        match (self, field) {
            (s @ Scalar::Rational(_), Field::Real) => Some(s),
            (s @ Scalar::Gauss(_), Field::Complex) => Some(s),
            (Scalar::Rational(r), Field::Complex) => Some(Scalar::Gauss(GaussRational::new(r, BigRational::zero()))),
            (Scalar::Gauss(g), Field::Real) => g.im.is_zero().then_some(Scalar::Rational(g.re)),
        }
    }

    /// Complex conjugation; the identity on rationals.
    pub fn conj(&self) -> Self {
        match self {
            Scalar::Rational(_) => self.clone(),
            Scalar::Gauss(g) => Scalar::Gauss(GaussRational::new(g.re.clone(), -&g.im)),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x / y),
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                let den = &c * &c + &d * &d;
                let re = (&a * &c + &b * &d) / &den;
                let im = (&b * &c - &a * &d) / &den;
                Scalar::from_parts(re, im)
            }
        })
    }

    pub fn recip(&self) -> Result<Scalar> {
        Scalar::one(self.field()).checked_div(self)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x == y,
            _ => self.re() == other.re() && self.im() == other.im(),
        }
    }
}

impl Eq for Scalar {}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |x, y| match (x, y) {
    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
    _ => Scalar::from_parts(x.re() + y.re(), x.im() + y.im()),
});

binop!(Sub, sub, |x, y| match (x, y) {
    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
    _ => Scalar::from_parts(x.re() - y.re(), x.im() - y.im()),
});

binop!(Mul, mul, |x, y| match (x, y) {
    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
    (Scalar::Rational(a), Scalar::Gauss(g)) | (Scalar::Gauss(g), Scalar::Rational(a)) => {
        Scalar::from_parts(a * &g.re, a * &g.im)
    }
    (Scalar::Gauss(g), Scalar::Gauss(h)) => {
        Scalar::from_parts(&g.re * &h.re - &g.im * &h.im, &g.re * &h.im + &g.im * &h.re)
    }
});

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Gauss(g) => Scalar::from_parts(-&g.re, -&g.im),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = self.re();
        let im = self.im();
        if im.is_zero() {
            return fmt_rational(re, f);
        }
        if !re.is_zero() {
            fmt_rational(re, f)?;
            f.write_str(if im.is_negative() { "-" } else { "+" })?;
        } else if im.is_negative() {
            f.write_str("-")?;
        }
        let mag = im.abs();
        if !mag.is_one() {
            fmt_rational(&mag, f)?;
        }
        f.write_str("i")
    }
}

/// Parses `num` or `num/den` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = match den {
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return None;
            }
            BigInt::from_str(d).ok()?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Canonical string for a rational: `n` for integers, `n/d` otherwise.
pub fn rational_to_string(r: &BigRational) -> String {
    Scalar::Rational(r.clone()).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_addition() {
        assert_eq!(Scalar::ratio(1, 2) + Scalar::ratio(1, 3), Scalar::ratio(5, 6));
    }

    #[test]
    fn gaussian_product() {
        assert_eq!(Scalar::gauss(1, 2) * Scalar::gauss(3, -1), Scalar::gauss(5, 5));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Scalar::gauss(0, 4).conj(), Scalar::gauss(0, -4));
        assert_eq!(Scalar::ratio(-3, 7).conj(), Scalar::ratio(-3, 7));
    }

    #[test]
    fn reduced_with_positive_denominator() {
        let Scalar::Rational(r) = Scalar::ratio(6, -4) else { unreachable!() };
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn division() {
        assert_eq!(Scalar::gauss(5, 5).checked_div(&Scalar::gauss(3, -1)).unwrap(), Scalar::gauss(1, 2));
        assert_eq!(Scalar::from(3).checked_div(&Scalar::from(6)).unwrap(), Scalar::ratio(1, 2));
        assert_eq!(Scalar::from(1).checked_div(&Scalar::zero(Field::Complex)), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_variants_compare_by_value() {
        assert_eq!(Scalar::from(2), Scalar::gauss(2, 0));
        assert_ne!(Scalar::from(2), Scalar::gauss(2, 1));
        assert_eq!((Scalar::from(2) + Scalar::gauss(0, 1)).field(), Field::Complex);
        assert!(Scalar::gauss(1, 0).coerce(Field::Real).is_some());
        assert!(Scalar::i().coerce(Field::Real).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::gauss(5, 5).to_string(), "5+5i");
        assert_eq!(Scalar::gauss(0, -4).to_string(), "-4i");
        assert_eq!(Scalar::gauss(0, 1).to_string(), "i");
        assert_eq!(Scalar::gauss(2, -1).to_string(), "2-i");
        assert_eq!(Scalar::ratio(-3, 6).to_string(), "-1/2");
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-6/4"), Some(BigRational::new((-3).into(), 2.into())));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(rational_to_string(&BigRational::new(4.into(), 2.into())), "2");
    }
}
