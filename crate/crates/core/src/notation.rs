//! Textual element notation.
//!
//! ```text
//! element  := ['-'] term (('+' | '-') term)*
//! term     := scalar | scalar basis | basis
//! scalar   := rational | rational 'i' | 'i' | '(' ['-'] rational ('+' | '-') [rational] 'i' ')'
//! rational := integer ['/' positive-integer]
//! basis    := 'e' digit ['\'']
//! ```
//!
//! Whitespace is ignored. A prime is required exactly on the indices the
//! algebra labels as primed (`e1'`, `e3'` in `Hs`; `e1'`, `e3'`, `e5'`, `e7'`
//! in `Os`). Repeated labels accumulate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::scalar::{rational_to_string, Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("at column {pos}: {found} must be written {expected} in {algebra}")]
    PrimeMismatch { pos: usize, found: String, expected: String, algebra: Algebra },
    #[error("at column {pos}: imaginary scalar in real algebra {algebra}")]
    ImaginaryScalarInRealAlgebra { pos: usize, algebra: Algebra },
    #[error("at column {pos}: basis index {index} out of range for {algebra}")]
    IndexOutOfRange { pos: usize, index: usize, algebra: Algebra },
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
    algebra: Algebra,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.at += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn require_complex(&self, pos: usize) -> Result<(), ParseError> {
        match self.algebra.field() {
            Field::Complex => Ok(()),
            Field::Real => Err(ParseError::ImaginaryScalarInRealAlgebra { pos, algebra: self.algebra }),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.at += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let Some(num) = self.digits() else {
            return self.syntax("expected a number");
        };
        let num: BigInt = num.parse().expect("digits");
        if !self.eat('/') {
            return Ok(BigRational::from_integer(num));
        }
        let pos = self.pos();
        let Some(den) = self.digits() else {
            return self.syntax("expected a denominator");
        };
        let den: BigInt = den.parse().expect("digits");
        if den.is_zero() {
            return Err(ParseError::Syntax { pos, msg: "zero denominator".into() });
        }
        Ok(BigRational::new(num, den))
    }

    fn scalar(&mut self) -> Result<Scalar, ParseError> {
        let start = self.pos();
        match self.peek() {
            Some('i') => {
                self.require_complex(start)?;
                self.bump();
                Ok(Scalar::i())
            }
            Some('(') => {
                self.require_complex(start)?;
                self.bump();
                let neg = self.eat('-');
                let mut re = self.rational()?;
                if neg {
                    re = -re;
                }
                let im_neg = match self.bump() {
                    Some('+') => false,
                    Some('-') => true,
                    _ => {
                        self.at -= 1;
                        return self.syntax("expected '+' or '-' inside parenthesized scalar");
                    }
                };
                let mut im = if self.peek() == Some('i') { BigRational::one() } else { self.rational()? };
                if !self.eat('i') {
                    return self.syntax("expected 'i'");
                }
                if !self.eat(')') {
                    return self.syntax("expected ')'");
                }
                if im_neg {
                    im = -im;
                }
                Ok(Scalar::from_parts(re, im))
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                if self.peek() == Some('i') {
                    self.require_complex(self.pos())?;
                    self.bump();
                    Ok(Scalar::from_parts(BigRational::zero(), r))
                } else {
                    Ok(Scalar::Rational(r))
                }
            }
            _ => self.syntax("expected a term"),
        }
    }

    fn basis(&mut self) -> Result<usize, ParseError> {
        let start = self.pos();
        debug_assert_eq!(self.peek(), Some('e'));
        self.bump();
        let Some(d) = self.peek().and_then(|c| c.to_digit(10)) else {
            return self.syntax("expected a basis index after 'e'");
        };
        self.bump();
        let index = d as usize;
        if index == 0 || index >= self.algebra.dim() {
            return Err(ParseError::IndexOutOfRange { pos: start, index, algebra: self.algebra });
        }
        let primed = self.eat('\'');
        if primed != self.algebra.is_primed(index) {
            let found = if primed { format!("e{index}'") } else { format!("e{index}") };
            return Err(ParseError::PrimeMismatch { pos: start, found, expected: self.algebra.label(index), algebra: self.algebra });
        }
        Ok(index)
    }

    fn term(&mut self) -> Result<(Scalar, usize), ParseError> {
        if self.peek() == Some('e') {
            return Ok((Scalar::from(1), self.basis()?));
        }
        let s = self.scalar()?;
        let k = if self.peek() == Some('e') { self.basis()? } else { 0 };
        Ok((s, k))
    }
}

/// Parses `text` as an element of `algebra`.
pub fn parse_element(text: &str, algebra: Algebra) -> Result<Element, ParseError> {
    let chars: Vec<(usize, char)> = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars, at: 0, end: text.chars().count(), algebra };
    if p.peek().is_none() {
        return p.syntax("empty expression");
    }
    let field = algebra.field();
    let mut coeffs = vec![Scalar::zero(field); algebra.dim()];
    let mut negate = p.eat('-');
    loop {
        let (s, k) = p.term()?;
        let s = if negate { -s } else { s };
        coeffs[k] = &coeffs[k] + &s;
        match p.bump() {
            None => break,
            Some('+') => negate = false,
            Some('-') => negate = true,
            Some(c) => {
                p.at -= 1;
                return p.syntax(format!("unexpected '{c}'"));
            }
        }
        if p.peek().is_none() {
            return p.syntax("expected a term after sign");
        }
    }
    Ok(Element::new(algebra, coeffs).expect("coefficients are in the algebra's field"))
}

fn format_term(c: &Scalar, label: &str) -> String {
    let re = c.re();
    let im = c.im();
    if im.is_zero() {
        return match label {
            "" => rational_to_string(re),
            _ if re.is_one() => label.to_owned(),
            _ if (-re).is_one() => format!("-{label}"),
            _ => format!("{}{label}", rational_to_string(re)),
        };
    }
    if re.is_zero() {
        let sign = if im.is_negative() { "-" } else { "" };
        let mag = im.abs();
        let mag = if mag.is_one() { String::new() } else { rational_to_string(&mag) };
        return format!("{sign}{mag}i{label}");
    }
    let op = if im.is_negative() { '-' } else { '+' };
    let mag = im.abs();
    let mag = if mag.is_one() { String::new() } else { rational_to_string(&mag) };
    format!("({}{op}{mag}i){label}", rational_to_string(re))
}

/// Canonical text for `a`: terms in basis order, zero terms dropped, unit
/// coefficients elided, `"0"` for the zero element.
pub fn format_element(a: &Element) -> String {
    let mut out = String::new();
    for k in a.support() {
        let label = if k == 0 { String::new() } else { a.algebra().label(k) };
        let term = format_term(a.coeff(k), &label);
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses then re-formats, yielding the canonical spelling of `text`.
pub fn canonical(text: &str, algebra: Algebra) -> Result<String, ParseError> {
    parse_element(text, algebra).map(|e| format_element(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remark_split_a() {
        let a = parse_element("4e1'+5e2+3e3'-5e4+4e5'+3e7'", Algebra::Os).unwrap();
        assert_eq!(a, Element::from_ints(Algebra::Os, &[0, 4, 5, 3, -5, 4, 0, 3]).unwrap());
    }

    #[test]
    fn zero() {
        assert_eq!(parse_element("0", Algebra::H).unwrap(), Element::zero(Algebra::H));
        assert_eq!(format_element(&Element::zero(Algebra::Oc)), "0");
    }

    #[test]
    fn prime_rules() {
        assert!(matches!(parse_element("e1", Algebra::Os), Err(ParseError::PrimeMismatch { .. })));
        assert!(matches!(parse_element("e2'", Algebra::Os), Err(ParseError::PrimeMismatch { .. })));
        assert!(matches!(parse_element("e1'", Algebra::O), Err(ParseError::PrimeMismatch { .. })));
        assert!(parse_element("e1'+e2+e3'", Algebra::Hs).is_ok());
    }

    #[test]
    fn imaginary_scalars_need_complex_algebra() {
        assert!(matches!(
            parse_element("3ie2", Algebra::O),
            Err(ParseError::ImaginaryScalarInRealAlgebra { pos: 1, .. })
        ));
        assert!(matches!(parse_element("(1+2i)", Algebra::H), Err(ParseError::ImaginaryScalarInRealAlgebra { .. })));
        assert_eq!(parse_element("ie3", Algebra::Hc).unwrap().coeff(3), &Scalar::i());
    }

    #[test]
    fn index_range() {
        assert!(matches!(parse_element("e5", Algebra::H), Err(ParseError::IndexOutOfRange { index: 5, .. })));
        assert!(matches!(parse_element("e0", Algebra::O), Err(ParseError::IndexOutOfRange { index: 0, .. })));
    }

    #[test]
    fn syntax_errors_report_position() {
        assert_eq!(
            parse_element("e1+", Algebra::H),
            Err(ParseError::Syntax { pos: 3, msg: "expected a term after sign".into() })
        );
        assert!(matches!(parse_element("e1*e2", Algebra::H), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_element("", Algebra::H), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_element("1/0e1", Algebra::H), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_element("e", Algebra::H), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn accumulates_and_ignores_whitespace() {
        let a = parse_element(" e1 + 2 e1 - 1/2 ", Algebra::H).unwrap();
        assert_eq!(a.coeff(1), &Scalar::from(3));
        assert_eq!(a.coeff(0), &Scalar::ratio(-1, 2));
    }

    #[test]
    fn formatting() {
        let b = parse_element("3e2+4e6+5ie7", Algebra::Oc).unwrap();
        assert_eq!(format_element(&b), "3e2+4e6+5ie7");
        assert_eq!(format_element(&-Element::basis(Algebra::H, 2)), "-e2");
        assert_eq!(canonical("(1-i)e1 + (-2/3+4i) - ie2", Algebra::Hc).unwrap(), "(-2/3+4i)+(1-i)e1-ie2");
        assert_eq!(canonical("e3' - 1/2e1'", Algebra::Hs).unwrap(), "-1/2e1'+e3'");
    }
}
