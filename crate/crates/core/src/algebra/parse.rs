//! Parser for the ASCII polynomial grammar.
//!
//! Variables `x`, `y`; integer and `p/q` rational literals; operators
//! `+ - *` and `^` with positive integer exponent; parentheses. Implicit
//! multiplication is not allowed; whitespace is insignificant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::Polynomial;
use super::tower::{FieldElement, Tower, Q};
use crate::error::{Error, Result};

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    tower: Tower,
}

/// Parse a polynomial in the grammar above; coefficients are rational
/// literals, representable in any tower.
pub fn parse_polynomial(text: &str, tower: &Tower) -> Result<Polynomial> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0, tower: tower.clone() };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            let _ = self.eat(b'+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let base = self.base()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.nat()?;
            if e == 0 {
                return Err(self.err("exponent must be a positive integer"));
            }
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Polynomial::var_x(&self.tower))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Polynomial::var_y(&self.tower))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let q = self.rational()?;
                Ok(Polynomial::monomial(
                    &self.tower,
                    0,
                    0,
                    FieldElement::from_rational(&self.tower, q),
                ))
            }
            _ => Err(self.err("expected variable, literal, or '('")),
        }
    }

    fn nat(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| self.err("integer too large"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().parse().unwrap())
    }

    fn rational(&mut self) -> Result<Q> {
        let n = self.integer()?;
        self.skip_ws();
        if self.eat(b'/') {
            let d = self.integer()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tower::FieldElement;

    fn tw() -> Tower {
        Tower::rationals(2)
    }

    #[test]
    fn direct_literals() {
        let t = tw();
        let f = parse_polynomial("y^2-x^3", &t).unwrap();
        assert_eq!(f.support(), vec![(0, 2), (3, 0)]);
        assert_eq!(f.coeff(0, 2), FieldElement::from_int(&t, 1));
        assert_eq!(f.coeff(3, 0), FieldElement::from_int(&t, -1));
        let g = parse_polynomial("3/2*x", &t).unwrap();
        assert_eq!(g.support(), vec![(1, 0)]);
        assert_eq!(g.coeff(1, 0).to_rational().unwrap(), Q::new(3.into(), 2.into()));
    }

    #[test]
    fn expansion_cancels() {
        // Independent term-by-term expansion oracle: (x+y)^2 - x^2 - 2xy - y^2
        // must be exactly zero.
        let t = tw();
        let f = parse_polynomial("(x+y)^2-x^2-2*x*y-y^2", &t).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn print_parse_roundtrip() {
        let t = tw();
        for s in [
            "y^2-x^3",
            "(x^3+y^2)^2+x^3*y^3",
            "-y^5+2*x*y^3+(2*x^3+1)*y^2+2*x^2*y+x^4",
            "1/2*x*y-3*y^2+x^7",
        ] {
            let f = parse_polynomial(s, &t).unwrap();
            let printed = f.to_string();
            let g = parse_polynomial(&printed, &t).unwrap();
            assert_eq!(f, g, "roundtrip failed for {}", s);
        }
    }

    #[test]
    fn syntax_errors_have_positions() {
        let t = tw();
        match parse_polynomial("x + ", &t) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        assert!(parse_polynomial("x^0", &t).is_err());
        assert!(parse_polynomial("2x", &t).is_err()); // implicit multiplication
    }
}
