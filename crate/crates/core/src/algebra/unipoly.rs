//! Dense univariate polynomials over a field tower.

use std::fmt;


use num_traits::One;

use super::tower::{rational_str, FieldElement, Tower, Q};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    tower: Tower,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero(tower: &Tower) -> UniPoly {
        UniPoly { tower: tower.clone(), coeffs: vec![] }
    }

    pub fn one(tower: &Tower) -> UniPoly {
        UniPoly::constant(FieldElement::one(tower))
    }

    pub fn constant(c: FieldElement) -> UniPoly {
        UniPoly::from_coeffs(c.tower().clone(), vec![c])
    }

    pub fn variable(tower: &Tower) -> UniPoly {
        UniPoly::from_coeffs(
            tower.clone(),
            vec![FieldElement::zero(tower), FieldElement::one(tower)],
        )
    }

    pub fn from_coeffs(tower: Tower, mut coeffs: Vec<FieldElement>) -> UniPoly {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { tower, coeffs }
    }

    pub fn from_rationals(tower: &Tower, cs: &[Q]) -> UniPoly {
        UniPoly::from_coeffs(
            tower.clone(),
            cs.iter().map(|q| FieldElement::from_rational(tower, q.clone())).collect(),
        )
    }

    pub fn from_ints(tower: &Tower, cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(
            tower.clone(),
            cs.iter().map(|n| FieldElement::from_int(tower, *n)).collect(),
        )
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FieldElement::zero(&self.tower))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lc(&self) -> FieldElement {
        self.coeffs.last().cloned().unwrap_or_else(|| FieldElement::zero(&self.tower))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lift(&self, to: &Tower) -> UniPoly {
        UniPoly::from_coeffs(to.clone(), self.coeffs.iter().map(|c| c.lift(to)).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        UniPoly::from_coeffs(self.tower.clone(), out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { tower: self.tower.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.tower);
        }
        let mut out = vec![FieldElement::zero(&self.tower); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(self.tower.clone(), out)
    }

    pub fn mul_elem(&self, c: &FieldElement) -> UniPoly {
        UniPoly::from_coeffs(self.tower.clone(), self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one(&self.tower);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Division with remainder; the divisor may be any nonzero polynomial.
    pub fn divrem(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let db = other.degree().unwrap();
        let lc_inv = other.lc().inv()?;
        let mut rem = self.coeffs.clone();
        let trim = |v: &mut Vec<FieldElement>| {
            while v.last().map(|c| c.is_zero()).unwrap_or(false) {
                v.pop();
            }
        };
        trim(&mut rem);
        if rem.len() <= db {
            return Ok((UniPoly::zero(&self.tower), UniPoly::from_coeffs(self.tower.clone(), rem)));
        }
        let mut quot = vec![FieldElement::zero(&self.tower); rem.len() - db];
        while rem.len() > db {
            let da = rem.len() - 1;
            let c = rem.last().unwrap().mul(&lc_inv);
            quot[da - db] = c.clone();
            for (j, bj) in other.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                rem[da - db + j] = rem[da - db + j].sub(&c.mul(bj));
            }
            trim(&mut rem);
        }
        Ok((
            UniPoly::from_coeffs(self.tower.clone(), quot),
            UniPoly::from_coeffs(self.tower.clone(), rem),
        ))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, other: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(other)?;
        if !r.is_zero() {
            return Err(Error::Invalid("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("leading coefficient of nonzero polynomial");
        self.mul_elem(&inv)
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(&self.tower);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul_rational(&Q::from_integer((i as i64).into())));
        }
        UniPoly::from_coeffs(self.tower.clone(), out)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            Ok(a.monic())
        }
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(&self.tower);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn eval_rational(&self, q: &Q) -> FieldElement {
        self.eval(&FieldElement::from_rational(&self.tower, q.clone()))
    }

    /// Substitute t -> t + c.
    pub fn shift(&self, c: &FieldElement) -> UniPoly {
        // Synthetic Taylor shift.
        let mut coeffs = self.coeffs.clone();
        let n = coeffs.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = coeffs[j + 1].mul(c);
                coeffs[j] = coeffs[j].add(&t);
            }
        }
        UniPoly::from_coeffs(self.tower.clone(), coeffs)
    }

    /// Substitute t -> c*t.
    pub fn scale_var(&self, c: &FieldElement) -> UniPoly {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut p = FieldElement::one(&self.tower);
        for a in &self.coeffs {
            out.push(a.mul(&p));
            p = p.mul(c);
        }
        UniPoly::from_coeffs(self.tower.clone(), out)
    }

    /// Order of vanishing at t = 0 (index of the first nonzero coefficient).
    pub fn vanishing_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Squarefree decomposition by Yun's algorithm. Returns monic factors
    /// with multiplicities; the product of factor^mult times a unit equals
    /// the input. Factors are pairwise coprime and squarefree.
    pub fn squarefree_factor(&self) -> Result<Vec<(UniPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(vec![]);
        }
        let fp = f.derivative();
        let g = f.gcd(&fp)?;
        if g.is_constant() {
            return Ok(vec![(f, 1)]);
        }
        let mut c = f.div_exact(&g)?;
        let mut d = fp.div_exact(&g)?.sub(&c.derivative());
        let mut out = vec![];
        let mut i = 1u32;
        loop {
            let y = c.gcd(&d)?;
            if !y.is_constant() {
                out.push((y.clone(), i));
            }
            c = c.div_exact(&y)?;
            if c.is_constant() {
                break;
            }
            d = d.div_exact(&y)?.sub(&c.derivative());
            i += 1;
        }
        debug_assert!({
            let mut prod = UniPoly::one(&self.tower);
            for (p, m) in &out {
                prod = prod.mul(&p.pow(*m));
            }
            prod.monic() == self.monic()
        });
        Ok(out)
    }

    /// The product of the distinct irreducible factors, each once.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        let mut p = UniPoly::one(&self.tower);
        for (f, _) in self.squarefree_factor()? {
            p = p.mul(&f);
        }
        Ok(p)
    }

    /// Resultant of two polynomials over the tower field, in the classical
    /// Sylvester convention (f rows first).
    pub fn resultant(&self, other: &UniPoly) -> Result<FieldElement> {
        let t = &self.tower;
        if self.is_zero() || other.is_zero() {
            return Ok(FieldElement::zero(t));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = FieldElement::one(t);
        let mut sign_neg = false;
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                acc = acc.mul(&b.lc().pow(da as u32));
                break;
            }
            let (_, r) = a.divrem(&b)?;
            if r.is_zero() {
                return Ok(FieldElement::zero(t));
            }
            let dr = r.degree().unwrap();
            acc = acc.mul(&b.lc().pow((da - dr) as u32));
            if (da % 2 == 1) && (db % 2 == 1) {
                sign_neg = !sign_neg;
            }
            a = b;
            b = r;
        }
        if sign_neg {
            acc = acc.neg();
        }
        Ok(acc)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = vec![];
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{}", i),
            };
            let cs = match c.to_rational() {
                Some(q) => {
                    if mono.is_empty() {
                        rational_str(&q)
                    } else if q.is_one() {
                        mono.clone()
                    } else if (-q.clone()).is_one() {
                        format!("-{}", mono)
                    } else {
                        format!("{}*{}", rational_str(&q), mono)
                    }
                }
                None => {
                    if mono.is_empty() {
                        format!("({})", c)
                    } else {
                        format!("({})*{}", c, mono)
                    }
                }
            };
            parts.push(cs);
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        write!(f, "{}", s)
    }
}

#[allow(unused_imports)]
use num_traits::Signed;

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Tower {
        Tower::rationals(2)
    }

    #[test]
    fn divrem_and_gcd() {
        let tw = t();
        // (t^2 - 1) / (t - 1) = t + 1
        let a = UniPoly::from_ints(&tw, &[-1, 0, 1]);
        let b = UniPoly::from_ints(&tw, &[-1, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_ints(&tw, &[1, 1]));
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, b.monic());
    }

    #[test]
    fn squarefree_yun() {
        let tw = t();
        // t^4 + 2 t^2 + 1 = (t^2+1)^2
        let u = UniPoly::from_ints(&tw, &[1, 0, 2, 0, 1]);
        let sf = u.squarefree_factor().unwrap();
        assert_eq!(sf.len(), 1);
        assert_eq!(sf[0].1, 2);
        assert_eq!(sf[0].0, UniPoly::from_ints(&tw, &[1, 0, 1]));
        // t -> [(t,1)]
        let v = UniPoly::from_ints(&tw, &[0, 1]);
        let sf = v.squarefree_factor().unwrap();
        assert_eq!(sf, vec![(v.clone(), 1)]);
        // (9t+1)(9t+4)^2
        let a = UniPoly::from_ints(&tw, &[1, 9]);
        let b = UniPoly::from_ints(&tw, &[4, 9]);
        let u = a.mul(&b).mul(&b);
        let sf = u.squarefree_factor().unwrap();
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0].0, a.monic());
        assert_eq!(sf[0].1, 1);
        assert_eq!(sf[1].0, b.monic());
        assert_eq!(sf[1].1, 2);
    }

    #[test]
    fn shift_and_eval() {
        let tw = t();
        // u(t) = t^2 + 1; u(t+2) = t^2 + 4t + 5
        let u = UniPoly::from_ints(&tw, &[1, 0, 1]);
        let s = u.shift(&FieldElement::from_int(&tw, 2));
        assert_eq!(s, UniPoly::from_ints(&tw, &[5, 4, 1]));
        assert_eq!(
            u.eval(&FieldElement::from_int(&tw, 3)).to_rational().unwrap(),
            Q::from_integer(10.into())
        );
    }

    #[test]
    fn resultant_field() {
        let tw = t();
        // res(t^2-1, t^2+1) over Q: roots ±1 of first, evaluate second: (1+1)(1+1) = 4
        let a = UniPoly::from_ints(&tw, &[-1, 0, 1]);
        let b = UniPoly::from_ints(&tw, &[1, 0, 1]);
        assert_eq!(a.resultant(&b).unwrap(), FieldElement::from_int(&tw, 4));
    }
}
