//! Bounded towers of simple algebraic extensions of the rationals.
//!
//! A tower is a chain Q ⊂ Q(g1) ⊂ Q(g1,g2) ⊂ … where each generator is a
//! root of a monic irreducible polynomial over the field below it. Elements
//! are stored as flat coordinate vectors in the product power basis
//! g1^{i1}·g2^{i2}·…, with the lowest level varying fastest. All arithmetic
//! is exact.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

#[derive(Debug, PartialEq, Eq)]
pub(crate) struct Level {
    /// Monic minimal polynomial of this level's generator. Coefficient `i`
    /// (of g^i) is an element of the tower below, as a flat vector.
    pub(crate) minpoly: Vec<Vec<Q>>,
}

impl Level {
    pub(crate) fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }
}

#[derive(Debug)]
struct TowerInner {
    levels: Vec<Level>,
    depth_limit: usize,
}

/// A field tower: Q extended by at most `depth_limit` algebraic generators.
#[derive(Clone, Debug)]
pub struct Tower(Arc<TowerInner>);

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.levels == other.0.levels
    }
}
impl Eq for Tower {}

impl Tower {
    /// The plain rationals, with the given extension budget.
    pub fn rationals(depth_limit: usize) -> Tower {
        Tower(Arc::new(TowerInner { levels: vec![], depth_limit }))
    }

    pub fn depth(&self) -> usize {
        self.0.levels.len()
    }

    pub fn depth_limit(&self) -> usize {
        self.0.depth_limit
    }

    /// Total degree over Q.
    pub fn degree(&self) -> usize {
        self.0.levels.iter().map(|l| l.degree()).product()
    }

    pub(crate) fn levels(&self) -> &[Level] {
        &self.0.levels
    }

    /// The tower truncated to its first `depth` levels, with the same budget.
    pub fn prefix(&self, depth: usize) -> Tower {
        assert!(depth <= self.depth());
        if depth == self.depth() {
            return self.clone();
        }
        let levels = self.0.levels[..depth]
            .iter()
            .map(|l| Level { minpoly: l.minpoly.clone() })
            .collect();
        Tower(Arc::new(TowerInner { levels, depth_limit: self.0.depth_limit }))
    }

    pub fn is_prefix_of(&self, other: &Tower) -> bool {
        self.depth() <= other.depth() && self.0.levels[..] == other.0.levels[..self.depth()]
    }

    /// Append one level. `minpoly` is monic with coefficients given as flat
    /// vectors over `self`. Irreducibility is the caller's responsibility
    /// (see `adjoin_root`, which certifies it); a reducible minimal
    /// polynomial is detected later as a failed inversion.
    pub(crate) fn extend_unchecked(&self, minpoly: Vec<Vec<Q>>) -> Result<(Tower, FieldElement)> {
        if self.depth() + 1 > self.0.depth_limit {
            return Err(Error::ExtensionDepthExceeded { limit: self.0.depth_limit });
        }
        assert!(minpoly.len() >= 3, "extension degree must be at least 2");
        let dim = self.degree();
        for c in &minpoly {
            assert_eq!(c.len(), dim);
        }
        assert!(is_one_vec(minpoly.last().unwrap()), "minimal polynomial must be monic");
        let mut levels: Vec<Level> = self
            .0
            .levels
            .iter()
            .map(|l| Level { minpoly: l.minpoly.clone() })
            .collect();
        levels.push(Level { minpoly });
        let tower = Tower(Arc::new(TowerInner { levels, depth_limit: self.0.depth_limit }));
        let root = FieldElement::generator(&tower, tower.depth() - 1);
        Ok((tower, root))
    }
}

fn is_one_vec(v: &[Q]) -> bool {
    v.first().map(|c| c.is_one()).unwrap_or(false) && v.iter().skip(1).all(|c| c.is_zero())
}

fn dim_of(levels: &[Level]) -> usize {
    levels.iter().map(|l| l.degree()).product()
}

fn zero_vec(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

fn vec_is_zero(v: &[Q]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn vec_add(a: &mut [Q], b: &[Q]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

fn vec_sub(a: &mut [Q], b: &[Q]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

fn vec_neg(a: &[Q]) -> Vec<Q> {
    a.iter().map(|c| -c).collect()
}

/// Multiply two flat vectors over the given levels.
fn vec_mul(levels: &[Level], a: &[Q], b: &[Q]) -> Vec<Q> {
    if levels.is_empty() {
        return vec![&a[0] * &b[0]];
    }
    let (low, top) = levels.split_at(levels.len() - 1);
    let d = top[0].degree();
    let c = dim_of(low);
    // Convolution of the degree-<d chunk polynomials.
    let mut prod: Vec<Vec<Q>> = (0..2 * d - 1).map(|_| zero_vec(c)).collect();
    for i in 0..d {
        let ai = &a[i * c..(i + 1) * c];
        if vec_is_zero(ai) {
            continue;
        }
        for j in 0..d {
            let bj = &b[j * c..(j + 1) * c];
            if vec_is_zero(bj) {
                continue;
            }
            let t = vec_mul(low, ai, bj);
            vec_add(&mut prod[i + j], &t);
        }
    }
    // Reduce g^e for e >= d using the monic minimal polynomial.
    for e in (d..2 * d - 1).rev() {
        let lead = std::mem::replace(&mut prod[e], zero_vec(c));
        if vec_is_zero(&lead) {
            continue;
        }
        for (j, m) in top[0].minpoly[..d].iter().enumerate() {
            if vec_is_zero(m) {
                continue;
            }
            let t = vec_mul(low, &lead, m);
            vec_sub(&mut prod[e - d + j], &t);
        }
    }
    prod.truncate(d);
    prod.concat()
}

/// Multiplicative inverse of a nonzero flat vector.
fn vec_inv(levels: &[Level], a: &[Q]) -> Result<Vec<Q>> {
    if levels.is_empty() {
        if a[0].is_zero() {
            return Err(Error::Invalid("division by zero".into()));
        }
        return Ok(vec![a[0].recip()]);
    }
    let (low, top) = levels.split_at(levels.len() - 1);
    let d = top[0].degree();
    let c = dim_of(low);
    // Extended Euclid in (lower tower)[g] between the minimal polynomial and a.
    let minpoly: Vec<Vec<Q>> = top[0].minpoly.clone();
    let a_poly: Vec<Vec<Q>> = (0..d).map(|i| a[i * c..(i + 1) * c].to_vec()).collect();

    let mut r0 = trim(minpoly);
    let mut r1 = trim(a_poly);
    if r1.is_empty() {
        return Err(Error::Invalid("division by zero".into()));
    }
    let mut t0: Vec<Vec<Q>> = vec![];
    let mut t1: Vec<Vec<Q>> = vec![one_chunk(low)];
    while !r1.is_empty() && r1.len() > 1 {
        let (q, r) = poly_divrem(low, &r0, &r1)?;
        let t2 = poly_sub(low, &t0, &poly_mul(low, &q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if r1.is_empty() {
        // gcd has positive degree: the "field" was not a field.
        return Err(Error::Invalid(
            "reducible minimal polynomial detected during inversion".into(),
        ));
    }
    // r1 is a nonzero constant; inverse = t1 / r1.
    let inv_const = vec_inv(low, &r1[0])?;
    let mut out = zero_vec(c * d);
    for (i, ch) in t1.iter().enumerate().take(d) {
        let v = vec_mul(low, ch, &inv_const);
        out[i * c..(i + 1) * c].clone_from_slice(&v);
    }
    Ok(out)
}

fn one_chunk(levels: &[Level]) -> Vec<Q> {
    let mut v = zero_vec(dim_of(levels));
    v[0] = Q::one();
    v
}

fn trim(mut p: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    while p.last().map(|c| vec_is_zero(c)).unwrap_or(false) {
        p.pop();
    }
    p
}

fn poly_sub(levels: &[Level], a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len().max(b.len());
    let c = dim_of(levels);
    let mut out = vec![zero_vec(c); n];
    for (i, x) in a.iter().enumerate() {
        vec_add(&mut out[i], x);
    }
    for (i, x) in b.iter().enumerate() {
        vec_sub(&mut out[i], x);
    }
    trim(out)
}

fn poly_mul(levels: &[Level], a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let c = dim_of(levels);
    let mut out = vec![zero_vec(c); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if vec_is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if vec_is_zero(y) {
                continue;
            }
            let t = vec_mul(levels, x, y);
            vec_add(&mut out[i + j], &t);
        }
    }
    trim(out)
}

fn poly_divrem(levels: &[Level], a: &[Vec<Q>], b: &[Vec<Q>]) -> Result<(Vec<Vec<Q>>, Vec<Vec<Q>>)> {
    assert!(!b.is_empty());
    let c = dim_of(levels);
    let lc_inv = vec_inv(levels, b.last().unwrap())?;
    let mut rem: Vec<Vec<Q>> = a.to_vec();
    let db = b.len() - 1;
    if a.len() <= db {
        return Ok((vec![], trim(rem)));
    }
    let mut quot = vec![zero_vec(c); a.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let coef = vec_mul(levels, rem.last().unwrap(), &lc_inv);
        quot[da - db] = coef.clone();
        for (j, bj) in b.iter().enumerate() {
            if vec_is_zero(bj) {
                continue;
            }
            let t = vec_mul(levels, &coef, bj);
            vec_sub(&mut rem[da - db + j], &t);
        }
        rem = trim(rem);
        if rem.len() <= db {
            break;
        }
    }
    Ok((trim(quot), trim(rem)))
}

/// An element of a field tower: a flat coordinate vector in the power basis.
#[derive(Clone, Debug)]
pub struct FieldElement {
    tower: Tower,
    coords: Vec<Q>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower && self.coords == other.coords
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    pub fn zero(tower: &Tower) -> FieldElement {
        FieldElement { tower: tower.clone(), coords: zero_vec(tower.degree()) }
    }

    pub fn one(tower: &Tower) -> FieldElement {
        FieldElement::from_rational(tower, Q::one())
    }

    pub fn from_rational(tower: &Tower, q: Q) -> FieldElement {
        let mut coords = zero_vec(tower.degree());
        coords[0] = q;
        FieldElement { tower: tower.clone(), coords }
    }

    pub fn from_int(tower: &Tower, n: i64) -> FieldElement {
        FieldElement::from_rational(tower, Q::from_integer(n.into()))
    }

    /// The generator adjoined at `level` (0-based).
    pub fn generator(tower: &Tower, level: usize) -> FieldElement {
        assert!(level < tower.depth());
        let mut coords = zero_vec(tower.degree());
        let idx = dim_of(&tower.levels()[..level]);
        coords[idx] = Q::one();
        FieldElement { tower: tower.clone(), coords }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub(crate) fn from_coords(tower: &Tower, coords: Vec<Q>) -> FieldElement {
        assert_eq!(coords.len(), tower.degree());
        FieldElement { tower: tower.clone(), coords }
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.coords)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// View as a rational if all higher coordinates vanish.
    pub fn to_rational(&self) -> Option<Q> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Re-express in a taller tower of which the current one is a prefix.
    pub fn lift(&self, to: &Tower) -> FieldElement {
        assert!(self.tower.is_prefix_of(to), "lift target must extend the element's tower");
        let mut coords = self.coords.clone();
        coords.resize(to.degree(), Q::zero());
        FieldElement { tower: to.clone(), coords }
    }

    fn assert_same(&self, other: &FieldElement) {
        assert!(self.tower == other.tower, "field elements from different towers");
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same(other);
        let mut coords = self.coords.clone();
        vec_add(&mut coords, &other.coords);
        FieldElement { tower: self.tower.clone(), coords }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_same(other);
        let mut coords = self.coords.clone();
        vec_sub(&mut coords, &other.coords);
        FieldElement { tower: self.tower.clone(), coords }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { tower: self.tower.clone(), coords: vec_neg(&self.coords) }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same(other);
        let coords = vec_mul(self.tower.levels(), &self.coords, &other.coords);
        FieldElement { tower: self.tower.clone(), coords }
    }

    pub fn mul_rational(&self, q: &Q) -> FieldElement {
        FieldElement {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let coords = vec_inv(self.tower.levels(), &self.coords)?;
        Ok(FieldElement { tower: self.tower.clone(), coords })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = FieldElement::one(&self.tower);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Deterministic total order on coordinates, for canonical factor sorting.
    pub fn cmp_coords(&self, other: &FieldElement) -> std::cmp::Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp(b) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let levels = self.tower.levels();
        let mut parts: Vec<String> = vec![];
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // Decode the mixed-radix index into generator exponents.
            let mut rem = idx;
            let mut mono = String::new();
            for (li, level) in levels.iter().enumerate() {
                let d = level.degree();
                let e = rem % d;
                rem /= d;
                if e > 0 {
                    if !mono.is_empty() {
                        mono.push('*');
                    }
                    mono.push_str(&format!("g{}", li + 1));
                    if e > 1 {
                        mono.push_str(&format!("^{}", e));
                    }
                }
            }
            let cs = rational_str(c);
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{}", mono)
            } else {
                format!("{}*{}", cs, mono)
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return write!(f, "0");
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

pub(crate) fn rational_str(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-{}/{}", q.numer().magnitude(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn rational_arithmetic() {
        let t = Tower::rationals(2);
        let a = FieldElement::from_rational(&t, q(3, 2));
        let b = FieldElement::from_int(&t, 2);
        assert_eq!(a.mul(&b).to_rational().unwrap(), q(3, 1));
        assert_eq!(a.add(&b).to_rational().unwrap(), q(7, 2));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.inv().unwrap().to_rational().unwrap(), q(2, 3));
    }

    #[test]
    fn quadratic_extension() {
        // Adjoin sqrt(2): minpoly g^2 - 2.
        let t = Tower::rationals(2);
        let minpoly = vec![vec![q(-2, 1)], vec![q(0, 1)], vec![q(1, 1)]];
        let (t2, r) = t.extend_unchecked(minpoly).unwrap();
        assert_eq!(t2.degree(), 2);
        let two = FieldElement::from_int(&t2, 2);
        assert_eq!(r.mul(&r), two);
        // (1 + sqrt2)^{-1} = sqrt2 - 1
        let one = FieldElement::one(&t2);
        let x = one.add(&r);
        let inv = x.inv().unwrap();
        assert_eq!(inv, r.sub(&one));
    }

    #[test]
    fn depth_two_tower() {
        // Q(sqrt2)(sqrt(sqrt2)) has degree 4 and the top generator squares
        // to the lower one.
        let t = Tower::rationals(2);
        let (t1, s2) = t
            .extend_unchecked(vec![vec![q(-2, 1)], vec![q(0, 1)], vec![q(1, 1)]])
            .unwrap();
        let minpoly2 = vec![s2.neg().coords().to_vec(), vec![q(0, 1), q(0, 1)], vec![q(1, 1), q(0, 1)]];
        let (t2, r) = t1.extend_unchecked(minpoly2).unwrap();
        assert_eq!(t2.degree(), 4);
        assert_eq!(r.mul(&r), s2.lift(&t2));
        // r^4 = 2
        assert_eq!(r.pow(4), FieldElement::from_int(&t2, 2));
        assert!(r.pow(4).sub(&r.pow(2).mul(&r.pow(2))).is_zero());
        let inv = r.inv().unwrap();
        assert!(inv.mul(&r).is_one());
    }

    #[test]
    fn depth_limit_enforced() {
        let t = Tower::rationals(1);
        let (t1, _) = t
            .extend_unchecked(vec![vec![q(-2, 1)], vec![q(0, 1)], vec![q(1, 1)]])
            .unwrap();
        let mp = vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(0, 1)], vec![q(1, 1), q(0, 1)]];
        match t1.extend_unchecked(mp) {
            Err(Error::ExtensionDepthExceeded { limit }) => assert_eq!(limit, 1),
            other => panic!("expected depth error, got {:?}", other),
        }
    }
}
