//! Sparse exact-coefficient bivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;


use num_traits::One;
#[allow(unused_imports)]
use num_traits::Signed;

use super::tower::{rational_str, FieldElement, Tower, Q};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Which variable a triangular change replaces. Both variants substitute the
/// second coordinate by itself plus c times a power of the first; the names
/// follow the ambient coordinates ((x,y) downstairs, (u,v) in a chart).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangularAxis {
    YByX,
    VByU,
}

/// Sparse bivariate polynomial with exact tower coefficients. No zero
/// coefficients are stored; equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    tower: Tower,
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl Polynomial {
    pub fn zero(tower: &Tower) -> Polynomial {
        Polynomial { tower: tower.clone(), terms: BTreeMap::new() }
    }

    pub fn one(tower: &Tower) -> Polynomial {
        Polynomial::monomial(tower, 0, 0, FieldElement::one(tower))
    }

    pub fn monomial(tower: &Tower, i: u32, j: u32, c: FieldElement) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Polynomial { tower: tower.clone(), terms }
    }

    pub fn var_x(tower: &Tower) -> Polynomial {
        Polynomial::monomial(tower, 1, 0, FieldElement::one(tower))
    }

    pub fn var_y(tower: &Tower) -> Polynomial {
        Polynomial::monomial(tower, 0, 1, FieldElement::one(tower))
    }

    pub fn from_terms(tower: &Tower, terms: impl IntoIterator<Item = ((u32, u32), FieldElement)>) -> Polynomial {
        let mut p = Polynomial::zero(tower);
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElement)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<(u32, u32)> {
        self.terms.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElement {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| FieldElement::zero(&self.tower))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j));
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            tower: self.tower.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.tower);
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1.mul(c2));
            }
        }
        out
    }

    pub fn mul_elem(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.tower);
        }
        Polynomial {
            tower: self.tower.clone(),
            terms: self.terms.iter().map(|(k, a)| (*k, a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.tower);
        let mut base = self.clone();
        let mut e = e;
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

    pub fn lift(&self, to: &Tower) -> Polynomial {
        Polynomial {
            tower: to.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, c.lift(to))).collect(),
        }
    }

    /// Total degree; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Multiplicity at the origin (minimum total degree of a term).
    pub fn mult_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        !self.terms.contains_key(&(0, 0))
    }

    /// The homogeneous part of lowest total degree.
    pub fn leading_form(&self) -> Polynomial {
        match self.mult_at_origin() {
            None => Polynomial::zero(&self.tower),
            Some(m) => Polynomial {
                tower: self.tower.clone(),
                terms: self
                    .terms
                    .iter()
                    .filter(|(&(i, j), _)| i + j == m)
                    .map(|(k, c)| (*k, c.clone()))
                    .collect(),
            },
        }
    }

    pub fn swap_vars(&self) -> Polynomial {
        Polynomial {
            tower: self.tower.clone(),
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// f(0, y) as a univariate polynomial in y.
    pub fn eval_x_zero(&self) -> UniPoly {
        let deg = self.terms.keys().filter(|&&(i, _)| i == 0).map(|&(_, j)| j).max();
        let mut coeffs = vec![FieldElement::zero(&self.tower); deg.map(|d| d as usize + 1).unwrap_or(0)];
        for (&(i, j), c) in &self.terms {
            if i == 0 {
                coeffs[j as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(self.tower.clone(), coeffs)
    }

    /// f(x, 0) as a univariate polynomial in x.
    pub fn eval_y_zero(&self) -> UniPoly {
        self.swap_vars().eval_x_zero()
    }

    /// Largest p with x^p | f (0 for the zero polynomial).
    pub fn x_factor_order(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).min().unwrap_or(0)
    }

    pub fn y_factor_order(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).min().unwrap_or(0)
    }

    /// Divide out x^p y^q exactly.
    pub fn shift_down(&self, p: u32, q: u32) -> Polynomial {
        Polynomial {
            tower: self.tower.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    assert!(i >= p && j >= q);
                    ((i - p, j - q), c.clone())
                })
                .collect(),
        }
    }

    pub fn derivative_x(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.tower);
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c.mul_rational(&Q::from_integer((i as i64).into())));
            }
        }
        out
    }

    pub fn derivative_y(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.tower);
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c.mul_rational(&Q::from_integer((j as i64).into())));
            }
        }
        out
    }

    /// Replace the designated second variable by (itself + c * first^k).
    pub fn triangular_change(&self, c: &FieldElement, k: u32, _axis: TriangularAxis) -> Polynomial {
        assert!(k >= 1, "triangular change requires k >= 1");
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Polynomial::zero(&self.tower);
        for (&(i, j), a) in &self.terms {
            // a * x^i * (y + c x^k)^j
            let mut cpow = FieldElement::one(&self.tower);
            for m in 0..=j {
                let binom = binomial(j, m);
                let coef = a.mul(&cpow).mul_rational(&binom);
                out.add_term(i + k * m, j - m, coef);
                if m < j {
                    cpow = cpow.mul(c);
                }
            }
        }
        out
    }

    /// Replace the first variable by (itself + c * second^k).
    pub fn triangular_change_x(&self, c: &FieldElement, k: u32) -> Polynomial {
        self.swap_vars().triangular_change(c, k, TriangularAxis::YByX).swap_vars()
    }

    /// Pullback of f under (x, y) -> (u^{s11} v^{s12}, u^{s21} v^{s22}),
    /// written as u^r v^s * g with u and v not dividing g.
    /// Returns (r, s, g); r equals the minimum over the support of
    /// s11*i + s21*j (the d-value of the first column).
    pub fn substitute_monomial(&self, sigma: [[i64; 2]; 2]) -> Result<(i64, i64, Polynomial)> {
        let det = sigma[0][0] * sigma[1][1] - sigma[0][1] * sigma[1][0];
        if det.abs() != 1 {
            return Err(Error::NotUnimodular);
        }
        if sigma.iter().flatten().any(|&e| e < 0) {
            return Err(Error::NotUnimodular);
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut mapped: Vec<(i64, i64, FieldElement)> = Vec::with_capacity(self.terms.len());
        for (&(i, j), c) in &self.terms {
            let (i, j) = (i as i64, j as i64);
            let u = sigma[0][0] * i + sigma[1][0] * j;
            let v = sigma[0][1] * i + sigma[1][1] * j;
            mapped.push((u, v, c.clone()));
        }
        let r = mapped.iter().map(|&(u, _, _)| u).min().unwrap();
        let s = mapped.iter().map(|&(_, v, _)| v).min().unwrap();
        let mut g = Polynomial::zero(&self.tower);
        for (u, v, c) in mapped {
            g.add_term((u - r) as u32, (v - s) as u32, c);
        }
        Ok((r, s, g))
    }

    /// View f as a polynomial in y with univariate (in x) coefficients.
    pub fn as_y_polys(&self) -> Vec<UniPoly> {
        let dy = self.terms.keys().map(|&(_, j)| j).max().map(|d| d as usize + 1).unwrap_or(0);
        let dx = self.terms.keys().map(|&(i, _)| i).max().map(|d| d as usize + 1).unwrap_or(0);
        let mut rows = vec![vec![FieldElement::zero(&self.tower); dx]; dy];
        for (&(i, j), c) in &self.terms {
            rows[j as usize][i as usize] = c.clone();
        }
        rows.into_iter().map(|r| UniPoly::from_coeffs(self.tower.clone(), r)).collect()
    }

    pub fn from_y_polys(tower: &Tower, rows: &[UniPoly]) -> Polynomial {
        let mut out = Polynomial::zero(tower);
        for (j, row) in rows.iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Classical Sylvester resultant with respect to y (f rows first, then g
    /// rows), computed by evaluation and interpolation in x. The result is a
    /// univariate polynomial in x over the tower.
    pub fn resultant_y(&self, other: &Polynomial) -> Result<UniPoly> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let m = self.degree_y().unwrap() as usize;
        let n = other.degree_y().unwrap() as usize;
        if m == 0 && n == 0 {
            return Ok(UniPoly::one(&self.tower));
        }
        if m == 0 {
            // Res(a(x), g) = a(x)^{deg_y g}
            let a = self.eval_y_zero_row();
            return Ok(a.pow(n as u32));
        }
        if n == 0 {
            let b = other.eval_y_zero_row();
            let r = b.pow(m as u32);
            // Sign: (-1)^{m*n} = 1 when n = 0.
            return Ok(r);
        }
        let f_rows = self.as_y_polys();
        let g_rows = other.as_y_polys();
        // Degree bound for the resultant in x.
        let dxf = self.degree_x().unwrap_or(0) as usize;
        let dxg = other.degree_x().unwrap_or(0) as usize;
        let bound = n * dxf + m * dxg + 1;
        let mut nodes: Vec<Q> = vec![];
        let mut values: Vec<FieldElement> = vec![];
        let mut x0: i64 = 0;
        while nodes.len() < bound {
            let node = Q::from_integer(x0.into());
            let fe: Vec<FieldElement> = f_rows.iter().map(|p| p.eval_rational(&node)).collect();
            let ge: Vec<FieldElement> = g_rows.iter().map(|p| p.eval_rational(&node)).collect();
            values.push(sylvester_det(&self.tower, &fe, m, &ge, n)?);
            nodes.push(node);
            x0 += 1;
        }
        Ok(interpolate(&self.tower, &nodes, &values))
    }

    /// Coefficient row of a y-degree-0 polynomial, as a univariate in x.
    fn eval_y_zero_row(&self) -> UniPoly {
        let rows = self.as_y_polys();
        rows.into_iter().next().unwrap_or_else(|| UniPoly::zero(&self.tower))
    }

    /// Greatest common divisor of two bivariate polynomials (monic-ish, up to
    /// a unit), via content/primitive-part with a primitive PRS in y.
    pub fn gcd_bivariate(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let (ca, pa) = self.content_primitive()?;
        let (cb, pb) = other.content_primitive()?;
        let cg = ca.gcd(&cb)?;
        let pg = primitive_gcd(&self.tower, pa, pb)?;
        let mut out = Polynomial::zero(&self.tower);
        for (j, row) in pg.iter().enumerate() {
            let prod = row.mul(&cg);
            for (i, c) in prod.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        Ok(out)
    }

    /// Split into (content in x, primitive rows in y).
    fn content_primitive(&self) -> Result<(UniPoly, Vec<UniPoly>)> {
        let rows = self.as_y_polys();
        let mut content = UniPoly::zero(&self.tower);
        for r in &rows {
            if !r.is_zero() {
                content = content.gcd(r)?;
            }
        }
        let prim: Result<Vec<UniPoly>> = rows
            .iter()
            .map(|r| if r.is_zero() { Ok(r.clone()) } else { r.div_exact(&content) })
            .collect();
        Ok((content, prim?))
    }

    /// True if the polynomial has no repeated (non-unit) factor.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(true);
        }
        let fx = self.derivative_x();
        let fy = self.derivative_y();
        let g1 = if fx.is_zero() { self.clone() } else { self.gcd_bivariate(&fx)? };
        let g2 = if fy.is_zero() { g1 } else { g1.gcd_bivariate(&fy)? };
        Ok(g2.total_degree() == Some(0))
    }

    /// d(P; f): the minimum of the weight functional over the support.
    pub fn d_value(&self, p: (i64, i64)) -> Option<i64> {
        self.terms.keys().map(|&(i, j)| p.0 * i as i64 + p.1 * j as i64).min()
    }
}

fn binomial(n: u32, k: u32) -> Q {
    let mut num = Q::one();
    for i in 0..k {
        num = num * Q::from_integer(((n - i) as i64).into())
            / Q::from_integer(((i + 1) as i64).into());
    }
    num
}

/// Determinant of the (m+n) x (m+n) Sylvester matrix with the f block first.
/// `fe[j]` is the coefficient of y^j in f evaluated at the node, similarly ge.
fn sylvester_det(
    tower: &Tower,
    fe: &[FieldElement],
    m: usize,
    ge: &[FieldElement],
    n: usize,
) -> Result<FieldElement> {
    let size = m + n;
    let zero = FieldElement::zero(tower);
    let mut mat = vec![vec![zero.clone(); size]; size];
    // Row i (0-based, i < n): coefficients of y^{m+n-1-...}: classical layout
    // with descending powers: row i has f_m ... f_0 starting at column i.
    for i in 0..n {
        for k in 0..=m {
            // coefficient of y^{m-k}
            mat[i][i + k] = fe.get(m - k).cloned().unwrap_or_else(|| zero.clone());
        }
    }
    for i in 0..m {
        for k in 0..=n {
            mat[n + i][i + k] = ge.get(n - k).cloned().unwrap_or_else(|| zero.clone());
        }
    }
    // Gaussian elimination over the field with row pivoting.
    let mut det = FieldElement::one(tower);
    let mut neg = false;
    for col in 0..size {
        let mut pivot = None;
        for row in col..size {
            if !mat[row][col].is_zero() {
                pivot = Some(row);
                break;
            }
        }
        let Some(p) = pivot else {
            return Ok(FieldElement::zero(tower));
        };
        if p != col {
            mat.swap(p, col);
            neg = !neg;
        }
        let pv = mat[col][col].clone();
        det = det.mul(&pv);
        let pv_inv = pv.inv()?;
        for row in col + 1..size {
            if mat[row][col].is_zero() {
                continue;
            }
            let factor = mat[row][col].mul(&pv_inv);
            for c2 in col..size {
                let t = factor.mul(&mat[col][c2]);
                mat[row][c2] = mat[row][c2].sub(&t);
            }
        }
    }
    if neg {
        det = det.neg();
    }
    Ok(det)
}

/// Lagrange interpolation with distinct rational nodes and tower values.
fn interpolate(tower: &Tower, nodes: &[Q], values: &[FieldElement]) -> UniPoly {
    let mut acc = UniPoly::zero(tower);
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one(tower);
        let mut denom = Q::one();
        for (j, xj) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            // (t - xj)
            let lin = UniPoly::from_rationals(tower, &[-xj.clone(), Q::one()]);
            basis = basis.mul(&lin);
            denom *= &nodes[i] - xj;
        }
        let scale = v.mul_rational(&denom.recip());
        acc = acc.add(&basis.mul_elem(&scale));
    }
    acc
}

/// Primitive PRS gcd of two nonzero row-vectors viewed as polynomials in y
/// over tower[x]; rows must be primitive. Returns primitive gcd rows.
fn primitive_gcd(tower: &Tower, a: Vec<UniPoly>, b: Vec<UniPoly>) -> Result<Vec<UniPoly>> {
    let trim = |mut v: Vec<UniPoly>| {
        while v.last().map(|p| p.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    };
    let mut a = trim(a);
    let mut b = trim(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // Pseudo-remainder of a by b.
        let r = pseudo_rem(tower, &a, &b)?;
        let r = trim(r);
        let r = make_primitive(tower, r)?;
        a = b;
        b = r;
    }
    make_primitive(tower, a)
}

fn pseudo_rem(_tower: &Tower, a: &[UniPoly], b: &[UniPoly]) -> Result<Vec<UniPoly>> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    if da < db {
        return Ok(a.to_vec());
    }
    let lcb = b.last().unwrap().clone();
    let mut rem: Vec<UniPoly> = a.to_vec();
    for _ in 0..=(da - db) {
        let cur_deg = rem.len().checked_sub(1);
        let Some(cd) = cur_deg else { break };
        if cd < db {
            break;
        }
        let lead = rem.last().unwrap().clone();
        if lead.is_zero() {
            rem.pop();
            continue;
        }
        // rem = lcb * rem - lead * y^{cd-db} * b
        for r in rem.iter_mut() {
            *r = r.mul(&lcb);
        }
        for (k, bk) in b.iter().enumerate() {
            let t = lead.mul(bk);
            rem[cd - db + k] = rem[cd - db + k].sub(&t);
        }
        while rem.last().map(|p| p.is_zero()).unwrap_or(false) {
            rem.pop();
        }
    }
    Ok(rem)
}

fn make_primitive(tower: &Tower, rows: Vec<UniPoly>) -> Result<Vec<UniPoly>> {
    if rows.is_empty() {
        return Ok(rows);
    }
    let mut content = UniPoly::zero(tower);
    for r in &rows {
        if !r.is_zero() {
            content = content.gcd(r)?;
        }
    }
    if content.is_zero() || content.is_constant() {
        return Ok(rows);
    }
    rows.iter()
        .map(|r| if r.is_zero() { Ok(r.clone()) } else { r.div_exact(&content) })
        .collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Graded-lex descending for stable, readable output.
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let mut parts = vec![];
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let mut mono = String::new();
            if i > 0 {
                mono.push('x');
                if i > 1 {
                    mono.push_str(&format!("^{}", i));
                }
            }
            if j > 0 {
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push('y');
                if j > 1 {
                    mono.push_str(&format!("^{}", j));
                }
            }
            let part = match c.to_rational() {
                Some(q) => {
                    if mono.is_empty() {
                        rational_str(&q)
                    } else if q.is_one() {
                        mono
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
            parts.push(part);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;
    use num_traits::Zero;

    fn tw() -> Tower {
        Tower::rationals(2)
    }

    #[test]
    fn substitute_monomial_cusp() {
        let t = tw();
        let f = parse_polynomial("y^2-x^3", &t).unwrap();
        let (r, s, g) = f.substitute_monomial([[2, 1], [3, 2]]).unwrap();
        assert_eq!((r, s), (6, 3));
        let expect = parse_polynomial("y-1", &t).unwrap(); // v - 1 in chart coords
        assert_eq!(g, expect);
    }

    #[test]
    fn substitute_monomial_degenerate_example() {
        let t = tw();
        let f = parse_polynomial("(x^3+y^2)^2+x^3*y^3", &t).unwrap();
        let (r, _s, _g) = f.substitute_monomial([[2, 1], [3, 2]]).unwrap();
        assert_eq!(r, 12);
    }

    #[test]
    fn substitute_monomial_rejects_non_unimodular() {
        let t = tw();
        let f = parse_polynomial("x+y", &t).unwrap();
        assert!(matches!(f.substitute_monomial([[2, 0], [0, 2]]), Err(Error::NotUnimodular)));
    }

    #[test]
    fn triangular_change_example() {
        let t = tw();
        // f = y^2 - 2x^2 y + x^4 + x^5, y -> y + x^2 gives y^2 + x^5
        let f = parse_polynomial("y^2-2*x^2*y+x^4+x^5", &t).unwrap();
        let c = FieldElement::from_int(&t, 1);
        let g = f.triangular_change(&c, 2, TriangularAxis::YByX);
        assert_eq!(g, parse_polynomial("y^2+x^5", &t).unwrap());
        // c = 0 is the identity
        let z = FieldElement::zero(&t);
        assert_eq!(f.triangular_change(&z, 3, TriangularAxis::YByX), f);
        // round trip
        let back = g.triangular_change(&c.neg(), 2, TriangularAxis::VByU);
        assert_eq!(back, f);
    }

    #[test]
    fn resultant_sylvester_convention() {
        let t = tw();
        let f = parse_polynomial("y^2-x^3", &t).unwrap();
        let g = parse_polynomial("y^2+x^3", &t).unwrap();
        let r = f.resultant_y(&g).unwrap();
        // 4 x^6 by direct 4x4 determinant expansion
        let mut expect = vec![Q::zero(); 7];
        expect[6] = Q::from_integer(4.into());
        assert_eq!(r, UniPoly::from_rationals(&t, &expect));
        // common factor => 0
        let f2 = parse_polynomial("y-x", &t).unwrap();
        assert!(f2.resultant_y(&f2).unwrap().is_zero());
        // Res_y(y, y+x) = x
        let a = parse_polynomial("y", &t).unwrap();
        let b = parse_polynomial("y+x", &t).unwrap();
        assert_eq!(a.resultant_y(&b).unwrap(), UniPoly::from_ints(&t, &[0, 1]));
    }

    #[test]
    fn squarefree_detection() {
        let t = tw();
        let f = parse_polynomial("(y-x^2)^2", &t).unwrap();
        assert!(!f.is_squarefree().unwrap());
        let g = parse_polynomial("(y-x^2)*(y+x^2)", &t).unwrap();
        assert!(g.is_squarefree().unwrap());
        let h = parse_polynomial("x*y", &t).unwrap();
        assert!(h.is_squarefree().unwrap());
        let k = parse_polynomial("x^2*y", &t).unwrap();
        assert!(!k.is_squarefree().unwrap());
    }
}
