//! Newton polygon and boundary, face functions, degeneracy tests,
//! multiplicity/tangent-cone analysis, and the Newton-number Milnor formula
//! for convenient non-degenerate germs.

use crate::algebra::factor::{adjoin_irreducible, sort_factors};
use crate::algebra::{FieldElement, Polynomial, UniPoly};
use crate::error::{Error, Result};

/// One root cluster of a face: a squarefree factor of the reduced face
/// polynomial, all of whose roots appear with the same multiplicity.
/// The factor is monic in the variable `T` carrying `x^b y^{-a}`; the roots
/// `T0` correspond to face-function factors `(y^a + gamma x^b)` with
/// `gamma = -1/T0`.
#[derive(Clone, Debug)]
pub struct RootCluster {
    pub factor: UniPoly,
    pub multiplicity: u32,
}

impl RootCluster {
    /// Number of distinct roots in the cluster.
    pub fn root_count(&self) -> usize {
        self.factor.degree().unwrap_or(0)
    }

    /// The gamma values (face-function factor coefficients) for roots that
    /// lie in the towerps; irrational clusters yield None.
    pub fn gammas_in_tower(&self) -> Result<Option<Vec<FieldElement>>> {
        if self.factor.degree() != Some(1) {
            let roots = crate::algebra::roots_in_tower(&self.factor)?;
            if roots.len() != self.factor.degree().unwrap_or(0) {
                return Ok(None);
            }
            let mut out = vec![];
            for (t0, _) in roots {
                out.push(FieldElement::one(t0.tower()).neg().div(&t0)?);
            }
            return Ok(Some(out));
        }
        let t0 = self.factor.coeff(0).neg();
        Ok(Some(vec![FieldElement::one(t0.tower()).neg().div(&t0)?]))
    }
}

/// A compact face of the Newton boundary.
#[derive(Clone, Debug)]
pub struct Face {
    /// Endpoints (i1,j1), (i2,j2) with i1 < i2 and j1 > j2.
    pub endpoints: ((i64, i64), (i64, i64)),
    /// Primitive weight vector P = (a, b), a, b > 0, gcd = 1.
    pub weight: (i64, i64),
    /// d(P; f).
    pub d_value: i64,
    /// Prefactor exponents (r, s): face function = c x^r y^s * product.
    pub prefactor: (i64, i64),
    /// Root clusters of the reduced face polynomial, in deterministic order.
    pub clusters: Vec<RootCluster>,
}

impl Face {
    /// Lattice length: the number of face-function roots counted with
    /// multiplicity.
    pub fn lattice_length(&self) -> i64 {
        self.clusters.iter().map(|c| c.root_count() as i64 * c.multiplicity as i64).sum()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.clusters.iter().all(|c| c.multiplicity == 1)
    }

    /// Number of distinct roots.
    pub fn distinct_roots(&self) -> i64 {
        self.clusters.iter().map(|c| c.root_count() as i64).sum()
    }
}

/// The Newton polygon data of a nonzero germ.
#[derive(Clone, Debug)]
pub struct NewtonPolygon {
    pub support: Vec<(i64, i64)>,
    /// Boundary vertices ordered by increasing i.
    pub vertices: Vec<(i64, i64)>,
    pub faces: Vec<Face>,
    pub convenient: bool,
}

/// d(P; f): minimum of the weight functional over the support.
pub fn d_of(p: (i64, i64), f: &Polynomial) -> Result<i64> {
    f.d_value(p).ok_or(Error::ZeroPolynomial)
}

/// The face or vertex on which a positive weight vector attains its minimum.
#[derive(Clone, Debug)]
pub enum FaceOrVertex {
    Face(Face),
    Vertex((i64, i64)),
}

pub fn face_of(p: (i64, i64), f: &Polynomial) -> Result<FaceOrVertex> {
    assert!(p.0 > 0 && p.1 > 0, "weight vector must be positive");
    let poly = newton_boundary(f)?;
    for face in &poly.faces {
        let (a, b) = face.weight;
        if (a, b) == primitive(p) {
            return Ok(FaceOrVertex::Face(face.clone()));
        }
    }
    // Otherwise the minimizing set is the vertex between the adjacent faces.
    let d = d_of(p, f)?;
    let v = poly
        .vertices
        .iter()
        .find(|&&(i, j)| p.0 * i + p.1 * j == d)
        .copied()
        .expect("some vertex attains the minimum");
    Ok(FaceOrVertex::Vertex(v))
}

fn primitive(p: (i64, i64)) -> (i64, i64) {
    let g = gcd64(p.0.abs(), p.1.abs());
    if g == 0 {
        p
    } else {
        (p.0 / g, p.1 / g)
    }
}

pub(crate) fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd64(b, a % b)
    }
}

/// Compute the Newton boundary (compact faces of the Newton polygon) with
/// eager face-function root data.
pub fn newton_boundary(f: &Polynomial) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support: Vec<(i64, i64)> = f.support().iter().map(|&(i, j)| (i as i64, j as i64)).collect();
    let vertices = lower_hull(&support);
    let convenient = vertices.first().map(|v| v.0 == 0).unwrap_or(false)
        && vertices.last().map(|v| v.1 == 0).unwrap_or(false);
    let mut faces = vec![];
    for w in vertices.windows(2) {
        faces.push(build_face(f, w[0], w[1])?);
    }
    Ok(NewtonPolygon { support, vertices, faces, convenient })
}

/// Vertices of the lower-left hull of support + positive quadrant, ordered
/// by increasing i (decreasing j).
fn lower_hull(support: &[(i64, i64)]) -> Vec<(i64, i64)> {
    // Pareto-minimal staircase first.
    let mut pts: Vec<(i64, i64)> = support.to_vec();
    pts.sort();
    let mut minimal: Vec<(i64, i64)> = vec![];
    for &(i, j) in &pts {
        if minimal.iter().all(|&(a, b)| !(a <= i && b <= j)) {
            minimal.retain(|&(a, b)| !(i <= a && j <= b));
            minimal.push((i, j));
        }
    }
    minimal.sort();
    if minimal.len() <= 1 {
        return minimal;
    }
    // Monotone chain on the staircase points. Walking by increasing i, the
    // boundary slopes strictly increase, so the middle point of any
    // non-left turn (cross <= 0) is not a vertex.
    let mut hull: Vec<(i64, i64)> = vec![];
    for &p in &minimal {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

fn build_face(f: &Polynomial, p1: (i64, i64), p2: (i64, i64)) -> Result<Face> {
    let width = p2.0 - p1.0;
    let height = p1.1 - p2.1;
    debug_assert!(width > 0 && height > 0);
    let g = gcd64(width, height);
    let weight = (height / g, width / g); // P = (a, b)
    let d_value = weight.0 * p1.0 + weight.1 * p1.1;
    let prefactor = (p1.0, p2.1);
    // Reduced face polynomial q(T): coefficient of T^t is the coefficient
    // of x^{i1 + b t} y^{j1 - a t}.
    let (a, b) = weight;
    let len = g as usize;
    let tower = f.tower().clone();
    let mut coeffs = vec![FieldElement::zero(&tower); len + 1];
    for (t, c) in coeffs.iter_mut().enumerate() {
        let i = p1.0 + b * t as i64;
        let j = p1.1 - a * t as i64;
        if i >= 0 && j >= 0 {
            *c = f.coeff(i as u32, j as u32);
        }
    }
    let q = UniPoly::from_coeffs(tower.clone(), coeffs);
    debug_assert_eq!(q.degree(), Some(len));
    debug_assert!(!q.coeff(0).is_zero());
    let mut clusters = vec![];
    for (factor, m) in q.squarefree_factor()? {
        clusters.push(RootCluster { factor: factor.monic(), multiplicity: m });
    }
    clusters.sort_by(|x, y| {
        x.multiplicity.cmp(&y.multiplicity).then_with(|| {
            x.factor
                .degree()
                .cmp(&y.factor.degree())
                .then_with(|| cmp_unipoly(&x.factor, &y.factor))
        })
    });
    Ok(Face { endpoints: (p1, p2), weight, d_value, prefactor, clusters })
}

pub(crate) fn cmp_unipoly(a: &UniPoly, b: &UniPoly) -> std::cmp::Ordering {
    let n = a.coeffs().len().max(b.coeffs().len());
    for i in 0..n {
        let o = a.coeff(i).cmp_coords(&b.coeff(i));
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}

/// True iff every root of the face's reduced polynomial is simple.
pub fn is_nondegenerate(f: &Polynomial, face: &Face) -> bool {
    let _ = f;
    face.is_nondegenerate()
}

/// True iff the germ is non-degenerate on every compact face.
pub fn is_nondegenerate_germ(f: &Polynomial) -> Result<bool> {
    Ok(newton_boundary(f)?.faces.iter().all(|fa| fa.is_nondegenerate()))
}

/// Multiplicity at the origin and the linear factorization of the tangent
/// cone over the tower (extending it by at most one root when permitted).
/// Returns (m, factors) where each factor is a linear form with multiplicity
/// and the multiplicities sum to m.
pub fn multiplicity_tangent_cone(f: &Polynomial) -> Result<(u32, Vec<(Polynomial, u32)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.vanishes_at_origin() {
        return Err(Error::NotVanishing);
    }
    let m = f.mult_at_origin().unwrap();
    let lead = f.leading_form();
    let mut tower = f.tower().clone();
    // lead = c * x^p * y^q * h(x,y), h with both extreme terms.
    let p = lead.x_factor_order();
    let q = lead.y_factor_order();
    let h = lead.shift_down(p, q);
    let mut factors: Vec<(Polynomial, u32)> = vec![];
    if p > 0 {
        factors.push((Polynomial::var_x(&tower), p));
    }
    if q > 0 {
        factors.push((Polynomial::var_y(&tower), q));
    }
    // Dehomogenize: u(t) = h(1, t); factor into linears, adjoining if needed.
    let deg = h.total_degree().unwrap_or(0);
    if deg > 0 {
        // h is homogeneous, so each y-exponent occurs with one x-exponent.
        let mut cs = vec![FieldElement::zero(&tower); deg as usize + 1];
        for (&(_i, j), c) in h.terms() {
            cs[j as usize] = c.clone();
        }
        let mut u = UniPoly::from_coeffs(tower.clone(), cs);
        // Repeatedly pull out roots in the (possibly extended) tower.
        let mut mults: Vec<(FieldElement, u32)> = vec![];
        loop {
            let mut nonlinear: Vec<(UniPoly, u32)> = vec![];
            for (fac, mm) in crate::algebra::factor_with_multiplicity(&u)? {
                if fac.degree() == Some(1) {
                    let root = fac.coeff(0).neg().div(&fac.coeff(1))?;
                    mults.push((root, mm));
                } else {
                    nonlinear.push((fac, mm));
                }
            }
            if nonlinear.is_empty() {
                break;
            }
            // Adjoin a root of the first nonlinear factor (deterministic
            // order) and refactor the rest over the extended tower.
            let mut sorted: Vec<UniPoly> = nonlinear.iter().map(|(f2, _)| f2.clone()).collect();
            sort_factors(&mut sorted);
            let (t2, _root) = adjoin_irreducible(&tower, &sorted[0])?;
            let mut unew = UniPoly::one(&t2);
            for (fac, mm) in &nonlinear {
                unew = unew.mul(&fac.lift(&t2).pow(*mm));
            }
            mults = mults.into_iter().map(|(r, mm)| (r.lift(&t2), mm)).collect();
            tower = t2;
            u = unew;
        }
        for (root, mm) in mults {
            // factor y - root * x (tangent line through the origin)
            let lin = Polynomial::var_y(&tower).sub(&Polynomial::monomial(
                &tower,
                1,
                0,
                root.neg(),
            ));
            factors.push((lin, mm));
        }
    }
    // Lift earlier factors into the final tower.
    let factors = factors
        .into_iter()
        .map(|(p2, m2)| (p2.lift(&tower), m2))
        .collect::<Vec<_>>();
    debug_assert_eq!(factors.iter().map(|&(_, m2)| m2).sum::<u32>(), m);
    Ok((m, factors))
}

/// The tangent-cone profile: the multiset of line multiplicities, without
/// splitting the field (partition of the multiplicity at the origin).
pub fn tangent_profile(f: &Polynomial) -> Result<Vec<u32>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = f.leading_form();
    let p = lead.x_factor_order();
    let q = lead.y_factor_order();
    let h = lead.shift_down(p, q);
    let mut profile = vec![];
    if p > 0 {
        profile.push(p);
    }
    if q > 0 {
        profile.push(q);
    }
    let deg = h.total_degree().unwrap_or(0);
    if deg > 0 {
        let tower = f.tower().clone();
        let mut cs = vec![FieldElement::zero(&tower); deg as usize + 1];
        for (&(_i, j), c) in h.terms() {
            cs[j as usize] = c.clone();
        }
        let u = UniPoly::from_coeffs(tower, cs);
        for (fac, m) in u.squarefree_factor()? {
            for _ in 0..fac.degree().unwrap_or(0) {
                profile.push(m);
            }
        }
    }
    profile.sort_unstable_by(|a, b| b.cmp(a));
    Ok(profile)
}

/// Kouchnirenko's Newton number mu = 2V - a - b + 1 for a convenient germ
/// that is non-degenerate on every face.
pub fn newton_number_mu(f: &Polynomial) -> Result<i64> {
    let poly = newton_boundary(f)?;
    if !poly.convenient {
        return Err(Error::NotConvenient);
    }
    if !poly.faces.iter().all(|fa| fa.is_nondegenerate()) {
        return Err(Error::DegenerateFace);
    }
    let a = poly.vertices.last().unwrap().0; // x-intercept
    let b = poly.vertices.first().unwrap().1; // y-intercept
    // Twice the area between the boundary and the axes, via the shoelace
    // formula on (0,0), (a,0), vertices reversed, (0,b).
    let mut path: Vec<(i64, i64)> = vec![(0, 0), (a, 0)];
    for v in poly.vertices.iter().rev() {
        path.push(*v);
    }
    // last vertex is (0, b); polygon closes back to (0,0)
    let mut twice_area = 0i64;
    for w in 0..path.len() {
        let (x1, y1) = path[w];
        let (x2, y2) = path[(w + 1) % path.len()];
        twice_area += x1 * y2 - x2 * y1;
    }
    let twice_v = twice_area.abs();
    Ok(twice_v - a - b + 1)
}

/// Reconstruct the face function from the stored root data and compare it
/// with the actual face terms of `f`. This certifies both the prefactor
/// bookkeeping and the weighted homogeneity f_P(t^a x, t^b y) = t^d f_P.
pub fn face_function_reconstructs(f: &Polynomial, face: &Face) -> bool {
    let ((i1, j1), (i2, j2)) = face.endpoints;
    let (a, b) = face.weight;
    let k = face.lattice_length();
    let mut q = UniPoly::one(f.tower());
    for cl in &face.clusters {
        q = q.mul(&cl.factor.pow(cl.multiplicity));
    }
    // Clusters are monic; the unit is the coefficient at the right endpoint.
    let unit = f.coeff(i2 as u32, j2 as u32);
    let q = q.mul_elem(&unit);
    for t in 0..=k {
        let i = i1 + b * t;
        let j = j1 - a * t;
        if f.coeff(i as u32, j as u32) != q.coeff(t as usize) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, Tower, Q};

    fn tw() -> Tower {
        Tower::rationals(2)
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &tw()).unwrap()
    }

    #[test]
    fn cusp_boundary() {
        let f = p("y^2-x^3");
        let nb = newton_boundary(&f).unwrap();
        assert_eq!(nb.faces.len(), 1);
        let face = &nb.faces[0];
        assert_eq!(face.endpoints, ((0, 2), (3, 0)));
        assert_eq!(face.weight, (2, 3));
        assert_eq!(face.d_value, 6);
        assert!(face.is_nondegenerate());
        assert!(nb.convenient);
    }

    #[test]
    fn interior_point_face() {
        // x^2 + t x y^2 + y^4 with t = 1: one face containing (1,2)
        let f = p("x^2+x*y^2+y^4");
        let nb = newton_boundary(&f).unwrap();
        assert_eq!(nb.faces.len(), 1);
        assert_eq!(nb.faces[0].endpoints, ((0, 4), (2, 0)));
        assert_eq!(nb.faces[0].weight, (2, 1));
        assert!(nb.faces[0].is_nondegenerate());
        // t = 2 is degenerate
        let g = p("x^2+2*x*y^2+y^4");
        let nbg = newton_boundary(&g).unwrap();
        assert!(!nbg.faces[0].is_nondegenerate());
    }

    #[test]
    fn monomial_has_no_faces() {
        let f = p("x^3*y");
        let nb = newton_boundary(&f).unwrap();
        assert!(nb.faces.is_empty());
        assert_eq!(nb.vertices, vec![(3, 1)]);
        assert!(!nb.convenient);
    }

    #[test]
    fn d_of_and_face_of() {
        let f = p("y^2-x^3");
        assert_eq!(d_of((1, 1), &f).unwrap(), 2);
        match face_of((1, 1), &f).unwrap() {
            FaceOrVertex::Vertex(v) => assert_eq!(v, (0, 2)),
            _ => panic!("expected vertex"),
        }
        assert_eq!(d_of((2, 3), &f).unwrap(), 6);
        match face_of((2, 3), &f).unwrap() {
            FaceOrVertex::Face(face) => assert_eq!(face.d_value, 6),
            _ => panic!("expected face"),
        }
    }

    #[test]
    fn degenerate_tower_example() {
        // (x^3 + y^2)^2 + x^3 y^3 is degenerate on its single face
        let f = p("(x^3+y^2)^2+x^3*y^3");
        let nb = newton_boundary(&f).unwrap();
        assert_eq!(nb.faces.len(), 1);
        let face = &nb.faces[0];
        assert_eq!(face.weight, (2, 3));
        assert!(!face.is_nondegenerate());
        assert_eq!(face.lattice_length(), 2);
        assert_eq!(face.distinct_roots(), 1);
    }

    #[test]
    fn tangent_cone_examples() {
        // leading form x*y: two distinct lines
        let f = p("x*y+y^5+x^5");
        let (m, factors) = multiplicity_tangent_cone(&f).unwrap();
        assert_eq!(m, 2);
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|&(_, mm)| mm == 1));
        // y^2 - x^3: double line y
        let g = p("y^2-x^3");
        let (m, factors) = multiplicity_tangent_cone(&g).unwrap();
        assert_eq!(m, 2);
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].1, 2);
        // x^2 y: partition [2,1]
        let h = p("x^2*y+y^7+x^9");
        let (m, factors) = multiplicity_tangent_cone(&h).unwrap();
        assert_eq!(m, 3);
        let mut mults: Vec<u32> = factors.iter().map(|&(_, mm)| mm).collect();
        mults.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(mults, vec![2, 1]);
        assert_eq!(tangent_profile(&h).unwrap(), vec![2, 1]);
        // irrational split: x*y^3 + x^3*y = x y (y^2 + x^2): needs i
        let k = p("x*y^3+x^3*y+y^9+x^9");
        let (m, factors) = multiplicity_tangent_cone(&k).unwrap();
        assert_eq!(m, 4);
        assert_eq!(factors.len(), 4);
        assert_eq!(tangent_profile(&k).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn newton_number_examples() {
        assert_eq!(newton_number_mu(&p("y^2-x^3")).unwrap(), 2);
        assert_eq!(newton_number_mu(&p("x^2+y^2")).unwrap(), 1);
        for n in 2..=8u32 {
            for m in 2..=8u32 {
                let f = p(&format!("x^{}+y^{}", n, m));
                assert_eq!(newton_number_mu(&f).unwrap(), (n as i64 - 1) * (m as i64 - 1));
            }
        }
        assert!(matches!(newton_number_mu(&p("y^2-x^2*y")), Err(Error::NotConvenient)));
        assert!(matches!(
            newton_number_mu(&p("(y+x)^2+x^5")),
            Err(Error::DegenerateFace)
        ));
    }

    #[test]
    fn face_widths_reconstruct_boundary() {
        let f = p("y^5+x^2*y^2+x^5");
        let nb = newton_boundary(&f).unwrap();
        let mut cur = *nb.vertices.first().unwrap();
        for face in &nb.faces {
            let (a, b) = face.weight;
            let len = face.lattice_length();
            cur = (cur.0 + b * len, cur.1 - a * len);
        }
        assert_eq!(cur, *nb.vertices.last().unwrap());
    }

    #[test]
    fn nondegenerate_scaling_invariance() {
        let f = p("y^3+x^2*y+x^4");
        let nb = newton_boundary(&f).unwrap();
        let scaled = {
            let mut g = Polynomial::zero(&tw());
            for (&(i, j), c) in f.terms() {
                // x -> 2x, y -> 3y
                let factor = Q::from_integer(2.into()).pow(i as i32)
                    * Q::from_integer(3.into()).pow(j as i32);
                g.add_term(i, j, c.mul_rational(&factor));
            }
            g
        };
        let nb2 = newton_boundary(&scaled).unwrap();
        for (a, b) in nb.faces.iter().zip(nb2.faces.iter()) {
            assert_eq!(a.is_nondegenerate(), b.is_nondegenerate());
        }
    }
}
