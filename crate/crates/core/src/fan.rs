//! Dual Newton diagram and the canonical regular simplicial cone
//! subdivision, with unimodular cone charts.

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::newton::{gcd64, newton_boundary, NewtonPolygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    /// E1 = (1,0) or E2 = (0,1).
    Axis,
    /// Weight vector of a face of the Newton boundary.
    FaceWeight,
    /// Inserted to make the subdivision regular.
    Inserted,
}

/// An ordered list of primitive vectors from E1 = (1,0) to E2 = (0,1), with
/// det(P_i, P_{i+1}) > 0 between consecutive entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub vertices: Vec<(i64, i64)>,
    pub markers: Vec<VertexKind>,
}

pub fn det2(p: (i64, i64), q: (i64, i64)) -> i64 {
    p.0 * q.1 - p.1 * q.0
}

impl Subdivision {
    pub fn is_regular(&self) -> bool {
        self.vertices.windows(2).all(|w| det2(w[0], w[1]) == 1)
    }

    /// Interior vertices (everything except E1, E2).
    pub fn interior(&self) -> &[(i64, i64)] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn interior_markers(&self) -> &[VertexKind] {
        &self.markers[1..self.markers.len() - 1]
    }
}

/// The dual Newton diagram: E1, the face weight vectors in slope order, E2.
pub fn dual_newton_diagram(f: &Polynomial) -> Result<Subdivision> {
    let nb = newton_boundary(f)?;
    Ok(dual_of_boundary(&nb))
}

pub fn dual_of_boundary(nb: &NewtonPolygon) -> Subdivision {
    let mut vertices = vec![(1, 0)];
    let mut markers = vec![VertexKind::Axis];
    for face in &nb.faces {
        vertices.push(face.weight);
        markers.push(VertexKind::FaceWeight);
    }
    vertices.push((0, 1));
    markers.push(VertexKind::Axis);
    Subdivision { vertices, markers }
}

/// The unique canonical regular simplicial cone subdivision containing the
/// input vertices: between adjacent vectors with determinant > 1, insert
/// exactly the primitive lattice vectors on the compact boundary of the
/// convex hull of the nonzero lattice points of the cone.
pub fn canonical_subdivision(s: &Subdivision) -> Subdivision {
    let mut vertices = vec![];
    let mut markers = vec![];
    for (idx, w) in s.vertices.windows(2).enumerate() {
        vertices.push(w[0]);
        markers.push(s.markers[idx]);
        for v in hull_path_between(w[0], w[1]) {
            vertices.push(v);
            markers.push(VertexKind::Inserted);
        }
    }
    vertices.push(*s.vertices.last().unwrap());
    markers.push(*s.markers.last().unwrap());
    Subdivision { vertices, markers }
}

/// Lattice points strictly between P and Q on the compact hull boundary of
/// Cone(P,Q) ∩ Z^2 \ {0}, in angular order.
fn hull_path_between(p: (i64, i64), q: (i64, i64)) -> Vec<(i64, i64)> {
    let d = det2(p, q);
    debug_assert!(d > 0, "cone must be positively oriented");
    if d == 1 {
        return vec![];
    }
    // All candidate lattice points lie in the triangle O, P, Q.
    let xmax = p.0.max(q.0).max(0);
    let ymax = p.1.max(q.1).max(0);
    let mut pts = vec![];
    for x in 0..=xmax {
        for y in 0..=ymax {
            if (x, y) == (0, 0) {
                continue;
            }
            let v = (x, y);
            if det2(p, v) < 0 || det2(v, q) < 0 {
                continue; // outside the cone
            }
            // Inside the closed triangle O,P,Q: on the O-side of segment PQ.
            let side = det2((q.0 - p.0, q.1 - p.1), (v.0 - p.0, v.1 - p.1));
            let o_side = det2((q.0 - p.0, q.1 - p.1), (-p.0, -p.1));
            if side != 0 && side.signum() != o_side.signum() {
                continue;
            }
            pts.push(v);
        }
    }
    // Sort by angle from P toward Q; among collinear keep the nearest.
    pts.sort_by(|&a, &b| {
        let c = det2(a, b);
        if c != 0 {
            return 0.cmp(&c); // a before b if det(a,b) > 0
        }
        (a.0.abs() + a.1.abs()).cmp(&(b.0.abs() + b.1.abs()))
    });
    // Build the inner convex chain (gift-wrapping via a stack): walking from
    // P to Q, every turn must bend away from the origin.
    let mut chain: Vec<(i64, i64)> = vec![p];
    for &v in &pts {
        if v == p || v == q {
            continue;
        }
        while chain.len() >= 2 {
            let a = chain[chain.len() - 2];
            let b = chain[chain.len() - 1];
            let cross = det2((b.0 - a.0, b.1 - a.1), (v.0 - b.0, v.1 - b.1));
            if cross >= 0 {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(v);
    }
    while chain.len() >= 2 {
        let a = chain[chain.len() - 2];
        let b = chain[chain.len() - 1];
        let cross = det2((b.0 - a.0, b.1 - a.1), (q.0 - b.0, q.1 - b.1));
        if cross >= 0 {
            chain.pop();
        } else {
            break;
        }
    }
    chain.push(q);
    // Expand each hull edge to include every lattice point on it (all are
    // primitive on the inner boundary), then drop the endpoints P and Q.
    let mut out = vec![];
    for w in chain.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let g = gcd64(dx.abs(), dy.abs());
        for t in 1..=g {
            let v = (a.0 + dx / g * t, a.1 + dy / g * t);
            if v != q {
                out.push(v);
            }
        }
    }
    out.retain(|&v| v != p && v != q);
    debug_assert!(out.iter().all(|&(x, y)| gcd64(x, y) == 1));
    out
}

/// The unimodular matrices of the cones of a regular subdivision: matrix i
/// has columns (P_i, P_{i+1}).
pub fn cone_charts(s: &Subdivision) -> Result<Vec<[[i64; 2]; 2]>> {
    if !s.is_regular() {
        return Err(Error::Invalid("subdivision is not regular".into()));
    }
    Ok(s.vertices
        .windows(2)
        .map(|w| [[w[0].0, w[1].0], [w[0].1, w[1].1]])
        .collect())
}

/// Self-intersection numbers of the divisors of the interior vertices of a
/// regular chain: P_{i-1} + P_{i+1} = c_i P_i and E(P_i)^2 = -c_i.
pub fn self_intersections(s: &Subdivision) -> Vec<i64> {
    let v = &s.vertices;
    let mut out = vec![];
    for i in 1..v.len() - 1 {
        let sum = (v[i - 1].0 + v[i + 1].0, v[i - 1].1 + v[i + 1].1);
        // sum = c * v[i]
        let c = if v[i].0 != 0 { sum.0 / v[i].0 } else { sum.1 / v[i].1 };
        debug_assert_eq!((c * v[i].0, c * v[i].1), sum, "chain relation must hold");
        out.push(-c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, Tower};

    fn dual(s: &str) -> Subdivision {
        let t = Tower::rationals(2);
        dual_newton_diagram(&parse_polynomial(s, &t).unwrap()).unwrap()
    }

    #[test]
    fn dual_diagrams() {
        assert_eq!(dual("y^2-x^3").vertices, vec![(1, 0), (2, 3), (0, 1)]);
        assert_eq!(dual("x+y").vertices, vec![(1, 0), (1, 1), (0, 1)]);
        // Weight vectors (3,1), (1,1), (1,3) for the three-face example.
        let s = dual("y^10+x^2*y^4+x^4*y^2+x^10");
        assert_eq!(s.vertices, vec![(1, 0), (3, 1), (1, 1), (1, 3), (0, 1)]);
    }

    #[test]
    fn canonical_cusp() {
        let s = canonical_subdivision(&dual("y^2-x^3"));
        assert_eq!(s.vertices, vec![(1, 0), (1, 1), (2, 3), (1, 2), (0, 1)]);
        assert!(s.is_regular());
        assert_eq!(
            s.markers,
            vec![
                VertexKind::Axis,
                VertexKind::Inserted,
                VertexKind::FaceWeight,
                VertexKind::Inserted,
                VertexKind::Axis
            ]
        );
    }

    #[test]
    fn canonical_already_regular() {
        let s = dual("x+y");
        let c = canonical_subdivision(&s);
        assert_eq!(c.vertices, s.vertices);
        // idempotent
        assert_eq!(canonical_subdivision(&c), c);
    }

    #[test]
    fn canonical_two_five() {
        let s = Subdivision {
            vertices: vec![(1, 0), (2, 5), (0, 1)],
            markers: vec![VertexKind::Axis, VertexKind::FaceWeight, VertexKind::Axis],
        };
        let c = canonical_subdivision(&s);
        assert_eq!(c.vertices, vec![(1, 0), (1, 1), (1, 2), (2, 5), (1, 3), (0, 1)]);
        assert!(c.is_regular());
        // Minimality: removing any inserted vertex breaks regularity of the pair.
        for i in 1..c.vertices.len() - 1 {
            if c.markers[i] == VertexKind::Inserted {
                assert!(det2(c.vertices[i - 1], c.vertices[i + 1]) > 1);
            }
        }
    }

    #[test]
    fn charts() {
        let c = canonical_subdivision(&dual("y^2-x^3"));
        let charts = cone_charts(&c).unwrap();
        assert!(charts.contains(&[[2, 1], [3, 2]]));
        let s = Subdivision {
            vertices: vec![(1, 0), (1, 1), (0, 1)],
            markers: vec![VertexKind::Axis, VertexKind::FaceWeight, VertexKind::Axis],
        };
        assert_eq!(cone_charts(&s).unwrap(), vec![[[1, 1], [0, 1]], [[1, 0], [1, 1]]]);
        let c25 = canonical_subdivision(&Subdivision {
            vertices: vec![(1, 0), (2, 5), (0, 1)],
            markers: vec![VertexKind::Axis, VertexKind::FaceWeight, VertexKind::Axis],
        });
        assert!(cone_charts(&c25).unwrap().contains(&[[2, 1], [5, 3]]));
    }

    #[test]
    fn self_intersection_relation() {
        let c = canonical_subdivision(&dual("y^2-x^3"));
        assert_eq!(self_intersections(&c), vec![-3, -1, -2]);
    }

    #[test]
    fn canonical_regular_and_minimal_random() {
        // Exhaustive small sweep: canonical subdivision of [E1, (a,b), E2].
        for a in 1..=9i64 {
            for b in 1..=9i64 {
                if gcd64(a, b) != 1 {
                    continue;
                }
                let s = Subdivision {
                    vertices: vec![(1, 0), (a, b), (0, 1)],
                    markers: vec![VertexKind::Axis, VertexKind::FaceWeight, VertexKind::Axis],
                };
                let c = canonical_subdivision(&s);
                assert!(c.is_regular(), "not regular for ({},{})", a, b);
                assert!(c.vertices.contains(&(a, b)));
                for i in 1..c.vertices.len() - 1 {
                    if c.markers[i] == VertexKind::Inserted {
                        assert!(
                            det2(c.vertices[i - 1], c.vertices[i + 1]) > 1,
                            "removable vertex for ({},{})",
                            a,
                            b
                        );
                    }
                }
                assert_eq!(canonical_subdivision(&c), c);
            }
        }
    }
}
