//! Centrally symmetric convex polygons used as unit balls of 2D norms.
//!
//! The gauge is evaluated by locating the angular sector of the query point
//! (binary search over vertex angles) and applying the facet functional of
//! that sector. Each facet functional `f` satisfies `f(a) = f(b) = 1` on the
//! edge `[a, b]`, so the gauge of `v` is `f(v)` for the facet hit by the ray
//! through `v`.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-9;
const COLLINEAR_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    /// Counterclockwise, starting from the smallest angle in `[0, 2π)`.
    vertices: Vec<[f64; 2]>,
    angles: Vec<f64>,
    /// `facets[i]` is the functional of the edge `vertices[i] -> vertices[i + 1]`.
    facets: Vec<[f64; 2]>,
}

fn angle_of(v: [f64; 2]) -> f64 {
    let a = v[1].atan2(v[0]);
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

impl Polygon {
    pub fn new(points: &[[f64; 2]]) -> Result<Self> {
        if points.len() < 4 {
            return Err(Error::Degenerate("a symmetric polygon needs at least 4 vertices"));
        }
        if points.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let scale = points
            .iter()
            .map(|p| p[0].abs().max(p[1].abs()))
            .fold(0.0, f64::max);
        if points.iter().any(|p| p[0].hypot(p[1]) <= 1e-12 * scale.max(1e-300)) {
            return Err(Error::OriginNotInterior);
        }

        let tol = SYMMETRY_TOL * scale;
        for p in points {
            let mirrored = points
                .iter()
                .any(|q| (q[0] + p[0]).abs() <= tol && (q[1] + p[1]).abs() <= tol);
            if !mirrored {
                return Err(Error::Asymmetric);
            }
        }

        let mut vertices = points.to_vec();
        vertices.sort_by(|a, b| angle_of(*a).total_cmp(&angle_of(*b)));
        for w in vertices.windows(2) {
            if (w[0][0] - w[1][0]).abs() <= tol && (w[0][1] - w[1][1]).abs() <= tol {
                return Err(Error::Degenerate("duplicate vertex"));
            }
        }

        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if cross(a, b) <= 0.0 {
                return Err(Error::OriginNotInterior);
            }
            let turn = cross([b[0] - a[0], b[1] - a[1]], [c[0] - b[0], c[1] - b[1]]);
            if turn.abs() <= COLLINEAR_TOL * scale * scale {
                return Err(Error::Degenerate("three collinear vertices"));
            }
            if turn < 0.0 {
                return Err(Error::NonConvex);
            }
        }

        let angles = vertices.iter().map(|v| angle_of(*v)).collect();
        let facets = (0..n)
            .map(|i| {
                let a = vertices[i];
                let b = vertices[(i + 1) % n];
                // normal of the edge, scaled so that f(a) = 1
                let normal = [b[1] - a[1], a[0] - b[0]];
                let offset = normal[0] * a[0] + normal[1] * a[1];
                [normal[0] / offset, normal[1] / offset]
            })
            .collect();

        Ok(Self {
            vertices,
            angles,
            facets,
        })
    }

    /// Regular polygon with `n` (even) vertices on the Euclidean unit circle,
    /// the first one at `(1, 0)`.
    pub fn regular(n: usize) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::Degenerate("regular symmetric polygon needs an even count >= 4"));
        }
        let pts: Vec<[f64; 2]> = (0..n)
            .map(|k| {
                let a = TAU * k as f64 / n as f64;
                [a.cos(), a.sin()]
            })
            .collect();
        Self::new(&pts)
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Minkowski gauge of `v` with respect to this polygon.
    pub fn gauge(&self, v: [f64; 2]) -> f64 {
        if v[0] == 0.0 && v[1] == 0.0 {
            return 0.0;
        }
        let n = self.facets.len();
        let theta = angle_of(v);
        let idx = match self.angles.partition_point(|&a| a <= theta) {
            0 => n - 1,
            k => k - 1,
        };
        // The neighbours absorb rounding in the sector lookup near a vertex.
        let apply = |f: [f64; 2]| f[0] * v[0] + f[1] * v[1];
        apply(self.facets[idx])
            .max(apply(self.facets[(idx + 1) % n]))
            .max(apply(self.facets[(idx + n - 1) % n]))
    }

    /// Parallelograms are exactly the symmetric polygons whose norm is not
    /// uniformly non-square.
    pub fn is_parallelogram(&self) -> bool {
        self.vertices.len() == 4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::new(&[[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]]).unwrap()
    }

    #[test]
    fn canonical_order_is_counterclockwise() {
        let p = Polygon::new(&[[0.0, -1.0], [1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(
            p.vertices(),
            &[[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]
        );
    }

    #[test]
    fn square_gauge_is_max_norm() {
        let p = square();
        assert_eq!(p.gauge([2.0, 0.0]), 2.0);
        assert_eq!(p.gauge([0.5, -0.25]), 0.5);
        assert_eq!(p.gauge([-3.0, 3.0]), 3.0);
        assert_eq!(p.gauge([0.0, 0.0]), 0.0);
    }

    #[test]
    fn rejects_bad_vertex_sets() {
        assert_eq!(
            Polygon::new(&[[1.0, 0.0], [0.0, 1.0], [2.0, 2.0], [3.0, 1.0]]),
            Err(Error::Asymmetric)
        );
        // (0.2, 0.2) lies inside the diamond, so the angular order is not convex
        let nonconvex = [
            [1.0, 0.0],
            [0.2, 0.2],
            [0.0, 1.0],
            [-1.0, 0.0],
            [-0.2, -0.2],
            [0.0, -1.0],
        ];
        assert_eq!(Polygon::new(&nonconvex), Err(Error::NonConvex));
        let collinear = [
            [1.0, 0.0],
            [1.0, 1.0],
            [1.0, 2.0],
            [-1.0, 0.0],
            [-1.0, -1.0],
            [-1.0, -2.0],
        ];
        assert!(matches!(
            Polygon::new(&collinear),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn hexagon_gauge_is_one_on_boundary() {
        let h = Polygon::regular(6).unwrap();
        let verts = h.vertices().to_vec();
        for (i, a) in verts.iter().enumerate() {
            let b = verts[(i + 1) % verts.len()];
            for k in 0..=10 {
                let s = k as f64 / 10.0;
                let p = [a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])];
                assert!((h.gauge(p) - 1.0).abs() < 1e-12, "{p:?}");
            }
        }
    }
}
