//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use std::f64::consts::TAU;

use bgeom::{NormedSpace, Vector};

pub fn v(c: &[f64]) -> Vector {
    Vector::new(c.to_vec()).unwrap()
}

/// Plain ℓq norm, q = ∞ allowed.
pub fn lq(x: &[f64], q: f64) -> f64 {
    if q.is_infinite() {
        x.iter().fold(0.0, |m, c| m.max(c.abs()))
    } else {
        x.iter().map(|c| c.abs().powf(q)).sum::<f64>().powf(1.0 / q)
    }
}

/// Point-in-polygon for a convex polygon given counterclockwise.
pub fn inside(poly: &[[f64; 2]], p: [f64; 2]) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) >= 0.0
    })
}

/// Smallest s > 0 with p/s inside the polygon, by bisection.
pub fn gauge_bisect(poly: &[[f64; 2]], p: [f64; 2]) -> f64 {
    if p == [0.0, 0.0] {
        return 0.0;
    }
    let mut hi = 1.0;
    while !inside(poly, [p[0] / hi, p[1] / hi]) {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid > 0.0 && inside(poly, [p[0] / mid, p[1] / mid]) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

pub fn hexagon_vertices() -> Vec<[f64; 2]> {
    (0..6)
        .map(|k| {
            let a = k as f64 * TAU / 6.0;
            [a.cos(), a.sin()]
        })
        .collect()
}

/// `n` points of the unit sphere, by normalizing equally spaced directions.
pub fn circle(norm: impl Fn(&[f64]) -> f64, n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|k| {
            let a = k as f64 * TAU / n as f64;
            let d = [a.cos(), a.sin()];
            let r = norm(&d);
            [d[0] / r, d[1] / r]
        })
        .collect()
}

/// Brute-force sup of `f` over pairs from `pts`.
pub fn brute_sup(pts: &[[f64; 2]], f: impl Fn([f64; 2], [f64; 2]) -> f64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for &a in pts {
        for &b in pts {
            best = best.max(f(a, b));
        }
    }
    best
}

pub fn add(a: [f64; 2], s: f64, b: [f64; 2]) -> [f64; 2] {
    [a[0] + s * b[0], a[1] + s * b[1]]
}

/// Unit balls of the standard test spaces: ℓ¹, ℓ∞, ℓ², ℓ³, hexagon.
pub fn test_spaces() -> Vec<NormedSpace> {
    vec![
        NormedSpace::l1(2).unwrap(),
        NormedSpace::linf(2).unwrap(),
        NormedSpace::l2(2).unwrap(),
        NormedSpace::lp(3.0, 2).unwrap(),
        NormedSpace::hexagon(),
    ]
}

pub const L1_VERTS: [[f64; 2]; 4] = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
pub const LINF_VERTS: [[f64; 2]; 4] = [[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]];
