//! Finite-dimensional real normed spaces: ℓq, weighted ℓq and 2D polygonal
//! gauges, together with the vectors living in them.

mod descriptor;
mod polygon;

use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use descriptor::PRESETS;
pub use polygon::Polygon;

/// Largest dimension for which the 2ⁿ vertices of the ℓ∞ cube are enumerated.
pub const MAX_CUBE_DIM: usize = 16;

/// Scratch buffer for linear combinations on the hot path.
pub(crate) type Buf = SmallVec<[f64; 8]>;

/// `a·x + b·y`, coordinatewise.
#[inline]
pub(crate) fn combine(a: f64, x: &[f64], b: f64, y: &[f64]) -> Buf {
    x.iter().zip(y).map(|(xi, yi)| a * xi + b * yi).collect()
}

/// A coordinate tuple with at least two finite entries.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionTooSmall(coords.len()));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self(coords))
    }

    /// Callers guarantee the invariants (length ≥ 2, finite entries).
    pub(crate) fn from_raw(coords: Vec<f64>) -> Self {
        debug_assert!(coords.len() >= 2);
        Self(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: f64, b: f64, other: &Vector) -> Result<Vector> {
        check_dim(self.dim(), other)?;
        let out: Vec<f64> = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| a * x + b * y)
            .collect();
        Vector::new(out)
    }

    pub fn scale(&self, a: f64) -> Result<Vector> {
        Vector::new(self.0.iter().map(|c| a * c).collect())
    }
}

impl TryFrom<&[f64]> for Vector {
    type Error = Error;

    fn try_from(value: &[f64]) -> Result<Self> {
        Vector::new(value.to_vec())
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Vector::new(value)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_dim(expected: usize, v: &Vector) -> Result<()> {
    if v.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.dim(),
        });
    }
    Ok(())
}

/// ℓq exponent; `Infinity` selects the max-norm exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    pub fn new(q: f64) -> Result<Self> {
        if q == f64::INFINITY {
            Ok(Exponent::Infinity)
        } else if q.is_finite() && q >= 1.0 {
            Ok(Exponent::Finite(q))
        } else {
            Err(crate::error::invalid("q", q, "exponent must be >= 1"))
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Exponent::Finite(q) => q,
            Exponent::Infinity => f64::INFINITY,
        }
    }

    pub fn is_one(self) -> bool {
        self == Exponent::Finite(1.0)
    }

    pub fn is_infinite(self) -> bool {
        self == Exponent::Infinity
    }

    /// Strictly convex and smooth, i.e. 1 < q < ∞.
    pub fn is_smooth(self) -> bool {
        matches!(self, Exponent::Finite(q) if q > 1.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(q) => write!(f, "{q}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpaceKind {
    Lp(Exponent),
    /// `(Σ wᵢ|xᵢ|^q)^{1/q}`, or `max wᵢ|xᵢ|` for q = ∞.
    WeightedLp {
        exponent: Exponent,
        weights: Vec<f64>,
    },
    Polyhedral2D(Polygon),
}

/// Unit sphere or unit ball of a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Region {
    Sphere,
    Ball,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormedSpace {
    dim: usize,
    kind: SpaceKind,
    /// `wᵢ^{1/q}` for weighted finite exponents, `wᵢ` for q = ∞.
    scaled_weights: Option<Vec<f64>>,
}

impl NormedSpace {
    pub fn lp(q: f64, dim: usize) -> Result<Self> {
        check_space_dim(dim)?;
        Ok(Self {
            dim,
            kind: SpaceKind::Lp(Exponent::new(q)?),
            scaled_weights: None,
        })
    }

    pub fn l1(dim: usize) -> Result<Self> {
        Self::lp(1.0, dim)
    }

    pub fn l2(dim: usize) -> Result<Self> {
        Self::lp(2.0, dim)
    }

    pub fn linf(dim: usize) -> Result<Self> {
        Self::lp(f64::INFINITY, dim)
    }

    pub fn weighted_lp(q: f64, weights: Vec<f64>) -> Result<Self> {
        let exponent = Exponent::new(q)?;
        check_space_dim(weights.len())?;
        if let Some(&w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(crate::error::invalid("w", w, "weights must be positive and finite"));
        }
        let scaled = match exponent {
            Exponent::Finite(q) => weights.iter().map(|w| w.powf(1.0 / q)).collect(),
            Exponent::Infinity => weights.clone(),
        };
        Ok(Self {
            dim: weights.len(),
            kind: SpaceKind::WeightedLp { exponent, weights },
            scaled_weights: Some(scaled),
        })
    }

    /// Space whose unit ball is the polygon with the given vertices. The full
    /// vertex list is required; no symmetric closure is applied.
    pub fn polyhedral_2d(vertices: &[Vector]) -> Result<Self> {
        let mut pts = Vec::with_capacity(vertices.len());
        for v in vertices {
            check_dim(2, v)?;
            pts.push([v.0[0], v.0[1]]);
        }
        Ok(Self::from_polygon(Polygon::new(&pts)?))
    }

    pub fn from_polygon(polygon: Polygon) -> Self {
        Self {
            dim: 2,
            kind: SpaceKind::Polyhedral2D(polygon),
            scaled_weights: None,
        }
    }

    /// The regular hexagon with vertices `(±1, 0)`, `(±½, ±√3/2)`.
    pub fn hexagon() -> Self {
        Self::from_polygon(Polygon::regular(6).expect("hexagon is valid"))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    /// Exponent of ℓq-type spaces.
    pub fn exponent(&self) -> Option<Exponent> {
        match &self.kind {
            SpaceKind::Lp(e) | SpaceKind::WeightedLp { exponent: e, .. } => Some(*e),
            SpaceKind::Polyhedral2D(_) => None,
        }
    }

    pub fn is_polyhedral(&self) -> bool {
        match &self.kind {
            SpaceKind::Lp(e) | SpaceKind::WeightedLp { exponent: e, .. } => {
                e.is_one() || e.is_infinite()
            }
            SpaceKind::Polyhedral2D(_) => true,
        }
    }

    /// Uniform non-squareness, decided structurally: ℓ¹/ℓ∞ (weighted or not)
    /// and parallelograms are not uniformly non-square; everything else here is.
    pub fn is_uniformly_non_square(&self) -> bool {
        match &self.kind {
            SpaceKind::Polyhedral2D(p) => !p.is_parallelogram(),
            _ => !self.is_polyhedral(),
        }
    }

    /// Uniformly smooth: only the ℓq family with 1 < q < ∞.
    pub fn is_uniformly_smooth(&self) -> bool {
        self.exponent().is_some_and(Exponent::is_smooth)
    }

    /// Norm of a raw coordinate slice. The caller guarantees the dimension.
    #[inline]
    pub fn norm_of(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        match &self.kind {
            SpaceKind::Lp(e) => lq_norm(x.iter().map(|c| c.abs()), *e),
            SpaceKind::WeightedLp { exponent, .. } => {
                let w = self.scaled_weights.as_deref().unwrap_or(&[]);
                lq_norm(x.iter().zip(w).map(|(c, w)| (c * w).abs()), *exponent)
            }
            SpaceKind::Polyhedral2D(p) => p.gauge([x[0], x[1]]),
        }
    }

    pub fn norm(&self, v: &Vector) -> Result<f64> {
        check_dim(self.dim, v)?;
        Ok(self.norm_of(&v.0))
    }

    /// `v / ‖v‖`.
    pub fn unit_vector(&self, v: &Vector) -> Result<Vector> {
        let n = self.norm(v)?;
        if n == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Vector::from_raw(v.0.iter().map(|c| c / n).collect()))
    }

    pub(crate) fn check(&self, v: &Vector) -> Result<()> {
        check_dim(self.dim, v)
    }

    /// All extreme points of the unit ball, when that set is finite.
    pub fn extreme_points(&self) -> Result<Vec<Vector>> {
        let (exponent, weights): (Exponent, Vec<f64>) = match &self.kind {
            SpaceKind::Polyhedral2D(p) => {
                return Ok(p
                    .vertices()
                    .iter()
                    .map(|v| Vector::from_raw(v.to_vec()))
                    .collect())
            }
            SpaceKind::Lp(e) => (*e, vec![1.0; self.dim]),
            SpaceKind::WeightedLp { exponent, weights } => (*exponent, weights.clone()),
        };
        let n = self.dim;
        if exponent.is_one() {
            let mut out = Vec::with_capacity(2 * n);
            for i in 0..n {
                for sign in [1.0, -1.0] {
                    let mut c = vec![0.0; n];
                    c[i] = sign / weights[i];
                    out.push(Vector::from_raw(c));
                }
            }
            Ok(out)
        } else if exponent.is_infinite() {
            if n > MAX_CUBE_DIM {
                return Err(Error::NoFiniteExtremeSet);
            }
            Ok((0..1u64 << n)
                .map(|mask| {
                    let c = (0..n)
                        .map(|i| {
                            let s = if mask >> i & 1 == 0 { 1.0 } else { -1.0 };
                            s / weights[i]
                        })
                        .collect();
                    Vector::from_raw(c)
                })
                .collect())
        } else {
            Err(Error::NoFiniteExtremeSet)
        }
    }

    /// Number of extreme points, without materializing them.
    pub(crate) fn extreme_point_count(&self) -> Option<usize> {
        match &self.kind {
            SpaceKind::Polyhedral2D(p) => Some(p.len()),
            _ => {
                let e = self.exponent()?;
                if e.is_one() {
                    Some(2 * self.dim)
                } else if e.is_infinite() && self.dim <= MAX_CUBE_DIM {
                    Some(1 << self.dim)
                } else {
                    None
                }
            }
        }
    }
}

fn check_space_dim(dim: usize) -> Result<()> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall(dim));
    }
    Ok(())
}

/// `x^e` for `x ≥ 0`, by repeated multiplication when `e` is a small integer.
#[inline]
pub(crate) fn pow(x: f64, e: f64) -> f64 {
    if e == e.trunc() && (1.0..=16.0).contains(&e) {
        x.powi(e as i32)
    } else {
        x.powf(e)
    }
}

/// ℓq norm of non-negative entries, rescaled by the largest entry.
#[inline]
fn lq_norm(abs: impl Iterator<Item = f64> + Clone, e: Exponent) -> f64 {
    match e {
        Exponent::Infinity => abs.fold(0.0, f64::max),
        Exponent::Finite(q) if q == 1.0 => abs.sum(),
        Exponent::Finite(q) => {
            let m = abs.clone().fold(0.0, f64::max);
            if m == 0.0 {
                return 0.0;
            }
            if q == 2.0 {
                let s: f64 = abs.map(|a| (a / m) * (a / m)).sum();
                m * s.sqrt()
            } else {
                let s: f64 = abs.map(|a| pow(a / m, q)).sum();
                m * s.powf(1.0 / q)
            }
        }
    }
}
