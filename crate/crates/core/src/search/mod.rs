//! Supremum estimation over pairs of vectors drawn from the unit sphere or
//! unit ball.
//!
//! Every engine evaluates the objective only at feasible points, so the
//! returned value is a lower bound of the true supremum. Vertex enumeration is
//! exact for objectives declared convex: a convex function attains its
//! maximum over `B × B` at a pair of extreme points, and extreme points lie
//! on the sphere.
//!
//! Reductions pick the largest value and break ties by the lexicographically
//! smallest witness `(x1, x2)`, which makes results independent of the order
//! in which parallel workers finish.

mod golden;
mod grid;
mod multistart;
mod strategy;
mod sweep;
mod vertex;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::spaces::{Buf, NormedSpace, Region, Vector};

pub use golden::golden_max;
pub use grid::{sup_pairs_2d, sup_pairs_2d_in};
pub use multistart::{sup_pairs_nd, sup_pairs_nd_in};
pub use strategy::{GridConfig, MultiStartConfig, Strategy};
pub use sweep::t_sweep;
pub use vertex::sup_vertex_pairs;

type EvalFn = dyn Fn(&NormedSpace, &[f64], &[f64]) -> Option<f64> + Send + Sync;

/// A real function of a pair of vectors. `None` marks the guard set (points
/// excluded from the supremum, e.g. a vanishing denominator).
#[derive(Clone)]
pub struct Objective {
    label: String,
    convex: bool,
    eval: Arc<EvalFn>,
}

impl Objective {
    /// `convex` declares joint convexity in `(x1, x2)` on `B × B`, or on
    /// `S × S` agreement with such a function; vertex enumeration relies on it.
    pub fn new<F>(label: impl Into<String>, convex: bool, eval: F) -> Self
    where
        F: Fn(&NormedSpace, &[f64], &[f64]) -> Option<f64> + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            convex,
            eval: Arc::new(eval),
        }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(format!("const {c}"), true, move |_, _, _| Some(c))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    /// Evaluates, treating non-finite values as guarded.
    #[inline]
    pub fn eval(&self, space: &NormedSpace, x1: &[f64], x2: &[f64]) -> Option<f64> {
        (self.eval)(space, x1, x2).filter(|v| v.is_finite())
    }

    /// `−f`, used to turn infima into suprema. Never convex-flagged.
    pub fn negated(&self) -> Self {
        let inner = self.eval.clone();
        Self {
            label: format!("-({})", self.label),
            convex: false,
            eval: Arc::new(move |s, a, b| inner(s, a, b).map(|v| -v)),
        }
    }
}

impl fmt::Debug for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Objective")
            .field("label", &self.label)
            .field("convex", &self.convex)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StrategyTag {
    Grid2D,
    MultiStart,
    VertexExact,
}

impl fmt::Display for StrategyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StrategyTag::Grid2D => "grid2d",
            StrategyTag::MultiStart => "multistart",
            StrategyTag::VertexExact => "exact",
        };
        f.write_str(s)
    }
}

/// Whether an estimate approximates a supremum (non-exact values are lower
/// bounds) or an infimum (non-exact values are upper bounds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sense {
    Supremum,
    Infimum,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub witness: (Vector, Vector),
    pub strategy: StrategyTag,
    pub exact: bool,
    pub evaluations: u64,
    pub sense: Sense,
    /// Auxiliary numbers (companion values, parameters such as `t_star`).
    pub meta: BTreeMap<String, f64>,
    pub notes: Vec<String>,
}

impl Estimate {
    pub fn with_meta(mut self, key: &str, value: f64) -> Self {
        self.meta.insert(key.to_string(), value);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Same witness and metadata, new value.
    pub fn map_value(mut self, f: impl FnOnce(f64) -> f64) -> Self {
        self.value = f(self.value);
        self
    }
}

impl Serialize for Estimate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Estimate", 8)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("witness", &[&self.witness.0, &self.witness.1])?;
        st.serialize_field("strategy", &self.strategy.to_string())?;
        st.serialize_field("exact", &self.exact)?;
        st.serialize_field("evaluations", &self.evaluations)?;
        st.serialize_field("sense", &self.sense)?;
        st.serialize_field("meta", &self.meta)?;
        st.serialize_field("notes", &self.notes)?;
        st.end()
    }
}

/// Best point seen by one worker.
#[derive(Clone, Debug)]
pub(crate) struct Candidate {
    pub value: f64,
    pub x1: Buf,
    pub x2: Buf,
}

fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

impl Candidate {
    /// Larger value wins; ties go to the lexicographically smaller witness.
    pub fn beats(&self, other: &Candidate) -> bool {
        match self.value.total_cmp(&other.value) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => {
                lex_cmp(&self.x1, &other.x1).then_with(|| lex_cmp(&self.x2, &other.x2))
                    == Ordering::Less
            }
        }
    }

    pub fn pick(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
        match (a, b) {
            (Some(a), Some(b)) => Some(if b.beats(&a) { b } else { a }),
            (a, None) => a,
            (None, b) => b,
        }
    }

    pub fn into_estimate(self, strategy: StrategyTag, evaluations: u64) -> Estimate {
        Estimate {
            value: self.value,
            witness: (
                Vector::from_raw(self.x1.to_vec()),
                Vector::from_raw(self.x2.to_vec()),
            ),
            strategy,
            exact: strategy == StrategyTag::VertexExact,
            evaluations,
            sense: Sense::Supremum,
            meta: BTreeMap::new(),
            notes: Vec::new(),
        }
    }
}

/// Keeps the best feasible point of a sequential scan.
pub(crate) fn offer(best: &mut Option<Candidate>, value: Option<f64>, x1: &[f64], x2: &[f64]) {
    if let Some(value) = value {
        if best.as_ref().is_some_and(|b| value < b.value) {
            return;
        }
        let c = Candidate {
            value,
            x1: Buf::from_slice(x1),
            x2: Buf::from_slice(x2),
        };
        if best.as_ref().map_or(true, |b| c.beats(b)) {
            *best = Some(c);
        }
    }
}

/// Maximizes `f` over `regions[0] × regions[1]` with the chosen strategy.
pub fn maximize(
    space: &NormedSpace,
    f: &Objective,
    regions: [Region; 2],
    strategy: &Strategy,
) -> Result<Estimate> {
    match strategy.resolve(space, f) {
        Strategy::Exact => sup_vertex_pairs(space, f),
        Strategy::Grid2D(cfg) => sup_pairs_2d_in(space, f, regions, &cfg),
        Strategy::MultiStart(cfg) => sup_pairs_nd_in(space, f, regions, &cfg),
        Strategy::Auto { .. } => unreachable!("resolve never returns Auto"),
    }
}

/// Minimizes `f` by maximizing `−f`; the estimate's sense flips to infimum.
pub fn minimize(
    space: &NormedSpace,
    f: &Objective,
    regions: [Region; 2],
    strategy: &Strategy,
) -> Result<Estimate> {
    if matches!(strategy, Strategy::Exact) {
        return Err(Error::UnsupportedStrategy(
            "exact".into(),
            "vertex enumeration only bounds suprema of convex objectives",
        ));
    }
    let mut est = maximize(space, &f.negated(), regions, strategy)?;
    est.value = -est.value;
    est.sense = Sense::Infimum;
    Ok(est)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(value: f64, x1: &[f64]) -> Candidate {
        Candidate {
            value,
            x1: Buf::from_slice(x1),
            x2: Buf::from_slice(&[0.0, 0.0]),
        }
    }

    #[test]
    fn tie_break_prefers_smaller_witness() {
        let a = cand(1.0, &[0.0, 1.0]);
        let b = cand(1.0, &[-1.0, 0.0]);
        assert!(b.beats(&a));
        assert!(!a.beats(&b));
        let picked = Candidate::pick(Some(a.clone()), Some(b.clone())).unwrap();
        let picked_rev = Candidate::pick(Some(b), Some(a)).unwrap();
        assert_eq!(picked.x1, picked_rev.x1);
    }

    #[test]
    fn larger_value_wins() {
        assert!(cand(2.0, &[5.0, 5.0]).beats(&cand(1.0, &[0.0, 0.0])));
    }

    #[test]
    fn minimize_flips_sense() {
        let l2 = NormedSpace::l2(2).unwrap();
        let f = Objective::new("sum norm", true, |s, a, b| {
            Some(s.norm_of(&crate::spaces::combine(1.0, a, 1.0, b)))
        });
        let cfg = GridConfig {
            resolution: 64,
            refine: 5,
            radii: 4,
        };
        let est = minimize(&l2, &f, [Region::Sphere; 2], &Strategy::Grid2D(cfg)).unwrap();
        assert_eq!(est.sense, Sense::Infimum);
        assert!(est.value.abs() < 1e-9);
        assert!(minimize(&l2, &f, [Region::Sphere; 2], &Strategy::Exact).is_err());
    }
}
