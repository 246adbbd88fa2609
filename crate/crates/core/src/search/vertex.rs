use rayon::prelude::*;

use super::{offer, Candidate, Estimate, Objective, StrategyTag};
use crate::error::{Error, Result};
use crate::spaces::NormedSpace;

/// Exact maximum of a convex objective over `B × B` (hence over `S × S`):
/// every ordered pair of extreme points is evaluated.
pub fn sup_vertex_pairs(space: &NormedSpace, f: &Objective) -> Result<Estimate> {
    if !f.is_convex() {
        return Err(Error::NonConvexObjective);
    }
    let points = space.extreme_points()?;
    let best = points
        .par_iter()
        .map(|x1| {
            let mut best = None;
            for x2 in &points {
                offer(&mut best, f.eval(space, x1.coords(), x2.coords()), x1.coords(), x2.coords());
            }
            best
        })
        .reduce(|| None, Candidate::pick)
        .ok_or(Error::NoFeasiblePoint)?;
    let n = points.len() as u64;
    Ok(best.into_estimate(StrategyTag::VertexExact, n * n))
}
