use std::f64::consts::TAU;

use rayon::prelude::*;

use super::{golden_max, offer, Candidate, Estimate, GridConfig, Objective, StrategyTag};
use crate::error::{Error, Result};
use crate::spaces::{NormedSpace, Region};

const GOLDEN_ITERS: usize = 24;

/// Point of norm `r` in direction `θ`, normalized in the space's own norm.
#[inline]
fn point(space: &NormedSpace, theta: f64, r: f64) -> [f64; 2] {
    let d = [theta.cos(), theta.sin()];
    let n = space.norm_of(&d);
    [r * d[0] / n, r * d[1] / n]
}

fn nodes(region: Region, cfg: &GridConfig) -> Vec<(f64, f64)> {
    let step = TAU / cfg.resolution as f64;
    let radii: Vec<f64> = match region {
        Region::Sphere => vec![1.0],
        Region::Ball => (1..=cfg.radii).map(|j| j as f64 / cfg.radii as f64).collect(),
    };
    (0..cfg.resolution)
        .flat_map(|k| radii.iter().map(move |&r| (k as f64 * step, r)))
        .collect()
}

/// Grid search over `region × region` of a 2D space.
pub fn sup_pairs_2d(
    space: &NormedSpace,
    f: &Objective,
    region: Region,
    cfg: &GridConfig,
) -> Result<Estimate> {
    sup_pairs_2d_in(space, f, [region, region], cfg)
}

/// Grid search with separate regions for `x1` and `x2`.
///
/// All pairs of grid points (angles `2πk/res`, mapped to unit vectors of the
/// space, times radial levels on the ball) are evaluated; the best cell is
/// then polished by coordinatewise golden-section ascent in `(θ1, r1, θ2, r2)`
/// with the bracket halving every round.
pub fn sup_pairs_2d_in(
    space: &NormedSpace,
    f: &Objective,
    regions: [Region; 2],
    cfg: &GridConfig,
) -> Result<Estimate> {
    if space.dim() != 2 {
        return Err(Error::UnsupportedStrategy(
            "grid2d".into(),
            "the angular grid needs a 2-dimensional space",
        ));
    }
    if cfg.resolution < 8 || cfg.radii == 0 {
        return Err(Error::UnsupportedStrategy(
            "grid2d".into(),
            "resolution must be at least 8 and radii at least 1",
        ));
    }

    let levels = nested_levels(cfg.resolution);
    let radii = |r: Region| match r {
        Region::Sphere => 1,
        Region::Ball => cfg.radii,
    };
    let (n1, n2) = (radii(regions[0]), radii(regions[1]));
    let first: Vec<[f64; 2]> = nodes(regions[0], cfg)
        .into_iter()
        .map(|(t, r)| point(space, t, r))
        .collect();
    let second: Vec<[f64; 2]> = nodes(regions[1], cfg)
        .into_iter()
        .map(|(t, r)| point(space, t, r))
        .collect();

    // bucket[l] holds the best pair whose angle indices are both divisible
    // by 2^l (and not both by 2^(l+1), except at the top level)
    let level_of = |k: usize| if k == 0 { levels - 1 } else { (k.trailing_zeros() as usize).min(levels - 1) };
    let merge = |mut a: Vec<Option<Candidate>>, b: Vec<Option<Candidate>>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x = Candidate::pick(x.take(), y);
        }
        a
    };
    let buckets = first
        .par_iter()
        .enumerate()
        .map(|(i, x1)| {
            let l1 = level_of(i / n1);
            let mut best: Vec<Option<Candidate>> = vec![None; levels];
            for (k, x2) in second.iter().enumerate() {
                let l = l1.min(level_of(k / n2));
                offer(&mut best[l], f.eval(space, x1, x2), x1, x2);
            }
            best
        })
        .reduce(|| vec![None; levels], merge);
    let mut evaluations = (first.len() * second.len()) as u64;

    // best of each subgrid res/2^l, coarsest first
    let mut starts: Vec<(usize, Candidate)> = Vec::new();
    let mut acc: Option<Candidate> = None;
    for l in (0..levels).rev() {
        acc = Candidate::pick(acc, buckets[l].clone());
        if let Some(c) = &acc {
            starts.push((cfg.resolution >> l, c.clone()));
        }
    }
    if starts.is_empty() {
        return Err(Error::NoFeasiblePoint);
    }

    let mut out: Option<Candidate> = None;
    let mut done: Vec<(usize, Candidate)> = Vec::new();
    for (res, start) in starts {
        if done.iter().any(|(r, c)| *r == res && c.value == start.value && c.x1 == start.x1 && c.x2 == start.x2) {
            continue;
        }
        let (polished, evals) = refine(space, f, regions, cfg, res, &start);
        evaluations += evals;
        out = Candidate::pick(out, Some(polished));
        done.push((res, start));
    }
    Ok(out
        .expect("a feasible point exists")
        .into_estimate(StrategyTag::Grid2D, evaluations))
}

/// Number of nested subgrids res, res/2, ... that stay at or above 8 points.
fn nested_levels(resolution: usize) -> usize {
    let mut levels = 1;
    let mut r = resolution;
    while r % 2 == 0 && r / 2 >= 8 {
        r /= 2;
        levels += 1;
    }
    levels
}

/// Coordinatewise golden-section ascent in `(θ1, r1, θ2, r2)` from `best`,
/// starting with the cell size of a grid of `res` angles.
fn refine(
    space: &NormedSpace,
    f: &Objective,
    regions: [Region; 2],
    cfg: &GridConfig,
    res: usize,
    best: &Candidate,
) -> (Candidate, u64) {
    let polar = |x: &[f64], region: Region| {
        let r = match region {
            Region::Sphere => 1.0,
            Region::Ball => space.norm_of(x),
        };
        (x[1].atan2(x[0]), r)
    };
    let (t1, r1) = polar(&best.x1, regions[0]);
    let (t2, r2) = polar(&best.x2, regions[1]);
    let mut state = [t1, r1, t2, r2];
    let mut value = best.value;
    let eval_state = |s: &[f64; 4]| {
        let x1 = point(space, s[0], s[1]);
        let x2 = point(space, s[2], s[3]);
        f.eval(space, &x1, &x2)
    };

    let mut active = vec![0, 2];
    if regions[0] == Region::Ball {
        active.push(1);
    }
    if regions[1] == Region::Ball {
        active.push(3);
    }
    active.sort_unstable();
    let mut width = [
        TAU / res as f64,
        1.0 / cfg.radii as f64,
        TAU / res as f64,
        1.0 / cfg.radii as f64,
    ];

    let mut evaluations = 0;
    for _ in 0..cfg.refine {
        for &c in &active {
            let centre = state[c];
            let (lo, hi) = if c % 2 == 0 {
                (centre - width[c], centre + width[c])
            } else {
                ((centre - width[c]).max(0.0), (centre + width[c]).min(1.0))
            };
            let probe = |x: f64| {
                let mut s = state;
                s[c] = x;
                eval_state(&s)
            };
            let (x, v) = golden_max(probe, lo, hi, GOLDEN_ITERS);
            evaluations += GOLDEN_ITERS as u64;
            if let Some(v) = v {
                if v > value {
                    value = v;
                    state[c] = x;
                }
            }
        }
        for w in &mut width {
            *w *= 0.5;
        }
    }

    if value > best.value {
        let x1 = point(space, state[0], state[1]);
        let x2 = point(space, state[2], state[3]);
        let mut out = None;
        offer(&mut out, Some(value), &x1, &x2);
        (out.expect("finite value"), evaluations)
    } else {
        (best.clone(), evaluations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::combine;

    fn parallelogram() -> Objective {
        Objective::new("parallelogram", true, |s, a, b| {
            let p = s.norm_of(&combine(1.0, a, 1.0, b));
            let m = s.norm_of(&combine(1.0, a, -1.0, b));
            Some((p * p + m * m) / 2.0)
        })
    }

    fn cfg(resolution: usize, refine: usize) -> GridConfig {
        GridConfig {
            resolution,
            refine,
            radii: 4,
        }
    }

    #[test]
    fn euclidean_parallelogram_is_constant() {
        let est = sup_pairs_2d(&NormedSpace::l2(2).unwrap(), &parallelogram(), Region::Sphere, &cfg(256, 20)).unwrap();
        assert!((est.value - 2.0).abs() < 1e-6);
        assert!(!est.exact);
    }

    #[test]
    fn l1_parallelogram_reaches_four() {
        let est = sup_pairs_2d(&NormedSpace::l1(2).unwrap(), &parallelogram(), Region::Sphere, &cfg(256, 20)).unwrap();
        assert!((est.value - 4.0).abs() < 1e-6);
    }

    #[test]
    fn constant_objective() {
        let est = sup_pairs_2d(&NormedSpace::hexagon(), &Objective::constant(1.0), Region::Sphere, &cfg(8, 0)).unwrap();
        assert_eq!(est.value, 1.0);
        assert_eq!(est.evaluations, 64);
        assert_eq!(nested_levels(8), 1);
        assert_eq!(nested_levels(512), 7);
        assert_eq!(nested_levels(24), 2);
    }

    #[test]
    fn value_matches_witness() {
        let space = NormedSpace::lp(3.0, 2).unwrap();
        let f = parallelogram();
        let est = sup_pairs_2d(&space, &f, Region::Ball, &cfg(64, 10)).unwrap();
        let again = f.eval(&space, est.witness.0.coords(), est.witness.1.coords()).unwrap();
        assert!((again - est.value).abs() <= 1e-12 * est.value.abs());
    }

    #[test]
    fn rejects_wrong_dimension() {
        let l2 = NormedSpace::l2(3).unwrap();
        assert!(sup_pairs_2d(&l2, &parallelogram(), Region::Sphere, &cfg(64, 1)).is_err());
    }
}
