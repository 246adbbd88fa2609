use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};
use rayon::prelude::*;

use super::{offer, Candidate, Estimate, MultiStartConfig, Objective, StrategyTag};
use crate::error::{Error, Result};
use crate::spaces::{NormedSpace, Region};

const INITIAL_STEP: f64 = 0.25;
const MIN_STEP: f64 = 1e-13;

/// Pulls a point back into its region; `false` if that is impossible (zero
/// vector on the sphere).
fn project(space: &NormedSpace, x: &mut [f64], region: Region) -> bool {
    let n = space.norm_of(x);
    match region {
        Region::Sphere if n == 0.0 => false,
        Region::Sphere => {
            x.iter_mut().for_each(|c| *c /= n);
            true
        }
        Region::Ball => {
            if n > 1.0 {
                x.iter_mut().for_each(|c| *c /= n);
            }
            true
        }
    }
}

fn random_point(space: &NormedSpace, rng: &mut ChaCha8Rng, region: Region) -> Vec<f64> {
    let dim = space.dim();
    loop {
        let mut x: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let n = space.norm_of(&x);
        if n == 0.0 {
            continue;
        }
        let r = match region {
            Region::Sphere => 1.0,
            Region::Ball => {
                let u: f64 = Uniform::new(0.0, 1.0).sample(rng);
                u.powf(1.0 / dim as f64)
            }
        };
        x.iter_mut().for_each(|c| *c *= r / n);
        return x;
    }
}

/// Multi-start search over `region × region` in any dimension.
pub fn sup_pairs_nd(
    space: &NormedSpace,
    f: &Objective,
    region: Region,
    cfg: &MultiStartConfig,
) -> Result<Estimate> {
    sup_pairs_nd_in(space, f, [region, region], cfg)
}

/// Multi-start pattern ascent.
///
/// Start `i` draws its pair from a ChaCha stream selected by `(seed, i)`, so
/// the set of starts does not depend on scheduling and growing `starts` only
/// adds new ones. Each sweep perturbs every coordinate by `±h`, projects back
/// to the region and keeps strict improvements; `h` halves after a sweep
/// without progress.
pub fn sup_pairs_nd_in(
    space: &NormedSpace,
    f: &Objective,
    regions: [Region; 2],
    cfg: &MultiStartConfig,
) -> Result<Estimate> {
    if cfg.starts == 0 || cfg.steps == 0 {
        return Err(Error::UnsupportedStrategy(
            "multistart".into(),
            "starts and steps must be at least 1",
        ));
    }
    let dim = space.dim();

    let (best, evaluations) = (0..cfg.starts)
        .into_par_iter()
        .map(|start| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(start as u64);
            let mut x1 = random_point(space, &mut rng, regions[0]);
            let mut x2 = random_point(space, &mut rng, regions[1]);
            let mut value = f.eval(space, &x1, &x2);
            let mut evals = 1u64;
            let mut h = INITIAL_STEP;

            for _ in 0..cfg.steps {
                let mut improved = false;
                for c in 0..2 * dim {
                    for sign in [1.0, -1.0] {
                        let (mut y1, mut y2) = (x1.clone(), x2.clone());
                        let ok = if c < dim {
                            y1[c] += sign * h;
                            project(space, &mut y1, regions[0])
                        } else {
                            y2[c - dim] += sign * h;
                            project(space, &mut y2, regions[1])
                        };
                        if !ok {
                            continue;
                        }
                        let v = f.eval(space, &y1, &y2);
                        evals += 1;
                        let better = match (v, value) {
                            (Some(v), Some(cur)) => v > cur,
                            (Some(_), None) => true,
                            _ => false,
                        };
                        if better {
                            x1 = y1;
                            x2 = y2;
                            value = v;
                            improved = true;
                            break;
                        }
                    }
                }
                if !improved {
                    h *= 0.5;
                    if h < MIN_STEP {
                        break;
                    }
                }
            }
            let mut best = None;
            offer(&mut best, value, &x1, &x2);
            (best, evals)
        })
        .reduce(
            || (None, 0),
            |(a, ea), (b, eb)| (Candidate::pick(a, b), ea + eb),
        );

    Ok(best
        .ok_or(Error::NoFeasiblePoint)?
        .into_estimate(StrategyTag::MultiStart, evaluations))
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

    fn cfg(starts: usize, steps: usize, seed: u64) -> MultiStartConfig {
        MultiStartConfig { starts, steps, seed }
    }

    #[test]
    fn euclidean_3d() {
        let est = sup_pairs_nd(&NormedSpace::l2(3).unwrap(), &parallelogram(), Region::Sphere, &cfg(32, 200, 7)).unwrap();
        assert!((est.value - 2.0).abs() < 1e-4);
    }

    #[test]
    fn cross_polytope_3d() {
        let est = sup_pairs_nd(&NormedSpace::l1(3).unwrap(), &parallelogram(), Region::Sphere, &cfg(64, 300, 7)).unwrap();
        assert!(est.value >= 4.0 - 1e-4, "{}", est.value);
        assert!(est.value <= 4.0 + 1e-12);
    }

    #[test]
    fn constant_objective() {
        let est = sup_pairs_nd(&NormedSpace::hexagon(), &Objective::constant(2.5), Region::Sphere, &cfg(1, 1, 0)).unwrap();
        assert_eq!(est.value, 2.5);
    }

    #[test]
    fn seeded_runs_are_identical() {
        let space = NormedSpace::lp(3.0, 3).unwrap();
        let a = sup_pairs_nd(&space, &parallelogram(), Region::Ball, &cfg(16, 50, 11)).unwrap();
        let b = sup_pairs_nd(&space, &parallelogram(), Region::Ball, &cfg(16, 50, 11)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn points_stay_in_region() {
        let space = NormedSpace::hexagon();
        let est = sup_pairs_nd_in(&space, &parallelogram(), [Region::Sphere, Region::Ball], &cfg(8, 40, 1)).unwrap();
        assert!((space.norm(&est.witness.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(space.norm(&est.witness.1).unwrap() <= 1.0 + 1e-12);
    }
}
