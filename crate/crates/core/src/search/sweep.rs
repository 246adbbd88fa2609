use std::cell::Cell;

use rayon::prelude::*;

use super::golden_max;
use crate::error::{invalid, Error, Result};

/// Maximizes a scalar function of `t ∈ [lo, hi]`.
///
/// Scans `grid` equally spaced points (the last one exactly `hi`), then runs
/// `refine_iters` golden-section evaluations on the bracket around the best
/// grid point. Ties go to the smallest `t`. The result is a point actually
/// evaluated, so the value is a lower bound of `sup g`.
pub fn t_sweep(
    g: impl Fn(f64) -> f64 + Sync,
    lo: f64,
    hi: f64,
    grid: usize,
    refine_iters: usize,
) -> Result<(f64, f64)> {
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(invalid("lo", lo, "need finite lo <= hi"));
    }
    if grid < 3 {
        return Err(invalid("grid", grid as f64, "need at least 3 grid points"));
    }
    let step = (hi - lo) / (grid - 1) as f64;
    let at = |k: usize| if k + 1 == grid { hi } else { lo + k as f64 * step };

    let values: Vec<f64> = (0..grid).into_par_iter().map(|k| g(at(k))).collect();
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFiniteObjective(*bad));
    }
    let mut k_best = 0;
    for (k, v) in values.iter().enumerate() {
        if *v > values[k_best] {
            k_best = k;
        }
    }
    let (mut t_star, mut best) = (at(k_best), values[k_best]);

    if refine_iters > 0 && hi > lo {
        let a = at(k_best.saturating_sub(1));
        let b = at((k_best + 1).min(grid - 1));
        let bad = Cell::new(None);
        let (t, v) = golden_max(
            |t| {
                let v = g(t);
                if !v.is_finite() {
                    bad.set(Some(v));
                }
                Some(v).filter(|v| v.is_finite())
            },
            a,
            b,
            refine_iters,
        );
        if let Some(v) = bad.get() {
            return Err(Error::NonFiniteObjective(v));
        }
        if let Some(v) = v {
            if v > best {
                best = v;
                t_star = t;
            }
        }
    }
    Ok((t_star, best))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_peaks_at_one() {
        assert_eq!(t_sweep(|t| t, 0.0, 1.0, 11, 0).unwrap(), (1.0, 1.0));
        assert_eq!(t_sweep(|t| t, 0.0, 1.0, 11, 30).unwrap(), (1.0, 1.0));
    }

    #[test]
    fn increasing_ratio() {
        let (t, v) = t_sweep(|t| (1.0 + t).powi(2) / (1.0 + t * t), 0.0, 1.0, 101, 40).unwrap();
        assert!((t - 1.0).abs() < 1e-6);
        assert!((v - 2.0).abs() < 1e-6);
    }

    #[test]
    fn constant_takes_lo() {
        assert_eq!(t_sweep(|_| 3.0, 0.2, 0.9, 5, 20).unwrap(), (0.2, 3.0));
    }

    #[test]
    fn interior_peak_is_refined() {
        let (t, _) = t_sweep(|t| -(t - 0.337).powi(2), 0.0, 1.0, 11, 60).unwrap();
        assert!((t - 0.337).abs() < 1e-7);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(t_sweep(|t| t, 1.0, 0.0, 11, 0).is_err());
        assert!(t_sweep(|t| t, 0.0, 1.0, 2, 0).is_err());
        assert!(matches!(t_sweep(|_| f64::NAN, 0.0, 1.0, 5, 0), Err(Error::NonFiniteObjective(_))));
    }
}
