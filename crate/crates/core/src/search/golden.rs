const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a maximum of `f` on `[a, b]` using `iters`
/// evaluations. Returns the best point evaluated, which for non-unimodal `f`
/// is only a local answer. `None` values count as −∞.
pub fn golden_max(f: impl Fn(f64) -> Option<f64>, mut a: f64, mut b: f64, iters: usize) -> (f64, Option<f64>) {
    let score = |v: Option<f64>| v.unwrap_or(f64::NEG_INFINITY);
    let mut best = (a, None::<f64>);
    let keep = |x: f64, v: Option<f64>, best: &mut (f64, Option<f64>)| {
        if score(v) > score(best.1) {
            *best = (x, v);
        }
    };
    if iters == 0 {
        return best;
    }
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    keep(x1, f1, &mut best);
    if iters == 1 {
        return best;
    }
    let mut f2 = f(x2);
    keep(x2, f2, &mut best);
    for _ in 2..iters {
        if score(f1) >= score(f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
            keep(x1, f1, &mut best);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
            keep(x2, f2, &mut best);
        }
    }
    best
}
