//! `start:stop:step` grids, inclusive of both ends.

/// Endpoint tolerance: `stop` is included when the last step lands within it.
pub const ENDPOINT_TOL: f64 = 1e-12;

/// Parses `start:stop:step`, or a single number as a one-point grid.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let bad = || format!("invalid grid '{s}' (expected start:stop:step)");
    let parts: Vec<&str> = s.split(':').collect();
    let nums = parts
        .iter()
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    if nums.iter().any(|x| !x.is_finite()) {
        return Err(bad());
    }
    let (start, stop, step) = match nums[..] {
        [x] => return Ok(vec![x]),
        [a, b, c] => (a, b, c),
        _ => return Err(bad()),
    };
    if step <= 0.0 || stop < start {
        return Err(bad());
    }
    let n = ((stop - start) / step + ENDPOINT_TOL).floor() as usize;
    // multiply rather than accumulate so 0:0.5:0.05 lands on 0.5
    let mut out: Vec<f64> = (0..=n).map(|i| snap(start + i as f64 * step)).collect();
    if let Some(last) = out.last_mut() {
        if (*last - stop).abs() <= ENDPOINT_TOL.max(step * 1e-9) {
            *last = stop;
        }
    }
    if out.len() > 1_000_000 {
        return Err(format!("grid '{s}' has too many points"));
    }
    Ok(out)
}

// 0.15000000000000002 -> 0.15
fn snap(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if (r - x).abs() <= ENDPOINT_TOL { r } else { x }
}
