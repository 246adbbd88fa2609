use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::judge::{Judge, Outcome};
use super::memo::Memo;
use super::{ALPHA_GRID, APPROX_SLACK, EXACT_SLACK, ONE_SIDED_SLACK, P_GRID, Q_GRID};
use crate::constants::{self, check_alpha, check_p, check_t, gamma_objective, DEFAULT_T_GRID};
use crate::error::{Error, Result};
use crate::search::{maximize, Estimate};
use crate::spaces::{combine, NormedSpace, Region, SpaceKind};

pub const CHECK_IDS: [&str; 21] = [
    "alpha_monotone_convex",
    "bounds_pp",
    "equivalence_t",
    "example_cnj_p",
    "example_l1",
    "example_linf",
    "example_lp",
    "gamma_monotone_t",
    "identity_cr",
    "james_sandwich",
    "js_identity",
    "lemma_ll_bounds",
    "nonsquare_dichotomy",
    "omega_identity",
    "pq_ordering",
    "psi_even_convex",
    "remark_alpha_half",
    "remark_gamma_zero",
    "rho_sandwich",
    "smoothness_limit",
    "sphere_ball_equal",
];

/// Default number of sampled pairs for `lemma_ll_bounds`.
const LEMMA_PAIRS: usize = 10_000;
/// Points of the α grid in `alpha_monotone_convex` and the t grid in
/// `gamma_monotone_t`.
const SHAPE_GRID: usize = 21;
/// Slack of the shape checks (monotonicity, midpoint convexity).
const SHAPE_SLACK: f64 = 1e-6;
/// Required gap below `2(1−α)^p` on uniformly non-square spaces.
const DICHOTOMY_MARGIN: f64 = 0.1;
/// α values of the smoothness scan.
const SMOOTHNESS_ALPHAS: [f64; 3] = [0.45, 0.49, 0.499];
const SMOOTH_FINAL_MAX: f64 = 0.01;
const NON_SMOOTH_MIN: f64 = 0.9;

fn tol(ests: &[&Estimate]) -> f64 {
    if ests.iter().all(|e| e.exact) {
        EXACT_SLACK
    } else {
        APPROX_SLACK
    }
}

fn get(params: &BTreeMap<String, f64>, key: &'static str) -> Result<f64> {
    params.get(key).copied().ok_or(Error::MissingParameter(key))
}

pub(super) fn seed_of(params: &BTreeMap<String, f64>) -> u64 {
    params.get("seed").map_or(7, |s| *s as u64)
}

/// Exponent of an ℓq space, weighted or not.
fn exponent(space: &NormedSpace) -> Option<f64> {
    space.exponent().map(|e| e.as_f64())
}

fn is_l1_like(space: &NormedSpace) -> bool {
    exponent(space) == Some(1.0)
}

fn is_linf_like(space: &NormedSpace) -> bool {
    exponent(space) == Some(f64::INFINITY)
}

fn plain_lp_exponent(space: &NormedSpace) -> Option<f64> {
    match space.kind() {
        SpaceKind::Lp(e) => Some(e.as_f64()),
        _ => None,
    }
}

fn applies(check_id: &str, space: &NormedSpace) -> bool {
    match check_id {
        "example_l1" => is_l1_like(space),
        "example_linf" => is_linf_like(space),
        "example_lp" => plain_lp_exponent(space).is_some_and(|q| (2.0..f64::INFINITY).contains(&q)),
        "example_cnj_p" => is_l1_like(space) || is_linf_like(space),
        _ => true,
    }
}

fn params(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Every `(check, params)` run by the suite on `space`.
pub(super) fn suite_tasks(space: &NormedSpace, seed: u64) -> Vec<(&'static str, BTreeMap<String, f64>)> {
    let mut out = Vec::new();
    let alpha_p = |id: &'static str, out: &mut Vec<_>| {
        for &a in &ALPHA_GRID {
            for &p in &P_GRID {
                out.push((id, params(&[("alpha", a), ("p", p)])));
            }
        }
    };
    let p_only = |id: &'static str, out: &mut Vec<_>| {
        for &p in &P_GRID {
            out.push((id, params(&[("p", p)])));
        }
    };

    for id in ["bounds_pp", "identity_cr", "rho_sandwich", "james_sandwich", "nonsquare_dichotomy"] {
        alpha_p(id, &mut out);
    }
    for id in [
        "equivalence_t",
        "alpha_monotone_convex",
        "gamma_monotone_t",
        "remark_alpha_half",
        "remark_gamma_zero",
        "smoothness_limit",
    ] {
        p_only(id, &mut out);
    }
    for &p in &P_GRID {
        for t in [0.0, 0.5, 1.0] {
            out.push(("sphere_ball_equal", params(&[("p", p), ("t", t)])));
        }
        for t in [0.5, 1.0] {
            out.push(("psi_even_convex", params(&[("p", p), ("t", t), ("seed", seed as f64)])));
        }
    }
    for &a in &ALPHA_GRID {
        for &p in &P_GRID {
            for &q in &Q_GRID {
                if p <= q {
                    out.push(("pq_ordering", params(&[("alpha", a), ("p", p), ("q", q)])));
                }
            }
        }
    }
    out.push(("js_identity", BTreeMap::new()));
    out.push(("omega_identity", BTreeMap::new()));
    out.push(("lemma_ll_bounds", params(&[("seed", seed as f64)])));

    if applies("example_l1", space) {
        alpha_p("example_l1", &mut out);
    }
    if applies("example_linf", space) {
        alpha_p("example_linf", &mut out);
    }
    if let Some(q) = plain_lp_exponent(space).filter(|_| applies("example_lp", space)) {
        for &a in &ALPHA_GRID {
            out.push(("example_lp", params(&[("alpha", a), ("p", q)])));
        }
    }
    if applies("example_cnj_p", space) {
        p_only("example_cnj_p", &mut out);
    }
    out
}

pub(super) fn dispatch(
    check_id: &str,
    space: &NormedSpace,
    params: &BTreeMap<String, f64>,
    memo: &Memo,
) -> Result<Outcome> {
    if !CHECK_IDS.contains(&check_id) {
        return Err(Error::UnknownCheck(check_id.to_string()));
    }
    if !applies(check_id, space) {
        return Err(Error::NotApplicable {
            check: check_id.to_string(),
            space: space.to_string(),
        });
    }
    let seed = seed_of(params);
    let s = memo;
    let mut j = Judge::new();
    match check_id {
        "bounds_pp" => bounds_pp(&mut j, space, get(params, "alpha")?, get(params, "p")?, s)?,
        "identity_cr" => identity_cr(&mut j, space, get(params, "alpha")?, get(params, "p")?, s)?,
        "equivalence_t" => equivalence_t(&mut j, space, get(params, "p")?, s)?,
        "alpha_monotone_convex" => alpha_monotone_convex(&mut j, space, get(params, "p")?, s)?,
        "gamma_monotone_t" => gamma_monotone_t(&mut j, space, get(params, "p")?, s)?,
        "sphere_ball_equal" => sphere_ball_equal(&mut j, space, get(params, "p")?, get(params, "t")?, s)?,
        "pq_ordering" => pq_ordering(
            &mut j,
            space,
            get(params, "alpha")?,
            get(params, "p")?,
            get(params, "q")?,
            s,
        )?,
        "rho_sandwich" => rho_sandwich(&mut j, space, get(params, "alpha")?, get(params, "p")?, s)?,
        "james_sandwich" => james_sandwich(&mut j, space, get(params, "alpha")?, get(params, "p")?, s)?,
        "js_identity" => js_identity(&mut j, space, s)?,
        "omega_identity" => omega_identity(&mut j, space, s)?,
        "lemma_ll_bounds" => {
            let pairs = params.get("pairs").map_or(LEMMA_PAIRS, |n| *n as usize);
            lemma_ll_bounds(&mut j, space, seed, pairs)
        }
        "example_l1" | "example_linf" => {
            example_two_one_minus_alpha(&mut j, space, get(params, "alpha")?, get(params, "p")?, s)?
        }
        "example_lp" => example_lp(&mut j, space, get(params, "alpha")?, get(params, "p")?, s)?,
        "example_cnj_p" => example_cnj_p(&mut j, space, get(params, "p")?, s)?,
        "remark_alpha_half" => remark_alpha_half(&mut j, space, get(params, "p")?, s)?,
        "remark_gamma_zero" => remark_gamma_zero(&mut j, space, get(params, "p")?, s)?,
        "nonsquare_dichotomy" => {
            nonsquare_dichotomy(&mut j, space, get(params, "alpha")?, get(params, "p")?, s)?
        }
        "smoothness_limit" => smoothness_limit(&mut j, space, get(params, "p")?, s)?,
        "psi_even_convex" => psi_even_convex(&mut j, space, get(params, "p")?, get(params, "t")?, seed)?,
        _ => unreachable!("catalog entries are all dispatched"),
    }
    Ok(j.finish())
}

fn bounds_pp(j: &mut Judge, space: &NormedSpace, alpha: f64, p: f64, m: &Memo) -> Result<()> {
    let c = m.cinj_iso(space, alpha, p)?;
    let lower = (1.0 - alpha).powf(p) + alpha.powf(p);
    let upper = 2.0 * (1.0 - alpha).powf(p);
    j.value("measured", c.value).value("lower", lower).value("upper", upper);
    j.ge(c.value, lower, tol(&[&c])).le(c.value, upper, ONE_SIDED_SLACK);
    Ok(())
}

fn identity_cr(j: &mut Judge, space: &NormedSpace, alpha: f64, p: f64, m: &Memo) -> Result<()> {
    let direct = m.cinj_iso(space, alpha, p)?;
    let via = m.cinj_via_gamma(space, alpha, p)?;
    j.value("direct", direct.value).value("half_gamma", via.value);
    j.close(direct.value, via.value, 2.0 * tol(&[&direct, &via]));
    Ok(())
}

fn equivalence_t(j: &mut Judge, space: &NormedSpace, p: f64, m: &Memo) -> Result<()> {
    let a = m.cnj_p(space, p)?;
    let b = constants::cnj_p_via_cinj(space, p, m.strategy(), DEFAULT_T_GRID)?;
    j.value("cnj_p", a.value)
        .value("via_cinj", b.value)
        .value("t_star", a.meta["t_star"]);
    j.close(a.value, b.value, tol(&[&a, &b]));
    Ok(())
}

fn alpha_monotone_convex(j: &mut Judge, space: &NormedSpace, p: f64, m: &Memo) -> Result<()> {
    check_p(p)?;
    let alphas: Vec<f64> = (0..SHAPE_GRID).map(|i| 0.5 * i as f64 / (SHAPE_GRID - 1) as f64).collect();
    let c: Vec<f64> = alphas
        .iter()
        .map(|&a| m.cinj_iso(space, a, p).map(|e| e.value))
        .collect::<Result<_>>()?;
    let mut max_decrease = f64::NEG_INFINITY;
    let mut max_gap = f64::NEG_INFINITY;
    for i in 0..c.len() - 1 {
        max_decrease = max_decrease.max(c[i] - c[i + 1]);
        j.le(c[i], c[i + 1], SHAPE_SLACK);
    }
    for i in 1..c.len() - 1 {
        let mid = 0.5 * (c[i - 1] + c[i + 1]);
        max_gap = max_gap.max(c[i] - mid);
        j.le(c[i], mid, SHAPE_SLACK);
    }
    j.value("c_at_0", c[0])
        .value("c_at_half", c[c.len() - 1])
        .value("max_decrease", max_decrease)
        .value("max_convexity_gap", max_gap);
    Ok(())
}

fn gamma_monotone_t(j: &mut Judge, space: &NormedSpace, p: f64, m: &Memo) -> Result<()> {
    let g: Vec<f64> = (0..SHAPE_GRID)
        .map(|i| m.gamma_p(space, p, i as f64 / (SHAPE_GRID - 1) as f64).map(|e| e.value))
        .collect::<Result<_>>()?;
    let mut max_decrease = f64::NEG_INFINITY;
    for w in g.windows(2) {
        max_decrease = max_decrease.max(w[0] - w[1]);
        j.le(w[0], w[1], SHAPE_SLACK);
    }
    j.value("gamma_at_0", g[0])
        .value("gamma_at_1", g[g.len() - 1])
        .value("max_decrease", max_decrease);
    Ok(())
}

fn sphere_ball_equal(j: &mut Judge, space: &NormedSpace, p: f64, t: f64, m: &Memo) -> Result<()> {
    check_p(p)?;
    check_t(t)?;
    let f = gamma_objective(p, t);
    let sphere = maximize(space, &f, [Region::Sphere; 2], m.strategy())?;
    let ball = maximize(space, &f, [Region::Sphere, Region::Ball], m.strategy())?;
    j.value("sphere", sphere.value).value("ball", ball.value);
    j.close(sphere.value, ball.value, tol(&[&sphere, &ball]));
    Ok(())
}

fn pq_ordering(j: &mut Judge, space: &NormedSpace, alpha: f64, p: f64, q: f64, m: &Memo) -> Result<()> {
    if q < p {
        return Err(crate::error::invalid("q", q, "must be at least p"));
    }
    let cp = m.cinj_iso(space, alpha, p)?;
    let cq = m.cinj_iso(space, alpha, q)?;
    let upper = 2f64.powf(1.0 - p / q) * cq.value.powf(p / q);
    j.value("c_p", cp.value).value("c_q", cq.value).value("upper", upper);
    let slack = tol(&[&cp, &cq]);
    j.le(cq.value, cp.value, slack).le(cp.value, upper, slack);
    Ok(())
}

fn rho_sandwich(j: &mut Judge, space: &NormedSpace, alpha: f64, p: f64, m: &Memo) -> Result<()> {
    check_alpha(alpha)?;
    let r = m.rho(space, 1.0 - 2.0 * alpha)?;
    let c = m.cinj_iso(space, alpha, p)?;
    let ct = m.cnj_modified_p(space, p)?;
    let lower = 2f64.powf(1.0 - p) * (r.value + 1.0).powf(p);
    j.value("lower", lower).value("measured", c.value).value("cnj_modified", ct.value);
    j.note(ct.notes.first().cloned().unwrap_or_default());
    let slack = tol(&[&r, &c, &ct]);
    j.ge(c.value, lower, slack).le(c.value, ct.value, slack);
    Ok(())
}

fn james_sandwich(j: &mut Judge, space: &NormedSpace, alpha: f64, p: f64, m: &Memo) -> Result<()> {
    check_alpha(alpha)?;
    let jm = m.james(space)?;
    let c = m.cinj_iso(space, alpha, p)?;
    let jv = jm.value;
    let lower = (jv - 2.0 * alpha).powf(p) / 2f64.powf(p - 1.0);
    let upper = (2f64.powf(p) * alpha.powf(p) + 2f64.powf(2.0 * p) * (1.0 - 2.0 * alpha).powf(p)) / jv.powf(p);
    j.value("james", jv).value("lower", lower).value("measured", c.value).value("upper", upper);
    // an underestimated J only loosens the upper bound
    j.ge(c.value, lower, tol(&[&jm, &c])).le(c.value, upper, ONE_SIDED_SLACK);
    Ok(())
}

fn js_identity(j: &mut Judge, space: &NormedSpace, m: &Memo) -> Result<()> {
    let sch = constants::schaffer(space, m.strategy())?;
    let jv = sch.meta["james"];
    j.value("james", jv).value("schaffer", sch.value).value("product", jv * sch.value);
    j.close(jv * sch.value, 2.0, APPROX_SLACK);
    Ok(())
}

fn omega_identity(j: &mut Judge, space: &NormedSpace, m: &Memo) -> Result<()> {
    let o = constants::omega_prime(space, m.strategy())?;
    let g = o.meta["nine_tenths_gamma"];
    j.value("omega_prime", o.value).value("nine_tenths_gamma", g);
    j.close(o.value, g, tol(&[&o]));
    Ok(())
}

fn random_unit(space: &NormedSpace, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let x: Vec<f64> = (0..space.dim()).map(|_| rng.sample(StandardNormal)).collect();
        let n = space.norm_of(&x);
        if n > 0.0 {
            return x.iter().map(|c| c / n).collect();
        }
    }
}

/// Sandwich bounds for `‖x1 + a·x2‖` on sampled isosceles pairs
/// `(u1 + u2, u1 − u2)`; half the samples have `|a| ≤ 1`, half `|a| ≥ 1`.
fn lemma_ll_bounds(j: &mut Judge, space: &NormedSpace, seed: u64, pairs: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0usize;
    let mut worst = 0.0f64;
    for i in 0..pairs {
        let u1 = random_unit(space, &mut rng);
        let u2 = random_unit(space, &mut rng);
        let x1 = combine(1.0, &u1, 1.0, &u2);
        let x2 = combine(1.0, &u1, -1.0, &u2);
        let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let a: f64 = if i % 2 == 0 {
            rng.gen_range(-1.0..=1.0)
        } else {
            sign * rng.gen_range(1.0..=10.0)
        };
        let mid = space.norm_of(&combine(1.0, &x1, a, &x2));
        for side in [
            space.norm_of(&combine(1.0, &x1, 1.0, &x2)),
            space.norm_of(&combine(1.0, &x1, -1.0, &x2)),
        ] {
            let (lo, hi) = if a.abs() <= 1.0 {
                (a.abs() * side, side)
            } else {
                (side, a.abs() * side)
            };
            let scale = hi.max(1.0);
            let excess = ((lo - mid).max(mid - hi)) / scale;
            worst = worst.max(excess);
            if excess > ONE_SIDED_SLACK {
                violations += 1;
            }
        }
    }
    j.value("pairs", pairs as f64)
        .value("violations", violations as f64)
        .value("worst_relative_excess", worst);
    j.le(worst, 0.0, ONE_SIDED_SLACK);
}

fn example_two_one_minus_alpha(j: &mut Judge, space: &NormedSpace, alpha: f64, p: f64, m: &Memo) -> Result<()> {
    let c = m.cinj_iso(space, alpha, p)?;
    let expected = 2.0 * (1.0 - alpha).powf(p);
    j.value("measured", c.value).value("expected", expected);
    j.close(c.value, expected, tol(&[&c]));
    Ok(())
}

fn example_lp(j: &mut Judge, space: &NormedSpace, alpha: f64, p: f64, m: &Memo) -> Result<()> {
    if plain_lp_exponent(space) != Some(p) {
        return Err(crate::error::invalid("p", p, "must equal the exponent of the space"));
    }
    let c = m.cinj_iso(space, alpha, p)?;
    let expected = (1.0 - alpha).powf(p) + alpha.powf(p);
    j.value("measured", c.value).value("expected", expected);
    j.close(c.value, expected, tol(&[&c]));
    Ok(())
}

fn example_cnj_p(j: &mut Judge, space: &NormedSpace, p: f64, m: &Memo) -> Result<()> {
    let c = m.cnj_p(space, p)?;
    j.value("measured", c.value).value("expected", 2.0);
    j.close(c.value, 2.0, tol(&[&c]));
    Ok(())
}

fn remark_alpha_half(j: &mut Judge, space: &NormedSpace, p: f64, m: &Memo) -> Result<()> {
    let c = m.cinj_iso(space, 0.5, p)?;
    let expected = 2f64.powf(1.0 - p);
    j.value("measured", c.value).value("expected", expected);
    j.close(c.value, expected, tol(&[&c]));
    Ok(())
}

fn remark_gamma_zero(j: &mut Judge, space: &NormedSpace, p: f64, m: &Memo) -> Result<()> {
    let g = m.gamma_p(space, p, 0.0)?;
    let expected = 2f64.powf(2.0 - p);
    j.value("measured", g.value).value("expected", expected);
    j.close(g.value, expected, tol(&[&g]));
    Ok(())
}

fn nonsquare_dichotomy(j: &mut Judge, space: &NormedSpace, alpha: f64, p: f64, m: &Memo) -> Result<()> {
    let c = m.cinj_iso(space, alpha, p)?;
    let top = 2.0 * (1.0 - alpha).powf(p);
    let slack = tol(&[&c]);
    j.value("measured", c.value).value("upper", top);
    if !space.is_uniformly_non_square() {
        j.note("not uniformly non-square: the upper bound is attained");
        j.close(c.value, top, slack);
    } else if alpha < 0.5 {
        j.note(format!("uniformly non-square: required margin {DICHOTOMY_MARGIN}"));
        j.value("margin", top - c.value);
        j.ge(top - c.value, DICHOTOMY_MARGIN, slack);
    } else {
        // at α = 1/2 every space has C = 2^{1−p} = 2(1−α)^p
        j.note("alpha = 1/2: lower and upper bounds coincide");
        j.close(c.value, top, slack);
    }
    Ok(())
}

fn smoothness_limit(j: &mut Judge, space: &NormedSpace, p: f64, m: &Memo) -> Result<()> {
    let quotients: Vec<Estimate> = SMOOTHNESS_ALPHAS
        .iter()
        .map(|&a| constants::smoothness_quotient(space, p, a, m.strategy()))
        .collect::<Result<_>>()?;
    for (a, q) in SMOOTHNESS_ALPHAS.iter().zip(&quotients) {
        j.value(&format!("quotient_at_{a}"), q.value);
    }
    let v: Vec<f64> = quotients.iter().map(|q| q.value).collect();
    let last = v[v.len() - 1];
    if space.is_uniformly_smooth() {
        j.note(format!("uniformly smooth: strictly decreasing, final value <= {SMOOTH_FINAL_MAX}"));
        j.holds(v.windows(2).all(|w| w[1] < w[0]));
        j.le(last, SMOOTH_FINAL_MAX, 0.0);
    } else if is_l1_like(space) || is_linf_like(space) || !space.is_uniformly_non_square() {
        j.note(format!("square unit ball: every value >= {NON_SMOOTH_MIN}"));
        for &q in &v {
            j.ge(q, NON_SMOOTH_MIN, 0.0);
        }
    } else {
        j.note(format!("not uniformly smooth: final value >= {NON_SMOOTH_MIN} x first value"));
        j.ge(last, NON_SMOOTH_MIN * v[0], 0.0);
    }
    Ok(())
}

/// ψ(r) = ‖r·x1 + t·x2‖^p + ‖r·x1 − t·x2‖^p on random unit pairs: evenness
/// and midpoint convexity on an r-grid over [−2, 2].
fn psi_even_convex(j: &mut Judge, space: &NormedSpace, p: f64, t: f64, seed: u64) -> Result<()> {
    check_p(p)?;
    check_t(t)?;
    const SAMPLES: usize = 64;
    const R_POINTS: usize = 41;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rs: Vec<f64> = (0..R_POINTS).map(|k| -2.0 + 4.0 * k as f64 / (R_POINTS - 1) as f64).collect();
    let (mut worst_even, mut worst_convex) = (0.0f64, f64::NEG_INFINITY);
    for _ in 0..SAMPLES {
        let x1 = random_unit(space, &mut rng);
        let x2 = random_unit(space, &mut rng);
        let psi = |r: f64| {
            space.norm_of(&combine(r, &x1, t, &x2)).powf(p) + space.norm_of(&combine(r, &x1, -t, &x2)).powf(p)
        };
        let vals: Vec<f64> = rs.iter().map(|&r| psi(r)).collect();
        for (k, &r) in rs.iter().enumerate() {
            let scale = vals[k].max(1.0);
            worst_even = worst_even.max((vals[k] - psi(-r)).abs() / scale);
        }
        for k in 1..R_POINTS - 1 {
            let scale = vals[k].max(1.0);
            worst_convex = worst_convex.max((vals[k] - 0.5 * (vals[k - 1] + vals[k + 1])) / scale);
        }
    }
    j.value("worst_even_defect", worst_even).value("worst_convexity_gap", worst_convex);
    j.le(worst_even, 0.0, ONE_SIDED_SLACK).le(worst_convex, 0.0, ONE_SIDED_SLACK);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Profile;

    #[test]
    fn unknown_and_inapplicable() {
        let l2 = NormedSpace::l2(2).unwrap();
        assert!(matches!(
            dispatch("nope", &l2, &BTreeMap::new(), &Memo::new(Profile::Fast.strategy(7))),
            Err(Error::UnknownCheck(_))
        ));
        assert!(matches!(
            dispatch("example_l1", &l2, &params(&[("alpha", 0.1), ("p", 1.0)]), &Memo::new(Profile::Fast.strategy(7))),
            Err(Error::NotApplicable { .. })
        ));
        assert!(matches!(
            dispatch("bounds_pp", &l2, &params(&[("p", 1.0)]), &Memo::new(Profile::Fast.strategy(7))),
            Err(Error::MissingParameter("alpha"))
        ));
    }

    #[test]
    fn suite_tasks_respect_applicability() {
        let l2 = NormedSpace::l2(2).unwrap();
        for (id, _) in suite_tasks(&l2, 7) {
            assert!(applies(id, &l2), "{id}");
            assert!(!["example_l1", "example_linf", "example_cnj_p"].contains(&id));
        }
        let l1 = NormedSpace::l1(2).unwrap();
        assert!(suite_tasks(&l1, 7).iter().any(|(id, _)| *id == "example_l1"));
    }
}
