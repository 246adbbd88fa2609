//! The geometric constants, each built as an objective over pairs of unit
//! vectors and handed to a search engine.
//!
//! Supremum estimates are lower bounds unless `exact` is set; the Schäffer
//! constant is an infimum and its estimate is an upper bound.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::orthogonality::{unit_partners, SUM_NORM_GUARD};
use crate::search::{
    golden_max, maximize, sup_pairs_nd_in, t_sweep, Estimate, GridConfig, MultiStartConfig,
    Objective, Sense, Strategy, StrategyTag,
};
use crate::spaces::{combine, pow, NormedSpace, Region, Vector};

/// Points of the outer `t` scan in `cnj_p` unless a request says otherwise.
pub const DEFAULT_T_GRID: usize = 21;

/// Golden-section evaluations after the `t` scan.
const T_REFINE: usize = 20;

const INFERRED_NOTE: &str = "inferred definition: sup over S×S of (‖x1+x2‖^p+‖x1−x2‖^p)/2^p";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstantId {
    GammaP,
    CinjIso,
    CinjViaGamma,
    CnjP,
    CnjModifiedP,
    James,
    Schaffer,
    Rho,
    Jxp,
    NuP,
    OmegaPrime,
    SmoothnessQuotient,
}

impl ConstantId {
    pub const ALL: [ConstantId; 12] = [
        ConstantId::GammaP,
        ConstantId::CinjIso,
        ConstantId::CinjViaGamma,
        ConstantId::CnjP,
        ConstantId::CnjModifiedP,
        ConstantId::James,
        ConstantId::Schaffer,
        ConstantId::Rho,
        ConstantId::Jxp,
        ConstantId::NuP,
        ConstantId::OmegaPrime,
        ConstantId::SmoothnessQuotient,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstantId::GammaP => "gamma_p",
            ConstantId::CinjIso => "cinj_iso",
            ConstantId::CinjViaGamma => "cinj_via_gamma",
            ConstantId::CnjP => "cnj_p",
            ConstantId::CnjModifiedP => "cnj_modified_p",
            ConstantId::James => "james",
            ConstantId::Schaffer => "schaffer",
            ConstantId::Rho => "rho",
            ConstantId::Jxp => "jxp",
            ConstantId::NuP => "nu_p",
            ConstantId::OmegaPrime => "omega_prime",
            ConstantId::SmoothnessQuotient => "smoothness_quotient",
        }
    }

    /// Whether the constant is a function of α.
    pub fn uses_alpha(self) -> bool {
        matches!(
            self,
            ConstantId::CinjIso | ConstantId::CinjViaGamma | ConstantId::SmoothnessQuotient
        )
    }

    /// Whether the constant is a function of t.
    pub fn uses_t(self) -> bool {
        matches!(self, ConstantId::GammaP | ConstantId::Rho | ConstantId::Jxp)
    }

    pub fn uses_p(self) -> bool {
        !matches!(
            self,
            ConstantId::James | ConstantId::Schaffer | ConstantId::Rho | ConstantId::OmegaPrime
        )
    }
}

impl fmt::Display for ConstantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstantId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownConstant(s.to_string()))
    }
}

impl Serialize for ConstantId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Which constant to compute and with which parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantRequest {
    pub id: ConstantId,
    pub alpha: Option<f64>,
    pub p: Option<f64>,
    pub t: Option<f64>,
    /// Second exponent for p–q comparisons; not read by [`evaluate`].
    pub q: Option<f64>,
    pub strategy: Strategy,
    /// Scan points of the outer `t` supremum in `cnj_p`.
    pub t_grid: usize,
}

impl ConstantRequest {
    pub fn new(id: ConstantId) -> Self {
        Self {
            id,
            alpha: None,
            p: None,
            t: None,
            q: None,
            strategy: Strategy::default(),
            t_grid: DEFAULT_T_GRID,
        }
    }

    pub fn alpha(mut self, alpha: f64) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn p(mut self, p: f64) -> Self {
        self.p = Some(p);
        self
    }

    pub fn t(mut self, t: f64) -> Self {
        self.t = Some(t);
        self
    }

    pub fn q(mut self, q: f64) -> Self {
        self.q = Some(q);
        self
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn t_grid(mut self, t_grid: usize) -> Self {
        self.t_grid = t_grid;
        self
    }
}

/// Computes the requested constant.
pub fn evaluate(space: &NormedSpace, req: &ConstantRequest) -> Result<Estimate> {
    let need = |v: Option<f64>, name: &'static str| v.ok_or(Error::MissingParameter(name));
    let s = &req.strategy;
    match req.id {
        ConstantId::GammaP => gamma_p(space, need(req.p, "p")?, need(req.t, "t")?, s),
        ConstantId::CinjIso => cinj_iso(space, need(req.alpha, "alpha")?, need(req.p, "p")?, s),
        ConstantId::CinjViaGamma => cinj_via_gamma(space, need(req.alpha, "alpha")?, need(req.p, "p")?, s),
        ConstantId::CnjP => cnj_p(space, need(req.p, "p")?, s, req.t_grid),
        ConstantId::CnjModifiedP => cnj_modified_p(space, need(req.p, "p")?, s),
        ConstantId::James => james(space, s),
        ConstantId::Schaffer => schaffer(space, s),
        ConstantId::Rho => rho(space, need(req.t, "t")?, s),
        ConstantId::Jxp => jxp(space, need(req.p, "p")?, need(req.t, "t")?, s),
        ConstantId::NuP => nu_p(space, need(req.p, "p")?, s),
        ConstantId::OmegaPrime => omega_prime(space, s),
        ConstantId::SmoothnessQuotient => {
            smoothness_quotient(space, need(req.p, "p")?, need(req.alpha, "alpha")?, s)
        }
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=0.5).contains(&alpha) {
        return Err(invalid("alpha", alpha, "must lie in [0, 1/2]"));
    }
    Ok(())
}

pub(crate) fn check_p(p: f64) -> Result<()> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(invalid("p", p, "must be a finite number >= 1"));
    }
    Ok(())
}

pub(crate) fn check_t(t: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(invalid("t", t, "must lie in [0, 1]"));
    }
    Ok(())
}

/// `‖x1 + t·x2‖^p + ‖x1 − t·x2‖^p`.
#[inline]
fn pm_power_sum(space: &NormedSpace, x1: &[f64], x2: &[f64], t: f64, p: f64) -> f64 {
    let plus = space.norm_of(&combine(1.0, x1, t, x2));
    let minus = space.norm_of(&combine(1.0, x1, -t, x2));
    pow(plus, p) + pow(minus, p)
}

fn sphere_sup(space: &NormedSpace, f: &Objective, strategy: &Strategy) -> Result<Estimate> {
    maximize(space, f, [Region::Sphere; 2], strategy)
}

/// The objective of γ^p_X(t).
pub fn gamma_objective(p: f64, t: f64) -> Objective {
    let scale = 2f64.powf(p - 1.0);
    Objective::new(format!("gamma_p(p={p},t={t})"), true, move |s, a, b| {
        Some(pm_power_sum(s, a, b, t, p) / scale)
    })
}

/// γ^p_X(t) = sup (‖x1+t·x2‖^p + ‖x1−t·x2‖^p)/2^{p−1} over `S × S`.
pub fn gamma_p(space: &NormedSpace, p: f64, t: f64, strategy: &Strategy) -> Result<Estimate> {
    check_p(p)?;
    check_t(t)?;
    Ok(sphere_sup(space, &gamma_objective(p, t), strategy)?
        .with_meta("p", p)
        .with_meta("t", t))
}

/// The C^I_NJ ratio at the isosceles pair `(u1 + u2, u1 − u2)`.
///
/// On `S × S` it coincides with `(‖u1+τu2‖^p + ‖u1−τu2‖^p)/2^p`, τ = 1−2α,
/// which is jointly convex; the flag is set on that basis.
pub fn cinj_objective(alpha: f64, p: f64) -> Objective {
    Objective::new(format!("cinj_iso(alpha={alpha},p={p})"), true, move |s, u1, u2| {
        let x1 = combine(1.0, u1, 1.0, u2);
        let x2 = combine(1.0, u1, -1.0, u2);
        let sum = s.norm_of(&combine(1.0, &x1, 1.0, &x2));
        if sum <= SUM_NORM_GUARD {
            return None;
        }
        let a = s.norm_of(&combine(alpha, &x1, 1.0 - alpha, &x2));
        let b = s.norm_of(&combine(1.0 - alpha, &x1, alpha, &x2));
        Some((pow(a, p) + pow(b, p)) / pow(sum, p))
    })
}

/// C^I_NJ(α,p,X) as a direct supremum over isosceles pairs, parametrized by
/// pairs of unit vectors. The witness is returned as the isosceles pair.
pub fn cinj_iso(space: &NormedSpace, alpha: f64, p: f64, strategy: &Strategy) -> Result<Estimate> {
    check_alpha(alpha)?;
    check_p(p)?;
    let mut est = sphere_sup(space, &cinj_objective(alpha, p), strategy)?;
    let (u1, u2) = &est.witness;
    let x1 = u1.combine(1.0, 1.0, u2)?;
    let x2 = u1.combine(1.0, -1.0, u2)?;
    est.witness = (x1, x2);
    Ok(est.with_meta("alpha", alpha).with_meta("p", p))
}

/// C^I_NJ(α,p,X) computed as ½·γ^p_X(1−2α).
pub fn cinj_via_gamma(space: &NormedSpace, alpha: f64, p: f64, strategy: &Strategy) -> Result<Estimate> {
    check_alpha(alpha)?;
    check_p(p)?;
    let t = 1.0 - 2.0 * alpha;
    Ok(gamma_p(space, p, t, strategy)?
        .map_value(|g| 0.5 * g)
        .with_meta("alpha", alpha))
}

/// Outer supremum over `t ∈ [0, 1]` of a family of inner estimates.
fn sweep_estimates(
    inner: impl Fn(f64) -> Result<Estimate> + Sync,
    t_grid: usize,
) -> Result<Estimate> {
    let failure = Mutex::new(None);
    let evaluations = AtomicU64::new(0);
    let swept = t_sweep(
        |t| match inner(t) {
            Ok(e) => {
                evaluations.fetch_add(e.evaluations, Ordering::Relaxed);
                e.value
            }
            Err(e) => {
                failure.lock().expect("not poisoned").get_or_insert(e);
                f64::NAN
            }
        },
        0.0,
        1.0,
        t_grid,
        T_REFINE,
    );
    if let Some(e) = failure.into_inner().expect("not poisoned") {
        return Err(e);
    }
    let (t_star, value) = swept?;
    let mut est = inner(t_star)?;
    debug_assert_eq!(est.value.to_bits(), value.to_bits());
    est.value = value;
    est.evaluations += evaluations.into_inner();
    Ok(est.with_meta("t_star", t_star))
}

/// C^(p)_NJ(X) = sup over `t ∈ [0,1]` of γ^p_X(t)/(1+t^p).
pub fn cnj_p(space: &NormedSpace, p: f64, strategy: &Strategy, t_grid: usize) -> Result<Estimate> {
    check_p(p)?;
    let est = sweep_estimates(
        |t| Ok(gamma_p(space, p, t, strategy)?.map_value(|g| g / (1.0 + t.powf(p)))),
        t_grid,
    )?;
    Ok(est.with_meta("p", p))
}

/// C^(p)_NJ(X) through C^I_NJ: sup over `t` of 2·C^I_NJ((1−t)/2, p, X)/(1+t^p).
pub fn cnj_p_via_cinj(space: &NormedSpace, p: f64, strategy: &Strategy, t_grid: usize) -> Result<Estimate> {
    check_p(p)?;
    let est = sweep_estimates(
        |t| {
            let alpha = ((1.0 - t) / 2.0).clamp(0.0, 0.5);
            Ok(cinj_iso(space, alpha, p, strategy)?.map_value(|c| 2.0 * c / (1.0 + t.powf(p))))
        },
        t_grid,
    )?;
    Ok(est.with_meta("p", p))
}

/// C̃^(p)_NJ(X), taken as sup over `S × S` of (‖x1+x2‖^p + ‖x1−x2‖^p)/2^p.
pub fn cnj_modified_p(space: &NormedSpace, p: f64, strategy: &Strategy) -> Result<Estimate> {
    check_p(p)?;
    let scale = 2f64.powf(p);
    let f = Objective::new(format!("cnj_modified_p(p={p})"), true, move |s, a, b| {
        Some(pm_power_sum(s, a, b, 1.0, p) / scale)
    });
    Ok(sphere_sup(space, &f, strategy)?.with_meta("p", p).with_note(INFERRED_NOTE))
}

/// Which end of the arc of isosceles partners to take.
#[derive(Clone, Copy)]
enum ArcEnd {
    /// Largest `‖x + y‖`.
    First,
    /// Smallest `‖x + y‖`.
    Last,
}

fn partner(space: &NormedSpace, x: &[f64], d: &[f64], end: ArcEnd) -> Vector {
    let (first, last) = unit_partners(space, x, d);
    match end {
        ArcEnd::First => first,
        ArcEnd::Last => last,
    }
}

/// Extremum of `‖x + y‖` over unit isosceles pairs.
///
/// In the plane `x` runs over an angular grid and `y` is the relevant end of
/// its partner arc; partners on the other side of `x` are negatives of these
/// and give the same `‖x + y‖`. In higher dimensions the plane through `x`
/// is chosen by a second unit vector `d`, and multi-start searches over
/// `(x, d)`.
fn iso_sum_extremum(space: &NormedSpace, strategy: &Strategy, sense: Sense) -> Result<Estimate> {
    let end = match sense {
        Sense::Supremum => ArcEnd::First,
        Sense::Infimum => ArcEnd::Last,
    };
    let sign = match sense {
        Sense::Supremum => 1.0,
        Sense::Infimum => -1.0,
    };
    let (grid, multistart) = match *strategy {
        Strategy::Exact => return Err(Error::NonConvexObjective),
        Strategy::Auto { grid, multistart } => (Some(grid), multistart),
        Strategy::Grid2D(g) => (Some(g), MultiStartConfig::default()),
        Strategy::MultiStart(m) => (None, m),
    };
    match grid {
        Some(cfg) if space.dim() == 2 => Ok(iso_sum_scan_2d(space, &cfg, end, sign)),
        _ => iso_sum_multistart(space, &multistart, end, sign, sense),
    }
}

fn iso_sum_scan_2d(space: &NormedSpace, cfg: &GridConfig, end: ArcEnd, sign: f64) -> Estimate {
    use rayon::prelude::*;
    use std::f64::consts::{FRAC_PI_2, TAU};

    let pair = |theta: f64| {
        let d = [theta.cos(), theta.sin()];
        let n = space.norm_of(&d);
        let x = [d[0] / n, d[1] / n];
        let perp = [(theta + FRAC_PI_2).cos(), (theta + FRAC_PI_2).sin()];
        let y = partner(space, &x, &perp, end);
        let v = space.norm_of(&combine(1.0, &x, 1.0, y.coords()));
        (x, y, v)
    };
    let step = TAU / cfg.resolution as f64;
    let scores: Vec<f64> = (0..cfg.resolution)
        .into_par_iter()
        .map(|k| sign * pair(k as f64 * step).2)
        .collect();
    let mut k_best = 0;
    for (k, v) in scores.iter().enumerate() {
        if *v > scores[k_best] {
            k_best = k;
        }
    }
    let mut theta = k_best as f64 * step;
    let mut best = scores[k_best];
    let mut evaluations = cfg.resolution as u64;
    let mut width = step;
    for _ in 0..cfg.refine {
        let (th, v) = golden_max(|th| Some(sign * pair(th).2), theta - width, theta + width, 24);
        evaluations += 24;
        if let Some(v) = v {
            if v > best {
                best = v;
                theta = th;
            }
        }
        width *= 0.5;
    }
    let (x, y, v) = pair(theta);
    let sense = if sign > 0.0 { Sense::Supremum } else { Sense::Infimum };
    Estimate {
        value: v,
        witness: (Vector::from_raw(x.to_vec()), y),
        strategy: StrategyTag::Grid2D,
        exact: false,
        evaluations,
        sense,
        meta: Default::default(),
        notes: Vec::new(),
    }
}

fn iso_sum_multistart(
    space: &NormedSpace,
    cfg: &MultiStartConfig,
    end: ArcEnd,
    sign: f64,
    sense: Sense,
) -> Result<Estimate> {
    let f = Objective::new("iso_sum", false, move |s, x, d| {
        let (first, last) = unit_partners(s, x, d);
        let y = match end {
            ArcEnd::First => first,
            ArcEnd::Last => last,
        };
        if y.coords().iter().any(|c| !c.is_finite()) {
            return None;
        }
        Some(sign * s.norm_of(&combine(1.0, x, 1.0, y.coords())))
    });
    let est = sup_pairs_nd_in(space, &f, [Region::Sphere; 2], cfg)?;
    let (x, d) = &est.witness;
    let y = partner(space, x.coords(), d.coords(), end);
    let value = space.norm_of(&combine(1.0, x.coords(), 1.0, y.coords()));
    Ok(Estimate {
        value,
        witness: (x.clone(), y),
        sense,
        ..est
    })
}

/// James constant J(X) = sup min(‖x1+x2‖, ‖x1−x2‖) over `S × S`. The
/// isosceles form (sup of ‖x+y‖ over unit isosceles pairs) is computed
/// independently and recorded as `isosceles_form`.
pub fn james(space: &NormedSpace, strategy: &Strategy) -> Result<Estimate> {
    let f = Objective::new("james", false, |s, a, b| {
        let plus = s.norm_of(&combine(1.0, a, 1.0, b));
        let minus = s.norm_of(&combine(1.0, a, -1.0, b));
        Some(plus.min(minus))
    });
    let est = sphere_sup(space, &f, strategy)?;
    let iso = iso_sum_extremum(space, strategy, Sense::Supremum)?;
    Ok(est.with_meta("isosceles_form", iso.value))
}

/// Schäffer constant S(X) = inf ‖x+y‖ over unit isosceles pairs; the
/// estimate is an upper bound. Records `two_over_j` = 2/J(X).
pub fn schaffer(space: &NormedSpace, strategy: &Strategy) -> Result<Estimate> {
    let est = iso_sum_extremum(space, strategy, Sense::Infimum)?;
    let j = james(space, strategy)?;
    Ok(est.with_meta("two_over_j", 2.0 / j.value).with_meta("james", j.value))
}

/// Modulus of smoothness ρ_X(t) = sup (‖x1+t·x2‖+‖x1−t·x2‖)/2 − 1.
pub fn rho(space: &NormedSpace, t: f64, strategy: &Strategy) -> Result<Estimate> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(invalid("t", t, "must be a finite number >= 0"));
    }
    let f = Objective::new(format!("rho(t={t})"), true, move |s, a, b| {
        Some(pm_power_sum(s, a, b, t, 1.0) / 2.0 - 1.0)
    });
    Ok(sphere_sup(space, &f, strategy)?.with_meta("t", t))
}

/// J_{X,p}(t) = sup ((‖x1+t·x2‖^p + ‖x1−t·x2‖^p)/2)^{1/p}.
pub fn jxp(space: &NormedSpace, p: f64, t: f64, strategy: &Strategy) -> Result<Estimate> {
    check_p(p)?;
    if !(t > 0.0 && t <= 1.0) {
        return Err(invalid("t", t, "must lie in (0, 1]"));
    }
    let f = Objective::new(format!("jxp(p={p},t={t})"), true, move |s, a, b| {
        Some((pm_power_sum(s, a, b, t, p) / 2.0).powf(1.0 / p))
    });
    Ok(sphere_sup(space, &f, strategy)?.with_meta("p", p).with_meta("t", t))
}

/// ν_X(p) = sup (‖x1+x2‖^p + ‖x1−x2‖^p)/(‖x1‖^p + ‖x2‖^p) over nonzero
/// pairs. The ratio is invariant under joint scaling and under swapping the
/// two vectors, so it is searched over `x1 ∈ S`, `x2 ∈ B`.
pub fn nu_p(space: &NormedSpace, p: f64, strategy: &Strategy) -> Result<Estimate> {
    check_p(p)?;
    let f = Objective::new(format!("nu_p(p={p})"), false, move |s, a, b| {
        let den = s.norm_of(a).powf(p) + s.norm_of(b).powf(p);
        if den <= 0.0 {
            return None;
        }
        Some(pm_power_sum(s, a, b, 1.0, p) / den)
    });
    Ok(maximize(space, &f, [Region::Sphere, Region::Ball], strategy)?
        .with_meta("p", p)
        .with_note("reduced to x1 in S, x2 in B by homogeneity and swap symmetry"))
}

/// Ω′(X) = sup (‖x1+2x2‖² + ‖2x1+x2‖²)/(5‖x1+x2‖²) over isosceles pairs,
/// parametrized by unit pairs. Records `nine_tenths_gamma` = (9/10)·γ_X(1/3).
pub fn omega_prime(space: &NormedSpace, strategy: &Strategy) -> Result<Estimate> {
    let f = Objective::new("omega_prime", true, |s, u1, u2| {
        let x1 = combine(1.0, u1, 1.0, u2);
        let x2 = combine(1.0, u1, -1.0, u2);
        let sum = s.norm_of(&combine(1.0, &x1, 1.0, &x2));
        if sum <= SUM_NORM_GUARD {
            return None;
        }
        let a = s.norm_of(&combine(1.0, &x1, 2.0, &x2));
        let b = s.norm_of(&combine(2.0, &x1, 1.0, &x2));
        Some((a * a + b * b) / (5.0 * sum * sum))
    });
    let mut est = sphere_sup(space, &f, strategy)?;
    let (u1, u2) = &est.witness;
    est.witness = (u1.combine(1.0, 1.0, u2)?, u1.combine(1.0, -1.0, u2)?);
    let gamma = gamma_p(space, 2.0, 1.0 / 3.0, strategy)?;
    Ok(est.with_meta("nine_tenths_gamma", 0.9 * gamma.value))
}

/// ((2^{p−1}·C^I_NJ(α,p,X))^{1/p} − 1)/(1 − 2α), with C^I_NJ from
/// [`cinj_via_gamma`]. Tends to 0 as α → 1/2 exactly when the space is
/// uniformly smooth.
pub fn smoothness_quotient(space: &NormedSpace, p: f64, alpha: f64, strategy: &Strategy) -> Result<Estimate> {
    check_p(p)?;
    check_alpha(alpha)?;
    if alpha == 0.5 {
        return Err(invalid("alpha", alpha, "the quotient divides by 1 − 2α"));
    }
    let c = cinj_via_gamma(space, alpha, p, strategy)?;
    let cinj = c.value;
    let q = ((2f64.powf(p - 1.0) * cinj).powf(1.0 / p) - 1.0) / (1.0 - 2.0 * alpha);
    Ok(c.map_value(|_| q).with_meta("cinj", cinj).with_meta("p", p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l1() -> NormedSpace {
        NormedSpace::l1(2).unwrap()
    }
    fn l2() -> NormedSpace {
        NormedSpace::l2(2).unwrap()
    }
    fn linf() -> NormedSpace {
        NormedSpace::linf(2).unwrap()
    }
    fn fast() -> Strategy {
        Strategy::Grid2D(GridConfig {
            resolution: 256,
            refine: 20,
            radii: 4,
        })
    }

    #[test]
    fn ids_round_trip() {
        for id in ConstantId::ALL {
            assert_eq!(id.to_string().parse::<ConstantId>().unwrap(), id);
        }
        assert_eq!(
            "gamma".parse::<ConstantId>().unwrap_err(),
            Error::UnknownConstant("gamma".into())
        );
    }

    #[test]
    fn gamma_at_zero() {
        for p in [1.0, 2.0, 3.0] {
            let g = gamma_p(&l1(), p, 0.0, &Strategy::Exact).unwrap();
            assert!((g.value - 2f64.powf(2.0 - p)).abs() < 1e-12);
        }
        let g = gamma_p(&l2(), 2.0, 0.5, &fast()).unwrap();
        assert!((g.value - 1.25).abs() < 1e-6);
    }

    #[test]
    fn cinj_examples() {
        let c = cinj_iso(&l1(), 0.25, 2.0, &Strategy::Exact).unwrap();
        assert!((c.value - 1.125).abs() < 1e-12);
        assert!(c.exact);
        let c = cinj_iso(&l2(), 0.25, 2.0, &fast()).unwrap();
        assert!((c.value - 0.625).abs() < 1e-6);
        let c = cinj_via_gamma(&linf(), 0.0, 1.0, &Strategy::Exact).unwrap();
        assert_eq!(c.value, 2.0);
        let c = cinj_via_gamma(&l2(), 0.1, 2.0, &fast()).unwrap();
        assert!((c.value - 0.82).abs() < 1e-6);
    }

    #[test]
    fn cinj_witness_is_isosceles() {
        let c = cinj_iso(&NormedSpace::hexagon(), 0.1, 2.0, &Strategy::Exact).unwrap();
        let (x1, x2) = &c.witness;
        let s = NormedSpace::hexagon();
        let d = crate::orthogonality::iso_defect(&s, x1, x2).unwrap();
        assert!(d.abs() < 1e-12);
    }

    #[test]
    fn parameter_validation() {
        assert!(cinj_iso(&l2(), 0.6, 2.0, &fast()).is_err());
        assert!(cinj_iso(&l2(), -0.1, 2.0, &fast()).is_err());
        assert!(gamma_p(&l2(), 0.5, 0.5, &fast()).is_err());
        assert!(gamma_p(&l2(), 2.0, 1.5, &fast()).is_err());
        assert!(jxp(&l2(), 2.0, 0.0, &fast()).is_err());
        assert!(rho(&l2(), -1.0, &fast()).is_err());
        assert!(smoothness_quotient(&l2(), 2.0, 0.5, &fast()).is_err());
        let req = ConstantRequest::new(ConstantId::CinjIso).p(2.0);
        assert_eq!(evaluate(&l2(), &req).unwrap_err(), Error::MissingParameter("alpha"));
    }

    #[test]
    fn cnj_p_polyhedral() {
        for s in [l1(), linf()] {
            let c = cnj_p(&s, 2.0, &Strategy::Exact, DEFAULT_T_GRID).unwrap();
            assert!((c.value - 2.0).abs() < 1e-9);
            assert_eq!(c.meta["t_star"], 1.0);
        }
    }

    #[test]
    fn modified_cnj() {
        let c = cnj_modified_p(&l1(), 2.0, &Strategy::Exact).unwrap();
        assert_eq!(c.value, 2.0);
        assert!(c.notes.iter().any(|n| n.starts_with("inferred definition")));
        let c = cnj_modified_p(&l1(), 1.0, &Strategy::Exact).unwrap();
        assert_eq!(c.value, 2.0);
    }

    #[test]
    fn james_and_schaffer() {
        let j = james(&l2(), &fast()).unwrap();
        assert!((j.value - 2f64.sqrt()).abs() < 1e-6);
        assert!((j.meta["isosceles_form"] - 2f64.sqrt()).abs() < 1e-6);
        let j = james(&l1(), &fast()).unwrap();
        assert!((j.value - 2.0).abs() < 1e-9);
        let s = schaffer(&linf(), &fast()).unwrap();
        assert!((s.value - 1.0).abs() < 1e-6);
        assert_eq!(s.sense, Sense::Infimum);
        assert!(james(&l1(), &Strategy::Exact).is_err());
    }

    #[test]
    fn rho_jxp_nu() {
        let r = rho(&l1(), 0.3, &Strategy::Exact).unwrap();
        assert!((r.value - 0.3).abs() < 1e-12);
        let r = rho(&l2(), 1.0, &fast()).unwrap();
        assert!((r.value - (2f64.sqrt() - 1.0)).abs() < 1e-6);
        let j = jxp(&l1(), 1.0, 1.0, &Strategy::Exact).unwrap();
        assert_eq!(j.value, 2.0);
        let n = nu_p(&l1(), 2.0, &fast()).unwrap();
        assert!((n.value - 4.0).abs() < 1e-9);
        let n = nu_p(&l2(), 2.0, &fast()).unwrap();
        assert!((n.value - 2.0).abs() < 1e-6);
    }

    #[test]
    fn omega_matches_gamma() {
        let o = omega_prime(&l2(), &fast()).unwrap();
        assert!((o.value - 1.0).abs() < 1e-6);
        let o = omega_prime(&l1(), &Strategy::Exact).unwrap();
        assert!((o.value - o.meta["nine_tenths_gamma"]).abs() < 1e-12);
    }

    #[test]
    fn smoothness_examples() {
        let q = smoothness_quotient(&l1(), 1.0, 0.4, &Strategy::Exact).unwrap();
        assert!((q.value - 1.0).abs() < 1e-12);
        let q = smoothness_quotient(&l2(), 2.0, 0.499, &fast()).unwrap();
        assert!(q.value <= 0.01 && q.value > 0.0);
    }
}
