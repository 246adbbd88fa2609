//! Isosceles orthogonality: `x ⊥ y` iff `‖x + y‖ = ‖x − y‖`.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::spaces::{combine, NormedSpace, Vector};

/// Inputs to [`pair_from_sphere`] must have norm within this of 1.
pub const UNIT_TOL: f64 = 1e-9;

/// Pairs with `‖x1 + x2‖` at or below this are excluded from ratio objectives.
pub const SUM_NORM_GUARD: f64 = 1e-9;

/// Default search radius for the multiplier in [`iso_complete`].
pub const DEFAULT_S_MAX: f64 = 1e6;

/// An isosceles-orthogonal pair with its defect and `‖x1 + x2‖`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoPair {
    pub x1: Vector,
    pub x2: Vector,
    pub defect: f64,
    pub sum_norm: f64,
}

impl IsoPair {
    /// The sphere pair `((x1 + x2)/2, (x1 − x2)/2)` this pair was built from.
    pub fn to_sphere_pair(&self) -> (Vector, Vector) {
        let u1 = self.x1.combine(0.5, 0.5, &self.x2).expect("same dimension");
        let u2 = self.x1.combine(0.5, -0.5, &self.x2).expect("same dimension");
        (u1, u2)
    }
}

#[inline]
pub(crate) fn defect_of(space: &NormedSpace, x: &[f64], y: &[f64]) -> f64 {
    space.norm_of(&combine(1.0, x, 1.0, y)) - space.norm_of(&combine(1.0, x, -1.0, y))
}

/// `‖x + y‖ − ‖x − y‖`.
pub fn iso_defect(space: &NormedSpace, x: &Vector, y: &Vector) -> Result<f64> {
    space.check(x)?;
    space.check(y)?;
    Ok(defect_of(space, x.coords(), y.coords()))
}

/// `|‖x + y‖ − ‖x − y‖| ≤ tol · max(‖x‖, ‖y‖, 1)`.
pub fn is_isosceles(space: &NormedSpace, x: &Vector, y: &Vector, tol: f64) -> Result<bool> {
    if !(tol >= 0.0) {
        return Err(invalid("tol", tol, "tolerance must be non-negative"));
    }
    let d = iso_defect(space, x, y)?;
    let scale = space
        .norm_of(x.coords())
        .max(space.norm_of(y.coords()))
        .max(1.0);
    Ok(d.abs() <= tol * scale)
}

/// Maps a pair of unit vectors to the isosceles pair `(u1 + u2, u1 − u2)`,
/// for which `‖x1 + x2‖ = ‖x1 − x2‖ = 2`.
pub fn pair_from_sphere(space: &NormedSpace, u1: &Vector, u2: &Vector) -> Result<IsoPair> {
    for u in [u1, u2] {
        let n = space.norm(u)?;
        if (n - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit(n));
        }
    }
    let x1 = u1.combine(1.0, 1.0, u2)?;
    let x2 = u1.combine(1.0, -1.0, u2)?;
    let sum_norm = space.norm_of(&combine(1.0, x1.coords(), 1.0, x2.coords()));
    let defect = defect_of(space, x1.coords(), x2.coords());
    Ok(IsoPair {
        x1,
        x2,
        defect,
        sum_norm,
    })
}

fn is_parallel(x: &[f64], d: &[f64]) -> bool {
    let xx: f64 = x.iter().map(|c| c * c).sum();
    let xd: f64 = x.iter().zip(d).map(|(a, b)| a * b).sum();
    let dd: f64 = d.iter().map(|c| c * c).sum();
    let c = xd / xx;
    let resid: f64 = x
        .iter()
        .zip(d)
        .map(|(a, b)| (b - c * a) * (b - c * a))
        .sum();
    resid <= 1e-24 * dd.max(f64::MIN_POSITIVE)
}

/// Finds `y = d + s·x` with `x ⊥ y`.
///
/// The defect `s ↦ ‖(1+s)x + d‖ − ‖(s−1)x + d‖` is non-decreasing and tends
/// to `±2‖x‖`, so a root exists. The bracket is grown outward from `s = 0`
/// by doubling and then bisected. Roots need not be unique (for polyhedral
/// norms the root set can be an interval); the first bracketed one is
/// returned.
pub fn iso_complete(space: &NormedSpace, x: &Vector, d: &Vector, s_max: f64) -> Result<Vector> {
    space.check(x)?;
    space.check(d)?;
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    if is_parallel(x.coords(), d.coords()) {
        return Err(Error::Parallel);
    }
    let (xs, ds) = (x.coords(), d.coords());
    let y_at = |s: f64| combine(1.0, ds, s, xs);
    let h = |s: f64| defect_of(space, xs, &y_at(s));
    let accept = |s: f64| {
        let y = y_at(s);
        let scale = space.norm_of(xs).max(space.norm_of(&y));
        defect_of(space, xs, &y).abs() <= 1e-10 * scale
    };

    let h0 = h(0.0);
    if accept(0.0) {
        return Ok(Vector::from_raw(y_at(0.0).to_vec()));
    }
    // walk towards the sign change
    let dir = if h0 > 0.0 { -1.0 } else { 1.0 };
    let (mut near, mut far): (f64, f64) = (0.0, dir);
    loop {
        if far.abs() > s_max {
            return Err(Error::CompletionFailed(s_max));
        }
        if h(far) * dir >= 0.0 {
            break;
        }
        near = far;
        far *= 2.0;
    }

    // bisection: h(near) has the sign of -dir, h(far) does not
    let mut s = far;
    for _ in 0..200 {
        if accept(s) {
            break;
        }
        let mid = 0.5 * (near + far);
        if mid == near || mid == far {
            break;
        }
        if h(mid) * dir >= 0.0 {
            far = mid;
        } else {
            near = mid;
        }
        s = if accept(near) { near } else { far };
    }
    if !accept(s) {
        return Err(Error::CompletionFailed(s_max));
    }
    Ok(Vector::from_raw(y_at(s).to_vec()))
}

/// Unit vectors `y` in `span{x, d}` with `x ⊥ y`, for a unit vector `x`.
///
/// Along the half circle `v(ψ) ∝ cos ψ·x + sin ψ·d`, `ψ ∈ [0, π]`, the
/// defect falls from 2 to −2 and `‖x + v‖` is non-increasing, so the set of
/// partners is an arc. Returns its two ends: the first maximizes `‖x + y‖`
/// over the partners in this half plane, the second minimizes it.
pub fn unit_partners(space: &NormedSpace, x: &[f64], d: &[f64]) -> (Vector, Vector) {
    let dir = |psi: f64| {
        let raw = combine(psi.cos(), x, psi.sin(), d);
        let n = space.norm_of(&raw);
        raw.iter().map(|c| c / n).collect::<Vec<f64>>()
    };
    let defect = |psi: f64| defect_of(space, x, &dir(psi));
    const EPS: f64 = 1e-14;

    // first ψ where the defect drops to ≤ EPS
    let (mut lo, mut hi) = (0.0, std::f64::consts::PI);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if defect(mid) > EPS {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let first = dir(hi);

    // last ψ where the defect is still ≥ −EPS
    let (mut lo, mut hi) = (0.0, std::f64::consts::PI);
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if defect(mid) >= -EPS {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let last = dir(lo);
    (Vector::from_raw(first), Vector::from_raw(last))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::try_from(c).unwrap()
    }

    #[test]
    fn defect_examples() {
        let l2 = NormedSpace::l2(2).unwrap();
        let l1 = NormedSpace::l1(2).unwrap();
        let linf = NormedSpace::linf(2).unwrap();
        assert_eq!(iso_defect(&l2, &v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap(), 0.0);
        assert_eq!(iso_defect(&l1, &v(&[1.0, 0.0]), &v(&[1.0, 0.0])).unwrap(), 2.0);
        assert_eq!(iso_defect(&linf, &v(&[1.0, 0.0]), &v(&[0.0, -1.0])).unwrap(), 0.0);
        assert!(iso_defect(&l2, &v(&[1.0, 0.0]), &v(&[1.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn predicate_examples() {
        let l1 = NormedSpace::l1(2).unwrap();
        let l2 = NormedSpace::l2(2).unwrap();
        assert!(is_isosceles(&l1, &v(&[1.0, 1.0]), &v(&[1.0, -1.0]), 1e-9).unwrap());
        assert!(!is_isosceles(&l2, &v(&[1.0, 0.0]), &v(&[1.0, 0.0]), 1e-9).unwrap());
        for s in [l1, l2, NormedSpace::hexagon()] {
            assert!(is_isosceles(&s, &v(&[0.3, -2.0]), &v(&[0.0, 0.0]), 1e-9).unwrap());
        }
        assert!(is_isosceles(&NormedSpace::l2(2).unwrap(), &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), -1.0).is_err());
    }

    #[test]
    fn pair_from_sphere_examples() {
        let l2 = NormedSpace::l2(2).unwrap();
        let p = pair_from_sphere(&l2, &v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap();
        assert_eq!(p.x1.coords(), &[1.0, 1.0]);
        assert_eq!(p.x2.coords(), &[1.0, -1.0]);
        assert_eq!(p.sum_norm, 2.0);

        let l1 = NormedSpace::l1(2).unwrap();
        let p = pair_from_sphere(&l1, &v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap();
        assert_eq!((p.x1.coords(), p.x2.coords()), (&[1.0, 1.0][..], &[1.0, -1.0][..]));
        assert_eq!(p.sum_norm, 2.0);

        let linf = NormedSpace::linf(2).unwrap();
        let u1 = linf.unit_vector(&v(&[1.0, 1.0])).unwrap();
        let u2 = linf.unit_vector(&v(&[1.0, -1.0])).unwrap();
        let p = pair_from_sphere(&linf, &u1, &u2).unwrap();
        assert_eq!((p.x1.coords(), p.x2.coords()), (&[2.0, 0.0][..], &[0.0, 2.0][..]));
        assert_eq!(p.sum_norm, 2.0);
        assert_eq!(p.defect, 0.0);

        assert!(matches!(
            pair_from_sphere(&l2, &v(&[2.0, 0.0]), &v(&[0.0, 1.0])),
            Err(Error::NotUnit(_))
        ));
    }

    #[test]
    fn completion_examples() {
        let l2 = NormedSpace::l2(2).unwrap();
        let y = iso_complete(&l2, &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), DEFAULT_S_MAX).unwrap();
        assert_eq!(y.coords(), &[0.0, 1.0]);

        for (space, x, d) in [
            (NormedSpace::l1(2).unwrap(), [1.0, 0.0], [1.0, 1.0]),
            (NormedSpace::linf(2).unwrap(), [1.0, 0.0], [0.3, 1.0]),
            (NormedSpace::hexagon(), [0.2, -0.7], [5.0, 1.0]),
            (NormedSpace::lp(3.0, 2).unwrap(), [1.0, 2.0], [-3.0, 0.1]),
        ] {
            let (x, d) = (v(&x), v(&d));
            let y = iso_complete(&space, &x, &d, DEFAULT_S_MAX).unwrap();
            let scale = space.norm(&x).unwrap().max(space.norm(&y).unwrap());
            assert!(iso_defect(&space, &x, &y).unwrap().abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn completion_errors() {
        let l2 = NormedSpace::l2(2).unwrap();
        assert_eq!(
            iso_complete(&l2, &v(&[1.0, 1.0]), &v(&[-2.0, -2.0]), DEFAULT_S_MAX),
            Err(Error::Parallel)
        );
        assert_eq!(
            iso_complete(&l2, &v(&[0.0, 0.0]), &v(&[1.0, 0.0]), DEFAULT_S_MAX),
            Err(Error::ZeroVector)
        );
        // the root sits near s = -1000 here
        assert_eq!(
            iso_complete(&l2, &v(&[0.001, 0.0]), &v(&[1.0, 0.001]), 1.0),
            Err(Error::CompletionFailed(1.0))
        );
    }

    #[test]
    fn partners_are_unit_and_orthogonal() {
        for space in [
            NormedSpace::l1(2).unwrap(),
            NormedSpace::linf(2).unwrap(),
            NormedSpace::l2(2).unwrap(),
            NormedSpace::hexagon(),
        ] {
            for k in 0..24 {
                let a = k as f64 * 0.261;
                let x = space.unit_vector(&v(&[a.cos(), a.sin()])).unwrap();
                let d = [-a.sin(), a.cos()];
                let (first, last) = unit_partners(&space, x.coords(), &d);
                for y in [&first, &last] {
                    assert!((space.norm(y).unwrap() - 1.0).abs() < 1e-12);
                    assert!(iso_defect(&space, &x, y).unwrap().abs() < 1e-9);
                }
                let s_first = space.norm(&x.combine(1.0, 1.0, &first).unwrap()).unwrap();
                let s_last = space.norm(&x.combine(1.0, 1.0, &last).unwrap()).unwrap();
                assert!(s_first >= s_last - 1e-9);
            }
        }
    }
}
