//! Piecewise-linear bodies over the exceptional curves and their slices.
//!
//! With the flag `E_j ⊃ {generic point}` the lower boundary vanishes and the
//! upper boundary is `beta_j(t) = P_t . E_j` along `L - t(E_1 + ... + E_N)`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::picard::PicardClass;
use super::ray::{ray_breakpoints, RayEnd, RayProfile};
use super::zariski::zariski;
use super::SurfaceSpec;
use crate::error::{Error, Result};
use crate::geometry::rational::{serde_rational, serde_rational_vec};
use crate::geometry::{convex_hull, int, linear_image, volume, Polytope, RatMatrix, RatVec, Rational};

/// `beta(t) = value_at_start + slope * (t - start)` on `[start, end]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearPiece {
    #[serde(with = "serde_rational")]
    pub start: Rational,
    /// `None` when the piece runs up to an irrational end.
    #[serde(serialize_with = "ser_opt")]
    pub end: Option<Rational>,
    #[serde(with = "serde_rational")]
    pub value_at_start: Rational,
    #[serde(with = "serde_rational")]
    pub slope: Rational,
}

fn ser_opt<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl LinearPiece {
    pub fn at(&self, t: &Rational) -> Rational {
        &self.value_at_start + &self.slope * (t - &self.start)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceRayBody {
    /// Point index (0-based).
    pub j: usize,
    /// `0`, the interior breakpoints, and the end of the ray when rational.
    #[serde(with = "serde_rational_vec")]
    pub breakpoints: Vec<Rational>,
    pub end: RayEnd,
    pub beta: Vec<LinearPiece>,
    /// `{0 <= t <= end, 0 <= y <= beta(t)}`; `None` when the end is irrational.
    pub body_blowup_coords: Option<Polytope>,
    /// Preimage of the above under `(x1, x2) -> (x1 + x2, x1)`.
    pub body_deglex_coords: Option<Polytope>,
}

/// `(t, y) -> (y, t - y)`, inverse of `(x1, x2) -> (x1 + x2, x1)`.
pub fn blowup_to_deglex() -> RatMatrix {
    RatMatrix::from_ints(&[&[0, 1], &[1, -1]]).expect("2x2")
}

fn require_pullback(l: &PicardClass) -> Result<()> {
    if l.m.iter().any(|a| !a.is_zero()) {
        return Err(Error::OutOfRange(
            "bodies over exceptional curves need a class pulled back from the plane (all m_i = 0)".into(),
        ));
    }
    Ok(())
}

fn beta_pieces(spec: &SurfaceSpec, prof: &RayProfile, j: usize) -> Result<Vec<LinearPiece>> {
    let e = PicardClass::exceptional(spec.num_points(), j);
    let idx = spec.exceptional_index(j);
    let mut out = Vec::new();
    for (piece, (start, end)) in prof.pieces.iter().zip(prof.piece_bounds()) {
        if idx.is_some_and(|k| piece.support.contains(&k)) {
            return Err(Error::Invariant(format!("E_{} entered the negative part before the end of the ray", j + 1)));
        }
        out.push(LinearPiece {
            start,
            end,
            value_at_start: piece.positive_at_start.dot(&e),
            slope: piece.positive_slope.dot(&e),
        });
    }
    Ok(out)
}

pub fn surface_body(spec: &SurfaceSpec, l: &PicardClass, j: usize) -> Result<SurfaceRayBody> {
    let prof = ray_breakpoints(spec, l, &PicardClass::exceptional_sum(spec.num_points()))?;
    surface_body_from_profile(spec, &prof, j)
}

/// Same as [`surface_body`] reusing an already computed ray.
pub fn surface_body_from_profile(spec: &SurfaceSpec, prof: &RayProfile, j: usize) -> Result<SurfaceRayBody> {
    let n = spec.num_points();
    if j >= n {
        return Err(Error::PointIndex { index: j, count: n });
    }
    require_pullback(&prof.l)?;
    if spec.exceptional_index(j).is_some_and(|k| prof.support_at_zero.contains(&k)) {
        return Err(Error::PointInBaseLocus(j + 1));
    }
    let beta = beta_pieces(spec, prof, j)?;
    let mut breakpoints: Vec<Rational> = std::iter::once(Rational::zero()).chain(prof.breakpoints()).collect();
    let (blowup, deglex) = match prof.end.exact() {
        Some(mu) => {
            breakpoints.push(mu.clone());
            let mut pts = Vec::new();
            for t in &breakpoints {
                let b = beta_at(&beta, t);
                if b.is_negative() {
                    return Err(Error::Invariant("negative slice length".into()));
                }
                pts.push(RatVec::new(vec![t.clone(), Rational::zero()]));
                pts.push(RatVec::new(vec![t.clone(), b]));
            }
            let body = convex_hull(&pts)?;
            let deg = linear_image(&body, &blowup_to_deglex(), &RatVec::zeros(2))?;
            (Some(body), Some(deg))
        }
        None => (None, None),
    };
    Ok(SurfaceRayBody {
        j,
        breakpoints,
        end: prof.end.clone(),
        beta,
        body_blowup_coords: blowup,
        body_deglex_coords: deglex,
    })
}

fn beta_at(beta: &[LinearPiece], t: &Rational) -> Rational {
    let piece = beta.iter().rev().find(|p| &p.start <= t).unwrap_or(&beta[0]);
    piece.at(t)
}

impl SurfaceRayBody {
    pub fn beta_at(&self, t: &Rational) -> Rational {
        beta_at(&self.beta, t)
    }

    /// Exact area `int_0^end beta`, when the end is rational.
    pub fn area(&self) -> Option<Rational> {
        let mu = self.end.exact()?;
        Some(integrate(&self.beta, mu))
    }
}

/// `int_0^t` of a continuous piecewise-linear function, by trapezoids.
fn integrate(beta: &[LinearPiece], t: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for p in beta {
        if &p.start >= t {
            break;
        }
        let hi = match &p.end {
            Some(e) if e < t => e.clone(),
            _ => t.clone(),
        };
        acc += (p.at(&p.start) + p.at(&hi)) * (&hi - &p.start) / int(2);
    }
    acc
}

/// Length of the slice at `t` of the body over `E_j`, for `0 <= t < end`.
pub fn restricted_volume_slice(spec: &SurfaceSpec, l: &PicardClass, j: usize, t: &Rational) -> Result<Rational> {
    let body = surface_body(spec, l, j)?;
    if t.is_negative() || !body.end.exceeds(t) {
        return Err(Error::OutOfRange(format!("t = {t} outside [0, {})", body.end.describe())));
    }
    Ok(body.beta_at(t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolumeDifference {
    #[serde(with = "serde_rational")]
    pub t: Rational,
    /// `Vol(L) - Vol(L - tG)` from two independent decompositions.
    #[serde(with = "serde_rational")]
    pub lhs: Rational,
    /// `2 int_0^t sum_j beta_j`.
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
    pub equal: bool,
}

/// Compares the drop in volume along the ray with the integrated slice lengths,
/// for `0 <= t <= end`.
pub fn volume_difference_check(spec: &SurfaceSpec, l: &PicardClass, t: &Rational) -> Result<VolumeDifference> {
    require_pullback(l)?;
    let n = spec.num_points();
    let g = PicardClass::exceptional_sum(n);
    let prof = ray_breakpoints(spec, l, &g)?;
    if t.is_negative() || !prof.end.reaches(t) {
        return Err(Error::OutOfRange(format!("t = {t} outside [0, {}]", prof.end.describe())));
    }
    let v0 = zariski(spec, l)?.volume;
    let vt = zariski(spec, &l.sub(&g.scale(t)))?.volume;
    let lhs = v0 - vt;
    let mut integral = Rational::zero();
    for j in 0..n {
        integral += integrate(&beta_pieces(spec, &prof, j)?, t);
    }
    let rhs = int(2) * integral;
    let equal = lhs == rhs;
    Ok(VolumeDifference { t: t.clone(), lhs, rhs, equal })
}

pub fn zariski_chamber_count(spec: &SurfaceSpec, l: &PicardClass) -> Result<usize> {
    let prof = ray_breakpoints(spec, l, &PicardClass::exceptional_sum(spec.num_points()))?;
    Ok(prof.chamber_count())
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneBody {
    /// `Conv(0, eps e_1, (1/(N eps)) e_2)` in deglex coordinates.
    pub body: Polytope,
    /// Slice length as a function of `t`.
    pub profile: Vec<LinearPiece>,
}

/// Body of `O(1)` at each of `N >= 9` very general points, given the constant `eps`.
pub fn p2_body_formula(n: usize, eps: &Rational) -> Result<PlaneBody> {
    if n < 9 {
        return Err(Error::OutOfRange(format!("closed form needs at least 9 points, got {n}")));
    }
    let nq = int(n as i64);
    if !eps.is_positive() || &nq * eps * eps > int(1) {
        return Err(Error::OutOfRange(format!("eps = {eps} outside (0, 1/sqrt({n})]")));
    }
    let far = (&nq * eps).recip();
    let body = convex_hull(&[
        RatVec::zeros(2),
        RatVec::new(vec![eps.clone(), Rational::zero()]),
        RatVec::new(vec![Rational::zero(), far.clone()]),
    ])?;
    let mut profile = vec![LinearPiece {
        start: Rational::zero(),
        end: Some(eps.clone()),
        value_at_start: Rational::zero(),
        slope: int(1),
    }];
    if &far > eps {
        profile.push(LinearPiece {
            start: eps.clone(),
            end: Some(far.clone()),
            value_at_start: eps.clone(),
            slope: -eps / (&far - eps),
        });
    }
    Ok(PlaneBody { body, profile })
}

impl PlaneBody {
    pub fn area(&self) -> Rational {
        volume(&self.body)
    }

    pub fn profile_at(&self, t: &Rational) -> Rational {
        beta_at(&self.profile, t)
    }
}

/// `c * Sigma_2` in the plane.
pub fn scaled_simplex(c: &Rational) -> Polytope {
    convex_hull(&[
        RatVec::zeros(2),
        RatVec::new(vec![c.clone(), Rational::zero()]),
        RatVec::new(vec![Rational::zero(), c.clone()]),
    ])
    .expect("two-dimensional points")
}
