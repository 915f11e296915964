//! Zariski decompositions along a ray `L - tG`.
//!
//! On each piece the negative part is affine in `t`. A piece ends when a new
//! curve becomes orthogonal to the positive part, and the ray ends at the
//! first `t` where `P_t^2` vanishes.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::picard::PicardClass;
use super::zariski::{right_limit, zariski};
use super::SurfaceSpec;
use crate::error::{Error, Result};
use crate::geometry::rational::{exact_sqrt, fmt_rational, serde_rational, serde_rational_vec, to_f64};
use crate::geometry::{int, Rational};

/// Where the ray leaves the big cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayEnd {
    Exact(Rational),
    /// `origin + tau`, `tau` the least positive root of `q0 + 2 q1 tau + q2 tau^2`.
    Quadratic { origin: Rational, q0: Rational, q1: Rational, q2: Rational },
}

impl RayEnd {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            RayEnd::Exact(r) => Some(r),
            RayEnd::Quadratic { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RayEnd::Exact(r) => to_f64(r),
            RayEnd::Quadratic { origin, q0, q1, q2 } => {
                let (q0, q1, q2) = (to_f64(q0), to_f64(q1), to_f64(q2));
                let tau = if q2 == 0.0 {
                    -q0 / (2.0 * q1)
                } else {
                    (-q1 - (q1 * q1 - q0 * q2).sqrt()) / q2
                };
                to_f64(origin) + tau
            }
        }
    }

    /// Exact test `t < end`.
    pub fn exceeds(&self, t: &Rational) -> bool {
        match self {
            RayEnd::Exact(r) => t < r,
            RayEnd::Quadratic { origin, q0, q1, q2 } => {
                let tau = t - origin;
                !tau.is_positive() || !root_within(q0, q1, q2, &tau)
            }
        }
    }

    /// Exact test `t <= end`.
    pub fn reaches(&self, t: &Rational) -> bool {
        match self {
            RayEnd::Exact(r) => t <= r,
            RayEnd::Quadratic { .. } => self.exceeds(t),
        }
    }
}

impl Serialize for RayEnd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            RayEnd::Exact(r) => {
                m.serialize_entry("exact", &fmt_rational(r))?;
            }
            RayEnd::Quadratic { origin, q0, q1, q2 } => {
                m.serialize_entry("origin", &fmt_rational(origin))?;
                m.serialize_entry(
                    "quadratic",
                    &[fmt_rational(q0), fmt_rational(q1), fmt_rational(q2)],
                )?;
                m.serialize_entry("approx", &format!("{:.12}", self.to_f64()))?;
            }
        }
        m.end()
    }
}

/// Whether `q0 + 2 q1 x + q2 x^2` (with `q0 > 0`) has a root in `(0, tau]`.
fn root_within(q0: &Rational, q1: &Rational, q2: &Rational, tau: &Rational) -> bool {
    let at = q0 + int(2) * q1 * tau + q2 * tau * tau;
    if !at.is_positive() {
        return true;
    }
    if q2.is_positive() && q1.is_negative() {
        let vertex = -q1 / q2;
        return &vertex <= tau && !(q1 * q1 - q0 * q2).is_negative();
    }
    false
}

fn has_positive_root(q0: &Rational, q1: &Rational, q2: &Rational) -> bool {
    if q2.is_negative() {
        true
    } else if q2.is_zero() {
        q1.is_negative()
    } else {
        q1.is_negative() && !(q1 * q1 - q0 * q2).is_negative()
    }
}

fn least_root(origin: &Rational, q0: &Rational, q1: &Rational, q2: &Rational) -> RayEnd {
    if q2.is_zero() {
        return RayEnd::Exact(origin - q0 / (int(2) * q1));
    }
    let disc = q1 * q1 - q0 * q2;
    match exact_sqrt(&disc) {
        Some(r) => RayEnd::Exact(origin + (-q1 - r) / q2),
        None => RayEnd::Quadratic {
            origin: origin.clone(),
            q0: q0.clone(),
            q1: q1.clone(),
            q2: q2.clone(),
        },
    }
}

/// One interval of constant support; `N_t = sum (a_k + (t - start) b_k) C_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayPiece {
    #[serde(with = "serde_rational")]
    pub start: Rational,
    pub support: Vec<usize>,
    #[serde(with = "serde_rational_vec")]
    pub coefficients_at_start: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub coefficient_slopes: Vec<Rational>,
    /// `P_t` at the start of the piece.
    pub positive_at_start: PicardClass,
    /// `dP_t/dt` on the piece.
    pub positive_slope: PicardClass,
}

impl RayPiece {
    pub fn positive_at(&self, t: &Rational) -> PicardClass {
        self.positive_at_start.add(&self.positive_slope.scale(&(t - &self.start)))
    }

    pub fn coefficients_at(&self, t: &Rational) -> Vec<Rational> {
        let dt = t - &self.start;
        self.coefficients_at_start
            .iter()
            .zip(&self.coefficient_slopes)
            .map(|(a, b)| a + b * &dt)
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RayProfile {
    pub l: PicardClass,
    pub g: PicardClass,
    pub support_at_zero: Vec<usize>,
    pub pieces: Vec<RayPiece>,
    pub end: RayEnd,
}

impl RayProfile {
    /// Parameters in `(0, end)` where the support changes.
    pub fn breakpoints(&self) -> Vec<Rational> {
        self.pieces.iter().skip(1).map(|p| p.start.clone()).collect()
    }

    pub fn piece_at(&self, t: &Rational) -> &RayPiece {
        self.pieces
            .iter()
            .rev()
            .find(|p| &p.start <= t)
            .unwrap_or(&self.pieces[0])
    }

    pub fn positive_at(&self, t: &Rational) -> PicardClass {
        self.piece_at(t).positive_at(t)
    }

    /// Number of distinct supports met on `[0, end)`.
    pub fn chamber_count(&self) -> usize {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(self.support_at_zero.clone());
        for p in &self.pieces {
            seen.insert(p.support.clone());
        }
        seen.len()
    }

    /// Endpoints of each piece, the last one `None` when the end is irrational.
    pub fn piece_bounds(&self) -> Vec<(Rational, Option<Rational>)> {
        let mut out = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            let end = match self.pieces.get(i + 1) {
                Some(q) => Some(q.start.clone()),
                None => self.end.exact().cloned(),
            };
            out.push((p.start.clone(), end));
        }
        out
    }
}

/// Walks `L - tG` from `t = 0` until the class stops being big.
pub fn ray_breakpoints(spec: &SurfaceSpec, l: &PicardClass, g: &PicardClass) -> Result<RayProfile> {
    spec.check_class(l)?;
    spec.check_class(g)?;
    let z0 = zariski(spec, l)?;
    if !z0.volume.is_positive() {
        return Err(Error::NotBig);
    }
    let dir = g.scale(&int(-1));
    let mut t = Rational::zero();
    let mut seed = z0.support.clone();
    let mut pieces = Vec::new();
    let cap = spec.curves().len() + 2;
    for _ in 0..=cap {
        let d_t = l.sub(&g.scale(&t));
        let (support, a, b) = right_limit(spec, &d_t, &dir, &seed)?;
        let n_start = support
            .iter()
            .zip(&a)
            .fold(PicardClass::zero(spec.num_points()), |acc, (&k, c)| acc.add(&spec.curves()[k].scale(c)));
        let n_slope = support
            .iter()
            .zip(&b)
            .fold(PicardClass::zero(spec.num_points()), |acc, (&k, c)| acc.add(&spec.curves()[k].scale(c)));
        let p = d_t.sub(&n_start);
        let w = dir.sub(&n_slope);
        let (q0, q1, q2) = (p.self_intersection(), p.dot(&w), w.self_intersection());
        if !q0.is_positive() {
            return Err(Error::Invariant("positive part lost bigness inside the ray".into()));
        }

        let mut next: Option<Rational> = None;
        for (i, c) in spec.curves().iter().enumerate() {
            if support.contains(&i) {
                continue;
            }
            let s = w.dot(c);
            if !s.is_negative() {
                continue;
            }
            let v = p.dot(c);
            if !v.is_positive() {
                return Err(Error::Invariant("curve should already be in the support".into()));
            }
            let tau = v / -s;
            if next.as_ref().is_none_or(|n| &tau < n) {
                next = Some(tau);
            }
        }

        pieces.push(RayPiece {
            start: t.clone(),
            support: support.clone(),
            coefficients_at_start: a,
            coefficient_slopes: b,
            positive_at_start: p,
            positive_slope: w,
        });

        let ends_here = match &next {
            Some(tau) => root_within(&q0, &q1, &q2, tau),
            None => {
                if !has_positive_root(&q0, &q1, &q2) {
                    return Err(Error::Invariant("ray never leaves the big cone".into()));
                }
                true
            }
        };
        if ends_here {
            let end = least_root(&t, &q0, &q1, &q2);
            return Ok(RayProfile {
                l: l.clone(),
                g: g.clone(),
                support_at_zero: z0.support,
                pieces,
                end,
            });
        }
        t += next.expect("event exists");
        seed = support;
    }
    Err(Error::Invariant("too many support changes along the ray".into()))
}

impl RayEnd {
    pub fn describe(&self) -> String {
        match self {
            RayEnd::Exact(r) => fmt_rational(r),
            RayEnd::Quadratic { .. } => format!("~{:.9}", self.to_f64()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    #[test]
    fn two_points() {
        let spec = SurfaceSpec::delpezzo(2).unwrap();
        let prof = ray_breakpoints(&spec, &PicardClass::hyperplane(2), &PicardClass::exceptional_sum(2)).unwrap();
        assert_eq!(prof.breakpoints(), vec![rat(1, 2)]);
        assert_eq!(prof.end, RayEnd::Exact(int(1)));
        assert_eq!(prof.chamber_count(), 2);
        assert_eq!(
            prof.positive_at(&rat(3, 4)),
            PicardClass::from_ints(2, &[1, 1]).scale(&rat(1, 4))
        );
    }

    #[test]
    fn one_point() {
        let spec = SurfaceSpec::delpezzo(1).unwrap();
        let prof = ray_breakpoints(&spec, &PicardClass::hyperplane(1), &PicardClass::exceptional_sum(1)).unwrap();
        assert!(prof.breakpoints().is_empty());
        assert_eq!(prof.end, RayEnd::Exact(int(1)));
        assert_eq!(prof.chamber_count(), 1);
    }

    #[test]
    fn nine_points_with_exceptional_curves_only() {
        let curves = (0..9).map(|i| PicardClass::exceptional(9, i)).collect();
        let spec = SurfaceSpec::with_curves(9, curves).unwrap();
        let prof = ray_breakpoints(&spec, &PicardClass::hyperplane(9), &PicardClass::exceptional_sum(9)).unwrap();
        assert_eq!(prof.end, RayEnd::Exact(rat(1, 3)));
    }

    #[test]
    fn irrational_end() {
        let curves = (0..2).map(|i| PicardClass::exceptional(2, i)).collect();
        let spec = SurfaceSpec::with_curves(2, curves).unwrap();
        let prof = ray_breakpoints(&spec, &PicardClass::hyperplane(2), &PicardClass::exceptional_sum(2)).unwrap();
        // 1 - 2t^2 = 0
        assert!(prof.end.exact().is_none());
        assert!((prof.end.to_f64() - 0.5f64.sqrt()).abs() < 1e-12);
        assert!(prof.end.exceeds(&rat(707, 1000)));
        assert!(!prof.end.exceeds(&rat(708, 1000)));
    }

    #[test]
    fn negative_part_grows() {
        for n in 2..=8 {
            let spec = SurfaceSpec::delpezzo(n).unwrap();
            let prof = ray_breakpoints(&spec, &PicardClass::hyperplane(n), &PicardClass::exceptional_sum(n)).unwrap();
            for p in &prof.pieces {
                assert!(p.coefficient_slopes.iter().all(|b| !b.is_negative()));
                assert!(p.coefficients_at_start.iter().all(|a| !a.is_negative()));
            }
            assert!(prof.chamber_count() <= 2, "n = {n}");
        }
    }
}
