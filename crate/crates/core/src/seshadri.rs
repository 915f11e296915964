//! The simplex-fit constant of a family of bodies and its companion checks.
//!
//! `xi` is the largest `t` with `t * Sigma_n` inside every body, where
//! `Sigma_n = Conv(0, e_1, ..., e_n)`. Only the vertices `0, t e_i` need
//! testing, so each facet `a.x <= b` contributes the bound `t <= b / max_i a_i`.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::check::{Check, Relation};
use crate::error::{Error, Result};
use crate::geometry::rational::serde_rational;
use crate::geometry::{int, volume, Halfspace, Membership, Polytope, RatVec, Rational};
use crate::surface::{surface_body, PicardClass, SurfaceSpec};
use crate::toric::ToricInput;

pub const CAPACITY_NOTE: &str = "xi is the simplex parameter: t * Sigma_n fits in every body for t <= xi. \
Under z -> (|z_1|^2, ..., |z_n|^2) the ball of radius r maps onto r^2 * Sigma_n, so the matching ball radius is sqrt(xi).";

/// One body per chosen point, all in the same ambient dimension.
#[derive(Clone, Debug, Serialize)]
pub struct BodyFamily {
    pub n: usize,
    pub bodies: Vec<Polytope>,
}

impl BodyFamily {
    pub fn new(bodies: Vec<Polytope>) -> Result<Self> {
        let n = bodies.first().ok_or(Error::EmptyInput("body family"))?.dim();
        for b in &bodies {
            if b.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
            }
            if !b.in_nonnegative_orthant() {
                return Err(Error::OutOfRange("body leaves the nonnegative orthant".into()));
            }
        }
        Ok(BodyFamily { n, bodies })
    }

    pub fn from_toric(input: &ToricInput) -> Result<Self> {
        Self::new(input.bodies()?)
    }

    /// Bodies over the exceptional curves, in deglex coordinates.
    pub fn from_surface(spec: &SurfaceSpec, l: &PicardClass) -> Result<Self> {
        let mut bodies = Vec::new();
        for j in 0..spec.num_points() {
            let b = surface_body(spec, l, j)?;
            bodies.push(
                b.body_deglex_coords
                    .ok_or(Error::IrrationalEndpoint("the bodies are not rational polytopes"))?,
            );
        }
        Self::new(bodies)
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    pub fn total_volume(&self) -> Rational {
        self.bodies.iter().map(volume).fold(Rational::zero(), |a, b| a + b)
    }

    /// Whether `t * Sigma_n` lies in the closure of every body.
    pub fn simplex_fits(&self, t: &Rational) -> bool {
        let mut pts = vec![RatVec::zeros(self.n)];
        pts.extend((0..self.n).map(|i| RatVec::unit(self.n, i).scale(t)));
        self.bodies
            .iter()
            .all(|b| pts.iter().all(|p| b.contains(p, Membership::Closure)))
    }

    pub fn dilate(&self, c: &Rational) -> Self {
        BodyFamily { n: self.n, bodies: self.bodies.iter().map(|b| crate::geometry::dilate(b, c)).collect() }
    }
}

/// The facet that pins `xi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub body: usize,
    /// Index into the body's halfspace list.
    pub halfspace: usize,
    pub constraint: Halfspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeshadriResult {
    #[serde(with = "serde_rational")]
    pub xi: Rational,
    /// `None` only when some body is empty.
    pub witness: Option<Witness>,
    pub capacity_note: &'static str,
}

pub fn xi_simplex_fit(fam: &BodyFamily) -> Result<SeshadriResult> {
    let mut best: Option<(Rational, Witness)> = None;
    for (bi, body) in fam.bodies.iter().enumerate() {
        if body.is_empty() {
            return Ok(SeshadriResult { xi: Rational::zero(), witness: None, capacity_note: CAPACITY_NOTE });
        }
        for (hi, h) in body.halfspaces().iter().enumerate() {
            if body.is_coordinate_facet(hi) {
                continue;
            }
            // The origin itself must fit.
            let bound = if h.offset.is_negative() {
                Some(Rational::zero())
            } else {
                let top = h.normal.iter().max().cloned().unwrap_or_else(Rational::zero);
                top.is_positive().then(|| &h.offset / top)
            };
            let Some(bound) = bound else { continue };
            if best.as_ref().is_none_or(|(b, _)| &bound < b) {
                best = Some((bound, Witness { body: bi, halfspace: hi, constraint: h.clone() }));
            }
        }
    }
    let (xi, w) = best.ok_or_else(|| Error::Invariant("no facet bounds the simplex".into()))?;
    Ok(SeshadriResult { xi, witness: Some(w), capacity_note: CAPACITY_NOTE })
}

/// `xi` fits, and so does no rational above it with denominator at most `10^6`.
///
/// Fitting is monotone in `t`, so testing the single value `xi + 1/(q 10^6 + 1)`
/// (with `q` the denominator of `xi`) covers every such rational.
pub fn certify(fam: &BodyFamily, xi: &Rational) -> bool {
    if fam.bodies.iter().any(Polytope::is_empty) {
        return xi.is_zero();
    }
    let q = xi.denom().clone();
    let step = Rational::new(BigInt::one(), q * BigInt::from(1_000_000) + BigInt::one());
    fam.simplex_fits(xi) && !fam.simplex_fits(&(xi + step))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DomainVolume {
    /// Lebesgue volume is `lebesgue_coefficient * pi^pi_power`.
    #[serde(with = "serde_rational")]
    pub lebesgue_coefficient: Rational,
    pub pi_power: usize,
    /// `n! * vol(body)`.
    #[serde(with = "serde_rational")]
    pub symplectic: Rational,
}

/// Volume of the preimage of `body` under `z -> (|z_1|^2, ..., |z_n|^2)`.
pub fn okounkov_domain_volume(body: &Polytope) -> DomainVolume {
    let n = body.dim();
    let v = volume(body);
    let fact = int((1..=n as i64).product());
    DomainVolume { symplectic: &v * fact, lebesgue_coefficient: v, pi_power: n }
}

/// `xi(scaled) == scale * xi(base)`.
pub fn scaling_check(base: &BodyFamily, scaled: &BodyFamily, scale: &Rational) -> Result<Check> {
    let a = xi_simplex_fit(base)?.xi;
    let b = xi_simplex_fit(scaled)?.xi;
    Ok(Check::new(format!("xi scales by {scale}"), b, Relation::Eq, scale * a))
}

/// `xi(L + L') >= xi(L) + xi(L')`.
pub fn superadditivity_check(a: &BodyFamily, b: &BodyFamily, sum: &BodyFamily) -> Result<Check> {
    let xa = xi_simplex_fit(a)?.xi;
    let xb = xi_simplex_fit(b)?.xi;
    let xs = xi_simplex_fit(sum)?.xi;
    Ok(Check::new("xi superadditive", xs, Relation::Ge, xa + xb))
}

/// Scaling checks for the toric dilate by `scale` and, when `minkowski`
/// (partner, sum) is given, superadditivity under the Minkowski sum.
pub fn seshadri_property_suite(
    fam: &BodyFamily,
    fam_scaled: &BodyFamily,
    scale: &Rational,
    minkowski: Option<(&BodyFamily, &BodyFamily)>,
) -> Result<Vec<Check>> {
    let mut out = vec![scaling_check(fam, fam_scaled, scale)?];
    if let Some((partner, sum)) = minkowski {
        out.push(superadditivity_check(fam, partner, sum)?);
    }
    Ok(out)
}

/// `xi^n <= vol_total / N`, where `vol_total` is the self-intersection `L^n`
/// (for a polytope, `n!` times its Euclidean volume).
pub fn upper_bound_check(fam: &BodyFamily, vol_total: &Rational) -> Result<Check> {
    let xi = xi_simplex_fit(fam)?.xi;
    let lhs: Rational = Pow::pow(&xi, fam.n as u32);
    let rhs = vol_total / int(fam.len() as i64);
    Ok(Check::new("xi^n <= Vol / N", lhs, Relation::Le, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{convex_hull, rat};
    use crate::surface::body::scaled_simplex;
    use crate::toric::DelzantPolytope;

    fn toric(vs: &[Vec<i64>], chosen: &[usize]) -> ToricInput {
        ToricInput::new(DelzantPolytope::from_int_vertices(vs).unwrap(), chosen.to_vec()).unwrap()
    }

    fn square() -> Vec<Vec<i64>> {
        vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]
    }

    #[test]
    fn nine_equal_simplices() {
        let fam = BodyFamily::new(vec![scaled_simplex(&rat(1, 3)); 9]).unwrap();
        let r = xi_simplex_fit(&fam).unwrap();
        assert_eq!(r.xi, rat(1, 3));
        assert!(certify(&fam, &r.xi));
        let ub = upper_bound_check(&fam, &int(1)).unwrap();
        assert!(ub.pass);
        assert_eq!((ub.lhs, ub.rhs), (rat(1, 9), rat(1, 9)));
        assert_eq!(okounkov_domain_volume(&fam.bodies[0]).symplectic, rat(1, 9));
    }

    #[test]
    fn two_point_surface_bodies() {
        let spec = SurfaceSpec::delpezzo(2).unwrap();
        let fam = BodyFamily::from_surface(&spec, &PicardClass::hyperplane(2)).unwrap();
        let r = xi_simplex_fit(&fam).unwrap();
        assert_eq!(r.xi, rat(1, 2));
        assert!(certify(&fam, &r.xi));
        let w = r.witness.unwrap();
        assert_eq!(w.constraint, Halfspace::from_ints(&[2, 1], 1).unwrap());
    }

    #[test]
    fn empty_body_forces_zero() {
        let fam = BodyFamily::new(vec![scaled_simplex(&int(1)), Polytope::empty(2)]).unwrap();
        let r = xi_simplex_fit(&fam).unwrap();
        assert_eq!(r.xi, int(0));
        assert!(r.witness.is_none());
    }

    #[test]
    fn toric_scaling_and_sums() {
        let sq = toric(&square(), &[0, 1, 2, 3]);
        let fam = BodyFamily::from_toric(&sq).unwrap();
        let fam3 = BodyFamily::from_toric(&sq.dilate(3).unwrap()).unwrap();
        let c = scaling_check(&fam, &fam3, &int(3)).unwrap();
        assert!(c.pass);
        assert_eq!(c.lhs, rat(3, 2));
        let sum = ToricInput::new(sq.polytope.fan_sum(&sq.polytope).unwrap(), sq.chosen.clone()).unwrap();
        let s = superadditivity_check(&fam, &fam, &BodyFamily::from_toric(&sum).unwrap()).unwrap();
        assert!(s.pass);
        assert!(upper_bound_check(&fam, &int(2)).unwrap().pass);
    }

    #[test]
    fn simplex_two_scaling() {
        let s = toric(&[vec![0, 0], vec![1, 0], vec![0, 1]], &[0, 1, 2]);
        let fam = BodyFamily::from_toric(&s).unwrap();
        assert_eq!(xi_simplex_fit(&fam).unwrap().xi, rat(1, 2));
        let fam2 = BodyFamily::from_toric(&s.dilate(2).unwrap()).unwrap();
        assert_eq!(xi_simplex_fit(&fam2).unwrap().xi, int(1));
        let ub = upper_bound_check(&fam, &int(1)).unwrap();
        assert_eq!((ub.lhs, ub.rhs), (rat(1, 4), rat(1, 3)));
    }

    #[test]
    fn domain_volumes() {
        let unit = convex_hull(&[
            RatVec::from_ints(&[0, 0]),
            RatVec::from_ints(&[1, 0]),
            RatVec::from_ints(&[0, 1]),
            RatVec::from_ints(&[1, 1]),
        ])
        .unwrap();
        assert_eq!(okounkov_domain_volume(&unit).symplectic, int(2));
        assert_eq!(okounkov_domain_volume(&Polytope::empty(2)).symplectic, int(0));
    }
}
