//! Bounded convex polytopes in R^n (n at most 3), kept in both representations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::RatVec;
use super::rational::{common_denominator, serde_rational, Rational};
use crate::error::{Error, Result};

/// The closed halfspace `{x : normal . x <= offset}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: RatVec,
    #[serde(with = "serde_rational")]
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: RatVec, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroNormal);
        }
        Ok(Halfspace { normal, offset }.normalized())
    }

    /// `coeffs . x <= offset` from integer data.
    pub fn from_ints(coeffs: &[i64], offset: i64) -> Result<Self> {
        Self::new(RatVec::from_ints(coeffs), Rational::from_integer(offset.into()))
    }

    /// Rescales by a positive factor so the normal is a primitive integer vector.
    pub fn normalized(self) -> Self {
        let den = common_denominator(self.normal.iter());
        let nums: Vec<BigInt> = self
            .normal
            .iter()
            .map(|a| (a * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = nums.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        if g.is_zero() {
            return self;
        }
        let factor = Rational::new(den, g);
        Halfspace {
            normal: self.normal.scale(&factor),
            offset: &self.offset * &factor,
        }
    }

    pub fn eval(&self, x: &RatVec) -> Rational {
        self.normal.dot(x)
    }

    /// Slack `offset - normal . x`; nonnegative inside.
    pub fn slack(&self, x: &RatVec) -> Rational {
        &self.offset - self.normal.dot(x)
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &RatVec) -> bool {
        self.slack(x).is_zero()
    }

    /// Index `i` when this is `-x_i <= 0`.
    pub fn coordinate_axis(&self) -> Option<usize> {
        if !self.offset.is_zero() {
            return None;
        }
        let mut axis = None;
        for (i, a) in self.normal.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if axis.is_some() || !a.is_negative() {
                return None;
            }
            axis = Some(i);
        }
        axis
    }
}

/// Membership flavours for [`Polytope::contains`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Closure,
    /// Strict on every facet except the coordinate facets `x_i >= 0`.
    EssentialInterior,
}

#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    affine_dim: Option<usize>,
    vertices: Vec<RatVec>,
    halfspaces: Vec<Halfspace>,
    coordinate_facets: Vec<usize>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Polytope {
    /// Assembles a polytope from already-consistent parts; sorts and flags coordinate facets.
    pub(crate) fn from_parts(
        dim: usize,
        affine_dim: usize,
        mut vertices: Vec<RatVec>,
        halfspaces: Vec<Halfspace>,
    ) -> Self {
        vertices.sort();
        vertices.dedup();
        let mut halfspaces: Vec<Halfspace> =
            halfspaces.into_iter().map(Halfspace::normalized).collect();
        halfspaces.sort();
        halfspaces.dedup();
        let coordinate_facets = halfspaces
            .iter()
            .enumerate()
            .filter(|(_, h)| h.coordinate_axis().is_some())
            .map(|(i, _)| i)
            .collect();
        Polytope {
            dim,
            affine_dim: Some(affine_dim),
            vertices,
            halfspaces,
            coordinate_facets,
        }
    }

    pub fn empty(dim: usize) -> Self {
        Polytope {
            dim,
            affine_dim: None,
            vertices: Vec::new(),
            halfspaces: Vec::new(),
            coordinate_facets: Vec::new(),
        }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull, `None` when empty.
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_dim
    }

    pub fn is_empty(&self) -> bool {
        self.affine_dim.is_none()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == Some(self.dim)
    }

    /// Extreme points in lexicographic order.
    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Indices into [`Self::halfspaces`] of the facets `x_i >= 0`.
    pub fn coordinate_facets(&self) -> &[usize] {
        &self.coordinate_facets
    }

    pub fn is_coordinate_facet(&self, idx: usize) -> bool {
        self.coordinate_facets.binary_search(&idx).is_ok()
    }

    pub fn contains(&self, x: &RatVec, mode: Membership) -> bool {
        if self.is_empty() || x.dim() != self.dim {
            return false;
        }
        self.halfspaces.iter().enumerate().all(|(i, h)| {
            let s = h.slack(x);
            match mode {
                Membership::Closure => !s.is_negative(),
                Membership::EssentialInterior if self.is_coordinate_facet(i) => !s.is_negative(),
                Membership::EssentialInterior => s.is_positive(),
            }
        })
    }

    /// Closed containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Polytope) -> bool {
        self.vertices
            .iter()
            .all(|v| other.contains(v, Membership::Closure))
    }

    /// True when every vertex lies in the closed nonnegative orthant.
    pub fn in_nonnegative_orthant(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|a| !a.is_negative()))
    }

    /// True when every vertex has integer coordinates.
    pub fn is_lattice(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|a| a.denom().is_one()))
    }
}

#[derive(Serialize, Deserialize)]
struct RawPolytope {
    dim: usize,
    vertices: Vec<RatVec>,
    #[serde(default)]
    halfspaces: Vec<Halfspace>,
    #[serde(default)]
    coordinate_facets: Vec<usize>,
}

impl Serialize for Polytope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPolytope {
            dim: self.dim,
            vertices: self.vertices.clone(),
            halfspaces: self.halfspaces.clone(),
            coordinate_facets: self.coordinate_facets.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    /// The vertex list is authoritative; supplied halfspaces are only checked against it.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawPolytope::deserialize(d)?;
        if raw.vertices.is_empty() {
            return Ok(Polytope::empty(raw.dim));
        }
        if let Some(v) = raw.vertices.iter().find(|v| v.dim() != raw.dim) {
            return Err(D::Error::custom(Error::DimensionMismatch {
                expected: raw.dim,
                found: v.dim(),
            }));
        }
        let p = super::hull::hull_points(raw.dim, &raw.vertices).map_err(D::Error::custom)?;
        for h in &raw.halfspaces {
            if h.normal.dim() != raw.dim || !p.vertices.iter().all(|v| h.contains(v)) {
                return Err(D::Error::custom(Error::Schema(
                    "halfspaces do not contain the listed vertices".into(),
                )));
            }
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{int, rat};

    #[test]
    fn normalization_is_primitive_and_positive() {
        let h = Halfspace::new(
            RatVec::new(vec![rat(2, 3), rat(4, 3)]),
            rat(2, 1),
        )
        .unwrap();
        assert_eq!(h.normal, RatVec::from_ints(&[1, 2]));
        assert_eq!(h.offset, int(3));
        let c = Halfspace::from_ints(&[0, -5], 0).unwrap();
        assert_eq!(c.coordinate_axis(), Some(1));
        assert_eq!(Halfspace::from_ints(&[0, 5], 0).unwrap().coordinate_axis(), None);
        assert!(matches!(
            Halfspace::from_ints(&[0, 0], 1),
            Err(Error::ZeroNormal)
        ));
    }

    #[test]
    fn empty_contains_nothing() {
        let e = Polytope::empty(2);
        assert!(!e.contains(&RatVec::zeros(2), Membership::Closure));
        assert!(e.is_empty());
    }
}
