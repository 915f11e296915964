//! Exact rational linear algebra and polyhedra in dimension at most 3.

pub mod hull;
pub mod linalg;
pub mod ops;
pub mod polytope;
pub mod rational;

pub use hull::convex_hull;
pub use linalg::{RatMatrix, RatVec};
pub use ops::{
    cut, dilate, halfspace_intersection, lattice_points, linear_image, minkowski_sum, slice_at,
    translate, volume,
};
pub use polytope::{Halfspace, Membership, Polytope};
pub use rational::{fmt_rational, int, parse_rational, rat, Rational};
