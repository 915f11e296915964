//! Exact convex hulls in dimension at most 3.

use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};

use super::linalg::{RatMatrix, RatVec};
use super::polytope::{Halfspace, Polytope};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Convex hull of a nonempty point set in R^1, R^2 or R^3.
///
/// Lower-dimensional hulls are returned with `affine_dim() < dim()`; their
/// H-representation carries the affine hull as pairs of opposite halfspaces.
pub fn convex_hull(points: &[RatVec]) -> Result<Polytope> {
    let first = points.first().ok_or(Error::EmptyInput("point list"))?;
    let n = first.dim();
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    hull_points(n, points)
}

/// Like [`convex_hull`] but also accepts R^0 and an empty list.
pub(crate) fn hull_points(n: usize, points: &[RatVec]) -> Result<Polytope> {
    if let Some(bad) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.dim(),
        });
    }
    if n > 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    let pts: Vec<RatVec> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let Some(p0) = pts.first().cloned() else {
        return Ok(Polytope::empty(n));
    };
    if n == 0 {
        return Ok(Polytope::from_parts(0, 0, vec![p0], Vec::new()));
    }

    let diffs: Vec<RatVec> = pts[1..].iter().map(|p| p.sub(&p0)).collect();
    let (keep, normals_eq) = if diffs.is_empty() {
        (Vec::new(), (0..n).map(|i| RatVec::unit(n, i)).collect())
    } else {
        let m = RatMatrix::from_rows(&diffs)?;
        let (_, pivots) = m.rref();
        (pivots, m.nullspace())
    };
    let d = keep.len();

    let mut halfspaces: Vec<Halfspace> = Vec::new();
    for w in &normals_eq {
        let c = w.dot(&p0);
        halfspaces.push(Halfspace { normal: w.clone(), offset: c.clone() });
        halfspaces.push(Halfspace { normal: w.neg(), offset: -c });
    }
    if d == 0 {
        return Ok(Polytope::from_parts(n, 0, vec![p0], halfspaces));
    }

    let proj: Vec<RatVec> = pts
        .iter()
        .map(|p| RatVec(keep.iter().map(|&i| p[i].clone()).collect()))
        .collect();
    let (vidx, facets) = match d {
        1 => hull_1d(&proj),
        2 => hull_2d(&proj),
        _ => hull_3d(&proj),
    };
    for f in facets {
        let mut normal = RatVec::zeros(n);
        for (k, &i) in keep.iter().enumerate() {
            normal[i] = f.normal[k].clone();
        }
        halfspaces.push(Halfspace { normal, offset: f.offset });
    }
    let vertices = vidx.into_iter().map(|i| pts[i].clone()).collect();
    Ok(Polytope::from_parts(n, d, vertices, halfspaces))
}

fn hull_1d(pts: &[RatVec]) -> (Vec<usize>, Vec<Halfspace>) {
    // Input is sorted, so the extremes are the ends.
    let lo = 0;
    let hi = pts.len() - 1;
    let facets = vec![
        Halfspace { normal: RatVec::from_ints(&[1]), offset: pts[hi][0].clone() },
        Halfspace { normal: RatVec::from_ints(&[-1]), offset: -pts[lo][0].clone() },
    ];
    (vec![lo, hi], facets)
}

pub(crate) fn cross2(o: &RatVec, a: &RatVec, b: &RatVec) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Andrew's monotone chain on lexicographically sorted, distinct points.
/// Returns indices of the strict hull vertices in counter-clockwise order.
pub(crate) fn monotone_chain(pts: &[RatVec]) -> Vec<usize> {
    if pts.len() < 3 {
        return (0..pts.len()).collect();
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * pts.len());
    for i in 0..pts.len() {
        while hull.len() >= 2
            && !cross2(&pts[hull[hull.len() - 2]], &pts[hull[hull.len() - 1]], &pts[i]).is_positive()
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower = hull.len() + 1;
    for i in (0..pts.len() - 1).rev() {
        while hull.len() >= lower
            && !cross2(&pts[hull[hull.len() - 2]], &pts[hull[hull.len() - 1]], &pts[i]).is_positive()
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull
}

/// Counter-clockwise order of distinct points that are already in convex position.
pub(crate) fn ccw_order(pts: &[RatVec]) -> Vec<RatVec> {
    let mut sorted = pts.to_vec();
    sorted.sort();
    sorted.dedup();
    monotone_chain(&sorted).into_iter().map(|i| sorted[i].clone()).collect()
}

fn hull_2d(pts: &[RatVec]) -> (Vec<usize>, Vec<Halfspace>) {
    let ring = monotone_chain(pts);
    let facets = (0..ring.len())
        .map(|k| {
            let a = &pts[ring[k]];
            let b = &pts[ring[(k + 1) % ring.len()]];
            let normal = RatVec(vec![&b[1] - &a[1], &a[0] - &b[0]]);
            let offset = normal.dot(a);
            Halfspace { normal, offset }.normalized()
        })
        .collect();
    (ring, facets)
}

pub(crate) fn cross3(u: &RatVec, v: &RatVec) -> RatVec {
    RatVec(vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ])
}

struct Face {
    v: [usize; 3],
    normal: RatVec,
    offset: Rational,
}

impl Face {
    fn new(pts: &[RatVec], a: usize, b: usize, c: usize) -> Face {
        let normal = cross3(&pts[b].sub(&pts[a]), &pts[c].sub(&pts[a]));
        let offset = normal.dot(&pts[a]);
        Face { v: [a, b, c], normal, offset }
    }

    fn edges(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.v;
        [(a, b), (b, c), (c, a)]
    }
}

/// Incremental hull for full-dimensional point sets in R^3.
fn hull_3d(pts: &[RatVec]) -> (Vec<usize>, Vec<Halfspace>) {
    let i0 = 0;
    let i1 = 1;
    let u = pts[i1].sub(&pts[i0]);
    let i2 = (2..pts.len())
        .find(|&i| !cross3(&u, &pts[i].sub(&pts[i0])).is_zero())
        .expect("full-dimensional input");
    let nrm = cross3(&u, &pts[i2].sub(&pts[i0]));
    let i3 = (2..pts.len())
        .find(|&i| !nrm.dot(&pts[i].sub(&pts[i0])).is_zero())
        .expect("full-dimensional input");

    let mut faces: Vec<Face> = Vec::new();
    // Orient the initial tetrahedron outward.
    let (b, c) = if nrm.dot(&pts[i3].sub(&pts[i0])).is_positive() {
        (i2, i1)
    } else {
        (i1, i2)
    };
    faces.push(Face::new(pts, i0, b, c));
    faces.push(Face::new(pts, i0, c, i3));
    faces.push(Face::new(pts, c, b, i3));
    faces.push(Face::new(pts, b, i0, i3));

    let seed = [i0, i1, i2, i3];
    for p in 0..pts.len() {
        if seed.contains(&p) {
            continue;
        }
        let heights: Vec<Rational> = faces
            .iter()
            .map(|f| f.normal.dot(&pts[p]) - &f.offset)
            .collect();
        if !heights.iter().any(Signed::is_positive) {
            continue;
        }
        // Grazing faces count as visible so no degenerate triangle is ever created.
        let visible: Vec<bool> = heights.iter().map(|h| !h.is_negative()).collect();
        let vis_edges: HashSet<(usize, usize)> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(f, _)| f.edges())
            .collect();
        let horizon: Vec<(usize, usize)> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(f, _)| f.edges())
            .filter(|&(a, b)| !vis_edges.contains(&(b, a)))
            .collect();
        let mut kept: Vec<Face> = faces
            .into_iter()
            .zip(visible)
            .filter(|(_, v)| !v)
            .map(|(f, _)| f)
            .collect();
        for (a, b) in horizon {
            kept.push(Face::new(pts, a, b, p));
        }
        faces = kept;
    }

    let facets: Vec<Halfspace> = faces
        .iter()
        .filter(|f| !f.normal.is_zero())
        .map(|f| Halfspace { normal: f.normal.clone(), offset: f.offset.clone() }.normalized())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let candidates: BTreeSet<usize> = faces.iter().flat_map(|f| f.v).collect();
    let vertices = candidates
        .into_iter()
        .filter(|&i| {
            let tight: Vec<RatVec> = facets
                .iter()
                .filter(|h| h.is_tight(&pts[i]))
                .map(|h| h.normal.clone())
                .collect();
            tight.len() >= 3 && RatMatrix::from_rows(&tight).is_ok_and(|m| m.rank() == 3)
        })
        .collect();
    (vertices, facets)
}
