//! Halfspace intersection, volume, affine images, slices and lattice points.

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::hull::{ccw_order, cross3, hull_points};
use super::linalg::{RatMatrix, RatVec};
use super::polytope::{Halfspace, Polytope};
use super::rational::{ceil_i64, floor_i64, int, Rational};
use crate::error::{Error, Result};

/// Bounded intersection of halfspaces in R^1..R^3.
pub fn halfspace_intersection(hs: &[Halfspace]) -> Result<Polytope> {
    let first = hs.first().ok_or(Error::EmptyInput("halfspace list"))?;
    let n = first.normal.dim();
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    if hs.iter().any(|h| h.normal.is_zero()) {
        return Err(Error::ZeroNormal);
    }
    intersect(n, hs)?.ok_or(Error::EmptyIntersection)
}

/// Intersection that reports emptiness as `None`; zero normals act as constants.
pub(crate) fn intersect(n: usize, hs: &[Halfspace]) -> Result<Option<Polytope>> {
    if let Some(h) = hs.iter().find(|h| h.normal.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h.normal.dim(),
        });
    }
    let mut cons: Vec<Halfspace> = Vec::new();
    for h in hs {
        if h.normal.is_zero() {
            if h.offset.is_negative() {
                return Ok(None);
            }
        } else {
            cons.push(h.clone().normalized());
        }
    }
    cons.sort();
    cons.dedup();
    if n == 0 {
        return Ok(Some(hull_points(0, &[RatVec::zeros(0)])?));
    }
    if cons.is_empty() {
        return Err(Error::Unbounded);
    }

    // Pin the lineality space so the system has full rank without changing feasibility.
    let normals = RatMatrix::from_rows(&cons.iter().map(|h| h.normal.clone()).collect::<Vec<_>>())?;
    let lineality = normals.nullspace();
    let mut sys = cons.clone();
    for w in &lineality {
        sys.push(Halfspace { normal: w.clone(), offset: Rational::zero() });
        sys.push(Halfspace { normal: w.neg(), offset: Rational::zero() });
    }

    let points = basic_feasible_points(n, &sys);
    if points.is_empty() {
        return Ok(None);
    }
    if !lineality.is_empty() || has_recession_ray(n, &cons) {
        return Err(Error::Unbounded);
    }
    Ok(Some(hull_points(n, &points)?))
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Feasible points cut out by n linearly independent tight constraints.
fn basic_feasible_points(n: usize, sys: &[Halfspace]) -> Vec<RatVec> {
    let mut out = Vec::new();
    for idx in subsets(sys.len(), n) {
        let a = RatMatrix::from_rows(&idx.iter().map(|&i| sys[i].normal.clone()).collect::<Vec<_>>())
            .expect("rows share a dimension");
        let Ok(inv) = a.inverse() else { continue };
        let b = RatVec(idx.iter().map(|&i| sys[i].offset.clone()).collect());
        let x = inv.mul_vec(&b);
        if sys.iter().all(|h| h.contains(&x)) {
            out.push(x);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Whether `{d : a_i . d <= 0}` has an extreme ray, for full-rank normals.
fn has_recession_ray(n: usize, cons: &[Halfspace]) -> bool {
    for idx in subsets(cons.len(), n - 1) {
        let rows: Vec<RatVec> = idx.iter().map(|&i| cons[i].normal.clone()).collect();
        let ns = if rows.is_empty() {
            (0..n).map(|i| RatVec::unit(n, i)).collect()
        } else {
            RatMatrix::from_rows(&rows).expect("rows share a dimension").nullspace()
        };
        if ns.len() != 1 {
            continue;
        }
        for d in [ns[0].clone(), ns[0].neg()] {
            if cons.iter().all(|h| !h.normal.dot(&d).is_positive()) {
                return true;
            }
        }
    }
    false
}

/// Lebesgue volume in the ambient dimension; zero for lower-dimensional or empty polytopes.
pub fn volume(p: &Polytope) -> Rational {
    if !p.is_full_dimensional() {
        return Rational::zero();
    }
    let vs = p.vertices();
    match p.dim() {
        0 => Rational::one(),
        1 => &vs[vs.len() - 1][0] - &vs[0][0],
        2 => polygon_area(vs),
        3 => polyhedron_volume(p),
        n => unreachable!("dimension {n} is never constructed"),
    }
}

/// Fan from the lexicographically least vertex.
fn polygon_area(vs: &[RatVec]) -> Rational {
    let ring = ccw_order(vs);
    let anchor = &ring[0];
    let mut twice = Rational::zero();
    for w in ring[1..].windows(2) {
        twice += super::hull::cross2(anchor, &w[0], &w[1]);
    }
    twice / int(2)
}

fn polyhedron_volume(p: &Polytope) -> Rational {
    let anchor = &p.vertices()[0];
    let mut six = Rational::zero();
    for h in p.halfspaces() {
        if h.is_tight(anchor) {
            continue;
        }
        let face: Vec<RatVec> = p.vertices().iter().filter(|v| h.is_tight(v)).cloned().collect();
        let ring = order_facet(&face, &h.normal);
        for w in ring[1..].windows(2) {
            let m = RatMatrix::from_rows(&[
                ring[0].sub(anchor),
                w[0].sub(anchor),
                w[1].sub(anchor),
            ])
            .expect("3x3");
            six += m.det().expect("square").abs();
        }
    }
    six / int(6)
}

/// Cyclic order of a planar facet, via projection along a coordinate the normal uses.
fn order_facet(face: &[RatVec], normal: &RatVec) -> Vec<RatVec> {
    let drop = (0..3).find(|&i| !normal[i].is_zero()).expect("nonzero normal");
    let proj: Vec<(RatVec, RatVec)> = face.iter().map(|v| (v.without(drop), v.clone())).collect();
    let ring2 = ccw_order(&proj.iter().map(|(q, _)| q.clone()).collect::<Vec<_>>());
    ring2
        .into_iter()
        .map(|q| proj.iter().find(|(r, _)| *r == q).expect("projected vertex").1.clone())
        .collect()
}

/// `{Ax + b : x in P}` for square invertible `A`.
pub fn linear_image(p: &Polytope, a: &RatMatrix, b: &RatVec) -> Result<Polytope> {
    let n = p.dim();
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare { rows: a.nrows(), cols: a.ncols() });
    }
    if a.nrows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.nrows() });
    }
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
    }
    if a.det()?.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let image: Vec<RatVec> = p.vertices().iter().map(|v| a.mul_vec(v).add(b)).collect();
    hull_points(n, &image)
}

/// `c * P` for any rational `c`.
pub fn dilate(p: &Polytope, c: &Rational) -> Polytope {
    let image: Vec<RatVec> = p.vertices().iter().map(|v| v.scale(c)).collect();
    hull_points(p.dim(), &image).expect("same dimension")
}

pub fn translate(p: &Polytope, b: &RatVec) -> Result<Polytope> {
    linear_image(p, &RatMatrix::identity(p.dim()), b)
}

pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    let pts: Vec<RatVec> = p
        .vertices()
        .iter()
        .flat_map(|u| q.vertices().iter().map(move |v| u.add(v)))
        .collect();
    hull_points(p.dim(), &pts)
}

/// `P ∩ {x : x_axis = t}` in the remaining coordinates.
pub fn slice_at(p: &Polytope, axis: usize, t: &Rational) -> Result<Polytope> {
    let n = p.dim();
    if axis >= n {
        return Err(Error::OutOfRange(format!("axis {axis} in dimension {n}")));
    }
    if p.is_empty() {
        return Ok(Polytope::empty(n - 1));
    }
    let hs: Vec<Halfspace> = p
        .halfspaces()
        .iter()
        .map(|h| Halfspace {
            normal: h.normal.without(axis),
            offset: &h.offset - &h.normal[axis] * t,
        })
        .collect();
    Ok(intersect(n - 1, &hs)?.unwrap_or_else(|| Polytope::empty(n - 1)))
}

/// `P ∩ {extra}` keeping emptiness as a value.
pub fn cut(p: &Polytope, extra: &[Halfspace]) -> Result<Polytope> {
    if p.is_empty() {
        return Ok(p.clone());
    }
    let mut hs = p.halfspaces().to_vec();
    hs.extend_from_slice(extra);
    Ok(intersect(p.dim(), &hs)?.unwrap_or_else(|| Polytope::empty(p.dim())))
}

/// Integer points of `kP`, lexicographically sorted.
pub fn lattice_points(p: &Polytope, k: u32) -> Vec<Vec<i64>> {
    if p.is_empty() {
        return Vec::new();
    }
    let n = p.dim();
    let kq = int(i64::from(k));
    let lo: Vec<i64> = (0..n)
        .map(|i| p.vertices().iter().map(|v| ceil_i64(&(&v[i] * &kq))).min().expect("nonempty"))
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| p.vertices().iter().map(|v| floor_i64(&(&v[i] * &kq))).max().expect("nonempty"))
        .collect();
    // Normals are primitive integer vectors, so a.x <= kb iff a.x <= floor(kb).
    let tests: Vec<(Vec<i128>, i128)> = p
        .halfspaces()
        .iter()
        .map(|h| {
            let a = h.normal.iter().map(|c| c.to_integer().to_i128().expect("small normal")).collect();
            let b = (&h.offset * &kq).floor().to_integer().to_i128().expect("small offset");
            (a, b)
        })
        .collect();
    let mut out = Vec::new();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return out;
    }
    let mut x = lo.clone();
    loop {
        if tests
            .iter()
            .all(|(a, b)| a.iter().zip(&x).map(|(c, &xi)| c * i128::from(xi)).sum::<i128>() <= *b)
        {
            out.push(x.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < hi[i] {
                x[i] += 1;
                x[i + 1..n].copy_from_slice(&lo[i + 1..n]);
                break;
            }
        }
    }
}

/// Cross product of two 3-vectors.
pub fn cross(u: &RatVec, v: &RatVec) -> RatVec {
    cross3(u, v)
}
