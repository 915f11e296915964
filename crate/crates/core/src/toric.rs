//! Closed-form multipoint bodies at torus-fixed points of smooth toric varieties.
//!
//! Each chosen vertex `x_j` gets a unimodular chart `m -> U_j^{-1}(m - x_j)`
//! sending its edge cone to the positive orthant. The polytope is cut into
//! the regions where the chart-coordinate sum `l_j` is smallest among the
//! chosen vertices, and the body at `x_j` is the chart image of its region.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    self, convex_hull, cut, int, lattice_points, linear_image, rat, Halfspace, Polytope, RatMatrix,
    RatVec, Rational,
};
use crate::semigroup::{GradedValuationData, SectionRecord};
use crate::valuation::MonomialOrder;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    /// Primitive direction pointing away from the vertex.
    pub direction: Vec<i64>,
    /// Number of lattice steps to the far endpoint.
    pub length: i64,
    /// Index of the far endpoint.
    pub far: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexChart {
    pub vertex: RatVec,
    /// Edges in chart order; their directions are the columns of `U`.
    pub edges: Vec<Edge>,
    /// `U^{-1}`, an integer unimodular matrix.
    pub inverse_basis: RatMatrix,
    inv_int: Vec<Vec<i64>>,
    vertex_int: Vec<i64>,
}

impl VertexChart {
    pub fn apply(&self, m: &RatVec) -> RatVec {
        self.inverse_basis.mul_vec(&m.sub(&self.vertex))
    }

    /// Chart at level `k`: `m -> U^{-1}(m - k x)` on integer points.
    pub fn apply_int(&self, m: &[i64], k: i64) -> Vec<i64> {
        let shifted: Vec<i64> = m.iter().zip(&self.vertex_int).map(|(a, x)| a - k * x).collect();
        self.inv_int
            .iter()
            .map(|row| row.iter().zip(&shifted).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `l(m)`: sum of the chart coordinates.
    pub fn vanishing_order(&self, m: &RatVec) -> Rational {
        self.apply(m).sum()
    }

    /// `w` with `l(m) = w . (m - x)`.
    fn weight(&self) -> RatVec {
        let n = self.vertex.dim();
        self.inverse_basis.transpose().mul_vec(&RatVec(vec![int(1); n]))
    }
}

/// A smooth lattice polytope with its vertices in caller order.
#[derive(Clone, Debug)]
pub struct DelzantPolytope {
    vertices: Vec<RatVec>,
    base: Polytope,
    charts: Vec<VertexChart>,
}

impl DelzantPolytope {
    pub fn new(vertices: Vec<RatVec>) -> Result<Self> {
        let base = convex_hull(&vertices)?;
        let n = base.dim();
        if !(2..=3).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.as_slice() != base.vertices() {
            return Err(Error::NotVertexList);
        }
        if !base.is_full_dimensional() {
            return Err(Error::OutOfRange("polytope must be full-dimensional".into()));
        }
        if let Some(i) = vertices.iter().position(|v| v.iter().any(|a| !a.denom().is_one())) {
            return Err(Error::NonDelzant { vertex: i, reason: "vertex is not a lattice point".into() });
        }
        let charts = (0..vertices.len())
            .map(|i| build_chart(&base, &vertices, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(DelzantPolytope { vertices, base, charts })
    }

    pub fn from_int_vertices(vs: &[Vec<i64>]) -> Result<Self> {
        Self::new(vs.iter().map(|v| RatVec::from_ints(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Vertices in the order supplied by the caller.
    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn polytope(&self) -> &Polytope {
        &self.base
    }

    pub fn vertex_chart(&self, v: usize) -> Result<&VertexChart> {
        self.charts.get(v).ok_or(Error::PointIndex { index: v, count: self.vertices.len() })
    }

    pub fn vanishing_order(&self, v: usize, m: &RatVec) -> Result<Rational> {
        Ok(self.vertex_chart(v)?.vanishing_order(m))
    }

    /// The `k`-th dilate, vertex order kept.
    pub fn dilate(&self, k: i64) -> Result<Self> {
        Self::new(self.vertices.iter().map(|v| v.scale(&int(k))).collect())
    }

    /// Minkowski sum with a polytope sharing the same normal fan, vertex order of `self` kept.
    pub fn fan_sum(&self, other: &DelzantPolytope) -> Result<Self> {
        let cone = |p: &DelzantPolytope, i: usize| -> Vec<RatVec> {
            let mut ns: Vec<RatVec> = p
                .base
                .halfspaces()
                .iter()
                .filter(|h| h.is_tight(&p.vertices[i]))
                .map(|h| h.normal.clone())
                .collect();
            ns.sort();
            ns
        };
        let mismatch = || Error::OutOfRange("Minkowski summands must share a normal fan".into());
        if self.dim() != other.dim() || self.vertices.len() != other.vertices.len() {
            return Err(mismatch());
        }
        let mut out = Vec::with_capacity(self.vertices.len());
        for i in 0..self.vertices.len() {
            let c = cone(self, i);
            let j = (0..other.vertices.len()).find(|&j| cone(other, j) == c).ok_or_else(mismatch)?;
            out.push(self.vertices[i].add(&other.vertices[j]));
        }
        Self::new(out)
    }
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &a| g.gcd(&a))
}

fn build_chart(base: &Polytope, vertices: &[RatVec], i: usize) -> Result<VertexChart> {
    let n = base.dim();
    let x = &vertices[i];
    let tight_at = |v: &RatVec| -> Vec<usize> {
        base.halfspaces()
            .iter()
            .enumerate()
            .filter(|(_, h)| h.is_tight(v))
            .map(|(k, _)| k)
            .collect()
    };
    let tx = tight_at(x);
    let mut edges = Vec::new();
    for (j, y) in vertices.iter().enumerate() {
        if j == i {
            continue;
        }
        let ty = tight_at(y);
        let common: Vec<RatVec> = tx
            .iter()
            .filter(|k| ty.contains(k))
            .map(|&k| base.halfspaces()[k].normal.clone())
            .collect();
        let rank = if common.is_empty() { 0 } else { RatMatrix::from_rows(&common)?.rank() };
        if rank != n - 1 {
            continue;
        }
        let diff: Vec<i64> = y
            .sub(x)
            .iter()
            .map(|a| a.to_integer().to_i64().expect("small coordinates"))
            .collect();
        let g = gcd_all(&diff);
        edges.push(Edge { direction: diff.iter().map(|a| a / g).collect(), length: g, far: j });
    }
    if edges.len() != n {
        return Err(Error::NonDelzant {
            vertex: i,
            reason: format!("{} edges meet at the vertex, expected {n}", edges.len()),
        });
    }
    let edges = order_edges(edges);
    let u = RatMatrix::from_cols(
        &edges.iter().map(|e| RatVec::from_ints(&e.direction)).collect::<Vec<_>>(),
    )?;
    if u.det()?.abs() != int(1) {
        return Err(Error::NonDelzant {
            vertex: i,
            reason: "edge directions do not form a lattice basis".into(),
        });
    }
    let inverse_basis = u.inverse()?;
    let inv_int = inverse_basis
        .rows()
        .iter()
        .map(|r| r.iter().map(|a| a.to_integer().to_i64().expect("unimodular")).collect())
        .collect();
    let vertex_int = x.iter().map(|a| a.to_integer().to_i64().expect("lattice vertex")).collect();
    Ok(VertexChart { vertex: x.clone(), edges, inverse_basis, inv_int, vertex_int })
}

/// Deterministic edge order: put as many nonzero entries as possible on the
/// diagonal of `U`, then take the lexicographically smallest arrangement.
/// On a rectangle corner this gives the identity up to signs.
fn order_edges(edges: Vec<Edge>) -> Vec<Edge> {
    let n = edges.len();
    let mut best: Option<(usize, Vec<Vec<i64>>, Vec<usize>)> = None;
    for perm in permutations(n) {
        let dirs: Vec<Vec<i64>> = perm.iter().map(|&p| edges[p].direction.clone()).collect();
        let diag = (0..n).filter(|&k| dirs[k][k] != 0).count();
        let better = match &best {
            None => true,
            Some((d, b, _)) => diag > *d || (diag == *d && dirs < *b),
        };
        if better {
            best = Some((diag, dirs, perm));
        }
    }
    let (_, _, perm) = best.expect("at least one permutation");
    perm.into_iter().map(|p| edges[p].clone()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// A smooth polytope together with an ordered choice of distinct vertices.
#[derive(Clone, Debug)]
pub struct ToricInput {
    pub polytope: DelzantPolytope,
    pub chosen: Vec<usize>,
}

#[derive(Deserialize)]
struct RawToricInput {
    vertices: Vec<RatVec>,
    chosen: Vec<usize>,
}

impl ToricInput {
    pub fn new(polytope: DelzantPolytope, chosen: Vec<usize>) -> Result<Self> {
        if chosen.is_empty() {
            return Err(Error::InvalidChoice);
        }
        let count = polytope.vertices().len();
        for (a, &c) in chosen.iter().enumerate() {
            if c >= count {
                return Err(Error::PointIndex { index: c, count });
            }
            if chosen[..a].contains(&c) {
                return Err(Error::InvalidChoice);
            }
        }
        Ok(ToricInput { polytope, chosen })
    }

    /// Parses `{"vertices": [...], "chosen": [...]}`; other keys are ignored.
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawToricInput = serde_json::from_str(s)?;
        Self::new(DelzantPolytope::new(raw.vertices)?, raw.chosen)
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn num_points(&self) -> usize {
        self.chosen.len()
    }

    fn chart(&self, j: usize) -> Result<&VertexChart> {
        let v = *self
            .chosen
            .get(j)
            .ok_or(Error::PointIndex { index: j, count: self.chosen.len() })?;
        self.polytope.vertex_chart(v)
    }

    pub fn charts(&self) -> Vec<&VertexChart> {
        self.chosen.iter().map(|&v| &self.polytope.charts[v]).collect()
    }

    /// Same choice of vertices on the `k`-th dilate.
    pub fn dilate(&self, k: i64) -> Result<Self> {
        Self::new(self.polytope.dilate(k)?, self.chosen.clone())
    }

    /// The region of `P` where `l_j` is minimal among the chosen vertices.
    pub fn region(&self, j: usize) -> Result<Polytope> {
        let cj = self.chart(j)?;
        let wj = cj.weight();
        let cst_j = wj.dot(&cj.vertex);
        let mut extra = Vec::new();
        for i in 0..self.chosen.len() {
            if i == j {
                continue;
            }
            let ci = self.chart(i)?;
            let wi = ci.weight();
            extra.push(Halfspace {
                normal: wj.sub(&wi),
                offset: &cst_j - wi.dot(&ci.vertex),
            });
        }
        cut(self.polytope.polytope(), &extra)
    }

    pub fn subdivision(&self) -> Result<Vec<Polytope>> {
        (0..self.chosen.len()).map(|j| self.region(j)).collect()
    }

    /// The body at the j-th chosen point, in its chart coordinates.
    pub fn body(&self, j: usize) -> Result<Polytope> {
        let region = self.region(j)?;
        if region.is_empty() {
            return Ok(region);
        }
        let c = self.chart(j)?;
        let shift = c.inverse_basis.mul_vec(&c.vertex).neg();
        linear_image(&region, &c.inverse_basis, &shift)
    }

    pub fn bodies(&self) -> Result<Vec<Polytope>> {
        (0..self.chosen.len()).map(|j| self.body(j)).collect()
    }

    /// Minimum over chosen vertices and their edges of the lattice length,
    /// halved when the edge joins two chosen vertices.
    pub fn seshadri(&self) -> Rational {
        self.chosen
            .iter()
            .flat_map(|&v| self.polytope.charts[v].edges.iter())
            .map(|e| {
                if self.chosen.contains(&e.far) {
                    rat(e.length, 2)
                } else {
                    int(e.length)
                }
            })
            .min()
            .expect("nonempty choice")
    }

    /// Valuation tuples of the monomial basis of level `k` (any `k >= 0`).
    pub fn oracle_level(&self, k: u32) -> Vec<SectionRecord> {
        let charts = self.charts();
        lattice_points(self.polytope.polytope(), k)
            .into_iter()
            .map(|m| SectionRecord::new(charts.iter().map(|c| c.apply_int(&m, i64::from(k))).collect()))
            .collect()
    }

    /// Levels `1..=k_max` under deglex, with lattice-point counts as section counts.
    pub fn oracle_export(&self, k_max: u32) -> Result<GradedValuationData> {
        if k_max == 0 {
            return Err(Error::OutOfRange("k_max must be at least 1".into()));
        }
        let mut levels = BTreeMap::new();
        let mut h0 = BTreeMap::new();
        for k in 1..=k_max {
            let recs = self.oracle_level(k);
            h0.insert(k, recs.len() as u64);
            levels.insert(k, recs);
        }
        Ok(GradedValuationData {
            n: self.dim(),
            num_points: self.chosen.len(),
            order: MonomialOrder::DegLex,
            levels,
            h0,
        })
    }

    /// `n! * sum of body volumes` against `n! * Vol(P)`.
    pub fn volume_check(&self) -> Result<(Rational, Rational, bool)> {
        let fact = int((1..=self.dim() as i64).product());
        let lhs = self
            .bodies()?
            .iter()
            .fold(Rational::zero(), |acc, b| acc + geometry::volume(b))
            * &fact;
        let rhs = geometry::volume(self.polytope.polytope()) * &fact;
        let ok = lhs == rhs;
        Ok((lhs, rhs, ok))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{volume, Membership};

    fn square(chosen: Vec<usize>) -> ToricInput {
        let p = DelzantPolytope::from_int_vertices(&[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        ToricInput::new(p, chosen).unwrap()
    }

    fn simplex(chosen: Vec<usize>) -> ToricInput {
        let p = DelzantPolytope::from_int_vertices(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        ToricInput::new(p, chosen).unwrap()
    }

    fn v(xs: &[Rational]) -> RatVec {
        RatVec::new(xs.to_vec())
    }

    #[test]
    fn chart_examples() {
        let sq = square(vec![0]);
        let c0 = sq.polytope.vertex_chart(0).unwrap();
        assert_eq!(c0.inverse_basis, RatMatrix::identity(2));
        let c2 = sq.polytope.vertex_chart(2).unwrap();
        assert_eq!(c2.apply(&RatVec::from_ints(&[0, 0])), RatVec::from_ints(&[1, 1]));
        assert_eq!(c2.apply(&RatVec::from_ints(&[1, 0])), RatVec::from_ints(&[0, 1]));
        let s = simplex(vec![0]);
        let c1 = s.polytope.vertex_chart(1).unwrap();
        // (1 - m1 - m2, m2)
        assert_eq!(c1.apply(&RatVec::from_ints(&[0, 0])), RatVec::from_ints(&[1, 0]));
        assert_eq!(c1.apply(&RatVec::from_ints(&[0, 1])), RatVec::from_ints(&[0, 1]));
        let c2 = s.polytope.vertex_chart(2).unwrap();
        // (m1, 1 - m1 - m2)
        assert_eq!(c2.apply(&RatVec::from_ints(&[1, 0])), RatVec::from_ints(&[1, 0]));
        assert_eq!(c2.apply(&RatVec::from_ints(&[0, 0])), RatVec::from_ints(&[0, 1]));
    }

    #[test]
    fn vanishing_orders() {
        let sq = square(vec![0]);
        let one = RatVec::from_ints(&[1, 1]);
        assert_eq!(sq.polytope.vanishing_order(0, &one).unwrap(), int(2));
        assert_eq!(sq.polytope.vanishing_order(2, &one).unwrap(), int(0));
        let s = simplex(vec![0]);
        assert_eq!(s.polytope.vanishing_order(1, &RatVec::zeros(2)).unwrap(), int(1));
    }

    #[test]
    fn non_delzant_rejected() {
        let p = DelzantPolytope::from_int_vertices(&[vec![0, 0], vec![2, 0], vec![0, 1]]);
        assert!(matches!(p, Err(Error::NonDelzant { .. })));
        let q = DelzantPolytope::from_int_vertices(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![0, 0]]);
        assert!(matches!(q, Err(Error::NotVertexList)));
    }

    #[test]
    fn square_subdivisions() {
        let all = square(vec![0, 1, 2, 3]);
        let half = rat(1, 2);
        for (j, cell) in all.subdivision().unwrap().iter().enumerate() {
            assert_eq!(volume(cell), rat(1, 4));
            assert!(cell.vertices().contains(&v(&[half.clone(), half.clone()])), "cell {j}");
        }
        for b in all.bodies().unwrap() {
            let expect = convex_hull(&[
                RatVec::zeros(2),
                v(&[half.clone(), int(0)]),
                v(&[int(0), half.clone()]),
                v(&[half.clone(), half.clone()]),
            ])
            .unwrap();
            assert_eq!(b, expect);
        }
        let opp = square(vec![0, 2]);
        let cells = opp.subdivision().unwrap();
        assert_eq!(cells[0].vertices(), &[RatVec::zeros(2), RatVec::from_ints(&[0, 1]), RatVec::from_ints(&[1, 0])]);
        assert_eq!(volume(&cells[1]), rat(1, 2));
        let one = square(vec![0]);
        assert_eq!(one.body(0).unwrap(), *one.polytope.polytope());
    }

    #[test]
    fn simplex_barycentric() {
        let s = simplex(vec![0, 1, 2]);
        let third = rat(1, 3);
        for cell in s.subdivision().unwrap() {
            assert_eq!(volume(&cell), rat(1, 6));
            assert!(cell.vertices().contains(&v(&[third.clone(), third.clone()])));
        }
        let b0 = s.body(0).unwrap();
        let expect = convex_hull(&[
            RatVec::zeros(2),
            v(&[rat(1, 2), int(0)]),
            v(&[int(0), rat(1, 2)]),
            v(&[third.clone(), third.clone()]),
        ])
        .unwrap();
        assert_eq!(b0, expect);
        assert_eq!(b0.coordinate_facets().len(), 2);
        assert!(b0.contains(&RatVec::zeros(2), Membership::EssentialInterior));
    }

    #[test]
    fn seshadri_values() {
        assert_eq!(square(vec![0, 1, 2, 3]).seshadri(), rat(1, 2));
        assert_eq!(simplex(vec![0, 1, 2]).seshadri(), rat(1, 2));
        assert_eq!(simplex(vec![1]).seshadri(), int(1));
    }

    #[test]
    fn oracle_levels() {
        let sq = square(vec![0, 1, 2, 3]);
        let l1 = sq.oracle_level(1);
        assert_eq!(l1.len(), 4);
        assert_eq!(l1[0].vals, vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(simplex(vec![0, 1, 2]).oracle_level(1).len(), 3);
        let l0 = sq.oracle_level(0);
        assert_eq!(l0, vec![SectionRecord::new(vec![vec![0, 0]; 4])]);
        let d = sq.oracle_export(3).unwrap();
        for k in 1..=3 {
            assert!(d.check_dimension_partition(k).unwrap());
        }
    }

    #[test]
    fn volume_identity_examples() {
        assert_eq!(square(vec![0, 1, 2, 3]).volume_check().unwrap(), (int(2), int(2), true));
        assert_eq!(square(vec![0, 2]).volume_check().unwrap(), (int(2), int(2), true));
        assert_eq!(simplex(vec![0, 1, 2]).volume_check().unwrap(), (int(1), int(1), true));
    }

    #[test]
    fn three_dimensional_cube() {
        let mut vs = Vec::new();
        for x in 0..=1 {
            for y in 0..=1 {
                for z in 0..=1 {
                    vs.push(vec![x, y, z]);
                }
            }
        }
        let p = DelzantPolytope::from_int_vertices(&vs).unwrap();
        let t = ToricInput::new(p, (0..8).collect()).unwrap();
        let (lhs, rhs, ok) = t.volume_check().unwrap();
        assert!(ok);
        assert_eq!(lhs, rhs);
        assert_eq!(t.seshadri(), rat(1, 2));
        for b in t.bodies().unwrap() {
            assert_eq!(volume(&b), rat(1, 8));
        }
    }

    #[test]
    fn fan_sum_of_square_is_dilate() {
        let sq = square(vec![0]);
        let twice = sq.polytope.fan_sum(&sq.polytope).unwrap();
        assert_eq!(twice.vertices(), sq.polytope.dilate(2).unwrap().vertices());
    }

    #[test]
    fn json_input() {
        let t = ToricInput::from_json(r#"{"vertices": [[0,0],[1,0],[0,1]], "chosen": [0,1,2], "k_max": 50}"#).unwrap();
        assert_eq!(t.num_points(), 3);
        assert!(matches!(
            ToricInput::from_json(r#"{"vertices": [[0,0],[1,0],[0,1]], "chosen": [0,0]}"#),
            Err(Error::InvalidChoice)
        ));
    }
}
