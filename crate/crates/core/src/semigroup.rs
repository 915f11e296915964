//! Multipoint splits of graded valuation data and the convex bodies they approximate.
//!
//! Sections are represented by their valuation tuples alone. On monomial data
//! this loses nothing: a linear combination takes the order-minimum of its
//! support at every point, so any section whose value at `p_j` beats all other
//! points has a monomial in its support that does the same with the same value.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, dilate, hull, int, rat, Polytope, RatVec, Rational};
use crate::valuation::{compare_unchecked, MonomialOrder, ValuationVector};

/// The valuation tuple of one section: `vals[j]` is its value at the j-th point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SectionRecord {
    pub vals: Vec<Vec<i64>>,
}

impl SectionRecord {
    pub fn new(vals: Vec<Vec<i64>>) -> Self {
        SectionRecord { vals }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedValuationData {
    pub n: usize,
    #[serde(rename = "N")]
    pub num_points: usize,
    pub order: MonomialOrder,
    pub levels: BTreeMap<u32, Vec<SectionRecord>>,
    /// Known section-space dimension per level, when the source provides it.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub h0: BTreeMap<u32, u64>,
}

impl GradedValuationData {
    pub fn from_json(s: &str) -> Result<Self> {
        let d: GradedValuationData = serde_json::from_str(s)?;
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.num_points == 0 {
            return Err(Error::Schema("n and N must be positive".into()));
        }
        for (&k, recs) in &self.levels {
            if k == 0 {
                return Err(Error::Schema("levels start at 1".into()));
            }
            for r in recs {
                if r.vals.len() != self.num_points {
                    return Err(Error::Schema(format!(
                        "level {k}: record has {} values, expected {}",
                        r.vals.len(),
                        self.num_points
                    )));
                }
                if let Some(v) = r.vals.iter().find(|v| v.len() != self.n) {
                    return Err(Error::Schema(format!(
                        "level {k}: vector of length {}, expected {}",
                        v.len(),
                        self.n
                    )));
                }
            }
        }
        Ok(())
    }

    fn level(&self, k: u32) -> Result<&[SectionRecord]> {
        self.levels.get(&k).map(Vec::as_slice).ok_or(Error::UnknownLevel(k))
    }

    fn check_point(&self, j: usize) -> Result<()> {
        if j >= self.num_points {
            return Err(Error::PointIndex { index: j, count: self.num_points });
        }
        Ok(())
    }

    fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        compare_unchecked(self.order, a, b)
    }

    /// Point whose value is strictly smallest, if any.
    fn strict_winner(&self, r: &SectionRecord) -> Option<usize> {
        let w = self.weak_winner(r);
        let unique = r
            .vals
            .iter()
            .enumerate()
            .all(|(i, v)| i == w || self.cmp(&r.vals[w], v) == Ordering::Less);
        unique.then_some(w)
    }

    /// Last index attaining the minimum: ties go to the later point.
    fn weak_winner(&self, r: &SectionRecord) -> usize {
        let mut best = 0;
        for i in 1..r.vals.len() {
            if self.cmp(&r.vals[i], &r.vals[best]) != Ordering::Greater {
                best = i;
            }
        }
        best
    }

    fn collect(&self, k: u32, j: usize, pick: impl Fn(&SectionRecord) -> bool) -> Result<Vec<Vec<i64>>> {
        self.check_point(j)?;
        let set: BTreeSet<Vec<i64>> = self
            .level(k)?
            .iter()
            .filter(|r| pick(r))
            .map(|r| r.vals[j].clone())
            .collect();
        Ok(set.into_iter().collect())
    }

    /// Distinct values at `p_j` of sections strictly smaller there than at every other point.
    pub fn v_split(&self, j: usize, k: u32) -> Result<Vec<ValuationVector>> {
        Ok(self
            .v_split_raw(j, k)?
            .into_iter()
            .map(|v| ValuationVector::new(v, self.order))
            .collect())
    }

    pub fn v_split_raw(&self, j: usize, k: u32) -> Result<Vec<Vec<i64>>> {
        self.collect(k, j, |r| self.strict_winner(r) == Some(j))
    }

    /// Distinct values at `p_j` of sections with `val_j <= val_i` for `i < j` and
    /// `val_j < val_i` for `i > j`. These classes partition every level.
    pub fn w_split(&self, j: usize, k: u32) -> Result<Vec<ValuationVector>> {
        Ok(self
            .w_split_raw(j, k)?
            .into_iter()
            .map(|v| ValuationVector::new(v, self.order))
            .collect())
    }

    pub fn w_split_raw(&self, j: usize, k: u32) -> Result<Vec<Vec<i64>>> {
        self.collect(k, j, |r| self.weak_winner(r) == j)
    }

    /// Total of the per-point class sizes at level `k`.
    pub fn w_split_total(&self, k: u32) -> Result<u64> {
        let mut total = 0u64;
        for j in 0..self.num_points {
            total += self.w_split_raw(j, k)?.len() as u64;
        }
        Ok(total)
    }

    /// Whether the class sizes add up to the recorded section-space dimension.
    pub fn check_dimension_partition(&self, k: u32) -> Result<bool> {
        let declared = self
            .h0
            .get(&k)
            .copied()
            .ok_or_else(|| Error::Schema(format!("no section count recorded for level {k}")))?;
        Ok(self.w_split_total(k)? == declared)
    }

    /// `(m, #Γ_j^m / m^n)` for each requested level present in the data.
    pub fn volume_limit_estimate(
        &self,
        j: usize,
        m_range: impl IntoIterator<Item = u32>,
    ) -> Result<Vec<(u32, Rational)>> {
        m_range
            .into_iter()
            .map(|m| {
                let count = self.v_split_raw(j, m)?.len() as i64;
                let denom: Rational = Pow::pow(int(i64::from(m)), self.n as u32);
                Ok((m, int(count) / denom))
            })
            .collect()
    }

    /// Per-level hulls `Conv(Γ_j^k)/k` and their cumulative hull for `k <= k_max`.
    pub fn body_approx(&self, j: usize, k_max: u32) -> Result<SemigroupBodyApprox> {
        self.check_point(j)?;
        if k_max == 0 {
            return Err(Error::OutOfRange("k_max must be at least 1".into()));
        }
        if self.n > 3 {
            return Err(Error::UnsupportedDimension(self.n));
        }
        let mut levels = BTreeMap::new();
        let mut union: Vec<RatVec> = Vec::new();
        for &k in self.levels.keys().filter(|&&k| k <= k_max) {
            let pts: Vec<RatVec> = self.v_split_raw(j, k)?.iter().map(|v| RatVec::from_ints(v)).collect();
            let body = if pts.is_empty() {
                Polytope::empty(self.n)
            } else {
                dilate(&convex_hull(&pts)?, &rat(1, i64::from(k)))
            };
            union.extend(body.vertices().iter().cloned());
            levels.insert(k, body);
        }
        let limit_hull = hull::hull_points(self.n, &union)?;
        let mut divisibility_monotone = true;
        let chain: Vec<u32> = (1u32..)
            .scan(1u32, |f, i| {
                *f = f.checked_mul(i)?;
                Some(*f)
            })
            .take_while(|&f| f <= k_max)
            .filter(|f| levels.contains_key(f))
            .collect();
        for w in chain.windows(2) {
            if !levels[&w[0]].is_subset_of(&levels[&w[1]]) {
                divisibility_monotone = false;
            }
        }
        if levels.values().any(|b: &Polytope| !b.is_subset_of(&limit_hull)) {
            return Err(Error::Invariant("level hull escapes the cumulative hull".into()));
        }
        Ok(SemigroupBodyApprox {
            levels,
            limit_hull,
            divisibility_monotone,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupBodyApprox {
    /// `Conv(Γ_j^k)/k` for each level `k`.
    pub levels: BTreeMap<u32, Polytope>,
    /// Hull of the union of all level hulls.
    pub limit_hull: Polytope,
    /// Whether level hulls grow along the chain 1, 2, 6, 24, ... of levels present.
    pub divisibility_monotone: bool,
}

impl SemigroupBodyApprox {
    /// Level hull with its coordinate facets flagged for essential membership.
    pub fn essential_body(&self, k: u32) -> Result<Polytope> {
        self.levels.get(&k).cloned().ok_or(Error::UnknownLevel(k))
    }

    pub fn limit_volume(&self) -> Rational {
        if self.limit_hull.is_empty() {
            Rational::zero()
        } else {
            crate::geometry::volume(&self.limit_hull)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Membership, RatVec};

    /// The unit square with all four corners, values in the corner charts.
    fn square_all4() -> GradedValuationData {
        let mut levels = BTreeMap::new();
        let mut h0 = BTreeMap::new();
        for k in 1..=6i64 {
            let mut recs = Vec::new();
            for a in 0..=k {
                for b in 0..=k {
                    recs.push(SectionRecord::new(vec![
                        vec![a, b],
                        vec![k - a, b],
                        vec![a, k - b],
                        vec![k - a, k - b],
                    ]));
                }
            }
            h0.insert(k as u32, recs.len() as u64);
            levels.insert(k as u32, recs);
        }
        GradedValuationData { n: 2, num_points: 4, order: MonomialOrder::DegLex, levels, h0 }
    }

    fn simplex_all3(kmax: i64) -> GradedValuationData {
        let mut levels = BTreeMap::new();
        let mut h0 = BTreeMap::new();
        for k in 1..=kmax {
            let mut recs = Vec::new();
            for a in 0..=k {
                for b in 0..=k - a {
                    recs.push(SectionRecord::new(vec![
                        vec![a, b],
                        vec![k - a - b, b],
                        vec![a, k - a - b],
                    ]));
                }
            }
            h0.insert(k as u32, recs.len() as u64);
            levels.insert(k as u32, recs);
        }
        GradedValuationData { n: 2, num_points: 3, order: MonomialOrder::DegLex, levels, h0 }
    }

    #[test]
    fn v_split_examples() {
        let d = square_all4();
        let v = d.v_split_raw(0, 1).unwrap();
        assert_eq!(v, vec![vec![0, 0]]);
        for j in 0..4 {
            assert!(!d.v_split_raw(j, 2).unwrap().contains(&vec![1, 1]));
        }
        let w: Vec<usize> = (0..4).map(|j| d.w_split_raw(j, 1).unwrap().len()).collect();
        assert_eq!(w, vec![1, 1, 1, 1]);
    }

    #[test]
    fn full_tie_goes_to_last_point() {
        let d = square_all4();
        assert!(d.w_split_raw(3, 2).unwrap().contains(&vec![1, 1]));
        for j in 0..3 {
            assert!(!d.w_split_raw(j, 2).unwrap().contains(&vec![1, 1]));
        }
    }

    #[test]
    fn partition_counts() {
        let d = square_all4();
        assert!(d.check_dimension_partition(1).unwrap());
        assert_eq!(d.w_split_total(2).unwrap(), 9);
        for k in 1..=6 {
            assert!(d.check_dimension_partition(k).unwrap());
        }
        let s = simplex_all3(3);
        assert_eq!(s.w_split_total(1).unwrap(), 3);
    }

    #[test]
    fn v_is_inside_w_and_disjoint() {
        let d = square_all4();
        for k in 1..=6 {
            for j in 0..4 {
                let v = d.v_split_raw(j, k).unwrap();
                let w = d.w_split_raw(j, k).unwrap();
                assert!(v.iter().all(|x| w.contains(x)));
            }
        }
    }

    #[test]
    fn level_two_square_body_is_a_point() {
        let a = square_all4().body_approx(0, 2).unwrap();
        assert_eq!(a.levels[&2].vertices(), &[RatVec::zeros(2)]);
        assert!(a.divisibility_monotone);
    }

    #[test]
    fn single_point_simplex_body() {
        let mut d = simplex_all3(1);
        for recs in d.levels.values_mut() {
            for r in recs.iter_mut() {
                r.vals.truncate(1);
            }
        }
        d.num_points = 1;
        let a = d.body_approx(0, 1).unwrap();
        assert_eq!(crate::geometry::volume(&a.limit_hull), rat(1, 2));
        let ess = a.essential_body(1).unwrap();
        assert_eq!(ess.coordinate_facets().len(), 2);
        assert!(ess.contains(&RatVec::zeros(2), Membership::EssentialInterior));
    }

    #[test]
    fn normalized_counts() {
        let mut d = simplex_all3(20);
        for recs in d.levels.values_mut() {
            for r in recs.iter_mut() {
                r.vals.truncate(1);
            }
        }
        d.num_points = 1;
        let seq = d.volume_limit_estimate(0, [20]).unwrap();
        assert_eq!(seq[0], (20, rat(231, 400)));
    }

    #[test]
    fn json_round_trip_and_schema_errors() {
        let d = square_all4();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(GradedValuationData::from_json(&s).unwrap(), d);
        let bad = r#"{"n":2,"N":2,"order":"deglex","levels":{"1":[[[0,0]]]}}"#;
        assert!(matches!(GradedValuationData::from_json(bad), Err(Error::Schema(_))));
        let bad_order = r#"{"n":2,"N":1,"order":"revlex","levels":{}}"#;
        assert!(GradedValuationData::from_json(bad_order).is_err());
    }

    #[test]
    fn unknown_level() {
        assert!(matches!(square_all4().v_split(0, 99), Err(Error::UnknownLevel(99))));
    }
}
