//! Zariski decomposition against a finite list of negative curves.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::picard::PicardClass;
use super::SurfaceSpec;
use crate::error::{Error, Result};
use crate::geometry::rational::serde_rational;
use crate::geometry::{RatMatrix, RatVec, Rational};

/// `v + s * eps` for a positive infinitesimal `eps`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Affine {
    pub v: Rational,
    pub s: Rational,
}

impl Affine {
    fn is_negative(&self) -> bool {
        self.v.is_negative() || (self.v.is_zero() && self.s.is_negative())
    }

    fn is_zero(&self) -> bool {
        self.v.is_zero() && self.s.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZariskiDecomp {
    /// Nef part.
    pub positive: PicardClass,
    /// Negative part, `sum coefficients[k] * C_{support[k]}`.
    pub negative: PicardClass,
    pub support: Vec<usize>,
    #[serde(serialize_with = "ser_rats")]
    pub coefficients: Vec<Rational>,
    /// `P^2`, the volume of the class.
    #[serde(with = "serde_rational")]
    pub volume: Rational,
}

fn ser_rats<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::geometry::rational::serde_rational_vec::serialize(v, s)
}

impl ZariskiDecomp {
    /// Checks every defining property against the curve list and the class it came from.
    pub fn verify(&self, spec: &SurfaceSpec, d: &PicardClass) -> Result<()> {
        let bad = |m: &str| Err(Error::Invariant(m.to_string()));
        if self.positive.add(&self.negative) != *d {
            return bad("positive and negative parts do not add up to the class");
        }
        let mut n = PicardClass::zero(spec.num_points());
        for (&k, c) in self.support.iter().zip(&self.coefficients) {
            if !c.is_positive() {
                return bad("negative part has a nonpositive coefficient");
            }
            n = n.add(&spec.curves()[k].scale(c));
        }
        if n != self.negative {
            return bad("negative part does not match its coefficients");
        }
        for (i, c) in spec.curves().iter().enumerate() {
            let pc = self.positive.dot(c);
            if pc.is_negative() {
                return bad("positive part is not nef on the curve list");
            }
            if self.support.contains(&i) && !pc.is_zero() {
                return bad("positive part is not orthogonal to the support");
            }
        }
        if !self.support.is_empty() && !spec.gram_of(&self.support).is_negative_definite()? {
            return bad("support is not negative definite");
        }
        Ok(())
    }
}

/// Core loop shared by exact decompositions and right limits along a direction.
///
/// Returns the support and the coefficients of the negative part.
pub(crate) fn decompose(
    spec: &SurfaceSpec,
    d_dot: &[Affine],
    seed: &[usize],
) -> Result<(Vec<usize>, Vec<Affine>)> {
    let m = spec.curves().len();
    let mut support: BTreeSet<usize> = seed.iter().copied().collect();
    support.extend((0..m).filter(|&i| d_dot[i].is_negative()));
    let cap = 4 * m + 8;
    for _ in 0..cap {
        let idx: Vec<usize> = support.iter().copied().collect();
        let coeffs = solve_on(spec, &idx, d_dot)?;
        let negative: Vec<usize> = idx
            .iter()
            .zip(&coeffs)
            .filter(|(_, c)| c.is_negative())
            .map(|(&i, _)| i)
            .collect();
        if !negative.is_empty() {
            for i in negative {
                support.remove(&i);
            }
            continue;
        }
        let gram = spec.gram();
        let p_dot: Vec<Affine> = (0..m)
            .map(|i| {
                let mut v = d_dot[i].v.clone();
                let mut s = d_dot[i].s.clone();
                for (&k, c) in idx.iter().zip(&coeffs) {
                    v -= &c.v * &gram[k][i];
                    s -= &c.s * &gram[k][i];
                }
                Affine { v, s }
            })
            .collect();
        let fresh: Vec<usize> = (0..m)
            .filter(|i| !support.contains(i) && p_dot[*i].is_negative())
            .collect();
        if fresh.is_empty() {
            let kept: Vec<(usize, Affine)> = idx
                .into_iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            return Ok(kept.into_iter().unzip());
        }
        support.extend(fresh);
    }
    Err(Error::Invariant("support search did not settle".into()))
}

fn solve_on(spec: &SurfaceSpec, idx: &[usize], d_dot: &[Affine]) -> Result<Vec<Affine>> {
    if idx.is_empty() {
        return Ok(Vec::new());
    }
    let g = spec.gram_of(idx);
    if !g.is_negative_definite()? {
        return Err(Error::SupportNotNegativeDefinite);
    }
    let inv = g.inverse()?;
    let bv = RatVec(idx.iter().map(|&i| d_dot[i].v.clone()).collect());
    let bs = RatVec(idx.iter().map(|&i| d_dot[i].s.clone()).collect());
    let xv = inv.mul_vec(&bv);
    let xs = inv.mul_vec(&bs);
    Ok(xv.0.into_iter().zip(xs.0).map(|(v, s)| Affine { v, s }).collect())
}

fn combine(spec: &SurfaceSpec, support: &[usize], coeffs: &[Rational]) -> PicardClass {
    support
        .iter()
        .zip(coeffs)
        .fold(PicardClass::zero(spec.num_points()), |acc, (&k, c)| acc.add(&spec.curves()[k].scale(c)))
}

/// Zariski decomposition of `d`, optionally starting from a guessed support.
pub fn zariski_seeded(spec: &SurfaceSpec, d: &PicardClass, seed: &[usize]) -> Result<ZariskiDecomp> {
    spec.check_class(d)?;
    let h = PicardClass::hyperplane(spec.num_points());
    if d.dot(&h).is_negative() {
        return Err(Error::NotPseudoeffective);
    }
    let d_dot: Vec<Affine> = spec
        .curves()
        .iter()
        .map(|c| Affine { v: d.dot(c), s: Rational::zero() })
        .collect();
    let (support, coeffs) = match decompose(spec, &d_dot, seed) {
        Err(Error::SupportNotNegativeDefinite) if spec.curves_are_complete() => {
            return Err(Error::NotPseudoeffective)
        }
        other => other?,
    };
    let coefficients: Vec<Rational> = coeffs.into_iter().map(|c| c.v).collect();
    let negative = combine(spec, &support, &coefficients);
    let positive = d.sub(&negative);
    let volume = positive.self_intersection();
    if volume.is_negative() || positive.dot(&h).is_negative() {
        return Err(Error::NotPseudoeffective);
    }
    Ok(ZariskiDecomp { positive, negative, support, coefficients, volume })
}

pub fn zariski(spec: &SurfaceSpec, d: &PicardClass) -> Result<ZariskiDecomp> {
    zariski_seeded(spec, d, &[])
}

/// Decomposition of `d + eps * dir` for infinitesimal `eps > 0`: the support
/// together with the values and slopes of its coefficients.
pub(crate) fn right_limit(
    spec: &SurfaceSpec,
    d: &PicardClass,
    dir: &PicardClass,
    seed: &[usize],
) -> Result<(Vec<usize>, Vec<Rational>, Vec<Rational>)> {
    let d_dot: Vec<Affine> = spec
        .curves()
        .iter()
        .map(|c| Affine { v: d.dot(c), s: dir.dot(c) })
        .collect();
    let (support, coeffs) = decompose(spec, &d_dot, seed)?;
    let (a, b) = coeffs.into_iter().map(|c| (c.v, c.s)).unzip();
    Ok((support, a, b))
}

/// Gram matrix helper used by [`SurfaceSpec`].
pub(crate) fn gram_matrix(curves: &[PicardClass]) -> Vec<Vec<Rational>> {
    curves
        .iter()
        .map(|a| curves.iter().map(|b| a.dot(b)).collect())
        .collect()
}

pub(crate) fn submatrix(gram: &[Vec<Rational>], idx: &[usize]) -> RatMatrix {
    RatMatrix::new(idx.iter().map(|&i| idx.iter().map(|&j| gram[i][j].clone()).collect()).collect())
        .expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    #[test]
    fn nef_class_is_its_own_positive_part() {
        let spec = SurfaceSpec::delpezzo(4).unwrap();
        let h = PicardClass::hyperplane(4);
        let z = zariski(&spec, &h).unwrap();
        assert_eq!(z.positive, h);
        assert!(z.negative.is_zero());
        z.verify(&spec, &h).unwrap();
    }

    #[test]
    fn exceptional_curve_split_off() {
        let spec = SurfaceSpec::delpezzo(1).unwrap();
        let d = PicardClass::hyperplane(1).add(&PicardClass::exceptional(1, 0));
        let z = zariski(&spec, &d).unwrap();
        assert_eq!(z.positive, PicardClass::hyperplane(1));
        assert_eq!(z.negative, PicardClass::exceptional(1, 0));
        z.verify(&spec, &d).unwrap();
    }

    #[test]
    fn line_through_two_points() {
        let spec = SurfaceSpec::delpezzo(2).unwrap();
        let d = PicardClass::new(int(1), vec![rat(3, 4), rat(3, 4)]);
        let z = zariski(&spec, &d).unwrap();
        assert_eq!(z.negative, PicardClass::from_ints(1, &[1, 1]).scale(&rat(1, 2)));
        assert_eq!(z.positive, PicardClass::from_ints(2, &[1, 1]).scale(&rat(1, 4)));
        z.verify(&spec, &d).unwrap();
    }

    #[test]
    fn seeded_runs_agree() {
        let spec = SurfaceSpec::delpezzo(5).unwrap();
        let d = PicardClass::new(int(2), vec![rat(1, 1), rat(1, 1), rat(1, 2), rat(0, 1), rat(0, 1)]);
        let plain = zariski(&spec, &d).unwrap();
        let all: Vec<usize> = (0..spec.curves().len()).collect();
        let seeded = zariski_seeded(&spec, &d, &all[..5]).unwrap();
        assert_eq!(plain, seeded);
    }

    #[test]
    fn anti_ample_is_rejected() {
        let spec = SurfaceSpec::delpezzo(2).unwrap();
        let d = PicardClass::hyperplane(2).scale(&int(-1));
        assert!(matches!(zariski(&spec, &d), Err(Error::NotPseudoeffective)));
        let e = PicardClass::from_ints(1, &[2, 0]);
        assert!(matches!(zariski(&spec, &e), Err(Error::NotPseudoeffective)));
    }

    #[test]
    fn idempotent() {
        let spec = SurfaceSpec::delpezzo(3).unwrap();
        let d = PicardClass::new(int(1), vec![rat(2, 3), rat(2, 3), rat(1, 5)]);
        let z = zariski(&spec, &d).unwrap();
        let again = zariski(&spec, &z.positive).unwrap();
        assert_eq!(again.positive, z.positive);
        assert!(again.negative.is_zero());
    }
}
