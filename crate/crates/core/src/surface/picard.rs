//! Divisor classes `dH - sum m_i E_i` on the blow-up of the plane at N points.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::rational::{fmt_rational, serde_rational_vec};
use crate::geometry::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PicardClass {
    /// Coefficient of the hyperplane class H.
    pub d: Rational,
    /// Multiplicities: the coefficient of E_i is `-m[i]`.
    pub m: Vec<Rational>,
}

impl PicardClass {
    pub fn new(d: Rational, m: Vec<Rational>) -> Self {
        PicardClass { d, m }
    }

    pub fn from_ints(d: i64, m: &[i64]) -> Self {
        PicardClass { d: int(d), m: m.iter().map(|&x| int(x)).collect() }
    }

    pub fn zero(n: usize) -> Self {
        PicardClass { d: Rational::zero(), m: vec![Rational::zero(); n] }
    }

    pub fn hyperplane(n: usize) -> Self {
        PicardClass { d: Rational::one(), m: vec![Rational::zero(); n] }
    }

    /// The exceptional curve over the i-th point (0-based).
    pub fn exceptional(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.m[i] = -Rational::one();
        e
    }

    /// `E_1 + ... + E_N`.
    pub fn exceptional_sum(n: usize) -> Self {
        PicardClass { d: Rational::zero(), m: vec![-Rational::one(); n] }
    }

    /// `K = -3H + sum E_i`.
    pub fn canonical(n: usize) -> Self {
        PicardClass { d: int(-3), m: vec![-Rational::one(); n] }
    }

    pub fn num_points(&self) -> usize {
        self.m.len()
    }

    pub fn intersect(&self, other: &PicardClass) -> Result<Rational> {
        if self.m.len() != other.m.len() {
            return Err(Error::DimensionMismatch { expected: self.m.len(), found: other.m.len() });
        }
        Ok(self.dot(other))
    }

    /// Intersection without the size check.
    pub(crate) fn dot(&self, other: &PicardClass) -> Rational {
        self.m
            .iter()
            .zip(&other.m)
            .fold(&self.d * &other.d, |acc, (a, b)| acc - a * b)
    }

    pub fn self_intersection(&self) -> Rational {
        self.dot(self)
    }

    pub fn add(&self, o: &PicardClass) -> PicardClass {
        PicardClass {
            d: &self.d + &o.d,
            m: self.m.iter().zip(&o.m).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &PicardClass) -> PicardClass {
        PicardClass {
            d: &self.d - &o.d,
            m: self.m.iter().zip(&o.m).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> PicardClass {
        PicardClass { d: &self.d * c, m: self.m.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero() && self.m.iter().all(Zero::is_zero)
    }

    /// True for the class of some `E_i`.
    pub fn is_exceptional(&self) -> bool {
        self.d.is_zero()
            && self.m.iter().filter(|a| !a.is_zero()).count() == 1
            && self.m.iter().all(|a| a.is_zero() || *a == -Rational::one())
    }

    /// Sum of the multiplicities `m_i`.
    pub fn total_multiplicity(&self) -> Rational {
        self.m.iter().fold(Rational::zero(), |acc, a| acc + a)
    }

    pub fn is_integral(&self) -> bool {
        self.d.denom().is_one() && self.m.iter().all(|a| a.denom().is_one())
    }

    pub fn has_negative_multiplicity(&self) -> bool {
        self.m.iter().any(Signed::is_negative)
    }

    /// `[d, m_1, ..., m_N]`.
    pub fn to_vec(&self) -> Vec<Rational> {
        std::iter::once(self.d.clone()).chain(self.m.iter().cloned()).collect()
    }

    pub fn from_vec(v: Vec<Rational>) -> Result<Self> {
        let mut it = v.into_iter();
        let d = it.next().ok_or(Error::EmptyInput("class coefficients"))?;
        Ok(PicardClass { d, m: it.collect() })
    }
}

impl fmt::Display for PicardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}H", fmt_rational(&self.d))?;
        for (i, a) in self.m.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if a.is_negative() {
                write!(f, " + {}E{}", fmt_rational(&-a.clone()), i + 1)?;
            } else {
                write!(f, " - {}E{}", fmt_rational(a), i + 1)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct Flat(#[serde(with = "serde_rational_vec")] Vec<Rational>);

impl Serialize for PicardClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Flat(self.to_vec()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PicardClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = Flat::deserialize(d)?.0;
        PicardClass::from_vec(v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_examples() {
        let h = PicardClass::hyperplane(2);
        assert_eq!(h.intersect(&h).unwrap(), int(1));
        let line = PicardClass::from_ints(1, &[1, 1]);
        assert_eq!(line.self_intersection(), int(-1));
        let e1 = PicardClass::exceptional(2, 0);
        assert_eq!(h.add(&e1).intersect(&e1).unwrap(), int(-1));
        assert_eq!(e1.self_intersection(), int(-1));
        assert_eq!(h.intersect(&e1).unwrap(), int(0));
        assert!(h.intersect(&PicardClass::hyperplane(3)).is_err());
    }

    #[test]
    fn canonical_pairing() {
        let k = PicardClass::canonical(2);
        assert_eq!(PicardClass::exceptional(2, 1).intersect(&k).unwrap(), int(-1));
        assert_eq!(PicardClass::from_ints(1, &[1, 1]).intersect(&k).unwrap(), int(-1));
    }

    #[test]
    fn json_shape() {
        let c = PicardClass::from_ints(2, &[1, 0, 1]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"["2","1","0","1"]"#);
        let back: PicardClass = serde_json::from_str("[2, 1, 0, \"1\"]").unwrap();
        assert_eq!(back, c);
        assert_eq!(c.to_string(), "2H - 1E1 - 1E3");
    }
}
