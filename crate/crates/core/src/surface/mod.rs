//! Blow-ups of the plane at N points: Picard arithmetic, Zariski
//! decompositions along rays and the bodies they cut out.

pub mod body;
pub mod delpezzo;
pub mod picard;
pub mod ray;
pub mod zariski;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

pub use body::{
    p2_body_formula, restricted_volume_slice, surface_body, volume_difference_check, zariski_chamber_count,
    LinearPiece, PlaneBody, SurfaceRayBody, VolumeDifference,
};
pub use delpezzo::delpezzo_curves;
pub use picard::PicardClass;
pub use ray::{ray_breakpoints, RayEnd, RayPiece, RayProfile};
pub use zariski::{zariski, zariski_seeded, ZariskiDecomp};

use crate::error::{Error, Result};
use crate::geometry::{RatMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveSource {
    /// Every (-1)-curve, generated for N <= 8.
    DelpezzoAuto,
    UserSupplied,
}

/// The blown-up surface together with the negative curves the Zariski
/// engine is allowed to use.
#[derive(Clone, Debug, Serialize)]
pub struct SurfaceSpec {
    #[serde(rename = "N")]
    n: usize,
    curves: Vec<PicardClass>,
    provenance: CurveSource,
    #[serde(skip)]
    gram: Vec<Vec<Rational>>,
}

impl SurfaceSpec {
    pub fn delpezzo(n: usize) -> Result<Self> {
        let curves = delpezzo_curves(n)?;
        Ok(Self::build(n, curves, CurveSource::DelpezzoAuto))
    }

    /// User curve list; each class must have negative self-intersection.
    pub fn with_curves(n: usize, curves: Vec<PicardClass>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("at least one blown-up point is required".into()));
        }
        for (index, c) in curves.iter().enumerate() {
            if c.num_points() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.num_points() });
            }
            let sq = c.self_intersection();
            if !sq.is_negative() {
                return Err(Error::NonNegativeCurve { index, self_intersection: sq.to_string() });
            }
        }
        Ok(Self::build(n, curves, CurveSource::UserSupplied))
    }

    fn build(n: usize, curves: Vec<PicardClass>, provenance: CurveSource) -> Self {
        let gram = zariski::gram_matrix(&curves);
        SurfaceSpec { n, curves, provenance, gram }
    }

    pub fn num_points(&self) -> usize {
        self.n
    }

    pub fn curves(&self) -> &[PicardClass] {
        &self.curves
    }

    pub fn provenance(&self) -> CurveSource {
        self.provenance
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn gram_of(&self, idx: &[usize]) -> RatMatrix {
        zariski::submatrix(&self.gram, idx)
    }

    /// The automatic list contains every negative curve of the surface.
    pub fn curves_are_complete(&self) -> bool {
        self.provenance == CurveSource::DelpezzoAuto
    }

    pub fn check_class(&self, d: &PicardClass) -> Result<()> {
        if d.num_points() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: d.num_points() });
        }
        Ok(())
    }

    /// Position of `E_j` in the curve list.
    pub fn exceptional_index(&self, j: usize) -> Option<usize> {
        let e = PicardClass::exceptional(self.n, j);
        self.curves.iter().position(|c| *c == e)
    }

    /// `min_C (L.C) / sum_i m_i(C)` over listed curves with positive total multiplicity.
    pub fn curve_ratio_min(&self, l: &PicardClass) -> Option<(Rational, usize)> {
        self.curves
            .iter()
            .enumerate()
            .filter(|(_, c)| c.total_multiplicity().is_positive())
            .map(|(i, c)| (l.dot(c) / c.total_multiplicity(), i))
            .min()
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum CurvesField {
    Named(String),
    Classes(Vec<PicardClass>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSurfaceInput {
    #[serde(rename = "N")]
    n: usize,
    #[serde(default)]
    curves: Option<CurvesField>,
    #[serde(rename = "L", default)]
    l: Option<PicardClass>,
    #[serde(default = "yes")]
    rays: bool,
}

fn yes() -> bool {
    true
}

/// `{"N": 2, "curves": "delpezzo" | [[d, m_1, ...], ...], "L": [1, 0, 0], "rays": true}`.
#[derive(Clone, Debug)]
pub struct SurfaceInput {
    pub spec: SurfaceSpec,
    /// Defaults to `H`.
    pub l: PicardClass,
    /// Whether to walk `L - t sum E_i` and build bodies.
    pub rays: bool,
}

impl SurfaceInput {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSurfaceInput = serde_json::from_str(text)?;
        Self::from_parts(raw.n, raw.curves, raw.l, raw.rays)
    }

    /// Reads the curve list from a separate JSON document (`"delpezzo"` or an array of classes).
    pub fn with_curve_override(mut self, text: &str) -> Result<Self> {
        let field: CurvesField = serde_json::from_str(text)?;
        self.spec = spec_from_field(self.spec.n, Some(field))?;
        Ok(self)
    }

    fn from_parts(n: usize, curves: Option<CurvesField>, l: Option<PicardClass>, rays: bool) -> Result<Self> {
        let spec = spec_from_field(n, curves)?;
        let l = l.unwrap_or_else(|| PicardClass::hyperplane(n));
        if l.num_points() != n {
            return Err(Error::Schema(format!("L has {} multiplicities, expected N = {n}", l.num_points())));
        }
        Ok(SurfaceInput { spec, l, rays })
    }
}

fn spec_from_field(n: usize, field: Option<CurvesField>) -> Result<SurfaceSpec> {
    match field {
        None => SurfaceSpec::delpezzo(n),
        Some(CurvesField::Named(s)) if s == "delpezzo" => SurfaceSpec::delpezzo(n),
        Some(CurvesField::Named(s)) => Err(Error::Schema(format!("unknown curve list {s:?}"))),
        Some(CurvesField::Classes(cs)) => {
            if let Some(c) = cs.iter().find(|c| c.num_points() != n) {
                return Err(Error::Schema(format!("curve {c} has {} multiplicities, expected N = {n}", c.num_points())));
            }
            SurfaceSpec::with_curves(n, cs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    #[test]
    fn parses_input() {
        let inp = SurfaceInput::from_json(r#"{"N": 2, "curves": "delpezzo", "L": [1, 0, 0], "rays": true}"#).unwrap();
        assert_eq!(inp.spec.curves().len(), 3);
        assert_eq!(inp.l, PicardClass::hyperplane(2));
        let user = SurfaceInput::from_json(r#"{"N": 2, "curves": [[0, -1, 0], [0, 0, -1]]}"#).unwrap();
        assert_eq!(user.spec.provenance(), CurveSource::UserSupplied);
        assert!(user.rays);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(SurfaceInput::from_json(r#"{"N": 2, "L": [1, 0]}"#), Err(Error::Schema(_))));
        assert!(matches!(SurfaceInput::from_json(r#"{"N": 2, "curves": "cubics"}"#), Err(Error::Schema(_))));
        assert!(SurfaceInput::from_json("{").is_err());
    }

    #[test]
    fn user_curves_must_be_negative() {
        let r = SurfaceSpec::with_curves(1, vec![PicardClass::hyperplane(1)]);
        assert!(matches!(r, Err(Error::NonNegativeCurve { index: 0, .. })));
    }

    #[test]
    fn curve_ratio() {
        let spec = SurfaceSpec::delpezzo(2).unwrap();
        let (r, i) = spec.curve_ratio_min(&PicardClass::hyperplane(2)).unwrap();
        assert_eq!(r, rat(1, 2));
        assert_eq!(spec.curves()[i], PicardClass::from_ints(1, &[1, 1]));
        assert_eq!(spec.gram()[2][2], int(-1));
    }
}
