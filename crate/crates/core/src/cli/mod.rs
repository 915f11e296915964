//! Pipelines behind the `okounkov` binary: read an input, compute bodies and
//! constants, collect exact checks, and write a deterministic report.

pub mod svg;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::check::{Check, Relation};
use crate::error::{Error, Result};
use crate::geometry::rational::serde_rational;
use crate::geometry::{dilate, int, rat, volume, Polytope, Rational};
use crate::semigroup::GradedValuationData;
use crate::seshadri::{
    certify, okounkov_domain_volume, scaling_check, superadditivity_check, upper_bound_check, xi_simplex_fit,
    BodyFamily, SeshadriResult,
};
use crate::surface::body::{scaled_simplex, surface_body_from_profile};
use crate::surface::{
    ray_breakpoints, volume_difference_check, zariski, PicardClass, SurfaceInput, SurfaceRayBody,
};
use crate::toric::ToricInput;
use svg::{plot_svg, Layer};

pub const DEFAULT_K_MAX: u32 = 50;

/// Lowest level at which `(9/10) * body` is expected inside the cumulative hull.
pub const COVERAGE_LEVEL: u32 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Toric,
    Surface,
    Semigroup,
    Seshadri,
    Check,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Toric => "toric",
            Mode::Surface => "surface",
            Mode::Semigroup => "semigroup",
            Mode::Seshadri => "seshadri",
            Mode::Check => "check",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Mode::Toric, Mode::Surface, Mode::Semigroup, Mode::Seshadri, Mode::Check]
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Schema(format!("unknown mode {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub mode: Mode,
    pub input_path: PathBuf,
    /// Reports go to stdout when unset.
    pub output_dir: Option<PathBuf>,
    /// Falls back to the input's `k_max`, then to [`DEFAULT_K_MAX`].
    pub k_max: Option<u32>,
    pub emit_svg: bool,
    /// Overrides the chosen vertices (toric) or restricts the reported points.
    pub points: Option<Vec<usize>>,
    /// `"delpezzo"` or a path to a JSON curve list.
    pub curves: Option<String>,
}

impl JobConfig {
    pub fn new(mode: Mode, input_path: impl Into<PathBuf>) -> Self {
        JobConfig {
            mode,
            input_path: input_path.into(),
            output_dir: None,
            k_max: None,
            emit_svg: false,
            points: None,
            curves: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_max == Some(0) {
            return Err(Error::Schema("--k-max must be at least 1".into()));
        }
        if self.emit_svg && self.output_dir.is_none() {
            return Err(Error::Schema("--svg needs --out".into()));
        }
        if let Some(p) = &self.points {
            if p.is_empty() {
                return Err(Error::Schema("--points needs at least one index".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BodyEntry {
    pub label: String,
    pub point: usize,
    /// Which chart the coordinates live in.
    pub coordinates: &'static str,
    #[serde(with = "serde_rational")]
    pub volume: Rational,
    pub polytope: Polytope,
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedValue {
    pub name: String,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub mode: Mode,
    pub bodies: Vec<BodyEntry>,
    pub volumes: Vec<NamedValue>,
    #[serde(flatten)]
    pub xi: Option<SeshadriResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bound_ok: Option<bool>,
    pub checks: Vec<Check>,
    pub details: BTreeMap<String, Value>,
}

impl Report {
    fn new(mode: Mode) -> Self {
        Report {
            mode,
            bodies: Vec::new(),
            volumes: Vec::new(),
            xi: None,
            certified: None,
            upper_bound_ok: None,
            checks: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    fn volume(&mut self, name: impl Into<String>, value: Rational) {
        self.volumes.push(NamedValue { name: name.into(), value });
    }

    fn detail<T: Serialize>(&mut self, key: &str, value: &T) -> Result<()> {
        self.details.insert(key.to_string(), serde_json::to_value(value)?);
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub stage: String,
    pub millis: f64,
}

/// Everything a run produces; only `report` is canonical.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub report: Report,
    pub timings: Vec<Timing>,
    /// Extra files (name, contents) for the output directory.
    pub files: Vec<(String, String)>,
}

impl RunOutput {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let r = f(self);
        self.timings.push(Timing { stage: stage.to_string(), millis: start.elapsed().as_secs_f64() * 1e3 });
        r
    }

    pub fn report_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.report)?;
        s.push('\n');
        Ok(s)
    }

    /// Writes `report.json`, `timings.json` and the extra files into `dir`.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.json"), self.report_json()?)?;
        fs::write(dir.join("timings.json"), serde_json::to_string_pretty(&self.timings)? + "\n")?;
        for (name, contents) in &self.files {
            fs::write(dir.join(name), contents)?;
        }
        Ok(())
    }
}

enum Input {
    Toric { input: ToricInput, k_max: Option<u32> },
    Surface(SurfaceInput),
    Semigroup(GradedValuationData),
}

fn load(cfg: &JobConfig, text: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value.as_object().ok_or_else(|| Error::Schema("input must be a JSON object".into()))?;
    if obj.contains_key("vertices") {
        let mut input = ToricInput::from_json(text)?;
        if let Some(p) = &cfg.points {
            input = ToricInput::new(input.polytope, p.clone())?;
        }
        let k_max = match obj.get("k_max") {
            None => None,
            Some(v) => Some(
                v.as_u64()
                    .and_then(|k| u32::try_from(k).ok())
                    .filter(|&k| k > 0)
                    .ok_or_else(|| Error::Schema("k_max must be a positive integer".into()))?,
            ),
        };
        Ok(Input::Toric { input, k_max })
    } else if obj.contains_key("levels") {
        Ok(Input::Semigroup(GradedValuationData::from_json(text)?))
    } else if obj.contains_key("N") {
        let mut input = SurfaceInput::from_json(text)?;
        if let Some(c) = &cfg.curves {
            let curves = if c == "delpezzo" { "\"delpezzo\"".to_string() } else { fs::read_to_string(c)? };
            input = input.with_curve_override(&curves)?;
        }
        Ok(Input::Surface(input))
    } else {
        Err(Error::Schema("input has none of the keys \"vertices\", \"N\" or \"levels\"".into()))
    }
}

fn selected_points(cfg: &JobConfig, count: usize) -> Result<Vec<usize>> {
    match &cfg.points {
        None => Ok((0..count).collect()),
        Some(p) => {
            if let Some(&index) = p.iter().find(|&&i| i >= count) {
                return Err(Error::PointIndex { index, count });
            }
            Ok(p.clone())
        }
    }
}

/// Runs the job without touching the file system beyond reading inputs.
pub fn run(cfg: &JobConfig) -> Result<RunOutput> {
    let text = fs::read_to_string(&cfg.input_path)?;
    run_on_text(cfg, &text)
}

/// [`run`] on an input document already in memory; `cfg.input_path` is ignored.
pub fn run_on_text(cfg: &JobConfig, text: &str) -> Result<RunOutput> {
    cfg.validate()?;
    let mut out = RunOutput { report: Report::new(cfg.mode), timings: Vec::new(), files: Vec::new() };
    let input = out.time("parse", |_| load(cfg, text))?;
    match (cfg.mode, input) {
        (Mode::Toric, Input::Toric { input, k_max }) => {
            toric_pipeline(&mut out, cfg, &input, cfg.k_max.or(k_max).unwrap_or(DEFAULT_K_MAX), false)?
        }
        (Mode::Surface, Input::Surface(input)) => surface_pipeline(&mut out, cfg, &input, false)?,
        (Mode::Semigroup, Input::Semigroup(data)) => {
            semigroup_pipeline(&mut out, cfg, &data, cfg.k_max.unwrap_or(DEFAULT_K_MAX), false)?
        }
        (Mode::Seshadri, Input::Toric { input, .. }) => {
            let fam = BodyFamily::from_toric(&input)?;
            let vol = factorial(input.dim()) * volume(input.polytope.polytope());
            seshadri_summary(&mut out, &fam, &vol)?;
            let xi = out.report.xi.as_ref().expect("just set").xi.clone();
            out.report.checks.push(Check::new("xi == toric Seshadri constant", xi, Relation::Eq, input.seshadri()));
        }
        (Mode::Seshadri, Input::Surface(input)) => {
            let fam = BodyFamily::from_surface(&input.spec, &input.l)?;
            let vol = zariski(&input.spec, &input.l)?.volume;
            seshadri_summary(&mut out, &fam, &vol)?;
            curve_ratio_check(&mut out, &input)?;
        }
        (Mode::Check, Input::Toric { input, k_max }) => {
            toric_pipeline(&mut out, cfg, &input, cfg.k_max.or(k_max).unwrap_or(DEFAULT_K_MAX), true)?
        }
        (Mode::Check, Input::Surface(input)) => surface_pipeline(&mut out, cfg, &input, true)?,
        (Mode::Check, Input::Semigroup(data)) => {
            semigroup_pipeline(&mut out, cfg, &data, cfg.k_max.unwrap_or(DEFAULT_K_MAX), true)?
        }
        (mode, _) => {
            return Err(Error::Schema(format!("input kind does not fit the {} subcommand", mode.as_str())));
        }
    }
    Ok(out)
}

/// [`run`], then writes into the output directory when one is configured.
pub fn execute(cfg: &JobConfig) -> Result<RunOutput> {
    let out = run(cfg)?;
    if let Some(dir) = &cfg.output_dir {
        out.write_to(dir)?;
    }
    Ok(out)
}


fn factorial(n: usize) -> Rational {
    int((1..=n as i64).product())
}

fn seshadri_summary(out: &mut RunOutput, fam: &BodyFamily, vol_total: &Rational) -> Result<()> {
    let res = out.time("seshadri", |_| xi_simplex_fit(fam))?;
    out.report.certified = Some(certify(fam, &res.xi));
    let ub = upper_bound_check(fam, vol_total)?;
    out.report.upper_bound_ok = Some(ub.pass);
    out.report.checks.push(ub);
    out.report.xi = Some(res);
    Ok(())
}

fn xi_overlay(fam: &BodyFamily, xi: &Rational) -> Option<Polytope> {
    (fam.n == 2 && xi.is_positive()).then(|| scaled_simplex(xi))
}

fn toric_pipeline(out: &mut RunOutput, cfg: &JobConfig, input: &ToricInput, k_max: u32, full: bool) -> Result<()> {
    let n = input.dim();
    let (regions, bodies) = out.time("bodies", |_| Ok((input.subdivision()?, input.bodies()?)))?;
    let vol_p = volume(input.polytope.polytope());
    out.report.volume("P", vol_p.clone());
    for (j, b) in bodies.iter().enumerate() {
        let v = volume(b);
        out.report.volume(format!("body_{}", j + 1), v.clone());
        out.report.bodies.push(BodyEntry {
            label: format!("body_{}", j + 1),
            point: j,
            coordinates: "vertex chart",
            volume: v,
            polytope: b.clone(),
        });
    }
    out.report.detail("chosen_vertices", &input.chosen)?;
    out.report.detail("subdivision", &regions)?;
    let domains: Vec<_> = bodies.iter().map(okounkov_domain_volume).collect();
    out.report.detail("okounkov_domains", &domains)?;

    let (lhs, rhs, _) = input.volume_check()?;
    out.report.checks.push(Check::new("n! * sum vol(body_j) == n! * vol(P)", lhs, Relation::Eq, rhs));

    let fam = BodyFamily::new(bodies.clone())?;
    seshadri_summary(out, &fam, &(factorial(n) * &vol_p))?;
    let xi = out.report.xi.as_ref().expect("just set").xi.clone();
    let closed = input.seshadri();
    out.report.checks.push(Check::new("xi == toric Seshadri constant", xi.clone(), Relation::Eq, closed.clone()));
    out.report
        .checks
        .push(Check::new("fractional part of 2 * toric Seshadri constant", (int(2) * &closed).fract(), Relation::Eq, int(0)));

    out.time("oracle", |out| oracle_checks(out, input, &bodies, k_max))?;

    if full {
        out.time("properties", |out| {
            for k in [2i64, 3] {
                let dil = input.dilate(k)?;
                let kb = dil.bodies()?;
                let same = kb.iter().zip(&bodies).filter(|(a, b)| **a == dilate(b, &int(k))).count();
                out.report.checks.push(Check::new(
                    format!("bodies of {k}P equal {k} * bodies of P"),
                    int(same as i64),
                    Relation::Eq,
                    int(bodies.len() as i64),
                ));
                out.report.checks.push(scaling_check(&fam, &BodyFamily::new(kb)?, &int(k))?);
            }
            let sum = ToricInput::new(input.polytope.fan_sum(&input.polytope)?, input.chosen.clone())?;
            out.report.checks.push(superadditivity_check(&fam, &fam, &BodyFamily::from_toric(&sum)?)?);
            Ok(())
        })?;
    }

    if cfg.emit_svg && n == 2 {
        let overlay = xi_overlay(&fam, &xi);
        for (j, b) in bodies.iter().enumerate() {
            let mut layers = vec![Layer::filled(b, format!("body_{}", j + 1))];
            if let Some(o) = &overlay {
                layers.push(Layer::outline(o, format!("{xi} * Sigma_2")));
            }
            out.files.push((format!("body_{}.svg", j + 1), plot_svg(&layers)?));
        }
        let layers: Vec<Layer> =
            regions.iter().enumerate().map(|(j, r)| Layer::filled(r, format!("P_{}", j + 1))).collect();
        out.files.push(("subdivision.svg".into(), plot_svg(&layers)?));
    }
    Ok(())
}

/// Brute-force lattice data against the closed-form bodies.
fn oracle_checks(out: &mut RunOutput, input: &ToricInput, bodies: &[Polytope], k_max: u32) -> Result<()> {
    let data = input.oracle_export(k_max)?;
    let mut partition_ok = 0i64;
    for k in 1..=k_max {
        if data.check_dimension_partition(k)? {
            partition_ok += 1;
        }
    }
    out.report.checks.push(Check::new(
        "levels where sum_j #W_j = #lattice points of kP",
        int(partition_ok),
        Relation::Eq,
        int(i64::from(k_max)),
    ));
    for (j, body) in bodies.iter().enumerate() {
        let approx = data.body_approx(j, k_max)?;
        let inside = approx.levels.values().filter(|h| h.is_subset_of(body)).count();
        out.report.checks.push(Check::new(
            format!("levels where Conv(Gamma_{}^k)/k lies in body_{}", j + 1, j + 1),
            int(inside as i64),
            Relation::Eq,
            int(approx.levels.len() as i64),
        ));
        let shrunk = dilate(body, &rat(9, 10));
        let covered = shrunk.is_empty() || shrunk.is_subset_of(&approx.limit_hull);
        // Coverage is a large-level statement; below COVERAGE_LEVEL it is only recorded.
        if k_max >= COVERAGE_LEVEL {
            out.report.checks.push(Check::new(
                format!("(9/10) * body_{} inside the level-{k_max} cumulative hull", j + 1),
                int(i64::from(covered)),
                Relation::Eq,
                int(1),
            ));
        } else {
            out.report.detail(&format!("coverage_{}", j + 1), &covered)?;
        }
        out.report.volume(format!("cumulative_hull_{}", j + 1), approx.limit_volume());
    }
    out.files.push(("oracle.json".into(), serde_json::to_string(&data)? + "\n"));
    Ok(())
}

fn curve_ratio_check(out: &mut RunOutput, input: &SurfaceInput) -> Result<()> {
    let Some(res) = &out.report.xi else { return Ok(()) };
    if let Some((ratio, idx)) = input.spec.curve_ratio_min(&input.l) {
        let (name, rel) = if input.spec.curves_are_complete() {
            ("xi == min over curves of (L.C) / sum m_i", Relation::Eq)
        } else {
            ("xi <= min over supplied curves of (L.C) / sum m_i", Relation::Le)
        };
        out.report.checks.push(Check::new(name, res.xi.clone(), rel, ratio));
        out.report.detail("curve_attaining_ratio", &input.spec.curves()[idx])?;
    }
    Ok(())
}

fn surface_pipeline(out: &mut RunOutput, cfg: &JobConfig, input: &SurfaceInput, full: bool) -> Result<()> {
    let spec = &input.spec;
    let l = &input.l;
    let z = out.time("zariski", |_| zariski(spec, l))?;
    z.verify(spec, l)?;
    out.report.volume("Vol(L)", z.volume.clone());
    out.report.detail("curve_count", &spec.curves().len())?;
    out.report.detail("zariski", &z)?;
    if full {
        let again = zariski(spec, &z.positive)?;
        out.report.checks.push(Check::new(
            "zariski(P) has a nonzero negative part",
            int(i64::from(!again.negative.is_zero())),
            Relation::Eq,
            int(0),
        ));
    }
    if !input.rays {
        return Ok(());
    }

    let g = PicardClass::exceptional_sum(spec.num_points());
    let prof = out.time("ray", |_| ray_breakpoints(spec, l, &g))?;
    out.report.detail("ray", &prof)?;
    out.report.checks.push(Check::new(
        "Zariski chambers along L - t sum E_i",
        int(prof.chamber_count() as i64),
        Relation::Le,
        int(2),
    ));

    let points = selected_points(cfg, spec.num_points())?;
    let mut bodies: Vec<SurfaceRayBody> = Vec::new();
    out.time("bodies", |_| {
        for &j in &points {
            bodies.push(surface_body_from_profile(spec, &prof, j)?);
        }
        Ok(())
    })?;
    let mut areas = Rational::zero();
    let mut all_rational = true;
    for b in &bodies {
        let label = format!("body_{}", b.j + 1);
        match (&b.body_blowup_coords, &b.body_deglex_coords) {
            (Some(bu), Some(dl)) => {
                let a = volume(bu);
                areas += &a;
                out.report.volume(label.clone(), a.clone());
                out.report.bodies.push(BodyEntry {
                    label: label.clone(),
                    point: b.j,
                    coordinates: "deglex",
                    volume: a.clone(),
                    polytope: dl.clone(),
                });
                out.report.bodies.push(BodyEntry {
                    label: format!("{label}_blowup"),
                    point: b.j,
                    coordinates: "(t, y)",
                    volume: a,
                    polytope: bu.clone(),
                });
            }
            _ => all_rational = false,
        }
    }
    out.report.detail("profiles", &bodies)?;

    if all_rational && points.len() == spec.num_points() {
        out.report.checks.push(Check::new("2 * sum area(body_j) == Vol(L)", int(2) * &areas, Relation::Eq, z.volume.clone()));
    }

    let mut ts: Vec<Rational> = vec![Rational::zero()];
    let mut marks = prof.breakpoints();
    if let Some(mu) = prof.end.exact() {
        marks.push(mu.clone());
    }
    let mut prev = Rational::zero();
    for m in marks {
        ts.push((&prev + &m) / int(2));
        ts.push(m.clone());
        prev = m;
    }
    if l.m.iter().all(Zero::is_zero) {
        out.time("volume drops", |out| {
            for t in &ts {
                let c = volume_difference_check(spec, l, t)?;
                out.report.checks.push(Check::new(
                    format!("Vol(L) - Vol(L - {t} G) == 2 * integral of sum beta_j"),
                    c.lhs,
                    Relation::Eq,
                    c.rhs,
                ));
            }
            Ok(())
        })?;
    }

    if full {
        for p in &prof.pieces {
            let d = l.sub(&g.scale(&p.start));
            zariski(spec, &d)?.verify(spec, &d)?;
        }
        let monotone = prof
            .pieces
            .iter()
            .flat_map(|p| p.coefficient_slopes.iter())
            .filter(|b| b.is_negative())
            .count();
        out.report.checks.push(Check::new(
            "decreasing negative-part coefficients",
            int(monotone as i64),
            Relation::Eq,
            int(0),
        ));
    }

    if all_rational {
        let fam = BodyFamily::new(bodies.iter().filter_map(|b| b.body_deglex_coords.clone()).collect())?;
        seshadri_summary(out, &fam, &z.volume)?;
        if points.len() == spec.num_points() {
            curve_ratio_check(out, input)?;
        }
        if cfg.emit_svg {
            let xi = out.report.xi.as_ref().expect("just set").xi.clone();
            let overlay = xi_overlay(&fam, &xi);
            for (b, body) in bodies.iter().zip(&fam.bodies) {
                let mut layers = vec![Layer::filled(body, format!("body_{}", b.j + 1))];
                if let Some(o) = &overlay {
                    layers.push(Layer::outline(o, format!("{xi} * Sigma_2")));
                }
                out.files.push((format!("body_{}.svg", b.j + 1), plot_svg(&layers)?));
            }
        }
    }
    Ok(())
}

fn semigroup_pipeline(
    out: &mut RunOutput,
    cfg: &JobConfig,
    data: &GradedValuationData,
    k_max: u32,
    full: bool,
) -> Result<()> {
    let points = selected_points(cfg, data.num_points)?;
    let levels: Vec<u32> = data.levels.keys().copied().filter(|&k| k <= k_max).collect();
    let mut hulls = Vec::new();
    out.time("hulls", |out| {
        for &j in &points {
            let approx = data.body_approx(j, k_max)?;
            let v = approx.limit_volume();
            out.report.volume(format!("cumulative_hull_{}", j + 1), v.clone());
            out.report.bodies.push(BodyEntry {
                label: format!("cumulative_hull_{}", j + 1),
                point: j,
                coordinates: "valuation",
                volume: v,
                polytope: approx.limit_hull.clone(),
            });
            let tail: Vec<u32> = levels.iter().rev().take(5).rev().copied().collect();
            let est: Vec<NamedValue> = data
                .volume_limit_estimate(j, tail)?
                .into_iter()
                .map(|(m, value)| NamedValue { name: format!("m = {m}"), value })
                .collect();
            out.report.detail(&format!("volume_limit_{}", j + 1), &est)?;
            out.report.detail(&format!("divisibility_monotone_{}", j + 1), &approx.divisibility_monotone)?;
            hulls.push(approx.limit_hull);
        }
        Ok(())
    })?;

    let with_h0: Vec<u32> = levels.iter().copied().filter(|k| data.h0.contains_key(k)).collect();
    if !with_h0.is_empty() {
        let mut ok = 0i64;
        for &k in &with_h0 {
            if data.check_dimension_partition(k)? {
                ok += 1;
            }
        }
        out.report.checks.push(Check::new(
            "levels where sum_j #W_j = h0",
            int(ok),
            Relation::Eq,
            int(with_h0.len() as i64),
        ));
    }
    if full {
        let mut bad = 0i64;
        for &k in &levels {
            for j in 0..data.num_points {
                let w = data.w_split_raw(j, k)?;
                bad += data.v_split_raw(j, k)?.iter().filter(|v| !w.contains(v)).count() as i64;
            }
        }
        out.report.checks.push(Check::new("V-split values missing from the W-split", int(bad), Relation::Eq, int(0)));
    }
    if cfg.emit_svg && data.n == 2 {
        for (&j, h) in points.iter().zip(&hulls) {
            out.files.push((
                format!("body_{}.svg", j + 1),
                plot_svg(&[Layer::filled(h, format!("cumulative_hull_{}", j + 1))])?,
            ));
        }
    }
    Ok(())
}
