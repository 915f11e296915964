//! Planar polygons rendered as standalone SVG, with exact vertex labels.
//!
//! Coordinates are rounded for drawing only; the JSON report is canonical.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::hull::ccw_order;
use crate::geometry::rational::to_f64;
use crate::geometry::{Polytope, RatVec};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 60.0;
const PALETTE: [&str; 8] = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#9c755f"];

/// One polygon to draw; `outline_only` for overlays such as an inscribed simplex.
#[derive(Clone, Debug)]
pub struct Layer<'a> {
    pub polytope: &'a Polytope,
    pub label: String,
    pub outline_only: bool,
}

impl<'a> Layer<'a> {
    pub fn filled(polytope: &'a Polytope, label: impl Into<String>) -> Self {
        Layer { polytope, label: label.into(), outline_only: false }
    }

    pub fn outline(polytope: &'a Polytope, label: impl Into<String>) -> Self {
        Layer { polytope, label: label.into(), outline_only: true }
    }
}

fn point_label(v: &RatVec) -> String {
    let parts: Vec<String> = v.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn plot_svg(layers: &[Layer<'_>]) -> Result<String> {
    if let Some(l) = layers.iter().find(|l| l.polytope.dim() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, found: l.polytope.dim() });
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 600 600">"#
    );
    let _ = writeln!(out, r#"<rect width="600" height="600" fill="white"/>"#);
    let pts: Vec<(f64, f64)> = layers
        .iter()
        .flat_map(|l| l.polytope.vertices().iter())
        .map(|v| (to_f64(&v[0]), to_f64(&v[1])))
        .collect();
    if pts.is_empty() {
        let _ = writeln!(
            out,
            r##"<text x="300" y="300" text-anchor="middle" font-family="sans-serif" font-size="20" fill="#888">empty</text>"##
        );
        out.push_str("</svg>\n");
        return Ok(out);
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let map = |v: &RatVec| -> (f64, f64) {
        let x = MARGIN + (to_f64(&v[0]) - x0) * scale;
        let y = SIZE - MARGIN - (to_f64(&v[1]) - y0) * scale;
        (x, y)
    };

    let mut labelled: Vec<&RatVec> = Vec::new();
    for (i, layer) in layers.iter().enumerate() {
        let p = layer.polytope;
        if p.is_empty() {
            continue;
        }
        let color = PALETTE[i % PALETTE.len()];
        let ordered = if p.vertices().len() > 2 { ccw_order(p.vertices()) } else { p.vertices().to_vec() };
        let path: Vec<String> = ordered
            .iter()
            .map(|v| {
                let (x, y) = map(v);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let (fill, dash) = if layer.outline_only { ("none", r#" stroke-dasharray="6 4""#) } else { (color, "") };
        let _ = writeln!(
            out,
            r#"<polygon points="{}" fill="{fill}" fill-opacity="0.35" stroke="{color}" stroke-width="2"{dash}><title>{}</title></polygon>"#,
            path.join(" "),
            layer.label
        );
        for v in p.vertices() {
            if labelled.contains(&v) {
                continue;
            }
            labelled.push(v);
            let (x, y) = map(v);
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
            let _ = writeln!(
                out,
                r#"<text x="{:.3}" y="{:.3}" font-family="monospace" font-size="12">{}</text>"#,
                x + 5.0,
                y - 5.0,
                point_label(v)
            );
        }
    }
    let _ = writeln!(
        out,
        r##"<text x="10" y="20" font-family="sans-serif" font-size="12" fill="#555">drawing only; exact data in report.json</text>"##
    );
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::convex_hull;

    #[test]
    fn labels_are_exact() {
        let p = convex_hull(&[RatVec::from_ints(&[0, 0]), RatVec::from_ints(&[1, 0]), RatVec::from_ints(&[0, 1])]).unwrap();
        let half = crate::geometry::dilate(&p, &crate::geometry::rat(1, 2));
        let svg = plot_svg(&[Layer::filled(&p, "body"), Layer::outline(&half, "fit")]).unwrap();
        assert!(svg.contains("(1/2, 0)"));
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert!(svg.contains(r#"viewBox="0 0 600 600""#));
    }

    #[test]
    fn empty_placeholder_and_dimension() {
        let e = Polytope::empty(2);
        assert!(plot_svg(&[Layer::filled(&e, "e")]).unwrap().contains(">empty<"));
        let line = convex_hull(&[RatVec::from_ints(&[0]), RatVec::from_ints(&[1])]).unwrap();
        assert!(plot_svg(&[Layer::filled(&line, "l")]).is_err());
    }
}
