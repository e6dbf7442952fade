//! Numeric planar layout of the unfolded copies, for export only.
//!
//! Nothing here feeds back into the exact computations.

use std::f64::consts::PI;
use std::fmt::Write;

use serde::Serialize;

use super::{build_surface, GroupElement};
use crate::error::{Error, Result};
use crate::polygon::PolygonSpec;
use crate::strata;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlacedCopy {
    pub element: String,
    pub vertices: Vec<[f64; 2]>,
}

/// All `2N` copies, each the image of the base polygon under its group
/// element with vertex 0 pinned at the origin.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Layout {
    pub copies: Vec<PlacedCopy>,
    /// Base-polygon vertices whose cone points are genuine singularities.
    pub singular_vertices: Vec<usize>,
}

impl Layout {
    /// `(min_x, min_y, max_x, max_y)` over every placed vertex.
    pub fn bounds(&self) -> (f64, f64, f64, f64) {
        self.copies.iter().flat_map(|c| c.vertices.iter()).fold(
            (
                f64::INFINITY,
                f64::INFINITY,
                f64::NEG_INFINITY,
                f64::NEG_INFINITY,
            ),
            |(x0, y0, x1, y1), &[x, y]| (x0.min(x), y0.min(y), x1.max(x), y1.max(y)),
        )
    }

    /// One closed path per copy; singular vertices marked with a dot.
    pub fn to_svg(&self) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let span = (x1 - x0).max(y1 - y0).max(f64::EPSILON);
        let margin = 0.05 * span;
        let dot = 0.01 * span;
        let stroke = 0.003 * span;
        let mut out = String::new();
        // y is flipped so the picture has the usual mathematical orientation
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
            x0 - margin,
            -y1 - margin,
            x1 - x0 + 2.0 * margin,
            y1 - y0 + 2.0 * margin
        );
        let _ = writeln!(
            out,
            r#"<g fill="none" stroke="black" stroke-width="{stroke:.6}" stroke-linejoin="round">"#
        );
        for copy in &self.copies {
            let mut d = String::new();
            for (i, [x, y]) in copy.vertices.iter().enumerate() {
                let cmd = if i == 0 { 'M' } else { 'L' };
                let _ = write!(d, "{cmd}{:.6} {:.6} ", x, -y);
            }
            d.push('Z');
            let _ = writeln!(out, r#"<path id="{}" d="{d}"/>"#, copy.element);
        }
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r#"<g fill="red" stroke="none">"#);
        for copy in &self.copies {
            for &v in &self.singular_vertices {
                let [x, y] = copy.vertices[v];
                let _ = writeln!(
                    out,
                    r#"<circle cx="{:.6}" cy="{:.6}" r="{dot:.6}"/>"#,
                    x, -y
                );
            }
        }
        let _ = writeln!(out, "</g>");
        out.push_str("</svg>\n");
        out
    }
}

pub fn realize(p: &PolygonSpec) -> Result<Layout> {
    realize_with_tolerance(p, DEFAULT_TOLERANCE)
}

/// Lays out the unfolded copies. The polygon must carry side lengths that
/// close up within `tolerance` relative to its perimeter.
pub fn realize_with_tolerance(p: &PolygonSpec, tolerance: f64) -> Result<Layout> {
    let lengths = p.side_lengths().ok_or_else(|| {
        Error::InvalidGeometry("side lengths are required for a planar layout".into())
    })?;
    let base = base_vertices(p, lengths, tolerance)?;
    let surface = build_surface(p)?;
    let n = surface.n();
    let copies = surface
        .copies()
        .iter()
        .map(|g| PlacedCopy {
            element: g.to_string(),
            vertices: base.iter().map(|&v| apply(g, n, v)).collect(),
        })
        .collect();
    let singular_vertices = strata::profile(p, 1)?
        .classes()
        .iter()
        .filter(|c| c.order != 0)
        .map(|c| c.vertex)
        .collect();
    Ok(Layout {
        copies,
        singular_vertices,
    })
}

fn base_vertices(p: &PolygonSpec, lengths: &[f64], tolerance: f64) -> Result<Vec<[f64; 2]>> {
    let mut heading = 0.0f64;
    let mut at = [0.0f64, 0.0];
    let mut vertices = Vec::with_capacity(lengths.len());
    for (i, &len) in lengths.iter().enumerate() {
        if i > 0 {
            let a = p.angles()[i];
            heading += PI - PI * a.numerator() as f64 / a.denominator() as f64;
        }
        vertices.push(at);
        at = [at[0] + len * heading.cos(), at[1] + len * heading.sin()];
    }
    let perimeter: f64 = lengths.iter().sum();
    let gap = at[0].hypot(at[1]);
    if gap > tolerance * perimeter {
        return Err(Error::InvalidGeometry(format!(
            "polygon does not close: gap {gap:.3e} exceeds {tolerance:e} of perimeter {perimeter}"
        )));
    }
    Ok(vertices)
}

fn apply(g: &GroupElement, n: u64, [x, y]: [f64; 2]) -> [f64; 2] {
    let m = g.matrix(n);
    [m[0][0] * x + m[1][0] * y, m[0][1] * x + m[1][1] * y]
}
