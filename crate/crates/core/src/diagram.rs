//! SVG drawing of a sign pattern on the n-gon.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::ngon::Polygon;
use crate::urelations::SignPattern;

const SIZE: f64 = 320.0;
const RADIUS: f64 = 120.0;
const NEGATIVE: &str = "#d62728";
const POSITIVE: &str = "#444444";

fn vertex(n: usize, k: usize) -> (f64, f64) {
    // vertex 1 at the top, increasing clockwise
    let theta = -PI / 2.0 + 2.0 * PI * (k - 1) as f64 / n as f64;
    (SIZE / 2.0 + RADIUS * theta.cos(), SIZE / 2.0 + RADIUS * theta.sin())
}

/// Negative chords are drawn thick and red, positive ones thin and grey.
/// `labels` overrides the vertex captions (position `k` shows `labels[k-1]`).
pub fn render_svg(poly: &Polygon, s: &SignPattern, labels: Option<&[usize]>) -> Result<String> {
    let n = poly.n();
    if s.n() != n {
        return Err(Error::SizeMismatch { expected: n, got: s.n() });
    }
    if let Some(l) = labels {
        crate::ngon::check_permutation(n, l)?;
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:.0}" height="{SIZE:.0}" viewBox="0 0 {SIZE:.0} {SIZE:.0}">"#
    );
    let points: Vec<String> = (1..=n)
        .map(|k| {
            let (x, y) = vertex(n, k);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(out, r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, points.join(" "));
    // positive chords first so negative ones sit on top
    for negative in [false, true] {
        for (idx, c) in poly.chords().iter().enumerate() {
            if s.is_negative(idx) != negative {
                continue;
            }
            let (x1, y1) = vertex(n, c.i);
            let (x2, y2) = vertex(n, c.j);
            let (color, width, class) = if negative { (NEGATIVE, 2.5, "neg") } else { (POSITIVE, 1.0, "pos") };
            let _ = writeln!(
                out,
                r#"  <line class="{class}" data-chord="{},{}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="{width}"/>"#,
                c.i, c.j
            );
        }
    }
    for k in 1..=n {
        let (x, y) = vertex(n, k);
        let (dx, dy) = ((x - SIZE / 2.0) * 0.15, (y - SIZE / 2.0) * 0.15);
        let caption = labels.map_or(k, |l| l[k - 1]);
        let _ = writeln!(out, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle" dominant-baseline="middle">{caption}</text>"#,
            x + dx,
            y + dy
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
