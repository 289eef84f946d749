//! Static SVG figures of coefficient discs and sample points.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::regions::Disc;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 60.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

/// A labelled disc outline.
#[derive(Debug, Clone)]
pub struct Layer<'a> {
    pub label: &'a str,
    pub disc: Disc,
}

/// Renders disc outlines and points in the complex plane on an 800×800
/// viewBox with equal axis scaling. Output depends only on the inputs.
pub fn render_svg(title: &str, layers: &[Layer<'_>], points: &[Complex64]) -> String {
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    let mut grow = |x: f64, y: f64, r: f64| {
        lo_x = lo_x.min(x - r);
        hi_x = hi_x.max(x + r);
        lo_y = lo_y.min(y - r);
        hi_y = hi_y.max(y + r);
    };
    for layer in layers {
        grow(layer.disc.center.re, layer.disc.center.im, layer.disc.radius);
    }
    for z in points {
        grow(z.re, z.im, 0.0);
    }
    if !lo_x.is_finite() {
        (lo_x, hi_x, lo_y, hi_y) = (-1.0, 1.0, -1.0, 1.0);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-6);
    let (mid_x, mid_y) = ((lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let to_x = |x: f64| SIZE / 2.0 + (x - mid_x) * scale;
    let to_y = |y: f64| SIZE / 2.0 - (y - mid_y) * scale;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(svg, r#"<rect x="0" y="0" width="800" height="800" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="400" y="30" text-anchor="middle" font-family="sans-serif" font-size="18">{}</text>"#,
        escape(title)
    );

    // real axis, if visible
    let y0 = to_y(0.0);
    if (0.0..=SIZE).contains(&y0) {
        let _ = writeln!(
            svg,
            r##"<line x1="0" y1="{y0:.3}" x2="800" y2="{y0:.3}" stroke="#bbbbbb" stroke-width="1"/>"##
        );
    }

    for (i, layer) in layers.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let (cx, cy) = (to_x(layer.disc.center.re), to_y(layer.disc.center.im));
        let r = layer.disc.radius * scale;
        let _ = writeln!(
            svg,
            r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{r:.3}" fill="none" stroke="{color}" stroke-width="2"/>"#
        );
        let _ = writeln!(svg, r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="3" fill="{color}"/>"#);
        let _ = writeln!(
            svg,
            r#"<text x="20" y="{:.0}" font-family="sans-serif" font-size="14" fill="{color}">{}: center {:.6}{:+.6}i, radius {:.6}</text>"#,
            SIZE - 20.0 - 20.0 * (layers.len() - 1 - i) as f64,
            escape(layer.label),
            layer.disc.center.re,
            layer.disc.center.im,
            layer.disc.radius
        );
    }
    for z in points {
        let _ = writeln!(
            svg,
            r##"<circle cx="{:.3}" cy="{:.3}" r="1.5" fill="#333333" fill-opacity="0.6"/>"##,
            to_x(z.re),
            to_y(z.im)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
