//! Minimal SVG charts: heatmap, scatter and bar histogram.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

const W: f64 = 640.0;
const H: f64 = 480.0;
const MARGIN: f64 = 56.0;

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
}

impl Frame {
    fn new(x: (f64, f64), y: (f64, f64)) -> Self {
        Frame {
            x: widen(x),
            y: widen(y),
        }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x.0) / (self.x.1 - self.x.0) * (W - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        H - MARGIN - (y - self.y.0) / (self.y.1 - self.y.0) * (H - 2.0 * MARGIN)
    }
}

fn widen((lo, hi): (f64, f64)) -> (f64, f64) {
    if lo < hi {
        (lo, hi)
    } else {
        let pad = lo.abs().max(1.0) * 0.5;
        (lo - pad, hi + pad)
    }
}

fn extent(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        })
}

fn open(svg: &mut String, title: &str) {
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        W / 2.0,
        escape(title)
    );
}

fn axes(svg: &mut String, frame: &Frame, x_label: &str, y_label: &str) {
    let (x0, x1, y0, y1) = (MARGIN, W - MARGIN, H - MARGIN, MARGIN);
    let _ = writeln!(
        svg,
        r#"<path d="M{x0},{y1} L{x0},{y0} L{x1},{y0}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{x0}" y="{}" text-anchor="start">{:.4}</text>"#,
        y0 + 16.0,
        frame.x.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{x1}" y="{}" text-anchor="end">{:.4}</text>"#,
        y0 + 16.0,
        frame.x.1
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="end">{:.4}</text>"#,
        x0 - 4.0,
        y0,
        frame.y.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="end">{:.4}</text>"#,
        x0 - 4.0,
        y1 + 10.0,
        frame.y.1
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        W / 2.0,
        H - 16.0,
        escape(x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{}</text>"#,
        H / 2.0,
        H / 2.0,
        escape(y_label)
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

// blue for negative, red for positive, white at zero
fn diverging(v: f64, scale: f64) -> String {
    let t = (v / scale).clamp(-1.0, 1.0);
    let (r, g, b) = if t < 0.0 {
        let k = 1.0 + t;
        (255.0 * k, 255.0 * k, 255.0)
    } else {
        let k = 1.0 - t;
        (255.0, 255.0 * k, 255.0 * k)
    };
    format!("rgb({},{},{})", r as u8, g as u8, b as u8)
}

/// `values[i][j]` at `(xs[i], ys[j])`; `None` cells are drawn grey.
pub fn heatmap(
    path: &Path,
    title: &str,
    x_label: &str,
    y_label: &str,
    xs: &[f64],
    ys: &[f64],
    values: &[Option<f64>],
) -> io::Result<()> {
    let frame = Frame::new(extent(xs.iter().copied()), extent(ys.iter().copied()));
    let scale = values
        .iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(1e-12);
    let cw = (W - 2.0 * MARGIN) / xs.len() as f64;
    let ch = (H - 2.0 * MARGIN) / ys.len() as f64;
    let mut svg = String::new();
    open(&mut svg, title);
    for (i, _) in xs.iter().enumerate() {
        for (j, _) in ys.iter().enumerate() {
            let fill = match values[i * ys.len() + j] {
                Some(v) => diverging(v, scale),
                None => "rgb(160,160,160)".to_string(),
            };
            let x = MARGIN + i as f64 * cw;
            let y = H - MARGIN - (j + 1) as f64 * ch;
            let _ = writeln!(
                svg,
                r#"<rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{:.2}" fill="{fill}"/>"#,
                cw + 0.5,
                ch + 0.5
            );
        }
    }
    axes(&mut svg, &frame, x_label, y_label);
    svg.push_str("</svg>\n");
    fs::write(path, svg)
}

pub fn scatter(
    path: &Path,
    title: &str,
    x_label: &str,
    y_label: &str,
    points: &[(f64, f64)],
) -> io::Result<()> {
    let frame = Frame::new(
        extent(points.iter().map(|p| p.0)),
        extent(points.iter().map(|p| p.1)),
    );
    let mut svg = String::new();
    open(&mut svg, title);
    for &(x, y) in points.iter().filter(|p| p.0.is_finite() && p.1.is_finite()) {
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.2}" cy="{:.2}" r="1.2" fill="black" fill-opacity="0.6"/>"#,
            frame.px(x),
            frame.py(y)
        );
    }
    axes(&mut svg, &frame, x_label, y_label);
    svg.push_str("</svg>\n");
    fs::write(path, svg)
}

pub fn bars(
    path: &Path,
    title: &str,
    x_label: &str,
    edges: &[f64],
    counts: &[u64],
) -> io::Result<()> {
    let top = counts.iter().copied().max().unwrap_or(0).max(1) as f64;
    let frame = Frame::new((edges[0], edges[edges.len() - 1]), (0.0, top));
    let mut svg = String::new();
    open(&mut svg, title);
    for (i, &n) in counts.iter().enumerate() {
        let x = frame.px(edges[i]);
        let w = frame.px(edges[i + 1]) - x;
        let y = frame.py(n as f64);
        let _ = writeln!(
            svg,
            r#"<rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{:.2}" fill="steelblue" stroke="white"/>"#,
            w.max(0.5),
            (H - MARGIN - y).max(0.0)
        );
    }
    axes(&mut svg, &frame, x_label, "count");
    svg.push_str("</svg>\n");
    fs::write(path, svg)
}
