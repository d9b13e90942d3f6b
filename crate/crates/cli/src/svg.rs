//! Self-contained SVG plots. Every data row becomes exactly one `<circle>`.

use std::fmt::Write;

use chtri::{ScanRow, Verdict};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 50.0;

pub fn verdict_color(v: Verdict) -> &'static str {
    match v {
        Verdict::Discrete => "#1f4fd1",
        Verdict::NonDiscrete => "#d12a1f",
        Verdict::Unknown => "#9a9a9a",
    }
}

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
}

impl Frame {
    fn new(xs: impl Iterator<Item = f64> + Clone, ys: impl Iterator<Item = f64> + Clone) -> Self {
        let span = |it: &mut dyn Iterator<Item = f64>| {
            let (lo, hi) = it.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
            if !lo.is_finite() {
                (0.0, 1.0)
            } else if hi - lo < 1e-12 {
                (lo - 0.5, hi + 0.5)
            } else {
                (lo, hi)
            }
        };
        Frame { x: span(&mut xs.clone()), y: span(&mut ys.clone()) }
    }

    /// Widens the shorter axis so both use the same scale.
    fn equal_aspect(mut self) -> Self {
        let (w, h) = (WIDTH - 2.0 * MARGIN, HEIGHT - 2.0 * MARGIN);
        let scale = ((self.x.1 - self.x.0) / w).max((self.y.1 - self.y.0) / h);
        let (cx, cy) = ((self.x.0 + self.x.1) / 2.0, (self.y.0 + self.y.1) / 2.0);
        self.x = (cx - scale * w / 2.0, cx + scale * w / 2.0);
        self.y = (cy - scale * h / 2.0, cy + scale * h / 2.0);
        self
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x.0) / (self.x.1 - self.x.0) * (WIDTH - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - (y - self.y.0) / (self.y.1 - self.y.0) * (HEIGHT - 2.0 * MARGIN)
    }
}

fn header(out: &mut String, title: &str, frame: &Frame, x_label: &str, y_label: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, "<title>{title}</title>");
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (l, r, t, b) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(out, r#"<path d="M{l} {t} L{l} {b} L{r} {b}" fill="none" stroke="black"/>"#);
    let _ = writeln!(out, r#"<text x="{l}" y="{:.1}" font-size="12">{:.3}</text>"#, b + 16.0, frame.x.0);
    let _ =
        writeln!(out, r#"<text x="{r}" y="{:.1}" font-size="12" text-anchor="end">{:.3}</text>"#, b + 16.0, frame.x.1);
    let _ =
        writeln!(out, r#"<text x="{:.1}" y="{b}" font-size="12" text-anchor="end">{:.3}</text>"#, l - 4.0, frame.y.0);
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" font-size="12" text-anchor="end">{:.3}</text>"#,
        l - 4.0,
        t + 12.0,
        frame.y.1
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" font-size="13" text-anchor="middle">{x_label}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        out,
        r#"<text x="14" y="{:.1}" font-size="13" text-anchor="middle" transform="rotate(-90 14 {:.1})">{y_label}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
}

/// Verdict map: `alpha` across, `m` up. Blue discrete, red non-discrete, grey unknown.
pub fn scan_svg(rows: &[ScanRow]) -> String {
    let frame = Frame::new(rows.iter().map(|r| r.alpha), rows.iter().map(|r| r.m));
    let mut out = String::new();
    header(&mut out, "verdict by (alpha, m)", &frame, "alpha", "m");
    for row in rows {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{}"/>"#,
            frame.px(row.alpha),
            frame.py(row.m),
            verdict_color(row.verdict)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Scatter of planar orbit points, equal axis scales.
pub fn orbit_svg(points: &[(f64, f64)]) -> String {
    let frame = Frame::new(points.iter().map(|p| p.0), points.iter().map(|p| p.1)).equal_aspect();
    let mut out = String::new();
    header(&mut out, "orbit of the origin", &frame, "Re", "Im");
    for &(x, y) in points {
        let _ = writeln!(out, r##"<circle cx="{:.2}" cy="{:.2}" r="2" fill="#222"/>"##, frame.px(x), frame.py(y));
    }
    out.push_str("</svg>\n");
    out
}
