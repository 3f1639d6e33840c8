//! Minimal SVG line plots: stacked panels, polyline series, axes and a
//! text legend.

use std::fmt::Write as _;

use crate::table::fmt_num;

const WIDTH: f64 = 720.0;
const PANEL_HEIGHT: f64 = 300.0;
const MARGIN: f64 = 60.0;
const COLORS: [&str; 6] = ["#000000", "#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e"];

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
    pub dashed: bool,
}

pub struct Panel {
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
}

fn bounds(panel: &Panel) -> (f64, f64, f64, f64) {
    let finite = panel
        .series
        .iter()
        .flat_map(|s| s.points.iter())
        .filter(|(x, y)| x.is_finite() && y.is_finite());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in finite {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if !x0.is_finite() {
        return (0.0, 1.0, 0.0, 1.0);
    }
    if x1 == x0 {
        x1 = x0 + 1.0;
    }
    if y1 == y0 {
        y1 = y0 + 1.0;
    }
    (x0, x1, y0, y1)
}

fn coord(v: f64) -> String {
    format!("{v:.2}")
}

/// Renders the panels top to bottom into one SVG document.
pub fn render(title: &str, panels: &[Panel]) -> String {
    let height = PANEL_HEIGHT * panels.len().max(1) as f64 + 30.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#,
        w = WIDTH,
        h = height
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<text x="{}" y="20" text-anchor="middle" font-size="14">{}</text>"#, WIDTH / 2.0, escape(title));

    for (p, panel) in panels.iter().enumerate() {
        let top = 30.0 + p as f64 * PANEL_HEIGHT;
        let (left, right) = (MARGIN, WIDTH - 20.0);
        let (upper, lower) = (top + 10.0, top + PANEL_HEIGHT - 40.0);
        let (x0, x1, y0, y1) = bounds(panel);
        let sx = |x: f64| left + (x - x0) / (x1 - x0) * (right - left);
        let sy = |y: f64| lower - (y - y0) / (y1 - y0) * (lower - upper);

        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            coord(left),
            coord(upper),
            coord(right - left),
            coord(lower - upper)
        );
        if y0 < 0.0 && y1 > 0.0 {
            let _ = writeln!(
                out,
                r##"<line x1="{}" y1="{z}" x2="{}" y2="{z}" stroke="#999999" stroke-width="0.5"/>"##,
                coord(left),
                coord(right),
                z = coord(sy(0.0))
            );
        }
        for (label, x, y, anchor) in [
            (fmt_num(x0), left, lower + 15.0, "start"),
            (fmt_num(x1), right, lower + 15.0, "end"),
            (fmt_num(y0), left - 4.0, lower, "end"),
            (fmt_num(y1), left - 4.0, upper + 10.0, "end"),
        ] {
            let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="{anchor}">{label}</text>"#, coord(x), coord(y));
        }
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            coord((left + right) / 2.0),
            coord(lower + 30.0),
            escape(&panel.x_label)
        );
        let _ = writeln!(
            out,
            r#"<text x="15" y="{}" text-anchor="middle" transform="rotate(-90 15 {})">{}</text>"#,
            coord((upper + lower) / 2.0),
            coord((upper + lower) / 2.0),
            escape(&panel.y_label)
        );

        for (i, s) in panel.series.iter().enumerate() {
            let color = COLORS[i % COLORS.len()];
            let dash = if s.dashed { r#" stroke-dasharray="6 4""# } else { "" };
            // Non-finite values break the line into separate segments.
            let mut segments: Vec<Vec<String>> = vec![Vec::new()];
            for &(x, y) in &s.points {
                if x.is_finite() && y.is_finite() {
                    segments.last_mut().unwrap().push(format!("{},{}", coord(sx(x)), coord(sy(y))));
                } else if !segments.last().unwrap().is_empty() {
                    segments.push(Vec::new());
                }
            }
            for seg in segments.iter().filter(|s| !s.is_empty()) {
                let _ = writeln!(
                    out,
                    r#"<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{}"/>"#,
                    seg.join(" ")
                );
            }
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" fill="{color}" text-anchor="end">{}</text>"#,
                coord(right - 6.0),
                coord(upper + 16.0 + 14.0 * i as f64),
                escape(&s.label)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_series_and_breaks_on_gaps() {
        let panel = Panel {
            x_label: "k".into(),
            y_label: "S".into(),
            series: vec![
                Series {
                    label: "a<b".into(),
                    points: vec![(0.0, 0.0), (1.0, 1.0), (2.0, f64::INFINITY), (3.0, 0.5), (4.0, 0.2)],
                    dashed: true,
                },
                Series {
                    label: "empty".into(),
                    points: vec![],
                    dashed: false,
                },
            ],
        };
        let svg = render("t", &[panel]);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("a&lt;b"));
    }
}
