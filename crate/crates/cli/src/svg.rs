//! Static SVG rendering of a body, for inspection only.

use std::fmt::Write;

use elastica_core::{ConvexBody, Point};

use crate::report::sig9;

/// Draws `body` as a closed path, optionally with a circle (centre,
/// radius) and marked points. The y axis points up.
pub fn render(body: &ConvexBody, circle: Option<(Point, f64)>, marks: &[Point]) -> String {
    let v = body.vertices();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in v {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let pad = 0.05 * (x1 - x0).max(y1 - y0);
    let (w, h) = (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let stroke = sig9(0.004 * w.max(h));
    // flip y: screen row = y1 + pad − y
    let sx = |x: f64| sig9(x - x0 + pad);
    let sy = |y: f64| sig9(y1 + pad - y);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" width="600" height="{}">"#,
        sig9(w),
        sig9(h),
        (600.0 * h / w).round()
    );
    let mut d = String::new();
    for (i, p) in v.iter().enumerate() {
        let _ = write!(d, "{}{} {} ", if i == 0 { 'M' } else { 'L' }, sx(p.x), sy(p.y));
    }
    d.push('Z');
    let _ = writeln!(s, r#"  <path d="{d}" fill="none" stroke="black" stroke-width="{stroke}"/>"#);
    if let Some((c, r)) = circle {
        let _ = writeln!(
            s,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="steelblue" stroke-width="{stroke}"/>"#,
            sx(c.x),
            sy(c.y),
            sig9(r)
        );
    }
    for m in marks {
        let _ =
            writeln!(s, r#"  <circle cx="{}" cy="{}" r="{}" fill="crimson"/>"#, sx(m.x), sy(m.y), sig9(3.0 * stroke));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_path_and_circle() {
        let body = ConvexBody::new(vec![
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap();
        let s = render(&body, Some((Point::new(0.0, 0.0), 1.0)), &[Point::new(0.0, 1.0)]);
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
        assert!(s.contains("M0.1 2.1 L2.1 2.1 L2.1 0.1 L0.1 0.1 Z"), "{s}");
        assert_eq!(s.matches("<circle").count(), 2);
    }
}
