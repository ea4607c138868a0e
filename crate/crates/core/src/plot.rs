//! Static SVG 1.1 renderings of documents.
//!
//! Euclidean content is drawn in the plane; hyperbolic content in the
//! Beltrami–Klein disk, where geodesics are straight chords. Hyperbolic disks
//! are sampled at 64 boundary points. Rendering only reads its inputs.

use crate::arrangement::{enclosing_frame, enumerate_cells, sign_vector, OrientedLine, SignVector};
use crate::document::{Document, Payload};
use crate::error::Result;
use crate::extract::bisector;
use crate::graph::{LabeledGraph, Role};
use crate::hypgeo::HPoint;
use crate::plane::{min_enclosing_disk, Point2};
use crate::witness::{threshold_edges, Points, Realization};
use std::fmt::Write;

const SIZE: f64 = 600.0;
const PAD: f64 = 30.0;
pub const CIRCLE_SAMPLES: usize = 64;

/// Minimal SVG writer over a square world window.
struct Canvas {
    body: String,
    center: Point2,
    half: f64,
}

impl Canvas {
    fn new(center: Point2, half: f64) -> Self {
        Self { body: String::new(), center, half: half.max(1e-9) }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        let s = (SIZE - 2.0 * PAD) / (2.0 * self.half);
        (
            SIZE / 2.0 + (p.x - self.center.x) * s,
            SIZE / 2.0 - (p.y - self.center.y) * s,
        )
    }

    fn scale(&self, r: f64) -> f64 {
        r * (SIZE - 2.0 * PAD) / (2.0 * self.half)
    }

    fn segment(&mut self, a: Point2, b: Point2, style: &str) {
        let ((x1, y1), (x2, y2)) = (self.map(a), self.map(b));
        let _ = writeln!(self.body, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" {style}/>"#);
    }

    fn circle(&mut self, c: Point2, r_px: f64, style: &str) {
        let (x, y) = self.map(c);
        let _ = writeln!(self.body, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r_px:.2}" {style}/>"#);
    }

    fn polygon(&mut self, pts: &[Point2], style: &str) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(self.body, r#"<polygon points="{}" {style}/>"#, coords.join(" "));
    }

    fn text(&mut self, p: Point2, s: &str) {
        let (x, y) = self.map(p);
        let _ = writeln!(
            self.body,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="11">{}</text>"#,
            x + 4.0,
            y - 4.0,
            escape(s)
        );
    }

    fn finish(self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Clips a line to the disk `|p − c| ≤ r`.
fn clip_to_disk(l: &OrientedLine, c: Point2, r: f64) -> Option<(Point2, Point2)> {
    let dist = l.eval(c);
    if dist.abs() >= r {
        return None;
    }
    let foot = c - l.normal() * dist;
    let half = (r * r - dist * dist).sqrt();
    Some((foot - l.direction() * half, foot + l.direction() * half))
}

fn draw_oriented_line(canvas: &mut Canvas, l: &OrientedLine, c: Point2, r: f64, label: &str) {
    let Some((p, q)) = clip_to_disk(l, c, r) else { return };
    canvas.segment(p, q, r##"stroke="#1f4e9c" stroke-width="1.5""##);
    // Tick on the positive side near the far end.
    let tip = p + (q - p) * 0.9;
    canvas.segment(tip, tip + l.normal() * (0.04 * r), r##"stroke="#1f4e9c" stroke-width="1.5""##);
    canvas.text(q, label);
}

fn render_arrangement(lines: &[OrientedLine]) -> Result<String> {
    let frame = enclosing_frame(lines)?;
    let view = 1.6 * frame.radius;
    let mut canvas = Canvas::new(frame.center, view);
    for (i, l) in lines.iter().enumerate() {
        draw_oriented_line(&mut canvas, l, frame.center, view, &format!("l{}", i + 1));
    }
    if let Ok(cells) = enumerate_cells(lines) {
        for (v, p) in &cells.representatives {
            let at = if p.dist(frame.center) < view { Some(*p) } else { label_on_rim(lines, v, frame.center, view) };
            if let Some(at) = at {
                canvas.circle(at, 2.0, r##"fill="#888""##);
                canvas.text(at, &v.to_string());
            }
        }
    }
    Ok(canvas.finish())
}

/// Unbounded cells cross the view circle in one arc; label the arc's middle.
fn label_on_rim(lines: &[OrientedLine], cell: &SignVector, center: Point2, view: f64) -> Option<Point2> {
    const SAMPLES: usize = 720;
    let at = |k: usize| {
        let phi = std::f64::consts::TAU * k as f64 / SAMPLES as f64;
        center + Point2::new(phi.cos(), phi.sin()) * (0.85 * view)
    };
    let hits: Vec<bool> = (0..SAMPLES).map(|k| &sign_vector(lines, at(k)) == cell).collect();
    // Start just after a miss so the arc is contiguous in index order.
    let start = (0..SAMPLES).find(|&k| !hits[k])?;
    let arc: Vec<usize> = (1..=SAMPLES).map(|k| (start + k) % SAMPLES).filter(|&k| hits[k]).collect();
    arc.get(arc.len() / 2).map(|&k| at(k))
}

fn render_lines_of_text(title: &str, rows: impl Iterator<Item = String>) -> String {
    let mut canvas = Canvas::new(Point2::ORIGIN, 1.0);
    canvas.text(Point2::new(-1.0, 1.0), title);
    for (k, row) in rows.enumerate() {
        canvas.text(Point2::new(-1.0, 0.93 - 0.06 * k as f64), &row);
    }
    canvas.finish()
}

fn render_graph(g: &LabeledGraph) -> String {
    let n = g.vertex_count().max(1);
    let pos: Vec<Point2> = (0..n)
        .map(|k| {
            let phi = std::f64::consts::TAU * k as f64 / n as f64;
            Point2::new(phi.cos(), phi.sin())
        })
        .collect();
    let mut canvas = Canvas::new(Point2::ORIGIN, 1.2);
    for (u, v) in g.edges() {
        canvas.segment(pos[u], pos[v], r##"stroke="#999" stroke-width="0.8""##);
    }
    for (v, role) in g.roles().iter().enumerate() {
        canvas.circle(pos[v], 4.0, role_fill(*role));
        let label = if *role == Role::Plain { v.to_string() } else { role.to_string() };
        canvas.text(pos[v], &label);
    }
    canvas.finish()
}

fn role_fill(role: Role) -> &'static str {
    match role {
        Role::A(_) => r##"fill="#c0392b""##,
        Role::B(_) => r##"fill="#2471a3""##,
        Role::C(_) => r##"fill="#229954""##,
        Role::Plain => r##"fill="#333""##,
    }
}

fn render_euclidean(points: &[Point2], threshold: Option<f64>, graph: Option<&LabeledGraph>) -> Result<String> {
    let (c, r) = min_enclosing_disk(points);
    let pad = threshold.unwrap_or(0.0) * 0.5;
    let mut canvas = Canvas::new(c, (r + pad).max(1e-6) * 1.1);
    let pts = Points::Euclidean(points.to_vec());
    if let Some(t) = threshold {
        for p in points {
            canvas.circle(*p, canvas.scale(0.5 * t), r##"fill="#5dade2" fill-opacity="0.12" stroke="#5dade2""##);
        }
        for (u, v) in threshold_edges(&pts, t)? {
            canvas.segment(points[u], points[v], r##"stroke="#555" stroke-width="1""##);
        }
    }
    for (v, p) in points.iter().enumerate() {
        let role = graph.map_or(Role::Plain, |g| g.role(v));
        canvas.circle(*p, 3.5, role_fill(role));
        if role != Role::Plain {
            canvas.text(*p, &role.to_string());
        }
    }
    Ok(canvas.finish())
}

fn render_hyperbolic(points: &[HPoint], threshold: Option<f64>, graph: Option<&LabeledGraph>) -> Result<String> {
    let mut canvas = Canvas::new(Point2::ORIGIN, 1.05);
    canvas.circle(Point2::ORIGIN, canvas.scale(1.0), r##"fill="none" stroke="black" stroke-width="1.2""##);
    let klein = |p: &HPoint| {
        let k = p.to_klein();
        Point2::new(k.x(), k.y())
    };
    if let Some(t) = threshold {
        for p in points {
            let ring: Vec<Point2> = (0..CIRCLE_SAMPLES)
                .map(|k| klein(&p.offset(0.5 * t, std::f64::consts::TAU * k as f64 / CIRCLE_SAMPLES as f64)))
                .collect();
            canvas.polygon(&ring, r##"fill="#5dade2" fill-opacity="0.12" stroke="#5dade2""##);
        }
        let pts = Points::Hyperboloid(points.to_vec());
        for (u, v) in threshold_edges(&pts, t)? {
            canvas.segment(klein(&points[u]), klein(&points[v]), r##"stroke="#555" stroke-width="1""##);
        }
    }
    if let Some(g) = graph {
        if let Some((n, _)) = g.gadget_shape() {
            let idx = g.role_index();
            for i in 0..n {
                if let Ok(b) = bisector(&points[idx[&Role::A(i)]], &points[idx[&Role::B(i)]]) {
                    draw_oriented_line(&mut canvas, &b.klein_line(), Point2::ORIGIN, 1.0, &format!("l{}", i + 1));
                }
            }
        }
    }
    for (v, p) in points.iter().enumerate() {
        let role = graph.map_or(Role::Plain, |g| g.role(v));
        canvas.circle(klein(p), 3.5, role_fill(role));
        if role != Role::Plain {
            canvas.text(klein(p), &role.to_string());
        }
    }
    Ok(canvas.finish())
}

/// Renders a realization, optionally with vertex roles and (for hyperbolic
/// gadget realizations) the bisector arrangement.
pub fn render_realization(r: &Realization, graph: Option<&LabeledGraph>) -> Result<String> {
    match &r.points {
        Points::Euclidean(p) => render_euclidean(p, r.threshold, graph),
        Points::Hyperboloid(p) => render_hyperbolic(p, r.threshold, graph),
    }
}

/// SVG for any document.
pub fn render(doc: &Document, graph: Option<&LabeledGraph>) -> Result<String> {
    match &doc.payload {
        Payload::Arrangement(a) => render_arrangement(&a.lines),
        Payload::Description(d) => Ok(render_lines_of_text(
            &format!("{} lines, {} cells", d.n(), d.len()),
            d.cells().enumerate().map(|(j, v)| format!("c{}  {v}", j + 1)),
        )),
        Payload::Graph(g) => Ok(render_graph(g)),
        Payload::Realization(r) => render_realization(r, graph),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::random_simple_arrangement;
    use crate::document::ArrangementPayload;
    use crate::hypgeo::PolarPoint;

    #[test]
    fn arrangement_svg() {
        let lines = random_simple_arrangement(3, 1).unwrap();
        let svg = render(&Document::new(Payload::Arrangement(ArrangementPayload { lines })), None).unwrap();
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains(r#"version="1.1""#));
        assert_eq!(svg.matches("<text").count(), 3 + 7);
    }

    #[test]
    fn hyperbolic_circles_are_sampled() {
        let pts = vec![HPoint::ORIGIN, PolarPoint::new(1.0, 0.5).unwrap().to_hyperboloid()];
        let svg = render_realization(&Realization::hyperboloid(pts, Some(1.5)), None).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 2);
        let first = svg.lines().find(|l| l.starts_with("<polygon")).unwrap();
        assert_eq!(first.split_whitespace().filter(|w| w.contains(',')).count(), CIRCLE_SAMPLES);
    }

    #[test]
    fn clip_misses_far_line() {
        let l = OrientedLine::new(1.0, 0.0, -5.0).unwrap();
        assert!(clip_to_disk(&l, Point2::ORIGIN, 1.0).is_none());
    }
}
