//! Poincaré disk drawings of the tessellation and a fundamental polygon.

use std::fmt::Write;

use super::dirichlet::DirichletDomain;
use super::geometry::HPoint;
use super::realize::RealizedTess;
use crate::tess::TessBall;

const SIZE: f64 = 1000.0;
const RADIUS: f64 = 480.0;

fn screen(p: HPoint) -> (f64, f64) {
    let (u, v) = p.to_disk();
    (SIZE / 2.0 + RADIUS * u, SIZE / 2.0 - RADIUS * v)
}

/// Path command continuing from `p` along the geodesic to `q`.
fn arc_to(p: HPoint, q: HPoint) -> String {
    let (pu, pv) = p.to_disk();
    let (qu, qv) = q.to_disk();
    let (x, y) = screen(q);
    let det = pu * qv - pv * qu;
    if det.abs() < 1e-9 {
        return format!("L {x:.3} {y:.3}");
    }
    // center c of the circle through p and q orthogonal to the boundary:
    // c.p = (1 + |p|^2) / 2 and likewise for q
    let a = (1.0 + pu * pu + pv * pv) / 2.0;
    let b = (1.0 + qu * qu + qv * qv) / 2.0;
    let cu = (a * qv - b * pv) / det;
    let cv = (pu * b - qu * a) / det;
    let r = ((cu - pu).powi(2) + (cv - pv).powi(2)).sqrt() * RADIUS;
    // the arc bows towards the origin
    let sweep = if det > 0.0 { 1 } else { 0 };
    format!("A {r:.3} {r:.3} 0 0 {sweep} {x:.3} {y:.3}")
}

fn move_to(p: HPoint) -> String {
    let (x, y) = screen(p);
    format!("M {x:.3} {y:.3}")
}

/// Edges out of every vertex at level at most `depth`, the vertices
/// themselves, and the outline of `domain` when given.
pub fn render_svg(ball: &TessBall, rt: &RealizedTess, domain: Option<&DirichletDomain>, depth: u32) -> String {
    let mut out = String::new();
    let c = SIZE / 2.0;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<circle class="disk" cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1"/>"#
    )
    .unwrap();
    let shown: Vec<_> = ball.vertices().filter(|&v| ball.level(v) <= depth).collect();
    writeln!(out, r#"<g class="edges" fill="none" stroke="gray" stroke-width="1">"#).unwrap();
    for &v in &shown {
        for (_, u) in ball.neighbors(v) {
            if ball.level(u) <= depth && u < v {
                continue;
            }
            let (p, q) = (rt.pos(v), rt.pos(u));
            writeln!(out, r#"<path d="{} {}"/>"#, move_to(p), arc_to(p, q)).unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g class="vertices" fill="black">"#).unwrap();
    for &v in &shown {
        let (x, y) = screen(rt.pos(v));
        writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if let Some(d) = domain {
        let mut path = move_to(d.corners[0].point);
        for i in 0..d.sides.len() {
            let (p, q) = d.side_endpoints(i);
            path.push(' ');
            path.push_str(&arc_to(p, q));
        }
        path.push_str(" Z");
        writeln!(
            out,
            r#"<path class="domain" d="{path}" fill="red" fill-opacity="0.15" stroke="red" stroke-width="2"/>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp::realize;
    use crate::presentation::Presentation;

    fn setup() -> (TessBall, RealizedTess) {
        let b = TessBall::build(&Presentation::named("j4-23").unwrap(), 4).unwrap();
        let rt = realize(&b, 1e-9).unwrap();
        (b, rt)
    }

    #[test]
    fn depth_zero_is_a_star() {
        let (b, rt) = setup();
        let s = render_svg(&b, &rt, None, 0);
        assert_eq!(s.matches("<path").count(), 5);
        assert_eq!(s.matches(r#"r="3""#).count(), 1);
        assert!(s.contains(r#"viewBox="0 0 1000 1000""#));
    }

    #[test]
    fn depth_two_vertices_and_determinism() {
        let (b, rt) = setup();
        let s = render_svg(&b, &rt, None, 2);
        assert_eq!(s.matches(r#"r="3""#).count(), 21);
        assert_eq!(s, render_svg(&b, &rt, None, 2));
    }
}
