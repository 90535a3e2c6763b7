//! The Dirichlet polygon of the pure cactus group action centred at the
//! root, its side pairings and vertex cycles.
//!
//! Bisectors are straight lines in the Klein model centred at the root:
//! for an orbit point `G` with hyperboloid coordinates `(t, x, y)`, the
//! points `k` closer to the root than to `G` satisfy `x kx + y ky <= t - 1`.

use std::f64::consts::PI;

use super::geometry::{angle_at, HIso, HPoint};
use super::realize::RealizedTess;
use crate::error::{Error, Result};
use crate::pure::{element_key, reference_element, GLetter, GWord, PureElement};
use crate::split::SplitForm;
use crate::tess::{TessBall, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideKind {
    /// Both endpoints are tessellation vertices joined by an edge.
    Edge,
    /// Both endpoints are opposite corners of one square.
    Diagonal,
    /// Both endpoints are tessellation vertices, neither adjacent nor
    /// opposite in a square.
    Chord,
    /// At least one endpoint is not a tessellation vertex.
    Free,
}

impl SideKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SideKind::Edge => "edge",
            SideKind::Diagonal => "diagonal",
            SideKind::Chord => "chord",
            SideKind::Free => "free",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Corner {
    pub point: HPoint,
    pub angle: f64,
    /// The tessellation vertex at this corner, if there is one.
    pub vertex: Option<VertexId>,
}

#[derive(Clone, Debug)]
pub struct Side {
    /// Index into [`DirichletDomain::elements`] of the element whose
    /// bisector carries this side.
    pub element: usize,
    /// Runs from corner `i` to corner `i + 1` for side `i`.
    pub kind: SideKind,
}

#[derive(Clone, Debug)]
pub struct Element {
    pub form: SplitForm,
    pub vertex: VertexId,
    /// `g_i` or `g_i^{-1}` when the element is one of the named ones.
    pub name: Option<GLetter>,
    pub iso: HIso,
}

#[derive(Clone, Debug)]
pub struct VertexCycle {
    pub corners: Vec<usize>,
    pub angles: Vec<f64>,
    pub angle_sum: f64,
    /// Product `T_k ... T_1` of the pairings applied along the cycle.
    pub word: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct DirichletDomain {
    pub center: HPoint,
    pub elements: Vec<Element>,
    pub corners: Vec<Corner>,
    pub sides: Vec<Side>,
    /// `pairing[i]` is the side that the pairing of side `i` maps it onto.
    pub pairing: Vec<usize>,
}

impl DirichletDomain {
    pub fn angle_sum(&self) -> f64 {
        self.corners.iter().map(|c| c.angle).sum()
    }

    pub fn side_endpoints(&self, i: usize) -> (HPoint, HPoint) {
        let n = self.corners.len();
        (self.corners[i].point, self.corners[(i + 1) % n].point)
    }

    pub fn count_kind(&self, kind: SideKind) -> usize {
        self.sides.iter().filter(|s| s.kind == kind).count()
    }

    /// Abstract word of a cycle when every pairing element is named.
    pub fn cycle_gword(&self, c: &VertexCycle) -> Option<GWord> {
        c.word
            .iter()
            .map(|&e| self.elements[e].name)
            .collect::<Option<Vec<_>>>()
            .map(GWord)
    }
}

pub(crate) fn element_name(ball: &TessBall, key: (VertexId, bool)) -> Result<Option<GLetter>> {
    for index in 1..=10u8 {
        for inverse in [false, true] {
            let w = reference_element(index);
            let w = if inverse { w.inverse() } else { w };
            if element_key(ball, &w)? == key {
                return Ok(Some(GLetter { index, inverse }));
            }
        }
    }
    Ok(None)
}

/// Intersects the half-planes closer to the root than to each orbit point
/// `g·e` for the given elements.
pub fn dirichlet(
    ball: &TessBall,
    rt: &RealizedTess,
    pures: &[PureElement],
    tol: f64,
) -> Result<DirichletDomain> {
    let root = ball.root();
    let mut elements = Vec::new();
    for p in pures {
        if p.vertex == root && !p.form.flip {
            continue;
        }
        elements.push(Element {
            form: p.form.clone(),
            vertex: p.vertex,
            name: element_name(ball, (p.vertex, p.form.flip))?,
            iso: rt.element_isometry(ball, &p.form, tol)?,
        });
    }
    if elements.len() < 3 {
        return Err(Error::Geometry("fewer than three orbit points".into()));
    }
    let lines: Vec<([f64; 2], f64)> = elements
        .iter()
        .map(|e| {
            let [t, x, y] = rt.pos(e.vertex).hyperboloid();
            ([x, y], t - 1.0)
        })
        .collect();

    // Candidate corners: pairwise intersections inside every half-plane.
    let mut raw: Vec<((f64, f64), Vec<usize>)> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let ([a, b], e) = lines[i];
            let ([c, d], f) = lines[j];
            let det = a * d - b * c;
            if det.abs() < 1e-12 {
                continue;
            }
            let kx = (e * d - b * f) / det;
            let ky = (a * f - e * c) / det;
            if kx * kx + ky * ky >= 1.0 {
                continue;
            }
            let slack = |l: &([f64; 2], f64)| l.1 - (l.0[0] * kx + l.0[1] * ky);
            if lines.iter().all(|l| slack(l) > -tol) {
                let active: Vec<usize> = (0..lines.len())
                    .filter(|&m| slack(&lines[m]).abs() <= tol)
                    .collect();
                raw.push(((kx, ky), active));
            }
        }
    }
    let mut merged: Vec<((f64, f64), Vec<usize>)> = Vec::new();
    for (p, act) in raw {
        match merged
            .iter_mut()
            .find(|(q, _)| (q.0 - p.0).hypot(q.1 - p.1) < tol.sqrt() * 1e-2)
        {
            Some((_, a)) => {
                for m in act {
                    if !a.contains(&m) {
                        a.push(m);
                    }
                }
            }
            None => merged.push((p, act)),
        }
    }
    merged.sort_by(|a, b| {
        let ta = a.0 .1.atan2(a.0 .0);
        let tb = b.0 .1.atan2(b.0 .0);
        ta.total_cmp(&tb)
    });
    let n = merged.len();
    if n < 3 {
        return Err(Error::Geometry(format!("polygon has only {n} corners")));
    }

    let points: Vec<HPoint> = merged
        .iter()
        .map(|((kx, ky), _)| HPoint::from_klein(*kx, *ky))
        .collect();
    let mut sides = Vec::with_capacity(n);
    for i in 0..n {
        let a = &merged[i].1;
        let b = &merged[(i + 1) % n].1;
        let shared: Vec<usize> = a.iter().copied().filter(|m| b.contains(m)).collect();
        if shared.len() != 1 {
            return Err(Error::Geometry(format!(
                "side {i} lies on {} bisectors",
                shared.len()
            )));
        }
        sides.push(shared[0]);
    }

    let corners: Vec<Corner> = (0..n)
        .map(|i| {
            let p = points[i];
            Corner {
                point: p,
                angle: angle_at(p, points[(i + n - 1) % n], points[(i + 1) % n]),
                vertex: nearest_vertex(ball, rt, p, 1e-6),
            }
        })
        .collect();
    let sides: Vec<Side> = sides
        .into_iter()
        .enumerate()
        .map(|(i, element)| Side {
            element,
            kind: classify(ball, corners[i].vertex, corners[(i + 1) % n].vertex),
        })
        .collect();

    let mut pairing = Vec::with_capacity(n);
    for (i, s) in sides.iter().enumerate() {
        let inv = elements[s.element].form.inverse()?;
        let key = (ball.evaluate(&inv.w)?, inv.flip);
        let target = sides
            .iter()
            .position(|t| (elements[t.element].vertex, elements[t.element].form.flip) == key)
            .ok_or_else(|| Error::Geometry(format!("side {i} has no partner side")))?;
        pairing.push(target);
    }

    Ok(DirichletDomain {
        center: rt.pos(root),
        elements,
        corners,
        sides,
        pairing,
    })
}

fn nearest_vertex(ball: &TessBall, rt: &RealizedTess, p: HPoint, tol: f64) -> Option<VertexId> {
    ball.vertices().find(|&v| rt.pos(v).dist(p) < tol)
}

fn classify(ball: &TessBall, a: Option<VertexId>, b: Option<VertexId>) -> SideKind {
    let (Some(a), Some(b)) = (a, b) else {
        return SideKind::Free;
    };
    if ball.neighbors(a).any(|(_, u)| u == b) {
        return SideKind::Edge;
    }
    let opposite = ball.squares_at(a).any(|sq| {
        let i = sq.corners.iter().position(|&c| c == a).expect("square at a");
        sq.corners[(i + 2) % 4] == b
    });
    if opposite {
        SideKind::Diagonal
    } else {
        SideKind::Chord
    }
}

#[derive(Clone, Debug)]
pub struct PoincareReport {
    /// Sides whose pairing does not map endpoints onto the partner's endpoints.
    pub bad_pairings: Vec<usize>,
    /// The pairing permutation is an involution without fixed points.
    pub pairing_involutive: bool,
    pub cycles: Vec<VertexCycle>,
    /// Cycles whose composed pairing is not the identity isometry.
    pub nontrivial_cycles: Vec<usize>,
}

impl PoincareReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.bad_pairings.is_empty()
            && self.pairing_involutive
            && self.nontrivial_cycles.is_empty()
            && self
                .cycles
                .iter()
                .all(|c| (c.angle_sum - 2.0 * PI).abs() <= tol)
    }
}

/// Side pairings and vertex cycles of the polygon.
pub fn poincare_check(d: &DirichletDomain, tol: f64) -> Result<PoincareReport> {
    let n = d.sides.len();
    let close = |p: HPoint, q: HPoint| p.dist(q) < tol;
    // side i is paired by the inverse of its own element, which is the element of side pairing[i]
    let pair_iso = |i: usize| d.elements[d.sides[d.pairing[i]].element].iso;

    let mut bad_pairings = Vec::new();
    for i in 0..n {
        let t = pair_iso(i);
        let (a, b) = d.side_endpoints(i);
        let (c, e) = d.side_endpoints(d.pairing[i]);
        let (ta, tb) = (t.apply(a), t.apply(b));
        if !((close(ta, c) && close(tb, e)) || (close(ta, e) && close(tb, c))) {
            bad_pairings.push(i);
        }
    }
    let pairing_involutive = (0..n).all(|i| d.pairing[i] != i && d.pairing[d.pairing[i]] == i);

    let mut seen = vec![[false; 2]; n];
    let mut cycles = Vec::new();
    let mut nontrivial_cycles = Vec::new();
    for start in 0..n {
        // each corner c is the end of side c-1 and the start of side c
        for which in 0..2 {
            if seen[start][which] {
                continue;
            }
            let mut corner = start;
            let mut side = if which == 0 { (start + n - 1) % n } else { start };
            let mut corners = Vec::new();
            let mut angles = Vec::new();
            let mut word = Vec::new();
            let mut composed = HIso::IDENTITY;
            loop {
                let slot = usize::from(side == corner);
                if seen[corner][slot] {
                    break;
                }
                seen[corner][slot] = true;
                corners.push(corner);
                angles.push(d.corners[corner].angle);
                let t = pair_iso(side);
                word.push(d.sides[d.pairing[side]].element);
                composed = t.compose(&composed);
                let image = t.apply(d.corners[corner].point);
                let partner = d.pairing[side];
                let (c0, c1) = (partner, (partner + 1) % n);
                let next = if close(image, d.corners[c0].point) {
                    c0
                } else if close(image, d.corners[c1].point) {
                    c1
                } else {
                    return Err(Error::Geometry(format!(
                        "pairing of side {side} sends corner {corner} off its partner"
                    )));
                };
                // leave the new corner along its other side
                let other = if next == partner { (next + n - 1) % n } else { next };
                seen[next][usize::from(partner == next)] = true;
                corner = next;
                side = other;
                if corners.len() > n {
                    return Err(Error::Geometry("vertex cycle does not close".into()));
                }
            }
            word.reverse();
            let angle_sum = angles.iter().sum();
            if !composed.is_identity(tol.max(1e-9)) {
                nontrivial_cycles.push(cycles.len());
            }
            cycles.push(VertexCycle {
                corners,
                angles,
                angle_sum,
                word,
            });
        }
    }
    Ok(PoincareReport {
        bad_pairings,
        pairing_involutive,
        cycles,
        nontrivial_cycles,
    })
}

/// Orbit points of further elements that would cut into the polygon.
pub fn interfering(d: &DirichletDomain, rt: &RealizedTess, extra: &[PureElement], tol: f64) -> Vec<SplitForm> {
    let mut out = Vec::new();
    for e in extra {
        if e.displacement == 0 {
            continue;
        }
        let [t, x, y] = rt.pos(e.vertex).hyperboloid();
        let cuts = d.corners.iter().any(|c| {
            let (kx, ky) = c.point.klein();
            x * kx + y * ky > t - 1.0 + tol
        });
        if cuts {
            out.push(e.form.clone());
        }
    }
    out
}
