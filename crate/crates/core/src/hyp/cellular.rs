//! A fundamental polygon for `PJ_4` whose sides are edges and square
//! diagonals of the tessellation.
//!
//! The polygon is found in the quotient surface: a cut graph made of a hub
//! vertex, the five square diagonals leaving it and five edges joining the
//! far ends of those diagonals is removed, and the complement (ten squares
//! and ten half squares) is unfolded into the plane around the root. A cut
//! is accepted when the unfolding is a simple polygon containing the root
//! in its interior whose side pairings are all among `g_1^{±1}, ..., g_10^{±1}`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::f64::consts::PI;

use super::dirichlet::{element_name, Corner, DirichletDomain, Element, Side, SideKind};
use super::geometry::{angle_at, HPoint};
use super::realize::RealizedTess;
use crate::complex::EdgeUse;
use crate::error::{Error, Result};
use crate::quotient::Quotient;
use crate::split::{sigma, SplitForm};
use crate::tess::{Square, TessBall, VertexId};

/// A cover square, or the half of it that contains corner `apex` when the
/// square's orbit is cut along a diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Piece {
    square: usize,
    apex: Option<u8>,
}

/// Quotient edges and square diagonals removed from the surface. A diagonal
/// is named by its face and the labels of its two ends.
#[derive(Clone, Debug)]
struct Cut {
    hub: usize,
    edges: BTreeSet<usize>,
    diagonals: BTreeMap<usize, (usize, usize)>,
}

/// Outcome of the search with the chosen polygon.
#[derive(Clone, Debug)]
pub struct CellularDomain {
    pub domain: DirichletDomain,
    /// Quotient label of the hub.
    pub hub: String,
    /// Cut graphs tried and cut graphs whose unfolding qualified.
    pub tried: usize,
    pub accepted: usize,
    /// Interior angles in units of `pi / 5`, counted from the pieces.
    pub angle_units: Vec<u32>,
}

struct Ctx<'a> {
    ball: &'a TessBall,
    rt: &'a RealizedTess,
    q: &'a Quotient,
    squares: &'a [Square],
    index: HashMap<Square, usize>,
    face: Vec<Option<usize>>,
    label: Vec<usize>,
}

impl Ctx<'_> {
    fn usable(&self, s: usize) -> bool {
        self.face[s].is_some()
            && self.squares[s]
                .corners
                .iter()
                .all(|&c| self.ball.level(c) + 1 < self.ball.radius())
    }

    fn pair(&self, a: VertexId, b: VertexId) -> (usize, usize) {
        let (x, y) = (self.label[a as usize], self.label[b as usize]);
        (x.min(y), x.max(y))
    }

    /// Corner `j` of square `s` such that the cut diagonal runs from `j`
    /// to `j + 2`.
    fn cut_corner(&self, s: usize, cut: &Cut) -> Option<usize> {
        let f = self.face[s]?;
        let want = cut.diagonals.get(&f)?;
        let c = &self.squares[s].corners;
        (0..2).find(|&j| self.pair(c[j], c[j + 2]) == *want)
    }

    fn pieces_of(&self, s: usize, cut: &Cut) -> Vec<Piece> {
        match self.cut_corner(s, cut) {
            None => vec![Piece { square: s, apex: None }],
            Some(j) => [j + 1, (j + 3) % 4]
                .map(|k| Piece {
                    square: s,
                    apex: Some(k as u8),
                })
                .to_vec(),
        }
    }

    /// Orbit of a piece: the face, and for halves the two directed edges
    /// leaving the apex.
    fn orbit(&self, p: Piece) -> Option<(usize, Option<(EdgeUse, EdgeUse)>)> {
        let sq = &self.squares[p.square];
        let f = self.face[p.square]?;
        let Some(k) = p.apex else {
            return Some((f, None));
        };
        let k = k as usize;
        let out = self.q.edge_use(self.ball, sq.corners[k], sq.labels[k])?;
        let back = self.q.edge_use(self.ball, sq.corners[k], sq.labels[(k + 3) % 4])?;
        Some((f, Some((out, back))))
    }

    /// Sides of a piece as corner index pairs of its square, with a flag
    /// marking the diagonal.
    fn sides(&self, p: Piece) -> Vec<(usize, usize, bool)> {
        match p.apex {
            None => (0..4).map(|j| (j, (j + 1) % 4, false)).collect(),
            Some(k) => {
                let k = k as usize;
                vec![
                    ((k + 3) % 4, k, false),
                    (k, (k + 1) % 4, false),
                    ((k + 1) % 4, (k + 3) % 4, true),
                ]
            }
        }
    }

    /// Angle of a piece at corner `j` of its square, in units of `pi / 5`.
    fn angle_units(&self, p: Piece, j: usize) -> u32 {
        match p.apex {
            None => 2,
            Some(k) if k as usize == j => 2,
            Some(k) if (k as usize + 2) % 4 == j => 0,
            Some(_) => 1,
        }
    }

    fn edge_orbit(&self, a: VertexId, b: VertexId) -> Option<usize> {
        let (s, _) = self.ball.neighbors(a).find(|&(_, u)| u == b)?;
        self.q.edge_use(self.ball, a, s).map(|u| u.edge)
    }

    /// The piece across side `(a, b)` of square `s`: `Some(None)` when the
    /// side is cut, `None` when the neighbour is outside the usable ball.
    fn across(&self, s: usize, a: VertexId, b: VertexId, cut: &Cut) -> Option<Option<Piece>> {
        let e = self.edge_orbit(a, b)?;
        if cut.edges.contains(&e) {
            return Some(None);
        }
        let other = self
            .ball
            .squares_at(a)
            .map(|sq| self.index[sq])
            .find(|&t| {
                let c = &self.squares[t].corners;
                let i = c.iter().position(|&x| x == a).expect("corner");
                t != s && (c[(i + 1) % 4] == b || c[(i + 3) % 4] == b)
            })?;
        if !self.usable(other) {
            return None;
        }
        let sq = &self.squares[other];
        let hit = self.pieces_of(other, cut).into_iter().find(|p| {
            self.sides(*p).iter().any(|&(x, y, diag)| {
                let (u, v) = (sq.corners[x], sq.corners[y]);
                !diag && ((u, v) == (a, b) || (u, v) == (b, a))
            })
        })?;
        Some(Some(hit))
    }
}

/// Each of the five far ends meets exactly two chosen links.
fn two_regular(ends: &BTreeSet<usize>, links: &[(usize, usize)]) -> bool {
    ends.iter().all(|&x| {
        links
            .iter()
            .map(|&(a, b)| usize::from(a == x) + usize::from(b == x))
            .sum::<usize>()
            == 2
    })
}

fn choose5<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << items.len()) {
        if mask.count_ones() == 5 {
            out.push(
                (0..items.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| items[i].clone())
                    .collect(),
            );
        }
    }
    out
}

/// Cut graphs with a hub of degree five whose other five vertices have
/// degree three: either five diagonals leave the hub and five edges join
/// their far ends, or five edges leave it and five diagonals join theirs.
fn cuts(ctx: &Ctx) -> Vec<Cut> {
    let q = &ctx.q.complex;
    let mut diagonals: Vec<(usize, (usize, usize))> = Vec::new();
    for f in 0..q.faces.len() {
        let Some(s) = (0..ctx.squares.len()).find(|&s| ctx.face[s] == Some(f) && ctx.usable(s)) else {
            continue;
        };
        let c = ctx.squares[s].corners;
        for j in 0..2 {
            let pr = ctx.pair(c[j], c[j + 2]);
            if pr.0 != pr.1 && !diagonals.contains(&(f, pr)) {
                diagonals.push((f, pr));
            }
        }
    }
    let mut out = Vec::new();
    for hub in 0..q.vertices.len() {
        let Some(v) = ctx
            .ball
            .vertices()
            .find(|&v| ctx.label[v as usize] == hub && ctx.ball.level(v) + 2 < ctx.ball.radius())
        else {
            continue;
        };
        // diagonals at the hub, then edges between their far ends
        let mut spokes = BTreeMap::new();
        let mut ends = BTreeSet::new();
        for sq in ctx.ball.squares_at(v) {
            let Some(f) = ctx.face[ctx.index[sq]] else { continue };
            let j = sq.corners.iter().position(|&c| c == v).expect("corner");
            let far = ctx.label[sq.corners[(j + 2) % 4] as usize];
            spokes.insert(f, (hub.min(far), hub.max(far)));
            ends.insert(far);
        }
        if spokes.len() == 5 && ends.len() == 5 && !ends.contains(&hub) {
            let rim: Vec<usize> = (0..q.edges.len())
                .filter(|&e| {
                    let (a, b) = q.edges[e];
                    a != b && ends.contains(&a) && ends.contains(&b)
                })
                .collect();
            for chosen in choose5(&rim) {
                let links: Vec<_> = chosen.iter().map(|&e| q.edges[e]).collect();
                if two_regular(&ends, &links) {
                    out.push(Cut {
                        hub,
                        edges: chosen.into_iter().collect(),
                        diagonals: spokes.clone(),
                    });
                }
            }
        }
        // edges at the hub, then diagonals between their far ends
        let spokes: BTreeSet<usize> = (0..q.edges.len())
            .filter(|&e| q.edges[e].0 == hub || q.edges[e].1 == hub)
            .collect();
        let ends: BTreeSet<usize> = spokes
            .iter()
            .map(|&e| if q.edges[e].0 == hub { q.edges[e].1 } else { q.edges[e].0 })
            .collect();
        if spokes.len() == 5 && ends.len() == 5 && !ends.contains(&hub) {
            let rim: Vec<(usize, (usize, usize))> = diagonals
                .iter()
                .filter(|(_, (a, b))| ends.contains(a) && ends.contains(b))
                .cloned()
                .collect();
            for chosen in choose5(&rim) {
                let faces: BTreeSet<usize> = chosen.iter().map(|d| d.0).collect();
                let links: Vec<_> = chosen.iter().map(|d| d.1).collect();
                if faces.len() == 5 && two_regular(&ends, &links) {
                    out.push(Cut {
                        hub,
                        edges: spokes.clone(),
                        diagonals: chosen.into_iter().collect(),
                    });
                }
            }
        }
    }
    out
}

/// Unfolds the complement of the cut from a piece at the root. `None`
/// when the unfolding is not one copy of each orbit.
fn unfold(ctx: &Ctx, cut: &Cut) -> Option<Vec<Piece>> {
    let root = ctx.ball.root();
    let total = ctx.q.complex.faces.len() + cut.diagonals.len();
    let start = ctx
        .ball
        .squares_at(root)
        .map(|sq| ctx.index[sq])
        .find(|&s| ctx.usable(s))?;
    let first = ctx.pieces_of(start, cut)[0];
    let mut placed = BTreeMap::new();
    placed.insert(ctx.orbit(first)?, first);
    let mut queue = VecDeque::from([first]);
    while let Some(p) = queue.pop_front() {
        let sq = ctx.squares[p.square];
        for (x, y, diag) in ctx.sides(p) {
            if diag {
                continue;
            }
            let Some(n) = ctx.across(p.square, sq.corners[x], sq.corners[y], cut)? else {
                continue;
            };
            let key = ctx.orbit(n)?;
            match placed.get(&key) {
                Some(&m) if m == n => {}
                Some(_) => return None,
                None => {
                    placed.insert(key, n);
                    queue.push_back(n);
                }
            }
        }
    }
    (placed.len() == total).then(|| placed.into_values().collect())
}

struct Outline {
    corners: Vec<VertexId>,
    diagonal: Vec<bool>,
    units: Vec<u32>,
}

/// Boundary of a union of pieces as one simple cycle, counterclockwise.
fn outline(ctx: &Ctx, pieces: &[Piece]) -> Option<Outline> {
    let mut count: HashMap<(VertexId, VertexId), (usize, bool)> = HashMap::new();
    let mut units: HashMap<VertexId, u32> = HashMap::new();
    for &p in pieces {
        let sq = ctx.squares[p.square];
        for (x, y, diag) in ctx.sides(p) {
            let (a, b) = (sq.corners[x], sq.corners[y]);
            let e = count.entry((a.min(b), a.max(b))).or_insert((0, diag));
            e.0 += 1;
        }
        for j in 0..4 {
            *units.entry(sq.corners[j]).or_insert(0) += ctx.angle_units(p, j);
        }
    }
    let boundary: Vec<((VertexId, VertexId), bool)> = count
        .into_iter()
        .filter(|(_, (n, _))| *n == 1)
        .map(|(k, (_, d))| (k, d))
        .collect();
    let mut adj: HashMap<VertexId, Vec<(VertexId, bool)>> = HashMap::new();
    for &((a, b), d) in &boundary {
        adj.entry(a).or_default().push((b, d));
        adj.entry(b).or_default().push((a, d));
    }
    if adj.values().any(|n| n.len() != 2) {
        return None;
    }
    let start = *adj.keys().min()?;
    let mut corners = vec![start];
    let mut diagonal = Vec::new();
    let (mut prev, (mut cur, d)) = (start, adj[&start][0]);
    diagonal.push(d);
    while cur != start {
        corners.push(cur);
        let n = &adj[&cur];
        let (next, d) = if n[0].0 == prev { n[1] } else { n[0] };
        diagonal.push(d);
        prev = cur;
        cur = next;
    }
    if corners.len() != boundary.len() {
        return None;
    }
    let klein: Vec<(f64, f64)> = corners.iter().map(|&v| ctx.rt.pos(v).klein()).collect();
    let area: f64 = (0..klein.len())
        .map(|i| {
            let (a, b) = (klein[i], klein[(i + 1) % klein.len()]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum();
    let (mut corners, mut diagonal) = (corners, diagonal);
    if area < 0.0 {
        corners[1..].reverse();
        diagonal.reverse();
    }
    let units = corners.iter().map(|v| units[v]).collect();
    Some(Outline {
        corners,
        diagonal,
        units,
    })
}

/// The root lies strictly inside the (Klein-straight) polygon.
fn contains_root(ctx: &Ctx, o: &Outline) -> bool {
    let (cx, cy) = ctx.rt.pos(ctx.ball.root()).klein();
    let k: Vec<(f64, f64)> = o.corners.iter().map(|&v| ctx.rt.pos(v).klein()).collect();
    (0..k.len()).all(|i| {
        let (a, b) = (k[i], k[(i + 1) % k.len()]);
        (b.0 - a.0) * (cy - a.1) - (b.1 - a.1) * (cx - a.0) > 1e-12
    }) || {
        let mut inside = false;
        for i in 0..k.len() {
            let (a, b) = (k[i], k[(i + 1) % k.len()]);
            if (a.1 > cy) != (b.1 > cy) && cx < a.0 + (cy - a.1) * (b.0 - a.0) / (b.1 - a.1) {
                inside = !inside;
            }
        }
        inside && !o.corners.contains(&ctx.ball.root())
    }
}

/// The pure element mapping the segment `from` onto `to`, endpoints in
/// order, when one exists.
fn pairing_element(ctx: &Ctx, from: (VertexId, VertexId), to: (VertexId, VertexId), tol: f64) -> Result<Option<Element>> {
    let ball = ctx.ball;
    let (a, b) = from;
    let (c, d) = to;
    let w0 = crate::split::top_generator(4).perm(4);
    let flip = if ball.perm(c) == ball.perm(a) {
        false
    } else if ball.perm(c) == ball.perm(a).compose(&w0) {
        true
    } else {
        return Ok(None);
    };
    let tail = ball.geodesic(a);
    let tail = if flip { sigma(&tail)? } else { tail };
    let w = ball.geodesic(c).concat(&tail.inverse());
    let vertex = ball.evaluate(&w)?;
    let form = SplitForm {
        w: ball.geodesic(vertex),
        flip,
    };
    let iso = ctx.rt.split_isometry(ball, &form, tol)?;
    let hits = [(a, c), (b, d)]
        .iter()
        .all(|&(x, y)| iso.apply(ctx.rt.pos(x)).dist(ctx.rt.pos(y)) < 1e-6);
    if !hits {
        return Ok(None);
    }
    Ok(Some(Element {
        name: element_name(ball, (vertex, flip))?,
        form,
        vertex,
        iso,
    }))
}

fn assemble(ctx: &Ctx, cut: &Cut, o: &Outline, tol: f64) -> Result<Option<DirichletDomain>> {
    let n = o.corners.len();
    let seg = |i: usize| (o.corners[i], o.corners[(i + 1) % n]);
    // orbit of a side: the quotient edge, or the diagonal's far corner label
    let orbit = |i: usize| -> Option<(bool, usize, (usize, usize))> {
        let (a, b) = seg(i);
        if o.diagonal[i] {
            let pr = ctx.pair(a, b);
            let f = cut.diagonals.iter().find(|(_, p)| **p == pr).map(|(f, _)| *f)?;
            Some((true, f, pr))
        } else {
            ctx.edge_orbit(a, b).map(|e| (false, e, (0, 0)))
        }
    };
    let orbits: Vec<_> = (0..n).map(orbit).collect();
    let mut elements = Vec::with_capacity(n);
    let mut sides = Vec::with_capacity(n);
    let mut pairing = Vec::with_capacity(n);
    for i in 0..n {
        let partner = (0..n).find(|&j| j != i && orbits[j].is_some() && orbits[j] == orbits[i]);
        let Some(j) = partner else { return Ok(None) };
        let (a, b) = seg(j);
        let (c, d) = seg(i);
        // match endpoints by label
        let from = if ctx.label[a as usize] == ctx.label[c as usize] { (a, b) } else { (b, a) };
        let Some(el) = pairing_element(ctx, from, (c, d), tol)? else {
            return Ok(None);
        };
        elements.push(el);
        sides.push(Side {
            element: i,
            kind: if o.diagonal[i] { SideKind::Diagonal } else { SideKind::Edge },
        });
        pairing.push(j);
    }
    let points: Vec<HPoint> = o.corners.iter().map(|&v| ctx.rt.pos(v)).collect();
    let corners = (0..n)
        .map(|i| Corner {
            point: points[i],
            angle: angle_at(points[i], points[(i + n - 1) % n], points[(i + 1) % n]),
            vertex: Some(o.corners[i]),
        })
        .collect();
    Ok(Some(DirichletDomain {
        center: ctx.rt.pos(ctx.ball.root()),
        elements,
        corners,
        sides,
        pairing,
    }))
}

/// Searches cut graphs in hub order and returns the first qualifying
/// polygon.
pub fn cellular_domain(
    ball: &TessBall,
    rt: &RealizedTess,
    q: &Quotient,
    tol: f64,
) -> Result<CellularDomain> {
    let squares = ball.squares();
    let index = squares.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let face = squares.iter().map(|s| q.face_of(ball, s)).collect();
    let label = ball.vertices().map(|v| q.vertex_of(ball, v)).collect();
    let ctx = Ctx {
        ball,
        rt,
        q,
        squares,
        index,
        face,
        label,
    };
    let all = cuts(&ctx);
    let mut found: Option<(DirichletDomain, usize, Vec<u32>)> = None;
    let mut accepted = 0;
    for cut in &all {
        let Some(pieces) = unfold(&ctx, cut) else { continue };
        let Some(o) = outline(&ctx, &pieces) else { continue };
        if !contains_root(&ctx, &o) {
            continue;
        }
        let Some(d) = assemble(&ctx, cut, &o, tol)? else { continue };
        let named: BTreeSet<_> = d.elements.iter().filter_map(|e| e.name).collect();
        if named.len() != d.elements.len() {
            continue;
        }
        accepted += 1;
        if found.is_none() {
            found = Some((d, cut.hub, o.units.clone()));
        }
    }
    let (domain, hub, angle_units) =
        found.ok_or_else(|| Error::Geometry("no cut graph unfolds to a polygon".into()))?;
    Ok(CellularDomain {
        domain,
        hub: q.complex.vertices[hub].clone(),
        tried: all.len(),
        accepted,
        angle_units,
    })
}

/// `pi / 5` times a count of units.
pub fn units_to_angle(u: u32) -> f64 {
    u as f64 * PI / 5.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp::{poincare_check, realize};
    use crate::presentation::Presentation;
    use crate::pure::GWord;
    use crate::quotient::quotient_complex;
    use crate::words::word;

    #[test]
    fn twenty_sided_polygon() {
        let b = TessBall::build(&Presentation::named("j4-23").unwrap(), 8).unwrap();
        let rt = realize(&b, 1e-9).unwrap();
        let q = quotient_complex(&b).unwrap();
        let c = cellular_domain(&b, &rt, &q, 1e-9).unwrap();
        let d = &c.domain;
        assert_eq!(c.accepted, 1);
        assert_eq!(d.sides.len(), 20);
        assert_eq!(d.count_kind(SideKind::Diagonal), 10);
        for (corner, &u) in d.corners.iter().zip(&c.angle_units) {
            assert!((2..=4).contains(&u));
            assert!((corner.angle - units_to_angle(u)).abs() < 1e-9);
        }
        assert!((d.angle_sum() - 12.0 * PI).abs() < 1e-9);
        let report = poincare_check(d, 1e-6).unwrap();
        assert!(report.passed(1e-6));
        let mut sizes: Vec<usize> = report.cycles.iter().map(|c| c.corners.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 3, 3, 3, 5]);
        let five = report.cycles.iter().find(|c| c.corners.len() == 5).unwrap();
        let mut at: Vec<VertexId> = five.corners.iter().map(|&i| d.corners[i].vertex.unwrap()).collect();
        at.sort();
        let mut want: Vec<VertexId> = ["s13 s24 s23", "s23 s34 s12", "s24 s13 s23", "s34 s13 s12", "s12 s24 s34"]
            .iter()
            .map(|w| b.evaluate(&word(w, 4)).unwrap())
            .collect();
        want.sort();
        assert_eq!(at, want);
        let keys: BTreeSet<GWord> = report
            .cycles
            .iter()
            .map(|c| d.cycle_gword(c).unwrap().cyclic_key())
            .collect();
        let outline: BTreeSet<GWord> = crate::pure::OUTLINE_RELATORS
            .iter()
            .map(|r| GWord::parse(r).unwrap().cyclic_key())
            .collect();
        assert_eq!(keys, outline);
    }
}
