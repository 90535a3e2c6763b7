//! Placing a `J_4^{[2,3]}` ball in the hyperbolic plane as part of the
//! `{4,5}` tessellation.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use super::geometry::{angle_at, edge_length, HIso, HPoint};
use crate::error::{Error, Result};
use crate::split::SplitForm;
use crate::tess::{TessBall, VertexId};
use crate::words::{Generator, Word};

#[derive(Clone, Debug)]
pub struct RealizedTess {
    /// Generators in counterclockwise order around the root.
    pub cycle: Vec<Generator>,
    /// Direction of each generator's edge at the root, indexed like `cycle`.
    pub theta: Vec<f64>,
    /// Isometry of left multiplication by each generator, indexed like `cycle`.
    pub gen_iso: Vec<HIso>,
    pub pos: Vec<HPoint>,
    /// `frame[v]` is left multiplication by the element of `v`.
    pub frame: Vec<HIso>,
    pub edge_length: f64,
}

impl RealizedTess {
    pub fn cycle_index(&self, g: Generator) -> Option<usize> {
        self.cycle.iter().position(|&c| c == g)
    }

    pub fn pos(&self, v: VertexId) -> HPoint {
        self.pos[v as usize]
    }

    /// Composite of generator isometries along a word of the subgroup.
    pub fn word_isometry(&self, w: &Word) -> Result<HIso> {
        let mut iso = HIso::IDENTITY;
        for &g in w.letters() {
            let k = self
                .cycle_index(g)
                .ok_or_else(|| Error::ForeignGenerator(g.to_string()))?;
            iso = iso.compose(&self.gen_iso[k]);
        }
        Ok(iso)
    }

    /// The isometry fitting a vertex map near the root, validated on every
    /// vertex of its domain.
    pub fn map_isometry(
        &self,
        ball: &TessBall,
        map: &BTreeMap<VertexId, VertexId>,
        tol: f64,
    ) -> Result<HIso> {
        let root = ball.root();
        let n0 = ball.edge(root, self.cycle[0]).expect("root is trusted");
        let n1 = ball.edge(root, self.cycle[1]).expect("root is trusted");
        let img = |v: VertexId| {
            map.get(&v)
                .map(|&u| self.pos(u))
                .ok_or_else(|| Error::Geometry(format!("vertex {v} outside the map domain")))
        };
        let iso = HIso::from_three(
            self.edge_length,
            self.theta[0],
            self.theta[1],
            img(root)?,
            img(n0)?,
            img(n1)?,
        )
        .ok_or_else(|| Error::Geometry("vertex map does not fit an isometry".into()))?;
        for (&v, &u) in map {
            let d = iso.apply(self.pos(v)).dist(self.pos(u));
            if d > tol * (1.0 + ball.level(u) as f64) {
                return Err(Error::Geometry(format!(
                    "isometry misses vertex {v} -> {u} by {d:e}"
                )));
            }
        }
        Ok(iso)
    }

    /// Isometry of `v -> g·v` for a split form, from its vertex map.
    pub fn element_isometry(&self, ball: &TessBall, g: &SplitForm, tol: f64) -> Result<HIso> {
        let map = ball.left_mult_map(g)?;
        self.map_isometry(ball, &map, tol)
    }

    /// Isometry of one generator computed from its vertex map.
    pub fn generator_isometry(&self, ball: &TessBall, s: Generator, tol: f64) -> Result<HIso> {
        let w = Word::new(ball.degree(), vec![s])?;
        let map = ball.left_mult_word(&w)?;
        self.map_isometry(ball, &map, tol)
    }

    /// The automorphism `v -> σ(v)` (conjugation by the top generator).
    pub fn sigma_isometry(&self, ball: &TessBall, tol: f64) -> Result<HIso> {
        self.element_isometry(
            ball,
            &SplitForm {
                w: Word::identity(ball.degree()),
                flip: true,
            },
            tol,
        )
    }

    /// Isometry of a split form composed from generator isometries.
    pub fn split_isometry(&self, ball: &TessBall, g: &SplitForm, tol: f64) -> Result<HIso> {
        let w = self.word_isometry(&g.w)?;
        Ok(if g.flip {
            w.compose(&self.sigma_isometry(ball, tol)?)
        } else {
            w
        })
    }
}

/// Realizes the ball: the root sits at `i` with its edges at directions
/// `2 pi k / 5` in link order; frames propagate along edges and every
/// revisited vertex must land where it was first placed.
pub fn realize(ball: &TessBall, tol: f64) -> Result<RealizedTess> {
    if ball.presentation().name() != "j4-23" {
        return Err(Error::UnsupportedPresentation(
            ball.presentation().name().to_string(),
        ));
    }
    if ball.radius() < 2 {
        return Err(Error::RadiusTooSmall {
            have: ball.radius(),
            need: 2,
        });
    }
    let root = ball.root();
    let cycle = ball
        .link_cycle(root)
        .ok_or_else(|| Error::Geometry("root link is not a cycle".into()))?;
    let n = cycle.len();
    let theta: Vec<f64> = (0..n).map(|k| 2.0 * PI * k as f64 / n as f64).collect();
    let l = edge_length();

    let mut gen_iso = Vec::with_capacity(n);
    for k in 0..n {
        let s = cycle[k];
        let ccw = cycle[(k + 1) % n];
        let cw = cycle[(k + n - 1) % n];
        let after = far_label(ball, s, ccw)?;
        let rev = if after == ccw {
            true
        } else if after == cw {
            false
        } else {
            return Err(Error::Geometry(format!(
                "square at {s} continues with {after}, not a link neighbour"
            )));
        };
        let mid = HIso::along(l / 2.0, theta[k]);
        let half_turn = mid.compose(&HIso::rotation(PI / 2.0)).compose(&mid.inverse());
        gen_iso.push(if rev {
            half_turn.compose(&HIso::reflection(theta[k]))
        } else {
            half_turn
        });
    }

    let count = ball.vertex_count();
    let mut frame: Vec<Option<HIso>> = vec![None; count];
    frame[root as usize] = Some(HIso::IDENTITY);
    let probes = [HPoint::I, HPoint::polar(l, theta[0]), HPoint::polar(l, theta[1])];
    // Vertex ids follow breadth-first order, so parents are placed first.
    for v in ball.vertices() {
        let fv = frame[v as usize].ok_or_else(|| Error::Geometry(format!("vertex {v} unreachable")))?;
        for (g, u) in ball.neighbors(v) {
            let k = cycle.iter().position(|&c| c == g).expect("generator in cycle");
            let cand = fv.compose(&gen_iso[k]);
            match frame[u as usize] {
                None => frame[u as usize] = Some(cand),
                Some(fu) => {
                    let scale = 1.0 + ball.level(u) as f64;
                    for p in probes {
                        let d = fu.apply(p).dist(cand.apply(p));
                        if d > tol * scale {
                            return Err(Error::Geometry(format!(
                                "closure failure at vertex {u}: off by {d:e}"
                            )));
                        }
                    }
                }
            }
        }
    }
    let frame: Vec<HIso> = frame.into_iter().map(|f| f.expect("placed")).collect();
    let pos = frame.iter().map(|f| f.apply(HPoint::I)).collect();
    let rt = RealizedTess {
        cycle,
        theta,
        gen_iso,
        pos,
        frame,
        edge_length: l,
    };
    check_geometry(ball, &rt, tol)?;
    Ok(rt)
}

/// At the root, follows the square with corner pair `{s, ccw}` across the
/// `s` edge and returns the label of the square's next edge there.
fn far_label(ball: &TessBall, s: Generator, ccw: Generator) -> Result<Generator> {
    let root = ball.root();
    let pair = (s.min(ccw), s.max(ccw));
    for sq in ball.squares_at(root) {
        for j in 0..4 {
            if sq.corners[j] != root || sq.corner_pair(j) != pair {
                continue;
            }
            if sq.labels[j] == s {
                return Ok(sq.labels[(j + 1) % 4]);
            }
            return Ok(sq.labels[(j + 2) % 4]);
        }
    }
    Err(Error::Geometry(format!("no square with corner {s}, {ccw} at the root")))
}

/// Edge lengths and square corner angles of the realization.
fn check_geometry(ball: &TessBall, rt: &RealizedTess, tol: f64) -> Result<()> {
    let target = 2.0 * PI / 5.0;
    for v in ball.vertices() {
        let scale = 1.0 + ball.level(v) as f64;
        for (_, u) in ball.neighbors(v) {
            let d = rt.pos(v).dist(rt.pos(u));
            if (d - rt.edge_length).abs() > tol * scale {
                return Err(Error::Geometry(format!(
                    "edge {v}-{u} has length {d}, expected {}",
                    rt.edge_length
                )));
            }
        }
    }
    for sq in ball.squares() {
        let p = sq.corners.map(|c| rt.pos(c));
        for j in 0..4 {
            let a = angle_at(p[j], p[(j + 1) % 4], p[(j + 3) % 4]);
            let scale = 1.0 + ball.level(sq.corners[j]) as f64;
            if (a - target).abs() > tol * scale {
                return Err(Error::Geometry(format!(
                    "square corner {} has angle {a}",
                    sq.corners[j]
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::words::{gen, word};

    fn setup(radius: u32) -> (TessBall, RealizedTess) {
        let b = TessBall::build(&Presentation::named("j4-23").unwrap(), radius).unwrap();
        let rt = realize(&b, 1e-9).unwrap();
        (b, rt)
    }

    #[test]
    fn root_star() {
        let (b, rt) = setup(4);
        assert_eq!(rt.pos(b.root()).dist(HPoint::I), 0.0);
        assert_eq!(
            rt.cycle,
            vec![gen(1, 2), gen(1, 3), gen(2, 3), gen(2, 4), gen(3, 4)]
        );
    }

    #[test]
    fn generator_isometries_agree_with_vertex_maps() {
        let (b, rt) = setup(5);
        for (k, &s) in rt.cycle.iter().enumerate() {
            let m = rt.generator_isometry(&b, s, 1e-9).unwrap();
            assert!(m.approx_eq(&rt.gen_iso[k], 1e-9), "{s}");
            assert!(m.compose(&m).is_identity(1e-9));
            let target = rt.pos(b.edge(b.root(), s).unwrap());
            assert!(m.apply(HPoint::I).dist(target) < 1e-9);
        }
    }

    #[test]
    fn commuting_generators_commute_as_isometries() {
        let (_, rt) = setup(3);
        let a = rt.word_isometry(&word("s12 s34", 4)).unwrap();
        let b = rt.word_isometry(&word("s34 s12", 4)).unwrap();
        assert!(a.approx_eq(&b, 1e-9));
    }
}
