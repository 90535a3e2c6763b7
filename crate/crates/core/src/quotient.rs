//! The surface `C_4^{[2,3]} / PJ_4` as a finite cell complex.
//!
//! Pure elements act freely on the vertices, and `g·v` has permutation
//! `π(v)` or `π(v) w0` according to the flip of `g`. Orbits of vertices are
//! therefore labelled by the pair `{π(v), π(v) w0}`, and an edge or square
//! orbit by a vertex label together with generator labels, where the labels
//! are read through `σ` whenever `π(v)` is the larger member of its pair.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{CellComplex2, EdgeUse};
use crate::error::{Error, Result};
use crate::hyp::RealizedTess;
use crate::perm::Perm;
use crate::pure::{acts_freely, GWord, ALPHA2};
use crate::split::{sigma_letter, split_form, top_generator, SplitForm};
use crate::tess::{Square, TessBall, VertexId};
use crate::words::Generator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel {
    /// The smaller permutation of the pair.
    pub low: Perm,
    pub high: Perm,
}

impl OrbitLabel {
    pub fn of(rho: Perm) -> OrbitLabel {
        let w0 = top_generator(rho.degree()).perm(rho.degree());
        let other = rho.compose(&w0);
        OrbitLabel {
            low: rho.min(other),
            high: rho.max(other),
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.low, self.high)
    }
}

pub fn vertex_orbits(ball: &TessBall) -> Vec<OrbitLabel> {
    ball.vertices().map(|v| OrbitLabel::of(ball.perm(v))).collect()
}

/// Orbit key of the directed edge leaving `v` along `s`.
fn edge_key(ball: &TessBall, v: VertexId, s: Generator) -> (OrbitLabel, Generator) {
    let rho = ball.perm(v);
    let label = OrbitLabel::of(rho);
    if rho == label.low {
        (label, s)
    } else {
        (label, sigma_letter(s, ball.degree()))
    }
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub complex: CellComplex2,
    pub labels: Vec<OrbitLabel>,
    /// Orbit keys of the edges, in edge order.
    pub edge_keys: Vec<(OrbitLabel, Generator)>,
    /// Orbit keys of the faces, in face order.
    pub face_keys: Vec<(OrbitLabel, Generator, Generator)>,
}

impl Quotient {
    pub fn vertex_index(&self, label: &OrbitLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edge index and direction of the directed edge `v -> v·s`.
    pub fn edge_use(&self, ball: &TessBall, v: VertexId, s: Generator) -> Option<EdgeUse> {
        let here = edge_key(ball, v, s);
        let there = edge_key(ball, ball.edge(v, s)?, s);
        let key = here.min(there);
        let edge = self.edge_keys.iter().position(|k| *k == key)?;
        Some(EdgeUse {
            edge,
            forward: here <= there,
        })
    }

    /// Face index of a square of the ball.
    pub fn face_of(&self, ball: &TessBall, sq: &Square) -> Option<usize> {
        let key = square_key(ball, sq).1;
        self.face_keys.iter().position(|k| *k == key)
    }

    pub fn vertex_of(&self, ball: &TessBall, v: VertexId) -> usize {
        self.vertex_index(&OrbitLabel::of(ball.perm(v)))
            .expect("every vertex label is listed")
    }
}

/// Corner with the least orbit key and that key.
fn square_key(ball: &TessBall, sq: &Square) -> (usize, (OrbitLabel, Generator, Generator)) {
    (0..4)
        .map(|j| {
            let (a, x) = edge_key(ball, sq.corners[j], sq.labels[(j + 3) % 4]);
            let (_, y) = edge_key(ball, sq.corners[j], sq.labels[j]);
            (j, (a, x.min(y), x.max(y)))
        })
        .min_by_key(|(_, k)| *k)
        .expect("four corners")
}

/// Vertices, edges and squares of the quotient, read off every trusted
/// cell of the ball.
pub fn quotient_complex(ball: &TessBall) -> Result<Quotient> {
    if !matches!(ball.presentation().name(), "j4-23" | "j3-2") {
        return Err(Error::UnsupportedPresentation(
            ball.presentation().name().to_string(),
        ));
    }
    if ball.radius() < 6 {
        return Err(Error::RadiusTooSmall {
            have: ball.radius(),
            need: 6,
        });
    }
    let mut labels: Vec<OrbitLabel> = vertex_orbits(ball);
    labels.sort();
    labels.dedup();
    let index: BTreeMap<OrbitLabel, usize> =
        labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();

    let mut edges: BTreeMap<(OrbitLabel, Generator), (usize, usize)> = BTreeMap::new();
    for v in ball.vertices().filter(|&v| ball.is_trusted(v)) {
        for (s, u) in ball.neighbors(v) {
            let a = edge_key(ball, v, s);
            let b = edge_key(ball, u, s);
            if a == b {
                return Err(Error::Inconsistency(format!("edge {v}-{u} is flipped by its orbit")));
            }
            let (tail, head) = if a < b { (a.0, b.0) } else { (b.0, a.0) };
            let ends = (index[&tail], index[&head]);
            if let Some(old) = edges.insert(a.min(b), ends) {
                if old != ends {
                    return Err(Error::Inconsistency(format!(
                        "edge orbit {} {} has two sets of endpoints",
                        a.min(b).0,
                        a.min(b).1
                    )));
                }
            }
        }
    }
    let edge_keys: Vec<_> = edges.keys().copied().collect();
    let edge_list: Vec<(usize, usize)> = edges.values().copied().collect();

    let mut faces: BTreeMap<(OrbitLabel, Generator, Generator), Vec<EdgeUse>> = BTreeMap::new();
    let mut partial = Quotient {
        complex: CellComplex2::new(
            labels.iter().map(|l| l.to_string()).collect(),
            edge_list.clone(),
            Vec::new(),
        )?,
        labels: labels.clone(),
        edge_keys,
        face_keys: Vec::new(),
    };
    for sq in ball.squares() {
        if !sq.corners.iter().all(|&c| ball.is_trusted(c)) {
            continue;
        }
        let (start, key) = square_key(ball, sq);
        let walk: Vec<EdgeUse> = (0..4)
            .map(|k| {
                let j = (start + k) % 4;
                partial
                    .edge_use(ball, sq.corners[j], sq.labels[j])
                    .ok_or_else(|| Error::Inconsistency("square edge without orbit".into()))
            })
            .collect::<Result<_>>()?;
        let canonical = |w: &[EdgeUse]| {
            // the same square read backwards from the same corner
            let rev: Vec<EdgeUse> = w
                .iter()
                .rev()
                .map(|u| EdgeUse {
                    edge: u.edge,
                    forward: !u.forward,
                })
                .collect();
            w.to_vec().min(rev)
        };
        let walk = canonical(&walk);
        match faces.get(&key) {
            Some(old) if canonical(old) != walk => {
                return Err(Error::Inconsistency(format!(
                    "square orbit at {} has two boundaries",
                    key.0
                )))
            }
            Some(_) => {}
            None => {
                faces.insert(key, walk);
            }
        }
    }
    partial.face_keys = faces.keys().copied().collect();
    partial.complex = CellComplex2::new(
        labels.iter().map(|l| l.to_string()).collect(),
        edge_list,
        faces.into_values().collect(),
    )?;
    Ok(partial)
}

#[derive(Clone, Debug)]
pub struct SurfaceReport {
    pub counts: (usize, usize, usize),
    pub chi: i64,
    pub closed: bool,
    pub connected: bool,
    pub orientable: bool,
    pub classification: String,
}

impl SurfaceReport {
    pub fn of(c: &CellComplex2) -> Result<SurfaceReport> {
        Ok(SurfaceReport {
            counts: c.counts(),
            chi: c.euler_characteristic(),
            closed: c.is_closed(),
            connected: c.is_connected(),
            orientable: c.orientable()?,
            classification: c.classify()?.to_string(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Alpha2Report {
    pub form: SplitForm,
    pub pure: bool,
    pub acts_freely: bool,
    pub reverses_orientation: bool,
    pub square_preserves_orientation: bool,
}

impl Alpha2Report {
    pub fn passed(&self) -> bool {
        self.pure && self.acts_freely && self.reverses_orientation && self.square_preserves_orientation
    }
}

pub fn alpha2_check(ball: &TessBall, rt: &RealizedTess, tol: f64) -> Result<Alpha2Report> {
    let word = GWord::parse(ALPHA2)?.expand();
    let form = split_form(&word)?;
    let iso = rt.element_isometry(ball, &form, tol)?;
    Ok(Alpha2Report {
        pure: word.is_pure(),
        acts_freely: acts_freely(ball, &form)?,
        reverses_orientation: iso.rev,
        square_preserves_orientation: !iso.compose(&iso).rev,
        form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::pure::enumerate_pure;

    fn ball(r: u32) -> TessBall {
        TessBall::build(&Presentation::named("j4-23").unwrap(), r).unwrap()
    }

    #[test]
    fn labels_are_constant_on_orbits() {
        let b = ball(7);
        let labels = vertex_orbits(&b);
        for g in enumerate_pure(&b, 4).unwrap() {
            for (v, u) in b.left_mult_map(&g.form).unwrap() {
                assert_eq!(labels[v as usize], labels[u as usize]);
            }
        }
    }

    #[test]
    fn twelve_orbits() {
        let b = ball(6);
        let mut l = vertex_orbits(&b);
        l.sort();
        l.dedup();
        assert_eq!(l.len(), 12);
        let root = OrbitLabel::of(Perm::identity(4));
        assert_eq!(root.low, Perm::identity(4));
        assert_eq!(root.high, Perm::longest(4));
    }

    #[test]
    fn quotient_counts() {
        let q = quotient_complex(&ball(6)).unwrap();
        assert_eq!(q.complex.counts(), (12, 30, 15));
        let r = SurfaceReport::of(&q.complex).unwrap();
        assert_eq!(r.chi, -3);
        assert!(r.closed && r.connected && !r.orientable);
        assert_eq!(r.classification, "N5");
    }
}
