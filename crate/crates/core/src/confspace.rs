//! Dual cell complexes of the compactified spaces `X̄(4)` and `X̄(5)` of
//! points on a circle, and their comparison with the cactus quotients.
//!
//! A vertex is a circular order `(0, a_1, ..., a_{k-1})` read up to
//! reflection, written as the code `[a_1 ... a_{k-1}]`. Switching two
//! neighbouring points gives an edge; two switches of disjoint pairs
//! commute and span a square.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complex::{CellComplex2, EdgeUse};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::quotient::{quotient_complex, OrbitLabel, Quotient};
use crate::split::{split_form, top_generator};
use crate::tess::TessBall;
use crate::words::{word, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConfigCode(Vec<u8>);

impl ConfigCode {
    /// Canonical code of a sequence: the smaller of it and its reversal.
    pub fn canonical(seq: &[u8]) -> Result<ConfigCode> {
        let k = seq.len() + 1;
        let mut sorted = seq.to_vec();
        sorted.sort();
        if !(4..=5).contains(&k) || sorted != (1..k as u8).collect::<Vec<_>>() {
            return Err(Error::Syntax {
                pos: 0,
                msg: format!("{seq:?} is not a permutation of 1..{}", k - 1),
            });
        }
        let rev: Vec<u8> = seq.iter().rev().copied().collect();
        Ok(ConfigCode(seq.to_vec().min(rev)))
    }

    /// Parses `[3124]`, `3124` or `3 1 2 4`.
    pub fn parse(text: &str) -> Result<ConfigCode> {
        let digits: Vec<u8> = text
            .chars()
            .filter(|c| !matches!(c, '[' | ']' | ' ' | ','))
            .map(|c| {
                c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Syntax {
                    pos: 0,
                    msg: format!("unexpected `{c}` in code `{text}`"),
                })
            })
            .collect::<Result<_>>()?;
        ConfigCode::canonical(&digits)
    }

    pub fn seq(&self) -> &[u8] {
        &self.0
    }

    /// Number of points `k` on the circle.
    pub fn points(&self) -> usize {
        self.0.len() + 1
    }

    /// Every canonical code for `k` points.
    pub fn all(k: usize) -> Vec<ConfigCode> {
        let mut out = BTreeSet::new();
        let mut seq: Vec<u8> = (1..k as u8).collect();
        permutations(&mut seq, 0, &mut |s| {
            out.insert(ConfigCode::canonical(s).expect("a permutation"));
        });
        out.into_iter().collect()
    }

    /// The circle `(0, a_1, ..., a_{k-1})`.
    fn circle(&self) -> Vec<u8> {
        std::iter::once(0).chain(self.0.iter().copied()).collect()
    }

    /// Neighbouring pairs of points on the circle.
    pub fn neighbour_pairs(&self) -> Vec<(u8, u8)> {
        let c = self.circle();
        (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect()
    }

    /// The code after the points `x` and `y` trade places.
    pub fn switch(&self, x: u8, y: u8) -> ConfigCode {
        let mut circle: Vec<u8> = self
            .circle()
            .into_iter()
            .map(|p| if p == x { y } else if p == y { x } else { p })
            .collect();
        let zero = circle.iter().position(|&p| p == 0).expect("0 is on the circle");
        circle.rotate_left(zero);
        ConfigCode::canonical(&circle[1..]).expect("still a permutation")
    }

    pub fn adjacent(&self) -> BTreeSet<ConfigCode> {
        self.neighbour_pairs()
            .into_iter()
            .map(|(x, y)| self.switch(x, y))
            .collect()
    }
}

impl fmt::Display for ConfigCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

fn permutations(seq: &mut Vec<u8>, at: usize, f: &mut dyn FnMut(&[u8])) {
    if at == seq.len() {
        f(seq);
        return;
    }
    for i in at..seq.len() {
        seq.swap(at, i);
        permutations(seq, at + 1, f);
        seq.swap(at, i);
    }
}

#[derive(Clone, Debug)]
pub struct ConfigComplex {
    pub k: usize,
    pub codes: Vec<ConfigCode>,
    pub complex: CellComplex2,
}

impl ConfigComplex {
    pub fn code_index(&self, c: &ConfigCode) -> Option<usize> {
        self.codes.iter().position(|x| x == c)
    }

    /// Vertex cycle of each face.
    pub fn face_cycles(&self) -> Vec<Vec<usize>> {
        face_cycles(&self.complex)
    }
}

/// Vertices visited by each face boundary, starting at its first tail.
pub fn face_cycles(c: &CellComplex2) -> Vec<Vec<usize>> {
    c.faces
        .iter()
        .map(|walk| {
            walk.iter()
                .map(|u| {
                    let (a, b) = c.edges[u.edge];
                    if u.forward {
                        a
                    } else {
                        b
                    }
                })
                .collect()
        })
        .collect()
}

/// Least rotation of a cycle or of its reversal.
pub fn cycle_key<T: Ord + Clone>(cycle: &[T]) -> Vec<T> {
    let mut best: Option<Vec<T>> = None;
    let rev: Vec<T> = cycle.iter().rev().cloned().collect();
    for c in [cycle.to_vec(), rev] {
        for r in 0..c.len().max(1) {
            let mut x = c.clone();
            x.rotate_left(r.min(c.len()));
            if best.as_ref().is_none_or(|b| x < *b) {
                best = Some(x);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn build_config_complex(k: usize) -> Result<ConfigComplex> {
    if k != 4 && k != 5 {
        return Err(Error::Unknown {
            kind: "configuration size",
            name: k.to_string(),
        });
    }
    let codes = ConfigCode::all(k);
    let at = |c: &ConfigCode| codes.iter().position(|x| x == c).expect("canonical code");
    let mut edge_ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut edges = Vec::new();
    for (i, c) in codes.iter().enumerate() {
        for n in c.adjacent() {
            let j = at(&n);
            let key = (i.min(j), i.max(j));
            if i != j && !edge_ids.contains_key(&key) {
                edge_ids.insert(key, edges.len());
                edges.push(key);
            }
        }
    }
    let mut faces = Vec::new();
    let mut seen = BTreeSet::new();
    if k == 5 {
        for c in &codes {
            let pairs = c.neighbour_pairs();
            for (n, &(x, y)) in pairs.iter().enumerate() {
                for &(z, w) in &pairs[n + 1..] {
                    if [x, y].contains(&z) || [x, y].contains(&w) {
                        continue;
                    }
                    let xy = c.switch(x, y);
                    let cycle = [c.clone(), xy.clone(), xy.switch(z, w), c.switch(z, w)];
                    if cycle[2] != cycle[3].switch(x, y) {
                        return Err(Error::Inconsistency(format!("switches at {c} do not commute")));
                    }
                    let idx: Vec<usize> = cycle.iter().map(at).collect();
                    if !seen.insert(cycle_key(&idx)) {
                        continue;
                    }
                    let walk = (0..4)
                        .map(|t| {
                            let (a, b) = (idx[t], idx[(t + 1) % 4]);
                            EdgeUse {
                                edge: edge_ids[&(a.min(b), a.max(b))],
                                forward: a < b,
                            }
                        })
                        .collect();
                    faces.push(walk);
                }
            }
        }
    }
    let names = codes.iter().map(|c| c.to_string()).collect();
    Ok(ConfigComplex {
        k,
        codes,
        complex: CellComplex2::new(names, edges, faces)?,
    })
}

/// The correspondence between codes of `X̄(5)` and quotient vertices, as
/// printed: code and a word whose vertex carries the label.
pub const PHI_TABLE: [(&str, &str); 12] = [
    ("1234", "e"),
    ("2134", "s12"),
    ("4123", "s13"),
    ("1324", "s23"),
    ("2341", "s24"),
    ("1243", "s34"),
    ("3124", "s13 s23"),
    ("3412", "s13 s24"),
    ("3241", "s13 s34"),
    ("2314", "s13 s12"),
    ("2431", "s24 s23"),
    ("3142", "s13 s24 s23"),
];

/// Label of the permutation whose images spell the code.
pub fn derived_label(c: &ConfigCode) -> OrbitLabel {
    OrbitLabel::of(Perm::from_images(c.seq()).expect("codes are permutations"))
}

/// Label of the table word for `c`, checked against [`derived_label`].
pub fn phi_vertex(c: &ConfigCode) -> Result<OrbitLabel> {
    for (code, w) in PHI_TABLE {
        if ConfigCode::parse(code)? == *c {
            let label = OrbitLabel::of(word(w, 4).pi());
            if label != derived_label(c) {
                return Err(Error::Inconsistency(format!(
                    "table word {w} for {c} has label {label}, expected {}",
                    derived_label(c)
                )));
            }
            return Ok(label);
        }
    }
    Err(Error::Unknown {
        kind: "code",
        name: c.to_string(),
    })
}

#[derive(Clone, Debug, Default)]
pub struct PhiReport {
    pub vertices: (usize, usize),
    pub edges: (usize, usize),
    pub faces: (usize, usize),
    pub vertex_bijection: bool,
    pub edge_bijection: bool,
    pub face_bijection: bool,
    pub chi_agree: bool,
    pub failures: Vec<String>,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.vertex_bijection
            && self.edge_bijection
            && self.face_bijection
            && self.chi_agree
            && self.failures.is_empty()
    }
}

/// Compares `X̄(5)` with the quotient through `φ`: vertices one to one,
/// edges and faces matched as multisets of vertex pairs and vertex cycles.
pub fn verify_phi(cc: &ConfigComplex, q: &Quotient) -> Result<PhiReport> {
    let f = &q.complex;
    let mut r = PhiReport {
        vertices: (cc.complex.vertices.len(), f.vertices.len()),
        edges: (cc.complex.edges.len(), f.edges.len()),
        faces: (cc.complex.faces.len(), f.faces.len()),
        ..Default::default()
    };
    let mut map = Vec::with_capacity(cc.codes.len());
    for c in &cc.codes {
        let label = phi_vertex(c)?;
        match q.vertex_index(&label) {
            Some(i) => map.push(i),
            None => {
                r.failures.push(format!("{c} maps to {label}, not a quotient vertex"));
                map.push(usize::MAX);
            }
        }
    }
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    r.vertex_bijection = r.failures.is_empty()
        && distinct.len() == map.len()
        && map.len() == f.vertices.len();

    let mut want: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for &(a, b) in &f.edges {
        *want.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    for &(a, b) in &cc.complex.edges {
        let (x, y) = (map[a], map[b]);
        let e = want.entry((x.min(y), x.max(y))).or_insert(0);
        *e -= 1;
        if *e < 0 {
            r.failures.push(format!(
                "edge {} {} has no image edge",
                cc.codes[a], cc.codes[b]
            ));
        }
    }
    r.edge_bijection = r.edges.0 == r.edges.1 && want.values().all(|&n| n == 0);

    let mut faces: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for cyc in face_cycles(f) {
        *faces.entry(cycle_key(&cyc)).or_insert(0) += 1;
    }
    for cyc in cc.face_cycles() {
        let image: Vec<usize> = cyc.iter().map(|&v| map[v]).collect();
        let e = faces.entry(cycle_key(&image)).or_insert(0);
        *e -= 1;
        if *e < 0 {
            let names: Vec<String> = cyc.iter().map(|&v| cc.codes[v].to_string()).collect();
            r.failures.push(format!("face <{}> has no image face", names.join(", ")));
        }
    }
    r.face_bijection = r.faces.0 == r.faces.1 && faces.values().all(|&n| n == 0);
    r.chi_agree = cc.complex.euler_characteristic() == f.euler_characteristic();
    Ok(r)
}

/// The fifteen squares of `X̄(5)` as printed, each a cycle of codes.
pub const PRINTED_SQUARES: [[&str; 4]; 15] = [
    ["3124", "1324", "2314", "2134"],
    ["3124", "3142", "1342", "1324"],
    ["3214", "3142", "1342", "1324"],
    ["3412", "1243", "3124", "3214"],
    ["3412", "2134", "1234", "1243"],
    ["3412", "1432", "1342", "2134"],
    ["3142", "4132", "1432", "3412"],
    ["3142", "1342", "2134", "4132"],
    ["4231", "3241", "1243", "1342"],
    ["1324", "1234", "1432", "3241"],
    ["1432", "3241", "3214", "2314"],
    ["1342", "1243", "1234", "1432"],
    ["1234", "2134", "3124", "3214"],
    ["1234", "1324", "2314", "3214"],
    ["3214", "3412", "3142", "3241"],
];

#[derive(Clone, Debug)]
pub struct PrintedSquare {
    pub printed: [&'static str; 4],
    pub canonical: Vec<ConfigCode>,
    /// Consecutive codes (cyclically) are adjacent.
    pub is_cycle: bool,
    pub generated: bool,
}

#[derive(Clone, Debug)]
pub struct Reconciliation {
    pub squares: Vec<PrintedSquare>,
    /// Generated squares that no printed entry matches.
    pub missing: Vec<Vec<ConfigCode>>,
    /// Printed entries equal to an earlier printed entry.
    pub duplicates: Vec<usize>,
}

impl Reconciliation {
    pub fn matched(&self) -> usize {
        self.squares.iter().filter(|s| s.generated).count()
    }

    pub fn exact(&self) -> bool {
        self.missing.is_empty() && self.squares.iter().all(|s| s.generated) && self.duplicates.is_empty()
    }
}

/// Canonicalizes the printed squares and compares them with the generated
/// ones as unordered 4-cycles.
pub fn reconcile_printed(cc: &ConfigComplex) -> Result<Reconciliation> {
    let generated: BTreeSet<Vec<ConfigCode>> = cc
        .face_cycles()
        .iter()
        .map(|c| cycle_key(&c.iter().map(|&v| cc.codes[v].clone()).collect::<Vec<_>>()))
        .collect();
    let mut squares = Vec::new();
    let mut seen: Vec<Vec<ConfigCode>> = Vec::new();
    let mut duplicates = Vec::new();
    for (i, printed) in PRINTED_SQUARES.iter().enumerate() {
        let canonical: Vec<ConfigCode> = printed
            .iter()
            .map(|c| ConfigCode::parse(c))
            .collect::<Result<_>>()?;
        let key = cycle_key(&canonical);
        let is_cycle = (0..4).all(|t| canonical[t].adjacent().contains(&canonical[(t + 1) % 4]));
        if seen.contains(&key) {
            duplicates.push(i);
        }
        seen.push(key.clone());
        squares.push(PrintedSquare {
            printed: *printed,
            canonical,
            is_cycle,
            generated: generated.contains(&key),
        });
    }
    let missing = generated.into_iter().filter(|g| !seen.contains(g)).collect();
    Ok(Reconciliation {
        squares,
        missing,
        duplicates,
    })
}

#[derive(Clone, Debug)]
pub struct Pj3Report {
    pub is_line: bool,
    pub orbit_count: usize,
    pub quotient_counts: (usize, usize, usize),
    pub quotient_matches_x4: bool,
    pub element: Word,
    pub pure: bool,
    pub top_part_is_reversal: bool,
    pub displacement: u32,
    pub acts_freely: bool,
    /// The element's translates of the root cover every orbit-mate in the ball.
    pub generates_deck_action: bool,
}

impl Pj3Report {
    pub fn passed(&self) -> bool {
        self.is_line
            && self.orbit_count == 3
            && self.quotient_counts == (3, 3, 0)
            && self.quotient_matches_x4
            && self.pure
            && self.top_part_is_reversal
            && self.displacement == 3
            && self.acts_freely
            && self.generates_deck_action
    }
}

/// Degree three at desk scale: the `J_3^{[2]}` complex is a line on which
/// `PJ_3` acts by translations with a 3-cycle as quotient.
pub fn pj3_check(b3: &TessBall) -> Result<Pj3Report> {
    if b3.presentation().name() != "j3-2" {
        return Err(Error::UnsupportedPresentation(b3.presentation().name().to_string()));
    }
    if b3.radius() < 8 {
        return Err(Error::RadiusTooSmall {
            have: b3.radius(),
            need: 8,
        });
    }
    let sizes = b3.sphere_sizes();
    let is_line = b3.squares().is_empty()
        && sizes.first() == Some(&1)
        && sizes[1..].iter().all(|&n| n == 2)
        && b3
            .vertices()
            .filter(|&v| b3.is_trusted(v))
            .all(|v| b3.neighbors(v).count() == 2);

    let q = quotient_complex(b3)?;
    let x4 = build_config_complex(4)?;
    let mut map = Vec::new();
    for c in &x4.codes {
        map.push(q.vertex_index(&derived_label(c)));
    }
    let quotient_matches_x4 = map.iter().all(|m| m.is_some()) && {
        let map: Vec<usize> = map.iter().map(|m| m.expect("checked")).collect();
        let mut a: Vec<(usize, usize)> = x4
            .complex
            .edges
            .iter()
            .map(|&(x, y)| (map[x].min(map[y]), map[x].max(map[y])))
            .collect();
        let mut b: Vec<(usize, usize)> =
            q.complex.edges.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        a.sort();
        b.sort();
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        a == b && distinct.len() == 3
    };

    let element = word("s12 s23 s12 s13", 3);
    let form = split_form(&element)?;
    let top = top_generator(3).perm(3);
    let translate = b3.left_mult_map(&form)?;
    let root = b3.root();
    let acts_freely = translate.iter().all(|(v, u)| v != u);
    let displacement = b3.distance(&form.w)?;
    // orbit-mates of the root within reach are exactly the powers of g
    let root_label = OrbitLabel::of(Perm::identity(3));
    let mates: BTreeSet<u32> = b3
        .vertices()
        .filter(|&v| b3.level(v) + 3 <= b3.radius() && OrbitLabel::of(b3.perm(v)) == root_label)
        .collect();
    let mut reached = BTreeSet::from([root]);
    let inverse = b3.left_mult_map(&form.inverse()?)?;
    for step in [&translate, &inverse] {
        let mut v = root;
        while let Some(&u) = step.get(&v) {
            reached.insert(u);
            v = u;
        }
    }
    let generates_deck_action = mates.is_subset(&reached);
    Ok(Pj3Report {
        is_line,
        orbit_count: q.labels.len(),
        quotient_counts: q.complex.counts(),
        quotient_matches_x4,
        pure: element.is_pure(),
        top_part_is_reversal: word("s12 s23 s12", 3).pi() == top,
        displacement,
        acts_freely,
        generates_deck_action,
        element,
    })
}
