//! Balls in the Cayley 2-complex of a cactus subgroup.
//!
//! The ball is grown breadth first from the identity. Every vertex closer to
//! the root than the radius is saturated: it receives one edge per generator
//! and every relator square through it is closed, identifying vertices with a
//! union-find structure whenever two paths around a square end at distinct
//! vertices (coset enumeration style). Each vertex carries its image in the
//! symmetric group; merging vertices with different images is a hard error.
//!
//! The complexes handled here (`J_3^{[2]}`, `J_3`, `J_4^{[2,3]}`) are CAT(0)
//! square complexes, so every identification between vertices at distance at
//! most `radius` is witnessed by squares whose lowest corner is saturated.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::presentation::Presentation;
use crate::split::{sigma, SplitForm};
use crate::words::{Generator, Word};

pub type VertexId = u32;

const NONE: u32 = u32::MAX;
const NO_GEN: u8 = u8::MAX;

/// Presentations whose balls are supported.
pub const SUPPORTED: [&str; 3] = ["j3-2", "j3", "j4-23"];

/// A relator square: `corners[i+1] = corners[i] · labels[i]` (indices mod 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub corners: [VertexId; 4],
    pub labels: [Generator; 4],
}

impl Square {
    /// The two generators on the edges meeting at corner `i`.
    pub fn corner_pair(&self, i: usize) -> (Generator, Generator) {
        let a = self.labels[(i + 3) % 4];
        let b = self.labels[i];
        (a.min(b), a.max(b))
    }
}

#[derive(Clone, Debug)]
pub struct TessBall {
    presentation: Presentation,
    radius: u32,
    gens: Vec<Generator>,
    gen_index: [[u8; 10]; 10],
    edges: Vec<VertexId>,
    level: Vec<u32>,
    perm: Vec<Perm>,
    parent: Vec<(VertexId, u8)>,
    squares: Vec<Square>,
    squares_at: Vec<Vec<u32>>,
}

impl TessBall {
    /// Builds the ball of the given radius; see the module documentation.
    pub fn build(p: &Presentation, radius: u32) -> Result<Self> {
        if !SUPPORTED.contains(&p.name()) {
            return Err(Error::UnsupportedPresentation(p.name().to_string()));
        }
        let mut builder = Builder::new(p, radius);
        builder.run()?;
        let ball = builder.finish(p)?;
        ball.check_structure()?;
        Ok(ball)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn degree(&self) -> u8 {
        self.presentation.degree()
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn root(&self) -> VertexId {
        0
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn vertex_count(&self) -> usize {
        self.level.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.level.len() as VertexId
    }

    /// Number of undirected edges with both endpoints in the ball.
    pub fn edge_count(&self) -> usize {
        self.edges.iter().filter(|&&e| e != NONE).count() / 2
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn squares_at(&self, v: VertexId) -> impl Iterator<Item = &Square> {
        self.squares_at[v as usize]
            .iter()
            .map(move |&i| &self.squares[i as usize])
    }

    pub fn level(&self, v: VertexId) -> u32 {
        self.level[v as usize]
    }

    pub fn perm(&self, v: VertexId) -> Perm {
        self.perm[v as usize]
    }

    /// A vertex is trusted when all of its edges are present, so walks may
    /// step out of it.
    pub fn is_trusted(&self, v: VertexId) -> bool {
        self.level[v as usize] < self.radius
    }

    /// All edges, squares and hence the full link of `v` are present.
    pub fn is_interior(&self, v: VertexId) -> bool {
        self.level[v as usize] + 2 <= self.radius
    }

    pub fn gen_index(&self, g: Generator) -> Option<usize> {
        let i = self.gen_index[g.p() as usize][g.q() as usize];
        (i != NO_GEN).then_some(i as usize)
    }

    pub fn edge(&self, v: VertexId, g: Generator) -> Option<VertexId> {
        let s = self.gen_index(g)?;
        self.edge_by_index(v, s)
    }

    fn edge_by_index(&self, v: VertexId, s: usize) -> Option<VertexId> {
        let e = self.edges[v as usize * self.gens.len() + s];
        (e != NONE).then_some(e)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (Generator, VertexId)> + '_ {
        self.gens
            .iter()
            .enumerate()
            .filter_map(move |(s, &g)| self.edge_by_index(v, s).map(|u| (g, u)))
    }

    /// Follows `w` from `start`; every vertex stepped out of must be trusted.
    pub fn trace_from(&self, start: VertexId, w: &Word) -> Result<VertexId> {
        let mut v = start;
        for (index, &g) in w.letters().iter().enumerate() {
            let s = self
                .gen_index(g)
                .ok_or_else(|| Error::ForeignGenerator(g.to_string()))?;
            if !self.is_trusted(v) {
                return Err(Error::RadiusExceeded { index });
            }
            v = self
                .edge_by_index(v, s)
                .ok_or(Error::RadiusExceeded { index })?;
        }
        Ok(v)
    }

    /// The vertex reached from the root by reading `w`.
    pub fn trace(&self, w: &Word) -> Result<VertexId> {
        self.trace_from(self.root(), w)
    }

    /// Shortlex-least geodesic word from the root to `v`.
    pub fn geodesic(&self, v: VertexId) -> Word {
        let mut letters = Vec::with_capacity(self.level(v) as usize);
        let mut cur = v;
        while cur != self.root() {
            let (par, s) = self.parent[cur as usize];
            letters.push(self.gens[s as usize]);
            cur = par;
        }
        letters.reverse();
        Word::new(self.degree(), letters).expect("letters of the presentation")
    }

    /// Shortens `w` by replacing any non-geodesic subword of length at most
    /// the radius with a geodesic for the same element, until every such
    /// window is geodesic. The result always represents the same element.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        let mut letters: Vec<Generator> = w.free_reduce().letters().to_vec();
        for &g in &letters {
            if self.gen_index(g).is_none() {
                return Err(Error::ForeignGenerator(g.to_string()));
            }
        }
        let window = self.radius.max(1) as usize;
        let mut start = 0;
        while start < letters.len() {
            let mut v = self.root();
            let mut replaced = false;
            let end = (start + window).min(letters.len());
            for j in start..end {
                let s = self.gen_index(letters[j]).expect("checked above");
                v = self.edge_by_index(v, s).expect("window stays trusted");
                let len = (j - start + 1) as u32;
                if self.level(v) < len {
                    let geo = self.geodesic(v);
                    letters.splice(start..=j, geo.letters().iter().copied());
                    start = start.saturating_sub(window);
                    replaced = true;
                    break;
                }
            }
            if !replaced {
                start += 1;
            }
        }
        Word::new(self.degree(), letters)
    }

    /// Vertex of the element represented by `w`, for words of any length
    /// whose element lies in the ball.
    pub fn evaluate(&self, w: &Word) -> Result<VertexId> {
        if w.len() as u32 <= self.radius {
            return self.trace(w);
        }
        let reduced = self.reduce(w)?;
        self.trace(&reduced).map_err(|_| {
            Error::Undecided(format!(
                "reduced word of length {} does not fit in radius {}",
                reduced.len(),
                self.radius
            ))
        })
    }

    /// Decides `u = v` in the group.
    pub fn wp_equal(&self, u: &Word, v: &Word) -> Result<bool> {
        if u.len() as u32 <= self.radius && v.len() as u32 <= self.radius {
            return Ok(self.trace(u)? == self.trace(v)?);
        }
        let x = self.evaluate(&u.concat(&v.inverse()))?;
        Ok(x == self.root())
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(self.evaluate(w)? == self.root())
    }

    /// Word-metric distance from the identity to the element `w`.
    pub fn distance(&self, w: &Word) -> Result<u32> {
        Ok(self.level(self.evaluate(w)?))
    }

    /// Sphere sizes for the certified levels `0..radius`.
    pub fn sphere_sizes(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.radius as usize];
        for &l in &self.level {
            if l < self.radius {
                counts[l as usize] += 1;
            }
        }
        counts
    }

    /// Vertex counts for every level `0..=radius`.
    pub fn level_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.radius as usize + 1];
        for &l in &self.level {
            counts[l as usize] += 1;
        }
        counts
    }

    /// Vertex map `v -> g·v` of a pure-cactus element `g = (w, flip)` under
    /// the coset action: `v -> w · σ^flip(geodesic(v))`. Defined on every
    /// vertex whose image walk stays inside the trusted region.
    pub fn left_mult_map(&self, g: &SplitForm) -> Result<BTreeMap<VertexId, VertexId>> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch(g.degree(), self.degree()));
        }
        let start = self.evaluate(&g.w)?;
        let span = self.level(start);
        let mut map = BTreeMap::new();
        for v in self.vertices() {
            if self.level(v) + span > self.radius {
                continue;
            }
            let tail = self.geodesic(v);
            let tail = if g.flip { sigma(&tail)? } else { tail };
            map.insert(v, self.trace_from(start, &tail)?);
        }
        Ok(map)
    }

    /// Left multiplication by a word in the ball's generators.
    pub fn left_mult_word(&self, w: &Word) -> Result<BTreeMap<VertexId, VertexId>> {
        self.left_mult_map(&SplitForm {
            w: w.clone(),
            flip: false,
        })
    }

    /// Link pairs expected at every interior vertex: `{first, last}` letters
    /// of each rotation of each square relator.
    pub fn expected_link(&self) -> BTreeSet<(Generator, Generator)> {
        let mut pairs = BTreeSet::new();
        for r in self.presentation.square_relators() {
            let l = r.letters();
            for i in 0..4 {
                let a = l[i];
                let b = l[(i + 3) % 4];
                pairs.insert((a.min(b), a.max(b)));
            }
        }
        pairs
    }

    /// Link of `v` as the set of corner pairs of the squares through it.
    pub fn link(&self, v: VertexId) -> Vec<(Generator, Generator)> {
        let mut pairs = Vec::new();
        for sq in self.squares_at(v) {
            for i in 0..4 {
                if sq.corners[i] == v {
                    pairs.push(sq.corner_pair(i));
                }
            }
        }
        pairs.sort();
        pairs
    }

    /// Cyclic order of the generators around `v` when its link is a single
    /// cycle, starting at the first generator and moving towards the
    /// smaller of its two link neighbours.
    pub fn link_cycle(&self, v: VertexId) -> Option<Vec<Generator>> {
        let pairs = self.link(v);
        let mut adj: BTreeMap<Generator, Vec<Generator>> = BTreeMap::new();
        for &(a, b) in &pairs {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        if adj.len() != self.gens.len() || adj.values().any(|n| n.len() != 2) {
            return None;
        }
        let first = self.gens[0];
        let mut order = vec![first];
        let mut next = {
            let n = &adj[&first];
            if n[0].shortlex_rank() < n[1].shortlex_rank() {
                n[0]
            } else {
                n[1]
            }
        };
        let mut prev = first;
        while next != first {
            order.push(next);
            let n = &adj[&next];
            let after = if n[0] == prev { n[1] } else { n[0] };
            prev = next;
            next = after;
            if order.len() > self.gens.len() {
                return None;
            }
        }
        (order.len() == self.gens.len()).then_some(order)
    }

    /// Structural invariants of the finished ball.
    pub fn check_structure(&self) -> Result<()> {
        let g = self.gens.len();
        let gen_perms: Vec<Perm> = self.gens.iter().map(|s| s.perm(self.degree())).collect();
        for v in self.vertices() {
            for s in 0..g {
                let Some(u) = self.edge_by_index(v, s) else {
                    if self.is_trusted(v) {
                        return Err(Error::Inconsistency(format!(
                            "trusted vertex {v} misses edge {}",
                            self.gens[s]
                        )));
                    }
                    continue;
                };
                if self.edge_by_index(u, s) != Some(v) {
                    return Err(Error::Inconsistency(format!("edge {v}-{u} not involutive")));
                }
                if self.level(u).abs_diff(self.level(v)) != 1 {
                    return Err(Error::Inconsistency(format!(
                        "edge {v}-{u} joins levels {} and {}",
                        self.level(v),
                        self.level(u)
                    )));
                }
                if self.perm(u) != self.perm(v).compose(&gen_perms[s]) {
                    return Err(Error::Inconsistency(format!("edge {v}-{u} breaks permutation tags")));
                }
            }
        }
        let expected = self.expected_link();
        for v in self.vertices() {
            if !self.is_interior(v) {
                continue;
            }
            let link = self.link(v);
            let distinct: BTreeSet<_> = link.iter().copied().collect();
            if distinct.len() != link.len() || distinct != expected {
                return Err(Error::Inconsistency(format!(
                    "vertex {v} has link {link:?}, expected {expected:?}"
                )));
            }
        }
        Ok(())
    }
}

struct Builder {
    g: usize,
    radius: u32,
    gens: Vec<Generator>,
    gen_perm: Vec<Perm>,
    rotations: Vec<[usize; 4]>,
    table: Vec<u32>,
    uf: Vec<u32>,
    level: Vec<u32>,
    perm: Vec<Perm>,
    processed: Vec<bool>,
    pending: Vec<(u32, u32)>,
}

impl Builder {
    fn new(p: &Presentation, radius: u32) -> Self {
        let gens = p.generators().to_vec();
        let idx = |x: Generator| gens.iter().position(|&y| y == x).expect("relator letter");
        let mut rotations = Vec::new();
        for r in p.square_relators() {
            let l: Vec<usize> = r.letters().iter().map(|&x| idx(x)).collect();
            for i in 0..4 {
                rotations.push([l[i], l[(i + 1) % 4], l[(i + 2) % 4], l[(i + 3) % 4]]);
            }
        }
        Builder {
            g: gens.len(),
            radius,
            gen_perm: gens.iter().map(|s| s.perm(p.degree())).collect(),
            gens,
            rotations,
            table: Vec::new(),
            uf: Vec::new(),
            level: Vec::new(),
            perm: Vec::new(),
            processed: Vec::new(),
            pending: Vec::new(),
        }
    }

    fn add_vertex(&mut self, level: u32, perm: Perm) -> u32 {
        let id = self.uf.len() as u32;
        self.uf.push(id);
        self.level.push(level);
        self.perm.push(perm);
        self.processed.push(false);
        self.table.extend(std::iter::repeat_n(NONE, self.g));
        id
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.uf[x as usize] != x {
            let up = self.uf[self.uf[x as usize] as usize];
            self.uf[x as usize] = up;
            x = up;
        }
        x
    }

    fn edge(&mut self, v: u32, s: usize) -> Option<u32> {
        let t = self.table[v as usize * self.g + s];
        (t != NONE).then(|| self.find(t))
    }

    fn step_or_create(&mut self, v: u32, s: usize) -> u32 {
        if let Some(u) = self.edge(v, s) {
            return u;
        }
        let perm = self.perm[v as usize].compose(&self.gen_perm[s]);
        let u = self.add_vertex(self.level[v as usize] + 1, perm);
        self.table[v as usize * self.g + s] = u;
        self.table[u as usize * self.g + s] = v;
        u
    }

    fn coincidence(&mut self, a: u32, b: u32) -> Result<()> {
        self.pending.push((a, b));
        while let Some((x, y)) = self.pending.pop() {
            let x = self.find(x);
            let y = self.find(y);
            if x == y {
                continue;
            }
            if self.perm[x as usize] != self.perm[y as usize] {
                return Err(Error::Inconsistency(format!(
                    "merging vertices with permutations {} and {}",
                    self.perm[x as usize], self.perm[y as usize]
                )));
            }
            if self.level[x as usize] != self.level[y as usize] {
                return Err(Error::Inconsistency(format!(
                    "merging vertices at different levels {} and {}",
                    self.level[x as usize], self.level[y as usize]
                )));
            }
            let (keep, gone) = (x.min(y), x.max(y));
            self.uf[gone as usize] = keep;
            self.level[keep as usize] = self.level[keep as usize].min(self.level[gone as usize]);
            self.processed[keep as usize] |= self.processed[gone as usize];
            for s in 0..self.g {
                let slot = gone as usize * self.g + s;
                let t = self.table[slot];
                if t == NONE {
                    continue;
                }
                self.table[slot] = NONE;
                let t = self.find(t);
                let kslot = keep as usize * self.g + s;
                let k = self.table[kslot];
                if k == NONE {
                    self.table[kslot] = t;
                    self.table[t as usize * self.g + s] = keep;
                } else {
                    self.pending.push((k, t));
                }
            }
        }
        Ok(())
    }

    fn saturate(&mut self, v0: u32) -> Result<()> {
        for s in 0..self.g {
            let v = self.find(v0);
            self.step_or_create(v, s);
        }
        for i in 0..self.rotations.len() {
            let [a, b, c, d] = self.rotations[i];
            let v = self.find(v0);
            let va = self.edge(v, a).expect("saturated");
            let x = self.step_or_create(va, b);
            let v = self.find(v0);
            let vd = self.edge(v, d).expect("saturated");
            let y = self.step_or_create(vd, c);
            self.coincidence(x, y)?;
        }
        let v = self.find(v0);
        self.processed[v as usize] = true;
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        self.add_vertex(0, Perm::identity(self.gen_perm[0].degree()));
        loop {
            let mut i = 0u32;
            while (i as usize) < self.uf.len() {
                let v = i;
                i += 1;
                if self.uf[v as usize] != v
                    || self.processed[v as usize]
                    || self.level[v as usize] >= self.radius
                {
                    continue;
                }
                self.saturate(v)?;
            }
            // Merges can shorten distances; make sure every vertex that is
            // now inside the radius has been saturated.
            let dist = self.distances();
            let mut again = false;
            for v in 0..self.uf.len() {
                if self.uf[v] == v as u32 && dist[v] != u32::MAX {
                    self.level[v] = dist[v];
                    if dist[v] < self.radius && !self.processed[v] {
                        again = true;
                    }
                }
            }
            if !again {
                return Ok(());
            }
        }
    }

    fn distances(&mut self) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.uf.len()];
        let root = self.find(0);
        dist[root as usize] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for s in 0..self.g {
                if let Some(u) = self.edge(v, s) {
                    if dist[u as usize] == u32::MAX {
                        dist[u as usize] = dist[v as usize] + 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        dist
    }

    fn finish(mut self, p: &Presentation) -> Result<TessBall> {
        let root = self.find(0);
        let mut new_id = vec![NONE; self.uf.len()];
        let mut order = vec![root];
        let mut level = vec![0u32];
        let mut parent = vec![(0u32, NO_GEN)];
        new_id[root as usize] = 0;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            let lv = level[head];
            head += 1;
            if lv >= self.radius {
                continue;
            }
            for s in 0..self.g {
                let u = self.edge(v, s).expect("trusted vertices are saturated");
                if new_id[u as usize] == NONE {
                    new_id[u as usize] = order.len() as u32;
                    order.push(u);
                    level.push(lv + 1);
                    parent.push((head as u32 - 1, s as u8));
                }
            }
        }
        let g = self.g;
        let mut edges = vec![NONE; order.len() * g];
        for (nv, &v) in order.iter().enumerate() {
            for s in 0..g {
                if let Some(u) = self.edge(v, s) {
                    let nu = new_id[u as usize];
                    if nu != NONE {
                        edges[nv * g + s] = nu;
                    }
                }
            }
        }
        let perm: Vec<Perm> = order.iter().map(|&v| self.perm[v as usize]).collect();

        let mut gen_index = [[NO_GEN; 10]; 10];
        for (i, s) in self.gens.iter().enumerate() {
            gen_index[s.p() as usize][s.q() as usize] = i as u8;
        }

        let mut ball = TessBall {
            presentation: p.clone(),
            radius: self.radius,
            gens: self.gens.clone(),
            gen_index,
            edges,
            level,
            perm,
            parent,
            squares: Vec::new(),
            squares_at: Vec::new(),
        };
        ball.collect_squares(&self.rotations);
        Ok(ball)
    }
}

impl TessBall {
    fn collect_squares(&mut self, rotations: &[[usize; 4]]) {
        let mut seen: HashSet<Square> = HashSet::new();
        for v in self.vertices() {
            for rot in rotations {
                let mut corners = [v; 4];
                let mut cur = v;
                let mut ok = true;
                for k in 0..4 {
                    corners[k] = cur;
                    match self.edge_by_index(cur, rot[k]) {
                        Some(u) => cur = u,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok || cur != v {
                    continue;
                }
                let labels = rot.map(|s| self.gens[s]);
                seen.insert(canonical_square(corners, labels));
            }
        }
        let mut squares: Vec<Square> = seen.into_iter().collect();
        squares.sort();
        let mut at = vec![Vec::new(); self.vertex_count()];
        for (i, sq) in squares.iter().enumerate() {
            let distinct: BTreeSet<VertexId> = sq.corners.iter().copied().collect();
            for c in distinct {
                at[c as usize].push(i as u32);
            }
        }
        self.squares = squares;
        self.squares_at = at;
    }
}

/// Least representative of a square over its rotations and both directions.
fn canonical_square(corners: [VertexId; 4], labels: [Generator; 4]) -> Square {
    let mut best: Option<Square> = None;
    for start in 0..4 {
        let fwd = Square {
            corners: std::array::from_fn(|i| corners[(start + i) % 4]),
            labels: std::array::from_fn(|i| labels[(start + i) % 4]),
        };
        // Reversed traversal from the same corner: edge i goes backwards along labels[start-1-i].
        let rev = Square {
            corners: std::array::from_fn(|i| corners[(start + 4 - i) % 4]),
            labels: std::array::from_fn(|i| labels[(start + 3 - i) % 4]),
        };
        for cand in [fwd, rev] {
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
    }
    best.expect("four rotations")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{gen, word};

    fn j4(radius: u32) -> TessBall {
        TessBall::build(&Presentation::named("j4-23").unwrap(), radius).unwrap()
    }

    #[test]
    fn j4_small_balls() {
        let b = j4(1);
        assert_eq!(b.vertex_count(), 6);
        let b = j4(2);
        assert_eq!(b.level_counts(), vec![1, 5, 15]);
        let b = j4(3);
        assert_eq!(b.sphere_sizes(), vec![1, 5, 15]);
    }

    #[test]
    fn j3_2_ball_is_a_path() {
        let b = TessBall::build(&Presentation::named("j3-2").unwrap(), 3).unwrap();
        assert_eq!(b.vertex_count(), 7);
        assert_eq!(b.level_counts(), vec![1, 2, 2, 2]);
        assert!(b.squares().is_empty());
        for v in b.vertices() {
            assert!(b.neighbors(v).count() <= 2);
        }
    }

    #[test]
    fn trace_respects_relations() {
        let b = j4(4);
        let t = |s: &str| b.trace(&word(s, 4)).unwrap();
        assert_eq!(t("s12 s13"), t("s13 s23"));
        assert_eq!(t("s12 s34"), t("s34 s12"));
        assert_eq!(t(""), b.root());
        assert_ne!(t("s12 s13"), t("s13 s12"));
    }

    #[test]
    fn wp_and_distance_examples() {
        let b = j4(5);
        let w = |s: &str| word(s, 4);
        assert!(b.wp_equal(&w("s12 s13 s23 s13"), &w("")).unwrap());
        assert_eq!(b.distance(&w("s12")).unwrap(), 1);
        assert_eq!(b.distance(&w("s13 s24 s13 s24")).unwrap(), 4);
        assert_eq!(b.distance(&w("s12 s13 s23 s13")).unwrap(), 0);
        let j32 = TessBall::build(&Presentation::named("j3-2").unwrap(), 6).unwrap();
        assert!(!j32
            .wp_equal(&word("s12 s23 s12 s23", 3), &Word::identity(3))
            .unwrap());
    }

    #[test]
    fn trace_outside_radius_fails() {
        let b = j4(2);
        assert_eq!(
            b.trace(&word("s12 s23 s34", 4)),
            Err(Error::RadiusExceeded { index: 2 })
        );
        assert!(matches!(
            b.trace(&word("s14", 4)),
            Err(Error::ForeignGenerator(_))
        ));
    }

    #[test]
    fn interior_links_are_pentagons() {
        let b = j4(5);
        for v in b.vertices().filter(|&v| b.level(v) + 2 <= 5) {
            assert_eq!(b.neighbors(v).count(), 5);
            assert_eq!(b.squares_at(v).count(), 5);
            let cycle = b.link_cycle(v).unwrap();
            assert_eq!(
                cycle,
                vec![gen(1, 2), gen(1, 3), gen(2, 3), gen(2, 4), gen(3, 4)]
            );
        }
    }

    #[test]
    fn unsupported_presentation() {
        let p = Presentation::cactus(4).unwrap();
        assert!(matches!(
            TessBall::build(&p, 2),
            Err(Error::UnsupportedPresentation(_))
        ));
    }

    #[test]
    fn left_multiplication_by_involution() {
        let b = j4(4);
        let m = b.left_mult_word(&word("s12", 4)).unwrap();
        let s12 = b.trace(&word("s12", 4)).unwrap();
        assert_eq!(m[&b.root()], s12);
        assert_eq!(m[&s12], b.root());
        let id = b.left_mult_word(&Word::identity(4)).unwrap();
        assert!(id.iter().all(|(k, v)| k == v));
        assert_eq!(id.len(), b.vertex_count());
    }

    #[test]
    fn reduce_shortens_to_geodesic() {
        let b = j4(6);
        let w = word("s12 s13 s23 s13 s12 s34 s12 s34 s24", 4);
        let r = b.reduce(&w).unwrap();
        assert_eq!(r, word("s24", 4));
    }
}
