//! Finite 2-dimensional cell complexes and the invariants of closed surfaces.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// One traversal of an edge in a face boundary; `forward` runs tail to head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeUse {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex2 {
    pub vertices: Vec<String>,
    /// `(tail, head)` for each edge; loops and parallel edges are allowed.
    pub edges: Vec<(usize, usize)>,
    /// Closed boundary walk of each face.
    pub faces: Vec<Vec<EdgeUse>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    Sphere,
    /// Orientable of the given genus, at least one.
    Orientable(u32),
    /// Connected sum of the given number of projective planes.
    NonOrientable(u32),
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Sphere => write!(f, "sphere"),
            Surface::Orientable(g) => write!(f, "S{g}"),
            Surface::NonOrientable(k) => write!(f, "N{k}"),
        }
    }
}

impl CellComplex2 {
    /// Checks endpoints and that every face boundary closes up.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(usize, usize)>,
        faces: Vec<Vec<EdgeUse>>,
    ) -> Result<Self> {
        let nv = vertices.len();
        if let Some(i) = edges.iter().position(|&(a, b)| a >= nv || b >= nv) {
            return Err(Error::Inconsistency(format!("edge {i} has a missing endpoint")));
        }
        let c = CellComplex2 {
            vertices,
            edges,
            faces,
        };
        for (f, walk) in c.faces.iter().enumerate() {
            if walk.is_empty() {
                return Err(Error::Inconsistency(format!("face {f} has an empty boundary")));
            }
            for (k, u) in walk.iter().enumerate() {
                if u.edge >= c.edges.len() {
                    return Err(Error::Inconsistency(format!("face {f} uses a missing edge")));
                }
                let next = walk[(k + 1) % walk.len()];
                if c.head(*u) != c.tail(next) {
                    return Err(Error::Inconsistency(format!(
                        "boundary of face {f} breaks after step {k}"
                    )));
                }
            }
        }
        Ok(c)
    }

    fn tail(&self, u: EdgeUse) -> usize {
        let (a, b) = self.edges[u.edge];
        if u.forward {
            a
        } else {
            b
        }
    }

    fn head(&self, u: EdgeUse) -> usize {
        let (a, b) = self.edges[u.edge];
        if u.forward {
            b
        } else {
            a
        }
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.faces.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Faces and directions of every use of each edge.
    fn uses(&self) -> Vec<Vec<(usize, bool)>> {
        let mut out = vec![Vec::new(); self.edges.len()];
        for (f, walk) in self.faces.iter().enumerate() {
            for u in walk {
                out[u.edge].push((f, u.forward));
            }
        }
        out
    }

    /// Every edge lies on exactly two face sides.
    pub fn is_closed(&self) -> bool {
        self.uses().iter().all(|u| u.len() == 2)
    }

    /// Orients faces breadth first so that every edge is used once in each
    /// direction; `false` when the assignment runs into a contradiction.
    pub fn orientable(&self) -> Result<bool> {
        let uses = self.uses();
        if let Some(e) = uses.iter().position(|u| u.len() != 2) {
            return Err(Error::NotASurface(format!(
                "edge {e} lies on {} face sides",
                uses[e].len()
            )));
        }
        let mut sign: Vec<Option<bool>> = vec![None; self.faces.len()];
        for start in 0..self.faces.len() {
            if sign[start].is_some() {
                continue;
            }
            sign[start] = Some(true);
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                let sf = sign[f].expect("queued faces are signed");
                for u in &self.faces[f] {
                    let [a, b] = [uses[u.edge][0], uses[u.edge][1]];
                    if a == b {
                        return Ok(false);
                    }
                    let (g, fwd) = if a == (f, u.forward) { b } else { a };
                    // `g` must traverse the edge against `f`'s direction
                    let here = u.forward == sf;
                    let want = fwd != here;
                    match sign[g] {
                        None => {
                            sign[g] = Some(want);
                            queue.push_back(g);
                        }
                        Some(s) if s != want => return Ok(false),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(true)
    }

    /// Classification of a closed connected surface from orientability and
    /// Euler characteristic.
    pub fn classify(&self) -> Result<Surface> {
        if !self.is_connected() {
            return Err(Error::NotASurface("complex is disconnected".into()));
        }
        let chi = self.euler_characteristic();
        let orientable = self.orientable()?;
        if chi > 2 || (orientable && chi % 2 != 0) {
            return Err(Error::NotASurface(format!("impossible Euler characteristic {chi}")));
        }
        Ok(match (orientable, chi) {
            (true, 2) => Surface::Sphere,
            (true, c) => Surface::Orientable(((2 - c) / 2) as u32),
            (false, c) if c < 2 => Surface::NonOrientable((2 - c) as u32),
            _ => return Err(Error::NotASurface("non-orientable with chi = 2".into())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(edge: usize) -> EdgeUse {
        EdgeUse { edge, forward: true }
    }

    fn bw(edge: usize) -> EdgeUse {
        EdgeUse {
            edge,
            forward: false,
        }
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn single_square_is_a_disk() {
        let c = CellComplex2::new(
            names(4),
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            vec![vec![fw(0), fw(1), fw(2), fw(3)]],
        )
        .unwrap();
        assert_eq!(c.euler_characteristic(), 1);
        assert!(!c.is_closed());
        assert!(c.orientable().is_err());
    }

    #[test]
    fn two_squares_make_a_sphere() {
        let c = CellComplex2::new(
            names(4),
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            vec![
                vec![fw(0), fw(1), fw(2), fw(3)],
                vec![bw(3), bw(2), bw(1), bw(0)],
            ],
        )
        .unwrap();
        assert!(c.is_closed());
        assert_eq!(c.classify().unwrap(), Surface::Sphere);
    }

    #[test]
    fn torus_and_klein_bottle() {
        // one vertex, edges a and b
        let torus = CellComplex2::new(
            names(1),
            vec![(0, 0), (0, 0)],
            vec![vec![fw(0), fw(1), bw(0), bw(1)]],
        )
        .unwrap();
        assert_eq!(torus.classify().unwrap(), Surface::Orientable(1));
        let klein = CellComplex2::new(
            names(1),
            vec![(0, 0), (0, 0)],
            vec![vec![fw(0), fw(1), bw(0), fw(1)]],
        )
        .unwrap();
        assert_eq!(klein.classify().unwrap(), Surface::NonOrientable(2));
        assert_eq!(klein.classify().unwrap().to_string(), "N2");
    }

    #[test]
    fn projective_plane() {
        let rp2 = CellComplex2::new(names(1), vec![(0, 0)], vec![vec![fw(0), fw(0)]]).unwrap();
        assert_eq!(rp2.classify().unwrap(), Surface::NonOrientable(1));
    }

    #[test]
    fn broken_boundary_is_rejected() {
        let r = CellComplex2::new(names(3), vec![(0, 1), (1, 2)], vec![vec![fw(0), fw(1)]]);
        assert!(r.is_err());
    }
}
