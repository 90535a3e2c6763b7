use std::fmt;

use crate::words::MAX_DEGREE;

/// A permutation of `{1, ..., n}` stored by its images.
///
/// Composition follows function notation: `f.compose(&g)` is `x -> f(g(x))`,
/// so in a product of reversals the rightmost factor acts first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    images: [u8; MAX_DEGREE as usize],
}

impl Perm {
    pub fn identity(n: u8) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        let mut images = [0u8; MAX_DEGREE as usize];
        for (i, slot) in images.iter_mut().take(n as usize).enumerate() {
            *slot = i as u8 + 1;
        }
        Perm { n, images }
    }

    /// Builds a permutation from its 1-based images; `None` unless it is a bijection.
    pub fn from_images(images: &[u8]) -> Option<Self> {
        let n = images.len();
        if n > MAX_DEGREE as usize {
            return None;
        }
        let mut seen = [false; MAX_DEGREE as usize];
        let mut out = [0u8; MAX_DEGREE as usize];
        for (i, &x) in images.iter().enumerate() {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return None;
            }
            seen[x as usize - 1] = true;
            out[i] = x;
        }
        Some(Perm {
            n: n as u8,
            images: out,
        })
    }

    /// The reversal `i -> p + q - i` of the interval `[p, q]`.
    pub fn interval_reversal(p: u8, q: u8, n: u8) -> Self {
        let mut perm = Perm::identity(n);
        for i in p..=q {
            perm.images[i as usize - 1] = p + q - i;
        }
        perm
    }

    /// The full reversal `i -> n + 1 - i`.
    pub fn longest(n: u8) -> Self {
        Perm::interval_reversal(1, n, n)
    }

    pub fn degree(&self) -> u8 {
        self.n
    }

    pub fn images(&self) -> &[u8] {
        &self.images[..self.n as usize]
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for i in 0..self.n as usize {
            out.images[i] = self.images[other.images[i] as usize - 1];
        }
        out
    }

    pub fn inverse(&self) -> Perm {
        let mut out = *self;
        for i in 0..self.n as usize {
            out.images[self.images[i] as usize - 1] = i as u8 + 1;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images()
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.images().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
