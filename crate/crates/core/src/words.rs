//! Generators `s_{p,q}` of the cactus group and words over them.
//!
//! Every generator is an involution, so a word is just a sequence of
//! generators; inverse decorations in the input are accepted and dropped.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Largest supported degree; generators print as `s<p><q>` with single digits.
pub const MAX_DEGREE: u8 = 9;

/// The generator `s_{p,q}` with `1 <= p < q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    p: u8,
    q: u8,
}

impl Generator {
    pub fn new(p: u8, q: u8) -> Result<Self> {
        if p >= 1 && p < q && q <= MAX_DEGREE {
            Ok(Generator { p, q })
        } else {
            Err(Error::InvalidGenerator { p, q })
        }
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn q(self) -> u8 {
        self.q
    }

    /// Number of points reversed, `q - p + 1`.
    pub fn span(self) -> u8 {
        self.q - self.p + 1
    }

    pub fn is_disjoint(self, other: Generator) -> bool {
        self.q < other.p || other.q < self.p
    }

    /// True when `[other.p, other.q]` is a proper subinterval of `[p, q]`.
    pub fn properly_contains(self, other: Generator) -> bool {
        self != other && self.p <= other.p && other.q <= self.q
    }

    /// Image of a nested generator under conjugation by `self`:
    /// `s_{m,r} -> s_{p+q-r, p+q-m}`.
    pub fn mirror(self, inner: Generator) -> Generator {
        let sum = self.p + self.q;
        Generator {
            p: sum - inner.q,
            q: sum - inner.p,
        }
    }

    pub fn perm(self, degree: u8) -> Perm {
        Perm::interval_reversal(self.p, self.q, degree)
    }

    /// Position in the fixed shortlex alphabet `s12 < s13 < s23 < s24 < s34 < s14`;
    /// generators outside degree 4 follow in `(p, q)` order.
    pub fn shortlex_rank(self) -> u32 {
        match (self.p, self.q) {
            (1, 2) => 0,
            (1, 3) => 1,
            (2, 3) => 2,
            (2, 4) => 3,
            (3, 4) => 4,
            (1, 4) => 5,
            (p, q) => 100 + 10 * p as u32 + q as u32,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}{}", self.p, self.q)
    }
}

/// A finite word in the generators of `J_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    degree: u8,
    letters: Vec<Generator>,
}

impl Word {
    pub fn new(degree: u8, letters: Vec<Generator>) -> Result<Self> {
        check_degree(degree)?;
        if let Some(g) = letters.iter().find(|g| g.q > degree) {
            return Err(Error::IndexOutOfRange {
                p: g.p,
                q: g.q,
                degree,
            });
        }
        Ok(Word { degree, letters })
    }

    pub fn identity(degree: u8) -> Self {
        Word {
            degree,
            letters: Vec::new(),
        }
    }

    /// Parses the shared word grammar: tokens `s<p><q>` with an optional
    /// `^-1`, separated by whitespace or `*`. The empty string and the lone
    /// token `e` denote the identity.
    pub fn parse(text: &str, degree: u8) -> Result<Self> {
        check_degree(degree)?;
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        let mut saw_identity = false;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() || c == b'*' {
                i += 1;
                continue;
            }
            if c == b'e' {
                let end = i + 1;
                if end < bytes.len() && !is_separator(bytes[end]) {
                    return Err(syntax(end, "expected separator after `e`"));
                }
                saw_identity = true;
                i = end;
                continue;
            }
            if c != b's' {
                return Err(syntax(i, format!("unexpected character `{}`", c as char)));
            }
            let digit = |j: usize| -> Result<u8> {
                match bytes.get(j) {
                    Some(d) if d.is_ascii_digit() => Ok(d - b'0'),
                    _ => Err(syntax(j, "expected a digit")),
                }
            };
            let p = digit(i + 1)?;
            let q = digit(i + 2)?;
            if p == 0 || p >= q {
                return Err(syntax(i, format!("generator s{p}{q} needs 1 <= p < q")));
            }
            if q > degree {
                return Err(Error::IndexOutOfRange { p, q, degree });
            }
            letters.push(Generator { p, q });
            i += 3;
            if bytes[i..].starts_with(b"^-1") {
                i += 3;
            }
            if i < bytes.len() && !is_separator(bytes[i]) {
                return Err(syntax(i, "expected separator"));
            }
        }
        if saw_identity && !letters.is_empty() {
            return Err(syntax(0, "`e` cannot be mixed with generators"));
        }
        Ok(Word { degree, letters })
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, g: Generator) -> bool {
        self.letters.contains(&g)
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.degree, other.degree);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            degree: self.degree.max(other.degree),
            letters,
        }
    }

    /// Same word with a different (not smaller than needed) degree.
    pub fn with_degree(&self, degree: u8) -> Result<Word> {
        Word::new(degree, self.letters.clone())
    }

    /// Inverse element: the reversed sequence, since every letter is an involution.
    pub fn inverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word {
            degree: self.degree,
            letters,
        }
    }

    /// Cancels adjacent equal letters until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word {
            degree: self.degree,
            letters: out,
        }
    }

    /// Image under the projection to the symmetric group.
    pub fn pi(&self) -> Perm {
        self.letters
            .iter()
            .fold(Perm::identity(self.degree), |acc, g| {
                acc.compose(&g.perm(self.degree))
            })
    }

    pub fn is_pure(&self) -> bool {
        self.pi().is_identity()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn check_degree(degree: u8) -> Result<()> {
    if (2..=MAX_DEGREE).contains(&degree) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree(degree))
    }
}

fn is_separator(b: u8) -> bool {
    b.is_ascii_whitespace() || b == b'*'
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

/// Shorthand for building a generator in tests and tables; panics on bad input.
pub fn gen(p: u8, q: u8) -> Generator {
    Generator::new(p, q).expect("valid generator")
}

/// Parses a word that is known to be well formed; panics otherwise.
pub fn word(text: &str, degree: u8) -> Word {
    Word::parse(text, degree).unwrap_or_else(|e| panic!("bad word `{text}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let w = Word::parse("s13 s24 s13 s24", 4).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.letters()[1], gen(2, 4));
        assert!(Word::parse("", 4).unwrap().is_empty());
        assert_eq!(Word::parse("s12^-1", 3).unwrap().letters(), &[gen(1, 2)]);
        assert_eq!(Word::parse("s12*s23 * s12^-1", 3).unwrap().len(), 3);
        assert!(Word::parse("e", 4).unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Word::parse("s12 s14", 3),
            Err(Error::IndexOutOfRange { p: 1, q: 4, degree: 3 })
        );
        assert!(matches!(Word::parse("s12 x", 3), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(Word::parse("s21", 3), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(Word::parse("s1", 3), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(Word::parse("s12s23", 3), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(Word::parse("s12^-2", 3), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("e s12", 3), Err(Error::Syntax { .. })));
        assert_eq!(Word::parse("s12", 10), Err(Error::UnsupportedDegree(10)));
    }

    #[test]
    fn generator_construction() {
        assert!(Generator::new(2, 2).is_err());
        assert!(Generator::new(3, 1).is_err());
        assert!(Generator::new(0, 1).is_err());
        assert_eq!(gen(1, 4).mirror(gen(1, 2)), gen(3, 4));
        assert_eq!(gen(1, 4).mirror(gen(2, 3)), gen(2, 3));
        assert!(gen(1, 3).properly_contains(gen(2, 3)));
        assert!(!gen(1, 3).properly_contains(gen(1, 3)));
        assert!(gen(1, 2).is_disjoint(gen(3, 4)));
        assert!(!gen(1, 2).is_disjoint(gen(2, 3)));
    }

    #[test]
    fn free_reduce_examples() {
        assert!(word("s12 s12", 3).free_reduce().is_empty());
        assert!(word("s12 s13 s13 s12", 3).free_reduce().is_empty());
        let w = word("s12 s13 s23 s13", 3);
        assert_eq!(w.free_reduce(), w);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(word("s12", 4).pi().images(), &[2, 1, 3, 4]);
        assert_eq!(word("s14", 4).pi().images(), &[4, 3, 2, 1]);
        assert!(word("s13 s24 s13 s24", 4).pi().is_identity());
        // s12 s13 = s13 s23: both send 1 -> 3, 2 -> 1, 3 -> 2.
        assert_eq!(word("s12 s13", 3).pi().images(), &[3, 1, 2]);
        assert_eq!(word("s13 s23", 3).pi(), word("s12 s13", 3).pi());
    }

    #[test]
    fn purity_examples() {
        assert!(word("s13 s24 s13 s24", 4).is_pure());
        assert!(!word("s12", 4).is_pure());
        assert!(Word::identity(4).is_pure());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            word("s13 s24 s12 s34 s14", 4).inverse(),
            word("s14 s34 s12 s24 s13", 4)
        );
        assert!(Word::identity(4).inverse().is_empty());
    }

    #[test]
    fn display_round_trips() {
        let w = word("s13 s24^-1 * s12", 4);
        assert_eq!(w.to_string(), "s13 s24 s12");
        assert_eq!(Word::parse(&w.to_string(), 4).unwrap(), w);
        assert_eq!(Word::identity(4).to_string(), "e");
    }
}
