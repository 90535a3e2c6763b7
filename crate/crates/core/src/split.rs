//! The decomposition `J_n = J_n^{[2,n-1]} ⋊ <s_{1n}>` for `n = 3, 4`.
//!
//! Conjugation by the top generator `s_{1n}` sends `s_{p,q}` to
//! `s_{n+1-q, n+1-p}`; in degree 4 this is `s12 <-> s34`, `s13 <-> s24`,
//! `s23 -> s23`.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Generator, Word};

/// The top generator `s_{1n}`.
pub fn top_generator(degree: u8) -> Generator {
    Generator::new(1, degree).expect("degree >= 2")
}

fn check_split_degree(degree: u8) -> Result<()> {
    if degree == 3 || degree == 4 {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree(degree))
    }
}

/// Conjugation by `s_{1n}` on a single generator.
pub fn sigma_letter(g: Generator, degree: u8) -> Generator {
    Generator::new(degree + 1 - g.q(), degree + 1 - g.p()).expect("mirror of a valid generator")
}

/// Letterwise image of a word free of `s_{1n}` under conjugation by `s_{1n}`.
pub fn sigma(w: &Word) -> Result<Word> {
    let degree = w.degree();
    check_split_degree(degree)?;
    let top = top_generator(degree);
    if w.contains(top) {
        return Err(Error::ContainsTop(degree));
    }
    Word::new(
        degree,
        w.letters().iter().map(|&g| sigma_letter(g, degree)).collect(),
    )
}

/// An element `w · s_{1n}^flip` with `w` free of `s_{1n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SplitForm {
    pub w: Word,
    pub flip: bool,
}

impl SplitForm {
    pub fn identity(degree: u8) -> Self {
        SplitForm {
            w: Word::identity(degree),
            flip: false,
        }
    }

    pub fn degree(&self) -> u8 {
        self.w.degree()
    }

    /// `(w1, f1)·(w2, f2) = (w1 · σ^f1(w2), f1 xor f2)`; no group-level reduction.
    pub fn mul(&self, other: &SplitForm) -> Result<SplitForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let tail = if self.flip {
            sigma(&other.w)?
        } else {
            other.w.clone()
        };
        Ok(SplitForm {
            w: self.w.concat(&tail),
            flip: self.flip ^ other.flip,
        })
    }

    /// `(w, f)^{-1} = (σ^f(w^{-1}), f)`.
    pub fn inverse(&self) -> Result<SplitForm> {
        let inv = self.w.inverse();
        Ok(SplitForm {
            w: if self.flip { sigma(&inv)? } else { inv },
            flip: self.flip,
        })
    }

    /// The word `w` followed by `s_{1n}` when flipped.
    pub fn to_word(&self) -> Word {
        let mut letters = self.w.letters().to_vec();
        if self.flip {
            letters.push(top_generator(self.degree()));
        }
        Word::new(self.degree(), letters).expect("same degree")
    }
}

impl fmt::Display for SplitForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, flip={})", self.w, u8::from(self.flip))
    }
}

/// Moves every `s_{1n}` to the right end, conjugating the letters it passes over.
pub fn split_form(w: &Word) -> Result<SplitForm> {
    let degree = w.degree();
    check_split_degree(degree)?;
    let top = top_generator(degree);
    let mut flip = false;
    let mut out = Vec::with_capacity(w.len());
    for &g in w.letters() {
        if g == top {
            flip = !flip;
        } else if flip {
            out.push(sigma_letter(g, degree));
        } else {
            out.push(g);
        }
    }
    Ok(SplitForm {
        w: Word::new(degree, out)?,
        flip,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::words::word;

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&word("s12", 4)).unwrap(), word("s34", 4));
        assert_eq!(sigma(&word("s23", 4)).unwrap(), word("s23", 4));
        assert_eq!(sigma(&word("s13 s24", 4)).unwrap(), word("s24 s13", 4));
        assert_eq!(sigma(&word("s14", 4)), Err(Error::ContainsTop(4)));
        assert_eq!(sigma(&word("s12 s23", 3)).unwrap(), word("s23 s12", 3));
    }

    #[test]
    fn split_form_examples() {
        let f = split_form(&word("s12 s14 s12", 4)).unwrap();
        assert_eq!(f.w, word("s12 s34", 4));
        assert!(f.flip);
        let f = split_form(&word("s14 s14", 4)).unwrap();
        assert_eq!(f, SplitForm::identity(4));
        let g2 = word("s13 s24 s13 s24", 4);
        let f = split_form(&g2).unwrap();
        assert_eq!(f.w, g2);
        assert!(!f.flip);
        assert_eq!(split_form(&word("s12", 5)), Err(Error::UnsupportedDegree(5)));
    }

    #[test]
    fn split_mul_examples() {
        let w = SplitForm {
            w: word("s13 s24", 4),
            flip: false,
        };
        assert_eq!(w.mul(&SplitForm::identity(4)).unwrap(), w);
        let flip = SplitForm {
            w: Word::identity(4),
            flip: true,
        };
        let s12 = SplitForm {
            w: word("s12", 4),
            flip: false,
        };
        assert_eq!(
            flip.mul(&s12).unwrap(),
            SplitForm {
                w: word("s34", 4),
                flip: true
            }
        );
        assert_eq!(flip.mul(&flip).unwrap(), SplitForm::identity(4));
    }

    #[test]
    fn every_j4_relator_has_even_top_count() {
        let p = Presentation::cactus(4).unwrap();
        let top = top_generator(4);
        for r in p.relators() {
            let count = r.letters().iter().filter(|&&g| g == top).count();
            assert_eq!(count % 2, 0, "relator {r}");
        }
    }

    #[test]
    fn split_form_preserves_projection() {
        for text in ["s12 s14 s12", "s14 s13 s14 s23 s14", "s13 s24 s12 s34 s14"] {
            let w = word(text, 4);
            assert_eq!(split_form(&w).unwrap().to_word().pi(), w.pi(), "{text}");
        }
    }
}
