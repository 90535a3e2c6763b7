//! Presentations of `J_n` and of the subgroups `J_n^S`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::words::{Generator, Word};

/// Generators `s_{p,q}` with `q - p + 1` in a chosen set of spans, together
/// with the square, disjoint-commutation and nesting relators among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    degree: u8,
    spans: Vec<u8>,
    generators: Vec<Generator>,
    relators: Vec<Word>,
}

impl Presentation {
    /// `J_n^S` for the span set `spans`; the generators are listed in shortlex order.
    pub fn subgroup(degree: u8, spans: &[u8]) -> Result<Self> {
        Word::identity(degree).with_degree(degree)?;
        let spans: BTreeSet<u8> = spans.iter().copied().collect();
        if spans.iter().any(|&s| s < 2 || s > degree) {
            return Err(Error::UnsupportedPresentation(format!(
                "spans {spans:?} outside [2, {degree}]"
            )));
        }
        let mut generators = Vec::new();
        for p in 1..degree {
            for q in p + 1..=degree {
                let g = Generator::new(p, q)?;
                if spans.contains(&g.span()) {
                    generators.push(g);
                }
            }
        }
        generators.sort_by_key(|g| g.shortlex_rank());

        let mut relators = Vec::new();
        let mut seen = BTreeSet::new();
        let mut push = |letters: Vec<Generator>| {
            let key = cyclic_key(&letters);
            if seen.insert(key) {
                relators.push(Word::new(degree, letters).expect("letters within degree"));
            }
        };
        for &x in &generators {
            push(vec![x, x]);
        }
        for &x in &generators {
            for &y in &generators {
                if x.is_disjoint(y) {
                    push(vec![x, y, x, y]);
                } else if x.properly_contains(y) {
                    push(vec![x, y, x, x.mirror(y)]);
                }
            }
        }

        let label = spans
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("");
        let name = if spans.len() == degree as usize - 1 {
            format!("j{degree}")
        } else {
            format!("j{degree}-{label}")
        };
        Ok(Presentation {
            name,
            degree,
            spans: spans.into_iter().collect(),
            generators,
            relators,
        })
    }

    /// The full cactus group `J_n`.
    pub fn cactus(degree: u8) -> Result<Self> {
        let spans: Vec<u8> = (2..=degree).collect();
        Presentation::subgroup(degree, &spans)
    }

    /// Looks up a presentation by name: `j<n>` or `j<n>-<spans>`, e.g. `j4-23`, `j3-2`, `j3`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::Unknown {
            kind: "group",
            name: name.to_string(),
        };
        let rest = name.strip_prefix('j').ok_or_else(bad)?;
        let (deg, spans) = match rest.split_once('-') {
            Some((d, s)) => (d, Some(s)),
            None => (rest, None),
        };
        let degree: u8 = deg.parse().map_err(|_| bad())?;
        match spans {
            None => Presentation::cactus(degree),
            Some(s) => {
                let spans = s
                    .bytes()
                    .map(|b| {
                        if b.is_ascii_digit() {
                            Ok(b - b'0')
                        } else {
                            Err(bad())
                        }
                    })
                    .collect::<Result<Vec<u8>>>()?;
                if spans.is_empty() {
                    return Err(bad());
                }
                Presentation::subgroup(degree, &spans)
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn spans(&self) -> &[u8] {
        &self.spans
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn has_generator(&self, g: Generator) -> bool {
        self.generators.contains(&g)
    }

    /// Relators of length four (the 2-cells of the Cayley complex).
    pub fn square_relators(&self) -> impl Iterator<Item = &Word> {
        self.relators.iter().filter(|r| r.len() == 4)
    }
}

/// Canonical key of a cyclic word up to rotation and reversal.
fn cyclic_key(letters: &[Generator]) -> Vec<Generator> {
    let n = letters.len();
    let mut best: Option<Vec<Generator>> = None;
    for dir in [false, true] {
        for start in 0..n {
            let rot: Vec<Generator> = (0..n)
                .map(|i| {
                    if dir {
                        letters[(start + n - i) % n]
                    } else {
                        letters[(start + i) % n]
                    }
                })
                .collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{gen, word};

    #[test]
    fn j4_23_presentation() {
        let p = Presentation::named("j4-23").unwrap();
        assert_eq!(p.name(), "j4-23");
        assert_eq!(
            p.generators(),
            &[gen(1, 2), gen(1, 3), gen(2, 3), gen(2, 4), gen(3, 4)]
        );
        assert_eq!(p.relators().len(), 8);
        assert_eq!(p.square_relators().count(), 3);
        let has = |w: &str| {
            let target = cyclic_key(word(w, 4).letters());
            p.relators().iter().any(|r| cyclic_key(r.letters()) == target)
        };
        assert!(has("s12 s34 s12 s34"));
        assert!(has("s12 s13 s23 s13"));
        assert!(has("s23 s24 s34 s24"));
    }

    #[test]
    fn j4_presentation_matches_listed_relations() {
        let p = Presentation::cactus(4).unwrap();
        assert_eq!(p.name(), "j4");
        assert_eq!(p.generators().len(), 6);
        assert_eq!(p.relators().len(), 12);
        // s12 s14 = s14 s34 as the cyclic relator s12 s14 s34 s14
        let target = cyclic_key(word("s12 s14 s34 s14", 4).letters());
        assert!(p.relators().iter().any(|r| cyclic_key(r.letters()) == target));
    }

    #[test]
    fn j3_2_is_free_product_of_two_involutions() {
        let p = Presentation::named("j3-2").unwrap();
        assert_eq!(p.generators(), &[gen(1, 2), gen(2, 3)]);
        assert_eq!(p.relators(), &[word("s12 s12", 3), word("s23 s23", 3)]);
    }

    #[test]
    fn unknown_names() {
        assert!(Presentation::named("x4").is_err());
        assert!(Presentation::named("j4-").is_err());
        assert!(Presentation::named("j4-5").is_err());
        assert!(Presentation::named("j4-2a").is_err());
    }
}
