//! Pure elements of `J_4` of small displacement and the two presentations
//! of `PJ_4` built from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::presentation::Presentation;
use crate::rewrite::all_words;
use crate::split::{split_form, top_generator, SplitForm};
use crate::tess::{TessBall, VertexId};
use crate::words::Word;

/// The ten named pure elements, as words in the six generators of `J_4`.
pub const REFERENCE_ELEMENTS: [&str; 10] = [
    "s13 s24 s12 s34 s14",
    "s13 s24 s13 s24",
    "s13 s34 s23 s12 s14",
    "s13 s34 s13 s23 s14",
    "s23 s12 s23 s13",
    "s23 s12 s24 s12 s14",
    "s23 s34 s13 s34 s14",
    "s24 s34 s23 s34",
    "s24 s12 s23 s34 s14",
    "s24 s23 s13 s34 s14",
];

/// Relators of the six-relator presentation.
pub const SIX_RELATORS: [&str; 6] = [
    "g1 g10^-1 g2^-1",
    "g9 g5^-1 g4",
    "g5 g1 g6^-1",
    "g8 g10 g7^-1",
    "g8 g3^-1 g4",
    "g2 g9 g7^-1 g6 g3^-1",
];

/// The same relations as they arise from the polygon's vertex cycles.
pub const OUTLINE_RELATORS: [&str; 6] = [
    "g3 g6^-1 g7 g9^-1 g2^-1",
    "g3 g8^-1 g4^-1",
    "g5 g9^-1 g4^-1",
    "g5 g1 g6^-1",
    "g8 g10 g7^-1",
    "g10 g1^-1 g2",
];

/// The single relator of the one-relator presentation.
pub const SINGLE_RELATOR: &str = "g2 g9 g10^-1 g8^-1 g4 g9 g2 g10 g8^-1 g4^-1";

/// Default elimination order for [`tietze_eliminate`].
pub const ELIMINATION_ORDER: [u8; 5] = [1, 5, 6, 7, 3];

/// A deck transformation word for a one-sided loop of the quotient surface.
pub const ALPHA2: &str = "g8^-1 g4 g9 g2 g10";

pub fn reference_element(i: u8) -> Word {
    crate::words::word(REFERENCE_ELEMENTS[i as usize - 1], 4)
}

/// A letter `g_i` or `g_i^{-1}` of an abstract word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GLetter {
    pub index: u8,
    pub inverse: bool,
}

impl GLetter {
    fn inv(self) -> GLetter {
        GLetter {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for GLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}{}", self.index, if self.inverse { "^-1" } else { "" })
    }
}

/// A word in the abstract symbols `g_1, ..., g_10` and their inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GWord(pub Vec<GLetter>);

impl GWord {
    /// Parses tokens `g<i>` or `g<i>^-1` separated by whitespace.
    pub fn parse(text: &str) -> Result<GWord> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let pos = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = pos + token.len();
            let bad = |msg: &str| Error::Syntax {
                pos,
                msg: format!("{msg} in `{token}`"),
            };
            let body = token.strip_prefix('g').ok_or_else(|| bad("expected `g`"))?;
            let (num, inverse) = match body.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (body, false),
            };
            let index: u8 = num.parse().map_err(|_| bad("expected an index"))?;
            if !(1..=10).contains(&index) {
                return Err(bad("index outside 1..=10"));
            }
            letters.push(GLetter { index, inverse });
        }
        Ok(GWord(letters))
    }

    pub fn inverse(&self) -> GWord {
        GWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Free and cyclic reduction.
    pub fn cyclic_reduce(&self) -> GWord {
        let mut out: Vec<GLetter> = Vec::new();
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        while out.len() >= 2 && out[0] == out[out.len() - 1].inv() {
            out.pop();
            out.remove(0);
        }
        GWord(out)
    }

    /// Least rotation of the word or of its inverse; equal keys mean the
    /// cyclic words agree up to rotation and inversion.
    pub fn cyclic_key(&self) -> GWord {
        let r = self.cyclic_reduce();
        let mut best: Option<Vec<GLetter>> = None;
        for w in [r.0.clone(), r.inverse().0] {
            for k in 0..w.len().max(1) {
                let mut rot = w[k.min(w.len())..].to_vec();
                rot.extend_from_slice(&w[..k.min(w.len())]);
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        GWord(best.unwrap_or_default())
    }

    /// The `J_4` word obtained by substituting the named elements.
    pub fn expand(&self) -> Word {
        let mut letters = Vec::new();
        for l in &self.0 {
            let w = reference_element(l.index);
            let w = if l.inverse { w.inverse() } else { w };
            letters.extend_from_slice(w.letters());
        }
        Word::new(4, letters).expect("degree 4 letters")
    }

    fn count(&self, index: u8) -> usize {
        self.0.iter().filter(|l| l.index == index).count()
    }

    fn substitute(&self, index: u8, by: &GWord) -> GWord {
        let inv = by.inverse();
        let mut out = Vec::new();
        for &l in &self.0 {
            if l.index == index {
                out.extend_from_slice(if l.inverse { &inv.0 } else { &by.0 });
            } else {
                out.push(l);
            }
        }
        GWord(out).cyclic_reduce()
    }
}

impl fmt::Display for GWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Removes generators one at a time: for each target, the shortest relator
/// containing it exactly once (first in list order on ties) is solved for
/// it and the solution substituted everywhere else. Returns the relators
/// that remain, cyclically reduced.
pub fn tietze_eliminate(relators: &[GWord], order: &[u8]) -> Result<Vec<GWord>> {
    let mut rels: Vec<GWord> = relators.iter().map(|r| r.cyclic_reduce()).collect();
    for &t in order {
        let pick = rels
            .iter()
            .enumerate()
            .filter(|(_, r)| r.count(t) == 1)
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i)
            .ok_or_else(|| {
                Error::Inconsistency(format!("no relator contains g{t} exactly once"))
            })?;
        let r = rels.remove(pick);
        let at = r.0.iter().position(|l| l.index == t).expect("counted");
        // rotate so the target leads: t^e * rest = e
        let mut rot = r.0[at..].to_vec();
        rot.extend_from_slice(&r.0[..at]);
        let lead = rot[0];
        let rest = GWord(rot[1..].to_vec());
        let value = if lead.inverse { rest } else { rest.inverse() };
        rels = rels.iter().map(|x| x.substitute(t, &value)).collect();
        rels.retain(|x| !x.is_empty());
    }
    Ok(rels)
}

/// Displacement of a split form: level of the vertex of its `w` part.
pub fn displacement(ball: &TessBall, g: &SplitForm) -> Result<u32> {
    ball.distance(&g.w)
}

/// Group-element key of a `J_4` word in a `J_4^{[2,3]}` ball.
pub fn element_key(ball: &TessBall, w: &Word) -> Result<(VertexId, bool)> {
    let f = split_form(w)?;
    Ok((ball.evaluate(&f.w)?, f.flip))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureElement {
    pub form: SplitForm,
    pub vertex: VertexId,
    pub displacement: u32,
}

/// Pure elements `g` with `d(e, g·e) <= radius`: vertices whose permutation
/// is the identity (`flip = 0`) or the full reversal (`flip = 1`).
pub fn enumerate_pure(ball: &TessBall, radius: u32) -> Result<Vec<PureElement>> {
    if ball.radius() < radius + 1 {
        return Err(Error::RadiusTooSmall {
            have: ball.radius(),
            need: radius + 1,
        });
    }
    let degree = ball.degree();
    let id = Perm::identity(degree);
    let top = top_generator(degree).perm(degree);
    let mut out = Vec::new();
    for v in ball.vertices() {
        if ball.level(v) > radius {
            continue;
        }
        let flip = if ball.perm(v) == id {
            false
        } else if ball.perm(v) == top {
            true
        } else {
            continue;
        };
        out.push(PureElement {
            form: SplitForm {
                w: ball.geodesic(v),
                flip,
            },
            vertex: v,
            displacement: ball.level(v),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ReferenceMatch {
    pub name: String,
    pub word: Word,
    pub form: SplitForm,
    pub vertex: VertexId,
    pub displacement: u32,
    pub found: bool,
}

#[derive(Clone, Debug)]
pub struct MatchReport {
    pub matches: Vec<ReferenceMatch>,
    /// Nontrivial enumerated elements not equal to any listed element.
    pub unmatched_found: Vec<SplitForm>,
    pub flip_zero: usize,
    pub flip_one: usize,
    /// Only the three length-four elements and their inverses have flip 0.
    pub flips_as_expected: bool,
    pub inverse_closed: bool,
}

impl MatchReport {
    pub fn passed(&self) -> bool {
        self.unmatched_found.is_empty()
            && self.matches.iter().all(|m| m.found)
            && self.matches.len() == 20
            && self.flips_as_expected
            && self.inverse_closed
    }
}

/// Compares the enumerated elements with `g_i^{±1}` as group elements.
pub fn match_reference_list(ball: &TessBall, found: &[PureElement]) -> Result<MatchReport> {
    let found_keys: BTreeSet<(VertexId, bool)> = found
        .iter()
        .filter(|e| !(e.vertex == ball.root() && !e.form.flip))
        .map(|e| (e.vertex, e.form.flip))
        .collect();
    let mut matches = Vec::new();
    let mut reference_keys = BTreeSet::new();
    let mut flips_as_expected = true;
    for i in 1..=10u8 {
        for inverse in [false, true] {
            let base = reference_element(i);
            let word = if inverse { base.inverse() } else { base };
            let form = split_form(&word)?;
            let vertex = ball.evaluate(&form.w)?;
            let key = (vertex, form.flip);
            reference_keys.insert(key);
            let expect_flip = !matches!(i, 2 | 5 | 8);
            flips_as_expected &= form.flip == expect_flip;
            matches.push(ReferenceMatch {
                name: format!("g{i}{}", if inverse { "^-1" } else { "" }),
                word,
                form,
                vertex,
                displacement: ball.level(vertex),
                found: found_keys.contains(&key),
            });
        }
    }
    let unmatched_found = found
        .iter()
        .filter(|e| {
            let key = (e.vertex, e.form.flip);
            found_keys.contains(&key) && !reference_keys.contains(&key)
        })
        .map(|e| e.form.clone())
        .collect();
    let mut inverse_closed = true;
    for e in found {
        let inv = e.form.inverse()?;
        let key = (ball.evaluate(&inv.w)?, inv.flip);
        inverse_closed &= found.iter().any(|f| (f.vertex, f.form.flip) == key);
    }
    let flip_zero = found_keys.iter().filter(|k| !k.1).count();
    let flip_one = found_keys.len() - flip_zero;
    Ok(MatchReport {
        matches,
        unmatched_found,
        flip_zero,
        flip_one,
        flips_as_expected,
        inverse_closed,
    })
}

#[derive(Clone, Debug)]
pub struct RelatorCheck {
    pub relator: GWord,
    pub source: &'static str,
    pub expanded_len: usize,
    pub flip: bool,
    pub trivial: bool,
}

impl RelatorCheck {
    pub fn passed(&self) -> bool {
        !self.flip && self.trivial
    }
}

pub fn check_relator(ball: &TessBall, relator: &GWord, source: &'static str) -> Result<RelatorCheck> {
    let expanded = relator.expand();
    let f = split_form(&expanded)?;
    let trivial = ball.is_trivial(&f.w)?;
    Ok(RelatorCheck {
        relator: relator.clone(),
        source,
        expanded_len: expanded.len(),
        flip: f.flip,
        trivial,
    })
}

/// Evaluates both six-relator lists in the group.
pub fn verify_relators(ball: &TessBall) -> Result<Vec<RelatorCheck>> {
    let mut out = Vec::new();
    for (source, list) in [("six", SIX_RELATORS), ("outline", OUTLINE_RELATORS)] {
        for text in list {
            out.push(check_relator(ball, &GWord::parse(text)?, source)?);
        }
    }
    Ok(out)
}

pub fn six_relators() -> Vec<GWord> {
    SIX_RELATORS
        .iter()
        .map(|t| GWord::parse(t).expect("well-formed constant"))
        .collect()
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub max_len: usize,
    pub words_scanned: usize,
    /// Nontrivial pure words of length at most three.
    pub short_pure: Vec<Word>,
    /// Pure words of length four, grouped by the listed element they equal.
    pub length4_pure: BTreeMap<String, usize>,
    /// Length-four pure words equal to none of the listed elements.
    pub length4_unmatched: Vec<Word>,
    /// `g_i` that equal some strictly shorter word, with a witness.
    pub not_minimal: Vec<(String, Word)>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.short_pure.is_empty() && self.not_minimal.is_empty() && self.length4_unmatched.is_empty()
    }
}

/// Exhaustive scan of all words up to length `max_len` over the six
/// generators of `J_4`.
pub fn minimal_length_scan(ball: &TessBall, max_len: usize) -> Result<ScanReport> {
    if max_len > 5 {
        return Err(Error::UnsupportedPresentation(format!(
            "scan length {max_len} exceeds 5"
        )));
    }
    if (ball.radius() as usize) < max_len + 1 {
        return Err(Error::RadiusTooSmall {
            have: ball.radius(),
            need: max_len as u32 + 1,
        });
    }
    let j4 = Presentation::cactus(4)?;
    let gens = j4.generators();
    let identity_key = (ball.root(), false);
    let named: Vec<(String, (VertexId, bool), usize)> = (1..=10u8)
        .flat_map(|i| {
            [false, true].map(|inv| {
                let w = reference_element(i);
                let w = if inv { w.inverse() } else { w };
                (format!("g{i}{}", if inv { "^-1" } else { "" }), w)
            })
        })
        .map(|(n, w)| Ok((n, element_key(ball, &w)?, w.len())))
        .collect::<Result<_>>()?;

    let mut words_scanned = 0;
    let mut short_pure = Vec::new();
    let mut length4_pure = BTreeMap::new();
    let mut length4_unmatched = Vec::new();
    let mut shorter: BTreeMap<(VertexId, bool), (usize, Word)> = BTreeMap::new();
    for len in 1..=max_len {
        for w in all_words(4, gens, len) {
            words_scanned += 1;
            let key = element_key(ball, &w)?;
            shorter.entry(key).or_insert((len, w.clone()));
            if !w.is_pure() || key == identity_key {
                continue;
            }
            if len <= 3 {
                short_pure.push(w);
            } else if len == 4 {
                match named.iter().find(|(_, k, _)| *k == key) {
                    Some((n, _, _)) => *length4_pure.entry(n.clone()).or_insert(0) += 1,
                    None => length4_unmatched.push(w),
                }
            }
        }
    }
    let mut not_minimal = Vec::new();
    for (name, key, len) in &named {
        if let Some((l, w)) = shorter.get(key) {
            if l < len {
                not_minimal.push((name.clone(), w.clone()));
            }
        }
    }
    Ok(ScanReport {
        max_len,
        words_scanned,
        short_pure,
        length4_pure,
        length4_unmatched,
        not_minimal,
    })
}

/// True when `v -> g·v` moves every vertex where it is defined.
pub fn acts_freely(ball: &TessBall, g: &SplitForm) -> Result<bool> {
    let map = ball.left_mult_map(g)?;
    Ok(map.iter().all(|(v, u)| v != u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_elements_are_pure_with_lengths_four_or_five() {
        for i in 1..=10 {
            let w = reference_element(i);
            assert!(w.is_pure(), "g{i}");
            assert!(w.len() == 4 || w.len() == 5, "g{i}");
        }
    }

    #[test]
    fn gword_parsing_and_display() {
        let w = GWord::parse("g1 g10^-1 g2^-1").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "g1 g10^-1 g2^-1");
        assert_eq!(w.inverse().to_string(), "g2 g10 g1^-1");
        assert!(GWord::parse("g11").is_err());
        assert!(GWord::parse("h1").is_err());
        assert!(GWord::parse("g1 g1^-1").unwrap().cyclic_reduce().is_empty());
    }

    #[test]
    fn cyclic_key_ignores_rotation_and_inversion() {
        let a = GWord::parse("g1 g2 g3^-1").unwrap();
        let b = GWord::parse("g3^-1 g1 g2").unwrap();
        let c = GWord::parse("g3 g2^-1 g1^-1").unwrap();
        assert_eq!(a.cyclic_key(), b.cyclic_key());
        assert_eq!(a.cyclic_key(), c.cyclic_key());
        assert_ne!(a.cyclic_key(), GWord::parse("g1 g3^-1 g2").unwrap().cyclic_key());
    }

    #[test]
    fn tietze_reaches_the_single_relator() {
        let out = tietze_eliminate(&six_relators(), &ELIMINATION_ORDER).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(
            out[0].cyclic_key(),
            GWord::parse(SINGLE_RELATOR).unwrap().cyclic_key()
        );
    }

    #[test]
    fn tietze_is_insensitive_to_rotated_input() {
        let rotated: Vec<GWord> = six_relators()
            .into_iter()
            .map(|r| {
                let mut l = r.0.clone();
                l.rotate_left(1);
                GWord(l)
            })
            .collect();
        let out = tietze_eliminate(&rotated, &ELIMINATION_ORDER).unwrap();
        assert_eq!(
            out[0].cyclic_key(),
            GWord::parse(SINGLE_RELATOR).unwrap().cyclic_key()
        );
    }
}
