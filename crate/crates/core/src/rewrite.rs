//! Shortlex Knuth–Bendix completion over involutive generators.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap, HashMap};

use crate::presentation::Presentation;
use crate::words::{Generator, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Confluent,
    Capped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Confluent => "confluent",
            Status::Capped => "capped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

/// Shortlex comparison on letter sequences using the fixed generator ranks.
pub fn shortlex_cmp(a: &[Generator], b: &[Generator]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        a.iter()
            .map(|g| g.shortlex_rank())
            .cmp(b.iter().map(|g| g.shortlex_rank()))
    })
}

/// Key wrapper so the pending-equation heap pops the shortlex-least overlap first.
#[derive(Clone, PartialEq, Eq)]
struct Pending {
    key: Vec<u32>,
    len: usize,
    seq: u64,
    left: Vec<Generator>,
    right: Vec<Generator>,
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.key.cmp(&other.key))
            .then_with(|| self.seq.cmp(&other.seq))
    }
}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    degree: u8,
    rules: Vec<(Vec<Generator>, Vec<Generator>)>,
    index: RuleIndex,
    status: Status,
}

impl RewriteSystem {
    /// Runs completion seeded with `r -> e` for every relator `r`; stops with
    /// [`Status::Capped`] once more than `max_rules` rules would be live.
    pub fn complete(p: &Presentation, max_rules: usize) -> Self {
        let mut kb = Completion {
            rules: Vec::new(),
            index: RuleIndex::default(),
            heap: BinaryHeap::new(),
            seq: 0,
        };
        for r in p.relators() {
            kb.push(r.letters().to_vec(), Vec::new(), r.letters());
        }
        let mut status = Status::Confluent;
        while let Some(Reverse(eq)) = kb.heap.pop() {
            if !kb.orient_and_add(eq.left, eq.right) {
                continue;
            }
            if kb.live() > max_rules {
                status = Status::Capped;
                break;
            }
        }
        if status == Status::Confluent && !kb.all_pairs_resolve() {
            status = Status::Capped;
        }
        let mut rules: Vec<_> = kb.rules.into_iter().flatten().collect();
        rules.sort_by(|a, b| shortlex_cmp(&a.0, &b.0));
        let mut index = RuleIndex::default();
        for (l, r) in &rules {
            index.insert(l.clone(), r.clone());
        }
        RewriteSystem {
            degree: p.degree(),
            rules,
            index,
            status,
        }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Rules sorted by shortlex order of their left-hand sides.
    pub fn rules(&self) -> Vec<Rule> {
        self.rules
            .iter()
            .map(|(l, r)| Rule {
                lhs: Word::new(self.degree, l.clone()).expect("same degree"),
                rhs: Word::new(self.degree, r.clone()).expect("same degree"),
            })
            .collect()
    }

    /// Leftmost-innermost rewriting to a fixed point.
    pub fn rewrite(&self, w: &Word) -> Word {
        let letters = self.index.reduce(w.letters());
        Word::new(w.degree(), letters).expect("same degree")
    }
}

struct Completion {
    rules: Vec<Option<(Vec<Generator>, Vec<Generator>)>>,
    index: RuleIndex,
    heap: BinaryHeap<Reverse<Pending>>,
    seq: u64,
}

impl Completion {
    fn live(&self) -> usize {
        self.rules.iter().filter(|r| r.is_some()).count()
    }

    fn push(&mut self, left: Vec<Generator>, right: Vec<Generator>, overlap: &[Generator]) {
        self.seq += 1;
        self.heap.push(Reverse(Pending {
            key: overlap.iter().map(|g| g.shortlex_rank()).collect(),
            len: overlap.len(),
            seq: self.seq,
            left,
            right,
        }));
    }

    fn normalize(&self, w: &[Generator]) -> Vec<Generator> {
        self.index.reduce(w)
    }

    /// Returns true when a new rule was added.
    fn orient_and_add(&mut self, left: Vec<Generator>, right: Vec<Generator>) -> bool {
        let a = self.normalize(&left);
        let b = self.normalize(&right);
        let (lhs, rhs) = match shortlex_cmp(&a, &b) {
            Ordering::Equal => return false,
            Ordering::Greater => (a, b),
            Ordering::Less => (b, a),
        };
        // Interreduce: rules whose lhs contains the new lhs are retired and
        // their equations requeued; right-hand sides are renormalized.
        let mut retired = Vec::new();
        for slot in self.rules.iter_mut() {
            if let Some((l, _)) = slot {
                if contains(l, &lhs) {
                    let (l, r) = slot.take().expect("live");
                    self.index.remove(&l);
                    retired.push((l, r));
                }
            }
        }
        let idx = self.rules.len();
        self.index.insert(lhs.clone(), rhs.clone());
        self.rules.push(Some((lhs.clone(), rhs)));
        for (l, r) in retired {
            let overlap = l.clone();
            self.push(l, r, &overlap);
        }
        for i in 0..self.rules.len() {
            if let Some((_, r)) = &self.rules[i] {
                let r = r.clone();
                let nr = self.normalize(&r);
                if nr != r {
                    if let Some((l, slot)) = &mut self.rules[i] {
                        *slot = nr.clone();
                        self.index.insert(l.clone(), nr);
                    }
                }
            }
        }
        let Some((lhs, rhs)) = self.rules[idx].clone() else {
            return true;
        };
        let others: Vec<(Vec<Generator>, Vec<Generator>)> =
            self.rules.iter().flatten().cloned().collect();
        for (l2, r2) in &others {
            for (left, right, overlap) in critical_pairs(&lhs, &rhs, l2, r2) {
                self.push(left, right, &overlap);
            }
            if l2 != &lhs {
                for (left, right, overlap) in critical_pairs(l2, r2, &lhs, &rhs) {
                    self.push(left, right, &overlap);
                }
            }
        }
        true
    }

    fn all_pairs_resolve(&self) -> bool {
        let live: Vec<_> = self.rules.iter().flatten().collect();
        for (l1, r1) in &live {
            for (l2, r2) in &live {
                for (a, b, _) in critical_pairs(l1, r1, l2, r2) {
                    if self.normalize(&a) != self.normalize(&b) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn contains(hay: &[Generator], needle: &[Generator]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Overlaps of a suffix of `l1` with a prefix of `l2`, and occurrences of
/// `l2` strictly inside `l1`. Each yields the two one-step reducts.
fn critical_pairs(
    l1: &[Generator],
    r1: &[Generator],
    l2: &[Generator],
    r2: &[Generator],
) -> Vec<(Vec<Generator>, Vec<Generator>, Vec<Generator>)> {
    let mut out = Vec::new();
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] == l2[..k] {
            let mut overlap = l1.to_vec();
            overlap.extend_from_slice(&l2[k..]);
            let mut a = r1.to_vec();
            a.extend_from_slice(&l2[k..]);
            let mut b = l1[..l1.len() - k].to_vec();
            b.extend_from_slice(r2);
            out.push((a, b, overlap));
        }
    }
    if l2.len() < l1.len() {
        for i in 0..=l1.len() - l2.len() {
            if l1[i..i + l2.len()] == *l2 {
                let mut b = l1[..i].to_vec();
                b.extend_from_slice(r2);
                b.extend_from_slice(&l1[i + l2.len()..]);
                out.push((r1.to_vec(), b, l1.to_vec()));
            }
        }
    }
    out
}

/// Rules keyed by left-hand side, for suffix lookups during reduction.
#[derive(Clone, Debug, Default)]
struct RuleIndex {
    map: HashMap<Vec<Generator>, Vec<Generator>>,
    max_len: usize,
}

impl RuleIndex {
    fn insert(&mut self, lhs: Vec<Generator>, rhs: Vec<Generator>) {
        self.max_len = self.max_len.max(lhs.len());
        self.map.insert(lhs, rhs);
    }

    fn remove(&mut self, lhs: &[Generator]) {
        self.map.remove(lhs);
    }

    /// Scans left to right and rewrites as soon as a left-hand side ends at
    /// the scan position (leftmost-innermost).
    fn reduce(&self, w: &[Generator]) -> Vec<Generator> {
        let mut out: Vec<Generator> = Vec::with_capacity(w.len());
        let mut input: Vec<Generator> = w.iter().rev().copied().collect();
        while let Some(g) = input.pop() {
            out.push(g);
            for k in 1..=self.max_len.min(out.len()) {
                if let Some(r) = self.map.get(&out[out.len() - k..]) {
                    out.truncate(out.len() - k);
                    input.extend(r.iter().rev());
                    break;
                }
            }
        }
        out
    }
}

/// Every word of length `len` over `gens`, in lexicographic order of the list.
pub fn all_words(degree: u8, gens: &[Generator], len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * gens.len());
        for w in &out {
            for &g in gens {
                let mut v: Vec<Generator> = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|l| Word::new(degree, l).expect("generators of the degree"))
        .collect()
}

/// Distinct normal forms of all words up to length `max_len`.
pub fn normal_forms(sys: &RewriteSystem, gens: &[Generator], max_len: usize) -> BTreeSet<Vec<u32>> {
    let mut seen = BTreeSet::new();
    for len in 0..=max_len {
        for w in all_words(sys.degree, gens, len) {
            let nf = sys.rewrite(&w);
            seen.insert(nf.letters().iter().map(|g| g.shortlex_rank()).collect());
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::word;

    #[test]
    fn free_product_of_involutions() {
        let p = Presentation::named("j3-2").unwrap();
        let sys = RewriteSystem::complete(&p, 64);
        assert_eq!(sys.status(), Status::Confluent);
        let rules = sys.rules();
        assert_eq!(rules.len(), 2);
        assert_eq!(rules[0].lhs, word("s12 s12", 3));
        assert!(rules[0].rhs.is_empty());
        assert_eq!(rules[1].lhs, word("s23 s23", 3));
    }

    #[test]
    fn rewrite_examples() {
        let p = Presentation::named("j3").unwrap();
        let sys = RewriteSystem::complete(&p, 256);
        assert_eq!(sys.rewrite(&word("s13 s13 s12", 3)), word("s12", 3));
        assert!(sys.rewrite(&Word::identity(3)).is_empty());
        let w = word("s12 s13 s23 s13 s12", 3);
        let once = sys.rewrite(&w);
        assert_eq!(sys.rewrite(&once), once);
    }

    #[test]
    fn cap_at_generator_count() {
        let p = Presentation::named("j4-23").unwrap();
        let sys = RewriteSystem::complete(&p, p.generators().len());
        assert_eq!(sys.status(), Status::Capped);
        assert!(sys.len() <= p.generators().len() + 1);
    }

    #[test]
    fn rules_are_shortlex_decreasing() {
        let p = Presentation::named("j4-23").unwrap();
        let sys = RewriteSystem::complete(&p, 200);
        for r in sys.rules() {
            assert_eq!(
                shortlex_cmp(r.lhs.letters(), r.rhs.letters()),
                Ordering::Greater
            );
        }
    }
}
