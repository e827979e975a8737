//! Signed double occurrence words, shares and word mutation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::dm::SimpleGraph;
use crate::error::{Error, Result};
use crate::ribbon::format::parse_tokens;
use crate::ribbon::{canonical_form, ArrowEnd, ArrowPresentation, Sign};

/// A cyclic word in which every letter occurs twice, each occurrence
/// carrying a sign. Stored as a one-curve presentation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedWord {
    bouquet: ArrowPresentation,
}

impl SignedWord {
    /// Parses a literal such as `a+ b+ a+ b+`.
    pub fn parse(s: &str) -> Result<Self> {
        let toks = parse_tokens(s, 1)?;
        Self::from_bouquet(ArrowPresentation::from_labelled(&[toks])?)
    }

    pub fn from_bouquet(ap: ArrowPresentation) -> Result<Self> {
        if ap.num_vertices() != 1 {
            return Err(Error::NotBouquet(ap.num_vertices()));
        }
        Ok(SignedWord { bouquet: ap })
    }

    pub fn as_bouquet(&self) -> &ArrowPresentation {
        &self.bouquet
    }

    pub fn into_bouquet(self) -> ArrowPresentation {
        self.bouquet
    }

    pub fn tokens(&self) -> &[ArrowEnd] {
        &self.bouquet.curves()[0]
    }

    pub fn letters(&self) -> &[String] {
        self.bouquet.labels()
    }

    pub fn len(&self) -> usize {
        self.tokens().len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens().is_empty()
    }

    /// Whether each letter carries the same sign at both occurrences, so a
    /// double flip makes the word all-positive.
    pub fn is_unsigned(&self) -> bool {
        let mut first: Vec<Option<Sign>> = vec![None; self.letters().len()];
        self.tokens().iter().all(|a| match first[a.edge] {
            None => {
                first[a.edge] = Some(a.sign);
                true
            }
            Some(s) => s == a.sign,
        })
    }

    fn with_tokens(&self, tokens: Vec<ArrowEnd>) -> SignedWord {
        SignedWord {
            bouquet: self.bouquet.with_curves(vec![tokens]),
        }
    }

    /// The canonical one-curve presentation: equal for words related by
    /// rotation, reversal, relabelling and double flips.
    pub fn canonical(&self) -> ArrowPresentation {
        canonical_form(&self.bouquet)
    }

    /// Least rotation or reversal of the token sequence, each letter's first
    /// occurrence made forward. Labels are kept.
    pub(crate) fn labelled_key(&self) -> Vec<ArrowEnd> {
        let t = self.tokens();
        let n = t.len();
        let mut best: Option<Vec<ArrowEnd>> = None;
        for reversed in [false, true] {
            for start in 0..n.max(1) {
                let seq: Vec<ArrowEnd> = (0..n)
                    .map(|i| {
                        if reversed {
                            let a = t[(start + n - i) % n];
                            ArrowEnd::new(a.edge, a.sign.flip())
                        } else {
                            t[(start + i) % n]
                        }
                    })
                    .collect();
                let mut first = vec![None; self.letters().len()];
                let seq: Vec<ArrowEnd> = seq
                    .into_iter()
                    .map(|a| {
                        let flip = *first[a.edge].get_or_insert(a.sign == Sign::Backward);
                        ArrowEnd::new(a.edge, a.sign.flip_if(flip))
                    })
                    .collect();
                if best.as_ref().is_none_or(|b| seq < *b) {
                    best = Some(seq);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Positions of the two occurrences of each letter.
    fn positions(&self) -> Vec<[usize; 2]> {
        let mut pos = vec![[usize::MAX; 2]; self.letters().len()];
        for (i, a) in self.tokens().iter().enumerate() {
            let slot = &mut pos[a.edge];
            if slot[0] == usize::MAX {
                slot[0] = i;
            } else {
                slot[1] = i;
            }
        }
        pos
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bouquet.tokens_text(self.tokens()))
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// The word of a bouquet's single curve.
pub fn bouquet_to_word(ap: &ArrowPresentation) -> Result<SignedWord> {
    SignedWord::from_bouquet(ap.clone())
}

/// Letters joined when their occurrences interleave.
pub fn intersection_graph(w: &SignedWord) -> Result<SimpleGraph> {
    if !w.is_unsigned() {
        return Err(Error::SignedWord);
    }
    let pos = w.positions();
    let mut g = SimpleGraph::new(w.letters().to_vec())?;
    for u in 0..pos.len() {
        for v in u + 1..pos.len() {
            let [a, b] = pos[u];
            let inside = |p: usize| a < p && p < b;
            if inside(pos[v][0]) != inside(pos[v][1]) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// A cyclic run of positions; empty runs still mark a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: usize,
    pub len: usize,
}

impl Interval {
    /// Reduces `start` modulo `n`, and to 0 for a run covering everything.
    pub fn normalized(start: usize, len: usize, n: usize) -> Self {
        if n == 0 || len == n {
            Interval { start: 0, len }
        } else {
            Interval {
                start: start % n,
                len,
            }
        }
    }

    pub fn positions(self, n: usize) -> impl Iterator<Item = usize> {
        (0..self.len).map(move |i| (self.start + i) % n)
    }
}

/// A share: two disjoint arcs holding both ends of every chord that meets
/// them. `cut` records a decomposition `w = w2 w3 w4 w1` read from
/// position `cut[0]` with `|w2| = cut[1]`, `|w3| = cut[2]`, `|w4| = cut[3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Share {
    pub arcs: (Interval, Interval),
    cut: [usize; 4],
}

fn share_key(n: usize, s: usize, l2: usize, l3: usize, l4: usize) -> (Interval, Interval) {
    let a = Interval::normalized(s, l2, n);
    let b = Interval::normalized(s + l2 + l3, l4, n);
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Every share, degenerate ones included, each once.
pub fn find_shares(w: &SignedWord) -> Vec<Share> {
    let n = w.len();
    let pos = w.positions();
    let partner = |i: usize| {
        let p = pos[w.tokens()[i].edge];
        if p[0] == i {
            p[1]
        } else {
            p[0]
        }
    };
    let mut seen = BTreeMap::new();
    for s in 0..n.max(1) {
        for p in 0..=n {
            for q in p..=n {
                for r in q..=n {
                    let (l2, l3, l4) = (p, q - p, r - q);
                    let key = share_key(n, s, l2, l3, l4);
                    if seen.contains_key(&key) {
                        continue;
                    }
                    let mut inside = vec![false; n];
                    for i in key.0.positions(n).chain(key.1.positions(n)) {
                        inside[i] = true;
                    }
                    if (0..n).all(|i| !inside[i] || inside[partner(i)]) {
                        seen.insert(
                            key,
                            Share {
                                arcs: key,
                                cut: [s, l2, l3, l4],
                            },
                        );
                    }
                }
            }
        }
    }
    seen.into_values().collect()
}

fn segment(w: &SignedWord, start: usize, len: usize, reversed: bool) -> Vec<ArrowEnd> {
    let n = w.len();
    let t = w.tokens();
    if reversed {
        (0..len)
            .rev()
            .map(|i| {
                let a = t[(start + i) % n];
                ArrowEnd::new(a.edge, a.sign.flip())
            })
            .collect()
    } else {
        (0..len).map(|i| t[(start + i) % n]).collect()
    }
}

/// The three mutants of `w` across one share: `w̄2 w3 w̄4 w1`,
/// `w4 w3 w2 w1` and `w̄4 w3 w̄2 w1`.
pub fn share_mutants(w: &SignedWord, share: &Share) -> [SignedWord; 3] {
    let n = w.len();
    let [s, l2, l3, l4] = share.cut;
    let l1 = n - l2 - l3 - l4;
    let (s3, s4, s1) = (s + l2, s + l2 + l3, s + l2 + l3 + l4);
    let w1 = segment(w, s1, l1, false);
    let w3 = segment(w, s3, l3, false);
    let build = |a: Vec<ArrowEnd>, b: Vec<ArrowEnd>| {
        let mut t = a;
        t.extend_from_slice(&w3);
        t.extend(b);
        t.extend_from_slice(&w1);
        w.with_tokens(t)
    };
    [
        build(segment(w, s, l2, true), segment(w, s4, l4, true)),
        build(segment(w, s4, l4, false), segment(w, s, l2, false)),
        build(segment(w, s4, l4, true), segment(w, s, l2, true)),
    ]
}

/// All mutants of `w` over every share, one per equivalence class, in
/// canonical order. Letters keep their labels.
pub fn mutants_of_word(w: &SignedWord) -> Vec<SignedWord> {
    let mut out = BTreeMap::new();
    for share in find_shares(w) {
        for m in share_mutants(w, &share) {
            out.entry(m.canonical()).or_insert(m);
        }
    }
    out.into_values().collect()
}

/// All mutants of `w` over every share, keeping labels: two mutants are
/// merged only when they are the same labelled word up to rotation,
/// reversal and double flips.
pub fn labelled_mutants_of_word(w: &SignedWord) -> Vec<SignedWord> {
    let mut out = BTreeMap::new();
    for share in find_shares(w) {
        for m in share_mutants(w, &share) {
            out.entry(m.labelled_key()).or_insert(m);
        }
    }
    out.into_values().collect()
}

/// Canonical forms reachable from `w` by word mutation.
pub fn word_orbit(w: &SignedWord, budget: usize) -> Result<BTreeSet<ArrowPresentation>> {
    let mut seen = BTreeSet::new();
    seen.insert(w.canonical());
    let mut queue = vec![w.clone()];
    while let Some(cur) = queue.pop() {
        for m in mutants_of_word(&cur) {
            if seen.insert(m.canonical()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExhausted(budget));
                }
                queue.push(m);
            }
        }
    }
    Ok(seen)
}
