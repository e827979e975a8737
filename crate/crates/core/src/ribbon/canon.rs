//! Canonical forms under the presentation move group: rotation and
//! reflection of any curve, double flip of an edge's arrows, reordering of
//! curves and relabelling of edges.
//!
//! Curves are placed in blocks of decreasing length (empty curves last).
//! Within the fixed block structure the search tries every choice of curve,
//! start point and direction, relabels edges by first appearance and
//! double-flips each edge so its first arrow reads forward. The least token
//! sequence wins. Mirror images share a canonical form.

use super::presentation::{ArrowEnd, ArrowPresentation, Sign};

type Token = (u32, bool);

struct Search<'a> {
    curves: Vec<&'a [ArrowEnd]>,
    lengths: Vec<usize>,
    used: Vec<bool>,
    assign: Vec<Option<(u32, bool)>>,
    next_label: u32,
    out: Vec<Token>,
    best: Vec<Token>,
    have_best: bool,
}

impl Search<'_> {
    fn place(&mut self, slot: usize) {
        if slot == self.lengths.len() {
            // Reaching here means `out` is <= best on every compared prefix.
            if !self.have_best || self.out < self.best {
                self.best.clone_from(&self.out);
                self.have_best = true;
            }
            return;
        }
        let len = self.lengths[slot];
        let base = self.out.len();
        let tied_at_entry = self.have_best && self.out[..] == self.best[..base];
        if self.have_best && !tied_at_entry && self.out[..] > self.best[..base] {
            return;
        }
        for c in 0..self.curves.len() {
            if self.used[c] || self.curves[c].len() != len {
                continue;
            }
            self.used[c] = true;
            for reflect in [false, true] {
                for rot in 0..len.max(1) {
                    let tied = self.have_best && self.out[..] == self.best[..base];
                    let mut fresh: Vec<usize> = Vec::new();
                    let mut tied_now = tied;
                    let mut pruned = false;
                    for i in 0..len {
                        let a = if reflect {
                            let ArrowEnd { edge, sign } = self.curves[c][(rot + len - i) % len];
                            ArrowEnd::new(edge, sign.flip())
                        } else {
                            self.curves[c][(rot + i) % len]
                        };
                        let (label, flip) = match self.assign[a.edge] {
                            Some(x) => x,
                            None => {
                                let x = (self.next_label, a.sign == Sign::Backward);
                                self.next_label += 1;
                                self.assign[a.edge] = Some(x);
                                fresh.push(a.edge);
                                x
                            }
                        };
                        let tok = (label, (a.sign == Sign::Backward) ^ flip);
                        if tied_now {
                            let b = self.best[self.out.len()];
                            if tok > b {
                                pruned = true;
                                break;
                            }
                            if tok < b {
                                tied_now = false;
                            }
                        }
                        self.out.push(tok);
                    }
                    if !pruned {
                        self.place(slot + 1);
                    }
                    self.out.truncate(base);
                    for e in fresh {
                        self.assign[e] = None;
                        self.next_label -= 1;
                    }
                }
            }
            self.used[c] = false;
        }
    }
}

/// Least representative of the presentation's equivalence class; edges are
/// relabelled `1..=m`.
pub fn canonical_form(ap: &ArrowPresentation) -> ArrowPresentation {
    let mut lengths: Vec<usize> = ap
        .curves()
        .iter()
        .map(|c| c.len())
        .filter(|&l| l > 0)
        .collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    let empties = ap.num_vertices() - lengths.len();
    let curves: Vec<&[ArrowEnd]> = ap
        .curves()
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| c.as_slice())
        .collect();
    let mut search = Search {
        used: vec![false; curves.len()],
        curves,
        lengths,
        assign: vec![None; ap.num_edges()],
        next_label: 0,
        out: Vec::with_capacity(2 * ap.num_edges()),
        best: Vec::new(),
        have_best: false,
    };
    search.place(0);

    let labels: Vec<String> = (1..=ap.num_edges()).map(|i| i.to_string()).collect();
    let mut out = Vec::with_capacity(ap.num_vertices());
    let mut it = search.best.iter();
    for &len in &search.lengths {
        out.push(
            it.by_ref()
                .take(len)
                .map(|&(l, back)| {
                    ArrowEnd::new(
                        l as usize,
                        if back { Sign::Backward } else { Sign::Forward },
                    )
                })
                .collect(),
        );
    }
    out.extend((0..empties).map(|_| Vec::new()));
    ArrowPresentation::normalized(labels, out)
}

/// Whether two presentations describe isomorphic ribbon graphs (mirror
/// images identified).
pub fn isomorphic(a: &ArrowPresentation, b: &ArrowPresentation) -> bool {
    a.num_edges() == b.num_edges()
        && a.num_vertices() == b.num_vertices()
        && canonical_form(a) == canonical_form(b)
}
