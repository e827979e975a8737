//! Exhaustive enumeration of small ribbon graphs up to isomorphism.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ribbon::{canonical_form, is_orientable, ArrowEnd, ArrowPresentation, Sign};

/// Largest edge count accepted by the exhaustive enumerators.
pub const MAX_EDGES: usize = 6;
/// Largest vertex count accepted by the exhaustive enumerators.
pub const MAX_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PopulationSpec {
    pub min_edges: usize,
    pub max_edges: usize,
    pub max_vertices: usize,
    pub orientable_only: bool,
    pub connected_only: bool,
}

impl PopulationSpec {
    /// Every ribbon graph with up to `max_edges` edges and between one and
    /// `max_vertices` vertices.
    pub fn up_to(max_edges: usize, max_vertices: usize) -> Self {
        PopulationSpec {
            min_edges: 0,
            max_edges,
            max_vertices,
            orientable_only: false,
            connected_only: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn orientable(mut self) -> Self {
        self.orientable_only = true;
        self
    }

    pub fn exactly(mut self, edges: usize) -> Self {
        self.min_edges = edges;
        self.max_edges = edges;
        self
    }

    fn check(&self) -> Result<()> {
        if self.max_edges > MAX_EDGES {
            return Err(Error::CapExceeded {
                what: "population edge bound",
                size: self.max_edges,
                cap: MAX_EDGES,
            });
        }
        if self.max_vertices > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "population vertex bound",
                size: self.max_vertices,
                cap: MAX_VERTICES,
            });
        }
        Ok(())
    }
}

/// Every perfect matching of `0..2m`, as the edge index at each position
/// with edges numbered by first appearance.
fn matchings(m: usize) -> Vec<Vec<usize>> {
    fn go(slots: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
        let Some(first) = slots.iter().position(|&s| s == usize::MAX) else {
            out.push(slots.clone());
            return;
        };
        slots[first] = next;
        for j in first + 1..slots.len() {
            if slots[j] == usize::MAX {
                slots[j] = next;
                go(slots, next + 1, out);
                slots[j] = usize::MAX;
            }
        }
        slots[first] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; 2 * m], 0, &mut out);
    out
}

/// Non-increasing sequences of `parts` lengths summing to `total`.
fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for l in (0..=left.min(cap)).rev() {
            cur.push(l);
            go(left - l, parts - 1, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, total, &mut Vec::new(), &mut out);
    out
}

fn labels(m: usize) -> Vec<String> {
    (1..=m).map(|i| i.to_string()).collect()
}

/// Canonical forms of every presentation with `m` edges whose curve
/// lengths are `lengths`.
fn classes_with_shape(m: usize, lengths: &[usize], unsigned: bool) -> BTreeSet<ArrowPresentation> {
    let sign_patterns: u32 = if unsigned { 1 } else { 1 << m };
    let names = labels(m);
    matchings(m)
        .into_par_iter()
        .flat_map_iter(|slots| {
            let names = names.clone();
            (0..sign_patterns).map(move |signs| {
                let mut seen = vec![false; m];
                let mut curves = Vec::with_capacity(lengths.len());
                let mut pos = 0;
                for &len in lengths {
                    let curve: Vec<ArrowEnd> = slots[pos..pos + len]
                        .iter()
                        .map(|&e| {
                            let second = std::mem::replace(&mut seen[e], true);
                            let back = second && signs >> e & 1 == 1;
                            ArrowEnd::new(e, if back { Sign::Backward } else { Sign::Forward })
                        })
                        .collect();
                    pos += len;
                    curves.push(curve);
                }
                canonical_form(&ArrowPresentation::normalized(names.clone(), curves))
            })
        })
        .collect()
}

/// Every bouquet with exactly `n` edges, one per isomorphism class, in
/// canonical order.
pub fn enumerate_bouquets(n: usize, orientable_only: bool) -> Result<Vec<ArrowPresentation>> {
    if n > MAX_EDGES {
        return Err(Error::CapExceeded {
            what: "bouquet size",
            size: n,
            cap: MAX_EDGES,
        });
    }
    Ok(classes_with_shape(n, &[2 * n], orientable_only)
        .into_iter()
        .collect())
}

/// Every ribbon graph within `spec`, one per isomorphism class, ordered by
/// edge count, then vertex count, then canonical form.
pub fn enumerate_ribbon_graphs(spec: &PopulationSpec) -> Result<Vec<ArrowPresentation>> {
    spec.check()?;
    let mut out = Vec::new();
    for m in spec.min_edges..=spec.max_edges {
        for v in 1..=spec.max_vertices {
            if spec.connected_only && v > m + 1 {
                continue;
            }
            let mut classes = BTreeSet::new();
            for lengths in partitions(2 * m, v) {
                classes.extend(classes_with_shape(m, &lengths, false));
            }
            out.extend(classes.into_iter().filter(|g| {
                (!spec.connected_only || g.is_connected())
                    && (!spec.orientable_only || is_orientable(g))
            }));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Chord diagrams by brute force: every word with each letter twice,
    /// reduced to the least string over rotations, reflections and
    /// first-appearance relabelling.
    fn chord_diagrams_brute(n: usize) -> usize {
        fn relabel(w: &[usize]) -> Vec<usize> {
            let mut map = vec![usize::MAX; w.len()];
            let mut next = 0;
            w.iter()
                .map(|&c| {
                    if map[c] == usize::MAX {
                        map[c] = next;
                        next += 1;
                    }
                    map[c]
                })
                .collect()
        }
        fn words(
            n: usize,
            cur: &mut Vec<usize>,
            count: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == 2 * n {
                out.push(cur.clone());
                return;
            }
            for c in 0..n {
                if count[c] < 2 {
                    count[c] += 1;
                    cur.push(c);
                    words(n, cur, count, out);
                    cur.pop();
                    count[c] -= 1;
                }
            }
        }
        let mut all = Vec::new();
        words(n, &mut Vec::new(), &mut vec![0; n], &mut all);
        let mut keys = BTreeSet::new();
        for w in all {
            let len = w.len();
            let mut best: Option<Vec<usize>> = None;
            for r in 0..len.max(1) {
                for rev in [false, true] {
                    let v: Vec<usize> = (0..len)
                        .map(|i| {
                            if rev {
                                w[(r + len - i) % len]
                            } else {
                                w[(r + i) % len]
                            }
                        })
                        .collect();
                    let v = relabel(&v);
                    if best.as_ref().is_none_or(|b| v < *b) {
                        best = Some(v);
                    }
                }
            }
            keys.insert(best.unwrap());
        }
        keys.len()
    }

    #[test]
    fn matching_and_partition_counts() {
        assert_eq!(matchings(3).len(), 15);
        assert_eq!(matchings(0).len(), 1);
        assert_eq!(partitions(4, 2), vec![vec![4, 0], vec![3, 1], vec![2, 2]]);
    }

    #[test]
    fn bouquet_counts() {
        assert_eq!(enumerate_bouquets(1, true).unwrap().len(), 1);
        assert_eq!(enumerate_bouquets(1, false).unwrap().len(), 2);
        for n in 1..=4 {
            assert_eq!(
                enumerate_bouquets(n, true).unwrap().len(),
                chord_diagrams_brute(n),
                "n={n}"
            );
        }
        assert!(enumerate_bouquets(7, true).is_err());
    }

    #[test]
    fn small_populations() {
        let one =
            enumerate_ribbon_graphs(&PopulationSpec::up_to(1, 2).exactly(1).connected()).unwrap();
        assert_eq!(one.len(), 3);
        let empty = enumerate_ribbon_graphs(&PopulationSpec::up_to(0, 2)).unwrap();
        assert_eq!(empty.len(), 2);
        let all = enumerate_ribbon_graphs(&PopulationSpec::up_to(1, 2)).unwrap();
        assert_eq!(all.len(), 7);
    }

    #[test]
    fn classes_are_distinct_and_sorted() {
        let pop = enumerate_ribbon_graphs(&PopulationSpec::up_to(2, 3)).unwrap();
        for (i, a) in pop.iter().enumerate() {
            assert_eq!(&canonical_form(a), a);
            for b in &pop[i + 1..] {
                assert_ne!(a, b);
            }
        }
        let keys: Vec<_> = pop
            .iter()
            .map(|g| (g.num_edges(), g.num_vertices()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn caps_enforced() {
        assert!(enumerate_ribbon_graphs(&PopulationSpec::up_to(7, 1)).is_err());
        assert!(enumerate_ribbon_graphs(&PopulationSpec::up_to(1, 9)).is_err());
    }
}
