//! Vertex joins and vertex cuts.
//!
//! A gap is the spot on a curve just before the arrow at index `gap`
//! (cyclically), or the whole boundary of an empty curve (`gap == 0`).
//! Joining splices two curves at their gaps so that neither edge set
//! interleaves with the other.

use std::collections::BTreeSet;

use super::canon::canonical_form;
use super::presentation::{ArrowEnd, ArrowPresentation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gap {
    pub curve: usize,
    pub gap: usize,
}

impl Gap {
    pub fn new(curve: usize, gap: usize) -> Self {
        Gap { curve, gap }
    }
}

fn check_gap(ap: &ArrowPresentation, g: Gap) -> Result<()> {
    let Some(c) = ap.curves().get(g.curve) else {
        return Err(Error::InvalidGap(format!("no curve {}", g.curve)));
    };
    if g.gap >= c.len().max(1) {
        return Err(Error::InvalidGap(format!(
            "gap {} on a curve with {} arrows",
            g.gap,
            c.len()
        )));
    }
    Ok(())
}

fn rotated(c: &[ArrowEnd], at: usize) -> impl Iterator<Item = ArrowEnd> + '_ {
    c[at.min(c.len())..]
        .iter()
        .chain(c[..at.min(c.len())].iter())
        .copied()
}

/// Vertex join of `a` and `b` at the given gaps. The merged curve takes the
/// place of `a`'s curve; `b`'s remaining curves follow `a`'s.
pub fn vertex_join(
    a: &ArrowPresentation,
    ga: Gap,
    b: &ArrowPresentation,
    gb: Gap,
) -> Result<ArrowPresentation> {
    check_gap(a, ga)?;
    check_gap(b, gb)?;
    let u = a.disjoint_union(b)?;
    // Find the two curves again inside the union (labels were renumbered).
    let ca = ga.curve;
    let cb = a.num_vertices() + gb.curve;
    Ok(join_curves(&u, ca, ga.gap, cb, gb.gap))
}

/// Joins two curves of one presentation.
fn join_curves(
    ap: &ArrowPresentation,
    c1: usize,
    g1: usize,
    c2: usize,
    g2: usize,
) -> ArrowPresentation {
    let curves = ap.curves();
    let merged: Vec<ArrowEnd> = rotated(&curves[c1], g1)
        .chain(rotated(&curves[c2], g2))
        .collect();
    let mut out = Vec::with_capacity(curves.len() - 1);
    for (i, c) in curves.iter().enumerate() {
        if i == c1 {
            out.push(merged.clone());
        } else if i != c2 {
            out.push(c.clone());
        }
    }
    ap.with_curves(out)
}

/// Splits curve `c` into the arcs `[i, j)` and `[j, i)` (cyclically). The
/// first piece keeps the curve's slot; the second is appended.
fn split_curve(ap: &ArrowPresentation, c: usize, i: usize, j: usize) -> ArrowPresentation {
    let curve = &ap.curves()[c];
    let first: Vec<ArrowEnd> = curve[i..j].to_vec();
    let second: Vec<ArrowEnd> = curve[j..]
        .iter()
        .chain(curve[..i].iter())
        .copied()
        .collect();
    let mut out = ap.curves().to_vec();
    out[c] = first;
    out.push(second);
    ap.with_curves(out)
}

/// Every way to undo a vertex join: split one curve at two distinct gaps so
/// that both pieces carry arrows and end up in different components. Each
/// pair is `(component holding the first piece, everything else)` and
/// joining the pair back at the cut gaps reproduces `ap`.
pub fn vertex_cuts(ap: &ArrowPresentation) -> Vec<(ArrowPresentation, ArrowPresentation)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (c, curve) in ap.curves().iter().enumerate() {
        let len = curve.len();
        for i in 0..len {
            for j in i + 1..len {
                let cut = split_curve(ap, c, i, j);
                let (_, ids) = cut.components();
                let new_curve = cut.num_vertices() - 1;
                if ids[c] == ids[new_curve] {
                    continue;
                }
                let side: Vec<usize> = (0..ids.len()).filter(|&x| ids[x] == ids[c]).collect();
                let rest: Vec<usize> = (0..ids.len()).filter(|&x| ids[x] != ids[c]).collect();
                let g1 = cut.restrict_to_curves(&side);
                let g2 = cut.restrict_to_curves(&rest);
                let key = (canonical_form(&g1), canonical_form(&g2));
                if seen.insert(key) {
                    out.push((g1, g2));
                }
            }
        }
    }
    out
}

/// All presentations reachable by one cut, including cuts that shed an
/// isolated vertex (one empty piece).
pub fn cut_results(ap: &ArrowPresentation) -> Vec<ArrowPresentation> {
    let mut out = Vec::new();
    for (c, curve) in ap.curves().iter().enumerate() {
        let len = curve.len();
        if len == 0 {
            out.push(split_curve(ap, c, 0, 0));
            continue;
        }
        for i in 0..len {
            for j in i..=len {
                let cut = split_curve(ap, c, i, j);
                let (_, ids) = cut.components();
                if ids[c] != ids[cut.num_vertices() - 1] {
                    out.push(cut);
                }
            }
        }
    }
    out
}

/// All presentations reachable by joining two curves that lie in different
/// components.
pub fn join_results(ap: &ArrowPresentation) -> Vec<ArrowPresentation> {
    let (_, ids) = ap.components();
    let curves = ap.curves();
    let mut out = Vec::new();
    for c1 in 0..curves.len() {
        for c2 in c1 + 1..curves.len() {
            if ids[c1] == ids[c2] {
                continue;
            }
            for g1 in 0..curves[c1].len().max(1) {
                for g2 in 0..curves[c2].len().max(1) {
                    out.push(join_curves(ap, c1, g1, c2, g2));
                }
            }
        }
    }
    out
}

/// Joins every component into the first one, always at gap 0 of the first
/// curve of each component. Returns the sequence of intermediate
/// presentations, starting with `ap` and ending with a connected one.
pub fn join_all_components(ap: &ArrowPresentation) -> Vec<ArrowPresentation> {
    let mut states = vec![ap.clone()];
    loop {
        let cur = states.last().unwrap();
        let (k, ids) = cur.components();
        if k <= 1 {
            break;
        }
        let c1 = ids.iter().position(|&i| i == 0).unwrap();
        let c2 = ids.iter().position(|&i| i == 1).unwrap();
        let next = join_curves(cur, c1, 0, c2, 0);
        states.push(next);
    }
    states
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::canon::isomorphic;

    fn ap(lines: &[&str]) -> ArrowPresentation {
        ArrowPresentation::from_token_lines(lines).unwrap()
    }

    #[test]
    fn join_two_loops() {
        let g = vertex_join(
            &ap(&["e+ e+"]),
            Gap::new(0, 0),
            &ap(&["f+ f+"]),
            Gap::new(0, 0),
        )
        .unwrap();
        assert_eq!(g, ap(&["e+ e+ f+ f+"]));
    }

    #[test]
    fn join_with_isolated_vertex_absorbs_it() {
        let g = ap(&["a+ b- a+", "b+"]);
        let j = vertex_join(
            &g,
            Gap::new(1, 0),
            &ArrowPresentation::isolated_vertex(),
            Gap::new(0, 0),
        )
        .unwrap();
        assert_eq!(j, g);
    }

    #[test]
    fn join_rejects_collisions_and_bad_gaps() {
        let g = ap(&["e+ e+"]);
        assert!(matches!(
            vertex_join(&g, Gap::new(0, 0), &g, Gap::new(0, 0)),
            Err(Error::LabelCollision(_))
        ));
        assert!(matches!(
            vertex_join(&g, Gap::new(0, 2), &ap(&["f+ f+"]), Gap::new(0, 0)),
            Err(Error::InvalidGap(_))
        ));
    }

    #[test]
    fn cut_inverts_join() {
        let cuts = vertex_cuts(&ap(&["e+ e+ f+ f+"]));
        assert_eq!(cuts.len(), 1);
        let (g1, g2) = &cuts[0];
        assert!(isomorphic(g1, &ap(&["e+ e+"])));
        assert!(isomorphic(g2, &ap(&["f+ f+"])));
    }

    #[test]
    fn interlaced_bouquet_has_no_cut() {
        assert!(vertex_cuts(&ap(&["a+ b+ a+ b+"])).is_empty());
    }

    #[test]
    fn cuts_rejoin_to_input() {
        let g = ap(&["a+ a- b+ c+ b+ c+ d+", "d-"]);
        let cuts = vertex_cuts(&g);
        assert!(!cuts.is_empty());
        for (g1, g2) in &cuts {
            let found = (0..g1.num_vertices()).any(|c1| {
                (0..g1.curves()[c1].len().max(1)).any(|x| {
                    (0..g2.num_vertices()).any(|c2| {
                        (0..g2.curves()[c2].len().max(1)).any(|y| {
                            vertex_join(g1, Gap::new(c1, x), g2, Gap::new(c2, y))
                                .map(|j| isomorphic(&j, &g))
                                .unwrap_or(false)
                        })
                    })
                })
            });
            assert!(found, "{g1} | {g2}");
        }
    }

    #[test]
    fn cut_on_disconnected_input_keeps_other_components() {
        let g = ap(&["a+ a+ b+ b+", "c+ c+"]);
        let cuts = vertex_cuts(&g);
        assert_eq!(cuts.len(), 1);
        let (g1, g2) = &cuts[0];
        assert_eq!(g1.num_edges() + g2.num_edges(), 3);
        assert_eq!(g1.num_vertices() + g2.num_vertices(), 3);
    }

    #[test]
    fn join_all_then_cut_back() {
        let g = ap(&["a+ a+", "", "b+ c- b+", "c+"]);
        let states = join_all_components(&g);
        let last = states.last().unwrap();
        assert!(last.is_connected());
        for w in states.windows(2) {
            assert!(join_results(&w[0]).iter().any(|j| isomorphic(j, &w[1])));
            assert!(cut_results(&w[1]).iter().any(|c| isomorphic(c, &w[0])));
        }
    }
}
