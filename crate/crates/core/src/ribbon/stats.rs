//! Boundary tracing and the topological statistics derived from it.
//!
//! Every arrow contributes two flank points on its curve: the low flank
//! (earlier in traversal order) and the high flank. A boundary component of
//! the ribbon subgraph `(V, A)` alternates between two kinds of arcs:
//!
//! * gap arcs along the curve, from the high flank of one arrow to the low
//!   flank of the next;
//! * inner arcs: for an edge outside `A` the arrow segment itself (low to
//!   high); for an edge in `A` the two free sides of the edge disc, which run
//!   from the head of each arrow to the tail of its partner.
//!
//! With equal signs this joins high to low flanks (untwisted band), with
//! opposite signs high to high and low to low (twisted band).

use super::presentation::{ArrowEnd, ArrowPresentation, Sign};
use crate::error::Result;
use crate::subset::Subset;

/// A flank point of an arrow: `high` is the later end in traversal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Flank {
    pub curve: usize,
    pub pos: usize,
    pub high: bool,
}

/// Counts for the spanning ribbon subgraph `(V, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopoStats {
    /// Connected components.
    pub k: usize,
    /// Boundary components.
    pub b: usize,
    /// Flank points of each boundary component in tracing order. Empty
    /// curves contribute an empty trace.
    pub boundary_traces: Vec<Vec<Flank>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surface {
    pub orientable: bool,
    pub euler_genus: usize,
    pub is_plane: bool,
}

/// Flattened arrow occurrences with the point-graph adjacency.
pub(crate) struct Tracer<'a> {
    ap: &'a ArrowPresentation,
    occ: Vec<(usize, usize, ArrowEnd)>,
    next: Vec<usize>,
    prev: Vec<usize>,
    partner: Vec<usize>,
}

/// One traversed inner arc: the arrow it becomes on the traced curve.
pub(crate) type TracedArrow = ArrowEnd;

impl<'a> Tracer<'a> {
    pub(crate) fn new(ap: &'a ArrowPresentation) -> Self {
        let mut occ = Vec::new();
        let mut next = Vec::new();
        let mut prev = Vec::new();
        for (c, curve) in ap.curves().iter().enumerate() {
            let base = occ.len();
            let len = curve.len();
            for (p, a) in curve.iter().enumerate() {
                occ.push((c, p, *a));
                next.push(base + (p + 1) % len);
                prev.push(base + (p + len - 1) % len);
            }
        }
        let mut first = vec![usize::MAX; ap.num_edges()];
        let mut partner = vec![0; occ.len()];
        for (o, &(_, _, a)) in occ.iter().enumerate() {
            if first[a.edge] == usize::MAX {
                first[a.edge] = o;
            } else {
                partner[o] = first[a.edge];
                partner[first[a.edge]] = o;
            }
        }
        Tracer {
            ap,
            occ,
            next,
            prev,
            partner,
        }
    }

    #[inline]
    fn tail(&self, o: usize) -> usize {
        match self.occ[o].2.sign {
            Sign::Forward => 2 * o,
            Sign::Backward => 2 * o + 1,
        }
    }

    #[inline]
    fn is_head(&self, p: usize) -> bool {
        p != self.tail(p / 2)
    }

    #[inline]
    fn inner(&self, p: usize, a: Subset) -> usize {
        let o = p / 2;
        if !a.contains(self.occ[o].2.edge) {
            p ^ 1
        } else if self.is_head(p) {
            self.tail(self.partner[o])
        } else {
            self.tail(self.partner[o]) ^ 1
        }
    }

    #[inline]
    fn gap(&self, p: usize) -> usize {
        let o = p / 2;
        if p & 1 == 1 {
            2 * self.next[o]
        } else {
            2 * self.prev[o] + 1
        }
    }

    /// Traces every boundary component of `(V, A)` that meets an arrow.
    /// Each cycle is returned as its visited points together with the arrow
    /// each inner arc carries when the traced curve is read in order.
    pub(crate) fn traces(&self, a: Subset) -> Vec<(Vec<usize>, Vec<TracedArrow>)> {
        let npts = 2 * self.occ.len();
        let mut seen = vec![false; npts];
        let mut out = Vec::new();
        for start in 0..npts {
            if seen[start] {
                continue;
            }
            let mut points = Vec::new();
            let mut arrows = Vec::new();
            let mut p = start;
            loop {
                let q = self.inner(p, a);
                let o = p / 2;
                let edge = self.occ[o].2.edge;
                // A traversed inner arc reads forward when it starts at the
                // arrow tail (through arc) or at a head (side of a band).
                let forward = if a.contains(edge) {
                    self.is_head(p)
                } else {
                    p == self.tail(o)
                };
                arrows.push(ArrowEnd::new(
                    edge,
                    if forward {
                        Sign::Forward
                    } else {
                        Sign::Backward
                    },
                ));
                seen[p] = true;
                seen[q] = true;
                points.push(p);
                points.push(q);
                p = self.gap(q);
                if p == start {
                    break;
                }
            }
            out.push((points, arrows));
        }
        out
    }

    pub(crate) fn flank(&self, p: usize) -> Flank {
        let (curve, pos, _) = self.occ[p / 2];
        Flank {
            curve,
            pos,
            high: p & 1 == 1,
        }
    }

    pub(crate) fn empty_curves(&self) -> usize {
        self.ap.curves().iter().filter(|c| c.is_empty()).count()
    }
}

/// Number of boundary components of `(V, A)`.
pub fn boundary_count(ap: &ArrowPresentation, a: Subset) -> usize {
    let t = Tracer::new(ap);
    t.traces(a).len() + t.empty_curves()
}

/// `k` and `b` of the spanning ribbon subgraph on `a`.
pub fn subgraph_stats(ap: &ArrowPresentation, a: Subset) -> Result<TopoStats> {
    ap.check_subset(a)?;
    let t = Tracer::new(ap);
    let mut boundary_traces: Vec<Vec<Flank>> = t
        .traces(a)
        .into_iter()
        .map(|(pts, _)| pts.into_iter().map(|p| t.flank(p)).collect())
        .collect();
    boundary_traces.extend((0..t.empty_curves()).map(|_| Vec::new()));
    Ok(TopoStats {
        k: ap.components_with(a).0,
        b: boundary_traces.len(),
        boundary_traces,
    })
}

/// Orientability is a balance check: colour each curve by a traversal
/// direction so that every edge joins its arrows with equal signs.
pub fn is_orientable(ap: &ArrowPresentation) -> bool {
    let n = ap.num_vertices();
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for (e, [(c1, p1), (c2, p2)]) in ap.occurrences().into_iter().enumerate() {
        let _ = e;
        let twisted = ap.curves()[c1][p1].sign != ap.curves()[c2][p2].sign;
        if c1 == c2 {
            if twisted {
                return false;
            }
        } else {
            adj[c1].push((c2, twisted));
            adj[c2].push((c1, twisted));
        }
    }
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let cu = colour[u].unwrap();
            for &(v, twisted) in &adj[u] {
                let want = cu ^ twisted;
                match colour[v] {
                    None => {
                        colour[v] = Some(want);
                        stack.push(v);
                    }
                    Some(cv) if cv != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Orientability and Euler genus `2k - |V| + |E| - b(E)` of the closed
/// surface obtained by capping every boundary component.
pub fn orientability_and_genus(ap: &ArrowPresentation) -> Surface {
    let all = ap.all_edges();
    let k = ap.components().0;
    let b = boundary_count(ap, all);
    let euler_genus = (2 * k + ap.num_edges()) - (ap.num_vertices() + b);
    let orientable = is_orientable(ap);
    Surface {
        orientable,
        euler_genus,
        is_plane: euler_genus == 0,
    }
}

/// Euler genus of the spanning ribbon subgraph on `a`.
pub fn subgraph_genus(ap: &ArrowPresentation, a: Subset) -> usize {
    let k = ap.components_with(a).0;
    let b = boundary_count(ap, a);
    (2 * k + a.len()) - (ap.num_vertices() + b)
}
