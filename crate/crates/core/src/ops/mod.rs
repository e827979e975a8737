//! Delta-matroids of ribbon graphs, partial duals and partial petrials.

use crate::dm::{SetSystem, GROUND_CAP};
use crate::error::{Error, Result};
use crate::ribbon::stats::Tracer;
use crate::ribbon::{ArrowEnd, ArrowPresentation};
use crate::subset::Subset;

fn check_cap(ap: &ArrowPresentation) -> Result<()> {
    if ap.num_edges() > GROUND_CAP {
        return Err(Error::CapExceeded {
            what: "edge set",
            size: ap.num_edges(),
            cap: GROUND_CAP,
        });
    }
    Ok(())
}

fn feasible_where(ap: &ArrowPresentation, keep: impl Fn(Subset, usize) -> bool) -> Vec<Subset> {
    let t = Tracer::new(ap);
    let empties = t.empty_curves();
    Subset::all(ap.num_edges())
        .filter(|&a| keep(a, t.traces(a).len() + empties))
        .collect()
}

/// `D(G)`: the subsets `A` with `b(A) = k(E)`.
pub fn delta_matroid_of(ap: &ArrowPresentation) -> Result<SetSystem> {
    check_cap(ap)?;
    let k = ap.components().0;
    let feasible = feasible_where(ap, |_, b| b == k);
    Ok(SetSystem::from_sorted(ap.labels().to_vec(), feasible))
}

/// `C(G)`: the subsets `A` with `b(A) = k(E)` whose spanning subgraph is
/// plane. These are the spanning forests of the underlying graph.
pub fn cycle_matroid_of(ap: &ArrowPresentation) -> Result<SetSystem> {
    check_cap(ap)?;
    let k = ap.components().0;
    let v = ap.num_vertices();
    let feasible = feasible_where(ap, |a, b| {
        b == k && {
            let ka = ap.components_with(a).0;
            2 * ka + a.len() == v + b
        }
    });
    Ok(SetSystem::from_sorted(ap.labels().to_vec(), feasible))
}

/// `G^τ(A)`: reverses the first arrow of every edge in `a`.
pub fn partial_petrial(ap: &ArrowPresentation, a: Subset) -> Result<ArrowPresentation> {
    ap.check_subset(a)?;
    let mut curves = ap.curves().to_vec();
    let mut done = Subset::EMPTY;
    for curve in &mut curves {
        for arrow in curve.iter_mut() {
            if a.contains(arrow.edge) && !done.contains(arrow.edge) {
                arrow.sign = arrow.sign.flip();
                done = done.with(arrow.edge);
            }
        }
    }
    Ok(ap.with_curves(curves))
}

/// `G^A`: the new vertices are the boundary components of `(V, A)`.
///
/// Each traced boundary becomes a curve. Edges outside `a` keep their arrow
/// segment; edges in `a` are re-placed on the two free sides of their band,
/// read from head to tail. Empty curves survive as isolated vertices.
pub fn partial_dual(ap: &ArrowPresentation, a: Subset) -> Result<ArrowPresentation> {
    ap.check_subset(a)?;
    let t = Tracer::new(ap);
    let mut curves: Vec<Vec<ArrowEnd>> =
        t.traces(a).into_iter().map(|(_, arrows)| arrows).collect();
    curves.extend((0..t.empty_curves()).map(|_| Vec::new()));
    Ok(ap.with_curves(curves))
}

/// Edge sets of spanning quasi-trees: subsets with a single boundary.
pub fn spanning_quasi_trees(ap: &ArrowPresentation) -> Result<Vec<Subset>> {
    check_cap(ap)?;
    let k = ap.components().0;
    if k != 1 {
        return Err(Error::Disconnected(k));
    }
    Ok(feasible_where(ap, |_, b| b == 1))
}
