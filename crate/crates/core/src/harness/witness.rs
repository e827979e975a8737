//! Searching a population for a ribbon graph with a prescribed delta-matroid.

use rayon::prelude::*;

use super::enumerate::{enumerate_ribbon_graphs, PopulationSpec};
use crate::dm::{isomorphic_dm, SetSystem};
use crate::error::{Error, Result};
use crate::ops::delta_matroid_of;
use crate::ribbon::ArrowPresentation;

/// A presentation whose delta-matroid equals the target exactly, with the
/// edge bijection from the enumerated graph's labels to the target's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub presentation: ArrowPresentation,
    pub bijection: Vec<(String, String)>,
}

/// The first graph in the population (restricted to `|ground|` edges) whose
/// delta-matroid is isomorphic to `target`, relabelled onto its ground set.
pub fn find_witness(target: &SetSystem, spec: &PopulationSpec) -> Result<Option<Witness>> {
    let m = target.ground_size();
    if m > spec.max_edges {
        return Err(Error::Invalid(format!(
            "target has {m} elements but the population stops at {} edges",
            spec.max_edges
        )));
    }
    let pop = enumerate_ribbon_graphs(&spec.exactly(m))?;
    let found = pop.par_iter().find_map_first(|g| {
        let d = delta_matroid_of(g).ok()?;
        let phi = isomorphic_dm(&d, target)?;
        Some((g, phi))
    });
    let Some((g, phi)) = found else {
        return Ok(None);
    };
    let bijection: Vec<(String, String)> = g
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), target.ground()[phi[i]].clone()))
        .collect();
    let presentation = g.relabel(|l| {
        bijection
            .iter()
            .find(|(from, _)| from == l)
            .map(|(_, to)| to.clone())
            .unwrap_or_else(|| l.to_string())
    })?;
    debug_assert_eq!(delta_matroid_of(&presentation).ok().as_ref(), Some(target));
    Ok(Some(Witness {
        presentation,
        bijection,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::isomorphic;

    #[test]
    fn mobius_loop() {
        let t = SetSystem::from_labels(&["e"], &[&[], &["e"]]).unwrap();
        let w = find_witness(&t, &PopulationSpec::up_to(1, 2))
            .unwrap()
            .unwrap();
        assert!(isomorphic(
            &w.presentation,
            &ArrowPresentation::from_token_lines(&["e+ e-"]).unwrap()
        ));
        assert_eq!(delta_matroid_of(&w.presentation).unwrap(), t);
    }

    #[test]
    fn absent_and_oversized() {
        // Not a delta-matroid, so no ribbon graph has it.
        let t = SetSystem::from_labels(&["a", "b", "c"], &[&[], &["a", "b", "c"]]).unwrap();
        assert_eq!(
            find_witness(&t, &PopulationSpec::up_to(3, 2)).unwrap(),
            None
        );
        assert!(find_witness(&t, &PopulationSpec::up_to(2, 2)).is_err());
    }
}
