//! Deciding whether two ribbon graphs are related by vertex joins, vertex
//! cuts, mutation and isomorphism, with a replayable certificate.
//!
//! The decision itself compares delta-matroids. When they agree, both sides
//! are joined into connected graphs, a mutation path links the two
//! connected graphs, and the second side's joins are undone by cuts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::chords::{mutants_of_ribbon_graph, orbit_tree, path_in_tree, DEFAULT_BUDGET};
use crate::dm::{bijection_labels, isomorphic_dm, SetSystem};
use crate::error::{Error, Result};
use crate::ops::delta_matroid_of;
use crate::ribbon::{
    canonical_form, cut_results, isomorphic, join_all_components, join_results, ArrowPresentation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    Join,
    Mutate,
    Cut,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Join => "join",
            MoveKind::Mutate => "mutate",
            MoveKind::Cut => "cut",
        }
    }
}

/// One step of a certificate: the presentation reached by the move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub result: ArrowPresentation,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.kind.name(), self.result)
    }
}

/// Why two delta-matroids are not isomorphic, cheapest reason first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsoWitness {
    EdgeCount(usize, usize),
    Evenness(bool, bool),
    SizeProfile(Vec<usize>, Vec<usize>),
    NoBijection,
}

impl fmt::Display for NonIsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parity = |e: bool| if e { "even" } else { "odd" };
        match self {
            NonIsoWitness::EdgeCount(a, b) => write!(f, "edge counts differ ({a} vs {b})"),
            NonIsoWitness::Evenness(a, b) => {
                write!(f, "evenness differs ({} vs {})", parity(*a), parity(*b))
            }
            NonIsoWitness::SizeProfile(a, b) => {
                write!(f, "feasible set sizes differ ({a:?} vs {b:?})")
            }
            NonIsoWitness::NoBijection => f.write_str("no ground bijection matches the families"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoIsoOutcome {
    Equivalent {
        /// Edge bijection between the delta-matroids.
        bijection: Vec<(String, String)>,
        /// Moves from the first graph to one isomorphic to the second.
        /// `None` only if no mutation path was found, which would contradict
        /// the delta-matroid decision.
        certificate: Option<Vec<Move>>,
    },
    NotEquivalent(NonIsoWitness),
}

impl TwoIsoOutcome {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, TwoIsoOutcome::Equivalent { .. })
    }
}

fn size_profile(d: &SetSystem) -> Vec<usize> {
    let mut p = vec![0; d.ground_size() + 1];
    for f in d.feasible() {
        p[f.len()] += 1;
    }
    p
}

fn non_iso_witness(d1: &SetSystem, d2: &SetSystem) -> NonIsoWitness {
    if d1.ground_size() != d2.ground_size() {
        return NonIsoWitness::EdgeCount(d1.ground_size(), d2.ground_size());
    }
    let (e1, e2) = (d1.classify().even, d2.classify().even);
    if e1 != e2 {
        return NonIsoWitness::Evenness(e1, e2);
    }
    let (p1, p2) = (size_profile(d1), size_profile(d2));
    if p1 != p2 {
        return NonIsoWitness::SizeProfile(p1, p2);
    }
    NonIsoWitness::NoBijection
}

type Tree = BTreeMap<ArrowPresentation, Option<ArrowPresentation>>;

/// Decides pairs while caching mutation orbits of connected graphs.
pub struct TwoIsoSolver {
    budget: usize,
    trees: Mutex<HashMap<ArrowPresentation, Arc<Tree>>>,
}

impl Default for TwoIsoSolver {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

impl TwoIsoSolver {
    pub fn new(budget: usize) -> Self {
        TwoIsoSolver {
            budget,
            trees: Mutex::new(HashMap::new()),
        }
    }

    fn tree(&self, root: &ArrowPresentation) -> Result<Arc<Tree>> {
        if let Some(t) = self.trees.lock().unwrap().get(root) {
            return Ok(t.clone());
        }
        let tree = Arc::new(orbit_tree(root, self.budget)?);
        let mut cache = self.trees.lock().unwrap();
        // Every member of the orbit shares it, but paths are rooted, so
        // only the root is cached.
        cache.insert(root.clone(), tree.clone());
        Ok(tree)
    }

    pub fn decide(&self, a: &ArrowPresentation, b: &ArrowPresentation) -> Result<TwoIsoOutcome> {
        if a.num_vertices() == 0 || b.num_vertices() == 0 {
            return Err(Error::Invalid("presentation has no vertices".into()));
        }
        let (d1, d2) = (delta_matroid_of(a)?, delta_matroid_of(b)?);
        let Some(phi) = isomorphic_dm(&d1, &d2) else {
            return Ok(TwoIsoOutcome::NotEquivalent(non_iso_witness(&d1, &d2)));
        };
        let bijection = bijection_labels(&d1, &d2, &phi);
        let certificate = self.certificate(a, b)?;
        Ok(TwoIsoOutcome::Equivalent {
            bijection,
            certificate,
        })
    }

    fn certificate(
        &self,
        a: &ArrowPresentation,
        b: &ArrowPresentation,
    ) -> Result<Option<Vec<Move>>> {
        if isomorphic(a, b) {
            return Ok(Some(Vec::new()));
        }
        let joins_a = join_all_components(a);
        let joins_b = join_all_components(b);
        let (ca, cb) = (joins_a.last().unwrap(), joins_b.last().unwrap());
        let root = canonical_form(ca);
        let tree = self.tree(&root)?;
        let Some(path) = path_in_tree(&tree, &canonical_form(cb)) else {
            return Ok(None);
        };
        let mut moves: Vec<Move> = joins_a[1..]
            .iter()
            .map(|g| Move {
                kind: MoveKind::Join,
                result: g.clone(),
            })
            .collect();
        moves.extend(path[1..].iter().map(|g| Move {
            kind: MoveKind::Mutate,
            result: g.clone(),
        }));
        moves.extend(joins_b[..joins_b.len() - 1].iter().rev().map(|g| Move {
            kind: MoveKind::Cut,
            result: g.clone(),
        }));
        Ok(Some(moves))
    }
}

/// One-shot decision with a fresh solver.
pub fn two_isomorphism_decide(
    a: &ArrowPresentation,
    b: &ArrowPresentation,
) -> Result<TwoIsoOutcome> {
    TwoIsoSolver::default().decide(a, b)
}

/// Replays `moves` from `a`, checking each step is a legal move up to
/// isomorphism, and that the walk ends at a graph isomorphic to `b`.
pub fn verify_certificate(a: &ArrowPresentation, b: &ArrowPresentation, moves: &[Move]) -> bool {
    let mut cur = a.clone();
    for m in moves {
        let legal = match m.kind {
            MoveKind::Join => join_results(&cur).iter().any(|j| isomorphic(j, &m.result)),
            MoveKind::Cut => cut_results(&cur).iter().any(|c| isomorphic(c, &m.result)),
            MoveKind::Mutate => {
                let key = canonical_form(&m.result);
                cur.is_connected()
                    && mutants_of_ribbon_graph(&canonical_form(&cur))
                        .map(|ms| ms.iter().any(|x| canonical_form(x) == key))
                        .unwrap_or(false)
            }
        };
        if !legal {
            return false;
        }
        cur = m.result.clone();
    }
    isomorphic(&cur, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ap(lines: &[&str]) -> ArrowPresentation {
        ArrowPresentation::from_token_lines(lines).unwrap()
    }

    #[test]
    fn same_graph_needs_no_moves() {
        let g = ap(&["a+ b- a+", "b+"]);
        let h = ap(&["y+", "x+ y- x+"]);
        match two_isomorphism_decide(&g, &h).unwrap() {
            TwoIsoOutcome::Equivalent { certificate, .. } => assert_eq!(certificate, Some(vec![])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn loops_differ_by_evenness() {
        let out = two_isomorphism_decide(&ap(&["e+ e+"]), &ap(&["e+ e-"])).unwrap();
        assert_eq!(
            out,
            TwoIsoOutcome::NotEquivalent(NonIsoWitness::Evenness(true, false))
        );
    }

    #[test]
    fn disconnected_pair_goes_through_joins_and_cuts() {
        let g = ap(&["a+ a+", "b+ c+", "b+ c+"]);
        let h = ap(&["a+ a+ b+ c+", "b+ c+"]);
        let TwoIsoOutcome::Equivalent { certificate, .. } = two_isomorphism_decide(&g, &h).unwrap()
        else {
            panic!("expected equivalence");
        };
        let moves = certificate.unwrap();
        assert!(!moves.is_empty());
        assert!(verify_certificate(&g, &h, &moves));
        assert!(!verify_certificate(
            &g,
            &ap(&["a+ a- b+ c+", "b+ c+"]),
            &moves
        ));
    }

    #[test]
    fn mutant_pairs_are_one_move_apart() {
        let g = ap(&["a+ b+ c+ d+ a+ b+ d+ c+"]);
        for m in mutants_of_ribbon_graph(&g).unwrap() {
            let TwoIsoOutcome::Equivalent { certificate, .. } =
                two_isomorphism_decide(&g, &m).unwrap()
            else {
                panic!("mutant not equivalent");
            };
            let moves = certificate.unwrap();
            assert_eq!(moves.len(), 1);
            assert!(verify_certificate(&g, &m, &moves));
        }
    }

    #[test]
    fn tampered_certificate_fails() {
        let g = ap(&["a+ a+", "b+ b+"]);
        let bogus = vec![Move {
            kind: MoveKind::Join,
            result: ap(&["a+ b+ a+ b+"]),
        }];
        assert!(!verify_certificate(&g, &ap(&["a+ b+ a+ b+"]), &bogus));
    }
}
