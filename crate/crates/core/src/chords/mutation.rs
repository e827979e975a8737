//! Mutation of connected ribbon graphs.
//!
//! A graph is reduced to an orientable bouquet: take the partial dual at a
//! spanning quasi-tree `Q`, then the partial petrial at the set `A` of
//! non-orientable loops of that bouquet. Word mutants of the resulting
//! chord diagram are lifted back with the same `A` and `Q`.

use std::collections::{BTreeMap, VecDeque};

use super::word::{labelled_mutants_of_word, SignedWord};
use crate::error::{Error, Result};
use crate::ops::{partial_dual, partial_petrial, spanning_quasi_trees};
use crate::ribbon::{canonical_form, ArrowEnd, ArrowPresentation, Sign};
use crate::subset::Subset;

/// Default cap on visited classes for orbit searches.
pub const DEFAULT_BUDGET: usize = 1_000_000;

fn require_connected(ap: &ArrowPresentation) -> Result<()> {
    let k = ap.components().0;
    if k > 1 {
        return Err(Error::Disconnected(k));
    }
    Ok(())
}

/// Letters of a bouquet whose two arrows disagree.
fn twisted_loops(b: &ArrowPresentation) -> Subset {
    let mut first: Vec<Option<Sign>> = vec![None; b.num_edges()];
    let mut out = Subset::EMPTY;
    for a in &b.curves()[0] {
        match first[a.edge] {
            None => first[a.edge] = Some(a.sign),
            Some(s) if s != a.sign => out = out.with(a.edge),
            Some(_) => {}
        }
    }
    out
}

/// Double-flips every letter whose arrows both read backward.
fn all_forward(b: &ArrowPresentation) -> ArrowPresentation {
    let curve: Vec<ArrowEnd> = b.curves()[0]
        .iter()
        .map(|a| ArrowEnd::new(a.edge, Sign::Forward))
        .collect();
    b.with_curves(vec![curve])
}

/// Mutants obtained through the reduction at quasi-tree `q`.
pub fn mutants_via(ap: &ArrowPresentation, q: Subset) -> Result<Vec<ArrowPresentation>> {
    let bouquet = partial_dual(ap, q)?;
    if bouquet.num_vertices() != 1 {
        return Err(Error::Invalid(format!(
            "{q:?} is not a spanning quasi-tree"
        )));
    }
    let twisted = twisted_loops(&bouquet);
    let word = SignedWord::from_bouquet(all_forward(&partial_petrial(&bouquet, twisted)?))?;
    let own = canonical_form(ap);
    let mut out = BTreeMap::new();
    for m in labelled_mutants_of_word(&word) {
        let back = partial_dual(&partial_petrial(m.as_bouquet(), twisted)?, q)?;
        let key = canonical_form(&back);
        if key != own {
            out.entry(key).or_insert(back);
        }
    }
    Ok(out.into_values().collect())
}

/// Neighbours of a connected ribbon graph under one mutation, one per
/// isomorphism class other than its own, in canonical order.
pub fn mutants_of_ribbon_graph(ap: &ArrowPresentation) -> Result<Vec<ArrowPresentation>> {
    require_connected(ap)?;
    let q = spanning_quasi_trees(ap)?[0];
    mutants_via(ap, q)
}

/// Breadth-first search tree of the whole orbit: each canonical form maps to
/// the canonical form it was first reached from.
pub fn orbit_tree(
    start: &ArrowPresentation,
    budget: usize,
) -> Result<BTreeMap<ArrowPresentation, Option<ArrowPresentation>>> {
    search(start, None, budget)
}

/// Walks an orbit tree back from `target` to the root.
pub fn path_in_tree(
    tree: &BTreeMap<ArrowPresentation, Option<ArrowPresentation>>,
    target: &ArrowPresentation,
) -> Option<Vec<ArrowPresentation>> {
    let mut cur = tree.get_key_value(target)?.0.clone();
    let mut path = vec![cur.clone()];
    while let Some(Some(p)) = tree.get(&cur) {
        path.push(p.clone());
        cur = p.clone();
    }
    path.reverse();
    Some(path)
}

/// Breadth-first search over canonical forms. Returns the parent map; the
/// search stops early once `target` is reached.
fn search(
    start: &ArrowPresentation,
    target: Option<&ArrowPresentation>,
    budget: usize,
) -> Result<BTreeMap<ArrowPresentation, Option<ArrowPresentation>>> {
    require_connected(start)?;
    let root = canonical_form(start);
    let mut parent = BTreeMap::new();
    parent.insert(root.clone(), None);
    if target == Some(&root) {
        return Ok(parent);
    }
    let mut queue = VecDeque::from([root]);
    while let Some(cur) = queue.pop_front() {
        for m in mutants_of_ribbon_graph(&cur)? {
            let key = canonical_form(&m);
            if parent.contains_key(&key) {
                continue;
            }
            parent.insert(key.clone(), Some(cur.clone()));
            if target == Some(&key) {
                return Ok(parent);
            }
            if parent.len() > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            queue.push_back(key);
        }
    }
    Ok(parent)
}

/// Canonical forms of every graph reachable by mutation and isomorphism.
pub fn mutation_orbit(ap: &ArrowPresentation, budget: usize) -> Result<Vec<ArrowPresentation>> {
    Ok(search(ap, None, budget)?.into_keys().collect())
}

/// Whether two connected ribbon graphs are related by mutation and
/// isomorphism. Running out of budget is an error, not a `false`.
pub fn mutation_equivalent(a: &ArrowPresentation, b: &ArrowPresentation) -> Result<bool> {
    Ok(mutation_path(a, b, DEFAULT_BUDGET)?.is_some())
}

/// A shortest chain of canonical forms from `a` to `b`, each a mutant of
/// the previous one. Starts with `canonical_form(a)`.
pub fn mutation_path(
    a: &ArrowPresentation,
    b: &ArrowPresentation,
    budget: usize,
) -> Result<Option<Vec<ArrowPresentation>>> {
    require_connected(b)?;
    if a.num_edges() != b.num_edges() || a.num_vertices() == 0 || b.num_vertices() == 0 {
        return Ok(None);
    }
    let target = canonical_form(b);
    let parent = search(a, Some(&target), budget)?;
    Ok(path_in_tree(&parent, &target))
}
