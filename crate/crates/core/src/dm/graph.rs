//! Small simple graphs: fundamental graphs and intersection graphs.

use std::fmt;

use super::set_system::SetSystem;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Undirected simple graph; `adj[i]` is the neighbour mask of vertex `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: Vec<String>,
    adj: Vec<u32>,
}

impl SimpleGraph {
    pub fn new(vertices: Vec<String>) -> Result<Self> {
        if vertices.len() > 32 {
            return Err(Error::CapExceeded {
                what: "graph",
                size: vertices.len(),
                cap: 32,
            });
        }
        let n = vertices.len();
        Ok(SimpleGraph {
            vertices,
            adj: vec![0; n],
        })
    }

    pub fn with_edges<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::new(vertices.iter().map(|v| v.as_ref().to_string()).collect())?;
        for (u, v) in edges {
            let i = g.index(u.as_ref())?;
            let j = g.index(v.as_ref())?;
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::Invalid(format!("loop at `{}`", self.vertices[i])));
        }
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        (0..n)
            .flat_map(|i| {
                (i + 1..n)
                    .filter(move |&j| self.adj[i] >> j & 1 == 1)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    fn degree_profile(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.num_vertices()).map(|i| self.degree(i)).collect();
        d.sort_unstable();
        d
    }

    /// A vertex bijection `phi` (as `phi[i]` in `other`) preserving adjacency.
    pub fn isomorphism(&self, other: &SimpleGraph) -> Option<Vec<usize>> {
        let n = self.num_vertices();
        if n != other.num_vertices()
            || self.edges().len() != other.edges().len()
            || self.degree_profile() != other.degree_profile()
        {
            return None;
        }
        let mut phi = vec![usize::MAX; n];
        let mut used = 0u32;
        fn go(
            g: &SimpleGraph,
            h: &SimpleGraph,
            i: usize,
            phi: &mut Vec<usize>,
            used: &mut u32,
        ) -> bool {
            if i == phi.len() {
                return true;
            }
            for j in 0..phi.len() {
                if *used >> j & 1 == 1 || g.degree(i) != h.degree(j) {
                    continue;
                }
                if (0..i).any(|p| g.adjacent(i, p) != h.adjacent(j, phi[p])) {
                    continue;
                }
                phi[i] = j;
                *used |= 1 << j;
                if go(g, h, i + 1, phi, used) {
                    return true;
                }
                *used &= !(1 << j);
            }
            false
        }
        go(self, other, 0, &mut phi, &mut used).then_some(phi)
    }

    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Label-free invariant key: the least adjacency bit string over all
    /// vertex orders that list vertices by ascending degree. Equal keys
    /// exactly when the graphs are isomorphic.
    pub fn canonical_key(&self) -> (usize, Vec<u32>) {
        let n = self.num_vertices();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.degree(i));
        let degs: Vec<usize> = order.iter().map(|&i| self.degree(i)).collect();
        let mut best: Option<Vec<u32>> = None;
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.key_search(&degs, &mut perm, &mut used, &mut best);
        (n, best.unwrap_or_default())
    }

    fn key_search(
        &self,
        degs: &[usize],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut Option<Vec<u32>>,
    ) {
        let n = degs.len();
        if perm.len() == n {
            let rows: Vec<u32> = perm
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    (0..i).fold(0u32, |acc, p| {
                        acc | u32::from(self.adjacent(v, perm[p])) << p
                    })
                })
                .collect();
            if best.as_ref().is_none_or(|b| rows < *b) {
                *best = Some(rows);
            }
            return;
        }
        let slot = perm.len();
        for v in 0..n {
            if used[v] || self.degree(v) != degs[slot] {
                continue;
            }
            used[v] = true;
            perm.push(v);
            self.key_search(degs, perm, used, best);
            perm.pop();
            used[v] = false;
        }
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(i, j)| format!("{}{}", self.vertices[i], self.vertices[j]))
            .collect();
        write!(f, "[{}; {}]", self.vertices.join(","), edges.join(","))
    }
}

/// Graph on the ground set joining `x` and `y` when `{x, y}` is feasible.
pub fn fundamental_graph(d: &SetSystem) -> Result<SimpleGraph> {
    let c = d.classify();
    if !c.normal {
        return Err(Error::NotNormal);
    }
    if !c.even {
        return Err(Error::NotEven);
    }
    let mut g = SimpleGraph::new(d.ground().to_vec())?;
    for f in d.feasible().iter().filter(|f| f.len() == 2) {
        let v: Vec<usize> = f.iter().collect();
        g.add_edge(v[0], v[1])?;
    }
    Ok(g)
}

/// Normal even binary delta-matroid whose fundamental graph is `g`.
pub fn from_graph(g: &SimpleGraph) -> Result<SetSystem> {
    let mut pairs = vec![Subset::EMPTY];
    pairs.extend(
        g.edges()
            .into_iter()
            .map(|(i, j)| Subset::singleton(i).with(j)),
    );
    super::gf2::reconstruct_binary(&SetSystem::from_masks(g.vertices().to_vec(), pairs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(v: &[&str], e: &[(&str, &str)]) -> SimpleGraph {
        SimpleGraph::with_edges(v, e).unwrap()
    }

    #[test]
    fn fundamental_graph_examples() {
        let d = SetSystem::from_labels(&["a", "b"], &[&[], &["a", "b"]]).unwrap();
        assert_eq!(fundamental_graph(&d).unwrap().edges(), vec![(0, 1)]);
        let d = SetSystem::from_labels(&["a", "b"], &[&[]]).unwrap();
        assert!(fundamental_graph(&d).unwrap().edges().is_empty());
        let d = SetSystem::from_labels(&["a"], &[&[], &["a"]]).unwrap();
        assert_eq!(fundamental_graph(&d), Err(Error::NotEven));
    }

    #[test]
    fn round_trip_through_delta_matroid() {
        let g = graph(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "c")],
        );
        let d = from_graph(&g).unwrap();
        assert_eq!(fundamental_graph(&d).unwrap(), g);
    }

    #[test]
    fn isomorphism_and_keys() {
        let p1 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let p2 = graph(&["x", "y", "z"], &[("x", "z"), ("y", "z")]);
        let k3 = graph(&["x", "y", "z"], &[("x", "y"), ("x", "z"), ("y", "z")]);
        let phi = p1.isomorphism(&p2).unwrap();
        for (i, j) in p1.edges() {
            assert!(p2.adjacent(phi[i], phi[j]));
        }
        assert!(!p1.is_isomorphic(&k3));
        assert_eq!(p1.canonical_key(), p2.canonical_key());
        assert_ne!(p1.canonical_key(), k3.canonical_key());
    }

    #[test]
    fn key_agrees_with_isomorphism_on_all_four_vertex_graphs() {
        let v = ["0", "1", "2", "3"];
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .collect();
        let all: Vec<SimpleGraph> = (0u32..64)
            .map(|bits| {
                let mut g = SimpleGraph::new(v.iter().map(|s| s.to_string()).collect()).unwrap();
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if bits >> k & 1 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                }
                g
            })
            .collect();
        for g in &all {
            for h in &all {
                assert_eq!(g.is_isomorphic(h), g.canonical_key() == h.canonical_key());
            }
        }
        let mut keys: Vec<_> = all.iter().map(|g| g.canonical_key()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 11);
    }
}
