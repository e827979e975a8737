//! Isomorphism of set systems by backtracking over ground bijections.

use super::set_system::SetSystem;
use crate::subset::Subset;

/// Per-element signature: how many feasible sets of each size contain it.
fn signatures(d: &SetSystem) -> Vec<Vec<usize>> {
    let n = d.ground_size();
    let mut sig = vec![vec![0; n + 1]; n];
    for f in d.feasible() {
        for e in f.iter() {
            sig[e][f.len()] += 1;
        }
    }
    sig
}

fn size_profile(d: &SetSystem) -> Vec<usize> {
    let mut p = vec![0; d.ground_size() + 1];
    for f in d.feasible() {
        p[f.len()] += 1;
    }
    p
}

struct Matcher<'a> {
    d2: &'a SetSystem,
    sig1: Vec<Vec<usize>>,
    sig2: Vec<Vec<usize>>,
    /// Feasible sets of `d1` grouped by their largest element, so each set
    /// is checked as soon as all its elements are mapped.
    by_max: Vec<Vec<Subset>>,
    phi: Vec<usize>,
    used: u32,
}

impl Matcher<'_> {
    fn image(&self, f: Subset) -> Subset {
        f.map(|e| self.phi[e])
    }

    fn go(&mut self, i: usize) -> bool {
        let n = self.phi.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if self.used >> j & 1 == 1 || self.sig1[i] != self.sig2[j] {
                continue;
            }
            self.phi[i] = j;
            let ok = self.by_max[i]
                .iter()
                .all(|&f| self.d2.contains(self.image(f)));
            if ok {
                self.used |= 1 << j;
                if self.go(i + 1) {
                    return true;
                }
                self.used &= !(1 << j);
            }
        }
        false
    }
}

/// A bijection `phi` of ground indices (`phi[i]` indexes `d2`'s ground)
/// mapping the feasible family of `d1` onto that of `d2`, if one exists.
pub fn isomorphic_dm(d1: &SetSystem, d2: &SetSystem) -> Option<Vec<usize>> {
    if d1.ground_size() != d2.ground_size()
        || d1.feasible().len() != d2.feasible().len()
        || size_profile(d1) != size_profile(d2)
    {
        return None;
    }
    let n = d1.ground_size();
    let mut by_max = vec![Vec::new(); n];
    for &f in d1.feasible() {
        if let Some(m) = f.iter().last() {
            by_max[m].push(f);
        }
    }
    let mut m = Matcher {
        d2,
        sig1: signatures(d1),
        sig2: signatures(d2),
        by_max,
        phi: vec![usize::MAX; n],
        used: 0,
    };
    // Same count plus every image feasible means the map is onto.
    m.go(0).then_some(m.phi)
}

/// The bijection as label pairs.
pub fn bijection_labels(d1: &SetSystem, d2: &SetSystem, phi: &[usize]) -> Vec<(String, String)> {
    phi.iter()
        .enumerate()
        .map(|(i, &j)| (d1.ground()[i].clone(), d2.ground()[j].clone()))
        .collect()
}
