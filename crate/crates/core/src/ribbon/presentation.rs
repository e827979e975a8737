use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{is_valid_label, label_cmp, Subset, MASK_BITS};

/// Direction of an arrow relative to the traversal direction of its curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Forward,
    Backward,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Forward => Sign::Backward,
            Sign::Backward => Sign::Forward,
        }
    }

    pub fn flip_if(self, cond: bool) -> Sign {
        if cond {
            self.flip()
        } else {
            self
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Forward => '+',
            Sign::Backward => '-',
        }
    }
}

/// One labelled arrow sitting on a curve. `edge` indexes the owning
/// presentation's label list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowEnd {
    pub edge: usize,
    pub sign: Sign,
}

impl ArrowEnd {
    pub fn new(edge: usize, sign: Sign) -> Self {
        ArrowEnd { edge, sign }
    }
}

/// A ribbon graph given by closed curves (vertices) carrying pairs of
/// labelled arrows (edges).
///
/// Labels are kept in natural order and every label occurs on exactly two
/// arrows. Curves are cyclic; the stored starting point is arbitrary.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowPresentation {
    labels: Vec<String>,
    curves: Vec<Vec<ArrowEnd>>,
}

impl ArrowPresentation {
    /// Presentation with no vertices and no edges.
    pub fn empty() -> Self {
        ArrowPresentation {
            labels: Vec::new(),
            curves: Vec::new(),
        }
    }

    /// A single vertex with no edges.
    pub fn isolated_vertex() -> Self {
        ArrowPresentation {
            labels: Vec::new(),
            curves: vec![Vec::new()],
        }
    }

    /// Builds a presentation from labelled curves, validating that each
    /// label appears exactly twice.
    pub fn from_labelled<S: AsRef<str>>(curves: &[Vec<(S, Sign)>]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut raw = Vec::with_capacity(curves.len());
        for curve in curves {
            let mut c = Vec::with_capacity(curve.len());
            for (label, sign) in curve {
                let label = label.as_ref();
                if !is_valid_label(label) {
                    return Err(Error::Invalid(format!("invalid label `{label}`")));
                }
                let idx = match labels.iter().position(|l| l == label) {
                    Some(i) => i,
                    None => {
                        labels.push(label.to_string());
                        counts.push(0);
                        labels.len() - 1
                    }
                };
                counts[idx] += 1;
                c.push(ArrowEnd::new(idx, *sign));
            }
            raw.push(c);
        }
        if let Some(i) = counts.iter().position(|&c| c != 2) {
            return Err(Error::Invalid(format!(
                "label `{}` occurs {} times, expected 2",
                labels[i], counts[i]
            )));
        }
        if labels.len() > MASK_BITS {
            return Err(Error::CapExceeded {
                what: "presentation",
                size: labels.len(),
                cap: MASK_BITS,
            });
        }
        Ok(Self::normalized(labels, raw))
    }

    /// Parses curves written as whitespace-separated `<label><sign>` tokens,
    /// one string per curve.
    pub fn from_token_lines(lines: &[&str]) -> Result<Self> {
        let mut curves = Vec::new();
        for (n, line) in lines.iter().enumerate() {
            curves.push(super::format::parse_tokens(line, n + 1)?);
        }
        Self::from_labelled(&curves)
    }

    /// Sorts labels naturally and remaps arrow indices. Callers guarantee the
    /// two-arrows-per-label invariant.
    pub(crate) fn normalized(labels: Vec<String>, curves: Vec<Vec<ArrowEnd>>) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| label_cmp(&labels[a], &labels[b]));
        let mut remap = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let sorted = order.iter().map(|&i| labels[i].clone()).collect();
        let curves = curves
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|a| ArrowEnd::new(remap[a.edge], a.sign))
                    .collect()
            })
            .collect();
        let ap = ArrowPresentation {
            labels: sorted,
            curves,
        };
        debug_assert!(ap.check_invariants());
        ap
    }

    fn check_invariants(&self) -> bool {
        let mut counts = vec![0usize; self.labels.len()];
        for a in self.curves.iter().flatten() {
            if a.edge >= counts.len() {
                return false;
            }
            counts[a.edge] += 1;
        }
        counts.iter().all(|&c| c == 2)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn curves(&self) -> &[Vec<ArrowEnd>] {
        &self.curves
    }

    pub fn num_vertices(&self) -> usize {
        self.curves.len()
    }

    pub fn num_edges(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn all_edges(&self) -> Subset {
        Subset::full(self.labels.len())
    }

    /// Edge subset from labels; fails on labels not in the edge set.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        Subset::from_labels(&self.labels, labels)
    }

    /// Validates that a mask only names existing edges.
    pub fn check_subset(&self, a: Subset) -> Result<()> {
        if a.is_subset_of(self.all_edges()) {
            Ok(())
        } else {
            let bad = a.iter().find(|&i| i >= self.labels.len()).unwrap_or(0);
            Err(Error::UnknownLabel(format!("#{bad}")))
        }
    }

    /// Positions `(curve, index)` of the two arrows of each edge, in
    /// reading order.
    pub fn occurrences(&self) -> Vec<[(usize, usize); 2]> {
        let mut occ = vec![[(usize::MAX, 0); 2]; self.labels.len()];
        let mut seen = vec![0usize; self.labels.len()];
        for (c, curve) in self.curves.iter().enumerate() {
            for (p, a) in curve.iter().enumerate() {
                occ[a.edge][seen[a.edge]] = (c, p);
                seen[a.edge] += 1;
            }
        }
        occ
    }

    /// Connected-component id for each curve (ids in order of first curve)
    /// restricted to the edges in `a`, together with the component count.
    pub fn components_with(&self, a: Subset) -> (usize, Vec<usize>) {
        let n = self.curves.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut x = x;
            while p[x] != r {
                let nx = p[x];
                p[x] = r;
                x = nx;
            }
            r
        }
        for (e, [(c1, _), (c2, _)]) in self.occurrences().into_iter().enumerate() {
            if a.contains(e) {
                let (r1, r2) = (find(&mut parent, c1), find(&mut parent, c2));
                if r1 != r2 {
                    parent[r1.max(r2)] = r1.min(r2);
                }
            }
        }
        let mut ids = vec![usize::MAX; n];
        let mut root_id: Vec<Option<usize>> = vec![None; n];
        let mut next = 0;
        for (c, slot) in ids.iter_mut().enumerate() {
            let r = find(&mut parent, c);
            *slot = *root_id[r].get_or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
        (next, ids)
    }

    /// Connected components of the whole presentation.
    pub fn components(&self) -> (usize, Vec<usize>) {
        self.components_with(self.all_edges())
    }

    pub fn is_connected(&self) -> bool {
        self.components().0 == 1
    }

    /// Sub-presentation made of the given curves, in the given order.
    pub fn restrict_to_curves(&self, curves: &[usize]) -> ArrowPresentation {
        let mut keep = vec![None; self.labels.len()];
        let mut labels = Vec::new();
        let mut out = Vec::with_capacity(curves.len());
        for &c in curves {
            let mut nc = Vec::with_capacity(self.curves[c].len());
            for a in &self.curves[c] {
                let idx = *keep[a.edge].get_or_insert_with(|| {
                    labels.push(self.labels[a.edge].clone());
                    labels.len() - 1
                });
                nc.push(ArrowEnd::new(idx, a.sign));
            }
            out.push(nc);
        }
        Self::normalized(labels, out)
    }

    /// Splits into connected components, each as its own presentation.
    pub fn component_parts(&self) -> Vec<ArrowPresentation> {
        let (k, ids) = self.components();
        (0..k)
            .map(|comp| {
                let curves: Vec<usize> = (0..ids.len()).filter(|&c| ids[c] == comp).collect();
                self.restrict_to_curves(&curves)
            })
            .collect()
    }

    /// Mirror image: every curve traversed the other way.
    pub fn reflect(&self) -> ArrowPresentation {
        let curves = self
            .curves
            .iter()
            .map(|c| {
                c.iter()
                    .rev()
                    .map(|a| ArrowEnd::new(a.edge, a.sign.flip()))
                    .collect()
            })
            .collect();
        ArrowPresentation {
            labels: self.labels.clone(),
            curves,
        }
    }

    /// Renames edges; the map must be injective on this edge set.
    pub fn relabel(&self, rename: impl Fn(&str) -> String) -> Result<ArrowPresentation> {
        let labels: Vec<String> = self.labels.iter().map(|l| rename(l)).collect();
        for (i, l) in labels.iter().enumerate() {
            if !is_valid_label(l) {
                return Err(Error::Invalid(format!("invalid label `{l}`")));
            }
            if labels[..i].contains(l) {
                return Err(Error::LabelCollision(l.clone()));
            }
        }
        Ok(Self::normalized(labels, self.curves.clone()))
    }

    /// Same presentation with its curves replaced; used by operations that
    /// keep the edge set.
    pub(crate) fn with_curves(&self, curves: Vec<Vec<ArrowEnd>>) -> ArrowPresentation {
        let ap = ArrowPresentation {
            labels: self.labels.clone(),
            curves,
        };
        debug_assert!(ap.check_invariants());
        ap
    }

    /// Disjoint union; fails when the edge label sets overlap.
    pub fn disjoint_union(&self, other: &ArrowPresentation) -> Result<ArrowPresentation> {
        if let Some(l) = self.labels.iter().find(|l| other.labels.contains(l)) {
            return Err(Error::LabelCollision(l.clone()));
        }
        let off = self.labels.len();
        if off + other.labels.len() > MASK_BITS {
            return Err(Error::CapExceeded {
                what: "presentation",
                size: off + other.labels.len(),
                cap: MASK_BITS,
            });
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut curves = self.curves.clone();
        curves.extend(other.curves.iter().map(|c| {
            c.iter()
                .map(|a| ArrowEnd::new(a.edge + off, a.sign))
                .collect::<Vec<_>>()
        }));
        Ok(Self::normalized(labels, curves))
    }

    /// Single-line form: curves separated by ` / `.
    pub fn inline(&self) -> String {
        if self.curves.is_empty() {
            return "(empty)".to_string();
        }
        self.curves
            .iter()
            .map(|c| self.curve_text(c))
            .collect::<Vec<_>>()
            .join(" / ")
    }

    pub(crate) fn curve_text(&self, curve: &[ArrowEnd]) -> String {
        if curve.is_empty() {
            "vertex".to_string()
        } else {
            format!("vertex {}", self.tokens_text(curve))
        }
    }

    /// Space-separated tokens such as `a+ b-`.
    pub(crate) fn tokens_text(&self, curve: &[ArrowEnd]) -> String {
        curve
            .iter()
            .map(|a| format!("{}{}", self.labels[a.edge], a.sign.symbol()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for ArrowPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.inline())
    }
}

impl fmt::Display for ArrowPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inline())
    }
}
