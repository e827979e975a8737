use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{is_valid_label, label_cmp, Subset};

/// Largest ground set handled by the exhaustive routines.
pub const GROUND_CAP: usize = 16;

/// A ground set of labels with a family of feasible subsets.
///
/// The ground set is kept in natural label order and the family is
/// deduplicated and sorted (by size, then lexicographically), so derived
/// equality is equality of labelled set systems.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: Vec<String>,
    feasible: Vec<Subset>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub proper: bool,
    pub normal: bool,
    pub even: bool,
    pub is_matroid: bool,
    pub is_delta_matroid: bool,
}

/// A failure of the symmetric exchange axiom: no `v` in `x △ y` puts
/// `x △ {u, v}` back in the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub x: Subset,
    pub y: Subset,
    pub u: usize,
}

impl SetSystem {
    /// Builds a set system from masks over `ground` (in the given order).
    pub fn from_masks(
        ground: Vec<String>,
        feasible: impl IntoIterator<Item = Subset>,
    ) -> Result<Self> {
        if ground.len() > GROUND_CAP {
            return Err(Error::CapExceeded {
                what: "ground set",
                size: ground.len(),
                cap: GROUND_CAP,
            });
        }
        for (i, g) in ground.iter().enumerate() {
            if !is_valid_label(g) {
                return Err(Error::Invalid(format!("invalid label `{g}`")));
            }
            if ground[..i].contains(g) {
                return Err(Error::Invalid(format!("duplicate ground element `{g}`")));
            }
        }
        let full = Subset::full(ground.len());
        let feasible: Vec<Subset> = feasible.into_iter().collect();
        if let Some(bad) = feasible.iter().find(|f| !f.is_subset_of(full)) {
            return Err(Error::Invalid(format!(
                "feasible set {bad:?} leaves the ground set"
            )));
        }
        let mut order: Vec<usize> = (0..ground.len()).collect();
        order.sort_by(|&a, &b| label_cmp(&ground[a], &ground[b]));
        let mut remap = vec![0; ground.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let ground = order.iter().map(|&i| ground[i].clone()).collect();
        let mut feasible: Vec<Subset> = feasible.into_iter().map(|f| f.map(|i| remap[i])).collect();
        feasible.sort();
        feasible.dedup();
        Ok(SetSystem { ground, feasible })
    }

    /// Builds from label lists.
    pub fn from_labels<S: AsRef<str>>(ground: &[S], sets: &[&[S]]) -> Result<Self> {
        let ground: Vec<String> = ground.iter().map(|g| g.as_ref().to_string()).collect();
        let masks = sets
            .iter()
            .map(|s| Subset::from_labels(&ground, s))
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(ground, masks)
    }

    /// Skips validation; the ground set is already in natural order.
    pub(crate) fn from_sorted(ground: Vec<String>, mut feasible: Vec<Subset>) -> Self {
        feasible.sort();
        feasible.dedup();
        SetSystem { ground, feasible }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn feasible(&self) -> &[Subset] {
        &self.feasible
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.ground.len())
    }

    pub fn contains(&self, x: Subset) -> bool {
        self.feasible.binary_search(&x).is_ok()
    }

    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        Subset::from_labels(&self.ground, labels)
    }

    fn check_subset(&self, a: Subset) -> Result<()> {
        if a.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "{a:?} is not a subset of the ground set"
            )))
        }
    }

    fn membership(&self) -> Vec<bool> {
        let mut bits = vec![false; 1 << self.ground.len()];
        for f in &self.feasible {
            bits[f.0 as usize] = true;
        }
        bits
    }

    /// First violation of the symmetric exchange axiom, scanning `x`, `y`
    /// in family order and `u` ascending. `v = u` is allowed.
    pub fn exchange_violation(&self) -> Option<ExchangeWitness> {
        let member = self.membership();
        for &x in &self.feasible {
            for &y in &self.feasible {
                let d = x.sym_diff(y);
                for u in d.iter() {
                    let ok = d.iter().any(|v| {
                        let z = x.toggle(u);
                        let z = if v == u { z } else { z.toggle(v) };
                        member[z.0 as usize]
                    });
                    if !ok {
                        return Some(ExchangeWitness { x, y, u });
                    }
                }
            }
        }
        None
    }

    pub fn symmetric_exchange_holds(&self) -> bool {
        self.exchange_violation().is_none()
    }

    pub fn classify(&self) -> Classification {
        let proper = !self.feasible.is_empty();
        let normal = self.contains(Subset::EMPTY);
        let even = self
            .feasible
            .windows(2)
            .all(|w| w[0].len() % 2 == w[1].len() % 2);
        let is_delta_matroid = proper && self.symmetric_exchange_holds();
        let same_size = self.feasible.windows(2).all(|w| w[0].len() == w[1].len());
        Classification {
            proper,
            normal,
            even,
            is_matroid: is_delta_matroid && same_size,
            is_delta_matroid,
        }
    }

    /// `D * A`: every feasible set replaced by its symmetric difference with `a`.
    pub fn twist(&self, a: Subset) -> Result<SetSystem> {
        self.check_subset(a)?;
        Ok(Self::from_sorted(
            self.ground.clone(),
            self.feasible.iter().map(|f| f.sym_diff(a)).collect(),
        ))
    }

    /// `D + e`: toggles `F ∪ e` for every feasible `F` missing `e`.
    fn loop_complement_one(&self, e: usize) -> SetSystem {
        let mut member = self.membership();
        for &f in &self.feasible {
            if !f.contains(e) {
                let g = f.with(e);
                member[g.0 as usize] = !member[g.0 as usize];
            }
        }
        let feasible = member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| Subset(i as u32))
            .collect();
        Self::from_sorted(self.ground.clone(), feasible)
    }

    /// `D + A`, applying single-element loop complementation for each
    /// element of `a` (the result does not depend on the order).
    pub fn loop_complement(&self, a: Subset) -> Result<SetSystem> {
        self.check_subset(a)?;
        Ok(a.iter().fold(self.clone(), |d, e| d.loop_complement_one(e)))
    }

    /// Direct sum over disjoint ground sets.
    pub fn direct_sum(&self, other: &SetSystem) -> Result<SetSystem> {
        if let Some(g) = self.ground.iter().find(|g| other.ground.contains(g)) {
            return Err(Error::LabelCollision(g.clone()));
        }
        let off = self.ground.len();
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().cloned());
        if ground.len() > GROUND_CAP {
            return Err(Error::CapExceeded {
                what: "ground set",
                size: ground.len(),
                cap: GROUND_CAP,
            });
        }
        let mut feasible = Vec::with_capacity(self.feasible.len() * other.feasible.len());
        for &f in &self.feasible {
            for &g in &other.feasible {
                feasible.push(Subset(f.0 | g.0 << off));
            }
        }
        Self::from_masks(ground, feasible)
    }

    /// Feasible sets of size at most two.
    pub fn small_sets(&self) -> SetSystem {
        Self::from_sorted(
            self.ground.clone(),
            self.feasible
                .iter()
                .copied()
                .filter(|f| f.len() <= 2)
                .collect(),
        )
    }

    /// Renames ground elements.
    pub fn relabel(&self, rename: impl Fn(&str) -> String) -> Result<SetSystem> {
        Self::from_masks(
            self.ground.iter().map(|g| rename(g)).collect(),
            self.feasible.iter().copied(),
        )
    }

    /// Textual form: a `ground` line followed by one `feasible` line per set,
    /// `feasible -` standing for the empty set.
    pub fn to_text(&self) -> String {
        let mut s = String::from("ground");
        for g in &self.ground {
            s.push(' ');
            s.push_str(g);
        }
        s.push('\n');
        for f in &self.feasible {
            s.push_str("feasible");
            if f.is_empty() {
                s.push_str(" -");
            }
            for g in f.labels(&self.ground) {
                s.push(' ');
                s.push_str(g);
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<SetSystem> {
        let mut ground: Option<Vec<String>> = None;
        let mut sets = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            let mut words = line.split_whitespace();
            match words.next() {
                Some("ground") => {
                    if ground.is_some() {
                        return Err(err("duplicate ground line".into()));
                    }
                    ground = Some(words.map(str::to_string).collect());
                }
                Some("feasible") => {
                    let g = ground
                        .as_ref()
                        .ok_or_else(|| err("feasible line before ground line".into()))?;
                    let elems: Vec<&str> = words.collect();
                    let mask = if elems == ["-"] {
                        Subset::EMPTY
                    } else {
                        Subset::from_labels(g, &elems).map_err(|e| err(e.to_string()))?
                    };
                    sets.push(mask);
                }
                Some(w) => return Err(err(format!("unexpected `{w}`"))),
                None => unreachable!(),
            }
        }
        let ground = ground.ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing ground line".into(),
        })?;
        Self::from_masks(ground, sets)
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}}, {{", self.ground.join(","))?;
        for (i, s) in self.feasible.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{{{}}}", s.labels(&self.ground).join(","))?;
        }
        f.write_str("})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(ground: &[&str], sets: &[&[&str]]) -> SetSystem {
        SetSystem::from_labels(ground, sets).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = ss(&["e"], &[&[], &["e"]]).classify();
        assert!(c.proper && c.normal && !c.even && c.is_delta_matroid);
        let c = ss(&["e"], &[]).classify();
        assert!(!c.proper && !c.is_delta_matroid);
        let c = ss(&["1", "2"], &[&[], &["1", "2"]]).classify();
        assert!(c.proper && c.normal && c.even && c.is_delta_matroid && !c.is_matroid);
        let c = ss(&["1", "2"], &[&["1"], &["2"]]).classify();
        assert!(c.is_matroid && !c.normal);
    }

    #[test]
    fn exchange_witness() {
        assert!(ss(&["e"], &[&[], &["e"]]).symmetric_exchange_holds());
        assert!(ss(&["1", "2"], &[&[], &["1", "2"]]).symmetric_exchange_holds());
        assert!(ss(&["1", "2"], &[&[], &["1"], &["1", "2"]]).symmetric_exchange_holds());
        let d = ss(&["1", "2", "3"], &[&[], &["1", "2", "3"]]);
        assert_eq!(
            d.exchange_violation(),
            Some(ExchangeWitness {
                x: Subset::EMPTY,
                y: Subset(0b111),
                u: 0
            })
        );
    }

    #[test]
    fn twist_examples() {
        let d = ss(&["e"], &[&[]]);
        assert_eq!(d.twist(Subset(1)).unwrap(), ss(&["e"], &[&["e"]]));
        assert!(d.twist(Subset(0b10)).is_err());
    }

    #[test]
    fn loop_complement_examples() {
        let e = Subset(1);
        assert_eq!(
            ss(&["e"], &[&[]]).loop_complement(e).unwrap(),
            ss(&["e"], &[&[], &["e"]])
        );
        assert_eq!(
            ss(&["e"], &[&[], &["e"]]).loop_complement(e).unwrap(),
            ss(&["e"], &[&[]])
        );
        assert_eq!(
            ss(&["e"], &[&["e"]]).loop_complement(e).unwrap(),
            ss(&["e"], &[&["e"]])
        );
    }

    #[test]
    fn loop_complement_commutes() {
        let d = ss(&["a", "b", "c"], &[&[], &["a", "b"], &["b", "c"], &["a"]]);
        let ab = d
            .loop_complement(Subset(1))
            .unwrap()
            .loop_complement(Subset(2))
            .unwrap();
        let ba = d
            .loop_complement(Subset(2))
            .unwrap()
            .loop_complement(Subset(1))
            .unwrap();
        assert_eq!(ab, ba);
        assert_eq!(ab, d.loop_complement(Subset(3)).unwrap());
    }

    #[test]
    fn direct_sum_examples() {
        let d = ss(&["e"], &[&[]]);
        let f = ss(&["f"], &[&["f"]]);
        assert_eq!(d.direct_sum(&f).unwrap(), ss(&["e", "f"], &[&["f"]]));
        let unit = SetSystem::from_masks(vec![], [Subset::EMPTY]).unwrap();
        assert_eq!(d.direct_sum(&unit).unwrap(), d);
        let g = ss(&["x", "y"], &[&[], &["x"], &["x", "y"]]);
        assert_eq!(d.direct_sum(&g).unwrap().feasible().len(), 3);
        assert!(d.direct_sum(&d).is_err());
    }

    #[test]
    fn text_round_trip() {
        let d = ss(&["e"], &[&[], &["e"]]);
        assert_eq!(d.to_text(), "ground e\nfeasible -\nfeasible e\n");
        assert_eq!(SetSystem::parse(&d.to_text()).unwrap(), d);
        assert!(SetSystem::parse("ground e\nfeasible f\n").is_err());
        assert!(SetSystem::parse("feasible -\n").is_err());
    }

    #[test]
    fn family_order_matches_listing() {
        let d = ss(
            &["1", "2", "3", "4"],
            &[
                &["1", "2", "3", "4"],
                &["4"],
                &["1", "2"],
                &["1"],
                &["3", "4"],
            ],
        );
        let listed: Vec<Vec<&str>> = d.feasible().iter().map(|f| f.labels(d.ground())).collect();
        assert_eq!(
            listed,
            vec![
                vec!["1"],
                vec!["4"],
                vec!["1", "2"],
                vec!["3", "4"],
                vec!["1", "2", "3", "4"]
            ]
        );
    }
}
