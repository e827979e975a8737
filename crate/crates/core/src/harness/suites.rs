//! Named verification suites over exhaustively enumerated populations.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;

use super::enumerate::{enumerate_bouquets, enumerate_ribbon_graphs, PopulationSpec};
use super::report::{Record, SuiteReport};
use super::two_iso::{verify_certificate, TwoIsoOutcome, TwoIsoSolver};
use super::witness::find_witness;
use crate::chords::{
    intersection_graph, mutants_of_ribbon_graph, mutation_orbit, word_orbit, SignedWord,
    DEFAULT_BUDGET,
};
use crate::dm::{isomorphic_dm, reconstruct_binary, SetSystem};
use crate::error::{Error, Result};
use crate::ops::{cycle_matroid_of, delta_matroid_of, partial_dual, partial_petrial};
use crate::poly::{bollobas_riordan, tutte};
use crate::ribbon::{boundary_count, isomorphic, orientability_and_genus, ArrowPresentation};
use crate::subset::Subset;

/// Identifiers accepted by [`run_suite`], in the order they are listed.
pub const SUITES: &[&str] = &[
    "example2.3",
    "thm2.2-dual",
    "thm2.2-petrial",
    "thm2.2-even",
    "thm2.2-binary",
    "exchange",
    "lemma4.3",
    "thm4.1",
    "thm1",
    "cor5.2",
    "cor5.1",
    "tutte-plane",
    "involutions",
];

/// Population bounds; `None` picks the suite's default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_edges: Option<usize>,
    pub max_vertices: Option<usize>,
    pub threads: Option<usize>,
}

/// The delta-matroid family of the worked example on four elements.
pub fn example_family() -> SetSystem {
    let sets: &[&[&str]] = &[
        &["1"],
        &["4"],
        &["1", "2"],
        &["1", "3"],
        &["1", "4"],
        &["2", "4"],
        &["3", "4"],
        &["1", "2", "4"],
        &["1", "2", "3", "4"],
    ];
    SetSystem::from_labels(&["1", "2", "3", "4"], sets).expect("valid family")
}

fn subject(g: &ArrowPresentation, a: Subset) -> String {
    format!("{} | A={{{}}}", g.inline(), a.labels(g.labels()).join(","))
}

impl SuiteOptions {
    fn spec(&self, edges: usize, vertices: usize) -> PopulationSpec {
        PopulationSpec::up_to(
            self.max_edges.unwrap_or(edges),
            self.max_vertices.unwrap_or(vertices),
        )
    }
}

/// Checks every graph and every edge subset in parallel, keeping order.
fn per_subset(
    pop: &[ArrowPresentation],
    check: impl Fn(&ArrowPresentation, &SetSystem, Subset) -> Result<Record> + Sync,
) -> Result<Vec<Record>> {
    let nested: Vec<Vec<Record>> = pop
        .par_iter()
        .map(|g| {
            let d = delta_matroid_of(g)?;
            Subset::all(g.num_edges())
                .map(|a| check(g, &d, a))
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn per_graph(
    pop: &[ArrowPresentation],
    check: impl Fn(&ArrowPresentation) -> Result<Vec<Record>> + Sync,
) -> Result<Vec<Record>> {
    let nested: Vec<Vec<Record>> = pop.par_iter().map(&check).collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn suite_dual(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    per_subset(pop, |g, d, a| {
        let got = delta_matroid_of(&partial_dual(g, a)?)?;
        let want = d.twist(a)?;
        Ok(Record::new(
            "dual-is-twist",
            subject(g, a),
            got == want,
            format!("{got:?} vs {want:?}"),
        ))
    })
}

fn suite_petrial(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    per_subset(pop, |g, d, a| {
        let got = delta_matroid_of(&partial_petrial(g, a)?)?;
        let want = d.loop_complement(a)?;
        Ok(Record::new(
            "petrial-is-loop-complement",
            subject(g, a),
            got == want,
            format!("{got:?} vs {want:?}"),
        ))
    })
}

fn suite_even(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    per_graph(pop, |g| {
        let even = delta_matroid_of(g)?.classify().even;
        let orientable = orientability_and_genus(g).orientable;
        Ok(vec![Record::new(
            "even-iff-orientable",
            g.inline(),
            even == orientable,
            format!("even={even} orientable={orientable}"),
        )])
    })
}

fn suite_binary(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    per_graph(pop, |g| {
        let d = delta_matroid_of(g)?;
        d.feasible()
            .iter()
            .map(|&x| {
                let t = d.twist(x)?;
                let rebuilt = reconstruct_binary(&t.small_sets())?;
                Ok(Record::new(
                    "binary-reconstruction",
                    subject(g, x),
                    rebuilt == t,
                    format!("{rebuilt:?} vs {t:?}"),
                ))
            })
            .collect()
    })
}

fn suite_exchange(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    per_graph(pop, |g| {
        let d = delta_matroid_of(g)?;
        let v = d.exchange_violation();
        Ok(vec![Record::new(
            "symmetric-exchange",
            g.inline(),
            v.is_none() && d.classify().proper,
            v.map(|w| format!("{w:?}")).unwrap_or_default(),
        )])
    })
}

fn suite_involutions(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    per_graph(pop, |g| {
        let d = delta_matroid_of(g)?;
        let mut out = Vec::new();
        for e in 0..g.num_edges() {
            let s = Subset::singleton(e);
            let sub = subject(g, s);
            out.push(Record::new(
                "twist-twice",
                sub.clone(),
                d.twist(s)?.twist(s)? == d,
                "",
            ));
            out.push(Record::new(
                "loop-complement-twice",
                sub.clone(),
                d.loop_complement(s)?.loop_complement(s)? == d,
                "",
            ));
            let dd = partial_dual(&partial_dual(g, s)?, s)?;
            out.push(Record::new(
                "dual-twice",
                sub.clone(),
                isomorphic(&dd, g),
                dd.inline(),
            ));
            let pp = partial_petrial(&partial_petrial(g, s)?, s)?;
            out.push(Record::new(
                "petrial-twice",
                sub,
                isomorphic(&pp, g),
                pp.inline(),
            ));
        }
        for a in Subset::all(g.num_edges()) {
            let v = partial_dual(g, a)?.num_vertices();
            let b = boundary_count(g, a);
            out.push(Record::new(
                "dual-vertex-count",
                subject(g, a),
                v == b,
                format!("{v} vs {b}"),
            ));
        }
        Ok(out)
    })
}

fn suite_plane_cycle(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    per_graph(pop, |g| {
        if !orientability_and_genus(g).is_plane {
            return Ok(vec![]);
        }
        let d = delta_matroid_of(g)?;
        let c = cycle_matroid_of(g)?;
        Ok(vec![Record::new(
            "plane-dm-is-cycle-matroid",
            g.inline(),
            d == c,
            format!("{d:?} vs {c:?}"),
        )])
    })
}

fn suite_tutte_plane(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    per_graph(pop, |g| {
        if !orientability_and_genus(g).is_plane {
            return Ok(vec![]);
        }
        let br = bollobas_riordan(g)?;
        let t = tutte(&cycle_matroid_of(g)?)?;
        Ok(vec![
            Record::new(
                "plane-has-no-z",
                g.inline(),
                br.at_z_one() == br,
                br.to_string(),
            ),
            Record::new(
                "br-at-z1-is-tutte",
                g.inline(),
                br.at_z_one() == t,
                format!("{br} vs {t}"),
            ),
        ])
    })
}

/// Labels each item by class, given a same-class test against the class
/// representatives found so far.
fn classify_by<T>(items: &[T], same: impl Fn(&T, &T) -> bool) -> Vec<usize> {
    let mut reps: Vec<usize> = Vec::new();
    items
        .iter()
        .map(|x| match reps.iter().position(|&r| same(&items[r], x)) {
            Some(c) => c,
            None => {
                reps.push(items.iter().position(|y| std::ptr::eq(y, x)).unwrap());
                reps.len() - 1
            }
        })
        .collect()
}

/// Per-item check that two labellings induce the same partition.
fn partition_records(
    check: &str,
    subjects: &[String],
    left: &[usize],
    right: &[usize],
) -> Vec<Record> {
    (0..subjects.len())
        .map(|i| {
            let a: BTreeSet<usize> = (0..left.len()).filter(|&j| left[j] == left[i]).collect();
            let b: BTreeSet<usize> = (0..right.len()).filter(|&j| right[j] == right[i]).collect();
            let detail = if a == b {
                format!("class of size {}", a.len())
            } else {
                let show = |s: &BTreeSet<usize>| {
                    s.iter()
                        .map(|&j| subjects[j].clone())
                        .collect::<Vec<_>>()
                        .join("; ")
                };
                format!("by invariant [{}] vs by moves [{}]", show(&a), show(&b))
            };
            Record::new(check, subjects[i].clone(), a == b, detail)
        })
        .collect()
}

/// Orbit labels: items in the same orbit share a label.
fn orbit_labels(
    items: &[ArrowPresentation],
    orbit: impl Fn(&ArrowPresentation) -> Result<BTreeSet<ArrowPresentation>> + Sync,
) -> Result<Vec<usize>> {
    let index: BTreeMap<&ArrowPresentation, usize> =
        items.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut label = vec![usize::MAX; items.len()];
    let mut next = 0;
    for i in 0..items.len() {
        if label[i] != usize::MAX {
            continue;
        }
        for member in orbit(&items[i])? {
            let Some(&j) = index.get(&member) else {
                return Err(Error::Invalid(format!(
                    "orbit leaves the population at {member}"
                )));
            };
            label[j] = next;
        }
        next += 1;
    }
    Ok(label)
}

fn signed_bouquets(max: usize, orientable_only: bool) -> Result<Vec<ArrowPresentation>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(enumerate_bouquets(n, orientable_only)?);
    }
    Ok(out)
}

fn suite_bouquet_partition(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    let dms: Vec<SetSystem> = pop
        .par_iter()
        .map(delta_matroid_of)
        .collect::<Result<_>>()?;
    let by_dm = classify_by(&dms, |a, b| isomorphic_dm(a, b).is_some());
    let by_moves = orbit_labels(pop, |g| {
        Ok(mutation_orbit(g, DEFAULT_BUDGET)?.into_iter().collect())
    })?;
    let subjects: Vec<String> = pop.iter().map(|g| g.inline()).collect();
    Ok(partition_records(
        "dm-class-is-mutation-class",
        &subjects,
        &by_dm,
        &by_moves,
    ))
}

fn suite_chord_partition(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    let words: Vec<SignedWord> = pop
        .iter()
        .map(|g| SignedWord::from_bouquet(g.clone()))
        .collect::<Result<_>>()?;
    let keys: Vec<_> = words
        .par_iter()
        .map(|w| intersection_graph(w).map(|g| g.canonical_key()))
        .collect::<Result<_>>()?;
    let by_graph = classify_by(&keys, |a, b| a == b);
    let by_moves = orbit_labels(pop, |g| {
        word_orbit(&SignedWord::from_bouquet(g.clone())?, DEFAULT_BUDGET)
    })?;
    let subjects: Vec<String> = pop.iter().map(|g| g.inline()).collect();
    Ok(partition_records(
        "circle-graph-class-is-mutation-class",
        &subjects,
        &by_graph,
        &by_moves,
    ))
}

fn suite_two_iso(pop: &[ArrowPresentation]) -> Result<Vec<Record>> {
    let solver = TwoIsoSolver::default();
    let dms: Vec<SetSystem> = pop
        .par_iter()
        .map(delta_matroid_of)
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..pop.len())
        .flat_map(|i| (i..pop.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| pop[i].num_edges() == pop[j].num_edges())
        .collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&pop[i], &pop[j]);
            let expect = dm_isomorphic_brute(&dms[i], &dms[j]);
            let sub = format!("{} ~ {}", a.inline(), b.inline());
            let out = solver.decide(a, b)?;
            let record = match out {
                TwoIsoOutcome::NotEquivalent(w) => {
                    Record::new("decision-matches-dm", sub, !expect, w.to_string())
                }
                TwoIsoOutcome::Equivalent { certificate, .. } => match certificate {
                    None => Record::new("certificate-replays", sub, false, "no certificate"),
                    Some(moves) => {
                        let ok = expect && verify_certificate(a, b, &moves);
                        let detail = moves
                            .iter()
                            .map(|m| m.to_string())
                            .collect::<Vec<_>>()
                            .join("; ");
                        Record::new("certificate-replays", sub, ok, detail)
                    }
                },
            };
            Ok(record)
        })
        .collect()
}

/// Isomorphism of set systems by trying every ground permutation.
fn dm_isomorphic_brute(d1: &SetSystem, d2: &SetSystem) -> bool {
    let n = d1.ground_size();
    if n != d2.ground_size() || d1.feasible().len() != d2.feasible().len() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut img: Vec<Subset> = d1.feasible().iter().map(|f| f.map(|e| perm[e])).collect();
        img.sort();
        if img == d2.feasible() {
            return true;
        }
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return false;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn suite_polynomial(
    bouquets: &[ArrowPresentation],
    connected: &[ArrowPresentation],
) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    // Every member of a mutation orbit shares the polynomial.
    let orbit_records = per_graph(bouquets, |g| {
        let p = bollobas_riordan(g)?;
        mutation_orbit(g, DEFAULT_BUDGET)?
            .into_iter()
            .map(|h| {
                let q = bollobas_riordan(&h)?;
                Ok(Record::new(
                    "orbit-shares-polynomial",
                    format!("{} ~ {}", g.inline(), h.inline()),
                    p == q,
                    format!("{p} vs {q}"),
                ))
            })
            .collect()
    })?;
    records.extend(orbit_records);
    let mutant_records = per_graph(connected, |g| {
        let p = bollobas_riordan(g)?;
        mutants_of_ribbon_graph(g)?
            .into_iter()
            .map(|h| {
                let q = bollobas_riordan(&h)?;
                Ok(Record::new(
                    "mutant-shares-polynomial",
                    format!("{} ~ {}", g.inline(), h.inline()),
                    p == q,
                    format!("{p} vs {q}"),
                ))
            })
            .collect()
    })?;
    records.extend(mutant_records);
    // The check must be able to fail: some pair in different classes has
    // different polynomials.
    let dms: Vec<SetSystem> = bouquets
        .iter()
        .map(delta_matroid_of)
        .collect::<Result<_>>()?;
    let polys: Vec<_> = bouquets
        .iter()
        .map(bollobas_riordan)
        .collect::<Result<_>>()?;
    let separated = (0..bouquets.len()).find_map(|i| {
        (i + 1..bouquets.len())
            .find(|&j| polys[i] != polys[j] && isomorphic_dm(&dms[i], &dms[j]).is_none())
            .map(|j| (i, j))
    });
    records.push(match separated {
        Some((i, j)) => Record::new(
            "non-vacuous",
            format!("{} ~ {}", bouquets[i].inline(), bouquets[j].inline()),
            true,
            format!("{} vs {}", polys[i], polys[j]),
        ),
        None => Record::new("non-vacuous", "population", false, "no separating pair"),
    });
    Ok(records)
}

fn suite_example(opts: &SuiteOptions) -> Result<(usize, Vec<Record>)> {
    let target = example_family();
    let spec = PopulationSpec::up_to(opts.max_edges.unwrap_or(4), opts.max_vertices.unwrap_or(2));
    let found = find_witness(&target, &spec)?;
    let record = match found {
        Some(w) => {
            let d = delta_matroid_of(&w.presentation)?;
            Record::new(
                "witness-has-exact-family",
                w.presentation.inline(),
                d == target && w.presentation.num_vertices() <= spec.max_vertices,
                format!("{d:?}"),
            )
        }
        None => Record::new(
            "witness-has-exact-family",
            format!("{target:?}"),
            false,
            "no witness",
        ),
    };
    Ok((1, vec![record]))
}

/// Runs one named suite.
pub fn run_suite(id: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    if !SUITES.contains(&id) {
        return Err(Error::UnknownSuite(id.to_string()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Invalid(e.to_string()))?;
    let start = Instant::now();
    let (population, records) = pool.install(|| -> Result<(usize, Vec<Record>)> {
        let general = || enumerate_ribbon_graphs(&opts.spec(3, 3));
        let connected = || enumerate_ribbon_graphs(&opts.spec(3, 3).connected());
        let with = |pop: Vec<ArrowPresentation>,
                    f: fn(&[ArrowPresentation]) -> Result<Vec<Record>>| {
            let r = f(&pop)?;
            Ok((pop.len(), r))
        };
        match id {
            "example2.3" => suite_example(opts),
            "thm2.2-dual" => with(general()?, suite_dual),
            "thm2.2-petrial" => with(general()?, suite_petrial),
            "thm2.2-even" => with(general()?, suite_even),
            "thm2.2-binary" => with(general()?, suite_binary),
            "exchange" => with(general()?, suite_exchange),
            "involutions" => with(general()?, suite_involutions),
            "cor5.1" => with(general()?, suite_plane_cycle),
            "tutte-plane" => with(general()?, suite_tutte_plane),
            "lemma4.3" => with(
                signed_bouquets(opts.max_edges.unwrap_or(4), false)?,
                suite_bouquet_partition,
            ),
            "thm4.1" => with(
                signed_bouquets(opts.max_edges.unwrap_or(5), true)?,
                suite_chord_partition,
            ),
            "thm1" => with(connected()?, suite_two_iso),
            "cor5.2" => {
                let bouquets = signed_bouquets(opts.max_edges.unwrap_or(4), false)?;
                let conn = enumerate_ribbon_graphs(&opts.spec(3, 3).connected())?;
                let r = suite_polynomial(&bouquets, &conn)?;
                Ok((bouquets.len() + conn.len(), r))
            }
            _ => unreachable!(),
        }
    })?;
    Ok(SuiteReport::new(id, population, records, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteOptions {
        SuiteOptions {
            max_edges: Some(2),
            max_vertices: Some(2),
            threads: Some(2),
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &small()),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn small_runs_pass() {
        for id in SUITES.iter().filter(|&&s| s != "example2.3") {
            let r = run_suite(id, &small()).unwrap();
            assert!(r.ok(), "{}", r.text());
        }
    }

    #[test]
    fn empty_population_passes() {
        let opts = SuiteOptions {
            max_edges: Some(2),
            max_vertices: Some(0),
            threads: None,
        };
        let r = run_suite("thm2.2-dual", &opts).unwrap();
        assert_eq!(r.population, 0);
        assert!(r.ok() && r.records.is_empty());
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let mut a = small();
        a.threads = Some(1);
        let mut b = small();
        b.threads = Some(4);
        assert_eq!(
            run_suite("thm2.2-petrial", &a).unwrap().structured(),
            run_suite("thm2.2-petrial", &b).unwrap().structured()
        );
    }

    #[test]
    fn classify_by_groups_equal_items() {
        assert_eq!(
            classify_by(&[3, 1, 3, 2, 1], |a, b| a == b),
            vec![0, 1, 0, 2, 1]
        );
    }
}
