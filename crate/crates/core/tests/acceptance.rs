//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ribbondm::chords::{intersection_graph, word_orbit, SignedWord, DEFAULT_BUDGET};
use ribbondm::harness::{enumerate_bouquets, run_suite, SuiteOptions};
use ribbondm::ops::delta_matroid_of;
use ribbondm::ribbon::parse;

type Check = fn() -> Result<String, String>;

fn suites(ids: &[&str]) -> Result<String, String> {
    let mut parts = Vec::new();
    for id in ids {
        let r = run_suite(id, &SuiteOptions::default()).map_err(|e| format!("{id}: {e}"))?;
        if !r.ok() {
            return Err(r.text());
        }
        if r.passed == 0 {
            return Err(format!("{id}: no checks ran"));
        }
        parts.push(format!(
            "{id} {}/{} over {}",
            r.passed,
            r.passed + r.failed,
            r.population
        ));
    }
    Ok(parts.join(", "))
}

fn worked_example() -> Result<String, String> {
    suites(&["example2.3"])?;
    // Re-derive the witness from its printed form and compare with the
    // family written out independently.
    let out = ribbondm_cli(&["witness", FAMILY, "--max-edges", "4", "--max-vertices", "2"])?;
    let g = parse(&out).map_err(|e| e.to_string())?;
    let d = delta_matroid_of(&g).map_err(|e| e.to_string())?;
    let want: BTreeSet<BTreeSet<&str>> = [
        &["1"][..],
        &["4"],
        &["1", "2"],
        &["1", "3"],
        &["1", "4"],
        &["2", "4"],
        &["3", "4"],
        &["1", "2", "4"],
        &["1", "2", "3", "4"],
    ]
    .iter()
    .map(|s| s.iter().copied().collect())
    .collect();
    let got: BTreeSet<BTreeSet<&str>> = d
        .feasible()
        .iter()
        .map(|f| f.labels(d.ground()).into_iter().collect())
        .collect();
    if got != want || g.num_vertices() != 2 || g.num_edges() != 4 {
        return Err(format!("witness {g} has {d:?}"));
    }
    Ok(format!("witness {g}"))
}

const FAMILY: &str = "ground 1 2 3 4 / feasible 1 / feasible 4 / feasible 1 2 / feasible 1 3 / \
                      feasible 1 4 / feasible 2 4 / feasible 3 4 / feasible 1 2 4 / feasible 1 2 3 4";

fn ribbondm_cli(args: &[&str]) -> Result<String, String> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("ribbondm").chain(args.iter().copied());
    let code = ribbondm::cli::run(argv, &mut out, &mut err);
    if code != 0 {
        return Err(String::from_utf8_lossy(&err).into_owned());
    }
    Ok(String::from_utf8_lossy(&out).into_owned())
}

fn chord_diagrams() -> Result<String, String> {
    let summary = suites(&["thm4.1"])?;
    // Chord diagrams up to rotation and reflection: 1, 2, 5, 17, 79.
    // Every graph on at most five vertices is a circle graph, so the
    // classes are the 1 + 2 + 4 + 11 + 34 graphs.
    let mut diagrams = 0;
    let mut by_graph = BTreeSet::new();
    let mut orbits = BTreeSet::new();
    for n in 1..=5 {
        for b in enumerate_bouquets(n, true).map_err(|e| e.to_string())? {
            diagrams += 1;
            let w = SignedWord::from_bouquet(b).map_err(|e| e.to_string())?;
            by_graph.insert(
                intersection_graph(&w)
                    .map_err(|e| e.to_string())?
                    .canonical_key(),
            );
            let orbit = word_orbit(&w, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            orbits.insert(orbit.into_iter().next().unwrap());
        }
    }
    if (diagrams, by_graph.len(), orbits.len()) != (104, 52, 52) {
        return Err(format!(
            "{diagrams} diagrams, {} graph classes, {} orbits",
            by_graph.len(),
            orbits.len()
        ));
    }
    Ok(format!("{summary}; 104 diagrams in 52 classes"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, Check); 10] = [
        (
            1,
            "worked example has an exact witness",
            Duration::from_secs(300),
            worked_example,
        ),
        (
            2,
            "partial dual and petrial match twist and loop complement",
            Duration::from_secs(120),
            || suites(&["thm2.2-dual", "thm2.2-petrial"]),
        ),
        (
            3,
            "evenness and binary reconstruction",
            Duration::from_secs(120),
            || suites(&["thm2.2-even", "thm2.2-binary"]),
        ),
        (4, "symmetric exchange", Duration::from_secs(120), || {
            suites(&["exchange"])
        }),
        (
            5,
            "bouquet classes by delta-matroid and by mutation agree",
            Duration::from_secs(900),
            || suites(&["lemma4.3"]),
        ),
        (
            6,
            "chord diagram classes by intersection graph and by mutation agree",
            Duration::from_secs(900),
            chord_diagrams,
        ),
        (
            7,
            "joins, cuts and mutation decide delta-matroid isomorphism",
            Duration::from_secs(1800),
            || suites(&["thm1"]),
        ),
        (
            8,
            "polynomial invariant under mutation",
            Duration::from_secs(900),
            || suites(&["cor5.2"]),
        ),
        (
            9,
            "plane graphs have their cycle matroid",
            Duration::from_secs(120),
            || suites(&["cor5.1", "tutte-plane"]),
        ),
        (
            10,
            "involutions and vertex counts of partial duals",
            Duration::from_secs(120),
            || suites(&["involutions"]),
        ),
    ];
    let mut failed = 0;
    for (n, what, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if took <= limit => ("PASS", d),
            Ok(d) => (
                "FAIL",
                format!("over time limit of {}s: {d}", limit.as_secs()),
            ),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {n}: {status} ({:.2}s) {what}: {detail}",
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
