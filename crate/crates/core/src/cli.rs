//! Command-line front end.
//!
//! Inputs are file paths or inline literals. A ribbon graph literal is
//! `"vertex a+ b- a+ / vertex b+"` (curves split by `/`), or `word:a+ b+ a+ b+`
//! for a bouquet. A set system literal is `"ground 1 2 / feasible - / feasible 1 2"`.
//!
//! Exit status: 0 on success or a true answer, 1 on a false answer or a
//! failed check, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};

use crate::chords::{mutants_of_ribbon_graph, SignedWord};
use crate::dm::{isomorphic_dm, SetSystem};
use crate::error::{Error, Result};
use crate::harness::{
    enumerate_ribbon_graphs, find_witness, run_suite, two_isomorphism_decide, PopulationSpec,
    SuiteOptions, TwoIsoOutcome, SUITES,
};
use crate::ops::{cycle_matroid_of, delta_matroid_of, partial_dual, partial_petrial};
use crate::poly::{bollobas_riordan, tutte};
use crate::ribbon::{
    boundary_count, canonical_form, isomorphic, orientability_and_genus, parse, parse_inline,
    serialize, ArrowPresentation,
};

#[derive(Parser, Debug)]
#[command(
    name = "ribbondm",
    version,
    about = "Ribbon graphs, delta-matroids and mutation"
)]
struct Cli {
    /// Emit tab-separated key=value records instead of text.
    #[arg(long, global = true)]
    structured: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Parse a presentation and report whether it is well formed.
    Validate { input: String },
    /// Vertex, edge, component and boundary counts, orientability and genus.
    Info { input: String },
    /// The delta-matroid of a ribbon graph.
    Dm { input: String },
    /// The cycle matroid of the underlying abstract graph.
    Cycle { input: String },
    /// Partial dual with respect to an edge set.
    Dual {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Partial petrial with respect to an edge set.
    Petrial {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// One-step mutants of a connected ribbon graph, one per class.
    Mutants { input: String },
    /// Ribbon graph isomorphism.
    Iso { first: String, second: String },
    /// Equivalence under joins, cuts, mutation and isomorphism.
    TwoIso { first: String, second: String },
    /// All ribbon graphs in a population, up to isomorphism.
    Enumerate {
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        orientable: bool,
    },
    /// A ribbon graph realising a given delta-matroid exactly.
    Witness {
        family: String,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Run a verification suite over an exhaustive population.
    Verify {
        /// Suite identifier, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Bollobás–Riordan polynomial.
    Poly {
        input: String,
        /// Print the Tutte polynomial of the cycle matroid instead.
        #[arg(long)]
        tutte: bool,
    },
}

#[derive(Args, Debug)]
struct Bounds {
    #[arg(long, default_value_t = 3)]
    max_edges: usize,
    #[arg(long, default_value_t = 3)]
    max_vertices: usize,
}

/// Reads a file if `arg` names one, otherwise returns the literal itself.
fn source(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn load_graph(arg: &str) -> Result<ArrowPresentation> {
    let text = source(arg)?;
    let trimmed = text.trim_start();
    if let Some(word) = trimmed.strip_prefix("word:") {
        return Ok(SignedWord::parse(word)?.into_bouquet());
    }
    if trimmed.starts_with("ribbon") {
        parse(&text)
    } else {
        parse_inline(&text)
    }
}

fn load_family(arg: &str) -> Result<SetSystem> {
    let text = source(arg)?;
    if text.contains('\n') {
        SetSystem::parse(&text)
    } else {
        SetSystem::parse(&text.replace('/', "\n"))
    }
}

/// Labels separated by commas or spaces; `-` or nothing is the empty set.
fn parse_set(ap: &ArrowPresentation, s: &str) -> Result<crate::Subset> {
    let labels: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|l| !l.is_empty() && *l != "-")
        .collect();
    ap.subset(&labels)
}

struct Out<'a> {
    w: &'a mut dyn Write,
    structured: bool,
}

impl Out<'_> {
    fn line(&mut self, s: &str) {
        let _ = writeln!(self.w, "{s}");
    }

    /// One record: `text` in text mode, key=value pairs otherwise.
    fn record(&mut self, kind: &str, fields: &[(&str, String)], text: &str) {
        if self.structured {
            let mut s = format!("record={kind}");
            for (k, v) in fields {
                s.push_str(&format!("\t{k}={}", v.replace(['\t', '\n'], " ")));
            }
            self.line(&s);
        } else {
            self.line(text);
        }
    }

    fn graph(&mut self, kind: &str, ap: &ArrowPresentation) {
        if self.structured {
            self.record(kind, &[("presentation", ap.inline())], "");
        } else {
            let _ = write!(self.w, "{}", serialize(ap));
        }
    }

    fn family(&mut self, d: &SetSystem) {
        if self.structured {
            self.record("ground", &[("elements", d.ground().join(" "))], "");
            for f in d.feasible() {
                let set = if f.is_empty() {
                    "-".to_string()
                } else {
                    f.labels(d.ground()).join(" ")
                };
                self.record("feasible", &[("set", set)], "");
            }
        } else {
            let _ = write!(self.w, "{}", d.to_text());
        }
    }

    fn verdict(&mut self, kind: &str, value: bool, detail: String) -> i32 {
        let text = if detail.is_empty() {
            value.to_string()
        } else {
            format!("{value}: {detail}")
        };
        self.record(
            kind,
            &[("value", value.to_string()), ("detail", detail)],
            &text,
        );
        if value {
            0
        } else {
            1
        }
    }
}

fn yes_no(b: bool) -> String {
    (if b { "yes" } else { "no" }).to_string()
}

fn execute(verb: Verb, out: &mut Out) -> Result<i32> {
    match verb {
        Verb::Validate { input } => {
            let ap = load_graph(&input)?;
            let detail = format!("{} vertices, {} edges", ap.num_vertices(), ap.num_edges());
            out.record(
                "valid",
                &[
                    ("vertices", ap.num_vertices().to_string()),
                    ("edges", ap.num_edges().to_string()),
                ],
                &format!("valid: {detail}"),
            );
        }
        Verb::Info { input } => {
            let ap = load_graph(&input)?;
            let s = orientability_and_genus(&ap);
            let rows = [
                ("vertices", ap.num_vertices().to_string()),
                ("edges", ap.num_edges().to_string()),
                ("components", ap.components().0.to_string()),
                (
                    "boundaries",
                    boundary_count(&ap, ap.all_edges()).to_string(),
                ),
                ("orientable", yes_no(s.orientable)),
                ("euler_genus", s.euler_genus.to_string()),
                ("plane", yes_no(s.is_plane)),
            ];
            if out.structured {
                out.record("info", &rows, "");
            } else {
                for (k, v) in &rows {
                    out.line(&format!("{k} {v}"));
                }
            }
        }
        Verb::Dm { input } => out.family(&delta_matroid_of(&load_graph(&input)?)?),
        Verb::Cycle { input } => out.family(&cycle_matroid_of(&load_graph(&input)?)?),
        Verb::Dual { input, set } => {
            let ap = load_graph(&input)?;
            out.graph("graph", &partial_dual(&ap, parse_set(&ap, &set)?)?);
        }
        Verb::Petrial { input, set } => {
            let ap = load_graph(&input)?;
            out.graph("graph", &partial_petrial(&ap, parse_set(&ap, &set)?)?);
        }
        Verb::Mutants { input } => {
            let ap = load_graph(&input)?;
            for m in mutants_of_ribbon_graph(&ap)? {
                let c = canonical_form(&m);
                out.record("mutant", &[("presentation", c.inline())], &c.inline());
            }
        }
        Verb::Iso { first, second } => {
            let (a, b) = (load_graph(&first)?, load_graph(&second)?);
            return Ok(out.verdict("isomorphic", isomorphic(&a, &b), String::new()));
        }
        Verb::TwoIso { first, second } => {
            let (a, b) = (load_graph(&first)?, load_graph(&second)?);
            return Ok(match two_isomorphism_decide(&a, &b)? {
                TwoIsoOutcome::NotEquivalent(w) => {
                    out.verdict("two-isomorphic", false, w.to_string())
                }
                TwoIsoOutcome::Equivalent {
                    bijection,
                    certificate,
                } => {
                    let map = bijection
                        .iter()
                        .map(|(x, y)| format!("{x}->{y}"))
                        .collect::<Vec<_>>()
                        .join(" ");
                    let code = out.verdict("two-isomorphic", true, format!("bijection {map}"));
                    match certificate {
                        Some(moves) => {
                            for (i, m) in moves.iter().enumerate() {
                                out.record(
                                    "move",
                                    &[
                                        ("step", (i + 1).to_string()),
                                        ("kind", m.kind.name().to_string()),
                                        ("result", m.result.inline()),
                                    ],
                                    &format!("  {}. {m}", i + 1),
                                );
                            }
                        }
                        None => {
                            out.record("move", &[("step", "none".into())], "  no certificate found")
                        }
                    }
                    code
                }
            });
        }
        Verb::Enumerate {
            bounds,
            connected,
            orientable,
        } => {
            let mut spec = PopulationSpec::up_to(bounds.max_edges, bounds.max_vertices);
            spec.connected_only = connected;
            spec.orientable_only = orientable;
            for g in enumerate_ribbon_graphs(&spec)? {
                out.record(
                    "graph",
                    &[
                        ("edges", g.num_edges().to_string()),
                        ("vertices", g.num_vertices().to_string()),
                        ("presentation", g.inline()),
                    ],
                    &g.inline(),
                );
            }
        }
        Verb::Witness { family, bounds } => {
            let target = load_family(&family)?;
            let spec = PopulationSpec::up_to(
                bounds.max_edges.max(target.ground_size()),
                bounds.max_vertices,
            );
            match find_witness(&target, &spec)? {
                Some(w) => {
                    debug_assert!(delta_matroid_of(&w.presentation)
                        .is_ok_and(|d| isomorphic_dm(&d, &target).is_some()));
                    out.graph("witness", &w.presentation);
                }
                None => {
                    out.record(
                        "witness",
                        &[("found", "false".into())],
                        "no witness in population",
                    );
                    return Ok(1);
                }
            }
        }
        Verb::Verify {
            suite,
            max_edges,
            max_vertices,
            threads,
        } => {
            let opts = SuiteOptions {
                max_edges,
                max_vertices,
                threads,
            };
            let ids: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut code = 0;
            for id in ids {
                let report = run_suite(id, &opts)?;
                let _ = write!(
                    out.w,
                    "{}",
                    if out.structured {
                        report.structured()
                    } else {
                        report.text()
                    }
                );
                if !report.ok() {
                    code = 1;
                }
            }
            return Ok(code);
        }
        Verb::Poly {
            input,
            tutte: want_tutte,
        } => {
            let ap = load_graph(&input)?;
            let p = if want_tutte {
                tutte(&cycle_matroid_of(&ap)?)?
            } else {
                bollobas_riordan(&ap)?
            };
            out.record("polynomial", &[("value", p.to_string())], &p.to_string());
        }
    }
    Ok(0)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let mut out = Out {
        w: stdout,
        structured: cli.structured,
    };
    match execute(cli.verb, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let argv = std::iter::once("ribbondm").chain(args.iter().copied());
        let code = run(argv, &mut o, &mut e);
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn dm_of_inline_bouquet() {
        let (code, out, _) = call(&["dm", "vertex e+ e-"]);
        assert_eq!(code, 0);
        assert_eq!(out, "ground e\nfeasible -\nfeasible e\n");
    }

    #[test]
    fn set_parsing() {
        let ap = parse_inline("a+ b+ a+ b+").unwrap();
        assert_eq!(parse_set(&ap, "-").unwrap(), crate::Subset::EMPTY);
        assert_eq!(parse_set(&ap, "a,b").unwrap(), ap.all_edges());
        assert!(parse_set(&ap, "c").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["dm", "vertex e+"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn family_literal() {
        let d = load_family("ground a / feasible - / feasible a").unwrap();
        assert_eq!(d.feasible().len(), 2);
    }
}
