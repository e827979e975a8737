//! Exhaustive enumeration, equivalence decisions and verification suites.

pub mod enumerate;
pub mod report;
pub mod suites;
pub mod two_iso;
pub mod witness;

pub use enumerate::{
    enumerate_bouquets, enumerate_ribbon_graphs, PopulationSpec, MAX_EDGES, MAX_VERTICES,
};
pub use report::{Record, SuiteReport};
pub use suites::{example_family, run_suite, SuiteOptions, SUITES};
pub use two_iso::{
    two_isomorphism_decide, verify_certificate, Move, MoveKind, NonIsoWitness, TwoIsoOutcome,
    TwoIsoSolver,
};
pub use witness::{find_witness, Witness};
