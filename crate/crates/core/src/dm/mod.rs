//! Set systems, delta-matroids and their binary representations.

pub mod gf2;
pub mod graph;
pub mod iso;
pub mod set_system;

pub use gf2::{from_gf2_matrix, reconstruct_binary, Gf2Matrix};
pub use graph::{from_graph, fundamental_graph, SimpleGraph};
pub use iso::{bijection_labels, isomorphic_dm};
pub use set_system::{Classification, ExchangeWitness, SetSystem, GROUND_CAP};
