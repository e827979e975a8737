//! Chord diagrams, shares and mutation.

pub mod mutation;
pub mod word;

pub use mutation::{
    mutants_of_ribbon_graph, mutants_via, mutation_equivalent, mutation_orbit, mutation_path,
    orbit_tree, path_in_tree, DEFAULT_BUDGET,
};
pub use word::{
    bouquet_to_word, find_shares, intersection_graph, labelled_mutants_of_word, mutants_of_word,
    share_mutants, word_orbit, Interval, Share, SignedWord,
};
