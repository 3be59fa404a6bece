//! Generalized Markov triples on the once-punctured torus.

mod admissible;
mod complex;
mod deformation;
mod dual;
mod fibonacci;
mod tree;
mod triple;

pub use admissible::{is_admissible, is_admissible_with, node_admissible, AdmissibilityReport};
pub use complex::{
    args_balanced, complex_polar_mutate, group_oracle_mutate, group_to_polar, polar_to_complex, polar_to_group, Polar,
};
pub use deformation::{augmentation, deformation_scan, match_rows, DeformationHit, Z5_DEFORMATIONS};
pub use dual::{dual_split_mutate, DualSplit};
pub use fibonacci::{default_frozen_slot, fibonacci_branch, phi_frozen, FibonacciBranch};
pub use tree::{enumerate_tree, enumerate_tree_with, MarkovTree, MarkovTreeNode, TreePolicy};
pub use triple::{exchange, markov_function, mutate, mutate_rotated, torus_angles, MarkovError, MarkovTriple};

#[cfg(test)]
mod tests;
