//! Cluster seeds on the square and the once-punctured torus.

mod monodromy;
mod seed;
mod square;
mod torus;

pub use monodromy::{g_matrix, monodromy, s_matrix, MonodromyPath, Step, Token};
pub use seed::{ClusterError, ClusterSeed};
pub use square::{amalgamate_multiply, extract_matrix, phi_l, phi_r, rotate_180, seed_from_matrix};
pub use torus::TorusSeed;

#[cfg(test)]
mod tests;
