//! 2×2 matrices over involutive rings: symplectic membership, determinants, traces and
//! the trace identities.

mod identities;
mod matrix;
mod sampler;

pub use identities::*;
pub use matrix::{Mat2, Vec2};
pub use sampler::{
    random_element, random_mat2, random_sigma_fixed, random_symplectic, random_symplectic_invertible,
    random_symplectic_with, random_unit, symplectic_word, Generator,
};
