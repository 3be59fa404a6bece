use serde::Serialize;

use super::seed::{ClusterError, ClusterSeed};
use crate::ring::RingValue;
use crate::sp2::{adjugate, Mat2};

/// One side of the hexagon drawn inside a triangle. Corners are named `(v, w)`:
/// the corner at vertex `v` on the side facing `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Token {
    /// Along the edge i–j, from corner (i, j) to corner (j, i); contributes S_ij.
    Long { i: usize, j: usize },
    /// Around vertex `vertex`, from corner (vertex, from) to corner (vertex, to);
    /// contributes G_vertex^{from,to}.
    Short { vertex: usize, from: usize, to: usize },
}

impl Token {
    fn ends(&self) -> ((usize, usize), (usize, usize)) {
        match *self {
            Token::Long { i, j } => ((i, j), (j, i)),
            Token::Short { vertex, from, to } => ((vertex, from), (vertex, to)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Step {
    pub token: Token,
    /// Traversed against the token's orientation; contributes the inverse matrix.
    pub reversed: bool,
}

impl Step {
    pub fn forward(token: Token) -> Self {
        Step { token, reversed: false }
    }

    pub fn backward(token: Token) -> Self {
        Step { token, reversed: true }
    }

    fn ends(&self) -> ((usize, usize), (usize, usize)) {
        let (a, b) = self.token.ends();
        if self.reversed {
            (b, a)
        } else {
            (a, b)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MonodromyPath(pub Vec<Step>);

impl MonodromyPath {
    /// G_2^{13} S_23 G_3^{21} G_3^{14}, whose monodromy on a square seed is its matrix.
    pub fn canonical_square() -> Self {
        MonodromyPath(vec![
            Step::forward(Token::Short { vertex: 2, from: 1, to: 3 }),
            Step::forward(Token::Long { i: 2, j: 3 }),
            Step::forward(Token::Short { vertex: 3, from: 2, to: 1 }),
            Step::forward(Token::Short { vertex: 3, from: 1, to: 4 }),
        ])
    }

    /// Index of the first step that does not start where the previous one ended.
    pub fn first_gap(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0].ends().1 != w[1].ends().0).map(|k| k + 1)
    }
}

/// `[[1, T_i^{kj}], [0, 1]]`.
pub fn g_matrix(seed: &ClusterSeed, i: usize, k: usize, j: usize) -> Result<Mat2, ClusterError> {
    Ok(Mat2::upper(seed.angle(i, k, j)?))
}

/// `[[0, −σ(A_ij⁻¹)], [A_ij, 0]]`.
pub fn s_matrix(seed: &ClusterSeed, i: usize, j: usize) -> Result<Mat2, ClusterError> {
    let x = seed.value(i, j)?;
    let inv = x.inverse().map_err(|_| ClusterError::NotInvertible(i, j))?;
    let zero = RingValue::zero(seed.ring());
    Ok(Mat2::new(zero.clone(), -inv.sigma(), x, zero)?)
}

/// Ordered product of the step matrices, left to right.
pub fn monodromy(seed: &ClusterSeed, path: &MonodromyPath) -> Result<Mat2, ClusterError> {
    if let Some(k) = path.first_gap() {
        return Err(ClusterError::Disconnected(k));
    }
    let mut acc = Mat2::identity(seed.ring());
    for step in &path.0 {
        let m = match step.token {
            Token::Long { i, j } => s_matrix(seed, i, j)?,
            Token::Short { vertex, from, to } => g_matrix(seed, vertex, from, to)?,
        };
        let m = if step.reversed { adjugate(&m) } else { m };
        acc = &acc * &m;
    }
    Ok(acc)
}
