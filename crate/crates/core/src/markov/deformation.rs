use num_rational::BigRational;
use num_traits::Zero;

use super::tree::{enumerate_tree, TreePolicy};
use super::triple::{MarkovError, MarkovTriple};
use crate::ring::RingValue;

/// Deformations of 2 and 5 found from the root (Z, 1 − Z + Z², 1 + Z − Z³) over ℤ[ℤ/5],
/// as (Markov number, coefficients of 1, Z, …, Z⁴).
pub const Z5_DEFORMATIONS: [(i64, [i64; 5]); 9] = [
    (2, [7, 7, -2, -8, -2]),
    (2, [-1, -1, 6, -1, -1]),
    (2, [-8, 7, -2, -2, 7]),
    (5, [-18, 53, 53, -18, -65]),
    (5, [46, -11, -11, 46, -65]),
    (5, [53, -18, -18, 53, -65]),
    (5, [-65, -11, 46, 46, -11]),
    (5, [173, 54, -138, -138, 54]),
    (5, [-138, 173, -138, 54, 54]),
];

/// Image under Z ↦ 1 (sum of coefficients) of a group-ring value over a scalar base.
pub fn augmentation(x: &RingValue) -> Option<BigRational> {
    x.group_coefficients()?.iter().try_fold(BigRational::zero(), |acc, c| Some(acc + c.as_rational()?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationHit {
    pub value: RingValue,
    /// Shortest (then lexicographically first) word reaching the value.
    pub word: Vec<u8>,
    pub slot: usize,
    pub augmentation: BigRational,
}

/// Every distinct tree entry up to `depth` whose augmentation is one of `targets`.
pub fn deformation_scan(root: &MarkovTriple, depth: usize, targets: &[i64]) -> Result<Vec<DeformationHit>, MarkovError> {
    let tree = enumerate_tree(root, depth, TreePolicy::default())?;
    let mut nodes: Vec<_> = tree.nodes.iter().filter(|n| n.triple.is_some()).collect();
    nodes.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
    let mut hits: Vec<DeformationHit> = Vec::new();
    for n in nodes {
        let t = n.triple.as_ref().unwrap();
        for (slot, x) in t.entries().iter().enumerate() {
            let Some(aug) = augmentation(x) else { continue };
            if !targets.iter().any(|&k| aug == BigRational::from_integer(k.into())) {
                continue;
            }
            if hits.iter().any(|h| &h.value == x) {
                continue;
            }
            hits.push(DeformationHit { value: x.clone(), word: n.word.clone(), slot, augmentation: aug });
        }
    }
    Ok(hits)
}

/// For each row, the first hit equal to it or to its σ-image, with a flag telling which.
pub fn match_rows<'a>(hits: &'a [DeformationHit], rows: &[RingValue]) -> Vec<Option<(&'a DeformationHit, bool)>> {
    rows.iter()
        .map(|row| {
            hits.iter().find(|h| &h.value == row).map(|h| (h, false)).or_else(|| {
                let s = row.sigma();
                hits.iter().find(|h| h.value == s).map(|h| (h, true))
            })
        })
        .collect()
}
