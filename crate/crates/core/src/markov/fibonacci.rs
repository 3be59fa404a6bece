use serde::Serialize;

use super::triple::{exchange, MarkovError, MarkovTriple};
use crate::ring::RingValue;

/// Φ(A,B,C) = σ(C⁻¹)Aσ(B⁻¹) + σ(A⁻¹)Bσ(C⁻¹) + B⁻¹σ(C)A⁻¹, the angle sum at the
/// marked point that survives cutting the torus along C.
pub fn phi_frozen(t: &MarkovTriple) -> Result<RingValue, MarkovError> {
    let [ai, bi, ci] = t.inverses()?;
    let [a, b, c] = t.entries();
    Ok(&ci.sigma() * a * &bi.sigma() + &ai.sigma() * b * &ci.sigma() + &bi * &c.sigma() * &ai)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibonacciBranch {
    pub frozen_slot: usize,
    /// Φ of the starting triple, after rotating the frozen slot to the end.
    pub phi: RingValue,
    /// x₋₁, x₀, x₁, … from x_{k+1} = x_k Φ C − x_{k−1}.
    pub recurrence: Vec<RingValue>,
    /// The same terms read off the mutation sequence: σ(A), B, then each new A′.
    pub mutation: Vec<RingValue>,
    /// Triples visited by alternating mutation with C frozen.
    pub triples: Vec<MarkovTriple>,
    /// Φ evaluated on every visited triple equals `phi`.
    pub phi_invariant: bool,
}

impl FibonacciBranch {
    pub fn agree(&self) -> bool {
        self.recurrence == self.mutation
    }

    /// Terms with the orientation of the edge they sit on restored: every other
    /// step flips an arc, so σ is applied at even indices.
    pub fn oriented_terms(&self) -> Vec<RingValue> {
        self.mutation.iter().enumerate().map(|(k, x)| if k % 2 == 0 { x.sigma() } else { x.clone() }).collect()
    }
}

/// Freezes slot `frozen_slot` and alternates mutation at the other two, producing `n`
/// terms both by mutation and by the linear recurrence.
pub fn fibonacci_branch(t: &MarkovTriple, frozen_slot: usize, n: usize) -> Result<FibonacciBranch, MarkovError> {
    if frozen_slot > 2 {
        return Err(MarkovError::BadPosition(frozen_slot));
    }
    let start = t.rotated(frozen_slot + 1);
    let c = start.get(2).clone();
    if !c.is_sigma_fixed() {
        return Err(MarkovError::CNotSigmaFixed);
    }
    let phi = phi_frozen(&start)?;
    let phi_c = &phi * &c;

    let mut recurrence = vec![start.get(0).sigma(), start.get(1).clone()];
    while recurrence.len() < n {
        let k = recurrence.len();
        let next = &recurrence[k - 1] * &phi_c - &recurrence[k - 2];
        recurrence.push(next);
    }
    recurrence.truncate(n);

    let mut triples = vec![start.clone()];
    let mut mutation = vec![start.get(0).sigma(), start.get(1).clone()];
    let mut phi_invariant = true;
    let mut cur = start;
    while mutation.len() < n {
        let a2 = exchange(&cur, 0)?;
        cur = MarkovTriple::new(cur.get(1).sigma(), a2.clone(), c.clone())?;
        phi_invariant &= phi_frozen(&cur)? == phi;
        mutation.push(a2);
        triples.push(cur.clone());
    }
    mutation.truncate(n);

    Ok(FibonacciBranch { frozen_slot, phi, recurrence, mutation, triples, phi_invariant })
}

/// Slot to freeze when none is given: the first entry equal to 1, otherwise the
/// first σ-fixed entry.
pub fn default_frozen_slot(t: &MarkovTriple) -> Option<usize> {
    (0..3).find(|&k| t.get(k).is_one()).or_else(|| (0..3).find(|&k| t.get(k).is_sigma_fixed()))
}
