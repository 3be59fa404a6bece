use serde::Serialize;

use super::triple::{torus_angles, MarkovTriple};
use crate::ring::{PositivityCone, RingValue};

/// Outcome of the admissibility test for a starting triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    /// Entry k is a unit of the integral subring.
    pub units: [bool; 3],
    /// The six torus angles, absent when some entry has no inverse at all.
    pub angles: Option<Vec<RingValue>>,
    pub sigma_fixed: [bool; 6],
    pub positive: [bool; 6],
    pub admissible: bool,
    pub failures: Vec<String>,
}

/// Starting-triple admissibility with the default cone.
pub fn is_admissible(t: &MarkovTriple) -> AdmissibilityReport {
    is_admissible_with(t, &PositivityCone::default())
}

/// Units of the integral subring, with all six angles σ-fixed and inside `cone`.
pub fn is_admissible_with(t: &MarkovTriple, cone: &PositivityCone) -> AdmissibilityReport {
    let units = [0, 1, 2].map(|k| t.get(k).is_unit());
    let mut failures: Vec<String> =
        (0..3).filter(|&k| !units[k]).map(|k| format!("slot {k} is not a unit of the integral subring")).collect();
    let (angles, sigma_fixed, positive) = angle_flags(t, cone, &mut failures);
    AdmissibilityReport { units, angles, sigma_fixed, positive, admissible: failures.is_empty(), failures }
}

/// Test applied to every tree node: entries invertible in the ambient ring and all
/// angles in the cone. Mutated entries such as 2 over ℤ are not units of the integral
/// subring, so the unit condition only makes sense at the root.
pub fn node_admissible(t: &MarkovTriple, cone: &PositivityCone) -> AdmissibilityReport {
    let units = [0, 1, 2].map(|k| t.get(k).inverse().is_ok());
    let mut failures: Vec<String> =
        (0..3).filter(|&k| !units[k]).map(|k| format!("slot {k} is not invertible")).collect();
    let (angles, sigma_fixed, positive) = angle_flags(t, cone, &mut failures);
    AdmissibilityReport { units, angles, sigma_fixed, positive, admissible: failures.is_empty(), failures }
}

type Flags = (Option<Vec<RingValue>>, [bool; 6], [bool; 6]);

fn angle_flags(t: &MarkovTriple, cone: &PositivityCone, failures: &mut Vec<String>) -> Flags {
    match torus_angles(t) {
        Ok(angles) => {
            let sigma_fixed = [0, 1, 2, 3, 4, 5].map(|k| angles[k].is_sigma_fixed());
            let positive = [0, 1, 2, 3, 4, 5].map(|k| sigma_fixed[k] && cone.contains(&angles[k]));
            for k in 0..6 {
                if !sigma_fixed[k] {
                    failures.push(format!("angle {k} is not σ-fixed"));
                } else if !positive[k] {
                    failures.push(format!("angle {k} is not positive"));
                }
            }
            (Some(angles.to_vec()), sigma_fixed, positive)
        }
        Err(e) => {
            failures.push(e.to_string());
            (None, [false; 6], [false; 6])
        }
    }
}
