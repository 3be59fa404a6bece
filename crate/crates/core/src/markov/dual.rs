use num_rational::BigRational;
use num_traits::Zero;

use super::triple::{mutate, MarkovError, MarkovTriple};
use crate::ring::{DualFlavor, Ring, RingKind, RingValue};

/// Generic mutation next to the closed-form split into real part and shadow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSplit {
    pub mutated: MarkovTriple,
    pub closed_form: MarkovTriple,
}

impl DualSplit {
    pub fn agree(&self) -> bool {
        self.mutated == self.closed_form
    }
}

fn scalar_parts(x: &RingValue) -> Result<(BigRational, BigRational), MarkovError> {
    let (a, da) = x.dual_parts().ok_or_else(|| MarkovError::Unsupported(format!("{} is not dual", x.ring())))?;
    match (a.as_rational(), da.as_rational()) {
        (Some(a), Some(da)) => Ok((a, da)),
        _ => Err(MarkovError::Unsupported("closed forms need a scalar base".into())),
    }
}

fn dual_value(ring: &Ring, a: BigRational, da: BigRational) -> Result<RingValue, MarkovError> {
    let base = ring.base().expect("dual ring has a base");
    Ok(RingValue::dual(ring, RingValue::from_rational(base, a), RingValue::from_rational(base, da))?)
}

/// Mutates at `p` and rebuilds the result from the real/shadow rules.
///
/// Trivial σ, with entries a + αε:
/// `((b²+c²)/a + (2abβ + 2acγ − (b²+c²)α)/a² ε, c + γε, b + βε)`.
/// Conjugate σ, with entries a(1 + αε) and α + β + γ = 0:
/// `((b²+c²)/a (1 + (β−γ)ε), c(1 + γε), b(1 − βε))`.
pub fn dual_split_mutate(t: &MarkovTriple, p: usize) -> Result<DualSplit, MarkovError> {
    let ring = t.ring();
    let RingKind::Dual { flavor, .. } = ring.kind() else {
        return Err(MarkovError::Unsupported(format!("{} is not a dual ring", ring.spec())));
    };
    if p > 2 {
        return Err(MarkovError::BadPosition(p));
    }
    let r = t.rotated(p);
    let [(a, al), (b, be), (c, ga)] = [scalar_parts(r.get(0))?, scalar_parts(r.get(1))?, scalar_parts(r.get(2))?];
    if a.is_zero() {
        return Err(MarkovError::NotInvertible(p));
    }
    let s = &b * &b + &c * &c;
    let vals = match flavor {
        DualFlavor::Trivial => {
            let two = BigRational::from_integer(2.into());
            let shadow = (&two * &a * &b * &be + &two * &a * &c * &ga - &s * &al) / (&a * &a);
            [
                dual_value(ring, &s / &a, shadow)?,
                dual_value(ring, c.clone(), ga.clone())?,
                dual_value(ring, b.clone(), be.clone())?,
            ]
        }
        DualFlavor::Conjugate => {
            if b.is_zero() || c.is_zero() {
                return Err(MarkovError::NotInvertible((p + if b.is_zero() { 1 } else { 2 }) % 3));
            }
            // Relative shadows of a(1 + αε).
            let (al, be, ga) = (&al / &a, &be / &b, &ga / &c);
            if !(&al + &be + &ga).is_zero() {
                return Err(MarkovError::ShadowConstraintViolated);
            }
            let m = &s / &a;
            [
                dual_value(ring, m.clone(), &m * (&be - &ga))?,
                dual_value(ring, c.clone(), &c * &ga)?,
                dual_value(ring, b.clone(), -(&b * &be))?,
            ]
        }
    };
    let mut slots: [Option<RingValue>; 3] = [None, None, None];
    for (j, v) in vals.into_iter().enumerate() {
        slots[(p + j) % 3] = Some(v);
    }
    let closed_form = MarkovTriple::from_array(slots.map(Option::unwrap))?;
    Ok(DualSplit { mutated: mutate(t, p)?, closed_form })
}
