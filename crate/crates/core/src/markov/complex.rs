use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::triple::{MarkovError, MarkovTriple};
use crate::ring::{Elem, Ring, RingKind, RingValue};

/// `modulus · e^{2πi·arg}` with `arg` reduced to [0, 1).
///
/// This is a carrier for the split mutation rule only: sums of values with different
/// arguments are not representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polar {
    pub modulus: BigRational,
    pub arg: BigRational,
}

impl Polar {
    pub fn new(modulus: BigRational, arg: BigRational) -> Self {
        Polar { modulus, arg: reduce_arg(arg) }
    }

    pub fn from_ints(modulus: i64, num: i64, den: i64) -> Self {
        Self::new(BigRational::from_integer(modulus.into()), BigRational::new(num.into(), den.into()))
    }
}

impl fmt::Display for Polar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·e^(2πi·{})", self.modulus, self.arg)
    }
}

fn reduce_arg(a: BigRational) -> BigRational {
    let fl = a.floor();
    a - fl
}

/// Mutation at slot `p` in polar form: with `(A, B, C)` read from `p`, the slots become
/// `((B² + C²)/A · e^{2πi(b−c)}, C e^{2πic}, B e^{−2πib})`.
pub fn complex_polar_mutate(t: &[Polar; 3], p: usize) -> Result<[Polar; 3], MarkovError> {
    if p > 2 {
        return Err(MarkovError::BadPosition(p));
    }
    let (x, y, z) = (&t[p], &t[(p + 1) % 3], &t[(p + 2) % 3]);
    if !x.modulus.is_positive() {
        return Err(MarkovError::NotInvertible(p));
    }
    let m = (&y.modulus * &y.modulus + &z.modulus * &z.modulus) / &x.modulus;
    let vals = [Polar::new(m, &y.arg - &z.arg), z.clone(), Polar::new(y.modulus.clone(), -&y.arg)];
    let mut out = t.clone();
    for (j, v) in vals.into_iter().enumerate() {
        out[(p + j) % 3] = v;
    }
    Ok(out)
}

/// `m · Z^k` in `group:Zn` for a polar value whose argument has denominator dividing n.
pub fn polar_to_group(ring: &Ring, x: &Polar) -> Result<RingValue, MarkovError> {
    let RingKind::Group { n, base } = ring.kind() else {
        return Err(MarkovError::Unsupported(format!("{} is not a cyclic group ring", ring.spec())));
    };
    let scaled = &x.arg * BigRational::from_integer(BigInt::from(*n));
    if !scaled.is_integer() {
        return Err(MarkovError::Unsupported(format!("argument {} does not have denominator {n}", x.arg)));
    }
    let k = scaled.to_integer().mod_floor(&BigInt::from(*n)).to_usize().unwrap();
    let mut coeffs = vec![base.zero_elem(); *n];
    coeffs[k] = base.from_q(&x.modulus);
    Ok(RingValue::new(ring, Elem::Group(coeffs))?)
}

/// Inverse of [`polar_to_group`] for values `±m · Z^k`; a negative sign shifts the argument by ½.
pub fn group_to_polar(x: &RingValue) -> Option<Polar> {
    let coeffs = x.group_coefficients()?;
    let n = coeffs.len() as i64;
    let mut nonzero = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (k, c) = nonzero.next()?;
    if nonzero.next().is_some() {
        return None;
    }
    let q = c.as_rational()?;
    let mut arg = BigRational::new(BigInt::from(k as i64), BigInt::from(n));
    if q.is_negative() {
        arg += BigRational::new(BigInt::one(), BigInt::from(2));
    }
    Some(Polar::new(q.abs(), arg))
}

/// `±m · i^k` in complex-conj, for arguments with denominator dividing 4.
pub fn polar_to_complex(ring: &Ring, x: &Polar) -> Result<RingValue, MarkovError> {
    let four = &x.arg * BigRational::from_integer(BigInt::from(4));
    if !matches!(ring.kind(), RingKind::ComplexConj) || !four.is_integer() {
        return Err(MarkovError::Unsupported(format!("{x} has no exact image in {}", ring.spec())));
    }
    let i = RingValue::symbol(ring, "i").expect("complex ring has i");
    let k = four.to_integer().to_i64().unwrap();
    Ok(i.pow(k)?.scale(&x.modulus))
}

/// Exact mutation in `group:Zn` mapped back to polar form, the oracle for the split rule.
pub fn group_oracle_mutate(ring: &Ring, t: &[Polar; 3], p: usize) -> Result<[Polar; 3], MarkovError> {
    let vals = [0, 1, 2].map(|k| polar_to_group(ring, &t[k]));
    let [a, b, c] = vals;
    let m = super::triple::mutate(&MarkovTriple::new(a?, b?, c?)?, p)?;
    let back = [0, 1, 2].map(|k| group_to_polar(m.get(k)));
    match back {
        [Some(a), Some(b), Some(c)] => Ok([a, b, c]),
        _ => Err(MarkovError::Unsupported("group mutation left the monomial values".into())),
    }
}

/// Sum of the arguments is an integer, the positivity condition for unit-modulus triples.
pub fn args_balanced(t: &[Polar; 3]) -> bool {
    (&t[0].arg + &t[1].arg + &t[2].arg).is_integer()
}
