use std::fmt;

use serde_json::Value;
use thiserror::Error;

use crate::ring::{json, Ring, RingError, RingValue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MarkovError {
    #[error("entry in slot {0} is not invertible")]
    NotInvertible(usize),
    #[error("mutation at slot {0} leaves the unit group")]
    MutationNotInvertible(usize),
    #[error("position {0} is not 0, 1 or 2")]
    BadPosition(usize),
    #[error("frozen entry is not σ-fixed")]
    CNotSigmaFixed,
    #[error("shadows must sum to zero for the conjugate dual rule")]
    ShadowConstraintViolated,
    #[error("root triple is not admissible: {0}")]
    InadmissibleRoot(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Edge values (A, B, C) of the once-punctured torus, with both triangles cyclically
/// oriented A → B → C.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MarkovTriple {
    entries: [RingValue; 3],
}

impl MarkovTriple {
    pub fn new(a: RingValue, b: RingValue, c: RingValue) -> Result<Self, MarkovError> {
        for x in [&b, &c] {
            if x.ring() != a.ring() {
                return Err(RingError::RingMismatch(a.ring().spec(), x.ring().spec()).into());
            }
        }
        Ok(MarkovTriple { entries: [a, b, c] })
    }

    pub fn from_array([a, b, c]: [RingValue; 3]) -> Result<Self, MarkovError> {
        Self::new(a, b, c)
    }

    /// (1, 1, 1).
    pub fn unit(ring: &Ring) -> Self {
        let one = RingValue::one(ring);
        MarkovTriple { entries: [one.clone(), one.clone(), one] }
    }

    pub fn ring(&self) -> &Ring {
        self.entries[0].ring()
    }

    pub fn entries(&self) -> &[RingValue; 3] {
        &self.entries
    }

    pub fn get(&self, slot: usize) -> &RingValue {
        &self.entries[slot % 3]
    }

    /// `(t_k, t_{k+1}, t_{k+2})`.
    pub fn rotated(&self, k: usize) -> MarkovTriple {
        let e = |j: usize| self.entries[(k + j) % 3].clone();
        MarkovTriple { entries: [e(0), e(1), e(2)] }
    }

    pub fn map(&self, f: impl Fn(&RingValue) -> RingValue) -> MarkovTriple {
        MarkovTriple { entries: [f(&self.entries[0]), f(&self.entries[1]), f(&self.entries[2])] }
    }

    pub(crate) fn inverses(&self) -> Result<[RingValue; 3], MarkovError> {
        let inv = |k: usize| self.entries[k].inverse().map_err(|_| MarkovError::NotInvertible(k));
        Ok([inv(0)?, inv(1)?, inv(2)?])
    }

    /// Inverses as `(N, d)` pairs with `X⁻¹ = N·d⁻¹`, `d` central.
    pub(crate) fn inverse_fractions(&self) -> Result<[(RingValue, RingValue); 3], MarkovError> {
        let inv = |k: usize| self.entries[k].inverse_fraction().map_err(|_| MarkovError::NotInvertible(k));
        Ok([inv(0)?, inv(1)?, inv(2)?])
    }

    /// The three encoded values, without a ring header.
    pub fn to_json(&self) -> Value {
        Value::Array(self.entries.iter().map(json::encode).collect())
    }

    pub fn from_json(ring: &Ring, v: &Value) -> Result<Self, MarkovError> {
        let xs = v.as_array().filter(|xs| xs.len() == 3).ok_or_else(|| RingError::Malformed("expected three values".into()))?;
        Self::new(json::decode(ring, &xs[0])?, json::decode(ring, &xs[1])?, json::decode(ring, &xs[2])?)
    }
}

impl serde::Serialize for MarkovTriple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.entries[0], self.entries[1], self.entries[2])
    }
}

impl fmt::Debug for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ring())
    }
}

/// The six angles of the torus seed, in the order
/// σ(A⁻¹)Bσ(C⁻¹), σ(B⁻¹)Cσ(A⁻¹), σ(C⁻¹)Aσ(B⁻¹), σ(C⁻¹)Bσ(A⁻¹), σ(A⁻¹)Cσ(B⁻¹), σ(B⁻¹)Aσ(C⁻¹).
pub fn torus_angles(t: &MarkovTriple) -> Result<[RingValue; 6], MarkovError> {
    let (nums, [da, db, dc]) = angle_fractions(t)?;
    let inv = |x: &RingValue, y: &RingValue| (x * y).inverse().map_err(|_| MarkovError::NotInvertible(0));
    let (ac, ba, cb) = (inv(&da, &dc)?, inv(&db, &da)?, inv(&dc, &db)?);
    let [n0, n1, n2, n3, n4, n5] = &nums;
    Ok([n0 * &ac, n1 * &ba, n2 * &cb, n3 * &ac, n4 * &ba, n5 * &cb])
}

/// Angle numerators and the central σ(d_A), σ(d_B), σ(d_C): angles 0 and 3 sit over
/// σ(d_A)σ(d_C), 1 and 4 over σ(d_B)σ(d_A), 2 and 5 over σ(d_C)σ(d_B). Dividing once per
/// value keeps rational function arithmetic out of the products.
fn angle_fractions(t: &MarkovTriple) -> Result<([RingValue; 6], [RingValue; 3]), MarkovError> {
    let [fa, fb, fc] = t.inverse_fractions()?;
    let (sa, sb, sc) = (fa.0.sigma(), fb.0.sigma(), fc.0.sigma());
    let (da, db, dc) = (fa.1.sigma(), fb.1.sigma(), fc.1.sigma());
    let [a, b, c] = t.entries();
    let nums = [
        &sa * b * &sc,
        &sb * c * &sa,
        &sc * a * &sb,
        &sc * b * &sa,
        &sa * c * &sb,
        &sb * a * &sc,
    ];
    Ok((nums, [da, db, dc]))
}

/// Sum of the six torus angles.
pub fn markov_function(t: &MarkovTriple) -> Result<RingValue, MarkovError> {
    let (n, [da, db, dc]) = angle_fractions(t)?;
    if da.is_one() && db.is_one() && dc.is_one() {
        return Ok(n.iter().skip(1).fold(n[0].clone(), |acc, x| acc + x));
    }
    // Common denominator σ(d_A)σ(d_B)σ(d_C); each pair is missing one factor.
    let num = &(&(&n[0] + &n[3]) * &db) + &(&(&(&n[1] + &n[4]) * &dc) + &(&(&n[2] + &n[5]) * &da));
    let den = (&(&da * &db) * &dc).inverse().map_err(|_| MarkovError::NotInvertible(0))?;
    Ok(&num * &den)
}

/// A′ = σ(C)A⁻¹σ(C) + Bσ(A⁻¹)B for `(A, B, C)` = `t` read from slot `p`.
pub fn exchange(t: &MarkovTriple, p: usize) -> Result<RingValue, MarkovError> {
    if p > 2 {
        return Err(MarkovError::BadPosition(p));
    }
    let r = t.rotated(p);
    let [a, b, c] = r.entries();
    let (n, d) = a.inverse_fraction().map_err(|_| MarkovError::NotInvertible(p))?;
    let (sc, sd) = (c.sigma(), d.sigma());
    // With A⁻¹ = N·d⁻¹: A′ = (σ(C)Nσ(C)·σ(d) + Bσ(N)B·d)·(d·σ(d))⁻¹.
    let num = &(&sc * &n * &sc) * &sd + &(b * &n.sigma() * b) * &d;
    let x = &num * &(&d * &sd).inverse().map_err(|_| MarkovError::NotInvertible(p))?;
    if x.inverse().is_err() {
        return Err(MarkovError::MutationNotInvertible(p));
    }
    Ok(x)
}

/// Mutation at slot `p`: with `(A, B, C)` read from `p`, the slots `p, p+1, p+2`
/// become `(A′, C, σ(B))`.
pub fn mutate(t: &MarkovTriple, p: usize) -> Result<MarkovTriple, MarkovError> {
    let x = exchange(t, p)?;
    let r = t.rotated(p);
    let [_, b, c] = r.entries();
    Ok(place(p, [x, c.clone(), b.sigma()]))
}

/// Same exchange, with the slots `p, p+1, p+2` becoming `(σ(B), A′, C)`.
pub fn mutate_rotated(t: &MarkovTriple, p: usize) -> Result<MarkovTriple, MarkovError> {
    let x = exchange(t, p)?;
    let r = t.rotated(p);
    let [_, b, c] = r.entries();
    Ok(place(p, [b.sigma(), x, c.clone()]))
}

fn place(p: usize, vals: [RingValue; 3]) -> MarkovTriple {
    let mut out: [Option<RingValue>; 3] = [None, None, None];
    for (j, v) in vals.into_iter().enumerate() {
        out[(p + j) % 3] = Some(v);
    }
    MarkovTriple { entries: out.map(Option::unwrap) }
}
