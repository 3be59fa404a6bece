use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{Map, Value};

use crate::ring::{json, Ring, RingError, RingValue};

/// 2×2 matrix `[[A, B], [C, D]]` over one involutive ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: RingValue,
    pub b: RingValue,
    pub c: RingValue,
    pub d: RingValue,
}

/// Column vector `(V₁, V₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub v1: RingValue,
    pub v2: RingValue,
}

impl Vec2 {
    pub fn new(v1: RingValue, v2: RingValue) -> Self {
        assert_eq!(v1.ring(), v2.ring(), "vector components must share a ring");
        Vec2 { v1, v2 }
    }

    pub fn ring(&self) -> &Ring {
        self.v1.ring()
    }
}

impl Mat2 {
    pub fn new(a: RingValue, b: RingValue, c: RingValue, d: RingValue) -> Result<Self, RingError> {
        for x in [&b, &c, &d] {
            if x.ring() != a.ring() {
                return Err(RingError::RingMismatch(a.ring().spec(), x.ring().spec()));
            }
        }
        Ok(Mat2 { a, b, c, d })
    }

    pub fn from_array([a, b, c, d]: [RingValue; 4]) -> Result<Self, RingError> {
        Self::new(a, b, c, d)
    }

    pub fn from_ints(ring: &Ring, [a, b, c, d]: [i64; 4]) -> Self {
        let f = |k| RingValue::from_int(ring, k);
        Mat2 { a: f(a), b: f(b), c: f(c), d: f(d) }
    }

    pub fn identity(ring: &Ring) -> Self {
        Self::diagonal(RingValue::one(ring), RingValue::one(ring))
    }

    pub fn zero(ring: &Ring) -> Self {
        let z = RingValue::zero(ring);
        Mat2 { a: z.clone(), b: z.clone(), c: z.clone(), d: z }
    }

    pub fn diagonal(a: RingValue, d: RingValue) -> Self {
        let z = RingValue::zero(a.ring());
        Mat2 { a, b: z.clone(), c: z, d }
    }

    /// `[[1, b], [0, 1]]`.
    pub fn upper(b: RingValue) -> Self {
        let (o, z) = (RingValue::one(b.ring()), RingValue::zero(b.ring()));
        Mat2 { a: o.clone(), b, c: z, d: o }
    }

    /// `[[1, 0], [c, 1]]`.
    pub fn lower(c: RingValue) -> Self {
        let (o, z) = (RingValue::one(c.ring()), RingValue::zero(c.ring()));
        Mat2 { a: o.clone(), b: z, c, d: o }
    }

    pub fn ring(&self) -> &Ring {
        self.a.ring()
    }

    pub fn entries(&self) -> [&RingValue; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map(&self, f: impl Fn(&RingValue) -> RingValue) -> Self {
        Mat2 { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }

    pub fn try_map<E>(&self, f: impl Fn(&RingValue) -> Result<RingValue, E>) -> Result<Self, E> {
        Ok(Mat2 { a: f(&self.a)?, b: f(&self.b)?, c: f(&self.c)?, d: f(&self.d)? })
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|x| x.is_zero())
    }

    /// Entrywise σ, without transposing.
    pub fn sigma(&self) -> Self {
        self.map(RingValue::sigma)
    }

    /// σ(M)ᵀ.
    pub fn sigma_transpose(&self) -> Self {
        Mat2 { a: self.a.sigma(), b: self.c.sigma(), c: self.b.sigma(), d: self.d.sigma() }
    }

    /// `x·M`.
    pub fn left_scale(&self, x: &RingValue) -> Self {
        self.map(|e| x * e)
    }

    /// `M·x`.
    pub fn right_scale(&self, x: &RingValue) -> Self {
        self.map(|e| e * x)
    }

    /// Product computed in the opposite ring: entries multiply as `y·x`.
    pub fn mul_op(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &o.a * &self.a + &o.c * &self.b,
            b: &o.b * &self.a + &o.d * &self.b,
            c: &o.a * &self.c + &o.c * &self.d,
            d: &o.b * &self.c + &o.d * &self.d,
        }
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2 { v1: &self.a * &v.v1 + &self.b * &v.v2, v2: &self.c * &v.v1 + &self.d * &v.v2 }
    }

    pub fn pow(&self, k: u32) -> Mat2 {
        (0..k).fold(Mat2::identity(self.ring()), |acc, _| &acc * self)
    }

    pub fn to_json(&self) -> Value {
        let mut m: Map<String, Value> = json::ring_header(self.ring());
        for (k, v) in ["A", "B", "C", "D"].iter().zip(self.entries()) {
            m.insert((*k).into(), json::encode(v));
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self, RingError> {
        let ring = json::ring_from_header(v)?;
        let get = |k: &str| {
            v.get(k).ok_or_else(|| RingError::Malformed(format!("missing entry {k}"))).and_then(|x| json::decode(&ring, x))
        };
        Mat2::new(get("A")?, get("B")?, get("C")?, get("D")?)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ring())
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, o: &Mat2) -> Mat2 {
        Mat2 { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, o: &Mat2) -> Mat2 {
        Mat2 { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.map(|x| -x)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        &self * &o
    }
}
