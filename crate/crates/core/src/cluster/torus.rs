use serde_json::{Map, Value};

use super::seed::ClusterError;
use crate::markov::{markov_function, mutate, torus_angles, MarkovTriple};
use crate::ring::{json, Ring, RingError, RingValue};

/// The once-punctured torus: one marked point, edges A, B, C and two triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSeed {
    triple: MarkovTriple,
}

impl TorusSeed {
    pub fn new(triple: MarkovTriple) -> Self {
        TorusSeed { triple }
    }

    /// All three edges equal to 1.
    pub fn unit(ring: &Ring) -> Self {
        Self::new(MarkovTriple::unit(ring))
    }

    pub fn triple(&self) -> &MarkovTriple {
        &self.triple
    }

    pub fn ring(&self) -> &Ring {
        self.triple.ring()
    }

    pub fn angles(&self) -> Result<[RingValue; 6], ClusterError> {
        Ok(torus_angles(&self.triple)?)
    }

    /// Total angle at the single marked point, i.e. the Markov function.
    pub fn vertex_angle_sum(&self) -> Result<RingValue, ClusterError> {
        Ok(markov_function(&self.triple)?)
    }

    /// Flip of edge `k` (0 = A, 1 = B, 2 = C).
    pub fn mutate_edge(&self, k: usize) -> Result<TorusSeed, ClusterError> {
        Ok(Self::new(mutate(&self.triple, k)?))
    }

    /// Gauge change at the marked point: every edge becomes σ(B)⁻¹ X B⁻¹, and the angle
    /// sum becomes B Φ σ(B).
    pub fn rescale_vertex(&self, b: &RingValue) -> Result<TorusSeed, ClusterError> {
        let b_inv = b.inverse()?;
        let sb_inv = b.sigma().inverse()?;
        Ok(Self::new(self.triple.map(|x| &sb_inv * x * &b_inv)))
    }

    /// Seed JSON with the three loop edges keyed `0-0/A`, `0-0/B`, `0-0/C`.
    pub fn to_json(&self) -> Value {
        let mut m = json::ring_header(self.ring());
        m.insert("points".into(), Value::from(vec![0]));
        let edges: Map<String, Value> = ["A", "B", "C"]
            .iter()
            .zip(self.triple.entries())
            .map(|(k, x)| (format!("0-0/{k}"), json::encode(x)))
            .collect();
        m.insert("edges".into(), Value::Object(edges));
        m.insert("triangles".into(), serde_json::json!([[0, 0, 0], [0, 0, 0]]));
        m.insert("frozen".into(), Value::Array(vec![]));
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<TorusSeed, ClusterError> {
        let ring = json::ring_from_header(v)?;
        let edges = v.get("edges").and_then(Value::as_object).ok_or_else(|| ClusterError::Malformed("edges".into()))?;
        let get = |k: &str| -> Result<RingValue, ClusterError> {
            let x = edges.get(&format!("0-0/{k}")).ok_or_else(|| RingError::Malformed(format!("missing edge {k}")))?;
            Ok(json::decode(&ring, x)?)
        };
        Ok(Self::new(MarkovTriple::new(get("A")?, get("B")?, get("C")?)?))
    }
}
