use std::collections::{BTreeMap, BTreeSet};

use serde_json::{Map, Value};
use thiserror::Error;

use crate::markov::MarkovError;
use crate::ring::{json, Ring, RingError, RingValue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error("no edge between {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("edge {0}-{1} is frozen")]
    FrozenEdge(usize, usize),
    #[error("edge {0}-{1} is not the diagonal of a quadrilateral")]
    NoQuadrilateral(usize, usize),
    #[error("value on edge {0}-{1} is not invertible")]
    NotInvertible(usize, usize),
    #[error("triangle {0:?} violates the triangle condition")]
    TriangleCondition([usize; 3]),
    #[error("matrix is not in the symplectic group")]
    NotSymplectic,
    #[error("matrix entry {0} is not invertible")]
    EntryNotInvertible(char),
    #[error("monodromy path is disconnected at step {0}")]
    Disconnected(usize),
    #[error("malformed seed: {0}")]
    Malformed(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Markov(#[from] MarkovError),
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Rotates a cyclic triple so that its smallest vertex comes first.
pub(crate) fn normalize_triangle(t: [usize; 3]) -> [usize; 3] {
    let m = (0..3).min_by_key(|&k| t[k]).unwrap();
    [t[m], t[(m + 1) % 3], t[(m + 2) % 3]]
}

/// A triangulated polygon with invertible edge values.
///
/// Each undirected edge is stored once, in the orientation `(min, max)`; reading it the
/// other way round applies σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterSeed {
    ring: Ring,
    points: Vec<usize>,
    edges: BTreeMap<(usize, usize), RingValue>,
    triangles: Vec<[usize; 3]>,
    frozen: BTreeSet<(usize, usize)>,
}

impl ClusterSeed {
    /// Builds a seed from oriented edge values. An entry `((i, j), x)` with `i > j`
    /// is stored as `σ(x)` on `(j, i)`.
    pub fn new(
        ring: &Ring,
        points: Vec<usize>,
        edges: impl IntoIterator<Item = ((usize, usize), RingValue)>,
        triangles: Vec<[usize; 3]>,
        frozen: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ClusterError> {
        let mut map = BTreeMap::new();
        for ((i, j), x) in edges {
            if x.ring() != ring {
                return Err(RingError::RingMismatch(x.ring().spec(), ring.spec()).into());
            }
            if i == j || !points.contains(&i) || !points.contains(&j) {
                return Err(ClusterError::Malformed(format!("bad edge {i}-{j}")));
            }
            if x.inverse().is_err() {
                return Err(ClusterError::NotInvertible(i, j));
            }
            map.insert(key(i, j), if i < j { x } else { x.sigma() });
        }
        let seed = ClusterSeed {
            ring: ring.clone(),
            points,
            edges: map,
            triangles: triangles.into_iter().map(normalize_triangle).collect(),
            frozen: frozen.into_iter().map(|(i, j)| key(i, j)).collect(),
        };
        for &f in &seed.frozen {
            if !seed.edges.contains_key(&f) {
                return Err(ClusterError::MissingEdge(f.0, f.1));
            }
        }
        for t in &seed.triangles {
            seed.check_triangle(*t)?;
        }
        Ok(seed)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Stored edges, keyed by `(min, max)`.
    pub fn edges(&self) -> &BTreeMap<(usize, usize), RingValue> {
        &self.edges
    }

    pub fn is_frozen(&self, i: usize, j: usize) -> bool {
        self.frozen.contains(&key(i, j))
    }

    pub fn frozen(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.frozen.iter().copied()
    }

    /// X_ij, with X_ji = σ(X_ij).
    pub fn value(&self, i: usize, j: usize) -> Result<RingValue, ClusterError> {
        let x = self.edges.get(&key(i, j)).ok_or(ClusterError::MissingEdge(i, j))?;
        Ok(if i < j { x.clone() } else { x.sigma() })
    }

    fn inv(&self, i: usize, j: usize) -> Result<RingValue, ClusterError> {
        self.value(i, j)?.inverse().map_err(|_| ClusterError::NotInvertible(i, j))
    }

    /// T_i^{jk} = X_ji⁻¹ X_jk X_ik⁻¹.
    pub fn angle(&self, i: usize, j: usize, k: usize) -> Result<RingValue, ClusterError> {
        Ok(self.inv(j, i)? * self.value(j, k)? * self.inv(i, k)?)
    }

    fn check_triangle(&self, t: [usize; 3]) -> Result<(), ClusterError> {
        let [a, b, c] = t;
        for (i, j, k) in [(a, b, c), (b, c, a), (c, a, b)] {
            if !self.angle(i, j, k)?.is_sigma_fixed() {
                return Err(ClusterError::TriangleCondition(t));
            }
        }
        Ok(())
    }

    pub fn triangle_conditions_hold(&self) -> bool {
        self.triangles.iter().all(|t| self.check_triangle(*t).is_ok())
    }

    /// Sum of the angles at `m` over every triangle containing it.
    pub fn vertex_angle_sum(&self, m: usize) -> Result<RingValue, ClusterError> {
        let mut acc = RingValue::zero(&self.ring);
        for t in &self.triangles {
            if let Some(p) = t.iter().position(|&v| v == m) {
                acc = acc + self.angle(m, t[(p + 1) % 3], t[(p + 2) % 3])?;
            }
        }
        Ok(acc)
    }

    /// Flips the diagonal `(i, k)` of the quadrilateral formed by its two triangles.
    pub fn mutate_edge(&self, i: usize, k: usize) -> Result<ClusterSeed, ClusterError> {
        if !self.edges.contains_key(&key(i, k)) {
            return Err(ClusterError::MissingEdge(i, k));
        }
        if self.is_frozen(i, k) {
            return Err(ClusterError::FrozenEdge(i, k));
        }
        // (i, j, k) and (i, k, ℓ) as cyclic triangles.
        let mut j = None;
        let mut l = None;
        let mut rest = Vec::new();
        for t in &self.triangles {
            let has = |v| t.contains(&v);
            if has(i) && has(k) {
                let p = t.iter().position(|&v| v == i).unwrap();
                let (next, third) = (t[(p + 1) % 3], t[(p + 2) % 3]);
                if next == k {
                    l = Some(third);
                } else {
                    j = Some(next);
                }
            } else {
                rest.push(*t);
            }
        }
        let (j, l) = match (j, l) {
            (Some(j), Some(l)) if rest.len() + 2 == self.triangles.len() => (j, l),
            _ => return Err(ClusterError::NoQuadrilateral(i, k)),
        };
        let x = self.value(j, k)? * self.inv(i, k)? * self.value(i, l)?
            + self.value(j, i)? * self.inv(k, i)? * self.value(k, l)?;
        if x.inverse().is_err() {
            return Err(ClusterError::NotInvertible(j, l));
        }
        let mut edges = self.edges.clone();
        edges.remove(&key(i, k));
        edges.insert(key(j, l), if j < l { x } else { x.sigma() });
        rest.push(normalize_triangle([i, j, l]));
        rest.push(normalize_triangle([j, k, l]));
        Ok(ClusterSeed { edges, triangles: rest, ..self.clone() })
    }

    /// Gauge change at `m`: A′_ij = σ(β_i)⁻¹ A_ij β_j⁻¹ with β_m = `b` and 1 elsewhere.
    /// The angle sum at `m` becomes `b Φ_m σ(b)`.
    pub fn rescale_vertex(&self, m: usize, b: &RingValue) -> Result<ClusterSeed, ClusterError> {
        let b_inv = b.inverse()?;
        let sb_inv = b.sigma().inverse()?;
        let edges = self
            .edges
            .iter()
            .map(|(&(i, j), x)| {
                let mut y = x.clone();
                if i == m {
                    y = &sb_inv * &y;
                }
                if j == m {
                    y = &y * &b_inv;
                }
                ((i, j), y)
            })
            .collect();
        Ok(ClusterSeed { edges, ..self.clone() })
    }

    /// Relabels vertices by a permutation, re-orienting stored edges as needed.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<ClusterSeed, ClusterError> {
        let points = self.points.iter().map(|&p| f(p)).collect();
        let edges: Vec<_> = self.edges.iter().map(|(&(i, j), x)| ((f(i), f(j)), x.clone())).collect();
        let triangles = self.triangles.iter().map(|t| [f(t[0]), f(t[1]), f(t[2])]).collect();
        let frozen: Vec<_> = self.frozen.iter().map(|&(i, j)| (f(i), f(j))).collect();
        ClusterSeed::new(&self.ring, points, edges, triangles, frozen)
    }

    /// Seed JSON: `{"ring", "points", "edges": {"i-j": value}, "triangles", "frozen"}`.
    pub fn to_json(&self) -> Value {
        let mut m = json::ring_header(&self.ring);
        m.insert("points".into(), Value::from(self.points.clone()));
        let edges: Map<String, Value> =
            self.edges.iter().map(|((i, j), x)| (format!("{i}-{j}"), json::encode(x))).collect();
        m.insert("edges".into(), Value::Object(edges));
        m.insert(
            "triangles".into(),
            Value::Array(self.triangles.iter().map(|t| Value::from(t.to_vec())).collect()),
        );
        m.insert(
            "frozen".into(),
            Value::Array(self.frozen.iter().map(|(i, j)| Value::String(format!("{i}-{j}"))).collect()),
        );
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<ClusterSeed, ClusterError> {
        let ring = json::ring_from_header(v)?;
        let bad = |what: &str| ClusterError::Malformed(what.to_string());
        let points = v
            .get("points")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("points"))?
            .iter()
            .map(|p| p.as_u64().map(|x| x as usize).ok_or_else(|| bad("point id")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut edges = Vec::new();
        for (k, x) in v.get("edges").and_then(Value::as_object).ok_or_else(|| bad("edges"))? {
            edges.push((parse_edge_key(k)?, json::decode(&ring, x)?));
        }
        let triangles = v
            .get("triangles")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("triangles"))?
            .iter()
            .map(|t| {
                let ids: Vec<usize> = t
                    .as_array()
                    .ok_or_else(|| bad("triangle"))?
                    .iter()
                    .map(|x| x.as_u64().map(|y| y as usize).ok_or_else(|| bad("triangle vertex")))
                    .collect::<Result<_, _>>()?;
                <[usize; 3]>::try_from(ids).map_err(|_| bad("triangle arity"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let frozen = match v.get("frozen").and_then(Value::as_array) {
            Some(xs) => xs
                .iter()
                .map(|x| x.as_str().ok_or_else(|| bad("frozen edge")).and_then(parse_edge_key))
                .collect::<Result<Vec<_>, _>>()?,
            None => Vec::new(),
        };
        ClusterSeed::new(&ring, points, edges, triangles, frozen)
    }
}

fn parse_edge_key(k: &str) -> Result<(usize, usize), ClusterError> {
    let bad = || ClusterError::Malformed(format!("edge key {k:?}"));
    let (a, b) = k.split_once('-').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}
