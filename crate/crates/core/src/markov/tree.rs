use std::collections::HashSet;

use rayon::prelude::*;
use serde_json::{Map, Value};

use super::admissible::{is_admissible_with, node_admissible, AdmissibilityReport};
use super::triple::{markov_function, mutate, MarkovError, MarkovTriple};
use crate::ring::{json, PositivityCone, Ring, RingValue};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TreePolicy {
    /// Skip (and do not expand) nodes whose triple already appeared earlier in
    /// breadth-first order.
    pub dedup: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovTreeNode {
    /// Mutation positions from the root, each in 0..3, never repeating consecutively.
    pub word: Vec<u8>,
    /// `None` when the last mutation left the unit group; such nodes are leaves.
    pub triple: Option<MarkovTriple>,
    pub markov_value: Option<RingValue>,
    pub report: Option<AdmissibilityReport>,
    pub failure: Option<String>,
}

impl MarkovTreeNode {
    pub fn word_string(&self) -> String {
        self.word.iter().map(|d| char::from(b'0' + d)).collect()
    }

    pub fn admissible(&self) -> bool {
        self.report.as_ref().is_some_and(|r| r.admissible)
    }

    fn expandable(&self) -> bool {
        self.triple.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovTree {
    pub ring: Ring,
    pub root: MarkovTriple,
    pub f0: RingValue,
    /// Word-lexicographic order, root (empty word) first.
    pub nodes: Vec<MarkovTreeNode>,
}

impl MarkovTree {
    /// Every entry of every successfully mutated node.
    pub fn values(&self) -> impl Iterator<Item = &RingValue> {
        self.nodes.iter().filter_map(|n| n.triple.as_ref()).flat_map(|t| t.entries().iter())
    }

    pub fn node(&self, word: &[u8]) -> Option<&MarkovTreeNode> {
        self.nodes.binary_search_by(|n| n.word.as_slice().cmp(word)).ok().map(|k| &self.nodes[k])
    }

    /// `{"ring", "root", "F0", "nodes": [{"word", "triple", "admissible"}]}`; failed nodes
    /// carry `"triple": null` and an `"error"` message.
    pub fn to_json(&self) -> Value {
        let mut m = json::ring_header(&self.ring);
        m.insert("root".into(), self.root.to_json());
        m.insert("F0".into(), json::encode(&self.f0));
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                let mut o = Map::new();
                o.insert("word".into(), Value::String(n.word_string()));
                o.insert("triple".into(), n.triple.as_ref().map_or(Value::Null, MarkovTriple::to_json));
                o.insert("admissible".into(), Value::Bool(n.admissible()));
                if let Some(f) = &n.failure {
                    o.insert("error".into(), Value::String(f.clone()));
                }
                Value::Object(o)
            })
            .collect();
        m.insert("nodes".into(), Value::Array(nodes));
        Value::Object(m)
    }
}

pub fn enumerate_tree(root: &MarkovTriple, depth: usize, policy: TreePolicy) -> Result<MarkovTree, MarkovError> {
    enumerate_tree_with(root, depth, policy, &PositivityCone::default())
}

/// Breadth-first expansion to words of length `depth`. Children of a level are computed
/// in parallel; the result does not depend on scheduling. The root must be admissible
/// (integral units, angles in `cone`); nodes below it only need invertible entries.
pub fn enumerate_tree_with(
    root: &MarkovTriple,
    depth: usize,
    policy: TreePolicy,
    cone: &PositivityCone,
) -> Result<MarkovTree, MarkovError> {
    let check = is_admissible_with(root, cone);
    if !check.admissible {
        return Err(MarkovError::InadmissibleRoot(check.failures.join("; ")));
    }
    let f0 = markov_function(root)?;
    let root_node = evaluate(Vec::new(), Ok(root.clone()), cone);
    let mut seen = HashSet::new();
    if policy.dedup {
        seen.insert(root.clone());
    }
    let mut nodes = vec![root_node];
    let mut frontier = vec![0usize];
    for _ in 0..depth {
        let jobs: Vec<(Vec<u8>, MarkovTriple)> = frontier
            .iter()
            .flat_map(|&k| {
                let parent = &nodes[k];
                let last = parent.word.last().copied();
                let t = parent.triple.clone().expect("frontier nodes carry a triple");
                (0..3u8).filter(move |&p| Some(p) != last).map(move |p| {
                    let mut w = parent.word.clone();
                    w.push(p);
                    (w, t.clone())
                })
            })
            .collect();
        let children: Vec<MarkovTreeNode> = jobs
            .into_par_iter()
            .map(|(w, t)| {
                let p = *w.last().unwrap() as usize;
                evaluate(w, mutate(&t, p), cone)
            })
            .collect();
        frontier.clear();
        for child in children {
            if policy.dedup {
                if let Some(t) = &child.triple {
                    if !seen.insert(t.clone()) {
                        continue;
                    }
                }
            }
            if child.expandable() {
                frontier.push(nodes.len());
            }
            nodes.push(child);
        }
    }
    nodes.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(MarkovTree { ring: root.ring().clone(), root: root.clone(), f0, nodes })
}

fn evaluate(word: Vec<u8>, t: Result<MarkovTriple, MarkovError>, cone: &PositivityCone) -> MarkovTreeNode {
    match t {
        Ok(t) => {
            let value = markov_function(&t).ok();
            let report = node_admissible(&t, cone);
            MarkovTreeNode { word, triple: Some(t), markov_value: value, report: Some(report), failure: None }
        }
        Err(e) => MarkovTreeNode { word, triple: None, markov_value: None, report: None, failure: Some(e.to_string()) },
    }
}
