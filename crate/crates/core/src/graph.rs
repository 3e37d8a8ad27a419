//! The crystal graph of `B(Λ₀)` on restricted h-strict partitions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::blocks::{type_w, ModuleType};
use crate::cartan::{CartanType, ContentVector, Residue};
use crate::crystal::{e_tilde, eps, f_tilde, phi};
use crate::error::{Error, Result};
use crate::partition::{content, is_h_strict, is_restricted, Partition};

/// A word `(i_1, …, i_n)` naming `f̃_{i_n} ⋯ f̃_{i_1} ∅`.
pub type PathLabel = Vec<Residue>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphNode {
    pub partition: Partition,
    pub degree: usize,
    pub content: ContentVector,
    pub eps: Vec<usize>,
    pub phi: Vec<usize>,
    #[serde(rename = "type")]
    pub kind: ModuleType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub from: Partition,
    pub label: Residue,
    pub to: Partition,
}

/// Vertices up to a degree bound, ordered by degree then lexicographically,
/// and all `f̃_i` edges between them.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub cartan: CartanType,
    pub max_n: usize,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

impl CrystalGraph {
    pub fn layer(&self, n: usize) -> Vec<&Partition> {
        self.nodes
            .iter()
            .filter(|v| v.degree == n)
            .map(|v| &v.partition)
            .collect()
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        (0..=self.max_n).map(|n| self.layer(n).len()).collect()
    }

    /// Residues tracked in the `eps`/`phi` vectors.
    pub fn residues(&self) -> Vec<Residue> {
        self.cartan.residues(self.max_n).collect()
    }
}

/// Breadth-first closure of `{∅}` under the `f̃_i`, degree by degree.
pub fn generate(ct: CartanType, max_n: usize) -> CrystalGraph {
    let residues: Vec<Residue> = ct.residues(max_n).collect();
    let mut layer: BTreeSet<Partition> = BTreeSet::from([Partition::empty()]);
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for n in 0..=max_n {
        let mut next = BTreeSet::new();
        for lam in &layer {
            nodes.push(GraphNode {
                partition: lam.clone(),
                degree: n,
                content: content(lam, ct),
                eps: residues.iter().map(|&i| eps(lam, ct, i)).collect(),
                phi: residues.iter().map(|&i| phi(lam, ct, i)).collect(),
                kind: type_w(lam, ct),
            });
            if n == max_n {
                continue;
            }
            for &i in &residues {
                if let Some(mu) = f_tilde(lam, ct, i) {
                    edges.push(GraphEdge {
                        from: lam.clone(),
                        label: i,
                        to: mu.clone(),
                    });
                    next.insert(mu);
                }
            }
        }
        layer = next;
    }
    CrystalGraph {
        cartan: ct,
        max_n,
        nodes,
        edges,
    }
}

/// Applies `f̃_{i_1}`, then `f̃_{i_2}`, … to `∅`; `None` as soon as one
/// step vanishes.
pub fn path_to_partition(label: &[Residue], ct: CartanType) -> Option<Partition> {
    label
        .iter()
        .try_fold(Partition::empty(), |lam, &i| f_tilde(&lam, ct, i))
}

/// A canonical label: peel off `ẽ_i` with the smallest `i` having `ε_i > 0`,
/// then reverse the removed residues.
pub fn partition_to_canonical_path(lam: &Partition, ct: CartanType) -> Result<PathLabel> {
    if !is_h_strict(lam, ct) || !is_restricted(lam, ct) {
        return Err(Error::InvalidPartition {
            parts: lam.parts().to_vec(),
            reason: format!("not a restricted h-strict partition for h={}", ct.h_label()),
        });
    }
    let mut word = Vec::with_capacity(lam.size());
    let mut cur = lam.clone();
    while !cur.is_empty() {
        let (i, down) = ct
            .residues(cur.size())
            .find_map(|i| e_tilde(&cur, ct, i).map(|d| (i, d)))
            .expect("a non-empty restricted partition has a good node");
        word.push(i);
        cur = down;
    }
    word.reverse();
    Ok(word)
}

fn h_value(ct: CartanType) -> Value {
    match ct.h() {
        Some(h) => json!(h),
        None => json!("inf"),
    }
}

/// Machine-readable export, one node or edge per line; byte-deterministic
/// for a fixed graph.
pub fn export_json(graph: &CrystalGraph) -> String {
    fn rows<T: Serialize>(items: &[T]) -> String {
        let lines: Vec<String> = items
            .iter()
            .map(|x| format!("    {}", serde_json::to_string(x).expect("serializes")))
            .collect();
        if lines.is_empty() {
            "[]".into()
        } else {
            format!("[\n{}\n  ]", lines.join(",\n"))
        }
    }
    format!(
        "{{\n  \"h\": {},\n  \"max_n\": {},\n  \"nodes\": {},\n  \"edges\": {}\n}}",
        h_value(graph.cartan),
        graph.max_n,
        rows(&graph.nodes),
        rows(&graph.edges)
    )
}

/// Graphviz export: one node per partition, edges labelled by residue.
pub fn export_dot(graph: &CrystalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph crystal {{");
    let _ = writeln!(out, "  // {} up to degree {}", graph.cartan, graph.max_n);
    let mut by_degree: BTreeMap<usize, Vec<&Partition>> = BTreeMap::new();
    for v in &graph.nodes {
        by_degree.entry(v.degree).or_default().push(&v.partition);
    }
    for (n, layer) in by_degree {
        let _ = write!(out, "  {{ rank=same;");
        for lam in layer {
            let _ = write!(out, " \"{lam}\";");
        }
        let _ = writeln!(out, " }} // degree {n}");
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  \"{}\" -> \"{}\" [label={}];", e.from, e.to, e.label);
    }
    out.push_str("}\n");
    out
}
