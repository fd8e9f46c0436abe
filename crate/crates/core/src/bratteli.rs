//! The Bratteli diagram of the tower `P_{0,c} ⊆ P_{1,c} ⊆ ...` up to a
//! level cap. Level `n` holds the labels `(n_0, ..., n_c)` of the
//! irreducible modules on `n` vertices, and each label points down to every
//! label obtained by decreasing one nonzero part. The dimensions reproduce
//! Pascal's `(c+1)`-simplex.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{binomial, binomial_signed};
use crate::repr::{restriction_decomposition, IrrepLabel, ModuleSpace};
use crate::witness::{VerifyError, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BratteliError {
    #[error("unknown format {0:?} (expected dot or json)")]
    UnknownFormat(String),
    #[error("malformed graph JSON: {0}")]
    Json(String),
    #[error("inconsistent graph: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = BratteliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            _ => Err(BratteliError::UnknownFormat(s.to_string())),
        }
    }
}

/// Downward edge from `levels[level][parent]` to `levels[level - 1][child]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BratteliEdge {
    pub level: usize,
    pub parent: usize,
    pub child: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliGraph {
    c: usize,
    n_max: usize,
    levels: Vec<Vec<IrrepLabel>>,
    edges: Vec<BratteliEdge>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    c: usize,
    n_max: usize,
    levels: Vec<Vec<IrrepLabel>>,
    edges: Vec<[[usize; 2]; 2]>,
}

fn level_index(level: &[IrrepLabel]) -> BTreeMap<&IrrepLabel, usize> {
    level.iter().enumerate().map(|(i, l)| (l, i)).collect()
}

impl BratteliGraph {
    /// Levels in colex order; edges from the componentwise rule.
    pub fn build(c: usize, n_max: usize) -> BratteliGraph {
        assert!(c >= 1, "color count must be at least 1");
        let levels: Vec<Vec<IrrepLabel>> = (0..=n_max).map(|n| IrrepLabel::all(n, c)).collect();
        let mut edges = Vec::new();
        for n in 1..=n_max {
            let below = level_index(&levels[n - 1]);
            for (parent, label) in levels[n].iter().enumerate() {
                for child in label.restriction_labels() {
                    edges.push(BratteliEdge { level: n, parent, child: below[&child] });
                }
            }
        }
        BratteliGraph { c, n_max, levels, edges }
    }

    /// Same graph, but with edges read off from the computed restriction of
    /// each canonical module (which also verifies the restriction).
    pub fn build_from_restriction(c: usize, n_max: usize, cap: u64) -> Result<BratteliGraph, VerifyError> {
        let levels: Vec<Vec<IrrepLabel>> = (0..=n_max).map(|n| IrrepLabel::all(n, c)).collect();
        let mut edges = Vec::new();
        for n in 1..=n_max {
            let below = level_index(&levels[n - 1]);
            for (parent, label) in levels[n].iter().enumerate() {
                let restriction = restriction_decomposition(&ModuleSpace::for_label(label), cap)?;
                for child in restriction.labels() {
                    edges.push(BratteliEdge { level: n, parent, child: below[&child] });
                }
            }
        }
        Ok(BratteliGraph { c, n_max, levels, edges })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn levels(&self) -> &[Vec<IrrepLabel>] {
        &self.levels
    }

    pub fn edges(&self) -> &[BratteliEdge] {
        &self.edges
    }

    pub fn vertex_total(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Children of `levels[level][index]`.
    pub fn children(&self, level: usize, index: usize) -> Vec<&IrrepLabel> {
        self.edges
            .iter()
            .filter(|e| e.level == level && e.parent == index)
            .map(|e| &self.levels[level - 1][e.child])
            .collect()
    }

    /// Parents of `levels[level][index]`, derived from the downward edges.
    pub fn parents(&self, level: usize, index: usize) -> Vec<&IrrepLabel> {
        self.edges
            .iter()
            .filter(|e| e.level == level + 1 && e.child == index)
            .map(|e| &self.levels[level + 1][e.parent])
            .collect()
    }

    /// Number of level-`n` vertices with each down-degree.
    pub fn down_degree_histogram(&self, n: usize) -> BTreeMap<usize, usize> {
        let mut degree = vec![0usize; self.levels[n].len()];
        for e in self.edges.iter().filter(|e| e.level == n) {
            degree[e.parent] += 1;
        }
        let mut hist = BTreeMap::new();
        for d in degree {
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    /// Every non-root vertex has dimension equal to the sum of its
    /// children's dimensions.
    pub fn verify_multinomial_recursion(&self) -> Result<(), VerifyError> {
        let mut sums: Vec<Vec<BigUint>> =
            self.levels.iter().map(|level| vec![BigUint::default(); level.len()]).collect();
        for e in &self.edges {
            sums[e.level][e.parent] += self.levels[e.level - 1][e.child].dimension();
        }
        for (level, level_sums) in self.levels.iter().zip(&sums).skip(1) {
            for (label, sum) in level.iter().zip(level_sums) {
                if *sum != label.dimension() {
                    return Err(VerifyError::Failed(
                        Witness::new("dimension is not the sum over children", vec![])
                            .with_detail(format!("{label}: {} vs {sum}", label.dimension())),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn emit(&self, format: Format) -> Vec<u8> {
        match format {
            Format::Dot => self.to_dot().into_bytes(),
            Format::Json => self.to_json().into_bytes(),
        }
    }

    fn node_name(n: usize, label: &IrrepLabel) -> String {
        format!("W_{n}_{label}")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph bratteli {\n");
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=plaintext];\n");
        for (n, level) in self.levels.iter().enumerate() {
            for label in level {
                let dim = label.dimension();
                writeln!(
                    out,
                    "  \"{}\" [label=\"W^{n}_{label}\\n{dim}\", dimension={dim}];",
                    Self::node_name(n, label)
                )
                .unwrap();
            }
        }
        for (n, level) in self.levels.iter().enumerate() {
            let names: Vec<String> = level.iter().map(|l| format!("\"{}\";", Self::node_name(n, l))).collect();
            writeln!(out, "  {{ rank=same; {} }}", names.join(" ")).unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\";",
                Self::node_name(e.level, &self.levels[e.level][e.parent]),
                Self::node_name(e.level - 1, &self.levels[e.level - 1][e.child])
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `{c, n_max, levels, edges}` where each edge is
    /// `[[level, parent_index], [level - 1, child_index]]`.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            c: self.c,
            n_max: self.n_max,
            levels: self.levels.clone(),
            edges: self.edges.iter().map(|e| [[e.level, e.parent], [e.level - 1, e.child]]).collect(),
        };
        let mut s = serde_json::to_string(&doc).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Reads the JSON form back, checking that indices and labels are
    /// consistent.
    pub fn from_json(text: &str) -> Result<BratteliGraph, BratteliError> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| BratteliError::Json(e.to_string()))?;
        if doc.levels.len() != doc.n_max + 1 {
            return Err(BratteliError::Inconsistent(format!("{} levels for n_max = {}", doc.levels.len(), doc.n_max)));
        }
        for (n, level) in doc.levels.iter().enumerate() {
            if let Some(bad) = level.iter().find(|l| l.parts().len() != doc.c + 1 || l.n() != n) {
                return Err(BratteliError::Inconsistent(format!("label {bad} on level {n}")));
            }
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for [[level, parent], [child_level, child]] in doc.edges {
            if level == 0
                || child_level + 1 != level
                || level > doc.n_max
                || parent >= doc.levels[level].len()
                || child >= doc.levels[child_level].len()
            {
                return Err(BratteliError::Inconsistent(format!("edge [[{level},{parent}],[{child_level},{child}]]")));
            }
            edges.push(BratteliEdge { level, parent, child });
        }
        Ok(BratteliGraph { c: doc.c, n_max: doc.n_max, levels: doc.levels, edges })
    }
}

/// `C(n + c, n)`: the number of labels on level `n`.
pub fn vertex_count(n: usize, c: usize) -> BigUint {
    binomial((n + c) as u64, n as u64)
}

/// `C(c + 1, x) · C(n - 1, x - 1)`: level-`n` vertices with exactly `x`
/// children.
pub fn adjacency_count(n: usize, c: usize, x: usize) -> BigUint {
    binomial((c + 1) as u64, x as u64) * binomial_signed(n as i64 - 1, x as i64 - 1)
}
