//! Undirected multigraphs, Laplacian matrices, Cartesian products, and the
//! cycle / torus / circulant constructors.

use std::collections::BTreeMap;

use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Undirected multigraph on dense vertex indices 0..n−1. Edge
/// multiplicities are stored once per unordered pair with u < v; no
/// self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: BTreeMap<(u32, u32), u32>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        MultiGraph {
            n,
            edges: BTreeMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total edge count, counting multiplicities.
    pub fn edge_count(&self) -> u64 {
        self.edges.values().map(|&m| m as u64).sum()
    }

    pub fn add_edge(&mut self, u: usize, v: usize, multiplicity: u32) {
        assert!(u < self.n && v < self.n, "vertex index out of range");
        assert!(u != v, "self-loops are not supported");
        if multiplicity == 0 {
            return;
        }
        let key = (u.min(v) as u32, u.max(v) as u32);
        *self.edges.entry(key).or_insert(0) += multiplicity;
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if u == v || u >= self.n || v >= self.n {
            return 0;
        }
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edges.get(&key).copied().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges
            .iter()
            .map(|(&(u, v), &m)| (u as usize, v as usize, m))
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|(&(a, b), _)| a as usize == v || b as usize == v)
            .map(|(_, &m)| m as u64)
            .sum()
    }

    fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for (&(u, v), &m) in &self.edges {
            deg[u as usize] += m as u64;
            deg[v as usize] += m as u64;
        }
        deg
    }

    /// Single edge on two vertices (K₂). Not a cycle: C₂ is the double edge.
    pub fn single_edge() -> Self {
        let mut g = MultiGraph::new(2);
        g.add_edge(0, 1, 1);
        g
    }

    /// One-vertex graph K₁.
    pub fn single_vertex() -> Self {
        MultiGraph::new(1)
    }

    /// Cyclic graph C_m. For m ≥ 3 a simple cycle; C₂ is realized as a
    /// double edge so that every vertex has degree 2 and the closed-form
    /// spectrum 4 sin²(πj/m) holds verbatim at m = 2.
    pub fn cycle(m: usize) -> Result<Self, GraphError> {
        if m < 2 {
            return Err(GraphError::InvalidParameter(format!(
                "cycle length must be at least 2, got {m}"
            )));
        }
        let mut g = MultiGraph::new(m);
        if m == 2 {
            g.add_edge(0, 1, 2);
        } else {
            for i in 0..m {
                g.add_edge(i, (i + 1) % m, 1);
            }
        }
        Ok(g)
    }

    /// Circulant graph C_n(s_1, …, s_k): vertex i adjacent to i ± s_j mod n.
    /// Jumps must satisfy 0 < s_1 < … < s_k < n/2.
    pub fn circulant(n: usize, jumps: &[u32]) -> Result<Self, GraphError> {
        validate_circulant(n, jumps)?;
        let mut g = MultiGraph::new(n);
        for &s in jumps {
            for i in 0..n {
                let j = (i + s as usize) % n;
                if i < j {
                    g.add_edge(i, j, 1);
                } else {
                    g.add_edge(j, i, 1);
                }
            }
        }
        Ok(g)
    }

    /// Cartesian product. Vertex (u, v) is indexed u·|V(h)| + v; edges
    /// change exactly one coordinate and inherit the multiplicity of the
    /// varying factor.
    pub fn cartesian_product(&self, h: &MultiGraph) -> MultiGraph {
        let nh = h.n;
        let mut g = MultiGraph::new(self.n * nh);
        for (u1, u2, m) in self.edges() {
            for v in 0..nh {
                g.add_edge(u1 * nh + v, u2 * nh + v, m);
            }
        }
        for (v1, v2, m) in h.edges() {
            for u in 0..self.n {
                g.add_edge(u * nh + v1, u * nh + v2, m);
            }
        }
        g
    }

    /// Discrete rectangular torus: left-associated iterated Cartesian
    /// product of cycles. Vertex count Π m_i, regularity 2p.
    pub fn torus(dims: &[u64]) -> Result<Self, GraphError> {
        if dims.is_empty() {
            return Err(GraphError::InvalidParameter(
                "torus shape must have at least one factor".to_string(),
            ));
        }
        let mut iter = dims.iter();
        let mut g = MultiGraph::cycle(*iter.next().unwrap() as usize)?;
        for &m in iter {
            g = g.cartesian_product(&MultiGraph::cycle(m as usize)?);
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adjacency = vec![Vec::new(); self.n];
        for (&(u, v), _) in &self.edges {
            adjacency[u as usize].push(v as usize);
            adjacency[v as usize].push(u as usize);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Laplacian matrix L = D − A.
    pub fn laplacian(&self) -> IntegerMatrix {
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for d in self.degrees().iter().enumerate() {
            entries[d.0 * n + d.0] = BigInt::from(*d.1);
        }
        for (&(u, v), &m) in &self.edges {
            let (u, v) = (u as usize, v as usize);
            entries[u * n + v] = BigInt::from(-(m as i64));
            entries[v * n + u] = BigInt::from(-(m as i64));
        }
        IntegerMatrix { n, entries }
    }

    /// Relabel vertices through a bijection `perm` (new index = perm[old]).
    pub fn relabeled(&self, perm: &[usize]) -> MultiGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = MultiGraph::new(self.n);
        for (u, v, m) in self.edges() {
            g.add_edge(perm[u], perm[v], m);
        }
        g
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[u64; 3]> = self
            .edges()
            .map(|(u, v, m)| [u as u64, v as u64, m as u64])
            .collect();
        serde_json::json!({ "n": self.n, "edges": edges })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, GraphError> {
        let parsed: GraphJson = serde_json::from_value(value.clone())
            .map_err(|e| GraphError::Malformed(e.to_string()))?;
        if parsed.n == 0 {
            return Err(GraphError::Malformed("graph needs vertices".to_string()));
        }
        let mut g = MultiGraph::new(parsed.n);
        for [u, v, m] in parsed.edges {
            let (u, v, m) = (u as usize, v as usize, m);
            if u >= parsed.n || v >= parsed.n {
                return Err(GraphError::Malformed(format!(
                    "edge endpoint out of range: [{u}, {v}]"
                )));
            }
            if u >= v {
                return Err(GraphError::Malformed(format!(
                    "edges must be listed with u < v, got [{u}, {v}]"
                )));
            }
            if g.multiplicity(u, v) != 0 {
                return Err(GraphError::Malformed(format!(
                    "duplicate edge entry for [{u}, {v}]"
                )));
            }
            let m = u32::try_from(m)
                .map_err(|_| GraphError::Malformed("edge multiplicity too large".to_string()))?;
            g.add_edge(u, v, m);
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[u64; 3]>,
}

/// Dense symmetric integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), n * n);
        IntegerMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].iter().sum())
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num::ToPrimitive;
        self.entries
            .iter()
            .map(|e| e.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

pub(crate) fn validate_circulant(n: usize, jumps: &[u32]) -> Result<(), GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "circulant needs n >= 3, got {n}"
        )));
    }
    if jumps.is_empty() {
        return Err(GraphError::InvalidParameter(
            "circulant needs at least one jump".to_string(),
        ));
    }
    for w in jumps.windows(2) {
        if w[0] >= w[1] {
            return Err(GraphError::InvalidParameter(format!(
                "jumps must be strictly increasing, got {jumps:?}"
            )));
        }
    }
    if jumps[0] == 0 || (jumps[jumps.len() - 1] as usize) * 2 >= n {
        return Err(GraphError::InvalidParameter(format!(
            "jumps must satisfy 0 < s < n/2, got {jumps:?} with n={n}"
        )));
    }
    Ok(())
}
