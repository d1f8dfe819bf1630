use std::collections::VecDeque;

use rayon::prelude::*;
use serde_json::json;

use super::FiniteGeomError;

/// Largest vertex count for which the all-pairs distance matrix is stored.
pub const DISTANCE_CAP: usize = 12_000;

const UNREACHED: u8 = u8::MAX;

/// An explicit simple graph with adjacency bitsets and all-pairs distances.
#[derive(Debug, Clone)]
pub struct FiniteGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    nbrs: Vec<Vec<u32>>,
    labels: Vec<String>,
    dist: Vec<u8>,
    diameter: usize,
}

impl FiniteGraph {
    /// Builds the graph and fills distances by BFS from every vertex.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<String>,
    ) -> Result<FiniteGraph, FiniteGeomError> {
        if n == 0 {
            return Err(FiniteGeomError::Invalid("empty graph".into()));
        }
        if n > DISTANCE_CAP {
            return Err(FiniteGeomError::SizeCap { n, cap: DISTANCE_CAP });
        }
        if labels.len() != n {
            return Err(FiniteGeomError::Invalid("one label per vertex required".into()));
        }
        let words = n.div_ceil(64);
        let mut adj = vec![0u64; n * words];
        let mut nbrs = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(FiniteGeomError::Invalid(format!("bad edge ({u}, {v})")));
            }
            if adj[u * words + v / 64] >> (v % 64) & 1 == 1 {
                continue;
            }
            adj[u * words + v / 64] |= 1 << (v % 64);
            adj[v * words + u / 64] |= 1 << (u % 64);
            nbrs[u].push(v as u32);
            nbrs[v].push(u as u32);
        }
        for l in nbrs.iter_mut() {
            l.sort_unstable();
        }
        let rows: Vec<Vec<u8>> = (0..n).into_par_iter().map(|s| bfs(&nbrs, s)).collect();
        let mut dist = Vec::with_capacity(n * n);
        for r in &rows {
            dist.extend_from_slice(r);
        }
        if dist.contains(&UNREACHED) {
            return Err(FiniteGeomError::Invalid("graph is not connected".into()));
        }
        let diameter = dist.iter().copied().max().unwrap_or(0) as usize;
        Ok(FiniteGraph {
            n,
            words,
            adj,
            nbrs,
            labels,
            dist,
            diameter,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `u` as a bitset.
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbours(&self, u: usize) -> &[u32] {
        &self.nbrs[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.nbrs[u].len()
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if (v as usize) > u {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Induced subgraph on `vertices` (kept in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Result<FiniteGraph, FiniteGeomError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.nbrs[v] {
                let j = index[w as usize];
                if j != usize::MAX && j > i {
                    edges.push((i, j));
                }
            }
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        FiniteGraph::from_edges(vertices.len(), &edges, labels)
    }

    /// One `"u v"` line per edge, 0-indexed.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(u, v)| [u, v]).collect();
        json!({ "n": self.n, "edges": edges, "labels": self.labels })
    }
}

fn bfs(nbrs: &[Vec<u32>], s: usize) -> Vec<u8> {
    let mut d = vec![UNREACHED; nbrs.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        let du = d[u];
        for &v in &nbrs[u] {
            let v = v as usize;
            if d[v] == UNREACHED {
                d[v] = du + 1;
                q.push_back(v);
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> FiniteGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        FiniteGraph::from_edges(n, &edges, (0..n).map(|i| i.to_string()).collect()).unwrap()
    }

    #[test]
    fn distances_and_export() {
        let g = cycle(6);
        assert_eq!(g.diameter(), 3);
        assert_eq!(g.dist(0, 3), 3);
        assert_eq!(g.dist(1, 5), 2);
        assert!(g.adjacent(0, 5));
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.to_edge_list().lines().next(), Some("0 1"));
        let j = g.to_json();
        assert_eq!(j["n"], 6);
        assert_eq!(j["edges"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn rejects_disconnected() {
        let r = FiniteGraph::from_edges(4, &[(0, 1), (2, 3)], vec![String::new(); 4]);
        assert!(r.is_err());
    }

    #[test]
    fn induced_path() {
        let g = cycle(6);
        let h = g.induced(&[0, 1, 2]).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.dist(0, 2), 2);
    }
}
