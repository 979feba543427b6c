//! Explicit zero-divisor graphs, built either from the level rule or
//! directly from ring multiplication.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::levels::adjacent_levels;
use crate::ring::{enumerate_zero_divisors, mindeg, multiply, RingElement, RingParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub label: RingElement,
    pub level: usize,
}

/// Simple undirected graph with vertices in enumeration order and sorted
/// adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInstance {
    params: RingParams,
    vertices: Vec<Vertex>,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl GraphInstance {
    pub(crate) fn from_adjacency(params: RingParams, vertices: Vec<Vertex>, adjacency: Vec<Vec<usize>>) -> Self {
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        debug_assert!(degree_sum % 2 == 0);
        Self {
            params,
            vertices,
            adjacency,
            edge_count: degree_sum / 2,
        }
    }

    pub fn params(&self) -> &RingParams {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// BFS hop counts from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Sizes of the connected components, in order of their smallest vertex.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut sizes = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            let mut size = 0;
            for (v, d) in self.bfs_distances(start).into_iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        sizes
    }

    /// All-pairs hop distances as a dense row-major matrix.
    pub fn distance_matrix(&self) -> Result<Vec<u32>> {
        let n = self.order();
        let mut out = Vec::with_capacity(n * n);
        for v in 0..n {
            let row = self.bfs_distances(v);
            if row.iter().any(Option::is_none) {
                let sizes = self.component_sizes();
                return Err(Error::Disconnected {
                    count: sizes.len(),
                    sizes,
                });
            }
            out.extend(row.into_iter().map(Option::unwrap));
        }
        Ok(out)
    }

    /// Largest BFS eccentricity.
    pub fn diameter(&self) -> Result<u64> {
        Ok(self.distance_matrix()?.into_iter().max().unwrap_or(0) as u64)
    }
}

fn labelled_vertices(params: &RingParams) -> Result<Vec<Vertex>> {
    enumerate_zero_divisors(params)?
        .into_iter()
        .map(|label| {
            let level = mindeg(&label)?;
            Ok(Vertex { label, level })
        })
        .collect()
}

/// Edges from the min-degree rule `i + j >= c`.
pub fn build_graph_by_rule(params: &RingParams) -> Result<GraphInstance> {
    let vertices = labelled_vertices(params)?;
    let levels = params.level_count();
    // Vertices are grouped by level; find each level's index range.
    let mut starts = vec![vertices.len(); levels + 2];
    for (v, vert) in vertices.iter().enumerate().rev() {
        starts[vert.level] = v;
    }
    starts[levels + 1] = vertices.len();
    for i in (1..=levels).rev() {
        starts[i] = starts[i].min(starts[i + 1]);
    }

    let mut adjacency = Vec::with_capacity(vertices.len());
    for (u, vert) in vertices.iter().enumerate() {
        let mut nbrs = Vec::new();
        for j in 1..=levels {
            if adjacent_levels(vert.level, j, params)? {
                nbrs.extend((starts[j]..starts[j + 1]).filter(|&w| w != u));
            }
        }
        adjacency.push(nbrs);
    }
    Ok(GraphInstance::from_adjacency(*params, vertices, adjacency))
}

/// Edges from `uv = 0` in the ring.
pub fn build_graph_by_ring(params: &RingParams) -> Result<GraphInstance> {
    let vertices = labelled_vertices(params)?;
    let n = vertices.len();
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for w in u + 1..n {
            if multiply(&vertices[u].label, &vertices[w].label, params)?.is_zero() {
                adjacency[u].push(w);
                adjacency[w].push(u);
            }
        }
    }
    Ok(GraphInstance::from_adjacency(*params, vertices, adjacency))
}
