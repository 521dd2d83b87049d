//! Planar multigraphs and the combinatorial quantities consumed by the
//! coefficient formulas: spanning simple graph, edge multiplicities,
//! component counts, triangles, adjacency traces.

use std::collections::BTreeMap;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};

/// Disjoint-set forest with union by size and path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two elements were in different sets.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let mut xr = self.find(x);
        let mut yr = self.find(y);
        if xr == yr {
            return false;
        }
        if self.size[xr] < self.size[yr] {
            std::mem::swap(&mut xr, &mut yr);
        }
        self.parent[yr] = xr;
        self.size[xr] += self.size[yr];
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// An edge of a multigraph. Loops (`u == v`) are allowed; checkerboard
/// graphs additionally carry a sign per edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Option<i8>,
}

impl Edge {
    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Multigraph on vertices `0..vertex_count` with an edge multiset.
/// Edge list order is irrelevant to every derived quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(
        vertex_count: usize,
        edges: I,
    ) -> Self {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.add_signed_edge(u, v, None);
    }

    pub fn add_signed_edge(&mut self, u: usize, v: usize, sign: Option<i8>) {
        assert!(
            u < self.vertex_count && v < self.vertex_count,
            "edge endpoint out of range"
        );
        self.edges.push(Edge { u, v, sign });
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.u == e.v).count()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.u == e.v)
    }

    /// Signs of all edges, if every edge carries one and they all agree.
    pub fn uniform_sign(&self) -> Option<i8> {
        let mut signs = self.edges.iter().map(|e| e.sign);
        let first = signs.next()??;
        for s in signs {
            if s? != first {
                return None;
            }
        }
        Some(first)
    }

    /// Number of components of the spanning subgraph using the given edge
    /// indices (all vertices are kept).
    pub fn component_count<I: IntoIterator<Item = usize>>(&self, edge_subset: I) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for idx in edge_subset {
            let e = &self.edges[idx];
            uf.union(e.u, e.v);
        }
        uf.components()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.component_count(0..self.edges.len()) == 1
    }

    pub fn delete_edge(&self, idx: usize) -> Result<Multigraph> {
        if idx >= self.edges.len() {
            return Err(Error::EdgeNotFound(idx));
        }
        let mut g = self.clone();
        g.edges.remove(idx);
        Ok(g)
    }

    /// Contract the edge, merging its endpoints. Parallel copies become
    /// loops. Vertex ids are renumbered by order-preserving compaction, so
    /// the result is deterministic.
    pub fn contract_edge(&self, idx: usize) -> Result<Multigraph> {
        let e = *self.edges.get(idx).ok_or(Error::EdgeNotFound(idx))?;
        if e.u == e.v {
            return Err(Error::ContractLoop);
        }
        let keep = e.u.min(e.v);
        let gone = e.u.max(e.v);
        let remap = |w: usize| -> usize {
            let w = if w == gone { keep } else { w };
            if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut g = Multigraph::new(self.vertex_count - 1);
        for (i, edge) in self.edges.iter().enumerate() {
            if i == idx {
                continue;
            }
            g.edges.push(Edge {
                u: remap(edge.u),
                v: remap(edge.v),
                sign: edge.sign,
            });
        }
        Ok(g)
    }

    /// Collapse parallel edge classes into the spanning simple graph with
    /// recorded multiplicities. Loops are tracked separately and excluded
    /// from the base.
    pub fn simplify(&self) -> SimplifiedGraph {
        let mut multiplicity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut loop_count = 0;
        for e in &self.edges {
            if e.u == e.v {
                loop_count += 1;
            } else {
                *multiplicity.entry(e.key()).or_insert(0) += 1;
            }
        }
        SimplifiedGraph {
            vertex_count: self.vertex_count,
            multiplicity,
            loop_count,
        }
    }

    /// Edge list as `u-v` lines, sorted; used for debug fixtures.
    pub fn edge_list_text(&self) -> String {
        let mut keys: Vec<(usize, usize)> = self.edges.iter().map(|e| e.key()).collect();
        keys.sort_unstable();
        keys.iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Stable encoding of the labeled edge multiset, used as a memo key by
    /// the Tutte recursion.
    pub fn structure_key(&self) -> (usize, Vec<(usize, usize)>) {
        let mut keys: Vec<(usize, usize)> = self.edges.iter().map(|e| e.key()).collect();
        keys.sort_unstable();
        (self.vertex_count, keys)
    }

    fn same_structure(&self, other: &Multigraph) -> bool {
        self.structure_key() == other.structure_key()
    }
}

/// The other checkerboard graph of the diagram `g` came from.
pub fn dual(g: &Multigraph, d: &PlanarDiagram) -> Result<Multigraph> {
    let (first, second) = d.checkerboard_graphs();
    if g.same_structure(&first) {
        Ok(second)
    } else if g.same_structure(&second) {
        Ok(first)
    } else {
        Err(Error::NotCheckerboard)
    }
}

/// Spanning simple graph of a multigraph: parallel classes collapsed, each
/// base edge carrying its multiplicity; loops counted but excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifiedGraph {
    vertex_count: usize,
    multiplicity: BTreeMap<(usize, usize), usize>,
    loop_count: usize,
}

impl SimplifiedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn base_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicity.keys().copied()
    }

    pub fn base_edge_count(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn loop_count(&self) -> usize {
        self.loop_count
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.multiplicity.get(&key).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.multiplicity.iter().map(|(&k, &m)| (k, m))
    }

    /// `n(j)`: number of base edges with multiplicity at least `j`.
    /// `n(1)` is the number of base edges.
    pub fn n_count(&self, j: usize) -> usize {
        assert!(j >= 1, "n(j) is defined for j >= 1");
        self.multiplicity.values().filter(|&&m| m >= j).count()
    }

    fn neighbor_bitsets(&self) -> Vec<u64> {
        assert!(
            self.vertex_count <= 64,
            "adjacency bitsets support up to 64 vertices"
        );
        let mut adj = vec![0u64; self.vertex_count];
        for &(u, v) in self.multiplicity.keys() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// Number of 3-cliques in the base simple graph.
    pub fn triangle_count(&self) -> usize {
        let adj = self.neighbor_bitsets();
        let mut count = 0;
        for &(u, v) in self.multiplicity.keys() {
            let (lo, hi) = (u.min(v), u.max(v));
            // common neighbors above `hi` so each triangle is counted once
            let common = adj[lo] & adj[hi] & !((1u64 << (hi + 1)) - 1);
            count += common.count_ones() as usize;
        }
        count
    }

    /// `(trace A~^2, trace A~^3, n(2))` for the 0/1 base adjacency matrix.
    pub fn adjacency_traces(&self) -> (usize, usize, usize) {
        // trace A~^2 counts closed walks of length 2 (twice the edges);
        // trace A~^3 counts closed walks of length 3 (six times the triangles).
        let trace2 = 2 * self.base_edge_count();
        let trace3 = 6 * self.triangle_count();
        (trace2, trace3, self.n_count(2))
    }
}
