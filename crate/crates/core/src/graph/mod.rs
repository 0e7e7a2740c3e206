//! Simple undirected graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`, so neighbourhood operations are
//! word-level bit operations. Graphs are immutable values: operations such
//! as [`Graph::complement`] or [`Graph::join`] return new graphs.

mod distance;
mod graph6;

pub use distance::DistanceTable;
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count (one machine word per adjacency row).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("graph is disconnected")]
    Disconnected,
}

/// Bit mask with the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Iterate the vertex ids present in `mask`.
#[inline]
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// An immutable simple undirected graph over vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let all = full_mask(n);
        let adj = (0..n).map(|i| all & !(1u64 << i)).collect();
        Ok(Graph { n, adj })
    }

    /// Build a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Build a graph from adjacency rows; the rows are symmetrized and
    /// diagonal bits are rejected.
    pub fn from_adjacency_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        check_order(n)?;
        let mask = full_mask(n);
        let mut adj = vec![0u64; n];
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row >> i & 1 == 1 {
                return Err(GraphError::Loop(i));
            }
            adj[i] |= row;
            for j in bits(row) {
                adj[j] |= 1 << i;
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Vertices reachable from `start`, as a mask.
    pub fn reachable_from(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0) == full_mask(self.n)
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reachable_from(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Number of connected components `w(G)`.
    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &r)| !r & all & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Join `self ∇ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(self.n);
        let right = full_mask(g.n) & !left;
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    /// Subgraph induced by the vertices in `subset`, relabeled `0..|S|` in
    /// increasing vertex order.
    pub fn induced_subgraph(&self, subset: u64) -> Result<Graph, GraphError> {
        let subset = subset & full_mask(self.n);
        if subset == 0 {
            return Err(GraphError::EmptySubset);
        }
        let verts: Vec<usize> = bits(subset).collect();
        let adj = verts
            .iter()
            .map(|&u| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(Graph {
            n: verts.len(),
            adj,
        })
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = 0u64;
            for v in bits(self.adj[u]) {
                row |= 1 << perm[v];
            }
            adj[perm[u]] = row;
        }
        Graph { n: self.n, adj }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Add a new vertex `n` adjacent to exactly the vertices in `nbrs`.
    pub fn extended(&self, nbrs: u64) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        check_order(n)?;
        let nbrs = nbrs & full_mask(self.n);
        let mut adj = self.adj.clone();
        for v in bits(nbrs) {
            adj[v] |= 1 << self.n;
        }
        adj.push(nbrs);
        Ok(Graph { n, adj })
    }

    /// All-pairs hop distances. Fails on disconnected graphs.
    pub fn distance_table(&self) -> Result<DistanceTable, GraphError> {
        DistanceTable::new(self)
    }

    /// Transmissions `Tr(v) = Σ_u d(v, u)`.
    pub fn transmissions(&self) -> Result<Vec<u64>, GraphError> {
        Ok(self.distance_table()?.transmissions())
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        Ok(self.distance_table()?.diameter())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    match n {
        0 => Err(GraphError::NoVertices),
        n if n > MAX_VERTICES => Err(GraphError::TooManyVertices(n)),
        _ => Ok(()),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", to_graph6(self), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn from_edges_builds_named_graphs() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
        let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let c5 = cycle(5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert_eq!(c5.edge_count(), 5);
    }

    #[test]
    fn from_edges_collapses_duplicates_and_rejects_bad_pairs() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::empty(0), Err(GraphError::NoVertices));
        assert_eq!(Graph::empty(65), Err(GraphError::TooManyVertices(65)));
    }

    #[test]
    fn connectivity() {
        assert!(path(4).is_connected());
        let k3_k1 = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!k3_k1.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(Graph::complete(64).unwrap().is_connected());
    }

    #[test]
    fn component_counts() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 3);
        let k33 = Graph::empty(3).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k33.complement().component_count(), 2);
        assert_eq!(cycle(7).component_count(), 1);
    }

    #[test]
    fn complement_of_complete_bipartite() {
        let k24 = Graph::empty(2).unwrap().join(&Graph::empty(4).unwrap()).unwrap();
        let expected = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(4).unwrap())
            .unwrap();
        assert_eq!(k24.complement(), expected);
        assert_eq!(k24.complement().complement(), k24);
    }

    #[test]
    fn join_counts_cross_edges() {
        let k2 = Graph::complete(2).unwrap();
        let e4 = Graph::empty(4).unwrap();
        let g = k2.join(&e4).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 9);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(2, 3));
        assert_eq!(
            g.complement(),
            k2.complement().disjoint_union(&e4.complement()).unwrap()
        );
    }

    #[test]
    fn join_respects_cap() {
        let a = Graph::empty(40).unwrap();
        assert_eq!(a.join(&a), Err(GraphError::TooManyVertices(80)));
    }

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let c5 = cycle(5);
        for start in 0..5 {
            let mask = (0..4).fold(0u64, |m, k| m | 1 << ((start + k) % 5));
            let sub = c5.induced_subgraph(mask).unwrap();
            assert_eq!(crate::enumerate::canonical_form(&sub).unwrap(),
                crate::enumerate::canonical_form(&path(4)).unwrap());
        }
        assert_eq!(c5.induced_subgraph(0), Err(GraphError::EmptySubset));
        assert_eq!(c5.induced_subgraph(0b1101).unwrap(), Graph::from_edges(3, [(1, 2)]).unwrap());
    }

    #[test]
    fn permute_and_extend() {
        let p3 = path(3);
        let q = p3.permute(&[1, 0, 2]);
        assert!(q.has_edge(1, 0) && q.has_edge(0, 2) && !q.has_edge(1, 2));
        let ext = p3.extended(0b101).unwrap();
        assert_eq!(ext, cycle(4));
        assert!(ext.without_edge(0, 3).unwrap().has_edge(0, 1));
        assert_eq!(p3.with_edge(0, 0), Err(GraphError::Loop(0)));
    }

    #[test]
    fn from_rows_symmetrizes() {
        let g = Graph::from_adjacency_rows(&[0b010, 0, 0b010]).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(Graph::from_adjacency_rows(&[0b1]), Err(GraphError::Loop(0)));
    }
}
