//! Loopless undirected multigraphs, complete/product/rook constructors,
//! connectivity and cut weights.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// Connected loopless multigraph on at most [`MAX_VERTICES`] vertices.
///
/// Multiplicities live in a dense symmetric matrix. Product graphs carry the
/// shape of their coordinate lattice in `dims`; vertex `v` then has the
/// row-major coordinates given by [`MultiGraph::coords`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    mult: Vec<u32>,
    adj: Vec<Vec<(usize, u32)>>,
    nbr: Vec<VertexSet>,
    degree: Vec<u32>,
    dims: Option<Vec<usize>>,
    simple: bool,
}

/// A bipartition of the vertex set into two nonempty sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl Cut {
    pub fn new(g: &MultiGraph, side_a: VertexSet) -> Result<Self> {
        let side_b = side_a.complement(g.vertex_count());
        if side_a.is_empty() || side_b.is_empty() || !side_a.is_subset(g.all()) {
            return Err(Error::InvalidArguments(
                "both sides of a cut must be nonempty subsets of the vertex set".into(),
            ));
        }
        Ok(Cut { side_a, side_b })
    }

    pub fn weight(&self, g: &MultiGraph) -> u64 {
        g.cut_weight(self.side_a)
    }
}

impl MultiGraph {
    /// Builds a graph from a dense multiplicity matrix, checking symmetry,
    /// the absence of loops and connectivity.
    pub fn from_matrix(n: usize, mult: Vec<u32>, dims: Option<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize("a graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidSize(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        if mult.len() != n * n {
            return Err(Error::InvalidGraph("multiplicity matrix has the wrong length".into()));
        }
        for u in 0..n {
            if mult[u * n + u] != 0 {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            for v in u + 1..n {
                if mult[u * n + v] != mult[v * n + u] {
                    return Err(Error::InvalidGraph(format!(
                        "asymmetric multiplicity between {u} and {v}"
                    )));
                }
            }
        }
        if let Some(d) = &dims {
            if d.is_empty() || d.iter().any(|&x| x == 0) || d.iter().product::<usize>() != n {
                return Err(Error::InvalidGraph(format!(
                    "dims {d:?} do not describe a lattice with {n} points"
                )));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut nbr = vec![VertexSet::EMPTY; n];
        let mut degree = vec![0u32; n];
        let mut simple = true;
        for u in 0..n {
            for v in 0..n {
                let m = mult[u * n + v];
                if m > 0 {
                    adj[u].push((v, m));
                    nbr[u].insert(v);
                    degree[u] += m;
                    simple &= m == 1;
                }
            }
        }
        let g = MultiGraph { n, mult, adj, nbr, degree, dims, simple };
        if !g.is_connected_subset(g.all()) {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }
        Ok(g)
    }

    /// Builds a graph from `(u, v, multiplicity)` triples. Repeated pairs add up.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)], dims: Option<Vec<usize>>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidSize(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut mult = vec![0u32; n * n];
        for &(u, v, m) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            mult[u * n + v] += m;
            mult[v * n + u] += m;
        }
        Self::from_matrix(n, mult, dims)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.degree[v]
    }

    /// Neighbours of `v` with edge multiplicities, in vertex order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, u32)] {
        &self.adj[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.nbr[v]
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Total edge count, with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.degree.iter().map(|&d| d as u64).sum::<u64>() / 2
    }

    /// First Betti number |E| - |V| + 1.
    pub fn genus(&self) -> i64 {
        self.edge_count() as i64 - self.n as i64 + 1
    }

    /// True when every multiplicity is 0 or 1.
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// Lattice shape for product graphs.
    pub fn dims(&self) -> Option<&[usize]> {
        self.dims.as_deref()
    }

    /// Row-major coordinates of `v` (last coordinate fastest).
    pub fn coords(&self, v: usize) -> Option<Vec<usize>> {
        self.dims.as_ref().map(|d| coords_of(d, v))
    }

    /// Inverse of [`MultiGraph::coords`].
    pub fn vertex_at(&self, coords: &[usize]) -> Option<usize> {
        let d = self.dims.as_ref()?;
        if coords.len() != d.len() || coords.iter().zip(d).any(|(c, n)| c >= n) {
            return None;
        }
        Some(index_of(d, coords))
    }

    /// True when the graph is exactly `rook_graph(dims)` for its own lattice labels.
    pub fn is_rook(&self) -> bool {
        match &self.dims {
            Some(d) if d.len() >= 2 && d.iter().all(|&x| x >= 2) => {
                rook_graph(d).map(|r| r.mult == self.mult).unwrap_or(false)
            }
            _ => false,
        }
    }

    /// Edges `(u, v, multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &(v, m) in &self.adj[u] {
                if u < v {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    /// True iff `s` is nonempty and induces a connected subgraph.
    pub fn is_connected_subset(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.nbr[v]);
            }
            frontier = next.intersection(s).difference(seen);
            seen = seen.union(frontier);
        }
        seen == s
    }

    /// Connected components of the subgraph induced by `s`, ordered by smallest member.
    pub fn components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.nbr[v]);
                }
                frontier = next.intersection(rest).difference(comp);
                comp = comp.union(frontier);
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Total multiplicity of edges with exactly one end in `a`.
    pub fn cut_weight(&self, a: VertexSet) -> u64 {
        let outside = a.complement(self.n);
        if self.simple {
            return a
                .iter()
                .map(|v| self.nbr[v].intersection(outside).len() as u64)
                .sum();
        }
        let mut w = 0u64;
        for u in a.iter() {
            for &(v, m) in &self.adj[u] {
                if outside.contains(v) {
                    w += m as u64;
                }
            }
        }
        w
    }

    /// Number of edges (with multiplicity) between `v` and the set `a`.
    #[inline]
    pub fn edges_into(&self, v: usize, a: VertexSet) -> u32 {
        if self.simple {
            return self.nbr[v].intersection(a).len() as u32;
        }
        self.adj[v]
            .iter()
            .filter(|(w, _)| a.contains(*w))
            .map(|&(_, m)| m)
            .sum()
    }

    /// Breadth-first distances from `source`.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Applies a vertex permutation and reports whether it preserves all multiplicities.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && (0..self.n).all(|u| {
                self.adj[u]
                    .iter()
                    .all(|&(v, m)| self.multiplicity(perm[u], perm[v]) == m)
            })
    }
}

pub(crate) fn coords_of(dims: &[usize], mut v: usize) -> Vec<usize> {
    let mut c = vec![0; dims.len()];
    for i in (0..dims.len()).rev() {
        c[i] = v % dims[i];
        v /= dims[i];
    }
    c
}

pub(crate) fn index_of(dims: &[usize], coords: &[usize]) -> usize {
    coords.iter().zip(dims).fold(0, |acc, (&c, &n)| acc * n + c)
}

/// The complete graph K_n.
pub fn complete_graph(n: usize) -> Result<MultiGraph> {
    if n == 0 {
        return Err(Error::InvalidSize("complete graph needs n >= 1".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::InvalidSize(format!("K_{n} exceeds {MAX_VERTICES} vertices")));
    }
    let mut mult = vec![1u32; n * n];
    for v in 0..n {
        mult[v * n + v] = 0;
    }
    MultiGraph::from_matrix(n, mult, Some(vec![n]))
}

/// Cartesian product with row-major vertex order: `(x, y)` has index `x * |h| + y`.
///
/// Lattice labels are concatenated when both factors carry them; otherwise the
/// factors' vertex indices serve as coordinates.
pub fn cartesian_product(g: &MultiGraph, h: &MultiGraph) -> Result<MultiGraph> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let n = ng * nh;
    if n > MAX_VERTICES {
        return Err(Error::InvalidSize(format!(
            "product has {n} vertices, more than {MAX_VERTICES}"
        )));
    }
    let mut mult = vec![0u32; n * n];
    for x in 0..ng {
        for y in 0..nh {
            let u = x * nh + y;
            for &(y2, m) in h.neighbors(y) {
                mult[u * n + x * nh + y2] = m;
            }
            for &(x2, m) in g.neighbors(x) {
                mult[u * n + x2 * nh + y] = m;
            }
        }
    }
    let dims = match (g.dims(), h.dims()) {
        (Some(a), Some(b)) => a.iter().chain(b).copied().collect(),
        _ => vec![ng, nh],
    };
    MultiGraph::from_matrix(n, mult, Some(dims))
}

/// K_{d1} □ K_{d2} □ ... with coordinate labels.
pub fn rook_graph(dims: &[usize]) -> Result<MultiGraph> {
    if dims.len() < 2 {
        return Err(Error::InvalidSize("a rook graph needs at least two factors".into()));
    }
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidSize(format!("rook factor K_{d} is too small (need >= 2)")));
    }
    let n: usize = dims.iter().product();
    if n > MAX_VERTICES {
        return Err(Error::InvalidSize(format!(
            "rook graph {dims:?} has {n} vertices, more than {MAX_VERTICES}"
        )));
    }
    let mut g = complete_graph(dims[0])?;
    for &d in &dims[1..] {
        g = cartesian_product(&g, &complete_graph(d)?)?;
    }
    Ok(g)
}

/// Graph interchange format: edges with `u < v`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertex_count: usize,
    pub edges: Vec<[u64; 3]>,
    pub dims: Option<Vec<usize>>,
}

impl From<&MultiGraph> for GraphJson {
    fn from(g: &MultiGraph) -> Self {
        GraphJson {
            vertex_count: g.vertex_count(),
            edges: g
                .edges()
                .into_iter()
                .map(|(u, v, m)| [u as u64, v as u64, m as u64])
                .collect(),
            dims: g.dims().map(|d| d.to_vec()),
        }
    }
}

impl TryFrom<GraphJson> for MultiGraph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        let n = j.vertex_count;
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidSize(format!("vertex_count {n} out of range")));
        }
        let mut mult = vec![0u32; n * n];
        for &[u, v, m] in &j.edges {
            let (u, v) = (u as usize, v as usize);
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u > v {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) must have u < v")));
            }
            if m == 0 || m > u32::MAX as u64 {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) has multiplicity {m}")));
            }
            if mult[u * n + v] != 0 {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) listed twice")));
            }
            mult[u * n + v] = m as u32;
            mult[v * n + u] = m as u32;
        }
        MultiGraph::from_matrix(n, mult, j.dims)
    }
}

impl Serialize for MultiGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        MultiGraph::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(3).unwrap().edge_count(), 3);
        let k5 = complete_graph(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!((0..5).all(|v| k5.degree(v) == 4));
        assert!(matches!(complete_graph(0), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn products() {
        let k2 = complete_graph(2).unwrap();
        let k3 = complete_graph(3).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));
        let p = cartesian_product(&k2, &k3).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (6, 9));
        assert!((0..6).all(|v| p.degree(v) == 3));
        let q = cartesian_product(&k3, &k3).unwrap();
        assert_eq!((q.vertex_count(), q.edge_count()), (9, 18));
        assert_eq!(q.dims(), Some(&[3, 3][..]));
        assert_eq!(q, rook_graph(&[3, 3]).unwrap());
    }

    #[test]
    fn rook_degrees_and_errors() {
        for (dims, n, deg) in [(vec![4, 4], 16, 6), (vec![2, 2, 2], 8, 3), (vec![3, 3, 3], 27, 6)] {
            let g = rook_graph(&dims).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert!((0..n).all(|v| g.degree(v) == deg));
            assert!(g.is_rook());
        }
        assert!(rook_graph(&[4]).is_err());
        assert!(rook_graph(&[1, 3]).is_err());
        assert!(rook_graph(&[5, 5, 5]).is_err());
    }

    #[test]
    fn coordinates_are_row_major() {
        let g = rook_graph(&[2, 3, 4]).unwrap();
        assert_eq!(g.coords(0).unwrap(), vec![0, 0, 0]);
        assert_eq!(g.coords(1).unwrap(), vec![0, 0, 1]);
        assert_eq!(g.coords(4).unwrap(), vec![0, 1, 0]);
        assert_eq!(g.vertex_at(&[1, 2, 3]), Some(23));
    }

    #[test]
    fn connected_subsets_on_small_graphs() {
        let c4 = rook_graph(&[2, 2]).unwrap();
        // 4-cycle order: 0-1, 0-2, 1-3, 2-3; opposite corners are 0 and 3.
        assert!(!c4.is_connected_subset(set(&[0, 3])));
        assert!(c4.is_connected_subset(set(&[0])));
        assert!(!c4.is_connected_subset(VertexSet::EMPTY));
    }

    #[test]
    fn figure_avoidance_set_on_4x4_splits_in_three() {
        let g = rook_graph(&[4, 4]).unwrap();
        // rows from the top: (0,0),(0,1) | (1,2) | (2,3),(3,3)
        let s: VertexSet = [(0, 0), (0, 1), (1, 2), (2, 3), (3, 3)]
            .iter()
            .map(|&(r, c)| g.vertex_at(&[r, c]).unwrap())
            .collect();
        assert!(!g.is_connected_subset(s));
        assert_eq!(g.components(s).len(), 3);
    }

    #[test]
    fn cut_weights() {
        let g = rook_graph(&[3, 3]).unwrap();
        assert_eq!(g.cut_weight(VertexSet::EMPTY), 0);
        assert_eq!(g.cut_weight(g.all()), 0);
        let column: VertexSet = (0..3).map(|r| g.vertex_at(&[r, 0]).unwrap()).collect();
        assert_eq!(g.cut_weight(column), 6);
        let g = rook_graph(&[4, 4]).unwrap();
        let row: VertexSet = (0..4).map(|c| g.vertex_at(&[0, c]).unwrap()).collect();
        assert_eq!(g.cut_weight(row), 12);
    }

    #[test]
    fn loader_rejects_bad_input() {
        let disconnected = GraphJson { vertex_count: 3, edges: vec![[0, 1, 1]], dims: None };
        assert!(MultiGraph::try_from(disconnected).is_err());
        let loop_edge = GraphJson { vertex_count: 2, edges: vec![[0, 0, 1], [0, 1, 1]], dims: None };
        assert!(MultiGraph::try_from(loop_edge).is_err());
        let reversed = GraphJson { vertex_count: 2, edges: vec![[1, 0, 1]], dims: None };
        assert!(MultiGraph::try_from(reversed).is_err());
        let asym = vec![0, 1, 2, 0];
        assert!(MultiGraph::from_matrix(2, asym, None).is_err());
    }

    #[test]
    fn json_round_trip_keeps_multiplicities() {
        let g = MultiGraph::from_edges(3, &[(0, 1, 2), (1, 2, 1)], None).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"vertex_count":3,"edges":[[0,1,2],[1,2,1]],"dims":null}"#);
        let back: MultiGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(!back.is_simple());
        assert_eq!(back.cut_weight(VertexSet::singleton(0)), 2);
    }
}
