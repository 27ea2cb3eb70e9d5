//! Minimum cuts between vertex sets via augmenting-path max flow.
//!
//! Every parallel edge contributes one unit of capacity in each direction.
//! The source set and the sink set act as contracted terminals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowResult {
    pub value: u64,
    /// Vertices reachable from the source set in the final residual graph.
    pub source_side: VertexSet,
}

/// Outcome of a flow computation that may stop at a caller-given limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundedFlow {
    /// The exact minimum cut.
    Exact(FlowResult),
    /// The flow reached the limit; the minimum cut is at least that large.
    AtLeast(u64),
}

/// Reusable residual network over a fixed graph.
///
/// Residual capacities live in a dense matrix next to a bitmask of arcs with
/// spare capacity per vertex, so breadth-first search works a word at a time.
pub struct FlowNetwork<'g> {
    g: &'g MultiGraph,
    base_cap: Vec<u32>,
    base_res: Vec<u64>,
    cap: Vec<u32>,
    res: Vec<u64>,
    parent: Vec<usize>,
}

impl<'g> FlowNetwork<'g> {
    pub fn new(g: &'g MultiGraph) -> Self {
        let n = g.vertex_count();
        let base_cap: Vec<u32> = (0..n * n).map(|i| g.multiplicity(i / n, i % n)).collect();
        let base_res: Vec<u64> = (0..n).map(|u| g.neighbor_set(u).0).collect();
        FlowNetwork {
            g,
            cap: base_cap.clone(),
            res: base_res.clone(),
            base_cap,
            base_res,
            parent: vec![usize::MAX; n],
        }
    }

    fn reset(&mut self) {
        self.cap.copy_from_slice(&self.base_cap);
        self.res.copy_from_slice(&self.base_res);
    }

    /// Min cut separating `s` from `t`, abandoning the computation once the
    /// flow value reaches `limit`.
    pub fn min_cut_bounded(&mut self, s: VertexSet, t: VertexSet, limit: u64) -> BoundedFlow {
        let n = self.g.vertex_count();
        self.reset();
        let mut value = 0u64;
        loop {
            if value >= limit {
                return BoundedFlow::AtLeast(value);
            }
            // layered multi-source search; each vertex is expanded once
            let mut visited = s.0;
            let mut frontier = s.0;
            let mut reached = None;
            'bfs: while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    let mut fresh = self.res[u] & !visited;
                    visited |= fresh;
                    next |= fresh;
                    while fresh != 0 {
                        let v = fresh.trailing_zeros() as usize;
                        fresh &= fresh - 1;
                        self.parent[v] = u;
                        if t.contains(v) {
                            reached = Some(v);
                            break 'bfs;
                        }
                    }
                }
                frontier = next;
            }
            let Some(end) = reached else {
                return BoundedFlow::Exact(FlowResult { value, source_side: VertexSet(visited) });
            };
            let mut bottleneck = u32::MAX;
            let mut v = end;
            while !s.contains(v) {
                let u = self.parent[v];
                bottleneck = bottleneck.min(self.cap[u * n + v]);
                v = u;
            }
            let mut v = end;
            while !s.contains(v) {
                let u = self.parent[v];
                self.cap[u * n + v] -= bottleneck;
                if self.cap[u * n + v] == 0 {
                    self.res[u] &= !(1u64 << v);
                }
                self.cap[v * n + u] += bottleneck;
                self.res[v] |= 1u64 << u;
                v = u;
            }
            value += bottleneck as u64;
        }
    }

    pub fn min_cut(&mut self, s: VertexSet, t: VertexSet) -> FlowResult {
        match self.min_cut_bounded(s, t, u64::MAX) {
            BoundedFlow::Exact(r) => r,
            BoundedFlow::AtLeast(_) => unreachable!("unbounded flow cannot hit its limit"),
        }
    }
}

/// Minimum total multiplicity of a cut `(X, Y)` with `s ⊆ X` and `t ⊆ Y`.
///
/// The returned source side is the minimal one: exactly the vertices reachable
/// from `s` in the residual graph of a maximum flow.
pub fn min_cut_between(g: &MultiGraph, s: VertexSet, t: VertexSet) -> Result<FlowResult> {
    if s.is_empty() || t.is_empty() {
        return Err(Error::InvalidArguments("source and sink sets must be nonempty".into()));
    }
    if !s.is_disjoint(t) {
        return Err(Error::InvalidArguments("source and sink sets overlap".into()));
    }
    if !s.union(t).is_subset(g.all()) {
        return Err(Error::InvalidArguments("terminal sets contain unknown vertices".into()));
    }
    Ok(FlowNetwork::new(g).min_cut(s, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::rook_graph;

    #[test]
    fn four_cycle_opposite_corners() {
        let g = MultiGraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], None).unwrap();
        let r = min_cut_between(&g, VertexSet::singleton(0), VertexSet::singleton(2)).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(g.cut_weight(r.source_side), 2);
        assert_eq!(r.source_side, VertexSet::singleton(0));
    }

    #[test]
    fn parallel_edges_are_capacity() {
        let g = MultiGraph::from_edges(3, &[(0, 1, 3), (1, 2, 2)], None).unwrap();
        let r = min_cut_between(&g, VertexSet::singleton(0), VertexSet::singleton(2)).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.source_side.to_vec(), vec![0, 1]);
    }

    #[test]
    fn rejects_overlap() {
        let g = rook_graph(&[2, 2]).unwrap();
        let s: VertexSet = [0, 1].into_iter().collect();
        assert!(min_cut_between(&g, s, VertexSet::singleton(1)).is_err());
        assert!(min_cut_between(&g, VertexSet::EMPTY, VertexSet::singleton(1)).is_err());
    }

    #[test]
    fn k2_by_m_singletons() {
        for m in 2..=6 {
            let g = rook_graph(&[2, m]).unwrap();
            let n = g.vertex_count();
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        let r = min_cut_between(&g, VertexSet::singleton(a), VertexSet::singleton(b))
                            .unwrap();
                        assert_eq!(r.value, m as u64);
                    }
                }
            }
        }
    }

    #[test]
    fn bounded_flow_stops_early() {
        let g = rook_graph(&[4, 4]).unwrap();
        let mut net = FlowNetwork::new(&g);
        let s = VertexSet::singleton(0);
        let t = VertexSet::singleton(15);
        assert_eq!(net.min_cut_bounded(s, t, 3), BoundedFlow::AtLeast(3));
        assert!(matches!(net.min_cut_bounded(s, t, 100), BoundedFlow::Exact(r) if r.value == 6));
    }
}
