use crate::graph::MultiGraph;
use crate::vset::VertexSet;

/// Streams every connected `k`-subset of `g` exactly once.
///
/// Each set is generated from its smallest vertex (the anchor). A partial set
/// is only extended by vertices above the anchor that are exclusive
/// neighbours of the most recently added vertex, so no set is produced twice
/// and no unconnected candidate is ever materialised.
pub fn connected_subsets(g: &MultiGraph, k: usize) -> ConnectedSubsets<'_> {
    ConnectedSubsets { g, k, anchor: 0, stack: Vec::new() }
}

pub struct ConnectedSubsets<'g> {
    g: &'g MultiGraph,
    k: usize,
    anchor: usize,
    stack: Vec<Frame>,
}

struct Frame {
    sub: VertexSet,
    ext: VertexSet,
    /// `sub` together with all of its neighbours.
    closed: VertexSet,
}

/// Members strictly greater than `anchor`.
fn above(anchor: usize, s: VertexSet) -> VertexSet {
    let low = if anchor >= 63 { u64::MAX } else { (2u64 << anchor) - 1 };
    VertexSet(s.0 & !low)
}

impl Iterator for ConnectedSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.g.vertex_count();
        if self.k == 0 || self.k > n {
            return None;
        }
        loop {
            if self.stack.is_empty() {
                if self.anchor >= n {
                    return None;
                }
                let v = self.anchor;
                let nb = self.g.neighbor_set(v);
                self.stack.push(Frame {
                    sub: VertexSet::singleton(v),
                    ext: above(v, nb),
                    closed: nb.with(v),
                });
            }
            let anchor = self.anchor;
            let top = self.stack.last_mut().unwrap();
            if top.sub.len() == self.k {
                let out = top.sub;
                self.stack.pop();
                if self.stack.is_empty() {
                    self.anchor += 1;
                }
                return Some(out);
            }
            let Some(w) = top.ext.first() else {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.anchor += 1;
                }
                continue;
            };
            top.ext.remove(w);
            let nw = self.g.neighbor_set(w);
            let exclusive = nw.difference(top.closed);
            let child = Frame {
                sub: top.sub.with(w),
                ext: top.ext.union(above(anchor, exclusive)),
                closed: top.closed.union(nw),
            };
            self.stack.push(child);
        }
    }
}
