//! Divisors, set firing, Dhar's burning algorithm and v-reduction.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::vset::VertexSet;

/// Integer chip count per vertex. Carries no graph reference; every operation
/// takes the host graph explicitly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Divisor {
    pub chips: Vec<i64>,
}

impl Divisor {
    pub fn new(chips: Vec<i64>) -> Self {
        Divisor { chips }
    }

    pub fn zero(n: usize) -> Self {
        Divisor { chips: vec![0; n] }
    }

    pub fn constant(n: usize, c: i64) -> Self {
        Divisor { chips: vec![c; n] }
    }

    /// The divisor with one chip on `v`.
    pub fn unit(n: usize, v: usize) -> Self {
        let mut d = Self::zero(n);
        d.chips[v] = 1;
        d
    }

    pub fn len(&self) -> usize {
        self.chips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chips.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.chips.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.chips.iter().all(|&c| c >= 0)
    }

    /// All entries nonnegative, except possibly the one at `v`.
    pub fn is_effective_away_from(&self, v: Option<usize>) -> bool {
        self.chips
            .iter()
            .enumerate()
            .all(|(u, &c)| c >= 0 || Some(u) == v)
    }

    pub fn checked_for(self, g: &MultiGraph) -> Result<Self> {
        if self.len() != g.vertex_count() {
            return Err(Error::InvalidArguments(format!(
                "divisor has {} entries but the graph has {} vertices",
                self.len(),
                g.vertex_count()
            )));
        }
        Ok(self)
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Divisor{:?}", self.chips)
    }
}

impl std::ops::Sub for &Divisor {
    type Output = Divisor;

    fn sub(self, rhs: &Divisor) -> Divisor {
        Divisor::new(self.chips.iter().zip(&rhs.chips).map(|(a, b)| a - b).collect())
    }
}

impl std::ops::Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        Divisor::new(self.chips.iter().zip(&rhs.chips).map(|(a, b)| a + b).collect())
    }
}

/// Fires every vertex of `a` once, in place.
pub fn fire_set_in_place(g: &MultiGraph, chips: &mut [i64], a: VertexSet) {
    fire_set_times(g, chips, a, 1);
}

fn fire_set_times(g: &MultiGraph, chips: &mut [i64], a: VertexSet, times: i64) {
    for u in a.iter() {
        for &(w, m) in g.neighbors(u) {
            if !a.contains(w) {
                let moved = m as i64 * times;
                chips[u] -= moved;
                chips[w] += moved;
            }
        }
    }
}

/// Each vertex of `a` sends one chip along every edge leaving `a`.
pub fn fire_set(g: &MultiGraph, d: &Divisor, a: VertexSet) -> Divisor {
    let mut out = d.clone();
    fire_set_in_place(g, &mut out.chips, a);
    out
}

/// `L·x` for the graph Laplacian `L(u,u) = deg(u)`, `L(u,v) = -mult(u,v)`.
pub fn laplacian_apply(g: &MultiGraph, x: &[i64]) -> Vec<i64> {
    (0..g.vertex_count())
        .map(|u| {
            let mut s = g.degree(u) as i64 * x[u];
            for &(v, m) in g.neighbors(u) {
                s -= m as i64 * x[v];
            }
            s
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnReport {
    pub source: usize,
    pub burnt: VertexSet,
    pub unburnt: VertexSet,
    /// Number of burnt-neighbour edges at each vertex when the fire stopped.
    pub burning_edges: Vec<u32>,
}

/// Runs the burning process from `source` until no further vertex has more
/// burning incident edges than chips.
pub fn dhar_burn(g: &MultiGraph, d: &Divisor, source: usize) -> Result<BurnReport> {
    if source >= g.vertex_count() || d.len() != g.vertex_count() {
        return Err(Error::InvalidArguments("source or divisor does not match the graph".into()));
    }
    if !d.is_effective_away_from(Some(source)) {
        return Err(Error::Precondition(format!(
            "divisor must be effective away from the fire source {source}"
        )));
    }
    Ok(burn_unchecked(g, &d.chips, source))
}

pub(crate) fn burn_unchecked(g: &MultiGraph, chips: &[i64], source: usize) -> BurnReport {
    let n = g.vertex_count();
    let mut burning = vec![0u32; n];
    let mut burnt = VertexSet::singleton(source);
    let mut queue = VecDeque::from([source]);
    while let Some(w) = queue.pop_front() {
        for &(u, m) in g.neighbors(w) {
            if burnt.contains(u) {
                continue;
            }
            burning[u] += m;
            if burning[u] as i64 > chips[u] {
                burnt.insert(u);
                queue.push_back(u);
            }
        }
    }
    BurnReport { source, burnt, unburnt: burnt.complement(n), burning_edges: burning }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionResult {
    pub reduced: Divisor,
    /// Net firings per vertex with the base vertex normalised to zero, so that
    /// `reduced = input - L * firing_counts`.
    pub firing_counts: Vec<i64>,
}

/// The unique `v`-reduced divisor equivalent to `d`.
///
/// First clears all debt away from `v` by firing distance balls around `v`
/// (the deepest indebted vertex is served first), then repeatedly fires the
/// set left unburnt by a fire started at `v`.
pub fn v_reduce(g: &MultiGraph, d: &Divisor, v: usize) -> Result<ReductionResult> {
    if v >= g.vertex_count() || d.len() != g.vertex_count() {
        return Err(Error::InvalidArguments("base vertex or divisor does not match the graph".into()));
    }
    let mut chips = d.chips.clone();
    let mut fired = vec![0i64; g.vertex_count()];
    reduce_in_place(g, &mut chips, v, Some(&mut fired));
    let base = fired[v];
    fired.iter_mut().for_each(|x| *x -= base);
    Ok(ReductionResult { reduced: Divisor::new(chips), firing_counts: fired })
}

/// In-place reduction used by the search loops; optionally records firings.
pub(crate) fn reduce_in_place(g: &MultiGraph, chips: &mut [i64], v: usize, mut fired: Option<&mut Vec<i64>>) {
    let n = g.vertex_count();
    let record = |set: VertexSet, times: i64, fired: &mut Option<&mut Vec<i64>>| {
        if let Some(f) = fired.as_deref_mut() {
            for w in set.iter() {
                f[w] += times;
            }
        }
    };

    if (0..n).any(|u| u != v && chips[u] < 0) {
        let dist = g.bfs_distances(v);
        let max_dist = dist.iter().copied().max().unwrap_or(0);
        let mut balls = vec![VertexSet::EMPTY; max_dist + 1];
        for r in 1..=max_dist {
            balls[r] = (0..n).filter(|&w| dist[w] < r).collect();
        }
        loop {
            let target = (0..n)
                .filter(|&u| u != v && chips[u] < 0)
                .max_by(|&a, &b| dist[a].cmp(&dist[b]).then(b.cmp(&a)));
            let Some(u) = target else { break };
            let ball = balls[dist[u]];
            let gain = g.edges_into(u, ball) as i64;
            let times = (-chips[u] + gain - 1) / gain;
            fire_set_times(g, chips, ball, times);
            record(ball, times, &mut fired);
        }
    }

    loop {
        let report = burn_unchecked(g, chips, v);
        if report.unburnt.is_empty() {
            break;
        }
        fire_set_times(g, chips, report.unburnt, 1);
        record(report.unburnt, 1, &mut fired);
    }
}

/// Equivalent to an effective divisor. Decided at base vertex 0.
pub fn is_winnable(g: &MultiGraph, d: &Divisor) -> bool {
    if d.degree() < 0 {
        return false;
    }
    if d.is_effective() {
        return true;
    }
    let mut chips = d.chips.clone();
    reduce_in_place(g, &mut chips, 0, None);
    chips[0] >= 0
}

pub fn equivalent(g: &MultiGraph, d1: &Divisor, d2: &Divisor) -> bool {
    if d1.degree() != d2.degree() {
        return false;
    }
    let mut a = d1.chips.clone();
    let mut b = d2.chips.clone();
    reduce_in_place(g, &mut a, 0, None);
    reduce_in_place(g, &mut b, 0, None);
    a == b
}
