//! Scrambles on graphs: exact hitting numbers, minimum egg cuts, scramble
//! order, and the standard scramble families and avoidance sets on rook graphs.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use web_time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::flow::{BoundedFlow, FlowNetwork};
use crate::graph::{rook_graph, GraphJson, MultiGraph};
use crate::subsets::connected_subsets;
use crate::symmetry::{rook_symmetry, SetCanonizer, SymmetryGroup};
use crate::vset::{VertexSet, MAX_VERTICES};

/// Hosts above this size use the orbit search when the scramble is symmetric.
pub const ORBIT_SEARCH_MIN_VERTICES: usize = 16;

/// Largest host accepted by [`exhaustive_cut_bound_check`].
pub const EXHAUSTIVE_CUT_LIMIT: usize = 20;

/// A collection of eggs on a host graph, deduplicated and sorted by their
/// sorted vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scramble {
    host: MultiGraph,
    eggs: Vec<VertexSet>,
}

impl Scramble {
    /// Stores the eggs as given; see [`validate_scramble`] for the egg checks.
    pub fn new(host: MultiGraph, eggs: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let all = host.all();
        let mut eggs: Vec<VertexSet> = eggs.into_iter().collect();
        if let Some(bad) = eggs.iter().find(|e| !e.is_subset(all)) {
            return Err(Error::InvalidArguments(format!(
                "egg {bad:?} has vertices outside the host"
            )));
        }
        eggs.sort_by(|a, b| a.cmp_lex(*b));
        eggs.dedup();
        Ok(Scramble { host, eggs })
    }

    pub fn host(&self) -> &MultiGraph {
        &self.host
    }

    pub fn eggs(&self) -> &[VertexSet] {
        &self.eggs
    }

    /// SHA-256 of the JSON encoding; equal scrambles have equal digests.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(&ScrambleJson::from(self)).expect("scramble encodes");
        hex::encode(Sha256::digest(bytes))
    }
}

/// Host given either as a graph or as rook dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HostJson {
    Dims(Vec<usize>),
    Graph(GraphJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrambleJson {
    pub host: HostJson,
    pub eggs: Vec<Vec<usize>>,
}

impl From<&Scramble> for ScrambleJson {
    fn from(s: &Scramble) -> Self {
        let host = match s.host.dims() {
            Some(d) if s.host.is_rook() => HostJson::Dims(d.to_vec()),
            _ => HostJson::Graph(GraphJson::from(&s.host)),
        };
        ScrambleJson { host, eggs: s.eggs.iter().map(|e| e.to_vec()).collect() }
    }
}

impl TryFrom<ScrambleJson> for Scramble {
    type Error = Error;

    fn try_from(j: ScrambleJson) -> Result<Self> {
        let host = match j.host {
            HostJson::Dims(d) => rook_graph(&d)?,
            HostJson::Graph(g) => MultiGraph::try_from(g)?,
        };
        let n = host.vertex_count();
        let mut eggs = Vec::with_capacity(j.eggs.len());
        for egg in j.eggs {
            if let Some(&v) = egg.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidArguments(format!("egg vertex {v} out of range")));
            }
            eggs.push(egg.into_iter().collect());
        }
        Scramble::new(host, eggs)
    }
}

impl Serialize for Scramble {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScrambleJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scramble {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ScrambleJson::deserialize(d)?;
        Scramble::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EggViolation {
    Empty { index: usize },
    Disconnected { index: usize, egg: VertexSet },
}

/// Lists every empty or disconnected egg; an empty list means the scramble is valid.
pub fn validate_scramble(s: &Scramble) -> Vec<EggViolation> {
    s.eggs
        .iter()
        .enumerate()
        .filter_map(|(index, &egg)| {
            if egg.is_empty() {
                Some(EggViolation::Empty { index })
            } else if !s.host.is_connected_subset(egg) {
                Some(EggViolation::Disconnected { index, egg })
            } else {
                None
            }
        })
        .collect()
}

fn ensure_valid(s: &Scramble) -> Result<()> {
    match validate_scramble(s).first() {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!("invalid scramble: {v:?}"))),
    }
}

/// The rook symmetry group of the host when every generator maps the egg
/// collection onto itself.
pub fn scramble_symmetry(s: &Scramble) -> Option<SymmetryGroup> {
    if !s.host.is_rook() {
        return None;
    }
    let sym = rook_symmetry(s.host.dims()?).ok()?;
    let masks: HashSet<u64> = s.eggs.iter().map(|e| e.0).collect();
    let invariant = sym
        .generators
        .iter()
        .all(|p| s.eggs.iter().all(|e| masks.contains(&e.map(p).0)));
    invariant.then_some(sym)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    acc
}

/// Calls `f` on each `k`-subset of `items` until it returns true.
fn any_subset(items: &[usize], k: usize, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
    fn rec(items: &[usize], k: usize, acc: VertexSet, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if k == 0 {
            return f(acc);
        }
        if items.len() < k {
            return false;
        }
        rec(&items[1..], k - 1, acc.with(items[0]), f) || rec(&items[1..], k, acc, f)
    }
    rec(items, k, VertexSet::EMPTY, f)
}

/// Egg lookup structures shared by the solvers.
struct EggIndex {
    masks: HashSet<u64>,
    sizes: Vec<usize>,
    by_vertex: Vec<Vec<VertexSet>>,
}

impl EggIndex {
    fn new(s: &Scramble) -> Self {
        let mut by_vertex = vec![Vec::new(); s.host.vertex_count()];
        for &e in &s.eggs {
            for v in e.iter() {
                by_vertex[v].push(e);
            }
        }
        let mut sizes: Vec<usize> = s.eggs.iter().map(|e| e.len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        EggIndex { masks: s.eggs.iter().map(|e| e.0).collect(), sizes, by_vertex }
    }

    /// Whether `set` contains an egg through `v`, assuming `set - v` contains
    /// none. Eggs are connected, so only the component of `v` matters; the
    /// cheaper of subset lookup and egg scan is used.
    fn completes_egg(&self, g: &MultiGraph, set: VertexSet, v: usize) -> bool {
        let comp = component_of(g, set, v);
        let others: Vec<usize> = comp.iter().filter(|&w| w != v).collect();
        let lookups: u64 = self
            .sizes
            .iter()
            .map(|&k| if k >= 1 { binomial(others.len(), k - 1) } else { 0 })
            .fold(0, u64::saturating_add);
        if lookups <= self.by_vertex[v].len() as u64 {
            self.sizes.iter().any(|&k| {
                k >= 1
                    && k <= comp.len()
                    && any_subset(&others, k - 1, &mut |sub| self.masks.contains(&sub.with(v).0))
            })
        } else {
            self.by_vertex[v].iter().any(|e| e.is_subset(comp))
        }
    }
}

fn component_of(g: &MultiGraph, set: VertexSet, v: usize) -> VertexSet {
    let mut comp = VertexSet::singleton(v);
    let mut frontier = comp;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for w in frontier.iter() {
            next = next.union(g.neighbor_set(w));
        }
        frontier = next.intersection(set).difference(comp);
        comp = comp.union(frontier);
    }
    comp
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HittingMethod {
    /// Orbit search on large symmetric instances, branch-and-bound otherwise.
    Auto,
    BranchAndBound,
    /// Level-by-level search over orbit representatives of avoidance sets.
    /// Needs a verified symmetry of the scramble.
    OrbitSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingResult {
    pub hitting_number: u64,
    pub hitting_set: VertexSet,
    pub avoidance_set: VertexSet,
    pub method: HittingMethod,
}

/// Exact minimum hitting set, via a maximum avoidance set.
pub fn hitting_number(s: &Scramble) -> Result<HittingResult> {
    hitting_number_with(s, HittingMethod::Auto)
}

pub fn hitting_number_with(s: &Scramble, method: HittingMethod) -> Result<HittingResult> {
    ensure_valid(s)?;
    let n = s.host.vertex_count();
    let index = EggIndex::new(s);
    let canonizer = || scramble_symmetry(s).and_then(|sym| sym.set_canonizer().ok());
    let (avoid, method) = match method {
        HittingMethod::BranchAndBound => (max_avoidance_bnb(s), HittingMethod::BranchAndBound),
        HittingMethod::OrbitSearch => {
            let c = canonizer().ok_or_else(|| {
                Error::InvalidArguments("scramble has no verified symmetry for orbit search".into())
            })?;
            (max_avoidance_orbits(s, &c, &index), HittingMethod::OrbitSearch)
        }
        HittingMethod::Auto => match (n > ORBIT_SEARCH_MIN_VERTICES).then(canonizer).flatten() {
            Some(c) => (max_avoidance_orbits(s, &c, &index), HittingMethod::OrbitSearch),
            None => (max_avoidance_bnb(s), HittingMethod::BranchAndBound),
        },
    };
    Ok(HittingResult {
        hitting_number: (n - avoid.len()) as u64,
        hitting_set: avoid.complement(n),
        avoidance_set: avoid,
        method,
    })
}

/// Branch-and-bound over vertex inclusion. Vertices in many eggs are decided
/// first; a branch is cut when its size plus the undecided vertices that could
/// still be added cannot beat the incumbent.
fn max_avoidance_bnb(s: &Scramble) -> VertexSet {
    let n = s.host.vertex_count();
    let eggs = &s.eggs;
    let mut eggs_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in eggs.iter().enumerate() {
        for v in e.iter() {
            eggs_of[v].push(i);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(eggs_of[v].len()), v));
    let mut suffix = vec![VertexSet::EMPTY; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1].with(order[i]);
    }

    struct State<'a> {
        eggs: &'a [VertexSet],
        eggs_of: Vec<Vec<usize>>,
        order: Vec<usize>,
        suffix: Vec<VertexSet>,
        count: Vec<u32>,
        blocked: Vec<u32>,
        blocked_set: VertexSet,
        chosen: VertexSet,
        best: VertexSet,
    }

    impl State<'_> {
        fn block(&mut self, w: usize, delta: i32) {
            if delta > 0 {
                self.blocked[w] += 1;
                self.blocked_set.insert(w);
            } else {
                self.blocked[w] -= 1;
                if self.blocked[w] == 0 {
                    self.blocked_set.remove(w);
                }
            }
        }

        fn include(&mut self, v: usize, delta: i32) {
            for k in 0..self.eggs_of[v].len() {
                let e = self.eggs_of[v][k];
                let egg = self.eggs[e];
                if delta > 0 {
                    self.count[e] += 1;
                }
                if self.count[e] as usize + 1 == egg.len() {
                    // exactly one member of the egg is left out: it may not join
                    if let Some(w) = egg.difference(self.chosen).first() {
                        self.block(w, delta);
                    }
                }
                if delta < 0 {
                    self.count[e] -= 1;
                }
            }
        }

        fn search(&mut self, pos: usize) {
            let open = self.suffix[pos].difference(self.blocked_set);
            if self.chosen.len() + open.len() <= self.best.len() {
                return;
            }
            let Some(&v) = self.order.get(pos) else {
                self.best = self.chosen;
                return;
            };
            if !self.blocked_set.contains(v) {
                self.chosen.insert(v);
                self.include(v, 1);
                self.search(pos + 1);
                self.include(v, -1);
                self.chosen.remove(v);
            }
            self.search(pos + 1);
        }
    }

    let mut st = State {
        eggs,
        eggs_of,
        order,
        suffix,
        count: vec![0; eggs.len()],
        blocked: vec![0; n],
        blocked_set: VertexSet::EMPTY,
        chosen: VertexSet::EMPTY,
        best: VertexSet::EMPTY,
    };
    for e in eggs.iter().filter(|e| e.len() == 1) {
        st.block(e.first().unwrap(), 1);
    }
    st.search(0);
    st.best
}

/// Avoidance sets are closed under taking subsets, so the maximal ones are
/// reached by growing orbit representatives one vertex at a time.
fn max_avoidance_orbits(s: &Scramble, canon: &SetCanonizer, index: &EggIndex) -> VertexSet {
    let n = s.host.vertex_count();
    let mut level = vec![VertexSet::EMPTY];
    let mut best = VertexSet::EMPTY;
    loop {
        let mut next: BTreeMap<Vec<u128>, VertexSet> = BTreeMap::new();
        for &a in &level {
            for v in a.complement(n).iter() {
                let b = a.with(v);
                if !index.completes_egg(&s.host, b, v) {
                    next.entry(canon.code(b)).or_insert(b);
                }
            }
        }
        if next.is_empty() {
            return best;
        }
        level = next.into_values().collect();
        best = level[0];
        log::debug!("avoidance sets of size {}: {} orbits", best.len(), level.len());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub eggs: [VertexSet; 2],
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EggCutResult {
    /// `None` when no two eggs are disjoint (the minimum over no pairs is infinite).
    pub value: Option<u64>,
    pub witness: Option<CutWitness>,
}

/// Eggs that contain no other egg. Any egg cut separates a pair of these.
fn minimal_eggs(s: &Scramble, index: &EggIndex) -> Vec<VertexSet> {
    const LOOKUP_LIMIT: u64 = 4096;
    s.eggs
        .iter()
        .copied()
        .filter(|&e| {
            let smaller: Vec<usize> = index.sizes.iter().copied().filter(|&k| k < e.len()).collect();
            let lookups = smaller.iter().map(|&k| binomial(e.len(), k)).fold(0, u64::saturating_add);
            let contains_other = if lookups <= LOOKUP_LIMIT {
                let members = e.to_vec();
                smaller.iter().any(|&k| any_subset(&members, k, &mut |sub| index.masks.contains(&sub.0)))
            } else {
                s.eggs.iter().any(|&f| f != e && f.is_subset(e))
            };
            !contains_other
        })
        .collect()
}

/// Minimum over pairs of disjoint eggs of the minimum cut separating them.
///
/// Flows stop as soon as they reach the best value known so far. On symmetric
/// scrambles the first egg ranges over orbit representatives only.
pub fn min_egg_cut(s: &Scramble) -> Result<EggCutResult> {
    min_egg_cut_below(s, u64::MAX)
}

/// Like [`min_egg_cut`] but only reports cuts lighter than `limit`; a `None`
/// value then means every egg cut weighs at least `limit`.
pub fn min_egg_cut_below(s: &Scramble, limit: u64) -> Result<EggCutResult> {
    ensure_valid(s)?;
    let index = EggIndex::new(s);
    let eggs = minimal_eggs(s, &index);
    let canon = scramble_symmetry(s).and_then(|sym| sym.set_canonizer().ok());
    let firsts: Vec<usize> = match &canon {
        Some(c) => {
            let mut reps: BTreeMap<Vec<u128>, usize> = BTreeMap::new();
            for (i, &e) in eggs.iter().enumerate() {
                reps.entry(c.code(e)).or_insert(i);
            }
            let mut v: Vec<usize> = reps.into_values().collect();
            v.sort_unstable();
            v
        }
        None => (0..eggs.len()).collect(),
    };
    let symmetric = canon.is_some();
    // shared incumbent; ties are still computed exactly so the winner does
    // not depend on scheduling
    let incumbent = AtomicU64::new(limit.saturating_sub(1));
    let host = &s.host;
    let per_first: Vec<Option<(u64, usize, usize)>> = firsts
        .par_iter()
        .map_init(
            || FlowNetwork::new(host),
            |net, &i| {
                let e1 = eggs[i];
                let mut local: Option<(u64, usize)> = None;
                let start = if symmetric { 0 } else { i + 1 };
                for (j, &e2) in eggs.iter().enumerate().skip(start) {
                    if j == i || !e1.is_disjoint(e2) {
                        continue;
                    }
                    let cap = local
                        .map_or(u64::MAX, |(v, _)| v)
                        .min(incumbent.load(Ordering::Relaxed).saturating_add(1));
                    if let BoundedFlow::Exact(r) = net.min_cut_bounded(e1, e2, cap) {
                        local = Some((r.value, j));
                        incumbent.fetch_min(r.value, Ordering::Relaxed);
                    }
                }
                local.map(|(v, j)| (v, i, j))
            },
        )
        .collect();
    let Some((value, i, j)) = per_first.into_iter().flatten().min() else {
        return Ok(EggCutResult { value: None, witness: None });
    };
    let r = FlowNetwork::new(host).min_cut(eggs[i], eggs[j]);
    debug_assert_eq!(r.value, value);
    let n = host.vertex_count();
    Ok(EggCutResult {
        value: Some(value),
        witness: Some(CutWitness {
            eggs: [eggs[i], eggs[j]],
            side_a: r.source_side,
            side_b: r.source_side.complement(n),
        }),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub dims: Option<Vec<usize>>,
    pub vertex_count: usize,
    pub egg_count: usize,
    pub digest: String,
    pub hitting_number: u64,
    pub hitting_set: VertexSet,
    pub max_avoidance: VertexSet,
    /// `None` stands for infinity: no two eggs are disjoint.
    pub min_egg_cut: Option<u64>,
    pub cut_witness: Option<CutWitness>,
    pub order: u64,
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

/// Order of a scramble: the smaller of its hitting number and minimum egg cut.
pub fn scramble_order(s: &Scramble) -> Result<OrderReport> {
    let start = Instant::now();
    let hit = hitting_number(s)?;
    let cut = min_egg_cut(s)?;
    let order = cut.value.map_or(hit.hitting_number, |c| c.min(hit.hitting_number));
    Ok(OrderReport {
        dims: s.host.dims().map(|d| d.to_vec()),
        vertex_count: s.host.vertex_count(),
        egg_count: s.eggs.len(),
        digest: s.digest(),
        hitting_number: hit.hitting_number,
        hitting_set: hit.hitting_set,
        max_avoidance: hit.avoidance_set,
        min_egg_cut: cut.value,
        cut_witness: cut.witness,
        order,
        symmetric: scramble_symmetry(s).is_some(),
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// All connected `k`-subsets of `g` as eggs.
pub fn uniform_scramble(g: &MultiGraph, k: usize) -> Result<Scramble> {
    if k == 0 || k > g.vertex_count() {
        return Err(Error::InvalidArguments(format!(
            "egg size {k} must lie in 1..={}",
            g.vertex_count()
        )));
    }
    Scramble::new(g.clone(), connected_subsets(g, k))
}

fn check_grid(n: usize, m: usize) -> Result<()> {
    if n < 2 || n > m {
        return Err(Error::InvalidArguments(format!("need 2 <= n <= m, got n={n}, m={m}")));
    }
    if n * m > MAX_VERTICES {
        return Err(Error::InvalidSize(format!("{n}x{m} exceeds {MAX_VERTICES} vertices")));
    }
    Ok(())
}

/// All connected `(n-1)`-subsets of `K_n □ K_m`.
pub fn star_scramble(n: usize, m: usize) -> Result<Scramble> {
    check_grid(n, m)?;
    uniform_scramble(&rook_graph(&[n, m])?, n - 1)
}

/// Axis-aligned `2 × 2` squares of an `n × m` board.
fn squares(n: usize, m: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            for c1 in 0..m {
                for c2 in c1 + 1..m {
                    out.push([r1 * m + c1, r1 * m + c2, r2 * m + c1, r2 * m + c2].into_iter().collect());
                }
            }
        }
    }
    out
}

/// Experimental: the star scramble on `K_n □ K_m` plus every `2 × 2` square.
/// Only the `6 × 6` case is known to keep the egg cuts of the star scramble.
pub fn square_augmented_scramble(n: usize, m: usize) -> Result<Scramble> {
    let star = star_scramble(n, m)?;
    let mut eggs = star.eggs;
    eggs.extend(squares(n, m));
    Scramble::new(star.host, eggs)
}

/// The star scramble on `K_6 □ K_6` plus all 225 squares.
pub fn t_star_scramble() -> Scramble {
    square_augmented_scramble(6, 6).expect("6x6 is a valid board")
}

/// Avoidance set of size `m + 1` for the star scramble on `K_n □ K_m` when
/// `n - 1 <= m < (n-2)(n-1)`. Rows take `n - 2` vertices each in fresh columns;
/// the leftover columns are covered by one short row plus a vertex below it.
pub fn thm56_avoidance(n: usize, m: usize) -> Result<VertexSet> {
    if n < 4 || m + 1 < n || m >= (n - 2) * (n - 1) {
        return Err(Error::InvalidArguments(format!(
            "need n >= 4 and n-1 <= m < (n-2)(n-1), got n={n}, m={m}"
        )));
    }
    if n * m > MAX_VERTICES {
        return Err(Error::InvalidSize(format!("{n}x{m} exceeds {MAX_VERTICES} vertices")));
    }
    let at = |r: usize, c: usize| r * m + c;
    let (k, r) = (m / (n - 2), m % (n - 2));
    let mut set = VertexSet::EMPTY;
    let mut col = 0;
    if r >= 1 {
        for row in 0..k {
            for _ in 0..n - 2 {
                set.insert(at(row, col));
                col += 1;
            }
        }
        for c in col..m {
            set.insert(at(k, c));
        }
        set.insert(at(k + 1, m - 1));
    } else {
        for row in 0..k {
            let width = if row + 1 == k { n - 3 } else { n - 2 };
            for _ in 0..width {
                set.insert(at(row, col));
                col += 1;
            }
        }
        // exactly one column is still empty
        set.insert(at(k, col));
        set.insert(at(k + 1, col));
    }
    Ok(set)
}

/// The set `{(0,0,c)} ∪ {(0,c,0)} ∪ {(i,c,c) : i >= 1}` (with `c` ranging
/// over the stated coordinates, `c >= 1` in the first two parts) in
/// `K_n □ K_n □ K_n`. It has `n + 2` components of size `n - 1`.
pub fn set_a_avoidance(n: usize) -> Result<VertexSet> {
    if n < 3 {
        return Err(Error::InvalidArguments(format!("need n >= 3, got {n}")));
    }
    if n * n * n > MAX_VERTICES {
        return Err(Error::InvalidSize(format!("{n}^3 exceeds {MAX_VERTICES} vertices")));
    }
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut set = VertexSet::EMPTY;
    for c in 1..n {
        set.insert(at(0, 0, c));
        set.insert(at(0, c, 0));
    }
    for i in 1..n {
        for c in 0..n {
            set.insert(at(i, c, c));
        }
    }
    Ok(set)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutBoundReport {
    pub n: usize,
    pub m: usize,
    pub bound: u64,
    pub cuts_checked: u64,
    /// Lightest admissible cut seen and its weight.
    pub minimum: u64,
    pub minimum_side: VertexSet,
    /// First admissible cut lighter than the bound, if any.
    pub counterexample: Option<VertexSet>,
    /// Weight of the cut separating row 0 from the rest.
    pub row_cut_weight: u64,
}

impl CutBoundReport {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn cut_bound_setup(n: usize, m: usize) -> Result<(MultiGraph, u64, u64)> {
    check_grid(n, m)?;
    let g = rook_graph(&[n, m])?;
    let row: VertexSet = (0..m).collect();
    let bound = ((n - 1) * m) as u64;
    let row_cut = g.cut_weight(row);
    Ok((g, bound, row_cut))
}

/// Checks `|E(A, A^c)| >= (n-1)m` for every `A` with `|A|, |A^c| >= n - 1`
/// on `K_n □ K_m`, over all `2^{nm}` subsets.
pub fn exhaustive_cut_bound_check(n: usize, m: usize) -> Result<CutBoundReport> {
    if n * m > EXHAUSTIVE_CUT_LIMIT {
        return Err(Error::TooLarge(format!(
            "{n}x{m} has 2^{} cuts; the exhaustive check stops at {EXHAUSTIVE_CUT_LIMIT} vertices, use the sampled check instead",
            n * m
        )));
    }
    let (g, bound, row_cut_weight) = cut_bound_setup(n, m)?;
    let total = n * m;
    let mut report = CutBoundReport {
        n,
        m,
        bound,
        cuts_checked: 0,
        minimum: u64::MAX,
        minimum_side: VertexSet::EMPTY,
        counterexample: None,
        row_cut_weight,
    };
    for mask in 0u64..(1u64 << total) {
        let a = VertexSet(mask);
        let size = a.len();
        if size + 1 < n || total - size + 1 < n {
            continue;
        }
        report.cuts_checked += 1;
        let w = g.cut_weight(a);
        if w < report.minimum {
            report.minimum = w;
            report.minimum_side = a;
        }
        if w < bound && report.counterexample.is_none() {
            report.counterexample = Some(a);
        }
    }
    Ok(report)
}

/// Random version of [`exhaustive_cut_bound_check`] for boards too large to
/// enumerate: draws `samples` admissible sides from a seeded generator.
pub fn sampled_cut_bound_check(n: usize, m: usize, samples: u64, seed: u64) -> Result<CutBoundReport> {
    let (g, bound, row_cut_weight) = cut_bound_setup(n, m)?;
    let total = n * m;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CutBoundReport {
        n,
        m,
        bound,
        cuts_checked: 0,
        minimum: u64::MAX,
        minimum_side: VertexSet::EMPTY,
        counterexample: None,
        row_cut_weight,
    };
    while report.cuts_checked < samples {
        let size = rng.random_range(n - 1..=total - (n - 1));
        let mut vs: Vec<usize> = (0..total).collect();
        for i in 0..size {
            let j = rng.random_range(i..total);
            vs.swap(i, j);
        }
        let a: VertexSet = vs[..size].iter().copied().collect();
        report.cuts_checked += 1;
        let w = g.cut_weight(a);
        if w < report.minimum {
            report.minimum = w;
            report.minimum_side = a;
        }
        if w < bound && report.counterexample.is_none() {
            report.counterexample = Some(a);
        }
    }
    Ok(report)
}
