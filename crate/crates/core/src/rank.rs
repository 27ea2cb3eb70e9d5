//! Baker–Norine rank via the chip-removal recursion.
//!
//! `rank(D) >= r` holds iff `rank(D - v) >= r - 1` for every vertex `v`, with
//! winnability as the base case. Results are memoised on the reduced form at
//! vertex 0, which is the same for every divisor in a linear equivalence class.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::divisor::{is_winnable, reduce_in_place, Divisor};
use crate::error::Result;
use crate::graph::MultiGraph;

/// Rank oracle with a memo scoped to one graph.
pub struct RankOracle<'g> {
    g: &'g MultiGraph,
    genus: i64,
    memo: HashMap<(Vec<i64>, i64), bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCheck {
    pub holds: bool,
    /// An effective divisor `E` of the requested degree such that `D - E` is
    /// not winnable, when the check fails.
    pub counterexample: Option<Divisor>,
}

impl<'g> RankOracle<'g> {
    pub fn new(g: &'g MultiGraph) -> Self {
        RankOracle { g, genus: g.genus(), memo: HashMap::new() }
    }

    pub fn graph(&self) -> &'g MultiGraph {
        self.g
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn reduced_at(&self, chips: &[i64], v: usize) -> Vec<i64> {
        let mut c = chips.to_vec();
        reduce_in_place(self.g, &mut c, v, None);
        c
    }

    /// Chips left on `v` by the `v`-reduced representative. `D - k·v` is
    /// winnable exactly when this is at least `k`.
    fn chips_at_own_reduction(&self, chips: &[i64], v: usize) -> i64 {
        self.reduced_at(chips, v)[v]
    }

    pub fn is_winnable(&self, d: &Divisor) -> bool {
        is_winnable(self.g, d)
    }

    /// Whether `rank(d) >= r`.
    pub fn rank_at_least(&mut self, d: &Divisor, r: i64) -> bool {
        self.rank_at_least_chips(&d.chips, r)
    }

    fn rank_at_least_chips(&mut self, chips: &[i64], r: i64) -> bool {
        if r < 0 {
            return true;
        }
        let deg: i64 = chips.iter().sum();
        if deg < r {
            return false;
        }
        if r == 0 {
            return is_winnable(self.g, &Divisor::new(chips.to_vec()));
        }
        // a reduced divisor has at most genus chips away from its base vertex,
        // so anything of degree >= genus is winnable
        if deg - r >= self.genus {
            return true;
        }
        let key = self.reduced_at(chips, 0);
        if let Some(&hit) = self.memo.get(&(key.clone(), r)) {
            return hit;
        }
        let n = self.g.vertex_count();
        let mut holds = (0..n).all(|v| self.chips_at_own_reduction(&key, v) >= r);
        if holds && r > 1 {
            let mut child = key.clone();
            for v in 0..n {
                child[v] -= 1;
                let ok = self.rank_at_least_chips(&child, r - 1);
                child[v] += 1;
                if !ok {
                    holds = false;
                    break;
                }
            }
        }
        self.memo.insert((key, r), holds);
        holds
    }

    /// Baker–Norine rank, or -1 when `d` is not winnable.
    pub fn rank(&mut self, d: &Divisor) -> i64 {
        if !self.is_winnable(d) {
            return -1;
        }
        let mut r = (d.degree() - self.genus).max(0);
        while r < d.degree() && self.rank_at_least(d, r + 1) {
            r += 1;
        }
        r
    }

    /// Checks `rank(d) >= k` and on failure names the chips to steal.
    pub fn verify_rank_at_least(&mut self, d: &Divisor, k: i64) -> RankCheck {
        match self.witness(&d.chips, k) {
            None => RankCheck { holds: true, counterexample: None },
            Some(e) => RankCheck { holds: false, counterexample: Some(e) },
        }
    }

    fn witness(&mut self, chips: &[i64], r: i64) -> Option<Divisor> {
        let n = self.g.vertex_count();
        if self.rank_at_least_chips(chips, r) {
            return None;
        }
        let mut steal = Divisor::zero(n);
        if r <= 0 {
            return Some(steal);
        }
        let deg: i64 = chips.iter().sum();
        if deg < r {
            steal.chips[0] = r;
            return Some(steal);
        }
        for v in 0..n {
            if self.chips_at_own_reduction(chips, v) < r {
                steal.chips[v] = r;
                return Some(steal);
            }
        }
        let mut child = chips.to_vec();
        for v in 0..n {
            child[v] -= 1;
            if let Some(mut rest) = self.witness(&child, r - 1) {
                rest.chips[v] += 1;
                return Some(rest);
            }
            child[v] += 1;
        }
        unreachable!("rank check failed without a failing branch")
    }
}

/// Baker–Norine rank with a fresh memo.
pub fn rank(g: &MultiGraph, d: &Divisor) -> Result<i64> {
    let d = d.clone().checked_for(g)?;
    Ok(RankOracle::new(g).rank(&d))
}

/// Whether every theft of `k` chips from `d` can be recovered by firing.
pub fn verify_rank_at_least(g: &MultiGraph, d: &Divisor, k: i64) -> Result<RankCheck> {
    let d = d.clone().checked_for(g)?;
    Ok(RankOracle::new(g).verify_rank_at_least(&d, k))
}
