//! Slow, definition-level oracles used to check the library.
//!
//! None of these call the library's reduction, burning, rank, flow or search
//! code; they only read graph structure.

#![allow(dead_code)]

use rookgon::graph::MultiGraph;
use rookgon::VertexSet;

/// Winnability by the greedy borrowing algorithm: while some vertex is in
/// debt, it borrows one chip along each incident edge. Once every vertex has
/// borrowed, the divisor is not winnable.
pub fn greedy_winnable(g: &MultiGraph, chips: &[i64]) -> bool {
    let n = g.vertex_count();
    if chips.iter().sum::<i64>() < 0 {
        return false;
    }
    let mut d = chips.to_vec();
    let mut borrowed = vec![false; n];
    let mut count = 0;
    while let Some(v) = (0..n).find(|&v| d[v] < 0) {
        if !borrowed[v] {
            borrowed[v] = true;
            count += 1;
            if count == n {
                return false;
            }
        }
        for u in 0..n {
            let m = g.multiplicity(u, v) as i64;
            d[u] -= m;
            d[v] += m;
        }
    }
    true
}

/// All effective divisors of degree `deg` on `n` vertices.
pub fn effective(n: usize, deg: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut buf = vec![0; n];
    fn rec(i: usize, left: i64, buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i + 1 == buf.len() {
            buf[i] = left;
            out.push(buf.clone());
            return;
        }
        for c in 0..=left {
            buf[i] = c;
            rec(i + 1, left - c, buf, out);
        }
    }
    if n > 0 && deg >= 0 {
        rec(0, deg, &mut buf, &mut out);
    }
    out
}

/// `rank(d) >= r` straight from the definition: every theft of `r` chips
/// leaves a winnable divisor.
pub fn definitional_rank_at_least(g: &MultiGraph, chips: &[i64], r: i64) -> bool {
    if r < 0 {
        return true;
    }
    effective(chips.len(), r).iter().all(|e| {
        let rest: Vec<i64> = chips.iter().zip(e).map(|(a, b)| a - b).collect();
        greedy_winnable(g, &rest)
    })
}

pub fn definitional_rank(g: &MultiGraph, chips: &[i64]) -> i64 {
    let mut r = -1;
    while r < chips.iter().sum::<i64>() && definitional_rank_at_least(g, chips, r + 1) {
        r += 1;
    }
    r
}

/// Smallest degree of an effective divisor of rank at least `k`, by trying
/// every effective divisor.
pub fn brute_k_gonality(g: &MultiGraph, k: i64) -> i64 {
    let n = g.vertex_count();
    (k..)
        .find(|&d| effective(n, d).iter().any(|c| definitional_rank_at_least(g, c, k)))
        .unwrap()
}

/// `L x` computed from multiplicities.
pub fn laplacian(g: &MultiGraph, x: &[i64]) -> Vec<i64> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            (0..n)
                .map(|u| g.multiplicity(u, v) as i64 * (x[v] - x[u]))
                .sum()
        })
        .collect()
}

/// Whether some nonempty set avoiding `q` can fire without sending any of its
/// vertices into debt.
pub fn has_legal_firing_avoiding(g: &MultiGraph, chips: &[i64], q: usize) -> bool {
    let n = g.vertex_count();
    (1u64..(1 << n)).filter(|m| m & (1 << q) == 0).any(|m| {
        (0..n).filter(|&v| m & (1 << v) != 0).all(|v| {
            let out: i64 = (0..n)
                .filter(|&u| m & (1 << u) == 0)
                .map(|u| g.multiplicity(u, v) as i64)
                .sum();
            chips[v] >= out
        })
    })
}

/// Induced connectivity by depth-first search over a plain adjacency scan.
pub fn connected(g: &MultiGraph, s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let n = g.vertex_count();
    let start = s.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if s & (1 << u) != 0 && seen & (1 << u) == 0 && g.multiplicity(u, v) > 0 {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen == s
}

pub fn brute_connected_subsets(g: &MultiGraph, k: usize) -> Vec<u64> {
    let n = g.vertex_count();
    (0u64..(1 << n))
        .filter(|m| m.count_ones() as usize == k && connected(g, *m))
        .collect()
}

pub fn brute_cut(g: &MultiGraph, a: u64) -> u64 {
    let n = g.vertex_count();
    let mut w = 0;
    for u in 0..n {
        for v in 0..n {
            if a & (1 << u) != 0 && a & (1 << v) == 0 {
                w += g.multiplicity(u, v) as u64;
            }
        }
    }
    w
}

/// Minimum cut with `s` on one side and `t` on the other, over all sides.
pub fn brute_min_cut(g: &MultiGraph, s: u64, t: u64) -> u64 {
    let n = g.vertex_count();
    (0u64..(1 << n))
        .filter(|&a| a & s == s && a & t == 0)
        .map(|a| brute_cut(g, a))
        .min()
        .unwrap()
}

/// Smallest vertex set meeting every egg.
pub fn brute_hitting_number(n: usize, eggs: &[VertexSet]) -> usize {
    (0u64..(1 << n))
        .filter(|&h| eggs.iter().all(|e| e.0 & h != 0))
        .map(|h| h.count_ones() as usize)
        .min()
        .unwrap()
}

/// Lightest cut having a whole egg on each side; `None` when there is none.
pub fn brute_min_egg_cut(g: &MultiGraph, eggs: &[VertexSet]) -> Option<u64> {
    let n = g.vertex_count();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0u64..(1 << n))
        .filter(|&a| {
            let b = full & !a;
            eggs.iter().any(|e| e.0 & a == e.0) && eggs.iter().any(|e| e.0 & b == e.0)
        })
        .map(|a| brute_cut(g, a))
        .min()
}

/// Automorphisms by backtracking: vertices are mapped in order and every
/// partial map must preserve multiplicities among the mapped vertices.
pub fn automorphism_count(g: &MultiGraph) -> u64 {
    let n = g.vertex_count();
    fn rec(g: &MultiGraph, i: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let n = g.vertex_count();
        if i == n {
            return 1;
        }
        let mut total = 0;
        for img in 0..n {
            if used[img] || g.degree(img) != g.degree(i) {
                continue;
            }
            if (0..i).all(|j| g.multiplicity(i, j) == g.multiplicity(img, map[j])) {
                used[img] = true;
                map.push(img);
                total += rec(g, i + 1, map, used);
                map.pop();
                used[img] = false;
            }
        }
        total
    }
    rec(g, 0, &mut Vec::with_capacity(n), &mut vec![false; n])
}

/// All automorphisms, for small graphs.
pub fn automorphisms(g: &MultiGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    fn rec(g: &MultiGraph, i: usize, map: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = g.vertex_count();
        if i == n {
            out.push(map.clone());
            return;
        }
        for img in 0..n {
            if !used[img] && (0..i).all(|j| g.multiplicity(i, j) == g.multiplicity(img, map[j])) {
                used[img] = true;
                map.push(img);
                rec(g, i + 1, map, used, out);
                map.pop();
                used[img] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(g, 0, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Orbits of effective degree-`deg` divisors under a permutation group, by
/// Burnside: the average number of divisors fixed by a group element. A fixed
/// divisor is constant on cycles, so it is a choice of chips per cycle.
pub fn burnside_orbit_count(group: &[Vec<usize>], deg: i64) -> u64 {
    let total: u64 = group
        .iter()
        .map(|p| {
            let n = p.len();
            let mut seen = vec![false; n];
            let mut cycles = Vec::new();
            for s in 0..n {
                if !seen[s] {
                    let mut len = 0;
                    let mut v = s;
                    while !seen[v] {
                        seen[v] = true;
                        v = p[v];
                        len += 1;
                    }
                    cycles.push(len as i64);
                }
            }
            // ways to write deg as a sum of cycle lengths times nonnegative counts
            let mut ways = vec![0u64; deg as usize + 1];
            ways[0] = 1;
            for c in cycles {
                for t in c..=deg {
                    ways[t as usize] += ways[(t - c) as usize];
                }
            }
            ways[deg as usize]
        })
        .sum();
    total / group.len() as u64
}
