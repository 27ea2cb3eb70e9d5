//! Degree-ascending gonality and k-gonality search with orbit pruning, and
//! certificate divisors for rook graphs.

use web_time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::rank::RankOracle;
use crate::symmetry::SymmetryGroup;

#[derive(Clone, Debug, Default)]
pub struct GonalityOptions {
    /// Highest degree to try; see [`default_degree_cap`].
    pub degree_cap: Option<i64>,
    /// Enumerate one representative per orbit of this group.
    pub symmetry: Option<SymmetryGroup>,
    /// Degrees below this are known not to carry rank `k` (for example from a
    /// scramble order) and are skipped.
    pub lower_bound: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCount {
    pub degree: i64,
    pub orbits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonalityResult {
    /// Lattice shape of the host, when it has one.
    pub dims: Option<Vec<usize>>,
    pub k: i64,
    /// Degree of the optimal divisor; `None` when the cap was exhausted.
    pub value: Option<i64>,
    pub witness: Option<Divisor>,
    /// Every degree from `k` up to `value - 1` (or up to the cap) was refuted by search.
    pub exhaustive: bool,
    pub degrees_refuted: Vec<i64>,
    pub orbit_counts: Vec<DegreeCount>,
    pub degree_cap: i64,
    pub lower_bound: Option<i64>,
    pub symmetry: bool,
    /// Chip totals of the poorest slice along each axis of the witness
    /// (product graphs only).
    pub poorest_slices: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

/// Calls `f` on every nonnegative vector of length `n` summing to `degree`,
/// in lexicographic order.
pub fn for_each_effective(n: usize, degree: i64, f: &mut dyn FnMut(&[i64])) {
    let mut buf = vec![0i64; n];
    fn rec(i: usize, left: i64, buf: &mut [i64], f: &mut dyn FnMut(&[i64])) {
        if i + 1 == buf.len() {
            buf[i] = left;
            f(buf);
            return;
        }
        for c in 0..=left {
            buf[i] = c;
            rec(i + 1, left - c, buf, f);
        }
        buf[i] = 0;
    }
    if n == 0 || degree < 0 {
        return;
    }
    rec(0, degree, &mut buf, f);
}

/// All effective divisors of the given degree, lexicographically ordered.
pub fn effective_divisors(n: usize, degree: i64) -> Vec<Divisor> {
    let mut out = Vec::new();
    for_each_effective(n, degree, &mut |c| out.push(Divisor::new(c.to_vec())));
    out
}

/// Effective divisors whose consecutive first-axis slices are in ascending
/// order; every canonical rook divisor has this shape.
fn for_each_sorted_slices(n: usize, slices: usize, degree: i64, f: &mut dyn FnMut(&[i64])) {
    let len = n / slices;
    let mut buf = vec![0i64; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(i: usize, left: i64, tight: bool, len: usize, buf: &mut [i64], f: &mut dyn FnMut(&[i64])) {
        let n = buf.len();
        let j = i % len;
        // at a slice boundary the new slice starts out equal to its predecessor
        let tight = if j == 0 { i >= len } else { tight };
        let lo = if tight { buf[i - len] } else { 0 };
        if i + 1 == n {
            if left >= lo {
                buf[i] = left;
                f(buf);
            }
            return;
        }
        for c in lo..=left {
            buf[i] = c;
            rec(i + 1, left - c, tight && c == lo, len, buf, f);
        }
        buf[i] = 0;
    }
    if n == 0 || degree < 0 {
        return;
    }
    rec(0, degree, false, len, &mut buf, f);
}

/// One effective divisor of the given degree per orbit of `sym` (the
/// lexicographically smallest member), in lexicographic order.
pub fn orbit_representatives(n: usize, degree: i64, sym: Option<&SymmetryGroup>) -> Result<Vec<Divisor>> {
    let mut out = Vec::new();
    match sym {
        None => for_each_effective(n, degree, &mut |c| out.push(Divisor::new(c.to_vec()))),
        Some(sym) => {
            if sym.degree() != n {
                return Err(Error::InvalidArguments("symmetry group acts on a different vertex count".into()));
            }
            let mut failure = None;
            let mut keep = |c: &[i64]| match sym.canonical_chips(c) {
                Ok(canon) if canon == c => out.push(Divisor::new(canon)),
                Ok(_) => {}
                Err(e) => failure = Some(e),
            };
            match sym.first_axis_len() {
                Some(slices) => for_each_sorted_slices(n, slices, degree, &mut keep),
                None => for_each_effective(n, degree, &mut keep),
            }
            if let Some(e) = failure {
                return Err(e);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Certificate degree (rank 1 rook certificate) or the Riemann–Roch bound.
pub fn default_degree_cap(g: &MultiGraph, k: i64) -> i64 {
    if g.is_rook() {
        let dims = g.dims().unwrap();
        let n: usize = dims.iter().product();
        if k == 1 {
            let smallest = *dims.iter().min().unwrap();
            return ((smallest - 1) * n / smallest) as i64;
        }
        if dims.len() == 2 && (k == 2 || k == 3) {
            return n as i64;
        }
    }
    g.genus() + k
}

/// Smallest degree of an effective divisor of rank at least `k`.
pub fn k_gonality(g: &MultiGraph, k: i64, opts: &GonalityOptions) -> Result<GonalityResult> {
    if k < 1 {
        return Err(Error::InvalidArguments("rank target k must be at least 1".into()));
    }
    let cap = opts.degree_cap.unwrap_or_else(|| default_degree_cap(g, k));
    if cap < k {
        return Err(Error::InvalidArguments(format!("degree cap {cap} is below k = {k}")));
    }
    if let Some(sym) = &opts.symmetry {
        if !sym.acts_on(g) {
            return Err(Error::InvalidArguments("symmetry generators are not automorphisms".into()));
        }
    }
    let start_time = Instant::now();
    let n = g.vertex_count();
    let start = opts.lower_bound.map_or(k, |b| b.max(k));
    let mut result = GonalityResult {
        dims: g.dims().map(|d| d.to_vec()),
        k,
        value: None,
        witness: None,
        exhaustive: start == k,
        degrees_refuted: Vec::new(),
        orbit_counts: Vec::new(),
        degree_cap: cap,
        lower_bound: opts.lower_bound,
        symmetry: opts.symmetry.is_some(),
        poorest_slices: None,
        wall_time_ms: None,
    };
    for degree in start..=cap {
        let reps = orbit_representatives(n, degree, opts.symmetry.as_ref())?;
        result.orbit_counts.push(DegreeCount { degree, orbits: reps.len() as u64 });
        log::debug!("degree {degree}: {} candidates", reps.len());
        let hit = reps
            .par_iter()
            .map_init(|| RankOracle::new(g), |oracle, d| oracle.rank_at_least(d, k))
            .position_first(|ok| ok);
        match hit {
            Some(i) => {
                let w = reps[i].clone();
                result.poorest_slices = g.dims().map(|dims| poorest_slices(dims, &w.chips));
                result.value = Some(degree);
                result.witness = Some(w);
                break;
            }
            None => result.degrees_refuted.push(degree),
        }
    }
    result.wall_time_ms = Some(start_time.elapsed().as_millis() as u64);
    Ok(result)
}

/// Plain gonality: smallest degree of a rank-1 divisor.
pub fn gonality(g: &MultiGraph, opts: &GonalityOptions) -> Result<GonalityResult> {
    k_gonality(g, 1, opts)
}

/// Minimum chip total over the slices orthogonal to each axis.
pub fn poorest_slices(dims: &[usize], chips: &[i64]) -> Vec<i64> {
    (0..dims.len())
        .map(|axis| {
            let mut totals = vec![0i64; dims[axis]];
            for (v, &c) in chips.iter().enumerate() {
                let coord = crate::graph::coords_of(dims, v)[axis];
                totals[coord] += c;
            }
            totals.into_iter().min().unwrap_or(0)
        })
        .collect()
}

/// Rook divisors known to have rank at least `k`.
///
/// `k = 1`: one chip everywhere except the slice with first coordinate 0
/// along the smallest factor, degree `(n1 - 1) n2 ... nk`.
/// `k = 3`: one chip everywhere.
pub fn rook_certificate_divisor(dims: &[usize], k: u32) -> Result<Divisor> {
    if dims.len() < 2 || dims.iter().any(|&d| d < 2) {
        return Err(Error::InvalidSize(format!("{dims:?} are not rook dimensions")));
    }
    let n: usize = dims.iter().product();
    match k {
        1 => {
            let axis = (0..dims.len()).min_by_key(|&a| (dims[a], a)).unwrap();
            Ok(Divisor::new(
                (0..n)
                    .map(|v| (crate::graph::coords_of(dims, v)[axis] != 0) as i64)
                    .collect(),
            ))
        }
        3 => Ok(Divisor::constant(n, 1)),
        other => Err(Error::UnsupportedCertificate(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::rook_graph;
    use crate::symmetry::rook_symmetry;

    #[test]
    fn composition_counts() {
        assert_eq!(effective_divisors(4, 3).len(), 20);
        assert_eq!(effective_divisors(1, 5), vec![Divisor::new(vec![5])]);
        assert!(effective_divisors(3, 0).iter().all(|d| d.degree() == 0));
    }

    #[test]
    fn sorted_slice_generation_contains_all_canonical_forms() {
        let sym = rook_symmetry(&[2, 3]).unwrap();
        let mut sorted = Vec::new();
        for_each_sorted_slices(6, 2, 3, &mut |c| sorted.push(c.to_vec()));
        for d in effective_divisors(6, 3) {
            let canon = sym.canonical_chips(&d.chips).unwrap();
            assert!(sorted.contains(&canon));
        }
    }

    #[test]
    fn certificates() {
        let d = rook_certificate_divisor(&[3, 4], 1).unwrap();
        assert_eq!(d.degree(), 8);
        assert_eq!(&d.chips[..4], &[0, 0, 0, 0]);
        assert_eq!(rook_certificate_divisor(&[2, 3, 4], 1).unwrap().degree(), 12);
        assert_eq!(rook_certificate_divisor(&[4, 3], 1).unwrap().degree(), 8);
        assert_eq!(rook_certificate_divisor(&[4, 4], 3).unwrap().degree(), 16);
        assert!(matches!(rook_certificate_divisor(&[4, 4], 2), Err(Error::UnsupportedCertificate(2))));
    }

    #[test]
    fn small_gonalities() {
        let g = rook_graph(&[2, 2]).unwrap();
        let r = gonality(&g, &GonalityOptions::default()).unwrap();
        assert_eq!(r.value, Some(2));
        assert!(r.exhaustive);
        assert_eq!(r.degrees_refuted, vec![1]);
        let g = rook_graph(&[2, 3]).unwrap();
        let opts = GonalityOptions { symmetry: Some(rook_symmetry(&[2, 3]).unwrap()), ..Default::default() };
        assert_eq!(k_gonality(&g, 2, &opts).unwrap().value, Some(5));
        assert_eq!(k_gonality(&g, 3, &opts).unwrap().value, Some(6));
    }

    #[test]
    fn cap_exhaustion_is_not_an_error() {
        let g = rook_graph(&[3, 3]).unwrap();
        let opts = GonalityOptions { degree_cap: Some(3), ..Default::default() };
        let r = gonality(&g, &opts).unwrap();
        assert_eq!(r.value, None);
        assert!(r.exhaustive);
        assert_eq!(r.degrees_refuted, vec![1, 2, 3]);
    }
}
