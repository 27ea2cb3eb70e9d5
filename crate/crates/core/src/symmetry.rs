//! Rook-graph automorphism groups and canonical forms of divisors and vertex
//! sets under them.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{coords_of, index_of, MultiGraph};
use crate::vset::VertexSet;

/// Group generated by a list of vertex permutations.
///
/// Groups built by [`rook_symmetry`] also remember their lattice shape, which
/// enables the fast canonical forms; any other generator list falls back to
/// explicit enumeration of the group elements.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    pub generators: Vec<Vec<usize>>,
    pub rook_dims: Option<Vec<usize>>,
    transforms: Vec<Vec<usize>>,
}

/// Upper limit on explicitly enumerated group elements.
pub const ENUMERATION_LIMIT: usize = 200_000;

impl SymmetryGroup {
    /// A group given only by generators.
    pub fn from_generators(n: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        for p in &generators {
            let mut seen = vec![false; n];
            if p.len() != n || p.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidArguments("generator is not a permutation".into()));
            }
        }
        Ok(SymmetryGroup { generators, rook_dims: None, transforms: Vec::new() })
    }

    pub fn degree(&self) -> usize {
        match &self.rook_dims {
            Some(d) => d.iter().product(),
            None => self.generators.first().map_or(0, Vec::len),
        }
    }

    /// Group order: closed form for rook groups, enumeration otherwise.
    pub fn order(&self) -> Result<u128> {
        if let Some(dims) = &self.rook_dims {
            return Ok(rook_group_order(dims));
        }
        Ok(self.elements()?.len() as u128)
    }

    /// All group elements by breadth-first closure over the generators.
    pub fn elements(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.degree();
        let identity: Vec<usize> = (0..n).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
        let mut out = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for gen in &self.generators {
                let q: Vec<usize> = p.iter().map(|&x| gen[x]).collect();
                if seen.insert(q.clone()) {
                    if out.len() >= ENUMERATION_LIMIT {
                        return Err(Error::TooLarge(format!(
                            "group has more than {ENUMERATION_LIMIT} elements"
                        )));
                    }
                    out.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(out)
    }

    /// True when every generator is an automorphism of `g`.
    pub fn acts_on(&self, g: &MultiGraph) -> bool {
        self.degree() == g.vertex_count() && self.generators.iter().all(|p| g.is_automorphism(p))
    }

    /// Lexicographically smallest image of `chips` under the group.
    pub fn canonical_chips(&self, chips: &[i64]) -> Result<Vec<i64>> {
        match &self.rook_dims {
            Some(dims) => Ok(self.rook_canonical(dims, chips)),
            None => {
                let mut best = chips.to_vec();
                let mut img = vec![0; chips.len()];
                for p in self.elements()? {
                    for (v, &c) in chips.iter().enumerate() {
                        img[p[v]] = c;
                    }
                    if img < best {
                        best.clone_from(&img);
                    }
                }
                Ok(best)
            }
        }
    }

    /// Minimum over the precomputed transforms of the image with its first-axis
    /// slices sorted. Row permutations are absorbed by the sort.
    fn rook_canonical(&self, dims: &[usize], chips: &[i64]) -> Vec<i64> {
        let slice = chips.len() / dims[0];
        let mut best: Option<Vec<i64>> = None;
        let mut img = vec![0i64; chips.len()];
        let mut cand = vec![0i64; chips.len()];
        for t in &self.transforms {
            for (v, &c) in chips.iter().enumerate() {
                img[t[v]] = c;
            }
            let mut rows: Vec<&[i64]> = img.chunks(slice).collect();
            rows.sort_unstable();
            for (i, r) in rows.iter().enumerate() {
                cand[i * slice..(i + 1) * slice].copy_from_slice(r);
            }
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand.clone());
            }
        }
        best.unwrap_or_else(|| chips.to_vec())
    }

    /// Number of first-axis slices for rook groups. Canonical divisors list
    /// these slices in ascending order.
    pub fn first_axis_len(&self) -> Option<usize> {
        self.rook_dims.as_ref().map(|d| d[0])
    }

    /// Builds a complete orbit invariant for vertex sets.
    pub fn set_canonizer(&self) -> Result<SetCanonizer> {
        match self.rook_dims.as_deref() {
            Some(&[n, m]) => Ok(SetCanonizer::Grid { rows: n, cols: m, transpose: n == m }),
            _ => Ok(SetCanonizer::Elements(self.elements()?)),
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn rook_group_order(dims: &[usize]) -> u128 {
    let mut order: u128 = dims.iter().map(|&d| factorial(d)).product();
    let mut sorted = dims.to_vec();
    sorted.sort_unstable();
    for chunk in sorted.chunk_by(|a, b| a == b) {
        order *= factorial(chunk.len());
    }
    order
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out.sort();
    out
}

/// Automorphism group of `K_{d1} □ ... □ K_{dk}`: value permutations inside
/// every factor plus exchanges of equal-sized factors.
pub fn rook_symmetry(dims: &[usize]) -> Result<SymmetryGroup> {
    if dims.len() < 2 || dims.iter().any(|&d| d < 2) {
        return Err(Error::InvalidSize(format!("{dims:?} are not rook dimensions")));
    }
    let n: usize = dims.iter().product();
    let remap = |f: &dyn Fn(&mut Vec<usize>)| -> Vec<usize> {
        (0..n)
            .map(|v| {
                let mut c = coords_of(dims, v);
                f(&mut c);
                index_of(dims, &c)
            })
            .collect()
    };
    let mut generators = Vec::new();
    for (axis, &d) in dims.iter().enumerate() {
        for j in 0..d - 1 {
            generators.push(remap(&|c: &mut Vec<usize>| {
                if c[axis] == j {
                    c[axis] = j + 1;
                } else if c[axis] == j + 1 {
                    c[axis] = j;
                }
            }));
        }
    }
    for a in 0..dims.len() {
        // swap with the next axis of the same size
        if let Some(b) = (a + 1..dims.len()).find(|&b| dims[b] == dims[a]) {
            generators.push(remap(&|c: &mut Vec<usize>| c.swap(a, b)));
        }
    }

    // Transforms: every axis exchange combined with every value permutation
    // on the axes other than the first.
    let k = dims.len();
    let axis_perms: Vec<Vec<usize>> = permutations(k)
        .into_iter()
        .filter(|p| (0..k).all(|i| dims[p[i]] == dims[i]))
        .collect();
    let per_axis: Vec<Vec<Vec<usize>>> = dims[1..].iter().map(|&d| permutations(d)).collect();
    let mut transforms = Vec::new();
    for ap in &axis_perms {
        let mut idx = vec![0usize; k - 1];
        loop {
            let t: Vec<usize> = (0..n)
                .map(|v| {
                    let c = coords_of(dims, v);
                    let mut moved: Vec<usize> = ap.iter().map(|&src| c[src]).collect();
                    for a in 1..k {
                        moved[a] = per_axis[a - 1][idx[a - 1]][moved[a]];
                    }
                    index_of(dims, &moved)
                })
                .collect();
            transforms.push(t);
            let mut a = 0;
            while a < k - 1 {
                idx[a] += 1;
                if idx[a] < per_axis[a].len() {
                    break;
                }
                idx[a] = 0;
                a += 1;
            }
            if a == k - 1 {
                break;
            }
        }
    }
    Ok(SymmetryGroup { generators, rook_dims: Some(dims.to_vec()), transforms })
}

/// Canonical divisor under a group (lexicographically smallest image).
pub fn canonical_divisor_form(chips: &[i64], sym: &SymmetryGroup) -> Result<Vec<i64>> {
    if chips.len() != sym.degree() {
        return Err(Error::InvalidArguments("divisor length does not match the group".into()));
    }
    sym.canonical_chips(chips)
}

/// Orbit invariant for vertex sets: two sets get equal codes iff some group
/// element maps one onto the other.
#[derive(Clone, Debug)]
pub enum SetCanonizer {
    /// Row/column permutations of an `rows × cols` grid, plus transposition
    /// when the grid is square.
    Grid { rows: usize, cols: usize, transpose: bool },
    Elements(Vec<Vec<usize>>),
}

impl SetCanonizer {
    pub fn code(&self, s: VertexSet) -> Vec<u128> {
        match self {
            SetCanonizer::Elements(elems) => {
                let best = elems.iter().map(|p| s.map(p).0).min().unwrap_or(s.0);
                vec![best as u128]
            }
            &SetCanonizer::Grid { rows, cols, transpose } => {
                let cells: Vec<(usize, usize)> = s.iter().map(|v| (v / cols, v % cols)).collect();
                let mut code = grid_code(&cells, rows, cols);
                if transpose {
                    let t: Vec<(usize, usize)> = cells.iter().map(|&(r, c)| (c, r)).collect();
                    code = code.min(grid_code(&t, cols, rows));
                }
                code
            }
        }
    }
}

/// Sorted codes of the row/column-connected pieces of a cell set. Pieces use
/// disjoint rows and columns, so independent relabelling of each piece is
/// realised by a global row and column permutation.
fn grid_code(cells: &[(usize, usize)], rows: usize, cols: usize) -> Vec<u128> {
    let mut parent: Vec<usize> = (0..rows + cols).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(r, c) in cells {
        let a = find(&mut parent, r);
        let b = find(&mut parent, rows + c);
        parent[a] = b;
    }
    let mut pieces: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for &(r, c) in cells {
        let root = find(&mut parent, r);
        match pieces.iter_mut().find(|(k, _)| *k == root) {
            Some((_, v)) => v.push((r, c)),
            None => pieces.push((root, vec![(r, c)])),
        }
    }
    let mut codes: Vec<u128> = pieces.iter().map(|(_, p)| piece_code(p)).collect();
    codes.sort_unstable();
    codes
}

fn piece_code(cells: &[(usize, usize)]) -> u128 {
    let mut rs: Vec<usize> = cells.iter().map(|c| c.0).collect();
    let mut cs: Vec<usize> = cells.iter().map(|c| c.1).collect();
    rs.sort_unstable();
    rs.dedup();
    cs.sort_unstable();
    cs.dedup();
    let (h, w) = (rs.len(), cs.len());
    let mut m = vec![vec![false; w]; h];
    for &(r, c) in cells {
        m[rs.binary_search(&r).unwrap()][cs.binary_search(&c).unwrap()] = true;
    }
    // The row-major minimum over both permutations equals the minimum over
    // row orders with sorted columns, and also the minimum over column orders
    // with sorted rows. Enumerate whichever side is shorter.
    let mut best = u128::MAX;
    if h <= w {
        for p in permutations(h) {
            let mut col_words: Vec<u64> = (0..w)
                .map(|j| (0..h).fold(0u64, |acc, i| acc << 1 | m[p[i]][j] as u64))
                .collect();
            col_words.sort_unstable();
            let mut bits: u128 = 0;
            for i in 0..h {
                for word in &col_words {
                    bits = bits << 1 | ((word >> (h - 1 - i)) & 1) as u128;
                }
            }
            best = best.min(bits);
        }
    } else {
        for p in permutations(w) {
            let mut row_words: Vec<u64> = (0..h)
                .map(|i| (0..w).fold(0u64, |acc, j| acc << 1 | m[i][p[j]] as u64))
                .collect();
            row_words.sort_unstable();
            let bits = row_words.iter().fold(0u128, |acc, &r| acc << w | r as u128);
            best = best.min(bits);
        }
    }
    (h as u128) << 120 | (w as u128) << 112 | best
}
