//! Box sets in Cartesian coordinates (column from left, row from bottom),
//! boundary grids of 123-avoiding permutations, skew Young diagrams, the
//! downcore graph, maximal-independent-set enumeration, and purity.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::perm::{is_123_avoiding_fast, Permutation};
use crate::{Error, Result};

/// Vertex bound for maximal-independent-set enumeration.
pub const MIS_VERTEX_BOUND: usize = 64;
/// Vertex bound for counting independent sets by size.
pub const COUNT_VERTEX_BOUND: usize = 32;

/// A box, as `(x, y)` with `x` the column from left and `y` the row from
/// bottom, both 1-based.
pub type Box = (usize, usize);

/// A finite duplicate-free set of boxes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoxSet {
    boxes: BTreeSet<Box>,
}

#[derive(Serialize, Deserialize)]
struct BoxSetJson {
    boxes: Vec<[usize; 2]>,
}

impl BoxSet {
    pub fn new() -> Self {
        BoxSet::default()
    }

    pub fn from_boxes(boxes: impl IntoIterator<Item = Box>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for b in boxes {
            if b.0 == 0 || b.1 == 0 {
                return Err(Error::Domain(format!(
                    "box coordinates must be positive, got {b:?}"
                )));
            }
            set.insert(b);
        }
        Ok(BoxSet { boxes: set })
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, b: Box) -> bool {
        self.boxes.contains(&b)
    }

    /// Boxes in lexicographic `(x, y)` order.
    pub fn iter(&self) -> impl Iterator<Item = Box> + '_ {
        self.boxes.iter().copied()
    }

    /// Map from occupied row `y` to the sorted columns in that row.
    pub fn rows(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(x, y) in &self.boxes {
            rows.entry(y).or_default().push(x);
        }
        for xs in rows.values_mut() {
            xs.sort_unstable();
        }
        rows
    }

    /// Edge-connected components (boxes sharing a side), each as its own
    /// `BoxSet`, ordered by smallest box.
    pub fn components(&self) -> Vec<BoxSet> {
        let mut remaining: BTreeSet<Box> = self.boxes.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some((x, y)) = stack.pop() {
                comp.insert((x, y));
                let mut neighbors = vec![(x + 1, y), (x, y + 1)];
                if x > 1 {
                    neighbors.push((x - 1, y));
                }
                if y > 1 {
                    neighbors.push((x, y - 1));
                }
                for nb in neighbors {
                    if remaining.remove(&nb) {
                        stack.push(nb);
                    }
                }
            }
            out.push(BoxSet { boxes: comp });
        }
        out
    }

    pub fn to_json(&self) -> String {
        let dto = BoxSetJson {
            boxes: self.boxes.iter().map(|&(x, y)| [x, y]).collect(),
        };
        serde_json::to_string(&dto).expect("boxset serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: BoxSetJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        BoxSet::from_boxes(dto.boxes.into_iter().map(|[x, y]| (x, y)))
    }

    /// ASCII rendering, top row first: occupied boxes as `■`, boxes in
    /// `selected` as `▣`, absent cells as spaces.
    pub fn render(&self, selected: &[Box]) -> String {
        if self.is_empty() {
            return String::new();
        }
        let selected: BTreeSet<Box> = selected.iter().copied().collect();
        let max_x = self.boxes.iter().map(|b| b.0).max().unwrap();
        let max_y = self.boxes.iter().map(|b| b.1).max().unwrap();
        let mut lines = Vec::new();
        for y in (1..=max_y).rev() {
            let mut line = String::new();
            for x in 1..=max_x {
                if selected.contains(&(x, y)) {
                    line.push('▣');
                } else if self.contains((x, y)) {
                    line.push('■');
                } else {
                    line.push(' ');
                }
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

/// Orientation of a staircase box set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Boxes `(x, y)` with `x + y <= n + 1` (diagonal from top-left to
    /// bottom-right, containing the bottom-left corner).
    LowerLeft,
    /// The reflection containing the top-right corner: `x + y >= n + 1`
    /// with `x, y <= n`.
    UpperRight,
}

/// The boundary grid of a 123-avoiding permutation: boxes simultaneously
/// above-right of some left-to-right minimum and below-left of some
/// right-to-left maximum, inside the `(n-1) x (n-1)` grid.
pub fn boundary_grid(perm: &Permutation) -> Result<BoxSet> {
    if !is_123_avoiding_fast(perm) {
        return Err(Error::Domain(format!(
            "{perm} contains 123: some entry is neither a left-to-right minimum \
             nor a right-to-left maximum"
        )));
    }
    let n = perm.len();
    if n < 2 {
        return Ok(BoxSet::new());
    }
    let minima = perm.ltr_minima();
    let maxima = perm.rtl_maxima();
    let mut boxes = BTreeSet::new();
    for x in 1..n {
        for y in 1..n {
            let above_min = minima.iter().any(|&(i, v)| i <= x && v <= y);
            let below_max = maxima.iter().any(|&(j, v)| j >= x + 1 && v >= y + 1);
            if above_min && below_max {
                boxes.insert((x, y));
            }
        }
    }
    Ok(BoxSet { boxes })
}

/// Staircase box set of size `n` in the requested orientation.
pub fn staircase_boxset(n: usize, orientation: Orientation) -> BoxSet {
    let mut boxes = BTreeSet::new();
    for x in 1..=n {
        for y in 1..=n {
            let inside = match orientation {
                Orientation::LowerLeft => x + y <= n + 1,
                Orientation::UpperRight => x + y >= n + 1,
            };
            if inside {
                boxes.insert((x, y));
            }
        }
    }
    BoxSet { boxes }
}

/// The boundary grid of `(n-2)(n-3)...(1)(n)(n-1)`, whose downcore is not
/// pure for every `n >= 4`.
pub fn construction_grid(n: usize) -> Result<BoxSet> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "construction grid requires n >= 4, got {n}"
        )));
    }
    let mut values: Vec<usize> = (1..=n - 2).rev().collect();
    values.push(n);
    values.push(n - 1);
    boundary_grid(&Permutation::new(values).expect("valid construction permutation"))
}

/// Shifts every row above `row` up by one and repeats row `row`.
pub fn duplicate_row(boxes: &BoxSet, row: usize) -> Result<BoxSet> {
    if !boxes.iter().any(|(_, y)| y == row) {
        return Err(Error::Domain(format!("row {row} is not occupied")));
    }
    let mut out = BTreeSet::new();
    for (x, y) in boxes.iter() {
        if y <= row {
            out.insert((x, y));
        }
        if y >= row {
            out.insert((x, y + 1));
        }
    }
    Ok(BoxSet { boxes: out })
}

/// True iff the box set is a (connected) skew Young diagram in the
/// boundary-grid orientation: every occupied row is a contiguous interval,
/// both interval endpoints are nonincreasing going upward, and the boxes
/// are edge-connected.
pub fn is_skew_young(boxes: &BoxSet) -> bool {
    if boxes.is_empty() {
        return false;
    }
    let rows = boxes.rows();
    let mut prev: Option<(usize, usize, usize)> = None; // (y, a, b)
    for (&y, xs) in &rows {
        let a = xs[0];
        let b = *xs.last().unwrap();
        if b - a + 1 != xs.len() {
            return false;
        }
        if let Some((py, pa, pb)) = prev {
            if y != py + 1 {
                return false; // gap between occupied rows
            }
            if a > pa || b > pb {
                return false;
            }
        }
        prev = Some((y, a, b));
    }
    boxes.components().len() == 1
}

/// Undirected graph on boxes with the downcore edge rule. Immutable after
/// construction; vertices are kept in lexicographic `(x, y)` order.
#[derive(Clone, Debug)]
pub struct DowncoreGraph {
    vertices: Vec<Box>,
    neighbors: Vec<Vec<usize>>,
}

impl DowncoreGraph {
    /// Builds a graph over `vertices` (sorted and deduplicated) with edges
    /// given by `rule`. The rule is only consulted for `a < b`; adjacency
    /// is stored symmetrically.
    pub fn with_rule(
        vertices: impl IntoIterator<Item = Box>,
        rule: impl Fn(Box, Box) -> bool,
    ) -> Self {
        let mut vertices: Vec<Box> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let m = vertices.len();
        let mut neighbors = vec![Vec::new(); m];
        for a in 0..m {
            for b in a + 1..m {
                if rule(vertices[a], vertices[b]) {
                    neighbors[a].push(b);
                    neighbors[b].push(a);
                }
            }
        }
        DowncoreGraph { vertices, neighbors }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(|ns| ns.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Box] {
        &self.vertices
    }

    /// Edges as vertex pairs, each with the lexicographically smaller box
    /// first.
    pub fn edges(&self) -> Vec<(Box, Box)> {
        let mut out = Vec::new();
        for (a, ns) in self.neighbors.iter().enumerate() {
            for &b in ns {
                if a < b {
                    out.push((self.vertices[a], self.vertices[b]));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, a: Box, b: Box) -> bool {
        let (ia, ib) = match (
            self.vertices.binary_search(&a),
            self.vertices.binary_search(&b),
        ) {
            (Ok(ia), Ok(ib)) => (ia, ib),
            _ => return false,
        };
        self.neighbors[ia].contains(&ib)
    }

    pub fn degree(&self, v: Box) -> Option<usize> {
        self.vertices
            .binary_search(&v)
            .ok()
            .map(|i| self.neighbors[i].len())
    }

    fn boxes_of(&self, mask: u128) -> Vec<Box> {
        (0..self.vertices.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.vertices[i])
            .collect()
    }

    fn adjacency_masks(&self) -> Vec<u128> {
        self.neighbors
            .iter()
            .map(|ns| ns.iter().fold(0u128, |m, &b| m | 1 << b))
            .collect()
    }

    /// Visits every inclusion-maximal independent set exactly once, as a
    /// vertex bitmask, in a deterministic order. Runs Bron-Kerbosch with
    /// pivoting on the complement graph. Returns `false` if the visitor
    /// stopped the walk early.
    fn for_each_maximal_independent_set(
        &self,
        f: &mut dyn FnMut(u128) -> ControlFlow<()>,
    ) -> Result<bool> {
        let m = self.vertices.len();
        if m > MIS_VERTEX_BOUND {
            return Err(Error::Resource(format!(
                "{m} vertices exceeds the maximal-independent-set bound {MIS_VERTEX_BOUND}"
            )));
        }
        let full: u128 = if m == 0 { 0 } else { (!0u128) >> (128 - m) };
        // Cliques in the complement are independent sets here.
        let comp: Vec<u128> = self
            .adjacency_masks()
            .iter()
            .enumerate()
            .map(|(i, &adj)| full & !adj & !(1u128 << i))
            .collect();
        fn expand(
            comp: &[u128],
            r: u128,
            p: u128,
            x: u128,
            f: &mut dyn FnMut(u128) -> ControlFlow<()>,
        ) -> ControlFlow<()> {
            if p == 0 && x == 0 {
                return f(r);
            }
            // Pivot: vertex of P union X with the most complement-neighbors
            // in P; lowest index wins ties.
            let mut pivot = usize::MAX;
            let mut best = usize::MAX;
            let mut px = p | x;
            while px != 0 {
                let u = px.trailing_zeros() as usize;
                px &= px - 1;
                let covered = (comp[u] & p).count_ones() as usize;
                if best == usize::MAX || covered > best {
                    best = covered;
                    pivot = u;
                }
            }
            let mut candidates = p & !comp[pivot];
            let mut p = p;
            let mut x = x;
            while candidates != 0 {
                let v = candidates.trailing_zeros() as usize;
                let bit = 1u128 << v;
                candidates &= candidates - 1;
                expand(comp, r | bit, p & comp[v], x & comp[v], f)?;
                p &= !bit;
                x |= bit;
            }
            ControlFlow::Continue(())
        }
        Ok(expand(&comp, 0, full, 0, f).is_continue())
    }

    /// Every inclusion-maximal independent set, in the deterministic
    /// enumeration order.
    pub fn maximal_independent_sets(&self) -> Result<Vec<Vec<Box>>> {
        let mut out = Vec::new();
        self.for_each_maximal_independent_set(&mut |mask| {
            out.push(mask);
            ControlFlow::Continue(())
        })?;
        Ok(out.into_iter().map(|m| self.boxes_of(m)).collect())
    }

    /// The sizes of all maximal independent sets, with witnesses for the
    /// extremes. Stops enumerating once two distinct sizes are seen.
    pub fn purity(&self) -> Result<PurityReport> {
        self.purity_with_mode(true)
    }

    /// Like [`DowncoreGraph::purity`] but always enumerates every maximal
    /// independent set, so `maximal_set_count` is populated.
    pub fn purity_exhaustive(&self) -> Result<PurityReport> {
        self.purity_with_mode(false)
    }

    fn purity_with_mode(&self, early_stop: bool) -> Result<PurityReport> {
        let mut min: Option<(usize, u128)> = None;
        let mut max: Option<(usize, u128)> = None;
        let mut count: u64 = 0;
        let completed = self.for_each_maximal_independent_set(&mut |mask| {
            count += 1;
            let size = mask.count_ones() as usize;
            if min.map_or(true, |(s, _)| size < s) {
                min = Some((size, mask));
            }
            if max.map_or(true, |(s, _)| size > s) {
                max = Some((size, mask));
            }
            if early_stop && min.unwrap().0 != max.unwrap().0 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        let (min_size, min_mask) = min.expect("at least one maximal independent set");
        let (max_size, max_mask) = max.expect("at least one maximal independent set");
        Ok(PurityReport {
            is_pure: min_size == max_size,
            min_size,
            max_size,
            witness_min: self.boxes_of(min_mask),
            witness_max: self.boxes_of(max_mask),
            maximal_set_count: completed.then_some(count),
        })
    }

    /// Entry `k` is the number of independent sets (not necessarily
    /// maximal) of size `k`; entry 0 is always 1.
    pub fn independent_set_counts(&self) -> Result<Vec<BigUint>> {
        let m = self.vertices.len();
        if m > COUNT_VERTEX_BOUND {
            return Err(Error::Resource(format!(
                "{m} vertices exceeds the independent-set counting bound {COUNT_VERTEX_BOUND}"
            )));
        }
        let adj = self.adjacency_masks();
        let mut memo: HashMap<u128, Vec<BigUint>> = HashMap::new();
        // counts(allowed) = size profile of independent sets within `allowed`.
        fn counts(allowed: u128, adj: &[u128], memo: &mut HashMap<u128, Vec<BigUint>>) -> Vec<BigUint> {
            if allowed == 0 {
                return vec![BigUint::one()];
            }
            if let Some(hit) = memo.get(&allowed) {
                return hit.clone();
            }
            let v = allowed.trailing_zeros() as usize;
            let without = counts(allowed & !(1 << v), adj, memo);
            let with = counts(allowed & !(1 << v) & !adj[v], adj, memo);
            let mut out = without;
            if out.len() < with.len() + 1 {
                out.resize(with.len() + 1, BigUint::zero());
            }
            for (k, c) in with.into_iter().enumerate() {
                out[k + 1] += c;
            }
            memo.insert(allowed, out.clone());
            out
        }
        let full: u128 = if m == 0 { 0 } else { (!0u128) >> (128 - m) };
        Ok(counts(full, &adj, &mut memo))
    }
}

/// The downcore graph of an arbitrary box set: boxes `(i, j)` and `(k, l)`
/// are adjacent iff they are strictly NW/SE of each other and the two
/// opposite rectangle corners `(i, l)` and `(k, j)` are also member boxes.
pub fn downcore(boxes: &BoxSet) -> DowncoreGraph {
    let member = boxes.clone();
    DowncoreGraph::with_rule(boxes.iter(), move |(i, j), (k, l)| {
        let crossing = (i < k && j > l) || (i > k && j < l);
        crossing && member.contains((i, l)) && member.contains((k, j))
    })
}

/// Sizes and witnesses for the maximal independent sets of a graph.
#[derive(Clone, Debug, Serialize)]
pub struct PurityReport {
    pub is_pure: bool,
    pub min_size: usize,
    pub max_size: usize,
    pub witness_min: Vec<Box>,
    pub witness_max: Vec<Box>,
    /// Total number of maximal independent sets; present only when the
    /// enumeration ran to completion.
    pub maximal_set_count: Option<u64>,
}

/// Random connected skew Young diagram with at most `max_boxes` boxes, in
/// the boundary-grid orientation.
pub fn random_skew_diagram(rng: &mut impl Rng, max_boxes: usize) -> BoxSet {
    let max_boxes = max_boxes.max(1);
    loop {
        let rows = rng.gen_range(1..=5usize);
        let width = rng.gen_range(1..=6usize);
        let mut b = rng.gen_range(1..=width);
        let mut a = rng.gen_range(1..=b);
        let mut boxes = BTreeSet::new();
        for y in 1..=rows {
            for x in a..=b {
                boxes.insert((x, y));
            }
            if y == rows {
                break;
            }
            // Keep endpoints nonincreasing upward and rows overlapping.
            let nb = rng.gen_range(a..=b);
            let na = rng.gen_range(1..=nb.min(a));
            a = na;
            b = nb;
        }
        let set = BoxSet { boxes };
        if set.len() <= max_boxes && is_skew_young(&set) {
            return set;
        }
    }
}
