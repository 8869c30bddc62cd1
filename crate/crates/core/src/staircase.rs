//! The staircase grid `B_a`, the staircase encoding of a permutation, its
//! downcore graph, validity for 132-avoidance, and the inverse decoding.
//!
//! Boxes use the staircase convention `(i, j)`: `i` is the row from the
//! top, `j` the column index, with boxes present for `1 <= i <= j <= a`.
//! Box `(i, j)` counts the entries with value strictly between the `i`-th
//! and `(i-1)`-th left-to-right minima and position strictly between the
//! `j`-th and `(j+1)`-th minima positions (sentinels `n + 1` on both ends).

use serde::{Deserialize, Serialize};

use crate::grid::DowncoreGraph;
use crate::perm::Permutation;
use crate::{Error, Result};

/// The staircase grid `B_a` filled with nonnegative counts, zeros stored
/// explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseEncoding {
    /// `rows[i - 1]` holds the counts of boxes `(i, i), ..., (i, a)`.
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct EncodingJson {
    size: usize,
    rows: Vec<Vec<usize>>,
}

impl StaircaseEncoding {
    /// Row `i` (1-based, from the top) must hold `a - i + 1` counts.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let a = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != a - i {
                return Err(Error::Domain(format!(
                    "row {} must have {} counts, got {}",
                    i + 1,
                    a - i,
                    row.len()
                )));
            }
        }
        Ok(StaircaseEncoding { rows })
    }

    /// All-zero encoding of size `a` (the encoding of the decreasing
    /// permutation of length `a`).
    pub fn zeros(a: usize) -> Self {
        StaircaseEncoding {
            rows: (0..a).map(|i| vec![0; a - i]).collect(),
        }
    }

    /// Number of rows `a` (the number of left-to-right minima).
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Count in box `(i, j)`, `1 <= i <= j <= a`.
    pub fn count(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `a` plus the sum of all counts; the length of any permutation that
    /// encodes to this grid.
    pub fn total(&self) -> usize {
        self.size() + self.rows.iter().flatten().sum::<usize>()
    }

    /// Number of boxes with count at least 1.
    pub fn nonzero_count(&self) -> usize {
        self.rows.iter().flatten().filter(|&&c| c > 0).count()
    }

    /// Boxes `(i, j)` with nonzero count, in row-major order.
    pub fn nonzero_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (off, &c) in row.iter().enumerate() {
                if c > 0 {
                    out.push((i + 1, i + 1 + off));
                }
            }
        }
        out
    }

    /// Right-justified ASCII rendering, one row per line, top row first.
    pub fn render(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1);
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let indent = " ".repeat(i * (width + 1));
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                format!("{indent}{}", cells.join(" "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> String {
        let dto = EncodingJson {
            size: self.size(),
            rows: self.rows.clone(),
        };
        serde_json::to_string(&dto).expect("encoding serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: EncodingJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if dto.size != dto.rows.len() {
            return Err(Error::Domain(format!(
                "size {} does not match {} rows",
                dto.size,
                dto.rows.len()
            )));
        }
        StaircaseEncoding::new(dto.rows)
    }
}

/// The staircase encoding of a nonempty permutation. Accepts any
/// permutation, not only 132-avoiders.
pub fn encode(perm: &Permutation) -> Result<StaircaseEncoding> {
    if perm.is_empty() {
        return Err(Error::Domain(
            "the empty permutation has no staircase encoding".into(),
        ));
    }
    let n = perm.len();
    let minima = perm.ltr_minima();
    let a = minima.len();
    // Sentinels: value band above the first minimum is bounded by n + 1;
    // position band after the last minimum ends at n + 1.
    let band_hi = |i: usize| if i == 1 { n + 1 } else { minima[i - 2].1 };
    let pos_end = |j: usize| if j == a { n + 1 } else { minima[j].0 };
    let mut rows: Vec<Vec<usize>> = (0..a).map(|i| vec![0; a - i]).collect();
    for i in 1..=a {
        for j in i..=a {
            let (lo, hi) = (minima[i - 1].1, band_hi(i));
            let (p0, p1) = (minima[j - 1].0, pos_end(j));
            rows[i - 1][j - i] = (p0 + 1..p1)
                .filter(|&p| {
                    let v = perm.at(p);
                    lo < v && v < hi
                })
                .count();
        }
    }
    StaircaseEncoding::new(rows)
}

/// The downcore graph of the staircase grid `B_a`: vertices `(i, j)` with
/// `1 <= i <= j <= a`, an edge between `(i, j)` and `(k, l)` iff
/// `i < k <= j < l` or `k < i <= l < j`.
pub fn staircase_downcore(a: usize) -> DowncoreGraph {
    let vertices = (1..=a).flat_map(|i| (i..=a).map(move |j| (i, j)));
    DowncoreGraph::with_rule(vertices, |(i, j), (k, l)| {
        (i < k && k <= j && j < l) || (k < i && i <= l && l < j)
    })
}

/// A pair of nonzero boxes joined by a downcore edge, if any.
fn violating_pair(enc: &StaircaseEncoding) -> Option<((usize, usize), (usize, usize))> {
    let g = staircase_downcore(enc.size());
    let nonzero = enc.nonzero_boxes();
    for (idx, &a) in nonzero.iter().enumerate() {
        for &b in &nonzero[idx + 1..] {
            if g.has_edge(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// True iff the nonzero boxes form an independent set in the downcore of
/// `B_a`, i.e. the encoding arises from a 132-avoiding permutation.
pub fn is_valid_132_encoding(enc: &StaircaseEncoding) -> bool {
    violating_pair(enc).is_none()
}

/// The unique 132-avoiding permutation with the given (valid) encoding.
///
/// Minima values and positions are forced by the row and column sums; the
/// non-minimum entries are arranged in the one 132-safe order: ascending
/// along every row and column of the grid, which makes each position
/// segment ascending from the bottom row's boxes upward.
pub fn decode(enc: &StaircaseEncoding) -> Result<Permutation> {
    if let Some((a, b)) = violating_pair(enc) {
        return Err(Error::Domain(format!(
            "invalid encoding: nonzero boxes {a:?} and {b:?} share a downcore edge"
        )));
    }
    let a = enc.size();
    if a == 0 {
        return Err(Error::Domain("cannot decode an empty encoding".into()));
    }
    let n = enc.total();
    // Row sums fix the minima values: band i holds the r_i values directly
    // below the previous band, with one value reserved per minimum.
    let mut min_values = Vec::with_capacity(a);
    let mut next = n + 1;
    for i in 1..=a {
        let row_sum: usize = enc.rows()[i - 1].iter().sum();
        next = next - 1 - row_sum;
        min_values.push(next);
    }
    debug_assert_eq!(min_values[a - 1], 1);
    // Assign each row's value band ascending across its boxes, leftmost
    // box first. values[i-1][j-i] = ascending values of box (i, j).
    let mut values: Vec<Vec<Vec<usize>>> = Vec::with_capacity(a);
    for i in 1..=a {
        let mut v = min_values[i - 1] + 1;
        let mut row = Vec::new();
        for &c in &enc.rows()[i - 1] {
            row.push((v..v + c).collect::<Vec<usize>>());
            v += c;
        }
        values.push(row);
    }
    // Emit: minimum i, then segment j = i in box order bottom row upward.
    let mut out = Vec::with_capacity(n);
    for j in 1..=a {
        out.push(min_values[j - 1]);
        for i in (1..=j).rev() {
            out.extend(&values[i - 1][j - i]);
        }
    }
    Permutation::new(out)
}
