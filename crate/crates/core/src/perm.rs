//! Permutations in one-line notation, classical pattern containment,
//! extremal-element structure, avoidance-class generation, and skew
//! decomposition.

use crate::{Error, Result};

/// Default length bound for brute-force avoidance enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

/// A permutation of `{1, ..., n}` in one-line notation. The empty
/// permutation (`n = 0`) is permitted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    values: Vec<usize>,
}

/// A permutation used in the pattern role.
pub type Pattern = Permutation;

impl Permutation {
    /// Validates that `values` is a bijection on `{1, ..., n}`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range for length {n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("duplicate value {v}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    /// The identity permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// The decreasing permutation `n (n-1) ... 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// One-line rendering: contiguous digits when `n <= 9`, otherwise
    /// space-separated.
    pub fn one_line(&self) -> String {
        if self.values.len() <= 9 {
            self.values.iter().map(|v| v.to_string()).collect()
        } else {
            self.values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// Left-to-right minima as `(position, value)` pairs, positions 1-based
    /// and ascending.
    pub fn ltr_minima(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for (i, &v) in self.values.iter().enumerate() {
            if v < min {
                min = v;
                out.push((i + 1, v));
            }
        }
        out
    }

    /// Right-to-left maxima as `(position, value)` pairs, positions 1-based
    /// and ascending.
    pub fn rtl_maxima(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate().rev() {
            if v > max {
                max = v;
                out.push((i + 1, v));
            }
        }
        out.reverse();
        out
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.one_line())
    }
}

/// Positions of the left-to-right minima and right-to-left maxima of a
/// permutation, each list ascending and 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalProfile {
    pub ltr_min_positions: Vec<usize>,
    pub rtl_max_positions: Vec<usize>,
}

/// Parses one-line notation: whitespace/comma-separated integers, or a
/// contiguous digit string (legal only when every value is at most 9).
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Permutation::empty());
    }
    if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
        let mut values = Vec::new();
        for tok in trimmed.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("not a positive integer: {tok:?}")))?;
            values.push(v);
        }
        Permutation::new(values)
    } else {
        if trimmed.len() > 9 {
            return Err(Error::Parse(format!(
                "contiguous form is ambiguous for length {} > 9; separate the values",
                trimmed.len()
            )));
        }
        let mut values = Vec::new();
        for c in trimmed.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("not a digit: {c:?}")))?;
            values.push(d as usize);
        }
        Permutation::new(values)
    }
}

/// True iff the (possibly non-permutation) sequence `hay` contains a
/// subsequence order-isomorphic to `needle`. Backtracking over candidate
/// positions, pruning by partial order-isomorphism.
pub(crate) fn sequence_contains(hay: &[usize], needle: &[usize]) -> bool {
    if needle.is_empty() {
        return true;
    }
    if needle.len() > hay.len() {
        return false;
    }
    fn search(hay: &[usize], needle: &[usize], chosen: &mut Vec<usize>, start: usize) -> bool {
        let t = chosen.len();
        if t == needle.len() {
            return true;
        }
        for i in start..hay.len() {
            if hay.len() - i < needle.len() - t {
                return false;
            }
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(s, &ci)| (hay[ci] < hay[i]) == (needle[s] < needle[t]));
            if consistent {
                chosen.push(i);
                if search(hay, needle, chosen, i + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    search(hay, needle, &mut Vec::new(), 0)
}

/// True iff `perm` contains `pattern` as a classical pattern. The empty
/// pattern is contained in everything.
pub fn contains_pattern(perm: &Permutation, pattern: &Pattern) -> bool {
    sequence_contains(perm.values(), pattern.values())
}

/// True iff `perm` avoids every listed pattern.
pub fn avoids_all(perm: &Permutation, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|p| !contains_pattern(perm, p))
}

/// All left-to-right-minimum and right-to-left-maximum positions.
pub fn extremal_profile(perm: &Permutation) -> ExtremalProfile {
    ExtremalProfile {
        ltr_min_positions: perm.ltr_minima().iter().map(|&(p, _)| p).collect(),
        rtl_max_positions: perm.rtl_maxima().iter().map(|&(p, _)| p).collect(),
    }
}

/// 123-avoidance via the extremal characterization: every position is a
/// left-to-right-minimum position or a right-to-left-maximum position.
pub fn is_123_avoiding_fast(perm: &Permutation) -> bool {
    let n = perm.len();
    let mut covered = vec![false; n];
    for (p, _) in perm.ltr_minima() {
        covered[p - 1] = true;
    }
    for (p, _) in perm.rtl_maxima() {
        covered[p - 1] = true;
    }
    covered.into_iter().all(|c| c)
}

/// Lexicographic stream over `Av_n(patterns)`, generated by prefix
/// backtracking that prunes any prefix already containing a pattern.
pub struct Avoiders {
    n: usize,
    patterns: Vec<Pattern>,
    prefix: Vec<usize>,
    used: Vec<bool>,
    /// Next candidate value (1-based) to try at each depth.
    next_try: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Permutation::empty());
        }
        if self.started {
            // Backtrack off the previously emitted full permutation.
            self.pop();
        }
        self.started = true;
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                return Some(Permutation {
                    values: self.prefix.clone(),
                });
            }
            let mut advanced = false;
            for v in self.next_try[depth]..=self.n {
                if self.used[v] {
                    continue;
                }
                self.next_try[depth] = v + 1;
                self.prefix.push(v);
                if self
                    .patterns
                    .iter()
                    .any(|p| sequence_contains(&self.prefix, p.values()))
                {
                    self.prefix.pop();
                    continue;
                }
                self.used[v] = true;
                if self.prefix.len() < self.n {
                    self.next_try[self.prefix.len()] = 1;
                }
                advanced = true;
                break;
            }
            if !advanced {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}

impl Avoiders {
    fn pop(&mut self) {
        let v = self.prefix.pop().expect("pop on empty prefix");
        self.used[v] = false;
    }
}

/// Enumerates `Av_n(patterns)` in lexicographic order of one-line notation,
/// with the default brute-force bound.
pub fn enumerate_avoiders(n: usize, patterns: &[Pattern]) -> Result<Avoiders> {
    enumerate_avoiders_bounded(n, patterns, DEFAULT_ENUMERATION_BOUND)
}

/// Same as [`enumerate_avoiders`] with an explicit length bound.
pub fn enumerate_avoiders_bounded(n: usize, patterns: &[Pattern], bound: usize) -> Result<Avoiders> {
    if n > bound {
        return Err(Error::Resource(format!(
            "enumeration length {n} exceeds the brute-force bound {bound}"
        )));
    }
    Ok(Avoiders {
        n,
        patterns: patterns.to_vec(),
        prefix: Vec::with_capacity(n),
        used: vec![false; n + 1],
        next_try: vec![1; n.max(1)],
        started: false,
        done: false,
    })
}

/// True iff some prefix `pi_1..pi_k` (`1 <= k <= n-1`) has every value
/// greater than every value of the suffix.
pub fn is_skew_decomposable(perm: &Permutation) -> bool {
    let v = perm.values();
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut prefix_min = usize::MAX;
    let suffix_max = suffix_maxima(v);
    for k in 1..n {
        prefix_min = prefix_min.min(v[k - 1]);
        if prefix_min > suffix_max[k] {
            return true;
        }
    }
    false
}

fn suffix_maxima(v: &[usize]) -> Vec<usize> {
    // suffix_max[k] = max of v[k..]
    let n = v.len();
    let mut out = vec![0; n];
    let mut max = 0;
    for k in (0..n).rev() {
        max = max.max(v[k]);
        out[k] = max;
    }
    out
}

/// Maximal decomposition into skew-indecomposable blocks, each standardized
/// to a permutation of its own length. Concatenating the blocks with
/// appropriate value shifts (each block above all later blocks) recovers the
/// input.
pub fn skew_components(perm: &Permutation) -> Vec<Permutation> {
    let v = perm.values();
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let suffix_max = suffix_maxima(v);
    let mut cuts = vec![0];
    let mut prefix_min = usize::MAX;
    for k in 1..n {
        prefix_min = prefix_min.min(v[k - 1]);
        if prefix_min > suffix_max[k] {
            cuts.push(k);
        }
    }
    cuts.push(n);
    cuts.windows(2)
        .map(|w| standardize(&v[w[0]..w[1]]))
        .collect()
}

/// Maps the values of a duplicate-free sequence to their ranks, yielding a
/// permutation of the sequence's length.
pub fn standardize(values: &[usize]) -> Permutation {
    let mut sorted: Vec<usize> = values.to_vec();
    sorted.sort_unstable();
    let ranks = values
        .iter()
        .map(|v| sorted.binary_search(v).expect("value present") + 1)
        .collect();
    Permutation { values: ranks }
}
