//! Permutations in one-line notation and split-pattern containment.
//!
//! Positions and values are 1-indexed at every public boundary. A split
//! pattern `u1|u2` is a pattern permutation `u` of size `k` together with a
//! split index `j`; `w` contains it with respect to position `r` when some
//! increasing index sequence `i_1 < … < i_k` reproduces the relative order
//! of `u` and satisfies `i_j <= r < i_{j+1}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("duplicate value {0}")]
    Duplicate(usize),
    #[error("value {value} out of range 1..={len}")]
    OutOfRange { value: usize, len: usize },
    #[error("values must be positive")]
    NonPositive,
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("position {pos} out of range {lo}..={hi}")]
    Position { pos: usize, lo: usize, hi: usize },
    #[error("split index {split} exceeds pattern size {len}")]
    Split { split: usize, len: usize },
    #[error("operation needs a non-empty permutation")]
    Empty,
}

fn check_range(pos: usize, lo: usize, hi: usize) -> Result<(), PermError> {
    if pos < lo || pos > hi {
        Err(PermError::Position { pos, lo, hi })
    } else {
        Ok(())
    }
}

/// A permutation of `{1, …, n}` in one-line notation. `n = 0` is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let len = values.len();
        let mut seen = vec![false; len + 1];
        for &v in &values {
            if v == 0 {
                return Err(PermError::NonPositive);
            }
            if v > len {
                return Err(PermError::OutOfRange { value: v, len });
            }
            if seen[v] {
                return Err(PermError::Duplicate(v));
            }
            seen[v] = true;
        }
        Ok(Self { values })
    }

    /// Validates signed input, rejecting zero and negative entries.
    pub fn from_signed(values: &[i64]) -> Result<Self, PermError> {
        let values = values
            .iter()
            .map(|&v| usize::try_from(v).ok().filter(|&v| v > 0).ok_or(PermError::NonPositive))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(values)
    }

    /// Caller guarantees `values` is a rearrangement of `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `w(k)` for `1 <= k <= n`.
    pub fn get(&self, k: usize) -> Option<usize> {
        k.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// 1-indexed position holding `value`.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.values.iter().position(|&v| v == value).map(|i| i + 1)
    }

    /// Values at positions `1..=r`.
    pub fn left_set(&self, r: usize) -> Result<BTreeSet<usize>, PermError> {
        check_range(r, 0, self.len())?;
        Ok(self.values[..r].iter().copied().collect())
    }

    /// Values at positions `r+1..=n`.
    pub fn right_set(&self, r: usize) -> Result<BTreeSet<usize>, PermError> {
        check_range(r, 0, self.len())?;
        Ok(self.values[r..].iter().copied().collect())
    }

    /// Deletes the value `n` from the one-line notation.
    pub fn remove_max(&self) -> Result<Permutation, PermError> {
        let n = self.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let values = self.values.iter().copied().filter(|&v| v != n).collect();
        Ok(Self { values })
    }

    /// Inserts the new maximum `n + 1` so that it lands at position `pos`.
    pub fn insert_max(&self, pos: usize) -> Result<Permutation, PermError> {
        let n = self.len();
        check_range(pos, 1, n + 1)?;
        let mut values = self.values.clone();
        values.insert(pos - 1, n + 1);
        Ok(Self { values })
    }

    /// Rotates the permutation matrix by 180 degrees: `k -> n+1-w(n+1-k)`.
    pub fn rotate180(&self) -> Permutation {
        let n = self.len();
        let values = self.values.iter().rev().map(|&v| n + 1 - v).collect();
        Self { values }
    }

    /// `r_w[i, j]`: number of positions `k <= j` with `w(k) <= i`.
    pub fn rank(&self, i: usize, j: usize) -> Result<usize, PermError> {
        let n = self.len();
        check_range(i, 0, n)?;
        check_range(j, 0, n)?;
        Ok(self.values[..j].iter().filter(|&&v| v <= i).count())
    }

    /// Lexicographically smallest witness of `pattern` with respect to `r`.
    pub fn contains_split(
        &self,
        pattern: &SplitPattern,
        r: usize,
    ) -> Result<Option<PatternWitness>, PermError> {
        check_range(r, 0, self.len())?;
        let mut chosen = Vec::with_capacity(pattern.len());
        if self.search(pattern, r, 0, &mut chosen) {
            Ok(Some(PatternWitness {
                indices: chosen.into_iter().map(|i| i + 1).collect(),
            }))
        } else {
            Ok(None)
        }
    }

    // Depth-first over increasing 0-indexed positions. Slot `t` must sit at
    // or before `r` when `t < split`, strictly after it otherwise.
    fn search(&self, pattern: &SplitPattern, r: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        let t = chosen.len();
        let k = pattern.len();
        if t == k {
            return true;
        }
        let (lo, hi) = if t < pattern.split { (start, r) } else { (start.max(r), self.len()) };
        // leave room for the remaining slots
        let hi = hi.min((self.len() + 1 + t).saturating_sub(k));
        let u = pattern.pattern.values();
        for pos in lo..hi {
            let v = self.values[pos];
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(s, &p)| (self.values[p] < v) == (u[s] < u[t]));
            if fits {
                chosen.push(pos);
                if self.search(pattern, r, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// Membership in `K(r, n)`: avoids both `3|12` and `23|1` at `r`.
    ///
    /// Uses the direct characterisation of the two length-3 patterns rather
    /// than the general search.
    pub fn in_k(&self, r: usize) -> Result<bool, PermError> {
        check_range(r, 0, self.len())?;
        Ok(avoids_builtin_pair(&self.values, r))
    }

    /// Whether the projection of the Schubert variety `X_w` to `Gr(r, n)` is
    /// a locally trivial fiber bundle. Combinatorially this is `in_k`.
    pub fn is_fiber_bundle(&self, r: usize) -> Result<bool, PermError> {
        check_range(r, 1, self.len())?;
        self.in_k(r)
    }

    fn fmt_with(&self, compact: bool) -> String {
        if compact {
            self.values.iter().map(|v| v.to_string()).collect()
        } else {
            self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// Comma-separated form, valid for any `n`.
    pub fn to_list_string(&self) -> String {
        self.fmt_with(false)
    }
}

// 3|12 at r: some left value exceeds both ends of an ascent on the right.
// 23|1 at r: some right value lies below both ends of an ascent on the left.
pub(crate) fn avoids_builtin_pair(w: &[usize], r: usize) -> bool {
    let (left, right) = w.split_at(r);
    if let Some(&max_left) = left.iter().max() {
        let mut low = usize::MAX;
        for &v in right {
            if v > low && v < max_left {
                return false;
            }
            low = low.min(v);
        }
    }
    if let Some(&min_right) = right.iter().min() {
        let mut low = usize::MAX;
        for &v in left {
            if v > low {
                return false;
            }
            if v > min_right {
                low = low.min(v);
            }
        }
    }
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(self.len() <= 9))
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts the compact digit string (`315642`) or a comma-separated
    /// list (`3,1,5,6,4,2`). The empty string is the empty permutation.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || PermError::Parse(s.to_string());
        let values: Vec<i64> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(i64::from).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Self::from_signed(&values)
    }
}

/// A pattern permutation divided after its first `split` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPattern {
    pattern: Permutation,
    split: usize,
}

impl SplitPattern {
    pub fn new(pattern: Permutation, split: usize) -> Result<Self, PermError> {
        if split > pattern.len() {
            return Err(PermError::Split { split, len: pattern.len() });
        }
        Ok(Self { pattern, split })
    }

    /// `3|12`
    pub fn p3_12() -> Self {
        Self { pattern: Permutation::from_vec_unchecked(vec![3, 1, 2]), split: 1 }
    }

    /// `23|1`
    pub fn p23_1() -> Self {
        Self { pattern: Permutation::from_vec_unchecked(vec![2, 3, 1]), split: 2 }
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty()
    }
}

impl fmt::Display for SplitPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.pattern.values();
        let sep = if self.len() <= 9 { "" } else { "," };
        let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep);
        write!(f, "{}|{}", join(&v[..self.split]), join(&v[self.split..]))
    }
}

/// Positions `i_1 < … < i_k` (1-indexed) realising a pattern occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub indices: Vec<usize>,
}

impl PatternWitness {
    /// Re-checks the witness against `w`, `pattern` and `r` from scratch.
    pub fn is_valid_for(&self, w: &Permutation, pattern: &SplitPattern, r: usize) -> bool {
        let idx = &self.indices;
        let k = pattern.len();
        if idx.len() != k || idx.windows(2).any(|p| p[0] >= p[1]) {
            return false;
        }
        if idx.iter().any(|&i| i == 0 || i > w.len()) {
            return false;
        }
        let j = pattern.split();
        if j > 0 && idx[j - 1] > r {
            return false;
        }
        if j < k && idx[j] <= r {
            return false;
        }
        let u = pattern.pattern().values();
        (0..k).all(|a| {
            (0..k).all(|b| (w.values()[idx[a] - 1] < w.values()[idx[b] - 1]) == (u[a] < u[b]))
        })
    }
}
