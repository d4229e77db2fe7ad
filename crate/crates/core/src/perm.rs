//! Permutations in one-line notation, classical pattern containment and the
//! rectangle / k-box statistics.
//!
//! Positions and values are 1-based everywhere in the public API: position
//! `i` refers to `σ_i`, and a permutation of length `n` holds the values
//! `1..=n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("duplicate value {0}")]
    Duplicate(i64),
    #[error("value {value} is outside 1..={len}")]
    OutOfRange { value: i64, len: usize },
    #[error("position {position} is outside 1..={len}")]
    Position { position: usize, len: usize },
    #[error("permutation {0} is not separable")]
    NotSeparable(Permutation),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

/// Half-widths of an (a, b)-rectangle: `a` positions horizontally, `b` values
/// vertically. The k-box is `RectangleSpec::square(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RectangleSpec {
    pub a: usize,
    pub b: usize,
}

impl RectangleSpec {
    pub fn new(a: usize, b: usize) -> Self {
        RectangleSpec { a, b }
    }

    pub fn square(k: usize) -> Self {
        RectangleSpec { a: k, b: k }
    }

    pub fn transpose(self) -> Self {
        RectangleSpec { a: self.b, b: self.a }
    }
}

/// Sorted set of 1-based positions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatchSet(Vec<usize>);

impl MatchSet {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &MatchSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }
}

impl fmt::Display for MatchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl Permutation {
    /// Validates that `values` is a bijection onto `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(PermError::OutOfRange { value: v as i64, len: n });
            }
            if seen[idx] {
                return Err(PermError::Duplicate(v as i64));
            }
            seen[idx] = true;
        }
        Ok(Permutation(values))
    }

    /// Same as [`Permutation::new`] but accepts arbitrary signed integers.
    pub fn from_ints(values: &[i64]) -> Result<Self, PermError> {
        let n = values.len();
        let mut out = Vec::with_capacity(n);
        for &v in values {
            if v < 1 || v as u64 > n as u64 {
                return Err(PermError::OutOfRange { value: v, len: n });
            }
            out.push(v as u32);
        }
        Permutation::new(out)
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    /// `σ_i` for a 1-based position.
    pub fn at(&self, i: usize) -> Result<u32, PermError> {
        self.check_position(i)?;
        Ok(self.0[i - 1])
    }

    fn check_position(&self, i: usize) -> Result<(), PermError> {
        if i == 0 || i > self.len() {
            Err(PermError::Position { position: i, len: self.len() })
        } else {
            Ok(())
        }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Permutation {
        let n1 = self.len() as u32 + 1;
        Permutation(self.0.iter().map(|&v| n1 - v).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = pos as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn occurs_in(&self, target: &Permutation) -> bool {
        occurs(self, target)
    }

    /// Whether position `i` matches the (a,b)-rectangle pattern: some other
    /// point `(j, σ_j)` has `|i−j| ≤ a` and `|σ_i−σ_j| ≤ b`.
    pub fn rect_matches(&self, i: usize, spec: RectangleSpec) -> Result<bool, PermError> {
        self.check_position(i)?;
        Ok(rect_matches_slice(&self.0, i - 1, spec))
    }

    /// All positions matching the k-box pattern.
    pub fn kbox_set(&self, k: usize) -> MatchSet {
        let spec = RectangleSpec::square(k);
        MatchSet((0..self.len()).filter(|&i| rect_matches_slice(&self.0, i, spec)).map(|i| i + 1).collect())
    }

    /// Number of positions matching the 1-box pattern.
    pub fn bx(&self) -> usize {
        bx_slice(&self.0)
    }

    pub fn is_separable(&self) -> bool {
        is_separable(self)
    }

    pub fn separable_decompose(&self) -> Result<SeparableDecomposition, PermError> {
        separable_decompose(self)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = PermError;

    fn try_from(values: Vec<u32>) -> Result<Self, Self::Error> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    /// Compact digit form when `n ≤ 9`, otherwise space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        let compact = self.len() <= 9;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts comma- and/or whitespace-separated integers, or a compact
    /// digit string such as `471569283` (only when `n ≤ 9`). The strings
    /// `""`, `"()"` and `"ε"` denote the empty permutation.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "()" || trimmed == "ε" {
            return Ok(Permutation::empty());
        }
        let lead = s.len() - s.trim_start().len();
        let separated = trimmed.contains(|c: char| c == ',' || c.is_whitespace());
        let mut values = Vec::new();
        if separated {
            let mut offset = lead;
            for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
                if !token.is_empty() {
                    let v: i64 = token.parse().map_err(|_| PermError::Parse {
                        offset,
                        message: format!("expected an integer, found {token:?}"),
                    })?;
                    values.push(v);
                }
                offset += token.len() + 1;
            }
        } else {
            for (k, c) in trimmed.char_indices() {
                let d = c.to_digit(10).ok_or_else(|| PermError::Parse {
                    offset: lead + k,
                    message: format!("expected a digit, found {c:?}"),
                })?;
                values.push(d as i64);
            }
            if values.len() > 9 {
                return Err(PermError::Parse {
                    offset: lead + 9,
                    message: "compact digit form is limited to n <= 9; separate entries with spaces or commas".into(),
                });
            }
        }
        Permutation::from_ints(&values)
    }
}

/// `red[w]`: replaces the i-th smallest entry of `word` by `i`.
pub fn reduce(word: &[i64]) -> Result<Permutation, PermError> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&k| word[k]);
    if let Some(pair) = order.windows(2).find(|w| word[w[0]] == word[w[1]]) {
        return Err(PermError::Duplicate(word[pair[0]]));
    }
    let mut out = vec![0u32; word.len()];
    for (rank, &k) in order.iter().enumerate() {
        out[k] = rank as u32 + 1;
    }
    Ok(Permutation(out))
}

/// 1-box occurrences counted by the adjacent-difference rule.
pub(crate) fn bx_slice(values: &[u32]) -> usize {
    let n = values.len();
    let unit = |k: usize| values[k].abs_diff(values[k + 1]) == 1;
    (0..n)
        .filter(|&i| (i > 0 && unit(i - 1)) || (i + 1 < n && unit(i)))
        .count()
}

/// Windowed rectangle test on a 0-based position.
pub(crate) fn rect_matches_slice(values: &[u32], i: usize, spec: RectangleSpec) -> bool {
    let lo = i.saturating_sub(spec.a);
    let hi = (i + spec.a).min(values.len().saturating_sub(1));
    let centre = values[i];
    (lo..=hi).any(|j| j != i && centre.abs_diff(values[j]) as usize <= spec.b)
}

/// Classical containment of `pattern` in `target`.
///
/// Patterns of length at most 3 use a direct scan; longer patterns use a
/// backtracking search over positions that keeps, for each pattern entry,
/// the admissible value window implied by the entries already placed.
pub fn occurs(pattern: &Permutation, target: &Permutation) -> bool {
    occurs_slice(&pattern.0, &target.0)
}

pub fn avoids(pattern: &Permutation, target: &Permutation) -> bool {
    !occurs(pattern, target)
}

pub(crate) fn occurs_slice(pattern: &[u32], target: &[u32]) -> bool {
    let k = pattern.len();
    let n = target.len();
    if k > n {
        return false;
    }
    match k {
        0 => true,
        1 => true,
        2 => {
            // 12 occurs unless the target is decreasing, 21 unless increasing
            if pattern[0] < pattern[1] {
                !target.windows(2).all(|w| w[0] > w[1])
            } else {
                !target.windows(2).all(|w| w[0] < w[1])
            }
        }
        3 => occurs_len3(pattern, target),
        _ => {
            let mut chosen = vec![0u32; k];
            occurs_backtrack(pattern, target, 0, 0, &mut chosen)
        }
    }
}

/// For each middle position `j`, look for a left and a right partner on the
/// correct sides of `σ_j` whose mutual order matches the pattern.
fn occurs_len3(pattern: &[u32], target: &[u32]) -> bool {
    let (p0, p1, p2) = (pattern[0], pattern[1], pattern[2]);
    let left_above = p0 > p1;
    let right_above = p2 > p1;
    let left_below_right = p0 < p2;
    let n = target.len();
    // O(n²): both sides are rescanned for every middle point.
    for j in 1..n.saturating_sub(1) {
        let mid = target[j];
        let mut left_min = u32::MAX;
        let mut left_max = 0u32;
        for &v in &target[..j] {
            if (v > mid) == left_above {
                left_min = left_min.min(v);
                left_max = left_max.max(v);
            }
        }
        if left_max == 0 {
            continue;
        }
        let mut right_min = u32::MAX;
        let mut right_max = 0u32;
        for &v in &target[j + 1..] {
            if (v > mid) == right_above {
                right_min = right_min.min(v);
                right_max = right_max.max(v);
            }
        }
        if right_max == 0 {
            continue;
        }
        let found = if left_below_right { left_min < right_max } else { left_max > right_min };
        if found {
            return true;
        }
    }
    false
}

fn occurs_backtrack(pattern: &[u32], target: &[u32], depth: usize, start: usize, chosen: &mut [u32]) -> bool {
    let k = pattern.len();
    if depth == k {
        return true;
    }
    let need = pattern[depth];
    let mut lo = 0u32;
    let mut hi = u32::MAX;
    for d in 0..depth {
        if pattern[d] < need {
            lo = lo.max(chosen[d]);
        } else {
            hi = hi.min(chosen[d]);
        }
    }
    let remaining = k - depth;
    let last_start = target.len() - remaining;
    for pos in start..=last_start {
        let v = target[pos];
        if v > lo && v < hi {
            chosen[depth] = v;
            if occurs_backtrack(pattern, target, depth + 1, pos + 1, chosen) {
                return true;
            }
        }
    }
    false
}

const P2413: [u32; 4] = [2, 4, 1, 3];
const P3142: [u32; 4] = [3, 1, 4, 2];

pub fn is_separable(p: &Permutation) -> bool {
    is_separable_slice(&p.0)
}

pub(crate) fn is_separable_slice(values: &[u32]) -> bool {
    !occurs_slice(&P2413, values) && !occurs_slice(&P3142, values)
}

/// `π = L₁ L₂ ⋯ L_m n R_m ⋯ R₁` with `L₁ < R₁ < L₂ < ⋯ < L_m < R_m`.
///
/// `left[i]` holds `L_{i+1}` and `right[i]` holds `R_{i+1}`, so both vectors
/// are indexed in increasing value order. Only `left[0]` and `right[m-1]`
/// may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparableDecomposition {
    pub left: Vec<Vec<u32>>,
    /// 1-based position of the maximum `n`.
    pub max_position: usize,
    pub right: Vec<Vec<u32>>,
}

impl SeparableDecomposition {
    pub fn m(&self) -> usize {
        self.left.len()
    }

    pub fn reassemble(&self) -> Vec<u32> {
        let n = self.left.iter().chain(&self.right).map(Vec::len).sum::<usize>() + 1;
        let mut out = Vec::with_capacity(n);
        for block in &self.left {
            out.extend_from_slice(block);
        }
        out.push(n as u32);
        for block in self.right.iter().rev() {
            out.extend_from_slice(block);
        }
        out
    }
}

/// Splits the values below `n` into maximal runs lying on the same side of
/// `n`; runs alternate sides, so the decomposition is unique.
pub fn separable_decompose(p: &Permutation) -> Result<SeparableDecomposition, PermError> {
    if !is_separable(p) {
        return Err(PermError::NotSeparable(p.clone()));
    }
    let n = p.len();
    if n == 0 {
        return Err(PermError::Position { position: 1, len: 0 });
    }
    let max_idx = p.0.iter().position(|&v| v as usize == n).expect("bijection");
    if n == 1 {
        return Ok(SeparableDecomposition { left: vec![], max_position: 1, right: vec![] });
    }
    let on_left = {
        let mut side = vec![false; n];
        for &v in &p.0[..max_idx] {
            side[v as usize] = true;
        }
        side
    };
    let mut runs: Vec<(bool, Vec<u32>)> = Vec::new();
    for v in 1..n as u32 {
        let left = on_left[v as usize];
        match runs.last_mut() {
            Some((side, vals)) if *side == left => vals.push(v),
            _ => runs.push((left, vec![v])),
        }
    }
    let mut left_sets: Vec<Vec<u32>> = Vec::new();
    let mut right_sets: Vec<Vec<u32>> = Vec::new();
    if !runs[0].0 {
        left_sets.push(Vec::new());
    }
    for (side, vals) in runs {
        if side {
            left_sets.push(vals);
        } else {
            right_sets.push(vals);
        }
    }
    if right_sets.len() < left_sets.len() {
        right_sets.push(Vec::new());
    }
    debug_assert_eq!(left_sets.len(), right_sets.len());

    // Blocks must occupy contiguous positions in the order the structure
    // requires; for a separable input this always holds.
    let left = cut_blocks(&p.0[..max_idx], &left_sets).ok_or_else(|| PermError::NotSeparable(p.clone()))?;
    let right_in_position_order: Vec<Vec<u32>> = right_sets.iter().rev().cloned().collect();
    let mut right =
        cut_blocks(&p.0[max_idx + 1..], &right_in_position_order).ok_or_else(|| PermError::NotSeparable(p.clone()))?;
    right.reverse();
    Ok(SeparableDecomposition { left, max_position: max_idx + 1, right })
}

fn cut_blocks(word: &[u32], value_sets: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let mut out = Vec::with_capacity(value_sets.len());
    let mut at = 0;
    for set in value_sets {
        let block = &word[at..at + set.len()];
        let got: BTreeSet<u32> = block.iter().copied().collect();
        if !got.iter().eq(set.iter()) {
            return None;
        }
        out.push(block.to_vec());
        at += set.len();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Definition-level containment: some subsequence reduces to the pattern.
    fn occurs_brute(pattern: &[u32], target: &[u32]) -> bool {
        fn rec(pattern: &[u32], target: &[u32], start: usize, picked: &mut Vec<u32>) -> bool {
            if picked.len() == pattern.len() {
                let word: Vec<i64> = picked.iter().map(|&v| v as i64).collect();
                return reduce(&word).unwrap().values() == pattern;
            }
            for pos in start..target.len() {
                picked.push(target[pos]);
                if rec(pattern, target, pos + 1, picked) {
                    return true;
                }
                picked.pop();
            }
            false
        }
        rec(pattern, target, 0, &mut Vec::new())
    }

    fn all_perms(n: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(cur.clone());
            if !crate::oracle::next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    #[test]
    fn construction_and_validation() {
        let sigma = Permutation::new(vec![4, 7, 1, 5, 6, 9, 2, 8, 3]).unwrap();
        assert_eq!(sigma.len(), 9);
        assert_eq!(Permutation::new(vec![]).unwrap().len(), 0);
        assert_eq!(Permutation::new(vec![1, 1]), Err(PermError::Duplicate(1)));
        assert_eq!(Permutation::new(vec![1, 3]), Err(PermError::OutOfRange { value: 3, len: 2 }));
        assert_eq!(Permutation::from_ints(&[0, 1]), Err(PermError::OutOfRange { value: 0, len: 2 }));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("4 7 1 5 6 9 2 8 3"), p("471569283"));
        assert_eq!(p("4,7,1, 5,6,9,2,8,3"), p("471569283"));
        assert_eq!(p("10 9 8 7 6 5 4 3 2 1"), Permutation::decreasing(10));
        assert!(matches!("1234567891".parse::<Permutation>(), Err(PermError::Parse { .. })));
        assert_eq!("1 x 2".parse::<Permutation>(), Err(PermError::Parse { offset: 2, message: "expected an integer, found \"x\"".into() }));
        assert_eq!("12a".parse::<Permutation>().unwrap_err(), PermError::Parse { offset: 2, message: "expected a digit, found 'a'".into() });
        assert_eq!(p(""), Permutation::empty());
        assert_eq!(p("2413").to_string(), "2413");
        assert_eq!(Permutation::decreasing(10).to_string(), "10 9 8 7 6 5 4 3 2 1");
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce(&[2, 7, 5, 4]).unwrap(), p("1432"));
        assert_eq!(reduce(&[1, 2, 3]).unwrap(), p("123"));
        assert_eq!(reduce(&[10, 3]).unwrap(), p("21"));
        assert_eq!(reduce(&[5, -1, 5]), Err(PermError::Duplicate(5)));
    }

    #[test]
    fn containment_examples() {
        assert!(occurs(&p("132"), &p("2413")));
        assert!(occurs_brute(&[1, 3, 2], &[2, 4, 1, 3]));
        assert!(!occurs(&p("132"), &p("4321")));
        assert!(occurs(&p("1"), &p("4321")));
        assert!(avoids(&p("132"), &Permutation::empty()));
        assert!(avoids(&p("2413"), &p("215643")));
        assert!(!avoids(&p("12"), &p("312")));
        assert!(avoids(&p("12"), &p("321")));
    }

    #[test]
    fn catalan_count_of_132_avoiders_in_s4() {
        let c = all_perms(4).into_iter().filter(|s| !occurs_slice(&[1, 3, 2], s)).count();
        assert_eq!(c, 14);
    }

    #[test]
    fn fast_containment_agrees_with_subsequence_definition() {
        let mut patterns = Vec::new();
        for k in 1..=4 {
            patterns.extend(all_perms(k));
        }
        for n in 0..=7 {
            for target in all_perms(n) {
                for pat in &patterns {
                    assert_eq!(
                        occurs_slice(pat, &target),
                        occurs_brute(pat, &target),
                        "pattern {pat:?} target {target:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn separability() {
        assert!(p("215643").is_separable());
        assert!(!p("2413").is_separable());
        assert!(!p("3142").is_separable());
        assert!(p("1").is_separable());
        assert!(Permutation::empty().is_separable());
    }

    #[test]
    fn decomposition_of_printed_example() {
        let d = p("215643").separable_decompose().unwrap();
        assert_eq!(d.left, vec![vec![2, 1], vec![5]]);
        assert_eq!(d.right, vec![vec![4, 3], vec![]]);
        assert_eq!(d.max_position, 4);
        assert_eq!(d.reassemble(), vec![2, 1, 5, 6, 4, 3]);
    }

    #[test]
    fn decomposition_of_decreasing_and_trivial() {
        let d = p("321").separable_decompose().unwrap();
        assert_eq!(d.left, vec![Vec::<u32>::new()]);
        assert_eq!(d.right, vec![vec![2, 1]]);
        assert_eq!(d.max_position, 1);
        assert_eq!(d.reassemble(), vec![3, 2, 1]);

        let d = p("1").separable_decompose().unwrap();
        assert_eq!(d.m(), 0);
        assert_eq!(d.max_position, 1);

        assert!(matches!(p("2413").separable_decompose(), Err(PermError::NotSeparable(_))));
    }

    #[test]
    fn decomposition_invariants_hold_on_all_separables_up_to_8() {
        for n in 1..=8 {
            for v in all_perms(n) {
                if !is_separable_slice(&v) {
                    continue;
                }
                let d = separable_decompose(&Permutation(v.clone())).unwrap();
                assert_eq!(d.reassemble(), v);
                let m = d.m();
                assert_eq!(d.right.len(), m);
                // value interleaving L1 < R1 < L2 < ... with every block an interval
                let mut next = 1u32;
                for i in 0..m {
                    for (is_left, block) in [(true, &d.left[i]), (false, &d.right[i])] {
                        let optional = (is_left && i == 0) || (!is_left && i == m - 1);
                        assert!(optional || !block.is_empty(), "{v:?}");
                        let mut sorted = block.clone();
                        sorted.sort_unstable();
                        let expect: Vec<u32> = (next..next + block.len() as u32).collect();
                        assert_eq!(sorted, expect, "{v:?}");
                        next += block.len() as u32;
                    }
                }
            }
        }
    }

    #[test]
    fn rectangle_matches() {
        let sigma = p("471569283");
        for k in 1..=9 {
            assert!(sigma.rect_matches(4, RectangleSpec::square(k)).unwrap());
        }
        assert!(!sigma.rect_matches(3, RectangleSpec::square(2)).unwrap());
        assert!(sigma.rect_matches(3, RectangleSpec::square(3)).unwrap());
        assert!(!p("1").rect_matches(1, RectangleSpec::new(5, 5)).unwrap());
        assert_eq!(sigma.rect_matches(10, RectangleSpec::square(1)), Err(PermError::Position { position: 10, len: 9 }));
        assert!(matches!(sigma.rect_matches(0, RectangleSpec::square(1)), Err(PermError::Position { .. })));
    }

    #[test]
    fn kbox_sets() {
        let sigma = p("471569283");
        assert_eq!(sigma.kbox_set(1).indices(), &[4, 5]);
        assert!(sigma.kbox_set(3).contains(3));
        for n in 2..=9 {
            assert_eq!(Permutation::identity(n).kbox_set(1).indices(), (1..=n).collect::<Vec<_>>().as_slice());
        }
        assert_eq!(sigma.kbox_set(1).to_string(), "{4, 5}");
    }

    #[test]
    fn one_box_counts_from_small_tables() {
        assert_eq!(p("2413").bx(), 0);
        assert_eq!(p("3142").bx(), 0);
        assert_eq!(p("12").bx(), 2);
        assert_eq!(p("1324").bx(), 2);
        assert_eq!(p("4321").bx(), 4);
        assert_eq!(p("1").bx(), 0);
        assert_eq!(Permutation::empty().bx(), 0);
    }

    #[test]
    fn symmetry_transforms() {
        assert_eq!(p("123").reverse(), p("321"));
        assert_eq!(p("132").complement(), p("312"));
        assert_eq!(p("2413").inverse(), p("3142"));
        assert_eq!(Permutation::empty().inverse(), Permutation::empty());
    }

    #[test]
    fn serde_rejects_invalid() {
        let ok: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(ok, p("213"));
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
    }
}
