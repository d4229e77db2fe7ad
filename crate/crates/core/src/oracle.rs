//! Exhaustive enumeration of permutation classes and empirical 1-box
//! distributions. This is the ground truth every algebraic route is checked
//! against, so it only ever counts permutations one by one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::perm::{bx_slice, is_separable_slice, occurs_slice, Permutation};
use crate::poly::IntPoly;

/// Environment variable that raises both enumeration guards.
pub const MAX_N_ENV: &str = "BOXPAT_MAX_N";

pub const DEFAULT_MAX_ALL: usize = 12;
pub const DEFAULT_MAX_STRUCTURAL: usize = 16;
/// Separable permutations grow like 5.83^n, much faster than Catalan.
pub const DEFAULT_MAX_SEPARABLE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("refusing to enumerate {class} at n={n} via {route}: limit is {limit} (raise it with {MAX_N_ENV})")]
    Guard { class: PermClass, route: Route, n: usize, limit: usize },
    #[error("unknown permutation class {0:?}")]
    UnknownClass(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PermClass {
    All,
    Avoid132,
    /// 132-avoiders with `σ₁ = n`.
    Avoid132FirstMax,
    /// 132-avoiders with `σ_n = n`.
    Avoid132LastMax,
    Separable,
}

impl PermClass {
    pub const ALL: [PermClass; 5] =
        [PermClass::All, PermClass::Avoid132, PermClass::Avoid132FirstMax, PermClass::Avoid132LastMax, PermClass::Separable];

    pub fn tag(self) -> &'static str {
        match self {
            PermClass::All => "all",
            PermClass::Avoid132 => "avoid132",
            PermClass::Avoid132FirstMax => "avoid132-first-max",
            PermClass::Avoid132LastMax => "avoid132-last-max",
            PermClass::Separable => "separable",
        }
    }

    /// Membership predicate, used by the filter route.
    pub fn contains(self, values: &[u32]) -> bool {
        let n = values.len() as u32;
        match self {
            PermClass::All => true,
            PermClass::Avoid132 => !occurs_slice(&[1, 3, 2], values),
            PermClass::Avoid132FirstMax => values.first() == Some(&n) && !occurs_slice(&[1, 3, 2], values),
            PermClass::Avoid132LastMax => values.last() == Some(&n) && !occurs_slice(&[1, 3, 2], values),
            PermClass::Separable => is_separable_slice(values),
        }
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PermClass {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PermClass::ALL.into_iter().find(|c| c.tag() == s).ok_or_else(|| OracleError::UnknownClass(s.to_string()))
    }
}

impl Serialize for PermClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

/// How a class is generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Build members directly from their block structure.
    Structural,
    /// Walk all of `S_n` and keep members.
    Filter,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Structural => "structural generation",
            Route::Filter => "filtering S_n",
        })
    }
}

/// Size guards: full `S_n` walks and structural generators are refused
/// beyond these lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_all: usize,
    pub max_structural: usize,
    pub max_separable: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_all: DEFAULT_MAX_ALL, max_structural: DEFAULT_MAX_STRUCTURAL, max_separable: DEFAULT_MAX_SEPARABLE }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits { max_all: usize::MAX, max_structural: usize::MAX, max_separable: usize::MAX }
    }

    /// Defaults, with every guard replaced by `$BOXPAT_MAX_N` when set.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(n) => Limits { max_all: n, max_structural: n, max_separable: n },
            None => Limits::default(),
        }
    }
}

/// Where a distribution row came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Oracle,
    Recurrence,
    ClosedForm,
}

/// `n ↦ Σ x^{bx(σ)}` over one class, tagged with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionTable {
    pub class: PermClass,
    pub rows: BTreeMap<usize, IntPoly>,
    pub provenance: Provenance,
}

impl DistributionTable {
    pub fn new(class: PermClass, provenance: Provenance) -> Self {
        DistributionTable { class, rows: BTreeMap::new(), provenance }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Oracle {
    limits: Limits,
}

impl Oracle {
    pub fn new(limits: Limits) -> Self {
        Oracle { limits }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Fails if enumerating `class` at length `n` via `route` would exceed the
    /// configured limits. Callers sweeping `0..=nmax` check `nmax` first.
    pub fn guard(&self, class: PermClass, n: usize, route: Route) -> Result<(), OracleError> {
        let full_walk = class == PermClass::All || route == Route::Filter;
        let limit = match (full_walk, class) {
            (true, _) => self.limits.max_all,
            (false, PermClass::Separable) => self.limits.max_separable,
            (false, _) => self.limits.max_structural,
        };
        if n > limit {
            let route = if class == PermClass::All { Route::Filter } else { route };
            return Err(OracleError::Guard { class, route, n, limit });
        }
        Ok(())
    }

    /// Members of `class` of length `n`, each once, in lexicographic order.
    pub fn enumerate(&self, class: PermClass, n: usize) -> Result<Vec<Permutation>, OracleError> {
        self.enumerate_via(class, n, Route::Structural)
    }

    pub fn enumerate_via(&self, class: PermClass, n: usize, route: Route) -> Result<Vec<Permutation>, OracleError> {
        let mut out = Vec::new();
        self.for_each(class, n, route, |v| out.push(Permutation::from_vec_unchecked(v.to_vec())))?;
        out.sort_unstable();
        Ok(out)
    }

    /// Calls `f` once per member; the order is unspecified.
    pub fn for_each(
        &self,
        class: PermClass,
        n: usize,
        route: Route,
        mut f: impl FnMut(&[u32]),
    ) -> Result<(), OracleError> {
        self.guard(class, n, route)?;
        for part in 0..part_count(class, n, route) {
            visit_part(class, n, route, part, &mut f);
        }
        Ok(())
    }

    /// `hist[m]` = number of members with exactly `m` 1-box occurrences.
    /// Work is split across threads by the top-level generation choice.
    pub fn histogram_via(&self, class: PermClass, n: usize, route: Route) -> Result<Vec<u64>, OracleError> {
        self.guard(class, n, route)?;
        let hist = (0..part_count(class, n, route))
            .into_par_iter()
            .map(|part| {
                let mut local = vec![0u64; n + 1];
                visit_part(class, n, route, part, &mut |v: &[u32]| local[bx_slice(v)] += 1);
                local
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        Ok(hist)
    }

    pub fn histogram(&self, class: PermClass, n: usize) -> Result<Vec<u64>, OracleError> {
        self.histogram_via(class, n, Route::Structural)
    }

    /// `Σ x^{bx(σ)}` over the class at length `n`.
    pub fn distribution(&self, class: PermClass, n: usize) -> Result<IntPoly, OracleError> {
        Ok(histogram_to_poly(&self.histogram(class, n)?))
    }

    pub fn distribution_via(&self, class: PermClass, n: usize, route: Route) -> Result<IntPoly, OracleError> {
        Ok(histogram_to_poly(&self.histogram_via(class, n, route)?))
    }

    /// Nonzero entries of the histogram, keyed by occurrence count.
    pub fn count_by_occurrences(&self, class: PermClass, n: usize) -> Result<BTreeMap<usize, u64>, OracleError> {
        Ok(self.histogram(class, n)?.into_iter().enumerate().filter(|&(_, c)| c > 0).collect())
    }

    pub fn class_size(&self, class: PermClass, n: usize) -> Result<u64, OracleError> {
        Ok(self.histogram(class, n)?.iter().sum())
    }

    pub fn table(&self, class: PermClass, sizes: impl IntoIterator<Item = usize>) -> Result<DistributionTable, OracleError> {
        let mut table = DistributionTable::new(class, Provenance::Oracle);
        for n in sizes {
            table.rows.insert(n, self.distribution(class, n)?);
        }
        Ok(table)
    }
}

fn histogram_to_poly(hist: &[u64]) -> IntPoly {
    IntPoly::from_coeffs(hist.iter().map(|&c| BigInt::from(c)).collect())
}

/// Lexicographic successor in place; `false` once `values` is decreasing.
pub(crate) fn next_permutation(values: &mut [u32]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

fn part_count(class: PermClass, n: usize, route: Route) -> usize {
    if n == 0 {
        return match class {
            PermClass::Avoid132FirstMax | PermClass::Avoid132LastMax => 0,
            _ => 1,
        };
    }
    match (class, route) {
        (PermClass::All, _) | (_, Route::Filter) => n,
        (PermClass::Avoid132, Route::Structural) => n,
        (PermClass::Avoid132FirstMax | PermClass::Avoid132LastMax, Route::Structural) => 1,
        (PermClass::Separable, Route::Structural) => 1 << (n - 1),
    }
}

fn visit_part(class: PermClass, n: usize, route: Route, part: usize, f: &mut dyn FnMut(&[u32])) {
    let mut buf = vec![0u32; n];
    if n == 0 {
        f(&buf);
        return;
    }
    let n32 = n as u32;
    match (class, route) {
        (PermClass::All, _) | (_, Route::Filter) => {
            // S_n restricted to first entry `part + 1`, in lexicographic order
            buf[0] = part as u32 + 1;
            let rest: Vec<u32> = (1..=n32).filter(|&v| v != buf[0]).collect();
            buf[1..].copy_from_slice(&rest);
            loop {
                if class.contains(&buf) {
                    f(&buf);
                }
                if !next_permutation(&mut buf[1..]) {
                    break;
                }
            }
        }
        (PermClass::Avoid132, Route::Structural) => {
            place_132_max(&mut buf, 0, n, 0, part, &mut |b| f(b));
        }
        (PermClass::Avoid132FirstMax, Route::Structural) => {
            place_132_max(&mut buf, 0, n, 0, 0, &mut |b| f(b));
        }
        (PermClass::Avoid132LastMax, Route::Structural) => {
            place_132_max(&mut buf, 0, n, 0, n - 1, &mut |b| f(b));
        }
        (PermClass::Separable, Route::Structural) => {
            separable_with_sides(&mut buf, 0, n, 0, part as u64, &mut |b| f(b));
        }
    }
}

/// Fills `buf[start..start+len]` with every 132-avoiding arrangement of
/// `base+1 ..= base+len`, calling `k` on each completed buffer.
fn gen_132(buf: &mut [u32], start: usize, len: usize, base: u32, k: &mut dyn FnMut(&mut [u32])) {
    if len == 0 {
        k(buf);
        return;
    }
    for max_at in 0..len {
        place_132_max(buf, start, len, base, max_at, k);
    }
}

/// The block maximum sits at offset `max_at`; entries to its left are a
/// 132-avoider on the `max_at` largest remaining values, entries to its
/// right a 132-avoider on the smallest ones.
fn place_132_max(buf: &mut [u32], start: usize, len: usize, base: u32, max_at: usize, k: &mut dyn FnMut(&mut [u32])) {
    buf[start + max_at] = base + len as u32;
    let right_len = len - 1 - max_at;
    gen_132(buf, start, max_at, base + right_len as u32, &mut |b| gen_132(b, start + max_at + 1, right_len, base, &mut *k));
}

fn gen_separable(buf: &mut [u32], start: usize, len: usize, base: u32, k: &mut dyn FnMut(&mut [u32])) {
    if len == 0 {
        k(buf);
        return;
    }
    for sides in 0..(1u64 << (len - 1)) {
        separable_with_sides(buf, start, len, base, sides, k);
    }
}

/// Bit `v−1` of `sides` puts value `v` (relative to the block) left of the
/// block maximum. Maximal runs of same-side values become the blocks
/// `L₁, R₁, L₂, …`; left blocks appear in increasing value order, right
/// blocks in decreasing value order, and each is filled with every
/// separable permutation of its size.
fn separable_with_sides(buf: &mut [u32], start: usize, len: usize, base: u32, sides: u64, k: &mut dyn FnMut(&mut [u32])) {
    let mut runs: Vec<(bool, usize, u32)> = Vec::new(); // (left?, size, first value - 1)
    for v in 1..len as u32 {
        let left = sides >> (v - 1) & 1 == 1;
        match runs.last_mut() {
            Some((side, size, _)) if *side == left => *size += 1,
            _ => runs.push((left, 1, base + v - 1)),
        }
    }
    let left_total: usize = runs.iter().filter(|r| r.0).map(|r| r.1).sum();
    buf[start + left_total] = base + len as u32;

    let mut blocks: Vec<(usize, usize, u32)> = Vec::with_capacity(runs.len());
    let mut at = start;
    for &(_, size, b) in runs.iter().filter(|r| r.0) {
        blocks.push((at, size, b));
        at += size;
    }
    at = start + left_total + 1;
    for &(_, size, b) in runs.iter().rev().filter(|r| !r.0) {
        blocks.push((at, size, b));
        at += size;
    }
    fill_blocks(buf, &blocks, k);
}

fn fill_blocks(buf: &mut [u32], blocks: &[(usize, usize, u32)], k: &mut dyn FnMut(&mut [u32])) {
    match blocks.split_first() {
        None => k(buf),
        Some((&(pos, size, base), rest)) => gen_separable(buf, pos, size, base, &mut |b| fill_blocks(b, rest, &mut *k)),
    }
}
