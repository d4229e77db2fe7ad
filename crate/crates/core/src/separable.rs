//! Separable permutations counted by their number of 1-box occurrences.
//!
//! Exactly two occurrences: `c_n = 2c_{n−1} + c_{n−2}` (twice the Pell
//! numbers). Exactly three: `c_{n−1}`. None or exactly one: impossible for
//! `n ≥ 2`. Four occurrences and the all-positions case have no closed form
//! here; they are counted by brute force and compared with the known
//! prefixes.

use num_bigint::BigInt;
use serde::Serialize;

use crate::analytic::pell_numbers;
use crate::oracle::{Oracle, OracleError, PermClass, Route};
use crate::report::Report;
use crate::sequence::SequenceTable;
use crate::series::TruncSeries;

/// OEIS identifier of `c_n`.
pub const C_OEIS: &str = "A052542";

/// `c_0 … c_10`.
pub const C_PRINTED: [u64; 11] = [0, 0, 2, 4, 10, 24, 58, 140, 338, 816, 1970];
/// Exactly four occurrences, `n = 0 … 8`.
pub const FOUR_OCC_PRINTED: [u64; 9] = [0, 0, 0, 0, 8, 42, 178, 664, 2288];
/// Every position an occurrence, `n = 0 … 8`.
pub const MAX_OCC_PRINTED: [u64; 9] = [0, 0, 2, 2, 8, 14, 54, 128, 466];

const ORIGIN_NOTE: &str = "four_occ and max_occ are indexed from n=0";
const EMPTY_NOTE: &str = "max_occ(0) = 0: the empty permutation is not counted";

/// `c_0 … c_nmax` by the recurrence. Also expands `2t²/(1−2t−t²)` and
/// checks `c_n = 2·P_{n−1}`; a disagreement is a bug and panics.
pub fn c_by_recurrence(nmax: usize) -> SequenceTable {
    let mut c: Vec<BigInt> = [0, 0, 2].iter().map(|&v| BigInt::from(v)).collect();
    for n in 3..=nmax {
        let next = &c[n - 1] * 2 + &c[n - 2];
        c.push(next);
    }
    c.truncate(nmax + 1);

    let gf = TruncSeries::from_ints(nmax, &[0, 0, 2])
        .mul(&TruncSeries::from_ints(nmax, &[1, -2, -1]).inv().expect("unit constant term"))
        .expect("same order")
        .to_integral()
        .expect("integral expansion")
        .constants();
    assert_eq!(gf, c, "c_n recurrence and generating function disagree");
    let pell = pell_numbers(nmax);
    for n in 1..=nmax {
        assert_eq!(c[n], &pell[n - 1] * 2, "c_n != 2 P(n-1) at n={n}");
    }
    SequenceTable::new("c", 0, c).with_comment(C_OEIS)
}

/// Number of separable permutations of length `n` for `n = 0 … nmax`:
/// `1` followed by the large Schröder numbers, from
/// `(1 − t − √(1 − 6t + t²)) / (2t)`.
pub fn separable_class_sizes(nmax: usize) -> Vec<BigInt> {
    let work = nmax + 1;
    let root = TruncSeries::from_ints(work, &[1, -6, 1]).sqrt().expect("unit constant term");
    let schroder = TruncSeries::from_ints(work, &[1, -1])
        .sub(&root)
        .and_then(|s| s.div_exact(&TruncSeries::from_ints(work, &[0, 2])))
        .expect("exact division")
        .to_integral()
        .expect("integral expansion")
        .constants();
    std::iter::once(BigInt::from(1)).chain(schroder).take(nmax + 1).collect()
}

/// Brute-force occurrence histograms of the separable class, `n = 0 … nmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparableHistograms {
    hist: Vec<Vec<u64>>,
}

impl SeparableHistograms {
    pub fn compute(oracle: &Oracle, nmax: usize) -> Result<Self, OracleError> {
        oracle.guard(PermClass::Separable, nmax, Route::Structural)?;
        let hist = (0..=nmax)
            .map(|n| oracle.histogram(PermClass::Separable, n))
            .collect::<Result<_, _>>()?;
        Ok(SeparableHistograms { hist })
    }

    pub fn nmax(&self) -> usize {
        self.hist.len() - 1
    }

    /// Separable permutations of length `n` with exactly `m` occurrences.
    pub fn count(&self, n: usize, m: usize) -> u64 {
        self.hist[n].get(m).copied().unwrap_or(0)
    }

    pub fn class_size(&self, n: usize) -> u64 {
        self.hist[n].iter().sum()
    }

    pub fn column(&self, m: usize) -> Vec<u64> {
        (0..=self.nmax()).map(|n| self.count(n, m)).collect()
    }

    /// Counts with every position an occurrence; `0` at `n = 0`.
    pub fn max_occ(&self) -> Vec<u64> {
        (0..=self.nmax()).map(|n| if n == 0 { 0 } else { self.count(n, n) }).collect()
    }
}

pub fn verify_zero_one_occurrences(h: &SeparableHistograms) -> Report {
    let mut r = Report::new();
    for n in 0..=h.nmax() {
        let m0 = if n < 2 { 1 } else { 0 };
        r.expect("separable m=0 count", n, m0, h.count(n, 0));
        r.expect("separable m=1 count", n, 0, h.count(n, 1));
    }
    r
}

/// Oracle `m = 2` counts against the recurrence, and class-size conservation.
pub fn verify_two_occurrences(h: &SeparableHistograms) -> Report {
    let c = c_by_recurrence(h.nmax());
    let sizes = separable_class_sizes(h.nmax());
    let mut r = Report::new();
    for n in 0..=h.nmax() {
        r.expect("separable m=2 count = c_n", n, c.values[n].clone(), h.count(n, 2));
        r.expect("separable class size = Schroder", n, sizes[n].clone(), h.class_size(n));
    }
    r
}

pub fn verify_three_occurrences(h: &SeparableHistograms) -> Report {
    let c = c_by_recurrence(h.nmax());
    let mut r = Report::new();
    for n in 1..=h.nmax() {
        r.expect("separable m=3 count = c_(n-1)", n, c.values[n - 1].clone(), h.count(n, 3));
    }
    r
}

/// `(four_occ, max_occ)` from brute force, indexed from `n = 0`.
pub fn unverified_sequences(h: &SeparableHistograms) -> (SequenceTable, SequenceTable) {
    let four = SequenceTable::from_u64s("four_occ", 0, &h.column(4)).with_comment(ORIGIN_NOTE);
    let max = SequenceTable::from_u64s("max_occ", 0, &h.max_occ())
        .with_comment(ORIGIN_NOTE)
        .with_comment(EMPTY_NOTE);
    (four, max)
}

/// Brute-force values against the known prefixes, as far as both reach.
pub fn check_printed_prefixes(h: &SeparableHistograms) -> Report {
    let mut r = Report::new();
    let (four, max) = (h.column(4), h.max_occ());
    for n in 0..=h.nmax() {
        if let Some(&v) = C_PRINTED.get(n) {
            r.expect("c_n printed prefix", n, v, h.count(n, 2));
        }
        if let Some(&v) = FOUR_OCC_PRINTED.get(n) {
            r.expect("four_occ printed prefix", n, v, four[n]);
        }
        if let Some(&v) = MAX_OCC_PRINTED.get(n) {
            r.expect("max_occ printed prefix", n, v, max[n]);
        }
    }
    r.note(ORIGIN_NOTE);
    r.note(EMPTY_NOTE);
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SepCountReport {
    pub nmax: usize,
    pub c: SequenceTable,
    pub d: SequenceTable,
    pub four_occ: SequenceTable,
    pub max_occ: SequenceTable,
    pub checks: Report,
}

impl SepCountReport {
    pub fn compute(oracle: &Oracle, nmax: usize) -> Result<Self, OracleError> {
        let h = SeparableHistograms::compute(oracle, nmax)?;
        Ok(Self::from_histograms(&h))
    }

    pub fn from_histograms(h: &SeparableHistograms) -> Self {
        let mut checks = verify_zero_one_occurrences(h);
        checks.extend(verify_two_occurrences(h));
        checks.extend(verify_three_occurrences(h));
        checks.extend(check_printed_prefixes(h));
        let (four_occ, max_occ) = unverified_sequences(h);
        let d = SequenceTable::from_u64s("d", 0, &h.column(3));
        SepCountReport { nmax: h.nmax(), c: c_by_recurrence(h.nmax()), d, four_occ, max_occ, checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}
