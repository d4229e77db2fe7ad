//! Verification suites: each cross-checks independent routes and returns a
//! [`Report`]. The CLI `verify` command and the acceptance tests both drive
//! these.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::analytic::{
    catalan_numbers, check_low_coefficients, expand_a4_b4, expand_closed_a, expand_closed_b,
    expand_closed_highest, highest_coefficients, printed_row, quadratic_residual, AbeTable, PRINTED_A, PRINTED_B,
};
use crate::oracle::{Oracle, PermClass, Route};
use crate::poly::IntPoly;
use crate::report::Report;
use crate::separable::SepCountReport;
use crate::series::TruncSeries;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Coefficients,
    Quadratic,
    Separable,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Coefficients, Suite::Quadratic, Suite::Separable, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coefficients => "coefficients",
            Suite::Quadratic => "quadratic",
            Suite::Separable => "separable",
            Suite::Oracle => "oracle",
        }
    }

    /// Size bound (`nmax`, or series order for `quadratic`) used when none
    /// is given.
    pub fn default_bound(self) -> usize {
        match self {
            Suite::Coefficients => 50,
            Suite::Quadratic => 30,
            Suite::Separable => 10,
            Suite::Oracle => 12,
        }
    }

    pub fn run(self, oracle: &Oracle, bound: usize) -> Result<Report, Error> {
        match self {
            Suite::Coefficients => coefficients(bound),
            Suite::Quadratic => quadratic(bound),
            Suite::Separable => separable(oracle, bound),
            Suite::Oracle => oracle_agreement(oracle, bound),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// One check per power of `x` present in either polynomial.
pub fn compare_polys(report: &mut Report, identity: &str, n: usize, expected: &IntPoly, actual: &IntPoly) {
    let top = expected.degree().max(actual.degree()).unwrap_or(0);
    for m in 0..=top {
        report.expect(identity, n, expected.coeff(m), actual.coeff(m));
    }
}

/// Low-coefficient identities, the `x⁴` generating functions, the
/// highest-coefficient sequences and `A_n(1) = C_n`, for `n ≤ nmax`.
pub fn coefficients(nmax: usize) -> Result<Report, Error> {
    let nmax = nmax.max(1);
    let table = AbeTable::compute(nmax)?;
    let mut r = check_low_coefficients(&table);

    let (a4, b4) = expand_a4_b4(nmax)?;
    let (ha, hb) = highest_coefficients(nmax);
    let (ca, cb) = expand_closed_highest(nmax)?;
    let cat = catalan_numbers(nmax)?;
    for n in 0..=nmax {
        r.expect("A4(t) expansion = A_n:x^4", n, a4[n].clone(), table.a(n).coeff(4));
        r.expect("B4(t) expansion = B_n:x^4", n, b4[n].clone(), table.b(n).coeff(4));
        r.expect("a_n recurrence = closed form", n, ha.values[n].clone(), ca[n].clone());
        r.expect("b_n recurrence = closed form", n, hb.values[n].clone(), cb[n].clone());
        // a_1 = b_1 = 1 are initial values: the permutation 1 has no occurrence,
        // so A_1 = B_1 = 1 has no x^1 term.
        if n == 1 {
            r.exclude("a_n = A_n:x^n", n, ha.values[n].clone(), table.a(n).coeff(n));
            r.exclude("b_n = B_n:x^n", n, hb.values[n].clone(), table.b(n).coeff(n));
        } else {
            r.expect("a_n = A_n:x^n", n, ha.values[n].clone(), table.a(n).coeff(n));
            r.expect("b_n = B_n:x^n", n, hb.values[n].clone(), table.b(n).coeff(n));
        }
        r.expect("A_n(1) = Catalan", n, cat[n].clone(), table.a(n).at_one());
    }
    Ok(r)
}

fn nonzero_terms(s: &TruncSeries, n: usize) -> usize {
    s.coeff(n).coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count()
}

/// The quadratic equation for `A(t,x)` through `t^order` on both routes,
/// closed form against recurrence, and the published rows.
pub fn quadratic(order: usize) -> Result<Report, Error> {
    let order = order.max(1);
    let closed_a = expand_closed_a(order)?;
    let closed_b = expand_closed_b(order)?;
    let table = AbeTable::compute(order)?;
    let rec_a = table.a_series(order);

    let res_closed = quadratic_residual(&TruncSeries::from_int_series(&closed_a));
    let res_rec = quadratic_residual(&TruncSeries::from_int_series(&rec_a));
    let mut r = Report::new();
    for n in 0..=order {
        r.expect("quadratic residual, closed form (nonzero terms)", n, 0, nonzero_terms(&res_closed, n));
        r.expect("quadratic residual, recurrence (nonzero terms)", n, 0, nonzero_terms(&res_rec, n));
        compare_polys(&mut r, "A: closed form = recurrence", n, table.a(n), &closed_a.coeff(n));
        compare_polys(&mut r, "B: closed form = recurrence", n, table.b(n), &closed_b.coeff(n));
    }
    for (k, (ra, rb)) in PRINTED_A.iter().zip(PRINTED_B.iter()).enumerate() {
        let n = k + 2;
        if n <= order {
            compare_polys(&mut r, "A: published row", n, &printed_row(ra), &closed_a.coeff(n));
            compare_polys(&mut r, "B: published row", n, &printed_row(rb), &closed_b.coeff(n));
        }
    }
    Ok(r)
}

pub fn separable(oracle: &Oracle, nmax: usize) -> Result<Report, Error> {
    Ok(SepCountReport::compute(oracle, nmax)?.checks)
}

/// Bound on `n` for the filter-versus-structural set comparison; the filter
/// route walks all of `S_n`.
pub const FILTER_COMPARE_MAX: usize = 9;

/// Oracle distributions against the recurrence and the closed forms, and
/// the structural generators against filtering `S_n`.
pub fn oracle_agreement(oracle: &Oracle, nmax: usize) -> Result<Report, Error> {
    oracle.guard(PermClass::Avoid132, nmax, Route::Structural)?;
    oracle.guard(PermClass::Separable, nmax.min(FILTER_COMPARE_MAX), Route::Filter)?;
    let table = AbeTable::compute(nmax.max(1))?;
    let closed_a = expand_closed_a(nmax)?;
    let closed_b = expand_closed_b(nmax)?;
    let cat = catalan_numbers(nmax)?;
    let mut r = Report::new();
    for n in 0..=nmax {
        let a = oracle.distribution(PermClass::Avoid132, n)?;
        let b = oracle.distribution(PermClass::Avoid132FirstMax, n)?;
        let e = oracle.distribution(PermClass::Avoid132LastMax, n)?;
        compare_polys(&mut r, "A_n: oracle = recurrence", n, &a, table.a(n));
        compare_polys(&mut r, "A_n: oracle = closed form", n, &a, &closed_a.coeff(n));
        compare_polys(&mut r, "B_n: oracle = recurrence", n, &b, table.b(n));
        compare_polys(&mut r, "B_n: oracle = closed form", n, &b, &closed_b.coeff(n));
        compare_polys(&mut r, "E_n: oracle = recurrence", n, &e, table.e(n));
        r.expect("|S_n(132)| = Catalan", n, cat[n].clone(), a.at_one());
    }
    for n in 0..=nmax.min(FILTER_COMPARE_MAX) {
        for class in PermClass::ALL.into_iter().filter(|&c| c != PermClass::All) {
            let s: BTreeSet<_> = oracle.enumerate_via(class, n, Route::Structural)?.into_iter().collect();
            let f: BTreeSet<_> = oracle.enumerate_via(class, n, Route::Filter)?.into_iter().collect();
            let diff = s.symmetric_difference(&f).count();
            r.expect(&format!("{class}: structural vs filter (symmetric difference)"), n, 0, diff);
        }
    }
    Ok(r)
}

/// Convenience for callers that only want a yes/no with the evidence.
pub fn run_all(oracle: &Oracle) -> Result<Vec<(Suite, Report)>, Error> {
    Suite::ALL.into_iter().map(|s| Ok((s, s.run(oracle, s.default_bound())?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Limits;

    #[test]
    fn suites_pass_at_small_bounds() {
        let oracle = Oracle::new(Limits::default());
        for (suite, bound) in [(Suite::Coefficients, 20), (Suite::Quadratic, 12), (Suite::Separable, 7), (Suite::Oracle, 8)] {
            let r = suite.run(&oracle, bound).unwrap();
            assert!(r.passed(), "{suite}:\n{r}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn guard_propagates() {
        let oracle = Oracle::new(Limits { max_all: 12, max_structural: 16, max_separable: 5 });
        assert!(matches!(separable(&oracle, 6), Err(Error::Oracle(_))));
    }
}
