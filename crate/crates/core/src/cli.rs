//! Command-line front end. [`run`] takes the argument list and two sinks and
//! returns the process exit code, so it can be driven from tests as easily
//! as from the `boxpat` binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 enumeration guard, 4 internal algebra inconsistency.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analytic::{
    catalan_numbers, expand_a4_b4, expand_closed_a, expand_closed_b, fibonacci_numbers, highest_coefficients,
    pell_numbers, AbeTable,
};
use crate::oracle::{Limits, Oracle, OracleError, PermClass};
use crate::perm::{Permutation, RectangleSpec};
use crate::poly::IntPoly;
use crate::report::Report;
use crate::separable::{c_by_recurrence, separable_class_sizes, SeparableHistograms};
use crate::sequence::SequenceTable;
use crate::series::IntSeries;
use crate::verify::Suite;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_ALGEBRA: i32 = 4;

/// Flag that lifts the enumeration guards for one invocation.
pub const OVERRIDE_FLAG: &str = "--allow-large";

#[derive(Debug, Parser)]
#[command(name = "boxpat", version, about = "Box-pattern statistics on permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "A4")]
    A4,
    #[value(name = "B4")]
    B4,
    #[value(name = "at")]
    At,
    #[value(name = "bt")]
    Bt,
    #[value(name = "catalan")]
    Catalan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Coefficients,
    Quadratic,
    Separable,
    Oracle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Box-pattern matches of one permutation.
    Stat {
        /// One-line notation: "471569283" or "4,7,1,5,6,9,2,8,3".
        perm: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Also report (a,b)-rectangle matches per position.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        rect: Option<Vec<usize>>,
    },
    /// 1-box distribution of a class at one length, by enumeration and by recurrence.
    Dist {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Lift the enumeration size guard.
        #[arg(long)]
        allow_large: bool,
    },
    /// Truncated series expansions of the generating functions.
    Gf {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run verification suites; exit 0 iff every check passes.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Size bound for the coefficient, separable and oracle suites.
        #[arg(long)]
        nmax: Option<usize>,
        /// Series order for the quadratic suite.
        #[arg(long)]
        order: Option<usize>,
        /// Print a machine-readable report.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Write an integer sequence as a b-file.
    Export {
        #[arg(long)]
        sequence: String,
        #[arg(long)]
        nmax: usize,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Perm(_) | Error::BFile(_) | Error::Io(_) | Error::UnknownSequence(_) => EXIT_USAGE,
            Error::Oracle(OracleError::UnknownClass(_)) => EXIT_USAGE,
            Error::Oracle(OracleError::Guard { .. }) => EXIT_GUARD,
            Error::Analytic(_) => EXIT_ALGEBRA,
        };
        let mut message = e.to_string();
        if code == EXIT_GUARD {
            let _ = write!(message, "; pass {OVERRIDE_FLAG} to lift the limit");
        }
        Failure { code, message }
    }
}

macro_rules! from_via_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        }
    )*};
}
from_via_error!(crate::PermError, OracleError, crate::AnalyticError, std::io::Error);

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut buf = String::new();
    let code = match dispatch(cli.command, &mut buf) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    };
    let _ = out.write_all(buf.as_bytes());
    let _ = out.flush();
    code
}

fn oracle_for(allow_large: bool) -> Oracle {
    Oracle::new(if allow_large { Limits::unlimited() } else { Limits::from_env() })
}

fn dispatch(cmd: Command, out: &mut String) -> Result<i32, Failure> {
    match cmd {
        Command::Stat { perm, k, rect } => stat(&perm, k, rect, out),
        Command::Dist { class, n, format, allow_large } => dist(&class, n, format, &oracle_for(allow_large), out),
        Command::Gf { which, order, format } => gf(which, order, format, out),
        Command::Verify { suite, nmax, order, json, allow_large } => {
            verify(suite, nmax, order, json, &oracle_for(allow_large), out)
        }
        Command::Export { sequence, nmax, out: path, allow_large } => {
            let table = named_sequence(&sequence, nmax, &oracle_for(allow_large))?;
            let text = table.to_bfile();
            match path {
                Some(p) => std::fs::write(&p, text.as_bytes())?,
                None => out.push_str(&text),
            }
            Ok(EXIT_OK)
        }
    }
}

fn stat(perm: &str, k: usize, rect: Option<Vec<usize>>, out: &mut String) -> Result<i32, Failure> {
    let p: Permutation = perm.parse()?;
    let set = p.kbox_set(k);
    let _ = writeln!(out, "permutation: {p}");
    let _ = writeln!(out, "{k}-box matches: {set}");
    let _ = writeln!(out, "count: {}", set.len());
    if let Some(ab) = rect {
        let spec = RectangleSpec::new(ab[0], ab[1]);
        let _ = writeln!(out, "({},{})-rectangle:", spec.a, spec.b);
        let mut hits = 0;
        for i in 1..=p.len() {
            let hit = p.rect_matches(i, spec)?;
            hits += usize::from(hit);
            let _ = writeln!(out, "  {i} {} {}", p.at(i)?, if hit { "match" } else { "-" });
        }
        let _ = writeln!(out, "rectangle count: {hits}");
    }
    Ok(EXIT_OK)
}

fn recurrence_row(class: PermClass, n: usize) -> Result<Option<IntPoly>, Failure> {
    let table = AbeTable::compute(n.max(1))?;
    Ok(match class {
        PermClass::Avoid132 => Some(table.a(n).clone()),
        PermClass::Avoid132FirstMax => Some(table.b(n).clone()),
        PermClass::Avoid132LastMax => Some(table.e(n).clone()),
        _ => None,
    })
}

fn poly_json(p: &IntPoly) -> serde_json::Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn dist(class: &str, n: usize, format: Format, oracle: &Oracle, out: &mut String) -> Result<i32, Failure> {
    let class: PermClass = class.parse()?;
    if format == Format::Bfile {
        return Err(Failure::usage("bfile output is for integer sequences; use table, json or csv"));
    }
    let enumerated = oracle.distribution(class, n)?;
    let recurrence = recurrence_row(class, n)?;
    let verdict = recurrence.as_ref().map(|r| if *r == enumerated { "AGREE" } else { "DISAGREE" });
    match format {
        Format::Table => {
            let _ = writeln!(out, "class: {class}  n: {n}");
            let _ = writeln!(out, "oracle:     {enumerated}");
            if let Some(r) = &recurrence {
                let _ = writeln!(out, "recurrence: {r}");
            }
            let _ = writeln!(out, "{}", verdict.unwrap_or("oracle only (no recurrence for this class)"));
        }
        Format::Json => {
            let v = json!({
                "class": class.tag(),
                "n": n,
                "oracle": poly_json(&enumerated),
                "recurrence": recurrence.as_ref().map(poly_json),
                "verdict": verdict,
            });
            let _ = writeln!(out, "{v}");
        }
        Format::Csv => {
            let _ = writeln!(out, "power,oracle,recurrence");
            let top = enumerated.degree().max(recurrence.as_ref().and_then(IntPoly::degree)).unwrap_or(0);
            for m in 0..=top {
                let rec = recurrence.as_ref().map(|r| r.coeff(m).to_string()).unwrap_or_default();
                let _ = writeln!(out, "{m},{},{rec}", enumerated.coeff(m));
            }
        }
        Format::Bfile => unreachable!(),
    }
    Ok(if verdict == Some("DISAGREE") { EXIT_VERIFY } else { EXIT_OK })
}

fn write_bivariate(name: &str, s: &IntSeries, format: Format, out: &mut String) -> Result<(), Failure> {
    match format {
        Format::Table => {
            for (n, p) in s.coeffs().iter().enumerate() {
                let _ = writeln!(out, "t^{n}: {p}");
            }
        }
        Format::Json => {
            let v = json!({ "name": name, "series": s });
            let _ = writeln!(out, "{v}");
        }
        Format::Csv => {
            let _ = writeln!(out, "n,power,coefficient");
            for (n, p) in s.coeffs().iter().enumerate() {
                for (m, c) in p.coeffs().iter().enumerate() {
                    let _ = writeln!(out, "{n},{m},{c}");
                }
            }
        }
        Format::Bfile => return Err(Failure::usage(format!("{name} has polynomial coefficients; bfile needs integers"))),
    }
    Ok(())
}

fn write_sequence(t: &SequenceTable, format: Format, out: &mut String) {
    match format {
        Format::Table => {
            for (n, v) in t.indexed() {
                let _ = writeln!(out, "t^{n}: {v}");
            }
        }
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(t).expect("sequences serialize"));
        }
        Format::Csv => {
            let _ = writeln!(out, "n,value");
            for (n, v) in t.indexed() {
                let _ = writeln!(out, "{n},{v}");
            }
        }
        Format::Bfile => out.push_str(&t.to_bfile()),
    }
}

fn gf(which: Which, order: usize, format: Format, out: &mut String) -> Result<i32, Failure> {
    match which {
        Which::A => write_bivariate("A", &expand_closed_a(order)?, format, out)?,
        Which::B => write_bivariate("B", &expand_closed_b(order)?, format, out)?,
        _ => {
            let table = match which {
                Which::A4 => SequenceTable::new("A4", 0, expand_a4_b4(order)?.0),
                Which::B4 => SequenceTable::new("B4", 0, expand_a4_b4(order)?.1),
                Which::At => SequenceTable::new("at", 0, crate::analytic::expand_closed_highest(order)?.0),
                Which::Bt => SequenceTable::new("bt", 0, crate::analytic::expand_closed_highest(order)?.1),
                _ => SequenceTable::new("catalan", 0, catalan_numbers(order)?),
            };
            write_sequence(&table, format, out);
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    suite: SuiteArg,
    nmax: Option<usize>,
    order: Option<usize>,
    as_json: bool,
    oracle: &Oracle,
    out: &mut String,
) -> Result<i32, Failure> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Coefficients => vec![Suite::Coefficients],
        SuiteArg::Quadratic => vec![Suite::Quadratic],
        SuiteArg::Separable => vec![Suite::Separable],
        SuiteArg::Oracle => vec![Suite::Oracle],
    };
    let mut results: Vec<(Suite, usize, Report)> = Vec::new();
    for s in suites {
        let bound = match s {
            Suite::Quadratic => order,
            _ => nmax,
        }
        .unwrap_or_else(|| s.default_bound());
        results.push((s, bound, s.run(oracle, bound)?));
    }
    let passed = results.iter().all(|(_, _, r)| r.passed());
    if as_json {
        let suites: Vec<_> = results
            .iter()
            .map(|(s, bound, r)| json!({ "suite": s.name(), "bound": bound, "passed": r.passed(), "report": r }))
            .collect();
        let _ = writeln!(out, "{}", json!({ "passed": passed, "suites": suites }));
    } else {
        for (s, bound, r) in &results {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "== {s} (bound {bound}): {verdict}");
            let _ = write!(out, "{r}");
        }
        let _ = writeln!(out, "{}", if passed { "PASS" } else { "FAIL" });
    }
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY })
}

/// Names accepted by `export --sequence`.
pub const SEQUENCE_NAMES: [&str; 12] =
    ["a", "b", "c", "d", "four_occ", "max_occ", "fib", "pell", "catalan", "schroder", "a4", "b4"];

/// Builds a named integer sequence for `n = 0 … nmax`.
pub fn named_sequence(name: &str, nmax: usize, oracle: &Oracle) -> Result<SequenceTable, Error> {
    let seq = |values| SequenceTable::new(name, 0, values);
    Ok(match name {
        "a" => highest_coefficients(nmax).0,
        "b" => highest_coefficients(nmax).1,
        "c" => c_by_recurrence(nmax),
        "d" | "four_occ" | "max_occ" => {
            let h = SeparableHistograms::compute(oracle, nmax)?;
            match name {
                "d" => SequenceTable::from_u64s(name, 0, &h.column(3)),
                _ => {
                    let (four, max) = crate::separable::unverified_sequences(&h);
                    if name == "four_occ" {
                        four
                    } else {
                        max
                    }
                }
            }
        }
        "fib" => seq(fibonacci_numbers(nmax)),
        "pell" => seq(pell_numbers(nmax)),
        "catalan" => seq(catalan_numbers(nmax)?),
        "schroder" => seq(separable_class_sizes(nmax)),
        "a4" => seq(expand_a4_b4(nmax)?.0),
        "b4" => seq(expand_a4_b4(nmax)?.1),
        _ => {
return Err(Error::UnknownSequence(name.to_string()))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("boxpat").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn stat_examples() {
        let (code, out, _) = call(&["stat", "471569283", "--k", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("{4, 5}") && out.contains("count: 2"), "{out}");
        assert!(call(&["stat", "2413"]).1.contains("count: 0"));
        assert!(call(&["stat", "1"]).1.contains("count: 0"));
        let (code, _, err) = call(&["stat", "1,1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("duplicate"), "{err}");
    }

    #[test]
    fn dist_examples() {
        let (code, out, _) = call(&["dist", "--class", "avoid132", "--n", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("5x^2 + 3x^3 + 6x^4") && out.contains("AGREE"), "{out}");
        assert!(call(&["dist", "--class", "avoid132-first-max", "--n", "3"]).1.contains("x^2 + x^3"));
        assert!(call(&["dist", "--class", "all", "--n", "3"]).1.contains("4x^2 + 2x^3"));
        assert_eq!(call(&["dist", "--class", "nope", "--n", "3"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["dist", "--class", "all", "--n", "40"]);
        assert_eq!(code, EXIT_GUARD);
        assert!(err.contains(OVERRIDE_FLAG), "{err}");
    }

    #[test]
    fn gf_examples() {
        let (_, out, _) = call(&["gf", "--which", "A", "--order", "5"]);
        assert!(out.contains("t^5: 8x^2 + 5x^3 + 19x^4 + 10x^5"), "{out}");
        let (_, out, _) = call(&["gf", "--which", "catalan", "--order", "6", "--format", "bfile"]);
        assert_eq!(out, "0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n");
        assert!(call(&["gf", "--which", "B4", "--order", "4"]).1.contains("t^4: 2"));
        assert_eq!(call(&["gf", "--which", "A", "--order", "3", "--format", "bfile"]).0, EXIT_USAGE);
    }

    #[test]
    fn export_examples() {
        let (code, out, _) = call(&["export", "--sequence", "c", "--nmax", "10"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("10 1970\n"));
        assert!(call(&["export", "--sequence", "a", "--nmax", "10"]).1.ends_with("10 754\n"));
        assert_eq!(call(&["export", "--sequence", "fib", "--nmax", "5"]).1, "0 1\n1 1\n2 2\n3 3\n4 5\n5 8\n");
        assert_eq!(call(&["export", "--sequence", "zeta", "--nmax", "5"]).0, EXIT_USAGE);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
