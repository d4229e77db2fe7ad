// The 1-box distribution over 132-avoiders, counted permutation by
// permutation and by the recurrences, side by side.

use boxpat::analytic::AbeTable;
use boxpat::oracle::{Limits, Oracle, PermClass};

fn main() {
    let nmax = 10;
    let oracle = Oracle::new(Limits::default());
    let table = AbeTable::compute(nmax).unwrap();

    for n in 0..=nmax {
        let counted = oracle.distribution(PermClass::Avoid132, n).unwrap();
        assert_eq!(&counted, table.a(n));
        println!("A_{n} = {counted}");
    }
    for n in 1..=6 {
        let first = oracle.distribution(PermClass::Avoid132FirstMax, n).unwrap();
        let last = oracle.distribution(PermClass::Avoid132LastMax, n).unwrap();
        assert_eq!(first, last);
        assert_eq!(&first, table.b(n));
        println!("B_{n} = E_{n} = {first}");
    }
}
