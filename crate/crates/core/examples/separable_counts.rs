// Separable permutations by number of 1-box occurrences.

use boxpat::oracle::{Limits, Oracle};
use boxpat::separable::{SepCountReport, SeparableHistograms};

fn main() {
    let nmax = 9;
    let h = SeparableHistograms::compute(&Oracle::new(Limits::default()), nmax).unwrap();
    println!(" n  size   m=0  m=1  m=2  m=3  m=4  m=n");
    for n in 0..=nmax {
        println!(
            "{n:2} {:5} {:5} {:4} {:4} {:4} {:4} {:4}",
            h.class_size(n),
            h.count(n, 0),
            h.count(n, 1),
            h.count(n, 2),
            h.count(n, 3),
            h.count(n, 4),
            h.max_occ()[n]
        );
    }
    let report = SepCountReport::from_histograms(&h);
    print!("{}", report.checks);
    assert!(report.passed());
}
