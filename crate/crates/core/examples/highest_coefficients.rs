// Coefficients of x^n in A_n(x) and B_n(x): recurrence, closed form and the
// full distribution polynomials agree.

use boxpat::analytic::{expand_closed_highest, highest_coefficients, AbeTable};

fn main() {
    let nmax = 20;
    let (a, b) = highest_coefficients(nmax);
    let (ca, cb) = expand_closed_highest(nmax).unwrap();
    let table = AbeTable::compute(nmax).unwrap();
    assert_eq!(a.values, ca);
    assert_eq!(b.values, cb);
    for n in 0..=nmax {
        if n != 1 {
            assert_eq!(a.values[n], table.a(n).coeff(n));
            assert_eq!(b.values[n], table.b(n).coeff(n));
        }
        println!("{n:2}  a = {:>10}  b = {:>10}", a.values[n], b.values[n]);
    }
}
