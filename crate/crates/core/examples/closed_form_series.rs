// Expands the algebraic generating function for A(t,x) with exact series
// arithmetic and checks the quadratic it satisfies.

use boxpat::analytic::{expand_closed_a, expand_closed_b, quadratic_residual};
use boxpat::series::TruncSeries;

fn main() {
    let order = 8;
    let a = expand_closed_a(order).unwrap();
    let b = expand_closed_b(order).unwrap();
    for n in 0..=order {
        println!("t^{n}:  A: {}   B: {}", a.coeff(n), b.coeff(n));
    }

    let residual = quadratic_residual(&TruncSeries::from_int_series(&a));
    assert!(residual.is_zero());
    println!("R A^2 - P A + Q = {residual}");
}
