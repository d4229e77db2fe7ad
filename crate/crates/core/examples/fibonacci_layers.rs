// Low coefficients of A_n(x), B_n(x): Fibonacci numbers at x^2 and x^3,
// a convolution identity at x^4, and the rational generating functions of
// the x^4 layer.

use boxpat::analytic::{check_low_coefficients, expand_a4_b4, fibonacci, AbeTable};

fn main() {
    let nmax = 60;
    let table = AbeTable::compute_low(nmax, 4).unwrap();
    let report = check_low_coefficients(&table);
    print!("{report}");
    assert!(report.passed());

    println!("A_60:x^2 = {} = F(60) = {}", table.a(60).coeff(2), fibonacci(60));

    let (a4, b4) = expand_a4_b4(12).unwrap();
    for n in 4..=12 {
        assert_eq!(a4[n], table.a(n).coeff(4));
        assert_eq!(b4[n], table.b(n).coeff(4));
        println!("n={n:2}  A:x^4 = {:5}  B:x^4 = {:5}", a4[n], b4[n]);
    }
}
