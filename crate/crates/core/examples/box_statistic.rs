// 1-box, k-box and (a,b)-rectangle matches of a single permutation.
//
//     cargo run --example box_statistic -- 471569283

use boxpat::{Permutation, RectangleSpec};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run(&args);
}

fn run(args: &[String]) {
    let text = args.first().map_or("471569283", String::as_str);
    let p: Permutation = text.parse().expect("a permutation in one-line notation");

    println!("sigma = {p}");
    for k in 1..=3 {
        let set = p.kbox_set(k);
        println!("  {k}-box: {set} ({} positions)", set.len());
    }
    assert_eq!(p.bx(), p.kbox_set(1).len());

    let spec = RectangleSpec::new(1, 2);
    let hits: Vec<usize> = (1..=p.len()).filter(|&i| p.rect_matches(i, spec).unwrap()).collect();
    println!("  (1,2)-rectangle: {hits:?}");

    // bx is invariant under the symmetries of the square
    for (name, q) in [("reverse", p.reverse()), ("complement", p.complement()), ("inverse", p.inverse())] {
        println!("  bx({name}) = {}", q.bx());
        assert_eq!(q.bx(), p.bx());
    }
}
