// Separability test and the block decomposition around the maximum.

use boxpat::perm::{is_separable, separable_decompose};
use boxpat::Permutation;

fn main() {
    for text in ["2413", "3142", "321", "3412", "25314", "4512376"] {
        let p: Permutation = text.parse().unwrap();
        if !is_separable(&p) {
            println!("{p}: not separable");
            continue;
        }
        let d = separable_decompose(&p).unwrap();
        println!("{p}: m = {}, max at position {}", d.m(), d.max_position);
        for (i, (l, r)) in d.left.iter().zip(&d.right).enumerate() {
            println!("  L{} = {:?}  R{} = {:?}", i + 1, l, i + 1, r);
        }
        assert_eq!(d.reassemble(), p.values());
    }
}
