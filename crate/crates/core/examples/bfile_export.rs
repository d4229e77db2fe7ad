// Writes a sequence in b-file form and reads it back.
//
//     cargo run --example bfile_export -- c 20

use boxpat::cli::named_sequence;
use boxpat::oracle::{Limits, Oracle};
use boxpat::sequence::SequenceTable;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run(&args);
}

fn run(args: &[String]) {
    let name = args.first().map_or("c", String::as_str);
    let nmax: usize = args.get(1).map_or(10, |s| s.parse().unwrap());

    let table = named_sequence(name, nmax, &Oracle::new(Limits::default())).unwrap();
    let text = table.to_bfile();
    print!("{text}");

    let back = SequenceTable::parse_bfile(name, &text).unwrap();
    assert_eq!(back.values, table.values);
}
