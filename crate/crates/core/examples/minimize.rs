//! Canonical forms: two different graphs, one path set.
//!
//! cargo run --example minimize

use pathset::{equals, graphfile, minimize, Presentation};

fn main() {
    // Every vertex can emit either letter, so this is the full shift,
    // just spread over three vertices with a nondeterministic edge.
    let wide = Presentation::build(
        &["0", "1"],
        &["a", "b", "c"],
        "a",
        &[
            ("a", "0", "b"),
            ("a", "0", "c"),
            ("a", "1", "a"),
            ("b", "0", "c"),
            ("b", "1", "a"),
            ("c", "0", "a"),
            ("c", "1", "b"),
        ],
    )
    .unwrap();
    let small = pathset::fixtures::f2();

    let p = minimize(&wide);
    println!("{} vertices before, {} after", wide.num_vertices(), p.num_vertices());
    print!("{}", graphfile::write(p.presentation()));
    println!("same as F2: {}", equals(&p, &minimize(&small)));

    let blocks: Vec<String> = p
        .initial_blocks(2)
        .iter()
        .map(|w| w.display(p.alphabet()).to_string())
        .collect();
    println!("blocks up to length 2: {}", blocks.join(" "));
}
