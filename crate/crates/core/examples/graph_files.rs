//! Reading and writing the text graph format, JSON and DOT.
//!
//! cargo run --example graph_files

use pathset::{graphfile, minimize};

const INPUT: &str = "\
# no two consecutive 1s
alphabet: 0 1
vertices: a b
initial: a
edge: a 0 a
edge: a 1 b
edge: b 0 a
";

fn main() {
    let p = graphfile::read(INPUT).unwrap();
    let m = minimize(&p);
    print!("{}", graphfile::write(m.presentation()));
    println!("{}", serde_json::to_string_pretty(&graphfile::to_json(m.presentation())).unwrap());
    print!("{}", graphfile::to_dot(&p));

    match graphfile::read("alphabet: 0\nvertices: a\ninitial: a\nedge: a 1 a\n") {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("error: {e}"),
    }
}
