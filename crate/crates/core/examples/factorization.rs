//! Factorization exponent, factor sets and complete factorization trees.
//!
//! cargo run --example factorization

use pathset::{
    complete_factorization, factor_set, factorization_exponent, fixtures, interleave, is_leveled,
    minimize, missing_configuration, self_loop_criterion,
};

fn main() {
    let f2 = minimize(&fixtures::f2());
    let gm = minimize(&fixtures::gm());
    let c2 = minimize(&fixtures::c2());

    for (name, p) in [("F2", &f2), ("golden mean", &gm), ("C2", &c2)] {
        let exponent = factorization_exponent(p).unwrap();
        let profile = is_leveled(p).unwrap().map(|l| l.display(p.alphabet()).to_string());
        println!("{name}: exponent {exponent}, leveled profile {profile:?}");
        if let Some(m) = missing_configuration(p).unwrap() {
            println!("  missing: {}", m.display(p.alphabet()));
        }
        println!("  initial self-loop criterion: {}", self_loop_criterion(p).unwrap());
    }

    println!("\nC2 factor set:");
    for f in factor_set(&c2).unwrap() {
        println!("  {} vertices, {} edges", f.num_vertices(), f.edges().len());
    }

    let q = interleave(&[minimize(&fixtures::q0()), minimize(&fixtures::q1())]);
    let tree = complete_factorization(&q).unwrap();
    println!("\nfactorization tree of Q0 x Q1:");
    print!("{}", tree.render());
    println!("depth {}, {} leaves", tree.depth(), tree.leaf_count());
}
