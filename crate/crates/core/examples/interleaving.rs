//! Interleaving path sets and splitting them back apart.
//!
//! cargo run --example interleaving

use pathset::{
    fixtures, graphfile, interleave, interleave_product, interleaving_closure, interleaving_factors,
    is_n_factorizable, minimize,
};

fn main() {
    let q0 = fixtures::q0();
    let q1 = fixtures::q1();

    let product = interleave_product(&[q0.clone(), q1.clone()]);
    println!("raw product has {} states:", product.num_vertices());
    for v in product.vertices() {
        println!("  {v}");
    }

    let both = interleave(&[minimize(&q0), minimize(&q1)]);
    println!("\nminimal interleaving:");
    print!("{}", graphfile::write(both.presentation()));

    for n in 2..=4 {
        println!("2-way factorizable at n={n}: {}", is_n_factorizable(&both, n));
    }
    let factors = interleaving_factors(&both, 2).unwrap();
    println!("factors recover the inputs: {}", factors == [minimize(&q0), minimize(&q1)]);

    // The closure is the smallest 3-factorizable path set containing P.
    let gm = minimize(&fixtures::gm());
    let closure = interleaving_closure(&gm, 3);
    println!(
        "\ngolden mean: {} vertices, its 3-closure: {}",
        gm.num_vertices(),
        closure.num_vertices()
    );
}
