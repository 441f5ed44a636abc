//! Shifts, decimations and the finite families they generate.
//!
//! cargo run --example decimation

use pathset::{fixtures, full_decimation_set, graphfile, kernel, minimize, psi, shift, weak_shift_orbit};

fn main() {
    let gm = minimize(&fixtures::gm());
    println!("golden mean shift:");
    print!("{}", graphfile::write(gm.presentation()));

    let every_other = psi(&gm, 0, 2);
    println!("\neven positions:");
    print!("{}", graphfile::write(every_other.presentation()));

    let c2 = minimize(&fixtures::c2());
    let (j, k) = weak_shift_orbit(&c2).unwrap();
    println!("\nC2 shift orbit repeats: S^{j} = S^{k}");
    println!("S^1(C2) has {} vertices", shift(&c2, 1).num_vertices());

    let d = full_decimation_set(&c2).unwrap();
    println!("\nC2 has {} distinct decimations:", d.len());
    for (set, index) in d.members() {
        println!("  {index}: {} vertices", set.num_vertices());
    }
    println!("certified for offsets < {} and steps <= {}", d.max_offset(), d.max_step());

    let k2 = kernel(&gm, 2).unwrap();
    println!("\n2-kernel of the golden mean shift has {} members", k2.len());
}
