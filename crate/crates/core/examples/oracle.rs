//! The brute-force block oracle next to the graph algorithms.
//!
//! cargo run --example oracle

use pathset::oracle::{blocks_decimate, blocks_interleave, blocks_of, equals_blockwise};
use pathset::{fixtures, interleave, minimize, psi};

fn main() {
    let gm = fixtures::gm();
    let blocks = blocks_of(&gm, 6);
    println!("golden mean: {} blocks up to length 6", blocks.len());

    // ψ_{1,2} on blocks of length 7 gives decimated blocks of length 3.
    let oracle = blocks_decimate(&blocks_of(&gm, 7), 1, 2).unwrap();
    let graph = psi(&minimize(&gm), 1, 2).initial_blocks(3);
    println!("decimation (1,2) agrees with the oracle: {}", oracle.to_set() == graph);

    let q0 = minimize(&fixtures::q0());
    let q1 = minimize(&fixtures::q1());
    let (q0, q1) = pathset::pathset::unify(&q0, &q1);
    let combined = blocks_interleave(&[blocks_of(q0.presentation(), 3), blocks_of(q1.presentation(), 3)]).unwrap();
    let graph = interleave(&[q0, q1]).initial_blocks(6);
    println!("interleaving agrees with the oracle: {}", combined.to_set() == graph);

    println!(
        "product graph equals its minimization blockwise: {}",
        equals_blockwise(&fixtures::q_product_raw(), &fixtures::q_product_minimal())
    );
}
