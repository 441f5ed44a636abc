//! Small named presentations used throughout the tests, examples and
//! documentation.

use crate::presentation::Presentation;

const DIGITS4: &[&str] = &["0", "1", "2", "3"];

fn build(alphabet: &[&str], vertices: &[&str], initial: &str, edges: &[(&str, &str, &str)]) -> Presentation {
    Presentation::build(alphabet, vertices, initial, edges).expect("fixture is well formed")
}

/// Full shift on `{0,1}`: one vertex with both self-loops.
pub fn f2() -> Presentation {
    build(&["0", "1"], &["q0"], "q0", &[("q0", "0", "q0"), ("q0", "1", "q0")])
}

/// Two copies of the one-vertex full shift, with vertices named `v0`
/// and `v1`.
pub fn full_shift_pair() -> (Presentation, Presentation) {
    let g = |v: &str| build(&["0", "1"], &[v], v, &[(v, "0", v), (v, "1", v)]);
    (g("v0"), g("v1"))
}

/// Two-vertex double cover of the full shift produced by interleaving
/// the full-shift pair.
pub fn full_shift_double_cover() -> Presentation {
    build(
        &["0", "1"],
        &["v0v1", "v1v0"],
        "v0v1",
        &[
            ("v0v1", "0", "v1v0"),
            ("v0v1", "1", "v1v0"),
            ("v1v0", "0", "v0v1"),
            ("v1v0", "1", "v0v1"),
        ],
    )
}

/// `{0^∞} ∪ {0^k 1 2^∞}`.
pub fn q0() -> Presentation {
    build(
        DIGITS4,
        &["v0", "v1"],
        "v0",
        &[("v0", "0", "v0"), ("v0", "1", "v1"), ("v1", "2", "v1")],
    )
}

/// `{3 2^∞}`.
pub fn q1() -> Presentation {
    build(DIGITS4, &["v2", "v3"], "v2", &[("v2", "3", "v3"), ("v3", "2", "v3")])
}

/// Raw seven-vertex interleaving product of `q0` and `q1`.
pub fn q_product_raw() -> Presentation {
    build(
        DIGITS4,
        &["v0v2", "v2v0", "v0v3", "v3v0", "v2v1", "v1v3", "v3v1"],
        "v0v2",
        &[
            ("v0v2", "1", "v2v1"),
            ("v0v2", "0", "v2v0"),
            ("v2v0", "3", "v0v3"),
            ("v0v3", "1", "v3v1"),
            ("v2v1", "3", "v1v3"),
            ("v0v3", "0", "v3v0"),
            ("v3v0", "2", "v0v3"),
            ("v1v3", "2", "v3v1"),
            ("v3v1", "2", "v1v3"),
        ],
    )
}

/// Minimal six-vertex presentation of the interleaving of `q0` and `q1`.
pub fn q_product_minimal() -> Presentation {
    build(
        DIGITS4,
        &["v0v2", "v2v0", "v0v3", "v3v0", "v2v1", "v3v1"],
        "v0v2",
        &[
            ("v0v2", "1", "v2v1"),
            ("v0v2", "0", "v2v0"),
            ("v2v0", "3", "v0v3"),
            ("v0v3", "1", "v3v1"),
            ("v2v1", "3", "v3v1"),
            ("v0v3", "0", "v3v0"),
            ("v3v0", "2", "v0v3"),
            ("v3v1", "2", "v3v1"),
        ],
    )
}

/// Golden mean shift: binary words with no `11`.
pub fn gm() -> Presentation {
    build(
        &["0", "1"],
        &["g0", "g1"],
        "g0",
        &[("g0", "0", "g0"), ("g0", "1", "g1"), ("g1", "0", "g0")],
    )
}

/// The single word `(01)^∞`.
pub fn c2() -> Presentation {
    build(&["0", "1"], &["c0", "c1"], "c0", &[("c0", "0", "c1"), ("c1", "1", "c0")])
}

/// The single word `a^∞` over `{0,1}`.
pub fn constant(letter: &str) -> Presentation {
    build(&["0", "1"], &["k"], "k", &[("k", letter, "k")])
}

/// Nondeterministic branching on `a` into a `b`-loop and a `c`-loop.
pub fn nd() -> Presentation {
    build(
        &["a", "b", "c"],
        &["n0", "n1", "n2"],
        "n0",
        &[("n0", "a", "n1"), ("n0", "a", "n2"), ("n1", "b", "n1"), ("n2", "c", "n2")],
    )
}

/// Leveled rho-shaped presentation: a two-vertex tail into a six-cycle.
pub fn leveled_rho() -> Presentation {
    build(
        DIGITS4,
        &["v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7"],
        "v0",
        &[
            ("v0", "1", "v1"),
            ("v1", "0", "v2"),
            ("v1", "2", "v2"),
            ("v2", "1", "v3"),
            ("v3", "1", "v4"),
            ("v3", "2", "v4"),
            ("v4", "3", "v5"),
            ("v5", "1", "v6"),
            ("v6", "3", "v7"),
            ("v6", "0", "v7"),
            ("v6", "1", "v7"),
            ("v7", "3", "v2"),
        ],
    )
}
