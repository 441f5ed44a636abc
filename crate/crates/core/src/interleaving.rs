//! The interleaving product, interleaving closure and factor extraction.

use std::collections::HashMap;

use crate::decimation::psi;
use crate::error::{Error, Result};
use crate::pathset::{equals, minimize, unify_all, PathSet};
use crate::presentation::{Edge, Presentation};

/// A product state: the phase `i` and the component vertices rotated so
/// that component `i` comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InterleaveProductState {
    pub phase: usize,
    pub tuple: Vec<usize>,
}

/// Pointed graph product presenting the interleaving of `components`.
///
/// Component alphabets are unified by name. Only the part reachable from
/// the initial state is built. Vertex names concatenate component vertex
/// names in tuple order; if that is ambiguous every name gets a `/phase`
/// suffix.
///
/// # Panics
/// If `components` is empty.
pub fn interleave_product(components: &[Presentation]) -> Presentation {
    assert!(!components.is_empty(), "interleaving needs at least one component");
    let alphabet = components
        .iter()
        .skip(1)
        .fold(components[0].alphabet().clone(), |acc, c| acc.union(c.alphabet()));
    let comps: Vec<Presentation> = components.iter().map(|c| c.relabel(&alphabet)).collect();
    let n = comps.len();
    let Some(start) = comps.iter().map(Presentation::initial).collect::<Option<Vec<_>>>() else {
        return Presentation::empty(alphabet);
    };

    let first = InterleaveProductState { phase: 0, tuple: start };
    let mut ids: HashMap<InterleaveProductState, usize> = HashMap::from([(first.clone(), 0)]);
    let mut states = vec![first];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let state = states[i].clone();
        let comp = &comps[state.phase];
        for e in comp.out_edges(state.tuple[0]) {
            let mut tuple = state.tuple[1..].to_vec();
            tuple.push(e.target);
            let next = InterleaveProductState {
                phase: (state.phase + 1) % n,
                tuple,
            };
            let fresh = states.len();
            let id = *ids.entry(next.clone()).or_insert(fresh);
            if id == fresh {
                states.push(next);
            }
            edges.push(Edge::new(i, e.symbol, id));
        }
        i += 1;
    }

    let mut names: Vec<String> = states
        .iter()
        .map(|s| {
            s.tuple
                .iter()
                .enumerate()
                .map(|(pos, &v)| comps[(s.phase + pos) % n].vertex_name(v))
                .collect()
        })
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() < names.len() {
        for (name, s) in names.iter_mut().zip(&states) {
            name.push_str(&format!("/{}", s.phase));
        }
    }
    Presentation::from_parts(alphabet, names, edges, Some(0))
}

/// The interleaving `X_0 ⊛ … ⊛ X_{n-1}` in normal form. Empty if any
/// component is empty.
///
/// # Panics
/// If `components` is empty.
pub fn interleave(components: &[PathSet]) -> PathSet {
    let unified = unify_all(components);
    let presentations: Vec<Presentation> = unified.iter().map(|c| c.presentation().clone()).collect();
    minimize(&interleave_product(&presentations))
}

/// The principal decimations `ψ_{0,n}(P), …, ψ_{n-1,n}(P)`.
pub fn principal_decimations(p: &PathSet, n: usize) -> Vec<PathSet> {
    (0..n).map(|j| psi(p, j, n)).collect()
}

/// `P^[n]`, the interleaving of the principal `n`-decimations.
///
/// # Panics
/// If `n == 0`.
pub fn interleaving_closure(p: &PathSet, n: usize) -> PathSet {
    assert!(n > 0, "interleaving level must be positive");
    if n == 1 || p.is_empty() {
        return p.clone();
    }
    interleave(&principal_decimations(p, n))
}

pub fn is_n_factorizable(p: &PathSet, n: usize) -> bool {
    n == 1 || equals(p, &interleaving_closure(p, n))
}

/// The unique `n`-fold factorization of `p`.
pub fn interleaving_factors(p: &PathSet, n: usize) -> Result<Vec<PathSet>> {
    if n == 0 {
        return Err(Error::InvalidArgument("interleaving level must be positive".into()));
    }
    if !is_n_factorizable(p, n) {
        return Err(Error::NotFactorizable(n));
    }
    Ok(principal_decimations(p, n))
}
