//! Shifts and decimations of path sets.
//!
//! `ψ_{j,n}(X)` keeps the letters at positions `j, j+n, j+2n, …` of every
//! word of `X`; the shift `S^j` is `ψ_{j,1}`. Both are built on the
//! vertex set of the input presentation (plus at most one fresh vertex)
//! and then normalized.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::factorization::LeveledProfile;
use crate::pathset::{minimize, PathSet};
use crate::presentation::{Edge, Presentation};
use crate::relation::{EventuallyPeriodic, Relation, RelationPowerTable, VertexSet};

/// The pair `(j, n)` selecting `ψ_{j,n}`. Offsets `j >= n` are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecimationIndex {
    offset: usize,
    step: usize,
}

impl DecimationIndex {
    pub fn new(offset: usize, step: usize) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidArgument("decimation step must be positive".into()));
        }
        Ok(DecimationIndex { offset, step })
    }

    pub fn offset(self) -> usize {
        self.offset
    }

    pub fn step(self) -> usize {
        self.step
    }

    pub fn is_principal(self) -> bool {
        self.offset < self.step
    }
}

impl fmt::Display for DecimationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.offset, self.step)
    }
}

/// Per-symbol edge relations and their union `U` (one-step reachability).
fn edge_relations(p: &Presentation) -> (Vec<Relation>, Relation) {
    let m = p.num_vertices();
    let k = p.alphabet().len();
    let mut pairs = vec![Vec::new(); k];
    for e in p.edges() {
        pairs[e.symbol.index()].push((e.source, e.target));
    }
    let all = Relation::from_pairs(m, p.edges().iter().map(|e| (e.source, e.target)));
    let per_symbol = pairs.into_iter().map(|ps| Relation::from_pairs(m, ps)).collect();
    (per_symbol, all)
}

/// One-step reachability relation of a path set's presentation.
pub fn step_relation(p: &PathSet) -> Relation {
    edge_relations(p.presentation()).1
}

/// The sets `V^(k)` of vertices reachable in exactly `k` steps from the
/// initial vertex, as an eventually periodic sequence.
///
/// # Panics
/// On the empty path set.
pub fn reachable_sets(p: &PathSet) -> EventuallyPeriodic<VertexSet> {
    let init = p.initial().expect("nonempty path set");
    let u = step_relation(p);
    EventuallyPeriodic::orbit(VertexSet::singleton(p.num_vertices(), init), |s| u.image(s))
}

fn fresh_name(p: &Presentation) -> String {
    let mut name = String::from("w");
    while p.vertices().contains(&name) {
        name.push('\'');
    }
    name
}

/// `p` plus a fresh initial vertex whose out-edges copy those of every
/// vertex in `set`.
fn rooted_at_set(p: &Presentation, set: &VertexSet) -> Presentation {
    let w = p.num_vertices();
    let mut vertices = p.vertices().to_vec();
    vertices.push(fresh_name(p));
    let mut edges = p.edges().to_vec();
    for u in set.iter() {
        edges.extend(p.out_edges(u).iter().map(|e| Edge::new(w, e.symbol, e.target)));
    }
    Presentation::from_parts(p.alphabet().clone(), vertices, edges, Some(w))
}

/// Raw presentation of `S^j P` with at most `m + 1` vertices (before
/// normalization). `j = 0` returns `p`'s own presentation.
pub fn shift_presentation(p: &PathSet, j: usize) -> Presentation {
    if p.is_empty() || j == 0 {
        return p.presentation().clone();
    }
    let set = reachable_sets(p).get(j).clone();
    rooted_at_set(p.presentation(), &set)
}

pub fn shift(p: &PathSet, j: usize) -> PathSet {
    if j == 0 {
        return p.clone();
    }
    minimize(&shift_presentation(p, j))
}

/// Modified higher-power construction for a principal index `j < n`: an
/// edge `u --b--> x` whenever some length-`n` path from `u` to `x` has `b`
/// as its label at offset `j`. Restricted to the reachable part.
fn higher_power(p: &Presentation, j: usize, n: usize) -> Presentation {
    debug_assert!(j < n);
    let (per_symbol, u) = edge_relations(p);
    let before = u.pow(j);
    let after = u.pow(n - 1 - j);
    let mut edges = Vec::new();
    for (a, e_a) in per_symbol.iter().enumerate() {
        let rel = before.then(e_a).then(&after);
        for src in 0..p.num_vertices() {
            edges.extend(rel.row(src).iter().map(|x| Edge::new(src, Symbol::new(a), x)));
        }
    }
    Presentation::from_parts(p.alphabet().clone(), p.vertices().to_vec(), edges, p.initial())
        .restrict_reachable()
}

/// Raw presentation of `ψ_{j,n}(P)`: at most `m` vertices for principal
/// indices, `m + 1` otherwise (via `ψ_{j,n} = ψ_{0,n} ∘ S^j`).
pub fn decimation_presentation(p: &PathSet, idx: DecimationIndex) -> Presentation {
    let (j, n) = (idx.offset, idx.step);
    if p.is_empty() {
        return p.presentation().clone();
    }
    if n == 1 {
        return shift_presentation(p, j);
    }
    if j < n {
        higher_power(p.presentation(), j, n)
    } else {
        higher_power(&shift_presentation(p, j), 0, n)
    }
}

pub fn decimate(p: &PathSet, idx: DecimationIndex) -> PathSet {
    if idx.step == 1 {
        return shift(p, idx.offset);
    }
    minimize(&decimation_presentation(p, idx))
}

/// Shorthand for `decimate(p, (j, n))`.
///
/// # Panics
/// If `n == 0`.
pub fn psi(p: &PathSet, j: usize, n: usize) -> PathSet {
    decimate(p, DecimationIndex::new(j, n).expect("positive step"))
}

/// Lexicographically least `(j, k)` with `j < k` and `S^j P = S^k P`.
pub fn weak_shift_orbit(p: &PathSet) -> Result<(usize, usize)> {
    if p.is_empty() {
        return Err(Error::EmptyPathSet);
    }
    let sets = reachable_sets(p);
    let mut seen: HashMap<PathSet, usize> = HashMap::new();
    for k in 0.. {
        let shifted = if k == 0 {
            p.clone()
        } else {
            minimize(&rooted_at_set(p.presentation(), sets.get(k)))
        };
        if let Some(&j) = seen.get(&shifted) {
            return Ok((j, k));
        }
        seen.insert(shifted, k);
    }
    unreachable!("reachable sets are eventually periodic")
}

/// The per-position alphabets `A_k`: symbols on edges leaving vertices
/// reachable in exactly `k` steps.
pub fn position_alphabets(p: &PathSet) -> Result<LeveledProfile> {
    if p.is_empty() {
        return Err(Error::EmptyPathSet);
    }
    let sets = reachable_sets(p);
    let letters = |s: &VertexSet| -> BTreeSet<Symbol> {
        s.iter()
            .flat_map(|v| p.presentation().out_edges(v).iter().map(|e| e.symbol))
            .collect()
    };
    let all: Vec<BTreeSet<Symbol>> = sets.distinct().iter().map(letters).collect();
    let (pre, per) = all.split_at(sets.index());
    LeveledProfile::new(pre.to_vec(), per.to_vec())
}

/// The `n`-kernel `{ψ_{j,n^k}(P)}`: closure of `{P}` under `S` and
/// `ψ_{0,n}`, sorted canonically.
pub fn kernel(p: &PathSet, n: usize) -> Result<Vec<PathSet>> {
    if n < 2 {
        return Err(Error::InvalidArgument("kernel base must be at least 2".into()));
    }
    let mut seen: HashSet<PathSet> = HashSet::from([p.clone()]);
    let mut queue = VecDeque::from([p.clone()]);
    while let Some(q) = queue.pop_front() {
        for next in [shift(&q, 1), psi(&q, 0, n)] {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<PathSet> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The full decimation set together with its completeness certificate.
///
/// `ψ_{j,n}(P)` depends on `j` only through `V^(j)` and on `n` only through
/// `U^{n-1}`; both sequences are eventually periodic, so enumerating their
/// distinct terms enumerates every decimation.
#[derive(Debug, Clone)]
pub struct FullDecimationSet {
    members: Vec<(PathSet, DecimationIndex)>,
    rows: EventuallyPeriodic<VertexSet>,
    powers: RelationPowerTable,
}

impl FullDecimationSet {
    /// Members in canonical order, each with the first `(j, n)` found to
    /// produce it.
    pub fn members(&self) -> &[(PathSet, DecimationIndex)] {
        &self.members
    }

    pub fn sets(&self) -> impl Iterator<Item = &PathSet> {
        self.members.iter().map(|(s, _)| s)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &PathSet) -> bool {
        self.members.binary_search_by(|(m, _)| m.cmp(s)).is_ok()
    }

    pub fn reachable_sets(&self) -> &EventuallyPeriodic<VertexSet> {
        &self.rows
    }

    pub fn power_table(&self) -> &RelationPowerTable {
        &self.powers
    }

    /// Every member is `ψ_{j,n}` for some `j < max_offset()`.
    pub fn max_offset(&self) -> usize {
        self.rows.index() + self.rows.period()
    }

    /// Every member is `ψ_{j,n}` for some `1 <= n <= max_step()`.
    pub fn max_step(&self) -> usize {
        self.powers.index() + self.powers.period()
    }
}

pub fn full_decimation_set(p: &PathSet) -> Result<FullDecimationSet> {
    if p.is_empty() {
        return Err(Error::EmptyPathSet);
    }
    let pres = p.presentation();
    let m = pres.num_vertices();
    let rows = reachable_sets(p);
    let powers = RelationPowerTable::new(step_relation(p));
    let mut found: HashMap<PathSet, DecimationIndex> = HashMap::new();
    for (j, row) in rows.distinct().iter().enumerate() {
        for (t, power) in powers.powers().iter().enumerate() {
            let mut edges = Vec::new();
            for e in pres.edges() {
                edges.extend(power.row(e.target).iter().map(|x| Edge::new(e.source, e.symbol, x)));
            }
            for u in row.iter() {
                for e in pres.out_edges(u) {
                    edges.extend(power.row(e.target).iter().map(|x| Edge::new(m, e.symbol, x)));
                }
            }
            let mut vertices = pres.vertices().to_vec();
            vertices.push(fresh_name(pres));
            let candidate = minimize(&Presentation::from_parts(
                pres.alphabet().clone(),
                vertices,
                edges,
                Some(m),
            ));
            let idx = DecimationIndex { offset: j, step: t + 1 };
            found.entry(candidate).or_insert(idx);
        }
    }
    let mut members: Vec<(PathSet, DecimationIndex)> = found.into_iter().collect();
    members.sort();
    Ok(FullDecimationSet {
        members,
        rows,
        powers,
    })
}
