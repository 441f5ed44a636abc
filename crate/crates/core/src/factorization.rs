//! Factorization structure: leveled sets, the factorization exponent,
//! factor sets, complete factorization trees and missing configurations.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::alphabet::{Alphabet, Symbol, WordBlock};
use crate::decimation::{position_alphabets, psi, reachable_sets};
use crate::error::{Error, Result};
use crate::interleaving::{interleaving_factors, is_n_factorizable};
use crate::pathset::{equals, minimize, PathSet};
use crate::presentation::{Edge, Presentation};
use crate::relation::VertexSet;

pub type SymbolSet = BTreeSet<Symbol>;

/// An eventually periodic sequence of nonempty symbol sets `A_0, A_1, …`,
/// denoting the product `∏ A_k`.
///
/// Stored in reduced form: the period is primitive and the preperiod is
/// as short as possible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeveledProfile {
    preperiod: Vec<SymbolSet>,
    period: Vec<SymbolSet>,
}

impl LeveledProfile {
    pub fn new(preperiod: Vec<SymbolSet>, period: Vec<SymbolSet>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidArgument("profile period must be nonempty".into()));
        }
        if preperiod.iter().chain(&period).any(BTreeSet::is_empty) {
            return Err(Error::InvalidArgument("profile sets must be nonempty".into()));
        }
        let mut period = period;
        let p = period.len();
        if let Some(d) = (1..p).find(|d| p.is_multiple_of(*d) && (0..p).all(|i| period[i] == period[i % d])) {
            period.truncate(d);
        }
        let mut preperiod = preperiod;
        while preperiod.last().is_some_and(|last| last == period.last().unwrap()) {
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(LeveledProfile { preperiod, period })
    }

    pub fn preperiod(&self) -> &[SymbolSet] {
        &self.preperiod
    }

    pub fn period(&self) -> &[SymbolSet] {
        &self.period
    }

    /// `A_k`.
    pub fn at(&self, k: usize) -> &SymbolSet {
        let s = self.preperiod.len();
        if k < s {
            &self.preperiod[k]
        } else {
            &self.period[(k - s) % self.period.len()]
        }
    }

    /// Rho-shaped leveled presentation: a chain for the preperiod feeding
    /// a cycle for the period.
    pub fn to_presentation(&self, alphabet: &Alphabet) -> Presentation {
        let s = self.preperiod.len();
        let total = s + self.period.len();
        let vertices = (0..total).map(|i| format!("r{i}")).collect();
        let mut edges = Vec::new();
        for k in 0..total {
            let next = if k + 1 == total { s } else { k + 1 };
            edges.extend(self.at(k).iter().map(|&a| Edge::new(k, a, next)));
        }
        Presentation::from_parts(alphabet.clone(), vertices, edges, Some(0))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayProfile<'a> {
        DisplayProfile {
            profile: self,
            alphabet,
        }
    }
}

pub struct DisplayProfile<'a> {
    profile: &'a LeveledProfile,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayProfile<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |sets: &[SymbolSet]| {
            sets.iter()
                .map(|s| {
                    let names: Vec<&str> = s.iter().map(|&a| self.alphabet.name(a)).collect();
                    format!("{{{}}}", names.join(","))
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "([{}],[{}])", list(&self.profile.preperiod), list(&self.profile.period))
    }
}

/// `Some(profile)` iff every vertex of the minimal presentation has a
/// single out-target. Leveled sets are exactly the infinitely factorizable
/// ones.
pub fn is_leveled(p: &PathSet) -> Result<Option<LeveledProfile>> {
    if p.is_empty() {
        return Err(Error::EmptyPathSet);
    }
    if p.is_leveled_shape() {
        position_alphabets(p).map(Some)
    } else {
        Ok(None)
    }
}

/// The smallest leveled path set `∏ A_k` containing `p`.
pub fn leveled_envelope(p: &PathSet) -> Result<PathSet> {
    let profile = position_alphabets(p)?;
    Ok(minimize(&profile.to_presentation(p.alphabet())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorizationExponent {
    Infinite,
    Finite(usize),
}

impl fmt::Display for FactorizationExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorizationExponent::Infinite => f.write_str("infinite"),
            FactorizationExponent::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// `Infinite` for leveled sets; otherwise the largest factorizable
/// `n <= m - 1`, whose divisors are exactly the factorizable levels.
pub fn factorization_exponent(p: &PathSet) -> Result<FactorizationExponent> {
    if is_leveled(p)?.is_some() {
        return Ok(FactorizationExponent::Infinite);
    }
    let m = p.num_vertices();
    let levels: Vec<usize> = (1..m).filter(|&n| is_n_factorizable(p, n)).collect();
    let f = levels.last().copied().unwrap_or(1);
    debug_assert!(levels.iter().all(|n| f % n == 0));
    Ok(FactorizationExponent::Finite(f))
}

/// Every path set occurring as a factor in some interleaving
/// factorization of `p`, sorted canonically.
pub fn factor_set(p: &PathSet) -> Result<Vec<PathSet>> {
    let mut found: HashSet<PathSet> = HashSet::new();
    match factorization_exponent(p)? {
        FactorizationExponent::Infinite => {
            let m = p.num_vertices();
            for n in 1..2 * m {
                found.extend((0..n).map(|j| psi(p, j, n)));
            }
            debug_assert!(found.len() <= m * m);
        }
        FactorizationExponent::Finite(f) => {
            for n in (1..=f).filter(|n| f % n == 0) {
                if let Ok(factors) = interleaving_factors(p, n) {
                    found.extend(factors);
                }
            }
        }
    }
    let mut out: Vec<PathSet> = found.into_iter().collect();
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeStatus {
    FrozenLeveled(LeveledProfile),
    Indecomposable,
    Factored { n: usize, children: Vec<FactorizationTree> },
}

/// An iterated interleaving factorization whose leaves are indecomposable
/// or leveled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationTree {
    value: PathSet,
    status: NodeStatus,
}

impl FactorizationTree {
    pub fn value(&self) -> &PathSet {
        &self.value
    }

    pub fn status(&self) -> &NodeStatus {
        &self.status
    }

    pub fn children(&self) -> &[FactorizationTree] {
        match &self.status {
            NodeStatus::Factored { children, .. } => children,
            _ => &[],
        }
    }

    /// Edges on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.children().iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    pub fn leaves(&self) -> Vec<&FactorizationTree> {
        if self.children().is_empty() {
            vec![self]
        } else {
            self.children().iter().flat_map(FactorizationTree::leaves).collect()
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    /// All nodes in preorder.
    pub fn nodes(&self) -> Vec<&FactorizationTree> {
        let mut out = vec![self];
        for c in self.children() {
            out.extend(c.nodes());
        }
        out
    }

    /// One line per node, children indented by two spaces.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, indent: usize, out: &mut String) {
        let pad = " ".repeat(indent * 2);
        let m = self.value.num_vertices();
        let alphabet = self.value.alphabet();
        let line = match &self.status {
            NodeStatus::FrozenLeveled(profile) => {
                format!("leveled {} [{m} vertices]", profile.display(alphabet))
            }
            NodeStatus::Indecomposable => format!("indecomposable [{m} vertices]"),
            NodeStatus::Factored { n, .. } => format!("factored n={n} [{m} vertices]"),
        };
        out.push_str(&pad);
        out.push_str(&line);
        out.push('\n');
        for c in self.children() {
            c.render_into(indent + 1, out);
        }
    }
}

/// Builds a complete factorization, always splitting at the smallest
/// factorizable level `n >= 2`.
pub fn complete_factorization(p: &PathSet) -> Result<FactorizationTree> {
    if let Some(profile) = is_leveled(p)? {
        return Ok(FactorizationTree {
            value: p.clone(),
            status: NodeStatus::FrozenLeveled(profile),
        });
    }
    let m = p.num_vertices();
    let Some(n) = (2..m).find(|&n| is_n_factorizable(p, n)) else {
        return Ok(FactorizationTree {
            value: p.clone(),
            status: NodeStatus::Indecomposable,
        });
    };
    let children = interleaving_factors(p, n)?
        .iter()
        .map(complete_factorization)
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorizationTree {
        value: p.clone(),
        status: NodeStatus::Factored { n, children },
    })
}

/// Whether the minimal presentation has a self-loop at its initial vertex.
pub fn self_loop_criterion(p: &PathSet) -> Result<bool> {
    if p.is_empty() {
        return Err(Error::EmptyPathSet);
    }
    Ok(p.has_initial_self_loop())
}

/// A block `b` of length `l + 1` with `b[i] ∈ A_{k+i}` that no word of the
/// path set carries at position `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingConfiguration {
    pub k: usize,
    pub l: usize,
    pub block: WordBlock,
}

impl MissingConfiguration {
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> String {
        format!("k={} l={} block={}", self.k, self.l, self.block.display(alphabet))
    }
}

/// The least missing configuration under `(k + l, k, block)`, or `None`
/// for leveled sets.
pub fn missing_configuration(p: &PathSet) -> Result<Option<MissingConfiguration>> {
    if is_leveled(p)?.is_some() {
        return Ok(None);
    }
    let profile = position_alphabets(p)?;
    let sets = reachable_sets(p);
    let envelope = profile.to_presentation(p.alphabet()).num_vertices();
    // Some envelope word leaves p within this many letters.
    let limit = p.num_vertices() * envelope + 1;
    for total in 1..=limit {
        for k in 0..total {
            let l = total - k;
            let mut block = WordBlock::empty();
            if search(p, &profile, k, l + 1, sets.get(k).clone(), &mut block) {
                return Ok(Some(MissingConfiguration { k, l, block }));
            }
        }
    }
    Ok(None)
}

/// Depth-first search in lexicographic order for a completion of `block`
/// to `len` letters that cannot be read from any vertex of `from`.
fn search(
    p: &PathSet,
    profile: &LeveledProfile,
    k: usize,
    len: usize,
    from: VertexSet,
    block: &mut WordBlock,
) -> bool {
    let i = block.len();
    if i == len {
        return from.is_empty();
    }
    let letters = profile.at(k + i);
    if from.is_empty() {
        block.push(*letters.iter().next().unwrap());
        return search(p, profile, k, len, from, block);
    }
    for &a in letters {
        let mut next = VertexSet::new(from.universe());
        for v in from.iter() {
            if let Some(w) = p.step(v, a) {
                next.insert(w);
            }
        }
        block.push(a);
        if search(p, profile, k, len, next, block) {
            return true;
        }
        *block = block.prefix(i);
    }
    false
}

/// Whether `p` equals its leveled envelope (the second infinite
/// factorizability test).
pub fn equals_envelope(p: &PathSet) -> Result<bool> {
    Ok(equals(p, &leveled_envelope(p)?))
}
