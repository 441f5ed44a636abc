//! Canonical minimal right-resolving presentations and language-level
//! operations on them.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::alphabet::{Alphabet, Symbol, WordBlock};
use crate::presentation::{Edge, Presentation};

/// A path set in normal form.
///
/// The underlying presentation is right-resolving, pruned, reachable and
/// follower-separated, with vertices numbered breadth-first from the
/// initial vertex (out-edges explored in alphabet order). Two values over
/// the same alphabet denote the same language iff they are structurally
/// equal, so `==` is language equality; use [`equals`] across alphabets.
#[derive(Debug, Clone)]
pub struct PathSet {
    presentation: Presentation,
    transitions: Vec<Vec<Option<usize>>>,
}

impl PartialEq for PathSet {
    fn eq(&self, other: &Self) -> bool {
        self.presentation == other.presentation
    }
}

impl Eq for PathSet {}

impl std::hash::Hash for PathSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.presentation.hash(state);
    }
}

impl PartialOrd for PathSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Smaller presentations first, then by canonical edge list.
impl Ord for PathSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.num_vertices()
            .cmp(&other.num_vertices())
            .then_with(|| self.presentation.edges().cmp(other.presentation.edges()))
            .then_with(|| self.alphabet().cmp(other.alphabet()))
    }
}

impl PathSet {
    pub fn empty(alphabet: Alphabet) -> Self {
        PathSet {
            presentation: Presentation::empty(alphabet),
            transitions: Vec::new(),
        }
    }

    /// Normalizes an arbitrary presentation. Same as [`minimize`].
    pub fn from_presentation(p: &Presentation) -> Self {
        minimize(p)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.presentation.alphabet()
    }

    pub fn num_vertices(&self) -> usize {
        self.presentation.num_vertices()
    }

    pub fn is_empty(&self) -> bool {
        self.presentation.is_empty()
    }

    /// Always vertex 0 for a nonempty path set.
    pub fn initial(&self) -> Option<usize> {
        self.presentation.initial()
    }

    pub fn edges(&self) -> &[Edge] {
        self.presentation.edges()
    }

    pub fn step(&self, v: usize, a: Symbol) -> Option<usize> {
        self.transitions[v][a.index()]
    }

    /// Transition table indexed by `[vertex][symbol]`.
    pub fn transitions(&self) -> &[Vec<Option<usize>>] {
        &self.transitions
    }

    /// Vertex reached by reading `word` from the initial vertex.
    pub fn follow(&self, word: &WordBlock) -> Option<usize> {
        let mut v = self.initial()?;
        for &a in word.letters() {
            v = self.step(v, a)?;
        }
        Some(v)
    }

    /// The path set presented from vertex `v`.
    pub fn vertex_path_set(&self, v: usize) -> PathSet {
        minimize(&self.presentation.with_initial(v))
    }

    pub fn initial_blocks(&self, depth: usize) -> BTreeSet<WordBlock> {
        initial_blocks(&self.presentation, depth)
    }

    /// Re-expresses this path set over a larger alphabet (symbols matched
    /// by name) and re-canonicalizes.
    pub fn relabel(&self, alphabet: &Alphabet) -> PathSet {
        if self.alphabet() == alphabet {
            return self.clone();
        }
        minimize(&self.presentation.relabel(alphabet))
    }

    pub fn is_leveled_shape(&self) -> bool {
        (0..self.num_vertices()).all(|v| {
            let out = self.presentation.out_edges(v);
            out.iter().all(|e| e.target == out[0].target)
        })
    }

    pub fn has_initial_self_loop(&self) -> bool {
        match self.initial() {
            Some(v) => self.presentation.out_edges(v).iter().any(|e| e.target == v),
            None => false,
        }
    }
}

/// Runs the full normalization pipeline: prune, restrict to reachable,
/// determinize, merge vertices with equal follower sets, renumber.
pub fn minimize(p: &Presentation) -> PathSet {
    let trimmed = p.prune().restrict_reachable();
    if trimmed.is_empty() {
        return PathSet::empty(p.alphabet().clone());
    }
    let det = if trimmed.is_right_resolving() {
        trimmed
    } else {
        trimmed.determinize()
    };
    let k = det.alphabet().len();
    let n = det.num_vertices();
    let mut delta = vec![vec![None; k]; n];
    for e in det.edges() {
        delta[e.source][e.symbol.index()] = Some(e.target);
    }
    let class = refine(&delta, k);
    let classes = class.iter().copied().max().map_or(0, |c| c + 1);
    let mut quotient = vec![vec![None; k]; classes];
    for v in 0..n {
        for a in 0..k {
            quotient[class[v]][a] = delta[v][a].map(|w| class[w]);
        }
    }
    canonical(det.alphabet().clone(), &quotient, class[det.initial().unwrap()])
}

/// Coarsest partition in which equivalent vertices enable the same
/// symbols and step to equivalent vertices on each of them.
fn refine(delta: &[Vec<Option<usize>>], k: usize) -> Vec<usize> {
    let n = delta.len();
    let mut class = vec![0usize; n];
    let mut count = 0;
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![0usize; n];
        for v in 0..n {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[v]);
            sig.extend(delta[v].iter().map(|t| t.map_or(usize::MAX, |w| class[w])));
            let fresh = ids.len();
            next[v] = *ids.entry(sig).or_insert(fresh);
        }
        let new_count = ids.len();
        class = next;
        if new_count == count {
            return class;
        }
        count = new_count;
    }
}

/// Breadth-first renumbering of a deterministic transition table.
fn canonical(alphabet: Alphabet, delta: &[Vec<Option<usize>>], start: usize) -> PathSet {
    let mut order = vec![usize::MAX; delta.len()];
    let mut queue = VecDeque::from([start]);
    order[start] = 0;
    let mut count = 1;
    let mut visited = Vec::new();
    while let Some(v) = queue.pop_front() {
        visited.push(v);
        for w in delta[v].iter().flatten() {
            if order[*w] == usize::MAX {
                order[*w] = count;
                count += 1;
                queue.push_back(*w);
            }
        }
    }
    let k = alphabet.len();
    let mut transitions = vec![vec![None; k]; count];
    let mut edges = Vec::new();
    for &v in &visited {
        for (a, t) in delta[v].iter().enumerate() {
            if let Some(w) = t {
                transitions[order[v]][a] = Some(order[*w]);
                edges.push(Edge::new(order[v], Symbol::new(a), order[*w]));
            }
        }
    }
    let vertices = (0..count).map(|i| format!("v{i}")).collect();
    PathSet {
        presentation: Presentation::from_parts(alphabet, vertices, edges, Some(0)),
        transitions,
    }
}

/// Language equality, unifying alphabets by symbol name first.
pub fn equals(a: &PathSet, b: &PathSet) -> bool {
    if a.alphabet() == b.alphabet() {
        return a == b;
    }
    let (a, b) = unify(a, b);
    a == b
}

/// Both operands re-expressed over the union of their alphabets.
pub fn unify(a: &PathSet, b: &PathSet) -> (PathSet, PathSet) {
    let alphabet = a.alphabet().union(b.alphabet());
    (a.relabel(&alphabet), b.relabel(&alphabet))
}

pub(crate) fn unify_all(sets: &[PathSet]) -> Vec<PathSet> {
    let Some(first) = sets.first() else {
        return Vec::new();
    };
    let alphabet = sets
        .iter()
        .skip(1)
        .fold(first.alphabet().clone(), |acc, s| acc.union(s.alphabet()));
    sets.iter().map(|s| s.relabel(&alphabet)).collect()
}

/// Label sequences of length `<= depth` of walks from the initial vertex
/// that extend to infinite walks, i.e. the depth-bounded initial blocks
/// of the path set. The empty language has no blocks, not even `ε`.
pub fn initial_blocks(p: &Presentation, depth: usize) -> BTreeSet<WordBlock> {
    let pruned = p.prune();
    let mut out = BTreeSet::new();
    let Some(init) = pruned.initial() else {
        return out;
    };
    let succ = pruned.successors();
    let k = pruned.alphabet().len();
    let mut layer: Vec<(WordBlock, Vec<usize>)> = vec![(WordBlock::empty(), vec![init])];
    // Memo of subset -> per-symbol successor subsets.
    let mut memo: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    for level in 0..=depth {
        for (w, _) in &layer {
            out.insert(w.clone());
        }
        if level == depth {
            break;
        }
        let mut next = Vec::new();
        for (w, states) in layer {
            let steps = memo.entry(states.clone()).or_insert_with(|| {
                let mut t: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
                for &v in &states {
                    for &(a, x) in &succ[v] {
                        t[a.index()].insert(x);
                    }
                }
                t.into_iter().map(|s| s.into_iter().collect()).collect()
            });
            for (a, targets) in steps.iter().enumerate() {
                if !targets.is_empty() {
                    next.push((w.extended(Symbol::new(a)), targets.clone()));
                }
            }
        }
        layer = next;
    }
    out
}

/// Product construction on state pairs with synchronized labels.
pub fn intersection(a: &PathSet, b: &PathSet) -> PathSet {
    let (a, b) = unify(a, b);
    let (Some(ia), Some(ib)) = (a.initial(), b.initial()) else {
        return PathSet::empty(a.alphabet().clone());
    };
    let k = a.alphabet().len();
    let mut ids: HashMap<(usize, usize), usize> = HashMap::from([((ia, ib), 0)]);
    let mut pairs = vec![(ia, ib)];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (u, v) = pairs[i];
        for s in 0..k {
            let sym = Symbol::new(s);
            if let (Some(x), Some(y)) = (a.step(u, sym), b.step(v, sym)) {
                let fresh = pairs.len();
                let t = *ids.entry((x, y)).or_insert(fresh);
                if t == fresh {
                    pairs.push((x, y));
                }
                edges.push(Edge::new(i, sym, t));
            }
        }
        i += 1;
    }
    let vertices = pairs
        .iter()
        .map(|(u, v)| format!("{}.{}", a.presentation.vertex_name(*u), b.presentation.vertex_name(*v)))
        .collect();
    minimize(&Presentation::from_parts(
        a.alphabet().clone(),
        vertices,
        edges,
        Some(0),
    ))
}

/// Disjoint union plus a fresh initial vertex copying the out-edges of
/// both initial vertices.
pub fn union(a: &PathSet, b: &PathSet) -> PathSet {
    let (a, b) = unify(a, b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let na = a.num_vertices();
    let nb = b.num_vertices();
    let fresh = na + nb;
    let mut edges: Vec<Edge> = a.edges().to_vec();
    edges.extend(
        b.edges()
            .iter()
            .map(|e| Edge::new(e.source + na, e.symbol, e.target + na)),
    );
    for e in a.presentation.out_edges(0) {
        edges.push(Edge::new(fresh, e.symbol, e.target));
    }
    for e in b.presentation.out_edges(0) {
        edges.push(Edge::new(fresh, e.symbol, e.target + na));
    }
    let mut vertices: Vec<String> = (0..na).map(|i| format!("a{i}")).collect();
    vertices.extend((0..nb).map(|i| format!("b{i}")));
    vertices.push("start".to_string());
    minimize(&Presentation::from_parts(
        a.alphabet().clone(),
        vertices,
        edges,
        Some(fresh),
    ))
}

/// The word path set `{x : wx ∈ P}`; empty if `w` is not an initial
/// block.
pub fn word_path_set(p: &PathSet, w: &WordBlock) -> PathSet {
    match p.follow(w) {
        Some(v) => p.vertex_path_set(v),
        None => PathSet::empty(p.alphabet().clone()),
    }
}
