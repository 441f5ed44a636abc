//! Pointed labeled directed graphs and the structural steps of the
//! normalization pipeline: pruning, reachable restriction and the subset
//! construction.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

/// A labeled edge `source --symbol--> target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub symbol: Symbol,
    pub target: usize,
}

impl Edge {
    pub fn new(source: usize, symbol: Symbol, target: usize) -> Self {
        Edge {
            source,
            symbol,
            target,
        }
    }
}

/// A presentation `(G, v)`: an edge-labeled directed graph with a marked
/// initial vertex.
///
/// Edges are kept sorted by `(source, symbol, target)` and are distinct.
/// No determinism, pruning or reachability is assumed. A presentation with
/// no initial vertex (and no vertices) is the empty presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    alphabet: Alphabet,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    initial: Option<usize>,
}

/// Unchecked, name-based description of a presentation, as read from a
/// file or written by hand.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawPresentation {
    pub alphabet: Vec<String>,
    pub vertices: Vec<String>,
    pub initial: Option<String>,
    pub edges: Vec<(String, String, String)>,
}

impl RawPresentation {
    pub fn validate(&self) -> Result<Presentation> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let mut ids = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if ids.insert(v.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let vertex = |name: &str| {
            ids.get(name)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (src, sym, dst) in &self.edges {
            let edge = Edge::new(
                vertex(src)?,
                alphabet
                    .lookup(sym)
                    .ok_or_else(|| Error::UnknownSymbol(sym.clone()))?,
                vertex(dst)?,
            );
            if !seen.insert(edge) {
                return Err(Error::DuplicateEdgeTriple(
                    src.clone(),
                    sym.clone(),
                    dst.clone(),
                ));
            }
            edges.push(edge);
        }
        let initial = match &self.initial {
            Some(name) => Some(vertex(name)?),
            None if self.vertices.is_empty() => None,
            None => return Err(Error::MissingInitial),
        };
        Ok(Presentation::from_parts(
            alphabet,
            self.vertices.clone(),
            edges,
            initial,
        ))
    }
}

impl Presentation {
    /// Builds a presentation from names. Mostly useful for fixtures.
    pub fn build(
        alphabet: &[&str],
        vertices: &[&str],
        initial: &str,
        edges: &[(&str, &str, &str)],
    ) -> Result<Self> {
        RawPresentation {
            alphabet: alphabet.iter().map(|s| s.to_string()).collect(),
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            initial: Some(initial.to_string()),
            edges: edges
                .iter()
                .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
                .collect(),
        }
        .validate()
    }

    /// Checked constructor over indices.
    pub fn new(
        alphabet: Alphabet,
        vertices: Vec<String>,
        edges: Vec<Edge>,
        initial: usize,
    ) -> Result<Self> {
        let names: HashSet<&String> = vertices.iter().collect();
        if names.len() != vertices.len() {
            let mut seen = HashSet::new();
            let dup = vertices.iter().find(|v| !seen.insert(*v)).unwrap();
            return Err(Error::DuplicateVertex(dup.clone()));
        }
        let n = vertices.len();
        if initial >= n {
            return Err(Error::UnknownVertex(format!("#{initial}")));
        }
        let mut seen = HashSet::new();
        for e in &edges {
            if e.source >= n || e.target >= n {
                return Err(Error::UnknownVertex(format!(
                    "#{}",
                    e.source.max(e.target)
                )));
            }
            if e.symbol.index() >= alphabet.len() {
                return Err(Error::UnknownSymbol(format!("#{}", e.symbol.index())));
            }
            if !seen.insert(*e) {
                return Err(Error::DuplicateEdgeTriple(
                    vertices[e.source].clone(),
                    alphabet.name(e.symbol).to_string(),
                    vertices[e.target].clone(),
                ));
            }
        }
        Ok(Self::from_parts(alphabet, vertices, edges, Some(initial)))
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Presentation {
            alphabet,
            vertices: Vec::new(),
            edges: Vec::new(),
            initial: None,
        }
    }

    /// Internal constructor: sorts edges and discards duplicates.
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        vertices: Vec<String>,
        mut edges: Vec<Edge>,
        initial: Option<usize>,
    ) -> Self {
        if initial.is_none() {
            return Presentation::empty(alphabet);
        }
        edges.sort_unstable();
        edges.dedup();
        Presentation {
            alphabet,
            vertices,
            edges,
            initial,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    pub fn is_empty(&self) -> bool {
        self.initial.is_none()
    }

    /// Out-edges of `v`, sorted by symbol then target.
    pub fn out_edges(&self, v: usize) -> &[Edge] {
        let lo = self.edges.partition_point(|e| e.source < v);
        let hi = self.edges.partition_point(|e| e.source <= v);
        &self.edges[lo..hi]
    }

    /// Adjacency lists `(symbol, target)` per vertex.
    pub fn successors(&self) -> Vec<Vec<(Symbol, usize)>> {
        let mut succ = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            succ[e.source].push((e.symbol, e.target));
        }
        succ
    }

    pub fn is_right_resolving(&self) -> bool {
        self.edges
            .windows(2)
            .all(|w| (w[0].source, w[0].symbol) != (w[1].source, w[1].symbol))
    }

    pub fn is_pruned(&self) -> bool {
        let mut has_out = vec![false; self.vertices.len()];
        for e in &self.edges {
            has_out[e.source] = true;
        }
        has_out.into_iter().all(|b| b)
    }

    pub fn is_reachable(&self) -> bool {
        self.reachable_mask().into_iter().all(|b| b)
    }

    /// Re-expresses the presentation over a larger alphabet, matching
    /// symbols by name.
    ///
    /// # Panics
    /// If some symbol of `self` is missing from `target`.
    pub fn relabel(&self, target: &Alphabet) -> Presentation {
        if &self.alphabet == target {
            return self.clone();
        }
        let map: Vec<Symbol> = self
            .alphabet
            .symbols()
            .map(|s| {
                self.alphabet
                    .translate(s, target)
                    .expect("target alphabet must contain every symbol")
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.source, map[e.symbol.index()], e.target))
            .collect();
        Presentation::from_parts(target.clone(), self.vertices.clone(), edges, self.initial)
    }

    /// Same graph, different marked vertex.
    pub fn with_initial(&self, v: usize) -> Presentation {
        assert!(v < self.vertices.len(), "vertex out of range");
        Presentation {
            initial: Some(v),
            ..self.clone()
        }
    }

    /// Induced subgraph on `keep`. Yields the empty presentation if the
    /// initial vertex is dropped.
    fn induced(&self, keep: &[bool]) -> Presentation {
        let Some(init) = self.initial else {
            return self.clone();
        };
        if !keep[init] {
            return Presentation::empty(self.alphabet.clone());
        }
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (v, name) in self.vertices.iter().enumerate() {
            if keep[v] {
                remap[v] = vertices.len();
                vertices.push(name.clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.source] && keep[e.target])
            .map(|e| Edge::new(remap[e.source], e.symbol, remap[e.target]))
            .collect();
        Presentation::from_parts(self.alphabet.clone(), vertices, edges, Some(remap[init]))
    }

    /// Iteratively deletes vertices without out-edges (and the edges into
    /// them) until none remain.
    pub fn prune(&self) -> Presentation {
        let n = self.vertices.len();
        let mut alive = vec![true; n];
        let mut out_degree = vec![0usize; n];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            out_degree[e.source] += 1;
            preds[e.target].push(e.source);
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| out_degree[v] == 0).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &u in &preds[v] {
                if alive[u] {
                    out_degree[u] -= 1;
                    if out_degree[u] == 0 {
                        stack.push(u);
                    }
                }
            }
        }
        self.induced(&alive)
    }

    fn reachable_mask(&self) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let Some(init) = self.initial else {
            return seen;
        };
        let succ = self.successors();
        let mut stack = vec![init];
        seen[init] = true;
        while let Some(v) = stack.pop() {
            for &(_, w) in &succ[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Induced subgraph on the vertices reachable from the initial vertex.
    pub fn restrict_reachable(&self) -> Presentation {
        let keep = self.reachable_mask();
        self.induced(&keep)
    }

    /// Subset construction. States are the nonempty vertex sets reachable
    /// from `{initial}`, numbered in breadth-first discovery order with
    /// symbols explored in alphabet order; each state is named by its
    /// sorted member list, e.g. `{n1,n2}`.
    pub fn determinize(&self) -> Presentation {
        let Some(init) = self.initial else {
            return self.clone();
        };
        let succ = self.successors();
        let k = self.alphabet.len();
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut states: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        ids.insert(vec![init], 0);
        states.push(vec![init]);
        queue.push_back(0);
        let mut edges = Vec::new();
        while let Some(id) = queue.pop_front() {
            let mut targets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
            for &v in &states[id] {
                for &(a, w) in &succ[v] {
                    targets[a.index()].insert(w);
                }
            }
            for (a, set) in targets.into_iter().enumerate() {
                if set.is_empty() {
                    continue;
                }
                let members: Vec<usize> = set.into_iter().collect();
                let next = match ids.get(&members) {
                    Some(&t) => t,
                    None => {
                        let t = states.len();
                        ids.insert(members.clone(), t);
                        states.push(members);
                        queue.push_back(t);
                        t
                    }
                };
                edges.push(Edge::new(id, Symbol::new(a), next));
            }
        }
        let vertices = states
            .iter()
            .map(|members| {
                let names: Vec<&str> = members.iter().map(|&v| self.vertex_name(v)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        Presentation::from_parts(self.alphabet.clone(), vertices, edges, Some(0))
    }
}
