//! Word-level reference semantics on depth-bounded block sets.
//!
//! Everything here works on explicit finite word lists and shares no code
//! with the automaton algorithms beyond the presentation data type, so it
//! can be used to cross-check them.

use std::collections::BTreeSet;

use crate::alphabet::{Symbol, WordBlock};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// The initial blocks of a path set up to a fixed depth: prefix-closed,
/// and every block shorter than the depth extends by one letter inside
/// the set. The empty language has no blocks at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSet {
    depth: usize,
    blocks: Vec<WordBlock>,
}

impl BlockSet {
    pub fn new(depth: usize, blocks: impl IntoIterator<Item = WordBlock>) -> Result<Self> {
        let set: BTreeSet<WordBlock> = blocks.into_iter().collect();
        for w in &set {
            if w.len() > depth {
                return Err(Error::InvalidBlockSet(format!("block of length {} exceeds depth {depth}", w.len())));
            }
            if !w.is_empty() && !set.contains(&w.prefix(w.len() - 1)) {
                return Err(Error::InvalidBlockSet("not prefix-closed".into()));
            }
        }
        let mut extendable: BTreeSet<WordBlock> = BTreeSet::new();
        for w in set.iter().filter(|w| !w.is_empty()) {
            extendable.insert(w.prefix(w.len() - 1));
        }
        if set.iter().any(|w| w.len() < depth && !extendable.contains(w)) {
            return Err(Error::InvalidBlockSet("a short block has no extension".into()));
        }
        Ok(BlockSet {
            depth,
            blocks: set.into_iter().collect(),
        })
    }

    /// Prefix closure of a set of words that all have length `depth`.
    pub fn from_full_blocks(depth: usize, words: impl IntoIterator<Item = Vec<Symbol>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for w in words {
            for len in 0..=w.len() {
                set.insert(WordBlock::new(w[..len].to_vec()));
            }
        }
        BlockSet::new(depth, set)
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Blocks in shortlex order.
    pub fn blocks(&self) -> &[WordBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, w: &WordBlock) -> bool {
        self.blocks.binary_search(w).is_ok()
    }

    /// Blocks of length exactly `depth`.
    pub fn full_blocks(&self) -> impl Iterator<Item = &WordBlock> {
        self.blocks.iter().filter(move |w| w.len() == self.depth)
    }

    pub fn is_subset(&self, other: &BlockSet) -> bool {
        self.blocks.iter().all(|w| other.contains(w))
    }

    /// The blocks of length `<= depth`, for `depth <= self.depth()`.
    pub fn truncate(&self, depth: usize) -> BlockSet {
        assert!(depth <= self.depth, "cannot truncate to a larger depth");
        BlockSet {
            depth,
            blocks: self.blocks.iter().filter(|w| w.len() <= depth).cloned().collect(),
        }
    }

    /// The blocks as a sorted set, for comparison with
    /// [`crate::initial_blocks`].
    pub fn to_set(&self) -> BTreeSet<WordBlock> {
        self.blocks.iter().cloned().collect()
    }
}

/// Brute-force enumeration of the labels of walks of length `<= depth`
/// from the initial vertex that stay among vertices with arbitrarily
/// long continuations.
pub fn blocks_of(p: &Presentation, depth: usize) -> BlockSet {
    let m = p.num_vertices();
    let Some(init) = p.initial() else {
        return BlockSet { depth, blocks: Vec::new() };
    };
    // A vertex has an infinite walk iff it has a walk of length m.
    let mut alive = vec![true; m];
    for _ in 0..m {
        let prev = alive.clone();
        for (v, live) in alive.iter_mut().enumerate() {
            *live = p.out_edges(v).iter().any(|e| prev[e.target]);
        }
    }
    if !alive[init] {
        return BlockSet { depth, blocks: Vec::new() };
    }
    let mut out = BTreeSet::new();
    let mut layer: BTreeSet<(Vec<Symbol>, usize)> = BTreeSet::from([(Vec::new(), init)]);
    for level in 0..=depth {
        out.extend(layer.iter().map(|(w, _)| WordBlock::new(w.clone())));
        if level == depth {
            break;
        }
        let mut next = BTreeSet::new();
        for (w, v) in &layer {
            for e in p.out_edges(*v).iter().filter(|e| alive[e.target]) {
                let mut longer = w.clone();
                longer.push(e.symbol);
                next.insert((longer, e.target));
            }
        }
        layer = next;
    }
    BlockSet::new(depth, out).expect("walk labels form a block set")
}

/// Letters at positions `j, j+n, …` of every full-length block, then
/// prefix-closed. The result has depth `⌈(depth − j)/n⌉`.
pub fn blocks_decimate(b: &BlockSet, j: usize, n: usize) -> Result<BlockSet> {
    if j >= n {
        return Err(Error::InvalidArgument(format!("need j < n, got j={j} n={n}")));
    }
    let depth = b.depth.saturating_sub(j).div_ceil(n);
    let words = b
        .full_blocks()
        .map(|w| w.letters().iter().skip(j).step_by(n).copied().collect::<Vec<_>>());
    BlockSet::from_full_blocks(depth, words)
}

/// Word-level interleaving of equal-depth block sets: depth `n·L`.
pub fn blocks_interleave(components: &[BlockSet]) -> Result<BlockSet> {
    let Some(first) = components.first() else {
        return Err(Error::InvalidArgument("interleaving needs at least one component".into()));
    };
    let depth = first.depth;
    if let Some(c) = components.iter().find(|c| c.depth != depth) {
        return Err(Error::DepthMismatch(depth, c.depth));
    }
    let n = components.len();
    let fulls: Vec<Vec<&WordBlock>> = components.iter().map(|c| c.full_blocks().collect()).collect();
    if fulls.iter().any(Vec::is_empty) {
        return BlockSet::new(n * depth, []);
    }
    let mut words = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let mut w = Vec::with_capacity(n * depth);
        for q in 0..depth {
            for (i, full) in fulls.iter().enumerate() {
                w.push(full[choice[i]].letters()[q]);
            }
        }
        words.push(w);
        // Odometer over the component choices.
        let mut i = 0;
        while i < n {
            choice[i] += 1;
            if choice[i] < fulls[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    BlockSet::from_full_blocks(n * depth, words)
}

/// Language equality by comparing initial blocks of length `m1 + m2`,
/// determinizing first when needed.
pub fn equals_blockwise(p1: &Presentation, p2: &Presentation) -> bool {
    let alphabet = p1.alphabet().union(p2.alphabet());
    let prepare = |p: &Presentation| {
        let p = p.relabel(&alphabet);
        if p.is_right_resolving() {
            p
        } else {
            p.determinize()
        }
    };
    let (a, b) = (prepare(p1), prepare(p2));
    let depth = a.num_vertices() + b.num_vertices();
    blocks_of(&a, depth) == blocks_of(&b, depth)
}
