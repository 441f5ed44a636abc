//! Boolean relations on vertex sets and their eventually periodic powers.

use std::collections::HashMap;
use std::hash::Hash;

/// A subset of `0..len`, stored as a bit vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(len: usize) -> Self {
        VertexSet {
            bits: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn singleton(len: usize, v: usize) -> Self {
        let mut s = Self::new(len);
        s.insert(v);
        s
    }

    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.len);
        self.bits[v / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.len && self.bits[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= *b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&v| self.contains(v))
    }
}

/// A binary relation on `0..size`, one row of successors per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<VertexSet>,
}

impl Relation {
    pub fn empty(size: usize) -> Self {
        Relation {
            rows: vec![VertexSet::new(size); size],
        }
    }

    pub fn identity(size: usize) -> Self {
        Relation {
            rows: (0..size).map(|v| VertexSet::singleton(size, v)).collect(),
        }
    }

    pub fn from_pairs(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(size);
        for (u, v) in pairs {
            r.rows[u].insert(v);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, u: usize) -> &VertexSet {
        &self.rows[u]
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Image of a set: all `v` with `u R v` for some `u` in `set`.
    pub fn image(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.size());
        for u in set.iter() {
            out.union_with(&self.rows[u]);
        }
        out
    }

    /// Relational composition: first `self`, then `other`.
    pub fn then(&self, other: &Relation) -> Relation {
        Relation {
            rows: self.rows.iter().map(|row| other.image(row)).collect(),
        }
    }

    pub fn pow(&self, mut k: usize) -> Relation {
        let mut result = Relation::identity(self.size());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        result
    }
}

/// The orbit `x, f(x), f(f(x)), …` of a map on a finite set, stored up to
/// its first repetition: `items[index + period] == items[index]`.
#[derive(Debug, Clone)]
pub struct EventuallyPeriodic<T> {
    items: Vec<T>,
    index: usize,
    period: usize,
}

impl<T: Clone + Eq + Hash> EventuallyPeriodic<T> {
    pub fn orbit(start: T, mut step: impl FnMut(&T) -> T) -> Self {
        let mut seen: HashMap<T, usize> = HashMap::new();
        let mut items = Vec::new();
        let mut current = start;
        loop {
            if let Some(&i) = seen.get(&current) {
                let period = items.len() - i;
                return EventuallyPeriodic {
                    items,
                    index: i,
                    period,
                };
            }
            seen.insert(current.clone(), items.len());
            let next = step(&current);
            items.push(current);
            current = next;
        }
    }
}

impl<T> EventuallyPeriodic<T> {
    /// Length of the preperiod.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// The pairwise distinct terms, in order.
    pub fn distinct(&self) -> &[T] {
        &self.items
    }

    /// Position among [`Self::distinct`] of the `k`-th term.
    pub fn reduce(&self, k: usize) -> usize {
        if k < self.index {
            k
        } else {
            self.index + (k - self.index) % self.period
        }
    }

    pub fn get(&self, k: usize) -> &T {
        &self.items[self.reduce(k)]
    }
}

/// Distinct powers `U^0, U^1, …` of a relation together with the index
/// `i0` and period `p` such that `U^{i0+p} = U^{i0}`.
#[derive(Debug, Clone)]
pub struct RelationPowerTable {
    base: Relation,
    powers: EventuallyPeriodic<Relation>,
}

impl RelationPowerTable {
    pub fn new(base: Relation) -> Self {
        let powers = EventuallyPeriodic::orbit(Relation::identity(base.size()), |r| r.then(&base));
        RelationPowerTable { base, powers }
    }

    pub fn base(&self) -> &Relation {
        &self.base
    }

    pub fn index(&self) -> usize {
        self.powers.index()
    }

    pub fn period(&self) -> usize {
        self.powers.period()
    }

    pub fn powers(&self) -> &[Relation] {
        self.powers.distinct()
    }

    pub fn power(&self, k: usize) -> &Relation {
        self.powers.get(k)
    }
}
