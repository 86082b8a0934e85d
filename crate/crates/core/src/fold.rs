//! Union-find folding of edge-labeled graphs.
//!
//! The same closure serves both core construction and congruence closure on
//! automata: same-labeled out-edges of a class are merged (downward), and
//! classes with identical child pairs are merged (upward).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::automaton::{TreeAutomaton, Vertex};

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; the smaller representative wins.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    /// Class labels numbered by first occurrence.
    pub(crate) fn partition(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut label = alloc::vec![usize::MAX; n];
        let mut out = Vec::with_capacity(n);
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out.push(label[r]);
        }
        out
    }
}

pub(crate) struct Folding {
    uf: UnionFind,
    edges: Vec<(usize, u8, usize)>,
}

impl Folding {
    pub(crate) fn new(vertex_count: usize, edges: Vec<(usize, u8, usize)>) -> Self {
        Folding {
            uf: UnionFind::new(vertex_count),
            edges,
        }
    }

    pub(crate) fn of_automaton(a: &TreeAutomaton) -> Self {
        let mut edges = Vec::new();
        for v in 0..a.vertex_count() {
            if let Some([c0, c1]) = a.children(v) {
                edges.push((v, 0, c0));
                edges.push((v, 1, c1));
            }
        }
        Self::new(a.vertex_count(), edges)
    }

    /// Starts from an existing partition given as class labels.
    pub(crate) fn seed_partition(&mut self, labels: &[usize]) {
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        for (x, &l) in labels.iter().enumerate() {
            match first.get(&l) {
                Some(&y) => {
                    self.uf.union(x, y);
                }
                None => {
                    first.insert(l, x);
                }
            }
        }
    }

    pub(crate) fn merge(&mut self, a: usize, b: usize) {
        self.uf.union(a, b);
    }

    /// Applies both folding rules until neither changes anything.
    pub(crate) fn close(&mut self) {
        loop {
            let mut changed = false;
            loop {
                let mut merged = false;
                let mut target: BTreeMap<(usize, u8), usize> = BTreeMap::new();
                for i in 0..self.edges.len() {
                    let (s, d, t) = self.edges[i];
                    let key = (self.uf.find(s), d);
                    let t = self.uf.find(t);
                    match target.get(&key) {
                        Some(&other) if other != t => {
                            self.uf.union(other, t);
                            merged = true;
                        }
                        Some(_) => {}
                        None => {
                            target.insert(key, t);
                        }
                    }
                }
                if !merged {
                    break;
                }
                changed = true;
            }
            let children = self.class_children();
            let mut fathers: BTreeMap<[usize; 2], usize> = BTreeMap::new();
            for (class, kids) in children {
                if let Some(pair) = kids {
                    match fathers.get(&pair) {
                        Some(&other) => {
                            if self.uf.union(other, class) {
                                changed = true;
                            }
                        }
                        None => {
                            fathers.insert(pair, class);
                        }
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    /// Children of each class representative, assuming rule (1) is closed.
    fn class_children(&mut self) -> BTreeMap<usize, Option<[usize; 2]>> {
        let mut slots: BTreeMap<usize, [Option<usize>; 2]> = BTreeMap::new();
        for i in 0..self.edges.len() {
            let (s, d, t) = self.edges[i];
            let s = self.uf.find(s);
            let t = self.uf.find(t);
            slots.entry(s).or_insert([None, None])[d as usize] = Some(t);
        }
        slots
            .into_iter()
            .map(|(c, [a, b])| (c, a.zip(b).map(|(a, b)| [a, b])))
            .collect()
    }

    pub(crate) fn partition(&mut self) -> Vec<usize> {
        self.uf.partition()
    }

    /// The folded graph as an automaton rooted at the class of `root`.
    pub(crate) fn into_automaton(mut self, root: usize) -> TreeAutomaton {
        let labels = self.uf.partition();
        let classes = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut children: Vec<Option<[Vertex; 2]>> = alloc::vec![None; classes];
        let mut slots: Vec<[Option<usize>; 2]> = alloc::vec![[None, None]; classes];
        for &(s, d, t) in &self.edges {
            slots[labels[s]][d as usize] = Some(labels[t]);
        }
        for (c, [a, b]) in slots.into_iter().enumerate() {
            children[c] = a.zip(b).map(|(a, b)| [a, b]);
        }
        TreeAutomaton::canonical_from_children(labels[root], &children)
    }
}
