//! Rooted tree-automata over the alphabet `{0, 1}`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::element::TreeDiagram;
use crate::fold::Folding;
use crate::words::{BinaryTree, Word};

/// Index of a vertex inside one automaton.
pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomatonError {
    InvalidDigit(u8),
    DuplicateEdge {
        vertex: String,
        digit: u8,
    },
    /// A vertex with exactly one outgoing edge.
    HalfFather(String),
    /// Two fathers with the same left and right children.
    SharedChildren(String, String),
    Unreachable(String),
    NotALeaf(String),
    CapExceeded {
        cap: usize,
    },
}

impl core::error::Error for AutomatonError {}

impl fmt::Display for AutomatonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomatonError::InvalidDigit(d) => write!(f, "edge label {} is not 0 or 1", d),
            AutomatonError::DuplicateEdge { vertex, digit } => {
                write!(f, "vertex {} has two edges labeled {}", vertex, digit)
            }
            AutomatonError::HalfFather(v) => write!(f, "vertex {} has exactly one outgoing edge", v),
            AutomatonError::SharedChildren(a, b) => {
                write!(f, "fathers {} and {} have the same children", a, b)
            }
            AutomatonError::Unreachable(v) => write!(f, "vertex {} is not reachable from the root", v),
            AutomatonError::NotALeaf(v) => write!(f, "vertex {} is not a leaf", v),
            AutomatonError::CapExceeded { cap } => write!(f, "more than {} quotients", cap),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    Root,
    /// Reached by `0^n`, `n ≥ 1`.
    Left,
    /// Reached by `1^n`, `n ≥ 1`.
    Right,
    /// Reached by a word containing both digits.
    Middle,
}

impl VertexType {
    pub const ALL: [VertexType; 4] = [
        VertexType::Root,
        VertexType::Left,
        VertexType::Right,
        VertexType::Middle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VertexType::Root => "root",
            VertexType::Left => "left",
            VertexType::Right => "right",
            VertexType::Middle => "middle",
        }
    }

    /// Type of the vertex reached by `w`.
    pub fn of_word(w: &Word) -> VertexType {
        match (w.contains_digit(0), w.contains_digit(1)) {
            (false, false) => VertexType::Root,
            (true, false) => VertexType::Left,
            (false, true) => VertexType::Right,
            (true, true) => VertexType::Middle,
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }

    fn after(self, digit: u8) -> VertexType {
        match (self, digit) {
            (VertexType::Root, 0) | (VertexType::Left, 0) => VertexType::Left,
            (VertexType::Root, _) | (VertexType::Right, 1) => VertexType::Right,
            _ => VertexType::Middle,
        }
    }
}

/// A set of vertex types.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct TypeSet(u8);

impl TypeSet {
    pub fn insert(&mut self, t: VertexType) {
        self.0 |= t.bit();
    }

    pub fn contains(self, t: VertexType) -> bool {
        self.0 & t.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The type, if the set has exactly one.
    pub fn single(self) -> Option<VertexType> {
        if self.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    pub fn iter(self) -> impl Iterator<Item = VertexType> {
        VertexType::ALL.into_iter().filter(move |t| self.contains(*t))
    }
}

impl fmt::Debug for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The unique morphism between two automata, when it exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    /// Image of each source vertex.
    pub map: Vec<Vertex>,
    pub surjective: bool,
}

/// Isomorphism invariant: children lists in breadth-first numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<Option<[u32; 2]>>);

/// A rooted tree-automaton.
///
/// Every vertex has either no outgoing edges or one edge for each digit,
/// distinct fathers have distinct child pairs, and every vertex is reachable
/// from the root.
#[derive(Clone, PartialEq, Eq)]
pub struct TreeAutomaton {
    root: Vertex,
    children: Vec<Option<[Vertex; 2]>>,
    names: Vec<String>,
}

impl TreeAutomaton {
    /// Builds an automaton from named edges `(source, digit, target)`.
    ///
    /// Vertices are numbered by first appearance, root first.
    pub fn from_edges<S: AsRef<str>>(root: &str, edges: &[(S, u8, S)]) -> Result<Self, AutomatonError> {
        let mut index: BTreeMap<String, Vertex> = BTreeMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut intern = |name: &str, names: &mut Vec<String>| -> Vertex {
            *index.entry(String::from(name)).or_insert_with(|| {
                names.push(String::from(name));
                names.len() - 1
            })
        };
        intern(root, &mut names);
        let mut slots: Vec<[Option<Vertex>; 2]> = Vec::new();
        for (s, d, t) in edges {
            if *d > 1 {
                return Err(AutomatonError::InvalidDigit(*d));
            }
            let s = intern(s.as_ref(), &mut names);
            let t = intern(t.as_ref(), &mut names);
            slots.resize(names.len(), [None, None]);
            let slot = &mut slots[s][*d as usize];
            if slot.is_some() {
                return Err(AutomatonError::DuplicateEdge {
                    vertex: names[s].clone(),
                    digit: *d,
                });
            }
            *slot = Some(t);
        }
        slots.resize(names.len(), [None, None]);
        let mut children = Vec::with_capacity(names.len());
        for (v, slot) in slots.into_iter().enumerate() {
            children.push(match slot {
                [None, None] => None,
                [Some(a), Some(b)] => Some([a, b]),
                _ => return Err(AutomatonError::HalfFather(names[v].clone())),
            });
        }
        let a = TreeAutomaton {
            root: 0,
            children,
            names,
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<(), AutomatonError> {
        let mut fathers: BTreeMap<[Vertex; 2], Vertex> = BTreeMap::new();
        for v in 0..self.vertex_count() {
            if let Some(pair) = self.children[v] {
                if let Some(&u) = fathers.get(&pair) {
                    return Err(AutomatonError::SharedChildren(
                        self.names[u].clone(),
                        self.names[v].clone(),
                    ));
                }
                fathers.insert(pair, v);
            }
        }
        let mut seen = alloc::vec![false; self.vertex_count()];
        for v in self.bfs_order() {
            seen[v] = true;
        }
        if let Some(v) = (0..self.vertex_count()).find(|&v| !seen[v]) {
            return Err(AutomatonError::Unreachable(self.names[v].clone()));
        }
        Ok(())
    }

    /// Relabels a children table into breadth-first order with names `v0, v1, ...`,
    /// dropping vertices the root cannot reach.
    pub(crate) fn canonical_from_children(root: Vertex, children: &[Option<[Vertex; 2]>]) -> Self {
        let order = bfs_order(root, children);
        let mut pos = alloc::vec![usize::MAX; children.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let new_children = order
            .iter()
            .map(|&v| children[v].map(|[a, b]| [pos[a], pos[b]]))
            .collect();
        let names = (0..order.len()).map(|i| format!("v{}", i)).collect();
        TreeAutomaton {
            root: 0,
            children: new_children,
            names,
        }
    }

    /// The automaton with one vertex and no edges.
    pub fn single_vertex() -> Self {
        Self::canonical_from_children(0, &[None])
    }

    /// The core of `F`: root, left, right and middle vertex.
    pub fn core_of_f() -> Self {
        // 0 root, 1 left, 2 right, 3 middle
        Self::canonical_from_children(0, &[Some([1, 2]), Some([1, 3]), Some([3, 2]), Some([3, 3])])
    }

    /// A finite binary tree read as an automaton.
    pub fn from_tree(tree: &BinaryTree) -> Self {
        let inner = tree.inner_vertices();
        let mut all: Vec<Word> = inner.clone();
        all.extend(tree.branches().iter().cloned());
        all.sort();
        let id = |w: &Word| all.binary_search(w).expect("vertex of the tree");
        let mut children = alloc::vec![None; all.len()];
        for w in &inner {
            children[id(w)] = Some([id(&w.child(0)), id(&w.child(1))]);
        }
        Self::canonical_from_children(id(&Word::empty()), &children)
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    pub fn children(&self, v: Vertex) -> Option<[Vertex; 2]> {
        self.children[v]
    }

    pub fn child(&self, v: Vertex, digit: u8) -> Option<Vertex> {
        self.children[v].map(|c| c[digit as usize])
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn vertex_named(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.children[v].is_none()
    }

    pub fn is_inner(&self, v: Vertex) -> bool {
        self.children[v].is_some()
    }

    pub fn leaves(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(move |&v| self.is_leaf(v))
    }

    /// No leaves: every finite binary word is readable.
    pub fn is_full(&self) -> bool {
        self.leaves().next().is_none()
    }

    /// Vertices in breadth-first order from the root, 0-child before 1-child.
    pub fn bfs_order(&self) -> Vec<Vertex> {
        bfs_order(self.root, &self.children)
    }

    /// End vertex of the path labeled `u`, if `u` is readable.
    pub fn read_path(&self, u: &Word) -> Option<Vertex> {
        self.read_from(self.root, u)
    }

    pub fn read_from(&self, start: Vertex, u: &Word) -> Option<Vertex> {
        u.digits().iter().try_fold(start, |v, &d| self.child(v, d))
    }

    /// Whether the reduced form of `d` has every pair `u -> v` readable with `u+ = v+`.
    pub fn accepts(&self, d: &TreeDiagram) -> bool {
        let d = d.reduce();
        let ok = d.pairs().all(|(u, v)| match (self.read_path(u), self.read_path(v)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        });
        ok
    }

    /// For each vertex, a shortest word reaching it under each type it has.
    pub fn vertex_type_paths(&self) -> Vec<Vec<(VertexType, Word)>> {
        let n = self.vertex_count();
        let mut found: Vec<[Option<Word>; 4]> = alloc::vec![Default::default(); n];
        let mut queue = VecDeque::new();
        found[self.root][VertexType::Root as usize] = Some(Word::empty());
        queue.push_back((self.root, VertexType::Root, Word::empty()));
        while let Some((v, t, w)) = queue.pop_front() {
            if let Some(c) = self.children[v] {
                for d in 0..2u8 {
                    let (cv, ct) = (c[d as usize], t.after(d));
                    if found[cv][ct as usize].is_none() {
                        let cw = w.child(d);
                        found[cv][ct as usize] = Some(cw.clone());
                        queue.push_back((cv, ct, cw));
                    }
                }
            }
        }
        found
            .into_iter()
            .map(|slots| {
                VertexType::ALL
                    .into_iter()
                    .zip(slots)
                    .filter_map(|(t, w)| w.map(|w| (t, w)))
                    .collect()
            })
            .collect()
    }

    /// The types under which each vertex is reachable.
    pub fn vertex_types(&self) -> Vec<TypeSet> {
        self.vertex_type_paths()
            .into_iter()
            .map(|paths| {
                let mut s = TypeSet::default();
                for (t, _) in paths {
                    s.insert(t);
                }
                s
            })
            .collect()
    }

    /// Vertices having exactly the single type `t`.
    pub fn vertices_of_type(&self, t: VertexType) -> Vec<Vertex> {
        self.vertex_types()
            .into_iter()
            .enumerate()
            .filter(|(_, s)| s.single() == Some(t))
            .map(|(v, _)| v)
            .collect()
    }

    /// Census `(root, left, right, middle)` of single-typed vertices.
    pub fn type_census(&self) -> [usize; 4] {
        let mut census = [0; 4];
        for s in self.vertex_types() {
            if let Some(t) = s.single() {
                census[t as usize] += 1;
            }
        }
        census
    }

    /// Vertices reachable from `v` by a nonempty path.
    pub fn descendants(&self, v: Vertex) -> Vec<bool> {
        let mut seen = alloc::vec![false; self.vertex_count()];
        let mut stack: Vec<Vertex> = self.children[v].map_or(Vec::new(), |c| c.to_vec());
        while let Some(x) = stack.pop() {
            if !seen[x] {
                seen[x] = true;
                stack.extend(self.children[x].into_iter().flatten());
            }
        }
        seen
    }

    pub fn is_self_descendant(&self, v: Vertex) -> bool {
        self.descendants(v)[v]
    }

    /// Number of edges ending at each vertex.
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.vertex_count()];
        for c in self.children.iter().flatten() {
            deg[c[0]] += 1;
            deg[c[1]] += 1;
        }
        deg
    }

    /// Every vertex is a leaf, its own descendant, or has a descendant with
    /// two incoming edges.
    pub fn is_reduced(&self) -> bool {
        self.unreduced_vertex().is_none()
    }

    /// A vertex violating the reducedness criterion.
    pub fn unreduced_vertex(&self) -> Option<Vertex> {
        let deg = self.in_degrees();
        self.vertices().find(|&x| {
            if self.is_leaf(x) {
                return false;
            }
            let desc = self.descendants(x);
            !(desc[x] || self.vertices().any(|y| desc[y] && deg[y] >= 2))
        })
    }

    /// The unique morphism `self -> dst`, if there is one.
    pub fn find_morphism(&self, dst: &TreeAutomaton) -> Option<Morphism> {
        let mut map = alloc::vec![usize::MAX; self.vertex_count()];
        map[self.root] = dst.root;
        let mut queue = VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            let Some(c) = self.children[v] else { continue };
            let dc = dst.children[map[v]]?;
            for d in 0..2 {
                let (x, y) = (c[d], dc[d]);
                if map[x] == usize::MAX {
                    map[x] = y;
                    queue.push_back(x);
                } else if map[x] != y {
                    return None;
                }
            }
        }
        let mut hit = alloc::vec![false; dst.vertex_count()];
        let mut inner_hit = alloc::vec![false; dst.vertex_count()];
        for (v, &m) in map.iter().enumerate() {
            hit[m] = true;
            if self.is_inner(v) {
                inner_hit[m] = true;
            }
        }
        let surjective = dst.vertices().all(|y| hit[y] && (dst.is_leaf(y) || inner_hit[y]));
        Some(Morphism { map, surjective })
    }

    pub fn is_isomorphic(&self, other: &TreeAutomaton) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let order = self.bfs_order();
        let mut pos = alloc::vec![0u32; self.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i as u32;
        }
        CanonicalForm(
            order
                .iter()
                .map(|&v| self.children[v].map(|[a, b]| [pos[a], pos[b]]))
                .collect(),
        )
    }

    /// A copy with vertices renumbered and renamed `v0, v1, ...` in breadth-first order.
    pub fn canonical(&self) -> TreeAutomaton {
        Self::canonical_from_children(self.root, &self.children)
    }

    /// Quotient by the congruence generated by identifying each given pair.
    pub fn quotient_by(&self, pairs: &[(Vertex, Vertex)]) -> TreeAutomaton {
        let mut f = Folding::of_automaton(self);
        for &(a, b) in pairs {
            f.merge(a, b);
        }
        f.close();
        f.into_automaton(self.root)
    }

    /// All surjective images of `self` up to isomorphism, including `self`.
    ///
    /// Fails once more than `cap` distinct images have been found.
    pub fn enumerate_quotients(&self, cap: usize) -> Result<Vec<TreeAutomaton>, AutomatonError> {
        let n = self.vertex_count();
        let close = |seeds: &[&[usize]], pair: Option<(Vertex, Vertex)>| -> Vec<usize> {
            let mut f = Folding::of_automaton(self);
            for seed in seeds {
                f.seed_partition(seed);
            }
            if let Some((a, b)) = pair {
                f.merge(a, b);
            }
            f.close();
            f.partition()
        };
        let identity: Vec<usize> = (0..n).collect();
        let mut principal: Vec<Vec<usize>> = Vec::new();
        let mut principal_seen = BTreeSet::new();
        for x in 0..n {
            for y in x + 1..n {
                let p = close(&[], Some((x, y)));
                if principal_seen.insert(p.clone()) {
                    principal.push(p);
                }
            }
        }
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        found.push(identity.clone());
        queue.push_back(identity);
        while let Some(c) = queue.pop_front() {
            for p in &principal {
                if refines(p, &c) {
                    continue;
                }
                let joined = close(&[&c, p], None);
                if seen.insert(joined.clone()) {
                    if seen.len() > cap {
                        return Err(AutomatonError::CapExceeded { cap });
                    }
                    found.push(joined.clone());
                    queue.push_back(joined);
                }
            }
        }
        Ok(found.iter().map(|labels| self.quotient_from_labels(labels)).collect())
    }

    fn quotient_from_labels(&self, labels: &[usize]) -> TreeAutomaton {
        let mut f = Folding::of_automaton(self);
        f.seed_partition(labels);
        f.into_automaton(self.root)
    }

    /// Glues the root of `guest` onto the leaf `leaf` of `self`.
    pub fn attach(&self, leaf: Vertex, guest: &TreeAutomaton) -> Result<TreeAutomaton, AutomatonError> {
        if !self.is_leaf(leaf) {
            return Err(AutomatonError::NotALeaf(self.names[leaf].clone()));
        }
        let offset = self.vertex_count();
        let place = |g: Vertex| if g == guest.root { leaf } else { offset + g };
        let mut children = self.children.clone();
        children.resize(offset + guest.vertex_count(), None);
        for g in guest.vertices() {
            if let Some([a, b]) = guest.children[g] {
                children[place(g)] = Some([place(a), place(b)]);
            }
        }
        Ok(Self::canonical_from_children(self.root, &children))
    }

    /// Attaches a fresh copy of the core of `F` at every leaf.
    pub fn fill_leaves(&self) -> TreeAutomaton {
        let cf = TreeAutomaton::core_of_f();
        let mut children = self.children.clone();
        for leaf in self.leaves().collect::<Vec<_>>() {
            let base = children.len();
            let place = |g: Vertex| if g == cf.root { leaf } else { base + g };
            children.resize(base + cf.vertex_count(), None);
            for g in cf.vertices() {
                if let Some([a, b]) = cf.children[g] {
                    children[place(g)] = Some([place(a), place(b)]);
                }
            }
        }
        Self::canonical_from_children(self.root, &children)
    }
}

/// `fine` refines `coarse`: every class of `fine` lies inside one of `coarse`.
fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    let mut image: BTreeMap<usize, usize> = BTreeMap::new();
    fine.iter()
        .zip(coarse)
        .all(|(f, c)| *image.entry(*f).or_insert(*c) == *c)
}

fn bfs_order(root: Vertex, children: &[Option<[Vertex; 2]>]) -> Vec<Vertex> {
    let mut seen = alloc::vec![false; children.len()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        if let Some(c) = children[v] {
            for x in c {
                if !seen[x] {
                    seen[x] = true;
                    queue.push_back(x);
                }
            }
        }
    }
    order
}

impl fmt::Debug for TreeAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root {}", self.names[self.root])?;
        for v in self.bfs_order() {
            if let Some([a, b]) = self.children[v] {
                write!(f, "; {}->({}, {})", self.names[v], self.names[a], self.names[b])?;
            }
        }
        Ok(())
    }
}
