//! Semigroup presentations of automata and the core-automaton test.
//!
//! An automaton gives the presentation with one letter per vertex and one
//! relation `a = bc` per inner vertex `a` with children `b`, `c`. Words over
//! the vertices are compared by a bounded bidirectional search, so answers
//! are three-valued.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::automaton::{TreeAutomaton, Vertex};
use crate::fold::UnionFind;
use crate::words::Word;

/// Default number of node expansions per word comparison.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Outcome of a semi-decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<Y, N> {
    Yes(Y),
    No(N),
    /// The budget ran out after this many expansions.
    Unknown {
        spent: usize,
    },
}

impl<Y, N> Verdict<Y, N> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    /// `"yes"`, `"no"` or `"unknown"`.
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No(_) => "no",
            Verdict::Unknown { .. } => "unknown",
        }
    }
}

/// A word over the vertices of an automaton.
pub type Letters = Vec<Vertex>;

/// `⟨V | a = bc for each inner vertex a⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupPresentation {
    names: Vec<String>,
    /// `(a, [b, c])` for the relation `a = bc`.
    relations: Vec<(Vertex, [Vertex; 2])>,
    expand: Vec<Option<usize>>,
    contract: BTreeMap<[Vertex; 2], usize>,
    lattice: Option<RelationLattice>,
}

/// The integer span of the vectors `e_a - e_b - e_c`, in echelon form.
///
/// Equal words have letter-count vectors differing by a lattice element.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RelationLattice {
    /// Rows with increasing pivot columns and zeros left of the pivot.
    rows: Vec<(usize, Vec<i64>)>,
}

impl RelationLattice {
    /// `None` if an intermediate entry overflows.
    fn new(letters: usize, relations: &[(Vertex, [Vertex; 2])]) -> Option<Self> {
        let mut pending: Vec<Vec<i64>> = relations
            .iter()
            .map(|&(a, [b, c])| {
                let mut row = alloc::vec![0i64; letters];
                row[a] += 1;
                row[b] -= 1;
                row[c] -= 1;
                row
            })
            .collect();
        let mut rows = Vec::new();
        for col in 0..letters {
            loop {
                pending.retain(|r| r.iter().any(|&x| x != 0));
                let mut active: Vec<usize> = (0..pending.len()).filter(|&i| pending[i][col] != 0).collect();
                if active.len() <= 1 {
                    if let Some(&i) = active.first() {
                        rows.push((col, pending.swap_remove(i)));
                    }
                    break;
                }
                active.sort_by_key(|&i| pending[i][col].unsigned_abs());
                let pivot = pending[active[0]].clone();
                for &i in &active[1..] {
                    let q = pending[i][col] / pivot[col];
                    for (x, &y) in pending[i].iter_mut().zip(&pivot) {
                        *x = x.checked_sub(q.checked_mul(y)?)?;
                    }
                }
            }
        }
        Some(RelationLattice { rows })
    }

    /// Whether `diff` certainly lies outside the lattice.
    fn excludes(&self, mut diff: Vec<i64>) -> bool {
        for (p, row) in &self.rows {
            if diff[*p] % row[*p] != 0 {
                return true;
            }
            let k = diff[*p] / row[*p];
            for (x, &y) in diff.iter_mut().zip(row) {
                match k.checked_mul(y).and_then(|m| x.checked_sub(m)) {
                    Some(v) => *x = v,
                    None => return false,
                }
            }
        }
        diff.iter().any(|&x| x != 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `a -> bc`.
    Expand,
    /// `bc -> a`.
    Contract,
}

/// One application of a relation at a letter position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub position: usize,
    pub relation: usize,
    pub direction: Direction,
}

/// Steps leading from the first compared word to the second.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteTrace(pub Vec<RewriteStep>);

/// Why two words are different.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Separation {
    /// Exactly one of the words is empty.
    EmptyWord,
    /// The first letters lie in different first-letter classes.
    FirstLetter,
    /// The last letters lie in different last-letter classes.
    LastLetter,
    /// The letter counts differ by a vector outside the span of the relations.
    LetterCounts,
    /// The class of one word was explored completely without meeting the other.
    Exhausted,
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Separation::EmptyWord => "exactly one word is empty",
            Separation::FirstLetter => "first letters are never related",
            Separation::LastLetter => "last letters are never related",
            Separation::LetterCounts => "letter counts differ modulo the relations",
            Separation::Exhausted => "equivalence class exhausted",
        })
    }
}

impl SemigroupPresentation {
    pub fn of_automaton(a: &TreeAutomaton) -> Self {
        let relations: Vec<(Vertex, [Vertex; 2])> =
            a.vertices().filter_map(|v| a.children(v).map(|c| (v, c))).collect();
        let mut expand = alloc::vec![None; a.vertex_count()];
        let mut contract = BTreeMap::new();
        for (i, &(v, c)) in relations.iter().enumerate() {
            expand[v] = Some(i);
            contract.insert(c, i);
        }
        SemigroupPresentation {
            names: a.vertices().map(|v| String::from(a.name(v))).collect(),
            lattice: RelationLattice::new(a.vertex_count(), &relations),
            relations,
            expand,
            contract,
        }
    }

    pub fn relations(&self) -> &[(Vertex, [Vertex; 2])] {
        &self.relations
    }

    pub fn letter_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, letter: Vertex) -> &str {
        &self.names[letter]
    }

    /// Writes a word by concatenating letter names; the empty word is `e`.
    pub fn render(&self, w: &[Vertex]) -> String {
        if w.is_empty() {
            return String::from("e");
        }
        w.iter().map(|&l| self.names[l].as_str()).collect()
    }

    /// The word after applying `step`, if it applies.
    pub fn apply(&self, w: &[Vertex], step: RewriteStep) -> Option<Letters> {
        let (a, [b, c]) = *self.relations.get(step.relation)?;
        let i = step.position;
        let mut out = Vec::with_capacity(w.len() + 1);
        match step.direction {
            Direction::Expand => {
                if w.get(i) != Some(&a) {
                    return None;
                }
                out.extend_from_slice(&w[..i]);
                out.extend([b, c]);
                out.extend_from_slice(&w[i + 1..]);
            }
            Direction::Contract => {
                if w.get(i..i + 2) != Some(&[b, c][..]) {
                    return None;
                }
                out.extend_from_slice(&w[..i]);
                out.push(a);
                out.extend_from_slice(&w[i + 2..]);
            }
        }
        Some(out)
    }

    /// Replays a trace, returning the final word if every step applies.
    pub fn replay(&self, start: &[Vertex], trace: &RewriteTrace) -> Option<Letters> {
        trace.0.iter().try_fold(start.to_vec(), |w, &s| self.apply(&w, s))
    }

    fn neighbours(&self, w: &[Vertex]) -> Vec<(RewriteStep, Letters)> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            if let Some(r) = self.expand[w[i]] {
                let step = RewriteStep {
                    position: i,
                    relation: r,
                    direction: Direction::Expand,
                };
                out.push((step, self.apply(w, step).expect("relation applies")));
            }
            if i + 1 < w.len() {
                if let Some(&r) = self.contract.get(&[w[i], w[i + 1]]) {
                    let step = RewriteStep {
                        position: i,
                        relation: r,
                        direction: Direction::Contract,
                    };
                    out.push((step, self.apply(w, step).expect("relation applies")));
                }
            }
        }
        out
    }

    /// Classes of letters that can occur at the given end of equal words.
    fn end_classes(&self, last: bool) -> Vec<usize> {
        let mut uf = UnionFind::new(self.letter_count());
        for &(a, [b, c]) in &self.relations {
            uf.union(a, if last { c } else { b });
        }
        uf.partition()
    }

    /// Decides `w1 = w2` in the presented semigroup, within `budget` expansions.
    pub fn words_equal(&self, w1: &[Vertex], w2: &[Vertex], budget: usize) -> Verdict<RewriteTrace, Separation> {
        if w1.is_empty() || w2.is_empty() {
            return if w1.is_empty() && w2.is_empty() {
                Verdict::Yes(RewriteTrace::default())
            } else {
                Verdict::No(Separation::EmptyWord)
            };
        }
        if w1 == w2 {
            return Verdict::Yes(RewriteTrace::default());
        }
        let first = self.end_classes(false);
        if first[w1[0]] != first[w2[0]] {
            return Verdict::No(Separation::FirstLetter);
        }
        let last = self.end_classes(true);
        if last[w1[w1.len() - 1]] != last[w2[w2.len() - 1]] {
            return Verdict::No(Separation::LastLetter);
        }
        if let Some(lattice) = &self.lattice {
            let mut diff = alloc::vec![0i64; self.letter_count()];
            w1.iter().for_each(|&x| diff[x] += 1);
            w2.iter().for_each(|&x| diff[x] -= 1);
            if lattice.excludes(diff) {
                return Verdict::No(Separation::LetterCounts);
            }
        }
        self.search(w1, w2, budget)
    }

    fn search(&self, w1: &[Vertex], w2: &[Vertex], budget: usize) -> Verdict<RewriteTrace, Separation> {
        let mut sides = [Side::new(w1), Side::new(w2)];
        let mut spent = 0;
        loop {
            if sides[0].queue.is_empty() || sides[1].queue.is_empty() {
                return Verdict::No(Separation::Exhausted);
            }
            if spent >= budget {
                return Verdict::Unknown { spent };
            }
            // Advance the shallower side so a thin infinite class cannot starve the other.
            let depth = |side: &Side| side.queue.front().map(|q| q.1);
            let s = usize::from(depth(&sides[1]) < depth(&sides[0]));
            let (w, d) = sides[s].queue.pop_front().expect("nonempty queue");
            spent += 1;
            for (step, next) in self.neighbours(&w) {
                if sides[s].parent.contains_key(&next) {
                    continue;
                }
                sides[s].parent.insert(next.clone(), Some((w.clone(), step)));
                if sides[1 - s].parent.contains_key(&next) {
                    return Verdict::Yes(self.join(&sides, &next));
                }
                sides[s].queue.push_back((next, d + 1));
            }
        }
    }

    fn join(&self, sides: &[Side; 2], meet: &[Vertex]) -> RewriteTrace {
        let mut forward = sides[0].path_to(meet);
        forward.reverse();
        let mut steps = forward;
        // Walk the second tree from the meeting word back to w2, inverting steps.
        let mut cur = meet.to_vec();
        while let Some(Some((prev, step))) = sides[1].parent.get(&cur) {
            steps.push(RewriteStep {
                position: step.position,
                relation: step.relation,
                direction: match step.direction {
                    Direction::Expand => Direction::Contract,
                    Direction::Contract => Direction::Expand,
                },
            });
            cur = prev.clone();
        }
        RewriteTrace(steps)
    }
}

struct Side {
    parent: BTreeMap<Letters, Option<(Letters, RewriteStep)>>,
    /// Words awaiting expansion with their distance from the start.
    queue: VecDeque<(Letters, usize)>,
}

impl Side {
    fn new(start: &[Vertex]) -> Self {
        let mut parent = BTreeMap::new();
        parent.insert(start.to_vec(), None);
        Side {
            parent,
            queue: VecDeque::from([(start.to_vec(), 0)]),
        }
    }

    /// Steps from the start to `w`, last step first.
    fn path_to(&self, w: &[Vertex]) -> Vec<RewriteStep> {
        let mut out = Vec::new();
        let mut cur = w.to_vec();
        while let Some(Some((prev, step))) = self.parent.get(&cur) {
            out.push(*step);
            cur = prev.clone();
        }
        out
    }
}

/// One node of a minimal tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalTreeNode {
    pub path: Word,
    pub label: Vertex,
    /// Node indices of the two children, for inner nodes.
    pub children: Option<[usize; 2]>,
}

/// A labeled tree carrying every labeled caret of an automaton once.
///
/// Built from the root by expanding, leftmost first, every leaf whose label
/// is an inner vertex not yet used as the label of an inner node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalTree {
    /// Nodes in preorder; node 0 is the root.
    pub nodes: Vec<MinimalTreeNode>,
}

impl MinimalTree {
    pub fn of_automaton(a: &TreeAutomaton) -> Self {
        let mut tree = MinimalTree { nodes: Vec::new() };
        let mut used = alloc::vec![false; a.vertex_count()];
        tree.grow(a, Word::empty(), a.root(), &mut used);
        tree
    }

    fn grow(&mut self, a: &TreeAutomaton, path: Word, label: Vertex, used: &mut [bool]) -> usize {
        let idx = self.nodes.len();
        self.nodes.push(MinimalTreeNode {
            path: path.clone(),
            label,
            children: None,
        });
        if let Some([c0, c1]) = a.children(label) {
            if !used[label] {
                used[label] = true;
                let l = self.grow(a, path.child(0), c0, used);
                let r = self.grow(a, path.child(1), c1, used);
                self.nodes[idx].children = Some([l, r]);
            }
        }
        idx
    }

    /// Leaves left to right.
    pub fn leaves(&self) -> impl Iterator<Item = &MinimalTreeNode> + '_ {
        self.nodes.iter().filter(|n| n.children.is_none())
    }

    /// `(label, [left label, right label])` for every inner node.
    pub fn labeled_carets(&self) -> Vec<(Vertex, [Vertex; 2])> {
        let mut out: Vec<_> = self
            .nodes
            .iter()
            .filter_map(|n| {
                n.children
                    .map(|[l, r]| (n.label, [self.nodes[l].label, self.nodes[r].label]))
            })
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewritingError {
    Unreadable(Word),
}

impl core::error::Error for RewritingError {}

impl fmt::Display for RewritingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewritingError::Unreadable(u) => write!(f, "word {} is not readable", u),
        }
    }
}

/// The words `(p_u, q_u)` labeling the leaves left and right of the branch `u`
/// in the smallest tree having `u` as a branch.
pub fn associated_pair(a: &TreeAutomaton, u: &Word) -> Result<(Letters, Letters), RewritingError> {
    a.read_path(u).ok_or_else(|| RewritingError::Unreadable(u.clone()))?;
    let mut p = Vec::new();
    let mut q = Vec::new();
    for b in u.minimal_tree_branches() {
        if b == *u {
            continue;
        }
        let label = a.read_path(&b).expect("siblings of readable prefixes are readable");
        if b < *u {
            p.push(label);
        } else {
            q.push(label);
        }
    }
    Ok((p, q))
}

/// The sub-check of the core-automaton test that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreCheck {
    /// A nonempty word `v` leads back to the root; `u` is empty.
    RootSelfDescendant,
    /// `u` and `v` reach the same vertex under different types.
    TypeClash,
    /// The vertex reached by `u` (= `v`) violates reducedness.
    NotReduced,
    /// `p_u ≠ p_v` in the associated semigroup.
    LeftWords(Separation),
    /// `q_u ≠ q_v` in the associated semigroup.
    RightWords(Separation),
}

impl CoreCheck {
    pub fn name(&self) -> &'static str {
        match self {
            CoreCheck::RootSelfDescendant => "root-self-descendant",
            CoreCheck::TypeClash => "vertex-type-clash",
            CoreCheck::NotReduced => "not-reduced",
            CoreCheck::LeftWords(_) => "left-words-differ",
            CoreCheck::RightWords(_) => "right-words-differ",
        }
    }
}

/// Evidence that an automaton is not a core-automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreWitness {
    pub check: CoreCheck,
    pub u: Word,
    pub v: Word,
}

/// Decides whether `a` is isomorphic to the core of some subgroup of `F`.
///
/// `budget` bounds each word comparison separately.
pub fn is_core_automaton(a: &TreeAutomaton, budget: usize) -> Verdict<(), CoreWitness> {
    if let Some(v) = shortest_return_to_root(a) {
        return Verdict::No(CoreWitness {
            check: CoreCheck::RootSelfDescendant,
            u: Word::empty(),
            v,
        });
    }
    for paths in a.vertex_type_paths() {
        if paths.len() > 1 {
            return Verdict::No(CoreWitness {
                check: CoreCheck::TypeClash,
                u: paths[0].1.clone(),
                v: paths[1].1.clone(),
            });
        }
    }
    if let Some(x) = a.unreduced_vertex() {
        let u = a.vertex_type_paths()[x][0].1.clone();
        return Verdict::No(CoreWitness {
            check: CoreCheck::NotReduced,
            u: u.clone(),
            v: u,
        });
    }
    let pres = SemigroupPresentation::of_automaton(a);
    let tree = MinimalTree::of_automaton(a);
    let mut unknown: Option<usize> = None;
    for (i, x) in tree.nodes.iter().enumerate() {
        for y in &tree.nodes[i + 1..] {
            if x.label != y.label {
                continue;
            }
            let (pu, qu) = associated_pair(a, &x.path).expect("tree paths are readable");
            let (pv, qv) = associated_pair(a, &y.path).expect("tree paths are readable");
            let left: fn(Separation) -> CoreCheck = CoreCheck::LeftWords;
            let checks = [(&pu, &pv, left), (&qu, &qv, CoreCheck::RightWords)];
            for (s, t, check) in checks {
                match pres.words_equal(s, t, budget) {
                    Verdict::Yes(_) => {}
                    Verdict::No(sep) => {
                        return Verdict::No(CoreWitness {
                            check: check(sep),
                            u: x.path.clone(),
                            v: y.path.clone(),
                        })
                    }
                    Verdict::Unknown { spent } => *unknown.get_or_insert(0) += spent,
                }
            }
        }
    }
    match unknown {
        Some(spent) => Verdict::Unknown { spent },
        None => Verdict::Yes(()),
    }
}

/// A shortest nonempty word leading from the root back to the root.
fn shortest_return_to_root(a: &TreeAutomaton) -> Option<Word> {
    let mut seen = alloc::vec![false; a.vertex_count()];
    let mut queue = VecDeque::from([(a.root(), Word::empty())]);
    while let Some((v, w)) = queue.pop_front() {
        for d in 0..2u8 {
            let Some(c) = a.child(v, d) else { continue };
            let cw = w.child(d);
            if c == a.root() {
                return Some(cw);
            }
            if !seen[c] {
                seen[c] = true;
                queue.push_back((c, cw));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn not_core() -> TreeAutomaton {
        TreeAutomaton::from_edges(
            "r",
            &[
                ("r", 0, "f"),
                ("r", 1, "g"),
                ("f", 0, "f"),
                ("f", 1, "h"),
                ("g", 0, "h"),
                ("g", 1, "g"),
                ("h", 0, "h"),
                ("h", 1, "k"),
            ],
        )
        .unwrap()
    }

    fn letters(a: &TreeAutomaton, names: &str) -> Letters {
        names
            .chars()
            .map(|c| a.vertex_named(&String::from(c)).unwrap())
            .collect()
    }

    fn rendered_relations(a: &TreeAutomaton) -> Vec<String> {
        let p = SemigroupPresentation::of_automaton(a);
        p.relations()
            .iter()
            .map(|&(x, [b, c])| alloc::format!("{}={}{}", p.name(x), p.name(b), p.name(c)))
            .collect()
    }

    #[test]
    fn presentation_of_not_core() {
        assert_eq!(rendered_relations(&not_core()), vec!["r=fg", "f=fh", "g=hg", "h=hk"]);
    }

    #[test]
    fn minimal_trees() {
        let a = not_core();
        let t = MinimalTree::of_automaton(&a);
        let leaves: String = t.leaves().map(|n| a.name(n.label)).collect();
        assert_eq!(leaves, "fhkhg");
        let single = MinimalTree::of_automaton(&TreeAutomaton::single_vertex());
        assert_eq!(single.nodes.len(), 1);
        let cf = TreeAutomaton::core_of_f();
        let t = MinimalTree::of_automaton(&cf);
        let carets: Vec<_> = cf.vertices().filter_map(|v| cf.children(v).map(|c| (v, c))).collect();
        assert_eq!(t.labeled_carets(), carets);
        assert_eq!(t.nodes.len(), 9);
    }

    #[test]
    fn associated_pairs() {
        let a = not_core();
        assert_eq!(associated_pair(&a, &Word::empty()), Ok((vec![], vec![])));
        assert_eq!(associated_pair(&a, &w("01")), Ok((letters(&a, "f"), letters(&a, "g"))));
        assert_eq!(
            associated_pair(&a, &w("010")),
            Ok((letters(&a, "f"), letters(&a, "kg")))
        );
        assert_eq!(
            associated_pair(&a, &w("0110")),
            Err(RewritingError::Unreadable(w("0110")))
        );
    }

    #[test]
    fn word_problem() {
        let a = not_core();
        let p = SemigroupPresentation::of_automaton(&a);
        assert_eq!(
            p.words_equal(&letters(&a, "kg"), &letters(&a, "g"), DEFAULT_BUDGET),
            Verdict::No(Separation::FirstLetter)
        );
        let fg = letters(&a, "fhg");
        assert!(p.words_equal(&fg, &fg, 10).is_yes());
        let r = letters(&a, "r");
        match p.words_equal(&r, &fg, DEFAULT_BUDGET) {
            Verdict::Yes(trace) => assert_eq!(p.replay(&r, &trace), Some(fg.clone())),
            other => panic!("{:?}", other),
        }
        assert_eq!(p.words_equal(&[], &r, 10), Verdict::No(Separation::EmptyWord));
        assert!(p.words_equal(&[], &[], 10).is_yes());
    }

    #[test]
    fn core_automaton_test() {
        assert_eq!(
            is_core_automaton(&TreeAutomaton::core_of_f(), DEFAULT_BUDGET),
            Verdict::Yes(())
        );
        match is_core_automaton(&not_core(), DEFAULT_BUDGET) {
            Verdict::No(wit) => {
                assert_eq!((wit.u, wit.v), (w("01"), w("010")));
                assert_eq!(wit.check, CoreCheck::RightWords(Separation::FirstLetter));
            }
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn letter_counts_separate_thin_classes() {
        // v1 = v1 v3 and v3 = v3 v3 make the class of v1 infinite but never reach v1 v4 v6.
        let a = TreeAutomaton::from_edges(
            "v0",
            &[
                ("v0", 0, "v1"),
                ("v0", 1, "v2"),
                ("v1", 0, "v1"),
                ("v1", 1, "v3"),
                ("v2", 0, "v4"),
                ("v2", 1, "v5"),
                ("v3", 0, "v3"),
                ("v3", 1, "v3"),
                ("v4", 0, "v3"),
                ("v4", 1, "v4"),
                ("v5", 0, "v6"),
                ("v5", 1, "v7"),
                ("v6", 0, "v6"),
                ("v6", 1, "v3"),
                ("v7", 0, "v3"),
                ("v7", 1, "v7"),
            ],
        )
        .unwrap();
        let p = SemigroupPresentation::of_automaton(&a);
        let v = |n: &str| a.vertex_named(n).unwrap();
        assert_eq!(
            p.words_equal(&[v("v1")], &[v("v1"), v("v4"), v("v6")], DEFAULT_BUDGET),
            Verdict::No(Separation::LetterCounts)
        );
        assert!(p
            .words_equal(&[v("v1")], &[v("v1"), v("v3"), v("v3")], DEFAULT_BUDGET)
            .is_yes());
        assert!(p
            .words_equal(&[v("v0")], &[v("v1"), v("v4"), v("v6"), v("v7")], DEFAULT_BUDGET)
            .is_yes());
    }
}
