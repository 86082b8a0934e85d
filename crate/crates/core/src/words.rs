//! Finite binary words, dyadic fractions and full finite binary trees.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

/// A finite word over `{0, 1}`.
///
/// Words double as branch labels of binary trees (0 = left edge, 1 = right
/// edge) and as finite binary expansions `.u` of dyadic fractions. The
/// derived ordering is lexicographic with `0 < 1`, which on a prefix-free
/// set coincides with the left-to-right order of branches.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

/// Error returned when parsing a [`Word`] from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseWordError {
    /// Byte offset of the offending character.
    pub position: usize,
}

impl core::error::Error for ParseWordError {}

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid binary digit at position {}", self.position)
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from digits. Panics if a digit is not 0 or 1.
    pub fn from_digits(digits: &[u8]) -> Self {
        assert!(digits.iter().all(|&d| d <= 1), "binary digits must be 0 or 1");
        Word(digits.to_vec())
    }

    pub fn repeat(digit: u8, count: usize) -> Self {
        assert!(digit <= 1);
        Word(alloc::vec![digit; count])
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, digit: u8) {
        assert!(digit <= 1);
        self.0.push(digit);
    }

    pub fn pop(&mut self) -> Option<u8> {
        self.0.pop()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// Returns `self` followed by `digit`.
    pub fn child(&self, digit: u8) -> Word {
        let mut w = self.clone();
        w.push(digit);
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut digits = Vec::with_capacity(self.len() + other.len());
        digits.extend_from_slice(&self.0);
        digits.extend_from_slice(&other.0);
        Word(digits)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn contains_digit(&self, digit: u8) -> bool {
        self.0.contains(&digit)
    }

    /// Number of trailing `0` digits.
    pub fn ell0(&self) -> usize {
        self.0.iter().rev().take_while(|&&d| d == 0).count()
    }

    /// Number of trailing `1` digits.
    pub fn ell1(&self) -> usize {
        self.0.iter().rev().take_while(|&&d| d == 1).count()
    }

    /// Number of `1` digits.
    pub fn digit_sum(&self) -> usize {
        self.0.iter().filter(|&&d| d == 1).count()
    }

    /// Length of the longest common suffix of `self` and `other`.
    pub fn common_suffix_len(&self, other: &Word) -> usize {
        self.0
            .iter()
            .rev()
            .zip(other.0.iter().rev())
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.0.iter().zip(other.0.iter()).take_while(|(a, b)| a == b).count()
    }

    /// Branches of the minimal full binary tree having `self` as a branch,
    /// in left-to-right order.
    pub fn minimal_tree_branches(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(self.len() + 1);
        for k in 0..self.len() {
            let sibling = self.prefix(k).child(1 - self.0[k]);
            out.push(sibling);
        }
        out.push(self.clone());
        out.sort();
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for d in &self.0 {
            f.write_str(if *d == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Accepts a string of `0`/`1` characters; `e` (or the empty string)
    /// denotes the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "e" {
            return Ok(Word::empty());
        }
        let mut digits = Vec::with_capacity(s.len());
        for (position, c) in s.char_indices() {
            match c {
                '0' => digits.push(0),
                '1' => digits.push(1),
                _ => return Err(ParseWordError { position }),
            }
        }
        Ok(Word(digits))
    }
}

impl From<&[u8]> for Word {
    fn from(digits: &[u8]) -> Self {
        Word::from_digits(digits)
    }
}

/// A dyadic fraction in `(0, 1)`, stored as its canonical binary expansion
/// (nonempty, last digit 1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DyadicFraction(Word);

impl DyadicFraction {
    /// Strips trailing zeros. Returns `None` when the value is 0.
    pub fn from_word(word: &Word) -> Option<Self> {
        let keep = word.len() - word.ell0();
        if keep == 0 {
            return None;
        }
        Some(DyadicFraction(word.prefix(keep)))
    }

    /// The fraction `numerator / 2^exponent`; `None` unless it lies in `(0, 1)`.
    pub fn from_ratio(numerator: u64, exponent: u32) -> Option<Self> {
        if exponent > 63 || numerator == 0 || numerator >= (1u64 << exponent) {
            return None;
        }
        let mut w = Word::empty();
        for k in (0..exponent).rev() {
            w.push(((numerator >> k) & 1) as u8);
        }
        Self::from_word(&w)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    /// `(numerator, exponent)` with odd numerator.
    pub fn to_ratio(&self) -> (u128, u32) {
        let mut num: u128 = 0;
        for &d in self.0.digits() {
            num = (num << 1) | d as u128;
        }
        (num, self.0.len() as u32)
    }
}

impl Ord for DyadicFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.0.digits(), other.0.digits());
        let n = a.len().max(b.len());
        for k in 0..n {
            let x = a.get(k).copied().unwrap_or(0);
            let y = b.get(k).copied().unwrap_or(0);
            match x.cmp(&y) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for DyadicFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, ".{}", self.0)
    }
}

/// Error for branch sets that do not describe a full binary tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeError {
    /// The set is not prefix-free (or contains a duplicate).
    NotPrefixFree(Word, Word),
    /// Some infinite path avoids every branch.
    Incomplete,
    Empty,
}

impl core::error::Error for TreeError {}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::NotPrefixFree(a, b) => write!(f, "branch {} is a prefix of {}", a, b),
            TreeError::Incomplete => f.write_str("branch set is not complete"),
            TreeError::Empty => f.write_str("empty branch set"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Leaf,
    Caret(Box<Node>, Box<Node>),
}

impl Node {
    fn collect(&self, prefix: &mut Word, out: &mut Vec<Word>) {
        match self {
            Node::Leaf => out.push(prefix.clone()),
            Node::Caret(l, r) => {
                prefix.push(0);
                l.collect(prefix, out);
                prefix.pop();
                prefix.push(1);
                r.collect(prefix, out);
                prefix.pop();
            }
        }
    }

    fn union(&self, other: &Node) -> Node {
        match (self, other) {
            (Node::Leaf, n) | (n, Node::Leaf) => n.clone(),
            (Node::Caret(a0, a1), Node::Caret(b0, b1)) => Node::Caret(Box::new(a0.union(b0)), Box::new(a1.union(b1))),
        }
    }

    fn carets(&self) -> usize {
        match self {
            Node::Leaf => 0,
            Node::Caret(l, r) => 1 + l.carets() + r.carets(),
        }
    }
}

/// A full finite rooted binary tree.
///
/// Stored both recursively and as the cached left-to-right list of branch
/// labels; the branch list is what diagrams pair up by position.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryTree {
    root: Node,
    branches: Vec<Word>,
}

impl BinaryTree {
    /// The tree with a single vertex; its only branch is the empty word.
    pub fn singleton() -> Self {
        BinaryTree {
            root: Node::Leaf,
            branches: alloc::vec![Word::empty()],
        }
    }

    /// A single caret: branches `0`, `1`.
    pub fn caret() -> Self {
        Self::from_branches(alloc::vec![Word::from_digits(&[0]), Word::from_digits(&[1])])
            .expect("caret is a valid tree")
    }

    /// Builds a tree from its branches, in any order.
    pub fn from_branches(mut branches: Vec<Word>) -> Result<Self, TreeError> {
        if branches.is_empty() {
            return Err(TreeError::Empty);
        }
        branches.sort();
        for pair in branches.windows(2) {
            if pair[0].is_prefix_of(&pair[1]) {
                return Err(TreeError::NotPrefixFree(pair[0].clone(), pair[1].clone()));
            }
        }
        let root = Self::build(&branches, 0)?;
        Ok(BinaryTree { root, branches })
    }

    // `words` is sorted, prefix-free and all share the first `depth` digits.
    fn build(words: &[Word], depth: usize) -> Result<Node, TreeError> {
        if words.len() == 1 && words[0].len() == depth {
            return Ok(Node::Leaf);
        }
        if words.iter().any(|w| w.len() == depth) {
            // Only reachable for a duplicate, which sorting puts side by side.
            return Err(TreeError::Incomplete);
        }
        let split = words.partition_point(|w| w.digits()[depth] == 0);
        let (left, right) = words.split_at(split);
        if left.is_empty() || right.is_empty() {
            return Err(TreeError::Incomplete);
        }
        Ok(Node::Caret(
            Box::new(Self::build(left, depth + 1)?),
            Box::new(Self::build(right, depth + 1)?),
        ))
    }

    fn from_node(root: Node) -> Self {
        let mut branches = Vec::new();
        root.collect(&mut Word::empty(), &mut branches);
        BinaryTree { root, branches }
    }

    /// Left-to-right branch labels.
    pub fn branches(&self) -> &[Word] {
        &self.branches
    }

    pub fn leaf_count(&self) -> usize {
        self.branches.len()
    }

    pub fn caret_count(&self) -> usize {
        self.root.carets()
    }

    /// Labels of the inner vertices (caret roots), in preorder.
    pub fn inner_vertices(&self) -> Vec<Word> {
        fn walk(node: &Node, prefix: &mut Word, out: &mut Vec<Word>) {
            if let Node::Caret(l, r) = node {
                out.push(prefix.clone());
                prefix.push(0);
                walk(l, prefix, out);
                prefix.pop();
                prefix.push(1);
                walk(r, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut Word::empty(), &mut out);
        out
    }

    /// The smallest tree having both `self` and `other` as rooted subtrees.
    pub fn union(&self, other: &BinaryTree) -> BinaryTree {
        Self::from_node(self.root.union(&other.root))
    }

    /// Index of the branch that is a prefix of `word`, if any.
    pub fn branch_prefix_of(&self, word: &Word) -> Option<usize> {
        // Branches are sorted, so the candidate is the last branch <= word.
        let idx = self.branches.partition_point(|b| b <= word);
        if idx == 0 {
            return None;
        }
        let cand = &self.branches[idx - 1];
        cand.is_prefix_of(word).then_some(idx - 1)
    }

    /// Replaces leaf `index` by a caret.
    pub fn expand_leaf(&self, index: usize) -> BinaryTree {
        let mut branches = self.branches.clone();
        let w = branches.remove(index);
        branches.insert(index, w.child(1));
        branches.insert(index, w.child(0));
        BinaryTree::from_branches(branches).expect("expanding a leaf keeps the tree full")
    }

    /// Σℓ1(branch) = Σℓ0(branch) = leaves − 1, checked against the caret count.
    pub fn caret_count_identity_check(&self) -> bool {
        let n = self.leaf_count();
        let s1: usize = self.branches.iter().map(Word::ell1).sum();
        let s0: usize = self.branches.iter().map(Word::ell0).sum();
        s1 == n - 1 && s0 == n - 1
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.branches.iter()).finish()
    }
}
