//! Elements of F as tree-diagrams.
//!
//! A diagram `(T+, T-)` maps the dyadic interval of the i-th branch of `T+`
//! linearly onto the interval of the i-th branch of `T-`. Products compose
//! left to right: in `a * b`, `a` acts first.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::words::{BinaryTree, DyadicFraction, TreeError, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    LeafCountMismatch {
        domain: usize,
        range: usize,
    },
    /// The pairs do not preserve left-to-right order.
    NotOrderPreserving,
    Tree(TreeError),
    /// A slope was requested at an endpoint from the outside of `[0, 1]`.
    OutsideInterval,
}

impl core::error::Error for DiagramError {}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::LeafCountMismatch { domain, range } => {
                write!(f, "trees have {} and {} leaves", domain, range)
            }
            DiagramError::NotOrderPreserving => f.write_str("branch pairs are not order preserving"),
            DiagramError::Tree(e) => write!(f, "{}", e),
            DiagramError::OutsideInterval => f.write_str("one-sided slope outside [0,1]"),
        }
    }
}

impl From<TreeError> for DiagramError {
    fn from(e: TreeError) -> Self {
        DiagramError::Tree(e)
    }
}

/// A pair of full binary trees with equal leaf counts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TreeDiagram {
    domain: BinaryTree,
    range: BinaryTree,
}

/// A point of `[0, 1]` at which one-sided slopes are taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Zero,
    Dyadic(DyadicFraction),
    One,
}

/// Image in the abelianization `Z^2`: log2 of the slopes at `0+` and `1-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianImage(pub i64, pub i64);

impl TreeDiagram {
    pub fn new(domain: BinaryTree, range: BinaryTree) -> Result<Self, DiagramError> {
        if domain.leaf_count() != range.leaf_count() {
            return Err(DiagramError::LeafCountMismatch {
                domain: domain.leaf_count(),
                range: range.leaf_count(),
            });
        }
        Ok(TreeDiagram { domain, range })
    }

    /// Builds a diagram from its pairs of branches `u -> v`, in any order.
    pub fn from_pairs(mut pairs: Vec<(Word, Word)>) -> Result<Self, DiagramError> {
        pairs.sort();
        if pairs.windows(2).any(|p| p[0].1 > p[1].1) {
            return Err(DiagramError::NotOrderPreserving);
        }
        let (d, r): (Vec<Word>, Vec<Word>) = pairs.into_iter().unzip();
        let domain = BinaryTree::from_branches(d)?;
        let range = BinaryTree::from_branches(r)?;
        Self::new(domain, range)
    }

    pub fn identity() -> Self {
        TreeDiagram {
            domain: BinaryTree::singleton(),
            range: BinaryTree::singleton(),
        }
    }

    pub fn domain(&self) -> &BinaryTree {
        &self.domain
    }

    pub fn range(&self) -> &BinaryTree {
        &self.range
    }

    pub fn len(&self) -> usize {
        self.domain.leaf_count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Pairs of branches `u_i -> v_i`, left to right.
    pub fn pairs(&self) -> impl Iterator<Item = (&Word, &Word)> + '_ {
        self.domain.branches().iter().zip(self.range.branches())
    }

    pub fn pair_list(&self) -> Vec<(Word, Word)> {
        self.pairs().map(|(u, v)| (u.clone(), v.clone())).collect()
    }

    /// True if every pair of branches is of the form `w -> w`.
    pub fn is_identity(&self) -> bool {
        self.pairs().all(|(u, v)| u == v)
    }

    /// No index `i` where leaves `i`, `i+1` share a father in both trees.
    pub fn is_reduced(&self) -> bool {
        let d = self.domain.branches();
        let r = self.range.branches();
        !(0..self.len().saturating_sub(1)).any(|i| siblings(&d[i], &d[i + 1]) && siblings(&r[i], &r[i + 1]))
    }

    /// The unique reduced diagram equivalent to `self`.
    pub fn reduce(&self) -> TreeDiagram {
        let mut stack: Vec<(Word, Word)> = Vec::with_capacity(self.len());
        for (u, v) in self.pairs() {
            stack.push((u.clone(), v.clone()));
            while stack.len() >= 2 {
                let n = stack.len();
                let (a, b) = (&stack[n - 2], &stack[n - 1]);
                if siblings(&a.0, &b.0) && siblings(&a.1, &b.1) {
                    let mut merged = stack.pop().unwrap();
                    merged.0.pop();
                    merged.1.pop();
                    stack.pop();
                    stack.push(merged);
                } else {
                    break;
                }
            }
        }
        Self::from_sorted_pairs(stack)
    }

    fn from_sorted_pairs(pairs: Vec<(Word, Word)>) -> TreeDiagram {
        let (d, r): (Vec<Word>, Vec<Word>) = pairs.into_iter().unzip();
        TreeDiagram {
            domain: BinaryTree::from_branches(d).expect("domain stays a full tree"),
            range: BinaryTree::from_branches(r).expect("range stays a full tree"),
        }
    }

    /// Whether the element maps `[u]` linearly onto `[v]`, i.e. some diagram
    /// of it has the pair of branches `u -> v`.
    pub fn has_pair_of_branches(&self, u: &Word, v: &Word) -> bool {
        let d = self.reduce();
        match d.domain.branch_prefix_of(u) {
            Some(i) => {
                let (ui, vi) = (&d.domain.branches()[i], &d.range.branches()[i]);
                vi.concat(&u.suffix_from(ui.len())) == *v
            }
            None => false,
        }
    }

    /// Inserts a common caret below pair `index`.
    pub fn expand_pair(&self, index: usize) -> TreeDiagram {
        TreeDiagram {
            domain: self.domain.expand_leaf(index),
            range: self.range.expand_leaf(index),
        }
    }

    /// Equivalent diagram whose domain tree is `target`, which must contain
    /// the domain tree as a rooted subtree.
    fn with_domain(&self, target: &BinaryTree) -> Vec<(Word, Word)> {
        target
            .branches()
            .iter()
            .map(|w| {
                let i = self.domain.branch_prefix_of(w).expect("target refines the domain tree");
                let u = &self.domain.branches()[i];
                let v = &self.range.branches()[i];
                (w.clone(), v.concat(&w.suffix_from(u.len())))
            })
            .collect()
    }

    /// Left-to-right product: `self` acts first, then `other`.
    pub fn multiply(&self, other: &TreeDiagram) -> TreeDiagram {
        let common = self.range.union(&other.domain);
        let inv = self.invert();
        let first = inv.with_domain(&common); // pairs s -> u x
        let second = other.with_domain(&common); // pairs s -> t y
        let pairs = first
            .into_iter()
            .zip(second)
            .map(|((_, pre), (_, post))| (pre, post))
            .collect();
        Self::from_sorted_pairs(pairs).reduce()
    }

    pub fn invert(&self) -> TreeDiagram {
        TreeDiagram {
            domain: self.range.clone(),
            range: self.domain.clone(),
        }
    }

    pub fn pow(&self, exp: i64) -> TreeDiagram {
        let base = if exp < 0 { self.invert() } else { self.clone() };
        let mut acc = TreeDiagram::identity();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.multiply(&base);
        }
        acc
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &TreeDiagram) -> TreeDiagram {
        other.invert().multiply(self).multiply(other)
    }

    pub fn commutator(&self, other: &TreeDiagram) -> TreeDiagram {
        self.invert().multiply(&other.invert()).multiply(self).multiply(other)
    }

    fn max_domain_len(&self) -> usize {
        self.domain.branches().iter().map(Word::len).max().unwrap_or(0)
    }

    /// Image of a dyadic fraction.
    pub fn evaluate(&self, alpha: &DyadicFraction) -> DyadicFraction {
        let mut w = alpha.word().clone();
        while w.len() < self.max_domain_len() {
            w.push(0);
        }
        let i = self.domain.branch_prefix_of(&w).expect("domain branches are complete");
        let u = &self.domain.branches()[i];
        let v = &self.range.branches()[i];
        let image = v.concat(&w.suffix_from(u.len()));
        DyadicFraction::from_word(&image).expect("images of (0,1) stay in (0,1)")
    }

    fn slope_of_pair(&self, i: usize) -> i64 {
        self.domain.branches()[i].len() as i64 - self.range.branches()[i].len() as i64
    }

    /// log2 of the slope just to the right of `at`.
    pub fn slope_right(&self, at: &Point) -> Result<i64, DiagramError> {
        let mut w = match at {
            Point::Zero => Word::empty(),
            Point::Dyadic(a) => a.word().clone(),
            Point::One => return Err(DiagramError::OutsideInterval),
        };
        while w.len() < self.max_domain_len() {
            w.push(0);
        }
        let i = self.domain.branch_prefix_of(&w).expect("domain branches are complete");
        Ok(self.slope_of_pair(i))
    }

    /// log2 of the slope just to the left of `at`.
    pub fn slope_left(&self, at: &Point) -> Result<i64, DiagramError> {
        // .u'1 is also .u'0111...; extend by ones until a branch matches.
        let mut w = match at {
            Point::Zero => return Err(DiagramError::OutsideInterval),
            Point::One => Word::empty(),
            Point::Dyadic(a) => {
                let mut w = a.word().clone();
                w.pop();
                w.push(0);
                w
            }
        };
        loop {
            if let Some(i) = self.domain.branch_prefix_of(&w) {
                return Ok(self.slope_of_pair(i));
            }
            w.push(1);
        }
    }

    pub fn abelianize(&self) -> AbelianImage {
        AbelianImage(
            self.slope_right(&Point::Zero).expect("0 is in range"),
            self.slope_left(&Point::One).expect("1 is in range"),
        )
    }

    /// The copy of `self` supported in the dyadic interval `[u]`.
    pub fn copy_in(&self, u: &Word) -> TreeDiagram {
        let mut pairs: Vec<(Word, Word)> = u
            .minimal_tree_branches()
            .into_iter()
            .filter(|b| b != u)
            .map(|b| (b.clone(), b))
            .collect();
        pairs.extend(self.pairs().map(|(v, w)| (u.concat(v), u.concat(w))));
        pairs.sort();
        Self::from_sorted_pairs(pairs).reduce()
    }

    /// `g ⊕ h`: a copy of `g` on `[0]` followed by a copy of `h` on `[1]`.
    pub fn direct_sum(&self, other: &TreeDiagram) -> TreeDiagram {
        let zero = Word::from_digits(&[0]);
        let one = Word::from_digits(&[1]);
        self.copy_in(&zero).multiply(&other.copy_in(&one))
    }

    /// `t_i = (ℓ1(u_i) − ℓ1(v_i), ℓ0(u_{i+1}) − ℓ0(v_{i+1}))` for consecutive pairs.
    pub fn tuple_sequence(&self) -> Vec<(i64, i64)> {
        let d = self.domain.branches();
        let r = self.range.branches();
        (0..self.len().saturating_sub(1))
            .map(|i| {
                (
                    d[i].ell1() as i64 - r[i].ell1() as i64,
                    d[i + 1].ell0() as i64 - r[i + 1].ell0() as i64,
                )
            })
            .collect()
    }
}

fn siblings(a: &Word, b: &Word) -> bool {
    a.len() == b.len()
        && !a.is_empty()
        && a.last() == Some(0)
        && b.last() == Some(1)
        && a.digits()[..a.len() - 1] == b.digits()[..b.len() - 1]
}

impl fmt::Debug for TreeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (u, v)) in self.pairs().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}->{}", u, v)?;
        }
        f.write_str("}")
    }
}

/// The generator `x_n` as a reduced diagram.
///
/// `x0` and `x1` are given directly; `x_{n+1} = x0^-1 x_n x0`.
pub fn make_x(n: usize) -> TreeDiagram {
    let mut cache = Generators::new();
    cache.get(n).clone()
}

fn x0() -> TreeDiagram {
    let w = |s: &str| s.parse::<Word>().unwrap();
    TreeDiagram::from_pairs(alloc::vec![(w("00"), w("0")), (w("01"), w("10")), (w("1"), w("11"))]).unwrap()
}

fn x1() -> TreeDiagram {
    let w = |s: &str| s.parse::<Word>().unwrap();
    TreeDiagram::from_pairs(alloc::vec![
        (w("0"), w("0")),
        (w("100"), w("10")),
        (w("101"), w("110")),
        (w("11"), w("111")),
    ])
    .unwrap()
}

/// Memo of the infinite generators `x_0, x_1, ...`, filled on demand.
///
/// Entries are never modified once inserted.
#[derive(Clone, Debug, Default)]
pub struct Generators {
    cache: Vec<TreeDiagram>,
}

impl Generators {
    pub fn new() -> Self {
        Generators { cache: Vec::new() }
    }

    pub fn get(&mut self, n: usize) -> &TreeDiagram {
        if self.cache.is_empty() {
            self.cache.push(x0());
            self.cache.push(x1());
        }
        while self.cache.len() <= n {
            let next = self.cache.last().unwrap().conjugate_by(&self.cache[0]);
            self.cache.push(next);
        }
        &self.cache[n]
    }
}

/// One letter `x_n^{±1}` of a generator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

/// A word in the generators `x_n`, written as whitespace-separated tokens
/// `x0 x1 X2 ...` (uppercase is the inverse).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(pub Vec<Letter>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseGeneratorError {
    /// 0-based token index.
    pub token: usize,
    pub text: String,
}

impl core::error::Error for ParseGeneratorError {}

impl fmt::Display for ParseGeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid generator token {:?} at position {}", self.text, self.token)
    }
}

impl FromStr for GeneratorWord {
    type Err = ParseGeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for (token, text) in s.split_whitespace().enumerate() {
            let err = || ParseGeneratorError {
                token,
                text: String::from(text),
            };
            let inverse = match text.as_bytes().first() {
                Some(b'x') => false,
                Some(b'X') => true,
                _ => return Err(err()),
            };
            let digits = &text[1..];
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let index = digits.parse().map_err(|_| err())?;
            letters.push(Letter { index, inverse });
        }
        Ok(GeneratorWord(letters))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", if l.inverse { 'X' } else { 'x' }, l.index)?;
        }
        Ok(())
    }
}

impl GeneratorWord {
    pub fn evaluate(&self, gens: &mut Generators) -> TreeDiagram {
        self.0.iter().fold(TreeDiagram::identity(), |acc, l| {
            let g = gens.get(l.index);
            let g = if l.inverse { g.invert() } else { g.clone() };
            acc.multiply(&g)
        })
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord(
            self.0
                .iter()
                .rev()
                .map(|l| Letter {
                    index: l.index,
                    inverse: !l.inverse,
                })
                .collect(),
        )
    }
}
