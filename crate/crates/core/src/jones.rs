//! Jones subgroups: elements of `F` preserving the digit sum mod a prime `p`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::automaton::TreeAutomaton;
use crate::element::{Generators, TreeDiagram};
use crate::stallings::build_core;
use crate::words::Word;

/// A prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JonesParameter(u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JonesError {
    NotPrime(u32),
}

impl core::error::Error for JonesError {}

impl fmt::Display for JonesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JonesError::NotPrime(p) => write!(f, "{} is not a prime", p),
        }
    }
}

impl JonesParameter {
    pub fn new(p: u32) -> Result<Self, JonesError> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(JonesParameter(p))
        } else {
            Err(JonesError::NotPrime(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn modulus(self) -> usize {
        self.0 as usize
    }
}

/// Number of ones in `u`, mod `p`.
pub fn sum_p(u: &Word, p: JonesParameter) -> usize {
    u.digit_sum() % p.modulus()
}

/// Length of the trailing run of ones in `u`, mod `p`.
pub fn suf_p(u: &Word, p: JonesParameter) -> usize {
    u.ell1() % p.modulus()
}

/// Vertices `a_0 .. a_{p-1}`: digit 0 loops, digit 1 moves `a_i` to `a_{i+1}`.
pub fn a_sum(p: JonesParameter) -> TreeAutomaton {
    let n = p.modulus();
    let edges: Vec<(String, u8, String)> = (0..n)
        .flat_map(|i| {
            [
                (format!("a{}", i), 0, format!("a{}", i)),
                (format!("a{}", i), 1, format!("a{}", (i + 1) % n)),
            ]
        })
        .collect();
    TreeAutomaton::from_edges("a0", &edges).expect("a valid tree-automaton")
}

/// Vertices `b_0 .. b_{p-1}`: digit 0 goes to `b_0`, digit 1 moves `b_i` to `b_{i+1}`.
pub fn a_suf(p: JonesParameter) -> TreeAutomaton {
    let n = p.modulus();
    let edges: Vec<(String, u8, String)> = (0..n)
        .flat_map(|i| {
            [
                (format!("b{}", i), 0, String::from("b0")),
                (format!("b{}", i), 1, format!("b{}", (i + 1) % n)),
            ]
        })
        .collect();
    TreeAutomaton::from_edges("b0", &edges).expect("a valid tree-automaton")
}

/// `x_i x_{i+1} ... x_{i+p-1}` for `i = 0 .. p`.
pub fn jones_generators(p: JonesParameter) -> Vec<TreeDiagram> {
    let n = p.modulus();
    let mut gens = Generators::new();
    (0..=n)
        .map(|i| (i..i + n).fold(TreeDiagram::identity(), |acc, k| acc.multiply(gens.get(k))))
        .collect()
}

/// Whether the Jones subgroup has an element with the pair of branches `u -> v`.
pub fn jones_pair_exists(u: &Word, v: &Word, p: JonesParameter) -> bool {
    u.contains_digit(0) == v.contains_digit(0)
        && u.contains_digit(1) == v.contains_digit(1)
        && sum_p(u, p) == sum_p(v, p)
        && suf_p(u, p) == suf_p(v, p)
}

/// A census entry that differs from the predicted structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JonesMismatch {
    VertexCount {
        expected: usize,
        found: usize,
    },
    /// Census in the order root, left, right, middle.
    TypeCensus {
        expected: [usize; 4],
        found: [usize; 4],
    },
    NoSurjectionOntoSum,
    NoSurjectionOntoSuf,
    Leaves {
        found: usize,
    },
}

/// Structure of the core of the Jones subgroup for one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonesCoreReport {
    pub p: JonesParameter,
    pub core: TreeAutomaton,
    pub vertex_count: usize,
    pub census: [usize; 4],
    pub onto_sum: bool,
    pub onto_suf: bool,
    pub leaves: usize,
}

impl JonesCoreReport {
    /// Predicted census: one root, one left vertex, `p` right and `p^2` middle vertices.
    pub fn expected_census(&self) -> [usize; 4] {
        let p = self.p.modulus();
        [1, 1, p, p * p]
    }

    pub fn mismatches(&self) -> Vec<JonesMismatch> {
        let expected = self.expected_census();
        let total: usize = expected.iter().sum();
        let mut out = Vec::new();
        if self.vertex_count != total {
            out.push(JonesMismatch::VertexCount {
                expected: total,
                found: self.vertex_count,
            });
        }
        if self.census != expected {
            out.push(JonesMismatch::TypeCensus {
                expected,
                found: self.census,
            });
        }
        if !self.onto_sum {
            out.push(JonesMismatch::NoSurjectionOntoSum);
        }
        if !self.onto_suf {
            out.push(JonesMismatch::NoSurjectionOntoSuf);
        }
        if self.leaves != 0 {
            out.push(JonesMismatch::Leaves { found: self.leaves });
        }
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.mismatches().is_empty()
    }
}

/// Builds the core of the Jones subgroup and records its structure.
pub fn verify_jones_core(p: JonesParameter) -> JonesCoreReport {
    let core = build_core(&jones_generators(p)).expect("products are reduced");
    let onto = |target: &TreeAutomaton| core.find_morphism(target).is_some_and(|m| m.surjective);
    JonesCoreReport {
        p,
        vertex_count: core.vertex_count(),
        census: core.type_census(),
        onto_sum: onto(&a_sum(p)),
        onto_suf: onto(&a_suf(p)),
        leaves: core.leaves().count(),
        core,
    }
}
