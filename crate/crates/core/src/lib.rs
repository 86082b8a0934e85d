//! Thompson's group F through tree-diagrams and rooted tree-automata.
//!
//! Elements are reduced tree-diagrams ([`TreeDiagram`]). A finitely
//! generated subgroup is represented by its core ([`build_core`]), a rooted
//! tree-automaton obtained by gluing and folding the generators' trees. The
//! core decides membership in the closure of the subgroup, whether the
//! subgroup generates `F`, and feeds the maximality test.

#![no_std]

extern crate alloc;

pub mod automaton;
pub mod decide;
pub mod element;
mod fold;
pub mod jones;
pub mod rewriting;
pub mod stallings;
pub mod words;

pub use automaton::{AutomatonError, Morphism, TreeAutomaton, Vertex, VertexType};
pub use element::{make_x, GeneratorWord, Generators, TreeDiagram};

pub use rewriting::Verdict;
pub use stallings::build_core;
pub use words::{BinaryTree, DyadicFraction, Word};
