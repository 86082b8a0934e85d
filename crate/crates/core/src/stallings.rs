//! The core `C(H)` of a finitely generated subgroup `H` of `F`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::automaton::{TreeAutomaton, VertexType};
use crate::element::TreeDiagram;
use crate::fold::Folding;
use crate::words::{BinaryTree, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreError {
    /// The generator at this index is not a reduced diagram.
    NotReduced(usize),
}

impl core::error::Error for CoreError {}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::NotReduced(i) => write!(f, "generator {} is not reduced", i),
        }
    }
}

struct Glue {
    next: usize,
    edges: Vec<(usize, u8, usize)>,
}

impl Glue {
    fn fresh(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    /// Adds the carets of `tree`, with the root at vertex 0 and its leaves at
    /// the given ids. Other inner vertices get fresh ids.
    fn add_tree(&mut self, tree: &BinaryTree, leaves: &[usize]) {
        let mut ids: BTreeMap<Word, usize> = BTreeMap::new();
        ids.insert(Word::empty(), 0);
        for (b, &id) in tree.branches().iter().zip(leaves) {
            ids.insert(b.clone(), id);
        }
        for w in tree.inner_vertices() {
            let id = match ids.get(&w) {
                Some(&id) => id,
                None => {
                    let id = self.fresh();
                    ids.insert(w.clone(), id);
                    id
                }
            };
            for d in 0..2u8 {
                let c = w.child(d);
                let cid = match ids.get(&c) {
                    Some(&cid) => cid,
                    None => {
                        let cid = self.fresh();
                        ids.insert(c, cid);
                        cid
                    }
                };
                self.edges.push((id, d, cid));
            }
        }
    }
}

/// Glues each generator's two trees along their leaves and roots, fuses all
/// roots, and folds.
///
/// Vertices of the result are named `v0, v1, ...` in breadth-first order.
pub fn build_core(gens: &[TreeDiagram]) -> Result<TreeAutomaton, CoreError> {
    if let Some(i) = gens.iter().position(|g| !g.is_reduced()) {
        return Err(CoreError::NotReduced(i));
    }
    let mut glue = Glue {
        next: 1,
        edges: Vec::new(),
    };
    for g in gens {
        if g.len() == 1 {
            continue;
        }
        let leaves: Vec<usize> = (0..g.len()).map(|_| glue.fresh()).collect();
        glue.add_tree(g.domain(), &leaves);
        glue.add_tree(g.range(), &leaves);
    }
    let mut folding = Folding::new(glue.next, glue.edges);
    folding.close();
    Ok(folding.into_automaton(0))
}

/// Membership of `f` in the closure of the subgroup whose core is `core`.
pub fn closure_contains(core: &TreeAutomaton, f: &TreeDiagram) -> bool {
    core.accepts(f)
}

/// Whether the closure contains `[F, F]`: a unique middle vertex, and it is inner.
pub fn closure_contains_derived(core: &TreeAutomaton) -> bool {
    let middles = middle_vertices(core);
    middles.len() == 1 && core.is_inner(middles[0])
}

/// Vertices reachable by some word containing both digits.
pub fn middle_vertices(core: &TreeAutomaton) -> Vec<usize> {
    core.vertex_types()
        .iter()
        .enumerate()
        .filter(|(_, t)| t.contains(VertexType::Middle))
        .map(|(v, _)| v)
        .collect()
}

/// Whether the closure has finitely many orbits of dyadic fractions.
pub fn finitely_many_dyadic_orbits(core: &TreeAutomaton) -> bool {
    core.is_full()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::VertexType;
    use crate::element::{make_x, GeneratorWord, Generators};
    use alloc::vec;

    fn words(ws: &[&str]) -> Vec<TreeDiagram> {
        let mut gens = Generators::new();
        ws.iter()
            .map(|w| w.parse::<GeneratorWord>().unwrap().evaluate(&mut gens))
            .collect()
    }

    #[test]
    fn core_of_f() {
        let c = build_core(&[make_x(0), make_x(1)]).unwrap();
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(c.type_census(), [1, 1, 1, 1]);
        let m = c.vertices_of_type(VertexType::Middle)[0];
        assert_eq!(c.children(m), Some([m, m]));
        assert_eq!(c, TreeAutomaton::core_of_f());
        assert!(closure_contains_derived(&c));
        assert!(finitely_many_dyadic_orbits(&c));
    }

    #[test]
    fn empty_and_trivial() {
        assert_eq!(build_core(&[]).unwrap(), TreeAutomaton::single_vertex());
        assert_eq!(
            build_core(&[TreeDiagram::identity()]).unwrap(),
            TreeAutomaton::single_vertex()
        );
    }

    #[test]
    fn independent_of_generating_set() {
        let a = build_core(&words(&["x0", "x1"])).unwrap();
        let b = build_core(&words(&["x0", "x1", "x2"])).unwrap();
        let c = build_core(&words(&["x0", "x0 x1 X0"])).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_eq!(a.canonical_form(), c.canonical_form());
    }

    #[test]
    fn conjugates_of_x1_stay_proper() {
        // Both generators are trivial near 0, so x0 is out of reach.
        let c = build_core(&words(&["x1", "x0 x1 X0"])).unwrap();
        assert!(!closure_contains(&c, &make_x(0)));
        assert_ne!(c.canonical_form(), TreeAutomaton::core_of_f().canonical_form());
    }

    #[test]
    fn core_of_x0_has_leaves() {
        let c = build_core(&[make_x(0)]).unwrap();
        assert!(!finitely_many_dyadic_orbits(&c));
        assert!(finitely_many_dyadic_orbits(&c.fill_leaves()));
        assert!(c.is_reduced());
        assert!(closure_contains(&c, &make_x(0)));
        assert!(!closure_contains(&c, &make_x(1)));
    }

    #[test]
    fn rejects_unreduced() {
        let t = make_x(0).expand_pair(1);
        assert_eq!(build_core(&[make_x(1), t]), Err(CoreError::NotReduced(1)));
    }

    #[test]
    fn maximal_example_core() {
        let c = build_core(&words(&["x0", "x1 x1 X3 X2 X1", "x1 x2 x2 X3 X1 X1"])).unwrap();
        assert!(c.is_full());
        assert!(c.is_reduced());
        assert!(!closure_contains_derived(&c));
        assert!(middle_vertices(&c).len() > 1);
        assert!(c.vertex_types().iter().all(|t| t.len() == 1));
        assert_eq!(c.type_census()[0..3], vec![1, 1, 1][..]);
    }
}
