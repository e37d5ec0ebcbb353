//! Instance generators: the `P(1,2;m)` family on complete trees and seeded
//! random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::realizer::CptInstance;
use crate::tree::{RootedTree, Tree};
use crate::{Error, Result};

/// Largest leaf count `Δ^r` [`gen_p12`] will materialize.
pub const P12_LEAF_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    P12 { arity: usize, radius: usize },
    Random { nodes: usize, paths: usize, seed: u64 },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<CptInstance> {
        match *self {
            GeneratorSpec::P12 { arity, radius } => gen_p12(arity, radius),
            GeneratorSpec::Random { nodes, paths, seed } => gen_random_instance(nodes, paths, seed),
        }
    }
}

/// `P(1,2;m)`, `m = arity^radius`, on the complete `arity`-ary tree: element
/// `i` (`1..=m`) is leaf `i` alone, and the elements after them are the
/// leaf-to-leaf paths `{i, j}`, `i < j`, in lexicographic order. Leaves are
/// numbered in canonical preorder.
pub fn gen_p12(arity: usize, radius: usize) -> Result<CptInstance> {
    if arity < 2 || radius < 1 {
        return Err(Error::InvalidArgument(format!(
            "P(1,2;n) needs arity >= 2 and radius >= 1, got {arity} and {radius}"
        )));
    }
    let leaves = u32::try_from(radius)
        .ok()
        .and_then(|r| arity.checked_pow(r))
        .filter(|&m| m <= P12_LEAF_LIMIT)
        .ok_or(Error::Guard {
            what: "leaf count arity^radius",
            got: arity.checked_pow(radius.min(64) as u32).unwrap_or(usize::MAX),
            limit: P12_LEAF_LIMIT,
        })?;
    let tree = RootedTree::complete(arity, radius)?;
    // breadth-first numbering puts the deepest level last, in preorder
    let first_leaf = tree.len() - leaves;
    let leaf = |i: usize| first_leaf + i;
    let mut elements = Vec::with_capacity(leaves + leaves * (leaves - 1) / 2);
    let mut id = 1u32;
    for i in 0..leaves {
        elements.push((id, leaf(i), leaf(i)));
        id += 1;
    }
    for i in 0..leaves {
        for j in i + 1..leaves {
            elements.push((id, leaf(i), leaf(j)));
            id += 1;
        }
    }
    CptInstance::new(tree, &elements)
}

/// Random tree by parent attachment under a random labelling, then `paths`
/// paths with uniform endpoints (ids `1..=paths`), rooted at the center.
/// Duplicate paths are allowed.
pub fn gen_random_instance(nodes: usize, paths: usize, seed: u64) -> Result<CptInstance> {
    if nodes == 0 || paths == 0 {
        return Err(Error::InvalidArgument("random instances need n >= 1 and p >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut label: Vec<usize> = (0..nodes).collect();
    label.shuffle(&mut rng);
    let edges: Vec<(usize, usize)> = (1..nodes)
        .map(|v| (label[rng.gen_range(0..v)], label[v]))
        .collect();
    let tree = Tree::from_edges(nodes, &edges)?.root_at_center();
    let elements: Vec<(u32, usize, usize)> = (1..=paths as u32)
        .map(|id| (id, rng.gen_range(0..nodes), rng.gen_range(0..nodes)))
        .collect();
    CptInstance::new(tree, &elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizer::poset_from_paths;

    #[test]
    fn smallest_p12() {
        let inst = gen_p12(2, 1).unwrap();
        assert_eq!(inst.len(), 3);
        let p = poset_from_paths(&inst);
        let rel: Vec<_> = p.relations().collect();
        assert_eq!(rel, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn p12_binary_radius_two() {
        let inst = gen_p12(2, 2).unwrap();
        assert_eq!(inst.tree().len(), 7);
        assert_eq!(inst.len(), 10);
        let p = poset_from_paths(&inst);
        for s in 0..4 {
            assert_eq!(p.successors(s).count(), 3);
        }
    }

    #[test]
    fn p12_matches_subset_inclusion() {
        // P(1,2;3) built directly: sets {i} then {i,j} in the same order
        let m = 3;
        let mut sets: Vec<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
        for i in 0..m {
            for j in i + 1..m {
                sets.push(vec![i, j]);
            }
        }
        let direct = crate::poset::Poset::from_relation(sets.len(), |x, y| {
            sets[x].len() < sets[y].len() && sets[x].iter().all(|e| sets[y].contains(e))
        })
        .unwrap();
        assert_eq!(poset_from_paths(&gen_p12(3, 1).unwrap()), direct);
    }

    #[test]
    fn p12_structure() {
        for (arity, radius) in [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2)] {
            let m = usize::pow(arity, radius as u32);
            let p = poset_from_paths(&gen_p12(arity, radius).unwrap());
            assert_eq!(p.minimal_elements().len(), m);
            assert_eq!(p.maximal_elements().len(), m * (m - 1) / 2);
            assert_eq!(p.height(), 2);
            for s in p.minimal_elements() {
                assert_eq!(p.successors(s).count(), m - 1);
            }
        }
    }

    #[test]
    fn p12_guard_and_arguments() {
        assert!(matches!(gen_p12(4, 10), Err(Error::Guard { .. })));
        assert!(matches!(gen_p12(2, 100), Err(Error::Guard { .. })));
        assert!(gen_p12(1, 3).is_err());
        assert!(gen_p12(2, 0).is_err());
    }

    #[test]
    fn random_instances() {
        let inst = gen_random_instance(1, 1, 0).unwrap();
        assert_eq!((inst.tree().len(), inst.len()), (1, 1));
        let a = gen_random_instance(60, 120, 7).unwrap();
        let b = gen_random_instance(60, 120, 7).unwrap();
        assert_eq!(a.paths(), b.paths());
        assert_eq!(a.tree().edges().collect::<Vec<_>>(), b.tree().edges().collect::<Vec<_>>());
        let c = gen_random_instance(60, 120, 8).unwrap();
        assert_ne!(a.paths(), c.paths());
        assert!(gen_random_instance(0, 1, 0).is_err());
    }
}
