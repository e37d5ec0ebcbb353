//! From traversals to linear extensions, and the drawing-based realizer.
//!
//! For a listing of the host tree, `λ(P)` is the vertex of `P` listed last.
//! Elements are sorted by the rank of `λ(P)`, then by path length, then by
//! element id (ascending for preorder listings, descending for the level-wise
//! one). In a preorder every path vertex is an ancestor of an endpoint, so
//! `λ(P)` is an endpoint; in the level-wise listing it is the top vertex.
//! Either way it is the last of `{u, v, top}`, which is what gets computed.

use crate::drawings::build_drawing_family;
use crate::poset::{LinearExtension, Poset, Realizer};
use crate::tree::{levelwise, preorder, Listing, RootedTree, TraversalKind, TreePath};
use crate::{cpt_bound, Error, Result};

pub use crate::poset::verify_realizer;

/// Host tree plus one labelled path per poset element.
#[derive(Clone, Debug)]
pub struct CptInstance {
    tree: RootedTree,
    ids: Vec<u32>,
    paths: Vec<TreePath>,
}

impl CptInstance {
    /// `elements` are `(id, u, v)` with 0-based endpoints.
    pub fn new(tree: RootedTree, elements: &[(u32, usize, usize)]) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut ids = Vec::with_capacity(elements.len());
        let mut paths = Vec::with_capacity(elements.len());
        for &(id, u, v) in elements {
            if !seen.insert(id) {
                return Err(Error::InvalidInstance(format!("duplicate element id {id}")));
            }
            if u >= tree.len() || v >= tree.len() {
                return Err(Error::InvalidInstance(format!(
                    "path {id} ends outside the {}-node tree",
                    tree.len()
                )));
            }
            ids.push(id);
            paths.push(tree.path(u, v));
        }
        Ok(CptInstance { tree, ids, paths })
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn id(&self, e: usize) -> u32 {
        self.ids[e]
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn path(&self, e: usize) -> &TreePath {
        &self.paths[e]
    }

    pub fn paths(&self) -> &[TreePath] {
        &self.paths
    }
}

/// `x ≺ y` iff path `x` is strictly contained in path `y`.
pub fn poset_from_paths(inst: &CptInstance) -> Poset {
    let t = &inst.tree;
    Poset::from_relation(inst.len(), |x, y| {
        let (p, q) = (&inst.paths[x], &inst.paths[y]);
        p.len < q.len && t.path_contains(q, p)
    })
    .expect("strict containment is a strict order")
}

/// Per-vertex lists of the elements that have the vertex as an endpoint or
/// top, each sorted by (length, id).
#[derive(Clone, Debug)]
pub struct PathIndex {
    by_vertex: Vec<Vec<usize>>,
}

impl PathIndex {
    pub fn new(inst: &CptInstance) -> Self {
        let mut sorted: Vec<usize> = (0..inst.len()).collect();
        sorted.sort_by_key(|&e| (inst.paths[e].len, inst.ids[e]));
        let mut by_vertex = vec![Vec::new(); inst.tree.len()];
        for e in sorted {
            let p = &inst.paths[e];
            let mut ends = [p.u, p.v, p.top];
            ends.sort_unstable();
            for (i, &w) in ends.iter().enumerate() {
                if i == 0 || ends[i - 1] != w {
                    by_vertex[w].push(e);
                }
            }
        }
        PathIndex { by_vertex }
    }

    /// `O(n + p)`.
    pub fn extension(&self, inst: &CptInstance, listing: &Listing) -> LinearExtension {
        let lambda: Vec<usize> = inst
            .paths
            .iter()
            .map(|p| {
                [p.u, p.v, p.top]
                    .into_iter()
                    .max_by_key(|&w| listing.position(w))
                    .unwrap()
            })
            .collect();
        let mut order = Vec::with_capacity(inst.len());
        let mut bucket = Vec::new();
        for &w in listing.order() {
            bucket.clear();
            bucket.extend(self.by_vertex[w].iter().copied().filter(|&e| lambda[e] == w));
            if listing.kind() == TraversalKind::Levelwise {
                for run in bucket.chunk_by_mut(|&a, &b| inst.paths[a].len == inst.paths[b].len) {
                    run.reverse();
                }
            }
            order.extend_from_slice(&bucket);
        }
        LinearExtension::new(order)
    }
}

pub fn extension_from_listing(inst: &CptInstance, listing: &Listing) -> LinearExtension {
    PathIndex::new(inst).extension(inst, listing)
}

/// One extension per drawing of the 3-suitable family, then the level-wise
/// extension.
pub fn build_realizer(inst: &CptInstance) -> Realizer {
    let index = PathIndex::new(inst);
    let fam = build_drawing_family(&inst.tree);
    let mut extensions: Vec<LinearExtension> = fam
        .descriptors()
        .iter()
        .map(|d| index.extension(inst, &preorder(&inst.tree, d)))
        .collect();
    extensions.push(index.extension(inst, &levelwise(&inst.tree)));
    Realizer::new(extensions)
}

/// Size of [`build_realizer`]'s output: the `2⌈log₂log₂Δ⌉ + 2⌈log₂r⌉ + 3`
/// bound with `Δ` read as the branching factor.
pub fn realizer_size(t: &RootedTree) -> usize {
    cpt_bound(t.max_children(), t.radius())
}

/// `2⌈log₂log₂Δ⌉ + 2⌈log₂r⌉ + 3` with `Δ` the maximum degree.
pub fn degree_bound(t: &RootedTree) -> usize {
    cpt_bound(t.max_degree(), t.radius())
}

/// `min(l, 2⌈log₂log₂Δ⌉ + 2⌈log₂r⌉ + 3)`; the leaf term is at least 2 and `Δ`
/// is the branching factor of the center-rooted tree.
pub fn dimension_bound(t: &RootedTree) -> usize {
    t.leaf_count().max(2).min(realizer_size(t))
}
