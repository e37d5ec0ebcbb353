//! Host trees: validation, center rooting, LCA, paths, and traversals.
//!
//! Nodes are 0-based in memory. Each node's children are kept in ascending
//! node-id order; that canonical order defines "left to right" and the
//! canonical child index used by drawings.

use std::collections::VecDeque;

use crate::drawings::DrawingDescriptor;
use crate::{Error, Result};

const NONE: usize = usize::MAX;

/// An unrooted tree on nodes `0..n`.
#[derive(Clone, Debug)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Validates that `edges` form a tree on `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTree("a tree needs at least one node".into()));
        }
        let mut adj = vec![Vec::new(); n];
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut [usize], mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidTree(format!(
                    "edge ({}, {}) names a node outside 1..{n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at node {}", u + 1)));
            }
            let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
            if ru == rv {
                return Err(Error::InvalidTree(format!(
                    "edge ({}, {}) closes a cycle",
                    u + 1,
                    v + 1
                )));
            }
            dsu[ru] = rv;
            adj[u].push(v);
            adj[v].push(u);
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "disconnected: {} edges on {n} nodes",
                edges.len()
            )));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Tree { adj })
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn leaf_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() == 1).count()
    }

    fn bfs(&self, src: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let mut dist = vec![NONE; n];
        let mut from = vec![NONE; n];
        let mut queue = VecDeque::from([src]);
        dist[src] = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == NONE {
                    dist[v] = dist[u] + 1;
                    from[v] = u;
                    queue.push_back(v);
                }
            }
        }
        (dist, from)
    }

    /// The center vertices (one or two), ascending.
    pub fn centers(&self) -> Vec<usize> {
        let farthest = |dist: &[usize]| {
            (0..dist.len()).max_by_key(|&v| (dist[v], std::cmp::Reverse(v))).unwrap()
        };
        let (d0, _) = self.bfs(0);
        let a = farthest(&d0);
        let (da, from) = self.bfs(a);
        let b = farthest(&da);
        let diameter = da[b];
        let mut path = vec![b];
        while *path.last().unwrap() != a {
            path.push(from[*path.last().unwrap()]);
        }
        let mut c = vec![path[diameter / 2], path[diameter.div_ceil(2)]];
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Roots the tree at its center; with two centers the smaller id wins.
    pub fn root_at_center(&self) -> RootedTree {
        self.root_at(self.centers()[0])
    }

    pub fn root_at(&self, root: usize) -> RootedTree {
        let n = self.len();
        let mut parent = vec![NONE; n];
        let mut level = vec![0; n];
        let mut children = vec![Vec::new(); n];
        let mut queue = VecDeque::from([root]);
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    level[v] = level[u] + 1;
                    children[u].push(v);
                    queue.push_back(v);
                }
            }
        }
        RootedTree::assemble(root, parent, children, level, self.max_degree(), self.leaf_count())
    }
}

/// A rooted tree with levels and canonical (ascending id) child order.
#[derive(Clone, Debug)]
pub struct RootedTree {
    root: usize,
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    level: Vec<usize>,
    radius: usize,
    max_degree: usize,
    leaf_count: usize,
    max_children: usize,
    // canonical preorder interval [tin, tout) for O(1) ancestry
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl RootedTree {
    fn assemble(
        root: usize,
        parent: Vec<usize>,
        mut children: Vec<Vec<usize>>,
        level: Vec<usize>,
        max_degree: usize,
        leaf_count: usize,
    ) -> Self {
        for c in &mut children {
            c.sort_unstable();
        }
        let n = parent.len();
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut clock = 0;
        let mut stack = vec![(root, false)];
        while let Some((v, done)) = stack.pop() {
            if done {
                tout[v] = clock;
                continue;
            }
            tin[v] = clock;
            clock += 1;
            stack.push((v, true));
            stack.extend(children[v].iter().rev().map(|&c| (c, false)));
        }
        RootedTree {
            root,
            radius: level.iter().copied().max().unwrap_or(0),
            max_children: children.iter().map(Vec::len).max().unwrap_or(0),
            parent,
            children,
            level,
            max_degree,
            leaf_count,
            tin,
            tout,
        }
    }

    /// The complete `arity`-ary tree of the given radius, nodes numbered in
    /// breadth-first order from the root (node 0).
    pub fn complete(arity: usize, radius: usize) -> Result<Self> {
        let mut edges = Vec::new();
        let mut frontier = vec![0usize];
        let mut next_id = 1usize;
        for _ in 0..radius {
            let mut next = Vec::with_capacity(frontier.len() * arity);
            for &u in &frontier {
                for _ in 0..arity {
                    edges.push((u, next_id));
                    next.push(next_id);
                    next_id += 1;
                }
            }
            frontier = next;
        }
        Ok(Tree::from_edges(next_id, &edges)?.root_at(0))
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        (self.parent[v] != NONE).then_some(self.parent[v])
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Maximum degree in the unrooted tree.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Maximum number of children of any node (the branching factor).
    pub fn max_children(&self) -> usize {
        self.max_children
    }

    /// Degree-1 nodes of the unrooted tree.
    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    /// Edges as (parent, child) pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).filter_map(|v| self.parent(v).map(|p| (p, v)))
    }

    /// True if `a` is `d` or an ancestor of `d`.
    pub fn is_ancestor(&self, a: usize, d: usize) -> bool {
        self.tin[a] <= self.tin[d] && self.tout[d] <= self.tout[a]
    }

    /// Level-aligned parent walk, `O(r)`.
    pub fn lca(&self, mut u: usize, mut v: usize) -> usize {
        while self.level[u] > self.level[v] {
            u = self.parent[u];
        }
        while self.level[v] > self.level[u] {
            v = self.parent[v];
        }
        while u != v {
            u = self.parent[u];
            v = self.parent[v];
        }
        u
    }

    pub fn is_incomparable(&self, u: usize, v: usize) -> bool {
        let a = self.lca(u, v);
        a != u && a != v
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.level[u] + self.level[v] - 2 * self.level[self.lca(u, v)]
    }

    pub fn path(&self, u: usize, v: usize) -> TreePath {
        let top = self.lca(u, v);
        TreePath {
            u,
            v,
            top,
            len: self.level[u] + self.level[v] - 2 * self.level[top] + 1,
        }
    }

    /// `w` lies on `p` iff `dist(u,w) + dist(w,v) = dist(u,v)`.
    pub fn on_path(&self, p: &TreePath, w: usize) -> bool {
        self.dist(p.u, w) + self.dist(w, p.v) == p.len - 1
    }

    /// Every vertex of `q` lies on `p`.
    pub fn path_contains(&self, p: &TreePath, q: &TreePath) -> bool {
        self.on_path(p, q.u) && self.on_path(p, q.v)
    }

    /// Vertices of `p`, from `u` up to the top and down to `v`.
    pub fn path_vertices(&self, p: &TreePath) -> Vec<usize> {
        let mut up = vec![p.u];
        while *up.last().unwrap() != p.top {
            up.push(self.parent[*up.last().unwrap()]);
        }
        let mut down = Vec::new();
        let mut w = p.v;
        while w != p.top {
            down.push(w);
            w = self.parent[w];
        }
        up.extend(down.into_iter().rev());
        up
    }
}

/// A path given by its endpoints, with its top (LCA) and length in vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TreePath {
    pub u: usize,
    pub v: usize,
    pub top: usize,
    pub len: usize,
}

impl TreePath {
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraversalKind {
    Preorder,
    Levelwise,
}

/// A traversal of all nodes: `order[i]` is the `i`-th listed node and
/// `position[v]` its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Listing {
    kind: TraversalKind,
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Listing {
    fn from_order(kind: TraversalKind, order: Vec<usize>) -> Self {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        Listing {
            kind,
            order,
            position,
        }
    }

    pub fn kind(&self) -> TraversalKind {
        self.kind
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Depth-first preorder visiting children in the order `d` gives.
pub fn preorder(t: &RootedTree, d: &DrawingDescriptor) -> Listing {
    let mut order = Vec::with_capacity(t.len());
    let mut stack = vec![t.root];
    while let Some(v) = stack.pop() {
        order.push(v);
        stack.extend(d.child_order(t, v).into_iter().rev());
    }
    Listing::from_order(TraversalKind::Preorder, order)
}

/// Deepest level first, root last; left-to-right within a level follows the
/// canonical drawing.
pub fn levelwise(t: &RootedTree) -> Listing {
    let mut order: Vec<usize> = (0..t.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(t.level[v]), t.tin[v]));
    Listing::from_order(TraversalKind::Levelwise, order)
}
