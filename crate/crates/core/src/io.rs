//! Flat text formats. Node and permutation labels are 1-based on disk.
//!
//! * tree: `n`, then `n - 1` lines `u v`;
//! * paths: `p`, then `p` lines `id u v`;
//! * realizer: `k p`, then `k` lines of element ids, lowest first;
//! * permutation family: `n k`, then `k` lines of `n` labels;
//! * drawings: one descriptor per line.

use std::fmt::Write as _;

use crate::drawings::DrawingFamily;
use crate::permutations::PermutationFamily;
use crate::poset::Realizer;
use crate::realizer::CptInstance;
use crate::tree::{RootedTree, Tree};
use crate::{Error, Result};

/// Non-blank lines with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, f)| !f.is_empty())
}

fn field<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {s:?}")))
}

fn arity(line: usize, fields: &[&str], want: usize, shape: &str) -> Result<()> {
    if fields.len() != want {
        return Err(Error::parse(line, format!("expected \"{shape}\", found {} fields", fields.len())));
    }
    Ok(())
}

fn node(line: usize, s: &str, n: usize) -> Result<usize> {
    let v: usize = field(line, s, "a node number")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("node {v} outside 1..{n}")));
    }
    Ok(v - 1)
}

pub fn read_tree(text: &str) -> Result<Tree> {
    let mut it = lines(text);
    let (l, head) = it.next().ok_or_else(|| Error::parse(1, "empty tree file"))?;
    arity(l, &head, 1, "n")?;
    let n: usize = field(l, head[0], "the node count")?;
    if n == 0 {
        return Err(Error::parse(l, "node count must be positive"));
    }
    let mut edges = Vec::with_capacity(n - 1);
    for (l, f) in it {
        arity(l, &f, 2, "u v")?;
        if edges.len() == n - 1 {
            return Err(Error::parse(l, format!("more than {} edges", n - 1)));
        }
        edges.push((node(l, f[0], n)?, node(l, f[1], n)?));
    }
    Tree::from_edges(n, &edges)
}

pub fn write_tree(t: &RootedTree) -> String {
    let mut edges: Vec<(usize, usize)> = t.edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    let mut out = format!("{}\n", t.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Reads `(id, u, v)` triples with 0-based endpoints, checked against a
/// tree of `nodes` nodes.
pub fn read_paths(text: &str, nodes: usize) -> Result<Vec<(u32, usize, usize)>> {
    let mut it = lines(text);
    let (l, head) = it.next().ok_or_else(|| Error::parse(1, "empty paths file"))?;
    arity(l, &head, 1, "p")?;
    let p: usize = field(l, head[0], "the path count")?;
    let mut out = Vec::with_capacity(p);
    let mut last = l;
    for (l, f) in it {
        arity(l, &f, 3, "id u v")?;
        if out.len() == p {
            return Err(Error::parse(l, format!("more than {p} paths")));
        }
        out.push((field(l, f[0], "an element id")?, node(l, f[1], nodes)?, node(l, f[2], nodes)?));
        last = l;
    }
    if out.len() != p {
        return Err(Error::parse(last, format!("expected {p} paths, found {}", out.len())));
    }
    Ok(out)
}

pub fn write_paths(inst: &CptInstance) -> String {
    let mut out = format!("{}\n", inst.len());
    for (e, p) in inst.paths().iter().enumerate() {
        let _ = writeln!(out, "{} {} {}", inst.id(e), p.u + 1, p.v + 1);
    }
    out
}

pub fn write_realizer(inst: &CptInstance, r: &Realizer) -> String {
    let mut out = format!("{} {}\n", r.len(), inst.len());
    for ext in r.extensions() {
        let line: Vec<String> = ext.order().iter().map(|&e| inst.id(e).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_family(f: &PermutationFamily) -> String {
    let mut out = format!("{} {}\n", f.n(), f.len());
    for p in f.members() {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn read_family(text: &str) -> Result<PermutationFamily> {
    let mut it = lines(text);
    let (l, head) = it.next().ok_or_else(|| Error::parse(1, "empty permutation file"))?;
    arity(l, &head, 2, "n k")?;
    let n: usize = field(l, head[0], "n")?;
    let k: usize = field(l, head[1], "k")?;
    let mut members = Vec::with_capacity(k);
    let mut last = l;
    for (l, f) in it {
        if f.len() != n {
            return Err(Error::parse(l, format!("expected {n} labels, found {}", f.len())));
        }
        let perm = f.iter().map(|s| field(l, s, "a label")).collect::<Result<Vec<u32>>>()?;
        crate::permutations::Permutation::from_one_based(&perm)
            .map_err(|e| Error::parse(l, e.to_string()))?;
        members.push(perm);
        last = l;
    }
    if members.len() != k {
        return Err(Error::parse(last, format!("expected {k} permutations, found {}", members.len())));
    }
    PermutationFamily::from_one_based(n, &members)
}

pub fn write_drawings(fam: &DrawingFamily) -> String {
    fam.descriptors().iter().map(|d| format!("{d}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::build_3suitable;
    use crate::realizer::build_realizer;

    #[test]
    fn tree_files() {
        let t = read_tree("4\n1 2\n1 3\n3 4\n").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(read_tree("1\n").unwrap().len(), 1);
        let rooted = t.root_at_center();
        assert_eq!(write_tree(&rooted), "4\n1 2\n1 3\n3 4\n");
    }

    #[test]
    fn tree_errors_carry_lines() {
        assert!(matches!(read_tree("3\n1 2\n2 x\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_tree("3\n1 2\n2 3 4\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_tree("2\n1 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_tree("3\n1 2\n2 3\n1 3\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(read_tree("3\n1 2\n"), Err(Error::InvalidTree(_))));
        assert!(matches!(read_tree(""), Err(Error::Parse { .. })));
        assert!(matches!(read_tree("0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn path_files() {
        let paths = read_paths("2\n7 1 3\n9 2 2\n", 3).unwrap();
        assert_eq!(paths, vec![(7, 0, 2), (9, 1, 1)]);
        assert!(matches!(read_paths("2\n7 1 3\n", 3), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_paths("1\n7 1 4\n", 3), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_paths("1\n7 1\n", 3), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn instance_files_round_trip() {
        let inst = crate::instances::gen_random_instance(20, 15, 3).unwrap();
        let tree = read_tree(&write_tree(inst.tree())).unwrap().root_at_center();
        let elems = read_paths(&write_paths(&inst), tree.len()).unwrap();
        let back = CptInstance::new(tree, &elems).unwrap();
        assert_eq!(back.paths(), inst.paths());
        assert_eq!(back.ids(), inst.ids());
    }

    #[test]
    fn realizer_file() {
        let t = Tree::from_edges(2, &[(0, 1)]).unwrap().root_at_center();
        let inst = CptInstance::new(t, &[(4, 0, 0)]).unwrap();
        let r = build_realizer(&inst);
        assert_eq!(write_realizer(&inst, &r), "3 1\n4\n4\n4\n");
    }

    #[test]
    fn family_files() {
        let f = build_3suitable(16).unwrap();
        let text = write_family(&f);
        assert!(text.starts_with("16 6\n"));
        let back = read_family(&text).unwrap();
        assert_eq!(back.members(), f.members());
        assert!(matches!(read_family("3 1\n1 2 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_family("3 2\n1 2 3\n"), Err(Error::Parse { line: 2, .. })));
    }
}
