//! Strict partial orders over `0..n`, linear extensions, and realizers.

use crate::{Error, Result};

/// A strict order stored as a bit matrix: bit `y` of row `x` is `x ≺ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    words: usize,
    above: Vec<u64>,
}

impl Poset {
    fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Poset {
            n,
            words,
            above: vec![0; n * words],
        }
    }

    fn set(&mut self, x: usize, y: usize) {
        self.above[x * self.words + y / 64] |= 1 << (y % 64);
    }

    fn row(&self, x: usize) -> &[u64] {
        &self.above[x * self.words..(x + 1) * self.words]
    }

    /// Builds from `(x, y)` pairs meaning `x ≺ y`, checking irreflexivity,
    /// antisymmetry and transitivity.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut p = Self::empty(n);
        for (x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::InvalidArgument(format!("pair ({x}, {y}) outside 0..{n}")));
            }
            p.set(x, y);
        }
        p.check()?;
        Ok(p)
    }

    pub(crate) fn from_relation(n: usize, less: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut p = Self::empty(n);
        for x in 0..n {
            for y in 0..n {
                if less(x, y) {
                    p.set(x, y);
                }
            }
        }
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        for x in 0..self.n {
            if self.less(x, x) {
                return Err(Error::NotAPoset(format!("{x} ≺ {x}")));
            }
            for y in self.successors(x) {
                if self.less(y, x) {
                    return Err(Error::NotAPoset(format!("{x} ≺ {y} and {y} ≺ {x}")));
                }
                // everything above y must be above x
                let (rx, ry) = (self.row(x), self.row(y));
                if rx.iter().zip(ry).any(|(a, b)| b & !a != 0) {
                    return Err(Error::NotAPoset(format!("not transitive through {x} ≺ {y}")));
                }
            }
        }
        Ok(())
    }

    pub fn chain(n: usize) -> Self {
        Self::from_relation(n, |x, y| x < y).expect("a chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::empty(n)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.less(x, y) || self.less(y, x)
    }

    /// Elements strictly above `x`.
    pub fn successors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&y| self.less(x, y))
    }

    /// All pairs `(x, y)` with `x ≺ y`.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.successors(x).map(move |y| (x, y)))
    }

    /// Ordered pairs `(x, y)`, `x ≠ y`, that are incomparable.
    pub fn incomparable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| (0..self.n).filter(move |&y| !self.comparable(x, y)).map(move |y| (x, y)))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&y| (0..self.n).all(|x| !self.less(x, y))).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.successors(x).next().is_none()).collect()
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        // longest chain ending at each element, in a topological order
        let order = self.topological_order();
        let mut best = vec![1; self.n];
        for &x in &order {
            for y in self.successors(x) {
                best[y] = best[y].max(best[x] + 1);
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    fn topological_order(&self) -> Vec<usize> {
        let mut below: Vec<usize> = (0..self.n).map(|y| (0..self.n).filter(|&x| self.less(x, y)).count()).collect();
        let mut order: Vec<usize> = Vec::with_capacity(self.n);
        let mut ready: Vec<usize> = (0..self.n).rev().filter(|&x| below[x] == 0).collect();
        while let Some(x) = ready.pop() {
            order.push(x);
            for y in self.successors(x) {
                below[y] -= 1;
                if below[y] == 0 {
                    ready.push(y);
                }
            }
        }
        order
    }
}

/// A total order over element indices, first = lowest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearExtension {
    order: Vec<usize>,
}

impl LinearExtension {
    pub fn new(order: Vec<usize>) -> Self {
        LinearExtension { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Rank of every element, or `None` if this is not a permutation of `0..n`.
    pub fn positions(&self, n: usize) -> Option<Vec<usize>> {
        if self.order.len() != n {
            return None;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in self.order.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return None;
            }
            pos[x] = i;
        }
        Some(pos)
    }

    pub fn is_extension_of(&self, poset: &Poset) -> bool {
        match self.positions(poset.len()) {
            Some(pos) => poset.relations().all(|(x, y)| pos[x] < pos[y]),
            None => false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Realizer {
    extensions: Vec<LinearExtension>,
}

impl Realizer {
    pub fn new(extensions: Vec<LinearExtension>) -> Self {
        Realizer { extensions }
    }

    pub fn extensions(&self) -> &[LinearExtension] {
        &self.extensions
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    /// The same realizer without member `i`.
    pub fn without(&self, i: usize) -> Realizer {
        let mut extensions = self.extensions.clone();
        extensions.remove(i);
        Realizer { extensions }
    }
}

/// True iff every member is a linear extension of `poset` and every
/// incomparable ordered pair `(x, y)` is reversed (`y` before `x`) somewhere.
/// An empty family realizes nothing but the empty poset.
pub fn verify_realizer(poset: &Poset, realizer: &Realizer) -> Result<bool> {
    let n = poset.len();
    if realizer.is_empty() {
        return Ok(n == 0);
    }
    let mut pos = Vec::with_capacity(realizer.len());
    for (i, ext) in realizer.extensions.iter().enumerate() {
        let p = ext.positions(n).ok_or_else(|| {
            Error::InvalidArgument(format!("extension {i} is not an ordering of the {n} poset elements"))
        })?;
        if poset.relations().any(|(x, y)| p[x] > p[y]) {
            return Ok(false);
        }
        pos.push(p);
    }
    Ok(poset
        .incomparable_pairs()
        .all(|(x, y)| pos.iter().any(|p| p[y] < p[x])))
}
