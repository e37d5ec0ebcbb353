//! Weakly 3-suitable and 3-suitable families of permutations of `[n]`.
//!
//! A family is *3-suitable* if for every 3-subset and every distinguished
//! element of it, some member places the distinguished element after the other
//! two. It is *weakly* 3-suitable if "after both or before both" suffices.
//!
//! The weak family is built by the block recursion: for `n ≤ 2^(2^k)` split
//! `[2^(2^k)]` into `2^(2^(k-1))` blocks of `2^(2^(k-1))` elements, take a weak
//! family `L_1..L_k` on one block's worth of objects, and let `R_i` order the
//! blocks by `L_i` and each block internally by `L_i`. `R_{k+1}` is `R_1` with
//! every block reversed internally. Padding elements beyond `n` are never
//! materialized; they are skipped while emitting, which yields exactly the
//! padded permutation with the dummies deleted.
//!
//! Elements are 0-based (`0..n`) in memory. The text format is 1-based.

use std::fmt;

use crate::{ceil_log2_log2, Error, Result};

/// An ordering of `0..n`, listed from first (lowest) to last (highest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    order: Vec<u32>,
}

impl Permutation {
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &e in &order {
            let e = e as usize;
            if e >= n || seen[e] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of {n} elements: {order:?}"
                )));
            }
            seen[e] = true;
        }
        Ok(Permutation { order })
    }

    /// Builds from 1-based element labels.
    pub fn from_one_based(order: &[u32]) -> Result<Self> {
        if order.contains(&0) {
            return Err(Error::InvalidArgument("element 0 in a 1-based permutation".into()));
        }
        Self::new(order.iter().map(|&e| e - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            order: (0..n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn reversed(&self) -> Self {
        Permutation {
            order: self.order.iter().rev().copied().collect(),
        }
    }

    /// Element-to-rank inverse.
    pub fn positions(&self) -> Vec<u32> {
        let mut pos = vec![0; self.order.len()];
        for (rank, &e) in self.order.iter().enumerate() {
            pos[e as usize] = rank as u32;
        }
        pos
    }
}

/// Writes the 1-based listing, space separated.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", e + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    WeaklyThreeSuitable,
    ThreeSuitable,
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationFamily {
    n: usize,
    members: Vec<Permutation>,
    kind: FamilyKind,
}

impl PermutationFamily {
    pub fn new(n: usize, members: Vec<Permutation>, kind: FamilyKind) -> Result<Self> {
        if let Some(bad) = members.iter().find(|p| p.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "member of length {} in a family over {n} elements",
                bad.len()
            )));
        }
        Ok(PermutationFamily { n, members, kind })
    }

    /// An unverified family from 1-based listings.
    pub fn from_one_based(n: usize, members: &[Vec<u32>]) -> Result<Self> {
        let members = members
            .iter()
            .map(|m| Permutation::from_one_based(m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, members, FamilyKind::Unverified)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Builds a weakly 3-suitable family of `⌈log₂log₂n⌉ + 1` permutations of
/// `[n]` in `O(n log log n)` time.
pub fn build_weakly_3suitable(n: usize) -> Result<PermutationFamily> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > u32::MAX as usize {
        return Err(Error::InvalidArgument(format!("n = {n} does not fit in u32")));
    }
    let members = weak_orders(n).into_iter().map(|order| Permutation { order }).collect();
    Ok(PermutationFamily {
        n,
        members,
        kind: FamilyKind::WeaklyThreeSuitable,
    })
}

fn weak_orders(n: usize) -> Vec<Vec<u32>> {
    let k = ceil_log2_log2(n);
    if k == 0 {
        return vec![(0..n as u32).collect()];
    }
    // One block holds `side` elements and there are `side` blocks.
    let side = 1usize << (1u32 << (k - 1));
    let sub = weak_orders(side);
    debug_assert_eq!(sub.len(), k as usize);

    let mut out = Vec::with_capacity(sub.len() + 1);
    for l in &sub {
        out.push(blocked_order(n, side, l, false));
    }
    out.push(blocked_order(n, side, &sub[0], true));
    out
}

/// Orders blocks by `l` and elements within each block by `l` (reversed when
/// `reverse_inside`), skipping the padding elements `>= n`.
fn blocked_order(n: usize, side: usize, l: &[u32], reverse_inside: bool) -> Vec<u32> {
    let mut order = Vec::with_capacity(n);
    for &block in l {
        let base = block as usize * side;
        if base >= n {
            continue;
        }
        let mut emit = |off: u32| {
            let e = base + off as usize;
            if e < n {
                order.push(e as u32);
            }
        };
        if reverse_inside {
            l.iter().rev().for_each(|&o| emit(o));
        } else {
            l.iter().for_each(|&o| emit(o));
        }
    }
    debug_assert_eq!(order.len(), n);
    order
}

/// Appends the reversal of every member. A weakly 3-suitable input yields a
/// 3-suitable family.
pub fn close_under_reversal(f: &PermutationFamily) -> PermutationFamily {
    let mut members = f.members.clone();
    members.extend(f.members.iter().map(Permutation::reversed));
    let kind = match f.kind {
        FamilyKind::WeaklyThreeSuitable | FamilyKind::ThreeSuitable => FamilyKind::ThreeSuitable,
        FamilyKind::Unverified => FamilyKind::Unverified,
    };
    PermutationFamily {
        n: f.n,
        members,
        kind,
    }
}

/// Builds a 3-suitable family of `2⌈log₂log₂n⌉ + 2` permutations of `[n]`.
pub fn build_3suitable(n: usize) -> Result<PermutationFamily> {
    Ok(close_under_reversal(&build_weakly_3suitable(n)?))
}

pub fn is_weakly_3suitable(f: &PermutationFamily) -> bool {
    check_triples(f, false)
}

pub fn is_3suitable(f: &PermutationFamily) -> bool {
    check_triples(f, true)
}

/// Brute force over all 3-subsets, `O(|f|·n³)`.
fn check_triples(f: &PermutationFamily, strong: bool) -> bool {
    let pos: Vec<Vec<u32>> = f.members.iter().map(Permutation::positions).collect();
    let n = f.n;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut covered = 0u8;
                for p in &pos {
                    let (first, last) = extremes([p[a], p[b], p[c]]);
                    covered |= 1 << last;
                    if !strong {
                        covered |= 1 << first;
                    }
                    if covered == 0b111 {
                        break;
                    }
                }
                if covered != 0b111 {
                    return false;
                }
            }
        }
    }
    true
}

/// Indices (into the triple) of the smallest and largest value.
pub(crate) fn extremes(v: [u32; 3]) -> (usize, usize) {
    let mut first = 0;
    let mut last = 0;
    for i in 1..3 {
        if v[i] < v[first] {
            first = i;
        }
        if v[i] > v[last] {
            last = i;
        }
    }
    (first, last)
}
