//! Families of drawings of a rooted tree.
//!
//! A drawing only matters through the left-to-right order of each node's
//! children, so a drawing is stored as a [`DrawingDescriptor`]: a base
//! permutation of canonical child indices, an optional level mask, and a
//! mirror flag. Nothing is materialized per node.
//!
//! The weakly 3-suitable family for radius `r` consists of
//!
//! * one *uniform* drawing per member `π` of a weakly 3-suitable permutation
//!   family on `[b]` (`b` = branching factor): every node orders its children
//!   by `π`;
//! * one *masked* drawing per `t = 1..⌈log₂r⌉`: children are ordered by `π₁`,
//!   except at nodes whose level has bit `t-1` set, where `reverse(π₁)` is used.
//!
//! The masked drawings are what the radius-doubling recursion produces once
//! unrolled: the drawing that mirrors every lower subtree when going from
//! radius `2^(t-1)` to `2^t` reverses exactly the levels `ℓ` with
//! `ℓ mod 2^t ≥ 2^(t-1)` after being lifted to the full radius. Adding the
//! mirror image of every drawing gives a 3-suitable family.

use std::fmt;

use crate::permutations::{build_weakly_3suitable, extremes, FamilyKind, Permutation};
use crate::tree::{preorder, RootedTree};
use crate::{ceil_log2, Error, Result};

/// Largest tree [`verify_drawing_family`] will enumerate.
pub const VERIFY_NODE_LIMIT: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawingDescriptor {
    base: Permutation,
    base_rank: Vec<u32>,
    mask_bit: Option<u32>,
    mirrored: bool,
}

impl DrawingDescriptor {
    pub fn uniform(base: Permutation) -> Self {
        Self::with(base, None, false)
    }

    /// Reverses `base` at nodes whose level has bit `t - 1` set; `t ≥ 1`.
    pub fn masked(base: Permutation, t: u32) -> Self {
        assert!(t >= 1, "mask bits are 1-based");
        Self::with(base, Some(t), false)
    }

    pub fn uniform_identity(branching: usize) -> Self {
        Self::uniform(Permutation::identity(branching))
    }

    fn with(base: Permutation, mask_bit: Option<u32>, mirrored: bool) -> Self {
        DrawingDescriptor {
            base_rank: base.positions(),
            base,
            mask_bit,
            mirrored,
        }
    }

    pub fn mirror(&self) -> Self {
        DrawingDescriptor {
            mirrored: !self.mirrored,
            ..self.clone()
        }
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn mask_bit(&self) -> Option<u32> {
        self.mask_bit
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    fn reverses_level(&self, level: usize) -> bool {
        self.mask_bit.is_some_and(|t| {
            let bit = t - 1;
            bit < usize::BITS && (level >> bit) & 1 == 1
        })
    }

    /// Children of `v` in this drawing's left-to-right order.
    pub fn child_order(&self, t: &RootedTree, v: usize) -> Vec<usize> {
        let children = t.children(v);
        debug_assert!(children.len() <= self.base.len(), "descriptor too narrow for node");
        let mut idx: Vec<usize> = (0..children.len()).collect();
        // indices beyond the base keep canonical order after the ranked ones
        idx.sort_by_key(|&i| self.base_rank.get(i).map_or(i, |&r| r as usize));
        if self.reverses_level(t.level(v)) != self.mirrored {
            idx.reverse();
        }
        idx.into_iter().map(|i| children[i]).collect()
    }
}

/// `uniform <perm>` or `mask <t> <perm>`, with a ` mirrored` suffix.
impl fmt::Display for DrawingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mask_bit {
            None => write!(f, "uniform {}", self.base)?,
            Some(t) => write!(f, "mask {t} {}", self.base)?,
        }
        if self.mirrored {
            f.write_str(" mirrored")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct DrawingFamily {
    branching: usize,
    radius: usize,
    descriptors: Vec<DrawingDescriptor>,
    kind: FamilyKind,
    degenerate: bool,
}

impl DrawingFamily {
    pub fn new(branching: usize, radius: usize, descriptors: Vec<DrawingDescriptor>) -> Self {
        DrawingFamily {
            branching,
            radius,
            descriptors,
            kind: FamilyKind::Unverified,
            degenerate: false,
        }
    }

    pub fn descriptors(&self) -> &[DrawingDescriptor] {
        &self.descriptors
    }

    pub fn len(&self) -> usize {
        self.descriptors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.descriptors.is_empty()
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Width of the base permutations, `max(branching factor, 2)`.
    pub fn branching(&self) -> usize {
        self.branching
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Set for single-node hosts, where the family is the trivial pair.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// Weakly 3-suitable family: `⌈log₂log₂b⌉ + 1` uniform drawings plus
/// `⌈log₂r⌉` masked ones.
pub fn build_weak_drawing_family(t: &RootedTree) -> DrawingFamily {
    let branching = t.max_children().max(2);
    let radius = t.radius();
    if radius == 0 {
        return DrawingFamily {
            branching,
            radius,
            descriptors: vec![DrawingDescriptor::uniform_identity(branching)],
            kind: FamilyKind::WeaklyThreeSuitable,
            degenerate: true,
        };
    }
    let perms = build_weakly_3suitable(branching).expect("branching is at least 2");
    let first = perms.members()[0].clone();
    let mut descriptors: Vec<DrawingDescriptor> =
        perms.members().iter().cloned().map(DrawingDescriptor::uniform).collect();
    descriptors.extend((1..=ceil_log2(radius)).map(|bit| DrawingDescriptor::masked(first.clone(), bit)));
    DrawingFamily {
        branching,
        radius,
        descriptors,
        kind: FamilyKind::WeaklyThreeSuitable,
        degenerate: false,
    }
}

/// 3-suitable family of `2(⌈log₂log₂b⌉ + 1 + ⌈log₂r⌉)` drawings: the weak
/// family followed by the mirror image of each member.
pub fn build_drawing_family(t: &RootedTree) -> DrawingFamily {
    let mut fam = build_weak_drawing_family(t);
    let mirrors: Vec<_> = fam.descriptors.iter().map(DrawingDescriptor::mirror).collect();
    fam.descriptors.extend(mirrors);
    fam.kind = FamilyKind::ThreeSuitable;
    fam
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suitability {
    /// Distinguished vertex first or last.
    Weak,
    /// Distinguished vertex last.
    Strong,
}

/// Brute force over every pairwise-incomparable triple of `t`.
pub fn verify_drawing_family(t: &RootedTree, fam: &DrawingFamily, mode: Suitability) -> Result<bool> {
    let n = t.len();
    if n > VERIFY_NODE_LIMIT {
        return Err(Error::Guard {
            what: "tree size for drawing verification",
            got: n,
            limit: VERIFY_NODE_LIMIT,
        });
    }
    let pos: Vec<Vec<u32>> = fam
        .descriptors
        .iter()
        .map(|d| {
            let l = preorder(t, d);
            (0..n).map(|v| l.position(v) as u32).collect()
        })
        .collect();
    let comparable = |a: usize, b: usize| t.is_ancestor(a, b) || t.is_ancestor(b, a);
    for a in 0..n {
        for b in a + 1..n {
            if comparable(a, b) {
                continue;
            }
            for c in b + 1..n {
                if comparable(a, c) || comparable(b, c) {
                    continue;
                }
                let mut covered = 0u8;
                for p in &pos {
                    let (first, last) = extremes([p[a], p[b], p[c]]);
                    covered |= 1 << last;
                    if mode == Suitability::Weak {
                        covered |= 1 << first;
                    }
                    if covered == 0b111 {
                        break;
                    }
                }
                if covered != 0b111 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
