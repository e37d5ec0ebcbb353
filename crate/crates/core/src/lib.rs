//! Realizers for containment orders of paths in trees (CPT posets).
//!
//! Given a host tree and a collection of paths in it, the poset whose order is
//! strict path containment has a realizer of at most
//! `2⌈log₂log₂Δ⌉ + 2⌈log₂r⌉ + 3` linear extensions, where `Δ` is the maximum
//! degree and `r` the radius of the tree. This crate builds that realizer:
//!
//! * [`permutations`] constructs weakly 3-suitable and 3-suitable families of
//!   permutations of `[n]` and checks them by brute force;
//! * [`tree`] holds rooted host trees, paths, and the preorder / level-wise
//!   traversals;
//! * [`drawings`] builds a 3-suitable family of child orderings ("drawings")
//!   of a rooted tree;
//! * [`realizer`] turns traversals into linear extensions and assembles and
//!   verifies the realizer;
//! * [`oracle`] computes exact dimension of tiny posets;
//! * [`instances`] generates the `P(1,2;n)` tightness instances and seeded
//!   random instances;
//! * [`io`] reads and writes the flat file formats used by the CLI.

pub mod cli;
pub mod drawings;
pub mod error;
pub mod instances;
pub mod io;
pub mod oracle;
pub mod permutations;
pub mod poset;
pub mod realizer;
pub mod tree;

pub use error::{Error, Result};

/// `⌈log₂ n⌉` for `n ≥ 1`; 0 for `n ≤ 1`.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// `⌈log₂log₂ n⌉`, taken as 0 for `n ≤ 2`.
///
/// This is the smallest `k` with `n ≤ 2^(2^k)`, computed without floating
/// point: `n ≤ 2^(2^k)` iff the bit length of `n - 1` is at most `2^k`.
pub fn ceil_log2_log2(n: usize) -> u32 {
    if n <= 2 {
        return 0;
    }
    let bits = (usize::BITS - (n - 1).leading_zeros()) as usize;
    ceil_log2(bits)
}

/// `2⌈log₂log₂Δ⌉ + 2⌈log₂r⌉ + 3`.
pub fn cpt_bound(max_degree: usize, radius: usize) -> usize {
    2 * ceil_log2_log2(max_degree) as usize + 2 * ceil_log2(radius) as usize + 3
}

#[cfg(test)]
mod tests {
    use super::*;

    fn float_ceil_log2_log2(n: usize) -> u32 {
        if n <= 2 {
            return 0;
        }
        let v = (n as f64).log2().log2();
        let c = v.ceil();
        // guard against 1-ulp noise at exact powers
        if (v - v.round()).abs() < 1e-12 {
            v.round() as u32
        } else {
            c as u32
        }
    }

    #[test]
    fn log_helpers_match_float() {
        for n in 1..5000 {
            assert_eq!(ceil_log2_log2(n), float_ceil_log2_log2(n), "n={n}");
            let f = if n <= 1 { 0 } else { (n as f64).log2().ceil() as u32 };
            assert_eq!(ceil_log2(n), f, "n={n}");
        }
        assert_eq!(ceil_log2_log2(65536), 4);
        assert_eq!(ceil_log2_log2(65537), 5);
        assert_eq!(ceil_log2_log2(5), 2);
    }

    #[test]
    fn bound_values() {
        assert_eq!(cpt_bound(5, 1), 7);
        assert_eq!(cpt_bound(2, 4), 7);
        assert_eq!(cpt_bound(2, 2), 5);
    }
}
