//! Exact dimension of tiny posets by backtracking.
//!
//! For a fixed `k`, every ordered incomparable pair `(x, y)` must be reversed
//! (`y` before `x`) in one of `k` extensions. The search assigns pairs to
//! extensions one at a time, keeping each extension's forced relations
//! transitively closed in a bitset; an assignment is rejected when the
//! extension already forces `x` before `y`. The most constrained pair is
//! branched on first, and an extension index is only opened after all lower
//! ones are in use.

use crate::poset::{LinearExtension, Poset, Realizer};
use crate::{Error, Result};

/// Largest poset [`exact_dimension`] accepts.
pub const MAX_ELEMENTS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    /// `None` when the dimension exceeds the search limit.
    pub value: Option<usize>,
    pub witness: Option<Realizer>,
}

pub fn exact_dimension(poset: &Poset, kmax: usize) -> Result<DimensionResult> {
    let n = poset.len();
    if n > MAX_ELEMENTS {
        return Err(Error::Guard {
            what: "poset size for exact dimension",
            got: n,
            limit: MAX_ELEMENTS,
        });
    }
    let base: Vec<u16> = (0..n)
        .map(|x| poset.successors(x).fold(0u16, |acc, y| acc | 1 << y))
        .collect();
    let pairs: Vec<(usize, usize)> = poset.incomparable_pairs().collect();
    for k in 1..=kmax {
        let mut ext = vec![base.clone(); k];
        if search(&pairs, &mut ext, 0) {
            let witness = Realizer::new(ext.iter().map(|lt| linearize(lt)).collect());
            return Ok(DimensionResult {
                value: Some(k),
                witness: Some(witness),
            });
        }
    }
    Ok(DimensionResult {
        value: None,
        witness: None,
    })
}

/// `ext[j][a]` is the set of elements forced above `a` in extension `j`.
fn search(pairs: &[(usize, usize)], ext: &mut Vec<Vec<u16>>, used: usize) -> bool {
    let k = ext.len();
    let open = (used + 1).min(k);
    // most constrained unsatisfied pair
    let mut pick: Option<((usize, usize), usize)> = None;
    for &(x, y) in pairs {
        if ext.iter().any(|lt| lt[y] >> x & 1 == 1) {
            continue;
        }
        let options = (0..open).filter(|&j| ext[j][x] >> y & 1 == 0).count();
        if options == 0 {
            return false;
        }
        if pick.is_none_or(|(_, best)| options < best) {
            pick = Some(((x, y), options));
        }
    }
    let Some(((x, y), _)) = pick else {
        return true;
    };
    for j in 0..open {
        if ext[j][x] >> y & 1 == 1 {
            continue;
        }
        let saved = ext[j].clone();
        let raise = ext[j][x] | 1 << x;
        for a in 0..saved.len() {
            if a == y || saved[a] >> y & 1 == 1 {
                ext[j][a] |= raise;
            }
        }
        if search(pairs, ext, used.max(j + 1)) {
            return true;
        }
        ext[j] = saved;
    }
    false
}

/// A transitively closed strict order sorted by number of predecessors.
fn linearize(lt: &[u16]) -> LinearExtension {
    let n = lt.len();
    let below = |y: usize| (0..n).filter(|&a| lt[a] >> y & 1 == 1).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&y| (below(y), y));
    LinearExtension::new(order)
}

/// `log₂log₂n`; `dim P(1,2;n)` strictly exceeds it.
pub fn p12_lower_bound(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n}, need n >= 2")));
    }
    Ok((n as f64).log2().log2())
}
