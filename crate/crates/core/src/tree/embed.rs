//! Order-preserving embeddings between ordered trees and exhaustive
//! universality checks.

use super::{enumerate::trees_of_width, NodeId, OrderedTree, TreeError};

/// Whether `small` embeds into `large`: an injective map sending children to
/// children and preserving every sibling order.
///
/// A node `u` embeds at `v` iff `u`'s children can be assigned, in order and
/// injectively, to `v`'s children so that each child embeds at its target.
/// This is decided by a subsequence DP per node pair, memoized over pairs.
pub fn embeds(small: &OrderedTree, large: &OrderedTree) -> Result<bool, TreeError> {
    if small.height() != large.height() {
        return Err(TreeError::HeightMismatch(small.height(), large.height()));
    }
    if small.is_empty() {
        return Ok(true);
    }
    if large.is_empty() {
        return Ok(false);
    }
    let mut memo = Memo {
        small,
        large,
        cache: vec![None; small.node_count() * large.node_count()],
    };
    Ok(memo.embeds_at(small.root(), large.root()))
}

struct Memo<'a> {
    small: &'a OrderedTree,
    large: &'a OrderedTree,
    cache: Vec<Option<bool>>,
}

impl Memo<'_> {
    fn embeds_at(&mut self, u: NodeId, v: NodeId) -> bool {
        let slot = u.index() * self.large.node_count() + v.index();
        if let Some(known) = self.cache[slot] {
            return known;
        }
        let us = self.small.children(u);
        let vs = self.large.children(v);
        let result = if us.is_empty() {
            true
        } else if us.len() > vs.len() {
            false
        } else {
            // fits[i]: the first i children of u embed into the children of v
            // scanned so far
            let mut fits = vec![false; us.len() + 1];
            fits[0] = true;
            for &vc in vs {
                for i in (1..=us.len()).rev() {
                    if !fits[i] && fits[i - 1] && self.embeds_at(us[i - 1], vc) {
                        fits[i] = true;
                    }
                }
                if fits[us.len()] {
                    break;
                }
            }
            fits[us.len()]
        };
        self.cache[slot] = Some(result);
        result
    }
}

/// Outcome of an exhaustive universality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalityCheck {
    /// Trees tested, in enumeration order, up to and including any failure.
    pub checked: usize,
    pub counterexample: Option<OrderedTree>,
}

impl UniversalityCheck {
    pub fn is_universal(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Tests every tree of `t`'s height and width at most `n` against `t`,
/// stopping at the first one that does not embed.
pub fn check_universal(t: &OrderedTree, n: usize) -> UniversalityCheck {
    let mut checked = 0;
    for w in 1..=n {
        for s in trees_of_width(t.height(), w) {
            checked += 1;
            if !embeds(&s, t).expect("same height") {
                return UniversalityCheck {
                    checked,
                    counterexample: Some(s),
                };
            }
        }
    }
    UniversalityCheck {
        checked,
        counterexample: None,
    }
}

/// Whether every ordered tree of `t`'s height and width at most `n` embeds
/// into `t`. Exhaustive; only practical for small `n` and heights.
pub fn verify_universal(t: &OrderedTree, n: usize) -> bool {
    check_universal(t, n).is_universal()
}
