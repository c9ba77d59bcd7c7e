use std::fmt;

use super::{OrderedTree, TreeError};

/// A leaf, addressed by its child-index path from the root. Leaves of one tree
/// compare lexicographically, leftmost least.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Leaf(Vec<usize>);

impl Leaf {
    pub fn new(path: Vec<usize>) -> Self {
        Leaf(path)
    }

    pub fn path(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Leaf {
    fn from(path: Vec<usize>) -> Self {
        Leaf(path)
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A value extended with a least element `Bottom` and a greatest `Top`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<T> {
    Bottom,
    Finite(T),
    Top,
}

impl<T> Extended<T> {
    pub fn finite(&self) -> Option<&T> {
        match self {
            Extended::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Extended::Top)
    }
}

/// Least leaf of `t` whose length-`k` path prefix is at least (or, when
/// `strict`, greater than) the length-`k` prefix of `current`.
///
/// `Bottom` lies below every leaf; an empty prefix equals every other empty
/// prefix, so `k == 0` yields the least leaf, or `Top` when strict. Returns
/// `Top` when no leaf qualifies.
pub fn min_leaf_geq(
    t: &OrderedTree,
    current: &Extended<Leaf>,
    k: usize,
    strict: bool,
) -> Result<Extended<Leaf>, TreeError> {
    if k > t.height() {
        return Err(TreeError::PrefixTooLong {
            k,
            height: t.height(),
        });
    }
    if t.is_empty() {
        return Ok(Extended::Top);
    }
    let leaf_of = |node| Extended::Finite(Leaf(t.path_of(t.leftmost_at_depth(node, t.height()))));
    let node = match current {
        Extended::Top => return Ok(Extended::Top),
        Extended::Bottom => {
            return Ok(if k == 0 && strict {
                Extended::Top
            } else {
                leaf_of(t.root())
            });
        }
        Extended::Finite(leaf) => t
            .node_at(leaf.path())
            .filter(|&n| t.is_leaf(n))
            .ok_or_else(|| TreeError::InvalidLeaf(leaf.0.clone()))?,
    };
    let prefix = t.truncate(node, k);
    if !strict {
        return Ok(leaf_of(prefix));
    }
    Ok(match t.after_subtree(prefix) {
        Some(next) => leaf_of(next),
        None => Extended::Top,
    })
}
