//! Ordered trees with uniform leaf depth, and the recursive universal-tree
//! construction.
//!
//! Nodes live in an arena in preorder, so comparing two [`NodeId`]s compares
//! the nodes lexicographically by child-index path, with a proper prefix
//! ordered before its extensions. The progress-measure solver relies on this.

mod embed;
mod enumerate;
mod navigate;

pub use embed::{check_universal, embeds, verify_universal, UniversalityCheck};
pub use enumerate::{enumerate_trees, trees_of_width};
pub use navigate::{min_leaf_geq, Extended, Leaf};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("trees have different heights ({0} and {1})")]
    HeightMismatch(usize, usize),
    #[error("a node needs at least one child")]
    NoChildren,
    #[error("cannot graft an empty tree")]
    EmptyChild,
    #[error("{0:?} is not a leaf path of this tree")]
    InvalidLeaf(Vec<usize>),
    #[error("prefix length {k} exceeds tree height {height}")]
    PrefixTooLong { k: usize, height: usize },
    #[error("malformed tree text at byte {0}")]
    Syntax(usize),
}

/// Index of a node in preorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

const NO_PARENT: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Node {
    parent: u32,
    depth: u32,
    // one past the last preorder index of this subtree
    end: u32,
    children: Vec<NodeId>,
}

/// Rooted tree of height `h` whose leaves all sit at depth `h` and whose
/// children are ordered left to right. The empty tree has no nodes at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedTree {
    nodes: Vec<Node>,
    height: usize,
    leaves: usize,
}

#[derive(Default)]
struct Builder {
    nodes: Vec<Node>,
}

impl Builder {
    fn open(&mut self, parent: Option<NodeId>, depth: usize) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(Node {
            parent: parent.map_or(NO_PARENT, |p| p.0),
            depth: depth as u32,
            end: 0,
            children: Vec::new(),
        });
        if let Some(p) = parent {
            self.nodes[p.index()].children.push(id);
        }
        id
    }

    fn close(&mut self, id: NodeId) {
        self.nodes[id.index()].end = self.nodes.len() as u32;
    }

    fn graft(&mut self, src: &OrderedTree, node: NodeId, parent: Option<NodeId>, depth: usize) {
        let id = self.open(parent, depth);
        for &c in src.children(node) {
            self.graft(src, c, Some(id), depth + 1);
        }
        self.close(id);
    }

    fn finish(self, height: usize) -> OrderedTree {
        let leaves = self
            .nodes
            .iter()
            .filter(|n| n.depth as usize == height)
            .count();
        OrderedTree {
            nodes: self.nodes,
            height,
            leaves,
        }
    }
}

impl OrderedTree {
    pub fn empty(height: usize) -> Self {
        OrderedTree {
            nodes: Vec::new(),
            height,
            leaves: 0,
        }
    }

    /// The single-node tree of height 0.
    pub fn leaf() -> Self {
        let mut b = Builder::default();
        let root = b.open(None, 0);
        b.close(root);
        b.finish(0)
    }

    /// A root over the given subtrees, which must be nonempty and of equal
    /// height.
    pub fn node(children: &[OrderedTree]) -> Result<Self, TreeError> {
        let first = children.first().ok_or(TreeError::NoChildren)?;
        let h = first.height;
        for c in children {
            if c.height != h {
                return Err(TreeError::HeightMismatch(h, c.height));
            }
            if c.is_empty() {
                return Err(TreeError::EmptyChild);
            }
        }
        let mut b = Builder::default();
        let root = b.open(None, 0);
        for c in children {
            b.graft(c, c.root(), Some(root), 1);
        }
        b.close(root);
        Ok(b.finish(h + 1))
    }

    /// A single root-to-leaf path of the given height.
    pub fn path(height: usize) -> Self {
        Self::complete(1, height)
    }

    /// Every internal node has exactly `arity` children.
    pub fn complete(arity: usize, height: usize) -> Self {
        fn go(b: &mut Builder, parent: Option<NodeId>, depth: usize, arity: usize, height: usize) {
            let id = b.open(parent, depth);
            if depth < height {
                for _ in 0..arity {
                    go(b, Some(id), depth + 1, arity, height);
                }
            }
            b.close(id);
        }
        if arity == 0 && height > 0 {
            return Self::empty(height);
        }
        let mut b = Builder::default();
        go(&mut b, None, 0, arity, height);
        b.finish(height)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Width: the number of leaves.
    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// # Panics
    ///
    /// On the empty tree.
    pub fn root(&self) -> NodeId {
        assert!(!self.is_empty(), "empty tree has no root");
        NodeId(0)
    }

    pub fn children(&self, node: NodeId) -> &[NodeId] {
        &self.nodes[node.index()].children
    }

    pub fn parent(&self, node: NodeId) -> Option<NodeId> {
        match self.nodes[node.index()].parent {
            NO_PARENT => None,
            p => Some(NodeId(p)),
        }
    }

    pub fn depth(&self, node: NodeId) -> usize {
        self.nodes[node.index()].depth as usize
    }

    pub fn is_leaf(&self, node: NodeId) -> bool {
        self.depth(node) == self.height
    }

    /// Ancestor of `node` at depth `k`, or `node` itself when it is no deeper
    /// than `k`.
    pub fn truncate(&self, mut node: NodeId, k: usize) -> NodeId {
        while self.depth(node) > k {
            node = self.parent(node).expect("non-root node has a parent");
        }
        node
    }

    /// The first node after `node`'s subtree in preorder: the least node that
    /// is greater than `node` without extending it.
    pub fn after_subtree(&self, node: NodeId) -> Option<NodeId> {
        let end = self.nodes[node.index()].end;
        ((end as usize) < self.nodes.len()).then_some(NodeId(end))
    }

    /// Follows leftmost children from `node` down to depth `depth` (or stops
    /// at `node` if it is already that deep).
    pub fn leftmost_at_depth(&self, mut node: NodeId, depth: usize) -> NodeId {
        while self.depth(node) < depth {
            node = self.children(node)[0];
        }
        node
    }

    /// Child-index path from the root to `node`.
    pub fn path_of(&self, mut node: NodeId) -> Vec<usize> {
        let mut path = Vec::with_capacity(self.depth(node));
        while let Some(p) = self.parent(node) {
            let i = self
                .children(p)
                .iter()
                .position(|&c| c == node)
                .expect("child of parent");
            path.push(i);
            node = p;
        }
        path.reverse();
        path
    }

    /// Node reached by following `path` from the root.
    pub fn node_at(&self, path: &[usize]) -> Option<NodeId> {
        if self.is_empty() {
            return None;
        }
        let mut node = self.root();
        for &i in path {
            node = *self.children(node).get(i)?;
        }
        Some(node)
    }

    /// All nodes in preorder.
    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len() as u32).map(NodeId)
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> impl Iterator<Item = Leaf> + '_ {
        self.nodes()
            .filter(|&n| self.is_leaf(n))
            .map(|n| Leaf::new(self.path_of(n)))
    }

    /// Copy of the subtree rooted at `node`.
    pub fn subtree(&self, node: NodeId) -> OrderedTree {
        let mut b = Builder::default();
        b.graft(self, node, None, 0);
        b.finish(self.height - self.depth(node))
    }
}

/// Free-function form of [`OrderedTree::leaf_count`].
pub fn leaf_count(t: &OrderedTree) -> usize {
    t.leaf_count()
}

/// The `n`-universal tree of height `h` with exactly `f(n, h)` leaves.
///
/// For `n, h >= 1` the root's children are, left to right: the root's
/// children of `construct(n / 2, h)`, one child carrying
/// `construct(n, h - 1)`, then the root's children of
/// `construct(n - 1 - n / 2, h)`. `construct(0, h)` is empty and
/// `construct(n, 0)` is a single node.
pub fn construct(n: usize, h: usize) -> OrderedTree {
    fn root_children(b: &mut Builder, n: usize, h: usize, parent: NodeId, depth: usize) {
        if n == 0 {
            return;
        }
        root_children(b, n / 2, h, parent, depth);
        subtree(b, n, h - 1, Some(parent), depth + 1);
        root_children(b, n - 1 - n / 2, h, parent, depth);
    }

    fn subtree(b: &mut Builder, n: usize, h: usize, parent: Option<NodeId>, depth: usize) {
        let id = b.open(parent, depth);
        if h > 0 {
            root_children(b, n, h, id, depth);
        }
        b.close(id);
    }

    if n == 0 {
        return OrderedTree::empty(h);
    }
    let mut b = Builder::default();
    subtree(&mut b, n, h, None, 0);
    b.finish(h)
}

impl fmt::Display for OrderedTree {
    /// Nested parentheses with `.` for a leaf, e.g. `((.)(...)(.))`. The
    /// empty tree prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &OrderedTree, n: NodeId, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if t.is_leaf(n) {
                return f.write_str(".");
            }
            f.write_str("(")?;
            for &c in t.children(n) {
                go(t, c, f)?;
            }
            f.write_str(")")
        }
        if self.is_empty() {
            return f.write_str("-");
        }
        go(self, self.root(), f)
    }
}

impl FromStr for OrderedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn parse(bytes: &[u8], pos: &mut usize) -> Result<OrderedTree, TreeError> {
            match bytes.get(*pos) {
                Some(b'.') => {
                    *pos += 1;
                    Ok(OrderedTree::leaf())
                }
                Some(b'(') => {
                    let open = *pos;
                    *pos += 1;
                    let mut children = Vec::new();
                    while bytes.get(*pos) != Some(&b')') {
                        if *pos >= bytes.len() {
                            return Err(TreeError::Syntax(*pos));
                        }
                        children.push(parse(bytes, pos)?);
                    }
                    *pos += 1;
                    OrderedTree::node(&children).map_err(|e| match e {
                        TreeError::NoChildren => TreeError::Syntax(open),
                        other => other,
                    })
                }
                _ => Err(TreeError::Syntax(*pos)),
            }
        }
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let t = parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(TreeError::Syntax(pos));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root_arities(t: &OrderedTree) -> Vec<usize> {
        t.children(t.root())
            .iter()
            .map(|&c| t.children(c).len())
            .collect()
    }

    #[test]
    fn small_constructions() {
        let t = construct(3, 1);
        assert_eq!(t.children(t.root()).len(), 3);
        assert_eq!(t.leaf_count(), 3);

        let t = construct(3, 2);
        assert_eq!(root_arities(&t), vec![1, 3, 1]);
        assert_eq!(t.leaf_count(), 5);
        assert_eq!(t.to_string(), "((.)(...)(.))");

        for h in 0..8 {
            let t = construct(1, h);
            assert_eq!(t.leaf_count(), 1);
            assert_eq!(t, OrderedTree::path(h));
        }
        assert!(construct(0, 4).is_empty());
        assert_eq!(construct(0, 4).leaf_count(), 0);
        assert_eq!(construct(7, 0).leaf_count(), 1);
    }

    #[test]
    fn root_arity_is_n() {
        for n in 1..40 {
            let t = construct(n, 3);
            assert_eq!(t.children(t.root()).len(), n);
        }
    }

    #[test]
    fn preorder_layout() {
        let t = construct(4, 3);
        for node in t.nodes() {
            let end = t.after_subtree(node).map_or(t.node_count(), NodeId::index);
            for other in t.nodes() {
                let inside = other >= node && other.index() < end;
                let extends = t.path_of(other).starts_with(&t.path_of(node));
                assert_eq!(inside, extends);
            }
            assert_eq!(t.node_at(&t.path_of(node)), Some(node));
        }
    }

    #[test]
    fn text_round_trip() {
        for s in [".", "(.)", "((.)(...)(.))", "((..)(.))", "(((.)(..)))"] {
            let t: OrderedTree = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("((.)..)".parse::<OrderedTree>().is_err());
        assert!("()".parse::<OrderedTree>().is_err());
        assert!("(.".parse::<OrderedTree>().is_err());
        assert_eq!(construct(0, 2).to_string(), "-");
    }

    #[test]
    fn subtree_and_truncate() {
        let t = construct(3, 2);
        let mid = t.children(t.root())[1];
        assert_eq!(t.subtree(mid).to_string(), "(...)");
        let leaf = t.node_at(&[1, 2]).unwrap();
        assert_eq!(t.truncate(leaf, 1), mid);
        assert_eq!(t.truncate(leaf, 0), t.root());
        assert_eq!(t.truncate(mid, 2), mid);
        assert_eq!(
            t.leftmost_at_depth(t.root(), 2),
            t.node_at(&[0, 0]).unwrap()
        );
    }
}
