//! Exhaustive enumeration of ordered trees by height and width.
//!
//! Canonical order: by width; within a width by the root's arity; then by the
//! composition of the width among the root's children (lexicographic); then by
//! the children themselves in this same order, leftmost child varying slowest.

use super::OrderedTree;

/// Every ordered tree of height `h` and width in `1..=max_width`, each once.
pub fn enumerate_trees(h: usize, max_width: usize) -> impl Iterator<Item = OrderedTree> {
    (1..=max_width).flat_map(move |w| trees_of_width(h, w))
}

/// Every ordered tree of height `h` with exactly `w` leaves.
pub fn trees_of_width(h: usize, w: usize) -> Vec<OrderedTree> {
    let mut table = Table::default();
    table.get(h, w).to_vec()
}

#[derive(Default)]
struct Table {
    // memo[h][w]
    memo: Vec<Vec<Option<Vec<OrderedTree>>>>,
}

impl Table {
    fn get(&mut self, h: usize, w: usize) -> &[OrderedTree] {
        if self.memo.len() <= h {
            self.memo.resize_with(h + 1, Vec::new);
        }
        if self.memo[h].len() <= w {
            self.memo[h].resize_with(w + 1, || None);
        }
        if self.memo[h][w].is_none() {
            let trees = self.build(h, w);
            self.memo[h][w] = Some(trees);
        }
        self.memo[h][w].as_deref().unwrap()
    }

    fn build(&mut self, h: usize, w: usize) -> Vec<OrderedTree> {
        if w == 0 {
            return Vec::new();
        }
        if h == 0 {
            return if w == 1 {
                vec![OrderedTree::leaf()]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        for arity in 1..=w {
            for parts in compositions(w, arity) {
                let options: Vec<Vec<OrderedTree>> =
                    parts.iter().map(|&p| self.get(h - 1, p).to_vec()).collect();
                for_each_product(&options, &mut Vec::new(), &mut |children| {
                    out.push(OrderedTree::node(children).expect("equal-height children"));
                });
            }
        }
        out
    }
}

/// Compositions of `w` into exactly `k` positive parts, lexicographically.
fn compositions(w: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // leave at least one leaf for each remaining part
        for first in 1..=rest.saturating_sub(k - 1) {
            cur.push(first);
            go(rest - first, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(w, k, &mut Vec::new(), &mut out);
    out
}

fn for_each_product(
    options: &[Vec<OrderedTree>],
    acc: &mut Vec<OrderedTree>,
    f: &mut impl FnMut(&[OrderedTree]),
) {
    let Some((first, rest)) = options.split_first() else {
        f(acc);
        return;
    };
    for t in first {
        acc.push(t.clone());
        for_each_product(rest, acc, f);
        acc.pop();
    }
}
