//! Leaves, prefixes and the "least leaf above" query on an ordered tree.

use paritree::tree::{construct, min_leaf_geq, Extended, Leaf};

fn main() {
    let t = construct(3, 2);
    println!("{t}");
    for leaf in t.leaves() {
        println!("  leaf {leaf}");
    }

    let x = Extended::Finite(Leaf::from(vec![1, 0]));
    for k in 0..=2 {
        for strict in [false, true] {
            let r = min_leaf_geq(&t, &x, k, strict).unwrap();
            let shown = match r {
                Extended::Finite(l) => l.to_string(),
                Extended::Top => "top".into(),
                Extended::Bottom => "bottom".into(),
            };
            println!(
                "least leaf with {}-prefix {} that of (1,0): {shown}",
                k,
                if strict { ">" } else { ">=" }
            );
        }
    }

    let node = t.node_at(&[1, 0]).unwrap();
    println!(
        "truncate (1,0) to 1 -> {:?}",
        t.path_of(t.truncate(node, 1))
    );
    println!(
        "after subtree of (1) -> {:?}",
        t.after_subtree(t.node_at(&[1]).unwrap())
            .map(|n| t.path_of(n))
    );
}
