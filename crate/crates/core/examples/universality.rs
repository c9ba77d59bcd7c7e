//! Exhaustively confirm that construct(n, h) is n-universal for small sizes,
//! and show what fails for a tree that is too small.

use paritree::tree::{check_universal, construct, embeds, trees_of_width, OrderedTree};

fn main() {
    let t = construct(3, 2);
    println!("construct(3, 2) = {t}  ({} leaves)", t.leaf_count());
    for s in trees_of_width(2, 3) {
        println!("  {s} embeds: {}", embeds(&s, &t).unwrap());
    }

    for n in 1..=5 {
        for h in 1..=3 {
            let c = check_universal(&construct(n, h), n);
            println!(
                "n={n} h={h} width={:<3} checked={:<4} universal={}",
                construct(n, h).leaf_count(),
                c.checked,
                c.is_universal()
            );
        }
    }

    let small: OrderedTree = "((.)(.))".parse().unwrap();
    let c = check_universal(&small, 3);
    println!(
        "{small} for n=3: counterexample {}",
        c.counterexample.unwrap()
    );
}
