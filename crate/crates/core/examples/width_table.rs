//! Widths of the universal trees next to the bounds on them.

use paritree::widths::{bound_binomial, bound_old, f_rec, width_report};

fn main() {
    let table = width_report(&[2, 5, 16, 100, 1000], &[1, 2, 4, 9]).expect("valid grid");
    print!("{}", table.to_csv());

    // the old bound grows away from the new one linearly in h
    println!();
    for h in [2, 8, 32, 128] {
        let (old, new) = (bound_old(100, h), bound_binomial(100, h));
        println!(
            "n=100 h={h:<3} f={} old/new={:.3}",
            f_rec(100, h),
            ratio(&old, &new)
        );
    }
}

fn ratio(a: &num_bigint::BigUint, b: &num_bigint::BigUint) -> f64 {
    use num_traits::ToPrimitive;
    a.to_f64().unwrap() / b.to_f64().unwrap()
}
