//! Acceptance checks. Each criterion prints one PASS or FAIL line; the
//! process exits nonzero if any criterion fails.

use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;

use paritree::game::{random_game, GameGraph};
use paritree::solver::{brute_force_solve, zielonka, Solver, TreeSizing, Worklist};
use paritree::tree::{check_universal, construct, embeds, trees_of_width};
use paritree::widths::{
    bound_binomial, bound_exponential, bound_old, ceil_log2, f_explicit, f_rec, floor_log2,
    to_f64_floor, width_report,
};

type Verdict = Result<String, String>;

fn fail_if(bad: bool, detail: String) -> Verdict {
    if bad {
        Err(detail)
    } else {
        Ok(detail)
    }
}

fn formula_equivalence() -> Verdict {
    let pairs: Vec<(u64, u32)> = (1..=256)
        .flat_map(|n| (1..=12).map(move |h| (n, h)))
        .collect();
    let bad: Vec<_> = pairs
        .par_iter()
        .filter(|&&(n, h)| f_explicit(n, h) != f_rec(n, h))
        .collect();
    fail_if(
        !bad.is_empty(),
        format!(
            "{} pairs, {} mismatches (first {:?})",
            pairs.len(),
            bad.len(),
            bad.first()
        ),
    )
}

fn construction_width() -> Verdict {
    let pairs: Vec<(usize, usize)> = (0..=64)
        .flat_map(|n| (0..=6).map(move |h| (n, h)))
        .collect();
    let bad: Vec<_> = pairs
        .par_iter()
        .filter(|&&(n, h)| BigUint::from(construct(n, h).leaf_count()) != f_rec(n as u64, h as u32))
        .collect();
    fail_if(
        !bad.is_empty(),
        format!(
            "{} pairs, {} mismatches (first {:?})",
            pairs.len(),
            bad.len(),
            bad.first()
        ),
    )
}

fn universality() -> Verdict {
    let pairs: Vec<(usize, usize)> = (1..=5).flat_map(|n| (1..=3).map(move |h| (n, h))).collect();
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(n, h)| ((n, h), check_universal(&construct(n, h), n)))
        .collect();
    let failed: Vec<_> = results
        .iter()
        .filter(|(_, c)| !c.is_universal())
        .map(|(p, _)| *p)
        .collect();
    let checked: usize = results.iter().map(|(_, c)| c.checked).sum();

    let t32 = construct(3, 2);
    let width3 = trees_of_width(2, 3);
    let all_embed = width3.iter().all(|s| embeds(s, &t32).unwrap());
    let fig_ok = width3.len() == 4 && t32.leaf_count() == 5 && all_embed;
    fail_if(
        !failed.is_empty() || !fig_ok,
        format!(
            "{} (n, h) pairs, {checked} trees checked, failures {failed:?}; height-2 width-3 trees: {}, \
             all embed in construct(3,2) of width {}: {all_embed}",
            pairs.len(),
            width3.len(),
            t32.leaf_count()
        ),
    )
}

fn bounds() -> Verdict {
    let pairs: Vec<(u64, u32)> = (1..=256)
        .flat_map(|n| (1..=12).map(move |h| (n, h)))
        .collect();
    let binomial_bad = pairs
        .par_iter()
        .filter(|&&(n, h)| f_explicit(n, h) > bound_binomial(n, h))
        .count();
    let exp_bad = pairs
        .par_iter()
        .filter(|&&(n, _)| n >= 2)
        .filter(|&&(n, h)| to_f64_floor(&f_explicit(n, h)) > bound_exponential(n, h).unwrap())
        .count();
    fail_if(
        binomial_bad + exp_bad > 0,
        format!("binomial bound violations {binomial_bad}, exponential bound violations {exp_bad}"),
    )
}

fn old_vs_new() -> Verdict {
    let csv = width_report(&[5], &[9])
        .map_err(|e| e.to_string())?
        .to_csv();
    let row = csv.lines().nth(1).unwrap_or_default().to_string();
    let cols: Vec<&str> = row.split(',').collect();
    let csv_ok = cols.len() == 8 && cols[3] == "225" && cols[4] == "1320" && cols[6] == "5.86667";

    // bound_old / 2^c and bound_binomial / n are the two binomial
    // coefficients; their quotient should be (h - 1 + c) / c
    let n = 100u64;
    let (c, l) = (ceil_log2(n), floor_log2(n));
    let scale_old = BigUint::from(1u8) << c;
    let bad: Vec<u32> = (2..=256u32)
        .filter(|&h| {
            let old = bound_old(n, h);
            let new = bound_binomial(n, h);
            assert!(&old % &scale_old == BigUint::ZERO && &new % n == BigUint::ZERO);
            let (b_old, b_new) = (old / &scale_old, new / n);
            b_old * u64::from(c) != b_new * (u64::from(h) - 1 + u64::from(c))
        })
        .collect();
    fail_if(
        !csv_ok || !bad.is_empty(),
        format!(
            "CSV row {row:?}; n = {n} (floor lg = {l}, ceil lg = {c}): quotient mismatches for h in 2..=256: {}",
            bad.len()
        ),
    )
}

fn corpus(count: u64, seed0: u64, n_max: usize, ds: &[u32]) -> Vec<(u64, GameGraph)> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let seed = seed0 + i;
            let n = 1 + (i as usize % n_max);
            let d = ds[(i as usize / n_max) % ds.len()];
            let hi = 1 + (i as usize / (n_max * ds.len())) % 3;
            (seed, random_game(n, d, 1..=hi, seed))
        })
        .collect()
}

fn solver_correctness() -> Verdict {
    let games = corpus(10_000, 1_000, 12, &[2, 4, 6]);
    let lifting_bad = games
        .par_iter()
        .filter(|(_, g)| Solver::new(g).run().regions != zielonka(g))
        .count();
    let small = corpus(500, 50_000, 6, &[2, 4, 6]);
    let brute_bad = small
        .par_iter()
        .filter(|(_, g)| brute_force_solve(g).expect("small game") != zielonka(g))
        .count();
    fail_if(
        lifting_bad + brute_bad > 0,
        format!(
            "lifting vs zielonka: {lifting_bad}/{} disagree; zielonka vs brute force: {brute_bad}/{} disagree",
            games.len(),
            small.len()
        ),
    )
}

fn eta_refinement() -> Verdict {
    let games = corpus(2_000, 200_000, 20, &[2, 4, 6, 8]);
    let rows: Vec<_> = games
        .par_iter()
        .map(|(seed, g)| {
            let small = Solver::new(g).run();
            let full = Solver::with_sizing(g, TreeSizing::Full).run();
            let ratio = full.stats.tree_width as f64 / small.stats.tree_width as f64;
            let n = g.vertex_count();
            let strict_expected = g.max_priority() >= 4 && small.stats.eta.max(1) < n;
            let eta_ok = small.stats.eta <= n / 2;
            (
                *seed,
                small.regions == full.regions,
                ratio,
                strict_expected,
                eta_ok,
            )
        })
        .collect();
    let region_bad = rows.iter().filter(|r| !r.1).count();
    let ratio_bad = rows
        .iter()
        .filter(|r| r.2 < 1.0 || (r.3 && r.2 <= 1.0))
        .count();
    let eta_bad = rows.iter().filter(|r| !r.4).count();
    let ratios: Vec<f64> = rows.iter().map(|r| r.2).collect();
    let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let max = ratios.iter().copied().fold(0.0, f64::max);
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    fail_if(
        region_bad + ratio_bad + eta_bad > 0,
        format!(
            "{} games: region mismatches {region_bad}, width-ratio violations {ratio_bad}, eta > n/2: {eta_bad}; \
             width ratio min {min:.2} mean {mean:.2} max {max:.2}",
            rows.len()
        ),
    )
}

fn lifting_discipline() -> Verdict {
    let games = corpus(2_000, 300_000, 24, &[2, 4, 6, 8]);
    let bound_bad: Vec<_> = games
        .par_iter()
        .filter_map(|(seed, g)| {
            let mut monotone = true;
            let out = Solver::new(g).run_observed(|_, old, new| monotone &= new > old);
            let limit = (g.vertex_count() * (out.stats.tree_width + 1)) as u64;
            (!monotone || out.stats.updates > limit).then_some(*seed)
        })
        .collect();
    let order_bad: Vec<_> = games[..200]
        .par_iter()
        .filter_map(|(seed, g)| {
            let fifo = Solver::new(g).worklist(Worklist::Fifo).run().measure;
            let lifo = Solver::new(g).worklist(Worklist::Lifo).run().measure;
            let rand = Solver::new(g)
                .worklist(Worklist::Random(*seed))
                .run()
                .measure;
            (fifo != lifo || fifo != rand).then_some(*seed)
        })
        .collect();
    fail_if(
        !bound_bad.is_empty() || !order_bad.is_empty(),
        format!(
            "{} runs: monotonicity or update-bound failures {bound_bad:?}; 200 games: worklist-order mismatches {order_bad:?}",
            games.len()
        ),
    )
}

fn scaling() -> Verdict {
    const GAMES: u64 = 20;
    let points: Vec<(u32, f64, f64)> = [4u32, 8, 16]
        .iter()
        .map(|&d| {
            let runs: Vec<(f64, f64)> = (0..GAMES)
                .into_par_iter()
                .map(|seed| {
                    let g = random_game(200, d, 1..=3, 7_000 + seed);
                    let s = Solver::new(&g).run().stats;
                    (s.tree_width as f64, s.lifts as f64)
                })
                .collect();
            let w = runs.iter().map(|r| r.0).sum::<f64>() / GAMES as f64;
            let l = runs.iter().map(|r| r.1).sum::<f64>() / GAMES as f64;
            (d, w, l)
        })
        .collect();
    let xs: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.2.ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / 3.0, ys.iter().sum::<f64>() / 3.0);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let table: Vec<String> = points
        .iter()
        .map(|(d, w, l)| format!("d={d}: width {w:.0}, lifts {l:.0}"))
        .collect();
    fail_if(
        slope.is_nan() || slope > 1.2,
        format!("n = 200, {}; log-log slope {slope:.3}", table.join("; ")),
    )
}

fn main() {
    type Check = (&'static str, fn() -> Verdict);
    let criteria: [Check; 9] = [
        ("formula equivalence", formula_equivalence),
        ("construction width", construction_width),
        ("exhaustive universality", universality),
        ("width bounds", bounds),
        ("old vs new bound", old_vs_new),
        ("solver correctness", solver_correctness),
        ("eta-sized tree", eta_refinement),
        ("lifting discipline", lifting_discipline),
        ("scaling trend", scaling),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {} [PRIMARY] {name}: {tag} ({secs:.1}s) {detail}",
            i + 1
        );
    }
    if failures > 0 {
        eprintln!("{failures} criteria failed");
        std::process::exit(1);
    }
}
