//! Exact widths of the constructed universal trees and the bounds on them.
//!
//! Every integer quantity is an arbitrary-precision [`BigUint`]; floats only
//! appear in [`bound_exponential`] and in the ratio columns of a
//! [`WidthTable`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};
use thiserror::Error;

/// `1 + log2(e)`, the constant part of the exponent in [`bound_exponential`].
pub const EXPONENT_BASE: f64 = 1.0 + std::f64::consts::LOG2_E;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WidthError {
    #[error("the exponential bound needs n >= 2 and h >= 1, got n = {n}, h = {h}")]
    Domain { n: u64, h: u32 },
    #[error("width grids must be nonempty")]
    EmptyGrid,
    #[error("width grids need n >= 1 and h >= 1")]
    ZeroInGrid,
}

pub fn floor_log2(n: u64) -> u32 {
    assert!(n >= 1, "log of zero");
    63 - n.leading_zeros()
}

pub fn ceil_log2(n: u64) -> u32 {
    assert!(n >= 1, "log of zero");
    if n == 1 {
        0
    } else {
        floor_log2(n - 1) + 1
    }
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

thread_local! {
    static MEMO: RefCell<HashMap<(u64, u32), BigUint>> = RefCell::new(HashMap::new());
}

/// Width recursion `f(n, h) = f(n, h-1) + f(n/2, h) + f(n-1-n/2, h)` with
/// `f(0, h) = 0` and `f(n, 0) = 1`, memoized per thread.
pub fn f_rec(n: u64, h: u32) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    if h == 0 {
        return BigUint::one();
    }
    if let Some(v) = MEMO.with(|m| m.borrow().get(&(n, h)).cloned()) {
        return v;
    }
    let half = n / 2;
    let v = f_rec(n, h - 1) + f_rec(half, h) + f_rec(n - 1 - half, h);
    MEMO.with(|m| m.borrow_mut().insert((n, h), v.clone()));
    v
}

/// Closed form of [`f_rec`] for `n, h >= 1`:
/// `sum_{i < L} 2^i C(h-1+i, h-1) + (n - 2^L + 1) C(h-1+L, h-1)` with
/// `L = floor(log2 n)`.
///
/// # Panics
///
/// If `n == 0` or `h == 0`.
pub fn f_explicit(n: u64, h: u32) -> BigUint {
    assert!(n >= 1 && h >= 1, "closed form needs n, h >= 1");
    let l = floor_log2(n);
    let h1 = u64::from(h - 1);
    let mut total = BigUint::zero();
    for i in 0..l {
        total += binomial(h1 + u64::from(i), h1) << i;
    }
    total + binomial(h1 + u64::from(l), h1) * (n - (1u64 << l) + 1)
}

/// `n * C(h - 1 + floor(log2 n), floor(log2 n))`.
///
/// # Panics
///
/// If `n == 0` or `h == 0`.
pub fn bound_binomial(n: u64, h: u32) -> BigUint {
    assert!(n >= 1 && h >= 1, "bound needs n, h >= 1");
    let l = u64::from(floor_log2(n));
    binomial(u64::from(h) - 1 + l, l) * n
}

/// The earlier bound `2^ceil(log2 n) * C(h - 1 + ceil(log2 n), ceil(log2 n))`.
///
/// # Panics
///
/// If `n == 0` or `h == 0`.
pub fn bound_old(n: u64, h: u32) -> BigUint {
    assert!(n >= 1 && h >= 1, "bound needs n, h >= 1");
    let c = ceil_log2(n);
    binomial(u64::from(h) - 1 + u64::from(c), u64::from(c)) << c
}

/// `n ^ ((1 + log2 e) + log2(1 + (h - 1) / log2 n))`.
pub fn bound_exponential(n: u64, h: u32) -> Result<f64, WidthError> {
    if n < 2 || h < 1 {
        return Err(WidthError::Domain { n, h });
    }
    let lg = (n as f64).log2();
    let exponent = EXPONENT_BASE + (1.0 + f64::from(h - 1) / lg).log2();
    Ok((n as f64).powf(exponent))
}

/// Nearest `f64` not above `x`.
pub fn to_f64_floor(x: &BigUint) -> f64 {
    let f = x.to_f64().unwrap_or(f64::INFINITY);
    if !f.is_finite() {
        return f64::MAX;
    }
    match BigUint::from_f64(f) {
        Some(back) if &back > x => f.next_down(),
        _ => f,
    }
}

fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    if b.is_zero() {
        return f64::INFINITY;
    }
    a.to_f64().unwrap_or(f64::INFINITY) / b.to_f64().unwrap_or(f64::INFINITY)
}

/// One `(n, h)` row of a [`WidthTable`].
#[derive(Debug, Clone, PartialEq)]
pub struct WidthRow {
    pub n: u64,
    pub h: u32,
    pub f: BigUint,
    pub bound_binomial: BigUint,
    pub bound_old: BigUint,
    /// `None` when `n < 2`, where the exponential bound is undefined.
    pub bound_exponential: Option<f64>,
}

impl WidthRow {
    pub fn compute(n: u64, h: u32) -> Self {
        WidthRow {
            n,
            h,
            f: f_explicit(n, h),
            bound_binomial: bound_binomial(n, h),
            bound_old: bound_old(n, h),
            bound_exponential: bound_exponential(n, h).ok(),
        }
    }

    /// `bound_old / bound_binomial`: how much the earlier bound overshoots.
    pub fn ratio_old_new(&self) -> f64 {
        ratio(&self.bound_old, &self.bound_binomial)
    }

    /// `bound_old / f`.
    pub fn ratio_old_f(&self) -> f64 {
        ratio(&self.bound_old, &self.f)
    }

    /// `f(n, h) / f(n / 2, h)`: the width saved by an `n/2`-universal tree.
    pub fn ratio_half(&self) -> f64 {
        ratio(&self.f, &f_rec(self.n / 2, self.h))
    }
}

/// Width formulas and bounds over a grid of `(n, h)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WidthTable {
    pub rows: Vec<WidthRow>,
}

pub const CSV_HEADER: &str =
    "n,h,f,bound_binomial,bound_old,bound_exponential,ratio_old_new,ratio_half";

impl WidthTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let exp = r
                .bound_exponential
                .map_or_else(|| "NA".to_owned(), format_sig6);
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.n,
                r.h,
                r.f,
                r.bound_binomial,
                r.bound_old,
                exp,
                format_sig6(r.ratio_old_new()),
                format_sig6(r.ratio_half()),
            );
        }
        out
    }
}

/// Tabulates every formula for each pair in `n_values x h_values`, rows
/// ordered by `n` then `h` as given.
pub fn width_report(n_values: &[u64], h_values: &[u32]) -> Result<WidthTable, WidthError> {
    if n_values.is_empty() || h_values.is_empty() {
        return Err(WidthError::EmptyGrid);
    }
    if n_values.contains(&0) || h_values.contains(&0) {
        return Err(WidthError::ZeroInGrid);
    }
    let rows = n_values
        .iter()
        .flat_map(|&n| h_values.iter().map(move |&h| WidthRow::compute(n, h)))
        .collect();
    Ok(WidthTable { rows })
}

/// Formats like C's `%g`: six significant digits, trailing zeros dropped,
/// scientific notation outside `[1e-4, 1e6)`.
pub fn format_sig6(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (5 - exp) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_owned()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
