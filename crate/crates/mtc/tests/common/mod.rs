//! Shared fixtures and closed-form reference data for integration tests.
//!
//! The `sl2` closed forms below are independent of the library's Weyl-sum
//! evaluation: they are the textbook trigonometric expressions for the
//! level-k `sl2` modular data, written out directly. Everything derived
//! downstream (Fibonacci, Ising, the rank-3 even part at level 5, the
//! reverse-square core) is anchored to them.

#![allow(dead_code)]

use num_complex::Complex;
use std::f64::consts::PI;

use mtc::liealg::{LieSpec, Series};
use mtc::ModularData64;

pub type C64 = Complex<f64>;

/// Closed-form S-matrix entry for sl2 at the given level:
/// `s_{jl} = sqrt(2/(k+2)) sin(pi (j+1)(l+1) / (k+2))`.
pub fn sl2_s(level: u32, j: usize, l: usize) -> f64 {
    let kk = f64::from(level) + 2.0;
    (2.0 / kk).sqrt() * (PI * ((j + 1) * (l + 1)) as f64 / kk).sin()
}

/// Closed-form twist for sl2 at the given level:
/// `theta_j = exp(2 pi i j(j+2) / (4(k+2)))`.
pub fn sl2_theta(level: u32, j: usize) -> C64 {
    let kk = f64::from(level) + 2.0;
    Complex::from_polar(1.0, 2.0 * PI * (j * (j + 2)) as f64 / (4.0 * kk))
}

/// Closed-form sl2 fusion rule (truncated Clebsch-Gordan):
/// `N^c_{ab} = 1` iff `|a-b| <= c <= min(a+b, 2k-a-b)` and `c = a+b mod 2`.
pub fn sl2_fusion(level: u32, a: usize, b: usize, c: usize) -> u32 {
    let k = level as usize;
    let lo = a.abs_diff(b);
    let hi = (a + b).min(2 * k - a - b);
    u32::from(c >= lo && c <= hi && (a + b) % 2 == c % 2)
}

pub fn sl2(level: u32) -> ModularData64 {
    mtc::kac_peterson(&LieSpec::new(Series::A, 1, level)).expect("sl2 data")
}

/// Ising: the full level-2 sl2 category, labels 0, L1, 2L1.
pub fn ising() -> ModularData64 {
    sl2(2)
}

/// Fibonacci: the even part of sl2 level 3, generated by 2L1.
pub fn fib() -> ModularData64 {
    let md = sl2(3);
    let g = md.label_index("2L1").expect("2L1 present");
    mtc::catops::tensor_subcategory(&md, &[g]).expect("Fibonacci subcategory")
}

/// The rank-3 even part of sl2 level 5, generated by 2L1.
pub fn even_sl2_5() -> ModularData64 {
    let md = sl2(5);
    let g = md.label_index("2L1").expect("2L1 present");
    mtc::catops::tensor_subcategory(&md, &[g]).expect("even part at level 5")
}

/// The reverse-square core: reverse(Fib) boxtimes reverse(Fib).
pub fn core() -> ModularData64 {
    let r = mtc::catops::reverse(&fib());
    mtc::catops::deligne_product(&r, &r)
}

pub const GOLDEN: f64 = 1.618033988749894848;

pub fn assert_close(got: C64, want: C64, tol: f64, what: &str) {
    let err = (got - want).norm();
    assert!(err <= tol, "{what}: got {got}, want {want}, |diff| = {err:.3e}");
}

pub fn assert_close_f(got: f64, want: f64, tol: f64, what: &str) {
    let err = (got - want).abs();
    assert!(err <= tol, "{what}: got {got}, want {want}, |diff| = {err:.3e}");
}

/// Sorts a complex multiset by real then imaginary part, for
/// order-insensitive comparison.
pub fn sort_complex(values: &mut [C64]) {
    values.sort_by(|a, b| {
        a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap())
    });
}

pub fn complex_multisets_match(mut got: Vec<C64>, mut want: Vec<C64>, tol: f64) -> bool {
    if got.len() != want.len() {
        return false;
    }
    sort_complex(&mut got);
    sort_complex(&mut want);
    got.iter().zip(&want).all(|(g, w)| (g - w).norm() <= tol)
}
