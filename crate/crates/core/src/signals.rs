//! Built-in reference signals.
//!
//! `s1`–`s3` are 3-qubit states given to three decimals (not exactly unit
//! norm); `table2` is the perturbed degree-7 polynomial sampled at the 16
//! midpoints of `[0, 1)` and normalized; `filter16` is the 16-point real
//! signal used by the filtering example (raw, norm ≈ 1.533).

use crate::encode::discretize_midpoints;
use crate::vector::ComplexVector;
use crate::Complex;

const fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub const S1: [Complex; 8] = [
    c(0.693, -0.048),
    c(-0.373, 0.083),
    c(-0.373, 0.083),
    c(-0.258, -0.107),
    c(-0.239, 0.161),
    c(0.117, -0.107),
    c(0.117, -0.107),
    c(0.115, -0.015),
];

pub const S2: [Complex; 8] = [
    c(0.706, -0.076),
    c(-0.371, 0.096),
    c(-0.371, 0.003),
    c(-0.241, -0.078),
    c(-0.238, 0.173),
    c(0.113, -0.111),
    c(0.133, -0.078),
    c(0.102, -0.022),
];

pub const S3: [Complex; 8] = [
    c(0.718, -0.101),
    c(-0.370, 0.108),
    c(-0.370, 0.015),
    c(-0.242, -0.082),
    c(-0.237, 0.101),
    c(0.128, -0.085),
    c(0.147, -0.052),
    c(0.091, -0.028),
];

pub const FILTER16: [f64; 16] = [
    0.9, 0.7, 0.5, 0.3, 0.1, -0.1, -0.3, -0.5, -0.4, -0.2, 0.0, 0.2, 0.3, 0.1, -0.1, 0.0,
];

/// Polynomial coefficients of the `table2` function, highest degree first.
pub const TABLE2_COEFFS: [f64; 8] = [-978.7, 3677.0, -5575.0, 4366.0, -1875.0, 431.6, -47.57, 1.886];

/// Number of midpoint samples in the `table2` signal.
pub const TABLE2_LEN: usize = 16;

/// `Σ a_i x^{7−i} + 0.1 sin(0.1x) − 0.01 e^{−x}`.
pub fn table2_function(x: f64) -> f64 {
    let poly = TABLE2_COEFFS.iter().fold(0.0, |acc, &a| acc * x + a);
    poly + 0.1 * (0.1 * x).sin() - 0.01 * (-x).exp()
}

pub fn table2_signal() -> ComplexVector {
    discretize_midpoints(table2_function, TABLE2_LEN).expect("table2 samples are finite and nonzero")
}

pub const NAMES: [&str; 5] = ["s1", "s2", "s3", "table2", "filter16"];

/// Looks up a built-in signal by name.
pub fn named(name: &str) -> Option<ComplexVector> {
    let v = match name {
        "s1" => S1.to_vec(),
        "s2" => S2.to_vec(),
        "s3" => S3.to_vec(),
        "table2" => return Some(table2_signal()),
        "filter16" => FILTER16.iter().map(|&x| c(x, 0.0)).collect(),
        _ => return None,
    };
    Some(ComplexVector::new(v).expect("finite constants"))
}
