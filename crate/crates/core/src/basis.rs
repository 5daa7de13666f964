//! Continuous basis functions on `[0, 1)` and series expansion.
//!
//! `f_j(x) = W[⌊bx⌋][⌊j / b^{n−1}⌋] · f_{j mod b^{n−1}}({bx})` with
//! `f_0 ≡ 1` at `n = 0`. Every `f_j` is constant on the `N` intervals
//! `[t/N, (t+1)/N)`, and `φ_j = b^{n/2} f_j` is orthonormal in `L²[0, 1)`.

use crate::error::{GttError, Result};
use crate::transform::{DenseCap, DenseMatrix, GttOperator};
use crate::vector::ComplexVector;
use crate::Complex;

/// Distance below an integer at which `⌊bx⌋` is rounded up.
const DIGIT_GUARD: f64 = 1e-12;

/// A basis index together with its base-`b` digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisIndex {
    index: usize,
    /// Most significant first: `j_{n−1}, …, j_0`.
    digits: Vec<usize>,
}

impl BasisIndex {
    pub fn new(op: &GttOperator, index: usize) -> Result<Self> {
        let mut digits = op.digits(index)?;
        digits.reverse();
        Ok(Self { index, digits })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }
}

fn check_domain(x: f64) -> Result<()> {
    if !(0.0..1.0).contains(&x) {
        return Err(GttError::DomainError(x));
    }
    Ok(())
}

/// Leading base-`b` digit of `x` and the remainder `{bx}`.
fn split_digit(x: f64, b: usize) -> (usize, f64) {
    let y = x * b as f64;
    let mut d = y.floor();
    if y - d > 1.0 - DIGIT_GUARD {
        d += 1.0;
    }
    let d = (d as usize).min(b - 1);
    (d, (y - d as f64).clamp(0.0, 1.0 - f64::EPSILON))
}

/// Unnormalized basis function `f_j(x)`.
pub fn eval_basis(op: &GttOperator, j: usize, x: f64) -> Result<Complex> {
    check_domain(x)?;
    let idx = BasisIndex::new(op, j)?;
    let w = op.base();
    let b = w.dim();
    let mut value = Complex::new(1.0, 0.0);
    let mut rest = x;
    for &jd in idx.digits() {
        let (xd, frac) = split_digit(rest, b);
        value *= w.get(xd, jd);
        rest = frac;
    }
    Ok(value)
}

/// Orthonormal basis function `φ_j(x) = b^{n/2} f_j(x)`.
pub fn eval_normalized_basis(op: &GttOperator, j: usize, x: f64) -> Result<Complex> {
    Ok(eval_basis(op, j, x)? * (op.len() as f64).sqrt())
}

/// Midpoint of the `t`-th of `m` uniform subintervals of `[0, 1)`.
pub fn midpoint(t: usize, m: usize) -> f64 {
    (2 * t + 1) as f64 / (2 * m) as f64
}

/// `G[p][q] = f_q((2p+1)/(2N))`, built by evaluating the basis functions.
pub fn sample_matrix(op: &GttOperator, cap: DenseCap) -> Result<DenseMatrix> {
    let len = op.len();
    if len > cap.0 {
        return Err(GttError::TooLarge { size: len, cap: cap.0 });
    }
    let mut rows = Vec::with_capacity(len * len);
    for p in 0..len {
        let x = midpoint(p, len);
        for q in 0..len {
            rows.push(eval_basis(op, q, x)?);
        }
    }
    Ok(DenseMatrix::from_fn(len, |p, q| rows[p * len + q]))
}

/// Gram matrix `∫ conj(φ_j) φ_k` computed exactly: each `φ_j` is constant
/// on the `N` base intervals, so the integral is a midpoint sum.
pub fn gram_matrix(op: &GttOperator, cap: DenseCap) -> Result<DenseMatrix> {
    let len = op.len();
    if len > cap.0 {
        return Err(GttError::TooLarge { size: len, cap: cap.0 });
    }
    let mut phi = Vec::with_capacity(len * len);
    for t in 0..len {
        let x = midpoint(t, len);
        for j in 0..len {
            phi.push(eval_normalized_basis(op, j, x)?);
        }
    }
    let inv = (len as f64).recip();
    Ok(DenseMatrix::from_fn(len, |j, k| {
        (0..len)
            .map(|t| phi[t * len + j].conj() * phi[t * len + k])
            .sum::<Complex>()
            * inv
    }))
}

/// Coefficients `C_m` of `g ≈ Σ C_m φ_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesExpansion {
    op: GttOperator,
    coefficients: ComplexVector,
}

impl SeriesExpansion {
    pub fn new(op: GttOperator, coefficients: ComplexVector) -> Result<Self> {
        coefficients.check_len(op.len())?;
        Ok(Self { op, coefficients })
    }

    pub fn operator(&self) -> &GttOperator {
        &self.op
    }

    pub fn coefficients(&self) -> &ComplexVector {
        &self.coefficients
    }

    /// `Σ_m C_m φ_m(x)`.
    pub fn reconstruct(&self, x: f64) -> Result<Complex> {
        check_domain(x)?;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(m, c)| eval_normalized_basis(&self.op, m, x).map(|phi| c * phi))
            .sum()
    }

    /// The expansion on every base interval at once: `√N · G·C`.
    pub fn reconstruct_intervals(&self) -> ComplexVector {
        let scale = (self.op.len() as f64).sqrt();
        let y = self
            .op
            .apply(&self.coefficients)
            .expect("length checked at construction");
        ComplexVector::new(y.iter().map(|v| v * scale).collect()).expect("finite")
    }
}

/// Midpoint-rule coefficients `C_m = (1/M) Σ_t conj(φ_m(x_t)) g(x_t)` from `M`
/// samples of `g` at the midpoints of `M` uniform subintervals, `N | M`.
///
/// Samples falling in the same base interval share `φ_m(x_t)`, so they are
/// summed first and the coefficients follow from one inverse transform.
pub fn series_coefficients(op: &GttOperator, samples: &ComplexVector) -> Result<SeriesExpansion> {
    let len = op.len();
    let m = samples.len();
    if !m.is_multiple_of(len) {
        return Err(GttError::BadSampleCount { samples: m, len });
    }
    let per = m / len;
    let binned: Vec<Complex> = samples.chunks(per).map(|c| c.iter().sum()).collect();
    let scale = (len as f64).sqrt() / m as f64;
    let coeffs = op.apply_inverse(&ComplexVector::new(binned)?)?;
    let coeffs = ComplexVector::new(coeffs.iter().map(|c| c * scale).collect())?;
    SeriesExpansion::new(op.clone(), coeffs)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_1_SQRT_2;

    use super::*;
    use crate::base::BaseMatrix;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn example_w() -> BaseMatrix {
        let h = FRAC_1_SQRT_2;
        BaseMatrix::new(2, vec![c(h, 0.0), c(0.0, h), c(h, 0.0), c(0.0, -h)]).unwrap()
    }

    #[test]
    fn hadamard_first_function_is_constant() {
        let op = GttOperator::new(BaseMatrix::hadamard(), 3).unwrap();
        for x in [0.0, 0.1, 0.49, 0.5, 0.99] {
            let v = eval_basis(&op, 0, x).unwrap();
            assert!((v - c(FRAC_1_SQRT_2.powi(3), 0.0)).norm() < 1e-15);
            assert!((eval_normalized_basis(&op, 0, x).unwrap() - c(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn single_level_reads_the_matrix() {
        let w = BaseMatrix::dft(3).unwrap();
        let op = GttOperator::new(w.clone(), 1).unwrap();
        for j in 0..3 {
            for (x, row) in [(0.1, 0), (0.4, 1), (0.9, 2)] {
                assert_eq!(eval_basis(&op, j, x).unwrap(), w.get(row, j));
            }
        }
    }

    #[test]
    fn complex_example_basis() {
        let op = GttOperator::new(example_w(), 1).unwrap();
        assert!((eval_basis(&op, 1, 0.25).unwrap() - c(0.0, FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!((eval_basis(&op, 1, 0.75).unwrap() - c(0.0, -FRAC_1_SQRT_2)).norm() < 1e-15);
        for x in [0.1, 0.6] {
            assert!((eval_normalized_basis(&op, 0, x).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        }
        assert!((eval_normalized_basis(&op, 1, 0.2).unwrap() - c(0.0, 1.0)).norm() < 1e-15);
        assert!((eval_normalized_basis(&op, 1, 0.8).unwrap() - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn step_function_series() {
        let op = GttOperator::new(example_w(), 1).unwrap();
        let g = ComplexVector::from_real(&[1.0, 0.0]).unwrap();
        let exp = series_coefficients(&op, &g).unwrap();
        assert!((exp.coefficients()[0] - c(0.5, 0.0)).norm() < 1e-15);
        assert!((exp.coefficients()[1] - c(0.0, -0.5)).norm() < 1e-15);
        assert!((exp.reconstruct(0.3).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert!(exp.reconstruct(0.7).unwrap().norm() < 1e-15);
    }

    #[test]
    fn constant_function_has_one_coefficient() {
        let op = GttOperator::new(BaseMatrix::hadamard(), 3).unwrap();
        let g = ComplexVector::from_real(&[1.0; 16]).unwrap();
        let exp = series_coefficients(&op, &g).unwrap();
        assert!((exp.coefficients()[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!(exp.coefficients()[1..].iter().all(|v| v.norm() < 1e-15));
    }

    #[test]
    fn zero_coefficients_reconstruct_zero() {
        let op = GttOperator::new(BaseMatrix::dft(3).unwrap(), 2).unwrap();
        let exp = SeriesExpansion::new(op, ComplexVector::zeros(9).unwrap()).unwrap();
        for x in [0.0, 0.33, 0.5, 0.999] {
            assert_eq!(exp.reconstruct(x).unwrap(), c(0.0, 0.0));
        }
    }

    #[test]
    fn domain_and_sample_count_errors() {
        let op = GttOperator::new(BaseMatrix::hadamard(), 2).unwrap();
        assert_eq!(eval_basis(&op, 0, 1.0), Err(GttError::DomainError(1.0)));
        assert_eq!(eval_basis(&op, 0, -0.1), Err(GttError::DomainError(-0.1)));
        assert!(eval_basis(&op, 0, f64::NAN).is_err());
        assert!(matches!(eval_basis(&op, 4, 0.5), Err(GttError::IndexOutOfRange { .. })));
        let g = ComplexVector::zeros(6).unwrap();
        assert_eq!(
            series_coefficients(&op, &g).unwrap_err(),
            GttError::BadSampleCount { samples: 6, len: 4 }
        );
    }

    #[test]
    fn boundary_guard_lands_in_upper_interval() {
        let op = GttOperator::new(BaseMatrix::dft(3).unwrap(), 3).unwrap();
        // 1/3 is not representable; the evaluation must match the interval [1/3, 2/3)
        for j in 0..27 {
            let at = eval_basis(&op, j, 1.0 / 3.0).unwrap();
            let inside = eval_basis(&op, j, 1.0 / 3.0 + 1e-3 / 27.0).unwrap();
            assert!((at - inside).norm() < 1e-14, "j={j}");
        }
    }

    #[test]
    fn basis_index_digits() {
        let op = GttOperator::new(BaseMatrix::dft(3).unwrap(), 3).unwrap();
        let idx = BasisIndex::new(&op, 11).unwrap();
        assert_eq!(idx.digits(), &[1, 0, 2]);
        assert_eq!(idx.index(), 11);
    }
}
