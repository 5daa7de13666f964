//! The fast generalized tensor transform and its dense oracle.
//!
//! Index convention: `q = Σ_j q_j·b^j` with `q_{n−1}` the most significant
//! digit, and the first Kronecker factor of `W⊗ⁿ` acts on that digit. The fast
//! transform runs one butterfly pass per digit, least significant first, each
//! pass multiplying every length-`b` fibre (stride `b^level`) by `W`. This is
//! the recursive reshape/multiply/recurse/flatten scheme unrolled level by
//! level; [`GttOperator::apply_recursive`] keeps the recursive form.

use std::env;

use crate::base::{BaseMatrix, UNITARITY_TOL};
use crate::error::{GttError, Result};
use crate::vector::ComplexVector;
use crate::Complex;

const ZERO: Complex = Complex::new(0.0, 0.0);

/// Environment variable overriding [`DenseCap::default`].
pub const DENSE_CAP_ENV: &str = "GTT_DENSE_CAP";

/// Upper bound on `N` for operations that materialize an `N × N` matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseCap(pub usize);

impl Default for DenseCap {
    fn default() -> Self {
        DenseCap(4096)
    }
}

impl DenseCap {
    /// Reads `GTT_DENSE_CAP`, falling back to the default when unset or invalid.
    pub fn from_env() -> Self {
        env::var(DENSE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(DenseCap)
            .unwrap_or_default()
    }

    fn check(self, size: usize) -> Result<()> {
        if size > self.0 {
            return Err(GttError::TooLarge { size, cap: self.0 });
        }
        Ok(())
    }
}

/// Arithmetic performed by one transform, in complex operations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCount {
    pub mul: u64,
    pub add: u64,
}

impl OpCount {
    pub fn total(&self) -> u64 {
        self.mul + self.add
    }
}

/// `W⊗ⁿ` for a validated base matrix `W`.
#[derive(Debug, Clone, PartialEq)]
pub struct GttOperator {
    base: BaseMatrix,
    power: usize,
    len: usize,
}

impl GttOperator {
    pub fn new(base: BaseMatrix, power: usize) -> Result<Self> {
        if power == 0 {
            return Err(GttError::BadShape("tensor power must be positive".into()));
        }
        let b = base.dim();
        let len = u32::try_from(power)
            .ok()
            .and_then(|p| b.checked_pow(p))
            .ok_or(GttError::Overflow { base: b, power })?;
        Ok(Self { base, power, len })
    }

    pub fn base(&self) -> &BaseMatrix {
        &self.base
    }

    /// Tensor power `n`.
    pub fn power(&self) -> usize {
        self.power
    }

    /// Transform size `N = bⁿ`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Operator for `(W†)⊗ⁿ = (W⊗ⁿ)†`.
    pub fn adjoint(&self) -> Self {
        Self {
            base: self.base.adjoint(),
            power: self.power,
            len: self.len,
        }
    }

    pub fn apply(&self, x: &ComplexVector) -> Result<ComplexVector> {
        x.check_len(self.len)?;
        let mut data = x.to_vec();
        butterfly(&mut data, &self.base, self.power, None);
        Ok(ComplexVector::new(data).expect("unitary image of a finite vector"))
    }

    pub fn apply_inverse(&self, y: &ComplexVector) -> Result<ComplexVector> {
        self.adjoint().apply(y)
    }

    /// In-place forward transform of a raw buffer.
    pub fn apply_in_place(&self, data: &mut [Complex]) -> Result<()> {
        if data.len() != self.len {
            return Err(GttError::LengthMismatch {
                expected: self.len,
                found: data.len(),
            });
        }
        butterfly(data, &self.base, self.power, None);
        Ok(())
    }

    /// Forward transform that also reports the arithmetic it performed.
    pub fn apply_counted(&self, x: &ComplexVector) -> Result<(ComplexVector, OpCount)> {
        x.check_len(self.len)?;
        let mut data = x.to_vec();
        let mut count = OpCount::default();
        butterfly(&mut data, &self.base, self.power, Some(&mut count));
        Ok((ComplexVector::new(data).expect("finite"), count))
    }

    /// Exact operation count of [`apply_counted`](Self::apply_counted): each of
    /// the `n` passes does `N/b` matvecs of `b²` multiplications and `b(b−1)`
    /// additions.
    pub fn closed_form_count(&self) -> OpCount {
        let (n, len, b) = (self.power as u64, self.len as u64, self.base.dim() as u64);
        OpCount {
            mul: n * len * b,
            add: n * len * (b - 1),
        }
    }

    /// The transform written as the literal recursion: reshape to
    /// `(N/b) × b`, right-multiply by `Wᵀ`, recurse on each column, and
    /// concatenate rows.
    pub fn apply_recursive(&self, x: &ComplexVector) -> Result<ComplexVector> {
        x.check_len(self.len)?;
        let y = fast_gtt_recursive(x, &self.base, self.power);
        Ok(ComplexVector::new(y).expect("finite"))
    }

    /// Explicit `W⊗ⁿ` by iterated Kronecker products.
    pub fn dense_matrix(&self, cap: DenseCap) -> Result<DenseMatrix> {
        cap.check(self.len)?;
        let w = DenseMatrix::from_base(&self.base);
        let mut m = w.clone();
        for _ in 1..self.power {
            m = m.kron(&w);
        }
        Ok(m)
    }

    /// Base-`b` digits of `index`, least significant first.
    pub fn digits(&self, index: usize) -> Result<Vec<usize>> {
        if index >= self.len {
            return Err(GttError::IndexOutOfRange { index, len: self.len });
        }
        let b = self.base.dim();
        let mut rest = index;
        Ok((0..self.power)
            .map(|_| {
                let d = rest % b;
                rest /= b;
                d
            })
            .collect())
    }

    /// Digit-pair occurrence counts `α(i, j)` for the element `(p, q)`.
    pub fn digit_counts(&self, p: usize, q: usize) -> Result<ElementDigitCounts> {
        let b = self.base.dim();
        let (pd, qd) = (self.digits(p)?, self.digits(q)?);
        let mut alpha = vec![0usize; b * b];
        for (i, j) in pd.into_iter().zip(qd) {
            alpha[i * b + j] += 1;
        }
        Ok(ElementDigitCounts { dim: b, alpha })
    }

    /// `G_N(p, q) = Π_{i,j} W[i][j]^{α(i,j)}` without forming the matrix.
    pub fn element(&self, p: usize, q: usize) -> Result<Complex> {
        let counts = self.digit_counts(p, q)?;
        let b = self.base.dim();
        let mut prod = Complex::new(1.0, 0.0);
        for i in 0..b {
            for j in 0..b {
                let a = counts.get(i, j);
                if a > 0 {
                    prod *= self.base.get(i, j).powu(a as u32);
                }
            }
        }
        Ok(prod)
    }
}

/// `α(i, j)`: how many digit positions `k` have `(p_k, q_k) = (i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementDigitCounts {
    dim: usize,
    alpha: Vec<usize>,
}

impl ElementDigitCounts {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.alpha[i * self.dim + j]
    }

    /// Always equals the tensor power `n`.
    pub fn total(&self) -> usize {
        self.alpha.iter().sum()
    }
}

fn butterfly(data: &mut [Complex], w: &BaseMatrix, power: usize, mut count: Option<&mut OpCount>) {
    let b = w.dim();
    let len = data.len();
    let mut fibre = vec![ZERO; b];
    let mut stride = 1;
    for _ in 0..power {
        let block = stride * b;
        for start in (0..len).step_by(block) {
            for base in start..start + stride {
                for (t, slot) in fibre.iter_mut().enumerate() {
                    *slot = data[base + t * stride];
                }
                for i in 0..b {
                    let mut acc = w.get(i, 0) * fibre[0];
                    for (j, v) in fibre.iter().enumerate().skip(1) {
                        acc += w.get(i, j) * v;
                    }
                    data[base + i * stride] = acc;
                }
                if let Some(c) = count.as_deref_mut() {
                    c.mul += (b * b) as u64;
                    c.add += (b * (b - 1)) as u64;
                }
            }
        }
        stride = block;
    }
}

fn fast_gtt_recursive(x: &[Complex], w: &BaseMatrix, power: usize) -> Vec<Complex> {
    let b = w.dim();
    let matvec = |row: &[Complex]| -> Vec<Complex> {
        (0..b)
            .map(|i| {
                let mut acc = w.get(i, 0) * row[0];
                for (j, v) in row.iter().enumerate().skip(1) {
                    acc += w.get(i, j) * v;
                }
                acc
            })
            .collect()
    };
    if power == 1 {
        return matvec(x);
    }
    let rows = x.len() / b;
    // Y = X·Wᵀ, row p of X is x[p·b .. p·b + b]
    let y: Vec<Vec<Complex>> = x.chunks(b).map(matvec).collect();
    let z: Vec<Vec<Complex>> = (0..b)
        .map(|j| {
            let column: Vec<Complex> = (0..rows).map(|p| y[p][j]).collect();
            fast_gtt_recursive(&column, w, power - 1)
        })
        .collect();
    (0..rows).flat_map(|p| z.iter().map(move |col| col[p])).collect()
}

/// Row-major square complex matrix used by the dense oracle paths.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex>,
}

impl DenseMatrix {
    pub fn from_base(w: &BaseMatrix) -> Self {
        Self {
            dim: w.dim(),
            data: w.entries().to_vec(),
        }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex) -> Self {
        let data = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.data[row * self.dim + col]
    }

    /// `self ⊗ other`; `self` indexes the most significant block.
    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let (a, b) = (self.dim, other.dim);
        let dim = a * b;
        DenseMatrix::from_fn(dim, |r, c| self.get(r / b, c / b) * other.get(r % b, c % b))
    }

    pub fn matvec(&self, x: &[Complex]) -> Result<ComplexVector> {
        if x.len() != self.dim {
            return Err(GttError::LengthMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let y = self
            .data
            .chunks(self.dim)
            .map(|row| row.iter().zip(x).map(|(m, v)| m * v).sum())
            .collect();
        ComplexVector::new(y)
    }

    pub fn adjoint(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    /// `max |(M†M − I)_{ij}|`.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let dot: Complex = (0..n).map(|m| self.get(m, i).conj() * self.get(m, j)).sum();
                let t = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - t).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self) -> bool {
        self.unitarity_deviation() <= UNITARITY_TOL
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}
