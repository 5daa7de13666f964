//! Finite, non-empty complex amplitude vectors.

use std::ops::Deref;

use crate::error::{GttError, Result};
use crate::Complex;

/// Tolerance on `‖x‖₂ − 1` used wherever a unit-norm state is required.
pub const NORM_TOL: f64 = 1e-9;

/// A non-empty vector of finite complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector(Vec<Complex>);

impl ComplexVector {
    pub fn new(data: Vec<Complex>) -> Result<Self> {
        if data.is_empty() {
            return Err(GttError::BadShape("empty vector".into()));
        }
        if let Some(pos) = data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(GttError::NonFinite(pos));
        }
        Ok(Self(data))
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex::new(v, 0.0)).collect())
    }

    /// Unit vector `e_index` of the given length.
    pub fn basis(len: usize, index: usize) -> Result<Self> {
        if index >= len {
            return Err(GttError::IndexOutOfRange { index, len });
        }
        let mut data = vec![Complex::new(0.0, 0.0); len];
        data[index] = Complex::new(1.0, 0.0);
        Ok(Self(data))
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![Complex::new(0.0, 0.0); len])
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Complex> {
        self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Returns the vector scaled to unit Euclidean norm.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(GttError::ZeroVector);
        }
        Ok(Self(self.0.iter().map(|z| z / norm).collect()))
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex> {
        self.check_len(other.len())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum())
    }

    /// Max-norm of the difference; panics on length mismatch.
    pub fn max_abs_diff(&self, other: &[Complex]) -> f64 {
        assert_eq!(self.len(), other.len(), "length mismatch");
        self.0
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub(crate) fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(GttError::LengthMismatch {
                expected,
                found: self.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_unit_norm(&self) -> Result<()> {
        let norm = self.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(GttError::NotNormalized { norm });
        }
        Ok(())
    }
}

impl Deref for ComplexVector {
    type Target = [Complex];

    fn deref(&self) -> &[Complex] {
        &self.0
    }
}

impl TryFrom<Vec<Complex>> for ComplexVector {
    type Error = GttError;

    fn try_from(data: Vec<Complex>) -> Result<Self> {
        Self::new(data)
    }
}

impl From<ComplexVector> for Vec<Complex> {
    fn from(v: ComplexVector) -> Self {
        v.0
    }
}
