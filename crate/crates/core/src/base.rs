//! Unitary base matrices.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{GttError, Result};
use crate::Complex;

/// Maximum entry of `|W†W − I|` accepted for a base matrix.
pub const UNITARITY_TOL: f64 = 1e-10;

const DFT_CHECK_MAX: usize = 64;

/// Angles of the general single-qubit unitary
/// `[[cos(θ/2), −e^{iλ} sin(θ/2)], [e^{iφ} sin(θ/2), e^{i(φ+λ)} cos(θ/2)]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct U3Params {
    pub theta: f64,
    pub phi: f64,
    pub lambda: f64,
}

impl U3Params {
    pub const fn new(theta: f64, phi: f64, lambda: f64) -> Self {
        Self { theta, phi, lambda }
    }

    /// The real, self-inverse family `(θ, 0, π)`; `θ = π/2` is the Hadamard gate.
    pub const fn real(theta: f64) -> Self {
        Self::new(theta, 0.0, PI)
    }

    pub const HADAMARD: U3Params = U3Params::real(PI / 2.0);
}

/// A validated `b × b` unitary matrix, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseMatrix {
    dim: usize,
    entries: Vec<Complex>,
}

impl BaseMatrix {
    /// Validates shape, finiteness and unitarity of a row-major `b × b` array.
    pub fn new(b: usize, entries: Vec<Complex>) -> Result<Self> {
        if b < 2 {
            return Err(GttError::BadShape(format!("base dimension {b} < 2")));
        }
        if entries.len() != b * b {
            return Err(GttError::BadShape(format!(
                "expected {} entries for a {b}x{b} matrix, found {}",
                b * b,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(GttError::NonFinite(pos));
        }
        let m = Self { dim: b, entries };
        let deviation = m.unitarity_deviation();
        if deviation > UNITARITY_TOL {
            return Err(GttError::NotUnitary { deviation });
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self> {
        let b = rows.len();
        if rows.iter().any(|r| r.len() != b) {
            return Err(GttError::BadShape("rows must all have length b".into()));
        }
        Self::new(b, rows.concat())
    }

    pub fn identity(b: usize) -> Result<Self> {
        let mut entries = vec![Complex::new(0.0, 0.0); b * b];
        for i in 0..b {
            entries[i * b + i] = Complex::new(1.0, 0.0);
        }
        Self::new(b, entries)
    }

    /// `(1/√2)[[1, 1], [1, −1]]`.
    pub fn hadamard() -> Self {
        let h = Complex::new(FRAC_1_SQRT_2, 0.0);
        Self {
            dim: 2,
            entries: vec![h, h, h, -h],
        }
    }

    pub fn u3(params: U3Params) -> Result<Self> {
        let U3Params { theta, phi, lambda } = params;
        if !(theta.is_finite() && phi.is_finite() && lambda.is_finite()) {
            return Err(GttError::NonFinite(0));
        }
        let (s, c) = (theta / 2.0).sin_cos();
        let entries = vec![
            Complex::new(c, 0.0),
            -Complex::from_polar(s, lambda),
            Complex::from_polar(s, phi),
            Complex::from_polar(c, phi + lambda),
        ];
        Self::new(2, entries)
    }

    /// Orthonormal DFT matrix `F[j][k] = e^{+2πi·jk/b} / √b`.
    pub fn dft(b: usize) -> Result<Self> {
        if b < 2 {
            return Err(GttError::BadShape(format!("base dimension {b} < 2")));
        }
        let scale = (b as f64).sqrt().recip();
        let entries = (0..b * b)
            .map(|idx| {
                let (j, k) = (idx / b, idx % b);
                // reduce jk mod b before scaling to keep the angle small
                let angle = 2.0 * PI * ((j * k) % b) as f64 / b as f64;
                Complex::from_polar(scale, angle)
            })
            .collect();
        if b <= DFT_CHECK_MAX {
            Self::new(b, entries)
        } else {
            // unitary by construction; the O(b³) check dominates for large b
            Ok(Self { dim: b, entries })
        }
    }

    /// Local dimension `b`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Complex>> {
        self.entries.chunks(self.dim).map(<[Complex]>::to_vec).collect()
    }

    /// Conjugate transpose; unitary whenever `self` is.
    pub fn adjoint(&self) -> Self {
        let b = self.dim;
        let entries = (0..b * b)
            .map(|idx| self.entries[(idx % b) * b + idx / b].conj())
            .collect();
        Self { dim: b, entries }
    }

    /// `max |(W†W − I)_{ij}|`.
    pub fn unitarity_deviation(&self) -> f64 {
        let b = self.dim;
        let mut worst = 0.0f64;
        for i in 0..b {
            for j in 0..b {
                let dot: Complex = (0..b).map(|m| self.get(m, i).conj() * self.get(m, j)).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }

    /// True when `W² = I` within the unitarity tolerance (e.g. real reflections).
    pub fn is_self_inverse(&self) -> bool {
        let b = self.dim;
        (0..b).all(|i| {
            (0..b).all(|j| {
                let sq: Complex = (0..b).map(|m| self.get(i, m) * self.get(m, j)).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                (sq - target).norm() <= UNITARITY_TOL
            })
        })
    }
}
