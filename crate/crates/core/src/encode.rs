//! Function encoding: discretize a real function, then pick the qubit
//! rotation whose tensor-power transform concentrates it best under top-k.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::base::{BaseMatrix, U3Params};
use crate::error::{GttError, Result};
use crate::protocols::compress_hybrid;
use crate::transform::{DenseCap, GttOperator};
use crate::vector::ComplexVector;
use crate::Complex;

/// Samples `f` at the `len` midpoints `(t + ½)/len` and normalizes.
pub fn discretize_midpoints(f: impl Fn(f64) -> f64, len: usize) -> Result<ComplexVector> {
    if len == 0 {
        return Err(GttError::BadShape("cannot discretize onto zero points".into()));
    }
    let samples: Vec<Complex> = (0..len)
        .map(|t| Complex::new(f((t as f64 + 0.5) / len as f64), 0.0))
        .collect();
    ComplexVector::new(samples)?.normalized()
}

fn qubit_count(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(GttError::BadShape(format!(
            "signal length {len} is not a power of two ≥ 2"
        )));
    }
    Ok(len.trailing_zeros() as usize)
}

/// Top-k compression fidelity of `signal` under `u3(params)^{⊗n}`.
pub fn encode_fidelity(params: U3Params, signal: &ComplexVector, k: usize) -> Result<f64> {
    let n = qubit_count(signal.len())?;
    let op = GttOperator::new(BaseMatrix::u3(params)?, n)?;
    Ok(compress_hybrid(signal, &op, k)?.fidelity)
}

/// 16 evenly spaced seeds on `[0, π/4]` plus the Hadamard angle `π/2`.
pub fn default_restarts() -> Vec<f64> {
    let mut seeds: Vec<f64> = (0..16).map(|i| PI / 4.0 * i as f64 / 15.0).collect();
    seeds.push(PI / 2.0);
    seeds
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizeOptions {
    /// Extra seeds for local refinement, in addition to grid local minima.
    pub restarts: Vec<f64>,
    /// Coarse grid resolution over `[0, 2π]`.
    pub grid_points: usize,
    /// Also search `φ` and `λ` by coordinate descent after the θ search.
    pub full_search: bool,
    /// Bracket width at which golden-section refinement stops.
    pub tolerance: f64,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        Self {
            restarts: default_restarts(),
            grid_points: 256,
            full_search: false,
            tolerance: 1e-10,
        }
    }
}

/// Rotation used for the GTT column of a comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum GttChoice {
    Fixed(U3Params),
    Optimize(OptimizeOptions),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EncodingReport {
    pub k: usize,
    pub optimal_params: U3Params,
    pub gtt_fidelity: f64,
    pub hadamard_fidelity: f64,
    /// `None` when the length exceeds the dense cap.
    pub dft_fidelity: Option<f64>,
    pub optimizer_evals: usize,
}

/// Tracks every evaluation so the global best is never lost.
struct Search<'a> {
    signal: &'a ComplexVector,
    k: usize,
    evals: usize,
    best: (U3Params, f64),
}

impl<'a> Search<'a> {
    fn new(signal: &'a ComplexVector, k: usize) -> Self {
        Self {
            signal,
            k,
            evals: 0,
            best: (U3Params::real(0.0), f64::NEG_INFINITY),
        }
    }

    fn eval(&mut self, p: U3Params) -> Result<f64> {
        self.evals += 1;
        let f = encode_fidelity(p, self.signal, self.k)?;
        let (bp, bf) = self.best;
        if f > bf || (f == bf && (p.theta, p.phi, p.lambda) < (bp.theta, bp.phi, bp.lambda)) {
            self.best = (p, f);
        }
        Ok(f)
    }

    /// Golden-section maximization of one coordinate over `[lo, hi]`.
    fn golden(&mut self, lo: f64, hi: f64, tol: f64, at: impl Fn(f64) -> U3Params) -> Result<()> {
        let r = (5f64.sqrt() - 1.0) / 2.0;
        let (mut a, mut b) = (lo, hi);
        let mut x1 = b - r * (b - a);
        let mut x2 = a + r * (b - a);
        let mut f1 = self.eval(at(x1))?;
        let mut f2 = self.eval(at(x2))?;
        while b - a > tol {
            if f1 >= f2 {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - r * (b - a);
                f1 = self.eval(at(x1))?;
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + r * (b - a);
                f2 = self.eval(at(x2))?;
            }
        }
        Ok(())
    }
}

/// Maximizes top-k fidelity over `u3(θ, 0, π)` (and optionally `φ`, `λ`).
///
/// A coarse grid over `[0, 2π]` supplies local-maximum seeds, which are
/// refined together with the configured restarts. The best point seen
/// anywhere is returned, ties going to the smaller angle.
pub fn optimize_theta(signal: &ComplexVector, k: usize, options: &OptimizeOptions) -> Result<(U3Params, f64, usize)> {
    if options.grid_points < 3 {
        return Err(GttError::BadShape("optimizer grid needs at least 3 points".into()));
    }
    if options.tolerance.is_nan() || options.tolerance <= 0.0 {
        return Err(GttError::DomainError(options.tolerance));
    }
    let mut search = Search::new(signal, k);
    let g = options.grid_points;
    let h = TAU / g as f64;
    let grid: Vec<f64> = (0..=g).map(|i| h * i as f64).collect();
    let mut values = Vec::with_capacity(grid.len());
    for &t in &grid {
        values.push(search.eval(U3Params::real(t))?);
    }

    let mut seeds: Vec<f64> = options
        .restarts
        .iter()
        .copied()
        .filter(|t| t.is_finite())
        .map(|t| t.clamp(0.0, TAU))
        .collect();
    for i in 0..grid.len() {
        let left = if i > 0 { values[i - 1] } else { f64::NEG_INFINITY };
        let right = values.get(i + 1).copied().unwrap_or(f64::NEG_INFINITY);
        if values[i] >= left && values[i] >= right {
            seeds.push(grid[i]);
        }
    }
    for s in seeds {
        search.eval(U3Params::real(s))?;
        let (lo, hi) = ((s - h).max(0.0), (s + h).min(TAU));
        search.golden(lo, hi, options.tolerance, U3Params::real)?;
    }

    if options.full_search {
        for _ in 0..4 {
            let p = search.best.0;
            search.golden(0.0, TAU, options.tolerance, |phi| U3Params::new(p.theta, phi, p.lambda))?;
            let p = search.best.0;
            search.golden(0.0, TAU, options.tolerance, |lambda| {
                U3Params::new(p.theta, p.phi, lambda)
            })?;
            let p = search.best.0;
            let (lo, hi) = ((p.theta - h).max(0.0), (p.theta + h).min(TAU));
            search.golden(lo, hi, options.tolerance, |theta| U3Params::new(theta, p.phi, p.lambda))?;
        }
    }
    let (params, fid) = search.best;
    Ok((params, fid, search.evals))
}

/// GTT versus Hadamard versus single-block DFT at the same `k`.
pub fn compare_transforms(signal: &ComplexVector, k: usize, choice: &GttChoice) -> Result<EncodingReport> {
    let n = qubit_count(signal.len())?;
    let (optimal_params, gtt_fidelity, optimizer_evals) = match choice {
        GttChoice::Fixed(p) => (*p, encode_fidelity(*p, signal, k)?, 0),
        GttChoice::Optimize(opts) => optimize_theta(signal, k, opts)?,
    };
    let hadamard = GttOperator::new(BaseMatrix::hadamard(), n)?;
    let hadamard_fidelity = compress_hybrid(signal, &hadamard, k)?.fidelity;
    let dft_fidelity = if signal.len() <= DenseCap::from_env().0 {
        let dft = GttOperator::new(BaseMatrix::dft(signal.len())?, 1)?;
        Some(compress_hybrid(signal, &dft, k)?.fidelity)
    } else {
        None
    };
    Ok(EncodingReport {
        k,
        optimal_params,
        gtt_fidelity,
        hadamard_fidelity,
        dft_fidelity,
        optimizer_evals,
    })
}
