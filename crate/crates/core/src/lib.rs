//! Generalized tensor transforms.
//!
//! A generalized tensor transform (GTT) is the `n`-fold Kronecker power
//! `W ⊗ W ⊗ … ⊗ W` of an arbitrary `b × b` unitary base matrix `W`, acting on
//! vectors of length `N = bⁿ`. The Walsh-Hadamard transform (`W = H`) and the
//! multi-dimensional DFT (`W = F_b`) are special cases.
//!
//! The crate provides:
//!
//! - [`base`]: base-matrix construction and validation (`u3`, DFT, Hadamard).
//! - [`transform`]: the fast `O(N·b·log_b N)` butterfly transform, its inverse,
//!   the dense Kronecker oracle and the closed-form element formula.
//! - [`basis`]: continuous basis functions on `[0, 1)`, series expansion and
//!   the sampled matrix.
//! - [`protocols`]: statevector simulation of sparse compression and
//!   natural-order low/high-pass filtering.
//! - [`encode`]: function encoding with a derivative-free angle optimizer.
//! - [`io`] and [`cli`]: vector files, built-in signals and the `gtt` command.
//!
//! ```
//! use gtt::{BaseMatrix, ComplexVector, GttOperator};
//!
//! let op = GttOperator::new(BaseMatrix::hadamard(), 3).unwrap();
//! let x = ComplexVector::basis(8, 0).unwrap();
//! let y = op.apply(&x).unwrap();
//! assert!(y.iter().all(|v| (v.re - 8f64.sqrt().recip()).abs() < 1e-15));
//! ```

pub mod base;
pub mod basis;
pub mod cli;
pub mod encode;
pub mod error;
pub mod io;
pub mod protocols;
pub mod signals;
pub mod transform;
pub mod vector;

pub use base::{BaseMatrix, U3Params, UNITARITY_TOL};
pub use error::{GttError, Result};
pub use transform::{DenseCap, DenseMatrix, ElementDigitCounts, GttOperator, OpCount};
pub use vector::ComplexVector;

/// Complex scalar used for every amplitude.
pub type Complex = num_complex::Complex64;
