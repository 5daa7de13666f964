//! Statevector simulation of the fully quantum compression protocol with a
//! known support, compared against the hybrid pipeline.

use gtt::protocols::{compress_fully_quantum, compress_hybrid_with, SparseSelection};
use gtt::{BaseMatrix, ComplexVector, GttOperator, U3Params};

fn main() -> gtt::Result<()> {
    let op = GttOperator::new(BaseMatrix::u3(U3Params::new(1.1, 0.4, 2.0))?, 4)?;
    let state = ComplexVector::new(
        (0..16)
            .map(|i| gtt::Complex::new((i as f64 * 0.7).cos(), (i as f64 * 0.3).sin() * 0.5))
            .collect(),
    )?
    .normalized()?;
    let support = vec![0, 3, 6, 9, 12];

    let spectrum = op.apply(&state)?;
    let selection = SparseSelection::from_indices(&spectrum, support.clone())?;
    let q = compress_fully_quantum(&state, &op, &selection)?;
    let h = compress_hybrid_with(&state, &op, &support)?;

    println!(
        "success probability {:.6} (selection mass {:.6})",
        q.success_probability,
        selection.mass()
    );
    println!(
        "transmitted vs hybrid: {:.1e}",
        q.transmitted.max_abs_diff(&h.compressed)
    );
    println!(
        "reconstructed vs hybrid: {:.1e}",
        q.reconstructed.max_abs_diff(&h.reconstructed)
    );
    println!("fidelity {:.6}", h.fidelity);
    Ok(())
}
