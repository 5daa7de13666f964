//! Top-k sparse compression of a 3-qubit state under three transforms.

use gtt::encode::{compare_transforms, GttChoice};
use gtt::protocols::{classical_encode, compress_hybrid, reconstruct_from_classical};
use gtt::{signals, BaseMatrix, GttOperator, U3Params};
use std::f64::consts::PI;

fn main() -> gtt::Result<()> {
    let state = signals::named("s1").expect("built-in").normalized()?;
    let op = GttOperator::new(BaseMatrix::u3(U3Params::new(PI / 4.0, PI / 3.0, PI / 6.0))?, 3)?;

    let r = compress_hybrid(&state, &op, 2)?;
    println!(
        "kept {:?}, fidelity {:.6}, discarded {:.2e}",
        r.selection.indices(),
        r.fidelity,
        r.discarded_norm
    );
    println!("compressed amplitudes: {:.4?}", r.compressed.as_slice());

    // the classical pipeline sends S_k and the raw amplitudes; renormalizing
    // on receipt gives the hybrid reconstruction
    let (sel, amps) = classical_encode(&state, &op, 2)?;
    let rebuilt = reconstruct_from_classical(&sel, &amps.normalized()?, &op)?;
    println!(
        "classical vs hybrid reconstruction: {:.1e}",
        rebuilt.max_abs_diff(&r.reconstructed)
    );

    for name in ["s1", "s2", "s3"] {
        let s = signals::named(name).expect("built-in").normalized()?;
        let rep = compare_transforms(&s, 2, &GttChoice::Fixed(U3Params::new(PI / 4.0, PI / 3.0, PI / 6.0)))?;
        println!(
            "{name}: gtt {:.4}  hadamard {:.4}  dft {:.4}",
            rep.gtt_fidelity,
            rep.hadamard_fidelity,
            rep.dft_fidelity.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
