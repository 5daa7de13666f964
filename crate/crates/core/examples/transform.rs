//! Forward and inverse transforms with three different base matrices, checked
//! against the dense Kronecker power.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

use gtt::{BaseMatrix, ComplexVector, DenseCap, GttOperator, U3Params};

fn main() -> gtt::Result<()> {
    let x = ComplexVector::from_real(&[0.9, 0.1, -0.3, 0.2, 0.5, -0.4, 0.0, 0.7])?.normalized()?;
    let bases = [
        ("hadamard", BaseMatrix::hadamard()),
        (
            "u3(pi/4, pi/3, pi/6)",
            BaseMatrix::u3(U3Params::new(FRAC_PI_4, FRAC_PI_3, FRAC_PI_6))?,
        ),
    ];
    for (name, w) in bases {
        let op = GttOperator::new(w, 3)?;
        let y = op.apply(&x)?;
        let dense = op.dense_matrix(DenseCap::default())?.matvec(&x)?;
        let back = op.apply_inverse(&y)?;
        println!(
            "{name}: |y| = {:.12}, fast vs dense {:.1e}, round trip {:.1e}",
            y.norm(),
            y.max_abs_diff(&dense),
            back.max_abs_diff(&x)
        );
    }

    // qutrit DFT base: F_3 ⊗ F_3 on a length-9 vector
    let op = GttOperator::new(BaseMatrix::dft(3)?, 2)?;
    let y = op.apply(&ComplexVector::basis(9, 0)?)?;
    println!(
        "dft:3, n=2 on e0 -> {:?}",
        y.iter().map(|z| format!("{:.4}", z.re)).collect::<Vec<_>>()
    );
    println!("G[4][5] = {:.4}", op.element(4, 5)?);
    Ok(())
}
