//! Continuous basis functions on [0, 1) and a series expansion of a sampled
//! function.

use gtt::basis::{eval_normalized_basis, gram_matrix, series_coefficients};
use gtt::{BaseMatrix, Complex, ComplexVector, DenseCap, GttOperator, U3Params};

fn main() -> gtt::Result<()> {
    let op = GttOperator::new(BaseMatrix::u3(U3Params::real(0.6))?, 3)?;

    println!("phi_j(x) at x = 0.05, 0.55, 0.95");
    for j in 0..op.len() {
        let vals: Vec<String> = [0.05, 0.55, 0.95]
            .iter()
            .map(|&x| eval_normalized_basis(&op, j, x).map(|v| format!("{:+.4}", v.re)))
            .collect::<gtt::Result<_>>()?;
        println!("  j={j}: {}", vals.join("  "));
    }

    let gram = gram_matrix(&op, DenseCap::default())?;
    let identity = gtt::DenseMatrix::from_fn(op.len(), |i, j| Complex::new(f64::from(u8::from(i == j)), 0.0));
    println!("max |Gram - I| = {:.1e}", gram.max_abs_diff(&identity));

    // 64 samples of a smooth function, 8 per base interval
    let m = 64;
    let samples = ComplexVector::new(
        (0..m)
            .map(|t| Complex::new(((t as f64 + 0.5) / m as f64 * 6.0).sin(), 0.0))
            .collect(),
    )?;
    let series = series_coefficients(&op, &samples)?;
    println!(
        "coefficients: {:?}",
        series
            .coefficients()
            .iter()
            .map(|c| format!("{:+.4}", c.re))
            .collect::<Vec<_>>()
    );
    for x in [0.1f64, 0.4, 0.8] {
        println!(
            "g({x}) = {:+.4}, series = {:+.4}",
            (6.0 * x).sin(),
            series.reconstruct(x)?.re
        );
    }
    Ok(())
}
