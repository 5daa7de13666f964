//! Encode a sampled function with the best qubit rotation and compare with
//! the Hadamard and single-block DFT transforms.

use gtt::encode::{compare_transforms, discretize_midpoints, GttChoice, OptimizeOptions};
use gtt::signals;

fn main() -> gtt::Result<()> {
    let smooth = discretize_midpoints(|x| (-4.0 * (x - 0.3).powi(2)).exp() + 0.2 * x, 32)?;
    let table2 = signals::table2_signal();
    for (name, signal) in [("gaussian bump, N=32", smooth), ("table2 polynomial, N=16", table2)] {
        println!("{name}");
        for k in [2, 4, 8] {
            let r = compare_transforms(&signal, k, &GttChoice::Optimize(OptimizeOptions::default()))?;
            println!(
                "  k={k:>2}: theta {:.4}  gtt {:.4}  hadamard {:.4}  dft {:.4}  ({} evals)",
                r.optimal_params.theta,
                r.gtt_fidelity,
                r.hadamard_fidelity,
                r.dft_fidelity.unwrap_or(f64::NAN),
                r.optimizer_evals
            );
        }
    }
    Ok(())
}
