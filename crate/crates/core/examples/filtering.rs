//! Natural-order low/high-pass filtering of a 16-point signal, plus a custom
//! spectral hook that attenuates the high band instead of discarding it.

use gtt::protocols::{filter_natural, filter_natural_with};
use gtt::{signals, BaseMatrix, GttOperator, U3Params};
use std::f64::consts::PI;

fn main() -> gtt::Result<()> {
    let state = signals::named("filter16").expect("built-in").normalized()?;
    let op = GttOperator::new(BaseMatrix::u3(U3Params::real(PI / 4.0))?, 4)?;
    let f = filter_natural(&state, &op, 4)?;

    println!("{:>3} {:>8} {:>8} {:>8}", "i", "input", "low", "high");
    for i in 0..16 {
        println!(
            "{i:>3} {:>8.4} {:>8.4} {:>8.4}",
            state[i].re, f.low_branch[i].re, f.high_branch[i].re
        );
    }
    println!(
        "energy: low {:.4}, high {:.4}",
        f.low_branch.norm_sqr(),
        f.high_branch.norm_sqr()
    );

    let damped = filter_natural_with(&state, &op, 4, |_, high| high.iter_mut().for_each(|z| *z *= 0.5))?;
    println!(
        "high-band energy after halving amplitudes: {:.4}",
        damped.high_branch.norm_sqr()
    );
    Ok(())
}
