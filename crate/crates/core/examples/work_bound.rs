//! Instrumented arithmetic counts of the fast transform against 4·N·b·log_b N.

fn main() -> gtt::Result<()> {
    let report = gtt::cli::bench(&[2, 3, 5], 1, 1 << 16, true)?;
    println!(
        "{:>2} {:>3} {:>7} {:>10} {:>10} {:>7} {:>9}",
        "b", "n", "N", "ops", "bound", "ratio", "seconds"
    );
    for r in &report.rows {
        println!(
            "{:>2} {:>3} {:>7} {:>10} {:>10} {:>7} {:>9.6}",
            r.b,
            r.n,
            r.len,
            r.total,
            r.bound,
            r.ratio.map_or("-".into(), |x| format!("{x:.3}")),
            r.wall_seconds.unwrap_or(0.0)
        );
    }
    println!("all within bound: {}", report.all_within_bound);
    Ok(())
}
