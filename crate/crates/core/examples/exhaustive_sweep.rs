//! Classifier against oracle on every ordered pair of small graphs.
//!
//!     cargo run --release --example exhaustive_sweep -- 6

use wmp::sweep::sweep;

fn main() -> wmp::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let start = std::time::Instant::now();
    let r = sweep(max_n)?;
    println!(
        "{} classes, {} pairs, {} perfect products, in {:.2?}",
        r.classes,
        r.pairs,
        r.oracle_perfect(),
        start.elapsed()
    );
    for (row, [perfect, imperfect]) in r.counts.iter().enumerate() {
        let label = if row < 10 {
            format!("case {}", row + 1)
        } else {
            "no case".into()
        };
        println!("  {label:<8} {perfect:>6} perfect {imperfect:>6} imperfect");
    }
    println!(
        "mismatches {}, asymmetric {}",
        r.mismatches.len(),
        r.asymmetric.len()
    );
    if !r.passed() {
        std::process::exit(1);
    }
    Ok(())
}
