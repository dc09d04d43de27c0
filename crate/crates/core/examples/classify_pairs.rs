//! Decide perfection of products from the factors alone and compare with
//! the oracle on the built product.
//!
//!     cargo run --example classify_pairs -- C5 P4

use wmp::{classify, explain, is_perfect_oracle, parse_expr, weak_modular_product};

fn main() -> wmp::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = if args.len() == 2 {
        vec![(args[0].clone(), args[1].clone())]
    } else {
        [
            ("C5", "C5"),
            ("C5", "K3"),
            ("K3+K2", "K1,4+K2+K1"),
            ("P3", "P5"),
            ("K2,3", "K3,3"),
            ("E3", "K3,3"),
            ("K2", "C7"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
    };

    for (a, b) in &pairs {
        let (g, h) = (parse_expr(a)?, parse_expr(b)?);
        let c = classify(&g, &h);
        let oracle = if g.order() * h.order() <= 42 {
            let v = is_perfect_oracle(weak_modular_product(&g, &h)?.graph());
            if v.perfect {
                "perfect"
            } else {
                "imperfect"
            }
        } else {
            "skipped"
        };
        println!("{a} x {b}: {} (oracle: {oracle})", c.verdict);
        println!("  {}", explain(&c));
    }
    Ok(())
}
