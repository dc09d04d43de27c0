//! Structural class labels and induced pattern search.

use wmp::patterns::catalog;
use wmp::{classify_shape, find_induced, parse_expr};

fn main() -> wmp::Result<()> {
    for text in ["K1", "C5", "K1,3", "K2,3", "K3+K2", "paw", "C6+K4", "P4"] {
        let g = parse_expr(text)?;
        let labels: Vec<String> = classify_shape(&g).iter().map(|l| l.to_string()).collect();
        println!("{text:<6} {}", labels.join(", "));
    }

    let host = parse_expr("C5+K1,3")?;
    println!("\ninduced patterns in C5+K1,3:");
    for p in catalog() {
        if let Some(s) = find_induced(&host, &p.graph) {
            println!("  {:<10} at {:?}", p.name, s.to_vec());
        }
    }
    Ok(())
}
