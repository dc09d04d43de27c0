//! The odd hole / odd antihole oracle with re-checkable witnesses.

use wmp::{is_perfect_oracle, parse_expr, weak_modular_product, Graph, HoleKind};

fn report(name: &str, g: &Graph) {
    let v = is_perfect_oracle(g);
    match &v.witness {
        None => println!("{name:<22} perfect"),
        Some(w) => {
            let kind = match w.kind {
                HoleKind::Hole => "hole",
                HoleKind::Antihole => "antihole",
            };
            assert!(w.verify(g));
            println!("{name:<22} imperfect, odd {kind} {:?}", w.cycle);
        }
    }
}

fn main() -> wmp::Result<()> {
    for text in ["P4", "C5", "C6", "C7", "K3,3", "paw"] {
        report(text, &parse_expr(text)?);
    }
    report("complement of C7", &parse_expr("C7")?.complement());

    for (a, b) in [
        ("C5", "C5"),
        ("C5", "K3"),
        ("K2+E1", "diamond"),
        ("P4", "K1,3"),
    ] {
        let p = weak_modular_product(&parse_expr(a)?, &parse_expr(b)?)?;
        report(&format!("{a} x {b}"), &p);
    }
    Ok(())
}
