//! Weak modular and tensor products, and how they relate.

use wmp::{parse_expr, tensor_product, weak_modular_product};

fn main() -> wmp::Result<()> {
    let g = parse_expr("P3")?;
    let h = parse_expr("K2+E1")?;
    let p = weak_modular_product(&g, &h)?;
    let t = tensor_product(&g, &h)?;
    let tc = tensor_product(&g.complement(), &h.complement())?;

    println!(
        "P3 has {} edges, K2+E1 has {}",
        g.edge_count(),
        h.edge_count()
    );
    println!(
        "product: {} vertices, {} edges = {} (tensor) + {} (tensor of complements)",
        p.order(),
        p.edge_count(),
        t.edge_count(),
        tc.edge_count()
    );
    for (u, v) in p.edges() {
        let (a, b) = (p.coords(u), p.coords(v));
        let kind = if g.adjacent(a.0, b.0) {
            "edge/edge"
        } else {
            "non-edge/non-edge"
        };
        println!("  {a:?} -- {b:?}  {kind}");
    }

    // the product only sees which pairs agree, so complementing both factors changes nothing
    let q = weak_modular_product(&g.complement(), &h.complement())?;
    println!(
        "product of complements is identical: {}",
        p.graph() == q.graph()
    );
    Ok(())
}
