//! C5 x C5 is the line graph of a bipartite graph on ten vertices.

use wmp::{parse_expr, weak_modular_product, Graph};

/// Edge of `M` assigned to product vertex `(x, y)`.
const TABLE: [[(usize, usize); 5]; 5] = [
    [(0, 1), (5, 6), (2, 8), (3, 9), (4, 7)],
    [(6, 7), (0, 2), (5, 9), (4, 8), (1, 3)],
    [(2, 3), (7, 9), (0, 4), (1, 5), (6, 8)],
    [(8, 9), (3, 4), (1, 7), (0, 6), (2, 5)],
    [(4, 5), (1, 8), (3, 6), (2, 7), (0, 9)],
];

fn main() -> wmp::Result<()> {
    let m = Graph::build(10, TABLE.iter().flatten().copied())?;
    let side = m.bipartition().expect("M is bipartite");
    println!(
        "M: {} vertices, {} edges, parts {:?}",
        m.order(),
        m.edge_count(),
        side.to_vec()
    );

    let (line, edges) = m.line_graph()?;
    let p = weak_modular_product(&parse_expr("C5")?, &parse_expr("C5")?)?;
    let map: Vec<usize> = (0..p.order())
        .map(|v| {
            let (x, y) = p.coords(v);
            let (s, t) = TABLE[x][y];
            edges
                .iter()
                .position(|&e| e == (s.min(t), s.max(t)))
                .unwrap()
        })
        .collect();
    println!(
        "table map is an isomorphism C5 x C5 -> L(M): {}",
        p.is_isomorphism(&line, &map)
    );
    Ok(())
}
