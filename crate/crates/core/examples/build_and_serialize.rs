//! Build graphs from expressions and round-trip them through graph6.
//!
//!     cargo run --example build_and_serialize -- "K2,3+P4"

use wmp::{encode_graph6, parse_expr, parse_graph6};

fn main() -> wmp::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let exprs = if args.is_empty() {
        vec![
            "C5".to_string(),
            "3*K2".into(),
            "K2,3+E1".into(),
            "dart".into(),
        ]
    } else {
        args
    };
    for text in &exprs {
        let g = parse_expr(text)?;
        let code = encode_graph6(&g);
        assert_eq!(parse_graph6(&code)?, g);
        println!(
            "{text:<10} n={:<2} m={:<2} graph6={code}",
            g.order(),
            g.edge_count()
        );
        println!("           edges {:?}", g.edges().collect::<Vec<_>>());
    }

    match parse_expr("K2+ K") {
        Err(e) => println!("bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
