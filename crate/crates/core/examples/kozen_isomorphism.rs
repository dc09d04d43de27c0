//! Graph isomorphism through a maximum clique of the weak modular product.

use wmp::{
    are_isomorphic_bruteforce, iso_via_product, max_clique, parse_expr, weak_modular_product,
};

fn main() -> wmp::Result<()> {
    let c6 = parse_expr("C6")?;
    let shuffled = c6.relabel(&[3, 0, 4, 1, 5, 2])?;
    for (name, g, h) in [
        ("C6 vs relabelled C6", c6.clone(), shuffled),
        ("C6 vs 2*K3", c6.clone(), parse_expr("2*K3")?),
        ("P4 vs K1,3", parse_expr("P4")?, parse_expr("K1,3")?),
        ("paw vs paw", parse_expr("paw")?, parse_expr("paw")?),
    ] {
        let n = g.order();
        let omega = max_clique(weak_modular_product(&g, &h)?.graph()).size;
        let via = iso_via_product(&g, &h)?;
        let brute = are_isomorphic_bruteforce(&g, &h)?;
        assert_eq!(via.is_some(), brute.is_some());
        match via {
            Some(w) => {
                assert!(w.verify(&g, &h));
                println!("{name}: clique {omega} = n, mapping {:?}", w.mapping);
            }
            None => println!("{name}: clique {omega} < n = {n}, not isomorphic"),
        }
    }
    Ok(())
}
