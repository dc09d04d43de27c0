//! The small named graphs: paw, diamond, cricket, dart, hourglass.

use crate::graph::Graph;

fn fixed(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::build(n, edges.iter().copied()).expect("fixed named graph is valid")
}

/// Triangle `0 1 2` with a pendant vertex `3` on `0`. Also written `Y`.
pub fn paw() -> Graph {
    fixed(4, &[(0, 1), (0, 2), (1, 2), (0, 3)])
}

/// `K_4` minus the edge `2 3`, i.e. `K_{1,1,2}`.
pub fn diamond() -> Graph {
    fixed(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Triangle `0 1 2` with two pendant vertices `3`, `4` on `0`.
pub fn cricket() -> Graph {
    fixed(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)])
}

/// Diamond on `0..4` with a pendant vertex `4` on the degree-3 vertex `0`.
pub fn dart() -> Graph {
    fixed(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)])
}

/// Two triangles sharing vertex `0`.
pub fn hourglass() -> Graph {
    fixed(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

/// Looks up a named graph as spelled in the expression grammar.
pub fn by_name(name: &str) -> Option<Graph> {
    Some(match name {
        "paw" | "Y" => paw(),
        "diamond" => diamond(),
        "cricket" => cricket(),
        "dart" => dart(),
        "hourglass" => hourglass(),
        _ => return None,
    })
}

pub const NAMES: &[&str] = &["paw", "Y", "diamond", "cricket", "dart", "hourglass"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for (g, n, m) in [
            (paw(), 4, 4),
            (diamond(), 4, 5),
            (cricket(), 5, 5),
            (dart(), 5, 6),
            (hourglass(), 5, 6),
        ] {
            assert_eq!((g.order(), g.edge_count()), (n, m));
            assert!(g.is_connected());
        }
        let mut degs = dart().degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 2, 2, 3, 4]);
        assert_eq!(by_name("Y"), Some(paw()));
        assert_eq!(by_name("kite"), None);
    }
}
