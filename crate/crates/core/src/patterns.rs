//! Induced-subgraph search against a catalog of small named graphs, and
//! recognizers for the graph classes that appear in the perfection
//! classification of weak modular products.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::expr::parse_expr;
use crate::graph::{Bits, Graph, VertexSet};
use crate::named;

/// A named small graph used as an induced-subgraph query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    /// Catalog name; every name is also a valid graph expression.
    pub name: &'static str,
    pub graph: Graph,
}

const CATALOG_NAMES: &[&str] = &[
    "P3",
    "P4",
    "P5",
    "C4",
    "C5",
    "K3",
    "2*K2",
    "3*K2",
    "K2+E1",
    "K2+E2",
    "P3+E1",
    "P4+E1",
    "K2,2+E1",
    "K1,3",
    "diamond",
    "paw",
    "cricket",
    "dart",
    "hourglass",
    "diamond+E1",
    "paw+E1",
    "C4+E1",
];

/// The catalog, built once.
pub fn catalog() -> &'static [Pattern] {
    static CATALOG: OnceLock<Vec<Pattern>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        CATALOG_NAMES
            .iter()
            .map(|&name| Pattern {
                name,
                graph: parse_expr(name).expect("catalog names are valid expressions"),
            })
            .collect()
    })
}

/// Looks up a catalog entry by name.
pub fn pattern(name: &str) -> Option<&'static Pattern> {
    catalog().iter().find(|p| p.name == name)
}

/// Finds a vertex set of `g` inducing a copy of `p`. Pattern vertices are
/// matched in index order against candidate host vertices in ascending
/// order, so the witness is deterministic.
pub fn find_induced(g: &Graph, p: &Graph) -> Option<VertexSet> {
    if p.order() > g.order() {
        return None;
    }
    let mut assigned = Vec::with_capacity(p.order());
    extend_match(g, p, &mut assigned, 0).then(|| assigned.iter().copied().collect())
}

fn extend_match(g: &Graph, p: &Graph, assigned: &mut Vec<usize>, used: u64) -> bool {
    let u = assigned.len();
    if u == p.order() {
        return true;
    }
    let need = p.degree(u);
    // the host vertex must be adjacent to the images of u's earlier
    // neighbours and non-adjacent to the rest
    let mut allowed = g.vertices().mask() & !used;
    for (w, &img) in assigned.iter().enumerate() {
        if p.adjacent(u, w) {
            allowed &= g.row(img);
        } else {
            allowed &= !g.row(img);
        }
    }
    for v in Bits::new(allowed) {
        if g.degree(v) < need {
            continue;
        }
        assigned.push(v);
        if extend_match(g, p, assigned, used | 1 << v) {
            return true;
        }
        assigned.pop();
    }
    false
}

pub fn contains_induced(g: &Graph, p: &Graph) -> bool {
    find_induced(g, p).is_some()
}

fn component_graphs(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    g.connected_components()
        .into_iter()
        .map(|c| g.induced_subgraph(c).expect("components are nonempty"))
}

pub fn is_clique(g: &Graph) -> bool {
    g.is_complete()
}

pub fn is_edgeless(g: &Graph) -> bool {
    g.is_edgeless()
}

pub fn is_bipartite(g: &Graph) -> bool {
    g.is_bipartite()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    !g.has_triangle()
}

/// Every component is a complete graph.
pub fn is_disjoint_union_of_cliques(g: &Graph) -> bool {
    g.connected_components()
        .into_iter()
        .all(|c| c.iter().all(|v| g.row(v) | 1 << v == c.mask()))
}

/// Complement is a disjoint union of cliques. Admits `K_1` and `E_n`
/// (one partite class).
pub fn is_complete_multipartite(g: &Graph) -> bool {
    is_disjoint_union_of_cliques(&g.complement())
}

/// `K_{m,n}` with `m, n >= 1`.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    if g.order() < 2 || !g.is_connected() {
        return false;
    }
    match g.bipartition() {
        Some(side) => {
            let a = side.len();
            g.edge_count() == a * (g.order() - a)
        }
        None => false,
    }
}

/// `K_{1,r}` for `r >= 1`, or `K_1`.
pub fn is_star(g: &Graph) -> bool {
    g.order() == 1 || is_nontrivial_star(g)
}

/// `K_{1,r}` for `r >= 1`.
pub fn is_nontrivial_star(g: &Graph) -> bool {
    is_complete_bipartite(g) && g.edge_count() == g.order() - 1
}

/// Every component is a clique or a star.
pub fn is_disjoint_union_of_stars_and_cliques(g: &Graph) -> bool {
    component_graphs(g).all(|c| c.is_complete() || is_star(&c))
}

/// `K_r ⊎ K_s` for `r, s >= 1`: exactly two components, both complete.
pub fn is_two_cliques(g: &Graph) -> bool {
    g.connected_components().len() == 2 && is_disjoint_union_of_cliques(g)
}

/// `K_r ⊎ K_1` for `r >= 1`.
pub fn is_clique_plus_isolated(g: &Graph) -> bool {
    let comps = g.connected_components();
    comps.len() == 2 && comps.iter().any(|c| c.len() == 1) && is_disjoint_union_of_cliques(g)
}

pub fn is_paw_free(g: &Graph) -> bool {
    !contains_induced(g, &named::paw())
}

/// `(odd hole, paw)`-free, decided structurally: each component is
/// bipartite or complete multipartite.
pub fn is_odd_hole_paw_free(g: &Graph) -> bool {
    component_graphs(g).all(|c| c.is_bipartite() || is_complete_multipartite(&c))
}

/// `(odd antihole, co-paw)`-free: the complement is `(odd hole, paw)`-free.
pub fn is_odd_antihole_copaw_free(g: &Graph) -> bool {
    is_odd_hole_paw_free(&g.complement())
}

/// Connected and free of induced `P4`, cricket, dart and hourglass.
pub fn is_connected_p4_cricket_dart_hourglass_free(g: &Graph) -> bool {
    g.is_connected()
        && [
            Graph::path(4).expect("P4"),
            named::cricket(),
            named::dart(),
            named::hourglass(),
        ]
        .iter()
        .all(|p| !contains_induced(g, p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassLabel {
    DisjointCliques,
    CompleteMultipartite,
    CompleteBipartite,
    Clique,
    Empty,
    Star,
    DisjointStarsAndCliques,
    Bipartite,
    TriangleFree,
    PawFree,
    OddHolePawFree,
    OddAntiholeCoPawFree,
    ConnectedP4CricketDartHourglassFree,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 13] = [
        ClassLabel::DisjointCliques,
        ClassLabel::CompleteMultipartite,
        ClassLabel::CompleteBipartite,
        ClassLabel::Clique,
        ClassLabel::Empty,
        ClassLabel::Star,
        ClassLabel::DisjointStarsAndCliques,
        ClassLabel::Bipartite,
        ClassLabel::TriangleFree,
        ClassLabel::PawFree,
        ClassLabel::OddHolePawFree,
        ClassLabel::OddAntiholeCoPawFree,
        ClassLabel::ConnectedP4CricketDartHourglassFree,
    ];

    pub fn holds(self, g: &Graph) -> bool {
        match self {
            ClassLabel::DisjointCliques => is_disjoint_union_of_cliques(g),
            ClassLabel::CompleteMultipartite => is_complete_multipartite(g),
            ClassLabel::CompleteBipartite => is_complete_bipartite(g),
            ClassLabel::Clique => is_clique(g),
            ClassLabel::Empty => is_edgeless(g),
            ClassLabel::Star => is_star(g),
            ClassLabel::DisjointStarsAndCliques => is_disjoint_union_of_stars_and_cliques(g),
            ClassLabel::Bipartite => is_bipartite(g),
            ClassLabel::TriangleFree => is_triangle_free(g),
            ClassLabel::PawFree => is_paw_free(g),
            ClassLabel::OddHolePawFree => is_odd_hole_paw_free(g),
            ClassLabel::OddAntiholeCoPawFree => is_odd_antihole_copaw_free(g),
            ClassLabel::ConnectedP4CricketDartHourglassFree => {
                is_connected_p4_cricket_dart_hourglass_free(g)
            }
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Every class label whose predicate holds for `g`.
pub fn classify_shape(g: &Graph) -> BTreeSet<ClassLabel> {
    ClassLabel::ALL.into_iter().filter(|l| l.holds(g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Graph {
        parse_expr(s).unwrap()
    }

    fn iso(a: &Graph, b: &Graph) -> bool {
        a.isomorphism_bruteforce(b).unwrap().is_some()
    }

    #[test]
    fn catalog_is_complete_and_small() {
        assert_eq!(catalog().len(), 22);
        for p in catalog() {
            assert!(p.graph.order() <= 6, "{}", p.name);
        }
        assert!(iso(&pattern("C4").unwrap().graph, &e("K2,2")));
        assert!(pattern("kite").is_none());
    }

    #[test]
    fn named_graph_complements() {
        for (g, co) in [
            ("diamond", "K2+E2"),
            ("paw", "P3+E1"),
            ("cricket", "diamond+E1"),
            ("dart", "paw+E1"),
            ("hourglass", "C4+E1"),
        ] {
            assert!(iso(&e(g).complement(), &e(co)), "co-{g}");
        }
    }

    #[test]
    fn find_induced_examples() {
        assert!(find_induced(&e("C5"), &e("P4")).is_some());
        assert!(find_induced(&e("K4"), &e("P3")).is_none());
        let w = find_induced(&e("paw"), &e("K2+E1")).unwrap();
        assert!(iso(&e("paw").induced_subgraph(w).unwrap(), &e("K2+E1")));
        assert_eq!(find_induced(&e("P3"), &e("P4")), None);
        // deterministic: first hit in ascending order
        assert_eq!(
            find_induced(&e("C5"), &e("P3")),
            Some(VertexSet::from_mask(0b00111))
        );
    }

    #[test]
    fn disjoint_cliques() {
        assert!(is_disjoint_union_of_cliques(&e("K3+K2")));
        assert!(!is_disjoint_union_of_cliques(&e("P3")));
        assert!(is_disjoint_union_of_cliques(&e("E7")));
    }

    #[test]
    fn complete_multipartite() {
        assert!(is_complete_multipartite(&e("K2,3")));
        assert!(!is_complete_multipartite(&e("paw")));
        assert!(is_complete_multipartite(&e("E4")));
        assert!(is_complete_multipartite(&e("K1")));
        assert!(is_complete_multipartite(&e("diamond")));
    }

    #[test]
    fn stars_and_cliques() {
        assert!(is_disjoint_union_of_stars_and_cliques(&e("K1,4+K3+K2")));
        assert!(!is_disjoint_union_of_stars_and_cliques(&e("K2,2")));
        assert!(!is_disjoint_union_of_stars_and_cliques(&e("paw+K2")));
        assert!(is_star(&e("K1")));
        assert!(is_star(&e("K2")));
        assert!(!is_nontrivial_star(&e("K1")));
        assert!(!is_complete_bipartite(&e("K1")));
        assert!(!is_complete_bipartite(&e("E2")));
        assert!(is_complete_bipartite(&e("K1,1")));
    }

    #[test]
    fn two_clique_shapes() {
        assert!(is_two_cliques(&e("K3+K2")));
        assert!(is_two_cliques(&e("E2")));
        assert!(!is_two_cliques(&e("K3")));
        assert!(!is_two_cliques(&e("K1+K1+K1")));
        assert!(is_clique_plus_isolated(&e("K3+K1")));
        assert!(is_clique_plus_isolated(&e("K1+K1")));
        assert!(!is_clique_plus_isolated(&e("K2+K2")));
        assert!(!is_clique_plus_isolated(&e("P3+K1")));
    }

    #[test]
    fn odd_hole_paw_free() {
        assert!(is_odd_hole_paw_free(&e("C6")));
        assert!(!is_odd_hole_paw_free(&e("C5")));
        assert!(!is_odd_hole_paw_free(&e("paw")));
        assert!(is_odd_hole_paw_free(&e("K4+C4")));
    }

    #[test]
    fn odd_antihole_copaw_free() {
        assert!(is_odd_antihole_copaw_free(&e("C6").complement()));
        assert!(!is_odd_antihole_copaw_free(&e("C5").complement()));
        assert!(is_odd_antihole_copaw_free(&e("K5")));
    }

    #[test]
    fn connected_forbidden_four() {
        assert!(is_connected_p4_cricket_dart_hourglass_free(&e("K2,3")));
        assert!(is_connected_p4_cricket_dart_hourglass_free(&e("K3,3")));
        assert!(!is_connected_p4_cricket_dart_hourglass_free(&e("P4")));
        assert!(!is_connected_p4_cricket_dart_hourglass_free(&e("dart")));
        assert!(!is_connected_p4_cricket_dart_hourglass_free(&e("K2+K2")));
    }

    #[test]
    fn shape_labels() {
        let k1 = classify_shape(&e("K1"));
        for l in [
            ClassLabel::Clique,
            ClassLabel::Empty,
            ClassLabel::Star,
            ClassLabel::DisjointCliques,
            ClassLabel::CompleteMultipartite,
        ] {
            assert!(k1.contains(&l), "{l}");
        }
        assert!(!k1.contains(&ClassLabel::CompleteBipartite));

        let c5 = classify_shape(&e("C5"));
        assert!(c5.contains(&ClassLabel::TriangleFree));
        assert!(!c5.contains(&ClassLabel::Bipartite));

        let claw = classify_shape(&e("K1,3"));
        for l in [
            ClassLabel::Star,
            ClassLabel::CompleteBipartite,
            ClassLabel::Bipartite,
        ] {
            assert!(claw.contains(&l), "{l}");
        }
    }
}
