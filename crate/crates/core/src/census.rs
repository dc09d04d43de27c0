//! Small graphs up to isomorphism.
//!
//! The canonical form of a graph is the minimum graph6-order adjacency bit
//! string over all vertex orderings that list vertices by non-increasing
//! degree. Isomorphisms preserve degrees, so this minimum is an invariant,
//! and equal forms imply isomorphic graphs. Only permutations inside
//! equal-degree cells are tried.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`]; the bit string must fit a `u64`.
pub const CANONICAL_MAX: usize = 11;

/// Canonical code and the relabelling that achieves it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub code: u64,
    /// `order[i]` is the original vertex placed at position `i`.
    pub order: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    let n = g.order();
    if n > CANONICAL_MAX {
        return Err(Error::SizeOutOfRange {
            what: "canonical form order",
            got: n,
            min: 1,
            max: CANONICAL_MAX,
        });
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // cell_end[i]: one past the last position sharing position i's degree
    let mut cell_end = vec![n; n];
    for i in (0..n.saturating_sub(1)).rev() {
        cell_end[i] = if g.degree(by_degree[i]) == g.degree(by_degree[i + 1]) {
            cell_end[i + 1]
        } else {
            i + 1
        };
    }
    let mut state = CanonSearch {
        g,
        nbits: n * (n - 1) / 2,
        best: Canonical {
            code: u64::MAX,
            order: Vec::new(),
        },
        cell_end,
    };
    let mut order = by_degree;
    state.permute(&mut order, 0, 0, 0);
    Ok(state.best)
}

struct CanonSearch<'g> {
    g: &'g Graph,
    nbits: usize,
    best: Canonical,
    cell_end: Vec<usize>,
}

impl CanonSearch<'_> {
    /// Positions `0..pos` are fixed; `prefix` holds their `bits` leading code bits.
    fn permute(&mut self, order: &mut Vec<usize>, pos: usize, prefix: u64, bits: usize) {
        let n = order.len();
        if pos == n {
            let code = prefix;
            if code < self.best.code {
                self.best = Canonical {
                    code,
                    order: order.clone(),
                };
            }
            return;
        }
        let end = self.cell_end[pos];
        for k in pos..end {
            order.swap(pos, k);
            let v = order[pos];
            // column `pos` of the upper triangle: pairs (i, pos) for i < pos
            let mut code = prefix;
            for &u in &order[..pos] {
                code = code << 1 | self.g.adjacent(u, v) as u64;
            }
            let nb = bits + pos;
            // the best code shares no prefix smaller than this one can reach
            let best_prefix = if self.best.code == u64::MAX {
                u64::MAX
            } else {
                self.best.code >> (self.nbits - nb)
            };
            if code <= best_prefix {
                self.permute(order, pos + 1, code, nb);
            }
            order.swap(pos, k);
        }
    }
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let c = canonical_form(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in c.order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

/// All graphs with `1..=max_n` vertices, one canonical representative per
/// isomorphism class, ordered by vertex count then canonical code.
///
/// Classes on `n` vertices are generated from classes on `n - 1` vertices by
/// adding a vertex with every possible neighbourhood.
pub fn graphs_up_to_iso(max_n: usize) -> Result<Vec<Graph>> {
    if !(1..=CANONICAL_MAX).contains(&max_n) {
        return Err(Error::SizeOutOfRange {
            what: "enumeration order",
            got: max_n,
            min: 1,
            max: CANONICAL_MAX,
        });
    }
    let mut out = vec![Graph::empty(1)?];
    let mut layer = vec![Graph::empty(1)?];
    for n in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for nbrs in 0u64..1 << (n - 1) {
                let mut rows = g.rows().to_vec();
                for (v, row) in rows.iter_mut().enumerate() {
                    *row |= (nbrs >> v & 1) << (n - 1);
                }
                rows.push(nbrs);
                let h = Graph::from_rows(rows)?;
                let c = canonical_form(&h)?;
                if seen.insert(c.code) {
                    next.push((c.code, canonical_graph(&h)?));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        layer = next.into_iter().map(|(_, g)| g).collect();
        out.extend(layer.iter().cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    #[test]
    fn class_counts() {
        let all = graphs_up_to_iso(6).unwrap();
        let counts: Vec<usize> = (1..=6)
            .map(|n| all.iter().filter(|g| g.order() == n).count())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = parse_expr("paw+K2").unwrap();
        let h = g.relabel(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert_eq!(
            canonical_form(&g).unwrap().code,
            canonical_form(&h).unwrap().code
        );
        assert_eq!(canonical_graph(&g).unwrap(), canonical_graph(&h).unwrap());
        let other = parse_expr("P4+K2").unwrap();
        assert_ne!(
            canonical_form(&g).unwrap().code,
            canonical_form(&other).unwrap().code
        );
    }

    #[test]
    fn canonical_graph_is_isomorphic() {
        for s in ["C5", "K1,3", "dart", "P3+E1", "K2,3"] {
            let g = parse_expr(s).unwrap();
            let c = canonical_graph(&g).unwrap();
            assert!(g.isomorphism_bruteforce(&c).unwrap().is_some(), "{s}");
        }
    }

    #[test]
    fn size_guards() {
        assert!(canonical_form(&Graph::empty(12).unwrap()).is_err());
        assert!(graphs_up_to_iso(0).is_err());
    }
}
