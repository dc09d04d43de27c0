//! Tensor and weak modular products.
//!
//! Product vertex `(x, y)` has index `x * n_right + y`.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A product graph that remembers its factor orders.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProductGraph {
    graph: Graph,
    n_left: usize,
    n_right: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.n_left && y < self.n_right);
        x * self.n_right + y
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.n_right, v % self.n_right)
    }
}

impl Deref for ProductGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

fn product_with<F>(g: &Graph, h: &Graph, joined: F) -> Result<ProductGraph>
where
    F: Fn(usize, usize, usize, usize) -> bool,
{
    let (a, b) = (g.order(), h.order());
    let n = a * b;
    if n > MAX_VERTICES {
        return Err(Error::SizeOutOfRange {
            what: "product order",
            got: n,
            min: 1,
            max: MAX_VERTICES,
        });
    }
    let mut rows = vec![0u64; n];
    for x in 0..a {
        for y in 0..b {
            let u = x * b + y;
            for x2 in 0..a {
                for y2 in 0..b {
                    if joined(x, y, x2, y2) {
                        rows[u] |= 1 << (x2 * b + y2);
                    }
                }
            }
        }
    }
    Ok(ProductGraph {
        graph: Graph::from_rows_unchecked(rows),
        n_left: a,
        n_right: b,
    })
}

/// `g ⊗ h`: `(x,y) ~ (x',y')` iff `x ~ x'` and `y ~ y'`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    product_with(g, h, |x, y, x2, y2| g.adjacent(x, x2) && h.adjacent(y, y2))
}

/// `g ∇ h`: `(x,y) ~ (x',y')` iff `x != x'`, `y != y'` and the two factor
/// pairs are either both edges or both non-edges.
pub fn weak_modular_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    product_with(g, h, |x, y, x2, y2| {
        x != x2 && y != y2 && g.adjacent(x, x2) == h.adjacent(y, y2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    fn e(s: &str) -> Graph {
        parse_expr(s).unwrap()
    }

    #[test]
    fn tensor_examples() {
        let p = tensor_product(&e("K2"), &e("K2")).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.graph(), &e("K2+K2").relabel(&[0, 3, 1, 2]).unwrap());
        assert_eq!(tensor_product(&e("C5"), &e("C5")).unwrap().edge_count(), 50);
        assert!(tensor_product(&e("E3"), &e("K4")).unwrap().is_edgeless());
    }

    #[test]
    fn wmp_examples() {
        let p = weak_modular_product(&e("K1"), &e("C5")).unwrap();
        assert_eq!(p.graph(), &e("E5"));
        let g = e("P4+K1");
        assert_eq!(
            weak_modular_product(&g, &e("K3")).unwrap(),
            tensor_product(&g, &e("K3")).unwrap()
        );
        assert_eq!(
            weak_modular_product(&e("C5"), &e("C5"))
                .unwrap()
                .edge_count(),
            100
        );
    }

    #[test]
    fn indexing() {
        let p = weak_modular_product(&e("P3"), &e("K2,2")).unwrap();
        assert_eq!((p.n_left(), p.n_right(), p.order()), (3, 4, 12));
        assert_eq!(p.index(2, 1), 9);
        assert_eq!(p.coords(9), (2, 1));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            weak_modular_product(&e("E9"), &e("E8")),
            Err(Error::SizeOutOfRange { got: 72, .. })
        ));
        assert_eq!(
            weak_modular_product(&e("E8"), &e("E8")).unwrap().order(),
            64
        );
    }
}
