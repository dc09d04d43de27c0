//! Exact maximum clique and the clique-based isomorphism test.
//!
//! For graphs `G`, `H` on `n` vertices, no two vertices of a clique in
//! `G ∇ H` share a row or a column of the `n × n` coordinate grid, so
//! `ω(G ∇ H) <= n`, and an `n`-clique `{(x, σ(x))}` is exactly an
//! isomorphism `σ`.

use crate::error::{Error, Result};
use crate::graph::{low_mask, Bits, Graph, VertexSet, MAX_VERTICES};
use crate::products::weak_modular_product;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub members: VertexSet,
}

impl CliqueResult {
    /// Members pairwise adjacent and `size` consistent.
    pub fn is_clique_in(&self, g: &Graph) -> bool {
        let m = self.members.mask();
        self.members.len() == self.size
            && self.members.fits(g.order())
            && self.members.iter().all(|v| m & !(1 << v) & !g.row(v) == 0)
    }
}

/// Greedy sequential colouring of `cand` in ascending vertex order. Fills
/// `order` with the vertices grouped by colour class and `bounds` with the
/// 1-based colour of each.
fn colour_sort(g: &Graph, cand: u64, order: &mut Vec<usize>, bounds: &mut Vec<usize>) {
    order.clear();
    bounds.clear();
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1u64 << v) & !g.row(v);
            uncoloured &= !(1u64 << v);
            order.push(v);
            bounds.push(colour);
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    best: u64,
    best_size: usize,
    /// Stop as soon as a clique of this size is found.
    target: usize,
}

impl Search<'_> {
    fn expand(&mut self, current: u64, size: usize, cand: u64) {
        let mut order = Vec::with_capacity(cand.count_ones() as usize);
        let mut bounds = Vec::with_capacity(order.capacity());
        colour_sort(self.g, cand, &mut order, &mut bounds);
        let mut cand = cand;
        for i in (0..order.len()).rev() {
            if size + bounds[i] <= self.best_size || self.best_size >= self.target {
                return;
            }
            let v = order[i];
            let next = cand & self.g.row(v);
            let with_v = current | 1 << v;
            if next == 0 {
                if size + 1 > self.best_size {
                    self.best = with_v;
                    self.best_size = size + 1;
                }
            } else {
                self.expand(with_v, size + 1, next);
            }
            cand &= !(1u64 << v);
        }
    }
}

/// Largest clique within `cand`, stopping early once `target` is reached.
fn clique_within(g: &Graph, cand: u64, target: usize) -> (usize, u64) {
    if cand == 0 {
        return (0, 0);
    }
    let mut s = Search {
        g,
        best: 0,
        best_size: 0,
        target,
    };
    s.expand(0, 0, cand);
    (s.best_size, s.best)
}

/// Exact maximum clique by branch and bound with a greedy colouring bound.
///
/// Among all maximum cliques the one whose sorted member list is
/// lexicographically smallest is returned.
pub fn max_clique(g: &Graph) -> CliqueResult {
    let all = g.vertices().mask();
    let (omega, _) = clique_within(g, all, usize::MAX);

    // fix members greedily in ascending order, keeping an optimum reachable
    let mut chosen = 0u64;
    let mut cand = all;
    let mut need = omega;
    for v in Bits::new(all) {
        if need == 0 {
            break;
        }
        if cand >> v & 1 == 0 {
            continue;
        }
        let rest = cand & g.row(v) & !low_mask(v + 1);
        if need == 1 || clique_within(g, rest, need - 1).0 >= need - 1 {
            chosen |= 1 << v;
            cand = rest;
            need -= 1;
        }
    }
    debug_assert_eq!(need, 0);
    CliqueResult {
        size: omega,
        members: VertexSet::from_mask(chosen),
    }
}

/// An isomorphism as `mapping[x] = y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        g.is_isomorphism(h, &self.mapping)
    }
}

/// Largest order `n` with `n * n <= MAX_VERTICES`.
pub const PRODUCT_ISO_MAX: usize = 8;

/// Isomorphism test through a maximum clique of `g ∇ h`.
pub fn iso_via_product(g: &Graph, h: &Graph) -> Result<Option<IsoWitness>> {
    let n = g.order();
    if h.order() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: h.order(),
        });
    }
    if n * n > MAX_VERTICES {
        return Err(Error::SizeOutOfRange {
            what: "order for product isomorphism",
            got: n,
            min: 1,
            max: PRODUCT_ISO_MAX,
        });
    }
    let p = weak_modular_product(g, h)?;
    let clique = max_clique(&p);
    if clique.size < n {
        return Ok(None);
    }
    let mut mapping = vec![usize::MAX; n];
    for v in clique.members {
        let (x, y) = p.coords(v);
        mapping[x] = y;
    }
    Ok(Some(IsoWitness { mapping }))
}
