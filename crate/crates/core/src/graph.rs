//! Finite simple graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`, so neighbourhood intersections,
//! complements and induced restrictions are word operations. Graphs are
//! immutable values: every transform returns a fresh [`Graph`].

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Largest order accepted by [`Graph::isomorphism_bruteforce`].
pub const BRUTEFORCE_ISO_MAX: usize = 8;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of some host graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// True if every member is below `n`.
    pub fn fits(self, n: usize) -> bool {
        self.0 & !low_mask(n) == 0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over set bits of a word, lowest first.
#[derive(Clone)]
pub struct Bits(u64);

impl Bits {
    pub fn new(mask: u64) -> Self {
        Bits(mask)
    }
}

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A finite simple graph on vertices `0..n`, `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

fn check_order(what: &'static str, n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange {
            what,
            got: n,
            min: 1,
            max: MAX_VERTICES,
        })
    }
}

impl Graph {
    /// Builds the graph on `n` vertices with the given edges. Duplicate
    /// edges (in either orientation) collapse.
    pub fn build<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order("vertex count", n)?;
        let mut rows = vec![0u64; n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order("vertex count", n)?;
        let valid = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row >> i & 1 == 1 {
                return Err(Error::InvalidEdge(i, i));
            }
            if row & !valid != 0 {
                let vertex = (row & !valid).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            for j in Bits(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::InvalidEdge(i, j));
                }
            }
        }
        Ok(Graph { rows })
    }

    /// Rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { rows }
    }

    /// `E_n`, the edgeless graph.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order("vertex count", n)?;
        Ok(Graph { rows: vec![0; n] })
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        check_order("vertex count", n)?;
        let all = low_mask(n);
        Ok(Graph {
            rows: (0..n).map(|i| all & !(1 << i)).collect(),
        })
    }

    /// `P_n`, the path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        Graph::build(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `C_n` for `n >= 3`, vertex `i` adjacent to `i +- 1 mod n`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if !(3..=MAX_VERTICES).contains(&n) {
            return Err(Error::SizeOutOfRange {
                what: "cycle length",
                got: n,
                min: 3,
                max: MAX_VERTICES,
            });
        }
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
        if m == 0 || n == 0 {
            return Err(Error::SizeOutOfRange {
                what: "partite set size",
                got: 0,
                min: 1,
                max: MAX_VERTICES,
            });
        }
        let total = m + n;
        check_order("vertex count", total)?;
        Graph::build(total, (0..m).flat_map(|a| (m..total).map(move |b| (a, b))))
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Alias for [`Graph::order`].
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * (n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.order());
        Graph {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(i, &r)| !r & all & !(1 << i))
                .collect(),
        }
    }

    /// `self ⊎ other`: the vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order();
        check_order("disjoint union order", shift + other.order())?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << shift));
        Ok(Graph { rows })
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        check_order("copy count", k)?;
        let mut g = self.clone();
        for _ in 1..k {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// The subgraph induced by `s`, relabelled in increasing vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptySelection);
        }
        if !s.fits(self.order()) {
            let vertex = (s.mask() & !low_mask(self.order())).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange {
                vertex,
                n: self.order(),
            });
        }
        let members = s.to_vec();
        let rows = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adjacent(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(Graph { rows })
    }

    /// Vertex `v` of `self` becomes vertex `perm[v]` of the result.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: perm.len(),
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { rows })
    }

    /// Vertices reachable from `v` within the vertex set `within`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.rows[u];
            }
            frontier = next & within.mask() & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let c = self.component_of(v, remaining);
            remaining = VertexSet(remaining.mask() & !c.mask());
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, self.vertices()) == self.vertices()
    }

    /// A proper 2-colouring as the set of vertices coloured 1, or `None`
    /// if the graph has an odd cycle. Each component's smallest vertex gets
    /// colour 0.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = 0u64;
        for comp in self.connected_components() {
            let start = comp.first().expect("components are nonempty");
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            let mut odd_layer = false;
            while frontier != 0 {
                let mut next = 0;
                for u in Bits(frontier) {
                    next |= self.rows[u];
                }
                frontier = next & !seen;
                seen |= frontier;
                odd_layer = !odd_layer;
                if odd_layer {
                    side |= frontier;
                }
            }
            for u in comp {
                let same = if side >> u & 1 == 1 { side } else { !side };
                if self.rows[u] & same != 0 {
                    return None;
                }
            }
        }
        Some(VertexSet(side))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.rows[u] & self.rows[v] != 0)
    }

    /// The line graph, with its vertices being the edges of `self` in
    /// lexicographic order. The second element maps line-graph vertex to edge.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        let edges: Vec<_> = self.edges().collect();
        if edges.is_empty() {
            return Err(Error::EmptySelection);
        }
        check_order("edge count", edges.len())?;
        let mut rows = vec![0u64; edges.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Ok((Graph { rows }, edges))
    }

    /// True if `map` (indexed by vertices of `self`) is an isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        let n = self.order();
        if other.order() != n || map.len() != n {
            return false;
        }
        let mut image = 0u64;
        for &m in map {
            if m >= n || image >> m & 1 == 1 {
                return false;
            }
            image |= 1 << m;
        }
        (0..n).all(|u| (u + 1..n).all(|v| self.adjacent(u, v) == other.adjacent(map[u], map[v])))
    }

    /// Exhaustive isomorphism search over permutations in lexicographic
    /// order, pruned on degrees and partial adjacency. Returns the first
    /// isomorphism found as `map[v_self] = v_other`.
    pub fn isomorphism_bruteforce(&self, other: &Graph) -> Result<Option<Vec<usize>>> {
        let largest = self.order().max(other.order());
        if largest > BRUTEFORCE_ISO_MAX {
            return Err(Error::SizeOutOfRange {
                what: "brute-force isomorphism order",
                got: largest,
                min: 1,
                max: BRUTEFORCE_ISO_MAX,
            });
        }
        if self.order() != other.order() || self.edge_count() != other.edge_count() {
            return Ok(None);
        }
        let (mut da, mut db) = (self.degrees(), other.degrees());
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return Ok(None);
        }
        let mut map = Vec::with_capacity(self.order());
        Ok(self.extend_iso(other, &mut map, 0).then_some(map))
    }

    fn extend_iso(&self, other: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let u = map.len();
        if u == self.order() {
            return true;
        }
        for cand in Bits(low_mask(other.order()) & !used) {
            if other.degree(cand) != self.degree(u) {
                continue;
            }
            if map
                .iter()
                .enumerate()
                .any(|(w, &img)| self.adjacent(u, w) != other.adjacent(cand, img))
            {
                continue;
            }
            map.push(cand);
            if self.extend_iso(other, map, used | 1 << cand) {
                return true;
            }
            map.pop();
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Brute-force isomorphism test; see [`Graph::isomorphism_bruteforce`].
pub fn are_isomorphic_bruteforce(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    g.isomorphism_bruteforce(h)
}
