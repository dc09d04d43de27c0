//! Perfection oracle: a graph is perfect iff neither it nor its complement
//! has an induced odd cycle of length at least five.
//!
//! Holes are found by depth-first extension of induced paths. A path
//! `s, p1, ..., pk` only grows by a vertex adjacent to `pk`, larger than `s`,
//! and non-adjacent to `p1..p(k-1)`; a candidate adjacent to `s` closes the
//! cycle instead. Starting only from the minimum vertex of a cycle removes
//! rotations. The search is exact but exponential in the worst case, so
//! callers bound the input size.

use serde::Serialize;

use crate::graph::{low_mask, Bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// An induced odd cycle of the graph (`Hole`) or of its complement
/// (`Antihole`), listed in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleWitness {
    pub kind: HoleKind,
    pub cycle: Vec<usize>,
}

impl HoleWitness {
    /// Re-checks the witness against `g`: odd length `>= 5`, distinct
    /// vertices, cyclically consecutive pairs adjacent and all other pairs
    /// non-adjacent (in the complement for antiholes).
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        if k < 5 || k.is_multiple_of(2) {
            return false;
        }
        let mut seen = 0u64;
        for &v in &self.cycle {
            if v >= g.order() || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        let edge = |a: usize, b: usize| match self.kind {
            HoleKind::Hole => g.adjacent(a, b),
            HoleKind::Antihole => !g.adjacent(a, b),
        };
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                edge(self.cycle[i], self.cycle[j]) == consecutive
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectionVerdict {
    pub perfect: bool,
    pub witness: Option<HoleWitness>,
}

/// Returns an induced odd cycle of length `>= 5`, if one exists.
pub fn find_odd_hole(g: &Graph) -> Option<HoleWitness> {
    odd_hole_cycle(g).map(|cycle| HoleWitness {
        kind: HoleKind::Hole,
        cycle,
    })
}

fn odd_hole_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n < 5 {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let above = !low_mask(s + 1) & low_mask(n);
        // a hole through s needs two neighbours of s above it
        if (g.row(s) & above).count_ones() < 2 {
            continue;
        }
        path.clear();
        path.push(s);
        if extend(g, s, above, &mut path, 0) {
            return Some(path);
        }
    }
    None
}

/// `blocked` holds the closed neighbourhoods of `p1..p(k-1)`.
fn extend(g: &Graph, s: usize, above: u64, path: &mut Vec<usize>, blocked: u64) -> bool {
    let last = *path.last().expect("path starts at s");
    let k = path.len() - 1;
    let on_path = path.iter().fold(0u64, |acc, &v| acc | 1 << v);
    let candidates = g.row(last) & above & !blocked & !on_path;
    let closers = candidates & g.row(s);
    if k >= 3 && k % 2 == 1 {
        if let Some(w) = Bits::new(closers).next() {
            path.push(w);
            return true;
        }
    }
    // past p1, neighbours of s can only close the cycle
    let (extenders, next_blocked) = if k == 0 {
        (candidates, blocked)
    } else {
        (candidates & !g.row(s), blocked | g.row(last) | 1 << last)
    };
    for w in Bits::new(extenders) {
        path.push(w);
        if extend(g, s, above, path, next_blocked) {
            return true;
        }
        path.pop();
    }
    false
}

/// Perfection verdict; a hole is reported before an antihole.
pub fn is_perfect_oracle(g: &Graph) -> PerfectionVerdict {
    let witness = find_odd_hole(g).or_else(|| {
        odd_hole_cycle(&g.complement()).map(|cycle| HoleWitness {
            kind: HoleKind::Antihole,
            cycle,
        })
    });
    PerfectionVerdict {
        perfect: witness.is_none(),
        witness,
    }
}
