//! Polynomial-time perfection test for weak modular products.
//!
//! `G0 ∇ G1` is perfect exactly when, for some orientation `z`, the pair
//! `(G_z, G_{1-z})` matches one of ten structural cases. The cases are
//! checked in order 1..=10, orientation `z = 0` before `z = 1`, and the
//! first match is reported. Several cases overlap, so only the verdict is
//! canonical; the case number is a stable, deterministic label.

use std::fmt;

use serde::Serialize;

use crate::graph::Graph;
use crate::patterns::{
    is_clique_plus_isolated, is_complete_bipartite, is_complete_multipartite,
    is_connected_p4_cricket_dart_hourglass_free, is_disjoint_union_of_cliques,
    is_disjoint_union_of_stars_and_cliques, is_nontrivial_star, is_odd_antihole_copaw_free,
    is_odd_hole_paw_free, is_two_cliques,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Perfect,
    Imperfect,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Perfect => "PERFECT",
            Verdict::Imperfect => "IMPERFECT",
        })
    }
}

/// Which factor played the distinguished role `G_z` in the matched case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `z = 0`: the left factor.
    Left,
    /// `z = 1`: the right factor.
    Right,
}

impl Orientation {
    pub fn z(self) -> u8 {
        match self {
            Orientation::Left => 0,
            Orientation::Right => 1,
        }
    }
}

/// The ten perfect cases, numbered 1..=10.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Case(u8);

impl Case {
    pub const COUNT: usize = 10;

    pub fn new(number: u8) -> Option<Case> {
        (1..=10).contains(&number).then_some(Case(number))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Case> {
        (1..=10).map(Case)
    }

    /// Does `(gz, other)` satisfy this case with `gz` in the role `G_z`?
    pub fn matches(self, gz: &Graph, other: &Graph) -> bool {
        match self.0 {
            1 => gz.order() <= 2,
            2 => {
                is_p4(gz)
                    && (is_nontrivial_star(other) || is_clique_plus_isolated(other) || is_p4(other))
            }
            3 => is_c5(gz) && is_c5_partner(other),
            4 => is_two_cliques(gz) && is_disjoint_union_of_stars_and_cliques(other),
            5 => is_complete_bipartite(gz) && is_connected_p4_cricket_dart_hourglass_free(other),
            6 => gz.is_complete() && is_odd_hole_paw_free(other),
            7 => gz.is_edgeless() && is_odd_antihole_copaw_free(other),
            8 => is_complete_multipartite(gz) && is_complete_multipartite(other),
            9 => is_disjoint_union_of_cliques(gz) && is_disjoint_union_of_cliques(other),
            10 => is_two_cliques(gz) && is_complete_bipartite(other),
            _ => unreachable!("case numbers are 1..=10"),
        }
    }

    /// The clause this case stands for, with `G_z` and its partner `H`.
    pub fn description(self) -> &'static str {
        match self.0 {
            1 => "G_z is K1, K2 or E2; H arbitrary",
            2 => "G_z is P4; H is a star K_{1,r}, K_r + K1, or P4",
            3 => "G_z is C5; H is P3, K2 + E1, P4 or C5",
            4 => "G_z is K_r + K_s; H is a disjoint union of stars and cliques",
            5 => "G_z is complete bipartite K_{m,n}; H is connected and (P4, cricket, dart, hourglass)-free",
            6 => "G_z is complete K_n; H is (odd hole, paw)-free",
            7 => "G_z is empty E_n; H is (odd antihole, co-paw)-free",
            8 => "G_z and H are both complete multipartite",
            9 => "G_z and H are both disjoint unions of cliques",
            10 => "G_z is K_r + K_s; H is complete bipartite K_{m,n}",
            _ => unreachable!("case numbers are 1..=10"),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_p4(g: &Graph) -> bool {
    // P4 is the only connected graph on 4 vertices with 3 edges and two leaves
    g.order() == 4
        && g.edge_count() == 3
        && g.is_connected()
        && g.degrees().iter().filter(|&&d| d == 1).count() == 2
}

fn is_c5(g: &Graph) -> bool {
    g.order() == 5 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

/// `P3`, `K2 ⊎ E1`, `P4` or `C5`.
fn is_c5_partner(g: &Graph) -> bool {
    match g.order() {
        3 => g.edge_count() == 2 || g.edge_count() == 1,
        4 => is_p4(g),
        5 => is_c5(g),
        _ => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub verdict: Verdict,
    pub case: Option<Case>,
    pub orientation: Option<Orientation>,
}

impl Classification {
    pub fn is_perfect(&self) -> bool {
        self.verdict == Verdict::Perfect
    }
}

/// Decides whether `g ∇ h` is perfect without building the product.
pub fn classify(g: &Graph, h: &Graph) -> Classification {
    for case in Case::all() {
        for (orientation, gz, other) in [(Orientation::Left, g, h), (Orientation::Right, h, g)] {
            if case.matches(gz, other) {
                return Classification {
                    verdict: Verdict::Perfect,
                    case: Some(case),
                    orientation: Some(orientation),
                };
            }
        }
    }
    Classification {
        verdict: Verdict::Imperfect,
        case: None,
        orientation: None,
    }
}

/// A one-paragraph human-readable account of a classification.
pub fn explain(c: &Classification) -> String {
    match (c.case, c.orientation) {
        (Some(case), Some(orientation)) => {
            let (gz, other) = match orientation {
                Orientation::Left => ("left", "right"),
                Orientation::Right => ("right", "left"),
            };
            let trivial = if case.number() == 1 {
                format!(" The {gz} factor is trivial (at most two vertices).")
            } else {
                String::new()
            };
            format!(
                "Perfect by case {case} with G_z = {gz} factor (z = {}), H = {other} factor: {}.{trivial}",
                orientation.z(),
                case.description(),
            )
        }
        _ => "Imperfect: no case matches. An odd hole or odd antihole witness can be \
              requested from the perfection oracle."
            .to_string(),
    }
}
