//! Exact detectors for repeated cycle lengths, edge-disjoint cycles,
//! edge-disjoint triangle packings and fans, each with a checkable witness.

mod cycles;
mod disjoint;
mod fan;
mod matching;
mod packing;

pub use cycles::{cycle_census, for_each_cycle, has_repeated_cycle_length, CycleCensus};
pub use disjoint::{has_k_edge_disjoint_cycles, has_k_edge_disjoint_cycles_with_budget};
pub use fan::{max_fan, FanResult};
pub use matching::{matching_number, matching_number_exhaustive, maximum_matching};
pub use packing::{
    has_triangle_packing, has_triangle_packing_with_budget, triangle_packing,
    triangle_packing_with_budget, triangles, PackingResult,
};

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on enumerated cycles for [`cycle_census`].
pub const DEFAULT_CYCLE_CAP: u64 = 1_000_000;
/// Default cap on search nodes for the backtracking detectors.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WitnessKind {
    RepeatedLength,
    EdgeDisjointCycles,
    TrianglePacking,
    Fan,
}

/// Certificate for a detected structure. Cycles are vertex sequences
/// without the closing repeat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub kind: WitnessKind,
    pub cycles: Vec<Vec<usize>>,
    pub packing: Vec<[usize; 3]>,
    pub fan_center: Option<usize>,
    pub matching_edges: Option<Vec<(usize, usize)>>,
}

/// Outcome of a decision procedure together with the search effort.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Detection {
    pub witness: Option<Witness>,
    pub nodes_explored: u64,
}

impl Detection {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

impl Witness {
    pub(crate) fn cycles(kind: WitnessKind, cycles: Vec<Vec<usize>>) -> Self {
        Witness {
            kind,
            cycles,
            packing: Vec::new(),
            fan_center: None,
            matching_edges: None,
        }
    }

    /// Checks the witness against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidWitness(m));
        let edge_key = |u: usize, v: usize| (u.min(v), u.max(v));
        let mut cycle_edges = Vec::new();
        for c in &self.cycles {
            if c.len() < 3 {
                return bad(format!("cycle {c:?} is shorter than 3"));
            }
            let distinct: HashSet<_> = c.iter().collect();
            if distinct.len() != c.len() {
                return bad(format!("cycle {c:?} repeats a vertex"));
            }
            let mut edges = HashSet::new();
            for i in 0..c.len() {
                let (u, v) = (c[i], c[(i + 1) % c.len()]);
                if !g.has_edge(u, v) {
                    return bad(format!("cycle {c:?} uses missing edge {u}-{v}"));
                }
                edges.insert(edge_key(u, v));
            }
            cycle_edges.push(edges);
        }
        match self.kind {
            WitnessKind::RepeatedLength => {
                if self.cycles.len() != 2 {
                    return bad("expected exactly two cycles".into());
                }
                if self.cycles[0].len() != self.cycles[1].len() {
                    return bad("cycles have different lengths".into());
                }
                if cycle_edges[0] == cycle_edges[1] {
                    return bad("cycles have the same edge set".into());
                }
            }
            WitnessKind::EdgeDisjointCycles => {
                for i in 0..cycle_edges.len() {
                    for j in i + 1..cycle_edges.len() {
                        if !cycle_edges[i].is_disjoint(&cycle_edges[j]) {
                            return bad(format!("cycles {i} and {j} share an edge"));
                        }
                    }
                }
            }
            WitnessKind::TrianglePacking => {
                let mut used = HashSet::new();
                for t in &self.packing {
                    for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                        if a == b || !g.has_edge(a, b) {
                            return bad(format!("triangle {t:?} is not in the graph"));
                        }
                        if !used.insert(edge_key(a, b)) {
                            return bad(format!("edge {a}-{b} is used twice"));
                        }
                    }
                }
            }
            WitnessKind::Fan => {
                let Some(c) = self.fan_center else {
                    return bad("fan witness without center".into());
                };
                let mut seen = HashSet::new();
                for &(a, b) in self.matching_edges.iter().flatten() {
                    if !g.has_edge(a, b) || !g.has_edge(c, a) || !g.has_edge(c, b) {
                        return bad(format!("edge {a}-{b} is not inside N({c})"));
                    }
                    if !seen.insert(a) || !seen.insert(b) {
                        return bad("matching edges share a vertex".into());
                    }
                }
            }
        }
        Ok(())
    }
}
