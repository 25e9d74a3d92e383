use serde::Serialize;

use super::{Detection, Witness, WitnessKind, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// All triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for c in g.neighbors(b).filter(|&c| c > b) {
            if g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PackingResult {
    /// Maximum number of pairwise edge-disjoint triangles.
    pub nu: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
}

struct Packer {
    tri: Vec<[usize; 3]>,
    /// Edge ids of each triangle.
    tri_edges: Vec<[u32; 3]>,
    edge_ends: Vec<(usize, usize)>,
    best: Vec<u32>,
    target: usize,
    nodes: u64,
    budget: u64,
    edge_count: Vec<u32>,
    vertex_count: Vec<u32>,
}

impl Packer {
    fn new(g: &Graph, target: usize, budget: u64) -> Self {
        let n = g.order();
        let tri = triangles(g);
        let mut id = std::collections::HashMap::new();
        let mut edge_ends = Vec::new();
        let mut key = |u: usize, v: usize| -> u32 {
            *id.entry(u * n + v).or_insert_with(|| {
                edge_ends.push((u, v));
                (edge_ends.len() - 1) as u32
            })
        };
        let tri_edges: Vec<[u32; 3]> = tri
            .iter()
            .map(|&[a, b, c]| [key(a, b), key(a, c), key(b, c)])
            .collect();
        let m = edge_ends.len();
        Packer {
            tri,
            tri_edges,
            edge_ends,
            best: Vec::new(),
            target,
            nodes: 0,
            budget,
            edge_count: vec![0; m],
            vertex_count: vec![0; n],
        }
    }

    fn disjoint(&self, s: u32, t: u32) -> bool {
        let (a, b) = (&self.tri_edges[s as usize], &self.tri_edges[t as usize]);
        a.iter().all(|e| !b.contains(e))
    }

    fn greedy(&self, alive: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for &t in alive {
            if out.iter().all(|&s| self.disjoint(s, t)) {
                out.push(t);
            }
        }
        out
    }

    /// Upper bound on the packing number of the triangles in `alive`.
    fn upper_bound(&mut self, alive: &[u32], slack: usize) -> usize {
        let mut bound = alive.len();
        if bound <= slack {
            return bound;
        }
        let mut touched: Vec<u32> = Vec::new();
        for &t in alive {
            for &e in &self.tri_edges[t as usize] {
                if self.edge_count[e as usize] == 0 {
                    touched.push(e);
                }
                self.edge_count[e as usize] += 1;
            }
        }
        bound = bound.min(touched.len() / 3);
        // a triangle through v uses two of the edges at v
        for &e in &touched {
            let (u, v) = self.edge_ends[e as usize];
            self.vertex_count[u] += 1;
            self.vertex_count[v] += 1;
        }
        let mut half_degrees = 0usize;
        for &e in &touched {
            let (u, v) = self.edge_ends[e as usize];
            for x in [u, v] {
                half_degrees += self.vertex_count[x] as usize / 2;
                self.vertex_count[x] = 0;
            }
        }
        bound = bound.min(half_degrees / 3);
        if bound > slack {
            // any set of edges meeting every triangle bounds the packing
            let mut removed = vec![false; alive.len()];
            let mut left = alive.len();
            let mut transversal = 0usize;
            while left > 0 && transversal < bound {
                let &e = touched
                    .iter()
                    .max_by_key(|&&e| (self.edge_count[e as usize], std::cmp::Reverse(e)))
                    .unwrap();
                transversal += 1;
                for (i, &t) in alive.iter().enumerate() {
                    if !removed[i] && self.tri_edges[t as usize].contains(&e) {
                        removed[i] = true;
                        left -= 1;
                        for &f in &self.tri_edges[t as usize] {
                            self.edge_count[f as usize] -= 1;
                        }
                    }
                }
            }
            if left == 0 {
                bound = bound.min(transversal);
            }
        }
        for &e in &touched {
            self.edge_count[e as usize] = 0;
        }
        bound
    }

    fn go(&mut self, alive: &[u32], chosen: &mut Vec<u32>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceExhausted(format!(
                "triangle packing search exceeded {} nodes",
                self.budget
            )));
        }
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        if self.best.len() >= self.target || alive.is_empty() {
            return Ok(());
        }
        let slack = self.best.len() - chosen.len();
        if self.upper_bound(alive, slack) <= slack {
            return Ok(());
        }
        let t = alive[0];
        let rest = &alive[1..];
        let include: Vec<u32> = rest
            .iter()
            .copied()
            .filter(|&s| self.disjoint(s, t))
            .collect();
        chosen.push(t);
        self.go(&include, chosen)?;
        chosen.pop();
        if self.best.len() >= self.target {
            return Ok(());
        }
        self.go(rest, chosen)
    }

    fn run(&mut self) -> Result<()> {
        let all: Vec<u32> = (0..self.tri.len() as u32).collect();
        self.best = self.greedy(&all);
        let mut chosen = Vec::new();
        self.go(&all, &mut chosen)
    }

    fn witness(&self) -> Witness {
        let mut packing: Vec<[usize; 3]> =
            self.best.iter().map(|&t| self.tri[t as usize]).collect();
        packing.sort();
        Witness {
            kind: WitnessKind::TrianglePacking,
            cycles: Vec::new(),
            packing,
            fan_center: None,
            matching_edges: None,
        }
    }
}

/// Maximum edge-disjoint triangle packing by branch and bound.
pub fn triangle_packing(g: &Graph) -> Result<PackingResult> {
    triangle_packing_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn triangle_packing_with_budget(g: &Graph, budget: u64) -> Result<PackingResult> {
    let mut p = Packer::new(g, usize::MAX, budget);
    p.run()?;
    Ok(PackingResult {
        nu: p.best.len(),
        witness: p.witness(),
        nodes_explored: p.nodes,
    })
}

/// Decides whether `g` has `k` edge-disjoint triangles, stopping at the
/// first packing of size `k`.
pub fn has_triangle_packing(g: &Graph, k: usize) -> Result<Detection> {
    has_triangle_packing_with_budget(g, k, DEFAULT_NODE_BUDGET)
}

pub fn has_triangle_packing_with_budget(g: &Graph, k: usize, budget: u64) -> Result<Detection> {
    let mut p = Packer::new(g, k, budget);
    p.run()?;
    let found = p.best.len() >= k;
    if found {
        p.best.truncate(k);
    }
    Ok(Detection {
        witness: found.then(|| p.witness()),
        nodes_explored: p.nodes,
    })
}
