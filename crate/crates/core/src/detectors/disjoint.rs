use super::{Detection, Witness, WitnessKind, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Removes edges hanging off degree-1 vertices until none remain. Such
/// edges lie on no cycle.
fn strip_pendant_edges(g: &mut Graph) {
    let mut deg = g.degrees();
    let mut stack: Vec<usize> = (0..g.order()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if deg[v] != 1 {
            continue;
        }
        let w = g.neighbors(v).next().expect("degree one");
        g.set_edge(v, w, false);
        deg[v] = 0;
        deg[w] -= 1;
        if deg[w] == 1 {
            stack.push(w);
        }
    }
}

/// Some cycle of a graph whose vertices all have degree 0 or at least 2.
fn walk_to_cycle(g: &Graph) -> Option<Vec<usize>> {
    let start = (0..g.order()).find(|&v| g.degree(v) >= 2)?;
    let mut pos = vec![usize::MAX; g.order()];
    let mut path = vec![start];
    pos[start] = 0;
    let mut prev = usize::MAX;
    loop {
        let v = *path.last().unwrap();
        let w = g
            .neighbors(v)
            .find(|&w| w != prev)
            .expect("degree at least two");
        if pos[w] != usize::MAX {
            return Some(path[pos[w]..].to_vec());
        }
        pos[w] = path.len();
        path.push(w);
        prev = v;
    }
}

fn remove_cycle(g: &Graph, c: &[usize]) -> Graph {
    let mut h = g.clone();
    for i in 0..c.len() {
        h.set_edge(c[i], c[(i + 1) % c.len()], false);
    }
    h
}

struct Solver {
    nodes: u64,
    budget: u64,
}

impl Solver {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceExhausted(format!(
                "edge-disjoint cycle search exceeded {} nodes",
                self.budget
            )));
        }
        Ok(())
    }

    fn solve(&mut self, mut g: Graph, k: usize) -> Result<Option<Vec<Vec<usize>>>> {
        self.tick()?;
        if k == 0 {
            return Ok(Some(Vec::new()));
        }
        strip_pendant_edges(&mut g);
        // k edge-disjoint cycles are independent in the cycle space
        if g.size() < 3 * k || g.cyclomatic_number() < k {
            return Ok(None);
        }
        if k == 1 {
            return Ok(walk_to_cycle(&g).map(|c| vec![c]));
        }
        let u = (0..g.order())
            .find(|&v| g.degree(v) > 0)
            .expect("graph has a cycle");
        let v = g.neighbors(u).next().unwrap();
        let mut without = g.clone();
        without.set_edge(u, v, false);

        let mut path = vec![u];
        let mut on = vec![false; g.order()];
        on[u] = true;
        if let Some(found) = self.through_edge(&g, &without, v, &mut path, &mut on, k)? {
            return Ok(Some(found));
        }
        self.solve(without, k)
    }

    /// Tries every cycle formed by `uv` and a `u`-`v` path in `without`.
    fn through_edge(
        &mut self,
        g: &Graph,
        without: &Graph,
        target: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        k: usize,
    ) -> Result<Option<Vec<Vec<usize>>>> {
        let x = *path.last().unwrap();
        for y in without.neighbors(x) {
            if on[y] {
                continue;
            }
            self.tick()?;
            path.push(y);
            if y == target {
                let rest = remove_cycle(g, path);
                if rest.size() >= 3 * (k - 1) && rest.cyclomatic_number() >= k - 1 {
                    if let Some(mut others) = self.solve(rest, k - 1)? {
                        others.insert(0, path.clone());
                        return Ok(Some(others));
                    }
                }
            } else {
                on[y] = true;
                let found = self.through_edge(g, without, target, path, on, k)?;
                on[y] = false;
                if found.is_some() {
                    return Ok(found);
                }
            }
            path.pop();
        }
        Ok(None)
    }
}

/// `k` pairwise edge-disjoint cycles, if they exist.
pub fn has_k_edge_disjoint_cycles(g: &Graph, k: usize) -> Result<Detection> {
    has_k_edge_disjoint_cycles_with_budget(g, k, DEFAULT_NODE_BUDGET)
}

pub fn has_k_edge_disjoint_cycles_with_budget(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Detection> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    let mut s = Solver { nodes: 0, budget };
    let found = s.solve(g.clone(), k)?;
    Ok(Detection {
        witness: found.map(|cs| Witness::cycles(WitnessKind::EdgeDisjointCycles, cs)),
        nodes_explored: s.nodes,
    })
}
