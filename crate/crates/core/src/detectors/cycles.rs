use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use super::{Detection, Witness, WitnessKind, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of distinct cycles of each length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CycleCensus {
    pub counts_by_length: BTreeMap<usize, u64>,
    pub truncated: bool,
}

impl CycleCensus {
    pub fn total(&self) -> u64 {
        self.counts_by_length.values().sum()
    }
}

struct Walker<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    on_path: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl<'a> Walker<'a> {
    fn new(g: &'a Graph, budget: u64) -> Self {
        Walker {
            g,
            path: Vec::with_capacity(g.order()),
            on_path: vec![false; g.order()],
            nodes: 0,
            budget,
        }
    }

    /// Extends simple paths from `root` through larger vertices. A cycle is
    /// reported once, when its second vertex is smaller than its last.
    fn extend<F>(&mut self, root: usize, f: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let g = self.g;
        let v = *self.path.last().expect("path starts at the root");
        for w in g.neighbors(v) {
            if w == root {
                if self.path.len() >= 3 && self.path[1] < v && f(&self.path).is_break() {
                    return Ok(ControlFlow::Break(()));
                }
                continue;
            }
            if w < root || self.on_path[w] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::ResourceExhausted(format!(
                    "cycle enumeration exceeded {} nodes",
                    self.budget
                )));
            }
            self.path.push(w);
            self.on_path[w] = true;
            let flow = self.extend(root, f)?;
            self.on_path[w] = false;
            self.path.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn run<F>(&mut self, mut f: F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        for root in 0..self.g.order() {
            self.path.clear();
            self.path.push(root);
            self.on_path[root] = true;
            let flow = self.extend(root, &mut f)?;
            self.on_path[root] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Calls `f` once per cycle of `g` until it breaks. Each cycle starts at its
/// smallest vertex. Returns the number of search nodes visited.
pub fn for_each_cycle<F>(g: &Graph, f: F) -> u64
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut w = Walker::new(g, u64::MAX);
    let _ = w.run(f).expect("unbounded walk");
    w.nodes
}

/// Counts cycles by length, stopping once more than `cap` have been seen.
pub fn cycle_census(g: &Graph, cap: u64) -> CycleCensus {
    let mut census = CycleCensus::default();
    let mut seen = 0u64;
    for_each_cycle(g, |c| {
        if seen == cap {
            census.truncated = true;
            return ControlFlow::Break(());
        }
        seen += 1;
        *census.counts_by_length.entry(c.len()).or_insert(0) += 1;
        ControlFlow::Continue(())
    });
    census
}

/// Two distinct cycles of equal length, if any exist.
pub fn has_repeated_cycle_length(g: &Graph) -> Result<Detection> {
    let mut first: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut pair = None;
    let mut w = Walker::new(g, DEFAULT_NODE_BUDGET);
    let _ = w.run(|c| {
        if let Some(prev) = first.get(&c.len()) {
            pair = Some(vec![prev.clone(), c.to_vec()]);
            ControlFlow::Break(())
        } else {
            first.insert(c.len(), c.to_vec());
            ControlFlow::Continue(())
        }
    })?;
    Ok(Detection {
        witness: pair.map(|cs| Witness::cycles(WitnessKind::RepeatedLength, cs)),
        nodes_explored: w.nodes,
    })
}
