use serde::Serialize;

use super::enumerate::{par_fold, GRAPH_COUNTS};
use super::predicate::Predicate;
use crate::error::Result;
use crate::graph::{canonical_form, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TuranResult {
    pub n: usize,
    pub predicate: Predicate,
    pub max_edges: usize,
    /// Canonical graph6 of every extremal graph, sorted.
    pub extremal: Vec<String>,
    pub graphs_checked: u64,
}

struct Acc {
    max: Option<usize>,
    graphs: Vec<Graph>,
    seen: u64,
}

impl Acc {
    fn empty() -> Self {
        Acc {
            max: None,
            graphs: Vec::new(),
            seen: 0,
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.seen += other.seen;
        match (self.max, other.max) {
            (_, None) => {}
            (None, _) => {
                self.max = other.max;
                self.graphs = other.graphs;
            }
            (Some(a), Some(b)) if b > a => {
                self.max = other.max;
                self.graphs = other.graphs;
            }
            (Some(a), Some(b)) if a == b => self.graphs.extend(other.graphs),
            _ => {}
        }
        self
    }
}

/// Maximum edge count over all graphs of order `n` satisfying `predicate`,
/// with every extremal graph. Exhaustive, so `n ≤ 10`.
pub fn turan_number(n: usize, predicate: Predicate) -> Result<TuranResult> {
    let acc = par_fold(
        n,
        false,
        || Ok(Acc::empty()),
        |acc: Result<Acc>, g| {
            let mut acc = acc?;
            acc.seen += 1;
            let m = g.size();
            if acc.max.is_some_and(|best| m < best) || !predicate.holds(g)? {
                return Ok(acc);
            }
            let mut single = Acc::empty();
            single.max = Some(m);
            single.graphs.push(g.clone());
            single.seen = 0;
            Ok(acc.merge(single))
        },
        |a, b| Ok(a?.merge(b?)),
    )??;
    let mut extremal: Vec<String> = acc.graphs.iter().map(canonical_form).collect();
    extremal.sort();
    debug_assert_eq!(acc.seen, GRAPH_COUNTS[n]);
    Ok(TuranResult {
        n,
        predicate,
        max_edges: acc.max.unwrap_or(0),
        extremal,
        graphs_checked: acc.seen,
    })
}
