//! Fixed inputs shared by the benchmarks.

use specyc::constructions::{build, k_star, FamilySpec};
use specyc::Graph;

pub fn k33_star(n: usize) -> Graph {
    build(&FamilySpec::k33_star(n)).expect("n >= 6").graph
}

/// Balanced complete bipartite graph with a star of `k - 1` edges inside
/// one side.
pub fn embedded_star(n: usize, k: usize) -> Graph {
    let h = k_star(k).expect("k >= 2");
    build(&FamilySpec::bipartite_embed(n, h))
        .expect("star fits")
        .graph
}

/// Circulant graph on `n` vertices joining `i` to `i ± s` for each step.
pub fn circulant(n: usize, steps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in steps {
            let j = (i + s) % n;
            if i != j {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges).expect("valid edges")
}
