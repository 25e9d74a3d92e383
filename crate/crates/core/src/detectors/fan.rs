use serde::Serialize;

use super::{maximum_matching, Witness, WitnessKind};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanResult {
    /// Largest `k` with `F_k ⊆ G`.
    pub k: usize,
    /// Center and matching attaining `k`; `None` when `k = 0`.
    pub witness: Option<Witness>,
}

/// Largest fan: the maximum over vertices `v` of the matching number of
/// `G[N(v)]`. Ties go to the smallest center.
pub fn max_fan(g: &Graph) -> FanResult {
    let mut best = FanResult {
        k: 0,
        witness: None,
    };
    for v in 0..g.order() {
        let nbrs = VertexSet::new(g.neighbors(v));
        if nbrs.len() / 2 <= best.k {
            continue;
        }
        let h = g
            .induced_subgraph(&nbrs)
            .expect("neighbourhood is nonempty");
        let m = maximum_matching(&h);
        if m.len() > best.k {
            let members = nbrs.as_slice();
            best = FanResult {
                k: m.len(),
                witness: Some(Witness {
                    kind: WitnessKind::Fan,
                    cycles: Vec::new(),
                    packing: Vec::new(),
                    fan_center: Some(v),
                    matching_edges: Some(
                        m.iter().map(|&(a, b)| (members[a], members[b])).collect(),
                    ),
                }),
            };
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, Family, FamilySpec};

    #[test]
    fn examples() {
        let f3 = build(&FamilySpec::new(Family::Fan).k(3)).unwrap().graph;
        let r = max_fan(&f3);
        assert_eq!(r.k, 3);
        let w = r.witness.unwrap();
        assert_eq!(w.fan_center, Some(0));
        w.validate(&f3).unwrap();

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(max_fan(&k5).k, 2);

        let c7 = Graph::cycle(7).unwrap();
        let r = max_fan(&c7);
        assert_eq!(r.k, 0);
        assert!(r.witness.is_none());
    }
}
