use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Ordered list of disjoint, nonempty vertex cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    cells: Vec<VertexSet>,
}

impl Partition {
    pub fn new(cells: Vec<VertexSet>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (i, c) in cells.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::InvalidPartition(format!("cell {i} is empty")));
            }
            for &v in c.iter() {
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        Ok(Partition { cells })
    }

    /// One cell holding every vertex.
    pub fn unit(n: usize) -> Self {
        Partition {
            cells: vec![VertexSet::new(0..n)],
        }
    }

    pub fn discrete(n: usize) -> Self {
        Partition {
            cells: (0..n).map(|v| VertexSet::new([v])).collect(),
        }
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }

    /// Checks that the cells cover exactly `0..n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let total: usize = self.cells.iter().map(|c| c.len()).sum();
        if let Some(v) = self.cells.iter().flat_map(|c| c.iter()).find(|&&v| v >= n) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} outside graph of order {n}"
            )));
        }
        if total != n {
            return Err(Error::InvalidPartition(format!(
                "cells cover {total} of {n} vertices"
            )));
        }
        Ok(())
    }

    /// `cell_index[v]` for every vertex.
    pub fn cell_index(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n];
        for (i, c) in self.cells.iter().enumerate() {
            for &v in c.iter() {
                idx[v] = i;
            }
        }
        idx
    }
}

/// Integer quotient matrix of an equitable partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientMatrix {
    /// `entries[i][j]`: neighbours a vertex of cell `i` has in cell `j`.
    pub entries: Vec<Vec<i64>>,
    pub cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self> {
        let k = entries.len();
        if k == 0 || entries.iter().any(|r| r.len() != k) {
            return Err(Error::BadParams(
                "quotient matrix must be square and nonempty".into(),
            ));
        }
        Ok(QuotientMatrix {
            entries,
            cell_sizes: vec![1; k],
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }
}

/// Coarsest equitable partition refining `initial`, cells ordered by their
/// smallest vertex.
pub fn refine_equitable(g: &Graph, initial: &Partition) -> Result<Partition> {
    initial.validate(g.order())?;
    let mut cells: Vec<Vec<usize>> = initial
        .cells()
        .iter()
        .map(|c| c.as_slice().to_vec())
        .collect();
    crate::graph::refine_cells(g, &mut cells);
    let mut cells: Vec<VertexSet> = cells.into_iter().map(VertexSet::new).collect();
    cells.sort_by_key(|c| c.as_slice()[0]);
    Ok(Partition { cells })
}

/// Quotient matrix of `p`, which must be equitable for `g`.
pub fn quotient(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    let n = g.order();
    p.validate(n)?;
    let idx = p.cell_index(n);
    let k = p.len();
    let mut entries = vec![vec![0i64; k]; k];
    for (i, cell) in p.cells().iter().enumerate() {
        let mut first: Option<(usize, Vec<i64>)> = None;
        for &v in cell.iter() {
            let mut counts = vec![0i64; k];
            for w in g.neighbors(v) {
                counts[idx[w]] += 1;
            }
            match &first {
                None => first = Some((v, counts)),
                Some((u, base)) => {
                    if let Some(j) = (0..k).find(|&j| base[j] != counts[j]) {
                        return Err(Error::NotEquitable {
                            cell: i,
                            target: j,
                            u: *u,
                            v,
                        });
                    }
                }
            }
        }
        entries[i] = first.expect("cells are nonempty").1;
    }
    Ok(QuotientMatrix {
        entries,
        cell_sizes: p.sizes(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, FamilySpec};

    #[test]
    fn k33_star_matrix() {
        for n in [9usize, 17, 40] {
            let b = build(&FamilySpec::k33_star(n)).unwrap();
            let q = quotient(&b.graph, &b.partition).unwrap();
            let m = n as i64 - 6;
            assert_eq!(
                q.entries,
                vec![
                    vec![0, 1, 0, 0],
                    vec![m, 0, 0, 3],
                    vec![0, 0, 0, 3],
                    vec![0, 1, 2, 0]
                ]
            );
        }
    }

    #[test]
    fn embedded_triangle_matrix() {
        for (s, t) in [(5usize, 5usize), (6, 5), (8, 8)] {
            let mut spec = FamilySpec::bipartite_embed(s + t, Graph::complete(3).unwrap());
            // the embed side has t vertices
            spec.embed_in_larger = t > s;
            let b = build(&spec).unwrap();
            let q = quotient(&b.graph, &b.partition).unwrap();
            let (s, t) = (s as i64, t as i64);
            assert_eq!(
                q.entries,
                vec![vec![0, 3, t - 3], vec![s, 2, 0], vec![s, 0, 0]]
            );
        }
    }

    #[test]
    fn complete_graph_single_cell() {
        let g = Graph::complete(6).unwrap();
        let q = quotient(&g, &Partition::unit(6)).unwrap();
        assert_eq!(q.entries, vec![vec![5]]);
    }

    #[test]
    fn not_equitable_names_the_pair() {
        let g = Graph::path(3).unwrap();
        let err = quotient(&g, &Partition::unit(3)).unwrap_err();
        assert_eq!(
            err,
            Error::NotEquitable {
                cell: 0,
                target: 0,
                u: 0,
                v: 1
            }
        );
    }

    #[test]
    fn refinement_examples() {
        for n in [8usize, 12, 20] {
            let g = build(&FamilySpec::k33_star(n)).unwrap().graph;
            let p = refine_equitable(&g, &Partition::unit(n)).unwrap();
            let mut sizes = p.sizes();
            sizes.sort();
            let mut want = vec![1, n - 6, 2, 3];
            want.sort();
            assert_eq!(sizes, want);
        }
        let c = Graph::cycle(9).unwrap();
        assert_eq!(refine_equitable(&c, &Partition::unit(9)).unwrap().len(), 1);
        let pet_like = Graph::complete(5).unwrap();
        assert_eq!(
            refine_equitable(&pet_like, &Partition::unit(5))
                .unwrap()
                .len(),
            1
        );

        let b = build(&FamilySpec::bipartite_embed(
            12,
            Graph::complete(3).unwrap(),
        ))
        .unwrap();
        let p = refine_equitable(&b.graph, &Partition::unit(12)).unwrap();
        assert_eq!(
            p.cells()
                .iter()
                .map(|c| c.as_slice().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8, 9, 10, 11]]
        );
    }

    #[test]
    fn refinement_is_idempotent_and_equitable() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6)])
            .unwrap();
        let p = refine_equitable(&g, &Partition::unit(7)).unwrap();
        assert_eq!(refine_equitable(&g, &p).unwrap(), p);
        assert!(quotient(&g, &p).is_ok());
    }

    #[test]
    fn invalid_partitions() {
        let g = Graph::path(3).unwrap();
        let p = Partition::new(vec![VertexSet::new([0, 1])]).unwrap();
        assert!(matches!(quotient(&g, &p), Err(Error::InvalidPartition(_))));
        assert!(Partition::new(vec![VertexSet::new([0]), VertexSet::new([0, 1])]).is_err());
        assert!(Partition::new(vec![VertexSet::new([])]).is_err());
    }
}
