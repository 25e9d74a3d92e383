//! Canonical labeling by individualization and refinement.
//!
//! Every node of the search tree is an ordered equitable partition. Leaves
//! (discrete partitions) induce a relabeled adjacency matrix; the canonical
//! form is the greatest one. Leaves that reproduce the first or best matrix
//! yield automorphisms, which prune sibling subtrees.

use super::{and_count, to_graph6, Graph};

/// Result of [`canonical_labeling`].
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `order[p]` is the vertex placed at canonical position `p`.
    pub order: Vec<usize>,
    /// The relabeled graph (vertex `p` is `order[p]` of the input).
    pub graph: Graph,
    /// Automorphisms found during the search, as images `v -> gen[v]`.
    /// They generate the full automorphism group.
    pub generators: Vec<Vec<usize>>,
    /// Smallest vertex of each vertex's automorphism orbit.
    pub orbits: Vec<usize>,
}

/// Splits cells of an ordered partition until every vertex of a cell has
/// the same number of neighbours in every cell. The result depends only on
/// the ordered partition structure, so it commutes with relabeling.
pub(crate) fn refine_cells(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.order();
    let words = g.words();
    let mut mask = vec![0u64; words];
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cells.len() && cells.len() < n {
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &cells[i] {
                mask[v / 64] |= 1 << (v % 64);
            }
            let mut next = Vec::with_capacity(cells.len() + 4);
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (and_count(g.row(v), &mask), v))
                    .collect();
                if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                    next.push(cell);
                    continue;
                }
                keyed.sort_unstable();
                changed = true;
                let mut start = 0;
                for j in 1..=keyed.len() {
                    if j == keyed.len() || keyed[j].0 != keyed[start].0 {
                        next.push(keyed[start..j].iter().map(|&(_, v)| v).collect());
                        start = j;
                    }
                }
            }
            *cells = next;
            i += 1;
        }
        if !changed || cells.len() == n {
            break;
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

struct Leaf {
    rows: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn leaf_rows(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for p in 0..n {
            for q in 0..n {
                if self.g.has_edge(lab[p], lab[q]) {
                    // most significant position first so Vec ordering reads
                    // the matrix row-major
                    rows[p * words + q / 64] |= 1u64 << (63 - q % 64);
                }
            }
        }
        rows
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gen = vec![0; from.len()];
        for (p, &v) in from.iter().enumerate() {
            gen[v] = to[p];
        }
        if gen.iter().enumerate().any(|(i, &x)| i != x) && !self.gens.contains(&gen) {
            self.gens.push(gen);
        }
    }

    /// Returns `Some(depth)` when the caller should unwind to the node at
    /// `depth` on the current path.
    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = self.leaf_rows(&lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                rows: rows.clone(),
                lab: lab.clone(),
                path: path.to_vec(),
            };
            self.first = Some(leaf);
            self.best = Some(Leaf {
                rows,
                lab,
                path: path.to_vec(),
            });
            return None;
        };
        if rows == first.rows {
            let (flab, fpath) = (first.lab.clone(), first.path.clone());
            self.record_automorphism(&flab, &lab);
            return Some(common_prefix(&fpath, path));
        }
        let best = self.best.as_ref().expect("best set with first");
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf {
                    rows,
                    lab,
                    path: path.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Equal => {
                let (blab, bpath) = (best.lab.clone(), best.path.clone());
                self.record_automorphism(&blab, &lab);
                Some(common_prefix(&bpath, path))
            }
            std::cmp::Ordering::Less => None,
        }
    }

    fn stabilizer_orbits(&self, prefix: &[usize]) -> UnionFind {
        let n = self.g.order();
        let mut uf = UnionFind::new(n);
        for gen in &self.gens {
            if prefix.iter().all(|&v| gen[v] == v) {
                for (v, &w) in gen.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }

    fn search(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.g.order();
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let target = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-discrete");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut gens_seen = usize::MAX;
        let mut uf = UnionFind::new(0);
        for w in candidates {
            if !explored.is_empty() {
                if gens_seen != self.gens.len() {
                    uf = self.stabilizer_orbits(path);
                    gens_seen = self.gens.len();
                }
                let rw = uf.find(w);
                if explored.iter().any(|&e| uf.find(e) == rw) {
                    continue;
                }
            }
            explored.push(w);
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..target].iter().cloned());
            child.push(vec![w]);
            child.push(cells[target].iter().copied().filter(|&x| x != w).collect());
            child.extend(cells[target + 1..].iter().cloned());
            refine_cells(self.g, &mut child);
            path.push(w);
            let jump = self.search(child, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Computes a canonical relabeling, automorphism generators and orbits.
pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine_cells(g, &mut cells);
    let mut s = Search {
        g,
        first: None,
        best: None,
        gens: Vec::new(),
    };
    s.search(cells, &mut Vec::new());
    let best = s.best.expect("search visits at least one leaf");
    let order = best.lab;
    let mut graph = Graph::new(n).expect("order already validated");
    for p in 0..n {
        for q in p + 1..n {
            if g.has_edge(order[p], order[q]) {
                graph.set_edge(p, q, true);
            }
        }
    }
    let mut uf = UnionFind::new(n);
    for gen in &s.gens {
        for (v, &w) in gen.iter().enumerate() {
            uf.union(v, w);
        }
    }
    let orbits = (0..n).map(|v| uf.find(v)).collect();
    CanonicalLabeling {
        order,
        graph,
        generators: s.gens,
        orbits,
    }
}

/// graph6 string of the canonical relabeling: equal iff isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    to_graph6(&canonical_labeling(g).graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u64..(1 << pairs.len())).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    fn automorphism_count(g: &Graph) -> usize {
        permutations(g.order())
            .into_iter()
            .filter(|p| &g.permuted(p) == g)
            .count()
    }

    fn group_order(gens: &[Vec<usize>], n: usize) -> usize {
        let mut seen = std::collections::HashSet::new();
        let id: Vec<usize> = (0..n).collect();
        let mut stack = vec![id.clone()];
        seen.insert(id);
        while let Some(p) = stack.pop() {
            for g in gens {
                let q: Vec<usize> = p.iter().map(|&x| g[x]).collect();
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn relabeled_k4_and_p3() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            canonical_form(&k4.permuted(&[2, 0, 3, 1])),
            canonical_form(&k4)
        );
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(
            canonical_form(&Graph::cycle(5).unwrap()),
            canonical_form(&Graph::path(5).unwrap())
        );
    }

    #[test]
    fn invariant_under_all_permutations_up_to_order_6() {
        for n in 1..=6 {
            let perms = permutations(n);
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for g in all_graphs(n) {
                let c = canonical_form(&g);
                // all permutations for tiny n, a random sample otherwise
                let sample: Vec<&Vec<usize>> = if n <= 4 {
                    perms.iter().collect()
                } else {
                    perms.choose_multiple(&mut rng, 6).collect()
                };
                for p in sample {
                    assert_eq!(canonical_form(&g.permuted(p)), c, "{g:?} under {p:?}");
                }
            }
        }
    }

    #[test]
    fn isomorphism_classes_up_to_order_6() {
        // 1, 2, 4, 11, 34, 156 unlabeled graphs
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let classes: std::collections::HashSet<String> =
                all_graphs(n).map(|g| canonical_form(&g)).collect();
            assert_eq!(classes.len(), expected, "n={n}");
        }
    }

    #[test]
    fn generators_span_full_group() {
        for n in 1..=6 {
            for g in all_graphs(n).step_by(if n == 6 { 37 } else { 1 }) {
                let cl = canonical_labeling(&g);
                for gen in &cl.generators {
                    assert_eq!(&g.permuted(gen), &g);
                }
                assert_eq!(
                    group_order(&cl.generators, n),
                    automorphism_count(&g),
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn symmetric_graphs_stay_fast() {
        let e = Graph::new(40).unwrap();
        let cl = canonical_labeling(&e);
        assert!(cl.orbits.iter().all(|&o| o == 0));
        let k = Graph::complete(30).unwrap();
        assert_eq!(canonical_labeling(&k).graph, k);
        let mut kab = Graph::new(24).unwrap();
        for u in 0..12 {
            for v in 12..24 {
                kab.add_edge(u, v).unwrap();
            }
        }
        kab.add_edge(0, 1).unwrap();
        let cl = canonical_labeling(&kab);
        assert_eq!(cl.orbits[1], 0);
        assert_eq!(cl.orbits[5], 2);
    }
}
