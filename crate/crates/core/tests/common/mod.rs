//! Brute-force reference implementations working on raw edge subsets.
//! They share nothing with the library beyond reading a graph's edge list.

#![allow(dead_code)]

use std::collections::BTreeMap;

use specyc::Graph;

/// Edge list plus bit masks of edge subsets (up to 32 edges).
pub struct Raw {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Raw {
    pub fn new(g: &Graph) -> Raw {
        let edges = g.edge_list();
        assert!(edges.len() <= 32, "oracle limited to 32 edges");
        Raw {
            n: g.order(),
            edges,
        }
    }

    /// True when the edge subset `mask` is a single cycle: every touched
    /// vertex has degree 2 and the touched part is connected.
    fn is_cycle(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let mut deg = vec![0u8; self.n];
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        let start = deg.iter().position(|&d| d == 2).unwrap();
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == deg.iter().filter(|&&d| d == 2).count()
    }

    /// Every cycle as an edge mask.
    pub fn cycles(&self) -> Vec<u32> {
        let m = self.edges.len();
        (1..(1u64 << m))
            .map(|s| s as u32)
            .filter(|&s| self.is_cycle(s))
            .collect()
    }

    pub fn cycle_lengths(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for c in self.cycles() {
            *out.entry(c.count_ones() as usize).or_insert(0) += 1;
        }
        out
    }

    pub fn triangles(&self) -> Vec<u32> {
        self.cycles()
            .into_iter()
            .filter(|c| c.count_ones() == 3)
            .collect()
    }
}

/// Largest number of pairwise disjoint masks.
pub fn max_disjoint(masks: &[u32]) -> usize {
    fn go(masks: &[u32], start: usize, used: u32, depth: usize, best: &mut usize) {
        *best = (*best).max(depth);
        for i in start..masks.len() {
            if masks[i] & used == 0 {
                go(masks, i + 1, used | masks[i], depth + 1, best);
            }
        }
    }
    let mut best = 0;
    go(masks, 0, 0, 0, &mut best);
    best
}

/// Whether `k` pairwise disjoint masks exist.
pub fn has_disjoint(masks: &[u32], k: usize) -> bool {
    fn go(masks: &[u32], start: usize, used: u32, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        (start..masks.len())
            .any(|i| masks[i] & used == 0 && go(masks, i + 1, used | masks[i], need - 1))
    }
    go(masks, 0, 0, k)
}

pub fn edge_disjoint_cycles(g: &Graph, k: usize) -> bool {
    has_disjoint(&Raw::new(g).cycles(), k)
}

pub fn triangle_packing_number(g: &Graph) -> usize {
    max_disjoint(&Raw::new(g).triangles())
}

/// Largest number of edge-disjoint triangles sharing one vertex.
pub fn fan_number(g: &Graph) -> usize {
    let raw = Raw::new(g);
    let tris = raw.triangles();
    (0..raw.n)
        .map(|v| {
            let through: Vec<u32> = tris
                .iter()
                .copied()
                .filter(|&t| {
                    raw.edges
                        .iter()
                        .enumerate()
                        .any(|(i, &(a, b))| t >> i & 1 == 1 && (a == v || b == v))
                })
                .collect();
            max_disjoint(&through)
        })
        .max()
        .unwrap_or(0)
}

/// Maximum matching size over subsets of edges with disjoint endpoints.
pub fn matching_size(g: &Graph) -> usize {
    let masks: Vec<u32> = g.edges().map(|(u, v)| (1u32 << u) | (1u32 << v)).collect();
    max_disjoint(&masks)
}

/// Canonical key by minimising the upper-triangle adjacency bit string
/// over all vertex permutations.
pub fn brute_canonical(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut key = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(perm[i], perm[j]) {
                    key |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(key);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// Size of the automorphism group by trying every permutation.
pub fn automorphism_count(g: &Graph) -> u64 {
    let n = g.order();
    let edges = g.edge_list();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        if edges.iter().all(|&(u, v)| g.has_edge(perm[u], perm[v])) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Dense symmetric eigenvalue bound via Jacobi rotations; returns the
/// largest eigenvalue.
pub fn jacobi_largest(g: &Graph) -> f64 {
    let n = g.order();
    let mut a = vec![vec![0.0f64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}
