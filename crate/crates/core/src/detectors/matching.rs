use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: std::collections::VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }
}

/// Maximum matching by Edmonds' blossom algorithm, as sorted edges `(u, v)`
/// with `u < v`. Vertices are processed in increasing order.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let adj = g.adjacency_lists();
    let n = g.order();
    let mut b = Blossom {
        adj: &adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: Default::default(),
    };
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        let mut v = b.find_path(root);
        while v != NONE {
            let pv = b.parent[v];
            let ppv = b.mate[pv];
            b.mate[v] = pv;
            b.mate[pv] = v;
            v = ppv;
        }
    }
    (0..n)
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| (v, b.mate[v]))
        .collect()
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// Matching number by exhaustive branch and bound. Meant for small graphs
/// (`n ≤ 20`) as a cross-check.
pub fn matching_number_exhaustive(g: &Graph) -> usize {
    fn go(g: &Graph, free: &mut [bool], from: usize, count: usize, best: &mut usize) {
        let remaining = free.iter().filter(|&&f| f).count();
        if count + remaining / 2 <= *best {
            return;
        }
        let Some(v) = (from..g.order()).find(|&v| free[v]) else {
            *best = (*best).max(count);
            return;
        };
        free[v] = false;
        for w in g.neighbors(v) {
            if free[w] {
                free[w] = false;
                go(g, free, v + 1, count + 1, best);
                free[w] = true;
            }
        }
        go(g, free, v + 1, count, best);
        free[v] = true;
    }
    let mut best = 0;
    let mut free = vec![true; g.order()];
    go(g, &mut free, 0, 0, &mut best);
    best
}
