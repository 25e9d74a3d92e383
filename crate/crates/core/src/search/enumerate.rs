//! Isomorph-free generation by canonical vertex augmentation.
//!
//! A graph on `n` vertices is produced from a parent on `n - 1` vertices by
//! adding vertex `n - 1` joined to a subset `S`, one `S` per orbit of the
//! parent's automorphism group. The child is kept only when the new vertex
//! lies in the orbit of the child's canonical deletion vertex, so every
//! isomorphism class appears exactly once.

use rayon::prelude::*;

use super::MAX_ENUM_ORDER;
use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, Graph};

/// Number of graphs on `n` vertices up to isomorphism, `n = 0..=10`.
pub const GRAPH_COUNTS: [u64; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];
/// Number of connected graphs on `n` vertices up to isomorphism.
pub const CONNECTED_COUNTS: [u64; 11] = [1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Small {
    n: u8,
    rows: [u16; MAX_ENUM_ORDER],
}

impl Small {
    fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::new(n).expect("order within range");
        for u in 0..n {
            let mut r = self.rows[u] & !((1u16 << (u + 1)) - 1);
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                g.set_edge(u, v, true);
            }
        }
        g
    }

    fn is_connected(&self) -> bool {
        let n = self.n as usize;
        let full = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Invariant used to pick the deletion vertex: degree, neighbour degree
    /// sum and triangles through the vertex.
    fn vertex_keys(&self) -> [(u32, u32, u32); MAX_ENUM_ORDER] {
        let n = self.n as usize;
        let mut deg = [0u32; MAX_ENUM_ORDER];
        for v in 0..n {
            deg[v] = self.rows[v].count_ones();
        }
        let mut keys = [(0, 0, 0); MAX_ENUM_ORDER];
        for v in 0..n {
            let mut r = self.rows[v];
            let (mut s, mut t) = (0, 0);
            while r != 0 {
                let w = r.trailing_zeros() as usize;
                r &= r - 1;
                s += deg[w];
                t += (self.rows[v] & self.rows[w]).count_ones();
            }
            keys[v] = (deg[v], s, t / 2);
        }
        keys
    }
}

/// Orbit representatives (minimal masks) of vertex subsets under the
/// group generated by `gens`.
fn subset_representatives(p: usize, gens: &[Vec<usize>]) -> Vec<u16> {
    let total = 1usize << p;
    if gens.is_empty() {
        return (0..total as u32).map(|s| s as u16).collect();
    }
    let mut parent: Vec<u32> = (0..total as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for g in gens {
        for s in 0..total {
            let mut img = 0usize;
            let mut r = s;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                img |= 1 << g[v];
            }
            let (a, b) = (find(&mut parent, s as u32), find(&mut parent, img as u32));
            if a != b {
                // keep the smaller mask as the root
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    (0..total as u32)
        .filter(|&s| find(&mut parent, s) == s)
        .map(|s| s as u16)
        .collect()
}

fn accept(child: &Small) -> bool {
    let n = child.n as usize;
    let last = n - 1;
    let keys = child.vertex_keys();
    let best = *keys[..n].iter().max().unwrap();
    if keys[last] != best {
        return false;
    }
    if keys[..n].iter().filter(|&&k| k == best).count() == 1 {
        return true;
    }
    let lab = canonical_labeling(&child.to_graph());
    let m = *lab
        .order
        .iter()
        .find(|&&v| keys[v] == best)
        .expect("a maximiser exists");
    lab.orbits[m] == lab.orbits[last]
}

fn children(parent: &Small) -> Vec<Small> {
    let p = parent.n as usize;
    let gens = if p <= 1 {
        Vec::new()
    } else {
        canonical_labeling(&parent.to_graph()).generators
    };
    let mut out = Vec::new();
    for s in subset_representatives(p, &gens) {
        let mut c = *parent;
        c.n += 1;
        c.rows[p] = s;
        let mut r = s;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            c.rows[v] |= 1 << p;
        }
        if accept(&c) {
            out.push(c);
        }
    }
    out
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadParams("order must be positive".into()));
    }
    if n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLargeForEnumeration(n));
    }
    Ok(())
}

fn level(n: usize) -> Vec<Small> {
    let mut cur = vec![Small {
        n: 1,
        rows: [0; MAX_ENUM_ORDER],
    }];
    for _ in 1..n {
        cur = cur.par_iter().flat_map_iter(children).collect();
    }
    cur
}

const CHUNK: usize = 512;

/// Calls `f` on every graph of order `n` (one per isomorphism class), in a
/// fixed order. Generation runs on the current rayon pool.
pub fn for_each_graph<F>(n: usize, connected_only: bool, mut f: F) -> Result<()>
where
    F: FnMut(Graph),
{
    check_order(n)?;
    if n == 1 {
        f(Graph::new(1)?);
        return Ok(());
    }
    let parents = level(n - 1);
    for chunk in parents.chunks(CHUNK) {
        let kids: Vec<Small> = chunk
            .par_iter()
            .flat_map_iter(|p| {
                children(p)
                    .into_iter()
                    .filter(|c| !connected_only || c.is_connected())
            })
            .collect();
        for c in kids {
            f(c.to_graph());
        }
    }
    Ok(())
}

/// Applies `f` to every graph of order `n` in parallel and returns the
/// `Some` results in generation order.
pub fn par_filter_map<T, F>(n: usize, connected_only: bool, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Graph) -> Option<T> + Sync + Send,
{
    check_order(n)?;
    if n == 1 {
        return Ok(f(&Graph::new(1)?).into_iter().collect());
    }
    let parents = level(n - 1);
    Ok(parents
        .par_iter()
        .flat_map_iter(|p| {
            children(p)
                .into_iter()
                .filter(|c| !connected_only || c.is_connected())
                .filter_map(|c| f(&c.to_graph()))
                .collect::<Vec<_>>()
        })
        .collect())
}

/// Parallel fold over every graph of order `n`. `reduce` must be
/// associative; partial results are combined in generation order.
pub fn par_fold<T, I, F, R>(
    n: usize,
    connected_only: bool,
    identity: I,
    fold: F,
    reduce: R,
) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Graph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_order(n)?;
    if n == 1 {
        return Ok(fold(identity(), &Graph::new(1)?));
    }
    let parents = level(n - 1);
    Ok(parents
        .par_iter()
        .fold(&identity, |acc, p| {
            children(p)
                .into_iter()
                .filter(|c| !connected_only || c.is_connected())
                .fold(acc, |a, c| fold(a, &c.to_graph()))
        })
        .reduce(&identity, &reduce))
}

/// All graphs of order `n` up to isomorphism.
pub fn enumerate(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    par_filter_map(n, connected_only, |g| Some(g.clone()))
}

/// Number of graphs of order `n`, counted without materialising them.
pub fn count(n: usize, connected_only: bool) -> Result<u64> {
    Ok(par_filter_map(n, connected_only, |_| Some(()))?.len() as u64)
}
