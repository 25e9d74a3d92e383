use super::Graph;
use crate::error::{Error, Result};

/// One-point union of `g` and `h` identifying `u ∈ g` with `w ∈ h`.
///
/// Vertices of `g` keep their labels; the remaining vertices of `h` follow
/// in their original order.
pub fn coalesce(g: &Graph, u: usize, h: &Graph, w: usize) -> Result<Graph> {
    if u >= g.order() {
        return Err(Error::IndexOutOfRange {
            vertex: u,
            order: g.order(),
        });
    }
    if w >= h.order() {
        return Err(Error::IndexOutOfRange {
            vertex: w,
            order: h.order(),
        });
    }
    let n = g.order() + h.order() - 1;
    let mut out = g.with_order(n)?;
    let map = |x: usize| -> usize {
        match x.cmp(&w) {
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Less => g.order() + x,
            std::cmp::Ordering::Greater => g.order() + x - 1,
        }
    };
    for (a, b) in h.edges() {
        out.set_edge(map(a), map(b), true);
    }
    Ok(out)
}

/// Replaces edge `uv` by the path `u - x - v` through a new vertex `x = n`.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let x = g.order();
    let mut out = g.with_order(x + 1)?;
    out.set_edge(u, v, false);
    out.set_edge(u, x, true);
    out.set_edge(x, v, true);
    Ok(out)
}

/// `E(G') = (E(G) \ remove) ∪ add`.
pub fn rewire(g: &Graph, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Graph> {
    let n = g.order();
    let range = |v: usize| {
        if v < n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                vertex: v,
                order: n,
            })
        }
    };
    let mut out = g.clone();
    for &(a, b) in remove {
        range(a)?;
        range(b)?;
        if !g.has_edge(a, b) {
            return Err(Error::EdgeNotPresent(a, b));
        }
        out.set_edge(a, b, false);
    }
    for &(a, b) in add {
        range(a)?;
        range(b)?;
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        if out.has_edge(a, b) {
            return Err(Error::EdgeAlreadyPresent(a, b));
        }
        out.set_edge(a, b, true);
    }
    Ok(out)
}
