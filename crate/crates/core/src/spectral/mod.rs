//! Spectral radius, Perron vectors and the inequalities built on them.

mod partition;
mod poly;

pub use partition::{quotient, refine_equitable, Partition, QuotientMatrix};
pub use poly::{char_poly, max_real_root, Polynomial};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Residual tolerance used when callers do not pass one.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Tolerance for comparing two computed quantities.
pub const COMPARE_TOL: f64 = 1e-8;
pub const MAX_ITERATIONS: u64 = 1_000_000;
const CHECK_EVERY: u64 = 50;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub rho: f64,
    /// Nonnegative, maximum entry 1.
    pub perron: Vec<f64>,
    pub iterations: u64,
    pub residual: f64,
}

/// Compressed adjacency lists for the iteration kernels.
#[derive(Clone, Debug)]
pub(crate) struct Csr {
    start: Vec<usize>,
    adj: Vec<u32>,
}

impl Csr {
    pub(crate) fn new(g: &Graph) -> Self {
        let mut start = Vec::with_capacity(g.order() + 1);
        let mut adj = Vec::with_capacity(2 * g.size());
        start.push(0);
        for v in 0..g.order() {
            adj.extend(g.neighbors(v).map(|w| w as u32));
            start.push(adj.len());
        }
        Csr { start, adj }
    }

    fn row(&self, v: usize) -> &[u32] {
        &self.adj[self.start[v]..self.start[v + 1]]
    }

    fn order(&self) -> usize {
        self.start.len() - 1
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (v, yv) in y.iter_mut().enumerate() {
            *yv = self.row(v).iter().map(|&w| x[w as usize]).sum();
        }
    }
}

fn max_abs(x: &[f64]) -> f64 {
    x.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Power iteration on `A + I` restricted to the vertices in `comp`.
/// Entries outside `comp` stay zero.
fn iterate_component(
    csr: &Csr,
    comp: &[usize],
    start: Option<&[f64]>,
    tol: f64,
) -> Result<SpectrumResult> {
    let n = csr.order();
    let mut x = vec![0.0; n];
    match start {
        Some(s) if comp.iter().all(|&v| s[v] > 0.0 && s[v].is_finite()) => {
            for &v in comp {
                x[v] = s[v];
            }
        }
        _ => {
            for &v in comp {
                x[v] = 1.0;
            }
        }
    }
    if comp.len() == 1 {
        return Ok(SpectrumResult {
            rho: 0.0,
            perron: x,
            iterations: 0,
            residual: 0.0,
        });
    }
    let mut ax = vec![0.0; n];
    let mut best_residual = f64::INFINITY;
    let mut it = 0u64;
    loop {
        csr.apply(&x, &mut ax);
        if it.is_multiple_of(CHECK_EVERY) {
            let scale = max_abs(&x);
            let (mut num, mut den) = (0.0, 0.0);
            for &v in comp {
                num += x[v] * ax[v];
                den += x[v] * x[v];
            }
            let rho = num / den;
            let residual = comp
                .iter()
                .map(|&v| (ax[v] - rho * x[v]).abs())
                .fold(0.0, f64::max)
                / scale;
            best_residual = best_residual.min(residual);
            if residual <= tol {
                for v in x.iter_mut() {
                    *v /= scale;
                }
                return Ok(SpectrumResult {
                    rho,
                    perron: x,
                    iterations: it,
                    residual,
                });
            }
        }
        if it >= MAX_ITERATIONS {
            return Err(Error::NoConvergence {
                iterations: it,
                residual: best_residual,
            });
        }
        let mut m = 0.0f64;
        for &v in comp {
            let y = ax[v] + x[v];
            x[v] = y;
            m = m.max(y);
        }
        for &v in comp {
            x[v] /= m;
        }
        it += 1;
    }
}

pub(crate) fn spectral_radius_csr(
    g: &Graph,
    csr: &Csr,
    tol: f64,
    start: Option<&[f64]>,
) -> Result<SpectrumResult> {
    if !(tol > 0.0) {
        return Err(Error::BadParams(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut best: Option<SpectrumResult> = None;
    for comp in g.components() {
        let r = iterate_component(csr, &comp, start, tol)?;
        if best.as_ref().is_none_or(|b| r.rho > b.rho + COMPARE_TOL) {
            best = Some(r);
        }
    }
    Ok(best.expect("graphs have at least one vertex"))
}

/// Spectral radius and Perron vector by shifted power iteration.
///
/// For disconnected graphs the largest component radius is reported and the
/// vector is supported on the first component attaining it.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectrumResult> {
    spectral_radius_csr(g, &Csr::new(g), tol, None)
}

/// As [`spectral_radius`], starting the iteration from `start`.
pub fn spectral_radius_from(g: &Graph, tol: f64, start: &[f64]) -> Result<SpectrumResult> {
    if start.len() != g.order() {
        return Err(Error::BadParams(format!(
            "start vector has length {}, expected {}",
            start.len(),
            g.order()
        )));
    }
    spectral_radius_csr(g, &Csr::new(g), tol, Some(start))
}

/// `xᵀAx / xᵀx`.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.order() {
        return Err(Error::BadParams(format!(
            "vector has length {}, expected {}",
            x.len(),
            g.order()
        )));
    }
    let den: f64 = x.iter().map(|v| v * v).sum();
    if den == 0.0 {
        return Err(Error::ZeroVector);
    }
    let num: f64 = g.edges().map(|(u, v)| 2.0 * x[u] * x[v]).sum();
    Ok(num / den)
}

/// Number of triangles.
pub fn triangle_count(g: &Graph) -> u64 {
    let mut twice_three = 0u64;
    for (u, v) in g.edges() {
        twice_three += crate::graph::and_count(g.row(u), g.row(v)) as u64;
    }
    twice_three / 3
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeTriangleCheck {
    pub holds: bool,
    /// `m - ρ² + 3t/ρ`.
    pub slack: f64,
}

/// Checks `e(G) ≥ ρ² − 3t/ρ` up to `COMPARE_TOL`.
pub fn check_edge_triangle_bound(g: &Graph) -> Result<EdgeTriangleCheck> {
    let m = g.size();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    let rho = spectral_radius(g, DEFAULT_TOL)?.rho;
    let t = triangle_count(g) as f64;
    let slack = m as f64 - rho * rho + 3.0 * t / rho;
    Ok(EdgeTriangleCheck {
        holds: slack >= -COMPARE_TOL,
        slack,
    })
}

/// Largest edge count with matching number `β` and maximum degree `Δ`:
/// `Δβ + ⌊Δ/2⌋⌊β/⌈Δ/2⌉⌋`.
pub fn chvatal_hanson(beta: u64, delta: u64) -> u64 {
    delta * beta + (delta / 2) * (beta / delta.div_ceil(2))
}
