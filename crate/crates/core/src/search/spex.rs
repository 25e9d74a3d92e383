//! Spectral extremal search: the largest spectral radius among connected
//! graphs satisfying a predicate.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{par_fold, CONNECTED_COUNTS};
use super::predicate::Predicate;
use super::MAX_ENUM_ORDER;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, from_graph6, Graph};
use crate::spectral::{spectral_radius, spectral_radius_from, SpectrumResult, DEFAULT_TOL};

/// Radii closer than this are treated as ties.
pub const TIE_TOL: f64 = 1e-9;
/// Minimum gain for a hill-climbing move to count as an improvement.
pub const MIN_GAIN: f64 = 1e-10;
pub const DEFAULT_BUDGET: u64 = 100_000;
pub const DEFAULT_RESTARTS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchMode {
    Exhaustive,
    Hillclimb,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpexParams {
    pub n: usize,
    pub predicate: Predicate,
    pub mode: SearchMode,
    pub seed: u64,
    /// Candidate evaluations allowed per restart.
    pub budget: u64,
    pub restarts: usize,
}

impl SpexParams {
    pub fn exhaustive(n: usize, predicate: Predicate) -> Self {
        SpexParams {
            n,
            predicate,
            mode: SearchMode::Exhaustive,
            seed: 0,
            budget: DEFAULT_BUDGET,
            restarts: DEFAULT_RESTARTS,
        }
    }

    pub fn hillclimb(n: usize, predicate: Predicate, seed: u64) -> Self {
        SpexParams {
            mode: SearchMode::Hillclimb,
            seed,
            ..SpexParams::exhaustive(n, predicate)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchResult {
    pub n: usize,
    pub predicate: Predicate,
    pub mode: SearchMode,
    /// Canonical graph6 of the best graph.
    pub best: String,
    pub edges: usize,
    pub objective: f64,
    /// Spectrum of `best` in its canonical labeling.
    pub certificate: SpectrumResult,
    /// Graphs enumerated (exhaustive) or candidates evaluated (hill-climb).
    pub visited: u64,
    /// Known number of connected graphs of this order (exhaustive only).
    pub coverage: Option<u64>,
    pub budget_exhausted: bool,
}

/// Graphs within `TIE_TOL` of the best radius seen so far.
#[derive(Default)]
struct Leaders {
    rho: f64,
    graphs: Vec<(f64, Graph)>,
    seen: u64,
}

impl Leaders {
    fn retain_top(&mut self) {
        let floor = self.rho - TIE_TOL;
        self.graphs.retain(|(r, _)| *r >= floor);
    }

    fn offer(&mut self, rho: f64, g: Graph) {
        if self.graphs.is_empty() || rho > self.rho {
            self.rho = rho;
        }
        if rho >= self.rho - TIE_TOL {
            self.graphs.push((rho, g));
            self.retain_top();
        }
    }

    fn merge(mut self, other: Leaders) -> Leaders {
        self.seen += other.seen;
        if other.graphs.is_empty() {
            return self;
        }
        if self.graphs.is_empty() || other.rho > self.rho {
            self.rho = other.rho;
        }
        self.graphs.extend(other.graphs);
        self.retain_top();
        self
    }

    fn into_graphs(self) -> Vec<Graph> {
        self.graphs.into_iter().map(|(_, g)| g).collect()
    }
}

fn certify(
    n: usize,
    predicate: Predicate,
    candidates: Vec<Graph>,
) -> Result<(String, SpectrumResult)> {
    let best = candidates.iter().map(canonical_form).min().ok_or_else(|| {
        Error::ResourceExhausted(format!(
            "no connected graph of order {n} satisfies {predicate}"
        ))
    })?;
    let g = from_graph6(&best)?;
    if !predicate.holds(&g)? {
        return Err(Error::InvalidWitness(format!(
            "search result {best} violates {predicate}"
        )));
    }
    let spec = spectral_radius(&g, DEFAULT_TOL)?;
    Ok((best, spec))
}

fn exhaustive(params: &SpexParams) -> Result<SearchResult> {
    let (n, pred) = (params.n, params.predicate);
    if n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLargeForEnumeration(n));
    }
    let folded = par_fold(
        n,
        true,
        || Ok(Leaders::default()),
        |acc: Result<Leaders>, g| {
            let mut acc = acc?;
            acc.seen += 1;
            if pred.holds(g)? {
                let rho = spectral_radius(g, DEFAULT_TOL)?.rho;
                acc.offer(rho, g.clone());
            }
            Ok(acc)
        },
        |a, b| Ok(a?.merge(b?)),
    )?;
    let leaders = folded?;
    let visited = leaders.seen;
    let (best, certificate) = certify(n, pred, leaders.into_graphs())?;
    Ok(SearchResult {
        n,
        predicate: pred,
        mode: SearchMode::Exhaustive,
        edges: from_graph6(&best)?.size(),
        objective: certificate.rho,
        best,
        certificate,
        visited,
        coverage: Some(CONNECTED_COUNTS[n]),
        budget_exhausted: false,
    })
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Add(usize, usize),
    /// Replace edge `vw` by `uw`.
    Swap {
        u: usize,
        v: usize,
        w: usize,
    },
    /// Move every edge `vw` with `w ∉ N[u]` to `uw`.
    Rotate {
        u: usize,
        v: usize,
    },
}

fn apply(g: &Graph, mv: Move) -> Option<Graph> {
    let mut h = g.clone();
    match mv {
        Move::Add(u, v) => h.set_edge(u, v, true),
        Move::Swap { u, v, w } => {
            h.set_edge(v, w, false);
            h.set_edge(u, w, true);
        }
        Move::Rotate { u, v } => {
            let moved: Vec<usize> = g
                .neighbors(v)
                .filter(|&w| w != u && !g.has_edge(u, w))
                .collect();
            if moved.is_empty() {
                return None;
            }
            for w in moved {
                h.set_edge(v, w, false);
                h.set_edge(u, w, true);
            }
        }
    }
    Some(h)
}

/// Single-edge additions, then swaps and rotations toward higher Perron
/// weight, each group in random order.
fn candidate_moves(g: &Graph, x: &[f64], rng: &mut ChaCha8Rng) -> Vec<Move> {
    let n = g.order();
    let mut rotations = Vec::new();
    let mut adds = Vec::new();
    let mut swaps = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            if u < v && !g.has_edge(u, v) {
                adds.push(Move::Add(u, v));
            }
            if x[u] < x[v] {
                continue;
            }
            rotations.push(Move::Rotate { u, v });
            for w in g.neighbors(v) {
                if w != u && !g.has_edge(u, w) {
                    swaps.push(Move::Swap { u, v, w });
                }
            }
        }
    }
    rotations.shuffle(rng);
    adds.shuffle(rng);
    swaps.shuffle(rng);
    adds.into_iter().chain(swaps).chain(rotations).collect()
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = Graph::new(n).expect("order validated");
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.set_edge(perm[i], perm[j], true);
    }
    g
}

struct Climb {
    graph: Graph,
    rho: f64,
    evaluations: u64,
    exhausted: bool,
}

fn climb(n: usize, pred: Predicate, budget: u64, rng: &mut ChaCha8Rng) -> Result<Climb> {
    let mut g = random_tree(n, rng);
    let mut spec = spectral_radius(&g, DEFAULT_TOL)?;
    let mut evaluations = 0u64;
    let mut exhausted = false;
    'outer: loop {
        let mut improved = false;
        for mv in candidate_moves(&g, &spec.perron, rng) {
            if evaluations >= budget {
                exhausted = true;
                break 'outer;
            }
            let Some(h) = apply(&g, mv) else { continue };
            evaluations += 1;
            if !h.is_connected() {
                continue;
            }
            let r = spectral_radius_from(&h, DEFAULT_TOL, &spec.perron)?;
            if r.rho <= spec.rho + MIN_GAIN || !pred.holds(&h)? {
                continue;
            }
            g = h;
            spec = r;
            improved = true;
            break;
        }
        if !improved {
            break;
        }
    }
    Ok(Climb {
        graph: g,
        rho: spec.rho,
        evaluations,
        exhausted,
    })
}

fn hillclimb(params: &SpexParams) -> Result<SearchResult> {
    let (n, pred) = (params.n, params.predicate);
    if n == 0 || params.restarts == 0 || params.budget == 0 {
        return Err(Error::BadParams(
            "order, restarts and budget must be positive".into(),
        ));
    }
    let climbs: Vec<Climb> = (0..params.restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            rng.set_stream(r as u64);
            climb(n, pred, params.budget, &mut rng)
        })
        .collect::<Result<_>>()?;
    let mut leaders = Leaders::default();
    for c in &climbs {
        leaders.offer(c.rho, c.graph.clone());
    }
    let (best, certificate) = certify(n, pred, leaders.into_graphs())?;
    Ok(SearchResult {
        n,
        predicate: pred,
        mode: SearchMode::Hillclimb,
        edges: from_graph6(&best)?.size(),
        objective: certificate.rho,
        best,
        certificate,
        visited: climbs.iter().map(|c| c.evaluations).sum(),
        coverage: None,
        budget_exhausted: climbs.iter().any(|c| c.exhausted),
    })
}

/// Runs the search described by `params`.
pub fn spex(params: &SpexParams) -> Result<SearchResult> {
    match params.mode {
        SearchMode::Exhaustive => exhaustive(params),
        SearchMode::Hillclimb => hillclimb(params),
    }
}
