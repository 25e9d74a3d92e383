//! Builders for the named extremal families, each with its natural vertex
//! partition.
//!
//! Labelings are fixed per family so graph6 fixtures stay stable:
//!
//! | family | labeling |
//! |---|---|
//! | `star-plus` | center 0, leaves `1..n`, extra edge `1-2` |
//! | `s-nk` | clique `0..k`, independent set `k..n` |
//! | `k4-star`, `c4-star`, `k33-star` | the small graph first with the shared vertex at 0, leaves after |
//! | `y-graph` | path `0..n-4`, pendants `n-4, n-3` on 0 and `n-2, n-1` on `n-5` |
//! | `bipartite-embed` | host side first with the embedded graph on its first vertices |
//! | `subdivided-kab` | parts `0..a`, `a..a+b`; edge `0-a` subdivided by vertex `a+b` |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, coalesce, Graph, VertexSet};
use crate::spectral::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    StarPlus,
    SNk,
    Complete,
    CompleteBipartite,
    Fan,
    K4Star,
    C4Star,
    K33Star,
    YGraph,
    BipartiteEmbed,
    SubdividedKab,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::StarPlus,
        Family::SNk,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Fan,
        Family::K4Star,
        Family::C4Star,
        Family::K33Star,
        Family::YGraph,
        Family::BipartiteEmbed,
        Family::SubdividedKab,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::StarPlus => "star-plus",
            Family::SNk => "s-nk",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Fan => "fan",
            Family::K4Star => "k4-star",
            Family::C4Star => "c4-star",
            Family::K33Star => "k33-star",
            Family::YGraph => "y-graph",
            Family::BipartiteEmbed => "bipartite-embed",
            Family::SubdividedKab => "subdivided-kab",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::UnknownName(format!("family '{s}'")))
    }
}

/// Family plus parameters. Unused parameters are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    /// Graph placed inside one side of the bipartite host.
    pub embed: Option<Graph>,
    /// Embed into the `⌈n/2⌉` side instead of the `⌊n/2⌋` side.
    pub embed_in_larger: bool,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec {
            family,
            n: None,
            k: None,
            a: None,
            b: None,
            embed: None,
            embed_in_larger: false,
        }
    }

    pub fn with_n(family: Family, n: usize) -> Self {
        FamilySpec {
            n: Some(n),
            ..FamilySpec::new(family)
        }
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn ab(mut self, a: usize, b: usize) -> Self {
        self.a = Some(a);
        self.b = Some(b);
        self
    }

    pub fn embed(mut self, h: Graph) -> Self {
        self.embed = Some(h);
        self
    }

    pub fn star_plus(n: usize) -> Self {
        FamilySpec::with_n(Family::StarPlus, n)
    }

    pub fn k4_star(n: usize) -> Self {
        FamilySpec::with_n(Family::K4Star, n)
    }

    pub fn c4_star(n: usize) -> Self {
        FamilySpec::with_n(Family::C4Star, n)
    }

    pub fn k33_star(n: usize) -> Self {
        FamilySpec::with_n(Family::K33Star, n)
    }

    /// `K_{⌈n/2⌉,⌊n/2⌋}` with `h` inside the `⌊n/2⌋` side.
    pub fn bipartite_embed(n: usize, h: Graph) -> Self {
        FamilySpec::with_n(Family::BipartiteEmbed, n).embed(h)
    }

    fn need(&self, name: &str, v: Option<usize>) -> Result<usize> {
        v.ok_or_else(|| Error::BadParams(format!("{} requires parameter {name}", self.family)))
    }
}

/// A constructed graph with its natural (orbit-like) partition.
#[derive(Clone, Debug)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub partition: Partition,
    pub family: FamilySpec,
}

fn bad(msg: String) -> Error {
    Error::BadParams(msg)
}

fn cells(groups: Vec<Vec<usize>>) -> Partition {
    Partition::new(
        groups
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(VertexSet::new)
            .collect(),
    )
    .expect("family partitions cover every vertex once")
}

/// Builds the family member described by `spec`.
pub fn build(spec: &FamilySpec) -> Result<BuiltGraph> {
    let (graph, groups) = match spec.family {
        Family::StarPlus => {
            let n = spec.need("n", spec.n)?;
            if n < 3 {
                return Err(bad(format!("star-plus needs n >= 3, got {n}")));
            }
            let mut g = Graph::star(n)?;
            g.add_edge(1, 2)?;
            (g, vec![vec![0], vec![1, 2], (3..n).collect()])
        }
        Family::SNk => {
            let n = spec.need("n", spec.n)?;
            let k = spec.need("k", spec.k)?;
            if k == 0 || k >= n {
                return Err(bad(format!("s-nk needs 1 <= k < n, got n={n}, k={k}")));
            }
            let mut g = Graph::new(n)?;
            for u in 0..k {
                for v in u + 1..n {
                    g.set_edge(u, v, true);
                }
            }
            (g, vec![(0..k).collect(), (k..n).collect()])
        }
        Family::Complete => {
            let n = spec.need("n", spec.n)?;
            (Graph::complete(n)?, vec![(0..n).collect()])
        }
        Family::CompleteBipartite => {
            let a = spec.need("a", spec.a)?;
            let b = spec.need("b", spec.b)?;
            if a == 0 || b == 0 {
                return Err(bad(format!(
                    "complete-bipartite needs a, b >= 1, got a={a}, b={b}"
                )));
            }
            (
                complete_bipartite(a, b)?,
                vec![(0..a).collect(), (a..a + b).collect()],
            )
        }
        Family::Fan => {
            let k = spec.need("k", spec.k)?;
            if k == 0 {
                return Err(bad("fan needs k >= 1".into()));
            }
            let n = 2 * k + 1;
            if spec.n.is_some_and(|m| m != n) {
                return Err(bad(format!("fan with k={k} has order {n}")));
            }
            let mut g = Graph::star(n)?;
            for i in 0..k {
                g.add_edge(2 * i + 1, 2 * i + 2)?;
            }
            (g, vec![vec![0], (1..n).collect()])
        }
        Family::K4Star => {
            let n = spec.need("n", spec.n)?;
            if n < 4 {
                return Err(bad(format!("k4-star needs n >= 4, got {n}")));
            }
            let g = coalesce(&Graph::complete(4)?, 0, &Graph::star(n - 3)?, 0)?;
            (g, vec![vec![0], vec![1, 2, 3], (4..n).collect()])
        }
        Family::C4Star => {
            let n = spec.need("n", spec.n)?;
            if n < 4 {
                return Err(bad(format!("c4-star needs n >= 4, got {n}")));
            }
            let g = coalesce(&Graph::cycle(4)?, 0, &Graph::star(n - 3)?, 0)?;
            (g, vec![vec![0], vec![1, 3], vec![2], (4..n).collect()])
        }
        Family::K33Star => {
            let n = spec.need("n", spec.n)?;
            if n < 6 {
                return Err(bad(format!("k33-star needs n >= 6, got {n}")));
            }
            let g = coalesce(&complete_bipartite(3, 3)?, 0, &Graph::star(n - 5)?, 0)?;
            // leaves, center, rest of the center's side, opposite side
            (
                g,
                vec![(6..n).collect(), vec![0], vec![1, 2], vec![3, 4, 5]],
            )
        }
        Family::YGraph => {
            let n = spec.need("n", spec.n)?;
            if n < 6 {
                return Err(bad(format!("y-graph needs n >= 6, got {n}")));
            }
            let len = n - 4;
            let mut g = Graph::path(len)?.with_order(n)?;
            g.add_edge(0, n - 4)?;
            g.add_edge(0, n - 3)?;
            g.add_edge(len - 1, n - 2)?;
            g.add_edge(len - 1, n - 1)?;
            let mut groups: Vec<Vec<usize>> =
                (0..len.div_ceil(2)).map(|i| vec![i, len - 1 - i]).collect();
            groups.push((len..n).collect());
            (g, groups)
        }
        Family::BipartiteEmbed => bipartite_embed(spec)?,
        Family::SubdividedKab => {
            let (a, b) = match (spec.a, spec.b, spec.n) {
                (Some(a), Some(b), _) => (a, b),
                (None, None, Some(n)) if n >= 3 => ((n - 1) / 2, n / 2),
                _ => return Err(bad("subdivided-kab needs a and b, or n".into())),
            };
            if a == 0 || b == 0 {
                return Err(bad(format!(
                    "subdivided-kab needs a, b >= 1, got a={a}, b={b}"
                )));
            }
            let g = crate::graph::subdivide_edge(&complete_bipartite(a, b)?, 0, a)?;
            (
                g,
                vec![
                    vec![0],
                    (1..a).collect(),
                    vec![a],
                    (a + 1..a + b).collect(),
                    vec![a + b],
                ],
            )
        }
    };
    Ok(BuiltGraph {
        partition: cells(groups),
        graph,
        family: spec.clone(),
    })
}

fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.set_edge(u, v, true);
        }
    }
    Ok(g)
}

fn star_center(h: &Graph) -> Option<usize> {
    let m = h.size();
    if m == 0 {
        return None;
    }
    (0..h.order()).find(|&c| h.degree(c) == m)
}

fn bipartite_embed(spec: &FamilySpec) -> Result<(Graph, Vec<Vec<usize>>)> {
    let n = spec.need("n", spec.n)?;
    if n < 2 {
        return Err(bad(format!("bipartite-embed needs n >= 2, got {n}")));
    }
    let h = match (&spec.embed, spec.k) {
        (Some(h), _) => h.clone(),
        (None, Some(k)) if k >= 1 => k_star(k)?,
        _ => return Err(bad("bipartite-embed needs an embedded graph or k".into())),
    };
    let side = if spec.embed_in_larger {
        n.div_ceil(2)
    } else {
        n / 2
    };
    if h.order() > side {
        return Err(Error::EmbedTooLarge {
            embed: h.order(),
            side,
        });
    }
    let mut g = complete_bipartite(side, n - side)?;
    for (u, v) in h.edges() {
        g.set_edge(u, v, true);
    }
    let other: Vec<usize> = (side..n).collect();
    let rest: Vec<usize> = (h.order()..side).collect();
    let is_triangle = h.size() == 3 && (0..h.order()).filter(|&v| h.degree(v) == 2).count() == 3;
    let mut groups = vec![other];
    if is_triangle {
        let tri: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) == 2).collect();
        groups.push(tri.clone());
        groups.push(
            (0..h.order())
                .filter(|v| !tri.contains(v))
                .chain(rest)
                .collect(),
        );
    } else if let Some(c) = star_center(&h) {
        let leaves: Vec<usize> = h.neighbors(c).collect();
        groups.push(vec![c]);
        groups.push(leaves.clone());
        groups.push(
            (0..h.order())
                .filter(|v| *v != c && !leaves.contains(v))
                .chain(rest)
                .collect(),
        );
    } else {
        for v in 0..h.order() {
            groups.push(vec![v]);
        }
        groups.push(rest);
    }
    Ok((g, groups))
}

/// `K_{1,k-1}` on `k` vertices (a single vertex when `k = 1`).
pub fn k_star(k: usize) -> Result<Graph> {
    Graph::star(k)
}

/// Extremal graph for `k` edge-disjoint triangles: `K_{⌈n/2⌉,⌊n/2⌋}` with a
/// triangle (`k = 4`) or `K_{1,k-1}` (otherwise) in the `⌊n/2⌋` side.
pub fn gamma_k_extremal(n: usize, k: usize) -> Result<BuiltGraph> {
    let h = if k == 4 {
        Graph::complete(3)?
    } else {
        k_star(k)?
    };
    build(&FamilySpec::bipartite_embed(n, h))
}

/// Catalog entry describing one family.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub family: Family,
    pub params: &'static str,
    pub constraint: &'static str,
    pub definition: &'static str,
    pub citation: &'static str,
}

pub fn family_catalog() -> Vec<CatalogEntry> {
    Family::ALL
        .into_iter()
        .map(|family| {
            let (params, constraint, definition, citation) = match family {
                Family::StarPlus => (
                    "n",
                    "n >= 3",
                    "star K_{1,n-1} plus one edge inside its leaf set",
                    "unique spectral extremal graph without two cycles of equal length",
                ),
                Family::SNk => (
                    "n, k",
                    "1 <= k < n",
                    "K_k joined to n-k isolated vertices",
                    "S_{n,k}; k = 1 gives the star with spectral radius sqrt(n-1)",
                ),
                Family::Complete => ("n", "n >= 1", "complete graph K_n", "K_n"),
                Family::CompleteBipartite => (
                    "a, b",
                    "a, b >= 1",
                    "complete bipartite graph K_{a,b}",
                    "K_{a,b}",
                ),
                Family::Fan => (
                    "k",
                    "k >= 1 (order 2k+1)",
                    "k triangles sharing one vertex",
                    "k-fan F_k",
                ),
                Family::K4Star => (
                    "n",
                    "n >= 4",
                    "K_4 coalesced with the center of K_{1,n-4}",
                    "spectral extremal graph without two edge-disjoint cycles",
                ),
                Family::C4Star => (
                    "n",
                    "n >= 4",
                    "C_4 coalesced with the center of K_{1,n-4}",
                    "comparison graph for the repeated-cycle-length extremal problem",
                ),
                Family::K33Star => (
                    "n",
                    "n >= 6",
                    "K_{3,3} coalesced with the center of K_{1,n-6}",
                    "Erdos-Posa: meets m = n + 3 without two edge-disjoint cycles",
                ),
                Family::YGraph => (
                    "n",
                    "n >= 6",
                    "path on n-4 vertices with two pendant vertices at each end",
                    "Hoffman-Smith exceptional graph Y_n",
                ),
                Family::BipartiteEmbed => (
                    "n, embed (or k for K_{1,k-1})",
                    "|embed| <= floor(n/2)",
                    "K_{ceil(n/2),floor(n/2)} with a graph embedded inside one side",
                    "Gyori: extremal graphs for k edge-disjoint triangles",
                ),
                Family::SubdividedKab => (
                    "a, b (or n)",
                    "a, b >= 1",
                    "K_{a,b} with one edge subdivided",
                    "S(K_{floor((n-1)/2),ceil((n-1)/2)})",
                ),
            };
            CatalogEntry {
                family,
                params,
                constraint,
                definition,
                citation,
            }
        })
        .collect()
}

/// Canonical graph6 of a family member, for "is isomorphic to" checks.
pub fn canonical(spec: &FamilySpec) -> Result<String> {
    Ok(canonical_form(&build(spec)?.graph))
}
