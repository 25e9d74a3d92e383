use std::fmt;

use serde::{Serialize, Serializer};

use crate::detectors::{
    has_k_edge_disjoint_cycles, has_repeated_cycle_length, has_triangle_packing, max_fan,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named graph properties the searches optimise over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    NoRepeatedCycleLength,
    NoTwoEdgeDisjointCycles,
    /// No `k` edge-disjoint triangles.
    GammaKFree(usize),
    /// No `k` triangles sharing a vertex.
    FanKFree(usize),
}

impl Predicate {
    /// Parses `no-repeated-cycle-length`, `no-2-edge-disjoint-cycles`,
    /// `gamma-k-free`/`fan-k-free` (with `k` given separately) or the
    /// explicit forms `gamma-3-free`, `fan-2-free`.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        let norm = name.to_ascii_lowercase().replace('_', "-");
        let with_k = |make: fn(usize) -> Predicate, inner: &str| -> Result<Predicate> {
            let k = if inner == "k" {
                k.ok_or_else(|| Error::BadParams(format!("predicate {name} needs --k")))?
            } else {
                inner
                    .parse()
                    .map_err(|_| Error::UnknownName(format!("predicate '{name}'")))?
            };
            if k == 0 {
                return Err(Error::BadParams("k must be at least 1".into()));
            }
            Ok(make(k))
        };
        match norm.as_str() {
            "no-repeated-cycle-length" => Ok(Predicate::NoRepeatedCycleLength),
            "no-2-edge-disjoint-cycles" => Ok(Predicate::NoTwoEdgeDisjointCycles),
            s => {
                if let Some(inner) = s
                    .strip_prefix("gamma-")
                    .and_then(|r| r.strip_suffix("-free"))
                {
                    with_k(Predicate::GammaKFree, inner)
                } else if let Some(inner) =
                    s.strip_prefix("fan-").and_then(|r| r.strip_suffix("-free"))
                {
                    with_k(Predicate::FanKFree, inner)
                } else {
                    Err(Error::UnknownName(format!("predicate '{name}'")))
                }
            }
        }
    }

    pub fn holds(&self, g: &Graph) -> Result<bool> {
        Ok(match *self {
            Predicate::NoRepeatedCycleLength => !has_repeated_cycle_length(g)?.found(),
            Predicate::NoTwoEdgeDisjointCycles => {
                g.cyclomatic_number() < 2 || !has_k_edge_disjoint_cycles(g, 2)?.found()
            }
            Predicate::GammaKFree(k) => !has_triangle_packing(g, k)?.found(),
            Predicate::FanKFree(k) => max_fan(g).k < k,
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::NoRepeatedCycleLength => f.write_str("no-repeated-cycle-length"),
            Predicate::NoTwoEdgeDisjointCycles => f.write_str("no-2-edge-disjoint-cycles"),
            Predicate::GammaKFree(k) => write!(f, "gamma-{k}-free"),
            Predicate::FanKFree(k) => write!(f, "fan-{k}-free"),
        }
    }
}

impl Serialize for Predicate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
